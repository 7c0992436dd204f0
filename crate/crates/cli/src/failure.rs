use std::fmt;
use std::process::ExitCode;

/// Process exit status classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Usage = 2,
    Validation = 3,
    Io = 4,
    AxiomViolation = 5,
}

#[derive(Debug)]
pub struct Failure {
    pub status: Status,
    pub error: anyhow::Error,
}

pub type CmdResult<T = ()> = Result<T, Failure>;

impl Failure {
    pub fn usage(msg: impl fmt::Display) -> Self {
        Failure {
            status: Status::Usage,
            error: anyhow::anyhow!("{msg}"),
        }
    }

    pub fn validation(msg: impl fmt::Display) -> Self {
        Failure {
            status: Status::Validation,
            error: anyhow::anyhow!("{msg}"),
        }
    }

    pub fn axioms(msg: impl fmt::Display) -> Self {
        Failure {
            status: Status::AxiomViolation,
            error: anyhow::anyhow!("{msg}"),
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(self.status as u8)
    }
}

impl From<granulab::Error> for Failure {
    fn from(e: granulab::Error) -> Self {
        let status = match e {
            granulab::Error::Io(_) => Status::Io,
            _ => Status::Validation,
        };
        Failure {
            status,
            error: e.into(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            status: Status::Io,
            error: e.into(),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure {
            status: Status::Validation,
            error: e.into(),
        }
    }
}

/// Attach context to a failure without changing its status.
pub trait Context<T> {
    fn context(self, what: impl fmt::Display) -> CmdResult<T>;
}

impl<T, E: Into<Failure>> Context<T> for Result<T, E> {
    fn context(self, what: impl fmt::Display) -> CmdResult<T> {
        self.map_err(|e| {
            let f = e.into();
            Failure {
                status: f.status,
                error: f.error.context(what.to_string()),
            }
        })
    }
}
