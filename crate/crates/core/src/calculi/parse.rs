//! Selector strings: `T2`, `t1.5`, `Tsc(p=-0.5)`, `Yager(2)`, `S-Hamacher(gamma=3)`.

use std::str::FromStr;

use super::{Kind, Negation, TConorm, TNorm};
use crate::error::{Error, Result};

fn ladder(rung: &str) -> Option<Kind> {
    Some(match rung {
        "0" => Kind::Drastic,
        "1" => Kind::Bounded,
        "1.5" | "1_5" => Kind::Einstein,
        "2" => Kind::Algebraic,
        "2.5" | "2_5" => Kind::HamacherZero,
        "3" => Kind::MinMax,
        _ => return None,
    })
}

/// Splits `name(arg)` into `("name", Some("arg"))`.
fn split_call(s: &str) -> Result<(&str, Option<&str>)> {
    match s.find('(') {
        None => Ok((s, None)),
        Some(open) => {
            let inner = s[open + 1..]
                .strip_suffix(')')
                .ok_or_else(|| Error::parse(s, "missing closing parenthesis"))?;
            Ok((s[..open].trim(), Some(inner.trim())))
        }
    }
}

fn parse_number(text: &str, input: &str) -> Result<f64> {
    match text.to_ascii_lowercase().as_str() {
        "inf" | "+inf" | "infinity" => Ok(f64::INFINITY),
        "-inf" | "-infinity" => Ok(f64::NEG_INFINITY),
        t => t
            .parse::<f64>()
            .map_err(|_| Error::parse(input, format!("`{text}` is not a number"))),
    }
}

/// Reads the single parameter of a family, accepting `x`, `name=x` for any
/// of the accepted names.
fn parameter(arg: Option<&str>, names: &[&str], input: &str) -> Result<f64> {
    let arg =
        arg.ok_or_else(|| Error::parse(input, format!("missing parameter `{}`", names[0])))?;
    let value = match arg.split_once('=') {
        Some((key, value)) => {
            let key = key.trim().to_ascii_lowercase();
            if !names.contains(&key.as_str()) {
                return Err(Error::parse(
                    input,
                    format!("unknown parameter `{key}`, expected `{}`", names[0]),
                ));
            }
            value.trim()
        }
        None => arg,
    };
    parse_number(value, input)
}

fn family(name: &str, arg: Option<&str>, input: &str) -> Result<Kind> {
    let p = |names: &[&str]| parameter(arg, names, input);
    Ok(match name {
        "yager" | "y" => Kind::Yager { q: p(&["q"])? },
        "dubois" | "d" => Kind::Dubois {
            alpha: p(&["alpha", "a"])?,
        },
        "hamacher" | "h" => Kind::Hamacher {
            gamma: p(&["gamma", "g"])?,
        },
        "sc" | "schweizer" => Kind::Schweizer { p: p(&["p"])? },
        "frank" | "f" => Kind::Frank {
            theta: p(&["theta", "s"])?,
        },
        "sugeno" | "su" => Kind::Sugeno {
            lambda: p(&["lambda", "l"])?,
        },
        _ => return Err(Error::parse(input, format!("unknown operator `{name}`"))),
    })
}

/// Parses either a T- or an S-selector. `letter` is `t` or `s`.
fn parse_kind(input: &str, letter: char) -> Result<Kind> {
    let s = input.trim();
    if s.is_empty() {
        return Err(Error::parse(input, "empty selector"));
    }
    let (head, arg) = split_call(s)?;
    let head = head.to_ascii_lowercase();
    if arg.is_none() {
        if let Some(kind) = head.strip_prefix(letter).and_then(ladder) {
            return Ok(kind);
        }
    }
    // `Tsc`, `T-Yager`, `S-Hamacher` and bare family names are all accepted.
    let name = head
        .strip_prefix(letter)
        .map(|rest| rest.trim_start_matches(['-', '_']))
        .filter(|rest| !rest.is_empty() && family(rest, Some("1"), input).is_ok())
        .unwrap_or(&head);
    family(name, arg, input)
}

impl FromStr for TNorm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TNorm::new(parse_kind(s, 't')?)
    }
}

impl FromStr for TConorm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TConorm::new(parse_kind(s, 's')?)
    }
}

impl FromStr for Negation {
    type Err = Error;

    /// `N` / `standard`, `Sugeno(lambda=..)` or `Yager(w=..)`.
    fn from_str(input: &str) -> Result<Self> {
        let (head, arg) = split_call(input.trim())?;
        match head.to_ascii_lowercase().as_str() {
            "n" | "standard" | "1-x" if arg.is_none() => Ok(Negation::Standard),
            "sugeno" => Negation::sugeno(parameter(arg, &["lambda", "l"], input)?),
            "yager" => Negation::yager(parameter(arg, &["w"], input)?),
            _ => Err(Error::parse(input, "unknown negation")),
        }
    }
}
