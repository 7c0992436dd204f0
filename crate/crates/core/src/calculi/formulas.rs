//! Scalar formulas. Boundary arguments (0 or 1) are answered before any
//! formula runs, so the boundary axioms hold bit for bit.

use super::Kind;

pub(super) fn tnorm(kind: Kind, a: f64, b: f64) -> f64 {
    if a == 1.0 {
        return b;
    }
    if b == 1.0 {
        return a;
    }
    if a == 0.0 || b == 0.0 {
        return 0.0;
    }
    let v = match kind {
        Kind::Drastic => 0.0,
        Kind::Bounded => (a + b - 1.0).max(0.0),
        Kind::Einstein => (a * b) / (2.0 - (a + b - a * b)),
        Kind::Algebraic => a * b,
        Kind::HamacherZero => (a * b) / (a + b - a * b),
        Kind::MinMax => a.min(b),
        Kind::Yager { q } => 1.0 - lp_norm(1.0 - a, 1.0 - b, q).min(1.0),
        Kind::Dubois { alpha } => (a * b) / a.max(b).max(alpha),
        Kind::Hamacher { gamma } => (a * b) / (gamma + (1.0 - gamma) * (a + b - a * b)),
        Kind::Schweizer { p } => schweizer(a, b, p),
        Kind::Frank { theta } => frank(a, b, theta),
        Kind::Sugeno { lambda } => ((lambda + 1.0) * (a + b - 1.0) - lambda * (a * b)).max(0.0),
    };
    v.clamp(0.0, 1.0)
}

pub(super) fn tconorm(kind: Kind, a: f64, b: f64) -> f64 {
    if a == 0.0 {
        return b;
    }
    if b == 0.0 {
        return a;
    }
    if a == 1.0 || b == 1.0 {
        return 1.0;
    }
    let v = match kind {
        Kind::Drastic => 1.0,
        Kind::Bounded => (a + b).min(1.0),
        Kind::Einstein => (a + b) / (1.0 + a * b),
        Kind::Algebraic => a + b - a * b,
        Kind::HamacherZero => (a + b - 2.0 * a * b) / (1.0 - a * b),
        Kind::MinMax => a.max(b),
        Kind::Yager { q } => lp_norm(a, b, q).min(1.0),
        Kind::Dubois { alpha } => {
            (a + b - a * b - a.min(b).min(1.0 - alpha)) / (1.0 - a).max(1.0 - b).max(alpha)
        }
        Kind::Hamacher { gamma } => {
            (a + b + (gamma - 2.0) * (a * b)) / (1.0 + (gamma - 1.0) * (a * b))
        }
        Kind::Schweizer { p } => 1.0 - schweizer(1.0 - a, 1.0 - b, p),
        Kind::Frank { theta } => 1.0 - frank(1.0 - a, 1.0 - b, theta),
        // Dual of the Sugeno T-norm under 1 - x.
        Kind::Sugeno { lambda } => (a + b + lambda * (a * b)).min(1.0),
    };
    v.clamp(0.0, 1.0)
}

/// `(x^q + y^q)^(1/q)` for `x, y >= 0`, scaled by the larger argument so that
/// neither large nor small `q` over- or underflows.
fn lp_norm(x: f64, y: f64, q: f64) -> f64 {
    let m = x.max(y);
    if m == 0.0 {
        return 0.0;
    }
    let r = x.min(y) / m;
    m * (1.0 + r.powf(q)).powf(1.0 / q)
}

/// `max(0, a^-p + b^-p - 1)^(-1/p)`, evaluated through logarithms.
fn schweizer(a: f64, b: f64, p: f64) -> f64 {
    if a <= 0.0 || b <= 0.0 {
        return 0.0;
    }
    if a >= 1.0 {
        return b;
    }
    if b >= 1.0 {
        return a;
    }
    if p == f64::NEG_INFINITY {
        return 0.0;
    }
    if p == f64::INFINITY {
        return a.min(b);
    }
    // a^-p = e^u, b^-p = e^v
    let u = -p * a.ln();
    let v = -p * b.ln();
    if p > 0.0 {
        let m = u.max(v);
        let ln_base = if m < 30.0 {
            (u.exp_m1() + v.exp_m1()).ln_1p()
        } else {
            m + ((u - m).exp() + (v - m).exp() - (-m).exp()).ln()
        };
        (-ln_base / p).exp()
    } else {
        let s = u.exp_m1() + v.exp_m1();
        if s <= -1.0 {
            return 0.0;
        }
        (s.ln_1p() / -p).exp()
    }
}

/// `log_θ(1 + (θ^a - 1)(θ^b - 1) / (θ - 1))`.
///
/// Far from θ = 1 the argument of the logarithm is rewritten as
/// `(θ^(a+b) - θ^a - θ^b + θ) / (θ - 1)` and evaluated with the dominant
/// power factored out, so the θ → 0 and θ → ∞ limits stay finite.
fn frank(a: f64, b: f64, theta: f64) -> f64 {
    let l = theta.ln();
    if l.abs() < 5.0 {
        let ratio = (a * l).exp_m1() * (b * l).exp_m1() / l.exp_m1();
        return ratio.ln_1p() / l;
    }
    let e = |x: f64| (l * x).exp();
    let (ln_num, ln_den) = if l > 0.0 {
        let k = (a + b).max(1.0);
        // Grouped so that swapping a and b gives the same rounding.
        let s = (e(a + b - k) + e(1.0 - k)) - (e(a - k) + e(b - k));
        if !(s > 0.0) {
            return 0.0;
        }
        (l * k + s.ln(), l + (-(-l).exp()).ln_1p())
    } else {
        let k = a.min(b);
        let s = (e(a - k) + e(b - k)) - (e(a + b - k) + e(1.0 - k));
        if !(s > 0.0) {
            return 0.0;
        }
        (l * k + s.ln(), (-theta).ln_1p())
    };
    (ln_num - ln_den) / l
}
