use super::coords::QuotientCoord;
use crate::error::{Error, Result};
use crate::geometry::{canonicalize_53, extract_53_chart};
use crate::reps::RepPoint;

/// The 5⊕3 chart
/// `(s, r, st, sru₁, s³rt(1−t)u₁u₂, j·s⁷r³t²(1−t)²u₁²(1−u₁)u₂(1−u₂))`.
pub fn chart_53(s: f64, r: f64, t: f64, u1: f64, u2: f64, j: i8) -> Result<QuotientCoord> {
    for (name, value) in [("s", s), ("r", r)] {
        if !(value >= 0.0) || !value.is_finite() {
            return Err(Error::OutOfRange { name, value });
        }
    }
    for (name, value) in [("t", t), ("u1", u1), ("u2", u2)] {
        if !(0.0..=1.0).contains(&value) {
            return Err(Error::OutOfRange { name, value });
        }
    }
    if j != 1 && j != -1 {
        return Err(Error::OutOfRange { name: "j", value: j as f64 });
    }
    let tt = t * (1.0 - t);
    let y = [
        s,
        r,
        s * t,
        s * r * u1,
        s.powi(3) * r * tt * u1 * u2,
        j as f64 * s.powi(7) * r.powi(3) * tt * tt * u1 * u1 * (1.0 - u1) * u2 * (1.0 - u2),
    ];
    Ok(QuotientCoord::Chart53 { y })
}

/// The chart evaluated on a raw `(A, v)` through its canonical form.
pub fn chart_53_point(p: &RepPoint) -> Result<QuotientCoord> {
    let RepPoint::FiveThree { a, v } = p else {
        return Err(Error::TypeMismatch { element: "chart_53", case: p.case().name() });
    };
    let c = extract_53_chart(&canonicalize_53(a, v));
    chart_53(c.s, c.r, c.t, c.u1, c.u2, c.j)
}

/// `α(y) = (y₁y₂ − y₄) y₅ (y₃(y₁ − y₃)y₄ − y₅)`, the modulus of the last
/// component in terms of the first five.
pub fn alpha(y: &[f64; 6]) -> f64 {
    (y[0] * y[1] - y[3]) * y[4] * (y[2] * (y[0] - y[2]) * y[3] - y[4])
}
