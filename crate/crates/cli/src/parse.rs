//! JSON point syntax for each representation case.
//!
//! Quaternions are `[w,x,y,z]`, a bare number, or one of `"1"`, `"i"`, `"j"`,
//! `"k"` with an optional leading `-`. Complex numbers are `[re,im]` or a
//! bare number. Matrices are arrays of rows.

use nalgebra::{Matrix3, Vector3};
use num_complex::Complex64;
use orbitspace::algebra::{BinaryForm, Quaternion, Sym3};
use orbitspace::reps::RepPoint;
use serde_json::Value;

pub type ParseResult<T> = Result<T, String>;

fn number(v: &Value) -> ParseResult<f64> {
    v.as_f64().ok_or_else(|| format!("expected a number, got {v}"))
}

fn array<'a>(v: &'a Value, len: usize, what: &str) -> ParseResult<&'a Vec<Value>> {
    match v.as_array() {
        Some(a) if a.len() == len => Ok(a),
        _ => Err(format!("expected {what} as an array of {len}, got {v}")),
    }
}

pub fn quaternion(v: &Value) -> ParseResult<Quaternion> {
    if let Some(x) = v.as_f64() {
        return Ok(Quaternion::real(x));
    }
    if let Some(s) = v.as_str() {
        let (sign, unit) = match s.strip_prefix('-') {
            Some(rest) => (-1.0, rest),
            None => (1.0, s),
        };
        let q = match unit {
            "1" => Quaternion::ONE,
            "i" => Quaternion::I,
            "j" => Quaternion::J,
            "k" => Quaternion::K,
            _ => return Err(format!("unknown quaternion unit {s:?}")),
        };
        return Ok(q * sign);
    }
    let a = array(v, 4, "quaternion")?;
    Ok(Quaternion::new(number(&a[0])?, number(&a[1])?, number(&a[2])?, number(&a[3])?))
}

pub fn complex(v: &Value) -> ParseResult<Complex64> {
    if let Some(x) = v.as_f64() {
        return Ok(Complex64::new(x, 0.0));
    }
    let a = array(v, 2, "complex number")?;
    Ok(Complex64::new(number(&a[0])?, number(&a[1])?))
}

pub fn matrix3(v: &Value) -> ParseResult<Matrix3<f64>> {
    let rows = array(v, 3, "matrix")?;
    let mut m = Matrix3::zeros();
    for (i, row) in rows.iter().enumerate() {
        for (j, x) in array(row, 3, "matrix row")?.iter().enumerate() {
            m[(i, j)] = number(x)?;
        }
    }
    Ok(m)
}

fn vector3(v: &Value) -> ParseResult<Vector3<f64>> {
    let a = array(v, 3, "vector")?;
    Ok(Vector3::new(number(&a[0])?, number(&a[1])?, number(&a[2])?))
}

fn form(v: &Value, len: usize) -> ParseResult<BinaryForm> {
    let a = array(v, len, "coefficient list")?;
    Ok(BinaryForm::new(a.iter().map(complex).collect::<ParseResult<Vec<_>>>()?))
}

/// Case names accepted on the command line.
pub const CASES: [&str; 6] = ["44", "43", "333", "8", "7", "53"];

pub fn point(case: &str, text: &str) -> ParseResult<RepPoint> {
    let v: Value = serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    match case {
        "44" => {
            let a = array(&v, 2, "quaternion pair")?;
            Ok(RepPoint::quat_pair(quaternion(&a[0])?, quaternion(&a[1])?))
        }
        "43" => {
            let a = array(&v, 2, "quaternion and imaginary quaternion")?;
            RepPoint::quat_vec(quaternion(&a[0])?, quaternion(&a[1])?).map_err(|e| e.to_string())
        }
        "333" => Ok(RepPoint::Mat3(matrix3(&v)?)),
        "8" => Ok(RepPoint::PolyC(form(&v, 4)?)),
        "7" => RepPoint::poly_r(form(&v, 7)?).map_err(|e| e.to_string()),
        "53" => {
            let a = v.get("A").ok_or("expected an object with keys \"A\" and \"v\"")?;
            let s = Sym3::from_matrix(&matrix3(a)?);
            let vec = vector3(v.get("v").ok_or("missing key \"v\"")?)?;
            RepPoint::five_three(s, vec).map_err(|e| e.to_string())
        }
        other => Err(format!("unknown case {other:?}; expected one of {}", CASES.join(", "))),
    }
}
