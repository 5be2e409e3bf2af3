//! JSON rendering with the versioned envelope.

use num_complex::Complex64;
use orbitspace::invariants::QuotientCoord;
use orbitspace::reps::GroupElement;
use serde_json::{json, Value};

pub const SCHEMA: u32 = 1;

pub fn envelope(command: &str, body: Value) -> Value {
    let mut out = json!({ "schema": SCHEMA, "command": command });
    if let (Some(o), Value::Object(b)) = (out.as_object_mut(), body) {
        o.extend(b);
    }
    out
}

fn c(z: Complex64) -> Value {
    json!([z.re, z.im])
}

pub fn coord(q: &QuotientCoord) -> Value {
    match q {
        QuotientCoord::RH { d, lambda } => json!({ "d": d, "lambda": lambda.to_array() }),
        QuotientCoord::RH0 { d, lambda0 } => json!({ "d": d, "lambda0": [lambda0.x, lambda0.y, lambda0.z] }),
        QuotientCoord::SymDet { s, det } => {
            let m = s.to_matrix();
            let rows: Vec<[f64; 3]> = (0..3).map(|i| [m[(i, 0)], m[(i, 1)], m[(i, 2)]]).collect();
            json!({ "S": rows, "det": det })
        }
        QuotientCoord::ThetaTriple { base, theta1, theta2, scale } => json!({
            "x": base.x.to_array(),
            "sheet": base.sheet,
            "theta1": c(*theta1),
            "theta2": c(*theta2),
            "scale": scale,
        }),
        QuotientCoord::Chart53 { y } => json!({ "y": y }),
    }
}

pub fn group_element(g: &GroupElement) -> Value {
    match g {
        GroupElement::Su2(q) => json!({ "su2": q.quaternion().to_array() }),
        GroupElement::So3(r) => {
            let m = r.matrix();
            let rows: Vec<[f64; 3]> = (0..3).map(|i| [m[(i, 0)], m[(i, 1)], m[(i, 2)]]).collect();
            json!({ "so3": rows })
        }
    }
}
