//! Chambers for the two finite groups acting on Gram coordinates, and the
//! regions `M₇ = C ∩ D` and `M₈ = {x ∈ D : x₁ ≥ x₂ ≥ x₃}`.

use super::gram::{delta, in_d, GramPoint};

/// The representative in `C = {x₁ ≥ x₂ ≥ |x₃|}` of the orbit under
/// permutations and even sign changes.
pub fn weyl_canonicalize_d3(x: [f64; 3]) -> [f64; 3] {
    let mut m = x.map(f64::abs);
    m.sort_by(|a, b| b.total_cmp(a));
    let negative = x.iter().filter(|c| c.is_sign_negative() && **c != 0.0).count() % 2 == 1;
    // the parity of negative signs is invariant unless a coordinate is zero
    if negative && x.iter().all(|c| *c != 0.0) {
        m[2] = -m[2];
    }
    m
}

pub fn sort_canonicalize(x: [f64; 3]) -> [f64; 3] {
    let mut s = x;
    s.sort_by(|a, b| b.total_cmp(a));
    s
}

/// `(x₁² − x₂²)(x₂² − x₃²)(x₃² − x₁²) δ(x)`.
pub fn boundary_product_m7(x: GramPoint) -> f64 {
    let (a, b, c) = (x.x1 * x.x1, x.x2 * x.x2, x.x3 * x.x3);
    (a - b) * (b - c) * (c - a) * delta(x)
}

/// `(x₁ − x₂)(x₂ − x₃)(x₃ − x₁) δ(x)`.
pub fn boundary_product_m8(x: GramPoint) -> f64 {
    (x.x1 - x.x2) * (x.x2 - x.x3) * (x.x3 - x.x1) * delta(x)
}

/// The linear inequalities `xᵢ ± xⱼ ≥ 0` (`i < j`), `1 ± xᵢ ≥ 0` and `δ ≥ 0`.
pub fn in_m7(x: GramPoint, tol: f64) -> bool {
    let [x1, x2, x3] = x.to_array();
    let linear = [x1 - x2, x1 + x2, x1 - x3, x1 + x3, x2 - x3, x2 + x3, 1.0 - x1, 1.0 + x1, 1.0 - x2, 1.0 + x2, 1.0 - x3, 1.0 + x3];
    linear.iter().all(|l| *l >= -tol) && delta(x) >= -tol
}

pub fn on_boundary_m7(x: GramPoint, tol: f64) -> bool {
    boundary_product_m7(x).abs() <= tol
}

pub fn in_m8(x: GramPoint, tol: f64) -> bool {
    x.x1 >= x.x2 - tol && x.x2 >= x.x3 - tol && in_d(x, tol)
}

pub fn on_boundary_m8(x: GramPoint, tol: f64) -> bool {
    boundary_product_m8(x).abs() <= tol
}

/// `min(x₁ − x₂, x₂ − |x₃|, δ)`: how far a chamber point is from `∂M₇`.
pub fn m7_margin(x: GramPoint) -> f64 {
    (x.x1 - x.x2).min(x.x2 - x.x3.abs()).min(delta(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn group_images(x: [f64; 3]) -> Vec<[f64; 3]> {
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let signs = [[1.0, 1.0, 1.0], [-1.0, -1.0, 1.0], [-1.0, 1.0, -1.0], [1.0, -1.0, -1.0]];
        perms
            .iter()
            .flat_map(|p| signs.iter().map(move |s| [x[p[0]] * s[0], x[p[1]] * s[1], x[p[2]] * s[2]]))
            .collect()
    }

    #[test]
    fn weyl_examples() {
        assert_eq!(weyl_canonicalize_d3([0.0, 1.0, -2.0]), [2.0, 1.0, 0.0]);
        assert_eq!(weyl_canonicalize_d3([-1.0, -1.0, -1.0]), [1.0, 1.0, -1.0]);
        assert_eq!(weyl_canonicalize_d3([3.0, -2.0, 1.0]), [3.0, 2.0, -1.0]);
    }

    #[test]
    fn weyl_is_a_unique_chamber_representative() {
        let mut rng = ChaCha8Rng::seed_from_u64(60);
        for i in 0..2000 {
            // quarter-integers make every comparison exact
            let mut x = [0.0; 3].map(|_: f64| rng.random_range(-8i32..=8) as f64 / 4.0);
            if i % 7 == 0 {
                x[1] = 0.0;
            }
            let c = weyl_canonicalize_d3(x);
            assert!(c[0] >= c[1] && c[1] >= c[2].abs());
            let images = group_images(x);
            assert_eq!(images.len(), 24);
            for y in images {
                assert_eq!(weyl_canonicalize_d3(y), c);
            }
            let in_chamber: Vec<[f64; 3]> =
                group_images(x).into_iter().filter(|y| y[0] >= y[1] && y[1] >= y[2].abs()).collect();
            assert!(in_chamber.iter().all(|y| *y == c));
        }
    }

    #[test]
    fn sort_examples() {
        assert_eq!(sort_canonicalize([0.0, 1.0, -2.0]), [1.0, 0.0, -2.0]);
        assert_eq!(sort_canonicalize([1.0, 1.0, 1.0]), [1.0, 1.0, 1.0]);
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        for _ in 0..10_000 {
            let x = [rng.random(), rng.random(), rng.random()];
            let s = sort_canonicalize(x);
            assert_eq!(sort_canonicalize(s), s);
        }
    }

    #[test]
    fn m7_examples() {
        let one = GramPoint::new(1.0, 1.0, 1.0);
        assert!(in_m7(one, 1e-12) && on_boundary_m7(one, 1e-12));
        let p = GramPoint::new(0.5, 0.2, 0.1);
        assert!((delta(p) - 0.72).abs() < 1e-15);
        assert!(in_m7(p, 0.0) && !on_boundary_m7(p, 1e-9));
        assert!(!in_m7(GramPoint::new(2.0, 0.0, 0.0), 1e-9));
    }

    #[test]
    fn m8_examples() {
        let z = GramPoint::new(0.0, 0.0, 0.0);
        assert!(in_m8(z, 0.0) && on_boundary_m8(z, 1e-12));
        let p = GramPoint::new(0.5, 0.1, -0.2);
        assert!(delta(p) > 0.0 && in_m8(p, 0.0) && !on_boundary_m8(p, 1e-9));
        let one = GramPoint::new(1.0, 1.0, 1.0);
        assert!(in_m8(one, 1e-12) && on_boundary_m8(one, 1e-12));
    }

    #[test]
    fn unit_face_forces_equal_coordinates() {
        // on the face x₁ = 1, δ = −(x₂ − x₃)², so membership needs x₂ = x₃
        let mut rng = ChaCha8Rng::seed_from_u64(62);
        for _ in 0..1000 {
            let (u, w) = (rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
            let x = GramPoint::new(1.0, u, w);
            assert!((delta(x) + (u - w) * (u - w)).abs() < 1e-14);
            let x = GramPoint::new(-1.0, u, w);
            assert!((delta(x) + (u + w) * (u + w)).abs() < 1e-14);
        }
    }
}
