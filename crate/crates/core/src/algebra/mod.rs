//! Numerical substrate: quaternions, rotations, symmetric eigenproblems,
//! binary forms and winding numbers.

pub mod forms;
pub mod quaternion;
pub mod rotation;
pub mod sym3;
pub mod winding;

pub use forms::{binomial, poly_roots, BinaryForm, Factorization};
pub use quaternion::{haar_su2, quat_conj, quat_mul, quat_norm, Quaternion, UnitQuaternion};
pub use rotation::{su2_to_so3, Rotation3};
pub use sym3::{eig_sym3, from_spectrum, psd_check, Sym3};
pub use winding::{sample_loop, winding_number};
