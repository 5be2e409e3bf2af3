//! Regions parametrising the quotients and canonical representatives in them.

pub mod chambers;
pub mod five_three;
pub mod fset;
pub mod gram;
pub mod sheet;

pub use chambers::{
    boundary_product_m7, boundary_product_m8, in_m7, in_m8, m7_margin, on_boundary_m7, on_boundary_m8,
    sort_canonicalize, weyl_canonicalize_d3,
};
pub use five_three::{
    canonicalize_53, extract_53_chart, ray_parameter, spherical_params, twist, Chart53Params, FiveThreeCanon, Stratum,
};
pub use fset::{f_predicate_7, m7_point, root_lines};
pub use gram::{delta, gram_map, gram_matrix, gram_section, in_d, GramPoint};
pub use sheet::{sheet_label, MhatPoint, SHEET_TOL};
