//! Exact truncated power series and the sortable-pattern generating functions.

mod asymptotic;
mod field;
mod gf;
mod power;
mod qrational;

pub use asymptotic::{
    estimate_k, estimate_k_with_precision, k_sequence, ln_big, quartic_residual,
    quartic_root_closed_form, quartic_smallest_root, AsymptoticEstimate, FixedReal,
};
pub use field::Field;
pub use gf::{
    at_q_one, counts, p_closed_form, p_functional_eq, pq_closed_form, pq_functional_eq,
    refined_counts, QUARTIC,
};
pub use power::{BiSeries, Series, UniSeries};
pub use qrational::{QPoly, QRational};

pub use num_rational::BigRational;
