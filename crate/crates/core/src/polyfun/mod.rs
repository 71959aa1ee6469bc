//! Polynomial functions between residue rings: μ-bounds, canonical forms,
//! interpolation and counting.

pub mod basis;
pub mod canonical;
pub mod count;
pub mod interp;
pub mod mvpoly;
pub mod spec;

pub use basis::{falling_factorial, from_falling_basis, to_falling_basis};
pub use canonical::{
    ann_modulus, canonical_monomial, canonicalize, canonicalize_falling, equivalent,
    evaluate_table, CanonicalForm, CanonicalTerm, FunctionTable,
};
pub use count::{
    active_indices, count, count_chen, count_poly_ring, count_prime_power, count_with,
    PrimePowerCount,
};
pub use interp::{
    all_functions_polynomial, interpolate, interpolate_with, verify_witness, Interpolation,
    Witness,
};
pub use mvpoly::{box_index, box_indices, MVPoly, MultiIndex};
pub use spec::{
    lambda_bound, lambda_bound_by_definition, mu_bound, mu_bound_by_definition, ProblemSpec,
};
