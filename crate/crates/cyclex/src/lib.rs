//! Orders of polynomials over finite fields, factorizations of x^e - 1, and
//! exponents of cyclic codes (BCH and Reed-Solomon) at desk scale.

pub mod bch;
pub mod census;
pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod fields;
pub mod orders;
pub mod poly;

pub use bch::{
    bch_exponent, bch_generator, bch_spec, bch_spec_with, check_delta_corollary,
    check_primitive_independence, rs_exponent, rs_generator, rs_spec, rs_spec_with, BchSpec,
};
pub use census::{
    census_exact, census_exact_with_cap, census_lower_bound, census_report, forcing_range,
    partition_identity_sides, verify_lemmas, CensusBranch, CensusReport, FactorChecks,
    ForcingRange, LemmaReport, DEFAULT_ENUM_CAP,
};
pub use cyclotomic::{
    coset_of, cyclotomic_cosets, factor_xe_minus_1, minimal_polynomial,
    minimal_polynomial_of_element, CosetTable, FactorEntry, Factorization,
};
pub use error::{Error, Result};
pub use fields::{
    element_order, find_irreducible_modulus, find_primitive, int_factorize, make_field,
    make_field_with, mult_order_mod, Field, FieldElement, PrimePower, DEFAULT_MAX_CARDINALITY,
};
pub use orders::{
    order_any, order_bruteforce, order_bruteforce_with_limit, order_irreducible, order_power,
    FactorOrder, OrderMethod, OrderResult, DEFAULT_SCAN_LIMIT,
};
pub use poly::{format_poly, parse_element, parse_poly, Polynomial};
