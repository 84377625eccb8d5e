//! BCH and Reed-Solomon codes: generators and exponents.
//!
//! A BCH code of length n = q^m - 1 and designed distance delta collects the
//! minimal polynomials of beta^i for delta - 1 consecutive exponents
//! i = a, ..., a + delta - 2 (indices taken mod n). The code's exponent —
//! the order of its generator — is the lcm of ord(beta^i) = n/gcd(n, i) over
//! the defining set, which needs no polynomial arithmetic at all; the
//! polynomial route is kept as a cross-check. Reed-Solomon codes are the
//! m = 1 case with roots beta^(a+1), ..., beta^(a+delta-1).

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::cyclotomic::{coset_of, minimal_polynomial_of_element};
use crate::error::{Error, Result};
use crate::fields::{
    element_order, find_irreducible_modulus, find_primitive, gcd_u64, lcm_u64, Field,
    FieldElement, DEFAULT_MAX_CARDINALITY,
};
use crate::orders::order_of;
use crate::poly::Polynomial;

/// In release builds, one spec in this many gets the polynomial-route
/// cross-check; debug and test builds always check.
const CROSS_CHECK_SAMPLE: u64 = 8;

static CROSS_CHECK_TICKS: AtomicU64 = AtomicU64::new(0);

/// A constructed BCH (or Reed-Solomon) code.
#[derive(Clone, Debug)]
pub struct BchSpec {
    pub base: Arc<Field>,
    pub ext: Arc<Field>,
    pub beta: FieldElement,
    /// First defining exponent (reduced mod length).
    pub a: u64,
    pub delta: u64,
    pub length: u64,
    /// Sorted leaders of the cyclotomic cosets of the defining set.
    pub defining_leaders: Vec<u64>,
    pub generator: Polynomial,
    pub dimension: u64,
    pub exponent: u64,
}

impl BchSpec {
    /// Any designed distance above 2 puts two consecutive exponents in the
    /// defining set, which forces the exponent up to the full length.
    pub fn delta_corollary_applies(&self) -> bool {
        self.delta > 2
    }
}

/// Whether `spec` satisfies the implication "delta > 2 implies exponent =
/// length". Vacuously true for delta <= 2, where the exponent may be a
/// proper divisor of the length.
pub fn check_delta_corollary(spec: &BchSpec) -> bool {
    spec.delta <= 2 || spec.exponent == spec.length
}

/// BCH code over `field` with splitting field of degree m. `modulus` picks
/// the extension (default: first irreducible in index order) and `beta` the
/// primitive element (default: first in index order).
pub fn bch_spec(
    field: &Arc<Field>,
    m: u32,
    a: u64,
    delta: u64,
    modulus: Option<Polynomial>,
) -> Result<BchSpec> {
    bch_spec_with(field, m, a, delta, modulus, None, DEFAULT_MAX_CARDINALITY)
}

pub fn bch_spec_with(
    field: &Arc<Field>,
    m: u32,
    a: u64,
    delta: u64,
    modulus: Option<Polynomial>,
    beta: Option<FieldElement>,
    max_cardinality: u64,
) -> Result<BchSpec> {
    if m == 0 {
        return Err(Error::InvalidParameter("extension degree must be >= 1".into()));
    }
    let ext = if m == 1 {
        if modulus.is_some() {
            return Err(Error::InvalidParameter("modulus given for a degree-1 extension".into()));
        }
        field.clone()
    } else {
        let h = match modulus {
            Some(h) => {
                if h.degree() != Some(m as usize) {
                    return Err(Error::BadModulus { expected: m, found: h.to_string() });
                }
                if h.field().as_ref() != field.as_ref() {
                    return Err(Error::FieldMismatch);
                }
                if !h.is_irreducible() {
                    return Err(Error::Reducible(h.to_string()));
                }
                h
            }
            None => find_irreducible_modulus(field, m)?,
        };
        Field::extension_preverified(field, h, max_cardinality)?
    };
    let n = ext.cardinality() - 1;
    if delta < 2 || delta > n {
        return Err(Error::DeltaOutOfRange { delta, max: n });
    }
    let beta = match beta {
        Some(b) => {
            if b.field().as_ref() != ext.as_ref() {
                return Err(Error::FieldMismatch);
            }
            if element_order(&b)? != n {
                return Err(Error::NotPrimitive(b.to_string()));
            }
            b
        }
        None => find_primitive(&ext)?,
    };

    let q = field.cardinality();
    let a = a % n;
    let mut leaders: Vec<u64> = Vec::new();
    for offset in 0..delta - 1 {
        let i = (a + offset) % n;
        let leader = *coset_of(q, n, i)?.iter().min().expect("nonempty coset");
        if !leaders.contains(&leader) {
            leaders.push(leader);
        }
    }
    leaders.sort_unstable();

    let mut generator = Polynomial::one(field);
    let mut exponent = 1u64;
    for &leader in &leaders {
        let factor = minimal_polynomial_of_element(&beta.pow(leader), field)?;
        generator = &generator * &factor;
        exponent = lcm_u64(exponent, n / gcd_u64(n, leader))?;
    }
    let dimension = n - generator.degree().unwrap_or(0) as u64;

    let check = cfg!(debug_assertions)
        || CROSS_CHECK_TICKS.fetch_add(1, Ordering::Relaxed) % CROSS_CHECK_SAMPLE == 0;
    if check {
        let via_poly = order_of(&generator)?;
        if via_poly != exponent {
            return Err(Error::CrossCheckMismatch(format!(
                "exponent of the length-{n} code at a={a}, delta={delta}: \
                 lcm formula gives {exponent}, polynomial order gives {via_poly}"
            )));
        }
    }

    Ok(BchSpec {
        base: field.clone(),
        ext,
        beta,
        a,
        delta,
        length: n,
        defining_leaders: leaders,
        generator,
        dimension,
        exponent,
    })
}

pub fn bch_generator(
    field: &Arc<Field>,
    m: u32,
    a: u64,
    delta: u64,
    modulus: Option<Polynomial>,
) -> Result<Polynomial> {
    Ok(bch_spec(field, m, a, delta, modulus)?.generator)
}

pub fn bch_exponent(
    field: &Arc<Field>,
    m: u32,
    a: u64,
    delta: u64,
    modulus: Option<Polynomial>,
) -> Result<u64> {
    Ok(bch_spec(field, m, a, delta, modulus)?.exponent)
}

/// Reed-Solomon code over `field`: length q - 1, roots beta^(a+1) through
/// beta^(a+delta-1). Requires 2 <= delta <= q - 1.
pub fn rs_spec(field: &Arc<Field>, a: u64, delta: u64) -> Result<BchSpec> {
    rs_spec_with(field, a, delta, None)
}

pub fn rs_spec_with(
    field: &Arc<Field>,
    a: u64,
    delta: u64,
    beta: Option<FieldElement>,
) -> Result<BchSpec> {
    let n = field.cardinality() - 1;
    if delta < 2 || delta > n {
        return Err(Error::DeltaOutOfRange { delta, max: n });
    }
    let start = a.checked_add(1).ok_or_else(|| {
        Error::InvalidParameter("a + 1 overflows".into())
    })?;
    bch_spec_with(field, 1, start, delta, None, beta, DEFAULT_MAX_CARDINALITY)
}

pub fn rs_generator(field: &Arc<Field>, a: u64, delta: u64) -> Result<Polynomial> {
    Ok(rs_spec(field, a, delta)?.generator)
}

pub fn rs_exponent(field: &Arc<Field>, a: u64, delta: u64) -> Result<u64> {
    Ok(rs_spec(field, a, delta)?.exponent)
}

/// Build the same code from the two smallest primitive elements and confirm
/// the exponent does not depend on the choice. Needs q^m > 3 so that a
/// second primitive exists.
pub fn check_primitive_independence(
    field: &Arc<Field>,
    m: u32,
    a: u64,
    delta: u64,
) -> Result<bool> {
    let first = bch_spec(field, m, a, delta, None)?;
    if first.ext.cardinality() <= 3 {
        return Err(Error::InvalidParameter(
            "a second primitive element needs a field with more than 3 elements".into(),
        ));
    }
    let n = first.length;
    let factors = crate::fields::int_factorize(n);
    let mut second = None;
    for idx in first.beta.index() + 1..first.ext.cardinality() {
        let cand = first.ext.element_from_index(idx)?;
        if !cand.is_zero() && factors.iter().all(|&(r, _)| !cand.pow(n / r).is_one()) {
            second = Some(cand);
            break;
        }
    }
    let second = second.ok_or_else(|| Error::Internal("no second primitive".into()))?;
    let other = bch_spec_with(
        field,
        m,
        a,
        delta,
        None,
        Some(second),
        DEFAULT_MAX_CARDINALITY,
    )?;
    Ok(first.exponent == other.exponent)
}
