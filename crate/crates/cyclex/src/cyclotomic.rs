//! Cyclotomic cosets and the factorization of x^e - 1.
//!
//! Over F_q with e = e' p^s (p the characteristic, gcd(e', q) = 1) we have
//! x^e - 1 = (x^{e'} - 1)^{p^s}, and x^{e'} - 1 splits into the minimal
//! polynomials of gamma^l for coset leaders l, where gamma is a root of unity
//! of order e' in F_{q^m}, m the multiplicative order of q mod e'. Each such
//! factor has order e'/gcd(e', l), which is how orders are assigned here
//! without ever calling back into the order machinery.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fields::{
    element_order, find_irreducible_modulus, find_primitive, gcd_u64, mult_order_mod, Field,
    FieldElement,
};
use crate::poly::Polynomial;

/// Cosets are materialized; refuse moduli past this.
pub const DEFAULT_COSET_CAP: u64 = 10_000_000;

/// All cyclotomic cosets of q mod n.
#[derive(Clone, Debug)]
pub struct CosetTable {
    q: u64,
    n: u64,
    cosets: Vec<Vec<u64>>,
    leader: Vec<u64>,
}

impl CosetTable {
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Cosets ordered by leader; each coset walks i, iq, iq^2, ... from its
    /// least member.
    pub fn cosets(&self) -> &[Vec<u64>] {
        &self.cosets
    }

    pub fn leader_of(&self, i: u64) -> u64 {
        self.leader[(i % self.n) as usize]
    }
}

/// The cyclotomic cosets {i q^j mod n}. Requires gcd(q, n) = 1.
pub fn cyclotomic_cosets(q: u64, n: u64) -> Result<CosetTable> {
    if n == 0 || q == 0 {
        return Err(Error::InvalidParameter("cosets need q, n >= 1".into()));
    }
    if gcd_u64(q % n, n) != 1 {
        return Err(Error::NotCoprime { q, n });
    }
    if n > DEFAULT_COSET_CAP {
        return Err(Error::EnumerationCapExceeded { size: n as u128, cap: DEFAULT_COSET_CAP });
    }
    let mut leader = vec![u64::MAX; n as usize];
    let mut cosets = Vec::new();
    for i in 0..n {
        if leader[i as usize] != u64::MAX {
            continue;
        }
        let mut orbit = Vec::new();
        let mut j = i;
        loop {
            leader[j as usize] = i;
            orbit.push(j);
            j = (j as u128 * q as u128 % n as u128) as u64;
            if j == i {
                break;
            }
        }
        cosets.push(orbit);
    }
    Ok(CosetTable { q, n, cosets, leader })
}

/// Single coset of i, walked without materializing the table (n may be huge).
pub fn coset_of(q: u64, n: u64, i: u64) -> Result<Vec<u64>> {
    if n == 0 || q == 0 {
        return Err(Error::InvalidParameter("cosets need q, n >= 1".into()));
    }
    if gcd_u64(q % n, n) != 1 {
        return Err(Error::NotCoprime { q, n });
    }
    let start = i % n;
    let mut orbit = vec![start];
    let mut j = (start as u128 * q as u128 % n as u128) as u64;
    while j != start {
        orbit.push(j);
        j = (j as u128 * q as u128 % n as u128) as u64;
    }
    Ok(orbit)
}

/// Minimal polynomial over `base` of an element of `base` itself or of a
/// one-step extension: the product of (x - delta^(q^j)) over the distinct
/// Frobenius conjugates.
pub fn minimal_polynomial_of_element(
    delta: &FieldElement,
    base: &Arc<Field>,
) -> Result<Polynomial> {
    let ext = delta.field().clone();
    if ext.as_ref() == base.as_ref() {
        // already rational: x - delta
        let mut m = Polynomial::x(base);
        m = &m - &Polynomial::constant(delta);
        return Ok(m);
    }
    if ext.base().map(|b| b.as_ref()) != Some(base.as_ref()) {
        return Err(Error::FieldMismatch);
    }
    let q = base.cardinality();
    let mut conjugates = vec![delta.clone()];
    let mut c = delta.pow(q);
    while c != *delta {
        if conjugates.len() > ext.degree() as usize {
            return Err(Error::Internal(format!(
                "conjugate walk of {delta} did not close"
            )));
        }
        conjugates.push(c.clone());
        c = c.pow(q);
    }
    let mut prod = Polynomial::one(&ext);
    for c in &conjugates {
        let lin = &Polynomial::x(&ext) - &Polynomial::constant(c);
        prod = &prod * &lin;
    }
    // coefficients are Frobenius-fixed, hence in the base field
    let mut coeffs = Vec::with_capacity(conjugates.len() + 1);
    for c in prod.coefficients() {
        let down = c
            .to_base()
            .ok_or_else(|| Error::NotInBaseField(c.to_string()))?;
        coeffs.push(down);
    }
    Polynomial::from_elements(base, coeffs)
}

/// Minimal polynomial M^(i) of beta^i for a primitive beta.
pub fn minimal_polynomial(i: u64, beta: &FieldElement, base: &Arc<Field>) -> Result<Polynomial> {
    let n = beta.field().cardinality() - 1;
    if element_order(beta)? != n {
        return Err(Error::NotPrimitive(beta.to_string()));
    }
    minimal_polynomial_of_element(&beta.pow(i % n.max(1)), base)
}

/// One irreducible factor of x^e - 1 (all copies share the multiplicity).
#[derive(Clone, Debug)]
pub struct FactorEntry {
    pub poly: Polynomial,
    pub multiplicity: u64,
    pub order: u64,
}

/// Complete factorization of x^e - 1 over F_q.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub e: u64,
    /// e with all factors of the characteristic removed.
    pub e_coprime: u64,
    /// e / e_coprime.
    pub p_power: u64,
    /// Multiplicative order of q mod e_coprime (degree of the splitting
    /// extension).
    pub m: u64,
    /// Splitting field F_{q^m} (the ground field itself when m = 1).
    pub ext: Arc<Field>,
    /// Primitive element of the splitting field.
    pub beta: FieldElement,
    /// Root of unity of order e_coprime: beta^((q^m - 1)/e_coprime).
    pub gamma: FieldElement,
    /// Sorted by degree, then by coefficients.
    pub factors: Vec<FactorEntry>,
}

impl Factorization {
    /// Multiply the factorization back together (small e only).
    pub fn reassemble(&self) -> Result<Polynomial> {
        if self.e > 10_000 {
            return Err(Error::InvalidParameter(format!(
                "refusing to expand a degree-{} product",
                self.e
            )));
        }
        let field = self.factors[0].poly.field().clone();
        let mut prod = Polynomial::one(&field);
        for f in &self.factors {
            prod = &prod * &f.poly.pow(f.multiplicity as u32);
        }
        Ok(prod)
    }
}

/// Factor x^e - 1 over `field` into irreducibles with orders attached.
pub fn factor_xe_minus_1(field: &Arc<Field>, e: u64) -> Result<Factorization> {
    factor_xe_minus_1_with(field, e, DEFAULT_MAX_CARD_FOR_FACTOR)
}

const DEFAULT_MAX_CARD_FOR_FACTOR: u64 = crate::fields::DEFAULT_MAX_CARDINALITY;

pub fn factor_xe_minus_1_with(
    field: &Arc<Field>,
    e: u64,
    max_cardinality: u64,
) -> Result<Factorization> {
    if e == 0 {
        return Err(Error::InvalidParameter("e must be >= 1".into()));
    }
    let p = field.characteristic();
    let q = field.cardinality();
    let mut e_coprime = e;
    let mut p_power = 1u64;
    while e_coprime % p == 0 {
        e_coprime /= p;
        p_power *= p;
    }
    let m = mult_order_mod(q, e_coprime)?;
    let ext = if m == 1 {
        field.clone()
    } else {
        let h = find_irreducible_modulus(field, u32::try_from(m).map_err(|_| {
            Error::InvalidParameter(format!("extension degree {m} is out of range"))
        })?)?;
        Field::extension_preverified(field, h, max_cardinality)?
    };
    let beta = find_primitive(&ext)?;
    let gamma = beta.pow((ext.cardinality() - 1) / e_coprime);
    let table = cyclotomic_cosets(q, e_coprime)?;

    let mut factors = Vec::with_capacity(table.cosets().len());
    let mut degree_sum = 0u64;
    for coset in table.cosets() {
        let leader = coset[0];
        let poly = minimal_polynomial_of_element(&gamma.pow(leader), field)?;
        let deg = poly.degree().unwrap_or(0) as u64;
        if deg != coset.len() as u64 {
            return Err(Error::Internal(format!(
                "coset of {leader} has size {} but its minimal polynomial {poly} has degree {deg}",
                coset.len()
            )));
        }
        degree_sum += deg;
        factors.push(FactorEntry {
            poly,
            multiplicity: p_power,
            order: e_coprime / gcd_u64(e_coprime, leader),
        });
    }
    if degree_sum != e_coprime {
        return Err(Error::Internal(format!(
            "factor degrees sum to {degree_sum}, expected {e_coprime}"
        )));
    }
    factors.sort_by(|a, b| a.poly.sort_key().cmp(&b.poly.sort_key()));
    Ok(Factorization { e, e_coprime, p_power, m, ext, beta, gamma, factors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{make_field, PrimePower};
    use crate::poly::parse_poly;

    fn f(p: u64) -> Arc<Field> {
        Field::prime(p).unwrap()
    }

    fn factor_strings(fac: &Factorization) -> Vec<(String, u64, u64)> {
        fac.factors
            .iter()
            .map(|f| (f.poly.to_string(), f.multiplicity, f.order))
            .collect()
    }

    #[test]
    fn cosets_of_three_mod_eight() {
        let t = cyclotomic_cosets(3, 8).unwrap();
        assert_eq!(
            t.cosets(),
            &[vec![0], vec![1, 3], vec![2, 6], vec![4], vec![5, 7]]
        );
        assert_eq!(t.leader_of(6), 2);
        assert_eq!(t.leader_of(7), 5);
        assert_eq!(t.leader_of(11), 1); // reduced mod 8
    }

    #[test]
    fn coset_walk_matches_table() {
        assert_eq!(coset_of(2, 15, 7).unwrap(), vec![7, 14, 13, 11]);
        assert_eq!(coset_of(2, 15, 0).unwrap(), vec![0]);
        let t = cyclotomic_cosets(2, 15).unwrap();
        for c in t.cosets() {
            assert_eq!(coset_of(2, 15, c[0]).unwrap(), *c);
        }
        assert!(coset_of(2, 4, 1).is_err());
        assert!(cyclotomic_cosets(2, 4).is_err());
    }

    #[test]
    fn cosets_mod_one() {
        let t = cyclotomic_cosets(3, 1).unwrap();
        assert_eq!(t.cosets(), &[vec![0]]);
    }

    #[test]
    fn minimal_polynomials_in_f16() {
        let f2 = f(2);
        let f16 = Field::extension(&f2, parse_poly("x^4+x+1", &f2).unwrap()).unwrap();
        let beta = find_primitive(&f16).unwrap();
        assert_eq!(minimal_polynomial(1, &beta, &f2).unwrap().to_string(), "x^4 + x + 1");
        assert_eq!(minimal_polynomial(5, &beta, &f2).unwrap().to_string(), "x^2 + x + 1");
        assert_eq!(minimal_polynomial(0, &beta, &f2).unwrap().to_string(), "x + 1");
        assert_eq!(
            minimal_polynomial(3, &beta, &f2).unwrap().to_string(),
            "x^4 + x^3 + x^2 + x + 1"
        );
        // beta^5 is not primitive
        assert!(matches!(
            minimal_polynomial(1, &beta.pow(5), &f2),
            Err(Error::NotPrimitive(_))
        ));
    }

    #[test]
    fn minimal_polynomial_in_f9() {
        let f3 = f(3);
        let f9 = Field::extension(&f3, parse_poly("x^2+x+2", &f3).unwrap()).unwrap();
        let beta = find_primitive(&f9).unwrap();
        assert_eq!(minimal_polynomial(2, &beta, &f3).unwrap().to_string(), "x^2 + 1");
        assert_eq!(minimal_polynomial(1, &beta, &f3).unwrap().to_string(), "x^2 + x + 2");
    }

    #[test]
    fn factor_f3_e4() {
        let fac = factor_xe_minus_1(&f(3), 4).unwrap();
        assert_eq!((fac.e_coprime, fac.p_power, fac.m), (4, 1, 2));
        assert_eq!(
            factor_strings(&fac),
            vec![
                ("x + 1".to_string(), 1, 2),
                ("x + 2".to_string(), 1, 1),
                ("x^2 + 1".to_string(), 1, 4),
            ]
        );
        assert_eq!(
            fac.reassemble().unwrap(),
            Polynomial::x_pow_minus_one(&f(3), 4).unwrap()
        );
    }

    #[test]
    fn factor_f3_e12_repeats_the_e4_split() {
        let fac = factor_xe_minus_1(&f(3), 12).unwrap();
        assert_eq!((fac.e_coprime, fac.p_power), (4, 3));
        assert_eq!(
            factor_strings(&fac),
            vec![
                ("x + 1".to_string(), 3, 2),
                ("x + 2".to_string(), 3, 1),
                ("x^2 + 1".to_string(), 3, 4),
            ]
        );
        assert_eq!(
            fac.reassemble().unwrap(),
            Polynomial::x_pow_minus_one(&f(3), 12).unwrap()
        );
    }

    #[test]
    fn factor_f2_e15() {
        let fac = factor_xe_minus_1(&f(2), 15).unwrap();
        assert_eq!((fac.e_coprime, fac.p_power, fac.m), (15, 1, 4));
        assert_eq!(
            factor_strings(&fac),
            vec![
                ("x + 1".to_string(), 1, 1),
                ("x^2 + x + 1".to_string(), 1, 3),
                ("x^4 + x + 1".to_string(), 1, 15),
                ("x^4 + x^3 + 1".to_string(), 1, 15),
                ("x^4 + x^3 + x^2 + x + 1".to_string(), 1, 5),
            ]
        );
    }

    #[test]
    fn factor_with_m_equal_one() {
        // q = 5, e = 4: the 4th roots of unity already live in F_5
        let f5 = f(5);
        let fac = factor_xe_minus_1(&f5, 4).unwrap();
        assert_eq!(fac.m, 1);
        assert!(fac.ext.as_ref() == f5.as_ref());
        assert_eq!(
            factor_strings(&fac),
            vec![
                ("x + 1".to_string(), 1, 2),
                ("x + 2".to_string(), 1, 4),
                ("x + 3".to_string(), 1, 4),
                ("x + 4".to_string(), 1, 1),
            ]
        );
    }

    #[test]
    fn factor_over_non_prime_ground_field() {
        let f4 = make_field(PrimePower::new(4).unwrap(), 1, None).unwrap();
        let fac = factor_xe_minus_1(&f4, 3).unwrap();
        // x^3 - 1 splits into linears over F_4
        assert_eq!(fac.m, 1);
        assert_eq!(fac.factors.len(), 3);
        assert!(fac.factors.iter().all(|f| f.poly.degree() == Some(1)));
        assert_eq!(
            fac.reassemble().unwrap(),
            Polynomial::x_pow_minus_one(&f4, 3).unwrap()
        );
        let orders: Vec<u64> = fac.factors.iter().map(|f| f.order).collect();
        let mut sorted = orders.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 3, 3]);
    }

    #[test]
    fn reassembly_sweep() {
        for q in [2u64, 3, 4, 5] {
            let fld = make_field(PrimePower::new(q).unwrap(), 1, None).unwrap();
            for e in 1..=30u64 {
                let fac = factor_xe_minus_1(&fld, e).unwrap();
                assert_eq!(
                    fac.reassemble().unwrap(),
                    Polynomial::x_pow_minus_one(&fld, e).unwrap(),
                    "q={q} e={e}"
                );
                for f in &fac.factors {
                    assert!(f.poly.is_monic());
                    assert_eq!(f.multiplicity, fac.p_power);
                    // stated order must match the general machinery
                    assert_eq!(crate::orders::order_of(&f.poly).unwrap(), f.order, "q={q} e={e} factor={}", f.poly);
                }
            }
        }
    }

    #[test]
    fn zero_exponent_rejected() {
        assert!(factor_xe_minus_1(&f(3), 0).is_err());
    }
}
