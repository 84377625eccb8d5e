//! Orders of polynomials: the least e >= 1 with g | x^e - 1.
//!
//! Powers of x contribute nothing (x^r f and f get the same order, and a
//! nonzero constant has order 1), so every entry point strips them first.
//! `order_bruteforce` scans e = 1, 2, ... directly; the structured routes go
//! through roots in extension fields: an irreducible g of degree m has the
//! order of any of its roots in F_{q^m}*, g^k multiplies that by the least
//! power of the characteristic >= k, and a general g is the lcm over its
//! repeated irreducible parts. `order_any` never factors into irreducibles
//! outright; squarefree/distinct-degree splitting plus dividing primes out of
//! q^d - 1 is enough, because every degree-d part has order dividing q^d - 1.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fields::{element_order, int_factorize, lcm_u64, Field};
use crate::poly::Polynomial;

/// Default ceiling for the brute-force scan.
pub const DEFAULT_SCAN_LIMIT: u64 = 10_000_000;

/// Buckets with more divisors than this are reported unrefined (the order of
/// the product instead of per-order pieces). Purely a witness-detail guard.
const REFINE_DIVISOR_CAP: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderMethod {
    /// Direct scan over e.
    Brute,
    /// Order of a root of an irreducible polynomial.
    ViaRoot,
    /// Root order times a power of the characteristic.
    ViaPower,
    /// Lcm over coprime parts.
    ViaLcm,
}

impl OrderMethod {
    pub fn tag(&self) -> &'static str {
        match self {
            OrderMethod::Brute => "brute",
            OrderMethod::ViaRoot => "via-root",
            OrderMethod::ViaPower => "via-power",
            OrderMethod::ViaLcm => "via-lcm",
        }
    }
}

impl std::fmt::Display for OrderMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

/// One coprime piece of the order computation. `factor` is squarefree with
/// all irreducible parts sharing the same degree and the same order (it is
/// usually a single irreducible); `lifted_order` is the order of
/// factor^multiplicity.
#[derive(Clone, Debug)]
pub struct FactorOrder {
    pub factor: Polynomial,
    pub multiplicity: u32,
    pub order: u64,
    pub lifted_order: u64,
}

#[derive(Clone, Debug)]
pub struct OrderResult {
    pub order: u64,
    pub method: OrderMethod,
    /// Powers of x removed before computing.
    pub stripped_x: usize,
    pub witness: Vec<FactorOrder>,
}

fn order_overflow() -> Error {
    Error::InvalidParameter("order exceeds u64".into())
}

fn mul_ord(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or_else(order_overflow)
}

/// Split g = x^r f with f(0) != 0; errors only on the zero polynomial.
pub(crate) fn strip_x_parts(g: &Polynomial) -> Result<(usize, Polynomial)> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let r = g
        .coefficients()
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero polynomial has a nonzero coefficient");
    if r == 0 {
        return Ok((0, g.clone()));
    }
    let field = g.field().clone();
    let reps = g.reps()[r..].to_vec();
    Ok((r, Polynomial::from_reps(field, reps)))
}

// ---------------------------------------------------------------------------
// brute force
// ---------------------------------------------------------------------------

pub fn order_bruteforce(g: &Polynomial) -> Result<u64> {
    order_bruteforce_with_limit(g, DEFAULT_SCAN_LIMIT)
}

/// Scan e = 1, 2, ... keeping x^e mod g updated in place.
pub fn order_bruteforce_with_limit(g: &Polynomial, limit: u64) -> Result<u64> {
    let (_, f) = strip_x_parts(g)?;
    let f = f.monic();
    if f.is_constant() {
        return Ok(1);
    }
    let field = f.field().clone();
    let n = f.degree().unwrap();
    let modulus = f.reps();
    // residue of x^e, degree < n, low first
    let mut r = vec![field.zero_rep(); n];
    r[0] = field.one_rep();
    let one = field.one_rep();
    for e in 1..=limit {
        // multiply by x: shift up, then reduce the overflow against the
        // monic modulus
        let top = r.pop().unwrap();
        r.insert(0, field.zero_rep());
        if !field.rep_is_zero(&top) {
            for (j, mj) in modulus.iter().take(n).enumerate() {
                if field.rep_is_zero(mj) {
                    continue;
                }
                let t = field.mul_rep(&top, mj);
                r[j] = field.sub_rep(&r[j], &t);
            }
        }
        if r[0] == one && r[1..].iter().all(|c| field.rep_is_zero(c)) {
            return Ok(e);
        }
    }
    Err(Error::ScanLimitExceeded { limit })
}

// ---------------------------------------------------------------------------
// structured routes
// ---------------------------------------------------------------------------

/// Order of an irreducible polynomial: the multiplicative order of any of its
/// roots (a nonzero constant would not be irreducible; x itself maps to 1 by
/// the stripping convention).
pub fn order_irreducible(g: &Polynomial) -> Result<u64> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !g.is_irreducible() {
        return Err(Error::Reducible(g.to_string()));
    }
    if g.divisible_by_x() {
        // an irreducible with zero constant term is a unit multiple of x
        return Ok(1);
    }
    let g = g.monic();
    let field = g.field().clone();
    match g.degree().unwrap() {
        1 => {
            let root = -&g.coeff(0);
            element_order(&root)
        }
        _ => {
            let ext = Field::extension_preverified(
                &field,
                g,
                crate::fields::DEFAULT_MAX_CARDINALITY,
            )?;
            let root = ext.adjoined_root().expect("extension field");
            element_order(&root)
        }
    }
}

/// Least power of p that is >= k.
pub(crate) fn lift_multiplicity(p: u64, k: u64) -> Result<u64> {
    let mut pt = 1u64;
    while pt < k {
        pt = pt.checked_mul(p).ok_or_else(order_overflow)?;
    }
    Ok(pt)
}

/// Order of g^k for irreducible g: ord(g) * p^t with t least such that
/// p^t >= k.
pub fn order_power(g: &Polynomial, k: u32) -> Result<u64> {
    if k == 0 {
        return Err(Error::InvalidParameter("exponent must be >= 1".into()));
    }
    let e = order_irreducible(g)?;
    if g.divisible_by_x() {
        return Ok(1);
    }
    let p = g.field().characteristic();
    mul_ord(e, lift_multiplicity(p, k as u64)?)
}

/// f = prod z_i^i with each z_i squarefree and the z_i pairwise coprime.
/// Standard characteristic-p refinement: when every exponent is divisible by
/// p the derivative vanishes and we recurse on the p-th root.
fn squarefree_decomposition(f: &Polynomial) -> Result<Vec<(Polynomial, u32)>> {
    let mut out = Vec::new();
    let fp = f.derivative();
    if fp.is_zero() {
        let u = pth_root(f)?;
        for (z, m) in squarefree_decomposition(&u)? {
            let p32 = u32::try_from(f.field().characteristic())
                .map_err(|_| Error::InvalidParameter("characteristic exceeds u32".into()))?;
            out.push((z, m.checked_mul(p32).ok_or_else(order_overflow)?));
        }
        return Ok(out);
    }
    let mut c = Polynomial::gcd(f, &fp);
    let mut w = f.div_exact(&c)?;
    let mut i = 1u32;
    while !w.is_one() {
        let y = Polynomial::gcd(&w, &c);
        let z = w.div_exact(&y)?;
        if !z.is_one() {
            out.push((z, i));
        }
        w = y;
        c = c.div_exact(&w)?;
        i = i.checked_add(1).ok_or_else(order_overflow)?;
    }
    if !c.is_one() {
        let u = pth_root(&c)?;
        let p32 = u32::try_from(f.field().characteristic())
            .map_err(|_| Error::InvalidParameter("characteristic exceeds u32".into()))?;
        for (z, m) in squarefree_decomposition(&u)? {
            out.push((z, m.checked_mul(p32).ok_or_else(order_overflow)?));
        }
    }
    Ok(out)
}

/// For f = u(x^p), recover u. Coefficient p-th roots are c^(Q/p) since the
/// Frobenius is inverted by raising to Q/p in F_Q.
fn pth_root(f: &Polynomial) -> Result<Polynomial> {
    let field = f.field().clone();
    let p = field.characteristic() as usize;
    let q = field.cardinality();
    let deg = f.degree().unwrap_or(0);
    let mut reps = Vec::with_capacity(deg / p + 1);
    for (j, c) in f.coefficients().iter().enumerate() {
        if j % p == 0 {
            reps.push(c.pow(q / p as u64).rep().clone());
        } else if !c.is_zero() {
            return Err(Error::Internal(format!("{f} is not a polynomial in x^{p}")));
        }
    }
    Ok(Polynomial::from_reps(field, reps))
}

/// Split squarefree v (v(0) != 0) into products of irreducible factors of
/// equal degree d, using x^(q^d) - x sweeps.
fn distinct_degree_split(v: &Polynomial) -> Result<Vec<(Polynomial, u32)>> {
    let field = v.field().clone();
    let q = field.cardinality();
    let x = Polynomial::x(&field);
    let mut v = v.monic();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut d = 0u32;
    loop {
        let n = match v.degree() {
            None | Some(0) => break,
            Some(n) => n,
        };
        d += 1;
        if n < 2 * d as usize {
            // every factor of degree < d is gone, so v is irreducible
            out.push((v.clone(), n as u32));
            break;
        }
        h = h.pow_mod(q, &v)?;
        let w = Polynomial::gcd(&(&h - &x), &v);
        if !w.is_one() {
            out.push((w.clone(), d));
            v = v.div_exact(&w)?;
            if v.degree().unwrap_or(0) >= 1 {
                h = h.rem(&v)?;
            }
        }
    }
    Ok(out)
}

/// Order of a product of distinct degree-d irreducibles: divide primes out of
/// q^d - 1, testing x^e = 1 mod w by modular exponentiation.
fn part_order(w: &Polynomial, d: u32, field: &Arc<Field>) -> Result<u64> {
    let q = field.cardinality();
    let big = (0..d).try_fold(1u128, |acc, _| {
        acc.checked_mul(q as u128).filter(|&v| v <= u64::MAX as u128)
    });
    let e_max = match big {
        Some(v) => v as u64 - 1,
        None => return Err(order_overflow()),
    };
    let x = Polynomial::x(field);
    let mut ord = e_max;
    for (r, _) in int_factorize(e_max) {
        while ord % r == 0 {
            let cand = ord / r;
            if x.pow_mod(cand, w)?.is_one() {
                ord = cand;
            } else {
                break;
            }
        }
    }
    Ok(ord)
}

/// All divisors of n given its factorization, ascending.
fn divisors_from_factors(factors: &[(u64, u32)], cap: usize) -> Option<Vec<u64>> {
    let mut out = vec![1u64];
    for &(r, k) in factors {
        let prev = out.clone();
        let mut rk = 1u64;
        for _ in 0..k {
            rk = rk.checked_mul(r)?;
            for d in &prev {
                out.push(d.checked_mul(rk)?);
                if out.len() > cap {
                    return None;
                }
            }
        }
    }
    out.sort_unstable();
    Some(out)
}

/// Peel a same-degree bucket apart by exact order: ascending over the
/// divisors of the bucket order, gcd against x^delta - 1 captures exactly the
/// factors of order delta (smaller orders were already removed).
fn refine_by_order(w: &Polynomial, bucket_order: u64) -> Result<Vec<(Polynomial, u64)>> {
    let divisors = divisors_from_factors(&int_factorize(bucket_order), REFINE_DIVISOR_CAP);
    let Some(divisors) = divisors else {
        return Ok(vec![(w.clone(), bucket_order)]);
    };
    let field = w.field().clone();
    let x = Polynomial::x(&field);
    let one = Polynomial::one(&field);
    let mut remaining = w.clone();
    let mut out = Vec::new();
    for &delta in &divisors {
        if remaining.is_one() {
            break;
        }
        if delta == bucket_order {
            out.push((remaining.clone(), bucket_order));
            remaining = one.clone();
            break;
        }
        let t = &x.pow_mod(delta, &remaining)? - &one;
        let g = Polynomial::gcd(&t, &remaining);
        if !g.is_one() {
            remaining = remaining.div_exact(&g)?;
            out.push((g, delta));
        }
    }
    if !remaining.is_one() {
        out.push((remaining, bucket_order));
    }
    Ok(out)
}

/// Order of an arbitrary nonzero polynomial, with a witness decomposition.
pub fn order_any(g: &Polynomial) -> Result<OrderResult> {
    let (stripped_x, f) = strip_x_parts(g)?;
    let f = f.monic();
    if f.is_constant() {
        return Ok(OrderResult {
            order: 1,
            method: OrderMethod::ViaLcm,
            stripped_x,
            witness: Vec::new(),
        });
    }
    let field = f.field().clone();
    let p = field.characteristic();

    let mut witness: Vec<FactorOrder> = Vec::new();
    let mut total = 1u64;
    for (z, mult) in squarefree_decomposition(&f)? {
        let lift = lift_multiplicity(p, mult as u64)?;
        for (w, d) in distinct_degree_split(&z)? {
            let bucket_order = part_order(&w, d, &field)?;
            for (piece, ord) in refine_by_order(&w, bucket_order)? {
                let lifted = mul_ord(ord, lift)?;
                total = lcm_u64(total, lifted)?;
                witness.push(FactorOrder { factor: piece, multiplicity: mult, order: ord, lifted_order: lifted });
            }
        }
    }
    witness.sort_by(|a, b| {
        a.factor
            .sort_key()
            .cmp(&b.factor.sort_key())
            .then(a.multiplicity.cmp(&b.multiplicity))
    });

    let method = if witness.len() == 1 && witness[0].factor.is_irreducible() {
        if witness[0].multiplicity == 1 {
            OrderMethod::ViaRoot
        } else {
            OrderMethod::ViaPower
        }
    } else {
        OrderMethod::ViaLcm
    };
    Ok(OrderResult { order: total, method, stripped_x, witness })
}

/// Just the number.
pub fn order_of(g: &Polynomial) -> Result<u64> {
    Ok(order_any(g)?.order)
}
