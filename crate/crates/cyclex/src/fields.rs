//! Finite fields at desk scale.
//!
//! A field is either a prime field F_p or an extension base[y]/(h(y)) with h
//! monic irreducible over the base; non-prime ground fields F_{p^k} are just
//! one more level of the same tower, so nothing here ever needs subfield
//! embeddings. Elements are coefficient vectors over the immediate base,
//! always fully reduced. Enumeration, primitive-element search, and the
//! default-modulus search all walk ascending index order: the element with
//! index i has coefficients given by the base-B digits of i, least degree
//! first.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Default ceiling on field cardinality for on-demand constructions.
pub const DEFAULT_MAX_CARDINALITY: u64 = 1 << 52;

// ---------------------------------------------------------------------------
// integer utilities
// ---------------------------------------------------------------------------

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm_u64(a: u64, b: u64) -> Result<u64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    let l = (a / gcd_u64(a, b)) as u128 * b as u128;
    u64::try_from(l).map_err(|_| Error::InvalidParameter("lcm exceeds u64".into()))
}

pub(crate) fn modmul_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn modpow_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = modmul_u64(acc, base, m);
        }
        base = modmul_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|dd| dd <= n) {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization by trial division, sorted ascending.
/// `int_factorize(1)` is the empty product.
pub fn int_factorize(n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0, "cannot factor 0");
    let mut n = n;
    let mut out = Vec::new();
    let mut push = |p: u64, k: u32| {
        if k > 0 {
            out.push((p, k));
        }
    };
    let mut k = 0;
    while n % 2 == 0 {
        n /= 2;
        k += 1;
    }
    push(2, k);
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|dd| dd <= n) {
        let mut k = 0;
        while n % d == 0 {
            n /= d;
            k += 1;
        }
        push(d, k);
        d += 2;
    }
    if n > 1 {
        push(n, 1);
    }
    out
}

pub(crate) fn euler_phi(n: u64) -> u64 {
    let mut phi = n;
    for (p, _) in int_factorize(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

/// Least d >= 1 with q^d = 1 (mod e). Errors unless gcd(q, e) = 1.
pub fn mult_order_mod(q: u64, e: u64) -> Result<u64> {
    if q == 0 || e == 0 {
        return Err(Error::InvalidParameter("mult_order_mod needs q, e >= 1".into()));
    }
    if e == 1 {
        return Ok(1);
    }
    let qr = q % e;
    if gcd_u64(qr, e) != 1 {
        return Err(Error::NotCoprime { q, n: e });
    }
    let phi = euler_phi(e);
    let mut d = phi;
    for (r, _) in int_factorize(phi) {
        while d % r == 0 && modpow_u64(qr, d / r, e) == 1 {
            d /= r;
        }
    }
    Ok(d)
}

// ---------------------------------------------------------------------------
// prime powers
// ---------------------------------------------------------------------------

/// q = p^k with p prime, k >= 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimePower {
    p: u64,
    k: u32,
    q: u64,
}

impl PrimePower {
    pub fn new(q: u64) -> Result<Self> {
        if q < 2 {
            return Err(Error::NotPrimePower(q));
        }
        let factors = int_factorize(q);
        if factors.len() != 1 {
            return Err(Error::NotPrimePower(q));
        }
        let (p, k) = factors[0];
        Ok(PrimePower { p, k, q })
    }

    pub fn from_prime(p: u64, k: u32) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::InvalidParameter("exponent must be >= 1".into()));
        }
        let q = (0..k)
            .try_fold(1u64, |acc, _| acc.checked_mul(p))
            .ok_or_else(|| Error::InvalidParameter(format!("{p}^{k} exceeds u64")))?;
        Ok(PrimePower { p, k, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> u64 {
        self.q
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}^{}", self.p, self.k)
        }
    }
}

// ---------------------------------------------------------------------------
// element representation
// ---------------------------------------------------------------------------

/// Raw element data, interpreted by the field that owns it. Extension reps
/// always carry exactly `degree` coefficients so equality is canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) enum Rep {
    Prime(u64),
    Ext(Vec<Rep>),
}

// ---------------------------------------------------------------------------
// fields
// ---------------------------------------------------------------------------

/// A prime field or an extension field, shared behind `Arc`.
pub struct Field {
    base: Option<Arc<Field>>,
    modulus: Option<Polynomial>,
    mod_reps: Vec<Rep>,
    p: u64,
    degree: u32,
    cardinality: u64,
    level: u32,
}

const LEVEL_SYMBOLS: [char; 4] = ['a', 'b', 'c', 'd'];

impl Field {
    /// The prime field F_p.
    pub fn prime(p: u64) -> Result<Arc<Field>> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        if p > DEFAULT_MAX_CARDINALITY {
            return Err(Error::FieldTooLarge { cardinality: p as u128, limit: DEFAULT_MAX_CARDINALITY });
        }
        Ok(Arc::new(Field {
            base: None,
            modulus: None,
            mod_reps: Vec::new(),
            p,
            degree: 1,
            cardinality: p,
            level: 0,
        }))
    }

    /// base[y]/(modulus) with modulus monic irreducible of degree >= 2 over base.
    pub fn extension(base: &Arc<Field>, modulus: Polynomial) -> Result<Arc<Field>> {
        Self::extension_with_limit(base, modulus, DEFAULT_MAX_CARDINALITY)
    }

    pub fn extension_with_limit(
        base: &Arc<Field>,
        modulus: Polynomial,
        limit: u64,
    ) -> Result<Arc<Field>> {
        Self::extension_inner(base, modulus, limit, true)
    }

    /// Caller vouches that the modulus is irreducible (already tested).
    pub(crate) fn extension_preverified(
        base: &Arc<Field>,
        modulus: Polynomial,
        limit: u64,
    ) -> Result<Arc<Field>> {
        Self::extension_inner(base, modulus, limit, false)
    }

    fn extension_inner(
        base: &Arc<Field>,
        modulus: Polynomial,
        limit: u64,
        check_irreducible: bool,
    ) -> Result<Arc<Field>> {
        if modulus.field().as_ref() != base.as_ref() {
            return Err(Error::FieldMismatch);
        }
        let deg = match modulus.degree() {
            Some(d) if d >= 2 => d as u32,
            _ => return Err(Error::BadModulus { expected: 2, found: modulus.to_string() }),
        };
        if !modulus.is_monic() {
            return Err(Error::BadModulus { expected: deg, found: modulus.to_string() });
        }
        if check_irreducible && !modulus.is_irreducible() {
            return Err(Error::Reducible(modulus.to_string()));
        }
        let card = (0..deg).try_fold(1u128, |acc, _| {
            acc.checked_mul(base.cardinality as u128)
                .filter(|&c| c <= limit as u128)
                .ok_or(Error::FieldTooLarge {
                    cardinality: u128::from(base.cardinality)
                        .checked_pow(deg)
                        .unwrap_or(u128::MAX),
                    limit,
                })
        })?;
        let level = base.level + 1;
        if level as usize > LEVEL_SYMBOLS.len() {
            return Err(Error::InvalidParameter("extension tower too deep".into()));
        }
        let mod_reps = modulus.reps().to_vec();
        Ok(Arc::new(Field {
            base: Some(base.clone()),
            modulus: Some(modulus),
            mod_reps,
            p: base.p,
            degree: deg,
            cardinality: card as u64,
            level,
        }))
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// Degree over the immediate base field (1 for prime fields).
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn cardinality(&self) -> u64 {
        self.cardinality
    }

    pub fn modulus(&self) -> Option<&Polynomial> {
        self.modulus.as_ref()
    }

    pub fn base(&self) -> Option<&Arc<Field>> {
        self.base.as_ref()
    }

    pub fn is_prime_field(&self) -> bool {
        self.base.is_none()
    }

    /// p^k description of the immediate base field (p itself for prime fields).
    pub fn base_prime_power(&self) -> PrimePower {
        match &self.base {
            None => PrimePower { p: self.p, k: 1, q: self.p },
            Some(b) => {
                let mut k = 0;
                let mut c = b.cardinality;
                while c > 1 {
                    c /= self.p;
                    k += 1;
                }
                PrimePower { p: self.p, k, q: b.cardinality }
            }
        }
    }

    /// Generator symbol used when printing elements ('a' for the first
    /// extension level, then 'b', 'c', 'd').
    pub fn symbol(&self) -> Option<char> {
        if self.level == 0 {
            None
        } else {
            Some(LEVEL_SYMBOLS[self.level as usize - 1])
        }
    }

    /// Tower description, e.g. "F_16 = F_4[b]/(x^2 + x + a)".
    pub fn describe(&self) -> String {
        match (&self.base, &self.modulus) {
            (Some(b), Some(m)) => {
                format!("F_{} = F_{}[{}]/({})", self.cardinality, b.cardinality, self.symbol().unwrap(), m)
            }
            _ => format!("F_{}", self.p),
        }
    }

    // -- element constructors ------------------------------------------------

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        FieldElement { field: self.clone(), rep: self.zero_rep() }
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        FieldElement { field: self.clone(), rep: self.one_rep() }
    }

    /// The image of the integer n (i.e. n mod p, embedded).
    pub fn element_from_u64(self: &Arc<Self>, n: u64) -> FieldElement {
        FieldElement { field: self.clone(), rep: self.rep_from_u64(n) }
    }

    /// Element with the given ascending-order index in [0, cardinality).
    pub fn element_from_index(self: &Arc<Self>, i: u64) -> Result<FieldElement> {
        if i >= self.cardinality {
            return Err(Error::InvalidParameter(format!(
                "index {i} out of range for a field of {} elements",
                self.cardinality
            )));
        }
        Ok(FieldElement { field: self.clone(), rep: self.rep_from_index(i) })
    }

    /// All elements in ascending index order.
    pub fn elements(self: &Arc<Self>) -> impl Iterator<Item = FieldElement> {
        let field = self.clone();
        (0..field.cardinality()).map(move |i| FieldElement {
            field: field.clone(),
            rep: field.rep_from_index(i),
        })
    }

    /// Lift an element of the immediate base field into this one.
    pub fn embed(self: &Arc<Self>, e: &FieldElement) -> Result<FieldElement> {
        let base = self.base.as_ref().ok_or(Error::FieldMismatch)?;
        if e.field.as_ref() != base.as_ref() {
            return Err(Error::FieldMismatch);
        }
        let mut coeffs = vec![base.zero_rep(); self.degree as usize];
        coeffs[0] = e.rep.clone();
        Ok(FieldElement { field: self.clone(), rep: Rep::Ext(coeffs) })
    }

    /// The residue of the adjoined variable y (None for prime fields).
    pub fn adjoined_root(self: &Arc<Self>) -> Option<FieldElement> {
        let base = self.base.as_ref()?;
        let mut coeffs = vec![base.zero_rep(); self.degree as usize];
        coeffs[1] = base.one_rep();
        Some(FieldElement { field: self.clone(), rep: Rep::Ext(coeffs) })
    }

    // -- raw rep arithmetic ---------------------------------------------------

    pub(crate) fn zero_rep(&self) -> Rep {
        match &self.base {
            None => Rep::Prime(0),
            Some(b) => Rep::Ext(vec![b.zero_rep(); self.degree as usize]),
        }
    }

    pub(crate) fn one_rep(&self) -> Rep {
        match &self.base {
            None => Rep::Prime(1),
            Some(b) => {
                let mut v = vec![b.zero_rep(); self.degree as usize];
                v[0] = b.one_rep();
                Rep::Ext(v)
            }
        }
    }

    pub(crate) fn rep_from_u64(&self, n: u64) -> Rep {
        match &self.base {
            None => Rep::Prime(n % self.p),
            Some(b) => {
                let mut v = vec![b.zero_rep(); self.degree as usize];
                v[0] = b.rep_from_u64(n);
                Rep::Ext(v)
            }
        }
    }

    pub(crate) fn rep_is_zero(&self, r: &Rep) -> bool {
        match r {
            Rep::Prime(v) => *v == 0,
            Rep::Ext(v) => v.iter().all(|c| self.base.as_ref().unwrap().rep_is_zero(c)),
        }
    }

    pub(crate) fn rep_is_one(&self, r: &Rep) -> bool {
        *r == self.one_rep()
    }

    pub(crate) fn add_rep(&self, a: &Rep, b: &Rep) -> Rep {
        match (a, b, &self.base) {
            (Rep::Prime(x), Rep::Prime(y), None) => {
                let s = x + y;
                Rep::Prime(if s >= self.p { s - self.p } else { s })
            }
            (Rep::Ext(x), Rep::Ext(y), Some(base)) => {
                Rep::Ext(x.iter().zip(y).map(|(u, v)| base.add_rep(u, v)).collect())
            }
            _ => unreachable!("rep shape mismatch"),
        }
    }

    pub(crate) fn neg_rep(&self, a: &Rep) -> Rep {
        match (a, &self.base) {
            (Rep::Prime(x), None) => Rep::Prime(if *x == 0 { 0 } else { self.p - x }),
            (Rep::Ext(x), Some(base)) => Rep::Ext(x.iter().map(|u| base.neg_rep(u)).collect()),
            _ => unreachable!("rep shape mismatch"),
        }
    }

    pub(crate) fn sub_rep(&self, a: &Rep, b: &Rep) -> Rep {
        self.add_rep(a, &self.neg_rep(b))
    }

    pub(crate) fn mul_rep(&self, a: &Rep, b: &Rep) -> Rep {
        match (a, b, &self.base) {
            (Rep::Prime(x), Rep::Prime(y), None) => Rep::Prime(modmul_u64(*x, *y, self.p)),
            (Rep::Ext(x), Rep::Ext(y), Some(base)) => {
                let m = self.degree as usize;
                let mut tmp = vec![base.zero_rep(); 2 * m - 1];
                for (i, xi) in x.iter().enumerate() {
                    if base.rep_is_zero(xi) {
                        continue;
                    }
                    for (j, yj) in y.iter().enumerate() {
                        if base.rep_is_zero(yj) {
                            continue;
                        }
                        let prod = base.mul_rep(xi, yj);
                        tmp[i + j] = base.add_rep(&tmp[i + j], &prod);
                    }
                }
                for i in (m..tmp.len()).rev() {
                    if base.rep_is_zero(&tmp[i]) {
                        continue;
                    }
                    let c = std::mem::replace(&mut tmp[i], base.zero_rep());
                    for (j, mj) in self.mod_reps.iter().take(m).enumerate() {
                        if base.rep_is_zero(mj) {
                            continue;
                        }
                        let t = base.mul_rep(&c, mj);
                        tmp[i - m + j] = base.sub_rep(&tmp[i - m + j], &t);
                    }
                }
                tmp.truncate(m);
                Rep::Ext(tmp)
            }
            _ => unreachable!("rep shape mismatch"),
        }
    }

    pub(crate) fn pow_rep(&self, a: &Rep, mut e: u64) -> Rep {
        let mut acc = self.one_rep();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_rep(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul_rep(&base, &base);
            }
        }
        acc
    }

    pub(crate) fn inv_rep(&self, a: &Rep) -> Result<Rep> {
        if self.rep_is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow_rep(a, self.cardinality - 2))
    }

    pub(crate) fn rep_from_index(&self, i: u64) -> Rep {
        match &self.base {
            None => Rep::Prime(i),
            Some(b) => {
                let card = b.cardinality;
                let mut i = i;
                let mut v = Vec::with_capacity(self.degree as usize);
                for _ in 0..self.degree {
                    v.push(b.rep_from_index(i % card));
                    i /= card;
                }
                Rep::Ext(v)
            }
        }
    }

    pub(crate) fn rep_index(&self, r: &Rep) -> u64 {
        match (r, &self.base) {
            (Rep::Prime(v), None) => *v,
            (Rep::Ext(v), Some(b)) => {
                let card = b.cardinality;
                v.iter().rev().fold(0u64, |acc, c| acc * card + b.rep_index(c))
            }
            _ => unreachable!("rep shape mismatch"),
        }
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        if std::ptr::eq(self, other) {
            return true;
        }
        self.p == other.p
            && self.degree == other.degree
            && self.cardinality == other.cardinality
            && self.mod_reps == other.mod_reps
            && match (&self.base, &other.base) {
                (None, None) => true,
                (Some(a), Some(b)) => a.as_ref() == b.as_ref(),
                _ => false,
            }
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.describe())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.cardinality)
    }
}

// ---------------------------------------------------------------------------
// field construction helpers
// ---------------------------------------------------------------------------

/// First monic irreducible of degree m over `base`, in ascending index order
/// of the non-leading coefficient vector.
pub fn find_irreducible_modulus(base: &Arc<Field>, m: u32) -> Result<Polynomial> {
    if m < 2 {
        return Err(Error::InvalidParameter("modulus search needs degree >= 2".into()));
    }
    let card = base.cardinality() as u128;
    let total = (0..m).try_fold(1u128, |acc, _| acc.checked_mul(card)).ok_or(
        Error::FieldTooLarge { cardinality: u128::MAX, limit: DEFAULT_MAX_CARDINALITY },
    )?;
    let mut idx: u128 = 0;
    while idx < total {
        let mut reps = Vec::with_capacity(m as usize + 1);
        let mut i = idx;
        for _ in 0..m {
            reps.push(base.rep_from_index((i % card) as u64));
            i /= card;
        }
        reps.push(base.one_rep());
        let cand = Polynomial::from_reps(base.clone(), reps);
        if cand.is_irreducible() {
            return Ok(cand);
        }
        idx += 1;
    }
    Err(Error::Internal(format!("no irreducible of degree {m} over {base}")))
}

/// F_{q^m}, built as F_q[y]/(h). With k > 1 the ground field F_q = F_{p^k} is
/// itself built as F_p[a]/(g) with g chosen deterministically; `modulus` (over
/// F_q, degree m) defaults to the first irreducible in ascending index order.
pub fn make_field(q: PrimePower, m: u32, modulus: Option<Polynomial>) -> Result<Arc<Field>> {
    make_field_with(q, m, modulus, None, DEFAULT_MAX_CARDINALITY)
}

pub fn make_field_with(
    q: PrimePower,
    m: u32,
    modulus: Option<Polynomial>,
    base_modulus: Option<Polynomial>,
    limit: u64,
) -> Result<Arc<Field>> {
    if m == 0 {
        return Err(Error::InvalidParameter("extension degree must be >= 1".into()));
    }
    let prime = Field::prime(q.p())?;
    let base = if q.k() == 1 {
        if let Some(g) = base_modulus {
            let _ = g;
            return Err(Error::InvalidParameter("base modulus given for a prime ground field".into()));
        }
        prime
    } else {
        let g = match base_modulus {
            Some(g) => {
                if g.degree() != Some(q.k() as usize) {
                    return Err(Error::BadModulus { expected: q.k(), found: g.to_string() });
                }
                g
            }
            None => find_irreducible_modulus(&prime, q.k())?,
        };
        Field::extension_with_limit(&prime, g, limit)?
    };
    if m == 1 {
        if modulus.is_some() {
            return Err(Error::InvalidParameter("modulus given for a degree-1 extension".into()));
        }
        return Ok(base);
    }
    let h = match modulus {
        Some(h) => {
            if h.degree() != Some(m as usize) {
                return Err(Error::BadModulus { expected: m, found: h.to_string() });
            }
            h
        }
        None => find_irreducible_modulus(&base, m)?,
    };
    Field::extension_with_limit(&base, h, limit)
}

// ---------------------------------------------------------------------------
// elements
// ---------------------------------------------------------------------------

#[derive(Clone)]
pub struct FieldElement {
    field: Arc<Field>,
    rep: Rep,
}

impl FieldElement {
    pub(crate) fn from_rep(field: Arc<Field>, rep: Rep) -> Self {
        FieldElement { field, rep }
    }

    pub(crate) fn rep(&self) -> &Rep {
        &self.rep
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.field.rep_is_zero(&self.rep)
    }

    pub fn is_one(&self) -> bool {
        self.field.rep_is_one(&self.rep)
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        FieldElement { field: self.field.clone(), rep: self.field.pow_rep(&self.rep, e) }
    }

    pub fn inverse(&self) -> Result<FieldElement> {
        Ok(FieldElement { field: self.field.clone(), rep: self.field.inv_rep(&self.rep)? })
    }

    /// Position of this element in ascending enumeration order.
    pub fn index(&self) -> u64 {
        self.field.rep_index(&self.rep)
    }

    /// Constant-coefficient downcast into the immediate base field.
    pub fn to_base(&self) -> Option<FieldElement> {
        match (&self.rep, self.field.base()) {
            (Rep::Ext(v), Some(base)) => {
                if v[1..].iter().all(|c| base.rep_is_zero(c)) {
                    Some(FieldElement { field: base.clone(), rep: v[0].clone() })
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    fn check_same_field(&self, other: &FieldElement) {
        assert!(
            self.field.as_ref() == other.field.as_ref(),
            "elements of different fields: {} vs {}",
            self.field,
            other.field
        );
    }

    /// True when the printed form is a single token (digits or a pure power
    /// of the generator), so it may appear unparenthesized as a coefficient.
    pub(crate) fn display_is_atomic(&self) -> bool {
        match &self.rep {
            Rep::Prime(_) => true,
            Rep::Ext(v) => {
                let base = self.field.base().unwrap();
                let nonzero: Vec<usize> =
                    (0..v.len()).filter(|&j| !base.rep_is_zero(&v[j])).collect();
                match nonzero.as_slice() {
                    [] => true,
                    [0] => FieldElement { field: base.clone(), rep: v[0].clone() }.display_is_atomic(),
                    [j] => base.rep_is_one(&v[*j]),
                    _ => false,
                }
            }
        }
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.as_ref() == other.field.as_ref() && self.rep == other.rep
    }
}

impl Eq for FieldElement {}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.cardinality().hash(state);
        self.rep.hash(state);
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self, self.field)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.rep {
            Rep::Prime(v) => write!(f, "{v}"),
            Rep::Ext(coeffs) => {
                let base = self.field.base().unwrap();
                let sym = self.field.symbol().unwrap();
                let mut first = true;
                for j in (0..coeffs.len()).rev() {
                    if base.rep_is_zero(&coeffs[j]) {
                        continue;
                    }
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    let c = FieldElement { field: base.clone(), rep: coeffs[j].clone() };
                    if j == 0 {
                        write!(f, "{c}")?;
                    } else {
                        if !c.is_one() {
                            if c.display_is_atomic() {
                                write!(f, "{c}")?;
                            } else {
                                write!(f, "({c})")?;
                            }
                        }
                        if j == 1 {
                            write!(f, "{sym}")?;
                        } else {
                            write!(f, "{sym}^{j}")?;
                        }
                    }
                }
                if first {
                    write!(f, "0")?;
                }
                Ok(())
            }
        }
    }
}

macro_rules! element_binop {
    ($trait:ident, $method:ident, $rep_op:ident) => {
        impl std::ops::$trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.check_same_field(rhs);
                FieldElement {
                    field: self.field.clone(),
                    rep: self.field.$rep_op(&self.rep, &rhs.rep),
                }
            }
        }
    };
}

element_binop!(Add, add, add_rep);
element_binop!(Sub, sub, sub_rep);
element_binop!(Mul, mul, mul_rep);

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { field: self.field.clone(), rep: self.field.neg_rep(&self.rep) }
    }
}

// ---------------------------------------------------------------------------
// multiplicative orders and primitive elements
// ---------------------------------------------------------------------------

/// Multiplicative order, computed by dividing primes out of cardinality - 1.
pub fn element_order(x: &FieldElement) -> Result<u64> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    let n = x.field().cardinality() - 1;
    let factors = int_factorize(n);
    Ok(element_order_with_factors(x, n, &factors))
}

/// Same, with the factorization of the group order supplied by the caller
/// (worth it when many orders are taken in one big field).
pub fn element_order_with_factors(
    x: &FieldElement,
    group_order: u64,
    factors: &[(u64, u32)],
) -> u64 {
    let mut ord = group_order;
    for &(r, _) in factors {
        while ord % r == 0 && x.pow(ord / r).is_one() {
            ord /= r;
        }
    }
    ord
}

/// First element with full order q^m - 1 in ascending index order.
pub fn find_primitive(field: &Arc<Field>) -> Result<FieldElement> {
    let n = field.cardinality() - 1;
    let factors = int_factorize(n.max(1));
    for i in 1..field.cardinality() {
        let x = field.element_from_index(i)?;
        if n == 1 || factors.iter().all(|&(r, _)| !x.pow(n / r).is_one()) {
            return Ok(x);
        }
    }
    Err(Error::Internal(format!("no primitive element in {field}")))
}
