//! Univariate polynomials over a [`Field`].
//!
//! Coefficients are stored low degree first with no trailing zeros (the zero
//! polynomial is an empty vector). Input accepts expression syntax
//! ("2x^3 - (a+1)x + 1", products and powers of parenthesized groups) and a
//! bracket form "[c0,c1,...]" listing coefficients from degree 0 up; output is
//! canonical descending form with no minus signs.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fields::{int_factorize, Field, FieldElement, Rep};

/// Parsed expressions refuse to expand past this degree.
const PARSE_DEGREE_CAP: usize = 100_000;

/// Ceiling for materializing x^e - 1 as an actual coefficient vector.
const MATERIALIZE_CAP: u64 = 1_000_000;

#[derive(Clone)]
pub struct Polynomial {
    field: Arc<Field>,
    coeffs: Vec<Rep>,
}

impl Polynomial {
    // -- constructors ---------------------------------------------------------

    pub(crate) fn from_reps(field: Arc<Field>, coeffs: Vec<Rep>) -> Polynomial {
        let mut p = Polynomial { field, coeffs };
        p.normalize();
        p
    }

    pub fn zero(field: &Arc<Field>) -> Polynomial {
        Polynomial { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Arc<Field>) -> Polynomial {
        Polynomial { field: field.clone(), coeffs: vec![field.one_rep()] }
    }

    pub fn x(field: &Arc<Field>) -> Polynomial {
        Polynomial { field: field.clone(), coeffs: vec![field.zero_rep(), field.one_rep()] }
    }

    pub fn constant(c: &FieldElement) -> Polynomial {
        Polynomial::from_reps(c.field().clone(), vec![c.rep().clone()])
    }

    pub fn monomial(c: &FieldElement, k: usize) -> Polynomial {
        let field = c.field().clone();
        let mut coeffs = vec![field.zero_rep(); k + 1];
        coeffs[k] = c.rep().clone();
        Polynomial::from_reps(field, coeffs)
    }

    /// Coefficients listed from degree 0 up.
    pub fn from_elements(field: &Arc<Field>, coeffs: Vec<FieldElement>) -> Result<Polynomial> {
        let mut reps = Vec::with_capacity(coeffs.len());
        for c in &coeffs {
            if c.field().as_ref() != field.as_ref() {
                return Err(Error::FieldMismatch);
            }
            reps.push(c.rep().clone());
        }
        Ok(Polynomial::from_reps(field.clone(), reps))
    }

    /// Integer coefficients from degree 0 up, reduced mod p (negatives fine).
    pub fn from_ints(field: &Arc<Field>, coeffs: &[i64]) -> Polynomial {
        let p = field.characteristic() as i64;
        let reps = coeffs.iter().map(|&c| field.rep_from_u64(c.rem_euclid(p) as u64)).collect();
        Polynomial::from_reps(field.clone(), reps)
    }

    /// x^e - 1 as an explicit polynomial (desk-scale e only).
    pub fn x_pow_minus_one(field: &Arc<Field>, e: u64) -> Result<Polynomial> {
        if e == 0 {
            return Ok(Polynomial::zero(field));
        }
        if e > MATERIALIZE_CAP {
            return Err(Error::InvalidParameter(format!(
                "x^{e} - 1 is too large to materialize (cap {MATERIALIZE_CAP})"
            )));
        }
        let mut coeffs = vec![field.zero_rep(); e as usize + 1];
        coeffs[0] = field.neg_rep(&field.one_rep());
        coeffs[e as usize] = field.one_rep();
        Ok(Polynomial::from_reps(field.clone(), coeffs))
    }

    fn normalize(&mut self) {
        while let Some(last) = self.coeffs.last() {
            if self.field.rep_is_zero(last) {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    // -- inspection -------------------------------------------------------------

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub(crate) fn reps(&self) -> &[Rep] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.rep_is_one(&self.coeffs[0])
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        match self.coeffs.get(i) {
            Some(r) => FieldElement::from_rep(self.field.clone(), r.clone()),
            None => self.field.zero(),
        }
    }

    pub fn coefficients(&self) -> Vec<FieldElement> {
        (0..self.coeffs.len()).map(|i| self.coeff(i)).collect()
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().map(|r| FieldElement::from_rep(self.field.clone(), r.clone()))
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|r| self.field.rep_is_one(r))
    }

    /// True if the constant coefficient is zero (and the polynomial is not).
    pub fn divisible_by_x(&self) -> bool {
        !self.is_zero() && self.field.rep_is_zero(&self.coeffs[0])
    }

    /// Sort key: degree first, then coefficient indices from the top degree
    /// down — i.e. ascending integer-index order within each degree.
    pub(crate) fn sort_key(&self) -> (usize, Vec<u64>) {
        (
            self.coeffs.len(),
            self.coeffs.iter().rev().map(|r| self.field.rep_index(r)).collect(),
        )
    }

    // -- arithmetic ---------------------------------------------------------------

    fn check_same_field(&self, other: &Polynomial) {
        assert!(
            self.field.as_ref() == other.field.as_ref(),
            "polynomials over different fields: {} vs {}",
            self.field,
            other.field
        );
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        let reps = self.coeffs.iter().map(|r| self.field.mul_rep(r, c.rep())).collect();
        Polynomial::from_reps(self.field.clone(), reps)
    }

    /// Monic associate (zero stays zero).
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.inverse().expect("nonzero leading coefficient")),
        }
    }

    pub fn divrem(&self, divisor: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.check_same_field(divisor);
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() < divisor.coeffs.len() {
            return Ok((Polynomial::zero(&self.field), self.clone()));
        }
        let field = &self.field;
        let lead_inv = field.inv_rep(&divisor.coeffs[dd])?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![field.zero_rep(); self.coeffs.len() - dd];
        for i in (dd..rem.len()).rev() {
            if field.rep_is_zero(&rem[i]) {
                continue;
            }
            let f = field.mul_rep(&rem[i], &lead_inv);
            for (j, dj) in divisor.coeffs.iter().enumerate() {
                if field.rep_is_zero(dj) {
                    continue;
                }
                let t = field.mul_rep(&f, dj);
                rem[i - dd + j] = field.sub_rep(&rem[i - dd + j], &t);
            }
            quot[i - dd] = f;
        }
        Ok((
            Polynomial::from_reps(field.clone(), quot),
            Polynomial::from_reps(field.clone(), rem),
        ))
    }

    pub fn rem(&self, divisor: &Polynomial) -> Result<Polynomial> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Quotient of an exact division; remainder must vanish.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        let (q, r) = self.divrem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Internal(format!("{self} is not divisible by {divisor}")));
        }
        Ok(q)
    }

    /// Monic gcd; gcd(f, 0) is the monic associate of f.
    pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
        a.check_same_field(b);
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.field);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// self^e mod modulus (modulus of degree >= 1).
    pub fn pow_mod(&self, e: u64, modulus: &Polynomial) -> Result<Polynomial> {
        if modulus.degree().unwrap_or(0) == 0 {
            return Err(Error::InvalidParameter("pow_mod needs a modulus of degree >= 1".into()));
        }
        let mut acc = Polynomial::one(&self.field).rem(modulus)?;
        let mut base = self.rem(modulus)?;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(modulus)?;
            }
            e >>= 1;
            if e > 0 {
                base = (&base * &base).rem(modulus)?;
            }
        }
        Ok(acc)
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let field = &self.field;
        let mut acc = field.zero_rep();
        for c in self.coeffs.iter().rev() {
            acc = field.mul_rep(&acc, x.rep());
            acc = field.add_rep(&acc, c);
        }
        FieldElement::from_rep(field.clone(), acc)
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero(&self.field);
        }
        let field = &self.field;
        let reps = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| field.mul_rep(c, &field.rep_from_u64(i as u64 + 1)))
            .collect();
        Polynomial::from_reps(field.clone(), reps)
    }

    /// Rabin's test: f of degree m over F_q is irreducible iff x^(q^m) = x
    /// mod f and x^(q^(m/r)) - x is coprime to f for every prime r | m.
    pub fn is_irreducible(&self) -> bool {
        let Some(deg) = self.degree() else { return false };
        if deg == 0 {
            return false;
        }
        if deg == 1 {
            return true;
        }
        let f = self.monic();
        let q = self.field.cardinality();
        let x = Polynomial::x(&self.field);
        let mut frob = Vec::with_capacity(deg + 1);
        frob.push(x.clone());
        for _ in 0..deg {
            let next = frob.last().unwrap().pow_mod(q, &f).expect("modulus has degree >= 2");
            frob.push(next);
        }
        if frob[deg] != x {
            return false;
        }
        for (r, _) in int_factorize(deg as u64) {
            let diff = &frob[(deg as u64 / r) as usize] - &x;
            if !Polynomial::gcd(&diff, &f).is_one() {
                return false;
            }
        }
        true
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.field.as_ref() == other.field.as_ref() && self.coeffs == other.coeffs
    }
}

impl Eq for Polynomial {}

impl std::ops::Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_same_field(rhs);
        let field = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let reps = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => field.add_rep(a, b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Polynomial::from_reps(field.clone(), reps)
    }
}

impl std::ops::Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let reps = self.coeffs.iter().map(|r| self.field.neg_rep(r)).collect();
        Polynomial::from_reps(self.field.clone(), reps)
    }
}

impl std::ops::Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_same_field(rhs);
        let field = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(field);
        }
        let mut reps = vec![field.zero_rep(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if field.rep_is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if field.rep_is_zero(b) {
                    continue;
                }
                let t = field.mul_rep(a, b);
                reps[i + j] = field.add_rep(&reps[i + j], &t);
            }
        }
        Polynomial::from_reps(field.clone(), reps)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            if self.field.rep_is_zero(&self.coeffs[i]) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let c = self.coeff(i);
            if i == 0 {
                write!(f, "{c}")?;
            } else {
                if !c.is_one() {
                    if c.display_is_atomic() {
                        write!(f, "{c}")?;
                    } else {
                        write!(f, "({c})")?;
                    }
                }
                if i == 1 {
                    write!(f, "x")?;
                } else {
                    write!(f, "x^{i}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self, self.field)
    }
}

/// Canonical display form of `p`. The output round-trips through
/// [`parse_poly`] over the same field.
pub fn format_poly(p: &Polynomial) -> String {
    p.to_string()
}

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

/// Parse a polynomial in x over `field`. Accepts sums, differences, products,
/// parenthesized groups with integer powers, tower symbols a/b/c/d, and the
/// bracket form "[c0,c1,...]".
pub fn parse_poly(text: &str, field: &Arc<Field>) -> Result<Polynomial> {
    let mut p = Parser::new(text);
    p.skip_ws();
    let poly = if p.peek() == Some('[') {
        let elems = p.parse_element_list(field)?;
        Polynomial::from_elements(field, elems)?
    } else {
        p.parse_expr(field, true)?
    };
    p.finish()?;
    Ok(poly)
}

/// Parse a field element. Expression form must be free of x; the bracket form
/// lists coefficients over the immediate base field.
pub fn parse_element(text: &str, field: &Arc<Field>) -> Result<FieldElement> {
    let mut p = Parser::new(text);
    p.skip_ws();
    let elem = if p.peek() == Some('[') {
        match field.base() {
            Some(base) => {
                let base = base.clone();
                let entries = p.parse_element_list(&base)?;
                assemble_from_coeffs(field, &base, entries)?
            }
            None => {
                let entries = p.parse_element_list(field)?;
                if entries.len() > 1 {
                    return Err(Error::Parse(format!(
                        "{} coefficients listed for a prime-field element",
                        entries.len()
                    )));
                }
                entries.into_iter().next().unwrap_or_else(|| field.zero())
            }
        }
    } else {
        let poly = p.parse_expr(field, false)?;
        if !poly.is_constant() {
            return Err(Error::Parse("expected a field element, found x".into()));
        }
        poly.coeff(0)
    };
    p.finish()?;
    Ok(elem)
}

fn assemble_from_coeffs(
    field: &Arc<Field>,
    base: &Arc<Field>,
    entries: Vec<FieldElement>,
) -> Result<FieldElement> {
    let deg = field.degree() as usize;
    if entries.len() > deg {
        return Err(Error::Parse(format!(
            "{} coefficients listed for an extension of degree {deg}",
            entries.len()
        )));
    }
    let mut reps = Vec::with_capacity(deg);
    for e in &entries {
        reps.push(e.rep().clone());
    }
    reps.resize(deg, base.zero_rep());
    Ok(FieldElement::from_rep(field.clone(), Rep::Ext(reps)))
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Parser {
        Parser { chars: text.chars().collect(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_minus(&mut self) -> bool {
        self.eat('-') || self.eat('\u{2212}')
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(Error::Parse(format!("unexpected '{c}' at position {}", self.pos))),
        }
    }

    fn parse_uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::Parse(format!("expected a number at position {start}")));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<u64>().map_err(|_| Error::Parse(format!("number out of range: {s}")))
    }

    fn parse_expr(&mut self, field: &Arc<Field>, allow_x: bool) -> Result<Polynomial> {
        self.skip_ws();
        let negate = self.eat_minus();
        let mut acc = self.parse_term(field, allow_x)?;
        if negate {
            acc = -&acc;
        }
        loop {
            if self.eat('+') {
                let t = self.parse_term(field, allow_x)?;
                acc = &acc + &t;
            } else if self.eat_minus() {
                let t = self.parse_term(field, allow_x)?;
                acc = &acc - &t;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self, field: &Arc<Field>, allow_x: bool) -> Result<Polynomial> {
        let mut acc = self.parse_factor(field, allow_x)?;
        loop {
            self.skip_ws();
            let explicit = self.peek() == Some('*');
            if explicit {
                self.pos += 1;
            } else {
                // juxtaposition: only an atom opener continues the term
                match self.peek() {
                    Some(c) if c.is_ascii_digit() || c == '(' || is_symbol_char(c) => {}
                    Some('x') if allow_x => {}
                    _ => break,
                }
            }
            let f = self.parse_factor(field, allow_x)?;
            acc = mul_checked(&acc, &f)?;
        }
        Ok(acc)
    }

    fn parse_factor(&mut self, field: &Arc<Field>, allow_x: bool) -> Result<Polynomial> {
        let base = self.parse_atom(field, allow_x)?;
        self.skip_ws();
        if self.eat('^') {
            let e = self.parse_uint()?;
            pow_checked(&base, e)
        } else {
            Ok(base)
        }
    }

    fn parse_atom(&mut self, field: &Arc<Field>, allow_x: bool) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.parse_expr(field, allow_x)?;
                if !self.eat(')') {
                    return Err(Error::Parse(format!("missing ')' at position {}", self.pos)));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.parse_uint()?;
                Ok(Polynomial::constant(&field.element_from_u64(n)))
            }
            Some('x') => {
                if !allow_x {
                    return Err(Error::Parse("x is not allowed in a field element".into()));
                }
                self.pos += 1;
                Ok(Polynomial::x(field))
            }
            Some(c) if is_symbol_char(c) => {
                self.pos += 1;
                Ok(Polynomial::constant(&symbol_element(field, c)?))
            }
            Some(c) => Err(Error::Parse(format!("unexpected '{c}' at position {}", self.pos))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }

    fn parse_element_list(&mut self, field: &Arc<Field>) -> Result<Vec<FieldElement>> {
        if !self.eat('[') {
            return Err(Error::Parse("expected '['".into()));
        }
        let mut out = Vec::new();
        self.skip_ws();
        if self.eat(']') {
            return Ok(out);
        }
        loop {
            self.skip_ws();
            if self.peek() == Some('[') {
                // nested list: coefficients over this field's base
                let base = field
                    .base()
                    .ok_or_else(|| Error::Parse("nested list over a prime field".into()))?
                    .clone();
                let inner = self.parse_element_list(&base)?;
                out.push(assemble_from_coeffs(field, &base, inner)?);
            } else {
                let poly = self.parse_expr(field, false)?;
                if !poly.is_constant() {
                    return Err(Error::Parse("list entries must be field elements".into()));
                }
                out.push(poly.coeff(0));
            }
            if self.eat(',') {
                continue;
            }
            if self.eat(']') {
                return Ok(out);
            }
            return Err(Error::Parse(format!("expected ',' or ']' at position {}", self.pos)));
        }
    }
}

fn is_symbol_char(c: char) -> bool {
    ('a'..='d').contains(&c)
}

/// Resolve a tower symbol to its element in `field` (embedding upward as
/// needed): 'a' is the generator of the first extension level, and so on.
fn symbol_element(field: &Arc<Field>, sym: char) -> Result<FieldElement> {
    let mut chain = vec![field.clone()];
    while let Some(b) = chain.last().unwrap().base() {
        let b = b.clone();
        chain.push(b);
    }
    chain.reverse(); // prime field first
    let level = chain
        .iter()
        .position(|f| f.symbol() == Some(sym))
        .ok_or_else(|| Error::Parse(format!("symbol '{sym}' is not defined in {field}")))?;
    let mut elem = chain[level].adjoined_root().expect("extension level");
    for f in &chain[level + 1..] {
        elem = f.embed(&elem)?;
    }
    Ok(elem)
}

fn mul_checked(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    let d = a.degree().unwrap_or(0) + b.degree().unwrap_or(0);
    if d > PARSE_DEGREE_CAP {
        return Err(Error::Parse(format!("expression degree {d} exceeds the parser cap")));
    }
    Ok(a * b)
}

fn pow_checked(base: &Polynomial, e: u64) -> Result<Polynomial> {
    if base.is_constant() {
        let c = base.coeff(0);
        return Ok(Polynomial::constant(&c.pow(e)));
    }
    let d = base.degree().unwrap() as u64;
    if d.saturating_mul(e) > PARSE_DEGREE_CAP as u64 {
        return Err(Error::Parse(format!("expression degree {} exceeds the parser cap", d * e)));
    }
    Ok(base.pow(e as u32))
}
