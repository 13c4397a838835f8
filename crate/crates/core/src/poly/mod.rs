//! Sparse multivariate polynomials over exact rationals.
//!
//! A [`Ring`] is an ordered list of variable names; a [`Polynomial`] keeps a
//! map from exponent vectors to nonzero coefficients together with the ring it
//! lives in. Gröbner bases and elimination are in [`groebner`].

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::exact::Rational;

pub mod groebner;
mod order;

pub use groebner::{
    buchberger, buchberger_with, eliminate, eliminate_with, normal_form, principal_generator, s_polynomial,
    GroebnerConfig,
};
pub use order::MonomialOrder;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("variable {0:?} declared twice")]
    DuplicateVariable(String),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("expected {expected} values, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("not homogeneous: terms {offending:?} differ from degree {degree}")]
    NotHomogeneous { degree: u32, offending: Vec<String> },
    #[error("ideal is not principal: {diagnostic}")]
    NotPrincipal { size: usize, diagnostic: String },
    #[error("resource guard tripped: {what} exceeded {limit}")]
    Guard { what: &'static str, limit: u64 },
}

/// An ordered list of distinct variable names. Index 0 is the largest
/// variable in every order.
#[derive(Clone, PartialEq, Eq)]
pub struct Ring {
    names: Arc<[String]>,
}

impl Ring {
    pub fn new<I, S>(names: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(PolyError::DuplicateVariable(n.clone()));
            }
        }
        Ok(Ring { names: names.into() })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The variable `name` as a polynomial.
    pub fn var(&self, name: &str) -> Result<Polynomial, PolyError> {
        let i = self
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        Ok(Polynomial::var(self, i))
    }

    /// The same variables followed by `more`.
    pub fn extend<I, S>(&self, more: I) -> Result<Ring, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Ring::new(self.names.iter().cloned().chain(more.into_iter().map(Into::into)))
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

/// Dense exponent vector with cached total degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: alloc::vec![0; nvars],
            degree: 0,
        }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[index] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    /// True if `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
            degree: self.degree - other.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    fn write_with(&self, ring: &Ring, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(ring.name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

/// A polynomial with rational coefficients. Zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        Polynomial::term(ring, Monomial::one(ring.len()), c)
    }

    pub fn one(ring: &Ring) -> Self {
        Polynomial::constant(ring, Rational::one())
    }

    pub fn var(ring: &Ring, index: usize) -> Self {
        Polynomial::term(ring, Monomial::var(ring.len(), index), Rational::one())
    }

    pub fn term(ring: &Ring, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.exps.len(), ring.len(), "monomial arity does not match ring");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Sums the given terms; repeated monomials are combined.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Polynomial::zero(ring);
        for (m, c) in terms {
            assert_eq!(m.exps.len(), ring.len(), "monomial arity does not match ring");
            p.add_term(m, &c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic storage order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Terms sorted descending in `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Maximum total degree, `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Highest exponent of variable `var` across all terms.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exps[var]).max().unwrap_or(0)
    }

    pub fn uses_variable(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exps[var] > 0)
    }

    /// The common total degree of all terms.
    pub fn homogeneous_degree(&self) -> Result<u32, PolyError> {
        let d = self.total_degree().ok_or(PolyError::ZeroPolynomial)?;
        let offending: Vec<String> = self
            .terms
            .keys()
            .filter(|m| m.degree != d)
            .map(|m| self.monomial_to_string(m))
            .collect();
        if offending.is_empty() {
            Ok(d)
        } else {
            Err(PolyError::NotHomogeneous { degree: d, offending })
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_ok()
    }

    pub fn monomial_to_string(&self, m: &Monomial) -> String {
        struct Show<'a>(&'a Monomial, &'a Ring);
        impl fmt::Display for Show<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.0.is_one() {
                    return f.write_str("1");
                }
                self.0.write_with(self.1, f)
            }
        }
        Show(m, &self.ring).to_string()
    }

    fn check_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let mut out = Polynomial::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.clone())).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = exp;
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

    /// Evaluates at a point given in ring variable order.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational, PolyError> {
        if point.len() != self.ring.len() {
            return Err(PolyError::ArityMismatch {
                expected: self.ring.len(),
                found: point.len(),
            });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.exps) {
                if e > 0 {
                    t *= &x.pow(e);
                }
            }
            acc += &t;
        }
        Ok(acc)
    }

    /// Ring homomorphism sending variable `i` to `images[i]`, all of which
    /// live in `target`.
    pub fn compose(&self, target: &Ring, images: &[Polynomial]) -> Result<Polynomial, PolyError> {
        if images.len() != self.ring.len() {
            return Err(PolyError::ArityMismatch {
                expected: self.ring.len(),
                found: images.len(),
            });
        }
        if images.iter().any(|p| &p.ring != target) {
            return Err(PolyError::RingMismatch);
        }
        // cache powers per variable
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| alloc::vec![Polynomial::one(target), p.clone()])
            .collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Replaces variable `var` by `value` (same ring).
    pub fn substitute(&self, var: usize, value: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(value)?;
        let images: Vec<Polynomial> = (0..self.ring.len())
            .map(|i| {
                if i == var {
                    value.clone()
                } else {
                    Polynomial::var(&self.ring, i)
                }
            })
            .collect();
        self.compose(&self.ring, &images)
    }

    /// Moves the polynomial into another ring by matching variable names.
    /// Variables of `self` that are absent from `target` must not occur.
    pub fn to_ring(&self, target: &Ring) -> Result<Polynomial, PolyError> {
        let mut map = Vec::with_capacity(self.ring.len());
        for (i, name) in self.ring.names().iter().enumerate() {
            match target.index_of(name) {
                Some(j) => map.push(Some(j)),
                None if self.uses_variable(i) => return Err(PolyError::UnknownVariable(name.clone())),
                None => map.push(None),
            }
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut exps = alloc::vec![0; target.len()];
            for (i, &e) in m.exps.iter().enumerate() {
                if let Some(j) = map[i] {
                    exps[j] = e;
                }
            }
            out.add_term(Monomial::from_exponents(exps), c);
        }
        Ok(out)
    }

    /// Splits `p = c * q` with `q` integral, content 1 and positive leading
    /// coefficient in the canonical (graded lex) order.
    pub fn content_primitive(&self) -> Result<(Rational, Polynomial), PolyError> {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::{One, Zero};
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut lcm_den = BigInt::one();
        let mut gcd_num = BigInt::zero();
        for c in self.terms.values() {
            lcm_den = lcm_den.lcm(c.denom());
            gcd_num = gcd_num.gcd(c.numer());
        }
        let mut content = Rational::new(gcd_num, lcm_den).expect("nonzero denominator");
        let (_, lc) = self.leading_term(&MonomialOrder::DegLex).expect("nonzero");
        if lc.is_negative() {
            content = -content;
        }
        let inv = content.recip().expect("nonzero content");
        Ok((content, self.scale(&inv)))
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(Rational::is_integer)
    }

    /// Coefficients of `self` viewed as a polynomial in variable `var`:
    /// index `k` holds the coefficient of `var^k`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Polynomial> {
        let d = self.degree_in(var) as usize;
        let mut out = alloc::vec![Polynomial::zero(&self.ring); d + 1];
        for (m, c) in &self.terms {
            let k = m.exps[var] as usize;
            let mut rest = m.exps.clone();
            rest[var] = 0;
            out[k].add_term(Monomial::from_exponents(rest), c);
        }
        out
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text: graded lex descending, `*` between factors, `^` for
    /// powers, e.g. `U^2 + 2*U*B1 - B2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.sorted_terms(&MonomialOrder::DegLex).into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                m.write_with(&self.ring, f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

// The operator forms panic on mismatched rings; use the `try_*` methods when
// the rings come from untrusted input.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ring mismatch in polynomial addition")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ring mismatch in polynomial subtraction")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ring mismatch in polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

/// Exact division of `q` by `p`: `Some(r)` with `p * r == q`, or `None` when
/// the remainder is nonzero.
pub fn divides(p: &Polynomial, q: &Polynomial) -> Result<Option<Polynomial>, PolyError> {
    p.check_ring(q)?;
    let order = MonomialOrder::GrevLex;
    let (lm, lc) = match p.leading_term(&order) {
        Some((m, c)) => (m.clone(), c.clone()),
        None => return Err(PolyError::ZeroPolynomial),
    };
    let mut rest = q.clone();
    let mut quotient = Polynomial::zero(&q.ring);
    while let Some((m, c)) = rest.leading_term(&order) {
        let Some(shift) = m.checked_div(&lm) else {
            // single-element basis: an irreducible leading term means the
            // remainder is nonzero
            return Ok(None);
        };
        let factor = c.checked_div(&lc).expect("nonzero leading coefficient");
        quotient.add_term(shift.clone(), &factor);
        rest = &rest - &p.mul_monomial(&shift).scale(&factor);
    }
    Ok(Some(quotient))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn ring(names: &[&str]) -> Ring {
        Ring::new(names.iter().copied()).unwrap()
    }

    fn v(r: &Ring, n: &str) -> Polynomial {
        r.var(n).unwrap()
    }

    fn c(r: &Ring, x: i64) -> Polynomial {
        Polynomial::constant(r, Rational::from(x))
    }

    fn z_t1(r: &Ring) -> Polynomial {
        // U^2 + 2UB1 + UB2 + UB4 + B1^2 + B1B2 + B1B3 + B1B4
        let (u, b1, b2, b3, b4) = (v(r, "U"), v(r, "B1"), v(r, "B2"), v(r, "B3"), v(r, "B4"));
        let terms = [
            &u * &u,
            &c(r, 2) * &(&u * &b1),
            &u * &b2,
            &u * &b4,
            &b1 * &b1,
            &b1 * &b2,
            &b1 * &b3,
            &b1 * &b4,
        ];
        terms.iter().fold(Polynomial::zero(r), |a, t| &a + t)
    }

    #[test]
    fn arithmetic_examples() {
        let r = ring(&["U", "B1"]);
        let (u, b1) = (v(&r, "U"), v(&r, "B1"));
        let prod = &(&u + &b1) * &(&u - &b1);
        assert_eq!(prod, &(&u * &u) - &(&b1 * &b1));
        assert_eq!(prod.to_string(), "U^2 - B1^2");
        let sq = (&u + &b1).pow(2);
        let half = Rational::new(1, 2).unwrap();
        let val = sq.evaluate(&[-half.clone(), half]).unwrap();
        assert!(val.is_zero());
    }

    #[test]
    fn substitution_into_printed_polynomial() {
        let r = ring(&["U", "B1", "B2", "B3", "B4"]);
        let z = z_t1(&r);
        assert_eq!(
            z.to_string(),
            "U^2 + 2*U*B1 + U*B2 + U*B4 + B1^2 + B1*B2 + B1*B3 + B1*B4"
        );
        let zero = Polynomial::zero(&r);
        let mut s = z.clone();
        for name in ["B2", "B3", "B4"] {
            s = s.substitute(r.index_of(name).unwrap(), &zero).unwrap();
        }
        let (u, b1) = (v(&r, "U"), v(&r, "B1"));
        assert_eq!(s, (&u + &b1).pow(2));
        assert_eq!(z.homogeneous_degree(), Ok(2));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let r1 = ring(&["U", "B1"]);
        let r2 = ring(&["U", "B2"]);
        assert_eq!(v(&r1, "U").try_add(&v(&r2, "U")), Err(PolyError::RingMismatch));
        assert!(Ring::new(["x", "x"]).is_err());
    }

    #[test]
    fn content_primitive_examples() {
        let r = ring(&["U", "B1"]);
        let (u, b1) = (v(&r, "U"), v(&r, "B1"));
        let p = &(&c(&r, 4) * &(&u * &u)) + &(&c(&r, 6) * &(&u * &b1));
        let (k, q) = p.content_primitive().unwrap();
        assert_eq!(k, Rational::from(2));
        assert_eq!(q.to_string(), "2*U^2 + 3*U*B1");

        let third = Polynomial::constant(&r, Rational::new(1, 3).unwrap());
        let (k, q) = (&third * &u).content_primitive().unwrap();
        assert_eq!(k, Rational::new(1, 3).unwrap());
        assert_eq!(q, u);

        let p = &(&c(&r, -2) * &u) - &(&c(&r, 2) * &b1);
        let (k, q) = p.content_primitive().unwrap();
        assert_eq!(k, Rational::from(-2));
        assert_eq!(q, &u + &b1);

        assert_eq!(Polynomial::zero(&r).content_primitive(), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn homogeneity_examples() {
        let r = ring(&["U", "B1"]);
        let (u, b1) = (v(&r, "U"), v(&r, "B1"));
        assert_eq!((&u + &b1).homogeneous_degree(), Ok(1));
        match (&(&u * &u) + &b1).homogeneous_degree() {
            Err(PolyError::NotHomogeneous { degree, offending }) => {
                assert_eq!(degree, 2);
                assert_eq!(offending, vec![String::from("B1")]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn divides_examples() {
        let r = ring(&["A1", "B1", "U"]);
        let (a1, b1, u) = (v(&r, "A1"), v(&r, "B1"), v(&r, "U"));
        let p = &b1 - &a1;
        assert_eq!(divides(&p, &p).unwrap(), Some(Polynomial::one(&r)));
        assert_eq!(divides(&b1, &(&u + &b1)).unwrap(), None);
        let q = &p * &(&u + &a1).pow(2);
        assert_eq!(divides(&p, &q).unwrap(), Some((&u + &a1).pow(2)));
    }

    #[test]
    fn to_ring_and_coefficients() {
        let r = ring(&["t", "U", "B1"]);
        let kept = ring(&["U", "B1"]);
        let p = &v(&r, "U") + &v(&r, "B1");
        assert_eq!(p.to_ring(&kept).unwrap().to_string(), "U + B1");
        assert!(v(&r, "t").to_ring(&kept).is_err());
        let q = &(&v(&r, "U") * &v(&r, "U")) + &(&c(&r, 3) * &v(&r, "B1"));
        let cs = q.coefficients_in(1);
        assert_eq!(cs.len(), 3);
        assert!(cs[1].is_zero());
    }

    fn small_poly(r: Ring) -> impl Strategy<Value = Polynomial> {
        let n = r.len();
        proptest::collection::vec((proptest::collection::vec(0u32..3, n), -5i64..6), 0..5).prop_map(move |ts| {
            Polynomial::from_terms(
                &r,
                ts.into_iter()
                    .map(|(e, c)| (Monomial::from_exponents(e), Rational::from(c))),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(
            a in small_poly(ring(&["x", "y", "z"])),
            b in small_poly(ring(&["x", "y", "z"])),
            c in small_poly(ring(&["x", "y", "z"])),
        ) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn evaluate_is_a_homomorphism(
            a in small_poly(ring(&["x", "y"])),
            b in small_poly(ring(&["x", "y"])),
            x in -4i64..5, y in -4i64..5,
        ) {
            let pt = [Rational::from(x), Rational::from(y)];
            let lhs = (&a * &b).evaluate(&pt).unwrap();
            prop_assert_eq!(lhs, a.evaluate(&pt).unwrap() * b.evaluate(&pt).unwrap());
            let lhs = (&a + &b).evaluate(&pt).unwrap();
            prop_assert_eq!(lhs, a.evaluate(&pt).unwrap() + b.evaluate(&pt).unwrap());
        }

        #[test]
        fn divides_returns_exact_quotient(
            a in small_poly(ring(&["x", "y"])),
            b in small_poly(ring(&["x", "y"])),
        ) {
            prop_assume!(!a.is_zero());
            let q = &a * &b;
            let r = divides(&a, &q).unwrap();
            prop_assert_eq!(r.clone(), Some(b.clone()));
            prop_assert_eq!(&a * &r.unwrap(), q);
        }
    }
}
