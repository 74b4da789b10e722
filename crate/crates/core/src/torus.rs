//! The quantum torus: Laurent polynomials in `v`, `u` with `u v = q v u`, kept in the normal
//! order `v^r u^s`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::ScalarQ;

/// Exponents `(r, s)` of the normal-ordered monomial `v^r u^s`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    pub r: i64,
    pub s: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { r: 0, s: 0 };

    pub fn new(r: i64, s: i64) -> Self {
        Monomial { r, s }
    }

    /// `(v^r u^s)(v^n u^m) = q^{s n} v^{r+n} u^{s+m}`; returns the `q` exponent and the product.
    pub fn product(self, rhs: Monomial) -> (i64, Monomial) {
        (self.s * rhs.r, Monomial::new(self.r + rhs.r, self.s + rhs.s))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.r, self.s) {
            (0, 0) => Ok(()),
            (r, 0) => write!(f, "v^{r}"),
            (0, s) => write!(f, "u^{s}"),
            (r, s) => write!(f, "v^{r} u^{s}"),
        }
    }
}

/// A finite Q(q)-linear combination of normal-ordered monomials.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct TorusElement {
    terms: BTreeMap<Monomial, ScalarQ>,
}

impl TorusElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(ScalarQ::one())
    }

    pub fn scalar(c: ScalarQ) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn monomial(r: i64, s: i64) -> Self {
        Self::term(ScalarQ::one(), Monomial::new(r, s))
    }

    pub fn term(c: ScalarQ, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        TorusElement { terms }
    }

    pub fn u() -> Self {
        Self::monomial(0, 1)
    }

    pub fn v() -> Self {
        Self::monomial(1, 0)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, ScalarQ)>) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, &c);
        }
        out
    }

    pub fn add_term(&mut self, m: Monomial, c: &ScalarQ) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = &*existing + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ScalarQ)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Monomial) -> ScalarQ {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// The scalar, if this element has no `u`/`v` dependence.
    pub fn as_scalar(&self) -> Option<ScalarQ> {
        match self.terms.len() {
            0 => Some(ScalarQ::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &ScalarQ) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        TorusElement { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    /// Applies the automorphism `v^r u^s -> q^{a r + b s} v^r u^s`.
    pub fn twist(&self, a: i64, b: i64) -> Self {
        if a == 0 && b == 0 {
            return self.clone();
        }
        TorusElement {
            terms: self.terms.iter().map(|(m, c)| (*m, c.mul_q_pow(a * m.r + b * m.s))).collect(),
        }
    }

    /// Maps every coefficient through `f`, dropping zeros.
    pub fn map_coeffs(&self, mut f: impl FnMut(&ScalarQ) -> ScalarQ) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Inverse of a single nonzero term `c v^r u^s`.
    pub fn inverse(&self) -> Result<Self> {
        if self.terms.len() != 1 {
            return Err(Error::NotInvertible(self.to_string()));
        }
        let (m, c) = self.terms.iter().next().unwrap();
        // (v^r u^s)^{-1} = q^{rs} v^{-r} u^{-s}
        let c = c.inv()?.mul_q_pow(m.r * m.s);
        Ok(Self::term(c, Monomial::new(-m.r, -m.s)))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }
}

impl Add for &TorusElement {
    type Output = TorusElement;
    fn add(self, rhs: &TorusElement) -> TorusElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Neg for &TorusElement {
    type Output = TorusElement;
    fn neg(self) -> TorusElement {
        TorusElement { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Sub for &TorusElement {
    type Output = TorusElement;
    fn sub(self, rhs: &TorusElement) -> TorusElement {
        self + &(-rhs)
    }
}

impl Mul for &TorusElement {
    type Output = TorusElement;
    fn mul(self, rhs: &TorusElement) -> TorusElement {
        let mut out = TorusElement::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let (k, m) = m1.product(*m2);
                out.add_term(m, &(c1 * c2).mul_q_pow(k));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for TorusElement {
            type Output = TorusElement;
            fn $m(self, rhs: TorusElement) -> TorusElement { (&self).$m(&rhs) }
        }
        impl $tr<&TorusElement> for TorusElement {
            type Output = TorusElement;
            fn $m(self, rhs: &TorusElement) -> TorusElement { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for TorusElement {
    type Output = TorusElement;
    fn neg(self) -> TorusElement {
        -&self
    }
}

impl From<ScalarQ> for TorusElement {
    fn from(c: ScalarQ) -> Self {
        TorusElement::scalar(c)
    }
}

impl fmt::Display for TorusElement {
    /// Terms in decreasing `(r, s)` order as `(c) v^r u^s`; a pure scalar prints as itself.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.as_scalar() {
            return write!(f, "{c}");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            if *m != Monomial::ONE {
                write!(f, " {m}")?;
            }
        }
        Ok(())
    }
}
