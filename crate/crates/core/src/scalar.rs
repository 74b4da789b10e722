//! Exact coefficient field: integer polynomials in `q` and their fraction field.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Polynomial in `q` with integer coefficients.
///
/// Stored densely from the constant term upwards; there is never a trailing zero, so the zero
/// polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct PolyZ {
    coeffs: Vec<BigInt>,
}

impl PolyZ {
    pub fn zero() -> Self {
        PolyZ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * q^k`
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c.into());
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from coefficients listed from degree 0 upwards.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyZ { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiplicity of `q` as a factor (0 for the zero polynomial).
    fn q_order(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        PolyZ { coeffs }
    }

    fn shift_down(&self, k: usize) -> Self {
        debug_assert!(k <= self.q_order() || self.is_zero());
        PolyZ { coeffs: self.coeffs[k.min(self.coeffs.len())..].to_vec() }
    }

    /// Non-negative gcd of the coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn div_exact_int(&self, c: &BigInt) -> Self {
        PolyZ { coeffs: self.coeffs.iter().map(|x| x / c).collect() }
    }

    /// The primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading_coeff().unwrap().is_negative() {
            c = -c;
        }
        self.div_exact_int(&c)
    }

    /// Pseudo-remainder of `self` by `other`: `lc(other)^k * self mod other`.
    fn pseudo_rem(&self, other: &Self) -> Self {
        let d = other.degree().expect("pseudo-remainder by zero polynomial");
        let lc = other.leading_coeff().unwrap().clone();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < d {
                break;
            }
            let rlc = r.leading_coeff().unwrap().clone();
            let shift = rd - d;
            let mut coeffs: Vec<BigInt> = r.coeffs.iter().map(|x| x * &lc).collect();
            for (i, c) in other.coeffs.iter().enumerate() {
                coeffs[i + shift] -= c * &rlc;
            }
            r = PolyZ::from_coeffs(coeffs);
        }
        r
    }

    /// Exact quotient `self / other`, assuming `other` divides `self` in Z[q].
    fn div_exact(&self, other: &Self) -> Self {
        let d = other.degree().expect("division by zero polynomial");
        if other.is_one() {
            return self.clone();
        }
        let Some(n) = self.degree() else {
            return Self::zero();
        };
        if n < d {
            debug_assert!(self.is_zero(), "inexact polynomial division");
            return Self::zero();
        }
        let lc = other.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - d + 1];
        for k in (0..=n - d).rev() {
            let top = &rem[k + d];
            if top.is_zero() {
                continue;
            }
            let (qk, r) = top.div_rem(lc);
            debug_assert!(r.is_zero(), "inexact polynomial division");
            for (i, c) in other.coeffs.iter().enumerate() {
                rem[k + i] -= c * &qk;
            }
            quot[k] = qk;
        }
        debug_assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
        PolyZ::from_coeffs(quot)
    }

    /// Greatest common divisor: primitive, positive leading coefficient, `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        let k = self.q_order().min(other.q_order());
        let mut a = self.shift_down(self.q_order()).primitive();
        let mut b = other.shift_down(other.q_order()).primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.is_constant() {
                a = PolyZ::one();
                break;
            }
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a.primitive().shift_up(k)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
        }
        acc
    }
}

impl Add for &PolyZ {
    type Output = PolyZ;
    fn add(self, rhs: &PolyZ) -> PolyZ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i);
                let b = rhs.coeffs.get(i);
                match (a, b) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                }
            })
            .collect();
        PolyZ::from_coeffs(coeffs)
    }
}

impl Neg for &PolyZ {
    type Output = PolyZ;
    fn neg(self) -> PolyZ {
        PolyZ { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &PolyZ {
    type Output = PolyZ;
    fn sub(self, rhs: &PolyZ) -> PolyZ {
        self + &(-rhs)
    }
}

impl Mul for &PolyZ {
    type Output = PolyZ;
    fn mul(self, rhs: &PolyZ) -> PolyZ {
        if self.is_zero() || rhs.is_zero() {
            return PolyZ::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PolyZ::from_coeffs(coeffs)
    }
}

impl fmt::Display for PolyZ {
    /// Decreasing degree, e.g. `2*q^2 - q + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Element of Q(q), kept in a canonical reduced form.
///
/// `num` and `den` share no non-unit factor in Z[q] (integer content included) and the leading
/// coefficient of `den` is positive. Two scalars are equal iff their stored forms agree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ScalarQ {
    num: PolyZ,
    den: PolyZ,
}

impl Default for ScalarQ {
    fn default() -> Self {
        Self::zero()
    }
}

impl ScalarQ {
    pub fn zero() -> Self {
        ScalarQ { num: PolyZ::zero(), den: PolyZ::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        ScalarQ { num: PolyZ::constant(n), den: PolyZ::one() }
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::new(PolyZ::constant(n), PolyZ::constant(d)).expect("zero denominator")
    }

    pub fn from_bigrational(r: &BigRational) -> Self {
        Self::new(PolyZ::constant(r.numer().clone()), PolyZ::constant(r.denom().clone()))
            .expect("rational with zero denominator")
    }

    pub fn from_poly(p: PolyZ) -> Self {
        ScalarQ { num: p, den: PolyZ::one() }
    }

    /// The formal parameter `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        let m = PolyZ::monomial(1, k.unsigned_abs() as usize);
        if k >= 0 {
            ScalarQ { num: m, den: PolyZ::one() }
        } else {
            ScalarQ { num: PolyZ::one(), den: m }
        }
    }

    pub fn new(num: PolyZ, den: PolyZ) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: PolyZ, den: PolyZ) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = if den.is_constant() || num.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g), den.div_exact(&g))
            }
        };
        let mut c = num.content().gcd(&den.content());
        if den.leading_coeff().unwrap().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_exact_int(&c);
            den = den.div_exact_int(&c);
        }
        ScalarQ { num, den }
    }

    pub fn numer(&self) -> &PolyZ {
        &self.num
    }

    pub fn denom(&self) -> &PolyZ {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Rational constant (no `q` dependence)?
    pub fn is_rational(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut num = self.den.clone();
        let mut den = self.num.clone();
        if den.leading_coeff().unwrap().is_negative() {
            num = -&num;
            den = -&den;
        }
        Ok(ScalarQ { num, den })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Multiplies by `q^k` without a full gcd.
    pub fn mul_q_pow(&self, k: i64) -> Self {
        if k == 0 || self.is_zero() {
            return self.clone();
        }
        let k_abs = k.unsigned_abs() as usize;
        if k > 0 {
            let j = k_abs.min(self.den.q_order());
            ScalarQ { num: self.num.shift_up(k_abs - j), den: self.den.shift_down(j) }
        } else {
            let j = k_abs.min(self.num.q_order());
            ScalarQ { num: self.num.shift_down(j), den: self.den.shift_up(k_abs - j) }
        }
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Evaluates at a rational point; errors at a pole.
    pub fn eval_rational(&self, q0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval_rational(q0);
        if d.is_zero() {
            return Err(Error::Pole(q0.to_string()));
        }
        Ok(self.num.eval_rational(q0) / d)
    }

    /// Evaluates at a complex double, e.g. a unit-norm `q`.
    pub fn eval_complex(&self, q0: Complex64) -> Result<Complex64> {
        let d = self.den.eval_complex(q0);
        if d.norm() == 0.0 {
            return Err(Error::Pole(q0.to_string()));
        }
        Ok(self.num.eval_complex(q0) / d)
    }
}

impl From<i64> for ScalarQ {
    fn from(n: i64) -> Self {
        ScalarQ::from_int(n)
    }
}

impl Add for &ScalarQ {
    type Output = ScalarQ;
    fn add(self, rhs: &ScalarQ) -> ScalarQ {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return ScalarQ::normalized(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        ScalarQ::normalized(num, &self.den * &rhs.den)
    }
}

impl Sub for &ScalarQ {
    type Output = ScalarQ;
    fn sub(self, rhs: &ScalarQ) -> ScalarQ {
        self + &(-rhs)
    }
}

impl Neg for &ScalarQ {
    type Output = ScalarQ;
    fn neg(self) -> ScalarQ {
        ScalarQ { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &ScalarQ {
    type Output = ScalarQ;
    fn mul(self, rhs: &ScalarQ) -> ScalarQ {
        if self.is_zero() || rhs.is_zero() {
            return ScalarQ::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        ScalarQ::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &ScalarQ {
    type Output = ScalarQ;
    /// Panics on division by zero; use [`ScalarQ::checked_div`] for the fallible form.
    fn div(self, rhs: &ScalarQ) -> ScalarQ {
        self.checked_div(rhs).expect("division by zero in Q(q)")
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { (&self).$m(&rhs) }
        }
        impl $tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(ScalarQ, Add add, Sub sub, Mul mul, Div div);
forward_owned!(PolyZ, Add add, Sub sub, Mul mul);

impl Neg for ScalarQ {
    type Output = ScalarQ;
    fn neg(self) -> ScalarQ {
        -&self
    }
}

impl fmt::Display for ScalarQ {
    /// `num/den`, with `/1` suppressed and multi-term parts parenthesised.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.num_terms() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if self.den.num_terms() > 1 || !self.den.is_constant() && !self.den.leading_coeff().unwrap().is_one() {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

/// Deterministic total order on canonical forms, used only for sorting outputs.
impl PartialOrd for ScalarQ {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ScalarQ {
    fn cmp(&self, other: &Self) -> Ordering {
        self.to_string().cmp(&other.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> ScalarQ {
        ScalarQ::q()
    }

    fn p(c: &[i64]) -> PolyZ {
        PolyZ::from_i64s(c)
    }

    #[test]
    fn add_q_and_one() {
        let s = &q() + &ScalarQ::one();
        assert_eq!(s.to_string(), "q + 1");
        assert_eq!(s.denom(), &PolyZ::one());
    }

    #[test]
    fn reciprocal_of_q2_minus_1() {
        let d = ScalarQ::from_poly(p(&[-1, 0, 1]));
        let r = ScalarQ::one().checked_div(&d).unwrap();
        assert_eq!(r.to_string(), "1/(q^2 - 1)");
        assert_eq!(&r * &d, ScalarQ::one());
    }

    #[test]
    fn divide_by_zero_is_an_error() {
        assert!(matches!(ScalarQ::one().checked_div(&ScalarQ::zero()), Err(Error::DivisionByZero)));
        assert!(ScalarQ::new(PolyZ::one(), PolyZ::zero()).is_err());
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        assert_eq!(PolyZ::zero().gcd(&p(&[2, 2])), p(&[1, 1]));
        assert_eq!(p(&[2, 2]).gcd(&p(&[4, 4])), p(&[1, 1]));
        assert_eq!(PolyZ::zero().gcd(&PolyZ::zero()), PolyZ::zero());
        assert_eq!(p(&[0, 0, 3]).gcd(&p(&[0, 6, 6])), p(&[0, 1]));
    }

    #[test]
    fn normal_form_sign_and_content() {
        let s = ScalarQ::new(p(&[2]), p(&[-4, 0, -4])).unwrap();
        assert_eq!(s.numer(), &p(&[-1]));
        assert_eq!(s.denom(), &p(&[2, 0, 2]));
        assert_eq!(ScalarQ::from_ratio(2, 4).to_string(), "1/2");
        assert_eq!(ScalarQ::q_pow(-2).to_string(), "1/q^2");
        let x = ScalarQ::new(p(&[1, 1]), p(&[0, 2])).unwrap();
        assert_eq!(x.to_string(), "(q + 1)/(2*q)");
    }

    #[test]
    fn evaluation() {
        let two = BigRational::from_integer(2.into());
        assert_eq!(ScalarQ::q_pow(2).eval_rational(&two).unwrap(), BigRational::from_integer(4.into()));
        let pole = ScalarQ::new(PolyZ::one(), p(&[-1, 1])).unwrap();
        assert!(matches!(pole.eval_rational(&BigRational::one()), Err(Error::Pole(_))));
        let r = ScalarQ::new(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(r.to_string(), "q + 1");
        let three = BigRational::from_integer(3.into());
        assert_eq!(r.eval_rational(&three).unwrap(), BigRational::from_integer(4.into()));
    }

    #[test]
    fn q_power_shortcut_matches_multiplication() {
        let x = ScalarQ::new(p(&[1, 2]), p(&[0, 0, 3, 1])).unwrap();
        for k in -4..=4 {
            assert_eq!(x.mul_q_pow(k), &x * &ScalarQ::q_pow(k));
        }
    }
}
