//! Seeded samplers for randomized identity checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bracket::VecTensor;
use crate::calculus::Form;
use crate::connection::ConnectionParams;
use crate::scalar::{PolyZ, ScalarQ};
use crate::sphere::SphereParams;
use crate::tensor::{Letter, Tensor, TwoForm};
use crate::torus::{Monomial, TorusElement};

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    pub fn nonzero_int(&mut self, bound: i64) -> i64 {
        loop {
            let n = self.int(-bound, bound);
            if n != 0 {
                return n;
            }
        }
    }

    /// Nonzero rational `a/b` with `|a| ≤ 5`, `1 ≤ b ≤ 4`.
    pub fn rational(&mut self) -> ScalarQ {
        let a = self.nonzero_int(5);
        let b = self.int(1, 4);
        ScalarQ::from_ratio(a, b)
    }

    /// Nonzero element of Q(q): a rational, a rational times a power of `q`, or a ratio of
    /// small linear polynomials.
    pub fn scalar(&mut self) -> ScalarQ {
        match self.int(0, 3) {
            0 | 1 => self.rational(),
            2 => self.rational().mul_q_pow(self.int(-2, 2)),
            _ => {
                let num = PolyZ::from_i64s(&[self.int(-3, 3), self.nonzero_int(3)]);
                let den = PolyZ::from_i64s(&[self.nonzero_int(3), self.int(-2, 2)]);
                ScalarQ::new(num, den).expect("nonzero denominator")
            }
        }
    }

    /// A scalar that is zero about a third of the time.
    pub fn scalar_or_zero(&mut self) -> ScalarQ {
        if self.coin(0.3) {
            ScalarQ::zero()
        } else {
            self.scalar()
        }
    }

    pub fn monomial(&mut self, bound: i64) -> Monomial {
        Monomial::new(self.int(-bound, bound), self.int(-bound, bound))
    }

    /// A single invertible term `c v^r u^s`.
    pub fn unit(&mut self) -> TorusElement {
        let c = self.rational();
        let m = self.monomial(2);
        TorusElement::term(c, m)
    }

    /// Up to `max_terms` terms with exponents in `[-bound, bound]`.
    pub fn element(&mut self, max_terms: usize, bound: i64) -> TorusElement {
        let n = self.int(1, max_terms as i64);
        let mut out = TorusElement::zero();
        for _ in 0..n {
            let c = self.scalar();
            let m = self.monomial(bound);
            out.add_term(m, &c);
        }
        out
    }

    /// The default small random element: at most 3 terms, exponents in `[-3, 3]`.
    pub fn small(&mut self) -> TorusElement {
        self.element(3, 3)
    }

    pub fn one_form(&mut self) -> Tensor {
        Tensor::one_form(self.element(2, 2), self.element(2, 2))
    }

    pub fn two_form(&mut self) -> TwoForm {
        TwoForm::new(self.element(2, 2))
    }

    pub fn vec_field(&mut self) -> Tensor {
        Tensor::vec_field(&self.element(2, 2), &self.element(2, 2))
    }

    /// A random word of the given length over `letters`, with a random right coefficient.
    pub fn word_tensor(&mut self, letters: &[Letter], len: usize) -> Tensor {
        let w: Vec<Letter> = (0..len).map(|_| letters[self.int(0, letters.len() as i64 - 1) as usize]).collect();
        Tensor::word(w, self.element(2, 2))
    }

    pub fn connection_params(&mut self) -> ConnectionParams {
        ConnectionParams::from_array(std::array::from_fn(|_| self.scalar_or_zero()))
    }

    /// Connection parameters that are rational numbers (zero a third of the time).
    pub fn rational_params(&mut self) -> ConnectionParams {
        ConnectionParams::from_array(std::array::from_fn(|_| if self.coin(0.3) { ScalarQ::zero() } else { self.rational() }))
    }

    /// `a·∂_u + b·∂_v` with single-term coefficients.
    pub fn unit_field(&mut self) -> Tensor {
        Tensor::vec_field(&self.unit(), &self.unit())
    }

    pub fn sphere_params(&mut self) -> SphereParams {
        SphereParams::new(self.scalar_or_zero(), self.scalar_or_zero(), self.scalar_or_zero(), self.scalar_or_zero())
    }

    /// A random form of the given degree (0, 1 or 2).
    pub fn form(&mut self, degree: usize) -> Form {
        match degree {
            0 => Form::Zero(self.small()),
            1 => Form::One(self.one_form()),
            _ => Form::Two(self.two_form()),
        }
    }

    /// An antisymmetric sum of pairs: multiples `a·(∂_v⊗∂_u - q^{-1}∂_u⊗∂_v)·b` split across
    /// the middle by unit monomials, plus pairs `X·n⊗Y - X⊗n·Y` that vanish over the algebra.
    pub fn antisymmetric(&mut self) -> VecTensor {
        let mut out = VecTensor::new();
        let qi = ScalarQ::q_pow(-1);
        for _ in 0..self.int(1, 2) {
            let a = self.element(2, 2);
            let b = self.element(1, 2);
            let m = self.unit();
            let n = self.unit();
            let pv = Tensor::letter(Letter::Pv);
            let pu = Tensor::letter(Letter::Pu);
            out.push(pv.left_mul(&a).right_mul(&m), pu.left_mul(&m.inverse().unwrap()).right_mul(&b));
            out.push(-pu.left_mul(&a).scale(&qi).right_mul(&n), pv.left_mul(&n.inverse().unwrap()).right_mul(&b));
        }
        if self.coin(0.5) {
            let x = self.vec_field();
            let y = self.vec_field();
            let n = self.element(2, 2);
            out.push(x.right_mul(&n), y.clone());
            out.push(-x, y.left_mul(&n));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::is_antisymmetric;

    #[test]
    fn seeds_are_reproducible() {
        let a: Vec<String> = (0..5).map(|_| Sampler::new(7).small().to_string()).collect();
        assert!(a.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn antisymmetric_samples_are_antisymmetric() {
        let mut s = Sampler::new(1);
        for _ in 0..10 {
            assert!(is_antisymmetric(&s.antisymmetric()));
        }
    }
}
