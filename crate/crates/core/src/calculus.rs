//! The differential calculus on the torus: `d`, the wedge collapse onto `Ω²`, lifts, and the
//! wedge kernels.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::ScalarQ;
use crate::tensor::{all_words, Letter, Tensor, TwoForm};
use crate::torus::{Monomial, TorusElement};

use Letter::{Du, Dv};

/// `d(v^r u^s) = r dv·v^{r-1}u^s + s q^{-r} du·v^r u^{s-1}`, extended linearly.
pub fn d0(m: &TorusElement) -> Tensor {
    let mut on_du = TorusElement::zero();
    let mut on_dv = TorusElement::zero();
    for (mono, c) in m.terms() {
        let (r, s) = (mono.r, mono.s);
        if r != 0 {
            on_dv.add_term(Monomial::new(r - 1, s), &(&ScalarQ::from_int(r) * c));
        }
        if s != 0 {
            on_du.add_term(Monomial::new(r, s - 1), &(&ScalarQ::from_int(s) * c).mul_q_pow(-r));
        }
    }
    Tensor::one_form(on_du, on_dv)
}

/// `d(du·a) = -du∧da`, `d(dv·a) = -dv∧da`.
pub fn d1(w: &Tensor) -> TwoForm {
    let mut out = TwoForm::zero();
    for (word, c) in w.terms() {
        assert_eq!(word.len(), 1, "d1 expects a one-form");
        let z = Tensor::letter(word[0]).tensor(&d0(c));
        out = &out - &wedge_collapse(&z);
    }
    out
}

/// `du⊗dv·a -> (du∧dv)·a`, `dv⊗du·a -> -q^{-1}(du∧dv)·a`, diagonal words vanish.
pub fn wedge_collapse(z: &Tensor) -> TwoForm {
    let mut coef = TorusElement::zero();
    for (word, c) in z.terms() {
        match word.as_slice() {
            [Du, Dv] => coef = &coef + c,
            [Dv, Du] => coef = &coef - &c.scale(&ScalarQ::q_pow(-1)),
            [Du, Du] | [Dv, Dv] => {}
            _ => panic!("wedge collapse expects a two-tensor of forms"),
        }
    }
    TwoForm::new(coef)
}

/// Collapses the last two slots of a three-tensor, giving an element of `Ω¹ ⊗ Ω²`.
pub fn wedge_collapse_last(z: &Tensor) -> (TorusElement, TorusElement) {
    let parts = z.split_front(1);
    let get = |l: Letter| parts.get(&vec![l]).map(|t| wedge_collapse(t).coef).unwrap_or_default();
    (get(Du), get(Dv))
}

/// Canonical lift `(du∧dv)·a -> du⊗dv·a`.
pub fn lift_two_form(w: &TwoForm) -> Tensor {
    Tensor::word(vec![Du, Dv], w.coef.clone())
}

/// Alternative lift `(du∧dv)·a -> -q dv⊗du·a`.
pub fn lift_two_form_alt(w: &TwoForm) -> Tensor {
    Tensor::word(vec![Dv, Du], w.coef.scale(&-ScalarQ::q()))
}

/// Right-module generators of the wedge kernel in degree 2 or 3.
pub fn theta_generators(n: usize) -> Result<Vec<Tensor>> {
    match n {
        2 => Ok(vec![
            Tensor::basis(vec![Du, Du]),
            Tensor::basis(vec![Dv, Dv]),
            &Tensor::basis(vec![Du, Dv]) + &Tensor::basis(vec![Dv, Du]).scale(&ScalarQ::q()),
        ]),
        // Ω³ = 0, so every word is in the kernel
        3 => Ok(all_words(&Letter::FORMS, 3).into_iter().map(Tensor::basis).collect()),
        _ => Err(Error::UnsupportedDegree(n)),
    }
}

/// A differential form of degree 0, 1 or 2.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Form {
    Zero(TorusElement),
    One(Tensor),
    Two(TwoForm),
}

impl Form {
    pub fn degree(&self) -> usize {
        match self {
            Form::Zero(_) => 0,
            Form::One(_) => 1,
            Form::Two(_) => 2,
        }
    }

    pub fn zero_of_degree(n: usize) -> Self {
        match n {
            0 => Form::Zero(TorusElement::zero()),
            1 => Form::One(Tensor::zero()),
            _ => Form::Two(TwoForm::zero()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Form::Zero(m) => m.is_zero(),
            Form::One(w) => w.is_zero(),
            Form::Two(w) => w.is_zero(),
        }
    }

    /// Exterior derivative; `None` from degree 2 since `Ω³ = 0`.
    pub fn d(&self) -> Option<Form> {
        match self {
            Form::Zero(m) => Some(Form::One(d0(m))),
            Form::One(w) => Some(Form::Two(d1(w))),
            Form::Two(_) => None,
        }
    }

    /// Exterior derivative, with `Ω³` represented by zero in degree 2.
    pub fn d_or_zero(&self) -> Form {
        self.d().unwrap_or_else(|| Form::Two(TwoForm::zero()))
    }

    pub fn add(&self, other: &Form) -> Form {
        match (self, other) {
            (Form::Zero(a), Form::Zero(b)) => Form::Zero(a + b),
            (Form::One(a), Form::One(b)) => Form::One(a + b),
            (Form::Two(a), Form::Two(b)) => Form::Two(a + b),
            _ => panic!("adding forms of different degree"),
        }
    }

    pub fn sub(&self, other: &Form) -> Form {
        self.add(&other.scale(&ScalarQ::from_int(-1)))
    }

    pub fn scale(&self, c: &ScalarQ) -> Form {
        match self {
            Form::Zero(a) => Form::Zero(a.scale(c)),
            Form::One(a) => Form::One(a.scale(c)),
            Form::Two(a) => Form::Two(a.scale(c)),
        }
    }

    pub fn left_mul(&self, m: &TorusElement) -> Form {
        match self {
            Form::Zero(a) => Form::Zero(m * a),
            Form::One(a) => Form::One(a.left_mul(m)),
            Form::Two(a) => Form::Two(a.left_mul(m)),
        }
    }

    pub fn right_mul(&self, m: &TorusElement) -> Form {
        match self {
            Form::Zero(a) => Form::Zero(a * m),
            Form::One(a) => Form::One(a.right_mul(m)),
            Form::Two(a) => Form::Two(a.right_mul(m)),
        }
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Form::Zero(m) => write!(f, "{m}"),
            Form::One(w) => write!(f, "{w}"),
            Form::Two(w) => write!(f, "{w}"),
        }
    }
}

/// Wedge product; `None` when the degree exceeds 2 (the product lands in `Ω³ = 0`).
pub fn wedge(a: &Form, b: &Form) -> Option<Form> {
    Some(match (a, b) {
        (Form::Zero(m), other) => other.left_mul(m),
        (other, Form::Zero(m)) => other.right_mul(m),
        (Form::One(x), Form::One(y)) => Form::Two(wedge_collapse(&x.tensor(y))),
        _ => return None,
    })
}

/// Wedge product with `Ω³` represented by the zero two-form.
pub fn wedge_or_zero(a: &Form, b: &Form) -> Form {
    wedge(a, b).unwrap_or_else(|| Form::Two(TwoForm::zero()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> ScalarQ {
        ScalarQ::q()
    }

    fn qi() -> ScalarQ {
        ScalarQ::q_pow(-1)
    }

    #[test]
    fn d_of_vu() {
        let got = d0(&TorusElement::monomial(1, 1));
        let expect = Tensor::one_form(TorusElement::v().scale(&qi()), TorusElement::u());
        assert_eq!(got, expect);
        assert!(d0(&TorusElement::one()).is_zero());
    }

    #[test]
    fn d_of_uv_by_leibniz() {
        let uv = &TorusElement::u() * &TorusElement::v();
        let expect = Tensor::one_form(TorusElement::v(), TorusElement::u().scale(&q()));
        assert_eq!(d0(&uv), expect);
    }

    #[test]
    fn d1_examples() {
        assert!(d1(&Tensor::word(vec![Du], TorusElement::u())).is_zero());
        assert_eq!(d1(&Tensor::word(vec![Du], TorusElement::v())), TwoForm::new(TorusElement::scalar(ScalarQ::from_int(-1))));
        assert_eq!(d1(&Tensor::word(vec![Dv], TorusElement::u())), TwoForm::new(TorusElement::scalar(qi())));
    }

    #[test]
    fn collapse_examples() {
        assert_eq!(wedge_collapse(&Tensor::basis(vec![Dv, Du])), TwoForm::new(TorusElement::scalar(-qi())));
        assert!(wedge_collapse(&Tensor::basis(vec![Du, Du])).is_zero());
        let g = (&Tensor::basis(vec![Du, Dv]) + &Tensor::basis(vec![Dv, Du]).scale(&q())).right_mul(&TorusElement::u());
        assert!(wedge_collapse(&g).is_zero());
    }

    #[test]
    fn lifts_are_sections() {
        let w = TwoForm::new(TorusElement::v());
        assert_eq!(lift_two_form(&w), Tensor::word(vec![Du, Dv], TorusElement::v()));
        assert_eq!(wedge_collapse(&lift_two_form(&w)), w);
        assert_eq!(wedge_collapse(&lift_two_form_alt(&w)), w);
        assert!(lift_two_form(&TwoForm::zero()).is_zero());
        assert_eq!(lift_two_form(&TwoForm::volume()), Tensor::basis(vec![Du, Dv]));
    }

    #[test]
    fn theta_spaces() {
        let t2 = theta_generators(2).unwrap();
        assert_eq!(t2.len(), 3);
        for g in &t2 {
            assert!(wedge_collapse(g).is_zero());
        }
        assert_eq!(theta_generators(3).unwrap().len(), 8);
        assert!(matches!(theta_generators(1), Err(Error::UnsupportedDegree(1))));
    }

    #[test]
    fn du_wedge_dv_relation() {
        // du∧dv = -q dv∧du
        let dudv = wedge(&Form::One(Tensor::letter(Du)), &Form::One(Tensor::letter(Dv))).unwrap();
        let dvdu = wedge(&Form::One(Tensor::letter(Dv)), &Form::One(Tensor::letter(Du))).unwrap();
        assert_eq!(dudv, dvdu.scale(&-q()));
    }
}
