//! Tensor products over the torus of one-forms and vector fields.
//!
//! Every tensor power of `Ω¹` and `Vec` (and any mixture of them) is free on words in the
//! letters `du, dv, ∂_u, ∂_v`. Elements are stored with a single coefficient on the right of
//! each word. Moving a monomial `v^r u^s` rightwards past a letter multiplies it by
//! `q^{a r + b s}`, where `(a, b)` is the letter's weight:
//!
//! | letter | weight | relation              |
//! |--------|--------|-----------------------|
//! | `du`   | (-1,0) | `v du = q^{-1} du v`  |
//! | `dv`   | (0, 1) | `u dv = q dv u`       |
//! | `∂_u`  | (1, 0) | `∂_u v = q^{-1} v ∂_u`|
//! | `∂_v`  | (0,-1) | `∂_v u = q u ∂_v`     |

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::scalar::ScalarQ;
use crate::torus::TorusElement;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    Du,
    Dv,
    /// `∂_u`
    Pu,
    /// `∂_v`
    Pv,
}

impl Letter {
    pub const FORMS: [Letter; 2] = [Letter::Du, Letter::Dv];
    pub const FIELDS: [Letter; 2] = [Letter::Pu, Letter::Pv];

    pub fn weight(self) -> (i64, i64) {
        match self {
            Letter::Du => (-1, 0),
            Letter::Dv => (0, 1),
            Letter::Pu => (1, 0),
            Letter::Pv => (0, -1),
        }
    }

    pub fn is_form(self) -> bool {
        matches!(self, Letter::Du | Letter::Dv)
    }

    /// `∂_u <-> du`, `∂_v <-> dv`.
    pub fn dual(self) -> Letter {
        match self {
            Letter::Du => Letter::Pu,
            Letter::Dv => Letter::Pv,
            Letter::Pu => Letter::Du,
            Letter::Pv => Letter::Dv,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Letter::Du => "du",
            Letter::Dv => "dv",
            Letter::Pu => "pu",
            Letter::Pv => "pv",
        }
    }
}

pub type Word = Vec<Letter>;

pub fn word_weight(w: &[Letter]) -> (i64, i64) {
    w.iter().fold((0, 0), |(a, b), l| {
        let (x, y) = l.weight();
        (a + x, b + y)
    })
}

/// All words of length `n` over `letters`, in lexicographic order.
pub fn all_words(letters: &[Letter], n: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                letters.iter().map(move |&l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
    }
    out
}

/// Element of a tensor product of `Ω¹` and `Vec` factors, in right-coefficient normal form.
///
/// The empty word carries degree-0 elements (functions).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Tensor {
    terms: BTreeMap<Word, TorusElement>,
}

impl Tensor {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `w · c`
    pub fn word(w: impl Into<Word>, c: TorusElement) -> Self {
        let mut t = Self::zero();
        t.add_word(w.into(), &c);
        t
    }

    pub fn basis(w: impl Into<Word>) -> Self {
        Self::word(w, TorusElement::one())
    }

    pub fn letter(l: Letter) -> Self {
        Self::basis(vec![l])
    }

    /// Degree-0 tensor holding a function.
    pub fn function(c: TorusElement) -> Self {
        Self::word(Vec::new(), c)
    }

    /// The one-form `du·a + dv·b`.
    pub fn one_form(a: TorusElement, b: TorusElement) -> Self {
        &Self::word(vec![Letter::Du], a) + &Self::word(vec![Letter::Dv], b)
    }

    /// The vector field `a ∂_u + b ∂_v` (coefficients on the left).
    pub fn vec_field(a: &TorusElement, b: &TorusElement) -> Self {
        &Self::letter(Letter::Pu).left_mul(a) + &Self::letter(Letter::Pv).left_mul(b)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, TorusElement)>) -> Self {
        let mut t = Self::zero();
        for (w, c) in terms {
            t.add_word(w, &c);
        }
        t
    }

    pub fn add_word(&mut self, w: Word, c: &TorusElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(existing) => {
                let sum = &*existing + c;
                if sum.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &TorusElement)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Right coefficient of the basis word `w`.
    pub fn coeff(&self, w: &[Letter]) -> TorusElement {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Left coefficient of `w`, i.e. the `c` with `self = Σ c · w`.
    pub fn left_coeff(&self, w: &[Letter]) -> TorusElement {
        let (a, b) = word_weight(w);
        self.coeff(w).twist(-a, -b)
    }

    /// Common word length, or `None` for zero and for mixed-length sums.
    pub fn degree(&self) -> Option<usize> {
        let mut lens = self.terms.keys().map(Vec::len);
        let first = lens.next()?;
        lens.all(|l| l == first).then_some(first)
    }

    /// True if every word consists of form letters only.
    pub fn is_form(&self) -> bool {
        self.terms.keys().all(|w| w.iter().all(|l| l.is_form()))
    }

    /// True if this is a single-letter vector field (or zero).
    pub fn is_vec_field(&self) -> bool {
        self.terms.keys().all(|w| w.len() == 1 && !w[0].is_form())
    }

    /// Degree-0 coefficient as a function.
    pub fn as_function(&self) -> TorusElement {
        debug_assert!(self.terms.keys().all(|w| w.is_empty()));
        self.coeff(&[])
    }

    pub fn scale(&self, c: &ScalarQ) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Tensor { terms: self.terms.iter().map(|(w, x)| (w.clone(), x.scale(c))).collect() }
    }

    /// Right action `self · m`.
    pub fn right_mul(&self, m: &TorusElement) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), c * m)))
    }

    /// Left action `m · self`, rewritten into right-coefficient form through the twists.
    pub fn left_mul(&self, m: &TorusElement) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| {
            let (a, b) = word_weight(w);
            (w.clone(), &m.twist(a, b) * c)
        }))
    }

    /// `self ⊗_M other`.
    pub fn tensor(&self, other: &Tensor) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let (a, b) = word_weight(w2);
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_word(w, &(&c1.twist(a, b) * c2));
            }
        }
        out
    }

    /// Evaluates the adjacent slots `i, i+1`, which must hold a vector field followed by a
    /// one-form: `∂_u(du) = ∂_v(dv) = 1`, the other pairings vanish.
    pub fn contract(&self, i: usize) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let (x, y) = (w[i], w[i + 1]);
            assert!(!x.is_form() && y.is_form(), "cannot evaluate {} on {}", x.symbol(), y.symbol());
            if x.dual() == y {
                let mut w2 = w[..i].to_vec();
                w2.extend_from_slice(&w[i + 2..]);
                out.add_word(w2, c);
            }
        }
        out
    }

    /// Applies a right-module map on the slots `i..i+k`, given by `image` on basis words of
    /// length `k`. The map must be a bimodule map for the result to be meaningful.
    pub fn map_slots(&self, i: usize, k: usize, image: impl Fn(&[Letter]) -> Tensor) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let pre = &w[..i];
            let mid = &w[i..i + k];
            let post = &w[i + k..];
            let (a, b) = word_weight(post);
            for (iw, ic) in &image(mid).terms {
                let mut nw = pre.to_vec();
                nw.extend_from_slice(iw);
                nw.extend_from_slice(post);
                out.add_word(nw, &(&ic.twist(a, b) * c));
            }
        }
        out
    }

    /// Splits `self` into `Σ_w w ⊗ rest_w` over the first `k` letters, with `w` a basis word.
    pub fn split_front(&self, k: usize) -> BTreeMap<Word, Tensor> {
        let mut out: BTreeMap<Word, Tensor> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(w[..k].to_vec()).or_default().add_word(w[k..].to_vec(), c);
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&TorusElement) -> TorusElement) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// Renders vector-field terms as `(c)·pu` with left coefficients; other words as `w·(c)`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                if w.is_empty() {
                    format!("({c})")
                } else if w.len() == 1 && !w[0].is_form() {
                    format!("({})·{}", self.left_coeff(w), w[0].symbol())
                } else {
                    let name: Vec<&str> = w.iter().map(|l| l.symbol()).collect();
                    format!("{}·({c})", name.join("⊗"))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &Tensor {
    type Output = Tensor;
    fn add(self, rhs: &Tensor) -> Tensor {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_word(w.clone(), c);
        }
        out
    }
}

impl Neg for &Tensor {
    type Output = Tensor;
    fn neg(self) -> Tensor {
        Tensor { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }
}

impl Sub for &Tensor {
    type Output = Tensor;
    fn sub(self, rhs: &Tensor) -> Tensor {
        self + &(-rhs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Tensor {
            type Output = Tensor;
            fn $m(self, rhs: Tensor) -> Tensor { (&self).$m(&rhs) }
        }
        impl $tr<&Tensor> for Tensor {
            type Output = Tensor;
            fn $m(self, rhs: &Tensor) -> Tensor { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub);

impl Neg for Tensor {
    type Output = Tensor;
    fn neg(self) -> Tensor {
        -&self
    }
}

impl std::iter::Sum for Tensor {
    fn sum<I: Iterator<Item = Tensor>>(iter: I) -> Tensor {
        iter.fold(Tensor::zero(), |acc, t| &acc + &t)
    }
}

/// The two-form `(du∧dv)·coef`; `Ω²` is free of rank one on `du∧dv`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct TwoForm {
    pub coef: TorusElement,
}

impl TwoForm {
    /// Weight of the word `du∧dv`.
    pub const WEIGHT: (i64, i64) = (-1, 1);

    pub fn new(coef: TorusElement) -> Self {
        TwoForm { coef }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn volume() -> Self {
        Self::new(TorusElement::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coef.is_zero()
    }

    pub fn scale(&self, c: &ScalarQ) -> Self {
        Self::new(self.coef.scale(c))
    }

    pub fn right_mul(&self, m: &TorusElement) -> Self {
        Self::new(&self.coef * m)
    }

    pub fn left_mul(&self, m: &TorusElement) -> Self {
        Self::new(&m.twist(Self::WEIGHT.0, Self::WEIGHT.1) * &self.coef)
    }
}

impl Add for &TwoForm {
    type Output = TwoForm;
    fn add(self, rhs: &TwoForm) -> TwoForm {
        TwoForm::new(&self.coef + &rhs.coef)
    }
}

impl Sub for &TwoForm {
    type Output = TwoForm;
    fn sub(self, rhs: &TwoForm) -> TwoForm {
        TwoForm::new(&self.coef - &rhs.coef)
    }
}

impl Neg for &TwoForm {
    type Output = TwoForm;
    fn neg(self) -> TwoForm {
        TwoForm::new(-&self.coef)
    }
}

impl fmt::Display for TwoForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "du∧dv·({})", self.coef)
        }
    }
}

/// Element of `Ω¹ ⊗ Ω²`: `du ⊗ (du∧dv)·on_du + dv ⊗ (du∧dv)·on_dv`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct FormTwoForm {
    pub on_du: TorusElement,
    pub on_dv: TorusElement,
}

impl fmt::Display for FormTwoForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.on_du.is_zero() {
            parts.push(format!("du⊗(du∧dv)·({})", self.on_du));
        }
        if !self.on_dv.is_zero() {
            parts.push(format!("dv⊗(du∧dv)·({})", self.on_dv));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
