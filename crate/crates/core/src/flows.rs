//! Truncated power series in a central time `t`: exponentials of time-independent vector fields
//! acting on forms, parallel transport and geodesics.

use std::fmt;

use crate::calculus::Form;
use crate::connection::Connection;
use crate::interior::Interior;
use crate::scalar::ScalarQ;
use crate::tensor::{Letter, Tensor, TwoForm};
use crate::torus::{Monomial, TorusElement};

pub const DEFAULT_ORDER: usize = 8;

/// Coefficient types a series can carry.
pub trait Payload: Clone + PartialEq + fmt::Display {
    fn zero_like(&self) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, c: &ScalarQ) -> Self;
    fn vanishes(&self) -> bool;
}

impl Payload for Form {
    fn zero_like(&self) -> Self {
        Form::zero_of_degree(self.degree())
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn times(&self, c: &ScalarQ) -> Self {
        self.scale(c)
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
}

impl Payload for Tensor {
    fn zero_like(&self) -> Self {
        Tensor::zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, c: &ScalarQ) -> Self {
        self.scale(c)
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
}

impl Payload for TorusElement {
    fn zero_like(&self) -> Self {
        TorusElement::zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, c: &ScalarQ) -> Self {
        self.scale(c)
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
}

/// `c_0 + c_1 t + … + c_N t^N`, everything above `t^N` discarded.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormalSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Payload> FormalSeries<T> {
    /// Panics on an empty coefficient list.
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least c0");
        FormalSeries { coeffs }
    }

    pub fn constant(c: T, order: usize) -> Self {
        let z = c.zero_like();
        let mut coeffs = vec![z; order + 1];
        coeffs[0] = c;
        FormalSeries { coeffs }
    }

    /// Builds `c_0..c_N` from `c_k = f(k, c_{k-1})`.
    pub fn recurse(c0: T, order: usize, mut f: impl FnMut(usize, &T) -> T) -> Self {
        let mut coeffs = vec![c0];
        for k in 1..=order {
            let next = f(k, &coeffs[k - 1]);
            coeffs.push(next);
        }
        FormalSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &T {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn map<U: Payload>(&self, f: impl Fn(&T) -> U) -> FormalSeries<U> {
        FormalSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        FormalSeries { coeffs: (0..=n).map(|k| self.coeffs[k].plus(&other.coeffs[k])).collect() }
    }

    pub fn scale(&self, c: &ScalarQ) -> Self {
        self.map(|x| x.times(c))
    }

    /// `d/dt`, losing the top coefficient.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return FormalSeries::constant(self.coeffs[0].zero_like(), 0);
        }
        FormalSeries {
            coeffs: (1..=self.order()).map(|k| self.coeffs[k].times(&ScalarQ::from_int(k as i64))).collect(),
        }
    }

    /// Cauchy product for a bilinear `f`, truncated at the smaller order.
    pub fn product<U: Payload, V: Payload>(&self, other: &FormalSeries<U>, f: impl Fn(&T, &U) -> V) -> FormalSeries<V> {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|k| {
                let mut acc = f(&self.coeffs[0], &other.coeffs[k]);
                for i in 1..=k {
                    acc = acc.plus(&f(&self.coeffs[i], &other.coeffs[k - i]));
                }
                acc
            })
            .collect();
        FormalSeries { coeffs }
    }

    pub fn truncate(&self, order: usize) -> Self {
        FormalSeries { coeffs: self.coeffs[..=order.min(self.order())].to_vec() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Payload::vanishes)
    }
}

impl<T: Payload> fmt::Display for FormalSeries<T> {
    /// `c0 + t·(c1) + t^2·(c2) + …`, zero coefficients omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.vanishes() {
                continue;
            }
            parts.push(match k {
                0 => c.to_string(),
                1 => format!("t·({c})"),
                _ => format!("t^{k}·({c})"),
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `Σ t^k/k! L_X^k ω`, from `(k+1) c_{k+1} = L_X c_k`.
pub fn exp_lie(interior: &Interior, x: &Tensor, w: &Form, order: usize) -> FormalSeries<Form> {
    FormalSeries::recurse(w.clone(), order, |k, prev| interior.lie(x, prev).scale(&ScalarQ::from_ratio(1, k as i64)))
}

/// Whether `(k+1) c_{k+1} = L_X c_k` for every available `k`.
pub fn satisfies_lie_recursion(interior: &Interior, x: &Tensor, s: &FormalSeries<Form>) -> bool {
    (0..s.order()).all(|k| s.coeff(k + 1).scale(&ScalarQ::from_int(k as i64 + 1)) == interior.lie(x, s.coeff(k)))
}

/// The two time-independent fields with known exponentials.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FlowField {
    /// `∂_u`
    Pu,
    /// `u·∂_u`
    UPu,
}

impl FlowField {
    pub const ALL: [FlowField; 2] = [FlowField::Pu, FlowField::UPu];

    pub fn field(self) -> Tensor {
        match self {
            FlowField::Pu => Tensor::letter(Letter::Pu),
            FlowField::UPu => Tensor::letter(Letter::Pu).left_mul(&TorusElement::u()),
        }
    }
}

impl fmt::Display for FlowField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FlowField::Pu => "∂u",
            FlowField::UPu => "u∂u",
        })
    }
}

/// Monomial forms `v^r u^s`, `du·v^r u^s`, `dv·v^n u^m` and `du∧dv·v^r u^s`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Seed {
    Function(i64, i64),
    DuForm(i64, i64),
    DvForm(i64, i64),
    Volume(i64, i64),
}

impl Seed {
    pub fn form(self) -> Form {
        match self {
            Seed::Function(r, s) => Form::Zero(TorusElement::monomial(r, s)),
            Seed::DuForm(r, s) => Form::One(Tensor::word(vec![Letter::Du], TorusElement::monomial(r, s))),
            Seed::DvForm(r, s) => Form::One(Tensor::word(vec![Letter::Dv], TorusElement::monomial(r, s))),
            Seed::Volume(r, s) => Form::Two(TwoForm::new(TorusElement::monomial(r, s))),
        }
    }

    /// Every seed of every degree with exponents in `[-bound, bound]`.
    pub fn all(bound: i64) -> Vec<Seed> {
        let mut out = Vec::new();
        for r in -bound..=bound {
            for s in -bound..=bound {
                out.extend([Seed::Function(r, s), Seed::DuForm(r, s), Seed::DvForm(r, s), Seed::Volume(r, s)]);
            }
        }
        out
    }

    fn u_exponent(self) -> i64 {
        match self {
            Seed::Function(_, s) | Seed::DuForm(_, s) | Seed::DvForm(_, s) | Seed::Volume(_, s) => s,
        }
    }
}

/// `C(e, k) = e(e-1)…(e-k+1)/k!` for any integer `e`.
pub fn binomial(e: i64, k: usize) -> ScalarQ {
    let mut c = ScalarQ::one();
    for i in 0..k as i64 {
        c = &c * &ScalarQ::from_ratio(e - i, i + 1);
    }
    c
}

/// Taylor coefficients of the closed forms: `(1+t u^{-1})^e · ω` for `∂_u`, `e^{λt} ω` for `u∂_u`.
pub fn closed_form_series(field: FlowField, seed: Seed, order: usize) -> FormalSeries<Form> {
    let base = seed.form();
    match field {
        FlowField::Pu => {
            let e = seed.u_exponent();
            let coeffs = (0..=order)
                .map(|k| {
                    let uk = TorusElement::term(binomial(e, k), Monomial::new(0, -(k as i64)));
                    base.left_mul(&uk)
                })
                .collect();
            FormalSeries::new(coeffs)
        }
        FlowField::UPu => {
            let lambda = match seed {
                Seed::Function(_, s) | Seed::DvForm(_, s) => s,
                Seed::DuForm(_, s) | Seed::Volume(_, s) => s + 1,
            };
            let mut c = ScalarQ::one();
            let coeffs = (0..=order)
                .map(|k| {
                    if k > 0 {
                        c = &c * &ScalarQ::from_ratio(lambda, k as i64);
                    }
                    base.scale(&c)
                })
                .collect();
            FormalSeries::new(coeffs)
        }
    }
}

/// `d` applied to each coefficient of `exp(ω)` against `exp(dω)`, through `order`.
pub fn cochain_check(interior: &Interior, x: &Tensor, w: &Form, order: usize) -> bool {
    let lhs = exp_lie(interior, x, w, order).map(Form::d_or_zero);
    let rhs = exp_lie(interior, x, &w.d_or_zero(), order);
    lhs == rhs
}

/// `(k+1) c_{k+1} = d(exp(X⌟ω))_k + exp(X⌟dω)_k` through order `order - 1`, for `ω` of degree
/// 1 or 2.
pub fn homotopy_check(interior: &Interior, x: &Tensor, w: &Form, order: usize) -> bool {
    let lhs = exp_lie(interior, x, w, order).derivative();
    let h_w = exp_lie(interior, x, &interior.interior(x, w), order).map(Form::d_or_zero);
    let dw = w.d_or_zero();
    let h_dw = if dw.is_zero() {
        FormalSeries::constant(w.zero_like(), order)
    } else {
        exp_lie(interior, x, &interior.interior(x, &dw), order)
    };
    let rhs = h_w.add(&h_dw).truncate(order - 1);
    lhs == rhs
}

/// Solves `ċ = -∇_X c` from `c(0) = c0`.
pub fn parallel_transport(conn: &Connection, x: &Tensor, c0: &Tensor, order: usize) -> FormalSeries<Tensor> {
    FormalSeries::recurse(c0.clone(), order, |k, prev| {
        conn.nabla_along(x, prev).scale(&ScalarQ::from_ratio(-1, k as i64))
    })
}

/// Solves `ċ = -∇_c c` from `c(0) = c0`: `(k+1) c_{k+1} = -Σ_{i+j=k} ∇_{c_i} c_j`.
pub fn geodesic(conn: &Connection, c0: &Tensor, order: usize) -> FormalSeries<Tensor> {
    let mut coeffs = vec![c0.clone()];
    for k in 0..order {
        let sum: Tensor = (0..=k).map(|i| conn.nabla_along(&coeffs[i], &coeffs[k - i])).sum();
        coeffs.push(sum.scale(&ScalarQ::from_ratio(-1, k as i64 + 1)));
    }
    FormalSeries::new(coeffs)
}

/// `ċ + ∇_X c` through order `N - 1`.
pub fn transport_residual(conn: &Connection, x: &Tensor, c: &FormalSeries<Tensor>) -> FormalSeries<Tensor> {
    let flow = c.truncate(c.order().saturating_sub(1)).map(|e| conn.nabla_along(x, e));
    c.derivative().add(&flow)
}

/// `ċ + ∇_c c` through order `N - 1`.
pub fn geodesic_residual(conn: &Connection, c: &FormalSeries<Tensor>) -> FormalSeries<Tensor> {
    let flow = c.product(c, |a, b| conn.nabla_along(a, b));
    c.derivative().add(&flow)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connection::ConnectionParams;

    fn pu() -> Tensor {
        Tensor::letter(Letter::Pu)
    }

    fn fun(r: i64, s: i64) -> Form {
        Form::Zero(TorusElement::monomial(r, s))
    }

    #[test]
    fn exp_of_u_along_pu() {
        let s = exp_lie(&Interior::default(), &pu(), &fun(0, 1), 3);
        assert_eq!(s.coeff(0), &fun(0, 1));
        assert_eq!(s.coeff(1), &fun(0, 0));
        assert!(s.coeff(2).is_zero() && s.coeff(3).is_zero());
    }

    #[test]
    fn exp_of_v_along_upu_is_constant() {
        let s = exp_lie(&Interior::default(), &FlowField::UPu.field(), &fun(1, 0), 5);
        assert_eq!(s, FormalSeries::constant(fun(1, 0), 5));
    }

    #[test]
    fn exp_of_u_inverse() {
        let s = exp_lie(&Interior::default(), &pu(), &fun(0, -1), 2);
        assert_eq!(s.coeffs(), &[fun(0, -1), fun(0, -2).scale(&ScalarQ::from_int(-1)), fun(0, -3)]);
    }

    #[test]
    fn closed_form_examples() {
        let s = closed_form_series(FlowField::Pu, Seed::Function(0, 2), 2);
        assert_eq!(s.coeffs(), &[fun(0, 2), fun(0, 1).scale(&ScalarQ::from_int(2)), fun(0, 0)]);
        let s = closed_form_series(FlowField::UPu, Seed::Volume(0, 0), 2);
        let vol = |c: ScalarQ| Form::Two(TwoForm::volume().scale(&c));
        assert_eq!(s.coeffs(), &[vol(ScalarQ::one()), vol(ScalarQ::one()), vol(ScalarQ::from_ratio(1, 2))]);
        let s = closed_form_series(FlowField::Pu, Seed::Volume(0, 0), 4);
        assert_eq!(s, FormalSeries::constant(Form::Two(TwoForm::volume()), 4));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(-1, 3), ScalarQ::from_int(-1));
        assert_eq!(binomial(2, 3), ScalarQ::zero());
        assert_eq!(binomial(-2, 2), ScalarQ::from_int(3));
    }

    #[test]
    fn cochain_and_homotopy_examples() {
        let i = Interior::default();
        assert!(cochain_check(&i, &pu(), &fun(0, 1), 8));
        assert!(cochain_check(&i, &FlowField::UPu.field(), &fun(1, 1), 8));
        assert!(cochain_check(&i, &pu(), &fun(0, 0), 8));
        assert!(homotopy_check(&i, &pu(), &Form::Two(TwoForm::volume()), 8));
        let duv = Form::One(Tensor::word(vec![Letter::Du], TorusElement::v()));
        assert!(homotopy_check(&i, &FlowField::UPu.field(), &duv, 8));
    }

    #[test]
    fn transport_examples() {
        let flat = Connection::new(ConnectionParams::zero()).unwrap();
        assert_eq!(parallel_transport(&flat, &pu(), &pu(), 4), FormalSeries::constant(pu(), 4));
        assert!(parallel_transport(&flat, &pu(), &Tensor::zero(), 4).is_zero());
        let conn = Connection::new(ConnectionParams::zero().with("ruu", ScalarQ::one())).unwrap();
        let s = parallel_transport(&conn, &pu(), &pu(), 1);
        assert_eq!(s.coeff(1), &pu().left_mul(&TorusElement::monomial(0, -1)));
        assert!(transport_residual(&conn, &pu(), &parallel_transport(&conn, &pu(), &pu(), 4)).is_zero());
    }

    #[test]
    fn geodesic_examples() {
        let flat = Connection::new(ConnectionParams::zero()).unwrap();
        assert_eq!(geodesic(&flat, &pu(), 4), FormalSeries::constant(pu(), 4));
        let conn = Connection::new(ConnectionParams::zero().with("ruu", ScalarQ::one())).unwrap();
        let g = geodesic(&conn, &pu(), 4);
        assert!(!g.coeff(1).is_zero());
        assert!(geodesic_residual(&conn, &g).is_zero());
    }

    #[test]
    fn rendering() {
        let s = closed_form_series(FlowField::Pu, Seed::Function(0, 1), 2);
        assert_eq!(s.to_string(), "(1) u^1 + t·(1)");
    }
}

