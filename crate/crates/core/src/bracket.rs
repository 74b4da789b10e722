//! Antisymmetric tensors of vector fields, the bracket map `φ`, curvature and torsion.
//!
//! `φ` is not defined on `Vec ⊗_M Vec`, so inputs are kept as lists of pairs `X ⊗ Y` in the
//! full tensor product over the scalars. Antisymmetry only depends on the image in `Vec ⊗_M Vec`
//! and is tested against the right-module generators of `Θ²`: the pairing is right-linear in
//! `k`, so vanishing on generators gives vanishing on all of `Θ²`.

use std::fmt;

use crate::calculus::{d1, lift_two_form, theta_generators};
use crate::connection::Connection;
use crate::error::{Error, Result};
use crate::interior::{directional, evaluate};
use crate::tensor::{Letter, Tensor};
use crate::torus::TorusElement;

/// A finite sum `Σ X_i ⊗ Y_i` of vector-field pairs, not reduced over the algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VecTensor {
    pub pairs: Vec<(Tensor, Tensor)>,
}

impl VecTensor {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pair(x: Tensor, y: Tensor) -> Self {
        VecTensor { pairs: vec![(x, y)] }
    }

    pub fn push(&mut self, x: Tensor, y: Tensor) {
        self.pairs.push((x, y));
    }

    pub fn extend(&mut self, other: VecTensor) {
        self.pairs.extend(other.pairs);
    }

    /// `∂_v⊗∂_u - q^{-1} ∂_u⊗∂_v`.
    pub fn basic_antisymmetric() -> Self {
        let mut x = Self::pair(Tensor::letter(Letter::Pv), Tensor::letter(Letter::Pu));
        let c = crate::scalar::ScalarQ::q_pow(-1);
        x.push(-Tensor::letter(Letter::Pu).scale(&c), Tensor::letter(Letter::Pv));
        x
    }

    /// Image in `Vec ⊗_M Vec`.
    pub fn pi(&self) -> Tensor {
        self.pairs.iter().map(|(x, y)| x.tensor(y)).sum()
    }

    /// Applies `f` to every pair.
    pub fn map(&self, f: impl Fn(&Tensor, &Tensor) -> (Tensor, Tensor)) -> Self {
        VecTensor { pairs: self.pairs.iter().map(|(x, y)| f(x, y)).collect() }
    }

    /// `X ⊗ Y -> X ⊗ m·Y`.
    pub fn inner_left(&self, m: &TorusElement) -> Self {
        self.map(|x, y| (x.clone(), y.left_mul(m)))
    }

    /// `X ⊗ Y -> X·m ⊗ Y`.
    pub fn inner_right(&self, m: &TorusElement) -> Self {
        self.map(|x, y| (x.right_mul(m), y.clone()))
    }

    /// `X ⊗ Y -> X ⊗ Y·m`.
    pub fn outer_right(&self, m: &TorusElement) -> Self {
        self.map(|x, y| (x.clone(), y.right_mul(m)))
    }

    /// `X ⊗ Y -> m·X ⊗ Y`.
    pub fn outer_left(&self, m: &TorusElement) -> Self {
        self.map(|x, y| (x.left_mul(m), y.clone()))
    }
}

impl fmt::Display for VecTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.pairs.iter().map(|(x, y)| format!("[{x}]⊗[{y}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `ev(id⊗ev⊗id)(πx ⊗ k)` for a two-tensor of forms `k`.
pub fn antisymmetry_pairing(x: &VecTensor, k: &Tensor) -> TorusElement {
    x.pi().tensor(k).contract(1).contract(0).as_function()
}

pub fn is_antisymmetric(x: &VecTensor) -> bool {
    theta_generators(2).expect("degree 2").iter().all(|k| antisymmetry_pairing(x, k).is_zero())
}

/// `φ(x)(ξ) = Σ D_X(Y(ξ)) + ev(id⊗ev⊗id)(X ⊗ Y ⊗ z)` with `∧z = dξ`, returned as the vector
/// field with these values on `du` and `dv`.
pub fn phi(x: &VecTensor) -> Result<Tensor> {
    if !is_antisymmetric(x) {
        return Err(Error::NotAntisymmetric(x.to_string()));
    }
    let value = |xi: &Tensor| -> TorusElement {
        let z = lift_two_form(&d1(xi));
        x.pairs
            .iter()
            .map(|(a, b)| {
                let first = directional(a, &evaluate(b, xi));
                let second = a.tensor(&b.tensor(&z).contract(0)).contract(0).as_function();
                &first + &second
            })
            .fold(TorusElement::zero(), |acc, t| &acc + &t)
    };
    Ok(Tensor::vec_field(&value(&Tensor::letter(Letter::Du)), &value(&Tensor::letter(Letter::Dv))))
}

/// `R(x)(e) = Σ ∇_X ∇_Y e - ∇_{φ(x)} e` for `e` a one-form or a vector field.
pub fn curvature(conn: &Connection, x: &VecTensor, e: &Tensor) -> Result<Tensor> {
    let f = phi(x)?;
    let first: Tensor = x.pairs.iter().map(|(a, b)| conn.nabla_along(a, &conn.nabla_along(b, e))).sum();
    Ok(&first - &conn.nabla_along(&f, e))
}

/// `T(x) = Σ ∇_X Y - φ(x)`.
pub fn torsion(conn: &Connection, x: &VecTensor) -> Result<Tensor> {
    let f = phi(x)?;
    let first: Tensor = x.pairs.iter().map(|(a, b)| conn.nabla_along(a, b)).sum();
    Ok(&first - &f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connection::ConnectionParams;

    #[test]
    fn antisymmetry_examples() {
        assert!(is_antisymmetric(&VecTensor::basic_antisymmetric()));
        let uu = VecTensor::pair(Tensor::letter(Letter::Pu), Tensor::letter(Letter::Pu));
        assert!(!is_antisymmetric(&uu));
        assert!(is_antisymmetric(&VecTensor::new()));
        assert!(matches!(phi(&uu), Err(Error::NotAntisymmetric(_))));
    }

    #[test]
    fn phi_of_basic_element_vanishes() {
        assert!(phi(&VecTensor::basic_antisymmetric()).unwrap().is_zero());
    }

    #[test]
    fn flat_curvature_and_torsion() {
        let conn = Connection::new(ConnectionParams::zero()).unwrap();
        let x = VecTensor::basic_antisymmetric();
        assert!(curvature(&conn, &x, &Tensor::letter(Letter::Pu)).unwrap().is_zero());
        assert!(torsion(&conn, &x).unwrap().is_zero());
    }

    #[test]
    fn phi_right_defect() {
        // φ(X⊗Y)·m = φ(X⊗Y·m) + X·D_Y(m) with X⊗Y = ∂_v⊗∂_u - q^{-1}∂_u⊗∂_v and m = u
        let x = VecTensor::basic_antisymmetric();
        let m = TorusElement::u();
        let lhs = phi(&x).unwrap().right_mul(&m);
        let defect: Tensor = x.pairs.iter().map(|(a, b)| a.right_mul(&directional(b, &m))).sum();
        assert_eq!(lhs, &phi(&x.outer_right(&m)).unwrap() + &defect);
    }
}
