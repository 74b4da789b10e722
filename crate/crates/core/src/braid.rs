//! Bimodule maps on two adjacent tensor slots, given by their values on basis words.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::ScalarQ;
use crate::tensor::{Letter, Tensor, Word};

/// A map on pairs of letters, extended to any slot pair of a tensor as `id ⊗ σ ⊗ id`.
///
/// Only words in the table can be mapped; several braidings (on forms, on fields) can share
/// one table since their domains are disjoint.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Braiding {
    images: BTreeMap<[Letter; 2], Tensor>,
}

impl Braiding {
    pub fn from_images(images: impl IntoIterator<Item = ([Letter; 2], Tensor)>) -> Self {
        Braiding { images: images.into_iter().collect() }
    }

    pub fn from_fn(domain: &[[Letter; 2]], f: impl Fn([Letter; 2]) -> Tensor) -> Self {
        Self::from_images(domain.iter().map(|&w| (w, f(w))))
    }

    /// All pairs `[a, b]` with `a` from `left` and `b` from `right`.
    pub fn pairs(left: &[Letter], right: &[Letter]) -> Vec<[Letter; 2]> {
        left.iter().flat_map(|&a| right.iter().map(move |&b| [a, b])).collect()
    }

    /// The torus braiding on `Ω¹ ⊗ Ω¹`, as a constant table.
    pub fn torus_table() -> Self {
        use Letter::{Du, Dv};
        let q = ScalarQ::q();
        Self::from_images([
            ([Du, Du], Tensor::basis(vec![Du, Du])),
            ([Dv, Dv], Tensor::basis(vec![Dv, Dv])),
            ([Du, Dv], Tensor::basis(vec![Dv, Du]).scale(&q)),
            ([Dv, Du], Tensor::basis(vec![Du, Dv]).scale(&q.inv().unwrap())),
        ])
    }

    pub fn identity_on(domain: &[[Letter; 2]]) -> Self {
        Self::from_fn(domain, |w| Tensor::basis(w.to_vec()))
    }

    pub fn domain(&self) -> impl Iterator<Item = &[Letter; 2]> {
        self.images.keys()
    }

    pub fn image(&self, w: &[Letter]) -> &Tensor {
        let key: [Letter; 2] = w.try_into().expect("braiding acts on two letters");
        self.images
            .get(&key)
            .unwrap_or_else(|| panic!("braiding undefined on {}⊗{}", key[0].symbol(), key[1].symbol()))
    }

    /// `id^i ⊗ σ ⊗ id`.
    pub fn apply_at(&self, z: &Tensor, i: usize) -> Tensor {
        z.map_slots(i, 2, |w| self.image(w).clone())
    }

    pub fn apply(&self, z: &Tensor) -> Tensor {
        self.apply_at(z, 0)
    }

    /// `σ_{k+1}`: moves the letter in slot `k` to the front through the slots before it.
    pub fn move_to_front(&self, z: &Tensor, k: usize) -> Tensor {
        (0..k).rev().fold(z.clone(), |acc, j| self.apply_at(&acc, j))
    }

    pub fn scale(&self, c: &ScalarQ) -> Self {
        Self::from_images(self.images.iter().map(|(w, t)| (*w, t.scale(c))))
    }

    /// Union of two tables; entries of `other` win on overlap.
    pub fn merged(&self, other: &Braiding) -> Self {
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|(w, t)| (*w, t.clone())));
        Braiding { images }
    }

    /// True if every image has scalar coefficients.
    pub fn is_constant(&self) -> bool {
        self.images.values().all(|t| t.terms().all(|(_, c)| c.as_scalar().is_some()))
    }

    /// Matrix of a constant braiding: columns indexed by the domain words, rows by `codomain`.
    pub fn matrix(&self, codomain: &[Word]) -> Result<Matrix> {
        let domain: Vec<[Letter; 2]> = self.images.keys().copied().collect();
        let mut m = Matrix::zeros(codomain.len(), domain.len());
        for (j, w) in domain.iter().enumerate() {
            for (iw, c) in self.images[w].terms() {
                let i = codomain
                    .iter()
                    .position(|x| x == iw)
                    .ok_or_else(|| Error::NotInvertible(format!("image word outside codomain: {iw:?}")))?;
                let c = c
                    .as_scalar()
                    .ok_or_else(|| Error::NotInvertible("braiding has non-constant coefficients".into()))?;
                m.set(i, j, c);
            }
        }
        Ok(m)
    }

    /// Words appearing in the images, sorted.
    pub fn codomain(&self) -> Vec<Word> {
        let set: BTreeSet<Word> =
            self.images.values().flat_map(|t| t.terms().map(|(w, _)| w.clone()).collect::<Vec<_>>()).collect();
        set.into_iter().collect()
    }

    /// Inverse of a constant braiding whose images span the same number of words as its domain.
    pub fn inverse(&self) -> Result<Braiding> {
        let codomain = self.codomain();
        if codomain.len() != self.images.len() {
            return Err(Error::NotInvertible("braiding is not square".into()));
        }
        let inv = self.matrix(&codomain)?.inverse()?;
        let domain: Vec<[Letter; 2]> = self.images.keys().copied().collect();
        Ok(Self::from_images(codomain.iter().enumerate().map(|(j, w)| {
            let t = domain
                .iter()
                .enumerate()
                .map(|(i, d)| Tensor::basis(d.to_vec()).scale(inv.get(i, j)))
                .sum();
            ([w[0], w[1]], t)
        })))
    }

    /// `σ ∘ σ` on every domain word, provided images stay in the domain.
    pub fn squared_is_identity(&self) -> bool {
        self.images.keys().all(|w| {
            let once = self.image(w);
            once.terms().all(|(iw, _)| iw.len() == 2 && self.images.contains_key(&[iw[0], iw[1]]))
                && self.apply(once) == Tensor::basis(w.to_vec())
        })
    }

    /// `(σ⊗id)(id⊗σ)(σ⊗id) = (id⊗σ)(σ⊗id)(id⊗σ)` on all three-letter words over `letters`.
    pub fn satisfies_braid_relation(&self, letters: &[Letter]) -> bool {
        crate::tensor::all_words(letters, 3).into_iter().all(|w| {
            let z = Tensor::basis(w);
            let lhs = self.apply_at(&self.apply_at(&self.apply_at(&z, 0), 1), 0);
            let rhs = self.apply_at(&self.apply_at(&self.apply_at(&z, 1), 0), 1);
            lhs == rhs
        })
    }
}

impl std::fmt::Display for Braiding {
    /// One `σ(a⊗b) = image` entry per basis pair, separated by `; `.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .images
            .iter()
            .map(|([a, b], t)| format!("σ({}⊗{}) = {t}", a.symbol(), b.symbol()))
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::torus::TorusElement;
    use Letter::*;

    #[test]
    fn table_and_inverse() {
        let s = Braiding::torus_table();
        let q = ScalarQ::q();
        assert_eq!(s.apply(&Tensor::basis(vec![Du, Dv])), Tensor::basis(vec![Dv, Du]).scale(&q));
        let inv = s.inverse().unwrap();
        assert_eq!(inv.apply(&Tensor::basis(vec![Dv, Du])), Tensor::basis(vec![Du, Dv]).scale(&q.inv().unwrap()));
        assert!(s.squared_is_identity());
        assert!(s.satisfies_braid_relation(&Letter::FORMS));
    }

    #[test]
    fn sigma_r_moves_last_slot() {
        let s = Braiding::torus_table();
        let z = Tensor::basis(vec![Du, Dv, Du]);
        // id⊗σ: du⊗(q^{-1} du⊗dv), then σ⊗id: q^{-1} du⊗du⊗dv
        let expect = Tensor::basis(vec![Du, Du, Dv]).scale(&ScalarQ::q_pow(-1));
        assert_eq!(s.move_to_front(&z, 2), expect);
        assert_eq!(s.move_to_front(&z, 0), z);
    }

    #[test]
    fn acts_on_right_coefficients() {
        let s = Braiding::torus_table();
        let z = Tensor::word(vec![Du, Dv], TorusElement::u());
        assert_eq!(s.apply(&z), Tensor::word(vec![Dv, Du], TorusElement::u().scale(&ScalarQ::q())));
    }
}
