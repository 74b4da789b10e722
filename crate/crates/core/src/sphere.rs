//! Matrix-level analysis of the constant-coefficient braiding family on the quantum sphere.
//!
//! Two-tensors of forms use the ordered basis `dz⊗dz, dz⊗dz̄, dz̄⊗dz, dz̄⊗dz̄` (indices 0..3,
//! word `(i, j)` at `2i + j`); three-tensors use `4i + 2j + k`. A matrix column holds the image
//! of the corresponding basis word. Mixed field/form words `∂_a⊗dz^b` and `dz^k⊗∂_i` are
//! indexed `2a + b` and `2k + i`.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::ScalarQ;

/// The four constants `h_{ij1}` of the braiding.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SphereParams {
    pub h111: ScalarQ,
    pub h121: ScalarQ,
    pub h211: ScalarQ,
    pub h221: ScalarQ,
}


fn int(n: i64) -> ScalarQ {
    ScalarQ::from_int(n)
}

/// `q^2 - 1`
fn q2m1() -> ScalarQ {
    &ScalarQ::q_pow(2) - &int(1)
}

impl SphereParams {
    pub fn new(h111: ScalarQ, h121: ScalarQ, h211: ScalarQ, h221: ScalarQ) -> Self {
        SphereParams { h111, h121, h211, h221 }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `1/(q^2 - 1)`
    pub fn special_h121() -> ScalarQ {
        q2m1().inv().unwrap()
    }

    /// `1/(q^2 - q^4)`
    pub fn special_h211() -> ScalarQ {
        (&ScalarQ::q_pow(2) - &ScalarQ::q_pow(4)).inv().unwrap()
    }

    /// `h111 = h221 = 0`, `h121 = 1/(q^2-1)`, `h211 = 1/(q^2-q^4)`.
    pub fn special() -> Self {
        Self::new(ScalarQ::zero(), Self::special_h121(), Self::special_h211(), ScalarQ::zero())
    }

    /// `x = (q^2-1)(h121 - q^2 h211) - 1`.
    pub fn x(&self) -> ScalarQ {
        &(&q2m1() * &(&self.h121 - &self.h211.mul_q_pow(2))) - &int(1)
    }

    pub fn set(&mut self, name: &str, value: ScalarQ) -> Result<()> {
        let slot = match name {
            "h111" => &mut self.h111,
            "h121" => &mut self.h121,
            "h211" => &mut self.h211,
            "h221" => &mut self.h221,
            _ => return Err(Error::Config(format!("unknown sphere parameter {name}"))),
        };
        *slot = value;
        Ok(())
    }
}

impl fmt::Display for SphereParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h111={} h121={} h211={} h221={}", self.h111, self.h121, self.h211, self.h221)
    }
}

/// The braiding matrix: `σ(dz⊗dz) = dz⊗dz`, `σ(dz̄⊗dz̄) = dz̄⊗dz̄`,
/// `σ(dz⊗dz̄) = q^{-2} dz̄⊗dz + (q^2-1) H` and `σ(dz̄⊗dz) = q^2 dz⊗dz̄ - q^2(q^2-1) H`,
/// where `H = Σ h_{ij1} dz^i⊗dz^j`.
pub fn sphere_sigma(h: &SphereParams) -> Matrix {
    let hv = [h.h111.clone(), h.h121.clone(), h.h211.clone(), h.h221.clone()];
    let c = q2m1();
    let mut col1: Vec<ScalarQ> = hv.iter().map(|x| x * &c).collect();
    col1[2] = &col1[2] + &ScalarQ::q_pow(-2);
    let mut col2: Vec<ScalarQ> = hv.iter().map(|x| -(x * &c).mul_q_pow(2)).collect();
    col2[1] = &col2[1] + &ScalarQ::q_pow(2);
    let e = |i: usize| -> Vec<ScalarQ> { (0..4).map(|j| if i == j { int(1) } else { ScalarQ::zero() }).collect() };
    Matrix::from_cols(vec![e(0), col1, col2, e(3)])
}

/// Wedge collapse onto `dz∧dz̄`: `dz⊗dz̄ -> 1`, `dz̄⊗dz -> -q^2`, diagonal words `-> 0`.
pub fn wedge_row() -> Matrix {
    Matrix::from_rows(vec![vec![ScalarQ::zero(), int(1), -ScalarQ::q_pow(2), ScalarQ::zero()]])
}

/// Generators of `Θ²`: `dz⊗dz`, `dz̄⊗dz̄`, `dz⊗dz̄ + q^{-2} dz̄⊗dz`.
pub fn sphere_theta2() -> Vec<Vec<ScalarQ>> {
    let z = ScalarQ::zero;
    vec![
        vec![int(1), z(), z(), z()],
        vec![z(), z(), z(), int(1)],
        vec![z(), int(1), ScalarQ::q_pow(-2), z()],
    ]
}

fn slot_ops(s: &Matrix) -> (Matrix, Matrix) {
    let i2 = Matrix::identity(2);
    (s.kron(&i2), i2.kron(s))
}

/// `T_3 = id - σ⊗id + (σ⊗id)(id⊗σ)` on three-tensors.
pub fn t3(s: &Matrix) -> Matrix {
    let (a, b) = slot_ops(s);
    &(&Matrix::identity(8) - &a) + &(&a * &b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereCompat {
    /// `σ` fixes every `Θ²` generator.
    pub theta_fixed: bool,
    /// `(id ⊗ ∧) T_3 = 0`.
    pub t3_ok: bool,
    /// The 2×8 matrix `(id ⊗ ∧) T_3`.
    pub witness: Matrix,
}

impl SphereCompat {
    pub fn passes(&self) -> bool {
        self.theta_fixed && self.t3_ok
    }
}

/// Compatibility with the calculus; `Θ³` is everything, and `Ω¹ ⊗ Θ²` is the kernel of
/// `id ⊗ ∧` since `Ω¹` is free.
pub fn sphere_compat(h: &SphereParams) -> SphereCompat {
    let s = sphere_sigma(h);
    let theta_fixed = sphere_theta2().iter().all(|g| &s.apply(g) == g);
    let witness = &Matrix::identity(2).kron(&wedge_row()) * &t3(&s);
    SphereCompat { theta_fixed, t3_ok: witness.is_zero(), witness }
}

pub fn braid_relation_check(h: &SphereParams) -> bool {
    let (a, b) = slot_ops(&sphere_sigma(h));
    &(&a * &b) * &a == &(&b * &a) * &b
}

pub fn is_invertible(h: &SphereParams) -> bool {
    !sphere_sigma(h).determinant().is_zero()
}

pub fn sigma_squared_is_identity(h: &SphereParams) -> bool {
    let s = sphere_sigma(h);
    &s * &s == Matrix::identity(4)
}

/// Whether `σ` fixes `dz⊗dz̄ + q^{-2}dz̄⊗dz` and the determinant of the mixed block
/// (rows and columns 1, 2) equals `x`.
pub fn mixed_block_consistent(h: &SphereParams) -> bool {
    let s = sphere_sigma(h);
    let g = &sphere_theta2()[2];
    let block = Matrix::from_rows(vec![
        vec![s.get(1, 1).clone(), s.get(1, 2).clone()],
        vec![s.get(2, 1).clone(), s.get(2, 2).clone()],
    ]);
    &s.apply(g) == g && block.determinant() == h.x()
}

/// `σ: Vec⊗Ω¹ → Ω¹⊗Vec` solved from the duality formula:
/// `σ(∂_a ⊗ dz^b) = Σ_{k,i} (σ^{-1})[2a+k, 2b+i] dz^k ⊗ ∂_i`.
pub fn sphere_vec_sigma(h: &SphereParams) -> Result<Matrix> {
    let inv = sphere_sigma(h).inverse()?;
    let mut out = Matrix::zeros(4, 4);
    for a in 0..2 {
        for b in 0..2 {
            for k in 0..2 {
                for i in 0..2 {
                    out.set(2 * k + i, 2 * a + b, inv.get(2 * a + k, 2 * b + i).clone());
                }
            }
        }
    }
    Ok(out)
}

/// The displayed closed form of the field braiding, with denominators `x`.
pub fn closed_form_vec_sigma(h: &SphereParams) -> Result<Matrix> {
    let x = h.x();
    let xi = x.inv().map_err(|_| Error::SingularBraiding)?;
    let (q2, q4) = (ScalarQ::q_pow(2), ScalarQ::q_pow(4));
    let one_m_q2 = &int(1) - &q2;
    let q4_m_q2 = &q4 - &q2;
    let z = ScalarQ::zero;
    let col0 = vec![int(1), &(&h.h111 * &one_m_q2) * &xi, z(), &(&h.h211 * &(&q2 - &q4)) * &xi];
    let col1 = vec![&(&h.h111 * &q4_m_q2) * &xi, z(), &(&(&h.h121 * &q4_m_q2) - &q2) * &xi, z()];
    let col2 =
        vec![z(), &(&(&h.h211 * &one_m_q2) - &ScalarQ::q_pow(-2)) * &xi, z(), &(&h.h221 * &one_m_q2) * &xi];
    let col3 = vec![&(&h.h121 * &q2m1()) * &xi, z(), &(&h.h221 * &q4_m_q2) * &xi, int(1)];
    Ok(Matrix::from_cols(vec![col0, col1, col2, col3]))
}

/// `dim = ev(σ_Vec^{-1} δ)` with `δ = dz⊗∂_z + dz̄⊗∂_z̄`.
pub fn sphere_dim(h: &SphereParams) -> Result<ScalarQ> {
    let v = sphere_vec_sigma(h)?;
    let delta = vec![int(1), ScalarQ::zero(), ScalarQ::zero(), int(1)];
    let hat = v.solve(&delta)?;
    Ok(&hat[0] + &hat[3])
}

/// `x(x-1) / (x^2 + q^2 (q^2-1)^2 (h121 h211 - h111 h221))`.
pub fn closed_form_dim(h: &SphereParams) -> Result<ScalarQ> {
    let x = h.x();
    let c = (&q2m1() * &q2m1()).mul_q_pow(2);
    let den = &(&x * &x) + &(&c * &(&(&h.h121 * &h.h211) - &(&h.h111 * &h.h221)));
    (&x * &(&x - &int(1))).checked_div(&den)
}

/// The parameter families listed for compatibility.
pub fn compat_cases(h: &SphereParams) -> Vec<char> {
    let z = |x: &ScalarQ| x.is_zero();
    let mut out = Vec::new();
    if z(&h.h221) && z(&h.h211) && h.h121 == SphereParams::special_h121() {
        out.push('a');
    }
    if z(&h.h111) && z(&h.h121) && h.h211 == SphereParams::special_h211() {
        out.push('b');
    }
    if z(&h.h111) && z(&h.h221) && (&h.h211 * &h.h121).is_zero() {
        out.push('c');
    }
    if *h == SphereParams::special() {
        out.push('d');
    }
    out
}

/// The parameter families listed for the braid relation.
pub fn braid_cases(h: &SphereParams) -> Vec<char> {
    let mut out = Vec::new();
    if h.h111.is_zero() && h.h221.is_zero() && (&h.h211 * &h.h121).is_zero() {
        out.push('a');
    }
    if *h == SphereParams::special() {
        out.push('b');
    }
    out
}

/// The parameter families listed for `σ² = id`.
pub fn square_cases(h: &SphereParams) -> Vec<char> {
    let mut out = Vec::new();
    if (&h.h121 - &h.h211.mul_q_pow(2)).is_zero() {
        out.push('a');
    }
    if *h == SphereParams::special() {
        out.push('b');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis(i: usize) -> Vec<ScalarQ> {
        (0..4).map(|j| if i == j { int(1) } else { ScalarQ::zero() }).collect()
    }

    #[test]
    fn sigma_at_zero() {
        let s = sphere_sigma(&SphereParams::zero());
        assert_eq!(s.apply(&basis(1)), {
            let mut v = basis(2);
            v[2] = ScalarQ::q_pow(-2);
            v
        });
        assert_eq!(s.apply(&basis(2)), {
            let mut v = basis(1);
            v[1] = ScalarQ::q_pow(2);
            v
        });
        assert_eq!(s.apply(&basis(0)), basis(0));
    }

    #[test]
    fn theta_generators_collapse() {
        let w = wedge_row();
        for g in sphere_theta2() {
            assert!(w.apply(&g)[0].is_zero());
        }
        assert!(!w.apply(&basis(1))[0].is_zero());
    }

    #[test]
    fn compat_examples() {
        let a = SphereParams::new(int(3), SphereParams::special_h121(), ScalarQ::zero(), ScalarQ::zero());
        assert!(sphere_compat(&a).passes());
        let bad = SphereParams::new(ScalarQ::zero(), int(1), int(1), ScalarQ::zero());
        assert!(!sphere_compat(&bad).passes());
    }

    #[test]
    fn braid_examples() {
        let a = SphereParams::new(ScalarQ::zero(), ScalarQ::q(), ScalarQ::zero(), ScalarQ::zero());
        assert!(braid_relation_check(&a));
        assert!(braid_relation_check(&SphereParams::special()));
        let bad = SphereParams::new(int(2), SphereParams::special_h121(), ScalarQ::zero(), ScalarQ::zero());
        assert!(!braid_relation_check(&bad));
    }

    #[test]
    fn invertibility_and_square() {
        let boundary = SphereParams::new(ScalarQ::zero(), SphereParams::special_h121(), ScalarQ::zero(), int(5));
        assert!(boundary.x().is_zero());
        assert!(!is_invertible(&boundary));
        assert!(is_invertible(&SphereParams::zero()));
        assert!(sigma_squared_is_identity(&SphereParams::zero()));
        assert!(sigma_squared_is_identity(&SphereParams::special()));
    }

    #[test]
    fn dimension_at_zero_is_two() {
        assert_eq!(sphere_dim(&SphereParams::zero()).unwrap(), int(2));
        assert_eq!(closed_form_dim(&SphereParams::zero()).unwrap(), int(2));
    }

    #[test]
    fn vec_braiding_entry() {
        let h = SphereParams::new(int(1), int(2), int(3), int(4));
        let v = sphere_vec_sigma(&h).unwrap();
        // σ(∂_z⊗dz̄) on dz̄⊗∂_z: (h121(q^4-q^2) - q^2)/x
        let expect = &(&(&int(2) * &(&ScalarQ::q_pow(4) - &ScalarQ::q_pow(2))) - &ScalarQ::q_pow(2)) / &h.x();
        assert_eq!(v.get(2, 1), &expect);
        assert_eq!(v, closed_form_vec_sigma(&h).unwrap());
        assert!(mixed_block_consistent(&h));
    }
}
