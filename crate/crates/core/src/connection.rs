//! The eight-parameter family of bimodule covariant derivatives on the torus one-forms, the
//! braidings they induce on forms and fields, the Kronecker delta and the dimension.

use std::fmt;

use crate::braid::Braiding;
use crate::calculus::{d0, wedge_collapse_last};
use crate::error::{Error, Result};
use crate::scalar::ScalarQ;
use crate::tensor::{FormTwoForm, Letter, Tensor, TwoForm};
use crate::torus::TorusElement;

use Letter::{Du, Dv, Pu, Pv};

/// Coefficients of `∇(du)` (`r_**`) and `∇(dv)` (`s_**`).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ConnectionParams {
    pub r_uu: ScalarQ,
    pub r_vu: ScalarQ,
    pub r_uv: ScalarQ,
    pub r_vv: ScalarQ,
    pub s_vv: ScalarQ,
    pub s_vu: ScalarQ,
    pub s_uv: ScalarQ,
    pub s_uu: ScalarQ,
}

impl ConnectionParams {
    pub const NAMES: [&'static str; 8] = ["ruu", "rvu", "ruv", "rvv", "svv", "svu", "suv", "suu"];

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_array(v: [ScalarQ; 8]) -> Self {
        let [r_uu, r_vu, r_uv, r_vv, s_vv, s_vu, s_uv, s_uu] = v;
        ConnectionParams { r_uu, r_vu, r_uv, r_vv, s_vv, s_vu, s_uv, s_uu }
    }

    pub fn to_array(&self) -> [ScalarQ; 8] {
        [
            self.r_uu.clone(),
            self.r_vu.clone(),
            self.r_uv.clone(),
            self.r_vv.clone(),
            self.s_vv.clone(),
            self.s_vu.clone(),
            self.s_uv.clone(),
            self.s_uu.clone(),
        ]
    }

    /// Sets the parameter with CLI name `name` (`ruu`, `svu`, ...).
    pub fn set(&mut self, name: &str, value: ScalarQ) -> Result<()> {
        let slot = match name {
            "ruu" => &mut self.r_uu,
            "rvu" => &mut self.r_vu,
            "ruv" => &mut self.r_uv,
            "rvv" => &mut self.r_vv,
            "svv" => &mut self.s_vv,
            "svu" => &mut self.s_vu,
            "suv" => &mut self.s_uv,
            "suu" => &mut self.s_uu,
            _ => return Err(Error::Config(format!("unknown connection parameter {name}"))),
        };
        *slot = value;
        Ok(())
    }

    pub fn with(mut self, name: &str, value: ScalarQ) -> Self {
        self.set(name, value).expect("known parameter name");
        self
    }
}

impl fmt::Display for ConnectionParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            Self::NAMES.iter().zip(self.to_array()).map(|(n, v)| format!("{n}={v}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn mono(r: i64, s: i64) -> TorusElement {
    TorusElement::monomial(r, s)
}

/// `u v^{-2}` as an algebra product.
fn u_vinv2() -> TorusElement {
    &TorusElement::u() * &mono(-2, 0)
}

/// The displayed four-term value of `∇(du)` or `∇(dv)`.
pub fn nabla_generator(p: &ConnectionParams, g: Letter) -> Tensor {
    let t = |w: [Letter; 2], c: &ScalarQ, m: TorusElement| Tensor::word(w.to_vec(), m.scale(c));
    match g {
        Du => [
            t([Du, Du], &p.r_uu, mono(0, -1)),
            t([Dv, Du], &p.r_vu, mono(-1, 0)),
            t([Du, Dv], &p.r_uv, mono(-1, 0)),
            t([Dv, Dv], &p.r_vv, u_vinv2()),
        ]
        .into_iter()
        .sum(),
        Dv => [
            t([Dv, Dv], &p.s_vv, mono(-1, 0)),
            t([Dv, Du], &p.s_vu, mono(0, -1)),
            t([Du, Dv], &p.s_uv, mono(0, -1)),
            t([Du, Du], &p.s_uu, mono(1, -2)),
        ]
        .into_iter()
        .sum(),
        _ => panic!("nabla_generator takes du or dv"),
    }
}

/// `∇` on a one-form through the left Leibniz rule `∇(m·dw) = dm ⊗ dw + m·∇(dw)`.
pub fn nabla_left(p: &ConnectionParams, w: &Tensor) -> Tensor {
    w.terms()
        .map(|(word, _)| {
            assert!(word.len() == 1 && word[0].is_form(), "nabla_left expects a one-form");
            let m = w.left_coeff(word);
            let e = Tensor::letter(word[0]);
            &d0(&m).tensor(&e) + &nabla_generator(p, word[0]).left_mul(&m)
        })
        .sum()
}

/// Monomials used to probe that the derived braiding is a well-defined bimodule map.
fn probes() -> Vec<TorusElement> {
    vec![mono(0, 0), mono(1, 0), mono(0, 1), mono(-1, 2), mono(2, -1), mono(-2, -3), mono(3, 1)]
}

/// The braiding forced by the connection: `σ(e ⊗ dw) = ∇(e·w) - ∇(e)·w` for `w ∈ {u, v}`,
/// then checked on `σ(e ⊗ a·db) = ∇(e·ab) - ∇(e·a)·b` for probe monomials.
pub fn derive_sigma(p: &ConnectionParams) -> Result<Braiding> {
    let coord = |l: Letter| if l == Du { TorusElement::u() } else { TorusElement::v() };
    let sigma = Braiding::from_fn(&Braiding::pairs(&Letter::FORMS, &Letter::FORMS), |[a, b]| {
        let e = Tensor::letter(a);
        let w = coord(b);
        &nabla_left(p, &e.right_mul(&w)) - &nabla_generator(p, a).right_mul(&w)
    });
    for e in Letter::FORMS {
        let e = Tensor::letter(e);
        for a in probes() {
            for b in probes() {
                let lhs = &nabla_left(p, &e.right_mul(&(&a * &b))) - &nabla_left(p, &e.right_mul(&a)).right_mul(&b);
                let rhs = sigma.apply(&e.tensor(&d0(&b).left_mul(&a)));
                if lhs != rhs {
                    return Err(Error::IllDefinedBraiding(format!("{e} with a={a}, b={b}")));
                }
            }
        }
    }
    Ok(sigma)
}

/// A bimodule connection on `Ω¹` together with everything induced on `Vec` and tensor words.
#[derive(Clone, Debug)]
pub struct Connection {
    pub params: ConnectionParams,
    /// `σ: Ω¹⊗Ω¹ → Ω¹⊗Ω¹`
    pub sigma: Braiding,
    pub sigma_inv: Braiding,
    /// `σ: Vec⊗Ω¹ → Ω¹⊗Vec`
    pub sigma_vec: Braiding,
    /// `σ^{-1}: Vec⊗Vec → Vec⊗Vec`
    pub sigma_inv_vecvec: Braiding,
    nabla_pu: Tensor,
    nabla_pv: Tensor,
    /// `sigma` and `sigma_vec` together: moves a one-form leftwards past any letter.
    mover: Braiding,
}

impl Connection {
    pub fn new(params: ConnectionParams) -> Result<Self> {
        let sigma = derive_sigma(&params)?;
        let sigma_inv = sigma.inverse()?;
        let sigma_vec = dual_braiding(&sigma_inv);
        let sigma_inv_vecvec = vec_vec_braiding(&sigma_vec);
        let nabla_pu = dual_nabla(&params, &sigma_inv, Pu);
        let nabla_pv = dual_nabla(&params, &sigma_inv, Pv);
        let mover = sigma.merged(&sigma_vec);
        Ok(Connection { params, sigma, sigma_inv, sigma_vec, sigma_inv_vecvec, nabla_pu, nabla_pv, mover })
    }

    /// `∇` on a single basis letter.
    pub fn nabla_letter(&self, l: Letter) -> Tensor {
        match l {
            Pu => self.nabla_pu.clone(),
            Pv => self.nabla_pv.clone(),
            _ => nabla_generator(&self.params, l),
        }
    }

    /// Moves the one-form in slot `k` to the front, braiding past forms and fields.
    pub fn move_to_front(&self, z: &Tensor, k: usize) -> Tensor {
        self.mover.move_to_front(z, k)
    }

    /// Tensor-product connection on any word of forms and fields (functions get `d`).
    pub fn nabla(&self, z: &Tensor) -> Tensor {
        let mut out = Tensor::zero();
        for (w, c) in z.terms() {
            let n = w.len();
            for i in 0..n {
                let pre = Tensor::basis(w[..i].to_vec());
                let post = Tensor::basis(w[i + 1..].to_vec());
                let t = pre.tensor(&self.nabla_letter(w[i])).tensor(&post);
                out = &out + &self.move_to_front(&t, i).right_mul(c);
            }
            let dc = Tensor::basis(w.clone()).tensor(&d0(c));
            out = &out + &self.move_to_front(&dc, n);
        }
        out
    }

    /// `∇_X e = (ev ⊗ id)(X ⊗ ∇e)`.
    pub fn nabla_along(&self, x: &Tensor, e: &Tensor) -> Tensor {
        x.tensor(&self.nabla(e)).contract(0)
    }

    /// `∇` on `Ω²`, through the canonical lift, in `Ω¹ ⊗ Ω²`.
    pub fn nabla_two_form(&self, w: &TwoForm) -> Result<FormTwoForm> {
        self.check_theta_preserved()?;
        let (on_du, on_dv) = wedge_collapse_last(&self.nabla(&crate::calculus::lift_two_form(w)));
        Ok(FormTwoForm { on_du, on_dv })
    }

    /// `(id ⊗ ∧)∇` vanishes on the `Θ²` generators and on them times probe monomials.
    pub fn check_theta_preserved(&self) -> Result<()> {
        for g in crate::calculus::theta_generators(2)? {
            for m in probes() {
                let (a, b) = wedge_collapse_last(&self.nabla(&g.right_mul(&m)));
                if !a.is_zero() || !b.is_zero() {
                    return Err(Error::ThetaNotPreserved(format!("{}", g.right_mul(&m))));
                }
            }
        }
        Ok(())
    }

    /// Kronecker delta `du⊗∂_u + dv⊗∂_v`.
    pub fn delta() -> Tensor {
        &Tensor::basis(vec![Du, Pu]) + &Tensor::basis(vec![Dv, Pv])
    }

    /// `δ̂ = σ^{-1} δ ∈ Vec ⊗ Ω¹`.
    pub fn delta_hat(&self) -> Result<Tensor> {
        Ok(self.sigma_vec.inverse()?.apply(&Self::delta()))
    }

    /// `dim = ev(δ̂)`.
    pub fn dim(&self) -> Result<TorusElement> {
        Ok(self.delta_hat()?.contract(0).as_function())
    }

    /// `(ev⊗id) = (id⊗ev)(σ_Vec⊗id)(id⊗σ)` on the basis triple `X ⊗ ξ ⊗ η`.
    pub fn preserves_evaluation(&self, x: Letter, xi: Letter, eta: Letter) -> bool {
        let z = Tensor::basis(vec![x, xi, eta]);
        let lhs = z.contract(0);
        let rhs = self.sigma_vec.apply_at(&self.sigma.apply_at(&z, 1), 0).contract(1);
        lhs == rhs
    }
}

/// `σ_Vec(α ⊗ ξ) = Σ_i (ev⊗id)(id⊗σ^{-1})(α ⊗ ξ ⊗ e_i) ⊗ α_i`.
fn dual_braiding(sigma_inv: &Braiding) -> Braiding {
    Braiding::from_fn(&Braiding::pairs(&Letter::FIELDS, &Letter::FORMS), |[a, xi]| {
        Letter::FORMS
            .iter()
            .map(|&e| {
                let z = sigma_inv.apply_at(&Tensor::basis(vec![a, xi, e]), 1).contract(0);
                z.tensor(&Tensor::letter(e.dual()))
            })
            .sum()
    })
}

/// `σ^{-1}(X ⊗ Y) = Σ_i (ev⊗id)(X ⊗ σ_Vec(Y ⊗ ξ_i)) ⊗ X_i`.
fn vec_vec_braiding(sigma_vec: &Braiding) -> Braiding {
    Braiding::from_fn(&Braiding::pairs(&Letter::FIELDS, &Letter::FIELDS), |[x, y]| {
        Letter::FORMS
            .iter()
            .map(|&xi| {
                let z = sigma_vec.apply_at(&Tensor::basis(vec![x, y, xi]), 1).contract(0);
                z.tensor(&Tensor::letter(xi.dual()))
            })
            .sum()
    })
}

/// `∇α = Σ d(α(e_i))⊗α_i - Σ (ev⊗id)(id⊗σ^{-1})(α⊗∇e_i)⊗α_i` for a basis field `α`.
fn dual_nabla(p: &ConnectionParams, sigma_inv: &Braiding, alpha: Letter) -> Tensor {
    // α(e_i) is constant on the basis, so the first sum vanishes
    -Letter::FORMS
        .iter()
        .map(|&e| {
            let z = Tensor::letter(alpha).tensor(&nabla_generator(p, e));
            sigma_inv.apply_at(&z, 1).contract(0).tensor(&Tensor::letter(e.dual()))
        })
        .sum::<Tensor>()
}
