//! The alternating operators `T_n`, interior products of vector fields with forms, the
//! compatibility test for a braiding, and Lie derivatives `L_X = X⌟d + d(X⌟·)`.

use crate::braid::Braiding;
use crate::calculus::{d0, d1, lift_two_form, lift_two_form_alt, theta_generators, wedge_collapse_last, Form};
use crate::error::Result;
use crate::tensor::{all_words, Letter, Tensor, TwoForm};
use crate::torus::TorusElement;

/// Which section of the wedge collapse is used to lift two-forms.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Lift {
    /// `du∧dv -> du⊗dv`
    #[default]
    Canonical,
    /// `du∧dv -> -q dv⊗du`
    Alternative,
}

impl Lift {
    pub fn lift(self, w: &TwoForm) -> Tensor {
        match self {
            Lift::Canonical => lift_two_form(w),
            Lift::Alternative => lift_two_form_alt(w),
        }
    }
}

/// `T_n = -Σ_{r=1}^n (-1)^r σ_r ⊗ id`, where `σ_r` moves slot `r` to the front.
pub fn t_apply(sigma: &Braiding, n: usize, z: &Tensor) -> Tensor {
    (1..=n)
        .map(|r| {
            let moved = sigma.move_to_front(z, r - 1);
            if r % 2 == 1 {
                moved
            } else {
                -moved
            }
        })
        .sum()
}

/// `X(ξ)` for a vector field and a one-form.
pub fn evaluate(x: &Tensor, xi: &Tensor) -> TorusElement {
    x.tensor(xi).contract(0).as_function()
}

/// `D_X(m) = ev(X ⊗ dm)`.
pub fn directional(x: &Tensor, m: &TorusElement) -> TorusElement {
    evaluate(x, &d0(m))
}

/// Interior product on forms of degree 0, 1 and 2, using the given braiding.
#[derive(Clone, Debug)]
pub struct Interior {
    pub sigma: Braiding,
    pub lift: Lift,
}

impl Default for Interior {
    fn default() -> Self {
        Interior { sigma: Braiding::torus_table(), lift: Lift::Canonical }
    }
}

impl Interior {
    pub fn new(sigma: Braiding, lift: Lift) -> Self {
        Interior { sigma, lift }
    }

    /// `X⌟ω = (ev ⊗ id)(X ⊗ T_n(lift ω))`; `X⌟m = 0` on functions.
    pub fn interior(&self, x: &Tensor, w: &Form) -> Form {
        match w {
            Form::Zero(_) => Form::Zero(TorusElement::zero()),
            Form::One(w) => Form::Zero(evaluate(x, w)),
            Form::Two(w) => {
                let z = t_apply(&self.sigma, 2, &self.lift.lift(w));
                Form::One(x.tensor(&z).contract(0))
            }
        }
    }

    /// `L_X ω = X⌟dω + d(X⌟ω)`.
    pub fn lie(&self, x: &Tensor, w: &Form) -> Form {
        match w {
            Form::Zero(m) => self.interior(x, &Form::One(d0(m))),
            Form::One(v) => {
                let a = self.interior(x, &Form::Two(d1(v)));
                let Form::Zero(f) = self.interior(x, w) else { unreachable!() };
                a.add(&Form::One(d0(&f)))
            }
            Form::Two(_) => {
                // dω lives in Ω³ = 0
                let Form::One(v) = self.interior(x, w) else { unreachable!() };
                Form::Two(d1(&v))
            }
        }
    }
}

/// Outcome of the two compatibility conditions for a braiding on `Ω¹⊗Ω¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatReport {
    /// Generators of `Θ²` not fixed by `σ`.
    pub theta_failures: Vec<Tensor>,
    /// Three-letter words `w` with `(id⊗∧) T_3(w) ≠ 0`.
    pub t3_failures: Vec<Vec<Letter>>,
}

impl CompatReport {
    pub fn passes(&self) -> bool {
        self.theta_failures.is_empty() && self.t3_failures.is_empty()
    }
}

/// Checks `Θ² ⊂ ker(id - σ)` and `T_3(Θ³) ⊂ Ω¹ ⊗ Θ²`. Membership in `Ω¹ ⊗ Θ²` is tested as
/// the kernel of `id ⊗ ∧`, which is exact because `Ω¹` is free.
pub fn compatibility_check(sigma: &Braiding) -> Result<CompatReport> {
    let theta_failures = theta_generators(2)?.into_iter().filter(|g| &sigma.apply(g) != g).collect();
    let t3_failures = all_words(&Letter::FORMS, 3)
        .into_iter()
        .filter(|w| {
            let (a, b) = wedge_collapse_last(&t_apply(sigma, 3, &Tensor::basis(w.clone())));
            !(a.is_zero() && b.is_zero())
        })
        .collect();
    Ok(CompatReport { theta_failures, t3_failures })
}
