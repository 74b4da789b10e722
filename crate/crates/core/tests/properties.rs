//! Randomized algebraic identities. Each case draws a seed and builds inputs with `Sampler`,
//! so a failing case shrinks to a seed that reproduces it.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use ncdiff::braid::Braiding;
use ncdiff::calculus::{d0, d1, lift_two_form, lift_two_form_alt, theta_generators, wedge, wedge_collapse, Form};
use ncdiff::connection::Connection;
use ncdiff::flows::{exp_lie, satisfies_lie_recursion};
use ncdiff::interior::{Interior, Lift};
use ncdiff::random::Sampler;
use ncdiff::tensor::{Letter, Tensor};
use ncdiff::torus::Monomial;
use ncdiff::{ScalarQ, TorusElement};

fn cfg(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

// scalars

proptest! {
    #![proptest_config(cfg(1000))]

    #[test]
    fn field_axioms(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let (a, b, c) = (s.scalar_or_zero(), s.scalar(), s.scalar_or_zero());
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, ScalarQ::zero());
        prop_assert!((&b * &b.inv().unwrap()).is_one());
        prop_assert_eq!(&(&a / &b) * &b, a);
    }
}

proptest! {
    #![proptest_config(cfg(300))]

    #[test]
    fn normal_form_is_canonical(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let (a, b, c) = (s.scalar_or_zero(), s.scalar_or_zero(), s.scalar());
        // the same value reached by a different route has identical storage
        let round = &(&(&a * &c) + &b) / &c - &b / &c;
        prop_assert_eq!(round.numer().coeffs(), a.numer().coeffs());
        prop_assert_eq!(round.denom().coeffs(), a.denom().coeffs());
        prop_assert_eq!((&a - &b).is_zero(), a == b);
        let den = a.denom();
        prop_assert!(den.leading_coeff().unwrap() > &BigInt::from(0));
        prop_assert_eq!(num_integer::Integer::gcd(&a.numer().content(), &den.content()), BigInt::from(1));
        prop_assert!(a.numer().gcd(den).is_constant());
    }

    #[test]
    fn evaluation_is_a_homomorphism(seed in any::<u64>(), n in -7i64..=7, d in 1i64..=5) {
        let mut s = Sampler::new(seed);
        let (a, b) = (s.scalar_or_zero(), s.scalar_or_zero());
        let q0 = BigRational::new(n.into(), d.into());
        let (Ok(ea), Ok(eb)) = (a.eval_rational(&q0), b.eval_rational(&q0)) else {
            return Ok(());
        };
        prop_assert_eq!((&a + &b).eval_rational(&q0).unwrap(), &ea + &eb);
        prop_assert_eq!((&a * &b).eval_rational(&q0).unwrap(), &ea * &eb);
    }
}

// torus algebra

/// Expands `v^r u^s` into unit letters, `true` for `v`, with signs for inverses.
fn letters(m: Monomial) -> Vec<(bool, i64)> {
    let rep = |v: bool, k: i64| std::iter::repeat_n((v, k.signum()), k.unsigned_abs() as usize);
    rep(true, m.r).chain(rep(false, m.s)).collect()
}

/// Moves every `v` to the left one adjacent swap at a time, using `u^a v^b = q^{ab} v^b u^a`.
fn swap_oracle(a: Monomial, b: Monomial) -> (i64, Monomial) {
    let mut w = letters(a);
    w.extend(letters(b));
    let mut qpow = 0;
    let mut sorted = false;
    while !sorted {
        sorted = true;
        for i in 0..w.len().saturating_sub(1) {
            if !w[i].0 && w[i + 1].0 {
                qpow += w[i].1 * w[i + 1].1;
                w.swap(i, i + 1);
                sorted = false;
            }
        }
    }
    let r = w.iter().filter(|l| l.0).map(|l| l.1).sum();
    let s = w.iter().filter(|l| !l.0).map(|l| l.1).sum();
    (qpow, Monomial::new(r, s))
}

proptest! {
    #![proptest_config(cfg(500))]

    #[test]
    fn associativity(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let (a, b, c) = (s.element(4, 3), s.element(4, 3), s.element(4, 3));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn unit_law(seed in any::<u64>()) {
        let a = Sampler::new(seed).element(4, 3);
        let one = TorusElement::one();
        prop_assert_eq!(&one * &a, a.clone());
        prop_assert_eq!(&a * &one, a);
    }

    #[test]
    fn q_power_rule_matches_swapping(r in -3i64..=3, s in -3i64..=3, n in -3i64..=3, m in -3i64..=3) {
        let (a, b) = (Monomial::new(r, s), Monomial::new(n, m));
        prop_assert_eq!(a.product(b), swap_oracle(a, b));
        let prod = &TorusElement::monomial(r, s) * &TorusElement::monomial(n, m);
        let (k, mono) = swap_oracle(a, b);
        prop_assert_eq!(prod, TorusElement::term(ScalarQ::q_pow(k), mono));
    }
}

// calculus

proptest! {
    #![proptest_config(cfg(200))]

    #[test]
    fn bimodule_axioms(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let (a, b, w) = (s.small(), s.small(), s.one_form());
        prop_assert_eq!(w.left_mul(&a).right_mul(&b), w.right_mul(&b).left_mul(&a));
        prop_assert_eq!(w.left_mul(&(&a * &b)), w.left_mul(&b).left_mul(&a));
        prop_assert_eq!(w.right_mul(&(&a * &b)), w.right_mul(&a).right_mul(&b));
        let v = s.two_form();
        prop_assert_eq!(v.left_mul(&(&a * &b)), v.left_mul(&b).left_mul(&a));
        prop_assert_eq!(v.left_mul(&a).right_mul(&b), v.right_mul(&b).left_mul(&a));
    }

    #[test]
    fn leibniz_and_d_squared(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let (a, b) = (s.small(), s.small());
        prop_assert_eq!(d0(&(&a * &b)), &d0(&a).right_mul(&b) + &d0(&b).left_mul(&a));
        prop_assert!(d1(&d0(&a)).is_zero());
        let w = s.one_form();
        // graded Leibniz in degree one
        let lhs = d1(&w.right_mul(&a));
        let rhs = &d1(&w).right_mul(&a) - &wedge_collapse(&w.tensor(&d0(&a)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn collapse_inverts_lifts_and_kills_theta(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let v = s.two_form();
        prop_assert_eq!(wedge_collapse(&lift_two_form(&v)), v.clone());
        prop_assert_eq!(wedge_collapse(&lift_two_form_alt(&v)), v);
        for g in theta_generators(2).unwrap() {
            let m = s.small();
            prop_assert!(wedge_collapse(&g.right_mul(&m)).is_zero());
            prop_assert!(wedge_collapse(&g.left_mul(&m)).is_zero());
        }
    }
}

// connections

proptest! {
    #![proptest_config(cfg(40))]

    #[test]
    fn leibniz_rules_of_the_connection(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let c = Connection::new(s.connection_params()).unwrap();
        let (m, w) = (s.small(), s.one_form());
        prop_assert_eq!(c.nabla(&w.left_mul(&m)), &d0(&m).tensor(&w) + &c.nabla(&w).left_mul(&m));
        prop_assert_eq!(c.nabla(&w.right_mul(&m)), &c.nabla(&w).right_mul(&m) + &c.sigma.apply(&w.tensor(&d0(&m))));
    }

    #[test]
    fn sigma_is_a_bimodule_map(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let c = Connection::new(s.connection_params()).unwrap();
        let (w, e, a) = (s.one_form(), s.one_form(), s.small());
        let z = w.tensor(&e);
        prop_assert_eq!(c.sigma.apply(&z.left_mul(&a)), c.sigma.apply(&z).left_mul(&a));
        prop_assert_eq!(c.sigma.apply(&z.right_mul(&a)), c.sigma.apply(&z).right_mul(&a));
        prop_assert_eq!(c.sigma.apply(&w.right_mul(&a).tensor(&e)), c.sigma.apply(&w.tensor(&e.left_mul(&a))));
    }

    #[test]
    fn sigma_structure_and_evaluation(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let c = Connection::new(s.connection_params()).unwrap();
        prop_assert!(c.sigma.squared_is_identity());
        prop_assert!(c.sigma.satisfies_braid_relation(&Letter::FORMS));
        for g in theta_generators(2).unwrap() {
            prop_assert_eq!(c.sigma.apply(&g), g);
        }
        for x in Letter::FIELDS {
            for a in Letter::FORMS {
                for b in Letter::FORMS {
                    prop_assert!(c.preserves_evaluation(x, a, b));
                }
            }
        }
        let delta = Connection::delta();
        prop_assert!(c.nabla(&delta).is_zero());
        prop_assert_eq!(c.dim().unwrap(), TorusElement::scalar(ScalarQ::from_int(2)));
        for g in [TorusElement::u(), TorusElement::v(), s.small()] {
            prop_assert_eq!(delta.left_mul(&g), delta.right_mul(&g));
        }
    }
}

#[test]
fn torus_sigma_is_the_table_for_every_sample() {
    let mut s = Sampler::new(41);
    for _ in 0..20 {
        let c = Connection::new(s.connection_params()).unwrap();
        assert_eq!(c.sigma, Braiding::torus_table());
    }
}

// interior products and Lie derivatives

fn fields(s: &mut Sampler) -> Vec<Tensor> {
    let pu = Tensor::letter(Letter::Pu);
    vec![pu.clone(), Tensor::letter(Letter::Pv), pu.left_mul(&TorusElement::u()), s.vec_field()]
}

proptest! {
    #![proptest_config(cfg(60))]

    #[test]
    fn cartan_commutation(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let i = Interior::default();
        for x in fields(&mut s) {
            for deg in 0..2 {
                let w = s.form(deg);
                prop_assert_eq!(i.lie(&x, &w).d_or_zero(), i.lie(&x, &w.d_or_zero()));
            }
        }
    }

    #[test]
    fn lie_product_rules(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let i = Interior::default();
        let x = s.vec_field();
        let m = s.small();
        let dm = Some(Form::One(d0(&m)));
        // `None` stands for a form in a vanishing degree: X⌟f for a function, or anything in Ω³
        let int = |x: &Tensor, w: &Option<Form>| w.as_ref().filter(|w| w.degree() > 0).map(|w| i.interior(x, w));
        let wdg = |a: &Option<Form>, b: &Option<Form>| a.as_ref().zip(b.as_ref()).and_then(|(a, b)| wedge(a, b));
        let plus = |a: Form, b: Option<Form>| b.map_or(a.clone(), |b| a.add(&b));
        for deg in 0..3 {
            let w = s.form(deg);
            let sw = Some(w.clone());
            // L_X(m.ω) = L_{X.m}(ω) + X⌟(dm∧ω)
            let a = plus(i.lie(&x.right_mul(&m), &w), int(&x, &wdg(&dm, &sw)));
            prop_assert_eq!(i.lie(&x, &w.left_mul(&m)), a);
            // L_{m.X}(ω) = dm∧(X⌟ω) + m.L_X ω
            let b = plus(i.lie(&x, &w).left_mul(&m), wdg(&dm, &int(&x, &sw)));
            prop_assert_eq!(i.lie(&x.left_mul(&m), &w), b);
            // L_X(ω.m) = L_X(ω).m + (-1)^|ω| (X⌟(ω∧dm) - (X⌟ω)∧dm)
            let sign = ScalarQ::from_int(if deg % 2 == 1 { -1 } else { 1 });
            let first = int(&x, &wdg(&sw, &dm)).map(|f| f.scale(&sign));
            let second = wdg(&int(&x, &sw), &dm).map(|f| f.scale(&-sign.clone()));
            let c = plus(plus(i.lie(&x, &w).right_mul(&m), first), second);
            prop_assert_eq!(i.lie(&x, &w.right_mul(&m)), c);
        }
    }

    #[test]
    fn lift_independence(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let canon = Interior::new(Braiding::torus_table(), Lift::Canonical);
        let alt = Interior::new(Braiding::torus_table(), Lift::Alternative);
        let (x, w) = (s.vec_field(), Form::Two(s.two_form()));
        prop_assert_eq!(canon.interior(&x, &w), alt.interior(&x, &w));
        prop_assert_eq!(canon.lie(&x, &w), alt.lie(&x, &w));
        let v = Form::One(s.one_form());
        prop_assert_eq!(canon.lie(&x, &v), alt.lie(&x, &v));
    }

    #[test]
    fn interior_is_a_bimodule_map(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let i = Interior::default();
        let (x, m) = (s.vec_field(), s.small());
        for deg in 0..3 {
            let w = s.form(deg);
            prop_assert_eq!(i.interior(&x, &w.right_mul(&m)), i.interior(&x, &w).right_mul(&m));
            prop_assert_eq!(i.interior(&x.left_mul(&m), &w), i.interior(&x, &w).left_mul(&m));
            prop_assert_eq!(i.interior(&x.right_mul(&m), &w), i.interior(&x, &w.left_mul(&m)));
        }
    }
}

// flows

proptest! {
    #![proptest_config(cfg(40))]

    #[test]
    fn exp_lie_recursion(seed in any::<u64>(), deg in 0usize..3) {
        let mut s = Sampler::new(seed);
        let i = Interior::default();
        let x = s.unit_field();
        let series = exp_lie(&i, &x, &s.form(deg), 5);
        prop_assert!(satisfies_lie_recursion(&i, &x, &series));
    }
}
