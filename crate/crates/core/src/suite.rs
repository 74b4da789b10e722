//! The verification suites behind `verify torus|sphere|flows|all`.

use crate::braid::Braiding;
use crate::bracket::{curvature, phi, torsion, VecTensor};
use crate::calculus::Form;
use crate::connection::{derive_sigma, Connection, ConnectionParams};
use crate::error::{Error, Result};
use crate::flows::{
    closed_form_series, cochain_check, exp_lie, geodesic, geodesic_residual, homotopy_check, parallel_transport,
    satisfies_lie_recursion, transport_residual, FlowField, FormalSeries, Seed, DEFAULT_ORDER,
};
use crate::interior::{compatibility_check, directional, Interior};
use crate::random::Sampler;
use crate::report::{Outcome, Report};
use crate::scalar::ScalarQ;
use crate::sphere::{self, SphereParams};
use crate::tensor::{Letter, Tensor, TwoForm};
use crate::torus::TorusElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteName {
    Torus,
    Sphere,
    Flows,
    All,
}

impl SuiteName {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "torus" => SuiteName::Torus,
            "sphere" => SuiteName::Sphere,
            "flows" => SuiteName::Flows,
            "all" => SuiteName::All,
            _ => return Err(Error::Config(format!("unknown suite {s}"))),
        })
    }
}

/// A compatibility family from the sphere case table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SphereCase {
    A,
    B,
    C,
    D,
}

impl SphereCase {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "a" => SphereCase::A,
            "b" => SphereCase::B,
            "c" => SphereCase::C,
            "d" => SphereCase::D,
            _ => return Err(Error::Config(format!("unknown case {s}, expected a, b, c or d"))),
        })
    }

    pub fn letter(self) -> char {
        match self {
            SphereCase::A => 'a',
            SphereCase::B => 'b',
            SphereCase::C => 'c',
            SphereCase::D => 'd',
        }
    }

    /// Forces the constrained parameters of the case onto `h`, keeping the free ones.
    pub fn apply(self, h: &SphereParams) -> Result<SphereParams> {
        let z = ScalarQ::zero;
        let mut h = h.clone();
        match self {
            SphereCase::A => {
                h.h221 = z();
                h.h211 = z();
                h.h121 = SphereParams::special_h121();
            }
            SphereCase::B => {
                h.h111 = z();
                h.h121 = z();
                h.h211 = SphereParams::special_h211();
            }
            SphereCase::C => {
                h.h111 = z();
                h.h221 = z();
                if !(&h.h121 * &h.h211).is_zero() {
                    return Err(Error::Config("case c needs h121 = 0 or h211 = 0".into()));
                }
            }
            SphereCase::D => h = SphereParams::special(),
        }
        Ok(h)
    }
}

#[derive(Clone, Debug)]
pub struct Config {
    /// Connection for the torus checks; random parameter sets are checked as well.
    pub params: ConnectionParams,
    pub sphere: SphereParams,
    pub case: Option<SphereCase>,
    /// Also sweep the sphere case tables over their listed families.
    pub sweep: bool,
    pub order: usize,
    pub seed: u64,
    /// Random parameter sets per claim.
    pub samples: usize,
    /// Random inputs per identity.
    pub inputs: usize,
    pub timings: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            params: ConnectionParams::zero(),
            sphere: SphereParams::zero(),
            case: None,
            sweep: true,
            order: DEFAULT_ORDER,
            seed: 0,
            samples: 20,
            inputs: 100,
            timings: false,
        }
    }
}

pub fn run_suite(name: SuiteName, cfg: &Config) -> Result<Report> {
    if cfg.order < 1 {
        return Err(Error::Config("order must be at least 1".into()));
    }
    Ok(match name {
        SuiteName::Torus => torus_suite(cfg),
        SuiteName::Sphere => sphere_suite(cfg)?,
        SuiteName::Flows => flows_suite(cfg),
        SuiteName::All => {
            let mut r = Report::new("all", cfg.timings);
            r.absorb(torus_suite(cfg));
            r.absorb(flows_suite(cfg));
            r.absorb(sphere_suite(cfg)?);
            r
        }
    })
}

fn count(label: &str, good: usize, total: usize) -> Outcome {
    Outcome::new(good == total, format!("{total}/{total} {label}"), format!("{good}/{total} {label}"))
}

fn first_failure<T: std::fmt::Display>(items: impl IntoIterator<Item = (T, bool)>) -> Outcome {
    let mut total = 0;
    let mut bad = None;
    for (item, ok) in items {
        total += 1;
        if !ok && bad.is_none() {
            bad = Some(item.to_string());
        }
    }
    match bad {
        None => Outcome::new(true, format!("all {total} hold"), format!("all {total} hold")),
        Some(b) => Outcome::new(false, format!("all {total} hold"), format!("fails at {b}")),
    }
}

/// `m` is any element, `n` a unit used to move across the middle of the pairs.
type CurvatureInput = (usize, VecTensor, TorusElement, TorusElement, Tensor);

/// `Σ X·n⁻¹ ⊗ Y`: same image as `x`, so `X·n⁻¹ ⊗ n·Y` is antisymmetric too.
fn split(x: &VecTensor, n: &TorusElement) -> VecTensor {
    x.inner_right(&n.inverse().expect("unit"))
}

fn descent<'a>(
    conns: &'a [Connection],
    inputs: &'a [CurvatureInput],
    f: impl Fn(&Connection, &VecTensor, &TorusElement, &TorusElement, &Tensor) -> Result<bool> + 'a,
) -> impl FnOnce() -> Result<Outcome> + 'a {
    move || {
        let mut items = Vec::new();
        for (i, x, m, n, e) in inputs {
            let c = conns.get(*i).ok_or_else(|| Error::Config("no usable random connection".into()))?;
            items.push((format!("x = {x}, m = {m}, n = {n}, e = {e}"), f(c, x, m, n, e)?));
        }
        Ok(first_failure(items))
    }
}

pub fn torus_suite(cfg: &Config) -> Report {
    let mut r = Report::new("torus", cfg.timings);
    let mut s = Sampler::new(cfg.seed);
    let random_p: Vec<ConnectionParams> = (0..cfg.samples).map(|_| s.connection_params()).collect();
    let table = Braiding::torus_table();

    r.run("braiding table, configured connection", || Ok(Outcome::eq(&table, &derive_sigma(&cfg.params)?)));
    r.run(format!("braiding table, {} random connections", cfg.samples), || {
        let good = random_p.iter().map(derive_sigma).filter(|b| b.as_ref().ok() == Some(&table)).count();
        Ok(count("match", good, random_p.len()))
    });
    r.run("dim = 2, configured connection", || {
        Ok(Outcome::eq(&TorusElement::scalar(ScalarQ::from_int(2)), &Connection::new(cfg.params.clone())?.dim()?))
    });
    r.run(format!("dim = 2, {} random connections", cfg.samples), || {
        let two = TorusElement::scalar(ScalarQ::from_int(2));
        let mut good = 0;
        for p in &random_p {
            good += usize::from(Connection::new(p.clone())?.dim()? == two);
        }
        Ok(count("equal 2", good, random_p.len()))
    });
    r.run("∇δ = 0", || {
        let mut items = Vec::new();
        for p in std::iter::once(&cfg.params).chain(&random_p) {
            items.push((p.clone(), Connection::new(p.clone())?.nabla(&Connection::delta()).is_zero()));
        }
        Ok(first_failure(items))
    });
    r.run("δ is central", || {
        let delta = Connection::delta();
        let mut s = Sampler::new(cfg.seed ^ 0xde17a);
        Ok(first_failure((0..cfg.samples).map(|_| {
            let m = s.small();
            let ok = delta.left_mul(&m) == delta.right_mul(&m);
            (m, ok)
        })))
    });
    r.run("evaluation preserved", || {
        let mut items = Vec::new();
        for p in std::iter::once(&cfg.params).chain(&random_p) {
            let c = Connection::new(p.clone())?;
            let ok = Letter::FIELDS
                .iter()
                .all(|&x| Letter::FORMS.iter().all(|&a| Letter::FORMS.iter().all(|&b| c.preserves_evaluation(x, a, b))));
            items.push((p.clone(), ok));
        }
        Ok(first_failure(items))
    });

    let interior = Interior::default();
    let vol = Form::Two(TwoForm::volume());
    r.run("∂u⌟(du∧dv) = dv", || {
        Ok(Outcome::eq(&Form::One(Tensor::letter(Letter::Dv)), &interior.interior(&Tensor::letter(Letter::Pu), &vol)))
    });
    r.run("∂v⌟(du∧dv) = -q du", || {
        let expect = Form::One(Tensor::letter(Letter::Du).scale(&-ScalarQ::q()));
        Ok(Outcome::eq(&expect, &interior.interior(&Tensor::letter(Letter::Pv), &vol)))
    });

    r.run("φ(∂v⊗∂u - q⁻¹∂u⊗∂v) = 0", || Ok(Outcome::eq(&Tensor::zero(), &phi(&VecTensor::basic_antisymmetric())?)));
    let mut s = Sampler::new(cfg.seed ^ 0xa5);
    let inputs: Vec<(VecTensor, TorusElement, TorusElement)> =
        (0..cfg.inputs).map(|_| (s.antisymmetric(), s.small(), s.unit())).collect();
    r.run(format!("φ(X⊗Y)·m = φ(X⊗Y·m) + X·D_Y(m), {} inputs", cfg.inputs), || {
        let mut items = Vec::new();
        for (x, m, _) in &inputs {
            let defect: Tensor = x.pairs.iter().map(|(a, b)| a.right_mul(&directional(b, m))).sum();
            let ok = phi(x)?.right_mul(m) == &phi(&x.outer_right(m))? + &defect;
            items.push((format!("x = {x}, m = {m}"), ok));
        }
        Ok(first_failure(items))
    });
    r.run(format!("φ(X⊗m·Y) = φ(X·m⊗Y) + D_X(m)·Y, {} inputs", cfg.inputs), || {
        let mut items = Vec::new();
        for (x, _, n) in &inputs {
            let x = split(x, n);
            let defect: Tensor = x.pairs.iter().map(|(a, b)| b.left_mul(&directional(a, n))).sum();
            let ok = phi(&x.inner_left(n))? == &phi(&x.inner_right(n))? + &defect;
            items.push((format!("x = {x}, n = {n}"), ok));
        }
        Ok(first_failure(items))
    });

    r.run("σ fixes Θ²", || {
        let rep = compatibility_check(&table)?;
        Ok(Outcome::new(rep.theta_failures.is_empty(), "no failures", format!("{} failing generators", rep.theta_failures.len())))
    });
    r.run("T₃Θ³ ⊂ Ω¹⊗Θ²", || {
        let rep = compatibility_check(&table)?;
        Ok(Outcome::new(rep.t3_failures.is_empty(), "no failures", format!("{} failing words", rep.t3_failures.len())))
    });
    r.run("braid relation", || Ok(Outcome::holds(table.satisfies_braid_relation(&Letter::FORMS))));
    r.run("σ² = id", || Ok(Outcome::holds(table.squared_is_identity())));

    let conns: Vec<Connection> = random_p.iter().filter_map(|p| Connection::new(p.clone()).ok()).collect();
    let mut s = Sampler::new(cfg.seed ^ 0xc0);
    let curv: Vec<CurvatureInput> = (0..cfg.inputs)
        .map(|i| {
            let e = if s.coin(0.5) { s.one_form() } else { s.vec_field() };
            (i % conns.len().max(1), s.antisymmetric(), s.small(), s.unit(), e)
        })
        .collect();
    let n = cfg.inputs;
    r.run(
        format!("R(X⊗m·Y) = R(X·m⊗Y), {n} inputs"),
        descent(&conns, &curv, |c, x, _, n, e| {
            let x = split(x, n);
            Ok(curvature(c, &x.inner_left(n), e)? == curvature(c, &x.inner_right(n), e)?)
        }),
    );
    r.run(
        format!("R(X⊗Y)(m·e) = R(X⊗Y·m)(e), {n} inputs"),
        descent(&conns, &curv, |c, x, m, _, e| Ok(curvature(c, x, &e.left_mul(m))? == curvature(c, &x.outer_right(m), e)?)),
    );
    r.run(
        format!("R(m·X⊗Y) = m·R(X⊗Y), {n} inputs"),
        descent(&conns, &curv, |c, x, m, _, e| Ok(curvature(c, &x.outer_left(m), e)? == curvature(c, x, e)?.left_mul(m))),
    );
    r.run(
        format!("T(X·m⊗Y) = T(X⊗m·Y), {n} inputs"),
        descent(&conns, &curv, |c, x, _, n, _| {
            let x = split(x, n);
            Ok(torsion(c, &x.inner_right(n))? == torsion(c, &x.inner_left(n))?)
        }),
    );
    r.run(
        format!("T(m·X⊗Y) = m·T(X⊗Y), {n} inputs"),
        descent(&conns, &curv, |c, x, m, _, _| Ok(torsion(c, &x.outer_left(m))? == torsion(c, x)?.left_mul(m))),
    );
    r.run("flat connection: curvature vanishes", || {
        let flat = Connection::new(ConnectionParams::zero())?;
        let mut items = Vec::new();
        for (_, x, _, _, e) in &curv {
            items.push((format!("x = {x}, e = {e}"), curvature(&flat, x, e)?.is_zero()));
        }
        Ok(first_failure(items))
    });
    r.run("flat connection: torsion vanishes", || {
        let flat = Connection::new(ConnectionParams::zero())?;
        let mut items = Vec::new();
        for (_, x, _, _, _) in &curv {
            items.push((format!("x = {x}"), torsion(&flat, x)?.is_zero()));
        }
        Ok(first_failure(items))
    });
    r
}

pub fn flows_suite(cfg: &Config) -> Report {
    let mut r = Report::new("flows", cfg.timings);
    let n = cfg.order;
    let interior = Interior::default();
    let u = |r: i64, s: i64| Form::Zero(TorusElement::monomial(r, s));

    r.run("exp(t L_∂u)(u) = u + t", || {
        let mut c = vec![u(0, 1), u(0, 0)];
        c.resize(n + 1, Form::Zero(TorusElement::zero()));
        Ok(Outcome::eq(&FormalSeries::new(c), &exp_lie(&interior, &FlowField::Pu.field(), &u(0, 1), n)))
    });
    r.run("exp(t L_u∂u)(v) = v", || {
        Ok(Outcome::eq(&FormalSeries::constant(u(1, 0), n), &exp_lie(&interior, &FlowField::UPu.field(), &u(1, 0), n)))
    });

    for field in FlowField::ALL {
        for degree in 0..3 {
            r.run(format!("exp(t L_{field}) closed form, degree {degree}, |r|,|s| ≤ 3, order {n}"), || {
                let x = field.field();
                let seeds = Seed::all(3).into_iter().filter(|s| s.form().degree() == degree);
                Ok(first_failure(seeds.map(|seed| {
                    let ok = exp_lie(&interior, &x, &seed.form(), n) == closed_form_series(field, seed, n);
                    (format!("{seed:?}"), ok)
                })))
            });
        }
    }

    let mut s = Sampler::new(cfg.seed ^ 0xf1);
    let forms: Vec<Form> = (0..cfg.inputs / 2).map(|i| s.form(i % 3)).collect();
    let higher: Vec<Form> = (0..cfg.inputs / 2).map(|i| s.form(1 + i % 2)).collect();
    for field in FlowField::ALL {
        let x = field.field();
        r.run(format!("(k+1)c_(k+1) = L_{field} c_k, {} forms", forms.len()), || {
            Ok(first_failure(forms.iter().map(|w| (w, satisfies_lie_recursion(&interior, &x, &exp_lie(&interior, &x, w, n))))))
        });
        r.run(format!("d∘K = K∘d along {field}, {} forms, order {n}", forms.len()), || {
            Ok(first_failure(forms.iter().map(|w| (w, cochain_check(&interior, &x, w, n)))))
        });
        r.run(format!("K̇ = d h + h d along {field}, {} forms, order {}", higher.len(), n - 1), || {
            Ok(first_failure(higher.iter().map(|w| (w, homotopy_check(&interior, &x, w, n)))))
        });
    }

    let pu = Tensor::letter(Letter::Pu);
    r.run("parallel transport, flat: ∂u constant", || {
        let flat = Connection::new(ConnectionParams::zero())?;
        Ok(Outcome::eq(&FormalSeries::constant(pu.clone(), n), &parallel_transport(&flat, &pu, &pu, n)))
    });
    r.run("parallel transport, r_uu = 1: ∂u + t·(u⁻¹·∂u)", || {
        let c = Connection::new(ConnectionParams::zero().with("ruu", ScalarQ::one()))?;
        let expect = FormalSeries::new(vec![pu.clone(), pu.left_mul(&TorusElement::monomial(0, -1))]);
        Ok(Outcome::eq(&expect, &parallel_transport(&c, &pu, &pu, 1)))
    });
    r.run("geodesic, flat: ∂u constant", || {
        let flat = Connection::new(ConnectionParams::zero())?;
        Ok(Outcome::eq(&FormalSeries::constant(pu.clone(), n), &geodesic(&flat, &pu, n)))
    });
    let mut s = Sampler::new(cfg.seed ^ 0x9e0);
    let odes: Vec<(ConnectionParams, Tensor, Tensor)> = (0..cfg.samples)
        .map(|_| {
            let c0 = if s.coin(0.5) { Tensor::one_form(s.unit(), s.unit()) } else { s.unit_field() };
            (s.rational_params(), s.unit_field(), c0)
        })
        .collect();
    r.run(format!("ċ + ∇_X c = 0 through order {}, {} random cases", n - 1, odes.len()), || {
        let mut items = Vec::new();
        for (p, x, c0) in &odes {
            let c = Connection::new(p.clone())?;
            items.push((format!("X = {x}, c0 = {c0}"), transport_residual(&c, x, &parallel_transport(&c, x, c0, n)).is_zero()));
        }
        Ok(first_failure(items))
    });
    let geo_order = n;
    // the geodesic recursion is quadratic, so fewer cases
    let geo = &odes[..odes.len().min(5)];
    r.run(format!("ċ + ∇_c c = 0 through order {}, {} random cases", geo_order - 1, geo.len()), || {
        let mut items = Vec::new();
        for (p, x, _) in geo {
            let c = Connection::new(p.clone())?;
            items.push((format!("c0 = {x}"), geodesic_residual(&c, &geodesic(&c, x, geo_order)).is_zero()));
        }
        Ok(first_failure(items))
    });
    r
}

/// Parameter families from the sphere case tables, for sampling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `h221 = h211 = 0`, `h121 = 1/(q^2-1)`, `h111` free.
    CompatA,
    /// `h111 = h121 = 0`, `h211 = 1/(q^2-q^4)`, `h221` free.
    CompatB,
    /// `h111 = h221 = 0`, one of `h121`, `h211` zero.
    Diagonal,
    /// `h121 = q^2 h211`.
    Balanced,
    /// `(q^2-1)(h121 - q^2 h211) = 1`.
    Singular,
    Generic,
}

pub fn sample_family(s: &mut Sampler, f: Family) -> SphereParams {
    let z = ScalarQ::zero;
    let mut h = s.sphere_params();
    match f {
        Family::CompatA => SphereParams::new(s.scalar(), SphereParams::special_h121(), z(), z()),
        Family::CompatB => SphereParams::new(z(), z(), SphereParams::special_h211(), s.scalar()),
        Family::Diagonal => {
            if s.coin(0.5) {
                SphereParams::new(z(), s.scalar(), z(), z())
            } else {
                SphereParams::new(z(), z(), s.scalar(), z())
            }
        }
        Family::Balanced => {
            h.h121 = h.h211.mul_q_pow(2);
            h
        }
        Family::Singular => {
            h.h121 = &SphereParams::special_h121() + &h.h211.mul_q_pow(2);
            h
        }
        Family::Generic => h,
    }
}

fn listed(cases: &[char]) -> String {
    if cases.is_empty() {
        "no listed case".into()
    } else {
        format!("case {}", cases.iter().map(char::to_string).collect::<Vec<_>>().join(", "))
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

/// Predicted against computed truth of each sphere claim at `h`.
pub fn sphere_claims(h: &SphereParams) -> Vec<(&'static str, bool, bool)> {
    vec![
        ("compatible", !sphere::compat_cases(h).is_empty(), sphere::sphere_compat(h).passes()),
        ("braid relation", !sphere::braid_cases(h).is_empty(), sphere::braid_relation_check(h)),
        ("invertible", !h.x().is_zero(), sphere::is_invertible(h)),
        ("σ² = id", !sphere::square_cases(h).is_empty(), sphere::sigma_squared_is_identity(h)),
    ]
}

pub fn sphere_suite(cfg: &Config) -> Result<Report> {
    let h = match cfg.case {
        Some(c) => c.apply(&cfg.sphere)?,
        None => cfg.sphere.clone(),
    };
    let mut r = Report::new("sphere", cfg.timings);
    if let Some(c) = cfg.case {
        r.run(format!("h is in compatibility case ({})", c.letter()), || {
            let cases = sphere::compat_cases(&h);
            Ok(Outcome::new(cases.contains(&c.letter()), format!("case {}", c.letter()), listed(&cases)))
        });
    }
    let compat = sphere::sphere_compat(&h);
    r.run(format!("σ fixes Θ² at {h}"), || Ok(Outcome::holds(compat.theta_fixed)));
    r.run(format!("T₃Θ³ ⊂ Ω¹⊗Θ² at {h}"), || {
        Ok(Outcome::new(compat.t3_ok, "(id⊗∧)T₃ = 0", format!("(id⊗∧)T₃ =\n{}", compat.witness)))
    });
    for (claim, predicted, actual) in sphere_claims(&h) {
        let cases = match claim {
            "compatible" => listed(&sphere::compat_cases(&h)),
            "braid relation" => listed(&sphere::braid_cases(&h)),
            "σ² = id" => listed(&sphere::square_cases(&h)),
            _ => format!("x = {}", h.x()),
        };
        r.run(format!("{claim} as the case table says"), || {
            Ok(Outcome::new(predicted == actual, format!("{} ({cases})", yes(predicted)), yes(actual)))
        });
    }
    r.run("mixed block consistent", || Ok(Outcome::holds(sphere::mixed_block_consistent(&h))));
    if !h.x().is_zero() {
        r.run("Vec braiding equals the closed form", || {
            Ok(Outcome::eq(&sphere::closed_form_vec_sigma(&h)?, &sphere::sphere_vec_sigma(&h)?))
        });
        r.run("dim equals the closed form", || Ok(Outcome::eq(&dim_text(sphere::closed_form_dim(&h)), &dim_text(sphere::sphere_dim(&h)))));
    }
    if cfg.sweep {
        sphere_sweep(&mut r, cfg);
    }
    Ok(r)
}

/// Both sides of the dimension comparison may be undefined (singular σ_Vec, vanishing denominator).
fn dim_text(d: Result<ScalarQ>) -> String {
    d.map_or_else(|_| "undefined".to_string(), |d| d.to_string())
}

fn sphere_sweep(r: &mut Report, cfg: &Config) {
    let mut s = Sampler::new(cfg.seed ^ 0x5b);
    let z = ScalarQ::zero;
    let named = [
        ("compatibility case (d)", SphereParams::special()),
        ("h111 = h221 = 0, h121 = h211 = 1", SphereParams::new(z(), ScalarQ::one(), ScalarQ::one(), z())),
        ("h = 0", SphereParams::zero()),
    ];
    for (label, h) in named {
        for (claim, predicted, actual) in sphere_claims(&h) {
            r.run(format!("{label}: {claim}"), || {
                let mut got = yes(actual).to_string();
                if claim == "compatible" && !actual {
                    got += &format!("; (id⊗∧)T₃ =\n{}", sphere::sphere_compat(&h).witness);
                }
                Ok(Outcome::new(predicted == actual, yes(predicted), got))
            });
        }
    }
    let families = [
        Family::CompatA,
        Family::CompatB,
        Family::Diagonal,
        Family::Balanced,
        Family::Singular,
        Family::Generic,
    ];
    for f in families {
        let hs: Vec<SphereParams> = (0..cfg.samples).map(|_| sample_family(&mut s, f)).collect();
        r.run(format!("{f:?} family, {} samples: every claim as the case table says", hs.len()), || {
            Ok(first_failure(hs.iter().flat_map(|h| {
                sphere_claims(h).into_iter().map(move |(claim, p, a)| (format!("{claim} at {h}"), p == a))
            })))
        });
        if f == Family::Singular {
            continue;
        }
        r.run(format!("{f:?} family, {} samples: dim equals the closed form", hs.len()), || {
            let mut items = Vec::new();
            for h in hs.iter().filter(|h| !h.x().is_zero()) {
                items.push((h.to_string(), sphere::sphere_dim(h).ok() == sphere::closed_form_dim(h).ok()));
            }
            Ok(first_failure(items))
        });
    }
    r.run("dim = 2 at h = 0", || Ok(Outcome::eq(&ScalarQ::from_int(2), &sphere::sphere_dim(&SphereParams::zero())?)));
    r.run("dim varies along a random line", || {
        let dir = s.sphere_params();
        let mut seen = Vec::new();
        for t in 1..=3 {
            let h = SphereParams::new(
                &dir.h111 * &ScalarQ::from_int(t),
                &dir.h121 * &ScalarQ::from_int(t),
                &dir.h211 * &ScalarQ::from_int(t),
                &dir.h221 * &ScalarQ::from_int(t),
            );
            seen.push(sphere::sphere_dim(&h)?);
        }
        seen.dedup();
        Ok(Outcome::new(seen.len() > 1, "nonconstant", format!("{} distinct values", seen.len())))
    });
}
