//! Browser bindings. Every export returns plain text; failures come back as `error: ...`
//! so the page can show them in place.

use std::fmt::Write as _;

use num_rational::BigRational;
use wasm_bindgen::prelude::*;

use ncdiff::expr::{evaluate, Value};
use ncdiff::flows::exp_lie;
use ncdiff::interior::Interior;
use ncdiff::sphere::{self, SphereParams};
use ncdiff::{Result, ScalarQ};

fn text(r: Result<String>) -> String {
    r.unwrap_or_else(|e| format!("error: {e}"))
}

fn scalar(name: &str, src: &str) -> Result<ScalarQ> {
    let src = if src.trim().is_empty() { "0" } else { src };
    evaluate(src)?
        .as_scalar()
        .ok_or_else(|| ncdiff::Error::Config(format!("{name} must be a scalar in q")))
}

fn at_q(v: &Value, q: &str) -> Result<Option<String>> {
    if q.trim().is_empty() {
        return Ok(None);
    }
    let q0: BigRational = q.trim().parse().map_err(|_| ncdiff::Error::Config(format!("q = {q} is not a rational")))?;
    Ok(Some(v.at_q(&q0)?.to_string()))
}

/// Normal form of an expression, optionally followed by its value at a rational `q`.
#[wasm_bindgen]
pub fn eval_expression(src: &str, q: &str) -> String {
    text((|| {
        let v = evaluate(src)?;
        let mut out = v.to_string();
        if let Some(x) = at_q(&v, q)? {
            write!(out, "\nat q = {}: {x}", q.trim()).unwrap();
        }
        Ok(out)
    })())
}

/// Braiding, case classification and dimension of the sphere calculus at the given `h`.
#[wasm_bindgen]
pub fn sphere_analysis(h111: &str, h121: &str, h211: &str, h221: &str) -> String {
    text((|| {
        let h = SphereParams::new(
            scalar("h111", h111)?,
            scalar("h121", h121)?,
            scalar("h211", h211)?,
            scalar("h221", h221)?,
        );
        let mut out = String::new();
        writeln!(out, "{h}").unwrap();
        writeln!(out, "x = {}", h.x()).unwrap();
        writeln!(out, "σ =\n{}", sphere::sphere_sigma(&h)).unwrap();
        let c = sphere::sphere_compat(&h);
        writeln!(out, "fixes Θ²: {}", c.theta_fixed).unwrap();
        writeln!(out, "(id⊗∧)T₃ = 0: {}", c.t3_ok).unwrap();
        if !c.t3_ok {
            writeln!(out, "(id⊗∧)T₃ =\n{}", c.witness).unwrap();
        }
        writeln!(out, "braid relation: {}", sphere::braid_relation_check(&h)).unwrap();
        writeln!(out, "σ² = id: {}", sphere::sigma_squared_is_identity(&h)).unwrap();
        let cases = |v: Vec<char>| if v.is_empty() { "none".to_string() } else { v.into_iter().collect() };
        writeln!(out, "compatibility cases: {}", cases(sphere::compat_cases(&h))).unwrap();
        writeln!(out, "braid cases: {}", cases(sphere::braid_cases(&h))).unwrap();
        writeln!(out, "square cases: {}", cases(sphere::square_cases(&h))).unwrap();
        match sphere::sphere_dim(&h) {
            Ok(d) => writeln!(out, "dim = {d}").unwrap(),
            Err(e) => writeln!(out, "dim: {e}").unwrap(),
        }
        Ok(out)
    })())
}

/// Coefficients of `exp(t L_X) ω` through `t^order`, one per line.
#[wasm_bindgen]
pub fn exp_series(field: &str, form: &str, order: usize) -> String {
    text((|| {
        let x = evaluate(field)?.as_field()?;
        let w = evaluate(form)?.as_form()?;
        let s = exp_lie(&Interior::default(), &x, &w, order.min(16));
        let mut out = String::new();
        for (k, c) in s.coeffs().iter().enumerate() {
            writeln!(out, "t^{k}: {}", Value::from_form(c.clone())).unwrap();
        }
        Ok(out)
    })())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluates() {
        assert_eq!(eval_expression("u*v", ""), "(q) v^1 u^1");
        assert!(eval_expression("u*v", "2").ends_with("at q = 2: (2) v^1 u^1"));
        assert!(eval_expression("(u", "").starts_with("error:"));
    }

    #[test]
    fn sphere_report() {
        let r = sphere_analysis("", "", "", "");
        assert!(r.contains("dim = 2"), "{r}");
        assert!(r.contains("σ² = id: true"));
        assert!(sphere_analysis("u", "", "", "").starts_with("error:"));
    }

    #[test]
    fn series() {
        let r = exp_series("pu", "u^2", 3);
        assert_eq!(r.lines().count(), 4);
        assert!(r.starts_with("t^0: (1) u^2"), "{r}");
    }
}
