//! Seeded random skew Ferrers diagrams checked against every engine.

use std::fmt::Write;

use anyhow::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use skewbetti_core::betti::{last_column_concentrated, nagel_reiner_betti};
use skewbetti_core::diagram::CellDiagram;
use skewbetti_core::graph::{count_max_induced_matchings, graph_of_diagram, induced_matching_number};
use skewbetti_core::homology::Field;

use crate::args::CheckKind;
use crate::commands::{Context, Outcome};
use crate::engine::Engine;
use crate::input::Invalid;
use crate::report::{Check, RunReport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shape {
    pub lambda: Vec<u32>,
    pub mu: Vec<u32>,
}

impl Shape {
    pub fn diagram(&self) -> CellDiagram {
        CellDiagram::new_skew_ferrers(&self.lambda, &self.mu).expect("generated shapes are valid")
    }

    fn join(v: &[u32]) -> String {
        v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    }

    /// Command line that reruns this shape through every engine.
    pub fn reproducer(&self) -> String {
        format!(
            "skewbetti --field both --crosscheck ferrers --lambda {} --mu {} betti",
            Shape::join(&self.lambda),
            Shape::join(&self.mu)
        )
    }
}

/// Draws a diagram with at most `max_rows` rows and `max_cols` columns and
/// at least one cell. `mu` is drawn bottom-up so that it stays
/// nonincreasing and below `lambda`.
pub fn random_shape(rng: &mut impl Rng, max_rows: usize, max_cols: usize) -> Shape {
    loop {
        let n = rng.random_range(1..=max_rows);
        let m = rng.random_range(1..=max_cols as u32);
        let mut lambda: Vec<u32> = (0..n).map(|_| rng.random_range(1..=m)).collect();
        lambda.sort_unstable_by(|a, b| b.cmp(a));
        lambda[0] = m;
        let mut mu = vec![0; n];
        mu[n - 1] = rng.random_range(0..=lambda[n - 1]);
        for i in (0..n - 1).rev() {
            mu[i] = rng.random_range(mu[i + 1]..=lambda[i]);
        }
        let shape = Shape { lambda, mu };
        if !shape.diagram().is_degenerate() {
            return shape;
        }
    }
}

/// Deterministic stream of shapes for a seed.
pub fn shapes(seed: u64, count: usize, max_rows: usize, max_cols: usize) -> Vec<Shape> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_shape(&mut rng, max_rows, max_cols)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub check: CheckKind,
    pub detail: String,
}

/// Runs the requested checks on one shape and returns the first failure.
pub fn check_shape(engine: &Engine, shape: &Shape, checks: &[CheckKind]) -> Result<Option<Violation>> {
    let d = shape.diagram();
    let g = graph_of_diagram(&d);
    let gf2 = engine.hochster(&g, Field::Gf2)?;
    let fail = |check, detail: String| Ok(Some(Violation { check, detail }));
    for &check in checks {
        match check {
            CheckKind::FieldsAgree => {
                let q = engine.hochster(&g, Field::Rational)?;
                if q != gf2 {
                    return fail(check, format!("gf2 {:?} vs rational {:?}", entries(&gf2), entries(&q)));
                }
            }
            CheckKind::OracleMatchesCounting => {
                let nr = nagel_reiner_betti(&d)?;
                if nr != gf2 {
                    return fail(
                        check,
                        format!("homology {:?} vs counting {:?}", entries(&gf2), entries(&nr)),
                    );
                }
            }
            CheckKind::LastColumnConcentrated => {
                if !last_column_concentrated(&gf2) {
                    let p = gf2.pd().unwrap_or(0);
                    let column: Vec<_> = gf2.entries().filter(|e| e.0 == p).collect();
                    return fail(check, format!("pd {p}, reg {}, last column {column:?}", gf2.reg().unwrap_or(0)));
                }
            }
            CheckKind::MatchingBound => {
                let (p, r) = (gf2.pd().unwrap_or(0), gf2.reg().unwrap_or(0));
                if p + 2 < r {
                    return fail(check, format!("pd {p} + 2 < reg {r}"));
                }
                if p + 2 == r {
                    let count = count_max_induced_matchings(&g)?;
                    if gf2.total(p) != count {
                        return fail(
                            check,
                            format!(
                                "pd + 2 = reg but beta_{p} = {} and {count} maximum induced matchings",
                                gf2.total(p)
                            ),
                        );
                    }
                }
            }
            CheckKind::RectEqualsNu => {
                let (rect, nu) = (d.rect()?, induced_matching_number(&g)?);
                if rect != nu {
                    return fail(check, format!("rect {rect}, nu {nu}"));
                }
            }
        }
    }
    Ok(None)
}

fn entries(t: &skewbetti_core::betti::BettiTable) -> Vec<(usize, usize, u64)> {
    t.entries().collect()
}

fn smaller_shapes(s: &Shape) -> Vec<Shape> {
    let n = s.lambda.len();
    let mut out = Vec::new();
    for i in 0..n {
        if n > 1 {
            let mut t = s.clone();
            t.lambda.remove(i);
            t.mu.remove(i);
            out.push(t);
        }
        let mut t = s.clone();
        t.lambda[i] = t.lambda[i].saturating_sub(1);
        out.push(t);
        let mut t = s.clone();
        t.mu[i] += 1;
        out.push(t);
    }
    // drops the last column when every row leaves it empty
    if s.mu.iter().all(|&m| m > 0) {
        out.push(Shape {
            lambda: s.lambda.iter().map(|l| l - 1).collect(),
            mu: s.mu.iter().map(|m| m - 1).collect(),
        });
    }
    out.retain(|t| CellDiagram::new_skew_ferrers(&t.lambda, &t.mu).is_ok_and(|d| !d.is_degenerate()));
    out
}

/// Greedily removes rows and cells while the same check keeps failing.
pub fn shrink(engine: &Engine, shape: &Shape, check: CheckKind) -> (Shape, Violation) {
    let mut current = shape.clone();
    let mut violation = match check_shape(engine, &current, &[check]) {
        Ok(Some(v)) => v,
        _ => unreachable!("shrink starts from a failing shape"),
    };
    'outer: loop {
        for candidate in smaller_shapes(&current) {
            if let Ok(Some(v)) = check_shape(engine, &candidate, &[check]) {
                current = candidate;
                violation = v;
                continue 'outer;
            }
        }
        return (current, violation);
    }
}

pub fn run(
    ctx: &Context,
    seed: u64,
    count: usize,
    max_rows: usize,
    max_cols: usize,
    skip: &[CheckKind],
) -> Result<Outcome> {
    if max_rows == 0 || max_cols == 0 {
        return Err(Invalid(String::from("--max-rows and --max-cols must be positive")).into());
    }
    if max_rows + max_cols > ctx.opts.max_vertices {
        return Err(Invalid(format!(
            "diagrams up to {max_rows}x{max_cols} have up to {} vertices, above --max-vertices {}",
            max_rows + max_cols,
            ctx.opts.max_vertices
        ))
        .into());
    }
    let checks: Vec<CheckKind> = CheckKind::ALL.into_iter().filter(|c| !skip.contains(c)).collect();
    let mut report = RunReport::new(
        "fuzz",
        json!({
            "seed": seed,
            "count": count,
            "max_rows": max_rows,
            "max_cols": max_cols,
            "skip": skip.iter().map(|c| c.name()).collect::<Vec<_>>(),
        }),
    );
    let mut text = String::new();
    let mut checked = 0;
    let mut failure = None;
    for (k, shape) in shapes(seed, count, max_rows, max_cols).into_iter().enumerate() {
        checked += 1;
        if let Some(v) = check_shape(&ctx.engine, &shape, &checks)? {
            failure = Some((k, shape, v));
            break;
        }
    }
    for &c in &checks {
        let passed = failure.as_ref().is_none_or(|f| f.2.check != c);
        report.checks.push(Check::new(c.name(), passed, None));
    }
    report.details = match &failure {
        None => {
            let _ = writeln!(text, "checked {checked} diagrams, all checks pass");
            json!({ "checked": checked, "violation": null })
        }
        Some((k, shape, v)) => {
            let (small, sv) = shrink(&ctx.engine, shape, v.check);
            let _ = writeln!(
                text,
                "diagram {} of {count} fails {}: {}",
                k + 1,
                v.check.name(),
                v.detail
            );
            let _ = writeln!(text, "  lambda {:?}, mu {:?}", shape.lambda, shape.mu);
            let _ = writeln!(
                text,
                "minimized: lambda {:?}, mu {:?}: {}",
                small.lambda, small.mu, sv.detail
            );
            let _ = write!(text, "{}", small.diagram());
            let _ = writeln!(text, "reproduce with: {}", small.reproducer());
            json!({
                "checked": checked,
                "violation": {
                    "index": k,
                    "check": v.check.name(),
                    "lambda": shape.lambda,
                    "mu": shape.mu,
                    "detail": v.detail,
                    "minimized": { "lambda": small.lambda, "mu": small.mu, "detail": sv.detail },
                    "reproducer": small.reproducer(),
                },
            })
        }
    };
    Ok(Outcome { report, text })
}
