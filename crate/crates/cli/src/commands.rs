use std::fmt::Write;

use anyhow::Result;
use serde_json::{json, Value};
use skewbetti_core::betti::{
    corso_nagel_betti, extremal_betti_closed, initial_block_graphs, join_convolve, nagel_reiner_betti, pd_reg_spherical,
};
use skewbetti_core::diagram::{CellDiagram, EmptyKind};
use skewbetti_core::graph::{
    analyze_closed, blocks, count_max_induced_matchings, cut_vertices, graph_of_diagram, induced_matching_number,
    SimpleGraph, Vertex,
};
use skewbetti_core::homology::Field;
use skewbetti_core::Error;

use crate::args::{FerrersAction, FieldArg, GraphAction, MethodArg, Options};
use crate::engine::Engine;
use crate::input::{parse_labeling, read_edges, Invalid};
use crate::render::betti_table;
use crate::report::{Check, RunReport, TableReport};

/// A finished command: the structured report and its text rendering.
pub struct Outcome {
    pub report: RunReport,
    pub text: String,
}

pub struct Context {
    pub opts: Options,
    pub engine: Engine,
}

impl Context {
    pub fn new(opts: Options) -> Result<Self> {
        let engine = Engine::new(opts.max_vertices, opts.threads)?;
        Ok(Context { opts, engine })
    }

    fn fields(&self) -> Vec<Field> {
        match self.opts.field {
            FieldArg::Gf2 => vec![Field::Gf2],
            FieldArg::Rational => vec![Field::Rational],
            FieldArg::Both => vec![Field::Gf2, Field::Rational],
        }
    }

    fn push_hochster(&self, report: &mut RunReport, g: &SimpleGraph) -> Result<()> {
        for field in self.fields() {
            let t = self.engine.hochster(g, field)?;
            report.tables.push(TableReport::new("hochster", Some(field), t));
        }
        Ok(())
    }
}

fn cell_name((r, c): (u32, u32)) -> String {
    format!("(x{r},y{c})")
}

fn names(prefix: char, labels: &[u32]) -> Vec<String> {
    labels.iter().map(|l| format!("{prefix}{l}")).collect()
}

fn vertex_names(vs: &[Vertex]) -> Vec<String> {
    vs.iter().map(Vertex::to_string).collect()
}

fn list_or_none(items: &[String]) -> String {
    if items.is_empty() {
        String::from("none")
    } else {
        items.join(",")
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn write_tables(text: &mut String, report: &RunReport) {
    for t in &report.tables {
        let _ = writeln!(text, "{}:", t.label());
        text.push_str(&betti_table(&t.table));
        let _ = writeln!(
            text,
            "pd {}, reg {}, last column concentrated: {}",
            t.pd.map_or(String::from("-"), |p| p.to_string()),
            t.reg.map_or(String::from("-"), |r| r.to_string()),
            yes_no(t.concentrated)
        );
    }
    if let Some(a) = report.agreement {
        let _ = writeln!(text, "engines agree: {}", yes_no(a));
    }
}

fn write_checks_and_notes(text: &mut String, report: &RunReport) {
    for c in &report.checks {
        let status = if c.passed { "ok" } else { "FAILED" };
        match &c.detail {
            Some(d) => writeln!(text, "check {}: {status} ({d})", c.name),
            None => writeln!(text, "check {}: {status}", c.name),
        }
        .expect("write to string");
    }
    for n in &report.notes {
        let _ = writeln!(text, "note: {n}");
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum DiagramMethod {
    Hochster,
    NagelReiner,
    CorsoNagel,
}

fn diagram_methods(opts: &Options, ferrers: bool, notes: &mut Vec<String>) -> Result<Vec<DiagramMethod>, Invalid> {
    use DiagramMethod::*;
    let mut out = match opts.method.unwrap_or(MethodArg::NagelReiner) {
        MethodArg::Hochster => vec![Hochster],
        MethodArg::NagelReiner => vec![NagelReiner],
        MethodArg::CorsoNagel if !ferrers => {
            return Err(Invalid(String::from(
                "corso-nagel needs a Ferrers shape (mu all zero, no empty rows)",
            )))
        }
        MethodArg::CorsoNagel => vec![CorsoNagel],
        MethodArg::All => vec![Hochster, NagelReiner, CorsoNagel],
    };
    if opts.crosscheck {
        out.extend([Hochster, NagelReiner, CorsoNagel]);
    }
    out.sort();
    out.dedup();
    if !ferrers && out.contains(&CorsoNagel) {
        out.retain(|&m| m != CorsoNagel);
        notes.push(String::from("corso-nagel skipped: not a Ferrers shape"));
    }
    Ok(out)
}

pub fn ferrers(ctx: &Context, lambda: &[u32], mu: &[u32], action: FerrersAction) -> Result<Outcome> {
    let mu = if mu.is_empty() {
        vec![0; lambda.len()]
    } else {
        mu.to_vec()
    };
    let d = CellDiagram::new_skew_ferrers(lambda, &mu)?;
    let action_name = match action {
        FerrersAction::Decompose => "decompose",
        FerrersAction::Betti => "betti",
        FerrersAction::Pdreg => "pdreg",
    };
    let mut report = RunReport::new("ferrers", json!({ "lambda": lambda, "mu": mu, "action": action_name }));
    let mut text = format!("{d}");
    match action {
        FerrersAction::Decompose => decompose(ctx, &d, &mut report, &mut text)?,
        FerrersAction::Betti => diagram_betti(ctx, &d, &mut report, &mut text)?,
        FerrersAction::Pdreg => pdreg(ctx, &d, &mut report, &mut text)?,
    }
    write_checks_and_notes(&mut text, &report);
    Ok(Outcome { report, text })
}

fn decompose(ctx: &Context, d: &CellDiagram, report: &mut RunReport, text: &mut String) -> Result<()> {
    let dec = d.rectangular_decomposition()?;
    let mut pieces = Vec::new();
    for (k, p) in dec.pieces.iter().enumerate() {
        let cells: Vec<String> = p.cells.iter().map(|&c| cell_name(c)).collect();
        let _ = writeln!(
            text,
            "piece {}: top cell {}, rows {}, cols {}, cells {}",
            k + 1,
            cell_name(p.top_cell),
            names('x', &p.rows).join(","),
            names('y', &p.cols).join(","),
            cells.join(" ")
        );
        pieces.push(json!({
            "top_cell": cell_name(p.top_cell),
            "rows": names('x', &p.rows),
            "cols": names('y', &p.cols),
            "cells": cells,
        }));
    }
    let empties: Vec<String> = dec.empties.iter().map(ToString::to_string).collect();
    let dropped = |kind: EmptyKind| -> Vec<u32> {
        dec.empties
            .iter()
            .filter(|e| e.kind == kind)
            .flat_map(|e| e.labels.iter().copied())
            .collect()
    };
    let (drop_rows, drop_cols) = (dropped(EmptyKind::Rows), dropped(EmptyKind::Cols));
    let keep_rows: Vec<u32> = d.rows().iter().copied().filter(|r| !drop_rows.contains(r)).collect();
    let keep_cols: Vec<u32> = d.cols().iter().copied().filter(|c| !drop_cols.contains(c)).collect();
    let stripped = d.restrict(&keep_rows, &keep_cols)?.rectangular_decomposition()?;
    let _ = writeln!(
        text,
        "empty rectangles: {}",
        if empties.is_empty() {
            String::from("none")
        } else {
            empties.join(" ")
        }
    );
    let _ = writeln!(
        text,
        "cells {}, rect {}, spherical: {}, degenerate: {}",
        d.cell_count(),
        dec.rect(),
        yes_no(dec.is_spherical()),
        yes_no(dec.is_degenerate())
    );
    let _ = writeln!(
        text,
        "without empty rectangles: rect {}, spherical: {}",
        stripped.rect(),
        yes_no(stripped.is_spherical())
    );
    report.details = json!({
        "cells": d.cell_count(),
        "rect": dec.rect(),
        "spherical": dec.is_spherical(),
        "degenerate": dec.is_degenerate(),
        "pieces": pieces,
        "empty_rectangles": empties,
        "stripped": {
            "rows": names('x', &keep_rows),
            "cols": names('y', &keep_cols),
            "rect": stripped.rect(),
            "spherical": stripped.is_spherical(),
        },
    });
    if ctx.opts.crosscheck {
        let nu = induced_matching_number(&graph_of_diagram(d))?;
        report.checks.push(Check::new(
            "rect-equals-nu",
            nu == dec.rect(),
            Some(format!("rect {}, nu {nu}", dec.rect())),
        ));
    }
    Ok(())
}

fn diagram_betti(ctx: &Context, d: &CellDiagram, report: &mut RunReport, text: &mut String) -> Result<()> {
    if d.is_degenerate() {
        report
            .notes
            .push(String::from("diagram has no cells, so its edge ideal is zero"));
        report.details = json!({ "degenerate": true });
        return Ok(());
    }
    for m in diagram_methods(&ctx.opts, d.is_ferrers(), &mut report.notes)? {
        match m {
            DiagramMethod::Hochster => ctx.push_hochster(report, &graph_of_diagram(d))?,
            DiagramMethod::NagelReiner => {
                report
                    .tables
                    .push(TableReport::new("nagel-reiner", None, nagel_reiner_betti(d)?));
            }
            DiagramMethod::CorsoNagel => {
                let cn = corso_nagel_betti(d)?;
                report.checks.push(Check::new(
                    "first-total-counts-cells",
                    cn.totals.first() == Some(&(d.cell_count() as u64)),
                    Some(format!(
                        "beta_0 {}, cells {}",
                        cn.totals.first().copied().unwrap_or(0),
                        d.cell_count()
                    )),
                ));
                report.tables.push(TableReport::new("corso-nagel", None, cn.table()));
            }
        }
    }
    report.set_agreement();
    write_tables(text, report);
    Ok(())
}

fn pdreg(ctx: &Context, d: &CellDiagram, report: &mut RunReport, text: &mut String) -> Result<()> {
    let (pd, reg) = pd_reg_spherical(d)?;
    let rect = d.rect()?;
    let _ = writeln!(text, "pd {pd}, reg {reg}, rect {rect}");
    report.details = json!({ "pd": pd, "reg": reg, "rect": rect });
    if ctx.opts.crosscheck {
        ctx.push_hochster(report, &graph_of_diagram(d))?;
        for t in &report.tables {
            report.checks.push(Check::new(
                format!("pd-reg-match-{}", t.label().replace(' ', "-")),
                (t.pd, t.reg) == (Some(pd), Some(reg)),
                Some(format!("oracle pd {:?}, reg {:?}", t.pd, t.reg)),
            ));
        }
        report.set_agreement();
        write_tables(text, report);
    }
    Ok(())
}

pub fn graph(ctx: &Context, edges: &str, action: GraphAction) -> Result<Outcome> {
    let g = SimpleGraph::from_edges(&read_edges(edges)?)?;
    let action_name = match action {
        GraphAction::Betti => "betti",
        GraphAction::Nu => "nu",
        GraphAction::Blocks => "blocks",
    };
    let mut report = RunReport::new("graph", json!({ "edges": g.to_string(), "action": action_name }));
    let mut text = String::new();
    match action {
        GraphAction::Betti => {
            if !matches!(ctx.opts.method, None | Some(MethodArg::Hochster | MethodArg::All)) {
                return Err(Invalid(String::from("graph input supports only the hochster method")).into());
            }
            ctx.push_hochster(&mut report, &g)?;
            report.set_agreement();
            write_tables(&mut text, &report);
        }
        GraphAction::Nu => {
            let nu = induced_matching_number(&g)?;
            let count = count_max_induced_matchings(&g)?;
            let _ = writeln!(
                text,
                "induced matching number {nu}, attained by {count} induced matchings"
            );
            report.details = json!({ "nu": nu, "maximum_induced_matchings": count });
        }
        GraphAction::Blocks => {
            let cuts = cut_vertices(&g);
            let bs = blocks(&g)?;
            let _ = writeln!(text, "cut vertices: {}", list_or_none(&vertex_names(&cuts)));
            for (k, b) in bs.iter().enumerate() {
                let _ = writeln!(text, "block {}: {b}", k + 1);
            }
            report.details = json!({
                "cut_vertices": vertex_names(&cuts),
                "blocks": bs.iter().map(ToString::to_string).collect::<Vec<_>>(),
            });
        }
    }
    write_checks_and_notes(&mut text, &report);
    Ok(Outcome { report, text })
}

pub fn closed(ctx: &Context, edges: &str, labeling: Option<&[String]>) -> Result<Outcome> {
    let g = SimpleGraph::from_edges(&read_edges(edges)?)?;
    let given = labeling.map(parse_labeling).transpose()?;
    let mut report = RunReport::new(
        "closed",
        json!({ "edges": g.to_string(), "labeling": given.as_deref().map(vertex_names) }),
    );
    let mut text = String::new();
    let analysis = match analyze_closed(&g, given.as_deref()) {
        Ok(a) => a,
        Err(Error::NotClosed(why)) => {
            let _ = writeln!(text, "graph is not closed{why}");
            report.details = json!({ "closed": false });
            return Ok(Outcome { report, text });
        }
        Err(e) => return Err(e.into()),
    };
    let pred = extremal_betti_closed(&g, Some(&analysis.labeling))?;
    let block_shapes: Vec<Value> = pred
        .per_block
        .iter()
        .map(|b| json!({ "n": b.n, "mu": b.mu, "s": b.s }))
        .collect();
    let _ = writeln!(text, "closed labeling: {}", vertex_names(&analysis.labeling).join(","));
    let _ = writeln!(text, "mu {:?}, s {}", analysis.mu, analysis.s);
    let _ = writeln!(
        text,
        "cut vertices: {}",
        list_or_none(&vertex_names(&analysis.cut_vertices))
    );
    for (k, (b, shape)) in analysis.blocks.iter().zip(&pred.per_block).enumerate() {
        let _ = writeln!(
            text,
            "block {}: {b} (n {}, mu {}, s {})",
            k + 1,
            shape.n,
            shape.mu,
            shape.s
        );
    }
    if pred.applicable {
        let _ = writeln!(
            text,
            "predicted extremal Betti number: beta_{{{},{}}} = {}, reg {}",
            pred.p,
            pred.p + pred.r,
            pred.value,
            pred.r
        );
    } else {
        let _ = writeln!(
            text,
            "prediction not applicable: {}",
            pred.reason.as_deref().unwrap_or("")
        );
    }

    let parts = initial_block_graphs(&g, Some(&analysis.labeling))?;
    let mut union = parts[0].clone();
    for h in &parts[1..] {
        union = union.disjoint_union(h)?;
    }
    report.details = json!({
        "closed": true,
        "labeling": vertex_names(&analysis.labeling),
        "mu": analysis.mu,
        "s": analysis.s,
        "cut_vertices": vertex_names(&analysis.cut_vertices),
        "blocks": analysis.blocks.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "initial_graph": union.to_string(),
        "prediction": {
            "applicable": pred.applicable,
            "p": pred.applicable.then_some(pred.p),
            "r": pred.applicable.then_some(pred.r),
            "value": pred.applicable.then_some(pred.value),
            "blocks": block_shapes,
            "reason": pred.reason,
        },
    });

    if let Err(e) = ctx
        .engine
        .check_size("graph of the initial ideal", union.vertex_count())
    {
        report.notes.push(format!("Betti table skipped: {e}"));
    } else {
        for field in ctx.fields() {
            let whole = ctx.engine.hochster(&union, field)?;
            let per_block = parts
                .iter()
                .map(|h| ctx.engine.hochster(h, field))
                .collect::<Result<Vec<_>>>()?;
            report.checks.push(Check::new(
                format!("blocks-join-{}", crate::report::field_name(field)),
                join_convolve(&per_block)? == whole,
                None,
            ));
            let corner = whole.corner();
            report.checks.push(Check::new(
                format!("corner-nonzero-{}", crate::report::field_name(field)),
                corner.is_some_and(|c| c.2 != 0),
                corner.map(|(i, j, v)| format!("beta_{{{i},{j}}} = {v}")),
            ));
            if pred.applicable {
                let got = corner.unwrap_or((0, 0, 0));
                let want = (pred.p, pred.p + pred.r, pred.value);
                report.checks.push(Check::new(
                    format!("prediction-matches-{}", crate::report::field_name(field)),
                    got == want && whole.reg() == Some(pred.r),
                    Some(format!("predicted {want:?}, computed {got:?}")),
                ));
            }
            report.tables.push(TableReport::new("hochster", Some(field), whole));
        }
        report.set_agreement();
        let _ = writeln!(text, "initial ideal graph: {union}");
        write_tables(&mut text, &report);
    }
    write_checks_and_notes(&mut text, &report);
    Ok(Outcome { report, text })
}
