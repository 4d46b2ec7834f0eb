//! Graded Betti tables of squarefree monomial ideals.
//!
//! Indices follow the ideal: `β_{0,j}` counts minimal generators of degree
//! `j`, so for an edge ideal `β_{0,2}` is the number of edges.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::diagram::CellDiagram;
use crate::graph::{analyze_closed, initial_closed_graph, mu_vector, SimpleGraph, Vertex};
use crate::homology::{independence_complex, reduced_homology_dims, Field, SimplicialComplex};
use crate::{Error, Result};

/// Hochster sums run over every vertex subset.
pub const MAX_HOCHSTER_VERTICES: usize = 20;
/// Spherical counting runs over every (row subset, column subset) pair.
pub const MAX_NAGEL_REINER_LINES: usize = 22;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a table from `(i, j, value)` triples; repeated positions add up.
    pub fn from_entries(entries: impl IntoIterator<Item = (usize, usize, u64)>) -> Self {
        let mut t = Self::new();
        for (i, j, v) in entries {
            t.add(i, j, v);
        }
        t
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, j: usize, value: u64) {
        if value != 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    pub fn merge(&mut self, other: &BettiTable) {
        for (i, j, v) in other.entries() {
            self.add(i, j, v);
        }
    }

    /// Nonzero entries, `i` ascending then `j` ascending.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Projective dimension: the largest `i` with a nonzero entry.
    pub fn pd(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }

    /// Regularity: the largest `j - i` over nonzero entries.
    pub fn reg(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, j)| j - i).max()
    }

    /// Total Betti number `β_i`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.range((i, 0)..=(i, usize::MAX)).map(|(_, &v)| v).sum()
    }

    /// `β_0, …, β_pd`.
    pub fn totals(&self) -> Vec<u64> {
        self.pd()
            .map_or_else(Vec::new, |pd| (0..=pd).map(|i| self.total(i)).collect())
    }

    /// Every nonzero entry sits at `j = i + d`.
    pub fn is_linear(&self, d: usize) -> bool {
        self.entries.keys().all(|&(i, j)| j == i + d)
    }

    /// `(pd, pd + reg, β_{pd, pd+reg})`; the value may be zero.
    pub fn corner(&self) -> Option<(usize, usize, u64)> {
        let (p, r) = (self.pd()?, self.reg()?);
        Some((p, p + r, self.get(p, p + r)))
    }

    /// Nonzero entries `β_{i,i+k}` such that no other nonzero entry
    /// `β_{a,a+b}` has `a >= i` and `b >= k`.
    pub fn extremal_entries(&self) -> Vec<(usize, usize, u64)> {
        self.entries()
            .filter(|&(i, j, _)| {
                !self
                    .entries
                    .keys()
                    .any(|&(a, b)| (a, b) != (i, j) && a >= i && b - a >= j - i)
            })
            .collect()
    }
}

/// Checks the Hochster preconditions for an edge ideal.
pub fn validate_hochster_input(g: &SimpleGraph) -> Result<()> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    if g.vertex_count() > MAX_HOCHSTER_VERTICES {
        return Err(Error::TooLarge {
            what: "Hochster vertex set",
            got: g.vertex_count(),
            limit: MAX_HOCHSTER_VERTICES,
        });
    }
    Ok(())
}

/// The `k`-th subset of `ground`: bit `b` of `k` selects the `b`-th lowest
/// element of `ground`.
pub fn nth_subset(ground: u64, k: u64) -> u64 {
    let mut out = 0;
    let mut g = ground;
    let mut bit = 0;
    while g != 0 {
        let low = g & g.wrapping_neg();
        g &= g - 1;
        if k >> bit & 1 == 1 {
            out |= low;
        }
        bit += 1;
    }
    out
}

/// Contribution of a single vertex set `w` to the Hochster sum:
/// `β_{i,|W|} += dim H̃_{|W|-i-2}(Δ[W])`.
pub fn hochster_contribution(complex: &SimplicialComplex, w: u64, field: Field) -> Result<BettiTable> {
    let restricted = complex.restrict_mask(w);
    let size = restricted.vertex_count() as isize;
    let dims = reduced_homology_dims(&restricted, field)?;
    let mut out = BettiTable::new();
    for (p, d) in dims.nonzero() {
        let i = size - p - 2;
        // i = -1 is the unit of the quotient ring, not part of the ideal
        if i >= 0 {
            out.add(i as usize, size as usize, d);
        }
    }
    Ok(out)
}

/// Graded Betti numbers of the Stanley–Reisner ideal of `complex`, summed
/// over every subset of its vertex set.
pub fn stanley_reisner_betti(complex: &SimplicialComplex, field: Field) -> Result<BettiTable> {
    let n = complex.vertex_count();
    if n > MAX_HOCHSTER_VERTICES {
        return Err(Error::TooLarge {
            what: "Hochster vertex set",
            got: n,
            limit: MAX_HOCHSTER_VERTICES,
        });
    }
    let ground = complex.ground_mask();
    let mut table = BettiTable::new();
    for k in 0..1u64 << n {
        table.merge(&hochster_contribution(complex, nth_subset(ground, k), field)?);
    }
    Ok(table)
}

/// Betti table of the edge ideal `I(G)` by Hochster's formula over the
/// independence complex.
pub fn hochster_betti(g: &SimpleGraph, field: Field) -> Result<BettiTable> {
    validate_hochster_input(g)?;
    stanley_reisner_betti(&independence_complex(g), field)
}

fn check_diagram(d: &CellDiagram) -> Result<()> {
    if d.is_degenerate() {
        return Err(Error::EmptyDiagram);
    }
    let lines = d.rows().len() + d.cols().len();
    if lines > MAX_NAGEL_REINER_LINES {
        return Err(Error::TooLarge {
            what: "diagram rows plus columns",
            got: lines,
            limit: MAX_NAGEL_REINER_LINES,
        });
    }
    Ok(())
}

/// Calls `f(size, rect)` for every nonempty spherical restriction.
fn for_each_spherical(d: &CellDiagram, mut f: impl FnMut(usize, usize)) -> Result<()> {
    let (nr, nc) = (d.rows().len(), d.cols().len());
    for rows in 1..1u64 << nr {
        for cols in 1..1u64 << nc {
            let sub = d.restrict_masks(rows, cols);
            if sub.is_degenerate() {
                continue;
            }
            let dec = sub.rectangular_decomposition()?;
            if dec.is_spherical() {
                f((rows.count_ones() + cols.count_ones()) as usize, dec.rect());
            }
        }
    }
    Ok(())
}

/// Betti table of the edge ideal of a skew Ferrers graph by counting
/// spherical restrictions `D[X', Y']`: each contributes 1 to
/// `β_{i, |X'|+|Y'|}` with `i = |X'| + |Y'| - rect - 1`.
pub fn nagel_reiner_betti(d: &CellDiagram) -> Result<BettiTable> {
    check_diagram(d)?;
    let mut table = BettiTable::new();
    for_each_spherical(d, |size, rect| {
        if size > rect {
            table.add(size - rect - 1, size, 1);
        }
    })?;
    Ok(table)
}

/// `pd` as the largest `|X'∪Y'| - rect - 1` over spherical restrictions,
/// and `reg = rect(D) + 1`.
pub fn pd_reg_spherical(d: &CellDiagram) -> Result<(usize, usize)> {
    check_diagram(d)?;
    let mut pd = 0;
    for_each_spherical(d, |size, rect| pd = pd.max(size - rect - 1))?;
    Ok((pd, d.rect()? + 1))
}

/// Total Betti numbers of a Ferrers graph's edge ideal from the closed
/// binomial formula; the resolution is 2-linear.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorsoNagel {
    pub totals: Vec<u64>,
    pub pd: usize,
}

impl CorsoNagel {
    /// Graded placement: `β_{i,i+2} = β_i`.
    pub fn table(&self) -> BettiTable {
        BettiTable::from_entries(self.totals.iter().enumerate().map(|(i, &v)| (i, i + 2, v)))
    }
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, t| acc * (n - t) as u128 / (t + 1) as u128)
}

/// `β_i = Σ_j C(λ_j + j - 1, i + 1) - C(n, i + 2)` for `0 ≤ i ≤ pd`, with
/// `pd = max_j (λ_j + j - 2)` (rows `j` counted from 1).
pub fn corso_nagel_betti(d: &CellDiagram) -> Result<CorsoNagel> {
    let lambda = d.ferrers_lambda()?;
    let n = lambda.len() as u64;
    let pd = lambda
        .iter()
        .enumerate()
        .map(|(k, &l)| l as usize + k + 1 - 2)
        .max()
        .unwrap_or(0);
    let mut totals = Vec::with_capacity(pd + 1);
    for i in 0..=pd as u64 {
        let plus: u128 = lambda
            .iter()
            .enumerate()
            .map(|(k, &l)| binomial(l as u64 + k as u64, i + 1))
            .sum();
        let minus = binomial(n, i + 2);
        let value = plus
            .checked_sub(minus)
            .ok_or_else(|| Error::Structural(format!("negative Betti number at i = {i}")))?;
        totals.push(value as u64);
    }
    if totals[0] != d.cell_count() as u64 {
        return Err(Error::Structural(String::from(
            "formula value at i = 0 differs from the cell count",
        )));
    }
    Ok(CorsoNagel { totals, pd })
}

/// Betti table of the join of the complexes, i.e. of the edge ideal of the
/// disjoint union of the graphs.
///
/// Each table is first extended to the quotient ring (`β'_{0,0} = 1`,
/// `β'_{i+1,j} = β_{i,j}`); quotient tables multiply as bigraded
/// polynomials, and the result is shifted back.
pub fn join_convolve(tables: &[BettiTable]) -> Result<BettiTable> {
    if tables.is_empty() {
        return Err(Error::EmptyInput);
    }
    if tables.iter().any(BettiTable::is_zero) {
        return Err(Error::ZeroTable);
    }
    let quotient = |t: &BettiTable| -> Vec<(usize, usize, u64)> {
        core::iter::once((0, 0, 1))
            .chain(t.entries().map(|(i, j, v)| (i + 1, j, v)))
            .collect()
    };
    let mut acc = quotient(&tables[0]);
    for t in &tables[1..] {
        let mut product = BettiTable::new();
        for &(a, b, x) in &acc {
            for (c, e, y) in quotient(t) {
                product.add(a + c, b + e, x * y);
            }
        }
        acc = product.entries().collect();
    }
    Ok(BettiTable::from_entries(
        acc.into_iter()
            .filter(|&(i, _, _)| i > 0)
            .map(|(i, j, v)| (i - 1, j, v)),
    ))
}

/// The only nonzero entries in column `pd` sit at `j = pd + reg`.
pub fn last_column_concentrated(t: &BettiTable) -> bool {
    match t.corner() {
        Some((p, j, v)) => v != 0 && t.total(p) == v && t.get(p, j) == v,
        None => false,
    }
}

/// The corner `(pd, pd + reg, value)` when it is the one and only extremal
/// Betti number.
pub fn unique_extremal_corner(t: &BettiTable) -> Option<(usize, usize, u64)> {
    let corner = t.corner()?;
    (corner.2 != 0 && t.extremal_entries() == [corner]).then_some(corner)
}

/// Shape data of one block of a closed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockShape {
    pub n: usize,
    /// Common value of `μ_1 = … = μ_s` (the first entry of the block's mu
    /// vector when the prefix is not constant).
    pub mu: u32,
    pub s: usize,
}

/// Predicted extremal Betti number of a closed graph whose blocks all have
/// regularity-3 initial ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalPrediction {
    pub applicable: bool,
    pub p: usize,
    pub r: usize,
    pub value: u64,
    pub per_block: Vec<BlockShape>,
    /// Why the prediction does not apply.
    pub reason: Option<String>,
}

/// Blocks are split off along cut vertices; every block must satisfy
/// `μ_1 = … = μ_s = μ ≥ 1` with `s ≥ 1`. Then `p = 2n - 3 - Σ(μ_i + s_i)`,
/// `r = 2m + 3` for `m` cut vertices, and the value is `Π s_i μ_i`.
pub fn extremal_betti_closed(g: &SimpleGraph, labeling: Option<&[Vertex]>) -> Result<ExtremalPrediction> {
    let analysis = analyze_closed(g, labeling)?;
    let mut per_block = Vec::new();
    let mut reason = None;
    for (k, (block, order)) in analysis.blocks.iter().zip(&analysis.block_labelings).enumerate() {
        let (mu, s) = mu_vector(block, order)?;
        per_block.push(BlockShape {
            n: block.vertex_count(),
            mu: mu[0],
            s,
        });
        if reason.is_some() {
            continue;
        }
        if s == 0 {
            reason = Some(format!("block {} is complete: block regularity 2", k + 1));
        } else if mu[..s].iter().any(|&x| x != mu[0]) {
            reason = Some(format!(
                "block {}: mu_1..mu_s is not constant, block regularity above 3",
                k + 1
            ));
        }
    }
    if let Some(reason) = reason {
        return Ok(ExtremalPrediction {
            applicable: false,
            p: 0,
            r: 0,
            value: 0,
            per_block,
            reason: Some(reason),
        });
    }
    let n = g.vertex_count();
    let m = analysis.cut_vertices.len();
    let drop: usize = per_block.iter().map(|b| b.mu as usize + b.s).sum();
    let value = per_block.iter().map(|b| b.s as u64 * b.mu as u64).product();
    let p = (2 * n)
        .checked_sub(3 + drop)
        .ok_or_else(|| Error::Structural(String::from("predicted projective dimension is negative")))?;
    Ok(ExtremalPrediction {
        applicable: true,
        p,
        r: 2 * m + 3,
        value,
        per_block,
        reason: None,
    })
}

/// The graphs `H_i` of the initial ideals of the blocks, relabeled so they
/// are pairwise disjoint (block starting at label `a` is shifted by `a - 1`).
pub fn initial_block_graphs(g: &SimpleGraph, labeling: Option<&[Vertex]>) -> Result<Vec<SimpleGraph>> {
    let analysis = analyze_closed(g, labeling)?;
    let mut offset = 0u32;
    let mut out = Vec::new();
    for (block, order) in analysis.blocks.iter().zip(&analysis.block_labelings) {
        out.push(initial_closed_graph(block, order)?.shift_labels(offset));
        offset += block.vertex_count() as u32 - 1;
    }
    Ok(out)
}

/// Betti table of the initial ideal of the binomial edge ideal of a
/// connected closed graph.
///
/// Computed as the Hochster table of the disjoint union of the block graphs
/// and, independently, as the join of the blocks' tables; the two must agree.
pub fn initial_ideal_betti(g: &SimpleGraph, labeling: Option<&[Vertex]>, field: Field) -> Result<BettiTable> {
    let parts = initial_block_graphs(g, labeling)?;
    let mut union = parts[0].clone();
    for h in &parts[1..] {
        union = union.disjoint_union(h)?;
    }
    let whole = hochster_betti(&union, field)?;
    let per_block = parts
        .iter()
        .map(|h| hochster_betti(h, field))
        .collect::<Result<Vec<_>>>()?;
    if join_convolve(&per_block)? != whole {
        return Err(Error::Structural(String::from(
            "join of block tables differs from the union's table",
        )));
    }
    Ok(whole)
}
