use std::collections::BTreeSet;

use proptest::prelude::*;
use skewbetti_core::betti::{
    corso_nagel_betti, hochster_betti, join_convolve, last_column_concentrated, nagel_reiner_betti, pd_reg_spherical,
    stanley_reisner_betti, BettiTable,
};
use skewbetti_core::diagram::CellDiagram;
use skewbetti_core::graph::{
    blocks, cut_vertices, find_closed_labeling, graph_of_diagram, induced_matching_number, neighborhoods_are_intervals,
    SimpleGraph, Vertex,
};
use skewbetti_core::homology::{
    boundary_matrix, independence_complex, reduced_homology_dims, Field, SimplicialComplex,
};

fn skew_shape(max_rows: usize, max_cols: u32) -> impl Strategy<Value = (Vec<u32>, Vec<u32>)> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(n, m)| {
        (prop::collection::vec(1..=m, n), prop::collection::vec(0..=m, n)).prop_map(move |(mut lambda, raw)| {
            lambda.sort_unstable_by(|a, b| b.cmp(a));
            lambda[0] = m;
            let mut mu = Vec::with_capacity(n);
            for i in 0..n {
                let cap = if i == 0 { lambda[0] } else { mu[i - 1] };
                mu.push(raw[i].min(lambda[i]).min(cap));
            }
            (lambda, mu)
        })
    })
}

fn diagram(max_rows: usize, max_cols: u32) -> impl Strategy<Value = CellDiagram> {
    skew_shape(max_rows, max_cols)
        .prop_map(|(l, u)| CellDiagram::new_skew_ferrers(&l, &u).unwrap())
        .prop_filter("needs a cell", |d| !d.is_degenerate())
}

fn small_graph(max_n: u32) -> impl Strategy<Value = SimpleGraph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(u32, u32)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
        prop::collection::vec(any::<bool>(), pairs.len()).prop_filter_map("needs an edge", move |keep| {
            let edges: Vec<_> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e).collect();
            if edges.is_empty() {
                return None;
            }
            let verts: Vec<Vertex> = (1..=n).map(Vertex::Int).collect();
            let edges: Vec<_> = edges.iter().map(|&(a, b)| (Vertex::Int(a), Vertex::Int(b))).collect();
            Some(SimpleGraph::new(verts, &edges).unwrap())
        })
    })
}

fn subset_labels(labels: &[u32], mask: u64) -> Vec<u32> {
    labels
        .iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, &l)| l)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn decomposition_partitions_lines_and_cells(d in diagram(6, 6)) {
        let dec = d.rectangular_decomposition().unwrap();
        let mut rows: Vec<u32> = dec.pieces.iter().flat_map(|p| p.rows.clone()).collect();
        let mut cols: Vec<u32> = dec.pieces.iter().flat_map(|p| p.cols.clone()).collect();
        for e in &dec.empties {
            match e.kind {
                skewbetti_core::diagram::EmptyKind::Rows => rows.extend(&e.labels),
                skewbetti_core::diagram::EmptyKind::Cols => cols.extend(&e.labels),
            }
        }
        rows.sort_unstable();
        cols.sort_unstable();
        prop_assert_eq!(&rows[..], d.rows());
        prop_assert_eq!(&cols[..], d.cols());
        let mut cells: Vec<_> = dec.pieces.iter().flat_map(|p| p.cells.clone()).collect();
        cells.sort_unstable();
        prop_assert_eq!(cells, d.cells());
    }

    #[test]
    fn rect_equals_induced_matching_number(d in diagram(6, 6), rmask in any::<u64>(), cmask in any::<u64>()) {
        let sub = d.restrict(&subset_labels(d.rows(), rmask), &subset_labels(d.cols(), cmask)).unwrap();
        prop_assert_eq!(sub.rect().unwrap(), induced_matching_number(&graph_of_diagram(&sub)).unwrap());
    }

    #[test]
    fn restriction_is_idempotent(d in diagram(6, 6), rmask in any::<u64>(), cmask in any::<u64>()) {
        let rows = subset_labels(d.rows(), rmask);
        let cols = subset_labels(d.cols(), cmask);
        let once = d.restrict(&rows, &cols).unwrap();
        prop_assert!(once.check_staircase().is_ok());
        prop_assert_eq!(once.restrict(&rows, &cols).unwrap(), once);
    }

    /// Restrictions never exceed the rectangularity of the whole diagram.
    #[test]
    fn spherical_restrictions_do_not_exceed_rect(d in diagram(4, 4)) {
        let full = d.rect().unwrap();
        for rmask in 1u64..1 << d.rows().len() {
            for cmask in 1u64..1 << d.cols().len() {
                let sub = d.restrict(&subset_labels(d.rows(), rmask), &subset_labels(d.cols(), cmask)).unwrap();
                prop_assert!(sub.rect().unwrap() <= full);
            }
        }
    }

    #[test]
    fn boundary_squares_to_zero(g in small_graph(7)) {
        let c = independence_complex(&g);
        let top = c.f_vector().len();
        for field in [Field::Gf2, Field::Rational] {
            for p in 0..top.saturating_sub(1) {
                let d1 = boundary_matrix(&c, p, field).unwrap().to_dense();
                let d2 = boundary_matrix(&c, p + 1, field).unwrap().to_dense();
                for row in &d1 {
                    for k in 0..d2.first().map_or(0, Vec::len) {
                        let s: i64 = row.iter().zip(&d2).map(|(a, col)| a * col[k]).sum();
                        let s = if field == Field::Gf2 { s.rem_euclid(2) } else { s };
                        prop_assert_eq!(s, 0);
                    }
                }
            }
        }
    }

    #[test]
    fn euler_characteristic_matches_face_counts(g in small_graph(8)) {
        let c = independence_complex(&g);
        let f = c.f_vector();
        // f[k] counts faces of dimension k-1, ∅ included
        let alternating: i64 = f.iter().enumerate().map(|(k, &x)| if k % 2 == 1 { x as i64 } else { -(x as i64) }).sum();
        for field in [Field::Gf2, Field::Rational] {
            let h = reduced_homology_dims(&c, field).unwrap();
            prop_assert_eq!(h.euler_characteristic(), alternating);
        }
    }

    #[test]
    fn isolated_vertex_kills_homology(g in small_graph(7)) {
        let extra = Vertex::Int(100);
        let mut verts = g.vertices().to_vec();
        verts.push(extra);
        let coned = SimpleGraph::new(verts, &g.edges()).unwrap();
        let h = reduced_homology_dims(&independence_complex(&coned), Field::Rational).unwrap();
        prop_assert!(h.is_zero());
    }

    #[test]
    fn skew_ferrers_routes_agree(d in diagram(4, 4)) {
        let g = graph_of_diagram(&d);
        let gf2 = hochster_betti(&g, Field::Gf2).unwrap();
        let q = hochster_betti(&g, Field::Rational).unwrap();
        let nr = nagel_reiner_betti(&d).unwrap();
        prop_assert_eq!(&gf2, &q);
        prop_assert_eq!(&gf2, &nr);
        let (pd, reg) = pd_reg_spherical(&d).unwrap();
        prop_assert_eq!((Some(pd), Some(reg)), (gf2.pd(), gf2.reg()));
    }

    #[test]
    fn ferrers_formula_matches_oracle((lambda, _) in skew_shape(4, 4)) {
        let d = CellDiagram::ferrers(&lambda).unwrap();
        let cn = corso_nagel_betti(&d).unwrap();
        let oracle = hochster_betti(&graph_of_diagram(&d), Field::Gf2).unwrap();
        prop_assert!(oracle.is_linear(2));
        prop_assert!(last_column_concentrated(&oracle));
        prop_assert_eq!(cn.totals, oracle.totals());
        prop_assert_eq!(Some(cn.pd), oracle.pd());
    }

    #[test]
    fn induced_subgraphs_do_not_raise_pd(g in small_graph(8), keep in any::<u64>()) {
        let sub = g.induced_by_mask(keep & g.full_mask());
        prop_assume!(sub.edge_count() > 0);
        let full = hochster_betti(&g, Field::Gf2).unwrap();
        let part = hochster_betti(&sub, Field::Gf2).unwrap();
        prop_assert!(part.pd() <= full.pd());
        for (i, j, v) in part.entries() {
            prop_assert!(full.get(i, j) >= v);
        }
    }

    /// Adding `s` fresh variables to the ideal shifts the top row of the
    /// table by `(s, s)`.
    #[test]
    fn adjoining_variables_shifts_last_column(g in small_graph(6), s in 1usize..=3) {
        let base = hochster_betti(&g, Field::Gf2).unwrap();
        let mut labels = g.vertices().to_vec();
        labels.extend((0..s as u32).map(|k| Vertex::Int(200 + k)));
        // the new vertices are non-faces: generators of the ideal
        let faces: Vec<Vec<Vertex>> = maximal_independent_sets(&g);
        let with_vars = SimplicialComplex::from_facets(labels, &faces).unwrap();
        let shifted = stanley_reisner_betti(&with_vars, Field::Gf2).unwrap();
        let p = base.pd().unwrap() + s;
        prop_assert_eq!(shifted.pd(), Some(p));
        let top_row: BTreeSet<usize> = shifted.entries().filter(|e| e.0 == p).map(|e| e.1).collect();
        for j in top_row.iter().copied().chain(base.entries().map(|e| e.1 + s)) {
            prop_assert_eq!(shifted.get(p, j), base.get(p - s, j - s));
        }
    }

    #[test]
    fn disjoint_union_is_join(a in diagram(3, 3), b in diagram(3, 3)) {
        let ga = graph_of_diagram(&a);
        let gb = graph_of_diagram(&b).shift_labels(10);
        let ta = hochster_betti(&ga, Field::Gf2).unwrap();
        let tb = hochster_betti(&gb, Field::Gf2).unwrap();
        let union = hochster_betti(&ga.disjoint_union(&gb).unwrap(), Field::Gf2).unwrap();
        let joined = join_convolve(&[ta.clone(), tb.clone()]).unwrap();
        prop_assert_eq!(&union, &joined);
        let (pa, ra) = (ta.pd().unwrap(), ta.reg().unwrap());
        let (pb, rb) = (tb.pd().unwrap(), tb.reg().unwrap());
        prop_assert_eq!(joined.pd(), Some(pa + pb + 1));
        prop_assert_eq!(joined.reg(), Some(ra + rb - 1));
        prop_assert_eq!(
            joined.get(pa + pb + 1, pa + pb + 1 + ra + rb - 1),
            ta.get(pa, pa + ra) * tb.get(pb, pb + rb)
        );
    }

    #[test]
    fn closed_labelings_have_interval_neighborhoods(g in small_graph(7)) {
        // components of a disconnected graph may interleave
        prop_assume!(g.is_connected());
        if let Some(l) = find_closed_labeling(&g).unwrap() {
            prop_assert!(neighborhoods_are_intervals(&g, &l).unwrap());
        }
    }

    #[test]
    fn blocks_cover_edges_and_meet_at_cut_vertices(g in small_graph(8)) {
        prop_assume!(g.is_connected());
        let bs = blocks(&g).unwrap();
        let mut edges: Vec<_> = bs.iter().flat_map(|b| b.edges()).collect();
        edges.sort();
        prop_assert_eq!(edges, g.edges());
        let cuts = cut_vertices(&g);
        for (k, a) in bs.iter().enumerate() {
            for b in &bs[k + 1..] {
                let shared: Vec<_> = a.vertices().iter().filter(|v| b.vertices().contains(v)).collect();
                prop_assert!(shared.len() <= 1);
                prop_assert!(shared.iter().all(|v| cuts.contains(v)));
            }
        }
    }
}

fn maximal_independent_sets(g: &SimpleGraph) -> Vec<Vec<Vertex>> {
    let n = g.vertex_count();
    (0u64..1 << n)
        .filter(|&s| (0..n).all(|i| s >> i & 1 == 0 || g.neighbors(i) & s == 0))
        .map(|s| (0..n).filter(|&i| s >> i & 1 == 1).map(|i| g.vertices()[i]).collect())
        .collect()
}

#[test]
fn zero_table_has_no_shape() {
    let t = BettiTable::new();
    assert!(t.totals().is_empty());
    assert_eq!(t.corner(), None);
}

/// The spider tree y2-{x1,x2,x3}, x1-y1, x3-y3. The star on y2 and the path
/// y1-x1-y2-x3-y3 are both spherical restrictions attaining pd = 2, with
/// rect 1 and 2, so the last column meets two degrees.
#[test]
fn spider_last_column_meets_two_degrees() {
    let d = CellDiagram::new_skew_ferrers(&[3, 2, 2], &[1, 1, 0]).unwrap();
    assert_eq!(d.cells(), [(1, 1), (1, 2), (2, 2), (3, 2), (3, 3)]);
    let t = hochster_betti(&graph_of_diagram(&d), Field::Rational).unwrap();
    assert_eq!(t, nagel_reiner_betti(&d).unwrap());
    assert_eq!((t.pd(), t.reg()), (Some(2), Some(3)));
    assert_eq!((t.get(2, 4), t.get(2, 5)), (1, 1));
    assert!(!last_column_concentrated(&t));

    let star = d.restrict(&[1, 2, 3], &[2]).unwrap();
    let path = d.restrict(&[1, 3], &[1, 2, 3]).unwrap();
    for (sub, rect) in [(star, 1), (path, 2)] {
        let dec = sub.rectangular_decomposition().unwrap();
        assert!(dec.is_spherical());
        assert_eq!(dec.rect(), rect);
        assert_eq!(sub.rows().len() + sub.cols().len() - rect - 1, 2);
    }
}
