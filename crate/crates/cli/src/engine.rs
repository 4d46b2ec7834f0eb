use rayon::prelude::*;
use rayon::ThreadPool;
use skewbetti_core::betti::{hochster_contribution, nth_subset, validate_hochster_input, BettiTable};
use skewbetti_core::graph::SimpleGraph;
use skewbetti_core::homology::{independence_complex, Field};

use crate::input::Invalid;

/// Homology engine with an explicit size limit and optional worker pool.
pub struct Engine {
    pub max_vertices: usize,
    pool: Option<ThreadPool>,
}

impl Engine {
    /// `threads == 1` evaluates sequentially; `0` uses every core.
    pub fn new(max_vertices: usize, threads: usize) -> anyhow::Result<Self> {
        let pool = match threads {
            1 => None,
            t => Some(rayon::ThreadPoolBuilder::new().num_threads(t).build()?),
        };
        Ok(Engine { max_vertices, pool })
    }

    pub fn check_size(&self, what: &str, vertices: usize) -> Result<(), Invalid> {
        if vertices > self.max_vertices {
            return Err(Invalid(format!(
                "{what} has {vertices} vertices, above --max-vertices {}",
                self.max_vertices
            )));
        }
        Ok(())
    }

    /// Hochster table of `I(G)`. The sum over vertex subsets is order
    /// independent, so the parallel result equals the sequential one.
    pub fn hochster(&self, g: &SimpleGraph, field: Field) -> anyhow::Result<BettiTable> {
        self.check_size("graph", g.vertex_count())?;
        validate_hochster_input(g)?;
        let complex = independence_complex(g);
        let ground = complex.ground_mask();
        let subsets = 1u64 << g.vertex_count();
        let contribution = |k: u64| hochster_contribution(&complex, nth_subset(ground, k), field);
        let table = match &self.pool {
            None => {
                let mut t = BettiTable::new();
                for k in 0..subsets {
                    t.merge(&contribution(k)?);
                }
                t
            }
            Some(pool) => pool.install(|| {
                (0..subsets)
                    .into_par_iter()
                    .map(contribution)
                    .try_reduce(BettiTable::new, |mut a, b| {
                        a.merge(&b);
                        Ok(a)
                    })
            })?,
        };
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_matches_sequential() {
        let edges: Vec<_> = (1..9).map(|i| (i, i + 1)).chain([(1, 9), (2, 6)]).collect();
        let g = SimpleGraph::from_int_edges(&edges).unwrap();
        let seq = Engine::new(14, 1).unwrap().hochster(&g, Field::Rational).unwrap();
        let par = Engine::new(14, 4).unwrap().hochster(&g, Field::Rational).unwrap();
        assert_eq!(seq, par);
        assert_eq!(seq, skewbetti_core::betti::hochster_betti(&g, Field::Rational).unwrap());
    }

    #[test]
    fn size_limit_is_explicit() {
        let edges: Vec<_> = (1..6).map(|i| (i, i + 1)).collect();
        let g = SimpleGraph::from_int_edges(&edges).unwrap();
        let err = Engine::new(5, 1).unwrap().hochster(&g, Field::Gf2).unwrap_err();
        assert_eq!(
            err.downcast_ref::<Invalid>().unwrap().0,
            "graph has 6 vertices, above --max-vertices 5"
        );
    }
}
