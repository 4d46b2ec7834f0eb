//! Simplicial complexes and exact reduced homology.
//!
//! Faces are bitmasks over vertex positions. The reduced chain complex
//! includes the empty face in degree −1, so `H̃_{-1}` is 1 exactly for the
//! complex `{∅}`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::graph::{SimpleGraph, Vertex};
use crate::rank::{rank_gf2, rank_rational};
use crate::{Error, Result};

/// Homology computations walk every face; beyond this the face count is
/// no longer desk scale.
pub const MAX_HOMOLOGY_VERTICES: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Gf2,
    Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Faces {
    /// Independent sets of a graph with these adjacency masks.
    Independence(Vec<u64>),
    /// Explicit downward-closed family; empty means the void complex.
    Explicit(BTreeSet<u64>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<Vertex>,
    /// Vertex positions currently in play; restriction shrinks this.
    ground: u64,
    faces: Faces,
}

/// The independence complex of `g`: faces are the independent sets.
pub fn independence_complex(g: &SimpleGraph) -> SimplicialComplex {
    let adj = (0..g.vertex_count()).map(|i| g.neighbors(i)).collect();
    SimplicialComplex {
        labels: g.vertices().to_vec(),
        ground: g.full_mask(),
        faces: Faces::Independence(adj),
    }
}

impl SimplicialComplex {
    /// Complex generated by `facets` on the vertex set `labels`. Vertices
    /// that lie in no facet are allowed (they are non-faces). With no
    /// facets at all the result is `{∅}`.
    pub fn from_facets(labels: Vec<Vertex>, facets: &[Vec<Vertex>]) -> Result<Self> {
        if labels.len() > 64 {
            return Err(Error::TooLarge {
                what: "complex",
                got: labels.len(),
                limit: 64,
            });
        }
        let mut faces = BTreeSet::new();
        faces.insert(0u64);
        for facet in facets {
            let mut mask = 0u64;
            for v in facet {
                let p = labels
                    .iter()
                    .position(|w| w == v)
                    .ok_or_else(|| Error::UnknownLabel(format!("{v}")))?;
                mask |= 1 << p;
            }
            // all subsets of the facet
            let mut sub = mask;
            loop {
                faces.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
        let ground = if labels.len() == 64 {
            u64::MAX
        } else {
            (1u64 << labels.len()) - 1
        };
        Ok(SimplicialComplex {
            labels,
            ground,
            faces: Faces::Explicit(faces),
        })
    }

    /// The complex with no faces at all, not even `∅`.
    pub fn void(labels: Vec<Vertex>) -> Self {
        let ground = if labels.len() >= 64 {
            u64::MAX
        } else {
            (1u64 << labels.len()) - 1
        };
        SimplicialComplex {
            labels,
            ground,
            faces: Faces::Explicit(BTreeSet::new()),
        }
    }

    /// Labels of the vertices in the current ground set.
    pub fn vertices(&self) -> Vec<Vertex> {
        (0..self.labels.len())
            .filter(|&i| self.ground >> i & 1 == 1)
            .map(|i| self.labels[i])
            .collect()
    }

    pub fn ground_mask(&self) -> u64 {
        self.ground
    }

    pub fn vertex_count(&self) -> usize {
        self.ground.count_ones() as usize
    }

    /// `Δ[W]`: faces contained in `w`.
    pub fn restrict(&self, w: &[Vertex]) -> Result<Self> {
        let mut mask = 0u64;
        for v in w {
            let p = self
                .labels
                .iter()
                .position(|x| x == v)
                .filter(|&p| self.ground >> p & 1 == 1)
                .ok_or_else(|| Error::UnknownLabel(format!("{v}")))?;
            mask |= 1 << p;
        }
        Ok(self.restrict_mask(mask))
    }

    /// Restriction to the positions in `mask` (intersected with the ground set).
    pub fn restrict_mask(&self, mask: u64) -> Self {
        SimplicialComplex {
            labels: self.labels.clone(),
            ground: self.ground & mask,
            faces: self.faces.clone(),
        }
    }

    pub fn is_void(&self) -> bool {
        matches!(&self.faces, Faces::Explicit(f) if f.is_empty())
    }

    pub fn contains(&self, face: u64) -> bool {
        if face & !self.ground != 0 {
            return false;
        }
        match &self.faces {
            Faces::Independence(adj) => {
                let mut m = face;
                while m != 0 {
                    let i = m.trailing_zeros() as usize;
                    m &= m - 1;
                    if adj[i] & face != 0 {
                        return false;
                    }
                }
                true
            }
            Faces::Explicit(f) => f.contains(&face),
        }
    }

    /// A vertex of the ground set joinable to every face, making the
    /// complex a cone (hence acyclic). Only detected for independence
    /// complexes, where it is a vertex with no neighbor in the ground set.
    pub fn cone_apex(&self) -> Option<Vertex> {
        match &self.faces {
            Faces::Independence(adj) => {
                let mut m = self.ground;
                while m != 0 {
                    let i = m.trailing_zeros() as usize;
                    m &= m - 1;
                    if adj[i] & self.ground == 0 {
                        return Some(self.labels[i]);
                    }
                }
                None
            }
            Faces::Explicit(_) => None,
        }
    }

    /// Faces grouped by dimension: entry `d + 1` holds the `d`-faces, each
    /// list in lexicographic order of sorted vertex positions.
    pub fn faces_by_dimension(&self) -> Vec<Vec<u64>> {
        let mut out: Vec<Vec<u64>> = Vec::new();
        let mut push = |f: u64| {
            let k = f.count_ones() as usize;
            if out.len() <= k {
                out.resize(k + 1, Vec::new());
            }
            out[k].push(f);
        };
        match &self.faces {
            Faces::Independence(adj) => {
                fn walk(adj: &[u64], face: u64, cand: u64, push: &mut dyn FnMut(u64)) {
                    push(face);
                    let mut c = cand;
                    while c != 0 {
                        let i = c.trailing_zeros() as usize;
                        c &= c - 1;
                        walk(adj, face | 1 << i, c & !adj[i], push);
                    }
                }
                walk(adj, 0, self.ground, &mut push);
            }
            Faces::Explicit(f) => f.iter().filter(|&&x| x & !self.ground == 0).for_each(|&x| push(x)),
        }
        for level in &mut out {
            // A precedes B lexicographically iff min(A xor B) lies in A,
            // i.e. iff A's bit-reversal is larger.
            level.sort_by_key(|f| core::cmp::Reverse(f.reverse_bits()));
        }
        out
    }

    /// Number of faces of each dimension, starting at dimension −1.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dimension().iter().map(Vec::len).collect()
    }
}

/// Matrix of the boundary map from `p`-faces to `(p-1)`-faces, stored by
/// column. `∂_0` sends every vertex to the empty face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub rows: usize,
    pub cols: usize,
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl BoundaryMatrix {
    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = alloc::vec![alloc::vec![0; self.cols]; self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, x) in col {
                m[r][c] = x;
            }
        }
        m
    }

    pub fn rank(&self, field: Field) -> usize {
        match field {
            Field::Gf2 => rank_gf2(self.rows, &self.columns),
            Field::Rational => rank_rational(&self.columns),
        }
    }
}

fn boundary_from_levels(lower: &[u64], upper: &[u64], field: Field) -> BoundaryMatrix {
    let columns = upper
        .iter()
        .map(|&face| {
            let mut col: Vec<(usize, i64)> = Vec::new();
            let mut rest = face;
            let mut k = 0;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest &= rest - 1;
                let sub = face & !bit;
                let row = lower
                    .binary_search_by_key(&core::cmp::Reverse(sub.reverse_bits()), |f| {
                        core::cmp::Reverse(f.reverse_bits())
                    })
                    .expect("complexes are closed under taking subsets");
                let sign = match field {
                    Field::Gf2 => 1,
                    Field::Rational => {
                        if k % 2 == 0 {
                            1
                        } else {
                            -1
                        }
                    }
                };
                col.push((row, sign));
                k += 1;
            }
            col.sort_unstable();
            col
        })
        .collect();
    BoundaryMatrix {
        rows: lower.len(),
        cols: upper.len(),
        columns,
    }
}

pub fn boundary_matrix(complex: &SimplicialComplex, p: usize, field: Field) -> Result<BoundaryMatrix> {
    check_size(complex)?;
    let levels = complex.faces_by_dimension();
    let empty = Vec::new();
    let lower = levels.get(p).unwrap_or(&empty);
    let upper = levels.get(p + 1).unwrap_or(&empty);
    Ok(boundary_from_levels(lower, upper, field))
}

fn check_size(complex: &SimplicialComplex) -> Result<()> {
    let n = complex.vertex_count();
    if n > MAX_HOMOLOGY_VERTICES {
        return Err(Error::TooLarge {
            what: "complex",
            got: n,
            limit: MAX_HOMOLOGY_VERTICES,
        });
    }
    Ok(())
}

/// Reduced homology dimensions `dim H̃_p` for `p ≥ −1`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DimVector {
    /// `dims[k]` is `dim H̃_{k-1}`.
    dims: Vec<u64>,
}

impl DimVector {
    pub fn get(&self, p: isize) -> u64 {
        usize::try_from(p + 1)
            .ok()
            .and_then(|k| self.dims.get(k).copied())
            .unwrap_or(0)
    }

    /// Nonzero entries as `(p, dim)`.
    pub fn nonzero(&self) -> impl Iterator<Item = (isize, u64)> + '_ {
        self.dims
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != 0)
            .map(|(k, &d)| (k as isize - 1, d))
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// `Σ (-1)^p dim H̃_p`.
    pub fn euler_characteristic(&self) -> i64 {
        self.nonzero()
            .map(|(p, d)| if p.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

pub fn reduced_homology_dims(complex: &SimplicialComplex, field: Field) -> Result<DimVector> {
    check_size(complex)?;
    if complex.is_void() {
        return Ok(DimVector::default());
    }
    if complex.cone_apex().is_some() {
        return Ok(DimVector::default());
    }
    let levels = complex.faces_by_dimension();
    // ranks[k] = rank of the map out of level k (dimension k-1)
    let mut ranks = alloc::vec![0usize; levels.len() + 1];
    for k in 1..levels.len() {
        ranks[k] = boundary_from_levels(&levels[k - 1], &levels[k], field).rank(field);
    }
    let dims = (0..levels.len())
        .map(|k| (levels[k].len() - ranks[k] - ranks[k + 1]) as u64)
        .collect();
    Ok(DimVector { dims })
}
