//! Skew Ferrers diagrams and their rectangular decomposition.
//!
//! A diagram is a staircase of cells in a row × column grid. Rows and
//! columns carry labels (their 1-based index in the diagram they were first
//! built from), and restriction keeps those labels, so a sub-diagram can
//! always be traced back to its parent.
//!
//! Row `i` of the diagram built from `(lambda, mu)` with `m = lambda[0]`
//! columns occupies columns `m + 1 - lambda[i] ..= m - mu[i]`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A staircase-shaped set of cells.
///
/// Each nonempty row is a contiguous run of columns, and both endpoints of
/// those runs are nondecreasing down the rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CellDiagram {
    rows: Vec<u32>,
    cols: Vec<u32>,
    /// Per row: inclusive `(first, last)` positions into `cols`.
    intervals: Vec<Option<(usize, usize)>>,
}

impl CellDiagram {
    /// Builds the skew Ferrers diagram for `(lambda, mu)`.
    ///
    /// The number of columns is `lambda[0]`. Rows with `lambda[i] == mu[i]`
    /// are kept as empty rows.
    pub fn new_skew_ferrers(lambda: &[u32], mu: &[u32]) -> Result<Self> {
        if lambda.is_empty() {
            return Err(Error::EmptyShape);
        }
        if lambda.len() != mu.len() {
            return Err(Error::LengthMismatch {
                lambda: lambda.len(),
                mu: mu.len(),
            });
        }
        for (i, &l) in lambda.iter().enumerate() {
            if l == 0 {
                return Err(Error::NonPositiveLambda { index: i + 1 });
            }
            if i > 0 && l > lambda[i - 1] {
                return Err(Error::NotNonincreasing {
                    which: "lambda",
                    index: i + 1,
                });
            }
        }
        for (i, &u) in mu.iter().enumerate() {
            if i > 0 && u > mu[i - 1] {
                return Err(Error::NotNonincreasing {
                    which: "mu",
                    index: i + 1,
                });
            }
            if u > lambda[i] {
                return Err(Error::MuExceedsLambda {
                    index: i + 1,
                    lambda: lambda[i],
                    mu: u,
                });
            }
        }
        let m = lambda[0] as usize;
        let intervals = lambda
            .iter()
            .zip(mu)
            .map(|(&l, &u)| {
                // columns m+1-l ..= m-u, as 0-based positions
                (l > u).then(|| (m - l as usize, m - u as usize - 1))
            })
            .collect();
        let diagram = CellDiagram {
            rows: (1..=lambda.len() as u32).collect(),
            cols: (1..=m as u32).collect(),
            intervals,
        };
        debug_assert!(diagram.check_staircase().is_ok());
        Ok(diagram)
    }

    /// Shorthand for a Ferrers diagram (`mu = 0`).
    pub fn ferrers(lambda: &[u32]) -> Result<Self> {
        Self::new_skew_ferrers(lambda, &alloc::vec![0; lambda.len()])
    }

    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    pub fn cols(&self) -> &[u32] {
        &self.cols
    }

    /// Column labels covered by the row with label `row`, if it has cells.
    pub fn row_cells(&self, row: u32) -> Option<&[u32]> {
        let r = self.rows.iter().position(|&x| x == row)?;
        self.intervals[r].map(|(a, b)| &self.cols[a..=b])
    }

    /// Inclusive column-position interval of the row at position `r`.
    pub fn row_interval(&self, r: usize) -> Option<(usize, usize)> {
        self.intervals[r]
    }

    pub fn contains(&self, row: u32, col: u32) -> bool {
        let (Some(r), Some(c)) = (self.row_pos(row), self.col_pos(col)) else {
            return false;
        };
        self.has_cell(r, c)
    }

    /// All cells as `(row label, column label)`, row-major.
    pub fn cells(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.cell_count());
        for (r, iv) in self.intervals.iter().enumerate() {
            if let Some((a, b)) = *iv {
                out.extend(self.cols[a..=b].iter().map(|&c| (self.rows[r], c)));
            }
        }
        out
    }

    pub fn cell_count(&self) -> usize {
        self.intervals.iter().flatten().map(|&(a, b)| b - a + 1).sum()
    }

    /// True when the diagram has no cells at all.
    pub fn is_degenerate(&self) -> bool {
        self.intervals.iter().all(Option::is_none)
    }

    /// Nonempty rows' intervals all end at the last column and no row is
    /// empty: an honest (unskewed) Ferrers shape.
    pub fn is_ferrers(&self) -> bool {
        let last = self.cols.len().wrapping_sub(1);
        !self.rows.is_empty() && self.intervals.iter().all(|iv| matches!(iv, Some((_, b)) if *b == last))
    }

    /// Row lengths of a Ferrers shape, top to bottom.
    pub fn ferrers_lambda(&self) -> Result<Vec<u32>> {
        if !self.is_ferrers() {
            return Err(Error::SkewShape);
        }
        Ok(self
            .intervals
            .iter()
            .flatten()
            .map(|&(a, b)| (b - a + 1) as u32)
            .collect())
    }

    /// Induced sub-diagram on the given row and column labels.
    ///
    /// Labels are kept, and the original row and column order is preserved
    /// regardless of the order the labels are passed in.
    pub fn restrict(&self, rows: &[u32], cols: &[u32]) -> Result<Self> {
        let mut row_keep = alloc::vec![false; self.rows.len()];
        for &r in rows {
            let p = self.row_pos(r).ok_or_else(|| Error::UnknownLabel(format!("x{r}")))?;
            row_keep[p] = true;
        }
        let mut col_keep = alloc::vec![false; self.cols.len()];
        for &c in cols {
            let p = self.col_pos(c).ok_or_else(|| Error::UnknownLabel(format!("y{c}")))?;
            col_keep[p] = true;
        }
        let restricted = self.restrict_by(&row_keep, &col_keep);
        restricted.check_staircase()?;
        Ok(restricted)
    }

    /// Restriction by position masks; `rows`/`cols` are bitmasks over
    /// positions (bit `k` keeps position `k`).
    pub(crate) fn restrict_masks(&self, rows: u64, cols: u64) -> Self {
        let row_keep: Vec<bool> = (0..self.rows.len()).map(|k| rows >> k & 1 == 1).collect();
        let col_keep: Vec<bool> = (0..self.cols.len()).map(|k| cols >> k & 1 == 1).collect();
        self.restrict_by(&row_keep, &col_keep)
    }

    fn restrict_by(&self, row_keep: &[bool], col_keep: &[bool]) -> Self {
        // new position of every old column position that survives
        let mut new_pos = alloc::vec![usize::MAX; self.cols.len()];
        let mut cols = Vec::new();
        for (p, &keep) in col_keep.iter().enumerate() {
            if keep {
                new_pos[p] = cols.len();
                cols.push(self.cols[p]);
            }
        }
        let mut rows = Vec::new();
        let mut intervals = Vec::new();
        for (r, &keep) in row_keep.iter().enumerate() {
            if !keep {
                continue;
            }
            rows.push(self.rows[r]);
            let iv = self.intervals[r].and_then(|(a, b)| {
                let mut kept = (a..=b).filter(|&p| col_keep[p]).map(|p| new_pos[p]);
                let first = kept.next()?;
                let last = kept.next_back().unwrap_or(first);
                Some((first, last))
            });
            intervals.push(iv);
        }
        CellDiagram { rows, cols, intervals }
    }

    /// Verifies the staircase invariants.
    pub fn check_staircase(&self) -> Result<()> {
        let mut prev: Option<(usize, usize)> = None;
        for (r, iv) in self.intervals.iter().enumerate() {
            let Some((a, b)) = *iv else { continue };
            if a > b || b >= self.cols.len() {
                return Err(Error::Structural(format!(
                    "row x{} has a malformed interval",
                    self.rows[r]
                )));
            }
            if let Some((pa, pb)) = prev {
                if a < pa || b < pb {
                    return Err(Error::Structural(format!(
                        "row x{} breaks the staircase shape",
                        self.rows[r]
                    )));
                }
            }
            prev = Some((a, b));
        }
        Ok(())
    }

    pub fn rectangular_decomposition(&self) -> Result<RectangularDecomposition> {
        decompose(self)
    }

    /// Number of pieces in the rectangular decomposition.
    pub fn rect(&self) -> Result<usize> {
        Ok(self.rectangular_decomposition()?.rect())
    }

    pub fn is_spherical(&self) -> Result<bool> {
        Ok(self.rectangular_decomposition()?.is_spherical())
    }

    fn row_pos(&self, label: u32) -> Option<usize> {
        self.rows.iter().position(|&x| x == label)
    }

    fn col_pos(&self, label: u32) -> Option<usize> {
        self.cols.iter().position(|&x| x == label)
    }

    pub(crate) fn has_cell(&self, r: usize, c: usize) -> bool {
        matches!(self.intervals[r], Some((a, b)) if a <= c && c <= b)
    }
}

impl fmt::Display for CellDiagram {
    /// One line per row, `#` for a cell and `.` otherwise, columns in label
    /// order left to right.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, &label) in self.rows.iter().enumerate() {
            write!(f, "x{label:<3}")?;
            for c in 0..self.cols.len() {
                f.write_str(if self.has_cell(r, c) { " #" } else { " ." })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// One piece of a rectangular decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub top_cell: (u32, u32),
    /// Rows meeting the top cell's column.
    pub rows: Vec<u32>,
    /// Columns meeting the top cell's row.
    pub cols: Vec<u32>,
    /// Every remaining cell lying in one of `rows` or one of `cols`.
    pub cells: Vec<(u32, u32)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EmptyKind {
    Rows,
    Cols,
}

/// A block of rows (or columns) left without cells during decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmptyRectangle {
    pub kind: EmptyKind,
    pub labels: Vec<u32>,
}

impl fmt::Display for EmptyRectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.kind {
            EmptyKind::Rows => 'x',
            EmptyKind::Cols => 'y',
        };
        f.write_str("{")?;
        for (k, l) in self.labels.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{prefix}{l}")?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RectangularDecomposition {
    pub pieces: Vec<Piece>,
    pub empties: Vec<EmptyRectangle>,
}

impl RectangularDecomposition {
    pub fn rect(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_spherical(&self) -> bool {
        self.empties.is_empty()
    }

    /// No pieces at all: the source diagram had no cells.
    pub fn is_degenerate(&self) -> bool {
        self.pieces.is_empty()
    }
}

fn decompose(d: &CellDiagram) -> Result<RectangularDecomposition> {
    let mut rows_left: Vec<usize> = (0..d.rows.len()).collect();
    let mut cols_left: Vec<usize> = (0..d.cols.len()).collect();
    let mut out = RectangularDecomposition::default();

    loop {
        // Rows and columns with no cell in the current remainder become
        // empty rectangles before the next top cell is chosen.
        let (dead_rows, live_rows): (Vec<usize>, Vec<usize>) = rows_left
            .iter()
            .partition(|&&r| !cols_left.iter().any(|&c| d.has_cell(r, c)));
        let (dead_cols, live_cols): (Vec<usize>, Vec<usize>) = cols_left
            .iter()
            .partition(|&&c| !live_rows.iter().any(|&r| d.has_cell(r, c)));
        if !dead_rows.is_empty() {
            out.empties.push(EmptyRectangle {
                kind: EmptyKind::Rows,
                labels: dead_rows.iter().map(|&r| d.rows[r]).collect(),
            });
        }
        if !dead_cols.is_empty() {
            out.empties.push(EmptyRectangle {
                kind: EmptyKind::Cols,
                labels: dead_cols.iter().map(|&c| d.cols[c]).collect(),
            });
        }
        rows_left = live_rows;
        cols_left = live_cols;
        let (Some(&top_r), Some(&top_c)) = (rows_left.first(), cols_left.first()) else {
            // one side is exhausted; the stripping above has already
            // consumed whatever was left on the other side
            debug_assert!(rows_left.is_empty() && cols_left.is_empty());
            break;
        };
        if !d.has_cell(top_r, top_c) {
            return Err(Error::Structural(format!(
                "top position (x{}, y{}) of the remainder is not a cell",
                d.rows[top_r], d.cols[top_c]
            )));
        }
        let piece_rows: Vec<usize> = rows_left.iter().copied().filter(|&r| d.has_cell(r, top_c)).collect();
        let piece_cols: Vec<usize> = cols_left.iter().copied().filter(|&c| d.has_cell(top_r, c)).collect();
        let mut cells = Vec::new();
        for &r in &rows_left {
            let in_rows = piece_rows.contains(&r);
            for &c in &cols_left {
                if (in_rows || piece_cols.contains(&c)) && d.has_cell(r, c) {
                    cells.push((d.rows[r], d.cols[c]));
                }
            }
        }
        out.pieces.push(Piece {
            top_cell: (d.rows[top_r], d.cols[top_c]),
            rows: piece_rows.iter().map(|&r| d.rows[r]).collect(),
            cols: piece_cols.iter().map(|&c| d.cols[c]).collect(),
            cells,
        });
        rows_left.retain(|r| !piece_rows.contains(r));
        cols_left.retain(|c| !piece_cols.contains(c));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> CellDiagram {
        CellDiagram::new_skew_ferrers(&[7, 6, 6, 5, 4, 3, 2], &[4, 4, 2, 2, 2, 1, 0]).unwrap()
    }

    #[test]
    fn example_row_five() {
        let d = example();
        assert_eq!(d.rows().len(), 7);
        assert_eq!(d.cols().len(), 7);
        assert_eq!(d.row_cells(5), Some(&[4, 5][..]));
    }

    #[test]
    fn small_shapes() {
        let sq = CellDiagram::ferrers(&[2, 2]).unwrap();
        assert_eq!(sq.cell_count(), 4);
        let stair = CellDiagram::ferrers(&[2, 1]).unwrap();
        assert_eq!(stair.cells(), vec![(1, 1), (1, 2), (2, 2)]);
    }

    #[test]
    fn example_cell_count() {
        // sum of lambda_i - mu_i = 33 - 15
        assert_eq!(example().cell_count(), 18);
        assert_eq!(example().cells().len(), 18);
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(CellDiagram::new_skew_ferrers(&[], &[]), Err(Error::EmptyShape));
        assert!(matches!(
            CellDiagram::new_skew_ferrers(&[2, 3], &[0, 0]),
            Err(Error::NotNonincreasing { .. })
        ));
        assert!(matches!(
            CellDiagram::new_skew_ferrers(&[3, 2], &[0, 1]),
            Err(Error::NotNonincreasing { which: "mu", .. })
        ));
        assert!(matches!(
            CellDiagram::new_skew_ferrers(&[3, 1], &[2, 2]),
            Err(Error::MuExceedsLambda { .. })
        ));
        assert!(matches!(
            CellDiagram::new_skew_ferrers(&[3, 0], &[0, 0]),
            Err(Error::NonPositiveLambda { .. })
        ));
        assert!(matches!(
            CellDiagram::new_skew_ferrers(&[3], &[0, 0]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn restrict_identity_and_labels() {
        let d = example();
        let same = d.restrict(d.rows(), d.cols()).unwrap();
        assert_eq!(same, d);
        let sub = d.restrict(&[3, 4, 5, 6, 7], &[4, 5, 6, 7]).unwrap();
        assert_eq!(sub.row_cells(3), Some(&[4, 5][..]));
        assert!(matches!(d.restrict(&[8], &[]), Err(Error::UnknownLabel(_))));
        assert!(matches!(d.restrict(&[], &[9]), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn example_decomposition() {
        let dec = example().rectangular_decomposition().unwrap();
        let tops: Vec<_> = dec.pieces.iter().map(|p| p.top_cell).collect();
        assert_eq!(tops, vec![(1, 1), (3, 4), (6, 6)]);
        assert_eq!(
            dec.empties,
            vec![
                EmptyRectangle {
                    kind: EmptyKind::Rows,
                    labels: vec![2]
                },
                EmptyRectangle {
                    kind: EmptyKind::Cols,
                    labels: vec![7]
                },
            ]
        );
        assert_eq!(dec.rect(), 3);
        assert!(!dec.is_spherical());
        // middle piece, with (x5, y4) as the data dictates
        assert_eq!(
            dec.pieces[1].cells,
            vec![(3, 4), (3, 5), (4, 4), (4, 5), (5, 4), (5, 5), (6, 5)]
        );
        assert_eq!(dec.pieces[2].cells, vec![(6, 6), (7, 6), (7, 7)]);
    }

    #[test]
    fn example_without_empties_is_spherical() {
        let d = example();
        let sub = d.restrict(&[1, 3, 4, 5, 6, 7], &[1, 2, 3, 4, 5, 6]).unwrap();
        let dec = sub.rectangular_decomposition().unwrap();
        assert!(dec.is_spherical());
        assert_eq!(dec.rect(), 3);
    }

    #[test]
    fn rectangle_is_one_piece() {
        let d = CellDiagram::ferrers(&[3, 3, 3]).unwrap();
        let dec = d.rectangular_decomposition().unwrap();
        assert_eq!(dec.rect(), 1);
        assert!(dec.is_spherical());
        assert_eq!(dec.pieces[0].cells.len(), 9);
    }

    #[test]
    fn staircase_two_one() {
        let d = CellDiagram::ferrers(&[2, 1]).unwrap();
        let dec = d.rectangular_decomposition().unwrap();
        assert_eq!(dec.rect(), 1);
        assert_eq!(dec.pieces[0].rows, vec![1]);
        assert_eq!(dec.pieces[0].cols, vec![1, 2]);
        assert_eq!(dec.pieces[0].cells, vec![(1, 1), (1, 2), (2, 2)]);
        assert_eq!(
            dec.empties,
            vec![EmptyRectangle {
                kind: EmptyKind::Rows,
                labels: vec![2]
            }]
        );
        assert!(!dec.is_spherical());
    }

    #[test]
    fn empty_diagrams() {
        let d = CellDiagram::ferrers(&[2]).unwrap();
        let nothing = d.restrict(&[], &[]).unwrap();
        let dec = nothing.rectangular_decomposition().unwrap();
        assert_eq!(dec.rect(), 0);
        assert!(dec.is_spherical());
        assert!(dec.is_degenerate());

        // a single empty row: degenerate, and its empty lines are reported
        let row = CellDiagram::new_skew_ferrers(&[2], &[2]).unwrap();
        assert!(row.is_degenerate());
        let dec = row.rectangular_decomposition().unwrap();
        assert_eq!(dec.rect(), 0);
        assert!(dec.is_degenerate());
        assert!(!dec.is_spherical());
    }

    #[test]
    fn restricting_twice_is_idempotent() {
        let d = example();
        let once = d.restrict(&[1, 2, 5, 7], &[2, 3, 6, 7]).unwrap();
        let twice = once.restrict(&[1, 2, 5, 7], &[2, 3, 6, 7]).unwrap();
        assert_eq!(once, twice);
    }

    #[test]
    fn ferrers_detection() {
        assert!(CellDiagram::ferrers(&[3, 2, 2]).unwrap().is_ferrers());
        assert_eq!(
            CellDiagram::ferrers(&[3, 2, 2]).unwrap().ferrers_lambda().unwrap(),
            vec![3, 2, 2]
        );
        assert!(!example().is_ferrers());
        assert_eq!(example().ferrers_lambda(), Err(Error::SkewShape));
    }
}
