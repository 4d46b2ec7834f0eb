//! Text rendering of Betti tables: columns indexed by `i`, rows by `j - i`,
//! a `total` row on top and `.` for zero entries.

use std::fmt::Write;

use skewbetti_core::betti::BettiTable;

pub fn betti_table(t: &BettiTable) -> String {
    let Some(pd) = t.pd() else {
        return String::from("(zero table)\n");
    };
    let degrees: Vec<usize> = t.entries().map(|(i, j, _)| j - i).collect();
    let (lo, hi) = (*degrees.iter().min().unwrap_or(&0), *degrees.iter().max().unwrap_or(&0));
    let mut cells: Vec<Vec<String>> = Vec::new();
    cells.push((0..=pd).map(|i| i.to_string()).collect());
    cells.push((0..=pd).map(|i| t.total(i).to_string()).collect());
    for d in lo..=hi {
        cells.push((0..=pd).map(|i| nonzero(t.get(i, i + d))).collect());
    }
    let labels: Vec<String> = core::iter::once(String::new())
        .chain(core::iter::once(String::from("total:")))
        .chain((lo..=hi).map(|d| format!("{d}:")))
        .collect();
    let label_width = labels.iter().map(String::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..=pd)
        .map(|c| cells.iter().map(|r| r[c].len()).max().unwrap_or(1))
        .collect();
    let mut out = String::new();
    for (label, row) in labels.iter().zip(&cells) {
        let _ = write!(out, "{label:>label_width$}");
        for (cell, w) in row.iter().zip(&widths) {
            let _ = write!(out, " {cell:>w$}");
        }
        out.push('\n');
    }
    out
}

fn nonzero(v: u64) -> String {
    if v == 0 {
        String::from(".")
    } else {
        v.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout() {
        let t = BettiTable::from_entries([(0, 2, 6), (1, 3, 5), (1, 4, 6), (2, 4, 1), (2, 5, 6)]);
        let expected = "       0  1 2\n\
                        total: 6 11 7\n    \
                        2: 6  5 1\n    \
                        3: .  6 6\n";
        assert_eq!(betti_table(&t), expected);
        assert_eq!(betti_table(&BettiTable::new()), "(zero table)\n");
    }
}
