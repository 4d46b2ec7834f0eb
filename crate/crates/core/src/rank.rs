//! Exact matrix rank over GF(2) and over the rationals.
//!
//! Matrices arrive as sparse columns `(row, value)`. Over the rationals the
//! elimination is fraction-free: a column is reduced against a stored pivot
//! column by cross-multiplying, and every stored column is kept primitive
//! (content 1). Arithmetic starts in `i64` and restarts in `BigInt` if
//! anything overflows.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

pub(crate) type SparseColumn = Vec<(usize, i64)>;

pub(crate) fn rank_gf2(rows: usize, columns: &[SparseColumn]) -> usize {
    let words = rows.div_ceil(64).max(1);
    // pivot rows indexed by their lowest set bit
    let mut pivots: BTreeMap<usize, Vec<u64>> = BTreeMap::new();
    for col in columns {
        let mut v = alloc::vec![0u64; words];
        for &(r, x) in col {
            if x & 1 == 1 {
                v[r / 64] ^= 1 << (r % 64);
            }
        }
        while let Some(lead) = lowest_bit(&v) {
            match pivots.get(&lead) {
                Some(p) => v.iter_mut().zip(p).for_each(|(a, b)| *a ^= b),
                None => {
                    pivots.insert(lead, v);
                    break;
                }
            }
        }
    }
    pivots.len()
}

fn lowest_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
}

trait ExactInt: Clone + Integer + Signed {
    fn from_small(x: i64) -> Self;
    /// `a * x - b * y`, or `None` on overflow.
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
}

impl ExactInt for i64 {
    fn from_small(x: i64) -> Self {
        x
    }

    fn cross(a: &i64, x: &i64, b: &i64, y: &i64) -> Option<i64> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
}

impl ExactInt for BigInt {
    fn from_small(x: i64) -> Self {
        BigInt::from(x)
    }

    fn cross(a: &BigInt, x: &BigInt, b: &BigInt, y: &BigInt) -> Option<BigInt> {
        Some(a * x - b * y)
    }
}

/// Column vector kept sorted by row, without explicit zeros.
type IntColumn<T> = Vec<(usize, T)>;

fn rank_integer<T: ExactInt>(columns: &[SparseColumn]) -> Option<usize> {
    let mut pivots: BTreeMap<usize, IntColumn<T>> = BTreeMap::new();
    for col in columns {
        let mut v: IntColumn<T> = col
            .iter()
            .filter(|e| e.1 != 0)
            .map(|&(r, x)| (r, T::from_small(x)))
            .collect();
        v.sort_by_key(|e| e.0);
        while let Some(lead) = v.first().map(|e| e.0) {
            let Some(p) = pivots.get(&lead) else {
                make_primitive(&mut v);
                pivots.insert(lead, v);
                break;
            };
            v = eliminate(&v, p)?;
        }
    }
    Some(pivots.len())
}

/// `p[lead] * v - v[lead] * p`, divided by its content. Both share the
/// same leading row, which cancels.
fn eliminate<T: ExactInt>(v: &IntColumn<T>, p: &IntColumn<T>) -> Option<IntColumn<T>> {
    let a = &p[0].1;
    let b = &v[0].1;
    let g = a.gcd(b);
    let (a, b) = (a.div_floor(&g), b.div_floor(&g));
    let zero = T::zero();
    let mut out = Vec::with_capacity(v.len() + p.len());
    let (mut i, mut j) = (1, 1);
    while i < v.len() || j < p.len() {
        let rv = v.get(i).map_or(usize::MAX, |e| e.0);
        let rp = p.get(j).map_or(usize::MAX, |e| e.0);
        let (row, x, y) = match rv.cmp(&rp) {
            core::cmp::Ordering::Less => {
                i += 1;
                (rv, &v[i - 1].1, &zero)
            }
            core::cmp::Ordering::Greater => {
                j += 1;
                (rp, &zero, &p[j - 1].1)
            }
            core::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
                (rv, &v[i - 1].1, &p[j - 1].1)
            }
        };
        let e = T::cross(&a, x, &b, y)?;
        if !e.is_zero() {
            out.push((row, e));
        }
    }
    make_primitive(&mut out);
    Some(out)
}

fn make_primitive<T: ExactInt>(v: &mut IntColumn<T>) {
    let content = v.iter().fold(T::zero(), |g, e| g.gcd(&e.1));
    if !content.is_zero() && !content.is_one() {
        v.iter_mut().for_each(|e| e.1 = e.1.div_floor(&content));
    }
}

pub(crate) fn rank_rational(columns: &[SparseColumn]) -> usize {
    rank_integer::<i64>(columns)
        .or_else(|| rank_integer::<BigInt>(columns))
        .expect("big integer elimination cannot overflow")
}
