//! Exact rational vectors and small dense linear algebra over ℚ.

use alloc::vec::Vec;

use num_rational::Ratio;
use num_traits::{One, Zero};

pub type Rational = Ratio<i64>;
pub type RVec = Vec<Rational>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n)
}

pub fn to_rvec(v: &[i64]) -> RVec {
    v.iter().map(|&x| rat(x)).collect()
}

pub fn zero_vec(n: usize) -> RVec {
    alloc::vec![Rational::zero(); n]
}

pub fn add_assign(acc: &mut [Rational], v: &[Rational]) {
    for (a, b) in acc.iter_mut().zip(v) {
        *a += *b;
    }
}

pub fn add_scaled_int(acc: &mut [Rational], scale: Rational, v: &[i64]) {
    for (a, &b) in acc.iter_mut().zip(v) {
        *a += scale * b;
    }
}

pub fn scale(v: &[Rational], s: Rational) -> RVec {
    v.iter().map(|x| *x * s).collect()
}

pub fn is_zero(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Returns the integer vector if every entry has denominator one.
pub fn as_integral(v: &[Rational]) -> Option<Vec<i64>> {
    v.iter()
        .map(|x| x.is_integer().then(|| x.to_integer()))
        .collect()
}

/// Row-reduces `rows` in place and returns the pivot columns.
pub fn row_reduce(rows: &mut [RVec]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / rows[r][c];
        for x in rows[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c];
                let (pivot_row, other) = if i < r {
                    let (a, b) = rows.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = rows.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                for (x, y) in other.iter_mut().zip(pivot_row) {
                    *x -= f * *y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(vectors: &[RVec]) -> usize {
    let mut rows = vectors.to_vec();
    row_reduce(&mut rows).len()
}

/// Greedily selects indices of a maximal linearly independent subfamily,
/// scanning in the given order.
pub fn independent_subset(vectors: &[RVec]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut basis: Vec<RVec> = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        basis.push(v.clone());
        if rank(&basis) == basis.len() {
            chosen.push(i);
        } else {
            basis.pop();
        }
    }
    chosen
}

/// Coordinates of `v` in the (linearly independent) family `basis`, if `v`
/// lies in its span.
pub fn coordinates_in(basis: &[RVec], v: &[Rational]) -> Option<RVec> {
    let k = basis.len();
    let n = v.len();
    // Augmented system: columns are basis vectors, last column v.
    let mut rows: Vec<RVec> = (0..n)
        .map(|i| {
            let mut row: RVec = basis.iter().map(|b| b[i]).collect();
            row.push(v[i]);
            row
        })
        .collect();
    let pivots = row_reduce(&mut rows);
    if pivots.contains(&k) {
        return None;
    }
    let mut out = zero_vec(k);
    for (r, &c) in pivots.iter().enumerate() {
        out[c] = rows[r][k];
    }
    Some(out)
}

/// Inverse of a square rational matrix, if it exists.
pub fn inverse(m: &[RVec]) -> Option<Vec<RVec>> {
    let n = m.len();
    let mut rows: Vec<RVec> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let pivots = row_reduce(&mut rows);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(rows.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_vec(m: &[RVec], v: &[Rational]) -> RVec {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| *a * *b).sum())
        .collect()
}

pub fn mat_mul(a: &[RVec], b: &[RVec]) -> Vec<RVec> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}
