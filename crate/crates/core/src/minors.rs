//! Exact linear algebra helpers shared across modules: a minimal ring/field
//! abstraction, memoized Laplace determinants (no division, works over any
//! commutative ring), Gauss-Jordan inversion and reduced row echelon form
//! over a field.

use crate::scalar::{Rat, Scalar};
use num::{One, Zero};

pub(crate) trait Ring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
}

pub(crate) trait Field: Ring {
    /// None when `other` is zero.
    fn checked_div(&self, other: &Self) -> Option<Self>;
}

impl Ring for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl Field for Rat {
    fn checked_div(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            None
        } else {
            Some(self / other)
        }
    }
}

impl Ring for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl Field for Scalar {
    fn checked_div(&self, other: &Self) -> Option<Self> {
        Scalar::checked_div(self, other).ok()
    }
}

/// Determinant by Laplace expansion with memoization over column subsets.
/// O(2^n * n) ring multiplications; division-free, so valid over any
/// commutative ring. Intended for n <= ~16.
pub(crate) fn det_memo<R: Ring>(n: usize, entry: impl Fn(usize, usize) -> R) -> R {
    assert!(n <= 24, "det_memo is for small matrices");
    if n == 0 {
        return R::one();
    }
    // memo[mask] = det of rows (n - popcount(mask))..n on the columns in mask.
    let mut memo: Vec<Option<R>> = vec![None; 1usize << n];
    memo[0] = Some(R::one());
    fn rec<R: Ring>(
        mask: usize,
        n: usize,
        entry: &impl Fn(usize, usize) -> R,
        memo: &mut Vec<Option<R>>,
    ) -> R {
        if let Some(v) = &memo[mask] {
            return v.clone();
        }
        let k = mask.count_ones() as usize;
        let row = n - k;
        let mut acc = R::zero();
        let mut sign_positive = true;
        for col in 0..n {
            if mask & (1 << col) != 0 {
                let e = entry(row, col);
                if !e.is_zero() {
                    let sub = rec(mask & !(1 << col), n, entry, memo);
                    let term = e.mul(&sub);
                    acc = if sign_positive {
                        acc.add(&term)
                    } else {
                        acc.sub(&term)
                    };
                }
                sign_positive = !sign_positive;
            }
        }
        memo[mask] = Some(acc.clone());
        acc
    }
    rec((1usize << n) - 1, n, &entry, &mut memo)
}

/// Gauss-Jordan inverse; None when the matrix is singular.
pub(crate) fn invert<F: Field>(mat: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let n = mat.len();
    let mut a: Vec<Vec<F>> = mat.to_vec();
    let mut inv: Vec<Vec<F>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { F::one() } else { F::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot_row);
        inv.swap(col, pivot_row);
        let pivot = a[col][col].clone();
        for j in 0..n {
            a[col][j] = a[col][j].checked_div(&pivot)?;
            inv[col][j] = inv[col][j].checked_div(&pivot)?;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for j in 0..n {
                    a[r][j] = a[r][j].sub(&factor.mul(&a[col][j]));
                    inv[r][j] = inv[r][j].sub(&factor.mul(&inv[col][j]));
                }
            }
        }
    }
    Some(inv)
}

/// Determinant over a field by elimination.
pub(crate) fn det_gauss<F: Field>(mat: &[Vec<F>]) -> F {
    let n = mat.len();
    let mut a: Vec<Vec<F>> = mat.to_vec();
    let mut det = F::one();
    let mut negate = false;
    for col in 0..n {
        let pivot_row = match (col..n).find(|&r| !a[r][col].is_zero()) {
            Some(r) => r,
            None => return F::zero(),
        };
        if pivot_row != col {
            a.swap(col, pivot_row);
            negate = !negate;
        }
        let pivot = a[col][col].clone();
        det = det.mul(&pivot);
        for r in col + 1..n {
            if !a[r][col].is_zero() {
                let factor = a[r][col].checked_div(&pivot).expect("nonzero pivot");
                for j in col..n {
                    a[r][j] = a[r][j].sub(&factor.mul(&a[col][j]));
                }
            }
        }
    }
    if negate {
        F::zero().sub(&det)
    } else {
        det
    }
}

/// In-place reduced row echelon form; returns the rank. Zero rows are
/// truncated away.
pub(crate) fn rref<F: Field>(rows: &mut Vec<Vec<F>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let pivot = rows[rank][col].clone();
        for j in 0..ncols {
            rows[rank][j] = rows[rank][j].checked_div(&pivot).expect("nonzero pivot");
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for j in 0..ncols {
                    rows[r][j] = rows[r][j].sub(&factor.mul(&rows[rank][j]));
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rank
}

/// Basis of the right null space `{x : A x = 0}`.
pub(crate) fn nullspace<F: Field>(rows: &[Vec<F>]) -> Vec<Vec<F>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut r = rows.to_vec();
    rref(&mut r);
    let mut pivot_of_row: Vec<usize> = Vec::new();
    for row in &r {
        let p = row.iter().position(|v| !v.is_zero()).expect("nonzero row");
        pivot_of_row.push(p);
    }
    let pivots: std::collections::HashSet<usize> = pivot_of_row.iter().copied().collect();
    let mut out = Vec::new();
    for free in 0..ncols {
        if pivots.contains(&free) {
            continue;
        }
        let mut x = vec![F::zero(); ncols];
        x[free] = F::one();
        for (row, &p) in r.iter().zip(&pivot_of_row) {
            x[p] = F::zero().sub(&row[free]);
        }
        out.push(x);
    }
    out
}

/// Matrix transpose.
pub(crate) fn transpose<R: Clone>(rows: &[Vec<R>]) -> Vec<Vec<R>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let n = rows[0].len();
    (0..n)
        .map(|j| rows.iter().map(|r| r[j].clone()).collect())
        .collect()
}

/// Matrix product over a ring.
pub(crate) fn mat_mul<R: Ring>(a: &[Vec<R>], b: &[Vec<R>]) -> Vec<Vec<R>> {
    let n = a.len();
    let inner = if n > 0 { a[0].len() } else { 0 };
    let m = if b.is_empty() { 0 } else { b[0].len() };
    assert_eq!(inner, b.len(), "dimension mismatch in mat_mul");
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = R::zero();
                    for k in 0..inner {
                        if !a[i][k].is_zero() && !b[k][j].is_zero() {
                            acc = acc.add(&a[i][k].mul(&b[k][j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;

    #[test]
    fn det_memo_matches_gauss() {
        let m = vec![
            vec![rat_int(2), rat_int(1), rat_int(0)],
            vec![rat_int(1), rat_int(3), rat_int(-1)],
            vec![rat_int(0), rat_int(4), rat_int(5)],
        ];
        let d1 = det_memo(3, |i, j| m[i][j].clone());
        let d2 = det_gauss(&m);
        assert_eq!(d1, d2);
        assert_eq!(d1, rat_int(33));
    }

    #[test]
    fn invert_roundtrip() {
        let m = vec![vec![rat_int(1), rat_int(2)], vec![rat_int(3), rat_int(5)]];
        let inv = invert(&m).unwrap();
        let prod = mat_mul(&m, &inv);
        assert_eq!(prod[0][0], rat_int(1));
        assert_eq!(prod[0][1], rat_int(0));
        assert_eq!(prod[1][0], rat_int(0));
        assert_eq!(prod[1][1], rat_int(1));
        let singular = vec![vec![rat_int(1), rat_int(2)], vec![rat_int(2), rat_int(4)]];
        assert!(invert(&singular).is_none());
    }

    #[test]
    fn rref_rank() {
        let mut rows = vec![
            vec![rat_int(1), rat_int(2), rat_int(3)],
            vec![rat_int(2), rat_int(4), rat_int(6)],
            vec![rat_int(0), rat_int(1), rat_int(1)],
        ];
        let rank = rref(&mut rows);
        assert_eq!(rank, 2);
        assert_eq!(rows.len(), 2);
    }
}
