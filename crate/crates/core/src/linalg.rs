//! Exact Gaussian elimination over ℚ.
//!
//! [`Echelon`] is an incrementally built sparse row-echelon basis: pivots are
//! the first nonzero column of each row and rows stay in insertion order, so
//! ranks and quotient bases are deterministic. Callers that want "pivot =
//! leading monomial" index their columns from the largest monomial down.
//!
//! The free functions at the bottom work on small dense matrices.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::ncalg::Q;

pub type SparseVec = BTreeMap<usize, Q>;

#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<SparseVec>,
    pivot_row: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row.contains_key(&col)
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivot_row.keys().copied()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Pivot column of each row, in insertion order.
    pub fn row_pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| *r.keys().next().expect("stored rows are nonzero")).collect()
    }

    /// Eliminates every pivot column from `v`.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut cursor = 0usize;
        loop {
            let hit = v.range(cursor..).find(|(c, _)| self.pivot_row.contains_key(c)).map(|(c, x)| (*c, x.clone()));
            let Some((col, factor)) = hit else { break };
            let row = &self.rows[self.pivot_row[&col]];
            for (c, x) in row {
                let entry = v.entry(*c).or_insert_with(Q::zero);
                *entry -= &factor * x;
                if entry.is_zero() {
                    v.remove(c);
                }
            }
            cursor = col + 1;
        }
        v
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((&col, lead)) = r.iter().next() else { return false };
        let inv = lead.recip();
        let row: SparseVec = if inv.is_one() { r } else { r.into_iter().map(|(c, x)| (c, x * &inv)).collect() };
        self.pivot_row.insert(col, self.rows.len());
        self.rows.push(row);
        true
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }
}

pub fn to_sparse(v: &[Q]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
pub fn rref(rows: &[Vec<Q>]) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vec<Q>]) -> usize {
    rref(rows).1.len()
}

/// Basis of `{x : rows · x = 0}` in `ncols` unknowns.
pub fn kernel(rows: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let (r, pivots) = rref(rows);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = alloc::vec![Q::zero(); ncols];
        v[free] = Q::one();
        for (row, &pc) in r.iter().zip(&pivots) {
            v[pc] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Determinant by fraction-exact elimination.
pub fn det(m: &[Vec<Q>]) -> Q {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else { return Q::zero() };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= &a[c][c];
        let inv = a[c][c].recip();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..n {
                let t = &f * &a[c][j];
                a[i][j] -= t;
            }
        }
    }
    d
}

/// Coefficients expressing `v` in the span of `basis` (assumed independent).
pub fn coords_in_span(basis: &[Vec<Q>], v: &[Q]) -> Option<Vec<Q>> {
    let n = v.len();
    let k = basis.len();
    // Augmented system: columns are basis vectors, last column is v.
    let rows: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            let mut r: Vec<Q> = basis.iter().map(|b| b[i].clone()).collect();
            r.push(v[i].clone());
            r
        })
        .collect();
    let (red, pivots) = rref(&rows);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = alloc::vec![Q::zero(); k];
    for (row, &pc) in red.iter().zip(&pivots) {
        x[pc] = row[k].clone();
    }
    Some(x)
}

pub fn in_span(basis: &[Vec<Q>], v: &[Q]) -> bool {
    if basis.is_empty() {
        return v.iter().all(Zero::is_zero);
    }
    let mut rows = basis.to_vec();
    let r = rank(&rows);
    rows.push(v.to_vec());
    rank(&rows) == r
}

/// Dimension of the intersection of two subspaces given by spanning rows.
pub fn intersection_dim(a: &[Vec<Q>], b: &[Vec<Q>]) -> usize {
    let mut both = a.to_vec();
    both.extend_from_slice(b);
    rank(a) + rank(b) - rank(&both)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::{q, qf};
    use alloc::vec;

    #[test]
    fn echelon_rank_and_membership() {
        let mut e = Echelon::new();
        assert!(e.insert(to_sparse(&[q(1), q(2), q(0)])));
        assert!(e.insert(to_sparse(&[q(2), q(4), q(1)])));
        assert!(!e.insert(to_sparse(&[q(3), q(6), q(5)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(to_sparse(&[q(0), q(0), q(7)])));
        assert!(!e.contains(to_sparse(&[q(0), q(1), q(0)])));
        assert_eq!(e.row_pivots(), vec![0, 2]);
    }

    #[test]
    fn dense_helpers() {
        let m = vec![vec![q(1), q(2)], vec![q(3), q(4)]];
        assert_eq!(det(&m), q(-2));
        assert_eq!(rank(&m), 2);
        let k = kernel(&[vec![q(1), q(1), q(0)]], 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(&v[0] + &v[1], q(0));
        }
        let c = coords_in_span(&[vec![q(1), q(0), q(1)], vec![q(0), q(1), q(1)]], &[q(2), qf(1, 2), qf(5, 2)]);
        assert_eq!(c, Some(vec![q(2), qf(1, 2)]));
        assert!(coords_in_span(&[vec![q(1), q(0), q(0)]], &[q(0), q(1), q(0)]).is_none());
        assert_eq!(intersection_dim(&[vec![q(1), q(0), q(0)], vec![q(0), q(1), q(0)]], &[vec![q(1), q(1), q(1)]]), 0);
    }
}
