//! Vectors, matrices and subspaces over GF(q).
//!
//! Vectors are plain `Vec<Elem>`. The canonical order on vectors is
//! lexicographic on coordinate tuples, with the first coordinate most
//! significant; [`encode`] and [`decode`] map between a vector and its rank in
//! that order.

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

pub type Vector = Vec<Elem>;

/// Subspaces with more points than this are tested for membership by
/// elimination instead of by materializing their point sets.
pub const MATERIALIZE_LIMIT: u64 = 1 << 16;

/// Rank of `v` in the lexicographic order of `F_q^k`.
pub fn encode(v: &[Elem], q: u32) -> usize {
    v.iter()
        .fold(0usize, |acc, &x| acc * q as usize + x as usize)
}

pub fn decode(mut index: usize, q: u32, k: usize) -> Vector {
    let mut v = vec![0; k];
    for x in v.iter_mut().rev() {
        *x = (index % q as usize) as Elem;
        index /= q as usize;
    }
    v
}

/// `q^k`, or `None` on overflow.
pub fn space_size(q: u32, k: usize) -> Option<u64> {
    u64::from(q).checked_pow(k as u32)
}

pub fn dot(field: &Field, x: &[Elem], v: &[Elem]) -> Result<Elem> {
    if x.len() != v.len() {
        return Err(Error::LengthMismatch {
            expected: x.len(),
            found: v.len(),
        });
    }
    Ok(dot_unchecked(field, x, v))
}

#[inline]
pub(crate) fn dot_unchecked(field: &Field, x: &[Elem], v: &[Elem]) -> Elem {
    x.iter()
        .zip(v)
        .fold(0, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
}

pub fn scale(field: &Field, c: Elem, v: &[Elem]) -> Vector {
    v.iter().map(|&x| field.mul(c, x)).collect()
}

/// `acc += c * v`
pub fn axpy(field: &Field, acc: &mut [Elem], c: Elem, v: &[Elem]) {
    if c == 0 {
        return;
    }
    for (a, &x) in acc.iter_mut().zip(v) {
        *a = field.add(*a, field.mul(c, x));
    }
}

/// Scales `v` so its first nonzero coordinate is 1. Returns `None` for zero.
pub fn normalize(field: &Field, v: &[Elem]) -> Option<Vector> {
    let lead = *v.iter().find(|&&x| x != 0)?;
    let inv = field.inv(lead).ok()?;
    Some(scale(field, inv, v))
}

/// A dense row-major matrix over GF(q).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows of equal length.
    pub fn from_rows(rows: &[Vector]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::LengthMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    /// Builds a `k x columns.len()` matrix whose columns are the given vectors.
    pub fn from_columns(k: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Self::zeros(k, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != k {
                return Err(Error::LengthMismatch {
                    expected: k,
                    found: c.len(),
                });
            }
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: Elem) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// Row vector times matrix.
    pub fn left_mul(&self, field: &Field, x: &[Elem]) -> Vector {
        let mut out = vec![0; self.cols];
        for (i, &c) in x.iter().enumerate().take(self.rows) {
            axpy(field, &mut out, c, self.row(i));
        }
        out
    }

    /// `self * other`
    pub fn mul(&self, field: &Field, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let rows: Vec<Vector> = (0..self.rows)
            .map(|i| other.left_mul(field, self.row(i)))
            .collect();
        let mut m = Matrix::from_rows(&rows)?;
        m.cols = other.cols;
        Ok(m)
    }

    pub fn remove_column(&self, j: usize) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * (self.cols - 1));
        for i in 0..self.rows {
            let r = self.row(i);
            data.extend_from_slice(&r[..j]);
            data.extend_from_slice(&r[j + 1..]);
        }
        Matrix {
            rows: self.rows,
            cols: self.cols - 1,
            data,
        }
    }

    /// Horizontal concatenation of `copies` copies of `self`.
    pub fn tile(&self, copies: usize) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len() * copies);
        for i in 0..self.rows {
            for _ in 0..copies {
                data.extend_from_slice(self.row(i));
            }
        }
        Matrix {
            rows: self.rows,
            cols: self.cols * copies,
            data,
        }
    }
}

/// Row-reduces `rows` in place to reduced echelon form and returns the pivot
/// columns. Zero rows are dropped.
pub fn rref(field: &Field, rows: &mut Vec<Vector>) -> Vec<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(rows[r][c]).expect("pivot is nonzero");
        rows[r] = scale(field, inv, &rows[r]);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = field.neg(row[c]);
                axpy(field, row, f, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(field: &Field, m: &Matrix) -> usize {
    let mut rows = m.row_vectors();
    rref(field, &mut rows).len()
}

pub fn rank_of(field: &Field, vectors: &[Vector]) -> usize {
    let mut rows = vectors.to_vec();
    rref(field, &mut rows).len()
}

/// Basis of `{x : x . r = 0 for every row r}`.
pub fn null_space(field: &Field, rows: &[Vector], dim: usize) -> Vec<Vector> {
    let mut rows = rows.to_vec();
    let pivots = rref(field, &mut rows);
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0; dim];
            v[f] = 1;
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = field.neg(row[f]);
            }
            v
        })
        .collect()
}

/// All `q^basis.len()` linear combinations of `basis`, in lexicographic
/// order of coefficient tuples.
pub fn span_points(field: &Field, basis: &[Vector], dim: usize) -> Vec<Vector> {
    let q = field.order();
    let count = (q as usize).pow(basis.len() as u32);
    let mut out = Vec::with_capacity(count);
    for idx in 0..count {
        let coeffs = decode(idx, q, basis.len());
        let mut v = vec![0; dim];
        for (&c, b) in coeffs.iter().zip(basis) {
            axpy(field, &mut v, c, b);
        }
        out.push(v);
    }
    out
}

/// A linear subspace of `F_q^k` given by an independent basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
    // reduced echelon form of the basis, for membership tests
    echelon: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(field: &Field, ambient_dim: usize, basis: Vec<Vector>) -> Result<Self> {
        for b in &basis {
            if b.len() != ambient_dim {
                return Err(Error::LengthMismatch {
                    expected: ambient_dim,
                    found: b.len(),
                });
            }
            for &x in b {
                field.check(u64::from(x))?;
            }
        }
        let mut echelon = basis.clone();
        let pivots = rref(field, &mut echelon);
        if pivots.len() != basis.len() {
            return Err(Error::DependentBasis);
        }
        Ok(Subspace {
            ambient_dim,
            basis,
            echelon,
            pivots,
        })
    }

    /// The span of the given standard unit vectors.
    pub fn coordinate(field: &Field, ambient_dim: usize, coords: &[usize]) -> Result<Self> {
        let basis = coords
            .iter()
            .map(|&c| {
                let mut v = vec![0; ambient_dim];
                v[c] = 1;
                v
            })
            .collect();
        Self::new(field, ambient_dim, basis)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn points(&self, field: &Field) -> Vec<Vector> {
        span_points(field, &self.basis, self.ambient_dim)
    }

    /// Membership by reduction against the echelon basis.
    pub fn contains(&self, field: &Field, v: &[Elem]) -> bool {
        let mut r = v.to_vec();
        for (row, &pc) in self.echelon.iter().zip(&self.pivots) {
            if r[pc] != 0 {
                let f = field.neg(r[pc]);
                axpy(field, &mut r, f, row);
            }
        }
        r.iter().all(|&x| x == 0)
    }
}

/// True iff every pair of subspaces meets only in the zero vector.
pub fn pairwise_trivial(field: &Field, subspaces: &[Subspace]) -> bool {
    first_intersecting_pair(field, subspaces).is_none()
}

pub(crate) fn first_intersecting_pair(
    field: &Field,
    subspaces: &[Subspace],
) -> Option<(usize, usize)> {
    for i in 0..subspaces.len() {
        for j in i + 1..subspaces.len() {
            let mut joined = subspaces[i].basis.clone();
            joined.extend(subspaces[j].basis.iter().cloned());
            if rank_of(field, &joined) != subspaces[i].dim() + subspaces[j].dim() {
                return Some((i, j));
            }
        }
    }
    None
}

/// One representative per projective point of `F_q^k`: the vectors whose
/// first nonzero coordinate is 1, in lexicographic order.
pub fn projective_reps(field: &Field, k: usize) -> Vec<Vector> {
    let q = field.order();
    let total = (q as usize).pow(k as u32);
    (1..total)
        .map(|i| decode(i, q, k))
        .filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
        .collect()
}

/// Gaussian binomial coefficient `[n choose r]_q`.
pub fn gaussian_binomial(q: u64, n: u32, r: u32) -> u128 {
    if r > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..r {
        num *= q.pow(n - i) - 1;
        den *= q.pow(i + 1) - 1;
    }
    num / den
}

/// Lazily enumerates every `r`-dimensional subspace of `F_q^n`, each given by
/// its unique reduced echelon basis. Pivot sets are visited in lexicographic
/// order, and within a pivot set the free entries count up like an odometer.
pub struct SubspaceIter {
    q: u32,
    n: usize,
    r: usize,
    pivots: Option<Vec<usize>>,
    free: Vec<(usize, usize)>,
    counter: Vec<Elem>,
    exhausted_pivots: bool,
}

impl SubspaceIter {
    pub fn new(q: u32, n: usize, r: usize) -> Self {
        let mut it = SubspaceIter {
            q,
            n,
            r,
            pivots: None,
            free: Vec::new(),
            counter: Vec::new(),
            exhausted_pivots: r > n,
        };
        if !it.exhausted_pivots {
            it.set_pivots((0..r).collect());
        }
        it
    }

    fn set_pivots(&mut self, pivots: Vec<usize>) {
        self.free = Vec::new();
        for (row, &p) in pivots.iter().enumerate() {
            for c in p + 1..self.n {
                if !pivots.contains(&c) {
                    self.free.push((row, c));
                }
            }
        }
        self.counter = vec![0; self.free.len()];
        self.pivots = Some(pivots);
    }

    fn next_pivots(&self) -> Option<Vec<usize>> {
        let mut p = self.pivots.clone()?;
        let r = self.r;
        let n = self.n;
        let mut i = r;
        while i > 0 {
            i -= 1;
            if p[i] < n - r + i {
                p[i] += 1;
                for j in i + 1..r {
                    p[j] = p[j - 1] + 1;
                }
                return Some(p);
            }
        }
        None
    }

    fn current(&self) -> Vec<Vector> {
        let pivots = self.pivots.as_ref().expect("pivots set");
        let mut rows = vec![vec![0; self.n]; self.r];
        for (row, &p) in pivots.iter().enumerate() {
            rows[row][p] = 1;
        }
        for (&(row, c), &x) in self.free.iter().zip(&self.counter) {
            rows[row][c] = x;
        }
        rows
    }
}

impl Iterator for SubspaceIter {
    type Item = Vec<Vector>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.exhausted_pivots {
            return None;
        }
        let out = self.current();
        // advance the odometer, then the pivot set
        let mut carry = true;
        for x in self.counter.iter_mut() {
            *x += 1;
            if *x == self.q {
                *x = 0;
            } else {
                carry = false;
                break;
            }
        }
        if carry {
            match self.next_pivots() {
                Some(p) => self.set_pivots(p),
                None => self.exhausted_pivots = true,
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn gf(q: u64) -> Field {
        Field::from_order(q).unwrap()
    }

    fn unit(k: usize, i: usize) -> Vector {
        let mut v = vec![0; k];
        v[i] = 1;
        v
    }

    #[test]
    fn dot_examples() {
        let f2 = gf(2);
        assert_eq!(dot(&f2, &unit(3, 0), &unit(3, 1)).unwrap(), 0);
        assert_eq!(dot(&f2, &[1, 1, 1], &[1, 1, 1]).unwrap(), 1);
        let f3 = gf(3);
        assert_eq!(dot(&f3, &[1, 2], &[2, 2]).unwrap(), 0);
        assert!(matches!(
            dot(&f3, &[1, 2], &[1]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn rank_examples() {
        let f = gf(5);
        assert_eq!(rank(&f, &Matrix::zeros(3, 4)), 0);
        assert_eq!(rank(&f, &Matrix::identity(4)), 4);
        let m = Matrix::from_rows(&[vec![1, 2, 3], vec![0, 1, 1], vec![1, 3, 4]]).unwrap();
        // row 3 = row 1 + row 2 over GF(5)
        assert_eq!(rank(&f, &m), 2);
        let multiples = Matrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 1], vec![3, 1, 4]]).unwrap();
        assert_eq!(rank(&f, &multiples), 1);
    }

    #[test]
    fn subspace_point_counts() {
        let f2 = gf(2);
        let zero = Subspace::new(&f2, 3, vec![]).unwrap();
        assert_eq!(zero.points(&f2), vec![vec![0, 0, 0]]);
        let line = Subspace::coordinate(&f2, 3, &[0]).unwrap();
        let pts: HashSet<Vector> = line.points(&f2).into_iter().collect();
        assert_eq!(pts, HashSet::from([vec![0, 0, 0], vec![1, 0, 0]]));
        let f3 = gf(3);
        let plane = Subspace::new(&f3, 3, vec![vec![1, 2, 0], vec![0, 1, 1]]).unwrap();
        assert_eq!(plane.points(&f3).len(), 9);
        assert_eq!(
            Subspace::new(&f3, 2, vec![vec![1, 2], vec![2, 1]]),
            Err(Error::DependentBasis)
        );
    }

    #[test]
    fn pairwise_trivial_examples() {
        let f = gf(3);
        let a = Subspace::coordinate(&f, 4, &[0, 1]).unwrap();
        let b = Subspace::coordinate(&f, 4, &[2]).unwrap();
        assert!(pairwise_trivial(&f, &[a.clone(), b]));
        assert!(!pairwise_trivial(&f, &[a.clone(), a]));
        for m in 3..=5 {
            let k = m + 2;
            let two = Subspace::coordinate(&f, k, &[0, 1]).unwrap();
            let big = Subspace::coordinate(&f, k, &(2..k).collect::<Vec<_>>()).unwrap();
            let ones = Subspace::new(&f, k, vec![vec![1; k]]).unwrap();
            assert!(pairwise_trivial(&f, &[ones, two, big]));
        }
    }

    #[test]
    fn projective_rep_counts() {
        let f2 = gf(2);
        let reps = projective_reps(&f2, 3);
        assert_eq!(reps.len(), 7);
        let f3 = gf(3);
        let reps = projective_reps(&f3, 2);
        assert_eq!(reps, vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![1, 2]]);
        assert_eq!(projective_reps(&gf(9), 3).len(), 91);
    }

    #[test]
    fn scalar_orbits_partition_nonzero_vectors() {
        for q in [2u64, 3, 4, 5] {
            let f = gf(q);
            let k = 3;
            let mut seen = HashSet::new();
            for rep in projective_reps(&f, k) {
                for c in 1..f.order() {
                    assert!(seen.insert(scale(&f, c, &rep)));
                }
            }
            assert_eq!(seen.len() as u64, q.pow(k as u32) - 1);
        }
    }

    #[test]
    fn null_space_is_orthogonal() {
        let f = gf(4);
        let rows = vec![vec![1, 2, 3, 0], vec![0, 1, 1, 1]];
        let ns = null_space(&f, &rows, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in &rows {
                assert_eq!(dot(&f, v, r).unwrap(), 0);
            }
        }
        assert_eq!(rank_of(&f, &ns), 2);
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(2, 3, 2), 7);
        assert_eq!(gaussian_binomial(2, 4, 2), 35);
        assert_eq!(gaussian_binomial(3, 4, 1), 40);
        assert_eq!(gaussian_binomial(5, 3, 0), 1);
    }

    #[test]
    fn subspace_iter_matches_gaussian_binomial() {
        for q in [2u64, 3, 4] {
            let f = gf(q);
            for n in 1..=4usize {
                for r in 0..=n {
                    let all: Vec<_> = SubspaceIter::new(f.order(), n, r).collect();
                    assert_eq!(all.len() as u128, gaussian_binomial(q, n as u32, r as u32));
                    // distinct subspaces: compare point sets
                    let sets: HashSet<Vec<usize>> = all
                        .iter()
                        .map(|b| {
                            let mut pts: Vec<usize> = span_points(&f, b, n)
                                .iter()
                                .map(|p| encode(p, f.order()))
                                .collect();
                            pts.sort();
                            pts
                        })
                        .collect();
                    assert_eq!(sets.len(), all.len());
                    assert!(all.iter().all(|b| rank_of(&f, b) == r));
                }
            }
        }
    }

    // brute force: rank = log_q of the number of distinct row combinations
    fn brute_rank(f: &Field, m: &Matrix) -> usize {
        let q = f.order();
        let rows = m.row_vectors();
        let mut set = HashSet::new();
        for idx in 0..(q as usize).pow(rows.len() as u32) {
            let c = decode(idx, q, rows.len());
            let mut v = vec![0; m.cols()];
            for (&ci, r) in c.iter().zip(&rows) {
                axpy(f, &mut v, ci, r);
            }
            set.insert(v);
        }
        let mut r = 0;
        let mut size = 1usize;
        while size < set.len() {
            size *= q as usize;
            r += 1;
        }
        r
    }

    proptest! {
        #[test]
        fn rank_matches_brute_force(
            q in prop::sample::select(vec![2u64, 3]),
            rows in 1usize..=4,
            cols in 1usize..=4,
            seed in prop::collection::vec(0u32..3, 16),
        ) {
            let f = gf(q);
            let entries: Vec<Vector> = (0..rows)
                .map(|i| (0..cols).map(|j| seed[i * 4 + j] % f.order()).collect())
                .collect();
            let m = Matrix::from_rows(&entries).unwrap();
            prop_assert_eq!(rank(&f, &m), brute_rank(&f, &m));
        }

        #[test]
        fn encode_decode_round_trip(q in 2u32..10, k in 1usize..5, idx in 0usize..10000) {
            let idx = idx % (q as usize).pow(k as u32);
            prop_assert_eq!(encode(&decode(idx, q, k), q), idx);
        }

        #[test]
        fn membership_agrees_with_point_set(
            q in prop::sample::select(vec![2u64, 3, 4]),
            seed in prop::collection::vec(0u32..4, 8),
            probe in prop::collection::vec(0u32..4, 4),
        ) {
            let f = gf(q);
            let qq = f.order();
            let mut basis = vec![
                seed[..4].iter().map(|x| x % qq).collect::<Vector>(),
                seed[4..].iter().map(|x| x % qq).collect::<Vector>(),
            ];
            rref(&f, &mut basis);
            let s = Subspace::new(&f, 4, basis).unwrap();
            prop_assert_eq!(s.points(&f).len(), (qq as usize).pow(s.dim() as u32));
            let v: Vector = probe.iter().map(|x| x % qq).collect();
            prop_assert_eq!(s.contains(&f, &v), s.points(&f).contains(&v));
        }
    }
}
