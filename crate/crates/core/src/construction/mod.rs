//! Generator matrices for affine, modified affine and projective
//! Solomon-Stiffler codes, and codes derived from them.
//!
//! An affine Solomon-Stiffler code over GF(q) with parameters `(k, u)` takes
//! as columns every nonzero vector of `F_q^k` except the nonzero points of `h`
//! pairwise trivially intersecting subspaces of dimensions `u_1 <= ... <= u_h`.
//! The modified variant keeps, for each surviving projective point `v`, only
//! the columns `lambda * v` with `lambda` in the order-`e` subgroup of `F_q^*`.

mod build;
mod derived;
mod select;

use std::sync::Arc;

pub use build::{affine_ss, lines_code, modified_affine_ss, projective_lines_code};
pub use derived::{
    min_weight_support, min_weight_support_with_limit, puncture, puncture_canonical,
    repetition_copy, subcodes, MinWeightWord, Subcodes,
};
pub use select::select_subspaces;

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::linalg::{self, Matrix, Subspace};

/// Parameters `(q, k, u, e)` of a (modified) affine Solomon-Stiffler code,
/// optionally with explicit subspace bases.
#[derive(Debug, Clone)]
pub struct SSParams {
    field: Arc<Field>,
    k: usize,
    u: Vec<usize>,
    e: u32,
    bases: Option<Vec<Subspace>>,
}

impl SSParams {
    /// Validates `(k, u)` with `e = q - 1`.
    pub fn new(field: Arc<Field>, k: usize, u: Vec<usize>) -> Result<Self> {
        if k < 2 {
            return Err(Error::DimensionTooSmall(k));
        }
        if u.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::UnsortedDims(u));
        }
        if let Some(&bad) = u.iter().find(|&&ui| ui == 0 || ui >= k) {
            return Err(Error::DimOutOfRange { u: bad, k });
        }
        let q = u64::from(field.order());
        let deleted = u.iter().try_fold(0u64, |acc, &ui| {
            acc.checked_add(q.checked_pow(ui as u32)? - 1)
        });
        let limit =
            q.checked_pow(k as u32)
                .map(|qk| qk - qk / q)
                .ok_or(Error::EnumerationGuard {
                    size: u64::MAX,
                    limit: u64::MAX,
                })?;
        match deleted {
            Some(d) if d < limit => {}
            d => {
                return Err(Error::DeletionTooLarge {
                    deleted: d.unwrap_or(u64::MAX),
                    limit,
                })
            }
        }
        let e = field.order() - 1;
        Ok(SSParams {
            field,
            k,
            u,
            e,
            bases: None,
        })
    }

    /// Sets the subgroup order used by the modified construction.
    pub fn with_e(mut self, e: u32) -> Result<Self> {
        let group_order = self.field.order() - 1;
        if e == 0 || !group_order.is_multiple_of(e) {
            return Err(Error::SubgroupOrder { e, group_order });
        }
        self.e = e;
        Ok(self)
    }

    /// Supplies explicit subspaces, one per entry of `u` in the same order.
    pub fn with_bases(mut self, bases: Vec<Subspace>) -> Result<Self> {
        if bases.len() != self.u.len() {
            return Err(Error::BasisCount {
                expected: self.u.len(),
                found: bases.len(),
            });
        }
        for (index, (b, &ui)) in bases.iter().zip(&self.u).enumerate() {
            if b.ambient_dim() != self.k {
                return Err(Error::LengthMismatch {
                    expected: self.k,
                    found: b.ambient_dim(),
                });
            }
            if b.dim() != ui {
                return Err(Error::BasisDimension {
                    index,
                    expected: ui,
                    found: b.dim(),
                });
            }
        }
        if let Some((i, j)) = linalg::first_intersecting_pair(&self.field, &bases) {
            return Err(Error::SubspacesIntersect(i, j));
        }
        self.bases = Some(bases);
        Ok(self)
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn q(&self) -> u32 {
        self.field.order()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn u(&self) -> &[usize] {
        &self.u
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn bases(&self) -> Option<&[Subspace]> {
        self.bases.as_deref()
    }

    pub fn shape(&self) -> ShapeRecord {
        ShapeRecord::from_dims(&self.u)
    }

    /// `sum(q^u_i - 1)`, the number of deleted nonzero vectors.
    pub fn deleted(&self) -> u64 {
        let q = u64::from(self.q());
        self.u.iter().map(|&ui| q.pow(ui as u32) - 1).sum()
    }

    /// Code length `e (q^k - 1 - sum(q^u_i - 1)) / (q - 1)`.
    pub fn length(&self) -> u64 {
        let q = u64::from(self.q());
        u64::from(self.e) * (q.pow(self.k as u32) - 1 - self.deleted()) / (q - 1)
    }

    /// Lower bound `e (q^(k-1) - sum q^(u_i - 1))` on the minimum distance.
    pub fn distance_bound(&self) -> u64 {
        let q = u64::from(self.q());
        let sub: u64 = self.u.iter().map(|&ui| q.pow(ui as u32 - 1)).sum();
        u64::from(self.e) * (q.pow(self.k as u32 - 1) - sub)
    }
}

/// Multiplicities of the distinct values in `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeRecord {
    /// Distinct dimensions, ascending.
    pub values: Vec<usize>,
    /// `s_j`: how many subspaces have dimension `values[j]`.
    pub s: Vec<usize>,
    /// Number of distinct dimensions.
    pub t: usize,
    /// `sum(s_j - 1) = h - t`.
    pub g: usize,
}

impl ShapeRecord {
    pub fn from_dims(u: &[usize]) -> Self {
        let mut values: Vec<usize> = Vec::new();
        let mut s: Vec<usize> = Vec::new();
        for &x in u {
            match values.last() {
                Some(&last) if last == x => *s.last_mut().unwrap() += 1,
                _ => {
                    values.push(x);
                    s.push(1);
                }
            }
        }
        let t = values.len();
        ShapeRecord {
            g: u.len() - t,
            values,
            s,
            t,
        }
    }
}

/// How a code was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Derivation {
    Affine { k: usize, u: Vec<usize> },
    Modified { k: usize, u: Vec<usize>, e: u32 },
    Lines { k: usize, h: usize, e: u32 },
    Repetition { copies: usize },
    Subcode { codim: usize, index: usize },
    Puncture { position: usize },
    Imported,
}

/// A linear `[n, k]_q` code given by a full-rank generator matrix.
#[derive(Debug, Clone)]
pub struct LinearCode {
    field: Arc<Field>,
    generator: Matrix,
    provenance: Vec<Derivation>,
}

impl LinearCode {
    /// Wraps `generator` after checking its entries and that it has full row rank.
    pub fn new(field: Arc<Field>, generator: Matrix) -> Result<Self> {
        if generator.rows() == 0 {
            return Err(Error::EmptyCode);
        }
        for i in 0..generator.rows() {
            for &x in generator.row(i) {
                field.check(u64::from(x))?;
            }
        }
        let rank = linalg::rank(&field, &generator);
        if rank != generator.rows() {
            return Err(Error::RankDeficient {
                rank,
                expected: generator.rows(),
            });
        }
        Ok(LinearCode {
            field,
            generator,
            provenance: vec![Derivation::Imported],
        })
    }

    pub(crate) fn derived(mut self, parent: &[Derivation], step: Derivation) -> Self {
        self.provenance = parent.to_vec();
        if self.provenance == [Derivation::Imported] && step != Derivation::Imported {
            self.provenance.clear();
        }
        self.provenance.push(step);
        self
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn field_arc(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn q(&self) -> u32 {
        self.field.order()
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn provenance(&self) -> &[Derivation] {
        &self.provenance
    }

    /// `mG` for a message `m` of length `k`.
    pub fn encode(&self, message: &[u32]) -> Result<Vec<u32>> {
        if message.len() != self.k() {
            return Err(Error::LengthMismatch {
                expected: self.k(),
                found: message.len(),
            });
        }
        Ok(self.generator.left_mul(&self.field, message))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u64) -> Arc<Field> {
        Arc::new(Field::from_order(q).unwrap())
    }

    #[test]
    fn shape_record() {
        let s = ShapeRecord::from_dims(&[1, 1, 3, 5, 5, 5]);
        assert_eq!(s.values, vec![1, 3, 5]);
        assert_eq!(s.s, vec![2, 1, 3]);
        assert_eq!(s.t, 3);
        assert_eq!(s.g, 3);
        assert_eq!(s.s.iter().sum::<usize>(), 6);
        let empty = ShapeRecord::from_dims(&[]);
        assert_eq!((empty.t, empty.g), (0, 0));
    }

    #[test]
    fn parameter_validation() {
        let f = gf(2);
        // 4 * (2 - 1) = 4 is not < 2^3 - 2^2 = 4
        assert_eq!(
            SSParams::new(f.clone(), 3, vec![1, 1, 1, 1]).unwrap_err(),
            Error::DeletionTooLarge {
                deleted: 4,
                limit: 4
            }
        );
        assert!(SSParams::new(f.clone(), 3, vec![1, 1, 1]).is_ok());
        assert_eq!(
            SSParams::new(f.clone(), 3, vec![2, 1]).unwrap_err(),
            Error::UnsortedDims(vec![2, 1])
        );
        assert_eq!(
            SSParams::new(f.clone(), 3, vec![3]).unwrap_err(),
            Error::DimOutOfRange { u: 3, k: 3 }
        );
        assert_eq!(
            SSParams::new(f, 1, vec![]).unwrap_err(),
            Error::DimensionTooSmall(1)
        );
        let f7 = gf(7);
        let p = SSParams::new(f7, 3, vec![1]).unwrap();
        assert!(p.clone().with_e(2).is_ok());
        assert!(matches!(p.with_e(4), Err(Error::SubgroupOrder { .. })));
    }

    #[test]
    fn closed_form_lengths() {
        let p = SSParams::new(gf(3), 4, vec![2, 2]).unwrap();
        assert_eq!(p.length(), 64);
        assert_eq!(p.distance_bound(), 42);
        let p = SSParams::new(gf(9), 3, vec![1, 1, 1])
            .unwrap()
            .with_e(1)
            .unwrap();
        assert_eq!(p.length(), 88);
        assert_eq!(p.distance_bound(), 78);
    }

    #[test]
    fn bases_are_validated() {
        let f = gf(3);
        let p = SSParams::new(f.clone(), 4, vec![1, 2]).unwrap();
        let line = Subspace::coordinate(&f, 4, &[0]).unwrap();
        let plane = Subspace::coordinate(&f, 4, &[0, 1]).unwrap();
        assert_eq!(
            p.clone()
                .with_bases(vec![line.clone(), plane.clone()])
                .unwrap_err(),
            Error::SubspacesIntersect(0, 1)
        );
        assert!(matches!(
            p.clone().with_bases(vec![plane.clone(), line.clone()]),
            Err(Error::BasisDimension { index: 0, .. })
        ));
        let other = Subspace::coordinate(&f, 4, &[2, 3]).unwrap();
        assert!(p.with_bases(vec![line, other]).is_ok());
    }
}
