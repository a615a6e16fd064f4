//! Named infinite families of (modified) affine Solomon-Stiffler codes and
//! their exact weight distributions.
//!
//! Every family here deletes subspaces that sit on disjoint coordinate
//! blocks, so the weight of the codeword of a functional `x` depends only on
//! the set `J` of blocks on which `x` does not vanish:
//!
//! `wt = e (q^(k-1) - sum_{i in J} q^(u_i - 1))`
//!
//! and exactly `prod_{i in J} (q^u_i - 1) * q^(k - sum u)` functionals
//! (less the zero functional when `J` is empty) share that `J`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::construction::{affine_ss, modified_affine_ss, LinearCode, SSParams};
use crate::error::{Error, Result};
use crate::gf::Field;

use super::griesmer::{griesmer_defect, OptimalityReport};
use super::weights::{
    weight_distribution_enum, weight_distribution_hyperplane, WeightDistribution,
};

/// Exact distribution of a code whose deleted subspaces form a direct sum,
/// e.g. disjoint coordinate blocks. Requires `sum u <= k`.
pub fn direct_sum_wdist(q: u32, k: usize, u: &[usize], e: u32) -> Result<WeightDistribution> {
    let used: usize = u.iter().sum();
    if used > k {
        return Err(Error::FamilyConstraint(format!(
            "blocks of total dimension {used} do not fit in dimension {k}"
        )));
    }
    let qq = u64::from(q);
    let e = u64::from(e);
    let deleted: u64 = u.iter().map(|&ui| qq.pow(ui as u32) - 1).sum();
    let n = e * (qq.pow(k as u32) - 1 - deleted) / (qq - 1);
    let free = qq.pow((k - used) as u32);

    let mut counts = BTreeMap::new();
    counts.insert(0usize, 1u64);
    for mask in 0u32..(1 << u.len()) {
        let mut reduce = 0;
        let mut count = free;
        for (i, &ui) in u.iter().enumerate() {
            if mask & (1 << i) != 0 {
                reduce += qq.pow(ui as u32 - 1);
                count *= qq.pow(ui as u32) - 1;
            }
        }
        if mask == 0 {
            count -= 1;
        }
        if count > 0 {
            let w = e * (qq.pow(k as u32 - 1) - reduce);
            *counts.entry(w as usize).or_insert(0) += count;
        }
    }
    Ok(WeightDistribution {
        q,
        n: n as usize,
        k,
        counts,
    })
}

/// A family instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    /// `(2m, (m, m))`, two weights.
    TwoEqual { q: u32, m: usize },
    /// `(3m, (m, m, m))`, three weights.
    ThreeEqual { q: u32, m: usize },
    /// `(3m + 1, (m, m, m + 1))`, five weights (four when `q = 2`).
    PairAndNext { q: u32, m: usize },
    /// `(2m + 1, (m, m + 1))`, three weights.
    Consecutive { q: u32, m: usize },
    /// Modified `(2m, (m, m))` with subgroup order `e`.
    ModifiedTwoEqual { q: u32, m: usize, e: u32 },
    /// Modified `(3m, (m, m, m))` with `2e < q`.
    ModifiedThreeEqual { q: u32, m: usize, e: u32 },
    /// Modified `(hm, (m, ..., m))` with `e (h - 1) < q`.
    ModifiedEqualBlocks { q: u32, m: usize, h: usize, e: u32 },
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::TwoEqual { q, m } => write!(f, "two-equal(q={q}, m={m})"),
            FamilySpec::ThreeEqual { q, m } => write!(f, "three-equal(q={q}, m={m})"),
            FamilySpec::PairAndNext { q, m } => write!(f, "pair-and-next(q={q}, m={m})"),
            FamilySpec::Consecutive { q, m } => write!(f, "consecutive(q={q}, m={m})"),
            FamilySpec::ModifiedTwoEqual { q, m, e } => {
                write!(f, "modified-two-equal(q={q}, m={m}, e={e})")
            }
            FamilySpec::ModifiedThreeEqual { q, m, e } => {
                write!(f, "modified-three-equal(q={q}, m={m}, e={e})")
            }
            FamilySpec::ModifiedEqualBlocks { q, m, h, e } => {
                write!(f, "modified-equal-blocks(q={q}, m={m}, h={h}, e={e})")
            }
        }
    }
}

fn constraint(msg: String) -> Error {
    Error::FamilyConstraint(msg)
}

impl FamilySpec {
    pub fn q(&self) -> u32 {
        match *self {
            FamilySpec::TwoEqual { q, .. }
            | FamilySpec::ThreeEqual { q, .. }
            | FamilySpec::PairAndNext { q, .. }
            | FamilySpec::Consecutive { q, .. }
            | FamilySpec::ModifiedTwoEqual { q, .. }
            | FamilySpec::ModifiedThreeEqual { q, .. }
            | FamilySpec::ModifiedEqualBlocks { q, .. } => q,
        }
    }

    /// `(k, u, e)` of the underlying construction.
    pub fn shape(&self) -> (usize, Vec<usize>, u32) {
        let full = self.q() - 1;
        match *self {
            FamilySpec::TwoEqual { m, .. } => (2 * m, vec![m, m], full),
            FamilySpec::ThreeEqual { m, .. } => (3 * m, vec![m, m, m], full),
            FamilySpec::PairAndNext { m, .. } => (3 * m + 1, vec![m, m, m + 1], full),
            FamilySpec::Consecutive { m, .. } => (2 * m + 1, vec![m, m + 1], full),
            FamilySpec::ModifiedTwoEqual { m, e, .. } => (2 * m, vec![m, m], e),
            FamilySpec::ModifiedThreeEqual { m, e, .. } => (3 * m, vec![m, m, m], e),
            FamilySpec::ModifiedEqualBlocks { m, h, e, .. } => (h * m, vec![m; h], e),
        }
    }

    /// Checks the family's own hypotheses on top of [`SSParams`] validity.
    pub fn validate(&self) -> Result<SSParams> {
        let q = self.q();
        let (k, u, e) = self.shape();
        if u.contains(&0) {
            return Err(constraint(format!("{self}: m must be at least 1")));
        }
        match *self {
            FamilySpec::TwoEqual { q, .. } if q < 3 => {
                return Err(constraint(format!("{self}: requires q >= 3")))
            }
            FamilySpec::ModifiedThreeEqual { q, e, .. } if q <= 3 || 2 * e >= q => {
                return Err(constraint(format!("{self}: requires q > 3 and 2e < q")))
            }
            FamilySpec::ModifiedEqualBlocks { q, h, e, .. }
                if q <= 2 || h == 0 || e as usize * (h - 1) >= q as usize =>
            {
                return Err(constraint(format!(
                    "{self}: requires q > 2 and e(h - 1) < q"
                )))
            }
            _ => {}
        }
        let field = Arc::new(Field::from_order(u64::from(q))?);
        SSParams::new(field, k, u)?.with_e(e)
    }

    pub fn construct(&self) -> Result<LinearCode> {
        let params = self.validate()?;
        if params.e() == params.q() - 1 {
            affine_ss(&params)
        } else {
            modified_affine_ss(&params)
        }
    }

    /// Exact weight distribution. For `PairAndNext` with `q = 2` two weights coincide
    /// and their counts are merged automatically.
    pub fn closed_form_wdist(&self) -> Result<WeightDistribution> {
        let params = self.validate()?;
        direct_sum_wdist(params.q(), params.k(), params.u(), params.e())
    }

    /// Minimum distance `e (q^(k-1) - sum q^(u_i - 1))`, attained by these families.
    pub fn distance(&self) -> Result<u64> {
        Ok(self.validate()?.distance_bound())
    }

    /// Griesmer defect claimed for the family, where one is stated.
    pub fn claimed_defect(&self) -> Option<u64> {
        match *self {
            FamilySpec::TwoEqual { .. } => Some(1),
            FamilySpec::ThreeEqual { .. } => Some(2),
            FamilySpec::PairAndNext { q: 2, m: 2 } => Some(2),
            FamilySpec::PairAndNext { .. } => None,
            FamilySpec::Consecutive { .. } => Some(0),
            FamilySpec::ModifiedTwoEqual { .. }
            | FamilySpec::ModifiedThreeEqual { .. }
            | FamilySpec::ModifiedEqualBlocks { .. } => Some(0),
        }
    }
}

/// Result of comparing the closed form with both enumeration engines.
#[derive(Debug, Clone)]
pub struct FamilyReport {
    pub family: FamilySpec,
    pub closed_form: WeightDistribution,
    pub enumerated: WeightDistribution,
    pub hyperplane: WeightDistribution,
    /// `(weight, closed form, enumerated, hyperplane)` wherever they differ.
    pub mismatches: Vec<(usize, u64, u64, u64)>,
    pub optimality: OptimalityReport,
}

impl FamilyReport {
    pub fn matches(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn defect_matches_claim(&self) -> Option<bool> {
        self.family
            .claimed_defect()
            .map(|d| d == self.optimality.defect)
    }
}

pub fn verify_family(family: FamilySpec) -> Result<FamilyReport> {
    let code = family.construct()?;
    let closed_form = family.closed_form_wdist()?;
    let enumerated = weight_distribution_enum(&code)?;
    let hyperplane = weight_distribution_hyperplane(&code)?;

    let mut weights: Vec<usize> = closed_form
        .counts
        .keys()
        .chain(enumerated.counts.keys())
        .chain(hyperplane.counts.keys())
        .copied()
        .collect();
    weights.sort_unstable();
    weights.dedup();
    let mismatches = weights
        .into_iter()
        .map(|w| {
            (
                w,
                closed_form.count(w),
                enumerated.count(w),
                hyperplane.count(w),
            )
        })
        .filter(|&(_, a, b, c)| a != b || b != c)
        .collect();

    let d = enumerated.min_distance().unwrap_or(0) as u64;
    let optimality = griesmer_defect(&code, d)?;
    Ok(FamilyReport {
        family,
        closed_form,
        enumerated,
        hyperplane,
        mismatches,
        optimality,
    })
}
