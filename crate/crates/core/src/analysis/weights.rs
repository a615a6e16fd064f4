use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::construction::LinearCode;
use crate::enumerate::{check_guard, weight_histogram, DEFAULT_ENUM_LIMIT};
use crate::error::{Error, Result};
use crate::linalg::{dot_unchecked, projective_reps, Vector};

/// Number of codewords of each Hamming weight. Only nonzero counts are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub counts: BTreeMap<usize, u64>,
}

impl WeightDistribution {
    pub fn from_histogram(q: u32, n: usize, k: usize, hist: &[u64]) -> Self {
        let counts = hist
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(w, &c)| (w, c))
            .collect();
        WeightDistribution { q, n, k, counts }
    }

    pub fn count(&self, weight: usize) -> u64 {
        self.counts.get(&weight).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u128 {
        self.counts.values().map(|&c| u128::from(c)).sum()
    }

    pub fn min_distance(&self) -> Option<usize> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    pub fn nonzero_weights(&self) -> Vec<usize> {
        self.counts.keys().copied().filter(|&w| w > 0).collect()
    }

    /// The nonzero part as `(weight, count)` pairs.
    pub fn nonzero(&self) -> BTreeMap<usize, u64> {
        self.counts
            .iter()
            .filter(|(&w, _)| w > 0)
            .map(|(&w, &c)| (w, c))
            .collect()
    }

    /// Checks `A_0 = 1`, `sum A_w = q^k`, `w <= n` and `(q - 1) | A_w` for `w > 0`.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        if self.count(0) != 1 {
            return Err(format!("A_0 = {}, expected 1", self.count(0)));
        }
        let expected = u128::from(self.q).pow(self.k as u32);
        if self.total() != expected {
            return Err(format!(
                "counts sum to {}, expected {expected}",
                self.total()
            ));
        }
        if let Some((&w, _)) = self.counts.iter().next_back().filter(|(&w, _)| w > self.n) {
            return Err(format!("weight {w} exceeds length {}", self.n));
        }
        let unit = u64::from(self.q - 1);
        if let Some((w, c)) = self.counts.iter().find(|(&w, &c)| w > 0 && c % unit != 0) {
            return Err(format!("A_{w} = {c} is not divisible by q - 1 = {unit}"));
        }
        Ok(())
    }

    /// `{"q": .., "n": .., "k": .., "weights": {"0": 1, ...}}`, keys ascending.
    pub fn to_json(&self) -> Value {
        let mut weights = Map::new();
        for (w, c) in &self.counts {
            weights.insert(w.to_string(), json!(c));
        }
        json!({ "q": self.q, "n": self.n, "k": self.k, "weights": weights })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |message: &str| Error::Parse {
            line: 1,
            message: message.to_string(),
        };
        let field = |name: &str| {
            value
                .get(name)
                .and_then(Value::as_u64)
                .ok_or_else(|| bad(&format!("missing or invalid field {name:?}")))
        };
        let q = u32::try_from(field("q")?).map_err(|_| bad("q out of range"))?;
        let n = field("n")? as usize;
        let k = field("k")? as usize;
        let weights = value
            .get("weights")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("missing or invalid field \"weights\""))?;
        let mut counts = BTreeMap::new();
        for (w, c) in weights {
            let w: usize = w
                .parse()
                .map_err(|_| bad(&format!("bad weight key {w:?}")))?;
            let c = c
                .as_u64()
                .ok_or_else(|| bad(&format!("bad count for weight {w}")))?;
            if c > 0 {
                counts.insert(w, c);
            }
        }
        Ok(WeightDistribution { q, n, k, counts })
    }
}

/// Distribution from enumerating all `q^k` messages.
pub fn weight_distribution_enum(code: &LinearCode) -> Result<WeightDistribution> {
    weight_distribution_enum_with_limit(code, DEFAULT_ENUM_LIMIT)
}

pub fn weight_distribution_enum_with_limit(
    code: &LinearCode,
    limit: u64,
) -> Result<WeightDistribution> {
    let hist = weight_histogram(code, limit)?;
    Ok(WeightDistribution::from_histogram(
        code.q(),
        code.n(),
        code.k(),
        &hist,
    ))
}

/// Distribution from the functionals: the codeword of `x` has weight
/// `n - #{columns s : x . s = 0}`, and the `q - 1` nonzero multiples of `x`
/// share that weight.
pub fn weight_distribution_hyperplane(code: &LinearCode) -> Result<WeightDistribution> {
    weight_distribution_hyperplane_with_limit(code, DEFAULT_ENUM_LIMIT)
}

pub fn weight_distribution_hyperplane_with_limit(
    code: &LinearCode,
    limit: u64,
) -> Result<WeightDistribution> {
    let q = code.q();
    let k = code.k();
    let n = code.n();
    check_guard(q, k, limit)?;
    let field = code.field();

    let mut multiplicity: HashMap<Vector, u64> = HashMap::new();
    for column in code.generator().columns() {
        *multiplicity.entry(column).or_insert(0) += 1;
    }
    let distinct: Vec<(Vector, u64)> = {
        let mut v: Vec<_> = multiplicity.into_iter().collect();
        v.sort();
        v
    };

    let reps = projective_reps(field, k);
    let per_rep: Vec<usize> = reps
        .par_iter()
        .map(|x| {
            let on_hyperplane: u64 = distinct
                .iter()
                .filter(|(s, _)| dot_unchecked(field, x, s) == 0)
                .map(|(_, m)| m)
                .sum();
            n - on_hyperplane as usize
        })
        .collect();

    let mut counts = BTreeMap::new();
    counts.insert(0, 1);
    for w in per_rep {
        *counts.entry(w).or_insert(0) += u64::from(q - 1);
    }
    Ok(WeightDistribution { q, n, k, counts })
}
