use std::fmt;

use crate::construction::{LinearCode, ShapeRecord};
use crate::error::{Error, Result};

use super::table::BestKnownTable;

/// `sum_{i<k} ceil(d / q^i)`.
pub fn griesmer_sum(q: u64, k: usize, d: u64) -> u64 {
    let mut total = 0;
    let mut power: u64 = 1;
    for i in 0..k {
        if power >= d {
            // every remaining term is ceil(d / q^i) = 1 (or 0 when d = 0)
            return total + (k - i) as u64 * u64::from(d > 0);
        }
        total += d.div_ceil(power);
        power = power.saturating_mul(q);
    }
    total
}

/// True iff no `[n, k, d + 1]_q` code can satisfy the Griesmer bound.
pub fn classify_distance_optimal(q: u64, n: u64, k: usize, d: u64) -> bool {
    griesmer_sum(q, k, d + 1) > n
}

/// Position on the Griesmer ladder.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GriesmerClass {
    Griesmer,
    DistanceOptimal,
    Defect(u64),
}

impl fmt::Display for GriesmerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GriesmerClass::Griesmer => write!(f, "griesmer"),
            GriesmerClass::DistanceOptimal => write!(f, "griesmer-distance-optimal"),
            GriesmerClass::Defect(r) => write!(f, "defect-{r}"),
        }
    }
}

/// Comparison against a best-known distance table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableClass {
    Optimal,
    AlmostOptimal,
    NearOptimal,
    Unknown,
}

impl fmt::Display for TableClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableClass::Optimal => "table-optimal",
            TableClass::AlmostOptimal => "table-almost-optimal",
            TableClass::NearOptimal => "table-near-optimal",
            TableClass::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableVerdict {
    pub class: TableClass,
    pub best: Option<u64>,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalityReport {
    pub q: u64,
    pub n: u64,
    pub k: usize,
    pub d: u64,
    pub griesmer_sum: u64,
    pub defect: u64,
    pub class: GriesmerClass,
    pub table: Option<TableVerdict>,
}

impl fmt::Display for OptimalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{},{}]_{}: griesmer sum {}, defect {}, {}",
            self.n, self.k, self.d, self.q, self.griesmer_sum, self.defect, self.class
        )?;
        if let Some(t) = &self.table {
            match t.best {
                Some(best) => write!(f, ", {} (best known d = {best}, {})", t.class, t.source)?,
                None => write!(f, ", {} ({})", t.class, t.source)?,
            }
        }
        Ok(())
    }
}

/// Classifies an `[n, k, d]_q` code. Fails if the parameters violate the
/// Griesmer bound, since then no such code exists.
pub fn optimality_report(
    q: u64,
    n: u64,
    k: usize,
    d: u64,
    table: Option<&BestKnownTable>,
) -> Result<OptimalityReport> {
    let g = griesmer_sum(q, k, d);
    if n < g {
        return Err(Error::GriesmerViolation { n, bound: g });
    }
    let defect = n - g;
    let class = if defect == 0 {
        GriesmerClass::Griesmer
    } else if classify_distance_optimal(q, n, k, d) {
        GriesmerClass::DistanceOptimal
    } else {
        GriesmerClass::Defect(defect)
    };
    let table = table.map(|t| {
        let best = t.lookup(q, n, k as u64);
        let class = match best {
            Some(b) if d >= b => TableClass::Optimal,
            Some(b) if d + 1 == b => TableClass::AlmostOptimal,
            Some(b) if d + 2 == b => TableClass::NearOptimal,
            _ => TableClass::Unknown,
        };
        TableVerdict {
            class,
            best,
            source: t.source().to_string(),
        }
    });
    Ok(OptimalityReport {
        q,
        n,
        k,
        d,
        griesmer_sum: g,
        defect,
        class,
        table,
    })
}

/// Report for `code` given its (enumerated) minimum distance `d`.
pub fn griesmer_defect(code: &LinearCode, d: u64) -> Result<OptimalityReport> {
    optimality_report(u64::from(code.q()), code.n() as u64, code.k(), d, None)
}

/// Which of the three defect bounds applies to a dimension list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DefectCase {
    /// Strictly increasing dimensions: the code is Griesmer.
    StrictlyIncreasing,
    /// All `h` dimensions equal with `h <= q`: defect at most `h - 1`.
    AllEqual,
    /// At least two distinct values, consecutive ones at least 2 apart:
    /// defect at most `sum(s_j - 1)`.
    SeparatedRuns,
}

/// The defect bound for an affine code with ascending dimensions `u`, or
/// `None` when no case applies.
pub fn defect_upper_bound(q: u64, u: &[usize]) -> Option<(DefectCase, u64)> {
    if u.windows(2).all(|w| w[0] < w[1]) {
        return Some((DefectCase::StrictlyIncreasing, 0));
    }
    let shape = ShapeRecord::from_dims(u);
    let h = u.len() as u64;
    if shape.t == 1 {
        return (h <= q).then_some((DefectCase::AllEqual, h - 1));
    }
    if shape.values.windows(2).all(|w| w[1] >= w[0] + 2) {
        return Some((DefectCase::SeparatedRuns, shape.g as u64));
    }
    None
}
