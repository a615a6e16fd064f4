//! Regression checks: rebuild transcribed codes and compare measured
//! parameters, distributions and optimality claims.

use std::fmt;
use std::sync::Arc;

use affine_ss::analysis::{
    classify_distance_optimal, defect_upper_bound, find_avoiding_functional, griesmer_defect,
    griesmer_sum, verify_family, weight_distribution_enum, weight_distribution_hyperplane,
    FamilySpec,
};
use affine_ss::construction::{
    affine_ss, lines_code, modified_affine_ss, puncture_canonical, repetition_copy, subcodes,
    LinearCode, SSParams,
};
use affine_ss::enumerate::DEFAULT_ENUM_LIMIT;
use affine_ss::gf::Field;
use affine_ss::linalg::Vector;
use anyhow::{Context, Result};

use crate::data::{self, CodeRow};

/// One checked claim.
#[derive(Debug, Clone)]
pub struct Check {
    pub label: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(label: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            label: label.into(),
            pass,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.label, self.detail)
    }
}

pub fn field(q: u64) -> Result<Arc<Field>> {
    Ok(Arc::new(Field::from_order(q)?))
}

/// Exact minimum distance by enumeration.
pub fn min_distance(code: &LinearCode) -> Result<u64> {
    let dist = weight_distribution_enum(code)?;
    Ok(dist
        .min_distance()
        .context("code has no nonzero codeword")? as u64)
}

fn fmt_code(code: &LinearCode, d: u64) -> String {
    format!("[{},{},{}]_{}", code.n(), code.k(), d, code.q())
}

/// Builds a transcribed row: (modified) affine code, then repetition, then
/// canonical punctures.
pub fn realize(row: &CodeRow) -> Result<LinearCode> {
    let mut params = SSParams::new(field(row.q)?, row.ambient, row.u.clone())?;
    if let Some(e) = row.e {
        params = params.with_e(e)?;
    }
    let mut code = if params.e() == params.q() - 1 {
        affine_ss(&params)?
    } else {
        modified_affine_ss(&params)?
    };
    if row.copies > 1 {
        code = repetition_copy(&code, row.copies)?;
    }
    for _ in 0..row.punctures {
        code = puncture_canonical(&code)?.0;
    }
    Ok(code)
}

fn row_check(prefix: &str, row: &CodeRow) -> Result<Check> {
    let label = format!("{prefix} row {} q={} {}", row.row, row.q, row.ku());
    let code = match realize(row) {
        Ok(c) => c,
        Err(e) => {
            return Ok(Check::new(
                label,
                false,
                format!("construction failed: {e}"),
            ))
        }
    };
    let d = min_distance(&code)?;
    let report = griesmer_defect(&code, d)?;
    let pass = (code.n() as u64, code.k(), d) == (row.n, row.k, row.d);
    let mut detail = format!(
        "expected {}, measured {} ({}, defect {})",
        row.printed(),
        fmt_code(&code, d),
        report.class,
        report.defect
    );
    if let Some(e) = row.e {
        detail.push_str(&format!(
            "; e={e} copies={} punctures={}",
            row.copies, row.punctures
        ));
    }
    if !row.label.is_empty() {
        detail.push_str(&format!("; printed label: {}", row.label));
    }
    Ok(Check::new(label, pass, detail))
}

pub fn affine_rows() -> Result<Vec<Check>> {
    data::affine_rows()?
        .iter()
        .map(|r| row_check("affine", r))
        .collect()
}

pub fn modified_rows() -> Result<Vec<Check>> {
    let mut out: Vec<Check> = data::modified_rows()?
        .iter()
        .map(|r| row_check("modified", r))
        .collect::<Result<_>>()?;
    for r in data::modified_examples()? {
        out.push(row_check("modified-example", &r)?);
    }
    Ok(out)
}

/// Family instances checked by `reproduce --table families`.
pub fn family_grid() -> Vec<FamilySpec> {
    let mut grid = Vec::new();
    for q in [3, 4, 5] {
        for m in 1..=2 {
            grid.push(FamilySpec::TwoEqual { q, m });
        }
    }
    grid.extend([
        FamilySpec::ThreeEqual { q: 3, m: 1 },
        FamilySpec::ThreeEqual { q: 5, m: 1 },
        FamilySpec::ThreeEqual { q: 2, m: 2 },
        FamilySpec::ThreeEqual { q: 3, m: 2 },
        FamilySpec::PairAndNext { q: 2, m: 1 },
        FamilySpec::PairAndNext { q: 2, m: 2 },
        FamilySpec::PairAndNext { q: 3, m: 1 },
        FamilySpec::PairAndNext { q: 4, m: 1 },
        FamilySpec::Consecutive { q: 3, m: 1 },
        FamilySpec::Consecutive { q: 2, m: 2 },
        FamilySpec::Consecutive { q: 3, m: 2 },
        FamilySpec::Consecutive { q: 4, m: 2 },
    ]);
    for (q, es) in [(3u32, &[1u32][..]), (5, &[1, 2][..])] {
        for &e in es {
            for m in 1..=2 {
                grid.push(FamilySpec::ModifiedTwoEqual { q, m, e });
            }
        }
    }
    grid.extend([
        FamilySpec::ModifiedThreeEqual { q: 5, m: 1, e: 1 },
        FamilySpec::ModifiedThreeEqual { q: 5, m: 1, e: 2 },
        FamilySpec::ModifiedThreeEqual { q: 7, m: 1, e: 2 },
        FamilySpec::ModifiedThreeEqual { q: 9, m: 1, e: 1 },
        FamilySpec::ModifiedThreeEqual { q: 9, m: 1, e: 4 },
        FamilySpec::ModifiedEqualBlocks {
            q: 4,
            m: 1,
            h: 3,
            e: 1,
        },
        FamilySpec::ModifiedEqualBlocks {
            q: 5,
            m: 1,
            h: 4,
            e: 1,
        },
        FamilySpec::ModifiedEqualBlocks {
            q: 4,
            m: 2,
            h: 2,
            e: 1,
        },
        FamilySpec::ModifiedEqualBlocks {
            q: 7,
            m: 1,
            h: 3,
            e: 2,
        },
        FamilySpec::ModifiedEqualBlocks {
            q: 7,
            m: 1,
            h: 3,
            e: 3,
        },
        FamilySpec::ModifiedEqualBlocks {
            q: 8,
            m: 1,
            h: 3,
            e: 1,
        },
    ]);
    grid
}

fn show(d: &std::collections::BTreeMap<usize, u64>) -> String {
    let parts: Vec<String> = d.iter().map(|(w, c)| format!("{w}:{c}")).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn families() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for fam in family_grid() {
        let r = verify_family(fam).with_context(|| format!("{fam}"))?;
        out.push(Check::new(
            format!("family {fam} distribution"),
            r.matches(),
            if r.matches() {
                format!(
                    "closed form = enumeration = hyperplane = {}",
                    show(&r.closed_form.nonzero())
                )
            } else {
                format!(
                    "(weight, closed, enum, hyperplane) differ at {:?}",
                    r.mismatches
                )
            },
        ));
        if let Some(claimed) = fam.claimed_defect() {
            out.push(Check::new(
                format!("family {fam} defect"),
                r.optimality.defect == claimed,
                format!(
                    "claimed {claimed}, measured {} for [{},{},{}]_{}",
                    r.optimality.defect,
                    r.optimality.n,
                    r.optimality.k,
                    r.optimality.d,
                    r.optimality.q
                ),
            ));
        }
    }
    for ex in data::weight_examples()? {
        let code = ex.family.construct()?;
        let by_enum = weight_distribution_enum(&code)?.nonzero();
        let by_hyper = weight_distribution_hyperplane(&code)?.nonzero();
        let closed = ex.family.closed_form_wdist()?.nonzero();
        let pass = by_enum == ex.weights && by_hyper == ex.weights && closed == ex.weights;
        out.push(Check::new(
            format!("printed distribution {}", ex.family),
            pass,
            format!(
                "printed {}, enumeration {}, hyperplane {}, closed form {}",
                show(&ex.weights),
                show(&by_enum),
                show(&by_hyper),
                show(&closed)
            ),
        ));
    }
    Ok(out)
}

/// Summary of every subcode of one codimension.
#[derive(Debug, Clone)]
pub struct SubcodeSweep {
    pub count: usize,
    pub expected_count: u128,
    pub distances_unchanged: bool,
    pub all_distance_optimal: bool,
    pub defects: Vec<u64>,
}

pub fn sweep_subcodes(code: &LinearCode, d: u64, codim: usize) -> Result<SubcodeSweep> {
    let iter = subcodes(code, codim)?;
    let expected_count = iter.total();
    let mut sweep = SubcodeSweep {
        count: 0,
        expected_count,
        distances_unchanged: true,
        all_distance_optimal: true,
        defects: Vec::new(),
    };
    let q = u64::from(code.q());
    for sub in iter {
        let sub = sub?;
        let sd = min_distance(&sub)?;
        sweep.count += 1;
        sweep.distances_unchanged &= sd == d;
        sweep.all_distance_optimal &= classify_distance_optimal(q, sub.n() as u64, sub.k(), sd);
        let defect = griesmer_defect(&sub, sd)?.defect;
        if !sweep.defects.contains(&defect) {
            sweep.defects.push(defect);
        }
    }
    sweep.defects.sort_unstable();
    Ok(sweep)
}

pub fn ss(q: u64, k: usize, u: &[usize], e: Option<u32>) -> Result<LinearCode> {
    let mut p = SSParams::new(field(q)?, k, u.to_vec())?;
    if let Some(e) = e {
        p = p.with_e(e)?;
    }
    Ok(if p.e() == p.q() - 1 {
        affine_ss(&p)?
    } else {
        modified_affine_ss(&p)?
    })
}

pub fn subcode_check(
    label: &str,
    q: u64,
    k: usize,
    u: &[usize],
    e: Option<u32>,
    codim: usize,
) -> Result<Check> {
    let code = ss(q, k, u, e)?;
    let d = min_distance(&code)?;
    let parent = griesmer_defect(&code, d)?;
    let s = sweep_subcodes(&code, d, codim)?;
    let pass = parent.defect == 0
        && s.count as u128 == s.expected_count
        && s.distances_unchanged
        && s.all_distance_optimal
        && s.defects == [codim as u64];
    Ok(Check::new(
        format!("{label} q={q} (k,u)=({k},{u:?}) codim {codim}"),
        pass,
        format!(
            "parent {} defect {}; {} of {} subcodes, distance unchanged: {}, distance-optimal: {}, defects {:?}",
            fmt_code(&code, d),
            parent.defect,
            s.count,
            s.expected_count,
            s.distances_unchanged,
            s.all_distance_optimal,
            s.defects
        ),
    ))
}

/// Punctures at the canonical position and reports the measured result.
pub fn puncture_check(code: &LinearCode) -> Result<(LinearCode, u64, u64)> {
    let (p, _) = puncture_canonical(code)?;
    let d = min_distance(&p)?;
    let defect = griesmer_defect(&p, d)?.defect;
    Ok((p, d, defect))
}

/// `e_i` and `e_i + e_j` (`i < j`) in `F_q^k`.
pub fn unit_and_pair_lines(k: usize) -> Vec<Vector> {
    let mut lines = Vec::new();
    for i in 0..k {
        let mut v = vec![0; k];
        v[i] = 1;
        lines.push(v);
    }
    for i in 0..k {
        for j in i + 1..k {
            let mut v = vec![0; k];
            v[i] = 1;
            v[j] = 1;
            lines.push(v);
        }
    }
    lines
}

pub fn subcodes_and_punctures() -> Result<Vec<Check>> {
    let mut out = Vec::new();

    for (k, u) in [(4, vec![2]), (5, vec![3]), (5, vec![2, 3]), (6, vec![4])] {
        out.push(subcode_check("binary codim-1 subcodes", 2, k, &u, None, 1)?);
    }
    for (k, u) in [(4, vec![3]), (5, vec![4]), (6, vec![5]), (7, vec![6])] {
        out.push(subcode_check("binary codim-2 subcodes", 2, k, &u, None, 2)?);
    }
    for q in [3, 4] {
        out.push(subcode_check(
            "q-ary codim-1 subcodes",
            q,
            3,
            &[2],
            Some(1),
            1,
        )?);
    }

    // Griesmer [n, k, q d'] punctured to a Griesmer [n - 1, k, q d' - 1]
    for (q, k, u, e) in [
        (2u64, 4usize, vec![2], None),
        (2, 5, vec![3], None),
        (2, 6, vec![4], None),
        (3, 3, vec![2], Some(1)),
        (3, 4, vec![2], Some(1)),
    ] {
        let code = ss(q, k, &u, e)?;
        let d = min_distance(&code)?;
        let parent = griesmer_defect(&code, d)?.defect;
        let (p, pd, defect) = puncture_check(&code)?;
        out.push(Check::new(
            format!("puncture Griesmer q={q} (k,u)=({k},{u:?})"),
            parent == 0 && d % q == 0 && pd + 1 == d && defect == 0,
            format!(
                "{} (defect {parent}) -> {} (defect {defect})",
                fmt_code(&code, d),
                fmt_code(&p, pd)
            ),
        ));
    }

    // binary codes with u_1 = 1, u_2 = 2 punctured: claimed defect 1
    for (k, u) in [
        (4, vec![1, 2]),
        (5, vec![1, 2]),
        (5, vec![1, 2, 3]),
        (6, vec![1, 2]),
        (6, vec![1, 2, 3]),
        (6, vec![1, 2, 4]),
    ] {
        let code = ss(2, k, &u, None)?;
        let d = min_distance(&code)?;
        let (p, pd, defect) = puncture_check(&code)?;
        let detail = format!(
            "{} -> {}, defect {defect}",
            fmt_code(&code, d),
            fmt_code(&p, pd)
        );
        out.push(Check::new(
            format!("punctured u1=1,u2=2 distance-optimal (k,u)=({k},{u:?})"),
            classify_distance_optimal(2, p.n() as u64, k, pd),
            detail.clone(),
        ));
        out.push(Check::new(
            format!("punctured u1=1,u2=2 defect one (k,u)=({k},{u:?})"),
            defect == 1,
            detail,
        ));
    }

    // lines codes
    let f2 = field(2)?;
    out.push(Check::new(
        "dependent binary lines have no avoiding functional",
        find_avoiding_functional(
            &f2,
            2,
            &[vec![1, 0], vec![0, 1], vec![1, 1]],
            DEFAULT_ENUM_LIMIT,
        )?
        .is_none(),
        "lines e1, e2, e1+e2 over GF(2)",
    ));
    for (q, k) in [(7u64, 3usize), (11, 4), (9, 4)] {
        let f = field(q)?;
        let lines = unit_and_pair_lines(k);
        let h = lines.len() as u64;
        let witness = find_avoiding_functional(&f, k, &lines, DEFAULT_ENUM_LIMIT)?;
        let code = lines_code(f, k, &lines)?;
        let d = min_distance(&code)?;
        let expected = (q - 1) * (q.pow(k as u32 - 1) - h);
        let defect = griesmer_defect(&code, d)?.defect;
        let mut detail = format!(
            "h={h}, witness {:?}, measured {}, formula d = {expected}, defect {defect}",
            witness,
            fmt_code(&code, d)
        );
        let mut pass = witness.is_some()
            && code.n() as u64 == q.pow(k as u32) - h * q + h - 1
            && d == expected;
        if q > 2 * k as u64 {
            let claimed = (q - 1) * (h / q);
            detail.push_str(&format!(", claimed defect {claimed}"));
            pass &= defect == claimed;
        }
        out.push(Check::new(
            format!("unit-and-pair lines q={q} k={k}"),
            pass,
            detail,
        ));
    }

    // independent lines: almost-optimality arithmetic
    for (q, k, h) in [(2u64, 6usize, 4usize), (2, 5, 4), (3, 6, 6)] {
        let e = if q == 2 { None } else { Some(1) };
        let code = ss(q, k, &vec![1; h], e)?;
        let d = min_distance(&code)?;
        let n = code.n() as u64;
        let qk1 = q.pow(k as u32 - 1);
        let floor = qk1 - 2 * q;
        let bound = griesmer_sum(q, k, floor + 2);
        out.push(Check::new(
            format!("{h} independent lines q={q} k={k}"),
            d >= floor && bound > n,
            format!(
                "measured {}, d >= {floor}, griesmer_sum(q,k,{}) = {bound} > {n}",
                fmt_code(&code, d),
                floor + 2
            ),
        ));
    }

    // the classifier must not over-claim
    let code = ss(7, 2, &[1, 1], None)?;
    let d = min_distance(&code)?;
    out.push(Check::new(
        "negative control q=7 (k,u)=(2,[1, 1])",
        (code.n(), d) == (36, 30) && !classify_distance_optimal(7, 36, 2, 30),
        format!(
            "measured {}, griesmer_sum(7,2,31) = {}",
            fmt_code(&code, d),
            griesmer_sum(7, 2, 31)
        ),
    ));

    // defect bounds on a few affine codes
    for (q, k, u) in [
        (3u64, 5usize, vec![1, 1, 3]),
        (2, 6, vec![2, 2]),
        (4, 4, vec![1, 3]),
    ] {
        let code = ss(q, k, &u, None)?;
        let d = min_distance(&code)?;
        let defect = griesmer_defect(&code, d)?.defect;
        let (case, bound) = defect_upper_bound(q, &u).context("no defect bound applies")?;
        out.push(Check::new(
            format!("defect bound q={q} (k,u)=({k},{u:?})"),
            defect <= bound,
            format!(
                "{case:?}: bound {bound}, measured {defect} for {}",
                fmt_code(&code, d)
            ),
        ));
    }
    Ok(out)
}
