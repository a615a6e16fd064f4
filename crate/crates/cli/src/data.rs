//! Expected values transcribed into `data/*.csv`, embedded at compile time.

use std::collections::BTreeMap;

use affine_ss::analysis::FamilySpec;
use anyhow::{anyhow, bail, Context, Result};

const AFFINE_CODES: &str = include_str!("../data/affine_codes.csv");
const MODIFIED_CODES: &str = include_str!("../data/modified_codes.csv");
const MODIFIED_EXAMPLES: &str = include_str!("../data/modified_examples.csv");
const WEIGHT_EXAMPLES: &str = include_str!("../data/weight_examples.csv");

/// One transcribed code: printed parameters and how to rebuild it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeRow {
    /// 1-based position among the data rows of its file.
    pub row: usize,
    pub q: u64,
    pub n: u64,
    pub k: usize,
    pub d: u64,
    /// Ambient dimension from the printed `(k, u)`.
    pub ambient: usize,
    pub u: Vec<usize>,
    /// Subgroup order; `None` means the affine code (`e = q - 1`).
    pub e: Option<u32>,
    pub copies: usize,
    pub punctures: usize,
    pub label: String,
}

impl CodeRow {
    pub fn printed(&self) -> String {
        format!("[{},{},{}]_{}", self.n, self.k, self.d, self.q)
    }

    pub fn ku(&self) -> String {
        let mut parts = vec![self.ambient.to_string()];
        parts.extend(self.u.iter().map(usize::to_string));
        format!("({})", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightExample {
    pub family: FamilySpec,
    pub weights: BTreeMap<usize, u64>,
}

fn records(text: &str) -> Result<Vec<csv::StringRecord>> {
    let mut rdr = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    rdr.records().map(|r| r.map_err(Into::into)).collect()
}

fn num<T: std::str::FromStr>(rec: &csv::StringRecord, i: usize, what: &str) -> Result<T> {
    let raw = rec.get(i).ok_or_else(|| anyhow!("missing column {what}"))?;
    raw.trim()
        .parse()
        .map_err(|_| anyhow!("column {what}: {raw:?} is not a number"))
}

fn parse_ku(raw: &str) -> Result<(usize, Vec<usize>)> {
    let mut it = raw.split_whitespace().map(str::parse::<usize>);
    let k = it
        .next()
        .ok_or_else(|| anyhow!("empty (k,u)"))?
        .context("bad k in (k,u)")?;
    let u = it
        .collect::<Result<Vec<_>, _>>()
        .context("bad u in (k,u)")?;
    Ok((k, u))
}

fn code_rows(text: &str, recipe: bool) -> Result<Vec<CodeRow>> {
    records(text)?
        .iter()
        .enumerate()
        .map(|(i, rec)| {
            let (ambient, u) = parse_ku(rec.get(4).unwrap_or(""))?;
            let (e, copies, punctures, label_col) = if recipe {
                (
                    Some(num(rec, 5, "e")?),
                    num(rec, 6, "copies")?,
                    num(rec, 7, "punctures")?,
                    8,
                )
            } else {
                (None, 1, 0, 5)
            };
            Ok(CodeRow {
                row: i + 1,
                q: num(rec, 0, "q")?,
                n: num(rec, 1, "n")?,
                k: num(rec, 2, "k")?,
                d: num(rec, 3, "d")?,
                ambient,
                u,
                e,
                copies,
                punctures,
                label: rec.get(label_col).unwrap_or("").to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()
        .with_context(|| "malformed embedded table")
}

pub fn affine_rows() -> Result<Vec<CodeRow>> {
    code_rows(AFFINE_CODES, false)
}

pub fn modified_rows() -> Result<Vec<CodeRow>> {
    code_rows(MODIFIED_CODES, true)
}

pub fn modified_examples() -> Result<Vec<CodeRow>> {
    code_rows(MODIFIED_EXAMPLES, true)
}

pub fn parse_family(
    name: &str,
    q: u32,
    m: usize,
    e: Option<u32>,
    h: Option<usize>,
) -> Result<FamilySpec> {
    let need_e = || e.ok_or_else(|| anyhow!("family {name} needs e"));
    Ok(match name {
        "two-equal" => FamilySpec::TwoEqual { q, m },
        "three-equal" => FamilySpec::ThreeEqual { q, m },
        "pair-and-next" => FamilySpec::PairAndNext { q, m },
        "consecutive" => FamilySpec::Consecutive { q, m },
        "modified-two-equal" => FamilySpec::ModifiedTwoEqual { q, m, e: need_e()? },
        "modified-three-equal" => FamilySpec::ModifiedThreeEqual { q, m, e: need_e()? },
        "modified-equal-blocks" => FamilySpec::ModifiedEqualBlocks {
            q,
            m,
            h: h.ok_or_else(|| anyhow!("family modified-equal-blocks needs h"))?,
            e: need_e()?,
        },
        other => bail!("unknown family {other:?}"),
    })
}

pub fn weight_examples() -> Result<Vec<WeightExample>> {
    let opt = |rec: &csv::StringRecord, i: usize| -> Result<Option<u64>> {
        match rec.get(i).map(str::trim) {
            None | Some("") => Ok(None),
            Some(s) => Ok(Some(s.parse()?)),
        }
    };
    records(WEIGHT_EXAMPLES)?
        .iter()
        .map(|rec| {
            let q: u32 = num(rec, 1, "q")?;
            let m: usize = num(rec, 2, "m")?;
            let e = opt(rec, 3)?.map(|x| x as u32);
            let h = opt(rec, 4)?.map(|x| x as usize);
            let family = parse_family(rec.get(0).unwrap_or(""), q, m, e, h)?;
            let weights = rec
                .get(5)
                .unwrap_or("")
                .split_whitespace()
                .map(|pair| {
                    let (w, c) = pair
                        .split_once(':')
                        .ok_or_else(|| anyhow!("bad weight pair {pair:?}"))?;
                    Ok((w.parse()?, c.parse()?))
                })
                .collect::<Result<BTreeMap<_, _>>>()?;
            Ok(WeightExample { family, weights })
        })
        .collect()
}
