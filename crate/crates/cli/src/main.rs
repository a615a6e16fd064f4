use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use affine_ss::analysis::{
    defect_upper_bound, optimality_report, weight_distribution_enum,
    weight_distribution_hyperplane, BestKnownTable,
};
use affine_ss::construction::{
    affine_ss, modified_affine_ss, puncture, puncture_canonical, repetition_copy, subcodes,
    LinearCode, SSParams,
};
use affine_ss::gf::Field;
use affine_ss::io::{read_matrix, write_matrix};
use affine_ss::linalg::Subspace;
use affine_ss_cli::reproduce::{self, Check};
use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "affine-ss",
    version,
    about = "Affine Solomon-Stiffler codes over GF(q)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Affine,
    Modified,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Method {
    Enum,
    Hyperplane,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableId {
    #[value(name = "1")]
    Affine,
    #[value(name = "6")]
    Modified,
    Families,
    #[value(name = "sections-7-8")]
    SubcodesPunctures,
}

#[derive(Subcommand)]
enum Command {
    /// Build a generator matrix.
    Construct {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        k: usize,
        /// Comma-separated ascending subspace dimensions; "" for none.
        #[arg(long, default_value = "")]
        u: String,
        /// Subgroup order (divisor of q - 1); defaults to q - 1.
        #[arg(long)]
        e: Option<u32>,
        #[arg(long, value_enum, default_value = "affine")]
        variant: Variant,
        /// One subspace per line, basis vectors separated by ';'.
        #[arg(long)]
        bases: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Weight distribution of a matrix file, as JSON.
    Wdist {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Griesmer and best-known-table classification.
    Classify {
        /// Matrix file; the minimum distance is computed by enumeration.
        #[arg(long, conflicts_with_all = ["q", "n", "k", "d"])]
        input: Option<PathBuf>,
        #[arg(long, requires_all = ["n", "k", "d"])]
        q: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        d: Option<u64>,
        /// CSV with header q,n,k,d.
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Subcodes of codimension 1 or 2.
    Subcode {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        codim: u8,
        /// Write the subcode with this index instead of summarizing all.
        #[arg(long, requires = "out")]
        index: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Delete one coordinate (default: canonical minimum-weight support position).
    Puncture {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        position: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Repeat every column.
    Repeat {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        copies: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rebuild transcribed codes and check them.
    Reproduce {
        #[arg(long, value_enum)]
        table: TableId,
    },
}

/// Failures that are usage errors (exit 2) rather than verification
/// failures (exit 1).
struct Usage(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.into())
    }
}

fn parse_u(raw: &str) -> Result<Vec<usize>> {
    raw.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| anyhow!("--u: {s:?} is not a dimension"))
        })
        .collect()
}

fn parse_bases(path: &Path, field: &Field, k: usize) -> Result<Vec<Subspace>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let basis = line
            .split(';')
            .map(|v| {
                v.split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse::<u32>())
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()
            .with_context(|| format!("{} line {}: bad entry", path.display(), i + 1))?;
        let sub = Subspace::new(field, k, basis)
            .with_context(|| format!("{} line {}", path.display(), i + 1))?;
        out.push(sub);
    }
    Ok(out)
}

fn load(path: &Path) -> Result<LinearCode> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    read_matrix(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Summary lines go to stdout when the payload goes to a file, else stderr.
fn note(out: Option<&Path>, line: &str) {
    if out.is_some() {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
}

fn construct(
    q: u64,
    k: usize,
    u: &str,
    e: Option<u32>,
    variant: Variant,
    bases: Option<&Path>,
    out: Option<&Path>,
) -> Result<()> {
    let field = Arc::new(Field::from_order(q)?);
    let u = parse_u(u)?;
    let mut params = SSParams::new(field.clone(), k, u.clone())?;
    if let Some(e) = e {
        params = params.with_e(e)?;
    }
    if let Some(path) = bases {
        params = params.with_bases(parse_bases(path, &field, k)?)?;
    }
    let code = match variant {
        Variant::Affine => affine_ss(&params)?,
        Variant::Modified => modified_affine_ss(&params)?,
    };
    emit(&write_matrix(&code), out)?;
    note(
        out,
        &format!(
            "[{},{}]_{} code, (k,u) = ({k},{u:?}), e = {}",
            code.n(),
            code.k(),
            q,
            params.e()
        ),
    );
    note(
        out,
        &format!(
            "length e(q^k - 1 - sum(q^u_i - 1))/(q - 1) = {}, distance d >= e(q^(k-1) - sum q^(u_i-1)) = {}",
            params.length(),
            params.distance_bound()
        ),
    );
    if params.e() == params.q() - 1 {
        if let Some((case, bound)) = defect_upper_bound(q, &u) {
            note(out, &format!("Griesmer defect <= {bound} ({case:?})"));
        }
    }
    Ok(())
}

fn wdist(input: &Path, method: Method, out: Option<&Path>) -> Result<bool, Usage> {
    let code = load(input)?;
    let (dist, agree) = match method {
        Method::Enum => (weight_distribution_enum(&code)?, true),
        Method::Hyperplane => (weight_distribution_hyperplane(&code)?, true),
        Method::Both => {
            let a = weight_distribution_enum(&code)?;
            let b = weight_distribution_hyperplane(&code)?;
            let same = a == b;
            if !same {
                eprintln!("enumeration and hyperplane distributions differ");
            }
            (a, same)
        }
    };
    let mut text = serde_json::to_string_pretty(&dist.to_json())?;
    text.push('\n');
    emit(&text, out)?;
    Ok(agree)
}

fn classify(
    input: Option<&Path>,
    q: Option<u64>,
    n: Option<u64>,
    k: Option<usize>,
    d: Option<u64>,
    table: Option<&Path>,
) -> Result<()> {
    let (q, n, k, d) = match (input, q, n, k, d) {
        (Some(path), ..) => {
            let code = load(path)?;
            let d = reproduce::min_distance(&code)?;
            (u64::from(code.q()), code.n() as u64, code.k(), d)
        }
        (None, Some(q), Some(n), Some(k), Some(d)) => (q, n, k, d),
        _ => bail!("give either --input or all of --q --n --k --d"),
    };
    let table = table.map(BestKnownTable::from_path).transpose()?;
    let report = optimality_report(q, n, k, d, table.as_ref())?;
    println!("{report}");
    Ok(())
}

fn subcode(input: &Path, codim: usize, index: Option<usize>, out: Option<&Path>) -> Result<()> {
    let code = load(input)?;
    let mut iter = subcodes(&code, codim)?;
    match index {
        Some(i) => {
            let total = iter.total();
            let sub = iter
                .nth(i)
                .ok_or_else(|| anyhow!("--index {i} out of range: there are {total} subcodes"))??;
            emit(&write_matrix(&sub), out)?;
            note(
                out,
                &format!(
                    "subcode {i} of {total}: [{},{}]_{}",
                    sub.n(),
                    sub.k(),
                    sub.q()
                ),
            );
        }
        None => {
            let q = u64::from(code.q());
            println!("{} subcodes of codimension {codim}", iter.total());
            for (i, sub) in iter.enumerate() {
                let sub = sub?;
                let d = reproduce::min_distance(&sub)?;
                let r = optimality_report(q, sub.n() as u64, sub.k(), d, None)?;
                println!("{i} {r}");
            }
        }
    }
    Ok(())
}

fn puncture_cmd(input: &Path, position: Option<usize>, out: Option<&Path>) -> Result<()> {
    let code = load(input)?;
    let (p, pos) = match position {
        Some(pos) => (puncture(&code, pos)?, pos),
        None => puncture_canonical(&code)?,
    };
    emit(&write_matrix(&p), out)?;
    note(
        out,
        &format!(
            "punctured at position {pos}: [{},{}]_{}",
            p.n(),
            p.k(),
            p.q()
        ),
    );
    Ok(())
}

fn repeat(input: &Path, copies: usize, out: Option<&Path>) -> Result<()> {
    let code = load(input)?;
    let r = repetition_copy(&code, copies)?;
    emit(&write_matrix(&r), out)?;
    note(
        out,
        &format!("{copies}-copy: [{},{}]_{}", r.n(), r.k(), r.q()),
    );
    Ok(())
}

fn reproduce_cmd(table: TableId) -> Result<bool> {
    let checks: Vec<Check> = match table {
        TableId::Affine => reproduce::affine_rows()?,
        TableId::Modified => reproduce::modified_rows()?,
        TableId::Families => reproduce::families()?,
        TableId::SubcodesPunctures => reproduce::subcodes_and_punctures()?,
    };
    for c in &checks {
        println!("{c}");
    }
    let passed = checks.iter().filter(|c| c.pass).count();
    println!("{passed}/{} checks passed", checks.len());
    Ok(passed == checks.len())
}

fn run(cli: Cli) -> Result<bool, Usage> {
    match cli.command {
        Command::Construct {
            q,
            k,
            u,
            e,
            variant,
            bases,
            out,
        } => construct(q, k, &u, e, variant, bases.as_deref(), out.as_deref())?,
        Command::Wdist { input, method, out } => return wdist(&input, method, out.as_deref()),
        Command::Classify {
            input,
            q,
            n,
            k,
            d,
            table,
        } => classify(input.as_deref(), q, n, k, d, table.as_deref())?,
        Command::Subcode {
            input,
            codim,
            index,
            out,
        } => subcode(&input, codim.into(), index, out.as_deref())?,
        Command::Puncture {
            input,
            position,
            out,
        } => puncture_cmd(&input, position, out.as_deref())?,
        Command::Repeat { input, copies, out } => repeat(&input, copies as usize, out.as_deref())?,
        Command::Reproduce { table } => return Ok(reproduce_cmd(table)?),
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
