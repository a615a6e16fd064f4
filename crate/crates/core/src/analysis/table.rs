use std::collections::HashMap;
use std::io::Read;
use std::path::Path;

use crate::error::{Error, Result};

/// Best known minimum distances keyed by `(q, n, k)`, loaded from CSV with
/// header `q,n,k,d`. Lines starting with `#` are ignored.
#[derive(Debug, Clone, Default)]
pub struct BestKnownTable {
    entries: HashMap<(u64, u64, u64), u64>,
    source: String,
}

impl BestKnownTable {
    pub fn from_reader(reader: impl Read, source: impl Into<String>) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .from_reader(reader);
        let header = rdr.headers().map_err(|e| Error::Parse {
            line: e.position().map_or(1, |p| p.line() as usize),
            message: e.to_string(),
        })?;
        if header.iter().collect::<Vec<_>>() != ["q", "n", "k", "d"] {
            let line = header.position().map_or(1, |p| p.line() as usize);
            return Err(Error::Parse {
                line,
                message: format!(
                    "expected header \"q,n,k,d\", found {:?}",
                    header.iter().collect::<Vec<_>>().join(",")
                ),
            });
        }
        let mut entries = HashMap::new();
        for record in rdr.records() {
            let record = record.map_err(|e| Error::Parse {
                line: e.position().map_or(0, |p| p.line() as usize),
                message: e.to_string(),
            })?;
            let line = record.position().map_or(0, |p| p.line() as usize);
            if record.len() != 4 {
                return Err(Error::Parse {
                    line,
                    message: format!("expected 4 fields, found {}", record.len()),
                });
            }
            let mut vals = [0u64; 4];
            for (slot, (name, field)) in vals
                .iter_mut()
                .zip(["q", "n", "k", "d"].iter().zip(record.iter()))
            {
                *slot = field.parse().map_err(|_| Error::Parse {
                    line,
                    message: format!("{name} = {field:?} is not a nonnegative integer"),
                })?;
            }
            let [q, n, k, d] = vals;
            if let Some(old) = entries.insert((q, n, k), d) {
                if old != d {
                    return Err(Error::Parse {
                        line,
                        message: format!(
                            "conflicting entries for (q, n, k) = ({q}, {n}, {k}): {old} and {d}"
                        ),
                    });
                }
            }
        }
        Ok(BestKnownTable {
            entries,
            source: source.into(),
        })
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let file = std::fs::File::open(path).map_err(|e| Error::Parse {
            line: 0,
            message: format!("{}: {e}", path.display()),
        })?;
        Self::from_reader(file, path.display().to_string())
    }

    pub fn lookup(&self, q: u64, n: u64, k: u64) -> Option<u64> {
        self.entries.get(&(q, n, k)).copied()
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
