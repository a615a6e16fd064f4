use crate::enumerate::{first_min_weight, DEFAULT_ENUM_LIMIT};
use crate::error::{Error, Result};
use crate::linalg::{gaussian_binomial, Matrix, SubspaceIter, Vector};

use super::{Derivation, LinearCode};

/// Concatenates `copies` copies of the generator matrix side by side.
pub fn repetition_copy(code: &LinearCode, copies: usize) -> Result<LinearCode> {
    if copies == 0 {
        return Err(Error::ZeroCopies);
    }
    let g = code.generator().tile(copies);
    Ok(LinearCode::new(code.field_arc().clone(), g)?
        .derived(code.provenance(), Derivation::Repetition { copies }))
}

/// Every subcode of dimension `k - codim`, one per subspace of the message
/// space, in the order produced by [`SubspaceIter`].
pub struct Subcodes<'a> {
    code: &'a LinearCode,
    codim: usize,
    inner: SubspaceIter,
    index: usize,
    total: u128,
}

impl Subcodes<'_> {
    /// Number of subcodes, the Gaussian binomial `[k choose codim]_q`.
    pub fn total(&self) -> u128 {
        self.total
    }
}

impl Iterator for Subcodes<'_> {
    type Item = Result<LinearCode>;

    fn next(&mut self) -> Option<Self::Item> {
        let basis = self.inner.next()?;
        let index = self.index;
        self.index += 1;
        let step = Derivation::Subcode {
            codim: self.codim,
            index,
        };
        let code = self.code;
        Some(
            Matrix::from_rows(&basis)
                .and_then(|b| b.mul(code.field(), code.generator()))
                .and_then(|g| LinearCode::new(code.field_arc().clone(), g))
                .map(|c| c.derived(code.provenance(), step)),
        )
    }
}

pub fn subcodes(code: &LinearCode, codim: usize) -> Result<Subcodes<'_>> {
    let k = code.k();
    if codim == 0 || codim >= k {
        return Err(Error::Codimension { codim, k });
    }
    let q = code.q();
    Ok(Subcodes {
        code,
        codim,
        inner: SubspaceIter::new(q, k, k - codim),
        index: 0,
        total: gaussian_binomial(u64::from(q), k as u32, (k - codim) as u32),
    })
}

/// Deletes coordinate `position`; fails if the dimension drops.
pub fn puncture(code: &LinearCode, position: usize) -> Result<LinearCode> {
    if position >= code.n() {
        return Err(Error::PositionOutOfRange {
            position,
            n: code.n(),
        });
    }
    let g = code.generator().remove_column(position);
    Ok(LinearCode::new(code.field_arc().clone(), g)?
        .derived(code.provenance(), Derivation::Puncture { position }))
}

/// A minimum-weight codeword together with its message and support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinWeightWord {
    pub weight: usize,
    pub message: Vector,
    pub codeword: Vector,
    pub support: Vec<usize>,
}

/// The lexicographically first message of minimum nonzero weight.
pub fn min_weight_support(code: &LinearCode) -> Result<MinWeightWord> {
    min_weight_support_with_limit(code, DEFAULT_ENUM_LIMIT)
}

pub fn min_weight_support_with_limit(code: &LinearCode, limit: u64) -> Result<MinWeightWord> {
    let (weight, message, codeword) =
        first_min_weight(code, limit)?.expect("a code of dimension >= 1 has a nonzero message");
    let support = codeword
        .iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(i, _)| i)
        .collect();
    Ok(MinWeightWord {
        weight,
        message,
        codeword,
        support,
    })
}

/// Punctures at the smallest position in the support of
/// [`min_weight_support`]'s codeword. Returns the code and the position.
pub fn puncture_canonical(code: &LinearCode) -> Result<(LinearCode, usize)> {
    let word = min_weight_support(code)?;
    let position = word.support[0];
    Ok((puncture(code, position)?, position))
}
