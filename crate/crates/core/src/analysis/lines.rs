use crate::enumerate::check_guard;
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::linalg::{decode, dot_unchecked, Vector};

/// The lexicographically first nonzero `x` with `x . l != 0` for every line
/// generator `l`, or `None`. Such an `x` exists iff the lines code reaches
/// distance `(q - 1)(q^(k-1) - h)` exactly.
pub fn find_avoiding_functional(
    field: &Field,
    k: usize,
    lines: &[Vector],
    limit: u64,
) -> Result<Option<Vector>> {
    for l in lines {
        if l.len() != k {
            return Err(Error::LengthMismatch {
                expected: k,
                found: l.len(),
            });
        }
        for &x in l {
            field.check(u64::from(x))?;
        }
    }
    let q = field.order();
    let size = check_guard(q, k, limit)? as usize;
    Ok((1..size)
        .map(|i| decode(i, q, k))
        .find(|x| lines.iter().all(|l| dot_unchecked(field, x, l) != 0)))
}
