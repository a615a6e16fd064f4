use std::sync::Arc;

use crate::enumerate::{check_guard, DEFAULT_ENUM_LIMIT};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::linalg::{
    decode, encode, normalize, projective_reps, rank_of, scale, Matrix, Subspace, Vector,
    MATERIALIZE_LIMIT,
};

use super::{select_subspaces, Derivation, LinearCode, SSParams};

/// `mask[encode(v)]` is true for every vector `v` lying in some subspace.
fn deletion_mask(field: &Field, k: usize, subspaces: &[Subspace]) -> Result<Vec<bool>> {
    let q = field.order();
    let size = check_guard(q, k, DEFAULT_ENUM_LIMIT)? as usize;
    let mut mask = vec![false; size];
    for s in subspaces {
        let points = u64::from(q).checked_pow(s.dim() as u32);
        if points.is_some_and(|p| p <= MATERIALIZE_LIMIT) {
            for v in s.points(field) {
                mask[encode(&v, q)] = true;
            }
        } else {
            for (i, slot) in mask.iter_mut().enumerate() {
                if !*slot && s.contains(field, &decode(i, q, k)) {
                    *slot = true;
                }
            }
        }
    }
    Ok(mask)
}

fn affine_columns(field: &Field, k: usize, subspaces: &[Subspace]) -> Result<Vec<Vector>> {
    let q = field.order();
    let mask = deletion_mask(field, k, subspaces)?;
    Ok((1..mask.len())
        .filter(|&i| !mask[i])
        .map(|i| decode(i, q, k))
        .collect())
}

fn modified_columns(
    field: &Field,
    k: usize,
    subspaces: &[Subspace],
    e: u32,
) -> Result<Vec<Vector>> {
    let q = field.order();
    let mask = deletion_mask(field, k, subspaces)?;
    let group = field.subgroup(e)?;
    let mut columns = Vec::new();
    for v in projective_reps(field, k) {
        if !mask[encode(&v, q)] {
            columns.extend(group.iter().map(|&lambda| scale(field, lambda, &v)));
        }
    }
    Ok(columns)
}

fn wrap(field: &Arc<Field>, k: usize, columns: &[Vector], step: Derivation) -> Result<LinearCode> {
    let g = Matrix::from_columns(k, columns)?;
    Ok(LinearCode::new(field.clone(), g)?.derived(&[], step))
}

/// The affine Solomon-Stiffler code: every nonzero vector of `F_q^k` outside
/// the chosen subspaces, as columns in lexicographic order.
pub fn affine_ss(params: &SSParams) -> Result<LinearCode> {
    let full = params.q() - 1;
    if params.e() != full {
        return Err(Error::AffineRequiresFullGroup {
            expected: full,
            found: params.e(),
        });
    }
    let subspaces = select_subspaces(params)?;
    let columns = affine_columns(params.field(), params.k(), &subspaces)?;
    wrap(
        params.field(),
        params.k(),
        &columns,
        Derivation::Affine {
            k: params.k(),
            u: params.u().to_vec(),
        },
    )
}

/// The modified code: for each surviving projective point `v` (canonical
/// order), the columns `lambda * v` for `lambda` in the order-`e` subgroup.
pub fn modified_affine_ss(params: &SSParams) -> Result<LinearCode> {
    let subspaces = select_subspaces(params)?;
    let columns = modified_columns(params.field(), params.k(), &subspaces, params.e())?;
    wrap(
        params.field(),
        params.k(),
        &columns,
        Derivation::Modified {
            k: params.k(),
            u: params.u().to_vec(),
            e: params.e(),
        },
    )
}

fn line_subspaces(field: &Arc<Field>, k: usize, lines: &[Vector]) -> Result<Vec<Subspace>> {
    let h = lines.len();
    let q = u64::from(field.order());
    let max = q.checked_pow(k as u32 - 1).unwrap_or(u64::MAX);
    if h < k || h as u64 >= max {
        return Err(Error::LineCount { h, k, max });
    }
    let mut reps: Vec<Vector> = Vec::with_capacity(h);
    for (i, l) in lines.iter().enumerate() {
        if l.len() != k {
            return Err(Error::LengthMismatch {
                expected: k,
                found: l.len(),
            });
        }
        for &x in l {
            field.check(u64::from(x))?;
        }
        let rep = normalize(field, l).ok_or(Error::ZeroLine(i))?;
        if let Some(j) = reps.iter().position(|r| *r == rep) {
            return Err(Error::DuplicateLine(j, i));
        }
        reps.push(rep);
    }
    let rank = rank_of(field, lines);
    if rank != k {
        return Err(Error::LinesDoNotSpan { rank, k });
    }
    lines
        .iter()
        .map(|l| Subspace::new(field, k, vec![l.clone()]))
        .collect()
}

/// Deletes the nonzero points of `h` distinct lines that together span
/// `F_q^k`, with `k <= h < q^(k-1)`.
pub fn lines_code(field: Arc<Field>, k: usize, lines: &[Vector]) -> Result<LinearCode> {
    projective_lines_code(field.clone(), k, lines, field.order() - 1)
}

/// Like [`lines_code`], keeping only the order-`e` subgroup multiples of each
/// surviving projective point.
pub fn projective_lines_code(
    field: Arc<Field>,
    k: usize,
    lines: &[Vector],
    e: u32,
) -> Result<LinearCode> {
    if k < 2 {
        return Err(Error::DimensionTooSmall(k));
    }
    let subspaces = line_subspaces(&field, k, lines)?;
    let columns = if e == field.order() - 1 {
        affine_columns(&field, k, &subspaces)?
    } else {
        modified_columns(&field, k, &subspaces, e)?
    };
    wrap(
        &field,
        k,
        &columns,
        Derivation::Lines {
            k,
            h: lines.len(),
            e,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::weight_histogram;
    use crate::linalg::span_points;
    use std::collections::BTreeMap;

    fn gf(q: u64) -> Arc<Field> {
        Arc::new(Field::from_order(q).unwrap())
    }

    fn min_distance(code: &LinearCode) -> usize {
        let hist = weight_histogram(code, DEFAULT_ENUM_LIMIT).unwrap();
        (1..hist.len()).find(|&w| hist[w] > 0).unwrap()
    }

    fn multiset(m: &Matrix) -> BTreeMap<Vector, usize> {
        let mut out = BTreeMap::new();
        for c in m.columns() {
            *out.entry(c).or_insert(0) += 1;
        }
        out
    }

    #[test]
    fn simplex_when_nothing_is_deleted() {
        for (q, k) in [(2u64, 3usize), (3, 3), (4, 2), (5, 2)] {
            let p = SSParams::new(gf(q), k, vec![]).unwrap();
            let c = affine_ss(&p).unwrap();
            assert_eq!(c.n() as u64, q.pow(k as u32) - 1);
            let hist = weight_histogram(&c, DEFAULT_ENUM_LIMIT).unwrap();
            let w = ((q - 1) * q.pow(k as u32 - 1)) as usize;
            assert_eq!(hist[w], q.pow(k as u32) - 1);
        }
    }

    #[test]
    fn two_block_ternary_code() {
        let p = SSParams::new(gf(3), 4, vec![2, 2]).unwrap();
        let c = affine_ss(&p).unwrap();
        assert_eq!((c.n(), c.k()), (64, 4));
        assert_eq!(min_distance(&c), 42);
    }

    #[test]
    fn binary_twenty_five_nine() {
        let p = SSParams::new(gf(2), 5, vec![1, 2, 3]).unwrap();
        let c = affine_ss(&p).unwrap();
        assert_eq!((c.n(), c.k()), (20, 5));
        assert_eq!(min_distance(&c), 9);
    }

    #[test]
    fn columns_are_the_complement_of_the_union() {
        let f = gf(3);
        let p = SSParams::new(f.clone(), 4, vec![1, 2]).unwrap();
        let c = affine_ss(&p).unwrap();
        let subs = select_subspaces(&p).unwrap();
        let mut deleted: Vec<Vector> = Vec::new();
        for s in &subs {
            deleted.extend(span_points(&f, s.basis(), 4));
        }
        let expected: Vec<Vector> = (1..81)
            .map(|i| decode(i, 3, 4))
            .filter(|v| !deleted.contains(v))
            .collect();
        assert_eq!(c.generator().columns(), expected);
        assert_eq!(c.n() as u64, p.length());
    }

    #[test]
    fn full_subgroup_matches_affine() {
        for (q, k, u) in [(3u64, 3usize, vec![1]), (4, 3, vec![1, 1]), (5, 3, vec![2])] {
            let p = SSParams::new(gf(q), k, u).unwrap();
            let a = affine_ss(&p).unwrap();
            let m = modified_affine_ss(&p).unwrap();
            assert_eq!(multiset(a.generator()), multiset(m.generator()));
        }
    }

    #[test]
    fn modified_lengths() {
        let p = SSParams::new(gf(9), 3, vec![1, 1, 1])
            .unwrap()
            .with_e(1)
            .unwrap();
        let c = modified_affine_ss(&p).unwrap();
        assert_eq!(c.n(), 88);
        assert_eq!(min_distance(&c), 78);

        let p = SSParams::new(gf(5), 4, vec![1, 1, 1, 1])
            .unwrap()
            .with_e(1)
            .unwrap();
        let c = modified_affine_ss(&p).unwrap();
        assert_eq!((c.n(), c.k()), (152, 4));
        assert_eq!(min_distance(&c), 121);
    }

    #[test]
    fn affine_rejects_proper_subgroup() {
        let p = SSParams::new(gf(5), 3, vec![1]).unwrap().with_e(2).unwrap();
        assert_eq!(
            affine_ss(&p).unwrap_err(),
            Error::AffineRequiresFullGroup {
                expected: 4,
                found: 2
            }
        );
    }

    #[test]
    fn lines_code_length_and_validation() {
        let f = gf(3);
        let unit = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        let c = lines_code(f.clone(), 3, &unit).unwrap();
        assert_eq!(c.n(), 20);

        assert_eq!(
            lines_code(f.clone(), 3, &unit[..2]).unwrap_err(),
            Error::LineCount { h: 2, k: 3, max: 9 }
        );
        let dup = vec![vec![1, 0, 0], vec![0, 1, 0], vec![2, 0, 0]];
        assert_eq!(
            lines_code(f.clone(), 3, &dup).unwrap_err(),
            Error::DuplicateLine(0, 2)
        );
        let flat = vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]];
        assert_eq!(
            lines_code(f.clone(), 3, &flat).unwrap_err(),
            Error::LinesDoNotSpan { rank: 2, k: 3 }
        );
        let zero = vec![vec![1, 0, 0], vec![0, 0, 0], vec![0, 0, 1]];
        assert_eq!(lines_code(f, 3, &zero).unwrap_err(), Error::ZeroLine(1));
    }

    #[test]
    fn lines_code_distance_formula() {
        // e_i and e_i + e_j for i < j <= 3 when q > 2k: d = (q-1)(q^(k-1) - h)
        let f = gf(7);
        let mut lines = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        lines.extend([vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]);
        let c = lines_code(f, 3, &lines).unwrap();
        assert_eq!(c.n(), 343 - 6 * 7 + 6 - 1);
        assert_eq!(min_distance(&c), 6 * (49 - 6));
    }
}
