use crate::error::{Error, Result};
use crate::linalg::{projective_reps, Subspace};

use super::SSParams;

/// Default subspaces for `params`, one per entry of `u` in the same order.
///
/// Dimensions are placed largest first on disjoint blocks of coordinates.
/// Once the coordinates run out, each remaining dimension must be 1 and gets
/// the first projective point (in canonical order) outside every subspace
/// chosen so far. Explicit bases, if present, are returned unchanged.
pub fn select_subspaces(params: &SSParams) -> Result<Vec<Subspace>> {
    if let Some(bases) = params.bases() {
        return Ok(bases.to_vec());
    }
    let field = params.field();
    let k = params.k();
    let u = params.u();

    let mut order: Vec<usize> = (0..u.len()).collect();
    // stable, so equal dimensions keep their input order
    order.sort_by(|&a, &b| u[b].cmp(&u[a]));

    let mut chosen: Vec<Option<Subspace>> = vec![None; u.len()];
    let mut placed: Vec<Subspace> = Vec::new();
    let mut next_coord = 0;
    let mut reps: Option<Vec<Vec<u32>>> = None;
    let mut rep_cursor = 0;

    for idx in order {
        let dim = u[idx];
        let sub = if next_coord + dim <= k {
            let coords: Vec<usize> = (next_coord..next_coord + dim).collect();
            next_coord += dim;
            Subspace::coordinate(field, k, &coords)?
        } else if dim == 1 {
            let reps = reps.get_or_insert_with(|| projective_reps(field, k));
            let mut found = None;
            while rep_cursor < reps.len() {
                let v = &reps[rep_cursor];
                rep_cursor += 1;
                if placed.iter().all(|s| !s.contains(field, v)) {
                    found = Some(Subspace::new(field, k, vec![v.clone()])?);
                    break;
                }
            }
            found.ok_or(Error::SelectionFailed { dim })?
        } else {
            return Err(Error::SelectionFailed { dim });
        };
        placed.push(sub.clone());
        chosen[idx] = Some(sub);
    }

    let out: Vec<Subspace> = chosen.into_iter().map(|s| s.expect("placed")).collect();
    if let Some((i, j)) = crate::linalg::first_intersecting_pair(field, &out) {
        return Err(Error::SubspacesIntersect(i, j));
    }
    Ok(out)
}
