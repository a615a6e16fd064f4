//! Exhaustive enumeration of the codewords `mG` for all messages `m`.
//!
//! Messages are visited depth-first in lexicographic order (first coordinate
//! most significant), keeping one partial sum per level so each step costs
//! one vector addition. Work is split over message prefixes and merged in
//! prefix order, so results do not depend on thread scheduling.

use rayon::prelude::*;

use crate::construction::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::linalg::{decode, space_size, Vector};

/// Default cap on `q^k` for anything that walks the whole message space.
pub const DEFAULT_ENUM_LIMIT: u64 = 1 << 22;

pub fn check_guard(q: u32, k: usize, limit: u64) -> Result<u64> {
    match space_size(q, k) {
        Some(size) if size <= limit => Ok(size),
        size => Err(Error::EnumerationGuard {
            size: size.unwrap_or(u64::MAX),
            limit,
        }),
    }
}

struct Walker<'a> {
    field: &'a Field,
    q: usize,
    k: usize,
    n: usize,
    // in characteristic 2 addition of indices is XOR
    xor: bool,
    // scaled[i * q + c] = c * row_i
    scaled: Vec<Vector>,
}

impl<'a> Walker<'a> {
    fn new(code: &'a LinearCode) -> Self {
        let field = code.field();
        let q = field.order() as usize;
        let g = code.generator();
        let mut scaled = Vec::with_capacity(g.rows() * q);
        for i in 0..g.rows() {
            for c in 0..q as Elem {
                scaled.push(g.row(i).iter().map(|&x| field.mul(c, x)).collect());
            }
        }
        Walker {
            field,
            q,
            k: g.rows(),
            n: g.cols(),
            xor: field.characteristic() == 2,
            scaled,
        }
    }

    fn split_depth(&self) -> usize {
        let mut t = 0;
        let mut count = 1;
        while t < self.k && count < 256 {
            count *= self.q;
            t += 1;
        }
        t
    }

    fn add_into(&self, out: &mut [Elem], a: &[Elem], level: usize, c: usize) {
        let row = &self.scaled[level * self.q + c];
        if self.xor {
            for ((o, &x), &y) in out.iter_mut().zip(a).zip(row) {
                *o = x ^ y;
            }
        } else {
            for ((o, &x), &y) in out.iter_mut().zip(a).zip(row) {
                *o = self.field.add(x, y);
            }
        }
    }

    /// Calls `visit(message, codeword)` for every message extending `prefix`,
    /// in lexicographic order.
    fn walk_prefix(&self, prefix: &[Elem], visit: &mut impl FnMut(&[Elem], &[Elem])) {
        let t = prefix.len();
        let mut bufs = vec![vec![0 as Elem; self.n]; self.k + 1];
        for (i, &c) in prefix.iter().enumerate() {
            let (head, tail) = bufs.split_at_mut(i + 1);
            self.add_into(&mut tail[0], &head[i], i, c as usize);
        }
        let mut msg = prefix.to_vec();
        msg.resize(self.k, 0);
        self.descend(t, &mut bufs, &mut msg, visit);
    }

    fn descend(
        &self,
        level: usize,
        bufs: &mut [Vector],
        msg: &mut [Elem],
        visit: &mut impl FnMut(&[Elem], &[Elem]),
    ) {
        if level == self.k {
            visit(msg, &bufs[level]);
            return;
        }
        for c in 0..self.q {
            msg[level] = c as Elem;
            let (head, tail) = bufs.split_at_mut(level + 1);
            if c == 0 {
                tail[0].copy_from_slice(&head[level]);
            } else {
                self.add_into(&mut tail[0], &head[level], level, c);
            }
            self.descend(level + 1, bufs, msg, visit);
        }
    }

    fn prefixes(&self) -> Vec<Vector> {
        let t = self.split_depth();
        (0..self.q.pow(t as u32))
            .map(|i| decode(i, self.q as u32, t))
            .collect()
    }
}

fn weight(c: &[Elem]) -> usize {
    c.iter().filter(|&&x| x != 0).count()
}

/// `hist[w]` = number of messages whose codeword has weight `w`.
pub fn weight_histogram(code: &LinearCode, limit: u64) -> Result<Vec<u64>> {
    check_guard(code.q(), code.k(), limit)?;
    let walker = Walker::new(code);
    let n = walker.n;
    let parts: Vec<Vec<u64>> = walker
        .prefixes()
        .par_iter()
        .map(|p| {
            let mut hist = vec![0u64; n + 1];
            walker.walk_prefix(p, &mut |_, c| hist[weight(c)] += 1);
            hist
        })
        .collect();
    let mut hist = vec![0u64; n + 1];
    for part in parts {
        for (h, x) in hist.iter_mut().zip(part) {
            *h += x;
        }
    }
    Ok(hist)
}

/// The lexicographically first nonzero message of minimum codeword weight.
pub fn first_min_weight(code: &LinearCode, limit: u64) -> Result<Option<(usize, Vector, Vector)>> {
    check_guard(code.q(), code.k(), limit)?;
    let walker = Walker::new(code);
    let best: Vec<Option<(usize, Vector, Vector)>> = walker
        .prefixes()
        .par_iter()
        .map(|p| {
            let mut best: Option<(usize, Vector, Vector)> = None;
            walker.walk_prefix(p, &mut |m, c| {
                if m.iter().all(|&x| x == 0) {
                    return;
                }
                let w = weight(c);
                if best.as_ref().is_none_or(|b| w < b.0) {
                    best = Some((w, m.to_vec(), c.to_vec()));
                }
            });
            best
        })
        .collect();
    // prefixes are in lexicographic order, so the first strict minimum wins
    Ok(best.into_iter().flatten().fold(
        None,
        |acc: Option<(usize, Vector, Vector)>, cand| match acc {
            Some(a) if a.0 <= cand.0 => Some(a),
            _ => Some(cand),
        },
    ))
}

/// Calls `visit` on every codeword, sequentially and in message order.
pub fn for_each_codeword(
    code: &LinearCode,
    limit: u64,
    mut visit: impl FnMut(&[Elem], &[Elem]),
) -> Result<()> {
    check_guard(code.q(), code.k(), limit)?;
    let walker = Walker::new(code);
    walker.walk_prefix(&[], &mut visit);
    Ok(())
}
