//! Arithmetic in GF(p^m).
//!
//! Elements are integer indices in `[0, q)`. The base-`p` digits of an index,
//! least significant first, are the coefficients of the residue polynomial in
//! the basis `1, x, ..., x^(m-1)`. Index 0 is zero and index 1 is one.
//!
//! The reduction polynomial is the lexicographically smallest monic
//! irreducible of degree `m`, comparing coefficient tuples low degree first.
//! All operations go through precomputed tables, so a [`Field`] is immutable
//! and can be shared freely between threads.

use crate::error::{Error, Result};

/// A field element, encoded as its index.
pub type Elem = u32;

/// Default upper bound on the field order.
pub const DEFAULT_MAX_ORDER: u64 = 1024;

/// A concrete realization of GF(p^m).
#[derive(Clone)]
pub struct Field {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    primitive: Elem,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    neg: Vec<Elem>,
    inv: Vec<Elem>,
}

impl std::fmt::Debug for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for Field {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` into `(p, m)` with `q = p^m`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

impl Field {
    /// GF(p^m) with the default size guard.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        Self::with_limit(p, m, DEFAULT_MAX_ORDER)
    }

    /// GF(q) for a prime power `q`.
    pub fn from_order(q: u64) -> Result<Self> {
        let (p, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, m)
    }

    pub fn with_limit(p: u64, m: u32, max_order: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        let order = p
            .checked_pow(m)
            .filter(|&o| o <= max_order && o <= u64::from(u16::MAX) + 1)
            .ok_or(Error::FieldTooLarge {
                order: p.saturating_pow(m),
                limit: max_order,
            })?;
        let p = p as u32;
        let q = order as u32;
        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p, m as usize)
        };

        let qs = q as usize;
        let mut add = vec![0; qs * qs];
        let mut neg = vec![0; qs];
        for a in 0..q {
            let da = digits(a, p, m as usize);
            neg[a as usize] = undigits(&da.iter().map(|&x| (p - x) % p).collect::<Vec<_>>(), p);
            for b in 0..q {
                let db = digits(b, p, m as usize);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a as usize * qs + b as usize] = undigits(&sum, p);
            }
        }

        let mut mul = vec![0; qs * qs];
        if m == 1 {
            for a in 0..q {
                for b in 0..q {
                    mul[(a * q + b) as usize] = ((a as u64 * b as u64) % p as u64) as u32;
                }
            }
        } else {
            for a in 0..q {
                let da = digits(a, p, m as usize);
                for b in a..q {
                    let db = digits(b, p, m as usize);
                    let c = undigits(&poly_mulmod(&da, &db, &modulus, p), p);
                    mul[(a * q + b) as usize] = c;
                    mul[(b * q + a) as usize] = c;
                }
            }
        }

        let mut inv = vec![0; qs];
        for a in 1..q {
            let row = &mul[(a * q) as usize..((a + 1) * q) as usize];
            inv[a as usize] = row
                .iter()
                .position(|&x| x == 1)
                .expect("field has inverses") as u32;
        }

        let mut field = Field {
            p,
            m,
            q,
            modulus,
            primitive: 1,
            add,
            mul,
            neg,
            inv,
        };
        field.primitive = (1..q)
            .find(|&g| field.order_of(g) == q - 1)
            .expect("multiplicative group is cyclic");
        Ok(field)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Reduction polynomial coefficients, low degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The smallest-index generator of the multiplicative group.
    pub fn primitive(&self) -> Elem {
        self.primitive
    }

    pub fn check(&self, a: u64) -> Result<Elem> {
        if a < u64::from(self.q) {
            Ok(a as Elem)
        } else {
            Err(Error::InvalidElement {
                value: a,
                q: self.q,
            })
        }
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            Err(Error::ZeroInverse)
        } else {
            Ok(self.inv[a as usize])
        }
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn order_of(&self, a: Elem) -> u32 {
        assert!(a != 0, "zero has no multiplicative order");
        let mut x = a;
        let mut n = 1;
        while x != 1 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    /// The subgroup of order `e` of the multiplicative group, listed as
    /// `1, h, h^2, ..., h^(e-1)` with `h = g^((q-1)/e)` for the primitive `g`.
    pub fn subgroup(&self, e: u32) -> Result<Vec<Elem>> {
        let group_order = self.q - 1;
        if e == 0 || !group_order.is_multiple_of(e) {
            return Err(Error::SubgroupOrder { e, group_order });
        }
        let h = self.pow(self.primitive, u64::from(group_order / e));
        let mut out = Vec::with_capacity(e as usize);
        let mut x = 1;
        for _ in 0..e {
            out.push(x);
            x = self.mul(x, h);
        }
        Ok(out)
    }

    /// Coefficients of the residue polynomial of `a`, low degree first.
    pub fn coefficients(&self, a: Elem) -> Vec<u32> {
        digits(a, self.p, self.m as usize)
    }

    pub fn from_coefficients(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() != self.m as usize {
            return Err(Error::LengthMismatch {
                expected: self.m as usize,
                found: coeffs.len(),
            });
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.p) {
            return Err(Error::InvalidElement {
                value: u64::from(c),
                q: self.p,
            });
        }
        Ok(undigits(coeffs, self.p))
    }
}

fn digits(mut a: u32, p: u32, m: usize) -> Vec<u32> {
    let mut out = vec![0; m];
    for d in out.iter_mut() {
        *d = a % p;
        a /= p;
    }
    out
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &x| acc * p + x)
}

fn inv_mod(a: u32, p: u32) -> u32 {
    (1..p).find(|&x| (a * x) % p == 1).expect("nonzero residue")
}

/// Remainder of `a` divided by `b` over GF(p); `b` must have a nonzero lead.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    let mut r = a.to_vec();
    for top in (db..r.len()).rev() {
        let c = r[top];
        if c == 0 {
            continue;
        }
        let factor = c * lead_inv % p;
        let shift = top - db;
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - factor * bc % p) % p;
        }
    }
    r.truncate(db.max(1));
    r
}

fn poly_mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let mut prod = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    let mut r = poly_rem(&prod, modulus, p);
    r.resize(modulus.len() - 1, 0);
    r
}

/// True if the monic polynomial `f` (low degree first) has no factor of
/// degree between 1 and deg(f)/2 over GF(p).
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut g = digits(low as u32, p, d);
            g.push(1);
            let r = poly_rem(f, &g, p);
            if r.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree `m`, comparing
/// the tuple `(c_0, c_1, ..., c_(m-1))` with `c_0` most significant.
fn smallest_irreducible(p: u32, m: usize) -> Vec<u32> {
    let count = (p as u64).pow(m as u32);
    for rank in 0..count {
        // c_0 is the most significant digit of `rank`
        let mut tail = vec![0u32; m];
        let mut r = rank;
        for c in tail.iter_mut().rev() {
            *c = (r % p as u64) as u32;
            r /= p as u64;
        }
        let mut f = tail;
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
