//! Arithmetic in `GF(q)`, `q = p^m <= 64`.
//!
//! Elements are encoded as integers in `[0, q)`: the base-`p` digits of the
//! value are the coefficients of the polynomial representative (lowest digit
//! is the constant term). `0` is zero, `1` is one, and for `m > 1` the value
//! `p` encodes the root `x` of the modulus, which is always primitive.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_Q: u32 = 64;

/// Shipped moduli `c0 + c1 x + ... + cm x^m` for the non-prime orders.
/// Each entry is re-checked for irreducibility and primitivity on use.
const MODULI: &[(u32, &[u8])] = &[
    (4, &[1, 1, 1]),
    (8, &[1, 1, 0, 1]),
    (9, &[2, 2, 1]),
    (16, &[1, 1, 0, 0, 1]),
    (25, &[2, 4, 1]),
    (27, &[1, 2, 0, 1]),
    (32, &[1, 0, 1, 0, 0, 1]),
    (49, &[3, 1, 1]),
    (64, &[1, 1, 0, 0, 0, 0, 1]),
];

/// An element of a finite field, valid only together with its [`Field`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Elem(pub u8);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0 as u32
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u8>,
    exp: Vec<u8>,
    log: Vec<u8>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

/// A finite field context. Cloning is cheap (shared tables).
#[derive(Clone)]
pub struct Field {
    t: Arc<Tables>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("q", &self.t.q)
            .field("p", &self.t.p)
            .field("m", &self.t.m)
            .field("modulus", &self.t.modulus)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.t, &other.t)
            || (self.t.q == other.t.q && self.t.modulus == other.t.modulus)
    }
}

impl Eq for Field {}

pub(crate) fn is_prime(n: u32) -> bool {
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

/// Splits `q` as `p^m` with `p` prime, if possible.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while !q.is_multiple_of(p) {
        p += 1;
    }
    let (mut rest, mut m) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

// Polynomials over GF(p) as coefficient vectors, lowest degree first.

fn poly_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let b = poly_trim(b.to_vec());
    let mut r = poly_trim(a.to_vec());
    let lead = *b.last().expect("nonzero divisor");
    let lead_inv = (1..p).find(|x| x * lead % p == 1).unwrap();
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r[r.len() - 1] * lead_inv % p;
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - c * bi % p) % p;
        }
        r = poly_trim(r);
    }
    r
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    // Trial division by every monic polynomial of degree 1..=deg/2.
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for low in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut v = low;
            for _ in 0..d {
                g.push(v % p);
                v /= p;
            }
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn smallest_primitive_root(p: u32) -> u32 {
    (2..p.max(3))
        .find(|&g| {
            let mut x = 1;
            for i in 1..p {
                x = x * g % p;
                if x == 1 {
                    return i == p - 1;
                }
            }
            false
        })
        .unwrap_or(1)
}

impl Field {
    /// Builds `GF(q)` with the shipped modulus.
    pub fn new(q: u32) -> Result<Field> {
        if q > MAX_Q {
            return Err(Error::FieldTooLarge { q, max: MAX_Q });
        }
        let (p, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if m == 1 {
            return Self::build(p, 1, Vec::new());
        }
        let modulus = MODULI
            .iter()
            .find(|(order, _)| *order == q)
            .map(|(_, c)| c.to_vec())
            .expect("modulus table covers every prime power up to MAX_Q");
        Self::build(p, m, modulus)
    }

    /// Builds `GF(p^m)` from an explicit modulus `c0..cm` (monic, primitive).
    /// For `m = 1` the modulus must be empty.
    pub fn with_modulus(p: u32, m: u32, modulus: &[u8]) -> Result<Field> {
        let q = p.checked_pow(m).unwrap_or(u32::MAX);
        if !is_prime(p) || m == 0 {
            return Err(Error::NotPrimePower(q));
        }
        if q > MAX_Q {
            return Err(Error::FieldTooLarge { q, max: MAX_Q });
        }
        if m == 1 {
            if !modulus.is_empty() {
                return Err(Error::BadModulus {
                    p,
                    modulus: modulus.to_vec(),
                });
            }
            return Self::build(p, 1, Vec::new());
        }
        Self::build(p, m, modulus.to_vec())
    }

    fn build(p: u32, m: u32, modulus: Vec<u8>) -> Result<Field> {
        let q = p.pow(m);
        let n1 = (q - 1) as usize;
        let mut exp = vec![0u8; n1];
        let mut log = vec![0u8; q as usize];

        if m == 1 {
            let g = smallest_primitive_root(p);
            let mut x = 1u32;
            for e in exp.iter_mut() {
                *e = x as u8;
                x = x * g % p;
            }
        } else {
            let bad = || Error::BadModulus {
                p,
                modulus: modulus.clone(),
            };
            let f: Vec<u32> = modulus.iter().map(|&c| c as u32).collect();
            if f.len() != m as usize + 1 || f[m as usize] != 1 || f.iter().any(|&c| c >= p) {
                return Err(bad());
            }
            if !is_irreducible(&f, p) {
                return Err(bad());
            }
            // Powers of x modulo f, as digit vectors.
            let mut cur = vec![0u32; m as usize];
            cur[0] = 1;
            for (i, e) in exp.iter_mut().enumerate() {
                let v = cur.iter().rev().fold(0u32, |acc, &d| acc * p + d);
                if i > 0 && v == 1 {
                    return Err(bad());
                }
                *e = v as u8;
                // multiply by x: shift up, reduce the x^m term with -f
                let top = cur[m as usize - 1];
                for j in (1..m as usize).rev() {
                    cur[j] = cur[j - 1];
                }
                cur[0] = 0;
                for j in 0..m as usize {
                    cur[j] = (cur[j] + p * p - top * f[j] % p) % p;
                }
            }
            let back = cur.iter().rev().fold(0u32, |acc, &d| acc * p + d);
            if back != 1 {
                return Err(bad());
            }
        }
        for (i, &e) in exp.iter().enumerate() {
            log[e as usize] = i as u8;
        }

        let qs = q as usize;
        let mut add = vec![0u8; qs * qs];
        let mut mul = vec![0u8; qs * qs];
        for a in 0..q {
            for b in 0..q {
                let (mut x, mut y, mut s, mut place) = (a, b, 0, 1);
                for _ in 0..m {
                    s += ((x % p + y % p) % p) * place;
                    x /= p;
                    y /= p;
                    place *= p;
                }
                add[(a * q + b) as usize] = s as u8;
                if a != 0 && b != 0 {
                    let l = (log[a as usize] as usize + log[b as usize] as usize) % n1;
                    mul[(a * q + b) as usize] = exp[l];
                }
            }
        }
        let mut neg = vec![0u8; qs];
        let mut inv = vec![0u8; qs];
        for a in 0..qs {
            neg[a] = (0..qs).find(|&b| add[a * qs + b] == 0).unwrap() as u8;
            if a != 0 {
                inv[a] = exp[(n1 - log[a] as usize) % n1];
            }
        }
        Ok(Field {
            t: Arc::new(Tables {
                p,
                m,
                q,
                modulus,
                exp,
                log,
                add,
                mul,
                neg,
                inv,
            }),
        })
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.t.q
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.t.p
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.t.m
    }

    /// Modulus coefficients `c0..cm`; `None` for prime fields.
    pub fn modulus(&self) -> Option<&[u8]> {
        (self.t.m > 1).then_some(&self.t.modulus[..])
    }

    /// Checked constructor for an element value.
    pub fn elem(&self, value: u32) -> Result<Elem> {
        if value < self.t.q {
            Ok(Elem(value as u8))
        } else {
            Err(Error::ForeignElement { value, q: self.t.q })
        }
    }

    #[inline]
    pub fn contains(&self, a: Elem) -> bool {
        (a.0 as u32) < self.t.q
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.t.q as u8).map(Elem)
    }

    /// Nonzero elements in encoding order.
    pub fn nonzero(&self) -> impl Iterator<Item = Elem> + Clone {
        (1..self.t.q as u8).map(Elem)
    }

    /// The primitive element used for the log tables.
    pub fn generator(&self) -> Elem {
        Elem(self.t.exp[1 % self.t.exp.len()])
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.t.add[a.0 as usize * self.t.q as usize + b.0 as usize])
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.t.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.t.mul[a.0 as usize * self.t.q as usize + b.0 as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::ZeroInverse(self.t.q));
        }
        self.check(a)?;
        Ok(Elem(self.t.inv[a.0 as usize]))
    }

    /// Inverse without the zero check; callers guarantee `a != 0`.
    #[inline]
    pub(crate) fn inv_nz(&self, a: Elem) -> Elem {
        debug_assert!(!a.is_zero());
        Elem(self.t.inv[a.0 as usize])
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let n1 = (self.t.q - 1) as u64;
        let l = (self.t.log[a.0 as usize] as u64 * (e % n1)) % n1;
        Elem(self.t.exp[l as usize])
    }

    /// `g^i` for the field generator `g`.
    pub fn exp(&self, i: usize) -> Elem {
        Elem(self.t.exp[i % self.t.exp.len()])
    }

    /// Discrete log base the generator; `None` for zero.
    pub fn log(&self, a: Elem) -> Option<usize> {
        (!a.is_zero()).then(|| self.t.log[a.0 as usize] as usize)
    }

    fn check(&self, a: Elem) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::ForeignElement {
                value: a.value(),
                q: self.t.q,
            })
        }
    }

    /// Addition that rejects operands outside this field.
    pub fn checked_add(&self, a: Elem, b: Elem) -> Result<Elem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    /// Multiplication that rejects operands outside this field.
    pub fn checked_mul(&self, a: Elem, b: Elem) -> Result<Elem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }
}
