//! Linear `[n,k]_q` codes given by a generator matrix.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use once_cell::race::OnceBox;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::linalg::{self, Matrix};

/// Largest message space `q^k` any enumeration will walk.
pub const ENUMERATION_GUARD: u64 = 1 << 26;

/// Coordinates where `c` is nonzero (0-based).
pub fn support(c: &[Elem]) -> Vec<usize> {
    c.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, _)| i)
        .collect()
}

pub fn weight(c: &[Elem]) -> usize {
    c.iter().filter(|x| !x.is_zero()).count()
}

/// Counts `A_i` of codewords of each weight `i` in `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    q: u32,
    k: usize,
    counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn from_counts(q: u32, k: usize, counts: Vec<u64>) -> Self {
        WeightDistribution { q, k, counts }
    }

    pub fn n(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn get(&self, i: usize) -> u64 {
        self.counts.get(i).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// `(weight, count)` pairs with nonzero count, ascending.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| (i, a))
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Smallest nonzero weight.
    pub fn min_weight(&self) -> Option<usize> {
        self.nonzero().map(|(i, _)| i).find(|&i| i > 0)
    }

    pub fn max_weight(&self) -> Option<usize> {
        self.nonzero().map(|(i, _)| i).filter(|&i| i > 0).last()
    }

    /// `sum_i i * A_i`
    pub fn weight_sum(&self) -> u64 {
        self.nonzero().map(|(i, a)| i as u64 * a).sum()
    }
}

pub struct LinearCode {
    field: Field,
    rows: Matrix,
    n: usize,
    wdist: OnceBox<WeightDistribution>,
}

impl Clone for LinearCode {
    fn clone(&self) -> Self {
        let wdist = OnceBox::new();
        if let Some(w) = self.wdist.get() {
            let _ = wdist.set(Box::new(w.clone()));
        }
        LinearCode {
            field: self.field.clone(),
            rows: self.rows.clone(),
            n: self.n,
            wdist,
        }
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]_{} code", self.n, self.k(), self.field.q())
    }
}

impl LinearCode {
    /// Wraps a full-rank `k x n` generator matrix.
    pub fn new(field: Field, rows: Matrix) -> Result<LinearCode> {
        let k = rows.len();
        let n = rows.first().map_or(0, |r| r.len());
        if k == 0 || n == 0 {
            return Err(Error::RankDeficient { rank: 0, k });
        }
        for row in &rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            if let Some(&bad) = row.iter().find(|&&x| !field.contains(x)) {
                return Err(Error::ForeignElement {
                    value: bad.value(),
                    q: field.q(),
                });
            }
        }
        let rank = linalg::rank(&field, &rows);
        if rank != k {
            return Err(Error::RankDeficient { rank, k });
        }
        Ok(LinearCode {
            field,
            rows,
            n,
            wdist: OnceBox::new(),
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn rate(&self) -> f64 {
        self.k() as f64 / self.n as f64
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> Vec<Elem> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    pub fn encode(&self, msg: &[Elem]) -> Result<Vec<Elem>> {
        if msg.len() != self.k() {
            return Err(Error::DimensionMismatch {
                expected: self.k(),
                got: msg.len(),
            });
        }
        Ok(linalg::vec_mat(&self.field, msg, &self.rows, self.n))
    }

    /// Whether `c` lies in the row space.
    pub fn contains(&self, c: &[Elem]) -> bool {
        if c.len() != self.n || c.iter().any(|&x| !self.field.contains(x)) {
            return false;
        }
        let mut e = linalg::Echelon::new(self.field.clone());
        for r in &self.rows {
            e.insert(r);
        }
        e.contains(c)
    }

    /// First identically-zero coordinate, if any.
    pub fn zero_column(&self) -> Option<usize> {
        (0..self.n).find(|&j| self.rows.iter().all(|r| r[j].is_zero()))
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.zero_column().is_none()
    }

    /// `q^k`, checked against [`ENUMERATION_GUARD`].
    pub fn message_count(&self) -> Result<u64> {
        let size = (self.field.q() as u64)
            .checked_pow(self.k() as u32)
            .unwrap_or(u64::MAX);
        if size > ENUMERATION_GUARD {
            return Err(Error::EnumerationGuard {
                size,
                guard: ENUMERATION_GUARD,
            });
        }
        Ok(size)
    }

    /// Visits every codeword once as `(message_key, weight)`, where the key
    /// is the base-`q` encoding of the message with the first coordinate
    /// most significant. Messages are walked in modular Gray order so each
    /// step adds a multiple of a single generator row.
    pub fn for_each_weight(&self, mut visit: impl FnMut(usize, usize)) -> Result<()> {
        let total = self.message_count()? as usize;
        let k = self.k();
        let q = self.field.q() as usize;
        let mut place = vec![1usize; k];
        for j in 1..k {
            place[j] = place[j - 1] * q;
        }
        let mut digits = vec![0u8; k];
        let mut key = 0usize;

        if q == 2 && self.n <= 64 {
            let masks: Vec<u64> = self
                .rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .fold(0u64, |m, (j, x)| m | ((x.0 as u64) << j))
                })
                .collect();
            let mut cw = 0u64;
            visit(0, 0);
            for t in 1..total {
                let j = t.trailing_zeros() as usize;
                let i = k - 1 - j;
                cw ^= masks[i];
                if digits[i] == 0 {
                    digits[i] = 1;
                    key += place[j];
                } else {
                    digits[i] = 0;
                    key -= place[j];
                }
                visit(key, cw.count_ones() as usize);
            }
            return Ok(());
        }

        let f = &self.field;
        let mut cw = vec![Elem::ZERO; self.n];
        visit(0, 0);
        for t in 1..total {
            let mut j = 0;
            let mut x = t;
            while x % q == 0 {
                x /= q;
                j += 1;
            }
            let i = k - 1 - j;
            let old = digits[i];
            let new = ((old as usize + 1) % q) as u8;
            let delta = f.sub(Elem(new), Elem(old));
            linalg::axpy(f, &mut cw, delta, &self.rows[i]);
            digits[i] = new;
            key = key + new as usize * place[j] - old as usize * place[j];
            visit(key, weight(&cw));
        }
        Ok(())
    }

    /// Weight of every codeword, indexed by message key.
    pub fn message_weights(&self) -> Result<Vec<u32>> {
        let mut out = vec![0u32; self.message_count()? as usize];
        self.for_each_weight(|key, w| out[key] = w as u32)?;
        Ok(out)
    }

    pub fn weight_distribution(&self) -> Result<&WeightDistribution> {
        if let Some(w) = self.wdist.get() {
            return Ok(w);
        }
        let mut counts = vec![0u64; self.n + 1];
        self.for_each_weight(|_, w| counts[w] += 1)?;
        let wd = WeightDistribution::from_counts(self.field.q(), self.k(), counts);
        Ok(self.wdist.get_or_init(|| Box::new(wd)))
    }

    pub fn min_distance(&self) -> Result<usize> {
        Ok(self
            .weight_distribution()?
            .min_weight()
            .expect("a code of dimension >= 1 has a nonzero codeword"))
    }

    /// Deletes the listed coordinates (0-based).
    pub fn puncture(&self, positions: &[usize]) -> Result<LinearCode> {
        let mut drop = vec![false; self.n];
        for &p in positions {
            if p >= self.n {
                return Err(Error::OutOfRange {
                    what: "coordinate",
                    value: p as i64,
                });
            }
            drop[p] = true;
        }
        let kept = drop.iter().filter(|d| !**d).count();
        if kept == 0 {
            return Err(Error::OutOfRange {
                what: "punctured coordinates (all)",
                value: self.n as i64,
            });
        }
        let rows: Matrix = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .zip(&drop)
                    .filter(|(_, d)| !**d)
                    .map(|(x, _)| *x)
                    .collect()
            })
            .collect();
        let rank = linalg::rank(&self.field, &rows);
        if rank < self.k() {
            let witness = linalg::left_null_space(&self.field, &rows, kept)
                .into_iter()
                .next()
                .expect("rank drop leaves a nonzero left kernel");
            return Err(Error::RankDrop { witness });
        }
        LinearCode::new(self.field.clone(), rows)
    }

    /// Applies a monomial map: coordinate `j` moves to `perm[j]` and is
    /// multiplied by `scalars[j]`.
    pub fn monomial(&self, perm: &[usize], scalars: &[Elem]) -> Result<LinearCode> {
        if perm.len() != self.n || scalars.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: perm.len().min(scalars.len()),
            });
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
            seen[p] = true;
        }
        if scalars
            .iter()
            .any(|s| s.is_zero() || !self.field.contains(*s))
        {
            return Err(Error::InvalidParameter("scalars must be nonzero".into()));
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut out = vec![Elem::ZERO; self.n];
                for j in 0..self.n {
                    out[perm[j]] = self.field.mul(scalars[j], r[j]);
                }
                out
            })
            .collect();
        LinearCode::new(self.field.clone(), rows)
    }

    /// Whether two codes have the same row space (same coordinates).
    pub fn same_code(&self, other: &LinearCode) -> bool {
        if self.field != other.field || self.n != other.n || self.k() != other.k() {
            return false;
        }
        let mut all = self.rows.clone();
        all.extend(other.rows.iter().cloned());
        linalg::rank(&self.field, &all) == self.k()
    }

    /// `[n,k,d]_q` string, computing `d` when enumeration is allowed.
    pub fn parameters(&self) -> alloc::string::String {
        match self.min_distance() {
            Ok(d) => alloc::format!("[{},{},{}]_{}", self.n, self.k(), d, self.field.q()),
            Err(_) => alloc::format!("[{},{}]_{}", self.n, self.k(), self.field.q()),
        }
    }
}
