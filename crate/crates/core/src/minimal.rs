//! Minimality of codes: by support containment, by the weight-sum
//! criterion, by the sufficient weight-ratio test, and reducedness.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::code::{self, LinearCode};
use crate::correspond;
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Criterion {
    /// Pairwise support containment.
    Naive,
    /// `sum_l wt(a + l b) = (q-1) wt(a) - wt(b)` exactly when
    /// `supp(b)` is inside `supp(a)`.
    WeightSum,
    /// `q w_min > (q-1) w_max`; sufficient only.
    WeightRatio,
    /// The column point set is cutting.
    Geometric,
}

impl Criterion {
    pub fn name(self) -> &'static str {
        match self {
            Criterion::Naive => "naive",
            Criterion::WeightSum => "hdz",
            Criterion::WeightRatio => "ab",
            Criterion::Geometric => "geometric",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalityReport {
    pub minimal: bool,
    /// `(c, c')` with `supp(c)` strictly inside `supp(c')`.
    pub witness: Option<(Vec<Elem>, Vec<Elem>)>,
    pub criterion: Criterion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightRatio {
    pub applies: bool,
    pub w_min: usize,
    pub w_max: usize,
}

/// One message per 1-dimensional subspace: first nonzero digit is 1.
struct ProjectiveWords {
    keys: Vec<usize>,
    words: Vec<Vec<Elem>>,
    supports: Vec<Vec<u64>>,
}

fn support_mask(c: &[Elem]) -> Vec<u64> {
    let mut m = vec![0u64; c.len().div_ceil(64).max(1)];
    for (i, x) in c.iter().enumerate() {
        if !x.is_zero() {
            m[i / 64] |= 1 << (i % 64);
        }
    }
    m
}

fn subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn key_digits(key: usize, q: usize, k: usize) -> Vec<Elem> {
    let mut d = vec![Elem::ZERO; k];
    let mut x = key;
    for slot in d.iter_mut().rev() {
        *slot = Elem((x % q) as u8);
        x /= q;
    }
    d
}

fn projective_words(c: &LinearCode) -> Result<ProjectiveWords> {
    let total = c.message_count()? as usize;
    let q = c.field().q() as usize;
    let k = c.k();
    let mut keys = Vec::new();
    let mut words = Vec::new();
    let mut supports = Vec::new();
    for key in 1..total {
        let msg = key_digits(key, q, k);
        if msg.iter().find(|x| !x.is_zero()) != Some(&Elem::ONE) {
            continue;
        }
        let w = c.encode(&msg)?;
        supports.push(support_mask(&w));
        words.push(w);
        keys.push(key);
    }
    Ok(ProjectiveWords {
        keys,
        words,
        supports,
    })
}

/// Given independent `small`, `big` with `supp(small) ⊆ supp(big)`, returns
/// a pair whose first support is strictly inside the second.
fn strict_witness(f: &Field, small: &[Elem], big: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
    if code::weight(small) < code::weight(big) {
        return (small.to_vec(), big.to_vec());
    }
    let t = small
        .iter()
        .position(|x| !x.is_zero())
        .expect("nonzero word");
    let lambda = f.div(big[t], small[t]).expect("nonzero pivot");
    let mut diff = big.to_vec();
    crate::linalg::axpy(f, &mut diff, f.neg(lambda), small);
    (diff, big.to_vec())
}

/// Definitional test: no codeword support strictly contains another
/// independent codeword's support.
pub fn is_minimal_naive(c: &LinearCode) -> Result<MinimalityReport> {
    let pw = projective_words(c)?;
    let weights: Vec<u32> = pw
        .supports
        .iter()
        .map(|s| s.iter().map(|w| w.count_ones()).sum())
        .collect();
    let mut order: Vec<usize> = (0..pw.words.len()).collect();
    order.sort_by_key(|&i| (weights[i], pw.keys[i]));
    for &i in &order {
        for j in 0..pw.words.len() {
            if i != j && weights[i] <= weights[j] && subset(&pw.supports[i], &pw.supports[j]) {
                let w = strict_witness(c.field(), &pw.words[i], &pw.words[j]);
                return Ok(MinimalityReport {
                    minimal: false,
                    witness: Some(w),
                    criterion: Criterion::Naive,
                });
            }
        }
    }
    Ok(MinimalityReport {
        minimal: true,
        witness: None,
        criterion: Criterion::Naive,
    })
}

/// Weight-sum test over all ordered independent projective pairs.
pub fn is_minimal_hdz(c: &LinearCode) -> Result<MinimalityReport> {
    let weights = c.message_weights()?;
    let f = c.field();
    let q = f.q() as usize;
    let k = c.k();
    let total = weights.len();
    let reps: Vec<(usize, Vec<Elem>)> = (1..total)
        .map(|key| (key, key_digits(key, q, k)))
        .filter(|(_, d)| d.iter().find(|x| !x.is_zero()) == Some(&Elem::ONE))
        .collect();
    let key_of = |v: &[Elem]| v.iter().fold(0usize, |acc, x| acc * q + x.0 as usize);
    let mut by_weight: Vec<&(usize, Vec<Elem>)> = reps.iter().collect();
    by_weight.sort_by_key(|(key, _)| (weights[*key], *key));
    let mut comb = vec![Elem::ZERO; k];
    for (kb, b) in by_weight {
        let wb = weights[*kb] as i64;
        for (ka, a) in &reps {
            if ka == kb {
                continue;
            }
            let wa = weights[*ka] as i64;
            if wb > wa {
                continue;
            }
            let mut sum = 0i64;
            for lambda in f.nonzero() {
                for t in 0..k {
                    comb[t] = f.add(a[t], f.mul(lambda, b[t]));
                }
                sum += weights[key_of(&comb)] as i64;
            }
            if sum == (q as i64 - 1) * wa - wb {
                let ca = c.encode(a)?;
                let cb = c.encode(b)?;
                return Ok(MinimalityReport {
                    minimal: false,
                    witness: Some(strict_witness(f, &cb, &ca)),
                    criterion: Criterion::WeightSum,
                });
            }
        }
    }
    Ok(MinimalityReport {
        minimal: true,
        witness: None,
        criterion: Criterion::WeightSum,
    })
}

/// `q w_min > (q-1) w_max` implies minimality. A failed test says nothing.
pub fn ab_sufficient(c: &LinearCode) -> Result<WeightRatio> {
    let wd = c.weight_distribution()?;
    let w_min = wd.min_weight().unwrap_or(0);
    let w_max = wd.max_weight().unwrap_or(0);
    let q = c.field().q() as u64;
    Ok(WeightRatio {
        applies: q * w_min as u64 > (q - 1) * w_max as u64,
        w_min,
        w_max,
    })
}

/// Minimality through the column point set. Zero columns are ignored.
pub fn is_minimal_geometric(c: &LinearCode) -> Result<bool> {
    if c.k() == 1 {
        return Ok(true);
    }
    let zero: Vec<usize> = (0..c.n())
        .filter(|&j| c.rows().iter().all(|r| r[j].is_zero()))
        .collect();
    let nd = if zero.is_empty() {
        c.clone()
    } else {
        c.puncture(&zero)?
    };
    correspond::phi(&nd)?.is_cutting(1)
}

/// No independent codeword has support inside `supp(word)`.
pub fn is_minimal_codeword(c: &LinearCode, word: &[Elem]) -> Result<bool> {
    if !c.contains(word) {
        return Err(Error::NotACodeword);
    }
    if word.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroCodeword);
    }
    let pw = projective_words(c)?;
    let mut target = word.to_vec();
    crate::linalg::normalize_in_place(c.field(), &mut target);
    let sm = support_mask(word);
    Ok(!pw
        .words
        .iter()
        .zip(&pw.supports)
        .any(|(w, s)| *w != target && subset(s, &sm)))
}

/// A minimal code in which puncturing any coordinate loses minimality (or
/// dimension).
pub fn is_reduced(c: &LinearCode) -> Result<bool> {
    if !is_minimal_naive(c)?.minimal {
        return Err(Error::NotMinimal);
    }
    for i in 0..c.n() {
        match c.puncture(&[i]) {
            Ok(p) => {
                if is_minimal_naive(&p)?.minimal {
                    return Ok(false);
                }
            }
            Err(Error::RankDrop { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(true)
}

/// Coordinate `i` whose puncture stays minimal, if any.
pub fn removable_coordinate(c: &LinearCode) -> Result<Option<usize>> {
    for i in 0..c.n() {
        if let Ok(p) = c.puncture(&[i]) {
            if is_minimal_naive(&p)?.minimal {
                return Ok(Some(i));
            }
        }
    }
    Ok(None)
}
