//! Length and distance bounds for minimal codes, in exact integer
//! arithmetic except for the asymptotic rates.

use crate::error::{Error, Result};
use crate::gf;

fn check_q(q: u32) -> Result<(u32, u32)> {
    gf::prime_power(q).ok_or(Error::NotPrimePower(q))
}

fn check_k(k: usize, min: usize) -> Result<()> {
    if k < min {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
        });
    }
    Ok(())
}

/// Floor of the square root.
pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut x = libm::sqrt(n as f64) as u64;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// `n >= (k-1)q + 1`.
pub fn lb_length_geometric(q: u32, k: usize) -> Result<u64> {
    check_q(q)?;
    check_k(k, 1)?;
    Ok((k as u64 - 1) * q as u64 + 1)
}

/// `d >= k + q - 2`.
pub fn lb_distance(q: u32, k: usize) -> Result<u64> {
    check_q(q)?;
    check_k(k, 2)?;
    Ok(k as u64 + q as u64 - 2)
}

/// `sum_{i<k} ceil(d / q^i)`, with `d` defaulting to `k + q - 2`.
pub fn lb_length_griesmer(q: u32, k: usize, d: Option<u64>) -> Result<u64> {
    let d = match d {
        Some(d) => {
            check_q(q)?;
            check_k(k, 1)?;
            d
        }
        None => lb_distance(q, k)?,
    };
    Ok(griesmer_sum(q as u64, k, d))
}

fn griesmer_sum(q: u64, k: usize, d: u64) -> u64 {
    let mut total = 0;
    let mut qi: u64 = 1;
    for _ in 0..k {
        total += d.div_ceil(qi);
        qi = qi.saturating_mul(q);
    }
    total
}

/// Which hypothesis of the plane bound applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dim3Case {
    /// `q < 9`: `3q`.
    Small,
    /// `q in {11,13,17,19}`: `ceil((5q+7)/2)`.
    Listed,
    /// `q = p^(2d+1) > 19`: `p^d ceil((p^(d+1)+1)/(p^d+1)) + 2`.
    OddPower,
    /// `q > 4` a square: `2q + 2 sqrt(q) + 2`.
    Square,
}

impl Dim3Case {
    pub fn number(self) -> u8 {
        match self {
            Dim3Case::Small => 1,
            Dim3Case::Listed => 2,
            Dim3Case::OddPower => 3,
            Dim3Case::Square => 4,
        }
    }
}

/// Lower bound on the length of a minimal `[n,3]_q` code.
pub fn lb_length_dim3(q: u32) -> Result<(u64, Dim3Case)> {
    let (p, m) = check_q(q)?;
    let q64 = q as u64;
    if q < 9 {
        return Ok((3 * q64, Dim3Case::Small));
    }
    if m % 2 == 0 {
        let r = isqrt(q64);
        return Ok((2 * q64 + 2 * r + 2, Dim3Case::Square));
    }
    if matches!(q, 11 | 13 | 17 | 19) {
        return Ok(((5 * q64 + 7).div_ceil(2), Dim3Case::Listed));
    }
    let d = (m - 1) / 2;
    let pd = (p as u64).pow(d);
    let pd1 = pd * p as u64;
    Ok((pd * (pd1 + 1).div_ceil(pd + 1) + 2, Dim3Case::OddPower))
}

/// Upper bound `floor((q/2)(sqrt(8q-7) + 1) + 2)` on the length of a
/// reduced minimal `[n,3]_q` code.
pub fn ub_length_reduced_dim3(q: u32) -> Result<u64> {
    check_q(q)?;
    let q = q as u64;
    // q sqrt(8q-7) = sqrt(q^2 (8q-7)); adding integers commutes with floor
    let s = isqrt(q * q * (8 * q - 7));
    Ok((s + q + 4) / 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConjecturedBound {
    pub d_lb: u64,
    pub n_lb: u64,
    /// Always true: these follow from an unproved statement.
    pub conjectural: bool,
}

/// `d >= (k-1)(q-1) + 1` and the Griesmer length for that `d`.
pub fn conjectured_lb(q: u32, k: usize) -> Result<ConjecturedBound> {
    check_q(q)?;
    check_k(k, 2)?;
    let d_lb = (k as u64 - 1) * (q as u64 - 1) + 1;
    Ok(ConjecturedBound {
        d_lb,
        n_lb: griesmer_sum(q as u64, k, d_lb),
        conjectural: true,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rates {
    pub one_over_q: f64,
    /// `log_q 2`
    pub maximal: f64,
    /// `(1/2) log_q (q^2 / (q^2 - q + 1))`
    pub minimal: f64,
}

pub fn asymptotic_rates(q: u32) -> Result<Rates> {
    check_q(q)?;
    let qf = q as f64;
    let lq = libm::log(qf);
    Ok(Rates {
        one_over_q: 1.0 / qf,
        maximal: libm::log(2.0) / lq,
        minimal: 0.5 * libm::log(qf * qf / (qf * qf - qf + 1.0)) / lq,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dim3Bounds {
    pub lb: u64,
    pub case: Dim3Case,
    pub ub_reduced: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundsReport {
    pub q: u32,
    pub k: usize,
    pub lb_length_geometric: u64,
    pub lb_length_griesmer: u64,
    pub lb_length_best: u64,
    pub lb_distance: u64,
    pub conjectured: ConjecturedBound,
    pub dim3: Option<Dim3Bounds>,
    pub rates: Rates,
}

/// Largest proven lower bound on the length of a minimal `[n,k]_q` code.
pub fn lb_length_best(q: u32, k: usize) -> Result<u64> {
    Ok(report(q, k)?.lb_length_best)
}

pub fn report(q: u32, k: usize) -> Result<BoundsReport> {
    let geo = lb_length_geometric(q, k)?;
    let gri = lb_length_griesmer(q, k, None)?;
    let dim3 = if k == 3 {
        let (lb, case) = lb_length_dim3(q)?;
        Some(Dim3Bounds {
            lb,
            case,
            ub_reduced: ub_length_reduced_dim3(q)?,
        })
    } else {
        None
    };
    let best = geo.max(gri).max(dim3.map_or(0, |b| b.lb));
    Ok(BoundsReport {
        q,
        k,
        lb_length_geometric: geo,
        lb_length_griesmer: gri,
        lb_length_best: best,
        lb_distance: lb_distance(q, k)?,
        conjectured: conjectured_lb(q, k)?,
        dim3,
        rates: asymptotic_rates(q)?,
    })
}
