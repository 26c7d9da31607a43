//! Explicit families of minimal codes and the hyperplane counts behind them.
//!
//! Each constructor builds the point set, derives the code with
//! [`psi`](crate::correspond::psi), and checks the measured parameters
//! against the predicted ones before returning.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::PointSet;
use crate::code::{LinearCode, WeightDistribution};
use crate::correspond::{self, ProjectiveSystem};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::pg::ProjectiveSpace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Predicted {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub wdist: Option<WeightDistribution>,
}

#[derive(Debug, Clone)]
pub struct ConstructionResult {
    pub label: String,
    pub q: u32,
    pub k: usize,
    pub system: ProjectiveSystem,
    pub code: LinearCode,
    pub predicted: Predicted,
}

fn binom(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    (0..r).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Hyperplanes of `PG(k-1,q)` avoiding `r` points in general position:
/// `q^(k-r) (q-1)^(r-1)`.
pub fn count_avoiding_hyperplanes(q: u32, k: usize, r: usize) -> Result<u64> {
    if r < 1 || r > k {
        return Err(Error::OutOfRange {
            what: "r",
            value: r as i64,
        });
    }
    let q = q as u64;
    Ok(q.pow((k - r) as u32) * (q - 1).pow(r as u32 - 1))
}

/// Hyperplanes through `P_1..P_s` avoiding `P_{s+1}..P_k`, for `k` points
/// in general position: `(q-1)^(k-s-1)`.
pub fn count_containing_avoiding(q: u32, k: usize, s: usize) -> Result<u64> {
    if s < 1 || s >= k {
        return Err(Error::OutOfRange {
            what: "s",
            value: s as i64,
        });
    }
    Ok((q as u64 - 1).pow((k - s - 1) as u32))
}

/// `f(r) = (k-r)((k+r-1)q - 2k + 4) / 2`, the weight of a codeword whose
/// hyperplane contains exactly `r` of the `k` base points.
pub fn predicted_tetrahedron_weight(q: u32, k: usize, r: usize) -> Result<usize> {
    if k == 0 || r >= k {
        return Err(Error::OutOfRange {
            what: "r",
            value: r as i64,
        });
    }
    let (q, k, r) = (q as i64, k as i64, r as i64);
    let twice = (k - r) * ((k + r - 1) * q - 2 * k + 4);
    Ok((twice / 2) as usize)
}

/// Closed-form weight distribution of the tetrahedron code.
pub fn predicted_tetrahedron_distribution(q: u32, k: usize) -> Result<WeightDistribution> {
    let n = binom(k as u64, 2) as usize * (q as usize - 1) + k;
    let mut counts = vec![0u64; n + 1];
    counts[0] = 1;
    for r in 0..k {
        let w = predicted_tetrahedron_weight(q, k, r)?;
        counts[w] += binom(k as u64, r as u64) * (q as u64 - 1).pow((k - r) as u32);
    }
    Ok(WeightDistribution::from_counts(q, k, counts))
}

fn unit(k: usize, i: usize) -> Vec<Elem> {
    let mut v = vec![Elem::ZERO; k];
    v[i] = Elem::ONE;
    v
}

fn space(q: u32, k: usize) -> Result<Arc<ProjectiveSpace>> {
    if k < 2 {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
        });
    }
    Ok(Arc::new(ProjectiveSpace::new(Field::new(q)?, k - 1)?))
}

fn line(s: &ProjectiveSpace, a: &[Elem], b: &[Elem]) -> Result<PointSet> {
    correspond::flat_of(s, &[a.to_vec(), b.to_vec()])
}

fn mismatch(
    what: &'static str,
    predicted: impl core::fmt::Display,
    measured: impl core::fmt::Display,
) -> Error {
    Error::PredictionMismatch {
        what,
        predicted: format!("{predicted}"),
        measured: format!("{measured}"),
    }
}

fn finish(
    label: String,
    s: Arc<ProjectiveSpace>,
    set: &PointSet,
    predicted: Predicted,
    check_minimal_cutting: bool,
) -> Result<ConstructionResult> {
    if set.len() != predicted.n {
        return Err(mismatch("point count", predicted.n, set.len()));
    }
    let system = ProjectiveSystem::from_indices(s.clone(), set.iter())?;
    let code = correspond::psi(&system)?;
    if code.k() != predicted.k {
        return Err(mismatch("dimension", predicted.k, code.k()));
    }
    if !code.is_nondegenerate() {
        return Err(Error::Degenerate(code.zero_column().unwrap_or(0)));
    }
    let d = code.min_distance()?;
    if d != predicted.d {
        return Err(mismatch("minimum distance", predicted.d, d));
    }
    if let Some(w) = &predicted.wdist {
        let got = code.weight_distribution()?;
        if got != w {
            return Err(mismatch(
                "weight distribution",
                format!("{:?}", w.counts()),
                format!("{:?}", got.counts()),
            ));
        }
    }
    if !correspond::is_cutting(&s, set, 1)? {
        return Err(Error::NotCutting);
    }
    if check_minimal_cutting && !correspond::is_minimal_cutting(&s, set, 1)? {
        return Err(Error::NotMinimal);
    }
    Ok(ConstructionResult {
        label,
        q: s.field().q(),
        k: s.dim() + 1,
        system,
        code,
        predicted,
    })
}

/// Union of the lines joining the `k` standard basis points of
/// `PG(k-1,q)`.
pub fn tetrahedron(q: u32, k: usize) -> Result<ConstructionResult> {
    let s = space(q, k)?;
    let mut set = PointSet::new(s.num_points());
    for i in 0..k {
        for j in i + 1..k {
            set.union_with(&line(&s, &unit(k, i), &unit(k, j))?);
        }
    }
    let wdist = predicted_tetrahedron_distribution(q, k)?;
    let predicted = Predicted {
        n: wdist.n(),
        k,
        d: wdist.min_weight().expect("nonzero weights"),
        wdist: Some(wdist),
    };
    finish(format!("tetrahedron q={q} k={k}"), s, &set, predicted, true)
}

/// Four lines forming a quadrilateral in `PG(3,q)` plus the points
/// `[1, beta, a, beta a]`, `a != 0`.
pub fn dim4(q: u32, beta: Elem) -> Result<ConstructionResult> {
    let s = space(q, 4)?;
    let f = s.field().clone();
    if beta.is_zero() || !f.contains(beta) {
        return Err(Error::InvalidParameter(format!(
            "beta must be a nonzero element of GF({q}), got {}",
            beta.value()
        )));
    }
    let mut set = PointSet::new(s.num_points());
    for i in 0..4 {
        set.union_with(&line(&s, &unit(4, i), &unit(4, (i + 1) % 4))?);
    }
    for a in f.nonzero() {
        set.insert(s.index_of(&[Elem::ONE, beta, a, f.mul(beta, a)])?);
    }
    let q_ = q as usize;
    let predicted = Predicted {
        n: 5 * q_ - 1,
        k: 4,
        d: 3 * q_ - 2,
        wdist: None,
    };
    finish(
        format!("dim4 q={q} beta={}", beta.value()),
        s,
        &set,
        predicted,
        true,
    )
}

/// The default points `Q_i = P_i + P_(i+1)` of the pentagonal
/// construction.
pub fn pentagonal_default_choices() -> [Vec<Elem>; 4] {
    core::array::from_fn(|i| {
        let mut v = unit(5, i);
        v[i + 1] = Elem::ONE;
        v
    })
}

/// Pentagon of lines in `PG(4,q)` through the standard basis, plus the
/// lines `Q1Q3`, `Q2Q4`, `Q1Q4` where `Q_i` lies on the `i`-th side.
pub fn pentagonal(q: u32, choices: Option<[Vec<Elem>; 4]>) -> Result<ConstructionResult> {
    let s = space(q, 5)?;
    let qs = choices.unwrap_or_else(pentagonal_default_choices);
    let mut set = PointSet::new(s.num_points());
    let mut sides = Vec::new();
    for i in 0..5 {
        let l = line(&s, &unit(5, i), &unit(5, (i + 1) % 5))?;
        set.union_with(&l);
        sides.push(l);
    }
    let mut qi = Vec::new();
    for (i, v) in qs.iter().enumerate() {
        let p = s.index_of(v)?;
        let ends = [s.index_of(&unit(5, i))?, s.index_of(&unit(5, i + 1))?];
        if !sides[i].contains(p) || ends.contains(&p) {
            return Err(Error::InvalidParameter(format!(
                "Q{} must lie on side {} away from its endpoints",
                i + 1,
                i + 1
            )));
        }
        qi.push(s.coords(p).to_vec());
    }
    for (a, b) in [(0, 2), (1, 3), (0, 3)] {
        set.union_with(&line(&s, &qi[a], &qi[b])?);
    }
    let q_ = q as usize;
    let predicted = Predicted {
        n: 8 * q_ - 3,
        k: 5,
        d: 4 * q_ - 3,
        wdist: None,
    };
    finish(format!("pentagonal q={q}"), s, &set, predicted, false)
}

/// Hexagon of lines in `PG(4,2)` through a frame, plus `Q = [1,0,1,0,1]`.
pub fn hexagonal_q2() -> Result<ConstructionResult> {
    let s = space(2, 5)?;
    let mut frame: Vec<Vec<Elem>> = (0..5).map(|i| unit(5, i)).collect();
    frame.push(vec![Elem::ONE; 5]);
    let mut set = PointSet::new(s.num_points());
    for i in 0..6 {
        set.union_with(&line(&s, &frame[i], &frame[(i + 1) % 6])?);
    }
    set.insert(s.index_of(&[Elem(1), Elem(0), Elem(1), Elem(0), Elem(1)])?);
    let predicted = Predicted {
        n: 13,
        k: 5,
        d: 5,
        wdist: None,
    };
    finish("hexagonal q=2".into(), s, &set, predicted, true)
}

/// All points of `PG(k-1,q)`.
pub fn simplex(q: u32, k: usize) -> Result<ConstructionResult> {
    let s = space(q, k)?;
    let set = PointSet::full(s.num_points());
    let w = (q as usize).pow(k as u32 - 1);
    let mut counts = vec![0u64; set.len() + 1];
    counts[0] = 1;
    counts[w] = (q as u64).pow(k as u32) - 1;
    let predicted = Predicted {
        n: set.len(),
        k,
        d: w,
        wdist: Some(WeightDistribution::from_counts(q, k, counts)),
    };
    finish(format!("simplex q={q} k={k}"), s, &set, predicted, false)
}
