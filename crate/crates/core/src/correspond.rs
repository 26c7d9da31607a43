//! Codes as multisets of points, and the blocking-set predicates.
//!
//! The predicates take plain point sets: multiplicities matter for the
//! code but not for whether a set is cutting.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::PointSet;
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::Elem;
use crate::linalg::Echelon;
use crate::pg::{Flat, ProjectiveSpace};

/// A multiset of points of `PG(k-1,q)` not contained in a hyperplane.
#[derive(Debug, Clone)]
pub struct ProjectiveSystem {
    space: Arc<ProjectiveSpace>,
    mult: BTreeMap<usize, u32>,
}

impl ProjectiveSystem {
    pub fn new(space: Arc<ProjectiveSpace>, mult: BTreeMap<usize, u32>) -> Result<Self> {
        for (&p, &m) in &mult {
            if p >= space.num_points() {
                return Err(Error::OutOfRange {
                    what: "point index",
                    value: p as i64,
                });
            }
            if m == 0 {
                return Err(Error::OutOfRange {
                    what: "multiplicity",
                    value: 0,
                });
            }
        }
        if space.rank_of(mult.keys().copied()) != space.dim() + 1 {
            return Err(Error::NotSpanning);
        }
        Ok(ProjectiveSystem { space, mult })
    }

    /// Each listed index counts once per occurrence.
    pub fn from_indices(
        space: Arc<ProjectiveSpace>,
        indices: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let mut mult = BTreeMap::new();
        for i in indices {
            *mult.entry(i).or_insert(0) += 1;
        }
        Self::new(space, mult)
    }

    pub fn space(&self) -> &Arc<ProjectiveSpace> {
        &self.space
    }

    /// Length of the associated code.
    pub fn n(&self) -> usize {
        self.mult.values().map(|&m| m as usize).sum()
    }

    /// Dimension of the associated code.
    pub fn k(&self) -> usize {
        self.space.dim() + 1
    }

    pub fn multiplicities(&self) -> &BTreeMap<usize, u32> {
        &self.mult
    }

    pub fn multiplicity(&self, p: usize) -> u32 {
        self.mult.get(&p).copied().unwrap_or(0)
    }

    pub fn is_simple(&self) -> bool {
        self.mult.values().all(|&m| m == 1)
    }

    /// The underlying point set `M`.
    pub fn support(&self) -> PointSet {
        PointSet::from_indices(self.space.num_points(), self.mult.keys().copied())
    }

    pub fn support_indices(&self) -> Vec<usize> {
        self.mult.keys().copied().collect()
    }

    /// Number of points of the multiset on `flat`, with multiplicity.
    pub fn char_function(&self, flat: &Flat) -> Result<u64> {
        if flat.ambient_dim() != self.space.dim() {
            return Err(Error::SpaceMismatch);
        }
        let f = self.space.field();
        Ok(self
            .mult
            .iter()
            .filter(|(&p, _)| flat.contains(f, self.space.coords(p)))
            .map(|(_, &m)| m as u64)
            .sum())
    }

    /// [`char_function`](Self::char_function) of hyperplane `h`.
    pub fn char_hyperplane(&self, h: usize) -> u64 {
        let on = self.space.hyperplane_points(h);
        self.mult
            .iter()
            .filter(|(&p, _)| on.contains(p))
            .map(|(_, &m)| m as u64)
            .sum()
    }

    /// `n` minus the largest hyperplane intersection.
    pub fn min_distance(&self) -> usize {
        let max = (0..self.space.num_points())
            .map(|h| self.char_hyperplane(h))
            .max()
            .unwrap_or(0);
        self.n() - max as usize
    }

    pub fn is_cutting(&self, r: usize) -> Result<bool> {
        is_cutting(&self.space, &self.support(), r)
    }

    pub fn is_minimal_cutting(&self, r: usize) -> Result<bool> {
        is_minimal_cutting(&self.space, &self.support(), r)
    }
}

/// The projective system of a non-degenerate code, in a freshly built
/// `PG(k-1,q)`.
pub fn phi(code: &LinearCode) -> Result<ProjectiveSystem> {
    if code.k() < 2 {
        return Err(Error::OutOfRange {
            what: "code dimension (needs k >= 2)",
            value: code.k() as i64,
        });
    }
    let space = ProjectiveSpace::new(code.field().clone(), code.k() - 1)?;
    phi_in(Arc::new(space), code)
}

/// As [`phi`], reusing an existing space.
pub fn phi_in(space: Arc<ProjectiveSpace>, code: &LinearCode) -> Result<ProjectiveSystem> {
    if space.field() != code.field() || space.dim() + 1 != code.k() {
        return Err(Error::SpaceMismatch);
    }
    if let Some(j) = code.zero_column() {
        return Err(Error::Degenerate(j));
    }
    let mut mult = BTreeMap::new();
    for j in 0..code.n() {
        let p = space.index_of(&code.column(j))?;
        *mult.entry(p).or_insert(0) += 1;
    }
    ProjectiveSystem::new(space, mult)
}

/// Generator matrix whose columns are the points of `sys` in canonical
/// order, each repeated by its multiplicity.
pub fn psi(sys: &ProjectiveSystem) -> Result<LinearCode> {
    let k = sys.k();
    let mut rows = vec![Vec::with_capacity(sys.n()); k];
    for (&p, &m) in &sys.mult {
        let c = sys.space.coords(p);
        for _ in 0..m {
            for (row, &x) in rows.iter_mut().zip(c) {
                row.push(x);
            }
        }
    }
    LinearCode::new(sys.space.field().clone(), rows)
}

fn check_r(space: &ProjectiveSpace, r: usize) -> Result<()> {
    if r == 0 || r > space.dim() {
        return Err(Error::OutOfRange {
            what: "r",
            value: r as i64,
        });
    }
    Ok(())
}

fn check_set(space: &ProjectiveSpace, set: &PointSet) -> Result<()> {
    if set.capacity() != space.num_points() {
        return Err(Error::SpaceMismatch);
    }
    Ok(())
}

/// Point sets of all `(N-r)`-flats. For `r = 1` these are the hyperplanes.
fn flats_as_sets(space: &ProjectiveSpace, r: usize) -> Result<Vec<PointSet>> {
    if r == 1 {
        return Ok((0..space.num_points())
            .map(|h| space.hyperplane_points(h).clone())
            .collect());
    }
    Ok(space
        .enumerate_flats(space.dim() - r)?
        .map(|fl| space.flat_points(&fl))
        .collect())
}

/// Smallest number of points of `set` on an `(N-r)`-flat.
pub fn blocking_multiplicity(space: &ProjectiveSpace, set: &PointSet, r: usize) -> Result<usize> {
    check_r(space, r)?;
    check_set(space, set)?;
    Ok(flats_as_sets(space, r)?
        .iter()
        .map(|fl| fl.intersection_len(set))
        .min()
        .unwrap_or(0))
}

/// Every `(N-r)`-flat meets `set` in at least `t` points.
pub fn is_tfold_rblocking(
    space: &ProjectiveSpace,
    set: &PointSet,
    t: usize,
    r: usize,
) -> Result<bool> {
    Ok(blocking_multiplicity(space, set, r)? >= t)
}

fn rank_within(space: &ProjectiveSpace, set: &PointSet, flat: &PointSet, target: usize) -> bool {
    let mut e = Echelon::new(space.field().clone());
    for p in set.intersection(flat).iter() {
        e.insert(space.coords(p));
        if e.rank() == target {
            return true;
        }
    }
    false
}

/// `set` meets every `(N-r)`-flat in a spanning subset.
pub fn is_cutting(space: &ProjectiveSpace, set: &PointSet, r: usize) -> Result<bool> {
    check_r(space, r)?;
    check_set(space, set)?;
    let target = space.dim() - r + 1;
    if r == 1 {
        return Ok((0..space.num_points())
            .all(|h| rank_within(space, set, space.hyperplane_points(h), target)));
    }
    Ok(space
        .enumerate_flats(space.dim() - r)?
        .all(|fl| rank_within(space, set, &space.flat_points(&fl), target)))
}

/// A cutting set from which no single point can be dropped.
pub fn is_minimal_cutting(space: &ProjectiveSpace, set: &PointSet, r: usize) -> Result<bool> {
    if !is_cutting(space, set, r)? {
        return Err(Error::NotCutting);
    }
    let mut rest = set.clone();
    for p in set.iter() {
        rest.remove(p);
        let still = is_cutting(space, &rest, r)?;
        rest.insert(p);
        if still {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Point indices of `set` on the line or flat spanned by `vectors`.
pub fn flat_of(space: &ProjectiveSpace, vectors: &[Vec<Elem>]) -> Result<PointSet> {
    let fl = space.flat_from_vectors(vectors)?;
    Ok(space.flat_points(&fl))
}

/// Weight of the codeword with message `v` read off the system:
/// `n - Char(H_v)`.
pub fn weight_from_system(sys: &ProjectiveSystem, v: &[Elem]) -> Result<usize> {
    let h = sys.space.index_of(v)?;
    Ok(sys.n() - sys.char_hyperplane(h) as usize)
}
