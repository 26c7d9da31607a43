//! Monomial equivalence of codes through collineations of their point
//! multisets.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::code::LinearCode;
use crate::correspond::{self, ProjectiveSystem};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::linalg::{self, Echelon, Matrix};
use crate::pg::ProjectiveSpace;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivalenceLimits {
    pub max_n: usize,
    /// Partial assignments tried before giving up.
    pub max_nodes: u64,
}

impl Default for EquivalenceLimits {
    fn default() -> Self {
        EquivalenceLimits {
            max_n: 256,
            max_nodes: 20_000_000,
        }
    }
}

/// Coordinate `j` of `A` moves to `perm[j]` and is multiplied by
/// `scalars[j]`; the result has the same row space as `B`. `collineation`
/// maps the columns of `A` to those of `B` as points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceCertificate {
    pub perm: Vec<usize>,
    pub scalars: Vec<Elem>,
    pub collineation: Matrix,
}

impl EquivalenceCertificate {
    pub fn apply(&self, a: &LinearCode) -> Result<LinearCode> {
        a.monomial(&self.perm, &self.scalars)
    }

    /// Re-encodes `a` and compares row spaces with `b`.
    pub fn verify(&self, a: &LinearCode, b: &LinearCode) -> bool {
        self.apply(a).map(|c| c.same_code(b)).unwrap_or(false)
    }
}

type Invariant = (u32, Vec<u64>);

/// Multiplicity plus the sorted hyperplane intersection sizes through
/// each support point.
pub(crate) fn point_invariants(sys: &ProjectiveSystem) -> BTreeMap<usize, Invariant> {
    let space = sys.space();
    let chars: Vec<u64> = (0..space.num_points())
        .map(|h| sys.char_hyperplane(h))
        .collect();
    sys.multiplicities()
        .iter()
        .map(|(&p, &m)| {
            let mut v: Vec<u64> = space
                .hyperplanes_through_point(p)
                .iter()
                .map(|h| chars[h])
                .collect();
            v.sort_unstable();
            (p, (m, v))
        })
        .collect()
}

fn k1_certificate(a: &LinearCode, b: &LinearCode) -> EquivalenceCertificate {
    let f = a.field();
    let scalars = (0..a.n())
        .map(|j| f.div(b.rows()[0][j], a.rows()[0][j]).expect("nonzero"))
        .collect();
    EquivalenceCertificate {
        perm: (0..a.n()).collect(),
        scalars,
        collineation: vec![vec![Elem::ONE]],
    }
}

struct Search<'a> {
    f: &'a Field,
    space: &'a ProjectiveSpace,
    sa: &'a ProjectiveSystem,
    sb: &'a ProjectiveSystem,
    inv_a: BTreeMap<usize, Invariant>,
    inv_b: BTreeMap<usize, Invariant>,
    basis: Vec<usize>,
    anchor: Option<(usize, Vec<Elem>)>,
    k: usize,
    nodes: u64,
    limit: u64,
}

impl Search<'_> {
    fn candidates(&self, p: usize) -> Vec<usize> {
        let want = &self.inv_a[&p];
        self.inv_b
            .iter()
            .filter(|(_, inv)| *inv == want)
            .map(|(&b, _)| b)
            .collect()
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::EquivalenceLimit(format!(
                "more than {} partial matchings",
                self.limit
            )));
        }
        Ok(())
    }

    fn assign(&mut self, images: &mut Vec<usize>) -> Result<Option<Matrix>> {
        if images.len() == self.k {
            return self.scalars(images);
        }
        let p = self.basis[images.len()];
        for b in self.candidates(p) {
            if images.contains(&b) {
                continue;
            }
            let mut e = Echelon::new(self.f.clone());
            for &i in images.iter() {
                e.insert(self.space.coords(i));
            }
            if !e.insert(self.space.coords(b)) {
                continue;
            }
            self.tick()?;
            images.push(b);
            if let Some(t) = self.assign(images)? {
                return Ok(Some(t));
            }
            images.pop();
        }
        Ok(None)
    }

    /// Tries the column scalings of the image basis.
    fn scalars(&mut self, images: &[usize]) -> Result<Option<Matrix>> {
        let k = self.k;
        let img: Matrix = images
            .iter()
            .map(|&b| self.space.coords(b).to_vec())
            .collect();
        let mut fixed: Vec<Option<Elem>> = vec![None; k];
        let mut anchor_options: Vec<Vec<Option<Elem>>> = Vec::new();
        if let Some((ap, c)) = self.anchor.clone() {
            // anchor image must be sum_i c_i l_i b_i up to scale
            let inv_img = linalg::inverse(self.f, &linalg::transpose(&img, k))
                .expect("image basis is independent");
            for b in self.candidates(ap) {
                if images.contains(&b) {
                    continue;
                }
                let x = linalg::mat_vec(self.f, &inv_img, self.space.coords(b));
                if (0..k).any(|i| c[i].is_zero() != x[i].is_zero()) {
                    continue;
                }
                anchor_options.push(
                    (0..k)
                        .map(|i| {
                            if c[i].is_zero() {
                                None
                            } else {
                                Some(self.f.div(x[i], c[i]).expect("nonzero"))
                            }
                        })
                        .collect(),
                );
            }
        } else {
            anchor_options.push(vec![None; k]);
        }
        for opt in anchor_options {
            fixed.clone_from(&opt);
            if fixed[0].is_none() && fixed.iter().all(|x| x.is_none()) {
                fixed[0] = Some(Elem::ONE);
            }
            let free: Vec<usize> = (0..k).filter(|&i| fixed[i].is_none()).collect();
            let units: Vec<Elem> = self.f.nonzero().collect();
            let total = units.len().pow(free.len() as u32);
            for t in 0..total {
                self.tick()?;
                let mut lam: Vec<Elem> = fixed.iter().map(|x| x.unwrap_or(Elem::ONE)).collect();
                let mut x = t;
                for &i in &free {
                    lam[i] = units[x % units.len()];
                    x /= units.len();
                }
                if let Some(m) = self.try_map(images, &lam) {
                    return Ok(Some(m));
                }
            }
        }
        Ok(None)
    }

    fn try_map(&self, images: &[usize], lam: &[Elem]) -> Option<Matrix> {
        let k = self.k;
        let f = self.f;
        // columns: basis points of A and scaled images in B
        let a_cols: Matrix = self
            .basis
            .iter()
            .map(|&p| self.space.coords(p).to_vec())
            .collect();
        let b_cols: Matrix = images
            .iter()
            .zip(lam)
            .map(|(&b, &l)| {
                let mut v = self.space.coords(b).to_vec();
                linalg::scale(f, &mut v, l);
                v
            })
            .collect();
        let a_inv = linalg::inverse(f, &linalg::transpose(&a_cols, k))?;
        let t = linalg::mat_mul(f, &linalg::transpose(&b_cols, k), &a_inv, k);
        for (&p, &m) in self.sa.multiplicities() {
            let v = linalg::mat_vec(f, &t, self.space.coords(p));
            let idx = self.space.index_of(&v).ok()?;
            if self.sb.multiplicity(idx) != m {
                return None;
            }
        }
        Some(t)
    }
}

/// Searches for a monomial map taking `a` to `b`. `Ok(None)` means the
/// codes are not equivalent; an error means the limits were hit and no
/// verdict is given.
pub fn are_equivalent(
    a: &LinearCode,
    b: &LinearCode,
    limits: &EquivalenceLimits,
) -> Result<Option<EquivalenceCertificate>> {
    if a.field() != b.field() {
        return Err(Error::InvalidParameter(
            "codes over different fields".into(),
        ));
    }
    for c in [a, b] {
        if let Some(j) = c.zero_column() {
            return Err(Error::Degenerate(j));
        }
    }
    if a.n() != b.n() || a.k() != b.k() {
        return Ok(None);
    }
    if a.n() > limits.max_n {
        return Err(Error::EquivalenceLimit(format!(
            "length {} exceeds {}",
            a.n(),
            limits.max_n
        )));
    }
    if a.k() == 1 {
        return Ok(Some(k1_certificate(a, b)));
    }
    if let (Ok(wa), Ok(wb)) = (a.weight_distribution(), b.weight_distribution()) {
        if wa != wb {
            return Ok(None);
        }
    }
    let f = a.field().clone();
    let k = a.k();
    let space = Arc::new(ProjectiveSpace::new(f.clone(), k - 1)?);
    let sa = correspond::phi_in(space.clone(), a)?;
    let sb = correspond::phi_in(space.clone(), b)?;
    let inv_a = point_invariants(&sa);
    let inv_b = point_invariants(&sb);
    let mut ma: Vec<&Invariant> = inv_a.values().collect();
    let mut mb: Vec<&Invariant> = inv_b.values().collect();
    ma.sort();
    mb.sort();
    if ma != mb {
        return Ok(None);
    }

    // basis of A's support, rarest invariant first
    let mut class_size: BTreeMap<&Invariant, usize> = BTreeMap::new();
    for inv in inv_b.values() {
        *class_size.entry(inv).or_insert(0) += 1;
    }
    let mut order: Vec<usize> = inv_a.keys().copied().collect();
    order.sort_by_key(|p| (class_size[&inv_a[p]], *p));
    let mut e = Echelon::new(f.clone());
    let mut basis = Vec::new();
    for &p in &order {
        if e.insert(space.coords(p)) {
            basis.push(p);
        }
    }
    let basis_cols: Matrix = basis.iter().map(|&p| space.coords(p).to_vec()).collect();
    let binv = linalg::inverse(&f, &linalg::transpose(&basis_cols, k)).expect("basis");
    let anchor = order
        .iter()
        .filter(|p| !basis.contains(p))
        .map(|&p| (p, linalg::mat_vec(&f, &binv, space.coords(p))))
        .max_by_key(|(p, c)| (c.iter().filter(|x| !x.is_zero()).count(), usize::MAX - p));

    let mut search = Search {
        f: &f,
        space: &space,
        sa: &sa,
        sb: &sb,
        inv_a: inv_a.clone(),
        inv_b: inv_b.clone(),
        basis,
        anchor,
        k,
        nodes: 0,
        limit: limits.max_nodes,
    };
    let Some(t) = search.assign(&mut Vec::new())? else {
        return Ok(None);
    };

    // column matching
    let mut b_cols: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for j in 0..b.n() {
        b_cols
            .entry(space.index_of(&b.column(j))?)
            .or_default()
            .push(j);
    }
    let mut perm = vec![0; a.n()];
    let mut scalars = vec![Elem::ZERO; a.n()];
    for j in 0..a.n() {
        let v = linalg::mat_vec(&f, &t, &a.column(j));
        let idx = space.index_of(&v)?;
        let jb = b_cols
            .get_mut(&idx)
            .and_then(|v| v.pop())
            .ok_or(Error::SpaceMismatch)?;
        let g = b.column(jb);
        let piv = v.iter().position(|x| !x.is_zero()).expect("nonzero image");
        perm[j] = jb;
        scalars[j] = f.div(g[piv], v[piv])?;
    }
    let cert = EquivalenceCertificate {
        perm,
        scalars,
        collineation: t,
    };
    debug_assert!(cert.verify(a, b));
    Ok(Some(cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct;

    #[test]
    fn shuffled_copy_is_equivalent() {
        let c = construct::dim4(3, Elem(2)).unwrap().code;
        let n = c.n();
        let perm: Vec<usize> = (0..n).map(|j| (j * 5 + 3) % n).collect();
        let scalars: Vec<Elem> = (0..n).map(|j| Elem(1 + (j % 2) as u8)).collect();
        let d = c.monomial(&perm, &scalars).unwrap();
        let cert = are_equivalent(&c, &d, &Default::default())
            .unwrap()
            .unwrap();
        assert!(cert.verify(&c, &d));
    }

    #[test]
    fn q2_thirteen_point_codes_differ() {
        let p = construct::pentagonal(2, None).unwrap().code;
        let h = construct::hexagonal_q2().unwrap().code;
        assert!(are_equivalent(&p, &h, &Default::default())
            .unwrap()
            .is_none());
        assert!(are_equivalent(&h, &h, &Default::default())
            .unwrap()
            .is_some());
    }

    #[test]
    fn different_lengths() {
        let a = construct::tetrahedron(2, 3).unwrap().code;
        let b = construct::simplex(2, 3).unwrap().code;
        assert!(are_equivalent(&a, &b, &Default::default())
            .unwrap()
            .is_none());
    }

    #[test]
    fn limit_is_an_error() {
        let c = construct::simplex(2, 4).unwrap().code;
        let lim = EquivalenceLimits {
            max_n: 10,
            ..Default::default()
        };
        assert!(matches!(
            are_equivalent(&c, &c, &lim),
            Err(Error::EquivalenceLimit(_))
        ));
    }
}
