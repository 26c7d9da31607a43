//! The projective space `PG(N,q)`.
//!
//! Points are normalized vectors (first nonzero coordinate is one), ordered
//! lexicographically by their element encodings. The same table indexes the
//! hyperplanes: hyperplane `i` is `{x : <point_i, x> = 0}`.

use alloc::vec;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use crate::bitset::PointSet;
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::linalg::{self, Echelon, Matrix};

/// Upper bound on `q^(N+1)` for building a space.
pub const MAX_VECTORS: u64 = 1 << 22;

/// Number of points of `PG(k,q)`: `(q^(k+1) - 1)/(q - 1)`, zero for `k = -1`.
pub fn theta(q: u32, k: i32) -> Result<u64> {
    crate::gf::prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if k < -1 {
        return Err(Error::OutOfRange {
            what: "projective dimension",
            value: k as i64,
        });
    }
    Ok(theta_unchecked(q as u64, k))
}

pub(crate) fn theta_unchecked(q: u64, k: i32) -> u64 {
    (0..=k).fold(0, |acc, _| acc * q + 1)
}

/// Canonical representative of the projective class of `v`.
pub fn normalize(f: &Field, v: &[Elem]) -> Result<Vec<Elem>> {
    let mut w = v.to_vec();
    if linalg::normalize_in_place(f, &mut w) {
        Ok(w)
    } else {
        Err(Error::ZeroVector)
    }
}

/// All normalized nonzero combinations of the rows of `basis`.
pub(crate) fn projective_combinations(f: &Field, basis: &[Vec<Elem>]) -> Vec<Vec<Elem>> {
    let r = basis.len();
    let len = basis.first().map_or(0, |b| b.len());
    let q = f.q() as usize;
    let mut out = Vec::new();
    let mut coef = vec![0usize; r];
    for lead in 0..r {
        // coefficients: zero before `lead`, one at `lead`, free after
        let free = r - lead - 1;
        let total = q.pow(free as u32);
        for t in 0..total {
            let mut x = t;
            for c in coef.iter_mut().take(lead) {
                *c = 0;
            }
            coef[lead] = 1;
            for c in coef.iter_mut().skip(lead + 1) {
                *c = x % q;
                x /= q;
            }
            let mut v = vec![Elem::ZERO; len];
            for (row, &c) in basis.iter().zip(&coef) {
                linalg::axpy(f, &mut v, Elem(c as u8), row);
            }
            if linalg::normalize_in_place(f, &mut v) {
                out.push(v);
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    pub index: usize,
    pub coords: Vec<Elem>,
}

/// A flat of `PG(N,q)` stored by its reduced row echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flat {
    basis: Matrix,
    ambient: usize,
}

impl Flat {
    fn from_rows(f: &Field, rows: &[Vec<Elem>], ambient: usize) -> Flat {
        let (basis, _) = linalg::rref(f, rows);
        Flat { basis, ambient }
    }

    /// Projective dimension; `-1` for the empty flat.
    pub fn dim(&self) -> isize {
        self.basis.len() as isize - 1
    }

    pub fn basis(&self) -> &[Vec<Elem>] {
        &self.basis
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn is_hyperplane(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// Normalized normal vector of a hyperplane.
    pub fn normal(&self, f: &Field) -> Result<Vec<Elem>> {
        if !self.is_hyperplane() {
            return Err(Error::NotHyperplane {
                dim: self.dim(),
                n: self.ambient,
            });
        }
        let ns = linalg::null_space(f, &self.basis, self.ambient + 1);
        normalize(f, &ns[0])
    }

    pub fn contains(&self, f: &Field, v: &[Elem]) -> bool {
        let mut e = Echelon::new(f.clone());
        for row in &self.basis {
            e.insert(row);
        }
        e.contains(v)
    }
}

pub struct ProjectiveSpace {
    n: usize,
    field: Field,
    coords: Vec<Elem>,
    keys: Vec<u64>,
    incidence: OnceBox<Vec<PointSet>>,
}

impl core::fmt::Debug for ProjectiveSpace {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "PG({},{})", self.n, self.field.q())
    }
}

impl ProjectiveSpace {
    pub fn new(field: Field, n: usize) -> Result<ProjectiveSpace> {
        let q = field.q() as u64;
        let total = q
            .checked_pow(n as u32 + 1)
            .filter(|&t| t <= MAX_VECTORS)
            .ok_or(Error::OutOfRange {
                what: "q^(N+1)",
                value: n as i64,
            })?;
        if n == 0 {
            return Err(Error::OutOfRange {
                what: "projective dimension",
                value: 0,
            });
        }
        let width = n + 1;
        let mut coords = Vec::new();
        let mut keys = Vec::new();
        let mut digits = vec![0u8; width];
        for key in 0..total {
            let mut x = key;
            for d in digits.iter_mut().rev() {
                *d = (x % q) as u8;
                x /= q;
            }
            if digits.iter().find(|&&d| d != 0) == Some(&1) {
                coords.extend(digits.iter().map(|&d| Elem(d)));
                keys.push(key);
            }
        }
        Ok(ProjectiveSpace {
            n,
            field,
            coords,
            keys,
            incidence: OnceBox::new(),
        })
    }

    /// Projective dimension `N`.
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn num_points(&self) -> usize {
        self.keys.len()
    }

    pub fn same_as(&self, other: &ProjectiveSpace) -> bool {
        self.n == other.n && self.field == other.field
    }

    #[inline]
    pub fn coords(&self, i: usize) -> &[Elem] {
        let w = self.n + 1;
        &self.coords[i * w..(i + 1) * w]
    }

    pub fn point(&self, i: usize) -> Point {
        Point {
            index: i,
            coords: self.coords(i).to_vec(),
        }
    }

    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        (0..self.num_points()).map(|i| self.point(i))
    }

    fn check_len(&self, v: &[Elem]) -> Result<()> {
        if v.len() != self.n + 1 {
            return Err(Error::DimensionMismatch {
                expected: self.n + 1,
                got: v.len(),
            });
        }
        if let Some(&bad) = v.iter().find(|&&x| !self.field.contains(x)) {
            return Err(Error::ForeignElement {
                value: bad.value(),
                q: self.field.q(),
            });
        }
        Ok(())
    }

    /// Index of the point spanned by `v`.
    pub fn index_of(&self, v: &[Elem]) -> Result<usize> {
        self.check_len(v)?;
        let w = normalize(&self.field, v)?;
        Ok(self.index_of_normalized(&w))
    }

    pub(crate) fn index_of_normalized(&self, w: &[Elem]) -> usize {
        let q = self.field.q() as u64;
        let key = w.iter().fold(0u64, |acc, &d| acc * q + d.0 as u64);
        self.keys
            .binary_search(&key)
            .expect("normalized vector is in the point table")
    }

    pub fn normalize(&self, v: &[Elem]) -> Result<Point> {
        let index = self.index_of(v)?;
        Ok(self.point(index))
    }

    fn incidence(&self) -> &Vec<PointSet> {
        self.incidence.get_or_init(|| {
            let np = self.num_points();
            let mut inc: Vec<PointSet> = (0..np).map(|_| PointSet::new(np)).collect();
            for h in 0..np {
                for p in h..np {
                    if linalg::dot(&self.field, self.coords(h), self.coords(p)).is_zero() {
                        inc[h].insert(p);
                        inc[p].insert(h);
                    }
                }
            }
            alloc::boxed::Box::new(inc)
        })
    }

    /// Points on hyperplane `h`. By symmetry of the bilinear form this is
    /// also the set of hyperplanes through point `h`.
    pub fn hyperplane_points(&self, h: usize) -> &PointSet {
        &self.incidence()[h]
    }

    pub fn hyperplanes_through_point(&self, p: usize) -> &PointSet {
        &self.incidence()[p]
    }

    /// Hyperplane `h` as a flat.
    pub fn hyperplane(&self, h: usize) -> Flat {
        let ns = linalg::null_space(&self.field, &[self.coords(h).to_vec()], self.n + 1);
        Flat::from_rows(&self.field, &ns, self.n)
    }

    /// Index of the hyperplane equal to `flat`.
    pub fn hyperplane_index(&self, flat: &Flat) -> Result<usize> {
        let normal = flat.normal(&self.field)?;
        Ok(self.index_of_normalized(&normal))
    }

    pub fn flat_from_vectors(&self, vs: &[Vec<Elem>]) -> Result<Flat> {
        for v in vs {
            self.check_len(v)?;
        }
        Ok(Flat::from_rows(&self.field, vs, self.n))
    }

    pub fn span(&self, pts: &[Point]) -> Result<Flat> {
        let rows: Vec<Vec<Elem>> = pts.iter().map(|p| p.coords.clone()).collect();
        for (p, row) in pts.iter().zip(&rows) {
            self.check_len(row)?;
            if p.index >= self.num_points() || self.coords(p.index) != &row[..] {
                return Err(Error::SpaceMismatch);
            }
        }
        Ok(Flat::from_rows(&self.field, &rows, self.n))
    }

    /// Rank of the span of a set of point indices.
    pub fn rank_of(&self, set: impl IntoIterator<Item = usize>) -> usize {
        let mut e = Echelon::new(self.field.clone());
        for i in set {
            if e.rank() == self.n + 1 {
                break;
            }
            e.insert(self.coords(i));
        }
        e.rank()
    }

    pub fn incident(&self, p: &Point, h: &Flat) -> Result<bool> {
        self.check_len(&p.coords)?;
        if h.ambient != self.n {
            return Err(Error::SpaceMismatch);
        }
        let normal = h.normal(&self.field)?;
        Ok(linalg::dot(&self.field, &normal, &p.coords).is_zero())
    }

    /// The `q+1` points of the line through two distinct points, by index.
    pub fn line_through(&self, p: &Point, q: &Point) -> Result<Vec<Point>> {
        let idx = self.line_indices(p.index, q.index)?;
        Ok(idx.into_iter().map(|i| self.point(i)).collect())
    }

    pub fn line_indices(&self, a: usize, b: usize) -> Result<Vec<usize>> {
        if a == b {
            return Err(Error::CoincidentPoints);
        }
        let rows = [self.coords(a).to_vec(), self.coords(b).to_vec()];
        let mut idx: Vec<usize> = projective_combinations(&self.field, &rows)
            .iter()
            .map(|v| self.index_of_normalized(v))
            .collect();
        idx.sort_unstable();
        Ok(idx)
    }

    /// Point indices lying on `flat`.
    pub fn flat_points(&self, flat: &Flat) -> PointSet {
        PointSet::from_indices(
            self.num_points(),
            projective_combinations(&self.field, &flat.basis)
                .iter()
                .map(|v| self.index_of_normalized(v)),
        )
    }

    /// Indices of the hyperplanes containing `flat`, ascending.
    pub fn hyperplane_indices_through(&self, flat: &Flat) -> Result<Vec<usize>> {
        if flat.ambient != self.n {
            return Err(Error::SpaceMismatch);
        }
        if flat.dim() >= self.n as isize {
            return Err(Error::OutOfRange {
                what: "flat dimension (whole space)",
                value: flat.dim() as i64,
            });
        }
        let normals = if flat.basis.is_empty() {
            (0..=self.n)
                .map(|i| {
                    let mut e = vec![Elem::ZERO; self.n + 1];
                    e[i] = Elem::ONE;
                    e
                })
                .collect()
        } else {
            linalg::null_space(&self.field, &flat.basis, self.n + 1)
        };
        let mut idx: Vec<usize> = projective_combinations(&self.field, &normals)
            .iter()
            .map(|v| self.index_of_normalized(v))
            .collect();
        idx.sort_unstable();
        Ok(idx)
    }

    pub fn hyperplanes_through(&self, flat: &Flat) -> Result<Vec<Flat>> {
        Ok(self
            .hyperplane_indices_through(flat)?
            .into_iter()
            .map(|h| self.hyperplane(h))
            .collect())
    }

    /// Every `d`-flat exactly once, ordered by pivot columns and then by the
    /// free entries of the reduced basis.
    pub fn enumerate_flats(&self, d: usize) -> Result<impl Iterator<Item = Flat> + '_> {
        if d >= self.n {
            return Err(Error::OutOfRange {
                what: "flat dimension",
                value: d as i64,
            });
        }
        let width = self.n + 1;
        let rank = d + 1;
        let q = self.field.q() as usize;
        let ambient = self.n;
        let pivot_sets = combinations(width, rank);
        Ok(pivot_sets.into_iter().flat_map(move |pivots| {
            // free slots: (row, col) with col > pivot[row], col not a pivot
            let slots: Vec<(usize, usize)> = (0..rank)
                .flat_map(|r| {
                    let pv = pivots.clone();
                    ((pivots[r] + 1)..width)
                        .filter(move |c| !pv.contains(c))
                        .map(move |c| (r, c))
                })
                .collect();
            let total = q.pow(slots.len() as u32);
            let pivots = pivots.clone();
            (0..total).map(move |t| {
                let mut basis = vec![vec![Elem::ZERO; width]; rank];
                for (r, &pc) in pivots.iter().enumerate() {
                    basis[r][pc] = Elem::ONE;
                }
                let mut x = t;
                for &(r, c) in slots.iter().rev() {
                    basis[r][c] = Elem((x % q) as u8);
                    x /= q;
                }
                Flat { basis, ambient }
            })
        }))
    }
}

/// All `r`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if r > n {
        return out;
    }
    let mut c: Vec<usize> = (0..r).collect();
    loop {
        out.push(c.clone());
        let Some(i) = (0..r).rev().find(|&i| c[i] != i + n - r) else {
            break;
        };
        c[i] += 1;
        for j in i + 1..r {
            c[j] = c[j - 1] + 1;
        }
    }
    out
}
