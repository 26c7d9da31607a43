//! Dense linear algebra over a [`Field`] on row-major `Vec<Vec<Elem>>`.

use alloc::vec;
use alloc::vec::Vec;

use crate::gf::{Elem, Field};

pub type Matrix = Vec<Vec<Elem>>;

pub fn dot(f: &Field, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter()
        .zip(b)
        .fold(Elem::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// `y += a * x`
pub fn axpy(f: &Field, y: &mut [Elem], a: Elem, x: &[Elem]) {
    if a.is_zero() {
        return;
    }
    for (yi, &xi) in y.iter_mut().zip(x) {
        *yi = f.add(*yi, f.mul(a, xi));
    }
}

pub fn scale(f: &Field, v: &mut [Elem], a: Elem) {
    for x in v.iter_mut() {
        *x = f.mul(*x, a);
    }
}

/// Scales `v` so that its first nonzero entry is one. Returns `false` for
/// the zero vector.
pub fn normalize_in_place(f: &Field, v: &mut [Elem]) -> bool {
    match v.iter().find(|x| !x.is_zero()) {
        Some(&lead) => {
            if lead != Elem::ONE {
                let s = f.inv_nz(lead);
                scale(f, v, s);
            }
            true
        }
        None => false,
    }
}

pub fn transpose(m: &[Vec<Elem>], ncols: usize) -> Matrix {
    (0..ncols)
        .map(|j| m.iter().map(|row| row[j]).collect())
        .collect()
}

/// Row vector times matrix.
pub fn vec_mat(f: &Field, v: &[Elem], m: &[Vec<Elem>], ncols: usize) -> Vec<Elem> {
    let mut out = vec![Elem::ZERO; ncols];
    for (&a, row) in v.iter().zip(m) {
        axpy(f, &mut out, a, row);
    }
    out
}

/// Matrix times column vector.
pub fn mat_vec(f: &Field, m: &[Vec<Elem>], v: &[Elem]) -> Vec<Elem> {
    m.iter().map(|row| dot(f, row, v)).collect()
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot
/// columns.
pub fn rref(f: &Field, rows: &[Vec<Elem>]) -> (Matrix, Vec<usize>) {
    let mut m: Matrix = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(pr) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let s = f.inv_nz(m[r][c]);
        scale(f, &mut m[r], s);
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let a = f.neg(row[c]);
                axpy(f, row, a, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(f: &Field, rows: &[Vec<Elem>]) -> usize {
    let mut e = Echelon::new(f.clone());
    for row in rows {
        e.insert(row);
    }
    e.rank()
}

/// Basis of `{x : rows * x = 0}` for vectors of length `ncols`.
pub fn null_space(f: &Field, rows: &[Vec<Elem>], ncols: usize) -> Matrix {
    let (m, pivots) = rref(f, rows);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut x = vec![Elem::ZERO; ncols];
        x[free] = Elem::ONE;
        for (row, &pc) in m.iter().zip(&pivots) {
            x[pc] = f.neg(row[free]);
        }
        basis.push(x);
    }
    basis
}

/// Basis of `{y : y * m = 0}`.
pub fn left_null_space(f: &Field, m: &[Vec<Elem>], ncols: usize) -> Matrix {
    null_space(f, &transpose(m, ncols), m.len())
}

/// Inverse of a square matrix, if it is invertible.
pub fn inverse(f: &Field, m: &[Vec<Elem>]) -> Option<Matrix> {
    let n = m.len();
    let aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Elem::ONE } else { Elem::ZERO }));
            r
        })
        .collect();
    let (red, pivots) = rref(f, &aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul(f: &Field, a: &[Vec<Elem>], b: &[Vec<Elem>], bcols: usize) -> Matrix {
    a.iter().map(|row| vec_mat(f, row, b, bcols)).collect()
}

/// Incrementally built echelon basis, used for rank and membership tests.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    rows: Vec<(usize, Vec<Elem>)>,
}

impl Echelon {
    pub fn new(field: Field) -> Self {
        Echelon {
            field,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [Elem]) {
        for (pc, row) in &self.rows {
            let c = v[*pc];
            if !c.is_zero() {
                axpy(&self.field, v, self.field.neg(c), row);
            }
        }
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    /// Adds `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &[Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        match w.iter().position(|x| !x.is_zero()) {
            Some(pc) => {
                let s = self.field.inv_nz(w[pc]);
                scale(&self.field, &mut w, s);
                self.rows.push((pc, w));
                true
            }
            None => false,
        }
    }
}
