#![allow(dead_code)]

use cutcode_core::linalg::{self, Matrix};
use cutcode_core::{Elem, Field, LinearCode};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// A random non-degenerate code with `k <= n`.
pub fn random_code(rng: &mut ChaCha8Rng, q: u32, k: usize, n: usize) -> LinearCode {
    let f = Field::new(q).unwrap();
    loop {
        let mut rows: Matrix = vec![vec![Elem::ZERO; n]; k];
        for j in 0..n {
            loop {
                for row in rows.iter_mut() {
                    row[j] = Elem(rng.gen_range(0..q) as u8);
                }
                if rows.iter().any(|r| !r[j].is_zero()) {
                    break;
                }
            }
        }
        if linalg::rank(&f, &rows) == k {
            return LinearCode::new(f, rows).unwrap();
        }
    }
}

/// Parameters drawn from q in {2,3,4}, k in 2..=4, n in k..=12.
pub fn random_params(rng: &mut ChaCha8Rng) -> (u32, usize, usize) {
    let q = [2, 3, 4][rng.gen_range(0..3)];
    let k = rng.gen_range(2..=4);
    let n = rng.gen_range(k..=12);
    (q, k, n)
}

/// A random monomial image of `c`.
pub fn shuffle(rng: &mut ChaCha8Rng, c: &LinearCode) -> LinearCode {
    let n = c.n();
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let q = c.field().q();
    let scalars: Vec<Elem> = (0..n).map(|_| Elem(rng.gen_range(1..q) as u8)).collect();
    c.monomial(&perm, &scalars).unwrap()
}
