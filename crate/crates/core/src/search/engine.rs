//! Bit-parallel depth-first search for cutting sets in spaces with at most
//! 64 points.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::pg::ProjectiveSpace;

use super::{Mode, SearchOptions, Symmetry};

/// Largest point count the engine handles.
pub const MAX_POINTS: usize = 64;

#[derive(Clone)]
struct State {
    rank: Vec<u8>,
    span: Vec<u64>,
    deficient: u64,
}

/// Outcome of one top-level branch.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BranchOutcome {
    pub found: Vec<Vec<usize>>,
    pub count: u128,
    pub nodes: u64,
    pub complete: bool,
    pub truncated: bool,
}

pub struct Engine {
    q: u32,
    k: usize,
    n: usize,
    theta: usize,
    hyper: Vec<u64>,
    lines: Vec<u64>,
    fixed: Vec<usize>,
    free: u64,
    mode: Mode,
    max_results: usize,
    root: Option<State>,
}

fn bit(i: usize) -> u64 {
    1u64 << i
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let b = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(b)
    })
}

fn binom(n: u64, r: u64) -> u128 {
    if r > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

impl Engine {
    pub fn new(q: u32, k: usize, n: usize, opts: &SearchOptions) -> Result<Engine> {
        if k < 2 {
            return Err(Error::OutOfRange {
                what: "k",
                value: k as i64,
            });
        }
        let space = ProjectiveSpace::new(Field::new(q)?, k - 1)?;
        Self::with_space(&space, n, opts)
    }

    pub fn with_space(space: &ProjectiveSpace, n: usize, opts: &SearchOptions) -> Result<Engine> {
        let theta = space.num_points();
        let k = space.dim() + 1;
        if theta > MAX_POINTS {
            return Err(Error::SpaceTooLarge {
                n: space.dim(),
                q: space.field().q(),
                points: theta as u64,
            });
        }
        let hyper: Vec<u64> = (0..theta)
            .map(|h| space.hyperplane_points(h).words()[0])
            .collect();
        let mut lines = vec![0u64; theta * theta];
        for a in 0..theta {
            lines[a * theta + a] = bit(a);
            for b in a + 1..theta {
                let m = space
                    .line_indices(a, b)?
                    .into_iter()
                    .fold(0u64, |m, p| m | bit(p));
                lines[a * theta + b] = m;
                lines[b * theta + a] = m;
            }
        }
        let fixed: Vec<usize> = match opts.symmetry {
            Symmetry::None => Vec::new(),
            Symmetry::FirstPoint => vec![0],
            Symmetry::Frame => (0..k)
                .map(|i| {
                    let mut v = vec![Elem::ZERO; k];
                    v[i] = Elem::ONE;
                    space.index_of(&v)
                })
                .collect::<Result<_>>()?,
        };
        let all = if theta == 64 {
            u64::MAX
        } else {
            bit(theta) - 1
        };
        let free = fixed.iter().fold(all, |m, &p| m & !bit(p));
        let mut e = Engine {
            q: space.field().q(),
            k,
            n,
            theta,
            hyper,
            lines,
            fixed,
            free,
            mode: opts.mode,
            max_results: opts.max_results,
            root: None,
        };
        if e.fixed.len() <= n {
            let mut st = State {
                rank: vec![0; theta],
                span: vec![0; theta],
                deficient: all,
            };
            for p in e.fixed.clone() {
                e.add(&mut st, p);
            }
            e.root = Some(st);
        }
        Ok(e)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn num_points(&self) -> usize {
        self.theta
    }

    /// Points every reported set contains because of the symmetry cut.
    pub fn fixed(&self) -> &[usize] {
        &self.fixed
    }

    fn add(&self, st: &mut State, p: usize) {
        let pb = bit(p);
        let target = (self.k - 1) as u8;
        for h in bits(self.hyper[p]) {
            let span = st.span[h];
            if span & pb != 0 {
                continue;
            }
            let mut new = span | pb;
            for s in bits(span) {
                new |= self.lines[s * self.theta + p];
            }
            st.span[h] = new;
            st.rank[h] += 1;
            if st.rank[h] == target {
                st.deficient &= !bit(h);
            }
        }
    }

    /// Top-level branches: `None` when the root is decided on its own,
    /// otherwise the first free point added.
    pub fn branches(&self) -> Vec<Option<usize>> {
        let Some(root) = &self.root else {
            return Vec::new();
        };
        let slots = self.n - self.fixed.len();
        if slots == 0 || root.deficient == 0 {
            return vec![None];
        }
        if self.prune(root, self.free, slots) {
            return Vec::new();
        }
        bits(self.free).map(Some).collect()
    }

    /// Runs one branch with its own node budget.
    pub fn run_branch(&self, branch: Option<usize>, budget: Option<u64>) -> BranchOutcome {
        let mut out = BranchOutcome {
            complete: true,
            ..Default::default()
        };
        let Some(root) = &self.root else {
            return out;
        };
        let mut chosen = self.fixed.clone();
        let mut ctx = Ctx {
            out: &mut out,
            budget: budget.unwrap_or(u64::MAX),
            stop: false,
        };
        let slots = self.n - self.fixed.len();
        match branch {
            None => self.dfs(root, &mut chosen, self.free, slots, &mut ctx),
            Some(p) => {
                let mut st = root.clone();
                self.add(&mut st, p);
                chosen.push(p);
                let cand = self.free & !(bit(p) | (bit(p) - 1));
                self.dfs(&st, &mut chosen, cand, slots - 1, &mut ctx);
            }
        }
        out
    }

    /// True when no completion of `st` with `slots` points from `cand`
    /// can be cutting.
    fn prune(&self, st: &State, cand: u64, slots: usize) -> bool {
        let target = self.k - 1;
        let mut gains = [0u8; MAX_POINTS];
        let mut total_need = 0usize;
        for h in bits(st.deficient) {
            let need = target - st.rank[h] as usize;
            if need > slots {
                return true;
            }
            let avail = cand & self.hyper[h] & !st.span[h];
            if (avail.count_ones() as usize) < need {
                return true;
            }
            total_need += need;
            for p in bits(avail) {
                gains[p] += 1;
            }
        }
        let mut g: Vec<u8> = bits(cand).map(|p| gains[p]).collect();
        if g.len() < slots {
            return true;
        }
        g.sort_unstable_by(|a, b| b.cmp(a));
        let best: usize = g[..slots].iter().map(|&x| x as usize).sum();
        best < total_need
    }

    fn record(&self, set: &[usize], ctx: &mut Ctx) {
        ctx.out.count += 1;
        match self.mode {
            Mode::Count => {}
            Mode::First => {
                ctx.out.found.push(sorted(set));
                ctx.stop = true;
            }
            Mode::All => {
                if ctx.out.found.len() < self.max_results {
                    ctx.out.found.push(sorted(set));
                } else {
                    ctx.out.truncated = true;
                }
            }
        }
    }

    fn complete_all(&self, chosen: &mut Vec<usize>, cand: u64, slots: usize, ctx: &mut Ctx) {
        if slots == 0 {
            self.record(chosen, ctx);
            return;
        }
        for p in bits(cand) {
            if ctx.stop {
                return;
            }
            let rest = cand & !(bit(p) | (bit(p) - 1));
            if (rest.count_ones() as usize) + 1 < slots {
                return;
            }
            chosen.push(p);
            self.complete_all(chosen, rest, slots - 1, ctx);
            chosen.pop();
        }
    }

    fn dfs(&self, st: &State, chosen: &mut Vec<usize>, cand: u64, slots: usize, ctx: &mut Ctx) {
        if ctx.stop {
            return;
        }
        if ctx.out.nodes >= ctx.budget {
            ctx.out.complete = false;
            ctx.stop = true;
            return;
        }
        ctx.out.nodes += 1;
        if st.deficient == 0 {
            let m = cand.count_ones() as u64;
            match self.mode {
                Mode::Count => ctx.out.count += binom(m, slots as u64),
                _ => self.complete_all(chosen, cand, slots, ctx),
            }
            return;
        }
        if slots == 0 || self.prune(st, cand, slots) {
            return;
        }
        for p in bits(cand) {
            if ctx.stop {
                return;
            }
            let rest = cand & !(bit(p) | (bit(p) - 1));
            if (rest.count_ones() as usize) + 1 < slots {
                return;
            }
            let mut next = st.clone();
            self.add(&mut next, p);
            chosen.push(p);
            self.dfs(&next, chosen, rest, slots - 1, ctx);
            chosen.pop();
        }
    }
}

struct Ctx<'a> {
    out: &'a mut BranchOutcome,
    budget: u64,
    stop: bool,
}

fn sorted(set: &[usize]) -> Vec<usize> {
    let mut v = set.to_vec();
    v.sort_unstable();
    v
}
