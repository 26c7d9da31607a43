//! Exhaustive search for cutting sets, code equivalence and
//! classification.

use alloc::vec::Vec;

use crate::bitset::PointSet;
use crate::bounds;
use crate::correspond;
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::pg::ProjectiveSpace;

mod classify;
pub mod engine;
mod equiv;
pub mod stretch;

pub use classify::{classify, classify_codes, set_invariant, Class};
pub use engine::{BranchOutcome, Engine};
pub use equiv::{are_equivalent, EquivalenceCertificate, EquivalenceLimits};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Stop at the first hit.
    First,
    /// Collect hits, up to `max_results`.
    All,
    /// Count hits without storing them.
    Count,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::First => "first",
            Mode::All => "all",
            Mode::Count => "count",
        }
    }
}

/// Points forced into every candidate set. Each choice is safe for
/// existence questions because the collineation group is transitive on
/// points and on ordered bases, and a cutting set spans the space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    None,
    /// Point 0 is always chosen.
    FirstPoint,
    /// The `k` standard basis points are always chosen.
    Frame,
}

impl Symmetry {
    pub fn name(self) -> &'static str {
        match self {
            Symmetry::None => "none",
            Symmetry::FirstPoint => "first-point",
            Symmetry::Frame => "frame",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub mode: Mode,
    /// Total node budget, split evenly over the top-level branches.
    pub budget: Option<u64>,
    pub symmetry: Symmetry,
    pub max_results: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            mode: Mode::First,
            budget: None,
            symmetry: Symmetry::FirstPoint,
            max_results: 100_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub q: u32,
    pub k: usize,
    pub n: usize,
    pub mode: Mode,
    pub symmetry: Symmetry,
    /// Hits as ascending point-index lists, sorted.
    pub found: Vec<Vec<usize>>,
    /// Number of hits (for `First`, at most one).
    pub count: u128,
    /// No branch ran out of budget.
    pub exhaustive: bool,
    /// `All` mode hit `max_results`.
    pub truncated: bool,
    pub nodes: u64,
}

/// Per-branch budget; identical for any number of workers.
pub fn branch_budget(opts: &SearchOptions, branches: usize) -> Option<u64> {
    opts.budget.map(|b| (b / branches.max(1) as u64).max(1))
}

/// Combines branch outcomes given in branch order.
pub fn merge(
    engine: &Engine,
    n: usize,
    opts: &SearchOptions,
    outcomes: Vec<BranchOutcome>,
) -> SearchReport {
    let mut report = SearchReport {
        q: engine.q(),
        k: engine.k(),
        n,
        mode: opts.mode,
        symmetry: opts.symmetry,
        found: Vec::new(),
        count: 0,
        exhaustive: true,
        truncated: false,
        nodes: 0,
    };
    for o in outcomes {
        report.nodes += o.nodes;
        report.exhaustive &= o.complete;
        report.truncated |= o.truncated;
        report.count += o.count;
        if opts.mode == Mode::First && !o.found.is_empty() {
            report.found = o.found;
            report.count = 1;
            break;
        }
        if opts.mode == Mode::All {
            let room = opts.max_results.saturating_sub(report.found.len());
            if o.found.len() > room {
                report.truncated = true;
            }
            report.found.extend(o.found.into_iter().take(room));
        }
    }
    report.found.sort();
    report
}

/// Cutting sets of size `n` in `PG(k-1,q)`, single-threaded.
pub fn find_cutting_sets(q: u32, k: usize, n: usize, opts: &SearchOptions) -> Result<SearchReport> {
    let engine = Engine::new(q, k, n, opts)?;
    let branches = engine.branches();
    let budget = branch_budget(opts, branches.len());
    let mut outcomes = Vec::new();
    for b in branches {
        let o = engine.run_branch(b, budget);
        let hit = opts.mode == Mode::First && !o.found.is_empty();
        outcomes.push(o);
        if hit {
            break;
        }
    }
    Ok(merge(&engine, n, opts, outcomes))
}

/// Checks every hit with the general-purpose predicate.
pub fn verify_hits(report: &SearchReport) -> Result<bool> {
    let space = ProjectiveSpace::new(Field::new(report.q)?, report.k - 1)?;
    for set in &report.found {
        let s = PointSet::from_indices(space.num_points(), set.iter().copied());
        if s.len() != report.n || !correspond::is_cutting(&space, &s, 1)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Smallest `n <= n_max` admitting a cutting set, scanning up from the
/// best proven lower bound. Returns the length and the report at it.
pub fn shortest_minimal_length(
    q: u32,
    k: usize,
    n_max: usize,
    opts: &SearchOptions,
) -> Result<(usize, SearchReport)> {
    shortest_with(q, k, n_max, |n| {
        let o = SearchOptions {
            mode: Mode::First,
            ..*opts
        };
        find_cutting_sets(q, k, n, &o)
    })
}

/// [`shortest_minimal_length`] with a caller-supplied search routine.
pub fn shortest_with(
    q: u32,
    k: usize,
    n_max: usize,
    mut search: impl FnMut(usize) -> Result<SearchReport>,
) -> Result<(usize, SearchReport)> {
    let start = bounds::lb_length_best(q, k)? as usize;
    for n in start..=n_max {
        let r = search(n)?;
        if !r.found.is_empty() {
            return Ok((n, r));
        }
        if !r.exhaustive {
            return Err(Error::BudgetExhausted);
        }
    }
    Err(Error::NoneFound(n_max))
}
