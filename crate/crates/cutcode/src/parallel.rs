//! Multi-threaded driver for the cutting-set search.
//!
//! Top-level branches are handed out in order from a shared counter. Each
//! branch has a fixed node budget, so its outcome does not depend on the
//! number of workers, and the merged report is identical for any thread
//! count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use cutcode_core::search::{self, BranchOutcome, Engine, Mode, SearchOptions, SearchReport};
use cutcode_core::Result;

pub const THREADS_ENV: &str = "CUTCODE_THREADS";

/// `CUTCODE_THREADS` if set and positive, else the available parallelism.
pub fn default_threads() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&t| t > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

pub fn find_cutting_sets(
    q: u32,
    k: usize,
    n: usize,
    opts: &SearchOptions,
    threads: usize,
) -> Result<SearchReport> {
    let engine = Engine::new(q, k, n, opts)?;
    let branches = engine.branches();
    if threads <= 1 || branches.len() <= 1 {
        return search::find_cutting_sets(q, k, n, opts);
    }
    let budget = search::branch_budget(opts, branches.len());
    let next = AtomicUsize::new(0);
    // lowest branch index with a hit; later branches need not run
    let first_hit = AtomicUsize::new(usize::MAX);
    let slots: Mutex<Vec<Option<BranchOutcome>>> = Mutex::new(vec![None; branches.len()]);
    std::thread::scope(|s| {
        for _ in 0..threads.min(branches.len()) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= branches.len() || i > first_hit.load(Ordering::Relaxed) {
                    break;
                }
                let o = engine.run_branch(branches[i], budget);
                if opts.mode == Mode::First && !o.found.is_empty() {
                    first_hit.fetch_min(i, Ordering::Relaxed);
                }
                slots.lock().unwrap()[i] = Some(o);
            });
        }
    });
    let cut = first_hit.load(Ordering::Relaxed);
    let outcomes: Vec<BranchOutcome> = slots
        .into_inner()
        .unwrap()
        .into_iter()
        .take(cut.saturating_add(1))
        .map(|o| o.expect("every branch up to the first hit ran"))
        .collect();
    Ok(search::merge(&engine, n, opts, outcomes))
}

/// Smallest length with a cutting set, scanning from the best lower bound.
pub fn shortest(
    q: u32,
    k: usize,
    n_max: usize,
    opts: &SearchOptions,
    threads: usize,
) -> Result<(usize, SearchReport)> {
    let first = SearchOptions {
        mode: Mode::First,
        ..*opts
    };
    search::shortest_with(q, k, n_max, |n| find_cutting_sets(q, k, n, &first, threads))
}
