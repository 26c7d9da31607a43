//! Looks for a `[20,5,9]_3` minimal code shaped like the hexagonal
//! construction: six lines through a frame of `PG(4,3)` plus two points.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::PointSet;
use crate::correspond;
use crate::error::Result;
use crate::gf::{Elem, Field};
use crate::pg::ProjectiveSpace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StretchReport {
    /// The 18 points on the six frame lines.
    pub base: Vec<usize>,
    pub pairs_tried: usize,
    /// Pairs reaching distance 9 with a cutting set.
    pub hits: Vec<(usize, usize)>,
    /// Hits that are also minimal cutting sets.
    pub minimal_hits: Vec<(usize, usize)>,
    /// Largest minimum distance among cutting completions.
    pub best_distance: usize,
}

pub fn hexagonal_q3_search(max_hits: usize) -> Result<StretchReport> {
    let space = Arc::new(ProjectiveSpace::new(Field::new(3)?, 4)?);
    let np = space.num_points();
    let mut frame: Vec<Vec<Elem>> = (0..5)
        .map(|i| {
            let mut v = vec![Elem::ZERO; 5];
            v[i] = Elem::ONE;
            v
        })
        .collect();
    frame.push(vec![Elem::ONE; 5]);
    let mut base = PointSet::new(np);
    for i in 0..6 {
        base.union_with(&correspond::flat_of(
            &space,
            &[frame[i].clone(), frame[(i + 1) % 6].clone()],
        )?);
    }
    let hypers: Vec<&PointSet> = (0..np).map(|h| space.hyperplane_points(h)).collect();
    let rest: Vec<usize> = (0..np).filter(|p| !base.contains(*p)).collect();
    let mut report = StretchReport {
        base: base.to_vec(),
        pairs_tried: 0,
        hits: Vec::new(),
        minimal_hits: Vec::new(),
        best_distance: 0,
    };
    for (i, &x) in rest.iter().enumerate() {
        for &y in &rest[i + 1..] {
            report.pairs_tried += 1;
            let mut s = base.clone();
            s.insert(x);
            s.insert(y);
            let max = hypers
                .iter()
                .map(|h| h.intersection_len(&s))
                .max()
                .unwrap_or(0);
            let d = s.len() - max;
            if d < 9 && d <= report.best_distance {
                continue;
            }
            if !correspond::is_cutting(&space, &s, 1)? {
                continue;
            }
            report.best_distance = report.best_distance.max(d);
            if d >= 9 && report.hits.len() < max_hits {
                report.hits.push((x, y));
                if correspond::is_minimal_cutting(&space, &s, 1)? {
                    report.minimal_hits.push((x, y));
                }
            }
        }
    }
    Ok(report)
}
