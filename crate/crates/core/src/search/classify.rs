//! Partition of point sets or codes into equivalence classes.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::code::LinearCode;
use crate::correspond::{self, ProjectiveSystem};
use crate::error::Result;
use crate::pg::ProjectiveSpace;

use super::equiv::{are_equivalent, point_invariants, EquivalenceLimits};

/// One equivalence class, members ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Class {
    pub members: Vec<Vec<usize>>,
}

/// Size, weight distribution and sorted point invariants: equal for
/// equivalent sets.
pub type SetInvariant = (usize, Vec<u64>, Vec<(u32, Vec<u64>)>);

fn invariant_of(sys: &ProjectiveSystem, code: &LinearCode) -> Result<SetInvariant> {
    let wd = code.weight_distribution()?.counts().to_vec();
    let mut pts: Vec<(u32, Vec<u64>)> = point_invariants(sys).into_values().collect();
    pts.sort();
    Ok((sys.n(), wd, pts))
}

pub fn set_invariant(space: &Arc<ProjectiveSpace>, set: &[usize]) -> Result<SetInvariant> {
    let sys = ProjectiveSystem::from_indices(space.clone(), set.iter().copied())?;
    let code = correspond::psi(&sys)?;
    invariant_of(&sys, &code)
}

/// Groups point sets of one space by projective equivalence. The output
/// depends only on the collection of input sets, not on their order.
pub fn classify(
    space: &Arc<ProjectiveSpace>,
    sets: &[Vec<usize>],
    limits: &EquivalenceLimits,
) -> Result<Vec<Class>> {
    let mut sorted: Vec<Vec<usize>> = sets
        .iter()
        .map(|s| {
            let mut v = s.clone();
            v.sort_unstable();
            v.dedup();
            v
        })
        .collect();
    sorted.sort();
    sorted.dedup();
    let mut codes = Vec::with_capacity(sorted.len());
    let mut invs = Vec::with_capacity(sorted.len());
    for s in &sorted {
        let sys = ProjectiveSystem::from_indices(space.clone(), s.iter().copied())?;
        let code = correspond::psi(&sys)?;
        invs.push(invariant_of(&sys, &code)?);
        codes.push(code);
    }
    let groups = group(&codes, &invs, limits)?;
    Ok(groups
        .into_iter()
        .map(|g| Class {
            members: g.into_iter().map(|i| sorted[i].clone()).collect(),
        })
        .collect())
}

/// Groups codes by monomial equivalence; classes hold input indices and
/// are ordered by their first member.
pub fn classify_codes(codes: &[LinearCode], limits: &EquivalenceLimits) -> Result<Vec<Vec<usize>>> {
    let mut invs = Vec::with_capacity(codes.len());
    for c in codes {
        let sys = correspond::phi(c)?;
        let mut inv = invariant_of(&sys, c)?;
        // phi is taken up to scaling, so the size component is n
        inv.0 = c.n();
        invs.push(inv);
    }
    group(codes, &invs, limits)
}

fn group(
    codes: &[LinearCode],
    invs: &[SetInvariant],
    limits: &EquivalenceLimits,
) -> Result<Vec<Vec<usize>>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut by_inv: BTreeMap<&SetInvariant, Vec<usize>> = BTreeMap::new();
    for (i, code) in codes.iter().enumerate() {
        let bucket = by_inv.entry(&invs[i]).or_default();
        let mut placed = false;
        for &ci in bucket.iter() {
            let rep = classes[ci][0];
            if are_equivalent(&codes[rep], code, limits)?.is_some() {
                classes[ci].push(i);
                placed = true;
                break;
            }
        }
        if !placed {
            bucket.push(classes.len());
            classes.push(alloc::vec![i]);
        }
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    #[test]
    fn triangle_and_its_image() {
        let space = Arc::new(ProjectiveSpace::new(Field::new(2).unwrap(), 2).unwrap());
        let all: Vec<usize> = (0..7).collect();
        // any 6-subset of the Fano plane is a triangle of lines
        let a: Vec<usize> = all.iter().copied().filter(|&p| p != 0).collect();
        let b: Vec<usize> = all.iter().copied().filter(|&p| p != 4).collect();
        let classes = classify(&space, &[a.clone(), b.clone()], &Default::default()).unwrap();
        assert_eq!(classes.len(), 1);
        let rev = classify(&space, &[b, a, all.clone()], &Default::default()).unwrap();
        assert_eq!(rev.len(), 2);
        assert_eq!(rev[0].members.len(), 1);
        assert_eq!(rev[0].members[0], all);
    }
}
