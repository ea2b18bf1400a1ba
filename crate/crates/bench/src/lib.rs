//! Workloads shared by the benchmarks.

use std::sync::Arc;

use pftopo::laws::{grid_triples, GridStep};
use pftopo::{Family, MembershipTriple, PictureFuzzySet, Universe};

/// `count` non-boundary sets over an `n`-element universe, picked from the
/// grid by a fixed stride so that runs are comparable.
pub fn strided_subbase(n: usize, step: GridStep, count: usize) -> Family {
    let universe: Arc<Universe> = Universe::indexed(n).expect("n > 0");
    let triples: Vec<MembershipTriple> = grid_triples(step);
    let mut family = Family::new(&universe);
    let mut cursor = 7usize;
    while family.len() < count {
        let row = (0..n)
            .map(|i| triples[(cursor * (i + 3) + i * 11) % triples.len()])
            .collect();
        cursor += 13;
        let set = PictureFuzzySet::new(&universe, row).expect("same universe");
        if set.is_boundary() || family.contains_value(&set) {
            continue;
        }
        let name = format!("K{}", family.len() + 1);
        family.insert(name, set).expect("fresh name");
    }
    family
}
