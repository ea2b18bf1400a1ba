#![allow(dead_code)]

use std::sync::Arc;

use pftopo::{Family, MembershipTriple, PictureFuzzySet, SumCheck, Universe};

pub type Rows = [(&'static str, &'static str, &'static str); 3];

pub fn abc() -> Arc<Universe> {
    Universe::new(["a", "b", "c"]).unwrap()
}

/// Parses printed rows without the sum check, so that every printed value
/// can be compared as is.
pub fn set(rows: Rows) -> PictureFuzzySet {
    let x = abc();
    let triples = rows
        .iter()
        .map(|&(m, r, s)| MembershipTriple::parse_with(m, r, s, SumCheck::Relaxed).unwrap())
        .collect();
    PictureFuzzySet::new(&x, triples).unwrap()
}

pub fn family(named: &[(&str, Rows)]) -> Family {
    let x = abc();
    let mut f = Family::new(&x);
    for (name, rows) in named {
        f.insert(*name, set(*rows)).unwrap();
    }
    f
}

pub const FULL: Rows = [("1", "0", "0"); 3];
pub const NULL: Rows = [("0", "0", "1"); 3];
