//! The balanced order, rho-equivalence, and the rank of a family.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::Error;
use crate::family::Family;
use crate::grade::Grade;
use crate::pfs::PictureFuzzySet;

/// `a ≡ b`: equal mu and sigma everywhere, `rho_a <= rho_b`.
pub fn balanced(a: &PictureFuzzySet, b: &PictureFuzzySet) -> Result<bool, Error> {
    if !a.same_universe(b) {
        return Err(Error::UniverseMismatch);
    }
    Ok(a.triples()
        .iter()
        .zip(b.triples())
        .all(|(x, y)| x.mu() == y.mu() && x.rho() <= y.rho() && x.sigma() == y.sigma()))
}

/// `a ∥ b`: identical neutral components.
pub fn rho_equivalent(a: &PictureFuzzySet, b: &PictureFuzzySet) -> Result<bool, Error> {
    if !a.same_universe(b) {
        return Err(Error::UniverseMismatch);
    }
    Ok(a.rho().eq(b.rho()))
}

/// `O ∪ a`, which keeps mu and sigma and zeroes rho.
pub fn zero_rho_join(a: &PictureFuzzySet) -> PictureFuzzySet {
    PictureFuzzySet::null(a.universe())
        .union(a)
        .expect("null set shares the universe")
}

/// One rho-equivalence class: the shared rho vector and the member names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RhoClass {
    pub rho: Vec<Grade>,
    pub members: Vec<String>,
}

/// The members of a family grouped by rho vector, classes in ascending
/// lexicographic order of that vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RhoPartition {
    pub classes: Vec<RhoClass>,
}

impl RhoPartition {
    pub fn rank(&self) -> Rank {
        Rank(self.classes.len())
    }

    pub fn class_of(&self, name: &str) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| c.members.iter().any(|m| m == name))
    }
}

/// Number of rho-equivalence classes met by a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Rank(usize);

impl Rank {
    pub fn get(self) -> usize {
        self.0
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn partition_by_rho(family: &Family) -> Result<RhoPartition, Error> {
    family.require_non_empty()?;
    let mut groups: BTreeMap<Vec<Grade>, Vec<String>> = BTreeMap::new();
    for m in family {
        groups.entry(m.set.rho().collect()).or_default().push(m.name.clone());
    }
    Ok(RhoPartition {
        classes: groups
            .into_iter()
            .map(|(rho, members)| RhoClass { rho, members })
            .collect(),
    })
}

pub fn rank_of(family: &Family) -> Result<Rank, Error> {
    partition_by_rho(family).map(|p| p.rank())
}
