use std::collections::HashSet;
use std::sync::Arc;

use serde::Serialize;

use crate::error::Error;
use crate::pfs::{PictureFuzzySet, Universe};

/// A named picture fuzzy set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Member {
    pub name: String,
    #[serde(rename = "values")]
    pub set: PictureFuzzySet,
}

impl Member {
    pub fn new(name: impl Into<String>, set: PictureFuzzySet) -> Self {
        Member { name: name.into(), set }
    }
}

/// A finite collection of named sets over one universe.
///
/// Names are unique. Membership queries compare set values, never names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    universe: Arc<Universe>,
    members: Vec<Member>,
}

impl Family {
    pub fn new(universe: &Arc<Universe>) -> Self {
        Family {
            universe: Arc::clone(universe),
            members: Vec::new(),
        }
    }

    pub fn from_members<I>(universe: &Arc<Universe>, members: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = Member>,
    {
        let mut family = Family::new(universe);
        for m in members {
            family.push(m)?;
        }
        Ok(family)
    }

    pub fn push(&mut self, member: Member) -> Result<(), Error> {
        if !member.set.same_universe_as(&self.universe) {
            return Err(Error::UniverseMismatch);
        }
        if self.get(&member.name).is_some() {
            return Err(Error::DuplicateName(member.name));
        }
        self.members.push(member);
        Ok(())
    }

    pub fn insert(&mut self, name: impl Into<String>, set: PictureFuzzySet) -> Result<(), Error> {
        self.push(Member::new(name, set))
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn members(&self) -> &[Member] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Member> {
        self.members.iter()
    }

    pub fn sets(&self) -> impl Iterator<Item = &PictureFuzzySet> {
        self.members.iter().map(|m| &m.set)
    }

    pub fn get(&self, name: &str) -> Option<&Member> {
        self.members.iter().find(|m| m.name == name)
    }

    pub fn find_value(&self, set: &PictureFuzzySet) -> Option<&Member> {
        self.members.iter().find(|m| m.set == *set)
    }

    pub fn contains_value(&self, set: &PictureFuzzySet) -> bool {
        self.find_value(set).is_some()
    }

    /// Every value of `self` occurs in `other`.
    pub fn value_subset_of(&self, other: &Family) -> bool {
        let theirs: HashSet<&PictureFuzzySet> = other.sets().collect();
        self.sets().all(|s| theirs.contains(s))
    }

    /// Same values, ignoring names, order and duplicates.
    pub fn same_values(&self, other: &Family) -> bool {
        self.value_subset_of(other) && other.value_subset_of(self)
    }

    pub fn distinct_values(&self) -> usize {
        self.sets().collect::<HashSet<_>>().len()
    }

    /// The sub-family with the given names, in the order given.
    pub fn select<S: AsRef<str>>(&self, names: &[S]) -> Result<Family, Error> {
        let mut out = Family::new(&self.universe);
        for name in names {
            let name = name.as_ref();
            let m = self.get(name).ok_or_else(|| Error::UnknownName(name.to_string()))?;
            out.push(m.clone())?;
        }
        Ok(out)
    }

    /// Members in canonical order: `I`, `O`, then by mu, rho and sigma
    /// vectors; equal values fall back to name order.
    pub fn canonicalized(&self) -> Family {
        let mut members = self.members.clone();
        members.sort_by(|a, b| a.set.canonical_cmp(&b.set).then_with(|| a.name.cmp(&b.name)));
        Family {
            universe: Arc::clone(&self.universe),
            members,
        }
    }

    pub(crate) fn require_non_empty(&self) -> Result<(), Error> {
        if self.members.is_empty() {
            Err(Error::EmptyFamily)
        } else {
            Ok(())
        }
    }
}

impl<'a> IntoIterator for &'a Family {
    type Item = &'a Member;
    type IntoIter = std::slice::Iter<'a, Member>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

impl PictureFuzzySet {
    pub(crate) fn same_universe_as(&self, universe: &Arc<Universe>) -> bool {
        Arc::ptr_eq(self.universe(), universe) || **self.universe() == **universe
    }
}
