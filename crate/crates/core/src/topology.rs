//! Topology axioms, the base property, sub-base minimality, and base cover
//! verification. Every negative answer carries a witness that can be replayed
//! with the set operations.

use std::fmt;

use serde::Serialize;

use crate::error::Error;
use crate::family::{Family, Member};
use crate::pfs::{union_many, InclusionMode, PictureFuzzySet};
use crate::relations::{rho_equivalent, zero_rho_join};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum AxiomViolation {
    MissingFull,
    MissingNull,
    UnionEscape {
        left: Member,
        right: Member,
        result: PictureFuzzySet,
    },
    IntersectionEscape {
        left: Member,
        right: Member,
        result: PictureFuzzySet,
    },
}

impl AxiomViolation {
    /// Re-evaluates the witness against `family`; true when it is a genuine
    /// violation.
    pub fn replays_against(&self, family: &Family) -> bool {
        let full = PictureFuzzySet::full(family.universe());
        let null = PictureFuzzySet::null(family.universe());
        match self {
            AxiomViolation::MissingFull => !family.contains_value(&full),
            AxiomViolation::MissingNull => !family.contains_value(&null),
            AxiomViolation::UnionEscape { left, right, result } => {
                left.set.union(&right.set).as_ref() == Ok(result) && !family.contains_value(result)
            }
            AxiomViolation::IntersectionEscape { left, right, result } => {
                left.set.intersection(&right.set).as_ref() == Ok(result)
                    && !family.contains_value(result)
            }
        }
    }
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::MissingFull => f.write_str("I is not a member"),
            AxiomViolation::MissingNull => f.write_str("O is not a member"),
            AxiomViolation::UnionEscape { left, right, result } => write!(
                f,
                "{} | {} = {result} is not a member",
                left.name, right.name
            ),
            AxiomViolation::IntersectionEscape { left, right, result } => write!(
                f,
                "{} & {} = {result} is not a member",
                left.name, right.name
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub is_topology: bool,
    pub violations: Vec<AxiomViolation>,
}

/// Checks that the family contains `I` and `O` and is closed under pairwise
/// union and pairwise intersection. Violations are listed by kind, then by
/// member position.
pub fn check_axioms(family: &Family) -> Result<AxiomReport, Error> {
    family.require_non_empty()?;
    let mut violations = Vec::new();
    if !family.contains_value(&PictureFuzzySet::full(family.universe())) {
        violations.push(AxiomViolation::MissingFull);
    }
    if !family.contains_value(&PictureFuzzySet::null(family.universe())) {
        violations.push(AxiomViolation::MissingNull);
    }
    let members = family.members();
    let mut intersections = Vec::new();
    for (i, a) in members.iter().enumerate() {
        for b in &members[i + 1..] {
            let u = a.set.union(&b.set)?;
            if !family.contains_value(&u) {
                violations.push(AxiomViolation::UnionEscape {
                    left: a.clone(),
                    right: b.clone(),
                    result: u,
                });
            }
            let n = a.set.intersection(&b.set)?;
            if !family.contains_value(&n) {
                intersections.push(AxiomViolation::IntersectionEscape {
                    left: a.clone(),
                    right: b.clone(),
                    result: n,
                });
            }
        }
    }
    violations.extend(intersections);
    Ok(AxiomReport {
        is_topology: violations.is_empty(),
        violations,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum BaseViolation {
    ContainsFull { member: Member },
    ContainsNull { member: Member },
    IntersectionEscape {
        left: Member,
        right: Member,
        result: PictureFuzzySet,
    },
}

impl fmt::Display for BaseViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseViolation::ContainsFull { member } => write!(f, "member {:?} is the full set", member.name),
            BaseViolation::ContainsNull { member } => write!(f, "member {:?} is the null set", member.name),
            BaseViolation::IntersectionEscape { left, right, result } => write!(
                f,
                "{} & {} = {result} is not a member",
                left.name, right.name
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BaseReport {
    pub is_base: bool,
    pub witness: Option<BaseViolation>,
}

/// A base holds neither `I` nor `O` and is closed under pairwise
/// intersection.
pub fn check_base(candidate: &Family) -> Result<BaseReport, Error> {
    candidate.require_non_empty()?;
    let witness = find_base_violation(candidate)?;
    Ok(BaseReport {
        is_base: witness.is_none(),
        witness,
    })
}

fn find_base_violation(candidate: &Family) -> Result<Option<BaseViolation>, Error> {
    for m in candidate {
        if m.set.is_full() {
            return Ok(Some(BaseViolation::ContainsFull { member: m.clone() }));
        }
        if m.set.is_null() {
            return Ok(Some(BaseViolation::ContainsNull { member: m.clone() }));
        }
    }
    let members = candidate.members();
    for (i, a) in members.iter().enumerate() {
        for b in &members[i + 1..] {
            let n = a.set.intersection(&b.set)?;
            if !candidate.contains_value(&n) {
                return Ok(Some(BaseViolation::IntersectionEscape {
                    left: a.clone(),
                    right: b.clone(),
                    result: n,
                }));
            }
        }
    }
    Ok(None)
}

/// Two members whose intersection is a member although neither includes the
/// other.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncomparablePair {
    pub left: Member,
    pub right: Member,
    pub intersection: PictureFuzzySet,
}

impl fmt::Display for IncomparablePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} & {} is a member but {} and {} are incomparable",
            self.left.name, self.right.name, self.left.name, self.right.name
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalityReport {
    pub is_minimal: bool,
    pub witness: Option<IncomparablePair>,
}

/// For every pair whose intersection is already a member, the two members
/// must be comparable under inclusion (in either direction).
pub fn check_subbase_minimality(candidate: &Family, mode: InclusionMode) -> Result<MinimalityReport, Error> {
    candidate.require_non_empty()?;
    let members = candidate.members();
    for (i, a) in members.iter().enumerate() {
        for b in &members[i + 1..] {
            let n = a.set.intersection(&b.set)?;
            if !candidate.contains_value(&n) {
                continue;
            }
            if !(a.set.includes(&b.set, mode)? || b.set.includes(&a.set, mode)?) {
                return Ok(MinimalityReport {
                    is_minimal: false,
                    witness: Some(IncomparablePair {
                        left: a.clone(),
                        right: b.clone(),
                        intersection: n,
                    }),
                });
            }
        }
    }
    Ok(MinimalityReport {
        is_minimal: true,
        witness: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BaseCoverReport {
    pub is_base_for: bool,
    pub failing_member: Option<Member>,
}

/// Checks that every member of `topology` other than `I` and `O` is a union
/// of base members, or the O-join of such a union when its rho is zero.
///
/// Decomposability uses the largest candidate: `m` is a union of base members
/// iff the union of all base members absorbed by `m` is `m` itself. For
/// rho-zero members absorption only looks at mu and sigma.
pub fn verify_base_for(topology: &Family, base: &Family) -> Result<BaseCoverReport, Error> {
    if **topology.universe() != **base.universe() {
        return Err(Error::UniverseMismatch);
    }
    if !check_axioms(topology)?.is_topology {
        return Err(Error::NotATopology);
    }
    let null = PictureFuzzySet::null(topology.universe());
    for m in topology {
        if m.set.is_boundary() {
            continue;
        }
        let covered = if rho_equivalent(&m.set, &null)? {
            let candidates: Vec<&PictureFuzzySet> = base
                .sets()
                .filter(|b| {
                    b.triples()
                        .iter()
                        .zip(m.set.triples())
                        .all(|(x, y)| x.mu() <= y.mu() && x.sigma() >= y.sigma())
                })
                .collect();
            !candidates.is_empty() && zero_rho_join(&union_many(candidates)?) == m.set
        } else {
            let mut candidates = Vec::new();
            for b in base.sets() {
                if b.union(&m.set)? == m.set {
                    candidates.push(b);
                }
            }
            !candidates.is_empty() && union_many(candidates)? == m.set
        };
        if !covered {
            return Ok(BaseCoverReport {
                is_base_for: false,
                failing_member: Some(m.clone()),
            });
        }
    }
    Ok(BaseCoverReport {
        is_base_for: true,
        failing_member: None,
    })
}
