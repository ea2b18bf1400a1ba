//! Picture fuzzy sets over finite universes and their operation algebra.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::grade::{Grade, SCALE};

/// Positive, neutral and negative membership at one element.
///
/// The three grades sum to at most one and the remainder is the refusal
/// degree. [`MembershipTriple::new_unbounded`] lifts the bound for inputs
/// that are known to break it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MembershipTriple {
    mu: Grade,
    rho: Grade,
    sigma: Grade,
}

impl MembershipTriple {
    pub const FULL: MembershipTriple = MembershipTriple {
        mu: Grade::ONE,
        rho: Grade::ZERO,
        sigma: Grade::ZERO,
    };
    pub const NULL: MembershipTriple = MembershipTriple {
        mu: Grade::ZERO,
        rho: Grade::ZERO,
        sigma: Grade::ONE,
    };

    /// Returns `None` when `mu + rho + sigma > 1`.
    pub fn new(mu: Grade, rho: Grade, sigma: Grade) -> Option<Self> {
        let sum = u32::from(mu.raw()) + u32::from(rho.raw()) + u32::from(sigma.raw());
        (sum <= u32::from(SCALE)).then_some(MembershipTriple { mu, rho, sigma })
    }

    /// Skips the sum bound; each grade is still in `[0, 1]`.
    pub fn new_unbounded(mu: Grade, rho: Grade, sigma: Grade) -> Self {
        MembershipTriple { mu, rho, sigma }
    }

    pub fn from_raw(mu: u16, rho: u16, sigma: u16) -> Option<Self> {
        Self::new(
            Grade::from_raw(mu).ok()?,
            Grade::from_raw(rho).ok()?,
            Grade::from_raw(sigma).ok()?,
        )
    }

    /// Parses three decimal grades.
    pub fn parse(mu: &str, rho: &str, sigma: &str) -> Result<Self, Error> {
        Self::parse_with(mu, rho, sigma, SumCheck::Strict)
    }

    pub fn parse_with(mu: &str, rho: &str, sigma: &str, check: SumCheck) -> Result<Self, Error> {
        let (mu, rho, sigma) = (mu.parse()?, rho.parse()?, sigma.parse()?);
        match check {
            SumCheck::Strict => Self::new(mu, rho, sigma).ok_or_else(|| Error::GradeSumExceeded {
                element: String::new(),
                sum: raw_sum_text(mu, rho, sigma),
            }),
            SumCheck::Relaxed => Ok(Self::new_unbounded(mu, rho, sigma)),
        }
    }

    /// `mu + rho + sigma <= 1`.
    pub fn is_admissible(&self) -> bool {
        self.sum_raw() <= u32::from(SCALE)
    }

    fn sum_raw(&self) -> u32 {
        u32::from(self.mu.raw()) + u32::from(self.rho.raw()) + u32::from(self.sigma.raw())
    }

    /// Grade sum as a decimal string.
    pub fn sum_text(&self) -> String {
        raw_sum_text(self.mu, self.rho, self.sigma)
    }

    pub fn mu(&self) -> Grade {
        self.mu
    }

    pub fn rho(&self) -> Grade {
        self.rho
    }

    pub fn sigma(&self) -> Grade {
        self.sigma
    }

    /// Zero when the triple is not admissible.
    pub fn refusal(&self) -> Grade {
        let left = u32::from(SCALE).saturating_sub(self.sum_raw());
        Grade::from_raw(left as u16).expect("at most SCALE")
    }

    pub fn union(self, other: Self) -> Self {
        MembershipTriple {
            mu: self.mu.max(other.mu),
            rho: self.rho.min(other.rho),
            sigma: self.sigma.min(other.sigma),
        }
    }

    pub fn intersection(self, other: Self) -> Self {
        MembershipTriple {
            mu: self.mu.min(other.mu),
            rho: self.rho.min(other.rho),
            sigma: self.sigma.max(other.sigma),
        }
    }

    pub fn complement(self) -> Self {
        MembershipTriple {
            mu: self.sigma,
            rho: self.rho,
            sigma: self.mu,
        }
    }

    pub fn includes_in(self, other: Self, mode: InclusionMode) -> bool {
        let rho_ok = match mode {
            InclusionMode::PaperLiteral => self.rho <= other.rho,
            InclusionMode::NeutralReversed => self.rho >= other.rho,
        };
        self.mu <= other.mu && rho_ok && self.sigma >= other.sigma
    }
}

impl fmt::Display for MembershipTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.mu, self.rho, self.sigma)
    }
}

fn raw_sum_text(mu: Grade, rho: Grade, sigma: Grade) -> String {
    let sum = u32::from(mu.raw()) + u32::from(rho.raw()) + u32::from(sigma.raw());
    let whole = sum / u32::from(SCALE);
    let frac = sum % u32::from(SCALE);
    if frac % 100 == 0 {
        format!("{whole}.{:02}", frac / 100)
    } else {
        format!("{whole}.{}", format!("{frac:04}").trim_end_matches('0'))
    }
}

/// Whether parsing enforces `mu + rho + sigma <= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum SumCheck {
    #[default]
    Strict,
    /// Accept larger sums. The operations stay well defined, but the
    /// results are not picture fuzzy sets.
    Relaxed,
}

/// Which way the neutral component is compared by set inclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub enum InclusionMode {
    /// `rho_a <= rho_b`, alongside `mu_a <= mu_b` and `sigma_a >= sigma_b`.
    #[default]
    PaperLiteral,
    /// `rho_a >= rho_b`; the convention under which every set lies below `I`.
    NeutralReversed,
}

impl fmt::Display for InclusionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InclusionMode::PaperLiteral => "literal",
            InclusionMode::NeutralReversed => "reversed",
        })
    }
}

/// A non-empty, ordered set of distinct element labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Universe {
    labels: Vec<String>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Arc<Self>, Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateElement(l.clone()));
            }
        }
        Ok(Arc::new(Universe { labels }))
    }

    /// Universe `{x0, x1, ..}` of the given size.
    pub fn indexed(size: usize) -> Result<Arc<Self>, Error> {
        Universe::new((0..size).map(|i| format!("x{i}")))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// A picture fuzzy subset of a finite universe: one triple per element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PictureFuzzySet {
    universe: Arc<Universe>,
    triples: Vec<MembershipTriple>,
}

impl PictureFuzzySet {
    pub fn new(universe: &Arc<Universe>, triples: Vec<MembershipTriple>) -> Result<Self, Error> {
        if triples.len() != universe.len() {
            return Err(Error::LengthMismatch {
                expected: universe.len(),
                found: triples.len(),
            });
        }
        Ok(PictureFuzzySet {
            universe: Arc::clone(universe),
            triples,
        })
    }

    /// Builds a set from `(mu, rho, sigma)` decimal strings in universe order.
    pub fn from_decimals(universe: &Arc<Universe>, rows: &[(&str, &str, &str)]) -> Result<Self, Error> {
        if rows.len() != universe.len() {
            return Err(Error::LengthMismatch {
                expected: universe.len(),
                found: rows.len(),
            });
        }
        let triples = rows
            .iter()
            .zip(universe.labels())
            .map(|(&(m, r, s), label)| {
                MembershipTriple::parse(m, r, s).map_err(|e| match e {
                    Error::GradeSumExceeded { sum, .. } => Error::GradeSumExceeded {
                        element: label.clone(),
                        sum,
                    },
                    other => other,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        PictureFuzzySet::new(universe, triples)
    }

    /// Validates raw grades per element; `GradeSumExceeded` names the element.
    pub fn from_grades(universe: &Arc<Universe>, rows: &[(Grade, Grade, Grade)]) -> Result<Self, Error> {
        if rows.len() != universe.len() {
            return Err(Error::LengthMismatch {
                expected: universe.len(),
                found: rows.len(),
            });
        }
        let triples = rows
            .iter()
            .zip(universe.labels())
            .map(|(&(m, r, s), label)| {
                MembershipTriple::new(m, r, s).ok_or_else(|| Error::GradeSumExceeded {
                    element: label.clone(),
                    sum: raw_sum_text(m, r, s),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        PictureFuzzySet::new(universe, triples)
    }

    /// `I`: every element at `(1, 0, 0)`.
    pub fn full(universe: &Arc<Universe>) -> Self {
        Self::constant(universe, MembershipTriple::FULL)
    }

    /// `O`: every element at `(0, 0, 1)`.
    pub fn null(universe: &Arc<Universe>) -> Self {
        Self::constant(universe, MembershipTriple::NULL)
    }

    pub fn constant(universe: &Arc<Universe>, triple: MembershipTriple) -> Self {
        PictureFuzzySet {
            universe: Arc::clone(universe),
            triples: vec![triple; universe.len()],
        }
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn triples(&self) -> &[MembershipTriple] {
        &self.triples
    }

    pub fn triple_at(&self, element: &str) -> Result<MembershipTriple, Error> {
        self.universe
            .index_of(element)
            .map(|i| self.triples[i])
            .ok_or_else(|| Error::UnknownElement(element.to_string()))
    }

    pub fn refusal(&self, element: &str) -> Result<Grade, Error> {
        self.triple_at(element).map(|t| t.refusal())
    }

    pub fn is_full(&self) -> bool {
        self.triples.iter().all(|t| *t == MembershipTriple::FULL)
    }

    pub fn is_null(&self) -> bool {
        self.triples.iter().all(|t| *t == MembershipTriple::NULL)
    }

    /// Elements whose triple breaks the sum bound.
    pub fn inadmissible(&self) -> impl Iterator<Item = (&str, MembershipTriple)> + '_ {
        self.universe
            .labels()
            .iter()
            .zip(&self.triples)
            .filter(|(_, t)| !t.is_admissible())
            .map(|(l, t)| (l.as_str(), *t))
    }

    pub fn is_admissible(&self) -> bool {
        self.triples.iter().all(MembershipTriple::is_admissible)
    }

    pub fn is_boundary(&self) -> bool {
        self.is_full() || self.is_null()
    }

    pub fn mu(&self) -> impl Iterator<Item = Grade> + '_ {
        self.triples.iter().map(|t| t.mu())
    }

    pub fn rho(&self) -> impl Iterator<Item = Grade> + '_ {
        self.triples.iter().map(|t| t.rho())
    }

    pub fn sigma(&self) -> impl Iterator<Item = Grade> + '_ {
        self.triples.iter().map(|t| t.sigma())
    }

    pub fn same_universe(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.universe, &other.universe) || self.universe == other.universe
    }

    fn check_universe(&self, other: &Self) -> Result<(), Error> {
        if self.same_universe(other) {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(MembershipTriple, MembershipTriple) -> MembershipTriple) -> Self {
        PictureFuzzySet {
            universe: Arc::clone(&self.universe),
            triples: self
                .triples
                .iter()
                .zip(&other.triples)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// Pointwise `(max mu, min rho, min sigma)`.
    pub fn union(&self, other: &Self) -> Result<Self, Error> {
        self.check_universe(other)?;
        Ok(self.zip_with(other, MembershipTriple::union))
    }

    /// Pointwise `(min mu, min rho, max sigma)`.
    pub fn intersection(&self, other: &Self) -> Result<Self, Error> {
        self.check_universe(other)?;
        Ok(self.zip_with(other, MembershipTriple::intersection))
    }

    /// Swaps `mu` and `sigma` at every element.
    pub fn complement(&self) -> Self {
        PictureFuzzySet {
            universe: Arc::clone(&self.universe),
            triples: self.triples.iter().map(|t| t.complement()).collect(),
        }
    }

    /// `self ⊆ other` under the given neutral-component convention.
    pub fn includes(&self, other: &Self, mode: InclusionMode) -> Result<bool, Error> {
        self.check_universe(other)?;
        Ok(self
            .triples
            .iter()
            .zip(&other.triples)
            .all(|(&a, &b)| a.includes_in(b, mode)))
    }

    /// Pointwise identity of all three components. Coincides with mutual
    /// inclusion under either mode.
    pub fn equals(&self, other: &Self) -> Result<bool, Error> {
        self.check_universe(other)?;
        Ok(self.triples == other.triples)
    }

    /// Order used for canonical listings: `I`, then `O`, then lexicographic on
    /// the mu vector, the rho vector and the sigma vector in turn.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        let rank = |s: &Self| match (s.is_full(), s.is_null()) {
            (true, _) => 0,
            (_, true) => 1,
            _ => 2,
        };
        rank(self)
            .cmp(&rank(other))
            .then_with(|| self.mu().cmp(other.mu()))
            .then_with(|| self.rho().cmp(other.rho()))
            .then_with(|| self.sigma().cmp(other.sigma()))
    }
}

/// Serialized as an element-label to `{mu, rho, sigma}` map in universe order.
impl Serialize for PictureFuzzySet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Row {
            mu: Grade,
            rho: Grade,
            sigma: Grade,
        }
        let mut map = serializer.serialize_map(Some(self.triples.len()))?;
        for (label, t) in self.universe.labels().iter().zip(&self.triples) {
            map.serialize_entry(
                label,
                &Row {
                    mu: t.mu,
                    rho: t.rho,
                    sigma: t.sigma,
                },
            )?;
        }
        map.end()
    }
}

impl fmt::Display for PictureFuzzySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (label, t)) in self.universe.labels().iter().zip(&self.triples).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({label}, {}, {}, {})", t.mu, t.rho, t.sigma)?;
        }
        f.write_str("}")
    }
}

/// Left fold of [`PictureFuzzySet::union`] over a non-empty sequence.
pub fn union_many<'a, I>(sets: I) -> Result<PictureFuzzySet, Error>
where
    I: IntoIterator<Item = &'a PictureFuzzySet>,
{
    fold_many(sets, PictureFuzzySet::union)
}

/// Left fold of [`PictureFuzzySet::intersection`] over a non-empty sequence.
pub fn intersection_many<'a, I>(sets: I) -> Result<PictureFuzzySet, Error>
where
    I: IntoIterator<Item = &'a PictureFuzzySet>,
{
    fold_many(sets, PictureFuzzySet::intersection)
}

fn fold_many<'a, I>(
    sets: I,
    op: fn(&PictureFuzzySet, &PictureFuzzySet) -> Result<PictureFuzzySet, Error>,
) -> Result<PictureFuzzySet, Error>
where
    I: IntoIterator<Item = &'a PictureFuzzySet>,
{
    let mut iter = sets.into_iter();
    let first = iter.next().ok_or(Error::EmptyFamily)?.clone();
    iter.try_fold(first, |acc, s| op(&acc, s))
}
