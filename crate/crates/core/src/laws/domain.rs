use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::Rng;
use serde::Serialize;

use crate::error::Error;
use crate::pfs::{MembershipTriple, PictureFuzzySet, Universe};

/// Default cap on the number of instances an exhaustive search may visit.
pub const DEFAULT_BUDGET: u64 = 5_000_000;

pub const MAX_UNIVERSE_SIZE: usize = 3;

/// Spacing of the grade grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GridStep {
    Quarter,
    Tenth,
    Twentieth,
}

impl GridStep {
    pub fn raw(self) -> u16 {
        match self {
            GridStep::Quarter => 2500,
            GridStep::Tenth => 1000,
            GridStep::Twentieth => 500,
        }
    }
}

impl fmt::Display for GridStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GridStep::Quarter => "0.25",
            GridStep::Tenth => "0.10",
            GridStep::Twentieth => "0.05",
        })
    }
}

impl FromStr for GridStep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "0.25" | ".25" => Ok(GridStep::Quarter),
            "0.1" | "0.10" | ".1" => Ok(GridStep::Tenth),
            "0.05" | ".05" => Ok(GridStep::Twentieth),
            other => Err(Error::InvalidDomain(format!(
                "grid step {other:?} is not one of 0.25, 0.10, 0.05"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Strategy {
    Exhaustive,
    Randomized { samples: u64, seed: u64 },
}

/// Where a law is searched for counterexamples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchDomain {
    pub universe_size: usize,
    pub step: GridStep,
    /// Largest sub-base or chain length for the structural laws. Algebraic
    /// laws always use their own arity.
    pub arity: Option<usize>,
    pub strategy: Strategy,
    /// Also check the built-in worked sub-bases (structural laws only).
    pub fixtures: bool,
    pub budget: u64,
}

impl SearchDomain {
    pub fn exhaustive(universe_size: usize, step: GridStep) -> Self {
        SearchDomain {
            universe_size,
            step,
            arity: None,
            strategy: Strategy::Exhaustive,
            fixtures: true,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn randomized(universe_size: usize, step: GridStep, samples: u64, seed: u64) -> Self {
        SearchDomain {
            universe_size,
            step,
            arity: None,
            strategy: Strategy::Randomized { samples, seed },
            fixtures: false,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn with_arity(mut self, arity: usize) -> Self {
        self.arity = Some(arity);
        self
    }

    pub fn with_fixtures(mut self, fixtures: bool) -> Self {
        self.fixtures = fixtures;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn is_randomized(&self) -> bool {
        matches!(self.strategy, Strategy::Randomized { .. })
    }

    pub(crate) fn validate(&self) -> Result<(), Error> {
        if !(1..=MAX_UNIVERSE_SIZE).contains(&self.universe_size) {
            return Err(Error::InvalidDomain(format!(
                "universe size {} is outside 1..={MAX_UNIVERSE_SIZE}",
                self.universe_size
            )));
        }
        if self.arity == Some(0) {
            return Err(Error::InvalidDomain("arity must be at least 1".into()));
        }
        if let Strategy::Randomized { samples: 0, .. } = self.strategy {
            return Err(Error::InvalidDomain("sample count must be at least 1".into()));
        }
        Ok(())
    }

    pub(crate) fn check_budget(&self, instances: u128) -> Result<(), Error> {
        if instances > u128::from(self.budget) {
            return Err(Error::DomainTooLarge {
                instances,
                budget: self.budget,
            });
        }
        Ok(())
    }
}

impl fmt::Display for SearchDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.strategy {
            Strategy::Exhaustive => write!(f, "exhaustive, |X|={}, step {}", self.universe_size, self.step)?,
            Strategy::Randomized { samples, seed } => write!(
                f,
                "{samples} randomized at |X|={}, step {}, seed {seed}",
                self.universe_size, self.step
            )?,
        }
        if let Some(k) = self.arity {
            write!(f, ", arity {k}")?;
        }
        Ok(())
    }
}

/// Every admissible triple on the grid, ordered by (mu, rho, sigma).
pub fn grid_triples(step: GridStep) -> Vec<MembershipTriple> {
    let h = step.raw();
    let n = 10_000 / h;
    let mut out = Vec::new();
    for m in 0..=n {
        for r in 0..=n - m {
            for s in 0..=n - m - r {
                out.push(MembershipTriple::from_raw(m * h, r * h, s * h).expect("on the simplex"));
            }
        }
    }
    out
}

/// The sets of a grid domain, decoded from a mixed-radix index whose most
/// significant digit is the first universe element.
#[derive(Debug, Clone)]
pub(crate) struct Grid {
    pub universe: Arc<Universe>,
    pub triples: Vec<MembershipTriple>,
}

impl Grid {
    pub fn new(universe_size: usize, step: GridStep) -> Result<Self, Error> {
        Ok(Grid {
            universe: Universe::indexed(universe_size)?,
            triples: grid_triples(step),
        })
    }

    pub fn set_count(&self) -> u128 {
        (self.triples.len() as u128).pow(self.universe.len() as u32)
    }

    pub fn set_at(&self, mut index: u128) -> PictureFuzzySet {
        let t = self.triples.len() as u128;
        let mut triples = vec![MembershipTriple::NULL; self.universe.len()];
        for slot in triples.iter_mut().rev() {
            *slot = self.triples[(index % t) as usize];
            index /= t;
        }
        PictureFuzzySet::new(&self.universe, triples).expect("grid sets match the universe")
    }

    pub fn all_sets(&self) -> Vec<PictureFuzzySet> {
        (0..self.set_count()).map(|i| self.set_at(i)).collect()
    }

    pub fn sample<R: Rng>(&self, rng: &mut R) -> PictureFuzzySet {
        let triples = (0..self.universe.len())
            .map(|_| self.triples[rng.gen_range(0..self.triples.len())])
            .collect();
        PictureFuzzySet::new(&self.universe, triples).expect("grid sets match the universe")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_sizes() {
        assert_eq!(grid_triples(GridStep::Quarter).len(), 35);
        assert_eq!(grid_triples(GridStep::Tenth).len(), 286);
        assert_eq!(grid_triples(GridStep::Twentieth).len(), 1771);
    }

    #[test]
    fn steps_parse() {
        assert_eq!("0.1".parse::<GridStep>().unwrap(), GridStep::Tenth);
        assert!("0.2".parse::<GridStep>().is_err());
    }

    #[test]
    fn decoding_is_lexicographic() {
        let g = Grid::new(2, GridStep::Quarter).unwrap();
        assert_eq!(g.set_count(), 1225);
        assert_eq!(g.set_at(0).triples(), [g.triples[0], g.triples[0]]);
        assert_eq!(g.set_at(1).triples()[0], g.triples[0]);
        assert_eq!(g.set_at(1).triples()[1], g.triples[1]);
        assert_eq!(g.set_at(35).triples()[0], g.triples[1]);
    }
}
