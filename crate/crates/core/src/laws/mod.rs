//! A catalog of algebraic and structural laws, checked by searching grade
//! grids for counterexamples.
//!
//! Algebraic laws quantify over one to three sets. Structural laws quantify
//! over sub-bases (or balanced chains) and run the construction pipeline on
//! each. Every counterexample names the clause it breaks and can be replayed
//! with [`replay`].

pub mod domain;
pub mod fixtures;

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

pub use domain::{grid_triples, GridStep, SearchDomain, Strategy, DEFAULT_BUDGET};

use crate::construction::{chain_topology, generate_from_subbase};
use crate::error::Error;
use crate::family::{Family, Member};
use crate::grade::SCALE;
use crate::pfs::{InclusionMode, MembershipTriple, PictureFuzzySet};
use crate::relations::{balanced, rank_of, rho_equivalent, zero_rho_join};
use crate::topology::{check_axioms, check_base, verify_base_for};
use domain::Grid;

/// Seed of the randomized phases in the default plan.
pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// Randomized samples added for three-set laws by the default plan.
pub const DEFAULT_SAMPLES: u64 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum LawId {
    L01,
    L02,
    L03,
    L04,
    L05,
    L06,
    L07,
    L08,
    L09,
    L10,
    L11,
    L12,
    L13,
    L14,
    L15,
    L16,
    L17,
    L18,
    L19,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LawKind {
    /// Quantified over tuples of sets.
    Algebraic { arity: usize },
    /// Two independent claims over single sets, reported separately.
    Universal,
    /// Quantified over sub-bases or chains, up to the domain arity.
    Structural,
}

impl LawId {
    pub const ALL: [LawId; 19] = [
        LawId::L01,
        LawId::L02,
        LawId::L03,
        LawId::L04,
        LawId::L05,
        LawId::L06,
        LawId::L07,
        LawId::L08,
        LawId::L09,
        LawId::L10,
        LawId::L11,
        LawId::L12,
        LawId::L13,
        LawId::L14,
        LawId::L15,
        LawId::L16,
        LawId::L17,
        LawId::L18,
        LawId::L19,
    ];

    pub fn code(self) -> &'static str {
        const CODES: [&str; 19] = [
            "L01", "L02", "L03", "L04", "L05", "L06", "L07", "L08", "L09", "L10", "L11", "L12", "L13",
            "L14", "L15", "L16", "L17", "L18", "L19",
        ];
        CODES[self as usize]
    }

    pub fn statement(self) -> &'static str {
        match self {
            LawId::L01 => "a = b implies a ∪ b = b ∩ a = a",
            LawId::L02 => "union and intersection are commutative",
            LawId::L03 => "union and intersection are associative",
            LawId::L04 => "a ∪ b = b ∩ a = a if and only if a ≡ b",
            LawId::L05 => "union and intersection keep every grade sum at most 1",
            LawId::L06 => "union and intersection distribute over each other",
            LawId::L07 => "a ∩ b ⊆ a and a ∩ b ⊆ b",
            LawId::L08 => "a ⊆ b if and only if a ∩ b = a",
            LawId::L09 => "a ⊆ a ∪ b if and only if rho_a ≤ rho_b",
            LawId::L10 => "a ⊆ a ∪ b and b ⊆ a ∪ b if and only if rho_a = rho_b",
            LawId::L11 => "if rho_a = rho_b then a ⊆ b if and only if a ∪ b = b",
            LawId::L12 => "a = b if and only if a ∥ b and a ≡ b",
            LawId::L13 => "a ∥ b if and only if the four inclusion rules hold for a and b",
            LawId::L14 => "a ∥ b implies a, b ⊆ I and O ⊆ a, b",
            LawId::L15 => "O ⊆ a for every a; a ⊆ I for every a",
            LawId::L16 => "a sub-base generates a base and a topology covered by it",
            LawId::L17 => "a balanced chain c1 ≡ … ≡ ck generates {I, O} ∪ chain ∪ {O ∪ c1}",
            LawId::L18 => "the topology generated by S has rank at most |S| + 1",
            LawId::L19 => "complement turns unions into intersections and back",
        }
    }

    pub fn kind(self) -> LawKind {
        match self {
            LawId::L03 | LawId::L06 => LawKind::Algebraic { arity: 3 },
            LawId::L15 => LawKind::Universal,
            LawId::L16 | LawId::L17 | LawId::L18 => LawKind::Structural,
            _ => LawKind::Algebraic { arity: 2 },
        }
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Accepts `L06`, `l6` or `6`.
impl FromStr for LawId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        let digits = t.strip_prefix(['L', 'l']).unwrap_or(t);
        digits
            .parse::<usize>()
            .ok()
            .filter(|n| (1..=LawId::ALL.len()).contains(n) && !digits.starts_with('+'))
            .map(|n| LawId::ALL[n - 1])
            .ok_or_else(|| Error::UnknownLaw(s.to_string()))
    }
}

/// A concrete instance breaking one clause of a law.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub clause: String,
    pub sets: Vec<Member>,
    pub detail: Option<String>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "fails: {}", self.clause)?;
        if let Some(d) = &self.detail {
            write!(f, " ({d})")?;
        }
        for m in &self.sets {
            write!(f, "\n    {} = {}", m.name, m.set)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimVerdict {
    pub claim: String,
    pub counterexample: Option<Witness>,
}

impl ClaimVerdict {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "detail")]
pub enum Outcome {
    Holds,
    Counterexample(Witness),
    /// Independent claims, at least one of which fails.
    Split(Vec<ClaimVerdict>),
}

impl Outcome {
    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Holds => "Holds",
            Outcome::Counterexample(_) => "Counterexample",
            Outcome::Split(_) => "Split",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Phase {
    pub domain: SearchDomain,
    pub checked: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawVerdict {
    pub law: LawId,
    pub statement: &'static str,
    pub mode: InclusionMode,
    pub outcome: Outcome,
    /// Instances examined, summed over phases. A counterexample stops the
    /// count at the witness.
    pub checked_count: u64,
    /// The domain contained no instances.
    pub vacuous: bool,
    pub phases: Vec<Phase>,
    /// Informational claims that do not affect the outcome.
    pub secondary: Vec<ClaimVerdict>,
}

impl LawVerdict {
    pub fn holds(&self) -> bool {
        self.outcome == Outcome::Holds
    }

    fn absorb(&mut self, next: LawVerdict) {
        self.checked_count += next.checked_count;
        self.vacuous = self.vacuous && next.vacuous;
        self.phases.extend(next.phases);
        if self.holds() {
            self.outcome = next.outcome;
        }
        for (mine, theirs) in self.secondary.iter_mut().zip(next.secondary) {
            if mine.holds() {
                *mine = theirs;
            }
        }
    }
}

impl fmt::Display for LawVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let first = self.phases.first().map_or(0, |p| p.checked);
        write!(f, "{} {} ({first} instances", self.law, self.outcome.label())?;
        if self.vacuous {
            f.write_str(", vacuous")?;
        }
        f.write_str(")")?;
        for p in self.phases.iter().skip(1) {
            match p.domain.strategy {
                Strategy::Randomized { seed, .. } => write!(
                    f,
                    " [+{} randomized at |X|={}, seed {seed}]",
                    p.checked, p.domain.universe_size
                )?,
                Strategy::Exhaustive => write!(
                    f,
                    " [+{} exhaustive at |X|={}, step {}]",
                    p.checked, p.domain.universe_size, p.domain.step
                )?,
            }
        }
        match &self.outcome {
            Outcome::Holds => {}
            Outcome::Counterexample(w) => write!(f, "\n  {w}")?,
            Outcome::Split(claims) => {
                for c in claims {
                    match &c.counterexample {
                        None => write!(f, "\n  holds: {}", c.claim)?,
                        Some(w) => write!(f, "\n  {w}")?,
                    }
                }
            }
        }
        for c in &self.secondary {
            match &c.counterexample {
                None => write!(f, "\n  secondary, holds: {}", c.claim)?,
                Some(w) => write!(f, "\n  secondary, {w}")?,
            }
        }
        Ok(())
    }
}

// Clause texts.
const L01_UNION: &str = "a = b ⇒ a ∪ b = a";
const L01_INTER: &str = "a = b ⇒ b ∩ a = a";
const L02_UNION: &str = "a ∪ b = b ∪ a";
const L02_INTER: &str = "a ∩ b = b ∩ a";
const L03_UNION: &str = "(a ∪ b) ∪ c = a ∪ (b ∪ c)";
const L03_INTER: &str = "(a ∩ b) ∩ c = a ∩ (b ∩ c)";
const L04_FWD: &str = "a ∪ b = b ∩ a = a ⇒ a ≡ b";
const L04_BWD: &str = "a ≡ b ⇒ a ∪ b = b ∩ a = a";
const L05_UNION: &str = "a ∪ b has grade sums at most 1";
const L05_INTER: &str = "a ∩ b has grade sums at most 1";
const L06_UNION: &str = "a ∪ (b ∩ c) = (a ∪ b) ∩ (a ∪ c)";
const L06_INTER: &str = "a ∩ (b ∪ c) = (a ∩ b) ∪ (a ∩ c)";
const L07_LEFT: &str = "a ∩ b ⊆ a";
const L07_RIGHT: &str = "a ∩ b ⊆ b";
const L08_FWD: &str = "a ⊆ b ⇒ a ∩ b = a";
const L08_BWD: &str = "a ∩ b = a ⇒ a ⊆ b";
const L09_FWD: &str = "a ⊆ a ∪ b ⇒ rho_a ≤ rho_b";
const L09_BWD: &str = "rho_a ≤ rho_b ⇒ a ⊆ a ∪ b";
const L10_FWD: &str = "a ⊆ a ∪ b and b ⊆ a ∪ b ⇒ rho_a = rho_b";
const L10_BWD: &str = "rho_a = rho_b ⇒ a ⊆ a ∪ b and b ⊆ a ∪ b";
const L11_FWD: &str = "rho_a = rho_b ⇒ (a ⊆ b ⇒ a ∪ b = b)";
const L11_BWD: &str = "rho_a = rho_b ⇒ (a ∪ b = b ⇒ a ⊆ b)";
const L12_FWD: &str = "a = b ⇒ a ∥ b and a ≡ b";
const L12_BWD: &str = "a ∥ b and a ≡ b ⇒ a = b";
const L13_I: &str = "a ∥ b ⇒ a ∩ b ⊆ a and a ∩ b ⊆ b";
const L13_II: &str = "a ∥ b ⇒ (a ⊆ b ⇔ a ∩ b = a)";
const L13_III: &str = "a ∥ b ⇒ a ⊆ a ∪ b and b ⊆ a ∪ b";
const L13_IV: &str = "a ∥ b ⇒ (a ⊆ b ⇔ a ∪ b = b)";
const L13_BWD: &str = "the four inclusion rules ⇒ a ∥ b";
const L14_A_FULL: &str = "a ∥ b ⇒ a ⊆ I";
const L14_NULL_A: &str = "a ∥ b ⇒ O ⊆ a";
const L14_B_FULL: &str = "a ∥ b ⇒ b ⊆ I";
const L14_NULL_B: &str = "a ∥ b ⇒ O ⊆ b";
const L15_NULL_BELOW: &str = "O ⊆ a for every a";
const L15_BELOW_FULL: &str = "a ⊆ I for every a";
const L16_BASE: &str = "the intersection closure without O is a base";
const L16_AXIOMS: &str = "the generated family satisfies the topology axioms";
const L16_COVER: &str = "every generated member is a union of base members";
const L17_FORM: &str = "the generated topology is {I, O} ∪ chain ∪ {O ∪ c1}";
const L17_AXIOMS: &str = "{I, O} ∪ chain ∪ {O ∪ c1} satisfies the topology axioms";
const L17_LITERAL: &str = "{O, c1, …, ck, I} satisfies the topology axioms";
const L18_RANK: &str = "rank ≤ |S| + 1";
const L19_UNION: &str = "~(a ∪ b) = ~a ∩ ~b";
const L19_INTER: &str = "~(a ∩ b) = ~a ∪ ~b";

fn un(a: &PictureFuzzySet, b: &PictureFuzzySet) -> PictureFuzzySet {
    a.union(b).expect("same universe")
}

fn is(a: &PictureFuzzySet, b: &PictureFuzzySet) -> PictureFuzzySet {
    a.intersection(b).expect("same universe")
}

fn sub(a: &PictureFuzzySet, b: &PictureFuzzySet, mode: InclusionMode) -> bool {
    a.includes(b, mode).expect("same universe")
}

fn rho_le(a: &PictureFuzzySet, b: &PictureFuzzySet) -> bool {
    a.rho().zip(b.rho()).all(|(x, y)| x <= y)
}

fn rho_eq(a: &PictureFuzzySet, b: &PictureFuzzySet) -> bool {
    rho_equivalent(a, b).expect("same universe")
}

fn sums_ok(a: &PictureFuzzySet) -> bool {
    a.triples()
        .iter()
        .all(|t| u32::from(t.mu().raw()) + u32::from(t.rho().raw()) + u32::from(t.sigma().raw()) <= u32::from(SCALE))
}

macro_rules! require {
    ($($cond:expr => $clause:expr),* $(,)?) => {{
        $(if !$cond {
            return Some($clause);
        })*
        None
    }};
}

/// The first clause of an algebraic law broken by `s`, if any.
fn algebraic_violation(law: LawId, s: &[&PictureFuzzySet], mode: InclusionMode) -> Option<&'static str> {
    let a = s[0];
    let b = s.get(1).copied().unwrap_or(a);
    match law {
        LawId::L01 => require! {
            a != b || un(a, b) == *a => L01_UNION,
            a != b || is(b, a) == *a => L01_INTER,
        },
        LawId::L02 => require! {
            un(a, b) == un(b, a) => L02_UNION,
            is(a, b) == is(b, a) => L02_INTER,
        },
        LawId::L03 => {
            let c = s[2];
            require! {
                un(&un(a, b), c) == un(a, &un(b, c)) => L03_UNION,
                is(&is(a, b), c) == is(a, &is(b, c)) => L03_INTER,
            }
        }
        LawId::L04 => {
            let absorbs = un(a, b) == *a && is(b, a) == *a;
            let bal = balanced(a, b).expect("same universe");
            require! {
                !absorbs || bal => L04_FWD,
                !bal || absorbs => L04_BWD,
            }
        }
        LawId::L05 => require! {
            sums_ok(&un(a, b)) => L05_UNION,
            sums_ok(&is(a, b)) => L05_INTER,
        },
        LawId::L06 => {
            let c = s[2];
            require! {
                un(a, &is(b, c)) == is(&un(a, b), &un(a, c)) => L06_UNION,
                is(a, &un(b, c)) == un(&is(a, b), &is(a, c)) => L06_INTER,
            }
        }
        LawId::L07 => {
            let n = is(a, b);
            require! {
                sub(&n, a, mode) => L07_LEFT,
                sub(&n, b, mode) => L07_RIGHT,
            }
        }
        LawId::L08 => {
            let inc = sub(a, b, mode);
            let meet = is(a, b) == *a;
            require! {
                !inc || meet => L08_FWD,
                !meet || inc => L08_BWD,
            }
        }
        LawId::L09 => {
            let inc = sub(a, &un(a, b), mode);
            let le = rho_le(a, b);
            require! {
                !inc || le => L09_FWD,
                !le || inc => L09_BWD,
            }
        }
        LawId::L10 => {
            let j = un(a, b);
            let both = sub(a, &j, mode) && sub(b, &j, mode);
            let eq = rho_eq(a, b);
            require! {
                !both || eq => L10_FWD,
                !eq || both => L10_BWD,
            }
        }
        LawId::L11 => {
            if !rho_eq(a, b) {
                return None;
            }
            let inc = sub(a, b, mode);
            let join = un(a, b) == *b;
            require! {
                !inc || join => L11_FWD,
                !join || inc => L11_BWD,
            }
        }
        LawId::L12 => {
            let eq = a == b;
            let both = rho_eq(a, b) && balanced(a, b).expect("same universe");
            require! {
                !eq || both => L12_FWD,
                !both || eq => L12_BWD,
            }
        }
        LawId::L13 => {
            let n = is(a, b);
            let j = un(a, b);
            let inc = sub(a, b, mode);
            let i = sub(&n, a, mode) && sub(&n, b, mode);
            let ii = inc == (n == *a);
            let iii = sub(a, &j, mode) && sub(b, &j, mode);
            let iv = inc == (j == *b);
            let par = rho_eq(a, b);
            require! {
                !par || i => L13_I,
                !par || ii => L13_II,
                !par || iii => L13_III,
                !par || iv => L13_IV,
                !(i && ii && iii && iv) || par => L13_BWD,
            }
        }
        LawId::L14 => {
            if !rho_eq(a, b) {
                return None;
            }
            let full = PictureFuzzySet::full(a.universe());
            let null = PictureFuzzySet::null(a.universe());
            require! {
                sub(a, &full, mode) => L14_A_FULL,
                sub(&null, a, mode) => L14_NULL_A,
                sub(b, &full, mode) => L14_B_FULL,
                sub(&null, b, mode) => L14_NULL_B,
            }
        }
        LawId::L19 => require! {
            un(a, b).complement() == is(&a.complement(), &b.complement()) => L19_UNION,
            is(a, b).complement() == un(&a.complement(), &b.complement()) => L19_INTER,
        },
        LawId::L15 | LawId::L16 | LawId::L17 | LawId::L18 => None,
    }
}

fn universal_claims() -> [&'static str; 2] {
    [L15_NULL_BELOW, L15_BELOW_FULL]
}

fn universal_holds(claim: &str, a: &PictureFuzzySet, mode: InclusionMode) -> bool {
    if claim == L15_NULL_BELOW {
        sub(&PictureFuzzySet::null(a.universe()), a, mode)
    } else {
        sub(a, &PictureFuzzySet::full(a.universe()), mode)
    }
}

/// The first clause of a structural law broken by the sub-base (or chain)
/// `s`, with a short explanation.
fn structural_violation(law: LawId, s: &Family) -> Result<Option<(&'static str, String)>, Error> {
    match law {
        LawId::L16 => {
            let trace = generate_from_subbase(s, false)?;
            let base = check_base(&trace.base)?;
            if let Some(w) = base.witness {
                return Ok(Some((L16_BASE, w.to_string())));
            }
            let axioms = check_axioms(&trace.topology)?;
            if let Some(v) = axioms.violations.first() {
                return Ok(Some((L16_AXIOMS, v.to_string())));
            }
            let cover = verify_base_for(&trace.topology, &trace.base)?;
            if let Some(m) = cover.failing_member {
                return Ok(Some((L16_COVER, format!("{} is not decomposable", m.name))));
            }
            Ok(None)
        }
        LawId::L17 => {
            let trace = chain_topology(s)?;
            let closed = chain_closed_form(s);
            if !trace.topology.same_values(&closed) {
                return Ok(Some((
                    L17_FORM,
                    format!(
                        "generated {} distinct members, closed form has {}",
                        trace.topology.distinct_values(),
                        closed.distinct_values()
                    ),
                )));
            }
            let axioms = check_axioms(&closed)?;
            if let Some(v) = axioms.violations.first() {
                return Ok(Some((L17_AXIOMS, v.to_string())));
            }
            Ok(None)
        }
        LawId::L18 => {
            let trace = generate_from_subbase(s, false)?;
            let rank = rank_of(&trace.topology)?.get();
            let bound = s.distinct_values() + 1;
            if rank > bound {
                return Ok(Some((
                    L18_RANK,
                    format!("rank {rank} > |S| + 1 = {bound}"),
                )));
            }
            Ok(None)
        }
        _ => Ok(None),
    }
}

fn chain_closed_form(chain: &Family) -> Family {
    let x = chain.universe();
    let mut f = Family::new(x);
    let mut add = |name: String, set: PictureFuzzySet| {
        if !f.contains_value(&set) {
            f.insert(name, set).expect("fresh name");
        }
    };
    add("I".into(), PictureFuzzySet::full(x));
    add("O".into(), PictureFuzzySet::null(x));
    for m in chain {
        add(m.name.clone(), m.set.clone());
    }
    if let Some(first) = chain.members().first() {
        add(format!("(O | {})", first.name), zero_rho_join(&first.set));
    }
    f
}

fn literal_chain_violation(chain: &Family) -> Result<Option<String>, Error> {
    let x = chain.universe();
    let mut f = Family::new(x);
    f.insert("O", PictureFuzzySet::null(x))?;
    for m in chain {
        f.insert(m.name.clone(), m.set.clone())?;
    }
    f.insert("I", PictureFuzzySet::full(x))?;
    Ok(check_axioms(&f)?.violations.first().map(ToString::to_string))
}

fn named(names: &[&str], sets: &[&PictureFuzzySet]) -> Vec<Member> {
    names
        .iter()
        .zip(sets)
        .map(|(n, s)| Member::new(*n, (*s).clone()))
        .collect()
}

const SET_NAMES: [&str; 3] = ["a", "b", "c"];

/// Re-checks a witness: true iff its sets still break its clause.
pub fn replay(law: LawId, witness: &Witness, mode: InclusionMode) -> Result<bool, Error> {
    let sets: Vec<&PictureFuzzySet> = witness.sets.iter().map(|m| &m.set).collect();
    if let Some(first) = sets.first() {
        if sets.iter().any(|s| !s.same_universe(first)) {
            return Err(Error::UniverseMismatch);
        }
    } else {
        return Err(Error::EmptyFamily);
    }
    match law.kind() {
        LawKind::Algebraic { arity } => {
            if sets.len() != arity {
                return Err(Error::LengthMismatch {
                    expected: arity,
                    found: sets.len(),
                });
            }
            Ok(algebraic_violation(law, &sets, mode) == Some(witness.clause.as_str()))
        }
        LawKind::Universal => Ok(universal_claims().contains(&witness.clause.as_str())
            && !universal_holds(&witness.clause, sets[0], mode)),
        LawKind::Structural => {
            let family = Family::from_members(sets[0].universe(), witness.sets.iter().cloned())?;
            if law == LawId::L17 && witness.clause == L17_LITERAL {
                return Ok(literal_chain_violation(&family)?.is_some());
            }
            Ok(structural_violation(law, &family)?.map(|(c, _)| c) == Some(witness.clause.as_str()))
        }
    }
}

/// Checks one law over one domain.
pub fn check_law(law: LawId, domain: &SearchDomain, mode: InclusionMode) -> Result<LawVerdict, Error> {
    domain.validate()?;
    let grid = Grid::new(domain.universe_size, domain.step)?;
    let (outcome, checked, secondary) = match law.kind() {
        LawKind::Algebraic { arity } => {
            let (o, n) = search_algebraic(law, arity, &grid, domain, mode)?;
            (o, n, Vec::new())
        }
        LawKind::Universal => {
            let (o, n) = search_universal(&grid, domain, mode)?;
            (o, n, Vec::new())
        }
        LawKind::Structural => search_structural(law, &grid, domain)?,
    };
    let vacuous = checked == 0;
    Ok(LawVerdict {
        law,
        statement: law.statement(),
        mode,
        outcome,
        checked_count: checked,
        vacuous,
        phases: vec![Phase {
            domain: domain.clone(),
            checked,
        }],
        secondary,
    })
}

fn grid_sets(grid: &Grid, domain: &SearchDomain) -> Result<Vec<PictureFuzzySet>, Error> {
    domain.check_budget(grid.set_count())?;
    Ok(grid.all_sets())
}

fn search_algebraic(
    law: LawId,
    arity: usize,
    grid: &Grid,
    domain: &SearchDomain,
    mode: InclusionMode,
) -> Result<(Outcome, u64), Error> {
    let witness = |sets: &[&PictureFuzzySet], clause: &str| Witness {
        clause: clause.to_string(),
        sets: named(&SET_NAMES[..arity], sets),
        detail: None,
    };
    match domain.strategy {
        Strategy::Exhaustive => {
            let n = grid.set_count();
            let total = n
                .checked_pow(arity as u32)
                .unwrap_or(u128::MAX);
            domain.check_budget(total)?;
            let sets = grid_sets(grid, domain)?;
            let n = sets.len() as u64;
            let total = total as u64;
            let found = (0..total).into_par_iter().find_map_first(|idx| {
                let mut picks = [&sets[0]; 3];
                let mut rest = idx;
                for slot in picks[..arity].iter_mut().rev() {
                    *slot = &sets[(rest % n) as usize];
                    rest /= n;
                }
                algebraic_violation(law, &picks[..arity], mode).map(|c| (idx, witness(&picks[..arity], c)))
            });
            Ok(match found {
                Some((idx, w)) => (Outcome::Counterexample(w), idx + 1),
                None => (Outcome::Holds, total),
            })
        }
        Strategy::Randomized { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for i in 0..samples {
                let picked: Vec<PictureFuzzySet> = (0..arity).map(|_| grid.sample(&mut rng)).collect();
                let refs: Vec<&PictureFuzzySet> = picked.iter().collect();
                if let Some(c) = algebraic_violation(law, &refs, mode) {
                    return Ok((Outcome::Counterexample(witness(&refs, c)), i + 1));
                }
            }
            Ok((Outcome::Holds, samples))
        }
    }
}

fn search_universal(grid: &Grid, domain: &SearchDomain, mode: InclusionMode) -> Result<(Outcome, u64), Error> {
    let mut claims: Vec<ClaimVerdict> = universal_claims()
        .iter()
        .map(|c| ClaimVerdict {
            claim: c.to_string(),
            counterexample: None,
        })
        .collect();
    let mut visit = |a: &PictureFuzzySet| {
        for cv in claims.iter_mut().filter(|cv| cv.holds()) {
            if !universal_holds(&cv.claim, a, mode) {
                cv.counterexample = Some(Witness {
                    clause: cv.claim.clone(),
                    sets: vec![Member::new("a", a.clone())],
                    detail: None,
                });
            }
        }
    };
    let checked = match domain.strategy {
        Strategy::Exhaustive => {
            let sets = grid_sets(grid, domain)?;
            sets.iter().for_each(&mut visit);
            sets.len() as u64
        }
        Strategy::Randomized { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                visit(&grid.sample(&mut rng));
            }
            samples
        }
    };
    let outcome = if claims.iter().all(ClaimVerdict::holds) {
        Outcome::Holds
    } else {
        Outcome::Split(claims)
    };
    Ok((outcome, checked))
}

/// One structural instance: a sub-base or chain, plus where it came from.
struct Instance {
    family: Family,
    origin: Option<&'static str>,
}

fn subbase(grid: &Grid, sets: &[&PictureFuzzySet]) -> Family {
    let members = sets
        .iter()
        .enumerate()
        .map(|(i, s)| Member::new(format!("K{}", i + 1), (*s).clone()));
    Family::from_members(&grid.universe, members).expect("distinct names")
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn search_structural(
    law: LawId,
    grid: &Grid,
    domain: &SearchDomain,
) -> Result<(Outcome, u64, Vec<ClaimVerdict>), Error> {
    let max_len = domain.arity.unwrap_or(2);
    let mut secondary = (law == LawId::L17).then(|| ClaimVerdict {
        claim: L17_LITERAL.to_string(),
        counterexample: None,
    });
    let mut checked = 0u64;

    let mut check = |inst: Instance| -> Result<Option<Witness>, Error> {
        checked += 1;
        let to_witness = |clause: &str, detail: Option<String>| Witness {
            clause: clause.to_string(),
            sets: inst.family.members().to_vec(),
            detail: match (inst.origin, detail) {
                (Some(o), Some(d)) => Some(format!("{o}: {d}")),
                (Some(o), None) => Some(o.to_string()),
                (None, d) => d,
            },
        };
        if let Some(sec) = secondary.as_mut().filter(|s| s.holds()) {
            if let Some(v) = literal_chain_violation(&inst.family)? {
                sec.counterexample = Some(to_witness(L17_LITERAL, Some(v)));
            }
        }
        Ok(structural_violation(law, &inst.family)?.map(|(c, d)| to_witness(c, Some(d))))
    };

    let mut found = None;
    match domain.strategy {
        Strategy::Exhaustive => {
            let bound: u128 = (1..=max_len as u128)
                .map(|k| {
                    let m = grid.set_count();
                    if law == LawId::L17 {
                        m.checked_pow(k as u32).unwrap_or(u128::MAX)
                    } else {
                        binomial(m, k)
                    }
                })
                .fold(0u128, u128::saturating_add);
            domain.check_budget(bound)?;
            let sets: Vec<PictureFuzzySet> = grid_sets(grid, domain)?
                .into_iter()
                .filter(|s| !s.is_boundary())
                .collect();
            found = if law == LawId::L17 {
                enumerate_chains(&sets, max_len, &mut |picks| {
                    check(Instance {
                        family: subbase(grid, picks),
                        origin: None,
                    })
                })?
            } else {
                enumerate_combinations(&sets, max_len, &mut |picks| {
                    check(Instance {
                        family: subbase(grid, picks),
                        origin: None,
                    })
                })?
            };
        }
        Strategy::Randomized { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                let len = rng.gen_range(1..=max_len);
                let picked = if law == LawId::L17 {
                    sample_chain(grid, domain.step, len, &mut rng)
                } else {
                    (0..len).map(|_| sample_inner(grid, &mut rng)).collect()
                };
                let refs: Vec<&PictureFuzzySet> = picked.iter().collect();
                if let Some(w) = check(Instance {
                    family: subbase(grid, &refs),
                    origin: None,
                })? {
                    found = Some(w);
                    break;
                }
            }
        }
    }

    if found.is_none() && domain.fixtures {
        for (label, family) in fixtures::all() {
            if law == LawId::L17 && !is_chain(&family)? {
                continue;
            }
            if let Some(w) = check(Instance {
                family,
                origin: Some(label),
            })? {
                found = Some(w);
                break;
            }
        }
    }

    let outcome = match found {
        Some(w) => Outcome::Counterexample(w),
        None => Outcome::Holds,
    };
    Ok((outcome, checked, secondary.into_iter().collect()))
}

fn is_chain(family: &Family) -> Result<bool, Error> {
    for pair in family.members().windows(2) {
        if !balanced(&pair[0].set, &pair[1].set)? {
            return Ok(false);
        }
    }
    Ok(true)
}

type Visit<'a> = dyn FnMut(&[&PictureFuzzySet]) -> Result<Option<Witness>, Error> + 'a;

/// Subsets of size `1..=max_len` in lexicographic index order, smaller sizes
/// first.
fn enumerate_combinations(
    sets: &[PictureFuzzySet],
    max_len: usize,
    visit: &mut Visit<'_>,
) -> Result<Option<Witness>, Error> {
    fn go<'s>(
        sets: &'s [PictureFuzzySet],
        start: usize,
        want: usize,
        picks: &mut Vec<&'s PictureFuzzySet>,
        visit: &mut Visit<'_>,
    ) -> Result<Option<Witness>, Error> {
        if picks.len() == want {
            return visit(picks);
        }
        for i in start..sets.len() {
            picks.push(&sets[i]);
            let r = go(sets, i + 1, want, picks, visit)?;
            picks.pop();
            if r.is_some() {
                return Ok(r);
            }
        }
        Ok(None)
    }
    for k in 1..=max_len {
        if let Some(w) = go(sets, 0, k, &mut Vec::with_capacity(k), visit)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Sequences of distinct sets, consecutive ones balanced, of length
/// `1..=max_len`, shorter first.
fn enumerate_chains(
    sets: &[PictureFuzzySet],
    max_len: usize,
    visit: &mut Visit<'_>,
) -> Result<Option<Witness>, Error> {
    fn go<'s>(
        sets: &'s [PictureFuzzySet],
        want: usize,
        picks: &mut Vec<&'s PictureFuzzySet>,
        visit: &mut Visit<'_>,
    ) -> Result<Option<Witness>, Error> {
        if picks.len() == want {
            return visit(picks);
        }
        for s in sets {
            if let Some(last) = picks.last() {
                if *last == s || !balanced(last, s)? {
                    continue;
                }
            }
            picks.push(s);
            let r = go(sets, want, picks, visit)?;
            picks.pop();
            if r.is_some() {
                return Ok(r);
            }
        }
        Ok(None)
    }
    for k in 1..=max_len {
        if let Some(w) = go(sets, k, &mut Vec::with_capacity(k), visit)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn sample_inner<R: Rng>(grid: &Grid, rng: &mut R) -> PictureFuzzySet {
    loop {
        let s = grid.sample(rng);
        if !s.is_boundary() {
            return s;
        }
    }
}

/// A random chain: each link keeps mu and sigma and raises rho by grid steps.
fn sample_chain<R: Rng>(grid: &Grid, step: GridStep, len: usize, rng: &mut R) -> Vec<PictureFuzzySet> {
    let h = step.raw();
    let mut chain = vec![sample_inner(grid, rng)];
    while chain.len() < len {
        let last = chain.last().expect("non-empty");
        let triples = last
            .triples()
            .iter()
            .map(|t| {
                let room = (SCALE - t.mu().raw() - t.rho().raw() - t.sigma().raw()) / h;
                let rho = t.rho().raw() + h * rng.gen_range(0..=room);
                MembershipTriple::from_raw(t.mu().raw(), rho, t.sigma().raw()).expect("stays on the simplex")
            })
            .collect();
        chain.push(PictureFuzzySet::new(&grid.universe, triples).expect("same universe"));
    }
    chain
}

/// Runs `law` over each domain in turn, stopping after the first phase that
/// does not hold.
pub fn check_law_phases(law: LawId, phases: &[SearchDomain], mode: InclusionMode) -> Result<LawVerdict, Error> {
    let mut verdict: Option<LawVerdict> = None;
    for domain in phases {
        let next = check_law(law, domain, mode)?;
        let acc = match verdict.as_mut() {
            None => verdict.insert(next),
            Some(acc) => {
                acc.absorb(next);
                acc
            }
        };
        if !acc.holds() {
            break;
        }
    }
    verdict.ok_or_else(|| Error::InvalidDomain("no search phases".into()))
}

/// Exhaustive over one-element universes on the 0.25 grid, with the worked
/// sub-bases; three-set laws also get randomized two-element samples.
pub fn default_plan(law: LawId, seed: u64) -> Vec<SearchDomain> {
    let mut plan = vec![SearchDomain::exhaustive(1, GridStep::Quarter)];
    if law.kind() == (LawKind::Algebraic { arity: 3 }) {
        plan.push(SearchDomain::randomized(2, GridStep::Quarter, DEFAULT_SAMPLES, seed));
    }
    plan
}

pub fn check_law_default(law: LawId, mode: InclusionMode, seed: u64) -> Result<LawVerdict, Error> {
    check_law_phases(law, &default_plan(law, seed), mode)
}

/// Every law over one domain.
pub fn run_catalog(domain: &SearchDomain, mode: InclusionMode) -> Result<Vec<LawVerdict>, Error> {
    LawId::ALL.iter().map(|&law| check_law(law, domain, mode)).collect()
}

/// Every law under its default plan.
pub fn run_default_catalog(mode: InclusionMode, seed: u64) -> Result<Vec<LawVerdict>, Error> {
    LawId::ALL
        .iter()
        .map(|&law| check_law_default(law, mode, seed))
        .collect()
}
