//! Topologies generated from sub-bases, bases and balanced chains.
//!
//! Closures are computed as fixpoints: pairwise combinations are added,
//! deduplicated by value, until a round adds nothing. Each round only pairs
//! the previous round's additions with everything known so far. Every
//! generated member records the expression over the input names that
//! produced it.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use crate::error::Error;
use crate::expr::ExprAst;
use crate::family::{Family, Member};
use crate::pfs::{InclusionMode, PictureFuzzySet, Universe};
use crate::relations::{balanced, zero_rho_join};
use crate::topology::{check_base, check_subbase_minimality};

/// Everything produced on the way from a sub-base to its topology.
#[derive(Debug, Clone)]
pub struct ConstructionTrace {
    pub subbase: Family,
    pub base: Family,
    pub union_layer: Family,
    pub topology: Family,
    /// For each topology member name, an expression over `subbase` names
    /// evaluating to that member.
    pub provenance: BTreeMap<String, ExprAst>,
}

#[derive(Debug, Clone)]
struct Node {
    name: String,
    expr: ExprAst,
    set: PictureFuzzySet,
}

#[derive(Clone, Copy)]
enum Op {
    Union,
    Intersection,
}

impl Op {
    fn apply(self, a: &Node, b: &Node) -> (ExprAst, PictureFuzzySet) {
        let (expr, set) = match self {
            Op::Union => (
                ExprAst::union(a.expr.clone(), b.expr.clone()),
                a.set.union(&b.set),
            ),
            Op::Intersection => (
                ExprAst::intersection(a.expr.clone(), b.expr.clone()),
                a.set.intersection(&b.set),
            ),
        };
        (expr, set.expect("layer members share a universe"))
    }
}

/// Value-deduplicated, uniquely named nodes in insertion order.
struct Layer {
    universe: Arc<Universe>,
    nodes: Vec<Node>,
    values: HashMap<PictureFuzzySet, usize>,
    names: HashSet<String>,
}

impl Layer {
    fn new(universe: &Arc<Universe>) -> Self {
        Layer {
            universe: Arc::clone(universe),
            nodes: Vec::new(),
            values: HashMap::new(),
            names: HashSet::new(),
        }
    }

    fn inputs(family: &Family) -> Self {
        let mut layer = Layer::new(family.universe());
        for m in family {
            layer.add(Some(&m.name), ExprAst::name(m.name.clone()), m.set.clone());
        }
        layer
    }

    fn from_nodes<'a>(universe: &Arc<Universe>, nodes: impl IntoIterator<Item = &'a Node>) -> Self {
        let mut layer = Layer::new(universe);
        for n in nodes {
            layer.add(Some(&n.name), n.expr.clone(), n.set.clone());
        }
        layer
    }

    /// Returns false when the value is already present. Derived nodes are
    /// named after their expression.
    fn add(&mut self, name: Option<&str>, expr: ExprAst, set: PictureFuzzySet) -> bool {
        if self.values.contains_key(&set) {
            return false;
        }
        let base = name.map(str::to_string).unwrap_or_else(|| expr.to_string());
        let mut name = base.clone();
        let mut k = 2;
        while self.names.contains(&name) {
            name = format!("{base}#{k}");
            k += 1;
        }
        self.names.insert(name.clone());
        self.values.insert(set.clone(), self.nodes.len());
        self.nodes.push(Node { name, expr, set });
        true
    }

    fn saturate(&mut self, op: Op) {
        let mut frontier = 0;
        loop {
            let known = self.nodes.len();
            let mut fresh = Vec::new();
            for j in frontier..known {
                for i in 0..j {
                    fresh.push(op.apply(&self.nodes[i], &self.nodes[j]));
                }
            }
            let mut grew = false;
            for (expr, set) in fresh {
                grew |= self.add(None, expr, set);
            }
            if !grew {
                return;
            }
            frontier = known;
        }
    }

    fn family(&self) -> Family {
        Family::from_members(
            &self.universe,
            self.nodes.iter().map(|n| Member::new(n.name.clone(), n.set.clone())),
        )
        .expect("layer names are unique")
        .canonicalized()
    }
}

fn require_no_boundary(family: &Family) -> Result<(), Error> {
    match family.iter().find(|m| m.set.is_boundary()) {
        Some(m) => Err(Error::ContainsBoundary { name: m.name.clone() }),
        None => Ok(()),
    }
}

/// Least superset closed under pairwise intersection.
pub fn intersection_closure(family: &Family) -> Result<Family, Error> {
    family.require_non_empty()?;
    require_no_boundary(family)?;
    let mut layer = Layer::inputs(family);
    layer.saturate(Op::Intersection);
    Ok(layer.family())
}

/// Least superset closed under pairwise union, i.e. all unions of non-empty
/// sub-families.
pub fn union_closure(family: &Family) -> Result<Family, Error> {
    family.require_non_empty()?;
    let mut layer = Layer::inputs(family);
    layer.saturate(Op::Union);
    Ok(layer.family())
}

/// `{I, O} ∪ U ∪ {O ∪ u : u ∈ U}` where `U` is the union closure of the base.
pub fn generate_from_base(base: &Family) -> Result<ConstructionTrace, Error> {
    let report = check_base(base)?;
    if let Some(w) = report.witness {
        return Err(Error::NotABase(Box::new(w)));
    }
    Ok(build(base.clone(), Layer::inputs(base)))
}

/// Intersection closure of the sub-base, then [`generate_from_base`].
///
/// The null set can appear as an intersection of non-boundary sets over
/// larger universes. It is dropped from the base, which is then not closed
/// under intersection, and re-enters the topology as `O`.
pub fn generate_from_subbase(subbase: &Family, require_minimal: bool) -> Result<ConstructionTrace, Error> {
    subbase.require_non_empty()?;
    require_no_boundary(subbase)?;
    if require_minimal {
        let report = check_subbase_minimality(subbase, InclusionMode::PaperLiteral)?;
        if let Some(w) = report.witness {
            return Err(Error::NotMinimal(Box::new(w)));
        }
    }
    let mut closure = Layer::inputs(subbase);
    closure.saturate(Op::Intersection);
    let base = Layer::from_nodes(
        subbase.universe(),
        closure.nodes.iter().filter(|n| !n.set.is_null()),
    );
    Ok(build(subbase.clone(), base))
}

/// Topology generated by a chain `c1 ≡ c2 ≡ … ≡ ck` of balanced sets.
///
/// The result is `{I, O} ∪ chain ∪ {O ∪ c1}`; the O-join coincides with a
/// chain member only when that member has zero rho.
pub fn chain_topology(chain: &Family) -> Result<ConstructionTrace, Error> {
    for pair in chain.members().windows(2) {
        if !balanced(&pair[0].set, &pair[1].set)? {
            return Err(Error::NotABalancedChain {
                first: pair[0].name.clone(),
                second: pair[1].name.clone(),
            });
        }
    }
    generate_from_subbase(chain, false)
}

/// `{I, O}`.
pub fn trivial_topology(universe: &Arc<Universe>) -> Family {
    Family::from_members(
        universe,
        [
            Member::new("I", PictureFuzzySet::full(universe)),
            Member::new("O", PictureFuzzySet::null(universe)),
        ],
    )
    .expect("distinct names")
}

fn build(subbase: Family, base: Layer) -> ConstructionTrace {
    let universe = Arc::clone(subbase.universe());
    let base_family = base.family();

    let mut unions = Layer::from_nodes(&universe, &base.nodes);
    unions.saturate(Op::Union);

    let mut topology = Layer::new(&universe);
    topology.add(Some("I"), ExprAst::Full, PictureFuzzySet::full(&universe));
    topology.add(Some("O"), ExprAst::Null, PictureFuzzySet::null(&universe));
    for n in &unions.nodes {
        topology.add(Some(&n.name), n.expr.clone(), n.set.clone());
    }
    for n in &unions.nodes {
        topology.add(
            None,
            ExprAst::union(ExprAst::Null, n.expr.clone()),
            zero_rho_join(&n.set),
        );
    }

    let provenance = topology
        .nodes
        .iter()
        .map(|n| (n.name.clone(), n.expr.clone()))
        .collect();
    ConstructionTrace {
        subbase,
        base: base_family,
        union_layer: unions.family(),
        topology: topology.family(),
        provenance,
    }
}
