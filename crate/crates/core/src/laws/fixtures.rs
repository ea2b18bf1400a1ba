//! Worked sub-bases over `{a, b, c}`, used alongside the grid by the
//! structural laws. All of them are admissible picture fuzzy sets.

use std::sync::Arc;

use crate::family::Family;
use crate::pfs::{PictureFuzzySet, Universe};

type Rows = [(&'static str, &'static str, &'static str); 3];

fn abc() -> Arc<Universe> {
    Universe::new(["a", "b", "c"]).expect("distinct labels")
}

fn family(sets: &[Rows]) -> Family {
    let x = abc();
    let mut f = Family::new(&x);
    for (i, rows) in sets.iter().enumerate() {
        let set = PictureFuzzySet::from_decimals(&x, rows).expect("valid fixture");
        f.insert(format!("K{}", i + 1), set).expect("distinct names");
    }
    f
}

/// Two incomparable sets sharing a rho vector.
pub fn incomparable_pair() -> Family {
    family(&[
        [("0.25", "0.20", "0.30"), ("0.35", "0.10", "0.45"), ("0.30", "0.35", "0.10")],
        [("0.45", "0.20", "0.35"), ("0.25", "0.10", "0.40"), ("0.50", "0.35", "0.05")],
    ])
}

/// Two nested sets with different rho vectors.
pub fn nested_pair() -> Family {
    family(&[
        [("0.30", "0.20", "0.45"), ("0.20", "0.25", "0.40"), ("0.30", "0.35", "0.10")],
        [("0.45", "0.30", "0.25"), ("0.25", "0.30", "0.30"), ("0.50", "0.40", "0.05")],
    ])
}

/// A balanced pair: same mu and sigma, pointwise larger rho.
pub fn balanced_pair() -> Family {
    family(&[
        [("0.35", "0.20", "0.25"), ("0.20", "0.15", "0.30"), ("0.20", "0.35", "0.15")],
        [("0.35", "0.30", "0.25"), ("0.20", "0.25", "0.30"), ("0.20", "0.40", "0.15")],
    ])
}

/// A pair whose rho vectors cross, giving rank four.
pub fn crossing_pair() -> Family {
    family(&[
        [("0.10", "0.35", "0.30"), ("0.20", "0.25", "0.40"), ("0.50", "0.40", "0.05")],
        [("0.45", "0.30", "0.25"), ("0.25", "0.30", "0.30"), ("0.30", "0.35", "0.10")],
    ])
}

/// Four sets forming two balanced pairs.
pub fn balanced_quadruple() -> Family {
    family(&[
        [("0.10", "0.15", "0.40"), ("0.20", "0.10", "0.35"), ("0.20", "0.15", "0.20")],
        [("0.30", "0.15", "0.35"), ("0.25", "0.10", "0.30"), ("0.30", "0.15", "0.10")],
        [("0.10", "0.10", "0.40"), ("0.20", "0.05", "0.35"), ("0.20", "0.15", "0.20")],
        [("0.30", "0.10", "0.35"), ("0.25", "0.05", "0.30"), ("0.30", "0.15", "0.10")],
    ])
}

/// All worked sub-bases with a short label.
pub fn all() -> Vec<(&'static str, Family)> {
    vec![
        ("incomparable-pair", incomparable_pair()),
        ("nested-pair", nested_pair()),
        ("balanced-pair", balanced_pair()),
        ("crossing-pair", crossing_pair()),
        ("balanced-quadruple", balanced_quadruple()),
    ]
}
