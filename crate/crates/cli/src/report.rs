use std::collections::BTreeMap;

use serde_json::{json, Value};

use pftopo::laws::LawVerdict;
use pftopo::topology::MinimalityReport;
use pftopo::{
    AxiomReport, BaseReport, ConstructionTrace, ExprAst, Family, Grade, InclusionMode, Member, PictureFuzzySet,
    RhoPartition,
};

pub enum Report<'a> {
    Check {
        family: &'a Family,
        axioms: &'a AxiomReport,
        base: &'a BaseReport,
        minimality: &'a MinimalityReport,
        mode: InclusionMode,
    },
    Generate {
        trace: &'a ConstructionTrace,
        rank: usize,
        bound: usize,
        expect_rank: Option<usize>,
    },
    Rank {
        rank: usize,
        expect_rank: Option<usize>,
    },
    Classify {
        partition: &'a RhoPartition,
    },
    Eval {
        ast: &'a ExprAst,
        value: &'a PictureFuzzySet,
    },
    Laws {
        verdicts: &'a [LawVerdict],
    },
}

/// Collects warnings and prints one report, as text or as a JSON object.
pub struct Output {
    json: bool,
    warnings: Vec<String>,
}

impl Output {
    pub fn new(json: bool) -> Self {
        Output {
            json,
            warnings: Vec::new(),
        }
    }

    pub fn warn(&mut self, message: &str) {
        if self.json {
            self.warnings.push(message.to_string());
        } else {
            eprintln!("warning: {message}");
        }
    }

    pub fn error(&mut self, kind: &str, message: &str) {
        if self.json {
            self.print_json(json!({ "error": { "kind": kind, "message": message } }));
        } else {
            eprintln!("error: {kind}: {message}");
        }
    }

    pub fn emit(&mut self, report: Report<'_>) {
        if self.json {
            let value = to_json(&report);
            self.print_json(value);
        } else {
            print!("{}", to_text(&report));
        }
    }

    fn print_json(&mut self, mut value: Value) {
        if !self.warnings.is_empty() {
            value["warnings"] = json!(std::mem::take(&mut self.warnings));
        }
        println!("{}", serde_json::to_string_pretty(&value).expect("report serializes"));
    }
}

fn rho_text(rho: &[Grade]) -> String {
    let parts: Vec<String> = rho.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn member_lines(text: &mut String, members: &[Member]) {
    for m in members {
        text.push_str(&format!("  {} = {}\n", m.name, m.set));
    }
}

fn rank_lines(text: &mut String, rank: usize, expect: Option<usize>) {
    if let Some(e) = expect {
        if e == rank {
            text.push_str(&format!("rank matches the expected {e}\n"));
        } else {
            text.push_str(&format!("rank mismatch: expected {e}, computed {rank}\n"));
        }
    }
}

fn to_text(report: &Report<'_>) -> String {
    let mut t = String::new();
    match report {
        Report::Check {
            family,
            axioms,
            base,
            minimality,
            mode,
        } => {
            t.push_str(&format!("family: {} members\n", family.len()));
            if axioms.is_topology {
                t.push_str("axioms: topology\n");
            } else {
                t.push_str(&format!("axioms: not a topology ({} violations)\n", axioms.violations.len()));
                for v in &axioms.violations {
                    t.push_str(&format!("  {v}\n"));
                }
            }
            match &base.witness {
                None => t.push_str("base: yes\n"),
                Some(w) => t.push_str(&format!("base: no, {w}\n")),
            }
            match &minimality.witness {
                None => t.push_str(&format!("sub-base minimality ({mode}): minimal\n")),
                Some(w) => t.push_str(&format!("sub-base minimality ({mode}): not minimal, {w}\n")),
            }
        }
        Report::Generate {
            trace,
            rank,
            bound,
            expect_rank,
        } => {
            let names: Vec<&str> = trace.subbase.iter().map(|m| m.name.as_str()).collect();
            t.push_str(&format!("sub-base: {}\n", names.join(", ")));
            t.push_str(&format!("base ({}):\n", trace.base.len()));
            member_lines(&mut t, trace.base.members());
            t.push_str(&format!("topology ({}):\n", trace.topology.len()));
            member_lines(&mut t, trace.topology.members());
            t.push_str(&format!("|T| = {}, rank = {rank}\n", trace.topology.len()));
            if rank > bound {
                t.push_str(&format!("note: rank {rank} > |S| + 1 = {bound}\n"));
            }
            rank_lines(&mut t, *rank, *expect_rank);
        }
        Report::Rank { rank, expect_rank } => {
            t.push_str(&format!("rank = {rank}\n"));
            rank_lines(&mut t, *rank, *expect_rank);
        }
        Report::Classify { partition } => {
            t.push_str(&format!("rank = {}\n", partition.rank()));
            for c in &partition.classes {
                t.push_str(&format!("rho {}: {}\n", rho_text(&c.rho), c.members.join(", ")));
            }
        }
        Report::Eval { ast, value } => {
            t.push_str(&format!("{ast} = {value}\n"));
        }
        Report::Laws { verdicts } => {
            for v in verdicts.iter() {
                t.push_str(&format!("{v}\n"));
            }
            let holding = verdicts.iter().filter(|v| v.holds()).count();
            t.push_str(&format!("{holding} of {} laws hold\n", verdicts.len()));
        }
    }
    t
}

fn to_json(report: &Report<'_>) -> Value {
    match report {
        Report::Check {
            family,
            axioms,
            base,
            minimality,
            mode,
        } => json!({
            "command": "check",
            "members": family.len(),
            "axioms": axioms,
            "base": base,
            "minimality": { "mode": mode, "report": minimality },
        }),
        Report::Generate {
            trace,
            rank,
            bound,
            expect_rank,
        } => {
            let provenance: BTreeMap<&str, String> = trace
                .provenance
                .iter()
                .map(|(k, v)| (k.as_str(), v.to_string()))
                .collect();
            json!({
                "command": "generate",
                "subbase": trace.subbase.members(),
                "base": trace.base.members(),
                "topology": trace.topology.members(),
                "provenance": provenance,
                "size": trace.topology.len(),
                "rank": rank,
                "rank_bound": bound,
                "exceeds_bound": rank > bound,
                "expected_rank": expect_rank,
                "rank_matches": expect_rank.map(|e| e == *rank),
            })
        }
        Report::Rank { rank, expect_rank } => json!({
            "command": "rank",
            "rank": rank,
            "expected_rank": expect_rank,
            "rank_matches": expect_rank.map(|e| e == *rank),
        }),
        Report::Classify { partition } => json!({
            "command": "classify",
            "rank": partition.rank().get(),
            "classes": partition.classes,
        }),
        Report::Eval { ast, value } => json!({
            "command": "eval",
            "expr": ast.to_string(),
            "value": value,
        }),
        Report::Laws { verdicts } => json!({
            "command": "laws",
            "all_hold": verdicts.iter().all(|v| v.holds()),
            "verdicts": verdicts,
        }),
    }
}
