use std::fmt::Write as _;
use std::str::FromStr;

use super::suite::{ChainLink, RunReport};
use super::HarnessError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(HarnessError::Recipe(format!("unknown report format `{s}`"))),
        }
    }
}

/// Serializes a report. Neither form contains timings or other run-local
/// data, so equal reports give equal bytes.
pub fn emit_report(report: &RunReport, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s.into_bytes()
        }
        Format::Text => text(report).into_bytes(),
    }
}

fn chain_lines(out: &mut String, chain: &[ChainLink]) {
    for l in chain {
        let bound = l.bounded.map(|d| format!(" (bounded d={d})")).unwrap_or_default();
        let _ = write!(out, "      {} on {} = {}{}", l.property, l.recipe, l.value, bound);
        if let Some(w) = &l.witness {
            let roles: Vec<String> = w
                .elements
                .iter()
                .map(|r| format!("{}=[{}] {}", r.role, r.element, r.label))
                .collect();
            let _ = write!(out, "; {:?}: {}", w.kind, roles.join(", "));
        }
        out.push('\n');
    }
}

fn text(r: &RunReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "ringlab theorem report (schema {}, version {})", r.schema_version, r.tool_version);
    let c = &r.corpus;
    match (c.min_order, c.max_order) {
        (Some(lo), Some(hi)) => {
            let _ = writeln!(
                s,
                "corpus: {} rings, orders {lo}..{hi}, {} duplicates removed, {} recipes skipped",
                c.rings,
                c.duplicates_removed,
                c.skipped_recipes.len()
            );
        }
        _ => {
            let _ = writeln!(s, "corpus: empty");
        }
    }
    for k in &c.skipped_recipes {
        let _ = writeln!(s, "  skipped recipe {}: {}", k.recipe, k.reason);
    }
    if !r.theorems.is_empty() {
        let _ = writeln!(s, "\n{:<26} {:>6} {:>6} {:>8} {:>8}", "check", "pass", "fail", "not-met", "skipped");
        for t in &r.theorems {
            let tag = if t.adapted { " (adapted)" } else { "" };
            let _ = writeln!(
                s,
                "{:<26} {:>6} {:>6} {:>8} {:>8}{tag}",
                t.id, t.pass, t.fail, t.hypothesis_not_met, t.skipped_budget
            );
        }
        let t = &r.totals;
        let _ = writeln!(
            s,
            "{:<26} {:>6} {:>6} {:>8} {:>8}",
            "total", t.pass, t.fail, t.hypothesis_not_met, t.skipped_budget
        );
        let _ = writeln!(s, "table lookups: {}", t.cost);
    }
    if !r.hypothesis_never_met.is_empty() {
        let _ = writeln!(s, "\nhypothesis never met on this corpus: {}", r.hypothesis_never_met.join(", "));
    }
    for t in &r.theorems {
        if t.failures.is_empty() && t.exhibits.is_empty() && t.flags.is_empty() && t.skipped.is_empty() {
            continue;
        }
        let _ = writeln!(s, "\n[{}] {}", t.id, t.statement);
        for f in &t.failures {
            let _ = writeln!(s, "  FAIL {}: {}", f.unit, f.detail);
            chain_lines(&mut s, &f.chain);
        }
        for e in &t.exhibits {
            let _ = writeln!(s, "  exhibit {}: {}", e.unit, e.detail);
            chain_lines(&mut s, &e.chain);
        }
        for e in &t.flags {
            let _ = writeln!(s, "  flag {}: {}", e.unit, e.detail);
            chain_lines(&mut s, &e.chain);
        }
        for k in &t.skipped {
            let _ = writeln!(s, "  skipped {}: {}", k.unit, k.reason);
        }
    }
    if !r.searches.is_empty() {
        let _ = writeln!(s, "\nsearches:");
    }
    for q in &r.searches {
        let semi = if q.semi_decided { " (bounded)" } else { "" };
        let _ = writeln!(
            s,
            "  require [{}] forbid [{}]: {}{semi}",
            q.require.join(", "),
            q.forbid.join(", "),
            q.outcome
        );
        if !q.found.is_empty() {
            let _ = writeln!(s, "    found: {}", q.ids().join(", "));
        }
        if !q.undecided.is_empty() {
            let ids: Vec<&str> = q.undecided.iter().map(|u| u.unit.as_str()).collect();
            let _ = writeln!(s, "    undecided (budget): {}", ids.join(", "));
        }
    }
    if !r.covered_by_reduction.is_empty() {
        let _ = writeln!(s, "\ncovered by reduction:");
        for n in &r.covered_by_reduction {
            let _ = writeln!(s, "  {}: {} [{}]", n.id, n.statement, n.covered_by);
        }
    }
    s
}
