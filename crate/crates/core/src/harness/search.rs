use rayon::prelude::*;
use serde::Serialize;

use super::corpus::Corpus;
use super::suite::{ChainLink, Ctx, SkipRecord, WitnessRecord};
use crate::config::Limits;
use crate::predicates::{PredicateError, Property};

/// Rings satisfying every `require` property and failing every `forbid`
/// property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchQuery {
    pub require: Vec<Property>,
    pub forbid: Vec<Property>,
}

impl SearchQuery {
    pub fn parse<S: AsRef<str>>(require: &[S], forbid: &[S]) -> Result<Self, PredicateError> {
        let parse = |v: &[S]| -> Result<Vec<Property>, PredicateError> {
            v.iter()
                .map(|s| {
                    let p: Property = s.as_ref().parse()?;
                    if p.is_ideal_level() {
                        Err(PredicateError::NeedsIdeal(p.to_string()))
                    } else {
                        Ok(p)
                    }
                })
                .collect()
        };
        Ok(SearchQuery {
            require: parse(require)?,
            forbid: parse(forbid)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchHit {
    pub ring: String,
    /// Witnesses of the forbidden properties failing.
    pub witnesses: Vec<ChainLink>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub require: Vec<String>,
    pub forbid: Vec<String>,
    /// `found` or `none-in-corpus`.
    pub outcome: String,
    pub found: Vec<SearchHit>,
    /// Rings where a needed property exceeded its budget.
    pub undecided: Vec<SkipRecord>,
    /// A required property is a bounded semi-decision, so membership is only
    /// up to its degree bound.
    pub semi_decided: bool,
}

impl SearchResult {
    pub fn ids(&self) -> Vec<&str> {
        self.found.iter().map(|h| h.ring.as_str()).collect()
    }
}

pub(crate) enum RingHit {
    Match(Vec<ChainLink>),
    NoMatch,
    Undecided(String),
}

pub(crate) fn evaluate(ctx: &Ctx, q: &SearchQuery) -> RingHit {
    let mut undecided = None;
    let mut witnesses = Vec::new();
    let checks = q.require.iter().map(|&p| (p, true)).chain(q.forbid.iter().map(|&p| (p, false)));
    for (p, wanted) in checks {
        match ctx.report(p) {
            Ok(rep) if rep.value != wanted => return RingHit::NoMatch,
            Ok(rep) => {
                if !wanted {
                    witnesses.push(ChainLink {
                        recipe: String::new(),
                        property: rep.property.clone(),
                        value: rep.value,
                        bounded: rep.bounded,
                        witness: rep.witness.as_ref().map(|w| WitnessRecord::new(ctx.ring(), w)),
                    });
                }
            }
            Err(e) => {
                undecided.get_or_insert(format!("{p}: {e}"));
            }
        }
    }
    match undecided {
        Some(reason) => RingHit::Undecided(reason),
        None => RingHit::Match(witnesses),
    }
}

pub(crate) fn merge<'h>(corpus: &Corpus, q: &SearchQuery, hits: impl Iterator<Item = &'h RingHit>) -> SearchResult {
    let mut found = Vec::new();
    let mut undecided = Vec::new();
    for (entry, hit) in corpus.entries.iter().zip(hits) {
        match hit {
            RingHit::Match(w) => found.push(SearchHit {
                ring: entry.id.clone(),
                witnesses: w
                    .iter()
                    .map(|l| ChainLink {
                        recipe: entry.recipe.to_string(),
                        ..l.clone()
                    })
                    .collect(),
            }),
            RingHit::NoMatch => {}
            RingHit::Undecided(reason) => undecided.push(SkipRecord {
                unit: entry.id.clone(),
                reason: reason.clone(),
            }),
        }
    }
    SearchResult {
        require: q.require.iter().map(Property::to_string).collect(),
        forbid: q.forbid.iter().map(Property::to_string).collect(),
        outcome: if found.is_empty() { "none-in-corpus" } else { "found" }.to_string(),
        found,
        undecided,
        semi_decided: q.require.iter().any(|p| p.bound().is_some()),
    }
}

/// All corpus rings matching the query, in corpus order. An empty result
/// is a statement about this corpus only.
pub fn search_counterexample(corpus: &Corpus, query: &SearchQuery, limits: &Limits) -> SearchResult {
    let hits: Vec<RingHit> = corpus
        .entries
        .par_iter()
        .map(|e| evaluate(&Ctx::new(e, limits), query))
        .collect();
    merge(corpus, query, hits.iter())
}
