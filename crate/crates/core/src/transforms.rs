//! Graphs derived from a [`Corpus`]: co-authorship, citation, their temporal
//! versions, and the cited-collaboration interaction graph.
//!
//! Author nodes are named by display name; paper nodes by paper id. Entities
//! and relations are created in paper-id order, so every builder is
//! deterministic.

use std::collections::BTreeMap;

use crate::graph::StaticGraph;
use crate::ingest::{Corpus, PaperRecord};
use crate::time::{Interval, TimeInstant};
use crate::tvg::{Label, RelationId, StrengthSeries, TimeVaryingGraph, TvgBuilder};

pub const COAUTHOR_LABEL: &str = "coauthor";
pub const CITES_LABEL: &str = "cites";

fn author_pairs(paper: &PaperRecord) -> impl Iterator<Item = (&str, &str)> {
    let names = &paper.authors;
    (0..names.len())
        .flat_map(move |i| (i + 1..names.len()).map(move |j| (names[i].display.as_str(), names[j].display.as_str())))
}

/// Undirected author graph with one edge per co-authoring pair. Solo authors are nodes.
pub fn build_coauthorship(corpus: &Corpus) -> StaticGraph {
    let mut b = StaticGraph::builder(false);
    for p in corpus.papers() {
        let idx: Vec<_> = p.authors.iter().map(|a| b.add_node(&a.display)).collect();
        for i in 0..idx.len() {
            for j in i + 1..idx.len() {
                b.add_edge(idx[i], idx[j]);
            }
        }
    }
    b.build()
}

/// Directed paper graph, `p -> q` for every within-corpus reference.
pub fn build_citation(corpus: &Corpus) -> StaticGraph {
    let mut b = StaticGraph::builder(true);
    for p in corpus.papers() {
        b.add_node(&p.id);
    }
    for p in corpus.papers() {
        let from = b.add_node(&p.id);
        for r in p.internal_references() {
            let to = b.add_node(r);
            b.add_edge(from, to);
        }
    }
    b.build()
}

/// Co-authorship relations present from the pair's first joint paper onward.
/// Each relation lists its contributing papers as sources.
pub fn build_temporal_coauthorship(corpus: &Corpus) -> TimeVaryingGraph {
    let mut b = TvgBuilder::new(false);
    add_coauthor_relations(&mut b, corpus);
    b.build(corpus.lifetime()).expect("paper dates lie inside the corpus lifetime")
}

fn add_coauthor_relations(b: &mut TvgBuilder, corpus: &Corpus) -> Vec<RelationId> {
    let mut first: BTreeMap<(String, String), (TimeInstant, Vec<String>)> = BTreeMap::new();
    for p in corpus.papers() {
        for a in &p.authors {
            b.add_entity(&a.display);
        }
        for (u, v) in author_pairs(p) {
            let key = if u <= v { (u.to_owned(), v.to_owned()) } else { (v.to_owned(), u.to_owned()) };
            let slot = first.entry(key).or_insert((p.date, Vec::new()));
            slot.0 = slot.0.min(p.date);
            slot.1.push(p.id.clone());
        }
    }
    let mut ids = Vec::with_capacity(first.len());
    for ((u, v), (start, sources)) in first {
        let (u, v) = (b.add_entity(&u), b.add_entity(&v));
        let id = b.relation(u, v, Label::new(COAUTHOR_LABEL));
        b.add_presence(id, Interval::from(start));
        for s in sources {
            b.add_source(id, s);
        }
        ids.push(id);
    }
    ids
}

/// Citation relations present from the citing paper's date onward.
pub fn build_temporal_citation(corpus: &Corpus) -> TimeVaryingGraph {
    let mut b = TvgBuilder::new(true);
    for p in corpus.papers() {
        b.add_entity(&p.id);
    }
    for p in corpus.papers() {
        let from = b.add_entity(&p.id);
        for r in p.internal_references() {
            let to = b.add_entity(r);
            let id = b.relation(from, to, Label::new(CITES_LABEL));
            b.add_presence(id, Interval::from(p.date));
        }
    }
    b.build(corpus.lifetime()).expect("paper dates lie inside the corpus lifetime")
}

/// Author graph whose relations carry the number of citations received by the
/// pair's joint papers, as a step function over the citing papers' dates.
#[derive(Clone, Debug)]
pub struct InteractionGraph {
    pub tvg: TimeVaryingGraph,
    /// Citations of single-author papers, which have no pair to credit.
    pub excluded_solo_citations: u64,
}

impl InteractionGraph {
    pub fn final_strengths(&self) -> impl Iterator<Item = u64> + '_ {
        self.tvg.relations().map(|(_, r)| r.strength.as_ref().map_or(0, StrengthSeries::final_value))
    }

    /// Static author graph weighted by final strength.
    pub fn support_graph(&self) -> StaticGraph {
        let mut b = StaticGraph::builder(false);
        for (_, r) in self.tvg.relations() {
            let u = b.add_node(self.tvg.entity_name(r.relation.a));
            let v = b.add_node(self.tvg.entity_name(r.relation.b));
            b.add_weighted_edge(u, v, r.strength.as_ref().map_or(0, StrengthSeries::final_value));
        }
        b.build()
    }
}

pub fn build_interaction(corpus: &Corpus) -> InteractionGraph {
    let mut b = TvgBuilder::new(false);
    for id in add_coauthor_relations(&mut b, corpus) {
        b.set_strength(id, StrengthSeries::default());
    }
    let mut excluded = 0;
    for citing in corpus.papers() {
        for cited_id in citing.internal_references() {
            let cited = corpus.get(cited_id).expect("internal references resolve");
            if cited.authors.len() < 2 {
                excluded += 1;
                continue;
            }
            for (u, v) in author_pairs(cited) {
                let (u, v) = (b.add_entity(u), b.add_entity(v));
                let id = b.relation(u, v, Label::new(COAUTHOR_LABEL));
                b.strength_mut(id).push(citing.date);
            }
        }
    }
    let tvg = b.build(corpus.lifetime()).expect("paper dates lie inside the corpus lifetime");
    InteractionGraph { tvg, excluded_solo_citations: excluded }
}

/// Interaction relations whose final strength reaches the threshold.
#[derive(Clone, Debug)]
pub struct MostCitedSubgraph {
    pub threshold: u64,
    /// Weighted by final strength.
    pub graph: StaticGraph,
    /// The retained relations with their presence and strength series.
    pub tvg: TimeVaryingGraph,
}

/// Keeps relations with final strength `>= threshold` and their endpoints.
pub fn filter_most_cited(g: &InteractionGraph, threshold: u64) -> MostCitedSubgraph {
    let strength = |r: &crate::tvg::RelationRecord| r.strength.as_ref().map_or(0, StrengthSeries::final_value);
    let tvg = g.tvg.filter_relations(|r| strength(r) >= threshold);
    let mut b = StaticGraph::builder(false);
    for (_, r) in tvg.relations() {
        let u = b.add_node(tvg.entity_name(r.relation.a));
        let v = b.add_node(tvg.entity_name(r.relation.b));
        b.add_weighted_edge(u, v, strength(r));
    }
    MostCitedSubgraph { threshold, graph: b.build(), tvg }
}
