//! Time-varying graphs: entities, labelled relations with presence intervals,
//! footprints over time windows, and journeys.
//!
//! A [`TimeVaryingGraph`] is immutable once built. The presence function of a
//! relation is its [`PresenceIntervalSet`]; a relation is present at `t` iff `t`
//! falls in one of its half-open intervals. Open-ended intervals are clamped
//! to the lifetime end whenever a window or journey query needs a bound.

mod journey;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::graph::{NodeIdx, StaticGraph};
use crate::time::{End, Interval, PresenceIntervalSet, TimeInstant};

pub use journey::{earliest_arrival_journey, journey_lengths, EarliestArrival, Journey, JourneyLengths, JourneyStep};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TvgError {
    #[error("unknown entity {0}")]
    UnknownEntity(String),
    #[error("unknown relation {0}")]
    UnknownRelation(String),
    #[error("invalid window [{from}, {to}): start must precede end")]
    InvalidWindow { from: TimeInstant, to: TimeInstant },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid journey: {0}")]
    InvalidJourney(String),
    #[error("invalid lifetime: {0}")]
    InvalidLifetime(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EntityId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RelationId(pub u32);

/// Opaque relation tag.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(pub String);

impl Label {
    pub fn new(s: impl Into<String>) -> Self {
        Label(s.into())
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A labelled pair of entities. Undirected relations are stored with `a <= b`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Relation {
    pub a: EntityId,
    pub b: EntityId,
    pub label: Label,
}

impl Relation {
    /// The endpoint opposite `from`, or `None` if `from` is not an endpoint.
    pub fn other(&self, from: EntityId) -> Option<EntityId> {
        if self.a == from {
            Some(self.b)
        } else if self.b == from {
            Some(self.a)
        } else {
            None
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a.0, self.b.0, self.label)
    }
}

/// `[start, end)` span of a graph's existence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lifetime {
    pub start: TimeInstant,
    pub end: TimeInstant,
}

impl Lifetime {
    pub fn new(start: TimeInstant, end: TimeInstant) -> Result<Self, TvgError> {
        if start < end {
            Ok(Lifetime { start, end })
        } else {
            Err(TvgError::InvalidLifetime(format!("[{start}, {end}) is empty")))
        }
    }

    pub fn contains(&self, t: TimeInstant) -> bool {
        self.start <= t && t < self.end
    }
}

/// Cumulative step function: `at(t)` counts the steps dated `<= t`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct StrengthSeries {
    steps: Vec<TimeInstant>,
}

impl StrengthSeries {
    pub fn from_steps(mut steps: Vec<TimeInstant>) -> Self {
        steps.sort_unstable();
        StrengthSeries { steps }
    }

    pub fn push(&mut self, t: TimeInstant) {
        let pos = self.steps.partition_point(|&s| s <= t);
        self.steps.insert(pos, t);
    }

    pub fn at(&self, t: TimeInstant) -> u64 {
        self.steps.partition_point(|&s| s <= t) as u64
    }

    pub fn final_value(&self) -> u64 {
        self.steps.len() as u64
    }

    pub fn steps(&self) -> &[TimeInstant] {
        &self.steps
    }
}

#[derive(Clone, Debug)]
pub struct RelationRecord {
    pub relation: Relation,
    pub presence: PresenceIntervalSet,
    pub strength: Option<StrengthSeries>,
    /// Free-form provenance, e.g. the papers that created the relation.
    pub sources: Vec<String>,
}

/// Whether a footprint keeps every entity or only those touched by a window edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum NodeScope {
    AllEntities,
    #[default]
    ActiveNodes,
}

impl std::str::FromStr for NodeScope {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" | "all-entities" => Ok(NodeScope::AllEntities),
            "active" | "active-nodes" => Ok(NodeScope::ActiveNodes),
            other => Err(format!("unknown node scope `{other}` (expected `all` or `active`)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub start: TimeInstant,
    pub end: TimeInstant,
}

#[derive(Clone, Debug)]
pub struct Footprint {
    pub window: Window,
    pub graph: StaticGraph,
}

#[derive(Clone, Debug)]
pub struct TimeVaryingGraph {
    directed: bool,
    entities: Vec<String>,
    entity_index: HashMap<String, EntityId>,
    relations: Vec<RelationRecord>,
    relation_index: HashMap<Relation, RelationId>,
    incident: Vec<Vec<RelationId>>,
    lifetime: Lifetime,
}

impl TimeVaryingGraph {
    pub fn builder(directed: bool) -> TvgBuilder {
        TvgBuilder::new(directed)
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn lifetime(&self) -> Lifetime {
        self.lifetime
    }

    pub fn entity_count(&self) -> usize {
        self.entities.len()
    }

    pub fn relation_count(&self) -> usize {
        self.relations.len()
    }

    pub fn entity(&self, name: &str) -> Option<EntityId> {
        self.entity_index.get(name).copied()
    }

    pub fn entity_name(&self, id: EntityId) -> &str {
        &self.entities[id.0 as usize]
    }

    pub fn entity_names(&self) -> &[String] {
        &self.entities
    }

    pub fn relations(&self) -> impl Iterator<Item = (RelationId, &RelationRecord)> {
        self.relations.iter().enumerate().map(|(i, r)| (RelationId(i as u32), r))
    }

    pub fn record(&self, id: RelationId) -> &RelationRecord {
        &self.relations[id.0 as usize]
    }

    /// Looks up a relation, canonicalising endpoint order for undirected graphs.
    pub fn relation_id(&self, relation: &Relation) -> Result<RelationId, TvgError> {
        let key = canonical(self.directed, relation.clone());
        self.relation_index.get(&key).copied().ok_or_else(|| TvgError::UnknownRelation(relation.to_string()))
    }

    /// Relations a journey may leave `node` through: outgoing ones for directed
    /// graphs, all incident ones otherwise.
    pub fn incident(&self, node: EntityId) -> &[RelationId] {
        &self.incident[node.0 as usize]
    }

    pub fn presence(&self, relation: &Relation, t: TimeInstant) -> Result<bool, TvgError> {
        let id = self.relation_id(relation)?;
        Ok(self.presence_by_id(id, t))
    }

    pub fn presence_by_id(&self, id: RelationId, t: TimeInstant) -> bool {
        self.record(id).presence.contains(t)
    }

    /// Static graph of every relation present at some instant of `[from, to)`.
    pub fn footprint(&self, from: TimeInstant, to: TimeInstant, scope: NodeScope) -> Result<StaticGraph, TvgError> {
        if from >= to {
            return Err(TvgError::InvalidWindow { from, to });
        }
        let horizon = self.lifetime.end;
        let weight_at = to.min(horizon).plus_days(-1);
        let present: Vec<&RelationRecord> =
            self.relations.iter().filter(|r| r.presence.meets(from, to, horizon)).collect();

        let mut builder = StaticGraph::builder(self.directed);
        let mut node_of: Vec<Option<NodeIdx>> = vec![None; self.entities.len()];
        match scope {
            NodeScope::AllEntities => {
                for (i, name) in self.entities.iter().enumerate() {
                    node_of[i] = Some(builder.add_node(name));
                }
            }
            NodeScope::ActiveNodes => {
                let mut active = vec![false; self.entities.len()];
                for r in &present {
                    active[r.relation.a.0 as usize] = true;
                    active[r.relation.b.0 as usize] = true;
                }
                for (i, name) in self.entities.iter().enumerate() {
                    if active[i] {
                        node_of[i] = Some(builder.add_node(name));
                    }
                }
            }
        }
        for r in present {
            let a = node_of[r.relation.a.0 as usize].expect("endpoint registered");
            let b = node_of[r.relation.b.0 as usize].expect("endpoint registered");
            let weight = r.strength.as_ref().map(|s| s.at(weight_at));
            builder.add_edge_with(a, b, weight);
        }
        Ok(builder.build())
    }

    pub fn lifetime_footprint(&self, scope: NodeScope) -> StaticGraph {
        self.footprint(self.lifetime.start, self.lifetime.end, scope).expect("lifetime is non-empty")
    }

    /// Footprints over consecutive windows `[cuts[k], cuts[k+1])`.
    pub fn footprint_sequence(&self, cuts: &[TimeInstant], scope: NodeScope) -> Result<Vec<Footprint>, TvgError> {
        validate_cuts(cuts)?;
        cuts.windows(2)
            .map(|w| {
                Ok(Footprint { window: Window { start: w[0], end: w[1] }, graph: self.footprint(w[0], w[1], scope)? })
            })
            .collect()
    }

    /// Footprints over `[cuts[0], cuts[k])` for every later cut: a growing graph.
    pub fn cumulative_footprints(&self, cuts: &[TimeInstant], scope: NodeScope) -> Result<Vec<Footprint>, TvgError> {
        validate_cuts(cuts)?;
        cuts[1..]
            .iter()
            .map(|&end| {
                Ok(Footprint { window: Window { start: cuts[0], end }, graph: self.footprint(cuts[0], end, scope)? })
            })
            .collect()
    }

    /// A copy holding only the relations accepted by `keep` and their endpoints.
    pub fn filter_relations<F>(&self, mut keep: F) -> TimeVaryingGraph
    where
        F: FnMut(&RelationRecord) -> bool,
    {
        let mut b = TvgBuilder::new(self.directed);
        let kept: Vec<&RelationRecord> = self.relations.iter().filter(|r| keep(r)).collect();
        let mut used = vec![false; self.entities.len()];
        for r in &kept {
            used[r.relation.a.0 as usize] = true;
            used[r.relation.b.0 as usize] = true;
        }
        let mut remap = vec![EntityId(u32::MAX); self.entities.len()];
        for (i, name) in self.entities.iter().enumerate() {
            if used[i] {
                remap[i] = b.add_entity(name);
            }
        }
        for r in kept {
            let id =
                b.relation(remap[r.relation.a.0 as usize], remap[r.relation.b.0 as usize], r.relation.label.clone());
            for iv in r.presence.intervals() {
                b.add_presence(id, *iv);
            }
            if let Some(s) = &r.strength {
                b.set_strength(id, s.clone());
            }
            for src in &r.sources {
                b.add_source(id, src.clone());
            }
        }
        b.build(self.lifetime).expect("subset of a valid graph is valid")
    }
}

fn validate_cuts(cuts: &[TimeInstant]) -> Result<(), TvgError> {
    if cuts.len() < 2 {
        return Err(TvgError::InvalidPartition(format!("need at least 2 cuts, got {}", cuts.len())));
    }
    if let Some(w) = cuts.windows(2).find(|w| w[0] >= w[1]) {
        return Err(TvgError::InvalidPartition(format!("cuts must be strictly increasing ({} then {})", w[0], w[1])));
    }
    Ok(())
}

fn canonical(directed: bool, r: Relation) -> Relation {
    if !directed && r.b < r.a {
        Relation { a: r.b, b: r.a, label: r.label }
    } else {
        r
    }
}

/// Single-writer construction of a [`TimeVaryingGraph`].
#[derive(Debug)]
pub struct TvgBuilder {
    directed: bool,
    entities: Vec<String>,
    entity_index: HashMap<String, EntityId>,
    relations: Vec<RelationRecord>,
    relation_index: HashMap<Relation, RelationId>,
}

impl TvgBuilder {
    pub fn new(directed: bool) -> Self {
        TvgBuilder {
            directed,
            entities: Vec::new(),
            entity_index: HashMap::new(),
            relations: Vec::new(),
            relation_index: HashMap::new(),
        }
    }

    pub fn add_entity(&mut self, name: &str) -> EntityId {
        if let Some(&id) = self.entity_index.get(name) {
            return id;
        }
        let id = EntityId(self.entities.len() as u32);
        self.entities.push(name.to_owned());
        self.entity_index.insert(name.to_owned(), id);
        id
    }

    /// Returns the id of relation `(a, b, label)`, creating it if needed.
    pub fn relation(&mut self, a: EntityId, b: EntityId, label: Label) -> RelationId {
        assert!(
            (a.0 as usize) < self.entities.len() && (b.0 as usize) < self.entities.len(),
            "relation endpoint not added to the builder"
        );
        let key = canonical(self.directed, Relation { a, b, label });
        if let Some(&id) = self.relation_index.get(&key) {
            return id;
        }
        let id = RelationId(self.relations.len() as u32);
        self.relations.push(RelationRecord {
            relation: key.clone(),
            presence: PresenceIntervalSet::new(),
            strength: None,
            sources: Vec::new(),
        });
        self.relation_index.insert(key, id);
        id
    }

    pub fn add_presence(&mut self, id: RelationId, interval: Interval) {
        self.relations[id.0 as usize].presence.insert(interval);
    }

    pub fn set_strength(&mut self, id: RelationId, series: StrengthSeries) {
        self.relations[id.0 as usize].strength = Some(series);
    }

    pub fn strength_mut(&mut self, id: RelationId) -> &mut StrengthSeries {
        self.relations[id.0 as usize].strength.get_or_insert_with(StrengthSeries::default)
    }

    pub fn add_source(&mut self, id: RelationId, source: String) {
        self.relations[id.0 as usize].sources.push(source);
    }

    /// Convenience: add entities by name and one presence interval.
    pub fn add_relation_named(&mut self, a: &str, b: &str, label: &str, interval: Interval) -> RelationId {
        let (a, b) = (self.add_entity(a), self.add_entity(b));
        let id = self.relation(a, b, Label::new(label));
        self.add_presence(id, interval);
        id
    }

    pub fn build(self, lifetime: Lifetime) -> Result<TimeVaryingGraph, TvgError> {
        for r in &self.relations {
            if r.presence.is_empty() {
                return Err(TvgError::InvalidLifetime(format!("relation {} has no presence", r.relation)));
            }
            for iv in r.presence.intervals() {
                let inside_end = match iv.end {
                    End::At(e) => e <= lifetime.end,
                    End::Infinity => true,
                };
                if iv.start < lifetime.start || iv.start >= lifetime.end || !inside_end {
                    return Err(TvgError::InvalidLifetime(format!(
                        "relation {} interval {} lies outside lifetime [{}, {})",
                        r.relation, iv, lifetime.start, lifetime.end
                    )));
                }
            }
        }
        let mut incident = vec![Vec::new(); self.entities.len()];
        for (i, r) in self.relations.iter().enumerate() {
            let id = RelationId(i as u32);
            incident[r.relation.a.0 as usize].push(id);
            if !self.directed && r.relation.a != r.relation.b {
                incident[r.relation.b.0 as usize].push(id);
            }
        }
        Ok(TimeVaryingGraph {
            directed: self.directed,
            entities: self.entities,
            entity_index: self.entity_index,
            relations: self.relations,
            relation_index: self.relation_index,
            incident,
            lifetime,
        })
    }
}
