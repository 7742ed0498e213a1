use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::{EntityId, RelationId, TimeVaryingGraph, TvgError};
use crate::time::TimeInstant;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JourneyStep {
    pub relation: RelationId,
    pub time: TimeInstant,
}

/// A time-respecting walk starting at `source`.
///
/// Every step crosses a relation at an instant where it is present, and step
/// times never decrease. Waiting at a node between steps is allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Journey {
    source: EntityId,
    steps: Vec<JourneyStep>,
    destination: EntityId,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct JourneyLengths {
    /// Number of hops.
    pub topological: usize,
    /// Arrival minus departure, in days.
    pub temporal: i64,
}

impl Journey {
    /// Validates `steps` against `tvg` and builds the journey.
    pub fn new(tvg: &TimeVaryingGraph, source: EntityId, steps: Vec<JourneyStep>) -> Result<Self, TvgError> {
        if source.0 as usize >= tvg.entity_count() {
            return Err(TvgError::UnknownEntity(format!("#{}", source.0)));
        }
        let mut at = source;
        let mut last_time: Option<TimeInstant> = None;
        for (i, step) in steps.iter().enumerate() {
            if step.relation.0 as usize >= tvg.relation_count() {
                return Err(TvgError::UnknownRelation(format!("#{}", step.relation.0)));
            }
            let rel = &tvg.record(step.relation).relation;
            let next = if tvg.is_directed() { (rel.a == at).then_some(rel.b) } else { rel.other(at) };
            let Some(next) = next else {
                return Err(TvgError::InvalidJourney(format!(
                    "step {i}: relation {rel} does not leave entity #{}",
                    at.0
                )));
            };
            if !tvg.presence_by_id(step.relation, step.time) {
                return Err(TvgError::InvalidJourney(format!("step {i}: relation {rel} absent at {}", step.time)));
            }
            if let Some(prev) = last_time {
                if step.time < prev {
                    return Err(TvgError::InvalidJourney(format!(
                        "step {i}: time {} precedes previous step at {prev}",
                        step.time
                    )));
                }
            }
            last_time = Some(step.time);
            at = next;
        }
        Ok(Journey { source, steps, destination: at })
    }

    pub fn source(&self) -> EntityId {
        self.source
    }

    pub fn destination(&self) -> EntityId {
        self.destination
    }

    pub fn steps(&self) -> &[JourneyStep] {
        &self.steps
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn departure(&self) -> Option<TimeInstant> {
        self.steps.first().map(|s| s.time)
    }

    pub fn arrival(&self) -> Option<TimeInstant> {
        self.steps.last().map(|s| s.time)
    }

    pub fn topological_length(&self) -> usize {
        self.steps.len()
    }
}

/// Hop count and end-to-end duration. Empty journeys have no departure and are rejected.
pub fn journey_lengths(journey: &Journey) -> Result<JourneyLengths, TvgError> {
    match (journey.departure(), journey.arrival()) {
        (Some(dep), Some(arr)) => {
            Ok(JourneyLengths { topological: journey.topological_length(), temporal: arr.days() - dep.days() })
        }
        _ => Err(TvgError::InvalidJourney("empty journey has no lengths".into())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EarliestArrival {
    pub journey: Journey,
    /// Time of the last step; `depart_after` itself for the empty journey.
    pub arrival: TimeInstant,
}

/// Journey from `source` to `target` departing at or after `depart_after` with
/// the earliest possible arrival, or `None` if the target is never reached
/// before the end of the lifetime.
///
/// When `source == target` the result is the empty journey arriving at
/// `depart_after`.
pub fn earliest_arrival_journey(
    tvg: &TimeVaryingGraph,
    source: EntityId,
    target: EntityId,
    depart_after: TimeInstant,
) -> Result<Option<EarliestArrival>, TvgError> {
    let n = tvg.entity_count();
    for e in [source, target] {
        if e.0 as usize >= n {
            return Err(TvgError::UnknownEntity(format!("#{}", e.0)));
        }
    }
    if source == target {
        return Ok(Some(EarliestArrival {
            journey: Journey { source, steps: Vec::new(), destination: target },
            arrival: depart_after,
        }));
    }

    let horizon = tvg.lifetime().end;
    let mut best: Vec<Option<TimeInstant>> = vec![None; n];
    let mut via: Vec<Option<(EntityId, JourneyStep)>> = vec![None; n];
    let mut settled = vec![false; n];
    let mut heap = BinaryHeap::new();
    best[source.0 as usize] = Some(depart_after);
    heap.push(Reverse((depart_after, source)));

    while let Some(Reverse((time, node))) = heap.pop() {
        if settled[node.0 as usize] {
            continue;
        }
        settled[node.0 as usize] = true;
        if node == target {
            break;
        }
        for &rid in tvg.incident(node) {
            let record = tvg.record(rid);
            let Some(next) = record.relation.other(node) else { continue };
            if settled[next.0 as usize] {
                continue;
            }
            let Some(cross) = record.presence.next_present(time, horizon) else { continue };
            let slot = &mut best[next.0 as usize];
            if slot.is_none_or(|b| cross < b) {
                *slot = Some(cross);
                via[next.0 as usize] = Some((node, JourneyStep { relation: rid, time: cross }));
                heap.push(Reverse((cross, next)));
            }
        }
    }

    let Some(arrival) = best[target.0 as usize] else { return Ok(None) };
    let mut steps = Vec::new();
    let mut at = target;
    while at != source {
        let (prev, step) = via[at.0 as usize].expect("reached nodes have a predecessor");
        steps.push(step);
        at = prev;
    }
    steps.reverse();
    let journey = Journey::new(tvg, source, steps)?;
    Ok(Some(EarliestArrival { journey, arrival }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::time::Interval;
    use crate::tvg::Lifetime;

    fn t(d: i64) -> TimeInstant {
        TimeInstant(d)
    }

    fn chain() -> (TimeVaryingGraph, Vec<RelationId>) {
        let mut b = TimeVaryingGraph::builder(false);
        let r1 = b.add_relation_named("a", "b", "x", Interval::new(t(2), t(3)).unwrap());
        let r2 = b.add_relation_named("b", "c", "x", Interval::new(t(5), t(6)).unwrap());
        let r3 = b.add_relation_named("c", "d", "x", Interval::from(t(9)));
        (b.build(Lifetime::new(t(0), t(20)).unwrap()).unwrap(), vec![r1, r2, r3])
    }

    #[test]
    fn lengths_of_constructed_journey() {
        let (g, r) = chain();
        let steps = vec![
            JourneyStep { relation: r[0], time: t(2) },
            JourneyStep { relation: r[1], time: t(5) },
            JourneyStep { relation: r[2], time: t(9) },
        ];
        let j = Journey::new(&g, g.entity("a").unwrap(), steps).unwrap();
        assert_eq!(journey_lengths(&j).unwrap(), JourneyLengths { topological: 3, temporal: 7 });
        assert_eq!(j.destination(), g.entity("d").unwrap());

        let single =
            Journey::new(&g, g.entity("d").unwrap(), vec![JourneyStep { relation: r[2], time: t(4 + 5) }]).unwrap();
        assert_eq!(journey_lengths(&single).unwrap(), JourneyLengths { topological: 1, temporal: 0 });
    }

    #[test]
    fn invalid_journeys_rejected() {
        let (g, r) = chain();
        let a = g.entity("a").unwrap();
        let absent = Journey::new(&g, a, vec![JourneyStep { relation: r[0], time: t(3) }]);
        assert!(matches!(absent, Err(TvgError::InvalidJourney(_))));
        let backwards = Journey::new(
            &g,
            g.entity("c").unwrap(),
            vec![JourneyStep { relation: r[2], time: t(10) }, JourneyStep { relation: r[2], time: t(9) }],
        );
        assert!(matches!(backwards, Err(TvgError::InvalidJourney(_))));
        let not_walk = Journey::new(&g, a, vec![JourneyStep { relation: r[1], time: t(5) }]);
        assert!(matches!(not_walk, Err(TvgError::InvalidJourney(_))));
        let empty = Journey::new(&g, a, vec![]).unwrap();
        assert!(journey_lengths(&empty).is_err());
    }

    #[test]
    fn earliest_arrival_follows_time() {
        let (g, _) = chain();
        let (a, d) = (g.entity("a").unwrap(), g.entity("d").unwrap());
        let found = earliest_arrival_journey(&g, a, d, t(0)).unwrap().unwrap();
        assert_eq!(found.arrival, t(9));
        assert_eq!(found.journey.topological_length(), 3);
        // a-b is gone after day 3
        assert!(earliest_arrival_journey(&g, a, d, t(5)).unwrap().is_none());
        let same = earliest_arrival_journey(&g, a, a, t(7)).unwrap().unwrap();
        assert_eq!(same.arrival, t(7));
        assert!(same.journey.is_empty());
    }

    #[test]
    fn expired_edge_is_unreachable() {
        let mut b = TimeVaryingGraph::builder(false);
        b.add_relation_named("a", "b", "x", Interval::new(t(3), t(4)).unwrap());
        let g = b.build(Lifetime::new(t(0), t(10)).unwrap()).unwrap();
        let (a, bb) = (g.entity("a").unwrap(), g.entity("b").unwrap());
        assert!(earliest_arrival_journey(&g, a, bb, t(5)).unwrap().is_none());
        assert!(matches!(earliest_arrival_journey(&g, a, EntityId(9), t(0)), Err(TvgError::UnknownEntity(_))));
    }

    #[test]
    fn directed_relations_are_one_way() {
        let mut b = TimeVaryingGraph::builder(true);
        b.add_relation_named("a", "b", "x", Interval::from(t(0)));
        let g = b.build(Lifetime::new(t(0), t(10)).unwrap()).unwrap();
        let (a, bb) = (g.entity("a").unwrap(), g.entity("b").unwrap());
        assert!(earliest_arrival_journey(&g, a, bb, t(0)).unwrap().is_some());
        assert!(earliest_arrival_journey(&g, bb, a, t(0)).unwrap().is_none());
    }
}
