mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{node_name, RawTvg};
use tvgraph::time::{Interval, TimeInstant};
use tvgraph::tvg::{earliest_arrival_journey, journey_lengths, Journey, JourneyStep, Lifetime, TimeVaryingGraph};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn earliest_arrival_matches_time_expanded_search(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut raw = RawTvg::random(&mut rng, 8, 30, 14);
        raw.nodes = raw.nodes.max(2);
        let tvg = raw.build();
        let depart = rng.gen_range(0..raw.len);
        for s in 0..raw.nodes {
            for t in 0..raw.nodes {
                let (src, dst) = (tvg.entity(&node_name(s)).unwrap(), tvg.entity(&node_name(t)).unwrap());
                let found = earliest_arrival_journey(&tvg, src, dst, TimeInstant(depart)).unwrap();
                let expected = raw.earliest_arrival_oracle(s, t, depart);
                prop_assert_eq!(found.as_ref().map(|f| f.arrival.0), expected);
                if let Some(f) = found {
                    prop_assert_eq!(f.journey.destination(), dst);
                    prop_assert!(f.journey.departure().is_none_or(|d| d.0 >= depart));
                    // Re-validating the returned walk must succeed.
                    prop_assert!(Journey::new(&tvg, src, f.journey.steps().to_vec()).is_ok());
                }
            }
        }
    }
}

fn line() -> TimeVaryingGraph {
    let mut b = TimeVaryingGraph::builder(false);
    b.add_relation_named("a", "b", "x", Interval::new(TimeInstant(2), TimeInstant(4)).unwrap());
    b.add_relation_named("b", "c", "x", Interval::new(TimeInstant(7), TimeInstant(9)).unwrap());
    b.add_relation_named("c", "d", "x", Interval::from(TimeInstant(7)));
    b.build(Lifetime::new(TimeInstant(0), TimeInstant(12)).unwrap()).unwrap()
}

fn steps(tvg: &TimeVaryingGraph, hops: &[(&str, &str, i64)]) -> Vec<JourneyStep> {
    hops.iter()
        .map(|&(a, b, t)| {
            let id = tvg
                .relations()
                .find(|(_, r)| {
                    let (x, y) = (tvg.entity_name(r.relation.a), tvg.entity_name(r.relation.b));
                    (x, y) == (a, b) || (x, y) == (b, a)
                })
                .unwrap()
                .0;
            JourneyStep { relation: id, time: TimeInstant(t) }
        })
        .collect()
}

#[test]
fn lengths_are_hops_and_arrival_minus_departure() {
    let tvg = line();
    let a = tvg.entity("a").unwrap();
    let j = Journey::new(&tvg, a, steps(&tvg, &[("a", "b", 3), ("b", "c", 7), ("c", "d", 7)])).unwrap();
    let l = journey_lengths(&j).unwrap();
    assert_eq!((l.topological, l.temporal), (3, 4));
    let single = Journey::new(&tvg, a, steps(&tvg, &[("a", "b", 2)])).unwrap();
    assert_eq!(journey_lengths(&single).unwrap().temporal, 0);
}

#[test]
fn invalid_journeys_are_rejected() {
    let tvg = line();
    let a = tvg.entity("a").unwrap();
    // relation absent at that instant
    assert!(Journey::new(&tvg, a, steps(&tvg, &[("a", "b", 5)])).is_err());
    // time goes backwards
    assert!(Journey::new(&tvg, a, steps(&tvg, &[("a", "b", 3), ("b", "c", 7), ("c", "d", 6)])).is_err());
    // not a walk from the source
    assert!(Journey::new(&tvg, a, steps(&tvg, &[("b", "c", 7)])).is_err());
    let empty = Journey::new(&tvg, a, vec![]).unwrap();
    assert!(journey_lengths(&empty).is_err());
}

#[test]
fn waiting_is_required_to_reach_the_far_end() {
    let tvg = line();
    let (a, d) = (tvg.entity("a").unwrap(), tvg.entity("d").unwrap());
    let best = earliest_arrival_journey(&tvg, a, d, TimeInstant(0)).unwrap().unwrap();
    assert_eq!(best.arrival, TimeInstant(7));
    assert_eq!(best.journey.topological_length(), 3);
    assert!(earliest_arrival_journey(&tvg, a, d, TimeInstant(4)).unwrap().is_none());
}
