//! Earliest-arrival journeys over a relay that only exists at certain times.

use std::error::Error;

use tvgraph::time::{Interval, TimeInstant};
use tvgraph::tvg::{earliest_arrival_journey, journey_lengths, Lifetime, TimeVaryingGraph};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let t = TimeInstant;
    let mut b = TimeVaryingGraph::builder(false);
    // a-b is up on days 0..3, b-c only on days 10..12, a-c directly on day 30.
    b.add_relation_named("a", "b", "link", Interval::new(t(0), t(3)).unwrap());
    b.add_relation_named("b", "c", "link", Interval::new(t(10), t(12)).unwrap());
    b.add_relation_named("a", "c", "link", Interval::new(t(30), t(31)).unwrap());
    let tvg = b.build(Lifetime::new(t(0), t(40))?)?;
    let (a, c) = (tvg.entity("a").unwrap(), tvg.entity("c").unwrap());

    for depart in [t(0), t(5), t(31)] {
        match earliest_arrival_journey(&tvg, a, c, depart)? {
            Some(found) => {
                let lengths = journey_lengths(&found.journey)?;
                let hops: Vec<String> = found
                    .journey
                    .steps()
                    .iter()
                    .map(|s| {
                        let r = &tvg.record(s.relation).relation;
                        format!("{}-{}@{}", tvg.entity_name(r.a), tvg.entity_name(r.b), s.time.0)
                    })
                    .collect();
                println!(
                    "depart>={:>2}: arrive day {} via {:?} (hops {}, span {} days)",
                    depart.0, found.arrival.0, hops, lengths.topological, lengths.temporal
                );
            }
            None => println!("depart>={:>2}: c is unreachable", depart.0),
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
