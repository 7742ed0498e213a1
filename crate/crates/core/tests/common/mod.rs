//! Random instance generators and brute-force oracles shared by the test
//! targets. Oracles work from the raw generated data, never from library
//! algorithms.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::Rng;

use tvgraph::graph::StaticGraph;
use tvgraph::time::{Interval, TimeInstant};
use tvgraph::tvg::{Lifetime, NodeScope, TimeVaryingGraph};

/// `(a, b, intervals)` with a `None` interval end meaning unbounded.
pub type RawRelation = (usize, usize, Vec<(i64, Option<i64>)>);

/// Raw description of a random TVG over days `0..len`.
#[derive(Clone, Debug)]
pub struct RawTvg {
    pub directed: bool,
    pub nodes: usize,
    pub len: i64,
    pub relations: Vec<RawRelation>,
}

pub fn node_name(i: usize) -> String {
    format!("v{i}")
}

impl RawTvg {
    pub fn random<R: Rng>(rng: &mut R, max_nodes: usize, max_len: i64, max_relations: usize) -> Self {
        let nodes = rng.gen_range(1..=max_nodes);
        let len = rng.gen_range(1..=max_len);
        let directed = rng.gen_bool(0.3);
        let mut relations = Vec::new();
        if nodes >= 2 {
            for _ in 0..rng.gen_range(0..=max_relations) {
                let a = rng.gen_range(0..nodes);
                let mut b = rng.gen_range(0..nodes - 1);
                if b >= a {
                    b += 1;
                }
                let intervals = (0..rng.gen_range(1..=3))
                    .map(|_| {
                        let s = rng.gen_range(0..len);
                        let e = if rng.gen_bool(0.2) { None } else { Some(rng.gen_range(s + 1..=len)) };
                        (s, e)
                    })
                    .collect();
                relations.push((a, b, intervals));
            }
        }
        RawTvg { directed, nodes, len, relations }
    }

    pub fn build(&self) -> TimeVaryingGraph {
        let mut b = TimeVaryingGraph::builder(self.directed);
        let ids: Vec<_> = (0..self.nodes).map(|i| b.add_entity(&node_name(i))).collect();
        for (k, (x, y, intervals)) in self.relations.iter().enumerate() {
            let r = b.relation(ids[*x], ids[*y], tvgraph::tvg::Label::new(format!("l{}", k % 2)));
            for &(s, e) in intervals {
                let iv = match e {
                    Some(e) => Interval::new(TimeInstant(s), TimeInstant(e)).unwrap(),
                    None => Interval::from(TimeInstant(s)),
                };
                b.add_presence(r, iv);
            }
        }
        b.build(Lifetime::new(TimeInstant(0), TimeInstant(self.len)).unwrap()).unwrap()
    }

    /// Presence of relation `k` at day `t`, straight from the raw intervals.
    pub fn present(&self, k: usize, t: i64) -> bool {
        t >= 0 && t < self.len && self.relations[k].2.iter().any(|&(s, e)| t >= s && e.is_none_or(|e| t < e))
    }

    fn pair(&self, a: usize, b: usize) -> (String, String) {
        if self.directed || a < b {
            (node_name(a), node_name(b))
        } else {
            (node_name(b), node_name(a))
        }
    }

    /// Per-instant enumeration of the footprint over `[from, to)`.
    pub fn footprint_oracle(
        &self,
        from: i64,
        to: i64,
        scope: NodeScope,
    ) -> (BTreeSet<String>, BTreeSet<(String, String)>) {
        let mut edges = BTreeSet::new();
        let mut nodes = BTreeSet::new();
        for t in from..to {
            for (k, &(a, b, _)) in self.relations.iter().enumerate() {
                if self.present(k, t) {
                    edges.insert(self.pair(a, b));
                    nodes.insert(node_name(a));
                    nodes.insert(node_name(b));
                }
            }
        }
        if scope == NodeScope::AllEntities {
            nodes = (0..self.nodes).map(node_name).collect();
        }
        (nodes, edges)
    }

    /// Earliest instant `>= depart` at which `target` is reachable from
    /// `source`, by closing the reached set under the relations present at
    /// each instant in turn.
    pub fn earliest_arrival_oracle(&self, source: usize, target: usize, depart: i64) -> Option<i64> {
        if source == target {
            return Some(depart);
        }
        let mut reached = vec![false; self.nodes];
        reached[source] = true;
        for t in depart.max(0)..self.len {
            loop {
                let mut grew = false;
                for (k, &(a, b, _)) in self.relations.iter().enumerate() {
                    if !self.present(k, t) {
                        continue;
                    }
                    if reached[a] && !reached[b] {
                        reached[b] = true;
                        grew = true;
                    }
                    if !self.directed && reached[b] && !reached[a] {
                        reached[a] = true;
                        grew = true;
                    }
                }
                if !grew {
                    break;
                }
            }
            if reached[target] {
                return Some(t);
            }
        }
        None
    }
}

/// Node names and undirected-canonical edge names of a static graph.
pub fn graph_sets(g: &StaticGraph) -> (BTreeSet<String>, BTreeSet<(String, String)>) {
    let nodes = g.names().iter().cloned().collect();
    let edges =
        g.edge_name_set().into_iter().map(|(a, b)| if g.is_directed() || a <= b { (a, b) } else { (b, a) }).collect();
    (nodes, edges)
}

/// Random strictly increasing cuts inside `[0, len]`, at least two.
pub fn random_cuts<R: Rng>(rng: &mut R, len: i64) -> Vec<i64> {
    let mut all: Vec<i64> = (0..=len).collect();
    all.shuffle(rng);
    let k = rng.gen_range(2..=all.len().min(8));
    let mut cuts = all[..k].to_vec();
    cuts.sort_unstable();
    cuts
}

/// A plain graph as an index edge list, with self-loops and repeats possible.
#[derive(Clone, Debug)]
pub struct RawGraph {
    pub n: usize,
    pub directed: bool,
    pub edges: Vec<(usize, usize)>,
}

impl RawGraph {
    pub fn random<R: Rng>(rng: &mut R, max_nodes: usize) -> Self {
        let n = rng.gen_range(1..=max_nodes);
        let directed = rng.gen_bool(0.25);
        let p = rng.gen_range(0.05..0.7);
        let mut edges = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if (directed || a < b) && a != b && rng.gen_bool(p) {
                    edges.push((a, b));
                }
            }
        }
        if rng.gen_bool(0.2) && n > 0 {
            edges.push((0, 0));
        }
        edges.shuffle(rng);
        RawGraph { n, directed, edges }
    }

    pub fn build(&self) -> StaticGraph {
        tvgraph::graph::from_index_edges(self.n, self.directed, &self.edges)
    }

    /// Adjacency matrix without self-loops; symmetric when `symmetric`.
    pub fn matrix(&self, symmetric: bool) -> Vec<Vec<bool>> {
        let mut m = vec![vec![false; self.n]; self.n];
        for &(a, b) in &self.edges {
            if a != b {
                m[a][b] = true;
                if symmetric || !self.directed {
                    m[b][a] = true;
                }
            }
        }
        m
    }

    pub fn edge_count_oracle(&self) -> usize {
        let m = self.matrix(false);
        let directed_count = m.iter().flatten().filter(|&&x| x).count();
        if self.directed {
            directed_count
        } else {
            directed_count / 2
        }
    }

    pub fn undirected_edge_count_oracle(&self) -> usize {
        let m = self.matrix(true);
        m.iter().flatten().filter(|&&x| x).count() / 2
    }

    pub fn clustering_oracle(&self) -> Option<f64> {
        if self.n == 0 {
            return None;
        }
        let m = self.matrix(true);
        let mut total = 0.0;
        for i in 0..self.n {
            let nbrs: Vec<usize> = (0..self.n).filter(|&j| m[i][j]).collect();
            let k = nbrs.len();
            if k < 2 {
                continue;
            }
            let mut closed = 0usize;
            for x in 0..k {
                for y in x + 1..k {
                    if m[nbrs[x]][nbrs[y]] {
                        closed += 1;
                    }
                }
            }
            total += closed as f64 / (k * (k - 1) / 2) as f64;
        }
        Some(total / self.n as f64)
    }

    pub fn density_oracle(&self) -> Option<f64> {
        if self.n < 2 {
            return None;
        }
        let possible = (self.n * (self.n - 1)) as f64;
        let e = self.edge_count_oracle() as f64;
        Some(if self.directed { e / possible } else { 2.0 * e / possible })
    }

    /// Floyd-Warshall distances following edge direction.
    #[allow(clippy::needless_range_loop)]
    pub fn distances(&self) -> Vec<Vec<Option<usize>>> {
        let m = self.matrix(false);
        let mut d = vec![vec![None; self.n]; self.n];
        for i in 0..self.n {
            d[i][i] = Some(0);
            for j in 0..self.n {
                if m[i][j] {
                    d[i][j] = Some(1);
                }
            }
        }
        for k in 0..self.n {
            for i in 0..self.n {
                for j in 0..self.n {
                    if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                        if d[i][j].is_none_or(|c| a + b < c) {
                            d[i][j] = Some(a + b);
                        }
                    }
                }
            }
        }
        d
    }

    /// `(diameter, average path length)` over reachable ordered pairs.
    pub fn path_oracle(&self) -> Option<(usize, f64)> {
        let d = self.distances();
        let mut pairs = Vec::new();
        for (i, row) in d.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if let (true, Some(x)) = (i != j, x) {
                    pairs.push(*x);
                }
            }
        }
        if pairs.is_empty() {
            return None;
        }
        let max = *pairs.iter().max().unwrap();
        Some((max, pairs.iter().sum::<usize>() as f64 / pairs.len() as f64))
    }

    pub fn component_count_oracle(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        (0..self.n).filter(|&x| find(&mut parent, x) == x).count()
    }

    pub fn cyclomatic_oracle(&self) -> i64 {
        self.undirected_edge_count_oracle() as i64 - self.n as i64 + self.component_count_oracle() as i64
    }
}

/// A generated paper, kept alongside the canonical text it was written to.
#[derive(Clone, Debug)]
pub struct RawPaper {
    pub id: String,
    pub day: i64,
    pub authors: Vec<String>,
    pub refs: Vec<String>,
}

/// Random well-formed corpus: every paper dated and authored. References may
/// point at the paper itself or outside the corpus.
pub fn random_papers<R: Rng>(rng: &mut R, max_papers: usize, author_pool: usize) -> Vec<RawPaper> {
    let m = rng.gen_range(1..=max_papers);
    let pool: Vec<String> = (0..author_pool).map(|i| format!("Author {i}")).collect();
    let ids: Vec<String> = (0..m).map(|i| format!("p{i:03}")).collect();
    let mut papers = Vec::new();
    for id in &ids {
        let k = rng.gen_range(1..=4.min(author_pool));
        let authors: Vec<String> = pool.choose_multiple(rng, k).cloned().collect();
        let mut targets: Vec<String> = ids.iter().filter(|_| rng.gen_bool(0.2)).cloned().collect();
        if rng.gen_bool(0.1) {
            targets.push("outside".into());
        }
        targets.shuffle(rng);
        papers.push(RawPaper { id: id.clone(), day: rng.gen_range(0..1500), authors, refs: targets });
    }
    papers
}

pub fn day_string(day: i64) -> String {
    (TimeInstant::from_ymd(1995, 1, 1).unwrap().plus_days(day)).to_string()
}

pub fn canonical_text(papers: &[RawPaper]) -> String {
    let mut out = String::new();
    for p in papers {
        writeln!(out, "{}\t{}\t{}\t{}", p.id, day_string(p.day), p.authors.join(";"), p.refs.join(",")).unwrap();
    }
    out
}

/// Citations inside the corpus, excluding self-citations.
pub fn internal_citations(papers: &[RawPaper]) -> Vec<(&RawPaper, &RawPaper)> {
    let by_id: HashMap<&str, &RawPaper> = papers.iter().map(|p| (p.id.as_str(), p)).collect();
    let mut out = Vec::new();
    for p in papers {
        for r in &p.refs {
            if r != &p.id {
                if let Some(q) = by_id.get(r.as_str()) {
                    out.push((p, *q));
                }
            }
        }
    }
    out
}

/// Σ over cited papers of citations × C(|authors|, 2).
pub fn conservation_oracle(papers: &[RawPaper]) -> u64 {
    internal_citations(papers)
        .into_iter()
        .map(|(_, cited)| {
            let k = cited.authors.len() as u64;
            k * k.saturating_sub(1) / 2
        })
        .sum()
}

/// Final interaction strength per unordered author pair.
pub fn pair_strength_oracle(papers: &[RawPaper]) -> BTreeMap<(String, String), u64> {
    let mut out = BTreeMap::new();
    for p in papers {
        for (i, a) in p.authors.iter().enumerate() {
            for b in &p.authors[i + 1..] {
                let key = if a < b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
                out.entry(key).or_insert(0);
            }
        }
    }
    for (_, cited) in internal_citations(papers) {
        for (i, a) in cited.authors.iter().enumerate() {
            for b in &cited.authors[i + 1..] {
                let key = if a < b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
                *out.get_mut(&key).unwrap() += 1;
            }
        }
    }
    out
}
