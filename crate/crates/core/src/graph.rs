//! Static (di)graphs: footprints and directly built networks.

use std::collections::{BTreeMap, HashMap};

pub type NodeIdx = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub source: NodeIdx,
    pub target: NodeIdx,
    pub weight: Option<u64>,
}

/// A simple graph with named nodes and optional non-negative integer edge weights.
///
/// Self-loops are dropped at construction and parallel edges are merged, summing
/// their weights. Undirected edges are stored with `source < target`.
#[derive(Clone, Debug)]
pub struct StaticGraph {
    directed: bool,
    names: Vec<String>,
    index: HashMap<String, NodeIdx>,
    edges: Vec<Edge>,
    out_adj: Vec<Vec<NodeIdx>>,
    undirected_adj: Vec<Vec<NodeIdx>>,
    self_loops_dropped: usize,
}

impl PartialEq for StaticGraph {
    fn eq(&self, other: &Self) -> bool {
        self.directed == other.directed && self.names == other.names && self.edges == other.edges
    }
}

impl StaticGraph {
    pub fn builder(directed: bool) -> StaticGraphBuilder {
        StaticGraphBuilder::new(directed)
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn node_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn name(&self, node: NodeIdx) -> &str {
        &self.names[node as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn node(&self, name: &str) -> Option<NodeIdx> {
        self.index.get(name).copied()
    }

    pub fn self_loops_dropped(&self) -> usize {
        self.self_loops_dropped
    }

    /// Successors for directed graphs, neighbours otherwise.
    pub fn out_neighbors(&self, node: NodeIdx) -> &[NodeIdx] {
        &self.out_adj[node as usize]
    }

    /// Neighbours in the underlying undirected graph, sorted and deduplicated.
    pub fn neighbors(&self, node: NodeIdx) -> &[NodeIdx] {
        &self.undirected_adj[node as usize]
    }

    /// Degree in the underlying undirected simple graph.
    pub fn degree(&self, node: NodeIdx) -> usize {
        self.undirected_adj[node as usize].len()
    }

    /// Edge set as name pairs, `(source, target)` for directed graphs and
    /// lexicographically ordered pairs otherwise.
    pub fn edge_name_set(&self) -> std::collections::BTreeSet<(String, String)> {
        self.edges
            .iter()
            .map(|e| {
                let (a, b) = (self.name(e.source).to_owned(), self.name(e.target).to_owned());
                if !self.directed && b < a {
                    (b, a)
                } else {
                    (a, b)
                }
            })
            .collect()
    }

    /// Weakly connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<NodeIdx>> {
        let n = self.node_count();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start as NodeIdx];
            comp[start] = id;
            stack.push(start as NodeIdx);
            while let Some(u) = stack.pop() {
                for &v in self.neighbors(u) {
                    if comp[v as usize] == usize::MAX {
                        comp[v as usize] = id;
                        members.push(v);
                        stack.push(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// Subgraph induced by `nodes`, keeping their relative order.
    pub fn induced_subgraph(&self, nodes: &[NodeIdx]) -> StaticGraph {
        let mut keep = vec![None; self.node_count()];
        let mut b = StaticGraph::builder(self.directed);
        let mut sorted = nodes.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &n in &sorted {
            keep[n as usize] = Some(b.add_node(self.name(n)));
        }
        for e in &self.edges {
            if let (Some(s), Some(t)) = (keep[e.source as usize], keep[e.target as usize]) {
                b.add_edge_with(s, t, e.weight);
            }
        }
        b.build()
    }

    /// Largest weakly connected component (ties go to the one holding the smallest node).
    pub fn largest_component(&self) -> StaticGraph {
        let comps = self.components();
        let best = comps.iter().enumerate().max_by(|(ia, a), (ib, b)| a.len().cmp(&b.len()).then(ib.cmp(ia)));
        match best {
            Some((_, nodes)) => self.induced_subgraph(nodes),
            None => StaticGraph::builder(self.directed).build(),
        }
    }
}

#[derive(Debug)]
pub struct StaticGraphBuilder {
    directed: bool,
    names: Vec<String>,
    index: HashMap<String, NodeIdx>,
    edges: BTreeMap<(NodeIdx, NodeIdx), Option<u64>>,
    self_loops_dropped: usize,
}

impl StaticGraphBuilder {
    pub fn new(directed: bool) -> Self {
        StaticGraphBuilder {
            directed,
            names: Vec::new(),
            index: HashMap::new(),
            edges: BTreeMap::new(),
            self_loops_dropped: 0,
        }
    }

    /// Adds a node, returning the existing index when the name is already known.
    pub fn add_node(&mut self, name: &str) -> NodeIdx {
        if let Some(&idx) = self.index.get(name) {
            return idx;
        }
        let idx = self.names.len() as NodeIdx;
        self.names.push(name.to_owned());
        self.index.insert(name.to_owned(), idx);
        idx
    }

    pub fn add_edge(&mut self, a: NodeIdx, b: NodeIdx) {
        self.add_edge_with(a, b, None);
    }

    pub fn add_weighted_edge(&mut self, a: NodeIdx, b: NodeIdx, weight: u64) {
        self.add_edge_with(a, b, Some(weight));
    }

    pub fn add_edge_with(&mut self, a: NodeIdx, b: NodeIdx, weight: Option<u64>) {
        assert!(
            (a as usize) < self.names.len() && (b as usize) < self.names.len(),
            "edge endpoint not added to the builder"
        );
        if a == b {
            self.self_loops_dropped += 1;
            return;
        }
        let key = if self.directed || a < b { (a, b) } else { (b, a) };
        let slot = self.edges.entry(key).or_insert(None);
        *slot = match (*slot, weight) {
            (None, None) => None,
            (x, y) => Some(x.unwrap_or(0) + y.unwrap_or(0)),
        };
    }

    pub fn add_edge_by_name(&mut self, a: &str, b: &str) {
        let (a, b) = (self.add_node(a), self.add_node(b));
        self.add_edge(a, b);
    }

    pub fn node_count(&self) -> usize {
        self.names.len()
    }

    pub fn build(self) -> StaticGraph {
        let n = self.names.len();
        let mut out_adj = vec![Vec::new(); n];
        let mut undirected_adj = vec![Vec::new(); n];
        let edges: Vec<Edge> =
            self.edges.into_iter().map(|((source, target), weight)| Edge { source, target, weight }).collect();
        for e in &edges {
            out_adj[e.source as usize].push(e.target);
            if !self.directed {
                out_adj[e.target as usize].push(e.source);
            }
            undirected_adj[e.source as usize].push(e.target);
            undirected_adj[e.target as usize].push(e.source);
        }
        for adj in out_adj.iter_mut().chain(undirected_adj.iter_mut()) {
            adj.sort_unstable();
            adj.dedup();
        }
        StaticGraph {
            directed: self.directed,
            names: self.names,
            index: self.index,
            edges,
            out_adj,
            undirected_adj,
            self_loops_dropped: self.self_loops_dropped,
        }
    }
}

/// Builds a graph on nodes named `0..n` from index pairs.
pub fn from_index_edges(n: usize, directed: bool, edges: &[(usize, usize)]) -> StaticGraph {
    let mut b = StaticGraph::builder(directed);
    for i in 0..n {
        b.add_node(&i.to_string());
    }
    for &(u, v) in edges {
        b.add_edge(u as NodeIdx, v as NodeIdx);
    }
    b.build()
}
