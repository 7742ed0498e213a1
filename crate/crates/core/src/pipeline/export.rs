//! GraphML, DOT and edge-list writers, plus a GraphML reader for files
//! produced here.

use std::io::{BufRead, Write};
use std::str::FromStr;

use quick_xml::escape::escape;
use quick_xml::events::Event;
use quick_xml::Reader;

use super::PipelineError;
use crate::graph::StaticGraph;
use crate::time::TimeInstant;
use crate::tvg::TimeVaryingGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    GraphMl,
    Dot,
    EdgeList,
}

impl ExportFormat {
    pub fn extension(self) -> &'static str {
        match self {
            ExportFormat::GraphMl => "graphml",
            ExportFormat::Dot => "dot",
            ExportFormat::EdgeList => "edgelist",
        }
    }
}

impl FromStr for ExportFormat {
    type Err = PipelineError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "graphml" => Ok(ExportFormat::GraphMl),
            "dot" => Ok(ExportFormat::Dot),
            "edgelist" => Ok(ExportFormat::EdgeList),
            other => Err(PipelineError::Config(format!(
                "unknown export format `{other}` (expected graphml, dot or edgelist)"
            ))),
        }
    }
}

struct ExportEdge<'a> {
    source: &'a str,
    target: &'a str,
    weight: Option<u64>,
    first_seen: Option<TimeInstant>,
}

struct ExportView<'a> {
    directed: bool,
    nodes: Vec<&'a str>,
    edges: Vec<ExportEdge<'a>>,
}

impl<'a> ExportView<'a> {
    fn sorted(mut self) -> Self {
        for e in &mut self.edges {
            if !self.directed && e.target < e.source {
                std::mem::swap(&mut e.source, &mut e.target);
            }
        }
        self.edges.sort_by(|a, b| (a.source, a.target).cmp(&(b.source, b.target)));
        self
    }

    fn weighted(&self) -> bool {
        self.edges.iter().any(|e| e.weight.is_some())
    }

    fn temporal(&self) -> bool {
        self.edges.iter().any(|e| e.first_seen.is_some())
    }
}

fn static_view(g: &StaticGraph) -> ExportView<'_> {
    ExportView {
        directed: g.is_directed(),
        nodes: g.names().iter().map(String::as_str).collect(),
        edges: g
            .edges()
            .iter()
            .map(|e| ExportEdge {
                source: g.name(e.source),
                target: g.name(e.target),
                weight: e.weight,
                first_seen: None,
            })
            .collect(),
    }
    .sorted()
}

fn tvg_view(tvg: &TimeVaryingGraph) -> ExportView<'_> {
    ExportView {
        directed: tvg.is_directed(),
        nodes: tvg.entity_names().iter().map(String::as_str).collect(),
        edges: tvg
            .relations()
            .filter(|(_, r)| r.relation.a != r.relation.b)
            .map(|(_, r)| ExportEdge {
                source: tvg.entity_name(r.relation.a),
                target: tvg.entity_name(r.relation.b),
                weight: r.strength.as_ref().map(|s| s.final_value()),
                first_seen: r.presence.first_start(),
            })
            .collect(),
    }
    .sorted()
}

pub fn export_graph<W: Write>(g: &StaticGraph, format: ExportFormat, out: W) -> std::io::Result<()> {
    write_view(&static_view(g), format, out)
}

/// Exports every relation once, with its first presence date as `first_seen`
/// and its final strength, if any, as `weight`.
pub fn export_tvg<W: Write>(tvg: &TimeVaryingGraph, format: ExportFormat, out: W) -> std::io::Result<()> {
    write_view(&tvg_view(tvg), format, out)
}

fn write_view<W: Write>(view: &ExportView<'_>, format: ExportFormat, mut out: W) -> std::io::Result<()> {
    match format {
        ExportFormat::EdgeList => write_edgelist(view, &mut out),
        ExportFormat::Dot => write_dot(view, &mut out),
        ExportFormat::GraphMl => write_graphml(view, &mut out),
    }
}

fn write_edgelist<W: Write>(view: &ExportView<'_>, out: &mut W) -> std::io::Result<()> {
    let (weighted, temporal) = (view.weighted(), view.temporal());
    for e in &view.edges {
        write!(out, "{}\t{}", e.source, e.target)?;
        if weighted {
            write!(out, "\t{}", e.weight.unwrap_or(0))?;
        }
        if temporal {
            match e.first_seen {
                Some(t) => write!(out, "\t{t}")?,
                None => write!(out, "\t")?,
            }
        }
        writeln!(out)?;
    }
    Ok(())
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn write_dot<W: Write>(view: &ExportView<'_>, out: &mut W) -> std::io::Result<()> {
    let (kind, arrow) = if view.directed { ("digraph", "->") } else { ("graph", "--") };
    writeln!(out, "{kind} G {{")?;
    for n in &view.nodes {
        writeln!(out, "  {};", dot_quote(n))?;
    }
    for e in &view.edges {
        let mut attrs = Vec::new();
        if let Some(w) = e.weight {
            attrs.push(format!("weight={w}"));
        }
        if let Some(t) = e.first_seen {
            attrs.push(format!("first_seen=\"{t}\""));
        }
        let attrs = if attrs.is_empty() { String::new() } else { format!(" [{}]", attrs.join(", ")) };
        writeln!(out, "  {} {arrow} {}{attrs};", dot_quote(e.source), dot_quote(e.target))?;
    }
    writeln!(out, "}}")
}

fn write_graphml<W: Write>(view: &ExportView<'_>, out: &mut W) -> std::io::Result<()> {
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#)?;
    writeln!(out, r#"<graphml xmlns="http://graphml.graphdrawing.org/xmlns">"#)?;
    writeln!(out, r#"  <key id="label" for="node" attr.name="label" attr.type="string"/>"#)?;
    writeln!(out, r#"  <key id="weight" for="edge" attr.name="weight" attr.type="long"/>"#)?;
    writeln!(out, r#"  <key id="first_seen" for="edge" attr.name="first_seen" attr.type="string"/>"#)?;
    let edgedefault = if view.directed { "directed" } else { "undirected" };
    writeln!(out, r#"  <graph id="G" edgedefault="{edgedefault}">"#)?;
    let mut id_of = std::collections::HashMap::new();
    for (i, n) in view.nodes.iter().enumerate() {
        id_of.insert(*n, i);
        writeln!(out, r#"    <node id="n{i}"><data key="label">{}</data></node>"#, escape(n))?;
    }
    for (i, e) in view.edges.iter().enumerate() {
        write!(out, r#"    <edge id="e{i}" source="n{}" target="n{}">"#, id_of[e.source], id_of[e.target])?;
        if let Some(w) = e.weight {
            write!(out, r#"<data key="weight">{w}</data>"#)?;
        }
        if let Some(t) = e.first_seen {
            write!(out, r#"<data key="first_seen">{t}</data>"#)?;
        }
        writeln!(out, "</edge>")?;
    }
    writeln!(out, "  </graph>")?;
    writeln!(out, "</graphml>")
}

/// Reads GraphML with `label` node data and optional `weight` edge data.
pub fn read_graphml<R: BufRead>(input: R) -> Result<StaticGraph, PipelineError> {
    let xml_err = |e: &dyn std::fmt::Display| PipelineError::Xml(e.to_string());
    let mut reader = Reader::from_reader(input);
    let mut buf = Vec::new();
    let mut directed = false;
    let mut nodes: Vec<(String, String)> = Vec::new();
    let mut edges: Vec<(String, String, Option<u64>)> = Vec::new();
    let mut data_key: Option<String> = None;
    let mut in_node: Option<usize> = None;
    let mut in_edge: Option<usize> = None;
    loop {
        let event = reader.read_event_into(&mut buf).map_err(|e| xml_err(&e))?;
        match event {
            Event::Start(ref tag) | Event::Empty(ref tag) => {
                let attr = |name: &[u8]| -> Result<Option<String>, PipelineError> {
                    for a in tag.attributes() {
                        let a = a.map_err(|e| xml_err(&e))?;
                        if a.key.as_ref() == name {
                            return Ok(Some(a.unescape_value().map_err(|e| xml_err(&e))?.into_owned()));
                        }
                    }
                    Ok(None)
                };
                let is_start = matches!(event, Event::Start(_));
                match tag.name().as_ref() {
                    b"graph" => directed = attr(b"edgedefault")?.as_deref() == Some("directed"),
                    b"node" => {
                        let id = attr(b"id")?.ok_or_else(|| PipelineError::Xml("node without id".into()))?;
                        nodes.push((id.clone(), id));
                        in_node = is_start.then_some(nodes.len() - 1);
                    }
                    b"edge" => {
                        let s = attr(b"source")?.ok_or_else(|| PipelineError::Xml("edge without source".into()))?;
                        let t = attr(b"target")?.ok_or_else(|| PipelineError::Xml("edge without target".into()))?;
                        edges.push((s, t, None));
                        in_edge = is_start.then_some(edges.len() - 1);
                    }
                    b"data" => data_key = attr(b"key")?,
                    _ => {}
                }
            }
            Event::Text(text) => {
                let value = text.unescape().map_err(|e| xml_err(&e))?.into_owned();
                match (data_key.as_deref(), in_node, in_edge) {
                    (Some("label"), Some(i), _) => nodes[i].1 = value,
                    (Some("weight"), _, Some(i)) => {
                        edges[i].2 = Some(
                            value.trim().parse().map_err(|_| PipelineError::Xml(format!("bad weight `{value}`")))?,
                        )
                    }
                    _ => {}
                }
            }
            Event::End(tag) => match tag.name().as_ref() {
                b"node" => in_node = None,
                b"edge" => in_edge = None,
                b"data" => data_key = None,
                _ => {}
            },
            Event::Eof => break,
            _ => {}
        }
        buf.clear();
    }
    let mut b = StaticGraph::builder(directed);
    let mut index = std::collections::HashMap::new();
    for (id, label) in &nodes {
        index.insert(id.clone(), b.add_node(label));
    }
    for (s, t, w) in edges {
        let lookup =
            |id: &str| index.get(id).copied().ok_or_else(|| PipelineError::Xml(format!("unknown node `{id}`")));
        b.add_edge_with(lookup(&s)?, lookup(&t)?, w);
    }
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::from_index_edges;
    use crate::time::Interval;
    use crate::tvg::{Lifetime, StrengthSeries};

    #[test]
    fn triangle_edgelist() {
        let mut b = StaticGraph::builder(false);
        for n in ["c", "a", "b"] {
            b.add_node(n);
        }
        b.add_edge_by_name("c", "a");
        b.add_edge_by_name("b", "c");
        b.add_edge_by_name("a", "b");
        let mut out = Vec::new();
        export_graph(&b.build(), ExportFormat::EdgeList, &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "a\tb\na\tc\nb\tc\n");
    }

    #[test]
    fn graphml_roundtrip_weighted() {
        let mut b = StaticGraph::builder(false);
        let x = b.add_node("A. <Author> & co");
        let y = b.add_node("B. \"Other\"");
        let z = b.add_node("C");
        b.add_weighted_edge(x, y, 151);
        b.add_weighted_edge(y, z, 150);
        let g = b.build();
        let mut out = Vec::new();
        export_graph(&g, ExportFormat::GraphMl, &mut out).unwrap();
        let back = read_graphml(out.as_slice()).unwrap();
        assert_eq!(back.names(), g.names());
        let weights = |g: &StaticGraph| {
            g.edges()
                .iter()
                .map(|e| (g.name(e.source).to_owned(), g.name(e.target).to_owned(), e.weight))
                .collect::<std::collections::BTreeSet<_>>()
        };
        assert_eq!(weights(&back), weights(&g));
    }

    #[test]
    fn dot_is_directed_when_graph_is() {
        let mut out = Vec::new();
        export_graph(&from_index_edges(2, true, &[(0, 1)]), ExportFormat::Dot, &mut out).unwrap();
        let s = String::from_utf8(out).unwrap();
        assert!(s.starts_with("digraph G {"));
        assert!(s.contains("\"0\" -> \"1\";"));
    }

    #[test]
    fn tvg_export_carries_first_seen() {
        let t = TimeInstant::parse_iso;
        let mut b = TimeVaryingGraph::builder(false);
        let id = b.add_relation_named("A", "B", "coauthor", Interval::from(t("1995-06-01").unwrap()));
        b.set_strength(id, StrengthSeries::from_steps(vec![t("1996-01-01").unwrap()]));
        b.add_relation_named("B", "C", "coauthor", Interval::from(t("1997-02-03").unwrap()));
        let g = b.build(Lifetime::new(t("1995-01-01").unwrap(), t("1999-01-01").unwrap()).unwrap()).unwrap();
        let mut out = Vec::new();
        export_tvg(&g, ExportFormat::EdgeList, &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "A\tB\t1\t1995-06-01\nB\tC\t0\t1997-02-03\n");
        let mut xml = Vec::new();
        export_tvg(&g, ExportFormat::GraphMl, &mut xml).unwrap();
        let xml = String::from_utf8(xml).unwrap();
        assert_eq!(xml.matches("<data key=\"first_seen\">").count(), 2);
        assert!(xml.contains("<data key=\"first_seen\">1997-02-03</data>"));
    }

    #[test]
    fn unknown_format() {
        assert!("gexf".parse::<ExportFormat>().is_err());
    }
}
