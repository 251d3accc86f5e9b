//! Graph files: GraphML, DOT, JSON and CSV edge lists.
//!
//! Output is byte-deterministic: vertices are listed by label (actors before
//! resources on equal labels) and numbered by that position; edges follow in
//! endpoint order. Line endings are `\n`.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::{BipartiteEdge, BipartiteGraph, Part, UnipartiteGraph, VertexId};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    GraphMl,
    Dot,
    Json,
    CsvEdgeList,
}

/// Either kind of graph, as read from a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Graph {
    Bipartite(BipartiteGraph),
    Unipartite(UnipartiteGraph),
}

impl Graph {
    pub fn as_ref(&self) -> GraphRef<'_> {
        match self {
            Graph::Bipartite(g) => GraphRef::Bipartite(g),
            Graph::Unipartite(g) => GraphRef::Unipartite(g),
        }
    }
}

#[derive(Copy, Clone, Debug)]
pub enum GraphRef<'a> {
    Bipartite(&'a BipartiteGraph),
    Unipartite(&'a UnipartiteGraph),
}

impl<'a> From<&'a BipartiteGraph> for GraphRef<'a> {
    fn from(g: &'a BipartiteGraph) -> Self {
        GraphRef::Bipartite(g)
    }
}

impl<'a> From<&'a UnipartiteGraph> for GraphRef<'a> {
    fn from(g: &'a UnipartiteGraph) -> Self {
        GraphRef::Unipartite(g)
    }
}

impl<'a> From<&'a Graph> for GraphRef<'a> {
    fn from(g: &'a Graph) -> Self {
        g.as_ref()
    }
}

/// Vertices and edges in output order.
struct Layout<'a> {
    bipartite: bool,
    vertices: Vec<(&'a str, Option<Part>)>,
    edges: Vec<(usize, usize, u64)>,
}

impl<'a> Layout<'a> {
    fn new(g: GraphRef<'a>) -> Self {
        match g {
            GraphRef::Unipartite(g) => {
                let mut order: Vec<usize> = (0..g.vertex_count()).collect();
                order.sort_by(|&a, &b| g.labels()[a].cmp(&g.labels()[b]));
                let position = inverse(&order);
                let mut edges: Vec<_> = g
                    .edges()
                    .iter()
                    .map(|e| {
                        let (a, b) = (position[e.source.index()], position[e.target.index()]);
                        (a.min(b), a.max(b), e.weight)
                    })
                    .collect();
                edges.sort_unstable();
                Layout {
                    bipartite: false,
                    vertices: order
                        .iter()
                        .map(|&i| (g.labels()[i].as_str(), None))
                        .collect(),
                    edges,
                }
            }
            GraphRef::Bipartite(g) => {
                let mut all: Vec<(&str, Part, usize)> = g
                    .actors()
                    .iter()
                    .enumerate()
                    .map(|(i, l)| (l.as_str(), Part::Actor, i))
                    .chain(
                        g.resources()
                            .iter()
                            .enumerate()
                            .map(|(i, l)| (l.as_str(), Part::Resource, i)),
                    )
                    .collect();
                all.sort();
                let mut actor_pos = vec![0; g.actors().len()];
                let mut resource_pos = vec![0; g.resources().len()];
                for (pos, &(_, part, i)) in all.iter().enumerate() {
                    match part {
                        Part::Actor => actor_pos[i] = pos,
                        Part::Resource => resource_pos[i] = pos,
                    }
                }
                let mut edges: Vec<_> = g
                    .edges()
                    .iter()
                    .map(|e| {
                        (
                            actor_pos[e.actor.index()],
                            resource_pos[e.resource.index()],
                            e.weight,
                        )
                    })
                    .collect();
                edges.sort_unstable();
                Layout {
                    bipartite: true,
                    vertices: all.iter().map(|&(l, p, _)| (l, Some(p))).collect(),
                    edges,
                }
            }
        }
    }
}

fn inverse(order: &[usize]) -> Vec<usize> {
    let mut position = vec![0; order.len()];
    for (pos, &i) in order.iter().enumerate() {
        position[i] = pos;
    }
    position
}

#[derive(Serialize)]
struct JsonVertex<'a> {
    id: usize,
    label: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    part: Option<&'static str>,
}

#[derive(Serialize)]
struct JsonEdge {
    source: usize,
    target: usize,
    weight: u64,
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    kind: &'static str,
    vertices: Vec<JsonVertex<'a>>,
    edges: Vec<JsonEdge>,
}

pub fn write_graph<'a>(g: impl Into<GraphRef<'a>>, format: GraphFormat) -> Vec<u8> {
    let layout = Layout::new(g.into());
    let text = match format {
        GraphFormat::Json => to_json(&layout),
        GraphFormat::CsvEdgeList => to_csv(&layout),
        GraphFormat::GraphMl => to_graphml(&layout),
        GraphFormat::Dot => to_dot(&layout),
    };
    text.into_bytes()
}

fn to_json(layout: &Layout<'_>) -> String {
    let doc = JsonGraph {
        kind: if layout.bipartite {
            "bipartite"
        } else {
            "unipartite"
        },
        vertices: layout
            .vertices
            .iter()
            .enumerate()
            .map(|(id, &(label, part))| JsonVertex {
                id,
                label,
                part: part.map(Part::as_str),
            })
            .collect(),
        edges: layout
            .edges
            .iter()
            .map(|&(source, target, weight)| JsonEdge {
                source,
                target,
                weight,
            })
            .collect(),
    };
    let mut out = serde_json::to_string(&doc).expect("graph serializes");
    out.push('\n');
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) || s.starts_with(' ') || s.ends_with(' ') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn to_csv(layout: &Layout<'_>) -> String {
    let mut out = String::from(if layout.bipartite {
        "actor,resource,weight\n"
    } else {
        "source,target,weight\n"
    });
    for &(a, b, w) in &layout.edges {
        let _ = writeln!(
            out,
            "{},{},{}",
            csv_field(layout.vertices[a].0),
            csv_field(layout.vertices[b].0),
            w
        );
    }
    out
}

fn xml_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

fn to_graphml(layout: &Layout<'_>) -> String {
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str("<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\" xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\" xsi:schemaLocation=\"http://graphml.graphdrawing.org/xmlns http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd\">\n");
    out.push_str("  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n");
    if layout.bipartite {
        out.push_str("  <key id=\"part\" for=\"node\" attr.name=\"part\" attr.type=\"string\"/>\n");
    }
    out.push_str("  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n");
    out.push_str("  <graph id=\"G\" edgedefault=\"undirected\">\n");
    for (id, &(label, part)) in layout.vertices.iter().enumerate() {
        let _ = write!(
            out,
            "    <node id=\"n{id}\"><data key=\"label\">{}</data>",
            xml_escape(label)
        );
        if let Some(part) = part {
            let _ = write!(out, "<data key=\"part\">{}</data>", part.as_str());
        }
        out.push_str("</node>\n");
    }
    for &(a, b, w) in &layout.edges {
        let _ = writeln!(
            out,
            "    <edge source=\"n{a}\" target=\"n{b}\"><data key=\"weight\">{w}</data></edge>"
        );
    }
    out.push_str("  </graph>\n</graphml>\n");
    out
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\")
        .replace('"', "\\\"")
        .replace('\n', "\\n")
}

fn to_dot(layout: &Layout<'_>) -> String {
    let mut out = String::from("graph G {\n");
    for (id, &(label, part)) in layout.vertices.iter().enumerate() {
        match part {
            Some(part) => {
                let _ = writeln!(
                    out,
                    "  n{id} [label=\"{}\", part=\"{}\"];",
                    dot_escape(label),
                    part.as_str()
                );
            }
            None => {
                let _ = writeln!(out, "  n{id} [label=\"{}\"];", dot_escape(label));
            }
        }
    }
    for &(a, b, w) in &layout.edges {
        let _ = writeln!(out, "  n{a} -- n{b} [weight={w}];");
    }
    out.push_str("}\n");
    out
}

/// Reads a JSON or CSV edge-list graph. GraphML and DOT are write-only.
pub fn read_graph(bytes: &[u8], format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::Json => from_json(bytes),
        GraphFormat::CsvEdgeList => from_csv(bytes),
        GraphFormat::GraphMl | GraphFormat::Dot => Err(Error::InvalidArgument(
            "only JSON and CSV edge lists can be read".to_string(),
        )),
    }
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema {
        path: path.into(),
        message: message.into(),
    }
}

fn from_json(bytes: &[u8]) -> Result<Graph> {
    let doc: Value = serde_json::from_slice(bytes).map_err(|e| {
        schema(
            "",
            format!(
                "invalid JSON at line {} column {}: {e}",
                e.line(),
                e.column()
            ),
        )
    })?;
    let root = doc
        .as_object()
        .ok_or_else(|| schema("", "expected an object"))?;
    let bipartite = match root.get("kind").and_then(Value::as_str) {
        Some("bipartite") => true,
        Some("unipartite") => false,
        Some(other) => return Err(schema("/kind", format!("unknown kind {other:?}"))),
        None => return Err(schema("/kind", "missing string")),
    };
    let vertices = root
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| schema("/vertices", "missing array"))?;
    let edges = root
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| schema("/edges", "missing array"))?;

    let n = vertices.len();
    let mut slots: Vec<Option<(String, Option<Part>)>> = vec![None; n];
    for (i, v) in vertices.iter().enumerate() {
        let at = format!("/vertices/{i}");
        let obj = v
            .as_object()
            .ok_or_else(|| schema(at.clone(), "expected an object"))?;
        let id = obj
            .get("id")
            .and_then(Value::as_u64)
            .ok_or_else(|| schema(format!("{at}/id"), "expected a non-negative integer"))?
            as usize;
        if id >= n {
            return Err(schema(
                format!("{at}/id"),
                format!("id {id} out of range 0..{n}"),
            ));
        }
        if slots[id].is_some() {
            return Err(schema(format!("{at}/id"), format!("duplicate id {id}")));
        }
        let label = obj
            .get("label")
            .and_then(Value::as_str)
            .filter(|s| !s.is_empty())
            .ok_or_else(|| schema(format!("{at}/label"), "expected a non-empty string"))?;
        let part = match (bipartite, obj.get("part")) {
            (true, Some(Value::String(p))) if p == "actor" => Some(Part::Actor),
            (true, Some(Value::String(p))) if p == "resource" => Some(Part::Resource),
            (true, _) => {
                return Err(schema(
                    format!("{at}/part"),
                    "expected \"actor\" or \"resource\"",
                ))
            }
            (false, None) => None,
            (false, Some(_)) => {
                return Err(schema(
                    format!("{at}/part"),
                    "not allowed in a unipartite graph",
                ))
            }
        };
        slots[id] = Some((label.to_string(), part));
    }
    let slots: Vec<(String, Option<Part>)> = slots
        .into_iter()
        .map(|s| s.expect("ids are dense"))
        .collect();

    let mut triples = Vec::with_capacity(edges.len());
    for (i, e) in edges.iter().enumerate() {
        let at = format!("/edges/{i}");
        let obj = e
            .as_object()
            .ok_or_else(|| schema(at.clone(), "expected an object"))?;
        let endpoint = |key: &str| -> Result<usize> {
            let id = obj
                .get(key)
                .and_then(Value::as_u64)
                .ok_or_else(|| schema(format!("{at}/{key}"), "expected a vertex id"))?
                as usize;
            if id >= n {
                return Err(schema(
                    format!("{at}/{key}"),
                    format!("unknown vertex id {id}"),
                ));
            }
            Ok(id)
        };
        let (source, target) = (endpoint("source")?, endpoint("target")?);
        let weight = obj
            .get("weight")
            .and_then(Value::as_u64)
            .filter(|&w| w >= 1)
            .ok_or_else(|| schema(format!("{at}/weight"), "expected an integer >= 1"))?;
        if source == target {
            return Err(schema(at, "self-loop rejected"));
        }
        triples.push((source, target, weight, at));
    }

    if bipartite {
        let mut local = vec![0usize; n];
        let (mut actors, mut resources) = (Vec::new(), Vec::new());
        for (id, (label, part)) in slots.into_iter().enumerate() {
            match part.expect("bipartite vertices carry a part") {
                Part::Actor => {
                    local[id] = actors.len();
                    actors.push(label);
                }
                Part::Resource => {
                    local[id] = resources.len();
                    resources.push(label);
                }
            }
        }
        let is_actor = |id: usize, actors_len: &HashSet<usize>| actors_len.contains(&id);
        let actor_ids: HashSet<usize> = vertices
            .iter()
            .filter(|v| v.get("part").and_then(Value::as_str) == Some("actor"))
            .filter_map(|v| v.get("id").and_then(Value::as_u64).map(|x| x as usize))
            .collect();
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(triples.len());
        for (s, t, w, at) in triples {
            let (a, r) = match (is_actor(s, &actor_ids), is_actor(t, &actor_ids)) {
                (true, false) => (s, t),
                (false, true) => (t, s),
                _ => return Err(schema(at, "edge must join an actor and a resource")),
            };
            if !seen.insert((a, r)) {
                return Err(schema(at, "parallel edge rejected"));
            }
            out.push(BipartiteEdge {
                actor: VertexId(local[a]),
                resource: VertexId(local[r]),
                weight: w,
            });
        }
        Ok(Graph::Bipartite(BipartiteGraph::new(
            actors, resources, out,
        )?))
    } else {
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(triples.len());
        for (s, t, w, at) in triples {
            if !seen.insert((s.min(t), s.max(t))) {
                return Err(schema(at, "parallel edge rejected"));
            }
            out.push((VertexId(s), VertexId(t), w));
        }
        let labels = slots.into_iter().map(|(l, _)| l).collect();
        Ok(Graph::Unipartite(UnipartiteGraph::new(labels, out)?))
    }
}

fn from_csv(bytes: &[u8]) -> Result<Graph> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(false)
        .from_reader(bytes);
    let header: Vec<String> = reader
        .headers()?
        .iter()
        .map(|h| h.trim().to_string())
        .collect();
    let bipartite = match header.iter().map(String::as_str).collect::<Vec<_>>()[..] {
        ["source", "target", "weight"] => false,
        ["actor", "resource", "weight"] => true,
        _ => {
            return Err(Error::MalformedRow {
                line: 1,
                message: "expected header source,target,weight or actor,resource,weight"
                    .to_string(),
            })
        }
    };

    let mut first: Vec<String> = Vec::new();
    let mut first_index: HashMap<String, usize> = HashMap::new();
    let mut second: Vec<String> = Vec::new();
    let mut second_index: HashMap<String, usize> = HashMap::new();
    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    for row in reader.records() {
        let row = row.map_err(|e| match e.position() {
            Some(p) => Error::MalformedRow {
                line: p.line(),
                message: e.to_string(),
            },
            None => Error::Csv(e),
        })?;
        let line = row.position().map_or(0, |p| p.line());
        let bad = |message: String| Error::MalformedRow { line, message };
        let (a, b) = (&row[0], &row[1]);
        if a.is_empty() || b.is_empty() {
            return Err(bad("empty label".to_string()));
        }
        let weight: u64 = row[2]
            .trim()
            .parse()
            .ok()
            .filter(|&w| w >= 1)
            .ok_or_else(|| bad(format!("weight {:?} is not an integer >= 1", &row[2])))?;
        let intern = |label: &str, names: &mut Vec<String>, index: &mut HashMap<String, usize>| {
            *index.entry(label.to_string()).or_insert_with(|| {
                names.push(label.to_string());
                names.len() - 1
            })
        };
        let u = intern(a, &mut first, &mut first_index);
        let v = if bipartite {
            intern(b, &mut second, &mut second_index)
        } else {
            if a == b {
                return Err(bad(format!("self-loop rejected ({a})")));
            }
            intern(b, &mut first, &mut first_index)
        };
        let key = if bipartite {
            (u, v)
        } else {
            (u.min(v), u.max(v))
        };
        if !seen.insert(key) {
            return Err(bad(format!("parallel edge rejected ({a}, {b})")));
        }
        edges.push((u, v, weight));
    }
    if bipartite {
        let edges = edges.into_iter().map(|(a, r, weight)| BipartiteEdge {
            actor: VertexId(a),
            resource: VertexId(r),
            weight,
        });
        Ok(Graph::Bipartite(BipartiteGraph::new(first, second, edges)?))
    } else {
        let edges = edges
            .into_iter()
            .map(|(u, v, w)| (VertexId(u), VertexId(v), w));
        Ok(Graph::Unipartite(UnipartiteGraph::new(first, edges)?))
    }
}
