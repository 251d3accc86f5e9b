//! Graph representations shared by every analysis.
//!
//! Vertices are addressed by dense ids `0..N`; labels only matter at the
//! I/O boundary. Both graph types are immutable once built and validate
//! their invariants in the constructor.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Dense vertex index, unique within one graph (or one part of a bipartite graph).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl From<usize> for VertexId {
    fn from(i: usize) -> Self {
        VertexId(i)
    }
}

/// Undirected edge with `source < target`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub source: VertexId,
    pub target: VertexId,
    pub weight: u64,
}

fn index_labels(labels: &[String]) -> Result<HashMap<String, VertexId>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, label) in labels.iter().enumerate() {
        if label.is_empty() {
            return Err(Error::EmptyLabel);
        }
        if index.insert(label.clone(), VertexId(i)).is_some() {
            return Err(Error::DuplicateLabel(label.clone()));
        }
    }
    Ok(index)
}

/// Undirected simple graph with positive integer edge weights.
#[derive(Clone, Debug)]
pub struct UnipartiteGraph {
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
}

impl PartialEq for UnipartiteGraph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.edges == other.edges
    }
}

impl Eq for UnipartiteGraph {}

impl UnipartiteGraph {
    /// Builds a graph from vertex labels and `(u, v, weight)` triples.
    ///
    /// Rejects self-loops, parallel edges (in either orientation), zero
    /// weights, unknown ids and duplicate or empty labels.
    pub fn new<I>(labels: Vec<String>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId, u64)>,
    {
        let index = index_labels(&labels)?;
        let n = labels.len();
        let mut out = Vec::new();
        for (u, v, weight) in edges {
            for x in [u, v] {
                if x.0 >= n {
                    return Err(Error::UnknownVertex(x.to_string()));
                }
            }
            if u == v {
                return Err(Error::SelfLoop(labels[u.0].clone()));
            }
            if weight == 0 {
                return Err(Error::ZeroWeight(format!(
                    "{}-{}",
                    labels[u.0], labels[v.0]
                )));
            }
            let (source, target) = if u < v { (u, v) } else { (v, u) };
            out.push(Edge {
                source,
                target,
                weight,
            });
        }
        out.sort_unstable();
        for pair in out.windows(2) {
            if (pair[0].source, pair[0].target) == (pair[1].source, pair[1].target) {
                return Err(Error::ParallelEdge(format!(
                    "{}-{}",
                    labels[pair[0].source.0], labels[pair[0].target.0]
                )));
            }
        }
        let mut adjacency = vec![Vec::new(); n];
        for e in &out {
            adjacency[e.source.0].push(e.target.0);
            adjacency[e.target.0].push(e.source.0);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(UnipartiteGraph {
            labels,
            index,
            edges: out,
            adjacency,
        })
    }

    /// Builds a graph from labeled weight-1 edges; vertices are numbered in
    /// order of first appearance.
    pub fn from_labeled_edges<S: AsRef<str>>(edges: &[(S, S)]) -> Result<Self> {
        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut id_of = |s: &str, labels: &mut Vec<String>| -> usize {
            *index.entry(s.to_string()).or_insert_with(|| {
                labels.push(s.to_string());
                labels.len() - 1
            })
        };
        let mut triples = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let u = id_of(a.as_ref(), &mut labels);
            let v = id_of(b.as_ref(), &mut labels);
            triples.push((VertexId(u), VertexId(v), 1));
        }
        UnipartiteGraph::new(labels, triples)
    }

    /// Graph with `labels` as vertices and no edges.
    pub fn edgeless(labels: Vec<String>) -> Result<Self> {
        UnipartiteGraph::new(labels, std::iter::empty())
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.labels.len()).map(VertexId)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.0]
    }

    pub fn vertex(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    /// Edges sorted by `(source, target)`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted neighbor indices of `v`.
    pub fn neighbors(&self, v: VertexId) -> &[usize] {
        &self.adjacency[v.0]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v.0].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u != v && self.adjacency[u.0].binary_search(&v.0).is_ok()
    }

    pub fn edge_weight(&self, u: VertexId, v: VertexId) -> Option<u64> {
        let (source, target) = if u < v { (u, v) } else { (v, u) };
        self.edges
            .binary_search_by(|e| (e.source, e.target).cmp(&(source, target)))
            .ok()
            .map(|i| self.edges[i].weight)
    }

    pub(crate) fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.0 < self.labels.len() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v.to_string()))
        }
    }
}

/// Which part of a bipartite graph a vertex belongs to.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    Actor,
    Resource,
}

impl Part {
    pub fn as_str(self) -> &'static str {
        match self {
            Part::Actor => "actor",
            Part::Resource => "resource",
        }
    }
}

/// Actor-resource edge; `weight` is the co-occurrence count.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BipartiteEdge {
    pub actor: VertexId,
    pub resource: VertexId,
    pub weight: u64,
}

/// Two-part graph: actors on one side, resources on the other, edges only across.
///
/// Actor and resource ids are separate namespaces, as are their labels.
#[derive(Clone, Debug)]
pub struct BipartiteGraph {
    actors: Vec<String>,
    resources: Vec<String>,
    actor_index: HashMap<String, VertexId>,
    resource_index: HashMap<String, VertexId>,
    edges: Vec<BipartiteEdge>,
    actor_adjacency: Vec<Vec<usize>>,
    resource_adjacency: Vec<Vec<usize>>,
}

impl PartialEq for BipartiteGraph {
    fn eq(&self, other: &Self) -> bool {
        self.actors == other.actors
            && self.resources == other.resources
            && self.edges == other.edges
    }
}

impl Eq for BipartiteGraph {}

impl BipartiteGraph {
    pub fn new<I>(actors: Vec<String>, resources: Vec<String>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = BipartiteEdge>,
    {
        let actor_index = index_labels(&actors)?;
        let resource_index = index_labels(&resources)?;
        let mut out: Vec<BipartiteEdge> = edges.into_iter().collect();
        for e in &out {
            if e.actor.0 >= actors.len() {
                return Err(Error::UnknownVertex(format!("actor {}", e.actor)));
            }
            if e.resource.0 >= resources.len() {
                return Err(Error::UnknownVertex(format!("resource {}", e.resource)));
            }
            if e.weight == 0 {
                return Err(Error::ZeroWeight(format!(
                    "{}-{}",
                    actors[e.actor.0], resources[e.resource.0]
                )));
            }
        }
        out.sort_unstable();
        for pair in out.windows(2) {
            if (pair[0].actor, pair[0].resource) == (pair[1].actor, pair[1].resource) {
                return Err(Error::ParallelEdge(format!(
                    "{}-{}",
                    actors[pair[0].actor.0], resources[pair[0].resource.0]
                )));
            }
        }
        let mut actor_adjacency = vec![Vec::new(); actors.len()];
        let mut resource_adjacency = vec![Vec::new(); resources.len()];
        for e in &out {
            actor_adjacency[e.actor.0].push(e.resource.0);
            resource_adjacency[e.resource.0].push(e.actor.0);
        }
        for list in resource_adjacency.iter_mut() {
            list.sort_unstable();
        }
        Ok(BipartiteGraph {
            actors,
            resources,
            actor_index,
            resource_index,
            edges: out,
            actor_adjacency,
            resource_adjacency,
        })
    }

    pub fn actors(&self) -> &[String] {
        &self.actors
    }

    pub fn resources(&self) -> &[String] {
        &self.resources
    }

    pub fn part_labels(&self, part: Part) -> &[String] {
        match part {
            Part::Actor => &self.actors,
            Part::Resource => &self.resources,
        }
    }

    pub fn vertex(&self, part: Part, label: &str) -> Option<VertexId> {
        match part {
            Part::Actor => self.actor_index.get(label).copied(),
            Part::Resource => self.resource_index.get(label).copied(),
        }
    }

    /// Edges sorted by `(actor, resource)`.
    pub fn edges(&self) -> &[BipartiteEdge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted ids in the opposite part adjacent to `v`.
    pub fn neighbors(&self, part: Part, v: VertexId) -> &[usize] {
        match part {
            Part::Actor => &self.actor_adjacency[v.0],
            Part::Resource => &self.resource_adjacency[v.0],
        }
    }

    /// Sum of all co-occurrence weights.
    pub fn total_weight(&self) -> u64 {
        self.edges.iter().map(|e| e.weight).sum()
    }
}

/// Builds a bipartite graph from `(actor, resource)` records.
///
/// Labels enter each part in order of first appearance; repeated pairs fold
/// into the edge weight.
pub fn build_bipartite<I, A, R>(records: I) -> Result<BipartiteGraph>
where
    I: IntoIterator<Item = (A, R)>,
    A: AsRef<str>,
    R: AsRef<str>,
{
    let mut actors = Vec::new();
    let mut resources = Vec::new();
    let mut actor_index: HashMap<String, usize> = HashMap::new();
    let mut resource_index: HashMap<String, usize> = HashMap::new();
    let mut weights: HashMap<(usize, usize), u64> = HashMap::new();
    let mut any = false;
    for (actor, resource) in records {
        let (actor, resource) = (actor.as_ref(), resource.as_ref());
        if actor.is_empty() || resource.is_empty() {
            return Err(Error::EmptyLabel);
        }
        any = true;
        let a = *actor_index.entry(actor.to_string()).or_insert_with(|| {
            actors.push(actor.to_string());
            actors.len() - 1
        });
        let r = *resource_index
            .entry(resource.to_string())
            .or_insert_with(|| {
                resources.push(resource.to_string());
                resources.len() - 1
            });
        *weights.entry((a, r)).or_insert(0) += 1;
    }
    if !any {
        return Err(Error::EmptyRecordSet);
    }
    let edges = weights.into_iter().map(|((a, r), weight)| BipartiteEdge {
        actor: VertexId(a),
        resource: VertexId(r),
        weight,
    });
    BipartiteGraph::new(actors, resources, edges)
}

/// Partition of the vertex set into connected components.
///
/// Component 0 is the largest; equal sizes are ordered by smallest member id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub assignments: Vec<usize>,
    pub sizes: Vec<usize>,
}

impl ComponentDecomposition {
    pub fn count(&self) -> usize {
        self.sizes.len()
    }

    /// Members of component `c` in increasing id order.
    pub fn members(&self, c: usize) -> Vec<VertexId> {
        self.assignments
            .iter()
            .enumerate()
            .filter(|&(_, &a)| a == c)
            .map(|(i, _)| VertexId(i))
            .collect()
    }
}

pub(crate) fn component_labels(adjacency: &[Vec<usize>]) -> Vec<usize> {
    let n = adjacency.len();
    let mut raw = vec![usize::MAX; n];
    let mut next = 0;
    let mut queue = VecDeque::new();
    for s in 0..n {
        if raw[s] != usize::MAX {
            continue;
        }
        raw[s] = next;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &w in &adjacency[v] {
                if raw[w] == usize::MAX {
                    raw[w] = next;
                    queue.push_back(w);
                }
            }
        }
        next += 1;
    }
    raw
}

pub fn connected_components(g: &UnipartiteGraph) -> ComponentDecomposition {
    // BFS from increasing start ids numbers components by smallest member.
    let raw = component_labels(g.adjacency());
    let count = raw.iter().copied().max().map_or(0, |m| m + 1);
    let mut sizes = vec![0usize; count];
    for &c in &raw {
        sizes[c] += 1;
    }
    let mut order: Vec<usize> = (0..count).collect();
    order.sort_by(|&a, &b| sizes[b].cmp(&sizes[a]).then(a.cmp(&b)));
    let mut rank = vec![0usize; count];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    ComponentDecomposition {
        assignments: raw.iter().map(|&c| rank[c]).collect(),
        sizes: order.iter().map(|&c| sizes[c]).collect(),
    }
}

pub fn is_connected(g: &UnipartiteGraph) -> bool {
    g.vertex_count() <= 1 || connected_components(g).count() == 1
}

/// Subgraph induced by `keep`; ids are re-densified in increasing order and
/// labels and weights are preserved.
pub fn induced_subgraph<I>(g: &UnipartiteGraph, keep: I) -> Result<UnipartiteGraph>
where
    I: IntoIterator<Item = VertexId>,
{
    let keep: BTreeSet<VertexId> = keep.into_iter().collect();
    for &v in &keep {
        g.check_vertex(v)?;
    }
    let mut remap = vec![usize::MAX; g.vertex_count()];
    let mut labels = Vec::with_capacity(keep.len());
    for (new, &v) in keep.iter().enumerate() {
        remap[v.0] = new;
        labels.push(g.labels[v.0].clone());
    }
    let edges: Vec<_> = g
        .edges
        .iter()
        .filter(|e| remap[e.source.0] != usize::MAX && remap[e.target.0] != usize::MAX)
        .map(|e| {
            (
                VertexId(remap[e.source.0]),
                VertexId(remap[e.target.0]),
                e.weight,
            )
        })
        .collect();
    UnipartiteGraph::new(labels, edges)
}

/// Subgraph induced by the largest connected component.
pub fn largest_component(g: &UnipartiteGraph) -> Result<UnipartiteGraph> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let components = connected_components(g);
    induced_subgraph(g, components.members(0))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum EgoRadius {
    /// Ego, its neighbors, and only the ego's own edges.
    One,
    /// Ego, its neighbors, and every host edge among them.
    OnePointFive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EgoNetwork {
    /// Ego id in the host graph.
    pub ego: VertexId,
    pub radius: EgoRadius,
    pub subgraph: UnipartiteGraph,
}

impl EgoNetwork {
    /// Ego id inside `subgraph`.
    pub fn ego_in_subgraph(&self, host: &UnipartiteGraph) -> VertexId {
        self.subgraph
            .vertex(host.label(self.ego))
            .expect("ego is always part of its own network")
    }
}

pub fn ego_network(g: &UnipartiteGraph, v: VertexId, radius: EgoRadius) -> Result<EgoNetwork> {
    g.check_vertex(v)?;
    let members = std::iter::once(v).chain(g.neighbors(v).iter().map(|&w| VertexId(w)));
    let induced = induced_subgraph(g, members)?;
    let subgraph = match radius {
        EgoRadius::OnePointFive => induced,
        EgoRadius::One => {
            let ego = induced.vertex(g.label(v)).expect("ego retained");
            let star: Vec<_> = induced
                .edges()
                .iter()
                .filter(|e| e.source == ego || e.target == ego)
                .map(|e| (e.source, e.target, e.weight))
                .collect();
            UnipartiteGraph::new(induced.labels().to_vec(), star)?
        }
    };
    Ok(EgoNetwork {
        ego: v,
        radius,
        subgraph,
    })
}
