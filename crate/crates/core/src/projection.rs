//! One-mode projections of a bipartite actor-resource graph.
//!
//! Two vertices on the chosen side are linked when they share at least one
//! neighbor on the other side. The edge weight is the number of shared
//! neighbors; bipartite co-occurrence weights play no part.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::graph::{BipartiteGraph, Part, UnipartiteGraph, VertexId};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ProjectionSide {
    Actors,
    Resources,
}

impl ProjectionSide {
    pub fn part(self) -> Part {
        match self {
            ProjectionSide::Actors => Part::Actor,
            ProjectionSide::Resources => Part::Resource,
        }
    }
}

/// Projects `g` onto `side`. Every vertex of that side is kept, isolated or not.
pub fn project(g: &BipartiteGraph, side: ProjectionSide) -> Result<UnipartiteGraph> {
    let kept = side.part();
    let other = match kept {
        Part::Actor => Part::Resource,
        Part::Resource => Part::Actor,
    };
    // each vertex on the other side contributes a clique over its neighbors
    let mut shared: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for hub in 0..g.part_labels(other).len() {
        let members = g.neighbors(other, VertexId(hub));
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                *shared.entry((u, v)).or_insert(0) += 1;
            }
        }
    }
    UnipartiteGraph::new(
        g.part_labels(kept).to_vec(),
        shared
            .into_iter()
            .map(|((u, v), w)| (VertexId(u), VertexId(v), w)),
    )
}

/// Actor projection and resource projection, in that order.
pub fn project_both(g: &BipartiteGraph) -> Result<(UnipartiteGraph, UnipartiteGraph)> {
    Ok((
        project(g, ProjectionSide::Actors)?,
        project(g, ProjectionSide::Resources)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_bipartite;

    #[test]
    fn two_shared_resources_give_weight_two() {
        let g = build_bipartite([("X", "P"), ("X", "Q"), ("Y", "P"), ("Y", "Q")]).unwrap();
        let a = project(&g, ProjectionSide::Actors).unwrap();
        assert_eq!(a.edge_count(), 1);
        assert_eq!(a.edges()[0].weight, 2);
    }

    #[test]
    fn single_edge_projects_to_isolated_vertices() {
        let g = build_bipartite([("M1", "P1")]).unwrap();
        let (a, r) = project_both(&g).unwrap();
        assert_eq!((a.vertex_count(), a.edge_count()), (1, 0));
        assert_eq!((r.vertex_count(), r.edge_count()), (1, 0));
    }

    #[test]
    fn star_projects_to_complete_resource_graph() {
        let k = 5;
        let records: Vec<_> = (0..k)
            .map(|i| ("hub".to_string(), format!("r{i}")))
            .collect();
        let g = build_bipartite(records).unwrap();
        let (a, r) = project_both(&g).unwrap();
        assert_eq!(a.vertex_count(), 1);
        assert_eq!(r.vertex_count(), k);
        assert_eq!(r.edge_count(), k * (k - 1) / 2);
        assert!(r.edges().iter().all(|e| e.weight == 1));
    }

    #[test]
    fn co_occurrence_weight_does_not_leak_into_projection() {
        let g = build_bipartite([("X", "P"), ("X", "P"), ("X", "P"), ("Y", "P")]).unwrap();
        let a = project(&g, ProjectionSide::Actors).unwrap();
        assert_eq!(a.edges()[0].weight, 1);
    }
}
