//! Hidden-tie analysis of actor-resource networks.
//!
//! Records pairing actors with resources become a weighted bipartite graph;
//! its one-mode projection links actors that share a resource. The projection
//! is then measured ([`metrics`]), partitioned ([`communities`]) and written
//! out ([`io`]).
//!
//! ```
//! use hidden_ties::{build_bipartite, project, ProjectionSide, metrics};
//!
//! let g = build_bipartite([("a", "p"), ("b", "p"), ("b", "q"), ("c", "q")]).unwrap();
//! let actors = project(&g, ProjectionSide::Actors).unwrap();
//! assert_eq!(actors.edge_count(), 2);
//! let between = metrics::betweenness(&actors, metrics::Normalization::Raw);
//! assert_eq!(between, vec![0.0, 1.0, 0.0]);
//! ```

pub mod communities;
pub mod error;
pub mod graph;
pub mod io;
pub mod metrics;
mod parallel;
pub mod projection;
pub mod synth;

pub use communities::{Algorithm, CliqueReport, Partition};
pub use error::{Error, Result};
pub use graph::{
    build_bipartite, connected_components, ego_network, induced_subgraph, is_connected,
    largest_component, BipartiteEdge, BipartiteGraph, ComponentDecomposition, Edge, EgoNetwork,
    EgoRadius, Part, UnipartiteGraph, VertexId,
};
pub use metrics::{MetricsReport, NetworkAggregates, Normalization, VertexMetrics};
pub use projection::{project, project_both, ProjectionSide};
