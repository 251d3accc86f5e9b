//! Shared inputs for the criterion benches.

use hidden_ties::io::{batch_to_bipartite, parse_csv, IngestConfig};
use hidden_ties::synth::{listings_csv, synthetic_listings, SynthConfig};
use hidden_ties::{project, BipartiteGraph, ProjectionSide, UnipartiteGraph};

/// Default synthetic corpus scaled by `factor` vendors per market.
pub fn corpus(factor: usize) -> BipartiteGraph {
    let base = SynthConfig::default();
    let config = SynthConfig {
        market_sizes: base.market_sizes.iter().map(|&s| s * factor).collect(),
        products_per_market: base.products_per_market * factor,
        ..base
    };
    let csv = listings_csv(&synthetic_listings(&config));
    let batch = parse_csv(
        csv.as_bytes(),
        &IngestConfig::new("Vendor", "Products").split_on(','),
    )
    .expect("synthetic corpus parses");
    batch_to_bipartite(&batch).expect("synthetic corpus is non-empty")
}

/// Actor projection of [`corpus`].
pub fn projected(factor: usize) -> UnipartiteGraph {
    project(&corpus(factor), ProjectionSide::Actors).expect("projection of a non-empty corpus")
}
