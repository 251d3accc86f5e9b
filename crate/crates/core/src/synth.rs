//! Seeded synthetic vendor-listing corpora for scale tests and benches.
//!
//! Vendors are grouped into markets; each vendor lists a few of its market's
//! products and occasionally one from another market, so the actor
//! projection has dense blocks joined by sparse bridges.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug, PartialEq)]
pub struct SynthConfig {
    pub seed: u64,
    /// Vendors per market.
    pub market_sizes: Vec<usize>,
    pub products_per_market: usize,
    /// Listings (rows) per vendor, inclusive range.
    pub listings: (usize, usize),
    /// Products per listing, inclusive range.
    pub products_per_listing: (usize, usize),
    /// Chance that a listing adds one product from another market.
    pub crossover: f64,
    /// Chance that a listing is echoed under a placeholder vendor, which
    /// ingestion must drop.
    pub placeholder_rate: f64,
}

impl Default for SynthConfig {
    /// About 100 vendors whose projection has roughly 950 edges.
    fn default() -> Self {
        SynthConfig {
            seed: 0x5eed,
            market_sizes: vec![35, 26, 24, 15],
            products_per_market: 9,
            listings: (1, 2),
            products_per_listing: (1, 3),
            crossover: 0.06,
            placeholder_rate: 0.05,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Listing {
    pub vendor: String,
    pub products: Vec<String>,
    pub date: String,
}

pub fn synthetic_listings(config: &SynthConfig) -> Vec<Listing> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let markets = config.market_sizes.len();
    let product = |market: usize, i: usize| format!("M{market}-P{i:02}");
    let mut out = Vec::new();
    let mut vendor_no = 0;
    for (market, &size) in config.market_sizes.iter().enumerate() {
        for _ in 0..size {
            vendor_no += 1;
            let vendor = format!("1_Vendor{vendor_no:03}");
            let listings = rng.gen_range(config.listings.0..=config.listings.1);
            for day in 0..listings {
                let k = rng
                    .gen_range(config.products_per_listing.0..=config.products_per_listing.1)
                    .min(config.products_per_market);
                let mut picks: Vec<usize> = (0..config.products_per_market).collect();
                picks.shuffle(&mut rng);
                let mut products: Vec<String> =
                    picks[..k].iter().map(|&i| product(market, i)).collect();
                if markets > 1 && rng.gen_bool(config.crossover) {
                    let other = (market + rng.gen_range(1..markets)) % markets;
                    products.push(product(other, rng.gen_range(0..config.products_per_market)));
                }
                let date = format!("2015-{:02}-{:02}", 1 + vendor_no % 12, 1 + day);
                if rng.gen_bool(config.placeholder_rate) {
                    out.push(Listing {
                        vendor: "Unknown".to_string(),
                        products: products.clone(),
                        date: date.clone(),
                    });
                }
                out.push(Listing {
                    vendor: vendor.clone(),
                    products,
                    date,
                });
            }
        }
    }
    out
}

/// `Vendor,Products,Date` rows, products comma-joined inside one quoted field.
pub fn listings_csv(listings: &[Listing]) -> String {
    let mut out = String::from("Vendor,Products,Date\n");
    for l in listings {
        let _ = writeln!(out, "{},\"{}\",{}", l.vendor, l.products.join(", "), l.date);
    }
    out
}
