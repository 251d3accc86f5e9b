//! Acceptance suite. Each criterion prints one `PASS` or `FAIL` line; the
//! process exits non-zero when any criterion fails.
//!
//! Run with `cargo test -p hidden-ties-cli --test acceptance`.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};
use std::time::{Duration, Instant};

use hidden_ties::communities::{clique_report, count_k_cliques, DEFAULT_WALK_LENGTH};
use hidden_ties::io::{read_graph, write_graph, Graph, GraphFormat};
use hidden_ties::metrics::{
    aggregate_report, betweenness, closeness, density, eigenvector_centrality, geodesics,
};
use hidden_ties::synth::{listings_csv, synthetic_listings, SynthConfig};
use hidden_ties::{
    build_bipartite, largest_component, project, Algorithm, Normalization, Partition,
    ProjectionSide, UnipartiteGraph, VertexId,
};
use hidden_ties_oracle as oracle;
use oracle::SplitMix64;

const BIN: &str = env!("CARGO_BIN_EXE_hidden-ties");

const CLOSENESS_TOL: f64 = 1e-3;
const EIGENVECTOR_TOL: f64 = 1.5e-3;
const AGGREGATE_TOL: f64 = 1e-4;
const MODULARITY_TOL: f64 = 1e-3;
const DENSITY_TOL: f64 = 1e-4;
const ORACLE_REAL_TOL: f64 = 1e-9;
const RESIDUAL_BOUND: f64 = 1e-8;

const FAST_BUDGET: Duration = Duration::from_millis(50);
const PROPERTY_BUDGET: Duration = Duration::from_secs(60);
const PIPELINE_BUDGET: Duration = Duration::from_secs(10);

const ACTORS: [&str; 12] = [
    "FactoryThree",
    "ANB",
    "Shijiazhuang",
    "Remy",
    "CBF",
    "Acdhon",
    "GPO",
    "Brainy",
    "Tman",
    "China",
    "Guilin",
    "Medipharco",
];
const K5: [&str; 5] = ["FactoryThree", "ANB", "Shijiazhuang", "Remy", "Acdhon"];

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let holds: bool = $cond;
        if !holds {
            return Err(format!($($msg)+));
        }
    };
}

fn bp12_pairs() -> Vec<(&'static str, &'static str)> {
    let mut pairs: Vec<_> = ACTORS[..6].iter().map(|&a| (a, "P1")).collect();
    pairs.extend([
        ("CBF", "P2"),
        ("GPO", "P2"),
        ("Brainy", "P2"),
        ("Brainy", "P3"),
        ("Tman", "P3"),
        ("China", "P4"),
        ("Guilin", "P4"),
        ("Medipharco", "P4"),
    ]);
    pairs
}

fn r12() -> UnipartiteGraph {
    project(
        &build_bipartite(bp12_pairs()).unwrap(),
        ProjectionSide::Actors,
    )
    .unwrap()
}

fn r9() -> UnipartiteGraph {
    largest_component(&r12()).unwrap()
}

fn id(g: &UnipartiteGraph, label: &str) -> VertexId {
    g.vertex(label)
        .unwrap_or_else(|| panic!("no vertex {label}"))
}

fn plain(g: &UnipartiteGraph) -> (usize, Vec<(usize, usize)>) {
    (
        g.vertex_count(),
        g.edges()
            .iter()
            .map(|e| (e.source.index(), e.target.index()))
            .collect(),
    )
}

fn from_plain(n: usize, edges: &[(usize, usize)]) -> UnipartiteGraph {
    UnipartiteGraph::new(
        (0..n).map(|i| format!("v{i}")).collect(),
        edges.iter().map(|&(u, v)| (VertexId(u), VertexId(v), 1)),
    )
    .unwrap()
}

fn label_sets(g: &UnipartiteGraph, p: &Partition) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = p
        .communities()
        .iter()
        .map(|c| {
            let mut labels: Vec<String> = c.iter().map(|&v| g.label(v).to_string()).collect();
            labels.sort();
            labels
        })
        .collect();
    out.sort();
    out
}

fn sets(groups: &[&[&str]]) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = groups
        .iter()
        .map(|g| {
            let mut v: Vec<String> = g.iter().map(|s| s.to_string()).collect();
            v.sort();
            v
        })
        .collect();
    out.sort();
    out
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn run_cli(args: &[&str], threads: Option<&str>) -> Output {
    let mut cmd = Command::new(BIN);
    cmd.args(args).stdin(Stdio::null());
    cmd.env_remove("HIDDEN_TIES_THREADS");
    if let Some(t) = threads {
        cmd.env("HIDDEN_TIES_THREADS", t);
    }
    cmd.output().expect("spawn hidden-ties")
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap_or(-1)
}

fn criterion_1() -> Check {
    let g = r9();
    let start = Instant::now();
    let report = aggregate_report(&g).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let expected: [(&str, usize, f64, f64, f64); 9] = [
        ("CBF", 7, 15.0, 0.111, 0.163),
        ("FactoryThree", 5, 0.0, 0.083, 0.149),
        ("ANB", 5, 0.0, 0.083, 0.149),
        ("Shijiazhuang", 5, 0.0, 0.083, 0.149),
        ("Remy", 5, 0.0, 0.083, 0.149),
        ("Acdhon", 5, 0.0, 0.083, 0.149),
        ("GPO", 2, 0.0, 0.071, 0.040),
        ("Brainy", 3, 7.0, 0.077, 0.041),
        ("Tman", 1, 0.0, 0.050, 0.008),
    ];
    for (label, degree, between, close, eigen) in expected {
        let m = &report.vertices[id(&g, label).index()].metrics;
        ensure!(
            m.degree == degree,
            "{label}: degree {} != {degree}",
            m.degree
        );
        ensure!(
            m.betweenness_raw == between,
            "{label}: betweenness {} != {between}",
            m.betweenness_raw
        );
        ensure!(
            (m.closeness_raw - close).abs() <= CLOSENESS_TOL,
            "{label}: closeness {} vs {close}",
            m.closeness_raw
        );
        ensure!(
            (m.eigenvector - eigen).abs() <= EIGENVECTOR_TOL,
            "{label}: eigenvector {} vs {eigen}",
            m.eigenvector
        );
    }
    ensure!(elapsed < FAST_BUDGET, "took {elapsed:?}");
    Ok(format!("R9 centralities match in {elapsed:?}"))
}

fn criterion_2() -> Check {
    let g = r9();
    let start = Instant::now();
    let agg = aggregate_report(&g).map_err(|e| e.to_string())?.aggregates;
    let elapsed = start.elapsed();
    ensure!(agg.vertex_count == 9, "vertices {}", agg.vertex_count);
    ensure!(agg.edge_count == 19, "edges {}", agg.edge_count);
    ensure!(agg.diameter == 3, "diameter {}", agg.diameter);
    ensure!(
        (agg.average_geodesic - 1.4321).abs() <= AGGREGATE_TOL,
        "average geodesic {}",
        agg.average_geodesic
    );
    let d = agg.density.ok_or("density missing")?;
    ensure!((d - 0.5278).abs() <= AGGREGATE_TOL, "density {d}");
    ensure!(elapsed < FAST_BUDGET, "took {elapsed:?}");
    Ok(format!(
        "9 vertices, 19 edges, diameter 3, avg geodesic {:.4}, density {d:.4} in {elapsed:?}",
        agg.average_geodesic
    ))
}

fn criterion_3() -> Check {
    let cluster3: &[&str] = &["China", "Guilin", "Medipharco"];
    let mut with_cbf: Vec<&str> = K5.to_vec();
    with_cbf.push("CBF");
    let gn_expected = sets(&[&with_cbf, &["GPO", "Brainy", "Tman"], cluster3]);
    let greedy_expected = sets(&[&K5, &["CBF", "GPO", "Brainy", "Tman"], cluster3]);

    let g12 = r12();
    let g9 = r9();
    let mut qs = Vec::new();
    for (algorithm, expected, q) in [
        (Algorithm::GirvanNewman, &gn_expected, 0.1607),
        (Algorithm::ClausetNewmanMoore, &greedy_expected, 0.1869),
        (Algorithm::WakitaTsurumi, &greedy_expected, 0.1869),
    ] {
        let name = algorithm.short_name();
        let p = algorithm.run(&g12).map_err(|e| e.to_string())?;
        ensure!(
            &label_sets(&g12, &p) == expected,
            "{name} on R12: {:?}",
            label_sets(&g12, &p)
        );
        let p9 = algorithm.run(&g9).map_err(|e| e.to_string())?;
        let mut expected9 = expected.clone();
        expected9.retain(|c| !c.iter().any(|l| cluster3.contains(&l.as_str())));
        ensure!(
            label_sets(&g9, &p9) == expected9,
            "{name} on R9: {:?}",
            label_sets(&g9, &p9)
        );
        ensure!(
            (p9.modularity() - q).abs() <= MODULARITY_TOL,
            "{name}: Q {} vs {q}",
            p9.modularity()
        );
        let (n, e) = plain(&g9);
        let brute = oracle::modularity(n, &e, p9.assignments());
        ensure!(
            (p9.modularity() - brute).abs() <= 1e-12,
            "{name}: Q disagrees with oracle {brute}"
        );
        qs.push(format!("{name} Q={:.4}", p9.modularity()));
    }
    Ok(format!("partitions exact; {}", qs.join(", ")))
}

fn criterion_4() -> Check {
    let g = r9();
    let report = clique_report(&g, 3).map_err(|e| e.to_string())?;
    let expected: BTreeMap<usize, u128> = [(3, 21), (4, 15), (5, 6), (6, 1)].into();
    ensure!(report.counts == expected, "counts {:?}", report.counts);
    ensure!(report.total() == 43, "total {}", report.total());
    ensure!(
        report.max_clique_size == 6,
        "max size {}",
        report.max_clique_size
    );
    ensure!(
        report.max_clique_count == 1,
        "max count {}",
        report.max_clique_count
    );
    Ok("counts 21/15/6/1, total 43, one 6-clique".into())
}

fn criterion_5() -> Check {
    // 95 vertices with the first 947 pairs in lexicographic order.
    let n = 95;
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .take(947)
        .collect();
    let g = from_plain(n, &edges);
    let d = density(&g).map_err(|e| e.to_string())?;
    ensure!((d - 0.2121).abs() <= DENSITY_TOL, "density {d}");
    ensure!(
        (d - oracle::density(n, 947)).abs() <= 1e-15,
        "oracle disagrees"
    );
    Ok(format!("density(95, 947) = {d:.4}"))
}

fn criterion_6() -> Check {
    let start = Instant::now();
    let mut rng = SplitMix64(0x00c0_ffee);

    let mut path_graphs = 0;
    let mut residual_graphs = 0;
    let mut partition_graphs = 0;
    while path_graphs < 200 {
        let n = 1 + rng.below(10) as usize;
        let p = 0.15 + 0.7 * (rng.below(1000) as f64 / 1000.0);
        let e = oracle::random_graph(&mut rng, n, p);
        let full = from_plain(n, &e);

        if full.edge_count() > 0 {
            let singletons = Partition::new(&full, &(0..n).collect::<Vec<_>>())
                .map_err(|e| e.to_string())?
                .modularity();
            for algorithm in [
                Algorithm::GirvanNewman,
                Algorithm::ClausetNewmanMoore,
                Algorithm::WakitaTsurumi,
                Algorithm::Walktrap {
                    walk_length: DEFAULT_WALK_LENGTH,
                },
            ] {
                let q = algorithm
                    .run(&full)
                    .map_err(|e| e.to_string())?
                    .modularity();
                ensure!(
                    q >= singletons - 1e-12,
                    "{}: Q {q} below singletons {singletons} on {e:?}",
                    algorithm.short_name()
                );
            }
            partition_graphs += 1;
        }

        // Path metrics are defined per connected graph.
        let g = largest_component(&full).map_err(|e| e.to_string())?;
        let (gn, ge) = plain(&g);
        let b = betweenness(&g, Normalization::Raw);
        for (x, y) in b.iter().zip(oracle::betweenness(gn, &ge)) {
            ensure!(
                (x - y).abs() <= ORACLE_REAL_TOL,
                "betweenness {x} vs {y} on {ge:?}"
            );
        }
        let c = closeness(&g, Normalization::Raw).map_err(|e| e.to_string())?;
        for (x, y) in c.iter().zip(oracle::closeness_raw(gn, &ge)) {
            ensure!(
                (x - y).abs() <= ORACLE_REAL_TOL,
                "closeness {x} vs {y} on {ge:?}"
            );
        }
        let (d, avg) = geodesics(&g).map_err(|e| e.to_string())?;
        let (od, oavg) = oracle::diameter_and_average(gn, &ge);
        ensure!(d == od, "diameter {d} vs {od} on {ge:?}");
        ensure!(
            (avg - oavg).abs() <= ORACLE_REAL_TOL,
            "average geodesic {avg} vs {oavg}"
        );
        path_graphs += 1;

        if g.edge_count() > 0 {
            let x = eigenvector_centrality(&g).map_err(|e| e.to_string())?;
            let ax: Vec<f64> = g
                .vertices()
                .map(|v| g.neighbors(v).iter().map(|&j| x[j]).sum())
                .collect();
            // With L1-normalized x, the Rayleigh-style estimate is sum(Ax).
            let lambda: f64 = ax.iter().sum();
            let residual = ax
                .iter()
                .zip(&x)
                .map(|(a, xi)| (a - lambda * xi).abs())
                .fold(0.0, f64::max);
            ensure!(residual < RESIDUAL_BOUND, "residual {residual} on {ge:?}");
            residual_graphs += 1;
        }
    }

    let mut clique_graphs = 0;
    while clique_graphs < 100 {
        let n = 1 + rng.below(12) as usize;
        let p = 0.2 + 0.7 * (rng.below(1000) as f64 / 1000.0);
        let e = oracle::random_graph(&mut rng, n, p);
        let g = from_plain(n, &e);
        for k in 3..=n.max(3) {
            let got = count_k_cliques(&g, k).map_err(|e| e.to_string())?;
            let want = oracle::count_cliques(n, &e, k) as u128;
            ensure!(got == want, "{k}-cliques {got} vs {want} on {e:?}");
        }
        clique_graphs += 1;
    }

    let mut bipartite_graphs = 0;
    while bipartite_graphs < 100 {
        let actors = 1 + rng.below(8) as usize;
        let resources = 1 + rng.below(8) as usize;
        let mut pairs = Vec::new();
        for a in 0..actors {
            for r in 0..resources {
                if rng.chance(0.3) {
                    pairs.push((a, r));
                }
            }
        }
        if pairs.is_empty() {
            continue;
        }
        let labeled: Vec<(String, String)> = pairs
            .iter()
            .map(|&(a, r)| (format!("a{a}"), format!("r{r}")))
            .collect();
        let b = build_bipartite(labeled.iter().map(|(a, r)| (a.as_str(), r.as_str())))
            .map_err(|e| e.to_string())?;
        let projected = project(&b, ProjectionSide::Actors).map_err(|e| e.to_string())?;
        let edges: Vec<(usize, usize)> = b
            .edges()
            .iter()
            .map(|e| (e.actor.index(), e.resource.index()))
            .collect();
        let want = oracle::project_by_intersection(b.actors().len(), &edges);
        let got: BTreeMap<(usize, usize), u64> = projected
            .edges()
            .iter()
            .map(|e| ((e.source.index(), e.target.index()), e.weight))
            .collect();
        ensure!(got == want, "projection mismatch on {pairs:?}");
        bipartite_graphs += 1;
    }

    let elapsed = start.elapsed();
    ensure!(elapsed < PROPERTY_BUDGET, "took {elapsed:?}");
    Ok(format!(
        "{path_graphs} path, {residual_graphs} eigenvector, {partition_graphs} partition, \
         {clique_graphs} clique, {bipartite_graphs} projection graphs in {elapsed:?}"
    ))
}

/// Stdout of every pipeline stage, in order.
fn synthetic_pipeline(dir: &Path, threads: Option<&str>) -> Result<Vec<Vec<u8>>, String> {
    let csv = dir.join("listings.csv");
    let bip = dir.join("bipartite.json");
    let proj = dir.join("projected.json");
    let (csv, bip, proj) = (
        csv.to_str().unwrap(),
        bip.to_str().unwrap(),
        proj.to_str().unwrap(),
    );
    let stage = |args: &[&str]| -> Result<Vec<u8>, String> {
        let out = run_cli(args, threads);
        if !out.status.success() {
            return Err(format!(
                "{args:?}: {}",
                String::from_utf8_lossy(&out.stderr)
            ));
        }
        Ok(out.stdout)
    };
    let mut outputs = Vec::new();
    stage(&[
        "ingest",
        "--input",
        csv,
        "--out",
        bip,
        "--actor-col",
        "Vendor",
        "--resource-col",
        "Products",
        "--split-delim",
        ",",
    ])?;
    outputs.push(std::fs::read(bip).map_err(|e| e.to_string())?);
    stage(&["project", "--input", bip, "--out", proj, "--side", "actors"])?;
    outputs.push(std::fs::read(proj).map_err(|e| e.to_string())?);
    outputs.push(stage(&["metrics", "--input", proj, "--component", "all"])?);
    for algorithm in ["gn", "cnm", "wt", "walktrap"] {
        outputs.push(stage(&[
            "communities",
            "--input",
            proj,
            "--algorithm",
            algorithm,
        ])?);
    }
    outputs.push(stage(&["cliques", "--input", proj])?);
    Ok(outputs)
}

fn criterion_7() -> Check {
    let csv = listings_csv(&synthetic_listings(&SynthConfig::default()));
    let mut runs = Vec::new();
    let mut timing = Duration::ZERO;
    for threads in [None, None, Some("1"), Some("4")] {
        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
        std::fs::write(dir.path().join("listings.csv"), &csv).map_err(|e| e.to_string())?;
        let start = Instant::now();
        let outputs = synthetic_pipeline(dir.path(), threads)?;
        let elapsed = start.elapsed();
        ensure!(
            elapsed < PIPELINE_BUDGET,
            "threads {threads:?}: took {elapsed:?}"
        );
        timing = timing.max(elapsed);
        runs.push(outputs);
    }
    for (i, run) in runs.iter().enumerate().skip(1) {
        for (stage, (a, b)) in runs[0].iter().zip(run).enumerate() {
            ensure!(a == b, "run {i} stage {stage} differs");
        }
    }
    let projected = match read_graph(&runs[0][1], GraphFormat::Json).map_err(|e| e.to_string())? {
        Graph::Unipartite(g) => g,
        Graph::Bipartite(_) => return Err("projection is bipartite".into()),
    };
    ensure!(
        projected.vertex_count() == 100,
        "{} actors",
        projected.vertex_count()
    );
    ensure!(
        (900..=1000).contains(&projected.edge_count()),
        "{} projected edges",
        projected.edge_count()
    );
    Ok(format!(
        "{} actors, {} edges; 4 runs byte-identical; slowest {timing:?}",
        projected.vertex_count(),
        projected.edge_count()
    ))
}

fn criterion_8() -> Check {
    let g = r12();
    for format in [GraphFormat::Json, GraphFormat::CsvEdgeList] {
        let bytes = write_graph(&g, format);
        match read_graph(&bytes, format).map_err(|e| e.to_string())? {
            Graph::Unipartite(back) => {
                ensure!(
                    back.vertex_count() == g.vertex_count(),
                    "{format:?}: vertex count"
                );
                let edge_set = |h: &UnipartiteGraph| -> BTreeMap<(String, String), u64> {
                    h.edges()
                        .iter()
                        .map(|e| {
                            let (a, b) = (h.label(e.source), h.label(e.target));
                            let key = if a < b { (a, b) } else { (b, a) };
                            ((key.0.to_string(), key.1.to_string()), e.weight)
                        })
                        .collect()
                };
                ensure!(edge_set(&back) == edge_set(&g), "{format:?}: edges differ");
                ensure!(
                    write_graph(&back, format) == bytes,
                    "{format:?}: bytes differ"
                );
            }
            Graph::Bipartite(_) => return Err(format!("{format:?}: read back as bipartite")),
        }
    }

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let bip = dir.path().join("bp12.json");
    let proj = dir.path().join("r12.json");
    let (bip, proj) = (bip.to_str().unwrap(), proj.to_str().unwrap());
    let prefixed = fixture("bp12_prefixed.csv");
    let ingest = run_cli(
        &[
            "ingest",
            "--input",
            prefixed.to_str().unwrap(),
            "--out",
            bip,
            "--actor-col",
            "Manufacturer",
            "--resource-col",
            "Product",
        ],
        None,
    );
    ensure!(
        code(&ingest) == 0,
        "ingest: {}",
        String::from_utf8_lossy(&ingest.stderr)
    );
    let out = run_cli(
        &["project", "--input", bip, "--out", proj, "--side", "actors"],
        None,
    );
    ensure!(
        code(&out) == 0,
        "project: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let out = run_cli(&["metrics", "--input", proj, "--format", "csv"], None);
    ensure!(
        code(&out) == 0,
        "metrics: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let table = String::from_utf8_lossy(&out.stdout);
    ensure!(
        table.lines().any(|l| l == "1_CBF,7,15,0.111,0.163"),
        "no CBF row in:\n{table}"
    );

    for format in ["json", "csv"] {
        let exported = dir.path().join(format!("r12.{format}"));
        let exported = exported.to_str().unwrap();
        let out = run_cli(
            &[
                "export", "--input", proj, "--out", exported, "--format", format,
            ],
            None,
        );
        ensure!(code(&out) == 0, "export {format}");
        let again = run_cli(&["export", "--input", exported, "--format", "json"], None);
        ensure!(code(&again) == 0, "re-export from {format}");
        ensure!(
            again.stdout == std::fs::read(proj).map_err(|e| e.to_string())?,
            "CLI {format} round trip changed R12"
        );
    }

    let missing = dir.path().join("missing.csv");
    let unknown = fixture("all_unknown.csv");
    let cases: [(&str, Vec<&str>, Option<&str>, i32); 6] = [
        (
            "unknown vertex",
            vec!["ego", "--input", proj, "--vertex", "1_Nobody"],
            None,
            1,
        ),
        (
            "unknown flag",
            vec!["metrics", "--input", proj, "--bogus"],
            None,
            1,
        ),
        (
            "bad thread count",
            vec!["cliques", "--input", proj],
            Some("0"),
            1,
        ),
        (
            "missing file",
            vec![
                "project",
                "--input",
                missing.to_str().unwrap(),
                "--side",
                "actors",
            ],
            None,
            2,
        ),
        (
            "empty record set",
            vec![
                "ingest",
                "--input",
                unknown.to_str().unwrap(),
                "--actor-col",
                "Manufacturer",
                "--resource-col",
                "Product",
            ],
            None,
            2,
        ),
        ("wrong graph kind", vec!["metrics", "--input", bip], None, 2),
    ];
    for (what, args, threads, want) in &cases {
        let out = run_cli(args, *threads);
        ensure!(code(&out) == *want, "{what}: exit {} != {want}", code(&out));
    }
    // Exit 3 marks a broken internal invariant and has no input that
    // reaches it; its mapping is unit-tested in the binary crate.
    Ok("R12 JSON/CSV round trips exact; CBF row renders; exit codes 1 and 2 classified".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("centralities on R9", criterion_1),
        ("aggregates on R9", criterion_2),
        ("community partitions", criterion_3),
        ("clique counts", criterion_4),
        ("density formula at scale", criterion_5),
        ("brute-force property suite", criterion_6),
        ("synthetic scale pipeline", criterion_7),
        ("round trips and CLI contract", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".to_string()));
        match result {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
