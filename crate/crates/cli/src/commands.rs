use std::io::{Read, Write};

use hidden_ties::communities::{clique_report, Algorithm};
use hidden_ties::io::{
    batch_to_bipartite, parse_csv, read_graph, write_graph, write_report, CliqueSummary,
    ComponentMetrics, Graph, GraphFormat, IngestConfig, PartitionReport, Report, ReportFormat,
    ReportOptions,
};
use hidden_ties::metrics::aggregate_report;
use hidden_ties::{
    connected_components, ego_network, induced_subgraph, project as project_graph, BipartiteGraph,
    EgoRadius, Error, Normalization, ProjectionSide, UnipartiteGraph,
};

use crate::error::CliError;
use crate::{
    AlgorithmArg, CliquesArgs, CommunitiesArgs, ComponentArg, EgoArgs, ExportArgs, GraphFormatArg,
    IngestArgs, Io, MetricsArgs, ProjectArgs, RadiusArg, ReportFormatArg, ScaleArg, SideArg,
};

fn read_input(path: &str) -> Result<Vec<u8>, CliError> {
    let mut bytes = Vec::new();
    let result = if path == "-" {
        std::io::stdin().read_to_end(&mut bytes).map(|_| ())
    } else {
        std::fs::File::open(path).and_then(|mut f| f.read_to_end(&mut bytes).map(|_| ()))
    };
    result.map_err(|e| CliError::Input(format!("{path}: {e}")))?;
    Ok(bytes)
}

fn write_output(io: &Io, bytes: &[u8]) -> Result<(), CliError> {
    let result = match &io.out {
        Some(path) => std::fs::write(path, bytes),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(bytes).and_then(|_| stdout.flush())
        }
    };
    result.map_err(|e| CliError::Input(format!("{}: {e}", io.out.as_deref().unwrap_or("stdout"))))
}

/// JSON when the first non-blank byte opens an object, CSV edge list otherwise.
fn load_graph(path: &str) -> Result<Graph, CliError> {
    let bytes = read_input(path)?;
    let format = match bytes.iter().find(|b| !b.is_ascii_whitespace()) {
        Some(b'{') => GraphFormat::Json,
        _ => GraphFormat::CsvEdgeList,
    };
    Ok(read_graph(&bytes, format)?)
}

fn load_unipartite(path: &str) -> Result<UnipartiteGraph, CliError> {
    match load_graph(path)? {
        Graph::Unipartite(g) => Ok(g),
        Graph::Bipartite(_) => Err(CliError::Input(format!(
            "{path}: expected a unipartite graph; run `project` first"
        ))),
    }
}

fn load_bipartite(path: &str) -> Result<BipartiteGraph, CliError> {
    match load_graph(path)? {
        Graph::Bipartite(g) => Ok(g),
        Graph::Unipartite(_) => Err(CliError::Input(format!(
            "{path}: expected a bipartite graph"
        ))),
    }
}

fn graph_format(f: GraphFormatArg) -> GraphFormat {
    match f {
        GraphFormatArg::Json => GraphFormat::Json,
        GraphFormatArg::Graphml => GraphFormat::GraphMl,
        GraphFormatArg::Dot => GraphFormat::Dot,
        GraphFormatArg::Csv => GraphFormat::CsvEdgeList,
    }
}

fn report_format(f: ReportFormatArg) -> ReportFormat {
    match f {
        ReportFormatArg::Json => ReportFormat::Json,
        ReportFormatArg::Csv => ReportFormat::Csv,
    }
}

fn scale(s: ScaleArg) -> Normalization {
    match s {
        ScaleArg::Raw => Normalization::Raw,
        ScaleArg::Normalized => Normalization::Normalized,
    }
}

pub fn ingest(a: IngestArgs) -> Result<(), CliError> {
    let mut config = IngestConfig::new(a.actor_col, a.resource_col);
    config.split_delimiter = a.split_delim;
    if !a.filters.is_empty() {
        config = config.with_filters(a.filters);
    }
    let batch = parse_csv(&read_input(&a.io.input)?, &config)?;
    let g = batch_to_bipartite(&batch)?;
    write_output(&a.io, &write_graph(&g, graph_format(a.format)))?;
    eprintln!(
        "actors={} resources={} edges={} dropped_rows={} deduped_rows={}",
        g.actors().len(),
        g.resources().len(),
        g.edge_count(),
        batch.dropped_rows,
        batch.duplicate_rows
    );
    Ok(())
}

pub fn project(a: ProjectArgs) -> Result<(), CliError> {
    let g = load_bipartite(&a.io.input)?;
    let side = match a.side {
        SideArg::Actors => ProjectionSide::Actors,
        SideArg::Resources => ProjectionSide::Resources,
    };
    let p = project_graph(&g, side)?;
    write_output(&a.io, &write_graph(&p, graph_format(a.format)))?;
    eprintln!(
        "vertices={} edges={} components={}",
        p.vertex_count(),
        p.edge_count(),
        connected_components(&p).count()
    );
    Ok(())
}

pub fn metrics(a: MetricsArgs) -> Result<(), CliError> {
    let g = load_unipartite(&a.io.input)?;
    if g.is_empty() {
        return Err(Error::EmptyGraph.into());
    }
    let components = connected_components(&g);
    let selected: Vec<usize> = match a.component {
        ComponentArg::Largest => vec![0],
        ComponentArg::All => (0..components.count()).collect(),
        ComponentArg::Index(i) if i < components.count() => vec![i],
        ComponentArg::Index(i) => {
            return Err(CliError::Usage(format!(
                "component {i} does not exist; the graph has {}",
                components.count()
            )))
        }
    };
    let mut reports = Vec::with_capacity(selected.len());
    for c in selected {
        let sub = induced_subgraph(&g, components.members(c))?;
        reports.push(ComponentMetrics {
            component: c,
            report: aggregate_report(&sub)?,
        });
    }
    let options = ReportOptions {
        closeness: scale(a.closeness),
        betweenness: scale(a.betweenness),
        extended: a.extended,
    };
    let bytes = write_report(
        &Report::Metrics(reports.clone()),
        report_format(a.format),
        &options,
    );
    write_output(&a.io, &bytes)?;
    let prefix = matches!(a.component, ComponentArg::All);
    for r in &reports {
        let agg = &r.report.aggregates;
        let density = agg.density.map_or("NA".to_string(), |d| format!("{d:.4}"));
        eprintln!(
            "{}vertices={} edges={} diameter={} avg_geodesic={:.4} density={density}",
            if prefix {
                format!("component={} ", r.component)
            } else {
                String::new()
            },
            agg.vertex_count,
            agg.edge_count,
            agg.diameter,
            agg.average_geodesic
        );
    }
    Ok(())
}

pub fn communities(a: CommunitiesArgs) -> Result<(), CliError> {
    let g = load_unipartite(&a.io.input)?;
    let algorithm = match a.algorithm {
        AlgorithmArg::Gn => Algorithm::GirvanNewman,
        AlgorithmArg::Cnm => Algorithm::ClausetNewmanMoore,
        AlgorithmArg::Wt => Algorithm::WakitaTsurumi,
        AlgorithmArg::Walktrap => Algorithm::Walktrap {
            walk_length: a.walk_length,
        },
    };
    let partition = algorithm.run(&g)?;
    let report = PartitionReport::new(&g, &partition, algorithm.short_name(), a.min_size);
    eprintln!(
        "algorithm={} communities={} listed={} modularity={:.4}",
        report.algorithm,
        report.community_count,
        report.communities.len(),
        report.modularity
    );
    let bytes = write_report(
        &Report::Partition(report),
        report_format(a.format),
        &ReportOptions::default(),
    );
    write_output(&a.io, &bytes)
}

pub fn cliques(a: CliquesArgs) -> Result<(), CliError> {
    let g = load_unipartite(&a.io.input)?;
    let report = clique_report(&g, a.min_k)?;
    let summary = CliqueSummary::new(&g, &report, a.min_k);
    eprintln!(
        "max_clique_size={} max_clique_count={} total={}",
        summary.max_clique_size, summary.max_clique_count, summary.total
    );
    let bytes = write_report(
        &Report::Cliques(summary),
        report_format(a.format),
        &ReportOptions::default(),
    );
    write_output(&a.io, &bytes)
}

pub fn ego(a: EgoArgs) -> Result<(), CliError> {
    let g = load_unipartite(&a.io.input)?;
    let v = g
        .vertex(&a.vertex)
        .ok_or_else(|| CliError::from(Error::UnknownVertex(a.vertex.clone())))?;
    let radius = match a.radius {
        RadiusArg::One => EgoRadius::One,
        RadiusArg::OnePointFive => EgoRadius::OnePointFive,
    };
    let ego = ego_network(&g, v, radius)?;
    let sub = &ego.subgraph;
    if a.min_edges.is_some_and(|m| sub.edge_count() <= m) {
        write_output(&a.io, b"")?;
        eprintln!("skipped");
        return Ok(());
    }
    write_output(&a.io, &write_graph(sub, graph_format(a.format)))?;
    eprintln!("vertices={} edges={}", sub.vertex_count(), sub.edge_count());
    Ok(())
}

pub fn export(a: ExportArgs) -> Result<(), CliError> {
    let g = load_graph(&a.io.input)?;
    write_output(&a.io, &write_graph(&g, graph_format(a.format)))
}
