//! Tabular record ingestion.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::graph::{build_bipartite, BipartiteGraph};

pub const DEFAULT_FILTER_VALUES: [&str; 3] = ["Missing", "Unknown", "N/A"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IngestConfig {
    pub actor_column: String,
    pub resource_column: String,
    /// Splits the resource field into several resources when set.
    pub split_delimiter: Option<char>,
    /// Whole-field, case-insensitive placeholders that drop a row.
    pub filter_values: BTreeSet<String>,
    pub trim_whitespace: bool,
}

impl IngestConfig {
    pub fn new(actor_column: impl Into<String>, resource_column: impl Into<String>) -> Self {
        IngestConfig {
            actor_column: actor_column.into(),
            resource_column: resource_column.into(),
            split_delimiter: None,
            filter_values: DEFAULT_FILTER_VALUES
                .iter()
                .map(|s| s.to_string())
                .collect(),
            trim_whitespace: true,
        }
    }

    pub fn split_on(mut self, delimiter: char) -> Self {
        self.split_delimiter = Some(delimiter);
        self
    }

    pub fn with_filters<I, S>(mut self, values: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.filter_values = values.into_iter().map(Into::into).collect();
        self
    }

    fn is_filtered(&self, field: &str) -> bool {
        let field = field.trim().to_lowercase();
        self.filter_values
            .iter()
            .any(|f| f.trim().to_lowercase() == field)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Record {
    pub actor: String,
    pub resources: Vec<String>,
    pub attributes: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RecordBatch {
    pub rows: Vec<Record>,
    pub source: String,
    /// Rows removed for empty fields or filter placeholders.
    pub dropped_rows: usize,
    /// Exact duplicate rows collapsed into an earlier row.
    pub duplicate_rows: usize,
}

impl RecordBatch {
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Parses header-first, comma-separated, double-quoted CSV.
pub fn parse_csv(bytes: &[u8], config: &IngestConfig) -> Result<RecordBatch> {
    if config.actor_column == config.resource_column {
        return Err(Error::InvalidArgument(format!(
            "actor and resource column are both {:?}",
            config.actor_column
        )));
    }
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(false)
        .from_reader(bytes);
    let headers: Vec<String> = reader
        .headers()
        .map_err(csv_error)?
        .iter()
        .map(|h| h.trim().to_string())
        .collect();
    let locate = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::MissingColumn(name.to_string()))
    };
    let actor_at = locate(&config.actor_column)?;
    let resource_at = locate(&config.resource_column)?;

    let clean = |s: &str| -> String {
        if config.trim_whitespace {
            s.trim().to_string()
        } else {
            s.to_string()
        }
    };

    let mut batch = RecordBatch {
        source: "csv".to_string(),
        ..RecordBatch::default()
    };
    let mut seen: HashSet<Record> = HashSet::new();
    for row in reader.records() {
        let row = row.map_err(csv_error)?;
        let actor = clean(&row[actor_at]);
        let raw_resource = &row[resource_at];
        let mut resources: Vec<String> = Vec::new();
        let tokens: Vec<&str> = match config.split_delimiter {
            Some(d) => raw_resource.split(d).collect(),
            None => vec![raw_resource],
        };
        for token in tokens {
            let token = clean(token);
            if !token.trim().is_empty() && !resources.contains(&token) {
                resources.push(token);
            }
        }
        if actor.trim().is_empty()
            || resources.is_empty()
            || config.is_filtered(&actor)
            || resources.iter().any(|r| config.is_filtered(r))
        {
            batch.dropped_rows += 1;
            continue;
        }
        let attributes = headers
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != actor_at && i != resource_at)
            .map(|(i, h)| (h.clone(), clean(&row[i])))
            .collect();
        let record = Record {
            actor,
            resources,
            attributes,
        };
        if seen.insert(record.clone()) {
            batch.rows.push(record);
        } else {
            batch.duplicate_rows += 1;
        }
    }
    Ok(batch)
}

fn csv_error(err: csv::Error) -> Error {
    let line = err.position().map(|p| p.line());
    match (err.kind(), line) {
        (
            csv::ErrorKind::UnequalLengths {
                expected_len, len, ..
            },
            Some(line),
        ) => Error::MalformedRow {
            line,
            message: format!("expected {expected_len} fields, found {len}"),
        },
        (_, Some(line)) => Error::MalformedRow {
            line,
            message: err.to_string(),
        },
        _ => Error::Csv(err),
    }
}

/// One edge per distinct `(actor, resource)`; the weight counts the rows
/// that contain the pair.
pub fn batch_to_bipartite(batch: &RecordBatch) -> Result<BipartiteGraph> {
    if batch.rows.is_empty() {
        return Err(Error::EmptyRecordSet);
    }
    build_bipartite(batch.rows.iter().flat_map(|r| {
        r.resources
            .iter()
            .map(move |res| (r.actor.as_str(), res.as_str()))
    }))
}
