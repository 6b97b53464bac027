//! Text input formats: whitespace edge lists and one-label-per-line label
//! files. Blank lines and `#` comments are ignored in both.

use antimagic::{Error, Graph, Label, LabelSet};

use crate::error::CliError;

/// Parses an edge list: one `u v` pair per line, with an optional `n COUNT`
/// header pinning the vertex count (otherwise one past the largest id).
pub fn parse_edge_list(text: &str) -> Result<Graph, CliError> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = idx + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "n" {
            if declared.is_some() {
                return Err(CliError::Format(format!(
                    "line {lineno}: duplicate vertex-count header"
                )));
            }
            if tokens.len() != 2 {
                return Err(CliError::Format(format!(
                    "line {lineno}: expected \"n COUNT\""
                )));
            }
            declared = Some(tokens[1].parse().map_err(|_| {
                CliError::Format(format!("line {lineno}: malformed vertex count"))
            })?);
            continue;
        }
        if tokens.len() != 2 {
            return Err(CliError::Format(format!(
                "line {lineno}: expected \"u v\", got {line:?}"
            )));
        }
        let u: usize = tokens[0]
            .parse()
            .map_err(|_| CliError::Format(format!("line {lineno}: malformed vertex id")))?;
        let v: usize = tokens[1]
            .parse()
            .map_err(|_| CliError::Format(format!("line {lineno}: malformed vertex id")))?;
        edges.push((u, v));
    }
    let n = declared.unwrap_or_else(|| {
        edges
            .iter()
            .map(|&(u, v)| u.max(v) + 1)
            .max()
            .unwrap_or(0)
    });
    Graph::new(n, &edges).map_err(|e| CliError::Format(e.to_string()))
}

/// Parses labels, one per line: integers, exact decimals, or `p/q`
/// fractions. Duplicates and non-positive values are rejected.
pub fn parse_labels(text: &str) -> Result<LabelSet, CliError> {
    let mut labels = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let label: Label = line.parse().map_err(|e: Error| {
            CliError::Format(format!("line {}: {e}", idx + 1))
        })?;
        labels.push(label);
    }
    LabelSet::new(labels).map_err(|e| CliError::Format(e.to_string()))
}
