//! Parsing of edge lists and labelings.
//!
//! Inline edge lists separate edges by commas or whitespace; each edge is
//! two vertices joined by `-`. A list starting with `@` names a file with
//! one edge per line (`a-b` or `a b`); blank lines and `#` comments are
//! skipped.

use std::fmt;
use std::path::Path;

use skewbetti_core::graph::Vertex;

/// A user input error. Maps to the validation exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invalid(pub String);

impl fmt::Display for Invalid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Invalid {}

pub type Edge = (Vertex, Vertex);

pub fn read_edges(list: &str) -> Result<Vec<Edge>, Invalid> {
    match list.strip_prefix('@') {
        Some(path) => {
            let text = std::fs::read_to_string(Path::new(path))
                .map_err(|e| Invalid(format!("cannot read edge file {path}: {e}")))?;
            parse_edge_file(&text).map_err(|e| Invalid(format!("{path}: {}", e.0)))
        }
        None => parse_edge_list(list),
    }
}

pub fn parse_edge_list(list: &str) -> Result<Vec<Edge>, Invalid> {
    let tokens: Vec<&str> = list
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect();
    if tokens.is_empty() {
        return Err(Invalid(String::from("edge list is empty")));
    }
    tokens
        .iter()
        .enumerate()
        .map(|(k, t)| parse_edge(t, &['-']).map_err(|e| Invalid(format!("edge {}: {e}", k + 1))))
        .collect()
}

pub fn parse_edge_file(text: &str) -> Result<Vec<Edge>, Invalid> {
    let mut edges = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        edges.push(parse_edge(line, &['-', ' ', '\t']).map_err(|e| Invalid(format!("line {}: {e}", k + 1)))?);
    }
    if edges.is_empty() {
        return Err(Invalid(String::from("edge file has no edges")));
    }
    Ok(edges)
}

fn parse_edge(token: &str, separators: &[char]) -> Result<Edge, String> {
    let parts: Vec<&str> = token.split(separators).filter(|p| !p.is_empty()).collect();
    let [a, b] = parts[..] else {
        return Err(format!("expected two endpoints in {token:?}"));
    };
    Ok((parse_vertex(a)?, parse_vertex(b)?))
}

fn parse_vertex(s: &str) -> Result<Vertex, String> {
    s.trim().parse().map_err(|e: skewbetti_core::Error| e.to_string())
}

pub fn parse_labeling(items: &[String]) -> Result<Vec<Vertex>, Invalid> {
    items
        .iter()
        .enumerate()
        .map(|(k, s)| parse_vertex(s).map_err(|e| Invalid(format!("labeling entry {}: {e}", k + 1))))
        .collect()
}
