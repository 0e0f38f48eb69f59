use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{build_graph, Graph};
use crate::error::{Error, Result};

/// On-disk graph form. Edges are `[i, j]` with `i < j`, sorted. `name` and
/// `labels` may be omitted on input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    #[serde(default)]
    pub name: String,
    pub n: usize,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExportFormat {
    Json,
    Dot,
    Edges,
}

impl FromStr for ExportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Self::Json),
            "dot" => Ok(Self::Dot),
            "edges" => Ok(Self::Edges),
            other => Err(format!("unknown format {other:?} (expected json, dot or edges)")),
        }
    }
}

impl Graph {
    pub fn to_json_model(&self) -> GraphJson {
        GraphJson {
            name: self.name.clone(),
            n: self.order(),
            labels: self.labels.clone(),
            edges: self.edges().map(|(i, j)| [i, j]).collect(),
        }
    }

    /// Canonical single-line JSON followed by a newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(&self.to_json_model()).expect("graph json serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        let model: GraphJson = serde_json::from_str(text)?;
        let edges: Vec<(usize, usize)> = model.edges.iter().map(|&[i, j]| (i, j)).collect();
        Ok(build_graph(model.n, &edges, model.labels)?.with_name(model.name))
    }

    /// SHA-256 of the canonical JSON, hex encoded.
    pub fn digest(&self) -> String {
        let hash = Sha256::digest(self.to_json().as_bytes());
        hash.iter().fold(String::with_capacity(64), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        })
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {} {{", quote(&self.name));
        for v in self.vertices() {
            let _ = writeln!(out, "  {};", quote(&self.label(v)));
        }
        for (i, j) in self.edges() {
            let _ = writeln!(out, "  {} -- {};", quote(&self.label(i)), quote(&self.label(j)));
        }
        out.push_str("}\n");
        out
    }

    /// One `u v` line per edge, then one single-token line per isolated vertex.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (i, j) in self.edges() {
            let _ = writeln!(out, "{} {}", self.label(i), self.label(j));
        }
        for v in self.vertices().filter(|&v| self.degree(v) == 0) {
            let _ = writeln!(out, "{}", self.label(v));
        }
        out
    }

    /// Parses the edge-list format. Tokens that are all plain decimal
    /// integers are read as indices of an unlabeled graph; anything else
    /// becomes a label.
    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut pairs = Vec::new();
        let mut singles = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens[..] {
                [v] => singles.push(v),
                [a, b] => pairs.push((a, b)),
                _ => {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        column: 1,
                        message: format!("expected one or two vertex tokens, found {}", tokens.len()),
                    })
                }
            }
        }

        let numeric =
            |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit()) && (t == "0" || !t.starts_with('0'));
        if pairs.iter().all(|(a, b)| numeric(a) && numeric(b)) && singles.iter().all(|v| numeric(v)) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .map(|(a, b)| (a.parse().unwrap(), b.parse().unwrap()))
                .collect();
            let n = edges
                .iter()
                .map(|&(a, b)| a.max(b) + 1)
                .chain(singles.iter().map(|v| v.parse::<usize>().unwrap() + 1))
                .max()
                .unwrap_or(0);
            return build_graph(n, &edges, None);
        }

        let mut labels: Vec<String> = pairs
            .iter()
            .flat_map(|(a, b)| [a.to_string(), b.to_string()])
            .chain(singles.iter().map(|v| v.to_string()))
            .collect();
        labels.sort();
        labels.dedup();
        let index = |t: &str| labels.binary_search_by(|l| l.as_str().cmp(t)).unwrap();
        let edges: Vec<(usize, usize)> = pairs.iter().map(|(a, b)| (index(a), index(b))).collect();
        build_graph(labels.len(), &edges, Some(labels.clone()))
    }

    pub fn export(&self, format: ExportFormat) -> String {
        match format {
            ExportFormat::Json => self.to_json(),
            ExportFormat::Dot => self.to_dot(),
            ExportFormat::Edges => self.to_edge_list(),
        }
    }

    /// Reads JSON or edge-list input, sniffing on the first non-blank byte.
    pub fn parse_any(text: &str) -> Result<Graph> {
        if text.trim_start().starts_with('{') {
            Graph::from_json(text)
        } else {
            Graph::from_edge_list(text)
        }
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}
