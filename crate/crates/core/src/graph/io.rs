//! Text and JSON graph formats.
//!
//! Text: optional `#` comment lines, a header `n=<int>`, then one edge
//! `<u> <v>` per line (0-based; `u u` is a loop). JSON:
//! `{"n": int, "edges": [[u, v], ...]}`. Both serializers emit edges with
//! `u <= v` in lexicographic order.

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

pub fn to_text(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn to_json(g: &Graph) -> String {
    let json = GraphJson {
        n: g.n(),
        edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
    };
    serde_json::to_string(&json).expect("plain struct serializes")
}

pub fn parse_text(text: &str) -> Result<Graph, GraphError> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| GraphError::Parse {
            line: line_no,
            message,
        };
        match n {
            None => {
                let value = line
                    .strip_prefix("n")
                    .map(str::trim_start)
                    .and_then(|r| r.strip_prefix('='))
                    .ok_or_else(|| err(format!("expected header `n=<int>`, got `{line}`")))?;
                n = Some(
                    value
                        .trim()
                        .parse::<usize>()
                        .map_err(|e| err(format!("bad vertex count: {e}")))?,
                );
            }
            Some(count) => {
                let mut fields = line.split_whitespace();
                let mut endpoint = || -> Result<usize, GraphError> {
                    let tok = fields
                        .next()
                        .ok_or_else(|| err("expected two vertex indices".into()))?;
                    let v: usize = tok
                        .parse()
                        .map_err(|_| err(format!("bad vertex index `{tok}`")))?;
                    if v >= count {
                        return Err(err(format!("vertex {v} out of range for n={count}")));
                    }
                    Ok(v)
                };
                let u = endpoint()?;
                let v = endpoint()?;
                if fields.next().is_some() {
                    return Err(err("trailing tokens after edge".into()));
                }
                edges.push((u, v));
            }
        }
    }
    let n = n.ok_or(GraphError::Parse {
        line: last_line.max(1),
        message: "missing header `n=<int>`".into(),
    })?;
    Graph::build(n, edges)
}

pub fn parse_json(text: &str) -> Result<Graph, GraphError> {
    let json: GraphJson = serde_json::from_str(text).map_err(|e| GraphError::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    Graph::build(json.n, json.edges.into_iter().map(|[u, v]| (u, v)))
}

/// Dispatches on the first non-blank character: `{` means JSON.
pub fn parse(text: &str) -> Result<Graph, GraphError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}
