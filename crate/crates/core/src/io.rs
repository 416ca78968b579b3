//! Edge-list text, JSON and DOT formats for [`Digraph`].
//!
//! Edge list: a header line `n m`, then `m` lines `u v` (arc `u -> v`).
//! `label i name` lines may appear anywhere after the header and `#` starts a
//! comment.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub fn to_edge_list(d: &Digraph) -> String {
    let mut s = format!("{} {}\n", d.n(), d.arc_count());
    for &(u, v) in d.arcs() {
        writeln!(s, "{u} {v}").unwrap();
    }
    if let Some(labels) = d.labels() {
        for (i, l) in labels.iter().enumerate() {
            writeln!(s, "label {i} {l}").unwrap();
        }
    }
    s
}

pub fn parse_edge_list(text: &str) -> Result<Digraph> {
    let perr = |line: usize, message: String| Error::Parse { line, message };
    let mut header: Option<(usize, usize)> = None;
    let mut arcs = Vec::new();
    let mut labels: BTreeMap<usize, String> = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let Some((n, _)) = header else {
            let nums = parse_pair(&fields).map_err(|m| perr(line, format!("bad header: {m}")))?;
            header = Some(nums);
            continue;
        };
        if fields[0] == "label" {
            if fields.len() < 3 {
                return Err(perr(line, "expected `label <index> <name>`".into()));
            }
            let i: usize = fields[1].parse().map_err(|_| perr(line, format!("bad label index `{}`", fields[1])))?;
            if i >= n {
                return Err(perr(line, format!("label index {i} out of range")));
            }
            labels.insert(i, fields[2..].join(" "));
            continue;
        }
        let (u, v) = parse_pair(&fields).map_err(|m| perr(line, m))?;
        if u >= n || v >= n {
            return Err(perr(line, format!("arc ({u},{v}) out of range for {n} vertices")));
        }
        if u == v {
            return Err(perr(line, format!("loop at vertex {u}")));
        }
        arcs.push((u, v));
    }
    let Some((n, m)) = header else {
        return Err(perr(0, "missing `n m` header".into()));
    };
    if arcs.len() != m {
        return Err(perr(0, format!("header announces {m} arcs, found {}", arcs.len())));
    }
    let d = Digraph::new(n, arcs)?;
    attach_labels(d, labels)
}

fn parse_pair(fields: &[&str]) -> std::result::Result<(usize, usize), String> {
    if fields.len() != 2 {
        return Err(format!("expected two integers, got {} field(s)", fields.len()));
    }
    let a = fields[0].parse().map_err(|_| format!("not an integer: `{}`", fields[0]))?;
    let b = fields[1].parse().map_err(|_| format!("not an integer: `{}`", fields[1]))?;
    Ok((a, b))
}

fn attach_labels(d: Digraph, labels: BTreeMap<usize, String>) -> Result<Digraph> {
    if labels.is_empty() {
        return Ok(d);
    }
    let names: Vec<String> = (0..d.n()).map(|i| labels.get(&i).cloned().unwrap_or_else(|| i.to_string())).collect();
    d.with_labels(names)
}

#[derive(Serialize, Deserialize)]
struct JsonDigraph {
    n: usize,
    arcs: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<BTreeMap<String, String>>,
}

pub fn to_json_value(d: &Digraph) -> serde_json::Value {
    let j = JsonDigraph {
        n: d.n(),
        arcs: d.arcs().iter().map(|&(u, v)| [u, v]).collect(),
        labels: d.labels().map(|l| l.iter().enumerate().map(|(i, s)| (i.to_string(), s.clone())).collect()),
    };
    serde_json::to_value(j).expect("serializable")
}

pub fn to_json(d: &Digraph) -> String {
    to_json_value(d).to_string()
}

pub fn parse_json(text: &str) -> Result<Digraph> {
    let j: JsonDigraph = serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })?;
    let d = Digraph::new(j.n, j.arcs.iter().map(|a| (a[0], a[1])))?;
    let mut labels = BTreeMap::new();
    for (k, v) in j.labels.unwrap_or_default() {
        let i: usize = k.parse().map_err(|_| Error::Parse { line: 0, message: format!("bad label key `{k}`") })?;
        if i >= d.n() {
            return Err(Error::Parse { line: 0, message: format!("label index {i} out of range") });
        }
        labels.insert(i, v);
    }
    attach_labels(d, labels)
}

pub fn to_dot(d: &Digraph) -> String {
    let mut s = String::from("digraph G {\n");
    for v in 0..d.n() {
        writeln!(s, "  {v} [label=\"{}\"];", d.name(v).replace('"', "\\\"")).unwrap();
    }
    for &(u, v) in d.arcs() {
        writeln!(s, "  {u} -> {v};").unwrap();
    }
    s.push_str("}\n");
    s
}

/// Parses either format, picking JSON when the text starts with `{`.
pub fn parse_any(text: &str) -> Result<Digraph> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_edge_list(text)
    }
}
