//! Fixed small examples and the ring digraphs.

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Builds a labeled digraph from named arcs.
fn named(labels: &[String], arcs: &[(&str, &str)]) -> Digraph {
    let idx = |s: &str| labels.iter().position(|l| l == s).unwrap_or_else(|| panic!("unknown vertex {s}"));
    Digraph::new(labels.len(), arcs.iter().map(|&(u, v)| (idx(u), idx(v))))
        .and_then(|d| d.with_labels(labels.iter().cloned()))
        .expect("valid figure")
}

/// Outer k-cycle `O1..Ok`, inner (k-1)-cycle `I1..I(k-1)`, hub `C` and
/// start vertex `R`. `I(k-1)` is the inner vertex with two outer arcs.
/// For `k = 3` the inner cycle is a pair of opposite arcs.
pub fn ring_digraph(k: usize) -> Result<Digraph> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("ring digraph needs k >= 3, got {k}")));
    }
    let o = |j: usize| j - 1;
    let i = |j: usize| k + j - 1;
    let c = 2 * k - 1;
    let r = 2 * k;
    let mut arcs = Vec::new();
    for j in 1..=k {
        arcs.push((o(j), o(j % k + 1)));
    }
    for j in 1..k {
        arcs.push((i(j), i(j % (k - 1) + 1)));
        arcs.push((i(j), o(j + 1)));
        arcs.push((c, i(j)));
    }
    arcs.push((i(k - 1), o(1)));
    arcs.push((i(1), r));
    arcs.push((r, o(1)));
    let mut labels: Vec<String> = (1..=k).map(|j| format!("O{j}")).collect();
    labels.extend((1..k).map(|j| format!("I{j}")));
    labels.push("C".into());
    labels.push("R".into());
    Digraph::new(2 * k + 1, arcs)?.with_labels(labels)
}

/// The 12-vertex digraph with one source in which every directed cycle is
/// cop-dominated but one cop does not suffice.
pub fn fig1_counterexample() -> Digraph {
    let labels: Vec<String> = "abcdefghijkl".chars().map(String::from).collect();
    named(
        &labels,
        &[
            ("a", "b"),
            ("a", "g"),
            ("a", "c"),
            ("a", "d"),
            ("a", "e"),
            ("a", "f"),
            ("b", "g"),
            ("g", "e"),
            ("e", "f"),
            ("f", "d"),
            ("d", "c"),
            ("c", "b"),
            ("g", "c"),
            ("d", "e"),
            ("g", "h"),
            ("b", "i"),
            ("e", "i"),
            ("e", "j"),
            ("f", "k"),
            ("c", "j"),
            ("c", "k"),
            ("d", "l"),
            ("h", "j"),
            ("l", "j"),
            ("j", "i"),
            ("i", "h"),
            ("j", "k"),
            ("k", "l"),
        ],
    )
}

fn chain_labels(n: usize) -> Vec<String> {
    let mut labels = vec!["a".to_string()];
    labels.extend((1..=12).map(|i| format!("v{i}")));
    labels.extend((1..=n).map(|i| format!("w{i}")));
    labels.extend((1..=n).map(|i| format!("u{i}")));
    labels
}

fn chain_arcs(n: usize) -> Vec<(String, String)> {
    let mut arcs = Vec::new();
    for i in 1..=12 {
        arcs.push(("a".to_string(), format!("v{i}")));
        arcs.push((format!("v{i}"), format!("v{}", i % 12 + 1)));
    }
    for i in 1..=n {
        arcs.push(("v1".into(), format!("w{i}")));
        arcs.push(("v7".into(), format!("u{i}")));
    }
    for i in 1..n {
        arcs.push((format!("w{i}"), format!("w{}", i + 1)));
        arcs.push((format!("u{}", i + 1), format!("u{i}")));
    }
    arcs.push(("u1".into(), "w1".into()));
    arcs.push((format!("w{n}"), format!("u{n}")));
    arcs
}

fn build(n: usize, extra: Option<(String, String)>) -> Result<Digraph> {
    if n < 13 {
        return Err(Error::InvalidParameter(format!("chain length must be at least 13, got {n}")));
    }
    let labels = chain_labels(n);
    let mut arcs = chain_arcs(n);
    arcs.extend(extra);
    let refs: Vec<(&str, &str)> = arcs.iter().map(|(u, v)| (u.as_str(), v.as_str())).collect();
    Ok(named(&labels, &refs))
}

/// Source `a` over a directed 12-cycle `v1..v12`, feeding a forward chain
/// `w1..wn` from `v1` and a backward chain `un..u1` from `v7`, joined by
/// `u1 -> w1` and `wn -> un`.
pub fn fig2_distance(n: usize) -> Result<Digraph> {
    build(n, None)
}

/// [`fig2_distance`] plus the arc `u(n-5) -> w1`.
pub fn fig3_revisit(n: usize) -> Result<Digraph> {
    build(n, Some((format!("u{}", n.saturating_sub(5)), "w1".into())))
}
