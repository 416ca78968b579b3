//! Structural bounds on cop numbers.

use serde::Serialize;

use crate::digraph::{Digraph, UndirectedView};
use crate::error::{Error, Result};
use crate::families::AlternatingBfsCertificate;

pub const MAX_EXACT_VERTICES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UndirectedBounds {
    pub domination_number: usize,
    pub independence_number: usize,
}

fn masks(g: &UndirectedView) -> Vec<u32> {
    (0..g.n()).map(|v| g.neighbors(v).iter().fold(1u32 << v, |m, &w| m | (1 << w))).collect()
}

/// Exact domination and independence numbers.
pub fn undirected_bounds(g: &UndirectedView) -> Result<UndirectedBounds> {
    if g.n() > MAX_EXACT_VERTICES {
        return Err(Error::TooLarge { what: "exact bound vertices", size: g.n(), max: MAX_EXACT_VERTICES });
    }
    Ok(UndirectedBounds { domination_number: domination_number(g), independence_number: independence_number(g) })
}

fn domination_number(g: &UndirectedView) -> usize {
    let n = g.n();
    let closed = masks(g);
    let full = (1u32 << n) - 1;
    fn pick(closed: &[u32], full: u32, left: usize, covered: u32) -> bool {
        if covered == full {
            return true;
        }
        if left == 0 {
            return false;
        }
        // the lowest undominated vertex must be covered by one of its closed neighbors
        let u = (!covered & full).trailing_zeros() as usize;
        (0..closed.len()).filter(|&v| closed[v] >> u & 1 == 1).any(|v| pick(closed, full, left - 1, covered | closed[v]))
    }
    (1..=n).find(|&k| pick(&closed, full, k, 0)).unwrap_or(n)
}

fn independence_number(g: &UndirectedView) -> usize {
    let closed = masks(g);
    fn best(closed: &[u32], cand: u32) -> usize {
        if cand == 0 {
            return 0;
        }
        let v = cand.trailing_zeros() as usize;
        // either v is in the set, or some neighbor of v is
        let with = 1 + best(closed, cand & !closed[v]);
        let without = if (closed[v] & cand).count_ones() > 1 { best(closed, cand & !(1 << v)) } else { 0 };
        with.max(without)
    }
    let all = (1u32 << g.n()) - 1;
    best(&closed, all)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// Lower bound on the cop number of the digraph.
    Lower,
    /// Upper bound on the cop number of the undirected underlying graph.
    UndirectedUpper,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub kind: BoundKind,
    pub applicable: bool,
    pub value: Option<usize>,
    pub reason: String,
}

impl Bound {
    fn yes(kind: BoundKind, value: usize, reason: impl Into<String>) -> Self {
        Bound { kind, applicable: true, value: Some(value), reason: reason.into() }
    }

    fn no(kind: BoundKind, reason: impl Into<String>) -> Self {
        Bound { kind, applicable: false, value: None, reason: reason.into() }
    }

    /// The value when the bound applies.
    pub fn get(&self) -> Option<usize> {
        if self.applicable {
            self.value
        } else {
            None
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub source_count: Bound,
    pub no_source_ge2: Bound,
    pub girth_delta_plus: Bound,
    pub diam_half: Bound,
    pub layered_sum: Bound,
    pub domination_upper: Bound,
    pub independence_upper: Bound,
}

impl BoundReport {
    pub fn lower_bounds(&self) -> Vec<(&'static str, &Bound)> {
        vec![
            ("source_count", &self.source_count),
            ("no_source_ge2", &self.no_source_ge2),
            ("girth_delta_plus", &self.girth_delta_plus),
            ("diam_half", &self.diam_half),
            ("layered_sum", &self.layered_sum),
        ]
    }

    /// Largest applicable lower bound.
    pub fn best_lower(&self) -> usize {
        self.lower_bounds().iter().filter_map(|(_, b)| b.get()).max().unwrap_or(1)
    }
}

/// Lower bounds for `d`, plus the undirected upper bounds of its underlying
/// graph. The BFS-layer bounds need the certificate of the alternating BFS
/// orientation that produced `d`.
pub fn digraph_lower_bounds(d: &Digraph, certificate: Option<&AlternatingBfsCertificate>) -> BoundReport {
    use BoundKind::*;
    let g = d.underlying();
    let sources = d.sources().len();
    let source_count = if sources > 0 {
        Bound::yes(Lower, sources, "each source needs its own cop")
    } else {
        Bound::no(Lower, "no sources")
    };
    let no_source_ge2 = if sources == 0 && d.is_oriented() {
        Bound::yes(Lower, 2, "oriented graph without a source")
    } else if sources > 0 {
        Bound::no(Lower, "has a source")
    } else {
        Bound::no(Lower, "has opposite arcs")
    };
    let girth_delta_plus = match g.girth() {
        Some(girth) if girth < 5 => Bound::no(Lower, format!("underlying girth {girth} < 5")),
        girth => Bound::yes(
            Lower,
            d.min_out_degree(),
            match girth {
                Some(x) => format!("underlying girth {x}"),
                None => "underlying graph is a forest".into(),
            },
        ),
    };
    let (diam_half, layered_sum) = layer_bounds(d, &g, certificate);
    let (domination_upper, independence_upper) = match undirected_bounds(&g) {
        Ok(u) => (
            Bound::yes(UndirectedUpper, u.domination_number, "domination number of the underlying graph"),
            Bound::yes(UndirectedUpper, u.independence_number, "independence number of the underlying graph"),
        ),
        Err(_) => {
            let why = format!("more than {MAX_EXACT_VERTICES} vertices");
            (Bound::no(UndirectedUpper, why.clone()), Bound::no(UndirectedUpper, why))
        }
    };
    BoundReport { source_count, no_source_ge2, girth_delta_plus, diam_half, layered_sum, domination_upper, independence_upper }
}

fn layer_bounds(d: &Digraph, g: &UndirectedView, cert: Option<&AlternatingBfsCertificate>) -> (Bound, Bound) {
    use BoundKind::Lower;
    let Some(cert) = cert else {
        return (Bound::no(Lower, "no alternating BFS certificate"), Bound::no(Lower, "no alternating BFS certificate"));
    };
    if !certificate_matches(d, g, cert) {
        let why = "certificate does not match the digraph";
        return (Bound::no(Lower, why), Bound::no(Lower, why));
    }
    let diam = g.diameter().unwrap_or(0);
    let ecc = g.eccentricity(cert.root).unwrap_or(0);
    let diam_half = if ecc == diam {
        Bound::yes(Lower, diam.div_ceil(2), format!("root is peripheral, diameter {diam}"))
    } else {
        Bound::no(Lower, format!("root eccentricity {ecc} below diameter {diam}"))
    };
    let layered_sum = if cert.recursive {
        let total: usize = cert
            .levels
            .iter()
            .step_by(2)
            .map(|level| {
                let sub = g.induced(level);
                let widest = sub.components().iter().map(|c| sub.induced(c).diameter().unwrap_or(0)).max().unwrap_or(0);
                widest.div_ceil(2)
            })
            .sum();
        Bound::yes(Lower, total, "sum over even levels of half the level diameter")
    } else {
        Bound::no(Lower, "levels not oriented recursively")
    };
    (diam_half, layered_sum)
}

/// Levels are BFS levels of `g` and inter-level arcs point into odd levels.
fn certificate_matches(d: &Digraph, g: &UndirectedView, cert: &AlternatingBfsCertificate) -> bool {
    if cert.root >= g.n() {
        return false;
    }
    let dist = g.distances_from(cert.root);
    let mut seen = 0;
    for (i, level) in cert.levels.iter().enumerate() {
        for &v in level {
            if dist.get(v).copied().flatten() != Some(i) {
                return false;
            }
            seen += 1;
        }
    }
    seen == d.n()
        && d.arcs().iter().all(|&(u, v)| {
            let (lu, lv) = (dist[u].unwrap(), dist[v].unwrap());
            lu == lv || lv % 2 == 1
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{alternating_bfs_orientation, cycle_graph, directed_cycle, path_graph, petersen};

    #[test]
    fn classical_values() {
        assert_eq!(
            undirected_bounds(&petersen()).unwrap(),
            UndirectedBounds { domination_number: 3, independence_number: 4 }
        );
        let c5 = cycle_graph(5).unwrap();
        assert_eq!(undirected_bounds(&c5).unwrap(), UndirectedBounds { domination_number: 2, independence_number: 2 });
        let k1 = UndirectedView::new(1, []).unwrap();
        assert_eq!(undirected_bounds(&k1).unwrap(), UndirectedBounds { domination_number: 1, independence_number: 1 });
    }

    #[test]
    fn three_cycle_report() {
        let r = digraph_lower_bounds(&directed_cycle(3).unwrap(), None);
        assert_eq!(r.no_source_ge2.get(), Some(2));
        assert!(!r.girth_delta_plus.applicable);
        assert!(!r.source_count.applicable);
        assert!(!r.diam_half.applicable);
    }

    #[test]
    fn two_sources() {
        let d = Digraph::new(3, [(0, 2), (1, 2)]).unwrap();
        let r = digraph_lower_bounds(&d, None);
        assert_eq!(r.source_count.get(), Some(2));
        assert_eq!(r.best_lower(), 2);
    }

    #[test]
    fn layered_bounds_need_a_certificate() {
        let a = alternating_bfs_orientation(&path_graph(9).unwrap(), 0, true).unwrap();
        let r = digraph_lower_bounds(&a.digraph, Some(&a.certificate));
        assert_eq!(r.diam_half.get(), Some(4));
        assert_eq!(r.layered_sum.get(), Some(0));
        let mid = alternating_bfs_orientation(&path_graph(9).unwrap(), 4, false).unwrap();
        assert!(!digraph_lower_bounds(&mid.digraph, Some(&mid.certificate)).diam_half.applicable);
        let other = directed_cycle(9).unwrap();
        assert!(!digraph_lower_bounds(&other, Some(&a.certificate)).diam_half.applicable);
    }
}
