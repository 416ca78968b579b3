//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Expected values are written out here rather than taken from the library.

use std::collections::{BTreeSet, VecDeque};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rayon::prelude::*;

use orcops::canon::isomorphic;
use orcops::claims::{run_checks, CheckOptions, Status};
use orcops::cycles::simple_directed_cycles;
use orcops::families::*;
use orcops::game::*;
use orcops::orientations::{enumerate_orientations, labeled_ographs};
use orcops::transforms::*;
use orcops::{contract, Digraph, UndirectedView};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn cop(d: &Digraph, k_max: usize) -> CopNumber {
    cop_number(d, Variant::Standard, k_max).unwrap()
}

fn petersen_enumeration() -> Verdict {
    let g = petersen();
    let strong: Vec<Digraph> = enumerate_orientations(&g, |d| d.is_strongly_connected()).unwrap().collect();
    ensure(g.edge_count() == 15, "Petersen should have 15 edges")?;
    ensure(strong.len() == 1920, format!("{} strong orientations, expected 1920", strong.len()))?;
    let bad = strong.par_iter().filter(|d| cop(d, 3) != CopNumber::Exactly(2)).count();
    ensure(bad == 0, format!("{bad} strong orientations without cop number 2"))?;
    let bi = cop(&g.bidirected(), 4);
    ensure(bi == CopNumber::Exactly(3), format!("bidirected Petersen: {bi}"))?;
    Ok("1920/32768 strong, all cop number 2; bidirected 3".into())
}

fn solver_oracle() -> Verdict {
    let graphs: Vec<Digraph> = labeled_ographs(4).unwrap().collect();
    ensure(graphs.len() == 729, format!("{} labeled ographs on 4 vertices", graphs.len()))?;
    for k in 1..=2 {
        let spec = GameSpec::standard(k);
        let bad = graphs
            .par_iter()
            .filter(|d| solve_game(d, &spec).unwrap().capture_time() != oracle_value(d, &spec).unwrap())
            .count();
        ensure(bad == 0, format!("{bad} disagreements at k = {k}"))?;
    }
    Ok("1458 solver/oracle comparisons agree".into())
}

fn fig1() -> Verdict {
    let d = fig1_counterexample();
    ensure(d.sources().len() == 1, format!("{} sources", d.sources().len()))?;
    let c = cop(&d, 3);
    ensure(c == CopNumber::Exactly(2), format!("cop number {c}"))?;
    let cycles = simple_directed_cycles(&d, d.n(), 1000);
    ensure(cycles.cycles.len() == 5, format!("{} simple cycles", cycles.cycles.len()))?;
    for cyc in &cycles.cycles {
        ensure(is_cop_dominated(&d, cyc).unwrap(), format!("cycle {cyc:?} is not cop-dominated"))?;
    }
    Ok("one source, cop number 2, 5 cop-dominated cycles".into())
}

fn ring() -> Verdict {
    let mut times = Vec::new();
    for k in 3..=12 {
        let d = ring_digraph(k).unwrap();
        ensure(d.n() == 2 * k + 1, format!("R({k}) has {} vertices", d.n()))?;
        match solve_game(&d, &GameSpec::standard(1)).unwrap().capture_time() {
            Outcome::Capture(t) => times.push(t as i64),
            Outcome::RobberWin => return Err(format!("R({k}) is not cop-win")),
        }
    }
    let second: BTreeSet<i64> = times.windows(3).map(|w| w[2] - 2 * w[1] + w[0]).collect();
    ensure(second.len() == 1 && second.iter().all(|&s| s > 0), format!("second differences {second:?}"))?;
    let r = run_checks(Some("ring-capture"), &CheckOptions::default());
    ensure(r[0].status == Status::Discrepancy, format!("ring-capture reported {:?}", r[0].status))?;
    Ok(format!("capture times {times:?}, second difference {second:?}, discrepancy recorded"))
}

fn line_digraph_equality() -> Verdict {
    let graphs: Vec<Digraph> = (2..=5)
        .flat_map(|n| labeled_ographs(n).unwrap())
        .filter(|d| d.arc_count() > 0 && d.is_strongly_connected())
        .collect();
    let bad = graphs.par_iter().filter(|d| cop(d, 4) != edge_cop_number(d, 4).unwrap()).count();
    ensure(bad == 0, format!("{bad} of {} strong ographs differ", graphs.len()))?;
    for n in 3..=8 {
        let s = out_star(n).unwrap();
        ensure(cop(&s, 1) == CopNumber::Exactly(1), format!("out-star {n} not cop-win"))?;
        let e = edge_cop_number(&s, n).unwrap();
        ensure(e == CopNumber::Exactly(n - 1), format!("out-star {n}: ecop {e}"))?;
    }
    Ok(format!("{} strong ographs, stars 3..8", graphs.len()))
}

fn coresets() -> Verdict {
    let graphs: Vec<Digraph> = (2..=5)
        .flat_map(|n| labeled_ographs(n).unwrap())
        .filter(|d| d.arc_count() > 0 && d.is_strongly_connected())
        .collect();
    let bad = graphs
        .par_iter()
        .filter(|d| {
            let l = line_digraph(d).unwrap().digraph;
            let p = coreset_partition(&l).unwrap();
            p.len() != d.n() || !isomorphic(&contract(&l, &p.member_lists(), true).unwrap(), d).unwrap()
        })
        .count();
    ensure(bad == 0, format!("{bad} line digraphs fail to contract back"))?;

    let b = incidence_block_cycle(3).unwrap();
    let bc = cop(&b, 2);
    ensure(bc.at_least(2), format!("block construction cop number {bc}"))?;
    let seq = contraction_sequence(&b, None, SinkPolicy::Reject).unwrap();
    let c4 = Digraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    ensure(isomorphic(seq.limit(), &c4).unwrap(), format!("block construction contracts to sizes {:?}", seq.sizes))?;
    ensure(cop(seq.limit(), 3) == CopNumber::Exactly(2), "limit 4-cycle should need 2 cops")?;

    for i in 0..100u64 {
        let base = random_outerplanar_strong(3 + (i as usize % 10), i).unwrap();
        let d = if i % 2 == 1 { line_digraph(&base).unwrap().digraph } else { base };
        let s = contraction_sequence(&d, None, SinkPolicy::Reject).unwrap();
        let l = s.limit();
        let ok_shape = is_path_shape(l) || is_cycle_with_tail(l);
        let c = cop(l, 2);
        ensure(ok_shape, format!("seed {i}: limit is neither a path nor a cycle with tail"))?;
        ensure(matches!(c, CopNumber::Exactly(1 | 2)), format!("seed {i}: limit cop number {c}"))?;
    }
    Ok(format!("{} line digraphs recovered; blocks contract to C4; 100 sequences converge", graphs.len()))
}

fn is_path_shape(d: &Digraph) -> bool {
    let n = d.n();
    d.arc_count() + 1 == n
        && (0..n).all(|v| d.in_degree(v) <= 1 && d.out_degree(v) <= 1)
        && d.underlying().is_connected()
}

fn is_cycle_with_tail(d: &Digraph) -> bool {
    let n = d.n();
    d.arc_count() == n
        && (0..n).all(|v| d.in_degree(v) == 1 && d.out_degree(v) <= 2)
        && (0..n).filter(|&v| d.out_degree(v) == 2).count() <= 1
        && d.underlying().is_connected()
}

fn cycles() -> Verdict {
    for n in 3..=12 {
        let c = Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
        let s = cop(&c, 3);
        ensure(s == CopNumber::Exactly(2), format!("C{n} standard: {s}"))?;
        let want = n.div_ceil(2);
        let a = cop_number(&c, Variant::FullyActive, want + 1).unwrap();
        ensure(a == CopNumber::Exactly(want), format!("C{n} fully active: {a}, expected {want}"))?;
    }
    Ok("standard 2, fully active ceil(n/2) for n = 3..12".into())
}

fn tournaments() -> Verdict {
    let mut checked = 0;
    let mut all = Vec::new();
    for n in 1..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for m in 0..1u32 << pairs.len() {
            let arcs = pairs.iter().enumerate().map(|(i, &(u, v))| if m >> i & 1 == 1 { (v, u) } else { (u, v) });
            all.push(Digraph::new(n, arcs).unwrap());
        }
    }
    all.extend((0..200).map(|s| random_tournament(7, 1000 + s).unwrap()));
    for t in &all {
        let dominating = (0..t.n()).any(|v| (0..t.n()).all(|w| w == v || t.has_arc(v, w)));
        let copwin = cop(t, 1) == CopNumber::Exactly(1);
        ensure(dominating == copwin, format!("tournament on {} vertices breaks the equivalence", t.n()))?;
        checked += 1;
    }
    Ok(format!("{checked} tournaments"))
}

fn max_independent(g: &UndirectedView) -> Vec<usize> {
    let n = g.n();
    let mut best = Vec::new();
    for m in 0u32..1 << n {
        let s: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
        if s.len() > best.len() && s.iter().all(|&a| s.iter().all(|&b| !g.has_edge(a, b))) {
            best = s;
        }
    }
    best
}

fn orientation_bounds() -> Verdict {
    for i in 0..50u64 {
        let n = 4 + (i as usize % 9);
        let g = random_connected_graph(n, 0.3, 77 + i).unwrap();
        let d = copwin_orientation(&g, 0).unwrap();
        ensure(cop(&d, 1) == CopNumber::Exactly(1), format!("graph {i} (n = {n}) not cop-win"))?;
    }
    let p9 = alternating_bfs_orientation(&path_graph(9).unwrap(), 0, false).unwrap().digraph;
    let c = cop(&p9, 5);
    ensure(c.at_least(4), format!("alternating P9: {c}"))?;
    let g = petersen();
    let x = max_independent(&g);
    ensure(x.len() == 4, format!("independence number {}", x.len()))?;
    let pc = cop(&independent_set_source_orientation(&g, &x).unwrap(), 3);
    ensure(pc == CopNumber::MoreThan(3), format!("Petersen source orientation: {pc}"))?;
    Ok(format!("50 cop-win orientations; P9 {c}; Petersen {pc}"))
}

fn outerplanar() -> Verdict {
    for i in 0..50u64 {
        let n = 3 + (i as usize % 10);
        let d = random_outerplanar_strong(n, 500 + i).unwrap();
        ensure(d.n() == n && d.n() <= 12, "size out of range")?;
        ensure(d.is_strongly_connected() && d.is_oriented(), format!("sample {i} not a strong ograph"))?;
        ensure(is_outerplanar(&d.underlying()).unwrap(), format!("sample {i} not outerplanar"))?;
        let c = cop(&d, 3);
        ensure(c == CopNumber::Exactly(2), format!("sample {i} (n = {n}): {c}"))?;
    }
    Ok("50 samples, cop number 2".into())
}

fn projective() -> Verdict {
    let mut parts = Vec::new();
    for (q, delta) in [(2, 1), (3, 2)] {
        let d = projective_incidence_orientation(q).unwrap();
        let m = q * q + q + 1;
        ensure(d.n() == 2 * m, format!("q = {q}: {} vertices", d.n()))?;
        ensure(d.is_strongly_connected(), format!("q = {q}: not strong"))?;
        ensure(d.underlying().girth() == Some(6), format!("q = {q}: girth {:?}", d.underlying().girth()))?;
        ensure(d.min_out_degree() == delta, format!("q = {q}: min out-degree {}", d.min_out_degree()))?;
        let c = cop(&d, 3);
        ensure(c.at_least(delta) && c.exact().is_some(), format!("q = {q}: {c}"))?;
        parts.push(format!("q={q}: {c}"));
    }
    Ok(parts.join(", "))
}

fn bfs(d: &Digraph, s: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; d.n()];
    dist[s] = Some(0);
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for &v in d.out_neighbors(u) {
            if dist[v].is_none() {
                dist[v] = Some(dist[u].unwrap() + 1);
                q.push_back(v);
            }
        }
    }
    dist
}

fn pathologies() -> Verdict {
    let f2 = fig2_distance(20).unwrap();
    let t2 = solve_game(&f2, &GameSpec::standard(1)).unwrap();
    let q = TraceExplorer::new(&t2).unwrap().distance_step(|a, b| a == Some(2) && b == Some(6));
    ensure(q.exists, "no optimal fig2 trace with distance 2 then 6")?;
    let w = q.witness.unwrap();
    let dist: Vec<Option<usize>> = w.records.iter().map(|r| bfs(&f2, r.cops[0])[r.robber]).collect();
    ensure(dist.windows(2).any(|p| p == [Some(2), Some(6)]), format!("witness distances {dist:?}"))?;

    let f3 = fig3_revisit(20).unwrap();
    let t3 = solve_game(&f3, &GameSpec::standard(1)).unwrap();
    let ex = TraceExplorer::new(&t3).unwrap();
    let v1 = f3.vertex("v1").unwrap();
    let r = ex.revisit(Some(&[v1])).unwrap();
    ensure(r.exists, "no optimal fig3 trace revisiting v1")?;
    let w = r.witness.unwrap();
    let visits = w.records.iter().filter(|rec| rec.cops[0] == v1).count();
    let left = w.records.windows(2).any(|p| p[0].cops[0] == v1 && p[1].cops[0] != v1);
    ensure(visits >= 2 && left, "witness does not leave and return to v1")?;
    let capt = t3.capture_time();
    ensure(capt == Outcome::Capture(14), format!("fig3 capture time {capt:?}"))?;
    Ok(format!("fig2 distances {dist:?}; fig3 capture 14"))
}

fn sts() -> Verdict {
    let mut queries = 0;
    let mut two = 0;
    for n in [9usize, 15] {
        for seed in 0..20 {
            let t = sts_tournament(n, seed).unwrap();
            for r in 0..n {
                for c1 in 0..n {
                    for c2 in [None, Some((c1 + 5) % n)] {
                        let cops: Vec<usize> = std::iter::once(c1).chain(c2).collect();
                        let direct = (0..n).find(|&s| {
                            (s == r || t.has_arc(r, s)) && cops.iter().all(|&c| c != s && !t.has_arc(c, s))
                        });
                        ensure(safe_vertex_check(&t, r, &cops).unwrap() == direct, format!("STS({n}) seed {seed} r {r} cops {cops:?}"))?;
                        queries += 1;
                    }
                }
            }
            if n == 15 && cop(&t, 1).at_least(2) {
                two += 1;
            }
        }
    }
    ensure(two > 0, "no STS(15) orientation needs two cops")?;
    Ok(format!("{queries} queries agree; {two}/20 STS(15) need at least 2 cops"))
}

fn main() {
    let criteria: [Criterion; 13] = [
        ("petersen orientations", petersen_enumeration),
        ("solver matches oracle", solver_oracle),
        ("cop-dominated counterexample", fig1),
        ("ring capture time", ring),
        ("line digraph cop number", line_digraph_equality),
        ("coresets and contraction", coresets),
        ("directed cycles", cycles),
        ("tournaments", tournaments),
        ("orientation bounds", orientation_bounds),
        ("outerplanar", outerplanar),
        ("projective planes", projective),
        ("optimal-play pathologies", pathologies),
        ("steiner triple tournaments", sts),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e.downcast_ref::<String>().cloned().or(e.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let ms = t.elapsed().as_millis();
        match result {
            Ok(msg) => println!("PASS {:>2} {name} ({ms} ms): {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({ms} ms): {msg}", i + 1)
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
