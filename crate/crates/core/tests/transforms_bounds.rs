use orcops::bounds::{digraph_lower_bounds, undirected_bounds};
use orcops::canon::isomorphic;
use orcops::families::*;
use orcops::game::{cop_number, CopNumber, Variant};
use orcops::transforms::*;
use orcops::{contract, Digraph};

#[test]
fn line_digraph_counts() {
    // complete ograph on 3 vertices as a cyclic triangle: line digraph is again a 3-cycle
    let c3 = directed_cycle(3).unwrap();
    let l = line_digraph(&c3).unwrap();
    assert_eq!((l.digraph.n(), l.digraph.arc_count()), (3, 3));
    // arcs of L(D) = sum over v of indeg(v) * outdeg(v)
    let d = random_outerplanar_strong(9, 2).unwrap();
    let want: usize = (0..d.n()).map(|v| d.in_degree(v) * d.out_degree(v)).sum();
    assert_eq!(line_digraph(&d).unwrap().digraph.arc_count(), want);
}

#[test]
fn coresets_of_iterated_line_digraphs() {
    let d = random_outerplanar_strong(7, 11).unwrap();
    let l = line_digraph(&d).unwrap().digraph;
    let p = coreset_partition(&l).unwrap();
    assert_eq!(p.len(), d.n());
    for b in &p.blocks {
        assert!(l.underlying().is_independent(&b.members));
    }
    assert!(isomorphic(&contract(&l, &p.member_lists(), true).unwrap(), &d).unwrap());
}

#[test]
fn contraction_limits() {
    let s = contraction_sequence(&incidence_block_cycle(2).unwrap(), None, SinkPolicy::Reject).unwrap();
    assert_eq!(s.sizes, vec![28, 4]);
    assert_eq!(s.limit_shape, LimitShape::CycleWithTail);
    assert_eq!(s.limit_cop_number, CopNumber::Exactly(2));
    let err = contraction_sequence(&directed_path(3).unwrap(), None, SinkPolicy::Reject).unwrap_err();
    assert!(matches!(err, orcops::Error::SinkPresent { step: Some(0), .. }));
}

#[test]
fn bounds_hold_on_small_orientations() {
    for seed in 0..15 {
        let g = random_connected_graph(7, 0.35, seed).unwrap();
        let a = alternating_bfs_orientation(&g, 0, seed % 2 == 0).unwrap();
        let r = digraph_lower_bounds(&a.digraph, Some(&a.certificate));
        let c = cop_number(&a.digraph, Variant::Standard, 7).unwrap().exact().unwrap();
        for (name, b) in r.lower_bounds() {
            if let Some(v) = b.get() {
                assert!(v <= c, "{name} = {v} exceeds cop number {c} (seed {seed})");
            }
        }
    }
}

#[test]
fn undirected_values() {
    let u = undirected_bounds(&path_graph(7).unwrap()).unwrap();
    assert_eq!((u.domination_number, u.independence_number), (3, 4));
    let big = path_graph(25).unwrap();
    assert!(undirected_bounds(&big).is_err());
    let d = Digraph::new(25, (0..24).map(|i| (i, i + 1))).unwrap();
    assert!(!digraph_lower_bounds(&d, None).domination_upper.applicable);
}

#[test]
fn girth_bound_on_projective_orientation() {
    let d = projective_incidence_orientation(3).unwrap();
    let r = digraph_lower_bounds(&d, None);
    assert_eq!(r.girth_delta_plus.get(), Some(2));
    assert_eq!(r.no_source_ge2.get(), Some(2));
    assert!(!digraph_lower_bounds(&incidence_block_cycle(3).unwrap(), None).girth_delta_plus.applicable);
}
