use orcops::families::*;
use orcops::game::{check_tournament, cop_number, CopNumber, Variant};

#[test]
fn ring_shape() {
    // the inner 2-cycle of R(3) is a pair of opposite arcs
    assert!(!ring_digraph(3).unwrap().is_oriented());
    for k in 3..=8 {
        let d = ring_digraph(k).unwrap();
        assert_eq!(d.n(), 2 * k + 1);
        assert_eq!(d.is_oriented(), k > 3);
        // the external start R has one way in and one way out
        let r = d.vertex("R").unwrap();
        assert_eq!((d.in_degree(r), d.out_degree(r)), (1, 1));
        assert_eq!(d.sources(), vec![d.vertex("C").unwrap()]);
    }
    assert!(ring_digraph(2).is_err());
}

#[test]
fn figure_sizes() {
    assert_eq!(fig1_counterexample().n(), 12);
    let f2 = fig2_distance(20).unwrap();
    let f3 = fig3_revisit(20).unwrap();
    assert_eq!(f2.n(), 1 + 12 + 40);
    assert_eq!(f3.arc_count(), f2.arc_count() + 1);
    assert!(f3.has_arc(f3.vertex("u15").unwrap(), f3.vertex("w1").unwrap()));
    assert!(fig2_distance(12).is_err());
}

#[test]
fn projective_counts() {
    for (q, m) in [(2, 7), (3, 13), (4, 21)] {
        let g = projective_incidence_graph(q).unwrap();
        assert_eq!(g.n(), 2 * m);
        assert!((0..g.n()).all(|v| g.degree(v) == q + 1));
        assert_eq!(g.girth(), Some(6));
    }
    assert!(projective_incidence_graph(5).is_err());
}

#[test]
fn sts_tournaments_are_regular() {
    let t = sts_tournament(15, 3).unwrap();
    check_tournament(&t).unwrap();
    assert!((0..15).all(|v| t.out_degree(v) == 7));
}

#[test]
fn family_registry_builds_every_id() {
    let p = FamilyParams { n: Some(7), k: Some(4), q: Some(2), seed: 1 };
    for id in FAMILY_IDS {
        let params = match *id {
            "fig2" | "fig3" => FamilyParams { n: None, ..p },
            "sts" => FamilyParams { n: Some(9), ..p },
            _ => p,
        };
        let d = build_family(id, &params).unwrap().into_digraph();
        assert!(d.n() > 0, "{id}");
    }
    assert!(build_family("nope", &p).is_err());
    assert!(build_family("fig2", &FamilyParams { n: Some(7), ..p }).is_err());
}

#[test]
fn generated_orientations_have_expected_sources() {
    let g = random_connected_graph(10, 0.3, 4).unwrap();
    let d = copwin_orientation(&g, 3).unwrap();
    assert_eq!(d.sources(), vec![3]);
    assert_eq!(cop_number(&d, Variant::Standard, 1).unwrap(), CopNumber::Exactly(1));
    let x = [0, 2];
    let c4 = cycle_graph(4).unwrap();
    let s = independent_set_source_orientation(&c4, &x).unwrap();
    assert_eq!(s.sources(), vec![0, 2]);
    assert!(independent_set_source_orientation(&c4, &[0, 1]).is_err());
}
