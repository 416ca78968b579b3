use proptest::prelude::*;

use orcops::canon::{canonical_form, isomorphic};
use orcops::io::{parse_any, parse_edge_list, to_edge_list, to_json};
use orcops::Digraph;

/// Random oriented graph on `n <= 8` vertices plus a permutation of its vertices.
fn ograph_and_perm() -> impl Strategy<Value = (Digraph, Vec<usize>)> {
    (1usize..=8).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (prop::collection::vec(0u8..3, pairs), Just((0..n).collect::<Vec<_>>()).prop_shuffle()).prop_map(
            move |(dirs, perm)| {
                let mut arcs = Vec::new();
                let mut i = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        match dirs[i] {
                            1 => arcs.push((u, v)),
                            2 => arcs.push((v, u)),
                            _ => {}
                        }
                        i += 1;
                    }
                }
                (Digraph::new(n, arcs).unwrap(), perm)
            },
        )
    })
}

fn reach_all(d: &Digraph) -> bool {
    let n = d.n();
    let mut r = vec![vec![false; n]; n];
    for v in 0..n {
        r[v][v] = true;
    }
    for &(u, v) in d.arcs() {
        r[u][v] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    r.iter().all(|row| row.iter().all(|&x| x))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_form_ignores_labels((d, perm) in ograph_and_perm()) {
        let p = d.permuted(&perm);
        prop_assert_eq!(canonical_form(&d).unwrap(), canonical_form(&p).unwrap());
        prop_assert!(isomorphic(&d, &p).unwrap());
    }

    #[test]
    fn strong_iff_all_pairs_reachable((d, _) in ograph_and_perm()) {
        prop_assert_eq!(d.is_strongly_connected(), reach_all(&d));
        let scc = d.strong_components();
        prop_assert_eq!(scc.is_strongly_connected(), reach_all(&d));
    }

    #[test]
    fn formats_round_trip((d, _) in ograph_and_perm()) {
        prop_assert_eq!(parse_edge_list(&to_edge_list(&d)).unwrap(), d.clone());
        prop_assert_eq!(parse_any(&to_json(&d)).unwrap(), d);
    }

    #[test]
    fn reversal_is_an_involution((d, _) in ograph_and_perm()) {
        prop_assert_eq!(d.reversed().reversed(), d.clone());
        prop_assert_eq!(d.reversed().sources(), d.sinks());
    }
}

#[test]
fn non_isomorphic_pair_is_distinguished() {
    let path = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
    let out = Digraph::new(3, [(0, 1), (0, 2)]).unwrap();
    assert!(!isomorphic(&path, &out).unwrap());
    assert_ne!(canonical_form(&path).unwrap(), canonical_form(&out).unwrap());
}
