mod common;

use common::{decode_graph6, floyd_warshall, graph_from_bits, naive};
use ecc_core::enumerate::enumerate_connected_graphs;
use ecc_core::families::{cartesian_product, complete, cycle, path, star};
use ecc_core::invariants::wiener_tree_edgecut;
use ecc_core::{all_pairs_distances, emit_graph6, full_report, parse_graph6, Graph, Rational};
use num_rational::Ratio;
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    // a random recursive tree (each vertex attaches to an earlier one)
    // plus random extra edges
    (1..=max_n).prop_flat_map(|n| {
        (
            prop::collection::vec(any::<prop::sample::Index>(), n.saturating_sub(1)),
            prop::collection::vec(prop::bool::weighted(0.2), n * (n - 1) / 2),
        )
            .prop_map(move |(parents, extra)| {
                let mut edges: Vec<(usize, usize)> =
                    parents.iter().enumerate().map(|(i, p)| (p.index(i + 1), i + 1)).collect();
                let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                edges.extend(pairs.zip(extra).filter(|(_, b)| *b).map(|(p, _)| p));
                edges.sort_unstable();
                edges.dedup();
                Graph::from_edge_list(n, &edges).unwrap()
            })
    })
}

#[test]
fn bfs_matches_floyd_warshall_on_all_connected_graphs_through_6() {
    for n in 1..=6 {
        for g in enumerate_connected_graphs(n).unwrap() {
            let d = all_pairs_distances(&g).unwrap();
            let fw = floyd_warshall(&g);
            for u in 0..n {
                for v in 0..n {
                    assert_eq!(u64::from(d.dist(u, v)), fw[u][v], "{}", emit_graph6(&g));
                }
            }
        }
    }
}

#[test]
fn closed_forms() {
    for n in 3..=10u64 {
        let r = full_report(&complete(n as usize).unwrap()).unwrap();
        assert_eq!((r.e1, r.e2, r.wiener), (n, n * (n - 1) / 2, n * (n - 1) / 2));
    }
    for n in 3..=20u64 {
        let r = full_report(&cycle(n as usize).unwrap()).unwrap();
        let k = n / 2;
        assert_eq!((r.e1, r.e2), (n * k * k, n * k * k));
    }
    // K_{1,n-1}: W = (n-1)^2, E1 = 1 + 4(n-1), E2 = 2(n-1)
    for n in 3..=12u64 {
        let r = full_report(&star(n as usize).unwrap()).unwrap();
        assert_eq!((r.wiener, r.e1, r.e2), ((n - 1) * (n - 1), 4 * n - 3, 2 * (n - 1)));
    }
    // P_n: W = C(n+1, 3)
    for n in 2..=15u64 {
        let r = full_report(&path(n as usize).unwrap()).unwrap();
        assert_eq!(r.wiener, (n + 1) * n * (n - 1) / 6);
    }
}

#[test]
fn graph6_fixed_strings() {
    assert_eq!(emit_graph6(&path(2).unwrap()), "A_");
    assert_eq!(emit_graph6(&path(3).unwrap()), "Bg");
    assert_eq!(emit_graph6(&complete(4).unwrap()), "C~");
    // long form header for n >= 63
    let g = path(70).unwrap();
    let s = emit_graph6(&g);
    // 70 = 1·64 + 6 in three 6-bit digits
    assert!(s.starts_with("~?@E"), "{s}");
    assert_eq!(decode_graph6(&s).1.len(), 69);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn graph6_round_trip_and_oracle_decode(g in arb_graph(30)) {
        let s = emit_graph6(&g);
        prop_assert_eq!(&parse_graph6(&s).unwrap(), &g);
        let (n, mut edges) = decode_graph6(&s);
        edges.sort_unstable();
        prop_assert_eq!(n, g.order());
        prop_assert_eq!(edges, g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(30)) {
        let c = g.complement();
        let n = g.order();
        prop_assert_eq!(c.size() + g.size(), n * (n - 1) / 2);
        prop_assert_eq!(&c.complement(), &g);
    }

    #[test]
    fn report_matches_floyd_warshall(g in arb_connected(25)) {
        let r = full_report(&g).unwrap();
        let o = naive(&g);
        prop_assert_eq!(
            (r.wiener, r.e1, r.e2, r.total_ecc, r.ecc_connectivity, u64::from(r.diam)),
            (o.wiener, o.e1, o.e2, o.total_ecc, o.xi, o.diam)
        );
        // E1 >= ε by ecc >= 1, avt = 2W/n
        prop_assert!(g.order() == 1 || r.e1 >= r.total_ecc);
        prop_assert_eq!(r.avt, Rational::new(2 * r.wiener as i64, g.order() as i64));
    }

    #[test]
    fn tree_edge_cut_wiener(parents in prop::collection::vec(any::<prop::sample::Index>(), 0..40)) {
        let edges: Vec<_> = parents.iter().enumerate().map(|(i, p)| (p.index(i + 1), i + 1)).collect();
        let t = Graph::from_edge_list(parents.len() + 1, &edges).unwrap();
        prop_assert_eq!(wiener_tree_edgecut(&t).unwrap(), naive(&t).wiener);
    }

    #[test]
    fn product_invariants_match_floyd_warshall(g in arb_connected(6), h in arb_connected(6)) {
        let p = cartesian_product(&g, &h);
        prop_assert_eq!(p.order(), g.order() * h.order());
        prop_assert_eq!(p.size(), g.size() * h.order() + h.size() * g.order());
        let (a, b, o) = (naive(&g), naive(&h), naive(&p));
        let (ng, nh) = (g.order() as u64, h.order() as u64);
        prop_assert_eq!(o.wiener, nh * nh * a.wiener + ng * ng * b.wiener);
        prop_assert_eq!(o.e1, nh * a.e1 + ng * b.e1 + 2 * a.total_ecc * b.total_ecc);
    }

    #[test]
    fn rational_agrees_with_num_rational(
        a in -100_000i64..100_000, b in 1i64..100_000,
        c in -100_000i64..100_000, d in 1i64..100_000,
        sb in any::<bool>(), sd in any::<bool>(),
    ) {
        let (b, d) = (if sb { -b } else { b }, if sd { -d } else { d });
        let (x, y) = (Rational::new(a, b), Rational::new(c, d));
        let (rx, ry) = (Ratio::new(a, b), Ratio::new(c, d));
        let same = |r: Rational, o: Ratio<i64>| r.numer() == *o.numer() && r.denom() == *o.denom();
        prop_assert!(same(x, rx));
        prop_assert!(same(x + y, rx + ry));
        prop_assert!(same(x - y, rx - ry));
        prop_assert!(same(x * y, rx * ry));
        prop_assert!(same(-x, -rx));
        prop_assert_eq!(x.cmp(&y), rx.cmp(&ry));
        prop_assert_eq!(x.to_string(), rx.to_string());
    }
}
