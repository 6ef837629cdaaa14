mod common;

use bgpoly::graphs::{parse_edge_list, write_edge_list};
use bgpoly::interior::{
    hstar_bg_fast, hypergraph_from_bipartite, hypertrees, interior_polynomial_oracle,
    interior_polynomial_with_order,
};
use bgpoly::poly::{gamma_extract, gamma_substitute, interlaces, real_root_certificate};
use bgpoly::polytope::{build_bg, ehrhart_hstar, is_reflexive, lattice_points, LatticePolytope};
use bgpoly::posets::{eulerian_polynomial, eulerian_via_order_polynomial, Poset};
use bgpoly::{Graph, IntPolynomial, Limits};
use num_bigint::BigInt;
use proptest::prelude::*;

fn lim() -> Limits {
    Limits::default()
}

fn graph_strategy(max_d: usize) -> impl Strategy<Value = Graph> {
    (1..=max_d).prop_flat_map(|d| {
        let pairs: Vec<(usize, usize)> =
            (1..=d).flat_map(|u| (u + 1..=d).map(move |v| (u, v))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
            let edges = pairs.iter().zip(&mask).filter(|(_, &m)| m).map(|(&e, _)| e);
            Graph::new(d, edges).unwrap()
        })
    })
}

fn bipartite_strategy(max_side: usize) -> impl Strategy<Value = Graph> {
    (1..=max_side, 1..=max_side).prop_flat_map(|(a, b)| {
        proptest::collection::vec(any::<bool>(), a * b).prop_map(move |mask| {
            let edges = (0..a * b).filter(|&i| mask[i]).map(|i| (i / b + 1, a + i % b + 1));
            Graph::new(a + b, edges).unwrap()
        })
    })
}

fn poly_strategy(max_len: usize) -> impl Strategy<Value = IntPolynomial> {
    proptest::collection::vec(-50i64..=50, 1..=max_len)
        .prop_map(|c| IntPolynomial::from_i64s(&c))
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn linear_product(roots: &[i64]) -> IntPolynomial {
    roots.iter().fold(IntPolynomial::one(), |acc, &a| &acc * &IntPolynomial::linear_power(a, 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gamma_roundtrip_scales_by_powers_of_four(
        coeffs in proptest::collection::vec(0i64..1000, 1..5),
        extra in 0usize..4,
    ) {
        let g = IntPolynomial::from_i64s(&coeffs);
        let d = 2 * g.degree().unwrap_or(0) + extra;
        let h = gamma_substitute(&g, d).unwrap();
        prop_assert!(h.is_palindromic(d).unwrap());
        let back = gamma_extract(&h, d).unwrap().as_polynomial();
        let scaled = IntPolynomial::new(
            g.coeffs().iter().enumerate().map(|(k, c)| c * (BigInt::from(1) << (2 * k))).collect(),
        );
        prop_assert_eq!(back, scaled);
    }

    #[test]
    fn products_of_real_linear_factors_are_real_rooted(roots in proptest::collection::vec(-6i64..=6, 1..7)) {
        let f = linear_product(&roots);
        let cert = real_root_certificate(&f).unwrap();
        prop_assert!(cert.is_real_rooted);
        let mut distinct = roots.clone();
        distinct.sort_unstable();
        distinct.dedup();
        prop_assert_eq!(cert.distinct_real_roots, distinct.len());
        for (iv, r) in cert.isolating_intervals.iter().zip(distinct.iter().map(|r| -r).rev().collect::<Vec<_>>()) {
            let r = num_rational::BigRational::from_integer(r.into());
            prop_assert!(iv.lo < r && r < iv.hi);
        }
    }

    #[test]
    fn real_rooted_nonnegative_is_log_concave(roots in proptest::collection::vec(0i64..=9, 1..8)) {
        let f = linear_product(&roots);
        prop_assert!(f.has_nonnegative_coeffs());
        prop_assert!(f.is_log_concave());
        prop_assert!(f.is_unimodal());
    }

    #[test]
    fn root_count_never_exceeds_degree(f in poly_strategy(8)) {
        let cert = real_root_certificate(&f).unwrap();
        prop_assert!(cert.distinct_real_roots <= cert.total_degree);
        for w in cert.isolating_intervals.windows(2) {
            prop_assert!(w[0].hi <= w[1].lo);
        }
    }

    #[test]
    fn derivative_interlaces(roots in proptest::collection::vec(-5i64..=5, 2..7)) {
        let f = linear_product(&roots);
        prop_assert!(interlaces(&f.derivative(), &f).unwrap());
    }

    #[test]
    fn multiplication_matches_evaluation(f in poly_strategy(6), g in poly_strategy(6), x in -5i64..=5) {
        let x = BigInt::from(x);
        prop_assert_eq!((&f * &g).eval(&x), f.eval(&x) * g.eval(&x));
        prop_assert_eq!((&f + &g).eval(&x), f.eval(&x) + g.eval(&x));
    }

    #[test]
    fn coefficient_text_roundtrip(f in poly_strategy(10)) {
        prop_assert_eq!(f.to_coeff_string().parse::<IntPolynomial>().unwrap(), f);
    }

    #[test]
    fn edge_list_roundtrip(g in graph_strategy(7)) {
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn bg_lattice_points_are_generators(g in graph_strategy(6)) {
        let bg = build_bg(&g);
        prop_assert_eq!(lattice_points(&bg, 1, &lim()).unwrap(), bg.generators().to_vec());
    }

    #[test]
    fn bg_is_centrally_symmetric(g in graph_strategy(5)) {
        let bg = build_bg(&g);
        let facets = &bg.facet_description(&lim()).unwrap().facets;
        for f in facets {
            let neg: Vec<i64> = f.normal.iter().map(|x| -x).collect();
            prop_assert!(facets.iter().any(|h| h.normal == neg && h.rhs == f.rhs));
        }
        let points = lattice_points(&bg, 2, &lim()).unwrap();
        for p in &points {
            let neg: Vec<i64> = p.iter().map(|x| -x).collect();
            prop_assert!(points.binary_search(&neg).is_ok());
        }
    }

    #[test]
    fn orthant_pieces_match(g in graph_strategy(4), signs in proptest::collection::vec(prop_oneof![Just(1i64), Just(-1i64)], 4)) {
        let d = g.d();
        let signs = &signs[..d];
        let bg = build_bg(&g);
        let piece = bg.orthant_restriction(signs).unwrap();
        for n in 1..=2 {
            let inside: Vec<Vec<i64>> = lattice_points(&bg, n, &lim())
                .unwrap()
                .into_iter()
                .filter(|p| p.iter().zip(signs).all(|(x, s)| x * s >= 0))
                .collect();
            prop_assert_eq!(lattice_points(&piece, n, &lim()).unwrap(), inside);
        }
    }

    #[test]
    fn palindromic_exactly_when_reflexive(g in graph_strategy(4)) {
        let bg = build_bg(&g);
        let data = ehrhart_hstar(&bg, &lim()).unwrap();
        prop_assert_eq!(data.hstar.is_palindromic(g.d()).unwrap(), is_reflexive(&bg, &lim()).unwrap());
    }

    #[test]
    fn hstar_splits_over_components(g in bipartite_strategy(4)) {
        let mut product = IntPolynomial::one();
        for c in g.components() {
            product = &product * &hstar_bg_fast(&c.graph, &lim()).unwrap();
        }
        prop_assert_eq!(hstar_bg_fast(&g, &lim()).unwrap(), product);
    }

    #[test]
    fn oracle_is_order_invariant(g in bipartite_strategy(4), seed in any::<u64>()) {
        prop_assume!(g.is_connected() && g.edge_count() <= 8);
        let sides = g.bipartition().unwrap();
        let h = hypergraph_from_bipartite(&g, &sides.right).unwrap();
        let base = interior_polynomial_oracle(&h, &lim()).unwrap();
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        let order = common::shuffled(&mut rng, h.hyperedges().len());
        prop_assert_eq!(interior_polynomial_with_order(&h, &order, &lim()).unwrap(), base);
    }

    #[test]
    fn interior_is_transpose_invariant_and_bounded(g in bipartite_strategy(4)) {
        prop_assume!(g.is_connected() && g.d() >= 2);
        let sides = g.bipartition().unwrap();
        let a = hypergraph_from_bipartite(&g, &sides.right).unwrap();
        let b = hypergraph_from_bipartite(&g, &sides.left).unwrap();
        let ia = interior_polynomial_oracle(&a, &lim()).unwrap();
        let ib = interior_polynomial_oracle(&b, &lim()).unwrap();
        prop_assert_eq!(&ia, &ib);
        let bound = a.vertex_count().min(a.hyperedges().len()) - 1;
        prop_assert!(ia.degree().unwrap() <= bound);
        prop_assert_eq!(ia.eval_at_one(), BigInt::from(hypertrees(&a, &lim()).unwrap().len()));
    }

    #[test]
    fn order_polynomial_bridge(d in 1usize..=6, mask in any::<u32>()) {
        let pairs: Vec<(usize, usize)> = (1..=d).flat_map(|v| (1..v).map(move |u| (u, v))).collect();
        let rel = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        let p = Poset::new(d, rel).unwrap();
        prop_assert_eq!(eulerian_via_order_polynomial(&p, &lim()).unwrap(), eulerian_polynomial(&p, &lim()).unwrap());
    }
}

fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn chain_unions_have_real_rooted_eulerian_polynomials() {
    for d in 1..=8 {
        for parts in compositions(d) {
            let mut relations = Vec::new();
            let mut start = 1;
            for len in &parts {
                relations.extend((start..start + len - 1).map(|i| (i, i + 1)));
                start += len;
            }
            let p = Poset::new(d, relations).unwrap();
            let w = eulerian_polynomial(&p, &lim()).unwrap();
            assert!(real_root_certificate(&w).unwrap().is_real_rooted, "{parts:?}: {w}");
        }
    }
}

#[test]
fn unit_cube_hstar() {
    let cube = LatticePolytope::new(
        3,
        (0..8).map(|m| (0..3).map(|i| (m >> i) & 1).collect::<Vec<i64>>()),
    )
    .unwrap();
    let h = ehrhart_hstar(&cube, &lim()).unwrap().hstar;
    assert_eq!(h, IntPolynomial::from_i64s(&[1, 4, 1]));
}
