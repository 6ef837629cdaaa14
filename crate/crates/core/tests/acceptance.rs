//! Acceptance suite. Runs every criterion, prints one line each and exits
//! nonzero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use bgpoly::graphs::{is_forest, matching_profile, satisfies_occ};
use bgpoly::interior::{
    hstar_bg_fast, hstar_bg_subgraph_formula_cached, hypergraph_from_bipartite,
    interior_hat_via_matchings, interior_polynomial_oracle, interior_polynomial_with_order,
    TildeHstarCache,
};
use bgpoly::poly::{gamma_substitute, interlaces, real_root_certificate};
use bgpoly::polytope::{
    build_bg, edge_polytope, ehrhart_hstar, is_idp, is_reflexive, lattice_points,
};
use bgpoly::posets::{
    all_naturally_labeled_posets, complement_comparability_graph, eulerian_polynomial, kpq_hstar,
    two_chain_poset,
};
use bgpoly::{Graph, IntPolynomial, Limits, LoopGraph};
use common::{classes_up_to, forests, labelled_graphs_up_to, random_connected_bipartite, shuffled};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const WP: [i64; 9] = [1, 32, 336, 1420, 2534, 1946, 658, 86, 3];
const HSTAR: [i64; 18] = [
    1, 145, 7432, 174888, 2128332, 14547884, 59233240, 148792184, 234916470, 234916470, 148792184,
    59233240, 14547884, 2128332, 174888, 7432, 145, 1,
];

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lim() -> Limits {
    Limits::default()
}

fn err(e: bgpoly::Error) -> String {
    e.to_string()
}

fn stembridge_transform() -> Outcome {
    let w = IntPolynomial::from_i64s(&WP);
    let h = gamma_substitute(&w, 17).map_err(err)?;
    ensure(h == IntPolynomial::from_i64s(&HSTAR), || format!("got {h}"))?;
    Ok("W(P) with d=17 maps to the 18 printed h* coefficients".into())
}

fn stembridge_roots() -> Outcome {
    let w = IntPolynomial::from_i64s(&WP);
    let h = IntPolynomial::from_i64s(&HSTAR);
    let cw = real_root_certificate(&w).map_err(err)?;
    let ch = real_root_certificate(&h).map_err(err)?;
    ensure(!cw.is_real_rooted, || "W(P) reported real-rooted".into())?;
    ensure(!ch.is_real_rooted, || "h* reported real-rooted".into())?;
    ensure(h.is_palindromic(17).map_err(err)?, || "h* not palindromic".into())?;
    ensure(h.is_unimodal(), || "h* not unimodal".into())?;
    ensure(h.is_log_concave(), || "h* not log-concave".into())?;
    Ok(format!(
        "W(P): {}/8 real roots, h*: {}/17 real roots; h* palindromic, unimodal, log-concave",
        cw.distinct_real_roots, ch.distinct_real_roots
    ))
}

fn single_edge() -> Outcome {
    let bg = build_bg(&Graph::new(2, [(1, 2)]).unwrap());
    let mut printed = vec![vec![0, 0]];
    for p in [[1, 0], [0, 1], [-1, 0], [0, -1], [1, 1], [-1, -1], [1, -1], [-1, 1]] {
        printed.push(p.to_vec());
    }
    printed.sort();
    let points = lattice_points(&bg, 1, &lim()).map_err(err)?;
    ensure(points == printed, || format!("lattice points {points:?}"))?;
    ensure(is_reflexive(&bg, &lim()).map_err(err)?, || "not reflexive".into())?;
    let h = ehrhart_hstar(&bg, &lim()).map_err(err)?.hstar;
    ensure(h == IntPolynomial::from_i64s(&[1, 6, 1]), || format!("h* = {h}"))?;
    Ok("9 lattice points, reflexive, h* = (1,6,1)".into())
}

fn reflexive_iff_bipartite() -> Outcome {
    let graphs = labelled_graphs_up_to(5);
    for g in &graphs {
        let r = is_reflexive(&build_bg(g), &lim()).map_err(err)?;
        ensure(r == g.is_bipartite(), || format!("{g}: reflexive {r}"))?;
    }
    Ok(format!("{} labelled graphs on <= 5 vertices", graphs.len()))
}

fn idp_iff_occ() -> Outcome {
    let graphs = labelled_graphs_up_to(5);
    let mut failures = 0;
    for g in &graphs {
        let holds = is_idp(&build_bg(g), 3, &lim()).map_err(err)?.holds();
        let occ = satisfies_occ(g, &lim()).map_err(err)?;
        ensure(holds == occ, || format!("{g}: IDP {holds}, OCC {occ}"))?;
        failures += usize::from(!holds);
    }
    let two = Graph::complete(3).disjoint_union(&Graph::complete(3));
    let at_two = is_idp(&build_bg(&two), 2, &lim()).map_err(err)?;
    let at_three = is_idp(&build_bg(&two), 3, &lim()).map_err(err)?;
    let first = at_three.witness.as_ref().map(|w| w.0);
    ensure(at_two.witness.is_some(), || {
        format!(
            "biconditional holds on {} graphs, but two disjoint triangles have no IDP witness at k=2 \
             (first witness at k={first:?})",
            graphs.len()
        )
    })?;
    Ok(format!("{} graphs ({failures} non-IDP); two triangles fail at k=2", graphs.len()))
}

fn triple_agreement() -> Outcome {
    let mut cache = TildeHstarCache::new();
    let mut n = 0;
    for g in labelled_graphs_up_to(5).iter().filter(|g| g.is_bipartite()) {
        let fast = hstar_bg_fast(g, &lim()).map_err(err)?;
        let sub = hstar_bg_subgraph_formula_cached(g, &mut cache, &lim()).map_err(err)?;
        let oracle = ehrhart_hstar(&build_bg(g), &lim()).map_err(err)?.hstar;
        ensure(fast == sub && sub == oracle, || format!("{g}: {fast} / {sub} / {oracle}"))?;
        n += 1;
    }
    Ok(format!("{n} labelled bipartite graphs on <= 5 vertices"))
}

fn hat_oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut n = 0;
    for g in classes_up_to(6).iter().filter(|g| g.is_bipartite()) {
        let expected = interior_hat_via_matchings(g, &lim()).map_err(err)?;
        let hat = g.hat_canonical().map_err(err)?;
        let sides = hat.bipartition().unwrap();
        let h = hypergraph_from_bipartite(&hat, &sides.right).map_err(err)?;
        let got = interior_polynomial_oracle(&h, &lim()).map_err(err)?;
        ensure(got == expected, || format!("{g}: oracle {got}, matchings {expected}"))?;
        for _ in 0..3 {
            let order = shuffled(&mut rng, h.hyperedges().len());
            let got = interior_polynomial_with_order(&h, &order, &lim()).map_err(err)?;
            ensure(got == expected, || format!("{g} order {order:?}: {got} vs {expected}"))?;
        }
        n += 1;
    }
    Ok(format!("{n} bipartite classes on <= 6 vertices, 4 orderings each"))
}

fn kalman_postnikov() -> Outcome {
    let mut suite: Vec<Graph> = (2..=9).map(Graph::path).collect();
    suite.extend([4, 6, 8].map(Graph::cycle));
    for a in 1..=4 {
        for b in a..=9 - a {
            suite.push(Graph::complete_bipartite(a, b));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (a, b) in [(3, 3), (3, 4), (4, 4), (3, 5), (4, 5), (2, 6), (4, 5), (3, 6)] {
        suite.push(random_connected_bipartite(&mut rng, a, b, 0.5));
    }
    for g in &suite {
        let sides = g.bipartition().unwrap();
        let oracle = ehrhart_hstar(&edge_polytope(&LoopGraph::from(g)).map_err(err)?, &lim())
            .map_err(err)?
            .hstar;
        for side in [&sides.left, &sides.right] {
            let h = hypergraph_from_bipartite(g, side).map_err(err)?;
            let i = interior_polynomial_oracle(&h, &lim()).map_err(err)?;
            ensure(i == oracle, || format!("{g}: I = {i}, h* = {oracle}"))?;
        }
    }
    Ok(format!("{} connected bipartite graphs, both hyperedge sides", suite.len()))
}

fn volume_and_face() -> Outcome {
    let graphs = classes_up_to(5);
    for g in &graphs {
        let d = g.d();
        let vb = ehrhart_hstar(&build_bg(g), &lim()).map_err(err)?.normalized_volume();
        let vt = ehrhart_hstar(&edge_polytope(&g.tilde()).map_err(err)?, &lim())
            .map_err(err)?
            .normalized_volume();
        ensure(vb == vt.clone() << d, || format!("{g}: {vb} vs 2^{d} * {vt}"))?;
        if g.edge_count() > 0 {
            let points = lattice_points(&build_bg(g), 1, &lim()).map_err(err)?;
            let top = points.iter().map(|p| p.iter().sum::<i64>()).max().unwrap();
            let mut at_top: Vec<Vec<i64>> =
                points.into_iter().filter(|p| p.iter().sum::<i64>() == top).collect();
            at_top.sort();
            let mut edges: Vec<Vec<i64>> = g
                .edges()
                .iter()
                .map(|&(u, v)| (1..=d).map(|i| i64::from(i == u || i == v)).collect())
                .collect();
            edges.sort();
            ensure(top == 2 && at_top == edges, || format!("{g}: face property fails"))?;
        }
    }
    Ok(format!("{} isomorphism classes on <= 5 vertices", graphs.len()))
}

fn two_chains() -> Outcome {
    for p in 1..=4 {
        for q in 1..=4 {
            let w = eulerian_polynomial(&two_chain_poset(p, q).map_err(err)?, &lim()).map_err(err)?;
            let closed = IntPolynomial::new(
                (0..=p.min(q)).map(|i| bgpoly::poly::binomial(p, i) * bgpoly::poly::binomial(q, i)).collect(),
            );
            ensure(w == closed, || format!("W for ({p},{q}) = {w}"))?;
            let h = kpq_hstar(p, q).map_err(err)?;
            ensure(h == gamma_substitute(&w, p + q).map_err(err)?, || format!("h* for ({p},{q})"))?;
            if p + q <= 5 {
                let oracle = ehrhart_hstar(&build_bg(&Graph::complete_bipartite(p, q)), &lim())
                    .map_err(err)?
                    .hstar;
                ensure(h == oracle, || format!("({p},{q}): closed form {h}, lattice points {oracle}"))?;
            }
        }
    }
    Ok("p,q <= 4; lattice points confirm p+q <= 5".into())
}

fn kpq_interlacing() -> Outcome {
    for p in 1..=4 {
        for q in 1..=4 {
            let f = kpq_hstar(p, q).map_err(err)?;
            let g = kpq_hstar(p, q + 1).map_err(err)?;
            ensure(interlaces(&f, &g).map_err(err)?, || format!("({p},{q}) does not interlace ({p},{})", q + 1))?;
        }
    }
    Ok("h*(K_{p,q}) interlaces h*(K_{p,q+1}) for p,q <= 4".into())
}

fn forests_and_narrow_posets() -> Outcome {
    let mut n_forests = 0;
    for d in 1..=8 {
        for g in forests(d) {
            debug_assert!(is_forest(&g));
            let i = interior_hat_via_matchings(&g, &lim()).map_err(err)?;
            let m = IntPolynomial::from_u64s(&matching_profile(&g, &lim()).map_err(err)?.matching_counts);
            ensure(i == m, || format!("{g}: I = {i}, matching polynomial {m}"))?;
            ensure(real_root_certificate(&i).map_err(err)?.is_real_rooted, || format!("{g}: not real-rooted"))?;
            if d <= 6 {
                let hat = g.hat_canonical().map_err(err)?;
                let sides = hat.bipartition().unwrap();
                let h = hypergraph_from_bipartite(&hat, &sides.right).map_err(err)?;
                let oracle = interior_polynomial_oracle(&h, &lim()).map_err(err)?;
                ensure(oracle == m, || format!("{g}: hypertree oracle {oracle}"))?;
            }
            n_forests += 1;
        }
    }
    let mut n_posets = 0;
    for d in 1..=6 {
        for poset in all_naturally_labeled_posets(d) {
            let g = complement_comparability_graph(&poset);
            if !g.is_bipartite() {
                continue;
            }
            let w = eulerian_polynomial(&poset, &lim()).map_err(err)?;
            let i = interior_hat_via_matchings(&g, &lim()).map_err(err)?;
            ensure(w == i, || format!("{:?}: W = {w}, I = {i}", poset.covers()))?;
            n_posets += 1;
        }
    }
    Ok(format!("{n_forests} forests on <= 8 vertices, {n_posets} narrow posets on <= 6 elements"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("W(P) to h* transform", stembridge_transform),
        ("printed polynomials: roots and shape", stembridge_roots),
        ("B of a single edge", single_edge),
        ("reflexive iff bipartite", reflexive_iff_bipartite),
        ("IDP iff odd cycle condition", idp_iff_occ),
        ("three h* pipelines agree", triple_agreement),
        ("hypertree oracle vs matchings on hat graphs", hat_oracle_equivalence),
        ("interior polynomial = h* of edge polytope", kalman_postnikov),
        ("volume identity and face property", volume_and_face),
        ("two chains: W(P) and h* closed forms", two_chains),
        ("interlacing of K_{p,q} h*-polynomials", kpq_interlacing),
        ("forests and narrow posets", forests_and_narrow_posets),
    ];
    let mut failed = 0;
    let total = Instant::now();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = fmt_time(start.elapsed());
        match result {
            Ok(detail) => println!("PASS  criterion {:>2}  {name}: {detail} [{took}]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {:>2}  {name}: {detail} [{took}]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed [{}]",
        criteria.len() - failed,
        fmt_time(total.elapsed())
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn fmt_time(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}
