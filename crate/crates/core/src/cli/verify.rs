use std::fmt::Write as _;

use clap::ValueEnum;
use num_bigint::BigInt;
use serde::Serialize;

use super::list;
use crate::error::Result;
use crate::graphs::{chordless_cycles, is_forest, matching_profile, satisfies_occ, Graph};
use crate::interior::{
    hstar_bg_fast, hstar_bg_subgraph_formula, hypergraph_from_bipartite, interior_hat_via_matchings,
    interior_polynomial_oracle,
};
use crate::limits::Limits;
use crate::poly::{gamma_extract, real_root_certificate, IntPolynomial};
use crate::polytope::{build_bg, edge_polytope, ehrhart_hstar, is_idp, is_reflexive, lattice_points};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyLevel {
    /// Formula against oracle on interior polynomials and gamma identities.
    Fast,
    /// Adds lattice-point pipelines, the volume identity and the face property.
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub level: VerifyLevel,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            let _ = writeln!(s, "[{}] {}: {}", if c.passed { "pass" } else { "FAIL" }, c.name, c.detail);
        }
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        let _ = writeln!(s, "{}", if self.passed() { "all checks passed" } else { "verification failed" });
        s
    }

    fn push(&mut self, name: &str, passed: bool, detail: String) {
        self.checks.push(Check { name: name.to_string(), passed, detail });
    }

    fn agree(&mut self, name: &str, a: (&str, &IntPolynomial), b: (&str, &IntPolynomial)) {
        let detail = if a.1 == b.1 {
            format!("{} = {}", a.0, list(a.1))
        } else {
            format!("{} = {} but {} = {}", a.0, list(a.1), b.0, list(b.1))
        };
        self.push(name, a.1 == b.1, detail);
    }
}

/// Runs the cross-checks for `g`.
pub fn verify(g: &Graph, level: VerifyLevel, kmax: u64, limits: &Limits) -> Result<VerifyReport> {
    let mut r = VerifyReport { level, checks: Vec::new(), notes: Vec::new() };
    let d = g.d();
    let bipartite = g.bipartition();
    let idp_expected = satisfies_occ(&g.cone(), limits)?;

    let has_odd = chordless_cycles(g, 3, limits)?.iter().any(|c| c.len() % 2 == 1);
    r.push(
        "odd-cycle-witness",
        has_odd == bipartite.is_none(),
        format!("chordless odd cycle found: {has_odd}"),
    );

    if let Some(b) = &bipartite {
        let via_matchings = interior_hat_via_matchings(g, limits)?;
        let hat = g.hat(b)?;
        let hb = hat.bipartition().expect("hat graph is bipartite");
        let oracle = interior_polynomial_oracle(&hypergraph_from_bipartite(&hat, &hb.right)?, limits)?;
        let transposed = interior_polynomial_oracle(&hypergraph_from_bipartite(&hat, &hb.left)?, limits)?;
        r.agree("interior-oracle-vs-matchings", ("hypertrees", &oracle), ("matchings", &via_matchings));
        r.agree("interior-transpose", ("one side", &oracle), ("other side", &transposed));

        let fast = hstar_bg_fast(g, limits)?;
        let gamma = gamma_extract(&fast, d)?;
        let expected: Vec<BigInt> = via_matchings
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c * (BigInt::from(1) << (2 * k)))
            .collect();
        let expected = IntPolynomial::new(expected);
        r.agree("gamma-identity", ("gamma", &gamma.as_polynomial()), ("4^k |M(G,k)|", &expected));
        r.push("hstar-palindromic", fast.is_palindromic(d)?, format!("h* = {}", list(&fast)));

        let mut product = IntPolynomial::one();
        for c in g.components() {
            product = &product * &hstar_bg_fast(&c.graph, limits)?;
        }
        r.agree("component-product", ("h*", &fast), ("product over components", &product));

        if is_forest(g) {
            let m = IntPolynomial::from_u64s(&matching_profile(g, limits)?.matching_counts);
            r.agree("forest-matchings", ("interior", &via_matchings), ("matching polynomial", &m));
            let rr = real_root_certificate(&via_matchings)?.is_real_rooted;
            r.push("forest-real-rooted", rr, format!("interior polynomial real-rooted: {rr}"));
        }
    } else {
        r.notes.push(format!(
            "non-bipartite: reflexivity expected false, IDP expected {idp_expected}"
        ));
    }

    if level == VerifyLevel::Full {
        full_checks(g, bipartite.is_some(), idp_expected, kmax, limits, &mut r)?;
    }
    Ok(r)
}

fn full_checks(
    g: &Graph,
    bipartite: bool,
    idp_expected: bool,
    kmax: u64,
    limits: &Limits,
    r: &mut VerifyReport,
) -> Result<()> {
    let d = g.d();
    let bg = build_bg(g);
    let data = ehrhart_hstar(&bg, limits)?;
    let subgraph = hstar_bg_subgraph_formula(g, limits)?;
    if bipartite {
        let fast = hstar_bg_fast(g, limits)?;
        r.agree("fast-vs-lattice-points", ("fast", &fast), ("lattice points", &data.hstar));
    }
    r.agree("subgraph-vs-lattice-points", ("subgraph formula", &subgraph), ("lattice points", &data.hstar));

    let tilde = ehrhart_hstar(&edge_polytope(&g.tilde())?, limits)?;
    let lhs = data.normalized_volume();
    let rhs = tilde.normalized_volume() << d;
    r.push(
        "volume-identity",
        lhs == rhs,
        format!("Vol(B_G) = {lhs}, 2^d Vol(P_apex) = {rhs}"),
    );

    let points = lattice_points(&bg, 1, limits)?;
    let top = points.iter().map(|p| p.iter().sum::<i64>()).max().unwrap_or(0);
    let mut attained: Vec<Vec<i64>> = points.into_iter().filter(|p| p.iter().sum::<i64>() == top).collect();
    attained.sort();
    let mut edge_vectors: Vec<Vec<i64>> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let mut p = vec![0; d];
            p[u - 1] = 1;
            p[v - 1] = 1;
            p
        })
        .collect();
    edge_vectors.sort();
    if g.edge_count() == 0 {
        r.push("face-property", top == 1, format!("edgeless: max coordinate sum {top}"));
    } else {
        r.push(
            "face-property",
            top == 2 && attained == edge_vectors,
            format!("max coordinate sum {top} attained at {} points", attained.len()),
        );
    }

    let reflexive = is_reflexive(&bg, limits)?;
    r.push("reflexive-iff-bipartite", reflexive == bipartite, format!("reflexive: {reflexive}"));
    let palindromic = data.hstar.is_palindromic(d)?;
    r.push(
        "palindromic-iff-reflexive",
        palindromic == reflexive,
        format!("h* palindromic: {palindromic}"),
    );
    let idp = is_idp(&bg, kmax, limits)?;
    let detail = match &idp.witness {
        None => format!("no counterexample up to dilation {kmax}"),
        Some((k, x)) => format!("{x:?} at dilation {k} is not a sum of {k} lattice points"),
    };
    r.push("idp-iff-odd-cycles-joined", idp.holds() == idp_expected, detail);
    Ok(())
}
