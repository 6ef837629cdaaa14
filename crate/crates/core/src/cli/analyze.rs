use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use super::{coeff_strings, list, yes_no, AUTO_EHRHART_DIM};
use crate::error::{Error, Result};
use crate::graphs::{
    is_bipartite_permutation, is_chordal_bipartite, is_forest, matching_profile, satisfies_occ, Graph,
};
use crate::interior::{hstar_bg_fast, interior_hat_via_matchings};
use crate::limits::Limits;
use crate::poly::{gamma_extract, real_root_certificate, IntPolynomial};
use crate::polytope::{build_bg, ehrhart_hstar, is_idp, is_reflexive};

#[derive(Debug, Clone)]
pub struct AnalyzeOptions {
    pub kmax: u64,
    /// `Some(true)` forces the lattice-point stage, `Some(false)` skips it,
    /// `None` runs it up to [`AUTO_EHRHART_DIM`].
    pub ehrhart: Option<bool>,
    pub timings: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { kmax: 3, ehrhart: None, timings: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub graph: GraphSummary,
    pub predicates: Predicates,
    pub polynomials: Polynomials,
    pub certificates: Certificates,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Vec<Timing>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Predicates {
    pub bipartite: bool,
    /// Vertex-disjoint odd cycles in one component are joined by an edge.
    pub odd_cycle_condition: bool,
    /// Same condition after adding an apex joined to every vertex; this is
    /// the one that decides IDP when the graph is disconnected.
    pub odd_cycle_condition_with_apex: bool,
    pub chordal_bipartite: bool,
    pub forest: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bipartite_permutation: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Polynomials {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hstar: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hstar_method: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interior_hat: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Vec<String>>,
    pub matching_set_counts: Vec<u64>,
    pub matching_counts: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificates {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reflexive: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub idp: Option<IdpCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hstar_real_rooted: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interior_real_rooted: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_positive: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hstar_log_concave: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdpCertificate {
    pub kmax: u64,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_dilation: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_point: Option<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Timing {
    pub stage: String,
    pub millis: u128,
}

/// Builds the report. Every polynomial is cross-checked before it is stored.
pub fn analyze(g: &Graph, opts: &AnalyzeOptions, limits: &Limits) -> Result<AnalysisReport> {
    let mut timings = Vec::new();
    let mut clock = Instant::now();
    let mut lap = |stage: &str, timings: &mut Vec<Timing>| {
        timings.push(Timing { stage: stage.to_string(), millis: clock.elapsed().as_millis() });
        clock = Instant::now();
    };
    let d = g.d();
    let bipartite = g.is_bipartite();
    let mut notes = Vec::new();

    let permutation = if bipartite {
        match is_bipartite_permutation(g, limits) {
            Ok(w) => Some(w.is_some()),
            Err(Error::ResourceLimit { .. }) => {
                notes.push("bipartite permutation test skipped: side exceeds the search bound".into());
                None
            }
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let predicates = Predicates {
        bipartite,
        odd_cycle_condition: satisfies_occ(g, limits)?,
        odd_cycle_condition_with_apex: satisfies_occ(&g.cone(), limits)?,
        chordal_bipartite: is_chordal_bipartite(g, limits)?,
        forest: is_forest(g),
        bipartite_permutation: permutation,
    };
    lap("predicates", &mut timings);

    let profile = matching_profile(g, limits)?;
    let mut polynomials = Polynomials {
        hstar: None,
        hstar_method: None,
        interior_hat: None,
        gamma: None,
        matching_set_counts: profile.set_counts.clone(),
        matching_counts: profile.matching_counts.clone(),
    };
    let mut certificates = Certificates {
        reflexive: None,
        idp: None,
        hstar_real_rooted: None,
        interior_real_rooted: None,
        gamma_positive: None,
        hstar_log_concave: None,
    };

    let mut hstar: Option<IntPolynomial> = None;
    if bipartite {
        let interior = interior_hat_via_matchings(g, limits)?;
        let fast = hstar_bg_fast(g, limits)?;
        let gamma = gamma_extract(&fast, d)?;
        if gamma.reconstruct() != fast {
            return Err(Error::Integrity("gamma-vector does not reproduce h*".into()));
        }
        certificates.interior_real_rooted = Some(real_root_certificate(&interior)?.is_real_rooted);
        certificates.gamma_positive = Some(gamma.is_positive());
        polynomials.interior_hat = Some(coeff_strings(&interior));
        polynomials.gamma = Some(coeff_strings(&gamma.as_polynomial()));
        polynomials.hstar_method = Some("matchings".into());
        hstar = Some(fast);
        lap("fast formula", &mut timings);
    }

    let run_ehrhart = match opts.ehrhart {
        Some(flag) => flag,
        None => d <= AUTO_EHRHART_DIM,
    };
    if run_ehrhart {
        let bg = build_bg(g);
        let data = ehrhart_hstar(&bg, limits)?;
        match &hstar {
            Some(fast) if *fast != data.hstar => {
                return Err(Error::Integrity(format!(
                    "matching formula gives {} but lattice points give {}",
                    list(fast),
                    list(&data.hstar)
                )));
            }
            Some(_) => polynomials.hstar_method = Some("matchings, confirmed by lattice points".into()),
            None => {
                polynomials.hstar_method = Some("lattice points".into());
                hstar = Some(data.hstar.clone());
            }
        }
        lap("ehrhart", &mut timings);
        let reflexive = is_reflexive(&bg, limits)?;
        if reflexive != bipartite {
            notes.push("reflexivity disagrees with bipartiteness".into());
        }
        certificates.reflexive = Some(reflexive);
        let idp = is_idp(&bg, opts.kmax, limits)?;
        if !idp.holds() && predicates.odd_cycle_condition_with_apex {
            notes.push("IDP fails although every odd cycle pair is joined".into());
        }
        if idp.holds() && !predicates.odd_cycle_condition_with_apex {
            notes.push(format!(
                "no IDP counterexample up to dilation {}, although odd cycles are not all joined",
                opts.kmax
            ));
        }
        certificates.idp = Some(IdpCertificate {
            kmax: opts.kmax,
            holds: idp.holds(),
            witness_dilation: idp.witness.as_ref().map(|w| w.0),
            witness_point: idp.witness.map(|w| w.1),
        });
        lap("reflexivity and IDP", &mut timings);
    } else if opts.ehrhart.is_none() {
        notes.push(format!(
            "lattice-point stage skipped above dimension {AUTO_EHRHART_DIM}; pass --ehrhart to force"
        ));
    }
    if let Some(h) = &hstar {
        certificates.hstar_real_rooted = Some(real_root_certificate(h)?.is_real_rooted);
        certificates.hstar_log_concave = Some(h.is_log_concave());
        polynomials.hstar = Some(coeff_strings(h));
        lap("roots", &mut timings);
    }
    if !bipartite {
        notes.push("non-bipartite: B_G is not reflexive and h* is not palindromic".into());
    }

    Ok(AnalysisReport {
        graph: GraphSummary { vertices: d, edges: g.edge_count(), components: g.components().len() },
        predicates,
        polynomials,
        certificates,
        notes,
        timings: opts.timings.then_some(timings),
    })
}

fn flag(b: Option<bool>) -> &'static str {
    match b {
        Some(b) => yes_no(b),
        None => "n/a",
    }
}

fn coeffs(c: &Option<Vec<String>>) -> String {
    match c {
        Some(c) => format!("[{}]", c.join(", ")),
        None => "n/a".into(),
    }
}

impl AnalysisReport {
    /// Human-readable form. Coefficient lists are constant term first.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let g = &self.graph;
        let _ = writeln!(s, "graph: {} vertices, {} edges, {} components", g.vertices, g.edges, g.components);
        let p = &self.predicates;
        let _ = writeln!(s, "bipartite: {}", yes_no(p.bipartite));
        let _ = writeln!(s, "odd cycle condition: {}", yes_no(p.odd_cycle_condition));
        let _ = writeln!(s, "odd cycle condition with apex: {}", yes_no(p.odd_cycle_condition_with_apex));
        let _ = writeln!(s, "chordal bipartite: {}", yes_no(p.chordal_bipartite));
        let _ = writeln!(s, "forest: {}", yes_no(p.forest));
        let _ = writeln!(s, "bipartite permutation: {}", flag(p.bipartite_permutation));
        let q = &self.polynomials;
        let _ = writeln!(s, "h*: {}", coeffs(&q.hstar));
        if let Some(m) = &q.hstar_method {
            let _ = writeln!(s, "h* method: {m}");
        }
        let _ = writeln!(s, "interior polynomial of hat graph: {}", coeffs(&q.interior_hat));
        let _ = writeln!(s, "gamma: {}", coeffs(&q.gamma));
        let _ = writeln!(s, "matching vertex-set counts: {:?}", q.matching_set_counts);
        let _ = writeln!(s, "matching counts: {:?}", q.matching_counts);
        let c = &self.certificates;
        let _ = writeln!(s, "reflexive: {}", flag(c.reflexive));
        match &c.idp {
            Some(idp) if idp.holds => {
                let _ = writeln!(s, "IDP up to dilation {}: yes", idp.kmax);
            }
            Some(idp) => {
                let _ = writeln!(
                    s,
                    "IDP up to dilation {}: no, {:?} at dilation {}",
                    idp.kmax,
                    idp.witness_point.clone().unwrap_or_default(),
                    idp.witness_dilation.unwrap_or_default()
                );
            }
            None => {
                let _ = writeln!(s, "IDP: n/a");
            }
        }
        let _ = writeln!(s, "h* real-rooted: {}", flag(c.hstar_real_rooted));
        let _ = writeln!(s, "h* log-concave: {}", flag(c.hstar_log_concave));
        let _ = writeln!(s, "interior real-rooted: {}", flag(c.interior_real_rooted));
        let _ = writeln!(s, "gamma-positive: {}", flag(c.gamma_positive));
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        if let Some(t) = &self.timings {
            for t in t {
                let _ = writeln!(s, "time {}: {} ms", t.stage, t.millis);
            }
        }
        s
    }
}
