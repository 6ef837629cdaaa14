//! Matching statistics; on forests the vertex-set counts and the matching
//! counts coincide and give a real-rooted polynomial.

use bgpoly::graphs::{is_forest, matching_profile};
use bgpoly::poly::real_root_certificate;
use bgpoly::{Graph, IntPolynomial, Limits};

fn main() -> bgpoly::Result<()> {
    let limits = Limits::default();
    for g in [Graph::path(6), Graph::star(4), Graph::cycle(6), Graph::complete_bipartite(3, 3)] {
        let m = matching_profile(&g, &limits)?;
        let sets = IntPolynomial::from_u64s(&m.set_counts);
        println!(
            "{g}\n  forest {}  |M(G,k)| {:?}  m_k {:?}  real-rooted {}",
            is_forest(&g),
            m.set_counts,
            m.matching_counts,
            real_root_certificate(&sets)?.is_real_rooted
        );
    }
    Ok(())
}
