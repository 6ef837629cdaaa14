//! P-Eulerian polynomials, order polynomials, and the bridge to matchings
//! for posets of width at most two.

use bgpoly::interior::interior_hat_via_matchings;
use bgpoly::posets::{
    complement_comparability_graph, eulerian_polynomial, order_polynomial_values, parse_poset,
    two_chain_poset,
};
use bgpoly::Limits;

fn main() -> bgpoly::Result<()> {
    let limits = Limits::default();
    let posets = [
        two_chain_poset(2, 2)?,
        two_chain_poset(3, 2)?,
        parse_poset("5\n1 < 3\n2 < 3\n3 < 4\n3 < 5\n")?,
    ];
    for p in &posets {
        let w = eulerian_polynomial(p, &limits)?;
        let omega = order_polynomial_values(p, 4, &limits)?;
        let g = complement_comparability_graph(p);
        println!("covers {:?}", p.covers());
        println!("  W(P) [{}]  Omega(P,1..4) {:?}", w.to_coeff_string(),
            omega.iter().map(|c| c.to_string()).collect::<Vec<_>>());
        if g.is_bipartite() {
            println!("  incomparability graph {g}: |M(G,k)| [{}]",
                interior_hat_via_matchings(&g, &limits)?.to_coeff_string());
        }
    }
    Ok(())
}
