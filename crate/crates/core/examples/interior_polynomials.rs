//! Hypertrees and interior polynomials, compared with the matching count on
//! hat graphs and with h* of the edge polytope.

use bgpoly::interior::{
    hypergraph_from_bipartite, hypertrees, interior_hat_via_matchings, interior_polynomial_oracle,
};
use bgpoly::polytope::{edge_polytope, ehrhart_hstar};
use bgpoly::{Graph, Limits, LoopGraph};

fn main() -> bgpoly::Result<()> {
    let limits = Limits::default();

    let square = Graph::complete_bipartite(2, 2);
    let h = hypergraph_from_bipartite(&square, &[3, 4])?;
    println!("hyperedges of the 4-cycle: {:?}", h.hyperedges());
    for t in hypertrees(&h, &limits)? {
        println!("  hypertree {:?}", t.f);
    }
    println!("  I = {}", interior_polynomial_oracle(&h, &limits)?);

    for g in [Graph::path(3), Graph::cycle(4), Graph::cycle(6)] {
        let hat = g.hat_canonical()?;
        let sides = hat.bipartition().expect("hat graphs are bipartite");
        let oracle = interior_polynomial_oracle(&hypergraph_from_bipartite(&hat, &sides.right)?, &limits)?;
        let fast = interior_hat_via_matchings(&g, &limits)?;
        let hstar = ehrhart_hstar(&edge_polytope(&LoopGraph::from(&hat))?, &limits)?.hstar;
        println!("{g}: hypertrees [{}], matchings [{}], edge polytope h* [{}]",
            oracle.to_coeff_string(), fast.to_coeff_string(), hstar.to_coeff_string());
    }
    Ok(())
}
