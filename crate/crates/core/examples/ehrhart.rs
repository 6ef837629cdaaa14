//! h*(B_G) three ways: lattice-point counting, the induced-subgraph
//! expansion, and the matching formula (bipartite graphs only).

use bgpoly::interior::{hstar_bg_fast, hstar_bg_subgraph_formula};
use bgpoly::polytope::{build_bg, ehrhart_hstar};
use bgpoly::{Graph, Limits};

fn main() -> bgpoly::Result<()> {
    let limits = Limits::default();
    for g in [Graph::path(3), Graph::cycle(4), Graph::star(3), Graph::complete(3)] {
        let data = ehrhart_hstar(&build_bg(&g), &limits)?;
        println!("{g}");
        println!("  L(0..={}) = {:?}", data.dimension, data.counts);
        println!("  h* from lattice points   [{}]", data.hstar.to_coeff_string());
        println!("  h* from subgraphs        [{}]", hstar_bg_subgraph_formula(&g, &limits)?.to_coeff_string());
        if g.is_bipartite() {
            println!("  h* from matchings        [{}]", hstar_bg_fast(&g, &limits)?.to_coeff_string());
        }
        println!("  normalized volume {}", data.normalized_volume());
    }
    Ok(())
}
