//! Facets of B_G and the reflexivity test on a few small graphs.

use bgpoly::polytope::{build_bg, is_reflexive};
use bgpoly::{Graph, Limits};

fn main() -> bgpoly::Result<()> {
    let limits = Limits::default();
    let graphs = [
        ("single edge", Graph::new(2, [(1, 2)])?),
        ("path on 4", Graph::path(4)),
        ("4-cycle", Graph::cycle(4)),
        ("triangle", Graph::complete(3)),
        ("5-cycle", Graph::cycle(5)),
    ];
    for (name, g) in &graphs {
        let bg = build_bg(g);
        let desc = bg.facet_description(&limits)?;
        let rhs: Vec<i64> = desc.facets.iter().map(|h| h.rhs).collect();
        println!(
            "{name:12} vertices {}  generators {:2}  facets {:2}  reflexive {:5}  bipartite {}",
            g.d(),
            bg.generators().len(),
            desc.facets.len(),
            is_reflexive(&bg, &limits)?,
            g.is_bipartite(),
        );
        if !is_reflexive(&bg, &limits)? {
            println!("{:12} facet right-hand sides {rhs:?}", "");
        }
    }
    Ok(())
}
