//! Integer decomposition of B_G against the odd cycle condition.

use bgpoly::graphs::satisfies_occ;
use bgpoly::polytope::{build_bg, is_idp};
use bgpoly::{Graph, Limits};

fn main() -> bgpoly::Result<()> {
    let limits = Limits::default();
    let triangle = Graph::complete(3);
    let two = triangle.disjoint_union(&triangle);
    let bridged = Graph::new(6, two.edges().iter().copied().chain([(3, 4)]))?;
    let graphs = [
        ("triangle", triangle),
        ("5-cycle", Graph::cycle(5)),
        ("two triangles", two),
        ("two triangles + edge", bridged),
    ];
    for (name, g) in &graphs {
        let out = is_idp(&build_bg(g), 3, &limits)?;
        println!(
            "{name:22} OCC {:5}  OCC with apex {:5}  IDP up to 3 {:5}  witness {:?}",
            satisfies_occ(g, &limits)?,
            satisfies_occ(&g.cone(), &limits)?,
            out.holds(),
            out.witness
        );
    }
    Ok(())
}
