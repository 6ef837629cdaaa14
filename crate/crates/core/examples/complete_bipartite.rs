//! Closed forms for K_{p,q} and the interlacing chain in q.

use bgpoly::poly::{interlaces, real_root_certificate};
use bgpoly::posets::{kpq_eulerian, kpq_hstar};

fn main() -> bgpoly::Result<()> {
    for p in 1..=4 {
        for q in 1..=4 {
            let h = kpq_hstar(p, q)?;
            let next = kpq_hstar(p, q + 1)?;
            println!(
                "K_{{{p},{q}}}  W [{}]  h* [{}]  real-rooted {}  interlaces K_{{{p},{}}} {}",
                kpq_eulerian(p, q).to_coeff_string(),
                h.to_coeff_string(),
                real_root_certificate(&h)?.is_real_rooted,
                q + 1,
                interlaces(&h, &next)?,
            );
        }
    }
    Ok(())
}
