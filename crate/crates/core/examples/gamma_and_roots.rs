//! The printed W(P) of a poset whose P-Eulerian polynomial is not
//! real-rooted, pushed through the gamma substitution.

use bgpoly::poly::{gamma_extract, gamma_substitute, real_root_certificate};
use bgpoly::IntPolynomial;

fn main() -> bgpoly::Result<()> {
    // constant term first
    let w = IntPolynomial::from_i64s(&[1, 32, 336, 1420, 2534, 1946, 658, 86, 3]);
    let h = gamma_substitute(&w, 17)?;
    println!("W(P) = {w}");
    println!("h*   = [{}]", h.to_coeff_string());

    let gamma = gamma_extract(&h, 17)?;
    println!("gamma-vector [{}]", gamma.as_polynomial().to_coeff_string());

    for (name, p) in [("W(P)", &w), ("h*", &h)] {
        let cert = real_root_certificate(p)?;
        println!(
            "{name}: degree {}, {} distinct real roots, real-rooted {}",
            cert.total_degree, cert.distinct_real_roots, cert.is_real_rooted
        );
        for iv in &cert.isolating_intervals {
            println!("    root in ({}, {})", iv.lo, iv.hi);
        }
    }
    println!(
        "h* palindromic {}, unimodal {}, log-concave {}",
        h.is_palindromic(17)?,
        h.is_unimodal(),
        h.is_log_concave()
    );
    Ok(())
}
