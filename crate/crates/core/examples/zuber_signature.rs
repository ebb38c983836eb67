//! Signature of the intersection form of a regular fusion graph, computed
//! exactly, numerically, and from the interval counts of `q^{(R)}`.
//!
//! ```bash
//! cargo run --release --example zuber_signature -- 4 9
//! ```

use affine_signature::fusion::{verify_zuber, ZERO_TOL};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().and_then(|s| s.parse().ok()).unwrap_or(3);
    let h: i64 = args
        .get(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(n as i64 + 3);

    let case = match verify_zuber(n, h, ZERO_TOL) {
        Ok(case) => case,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    };
    println!(
        "SU({n}) at level {} ({} vertices)",
        case.level, case.vertices
    );
    println!("  exact signature     {}", case.exact);
    println!("  numeric signature   {}", case.numeric);
    println!("  interval counts     {}", case.zuber);
    println!("  smallest |eigenvalue| {:.3e}", case.min_abs_eigenvalue);
    println!("  orbits              {}", case.orbits.len());
    for o in &case.orbits {
        println!(
            "    {} d={}  g {}  q {}{}",
            o.representative,
            o.d,
            o.g_counts,
            o.q_counts,
            if o.pass { "" } else { "  MISMATCH" }
        );
    }
    println!(
        "  bridge: max |g - g_j| = {:.2e}, q mod 2 {}, q unreduced {}",
        case.bridge_g_max_deviation, case.bridge_q_mod2_holds, case.bridge_q_exact_holds
    );
    println!("  {}", if case.pass { "PASS" } else { "FAIL" });
    for f in &case.failures {
        println!("    {f}");
    }
}
