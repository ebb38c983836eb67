//! Weights of the level-`k` alcove, their σ-orbits, grading, `q^{(R)}` and
//! the bridge to parameter points.
//!
//! ```bash
//! cargo run --example affine_weights -- 3 6
//! ```

use affine_signature::affine::{
    bridge_identities, eigenvalue_g, enumerate_weights, orbits, q_r, sigma, tau, tau_shift,
    to_param,
};
use affine_signature::rational::render;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().and_then(|s| s.parse().ok()).unwrap_or(3);
    let h: i64 = args
        .get(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(n as i64 + 3);

    let weights = match enumerate_weights(n, h) {
        Ok(ws) => ws,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    };
    println!(
        "SU({n}), h = {h}: {} weights, σ shifts τ by {}",
        weights.len(),
        tau_shift(n, h)
    );
    for w in &weights {
        let e = eigenvalue_g(w).expect("eigenvalue is real");
        println!(
            "  {:<14} τ={} σ→{:<14} conj {:<14} λ'=({}) q_R={:<8} g={:+.6} ({})",
            w.to_string(),
            tau(w),
            sigma(w).to_string(),
            w.conjugate().to_string(),
            to_param(w).render().join(","),
            render(&q_r(w)),
            e.g_value,
            e.g_sign,
        );
    }
    println!("orbits:");
    for o in orbits(&weights) {
        let bridge = bridge_identities(&o.representative).expect("bridge computes");
        println!(
            "  {} (d = {}): q mod 2 {}, q exact {}, max |g - g_j| = {:.1e}",
            o.representative,
            o.d,
            bridge.q_mod2_holds,
            bridge.q_exact_holds,
            bridge.max_g_deviation
        );
    }
}
