//! Reads the sign of every `g_r` off a chamber label, and pairs walls with
//! zeros of `g` on a boundary point.
//!
//! ```bash
//! cargo run --example chamber_prediction -- 5 42
//! ```

use affine_signature::campaign::{admissible_pairs, item_rng, sample_boundary, sample_interior};
use affine_signature::point::g_signs;
use affine_signature::regions::{boundary_pairs, classify, predict_g, ChamberClass};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().and_then(|s| s.parse().ok()).unwrap_or(4);
    let seed: u64 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    if n < 2 {
        eprintln!("error: N must be at least 2");
        std::process::exit(2);
    }

    let mut rng = item_rng(seed, n, 0);
    let point = sample_interior(n, 64, &mut rng).expect("bound 64 admits interior points");
    println!("interior point ({})", point.render().join(", "));
    let ChamberClass::Interior(gamma) = classify(&point) else {
        unreachable!("sample_interior avoids walls")
    };
    let betas: Vec<String> = gamma.betas().iter().map(|b| b.to_string()).collect();
    println!(
        "  gamma {:?}, beta [{}], blocks end at {:?}",
        gamma.gamma(),
        betas.join(", "),
        gamma.blocks().boundaries
    );
    let direct = g_signs(&point);
    for pred in predict_g(&gamma).expect("valid label") {
        let route = if pred.crossing {
            format!("crossing at k = {}, block {}", pred.k, pred.block)
        } else {
            format!("single window k = {}", pred.k)
        };
        println!(
            "  g_{}: predicted {}  direct {}  ({route})",
            pred.r,
            pred.sign,
            direct[pred.r - 1]
        );
    }

    let pairs = admissible_pairs(n);
    if pairs.is_empty() {
        println!("no walls cross the simplex for N = {n}");
        return;
    }
    let (i, j) = pairs[seed as usize % pairs.len()];
    let point = sample_boundary(n, i, j, 64, &mut rng).expect("admissible pair");
    println!(
        "boundary point with q_{i} = {j} + 1/2: ({})",
        point.render().join(", ")
    );
    let g = g_signs(&point);
    for (wall, r) in boundary_pairs(&point).expect("walls pair with zeros") {
        println!("  wall q_{wall} <-> g_{r} = {}", g[r - 1]);
    }
}
