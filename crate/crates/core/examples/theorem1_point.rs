//! Compares the sign tallies of `cos(π q_i)` and `g_i` at one point.
//!
//! ```bash
//! cargo run --example theorem1_point -- 1/8 1/4
//! ```

use affine_signature::point::{compute_p, verify_theorem1_at};
use affine_signature::rational::{parse, render};
use affine_signature::ParamPoint;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let coords = if args.is_empty() {
        vec!["1/5".to_string(), "2/7".to_string(), "1/11".to_string()]
    } else {
        args
    };
    let parsed: Option<Vec<_>> = coords.iter().map(|s| parse(s)).collect();
    let point = match parsed.map(ParamPoint::new) {
        Some(Ok(point)) => point,
        Some(Err(e)) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
        None => {
            eprintln!("error: coordinates must look like 3 or 3/8");
            std::process::exit(2);
        }
    };

    let n = point.n();
    let p = compute_p(&point);
    let check = verify_theorem1_at(&point);
    println!("N = {n}, point ({})", point.render().join(", "));
    println!(
        "{:>3} {:>10} {:>10} {:>5} {:>12} {:>5}",
        "i", "p_i", "q_i", "cos", "g_i", "sign"
    );
    for i in 1..=n {
        println!(
            "{:>3} {:>10} {:>10} {:>5} {:>12.6} {:>5}",
            i,
            render(p.get(i)),
            render(check.q.get(i)),
            check.q_signs[i - 1],
            check.g.values[i - 1],
            check.g.signs[i - 1],
        );
    }
    println!("cos(π q) counts {}", check.q_counts);
    println!("g counts        {}", check.g_counts);
    println!("{}", if check.pass { "PASS" } else { "FAIL" });
}
