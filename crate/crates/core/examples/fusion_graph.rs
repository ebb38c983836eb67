//! Builds the regular fusion graph at `(N, h)`, checks its axioms and
//! spectrum, and prints it as an edge list or Graphviz source.
//!
//! ```bash
//! cargo run --example fusion_graph -- 3 5
//! cargo run --example fusion_graph -- 3 5 dot | dot -Tsvg > a5.svg
//! ```

use affine_signature::fusion::build_regular_graph;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().and_then(|s| s.parse().ok()).unwrap_or(3);
    let h: i64 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let dot = args.get(2).is_some_and(|s| s == "dot");

    let (graph, verification) = match build_regular_graph(n, h) {
        Ok(built) => built,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    };
    if dot {
        print!("{}", graph.to_dot());
        return;
    }
    print!("{}", graph.dump());
    let axioms = &verification.axioms;
    let spectral = &verification.spectral;
    println!(
        "vertices {}, edges per G_p {:?}",
        graph.dim(),
        (1..n).map(|p| graph.matrix(p).nnz()).collect::<Vec<_>>()
    );
    println!(
        "axioms: τ {} commute {} transpose {} conjugation {} grading {} connected {} sums {}",
        axioms.tau_conjugation,
        axioms.commuting,
        axioms.transpose_pairing,
        axioms.conjugation_symmetry,
        axioms.grading,
        axioms.connected,
        axioms.row_column_sums
    );
    println!(
        "spectrum: max deviation {:?}, min joint separation {:.3}, multiplicity free {}",
        spectral
            .max_deviation
            .iter()
            .map(|d| format!("{d:.1e}"))
            .collect::<Vec<_>>(),
        spectral.min_joint_separation,
        spectral.multiplicity_free
    );
}
