//! Seeded campaigns over random points and over levels, emitted as JSON,
//! CSV or a text summary.
//!
//! ```bash
//! cargo run --release --example campaign -- text
//! cargo run --release --example campaign -- json > report.json
//! ```

use affine_signature::campaign::{run_theorem1_campaign, run_zuber_campaign};
use affine_signature::config::{CampaignConfig, Format};
use affine_signature::rational::rat;
use affine_signature::report::emit;
use std::io::Write;

fn main() {
    let format: Format = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "text".into())
        .parse()
        .unwrap_or_else(|e| {
            eprintln!("error: {e}");
            std::process::exit(2);
        });

    let theorem1 = CampaignConfig {
        n_values: vec![3, 4, 5],
        trials: 50,
        boundary_fraction: rat(1, 4),
        seed: 11,
        ..CampaignConfig::default()
    };
    let zuber = CampaignConfig {
        n_values: vec![3, 4],
        level_range: (1..=6).collect(),
        ..CampaignConfig::default()
    };

    let mut out = std::io::stdout().lock();
    let mut ok = true;
    for report in [run_theorem1_campaign(&theorem1), run_zuber_campaign(&zuber)] {
        let report = report.unwrap_or_else(|e| {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        });
        ok &= report.pass;
        out.write_all(&emit(&report, format).expect("serializes"))
            .unwrap();
    }
    std::process::exit(if ok { 0 } else { 1 });
}
