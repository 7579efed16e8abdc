//! Times each acceptance criterion; pass criterion ids as arguments to run a
//! subset. `cargo run --release -p symfock --example criterion_timing`.

use std::time::Instant;
use symfock::selftest::{run_criterion, DEFAULT_SEED};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let ids: Vec<usize> = if args.len() > 1 {
        args[1..].iter().map(|s| s.parse().unwrap()).collect()
    } else {
        (1..=10).collect()
    };
    for id in ids {
        let t = Instant::now();
        let r = run_criterion(id, DEFAULT_SEED);
        println!(
            "criterion {:2} [{}] {:.1}s - {}",
            id,
            if r.passed { "PASS" } else { "FAIL" },
            t.elapsed().as_secs_f64(),
            r.details
        );
    }
}
