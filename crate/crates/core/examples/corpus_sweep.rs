//! Generate the default corpus and run every check over it.
//!
//! `cargo run --release --example corpus_sweep -- [seed]`

use std::time::Instant;

use mason_clc::corpus::{generate_corpus, sweep, CorpusConfig};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let config = CorpusConfig { seed, ..CorpusConfig::default() };
    let start = Instant::now();
    let corpus = generate_corpus(&config).expect("corpus generation");
    let summary = sweep(&corpus, &config, 1e-9).expect("sweep");
    println!(
        "{} matroids ({} graphic, {} uniform, {} linear, {} explicit) in {:.1?}",
        summary.total,
        summary.graphic,
        summary.uniform,
        summary.linear,
        summary.explicit,
        start.elapsed()
    );
    let checks: usize = summary.records.iter().map(|r| r.checks).sum();
    println!("{checks} certificate checks, {} failures", summary.failures.len());
    for id in &summary.failures {
        println!("  failed: {id}");
    }
}
