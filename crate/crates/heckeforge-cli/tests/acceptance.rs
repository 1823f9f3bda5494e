use heckeforge_cli::acceptance::{run, TITLES};
use std::time::Instant;

const SEED: u64 = 20240607;

// Runs without the libtest harness so the per-criterion lines always print.
fn main() {
    // criteria are independent; run them side by side, report in order
    let results: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = (1..=10)
            .map(|i| {
                s.spawn(move || {
                    let t = Instant::now();
                    (run(i, SEED), t.elapsed())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("criterion panicked")).collect()
    });
    let mut failed = Vec::new();
    for (i, (case, dt)) in results.iter().enumerate() {
        let tag = if case.passed() { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {:2} ({}): {} [{:.1}s]", i + 1, TITLES[i], case.got, dt.as_secs_f64());
        if !case.passed() {
            failed.push(i + 1);
        }
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failed.len());
    if !failed.is_empty() {
        eprintln!("failing criteria: {failed:?}");
        std::process::exit(1);
    }
}
