//! One line per acceptance criterion, each run at its pinned parameters.

use std::time::Instant;

use prepieri::sweep::{run_criterion, SweepConfig, CRITERIA};

/// Criteria that carry a wall-clock budget, in seconds.
const BUDGET_SECS: [(u8, f64); 2] = [(1, 30.0), (2, 30.0)];

#[test]
fn acceptance() {
    let cfg = SweepConfig::default();
    let mut failed = Vec::new();
    for (id, _) in CRITERIA {
        let start = Instant::now();
        let r = run_criterion(id, &cfg).expect("listed criterion");
        let secs = start.elapsed().as_secs_f64();
        let over = BUDGET_SECS.iter().find(|(i, b)| *i == id && secs >= *b);
        println!("{r} [{secs:.2}s]");
        if let Some((_, b)) = over {
            println!("[FAIL] {id}. over the {b}s budget");
        }
        if !r.passed || over.is_some() {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
