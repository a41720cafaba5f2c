use apery_core::arith::PrimeRange;
use apery_core::claims::{registry, run_range, Status};

#[test]
fn registry_smoke_small_primes() {
    let claims: Vec<_> = registry().iter().collect();
    let report = run_range(&claims, &PrimeRange::new(3, 140), 31);
    let mut bad = 0;
    for r in &report.results {
        match r.status {
            Status::Failed | Status::Indeterminate => {
                bad += 1;
                println!(
                    "{} p={} {}: lhs={} rhs={} witness={:?}",
                    r.claim_id,
                    r.p,
                    r.status.as_str(),
                    r.lhs,
                    r.rhs,
                    r.witness
                );
            }
            _ => {}
        }
    }
    assert_eq!(bad, 0, "{} non-verified rows", bad);
}
