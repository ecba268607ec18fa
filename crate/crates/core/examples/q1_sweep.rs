//! Aggregated identity for every `N ≤ n`, one size at a time.
//!
//! ```text
//! cargo run --release --example q1_sweep -- 12
//! ```

use charsum::identity::SizeProfile;

fn main() -> charsum::Result<()> {
    let max_n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(9);
    for n in 1..=max_n {
        let profile = SizeProfile::compute(n)?;
        for big_n in 1..=n {
            let r = profile.q1_report(big_n)?;
            let mark = if r.holds { "holds" } else { "FAILS" };
            println!(
                "n={n:>2} N={big_n:>2}  lhs={}  rhs={}  {mark}",
                r.lhs, r.rhs
            );
        }
    }
    Ok(())
}
