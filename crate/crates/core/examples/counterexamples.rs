//! Where the per-partition identity breaks: the row-by-row deltas for
//! `(5,2,1)` and the discrepancies for `(3^2,2^3,1)` across all levels.

use charsum::identity::{counterexample_report, LambdaProfile, SizeProfile};
use charsum::partition::Partition;

fn main() -> charsum::Result<()> {
    let lambda: Partition = "5,2,1".parse()?;
    for big_n in [3, 4] {
        let r = counterexample_report(&lambda, big_n)?;
        println!("lambda = ({lambda}), N = {big_n}");
        for c in r.new_lhs_columns.iter().chain(&r.new_rhs_columns) {
            println!("  new {:?} row ({}) contributes {}", c.side, c.mu, c.value);
        }
        println!(
            "  deltas: lhs {}, rhs {}; difference now {}\n",
            r.lhs_delta, r.rhs_delta, r.current.difference
        );
    }

    let holding = SizeProfile::compute(8)?.holding(3)?;
    let names: Vec<String> = holding.iter().map(|p| format!("({p})")).collect();
    println!("n = 8, N = 3 holds only for {}\n", names.join(" "));

    let lambda: Partition = "3,3,2,2,2,1".parse()?;
    let profile = LambdaProfile::compute(&lambda)?;
    for big_n in 1..=8 {
        println!(
            "({lambda}) N = {big_n}: rhs - lhs = {}",
            profile.rhs(big_n)? - profile.lhs(big_n)?
        );
    }
    Ok(())
}
