//! Riordan paths, their tableaux of shape `(k,k,1^m)`, and the ballot
//! sequences with matching parity, all counted by the Riordan numbers.
//!
//! ```text
//! cargo run --example riordan_paths -- 5
//! ```

use charsum::paths::{
    ballot_enumerate, ballot_to_tableau, matching_parity_count, riordan_count, riordan_enumerate,
    riordan_to_tableau, sum_f_x, sum_f_y,
};

fn main() -> charsum::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    println!("R({n}) = {}", riordan_count(n));
    for path in riordan_enumerate(n) {
        let t = riordan_to_tableau(&path)?;
        println!("  {path}  ->  {:?}", t.rows());
    }
    println!("matching-parity ballots: {}", matching_parity_count(n));
    for b in ballot_enumerate(n)
        .iter()
        .filter(|b| b.has_matching_parity())
    {
        println!("  {b}  ->  {:?}", ballot_to_tableau(b).rows());
    }
    println!("sum over X: {}, sum over Y: {}", sum_f_x(n), sum_f_y(n));
    Ok(())
}
