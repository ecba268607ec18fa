//! Both sides of the `g_λ(q)`-weighted identity as truncated series.
//!
//! ```text
//! cargo run --release --example q_series -- 1 10
//! ```

use charsum::qseries::conj_q_sides;

fn main() -> charsum::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .filter_map(|s| s.parse::<usize>().ok());
    let big_n = args.next().unwrap_or(1);
    let order = args.next().unwrap_or(10);
    let (lhs, rhs) = conj_q_sides(big_n, order)?;
    println!("N = {big_n}");
    println!("lhs = {lhs}");
    println!("rhs = {rhs}");
    println!("equal: {}", lhs == rhs);
    Ok(())
}
