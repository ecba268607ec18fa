//! `Ev(λ)` with multiplicities, and the even-row and even-column sets.
//!
//! ```text
//! cargo run --example ev_sets -- 3,2,2 3
//! ```

use charsum::ev::{ev, r_even_cols, r_even_rows};
use charsum::partition::Partition;

fn main() -> charsum::Result<()> {
    let mut args = std::env::args().skip(1);
    let lambda: Partition = args.next().unwrap_or_else(|| "3,2,2".into()).parse()?;
    let big_n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);

    println!("Ev({lambda}):");
    for (p, m) in ev(&lambda)?.iter() {
        println!("  {m:>3} x ({p})");
    }
    let two_n = 2 * lambda.size();
    let show = |name: &str, list: Vec<Partition>| {
        let names: Vec<String> = list.iter().map(|p| format!("({p})")).collect();
        println!("{name} [{}]: {}", list.len(), names.join(" "));
    };
    show(
        &format!("R_{}({two_n})", 2 * big_n + 1),
        r_even_rows(2 * big_n + 1, two_n)?,
    );
    show(
        &format!("R^c_{}({two_n})", 2 * big_n),
        r_even_cols(2 * big_n, two_n)?,
    );
    Ok(())
}
