//! Full character table of a small symmetric group, then the two partial
//! tables of S_8 used for `λ = (1^4)` and `λ = (2,2)`.
//!
//! ```text
//! cargo run --example character_table -- 5
//! ```

use charsum::character::chi;
use charsum::identity::reproduce_table;
use charsum::partition::partitions_of;

fn main() -> charsum::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    let ps = partitions_of(n);
    print!("{:>12}", "");
    for lambda in &ps {
        print!("{:>10}", lambda.to_exponent_string());
    }
    println!();
    for mu in &ps {
        print!("{:>12}", mu.to_exponent_string());
        for lambda in &ps {
            print!("{:>10}", chi(mu, lambda)?);
        }
        println!();
    }
    for which in [1, 2] {
        let t = reproduce_table(which)?;
        println!("\nlambda = {}\n{}", t.lambda, t.to_text());
    }
    Ok(())
}
