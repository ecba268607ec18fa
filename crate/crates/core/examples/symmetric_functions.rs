//! Monomial-basis expansions: the signed Ev power sum equals
//! `2^ℓ Π m_(λi,λi)`, and `<m_(1,1)^n, s_(2^n)>` is the Riordan number.

use charsum::partition::{partitions_of, Partition};
use charsum::symfunc::{check_thm32, ev_signed_power_sum, inner_m_schur, SymFuncM};

fn main() -> charsum::Result<()> {
    let lambda: Partition = "2,1".parse()?;
    println!("signed Ev power sum for ({lambda}):");
    for (p, c) in ev_signed_power_sum(&lambda)?.coeffs() {
        println!("  {c:>4} m_({p})");
    }
    for n in 1..=6 {
        let ok = partitions_of(n)
            .iter()
            .all(|l| check_thm32(l).unwrap_or(false));
        println!("n = {n}: product formula holds for every partition: {ok}");
    }
    let m11 = SymFuncM::monomial("1,1".parse()?);
    for n in 1..=8 {
        let v = inner_m_schur(&m11.pow(n), &Partition::rectangle(2, n))?;
        println!("<m_(1,1)^{n}, s_(2^{n})> = {v}");
    }
    Ok(())
}
