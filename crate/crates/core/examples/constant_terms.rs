//! Constant-term evaluations: characters with at most three rows, and the
//! single-part-size sums against their trinomial closed forms.

use charsum::constant_term::{
    a_c, b_c, central_trinomial, chi_via_ct, riordan_via_ct, AMode, BMode,
};
use charsum::partition::Partition;

fn main() -> charsum::Result<()> {
    let mu: Partition = "4,4".parse()?;
    for lambda in [
        Partition::rectangle(1, 8),
        "2,1,1,1,1,1,1".parse()?,
        "2,2,2,2".parse()?,
    ] {
        println!("chi^({mu})_({lambda}) = {}", chi_via_ct(&mu, &lambda)?);
    }
    println!();
    for d in 1..=6 {
        println!(
            "d = {d}: R(d) = {:>3}, T(d) = {:>3}, A_1 = {:>5}, B_1 = {:>5}, A_2 = {:>5}, B_2 = {:>5}",
            riordan_via_ct(d),
            central_trinomial(d),
            a_c(1, d, AMode::Closed)?,
            b_c(1, d, BMode::Chars)?,
            a_c(2, d, AMode::Chars)?,
            b_c(2, d, BMode::Closed)?,
        );
    }
    println!(
        "B_2(3) from the three-variable constant term: {}",
        b_c(2, 3, BMode::CtIntermediate)?
    );
    Ok(())
}
