//! Evaluate the Lobachevsky functions Л₂ and Л₃ and check their
//! structural identities: oddness/evenness, π-periodicity, the
//! duplication law, and agreement between the fast series route and the
//! integral representation of Л₃.
//!
//!     cargo run --release --example lobachevsky

use orbivol::hp::HPReal;
use orbivol::lobachevsky::{lob2, lob3, lob3_integral, zeta_int};

fn main() -> orbivol::Result<()> {
    let digits = 40;
    let wp = digits + 10;
    let pi = HPReal::pi(wp);

    println!("zeta(3) = {}", zeta_int(3, digits)?.to_decimal(40));
    println!();

    for (name, omega) in [
        ("pi/6", &pi / &HPReal::from_u64(6, wp)),
        ("pi/5", &pi / &HPReal::from_u64(5, wp)),
        ("pi/2", &pi / &HPReal::from_u64(2, wp)),
    ] {
        println!("lob2({name}) = {}", lob2(&omega, digits)?.to_decimal(35));
        println!("lob3({name}) = {}", lob3(&omega, digits)?.to_decimal(35));
    }
    println!();

    // duplication: lob2(2w) = 2 lob2(w) + 2 lob2(w + pi/2)
    let w = HPReal::parse("0.7", wp)?;
    let lhs = lob2(&(&w + &w), digits)?;
    let rhs = &(&HPReal::from_u64(2, wp) * &lob2(&w, digits)?)
        + &(&HPReal::from_u64(2, wp) * &lob2(&(&w + &(&pi / &HPReal::from_u64(2, wp))), digits)?);
    println!("duplication residual at 0.7: {}", (&lhs - &rhs).abs().to_decimal(3));

    // the two routes to lob3 agree
    let series = lob3(&w, digits)?;
    let integral = lob3_integral(&w, digits)?;
    println!("lob3 series vs integral at 0.7: {}", (&series - &integral).abs().to_decimal(3));
    Ok(())
}
