//! Volumes of the compact prisms P(α) = [5,3,3,3,α] by the Schläfli
//! volume differential: the three named polytopes, the closed-form
//! endpoint P(2π/5) = ζ(3)/3200, and the scissors-congruence identity
//! behind it.
//!
//!     cargo run --release --example prism_volumes

use orbivol::hp::HPReal;
use orbivol::lobachevsky::zeta_int;
use orbivol::prism::{closed_form_references, polytope_volume, prism_volume, Polytope};

fn main() -> orbivol::Result<()> {
    let digits = 40;
    let wp = digits + 10;
    let pi = HPReal::pi(wp);

    println!("vol5(P0) = vol5(P(pi/3)) = {}", polytope_volume(Polytope::P0, None, digits)?.to_decimal(30));
    println!("vol5(P1) = 2 vol5(P0)    = {}", polytope_volume(Polytope::P1, None, digits)?.to_decimal(30));
    println!("vol5(P2) = vol5(P(pi/4)) = {}", polytope_volume(Polytope::P2, None, digits)?.to_decimal(30));
    println!();

    let endpoint = prism_volume(&(&(&pi * &HPReal::from_u64(2, wp)) / &HPReal::from_u64(5, wp)), None, digits)?;
    let anchor = &zeta_int(3, digits)? / &HPReal::from_u64(3200, wp);
    println!("vol5(P(2pi/5))  = {}", endpoint.to_decimal(30));
    println!("zeta(3)/3200    = {}", anchor.to_decimal(30));
    println!();

    println!("closed-form volumes entering the endpoint value:");
    let refs = closed_form_references(digits)?;
    for (name, value) in &refs {
        println!("  {name} = {}", value.to_decimal(30));
    }
    let identity = &(&(&refs[0].1 - &refs[1].1) / &HPReal::from_u64(5, wp)) - &refs[2].1;
    println!("  (first - second)/5 - third = {}", identity.abs().to_decimal(3));
    Ok(())
}
