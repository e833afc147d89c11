//! The lower-bound cascade that isolates the three smallest lattices:
//! the degree bound, the discriminant bounds, the class-number bound, and
//! the covolumes of the two exceptional discriminant pairs that the
//! bounds alone cannot dismiss.
//!
//!     cargo run --release --example sieve_bounds

use orbivol::covolume::{
    bound_classno, bound_deg_ge7, bound_disc, bound_disc_pair, case_covolume_448,
    case_covolume_475,
};

fn main() -> orbivol::Result<()> {
    let digits = 40;
    let cutoff = 500_000;
    let threshold = 4e-3;

    let b37 = bound_deg_ge7(digits)?;
    println!("degree >= 7 bound:             {}  (> 4e-3: {})", b37.to_decimal(15), b37.to_f64() > threshold);

    let b35 = bound_disc(2, 27, digits)?;
    println!("disc bound   (d=2, Dk=27):     {}  (> 4e-3: {})", b35.to_decimal(15), b35.to_f64() > threshold);

    let b34 = bound_disc_pair(2, 8, 448, digits)?;
    println!("pair bound   (d=2, Dk=8, Dl=448): {}", b34.to_decimal(15));

    let b31 = bound_classno(2, 5, 475, 1, digits)?;
    println!(
        "class bound  (d=2, Dk=5, Dl=475, h=1): {}  (> 4e-3: {})",
        b31.to_decimal(15),
        b31.to_f64() > threshold
    );
    println!();
    println!("the class-number bound does not clear the threshold for the two");
    println!("remaining discriminant pairs, so their covolumes are computed directly:");
    println!();

    let c448 = case_covolume_448(digits, cutoff)?;
    println!("(Dk, Dl) = (8, 448): {}  (> 4e-3: {})", c448.hyperbolic_covolume.to_decimal(15), c448.hyperbolic_covolume.to_f64() > threshold);
    let c475 = case_covolume_475(digits, cutoff)?;
    println!("(Dk, Dl) = (5, 475): {}  (> 4e-3: {})", c475.hyperbolic_covolume.to_decimal(15), c475.hyperbolic_covolume.to_f64() > threshold);
    Ok(())
}
