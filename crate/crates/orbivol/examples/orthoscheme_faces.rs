//! The integrand of the prism volume formula: the angle functions β(t),
//! θ(t) and the 3-orthoscheme face volume vol₃([5, 3, β(t)]) across the
//! admissible parameter range.
//!
//!     cargo run --release --example orthoscheme_faces

use orbivol::hp::HPReal;
use orbivol::prism::{beta_of_t, theta_of_t, vol3_orthoscheme};

fn main() -> orbivol::Result<()> {
    let digits = 30;
    let wp = digits + 10;
    let pi = HPReal::pi(wp);
    let lo = &pi / &HPReal::from_u64(4, wp);
    let hi = &(&pi * &HPReal::from_u64(2, wp)) / &HPReal::from_u64(5, wp);
    let steps = 10u64;
    let h = &(&hi - &lo) / &HPReal::from_u64(steps, wp);

    println!("{:>10}  {:>12}  {:>12}  {:>14}", "t", "beta(t)", "theta(t)", "vol3 face");
    for k in 0..=steps {
        let t = &lo + &(&h * &HPReal::from_u64(k, wp));
        let beta = beta_of_t(&t, digits)?;
        let theta = theta_of_t(&t, digits)?;
        let v = vol3_orthoscheme(&t, digits)?;
        println!(
            "{:>10.6}  {:>12.8}  {:>12.8}  {:>14.10}",
            t.to_f64(),
            beta.to_f64(),
            theta.to_f64(),
            v.to_f64()
        );
    }
    println!();
    println!("the face volume is the Schläfli derivative of the prism volume (up to the factor -1/4),");
    println!("so it stays positive and the prism volume is strictly decreasing in alpha");
    Ok(())
}
