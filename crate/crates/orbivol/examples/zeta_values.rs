//! Zeta and L-function special values: the full-precision character
//! route for quadratic fields (with the rational-times-power-of-π shape
//! of the even values), the quartic Euler products with certified tails,
//! and the relative L-function of a quadratic extension.
//!
//!     cargo run --release --example zeta_values

use orbivol::hp::HPReal;
use orbivol::nt::{
    builtin, dedekind_zeta_quadratic, dedekind_zeta_quartic, relative_l, QuadAlgebraic,
};

fn main() -> orbivol::Result<()> {
    let digits = 40;
    let wp = digits + 10;
    let cutoff = 200_000;

    let z2 = dedekind_zeta_quadratic(5, 2, digits)?;
    println!("zeta_k0(2) = {}", z2.to_decimal(35));
    // Klingen–Siegel: zeta_k0(2) · √5 / π⁴ is rational (here 2/75)
    let ratio = &(&z2 * &HPReal::from_u64(5, wp).sqrt()?) / &HPReal::pi(wp).pow_i(4);
    println!("zeta_k0(2) * sqrt(5)/pi^4 = {}  (= 2/75)", ratio.to_decimal(30));
    println!();

    for label in ["ell0", "ell2"] {
        let f = builtin(label)?;
        let v = dedekind_zeta_quartic(&f, 3, cutoff, digits)?;
        println!(
            "zeta_{label}(3) = {}  (tail <= {}, cutoff {cutoff})",
            v.value.to_decimal(25),
            v.tail_bound.to_decimal(3)
        );
    }
    println!();

    // the relative route: l = k0(sqrt(-1 + 2*sqrt(5))), the field of
    // absolute discriminant 475
    let k0 = builtin("k0")?;
    let beta = QuadAlgebraic { a: -1, b: 2, c: 1 };
    let l = relative_l(&k0, &beta, 3, cutoff, digits)?;
    println!(
        "L(3) for k0(sqrt(-1+2*sqrt5))/k0 = {}  (tail <= {})",
        l.value.to_decimal(25),
        l.tail_bound.to_decimal(3)
    );
    let zk3 = dedekind_zeta_quadratic(5, 3, digits)?;
    println!("zeta_l(3) = zeta_k0(3) * L(3) = {}", (&zk3 * &l.value).to_decimal(25));
    Ok(())
}
