//! Reproduce the full volume table: the three Coxeter polytopes with
//! their geometric volumes, and the matching arithmetic covolumes (twice
//! the polytope volumes).
//!
//!     cargo run --release --example volume_table

use orbivol::covolume::{hyperbolic_covolume, CaseLabel};
use orbivol::prism::{polytope_volume, Polytope};

fn main() -> orbivol::Result<()> {
    let digits = 40;
    let cutoff = 1_000_000;

    println!("{:<22} {:<20} volume", "group / polytope", "symbol");
    for (name, symbol, id) in [
        ("Delta0 / P0", "[5,3,3,3,3]", Polytope::P0),
        ("Delta1 / P1", "[5,3,3,3,3^{1,1}]", Polytope::P1),
        ("Delta2 / P2", "[5,3,3,3,4]", Polytope::P2),
    ] {
        let v = polytope_volume(id, None, digits)?;
        println!("{:<22} {:<20} {}", name, symbol, v.to_decimal(20));
    }
    println!();
    println!("{:<22} hyperbolic covolume", "lattice");
    for case in [CaseLabel::Gamma0, CaseLabel::Gamma1, CaseLabel::Gamma2] {
        let r = hyperbolic_covolume(case, digits, cutoff)?;
        println!("{:<22} {}", case.name(), r.hyperbolic_covolume.to_decimal(20));
    }
    Ok(())
}
