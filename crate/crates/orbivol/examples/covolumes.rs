//! Arithmetic covolumes of the three smallest lattices, assembled from
//! the principal volume formula with full provenance.
//!
//!     cargo run --release --example covolumes

use orbivol::covolume::{hyperbolic_covolume, CaseLabel};

fn main() -> orbivol::Result<()> {
    let digits = 40;
    let cutoff = 500_000; // bump to 10_000_000 for the certified 11+ digits

    for case in [CaseLabel::Gamma0, CaseLabel::Gamma1, CaseLabel::Gamma2] {
        let r = hyperbolic_covolume(case, digits, cutoff)?;
        println!(
            "{}: {}   (tail <= {})",
            case.name(),
            r.hyperbolic_covolume.to_decimal(20),
            r.tail_bound.to_decimal(3)
        );
        for p in &r.provenance {
            match p.cutoff {
                Some(c) => println!("    {} = {} [cutoff {c}]", p.name, p.value),
                None => println!("    {} = {}", p.name, p.value),
            }
        }
        println!();
    }
    Ok(())
}
