//! Parse Coxeter symbols, build Gram matrices, check signatures, and
//! solve for the dashed-edge length of the truncating polar hyperplane.
//!
//!     cargo run --release --example coxeter_diagrams

use orbivol::coxeter::{
    default_zero_tol, gram, gram_det, inertia, parse_symbol, prism_diagram, render_symbol,
    solve_dashed, Edge, EdgeKind, Weight,
};

fn main() -> orbivol::Result<()> {
    let digits = 30;

    for symbol in ["[5,3,3,3,3]", "[5,3,3,3,4]", "[5,3,3,5/2,5]", "[5,3,3,3,3^{1,1}]"] {
        let d = parse_symbol(symbol)?;
        let g = gram(&d, digits)?;
        let inr = inertia(&g, &default_zero_tol(digits));
        println!(
            "{symbol:<20} nodes {}  inertia {}  round-trip {}",
            d.nodes,
            inr,
            render_symbol(&d).as_deref().unwrap_or("-")
        );
    }
    println!();

    // the compact prisms: add the polar node of the truncated ultra-ideal
    // vertex and solve for the common-perpendicular length
    for (alpha, name) in [(Weight::new(3, 1)?, "P(pi/3)"), (Weight::new(4, 1)?, "P(pi/4)")] {
        let d = prism_diagram(alpha)?;
        let l = solve_dashed(&d, (6, 5), digits)?;
        let mut solved = d.clone();
        solved.edges.pop();
        solved.edges.push(Edge { i: 6, j: 5, kind: EdgeKind::Dashed(Some(l.clone())) });
        let g = gram(&solved, digits)?;
        println!(
            "{name}: perpendicular length l = {}  inertia {}  |det| = {}",
            l.to_decimal(25),
            inertia(&g, &default_zero_tol(digits)),
            gram_det(&g).abs().to_decimal(3)
        );
    }
    Ok(())
}
