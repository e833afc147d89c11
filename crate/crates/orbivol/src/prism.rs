//! Volumes of the compact 5-prism family P(α) = [5,3,3,3,α].
//!
//! The Schläfli volume differential reduces vol₅(P(α)) to a line integral
//! of a closed-form 3-orthoscheme volume:
//!
//!   vol₅(P(α)) = ¼ ∫_α^{2π/5} vol₃([5, 3, β(t)]) dt + ζ(3)/3200,
//!
//! with β(t) = arctan √(2 − cot² t) and the face volume given by
//! Lobachevsky's orthoscheme formula in terms of Л₂. The additive constant
//! ζ(3)/3200 is the closed-form volume of the degenerate end P(2π/5),
//! which itself arises from two scissors-congruence identities kept in
//! [`closed_form_references`].

use crate::error::{Error, Result};
use crate::hp::{require_min_digits, working_digits, HPReal};
use crate::lobachevsky::{lob2, lob3, zeta_int};
use crate::quad;

/// Dihedral-angle parameter of the prism family, α ∈ [π/4, 2π/5].
#[derive(Clone, Debug)]
pub struct PrismAngle {
    pub alpha: HPReal,
}

impl PrismAngle {
    pub fn new(alpha: HPReal, digits: u32) -> Result<PrismAngle> {
        require_min_digits(digits)?;
        let wp = working_digits(digits);
        let pi = HPReal::pi(wp);
        let lo = &pi / &HPReal::from_u64(4, wp);
        let hi = &(&pi * &HPReal::from_u64(2, wp)) / &HPReal::from_u64(5, wp);
        // one-ulp slack so endpoint representations at lower precision pass
        let slack = HPReal::pow10(-(digits as i64), wp);
        if alpha < (&lo - &slack) || alpha > (&hi + &slack) {
            return Err(Error::domain(
                "prism_volume",
                &alpha,
                "alpha outside the prism family range [pi/4, 2pi/5]",
            ));
        }
        Ok(PrismAngle { alpha })
    }
}

/// Face data of the 3-orthoscheme [5, 3, β(t)] at integration parameter t.
#[derive(Clone, Debug)]
pub struct OrthoschemeFace {
    pub t: HPReal,
    pub beta: HPReal,
    pub theta: HPReal,
}

impl OrthoschemeFace {
    pub fn at(t: &HPReal, digits: u32) -> Result<OrthoschemeFace> {
        let beta = beta_of_t(t, digits)?;
        let theta = theta_of_t(t, digits)?;
        Ok(OrthoschemeFace { t: t.clone(), beta, theta })
    }
}

/// β(t) = arctan √(2 − cot² t).
pub fn beta_of_t(t: &HPReal, digits: u32) -> Result<HPReal> {
    require_min_digits(digits)?;
    let wp = working_digits(digits);
    let cot = t.cot()?;
    let radicand = &HPReal::from_u64(2, wp) - &(&cot * &cot);
    if radicand.is_negative() {
        return Err(Error::domain(
            "beta_of_t",
            t,
            format!("2 - cot^2 t = {radicand} is negative (outside the prism family range)"),
        ));
    }
    Ok(radicand.sqrt()?.atan())
}

/// θ(t) = arctan [ √(1 − 4 sin²(π/5) sin²β(t)) / (2 cos(π/5) cos β(t)) ].
pub fn theta_of_t(t: &HPReal, digits: u32) -> Result<HPReal> {
    let beta = beta_of_t(t, digits)?;
    theta_of_beta(&beta, digits)
}

fn theta_of_beta(beta: &HPReal, digits: u32) -> Result<HPReal> {
    require_min_digits(digits)?;
    let wp = working_digits(digits);
    let pi5 = &HPReal::pi(wp) / &HPReal::from_u64(5, wp);
    let sin_b = beta.sin();
    let radicand = &HPReal::from_u64(1, wp)
        - &(&(&HPReal::from_u64(4, wp) * &pi5.sin().square()) * &sin_b.square());
    if radicand.is_negative() {
        return Err(Error::domain(
            "theta_of_t",
            beta,
            "1 - 4 sin^2(pi/5) sin^2(beta) is negative: non-compact configuration",
        ));
    }
    let denom = &(&HPReal::from_u64(2, wp) * &pi5.cos()) * &beta.cos();
    Ok((&radicand.sqrt()? / &denom).atan())
}

/// Volume of the compact 3-orthoscheme face [5, 3, β(t)] by Lobachevsky's
/// formula.
pub fn vol3_orthoscheme(t: &HPReal, digits: u32) -> Result<HPReal> {
    require_min_digits(digits)?;
    let wp = working_digits(digits);
    let face = OrthoschemeFace::at(t, digits)?;
    vol3_from_face(&face, wp, digits)
}

fn vol3_from_face(face: &OrthoschemeFace, wp: u32, digits: u32) -> Result<HPReal> {
    let pi = HPReal::pi(wp);
    let pi5 = &pi / &HPReal::from_u64(5, wp);
    let pi6 = &pi / &HPReal::from_u64(6, wp);
    let half_pi = &pi / &HPReal::from_u64(2, wp);
    let th = &face.theta;
    let b = &face.beta;
    let l = |x: HPReal| lob2(&x, digits);
    let mut sum = l(&pi5 + th)?;
    sum = sum - l(&pi5 - th)?;
    sum = sum - l(&pi6 + th)?;
    sum = sum + l(&pi6 - th)?;
    sum = sum + l(b + th)?;
    sum = sum - l(b - th)?;
    sum = sum + HPReal::from_u64(2, wp) * l(&half_pi - th)?;
    Ok(&sum / &HPReal::from_u64(4, wp))
}

/// vol₅(P(α)) by the Schläfli differential with the P(2π/5) anchor value.
///
/// `tol` is the absolute quadrature tolerance; it defaults to
/// 10^−(digits−5).
pub fn prism_volume(alpha: &HPReal, tol: Option<&HPReal>, digits: u32) -> Result<HPReal> {
    require_min_digits(digits)?;
    let wp = working_digits(digits);
    let angle = PrismAngle::new(alpha.clone(), digits)?;
    let two_pi5 = &(&HPReal::pi(wp) * &HPReal::from_u64(2, wp)) / &HPReal::from_u64(5, wp);
    let default_tol = HPReal::pow10(-(digits as i64 - 5), wp);
    let tol = tol.cloned().unwrap_or(default_tol);
    // clamp the upper endpoint so a lower-precision representation of 2π/5
    // does not produce a reversed interval
    let upper = if angle.alpha > two_pi5 { angle.alpha.clone() } else { two_pi5 };
    let integral = quad::integrate(|t| vol3_orthoscheme(t, digits), &angle.alpha, &upper, &tol)?;
    let anchor = &zeta_int(3, digits)? / &HPReal::from_u64(3200, wp);
    Ok(&(&integral.value / &HPReal::from_u64(4, wp)) + &anchor)
}

/// The three closed-form volumes tied to the prism family:
/// vol₅([5/2,3,3,5,5/2]), vol₅([5,3,3,5/2,5]) and vol₅(P(2π/5)).
///
/// The third equals one fifth of the difference of the first two.
pub fn closed_form_references(digits: u32) -> Result<Vec<(String, HPReal)>> {
    require_min_digits(digits)?;
    let wp = working_digits(digits);
    let z3 = zeta_int(3, digits)?;
    let l3 = lob3(&(&HPReal::pi(wp) / &HPReal::from_u64(5, wp)), digits)?;
    let eleven_1152 = HPReal::from_ratio(11, 1152, wp);
    let first = &(&(&z3 * &HPReal::from_u64(13, wp)) / &HPReal::from_u64(9600, wp))
        + &(&eleven_1152 * &l3);
    let second = &(&eleven_1152 * &l3) - &(&z3 / &HPReal::from_u64(4800, wp));
    let third = &z3 / &HPReal::from_u64(3200, wp);
    Ok(vec![
        ("vol5([5/2,3,3,5,5/2])".to_string(), first),
        ("vol5([5,3,3,5/2,5])".to_string(), second),
        ("vol5(P(2pi/5))".to_string(), third),
    ])
}

/// The three polytopes whose volumes the suite certifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Polytope {
    P0,
    P1,
    P2,
}

impl Polytope {
    pub fn parse(s: &str) -> Result<Polytope> {
        match s.to_ascii_uppercase().as_str() {
            "P0" => Ok(Polytope::P0),
            "P1" => Ok(Polytope::P1),
            "P2" => Ok(Polytope::P2),
            _ => Err(Error::Validation(format!("unknown polytope {s:?}; expected P0, P1 or P2"))),
        }
    }
}

/// Volume of P₀ = P(π/3), P₂ = P(π/4), or their double P₁ = DP₀.
///
/// P₁ is evaluated as exactly twice P₀ (doubling across the common facet),
/// so `polytope_volume(P1) == 2 · polytope_volume(P0)` bit for bit.
pub fn polytope_volume(id: Polytope, tol: Option<&HPReal>, digits: u32) -> Result<HPReal> {
    require_min_digits(digits)?;
    let wp = working_digits(digits);
    let pi = HPReal::pi(wp);
    match id {
        Polytope::P0 => prism_volume(&(&pi / &HPReal::from_u64(3, wp)), tol, digits),
        Polytope::P2 => prism_volume(&(&pi / &HPReal::from_u64(4, wp)), tol, digits),
        Polytope::P1 => {
            let p0 = polytope_volume(Polytope::P0, tol, digits)?;
            Ok(&p0 * &HPReal::from_u64(2, wp))
        }
    }
}
