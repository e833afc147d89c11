//! Arithmetic covolumes, sieve bounds, and the geometric/arithmetic
//! identity check.
//!
//! Covolumes are assembled from the principal volume
//! μ = D_k^{7.5} (D_l/D_k²)^{2.5} C^d ζ_k(2) ζ_k(4) L_{l/k}(3), converted
//! to hyperbolic volume by the dimension-5 normalization factor 2π³ and
//! divided by the normalizer index of the case. The index constants are
//! adopted as given facts of the construction, not computed.

use crate::error::{Error, Result};
use crate::hp::{require_min_digits, working_digits, HPReal};
use crate::nt::field::builtin;
use crate::nt::zeta::{dedekind_zeta_quadratic, dedekind_zeta_quartic, relative_l, QuadAlgebraic};
use crate::prism;

/// The constants of the covolume formulas, frozen at a working precision.
#[derive(Clone, Debug)]
pub struct PrasadConstants {
    /// C = 3 · 2⁻⁷ · π⁻⁹
    pub c: HPReal,
    /// a = 3³ · 2⁻⁴ · π⁻¹¹
    pub a: HPReal,
    /// 2π³, the Haar-to-hyperbolic conversion in dimension 5
    pub hyperbolic_factor: HPReal,
}

impl PrasadConstants {
    pub fn new(digits: u32) -> Result<PrasadConstants> {
        require_min_digits(digits)?;
        let wp = working_digits(digits);
        let pi = HPReal::pi(wp);
        let c = &HPReal::from_u64(3, wp) / &(&HPReal::from_u64(128, wp) * &pi.pow_i(9));
        let a = &HPReal::from_u64(27, wp) / &(&HPReal::from_u64(16, wp) * &pi.pow_i(11));
        let hyperbolic_factor = &HPReal::from_u64(2, wp) * &pi.pow_i(3);
        Ok(PrasadConstants { c, a, hyperbolic_factor })
    }
}

/// The covolume cases the suite ships.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseLabel {
    Gamma0,
    Gamma1,
    Gamma2,
    Case448,
    Case475,
}

impl CaseLabel {
    pub fn parse(s: &str) -> Result<CaseLabel> {
        match s.to_ascii_lowercase().as_str() {
            "gamma0" => Ok(CaseLabel::Gamma0),
            "gamma1" => Ok(CaseLabel::Gamma1),
            "gamma2" => Ok(CaseLabel::Gamma2),
            "448" | "case448" => Ok(CaseLabel::Case448),
            "475" | "case475" => Ok(CaseLabel::Case475),
            _ => Err(Error::Validation(format!(
                "unknown covolume case {s:?}; expected gamma0, gamma1, gamma2, 448 or 475"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            CaseLabel::Gamma0 => "gamma0",
            CaseLabel::Gamma1 => "gamma1",
            CaseLabel::Gamma2 => "gamma2",
            CaseLabel::Case448 => "case448",
            CaseLabel::Case475 => "case475",
        }
    }
}

enum ZetaRoute {
    /// L(3) = ζ_l(3)/ζ_k(3) with ζ_l from the quartic Euler product.
    Quartic { ell_label: &'static str },
    /// L(3) from the relative quadratic character of β over k.
    Relative { beta: QuadAlgebraic },
}

struct LatticeCase {
    label: CaseLabel,
    /// degree of the base field k
    d: u32,
    /// absolute discriminant of k (also its fundamental discriminant here)
    d_k: u64,
    /// D_l / D_k², the norm of the relative discriminant
    d_rel: u64,
    /// normalizer index divisor applied to the principal covolume
    index: u32,
    k_label: &'static str,
    route: ZetaRoute,
}

fn case_data(label: CaseLabel) -> LatticeCase {
    match label {
        CaseLabel::Gamma0 | CaseLabel::Gamma1 => LatticeCase {
            label,
            d: 2,
            d_k: 5,
            d_rel: 11,
            index: 2,
            k_label: "k0",
            route: ZetaRoute::Quartic { ell_label: "ell0" },
        },
        CaseLabel::Gamma2 => LatticeCase {
            label,
            d: 2,
            d_k: 5,
            d_rel: 16,
            index: 2,
            k_label: "k0",
            route: ZetaRoute::Quartic { ell_label: "ell2" },
        },
        CaseLabel::Case448 => LatticeCase {
            label,
            d: 2,
            d_k: 8,
            d_rel: 7,
            index: 8,
            k_label: "qsqrt2",
            route: ZetaRoute::Relative { beta: QuadAlgebraic { a: -1, b: 2, c: 1 } },
        },
        CaseLabel::Case475 => LatticeCase {
            label,
            d: 2,
            d_k: 5,
            d_rel: 19,
            index: 2,
            k_label: "k0",
            route: ZetaRoute::Relative { beta: QuadAlgebraic { a: -1, b: 2, c: 1 } },
        },
    }
}

/// One resolved input of a covolume computation.
#[derive(Clone, Debug)]
pub struct Provenance {
    pub name: String,
    pub value: String,
    pub cutoff: Option<u64>,
}

/// An assembled covolume with its provenance trail.
#[derive(Clone, Debug)]
pub struct CovolumeReport {
    pub label: CaseLabel,
    /// μ(Λ\G), before hyperbolic normalization and index division.
    pub mu_covolume: HPReal,
    /// 2π³ · μ / index.
    pub hyperbolic_covolume: HPReal,
    /// Absolute bound inherited from the Euler-product tails.
    pub tail_bound: HPReal,
    pub provenance: Vec<Provenance>,
}

/// μ = D_k^{7.5} · D_rel^{2.5} · C^d · ζ_k(2) · ζ_k(4) · L(3).
pub fn principal_mu_covolume(
    d: u32,
    d_k: u64,
    d_rel: u64,
    z2: &HPReal,
    z4: &HPReal,
    l3: &HPReal,
    digits: u32,
) -> Result<HPReal> {
    require_min_digits(digits)?;
    if d < 2 {
        return Err(Error::domain("principal_mu_covolume", d, "base degree must be at least 2"));
    }
    if d_k == 0 || d_rel == 0 {
        return Err(Error::domain("principal_mu_covolume", format!("D_k={d_k}, D_rel={d_rel}"), "discriminants must be positive"));
    }
    for (name, v) in [("zeta_k(2)", z2), ("zeta_k(4)", z4), ("L(3)", l3)] {
        #[allow(clippy::neg_cmp_op_on_partial_ord)] // rejects NaN inputs too
        if !(v > &HPReal::zero(digits)) {
            return Err(Error::domain("principal_mu_covolume", name, "zeta inputs must be positive"));
        }
    }
    let wp = working_digits(digits);
    let consts = PrasadConstants::new(digits)?;
    let dk_pow = HPReal::from_u64(d_k, wp).pow(&HPReal::from_ratio(15, 2, wp))?;
    let drel_pow = HPReal::from_u64(d_rel, wp).pow(&HPReal::from_ratio(5, 2, wp))?;
    let c_pow = consts.c.pow_i(d as i32);
    Ok(&(&(&(&(&dk_pow * &drel_pow) * &c_pow) * z2) * z4) * l3)
}

/// Assemble the hyperbolic covolume report for one case.
pub fn hyperbolic_covolume(label: CaseLabel, digits: u32, cutoff: u64) -> Result<CovolumeReport> {
    require_min_digits(digits)?;
    if label == CaseLabel::Gamma1 {
        // the double of gamma0, by construction
        let base = hyperbolic_covolume(CaseLabel::Gamma0, digits, cutoff)?;
        let wp = working_digits(digits);
        let two = HPReal::from_u64(2, wp);
        let mut provenance = base.provenance;
        provenance.push(Provenance { name: "doubling of gamma0".into(), value: "2".into(), cutoff: None });
        return Ok(CovolumeReport {
            label,
            mu_covolume: base.mu_covolume,
            hyperbolic_covolume: &base.hyperbolic_covolume * &two,
            tail_bound: &base.tail_bound * &two,
            provenance,
        });
    }
    let case = case_data(label);
    let wp = working_digits(digits);
    let mut provenance = Vec::new();
    let prov_digits = (digits as usize).min(30);

    let z2 = dedekind_zeta_quadratic(case.d_k, 2, digits)?;
    let z4 = dedekind_zeta_quadratic(case.d_k, 4, digits)?;
    let zk3 = dedekind_zeta_quadratic(case.d_k, 3, digits)?;
    provenance.push(Provenance { name: format!("zeta_{}(2)", case.k_label), value: z2.to_decimal(prov_digits), cutoff: None });
    provenance.push(Provenance { name: format!("zeta_{}(4)", case.k_label), value: z4.to_decimal(prov_digits), cutoff: None });
    provenance.push(Provenance { name: format!("zeta_{}(3)", case.k_label), value: zk3.to_decimal(prov_digits), cutoff: None });

    let k = builtin(case.k_label)?;
    let (l3, l3_rel_tail) = match &case.route {
        ZetaRoute::Quartic { ell_label } => {
            let ell = builtin(ell_label)?;
            let zl = dedekind_zeta_quartic(&ell, 3, cutoff, digits)
                .map_err(|e| Error::Dependency(format!("zeta input for {}: {e}", case.label.name())))?;
            provenance.push(Provenance {
                name: format!("zeta_{ell_label}(3)"),
                value: zl.value.to_decimal(prov_digits),
                cutoff: Some(cutoff),
            });
            let l3 = &zl.value / &zk3;
            let rel_tail = &zl.tail_bound / &zl.value;
            (l3, rel_tail)
        }
        ZetaRoute::Relative { beta } => {
            let l = relative_l(&k, beta, 3, cutoff, digits)
                .map_err(|e| Error::Dependency(format!("zeta input for {}: {e}", case.label.name())))?;
            provenance.push(Provenance {
                name: format!("L_(sqrt beta)/{}(3)", case.k_label),
                value: l.value.to_decimal(prov_digits),
                cutoff: Some(cutoff),
            });
            let rel_tail = &l.tail_bound / &l.value;
            (l.value, rel_tail)
        }
    };
    provenance.push(Provenance { name: "L(3)".into(), value: l3.to_decimal(prov_digits), cutoff: Some(cutoff) });
    provenance.push(Provenance { name: "D_k".into(), value: case.d_k.to_string(), cutoff: None });
    provenance.push(Provenance { name: "D_l/D_k^2".into(), value: case.d_rel.to_string(), cutoff: None });
    provenance.push(Provenance { name: "index".into(), value: case.index.to_string(), cutoff: None });

    let mu = principal_mu_covolume(case.d, case.d_k, case.d_rel, &z2, &z4, &l3, digits)?;
    let consts = PrasadConstants::new(digits)?;
    let hyp = &(&consts.hyperbolic_factor * &mu) / &HPReal::from_u64(case.index as u64, wp);
    let tail_bound = &hyp.abs() * &l3_rel_tail;
    Ok(CovolumeReport { label, mu_covolume: mu, hyperbolic_covolume: hyp, tail_bound, provenance })
}

/// Lower covolume bound for base degree d ≥ 7: (2π³/32)(9.3^{5.5} a)⁷.
pub fn bound_deg_ge7(digits: u32) -> Result<HPReal> {
    require_min_digits(digits)?;
    let wp = working_digits(digits);
    let consts = PrasadConstants::new(digits)?;
    let base = HPReal::from_ratio(93, 10, wp).pow(&HPReal::from_ratio(11, 2, wp))?;
    let inner = (&base * &consts.a).pow_i(7);
    Ok(&(&consts.hyperbolic_factor / &HPReal::from_u64(32, wp)) * &inner)
}

/// (2π³/32) · D_k^{5.5} · a^d.
pub fn bound_disc(d: u32, d_k: u64, digits: u32) -> Result<HPReal> {
    require_min_digits(digits)?;
    if d < 2 || d_k == 0 {
        return Err(Error::domain("bound_disc", format!("d={d}, D_k={d_k}"), "inputs must be positive, d ≥ 2"));
    }
    let wp = working_digits(digits);
    let consts = PrasadConstants::new(digits)?;
    let dk_pow = HPReal::from_u64(d_k, wp).pow(&HPReal::from_ratio(11, 2, wp))?;
    Ok(&(&(&consts.hyperbolic_factor / &HPReal::from_u64(32, wp)) * &dk_pow) * &consts.a.pow_i(d as i32))
}

/// (2π³/32) · D_k^{2.5} · D_l^{1.5} · a^d.
pub fn bound_disc_pair(d: u32, d_k: u64, d_ell: u64, digits: u32) -> Result<HPReal> {
    require_min_digits(digits)?;
    if d < 2 || d_k == 0 || d_ell == 0 {
        return Err(Error::domain("bound_disc_pair", format!("d={d}, D_k={d_k}, D_l={d_ell}"), "inputs must be positive, d ≥ 2"));
    }
    let wp = working_digits(digits);
    let consts = PrasadConstants::new(digits)?;
    let dk_pow = HPReal::from_u64(d_k, wp).pow(&HPReal::from_ratio(5, 2, wp))?;
    let dl_pow = HPReal::from_u64(d_ell, wp).pow(&HPReal::from_ratio(3, 2, wp))?;
    Ok(&(&(&(&consts.hyperbolic_factor / &HPReal::from_u64(32, wp)) * &dk_pow) * &dl_pow) * &consts.a.pow_i(d as i32))
}

/// (2π³/(h_l 2^{d+1})) · D_k^{7.5} · (D_l/D_k²)^{2.5} · C^d.
pub fn bound_classno(d: u32, d_k: u64, d_ell: u64, h_ell: u64, digits: u32) -> Result<HPReal> {
    require_min_digits(digits)?;
    if d < 2 || d_k == 0 || d_ell == 0 || h_ell == 0 {
        return Err(Error::domain(
            "bound_classno",
            format!("d={d}, D_k={d_k}, D_l={d_ell}, h_l={h_ell}"),
            "inputs must be positive, d ≥ 2",
        ));
    }
    let wp = working_digits(digits);
    let consts = PrasadConstants::new(digits)?;
    let dk_pow = HPReal::from_u64(d_k, wp).pow(&HPReal::from_ratio(15, 2, wp))?;
    let d_rel = &HPReal::from_u64(d_ell, wp) / &(&HPReal::from_u64(d_k, wp) * &HPReal::from_u64(d_k, wp));
    let drel_pow = d_rel.pow(&HPReal::from_ratio(5, 2, wp))?;
    let denom = &HPReal::from_u64(h_ell, wp) * &HPReal::from_u64(2, wp).pow_i(d as i32 + 1);
    Ok(&(&(&(&consts.hyperbolic_factor / &denom) * &dk_pow) * &drel_pow) * &consts.c.pow_i(d as i32))
}

/// Covolume of the (D_k, D_l) = (8, 448) case (a lower bound; index ≤ 8).
pub fn case_covolume_448(digits: u32, cutoff: u64) -> Result<CovolumeReport> {
    hyperbolic_covolume(CaseLabel::Case448, digits, cutoff)
}

/// Covolume of the (D_k, D_l) = (5, 475) case.
pub fn case_covolume_475(digits: u32, cutoff: u64) -> Result<CovolumeReport> {
    hyperbolic_covolume(CaseLabel::Case475, digits, cutoff)
}

/// Which geometric/arithmetic identity to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityCase {
    Gamma0P0,
    Gamma2P2,
}

impl IdentityCase {
    pub fn parse(s: &str) -> Result<IdentityCase> {
        match s.to_ascii_lowercase().as_str() {
            "gamma0" | "gamma0_p0" => Ok(IdentityCase::Gamma0P0),
            "gamma2" | "gamma2_p2" => Ok(IdentityCase::Gamma2P2),
            _ => Err(Error::Validation(format!("unknown identity {s:?}; expected gamma0 or gamma2"))),
        }
    }
}

/// Outcome of a geometric-vs-arithmetic identity verification.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub which: IdentityCase,
    /// Arithmetic covolume.
    pub lhs: HPReal,
    /// Twice the prism volume.
    pub rhs: HPReal,
    pub matched_digits: i64,
    /// Ceiling implied by the Euler tails and quadrature tolerance.
    pub achievable_digits: i64,
    /// True when the requested target exceeds the achievable ceiling.
    pub degraded: bool,
    pub covolume: CovolumeReport,
}

fn mag10(x: &HPReal) -> i64 {
    match x.as_float().get_exp() {
        Some(e) => (e as f64 * std::f64::consts::LOG10_2).floor() as i64,
        None => -(2 * x.digits() as i64),
    }
}

/// Compare the arithmetic covolume with twice the prism volume and count
/// matched decimal digits.
pub fn verify_identity(
    which: IdentityCase,
    digits_target: u32,
    digits: u32,
    cutoff: u64,
) -> Result<IdentityReport> {
    require_min_digits(digits)?;
    let wp = working_digits(digits);
    let (case, denom) = match which {
        IdentityCase::Gamma0P0 => (CaseLabel::Gamma0, 3u64),
        IdentityCase::Gamma2P2 => (CaseLabel::Gamma2, 4u64),
    };
    let covolume = hyperbolic_covolume(case, digits, cutoff)?;
    let alpha = &HPReal::pi(wp) / &HPReal::from_u64(denom, wp);
    let tol = HPReal::pow10(-(digits as i64 - 5), wp);
    let prism_vol = prism::prism_volume(&alpha, Some(&tol), digits)?;
    let rhs = &prism_vol * &HPReal::from_u64(2, wp);
    let lhs = covolume.hyperbolic_covolume.clone();
    let diff = (&lhs - &rhs).abs();
    // floor(−log10 |diff|); |lhs| < 1 so the magnitude adjustment
    // max(|lhs|, 1) is the identity
    let matched_digits = if diff.is_zero() { digits as i64 } else { -mag10(&diff) - 1 };
    let total_error = &covolume.tail_bound + &(&tol * &HPReal::from_u64(2, wp));
    let achievable_digits = -mag10(&total_error) - 1;
    let degraded = achievable_digits < digits_target as i64;
    Ok(IdentityReport {
        which,
        lhs,
        rhs,
        matched_digits,
        achievable_digits,
        degraded,
        covolume,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const CUTOFF: u64 = 200_000; // unit-test cutoff; acceptance uses 10^7

    #[test]
    fn prasad_constants_stable_across_precisions() {
        let a = PrasadConstants::new(30).unwrap();
        let b = PrasadConstants::new(60).unwrap();
        assert!((&a.c - &b.c).abs() < HPReal::pow10(-38, 70));
        assert!((&a.a - &b.a).abs() < HPReal::pow10(-38, 70));
        assert!((&a.hyperbolic_factor - &b.hyperbolic_factor).abs() < HPReal::pow10(-38, 70));
    }

    #[test]
    fn mu_factors_through_all_ones() {
        let d = 40;
        let wp = d + 10;
        let one = HPReal::from_u64(1, wp);
        let mu = principal_mu_covolume(2, 5, 16, &one, &one, &one, d).unwrap();
        let consts = PrasadConstants::new(d).unwrap();
        let expect = &(&HPReal::from_u64(5, wp).pow(&HPReal::from_ratio(15, 2, wp)).unwrap()
            * &HPReal::from_u64(16, wp).pow(&HPReal::from_ratio(5, 2, wp)).unwrap())
            * &consts.c.pow_i(2);
        assert!((&mu - &expect).abs() < HPReal::pow10(-(d as i64 - 3), wp));
    }

    #[test]
    fn mu_rejects_bad_inputs() {
        let one = HPReal::from_u64(1, 40);
        assert!(principal_mu_covolume(1, 5, 16, &one, &one, &one, 40).is_err());
        assert!(principal_mu_covolume(2, 0, 16, &one, &one, &one, 40).is_err());
        let neg = HPReal::from_i64(-1, 40);
        assert!(principal_mu_covolume(2, 5, 16, &neg, &one, &one, 40).is_err());
    }

    #[test]
    fn gamma_covolumes_at_reduced_cutoff() {
        // at cutoff 2·10⁵ the tail allows ~10 digits; the published values
        // are 0.00153459236, 0.00306918472, 0.00396939286
        let d = 40;
        let g0 = hyperbolic_covolume(CaseLabel::Gamma0, d, CUTOFF).unwrap();
        assert!((g0.hyperbolic_covolume.to_f64() - 0.00153459236).abs() < 1e-9, "gamma0 {}", g0.hyperbolic_covolume);
        let g1 = hyperbolic_covolume(CaseLabel::Gamma1, d, CUTOFF).unwrap();
        assert!((g1.hyperbolic_covolume.to_f64() - 0.00306918472).abs() < 2e-9);
        let g2 = hyperbolic_covolume(CaseLabel::Gamma2, d, CUTOFF).unwrap();
        assert!((g2.hyperbolic_covolume.to_f64() - 0.00396939286).abs() < 2e-9, "gamma2 {}", g2.hyperbolic_covolume);
        // ordering and exact doubling
        assert!(g0.hyperbolic_covolume < g1.hyperbolic_covolume);
        assert!(g1.hyperbolic_covolume < g2.hyperbolic_covolume);
        let doubled = &g0.hyperbolic_covolume * &HPReal::from_u64(2, 50);
        assert_eq!(g1.hyperbolic_covolume, doubled);
    }

    #[test]
    fn provenance_lists_every_zeta_input() {
        let g0 = hyperbolic_covolume(CaseLabel::Gamma0, 35, 50_000).unwrap();
        let names: Vec<&str> = g0.provenance.iter().map(|p| p.name.as_str()).collect();
        assert!(names.iter().any(|n| n.contains("zeta_k0(2)")));
        assert!(names.iter().any(|n| n.contains("zeta_k0(4)")));
        assert!(names.iter().any(|n| n.contains("zeta_k0(3)")));
        assert!(names.iter().any(|n| n.contains("zeta_ell0(3)")));
        assert!(names.contains(&"index"));
        assert!(g0.provenance.iter().any(|p| p.cutoff == Some(50_000)));
    }

    #[test]
    fn rerun_with_larger_cutoff_moves_within_tail() {
        let d = 35;
        let small = hyperbolic_covolume(CaseLabel::Gamma2, d, 50_000).unwrap();
        let large = hyperbolic_covolume(CaseLabel::Gamma2, d, 100_000).unwrap();
        let shift = (&small.hyperbolic_covolume - &large.hyperbolic_covolume).abs();
        assert!(shift <= small.tail_bound, "shift {shift} vs tail {}", small.tail_bound);
    }

    #[test]
    fn sieve_bounds_and_thresholds() {
        let d = 40;
        let b37 = bound_deg_ge7(d).unwrap();
        // frozen value of (2π³/32)(9.3^{5.5}a)⁷
        assert!((b37.to_f64() - 7.657542711060076).abs() < 1e-12, "got {b37}");
        let threshold = HPReal::parse("0.004", 50).unwrap();
        assert!(b37 > threshold);

        // the quoted sufficient discriminant bound for degree 2
        let b35 = bound_disc(2, 27, d).unwrap();
        assert!(b35 > threshold, "bound_disc(2,27) = {b35}");

        // monotone consistency in D_l
        let pair_low = bound_disc_pair(2, 27, 1, d).unwrap();
        assert!(pair_low <= bound_disc(2, 27, d).unwrap());
        let pair_high = bound_disc_pair(2, 27, 100, d).unwrap();
        assert!(pair_high > pair_low);

        // class-number bound for the 475 data with h = 1 (h is an input):
        // it falls short of the threshold, which is exactly why this case
        // needs its own covolume computation (case_covolume_475)
        let b31 = bound_classno(2, 5, 475, 1, d).unwrap();
        assert!(b31 < threshold, "bound_classno = {b31}");
        // a comfortably larger relative discriminant clears the threshold
        let b31_big = bound_classno(2, 5, 2000, 1, d).unwrap();
        assert!(b31_big > threshold, "bound_classno(2,5,2000,1) = {b31_big}");
    }

    #[test]
    fn case_covolumes_at_reduced_cutoff() {
        let d = 35;
        let c448 = case_covolume_448(d, CUTOFF).unwrap();
        assert!((c448.hyperbolic_covolume.to_f64() - 0.004997794).abs() < 1e-7, "448: {}", c448.hyperbolic_covolume);
        let c475 = case_covolume_475(d, CUTOFF).unwrap();
        assert!((c475.hyperbolic_covolume.to_f64() - 0.006094197).abs() < 1e-7, "475: {}", c475.hyperbolic_covolume);
        let threshold = HPReal::parse("0.004", 45).unwrap();
        assert!(c448.hyperbolic_covolume > threshold);
        assert!(c475.hyperbolic_covolume > threshold);
    }

    #[test]
    fn identity_check_at_reduced_cutoff() {
        let report = verify_identity(IdentityCase::Gamma2P2, 8, 30, CUTOFF).unwrap();
        assert!(report.matched_digits >= 9, "matched only {}", report.matched_digits);
        assert!(!report.degraded);
        assert!(report.achievable_digits >= 8);
        // requesting more digits than the tail allows flags degradation
        let too_many = verify_identity(IdentityCase::Gamma2P2, 30, 30, CUTOFF).unwrap();
        assert!(too_many.degraded);
        assert!(too_many.matched_digits >= 9);
    }

    #[test]
    fn polytope_equals_half_covolume() {
        let d = 30;
        let wp = d + 10;
        let g2 = hyperbolic_covolume(CaseLabel::Gamma2, d, CUTOFF).unwrap();
        let p2 = prism::polytope_volume(prism::Polytope::P2, None, d).unwrap();
        let half = &g2.hyperbolic_covolume / &HPReal::from_u64(2, wp);
        let diff = (&p2 - &half).abs();
        let budget = &g2.tail_bound + &HPReal::pow10(-20, wp);
        assert!(diff < budget, "diff {diff} vs budget {budget}");
    }
}
