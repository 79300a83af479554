//! Volume-averaged (Eberlein) convolution and autocorrelation.
//!
//! For the mixed-measure class everything is exact: Lebesgue factors reduce
//! to mean densities, comb pairs correlate over one common period, and finite
//! parts average away to zero.

use crate::measure::{CAmp, MeasureError, MixedMeasure, Params};
use crate::rat::Rat;

/// Average weight per unit length: the Lebesgue coefficient plus each comb's
/// weight sum over its full period. The finite part contributes nothing.
pub fn mean_density(m: &MixedMeasure) -> CAmp {
    let mut d = m.lebesgue();
    for comb in m.combs() {
        d += comb.density();
    }
    d
}

/// Eberlein convolution `m1 ⊛ m̃2` (the reflected conjugate of the second
/// argument is taken internally, so `eberlein(m, m)` is the autocorrelation).
///
/// Exact evaluation rules, bilinear in the parts:
/// `λ ⊛ λ̃ = λ`; `λ ⊛ μ̃ = conj(density(μ))·λ` and `μ ⊛ λ̃ = density(μ)·λ`
/// for comb parts `μ`; two combs correlate over their common full period `L`
/// as `(1/L) Σ w1(x)·conj(w2(y)) δ_{x−y}`; finite parts vanish.
pub fn eberlein(
    m1: &MixedMeasure,
    m2: &MixedMeasure,
    p: &Params,
) -> Result<MixedMeasure, MeasureError> {
    let c1 = m1.lebesgue();
    let c2 = m2.lebesgue();

    // Comb densities (finite parts excluded by construction).
    let d1: CAmp = m1.combs().iter().map(|c| c.density()).sum();
    let d2: CAmp = m2.combs().iter().map(|c| c.density()).sum();

    let lebesgue = c1 * c2.conj() + c1 * d2.conj() + d1 * c2.conj();

    let mut combs: Vec<(Rat, Vec<CAmp>)> = Vec::new();
    for a in m1.combs() {
        for b in m2.combs() {
            combs.push(comb_cross_correlation(a, b, p)?);
        }
    }
    MixedMeasure::from_parts(lebesgue, combs, vec![], p)
}

/// Periodized cross-correlation of two combs on their common refinement:
/// slot `r` of the result carries `(1/L) Σ_s u[s]·conj(v[s−r])`.
fn comb_cross_correlation(
    a: &crate::measure::PeriodicComb,
    b: &crate::measure::PeriodicComb,
    p: &Params,
) -> Result<(Rat, Vec<CAmp>), MeasureError> {
    let g = a.spacing().gcd(b.spacing());
    let period = a.full_period().lcm(b.full_period());
    let slots = period / g;
    debug_assert!(slots.is_integer());
    let needed = slots.numer() as u128;
    if needed > p.guard as u128 {
        return Err(MeasureError::RefinementTooLarge {
            needed,
            guard: p.guard,
        });
    }
    let n = slots.numer() as usize;

    let expand = |comb: &crate::measure::PeriodicComb| -> Vec<CAmp> {
        let q = (comb.spacing() / g).numer() as usize;
        let nw = comb.weights().len();
        let mut slots = vec![CAmp::new(0.0, 0.0); n];
        for m in 0..n / q {
            slots[m * q] = comb.weights()[m % nw];
        }
        slots
    };
    let u = expand(a);
    let v = expand(b);

    let inv_period = 1.0 / period.to_f64();
    let mut out = vec![CAmp::new(0.0, 0.0); n];
    for (r, slot) in out.iter_mut().enumerate() {
        let mut acc = CAmp::new(0.0, 0.0);
        for s in 0..n {
            let w1 = u[s];
            if w1.norm() == 0.0 {
                continue;
            }
            acc += w1 * v[(s + n - r) % n].conj();
        }
        *slot = acc * inv_period;
    }
    Ok((g, out))
}

/// Autocorrelation `γ = m ⊛ m̃`.
pub fn autocorrelate(m: &MixedMeasure, p: &Params) -> Result<MixedMeasure, MeasureError> {
    eberlein(m, m, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn re(x: f64) -> CAmp {
        CAmp::new(x, 0.0)
    }

    fn p() -> Params {
        Params::default()
    }

    fn dirac_z() -> MixedMeasure {
        MixedMeasure::dirac_comb(Rat::ONE)
    }

    #[test]
    fn mean_density_examples() {
        let p = p();
        assert_eq!(mean_density(&dirac_z()), re(1.0));
        let m = MixedMeasure::from_parts(re(2.0), [(Rat::ONE, vec![re(-1.0)])], vec![], &p).unwrap();
        assert_eq!(mean_density(&m), re(1.0));
        let f = MixedMeasure::dirac(Rat::new(1, 2), re(7.0));
        assert_eq!(mean_density(&f), re(0.0));
    }

    #[test]
    fn lattice_autocorrelation_is_itself() {
        assert_eq!(eberlein(&dirac_z(), &dirac_z(), &p()).unwrap(), dirac_z());
    }

    #[test]
    fn sparse_lattice_autocorrelation_scales() {
        // γ(δ_{2ℤ}) = ½ δ_{2ℤ}
        let p = p();
        let m = MixedMeasure::dirac_comb(Rat::from_int(2));
        let gamma = autocorrelate(&m, &p).unwrap();
        assert_eq!(gamma, m.scale(re(0.5), &p));
    }

    #[test]
    fn unimodular_lebesgue_autocorrelates_to_lambda() {
        let u = CAmp::from_polar(1.0, 2.0 * std::f64::consts::PI / 7.0);
        let m = MixedMeasure::lebesgue_multiple(u);
        let gamma = autocorrelate(&m, &p()).unwrap();
        assert_eq!(gamma, MixedMeasure::lebesgue_multiple(re(1.0)));
    }

    #[test]
    fn trial_and_error_examples() {
        let p = p();
        // δ_ℤ − (1+i)λ autocorrelates to δ_ℤ.
        let m = MixedMeasure::from_parts(
            CAmp::new(-1.0, -1.0),
            [(Rat::ONE, vec![re(1.0)])],
            vec![],
            &p,
        )
        .unwrap();
        assert_eq!(autocorrelate(&m, &p).unwrap(), dirac_z());

        // δ_ℤ − λ autocorrelates to itself.
        let m = MixedMeasure::from_parts(re(-1.0), [(Rat::ONE, vec![re(1.0)])], vec![], &p).unwrap();
        assert_eq!(autocorrelate(&m, &p).unwrap(), m);
    }

    #[test]
    fn four_periodic_table_member_autocorrelates_to_lattice() {
        // ½(δ₀ − δ_{1/4} + δ_{1/2} + δ_{3/4}) ∗ δ_ℤ, the t_α = ¼, e = 1 cell.
        let p = p();
        let m = MixedMeasure::periodic(
            Rat::new(1, 4),
            vec![re(0.5), re(-0.5), re(0.5), re(0.5)],
            &p,
        )
        .unwrap();
        assert_eq!(autocorrelate(&m, &p).unwrap(), dirac_z());
    }

    #[test]
    fn finite_parts_are_null() {
        let p = p();
        let m = MixedMeasure::from_parts(re(2.0), [(Rat::ONE, vec![re(-1.0)])], vec![], &p).unwrap();
        let noise = MixedMeasure::from_parts(
            re(0.0),
            [],
            vec![(Rat::new(1, 3), CAmp::new(4.0, -2.0)), (Rat::from_int(7), re(9.0))],
            &p,
        )
        .unwrap();
        let noisy = m.add(&noise, &p).unwrap();
        assert_eq!(
            autocorrelate(&noisy, &p).unwrap(),
            autocorrelate(&m, &p).unwrap()
        );
    }
}
