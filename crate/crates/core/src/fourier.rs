//! Fourier transforms of mixed measures and the diffraction map.
//!
//! Convention: the forward kernel is `e^{−2πikx}`, the inverse `e^{+2πikx}`.
//! Lattice combs transform by Poisson summation plus a finite DFT: a comb
//! with spacing `a` and `N`-periodic weights `w` maps to the comb with
//! spacing `1/(Na)` and weights `W_k = (1/(Na)) Σ_m w_m e^{∓2πi mk/N}`.
//! A Lebesgue multiple `c·λ` maps to the atom `c·δ₀` and vice versa. Finite
//! atoms away from the origin transform to modulated densities outside the
//! mixed-measure class and are rejected.

use crate::eberlein::autocorrelate;
use crate::measure::{CAmp, MeasureError, MixedMeasure, Params};
use crate::rat::Rat;

#[derive(Clone, Copy)]
enum Direction {
    Forward,
    Inverse,
}

fn transform(m: &MixedMeasure, dir: Direction, p: &Params) -> Result<MixedMeasure, MeasureError> {
    // The only transformable finite part is an atom at the origin (↦ c·λ).
    let mut lebesgue_out = CAmp::new(0.0, 0.0);
    for (x, w) in m.finite().atoms() {
        if x.is_zero() {
            lebesgue_out += *w;
        } else {
            return Err(MeasureError::NonTransformableFinitePart);
        }
    }

    let mut finite_out = Vec::new();
    if m.lebesgue().norm() > 0.0 {
        finite_out.push((Rat::ZERO, m.lebesgue()));
    }

    let sign = match dir {
        Direction::Forward => -1.0,
        Direction::Inverse => 1.0,
    };
    let mut combs_out = Vec::new();
    for comb in m.combs() {
        let n = comb.weights().len();
        let norm = 1.0 / comb.full_period().to_f64();
        let spacing_out = comb.full_period().recip();
        let mut weights_out = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = CAmp::new(0.0, 0.0);
            for (m_idx, w) in comb.weights().iter().enumerate() {
                if w.norm() == 0.0 {
                    continue;
                }
                let phase = sign * 2.0 * std::f64::consts::PI * ((m_idx * k) % n) as f64 / n as f64;
                acc += w * CAmp::from_polar(1.0, phase);
            }
            weights_out.push(acc * norm);
        }
        combs_out.push((spacing_out, weights_out));
    }

    MixedMeasure::from_parts(lebesgue_out, combs_out, finite_out, p)
}

/// Forward Fourier transform.
pub fn fourier(m: &MixedMeasure, p: &Params) -> Result<MixedMeasure, MeasureError> {
    transform(m, Direction::Forward, p)
}

/// Inverse Fourier transform; `inverse_fourier(fourier(m)) = m`.
pub fn inverse_fourier(m: &MixedMeasure, p: &Params) -> Result<MixedMeasure, MeasureError> {
    transform(m, Direction::Inverse, p)
}

/// Diffraction measure `γ̂ = F[m ⊛ m̃]`: the transform of the autocorrelation.
///
/// The finite part of `m` is irrelevant (it is null for `⊛`). For inputs in
/// the mixed-measure class the output is pure point.
pub fn diffraction(m: &MixedMeasure, p: &Params) -> Result<MixedMeasure, MeasureError> {
    let gamma = autocorrelate(m, p)?;
    let hat = transform(&gamma, Direction::Forward, p)?;
    debug_assert!(
        hat.lebesgue().norm() <= p.tol,
        "diffraction of a mixed measure must be pure point"
    );
    Ok(hat)
}

/// True iff both measures produce the same diffraction (canonical equality).
pub fn verify_homometric(
    m1: &MixedMeasure,
    m2: &MixedMeasure,
    p: &Params,
) -> Result<bool, MeasureError> {
    Ok(diffraction(m1, p)?.approx_eq(&diffraction(m2, p)?, p.tol))
}
