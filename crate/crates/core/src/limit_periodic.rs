//! The period-doubling-derived point sets and the formal Fourier series of
//! their Dirac comb.
//!
//! The symmetric set `Δ = 2ℤ ⊍ ⊍_{n≥1} Δ_n` with
//! `Δ_n = (2·4ⁿℤ + (4ⁿ−1)) ∪ (2·4ⁿℤ + (1−4ⁿ))` is limit-periodic: lattice
//! cosets at geometrically refining scales. The transform of `δ_Δ` is the
//! formal series `½δ_{ℤ/2} + Σ_{n≥1} cos(2π(4ⁿ−1)x)/4ⁿ · δ_{ℤ/(2·4ⁿ)}`,
//! a tempered distribution that is not a measure; replacing `4ⁿ` by
//! `(4+ε)ⁿ` in the denominators yields translation-bounded measures that
//! converge to it weakly as `ε → 0⁺`.

use thiserror::Error;

use crate::measure::{CAmp, MeasureError, MixedMeasure, Params};
use crate::rat::Rat;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Errors from series evaluation.
#[derive(Debug, Error)]
pub enum SeriesError {
    /// The term-bound test could not certify convergence of the pairing.
    #[error("term bound failed to certify convergence of the series pairing")]
    NonConvergent,
    #[error(transparent)]
    Measure(#[from] MeasureError),
}

/// Membership test for the symmetric period-doubling set `Δ`.
///
/// Even integers always belong; an odd `k` belongs iff
/// `k ≡ ±(4ⁿ−1) (mod 2·4ⁿ)` for some `n ≥ 1`, which can only happen while
/// `4ⁿ−1 ≤ |k|`.
pub fn pd_member(k: i64) -> bool {
    if k.rem_euclid(2) == 0 {
        return true;
    }
    let abs = k.unsigned_abs() as i64;
    let mut pow4: i64 = 4;
    while pow4 - 1 <= abs {
        let modulus = 2 * pow4;
        let r = k.rem_euclid(modulus);
        if r == pow4 - 1 || r == pow4 + 1 {
            return true;
        }
        pow4 *= 4;
    }
    false
}

/// Members of `Δ_n` in `[lo, hi]`, sorted. Requires `n ≥ 1`.
pub fn pd_delta_n(n: u32, lo: i64, hi: i64) -> Vec<i64> {
    assert!(n >= 1, "Δ_n is defined for n ≥ 1");
    assert!(lo <= hi);
    let pow4 = 4i64.pow(n);
    let modulus = 2 * pow4;
    let mut out = Vec::new();
    for residue in [pow4 - 1, 1 - pow4] {
        // Smallest member ≥ lo of the class residue + modulus·ℤ.
        let mut x = residue + (lo - residue).div_euclid(modulus) * modulus;
        if x < lo {
            x += modulus;
        }
        while x <= hi {
            out.push(x);
            x += modulus;
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Members of `Δ` in `[lo, hi]`, sorted.
pub fn pd_enumerate(lo: i64, hi: i64) -> Vec<i64> {
    assert!(lo <= hi);
    #[cfg(feature = "parallel")]
    {
        (lo..=hi).into_par_iter().filter(|&k| pd_member(k)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (lo..=hi).filter(|&k| pd_member(k)).collect()
    }
}

/// Sequential reference version of [`pd_enumerate`].
pub fn pd_enumerate_seq(lo: i64, hi: i64) -> Vec<i64> {
    assert!(lo <= hi);
    (lo..=hi).filter(|&k| pd_member(k)).collect()
}

/// A comb on `spacing·ℤ` whose atom at `x` carries weight
/// `amplitude · cos(2π · frequency · x)`.
#[derive(Debug, Clone, Copy)]
pub struct ModulatedComb {
    pub spacing: Rat,
    pub frequency: Rat,
    pub amplitude: f64,
}

impl ModulatedComb {
    /// Expands the cosine weights over one pattern period: the weight
    /// sequence `m ↦ cos(2π·frequency·spacing·m)` has period
    /// `denom(frequency·spacing)`.
    pub fn expand(&self) -> (Rat, Vec<CAmp>) {
        let step = self.frequency * self.spacing;
        let n = step.denom() as usize;
        let weights = (0..n)
            .map(|m| {
                let phase = (step * Rat::from_int(m as i64)).fract();
                let w = self.amplitude * (2.0 * std::f64::consts::PI * phase.to_f64()).cos();
                CAmp::new(w, 0.0)
            })
            .collect();
        (self.spacing, weights)
    }

    /// Pairing `Σ_m weight(x_m)·g(x_m)` against a Gaussian, truncated to the
    /// `12σ` window around the center.
    fn pair_with(&self, g: &Gaussian) -> f64 {
        let (lo, hi) = g.window();
        let t_lo = (lo / self.spacing.to_f64()).ceil() as i64;
        let t_hi = (hi / self.spacing.to_f64()).floor() as i64;
        let step = self.frequency * self.spacing;
        let mut acc = 0.0;
        for t in t_lo..=t_hi {
            let x = self.spacing * Rat::from_int(t);
            let phase = (step * Rat::from_int(t)).fract();
            let w = self.amplitude * (2.0 * std::f64::consts::PI * phase.to_f64()).cos();
            acc += w * g.eval(x.to_f64());
        }
        acc
    }
}

/// The lazy series `head + Σ_{n≥1} term_amplitude·cos(2π(4ⁿ−1)x)/(4+ε)ⁿ ·
/// δ_{ℤ/(2·4ⁿ)}`.
///
/// For `ε > 0` the series defines a translation-bounded measure; at `ε = 0`
/// it is a tempered distribution but not a measure (its total variation on
/// compact sets diverges).
#[derive(Debug, Clone)]
pub struct FormalCombSeries {
    head: MixedMeasure,
    term_amplitude: f64,
    eps: f64,
}

impl FormalCombSeries {
    pub fn new(head: MixedMeasure, term_amplitude: f64, eps: f64) -> Self {
        assert!(eps >= 0.0, "damping must be nonnegative");
        FormalCombSeries {
            head,
            term_amplitude,
            eps,
        }
    }

    pub fn head(&self) -> &MixedMeasure {
        &self.head
    }

    pub fn term_amplitude(&self) -> f64 {
        self.term_amplitude
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    /// Whether the series denotes a measure (`ε > 0`) rather than only a
    /// tempered distribution.
    pub fn is_measure(&self) -> bool {
        self.eps > 0.0
    }

    /// Term `n ≥ 1`: spacing `1/(2·4ⁿ)`, modulation frequency `4ⁿ−1`,
    /// amplitude `term_amplitude/(4+ε)ⁿ`.
    pub fn term(&self, n: u32) -> ModulatedComb {
        assert!((1..=30).contains(&n), "term index out of range");
        let pow4 = 4i64.pow(n);
        ModulatedComb {
            spacing: Rat::new(1, 2 * pow4),
            frequency: Rat::from_int(pow4 - 1),
            amplitude: self.term_amplitude / (4.0 + self.eps).powi(n as i32),
        }
    }

    /// Partial sum `S_N = head + Σ_{n=1}^{N} term_n` as an exact mixed
    /// measure; colliding atoms across terms are summed.
    pub fn partial_sum(&self, n_max: u32, p: &Params) -> Result<MixedMeasure, MeasureError> {
        let mut combs: Vec<(Rat, Vec<CAmp>)> = self
            .head
            .combs()
            .iter()
            .map(|c| (c.spacing(), c.weights().to_vec()))
            .collect();
        for n in 1..=n_max {
            combs.push(self.term(n).expand());
        }
        MixedMeasure::from_parts(
            self.head.lebesgue(),
            combs,
            self.head.finite().atoms().to_vec(),
            p,
        )
    }

    /// Pairs the series against the Gaussian of mass one centered at
    /// `center` with width `sigma`.
    ///
    /// Atoms are truncated to the `12σ` window; terms are summed until the
    /// rigorous tail bound drops below `1e−15`. The bound per term combines
    /// the trivial window mass with the dual (Poisson) estimate
    /// `|Σ cos(2πf x_m) g(x_m)| ≤ (2·4ⁿ)·1.2·e^{−2π²σ²(4ⁿ−1)²}`, which makes
    /// the tail summable even at `ε = 0`. Fails with [`SeriesError::NonConvergent`]
    /// if no term index up to 40 certifies the tail.
    pub fn pair_with_gaussian(&self, center: f64, sigma: f64) -> Result<CAmp, SeriesError> {
        assert!(sigma > 0.0, "sigma must be positive");
        let g = Gaussian { center, sigma };

        let bound = |n: u32| -> f64 {
            let pow4 = 4f64.powi(n as i32);
            let amp = self.term_amplitude.abs() / (4.0 + self.eps).powi(n as i32);
            let window_mass = 2.0 * pow4 + 0.4 / sigma;
            let dual = 2.0
                * pow4
                * 1.2
                * (-2.0 * std::f64::consts::PI.powi(2) * sigma * sigma * (pow4 - 1.0).powi(2))
                    .exp();
            amp * window_mass.min(dual)
        };

        let mut cutoff = None;
        for n in 0..=40u32 {
            if bound(n + 1) < 1e-15 {
                cutoff = Some(n);
                break;
            }
        }
        let cutoff = cutoff.ok_or(SeriesError::NonConvergent)?;

        let mut total = pair_measure_with_gaussian(&self.head, center, sigma);
        for n in 1..=cutoff {
            total += CAmp::new(self.term(n).pair_with(&g), 0.0);
        }
        Ok(total)
    }
}

/// The formal transform of `δ_Δ` (at `ε = 0`) or its regularization `ρ_ε`
/// (at `ε > 0`): head `½δ_{ℤ/2}`, term `n` with spacing `1/(2·4ⁿ)`,
/// frequency `4ⁿ−1`, amplitude `1/(4+ε)ⁿ`.
pub fn pd_formal_fourier(eps: f64) -> FormalCombSeries {
    let head = MixedMeasure::periodic(
        Rat::new(1, 2),
        vec![CAmp::new(0.5, 0.0)],
        &Params::default(),
    )
    .expect("head comb is canonical");
    FormalCombSeries::new(head, 1.0, eps)
}

/// Total variation of `m` on `[a, b]`: sum of absolute atom weights plus
/// `|lebesgue|·(b−a)`.
pub fn total_variation(m: &MixedMeasure, a: Rat, b: Rat) -> f64 {
    let (atoms, _) = m.restrict(a, b);
    let atom_tv: f64 = atoms.atoms().iter().map(|(_, w)| w.norm()).sum();
    atom_tv + m.lebesgue().norm() * (b - a).to_f64()
}

struct Gaussian {
    center: f64,
    sigma: f64,
}

impl Gaussian {
    fn eval(&self, x: f64) -> f64 {
        let z = (x - self.center) / self.sigma;
        (-0.5 * z * z).exp() / (self.sigma * (2.0 * std::f64::consts::PI).sqrt())
    }

    fn window(&self) -> (f64, f64) {
        (self.center - 12.0 * self.sigma, self.center + 12.0 * self.sigma)
    }

    /// Mass of the Gaussian over `[a, b]`.
    fn mass(&self, a: f64, b: f64) -> f64 {
        let phi = |x: f64| 0.5 * (1.0 + libm::erf((x - self.center) / (self.sigma * 2f64.sqrt())));
        phi(b) - phi(a)
    }
}

/// Pairs an exact mixed measure against the mass-one Gaussian at `center`
/// with width `sigma`, truncating atoms to the `12σ` window.
pub fn pair_measure_with_gaussian(m: &MixedMeasure, center: f64, sigma: f64) -> CAmp {
    assert!(sigma > 0.0, "sigma must be positive");
    let g = Gaussian { center, sigma };
    let (lo, hi) = g.window();
    let mut acc = CAmp::new(0.0, 0.0);
    for comb in m.combs() {
        let a = comb.spacing().to_f64();
        let t_lo = (lo / a).ceil() as i64;
        let t_hi = (hi / a).floor() as i64;
        for t in t_lo..=t_hi {
            let x = comb.spacing() * Rat::from_int(t);
            acc += comb.weight_at(x) * g.eval(x.to_f64());
        }
    }
    for (x, w) in m.finite().atoms() {
        let xf = x.to_f64();
        if lo <= xf && xf <= hi {
            acc += w * g.eval(xf);
        }
    }
    acc + m.lebesgue() * g.mass(lo, hi)
}
