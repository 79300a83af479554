//! Exact mixed measures on the real line.
//!
//! A [`MixedMeasure`] is a finite sum of a Lebesgue multiple, lattice-periodic
//! weighted Dirac combs, and a finite comb of correction atoms. Positions are
//! exact rationals, weights are complex floats compared with a tolerance.
//!
//! Every value is canonical by construction: combs carry minimal periods and
//! coarsest spacings, commensurate combs are merged through their common
//! refinement (subject to a per-period atom guard), near-zero weights are
//! dropped, and finite atoms are sorted. Canonical form makes equality
//! decidable, which the golden tests rely on.

use num_complex::Complex64;
use thiserror::Error;

use crate::rat::Rat;

/// Complex amplitude: a dimensionless weight carried by an atom or by the
/// Lebesgue component.
pub type CAmp = Complex64;

/// Default weight-comparison tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Default cap on atoms per period when refining combs onto a common lattice.
pub const DEFAULT_GUARD: usize = 1_000_000;

/// Tunable knobs shared by every operation: the weight tolerance and the
/// refinement guard. `Params::default()` is what the CLI uses unless
/// overridden with `--tol` / `--guard`.
#[derive(Debug, Clone, Copy)]
pub struct Params {
    pub tol: f64,
    pub guard: usize,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            tol: DEFAULT_TOL,
            guard: DEFAULT_GUARD,
        }
    }
}

/// Errors from measure construction and arithmetic.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum MeasureError {
    /// Merging two combs onto their common refinement would need more than
    /// `guard` atoms per period.
    #[error("common refinement needs {needed} atoms per period (guard: {guard})")]
    RefinementTooLarge { needed: u128, guard: usize },
    /// A raw component violates a structural invariant (nonpositive spacing,
    /// empty weight list, non-finite weight).
    #[error("invalid measure component: {0}")]
    InvalidComponent(String),
    /// Fourier transform of a finite atom away from the origin leaves the
    /// mixed-measure class.
    #[error("finite part with atoms away from 0 is not transformable")]
    NonTransformableFinitePart,
}

pub(crate) fn camp_approx_eq(a: CAmp, b: CAmp, tol: f64) -> bool {
    (a.re - b.re).abs() <= tol && (a.im - b.im).abs() <= tol
}

fn camp_is_finite(a: CAmp) -> bool {
    a.re.is_finite() && a.im.is_finite()
}

/// A lattice-periodic weighted Dirac comb.
///
/// Weight `j` sits at positions `spacing·(j + m·N)` for all integers `m`,
/// where `N = weights.len()`. Canonical combs have minimal `N` and coarsest
/// spacing (no all-zero residue thinning left to do) and at least one nonzero
/// weight.
#[derive(Debug, Clone)]
pub struct PeriodicComb {
    spacing: Rat,
    weights: Vec<CAmp>,
}

impl PeriodicComb {
    pub fn spacing(&self) -> Rat {
        self.spacing
    }

    pub fn weights(&self) -> &[CAmp] {
        &self.weights
    }

    /// Full period of the comb: `spacing · N`.
    pub fn full_period(&self) -> Rat {
        self.spacing * Rat::from_int(self.weights.len() as i64)
    }

    /// Average weight per unit length: `Σ weights / full period`.
    pub fn density(&self) -> CAmp {
        let sum: CAmp = self.weights.iter().sum();
        sum / self.full_period().to_f64()
    }

    /// Weight at position `x`, zero when `x` is off the slot lattice.
    pub fn weight_at(&self, x: Rat) -> CAmp {
        let q = x / self.spacing;
        if q.is_integer() {
            let n = self.weights.len() as i64;
            self.weights[q.numer().rem_euclid(n) as usize]
        } else {
            CAmp::new(0.0, 0.0)
        }
    }

    /// Canonicalizes a raw `(spacing, weights)` pair. Returns `None` when all
    /// weights vanish within `tol`.
    fn canonical(spacing: Rat, weights: Vec<CAmp>, tol: f64) -> Result<Option<Self>, MeasureError> {
        if !spacing.is_positive() {
            return Err(MeasureError::InvalidComponent(format!(
                "comb spacing must be positive, got {spacing}"
            )));
        }
        if weights.is_empty() {
            return Err(MeasureError::InvalidComponent(
                "comb weight list must be nonempty".into(),
            ));
        }
        if weights.iter().any(|w| !camp_is_finite(*w)) {
            return Err(MeasureError::InvalidComponent(
                "comb weight is not finite".into(),
            ));
        }

        let mut spacing = spacing;
        let mut weights = weights;
        loop {
            for w in &mut weights {
                if w.norm() <= tol {
                    *w = CAmp::new(0.0, 0.0);
                }
            }
            let support: Vec<usize> = (0..weights.len())
                .filter(|&j| weights[j].norm() > tol)
                .collect();
            if support.is_empty() {
                return Ok(None);
            }

            let n = weights.len();
            // Coarsen: if every nonzero slot index is a multiple of u = gcd(N, gcd S),
            // the support lives on the sublattice (u·spacing)·ℤ.
            let mut u = n as i64;
            for &s in &support {
                u = num_integer::gcd(u, s as i64);
            }
            let u = u as usize;
            if u > 1 {
                spacing = spacing * Rat::from_int(u as i64);
                weights = (0..n / u).map(|t| weights[t * u]).collect();
                continue;
            }

            // Minimal period: smallest divisor d of N with d-periodic weights.
            let mut reduced = false;
            for d in divisors(n) {
                if d == n {
                    break;
                }
                if (0..n).all(|j| camp_approx_eq(weights[j], weights[j % d], tol)) {
                    weights.truncate(d);
                    reduced = true;
                    break;
                }
            }
            if reduced {
                continue;
            }
            return Ok(Some(PeriodicComb { spacing, weights }));
        }
    }

    /// Merges two canonical combs on their common refinement lattice.
    fn merge(&self, other: &PeriodicComb, p: &Params) -> Result<Option<PeriodicComb>, MeasureError> {
        let g = self.spacing.gcd(other.spacing);
        let period = self.full_period().lcm(other.full_period());
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
        let mut acc = vec![CAmp::new(0.0, 0.0); n];
        for comb in [self, other] {
            let q = (comb.spacing / g).numer() as usize;
            let count = n / q;
            let nw = comb.weights.len();
            for m in 0..count {
                acc[m * q] += comb.weights[m % nw];
            }
        }
        PeriodicComb::canonical(g, acc, p.tol)
    }

    fn map_weights(&self, f: impl Fn(CAmp) -> CAmp) -> (Rat, Vec<CAmp>) {
        (self.spacing, self.weights.iter().map(|w| f(*w)).collect())
    }

    /// Weights of the reflected comb `x ↦ comb(−x)`.
    fn reflected(&self) -> (Rat, Vec<CAmp>) {
        let n = self.weights.len();
        let rev = (0..n).map(|j| self.weights[(n - j) % n]).collect();
        (self.spacing, rev)
    }
}

/// A finite list of correction atoms, strictly increasing in position.
#[derive(Debug, Clone, Default)]
pub struct FiniteComb {
    atoms: Vec<(Rat, CAmp)>,
}

impl FiniteComb {
    pub fn atoms(&self) -> &[(Rat, CAmp)] {
        &self.atoms
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    fn canonical(mut atoms: Vec<(Rat, CAmp)>, tol: f64) -> Result<Self, MeasureError> {
        if atoms.iter().any(|(_, w)| !camp_is_finite(*w)) {
            return Err(MeasureError::InvalidComponent(
                "finite atom weight is not finite".into(),
            ));
        }
        atoms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Rat, CAmp)> = Vec::with_capacity(atoms.len());
        for (x, w) in atoms {
            match merged.last_mut() {
                Some((px, pw)) if *px == x => *pw += w,
                _ => merged.push((x, w)),
            }
        }
        merged.retain(|(_, w)| w.norm() > tol);
        Ok(FiniteComb { atoms: merged })
    }
}

/// Exact sum of a Lebesgue multiple, at most one canonical periodic comb, and
/// a finite comb of corrections.
///
/// Values are immutable and every operation is a pure function, so they can
/// be shared freely across threads.
#[derive(Debug, Clone, Default)]
pub struct MixedMeasure {
    lebesgue: CAmp,
    combs: Vec<PeriodicComb>,
    finite: FiniteComb,
}

impl MixedMeasure {
    /// The zero measure.
    pub fn zero() -> Self {
        MixedMeasure::default()
    }

    /// `c · λ`.
    pub fn lebesgue_multiple(c: CAmp) -> Self {
        let c = if c.norm() <= DEFAULT_TOL {
            CAmp::new(0.0, 0.0)
        } else {
            c
        };
        MixedMeasure {
            lebesgue: c,
            ..Default::default()
        }
    }

    /// `δ_{aℤ}` for positive spacing `a`. Panics on nonpositive spacing.
    pub fn dirac_comb(spacing: Rat) -> Self {
        assert!(spacing.is_positive(), "dirac_comb needs positive spacing");
        MixedMeasure {
            combs: vec![PeriodicComb {
                spacing,
                weights: vec![CAmp::new(1.0, 0.0)],
            }],
            ..Default::default()
        }
    }

    /// A single atom `w · δ_x`.
    pub fn dirac(x: Rat, w: CAmp) -> Self {
        MixedMeasure::from_parts(CAmp::new(0.0, 0.0), [], vec![(x, w)], &Params::default())
            .expect("single atom is always canonical")
    }

    /// A periodic comb from a raw `(spacing, weights)` pattern.
    pub fn periodic(spacing: Rat, weights: Vec<CAmp>, p: &Params) -> Result<Self, MeasureError> {
        MixedMeasure::from_parts(CAmp::new(0.0, 0.0), [(spacing, weights)], vec![], p)
    }

    /// Builds and canonicalizes a measure from raw parts. This is the one
    /// canonicalization entry point: commensurate combs are merged on their
    /// common refinement (guarded), periods minimized, sub-`tol` weights
    /// dropped, finite atoms sorted and merged.
    pub fn from_parts(
        lebesgue: CAmp,
        combs: impl IntoIterator<Item = (Rat, Vec<CAmp>)>,
        finite: Vec<(Rat, CAmp)>,
        p: &Params,
    ) -> Result<Self, MeasureError> {
        if !camp_is_finite(lebesgue) {
            return Err(MeasureError::InvalidComponent(
                "lebesgue coefficient is not finite".into(),
            ));
        }
        let mut canonical: Vec<PeriodicComb> = Vec::new();
        for (spacing, weights) in combs {
            if let Some(comb) = PeriodicComb::canonical(spacing, weights, p.tol)? {
                canonical.push(comb);
            }
        }
        let mut merged: Option<PeriodicComb> = None;
        for comb in canonical {
            merged = match merged {
                None => Some(comb),
                Some(acc) => acc.merge(&comb, p)?,
            };
        }
        let lebesgue = if lebesgue.norm() <= p.tol {
            CAmp::new(0.0, 0.0)
        } else {
            lebesgue
        };
        Ok(MixedMeasure {
            lebesgue,
            combs: merged.into_iter().collect(),
            finite: FiniteComb::canonical(finite, p.tol)?,
        })
    }

    /// Re-canonicalizes under the given params (e.g. after a `--tol` change).
    pub fn canonicalize(&self, p: &Params) -> Result<Self, MeasureError> {
        MixedMeasure::from_parts(
            self.lebesgue,
            self.combs.iter().map(|c| (c.spacing, c.weights.clone())),
            self.finite.atoms.clone(),
            p,
        )
    }

    pub fn lebesgue(&self) -> CAmp {
        self.lebesgue
    }

    pub fn combs(&self) -> &[PeriodicComb] {
        &self.combs
    }

    pub fn finite(&self) -> &FiniteComb {
        &self.finite
    }

    pub fn is_zero(&self) -> bool {
        self.lebesgue.norm() == 0.0 && self.combs.is_empty() && self.finite.is_empty()
    }

    /// Raw parts iterator used by the arithmetic ops.
    fn raw_combs(&self) -> impl Iterator<Item = (Rat, Vec<CAmp>)> + '_ {
        self.combs.iter().map(|c| (c.spacing, c.weights.clone()))
    }

    /// `self + other`, canonical. Fails only if the comb refinement guard trips.
    pub fn add(&self, other: &MixedMeasure, p: &Params) -> Result<Self, MeasureError> {
        MixedMeasure::from_parts(
            self.lebesgue + other.lebesgue,
            self.raw_combs().chain(other.raw_combs()),
            self.finite
                .atoms
                .iter()
                .chain(other.finite.atoms.iter())
                .cloned()
                .collect(),
            p,
        )
    }

    /// `self − other`, canonical.
    pub fn sub(&self, other: &MixedMeasure, p: &Params) -> Result<Self, MeasureError> {
        self.add(&other.scale(CAmp::new(-1.0, 0.0), p), p)
    }

    /// `c · self`, canonical. Never trips the guard.
    pub fn scale(&self, c: CAmp, p: &Params) -> Self {
        let combs = self
            .combs
            .iter()
            .filter_map(|comb| {
                let (s, w) = comb.map_weights(|x| c * x);
                PeriodicComb::canonical(s, w, p.tol).expect("scaling preserves validity")
            })
            .collect();
        let lebesgue = {
            let l = c * self.lebesgue;
            if l.norm() <= p.tol {
                CAmp::new(0.0, 0.0)
            } else {
                l
            }
        };
        MixedMeasure {
            lebesgue,
            combs,
            finite: FiniteComb::canonical(
                self.finite.atoms.iter().map(|(x, w)| (*x, c * w)).collect(),
                p.tol,
            )
            .expect("scaling preserves validity"),
        }
    }

    /// Plain reflection `x ↦ −x` without conjugation.
    pub fn reflect(&self) -> Self {
        self.reflect_impl(false)
    }

    /// `μ̃`: the measure `x ↦ conj(μ(−x))`, the second factor of the
    /// autocorrelation `γ = ω ⊛ ω̃`.
    pub fn reflect_conjugate(&self) -> Self {
        self.reflect_impl(true)
    }

    fn reflect_impl(&self, conjugate: bool) -> Self {
        let tweak = |w: CAmp| if conjugate { w.conj() } else { w };
        let combs = self
            .combs
            .iter()
            .map(|c| {
                let (s, w) = c.reflected();
                PeriodicComb {
                    spacing: s,
                    weights: w.into_iter().map(tweak).collect(),
                }
            })
            .collect();
        let finite = FiniteComb::canonical(
            self.finite.atoms.iter().map(|(x, w)| (-*x, tweak(*w))).collect(),
            0.0,
        )
        .expect("reflection preserves validity");
        MixedMeasure {
            lebesgue: tweak(self.lebesgue),
            combs,
            finite,
        }
    }

    /// Total weight of the atom at `x` (comb slot plus finite correction).
    pub fn weight_at(&self, x: Rat) -> CAmp {
        let mut w = CAmp::new(0.0, 0.0);
        for comb in &self.combs {
            w += comb.weight_at(x);
        }
        for (pos, fw) in &self.finite.atoms {
            if *pos == x {
                w += *fw;
            }
        }
        w
    }

    /// All atoms of the measure in `[a, b]` (with total weights), plus the
    /// Lebesgue mass `lebesgue·(b−a)`. Requires `a < b`.
    pub fn restrict(&self, a: Rat, b: Rat) -> (FiniteComb, CAmp) {
        assert!(a < b, "restrict needs a < b");
        let mut atoms: Vec<(Rat, CAmp)> = Vec::new();
        for comb in &self.combs {
            let lo = (a / comb.spacing).ceil();
            let hi = (b / comb.spacing).floor();
            let n = comb.weights.len() as i64;
            for t in lo..=hi {
                let w = comb.weights[t.rem_euclid(n) as usize];
                if w.norm() > 0.0 {
                    atoms.push((comb.spacing * Rat::from_int(t), w));
                }
            }
        }
        for (x, w) in &self.finite.atoms {
            if a <= *x && *x <= b {
                atoms.push((*x, *w));
            }
        }
        let finite = FiniteComb::canonical(atoms, 0.0).expect("restriction preserves validity");
        let mass = self.lebesgue * (b - a).to_f64();
        (finite, mass)
    }

    /// True iff every weight and the Lebesgue coefficient are real within `tol`.
    pub fn is_real(&self, p: &Params) -> bool {
        let ok = |w: CAmp| w.im.abs() <= p.tol;
        ok(self.lebesgue)
            && self.combs.iter().all(|c| c.weights.iter().all(|w| ok(*w)))
            && self.finite.atoms.iter().all(|(_, w)| ok(*w))
    }

    /// True iff the measure is real and every effective atom weight and the
    /// Lebesgue coefficient are `≥ −tol`. Finite corrections are combined
    /// with the comb slot they sit on before the sign test.
    pub fn is_positive(&self, p: &Params) -> bool {
        if !self.is_real(p) {
            return false;
        }
        if self.lebesgue.re < -p.tol {
            return false;
        }
        for comb in &self.combs {
            if comb.weights.iter().any(|w| w.re < -p.tol) {
                return false;
            }
        }
        self.finite
            .atoms
            .iter()
            .all(|(x, _)| self.weight_at(*x).re >= -p.tol)
    }

    /// True iff the measure equals its plain reflection.
    pub fn is_inversion_symmetric(&self, p: &Params) -> bool {
        self.approx_eq(&self.reflect(), p.tol)
    }

    /// Canonical equality with an explicit tolerance on weights. Positions
    /// and spacings compare exactly.
    pub fn approx_eq(&self, other: &MixedMeasure, tol: f64) -> bool {
        if !camp_approx_eq(self.lebesgue, other.lebesgue, tol) {
            return false;
        }
        if self.combs.len() != other.combs.len() || self.finite.atoms.len() != other.finite.atoms.len()
        {
            return false;
        }
        for (a, b) in self.combs.iter().zip(&other.combs) {
            if a.spacing != b.spacing || a.weights.len() != b.weights.len() {
                return false;
            }
            if !a
                .weights
                .iter()
                .zip(&b.weights)
                .all(|(x, y)| camp_approx_eq(*x, *y, tol))
            {
                return false;
            }
        }
        self.finite
            .atoms
            .iter()
            .zip(&other.finite.atoms)
            .all(|((xa, wa), (xb, wb))| xa == xb && camp_approx_eq(*wa, *wb, tol))
    }
}

/// Canonical equality at the default tolerance.
impl PartialEq for MixedMeasure {
    fn eq(&self, other: &Self) -> bool {
        self.approx_eq(other, DEFAULT_TOL)
    }
}

fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
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

    #[test]
    fn constant_weights_reduce_to_period_one() {
        let m = MixedMeasure::periodic(Rat::ONE, vec![re(1.0), re(1.0)], &p()).unwrap();
        let comb = &m.combs()[0];
        assert_eq!(comb.spacing(), Rat::ONE);
        assert_eq!(comb.weights().len(), 1);
    }

    #[test]
    fn zero_slot_thins_support() {
        // comb(spacing ½, weights [1,0]) has support ℤ.
        let m = MixedMeasure::periodic(Rat::new(1, 2), vec![re(1.0), re(0.0)], &p()).unwrap();
        let comb = &m.combs()[0];
        assert_eq!(comb.spacing(), Rat::ONE);
        assert_eq!(comb.weights(), &[re(1.0)]);
    }

    #[test]
    fn offset_support_cannot_thin() {
        // atoms at ¾ + ℤ: spacing ¼, only slot 3 occupied.
        let m = MixedMeasure::periodic(
            Rat::new(1, 4),
            vec![re(0.0), re(0.0), re(0.0), re(1.0)],
            &p(),
        )
        .unwrap();
        let comb = &m.combs()[0];
        assert_eq!(comb.spacing(), Rat::new(1, 4));
        assert_eq!(comb.weights().len(), 4);
    }

    #[test]
    fn tiny_finite_atoms_are_dropped() {
        let m = MixedMeasure::from_parts(re(0.0), [], vec![(Rat::ZERO, re(1e-12))], &p()).unwrap();
        assert!(m.is_zero());
    }

    #[test]
    fn canonicalize_is_idempotent_on_examples() {
        let m = MixedMeasure::from_parts(
            re(2.0),
            [(Rat::new(1, 2), vec![re(1.0), re(0.0)]), (Rat::ONE, vec![re(-1.0)])],
            vec![(Rat::new(1, 3), re(0.5))],
            &p(),
        )
        .unwrap();
        let again = m.canonicalize(&p()).unwrap();
        assert_eq!(m, again);
        assert_eq!(m.combs().len(), 1);
    }

    #[test]
    fn add_merges_commensurate_combs() {
        // 2λ + (−δ_ℤ)
        let two_lambda = MixedMeasure::lebesgue_multiple(re(2.0));
        let minus_comb = MixedMeasure::dirac_comb(Rat::ONE).scale(re(-1.0), &p());
        let m = two_lambda.add(&minus_comb, &p()).unwrap();
        assert_eq!(m.lebesgue(), re(2.0));
        assert_eq!(m.combs().len(), 1);
        assert_eq!(m.combs()[0].weights(), &[re(-1.0)]);
    }

    #[test]
    fn refinement_guard_trips() {
        let p = Params {
            guard: 100,
            ..Params::default()
        };
        let a = MixedMeasure::dirac_comb(Rat::new(1, 101));
        let b = MixedMeasure::dirac_comb(Rat::ONE);
        let err = a.add(&b, &p).unwrap_err();
        assert!(matches!(err, MeasureError::RefinementTooLarge { .. }));
    }

    #[test]
    fn restrict_examples() {
        let p = p();
        let dz = MixedMeasure::dirac_comb(Rat::ONE);
        let (atoms, mass) = dz.restrict(Rat::ZERO, Rat::new(5, 2));
        assert_eq!(atoms.atoms().len(), 3);
        assert_eq!(mass, re(0.0));

        let lambda = MixedMeasure::lebesgue_multiple(re(1.0));
        let (atoms, mass) = lambda.restrict(Rat::ZERO, Rat::from_int(3));
        assert!(atoms.is_empty());
        assert!(camp_approx_eq(mass, re(3.0), 1e-12));

        // 2λ − δ_ℤ on [−1, 1]: three atoms of weight −1, mass 4.
        let m = MixedMeasure::from_parts(re(2.0), [(Rat::ONE, vec![re(-1.0)])], vec![], &p).unwrap();
        let (atoms, mass) = m.restrict(Rat::from_int(-1), Rat::ONE);
        assert_eq!(atoms.atoms().len(), 3);
        assert!(atoms.atoms().iter().all(|(_, w)| camp_approx_eq(*w, re(-1.0), 1e-12)));
        assert!(camp_approx_eq(mass, re(4.0), 1e-12));
    }

    #[test]
    fn predicates_on_paper_measures() {
        let p = p();
        let dz = MixedMeasure::dirac_comb(Rat::ONE);
        assert!(dz.is_real(&p) && dz.is_positive(&p) && dz.is_inversion_symmetric(&p));

        let m = MixedMeasure::from_parts(re(2.0), [(Rat::ONE, vec![re(-1.0)])], vec![], &p).unwrap();
        assert!(m.is_real(&p));
        assert!(!m.is_positive(&p));
        assert!(m.is_inversion_symmetric(&p));

        let m = MixedMeasure::from_parts(
            CAmp::new(-1.0, -1.0),
            [(Rat::ONE, vec![re(1.0)])],
            vec![],
            &p,
        )
        .unwrap();
        assert!(!m.is_real(&p));
        assert!(!m.is_positive(&p));
    }

    #[test]
    fn corrected_zero_atom_counts_as_positive() {
        // δ_{ℤ∖{0}} = δ_ℤ − δ₀ is a positive measure.
        let p = p();
        let m = MixedMeasure::from_parts(
            re(0.0),
            [(Rat::ONE, vec![re(1.0)])],
            vec![(Rat::ZERO, re(-1.0))],
            &p,
        )
        .unwrap();
        assert!(m.is_positive(&p));
        assert!(camp_approx_eq(m.weight_at(Rat::ZERO), re(0.0), 1e-12));
    }

    #[test]
    fn reflect_conjugate_is_involution() {
        let p = p();
        let m = MixedMeasure::from_parts(
            CAmp::new(0.5, -0.25),
            [(Rat::new(1, 2), vec![CAmp::new(1.0, 2.0), re(0.5), re(0.0), re(-1.0)])],
            vec![(Rat::new(-1, 3), CAmp::new(0.0, 1.0))],
            &p,
        )
        .unwrap();
        assert_eq!(m.reflect_conjugate().reflect_conjugate(), m);
    }

    #[test]
    fn reflect_conjugate_of_scaled_lebesgue() {
        let u = CAmp::from_polar(1.0, 1.234);
        let m = MixedMeasure::lebesgue_multiple(u);
        assert_eq!(m.reflect_conjugate(), MixedMeasure::lebesgue_multiple(u.conj()));
    }

    #[test]
    fn scale_by_zero_gives_zero_measure() {
        let p = p();
        let m = MixedMeasure::dirac_comb(Rat::ONE);
        assert!(m.scale(re(0.0), &p).is_zero());
    }
}
