//! Brute-force direct-limit oracle: `H^i_a(M, N)` is the colimit over `n` of
//! `Ext^i(M/a^n M, N)` along the maps induced by the surjections
//! `M/a^(n+1)M -> M/a^n M`. The oracle computes the finitely many levels the
//! budget allows, tracks per-degree dimensions of the images of the composite
//! transition maps into the last level, and reports a verdict only when those
//! image dimensions are stable across a window of levels; anything else is
//! inconclusive, never coerced.

use super::{bounds, predict_top_vanishing, top_attached_primes, AttachedReport};
use super::{BoundsReport, Instance, VanishingVerdict, Verdict};
use crate::error::{Error, Result};
use crate::exec;
use crate::groebner::{ideal_power, Ring, VectorElement};
use crate::homalg::{
    ext_with_resolution, hom_induced, lift_chain_map, quotient_by_ideal, span_gb,
    span_graded_dim, GradedMap, LiftVariant, PresentedModule, Resolution,
    Subquotient,
};
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleVerdict {
    Zero,
    Nonzero,
    Inconclusive,
}

impl std::fmt::Display for OracleVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OracleVerdict::Zero => write!(f, "zero"),
            OracleVerdict::Nonzero => write!(f, "nonzero"),
            OracleVerdict::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// Full trace of one oracle run at a fixed cohomological index.
#[derive(Clone, Debug)]
pub struct OracleTrace {
    pub index: usize,
    pub nmax: usize,
    pub stability_window: usize,
    /// scanned internal degrees, ascending
    pub degrees: Vec<i64>,
    /// `table[n-1][k]` = `dim_k Ext^index(M/a^n M, N)` at `degrees[k]`
    pub table: Vec<Vec<u64>>,
    /// `stable_images[n-1][k]` = dimension of the image of the composite
    /// transition from level `n` into level `nmax`, per degree
    pub stable_images: Vec<Vec<u64>>,
    /// per degree: image dimensions agree across the stability window
    pub stable_flags: Vec<bool>,
    /// the stabilized dimension where the flag is set
    pub stable_dims: Vec<Option<u64>>,
    pub verdict: OracleVerdict,
}

impl OracleTrace {
    /// Stabilized per-degree dimensions, keyed by degree.
    pub fn stable_table(&self) -> Vec<(i64, u64)> {
        self.degrees
            .iter()
            .zip(&self.stable_dims)
            .filter_map(|(&j, d)| d.map(|v| (j, v)))
            .collect()
    }
}

struct Level {
    res: Arc<Resolution>,
}

/// The direct system of one instance: per-level quotients `M/a^n M`, their
/// resolutions, and the chain maps lifting the level surjections. Building it
/// is the expensive part; traces at any index reuse it.
pub struct DirectSystem {
    ring: Ring,
    n_module: PresentedModule,
    nmax: usize,
    chain_len: usize,
    levels: Vec<Level>,
    /// `lifts[t][k]`: chain map `F_k(M/a^(t+2)M) -> F_k(M/a^(t+1)M)`
    lifts: Vec<Vec<GradedMap>>,
}

impl DirectSystem {
    pub fn new(inst: &Instance, nmax: usize, variant: LiftVariant) -> Result<DirectSystem> {
        if nmax < 2 {
            return Err(Error::BadOracleParams { nmax, window: 1 });
        }
        let ring = inst.ring().clone();
        let chain_len = inst.d() + 2;
        // per-level quotients and resolutions (independent, may run in parallel)
        let levels: Vec<Level> = exec::par_map((1..=nmax).collect(), |n| {
            let a_n = ideal_power(inst.ideal(), n).expect("n >= 1");
            let quotient = quotient_by_ideal(inst.module_m(), &a_n);
            let res = quotient.resolution(chain_len);
            Level { res }
        });
        // transition lifts are assembled sequentially in n
        let mut lifts = Vec::with_capacity(nmax - 1);
        for t in 0..nmax - 1 {
            let src = &levels[t + 1].res; // level n+1
            let tgt = &levels[t].res; // level n
            let id0 = GradedMap::identity(src.orig_f0(), &ring);
            lifts.push(lift_chain_map(src, tgt, &id0, chain_len, variant));
        }
        Ok(DirectSystem {
            ring,
            n_module: inst.module_n().clone(),
            nmax,
            chain_len,
            levels,
            lifts,
        })
    }

    pub fn nmax(&self) -> usize {
        self.nmax
    }

    /// Ext at one level.
    fn level_ext(&self, n: usize, i: usize) -> Subquotient {
        ext_with_resolution(&self.levels[n - 1].res, i, &self.n_module)
    }

    /// Ambient transition map between the Hom covers at index `i`,
    /// level `n` to level `n+1`.
    fn transition_ambient(
        &self,
        n: usize,
        i: usize,
        e_from: &Subquotient,
        e_to: &Subquotient,
    ) -> GradedMap {
        let psi = &self.lifts[n - 1][i];
        if e_from.ambient().rank() == 0 || e_to.ambient().rank() == 0 {
            return GradedMap::zero_map(
                e_from.ambient().clone(),
                e_to.ambient().clone(),
                &self.ring,
            );
        }
        hom_induced(&self.ring, psi, &self.n_module, e_from.ambient(), e_to.ambient())
    }

    /// Dimensions of the image of the composite transition from level `n`
    /// into level `m`, per degree. Exposed for the monotonicity property.
    pub fn image_dims_between(
        &self,
        n: usize,
        m: usize,
        i: usize,
        degrees: &[i64],
    ) -> Vec<u64> {
        assert!(1 <= n && n <= m && m <= self.nmax);
        let exts: Vec<Subquotient> = (n..=m).map(|l| self.level_ext(l, i)).collect();
        let target = exts.last().unwrap();
        let mut vectors: Vec<VectorElement> = exts[0].gens().to_vec();
        for (off, l) in (n..m).enumerate() {
            let h = self.transition_ambient(l, i, &exts[off], &exts[off + 1]);
            vectors = vectors.iter().map(|v| h.apply(v, &self.ring)).collect();
        }
        let gb_dens =
            span_gb(&self.ring, target.ambient().twists(), target.dens());
        image_class_dims(&self.ring, target, &gb_dens, &vectors, degrees)
    }

    /// Run the oracle at index `i` with the default degree slack.
    pub fn trace(&self, i: usize, stability_window: usize) -> Result<OracleTrace> {
        self.trace_with_slack(i, stability_window, 2)
    }

    /// Run the oracle at index `i`, scanning a degree window derived from the
    /// cycle-generator twists padded by `slack`.
    pub fn trace_with_slack(
        &self,
        i: usize,
        stability_window: usize,
        slack: i64,
    ) -> Result<OracleTrace> {
        if self.nmax < stability_window + 1 {
            return Err(Error::BadOracleParams { nmax: self.nmax, window: stability_window });
        }
        if i + 1 > self.chain_len {
            return Err(Error::ResolutionTooShort { have: self.chain_len, need: i + 1 });
        }
        let exts: Vec<Subquotient> =
            (1..=self.nmax).map(|n| self.level_ext(n, i)).collect();
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        for e in &exts {
            for d in e.gen_degrees() {
                lo = lo.min(d);
                hi = hi.max(d);
            }
        }
        let degrees: Vec<i64> =
            if lo > hi { Vec::new() } else { (lo - slack..=hi + slack).collect() };

        let table: Vec<Vec<u64>> = exts
            .iter()
            .map(|e| degrees.iter().map(|&j| e.graded_dim(j)).collect())
            .collect();

        // composite images into the last level: precompute the transition
        // maps once, then push each level's generators through
        let target = exts.last().unwrap();
        let gb_dens = span_gb(&self.ring, target.ambient().twists(), target.dens());
        let steps: Vec<GradedMap> = (1..self.nmax)
            .map(|n| self.transition_ambient(n, i, &exts[n - 1], &exts[n]))
            .collect();
        let mut stable_images: Vec<Vec<u64>> = vec![Vec::new(); self.nmax];
        stable_images[self.nmax - 1] = table[self.nmax - 1].clone();
        for n in (1..self.nmax).rev() {
            let mut vecs: Vec<VectorElement> = exts[n - 1].gens().to_vec();
            for step in &steps[n - 1..] {
                vecs = vecs.iter().map(|v| step.apply(v, &self.ring)).collect();
            }
            stable_images[n - 1] =
                image_class_dims(&self.ring, target, &gb_dens, &vecs, &degrees);
        }

        // stability over the last `stability_window` source levels
        let w_lo = self.nmax - stability_window; // smallest source level in the window
        let mut stable_flags = Vec::with_capacity(degrees.len());
        let mut stable_dims = Vec::with_capacity(degrees.len());
        for k in 0..degrees.len() {
            let vals: Vec<u64> =
                (w_lo..=self.nmax - 1).map(|n| stable_images[n - 1][k]).collect();
            let stable = vals.windows(2).all(|w| w[0] == w[1]);
            stable_flags.push(stable);
            stable_dims.push(stable.then(|| vals[0]));
        }
        let all_stable_zero = !degrees.is_empty()
            && stable_flags.iter().all(|&s| s)
            && stable_dims.iter().all(|d| d == &Some(0));
        let empty_system = degrees.is_empty();
        let some_stable_positive =
            stable_dims.iter().any(|d| matches!(d, Some(v) if *v > 0));
        let verdict = if empty_system || all_stable_zero {
            OracleVerdict::Zero
        } else if some_stable_positive {
            OracleVerdict::Nonzero
        } else {
            OracleVerdict::Inconclusive
        };
        Ok(OracleTrace {
            index: i,
            nmax: self.nmax,
            stability_window,
            degrees,
            table,
            stable_images,
            stable_flags,
            stable_dims,
            verdict,
        })
    }
}

/// Per-degree dimensions of the image submodule generated by the classes of
/// `vectors` inside the subquotient `target`. `gb_dens` is the cached basis
/// of the denominator span.
fn image_class_dims(
    ring: &Ring,
    target: &Subquotient,
    gb_dens: &[VectorElement],
    vectors: &[VectorElement],
    degrees: &[i64],
) -> Vec<u64> {
    if degrees.is_empty() {
        return Vec::new();
    }
    let twists = target.ambient().twists().to_vec();
    let mut with_image = target.dens().to_vec();
    with_image.extend(vectors.iter().filter(|v| !ring.is_zero_vector(v)).cloned());
    let gb_all = span_gb(ring, &twists, &with_image);
    degrees
        .iter()
        .map(|&j| {
            span_graded_dim(ring, &twists, &gb_all, j)
                - span_graded_dim(ring, &twists, gb_dens, j)
        })
        .collect()
}

/// How the predictor and the oracle relate on one instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Agreement {
    Agree,
    Disagree,
    NotApplicable,
}

impl std::fmt::Display for Agreement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Agreement::Agree => write!(f, "agree"),
            Agreement::Disagree => write!(f, "DISAGREE"),
            Agreement::NotApplicable => write!(f, "n/a"),
        }
    }
}

/// Everything the engine knows about one instance.
#[derive(Clone, Debug)]
pub struct VanishingReport {
    pub d: usize,
    pub predictor: VanishingVerdict,
    pub oracle: OracleTrace,
    /// `None` when `M` or `N` is zero (bounds are defined for nonzero modules)
    pub bounds: Option<BoundsReport>,
    pub attached: AttachedReport,
    pub agreement: Agreement,
}

impl VanishingReport {
    pub fn is_hard_failure(&self) -> bool {
        self.agreement == Agreement::Disagree
    }
}

/// Run predictor, oracle at `i = d`, bounds and attached primes, and compare.
/// A disagreement between two definite verdicts is reported as `Disagree`;
/// callers treat it as a hard failure.
pub fn cross_validate(
    inst: &Instance,
    nmax: usize,
    stability_window: usize,
) -> Result<VanishingReport> {
    cross_validate_with(inst, nmax, stability_window, 2)
}

/// [`cross_validate`] with an explicit degree-window slack.
pub fn cross_validate_with(
    inst: &Instance,
    nmax: usize,
    stability_window: usize,
    slack: i64,
) -> Result<VanishingReport> {
    let d = inst.d();
    let predictor = predict_top_vanishing(inst);
    let system = DirectSystem::new(inst, nmax, LiftVariant::Standard)?;
    let oracle = system.trace_with_slack(d, stability_window, slack)?;
    let bounds_report = if inst.module_m().is_zero() || inst.module_n().is_zero() {
        None
    } else {
        Some(bounds(inst)?)
    };
    let attached = top_attached_primes(inst)?;
    let agreement = match (predictor.value, oracle.verdict) {
        (Verdict::Unknown, _) | (_, OracleVerdict::Inconclusive) => Agreement::NotApplicable,
        (Verdict::Vanishes, OracleVerdict::Zero) => Agreement::Agree,
        (Verdict::Nonvanishes, OracleVerdict::Nonzero) => Agreement::Agree,
        _ => Agreement::Disagree,
    };
    Ok(VanishingReport { d, predictor, oracle, bounds: bounds_report, attached, agreement })
}

