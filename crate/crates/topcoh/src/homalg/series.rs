//! Hilbert series from free resolutions, Bass numbers, depth, Krull
//! dimension of modules.

use super::{ext, GradedFreeModule, PresentedModule};
use crate::error::{Error, Result};
use crate::groebner::{IdealBasis, Ring};
use crate::monomial::count_monomials;
use crate::poly::Polynomial;
use std::collections::BTreeMap;

/// Hilbert series of a graded module as `numerator / (1 - t)^nvars`;
/// the numerator is an integer Laurent polynomial keyed by exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    numer: BTreeMap<i64, i64>,
    nvars: usize,
}

impl HilbertSeries {
    pub fn new(numer: BTreeMap<i64, i64>, nvars: usize) -> Self {
        let numer = numer.into_iter().filter(|(_, c)| *c != 0).collect();
        HilbertSeries { numer, nvars }
    }

    /// Alternating twist sum over the free modules of a resolution.
    pub fn from_free_modules(nvars: usize, frees: &[GradedFreeModule]) -> Self {
        let mut numer: BTreeMap<i64, i64> = BTreeMap::new();
        for (k, f) in frees.iter().enumerate() {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            for &t in f.twists() {
                *numer.entry(t).or_insert(0) += sign;
            }
        }
        Self::new(numer, nvars)
    }

    pub fn numerator(&self) -> &BTreeMap<i64, i64> {
        &self.numer
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_empty()
    }

    /// `dim_k M_j` by power-series expansion of `numer / (1-t)^n`.
    pub fn dim_at(&self, j: i64) -> i64 {
        let mut acc: i64 = 0;
        for (&k, &c) in &self.numer {
            if j >= k {
                acc += c * count_monomials(self.nvars, (j - k) as u32) as i64;
            }
        }
        acc
    }
}

impl std::fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.numer.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&k, &c) in &self.numer {
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                1 if a == 1 => write!(f, "t")?,
                1 => write!(f, "{a}*t")?,
                _ if a == 1 => write!(f, "t^{k}")?,
                _ => write!(f, "{a}*t^{k}")?,
            }
        }
        write!(f, " / (1-t)^{}", self.nvars)
    }
}

/// Hilbert series of `M` from a finite resolution over the polynomial ring
/// (quotient-ring modules are resolved through their lifted presentation).
pub fn hilbert_of(m: &PresentedModule) -> HilbertSeries {
    let ring = m.ring();
    let nvars = ring.nvars();
    if ring.is_quotient() {
        // lift: same presentation plus the fold, over the polynomial ring
        let poly_ring = Ring::polynomial(ring.ctx());
        let f0 = m.presentation().target().clone();
        let mut cols = m.presentation().cols().to_vec();
        let mut twists = m.presentation().source().twists().to_vec();
        let fdeg = ring.modulus().unwrap().homogeneous_degree().unwrap();
        for (i, &t) in f0.twists().iter().enumerate() {
            let mut comps =
                vec![Polynomial::zero(ring.ctx()); f0.rank().max(1)];
            comps[i] = ring.modulus().unwrap().clone();
            cols.push(crate::groebner::VectorElement::new(comps));
            twists.push(t + fdeg);
        }
        let lifted = PresentedModule::new(
            poly_ring,
            super::GradedMap::new(GradedFreeModule::new(twists), f0, cols),
        );
        return hilbert_of(&lifted);
    }
    let res = m.resolution(nvars + 2);
    debug_assert!(res.is_complete());
    let frees: Vec<GradedFreeModule> = (0..=res.length()).map(|k| res.module_at(k)).collect();
    HilbertSeries::from_free_modules(nvars, &frees)
}

/// `dim_k Ext^i(k, M)`, totalled over its graded pieces.
pub fn bass_number(i: usize, m: &PresentedModule) -> u64 {
    let ring = m.ring();
    let k_mod = residue_field(ring);
    let e = ext(i, &k_mod, m);
    let mut degrees: Vec<i64> = e.gen_degrees();
    degrees.sort_unstable();
    degrees.dedup();
    // the module is killed by the maximal ideal, so its support is contained
    // in the generator degrees
    degrees.into_iter().map(|j| e.graded_dim(j)).sum()
}

/// The residue field `R/m` as a presented module over the working ring.
pub fn residue_field(ring: &Ring) -> PresentedModule {
    let ctx = ring.ctx();
    let vars: Vec<Polynomial> = (0..ctx.nvars()).map(|i| Polynomial::var(ctx, i)).collect();
    PresentedModule::cyclic(ring, &IdealBasis::new(vars))
}

/// Depth: least `i` with a nonzero Bass number.
pub fn depth(m: &PresentedModule) -> Result<usize> {
    if m.is_zero() {
        return Err(Error::ZeroModule);
    }
    for i in 0..=m.ring().dim() {
        if bass_number(i, m) > 0 {
            return Ok(i);
        }
    }
    Err(Error::Other("no nonzero Bass number up to the ring dimension".into()))
}

/// Krull dimension of the module (`-1` for the zero module).
pub fn krull_dim(m: &PresentedModule) -> i64 {
    if m.is_zero() {
        return -1;
    }
    let ann = m.annihilator();
    crate::primes::dim_of_ideal(m.ring(), &ann)
}
