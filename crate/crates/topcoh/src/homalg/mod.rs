//! Graded homological algebra over the testbed ring: presented modules,
//! minimal free resolutions, Hom/tensor/Ext, Hilbert series, depth,
//! Bass numbers and Krull dimension.
//!
//! A graded free module is a twist list; a module is the cokernel of a graded
//! map between free modules. Kernels, images and homology are computed by
//! syzygy-based subquotient calculus, never by vector-space truncation, so
//! every result is exact and twist-correct. Graded piece dimensions are read
//! off afterwards by monomial counting against initial modules.

mod functors;
mod resolution;
mod series;

pub use functors::{ext, ext_with_resolution, hom_free_into, hom_induced, hom_module, quotient_by_ideal, tensor, Subquotient};
pub use resolution::{lift_chain_map, resolve, LiftVariant, Pd, Resolution};
pub use series::{bass_number, depth, hilbert_of, krull_dim, residue_field, HilbertSeries};

use crate::error::{Error, Result};
use crate::groebner::{module_gb, ColumnSpan, IdealBasis, Ring, VectorElement};
use crate::monomial::{count_monomials, monomials_of_degree, Monomial};
use crate::poly::Polynomial;
use std::sync::{Arc, Mutex, OnceLock};

/// A graded free module, recorded as the degree of each basis element
/// (the module is the direct sum of `R(-t_i)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedFreeModule {
    twists: Vec<i64>,
}

impl GradedFreeModule {
    pub fn new(twists: Vec<i64>) -> Self {
        GradedFreeModule { twists }
    }

    pub fn zero() -> Self {
        GradedFreeModule { twists: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    /// Dimension of the degree-`j` piece over the base field.
    pub fn graded_dim(&self, nvars: usize, j: i64) -> u64 {
        self.twists
            .iter()
            .filter(|&&t| j >= t)
            .map(|&t| count_monomials(nvars, (j - t) as u32))
            .sum()
    }
}

/// A graded map of free modules, stored column-major: `cols[j]` is the image
/// of the j-th source basis vector in the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    source: GradedFreeModule,
    target: GradedFreeModule,
    cols: Vec<VectorElement>,
}

impl GradedMap {
    pub fn new(source: GradedFreeModule, target: GradedFreeModule, cols: Vec<VectorElement>) -> Self {
        assert_eq!(cols.len(), source.rank());
        assert!(cols.iter().all(|c| c.rank() == target.rank().max(1) || target.rank() == 0));
        GradedMap { source, target, cols }
    }

    pub fn zero_map(source: GradedFreeModule, target: GradedFreeModule, ring: &Ring) -> Self {
        let cols = (0..source.rank())
            .map(|_| VectorElement::zero(ring.ctx(), target.rank().max(1)))
            .collect();
        GradedMap { source, target, cols }
    }

    pub fn identity(f: &GradedFreeModule, ring: &Ring) -> Self {
        let cols = (0..f.rank())
            .map(|j| VectorElement::unit(ring.ctx(), f.rank().max(1), j))
            .collect();
        GradedMap { source: f.clone(), target: f.clone(), cols }
    }

    pub fn source(&self) -> &GradedFreeModule {
        &self.source
    }

    pub fn target(&self) -> &GradedFreeModule {
        &self.target
    }

    pub fn cols(&self) -> &[VectorElement] {
        &self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        self.cols[j].comp(i)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    /// Every entry homogeneous of degree (source twist - target twist).
    pub fn is_graded(&self) -> bool {
        self.cols.iter().enumerate().all(|(j, c)| {
            c.is_zero()
                || c.degree(self.target.twists())
                    .map(|d| d == self.source.twists()[j])
                    .unwrap_or(false)
        })
    }

    /// Apply the map to an element of the source.
    pub fn apply(&self, v: &VectorElement, ring: &Ring) -> VectorElement {
        debug_assert_eq!(v.rank(), self.source.rank().max(1));
        let mut out = VectorElement::zero(ring.ctx(), self.target.rank().max(1));
        for (j, col) in self.cols.iter().enumerate() {
            let c = v.comp(j);
            if !c.is_zero() {
                out = out.add(&col.mul_poly(c));
            }
        }
        out
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &GradedMap, ring: &Ring) -> GradedMap {
        debug_assert_eq!(other.target.rank(), self.source.rank());
        let cols = other.cols.iter().map(|c| self.apply(c, ring)).collect();
        GradedMap { source: other.source.clone(), target: self.target.clone(), cols }
    }
}

/// A chain complex of graded maps with matching ends; `maps[k]` is the
/// differential `F_{k+1} -> F_k`.
#[derive(Clone, Debug)]
pub struct Complex {
    maps: Vec<GradedMap>,
}

impl Complex {
    pub fn new(maps: Vec<GradedMap>) -> Self {
        for w in maps.windows(2) {
            assert_eq!(w[0].source(), w[1].target(), "complex ends must match");
        }
        Complex { maps }
    }

    pub fn maps(&self) -> &[GradedMap] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    /// Free module at homological index `k`.
    pub fn module_at(&self, k: usize) -> Option<&GradedFreeModule> {
        if k == 0 {
            self.maps.first().map(|d| d.target())
        } else {
            self.maps.get(k - 1).map(|d| d.source())
        }
    }

    /// Consecutive composites are exactly zero (modulo the hypersurface fold
    /// when the ring is a quotient).
    pub fn check_composites(&self, ring: &Ring) -> bool {
        self.maps.windows(2).all(|w| {
            w[0].compose(&w[1], ring).cols().iter().all(|c| ring.is_zero_vector(c))
        })
    }
}

/// A finitely generated graded module, presented as the cokernel of a graded
/// map between graded free modules. Caches are write-once and shareable.
pub struct PresentedModule {
    ring: Ring,
    pres: GradedMap,
    pres_span: OnceLock<Arc<ColumnSpan>>,
    res_cache: Mutex<Option<Arc<Resolution>>>,
    min_twists: OnceLock<Vec<i64>>,
    hilbert: OnceLock<Arc<HilbertSeries>>,
    ann: OnceLock<Arc<IdealBasis>>,
}

impl Clone for PresentedModule {
    fn clone(&self) -> Self {
        PresentedModule::new(self.ring.clone(), self.pres.clone())
    }
}

impl std::fmt::Debug for PresentedModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PresentedModule")
            .field("target_twists", &self.pres.target().twists())
            .field("relations", &self.pres.cols().len())
            .finish()
    }
}

impl PresentedModule {
    pub fn new(ring: Ring, pres: GradedMap) -> Self {
        debug_assert!(pres.is_graded(), "presentation must be a graded map");
        PresentedModule {
            ring,
            pres,
            pres_span: OnceLock::new(),
            res_cache: Mutex::new(None),
            min_twists: OnceLock::new(),
            hilbert: OnceLock::new(),
            ann: OnceLock::new(),
        }
    }

    /// The canonical zero module: rank-0 target.
    pub fn zero(ring: &Ring) -> Self {
        let f0 = GradedFreeModule::zero();
        Self::new(ring.clone(), GradedMap::new(GradedFreeModule::zero(), f0, Vec::new()))
    }

    /// Free module with the given twists.
    pub fn free(ring: &Ring, twists: Vec<i64>) -> Self {
        let f0 = GradedFreeModule::new(twists);
        Self::new(ring.clone(), GradedMap::new(GradedFreeModule::zero(), f0, Vec::new()))
    }

    /// The ring itself.
    pub fn ring_module(ring: &Ring) -> Self {
        Self::free(ring, vec![0])
    }

    /// Cyclic module `R/I`.
    pub fn cyclic(ring: &Ring, ideal: &IdealBasis) -> Self {
        let f0 = GradedFreeModule::new(vec![0]);
        let cols: Vec<VectorElement> = ideal
            .gens()
            .iter()
            .map(|g| VectorElement::from_poly(g.clone()))
            .collect();
        let twists = cols
            .iter()
            .map(|c| c.degree(f0.twists()).expect("homogeneous ideal generator"))
            .collect();
        Self::new(ring.clone(), GradedMap::new(GradedFreeModule::new(twists), f0, cols))
    }

    /// Direct sum with block presentation.
    pub fn direct_sum(ring: &Ring, parts: &[PresentedModule]) -> Self {
        let ctx = ring.ctx();
        let mut t0 = Vec::new();
        let mut t1 = Vec::new();
        for p in parts {
            t0.extend_from_slice(p.pres.target().twists());
            t1.extend_from_slice(p.pres.source().twists());
        }
        let rank0 = t0.len();
        let mut cols = Vec::new();
        let mut off0 = 0;
        for p in parts {
            for c in p.pres.cols() {
                let mut comps = vec![Polynomial::zero(ctx); rank0.max(1)];
                for (i, e) in c.comps().iter().enumerate() {
                    comps[off0 + i] = e.clone();
                }
                cols.push(VectorElement::new(comps));
            }
            off0 += p.pres.target().rank();
        }
        Self::new(
            ring.clone(),
            GradedMap::new(GradedFreeModule::new(t1), GradedFreeModule::new(t0), cols),
        )
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn presentation(&self) -> &GradedMap {
        &self.pres
    }

    pub fn generators(&self) -> &GradedFreeModule {
        self.pres.target()
    }

    /// Cached span of the relation columns (with the quotient fold).
    pub fn relation_span(&self) -> &Arc<ColumnSpan> {
        self.pres_span.get_or_init(|| {
            Arc::new(ColumnSpan::new(
                &self.ring,
                self.pres.target().twists().to_vec(),
                self.pres.cols().to_vec(),
            ))
        })
    }

    /// Zero iff the presentation is surjective onto its free target.
    pub fn is_zero(&self) -> bool {
        let rank = self.pres.target().rank();
        if rank == 0 {
            return true;
        }
        let span = self.relation_span();
        (0..rank).all(|i| span.contains(&VectorElement::unit(self.ring.ctx(), rank, i)))
    }

    /// Minimal resolution, truncated at least at `min_len` (or complete).
    pub fn resolution(&self, min_len: usize) -> Arc<Resolution> {
        let mut guard = self.res_cache.lock().unwrap();
        if let Some(res) = guard.as_ref() {
            if res.is_complete() || res.truncation() >= min_len {
                return Arc::clone(res);
            }
        }
        let len = min_len.max(self.ring.dim() + 2);
        let res = Arc::new(resolve(&self.ring, &self.pres, len));
        *guard = Some(Arc::clone(&res));
        res
    }

    /// Projective dimension.
    pub fn pd(&self) -> Pd {
        let res = self.resolution(self.ring.dim() + 2);
        if res.is_complete() {
            Pd::Finite(res.length())
        } else {
            Pd::Infinite
        }
    }

    /// Twists of a minimal generating set (pruned presentation target).
    pub fn minimal_twists(&self) -> &[i64] {
        self.min_twists.get_or_init(|| {
            let res = self.resolution(1);
            res.f0().twists().to_vec()
        })
    }

    /// Degree window `[min twist - slack, max twist + slack]` derived from
    /// minimal generator twists; `None` for the zero module.
    pub fn degree_window(&self, slack: i64) -> Option<(i64, i64)> {
        let tw = self.minimal_twists();
        let lo = tw.iter().min()?;
        let hi = tw.iter().max()?;
        Some((lo - slack, hi + slack))
    }

    /// Dimension of the degree-`j` graded piece over the base field.
    pub fn graded_dim(&self, j: i64) -> u64 {
        let nvars = self.ring.nvars();
        let ambient = self.pres.target().graded_dim(nvars, j);
        let led = span_graded_dim(
            &self.ring,
            self.pres.target().twists(),
            &self.relation_span().span_gb(),
            j,
        );
        ambient - led
    }

    pub fn hilbert_series(&self) -> Arc<HilbertSeries> {
        Arc::clone(self.hilbert.get_or_init(|| Arc::new(series::hilbert_of(self))))
    }

    pub fn annihilator(&self) -> Arc<IdealBasis> {
        Arc::clone(self.ann.get_or_init(|| Arc::new(functors::annihilator_of(self))))
    }

    pub fn depth(&self) -> Result<usize> {
        series::depth(self)
    }

    pub fn krull_dim(&self) -> i64 {
        series::krull_dim(self)
    }
}

/// Number of degree-`j` monomial-position pairs in the initial module of the
/// span: the k-dimension of the span's degree-`j` piece.
pub fn span_graded_dim(ring: &Ring, twists: &[i64], span_gb: &[VectorElement], j: i64) -> u64 {
    let nvars = ring.nvars();
    let leads: Vec<(usize, Monomial)> = span_gb
        .iter()
        .filter_map(|g| g.lead().map(|(p, t)| (p, t.mono.clone())))
        .collect();
    let mut total = 0u64;
    for (p, &t) in twists.iter().enumerate() {
        if j < t {
            continue;
        }
        let d = (j - t) as u32;
        for m in monomials_of_degree(nvars, d) {
            if leads.iter().any(|(lp, lm)| *lp == p && lm.divides(&m)) {
                total += 1;
            }
        }
    }
    total
}

/// Groebner basis of a plain column span (with quotient fold).
pub fn span_gb(ring: &Ring, twists: &[i64], cols: &[VectorElement]) -> Vec<VectorElement> {
    module_gb(ring, twists, cols)
}

/// Validation used by the instance layer: every relation column homogeneous.
pub fn check_graded(pres: &GradedMap) -> Result<()> {
    if !pres.is_graded() {
        return Err(Error::Inhomogeneous("presentation matrix is not a graded map".into()));
    }
    Ok(())
}
