//! Hom, tensor, quotient and Ext on presented modules, via syzygy-based
//! subquotient presentations.

use super::{span_graded_dim, GradedFreeModule, GradedMap, PresentedModule};
use crate::groebner::{ColumnSpan, IdealBasis, Ring, VectorElement};
use crate::poly::Polynomial;
use std::sync::{Arc, OnceLock};

/// A graded subquotient `<gens> / <dens>` of a free module, with cached
/// Groebner data. This is how kernels and homology are carried around before
/// being flattened to a presentation.
pub struct Subquotient {
    ring: Ring,
    ambient: GradedFreeModule,
    gens: Vec<VectorElement>,
    dens: Vec<VectorElement>,
    combined: OnceLock<Arc<ColumnSpan>>,
    dens_span: OnceLock<Arc<ColumnSpan>>,
    module: OnceLock<Arc<PresentedModule>>,
}

impl Subquotient {
    pub fn new(
        ring: &Ring,
        ambient: GradedFreeModule,
        gens: Vec<VectorElement>,
        dens: Vec<VectorElement>,
    ) -> Self {
        let gens = gens.into_iter().filter(|v| !ring.is_zero_vector(v)).collect();
        let dens = dens.into_iter().filter(|v| !ring.is_zero_vector(v)).collect();
        Subquotient {
            ring: ring.clone(),
            ambient,
            gens,
            dens,
            combined: OnceLock::new(),
            dens_span: OnceLock::new(),
            module: OnceLock::new(),
        }
    }

    pub fn zero(ring: &Ring) -> Self {
        Subquotient::new(ring, GradedFreeModule::zero(), Vec::new(), Vec::new())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn ambient(&self) -> &GradedFreeModule {
        &self.ambient
    }

    pub fn gens(&self) -> &[VectorElement] {
        &self.gens
    }

    pub fn dens(&self) -> &[VectorElement] {
        &self.dens
    }

    pub fn gen_degrees(&self) -> Vec<i64> {
        self.gens
            .iter()
            .map(|g| g.degree(self.ambient.twists()).expect("homogeneous cycle generator"))
            .collect()
    }

    fn combined_span(&self) -> &Arc<ColumnSpan> {
        self.combined.get_or_init(|| {
            let mut cols = self.gens.clone();
            cols.extend(self.dens.iter().cloned());
            Arc::new(ColumnSpan::new(&self.ring, self.ambient.twists().to_vec(), cols))
        })
    }

    fn dens_span(&self) -> &Arc<ColumnSpan> {
        self.dens_span.get_or_init(|| {
            Arc::new(ColumnSpan::new(
                &self.ring,
                self.ambient.twists().to_vec(),
                self.dens.clone(),
            ))
        })
    }

    /// Class of `v` is zero iff `v` lies in the denominator span.
    pub fn class_is_zero(&self, v: &VectorElement) -> bool {
        self.ring.is_zero_vector(v) || self.dens_span().contains(v)
    }

    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(|g| self.class_is_zero(g))
    }

    /// Coefficients on `gens` expressing the class of `v`, when `v` lies in
    /// the subquotient's numerator span.
    pub fn express_class(&self, v: &VectorElement) -> Option<Vec<Polynomial>> {
        let all = self.combined_span().express(v)?;
        Some(all[..self.gens.len()].to_vec())
    }

    /// `dim_k` of the degree-`j` piece.
    pub fn graded_dim(&self, j: i64) -> u64 {
        let nvars = self.ring.nvars();
        let whole = span_graded_dim(
            &self.ring,
            self.ambient.twists(),
            &self.combined_span().span_gb(),
            j,
        );
        let dens = span_graded_dim(
            &self.ring,
            self.ambient.twists(),
            &self.dens_span().span_gb(),
            j,
        );
        let _ = nvars;
        whole - dens
    }

    /// Flatten to a presentation: one free generator per cycle generator,
    /// relations are the syzygies of `[gens | dens]` projected to the
    /// generator coordinates.
    pub fn module(&self) -> Arc<PresentedModule> {
        Arc::clone(self.module.get_or_init(|| {
            let ctx = self.ring.ctx();
            let s = self.gens.len();
            if s == 0 {
                return Arc::new(PresentedModule::zero(&self.ring));
            }
            let target = GradedFreeModule::new(self.gen_degrees());
            let rel_cols: Vec<VectorElement> = self
                .combined_span()
                .syzygies()
                .into_iter()
                .map(|v| {
                    let comps = v.comps()[..s].to_vec();
                    VectorElement::new(comps)
                })
                .filter(|v| !v.is_zero())
                .collect();
            let source = GradedFreeModule::new(
                rel_cols
                    .iter()
                    .map(|c| c.degree(target.twists()).expect("homogeneous relation"))
                    .collect(),
            );
            let _ = ctx;
            Arc::new(PresentedModule::new(
                self.ring.clone(),
                GradedMap::new(source, target, rel_cols),
            ))
        }))
    }
}

/// `Hom(F, N)` for a free module `F`: ambient free cover and relation
/// columns. Basis layout is slot-major: `(j, b) -> j * rank(N0) + b` for
/// `j` over the basis of `F` and `b` over the generators of `N`.
pub fn hom_free_into(
    ring: &Ring,
    f: &GradedFreeModule,
    n: &PresentedModule,
) -> (GradedFreeModule, Vec<VectorElement>) {
    let ctx = ring.ctx();
    let n0 = n.presentation().target();
    let rank = f.rank() * n0.rank();
    let mut twists = Vec::with_capacity(rank);
    for &tj in f.twists() {
        for &tb in n0.twists() {
            twists.push(tb - tj);
        }
    }
    let ambient = GradedFreeModule::new(twists);
    let mut rels = Vec::new();
    for j in 0..f.rank() {
        for q in n.presentation().cols() {
            let mut comps = vec![Polynomial::zero(ctx); rank.max(1)];
            for (b, e) in q.comps().iter().enumerate() {
                comps[j * n0.rank() + b] = e.clone();
            }
            rels.push(VectorElement::new(comps));
        }
    }
    (ambient, rels)
}

/// The map `Hom(F_down, N) -> Hom(F_up, N)` induced by `d: F_up -> F_down`,
/// as a graded map between the ambient free covers.
pub fn hom_induced(
    ring: &Ring,
    d: &GradedMap,
    n: &PresentedModule,
    ambient_down: &GradedFreeModule,
    ambient_up: &GradedFreeModule,
) -> GradedMap {
    let ctx = ring.ctx();
    let n0_rank = n.presentation().target().rank();
    let down_rank = d.target().rank();
    let up_rank = d.source().rank();
    debug_assert_eq!(ambient_down.rank(), down_rank * n0_rank);
    debug_assert_eq!(ambient_up.rank(), up_rank * n0_rank);
    let mut cols = Vec::with_capacity(ambient_down.rank());
    for r in 0..down_rank {
        for b in 0..n0_rank {
            let mut comps = vec![Polynomial::zero(ctx); ambient_up.rank().max(1)];
            for c in 0..up_rank {
                let e = d.entry(r, c);
                if !e.is_zero() {
                    comps[c * n0_rank + b] = e.clone();
                }
            }
            cols.push(VectorElement::new(comps));
        }
    }
    GradedMap::new(ambient_down.clone(), ambient_up.clone(), cols)
}

/// Cycle generators of `ker(g) (mod target relations)`: elements `y` of the
/// source ambient with `g(y)` inside the span of `target_rels`.
fn kernel_generators(
    ring: &Ring,
    g: &GradedMap,
    target_rels: &[VectorElement],
) -> Vec<VectorElement> {
    let ctx = ring.ctx();
    let src_rank = g.source().rank();
    if src_rank == 0 {
        return Vec::new();
    }
    if g.target().rank() == 0 {
        return (0..src_rank).map(|i| VectorElement::unit(ctx, src_rank, i)).collect();
    }
    let mut cols = g.cols().to_vec();
    cols.extend(target_rels.iter().cloned());
    let span = ColumnSpan::new(ring, g.target().twists().to_vec(), cols);
    // a syzygy coordinate block on g's columns is an element of the source
    let kept: Vec<usize> =
        (0..span.gens().len()).filter(|&i| !span.gens()[i].is_zero()).collect();
    let _ = kept;
    span.syzygies()
        .into_iter()
        .map(|s| VectorElement::new(s.comps()[..src_rank].to_vec()))
        .filter(|v| !v.is_zero())
        .collect()
}

/// `Ext^i(M, N)` as a graded subquotient of `Hom(F_i, N)`, computed from a
/// minimal resolution of `M`.
pub fn ext(i: usize, m: &PresentedModule, n: &PresentedModule) -> Subquotient {
    if n.generators().rank() == 0 {
        return Subquotient::zero(m.ring());
    }
    let res = m.resolution(i + 2);
    ext_with_resolution(&res, i, n)
}

/// `Ext^i` from an explicit resolution (shared by the direct-limit oracle,
/// which reuses one resolution per level across indices).
pub fn ext_with_resolution(
    res: &crate::homalg::Resolution,
    i: usize,
    n: &PresentedModule,
) -> Subquotient {
    let ring = res.ring().clone();
    if n.generators().rank() == 0 {
        return Subquotient::zero(&ring);
    }
    let f_i = res.module_at(i);
    if f_i.rank() == 0 {
        return Subquotient::zero(&ring);
    }
    let (a_i, rel_i) = hom_free_into(&ring, &f_i, n);
    let f_ip1 = res.module_at(i + 1);
    let gens = if f_ip1.rank() == 0 {
        (0..a_i.rank())
            .map(|b| VectorElement::unit(ring.ctx(), a_i.rank(), b))
            .collect()
    } else {
        let (a_ip1, rel_ip1) = hom_free_into(&ring, &f_ip1, n);
        let g = hom_induced(&ring, res.diff(i + 1).unwrap(), n, &a_i, &a_ip1);
        kernel_generators(&ring, &g, &rel_ip1)
    };
    let mut dens = rel_i;
    if i >= 1 {
        let f_im1 = res.module_at(i - 1);
        let (a_im1, _) = hom_free_into(&ring, &f_im1, n);
        let f = hom_induced(&ring, res.diff(i).unwrap(), n, &a_im1, &a_i);
        dens.extend(f.cols().iter().cloned());
    }
    Subquotient::new(&ring, a_i, gens, dens)
}

/// `Hom(N, M)` as a presented module: the kernel of
/// `Hom(N_0, M) -> Hom(N_1, M)` induced by the presentation of `N`.
pub fn hom_module(n: &PresentedModule, m: &PresentedModule) -> Arc<PresentedModule> {
    let ring = m.ring().clone();
    if n.generators().rank() == 0 || m.generators().rank() == 0 {
        return Arc::new(PresentedModule::zero(&ring));
    }
    let n0 = n.presentation().target().clone();
    let n1 = n.presentation().source().clone();
    let (a0, rel0) = hom_free_into(&ring, &n0, m);
    let gens = if n1.rank() == 0 {
        (0..a0.rank())
            .map(|b| VectorElement::unit(ring.ctx(), a0.rank(), b))
            .collect()
    } else {
        let (a1, rel1) = hom_free_into(&ring, &n1, m);
        let g = hom_induced(&ring, n.presentation(), m, &a0, &a1);
        kernel_generators(&ring, &g, &rel1)
    };
    Subquotient::new(&ring, a0, gens, rel0).module()
}

/// `M (x) N` with the block presentation
/// `A1 (x) B0  (+)  A0 (x) B1  ->  A0 (x) B0`.
pub fn tensor(m: &PresentedModule, n: &PresentedModule) -> PresentedModule {
    let ring = m.ring().clone();
    let ctx = ring.ctx();
    let a0 = m.presentation().target();
    let b0 = n.presentation().target();
    let rank = a0.rank() * b0.rank();
    let mut twists = Vec::with_capacity(rank);
    for &s in a0.twists() {
        for &t in b0.twists() {
            twists.push(s + t);
        }
    }
    let target = GradedFreeModule::new(twists);
    let mut cols = Vec::new();
    let mut src_twists = Vec::new();
    // P (x) id_B0
    for c in m.presentation().cols() {
        let cdeg = c.degree(a0.twists());
        for (b, &tb) in b0.twists().iter().enumerate() {
            let mut comps = vec![Polynomial::zero(ctx); rank.max(1)];
            for (i, e) in c.comps().iter().enumerate() {
                comps[i * b0.rank() + b] = e.clone();
            }
            cols.push(VectorElement::new(comps));
            src_twists.push(cdeg.expect("homogeneous relation") + tb);
        }
    }
    // id_A0 (x) Q
    for (i, &ta) in a0.twists().iter().enumerate() {
        for q in n.presentation().cols() {
            let qdeg = q.degree(b0.twists());
            let mut comps = vec![Polynomial::zero(ctx); rank.max(1)];
            for (b, e) in q.comps().iter().enumerate() {
                comps[i * b0.rank() + b] = e.clone();
            }
            cols.push(VectorElement::new(comps));
            src_twists.push(qdeg.expect("homogeneous relation") + ta);
        }
    }
    PresentedModule::new(
        ring,
        GradedMap::new(GradedFreeModule::new(src_twists), target, cols),
    )
}

/// `M / aM`: augment the presentation by `g * e_i` columns.
pub fn quotient_by_ideal(m: &PresentedModule, a: &IdealBasis) -> PresentedModule {
    let ring = m.ring().clone();
    let ctx = ring.ctx();
    let f0 = m.presentation().target().clone();
    let mut cols = m.presentation().cols().to_vec();
    let mut src_twists = m.presentation().source().twists().to_vec();
    for g in a.gens() {
        let gdeg = g.homogeneous_degree().expect("homogeneous ideal generator");
        for (i, &t) in f0.twists().iter().enumerate() {
            let mut comps = vec![Polynomial::zero(ctx); f0.rank().max(1)];
            comps[i] = g.clone();
            cols.push(VectorElement::new(comps));
            src_twists.push(gdeg + t);
        }
    }
    PresentedModule::new(
        ring,
        GradedMap::new(GradedFreeModule::new(src_twists), f0, cols),
    )
}

/// `Ann M`: intersection over generators of the colon ideals
/// `(relations : e_i)`.
pub fn annihilator_of(m: &PresentedModule) -> IdealBasis {
    let ring = m.ring();
    let ctx = ring.ctx();
    let rank = m.presentation().target().rank();
    if rank == 0 {
        return IdealBasis::new(vec![Polynomial::one(ctx)]);
    }
    let twists = m.presentation().target().twists().to_vec();
    let mut acc: Option<IdealBasis> = None;
    for i in 0..rank {
        let mut cols = vec![VectorElement::unit(ctx, rank, i)];
        cols.extend(m.presentation().cols().iter().cloned());
        let span = ColumnSpan::new(ring, twists.clone(), cols);
        let colon_gens: Vec<Polynomial> = span
            .syzygies()
            .into_iter()
            .map(|s| s.comps()[0].clone())
            .filter(|c| !c.is_zero())
            .collect();
        let colon = IdealBasis::new(colon_gens);
        acc = Some(match acc {
            None => colon,
            Some(prev) => {
                if prev.is_zero_ideal() || colon.is_zero_ideal() {
                    IdealBasis::new(Vec::new())
                } else {
                    crate::groebner::ideal_intersection(ring, &prev, &colon)
                        .expect("intersection of nonzero ideals")
                }
            }
        });
    }
    let acc = acc.unwrap();
    if acc.is_zero_ideal() || acc.is_groebner() {
        acc
    } else {
        crate::groebner::buchberger_ideal(ring, &acc).unwrap_or(acc)
    }
}
