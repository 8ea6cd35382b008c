//! Graded free resolutions: Schreyer-style construction step by step, then
//! minimalization by unit-entry Gaussian pruning. Over the polynomial ring
//! the resolution terminates within `nvars` steps; over a hypersurface
//! quotient it is truncated at the requested length with a continuation flag.

use super::{Complex, GradedFreeModule, GradedMap};
use crate::groebner::{module_gb, schreyer_syzygies, ColumnSpan, Ring, VectorElement};
use crate::poly::Polynomial;
use std::sync::{Arc, OnceLock};

/// Projective dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pd {
    Finite(usize),
    Infinite,
}

impl Pd {
    pub fn finite(&self) -> Option<usize> {
        match self {
            Pd::Finite(n) => Some(*n),
            Pd::Infinite => None,
        }
    }
}

impl std::fmt::Display for Pd {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Pd::Finite(n) => write!(f, "{n}"),
            Pd::Infinite => write!(f, "infinity"),
        }
    }
}

/// A minimal graded free resolution of a presented module, together with the
/// change-of-basis bookkeeping between the original presentation generators
/// and the pruned minimal generators (needed to lift module maps).
pub struct Resolution {
    ring: Ring,
    orig_f0: GradedFreeModule,
    f0: GradedFreeModule,
    diffs: Vec<GradedMap>,
    /// classes of original generators in terms of minimal ones
    to_min: GradedMap,
    /// minimal generators included among the original ones
    from_min: GradedMap,
    complete: bool,
    truncation: usize,
    spans: Vec<OnceLock<Arc<ColumnSpan>>>,
}

impl Resolution {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Number of nonzero differentials: the index of the last nonzero module.
    pub fn length(&self) -> usize {
        self.diffs.len()
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn f0(&self) -> &GradedFreeModule {
        &self.f0
    }

    pub fn orig_f0(&self) -> &GradedFreeModule {
        &self.orig_f0
    }

    pub fn to_min(&self) -> &GradedMap {
        &self.to_min
    }

    pub fn from_min(&self) -> &GradedMap {
        &self.from_min
    }

    /// Free module at homological index `k` (empty twists beyond the end).
    pub fn module_at(&self, k: usize) -> GradedFreeModule {
        if k == 0 {
            self.f0.clone()
        } else if k <= self.diffs.len() {
            self.diffs[k - 1].source().clone()
        } else {
            GradedFreeModule::zero()
        }
    }

    /// Differential `d_k: F_k -> F_{k-1}` for `1 <= k <= length`.
    pub fn diff(&self, k: usize) -> Option<&GradedMap> {
        if k == 0 {
            None
        } else {
            self.diffs.get(k - 1)
        }
    }

    pub fn as_complex(&self) -> Complex {
        Complex::new(self.diffs.clone())
    }

    /// Cached column span of `d_k` (for membership and lifting).
    pub fn span(&self, k: usize) -> Arc<ColumnSpan> {
        assert!(k >= 1 && k <= self.diffs.len());
        Arc::clone(self.spans[k - 1].get_or_init(|| {
            let d = &self.diffs[k - 1];
            Arc::new(ColumnSpan::new(
                &self.ring,
                d.target().twists().to_vec(),
                d.cols().to_vec(),
            ))
        }))
    }

    /// No differential entry is a nonzero constant.
    pub fn is_minimal(&self) -> bool {
        self.diffs.iter().all(|d| {
            d.cols().iter().all(|c| c.comps().iter().all(|e| !e.is_unit_constant()))
        })
    }
}

/// Build the minimal resolution of `coker(pres)` truncated at `max_len`.
pub fn resolve(ring: &Ring, pres: &GradedMap, max_len: usize) -> Resolution {
    let orig_f0 = pres.target().clone();
    // raw Schreyer-style resolution
    let mut raw: Vec<GradedMap> = Vec::new();
    let mut cur_target = orig_f0.clone();
    let mut cols: Vec<VectorElement> = pres
        .cols()
        .iter()
        .filter(|c| !ring.is_zero_vector(c))
        .cloned()
        .collect();
    let mut complete = false;
    for _ in 1..=max_len {
        if cur_target.rank() == 0 || cols.is_empty() {
            complete = true;
            break;
        }
        let gb = module_gb(ring, cur_target.twists(), &cols);
        let diff_cols: Vec<VectorElement> =
            gb.iter().filter(|g| !ring.is_zero_vector(g)).cloned().collect();
        if diff_cols.is_empty() {
            complete = true;
            break;
        }
        let source = GradedFreeModule::new(
            diff_cols
                .iter()
                .map(|c| c.degree(cur_target.twists()).expect("homogeneous column"))
                .collect(),
        );
        let next_cols = if ring.is_quotient() {
            ColumnSpan::new(ring, cur_target.twists().to_vec(), diff_cols.clone()).syzygies()
        } else {
            // over the polynomial ring the GB carries no fold, so the
            // differential columns are the GB itself and Schreyer applies
            schreyer_syzygies(cur_target.twists(), &diff_cols).1
        };
        raw.push(GradedMap::new(source.clone(), cur_target, diff_cols));
        cur_target = source;
        cols = next_cols;
    }

    let (f0, diffs, to_min, from_min, pruned_tail) = minimalize(ring, orig_f0.clone(), raw);
    let complete = complete || pruned_tail;
    let spans = (0..diffs.len()).map(|_| OnceLock::new()).collect();
    let res = Resolution {
        ring: ring.clone(),
        orig_f0,
        f0,
        diffs,
        to_min,
        from_min,
        complete,
        truncation: max_len,
        spans,
    };
    debug_assert!(res.is_minimal());
    debug_assert!(res.as_complex().check_composites(ring));
    res
}

/// Unit-entry Gaussian pruning of the whole raw complex, with F0 bookkeeping.
/// Returns the pruned data and whether a trailing zero module appeared.
fn minimalize(
    ring: &Ring,
    orig_f0: GradedFreeModule,
    mut diffs: Vec<GradedMap>,
) -> (GradedFreeModule, Vec<GradedMap>, GradedMap, GradedMap, bool) {
    let ctx = ring.ctx();
    let mut f0 = orig_f0.clone();
    let mut to_min = GradedMap::identity(&orig_f0, ring);
    let mut from_min = GradedMap::identity(&orig_f0, ring);

    'prune: loop {
        for k in 0..diffs.len() {
            // find a unit (nonzero constant) entry
            let mut hit = None;
            'scan: for (j, col) in diffs[k].cols().iter().enumerate() {
                for (i, e) in col.comps().iter().enumerate() {
                    if e.is_unit_constant() {
                        hit = Some((i, j));
                        break 'scan;
                    }
                }
            }
            let (r, c) = match hit {
                Some(h) => h,
                None => continue,
            };
            let u = diffs[k].entry(r, c).clone();
            let a_col = diffs[k].cols()[c].clone();
            let row_r: Vec<Polynomial> =
                diffs[k].cols().iter().map(|col| col.comp(r).clone()).collect();

            // columns of d_k: col_j -= (m_rj / u) * col_c, then delete row r, col c
            let mut new_cols = Vec::with_capacity(diffs[k].cols().len() - 1);
            for (j, col) in diffs[k].cols().iter().enumerate() {
                if j == c {
                    continue;
                }
                let factor = row_r[j].exact_div(&u).expect("constant divides");
                let adjusted = col.sub(&a_col.mul_poly(&factor));
                let comps: Vec<Polynomial> = adjusted
                    .comps()
                    .iter()
                    .enumerate()
                    .filter_map(|(i, e)| (i != r).then(|| e.clone()))
                    .collect();
                new_cols.push(if comps.is_empty() {
                    VectorElement::from_poly(Polynomial::zero(ctx))
                } else {
                    VectorElement::new(comps)
                });
            }
            let new_source = GradedFreeModule::new(
                diffs[k]
                    .source()
                    .twists()
                    .iter()
                    .enumerate()
                    .filter_map(|(j, &t)| (j != c).then_some(t))
                    .collect(),
            );
            let new_target = GradedFreeModule::new(
                diffs[k]
                    .target()
                    .twists()
                    .iter()
                    .enumerate()
                    .filter_map(|(i, &t)| (i != r).then_some(t))
                    .collect(),
            );

            // d_{k+1}: row c absorbs (m_rj / u) * row j, then delete row c
            if k + 1 < diffs.len() {
                let next = &diffs[k + 1];
                let mut next_cols = Vec::with_capacity(next.cols().len());
                for col in next.cols() {
                    let mut comps = col.comps().to_vec();
                    let mut extra = Polynomial::zero(ctx);
                    for (j, mrj) in row_r.iter().enumerate() {
                        if j == c || mrj.is_zero() {
                            continue;
                        }
                        let factor = mrj.exact_div(&u).expect("constant divides");
                        extra = extra.add(&factor.mul(&comps[j]));
                    }
                    comps[c] = comps[c].add(&extra);
                    debug_assert!(
                        ring.is_zero_vector(&VectorElement::from_poly(comps[c].clone())),
                        "cancelled row of the next differential must vanish"
                    );
                    let comps: Vec<Polynomial> = comps
                        .into_iter()
                        .enumerate()
                        .filter_map(|(j, e)| (j != c).then_some(e))
                        .collect();
                    next_cols.push(if comps.is_empty() {
                        VectorElement::from_poly(Polynomial::zero(ctx))
                    } else {
                        VectorElement::new(comps)
                    });
                }
                diffs[k + 1] =
                    GradedMap::new(next.source().clone(), new_source.clone(), next_cols);
            }

            // previous map: its source is F_k; col r absorbs (a_{r'}/u) * col_{r'}
            if k > 0 {
                let prev = &diffs[k - 1];
                let mut prev_cols = prev.cols().to_vec();
                let mut extra = VectorElement::zero(ctx, prev.target().rank().max(1));
                for (rp, ar) in a_col.comps().iter().enumerate() {
                    if rp == r || ar.is_zero() {
                        continue;
                    }
                    let factor = ar.exact_div(&u).expect("constant divides");
                    extra = extra.add(&prev_cols[rp].mul_poly(&factor));
                }
                let merged = prev_cols[r].add(&extra);
                debug_assert!(
                    ring.is_zero_vector(&merged),
                    "cancelled column of the previous differential must vanish"
                );
                let _ = merged;
                prev_cols.remove(r);
                diffs[k - 1] =
                    GradedMap::new(new_target.clone(), prev.target().clone(), prev_cols);
            } else {
                // pruning d_1 changes F0: maintain the generator bookkeeping
                let rank = f0.rank();
                // substitution: e_r |-> -sum_{r'!=r} (a_{r'}/u) e_{r'}
                let mut subst_cols = Vec::with_capacity(rank);
                for i in 0..rank {
                    if i == r {
                        let comps: Vec<Polynomial> = a_col
                            .comps()
                            .iter()
                            .enumerate()
                            .filter_map(|(rp, ar)| {
                                (rp != r).then(|| ar.exact_div(&u).expect("constant divides").neg())
                            })
                            .collect();
                        subst_cols.push(vec_or_zero(ctx, comps));
                    } else {
                        let pos = if i < r { i } else { i - 1 };
                        subst_cols.push(VectorElement::unit(ctx, (rank - 1).max(1), pos));
                    }
                }
                let subst = GradedMap::new(f0.clone(), new_target.clone(), subst_cols);
                to_min = subst.compose(&to_min, ring);
                // drop column r of from_min
                let fm_cols: Vec<VectorElement> = from_min
                    .cols()
                    .iter()
                    .enumerate()
                    .filter_map(|(i, col)| (i != r).then(|| col.clone()))
                    .collect();
                from_min = GradedMap::new(new_target.clone(), orig_f0.clone(), fm_cols);
                f0 = new_target.clone();
            }

            diffs[k] = GradedMap::new(new_source, new_target, new_cols);
            continue 'prune;
        }
        break;
    }

    // drop zero columns of the last differential (spurious truncation
    // generators), then trailing rank-0 or empty maps
    let mut pruned_tail = false;
    while let Some(last) = diffs.last() {
        let keep: Vec<usize> = (0..last.cols().len())
            .filter(|&j| !ring.is_zero_vector(&last.cols()[j]))
            .collect();
        if keep.len() != last.cols().len() {
            let cols: Vec<VectorElement> = keep.iter().map(|&j| last.cols()[j].clone()).collect();
            let twists: Vec<i64> = keep.iter().map(|&j| last.source().twists()[j]).collect();
            let target = last.target().clone();
            *diffs.last_mut().unwrap() = GradedMap::new(GradedFreeModule::new(twists), target, cols);
        }
        if diffs.last().unwrap().source().rank() == 0 {
            diffs.pop();
            pruned_tail = true;
        } else {
            break;
        }
    }
    (f0, diffs, to_min, from_min, pruned_tail)
}

fn vec_or_zero(ctx: &std::sync::Arc<crate::poly::RingCtx>, comps: Vec<Polynomial>) -> VectorElement {
    if comps.is_empty() {
        VectorElement::from_poly(Polynomial::zero(ctx))
    } else {
        VectorElement::new(comps)
    }
}

/// Which representative the lifting solver picks; induced maps on Ext agree
/// for any valid choice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum LiftVariant {
    #[default]
    Standard,
    /// Express against the differential columns in reversed order.
    Reversed,
}

/// Lift a module map `coker(src) -> coker(tgt)`, given on the original
/// presentation generators by `phi0`, to a chain map between the minimal
/// resolutions, up to homological index `len`.
///
/// Returns maps `psi_k: F_k(src) -> F_k(tgt)` for `k = 0..=len` with
/// `d_k(tgt) . psi_k = psi_{k-1} . d_k(src)` exactly (modulo the fold over a
/// quotient ring).
pub fn lift_chain_map(
    src: &Resolution,
    tgt: &Resolution,
    phi0: &GradedMap,
    len: usize,
    variant: LiftVariant,
) -> Vec<GradedMap> {
    let ring = src.ring();
    assert_eq!(phi0.source(), src.orig_f0());
    assert_eq!(phi0.target(), tgt.orig_f0());
    let psi0 = tgt.to_min().compose(&phi0.compose(src.from_min(), ring), ring);
    let mut out = vec![psi0];
    for k in 1..=len {
        let src_fk = src.module_at(k);
        let tgt_fk = tgt.module_at(k);
        if src_fk.rank() == 0 {
            out.push(GradedMap::zero_map(src_fk, tgt_fk, ring));
            continue;
        }
        let prev = &out[k - 1];
        let d_src = src.diff(k).expect("source resolution long enough");
        let mut cols = Vec::with_capacity(src_fk.rank());
        if tgt_fk.rank() == 0 {
            // target resolution ended: images must already vanish
            for col in d_src.cols() {
                let w = prev.apply(col, ring);
                debug_assert!(ring.is_zero_vector(&w), "lift hit a zero target module");
                let _ = w;
                cols.push(VectorElement::from_poly(Polynomial::zero(ring.ctx())));
            }
            out.push(GradedMap::new(src_fk, tgt_fk, cols));
            continue;
        }
        let span = tgt.span(k);
        let (express_span, reorder): (Arc<ColumnSpan>, bool) = match variant {
            LiftVariant::Standard => (span, false),
            LiftVariant::Reversed => {
                let d = tgt.diff(k).unwrap();
                let mut rev = d.cols().to_vec();
                rev.reverse();
                (
                    Arc::new(ColumnSpan::new(ring, d.target().twists().to_vec(), rev)),
                    true,
                )
            }
        };
        for col in d_src.cols() {
            let w = prev.apply(col, ring);
            let mut coeffs = express_span
                .express(&w)
                .expect("chain map lifting: image must lie in the differential span");
            if reorder {
                coeffs.reverse();
            }
            cols.push(vec_or_zero(ring.ctx(), coeffs));
        }
        out.push(GradedMap::new(src_fk, tgt_fk, cols));
    }
    out
}
