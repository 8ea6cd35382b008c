use super::*;
use crate::field::FieldSpec;
use crate::homalg::LiftVariant;
use crate::monomial::MonomialOrder;
use crate::poly::{parse_polynomial, Polynomial, RingCtx};
use crate::vanishing::oracle::OracleVerdict;
use std::sync::Arc;

fn ctx(vars: &[&str], field: FieldSpec) -> Arc<RingCtx> {
    RingCtx::new(
        vars.iter().map(|s| s.to_string()).collect(),
        field,
        MonomialOrder::GrevLex,
    )
}

fn p(c: &Arc<RingCtx>, s: &str) -> Polynomial {
    parse_polynomial(c, s).unwrap()
}

fn ideal(c: &Arc<RingCtx>, gens: &[&str]) -> IdealBasis {
    IdealBasis::new(gens.iter().map(|s| p(c, s)).collect())
}

fn cyclic(ring: &Ring, gens: &[&str]) -> PresentedModule {
    PresentedModule::cyclic(ring, &ideal(ring.ctx(), gens))
}

/// The running nonvanishing example: R = k[x,y], a = m, M = N = R/(x); the
/// attached-prime set is {(x)} and the top module does not vanish.
fn hyperplane_instance(field: FieldSpec) -> Instance {
    let c = ctx(&["x", "y"], field);
    let ring = Ring::polynomial(&c);
    let a = ideal(&c, &["x", "y"]);
    let m = cyclic(&ring, &["x"]);
    let n = cyclic(&ring, &["x"]);
    Instance::new(ring, a, m, n).unwrap()
}

#[test]
fn predictor_nonvanishing_example() {
    for field in [FieldSpec::prime_field(101).unwrap(), FieldSpec::rationals()] {
        let inst = hyperplane_instance(field);
        assert_eq!(inst.d(), 2);
        let verdict = predict_top_vanishing(&inst);
        assert_eq!(verdict.value, Verdict::Nonvanishes);
        assert!(verdict.complete);
        assert_eq!(verdict.witnesses.len(), 1);
        assert_eq!(verdict.witnesses[0].key(), vec!["x".to_string()]);
    }
}

#[test]
fn predictor_vanishing_variant() {
    // same modules, a = (x): dim R/((x) + (x)) = 1 > 0, so it vanishes
    let c = ctx(&["x", "y"], FieldSpec::rationals());
    let ring = Ring::polynomial(&c);
    let inst = Instance::new(
        ring.clone(),
        ideal(&c, &["x"]),
        cyclic(&ring, &["x"]),
        cyclic(&ring, &["x"]),
    )
    .unwrap();
    let verdict = predict_top_vanishing(&inst);
    assert_eq!(verdict.value, Verdict::Vanishes);
    assert!(verdict.witnesses.is_empty());
}

#[test]
fn predictor_zero_n_vanishes() {
    let c = ctx(&["x", "y"], FieldSpec::rationals());
    let ring = Ring::polynomial(&c);
    let inst = Instance::new(
        ring.clone(),
        ideal(&c, &["x", "y"]),
        cyclic(&ring, &["x"]),
        PresentedModule::zero(&ring),
    )
    .unwrap();
    assert_eq!(predict_top_vanishing(&inst).value, Verdict::Vanishes);
}

#[test]
fn attached_primes_examples() {
    // {(x)} for the hyperplane example
    let inst = hyperplane_instance(FieldSpec::rationals());
    let att = top_attached_primes(&inst).unwrap();
    assert!(att.complete);
    assert_eq!(att.at_maximal.len(), 1);
    assert_eq!(att.at_maximal[0].key(), vec!["x".to_string()]);
    assert_eq!(att.filtered.len(), 1);

    // M = N = R, a = m: Att = {(0)}
    let c = ctx(&["x", "y"], FieldSpec::rationals());
    let ring = Ring::polynomial(&c);
    let r = PresentedModule::ring_module(&ring);
    let inst = Instance::new(ring.clone(), ideal(&c, &["x", "y"]), r.clone(), r).unwrap();
    let att = top_attached_primes(&inst).unwrap();
    assert!(att.complete);
    assert_eq!(att.at_maximal.len(), 1);
    assert!(att.at_maximal[0].basis().is_zero_ideal());
    // and the predictor confirms nonvanishing (H^d_m(R, R) != 0)
    assert_eq!(predict_top_vanishing(&inst).value, Verdict::Nonvanishes);

    // M = k, N = R/(x), a = m: Ass k = {m} and m supports N
    let inst = Instance::new(
        ring.clone(),
        ideal(&c, &["x", "y"]),
        cyclic(&ring, &["x", "y"]),
        cyclic(&ring, &["x"]),
    )
    .unwrap();
    let att = top_attached_primes(&inst).unwrap();
    assert_eq!(att.at_maximal.len(), 1);
    let mut key = att.at_maximal[0].key();
    key.sort();
    assert_eq!(key, vec!["x".to_string(), "y".to_string()]);
}

#[test]
fn bounds_examples() {
    let c = ctx(&["x", "y"], FieldSpec::rationals());
    let ring = Ring::polynomial(&c);
    // M = R, N = R, a = m: grade = 2 (Koszul: Ext^i(k, R) first nonzero at 2)
    let r = PresentedModule::ring_module(&ring);
    let inst =
        Instance::new(ring.clone(), ideal(&c, &["x", "y"]), r.clone(), r.clone()).unwrap();
    let b = bounds(&inst).unwrap();
    assert_eq!(b.grade, Some(2));
    assert_eq!(b.pd_m, 0);
    assert_eq!(b.depth_n, 2);
    assert_eq!(b.ara_upper, 2);
    assert_eq!(b.cap_d, 2);

    // M = R/(x), N = R, a = m: pd M = 1, dim(M (x) N) = 1, bound = 2
    let inst = Instance::new(
        ring.clone(),
        ideal(&c, &["x", "y"]),
        cyclic(&ring, &["x"]),
        PresentedModule::ring_module(&ring),
    )
    .unwrap();
    let b = bounds(&inst).unwrap();
    assert_eq!(b.pd_m, 1);
    assert_eq!(b.dim_tensor, 1);
    assert_eq!(b.pd_m as i64 + b.dim_tensor, 2);

    // the nonvanishing example has max(pd M, dim N) = 1 = d - 1
    let inst = hyperplane_instance(FieldSpec::rationals());
    let b = bounds(&inst).unwrap();
    assert_eq!(b.pd_m.max(inst.module_n().krull_dim() as usize), 1);
    // bounds invariant
    if let Some(g) = b.grade {
        assert!((g as i64) <= b.upper_vanishing_bound());
    }
    // zero modules rejected
    let c2 = ctx(&["x", "y"], FieldSpec::rationals());
    let ring2 = Ring::polynomial(&c2);
    let bad = Instance::new(
        ring2.clone(),
        ideal(&c2, &["x"]),
        PresentedModule::zero(&ring2),
        PresentedModule::ring_module(&ring2),
    )
    .unwrap();
    assert!(matches!(bounds(&bad), Err(Error::ZeroModule)));
}

#[test]
fn ara_upper_prunes_redundant_generators() {
    let c = ctx(&["x", "y"], FieldSpec::rationals());
    let ring = Ring::polynomial(&c);
    // x^2 is redundant in (x, x^2, y)
    let a = ideal(&c, &["x", "x^2", "y"]);
    assert_eq!(prune_redundant_generators(&ring, &a).len(), 2);
}

#[test]
fn oracle_nonzero_on_the_example() {
    let inst = hyperplane_instance(FieldSpec::prime_field(101).unwrap());
    let system = DirectSystem::new(&inst, 4, LiftVariant::Standard).unwrap();
    let trace = system.trace(2, 2).unwrap();
    assert_eq!(trace.verdict, OracleVerdict::Nonzero);
}

#[test]
fn oracle_zero_on_the_principal_variant() {
    let c = ctx(&["x", "y"], FieldSpec::rationals());
    let ring = Ring::polynomial(&c);
    let inst = Instance::new(
        ring.clone(),
        ideal(&c, &["x"]),
        cyclic(&ring, &["x"]),
        cyclic(&ring, &["x"]),
    )
    .unwrap();
    let system = DirectSystem::new(&inst, 4, LiftVariant::Standard).unwrap();
    let trace = system.trace(2, 2).unwrap();
    assert_eq!(trace.verdict, OracleVerdict::Zero);
}

#[test]
fn oracle_zero_above_ring_dimension() {
    let inst = hyperplane_instance(FieldSpec::prime_field(101).unwrap());
    let system = DirectSystem::new(&inst, 4, LiftVariant::Standard).unwrap();
    let trace = system.trace(3, 2).unwrap();
    assert_eq!(trace.verdict, OracleVerdict::Zero);
}

#[test]
fn oracle_parameter_validation() {
    let inst = hyperplane_instance(FieldSpec::prime_field(101).unwrap());
    let system = DirectSystem::new(&inst, 3, LiftVariant::Standard).unwrap();
    assert!(matches!(
        system.trace(2, 3),
        Err(Error::BadOracleParams { .. })
    ));
}

#[test]
fn stable_image_dims_are_monotone() {
    // nonincreasing in the target level for a fixed source level, and
    // nondecreasing in the source level for a fixed target
    let inst = hyperplane_instance(FieldSpec::prime_field(101).unwrap());
    let system = DirectSystem::new(&inst, 4, LiftVariant::Standard).unwrap();
    let trace = system.trace(2, 2).unwrap();
    let degrees = trace.degrees.clone();
    for n in 1..=3usize {
        let mut prev: Option<Vec<u64>> = None;
        for m in n..=4usize {
            let dims = system.image_dims_between(n, m, 2, &degrees);
            if let Some(pv) = prev {
                for (a, b) in pv.iter().zip(&dims) {
                    assert!(b <= a, "image dims must not grow along transitions");
                }
            }
            prev = Some(dims);
        }
    }
    for m in [4usize] {
        let mut prev: Option<Vec<u64>> = None;
        for n in 1..=m {
            let dims = system.image_dims_between(n, m, 2, &degrees);
            if let Some(pv) = prev {
                for (a, b) in pv.iter().zip(&dims) {
                    assert!(b >= a, "later levels reach at least as much");
                }
            }
            prev = Some(dims);
        }
    }
}

#[test]
fn independent_lifts_give_equal_image_dims() {
    let inst = hyperplane_instance(FieldSpec::prime_field(101).unwrap());
    let sys_a = DirectSystem::new(&inst, 4, LiftVariant::Standard).unwrap();
    let sys_b = DirectSystem::new(&inst, 4, LiftVariant::Reversed).unwrap();
    let ta = sys_a.trace(2, 2).unwrap();
    let tb = sys_b.trace(2, 2).unwrap();
    assert_eq!(ta.degrees, tb.degrees);
    assert_eq!(ta.stable_images, tb.stable_images);
    assert_eq!(ta.verdict, tb.verdict);
}

#[test]
fn graded_dual_calibration_on_the_ring() {
    // H^2_m(R, R) over k[x,y]: stabilized dims at degree j equal
    // dim_k R_(-j-2): 1, 2, 3, ... at j = -2, -3, -4, ...
    let c = ctx(&["x", "y"], FieldSpec::prime_field(101).unwrap());
    let ring = Ring::polynomial(&c);
    let r = PresentedModule::ring_module(&ring);
    let inst =
        Instance::new(ring.clone(), ideal(&c, &["x", "y"]), r.clone(), r.clone()).unwrap();
    let system = DirectSystem::new(&inst, 6, LiftVariant::Standard).unwrap();
    let trace = system.trace(2, 2).unwrap();
    assert_eq!(trace.verdict, OracleVerdict::Nonzero);
    let stable = trace.stable_table();
    let mut checked = 0;
    for (j, dim) in stable {
        if dim > 0 || j >= -2 {
            let expect = if j <= -2 { (-j - 1) as u64 } else { 0 };
            assert_eq!(dim, expect, "degree {j}");
            if j <= -2 && j >= -5 {
                checked += 1;
            }
        }
    }
    assert!(checked >= 4, "degrees -2..-5 must stabilize at nmax = 6");
}

#[test]
fn cross_validation_agreement() {
    let inst = hyperplane_instance(FieldSpec::prime_field(101).unwrap());
    let report = cross_validate(&inst, 4, 2).unwrap();
    assert_eq!(report.agreement, Agreement::Agree);
    assert_eq!(report.predictor.value, Verdict::Nonvanishes);
    assert_eq!(report.oracle.verdict, OracleVerdict::Nonzero);
    assert!(!report.is_hard_failure());

    let c = ctx(&["x", "y"], FieldSpec::prime_field(101).unwrap());
    let ring = Ring::polynomial(&c);
    let inst = Instance::new(
        ring.clone(),
        ideal(&c, &["x"]),
        cyclic(&ring, &["x"]),
        cyclic(&ring, &["x"]),
    )
    .unwrap();
    let report = cross_validate(&inst, 4, 2).unwrap();
    assert_eq!(report.agreement, Agreement::Agree);
    assert_eq!(report.predictor.value, Verdict::Vanishes);
    assert_eq!(report.oracle.verdict, OracleVerdict::Zero);
}

#[test]
fn hypersurface_instance_requires_finite_pd() {
    // over k[x,y]/(x^2 + y^2), the residue field has infinite pd
    let c = ctx(&["x", "y"], FieldSpec::rationals());
    let ring = Ring::hypersurface(&c, p(&c, "x^2 + y^2")).unwrap();
    let k = cyclic(&ring, &["x", "y"]);
    let err = Instance::new(
        ring.clone(),
        ideal(&c, &["x"]),
        k,
        PresentedModule::ring_module(&ring),
    );
    assert!(matches!(err, Err(Error::InfiniteProjectiveDimension(_))));
    // the free module is fine, d = 1
    let inst = Instance::new(
        ring.clone(),
        ideal(&c, &["x"]),
        PresentedModule::ring_module(&ring),
        PresentedModule::ring_module(&ring),
    )
    .unwrap();
    assert_eq!(inst.d(), 1);
}

#[test]
fn hypersurface_cross_validation() {
    // Q = k[x,y]/(x^2 - 2y^2) (irreducible over F_101 since 2 is a
    // non-residue), M = Q/(x), N = Q, a = (x): witnesses at the maximal ideal
    let c = ctx(&["x", "y"], FieldSpec::prime_field(101).unwrap());
    let ring = Ring::hypersurface(&c, p(&c, "x^2 - 2*y^2")).unwrap();
    let m = cyclic(&ring, &["x"]);
    assert_eq!(m.pd(), crate::homalg::Pd::Finite(1));
    let inst = Instance::new(
        ring.clone(),
        ideal(&c, &["x"]),
        m,
        PresentedModule::ring_module(&ring),
    )
    .unwrap();
    assert_eq!(inst.d(), 1);
    let report = cross_validate(&inst, 4, 2).unwrap();
    assert_eq!(report.predictor.value, Verdict::Nonvanishes);
    assert_eq!(report.oracle.verdict, OracleVerdict::Nonzero);
    assert_eq!(report.agreement, Agreement::Agree);
}
