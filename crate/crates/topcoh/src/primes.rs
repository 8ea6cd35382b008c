//! Prime-ideal machinery on the monomial-accessible class: Krull dimension
//! via independent variable sets of the initial ideal, minimal primes by the
//! combinatorial algorithm for monomial ideals plus recursive splitting
//! through monomial/linear factors, associated primes by the
//! Eisenbud-Huneke-Vasconcelos method, and support membership.
//!
//! Outside the supported input class the computation reports itself
//! incomplete instead of guessing; every emitted prime carries a certificate.

use crate::error::Result;
use crate::exec;
use crate::field::Scalar;
use crate::groebner::{
    buchberger_ideal, ideal_contains, normal_form_poly, IdealBasis, Ring,
};
use crate::homalg::{ext, PresentedModule};
use crate::poly::{Polynomial, RingCtx};
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use std::sync::Arc;

/// How a prime ideal was certified prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Generated by a subset of the variables.
    MonomialPrime,
    /// A subset of the variables plus one irreducible polynomial in the
    /// remaining variables (linear, or a bounded-degree certified binary form).
    VariablesPlusIrreducible,
    /// Asserted by the caller.
    Declared,
}

/// A certified prime ideal with its reduced Groebner basis and height.
#[derive(Clone, Debug)]
pub struct PrimeIdeal {
    basis: IdealBasis,
    height: i64,
    certificate: Certificate,
}

impl PrimeIdeal {
    pub fn basis(&self) -> &IdealBasis {
        &self.basis
    }

    pub fn height(&self) -> i64 {
        self.height
    }

    pub fn certificate(&self) -> Certificate {
        self.certificate
    }

    /// Canonical key: printed reduced-GB generators, sorted.
    pub fn key(&self) -> Vec<String> {
        let mut k: Vec<String> = self.basis.gens().iter().map(|g| g.to_string()).collect();
        k.sort();
        k
    }

    pub fn declared(ring: &Ring, gens: IdealBasis) -> Result<PrimeIdeal> {
        let basis = if gens.is_zero_ideal() {
            let mut b = gens;
            if let Some(f) = ring.modulus() {
                b = IdealBasis::new(vec![f.clone()]);
                b = buchberger_ideal(ring, &b)?;
            }
            b
        } else {
            buchberger_ideal(ring, &gens)?
        };
        let height = ring.dim() as i64 - dim_of_ideal(ring, &basis);
        Ok(PrimeIdeal { basis, height, certificate: Certificate::Declared })
    }
}

impl PartialEq for PrimeIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for PrimeIdeal {}

/// Associated- or minimal-prime computation outcome; `complete` is true only
/// when every step stayed inside the supported input class.
#[derive(Clone, Debug)]
pub struct AssReport {
    pub primes: Vec<PrimeIdeal>,
    pub complete: bool,
}

impl AssReport {
    pub fn keys(&self) -> Vec<Vec<String>> {
        self.primes.iter().map(|p| p.key()).collect()
    }
}

// ---------------------------------------------------------------------------
// dimension

/// `dim R/I` via the initial ideal: the maximum size of a variable subset `S`
/// with `in(I) intersect k[S] = 0`; `-1` for the unit ideal. Over a
/// hypersurface quotient the fold is included automatically.
pub fn dim_of_ideal(ring: &Ring, i: &IdealBasis) -> i64 {
    let n = ring.nvars();
    let gb = lifted_gb(ring, i);
    if gb.is_unit() {
        return -1;
    }
    let supports: Vec<Vec<usize>> = gb
        .gens()
        .iter()
        .map(|g| g.leading_term().unwrap().mono.support())
        .collect();
    debug_assert!(n <= 20, "bitmask subset enumeration");
    let mut best: i64 = -1;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as i64;
        if size <= best {
            continue;
        }
        let independent = supports.iter().all(|supp| {
            // support not contained in S
            supp.iter().any(|&v| mask & (1 << v) == 0)
        });
        if independent {
            best = size;
        }
    }
    best
}

fn lifted_gb(ring: &Ring, i: &IdealBasis) -> IdealBasis {
    let mut gens = i.gens().to_vec();
    gens.extend(ring.modulus().cloned());
    if gens.is_empty() {
        return IdealBasis::new(Vec::new());
    }
    if i.is_groebner() && ring.modulus().is_none() {
        return i.clone();
    }
    buchberger_ideal(ring, &IdealBasis::new(gens)).expect("nonempty generator list")
}

// ---------------------------------------------------------------------------
// minimal primes

const SPLIT_DEPTH_CAP: usize = 32;

/// Minimal primes of an ideal. Exact on monomial ideals; general ideals are
/// split recursively through monomial and linear factors, with the
/// variables-plus-irreducible base case. Inputs outside that class yield
/// `complete = false` rather than a guess.
pub fn minimal_primes(ring: &Ring, i: &IdealBasis) -> AssReport {
    minimal_primes_rec(ring, i, 0)
}

fn minimal_primes_rec(ring: &Ring, i: &IdealBasis, depth: usize) -> AssReport {
    let gb = lifted_gb(ring, i);
    if gb.is_unit() {
        return AssReport { primes: Vec::new(), complete: true };
    }
    if gb.is_zero_ideal() {
        // the zero ideal of a polynomial-ring domain
        let p = monomial_prime(ring, &[]);
        return AssReport { primes: vec![p], complete: true };
    }
    if gb.gens().iter().all(|g| g.terms().len() == 1) {
        let primes = monomial_minimal_primes(ring, &gb);
        return AssReport { primes, complete: true };
    }
    if depth >= SPLIT_DEPTH_CAP {
        return AssReport { primes: Vec::new(), complete: false };
    }
    // try to split some generator into supported factors
    for g in gb.gens() {
        if g.terms().len() == 1 {
            continue;
        }
        if let Some(pieces) = split_supported(g) {
            if pieces.len() >= 2 {
                let mut all = Vec::new();
                let mut complete = true;
                for piece in pieces {
                    let mut gens = gb.gens().to_vec();
                    gens.push(piece);
                    let sub = minimal_primes_rec(ring, &IdealBasis::new(gens), depth + 1);
                    complete &= sub.complete;
                    all.extend(sub.primes);
                }
                return AssReport { primes: minimize(ring, all), complete };
            }
        }
    }
    // base case: a subset of the variables plus at most one certified
    // irreducible polynomial
    if let Some(p) = variables_plus_irreducible(ring, &gb) {
        return AssReport { primes: vec![p], complete: true };
    }
    AssReport { primes: Vec::new(), complete: false }
}

fn monomial_prime(ring: &Ring, vars: &[usize]) -> PrimeIdeal {
    let ctx = ring.ctx();
    let gens: Vec<Polynomial> = vars.iter().map(|&v| Polynomial::var(ctx, v)).collect();
    let basis = IdealBasis::new(gens);
    let basis = if basis.is_zero_ideal() {
        let mut b = basis;
        if ring.modulus().is_some() {
            b = lifted_gb(ring, &b);
        }
        b
    } else {
        lifted_gb(ring, &basis)
    };
    let height = ring.dim() as i64 - dim_of_ideal(ring, &basis);
    PrimeIdeal { basis, height, certificate: Certificate::MonomialPrime }
}

/// Standard combinatorial algorithm: pick one variable from the support of
/// each minimal generator, then keep the inclusion-minimal variable sets.
fn monomial_minimal_primes(ring: &Ring, gb: &IdealBasis) -> Vec<PrimeIdeal> {
    let mut covers: Vec<Vec<usize>> = vec![Vec::new()];
    for g in gb.gens() {
        let supp = g.leading_term().unwrap().mono.support();
        let mut next: Vec<Vec<usize>> = Vec::new();
        for cover in &covers {
            if cover.iter().any(|v| supp.contains(v)) {
                next.push(cover.clone());
                continue;
            }
            for &v in &supp {
                let mut c = cover.clone();
                c.push(v);
                c.sort_unstable();
                next.push(c);
            }
        }
        next.sort();
        next.dedup();
        covers = next;
    }
    // inclusion-minimal covers
    let mut keep = vec![true; covers.len()];
    for a in 0..covers.len() {
        for b in 0..covers.len() {
            if a != b
                && keep[a]
                && covers[b].iter().all(|v| covers[a].contains(v))
                && covers[b].len() < covers[a].len()
            {
                keep[a] = false;
            }
        }
    }
    covers
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then(|| monomial_prime(ring, &c)))
        .collect()
}

/// Split a polynomial into supported factors: the variables of its monomial
/// content, extracted linear factors of a binary cofactor, and the remaining
/// cofactor. Returns `None` when nothing factors.
fn split_supported(g: &Polynomial) -> Option<Vec<Polynomial>> {
    let ctx = g.ctx().clone();
    let mut pieces: Vec<Polynomial> = Vec::new();
    // monomial content
    let content = g
        .terms()
        .iter()
        .map(|t| t.mono.clone())
        .reduce(|a, b| a.gcd(&b))
        .unwrap();
    let mut rest = g.clone();
    if !content.is_one() {
        for v in content.support() {
            pieces.push(Polynomial::var(&ctx, v));
        }
        let content_poly = Polynomial::from_term(&ctx, content, ctx.field().one());
        rest = rest.exact_div(&content_poly).unwrap();
    }
    if rest.is_unit_constant() {
        return (!pieces.is_empty()).then_some(pieces);
    }
    // binary cofactor: peel off linear factors over the base field
    loop {
        if linear_in_any_vars(&rest) {
            pieces.push(rest.monic());
            return (pieces.len() >= 2).then_some(pieces);
        }
        match peel_linear_factor(&rest) {
            Some((lin, quo)) => {
                pieces.push(lin);
                rest = quo;
                if rest.is_unit_constant() {
                    return (pieces.len() >= 2).then_some(pieces);
                }
            }
            None => {
                pieces.push(rest.monic());
                return (pieces.len() >= 2).then_some(pieces);
            }
        }
    }
}

fn linear_in_any_vars(p: &Polynomial) -> bool {
    p.total_degree() == Some(1)
}

fn active_vars(p: &Polynomial) -> Vec<usize> {
    let n = p.ctx().nvars();
    (0..n)
        .filter(|&v| p.terms().iter().any(|t| t.mono.0[v] > 0))
        .collect()
}

/// For a homogeneous binary form, find one linear factor over the base field.
fn peel_linear_factor(p: &Polynomial) -> Option<(Polynomial, Polynomial)> {
    if !p.is_homogeneous() || p.is_zero() {
        return None;
    }
    let vars = active_vars(p);
    if vars.len() != 2 {
        return None;
    }
    let ctx = p.ctx().clone();
    let (x, y) = (vars[0], vars[1]);
    let d = p.total_degree().unwrap();
    // coefficients c_i of x^i y^(d-i)
    let mut coeffs: Vec<Scalar> = vec![ctx.field().zero(); d as usize + 1];
    for t in p.terms() {
        coeffs[t.mono.0[x] as usize] = t.coeff.clone();
    }
    // y divides iff the top coefficient chain starts at zero; x divides iff
    // the bottom does
    if coeffs[0].is_zero() {
        let quo = p.exact_div(&Polynomial::var(&ctx, x)).unwrap();
        return Some((Polynomial::var(&ctx, x), quo));
    }
    if coeffs[d as usize].is_zero() {
        let quo = p.exact_div(&Polynomial::var(&ctx, y)).unwrap();
        return Some((Polynomial::var(&ctx, y), quo));
    }
    // root lambda of sum c_i t^i gives factor (x - lambda y)
    let root = find_root(&ctx, &coeffs)?;
    let lin = Polynomial::var(&ctx, x).sub(&Polynomial::var(&ctx, y).scale(&root));
    let quo = p.exact_div(&lin)?;
    Some((lin.monic(), quo))
}

const FP_SEARCH_BOUND: u64 = 10_000;

/// A root of the univariate polynomial with the given coefficient list
/// (index = exponent) over the base field, if one is found by the bounded
/// searches: rational-root over Q, exhaustive over small prime fields.
fn find_root(ctx: &Arc<RingCtx>, coeffs: &[Scalar]) -> Option<Scalar> {
    let field = ctx.field();
    let deg = coeffs.len() as u64 - 1;
    if field.is_rationals() {
        // clear denominators to an integer polynomial
        let rats: Vec<BigRational> = coeffs
            .iter()
            .map(|c| match c {
                Scalar::Rat(r) => r.clone(),
                _ => unreachable!(),
            })
            .collect();
        let mut denom_lcm = BigInt::one();
        for r in &rats {
            let d = r.denom();
            let g = num::integer::gcd(denom_lcm.clone(), d.clone());
            denom_lcm = denom_lcm / g * d;
        }
        let ints: Vec<BigInt> =
            rats.iter().map(|r| (r * BigRational::from(denom_lcm.clone())).to_integer()).collect();
        let a0 = ints.first()?.clone();
        let ad = ints.last()?.clone();
        if a0.is_zero() {
            return Some(field.zero());
        }
        let (p_divs, q_divs) = (small_divisors(&a0)?, small_divisors(&ad)?);
        for p in &p_divs {
            for q in &q_divs {
                for sign in [1i64, -1] {
                    let cand = BigRational::new(BigInt::from(sign * p), BigInt::from(*q));
                    let mut acc = BigRational::zero();
                    for c in ints.iter().rev() {
                        acc = acc * cand.clone() + BigRational::from(c.clone());
                    }
                    if acc.is_zero() {
                        return Some(Scalar::Rat(cand));
                    }
                }
            }
        }
        None
    } else {
        let p = field.characteristic();
        if p.saturating_mul(deg) > FP_SEARCH_BOUND {
            return None;
        }
        for t in 0..p {
            let cand = field.from_i64(t as i64);
            let mut acc = field.zero();
            for c in coeffs.iter().rev() {
                acc = acc.mul(&cand).add(c);
            }
            if acc.is_zero() {
                return Some(cand);
            }
        }
        None
    }
}

fn small_divisors(n: &BigInt) -> Option<Vec<i64>> {
    let v = n.abs().to_i64()?;
    if v == 0 {
        return Some(vec![1]);
    }
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= v {
        if v % d == 0 {
            out.push(d);
            out.push(v / d);
        }
        d += 1;
    }
    out.sort_unstable();
    out.dedup();
    Some(out)
}

/// Bounded irreducibility certificate: linear forms always; binary forms of
/// degree <= 3 by root-freeness (rational-root over Q, exhaustive over F_p
/// with `p * deg <= 10^4`).
fn certified_irreducible(p: &Polynomial) -> bool {
    if linear_in_any_vars(p) {
        return true;
    }
    if !p.is_homogeneous() {
        return false;
    }
    let vars = active_vars(p);
    if vars.len() != 2 {
        return false;
    }
    let d = p.total_degree().unwrap();
    if d > 3 {
        return false;
    }
    let ctx = p.ctx().clone();
    let field = ctx.field();
    if !field.is_rationals() && field.characteristic().saturating_mul(d as u64) > FP_SEARCH_BOUND {
        return false;
    }
    // divisible by a variable => reducible; otherwise root-free <=> no linear
    // factor <=> irreducible for degree 2 and 3
    peel_linear_factor(p).is_none()
}

/// Base case: the reduced basis is a set of variables plus at most one
/// certified irreducible polynomial in the remaining variables.
fn variables_plus_irreducible(ring: &Ring, gb: &IdealBasis) -> Option<PrimeIdeal> {
    let mut var_gens: Vec<usize> = Vec::new();
    let mut others: Vec<&Polynomial> = Vec::new();
    for g in gb.gens() {
        let is_var = g.terms().len() == 1 && g.total_degree() == Some(1);
        if is_var {
            var_gens.push(g.leading_term().unwrap().mono.support()[0]);
        } else {
            others.push(g);
        }
    }
    match others.len() {
        0 => Some(monomial_prime(ring, &var_gens)),
        1 => {
            let h = others[0];
            // the extra generator must avoid the variable generators
            if active_vars(h).iter().any(|v| var_gens.contains(v)) {
                return None;
            }
            if certified_irreducible(h) {
                let height = ring.dim() as i64 - dim_of_ideal(ring, gb);
                Some(PrimeIdeal {
                    basis: gb.clone(),
                    height,
                    certificate: Certificate::VariablesPlusIrreducible,
                })
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Keep inclusion-minimal primes, deduplicated.
fn minimize(ring: &Ring, mut primes: Vec<PrimeIdeal>) -> Vec<PrimeIdeal> {
    primes.sort_by_key(|p| p.key());
    primes.dedup_by(|a, b| a.key() == b.key());
    let mut keep = vec![true; primes.len()];
    for a in 0..primes.len() {
        for b in 0..primes.len() {
            if a != b
                && keep[a]
                && keep[b]
                && ideal_contains(ring, &primes[a].basis, &primes[b].basis)
                && primes[a].key() != primes[b].key()
            {
                // basis of a contains basis of b as an ideal: b is smaller
                keep[a] = false;
            }
        }
    }
    primes.into_iter().zip(keep).filter_map(|(p, k)| k.then_some(p)).collect()
}

// ---------------------------------------------------------------------------
// associated primes and support

/// Associated primes by the Eisenbud-Huneke-Vasconcelos method:
/// `Ass M` is the union over `c` of the height-`c` minimal primes of
/// `Ann Ext^c(M, R)`.
pub fn associated_primes(m: &PresentedModule) -> AssReport {
    let ring = m.ring().clone();
    if m.is_zero() {
        return AssReport { primes: Vec::new(), complete: true };
    }
    let r_mod = PresentedModule::ring_module(&ring);
    let dims: Vec<usize> = (0..=ring.dim()).collect();
    let per_c = exec::par_map(dims, |c| {
        let e = ext(c, m, &r_mod);
        if e.is_zero() {
            return AssReport { primes: Vec::new(), complete: true };
        }
        let ann = e.module().annihilator();
        let report = minimal_primes(&ring, &ann);
        AssReport {
            primes: report
                .primes
                .into_iter()
                .filter(|p| p.height() == c as i64)
                .collect(),
            complete: report.complete,
        }
    });
    let mut primes = Vec::new();
    let mut complete = true;
    for r in per_c {
        complete &= r.complete;
        primes.extend(r.primes);
    }
    primes.sort_by_key(|p| p.key());
    primes.dedup_by(|a, b| a.key() == b.key());
    AssReport { primes, complete }
}

/// `p` supports `N` iff `Ann N` is contained in `p`.
pub fn supp_contains(n: &PresentedModule, p: &PrimeIdeal) -> bool {
    let ann = n.annihilator();
    ann.gens().iter().all(|g| {
        normal_form_poly(&p.basis, g).map(|nf| nf.is_zero()).unwrap_or(false)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::monomial::MonomialOrder;
    use crate::poly::parse_polynomial;

    fn ctx_q(vars: &[&str]) -> Arc<RingCtx> {
        RingCtx::new(
            vars.iter().map(|s| s.to_string()).collect(),
            FieldSpec::rationals(),
            MonomialOrder::GrevLex,
        )
    }

    fn p(ctx: &Arc<RingCtx>, s: &str) -> Polynomial {
        parse_polynomial(ctx, s).unwrap()
    }

    fn ideal(ctx: &Arc<RingCtx>, gens: &[&str]) -> IdealBasis {
        IdealBasis::new(gens.iter().map(|s| p(ctx, s)).collect())
    }

    #[test]
    fn dim_examples() {
        let ctx = ctx_q(&["x", "y"]);
        let ring = Ring::polynomial(&ctx);
        assert_eq!(dim_of_ideal(&ring, &ideal(&ctx, &["x"])), 1);
        assert_eq!(dim_of_ideal(&ring, &ideal(&ctx, &["x", "y"])), 0);
        assert_eq!(dim_of_ideal(&ring, &ideal(&ctx, &["x^2"])), 1);
        assert_eq!(dim_of_ideal(&ring, &ideal(&ctx, &[])), 2);
        assert_eq!(dim_of_ideal(&ring, &ideal(&ctx, &["1"])), -1);
        let ctx3 = ctx_q(&["x", "y", "z"]);
        let ring3 = Ring::polynomial(&ctx3);
        assert_eq!(dim_of_ideal(&ring3, &ideal(&ctx3, &["x*y"])), 2);
    }

    #[test]
    fn monomial_minimal_primes_examples() {
        let ctx = ctx_q(&["x", "y", "z"]);
        let ring = Ring::polynomial(&ctx);
        let report = minimal_primes(&ring, &ideal(&ctx, &["x*y", "x*z"]));
        assert!(report.complete);
        let keys = report.keys();
        assert_eq!(keys.len(), 2);
        assert!(keys.contains(&vec!["x".to_string()]));
        assert!(keys.contains(&vec!["y".to_string(), "z".to_string()]));

        let report = minimal_primes(&ring, &ideal(&ctx, &["x^2"]));
        assert!(report.complete);
        assert_eq!(report.keys(), vec![vec!["x".to_string()]]);
    }

    #[test]
    fn brute_force_monomial_minimal_primes() {
        // against all 2^n variable-generated primes
        let ctx = ctx_q(&["x", "y", "z"]);
        let ring = Ring::polynomial(&ctx);
        for gens in [
            vec!["x*y", "y*z^2"],
            vec!["x^2*y", "x*z", "y^3*z"],
            vec!["x*y*z"],
            vec!["x^3", "y^2"],
        ] {
            let i = ideal(&ctx, &gens);
            let report = minimal_primes(&ring, &i);
            assert!(report.complete);
            // brute force: containment-minimal variable primes containing I
            let n = 3usize;
            let mut containing: Vec<Vec<usize>> = Vec::new();
            for mask in 0u32..(1 << n) {
                let vars: Vec<usize> = (0..n).filter(|v| mask & (1 << v) != 0).collect();
                let pi = IdealBasis::new(
                    vars.iter().map(|&v| Polynomial::var(&ctx, v)).collect(),
                );
                let contains = if vars.is_empty() {
                    i.gens().is_empty()
                } else {
                    ideal_contains(&ring, &pi, &i)
                };
                if contains {
                    containing.push(vars);
                }
            }
            let minimal: Vec<Vec<usize>> = containing
                .iter()
                .filter(|a| {
                    !containing
                        .iter()
                        .any(|b| b.len() < a.len() && b.iter().all(|v| a.contains(v)))
                })
                .cloned()
                .collect();
            let mut expect: Vec<Vec<String>> = minimal
                .into_iter()
                .map(|vars| vars.into_iter().map(|v| ctx.vars()[v].clone()).collect())
                .collect();
            expect.sort();
            let mut got = report.keys();
            got.sort();
            assert_eq!(got, expect, "minimal primes of {gens:?}");
        }
    }

    #[test]
    fn linear_splitting() {
        let ctx = ctx_q(&["x", "y"]);
        let ring = Ring::polynomial(&ctx);
        // x(x-y): splits into (x) and (x-y)
        let report = minimal_primes(&ring, &ideal(&ctx, &["x^2 - x*y"]));
        assert!(report.complete);
        let keys = report.keys();
        assert_eq!(keys.len(), 2);
        assert!(keys.contains(&vec!["x".to_string()]));
        assert!(keys.contains(&vec!["x - y".to_string()]));
    }

    #[test]
    fn irreducible_binary_base_case() {
        let ctx = ctx_q(&["x", "y"]);
        let ring = Ring::polynomial(&ctx);
        // x^2 + y^2 is irreducible over Q
        let report = minimal_primes(&ring, &ideal(&ctx, &["x^2 + y^2"]));
        assert!(report.complete);
        assert_eq!(report.primes.len(), 1);
        assert_eq!(report.primes[0].certificate(), Certificate::VariablesPlusIrreducible);
        assert_eq!(report.primes[0].height(), 1);
        // but x^2 - y^2 splits
        let report = minimal_primes(&ring, &ideal(&ctx, &["x^2 - y^2"]));
        assert!(report.complete);
        assert_eq!(report.primes.len(), 2);
    }

    #[test]
    fn associated_primes_examples() {
        let ctx = ctx_q(&["x", "y"]);
        let ring = Ring::polynomial(&ctx);
        // cross-checked classically: (x^2, xy) = (x) meet (x, y)^2, embedded prime m
        let m = PresentedModule::cyclic(&ring, &ideal(&ctx, &["x^2", "x*y"]));
        let report = associated_primes(&m);
        assert!(report.complete);
        let mut keys = report.keys();
        keys.sort();
        assert_eq!(
            keys,
            vec![vec!["x".to_string()], vec!["x".to_string(), "y".to_string()]]
        );
        // a domain has only (0)
        let r = PresentedModule::ring_module(&ring);
        let report = associated_primes(&r);
        assert!(report.complete);
        assert_eq!(report.primes.len(), 1);
        assert!(report.primes[0].basis().is_zero_ideal());
        assert_eq!(report.primes[0].height(), 0);
        // the residue field has only the maximal ideal
        let k = PresentedModule::cyclic(&ring, &ideal(&ctx, &["x", "y"]));
        let report = associated_primes(&k);
        assert!(report.complete);
        assert_eq!(report.keys(), vec![vec!["x".to_string(), "y".to_string()]]);
    }

    #[test]
    fn supp_membership() {
        let ctx = ctx_q(&["x", "y"]);
        let ring = Ring::polynomial(&ctx);
        let rx = PresentedModule::cyclic(&ring, &ideal(&ctx, &["x"]));
        let px = PrimeIdeal::declared(&ring, ideal(&ctx, &["x"])).unwrap();
        let py = PrimeIdeal::declared(&ring, ideal(&ctx, &["y"])).unwrap();
        let pm = PrimeIdeal::declared(&ring, ideal(&ctx, &["x", "y"])).unwrap();
        assert!(supp_contains(&rx, &px));
        assert!(!supp_contains(&rx, &py));
        let k = PresentedModule::cyclic(&ring, &ideal(&ctx, &["x", "y"]));
        assert!(supp_contains(&k, &pm));
        // the zero module has empty support
        let z = PresentedModule::zero(&ring);
        assert!(!supp_contains(&z, &pm));
        // Ass contains the minimal primes of the annihilator
        let m = PresentedModule::cyclic(&ring, &ideal(&ctx, &["x^2", "x*y"]));
        let ass = associated_primes(&m);
        let min = minimal_primes(&ring, &m.annihilator());
        assert!(min.complete);
        for p in &min.primes {
            assert!(ass.primes.contains(p), "minimal prime {:?} missing from Ass", p.key());
        }
    }

    #[test]
    fn incomplete_outside_class() {
        let ctx = ctx_q(&["x", "y", "z"]);
        let ring = Ring::polynomial(&ctx);
        // an irreducible ternary quadric is outside the supported class
        let report = minimal_primes(&ring, &ideal(&ctx, &["x^2 + y^2 + z^2"]));
        assert!(!report.complete);
        assert!(report.primes.is_empty());
    }
}
