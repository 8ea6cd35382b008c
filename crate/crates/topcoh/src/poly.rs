//! Sparse multivariate polynomials over an exact field, stored as term lists
//! ordered descending under the context's monomial order so that leading-term
//! access is O(1).

use crate::error::{Error, Result};
use crate::field::{scalar_is_negative, FieldSpec, Scalar};
use crate::monomial::{Monomial, MonomialOrder};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// A computation context: variable names, coefficient field, active order.
/// Every value in a computation shares one context.
#[derive(Debug, PartialEq, Eq)]
pub struct RingCtx {
    vars: Vec<String>,
    field: FieldSpec,
    order: MonomialOrder,
}

impl RingCtx {
    pub fn new(vars: Vec<String>, field: FieldSpec, order: MonomialOrder) -> Arc<Self> {
        assert!(!vars.is_empty(), "ring needs at least one variable");
        Arc::new(RingCtx { vars, field, order })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Same ring, different active order (for elimination tasks).
    pub fn with_order(self: &Arc<Self>, order: MonomialOrder) -> Arc<Self> {
        if self.order == order {
            return Arc::clone(self);
        }
        RingCtx::new(self.vars.clone(), self.field, order)
    }

    pub fn compatible(&self, other: &RingCtx) -> bool {
        self == other
    }
}

/// A term: monomial with nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: Scalar,
}

/// Canonical-form sparse polynomial. Terms are strictly descending under the
/// context order and never carry zero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ctx: Arc<RingCtx>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.compatible(&other.ctx) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ctx: &Arc<RingCtx>) -> Self {
        Polynomial { ctx: Arc::clone(ctx), terms: Vec::new() }
    }

    pub fn one(ctx: &Arc<RingCtx>) -> Self {
        Self::constant(ctx, ctx.field().one())
    }

    pub fn constant(ctx: &Arc<RingCtx>, c: Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(ctx);
        }
        Polynomial {
            ctx: Arc::clone(ctx),
            terms: vec![Term { mono: Monomial::one(ctx.nvars()), coeff: c }],
        }
    }

    pub fn var(ctx: &Arc<RingCtx>, i: usize) -> Self {
        Polynomial {
            ctx: Arc::clone(ctx),
            terms: vec![Term { mono: Monomial::var(ctx.nvars(), i), coeff: ctx.field().one() }],
        }
    }

    pub fn from_term(ctx: &Arc<RingCtx>, mono: Monomial, coeff: Scalar) -> Self {
        assert_eq!(mono.nvars(), ctx.nvars());
        if coeff.is_zero() {
            return Self::zero(ctx);
        }
        Polynomial { ctx: Arc::clone(ctx), terms: vec![Term { mono, coeff }] }
    }

    /// Build from an unordered term list, combining duplicates.
    pub fn from_terms(ctx: &Arc<RingCtx>, mut terms: Vec<Term>) -> Self {
        let order = ctx.order();
        terms.sort_by(|a, b| order.compare(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            if let Some(last) = out.last_mut() {
                if last.mono == t.mono {
                    last.coeff = last.coeff.add(&t.coeff);
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                    continue;
                }
            }
            if !t.coeff.is_zero() {
                out.push(t);
            }
        }
        Polynomial { ctx: Arc::clone(ctx), terms: out }
    }

    pub fn ctx(&self) -> &Arc<RingCtx> {
        &self.ctx
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one() || self.is_zero()
    }

    /// Nonzero constant (a unit, since coefficients form a field).
    pub fn is_unit_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Public contract variant: error on the zero polynomial.
    pub fn try_leading_term(&self) -> Result<&Term> {
        self.leading_term().ok_or(Error::ZeroPolynomial)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.total_degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(first) => {
                let d = first.mono.total_degree();
                self.terms.iter().all(|t| t.mono.total_degree() == d)
            }
        }
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        if self.is_zero() || !self.is_homogeneous() {
            None
        } else {
            Some(self.terms[0].mono.total_degree() as i64)
        }
    }

    fn check_ctx(&self, other: &Polynomial) -> Result<()> {
        if !self.ctx.compatible(&other.ctx) {
            return Err(Error::RingMismatch(format!(
                "{:?} vs {:?}",
                self.ctx.vars(),
                other.ctx.vars()
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        Ok(self.add(other))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert!(self.ctx.compatible(&other.ctx));
        let order = self.ctx.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match order.compare(&self.terms[i].mono, &other.terms[j].mono) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.terms[i].coeff.add(&other.terms[j].coeff);
                    if !c.is_zero() {
                        out.push(Term { mono: self.terms[i].mono.clone(), coeff: c });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial { ctx: Arc::clone(&self.ctx), terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ctx: Arc::clone(&self.ctx),
            terms: self
                .terms
                .iter()
                .map(|t| Term { mono: t.mono.clone(), coeff: t.coeff.neg() })
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        Ok(self.mul(other))
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert!(self.ctx.compatible(&other.ctx));
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ctx);
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(Term { mono: a.mono.mul(&b.mono), coeff: a.coeff.mul(&b.coeff) });
            }
        }
        Self::from_terms(&self.ctx, terms)
    }

    /// Multiply by a single term.
    pub fn mul_term(&self, mono: &Monomial, coeff: &Scalar) -> Polynomial {
        if coeff.is_zero() {
            return Self::zero(&self.ctx);
        }
        // multiplying by a monomial preserves descending term order
        Polynomial {
            ctx: Arc::clone(&self.ctx),
            terms: self
                .terms
                .iter()
                .map(|t| Term { mono: t.mono.mul(mono), coeff: t.coeff.mul(coeff) })
                .collect(),
        }
    }

    pub fn scale(&self, coeff: &Scalar) -> Polynomial {
        self.mul_term(&Monomial::one(self.ctx.nvars()), coeff)
    }

    /// Make the leading coefficient one.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some(lt) => self.scale(&lt.coeff.inv()),
        }
    }

    /// Exact division by `d`; returns `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Polynomial) -> Option<Polynomial> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quo = Polynomial::zero(&self.ctx);
        let dl = d.leading_term().unwrap();
        while let Some(lt) = rem.leading_term() {
            if !dl.mono.divides(&lt.mono) {
                return None;
            }
            let m = dl.mono.div_into(&lt.mono);
            let c = lt.coeff.div(&dl.coeff);
            let t = Polynomial::from_term(&self.ctx, m.clone(), c.clone());
            quo = quo.add(&t);
            rem = rem.sub(&d.mul_term(&m, &c));
        }
        Some(quo)
    }

    /// Re-sort terms into another context (same variables and field).
    pub fn change_ctx(&self, new_ctx: &Arc<RingCtx>) -> Polynomial {
        assert_eq!(self.ctx.vars(), new_ctx.vars());
        assert_eq!(self.ctx.field(), new_ctx.field());
        Polynomial::from_terms(
            new_ctx,
            self.terms.iter().map(|t| Term { mono: t.mono.clone(), coeff: t.coeff.clone() }).collect(),
        )
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ctx);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let neg = scalar_is_negative(&t.coeff);
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = if neg { t.coeff.neg() } else { t.coeff.clone() };
            let mut wrote_coeff = false;
            if t.mono.is_one() || !abs.is_one() {
                write!(f, "{abs}")?;
                wrote_coeff = true;
            }
            let mut first_var = true;
            for (vi, &e) in t.mono.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote_coeff || !first_var {
                    write!(f, "*")?;
                }
                first_var = false;
                write!(f, "{}", self.ctx.vars()[vi])?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Parse error with 1-based line/column into the source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

/// Parse the textual polynomial syntax: terms joined by `+`/`-`, a term is an
/// optional coefficient (integer, or `a/b` over the rationals) followed by
/// `*`-separated variable powers with `^`. Whitespace is insignificant.
pub fn parse_polynomial(ctx: &Arc<RingCtx>, text: &str) -> std::result::Result<Polynomial, ParseError> {
    Parser { ctx, text: text.as_bytes(), pos: 0, line_starts: line_starts(text) }.parse()
}

fn line_starts(text: &str) -> Vec<usize> {
    let mut v = vec![0];
    for (i, b) in text.bytes().enumerate() {
        if b == b'\n' {
            v.push(i + 1);
        }
    }
    v
}

struct Parser<'a> {
    ctx: &'a Arc<RingCtx>,
    text: &'a [u8],
    pos: usize,
    line_starts: Vec<usize>,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> ParseError {
        let line = match self.line_starts.binary_search(&self.pos) {
            Ok(i) => i,
            Err(i) => i - 1,
        };
        ParseError { line: line + 1, col: self.pos - self.line_starts[line] + 1, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && (self.text[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    fn parse(mut self) -> std::result::Result<Polynomial, ParseError> {
        self.skip_ws();
        if self.pos == self.text.len() {
            return Err(self.err("empty polynomial"));
        }
        let mut acc = Polynomial::zero(self.ctx);
        let mut sign_negative = false;
        match self.peek() {
            Some(b'-') => {
                sign_negative = true;
                self.pos += 1;
            }
            Some(b'+') => {
                self.pos += 1;
            }
            _ => {}
        }
        loop {
            let term = self.parse_term(sign_negative)?;
            acc = acc.add(&term);
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'+') => {
                    sign_negative = false;
                    self.pos += 1;
                }
                Some(b'-') => {
                    sign_negative = true;
                    self.pos += 1;
                }
                Some(c) => return Err(self.err(format!("expected '+' or '-', found '{}'", c as char))),
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self, negative: bool) -> std::result::Result<Polynomial, ParseError> {
        self.skip_ws();
        let mut coeff = self.ctx.field().one();
        let mut mono = Monomial::one(self.ctx.nvars());
        let mut saw_factor = false;
        // optional leading coefficient
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let n = self.parse_integer()?;
            self.skip_ws();
            let c = if self.peek() == Some(b'/') {
                self.pos += 1;
                self.skip_ws();
                let d = self.parse_integer()?;
                self.ctx
                    .field()
                    .from_fraction(n, d)
                    .map_err(|e| self.err(e.to_string()))?
            } else {
                self.ctx.field().from_i64(n)
            };
            coeff = coeff.mul(&c);
            saw_factor = true;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else if matches!(self.peek(), Some(c) if c.is_ascii_alphabetic() || c == b'_') {
                return Err(self.err("expected '*' between coefficient and variable"));
            }
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                    let name = self.parse_ident();
                    let vi = self
                        .ctx
                        .var_index(&name)
                        .ok_or_else(|| self.err(format!("unknown variable '{name}'")))?;
                    self.skip_ws();
                    let mut exp = 1u32;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.skip_ws();
                        let e = self.parse_integer()?;
                        if e < 0 {
                            return Err(self.err("negative exponent"));
                        }
                        exp = e as u32;
                    }
                    let mut step = vec![0u32; self.ctx.nvars()];
                    step[vi] = exp;
                    mono = mono.mul(&Monomial(step));
                    saw_factor = true;
                    self.skip_ws();
                    if self.peek() == Some(b'*') {
                        self.pos += 1;
                        continue;
                    }
                    break;
                }
                _ => {
                    if !saw_factor {
                        return Err(self.err("expected a term"));
                    }
                    break;
                }
            }
        }
        if negative {
            coeff = coeff.neg();
        }
        Ok(Polynomial::from_term(self.ctx, mono, coeff))
    }

    fn parse_integer(&mut self) -> std::result::Result<i64, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.text[start..self.pos])
            .unwrap()
            .parse::<i64>()
            .map_err(|_| self.err("integer out of range"))
    }

    fn parse_ident(&mut self) -> String {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        String::from_utf8(self.text[start..self.pos].to_vec()).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn ctx_qxy() -> Arc<RingCtx> {
        RingCtx::new(
            vec!["x".into(), "y".into()],
            FieldSpec::rationals(),
            MonomialOrder::GrevLex,
        )
    }

    fn p(ctx: &Arc<RingCtx>, s: &str) -> Polynomial {
        parse_polynomial(ctx, s).unwrap()
    }

    #[test]
    fn add_linear_combination() {
        let ctx = ctx_qxy();
        // (x + y) + (x - y) = 2x
        assert_eq!(p(&ctx, "x + y").add(&p(&ctx, "x - y")), p(&ctx, "2*x"));
    }

    #[test]
    fn add_identity() {
        let ctx = ctx_qxy();
        let q = p(&ctx, "3*x^2*y - y^3");
        assert_eq!(q.add(&Polynomial::zero(&ctx)), q);
    }

    #[test]
    fn char_two_cancellation() {
        let ctx = RingCtx::new(
            vec!["x".into()],
            FieldSpec::prime_field(2).unwrap(),
            MonomialOrder::GrevLex,
        );
        let x = Polynomial::var(&ctx, 0);
        assert!(x.add(&x).is_zero());
    }

    #[test]
    fn mul_examples() {
        let ctx = ctx_qxy();
        assert_eq!(p(&ctx, "x").mul(&p(&ctx, "y")), p(&ctx, "x*y"));
        // difference of squares
        assert_eq!(p(&ctx, "x+y").mul(&p(&ctx, "x-y")), p(&ctx, "x^2 - y^2"));
        let q = p(&ctx, "3*x^2*y - y^3");
        assert_eq!(q.mul(&Polynomial::one(&ctx)), q);
    }

    #[test]
    fn leading_terms() {
        let ctx = ctx_qxy();
        let q = p(&ctx, "x^2 + x*y + y^2");
        assert_eq!(q.leading_term().unwrap().mono, Monomial(vec![2, 0]));
        let single = p(&ctx, "3*x");
        assert_eq!(single.leading_term().unwrap().coeff, ctx.field().from_i64(3));
        // lex: x beats y^3
        let lex = ctx.with_order(MonomialOrder::Lex);
        let q = p(&lex, "x + y^3");
        assert_eq!(q.leading_term().unwrap().mono, Monomial(vec![1, 0]));
        assert!(Polynomial::zero(&ctx).try_leading_term().is_err());
    }

    #[test]
    fn print_parse_roundtrip() {
        let ctx = ctx_qxy();
        for s in ["3*x^2*y - y^3", "x", "-x + 2*y", "1", "x^2 - 2*x*y + y^2"] {
            let q = p(&ctx, s);
            assert_eq!(p(&ctx, &q.to_string()), q, "roundtrip of {s}");
        }
        // rational coefficients roundtrip too
        let half = Polynomial::constant(&ctx, ctx.field().from_fraction(1, 2).unwrap());
        let q = p(&ctx, "x").mul(&half);
        assert_eq!(p(&ctx, &q.to_string()), q);
    }

    #[test]
    fn parse_errors_carry_position() {
        let ctx = ctx_qxy();
        let e = parse_polynomial(&ctx, "x + z").unwrap_err();
        assert_eq!(e.line, 1);
        assert!(e.msg.contains("unknown variable"));
        assert!(parse_polynomial(&ctx, "").is_err());
        assert!(parse_polynomial(&ctx, "x + ").is_err());
        assert!(parse_polynomial(&ctx, "2x").is_err());
    }

    #[test]
    fn homogeneity() {
        let ctx = ctx_qxy();
        assert!(p(&ctx, "x^2 - y^2").is_homogeneous());
        assert!(!p(&ctx, "x^2 - y").is_homogeneous());
        assert_eq!(p(&ctx, "x^2 - y^2").homogeneous_degree(), Some(2));
    }

    #[test]
    fn exact_division() {
        let ctx = ctx_qxy();
        let prod = p(&ctx, "x^2 - y^2");
        assert_eq!(prod.exact_div(&p(&ctx, "x - y")), Some(p(&ctx, "x + y")));
        assert_eq!(prod.exact_div(&p(&ctx, "x")), None);
    }
}
