//! Dense univariate polynomials over `F_q`, the decomposition
//! `f(x) = x^n h(x^((q-1)/m))`, and point-map iteration.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{mod_pow, FieldCtx, FieldElement};
use crate::number_theory::coprime_split;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial is zero")]
    Zero,
    #[error("polynomial has nonzero constant term, so f(0) != 0")]
    NonzeroConstantTerm,
    #[error("index {m} does not divide q - 1 = {order}")]
    BadIndex { m: u64, order: u64 },
    #[error("exponent n must be positive")]
    ZeroExponent,
    #[error("h(0) must be nonzero")]
    HVanishesAtZero,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Coefficients indexed by exponent, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Polynomial {
    coeffs: Vec<FieldElement>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: FieldElement) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: FieldElement, exp: usize) -> Self {
        let mut coeffs = vec![FieldElement::ZERO; exp + 1];
        coeffs[exp] = c;
        Self::new(coeffs)
    }

    /// Builds a polynomial from integer coefficients, lowest degree first,
    /// mapped into the prime subfield.
    pub fn from_ints(ctx: &FieldCtx, coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| ctx.from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: usize) -> FieldElement {
        self.coeffs.get(exp).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (usize, FieldElement)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, &c)| (e, c))
    }

    pub fn add(&self, ctx: &FieldCtx, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..len)
                .map(|i| ctx.add(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn neg(&self, ctx: &FieldCtx) -> Self {
        Self::new(self.coeffs.iter().map(|&c| ctx.neg(c)).collect())
    }

    pub fn sub(&self, ctx: &FieldCtx, other: &Self) -> Self {
        self.add(ctx, &other.neg(ctx))
    }

    pub fn mul(&self, ctx: &FieldCtx, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.terms() {
            for (j, b) in other.terms() {
                out[i + j] = ctx.add(out[i + j], ctx.mul(a, b));
            }
        }
        Self::new(out)
    }

    /// The unique polynomial of degree < q inducing the same map on `F_q`
    /// (reduction modulo `x^q - x`).
    pub fn reduce_functional(&self, ctx: &FieldCtx) -> Self {
        let q = ctx.q() as usize;
        if self.coeffs.len() <= q {
            return self.clone();
        }
        let mut out = vec![FieldElement::ZERO; q];
        for (e, c) in self.terms() {
            let r = if e == 0 { 0 } else { (e - 1) % (q - 1) + 1 };
            out[r] = ctx.add(out[r], c);
        }
        Self::new(out)
    }

    /// `f(x)`. Horner for dense polynomials, term-wise powers for sparse ones.
    pub fn evaluate(&self, ctx: &FieldCtx, x: FieldElement) -> FieldElement {
        let nonzero = self.terms().count();
        if nonzero * 32 < self.coeffs.len() {
            return self.terms().fold(FieldElement::ZERO, |acc, (e, c)| {
                ctx.add(acc, ctx.mul(c, ctx.pow_u64(x, e as u64)))
            });
        }
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| ctx.add(ctx.mul(acc, x), c))
    }

    /// Parses text such as `98*x^4+68*x^3-6*x-31` or `x^15*(x^36+1)`.
    ///
    /// Integer literals map into the prime subfield; `[i]` denotes the field
    /// element with canonical index `i`. Products and powers may be written
    /// explicitly or by juxtaposition (`3x^2`). The result is reduced modulo
    /// `x^q - x`.
    pub fn parse(ctx: &FieldCtx, text: &str) -> Result<Self, PolyError> {
        let mut parser = Parser {
            ctx,
            src: text.as_bytes(),
            pos: 0,
        };
        let poly = parser.expr()?;
        parser.skip_ws();
        if parser.pos != parser.src.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(poly)
    }

    pub fn display<'a>(&'a self, ctx: &'a FieldCtx) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, ctx }
    }
}

/// Renders a polynomial in the text format accepted by [`Polynomial::parse`].
pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    ctx: &'a FieldCtx,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let prime = self.ctx.degree() == 1;
        let mut first = true;
        for (e, c) in self.poly.terms().collect::<Vec<_>>().into_iter().rev() {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            let coeff = if prime {
                c.to_string()
            } else {
                format!("[{c}]")
            };
            match e {
                0 => write!(f, "{coeff}")?,
                _ => {
                    if c != self.ctx.one() {
                        write!(f, "{coeff}*")?;
                    }
                    if e == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    ctx: &'a FieldCtx,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> PolyError {
        PolyError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg(self.ctx)
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if op == b'+' {
                acc.add(self.ctx, &t)
            } else {
                acc.sub(self.ctx, &t)
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => self.pos += 1,
                Some(b'x' | b'(' | b'[') => {}
                Some(c) if c.is_ascii_digit() => {}
                _ => break,
            }
            let f = self.factor()?;
            acc = acc.mul(self.ctx, &f).reduce_functional(self.ctx);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            return Ok(self.power(&base, e));
        }
        Ok(base)
    }

    fn power(&self, base: &Polynomial, e: u64) -> Polynomial {
        let q = self.ctx.q();
        // x^e is a single term; reduce the exponent directly.
        if base.terms().count() == 1 && base.coeff(1) == self.ctx.one() && base.coeffs.len() == 2 {
            let r = if e == 0 {
                0
            } else if e < q {
                e
            } else {
                (e - 1) % (q - 1) + 1
            };
            return Polynomial::monomial(self.ctx.one(), r as usize);
        }
        let mut acc = Polynomial::constant(self.ctx.one());
        let mut b = base.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(self.ctx, &b).reduce_functional(self.ctx);
            }
            b = b.mul(self.ctx, &b).reduce_functional(self.ctx);
            e >>= 1;
        }
        acc
    }

    fn integer(&mut self) -> Result<u64, PolyError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| PolyError::Parse {
                pos: start,
                msg: "integer too large".into(),
            })
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(Polynomial::monomial(self.ctx.one(), 1))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'[') => {
                self.pos += 1;
                self.skip_ws();
                let i = self.integer()?;
                if self.peek() != Some(b']') {
                    return Err(self.error("expected ']'"));
                }
                self.pos += 1;
                let c = self
                    .ctx
                    .element(i)
                    .map_err(|e| self.error(&e.to_string()))?;
                Ok(Polynomial::constant(c))
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                let r = (v % self.ctx.characteristic()) as i64;
                Ok(Polynomial::constant(self.ctx.from_int(r)))
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// `f(x) = x^n h(x^((q-1)/m))` with `h(0) != 0`, together with the splits
/// `(q-1)/m = nu * omega` and `q-1 = (q-1)/omega' * omega'` relative to `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexedForm {
    pub n: u64,
    pub h: Polynomial,
    pub m: u64,
    pub nu: u64,
    pub omega: u64,
    pub omega_prime: u64,
}

impl IndexedForm {
    /// Assembles the form from its parts, without checking minimality of `m`.
    pub fn new(ctx: &FieldCtx, n: u64, h: Polynomial, m: u64) -> Result<Self, PolyError> {
        let order = ctx.group_order();
        if n == 0 {
            return Err(PolyError::ZeroExponent);
        }
        if m == 0 || !order.is_multiple_of(m) {
            return Err(PolyError::BadIndex { m, order });
        }
        if h.coeff(0).is_zero() {
            return Err(PolyError::HVanishesAtZero);
        }
        let split = coprime_split(order / m, n);
        let omega_prime = coprime_split(order, n).omega;
        Ok(Self {
            n,
            h,
            m,
            nu: split.nu,
            omega: split.omega,
            omega_prime,
        })
    }

    /// `(q-1)/m`.
    pub fn s(&self, ctx: &FieldCtx) -> u64 {
        ctx.group_order() / self.m
    }

    /// `psi_f(x) = x^n h(x)^((q-1)/m)`, with `psi_f(0) = 0`.
    pub fn psi(&self, ctx: &FieldCtx, x: FieldElement) -> FieldElement {
        if x.is_zero() {
            return FieldElement::ZERO;
        }
        let hx = self.h.evaluate(ctx, x);
        ctx.mul(ctx.pow_u64(x, self.n), ctx.pow_u64(hx, self.s(ctx)))
    }

    /// `f(a) = a^n h(a^s)`.
    pub fn apply(&self, ctx: &FieldCtx, a: FieldElement) -> FieldElement {
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        let hx = self.h.evaluate(ctx, ctx.pow_u64(a, self.s(ctx)));
        ctx.mul(ctx.pow_u64(a, self.n), hx)
    }

    /// Re-expands `x^n h(x^s)`, reduced modulo `x^q - x`.
    pub fn to_polynomial(&self, ctx: &FieldCtx) -> Polynomial {
        let s = self.s(ctx) as usize;
        let n = self.n as usize;
        let q = ctx.q() as usize;
        let mut out = vec![FieldElement::ZERO; q];
        for (j, c) in self.h.terms() {
            let e = n + j * s;
            let r = (e - 1) % (q - 1) + 1;
            out[r] = ctx.add(out[r], c);
        }
        Polynomial::new(out)
    }
}

/// Writes `f` as `x^n h(x^((q-1)/m))` with the minimal index `m`.
///
/// `f` is first reduced modulo `x^q - x`; `n` is then the multiplicity of `x`
/// and `(q-1)/m` the gcd of `q - 1` with the exponents of `f / x^n`.
pub fn index_decompose(ctx: &FieldCtx, f: &Polynomial) -> Result<IndexedForm, PolyError> {
    let f = f.reduce_functional(ctx);
    if f.is_zero() {
        return Err(PolyError::Zero);
    }
    if !f.coeff(0).is_zero() {
        return Err(PolyError::NonzeroConstantTerm);
    }
    let order = ctx.group_order();
    let n = f.terms().next().expect("nonzero").0;
    let d = f.terms().fold(order, |g, (e, _)| g.gcd(&((e - n) as u64)));
    let d = d as usize;
    let h = Polynomial::new(
        (0..=(f.degree().unwrap() - n) / d)
            .map(|j| f.coeff(n + j * d))
            .collect(),
    );
    IndexedForm::new(ctx, n as u64, h, order / d as u64)
}

/// `f` applied `k` times to `a` by repeated evaluation.
pub fn iterate_map(ctx: &FieldCtx, f: &Polynomial, a: FieldElement, k: u64) -> FieldElement {
    (0..k).fold(a, |x, _| f.evaluate(ctx, x))
}

/// `f^(k)(a) = a^(n^k) * prod_{i<k} h(psi^(i)(a^s))^(n^(k-i-1))`, exponents
/// carried modulo `q - 1`.
pub fn closed_form_iterate(
    ctx: &FieldCtx,
    form: &IndexedForm,
    a: FieldElement,
    k: u64,
) -> FieldElement {
    if a.is_zero() {
        return FieldElement::ZERO;
    }
    if k == 0 {
        return a;
    }
    let order = ctx.group_order();
    let mut acc = ctx.pow_u64(a, mod_pow(form.n, k, order));
    let mut xi = ctx.pow_u64(a, form.s(ctx));
    for i in 0..k {
        let hv = form.h.evaluate(ctx, xi);
        if hv.is_zero() {
            // every exponent n^(k-i-1) is positive
            return FieldElement::ZERO;
        }
        acc = ctx.mul(acc, ctx.pow_u64(hv, mod_pow(form.n, k - i - 1, order)));
        xi = form.psi(ctx, xi);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f181() -> FieldCtx {
        FieldCtx::prime(181).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let ctx = f181();
        let h = Polynomial::parse(&ctx, "98*x^4+68*x^3+68*x^2-6*x-31").unwrap();
        assert_eq!(h.evaluate(&ctx, ctx.one()), ctx.from_int(16));
        assert_eq!(
            Polynomial::zero().evaluate(&ctx, ctx.from_int(5)),
            ctx.zero()
        );
        let g = Polynomial::parse(&ctx, "x^15*(98*x^144+68*x^108+68*x^72-6*x^36-31)").unwrap();
        assert_eq!(g.evaluate(&ctx, ctx.zero()), ctx.zero());
    }

    #[test]
    fn sparse_and_dense_evaluation_agree() {
        let ctx = FieldCtx::prime(101).unwrap();
        let f = Polynomial::parse(&ctx, "3*x^97+x^2+5").unwrap();
        for a in ctx.elements() {
            let horner = f
                .coeffs()
                .iter()
                .rev()
                .fold(ctx.zero(), |acc, &c| ctx.add(ctx.mul(acc, a), c));
            assert_eq!(f.evaluate(&ctx, a), horner);
        }
    }

    #[test]
    fn decompose_f181_polynomial() {
        let ctx = f181();
        let g = Polynomial::parse(&ctx, "x^15*(98*x^144+68*x^108+68*x^72-6*x^36-31)").unwrap();
        let form = index_decompose(&ctx, &g).unwrap();
        assert_eq!(
            (form.n, form.m, form.nu, form.omega, form.omega_prime),
            (15, 5, 9, 4, 4)
        );
        assert_eq!(
            form.h,
            Polynomial::parse(&ctx, "98*x^4+68*x^3+68*x^2-6*x-31").unwrap()
        );
    }

    #[test]
    fn decompose_small_examples() {
        let f97 = FieldCtx::prime(97).unwrap();
        let g = Polynomial::parse(&f97, "x^6*(x^24-1)").unwrap();
        let form = index_decompose(&f97, &g).unwrap();
        assert_eq!((form.n, form.m), (6, 4));
        assert_eq!(form.h, Polynomial::from_ints(&f97, &[-1, 1]));

        let f13 = FieldCtx::prime(13).unwrap();
        let form = index_decompose(&f13, &Polynomial::parse(&f13, "x^2").unwrap()).unwrap();
        assert_eq!((form.n, form.m), (2, 1));
        assert_eq!(form.h, Polynomial::constant(f13.one()));
    }

    #[test]
    fn decompose_rejects_bad_input() {
        let ctx = FieldCtx::prime(13).unwrap();
        assert_eq!(
            index_decompose(&ctx, &Polynomial::zero()),
            Err(PolyError::Zero)
        );
        let f = Polynomial::parse(&ctx, "x^2+1").unwrap();
        assert_eq!(
            index_decompose(&ctx, &f),
            Err(PolyError::NonzeroConstantTerm)
        );
        // x^13 - x vanishes on F_13
        let f = Polynomial::parse(&ctx, "x^13-x").unwrap();
        assert_eq!(index_decompose(&ctx, &f), Err(PolyError::Zero));
    }

    #[test]
    fn iterate_examples() {
        let ctx = FieldCtx::prime(13).unwrap();
        let f = Polynomial::parse(&ctx, "x^2").unwrap();
        assert_eq!(iterate_map(&ctx, &f, ctx.from_int(2), 2), ctx.from_int(3));
        assert_eq!(iterate_map(&ctx, &f, ctx.from_int(7), 0), ctx.from_int(7));
    }

    #[test]
    fn f181_polynomial_drains_into_zero() {
        let ctx = f181();
        let g = Polynomial::parse(&ctx, "x^15*(98*x^144+68*x^108+68*x^72-6*x^36-31)").unwrap();
        let a = ctx
            .nonzero_elements()
            .find(|&a| ctx.pow_u64(a, 36) == ctx.from_int(42))
            .unwrap();
        assert_eq!(iterate_map(&ctx, &g, a, 1), ctx.zero());
        let b = ctx
            .nonzero_elements()
            .find(|&a| ctx.pow_u64(a, 36) == ctx.from_int(59))
            .unwrap();
        assert_ne!(iterate_map(&ctx, &g, b, 1), ctx.zero());
        assert_eq!(iterate_map(&ctx, &g, b, 2), ctx.zero());
    }

    #[test]
    fn closed_form_examples() {
        let ctx = f181();
        let g = Polynomial::parse(&ctx, "x^15*(98*x^144+68*x^108+68*x^72-6*x^36-31)").unwrap();
        let form = index_decompose(&ctx, &g).unwrap();
        for a in ctx.elements() {
            assert_eq!(closed_form_iterate(&ctx, &form, a, 1), g.evaluate(&ctx, a));
            if ctx.pow_u64(a, 36) == ctx.from_int(125) {
                let naive = g.evaluate(&ctx, g.evaluate(&ctx, a));
                assert_eq!(closed_form_iterate(&ctx, &form, a, 2), naive);
            }
        }
        assert_eq!(closed_form_iterate(&ctx, &form, ctx.zero(), 4), ctx.zero());
    }

    #[test]
    fn parser_forms() {
        let ctx = FieldCtx::prime(7).unwrap();
        let a = Polynomial::parse(&ctx, "3x^2 + 2(x+1)").unwrap();
        assert_eq!(a, Polynomial::from_ints(&ctx, &[2, 2, 3]));
        let b = Polynomial::parse(&ctx, "(x+1)^2").unwrap();
        assert_eq!(b, Polynomial::from_ints(&ctx, &[1, 2, 1]));
        // x^9 = x^3 on F_7
        let c = Polynomial::parse(&ctx, "x^9").unwrap();
        assert_eq!(c, Polynomial::monomial(ctx.one(), 3));
        assert_eq!(
            Polynomial::parse(&ctx, "-x").unwrap(),
            Polynomial::from_ints(&ctx, &[0, -1])
        );
        assert!(matches!(
            Polynomial::parse(&ctx, "x^"),
            Err(PolyError::Parse { .. })
        ));
        assert!(matches!(
            Polynomial::parse(&ctx, "x+)"),
            Err(PolyError::Parse { .. })
        ));
        assert!(matches!(
            Polynomial::parse(&ctx, "[9]"),
            Err(PolyError::Parse { .. })
        ));
        let shown = b.display(&ctx).to_string();
        assert_eq!(Polynomial::parse(&ctx, &shown).unwrap(), b);
    }

    #[test]
    fn reassembly_matches_function() {
        let ctx = FieldCtx::prime(31).unwrap();
        let f = Polynomial::parse(&ctx, "x^4*(3*x^20+x^10+7)").unwrap();
        let form = index_decompose(&ctx, &f).unwrap();
        assert_eq!(form.m, 3);
        let g = form.to_polynomial(&ctx);
        for a in ctx.elements() {
            assert_eq!(g.evaluate(&ctx, a), f.evaluate(&ctx, a));
            assert_eq!(form.apply(&ctx, a), f.evaluate(&ctx, a));
        }
    }
}
