use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::context::same_context;
use super::{Bank, Monomial, PolyError, VarContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
}

/// Polynomial with arbitrary-precision integer coefficients.
///
/// Zero coefficients are never stored, so two polynomials over the same
/// context are equal exactly when their term maps are equal.
#[derive(Clone)]
pub struct Poly {
    ctx: Arc<VarContext>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        same_context(&self.ctx, &other.ctx) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero(ctx: &Arc<VarContext>) -> Self {
        Poly {
            ctx: Arc::clone(ctx),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &Arc<VarContext>) -> Self {
        Self::constant(ctx, 1)
    }

    pub fn constant(ctx: &Arc<VarContext>, c: impl Into<BigInt>) -> Self {
        Self::monomial(ctx, Monomial::one(ctx.len()), c)
    }

    pub fn monomial(ctx: &Arc<VarContext>, m: Monomial, c: impl Into<BigInt>) -> Self {
        debug_assert_eq!(m.exponents().len(), ctx.len());
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly {
            ctx: Arc::clone(ctx),
            terms,
        }
    }

    /// The variable in `slot` raised to `exp`.
    pub fn var_pow(ctx: &Arc<VarContext>, slot: usize, exp: u32) -> Self {
        Self::monomial(ctx, Monomial::var(ctx.len(), slot, exp), 1)
    }

    pub fn var(ctx: &Arc<VarContext>, slot: usize) -> Self {
        Self::var_pow(ctx, slot, 1)
    }

    /// Builds a polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms(
        ctx: &Arc<VarContext>,
        terms: impl IntoIterator<Item = (Monomial, BigInt)>,
    ) -> Self {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.exponents().len(), ctx.len());
            *acc.entry(m).or_default() += c;
        }
        Self::from_accumulator(ctx, acc)
    }

    fn from_accumulator(ctx: &Arc<VarContext>, acc: HashMap<Monomial, BigInt>) -> Self {
        Poly {
            ctx: Arc::clone(ctx),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Largest total degree in `bank`, `None` for the zero polynomial.
    pub fn bank_degree(&self, bank: Bank) -> Option<u32> {
        let slots = self.ctx.bank_slots(bank);
        self.terms.keys().map(|m| m.partial_degree(&slots)).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    fn check_ctx(&self, other: &Poly) -> Result<(), PolyError> {
        if same_context(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(PolyError::ContextMismatch)
        }
    }

    pub fn arith(&self, other: &Poly, kind: ArithKind) -> Result<Poly, PolyError> {
        self.check_ctx(other)?;
        Ok(match kind {
            ArithKind::Add => self.add_unchecked(other, false),
            ArithKind::Sub => self.add_unchecked(other, true),
            ArithKind::Mul => self.mul_filtered(other, None),
        })
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.arith(other, ArithKind::Add)
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.arith(other, ArithKind::Sub)
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.arith(other, ArithKind::Mul)
    }

    fn add_unchecked(&self, other: &Poly, negate: bool) -> Poly {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_default();
            if negate {
                *entry -= c;
            } else {
                *entry += c;
            }
            if entry.is_zero() {
                terms.remove(m);
            }
        }
        Poly {
            ctx: Arc::clone(&self.ctx),
            terms,
        }
    }

    fn mul_filtered(&self, other: &Poly, cap: Option<(&[usize], u32)>) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.ctx);
        }
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            let da = cap.map(|(slots, _)| ma.partial_degree(slots));
            for (mb, cb) in &other.terms {
                if let (Some((slots, max)), Some(da)) = (cap, da) {
                    if da + mb.partial_degree(slots) > max {
                        continue;
                    }
                }
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        Self::from_accumulator(&self.ctx, acc)
    }

    /// Product with every term of `bank`-degree above `max_degree` discarded.
    pub fn mul_truncated(
        &self,
        other: &Poly,
        bank: Bank,
        max_degree: u32,
    ) -> Result<Poly, PolyError> {
        self.check_ctx(other)?;
        let slots = self.ctx.bank_slots(bank);
        Ok(self.mul_filtered(other, Some((&slots, max_degree))))
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ctx);
        }
        Poly {
            ctx: Arc::clone(&self.ctx),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            ctx: Arc::clone(&self.ctx),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut result = Poly::one(&self.ctx);
        for _ in 0..exp {
            result = result.mul_filtered(self, None);
        }
        result
    }

    /// Drops every term whose total degree in `bank` exceeds `max_degree`.
    pub fn truncate(&self, bank: Bank, max_degree: u32) -> Poly {
        let slots = self.ctx.bank_slots(bank);
        Poly {
            ctx: Arc::clone(&self.ctx),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.partial_degree(&slots) <= max_degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Terms whose `bank`-degree is exactly `degree`.
    pub fn graded_slice(&self, bank: Bank, degree: u32) -> Poly {
        let slots = self.ctx.bank_slots(bank);
        Poly {
            ctx: Arc::clone(&self.ctx),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.partial_degree(&slots) == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Whether the variable in `slot` occurs in any term.
    pub fn mentions(&self, slot: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(slot) > 0)
    }

    /// Replaces the variable in `slot` by `replacement`.
    pub fn substitute(&self, slot: usize, replacement: &Poly) -> Result<Poly, PolyError> {
        self.check_ctx(replacement)?;
        if replacement.mentions(slot) {
            return Err(PolyError::SelfSubstitution(self.ctx.name(slot).to_string()));
        }
        let mut by_power: BTreeMap<u32, Vec<(Monomial, BigInt)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            by_power
                .entry(m.exponent(slot))
                .or_default()
                .push((m.without(slot), c.clone()));
        }
        let mut result = Poly::zero(&self.ctx);
        let mut power = Poly::one(&self.ctx);
        let mut current = 0;
        for (e, terms) in by_power {
            while current < e {
                power = power.mul_filtered(replacement, None);
                current += 1;
            }
            let part = Poly::from_terms(&self.ctx, terms);
            result = result.add_unchecked(&part.mul_filtered(&power, None), false);
        }
        Ok(result)
    }

    /// Exchanges two variables; used for symmetry checks.
    pub fn swap_vars(&self, a: usize, b: usize) -> Poly {
        Poly {
            ctx: Arc::clone(&self.ctx),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.swap_slots(a, b), c.clone()))
                .collect(),
        }
    }

    /// Largest monomial on which `self` and `other` disagree, with both
    /// coefficients.
    pub fn first_difference(&self, other: &Poly) -> Option<(Monomial, BigInt, BigInt)> {
        let diff = self.add_unchecked(other, true);
        diff.leading_term()
            .map(|(m, _)| (m.clone(), self.coefficient(m), other.coefficient(m)))
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        format_monomial(&self.ctx, m)
    }

    pub(crate) fn raw_terms(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.terms
    }

    pub(crate) fn from_sorted(ctx: &Arc<VarContext>, terms: BTreeMap<Monomial, BigInt>) -> Self {
        Poly {
            ctx: Arc::clone(ctx),
            terms,
        }
    }
}

pub(crate) fn format_monomial(ctx: &VarContext, m: &Monomial) -> String {
    let factors: Vec<String> = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                ctx.name(i).to_string()
            } else {
                format!("{}^{}", ctx.name(i), e)
            }
        })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", format_monomial(&self.ctx, m))?;
            } else {
                write!(f, "{abs}*{}", format_monomial(&self.ctx, m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

// Operator forms panic on a context mismatch; use `arith` for the fallible
// variant.
macro_rules! impl_binop {
    ($trait:ident, $method:ident, $kind:expr) => {
        impl std::ops::$trait<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                self.arith(rhs, $kind).expect("polynomial context mismatch")
            }
        }
        impl std::ops::$trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl std::ops::$trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}

impl_binop!(Add, add, ArithKind::Add);
impl_binop!(Sub, sub, ArithKind::Sub);
impl_binop!(Mul, mul, ArithKind::Mul);

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

impl std::ops::Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(&self)
    }
}
