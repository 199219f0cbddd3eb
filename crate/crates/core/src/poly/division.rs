use num_integer::Integer;
use num_traits::Zero;

use super::poly::format_monomial;
use super::{Poly, PolyError};

impl Poly {
    /// Exact quotient `self / divisor`.
    ///
    /// Long division by the leading term under graded-lex. If the divisor
    /// divides `self` then every leading monomial and coefficient of the
    /// running dividend is divisible by the divisor's, so the first failure
    /// of either proves a nonzero remainder and is reported as
    /// [`PolyError::NotDivisible`].
    pub fn exact_div(&self, divisor: &Poly) -> Result<Poly, PolyError> {
        if !super::context::same_context(self.context(), divisor.context()) {
            return Err(PolyError::ContextMismatch);
        }
        let Some((lead_m, lead_c)) = divisor.leading_term() else {
            return Err(PolyError::DivisionByZero);
        };
        let (lead_m, lead_c) = (lead_m.clone(), lead_c.clone());
        let ctx = self.context().clone();
        let mut rest = self.raw_terms().clone();
        let mut quotient = std::collections::BTreeMap::new();
        while let Some((m, c)) = rest.iter().next_back() {
            let Some(qm) = m.div(&lead_m) else {
                return Err(PolyError::NotDivisible(format_monomial(&ctx, m)));
            };
            let (qc, r) = c.div_rem(&lead_c);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible(format_monomial(&ctx, m)));
            }
            for (dm, dc) in divisor.raw_terms() {
                let prod = qm.mul(dm);
                let entry = rest.entry(prod.clone()).or_default();
                *entry -= &qc * dc;
                if entry.is_zero() {
                    rest.remove(&prod);
                }
            }
            quotient.insert(qm, qc);
        }
        Ok(Poly::from_sorted(&ctx, quotient))
    }
}
