use std::cmp::Ordering;

/// Dense exponent vector, one slot per context variable.
///
/// Ordered graded-lexicographically: total degree first, then the exponent
/// vectors compared left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn var(nvars: usize, slot: usize, exp: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[slot] = exp;
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, slot: usize) -> u32 {
        self.0[slot]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Degree restricted to the given slots.
    pub fn partial_degree(&self, slots: &[usize]) -> u32 {
        slots.iter().map(|&s| self.0[s]).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when every exponent of `other` fits, else `None`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    /// Same monomial with `slot` set to zero.
    pub fn without(&self, slot: usize) -> Monomial {
        let mut exps = self.0.clone();
        exps[slot] = 0;
        Monomial(exps)
    }

    pub(crate) fn swap_slots(&self, a: usize, b: usize) -> Monomial {
        let mut exps = self.0.clone();
        exps.swap(a, b);
        Monomial(exps)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn graded_lex() {
        assert!(m(&[2, 0]) > m(&[1, 1]));
        assert!(m(&[1, 1]) > m(&[0, 2]));
        assert!(m(&[0, 3]) > m(&[2, 0]));
        assert!(m(&[1, 0]) > m(&[0, 0]));
    }

    #[test]
    fn division() {
        assert_eq!(m(&[2, 1]).div(&m(&[1, 1])), Some(m(&[1, 0])));
        assert_eq!(m(&[2, 0]).div(&m(&[1, 1])), None);
    }
}
