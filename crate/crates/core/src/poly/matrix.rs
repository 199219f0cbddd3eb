use std::sync::Arc;

use super::context::same_context;
use super::{Poly, PolyError, VarContext};
use crate::perm::signed_permutations;

/// Largest matrix size accepted by [`PolyMatrix`]. The subset recurrence in
/// [`PolyMatrix::determinant`] touches `2^n` minors.
pub const MAX_DET_SIZE: usize = 8;

/// Square matrix of polynomials over one context, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    size: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn new(rows: Vec<Vec<Poly>>) -> Result<Self, PolyError> {
        let size = rows.len();
        let bad_shape = |cols| PolyError::MatrixShape {
            rows: size,
            cols,
            max: MAX_DET_SIZE,
        };
        if size == 0 || size > MAX_DET_SIZE {
            return Err(bad_shape(rows.first().map_or(0, Vec::len)));
        }
        if let Some(row) = rows.iter().find(|r| r.len() != size) {
            return Err(bad_shape(row.len()));
        }
        let ctx = rows[0][0].context().clone();
        let entries: Vec<Poly> = rows.into_iter().flatten().collect();
        if entries.iter().any(|e| !same_context(e.context(), &ctx)) {
            return Err(PolyError::ContextMismatch);
        }
        Ok(PolyMatrix { size, entries })
    }

    /// Builds an `n x n` matrix from a closure over `(row, col)`, 0-based.
    pub fn from_fn(
        n: usize,
        mut f: impl FnMut(usize, usize) -> Result<Poly, PolyError>,
    ) -> Result<Self, PolyError> {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| f(i, j)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(rows)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn context(&self) -> &Arc<VarContext> {
        self.entries[0].context()
    }

    pub fn get(&self, row: usize, col: usize) -> &Poly {
        &self.entries[row * self.size + col]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        for col in 0..self.size {
            self.entries.swap(a * self.size + col, b * self.size + col);
        }
    }

    /// Determinant by Laplace expansion along successive rows, memoized over
    /// column subsets: `minor[S]` is the determinant of the first `|S|` rows
    /// restricted to the columns in `S`.
    pub fn determinant(&self) -> Poly {
        let n = self.size;
        let ctx = self.context().clone();
        let mut minors: Vec<Option<Poly>> = vec![None; 1 << n];
        minors[0] = Some(Poly::one(&ctx));
        let mut masks: Vec<usize> = (1..1usize << n).collect();
        masks.sort_by_key(|m| m.count_ones());
        for mask in masks {
            let row = mask.count_ones() as usize - 1;
            let mut acc = Poly::zero(&ctx);
            for (pos, col) in (0..n).filter(|c| mask & (1 << c) != 0).enumerate() {
                let entry = self.get(row, col);
                if entry.is_zero() {
                    continue;
                }
                let Some(sub) = minors[mask ^ (1 << col)].as_ref() else {
                    continue;
                };
                let term = entry * sub;
                acc = if (row + pos).is_multiple_of(2) {
                    acc + term
                } else {
                    acc - term
                };
            }
            if !acc.is_zero() {
                minors[mask] = Some(acc);
            }
        }
        minors[(1 << n) - 1]
            .take()
            .unwrap_or_else(|| Poly::zero(&ctx))
    }

    /// `sum over permutations p of sgn(p) * prod_i M[i][p(i)]`; the reference
    /// definition, used to cross-check [`Self::determinant`].
    pub fn determinant_by_permutations(&self) -> Poly {
        let ctx = self.context().clone();
        let mut total = Poly::zero(&ctx);
        for (perm, sign) in signed_permutations(self.size) {
            let mut prod = Poly::one(&ctx);
            for (row, &col) in perm.iter().enumerate() {
                let e = self.get(row, col);
                if e.is_zero() {
                    prod = Poly::zero(&ctx);
                    break;
                }
                prod = prod * e;
            }
            total = if sign > 0 { total + prod } else { total - prod };
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Bank;

    fn parse_matrix(ctx: &Arc<VarContext>, rows: &[&[&str]]) -> PolyMatrix {
        PolyMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|s| Poly::parse(ctx, s).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn vandermonde_two() {
        let c = VarContext::x_only(2);
        let m = parse_matrix(&c, &[&["x1", "x2"], &["1", "1"]]);
        assert_eq!(m.determinant(), Poly::parse(&c, "x1 - x2").unwrap());
    }

    #[test]
    fn identity() {
        let c = VarContext::x_only(1);
        let m = PolyMatrix::from_fn(4, |i, j| {
            Ok(if i == j {
                Poly::one(&c)
            } else {
                Poly::zero(&c)
            })
        })
        .unwrap();
        assert!(m.determinant().is_one());
    }

    #[test]
    fn table_row_two_one() {
        let c = VarContext::builder().single(Bank::T).build();
        let m = parse_matrix(&c, &[&["t^2", "0"], &["1", "t"]]);
        assert_eq!(m.determinant(), Poly::parse(&c, "t^3").unwrap());
    }

    #[test]
    fn three_by_three_agrees_with_permutations() {
        let c = VarContext::x_only(3);
        let m = parse_matrix(
            &c,
            &[
                &["x1^2", "x2 + 1", "3"],
                &["x1*x3", "0", "x2 - x3"],
                &["1", "x1 + x2 + x3", "x3^2"],
            ],
        );
        assert_eq!(m.determinant(), m.determinant_by_permutations());
    }

    #[test]
    fn shape_errors() {
        let c = VarContext::x_only(1);
        let one = Poly::one(&c);
        assert!(matches!(
            PolyMatrix::new(vec![]),
            Err(PolyError::MatrixShape { .. })
        ));
        assert!(matches!(
            PolyMatrix::new(vec![vec![one.clone(), one.clone()], vec![one.clone()]]),
            Err(PolyError::MatrixShape { .. })
        ));
        assert!(matches!(
            PolyMatrix::from_fn(9, |_, _| Ok(one.clone())),
            Err(PolyError::MatrixShape { .. })
        ));
        let other = Poly::one(&VarContext::x_only(2));
        assert_eq!(
            PolyMatrix::new(vec![vec![one.clone(), other], vec![one.clone(), one]]),
            Err(PolyError::ContextMismatch)
        );
    }
}
