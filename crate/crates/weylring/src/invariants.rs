//! Invariant subspaces degree by degree: Reynolds averaging over the Weyl
//! group, exact row reduction, and Poincaré series.

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::algebra::{rat, AlgebraContext, AlgebraElement, Coeff, Degree, TensorMonomial};

/// Average of the orbit of `v`: `(1/|W|) Σ_w w·v`. The image is fixed by
/// every group element, and the operator restricts to the identity on
/// invariants.
pub fn reynolds(v: &AlgebraElement) -> AlgebraElement {
    let ctx = v.context();
    let weyl = ctx.weyl();
    let mut sum = AlgebraElement::zero(ctx);
    for w in weyl.elements() {
        sum = &sum + &w.act(v);
    }
    sum.scale(&rat(1, weyl.order() as i64))
}

/// Reduced row echelon form with unit pivots, plus the pivot columns.
/// Canonical: any spanning set of the same row space reduces to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowEchelon {
    pub rows: Vec<Vec<Coeff>>,
    pub pivots: Vec<usize>,
}

impl RowEchelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Whether `vector` lies in the row space.
    pub fn contains(&self, vector: &[Coeff]) -> bool {
        let mut v = vector.to_vec();
        for (row, &col) in self.rows.iter().zip(&self.pivots) {
            if !v[col].is_zero() {
                let f = v[col].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x -= r * &f;
                }
            }
        }
        v.iter().all(Zero::is_zero)
    }
}

/// Exact Gauss–Jordan elimination. Pivot choice is deterministic: leftmost
/// nonzero column, first available row. Zero rows are dropped.
///
/// Panics if the rows have different lengths.
pub fn row_reduce(mut rows: Vec<Vec<Coeff>>) -> RowEchelon {
    let width = rows.first().map_or(0, Vec::len);
    assert!(
        rows.iter().all(|r| r.len() == width),
        "rows differ in length"
    );
    let mut pivots = Vec::new();
    let mut next = 0usize;
    for col in 0..width {
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let inv = rows[next][col].clone();
        for x in &mut rows[next] {
            *x /= &inv;
        }
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != next && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= p * &f;
                }
            }
        }
        pivots.push(col);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    rows.truncate(next);
    RowEchelon { rows, pivots }
}

/// Coefficients of `elem` with respect to an ordered monomial basis.
///
/// Panics if the element has a term outside the basis.
pub fn coefficient_vector(elem: &AlgebraElement, basis: &[TensorMonomial]) -> Vec<Coeff> {
    let mut seen = 0usize;
    let v: Vec<Coeff> = basis
        .iter()
        .map(|mono| {
            let c = elem.coefficient(mono);
            if !c.is_zero() {
                seen += 1;
            }
            c
        })
        .collect();
    assert_eq!(seen, elem.len(), "element has terms outside the basis");
    v
}

/// Rebuild an element from a coefficient vector over a monomial basis.
pub fn element_from_vector(
    ctx: &AlgebraContext,
    basis: &[TensorMonomial],
    coeffs: &[Coeff],
) -> AlgebraElement {
    basis
        .iter()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .fold(AlgebraElement::zero(ctx), |acc, (mono, c)| {
            &acc + &AlgebraElement::monomial(ctx, *mono, c.clone())
        })
}

/// Echelonized basis of the invariant subspace in one degree.
#[derive(Clone, Debug)]
pub struct InvariantBasis {
    pub degree: Degree,
    /// Linearly independent invariant elements with unit pivot coefficients,
    /// in echelon order with respect to the monomial basis.
    pub vectors: Vec<AlgebraElement>,
}

impl InvariantBasis {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }
}

/// Span of the Reynolds images of all basis monomials of the degree,
/// echelonized. This is exactly the invariant subspace.
pub fn invariant_basis(ctx: &AlgebraContext, degree: Degree) -> InvariantBasis {
    let basis = ctx.basis_monomials(degree);
    let rows: Vec<Vec<Coeff>> = basis
        .iter()
        .map(|mono| {
            let image = reynolds(&AlgebraElement::monomial(ctx, *mono, crate::whole(1)));
            coefficient_vector(&image, &basis)
        })
        .collect();
    let echelon = row_reduce(rows);
    let vectors: Vec<AlgebraElement> = echelon
        .rows
        .iter()
        .map(|row| element_from_vector(ctx, &basis, row))
        .collect();
    debug_assert!(vectors
        .iter()
        .all(|v| ctx.weyl().elements().iter().all(|w| w.act(v) == *v)));
    InvariantBasis { degree, vectors }
}

/// Coefficients of a Poincaré series, indexed by degree from 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PoincareSeries {
    coefficients: Vec<usize>,
}

impl PoincareSeries {
    pub fn from_coefficients(coefficients: Vec<usize>) -> PoincareSeries {
        PoincareSeries { coefficients }
    }

    pub fn coefficients(&self) -> &[usize] {
        &self.coefficients
    }

    /// Coefficient of `t^degree`; zero past the computed range.
    pub fn coefficient(&self, degree: Degree) -> usize {
        self.coefficients.get(degree).copied().unwrap_or(0)
    }

    pub fn max_degree(&self) -> Degree {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn total(&self) -> usize {
        self.coefficients.iter().sum()
    }
}

impl fmt::Display for PoincareSeries {
    /// Polynomial form, e.g. `1 + t^2 + 2*t^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, &c) in self.coefficients.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (d, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, c) => write!(f, "{c}*t")?,
                (d, 1) => write!(f, "t^{d}")?,
                (d, c) => write!(f, "{c}*t^{d}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Invariant dimensions in every degree up to `max_degree`, computed
/// independently per degree (in parallel) by brute-force averaging.
pub fn poincare_series(ctx: &AlgebraContext, max_degree: Degree) -> PoincareSeries {
    let coefficients: Vec<usize> = (0..=max_degree)
        .into_par_iter()
        .map(|d| invariant_basis(ctx, d).dimension())
        .collect();
    PoincareSeries { coefficients }
}
