use std::fmt;
use std::sync::Arc;

use super::element::{AlgebraElement, RawProduct};
use super::monomial::{Degree, ExtWord, TensorMonomial};
use super::rewrite::RewriteSystem;
use crate::weyl::WeylGroup;
use crate::{Error, LieGroup, Result};

/// Upper bound on the number of exterior tensor factors; basis enumeration
/// walks all 4^m exterior words per degree.
pub const MAX_FACTORS: usize = 8;

struct ContextInner {
    kind: LieGroup,
    factors: usize,
    rewrite: RewriteSystem,
    weyl: WeylGroup,
}

/// Immutable description of one algebra `A(G, m)`: the group preset, the
/// number of exterior factors, the rewrite system of the coinvariant ring and
/// the enumerated Weyl group. Cheap to clone and safe to share across
/// threads.
#[derive(Clone)]
pub struct AlgebraContext {
    inner: Arc<ContextInner>,
}

impl AlgebraContext {
    /// Build the context for `kind` with `m ≥ 1` exterior factors.
    pub fn new(kind: LieGroup, m: usize) -> Result<AlgebraContext> {
        if m == 0 {
            return Err(Error::ZeroFactors);
        }
        if m > MAX_FACTORS {
            return Err(Error::TooManyFactors(m));
        }
        Ok(AlgebraContext {
            inner: Arc::new(ContextInner {
                kind,
                factors: m,
                rewrite: RewriteSystem::preset(kind),
                weyl: WeylGroup::build(kind)?,
            }),
        })
    }

    pub fn kind(&self) -> LieGroup {
        self.inner.kind
    }

    /// Number of exterior tensor factors.
    pub fn m(&self) -> usize {
        self.inner.factors
    }

    pub fn rewrite(&self) -> &RewriteSystem {
        &self.inner.rewrite
    }

    pub fn weyl(&self) -> &WeylGroup {
        &self.inner.weyl
    }

    /// Two contexts are interchangeable when group and factor count agree.
    pub fn same_context(&self, other: &AlgebraContext) -> bool {
        self.kind() == other.kind() && self.m() == other.m()
    }

    pub(crate) fn describe(&self) -> String {
        format!("{} (m={})", self.kind(), self.m())
    }

    /// All reduced monomials of the given total degree, in monomial order.
    pub fn basis_monomials(&self, degree: Degree) -> Vec<TensorMonomial> {
        let bounds = self.rewrite().exponent_bounds();
        let ext_words = 1u64 << (2 * self.m());
        let mut out = Vec::new();
        for e0 in 0..bounds[0] {
            for e1 in 0..bounds[1] {
                let poly_degree = 2 * (e0 as Degree + e1 as Degree);
                if poly_degree > degree {
                    continue;
                }
                let want = (degree - poly_degree) as u32;
                for bits in 0..ext_words {
                    if bits.count_ones() == want {
                        out.push(TensorMonomial::new([e0, e1], ext_from_bits(bits)));
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// The reduced polynomial monomials of one cohomological degree — the
    /// basis of the coinvariant ring in that degree, ignoring the exterior
    /// factors.
    pub fn poly_basis(&self, degree: Degree) -> Vec<[u16; 2]> {
        if !degree.is_multiple_of(2) {
            return Vec::new();
        }
        let bounds = self.rewrite().exponent_bounds();
        let mut out = Vec::new();
        for e0 in 0..bounds[0] {
            for e1 in 0..bounds[1] {
                if 2 * (e0 as Degree + e1 as Degree) == degree {
                    out.push([e0, e1]);
                }
            }
        }
        out.sort();
        out
    }

    /// Dimensions of the coinvariant ring by degree, through its top degree.
    pub fn poly_dimensions(&self) -> Vec<usize> {
        (0..=self.poly_top_degree())
            .map(|d| self.poly_basis(d).len())
            .collect()
    }

    /// Top cohomological degree of the coinvariant ring.
    pub fn poly_top_degree(&self) -> Degree {
        let bounds = self.rewrite().exponent_bounds();
        2 * ((bounds[0] - 1) as Degree + (bounds[1] - 1) as Degree)
    }

    /// Top degree of the whole tensor algebra.
    pub fn top_degree(&self) -> Degree {
        self.poly_top_degree() + 2 * self.m()
    }

    /// Dimension of the whole algebra, by enumeration over all degrees.
    pub fn total_dimension(&self) -> usize {
        (0..=self.top_degree())
            .map(|d| self.basis_monomials(d).len())
            .sum()
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement::zero(self)
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement::one(self)
    }

    /// Start a product of generators written in the full alphabet, including
    /// the eliminated third variables; see [`RawProduct`].
    pub fn raw(&self) -> RawProduct {
        RawProduct::new(self)
    }
}

fn ext_from_bits(bits: u64) -> ExtWord {
    let mut positions = Vec::new();
    let mut b = bits;
    while b != 0 {
        let p = b.trailing_zeros() as usize;
        positions.push((p / 2, p % 2));
        b &= b - 1;
    }
    ExtWord::from_positions(&positions)
}

impl fmt::Debug for AlgebraContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraContext({})", self.describe())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_count_is_validated() {
        assert_eq!(
            AlgebraContext::new(LieGroup::Su3, 0).unwrap_err(),
            Error::ZeroFactors
        );
        assert_eq!(
            AlgebraContext::new(LieGroup::Su3, 9).unwrap_err(),
            Error::TooManyFactors(9)
        );
    }

    #[test]
    fn g2_reduced_poly_monomials() {
        let ctx = AlgebraContext::new(LieGroup::G2, 2).unwrap();
        let mut expect = Vec::new();
        for i in 0..=5u16 {
            for j in 0..=1u16 {
                expect.push([i, j]);
            }
        }
        expect.sort();
        let got: Vec<[u16; 2]> = (0..=ctx.poly_top_degree())
            .flat_map(|d| ctx.poly_basis(d))
            .collect();
        let mut got_sorted = got;
        got_sorted.sort();
        assert_eq!(got_sorted, expect);
    }

    #[test]
    fn total_dimensions_match_group_orders() {
        // |W| · 4^m reduced monomials in total
        let su3 = AlgebraContext::new(LieGroup::Su3, 1).unwrap();
        assert_eq!(su3.total_dimension(), 24);
        let sp2 = AlgebraContext::new(LieGroup::Sp2, 2).unwrap();
        assert_eq!(sp2.total_dimension(), 128);
        let g2 = AlgebraContext::new(LieGroup::G2, 2).unwrap();
        assert_eq!(g2.total_dimension(), 192);
    }

    #[test]
    fn basis_examples() {
        let su3 = AlgebraContext::new(LieGroup::Su3, 2).unwrap();
        assert_eq!(su3.basis_monomials(0), vec![TensorMonomial::unit()]);

        let sp2 = AlgebraContext::new(LieGroup::Sp2, 2).unwrap();
        let degree_one = sp2.basis_monomials(1);
        assert_eq!(degree_one.len(), 4);
        assert!(degree_one
            .iter()
            .all(|m| m.poly_exponents() == [0, 0] && m.exterior().degree() == 1));
    }

    #[test]
    fn coinvariant_dimensions() {
        let su3 = AlgebraContext::new(LieGroup::Su3, 1).unwrap();
        assert_eq!(su3.poly_dimensions(), vec![1, 0, 2, 0, 2, 0, 1]);
        let sp2 = AlgebraContext::new(LieGroup::Sp2, 1).unwrap();
        assert_eq!(sp2.poly_dimensions(), vec![1, 0, 2, 0, 2, 0, 2, 0, 1]);
        let g2 = AlgebraContext::new(LieGroup::G2, 1).unwrap();
        assert_eq!(
            g2.poly_dimensions(),
            vec![1, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 1]
        );
    }
}
