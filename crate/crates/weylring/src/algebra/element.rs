use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::context::AlgebraContext;
use super::monomial::{Degree, ExtWord, TensorMonomial};
use crate::{Error, Result};

/// Exact rational coefficient: reduced to lowest terms, positive denominator.
pub type Coeff = num_rational::BigRational;

/// The rational `numer/denom`.
pub fn rat(numer: i64, denom: i64) -> Coeff {
    Coeff::new(numer.into(), denom.into())
}

/// The rational `n/1`.
pub fn whole(n: i64) -> Coeff {
    Coeff::from_integer(n.into())
}

/// An element of the tensor algebra in normal form: an ordered map from
/// reduced monomials to nonzero rational coefficients. Two equal elements
/// have identical term maps.
#[derive(Clone)]
pub struct AlgebraElement {
    ctx: AlgebraContext,
    terms: BTreeMap<TensorMonomial, Coeff>,
}

impl AlgebraElement {
    pub fn zero(ctx: &AlgebraContext) -> AlgebraElement {
        AlgebraElement {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &AlgebraContext) -> AlgebraElement {
        AlgebraElement::scalar(ctx, whole(1))
    }

    pub fn scalar(ctx: &AlgebraContext, c: Coeff) -> AlgebraElement {
        let mut out = AlgebraElement::zero(ctx);
        if !c.is_zero() {
            out.terms.insert(TensorMonomial::unit(), c);
        }
        out
    }

    /// A single reduced monomial with the given coefficient.
    ///
    /// Panics if the monomial is not reduced or uses more exterior factors
    /// than the context has.
    pub fn monomial(ctx: &AlgebraContext, mono: TensorMonomial, c: Coeff) -> AlgebraElement {
        assert!(
            ctx.rewrite().is_reduced(mono.poly_exponents()),
            "monomial is not reduced"
        );
        assert!(
            mono.exterior().bits() < 1u64 << (2 * ctx.m()),
            "monomial uses exterior factors beyond the context"
        );
        let mut out = AlgebraElement::zero(ctx);
        if !c.is_zero() {
            out.terms.insert(mono, c);
        }
        out
    }

    /// The retained variable `x_index` (1-based, so 1 or 2).
    pub fn var_x(ctx: &AlgebraContext, index: usize) -> AlgebraElement {
        assert!((1..=2).contains(&index), "retained x index must be 1 or 2");
        let mut poly = [0u16; 2];
        poly[index - 1] = 1;
        AlgebraElement::monomial(ctx, TensorMonomial::new(poly, ExtWord::EMPTY), whole(1))
    }

    /// The retained exterior generator `y_index^factor` (both 1-based).
    pub fn var_y(ctx: &AlgebraContext, index: usize, factor: usize) -> AlgebraElement {
        assert!((1..=2).contains(&index), "retained y index must be 1 or 2");
        assert!(
            (1..=ctx.m()).contains(&factor),
            "factor out of range for this context"
        );
        AlgebraElement::monomial(
            ctx,
            TensorMonomial::new([0, 0], ExtWord::generator(index - 1, factor - 1)),
            whole(1),
        )
    }

    pub fn context(&self) -> &AlgebraContext {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&TensorMonomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &TensorMonomial) -> Coeff {
        self.terms.get(mono).cloned().unwrap_or_else(Coeff::zero)
    }

    /// The common degree of all terms, `None` for 0 or inhomogeneous sums.
    pub fn homogeneous_degree(&self) -> Option<Degree> {
        let mut it = self.terms.keys().map(TensorMonomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, c: &Coeff) -> AlgebraElement {
        if c.is_zero() {
            return AlgebraElement::zero(&self.ctx);
        }
        AlgebraElement {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    fn require_same_context(&self, rhs: &AlgebraElement) -> Result<()> {
        if self.ctx.same_context(&rhs.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch(
                self.ctx.describe(),
                rhs.ctx.describe(),
            ))
        }
    }

    pub fn checked_add(&self, rhs: &AlgebraElement) -> Result<AlgebraElement> {
        self.require_same_context(rhs)?;
        let mut terms = self.terms.clone();
        for (mono, c) in &rhs.terms {
            merge_term(&mut terms, *mono, c.clone());
        }
        Ok(AlgebraElement {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    /// Graded-commutative product in normal form. Errors when the operands
    /// live in different contexts.
    pub fn checked_mul(&self, rhs: &AlgebraElement) -> Result<AlgebraElement> {
        self.require_same_context(rhs)?;
        let rewrite = self.ctx.rewrite();
        let mut terms: BTreeMap<TensorMonomial, Coeff> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let (ea, eb) = (ma.exterior(), mb.exterior());
                if ea.intersects(eb) {
                    continue; // odd generators square to zero
                }
                let mut c = ca * cb;
                if ea.koszul_sign(eb) < 0 {
                    c = -c;
                }
                let ext = ea.union(eb);
                let (pa, pb) = (ma.poly_exponents(), mb.poly_exponents());
                for (poly, k) in rewrite.reduce([pa[0] + pb[0], pa[1] + pb[1]]) {
                    merge_term(&mut terms, TensorMonomial::new(poly, ext), &c * whole(k));
                }
            }
        }
        Ok(AlgebraElement {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    /// `self` to the `n`-th power.
    pub fn pow(&self, n: u16) -> AlgebraElement {
        let mut out = AlgebraElement::one(&self.ctx);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Re-run the rewrite rules on every stored term. Normal forms are
    /// canonical, so this is the identity map; exposed for the idempotence
    /// checks.
    pub fn normal_form(&self) -> AlgebraElement {
        let rewrite = self.ctx.rewrite();
        let mut terms: BTreeMap<TensorMonomial, Coeff> = BTreeMap::new();
        for (mono, c) in &self.terms {
            for (poly, k) in rewrite.reduce(mono.poly_exponents()) {
                merge_term(
                    &mut terms,
                    TensorMonomial::new(poly, mono.exterior()),
                    c * whole(k),
                );
            }
        }
        AlgebraElement {
            ctx: self.ctx.clone(),
            terms,
        }
    }
}

fn merge_term(terms: &mut BTreeMap<TensorMonomial, Coeff>, mono: TensorMonomial, c: Coeff) {
    if c.is_zero() {
        return;
    }
    match terms.entry(mono) {
        std::collections::btree_map::Entry::Vacant(slot) => {
            slot.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut slot) => {
            *slot.get_mut() += c;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.same_context(&other.ctx) && self.terms == other.terms
    }
}

impl Eq for AlgebraElement {}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_add(rhs).expect("context mismatch in +")
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_add(&-rhs).expect("context mismatch in -")
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.checked_mul(rhs).expect("context mismatch in *")
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        AlgebraElement {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl fmt::Display for AlgebraElement {
    /// Deterministic text rendering, e.g. `-1/2*x1^3*x2 y1^1y2^1 | y2^2`.
    /// Terms appear in monomial order; coefficients are always explicit.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (mono, c) in &self.terms {
            let magnitude = if first {
                first = false;
                if c.is_negative() {
                    f.write_str("-")?;
                }
                c.abs()
            } else if c.is_negative() {
                f.write_str(" - ")?;
                c.abs()
            } else {
                f.write_str(" + ")?;
                c.clone()
            };
            let body = mono.render(self.ctx.m());
            if body.is_empty() {
                write!(f, "{magnitude}")?;
            } else if mono.poly_exponents() == [0, 0] {
                write!(f, "{magnitude} {body}")?;
            } else {
                write!(f, "{magnitude}*{body}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraElement[{} | {}]", self.ctx.describe(), self)
    }
}

enum RawFactor {
    X { index: usize, power: u16 },
    Y { index: usize, factor: usize },
}

/// Builder for products written in the full generator alphabet, including the
/// eliminated third variable x₃ and generators y₃ʲ where the preset has them.
/// Factors multiply in the order they are pushed, so odd generators pick up
/// the usual signs when the result is normalized.
///
/// ```
/// # use weylring::{AlgebraContext, LieGroup};
/// let ctx = AlgebraContext::new(LieGroup::G2, 2).unwrap();
/// // 3·x₁⁴x₂·y₁¹y₂¹y₂²
/// let v = ctx.raw().coeff(3).x(1, 4).x(2, 1).y(1, 1).y(2, 1).y(2, 2).build().unwrap();
/// assert_eq!(v.homogeneous_degree(), Some(13));
/// ```
pub struct RawProduct {
    ctx: AlgebraContext,
    coeff: Coeff,
    factors: Vec<RawFactor>,
}

impl RawProduct {
    pub(crate) fn new(ctx: &AlgebraContext) -> RawProduct {
        RawProduct {
            ctx: ctx.clone(),
            coeff: whole(1),
            factors: Vec::new(),
        }
    }

    /// Multiply the running coefficient by an integer.
    pub fn coeff(mut self, n: i64) -> RawProduct {
        self.coeff *= whole(n);
        self
    }

    /// Multiply the running coefficient by `numer/denom`.
    pub fn coeff_rat(mut self, numer: i64, denom: i64) -> RawProduct {
        self.coeff *= rat(numer, denom);
        self
    }

    /// Append `x_index^power` (index 1..=3; 3 only where eliminated).
    pub fn x(mut self, index: usize, power: u16) -> RawProduct {
        self.factors.push(RawFactor::X { index, power });
        self
    }

    /// Append the exterior generator `y_index^factor` (index 1..=3).
    pub fn y(mut self, index: usize, factor: usize) -> RawProduct {
        self.factors.push(RawFactor::Y { index, factor });
        self
    }

    /// Expand eliminations, sort odd generators with signs and reduce: the
    /// normal form of the written product.
    pub fn build(self) -> Result<AlgebraElement> {
        let ctx = &self.ctx;
        let mut out = AlgebraElement::scalar(ctx, self.coeff);
        for factor in &self.factors {
            let piece = match *factor {
                RawFactor::X { index, power } => match index {
                    1 | 2 => AlgebraElement::var_x(ctx, index).pow(power),
                    3 => {
                        let sub = ctx
                            .rewrite()
                            .poly_elimination
                            .ok_or_else(|| Error::UnavailableGenerator("x3".to_string()))?;
                        let lin = &AlgebraElement::var_x(ctx, 1).scale(&whole(sub[0]))
                            + &AlgebraElement::var_x(ctx, 2).scale(&whole(sub[1]));
                        lin.pow(power)
                    }
                    _ => return Err(Error::UnavailableGenerator(format!("x{index}"))),
                },
                RawFactor::Y { index, factor } => {
                    if !(1..=ctx.m()).contains(&factor) {
                        return Err(Error::UnavailableGenerator(format!("y{index}^{factor}")));
                    }
                    match index {
                        1 | 2 => AlgebraElement::var_y(ctx, index, factor),
                        3 => {
                            let sub = ctx.rewrite().ext_elimination.ok_or_else(|| {
                                Error::UnavailableGenerator(format!("y3^{factor}"))
                            })?;
                            &AlgebraElement::var_y(ctx, 1, factor).scale(&whole(sub[0]))
                                + &AlgebraElement::var_y(ctx, 2, factor).scale(&whole(sub[1]))
                        }
                        _ => return Err(Error::UnavailableGenerator(format!("y{index}^{factor}"))),
                    }
                }
            };
            out = out.checked_mul(&piece)?;
        }
        Ok(out)
    }
}

impl Mul for AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: AlgebraElement) -> AlgebraElement {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::LieGroup;

    fn ctx(kind: LieGroup, m: usize) -> AlgebraContext {
        AlgebraContext::new(kind, m).unwrap()
    }

    #[test]
    fn odd_generators_square_to_zero() {
        let c = ctx(LieGroup::Sp2, 2);
        let y = AlgebraElement::var_y(&c, 1, 1);
        assert!((&y * &y).is_zero());
    }

    #[test]
    fn odd_generators_anticommute() {
        let c = ctx(LieGroup::Sp2, 2);
        let y1 = AlgebraElement::var_y(&c, 1, 1);
        let y2 = AlgebraElement::var_y(&c, 2, 1);
        assert_eq!(&y2 * &y1, -&(&y1 * &y2));
    }

    #[test]
    fn sp2_product_matches_hand_expansion() {
        // (x1 y1^1 + x2 y2^1)(x1^2 y1^1y1^2 + x2^2 y2^1y2^2)
        //   = -x1^3 y1^1y2^1y2^2 - x2^3 y2^1y1^1y1^2
        let c = ctx(LieGroup::Sp2, 2);
        let a =
            &c.raw().x(1, 1).y(1, 1).build().unwrap() + &c.raw().x(2, 1).y(2, 1).build().unwrap();
        let b = &c.raw().x(1, 2).y(1, 1).y(1, 2).build().unwrap()
            + &c.raw().x(2, 2).y(2, 1).y(2, 2).build().unwrap();
        let product = &a * &b;

        let expect = &c
            .raw()
            .coeff(-1)
            .x(1, 3)
            .y(1, 1)
            .y(2, 1)
            .y(2, 2)
            .build()
            .unwrap()
            + &c.raw()
                .coeff(-1)
                .x(2, 3)
                .y(2, 1)
                .y(1, 1)
                .y(1, 2)
                .build()
                .unwrap();
        assert_eq!(product, expect);
        assert!(!product.is_zero());
    }

    #[test]
    fn g2_eliminations() {
        let c = ctx(LieGroup::G2, 2);
        let x3 = c.raw().x(3, 1).build().unwrap();
        let expect = &(-&AlgebraElement::var_x(&c, 1)) - &AlgebraElement::var_x(&c, 2);
        assert_eq!(x3, expect);

        assert!(c.raw().x(1, 6).build().unwrap().is_zero());

        let x2_cubed = c.raw().x(2, 3).build().unwrap();
        let x1_cubed = c.raw().x(1, 3).build().unwrap();
        assert_eq!(x2_cubed, x1_cubed);
    }

    #[test]
    fn sp2_fourth_power_vanishes() {
        let c = ctx(LieGroup::Sp2, 2);
        assert!(c.raw().x(1, 4).build().unwrap().is_zero());
        // x1^2 + x2^2 is a coinvariant relation
        let sum = &c.raw().x(1, 2).build().unwrap() + &c.raw().x(2, 2).build().unwrap();
        assert!(sum.is_zero());
    }

    #[test]
    fn sp2_has_no_third_variable() {
        let c = ctx(LieGroup::Sp2, 2);
        assert_eq!(
            c.raw().x(3, 1).build().unwrap_err(),
            Error::UnavailableGenerator("x3".to_string())
        );
    }

    #[test]
    fn su3_b1_expands_through_the_elimination() {
        // y1^1y1^2 + y2^1y2^2 + y3^1y3^2 = 2 y1^1y1^2 + y1^1y2^2 + y2^1y1^2 + 2 y2^1y2^2
        let c = ctx(LieGroup::Su3, 2);
        let b1 = (1..=3).fold(c.zero(), |acc, l| {
            &acc + &c.raw().y(l, 1).y(l, 2).build().unwrap()
        });
        let coeffs: Vec<(Vec<(usize, usize)>, i64)> = vec![
            (vec![(0, 0), (1, 0)], 2), // y1^1 y1^2
            (vec![(0, 0), (1, 1)], 1), // y1^1 y2^2
            (vec![(0, 1), (1, 0)], 1), // y2^1 y1^2
            (vec![(0, 1), (1, 1)], 2), // y2^1 y2^2
        ];
        assert_eq!(b1.len(), 4);
        for (positions, k) in coeffs {
            let mono = TensorMonomial::new([0, 0], ExtWord::from_positions(&positions));
            assert_eq!(b1.coefficient(&mono), whole(k));
        }
    }

    #[test]
    fn context_mismatch_is_reported() {
        let a = ctx(LieGroup::Su3, 2).one();
        let b = ctx(LieGroup::Sp2, 2).one();
        assert!(matches!(
            a.checked_mul(&b),
            Err(Error::ContextMismatch(_, _))
        ));
        let c = ctx(LieGroup::Su3, 1).one();
        assert!(matches!(
            a.checked_add(&c),
            Err(Error::ContextMismatch(_, _))
        ));
    }

    #[test]
    fn normal_form_is_idempotent() {
        let c = ctx(LieGroup::G2, 2);
        let v = &c.raw().x(3, 2).y(3, 1).build().unwrap()
            + &c.raw()
                .coeff_rat(-1, 2)
                .x(1, 1)
                .x(2, 1)
                .y(2, 2)
                .build()
                .unwrap();
        assert_eq!(v.normal_form(), v);
        assert_eq!(v.normal_form().normal_form(), v.normal_form());
    }

    #[test]
    fn degree_additivity() {
        let c = ctx(LieGroup::G2, 2);
        let u = c.raw().x(1, 2).y(1, 1).build().unwrap();
        let v = c.raw().x(2, 1).y(2, 2).build().unwrap();
        let product = &u * &v;
        assert!(!product.is_zero());
        assert_eq!(
            product.homogeneous_degree().unwrap(),
            u.homogeneous_degree().unwrap() + v.homogeneous_degree().unwrap()
        );
    }

    #[test]
    fn rendering_matches_the_documented_format() {
        let c = ctx(LieGroup::Sp2, 2);
        let term = c
            .raw()
            .coeff_rat(-1, 2)
            .x(1, 3)
            .x(2, 1)
            .y(1, 1)
            .y(2, 1)
            .y(2, 2)
            .build()
            .unwrap();
        assert_eq!(term.to_string(), "-1/2*x1^3*x2 y1^1y2^1 | y2^2");
        assert_eq!(c.zero().to_string(), "0");
        assert_eq!(c.one().to_string(), "1");
        let y_only = c.raw().coeff_rat(1, 3).y(2, 2).build().unwrap();
        assert_eq!(y_only.to_string(), "1/3 1 | y2^2");
    }
}
