//! The Weyl groups of SU(3), Sp(2) and G₂ as integer 2×2 matrix groups, and
//! their diagonal action on algebra elements.
//!
//! A [`GroupElement`] stores the images of the retained degree-2 generators
//! (x₁, x₂) as the rows of an integer matrix. The same matrix acts on the
//! degree-1 generators (y₁ʲ, y₂ʲ) of every exterior factor, so the action is
//! a single linear substitution applied to all tensor factors at once.
//!
//! Presets:
//! - SU(3): the six matrices induced by permuting x₁, x₂, x₃ after the
//!   elimination x₃ = −x₁−x₂;
//! - Sp(2): the eight signed permutations of x₁, x₂;
//! - G₂: the dihedral group of order 12, closed over the two generator
//!   matrices a: (x₁, x₂) ↦ (x₁+x₂, −x₁) and b: (x₁, x₂) ↦ (x₁, −x₁−x₂).

use std::collections::BTreeSet;

use crate::algebra::{whole, AlgebraElement};
use crate::{AlgebraContext, Error, LieGroup, Result};

/// One Weyl group element: an invertible integer substitution on the
/// retained generators.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GroupElement {
    kind: LieGroup,
    mat: [[i64; 2]; 2],
}

impl GroupElement {
    fn new(kind: LieGroup, mat: [[i64; 2]; 2]) -> GroupElement {
        GroupElement { kind, mat }
    }

    pub fn kind(&self) -> LieGroup {
        self.kind
    }

    /// Row `i` is the image of generator `i` in the (x₁, x₂) basis.
    pub fn matrix(&self) -> [[i64; 2]; 2] {
        self.mat
    }

    pub fn is_identity(&self) -> bool {
        self.mat == [[1, 0], [0, 1]]
    }

    /// Group product `self ∘ inner`: apply `inner` first, then `self`.
    pub fn compose(&self, inner: &GroupElement) -> GroupElement {
        assert_eq!(
            self.kind, inner.kind,
            "composing elements of different groups"
        );
        // With rows as images of variables, substitution composition is the
        // matrix product with the inner matrix on the left.
        let (a, b) = (inner.mat, self.mat);
        let mut mat = [[0i64; 2]; 2];
        for i in 0..2 {
            for l in 0..2 {
                mat[i][l] = a[i][0] * b[0][l] + a[i][1] * b[1][l];
            }
        }
        GroupElement::new(self.kind, mat)
    }

    pub fn determinant(&self) -> i64 {
        self.mat[0][0] * self.mat[1][1] - self.mat[0][1] * self.mat[1][0]
    }

    pub fn inverse(&self) -> GroupElement {
        let det = self.determinant();
        assert!(det == 1 || det == -1, "group matrices are unimodular");
        let [[p, q], [r, s]] = self.mat;
        GroupElement::new(self.kind, [[det * s, det * -q], [det * -r, det * p]])
    }

    /// Apply the substitution to an element: a degree-preserving ring
    /// homomorphism. Panics if the element belongs to a different group;
    /// see [`GroupElement::checked_act`].
    pub fn act(&self, v: &AlgebraElement) -> AlgebraElement {
        self.checked_act(v).expect("group/context mismatch in act")
    }

    pub fn checked_act(&self, v: &AlgebraElement) -> Result<AlgebraElement> {
        let ctx = v.context();
        if self.kind != ctx.kind() {
            return Err(Error::GroupMismatch(self.kind, ctx.kind()));
        }
        let x_img = [self.linear_x(ctx, 0), self.linear_x(ctx, 1)];
        let y_img: Vec<[AlgebraElement; 2]> = (0..ctx.m())
            .map(|j| [self.linear_y(ctx, 0, j), self.linear_y(ctx, 1, j)])
            .collect();
        let mut out = AlgebraElement::zero(ctx);
        for (mono, c) in v.terms() {
            let mut acc = AlgebraElement::scalar(ctx, c.clone());
            let exps = mono.poly_exponents();
            for var in 0..2 {
                for _ in 0..exps[var] {
                    acc = &acc * &x_img[var];
                }
            }
            for (factor, index) in mono.exterior().positions() {
                acc = &acc * &y_img[factor][index];
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    fn linear_x(&self, ctx: &AlgebraContext, var: usize) -> AlgebraElement {
        &AlgebraElement::var_x(ctx, 1).scale(&whole(self.mat[var][0]))
            + &AlgebraElement::var_x(ctx, 2).scale(&whole(self.mat[var][1]))
    }

    fn linear_y(&self, ctx: &AlgebraContext, index: usize, factor: usize) -> AlgebraElement {
        &AlgebraElement::var_y(ctx, 1, factor + 1).scale(&whole(self.mat[index][0]))
            + &AlgebraElement::var_y(ctx, 2, factor + 1).scale(&whole(self.mat[index][1]))
    }
}

/// A fully enumerated Weyl group, closed under product and inverse.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    kind: LieGroup,
    elements: Vec<GroupElement>,
}

impl WeylGroup {
    /// Enumerate the group for one preset and verify closure, identity,
    /// inverses and the expected order.
    pub fn build(kind: LieGroup) -> Result<WeylGroup> {
        let elements = match kind {
            LieGroup::Su3 => {
                // images of x_i under all six permutations of {x1, x2, x3}
                const S3: [[usize; 3]; 6] = [
                    [0, 1, 2],
                    [1, 0, 2],
                    [0, 2, 1],
                    [2, 1, 0],
                    [1, 2, 0],
                    [2, 0, 1],
                ];
                S3.iter()
                    .map(|perm| {
                        let row = |target: usize| match target {
                            0 => [1, 0],
                            1 => [0, 1],
                            _ => [-1, -1],
                        };
                        GroupElement::new(kind, [row(perm[0]), row(perm[1])])
                    })
                    .collect()
            }
            LieGroup::Sp2 => {
                let mut out = Vec::new();
                for swap in [false, true] {
                    for s0 in [1i64, -1] {
                        for s1 in [1i64, -1] {
                            let unit = |to: usize, s: i64| {
                                let mut row = [0i64; 2];
                                row[to] = s;
                                row
                            };
                            let (t0, t1) = if swap { (1, 0) } else { (0, 1) };
                            out.push(GroupElement::new(kind, [unit(t0, s0), unit(t1, s1)]));
                        }
                    }
                }
                out
            }
            LieGroup::G2 => closure(&WeylGroup::generators(kind))?,
        };

        let mut elements = elements;
        elements.sort();
        let group = WeylGroup { kind, elements };
        group.validate()?;
        Ok(group)
    }

    /// Generating matrices used to build each preset.
    pub fn generators(kind: LieGroup) -> Vec<GroupElement> {
        match kind {
            // the transpositions (1 2) and (2 3)
            LieGroup::Su3 => vec![
                GroupElement::new(kind, [[0, 1], [1, 0]]),
                GroupElement::new(kind, [[1, 0], [-1, -1]]),
            ],
            // swap and one sign flip
            LieGroup::Sp2 => vec![
                GroupElement::new(kind, [[0, 1], [1, 0]]),
                GroupElement::new(kind, [[-1, 0], [0, 1]]),
            ],
            // the dihedral generators a (order 6) and b (order 2)
            LieGroup::G2 => vec![
                GroupElement::new(kind, [[1, 1], [-1, 0]]),
                GroupElement::new(kind, [[1, 0], [-1, -1]]),
            ],
        }
    }

    fn validate(&self) -> Result<()> {
        let expected = self.kind.weyl_order();
        if self.elements.len() != expected {
            return Err(Error::Internal(format!(
                "{} enumerated {} elements, expected {}",
                self.kind,
                self.elements.len(),
                expected
            )));
        }
        let set: BTreeSet<_> = self.elements.iter().copied().collect();
        if set.len() != expected {
            return Err(Error::Internal(format!(
                "{} has duplicate elements",
                self.kind
            )));
        }
        if !self.elements.iter().any(GroupElement::is_identity) {
            return Err(Error::Internal(format!(
                "{} is missing the identity",
                self.kind
            )));
        }
        for a in &self.elements {
            if !set.contains(&a.inverse()) {
                return Err(Error::Internal(format!(
                    "{} not closed under inverse",
                    self.kind
                )));
            }
            for b in &self.elements {
                if !set.contains(&a.compose(b)) {
                    return Err(Error::Internal(format!(
                        "{} not closed under product",
                        self.kind
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> LieGroup {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in a fixed deterministic order.
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn identity(&self) -> &GroupElement {
        self.elements
            .iter()
            .find(|g| g.is_identity())
            .expect("validated groups contain the identity")
    }
}

/// Breadth-first closure of a generating set; errors out instead of growing
/// past any plausible order.
fn closure(generators: &[GroupElement]) -> Result<Vec<GroupElement>> {
    let kind = generators[0].kind();
    let identity = GroupElement::new(kind, [[1, 0], [0, 1]]);
    let mut seen: BTreeSet<GroupElement> = BTreeSet::new();
    let mut queue = vec![identity];
    seen.insert(identity);
    while let Some(g) = queue.pop() {
        for gen in generators {
            let next = gen.compose(&g);
            if seen.insert(next) {
                queue.push(next);
            }
        }
        if seen.len() > 64 {
            return Err(Error::Internal(format!(
                "closure for {kind} exceeded 64 elements"
            )));
        }
    }
    Ok(seen.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraContext;

    #[test]
    fn group_orders() {
        assert_eq!(WeylGroup::build(LieGroup::Su3).unwrap().order(), 6);
        assert_eq!(WeylGroup::build(LieGroup::Sp2).unwrap().order(), 8);
        assert_eq!(WeylGroup::build(LieGroup::G2).unwrap().order(), 12);
    }

    #[test]
    fn g2_generators_satisfy_the_dihedral_relations() {
        let gens = WeylGroup::generators(LieGroup::G2);
        let (a, b) = (gens[0], gens[1]);
        assert_eq!(a.matrix(), [[1, 1], [-1, 0]]);
        assert_eq!(b.matrix(), [[1, 0], [-1, -1]]);

        let mut a6 = a;
        for _ in 0..5 {
            a6 = a6.compose(&a);
        }
        assert!(a6.is_identity());
        assert!(b.compose(&b).is_identity());
        let ab = a.compose(&b);
        assert!(ab.compose(&ab).is_identity());
        // a has order exactly 6
        let a3 = a.compose(&a).compose(&a);
        assert!(!a3.is_identity());
    }

    #[test]
    fn identity_acts_trivially() {
        let ctx = AlgebraContext::new(LieGroup::G2, 2).unwrap();
        let v = ctx.raw().x(1, 2).y(2, 1).y(1, 2).build().unwrap();
        let id = *ctx.weyl().identity();
        assert_eq!(id.act(&v), v);
    }

    #[test]
    fn su3_transposition_swaps_both_alphabets() {
        let ctx = AlgebraContext::new(LieGroup::Su3, 2).unwrap();
        let swap = *ctx
            .weyl()
            .elements()
            .iter()
            .find(|g| g.matrix() == [[0, 1], [1, 0]])
            .unwrap();
        let x1y1 = ctx.raw().x(1, 1).y(1, 1).build().unwrap();
        let x2y2 = ctx.raw().x(2, 1).y(2, 1).build().unwrap();
        assert_eq!(swap.act(&x1y1), x2y2);
    }

    #[test]
    fn act_is_a_ring_homomorphism() {
        let ctx = AlgebraContext::new(LieGroup::G2, 2).unwrap();
        let u = ctx.raw().x(1, 1).y(2, 1).build().unwrap();
        let v = ctx.raw().x(2, 1).y(1, 2).build().unwrap();
        for w in ctx.weyl().elements() {
            assert_eq!(w.act(&(&u * &v)), &w.act(&u) * &w.act(&v));
        }
        for w1 in ctx.weyl().elements() {
            for w2 in ctx.weyl().elements() {
                assert_eq!(
                    w1.compose(w2).act(&u),
                    w1.act(&w2.act(&u)),
                    "composition vs substitution order"
                );
            }
        }
    }

    #[test]
    fn degree_two_relations_normalize_to_zero_and_stay_fixed() {
        // e2-type elements are rewritten to 0, so every action fixes them
        let g2 = AlgebraContext::new(LieGroup::G2, 2).unwrap();
        let e2 = [(1, 2), (1, 3), (2, 3)]
            .iter()
            .fold(g2.zero(), |acc, &(i, j)| {
                &acc + &g2.raw().x(i, 1).x(j, 1).build().unwrap()
            });
        assert!(e2.is_zero());

        let sp2 = AlgebraContext::new(LieGroup::Sp2, 2).unwrap();
        let q = &sp2.raw().x(1, 2).build().unwrap() + &sp2.raw().x(2, 2).build().unwrap();
        assert!(q.is_zero());
        let e2_sq = sp2.raw().x(1, 2).x(2, 2).build().unwrap();
        for w in sp2.weyl().elements() {
            assert_eq!(w.act(&e2_sq), e2_sq);
        }
    }

    #[test]
    fn acting_across_groups_is_an_error() {
        let su3 = AlgebraContext::new(LieGroup::Su3, 2).unwrap();
        let sp2 = AlgebraContext::new(LieGroup::Sp2, 2).unwrap();
        let w = *sp2.weyl().identity();
        assert!(matches!(
            w.checked_act(&su3.one()),
            Err(Error::GroupMismatch(LieGroup::Sp2, LieGroup::Su3))
        ));
    }
}
