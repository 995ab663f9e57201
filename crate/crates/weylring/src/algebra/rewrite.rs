//! Top-reduction rules presenting each coinvariant ring on the retained
//! variables x₁, x₂.
//!
//! Every preset consists of an optional elimination for the dropped third
//! variable, one power rule rewriting x₂² into lower x₂-degree, and one top
//! nilpotence bound on x₁. Reduction terminates because the power rule
//! strictly lowers the x₂ exponent, and the result is independent of the
//! order in which applicable rules fire; `reduce_with` exposes the rule
//! choice so tests can exercise that confluence.

use crate::LieGroup;

/// Rewrites `var^power` into `replacement` wherever the exponent of `var`
/// reaches `power`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerRule {
    pub var: usize,
    pub power: u16,
    /// Expansion of `var^power` over the retained variables, as
    /// (exponent vector, integer coefficient) pairs.
    pub replacement: Vec<([u16; 2], i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteSystem {
    /// Image of the eliminated third polynomial variable on (x₁, x₂);
    /// `None` when the preset starts with two variables.
    pub poly_elimination: Option<[i64; 2]>,
    /// Image of the eliminated third exterior generator of every factor.
    pub ext_elimination: Option<[i64; 2]>,
    pub power_rules: Vec<PowerRule>,
    /// (variable, power) pairs whose reach sends a monomial to zero.
    pub top_nilpotence: Vec<(usize, u16)>,
}

impl RewriteSystem {
    /// The rewrite preset for one group's coinvariant ring.
    pub fn preset(kind: LieGroup) -> RewriteSystem {
        let third = Some([-1, -1]);
        match kind {
            // x3 -> -x1-x2, x2^2 -> -x1^2 - x1*x2, x1^3 -> 0
            LieGroup::Su3 => RewriteSystem {
                poly_elimination: third,
                ext_elimination: third,
                power_rules: vec![PowerRule {
                    var: 1,
                    power: 2,
                    replacement: vec![([2, 0], -1), ([1, 1], -1)],
                }],
                top_nilpotence: vec![(0, 3)],
            },
            // x2^2 -> -x1^2, x1^4 -> 0
            LieGroup::Sp2 => RewriteSystem {
                poly_elimination: None,
                ext_elimination: None,
                power_rules: vec![PowerRule {
                    var: 1,
                    power: 2,
                    replacement: vec![([2, 0], -1)],
                }],
                top_nilpotence: vec![(0, 4)],
            },
            // x3 -> -x1-x2, x2^2 -> -x1^2 - x1*x2, x1^6 -> 0
            LieGroup::G2 => RewriteSystem {
                poly_elimination: third,
                ext_elimination: third,
                power_rules: vec![PowerRule {
                    var: 1,
                    power: 2,
                    replacement: vec![([2, 0], -1), ([1, 1], -1)],
                }],
                top_nilpotence: vec![(0, 6)],
            },
        }
    }

    /// True when no rule applies to the exponent vector.
    pub fn is_reduced(&self, exponents: [u16; 2]) -> bool {
        self.top_nilpotence
            .iter()
            .all(|&(var, power)| exponents[var] < power)
            && self
                .power_rules
                .iter()
                .all(|rule| exponents[rule.var] < rule.power)
    }

    /// Exclusive exponent bounds for reduced monomials, per variable.
    pub fn exponent_bounds(&self) -> [u16; 2] {
        let mut bounds = [u16::MAX; 2];
        for &(var, power) in &self.top_nilpotence {
            bounds[var] = bounds[var].min(power);
        }
        for rule in &self.power_rules {
            bounds[rule.var] = bounds[rule.var].min(rule.power);
        }
        bounds
    }

    /// Fully reduce `x^exponents`, returning its expansion over reduced
    /// monomials with integer coefficients. Rules fire in a fixed order
    /// (nilpotence first); by confluence the choice does not matter.
    pub fn reduce(&self, exponents: [u16; 2]) -> Vec<([u16; 2], i64)> {
        self.reduce_with(exponents, &mut |_| 0)
    }

    /// Like [`RewriteSystem::reduce`] but letting `choose` pick among the
    /// applicable rules at every step; `choose` receives the number of
    /// candidates and returns the index to fire.
    pub fn reduce_with(
        &self,
        exponents: [u16; 2],
        choose: &mut dyn FnMut(usize) -> usize,
    ) -> Vec<([u16; 2], i64)> {
        enum Rule<'a> {
            Kill,
            Power(&'a PowerRule),
        }

        let mut out: std::collections::BTreeMap<[u16; 2], i64> = Default::default();
        let mut work = vec![(exponents, 1i64)];
        while let Some((e, c)) = work.pop() {
            let mut applicable = Vec::new();
            for &(var, power) in &self.top_nilpotence {
                if e[var] >= power {
                    applicable.push(Rule::Kill);
                }
            }
            for rule in &self.power_rules {
                if e[rule.var] >= rule.power {
                    applicable.push(Rule::Power(rule));
                }
            }
            if applicable.is_empty() {
                let entry = out.entry(e).or_insert(0);
                *entry += c;
                if *entry == 0 {
                    out.remove(&e);
                }
                continue;
            }
            match &applicable[choose(applicable.len()) % applicable.len()] {
                Rule::Kill => {}
                Rule::Power(rule) => {
                    let mut base = e;
                    base[rule.var] -= rule.power;
                    for &(re, rc) in &rule.replacement {
                        work.push(([base[0] + re[0], base[1] + re[1]], c * rc));
                    }
                }
            }
        }
        out.into_iter().collect()
    }
}
