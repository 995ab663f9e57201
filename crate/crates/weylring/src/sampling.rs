//! Seeded random elements and the sampled property check behind the CLI's
//! `--seed` flag.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{rat, AlgebraContext, AlgebraElement, Degree};
use crate::invariants::reynolds;
use crate::report::CheckResult;
use crate::{LieGroup, Result};

/// Default seed for all randomized sampling.
pub const DEFAULT_SEED: u64 = 7;

/// A random homogeneous element of the given degree: up to three basis
/// monomials with small rational coefficients. Zero when the degree is empty.
pub fn random_homogeneous<R: Rng>(
    ctx: &AlgebraContext,
    rng: &mut R,
    degree: Degree,
) -> AlgebraElement {
    let basis = ctx.basis_monomials(degree);
    if basis.is_empty() {
        return ctx.zero();
    }
    let mut out = ctx.zero();
    for _ in 0..rng.gen_range(1..=3usize) {
        let mono = basis[rng.gen_range(0..basis.len())];
        let numer = loop {
            let n = rng.gen_range(-4i64..=4);
            if n != 0 {
                break n;
            }
        };
        let denom = rng.gen_range(1i64..=3);
        out = &out + &AlgebraElement::monomial(ctx, mono, rat(numer, denom));
    }
    out
}

/// A random element mixing up to three homogeneous pieces of degree at most
/// `max_degree`.
pub fn random_element<R: Rng>(
    ctx: &AlgebraContext,
    rng: &mut R,
    max_degree: Degree,
) -> AlgebraElement {
    let mut out = ctx.zero();
    for _ in 0..rng.gen_range(1..=3usize) {
        let degree = rng.gen_range(0..=max_degree);
        out = &out + &random_homogeneous(ctx, rng, degree);
    }
    out
}

/// Spot-check the engine's algebraic laws on seeded random inputs:
/// associativity, the graded sign law, the Reynolds projection property and
/// rewrite confluence under randomized rule order.
pub fn property_sample(kind: LieGroup, m: usize, seed: u64, cases: usize) -> Result<CheckResult> {
    let ctx = AlgebraContext::new(kind, m)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();

    for case in 0..cases {
        let u = random_element(&ctx, &mut rng, 6);
        let v = random_element(&ctx, &mut rng, 6);
        let w = random_element(&ctx, &mut rng, 4);
        if &(&u * &v) * &w != &u * &(&v * &w) {
            failures.push(format!("associativity (case {case})"));
        }

        let du = rng.gen_range(0..=5usize);
        let dv = rng.gen_range(0..=5usize);
        let hu = random_homogeneous(&ctx, &mut rng, du);
        let hv = random_homogeneous(&ctx, &mut rng, dv);
        let forward = &hu * &hv;
        let backward = &hv * &hu;
        let expected = if du * dv % 2 == 1 {
            -&backward
        } else {
            backward
        };
        if forward != expected {
            failures.push(format!("graded sign law (case {case})"));
        }

        let projected = reynolds(&u);
        let g = ctx.weyl().elements()[rng.gen_range(0..ctx.weyl().order())];
        if g.act(&projected) != projected {
            failures.push(format!("Reynolds projection (case {case})"));
        }

        let exponents = [rng.gen_range(0..10u16), rng.gen_range(0..10u16)];
        let deterministic = ctx.rewrite().reduce(exponents);
        let randomized = ctx
            .rewrite()
            .reduce_with(exponents, &mut |n| rng.gen_range(0..n));
        if deterministic != randomized {
            failures.push(format!("rewrite confluence (case {case})"));
        }

        if !failures.is_empty() {
            break;
        }
    }

    let pass = failures.is_empty();
    let detail = if pass {
        format!(
            "{cases} randomized cases (seed {seed}): associativity, graded sign law, \
             Reynolds projection, rewrite confluence"
        )
    } else {
        failures.join("; ")
    };
    Ok(CheckResult::new("sampled algebra properties", pass, detail))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampling_is_deterministic_for_a_fixed_seed() {
        let ctx = AlgebraContext::new(LieGroup::Sp2, 2).unwrap();
        let mut rng1 = ChaCha8Rng::seed_from_u64(11);
        let mut rng2 = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            assert_eq!(
                random_element(&ctx, &mut rng1, 6),
                random_element(&ctx, &mut rng2, 6)
            );
        }
    }

    #[test]
    fn property_sample_passes() {
        for kind in LieGroup::ALL {
            let check = property_sample(kind, 2, DEFAULT_SEED, 25).unwrap();
            assert!(check.pass, "{}", check.detail);
        }
    }
}
