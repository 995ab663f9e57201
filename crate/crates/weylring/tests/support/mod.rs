//! Brute-force oracles, independent of the engine's rewrite and row-reduction
//! paths: dense multivariate polynomials over the rationals, degreewise ideal
//! membership by plain Gaussian elimination, and quotient dimension counts.

// shared between test binaries; each uses a different subset
#![allow(dead_code)]

use std::collections::BTreeMap;

use weylring::{whole, Coeff};

/// Dense homogeneous-friendly polynomial: exponent vector -> coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensePoly {
    pub nvars: usize,
    pub terms: BTreeMap<Vec<u16>, Coeff>,
}

impl DensePoly {
    pub fn zero(nvars: usize) -> DensePoly {
        DensePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn var(nvars: usize, index: usize) -> DensePoly {
        let mut exps = vec![0u16; nvars];
        exps[index] = 1;
        DensePoly::monomial(nvars, exps, whole(1))
    }

    pub fn monomial(nvars: usize, exps: Vec<u16>, c: Coeff) -> DensePoly {
        let mut p = DensePoly::zero(nvars);
        if c != whole(0) {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &DensePoly) -> DensePoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            let entry = out.terms.entry(e.clone()).or_insert_with(|| whole(0));
            *entry += c;
            if *entry == whole(0) {
                out.terms.remove(e);
            }
        }
        out
    }

    pub fn sub(&self, rhs: &DensePoly) -> DensePoly {
        self.add(&rhs.scale(&whole(-1)))
    }

    pub fn scale(&self, c: &Coeff) -> DensePoly {
        if *c == whole(0) {
            return DensePoly::zero(self.nvars);
        }
        DensePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &DensePoly) -> DensePoly {
        let mut out = DensePoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps: Vec<u16> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let entry = out.terms.entry(exps).or_insert_with(|| whole(0));
                *entry += ca * cb;
            }
        }
        out.terms.retain(|_, c| *c != whole(0));
        out
    }

    pub fn pow(&self, n: u16) -> DensePoly {
        let mut out = DensePoly::monomial(self.nvars, vec![0; self.nvars], whole(1));
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Substitute each variable by the given image polynomial.
    pub fn substitute(&self, images: &[DensePoly]) -> DensePoly {
        assert_eq!(images.len(), self.nvars);
        let mut out = DensePoly::zero(self.nvars);
        for (exps, c) in &self.terms {
            let mut term = DensePoly::monomial(self.nvars, vec![0; self.nvars], c.clone());
            for (var, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[var].pow(e));
                }
            }
            out = out.add(&term);
        }
        out
    }

    pub fn total_degree(&self) -> u16 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u16>())
            .max()
            .unwrap_or(0)
    }
}

/// The i-th elementary symmetric polynomial (1-based) in `nvars` variables.
pub fn elementary_symmetric(nvars: usize, i: usize) -> DensePoly {
    let mut out = DensePoly::zero(nvars);
    let mut chosen = vec![0usize; i];
    fn rec(
        nvars: usize,
        i: usize,
        start: usize,
        depth: usize,
        chosen: &mut Vec<usize>,
        out: &mut DensePoly,
    ) {
        if depth == i {
            let mut exps = vec![0u16; nvars];
            for &v in chosen.iter() {
                exps[v] = 1;
            }
            let entry = out.terms.entry(exps).or_insert_with(|| whole(0));
            *entry += whole(1);
            return;
        }
        for v in start..nvars {
            chosen[depth] = v;
            rec(nvars, i, v + 1, depth + 1, chosen, out);
        }
    }
    rec(nvars, i, 0, 0, &mut chosen, &mut out);
    out
}

/// All exponent vectors of the given total degree, lexicographically.
pub fn monomials_of_degree(nvars: usize, degree: u16) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    let mut exps = vec![0u16; nvars];
    fn rec(nvars: usize, var: usize, left: u16, exps: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if var + 1 == nvars {
            exps[var] = left;
            out.push(exps.clone());
            return;
        }
        for e in 0..=left {
            exps[var] = e;
            rec(nvars, var + 1, left - e, exps, out);
        }
    }
    rec(nvars, 0, degree, &mut exps, &mut out);
    out
}

/// Rank by plain Gaussian elimination; deliberately separate from the
/// engine's row reduction.
pub fn rank(mut rows: Vec<Vec<Coeff>>) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut rank = 0usize;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != whole(0)) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].clone();
        for x in &mut rows[rank] {
            *x /= &inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != whole(0) {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= p * &f;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Rows spanning the degree-`degree` piece of the homogeneous ideal
/// generated by `gens`, expressed over `monomials_of_degree`.
fn ideal_rows(gens: &[DensePoly], nvars: usize, degree: u16) -> Vec<Vec<Coeff>> {
    let basis = monomials_of_degree(nvars, degree);
    let index: BTreeMap<&Vec<u16>, usize> = basis.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut rows = Vec::new();
    for g in gens {
        let gdeg = g.total_degree();
        if gdeg > degree {
            continue;
        }
        for cofactor in monomials_of_degree(nvars, degree - gdeg) {
            let shifted = g.mul(&DensePoly::monomial(nvars, cofactor, whole(1)));
            let mut row = vec![whole(0); basis.len()];
            for (e, c) in &shifted.terms {
                row[index[e]] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// Dimensions of (polynomial ring)/(ideal) per total degree 0..=max_degree.
pub fn quotient_dimensions(gens: &[DensePoly], nvars: usize, max_degree: u16) -> Vec<usize> {
    (0..=max_degree)
        .map(|d| monomials_of_degree(nvars, d).len() - rank(ideal_rows(gens, nvars, d)))
        .collect()
}

/// Whether the homogeneous polynomial `f` lies in the ideal generated by
/// `gens`, decided degreewise by comparing ranks.
pub fn ideal_contains(gens: &[DensePoly], nvars: usize, f: &DensePoly) -> bool {
    if f.is_zero() {
        return true;
    }
    let degree = f.total_degree();
    let basis = monomials_of_degree(nvars, degree);
    let index: BTreeMap<&Vec<u16>, usize> = basis.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut row = vec![whole(0); basis.len()];
    for (e, c) in &f.terms {
        row[index[e]] = c.clone();
    }
    let rows = ideal_rows(gens, nvars, degree);
    let base_rank = rank(rows.clone());
    let mut extended = rows;
    extended.push(row);
    rank(extended) == base_rank
}

/// Coefficient convolution of two series polynomials.
pub fn series_product(a: &[usize], b: &[usize], max_degree: usize) -> Vec<usize> {
    let mut out = vec![0usize; max_degree + 1];
    for (i, &ca) in a.iter().enumerate() {
        for (j, &cb) in b.iter().enumerate() {
            if i + j <= max_degree {
                out[i + j] += ca * cb;
            }
        }
    }
    out
}
