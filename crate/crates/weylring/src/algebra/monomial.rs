use std::fmt;

/// Cohomological degree: 2 per polynomial exponent, 1 per exterior generator.
pub type Degree = usize;

/// Packed set of exterior generators, two per tensor factor.
///
/// Bit `2j + i` stands for `y_{i+1}^{j+1}`, the `i`-th retained exterior
/// generator of factor `j` (both zero-based internally). Bit positions are
/// factor-major and index-minor, so reading the set bits in ascending order
/// spells the monomial in its canonical written order: the factor-1 block
/// first, each block ascending.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct ExtWord(u64);

impl ExtWord {
    pub const EMPTY: ExtWord = ExtWord(0);

    /// Single generator `y_{index+1}^{factor+1}` (zero-based arguments).
    pub fn generator(index: usize, factor: usize) -> ExtWord {
        assert!(index < 2, "exterior index out of range");
        assert!(factor < 32, "factor out of range");
        ExtWord(1 << (2 * factor + index))
    }

    /// Build from zero-based (factor, index) pairs; duplicates are rejected.
    pub fn from_positions(positions: &[(usize, usize)]) -> ExtWord {
        let mut word = ExtWord::EMPTY;
        for &(factor, index) in positions {
            let gen = ExtWord::generator(index, factor);
            assert!(!word.intersects(gen), "repeated exterior generator");
            word = word.union(gen);
        }
        word
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Number of generators in the word; its contribution to the degree.
    pub fn degree(self) -> Degree {
        self.0.count_ones() as Degree
    }

    pub fn intersects(self, rhs: ExtWord) -> bool {
        self.0 & rhs.0 != 0
    }

    pub fn union(self, rhs: ExtWord) -> ExtWord {
        ExtWord(self.0 | rhs.0)
    }

    /// Zero-based (factor, index) pairs in canonical written order.
    pub fn positions(self) -> impl Iterator<Item = (usize, usize)> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let p = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some((p / 2, p % 2))
        })
    }

    /// Sign of moving `rhs` (written after `self`) into canonical position:
    /// each generator of `rhs` anticommutes past every generator of `self`
    /// with a larger bit position.
    pub fn koszul_sign(self, rhs: ExtWord) -> i64 {
        let mut swaps = 0u32;
        let mut bits = rhs.0;
        while bits != 0 {
            let t = bits.trailing_zeros();
            swaps += self.0.checked_shr(t + 1).unwrap_or(0).count_ones();
            bits &= bits - 1;
        }
        if swaps.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub(crate) fn bits(self) -> u64 {
        self.0
    }
}

/// One basis word of the tensor algebra: a polynomial exponent vector on the
/// retained variables (x₁, x₂) together with an exterior word. The
/// represented element is `x₁^e₀ · x₂^e₁ · w` with coefficient +1, `w`
/// written in canonical order.
///
/// The derived ordering — exponent of x₁, then of x₂, then the packed
/// exterior word — is the engine's fixed total monomial order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TensorMonomial {
    pub(crate) poly: [u16; 2],
    pub(crate) ext: ExtWord,
}

impl TensorMonomial {
    pub fn new(poly: [u16; 2], ext: ExtWord) -> TensorMonomial {
        TensorMonomial { poly, ext }
    }

    pub fn unit() -> TensorMonomial {
        TensorMonomial {
            poly: [0, 0],
            ext: ExtWord::EMPTY,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.poly == [0, 0] && self.ext.is_empty()
    }

    pub fn poly_exponents(&self) -> [u16; 2] {
        self.poly
    }

    pub fn exterior(&self) -> ExtWord {
        self.ext
    }

    /// Total cohomological degree.
    pub fn degree(&self) -> Degree {
        2 * (self.poly[0] as Degree + self.poly[1] as Degree) + self.ext.degree()
    }

    /// Text form without a coefficient, e.g. `x1^3*x2 y1^1y2^1 | y2^2`.
    /// Exterior blocks are separated by ` | `; an empty block prints as `1`.
    pub(crate) fn render(&self, factors: usize) -> String {
        let mut poly = String::new();
        for (var, &e) in self.poly.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !poly.is_empty() {
                poly.push('*');
            }
            poly.push_str(&format!("x{}", var + 1));
            if e > 1 {
                poly.push_str(&format!("^{e}"));
            }
        }
        if self.ext.is_empty() {
            return poly;
        }
        let blocks: Vec<String> = (0..factors)
            .map(|j| {
                let mut block = String::new();
                for i in 0..2 {
                    if self.ext.intersects(ExtWord::generator(i, j)) {
                        block.push_str(&format!("y{}^{}", i + 1, j + 1));
                    }
                }
                if block.is_empty() {
                    block.push('1');
                }
                block
            })
            .collect();
        let ext = blocks.join(" | ");
        if poly.is_empty() {
            ext
        } else {
            format!("{poly} {ext}")
        }
    }
}

impl fmt::Display for TensorMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let top_factor = self.ext.positions().map(|(j, _)| j + 1).max().unwrap_or(0);
        let s = self.render(top_factor);
        if s.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn koszul_sign_counts_crossings() {
        let a = ExtWord::generator(0, 0); // y1^1
        let b = ExtWord::generator(1, 0); // y2^1
        assert_eq!(a.koszul_sign(b), 1); // y1^1 then y2^1 is already canonical
        assert_eq!(b.koszul_sign(a), -1); // y2^1 · y1^1 needs one swap
        let top = ExtWord::from_positions(&[(0, 0), (0, 1)]);
        let mid = ExtWord::from_positions(&[(1, 0), (1, 1)]);
        // moving two generators past two generators: even number of swaps
        assert_eq!(mid.koszul_sign(top), 1);
    }

    #[test]
    fn degree_is_additive_on_disjoint_words() {
        let a = TensorMonomial::new([2, 1], ExtWord::generator(0, 0));
        let b = TensorMonomial::new([0, 0], ExtWord::generator(1, 1));
        assert_eq!(a.degree(), 7);
        assert_eq!(
            a.degree() + b.degree(),
            TensorMonomial::new([2, 1], a.exterior().union(b.exterior())).degree()
        );
    }

    #[test]
    fn monomial_order_prefers_x1() {
        let x1 = TensorMonomial::new([1, 0], ExtWord::EMPTY);
        let x2 = TensorMonomial::new([0, 1], ExtWord::EMPTY);
        assert!(x2 < x1);
    }

    #[test]
    fn positions_iterate_factor_major() {
        let w = ExtWord::from_positions(&[(1, 0), (0, 1), (0, 0)]);
        let got: Vec<_> = w.positions().collect();
        assert_eq!(got, vec![(0, 0), (0, 1), (1, 0)]);
    }
}
