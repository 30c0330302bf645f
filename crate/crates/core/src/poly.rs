//! Chromatic polynomials stored as sign-free coefficient magnitudes.
//!
//! A graph on `v` vertices has chromatic polynomial
//! `P(q) = sum_{r=1}^{v} (-1)^{v-r} a_r q^r` with every `a_r >= 0`, so only
//! the magnitudes are stored (`magnitudes[r - 1] = a_r`). Keeping the signs
//! out of the representation makes deletion–contraction a pure addition.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

/// Coefficient magnitudes of one chromatic polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticPolynomial {
    vertex_count: usize,
    magnitudes: Vec<BigUint>,
}

impl ChromaticPolynomial {
    /// Wraps a magnitude vector; `magnitudes[r - 1]` is `a_r`, so the length
    /// fixes the vertex count.
    pub fn from_magnitudes(magnitudes: Vec<BigUint>) -> ChromaticPolynomial {
        assert!(!magnitudes.is_empty(), "a polynomial needs at least one coefficient");
        ChromaticPolynomial { vertex_count: magnitudes.len(), magnitudes }
    }

    /// Number of vertices (= the polynomial's degree).
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Magnitude `a_r` for `1 <= r <= v`.
    pub fn magnitude(&self, r: usize) -> &BigUint {
        assert!(
            (1..=self.vertex_count).contains(&r),
            "coefficient index {r} outside 1..={}",
            self.vertex_count
        );
        &self.magnitudes[r - 1]
    }

    /// All magnitudes, `a_1` first.
    pub fn magnitudes(&self) -> &[BigUint] {
        &self.magnitudes
    }

    /// Magnitudes as decimal strings, `a_1` first (for lossless JSON).
    pub fn magnitude_strings(&self) -> Vec<String> {
        self.magnitudes.iter().map(|m| m.to_string()).collect()
    }

    /// Evaluates `P(q)` exactly.
    pub fn evaluate(&self, q: u64) -> BigInt {
        let q = BigInt::from(q);
        let mut power = q.clone(); // q^r, starting at r = 1
        let mut sum = BigInt::zero();
        for (i, a) in self.magnitudes.iter().enumerate() {
            let r = i + 1;
            let term = BigInt::from_biguint(Sign::Plus, a.clone()) * &power;
            if (self.vertex_count - r) % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
            power *= &q;
        }
        sum
    }

    /// `P(1)`: the alternating coefficient sum.
    pub fn alternating_sum(&self) -> BigInt {
        self.evaluate(1)
    }

    /// Renders the signed expanded form, highest power first, e.g.
    /// `q^4 - 6q^3 + 11q^2 - 6q`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in (1..=self.vertex_count).rev() {
            let a = &self.magnitudes[r - 1];
            if a.is_zero() {
                continue;
            }
            let negative = (self.vertex_count - r) % 2 == 1;
            if out.is_empty() {
                if negative {
                    out.push_str("-");
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if !a.is_one() {
                out.push_str(&a.to_string());
            }
            match r {
                1 => out.push('q'),
                _ => out.push_str(&format!("q^{r}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl std::fmt::Display for ChromaticPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(mags: &[u64]) -> ChromaticPolynomial {
        ChromaticPolynomial::from_magnitudes(mags.iter().map(|&m| BigUint::from(m)).collect())
    }

    #[test]
    fn renders_standard_examples() {
        assert_eq!(poly(&[1, 1]).render(), "q^2 - q");
        assert_eq!(poly(&[6, 11, 6, 1]).render(), "q^4 - 6q^3 + 11q^2 - 6q");
        assert_eq!(poly(&[3, 6, 4, 1]).render(), "q^4 - 4q^3 + 6q^2 - 3q");
        assert_eq!(poly(&[2, 3, 1]).render(), "q^3 - 3q^2 + 2q");
        // Zero coefficients are skipped (two isolated vertices joined later).
        assert_eq!(poly(&[0, 1, 1]).render(), "q^3 - q^2");
        assert_eq!(poly(&[1]).render(), "q");
    }

    #[test]
    fn evaluates_with_alternating_signs() {
        let k4 = poly(&[6, 11, 6, 1]);
        assert_eq!(k4.evaluate(0), BigInt::from(0));
        assert_eq!(k4.evaluate(1), BigInt::from(0));
        assert_eq!(k4.evaluate(2), BigInt::from(0));
        assert_eq!(k4.evaluate(3), BigInt::from(0));
        assert_eq!(k4.evaluate(4), BigInt::from(24));
        assert_eq!(k4.evaluate(5), BigInt::from(120));
        assert_eq!(k4.alternating_sum(), BigInt::from(0));
    }

    #[test]
    fn accessors_index_from_one() {
        let p = poly(&[2, 3, 1]);
        assert_eq!(p.vertex_count(), 3);
        assert_eq!(p.magnitude(1), &BigUint::from(2u32));
        assert_eq!(p.magnitude(3), &BigUint::from(1u32));
        assert_eq!(p.magnitude_strings(), vec!["2", "3", "1"]);
    }

    #[test]
    #[should_panic]
    fn magnitude_rejects_out_of_range() {
        poly(&[1, 1]).magnitude(3);
    }
}
