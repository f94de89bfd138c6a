//! Exact binomial coefficients under the vanishing convention, and signed
//! sums of binomial products.
//!
//! `binom(a, b)` is zero unless `0 <= b <= a`. In particular it vanishes for
//! every negative upper index, which is what the hypersurface formulas rely
//! on. The generalized binomial `a(a-1)...(a-b+1)/b!` is *not* used.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Binomial coefficient with `binom(a, b) = 0` unless `0 <= b <= a`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if b < 0 || a < b {
        return BigInt::zero();
    }
    // a >= b >= 0 here, so a >= 0 as well.
    let k = b.min(a - b);
    let mut acc = BigInt::one();
    for step in 0..k {
        // acc = binom(a - k + step + 1, step + 1) after this line; the division is exact.
        acc *= BigInt::from(a - k + step + 1);
        acc /= BigInt::from(step + 1);
    }
    acc
}

/// Sign of one summand in an alternating binomial sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^k`.
    pub fn alternating(k: i64) -> Self {
        if k.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// One summand `sign * binom(outer) * binom(inner)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinomTerm {
    pub sign: Sign,
    pub outer: (i64, i64),
    pub inner: (i64, i64),
}

impl BinomTerm {
    pub fn new(sign: Sign, outer: (i64, i64), inner: (i64, i64)) -> Self {
        Self { sign, outer, inner }
    }

    pub fn value(&self) -> BigInt {
        let v = binom(self.outer.0, self.outer.1) * binom(self.inner.0, self.inner.1);
        match self.sign {
            Sign::Plus => v,
            Sign::Minus => -v,
        }
    }
}

/// Exact value of `sum sign * binom(outer) * binom(inner)`. May be negative;
/// callers that know the sum is a dimension check nonnegativity themselves.
pub fn alt_binom_sum<'a, I>(terms: I) -> BigInt
where
    I: IntoIterator<Item = &'a BinomTerm>,
{
    terms.into_iter().map(BinomTerm::value).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(a: i64, b: i64) -> BigInt {
        if b < 0 || a < b {
            return BigInt::zero();
        }
        let fact = |k: i64| (1..=k).fold(BigInt::one(), |acc, x| acc * BigInt::from(x));
        fact(a) / (fact(b) * fact(a - b))
    }

    #[test]
    fn small_values() {
        assert_eq!(binom(14, 6), BigInt::from(3003));
        assert_eq!(binom(-3, 2), BigInt::zero());
        assert_eq!(binom(4, 4), BigInt::one());
        assert_eq!(binom(4, -1), BigInt::zero());
        assert_eq!(binom(0, 0), BigInt::one());
        assert_eq!(binom(-1, 0), BigInt::zero());
    }

    #[test]
    fn empty_sum_is_zero() {
        assert_eq!(alt_binom_sum(&[]), BigInt::zero());
    }

    #[test]
    fn single_surviving_term() {
        // Only the mu = 0 term of the guaranteed-kernel sum survives.
        let k = 3;
        let terms = [BinomTerm::new(Sign::Plus, (2 * k + 1, 0), (2 * k, 2 * k))];
        assert_eq!(alt_binom_sum(&terms), BigInt::one());
    }

    #[test]
    fn quadric_threefold_middle_entry() {
        // h^{2,1}_1 of the 3-dimensional quadric: n = 3, d = 2, p = 1, i = 2.
        let (n, d, p, i) = (3i64, 2i64, 1i64, 2i64);
        let terms: Vec<_> = (0..=n + 2)
            .map(|mu| {
                BinomTerm::new(
                    Sign::alternating(mu),
                    (n + 2, mu),
                    (-p + i * d - (mu - 1) * (d - 1), n + 1),
                )
            })
            .collect();
        assert_eq!(terms.len(), 6);
        assert_eq!(alt_binom_sum(&terms), BigInt::one());
    }

    #[test]
    fn matches_factorials_exhaustively() {
        for a in -5..=60 {
            for b in -3..=62 {
                assert_eq!(binom(a, b), brute(a, b), "binom({a}, {b})");
            }
        }
    }

    #[test]
    fn large_values_do_not_overflow() {
        let v = binom(200, 100);
        assert_eq!(
            v.to_string(),
            "90548514656103281165404177077484163874504589675413336841320"
        );
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn symmetric(a in 0i64..300, frac in 0.0f64..=1.0) {
                let b = ((a as f64) * frac) as i64;
                prop_assert_eq!(binom(a, b), binom(a, a - b));
            }

            #[test]
            fn pascal(a in 1i64..300, frac in 0.0f64..=1.0) {
                let b = ((a as f64) * frac) as i64;
                prop_assert_eq!(binom(a, b), binom(a - 1, b) + binom(a - 1, b - 1));
            }

            #[test]
            fn monotone_in_upper(b in 0i64..40, a in 0i64..200) {
                let a = a + b;
                prop_assert!(binom(a + 1, b) >= binom(a, b));
            }

            #[test]
            fn nonnegative(a in -100i64..100, b in -100i64..100) {
                prop_assert!(binom(a, b) >= BigInt::zero());
            }
        }
    }
}
