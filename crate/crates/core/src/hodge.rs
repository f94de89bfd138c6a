//! Twisted Hodge numbers `h^{i,j}_p(X) = dim H^j(X, Omega^i_X(p))` of a smooth
//! degree `d` hypersurface `X` in `P^{n+1}`, and of projective space itself.
//!
//! Only four loci of the diamond can be nonzero: the two lower edges `j = 0`
//! and `j = n`, the middle line `i + j = n`, and the diagonal `i = j` (which
//! only carries `delta_{p,0}`). The corners come from the cohomology of
//! `O_X(p)` and Serre duality.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::combinatorics::{alt_binom_sum, binom, BinomTerm, Sign};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HodgeError {
    #[error("hypersurface needs n >= 1 and d >= 1, got n = {n}, d = {d}")]
    InvalidHypersurface { n: i64, d: i64 },
}

/// A smooth hypersurface of dimension `n` and degree `d` in `P^{n+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Hypersurface {
    n: i64,
    d: i64,
}

impl Hypersurface {
    pub fn new(n: i64, d: i64) -> Result<Self, HodgeError> {
        if n < 1 || d < 1 {
            return Err(HodgeError::InvalidHypersurface { n, d });
        }
        Ok(Self { n, d })
    }

    pub fn dim(&self) -> i64 {
        self.n
    }

    pub fn degree(&self) -> i64 {
        self.d
    }

    /// `t = d - n - 2`, so that `omega_X = O_X(t)`.
    pub fn canonical_twist(&self) -> i64 {
        self.d - self.n - 2
    }
}

impl fmt::Display for Hypersurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "degree {} hypersurface of dimension {}", self.d, self.n)
    }
}

fn kronecker(cond: bool) -> BigInt {
    if cond {
        BigInt::one()
    } else {
        BigInt::zero()
    }
}

/// `dim H^0(X, O_X(p)) = binom(p+n+1, n+1) - binom(p-d+n+1, n+1)`.
pub fn structure_sheaf_h0(x: &Hypersurface, p: i64) -> BigInt {
    let n = x.n;
    binom(p + n + 1, n + 1) - binom(p - x.d + n + 1, n + 1)
}

/// Twisted Hodge number `h^{i,j}_p(P^m)`.
///
/// Bott's formula for `j = 0`, Serre duality for `j = m`, and only the
/// diagonal `delta_{p,0}` in between.
pub fn projective_space_hodge(m: i64, p: i64, i: i64, j: i64) -> BigInt {
    if m < 0 || i < 0 || i > m || j < 0 || j > m {
        return BigInt::zero();
    }
    if j == 0 {
        if i == 0 && p == 0 {
            return BigInt::one();
        }
        return binom(p - 1, i) * binom(p + m - i, m - i);
    }
    if j == m {
        return projective_space_hodge(m, -p, m - i, 0);
    }
    kronecker(p == 0 && i == j)
}

/// `h^0(P^{n+1}, Omega^k(q))`.
fn ambient_sections(x: &Hypersurface, k: i64, q: i64) -> BigInt {
    projective_space_hodge(x.n + 1, q, k, 0)
}

/// `h^{i,0}_p(X)` for `0 < i < n`.
///
/// Chasing `0 -> Omega^{i-1}_X(-d) -> Omega^i_P|_X -> Omega^i_X -> 0` and the
/// restriction sequence for `Omega^i_P` gives
/// `h^{i,0}_p = sum_mu (-1)^mu [h^0(Omega^{i-mu}_P(p - mu d)) - h^0(Omega^{i-mu}_P(p - (mu+1) d))]`
/// plus a single correction from `H^1(Omega^1_P) = k` at `p = i d`.
fn lower_edge(x: &Hypersurface, p: i64, i: i64) -> BigInt {
    let d = x.d;
    let mut acc = BigInt::zero();
    for mu in 0..=i {
        let term = ambient_sections(x, i - mu, p - mu * d)
            - ambient_sections(x, i - mu, p - (mu + 1) * d);
        if mu % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    if p == i * d {
        if (i - 1) % 2 == 0 {
            acc += 1;
        } else {
            acc -= 1;
        }
    }
    acc
}

/// Middle line `h^{i,n-i}_p(X)` for `0 < i < n`.
fn middle_line(x: &Hypersurface, p: i64, i: i64) -> BigInt {
    let (n, d) = (x.n, x.d);
    let terms: Vec<BinomTerm> = (0..=n + 2)
        .map(|mu| {
            BinomTerm::new(
                Sign::alternating(mu),
                (n + 2, mu),
                (-p + i * d - (mu - 1) * (d - 1), n + 1),
            )
        })
        .collect();
    alt_binom_sum(&terms) + kronecker(p == 0 && 2 * i == n)
}

/// Twisted Hodge number `h^{i,j}_p(X)`. Out-of-range indices give 0.
pub fn hodge_number(x: &Hypersurface, p: i64, i: i64, j: i64) -> BigInt {
    let n = x.n;
    if i < 0 || i > n || j < 0 || j > n {
        return BigInt::zero();
    }
    let t = x.canonical_twist();
    if i == 0 || i == n {
        return match (i == 0, j) {
            (true, 0) => structure_sheaf_h0(x, p),
            (true, j) if j == n => structure_sheaf_h0(x, t - p),
            (false, 0) => structure_sheaf_h0(x, t + p),
            (false, j) if j == n => structure_sheaf_h0(x, -p),
            _ => BigInt::zero(),
        };
    }
    // 0 < i < n from here on. The middle line wins over the diagonal at i = j = n/2.
    if i + j == n {
        middle_line(x, p, i)
    } else if j == 0 {
        lower_edge(x, p, i)
    } else if j == n {
        // Serre duality: H^n(Omega^i(p)) is dual to H^0(Omega^{n-i}(-p)).
        lower_edge(x, -p, n - i)
    } else if i == j {
        kronecker(p == 0)
    } else {
        BigInt::zero()
    }
}

/// The `(n+1) x (n+1)` table of `h^{i,j}_p(X)` for one twist `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedHodgeDiamond {
    hypersurface: Hypersurface,
    twist: i64,
    entries: Vec<Vec<BigInt>>,
}

impl TwistedHodgeDiamond {
    pub fn hypersurface(&self) -> Hypersurface {
        self.hypersurface
    }

    pub fn twist(&self) -> i64 {
        self.twist
    }

    /// Entry `h^{i,j}`; zero outside `0 <= i, j <= n`.
    pub fn get(&self, i: i64, j: i64) -> BigInt {
        let n = self.hypersurface.n;
        if i < 0 || j < 0 || i > n || j > n {
            return BigInt::zero();
        }
        self.entries[i as usize][j as usize].clone()
    }

    /// Whether `(i, j)` lies on one of the four lines that can carry nonzero entries.
    pub fn on_support(&self, i: i64, j: i64) -> bool {
        let n = self.hypersurface.n;
        j == 0 || j == n || i + j == n || i == j
    }

    /// Middle line `h^{i,n-i}` for `i = n, n-1, ..., 0` (left to right as drawn).
    pub fn middle_line(&self) -> Vec<BigInt> {
        let n = self.hypersurface.n;
        (0..=n).rev().map(|i| self.get(i, n - i)).collect()
    }

    /// Lower-left line `h^{i,0}` for `i = 0..=n`.
    pub fn lower_left_line(&self) -> Vec<BigInt> {
        (0..=self.hypersurface.n).map(|i| self.get(i, 0)).collect()
    }

    /// All `(i, j, value)` with nonzero value, sorted by `(i, j)`.
    pub fn nonzero_entries(&self) -> Vec<(i64, i64, BigInt)> {
        let n = self.hypersurface.n;
        let mut out = Vec::new();
        for i in 0..=n {
            for j in 0..=n {
                let v = &self.entries[i as usize][j as usize];
                if !v.is_zero() {
                    out.push((i, j, v.clone()));
                }
            }
        }
        out
    }

    /// Rows of the drawn diamond from top (`h^{n,n}`) to bottom (`h^{0,0}`).
    /// Each cell is `(i, j, column)` where `column = n + j - i`, so `h^{n,0}`
    /// sits in column 0 and `h^{0,n}` in column `2n`.
    pub fn rows(&self) -> Vec<Vec<(i64, i64, usize)>> {
        let n = self.hypersurface.n;
        (0..=2 * n)
            .rev()
            .map(|level| {
                let lo = (level - n).max(0);
                let hi = level.min(n);
                (lo..=hi)
                    .rev()
                    .map(|i| {
                        let j = level - i;
                        (i, j, (n + j - i) as usize)
                    })
                    .collect()
            })
            .collect()
    }
}

/// The full twisted Hodge diamond of `x` for twist `p`.
pub fn diamond(x: &Hypersurface, p: i64) -> TwistedHodgeDiamond {
    let n = x.n;
    let entries = (0..=n)
        .map(|i| (0..=n).map(|j| hodge_number(x, p, i, j)).collect())
        .collect();
    TwistedHodgeDiamond {
        hypersurface: *x,
        twist: p,
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn hs(n: i64, d: i64) -> Hypersurface {
        Hypersurface::new(n, d).unwrap()
    }

    #[test]
    fn rejects_degenerate_parameters() {
        assert!(Hypersurface::new(0, 3).is_err());
        assert!(Hypersurface::new(2, 0).is_err());
        assert_eq!(hs(5, 7).canonical_twist(), 0);
    }

    #[test]
    fn structure_sheaf_values() {
        let x = hs(5, 7);
        assert_eq!(structure_sheaf_h0(&x, 8), big(2996));
        assert_eq!(structure_sheaf_h0(&x, -1), big(0));
        assert_eq!(structure_sheaf_h0(&x, 0), big(1));
    }

    #[test]
    fn single_entries() {
        let x = hs(5, 7);
        assert_eq!(hodge_number(&x, 8, 2, 3), big(917));
        assert_eq!(hodge_number(&x, 8, 4, 0), big(1575));
        assert_eq!(hodge_number(&x, 8, 5, 5), big(0));
        assert_eq!(hodge_number(&x, 0, 2, 2), big(1));
        assert_eq!(hodge_number(&hs(3, 2), 1, 2, 1), big(1));
        assert_eq!(hodge_number(&x, 8, -1, 0), big(0));
        assert_eq!(hodge_number(&x, 8, 0, 6), big(0));
    }

    #[test]
    fn quadric_surface_edge() {
        // Q = P^1 x P^1, Omega^1_Q(p) = O(p-2, p) + O(p, p-2).
        let q = hs(2, 2);
        for p in 1..12i64 {
            let expect = 2 * (p - 1).max(0) * (p + 1);
            assert_eq!(hodge_number(&q, p, 1, 0), big(expect), "p = {p}");
        }
    }

    #[test]
    fn example_one_diamond() {
        let dia = diamond(&hs(5, 7), 8);
        let middle: Vec<BigInt> = [2996, 20993, 15267, 917, 0, 0].iter().map(|&v| big(v)).collect();
        let left: Vec<BigInt> = [2996, 9002, 10395, 5775, 1575, 2996].iter().map(|&v| big(v)).collect();
        assert_eq!(dia.middle_line(), middle);
        assert_eq!(dia.lower_left_line(), left);
        for i in 0..=5 {
            for j in 0..=5 {
                if j != 0 && i + j != 5 {
                    assert_eq!(dia.get(i, j), big(0), "({i},{j})");
                }
            }
        }
    }

    #[test]
    fn ninefold_spot_values() {
        let dia = diamond(&hs(9, 5), 24);
        assert_eq!(dia.get(6, 3), big(1));
        assert_eq!(dia.get(7, 2), big(2882));
        assert_eq!(dia.get(8, 1), big(100298));
        assert_eq!(dia.get(9, 0), big(11979044));
        assert_eq!(dia.get(4, 0), big(4236318471));
        assert_eq!(dia.get(0, 0), big(111098130));
    }

    #[test]
    fn positive_twist_kills_upper_right_line() {
        for (n, d) in [(3, 2), (5, 7), (9, 5), (4, 3)] {
            let x = hs(n, d);
            let t = x.canonical_twist();
            for p in 1..20 {
                if t - p < 0 {
                    let dia = diamond(&x, p);
                    for i in 0..=n {
                        assert_eq!(dia.get(i, n), big(0), "n={n} d={d} p={p} i={i}");
                    }
                }
            }
        }
    }

    #[test]
    fn projective_space_values() {
        assert_eq!(projective_space_hodge(4, 0, 2, 2), big(1));
        assert_eq!(projective_space_hodge(4, 1, 0, 0), big(5));
        assert_eq!(projective_space_hodge(3, 2, 1, 0), big(6));
        assert_eq!(projective_space_hodge(3, 0, 0, 0), big(1));
        assert_eq!(projective_space_hodge(3, 0, 3, 3), big(1));
        assert_eq!(projective_space_hodge(3, -4, 0, 3), big(1));
        assert_eq!(projective_space_hodge(3, 1, 1, 0), big(0));
    }

    #[test]
    fn rows_follow_drawing_orientation() {
        let dia = diamond(&hs(2, 3), 0);
        let rows = dia.rows();
        assert_eq!(rows.len(), 5);
        assert_eq!(rows[0], vec![(2, 2, 2)]);
        assert_eq!(rows[2], vec![(2, 0, 0), (1, 1, 2), (0, 2, 4)]);
        assert_eq!(rows[4], vec![(0, 0, 2)]);
    }
}
