//! Hochschild cohomology dimensions for a hypersurface `f: X -> P^{n+1}`:
//! `HH^m(X, O_X(p))`, `HH^m(P^{n+1}, f_* O_X(p))`, and the kernel of
//! `f_*` between them.
//!
//! All values are dimensions obtained from twisted Hodge numbers through the
//! HKR decomposition. The kernel of `f_*` has a closed form (the middle line
//! of the `(t-p)`-twisted diamond); [`les_ledger`] recovers the same numbers
//! independently by rank propagation along the long exact sequence
//! `... -> HH^{i-2}(X, p+d) -> HH^i(X, p) -> HH^i(P, f_* p) -> HH^{i-1}(X, p+d) -> ...`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::hodge::{hodge_number, HodgeError, Hypersurface};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HochschildError {
    #[error("kernel formula needs t - p outside {{0, d}}; got t - p = {t_minus_p} with d = {d}")]
    PreconditionViolation { t_minus_p: i64, d: i64 },
    #[error("negative rank {rank} propagated into term {position} ({label})")]
    ExactnessViolation {
        position: usize,
        label: String,
        rank: BigInt,
    },
    #[error("long exact sequence does not close: trailing rank {rank}")]
    UnclosedSequence { rank: BigInt },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Hodge(#[from] HodgeError),
}

fn check_twist(x: &Hypersurface, p: i64) -> Result<(), HochschildError> {
    let t_minus_p = x.canonical_twist() - p;
    if t_minus_p == 0 || t_minus_p == x.degree() {
        return Err(HochschildError::PreconditionViolation {
            t_minus_p,
            d: x.degree(),
        });
    }
    Ok(())
}

/// `dim HH^m(X, O_X(p))` as the column sum `sum_i h^{i, i-m+n}_{t-p}(X)`.
pub fn hh_dim_on_x(x: &Hypersurface, p: i64, m: i64) -> BigInt {
    let n = x.dim();
    let q = x.canonical_twist() - p;
    (0..=n).map(|i| hodge_number(x, q, i, i - m + n)).sum()
}

/// `dim HH^m(X, O_X(p))` from the upper/middle/bottom case split.
pub fn hh_dim_on_x_closed_form(x: &Hypersurface, p: i64, m: i64) -> BigInt {
    let n = x.dim();
    let t = x.canonical_twist();
    let q = t - p;
    let h = |i: i64, j: i64| hodge_number(x, q, i, j);
    let diagonal_bonus = |mult: i64| {
        if t == p && m == n {
            BigInt::from(mult)
        } else {
            BigInt::zero()
        }
    };
    if m == 0 {
        h(0, n)
    } else if m > 0 && m < 2 * n && m % 2 == 0 {
        h(m - n, 0) + h(m / 2, n - m / 2) + h(m, n) + diagonal_bonus(n - 2)
    } else if m > 0 && m < 2 * n {
        h(m - n, 0) + h(m, n) + diagonal_bonus(n - 1)
    } else if m == 2 * n {
        h(n, 0)
    } else {
        BigInt::zero()
    }
}

/// `dim H^j(X, f^* Omega^i_{P^{n+1}}(p))`.
pub fn pullback_cohomology_dim(x: &Hypersurface, p: i64, i: i64, j: i64) -> BigInt {
    let n = x.dim();
    let d = x.degree();
    if i < 0 || i > n + 1 || j < 0 || j > n {
        return BigInt::zero();
    }
    let h = |p: i64, i: i64, j: i64| hodge_number(x, p, i, j);
    let delta = |c: bool| if c { BigInt::from(1) } else { BigInt::zero() };
    match (i, j) {
        (0, 0) => return h(p, 0, 0),
        (0, j) if j == n => return h(p, 0, n),
        (i, 0) if i == n + 1 => return h(p - d, n, 0),
        (i, j) if i == n + 1 && j == n => return h(p - d, n, n),
        (i, 0) if i == n => return h(p, n, 0) + h(p - d, n - 1, 0) - h(p - d, n - 1, 1),
        (1, j) if j == n => return h(p, 1, n) + h(p - d, 0, n) - h(p, 1, n - 1),
        _ => {}
    }
    if j == 0 {
        h(p, i, 0) + h(p - d, i - 1, 0)
    } else if j == n {
        h(p, i, n) + h(p - d, i - 1, n)
    } else if i == j && i != 0 && i != n {
        delta(p == 0)
    } else if i - 1 == j && j != 0 && j != n {
        delta(p == d)
    } else {
        BigInt::zero()
    }
}

/// `dim HH^m(P^{n+1}, f_* O_X(p)) = sum_{i=0}^{n+1} dim H^{n-m+i}(X, f^* Omega^i(t-p))`.
pub fn hh_dim_pushforward(x: &Hypersurface, p: i64, m: i64) -> BigInt {
    let n = x.dim();
    let q = x.canonical_twist() - p;
    (0..=n + 1)
        .map(|i| pullback_cohomology_dim(x, q, i, n - m + i))
        .sum()
}

/// The pushforward dimension predicted from `HH(X)` alone, valid when
/// `t - p` is not in `{0, d}`: it differs from `HH^m(X, p) + HH^{m-1}(X, p+d)`
/// only by a middle-line correction.
pub fn pushforward_dim_via_hh_on_x(x: &Hypersurface, p: i64, m: i64) -> Result<BigInt, HochschildError> {
    check_twist(x, p)?;
    let n = x.dim();
    let d = x.degree();
    let q = x.canonical_twist() - p;
    let on_x = |p: i64, m: i64| hh_dim_on_x(x, p, m);
    let h = |p: i64, i: i64, j: i64| hodge_number(x, p, i, j);
    let v = if m == 0 {
        on_x(p, 0)
    } else if m == 1 {
        on_x(p, 1) + on_x(p + d, 0) - h(q, 1, n - 1)
    } else if m > 1 && m < 2 * n && m % 2 == 0 {
        on_x(p, m) + on_x(p + d, m - 1) - h(q, m / 2, n - m / 2)
    } else if m > 1 && m < 2 * n {
        // The middle-line entry of HH^(m-1)(X, p+d); it equals h^{(m+1)/2, n-(m+1)/2}_{t-p}
        // by the middle-line recurrence except at m = 2n-1, where that index leaves the middle line.
        on_x(p, m) + on_x(p + d, m - 1) - h(q - d, (m - 1) / 2, n - (m - 1) / 2)
    } else if m == 2 * n {
        on_x(p, 2 * n) + on_x(p + d, 2 * n - 1) - h(q - d, n - 1, 1)
    } else if m == 2 * n + 1 {
        on_x(p + d, 2 * n)
    } else {
        BigInt::zero()
    };
    Ok(v)
}

/// `dim ker(f_*: HH^m(X, O_X(p)) -> HH^m(P^{n+1}, f_* O_X(p)))`.
pub fn kernel_dim(x: &Hypersurface, p: i64, m: i64) -> Result<BigInt, HochschildError> {
    check_twist(x, p)?;
    let n = x.dim();
    let q = x.canonical_twist() - p;
    Ok(if m > 0 && m < 2 * n && m % 2 == 0 {
        hodge_number(x, q, m / 2, n - m / 2)
    } else if m == 2 * n {
        hodge_number(x, q - x.degree(), n - 1, 1)
    } else {
        BigInt::zero()
    })
}

/// Which Hochschild dimension a profile records.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    OnX,
    Pushforward,
    Kernel,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::OnX => "on-x",
            Target::Pushforward => "pushforward",
            Target::Kernel => "kernel",
        })
    }
}

/// `dim HH^m` for `m` in `[0, 2n+1]` for one target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HochschildProfile {
    pub hypersurface: Hypersurface,
    pub twist: i64,
    pub target: Target,
    pub dims: BTreeMap<i64, BigInt>,
}

impl HochschildProfile {
    pub fn get(&self, m: i64) -> BigInt {
        self.dims.get(&m).cloned().unwrap_or_default()
    }
}

pub fn profile(x: &Hypersurface, p: i64, target: Target) -> Result<HochschildProfile, HochschildError> {
    let top = 2 * x.dim() + 1;
    let dims = (0..=top)
        .map(|m| {
            let v = match target {
                Target::OnX => hh_dim_on_x(x, p, m),
                Target::Pushforward => hh_dim_pushforward(x, p, m),
                Target::Kernel => kernel_dim(x, p, m)?,
            };
            Ok((m, v))
        })
        .collect::<Result<_, HochschildError>>()?;
    Ok(HochschildProfile {
        hypersurface: *x,
        twist: p,
        target,
        dims,
    })
}

/// One term of the long exact sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TermLabel {
    /// `HH^{i-2}(X, O_X(p+d))`, the term mapping into `HH^i(X, O_X(p))`.
    Shifted { index: i64 },
    /// `HH^i(X, O_X(p))`.
    OnX { index: i64 },
    /// `HH^i(P^{n+1}, f_* O_X(p))`.
    Pushforward { index: i64 },
}

impl fmt::Display for TermLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermLabel::Shifted { index } => write!(f, "HH^{}(X, p+d)", index - 2),
            TermLabel::OnX { index } => write!(f, "HH^{index}(X, p)"),
            TermLabel::Pushforward { index } => write!(f, "HH^{index}(P, f_*p)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LedgerTerm {
    pub label: TermLabel,
    pub dim: BigInt,
}

/// Term dimensions of the long exact sequence together with the ranks of
/// the maps leaving each term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactSequenceLedger {
    pub terms: Vec<LedgerTerm>,
    /// `ranks[k]` is the rank of the map out of `terms[k]`.
    pub ranks: Vec<BigInt>,
    /// `dim ker f_*` on `HH^m(X, p)`, i.e. the rank entering that term.
    pub kernel_of_fstar: BTreeMap<i64, BigInt>,
}

impl ExactSequenceLedger {
    /// Propagate ranks along an exact sequence that starts with a zero map:
    /// `dim(term_k) = rank_{k-1} + rank_k`.
    pub fn from_terms(terms: Vec<LedgerTerm>) -> Result<Self, HochschildError> {
        let mut ranks = Vec::with_capacity(terms.len());
        let mut kernel_of_fstar = BTreeMap::new();
        let mut incoming = BigInt::zero();
        for (position, term) in terms.iter().enumerate() {
            if let TermLabel::OnX { index } = term.label {
                kernel_of_fstar.insert(index, incoming.clone());
            }
            let outgoing = &term.dim - &incoming;
            if outgoing.is_negative() {
                return Err(HochschildError::ExactnessViolation {
                    position,
                    label: term.label.to_string(),
                    rank: outgoing,
                });
            }
            ranks.push(outgoing.clone());
            incoming = outgoing;
        }
        if !incoming.is_zero() {
            return Err(HochschildError::UnclosedSequence { rank: incoming });
        }
        Ok(Self {
            terms,
            ranks,
            kernel_of_fstar,
        })
    }

    pub fn kernel(&self, m: i64) -> BigInt {
        self.kernel_of_fstar.get(&m).cloned().unwrap_or_default()
    }

    /// Alternating sum of term dimensions; zero for any exact sequence
    /// bounded by zeros.
    pub fn euler_characteristic(&self) -> BigInt {
        self.terms
            .iter()
            .enumerate()
            .map(|(k, t)| if k % 2 == 0 { t.dim.clone() } else { -t.dim.clone() })
            .sum()
    }
}

/// Build the long exact sequence for `(X, p)` and chase ranks through it.
pub fn les_ledger(x: &Hypersurface, p: i64) -> Result<ExactSequenceLedger, HochschildError> {
    check_twist(x, p)?;
    let d = x.degree();
    // Past i = 2n+3 every term vanishes.
    let last = 2 * x.dim() + 3;
    let mut terms = Vec::with_capacity(3 * (last as usize + 1));
    for index in 0..=last {
        terms.push(LedgerTerm {
            label: TermLabel::Shifted { index },
            dim: hh_dim_on_x(x, p + d, index - 2),
        });
        terms.push(LedgerTerm {
            label: TermLabel::OnX { index },
            dim: hh_dim_on_x(x, p, index),
        });
        terms.push(LedgerTerm {
            label: TermLabel::Pushforward { index },
            dim: hh_dim_pushforward(x, p, index),
        });
    }
    ExactSequenceLedger::from_terms(terms)
}

/// Outcome of one cell of a candidate search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CandidateStatus {
    Computed(BigInt),
    /// `t - p` is `0` or `d`, where the kernel formula does not apply.
    Skipped { t_minus_p: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateRow {
    pub n: i64,
    pub d: i64,
    pub p: i64,
    /// The Hochschild degree searched, `n + 3`.
    pub m: i64,
    pub status: CandidateStatus,
}

impl CandidateRow {
    /// Dimension of the space of admissible `eta`, if this row was computed.
    pub fn dim(&self) -> Option<&BigInt> {
        match &self.status {
            CandidateStatus::Computed(v) => Some(v),
            CandidateStatus::Skipped { .. } => None,
        }
    }

    pub fn is_candidate(&self) -> bool {
        self.dim().is_some_and(|v| !v.is_zero())
    }
}

/// `dim ker f_*` in degree `n + 3` over a grid of `(n, d, p)`, sorted by `(n, d, p)`.
pub fn candidate_search(
    n_range: RangeInclusive<i64>,
    d_range: RangeInclusive<i64>,
    p_range: RangeInclusive<i64>,
) -> Result<Vec<CandidateRow>, HochschildError> {
    if n_range.is_empty() || d_range.is_empty() || p_range.is_empty() {
        return Err(HochschildError::InvalidArgument("empty search range".into()));
    }
    let mut cells = Vec::new();
    for n in n_range {
        for d in d_range.clone() {
            let x = Hypersurface::new(n, d)?;
            for p in p_range.clone() {
                cells.push((x, p));
            }
        }
    }
    let mut rows: Vec<CandidateRow> = cells
        .par_iter()
        .map(|&(x, p)| {
            let m = x.dim() + 3;
            let status = match kernel_dim(&x, p, m) {
                Ok(v) => CandidateStatus::Computed(v),
                Err(_) => CandidateStatus::Skipped {
                    t_minus_p: x.canonical_twist() - p,
                },
            };
            CandidateRow {
                n: x.dim(),
                d: x.degree(),
                p,
                m,
                status,
            }
        })
        .collect();
    rows.sort_by_key(|r| (r.n, r.d, r.p));
    Ok(rows)
}

/// Kernel dimension in degree `n + 3` for `n = 2k - 1` and `p = -kd - d`.
pub fn guaranteed_kernel_check(k: i64, d: i64) -> Result<BigInt, HochschildError> {
    if k < 2 || d < 2 {
        return Err(HochschildError::InvalidArgument(format!(
            "need k >= 2 and d >= 2, got k = {k}, d = {d}"
        )));
    }
    let n = 2 * k - 1;
    let x = Hypersurface::new(n, d)?;
    kernel_dim(&x, -k * d - d, n + 3)
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
    fn hh_on_x_values() {
        let x = hs(5, 7);
        assert_eq!(hh_dim_on_x(&x, -8, 8), big(26768));
        assert_eq!(hh_dim_on_x(&x, -8, 0), big(0));
        assert_eq!(hh_dim_on_x(&x, -8, 11), big(0));
        assert_eq!(hh_dim_on_x_closed_form(&x, -8, 8), big(26768));
        assert_eq!(hh_dim_on_x_closed_form(&x, -8, 10), big(2996));
    }

    #[test]
    fn closed_form_picks_up_diagonal_when_p_is_t() {
        // n odd, p = t, m = n: the (n-1) diagonal ones appear.
        let x = hs(3, 4);
        let t = x.canonical_twist();
        let without = hodge_number(&x, 0, 0, 0) + hodge_number(&x, 0, 3, 3);
        assert_eq!(hh_dim_on_x_closed_form(&x, t, 3), without + big(2));
        assert_eq!(hh_dim_on_x(&x, t, 3), hh_dim_on_x_closed_form(&x, t, 3));
    }

    #[test]
    fn pullback_values() {
        let x = hs(5, 7);
        assert_eq!(pullback_cohomology_dim(&x, 8, 0, 0), big(2996));
        assert_eq!(pullback_cohomology_dim(&x, 0, 2, 2), big(1));
        assert_eq!(pullback_cohomology_dim(&x, 8, 3, 5), big(0));
        assert_eq!(pullback_cohomology_dim(&x, 7, 3, 2), big(1));
        assert_eq!(pullback_cohomology_dim(&x, 8, 7, 0), big(0));
    }

    #[test]
    fn pushforward_edges() {
        let x = hs(5, 7);
        assert_eq!(hh_dim_pushforward(&x, -8, 0), hh_dim_on_x(&x, -8, 0));
        assert_eq!(hh_dim_pushforward(&x, -8, 11), hodge_number(&x, 1, 5, 0));
        assert_eq!(hh_dim_pushforward(&x, -8, 11), hh_dim_on_x(&x, -1, 10));
        assert_eq!(hh_dim_pushforward(&x, 3, -1), big(0));
    }

    #[test]
    fn pushforward_case_table_matches_sum_at_every_degree() {
        for (n, d, p) in [(3, 2, -40), (5, 7, -8), (4, 3, -5), (9, 5, -30)] {
            let x = hs(n, d);
            for m in -1..=2 * n + 2 {
                assert_eq!(
                    pushforward_dim_via_hh_on_x(&x, p, m).unwrap(),
                    hh_dim_pushforward(&x, p, m),
                    "n={n} d={d} p={p} m={m}"
                );
            }
        }
    }

    #[test]
    fn kernel_values() {
        let x = hs(5, 7);
        assert_eq!(kernel_dim(&x, -8, 8).unwrap(), big(20993));
        assert_eq!(kernel_dim(&x, -8, 4).unwrap(), big(917));
        assert_eq!(kernel_dim(&x, -8, 5).unwrap(), big(0));
        assert_eq!(kernel_dim(&hs(9, 5), -30, 12).unwrap(), big(1));
    }

    #[test]
    fn kernel_rejects_degenerate_twists() {
        let x = hs(5, 7);
        assert!(matches!(
            kernel_dim(&x, 0, 4),
            Err(HochschildError::PreconditionViolation { t_minus_p: 0, d: 7 })
        ));
        assert!(matches!(
            kernel_dim(&x, -7, 4),
            Err(HochschildError::PreconditionViolation { t_minus_p: 7, .. })
        ));
        assert!(les_ledger(&x, 0).is_err());
    }

    #[test]
    fn zero_ledger() {
        let terms = (0..9)
            .map(|k| LedgerTerm {
                label: match k % 3 {
                    0 => TermLabel::Shifted { index: k / 3 },
                    1 => TermLabel::OnX { index: k / 3 },
                    _ => TermLabel::Pushforward { index: k / 3 },
                },
                dim: big(0),
            })
            .collect();
        let ledger = ExactSequenceLedger::from_terms(terms).unwrap();
        assert!(ledger.ranks.iter().all(Zero::is_zero));
        assert!(ledger.kernel_of_fstar.values().all(Zero::is_zero));
    }

    #[test]
    fn ledger_flags_negative_rank() {
        let terms = vec![
            LedgerTerm { label: TermLabel::OnX { index: 0 }, dim: big(2) },
            LedgerTerm { label: TermLabel::Pushforward { index: 0 }, dim: big(1) },
        ];
        assert!(matches!(
            ExactSequenceLedger::from_terms(terms),
            Err(HochschildError::ExactnessViolation { position: 1, .. })
        ));
        let open = vec![LedgerTerm { label: TermLabel::OnX { index: 0 }, dim: big(2) }];
        assert!(matches!(
            ExactSequenceLedger::from_terms(open),
            Err(HochschildError::UnclosedSequence { .. })
        ));
    }

    #[test]
    fn ledger_matches_closed_form_on_example() {
        let x = hs(5, 7);
        let ledger = les_ledger(&x, -8).unwrap();
        for m in -1..=12 {
            assert_eq!(ledger.kernel(m), kernel_dim(&x, -8, m).unwrap(), "m = {m}");
        }
        assert!(ledger.euler_characteristic().is_zero());
    }

    #[test]
    fn quadric_threefold_kernel() {
        let ledger = les_ledger(&hs(3, 2), -6).unwrap();
        assert_eq!(ledger.kernel(6), big(1));
    }

    #[test]
    fn search_rows() {
        let rows = candidate_search(5..=5, 7..=7, -8..=-8).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].dim(), Some(&big(20993)));
        let rows = candidate_search(9..=9, 5..=5, -30..=-30).unwrap();
        assert_eq!(rows[0].dim(), Some(&big(1)));
        // n even gives odd m = n + 3.
        for row in candidate_search(2..=8, 2..=4, -12..=-1).unwrap() {
            if row.n % 2 == 0 {
                assert!(row.dim().is_none_or(Zero::is_zero));
            }
        }
        let rows = candidate_search(5..=5, 7..=7, -1..=1).unwrap();
        assert_eq!(rows[1].status, CandidateStatus::Skipped { t_minus_p: 0 });
        #[allow(clippy::reversed_empty_ranges)]
        let empty = 5..=4;
        assert!(candidate_search(empty, 7..=7, 0..=0).is_err());
    }

    #[test]
    fn guaranteed_kernels() {
        assert_eq!(guaranteed_kernel_check(3, 2).unwrap(), big(1));
        assert_eq!(guaranteed_kernel_check(5, 5).unwrap(), big(1));
        assert_eq!(guaranteed_kernel_check(2, 2).unwrap(), big(1));
        assert!(guaranteed_kernel_check(1, 2).is_err());
        assert!(guaranteed_kernel_check(3, 1).is_err());
    }
}
