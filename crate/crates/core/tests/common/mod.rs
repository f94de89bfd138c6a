//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use twisted_hodge::ainfty::{Field, Matrix, Rational};
use twisted_hodge::binom;

/// `chi(P^dim, O(q))` as the Hilbert polynomial, valid for every integer `q`.
pub fn chi_line_bundle(dim: i64, q: i64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for k in 1..=dim {
        num *= BigInt::from(q + k);
        den *= BigInt::from(k);
    }
    num / den
}

/// `chi(P^dim, Omega^i(q))` from the Euler sequence.
pub fn chi_projective_forms(dim: i64, i: i64, q: i64) -> BigInt {
    let mut acc = chi_line_bundle(dim, q);
    for k in 1..=i {
        acc = binom(dim + 1, k) * chi_line_bundle(dim, q - k) - acc;
    }
    acc
}

/// `chi(X, Omega^i_X(p))` for a degree-`d` hypersurface of dimension `n`, from
/// the restriction and conormal sequences.
pub fn chi_hypersurface_forms(n: i64, d: i64, i: i64, p: i64) -> BigInt {
    let restricted = |k: i64, q: i64| chi_projective_forms(n + 1, k, q) - chi_projective_forms(n + 1, k, q - d);
    // c_k = chi(Omega^k_X(p - (i - k) d)) and c_k = chi(Omega^k_P|_X(...)) - c_(k-1).
    let mut prev = BigInt::zero();
    for k in 0..=i {
        prev = restricted(k, p - (i - k) * d) - prev;
    }
    prev
}

/// `h^0(P^m, Omega^i(p))` as the kernel of contraction with the Euler field
/// `/\^i V (x) S_(p-i) -> /\^(i-1) V (x) S_(p-i+1)`, by exact row reduction.
pub fn koszul_sections(m: i64, i: i64, p: i64) -> usize {
    let vars = (m + 1) as usize;
    let monomials = |deg: i64| -> Vec<Vec<u32>> {
        if deg < 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut cur = vec![0u32; vars];
        fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if pos + 1 == cur.len() {
                cur[pos] = left;
                out.push(cur.clone());
                return;
            }
            for e in (0..=left).rev() {
                cur[pos] = e;
                rec(pos + 1, left - e, cur, out);
            }
        }
        rec(0, deg as u32, &mut cur, &mut out);
        out
    };
    let subsets = |size: i64| -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for mask in 0u32..(1 << vars) {
            if mask.count_ones() as i64 == size {
                out.push((0..vars).filter(|b| mask & (1 << b) != 0).collect());
            }
        }
        out
    };
    let src_forms = subsets(i);
    let src_monos = monomials(p - i);
    let cols = src_forms.len() * src_monos.len();
    if cols == 0 {
        return 0;
    }
    if i == 0 {
        return cols;
    }
    let dst_forms = subsets(i - 1);
    let dst_monos = monomials(p - i + 1);
    let dst_form_index: HashMap<Vec<usize>, usize> = dst_forms.iter().cloned().enumerate().map(|(k, v)| (v, k)).collect();
    let dst_mono_index: HashMap<Vec<u32>, usize> = dst_monos.iter().cloned().enumerate().map(|(k, v)| (v, k)).collect();
    let mut mat = Matrix::<Rational>::zeros(dst_forms.len() * dst_monos.len(), cols);
    for (fi, form) in src_forms.iter().enumerate() {
        for (mi, mono) in src_monos.iter().enumerate() {
            let col = fi * src_monos.len() + mi;
            for (pos, &j) in form.iter().enumerate() {
                let mut rest = form.clone();
                rest.remove(pos);
                let mut mono2 = mono.clone();
                mono2[j] += 1;
                let row = dst_form_index[&rest] * dst_monos.len() + dst_mono_index[&mono2];
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                mat.add_to(row, col, Rational::from_i64(sign));
            }
        }
    }
    cols - mat.rank()
}
