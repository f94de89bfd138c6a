//! Hochschild cochains of a finite linear category with bimodule coefficients.

use std::collections::{BTreeMap, HashMap};

use rand::Rng;

use super::category::{kron, CentralBimodule, FiniteAlgebra, FiniteLinearCategory, LinearFunctor, Obj};
use super::field::Field;
use super::linalg::Matrix;
use super::{composable_chains, AInfinityError, Tuples};

/// A chain of objects `(X_0, ..., X_n)` with a basis tuple `(x_1, ..., x_n)`.
pub type ChainKey = (Vec<Obj>, Vec<usize>);

/// A degree-`n` cochain: for each composable chain and basis tuple, a vector
/// in `M(X_0, X_n)`. Only nonzero values are stored.
#[derive(Debug, Clone, PartialEq)]
pub struct Cochain<F> {
    degree: usize,
    values: BTreeMap<ChainKey, Vec<F>>,
}

impl<F: Field> Cochain<F> {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            values: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Sets the value on `(chain, tuple)`; zero vectors erase the entry.
    pub fn set(&mut self, chain: Vec<Obj>, tuple: Vec<usize>, value: Vec<F>) {
        assert_eq!(chain.len(), self.degree + 1, "chain length must be degree + 1");
        assert_eq!(tuple.len(), self.degree, "tuple length must equal the degree");
        if value.iter().all(Field::is_zero) {
            self.values.remove(&(chain, tuple));
        } else {
            self.values.insert((chain, tuple), value);
        }
    }

    /// Adds `coeff * e_target` to the value on `(chain, tuple)`.
    pub fn add_component(&mut self, chain: Vec<Obj>, tuple: Vec<usize>, target: usize, target_dim: usize, coeff: F) {
        let key = (chain, tuple);
        let mut v = self
            .values
            .remove(&key)
            .unwrap_or_else(|| vec![F::zero(); target_dim]);
        v[target] = v[target].clone() + coeff;
        self.set(key.0, key.1, v);
    }

    pub fn get(&self, chain: &[Obj], tuple: &[usize]) -> Option<&Vec<F>> {
        self.values.get(&(chain.to_vec(), tuple.to_vec()))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<Obj>, &Vec<usize>, &Vec<F>)> {
        self.values.iter().map(|((c, t), v)| (c, t, v))
    }

    pub fn num_entries(&self) -> usize {
        self.values.len()
    }

    pub fn scaled(&self, c: &F) -> Self {
        let mut out = Self::zero(self.degree);
        for ((chain, tuple), v) in &self.values {
            out.set(chain.clone(), tuple.clone(), v.iter().map(|x| c.clone() * x.clone()).collect());
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self, AInfinityError> {
        if self.degree != other.degree {
            return Err(AInfinityError::ShapeMismatch(format!(
                "cannot add cochains of degrees {} and {}",
                self.degree, other.degree
            )));
        }
        let mut out = self.clone();
        for ((chain, tuple), v) in &other.values {
            let sum = match out.values.get(&(chain.clone(), tuple.clone())) {
                Some(w) if w.len() == v.len() => w.iter().zip(v).map(|(a, b)| a.clone() + b.clone()).collect(),
                Some(_) => return Err(AInfinityError::ShapeMismatch("value lengths differ".into())),
                None => v.clone(),
            };
            out.set(chain.clone(), tuple.clone(), sum);
        }
        Ok(out)
    }

    /// True when the cochain vanishes on every tuple containing an identity.
    pub fn is_normalized(&self, x: &FiniteLinearCategory<F>) -> bool {
        self.values
            .keys()
            .all(|(chain, tuple)| !tuple.iter().enumerate().any(|(k, &i)| x.is_identity(chain[k], chain[k + 1], i)))
    }

    /// Checks that every stored value sits on a composable chain of `x` and lands in `m`.
    pub fn check_shape(&self, x: &FiniteLinearCategory<F>, m: &CentralBimodule<F>) -> Result<(), AInfinityError> {
        let n_obj = x.num_objects();
        if m.dims().len() != n_obj {
            return Err(AInfinityError::ShapeMismatch(
                "bimodule and category have different object counts".into(),
            ));
        }
        for ((chain, tuple), v) in &self.values {
            if chain.len() != self.degree + 1 || tuple.len() != self.degree {
                return Err(AInfinityError::ShapeMismatch("chain length disagrees with the degree".into()));
            }
            if chain.iter().any(|&o| o >= n_obj) {
                return Err(AInfinityError::ShapeMismatch("object index out of range".into()));
            }
            for (k, &i) in tuple.iter().enumerate() {
                if i >= x.dim(chain[k], chain[k + 1]) {
                    return Err(AInfinityError::ShapeMismatch(format!(
                        "basis index {i} out of range at position {}",
                        k + 1
                    )));
                }
            }
            if v.len() != m.dim(chain[0], chain[self.degree]) {
                return Err(AInfinityError::ShapeMismatch("value has the wrong length".into()));
            }
        }
        Ok(())
    }

    /// The Hochschild differential
    /// `x_1 f(x_2, ...) + sum_i (-1)^i f(..., x_i x_{i+1}, ...) + (-1)^(n+1) f(..., x_n) x_{n+1}`.
    pub fn differential(&self, x: &FiniteLinearCategory<F>, m: &CentralBimodule<F>) -> Result<Self, AInfinityError> {
        self.check_shape(x, m)?;
        let n = self.degree;
        let normalized = self.is_normalized(x);
        let lookup = |chain: &[Obj], tuple: &[usize]| self.get(chain, tuple).cloned();
        let mut out = Self::zero(n + 1);
        for chain in composable_chains(x.num_objects(), n + 1, |a, b| x.dim(a, b)) {
            let choices = tuple_choices(x, &chain, normalized);
            for tuple in Tuples::new(&choices) {
                let v = differential_at(x, m, n, &chain, &tuple, &lookup);
                out.set(chain.clone(), tuple, v);
            }
        }
        Ok(out)
    }
}

/// Basis indices allowed at each position of `chain`, skipping identities when `normalized`.
fn tuple_choices<F: Field>(x: &FiniteLinearCategory<F>, chain: &[Obj], normalized: bool) -> Vec<Vec<usize>> {
    chain
        .windows(2)
        .map(|w| {
            (0..x.dim(w[0], w[1]))
                .filter(|&i| !(normalized && x.is_identity(w[0], w[1], i)))
                .collect()
        })
        .collect()
}

/// Values a cochain may take: field elements, or formal rows when assembling matrices.
pub(crate) trait Coeff<F>: Clone {
    fn zero() -> Self;
    fn add_scaled(&mut self, c: &F, v: &Self);
}

impl<F: Field> Coeff<F> for F {
    fn zero() -> Self {
        F::zero()
    }

    fn add_scaled(&mut self, c: &F, v: &Self) {
        *self = self.clone() + c.clone() * v.clone();
    }
}

/// A sparse linear form on a cochain space.
#[derive(Debug, Clone, Default)]
pub(crate) struct SparseRow<F>(BTreeMap<usize, F>);

impl<F: Field> Coeff<F> for SparseRow<F> {
    fn zero() -> Self {
        Self(BTreeMap::new())
    }

    fn add_scaled(&mut self, c: &F, v: &Self) {
        for (&k, x) in &v.0 {
            let slot = self.0.entry(k).or_insert_with(F::zero);
            *slot = slot.clone() + c.clone() * x.clone();
            if slot.is_zero() {
                self.0.remove(&k);
            }
        }
    }
}

/// `(d f)(chain, tuple)` for a degree-`n` cochain given by `f`.
pub(crate) fn differential_at<F: Field, V: Coeff<F>>(
    x: &FiniteLinearCategory<F>,
    m: &CentralBimodule<F>,
    n: usize,
    chain: &[Obj],
    tuple: &[usize],
    f: &dyn Fn(&[Obj], &[usize]) -> Option<Vec<V>>,
) -> Vec<V> {
    let first = chain[0];
    let last = chain[n + 1];
    let mut out = vec![V::zero(); m.dim(first, last)];
    let one = F::one();
    let minus_one = -F::one();

    if let Some(fv) = f(&chain[1..], &tuple[1..]) {
        for (j, v) in fv.iter().enumerate() {
            if let Some(w) = m.left_table().get(first, chain[1], last, tuple[0], j) {
                for (c, coeff) in w.iter().enumerate() {
                    if !coeff.is_zero() {
                        out[c].add_scaled(coeff, v);
                    }
                }
            }
        }
    }

    for i in 1..=n {
        let Some(prod) = x.composition_table().get(chain[i - 1], chain[i], chain[i + 1], tuple[i - 1], tuple[i]) else {
            continue;
        };
        let sign = if i % 2 == 0 { &one } else { &minus_one };
        let mut sub_chain = chain.to_vec();
        sub_chain.remove(i);
        let mut sub_tuple = tuple.to_vec();
        sub_tuple.remove(i);
        for (l, coeff) in prod.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            sub_tuple[i - 1] = l;
            if let Some(fv) = f(&sub_chain, &sub_tuple) {
                let c = sign.clone() * coeff.clone();
                for (slot, v) in out.iter_mut().zip(&fv) {
                    slot.add_scaled(&c, v);
                }
            }
        }
    }

    if let Some(fv) = f(&chain[..=n], &tuple[..n]) {
        let sign = if (n + 1) % 2 == 0 { &one } else { &minus_one };
        for (j, v) in fv.iter().enumerate() {
            if let Some(w) = m.right_table().get(first, chain[n], last, j, tuple[n]) {
                for (c, coeff) in w.iter().enumerate() {
                    if !coeff.is_zero() {
                        out[c].add_scaled(&(sign.clone() * coeff.clone()), v);
                    }
                }
            }
        }
    }
    out
}

/// Coordinates on the normalized cochain space `C^n`: one block of size
/// `dim M(X_0, X_n)` per chain and identity-free basis tuple.
#[derive(Debug, Clone)]
pub struct NormalizedBasis {
    degree: usize,
    keys: Vec<ChainKey>,
    offsets: Vec<usize>,
    index: HashMap<ChainKey, usize>,
    dim: usize,
}

impl NormalizedBasis {
    pub fn new<F: Field>(x: &FiniteLinearCategory<F>, m: &CentralBimodule<F>, degree: usize) -> Self {
        let mut keys = Vec::new();
        let mut offsets = Vec::new();
        let mut index = HashMap::new();
        let mut dim = 0;
        for chain in composable_chains(x.num_objects(), degree, |a, b| x.dim(a, b)) {
            let target = m.dim(chain[0], chain[degree]);
            if target == 0 {
                continue;
            }
            let choices = tuple_choices(x, &chain, true);
            for tuple in Tuples::new(&choices) {
                let key = (chain.clone(), tuple);
                index.insert(key.clone(), keys.len());
                keys.push(key);
                offsets.push(dim);
                dim += target;
            }
        }
        Self {
            degree,
            keys,
            offsets,
            index,
            dim,
        }
    }

    /// Size of the cochain space without building it.
    pub fn count<F: Field>(x: &FiniteLinearCategory<F>, m: &CentralBimodule<F>, degree: usize) -> u128 {
        let n = x.num_objects();
        // paths[a][b]: number of identity-free tuples along chains from a to b.
        let step: Vec<Vec<u128>> = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| (x.dim(a, b) - usize::from(a == b && x.dim(a, a) > 0)) as u128)
                    .collect()
            })
            .collect();
        let mut paths: Vec<Vec<u128>> = (0..n).map(|a| (0..n).map(|b| u128::from(a == b)).collect()).collect();
        for _ in 0..degree {
            let mut next = vec![vec![0u128; n]; n];
            for a in 0..n {
                for c in 0..n {
                    for b in 0..n {
                        next[a][c] = next[a][c].saturating_add(paths[a][b].saturating_mul(step[b][c]));
                    }
                }
            }
            paths = next;
        }
        let mut total: u128 = 0;
        for a in 0..n {
            for b in 0..n {
                total = total.saturating_add(paths[a][b].saturating_mul(m.dim(a, b) as u128));
            }
        }
        total
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The cochain with the given coordinates.
    pub fn to_cochain<F: Field>(&self, coords: &[F]) -> Cochain<F> {
        let mut out = Cochain::zero(self.degree);
        for (k, (chain, tuple)) in self.keys.iter().enumerate() {
            let end = self.offsets.get(k + 1).copied().unwrap_or(self.dim);
            out.set(chain.clone(), tuple.clone(), coords[self.offsets[k]..end].to_vec());
        }
        out
    }

    /// Coordinates of a normalized cochain.
    pub fn coordinates<F: Field>(&self, f: &Cochain<F>) -> Result<Vec<F>, AInfinityError> {
        let mut coords = vec![F::zero(); self.dim];
        for (chain, tuple, v) in f.entries() {
            let k = self
                .index
                .get(&(chain.clone(), tuple.clone()))
                .ok_or_else(|| AInfinityError::ShapeMismatch("cochain is not normalized".into()))?;
            for (c, x) in v.iter().enumerate() {
                coords[self.offsets[*k] + c] = x.clone();
            }
        }
        Ok(coords)
    }

    fn symbolic<F: Field>(&self, chain: &[Obj], tuple: &[usize], target_dim: usize) -> Option<Vec<SparseRow<F>>> {
        let k = *self.index.get(&(chain.to_vec(), tuple.to_vec()))?;
        Some(
            (0..target_dim)
                .map(|c| SparseRow(BTreeMap::from([(self.offsets[k] + c, F::one())])))
                .collect(),
        )
    }
}

/// Matrix of `d: C^n -> C^(n+1)` on normalized cochains.
fn differential_matrix<F: Field>(
    x: &FiniteLinearCategory<F>,
    m: &CentralBimodule<F>,
    source: &NormalizedBasis,
    target: &NormalizedBasis,
) -> Matrix<F> {
    let n = source.degree;
    let mut mat = Matrix::zeros(target.dim, source.dim);
    let lookup = |chain: &[Obj], tuple: &[usize]| source.symbolic::<F>(chain, tuple, m.dim(chain[0], chain[n]));
    for (k, (chain, tuple)) in target.keys.iter().enumerate() {
        let rows = differential_at(x, m, n, chain, tuple, &lookup);
        for (c, row) in rows.into_iter().enumerate() {
            for (col, v) in row.0 {
                mat.set(target.offsets[k] + c, col, v);
            }
        }
    }
    mat
}

fn check_budget<F: Field>(
    x: &FiniteLinearCategory<F>,
    m: &CentralBimodule<F>,
    degrees: impl IntoIterator<Item = usize>,
    budget: u64,
) -> Result<(), AInfinityError> {
    let mut needed: u128 = 0;
    for n in degrees {
        let a = NormalizedBasis::count(x, m, n);
        let b = NormalizedBasis::count(x, m, n + 1);
        needed = needed.saturating_add(a.saturating_mul(b));
    }
    if needed > u128::from(budget) {
        return Err(AInfinityError::BudgetExceeded { needed, limit: budget });
    }
    Ok(())
}

fn check_pair<F: Field>(x: &FiniteLinearCategory<F>, m: &CentralBimodule<F>) -> Result<(), AInfinityError> {
    if m.dims().len() != x.num_objects() {
        return Err(AInfinityError::ShapeMismatch(
            "bimodule and category have different object counts".into(),
        ));
    }
    Ok(())
}

/// `dim HH^n(X, M)` for `n = 0..=up_to`, computed from the normalized complex
/// as `dim C^n - rank d_n - rank d_(n-1)`.
pub fn hh_dimensions<F: Field>(
    x: &FiniteLinearCategory<F>,
    m: &CentralBimodule<F>,
    up_to: usize,
    budget: u64,
) -> Result<Vec<usize>, AInfinityError> {
    check_pair(x, m)?;
    check_budget(x, m, 0..=up_to, budget)?;
    let bases: Vec<NormalizedBasis> = (0..=up_to + 1).map(|n| NormalizedBasis::new(x, m, n)).collect();
    let ranks: Vec<usize> = (0..=up_to)
        .map(|n| differential_matrix(x, m, &bases[n], &bases[n + 1]).rank())
        .collect();
    Ok((0..=up_to)
        .map(|n| bases[n].dim - ranks[n] - if n > 0 { ranks[n - 1] } else { 0 })
        .collect())
}

/// `dim HH^degree(X, M)`.
pub fn hh_dimension<F: Field>(
    x: &FiniteLinearCategory<F>,
    m: &CentralBimodule<F>,
    degree: usize,
    budget: u64,
) -> Result<usize, AInfinityError> {
    check_pair(x, m)?;
    let degrees = degree.saturating_sub(1)..=degree;
    check_budget(x, m, degrees, budget)?;
    let here = NormalizedBasis::new(x, m, degree);
    let above = NormalizedBasis::new(x, m, degree + 1);
    let rank_out = differential_matrix(x, m, &here, &above).rank();
    let rank_in = if degree > 0 {
        let below = NormalizedBasis::new(x, m, degree - 1);
        differential_matrix(x, m, &below, &here).rank()
    } else {
        0
    };
    Ok(here.dim - rank_out - rank_in)
}

/// A basis of the normalized degree-`degree` cocycles.
pub fn cocycle_basis<F: Field>(
    x: &FiniteLinearCategory<F>,
    m: &CentralBimodule<F>,
    degree: usize,
    budget: u64,
) -> Result<Vec<Cochain<F>>, AInfinityError> {
    check_pair(x, m)?;
    check_budget(x, m, [degree], budget)?;
    let here = NormalizedBasis::new(x, m, degree);
    let above = NormalizedBasis::new(x, m, degree + 1);
    Ok(differential_matrix(x, m, &here, &above)
        .nullspace()
        .iter()
        .map(|v| here.to_cochain(v))
        .collect())
}

/// A normalized cochain with independent uniform coefficients in `[-bound, bound]`.
pub fn random_normalized_cochain<F: Field, R: Rng>(
    x: &FiniteLinearCategory<F>,
    m: &CentralBimodule<F>,
    degree: usize,
    bound: i64,
    rng: &mut R,
) -> Cochain<F> {
    let basis = NormalizedBasis::new(x, m, degree);
    let coords: Vec<F> = (0..basis.dim).map(|_| F::from_i64(rng.gen_range(-bound..=bound))).collect();
    basis.to_cochain(&coords)
}

/// Product `gamma_1 ... gamma_n` in the algebra, the unit when `n = 0`.
fn algebra_product<F: Field>(gamma: &FiniteAlgebra<F>, factors: &[usize]) -> Vec<F> {
    let g = gamma.dim(0, 0);
    let mut acc = vec![F::zero(); g];
    acc[gamma.identity(0)] = F::one();
    for &f in factors {
        acc = gamma.mul_vec_basis(0, 0, 0, &acc, f);
    }
    acc
}

/// `eta u Id`: `(a_1 (x) g_1, ..., a_n (x) g_n) -> eta(a_1, ..., a_n) (x) g_1 ... g_n`,
/// a cochain on `X (x) Gamma` with coefficients in `M (x) Gamma`.
pub fn cup_with_identity<F: Field>(eta: &Cochain<F>, gamma: &FiniteAlgebra<F>) -> Result<Cochain<F>, AInfinityError> {
    if gamma.num_objects() != 1 {
        return Err(AInfinityError::ShapeMismatch(
            "the algebra must be a category with exactly one object".into(),
        ));
    }
    let g = gamma.dim(0, 0);
    let n = eta.degree();
    let all: Vec<Vec<usize>> = vec![(0..g).collect(); n];
    let mut out = Cochain::zero(n);
    for (chain, tuple, v) in eta.entries() {
        for gs in Tuples::new(&all) {
            let value = kron(v, &algebra_product(gamma, &gs));
            let lifted = tuple.iter().zip(&gs).map(|(&i, &gi)| i * g + gi).collect();
            out.set(chain.clone(), lifted, value);
        }
    }
    Ok(out)
}

/// `F_* eta`: `(y_1, ..., y_n) -> eta(F y_1, ..., F y_n)`, with coefficients in
/// the restriction of `M` along `F`.
pub fn restrict_along_functor<F: Field>(
    functor: &LinearFunctor<F>,
    source: &FiniteLinearCategory<F>,
    eta: &Cochain<F>,
) -> Cochain<F> {
    let n = eta.degree();
    let map = functor.object_map();
    let mut out = Cochain::zero(n);
    for chain in composable_chains(source.num_objects(), n, |a, b| source.dim(a, b)) {
        let image_chain: Vec<Obj> = chain.iter().map(|&o| map[o]).collect();
        let choices = tuple_choices(source, &chain, false);
        for tuple in Tuples::new(&choices) {
            let images: Vec<Vec<F>> = tuple
                .iter()
                .enumerate()
                .map(|(k, &i)| functor.apply(chain[k], chain[k + 1], i))
                .collect();
            let support: Vec<Vec<usize>> = images
                .iter()
                .map(|v| (0..v.len()).filter(|&l| !v[l].is_zero()).collect())
                .collect();
            let mut acc: Option<Vec<F>> = None;
            for expanded in Tuples::new(&support) {
                let Some(val) = eta.get(&image_chain, &expanded) else {
                    continue;
                };
                let coeff = expanded
                    .iter()
                    .enumerate()
                    .fold(F::one(), |c, (k, &l)| c * images[k][l].clone());
                let slot = acc.get_or_insert_with(|| vec![F::zero(); val.len()]);
                super::category::axpy(slot, &coeff, val);
            }
            if let Some(v) = acc {
                out.set(chain.clone(), tuple, v);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ainfty::bundled;
    use crate::ainfty::field::{Rational, F32003};
    use crate::ainfty::DEFAULT_BUDGET;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    #[test]
    fn degree_zero_on_commutative_algebra_is_closed() {
        let x = bundled::dual_numbers();
        let m = CentralBimodule::regular(&x);
        let mut f = Cochain::zero(0);
        f.set(vec![0], vec![], vec![q(3), q(-2)]);
        assert!(f.differential(&x, &m).unwrap().is_zero());
    }

    #[test]
    fn derivation_on_dual_numbers_is_closed() {
        let x = bundled::dual_numbers();
        let m = CentralBimodule::regular(&x);
        let mut f = Cochain::zero(1);
        f.set(vec![0, 0], vec![1], vec![q(0), q(1)]);
        let df = f.differential(&x, &m).unwrap();
        assert!(df.is_zero());
    }

    #[test]
    fn d_squared_vanishes_on_random_cochains() {
        let mut rng = StdRng::seed_from_u64(7);
        for x in [bundled::a2_path(), bundled::dual_numbers(), bundled::a2_split()] {
            let m = CentralBimodule::regular(&x);
            for degree in 0..4 {
                let f = random_normalized_cochain(&x, &m, degree, 5, &mut rng);
                let dd = f.differential(&x, &m).unwrap().differential(&x, &m).unwrap();
                assert!(dd.is_zero(), "d^2 != 0 in degree {degree}");
            }
        }
    }

    #[test]
    fn d_squared_vanishes_without_normalization() {
        let x = bundled::a2_path();
        let m = CentralBimodule::regular(&x);
        let mut f = Cochain::zero(1);
        f.set(vec![0, 0], vec![0], vec![q(2)]);
        f.set(vec![0, 1], vec![0], vec![q(-1)]);
        f.set(vec![1, 1], vec![0], vec![q(5)]);
        let dd = f.differential(&x, &m).unwrap().differential(&x, &m).unwrap();
        assert!(dd.is_zero());
    }

    #[test]
    fn hochschild_dimensions_of_bundled_examples() {
        let k = bundled::ground_field();
        assert_eq!(hh_dimensions(&k, &CentralBimodule::regular(&k), 4, DEFAULT_BUDGET).unwrap(), vec![1, 0, 0, 0, 0]);
        let dual = bundled::dual_numbers();
        let dims = hh_dimensions(&dual, &CentralBimodule::regular(&dual), 4, DEFAULT_BUDGET).unwrap();
        assert_eq!(dims, vec![2, 1, 1, 1, 1]);
        let a2 = bundled::a2_path();
        assert_eq!(hh_dimension(&a2, &CentralBimodule::regular(&a2), 0, DEFAULT_BUDGET).unwrap(), 1);
        assert_eq!(hh_dimension(&a2, &CentralBimodule::regular(&a2), 1, DEFAULT_BUDGET).unwrap(), 0);
    }

    #[test]
    fn prime_field_sees_extra_classes_only_in_characteristic_two() {
        let dual = bundled::dual_numbers_over::<F32003>();
        let dims = hh_dimensions(&dual, &CentralBimodule::regular(&dual), 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(dims, vec![2, 1, 1, 1]);
        let dual2 = bundled::dual_numbers_over::<crate::ainfty::Fp<2>>();
        let dims = hh_dimensions(&dual2, &CentralBimodule::regular(&dual2), 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(dims, vec![2, 2, 2, 2]);
    }

    #[test]
    fn budget_is_enforced() {
        let m2 = bundled::matrix_algebra();
        let err = hh_dimensions(&m2, &CentralBimodule::regular(&m2), 6, 1000).unwrap_err();
        assert!(matches!(err, AInfinityError::BudgetExceeded { .. }));
    }

    #[test]
    fn cocycle_basis_elements_are_cocycles() {
        let x = bundled::dual_numbers();
        let m = CentralBimodule::regular(&x);
        let basis = cocycle_basis(&x, &m, 3, DEFAULT_BUDGET).unwrap();
        assert!(!basis.is_empty());
        for eta in basis {
            assert!(eta.differential(&x, &m).unwrap().is_zero());
        }
    }

    #[test]
    fn coordinates_round_trip() {
        let x = bundled::a2_split();
        let m = CentralBimodule::regular(&x);
        let mut rng = StdRng::seed_from_u64(3);
        let f = random_normalized_cochain(&x, &m, 2, 3, &mut rng);
        let basis = NormalizedBasis::new(&x, &m, 2);
        assert_eq!(basis.dim() as u128, NormalizedBasis::count(&x, &m, 2));
        assert_eq!(basis.to_cochain(&basis.coordinates(&f).unwrap()), f);
    }

    #[test]
    fn cup_commutes_with_differential() {
        let mut rng = StdRng::seed_from_u64(11);
        let x = bundled::dual_numbers();
        let m = CentralBimodule::regular(&x);
        for gamma in [bundled::ground_field(), bundled::split_pair(), bundled::matrix_algebra()] {
            let xg = x.tensor_with_algebra(&gamma).unwrap();
            let mg = m.tensor_with_algebra(&gamma).unwrap();
            for degree in 1..4 {
                let eta = random_normalized_cochain(&x, &m, degree, 4, &mut rng);
                let lhs = cup_with_identity(&eta, &gamma).unwrap().differential(&xg, &mg).unwrap();
                let rhs = cup_with_identity(&eta.differential(&x, &m).unwrap(), &gamma).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        assert!(cup_with_identity(&Cochain::<Rational>::zero(3), &bundled::matrix_algebra())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn restriction_commutes_with_differential() {
        let mut rng = StdRng::seed_from_u64(5);
        let a2 = bundled::a2_path();
        let dual = bundled::dual_numbers();
        let m = CentralBimodule::regular(&dual);
        for through_x in [true, false] {
            let functor = bundled::a2_to_dual_numbers(&a2, &dual, through_x).unwrap();
            let pulled = m.restrict_along(&functor, &a2);
            pulled.validate(&a2).unwrap();
            for degree in 0..4 {
                let eta = random_normalized_cochain(&dual, &m, degree, 4, &mut rng);
                let lhs = restrict_along_functor(&functor, &a2, &eta).differential(&a2, &pulled).unwrap();
                let rhs = restrict_along_functor(&functor, &a2, &eta.differential(&dual, &m).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn restriction_along_identity_and_zero_maps() {
        let mut rng = StdRng::seed_from_u64(9);
        let x = bundled::a2_split();
        let m = CentralBimodule::regular(&x);
        let eta = random_normalized_cochain(&x, &m, 2, 4, &mut rng);
        let id = LinearFunctor::identity(&x);
        assert_eq!(restrict_along_functor(&id, &x, &eta), eta);

        let a2 = bundled::a2_path();
        let k = bundled::ground_field();
        let quotient = bundled::a2_to_ground_field(&a2, &k, false).unwrap();
        let km = CentralBimodule::regular(&k);
        let mut theta = Cochain::zero(1);
        theta.set(vec![0, 0], vec![0], vec![q(1)]);
        let pulled = restrict_along_functor(&quotient, &a2, &theta);
        assert!(pulled.get(&[0, 1], &[0]).is_none());
        let full = bundled::a2_to_ground_field(&a2, &k, true).unwrap();
        let km_pulled = km.restrict_along(&full, &a2);
        km_pulled.validate(&a2).unwrap();
    }
}
