//! A-infinity categories with finitely many nonzero higher products, the
//! deformation `X_eta`, and an exhaustive checker for the A-infinity identities.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::category::{kron, CentralBimodule, FiniteAlgebra, FiniteLinearCategory, Obj};
use super::cochain::Cochain;
use super::field::Field;
use super::{composable_chains, AInfinityError, Tuples};

type ProductKey = (Vec<Obj>, Vec<usize>);

/// A finite A-infinity category: graded based hom spaces and products `m_i`
/// stored on basis tuples. `m_i` has degree `2 - i`.
#[derive(Debug, Clone, PartialEq)]
pub struct AInfinityStructure<F> {
    objects: Vec<String>,
    /// `degrees[a][b][i]`: degree of basis vector `i` of `hom(a, b)`.
    degrees: Vec<Vec<Vec<i64>>>,
    units: Option<Vec<usize>>,
    products: BTreeMap<usize, HashMap<ProductKey, Vec<F>>>,
}

impl<F: Field> AInfinityStructure<F> {
    /// An empty structure on the given graded spaces; products are added with [`Self::set_product`].
    pub fn new(objects: Vec<String>, degrees: Vec<Vec<Vec<i64>>>, units: Option<Vec<usize>>) -> Self {
        Self {
            objects,
            degrees,
            units,
            products: BTreeMap::new(),
        }
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn dim(&self, a: Obj, b: Obj) -> usize {
        self.degrees[a][b].len()
    }

    pub fn degree_of(&self, a: Obj, b: Obj, i: usize) -> i64 {
        self.degrees[a][b][i]
    }

    pub fn units(&self) -> Option<&[usize]> {
        self.units.as_deref()
    }

    /// Arities with at least one nonzero structure constant.
    pub fn support(&self) -> Vec<usize> {
        self.products
            .iter()
            .filter(|(_, t)| !t.is_empty())
            .map(|(&k, _)| k)
            .collect()
    }

    /// `m_arity` on a chain and basis tuple.
    pub fn product(&self, chain: &[Obj], tuple: &[usize]) -> Option<&Vec<F>> {
        self.products.get(&tuple.len())?.get(&(chain.to_vec(), tuple.to_vec()))
    }

    /// Sets `m_k(tuple)` on `chain` where `k = tuple.len()`; zero vectors erase the entry.
    pub fn set_product(&mut self, chain: Vec<Obj>, tuple: Vec<usize>, value: Vec<F>) {
        assert_eq!(chain.len(), tuple.len() + 1, "chain must have one more object than the tuple");
        let table = self.products.entry(tuple.len()).or_default();
        if value.iter().all(Field::is_zero) {
            table.remove(&(chain, tuple));
        } else {
            table.insert((chain, tuple), value);
        }
    }

    /// Number of stored nonzero structure constants of `m_arity`.
    pub fn num_entries(&self, arity: usize) -> usize {
        self.products.get(&arity).map_or(0, HashMap::len)
    }

    /// Checks shapes and that every `m_i` has degree `2 - i`.
    pub fn validate(&self) -> Result<(), AInfinityError> {
        let n = self.num_objects();
        if self.degrees.len() != n || self.degrees.iter().any(|r| r.len() != n) {
            return Err(AInfinityError::ShapeMismatch("degree table has the wrong shape".into()));
        }
        if let Some(units) = &self.units {
            if units.len() != n {
                return Err(AInfinityError::ShapeMismatch("one unit per object is required".into()));
            }
            for (a, &u) in units.iter().enumerate() {
                if u >= self.dim(a, a) || self.degrees[a][a][u] != 0 {
                    return Err(AInfinityError::InvalidStructure(format!(
                        "unit of {} must be a degree-0 basis vector",
                        self.objects[a]
                    )));
                }
            }
        }
        for (&arity, table) in &self.products {
            if arity == 0 {
                return Err(AInfinityError::InvalidDegree("products of arity 0 are not supported".into()));
            }
            for ((chain, tuple), v) in table {
                if chain.len() != arity + 1 || tuple.len() != arity || chain.iter().any(|&o| o >= n) {
                    return Err(AInfinityError::ShapeMismatch(format!("malformed key for m_{arity}")));
                }
                let mut input_degree = 0;
                for (k, &i) in tuple.iter().enumerate() {
                    if i >= self.dim(chain[k], chain[k + 1]) {
                        return Err(AInfinityError::ShapeMismatch(format!("basis index out of range in m_{arity}")));
                    }
                    input_degree += self.degrees[chain[k]][chain[k + 1]][i];
                }
                let (a, b) = (chain[0], chain[arity]);
                if v.len() != self.dim(a, b) {
                    return Err(AInfinityError::ShapeMismatch(format!("value of m_{arity} has the wrong length")));
                }
                let expected = input_degree + 2 - arity as i64;
                for (j, c) in v.iter().enumerate() {
                    if !c.is_zero() && self.degrees[a][b][j] != expected {
                        return Err(AInfinityError::InvalidDegree(format!(
                            "m_{arity} does not have degree {}",
                            2 - arity as i64
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// `A (x) Gamma`: `m_i(x_1 (x) g_1, ..., x_i (x) g_i) = m_i(x_1, ..., x_i) (x) g_1 ... g_i`.
    pub fn tensor_with_algebra(&self, gamma: &FiniteAlgebra<F>) -> Result<Self, AInfinityError> {
        if gamma.num_objects() != 1 {
            return Err(AInfinityError::ShapeMismatch(
                "the algebra must be a category with exactly one object".into(),
            ));
        }
        let g = gamma.dim(0, 0);
        let degrees = self
            .degrees
            .iter()
            .map(|row| {
                row.iter()
                    .map(|ds| ds.iter().flat_map(|&d| std::iter::repeat(d).take(g)).collect())
                    .collect()
            })
            .collect();
        let units = self
            .units
            .as_ref()
            .map(|us| us.iter().map(|&u| u * g + gamma.identity(0)).collect());
        let mut out = Self::new(self.objects.clone(), degrees, units);
        for (&arity, table) in &self.products {
            let all: Vec<Vec<usize>> = vec![(0..g).collect(); arity];
            for ((chain, tuple), v) in table {
                for gs in Tuples::new(&all) {
                    let mut prod = vec![F::zero(); g];
                    prod[gamma.identity(0)] = F::one();
                    for &f in &gs {
                        prod = gamma.mul_vec_basis(0, 0, 0, &prod, f);
                    }
                    let lifted = tuple.iter().zip(&gs).map(|(&i, &gi)| i * g + gi).collect();
                    out.set_product(chain.clone(), lifted, kron(v, &prod));
                }
            }
        }
        Ok(out)
    }
}

impl<F: Field> FiniteLinearCategory<F> {
    /// The category as an A-infinity category concentrated in degree 0 with only `m_2`.
    pub fn as_ainfinity(&self) -> AInfinityStructure<F> {
        let n = self.num_objects();
        let degrees = (0..n).map(|a| (0..n).map(|b| vec![0; self.dim(a, b)]).collect()).collect();
        let units = (0..n).map(|a| self.identity(a)).collect();
        let mut out = AInfinityStructure::new(self.objects().to_vec(), degrees, Some(units));
        for ((a, b, c), (i, j), v) in self.composition_table().iter() {
            out.set_product(vec![a, b, c], vec![i, j], v.clone());
        }
        out
    }
}

/// The projection `X_eta -> X`: identity on objects, and on each hom space the
/// projection onto the `X(a, b)` summand, which occupies the first basis indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictProjection {
    x_dims: Vec<Vec<usize>>,
    m_dims: Vec<Vec<usize>>,
}

impl StrictProjection {
    /// Image of basis `i` of `X_eta(a, b)`: `Some(i)` on the `X` summand, `None` on `M`.
    pub fn apply(&self, a: Obj, b: Obj, i: usize) -> Option<usize> {
        (i < self.x_dims[a][b]).then_some(i)
    }

    pub fn source_dim(&self, a: Obj, b: Obj) -> usize {
        self.x_dims[a][b] + self.m_dims[a][b]
    }

    pub fn target_dim(&self, a: Obj, b: Obj) -> usize {
        self.x_dims[a][b]
    }

    /// Checks that the projection is a strict A-infinity functor onto `x`:
    /// it intertwines `m_2` and kills every other product.
    pub fn check<F: Field>(&self, deformed: &AInfinityStructure<F>, x: &FiniteLinearCategory<F>) -> bool {
        for (&arity, table) in &deformed.products {
            for ((chain, tuple), v) in table {
                let (a, c) = (chain[0], chain[arity]);
                let image: Vec<F> = v[..self.x_dims[a][c]].to_vec();
                let expected = if arity == 2 {
                    match (self.apply(a, chain[1], tuple[0]), self.apply(chain[1], c, tuple[1])) {
                        (Some(i), Some(j)) => x.compose(a, chain[1], c, i, j),
                        _ => vec![F::zero(); self.x_dims[a][c]],
                    }
                } else {
                    vec![F::zero(); self.x_dims[a][c]]
                };
                if image != expected {
                    return false;
                }
            }
        }
        true
    }
}

/// `X_eta` together with its projection to `X`.
#[derive(Debug, Clone, PartialEq)]
pub struct DeformedCategory<F> {
    pub structure: AInfinityStructure<F>,
    pub projection: StrictProjection,
    pub degree: usize,
}

/// Builds `X_eta` after checking that `eta` has degree at least 3 and is a cocycle.
pub fn deform<F: Field>(
    x: &FiniteLinearCategory<F>,
    m: &CentralBimodule<F>,
    eta: &Cochain<F>,
) -> Result<DeformedCategory<F>, AInfinityError> {
    if eta.degree() < 3 {
        return Err(AInfinityError::InvalidDegree(format!(
            "deformations need a cocycle of degree at least 3, got {}",
            eta.degree()
        )));
    }
    if !eta.differential(x, m)?.is_zero() {
        return Err(AInfinityError::NotACocycle { degree: eta.degree() });
    }
    deform_unchecked(x, m, eta)
}

/// Builds `X_eta` without the cocycle check: `hom = X(a,b) + M(a,b)[n-2]`,
/// `m_2` the square-zero extension product and `m_n(x_1, ..., x_n) = (0, eta(x_1, ..., x_n))`.
pub fn deform_unchecked<F: Field>(
    x: &FiniteLinearCategory<F>,
    m: &CentralBimodule<F>,
    eta: &Cochain<F>,
) -> Result<DeformedCategory<F>, AInfinityError> {
    let n = eta.degree();
    if n < 3 {
        return Err(AInfinityError::InvalidDegree(format!(
            "deformations need a cochain of degree at least 3, got {n}"
        )));
    }
    eta.check_shape(x, m)?;
    let k = x.num_objects();
    let x_dims: Vec<Vec<usize>> = (0..k).map(|a| (0..k).map(|b| x.dim(a, b)).collect()).collect();
    let m_dims: Vec<Vec<usize>> = m.dims().to_vec();
    let m_degree = 2 - n as i64;
    let degrees = (0..k)
        .map(|a| {
            (0..k)
                .map(|b| {
                    let mut d = vec![0; x_dims[a][b]];
                    d.extend(std::iter::repeat(m_degree).take(m_dims[a][b]));
                    d
                })
                .collect()
        })
        .collect();
    let units = (0..k).map(|a| x.identity(a)).collect();
    let mut out = AInfinityStructure::new(x.objects().to_vec(), degrees, Some(units));
    let embed_x = |a: Obj, c: Obj, v: Vec<F>| {
        let mut w = v;
        w.extend(std::iter::repeat(F::zero()).take(m_dims[a][c]));
        w
    };
    let embed_m = |a: Obj, c: Obj, v: &[F]| {
        let mut w = vec![F::zero(); x_dims[a][c]];
        w.extend_from_slice(v);
        w
    };
    for ((a, b, c), (i, j), v) in x.composition_table().iter() {
        out.set_product(vec![a, b, c], vec![i, j], embed_x(a, c, v.clone()));
    }
    for ((a, b, c), (i, j), v) in m.left_table().iter() {
        out.set_product(vec![a, b, c], vec![i, x_dims[b][c] + j], embed_m(a, c, v));
    }
    for ((a, b, c), (i, j), v) in m.right_table().iter() {
        out.set_product(vec![a, b, c], vec![x_dims[a][b] + i, j], embed_m(a, c, v));
    }
    for (chain, tuple, v) in eta.entries() {
        out.set_product(chain.clone(), tuple.clone(), embed_m(chain[0], chain[n], v));
    }
    Ok(DeformedCategory {
        structure: out,
        projection: StrictProjection { x_dims, m_dims },
        degree: n,
    })
}

/// Default bound for the identity check: `max(7, n + 2)` for a structure whose top product is `m_n`.
pub fn default_k_max<F: Field>(a: &AInfinityStructure<F>) -> usize {
    let top = a.support().into_iter().max().unwrap_or(2);
    7.max(top + 2)
}

/// Outcome of the identity of arity `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub k: usize,
    /// No pair of supported products composes to arity `k`, so the identity holds trivially.
    pub vacuous: bool,
    pub tuples: u128,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StasheffFailure<F> {
    pub k: usize,
    pub chain: Vec<Obj>,
    pub tuple: Vec<usize>,
    pub residual: Vec<F>,
}

/// Strict unitality: `m_2(1, x) = x = m_2(x, 1)` and every other `m_i` vanishes on identities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Unitality {
    NotApplicable,
    Holds,
    Fails { arity: usize, chain: Vec<Obj>, tuple: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct StasheffReport<F> {
    pub k_max: usize,
    pub checks: Vec<IdentityCheck>,
    pub first_failure: Option<StasheffFailure<F>>,
    pub unitality: Unitality,
    pub evaluations: u128,
}

impl<F: PartialEq> StasheffReport<F> {
    /// True when every checked identity holds.
    pub fn identities_hold(&self) -> bool {
        self.first_failure.is_none()
    }

    /// True when the identities hold and, if units are declared, strict unitality holds.
    pub fn fully_passed(&self) -> bool {
        self.first_failure.is_none() && !matches!(self.unitality, Unitality::Fails { .. })
    }

    /// Largest `k` up to which every identity was checked and holds.
    pub fn passes_through(&self) -> usize {
        match &self.first_failure {
            Some(f) => f.k - 1,
            None => self.k_max,
        }
    }
}

fn pairs_for<F: Field>(a: &AInfinityStructure<F>, k: usize) -> Vec<(usize, usize, usize)> {
    let support = a.support();
    let mut out = Vec::new();
    for &s in &support {
        if s > k {
            continue;
        }
        let u = k + 1 - s;
        if !support.contains(&u) {
            continue;
        }
        for r in 0..u {
            out.push((r, s, u - 1 - r));
        }
    }
    out
}

fn count_tuples<F: Field>(a: &AInfinityStructure<F>, k: usize) -> u128 {
    let n = a.num_objects();
    let mut paths: Vec<Vec<u128>> = (0..n).map(|x| (0..n).map(|y| u128::from(x == y)).collect()).collect();
    for _ in 0..k {
        let mut next = vec![vec![0u128; n]; n];
        for x in 0..n {
            for z in 0..n {
                for y in 0..n {
                    next[x][z] = next[x][z].saturating_add(paths[x][y].saturating_mul(a.dim(y, z) as u128));
                }
            }
        }
        paths = next;
    }
    paths.iter().flatten().fold(0u128, |acc, &v| acc.saturating_add(v))
}

/// `sum_{r+s+t=k} (-1)^(r+st) m_(r+1+t)(1^r (x) m_s (x) 1^t)` on one basis tuple.
fn identity_residual<F: Field>(
    a: &AInfinityStructure<F>,
    pairs: &[(usize, usize, usize)],
    chain: &[Obj],
    tuple: &[usize],
) -> Vec<F> {
    let k = tuple.len();
    let mut out = vec![F::zero(); a.dim(chain[0], chain[k])];
    for &(r, s, t) in pairs {
        let Some(inner) = a.product(&chain[r..=r + s], &tuple[r..r + s]) else {
            continue;
        };
        let koszul: i64 = tuple[..r]
            .iter()
            .enumerate()
            .map(|(p, &i)| a.degree_of(chain[p], chain[p + 1], i))
            .sum::<i64>()
            * s as i64;
        let exponent = r as i64 + (s * t) as i64 + koszul;
        let sign = if exponent.rem_euclid(2) == 0 { F::one() } else { -F::one() };
        let mut outer_chain = chain[..=r].to_vec();
        outer_chain.extend_from_slice(&chain[r + s..]);
        let mut outer_tuple = tuple[..r].to_vec();
        outer_tuple.push(0);
        outer_tuple.extend_from_slice(&tuple[r + s..]);
        for (j, c) in inner.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            outer_tuple[r] = j;
            if let Some(v) = a.product(&outer_chain, &outer_tuple) {
                let coeff = sign.clone() * c.clone();
                super::category::axpy(&mut out, &coeff, v);
            }
        }
    }
    out
}

fn check_unitality<F: Field>(a: &AInfinityStructure<F>) -> Unitality {
    let Some(units) = a.units() else {
        return Unitality::NotApplicable;
    };
    let is_unit = |x: Obj, y: Obj, i: usize| x == y && units[x] == i;
    let mut failures: Vec<(usize, Vec<Obj>, Vec<usize>)> = Vec::new();
    for (&arity, table) in &a.products {
        if arity == 2 {
            continue;
        }
        for (chain, tuple) in table.keys() {
            if tuple.iter().enumerate().any(|(p, &i)| is_unit(chain[p], chain[p + 1], i)) {
                failures.push((arity, chain.clone(), tuple.clone()));
            }
        }
    }
    let n = a.num_objects();
    for x in 0..n {
        for y in 0..n {
            for i in 0..a.dim(x, y) {
                let mut e = vec![F::zero(); a.dim(x, y)];
                e[i] = F::one();
                let zero = vec![F::zero(); a.dim(x, y)];
                let left = a.product(&[x, x, y], &[units[x], i]).unwrap_or(&zero);
                if *left != e {
                    failures.push((2, vec![x, x, y], vec![units[x], i]));
                }
                let right = a.product(&[x, y, y], &[i, units[y]]).unwrap_or(&zero);
                if *right != e {
                    failures.push((2, vec![x, y, y], vec![i, units[y]]));
                }
            }
        }
    }
    match failures.into_iter().min_by(|p, q| (p.0, &p.1, &p.2).cmp(&(q.0, &q.1, &q.2))) {
        Some((arity, chain, tuple)) => Unitality::Fails { arity, chain, tuple },
        None => Unitality::Holds,
    }
}

/// Evaluates the A-infinity identities of every arity `k <= k_max` on all
/// basis tuples, stopping at the first arity that fails, and checks strict
/// unitality when units are declared.
///
/// The total number of tuple evaluations is computed up front and must not exceed `budget`.
pub fn verify_stasheff<F: Field>(
    a: &AInfinityStructure<F>,
    k_max: usize,
    budget: u64,
) -> Result<StasheffReport<F>, AInfinityError> {
    a.validate()?;
    let plan: Vec<(usize, Vec<(usize, usize, usize)>, u128)> = (1..=k_max)
        .map(|k| {
            let pairs = pairs_for(a, k);
            let tuples = count_tuples(a, k);
            (k, pairs, tuples)
        })
        .collect();
    let needed = plan
        .iter()
        .filter(|(_, pairs, _)| !pairs.is_empty())
        .fold(0u128, |acc, (_, _, t)| acc.saturating_add(*t));
    if needed > u128::from(budget) {
        return Err(AInfinityError::BudgetExceeded { needed, limit: budget });
    }

    let mut checks = Vec::new();
    let mut first_failure = None;
    let mut evaluations = 0u128;
    for (k, pairs, tuples) in plan {
        if first_failure.is_some() {
            break;
        }
        if pairs.is_empty() {
            checks.push(IdentityCheck {
                k,
                vacuous: true,
                tuples,
                passed: true,
            });
            continue;
        }
        let chains = composable_chains(a.num_objects(), k, |x, y| a.dim(x, y));
        let failure = chains.par_iter().find_map_first(|chain| {
            let choices: Vec<Vec<usize>> = chain.windows(2).map(|w| (0..a.dim(w[0], w[1])).collect()).collect();
            Tuples::new(&choices).find_map(|tuple| {
                let residual = identity_residual(a, &pairs, chain, &tuple);
                (!residual.iter().all(Field::is_zero)).then(|| StasheffFailure {
                    k,
                    chain: chain.clone(),
                    tuple,
                    residual,
                })
            })
        });
        evaluations += tuples;
        checks.push(IdentityCheck {
            k,
            vacuous: false,
            tuples,
            passed: failure.is_none(),
        });
        first_failure = failure;
    }
    Ok(StasheffReport {
        k_max,
        checks,
        first_failure,
        unitality: check_unitality(a),
        evaluations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ainfty::bundled;
    use crate::ainfty::field::Rational;
    use crate::ainfty::DEFAULT_BUDGET;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    #[test]
    fn categories_pass_as_ainfinity() {
        for x in [bundled::ground_field(), bundled::dual_numbers(), bundled::a2_path(), bundled::a2_split()] {
            let report = verify_stasheff(&x.as_ainfinity(), 7, DEFAULT_BUDGET).unwrap();
            assert!(report.fully_passed());
            assert_eq!(report.unitality, Unitality::Holds);
            assert!(report.checks.iter().filter(|c| !c.vacuous).all(|c| c.k == 3));
        }
    }

    #[test]
    fn dual_numbers_cocycle_deforms() {
        let x = bundled::dual_numbers();
        let m = CentralBimodule::regular(&x);
        let eta = bundled::dual_numbers_cocycle();
        let deformed = deform(&x, &m, &eta).unwrap();
        assert_eq!(deformed.structure.support(), vec![2, 3]);
        assert!(deformed.projection.check(&deformed.structure, &x));
        let report = verify_stasheff(&deformed.structure, 7, DEFAULT_BUDGET).unwrap();
        assert!(report.fully_passed());
        assert_eq!(report.passes_through(), 7);
        let live: Vec<usize> = report.checks.iter().filter(|c| !c.vacuous).map(|c| c.k).collect();
        assert_eq!(live, vec![3, 4, 5]);
    }

    #[test]
    fn perturbed_cochain_fails_at_four() {
        let x = bundled::dual_numbers();
        let m = CentralBimodule::regular(&x);
        let eta = bundled::dual_numbers_perturbed();
        assert_eq!(deform(&x, &m, &eta).unwrap_err(), AInfinityError::NotACocycle { degree: 3 });
        let deformed = deform_unchecked(&x, &m, &eta).unwrap();
        let report = verify_stasheff(&deformed.structure, 7, DEFAULT_BUDGET).unwrap();
        let failure = report.first_failure.clone().expect("must fail");
        assert_eq!(failure.k, 4);
        assert_eq!(report.passes_through(), 3);
    }

    #[test]
    fn zero_cocycle_gives_square_zero_extension() {
        let x = bundled::a2_path();
        let m = CentralBimodule::regular(&x);
        let deformed = deform(&x, &m, &Cochain::zero(4)).unwrap();
        assert_eq!(deformed.structure.support(), vec![2]);
        let report = verify_stasheff(&deformed.structure, 8, DEFAULT_BUDGET).unwrap();
        assert!(report.fully_passed());
    }

    #[test]
    fn low_degree_deformations_are_rejected() {
        let x = bundled::dual_numbers();
        let m = CentralBimodule::regular(&x);
        assert!(matches!(deform(&x, &m, &Cochain::zero(2)), Err(AInfinityError::InvalidDegree(_))));
    }

    #[test]
    fn leibniz_violation_fails_at_two() {
        // Basis: unit (deg 0), y (deg -1), z (deg 0); m_1(y) = z, m_2(z, z) = z.
        let mut a = AInfinityStructure::new(vec!["o".into()], vec![vec![vec![0, -1, 0]]], Some(vec![0]));
        a.set_product(vec![0, 0], vec![1], vec![q(0), q(0), q(1)]);
        for i in 0..3 {
            let mut e = vec![q(0); 3];
            e[i] = q(1);
            a.set_product(vec![0, 0, 0], vec![0, i], e.clone());
            a.set_product(vec![0, 0, 0], vec![i, 0], e);
        }
        a.set_product(vec![0, 0, 0], vec![2, 2], vec![q(0), q(0), q(1)]);
        let report = verify_stasheff(&a, 5, DEFAULT_BUDGET).unwrap();
        assert_eq!(report.first_failure.unwrap().k, 2);
    }

    #[test]
    fn wrong_degree_is_rejected() {
        let mut a = AInfinityStructure::new(vec!["o".into()], vec![vec![vec![0, 0]]], None);
        a.set_product(vec![0, 0, 0, 0], vec![1, 1, 1], vec![q(0), q(1)]);
        assert!(matches!(a.validate(), Err(AInfinityError::InvalidDegree(_))));
    }

    #[test]
    fn budget_is_enforced() {
        let x = bundled::dual_numbers();
        let m = CentralBimodule::regular(&x);
        let deformed = deform(&x, &m, &bundled::dual_numbers_cocycle()).unwrap();
        let err = verify_stasheff(&deformed.structure, 7, 100).unwrap_err();
        assert!(matches!(err, AInfinityError::BudgetExceeded { .. }));
    }

    #[test]
    fn tensor_matches_deformation_of_tensor() {
        let x = bundled::dual_numbers();
        let m = CentralBimodule::regular(&x);
        let eta = bundled::dual_numbers_cocycle();
        let deformed = deform(&x, &m, &eta).unwrap();
        for gamma in [bundled::ground_field(), bundled::split_pair(), bundled::matrix_algebra()] {
            let lhs = deformed.structure.tensor_with_algebra(&gamma).unwrap();
            let xg = x.tensor_with_algebra(&gamma).unwrap();
            let mg = m.tensor_with_algebra(&gamma).unwrap();
            let cup = crate::ainfty::cup_with_identity(&eta, &gamma).unwrap();
            let rhs = deform(&xg, &mg, &cup).unwrap().structure;
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn unitality_detects_non_normalized_cochains() {
        let x = bundled::dual_numbers();
        let m = CentralBimodule::regular(&x);
        let mut eta = Cochain::zero(3);
        eta.set(vec![0, 0, 0, 0], vec![0, 1, 1], vec![q(0), q(1)]);
        let deformed = deform_unchecked(&x, &m, &eta).unwrap();
        let report = verify_stasheff(&deformed.structure, 4, DEFAULT_BUDGET).unwrap();
        assert!(matches!(report.unitality, Unitality::Fails { arity: 3, .. }));
    }
}
