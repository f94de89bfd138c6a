//! Finite linear categories, bimodules over them, and linear functors.
//!
//! Morphisms compose in path order: for `x` in `hom(a, b)` and `y` in
//! `hom(b, c)` the product `x y` lives in `hom(a, c)`. Every hom space has a
//! fixed basis and the identity of each object is one of the basis vectors of
//! `hom(a, a)`.

use std::collections::HashMap;

use super::field::Field;
use super::AInfinityError;

pub type Obj = usize;

/// Structure constants of a bilinear map `V(a,b) x W(b,c) -> U(a,c)`.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct ProductTable<F> {
    /// `(a, b, c) -> [i * dim_w(b, c) + j] -> vector in U(a, c)`; zero vectors are not stored.
    entries: HashMap<(Obj, Obj, Obj), HashMap<(usize, usize), Vec<F>>>,
}

impl<F> Default for ProductTable<F> {
    fn default() -> Self {
        Self {
            entries: HashMap::new(),
        }
    }
}

impl<F: Field> ProductTable<F> {
    pub(crate) fn get(&self, a: Obj, b: Obj, c: Obj, i: usize, j: usize) -> Option<&Vec<F>> {
        self.entries.get(&(a, b, c)).and_then(|t| t.get(&(i, j)))
    }

    /// Adds `coeff * e_out` (in a space of dimension `out_dim`) to the product of basis `i` and `j`.
    pub(crate) fn add(&mut self, key: (Obj, Obj, Obj), i: usize, j: usize, out: usize, out_dim: usize, coeff: F) {
        let table = self.entries.entry(key).or_default();
        let slot = table.entry((i, j)).or_insert_with(|| vec![F::zero(); out_dim]);
        slot[out] = slot[out].clone() + coeff;
        if slot.iter().all(Field::is_zero) {
            table.remove(&(i, j));
        }
    }

    pub(crate) fn set(&mut self, key: (Obj, Obj, Obj), i: usize, j: usize, value: Vec<F>) {
        let table = self.entries.entry(key).or_default();
        if value.iter().all(Field::is_zero) {
            table.remove(&(i, j));
        } else {
            table.insert((i, j), value);
        }
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = ((Obj, Obj, Obj), (usize, usize), &Vec<F>)> {
        self.entries
            .iter()
            .flat_map(|(&key, t)| t.iter().map(move |(&ij, v)| (key, ij, v)))
    }
}

fn unit_vector<F: Field>(dim: usize, at: usize) -> Vec<F> {
    let mut v = vec![F::zero(); dim];
    v[at] = F::one();
    v
}

pub(crate) fn axpy<F: Field>(acc: &mut [F], coeff: &F, v: &[F]) {
    for (slot, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *slot = slot.clone() + coeff.clone() * x.clone();
        }
    }
}

/// A small `k`-linear category with based, finite-dimensional hom spaces.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteLinearCategory<F> {
    objects: Vec<String>,
    dims: Vec<Vec<usize>>,
    identities: Vec<usize>,
    composition: ProductTable<F>,
}

/// A finite-dimensional unital algebra is a category with one object.
pub type FiniteAlgebra<F> = FiniteLinearCategory<F>;

impl<F: Field> FiniteLinearCategory<F> {
    pub fn builder(objects: &[&str]) -> CategoryBuilder<F> {
        CategoryBuilder::new(objects.iter().map(|s| s.to_string()).collect())
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn object_index(&self, name: &str) -> Option<Obj> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn dim(&self, a: Obj, b: Obj) -> usize {
        self.dims[a][b]
    }

    pub fn dims(&self) -> &[Vec<usize>] {
        &self.dims
    }

    /// Basis index of the identity of `a`.
    pub fn identity(&self, a: Obj) -> usize {
        self.identities[a]
    }

    pub fn is_identity(&self, a: Obj, b: Obj, idx: usize) -> bool {
        a == b && self.identities[a] == idx
    }

    /// Product of basis `i` of `hom(a, b)` with basis `j` of `hom(b, c)`.
    pub fn compose(&self, a: Obj, b: Obj, c: Obj, i: usize, j: usize) -> Vec<F> {
        self.composition
            .get(a, b, c, i, j)
            .cloned()
            .unwrap_or_else(|| vec![F::zero(); self.dims[a][c]])
    }

    pub(crate) fn composition_table(&self) -> &ProductTable<F> {
        &self.composition
    }

    /// Builds a one-object algebra of dimension `dim` with the given unit and
    /// products `(out, in1, in2, coeff)` among non-unit basis vectors.
    pub fn algebra(
        name: &str,
        dim: usize,
        unit: usize,
        products: &[(usize, usize, usize, F)],
    ) -> Result<Self, AInfinityError> {
        let mut b = Self::builder(&[name]).hom(0, 0, dim).identity(0, unit);
        for (out, i, j, c) in products {
            b = b.compose(0, 0, 0, *out, *i, *j, c.clone());
        }
        b.build()
    }

    /// Dimension of the center: families `(z_a)` with `z_a` in `hom(a,a)` and `x z_b = z_a x`.
    pub fn center_dimension(&self) -> usize {
        let n = self.num_objects();
        let offsets: Vec<usize> = (0..n)
            .scan(0, |acc, a| {
                let o = *acc;
                *acc += self.dims[a][a];
                Some(o)
            })
            .collect();
        let unknowns: usize = (0..n).map(|a| self.dims[a][a]).sum();
        let mut rows = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for i in 0..self.dims[a][b] {
                    // x_i z_b - z_a x_i = 0, one equation per output coordinate.
                    let mut eqs = vec![vec![F::zero(); unknowns]; self.dims[a][b]];
                    for k in 0..self.dims[b][b] {
                        let v = self.compose(a, b, b, i, k);
                        for (out, c) in v.iter().enumerate() {
                            eqs[out][offsets[b] + k] = eqs[out][offsets[b] + k].clone() + c.clone();
                        }
                    }
                    for k in 0..self.dims[a][a] {
                        let v = self.compose(a, a, b, k, i);
                        for (out, c) in v.iter().enumerate() {
                            eqs[out][offsets[a] + k] = eqs[out][offsets[a] + k].clone() - c.clone();
                        }
                    }
                    rows.extend(eqs);
                }
            }
        }
        let m = super::linalg::Matrix::from_rows(rows, unknowns);
        unknowns - m.rank()
    }

    /// `X (x) Gamma`: same objects, `hom(a,b) (x) Gamma` with basis index `i * dim(Gamma) + g`.
    pub fn tensor_with_algebra(&self, gamma: &FiniteAlgebra<F>) -> Result<Self, AInfinityError> {
        let g = algebra_dim(gamma)?;
        let dims: Vec<Vec<usize>> = self
            .dims
            .iter()
            .map(|row| row.iter().map(|d| d * g).collect())
            .collect();
        let identities = self
            .identities
            .iter()
            .map(|&id| id * g + gamma.identity(0))
            .collect();
        let mut composition = ProductTable::default();
        for ((a, b, c), (i, j), v) in self.composition.iter() {
            for ga in 0..g {
                for gb in 0..g {
                    let gv = gamma.compose(0, 0, 0, ga, gb);
                    composition.set((a, b, c), i * g + ga, j * g + gb, kron(v, &gv));
                }
            }
        }
        Ok(Self {
            objects: self.objects.clone(),
            dims,
            identities,
            composition,
        })
    }

    /// Checks associativity and the unit laws on all basis triples and pairs.
    pub fn validate(&self) -> Result<(), AInfinityError> {
        let n = self.num_objects();
        for a in 0..n {
            if self.identities[a] >= self.dims[a][a] {
                return Err(AInfinityError::InvalidStructure(format!(
                    "identity of {} is not a basis vector of its endomorphisms",
                    self.objects[a]
                )));
            }
            for b in 0..n {
                for i in 0..self.dims[a][b] {
                    let e = unit_vector::<F>(self.dims[a][b], i);
                    if self.compose(a, a, b, self.identities[a], i) != e
                        || self.compose(a, b, b, i, self.identities[b]) != e
                    {
                        return Err(AInfinityError::InvalidStructure(format!(
                            "identity law fails on basis {i} of hom({}, {})",
                            self.objects[a], self.objects[b]
                        )));
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        for i in 0..self.dims[a][b] {
                            for j in 0..self.dims[b][c] {
                                for k in 0..self.dims[c][d] {
                                    let left = self.mul_vec_basis(a, c, d, &self.compose(a, b, c, i, j), k);
                                    let right = self.mul_basis_vec(a, b, d, i, &self.compose(b, c, d, j, k));
                                    if left != right {
                                        return Err(AInfinityError::InvalidStructure(format!(
                                            "composition is not associative on ({i}, {j}, {k}) over {}, {}, {}, {}",
                                            self.objects[a], self.objects[b], self.objects[c], self.objects[d]
                                        )));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `v * e_k` for `v` in `hom(a, b)`, `e_k` in `hom(b, c)`.
    pub(crate) fn mul_vec_basis(&self, a: Obj, b: Obj, c: Obj, v: &[F], k: usize) -> Vec<F> {
        let mut out = vec![F::zero(); self.dims[a][c]];
        for (i, coeff) in v.iter().enumerate() {
            if !coeff.is_zero() {
                axpy(&mut out, coeff, &self.compose(a, b, c, i, k));
            }
        }
        out
    }

    /// `e_i * v` for `e_i` in `hom(a, b)`, `v` in `hom(b, c)`.
    pub(crate) fn mul_basis_vec(&self, a: Obj, b: Obj, c: Obj, i: usize, v: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dims[a][c]];
        for (k, coeff) in v.iter().enumerate() {
            if !coeff.is_zero() {
                axpy(&mut out, coeff, &self.compose(a, b, c, i, k));
            }
        }
        out
    }
}

fn algebra_dim<F: Field>(gamma: &FiniteAlgebra<F>) -> Result<usize, AInfinityError> {
    if gamma.num_objects() != 1 {
        return Err(AInfinityError::ShapeMismatch(
            "the algebra must be a category with exactly one object".into(),
        ));
    }
    Ok(gamma.dim(0, 0))
}

/// Outer product `v (x) w` with index `i * len(w) + g`.
pub(crate) fn kron<F: Field>(v: &[F], w: &[F]) -> Vec<F> {
    let mut out = Vec::with_capacity(v.len() * w.len());
    for x in v {
        for y in w {
            out.push(x.clone() * y.clone());
        }
    }
    out
}

pub struct CategoryBuilder<F> {
    objects: Vec<String>,
    dims: Vec<Vec<usize>>,
    identities: Vec<Option<usize>>,
    products: Vec<(Obj, Obj, Obj, usize, usize, usize, F)>,
}

impl<F: Field> CategoryBuilder<F> {
    pub fn new(objects: Vec<String>) -> Self {
        let n = objects.len();
        Self {
            objects,
            dims: vec![vec![0; n]; n],
            identities: vec![None; n],
            products: Vec::new(),
        }
    }

    pub fn hom(mut self, a: Obj, b: Obj, dim: usize) -> Self {
        self.dims[a][b] = dim;
        self
    }

    pub fn identity(mut self, a: Obj, idx: usize) -> Self {
        self.identities[a] = Some(idx);
        self
    }

    /// `coeff * e_out` is added to the product of basis `in1` of `hom(a,b)`
    /// with basis `in2` of `hom(b,c)`. Products with identities are implicit.
    #[allow(clippy::too_many_arguments)]
    pub fn compose(mut self, a: Obj, b: Obj, c: Obj, out: usize, in1: usize, in2: usize, coeff: F) -> Self {
        self.products.push((a, b, c, out, in1, in2, coeff));
        self
    }

    pub fn build(self) -> Result<FiniteLinearCategory<F>, AInfinityError> {
        let n = self.objects.len();
        let mut identities = Vec::with_capacity(n);
        for a in 0..n {
            let id = self.identities[a].ok_or_else(|| {
                AInfinityError::InvalidStructure(format!("object {} has no identity", self.objects[a]))
            })?;
            if id >= self.dims[a][a] {
                return Err(AInfinityError::InvalidStructure(format!(
                    "identity index {id} out of range for {}",
                    self.objects[a]
                )));
            }
            identities.push(id);
        }
        let mut composition = ProductTable::default();
        for (a, b, c, out, i, j, coeff) in self.products {
            if a >= n || b >= n || c >= n {
                return Err(AInfinityError::InvalidStructure("object index out of range".into()));
            }
            if i >= self.dims[a][b] || j >= self.dims[b][c] || out >= self.dims[a][c] {
                return Err(AInfinityError::InvalidStructure(format!(
                    "composition record ({out}, {i}, {j}) out of range for {}, {}, {}",
                    self.objects[a], self.objects[b], self.objects[c]
                )));
            }
            if (a == b && i == identities[a]) || (b == c && j == identities[b]) {
                return Err(AInfinityError::InvalidStructure(
                    "compositions with identities are implicit and may not be given".into(),
                ));
            }
            composition.add((a, b, c), i, j, out, self.dims[a][c], coeff);
        }
        for a in 0..n {
            for b in 0..n {
                for i in 0..self.dims[a][b] {
                    let e = unit_vector(self.dims[a][b], i);
                    composition.set((a, a, b), identities[a], i, e.clone());
                    composition.set((a, b, b), i, identities[b], e);
                }
            }
        }
        let cat = FiniteLinearCategory {
            objects: self.objects,
            dims: self.dims,
            identities,
            composition,
        };
        cat.validate()?;
        Ok(cat)
    }
}

/// A bimodule `M` over a finite linear category with left action
/// `X(a,b) x M(b,c) -> M(a,c)` and right action `M(a,b) x X(b,c) -> M(a,c)`.
///
/// Over a field both actions restrict to the same scalar multiplication, so
/// unital actions make `M` automatically `k`-central.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralBimodule<F> {
    dims: Vec<Vec<usize>>,
    left: ProductTable<F>,
    right: ProductTable<F>,
}

impl<F: Field> CentralBimodule<F> {
    /// `X` as a bimodule over itself.
    pub fn regular(x: &FiniteLinearCategory<F>) -> Self {
        Self {
            dims: x.dims.clone(),
            left: x.composition.clone(),
            right: x.composition.clone(),
        }
    }

    pub fn builder(x: &FiniteLinearCategory<F>) -> BimoduleBuilder<'_, F> {
        BimoduleBuilder {
            category: x,
            dims: vec![vec![0; x.num_objects()]; x.num_objects()],
            left: Vec::new(),
            right: Vec::new(),
        }
    }

    pub fn dim(&self, a: Obj, b: Obj) -> usize {
        self.dims[a][b]
    }

    pub fn dims(&self) -> &[Vec<usize>] {
        &self.dims
    }

    /// `e_i * e_j` with `e_i` in `X(a,b)`, `e_j` in `M(b,c)`.
    pub fn left_action(&self, a: Obj, b: Obj, c: Obj, i: usize, j: usize) -> Vec<F> {
        self.left
            .get(a, b, c, i, j)
            .cloned()
            .unwrap_or_else(|| vec![F::zero(); self.dims[a][c]])
    }

    /// `e_i * e_j` with `e_i` in `M(a,b)`, `e_j` in `X(b,c)`.
    pub fn right_action(&self, a: Obj, b: Obj, c: Obj, i: usize, j: usize) -> Vec<F> {
        self.right
            .get(a, b, c, i, j)
            .cloned()
            .unwrap_or_else(|| vec![F::zero(); self.dims[a][c]])
    }

    pub(crate) fn left_table(&self) -> &ProductTable<F> {
        &self.left
    }

    pub(crate) fn right_table(&self) -> &ProductTable<F> {
        &self.right
    }

    /// `x * v` for a basis element `x` of `X(a,b)` and `v` in `M(b,c)`.
    pub(crate) fn act_left(&self, a: Obj, b: Obj, c: Obj, i: usize, v: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dims[a][c]];
        for (j, coeff) in v.iter().enumerate() {
            if !coeff.is_zero() {
                if let Some(w) = self.left.get(a, b, c, i, j) {
                    axpy(&mut out, coeff, w);
                }
            }
        }
        out
    }

    /// `v * y` for `v` in `M(a,b)` and a basis element `y` of `X(b,c)`.
    pub(crate) fn act_right(&self, a: Obj, b: Obj, c: Obj, v: &[F], j: usize) -> Vec<F> {
        let mut out = vec![F::zero(); self.dims[a][c]];
        for (i, coeff) in v.iter().enumerate() {
            if !coeff.is_zero() {
                if let Some(w) = self.right.get(a, b, c, i, j) {
                    axpy(&mut out, coeff, w);
                }
            }
        }
        out
    }

    /// Checks the bimodule axioms on all basis elements.
    pub fn validate(&self, x: &FiniteLinearCategory<F>) -> Result<(), AInfinityError> {
        let n = x.num_objects();
        if self.dims.len() != n || self.dims.iter().any(|r| r.len() != n) {
            return Err(AInfinityError::ShapeMismatch(
                "bimodule and category have different object counts".into(),
            ));
        }
        let fail = |what: &str| Err(AInfinityError::InvalidStructure(format!("bimodule axiom fails: {what}")));
        for a in 0..n {
            for b in 0..n {
                for j in 0..self.dims[a][b] {
                    let e = unit_vector::<F>(self.dims[a][b], j);
                    if self.left_action(a, a, b, x.identity(a), j) != e {
                        return fail("left unit");
                    }
                    if self.right_action(a, b, b, j, x.identity(b)) != e {
                        return fail("right unit");
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        // (x y) m = x (y m)
                        for i in 0..x.dim(a, b) {
                            for j in 0..x.dim(b, c) {
                                for k in 0..self.dims[c][d] {
                                    let xy = x.compose(a, b, c, i, j);
                                    let mut lhs = vec![F::zero(); self.dims[a][d]];
                                    for (l, coeff) in xy.iter().enumerate() {
                                        if !coeff.is_zero() {
                                            axpy(&mut lhs, coeff, &self.left_action(a, c, d, l, k));
                                        }
                                    }
                                    let ym = self.left_action(b, c, d, j, k);
                                    if lhs != self.act_left(a, b, d, i, &ym) {
                                        return fail("left associativity");
                                    }
                                }
                            }
                        }
                        // (x m) y = x (m y)
                        for i in 0..x.dim(a, b) {
                            for j in 0..self.dims[b][c] {
                                for k in 0..x.dim(c, d) {
                                    let xm = self.left_action(a, b, c, i, j);
                                    let lhs = self.act_right(a, c, d, &xm, k);
                                    let my = self.right_action(b, c, d, j, k);
                                    if lhs != self.act_left(a, b, d, i, &my) {
                                        return fail("middle associativity");
                                    }
                                }
                            }
                        }
                        // (m x) y = m (x y)
                        for i in 0..self.dims[a][b] {
                            for j in 0..x.dim(b, c) {
                                for k in 0..x.dim(c, d) {
                                    let mx = self.right_action(a, b, c, i, j);
                                    let lhs = self.act_right(a, c, d, &mx, k);
                                    let xy = x.compose(b, c, d, j, k);
                                    let mut rhs = vec![F::zero(); self.dims[a][d]];
                                    for (l, coeff) in xy.iter().enumerate() {
                                        if !coeff.is_zero() {
                                            axpy(&mut rhs, coeff, &self.right_action(a, b, d, i, l));
                                        }
                                    }
                                    if lhs != rhs {
                                        return fail("right associativity");
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `M (x) Gamma` as a bimodule over `X (x) Gamma`.
    pub fn tensor_with_algebra(&self, gamma: &FiniteAlgebra<F>) -> Result<Self, AInfinityError> {
        let g = algebra_dim(gamma)?;
        let tensor_table = |table: &ProductTable<F>| {
            let mut out = ProductTable::default();
            for (key, (i, j), v) in table.iter() {
                for ga in 0..g {
                    for gb in 0..g {
                        let gv = gamma.compose(0, 0, 0, ga, gb);
                        out.set(key, i * g + ga, j * g + gb, kron(v, &gv));
                    }
                }
            }
            out
        };
        Ok(Self {
            dims: self.dims.iter().map(|r| r.iter().map(|d| d * g).collect()).collect(),
            left: tensor_table(&self.left),
            right: tensor_table(&self.right),
        })
    }

    /// `F^* M` over the source of `functor`.
    pub fn restrict_along(&self, functor: &LinearFunctor<F>, source: &FiniteLinearCategory<F>) -> Self {
        let n = source.num_objects();
        let map = &functor.object_map;
        let dims: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| self.dims[map[a]][map[b]]).collect())
            .collect();
        let mut left = ProductTable::default();
        let mut right = ProductTable::default();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for i in 0..source.dim(a, b) {
                        let fx = functor.apply(a, b, i);
                        for j in 0..dims[b][c] {
                            let mut v = vec![F::zero(); dims[a][c]];
                            for (l, coeff) in fx.iter().enumerate() {
                                if !coeff.is_zero() {
                                    axpy(&mut v, coeff, &self.left_action(map[a], map[b], map[c], l, j));
                                }
                            }
                            left.set((a, b, c), i, j, v);
                        }
                    }
                    for i in 0..dims[a][b] {
                        for j in 0..source.dim(b, c) {
                            let fy = functor.apply(b, c, j);
                            let mut v = vec![F::zero(); dims[a][c]];
                            for (l, coeff) in fy.iter().enumerate() {
                                if !coeff.is_zero() {
                                    axpy(&mut v, coeff, &self.right_action(map[a], map[b], map[c], i, l));
                                }
                            }
                            right.set((a, b, c), i, j, v);
                        }
                    }
                }
            }
        }
        Self { dims, left, right }
    }
}

pub struct BimoduleBuilder<'a, F> {
    category: &'a FiniteLinearCategory<F>,
    dims: Vec<Vec<usize>>,
    left: Vec<(Obj, Obj, Obj, usize, usize, usize, F)>,
    right: Vec<(Obj, Obj, Obj, usize, usize, usize, F)>,
}

impl<F: Field> BimoduleBuilder<'_, F> {
    pub fn space(mut self, a: Obj, b: Obj, dim: usize) -> Self {
        self.dims[a][b] = dim;
        self
    }

    /// `coeff * e_out` added to `x_in1 * m_in2` (`x` in `X(a,b)`, `m` in `M(b,c)`).
    #[allow(clippy::too_many_arguments)]
    pub fn left(mut self, a: Obj, b: Obj, c: Obj, out: usize, in1: usize, in2: usize, coeff: F) -> Self {
        self.left.push((a, b, c, out, in1, in2, coeff));
        self
    }

    /// `coeff * e_out` added to `m_in1 * x_in2` (`m` in `M(a,b)`, `x` in `X(b,c)`).
    #[allow(clippy::too_many_arguments)]
    pub fn right(mut self, a: Obj, b: Obj, c: Obj, out: usize, in1: usize, in2: usize, coeff: F) -> Self {
        self.right.push((a, b, c, out, in1, in2, coeff));
        self
    }

    pub fn build(self) -> Result<CentralBimodule<F>, AInfinityError> {
        let x = self.category;
        let n = x.num_objects();
        let mut left = ProductTable::default();
        let mut right = ProductTable::default();
        let out_of_range = || AInfinityError::InvalidStructure("bimodule action record out of range".into());
        for (a, b, c, out, i, j, coeff) in self.left {
            if a >= n || b >= n || c >= n || i >= x.dim(a, b) || j >= self.dims[b][c] || out >= self.dims[a][c] {
                return Err(out_of_range());
            }
            if a == b && i == x.identity(a) {
                return Err(AInfinityError::InvalidStructure("identity actions are implicit".into()));
            }
            left.add((a, b, c), i, j, out, self.dims[a][c], coeff);
        }
        for (a, b, c, out, i, j, coeff) in self.right {
            if a >= n || b >= n || c >= n || i >= self.dims[a][b] || j >= x.dim(b, c) || out >= self.dims[a][c] {
                return Err(out_of_range());
            }
            if b == c && j == x.identity(b) {
                return Err(AInfinityError::InvalidStructure("identity actions are implicit".into()));
            }
            right.add((a, b, c), i, j, out, self.dims[a][c], coeff);
        }
        for a in 0..n {
            for b in 0..n {
                for j in 0..self.dims[a][b] {
                    let e = unit_vector(self.dims[a][b], j);
                    left.set((a, a, b), x.identity(a), j, e.clone());
                    right.set((a, b, b), j, x.identity(b), e);
                }
            }
        }
        let m = CentralBimodule {
            dims: self.dims,
            left,
            right,
        };
        m.validate(x)?;
        Ok(m)
    }
}

/// A `k`-linear functor between finite linear categories, given on objects
/// and on hom bases.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearFunctor<F> {
    object_map: Vec<Obj>,
    /// `(a, b) -> [basis of source hom(a,b)] -> vector in target hom(Fa, Fb)`.
    maps: HashMap<(Obj, Obj), Vec<Vec<F>>>,
}

impl<F: Field> LinearFunctor<F> {
    /// Builds and checks a functor `source -> target`.
    pub fn new(
        source: &FiniteLinearCategory<F>,
        target: &FiniteLinearCategory<F>,
        object_map: Vec<Obj>,
        maps: HashMap<(Obj, Obj), Vec<Vec<F>>>,
    ) -> Result<Self, AInfinityError> {
        let functor = Self { object_map, maps };
        functor.validate(source, target)?;
        Ok(functor)
    }

    pub fn identity(x: &FiniteLinearCategory<F>) -> Self {
        let n = x.num_objects();
        let mut maps = HashMap::new();
        for a in 0..n {
            for b in 0..n {
                let d = x.dim(a, b);
                maps.insert((a, b), (0..d).map(|i| unit_vector(d, i)).collect());
            }
        }
        Self {
            object_map: (0..n).collect(),
            maps,
        }
    }

    pub fn object_map(&self) -> &[Obj] {
        &self.object_map
    }

    /// Image of basis `i` of the source `hom(a, b)`.
    pub fn apply(&self, a: Obj, b: Obj, i: usize) -> Vec<F> {
        self.maps[&(a, b)][i].clone()
    }

    fn validate(&self, source: &FiniteLinearCategory<F>, target: &FiniteLinearCategory<F>) -> Result<(), AInfinityError> {
        let n = source.num_objects();
        let bad = |what: String| Err(AInfinityError::InvalidStructure(format!("not a functor: {what}")));
        if self.object_map.len() != n || self.object_map.iter().any(|&o| o >= target.num_objects()) {
            return bad("object map has the wrong shape".into());
        }
        let map = &self.object_map;
        for a in 0..n {
            for b in 0..n {
                let Some(images) = self.maps.get(&(a, b)) else {
                    return bad(format!("missing hom map for ({a}, {b})"));
                };
                if images.len() != source.dim(a, b)
                    || images.iter().any(|v| v.len() != target.dim(map[a], map[b]))
                {
                    return bad(format!("hom map for ({a}, {b}) has the wrong shape"));
                }
            }
            let id_image = self.apply(a, a, source.identity(a));
            if id_image != unit_vector(target.dim(map[a], map[a]), target.identity(map[a])) {
                return bad(format!("identity of object {a} is not preserved"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for i in 0..source.dim(a, b) {
                        for j in 0..source.dim(b, c) {
                            let xy = source.compose(a, b, c, i, j);
                            let mut lhs = vec![F::zero(); target.dim(map[a], map[c])];
                            for (l, coeff) in xy.iter().enumerate() {
                                if !coeff.is_zero() {
                                    axpy(&mut lhs, coeff, &self.apply(a, c, l));
                                }
                            }
                            let fx = self.apply(a, b, i);
                            let fy = self.apply(b, c, j);
                            let mut rhs = vec![F::zero(); lhs.len()];
                            for (k, ck) in fx.iter().enumerate() {
                                if ck.is_zero() {
                                    continue;
                                }
                                let prod = target.mul_basis_vec(map[a], map[b], map[c], k, &fy);
                                axpy(&mut rhs, ck, &prod);
                            }
                            if lhs != rhs {
                                return bad(format!("composition ({i}, {j}) over ({a}, {b}, {c}) is not preserved"));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ainfty::bundled;
    use crate::ainfty::field::Rational;

    #[test]
    fn bundled_categories_are_valid() {
        for x in [bundled::ground_field(), bundled::dual_numbers(), bundled::a2_path()] {
            x.validate().unwrap();
            CentralBimodule::regular(&x).validate(&x).unwrap();
        }
    }

    #[test]
    fn centers() {
        assert_eq!(bundled::a2_path().center_dimension(), 1);
        assert_eq!(bundled::dual_numbers().center_dimension(), 2);
        assert_eq!(bundled::ground_field().center_dimension(), 1);
        assert_eq!(bundled::matrix_algebra().center_dimension(), 1);
        assert_eq!(bundled::split_pair().center_dimension(), 2);
    }

    #[test]
    fn rejects_non_associative_composition() {
        // x * x = y, y * x = 0, x * y = y: (x x) x = 0 but x (x x) = y.
        let bad = FiniteLinearCategory::<Rational>::builder(&["o"])
            .hom(0, 0, 3)
            .identity(0, 0)
            .compose(0, 0, 0, 2, 1, 1, Rational::from_i64(1))
            .compose(0, 0, 0, 2, 1, 2, Rational::from_i64(1))
            .build();
        assert!(matches!(bad, Err(AInfinityError::InvalidStructure(_))));
    }

    #[test]
    fn tensor_dimensions_multiply() {
        let x = bundled::a2_path();
        for gamma in [bundled::ground_field(), bundled::split_pair(), bundled::matrix_algebra()] {
            let t = x.tensor_with_algebra(&gamma).unwrap();
            t.validate().unwrap();
            for a in 0..2 {
                for b in 0..2 {
                    assert_eq!(t.dim(a, b), x.dim(a, b) * gamma.dim(0, 0));
                }
            }
        }
        assert_eq!(x.tensor_with_algebra(&bundled::ground_field()).unwrap(), x);
    }

    #[test]
    fn functor_checks() {
        let a2 = bundled::a2_path();
        let dual = bundled::dual_numbers();
        bundled::a2_to_dual_numbers(&a2, &dual, true).unwrap();
        bundled::a2_to_dual_numbers(&a2, &dual, false).unwrap();
        // Sending the identity of object 1 to x is not a functor.
        let mut maps = HashMap::new();
        let q = Rational::from_i64;
        maps.insert((0, 0), vec![vec![q(1), q(0)]]);
        maps.insert((1, 1), vec![vec![q(0), q(1)]]);
        maps.insert((0, 1), vec![vec![q(0), q(1)]]);
        maps.insert((1, 0), vec![]);
        assert!(LinearFunctor::new(&a2, &dual, vec![0, 0], maps).is_err());
    }
}
