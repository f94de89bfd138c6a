//! Small categories, algebras, cochains and functors used by tests and the CLI.

use std::collections::HashMap;

use super::category::{CentralBimodule, FiniteAlgebra, FiniteLinearCategory, LinearFunctor};
use super::cochain::Cochain;
use super::field::{Field, Rational};
use super::AInfinityError;

/// The ground field as a category with one object.
pub fn ground_field() -> FiniteLinearCategory<Rational> {
    ground_field_over()
}

pub fn ground_field_over<F: Field>() -> FiniteLinearCategory<F> {
    FiniteLinearCategory::algebra("k", 1, 0, &[]).expect("the ground field is a valid algebra")
}

/// `k[x]/(x^2)` with basis `{1, x}`.
pub fn dual_numbers() -> FiniteLinearCategory<Rational> {
    dual_numbers_over()
}

pub fn dual_numbers_over<F: Field>() -> FiniteLinearCategory<F> {
    FiniteLinearCategory::algebra("o", 2, 0, &[]).expect("the dual numbers are a valid algebra")
}

/// The path category of the A2 quiver: objects `1`, `2` and one arrow `a: 1 -> 2`.
pub fn a2_path() -> FiniteLinearCategory<Rational> {
    a2_path_over()
}

pub fn a2_path_over<F: Field>() -> FiniteLinearCategory<F> {
    FiniteLinearCategory::builder(&["1", "2"])
        .hom(0, 0, 1)
        .hom(1, 1, 1)
        .hom(0, 1, 1)
        .identity(0, 0)
        .identity(1, 0)
        .build()
        .expect("the A2 path category is valid")
}

/// `k x k` with basis `{1, e}` where `e = (1, 0)` is idempotent.
pub fn split_pair() -> FiniteAlgebra<Rational> {
    split_pair_over()
}

pub fn split_pair_over<F: Field>() -> FiniteAlgebra<F> {
    FiniteLinearCategory::algebra("k2", 2, 0, &[(1, 1, 1, F::one())]).expect("k x k is a valid algebra")
}

/// 2x2 matrices with basis `{I, E11, E12, E21}`.
pub fn matrix_algebra() -> FiniteAlgebra<Rational> {
    matrix_algebra_over()
}

pub fn matrix_algebra_over<F: Field>() -> FiniteAlgebra<F> {
    let one = F::one;
    let products = [
        (1, 1, 1, one()),
        (2, 1, 2, one()),
        (1, 2, 3, one()),
        (3, 3, 1, one()),
        // E21 E12 = E22 = I - E11
        (0, 3, 2, one()),
        (1, 3, 2, -one()),
    ];
    FiniteLinearCategory::algebra("M2", 4, 0, &products).expect("2x2 matrices form a valid algebra")
}

/// `A2 (x) (k x k)`.
pub fn a2_split() -> FiniteLinearCategory<Rational> {
    a2_path()
        .tensor_with_algebra(&split_pair())
        .expect("tensoring with an algebra succeeds")
}

/// The degree-3 cocycle `eta(x, x, x) = x` on `k[x]/(x^2)` with coefficients in itself.
pub fn dual_numbers_cocycle() -> Cochain<Rational> {
    let mut eta = Cochain::zero(3);
    eta.set(vec![0; 4], vec![1; 3], vec![Rational::from_i64(0), Rational::from_i64(1)]);
    eta
}

/// `eta(x, x, x) = 1 + x`: not a cocycle, since `d eta(x, x, x, x) = 2x`.
pub fn dual_numbers_perturbed() -> Cochain<Rational> {
    let mut eta = Cochain::zero(3);
    eta.set(vec![0; 4], vec![1; 3], vec![Rational::from_i64(1), Rational::from_i64(1)]);
    eta
}

/// A degree-3 cocycle on `A2 (x) (k x k)`: the coboundary of the degree-2 cochain
/// sending `(1 (x) e, a (x) 1)` to `a (x) 1` and `(a (x) e, 2 (x) e)` to `a (x) e`.
pub fn a2_split_cocycle() -> Cochain<Rational> {
    let x = a2_split();
    let m = CentralBimodule::regular(&x);
    let one = Rational::from_i64(1);
    let zero = Rational::from_i64(0);
    let mut beta = Cochain::zero(2);
    beta.set(vec![0, 0, 1], vec![1, 0], vec![one.clone(), zero.clone()]);
    beta.set(vec![0, 1, 1], vec![1, 1], vec![zero, one]);
    beta.differential(&x, &m).expect("beta has the right shape")
}

/// `A2 -> k[x]/(x^2)` sending both objects to the single object and the arrow to `x` or to `0`.
pub fn a2_to_dual_numbers<F: Field>(
    a2: &FiniteLinearCategory<F>,
    dual: &FiniteLinearCategory<F>,
    arrow_to_x: bool,
) -> Result<LinearFunctor<F>, AInfinityError> {
    let (zero, one) = (F::zero(), F::one());
    let arrow = if arrow_to_x { vec![zero.clone(), one.clone()] } else { vec![zero.clone(), zero.clone()] };
    let maps = HashMap::from([
        ((0, 0), vec![vec![one.clone(), zero.clone()]]),
        ((1, 1), vec![vec![one, zero]]),
        ((0, 1), vec![arrow]),
        ((1, 0), vec![]),
    ]);
    LinearFunctor::new(a2, dual, vec![0, 0], maps)
}

/// `A2 -> k` collapsing both objects, sending the arrow to `1` or to `0`.
pub fn a2_to_ground_field<F: Field>(
    a2: &FiniteLinearCategory<F>,
    k: &FiniteLinearCategory<F>,
    arrow_to_one: bool,
) -> Result<LinearFunctor<F>, AInfinityError> {
    let arrow = if arrow_to_one { F::one() } else { F::zero() };
    let maps = HashMap::from([
        ((0, 0), vec![vec![F::one()]]),
        ((1, 1), vec![vec![F::one()]]),
        ((0, 1), vec![vec![arrow]]),
        ((1, 0), vec![]),
    ]);
    LinearFunctor::new(a2, k, vec![0, 0], maps)
}

/// A named example: a category, coefficients, and optionally a cochain.
#[derive(Debug, Clone)]
pub struct Example {
    pub name: &'static str,
    pub description: &'static str,
    pub category: FiniteLinearCategory<Rational>,
    pub bimodule: CentralBimodule<Rational>,
    pub cochain: Option<Cochain<Rational>>,
}

pub const EXAMPLE_NAMES: &[&str] = &[
    "ground-field",
    "dual-numbers",
    "dual-numbers-deformed",
    "dual-numbers-perturbed",
    "a2",
    "a2-split",
    "a2-deformed",
    "split-pair",
    "matrix-algebra",
];

/// Looks up a bundled example by name.
pub fn example(name: &str) -> Option<Example> {
    let (name, description, category, cochain) = match name {
        "ground-field" => ("ground-field", "the ground field k", ground_field(), None),
        "dual-numbers" => ("dual-numbers", "k[x]/(x^2)", dual_numbers(), None),
        "dual-numbers-deformed" => (
            "dual-numbers-deformed",
            "k[x]/(x^2) with the cocycle eta(x,x,x) = x",
            dual_numbers(),
            Some(dual_numbers_cocycle()),
        ),
        "dual-numbers-perturbed" => (
            "dual-numbers-perturbed",
            "k[x]/(x^2) with the non-cocycle eta(x,x,x) = 1 + x",
            dual_numbers(),
            Some(dual_numbers_perturbed()),
        ),
        "a2" => ("a2", "path category of the A2 quiver", a2_path(), None),
        "a2-split" => ("a2-split", "A2 tensored with k x k", a2_split(), None),
        "a2-deformed" => (
            "a2-deformed",
            "A2 tensored with k x k, deformed by a degree-3 coboundary",
            a2_split(),
            Some(a2_split_cocycle()),
        ),
        "split-pair" => ("split-pair", "the algebra k x k", split_pair(), None),
        "matrix-algebra" => ("matrix-algebra", "2x2 matrices", matrix_algebra(), None),
        _ => return None,
    };
    let bimodule = CentralBimodule::regular(&category);
    Some(Example {
        name,
        description,
        category,
        bimodule,
        cochain,
    })
}
