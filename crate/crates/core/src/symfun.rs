//! Symmetric polynomials in `x1..xn`, used as the reference side of every
//! operator comparison. Y-alphabet versions come from [`in_axis`].

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::One;

use crate::partition::{Composition, Partition};
use crate::poly::{Axis, Monomial, Polynomial};
use crate::tableau::{enumerate_cs_tableaux, ShapeOrbit};

fn monomial_from_indices(n: usize, indices: &[usize]) -> Monomial {
    let mut x = vec![0u32; n];
    for &i in indices {
        x[i] += 1;
    }
    Monomial::new(x, vec![0; n]).expect("n >= 1")
}

fn sum_of_index_tuples(n: usize, tuples: impl Iterator<Item = Vec<usize>>) -> Polynomial {
    Polynomial::from_terms(
        n,
        tuples.map(|t| (monomial_from_indices(n, &t), BigRational::one())),
    )
    .expect("same ring")
}

/// `p_k = Σ_{i=1..n} x_i^k`.
pub fn power_sum(k: usize, n: usize) -> Polynomial {
    sum_of_index_tuples(n, (0..n).map(|i| vec![i; k]))
}

/// `e_k`; `e_0 = 1` and `e_k = 0` for `k < 0`.
pub fn elementary(k: i64, n: usize) -> Polynomial {
    if k < 0 {
        return Polynomial::zero(n);
    }
    sum_of_index_tuples(n, (0..n).combinations(k as usize))
}

pub fn homogeneous(k: usize, n: usize) -> Polynomial {
    sum_of_index_tuples(n, (0..n).combinations_with_replacement(k))
}

/// `e_α = e_α1 ⋯ e_αℓ`, zero as soon as one part is negative.
pub fn elementary_product(alpha: &Composition, n: usize) -> Polynomial {
    alpha
        .parts()
        .iter()
        .fold(Polynomial::one(n), |acc, &a| &acc * &elementary(a, n))
}

/// Dual Jacobi-Trudi: `S_λ = Σ_σ sgn(σ) e_{σ(λ′+δ)−δ}`.
pub fn schur_jacobi_trudi(lambda: &Partition, n: usize) -> Polynomial {
    let orbit = ShapeOrbit::new(lambda);
    let mut out = Polynomial::zero(n);
    for shape in &orbit.shapes {
        if shape.alpha.has_negative() {
            continue;
        }
        let term = elementary_product(&shape.alpha, n);
        out = if shape.sign > 0 {
            &out + &term
        } else {
            &out - &term
        };
    }
    out
}

/// `S_λ = Σ_{T ∈ 𝒯_λ} X^T`.
pub fn schur_tableaux(lambda: &Partition, n: usize) -> Polynomial {
    let tableaux = enumerate_cs_tableaux(lambda, n);
    Polynomial::from_terms(
        n,
        tableaux.iter().map(|t| {
            let x = t.content().into_iter().map(|c| c as u32).collect();
            (
                Monomial::new(x, vec![0; n]).expect("n >= 1"),
                BigRational::one(),
            )
        }),
    )
    .expect("same ring")
}

/// Moves an X-alphabet polynomial to the requested alphabet.
pub fn in_axis(p: &Polynomial, axis: Axis) -> Polynomial {
    match axis {
        Axis::X => p.clone(),
        Axis::Y => p.swap_axes(),
    }
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}
