//! Ready-made example algebras and modules.
//!
//! These small structures (dual numbers, truncated polynomials, split
//! semisimple pairs, nilpotent twists) exercise every feature of the crate
//! and double as documentation of the input conventions. Dimensions stay at
//! desk scale so exact arithmetic is instant.

use crate::bimod::CompatibleBimodule;
use crate::exactlin::{int, Matrix};
use crate::homalg::{CompatibleHomAlgebra, HomAssociativeAlgebra};
use crate::multilinear::MultilinearMap;

/// Bilinear product on a `dim`-space from integer structure constants:
/// entries `(i, j, k, c)` mean `e_i . e_j = ... + c e_k`.
pub fn product(dim: usize, entries: &[(usize, usize, usize, i64)]) -> MultilinearMap {
    let mut mu = MultilinearMap::zero_uniform(2, dim, dim);
    for &(i, j, k, c) in entries {
        mu.add_to(&[i, j], k, &int(c));
    }
    mu
}

/// The dual numbers K[x]/(x^2): basis (1, x), identity twist.
pub fn dual_numbers() -> HomAssociativeAlgebra {
    let mu = product(2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]);
    HomAssociativeAlgebra::new(2, mu, Matrix::identity(2)).expect("valid by construction")
}

/// Dual numbers as a compatible pair with the zero second product.
pub fn dual_numbers_pair_zero() -> CompatibleHomAlgebra {
    let a = dual_numbers();
    CompatibleHomAlgebra::new(
        2,
        a.mu().clone(),
        MultilinearMap::zero_uniform(2, 2, 2),
        Matrix::identity(2),
    )
    .expect("valid by construction")
}

/// Multiplication by x on the dual numbers; a Nijenhuis operator.
pub fn dual_numbers_shift() -> Matrix {
    Matrix::from_int_rows(&[&[0, 0], &[1, 0]])
}

/// Dual numbers paired with the product induced by the Nijenhuis operator
/// `N = (multiplication by x)`: the second product is `e0 .2 e0 = x`, all
/// other products zero.
pub fn dual_numbers_nijenhuis_pair() -> CompatibleHomAlgebra {
    let a = dual_numbers();
    let mu2 = product(2, &[(0, 0, 1, 1)]);
    CompatibleHomAlgebra::new(2, a.mu().clone(), mu2, Matrix::identity(2))
        .expect("valid by construction")
}

/// K x K with componentwise product, identity twist.
pub fn split_algebra() -> HomAssociativeAlgebra {
    let mu = product(2, &[(0, 0, 0, 1), (1, 1, 1, 1)]);
    HomAssociativeAlgebra::new(2, mu, Matrix::identity(2)).expect("valid by construction")
}

/// K x K paired with the product rescaled by the diagonal Nijenhuis
/// operator diag(1, 2): `e0 .2 e0 = e0`, `e1 .2 e1 = 2 e1`.
pub fn split_pair() -> CompatibleHomAlgebra {
    let a = split_algebra();
    let mu2 = product(2, &[(0, 0, 0, 1), (1, 1, 1, 2)]);
    CompatibleHomAlgebra::new(2, a.mu().clone(), mu2, Matrix::identity(2))
        .expect("valid by construction")
}

/// The ground field as a one-dimensional algebra; zero second product.
pub fn field_pair() -> CompatibleHomAlgebra {
    CompatibleHomAlgebra::new(
        1,
        product(1, &[(0, 0, 0, 1)]),
        MultilinearMap::zero_uniform(2, 1, 1),
        Matrix::identity(1),
    )
    .expect("valid by construction")
}

/// Zero products in both slots, identity twist.
pub fn zero_algebra(dim: usize) -> CompatibleHomAlgebra {
    CompatibleHomAlgebra::new(
        dim,
        MultilinearMap::zero_uniform(2, dim, dim),
        MultilinearMap::zero_uniform(2, dim, dim),
        Matrix::identity(dim),
    )
    .expect("valid by construction")
}

/// Zero products with an arbitrary twist (any linear map works).
pub fn zero_algebra_with_twist(alpha: Matrix) -> CompatibleHomAlgebra {
    let dim = alpha.rows();
    CompatibleHomAlgebra::new(
        dim,
        MultilinearMap::zero_uniform(2, dim, dim),
        MultilinearMap::zero_uniform(2, dim, dim),
        alpha,
    )
    .expect("valid by construction")
}

/// Zero algebra twisted by diag(2, 3). The eigenvalue products 4, 6, 9 avoid
/// the spectrum, so every twist-equivariant cochain space in degree >= 2 is
/// zero and the compatible cohomology vanishes there.
pub fn scaling_twisted_zero_pair() -> CompatibleHomAlgebra {
    zero_algebra_with_twist(Matrix::from_int_rows(&[&[2, 0], &[0, 3]]))
}

/// Twist of the dual numbers along the sign automorphism diag(1, -1):
/// products `e0 . e0 = e0`, `e0 . e1 = e1 . e0 = -e1`, twist diag(1, -1).
pub fn sign_twisted_dual_numbers_pair() -> CompatibleHomAlgebra {
    let mu = product(2, &[(0, 0, 0, 1), (0, 1, 1, -1), (1, 0, 1, -1)]);
    CompatibleHomAlgebra::new(
        2,
        mu,
        MultilinearMap::zero_uniform(2, 2, 2),
        Matrix::from_int_rows(&[&[1, 0], &[0, -1]]),
    )
    .expect("valid by construction")
}

/// Upper-triangular 2x2 matrices spanned by E11, E12: a noncommutative
/// associative algebra with `e0 e0 = e0`, `e0 e1 = e1`, `e1 e0 = 0`.
pub fn upper_triangular_pair() -> CompatibleHomAlgebra {
    let mu = product(2, &[(0, 0, 0, 1), (0, 1, 1, 1)]);
    CompatibleHomAlgebra::new(
        2,
        mu,
        MultilinearMap::zero_uniform(2, 2, 2),
        Matrix::identity(2),
    )
    .expect("valid by construction")
}

/// Three-dimensional nilpotent noncommutative algebra with the single
/// product `e0 e1 = e2`.
pub fn strict_triangular3_pair() -> CompatibleHomAlgebra {
    let mu = product(3, &[(0, 1, 2, 1)]);
    CompatibleHomAlgebra::new(
        3,
        mu,
        MultilinearMap::zero_uniform(2, 3, 3),
        Matrix::identity(3),
    )
    .expect("valid by construction")
}

/// Truncated polynomials K[x]/(x^3), basis (1, x, x^2).
pub fn truncated_poly3_pair() -> CompatibleHomAlgebra {
    let mu = product(
        3,
        &[
            (0, 0, 0, 1),
            (0, 1, 1, 1),
            (1, 0, 1, 1),
            (0, 2, 2, 1),
            (2, 0, 2, 1),
            (1, 1, 2, 1),
        ],
    );
    CompatibleHomAlgebra::new(
        3,
        mu,
        MultilinearMap::zero_uniform(2, 3, 3),
        Matrix::identity(3),
    )
    .expect("valid by construction")
}

/// Twisted algebra with nilpotent twist: `e1 e1 = e0` and alpha the shift
/// `e1 -> e0 -> 0`. Twisted-associative even though the untwisted product
/// is not associative in the unital sense.
pub fn shift_twisted_square_pair() -> CompatibleHomAlgebra {
    let mu = product(2, &[(1, 1, 0, 1)]);
    CompatibleHomAlgebra::new(
        2,
        mu,
        MultilinearMap::zero_uniform(2, 2, 2),
        Matrix::from_int_rows(&[&[0, 1], &[0, 0]]),
    )
    .expect("valid by construction")
}

/// The evaluation module K = A/(x) over the dual numbers: 1 acts as the
/// identity, x acts as zero; second actions zero.
pub fn dual_numbers_evaluation_module() -> CompatibleBimodule {
    let alg = dual_numbers_pair_zero();
    let mut l1 = MultilinearMap::zero(vec![2, 1], 1);
    l1.set(&[0, 0], 0, int(1));
    let mut r1 = MultilinearMap::zero(vec![1, 2], 1);
    r1.set(&[0, 0], 0, int(1));
    CompatibleBimodule::new(
        alg,
        1,
        l1,
        r1,
        MultilinearMap::zero(vec![2, 1], 1),
        MultilinearMap::zero(vec![1, 2], 1),
        Matrix::identity(1),
    )
    .expect("valid by construction")
}

/// Adjoint bimodules of the standard valid pairs; handy fixture list for
/// property-style tests.
pub fn standard_pairs() -> Vec<(&'static str, CompatibleHomAlgebra)> {
    vec![
        ("zero-1", zero_algebra(1)),
        ("zero-2", zero_algebra(2)),
        ("field", field_pair()),
        ("dual-numbers", dual_numbers_pair_zero()),
        ("dual-numbers-nijenhuis", dual_numbers_nijenhuis_pair()),
        ("split", split_pair()),
        ("sign-twisted-dual-numbers", sign_twisted_dual_numbers_pair()),
        ("upper-triangular", upper_triangular_pair()),
        ("strict-triangular-3", strict_triangular3_pair()),
        ("truncated-poly-3", truncated_poly3_pair()),
        ("shift-twisted-square", shift_twisted_square_pair()),
        ("scaling-twisted-zero", scaling_twisted_zero_pair()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homalg::check_compatible;

    #[test]
    fn all_standard_pairs_are_valid() {
        for (name, alg) in standard_pairs() {
            assert!(
                check_compatible(&alg).unwrap().ok(),
                "fixture {name} failed its axioms"
            );
        }
    }
}
