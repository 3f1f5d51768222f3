//! Hom-associative algebras and compatible pairs, modeled by structure
//! constants, with every defining identity verified by exhaustive basis
//! enumeration.
//!
//! A twisted algebra is a triple (A, mu, alpha) where alpha is multiplicative
//! for mu and the twisted associativity (a.b).alpha(c) = alpha(a).(b.c)
//! holds. A compatible pair carries two such products sharing one twist whose
//! mixed associator sums cancel; equivalently every linear combination of the
//! two products is again twisted-associative.

use crate::exactlin::{Matrix, Scalar};
use crate::multilinear::MultilinearMap;
use crate::report::{CheckReport, Law, Side};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("algebra axioms violated: {0}")]
    Invalid(CheckReport),
}

fn expect_product(dim: usize, mu: &MultilinearMap, name: &str) -> Result<(), AlgebraError> {
    if mu.arity() != 2 || mu.slot_dims() != [dim, dim] || mu.codomain_dim() != dim {
        return Err(AlgebraError::Shape(format!(
            "{name} must be a bilinear map on a space of dimension {dim}"
        )));
    }
    Ok(())
}

fn expect_square(dim: usize, m: &Matrix, name: &str) -> Result<(), AlgebraError> {
    if m.rows() != dim || m.cols() != dim {
        return Err(AlgebraError::Shape(format!(
            "{name} must be a {dim}x{dim} matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

/// Walk all index tuples of `defect` and record nonzero values as violations.
pub(crate) fn collect_violations(report: &mut CheckReport, law: Law, defect: &MultilinearMap) {
    let dims = defect.slot_dims().to_vec();
    let mut idx = vec![0usize; dims.len()];
    loop {
        report.push(law.clone(), &idx, defect.eval_basis(&idx));
        // Odometer increment over the mixed-radix index space.
        let mut slot = dims.len();
        loop {
            if slot == 0 {
                return;
            }
            slot -= 1;
            idx[slot] += 1;
            if idx[slot] < dims[slot] {
                break;
            }
            idx[slot] = 0;
        }
        if idx.iter().all(|&i| i == 0) {
            return;
        }
    }
}

/// Defect tensor of twist-multiplicativity: alpha . mu - mu . (alpha x alpha).
pub(crate) fn multiplicativity_defect(mu: &MultilinearMap, alpha: &Matrix) -> MultilinearMap {
    mu.post_compose(alpha).sub(&mu.precompose_all(alpha))
}

/// Defect tensor of twisted associativity:
/// mu(mu(a,b), alpha(c)) - mu(alpha(a), mu(b,c)).
pub(crate) fn hom_associativity_defect(mu: &MultilinearMap, alpha: &Matrix) -> MultilinearMap {
    let left = mu.substitute(0, mu).precompose_slot(2, alpha);
    let right = mu.substitute(1, mu).precompose_slot(0, alpha);
    left.sub(&right)
}

/// Defect tensor of the two-product compatibility identity:
/// (a.1 b).2 alpha(c) + (a.2 b).1 alpha(c)
///   - alpha(a).1 (b.2 c) - alpha(a).2 (b.1 c).
pub(crate) fn compatibility_defect(
    mu1: &MultilinearMap,
    mu2: &MultilinearMap,
    alpha: &Matrix,
) -> MultilinearMap {
    let t1 = mu2.substitute(0, mu1).precompose_slot(2, alpha);
    let t2 = mu1.substitute(0, mu2).precompose_slot(2, alpha);
    let t3 = mu1.substitute(1, mu2).precompose_slot(0, alpha);
    let t4 = mu2.substitute(1, mu1).precompose_slot(0, alpha);
    t1.add(&t2).sub(&t3).sub(&t4)
}

/// Check twist-multiplicativity and twisted associativity of a single product
/// over all basis pairs and triples.
pub fn check_hom_associative(
    dim: usize,
    mu: &MultilinearMap,
    alpha: &Matrix,
) -> Result<CheckReport, AlgebraError> {
    check_product_with(dim, mu, alpha, Side::First)
}

fn check_product_with(
    dim: usize,
    mu: &MultilinearMap,
    alpha: &Matrix,
    side: Side,
) -> Result<CheckReport, AlgebraError> {
    expect_product(dim, mu, "mu")?;
    expect_square(dim, alpha, "alpha")?;
    let mut report = CheckReport::ok_report();
    collect_violations(
        &mut report,
        Law::TwistMultiplicative(side),
        &multiplicativity_defect(mu, alpha),
    );
    collect_violations(
        &mut report,
        Law::HomAssociative(side),
        &hom_associativity_defect(mu, alpha),
    );
    Ok(report)
}

/// A twisted algebra (A, mu, alpha) given by structure constants.
#[derive(Debug, Clone, PartialEq)]
pub struct HomAssociativeAlgebra {
    dim: usize,
    mu: MultilinearMap,
    alpha: Matrix,
}

impl HomAssociativeAlgebra {
    /// Validating constructor: all axioms are checked eagerly.
    pub fn new(dim: usize, mu: MultilinearMap, alpha: Matrix) -> Result<Self, AlgebraError> {
        let report = check_hom_associative(dim, &mu, &alpha)?;
        if !report.ok() {
            return Err(AlgebraError::Invalid(report));
        }
        Ok(HomAssociativeAlgebra { dim, mu, alpha })
    }

    /// Skips validation. Deformation search intentionally builds candidates
    /// that violate the axioms mid-flight.
    pub fn new_unchecked(dim: usize, mu: MultilinearMap, alpha: Matrix) -> Self {
        HomAssociativeAlgebra { dim, mu, alpha }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mu(&self) -> &MultilinearMap {
        &self.mu
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn check(&self) -> CheckReport {
        check_hom_associative(self.dim, &self.mu, &self.alpha)
            .expect("shape was validated at construction")
    }
}

/// Two twisted products sharing one twist, with the compatibility identity.
#[derive(Debug, Clone, PartialEq)]
pub struct CompatibleHomAlgebra {
    dim: usize,
    mu1: MultilinearMap,
    mu2: MultilinearMap,
    alpha: Matrix,
}

impl CompatibleHomAlgebra {
    pub fn new(
        dim: usize,
        mu1: MultilinearMap,
        mu2: MultilinearMap,
        alpha: Matrix,
    ) -> Result<Self, AlgebraError> {
        let candidate = CompatibleHomAlgebra {
            dim,
            mu1,
            mu2,
            alpha,
        };
        let report = candidate.check_shaped()?;
        if !report.ok() {
            return Err(AlgebraError::Invalid(report));
        }
        Ok(candidate)
    }

    pub fn new_unchecked(
        dim: usize,
        mu1: MultilinearMap,
        mu2: MultilinearMap,
        alpha: Matrix,
    ) -> Self {
        CompatibleHomAlgebra {
            dim,
            mu1,
            mu2,
            alpha,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mu1(&self) -> &MultilinearMap {
        &self.mu1
    }

    pub fn mu2(&self) -> &MultilinearMap {
        &self.mu2
    }

    pub fn mu(&self, side: Side) -> &MultilinearMap {
        match side {
            Side::First => &self.mu1,
            Side::Second => &self.mu2,
        }
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    fn check_shaped(&self) -> Result<CheckReport, AlgebraError> {
        let mut report = check_product_with(self.dim, &self.mu1, &self.alpha, Side::First)?;
        report.merge(check_product_with(
            self.dim,
            &self.mu2,
            &self.alpha,
            Side::Second,
        )?);
        collect_violations(
            &mut report,
            Law::ProductCompatibility,
            &compatibility_defect(&self.mu1, &self.mu2, &self.alpha),
        );
        Ok(report)
    }

    /// Single-product view (A, mu_i, alpha); no re-validation.
    pub fn single(&self, side: Side) -> HomAssociativeAlgebra {
        HomAssociativeAlgebra::new_unchecked(self.dim, self.mu(side).clone(), self.alpha.clone())
    }

    /// The sum algebra (A, mu1 + mu2, alpha).
    pub fn sum_algebra(&self) -> HomAssociativeAlgebra {
        HomAssociativeAlgebra::new_unchecked(
            self.dim,
            self.mu1.add(&self.mu2),
            self.alpha.clone(),
        )
    }
}

/// Check both products and the compatibility identity on all basis triples.
pub fn check_compatible(algebra: &CompatibleHomAlgebra) -> Result<CheckReport, AlgebraError> {
    algebra.check_shaped()
}

/// Check that phi is a morphism of compatible algebras: it intertwines both
/// products and the twists.
pub fn check_morphism(
    src: &CompatibleHomAlgebra,
    dst: &CompatibleHomAlgebra,
    phi: &Matrix,
) -> Result<CheckReport, AlgebraError> {
    if phi.rows() != dst.dim || phi.cols() != src.dim {
        return Err(AlgebraError::Shape(format!(
            "phi must be {}x{}, got {}x{}",
            dst.dim,
            src.dim,
            phi.rows(),
            phi.cols()
        )));
    }
    let mut report = CheckReport::ok_report();
    for (side, mu_s, mu_d) in [
        (Side::First, &src.mu1, &dst.mu1),
        (Side::Second, &src.mu2, &dst.mu2),
    ] {
        let lhs = mu_s.post_compose(phi);
        let rhs = mu_d.precompose_all(phi);
        collect_violations(&mut report, Law::MorphismProduct(side), &lhs.sub(&rhs));
    }
    let twist = phi.mul(src.alpha()).sub(&dst.alpha().mul(phi));
    collect_violations(
        &mut report,
        Law::MorphismTwist,
        &MultilinearMap::from_matrix(&twist),
    );
    Ok(report)
}

/// Form (A, l1*mu1 + l2*mu2, alpha). The input must be a valid compatible
/// pair; the output is validated and always twisted-associative.
pub fn linear_combination_algebra(
    algebra: &CompatibleHomAlgebra,
    l1: &Scalar,
    l2: &Scalar,
) -> Result<HomAssociativeAlgebra, AlgebraError> {
    let report = check_compatible(algebra)?;
    if !report.ok() {
        return Err(AlgebraError::Invalid(report));
    }
    let mu = algebra.mu1.scale(l1).add(&algebra.mu2.scale(l2));
    HomAssociativeAlgebra::new(algebra.dim, mu, algebra.alpha.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{frac, int};
    use crate::fixtures;

    #[test]
    fn zero_product_is_hom_associative() {
        let mu = MultilinearMap::zero_uniform(2, 2, 2);
        let report = check_hom_associative(2, &mu, &Matrix::identity(2)).unwrap();
        assert!(report.ok());
    }

    #[test]
    fn dual_numbers_product_is_associative() {
        let a = fixtures::dual_numbers();
        assert!(a.check().ok());
        // spot-check the structure constants: e0*e1 = e1, e1*e1 = 0
        assert_eq!(a.mu().eval_basis(&[0, 1]), vec![int(0), int(1)]);
        assert_eq!(a.mu().eval_basis(&[1, 1]), vec![int(0), int(0)]);
    }

    #[test]
    fn scaling_twist_breaks_hom_associativity_not_multiplicativity() {
        // alpha = diag(1, 2) is multiplicative for the dual-numbers product
        // ((2x)^2 = 0 = alpha(x^2)) but twisted associativity fails: direct
        // evaluation gives (e0 e0) alpha(e1) = 2 e1 while
        // alpha(e0)(e0 e1) = e1, so the defect at (0,0,1) is e1, and
        // symmetrically -e1 at (1,0,0).
        let a = fixtures::dual_numbers();
        let alpha = Matrix::from_int_rows(&[&[1, 0], &[0, 2]]);
        let report = check_hom_associative(2, a.mu(), &alpha).unwrap();
        assert!(!report.ok());
        assert!(report
            .violations
            .iter()
            .all(|v| matches!(v.law, Law::HomAssociative(_))));
        let witnesses: Vec<(Vec<usize>, Vec<Scalar>)> = report
            .violations
            .iter()
            .map(|v| (v.indices.clone(), v.defect.clone()))
            .collect();
        assert_eq!(
            witnesses,
            vec![
                (vec![0, 0, 1], vec![int(0), int(1)]),
                (vec![1, 0, 0], vec![int(0), int(-1)]),
            ]
        );
    }

    #[test]
    fn second_product_zero_is_compatible() {
        let a = fixtures::dual_numbers_pair_zero();
        assert!(check_compatible(&a).unwrap().ok());
    }

    #[test]
    fn equal_products_are_compatible() {
        let base = fixtures::dual_numbers();
        let a = CompatibleHomAlgebra::new(
            2,
            base.mu().clone(),
            base.mu().clone(),
            Matrix::identity(2),
        )
        .unwrap();
        assert!(check_compatible(&a).unwrap().ok());
    }

    #[test]
    fn nijenhuis_second_product_is_compatible() {
        let a = fixtures::dual_numbers_nijenhuis_pair();
        assert!(check_compatible(&a).unwrap().ok());
        // mu_N(e0, e0) = e1 and all other products vanish
        assert_eq!(a.mu2().eval_basis(&[0, 0]), vec![int(0), int(1)]);
        assert_eq!(a.mu2().eval_basis(&[0, 1]), vec![int(0), int(0)]);
    }

    #[test]
    fn incompatible_second_product_is_rejected() {
        let base = fixtures::dual_numbers();
        let mut mu2 = MultilinearMap::zero_uniform(2, 2, 2);
        mu2.set(&[0, 1], 1, int(1)); // e0 .2 e1 = e1, not associative
        let report = check_compatible(&CompatibleHomAlgebra::new_unchecked(
            2,
            base.mu().clone(),
            mu2,
            Matrix::identity(2),
        ))
        .unwrap();
        assert!(!report.ok());
    }

    #[test]
    fn identity_zero_and_twist_are_morphisms() {
        let a = fixtures::dual_numbers_nijenhuis_pair();
        let id = Matrix::identity(2);
        assert!(check_morphism(&a, &a, &id).unwrap().ok());
        assert!(check_morphism(&a, &a, &Matrix::zeros(2, 2)).unwrap().ok());
        // alpha itself is a morphism precisely because it is multiplicative
        assert!(check_morphism(&a, &a, a.alpha()).unwrap().ok());
    }

    #[test]
    fn non_morphism_is_reported() {
        let a = fixtures::dual_numbers_pair_zero();
        let phi = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]); // swap is not a morphism here
        assert!(!check_morphism(&a, &a, &phi).unwrap().ok());
    }

    #[test]
    fn linear_combinations_stay_hom_associative() {
        let a = fixtures::dual_numbers_nijenhuis_pair();
        let coeffs = [int(0), int(1), int(-1), int(2), int(-2), frac(1, 2)];
        for l1 in &coeffs {
            for l2 in &coeffs {
                let combo = linear_combination_algebra(&a, l1, l2).unwrap();
                assert!(combo.check().ok(), "failed for ({l1}, {l2})");
            }
        }
    }

    #[test]
    fn linear_combination_edge_cases() {
        let a = fixtures::dual_numbers_nijenhuis_pair();
        let keep_first = linear_combination_algebra(&a, &int(1), &int(0)).unwrap();
        assert_eq!(keep_first.mu(), a.mu1());
        let sum = linear_combination_algebra(&a, &int(1), &int(1)).unwrap();
        assert_eq!(sum.mu(), &a.mu1().add(a.mu2()));
    }

    #[test]
    fn invalid_input_rejected_by_linear_combination() {
        let base = fixtures::dual_numbers();
        let mut mu2 = MultilinearMap::zero_uniform(2, 2, 2);
        mu2.set(&[0, 1], 1, int(1));
        let bad =
            CompatibleHomAlgebra::new_unchecked(2, base.mu().clone(), mu2, Matrix::identity(2));
        assert!(matches!(
            linear_combination_algebra(&bad, &int(1), &int(1)),
            Err(AlgebraError::Invalid(_))
        ));
    }

    #[test]
    fn shape_errors_are_detected() {
        let mu = MultilinearMap::zero_uniform(2, 3, 3);
        assert!(matches!(
            check_hom_associative(2, &mu, &Matrix::identity(2)),
            Err(AlgebraError::Shape(_))
        ));
    }
}
