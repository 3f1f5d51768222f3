//! Factories producing compatible pairs from standard sources: twisting an
//! untwisted compatible pair along a morphism, derived algebras, Nijenhuis
//! operators, compatible Rota-Baxter pairs, and the 2-cocycle-twisted
//! semidirect product.
//!
//! Every factory re-verifies its output with the exhaustive axiom checks
//! instead of trusting the construction; a sign slip in a structure constant
//! is caught immediately at desk scale.

use crate::bimod::Bimodule;
use crate::cochain::{hochschild_delta_raw, is_equivariant};
use crate::exactlin::Matrix;
use crate::homalg::{
    check_compatible, collect_violations, multiplicativity_defect, AlgebraError,
    CompatibleHomAlgebra, HomAssociativeAlgebra,
};
use crate::multilinear::MultilinearMap;
use crate::report::{CheckReport, Law, Side};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("precondition violated: {0}")]
    Precondition(CheckReport),
    #[error("the twisting cochain is not a 2-cocycle; defect at {0:?}")]
    NotCocycle(Vec<usize>),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("cochain input rejected: {0}")]
    Cochain(String),
}

/// Operator tag for validated linear operators on an algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    Nijenhuis,
    RotaBaxter,
}

/// A linear operator on a twisted algebra, validated to commute with the
/// twist and to satisfy its defining law.
#[derive(Debug, Clone)]
pub struct OperatorOnAlgebra {
    pub algebra: HomAssociativeAlgebra,
    pub op: Matrix,
    pub kind: OperatorKind,
}

impl OperatorOnAlgebra {
    pub fn new(
        algebra: HomAssociativeAlgebra,
        op: Matrix,
        kind: OperatorKind,
    ) -> Result<Self, ConstructionError> {
        let report = match kind {
            OperatorKind::Nijenhuis => check_nijenhuis(&algebra, &op)?,
            OperatorKind::RotaBaxter => check_rota_baxter(&algebra, &op)?,
        };
        if !report.ok() {
            return Err(ConstructionError::Precondition(report));
        }
        Ok(OperatorOnAlgebra { algebra, op, kind })
    }
}

fn expect_operator(dim: usize, op: &Matrix) -> Result<(), ConstructionError> {
    if op.rows() != dim || op.cols() != dim {
        return Err(ConstructionError::Shape(format!(
            "operator must be {dim}x{dim}, got {}x{}",
            op.rows(),
            op.cols()
        )));
    }
    Ok(())
}

fn operator_twist_defect(op: &Matrix, alpha: &Matrix) -> MultilinearMap {
    MultilinearMap::from_matrix(&op.mul(alpha).sub(&alpha.mul(op)))
}

/// Twist an untwisted compatible pair (identity twist) along a map `alpha`
/// that is multiplicative for both products: the result is
/// `(A, alpha . mu1, alpha . mu2, alpha)`.
pub fn yau_twist(
    algebra: &CompatibleHomAlgebra,
    alpha: &Matrix,
) -> Result<CompatibleHomAlgebra, ConstructionError> {
    if !algebra.alpha().is_identity() {
        return Err(ConstructionError::Shape(
            "the input pair must carry the identity twist".into(),
        ));
    }
    expect_operator(algebra.dim(), alpha)?;
    let input = check_compatible(algebra)?;
    if !input.ok() {
        return Err(ConstructionError::Precondition(input));
    }
    let mut morphism = CheckReport::ok_report();
    collect_violations(
        &mut morphism,
        Law::MorphismProduct(Side::First),
        &multiplicativity_defect(algebra.mu1(), alpha),
    );
    collect_violations(
        &mut morphism,
        Law::MorphismProduct(Side::Second),
        &multiplicativity_defect(algebra.mu2(), alpha),
    );
    if !morphism.ok() {
        return Err(ConstructionError::Precondition(morphism));
    }
    Ok(CompatibleHomAlgebra::new(
        algebra.dim(),
        algebra.mu1().post_compose(alpha),
        algebra.mu2().post_compose(alpha),
        alpha.clone(),
    )?)
}

/// The n-th derived pair `(A, alpha^n . mu1, alpha^n . mu2, alpha^{n+1})`.
pub fn derived_algebra(
    algebra: &CompatibleHomAlgebra,
    n: usize,
) -> Result<CompatibleHomAlgebra, ConstructionError> {
    let input = check_compatible(algebra)?;
    if !input.ok() {
        return Err(ConstructionError::Precondition(input));
    }
    let alpha_n = algebra.alpha().pow(n);
    Ok(CompatibleHomAlgebra::new(
        algebra.dim(),
        algebra.mu1().post_compose(&alpha_n),
        algebra.mu2().post_compose(&alpha_n),
        algebra.alpha().pow(n + 1),
    )?)
}

/// The product deformed by an operator `N`:
/// `a .N b = N(a) . b + a . N(b) - N(a . b)`.
fn deformed_product(mu: &MultilinearMap, op: &Matrix) -> MultilinearMap {
    mu.precompose_slot(0, op)
        .add(&mu.precompose_slot(1, op))
        .sub(&mu.post_compose(op))
}

/// Nijenhuis check: `N` commutes with the twist and
/// `N(a) . N(b) = N(a .N b)` on all basis pairs.
pub fn check_nijenhuis(
    algebra: &HomAssociativeAlgebra,
    op: &Matrix,
) -> Result<CheckReport, ConstructionError> {
    expect_operator(algebra.dim(), op)?;
    let mut report = CheckReport::ok_report();
    collect_violations(
        &mut report,
        Law::OperatorTwistCommute,
        &operator_twist_defect(op, algebra.alpha()),
    );
    let lhs = algebra.mu().precompose_slot(0, op).precompose_slot(1, op);
    let rhs = deformed_product(algebra.mu(), op).post_compose(op);
    collect_violations(&mut report, Law::NijenhuisLaw, &lhs.sub(&rhs));
    Ok(report)
}

/// Pair a twisted algebra with the product deformed by a Nijenhuis operator.
pub fn nijenhuis_pair(
    algebra: &HomAssociativeAlgebra,
    op: &Matrix,
) -> Result<CompatibleHomAlgebra, ConstructionError> {
    let report = check_nijenhuis(algebra, op)?;
    if !report.ok() {
        return Err(ConstructionError::Precondition(report));
    }
    Ok(CompatibleHomAlgebra::new(
        algebra.dim(),
        algebra.mu().clone(),
        deformed_product(algebra.mu(), op),
        algebra.alpha().clone(),
    )?)
}

/// Rota-Baxter check: `R` commutes with the twist and
/// `R(a) . R(b) = R(R(a) . b + a . R(b))` on all basis pairs.
pub fn check_rota_baxter(
    algebra: &HomAssociativeAlgebra,
    op: &Matrix,
) -> Result<CheckReport, ConstructionError> {
    expect_operator(algebra.dim(), op)?;
    let mut report = CheckReport::ok_report();
    collect_violations(
        &mut report,
        Law::OperatorTwistCommute,
        &operator_twist_defect(op, algebra.alpha()),
    );
    let mu = algebra.mu();
    let lhs = mu.precompose_slot(0, op).precompose_slot(1, op);
    let rhs = mu
        .precompose_slot(0, op)
        .add(&mu.precompose_slot(1, op))
        .post_compose(op);
    collect_violations(&mut report, Law::RotaBaxterLaw(Side::First), &lhs.sub(&rhs));
    Ok(report)
}

/// Compatibility of two Rota-Baxter operators:
/// `R(a) . S(b) + S(a) . R(b) = R(S(a) . b + a . S(b)) + S(R(a) . b + a . R(b))`.
pub fn check_compatible_rb_pair(
    algebra: &HomAssociativeAlgebra,
    r: &Matrix,
    s: &Matrix,
) -> Result<CheckReport, ConstructionError> {
    expect_operator(algebra.dim(), r)?;
    expect_operator(algebra.dim(), s)?;
    let mu = algebra.mu();
    let mut report = CheckReport::ok_report();
    let lhs = mu
        .precompose_slot(0, r)
        .precompose_slot(1, s)
        .add(&mu.precompose_slot(0, s).precompose_slot(1, r));
    let rhs = mu
        .precompose_slot(0, s)
        .add(&mu.precompose_slot(1, s))
        .post_compose(r)
        .add(
            &mu.precompose_slot(0, r)
                .add(&mu.precompose_slot(1, r))
                .post_compose(s),
        );
    collect_violations(&mut report, Law::RotaBaxterPair, &lhs.sub(&rhs));
    Ok(report)
}

/// Pair the two products induced by a compatible pair of Rota-Baxter
/// operators: `a .R b = R(a) . b + a . R(b)` and likewise for `S`.
pub fn rb_pair_algebra(
    algebra: &HomAssociativeAlgebra,
    r: &Matrix,
    s: &Matrix,
) -> Result<CompatibleHomAlgebra, ConstructionError> {
    let mut report = check_rota_baxter(algebra, r)?;
    report.merge(check_rota_baxter(algebra, s)?);
    report.merge(check_compatible_rb_pair(algebra, r, s)?);
    if !report.ok() {
        return Err(ConstructionError::Precondition(report));
    }
    let mu = algebra.mu();
    let mu_r = mu.precompose_slot(0, r).add(&mu.precompose_slot(1, r));
    let mu_s = mu.precompose_slot(0, s).add(&mu.precompose_slot(1, s));
    Ok(CompatibleHomAlgebra::new(
        algebra.dim(),
        mu_r,
        mu_s,
        algebra.alpha().clone(),
    )?)
}

/// Semidirect product on A + M twisted by a Hochschild 2-cocycle `f`:
/// the first product is the plain semidirect one, the second adds `f(a, b)`
/// to the module component. Twist alpha + beta. Requires `f` equivariant
/// with vanishing coboundary.
pub fn f_twisted_semidirect(
    module: &Bimodule,
    f: &MultilinearMap,
) -> Result<CompatibleHomAlgebra, ConstructionError> {
    let algebra = module.algebra();
    let (da, dm) = (algebra.dim(), module.dim_m());
    if f.arity() != 2 || f.slot_dims() != [da, da] || f.codomain_dim() != dm {
        return Err(ConstructionError::Shape(
            "the twisting cochain must be a bilinear map A x A -> M".into(),
        ));
    }
    let input = algebra.check();
    if !input.ok() {
        return Err(ConstructionError::Precondition(input));
    }
    let module_report = module.check();
    if !module_report.ok() {
        return Err(ConstructionError::Precondition(module_report));
    }
    if !is_equivariant(f, algebra.alpha(), module.beta()) {
        return Err(ConstructionError::Cochain(
            "the twisting cochain must satisfy beta . f = f . (alpha x alpha)".into(),
        ));
    }
    let coboundary = hochschild_delta_raw(
        algebra.mu(),
        module.left(),
        module.right(),
        algebra.alpha(),
        f,
    );
    if !coboundary.is_zero() {
        let mut witness = vec![0usize; 3];
        let mut idx = vec![0usize; 3];
        for pos in 0..da * da * da {
            let mut rest = pos;
            for slot in (0..3).rev() {
                idx[slot] = rest % da;
                rest /= da;
            }
            if coboundary.eval_basis(&idx).iter().any(|x| !x.is_zero()) {
                witness.copy_from_slice(&idx);
                break;
            }
        }
        return Err(ConstructionError::NotCocycle(witness));
    }
    let dim = da + dm;
    let mut base = MultilinearMap::zero_uniform(2, dim, dim);
    for i in 0..da {
        for j in 0..da {
            for (k, v) in algebra.mu().eval_basis(&[i, j]).into_iter().enumerate() {
                base.set(&[i, j], k, v);
            }
        }
    }
    for i in 0..da {
        for n in 0..dm {
            for (k, v) in module.left().eval_basis(&[i, n]).into_iter().enumerate() {
                base.set(&[i, da + n], da + k, v);
            }
        }
    }
    for m in 0..dm {
        for j in 0..da {
            for (k, v) in module.right().eval_basis(&[m, j]).into_iter().enumerate() {
                base.set(&[da + m, j], da + k, v);
            }
        }
    }
    let mut twisted = base.clone();
    for i in 0..da {
        for j in 0..da {
            for (k, v) in f.eval_basis(&[i, j]).into_iter().enumerate() {
                twisted.add_to(&[i, j], da + k, &v);
            }
        }
    }
    let mut twist = Matrix::zeros(dim, dim);
    for i in 0..da {
        for j in 0..da {
            twist.set(i, j, algebra.alpha().get(i, j).clone());
        }
    }
    for i in 0..dm {
        for j in 0..dm {
            twist.set(da + i, da + j, module.beta().get(i, j).clone());
        }
    }
    Ok(CompatibleHomAlgebra::new(dim, base, twisted, twist)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;
    use crate::fixtures;

    #[test]
    fn yau_twist_by_identity_is_identity() {
        let a = fixtures::dual_numbers_nijenhuis_pair();
        let t = yau_twist(&a, &Matrix::identity(2)).unwrap();
        assert_eq!(t.mu1(), a.mu1());
        assert_eq!(t.mu2(), a.mu2());
    }

    #[test]
    fn yau_twist_by_zero_kills_the_products() {
        let a = fixtures::dual_numbers_pair_zero();
        let t = yau_twist(&a, &Matrix::zeros(2, 2)).unwrap();
        assert!(t.mu1().is_zero() && t.mu2().is_zero());
    }

    #[test]
    fn yau_twist_by_the_sign_automorphism() {
        let a = fixtures::dual_numbers_pair_zero();
        let alpha = Matrix::from_int_rows(&[&[1, 0], &[0, -1]]);
        let t = yau_twist(&a, &alpha).unwrap();
        assert_eq!(t.mu1().eval_basis(&[0, 1]), vec![int(0), int(-1)]);
        assert_eq!(t, fixtures::sign_twisted_dual_numbers_pair());
    }

    #[test]
    fn yau_twist_rejects_non_morphisms() {
        let a = fixtures::dual_numbers_pair_zero();
        // e0 -> e0 + e1 is not multiplicative for the dual numbers
        let bad = Matrix::from_int_rows(&[&[1, 0], &[1, 1]]);
        assert!(matches!(
            yau_twist(&a, &bad),
            Err(ConstructionError::Precondition(_))
        ));
    }

    #[test]
    fn derived_algebra_degree_zero_keeps_products() {
        let a = fixtures::sign_twisted_dual_numbers_pair();
        let d = derived_algebra(&a, 0).unwrap();
        assert_eq!(d.mu1(), a.mu1());
        assert_eq!(d.alpha(), a.alpha());
    }

    #[test]
    fn derived_algebra_with_nilpotent_twist_vanishes() {
        let a = fixtures::shift_twisted_square_pair();
        let d = derived_algebra(&a, 2).unwrap();
        assert!(d.mu1().is_zero() && d.mu2().is_zero());
    }

    #[test]
    fn derived_algebra_of_the_twisted_fixture_is_valid() {
        let a = fixtures::sign_twisted_dual_numbers_pair();
        let d = derived_algebra(&a, 1).unwrap();
        assert!(check_compatible(&d).unwrap().ok());
    }

    #[test]
    fn identity_and_zero_are_nijenhuis() {
        let a = fixtures::dual_numbers();
        assert!(check_nijenhuis(&a, &Matrix::identity(2)).unwrap().ok());
        assert!(check_nijenhuis(&a, &Matrix::zeros(2, 2)).unwrap().ok());
    }

    #[test]
    fn multiplication_by_x_is_nijenhuis_on_dual_numbers() {
        let a = fixtures::dual_numbers();
        let n = fixtures::dual_numbers_shift();
        assert!(check_nijenhuis(&a, &n).unwrap().ok());
        let pair = nijenhuis_pair(&a, &n).unwrap();
        assert_eq!(pair, fixtures::dual_numbers_nijenhuis_pair());
    }

    #[test]
    fn nijenhuis_pair_edge_cases() {
        let a = fixtures::dual_numbers();
        let zero_pair = nijenhuis_pair(&a, &Matrix::zeros(2, 2)).unwrap();
        assert!(zero_pair.mu2().is_zero());
        let id_pair = nijenhuis_pair(&a, &Matrix::identity(2)).unwrap();
        assert_eq!(id_pair.mu2(), a.mu());
    }

    #[test]
    fn scalar_nijenhuis_scales_the_product() {
        let a = fixtures::split_algebra();
        for lambda in [-2i64, -1, 0, 1, 3] {
            let op = Matrix::identity(2).scale(&int(lambda));
            let pair = nijenhuis_pair(&a, &op).unwrap();
            assert_eq!(pair.mu2(), &a.mu().scale(&int(lambda)));
        }
    }

    #[test]
    fn non_nijenhuis_operator_is_rejected() {
        // the nilpotent shift fails the Nijenhuis law on K x K
        let a = fixtures::split_algebra();
        let bad = Matrix::from_int_rows(&[&[0, 1], &[0, 0]]);
        assert!(!check_nijenhuis(&a, &bad).unwrap().ok());
        assert!(matches!(
            nijenhuis_pair(&a, &bad),
            Err(ConstructionError::Precondition(_))
        ));
    }

    #[test]
    fn rota_baxter_examples() {
        let a = fixtures::dual_numbers();
        assert!(check_rota_baxter(&a, &Matrix::zeros(2, 2)).unwrap().ok());
        let r = fixtures::dual_numbers_shift();
        assert!(check_rota_baxter(&a, &r).unwrap().ok());
        // (R, R) is a compatible pair: both sides double the single law
        assert!(check_compatible_rb_pair(&a, &r, &r).unwrap().ok());
        // identity is not Rota-Baxter on a unital algebra
        assert!(!check_rota_baxter(&a, &Matrix::identity(2)).unwrap().ok());
    }

    #[test]
    fn rb_pair_algebra_fixtures() {
        let a = fixtures::dual_numbers();
        let r = fixtures::dual_numbers_shift();
        let zero = Matrix::zeros(2, 2);
        let pair = rb_pair_algebra(&a, &r, &zero).unwrap();
        // a .R b with R = mult by x: e0 .R e0 = x e0 + e0 x = 2x
        assert_eq!(pair.mu1().eval_basis(&[0, 0]), vec![int(0), int(2)]);
        assert!(pair.mu2().is_zero());
        let doubled = rb_pair_algebra(&a, &r, &r).unwrap();
        assert_eq!(doubled.mu1(), doubled.mu2());
        // swapping the operators swaps the products
        let swapped = rb_pair_algebra(&a, &zero, &r).unwrap();
        assert_eq!(swapped.mu1(), pair.mu2());
        assert_eq!(swapped.mu2(), pair.mu1());
    }

    #[test]
    fn rb_pair_on_nilpotent_algebra() {
        // A = span(x, x^2) inside K[x]/(x^3): x . x = x^2. R shifts x -> x^2.
        let mu = fixtures::product(2, &[(0, 0, 1, 1)]);
        let a = HomAssociativeAlgebra::new(2, mu, Matrix::identity(2)).unwrap();
        let r = Matrix::from_int_rows(&[&[0, 0], &[1, 0]]);
        assert!(check_rota_baxter(&a, &r).unwrap().ok());
        let pair = rb_pair_algebra(&a, &r, &r).unwrap();
        assert!(check_compatible(&pair).unwrap().ok());
    }

    #[test]
    fn f_twisted_semidirect_with_zero_cocycle_is_the_semidirect_product() {
        let alg = fixtures::dual_numbers_pair_zero();
        let module = crate::bimod::CompatibleBimodule::adjoint(&alg).structure(Side::First);
        let zero = MultilinearMap::zero(vec![2, 2], 2);
        let s = f_twisted_semidirect(&module, &zero).unwrap();
        assert_eq!(s.mu1(), s.mu2());
    }

    #[test]
    fn coboundaries_are_accepted_as_twisting_cochains() {
        let alg = fixtures::dual_numbers_pair_zero();
        let module = crate::bimod::CompatibleBimodule::adjoint(&alg).structure(Side::First);
        let g = MultilinearMap::from_matrix(&Matrix::from_int_rows(&[&[0, 1], &[2, 0]]));
        let f = hochschild_delta_raw(
            module.algebra().mu(),
            module.left(),
            module.right(),
            module.algebra().alpha(),
            &g,
        );
        assert!(f_twisted_semidirect(&module, &f).is_ok());
    }

    #[test]
    fn dual_basis_square_cocycle_twists_the_dual_numbers() {
        // f(x, x) = 1 is a Hochschild 2-cocycle of the dual numbers.
        let alg = fixtures::dual_numbers_pair_zero();
        let module = crate::bimod::CompatibleBimodule::adjoint(&alg).structure(Side::First);
        let mut f = MultilinearMap::zero(vec![2, 2], 2);
        f.set(&[1, 1], 0, int(1));
        let s = f_twisted_semidirect(&module, &f).unwrap();
        assert_eq!(s.dim(), 4);
        assert!(check_compatible(&s).unwrap().ok());
        // the twisted product sees f in the module block
        assert_eq!(s.mu2().get(&[1, 1], 2), &int(1));
        assert!(s.mu1().get(&[1, 1], 2).is_zero());
    }

    #[test]
    fn non_cocycles_are_rejected_with_a_witness() {
        let alg = fixtures::dual_numbers_pair_zero();
        let module = crate::bimod::CompatibleBimodule::adjoint(&alg).structure(Side::First);
        let mut f = MultilinearMap::zero(vec![2, 2], 2);
        f.set(&[0, 1], 0, int(1)); // delta f != 0
        assert!(matches!(
            f_twisted_semidirect(&module, &f),
            Err(ConstructionError::NotCocycle(_))
        ));
    }
}
