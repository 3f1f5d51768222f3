//! Compatible Hom-Lie algebras obtained from compatible pairs by taking
//! commutators, their induced representations, the twisted
//! Chevalley-Eilenberg differential, and the skew-symmetrization chain map
//! from the associative complex.
//!
//! The chain-map identity is the normative test here: it pins the sign
//! convention of the Lie-side differential against the associative one.

use crate::bimod::CompatibleBimodule;
use crate::cochain::{is_equivariant, CompatibleCochain};
use crate::exactlin::{int, Matrix, Scalar};
use crate::homalg::{collect_violations, multiplicativity_defect, CompatibleHomAlgebra};
use crate::multilinear::MultilinearMap;
use crate::report::{CheckReport, Law, Side};
use itertools::Itertools;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HomLieError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("axioms violated: {0}")]
    Invalid(CheckReport),
    #[error("cochain must be alternating")]
    NotAlternating,
    #[error("cochain must be twist-equivariant")]
    NotEquivariant,
}

/// Two antisymmetric brackets sharing a twist, each twisted-Jacobi, linked by
/// the six-term compatibility identity.
#[derive(Debug, Clone, PartialEq)]
pub struct CompatibleHomLieAlgebra {
    dim: usize,
    bracket1: MultilinearMap,
    bracket2: MultilinearMap,
    alpha: Matrix,
}

impl CompatibleHomLieAlgebra {
    pub fn new(
        dim: usize,
        bracket1: MultilinearMap,
        bracket2: MultilinearMap,
        alpha: Matrix,
    ) -> Result<Self, HomLieError> {
        let lie = CompatibleHomLieAlgebra {
            dim,
            bracket1,
            bracket2,
            alpha,
        };
        let report = lie.check();
        if !report.ok() {
            return Err(HomLieError::Invalid(report));
        }
        Ok(lie)
    }

    pub fn new_unchecked(
        dim: usize,
        bracket1: MultilinearMap,
        bracket2: MultilinearMap,
        alpha: Matrix,
    ) -> Self {
        CompatibleHomLieAlgebra {
            dim,
            bracket1,
            bracket2,
            alpha,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bracket(&self, side: Side) -> &MultilinearMap {
        match side {
            Side::First => &self.bracket1,
            Side::Second => &self.bracket2,
        }
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn check(&self) -> CheckReport {
        let mut report = CheckReport::ok_report();
        for (side, br) in [(Side::First, &self.bracket1), (Side::Second, &self.bracket2)] {
            collect_violations(
                &mut report,
                Law::BracketAntisymmetry(side),
                &br.add(&br.permute_slots(&[1, 0])),
            );
            collect_violations(
                &mut report,
                Law::TwistMultiplicative(side),
                &multiplicativity_defect(br, &self.alpha),
            );
            collect_violations(
                &mut report,
                Law::HomJacobi(side),
                &cyclic_sum(&br.substitute(0, br).precompose_slot(2, &self.alpha)),
            );
        }
        let u = self
            .bracket2
            .substitute(0, &self.bracket1)
            .precompose_slot(2, &self.alpha);
        let v = self
            .bracket1
            .substitute(0, &self.bracket2)
            .precompose_slot(2, &self.alpha);
        collect_violations(
            &mut report,
            Law::BracketCompatibility,
            &cyclic_sum(&u).add(&cyclic_sum(&v)),
        );
        report
    }
}

/// t(x,y,z) + t(y,z,x) + t(z,x,y)
fn cyclic_sum(t: &MultilinearMap) -> MultilinearMap {
    t.add(&t.permute_slots(&[1, 2, 0]))
        .add(&t.permute_slots(&[2, 0, 1]))
}

/// A compatible representation: rho_i action maps satisfying the twisted rep
/// laws for each bracket plus one mixed identity.
#[derive(Debug, Clone, PartialEq)]
pub struct CompatibleHomLieRep {
    lie: CompatibleHomLieAlgebra,
    dim_v: usize,
    rho1: MultilinearMap,
    rho2: MultilinearMap,
    beta: Matrix,
}

impl CompatibleHomLieRep {
    pub fn new(
        lie: CompatibleHomLieAlgebra,
        dim_v: usize,
        rho1: MultilinearMap,
        rho2: MultilinearMap,
        beta: Matrix,
    ) -> Result<Self, HomLieError> {
        let rep = CompatibleHomLieRep {
            lie,
            dim_v,
            rho1,
            rho2,
            beta,
        };
        let report = rep.check();
        if !report.ok() {
            return Err(HomLieError::Invalid(report));
        }
        Ok(rep)
    }

    pub fn new_unchecked(
        lie: CompatibleHomLieAlgebra,
        dim_v: usize,
        rho1: MultilinearMap,
        rho2: MultilinearMap,
        beta: Matrix,
    ) -> Self {
        CompatibleHomLieRep {
            lie,
            dim_v,
            rho1,
            rho2,
            beta,
        }
    }

    pub fn lie(&self) -> &CompatibleHomLieAlgebra {
        &self.lie
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn rho(&self, side: Side) -> &MultilinearMap {
        match side {
            Side::First => &self.rho1,
            Side::Second => &self.rho2,
        }
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    pub fn check(&self) -> CheckReport {
        let mut report = CheckReport::ok_report();
        let alpha = &self.lie.alpha;
        for (side, rho, br) in [
            (Side::First, &self.rho1, &self.lie.bracket1),
            (Side::Second, &self.rho2, &self.lie.bracket2),
        ] {
            // rho(alpha(x)) . beta = beta . rho(x)
            let d1 = rho
                .precompose_slot(0, alpha)
                .precompose_slot(1, &self.beta)
                .sub(&rho.post_compose(&self.beta));
            collect_violations(&mut report, Law::RepresentationTwist(side), &d1);
            // rho([x,y]) beta(v) = rho(alpha x) rho(y) v - rho(alpha y) rho(x) v
            let lhs = rho.substitute(0, br).precompose_slot(2, &self.beta);
            let rhs = rho.substitute(1, rho).precompose_slot(0, alpha);
            let d2 = lhs.sub(&rhs).add(&rhs.permute_slots(&[1, 0, 2]));
            collect_violations(&mut report, Law::RepresentationBracket(side), &d2);
        }
        // rho2([x,y]_1) beta(v) + rho1([x,y]_2) beta(v)
        //   = rho1(alpha x) rho2(y) v - rho1(alpha y) rho2(x) v
        //   + rho2(alpha x) rho1(y) v - rho2(alpha y) rho1(x) v
        let a = self
            .rho2
            .substitute(0, &self.lie.bracket1)
            .precompose_slot(2, &self.beta);
        let b = self
            .rho1
            .substitute(0, &self.lie.bracket2)
            .precompose_slot(2, &self.beta);
        let c = self
            .rho1
            .substitute(1, &self.rho2)
            .precompose_slot(0, alpha);
        let e = self
            .rho2
            .substitute(1, &self.rho1)
            .precompose_slot(0, alpha);
        let defect = a
            .add(&b)
            .sub(&c)
            .add(&c.permute_slots(&[1, 0, 2]))
            .sub(&e)
            .add(&e.permute_slots(&[1, 0, 2]));
        collect_violations(&mut report, Law::RepresentationCompatibility, &defect);
        report
    }
}

/// Commutator brackets `[a, b]_i = a .i b - b .i a` of a compatible pair;
/// the result is verified against all compatible Hom-Lie axioms.
pub fn commutator_compatible_lie(
    algebra: &CompatibleHomAlgebra,
) -> Result<CompatibleHomLieAlgebra, HomLieError> {
    let commutator = |mu: &MultilinearMap| mu.sub(&mu.permute_slots(&[1, 0]));
    CompatibleHomLieAlgebra::new(
        algebra.dim(),
        commutator(algebra.mu1()),
        commutator(algebra.mu2()),
        algebra.alpha().clone(),
    )
}

/// The representation induced on a compatible bimodule by
/// `rho_i(a) m = a <|i m - m |>i a`, verified against the rep axioms.
pub fn induced_rep(module: &CompatibleBimodule) -> Result<CompatibleHomLieRep, HomLieError> {
    let lie = commutator_compatible_lie(module.algebra())?;
    let rho = |l: &MultilinearMap, r: &MultilinearMap| l.sub(&r.permute_slots(&[1, 0]));
    CompatibleHomLieRep::new(
        lie,
        module.dim_m(),
        rho(module.l1(), module.r1()),
        rho(module.l2(), module.r2()),
        module.beta().clone(),
    )
}

/// True when f changes sign under every adjacent argument swap.
pub fn is_alternating(f: &MultilinearMap) -> bool {
    let n = f.arity();
    for k in 0..n.saturating_sub(1) {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(k, k + 1);
        if f.permute_slots(&perm) != f.neg() {
            return false;
        }
    }
    true
}

/// Twisted Chevalley-Eilenberg coboundary for one bracket and action:
///
/// ```text
/// (d f)(x_1, ..., x_{n+1})
///   =  sum_i (-1)^{i+1} rho(alpha^{n-1}(x_i)) f(..., x_i omitted, ...)
///   +  sum_{i<j} (-1)^{i+j} f([x_i, x_j], alpha(x_1), ..., both omitted, ...)
/// ```
pub fn cl_delta_raw(
    bracket: &MultilinearMap,
    rho: &MultilinearMap,
    alpha: &Matrix,
    f: &MultilinearMap,
) -> MultilinearMap {
    let n = f.arity();
    let total = n + 1;
    let alpha_pow = alpha.pow(n - 1);
    let dim_g = bracket.slot_dims()[0];
    let mut acc = MultilinearMap::zero(vec![dim_g; total], f.codomain_dim());
    for i in 1..=total {
        let term = rho.substitute(1, f).precompose_slot(0, &alpha_pow);
        let mut perm = Vec::with_capacity(total);
        perm.push(i - 1);
        perm.extend((0..total).filter(|&s| s != i - 1));
        let term = term.permute_slots(&perm);
        if (i + 1) % 2 == 0 {
            acc = acc.add(&term);
        } else {
            acc = acc.sub(&term);
        }
    }
    for i in 1..=total {
        for j in (i + 1)..=total {
            let mut term = f.substitute(0, bracket);
            for slot in 2..=n {
                term = term.precompose_slot(slot, alpha);
            }
            let mut perm = Vec::with_capacity(total);
            perm.push(i - 1);
            perm.push(j - 1);
            perm.extend((0..total).filter(|&s| s != i - 1 && s != j - 1));
            let term = term.permute_slots(&perm);
            if (i + j) % 2 == 0 {
                acc = acc.add(&term);
            } else {
                acc = acc.sub(&term);
            }
        }
    }
    acc
}

/// Chevalley-Eilenberg coboundary of an alternating equivariant cochain with
/// respect to bracket `side` of the pair.
pub fn cl_delta(
    side: Side,
    rep: &CompatibleHomLieRep,
    f: &MultilinearMap,
) -> Result<MultilinearMap, HomLieError> {
    let lie = &rep.lie;
    if f.arity() == 0
        || f.slot_dims().iter().any(|&d| d != lie.dim)
        || f.codomain_dim() != rep.dim_v
    {
        return Err(HomLieError::Shape(
            "expected an n-linear map on the Lie algebra with module values".into(),
        ));
    }
    if !is_alternating(f) {
        return Err(HomLieError::NotAlternating);
    }
    if !is_equivariant(f, &lie.alpha, &rep.beta) {
        return Err(HomLieError::NotEquivariant);
    }
    Ok(cl_delta_raw(lie.bracket(side), rep.rho(side), &lie.alpha, f))
}

/// Staggered compatible Chevalley-Eilenberg differential on n-tuples:
/// `(d1 f_1, ..., d1 f_i + d2 f_{i-1}, ..., d2 f_n)`.
pub fn compatible_cl_delta(
    rep: &CompatibleHomLieRep,
    parts: &[MultilinearMap],
) -> Result<Vec<MultilinearMap>, HomLieError> {
    let n = parts.len();
    if n == 0 {
        return Err(HomLieError::Shape("empty tuple".into()));
    }
    let d1: Vec<MultilinearMap> = parts
        .iter()
        .map(|f| cl_delta(Side::First, rep, f))
        .collect::<Result<_, _>>()?;
    let d2: Vec<MultilinearMap> = parts
        .iter()
        .map(|f| cl_delta(Side::Second, rep, f))
        .collect::<Result<_, _>>()?;
    let mut out = Vec::with_capacity(n + 1);
    for p in 0..=n {
        let mut acc = MultilinearMap::zero(vec![rep.lie.dim; parts[0].arity() + 1], rep.dim_v);
        if p < n {
            acc = acc.add(&d1[p]);
        }
        if p > 0 {
            acc = acc.add(&d2[p - 1]);
        }
        out.push(acc);
    }
    Ok(out)
}

/// Signed sum over all argument permutations:
/// `f_bar(a_1, ..., a_n) = sum_sigma sign(sigma) f(a_{sigma(1)}, ...)`.
pub fn skew_symmetrize(f: &MultilinearMap) -> MultilinearMap {
    let n = f.arity();
    let mut acc = MultilinearMap::zero(f.slot_dims().to_vec(), f.codomain_dim());
    for perm in (0..n).permutations(n) {
        let sign = permutation_sign(&perm);
        let term = f.permute_slots(&perm);
        acc = if sign > 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

/// Skew-symmetrize each part of a compatible cochain; the result lives in the
/// compatible Chevalley-Eilenberg complex of the commutator structures.
pub fn theta(c: &CompatibleCochain) -> Vec<MultilinearMap> {
    c.parts.iter().map(skew_symmetrize).collect()
}

fn permutation_sign(perm: &[usize]) -> i32 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in (i + 1)..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Basis of the alternating twist-equivariant n-cochains of a representation,
/// with its column matrix; used to express Lie-side differentials as matrices.
pub fn alternating_space(
    rep: &CompatibleHomLieRep,
    n: usize,
) -> (Vec<MultilinearMap>, Matrix) {
    let dim_g = rep.lie.dim;
    let dim_v = rep.dim_v;
    let tuples = dim_g.pow(n as u32);
    let ambient = tuples * dim_v;
    let alpha = &rep.lie.alpha;
    let beta = &rep.beta;
    // Rows: equivariance constraints (ambient many) plus one alternation
    // constraint per adjacent swap and coefficient.
    let swaps = n.saturating_sub(1);
    let mut constraint = Matrix::zeros(ambient * (1 + swaps), ambient);
    let mut i_idx = vec![0usize; n];
    let mut j_idx = vec![0usize; n];
    for ti in 0..tuples {
        decode(ti, dim_g, &mut i_idx);
        for k in 0..dim_v {
            for l in 0..dim_v {
                let b = beta.get(k, l);
                if !b.is_zero() {
                    constraint.set(ti * dim_v + k, ti * dim_v + l, b.clone());
                }
            }
        }
        for tj in 0..tuples {
            decode(tj, dim_g, &mut j_idx);
            let mut w = int(1);
            let mut vanished = false;
            for t in 0..n {
                let a = alpha.get(j_idx[t], i_idx[t]);
                if a.is_zero() {
                    vanished = true;
                    break;
                }
                w *= a;
            }
            if vanished {
                continue;
            }
            for k in 0..dim_v {
                let cur = constraint.get(ti * dim_v + k, tj * dim_v + k) - &w;
                constraint.set(ti * dim_v + k, tj * dim_v + k, cur);
            }
        }
        // f(..., x_s, x_{s+1}, ...) + f(..., x_{s+1}, x_s, ...) = 0
        for s in 0..swaps {
            let mut swapped = i_idx.clone();
            swapped.swap(s, s + 1);
            let tswapped = encode(&swapped, dim_g);
            let row_base = ambient * (1 + s) + ti * dim_v;
            for k in 0..dim_v {
                let cur = constraint.get(row_base + k, ti * dim_v + k) + int(1);
                constraint.set(row_base + k, ti * dim_v + k, cur);
                let cur = constraint.get(row_base + k, tswapped * dim_v + k) + int(1);
                constraint.set(row_base + k, tswapped * dim_v + k, cur);
            }
        }
    }
    let kernel = constraint.kernel_basis();
    let basis: Vec<MultilinearMap> = kernel
        .iter()
        .map(|v| MultilinearMap::from_flat(vec![dim_g; n], dim_v, v.clone()))
        .collect();
    let matrix = if kernel.is_empty() {
        Matrix::zeros(ambient, 0)
    } else {
        Matrix::from_columns(&kernel)
    };
    (basis, matrix)
}

fn decode(mut pos: usize, dim: usize, out: &mut [usize]) {
    for slot in (0..out.len()).rev() {
        out[slot] = pos % dim;
        pos /= dim;
    }
}

fn encode(idx: &[usize], dim: usize) -> usize {
    idx.iter().fold(0, |acc, &i| acc * dim + i)
}

/// Matrix of the staggered Lie differential from n-tuples to (n+1)-tuples of
/// alternating equivariant cochains.
pub fn compatible_cl_delta_matrix(
    rep: &CompatibleHomLieRep,
    n: usize,
) -> Result<Matrix, HomLieError> {
    let (basis_n, _) = alternating_space(rep, n);
    let (_, matrix_next) = alternating_space(rep, n + 1);
    let mut images = Vec::new();
    for q in 0..n {
        for f in &basis_n {
            let mut parts = vec![MultilinearMap::zero(vec![rep.lie.dim; n], rep.dim_v); n];
            parts[q] = f.clone();
            let d = compatible_cl_delta(rep, &parts)?;
            let mut col = Vec::new();
            for part in &d {
                col.extend(part.flatten());
            }
            images.push(col);
        }
    }
    let s_next = matrix_next.cols();
    if images.is_empty() {
        return Ok(Matrix::zeros((n + 1) * s_next, 0));
    }
    // Express each stacked image tuple in the (n+1)-fold alternating basis.
    let ambient_next = matrix_next.rows();
    let mut stacked = Matrix::zeros((n + 1) * ambient_next, (n + 1) * s_next);
    for b in 0..=n {
        for i in 0..ambient_next {
            for j in 0..s_next {
                let v = matrix_next.get(i, j);
                if !v.is_zero() {
                    stacked.set(b * ambient_next + i, b * s_next + j, v.clone());
                }
            }
        }
    }
    let rhs = Matrix::from_columns(&images);
    stacked
        .solve_columns(&rhs)
        .ok_or_else(|| HomLieError::Shape("differential left the alternating subspace".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimod::CompatibleBimodule;
    use crate::cochain::{compatible_cochain, compatible_delta};
    use crate::fixtures;

    #[test]
    fn commutative_products_give_abelian_brackets() {
        let lie = commutator_compatible_lie(&fixtures::dual_numbers_nijenhuis_pair()).unwrap();
        assert!(lie.bracket(Side::First).is_zero());
        assert!(lie.bracket(Side::Second).is_zero());
    }

    #[test]
    fn upper_triangular_commutator_bracket() {
        let alg = fixtures::upper_triangular_pair();
        let lie = commutator_compatible_lie(&alg).unwrap();
        // [e0, e1] = e0 e1 - e1 e0 = e1
        assert_eq!(lie.bracket(Side::First).eval_basis(&[0, 1]), vec![int(0), int(1)]);
        assert!(lie.check().ok());
    }

    #[test]
    fn induced_rep_examples() {
        // symmetric commutative actions induce the zero representation
        let adj = CompatibleBimodule::adjoint(&fixtures::dual_numbers_nijenhuis_pair());
        let rep = induced_rep(&adj).unwrap();
        assert!(rep.rho(Side::First).is_zero());
        // the noncommutative fixture induces a nonzero valid representation
        let adj = CompatibleBimodule::adjoint(&fixtures::upper_triangular_pair());
        let rep = induced_rep(&adj).unwrap();
        assert!(!rep.rho(Side::First).is_zero());
        assert!(rep.check().ok());
    }

    #[test]
    fn cl_delta_of_zero_is_zero() {
        let adj = CompatibleBimodule::adjoint(&fixtures::upper_triangular_pair());
        let rep = induced_rep(&adj).unwrap();
        let zero = MultilinearMap::zero(vec![2, 2], 2);
        assert!(cl_delta(Side::First, &rep, &zero).unwrap().is_zero());
    }

    #[test]
    fn cl_delta_on_abelian_zero_action_vanishes() {
        let adj = CompatibleBimodule::adjoint(&fixtures::zero_algebra(2));
        let rep = induced_rep(&adj).unwrap();
        let f = MultilinearMap::from_matrix(&Matrix::identity(2));
        assert!(cl_delta(Side::First, &rep, &f).unwrap().is_zero());
    }

    #[test]
    fn cl_delta_rejects_non_alternating_input() {
        let adj = CompatibleBimodule::adjoint(&fixtures::upper_triangular_pair());
        let rep = induced_rep(&adj).unwrap();
        let mut f = MultilinearMap::zero(vec![2, 2], 2);
        f.set(&[0, 0], 0, int(1)); // symmetric entry
        assert!(matches!(
            cl_delta(Side::First, &rep, &f),
            Err(HomLieError::NotAlternating)
        ));
    }

    #[test]
    fn compatible_cl_delta_degree_one_is_the_pair() {
        let adj = CompatibleBimodule::adjoint(&fixtures::upper_triangular_pair());
        let rep = induced_rep(&adj).unwrap();
        let f = MultilinearMap::from_matrix(&Matrix::identity(2));
        let d = compatible_cl_delta(&rep, &[f.clone()]).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d[0], cl_delta(Side::First, &rep, &f).unwrap());
        assert_eq!(d[1], cl_delta(Side::Second, &rep, &f).unwrap());
    }

    #[test]
    fn compatible_cl_delta_squares_to_zero_as_matrices() {
        for alg in [
            fixtures::upper_triangular_pair(),
            fixtures::dual_numbers_nijenhuis_pair(),
        ] {
            let rep = induced_rep(&CompatibleBimodule::adjoint(&alg)).unwrap();
            for n in 1..=2 {
                let d_n = compatible_cl_delta_matrix(&rep, n).unwrap();
                let d_next = compatible_cl_delta_matrix(&rep, n + 1).unwrap();
                assert!(d_next.mul(&d_n).is_zero(), "failed at degree {n}");
            }
        }
    }

    #[test]
    fn theta_is_the_identity_in_degree_one() {
        let alg = fixtures::upper_triangular_pair();
        let module = CompatibleBimodule::adjoint(&alg);
        let f = MultilinearMap::from_matrix(&Matrix::identity(2));
        let c = compatible_cochain(&alg, &module, vec![f.clone()]).unwrap();
        assert_eq!(theta(&c), vec![f]);
    }

    #[test]
    fn theta_kills_symmetric_cochains() {
        let mut f = MultilinearMap::zero(vec![2, 2], 2);
        f.set(&[0, 1], 0, int(1));
        f.set(&[1, 0], 0, int(1));
        assert!(skew_symmetrize(&f).is_zero());
    }

    #[test]
    fn theta_of_the_product_pair_is_the_commutator_pair() {
        let alg = fixtures::upper_triangular_pair();
        let module = CompatibleBimodule::adjoint(&alg);
        let c = compatible_cochain(&alg, &module, vec![alg.mu1().clone(), alg.mu2().clone()])
            .unwrap();
        let bars = theta(&c);
        let lie = commutator_compatible_lie(&alg).unwrap();
        assert_eq!(&bars[0], lie.bracket(Side::First));
        assert_eq!(&bars[1], lie.bracket(Side::Second));
    }

    #[test]
    fn theta_is_a_chain_map() {
        // the normative identity pinning the Lie-side sign convention:
        // theta . delta = d . theta on whole cochain bases in low degrees
        for alg in [
            fixtures::upper_triangular_pair(),
            fixtures::dual_numbers_nijenhuis_pair(),
            fixtures::sign_twisted_dual_numbers_pair(),
        ] {
            let module = CompatibleBimodule::adjoint(&alg);
            let rep = induced_rep(&module).unwrap();
            let complex =
                crate::cochain::Complex::adjoint(&alg, crate::cochain::Limits::default()).unwrap();
            for n in 1..=2 {
                let space = complex.space(n).unwrap();
                for f in &space.basis {
                    for slot in 0..n {
                        let mut parts =
                            vec![MultilinearMap::zero_uniform(n, alg.dim(), alg.dim()); n];
                        parts[slot] = f.clone();
                        let c = compatible_cochain(&alg, &module, parts).unwrap();
                        let lhs = theta(&compatible_delta(&alg, &module, &c).unwrap());
                        let rhs = compatible_cl_delta(&rep, &theta(&c)).unwrap();
                        assert_eq!(lhs, rhs, "chain map failed at degree {n}");
                    }
                }
            }
        }
    }
}
