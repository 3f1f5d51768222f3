//! Twisted cochain spaces, Hochschild-type differentials, the Gerstenhaber
//! bracket and the compatible complex.
//!
//! For a pair (A, M) the degree-n cochain group consists of the n-linear maps
//! `f : A^n -> M` with `beta . f = f . alpha^{xn}`. A basis of this subspace
//! is computed once per degree as the kernel of the twist-equivariance
//! constraint, and every differential is then a matrix with respect to those
//! bases. The compatible complex takes n copies of the degree-n group with the
//! staggered differential mixing the two products' coboundaries; its kernels
//! and images give the cohomology dimensions. Brackets and differentials are
//! assembled from slot substitution and twist weighting, never by symbolic
//! manipulation, so every identity can be checked as an exact tensor equation.

use crate::bimod::CompatibleBimodule;
use crate::exactlin::{frac, int, Matrix, Scalar};
use crate::homalg::{AlgebraError, CompatibleHomAlgebra};
use crate::multilinear::MultilinearMap;
use crate::report::Side;
use num_traits::Zero;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CochainError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("map violates the twist-equivariance constraint ({0})")]
    NotEquivariant(String),
    #[error("degree {degree} exceeds the configured cap {max}")]
    DegreeLimit { degree: usize, max: usize },
    #[error("computation needs {cells} tensor cells, over the configured cap {max}")]
    ResourceLimit { cells: usize, max: usize },
    #[error("map left the twist-equivariant subspace ({0})")]
    NotInSpace(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Resource guards for the tensor sizes involved in a cohomology run.
#[derive(Debug, Clone)]
pub struct Limits {
    /// Largest user-facing degree; spaces one degree higher are allowed
    /// internally since delta lands there.
    pub max_degree: usize,
    /// Cap on dim(A) * dim(M).
    pub max_dim_product: usize,
    /// Cap on the ambient coefficient count dim(M) * dim(A)^n of any space.
    pub max_cells: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: 4,
            max_dim_product: 16,
            max_cells: 1 << 20,
        }
    }
}

/// Basis of the twist-equivariant maps of one degree.
#[derive(Debug, Clone)]
pub struct CochainSpace {
    pub degree: usize,
    pub ambient_dim: usize,
    pub basis: Vec<MultilinearMap>,
    /// True when the constraint was vacuous and the basis is the full set of
    /// coefficient unit maps in ambient order; coordinates can then be read
    /// off without solving.
    full_ambient: bool,
    basis_matrix: Matrix,
}

impl CochainSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Linear combination of the basis with the given coordinates.
    pub fn from_coords(&self, coords: &[Scalar], dims: &[usize], cod: usize) -> MultilinearMap {
        assert_eq!(coords.len(), self.basis.len());
        let mut acc = MultilinearMap::zero(dims.to_vec(), cod);
        for (c, b) in coords.iter().zip(&self.basis) {
            if !c.is_zero() {
                acc = acc.add(&b.scale(c));
            }
        }
        acc
    }
}

/// Dimensions of one slice of the compatible complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyReport {
    pub degree: usize,
    pub dim_cochains: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub dim_h: usize,
}

impl fmt::Display for CohomologyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "degree {}: dim C = {}, dim Z = {}, dim B = {}, dim H = {}",
            self.degree, self.dim_cochains, self.dim_cocycles, self.dim_coboundaries, self.dim_h
        )
    }
}

/// An element of the compatible complex: an n-tuple of degree-n cochains.
#[derive(Debug, Clone, PartialEq)]
pub struct CompatibleCochain {
    pub degree: usize,
    pub parts: Vec<MultilinearMap>,
}

impl CompatibleCochain {
    pub fn zero(degree: usize, dim_a: usize, dim_m: usize) -> Self {
        CompatibleCochain {
            degree,
            parts: (0..degree)
                .map(|_| MultilinearMap::zero_uniform(degree, dim_a, dim_m))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(MultilinearMap::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        CompatibleCochain {
            degree: self.degree,
            parts: self
                .parts
                .iter()
                .zip(&other.parts)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        CompatibleCochain {
            degree: self.degree,
            parts: self
                .parts
                .iter()
                .zip(&other.parts)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        CompatibleCochain {
            degree: self.degree,
            parts: self.parts.iter().map(|p| p.scale(c)).collect(),
        }
    }
}

/// beta . f == f . alpha^{xn}, checked as exact tensors.
pub fn is_equivariant(f: &MultilinearMap, alpha: &Matrix, beta: &Matrix) -> bool {
    f.post_compose(beta) == f.precompose_all(alpha)
}

fn require_cochain_shape(
    f: &MultilinearMap,
    dim_a: usize,
    dim_m: usize,
) -> Result<(), CochainError> {
    if f.arity() == 0 || f.slot_dims().iter().any(|&d| d != dim_a) || f.codomain_dim() != dim_m {
        return Err(CochainError::Shape(format!(
            "expected a map A^n -> M with dim A = {dim_a}, dim M = {dim_m}; got slots {:?} -> {}",
            f.slot_dims(),
            f.codomain_dim()
        )));
    }
    Ok(())
}

fn require_equivariant(
    f: &MultilinearMap,
    alpha: &Matrix,
    beta: &Matrix,
    what: &str,
) -> Result<(), CochainError> {
    if !is_equivariant(f, alpha, beta) {
        return Err(CochainError::NotEquivariant(what.to_string()));
    }
    Ok(())
}

/// The twisted Hochschild coboundary of `f` for the product `mu` with module
/// actions `l`, `r`:
///
/// ```text
/// (delta f)(a_1, ..., a_{n+1})
///   =  l(alpha^{n-1}(a_1), f(a_2, ..., a_{n+1}))
///   +  sum_{i=1}^{n} (-1)^i f(alpha(a_1), ..., a_i . a_{i+1}, ..., alpha(a_{n+1}))
///   +  (-1)^{n+1} r(f(a_1, ..., a_n), alpha^{n-1}(a_{n+1}))
/// ```
pub fn hochschild_delta_raw(
    mu: &MultilinearMap,
    l: &MultilinearMap,
    r: &MultilinearMap,
    alpha: &Matrix,
    f: &MultilinearMap,
) -> MultilinearMap {
    let n = f.arity();
    let alpha_pow = alpha.pow(n - 1);
    let mut acc = l.substitute(1, f).precompose_slot(0, &alpha_pow);
    for i in 1..=n {
        let mut term = f.substitute(i - 1, mu);
        for slot in 0..=n {
            if slot != i - 1 && slot != i {
                term = term.precompose_slot(slot, alpha);
            }
        }
        if i % 2 == 1 {
            acc = acc.sub(&term);
        } else {
            acc = acc.add(&term);
        }
    }
    let last = r.substitute(0, f).precompose_slot(n, &alpha_pow);
    if (n + 1) % 2 == 1 {
        acc = acc.sub(&last);
    } else {
        acc = acc.add(&last);
    }
    acc
}

/// Hochschild coboundary of `f` with respect to product `side` of the pair,
/// with coefficients in the matching half of the bimodule.
pub fn hochschild_delta(
    side: Side,
    algebra: &CompatibleHomAlgebra,
    module: &CompatibleBimodule,
    f: &MultilinearMap,
) -> Result<MultilinearMap, CochainError> {
    require_cochain_shape(f, algebra.dim(), module.dim_m())?;
    require_equivariant(f, algebra.alpha(), module.beta(), "cochain argument")?;
    Ok(hochschild_delta_raw(
        algebra.mu(side),
        module.left(side),
        module.right(side),
        algebra.alpha(),
        f,
    ))
}

/// The insertion product behind the Gerstenhaber bracket:
///
/// ```text
/// (f . g)(a_1, ..., a_{m+n+1})
///   = sum_{i=1}^{m+1} (-1)^{(i-1)n}
///       f(alpha^n(a_1), ..., g(a_i, ..., a_{i+n}), ..., alpha^n(a_{m+n+1}))
/// ```
///
/// for `f` of arity m+1 and `g` of arity n+1.
pub fn circle_product(alpha: &Matrix, f: &MultilinearMap, g: &MultilinearMap) -> MultilinearMap {
    let m = f.arity() - 1;
    let n = g.arity() - 1;
    let alpha_pow = alpha.pow(n);
    let total = m + n + 1;
    let mut acc = MultilinearMap::zero(vec![f.slot_dims()[0]; total], f.codomain_dim());
    for i in 1..=m + 1 {
        let mut term = f.substitute(i - 1, g);
        for slot in 0..total {
            if slot < i - 1 || slot > i - 1 + n {
                term = term.precompose_slot(slot, &alpha_pow);
            }
        }
        if ((i - 1) * n) % 2 == 1 {
            acc = acc.sub(&term);
        } else {
            acc = acc.add(&term);
        }
    }
    acc
}

/// Gerstenhaber bracket `[f, g] = f . g - (-1)^{mn} g . f` on the shifted
/// self-coefficient cochains, with `m`, `n` the shifted degrees.
pub fn gerstenhaber_bracket_raw(
    alpha: &Matrix,
    f: &MultilinearMap,
    g: &MultilinearMap,
) -> MultilinearMap {
    let m = f.arity() - 1;
    let n = g.arity() - 1;
    let fg = circle_product(alpha, f, g);
    let gf = circle_product(alpha, g, f);
    if (m * n) % 2 == 1 {
        fg.add(&gf)
    } else {
        fg.sub(&gf)
    }
}

/// Bracket of two twist-equivariant self-coefficient cochains on `algebra`.
pub fn gerstenhaber_bracket(
    algebra: &CompatibleHomAlgebra,
    f: &MultilinearMap,
    g: &MultilinearMap,
) -> Result<MultilinearMap, CochainError> {
    let d = algebra.dim();
    require_cochain_shape(f, d, d)?;
    require_cochain_shape(g, d, d)?;
    require_equivariant(f, algebra.alpha(), algebra.alpha(), "first bracket argument")?;
    require_equivariant(g, algebra.alpha(), algebra.alpha(), "second bracket argument")?;
    Ok(gerstenhaber_bracket_raw(algebra.alpha(), f, g))
}

/// Self-coefficient coboundary through the bracket:
/// `delta f = (-1)^{n-1} [mu_side, f]`. Must agree with `hochschild_delta` on
/// adjoint coefficients.
pub fn delta_via_bracket(
    side: Side,
    algebra: &CompatibleHomAlgebra,
    f: &MultilinearMap,
) -> Result<MultilinearMap, CochainError> {
    let d = algebra.dim();
    require_cochain_shape(f, d, d)?;
    require_equivariant(f, algebra.alpha(), algebra.alpha(), "cochain argument")?;
    let n = f.arity();
    let bracket = gerstenhaber_bracket_raw(algebra.alpha(), algebra.mu(side), f);
    Ok(if (n - 1) % 2 == 1 {
        bracket.neg()
    } else {
        bracket
    })
}

/// Validate an n-tuple as an element of the compatible complex.
pub fn compatible_cochain(
    algebra: &CompatibleHomAlgebra,
    module: &CompatibleBimodule,
    parts: Vec<MultilinearMap>,
) -> Result<CompatibleCochain, CochainError> {
    let degree = parts.len();
    if degree == 0 {
        return Err(CochainError::Shape(
            "a compatible cochain needs n >= 1 parts".into(),
        ));
    }
    for (i, p) in parts.iter().enumerate() {
        require_cochain_shape(p, algebra.dim(), module.dim_m())?;
        if p.arity() != degree {
            return Err(CochainError::Shape(format!(
                "part {i} has arity {} but the tuple has {degree} parts",
                p.arity()
            )));
        }
        require_equivariant(p, algebra.alpha(), module.beta(), "tuple part")?;
    }
    Ok(CompatibleCochain { degree, parts })
}

/// The staggered differential of the compatible complex:
///
/// ```text
/// delta(f_1, ..., f_n)
///   = (d1 f_1, d2 f_1 + d1 f_2, ..., d2 f_{n-1} + d1 f_n, d2 f_n)
/// ```
///
/// where `d1`, `d2` are the Hochschild coboundaries of the two products.
pub fn compatible_delta(
    algebra: &CompatibleHomAlgebra,
    module: &CompatibleBimodule,
    c: &CompatibleCochain,
) -> Result<CompatibleCochain, CochainError> {
    let n = c.degree;
    let d1: Vec<MultilinearMap> = c
        .parts
        .iter()
        .map(|f| hochschild_delta(Side::First, algebra, module, f))
        .collect::<Result<_, _>>()?;
    let d2: Vec<MultilinearMap> = c
        .parts
        .iter()
        .map(|f| hochschild_delta(Side::Second, algebra, module, f))
        .collect::<Result<_, _>>()?;
    let mut parts = Vec::with_capacity(n + 1);
    for p in 0..=n {
        let mut acc = MultilinearMap::zero_uniform(n + 1, algebra.dim(), module.dim_m());
        if p < n {
            acc = acc.add(&d1[p]);
        }
        if p > 0 {
            acc = acc.add(&d2[p - 1]);
        }
        parts.push(acc);
    }
    Ok(CompatibleCochain {
        degree: n + 1,
        parts,
    })
}

/// Comparison map to the sum algebra: collapse an n-tuple to the single
/// cochain `f_1 + ... + f_n` over (A, mu1 + mu2) with summed actions.
pub fn upsilon(c: &CompatibleCochain) -> MultilinearMap {
    let mut acc = c.parts[0].clone();
    for p in &c.parts[1..] {
        acc = acc.add(p);
    }
    acc
}

/// Which Maurer-Cartan bracket condition failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum McCondition {
    FirstWithFirst,
    SecondWithSecond,
    FirstWithSecond,
}

impl fmt::Display for McCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            McCondition::FirstWithFirst => write!(f, "[mu1, mu1]"),
            McCondition::SecondWithSecond => write!(f, "[mu2, mu2]"),
            McCondition::FirstWithSecond => write!(f, "[mu1, mu2]"),
        }
    }
}

/// Outcome of a Maurer-Cartan style check: the failing bracket conditions
/// with their defect tensors.
#[derive(Debug, Clone)]
pub struct McReport {
    pub failures: Vec<(McCondition, MultilinearMap)>,
}

impl McReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A pair of twist-equivariant bilinear maps is a compatible structure iff
/// all three brackets vanish. Agrees with `homalg::check_compatible` for
/// multiplicative inputs.
pub fn check_maurer_cartan_pair(
    dim: usize,
    mu1: &MultilinearMap,
    mu2: &MultilinearMap,
    alpha: &Matrix,
) -> Result<McReport, CochainError> {
    require_cochain_shape(mu1, dim, dim)?;
    require_cochain_shape(mu2, dim, dim)?;
    require_equivariant(mu1, alpha, alpha, "mu1")?;
    require_equivariant(mu2, alpha, alpha, "mu2")?;
    let mut failures = Vec::new();
    for (cond, f, g) in [
        (McCondition::FirstWithFirst, mu1, mu1),
        (McCondition::SecondWithSecond, mu2, mu2),
        (McCondition::FirstWithSecond, mu1, mu2),
    ] {
        let b = gerstenhaber_bracket_raw(alpha, f, g);
        if !b.is_zero() {
            failures.push((cond, b));
        }
    }
    Ok(McReport { failures })
}

/// Maurer-Cartan check in the complex twisted by the existing structure:
/// `(mu1', mu2')` deforms `algebra` to another compatible pair iff
/// `[mu_i, mu_i'] + 1/2 [mu_i', mu_i'] = 0` for i = 1, 2 and
/// `[mu1, mu2'] + [mu2, mu1'] + [mu1', mu2'] = 0`.
pub fn twisted_mc_check(
    algebra: &CompatibleHomAlgebra,
    mu1p: &MultilinearMap,
    mu2p: &MultilinearMap,
) -> Result<McReport, CochainError> {
    let d = algebra.dim();
    require_cochain_shape(mu1p, d, d)?;
    require_cochain_shape(mu2p, d, d)?;
    let alpha = algebra.alpha();
    require_equivariant(mu1p, alpha, alpha, "mu1'")?;
    require_equivariant(mu2p, alpha, alpha, "mu2'")?;
    let half = frac(1, 2);
    let mut failures = Vec::new();
    let c1 = gerstenhaber_bracket_raw(alpha, algebra.mu1(), mu1p)
        .add(&gerstenhaber_bracket_raw(alpha, mu1p, mu1p).scale(&half));
    if !c1.is_zero() {
        failures.push((McCondition::FirstWithFirst, c1));
    }
    let c2 = gerstenhaber_bracket_raw(alpha, algebra.mu2(), mu2p)
        .add(&gerstenhaber_bracket_raw(alpha, mu2p, mu2p).scale(&half));
    if !c2.is_zero() {
        failures.push((McCondition::SecondWithSecond, c2));
    }
    let c3 = gerstenhaber_bracket_raw(alpha, algebra.mu1(), mu2p)
        .add(&gerstenhaber_bracket_raw(alpha, algebra.mu2(), mu1p))
        .add(&gerstenhaber_bracket_raw(alpha, mu1p, mu2p));
    if !c3.is_zero() {
        failures.push((McCondition::FirstWithSecond, c3));
    }
    Ok(McReport { failures })
}

/// The cochain complex of a fixed (algebra, module) pair: computes and caches
/// twist-equivariant bases, differential matrices and cohomology dimensions.
/// Cached data sits behind mutexes, so shared references can be used from
/// several threads.
pub struct Complex {
    algebra: CompatibleHomAlgebra,
    module: CompatibleBimodule,
    limits: Limits,
    spaces: Mutex<HashMap<usize, Arc<CochainSpace>>>,
    deltas: Mutex<HashMap<(bool, usize), Arc<Matrix>>>,
}

impl Complex {
    pub fn new(
        algebra: CompatibleHomAlgebra,
        module: CompatibleBimodule,
        limits: Limits,
    ) -> Result<Self, CochainError> {
        let product = algebra.dim() * module.dim_m();
        if product > limits.max_dim_product {
            return Err(CochainError::ResourceLimit {
                cells: product,
                max: limits.max_dim_product,
            });
        }
        Ok(Complex {
            algebra,
            module,
            limits,
            spaces: Mutex::new(HashMap::new()),
            deltas: Mutex::new(HashMap::new()),
        })
    }

    /// Complex with coefficients in the algebra itself.
    pub fn adjoint(algebra: &CompatibleHomAlgebra, limits: Limits) -> Result<Self, CochainError> {
        Complex::new(
            algebra.clone(),
            CompatibleBimodule::adjoint(algebra),
            limits,
        )
    }

    pub fn algebra(&self) -> &CompatibleHomAlgebra {
        &self.algebra
    }

    pub fn module(&self) -> &CompatibleBimodule {
        &self.module
    }

    /// Basis of the degree-n twist-equivariant maps, cached.
    pub fn space(&self, n: usize) -> Result<Arc<CochainSpace>, CochainError> {
        if n == 0 {
            return Err(CochainError::Shape("cochain degree must be >= 1".into()));
        }
        if n > self.limits.max_degree + 1 {
            return Err(CochainError::DegreeLimit {
                degree: n,
                max: self.limits.max_degree,
            });
        }
        if let Some(space) = self.spaces.lock().unwrap().get(&n) {
            return Ok(space.clone());
        }
        let space = Arc::new(self.build_space(n)?);
        self.spaces.lock().unwrap().insert(n, space.clone());
        Ok(space)
    }

    fn build_space(&self, n: usize) -> Result<CochainSpace, CochainError> {
        let dim_a = self.algebra.dim();
        let dim_m = self.module.dim_m();
        let ambient = dim_m
            .checked_mul(dim_a.checked_pow(n as u32).unwrap_or(usize::MAX))
            .unwrap_or(usize::MAX);
        if ambient > self.limits.max_cells {
            return Err(CochainError::ResourceLimit {
                cells: ambient,
                max: self.limits.max_cells,
            });
        }
        let alpha = self.algebra.alpha();
        let beta = self.module.beta();
        let dims = vec![dim_a; n];
        if alpha.is_identity() && beta.is_identity() {
            // Vacuous constraint: unit coefficient maps in ambient order.
            let mut basis = Vec::with_capacity(ambient);
            for pos in 0..ambient {
                let mut coeffs = vec![Scalar::zero(); ambient];
                coeffs[pos] = int(1);
                basis.push(MultilinearMap::from_flat(dims.clone(), dim_m, coeffs));
            }
            return Ok(CochainSpace {
                degree: n,
                ambient_dim: ambient,
                basis,
                full_ambient: true,
                basis_matrix: Matrix::identity(ambient),
            });
        }
        // Constraint matrix of beta . f - f . alpha^{xn} acting on the
        // flattened coefficients of f; the kernel is the cochain space.
        let tuples = ambient / dim_m;
        let mut constraint = Matrix::zeros(ambient, ambient);
        let mut i_idx = vec![0usize; n];
        let mut j_idx = vec![0usize; n];
        for ti in 0..tuples {
            decode_tuple(ti, dim_a, &mut i_idx);
            for k in 0..dim_m {
                for l in 0..dim_m {
                    let b = beta.get(k, l);
                    if !b.is_zero() {
                        constraint.set(ti * dim_m + k, ti * dim_m + l, b.clone());
                    }
                }
            }
            for tj in 0..tuples {
                decode_tuple(tj, dim_a, &mut j_idx);
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
                for k in 0..dim_m {
                    let cur = constraint.get(ti * dim_m + k, tj * dim_m + k) - &w;
                    constraint.set(ti * dim_m + k, tj * dim_m + k, cur);
                }
            }
        }
        let kernel = constraint.kernel_basis();
        let basis: Vec<MultilinearMap> = kernel
            .iter()
            .map(|v| MultilinearMap::from_flat(dims.clone(), dim_m, v.clone()))
            .collect();
        let basis_matrix = if kernel.is_empty() {
            Matrix::zeros(ambient, 0)
        } else {
            Matrix::from_columns(&kernel)
        };
        Ok(CochainSpace {
            degree: n,
            ambient_dim: ambient,
            basis,
            full_ambient: false,
            basis_matrix,
        })
    }

    /// Coordinates of a map in the degree-n basis; errors when the map is
    /// outside the twist-equivariant subspace.
    pub fn express(&self, n: usize, f: &MultilinearMap) -> Result<Vec<Scalar>, CochainError> {
        let space = self.space(n)?;
        if space.full_ambient {
            return Ok(f.flatten());
        }
        let rhs = Matrix::from_columns(&[f.flatten()]);
        match space.basis_matrix.solve_columns(&rhs) {
            Some(x) => Ok(x.column(0)),
            None => Err(CochainError::NotInSpace(format!("degree {n}"))),
        }
    }

    fn express_many(&self, n: usize, maps: &[MultilinearMap]) -> Result<Matrix, CochainError> {
        let space = self.space(n)?;
        if maps.is_empty() {
            return Ok(Matrix::zeros(space.dim(), 0));
        }
        let cols: Vec<Vec<Scalar>> = maps.iter().map(MultilinearMap::flatten).collect();
        let rhs = Matrix::from_columns(&cols);
        if space.full_ambient {
            return Ok(rhs);
        }
        space
            .basis_matrix
            .solve_columns(&rhs)
            .ok_or_else(|| CochainError::NotInSpace(format!("degree {n}")))
    }

    /// Matrix of the Hochschild coboundary of one product side, with respect
    /// to the computed bases of degrees n and n+1.
    pub fn delta_matrix(&self, side: Side, n: usize) -> Result<Arc<Matrix>, CochainError> {
        let key = (matches!(side, Side::First), n);
        if let Some(m) = self.deltas.lock().unwrap().get(&key) {
            return Ok(m.clone());
        }
        let space = self.space(n)?;
        let images: Vec<MultilinearMap> = space
            .basis
            .iter()
            .map(|f| {
                hochschild_delta_raw(
                    self.algebra.mu(side),
                    self.module.left(side),
                    self.module.right(side),
                    self.algebra.alpha(),
                    f,
                )
            })
            .collect();
        let matrix = Arc::new(self.express_many(n + 1, &images)?);
        self.deltas.lock().unwrap().insert(key, matrix.clone());
        Ok(matrix)
    }

    /// Matrix of the staggered compatible differential from the n-fold to the
    /// (n+1)-fold space, in block form over the per-degree bases.
    pub fn compatible_delta_matrix(&self, n: usize) -> Result<Matrix, CochainError> {
        let d1 = self.delta_matrix(Side::First, n)?;
        let d2 = self.delta_matrix(Side::Second, n)?;
        let (rows, cols) = (d1.rows(), d1.cols());
        let mut block = Matrix::zeros((n + 1) * rows, n * cols);
        for p in 0..=n {
            for q in 0..n {
                let src = if q == p && p < n {
                    Some(d1.as_ref())
                } else if p > 0 && q == p - 1 {
                    Some(d2.as_ref())
                } else {
                    None
                };
                if let Some(m) = src {
                    for i in 0..rows {
                        for j in 0..cols {
                            let v = m.get(i, j);
                            if !v.is_zero() {
                                block.set(p * rows + i, q * cols + j, v.clone());
                            }
                        }
                    }
                }
            }
        }
        Ok(block)
    }

    /// Coordinates of an n-tuple in the n-fold basis.
    pub fn compatible_coords(&self, c: &CompatibleCochain) -> Result<Vec<Scalar>, CochainError> {
        let mut coords = Vec::new();
        for part in &c.parts {
            coords.extend(self.express(c.degree, part)?);
        }
        Ok(coords)
    }

    /// Rebuild an n-tuple from n-fold coordinates.
    pub fn compatible_from_coords(
        &self,
        n: usize,
        coords: &[Scalar],
    ) -> Result<CompatibleCochain, CochainError> {
        let space = self.space(n)?;
        let s = space.dim();
        assert_eq!(coords.len(), n * s);
        let dims = vec![self.algebra.dim(); n];
        let parts = (0..n)
            .map(|q| space.from_coords(&coords[q * s..(q + 1) * s], &dims, self.module.dim_m()))
            .collect();
        Ok(CompatibleCochain { degree: n, parts })
    }

    /// Solve `delta x = target` in the compatible complex; `None` when the
    /// target is not a coboundary.
    pub fn solve_compatible_delta(
        &self,
        n: usize,
        target: &CompatibleCochain,
    ) -> Result<Option<CompatibleCochain>, CochainError> {
        assert_eq!(target.degree, n + 1);
        let matrix = self.compatible_delta_matrix(n)?;
        let rhs = self.compatible_coords(target)?;
        match matrix.solve(&rhs).expect("coordinate lengths agree") {
            Some(x) => Ok(Some(self.compatible_from_coords(n, &x)?)),
            None => Ok(None),
        }
    }

    /// Dimensions of kernel, image and quotient at degree n. For n = 1 there
    /// are no coboundaries; the complex starts in degree 1.
    pub fn cohomology(&self, n: usize) -> Result<CohomologyReport, CochainError> {
        if n == 0 {
            return Err(CochainError::Shape("cohomology degree must be >= 1".into()));
        }
        if n > self.limits.max_degree {
            return Err(CochainError::DegreeLimit {
                degree: n,
                max: self.limits.max_degree,
            });
        }
        let dim_cochains = n * self.space(n)?.dim();
        let delta_n = self.compatible_delta_matrix(n)?;
        let dim_cocycles = dim_cochains - delta_n.rank();
        let dim_coboundaries = if n == 1 {
            0
        } else {
            self.compatible_delta_matrix(n - 1)?.rank()
        };
        Ok(CohomologyReport {
            degree: n,
            dim_cochains,
            dim_cocycles,
            dim_coboundaries,
            dim_h: dim_cocycles - dim_coboundaries,
        })
    }
}

fn decode_tuple(mut pos: usize, dim: usize, out: &mut [usize]) {
    for slot in (0..out.len()).rev() {
        out[slot] = pos % dim;
        pos /= dim;
    }
}
