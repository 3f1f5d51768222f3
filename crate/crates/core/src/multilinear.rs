//! Multilinear maps stored as dense coefficient tensors over fixed bases.
//!
//! A map `f : V_1 x ... x V_n -> W` is stored by its values on basis tuples:
//! `f(e_{i_1}, ..., e_{i_n}) = sum_k coeffs[i_1, ..., i_n, k] e_k`. Slots may
//! have different dimensions, which covers algebra products (A, A -> A),
//! module actions (A, M -> M and M, A -> M) and cochains (A^n -> M) with one
//! type. The combinators here (slot substitution, per-slot matrix
//! precomposition, postcomposition, slot permutation) are the building blocks
//! for every coboundary operator and bracket in the crate.

use crate::exactlin::{Matrix, Scalar};
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultilinearMap {
    slot_dims: Vec<usize>,
    codomain_dim: usize,
    coeffs: Vec<Scalar>,
}

impl MultilinearMap {
    pub fn zero(slot_dims: Vec<usize>, codomain_dim: usize) -> Self {
        let len = slot_dims.iter().product::<usize>() * codomain_dim;
        MultilinearMap {
            slot_dims,
            codomain_dim,
            coeffs: vec![Scalar::zero(); len],
        }
    }

    /// Map with all slots of dimension `domain_dim` (cochain layout).
    pub fn zero_uniform(arity: usize, domain_dim: usize, codomain_dim: usize) -> Self {
        MultilinearMap::zero(vec![domain_dim; arity], codomain_dim)
    }

    /// Arity-1 map from a matrix: column `j` is the image of `e_j`.
    pub fn from_matrix(m: &Matrix) -> Self {
        let mut f = MultilinearMap::zero(vec![m.cols()], m.rows());
        for j in 0..m.cols() {
            for k in 0..m.rows() {
                f.set(&[j], k, m.get(k, j).clone());
            }
        }
        f
    }

    /// Matrix of an arity-1 map.
    pub fn to_matrix(&self) -> Matrix {
        assert_eq!(self.arity(), 1, "to_matrix needs an arity-1 map");
        let mut m = Matrix::zeros(self.codomain_dim, self.slot_dims[0]);
        for j in 0..self.slot_dims[0] {
            for k in 0..self.codomain_dim {
                m.set(k, j, self.get(&[j], k).clone());
            }
        }
        m
    }

    pub fn arity(&self) -> usize {
        self.slot_dims.len()
    }

    pub fn slot_dims(&self) -> &[usize] {
        &self.slot_dims
    }

    pub fn codomain_dim(&self) -> usize {
        self.codomain_dim
    }

    /// Domain dimension of a uniform map (all slots equal).
    pub fn domain_dim(&self) -> usize {
        debug_assert!(
            self.slot_dims.windows(2).all(|w| w[0] == w[1]),
            "domain_dim on a mixed-domain map"
        );
        self.slot_dims.first().copied().unwrap_or(0)
    }

    fn offset(&self, idx: &[usize], out: usize) -> usize {
        debug_assert_eq!(idx.len(), self.arity());
        let mut o = 0;
        for (i, (&ix, &d)) in idx.iter().zip(&self.slot_dims).enumerate() {
            debug_assert!(ix < d, "index {ix} out of range for slot {i} (dim {d})");
            o = o * d + ix;
        }
        o * self.codomain_dim + out
    }

    pub fn get(&self, idx: &[usize], out: usize) -> &Scalar {
        &self.coeffs[self.offset(idx, out)]
    }

    pub fn set(&mut self, idx: &[usize], out: usize, value: Scalar) {
        let o = self.offset(idx, out);
        self.coeffs[o] = value;
    }

    pub fn add_to(&mut self, idx: &[usize], out: usize, value: &Scalar) {
        let o = self.offset(idx, out);
        self.coeffs[o] += value;
    }

    /// Value on a basis tuple, as a codomain coordinate vector.
    pub fn eval_basis(&self, idx: &[usize]) -> Vec<Scalar> {
        let base = self.offset(idx, 0);
        self.coeffs[base..base + self.codomain_dim].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.slot_dims, other.slot_dims);
        assert_eq!(self.codomain_dim, other.codomain_dim);
        MultilinearMap {
            slot_dims: self.slot_dims.clone(),
            codomain_dim: self.codomain_dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Scalar::from_integer(1.into())))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        MultilinearMap {
            slot_dims: self.slot_dims.clone(),
            codomain_dim: self.codomain_dim,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Scalar::from_integer(1.into()))
    }

    /// Flatten to a coefficient vector (the ambient coordinates used by the
    /// cochain-space linear algebra).
    pub fn flatten(&self) -> Vec<Scalar> {
        self.coeffs.clone()
    }

    /// Rebuild from ambient coordinates.
    pub fn from_flat(slot_dims: Vec<usize>, codomain_dim: usize, coeffs: Vec<Scalar>) -> Self {
        assert_eq!(
            coeffs.len(),
            slot_dims.iter().product::<usize>() * codomain_dim
        );
        MultilinearMap {
            slot_dims,
            codomain_dim,
            coeffs,
        }
    }

    fn for_each_nonzero(&self, mut visit: impl FnMut(&[usize], usize, &Scalar)) {
        let n = self.arity();
        let mut idx = vec![0usize; n];
        for (pos, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut rest = pos / self.codomain_dim;
                let out = pos % self.codomain_dim;
                for slot in (0..n).rev() {
                    idx[slot] = rest % self.slot_dims[slot];
                    rest /= self.slot_dims[slot];
                }
                visit(&idx, out, c);
            }
        }
    }

    /// Postcompose with a linear map: `(m . f)`.
    pub fn post_compose(&self, m: &Matrix) -> Self {
        assert_eq!(m.cols(), self.codomain_dim);
        if m.is_identity() {
            return self.clone();
        }
        let mut out = MultilinearMap::zero(self.slot_dims.clone(), m.rows());
        self.for_each_nonzero(|idx, k, c| {
            for k2 in 0..m.rows() {
                let a = m.get(k2, k);
                if !a.is_zero() {
                    out.add_to(idx, k2, &(a * c));
                }
            }
        });
        out
    }

    /// Precompose one slot with a linear map:
    /// `f(a_1, ..., m(a_s), ..., a_n)`. The slot dimension becomes `m.cols()`.
    pub fn precompose_slot(&self, slot: usize, m: &Matrix) -> Self {
        assert_eq!(m.rows(), self.slot_dims[slot]);
        if m.is_identity() {
            return self.clone();
        }
        let mut dims = self.slot_dims.clone();
        dims[slot] = m.cols();
        let mut out = MultilinearMap::zero(dims, self.codomain_dim);
        let mut idx = Vec::new();
        self.for_each_nonzero(|src_idx, k, c| {
            idx.clear();
            idx.extend_from_slice(src_idx);
            for j in 0..m.cols() {
                let a = m.get(src_idx[slot], j);
                if !a.is_zero() {
                    idx[slot] = j;
                    out.add_to(&idx, k, &(a * c));
                }
            }
        });
        out
    }

    /// Precompose every slot with the same linear map (uniform domains).
    pub fn precompose_all(&self, m: &Matrix) -> Self {
        let mut out = self.clone();
        for slot in 0..self.arity() {
            out = out.precompose_slot(slot, m);
        }
        out
    }

    /// Substitute `g` into slot `slot` of `self`:
    /// `f(a_1, ..., g(b_1, ..., b_m), ..., a_n)`. The result has arity
    /// `self.arity() + g.arity() - 1`; `g`'s slots sit where `slot` was.
    pub fn substitute(&self, slot: usize, g: &Self) -> Self {
        assert_eq!(
            g.codomain_dim, self.slot_dims[slot],
            "codomain of g must match slot {slot}"
        );
        let mut dims = Vec::with_capacity(self.arity() + g.arity() - 1);
        dims.extend_from_slice(&self.slot_dims[..slot]);
        dims.extend_from_slice(&g.slot_dims);
        dims.extend_from_slice(&self.slot_dims[slot + 1..]);
        let mut out = MultilinearMap::zero(dims, self.codomain_dim);
        // Group g's nonzero coefficients by output index once.
        let mut g_by_out: Vec<Vec<(Vec<usize>, Scalar)>> = vec![Vec::new(); g.codomain_dim];
        g.for_each_nonzero(|idx, out_idx, c| {
            g_by_out[out_idx].push((idx.to_vec(), c.clone()));
        });
        let mut idx = Vec::new();
        self.for_each_nonzero(|f_idx, k, fc| {
            for (g_idx, gc) in &g_by_out[f_idx[slot]] {
                idx.clear();
                idx.extend_from_slice(&f_idx[..slot]);
                idx.extend_from_slice(g_idx);
                idx.extend_from_slice(&f_idx[slot + 1..]);
                out.add_to(&idx, k, &(fc * gc));
            }
        });
        out
    }

    /// Reorder arguments: `result(a_0, ..., a_{n-1}) = f(a_{perm[0]}, ...)`,
    /// i.e. `perm[s]` names the result argument feeding `f`'s slot `s`.
    pub fn permute_slots(&self, perm: &[usize]) -> Self {
        let n = self.arity();
        assert_eq!(perm.len(), n);
        let mut dims = vec![0usize; n];
        for (s, &p) in perm.iter().enumerate() {
            dims[p] = self.slot_dims[s];
        }
        let mut out = MultilinearMap::zero(dims, self.codomain_dim);
        let mut idx = vec![0usize; n];
        self.for_each_nonzero(|src_idx, k, c| {
            for (s, &p) in perm.iter().enumerate() {
                idx[p] = src_idx[s];
            }
            out.add_to(&idx, k, c);
        });
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;

    fn bilinear_dual_number_product() -> MultilinearMap {
        // e0 is the unit, e1 squares to zero.
        let mut mu = MultilinearMap::zero_uniform(2, 2, 2);
        mu.set(&[0, 0], 0, int(1));
        mu.set(&[0, 1], 1, int(1));
        mu.set(&[1, 0], 1, int(1));
        mu
    }

    #[test]
    fn eval_basis_reads_coefficients() {
        let mu = bilinear_dual_number_product();
        assert_eq!(mu.eval_basis(&[0, 1]), vec![int(0), int(1)]);
        assert_eq!(mu.eval_basis(&[1, 1]), vec![int(0), int(0)]);
    }

    #[test]
    fn substitute_builds_triple_product() {
        // f(a, mu(b, c)) on (e0, e0, e1) = mu(e0, mu(e0, e1)) = e1.
        let mu = bilinear_dual_number_product();
        let assoc = mu.substitute(1, &mu);
        assert_eq!(assoc.arity(), 3);
        assert_eq!(assoc.eval_basis(&[0, 0, 1]), vec![int(0), int(1)]);
        assert_eq!(assoc.eval_basis(&[1, 1, 0]), vec![int(0), int(0)]);
    }

    #[test]
    fn precompose_and_post_compose_agree_with_hand_eval() {
        let mu = bilinear_dual_number_product();
        let alpha = Matrix::from_int_rows(&[&[1, 0], &[0, -1]]);
        // alpha(mu(e0, e1)) = alpha(e1) = -e1
        let twisted = mu.post_compose(&alpha);
        assert_eq!(twisted.eval_basis(&[0, 1]), vec![int(0), int(-1)]);
        // mu(alpha(e1), e0) = mu(-e1, e0) = -e1
        let pre = mu.precompose_slot(0, &alpha);
        assert_eq!(pre.eval_basis(&[1, 0]), vec![int(0), int(-1)]);
    }

    #[test]
    fn permute_slots_swaps_arguments() {
        let mut f = MultilinearMap::zero(vec![2, 3], 1);
        f.set(&[1, 2], 0, int(7));
        // g(a, b) = f(b, a): slot 0 of f reads result argument 1.
        let g = f.permute_slots(&[1, 0]);
        assert_eq!(g.slot_dims(), &[3, 2]);
        assert_eq!(g.get(&[2, 1], 0), &int(7));
    }

    #[test]
    fn matrix_roundtrip() {
        let m = Matrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        assert_eq!(MultilinearMap::from_matrix(&m).to_matrix(), m);
    }
}
