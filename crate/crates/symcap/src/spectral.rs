//! Spectral decomposition of triple-system elements, spectral norm, and the
//! membership tests for the bounded symmetric domain.
//!
//! Every element decomposes uniquely as v = sum_j lambda_j c_j with strictly
//! decreasing positive eigenvalues and pairwise strongly orthogonal
//! tripotents.  The decomposition is computed per family (SVD, Takagi via a
//! real symmetric eigenproblem, skew pairing, or the rank-2 closed form) and
//! then validated against the reconstruction residual, so a wrong family
//! formula cannot slip through silently.

use crate::error::Error;
use crate::jts::{operator_matrix, triple_product, Family, JtsElement, JtsSpec, OperatorKind};
use crate::linalg::{max_abs, symmetrize, C64};
use crate::Result;
use nalgebra::{DMatrix, DVector, SymmetricEigen};

/// Default tolerance for eigenvalue grouping and dropping.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Eigenvalues (strictly decreasing, positive) with their tripotents.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    pub eigenvalues: Vec<f64>,
    pub tripotents: Vec<JtsElement>,
}

impl SpectralDecomposition {
    pub fn rank(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn reconstruct(&self, spec: JtsSpec) -> JtsElement {
        let mut acc = JtsElement::zero(spec);
        for (l, c) in self.eigenvalues.iter().zip(&self.tripotents) {
            acc = &acc + &c.scaled(C64::new(*l, 0.0));
        }
        acc
    }

    /// Largest residual among the defining properties: reconstruction,
    /// tripotency of each c_j and pairwise strong orthogonality.
    pub fn validation_residual(&self, v: &JtsElement) -> f64 {
        let mut worst = (v - &self.reconstruct(v.spec())).norm();
        for (i, c) in self.tripotents.iter().enumerate() {
            let t = triple_product(c, c, c).expect("same spec");
            worst = worst.max((&t - &c.scaled(C64::new(2.0, 0.0))).norm());
            for cj in self.tripotents.iter().skip(i + 1) {
                let op = operator_matrix(OperatorKind::T, c, cj).expect("same spec");
                worst = worst.max(max_abs(op.matrix()));
            }
        }
        worst
    }
}

/// Group a descending list of positive values, merging entries closer than
/// `tol` and dropping values below `tol`.  Returns (representative value,
/// member indices) per group.
fn group_values(sorted_desc: &[(f64, usize)], tol: f64) -> Vec<(f64, Vec<usize>)> {
    let mut groups: Vec<(f64, Vec<usize>)> = Vec::new();
    for &(val, idx) in sorted_desc {
        if val < tol {
            break;
        }
        match groups.last_mut() {
            Some((rep, members)) if *rep - val <= tol => members.push(idx),
            _ => groups.push((val, vec![idx])),
        }
    }
    groups
}

fn sorted_desc(values: impl IntoIterator<Item = f64>) -> Vec<(f64, usize)> {
    let mut v: Vec<(f64, usize)> = values
        .into_iter()
        .enumerate()
        .map(|(i, x)| (x, i))
        .collect();
    v.sort_by(|a, b| b.0.partial_cmp(&a.0).expect("finite singular values"));
    v
}

fn decompose_type_i(v: &JtsElement, tol: f64) -> (Vec<f64>, Vec<JtsElement>) {
    let m = v.to_matrix();
    let svd = m.svd(true, true);
    let u = svd.u.expect("requested");
    let vt = svd.v_t.expect("requested");
    let order = sorted_desc(svd.singular_values.iter().copied());
    let mut eigenvalues = Vec::new();
    let mut tripotents = Vec::new();
    for (rep, members) in group_values(&order, tol) {
        let (p, q) = (u.nrows(), vt.ncols());
        let mut c = DMatrix::<C64>::zeros(p, q);
        for i in members {
            c += u.column(i) * vt.row(i);
        }
        eigenvalues.push(rep);
        tripotents.push(matrix_element(v.spec(), &c));
    }
    (eigenvalues, tripotents)
}

fn matrix_element(spec: JtsSpec, m: &DMatrix<C64>) -> JtsElement {
    // the families are closed under their products, so the canonical
    // entries determine the matrix
    let coords = match spec.family() {
        Family::TypeI { p, q } => DVector::from_fn(p * q, |k, _| m[(k / q, k % q)]),
        Family::TypeII { n } => {
            let mut v = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    v.push(m[(i, j)]);
                }
            }
            DVector::from_vec(v)
        }
        Family::TypeIII { n } => {
            let mut v = Vec::new();
            for i in 0..n {
                v.push(m[(i, i)]);
            }
            for i in 0..n {
                for j in (i + 1)..n {
                    v.push(m[(i, j)] * std::f64::consts::SQRT_2);
                }
            }
            DVector::from_vec(v)
        }
        Family::TypeIV { .. } => unreachable!(),
    };
    JtsElement::from_coords(spec, coords).expect("dimension by construction")
}

/// Takagi factorization of a complex symmetric matrix through the real
/// symmetric embedding S = [[X, Y], [Y, -X]]: an eigenvector (u; w) of S
/// with eigenvalue sigma > 0 yields a column z = u + i w with
/// Z conj(z) = sigma z, and Z = sum_k sigma_k z_k z_k^T.
fn decompose_type_iii(v: &JtsElement, tol: f64) -> (Vec<f64>, Vec<JtsElement>) {
    let m = v.to_matrix();
    let n = m.nrows();
    let mut s = DMatrix::<f64>::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let z = m[(i, j)];
            s[(i, j)] = z.re;
            s[(i, j + n)] = z.im;
            s[(i + n, j)] = z.im;
            s[(i + n, j + n)] = -z.re;
        }
    }
    let eig = SymmetricEigen::new(symmetrize(&s));
    let order = sorted_desc(eig.eigenvalues.iter().copied());
    let mut eigenvalues = Vec::new();
    let mut tripotents = Vec::new();
    for (rep, members) in group_values(&order, tol) {
        let mut c = DMatrix::<C64>::zeros(n, n);
        for idx in members {
            let col = eig.eigenvectors.column(idx);
            let z = DVector::from_fn(n, |i, _| C64::new(col[i], col[i + n]));
            c += &z * z.transpose();
        }
        eigenvalues.push(rep);
        tripotents.push(matrix_element(v.spec(), &c));
    }
    (eigenvalues, tripotents)
}

/// Skew-symmetric canonical form.  The left singular vectors of Z for
/// singular value sigma come in quaternionic pairs under the antilinear map
/// A x = Z conj(x) / sigma (A^2 = -id), and each pair (u, u' = A u)
/// contributes the rank-two skew tripotent u' u^T - u u'^T.
fn decompose_type_ii(v: &JtsElement, tol: f64) -> (Vec<f64>, Vec<JtsElement>) {
    let m = v.to_matrix();
    let n = m.nrows();
    let svd = m.clone().svd(true, false);
    let w = svd.u.expect("requested");
    let order = sorted_desc(svd.singular_values.iter().copied());
    let mut eigenvalues = Vec::new();
    let mut tripotents = Vec::new();
    for (rep, members) in group_values(&order, tol) {
        // orthonormal basis of the sigma^2-eigenspace of Z Z^*
        let mut basis: Vec<DVector<C64>> =
            members.iter().map(|&i| w.column(i).into_owned()).collect();
        let mut c = DMatrix::<C64>::zeros(n, n);
        while let Some(first) = basis.first().cloned() {
            let u = &first / C64::new(first.norm(), 0.0);
            let mut up = &m * u.map(|z| z.conj()) / C64::new(rep, 0.0);
            // numerical cleanup: project off u and renormalize
            let overlap = u.dotc(&up);
            up -= &u * overlap;
            up /= C64::new(up.norm(), 0.0);
            c += &up * u.transpose() - &u * up.transpose();
            // reduce the basis to an orthonormal one for the complement of
            // span{u, up} inside the eigenspace
            let mut rest: Vec<DVector<C64>> = Vec::new();
            for b in basis.iter().skip(1) {
                let mut r = b.clone();
                r -= &u * u.dotc(&r);
                r -= &up * up.dotc(&r);
                for kept in &rest {
                    let pr = kept.dotc(&r);
                    r -= kept * pr;
                }
                if r.norm() > 1e-3 {
                    rest.push(&r / C64::new(r.norm(), 0.0));
                }
            }
            basis = rest;
        }
        eigenvalues.push(rep);
        tripotents.push(matrix_element(v.spec(), &c));
    }
    (eigenvalues, tripotents)
}

/// Rank-two closed form for the spin factor.  In trace-orthonormal
/// coordinates z the eigenvalues satisfy
/// lambda_1^2 + lambda_2^2 = |z|^2 and lambda_1 lambda_2 = |q(z)|/2 with
/// q(z) = sum z_i^2.
fn decompose_type_iv(v: &JtsElement, tol: f64) -> (Vec<f64>, Vec<JtsElement>) {
    let z = v.coords();
    let s: f64 = z.iter().map(|w| w.norm_sqr()).sum();
    let q: C64 = z.iter().map(|w| w * w).sum();
    let p = q.norm() / 2.0;
    let disc = (s * s - 4.0 * p * p).max(0.0).sqrt();
    let l1 = ((s + disc) / 2.0).sqrt();
    let l2 = ((s - disc) / 2.0).max(0.0).sqrt();
    let spec = v.spec();
    if l1 < tol {
        return (vec![], vec![]);
    }
    if l1 - l2 <= tol || l2 < tol {
        // equal eigenvalues merge into a single (maximal) tripotent, and a
        // vanishing lambda_2 leaves the single primitive term z/lambda_1
        let c = v.scaled(C64::new(1.0 / l1, 0.0));
        return (vec![l1], vec![c]);
    }
    // v = l1 a + l2 b with b = mu_bar * conj(a), mu_bar = q/(2 l1 l2)
    let mu_bar = q / C64::new(2.0 * l1 * l2, 0.0);
    let zbar = z.map(|w| w.conj());
    let w = &zbar * mu_bar;
    let denom = C64::new(l1 * l1 - l2 * l2, 0.0);
    let a = (z * C64::new(l1, 0.0) - &w * C64::new(l2, 0.0)) / denom;
    let b = (&w * C64::new(l1, 0.0) - z * C64::new(l2, 0.0)) / denom;
    (
        vec![l1, l2],
        vec![
            JtsElement::from_coords(spec, a).expect("dim"),
            JtsElement::from_coords(spec, b).expect("dim"),
        ],
    )
}

/// Unique spectral decomposition of `v`, deterministic given (v, tol).
pub fn spectral_decompose(v: &JtsElement, tol: f64) -> Result<SpectralDecomposition> {
    let (eigenvalues, tripotents) = match v.spec().family() {
        Family::TypeI { .. } => decompose_type_i(v, tol),
        Family::TypeII { .. } => decompose_type_ii(v, tol),
        Family::TypeIII { .. } => decompose_type_iii(v, tol),
        Family::TypeIV { .. } => decompose_type_iv(v, tol),
    };
    let decomp = SpectralDecomposition {
        eigenvalues,
        tripotents,
    };
    let residual = (v - &decomp.reconstruct(v.spec())).norm();
    if residual > 100.0 * tol * (1.0 + v.norm()) {
        return Err(Error::InternalConsistency(format!(
            "reconstruction residual {residual:.3e} exceeds 100*tol"
        )));
    }
    Ok(decomp)
}

/// Largest eigenvalue of v; zero for v = 0.
pub fn spectral_norm(v: &JtsElement) -> f64 {
    match v.spec().family() {
        Family::TypeI { .. } | Family::TypeII { .. } | Family::TypeIII { .. } => {
            let m = v.to_matrix();
            if m.iter().all(|z| z.norm_sqr() == 0.0) {
                return 0.0;
            }
            m.singular_values().max()
        }
        Family::TypeIV { .. } => {
            let z = v.coords();
            let s: f64 = z.iter().map(|w| w.norm_sqr()).sum();
            let q: C64 = z.iter().map(|w| w * w).sum();
            let p = q.norm() / 2.0;
            let disc = (s * s - 4.0 * p * p).max(0.0).sqrt();
            ((s + disc) / 2.0).sqrt()
        }
    }
}

/// True iff the decomposition has full rank with all eigenvalue gaps
/// larger than `tol`.
pub fn is_regular(v: &JtsElement, tol: f64) -> bool {
    match spectral_decompose(v, tol) {
        Ok(d) => {
            d.rank() == v.spec().rank()
                && d.eigenvalues.windows(2).all(|w| w[0] - w[1] > tol)
                && d.eigenvalues.last().is_none_or(|l| *l > tol)
        }
        Err(_) => false,
    }
}

/// Domain membership via the spectral norm: the bounded symmetric domain is
/// the open unit ball of the spectral norm.
pub fn in_domain(v: &JtsElement) -> bool {
    spectral_norm(v) < 1.0
}

/// True when the spectral norm lies within `tol` of the boundary; such
/// points are reported as outside (the domain is open) but flagged.
pub fn near_boundary(v: &JtsElement, tol: f64) -> bool {
    (spectral_norm(v) - 1.0).abs() <= tol
}

/// Smallest eigenvalue of the symmetrized real matrix of B(v, v).
pub fn bergman_min_eigenvalue(v: &JtsElement) -> f64 {
    let b = operator_matrix(OperatorKind::B, v, v).expect("same spec");
    SymmetricEigen::new(symmetrize(b.matrix()))
        .eigenvalues
        .min()
}

/// Membership through the Bergman operator: the domain is the connected
/// component of the origin inside {u : B(u,u) positive definite}, which
/// along the ray t -> tv degenerates first at t = 1/lambda_1.  Since the
/// top Peirce eigenvalue of T(v,v) is 2 lambda_1^2, the component condition
/// is: B(v,v) positive definite and max-eig T(v,v) < 2.  A purely pointwise
/// positivity test would wrongly accept points far outside the domain
/// (all eigenvalues > 1), where every Peirce factor of B is again positive.
pub fn bergman_positive(v: &JtsElement) -> bool {
    if bergman_min_eigenvalue(v) <= 0.0 {
        return false;
    }
    let t = operator_matrix(OperatorKind::T, v, v).expect("same spec");
    let max_t = SymmetricEigen::new(symmetrize(t.matrix()))
        .eigenvalues
        .max();
    max_t < 2.0
}
