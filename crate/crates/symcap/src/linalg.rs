//! Conversions between complex vectors/matrices and their real
//! representations.
//!
//! Complex coordinates (z_1, ..., z_n) are identified with real coordinates
//! (x_1, y_1, ..., x_n, y_n), so the real index of Re z_j is 2j and of
//! Im z_j is 2j+1.  Under this identification the standard symplectic form
//! is sum_j dx_j ∧ dy_j.

use nalgebra::{Complex, DMatrix, DVector};

pub type C64 = Complex<f64>;

/// Complex vector to interleaved real vector.
pub fn complex_to_real(v: &DVector<C64>) -> DVector<f64> {
    let n = v.len();
    DVector::from_fn(2 * n, |i, _| {
        let z = v[i / 2];
        if i % 2 == 0 {
            z.re
        } else {
            z.im
        }
    })
}

/// Interleaved real vector to complex vector. Panics on odd length.
pub fn real_to_complex(v: &DVector<f64>) -> DVector<C64> {
    assert!(v.len() % 2 == 0, "real vector length must be even");
    DVector::from_fn(v.len() / 2, |j, _| C64::new(v[2 * j], v[2 * j + 1]))
}

/// Real 2n x 2n representation of a complex-linear map given by `m`.
/// Each entry a+bi becomes the 2x2 block [[a, -b], [b, a]].
pub fn complex_matrix_to_real(m: &DMatrix<C64>) -> DMatrix<f64> {
    let (r, c) = m.shape();
    let mut out = DMatrix::zeros(2 * r, 2 * c);
    for i in 0..r {
        for j in 0..c {
            let z = m[(i, j)];
            out[(2 * i, 2 * j)] = z.re;
            out[(2 * i, 2 * j + 1)] = -z.im;
            out[(2 * i + 1, 2 * j)] = z.im;
            out[(2 * i + 1, 2 * j + 1)] = z.re;
        }
    }
    out
}

/// Matrix of the standard symplectic form sum_j dx_j ∧ dy_j in the
/// interleaved real basis: Omega[2j, 2j+1] = 1, Omega[2j+1, 2j] = -1.
pub fn standard_symplectic_matrix(real_dim: usize) -> DMatrix<f64> {
    assert!(real_dim % 2 == 0);
    let mut m = DMatrix::zeros(real_dim, real_dim);
    for j in 0..real_dim / 2 {
        m[(2 * j, 2 * j + 1)] = 1.0;
        m[(2 * j + 1, 2 * j)] = -1.0;
    }
    m
}

/// Largest absolute entry of a real matrix.
pub fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0f64, |acc, x| acc.max(x.abs()))
}

/// Symmetrize a nearly-symmetric real matrix in place: (M + M^T)/2.
pub fn symmetrize(m: &DMatrix<f64>) -> DMatrix<f64> {
    (m + m.transpose()) * 0.5
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_vectors() {
        let v = DVector::from_vec(vec![C64::new(1.0, 2.0), C64::new(-0.5, 0.25)]);
        let r = complex_to_real(&v);
        assert_eq!(r.as_slice(), &[1.0, 2.0, -0.5, 0.25]);
        assert_eq!(real_to_complex(&r), v);
    }

    #[test]
    fn real_representation_respects_multiplication_by_i() {
        // multiplication by i maps (x, y) to (-y, x)
        let m = DMatrix::from_element(1, 1, C64::new(0.0, 1.0));
        let r = complex_matrix_to_real(&m);
        let v = DVector::from_vec(vec![3.0, 4.0]);
        let w = &r * v;
        assert_eq!(w.as_slice(), &[-4.0, 3.0]);
    }

    #[test]
    fn symplectic_matrix_is_antisymmetric() {
        let m = standard_symplectic_matrix(6);
        assert_eq!(m.transpose(), -m.clone());
        assert_eq!(m[(0, 1)], 1.0);
    }
}
