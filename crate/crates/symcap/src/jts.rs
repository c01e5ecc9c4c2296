//! The four classical Hermitian positive Jordan triple systems.
//!
//! Elements are stored by their coordinates in a frame that is orthonormal
//! for the trace form (u|v) = tr T(u,v) / genus, so the trace form of two
//! elements equals the standard Hermitian product of their coordinate
//! vectors and the identification with C^n is an isometry.
//!
//! Concrete realizations:
//!
//! * `TypeI(p, q)` — p x q complex matrices with {x,y,z} = x y* z + z y* x;
//!   coordinates are the matrix entries, row-major.
//! * `TypeII(n)` — skew-symmetric n x n matrices, same product;
//!   coordinates are the strict upper-triangle entries (the units
//!   E_ij - E_ji already have trace-form norm 1).
//! * `TypeIII(n)` — symmetric n x n matrices, same product; coordinates are
//!   the diagonal entries followed by sqrt(2) times the upper triangle,
//!   making the frame {E_ii, (E_ij + E_ji)/sqrt(2)} orthonormal.
//! * `TypeIV(n)` — the spin factor on C^n.  On the classical realization the
//!   product is {x,y,z} = 2[(x.conj(y))z + (z.conj(y))x - (x.z)conj(y)] with
//!   the bilinear dot product, normalized so that {e,e,e} = 2e for the real
//!   unit vectors; the trace-orthonormal frame is e_j/sqrt(2), and in these
//!   coordinates the same product has overall coefficient 1.

use crate::error::Error;
use crate::linalg::{complex_to_real, real_to_complex, C64};
use crate::Result;
use nalgebra::{DMatrix, DVector};
use num_rational::Ratio;

const SQRT2: f64 = std::f64::consts::SQRT_2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    TypeI { p: usize, q: usize },
    TypeII { n: usize },
    TypeIII { n: usize },
    TypeIV { n: usize },
}

/// Descriptor of a classical Jordan triple system with its numeric
/// invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct JtsSpec {
    family: Family,
}

impl JtsSpec {
    pub fn new(family: Family) -> Result<Self> {
        match family {
            Family::TypeI { p, q } if p >= 1 && q >= 1 => Ok(Self { family }),
            Family::TypeII { n } if n >= 2 => Ok(Self { family }),
            Family::TypeIII { n } if n >= 1 => Ok(Self { family }),
            Family::TypeIV { n } if n >= 2 => Ok(Self { family }),
            _ => Err(Error::InvalidSpec(format!("{family:?}"))),
        }
    }

    pub fn type_i(p: usize, q: usize) -> Result<Self> {
        Self::new(Family::TypeI { p, q })
    }

    pub fn type_ii(n: usize) -> Result<Self> {
        Self::new(Family::TypeII { n })
    }

    pub fn type_iii(n: usize) -> Result<Self> {
        Self::new(Family::TypeIII { n })
    }

    pub fn type_iv(n: usize) -> Result<Self> {
        Self::new(Family::TypeIV { n })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Complex dimension of the underlying vector space.
    pub fn dim(&self) -> usize {
        match self.family {
            Family::TypeI { p, q } => p * q,
            Family::TypeII { n } => n * (n - 1) / 2,
            Family::TypeIII { n } => n * (n + 1) / 2,
            Family::TypeIV { n } => n,
        }
    }

    /// Rank: the maximal number of pairwise orthogonal tripotents in a
    /// spectral decomposition.
    pub fn rank(&self) -> usize {
        match self.family {
            Family::TypeI { p, q } => p.min(q),
            Family::TypeII { n } => n / 2,
            Family::TypeIII { n } => n,
            Family::TypeIV { .. } => 2,
        }
    }

    /// Genus: the constant making (c|c) = 1 for a primitive tripotent c.
    /// Closed forms per family; `genus_of` recomputes the same value from
    /// the triple product and the tests cross-check the two.
    pub fn genus(&self) -> Ratio<i64> {
        let g = match self.family {
            Family::TypeI { p, q } => (p + q) as i64,
            Family::TypeII { n } => 2 * (n as i64 - 1),
            Family::TypeIII { n } => n as i64 + 1,
            Family::TypeIV { n } => n as i64,
        };
        Ratio::from_integer(g)
    }
}

/// A point of the triple system in the fixed trace-orthonormal frame.
#[derive(Debug, Clone, PartialEq)]
pub struct JtsElement {
    spec: JtsSpec,
    coords: DVector<C64>,
}

impl JtsElement {
    pub fn zero(spec: JtsSpec) -> Self {
        Self {
            spec,
            coords: DVector::zeros(spec.dim()),
        }
    }

    pub fn from_coords(spec: JtsSpec, coords: DVector<C64>) -> Result<Self> {
        if coords.len() != spec.dim() {
            return Err(Error::DimensionMismatch {
                got: coords.len(),
                expected: spec.dim(),
            });
        }
        Ok(Self { spec, coords })
    }

    /// k-th frame vector (orthonormal for the trace form).
    pub fn basis(spec: JtsSpec, k: usize) -> Self {
        let mut coords = DVector::zeros(spec.dim());
        coords[k] = C64::new(1.0, 0.0);
        Self { spec, coords }
    }

    pub fn spec(&self) -> JtsSpec {
        self.spec
    }

    pub fn coords(&self) -> &DVector<C64> {
        &self.coords
    }

    /// Euclidean coordinate norm; equals the trace-form norm sqrt((v|v)).
    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scaled(&self, c: C64) -> Self {
        Self {
            spec: self.spec,
            coords: &self.coords * c,
        }
    }

    pub fn real_coords(&self) -> DVector<f64> {
        complex_to_real(&self.coords)
    }

    pub fn from_real_coords(spec: JtsSpec, v: &DVector<f64>) -> Result<Self> {
        Self::from_coords(spec, real_to_complex(v))
    }

    /// Matrix realization for the three matrix families.
    pub fn to_matrix(&self) -> DMatrix<C64> {
        match self.spec.family {
            Family::TypeI { p, q } => DMatrix::from_fn(p, q, |i, j| self.coords[i * q + j]),
            Family::TypeII { n } => {
                let mut m = DMatrix::zeros(n, n);
                let mut k = 0;
                for i in 0..n {
                    for j in (i + 1)..n {
                        m[(i, j)] = self.coords[k];
                        m[(j, i)] = -self.coords[k];
                        k += 1;
                    }
                }
                m
            }
            Family::TypeIII { n } => {
                let mut m = DMatrix::zeros(n, n);
                for i in 0..n {
                    m[(i, i)] = self.coords[i];
                }
                let mut k = n;
                for i in 0..n {
                    for j in (i + 1)..n {
                        let e = self.coords[k] / SQRT2;
                        m[(i, j)] = e;
                        m[(j, i)] = e;
                        k += 1;
                    }
                }
                m
            }
            Family::TypeIV { .. } => panic!("spin factor has no matrix realization"),
        }
    }

    fn from_matrix(spec: JtsSpec, m: &DMatrix<C64>) -> Self {
        let coords = match spec.family {
            Family::TypeI { p, q } => DVector::from_fn(p * q, |k, _| m[(k / q, k % q)]),
            Family::TypeII { n } => {
                let mut v = Vec::with_capacity(spec.dim());
                for i in 0..n {
                    for j in (i + 1)..n {
                        v.push(m[(i, j)]);
                    }
                }
                DVector::from_vec(v)
            }
            Family::TypeIII { n } => {
                let mut v = Vec::with_capacity(spec.dim());
                for i in 0..n {
                    v.push(m[(i, i)]);
                }
                for i in 0..n {
                    for j in (i + 1)..n {
                        v.push(m[(i, j)] * SQRT2);
                    }
                }
                DVector::from_vec(v)
            }
            Family::TypeIV { .. } => unreachable!(),
        };
        Self { spec, coords }
    }

    /// Coordinates on the classical realization of the spin factor
    /// (the frame vectors are e_j/sqrt(2), so natural = coords/sqrt(2)).
    pub fn natural_spin_coords(&self) -> DVector<C64> {
        match self.spec.family {
            Family::TypeIV { .. } => &self.coords / C64::new(SQRT2, 0.0),
            _ => panic!("natural_spin_coords only applies to TypeIV"),
        }
    }

    pub fn from_natural_spin_coords(spec: JtsSpec, natural: DVector<C64>) -> Result<Self> {
        match spec.family {
            Family::TypeIV { .. } => Self::from_coords(spec, natural * C64::new(SQRT2, 0.0)),
            _ => Err(Error::InvalidSpec("spin coordinates need TypeIV".into())),
        }
    }
}

impl std::ops::Add for &JtsElement {
    type Output = JtsElement;
    fn add(self, rhs: &JtsElement) -> JtsElement {
        assert_eq!(self.spec, rhs.spec, "spec mismatch in element addition");
        JtsElement {
            spec: self.spec,
            coords: &self.coords + &rhs.coords,
        }
    }
}

impl std::ops::Sub for &JtsElement {
    type Output = JtsElement;
    fn sub(self, rhs: &JtsElement) -> JtsElement {
        assert_eq!(self.spec, rhs.spec, "spec mismatch in element subtraction");
        JtsElement {
            spec: self.spec,
            coords: &self.coords - &rhs.coords,
        }
    }
}

fn check_specs(xs: &[&JtsElement]) -> Result<JtsSpec> {
    let spec = xs[0].spec;
    if xs.iter().any(|x| x.spec != spec) {
        return Err(Error::SpecMismatch);
    }
    Ok(spec)
}

fn bilinear_dot(a: &DVector<C64>, b: &DVector<C64>) -> C64 {
    let mut s = C64::new(0.0, 0.0);
    for i in 0..a.len() {
        s += a[i] * b[i];
    }
    s
}

/// Triple product {x, y, z}: C-bilinear symmetric in (x, z), conjugate
/// linear in y.
pub fn triple_product(x: &JtsElement, y: &JtsElement, z: &JtsElement) -> Result<JtsElement> {
    let spec = check_specs(&[x, y, z])?;
    match spec.family {
        Family::TypeI { .. } | Family::TypeII { .. } | Family::TypeIII { .. } => {
            let (xm, ym, zm) = (x.to_matrix(), y.to_matrix(), z.to_matrix());
            let ya = ym.adjoint();
            let m = &xm * &ya * &zm + &zm * &ya * &xm;
            Ok(JtsElement::from_matrix(spec, &m))
        }
        Family::TypeIV { .. } => {
            // Spin product in the trace-orthonormal frame; equals the
            // classical kappa = 2 product transported through e_j/sqrt(2).
            let yc = y.coords.map(|w| w.conj());
            let a = bilinear_dot(&x.coords, &yc);
            let b = bilinear_dot(&z.coords, &yc);
            let c = bilinear_dot(&x.coords, &z.coords);
            let coords = &z.coords * a + &x.coords * b - yc * c;
            Ok(JtsElement { spec, coords })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    /// T(x,y): z -> {x,y,z} (complex linear).
    T,
    /// Q(x): w -> {x,w,x}/2 (conjugate linear; y is ignored).
    Q,
    /// B(x,y) = id - T(x,y) + Q(x)Q(y) (complex linear).
    B,
}

/// Apply the requested operator to a single element.
pub fn apply_operator(
    kind: OperatorKind,
    x: &JtsElement,
    y: &JtsElement,
    w: &JtsElement,
) -> Result<JtsElement> {
    match kind {
        OperatorKind::T => triple_product(x, y, w),
        OperatorKind::Q => Ok(triple_product(x, w, x)?.scaled(C64::new(0.5, 0.0))),
        OperatorKind::B => {
            let t = triple_product(x, y, w)?;
            let qyw = triple_product(y, w, y)?.scaled(C64::new(0.5, 0.0));
            let qq = triple_product(x, &qyw, x)?.scaled(C64::new(0.5, 0.0));
            let id_minus_t = w - &t;
            Ok(&id_minus_t + &qq)
        }
    }
}

/// Real-linear operator on the triple system viewed as R^{2 dim};
/// Q has a conjugate-linear action so the uniform representation is real.
#[derive(Debug, Clone, PartialEq)]
pub struct RealLinearOperator {
    matrix: DMatrix<f64>,
}

impl RealLinearOperator {
    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn apply(&self, v: &JtsElement) -> JtsElement {
        let out = &self.matrix * v.real_coords();
        JtsElement::from_real_coords(v.spec(), &out).expect("operator preserves dimension")
    }
}

/// Assemble the real matrix of T, Q or B columnwise by applying the
/// operator to the real basis vectors e_k and i e_k.
pub fn operator_matrix(
    kind: OperatorKind,
    x: &JtsElement,
    y: &JtsElement,
) -> Result<RealLinearOperator> {
    let spec = check_specs(&[x, y])?;
    let d = spec.dim();
    let mut matrix = DMatrix::zeros(2 * d, 2 * d);
    for a in 0..2 * d {
        let mut basis = DVector::zeros(d);
        basis[a / 2] = if a % 2 == 0 {
            C64::new(1.0, 0.0)
        } else {
            C64::new(0.0, 1.0)
        };
        let w = JtsElement {
            spec,
            coords: basis,
        };
        let img = apply_operator(kind, x, y, &w)?;
        matrix.set_column(a, &img.real_coords());
    }
    Ok(RealLinearOperator { matrix })
}

/// Complex trace of T(u,v) as a complex-linear operator.
pub fn trace_t(u: &JtsElement, v: &JtsElement) -> Result<C64> {
    let spec = check_specs(&[u, v])?;
    let mut tr = C64::new(0.0, 0.0);
    for k in 0..spec.dim() {
        let e = JtsElement::basis(spec, k);
        let w = triple_product(u, v, &e)?;
        tr += w.coords[k];
    }
    Ok(tr)
}

/// Trace form (u|v) = tr T(u,v) / genus; Hermitian, positive definite, and
/// equal to the standard Hermitian product of the coordinate vectors.
pub fn trace_form(u: &JtsElement, v: &JtsElement) -> Result<C64> {
    let spec = check_specs(&[u, v])?;
    let gamma: f64 = *spec.genus().numer() as f64 / *spec.genus().denom() as f64;
    Ok(trace_t(u, v)? / C64::new(gamma, 0.0))
}

/// Fixed primitive tripotent per family, used to compute the genus.
/// For the spin factor the frame vectors are not tripotents; the primitive
/// tripotent is (e_1 + i e_2)/2 on the classical realization.
pub fn primitive_tripotent(spec: JtsSpec) -> JtsElement {
    match spec.family() {
        Family::TypeI { .. } | Family::TypeII { .. } | Family::TypeIII { .. } => {
            JtsElement::basis(spec, 0)
        }
        Family::TypeIV { n } => {
            let mut coords = DVector::zeros(n);
            coords[0] = C64::new(1.0 / SQRT2, 0.0);
            coords[1] = C64::new(0.0, 1.0 / SQRT2);
            JtsElement { spec, coords }
        }
    }
}

/// Genus computed from the triple product: tr T(c,c) for the fixed
/// primitive tripotent c.  Cross-checked against `JtsSpec::genus`.
pub fn genus_of(family: Family) -> Result<f64> {
    let spec = JtsSpec::new(family)?;
    let c = primitive_tripotent(spec);
    Ok(trace_t(&c, &c)?.re)
}

/// Euclidean norm of LHS - RHS of the Jordan identity
/// {x,y,{u,v,w}} - {u,v,{x,y,w}} = {{x,y,u},v,w} - {u,{v,x,y},w}.
pub fn jordan_residual(
    x: &JtsElement,
    y: &JtsElement,
    u: &JtsElement,
    v: &JtsElement,
    w: &JtsElement,
) -> Result<f64> {
    let lhs1 = triple_product(x, y, &triple_product(u, v, w)?)?;
    let lhs2 = triple_product(u, v, &triple_product(x, y, w)?)?;
    let rhs1 = triple_product(&triple_product(x, y, u)?, v, w)?;
    let rhs2 = triple_product(u, &triple_product(v, x, y)?, w)?;
    let diff = &(&lhs1 - &lhs2) - &(&rhs1 - &rhs2);
    Ok(diff.norm())
}

/// Maximal frame of pairwise strongly orthogonal primitive tripotents.
pub fn canonical_frame(spec: JtsSpec) -> Vec<JtsElement> {
    match spec.family() {
        Family::TypeI { p, q } => (0..p.min(q))
            .map(|i| JtsElement::basis(spec, i * q + i))
            .collect(),
        Family::TypeII { n } => {
            // units E_{2i, 2i+1} - E_{2i+1, 2i}
            let mut frame = Vec::new();
            for i in 0..n / 2 {
                let mut m = DMatrix::zeros(n, n);
                m[(2 * i, 2 * i + 1)] = C64::new(1.0, 0.0);
                m[(2 * i + 1, 2 * i)] = C64::new(-1.0, 0.0);
                frame.push(JtsElement::from_matrix(spec, &m));
            }
            frame
        }
        Family::TypeIII { n } => (0..n).map(|i| JtsElement::basis(spec, i)).collect(),
        Family::TypeIV { n } => {
            let mut c1 = DVector::zeros(n);
            c1[0] = C64::new(1.0 / SQRT2, 0.0);
            c1[1] = C64::new(0.0, 1.0 / SQRT2);
            let mut c2 = DVector::zeros(n);
            c2[0] = C64::new(1.0 / SQRT2, 0.0);
            c2[1] = C64::new(0.0, -1.0 / SQRT2);
            vec![
                JtsElement { spec, coords: c1 },
                JtsElement { spec, coords: c2 },
            ]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn el(spec: JtsSpec, parts: &[(f64, f64)]) -> JtsElement {
        let coords = DVector::from_vec(parts.iter().map(|&(a, b)| C64::new(a, b)).collect());
        JtsElement::from_coords(spec, coords).unwrap()
    }

    #[test]
    fn disc_triple_product_of_unit_is_two() {
        let spec = JtsSpec::type_i(1, 1).unwrap();
        let one = JtsElement::basis(spec, 0);
        let t = triple_product(&one, &one, &one).unwrap();
        assert_abs_diff_eq!(t.coords()[0].re, 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(t.coords()[0].im, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn orthogonal_matrix_units_annihilate() {
        let spec = JtsSpec::type_i(2, 2).unwrap();
        let e11 = JtsElement::basis(spec, 0);
        let e22 = JtsElement::basis(spec, 3);
        let t = triple_product(&e11, &e11, &e22).unwrap();
        assert_eq!(t.norm(), 0.0);
        // strong orthogonality: T(E11, E22) = 0 exactly
        let op = operator_matrix(OperatorKind::T, &e11, &e22).unwrap();
        assert_eq!(crate::linalg::max_abs(op.matrix()), 0.0);
    }

    #[test]
    fn spin_factor_real_unit_vector_is_tripotent() {
        // the classical realization's e_1 has coordinates sqrt(2) e_1
        let spec = JtsSpec::type_iv(3).unwrap();
        let mut natural = DVector::zeros(3);
        natural[0] = C64::new(1.0, 0.0);
        let v = JtsElement::from_natural_spin_coords(spec, natural).unwrap();
        let t = triple_product(&v, &v, &v).unwrap();
        let expect = v.scaled(C64::new(2.0, 0.0));
        assert_abs_diff_eq!((&t - &expect).norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn bergman_at_zero_is_identity() {
        let spec = JtsSpec::type_ii(3).unwrap();
        let zero = JtsElement::zero(spec);
        let b = operator_matrix(OperatorKind::B, &zero, &zero).unwrap();
        let d = 2 * spec.dim();
        assert_eq!(b.matrix(), &DMatrix::<f64>::identity(d, d));
    }

    #[test]
    fn bergman_rank_one_formula() {
        // B(v, v) 1 = (1 - |v|^2)^2 for v = 0.5 in the disc
        let spec = JtsSpec::type_i(1, 1).unwrap();
        let v = el(spec, &[(0.5, 0.0)]);
        let one = JtsElement::basis(spec, 0);
        let b = apply_operator(OperatorKind::B, &v, &v, &one).unwrap();
        assert_abs_diff_eq!(b.coords()[0].re, 0.5625, epsilon = 1e-14);
    }

    #[test]
    fn trace_form_examples() {
        let spec = JtsSpec::type_i(2, 2).unwrap();
        let e11 = JtsElement::basis(spec, 0);
        let e22 = JtsElement::basis(spec, 3);
        let f = trace_form(&e11, &e11).unwrap();
        assert_abs_diff_eq!(f.re, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(trace_t(&e11, &e11).unwrap().re, 4.0, epsilon = 1e-14);
        assert_abs_diff_eq!(trace_form(&e11, &e22).unwrap().norm(), 0.0, epsilon = 1e-15);
        let zero = JtsElement::zero(spec);
        assert_eq!(trace_form(&zero, &e22).unwrap().norm(), 0.0);
    }

    #[test]
    fn frames_are_orthonormal_for_trace_form() {
        for spec in [
            JtsSpec::type_i(2, 3).unwrap(),
            JtsSpec::type_ii(4).unwrap(),
            JtsSpec::type_iii(3).unwrap(),
            JtsSpec::type_iv(4).unwrap(),
        ] {
            for a in 0..spec.dim() {
                for b in 0..spec.dim() {
                    let ea = JtsElement::basis(spec, a);
                    let eb = JtsElement::basis(spec, b);
                    let f = trace_form(&ea, &eb).unwrap();
                    let expect = if a == b { 1.0 } else { 0.0 };
                    assert_abs_diff_eq!(f.re, expect, epsilon = 1e-12);
                    assert_abs_diff_eq!(f.im, 0.0, epsilon = 1e-12);
                }
            }
        }
    }

    #[test]
    fn genus_matches_closed_forms() {
        let cases = [
            (Family::TypeI { p: 1, q: 1 }, 2.0),
            (Family::TypeI { p: 2, q: 3 }, 5.0),
            (Family::TypeII { n: 3 }, 4.0),
            (Family::TypeII { n: 4 }, 6.0),
            (Family::TypeIII { n: 3 }, 4.0),
            (Family::TypeIV { n: 3 }, 3.0),
            (Family::TypeIV { n: 5 }, 5.0),
        ];
        for (family, expect) in cases {
            let g = genus_of(family).unwrap();
            assert_abs_diff_eq!(g, expect, epsilon = 1e-12);
            let spec = JtsSpec::new(family).unwrap();
            let closed = *spec.genus().numer() as f64;
            assert_abs_diff_eq!(g, closed, epsilon = 1e-12);
        }
    }

    #[test]
    fn jordan_identity_on_matrix_units() {
        let spec = JtsSpec::type_i(2, 2).unwrap();
        let es: Vec<_> = (0..4).map(|k| JtsElement::basis(spec, k)).collect();
        for x in &es {
            for y in &es {
                for u in &es {
                    let r = jordan_residual(x, y, u, &es[1], &es[2]).unwrap();
                    assert_abs_diff_eq!(r, 0.0, epsilon = 1e-13);
                }
            }
        }
        let zero = JtsElement::zero(spec);
        assert_eq!(
            jordan_residual(&zero, &zero, &zero, &zero, &zero).unwrap(),
            0.0
        );
    }

    #[test]
    fn triple_product_symmetry_is_exact() {
        for spec in [
            JtsSpec::type_i(2, 3).unwrap(),
            JtsSpec::type_ii(4).unwrap(),
            JtsSpec::type_iii(3).unwrap(),
            JtsSpec::type_iv(4).unwrap(),
        ] {
            let x = pseudo_random_element(spec, 11);
            let y = pseudo_random_element(spec, 23);
            let z = pseudo_random_element(spec, 47);
            let a = triple_product(&x, &y, &z).unwrap();
            let b = triple_product(&z, &y, &x).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn conjugate_linearity_in_middle_slot() {
        for spec in [
            JtsSpec::type_i(2, 2).unwrap(),
            JtsSpec::type_ii(3).unwrap(),
            JtsSpec::type_iii(2).unwrap(),
            JtsSpec::type_iv(3).unwrap(),
        ] {
            let x = pseudo_random_element(spec, 3);
            let y = pseudo_random_element(spec, 5);
            let z = pseudo_random_element(spec, 7);
            let iy = y.scaled(C64::new(0.0, 1.0));
            let lhs = triple_product(&x, &iy, &z).unwrap();
            let rhs = triple_product(&x, &y, &z)
                .unwrap()
                .scaled(C64::new(0.0, -1.0));
            assert_abs_diff_eq!((&lhs - &rhs).norm(), 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn bergman_consistency_with_parts() {
        // B = id - T + Q(x)Q(y) as matrices, each side assembled separately
        for spec in [JtsSpec::type_i(2, 2).unwrap(), JtsSpec::type_iv(3).unwrap()] {
            let x = pseudo_random_element(spec, 13);
            let y = pseudo_random_element(spec, 29);
            let b = operator_matrix(OperatorKind::B, &x, &y).unwrap();
            let t = operator_matrix(OperatorKind::T, &x, &y).unwrap();
            let qx = operator_matrix(OperatorKind::Q, &x, &y).unwrap();
            let qy = operator_matrix(OperatorKind::Q, &y, &x).unwrap();
            let d = 2 * spec.dim();
            let rhs = DMatrix::<f64>::identity(d, d) - t.matrix() + qx.matrix() * qy.matrix();
            assert_abs_diff_eq!(
                crate::linalg::max_abs(&(b.matrix() - rhs)),
                0.0,
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn frame_elements_are_tripotents_and_orthogonal() {
        for spec in [
            JtsSpec::type_i(2, 3).unwrap(),
            JtsSpec::type_ii(4).unwrap(),
            JtsSpec::type_ii(5).unwrap(),
            JtsSpec::type_iii(3).unwrap(),
            JtsSpec::type_iv(4).unwrap(),
        ] {
            let frame = canonical_frame(spec);
            assert_eq!(frame.len(), spec.rank());
            for (i, c) in frame.iter().enumerate() {
                let t = triple_product(c, c, c).unwrap();
                let expect = c.scaled(C64::new(2.0, 0.0));
                assert_abs_diff_eq!((&t - &expect).norm(), 0.0, epsilon = 1e-13);
                assert_abs_diff_eq!(trace_form(c, c).unwrap().re, 1.0, epsilon = 1e-12);
                for cj in frame.iter().skip(i + 1) {
                    let op = operator_matrix(OperatorKind::T, c, cj).unwrap();
                    assert_abs_diff_eq!(crate::linalg::max_abs(op.matrix()), 0.0, epsilon = 1e-15);
                }
            }
        }
    }

    #[test]
    fn spec_mismatch_is_detected() {
        let a = JtsElement::zero(JtsSpec::type_i(2, 2).unwrap());
        let b = JtsElement::zero(JtsSpec::type_i(2, 3).unwrap());
        assert!(matches!(
            triple_product(&a, &b, &a),
            Err(Error::SpecMismatch)
        ));
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        assert!(JtsSpec::type_i(0, 2).is_err());
        assert!(JtsSpec::type_ii(1).is_err());
        assert!(JtsSpec::type_iv(1).is_err());
    }

    /// Small deterministic element generator for tests.
    pub fn pseudo_random_element(spec: JtsSpec, seed: u64) -> JtsElement {
        let mut state = seed.wrapping_mul(0x9E3779B97F4A7C15).wrapping_add(1);
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let coords = DVector::from_fn(spec.dim(), |_, _| C64::new(next(), next()));
        JtsElement::from_coords(spec, coords).unwrap()
    }
}
