//! Symplectic embeddings of the bounded domains and their numerical
//! certification.
//!
//! Three maps are constructed: the identity inclusion of the Euclidean unit
//! ball into the domain, a trace-unitary rotation sending the domain into
//! the unit cylinder, and the duality map onto the affine chart of the
//! compact dual.  Whether a map is symplectic for a given pair of 2-forms is
//! checked numerically: the pullback J^T omega_target J is compared against
//! omega_source at sampled points.
//!
//! The duality map is evaluated by spectral functional calculus,
//! lambda -> lambda (1 - lambda^2)^{-1/2} on each tripotent; the pullback
//! residual against the Fubini-Study potential is the a-posteriori
//! certificate that this is the right map.

use crate::error::Error;
use crate::jts::{trace_form, triple_product, Family, JtsElement, JtsSpec};
use crate::linalg::{
    complex_matrix_to_real, complex_to_real, max_abs, standard_symplectic_matrix, C64,
};
use crate::spectral::{in_domain, spectral_decompose, spectral_norm, DEFAULT_TOL};
use crate::Result;
use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Open region on which a map is declared.
#[derive(Clone)]
pub enum SourceRegion {
    All,
    EuclideanBall { radius: f64 },
    Domain(JtsSpec),
}

impl SourceRegion {
    pub fn contains(&self, x: &DVector<f64>) -> bool {
        match self {
            SourceRegion::All => true,
            SourceRegion::EuclideanBall { radius } => x.norm() < *radius,
            SourceRegion::Domain(spec) => match JtsElement::from_real_coords(*spec, x) {
                Ok(v) => in_domain(&v),
                Err(_) => false,
            },
        }
    }
}

pub enum JacobianMode {
    Analytic(Box<dyn Fn(&DVector<f64>) -> DMatrix<f64>>),
    CentralDifference { h: f64 },
}

/// A smooth map between real coordinate spaces.
pub struct SmoothMap {
    pub source_dim: usize,
    pub target_dim: usize,
    pub region: SourceRegion,
    pub name: String,
    eval: Box<dyn Fn(&DVector<f64>) -> DVector<f64>>,
    jacobian_mode: JacobianMode,
}

impl SmoothMap {
    pub fn evaluate(&self, x: &DVector<f64>) -> Result<DVector<f64>> {
        if !self.region.contains(x) {
            return Err(Error::OutsideSourceRegion);
        }
        Ok((self.eval)(x))
    }

    pub fn jacobian(&self, x: &DVector<f64>) -> Result<DMatrix<f64>> {
        if !self.region.contains(x) {
            return Err(Error::OutsideSourceRegion);
        }
        match &self.jacobian_mode {
            JacobianMode::Analytic(j) => Ok(j(x)),
            JacobianMode::CentralDifference { h } => {
                let mut jac = DMatrix::zeros(self.target_dim, self.source_dim);
                for c in 0..self.source_dim {
                    let mut xp = x.clone();
                    let mut xm = x.clone();
                    xp[c] += *h;
                    xm[c] -= *h;
                    let col = ((self.eval)(&xp) - (self.eval)(&xm)) / (2.0 * h);
                    jac.set_column(c, &col);
                }
                Ok(jac)
            }
        }
    }

    /// Constant linear map given by a real matrix.
    pub fn linear(name: &str, matrix: DMatrix<f64>, region: SourceRegion) -> Self {
        let m = matrix.clone();
        SmoothMap {
            source_dim: matrix.ncols(),
            target_dim: matrix.nrows(),
            region,
            name: name.to_string(),
            eval: Box::new(move |x| &m * x),
            jacobian_mode: JacobianMode::Analytic(Box::new(move |_| matrix.clone())),
        }
    }
}

/// Finite-difference step for Kaehler-potential Hessians; with one
/// Richardson step the truncation error is O(h^4) and roundoff O(eps/h^2).
const HESSIAN_STEP: f64 = 5e-3;

/// A 2-form given either by the constant standard matrix or by a Kaehler
/// potential, evaluated through the complex Hessian of the potential
/// (nested central differences with one Richardson extrapolation step).
pub enum TwoForm {
    Standard {
        real_dim: usize,
    },
    Kaehler {
        real_dim: usize,
        sign: f64,
        name: String,
        potential: Box<dyn Fn(&DVector<f64>) -> f64>,
    },
}

impl TwoForm {
    pub fn standard(real_dim: usize) -> Self {
        TwoForm::Standard { real_dim }
    }

    pub fn kaehler<F>(real_dim: usize, name: &str, sign: f64, potential: F) -> Self
    where
        F: Fn(&DVector<f64>) -> f64 + 'static,
    {
        TwoForm::Kaehler {
            real_dim,
            sign,
            name: name.to_string(),
            potential: Box::new(potential),
        }
    }

    pub fn real_dim(&self) -> usize {
        match self {
            TwoForm::Standard { real_dim } => *real_dim,
            TwoForm::Kaehler { real_dim, .. } => *real_dim,
        }
    }

    pub fn name(&self) -> String {
        match self {
            TwoForm::Standard { .. } => "omega0".to_string(),
            TwoForm::Kaehler { name, .. } => name.clone(),
        }
    }

    /// Antisymmetric matrix of the form at `point`.
    pub fn at(&self, point: &DVector<f64>) -> DMatrix<f64> {
        match self {
            TwoForm::Standard { real_dim } => standard_symplectic_matrix(*real_dim),
            TwoForm::Kaehler {
                real_dim,
                sign,
                potential,
                ..
            } => {
                let d = *real_dim;
                let hess = real_hessian(potential.as_ref(), point, HESSIAN_STEP);
                let n = d / 2;
                let mut omega = DMatrix::zeros(d, d);
                for j in 0..n {
                    for k in 0..n {
                        // complex Hessian H_jk = d^2 phi / dz_j dzbar_k
                        let re = 0.25 * (hess[(2 * j, 2 * k)] + hess[(2 * j + 1, 2 * k + 1)]);
                        let im = 0.25 * (hess[(2 * j, 2 * k + 1)] - hess[(2 * j + 1, 2 * k)]);
                        // omega = (i/2) sum H_jk dz_j ∧ dzbar_k in real form
                        omega[(2 * j, 2 * k)] = -im;
                        omega[(2 * j + 1, 2 * k + 1)] = -im;
                        omega[(2 * j, 2 * k + 1)] = re;
                        omega[(2 * j + 1, 2 * k)] = -re;
                    }
                }
                // enforce exact antisymmetry against rounding
                let omega = (&omega - omega.transpose()) * 0.5;
                omega * *sign
            }
        }
    }
}

/// Full real Hessian by central differences with Richardson extrapolation.
fn real_hessian<F>(f: &F, x: &DVector<f64>, h: f64) -> DMatrix<f64>
where
    F: Fn(&DVector<f64>) -> f64 + ?Sized,
{
    let d = x.len();
    let stencil = |a: usize, b: usize, step: f64| {
        let mut pp = x.clone();
        let mut pm = x.clone();
        let mut mp = x.clone();
        let mut mm = x.clone();
        pp[a] += step;
        pp[b] += step;
        pm[a] += step;
        pm[b] -= step;
        mp[a] -= step;
        mp[b] += step;
        mm[a] -= step;
        mm[b] -= step;
        (f(&pp) - f(&pm) - f(&mp) + f(&mm)) / (4.0 * step * step)
    };
    let mut hess = DMatrix::zeros(d, d);
    for a in 0..d {
        for b in a..d {
            let coarse = stencil(a, b, h);
            let fine = stencil(a, b, h / 2.0);
            let value = (4.0 * fine - coarse) / 3.0;
            hess[(a, b)] = value;
            hess[(b, a)] = value;
        }
    }
    hess
}

/// Jordan generic norm per family; positive on the domain and vanishing on
/// its Shilov boundary.
pub fn generic_norm(v: &JtsElement) -> f64 {
    match v.spec().family() {
        Family::TypeI { p, .. } => {
            let z = v.to_matrix();
            let m = DMatrix::<C64>::identity(p, p) - &z * z.adjoint();
            m.determinant().re
        }
        Family::TypeII { n } => {
            let z = v.to_matrix();
            let m = DMatrix::<C64>::identity(n, n) - &z * z.adjoint();
            m.determinant().re.max(0.0).sqrt()
        }
        Family::TypeIII { n } => {
            let z = v.to_matrix();
            let m = DMatrix::<C64>::identity(n, n) - &z * z.map(|w| w.conj());
            m.determinant().re
        }
        Family::TypeIV { .. } => {
            let u = v.natural_spin_coords();
            let s: f64 = u.iter().map(|w| w.norm_sqr()).sum();
            let q: C64 = u.iter().map(|w| w * w).sum();
            1.0 - 2.0 * s + q.norm_sqr()
        }
    }
}

/// Kaehler potential of the Fubini-Study form on the affine chart of the
/// compact dual: the generic-norm analogue N(v, -conj(v)).
pub fn fs_potential(v: &JtsElement) -> f64 {
    match v.spec().family() {
        Family::TypeI { p, .. } => {
            let z = v.to_matrix();
            let m = DMatrix::<C64>::identity(p, p) + &z * z.adjoint();
            m.determinant().re.ln()
        }
        Family::TypeII { n } => {
            let z = v.to_matrix();
            let m = DMatrix::<C64>::identity(n, n) + &z * z.adjoint();
            0.5 * m.determinant().re.ln()
        }
        Family::TypeIII { n } => {
            let z = v.to_matrix();
            let m = DMatrix::<C64>::identity(n, n) + &z * z.map(|w| w.conj());
            m.determinant().re.ln()
        }
        Family::TypeIV { .. } => {
            let u = v.natural_spin_coords();
            let s: f64 = u.iter().map(|w| w.norm_sqr()).sum();
            let q: C64 = u.iter().map(|w| w * w).sum();
            (1.0 + 2.0 * s + q.norm_sqr()).ln()
        }
    }
}

/// Hyperbolic Kaehler potential -log N(v); only defined inside the domain.
pub fn hyp_potential(v: &JtsElement) -> Result<f64> {
    if !in_domain(v) {
        return Err(Error::OutOfDomain);
    }
    Ok(-generic_norm(v).ln())
}

/// Identity inclusion of the Euclidean unit ball into the domain; valid
/// because the spectral norm is dominated by the trace-form norm.
pub fn ball_inclusion(spec: JtsSpec) -> SmoothMap {
    let d = 2 * spec.dim();
    SmoothMap::linear(
        &format!("ball_inclusion({spec:?})"),
        DMatrix::identity(d, d),
        SourceRegion::EuclideanBall { radius: 1.0 },
    )
}

/// Trace-unitary matrix W with W p = e_1, built by completing p to an
/// orthonormal basis with deterministic pivots.
pub fn cylinder_unitary(spec: JtsSpec, p: &JtsElement) -> Result<DMatrix<C64>> {
    if p.spec() != spec {
        return Err(Error::SpecMismatch);
    }
    let triple = triple_product(p, p, p)?;
    let trip_residual = (&triple - &p.scaled(C64::new(2.0, 0.0))).norm();
    let form = trace_form(p, p)?;
    let norm_residual = (form.re - 1.0).abs() + form.im.abs();
    if trip_residual > 1e-8 || norm_residual > 1e-8 {
        return Err(Error::NotPrimitiveTripotent(format!(
            "tripotency residual {trip_residual:.2e}, norm residual {norm_residual:.2e}"
        )));
    }
    let d = spec.dim();
    let mut columns: Vec<DVector<C64>> = vec![p.coords().clone()];
    for k in 0..d {
        if columns.len() == d {
            break;
        }
        let mut cand = DVector::<C64>::zeros(d);
        cand[k] = C64::new(1.0, 0.0);
        for c in &columns {
            let overlap = c.dotc(&cand);
            cand -= c * overlap;
        }
        if cand.norm() > 1e-6 {
            columns.push(&cand / C64::new(cand.norm(), 0.0));
        }
    }
    debug_assert_eq!(columns.len(), d);
    let u = DMatrix::from_columns(&columns);
    Ok(u.adjoint())
}

/// Linear symplectic map from the domain into the unit cylinder
/// {|z_1| < 1}: the unitary rotation sending the primitive tripotent p to
/// the first coordinate axis.
pub fn cylinder_map(spec: JtsSpec, p: &JtsElement) -> Result<SmoothMap> {
    let w = cylinder_unitary(spec, p)?;
    Ok(SmoothMap::linear(
        &format!("cylinder_map({spec:?})"),
        complex_matrix_to_real(&w),
        SourceRegion::Domain(spec),
    ))
}

/// Duality map onto the compact dual chart: spectral functional calculus
/// with lambda -> lambda / sqrt(1 - lambda^2).
pub fn symplectic_duality(v: &JtsElement) -> Result<JtsElement> {
    if !in_domain(v) {
        return Err(Error::OutOfDomain);
    }
    let d = spectral_decompose(v, DEFAULT_TOL)?;
    let mut out = JtsElement::zero(v.spec());
    for (l, c) in d.eigenvalues.iter().zip(&d.tripotents) {
        let f = l / (1.0 - l * l).sqrt();
        out = &out + &c.scaled(C64::new(f, 0.0));
    }
    Ok(out)
}

/// The duality map as a `SmoothMap` with central-difference Jacobian.
pub fn duality_map(spec: JtsSpec) -> SmoothMap {
    let d = 2 * spec.dim();
    SmoothMap {
        source_dim: d,
        target_dim: d,
        region: SourceRegion::Domain(spec),
        name: format!("symplectic_duality({spec:?})"),
        eval: Box::new(move |x| {
            let v = JtsElement::from_real_coords(spec, x).expect("dimension");
            let w = symplectic_duality(&v).expect("point inside the domain");
            complex_to_real(w.coords())
        }),
        jacobian_mode: JacobianMode::CentralDifference { h: 1e-5 },
    }
}

/// Max over `points` of the entrywise deviation
/// |J^T omega_target(phi(x)) J - omega_source(x)|.
pub fn pullback_residual(
    map: &SmoothMap,
    source_form: &TwoForm,
    target_form: &TwoForm,
    points: &[DVector<f64>],
) -> Result<f64> {
    let mut worst = 0.0f64;
    for x in points {
        if !map.region.contains(x) {
            return Err(Error::OutsideSourceRegion);
        }
        let jac = map.jacobian(x)?;
        let y = map.evaluate(x)?;
        let pulled = jac.transpose() * target_form.at(&y) * &jac;
        let deviation = pulled - source_form.at(x);
        worst = worst.max(max_abs(&deviation));
    }
    Ok(worst)
}

fn mix_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic rejection sampling of a domain point: coordinates drawn
/// uniformly from a box of edge 1.0 per real coordinate, accepted when the
/// spectral norm is below one.  The stream is keyed by (seed, index) only,
/// so the result does not depend on evaluation order.
pub fn sample_domain_point(spec: JtsSpec, seed: u64, index: u64) -> JtsElement {
    let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, index));
    let mut half_width = 0.5f64;
    let mut attempts = 0usize;
    loop {
        let coords = DVector::from_fn(spec.dim(), |_, _| {
            let re = (rng.gen::<f64>() - 0.5) * 2.0 * half_width;
            let im = (rng.gen::<f64>() - 0.5) * 2.0 * half_width;
            C64::new(re, im)
        });
        let v = JtsElement::from_coords(spec, coords).expect("dimension");
        if spectral_norm(&v) < 1.0 {
            return v;
        }
        attempts += 1;
        if attempts % 10_000 == 0 {
            half_width *= 0.5;
        }
    }
}

/// Deterministic box sample without the domain rejection: coordinates
/// uniform with the given half-width per real coordinate.
pub fn sample_box_element(spec: JtsSpec, seed: u64, index: u64, half_width: f64) -> JtsElement {
    let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed ^ 0x5151_5151, index));
    let coords = DVector::from_fn(spec.dim(), |_, _| {
        let re = (rng.gen::<f64>() - 0.5) * 2.0 * half_width;
        let im = (rng.gen::<f64>() - 0.5) * 2.0 * half_width;
        C64::new(re, im)
    });
    JtsElement::from_coords(spec, coords).expect("dimension")
}

/// One numerical certification: a pullback residual over sampled points
/// compared against a tolerance.
#[derive(Debug, Clone)]
pub struct CertificationRecord {
    pub map: String,
    pub source_form: String,
    pub target_form: String,
    pub num_points: usize,
    pub seed: u64,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CertificationRecord {
    pub fn to_json(&self) -> crate::json::J {
        use crate::json::J;
        J::obj(vec![
            ("map", J::str(self.map.clone())),
            ("source_form", J::str(self.source_form.clone())),
            ("target_form", J::str(self.target_form.clone())),
            ("num_points", J::Int(self.num_points as i64)),
            ("seed", J::Int(self.seed as i64)),
            ("max_residual", J::Float(self.max_residual)),
            ("tolerance", J::Float(self.tolerance)),
            ("pass", J::Bool(self.pass)),
        ])
    }
}

/// Sample points of the domain rescaled to spectral norm below `max_norm`.
pub fn sample_points(spec: JtsSpec, seed: u64, count: usize, max_norm: f64) -> Vec<DVector<f64>> {
    (0..count)
        .map(|i| {
            let v = sample_domain_point(spec, seed, i as u64);
            let scaled = v.scaled(C64::new(max_norm, 0.0));
            complex_to_real(scaled.coords())
        })
        .collect()
}

/// Certify that the duality map pulls the Fubini-Study form back to the
/// flat form.
pub fn certify_duality_fs(
    spec: JtsSpec,
    num_points: usize,
    seed: u64,
    tolerance: f64,
) -> Result<CertificationRecord> {
    let d = 2 * spec.dim();
    let map = duality_map(spec);
    let source = TwoForm::standard(d);
    let target = TwoForm::kaehler(d, "kaehler(fs)", 1.0, move |x| {
        let v = JtsElement::from_real_coords(spec, x).expect("dimension");
        fs_potential(&v)
    });
    let points = sample_points(spec, seed, num_points, 0.9);
    let max_residual = pullback_residual(&map, &source, &target, &points)?;
    Ok(CertificationRecord {
        map: map.name.clone(),
        source_form: source.name(),
        target_form: target.name(),
        num_points,
        seed,
        max_residual,
        tolerance,
        pass: max_residual < tolerance,
    })
}

/// Certify that the duality map pulls the flat form on the chart back to
/// the hyperbolic form on the domain.
pub fn certify_duality_hyp(
    spec: JtsSpec,
    num_points: usize,
    seed: u64,
    tolerance: f64,
) -> Result<CertificationRecord> {
    let d = 2 * spec.dim();
    let map = duality_map(spec);
    let source = TwoForm::kaehler(d, "kaehler(hyp)", 1.0, move |x| {
        let v = JtsElement::from_real_coords(spec, x).expect("dimension");
        -generic_norm(&v).ln()
    });
    let target = TwoForm::standard(d);
    let points = sample_points(spec, seed, num_points, 0.9);
    let max_residual = pullback_residual(&map, &source, &target, &points)?;
    Ok(CertificationRecord {
        map: map.name.clone(),
        source_form: source.name(),
        target_form: target.name(),
        num_points,
        seed,
        max_residual,
        tolerance,
        pass: max_residual < tolerance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn disc() -> JtsSpec {
        JtsSpec::type_i(1, 1).unwrap()
    }

    fn scalar(spec: JtsSpec, re: f64, im: f64) -> JtsElement {
        let mut coords = DVector::zeros(spec.dim());
        coords[0] = C64::new(re, im);
        JtsElement::from_coords(spec, coords).unwrap()
    }

    #[test]
    fn generic_norm_examples() {
        let z = scalar(disc(), 0.0, 0.0);
        assert_abs_diff_eq!(generic_norm(&z), 1.0, epsilon = 1e-14);
        let z = scalar(disc(), 0.6, 0.0);
        assert_abs_diff_eq!(generic_norm(&z), 1.0 - 0.36, epsilon = 1e-14);

        let spec = JtsSpec::type_i(2, 2).unwrap();
        let mut coords = DVector::zeros(4);
        coords[0] = C64::new(0.7, 0.0);
        coords[3] = C64::new(0.4, 0.0);
        let v = JtsElement::from_coords(spec, coords).unwrap();
        assert_abs_diff_eq!(
            generic_norm(&v),
            (1.0 - 0.49) * (1.0 - 0.16),
            epsilon = 1e-14
        );
    }

    #[test]
    fn generic_norm_vanishes_at_tripotents() {
        for spec in [
            JtsSpec::type_i(2, 2).unwrap(),
            JtsSpec::type_ii(4).unwrap(),
            JtsSpec::type_iii(2).unwrap(),
            JtsSpec::type_iv(3).unwrap(),
        ] {
            let c = crate::jts::primitive_tripotent(spec);
            for t in [0.9f64, 0.99, 0.999] {
                assert!(generic_norm(&c.scaled(C64::new(t, 0.0))) > 0.0);
            }
            assert_abs_diff_eq!(generic_norm(&c), 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn potentials_vanish_at_origin() {
        for spec in [JtsSpec::type_i(1, 2).unwrap(), JtsSpec::type_iv(3).unwrap()] {
            let zero = JtsElement::zero(spec);
            assert_eq!(fs_potential(&zero), 0.0);
            assert_eq!(hyp_potential(&zero).unwrap(), 0.0);
        }
        assert!(hyp_potential(&scalar(disc(), 1.5, 0.0)).is_err());
    }

    #[test]
    fn hyperbolic_form_coefficient_on_the_disc() {
        // (i/2) ddbar of -log(1-|z|^2) at z = 0.5 is (1-0.25)^{-2} dx∧dy
        let spec = disc();
        let form = TwoForm::kaehler(2, "hyp", 1.0, move |x| {
            let v = JtsElement::from_real_coords(spec, x).unwrap();
            -generic_norm(&v).ln()
        });
        let at = form.at(&DVector::from_vec(vec![0.5, 0.0]));
        let expect = (1.0f64 - 0.25).powi(-2);
        assert_abs_diff_eq!(at[(0, 1)], expect, epsilon = 1e-7);
        assert_abs_diff_eq!(at[(1, 0)], -expect, epsilon = 1e-7);
    }

    #[test]
    fn standard_form_matrix() {
        let form = TwoForm::standard(4);
        let m = form.at(&DVector::zeros(4));
        assert_eq!(m[(0, 1)], 1.0);
        assert_eq!(m[(2, 3)], 1.0);
        assert_eq!(m[(1, 0)], -1.0);
    }

    #[test]
    fn identity_pullback_residual_is_zero() {
        let spec = JtsSpec::type_i(1, 2).unwrap();
        let map = ball_inclusion(spec);
        let form = TwoForm::standard(4);
        let points = sample_points(spec, 3, 10, 0.6);
        let r = pullback_residual(&map, &form, &form, &points).unwrap();
        assert_eq!(r, 0.0);
    }

    #[test]
    fn scaling_map_residual_is_three() {
        let d = 4;
        let map = SmoothMap::linear("doubling", DMatrix::identity(d, d) * 2.0, SourceRegion::All);
        let form = TwoForm::standard(d);
        let points = vec![DVector::zeros(d), DVector::from_element(d, 0.3)];
        let r = pullback_residual(&map, &form, &form, &points).unwrap();
        assert_abs_diff_eq!(r, 3.0, epsilon = 1e-14);
    }

    #[test]
    fn ball_is_contained_in_domain() {
        for spec in [
            JtsSpec::type_i(2, 2).unwrap(),
            JtsSpec::type_ii(4).unwrap(),
            JtsSpec::type_iv(4).unwrap(),
        ] {
            for i in 0..200 {
                let v = sample_domain_point(spec, 11, i);
                // rescale into the Euclidean unit ball
                let w = v.scaled(C64::new(0.999 / (1e-12 + v.norm()), 0.0));
                assert!(in_domain(&w));
                assert!(spectral_norm(&w) <= w.norm() + 1e-12);
            }
        }
    }

    #[test]
    fn cylinder_unitary_properties() {
        let spec = JtsSpec::type_i(2, 2).unwrap();
        // E12 is the frame slot with index 1; the rotation must move it to
        // the first coordinate
        let p = JtsElement::basis(spec, 1);
        let w = cylinder_unitary(spec, &p).unwrap();
        let d = spec.dim();
        let prod = &w * w.adjoint();
        let dev = (&prod - DMatrix::<C64>::identity(d, d))
            .iter()
            .map(|z| z.norm())
            .fold(0.0f64, f64::max);
        assert!(dev < 1e-12);
        let image = &w * p.coords();
        assert_abs_diff_eq!(image[0].re, 1.0, epsilon = 1e-12);
        for k in 1..d {
            assert_abs_diff_eq!(image[k].norm(), 0.0, epsilon = 1e-12);
        }
        // identity permutation case
        let e11 = JtsElement::basis(spec, 0);
        let w0 = cylinder_unitary(spec, &e11).unwrap();
        let dev0 = (&w0 - DMatrix::<C64>::identity(d, d))
            .iter()
            .map(|z| z.norm())
            .fold(0.0f64, f64::max);
        assert!(dev0 < 1e-12);
    }

    #[test]
    fn cylinder_map_rejects_non_tripotents() {
        let spec = JtsSpec::type_i(2, 2).unwrap();
        let bad = scalar(spec, 0.4, 0.1);
        assert!(cylinder_map(spec, &bad).is_err());
    }

    #[test]
    fn cylinder_map_is_symplectic_and_contains_domain() {
        for spec in [
            JtsSpec::type_i(2, 2).unwrap(),
            JtsSpec::type_ii(4).unwrap(),
            JtsSpec::type_iii(2).unwrap(),
            JtsSpec::type_iv(3).unwrap(),
        ] {
            let p = crate::jts::primitive_tripotent(spec);
            let map = cylinder_map(spec, &p).unwrap();
            let d = 2 * spec.dim();
            let form = TwoForm::standard(d);
            let points = sample_points(spec, 5, 20, 0.97);
            let r = pullback_residual(&map, &form, &form, &points).unwrap();
            assert!(r < 1e-12, "{spec:?}: unitary residual {r}");
            for i in 0..500 {
                let v = sample_domain_point(spec, 21, i);
                let image = map.evaluate(&complex_to_real(v.coords())).unwrap();
                let first = (image[0] * image[0] + image[1] * image[1]).sqrt();
                assert!(first < 1.0, "{spec:?}: |(Wv)_1| = {first}");
            }
        }
    }

    #[test]
    fn duality_examples() {
        let z = scalar(disc(), 0.6, 0.0);
        let w = symplectic_duality(&z).unwrap();
        assert_abs_diff_eq!(w.coords()[0].re, 0.75, epsilon = 1e-12);

        let spec = JtsSpec::type_i(2, 2).unwrap();
        let mut coords = DVector::zeros(4);
        coords[0] = C64::new(0.6, 0.0);
        coords[3] = C64::new(0.8, 0.0);
        let v = JtsElement::from_coords(spec, coords).unwrap();
        let w = symplectic_duality(&v).unwrap();
        assert_abs_diff_eq!(w.coords()[0].re, 0.75, epsilon = 1e-10);
        assert_abs_diff_eq!(w.coords()[3].re, 0.8 / 0.6, epsilon = 1e-10);

        let zero = JtsElement::zero(spec);
        assert_eq!(symplectic_duality(&zero).unwrap().norm(), 0.0);
        assert!(symplectic_duality(&scalar(disc(), 1.5, 0.0)).is_err());
    }

    #[test]
    fn duality_fixes_rays() {
        let spec = JtsSpec::type_ii(4).unwrap();
        for i in 0..20 {
            let v = sample_domain_point(spec, 9, i).scaled(C64::new(0.9, 0.0));
            let w = symplectic_duality(&v).unwrap();
            let dv = spectral_decompose(&v, DEFAULT_TOL).unwrap();
            let mut expected = JtsElement::zero(spec);
            for (l, c) in dv.eigenvalues.iter().zip(&dv.tripotents) {
                let f = l / (1.0 - l * l).sqrt();
                assert!(f > 0.0);
                expected = &expected + &c.scaled(C64::new(f, 0.0));
            }
            assert_abs_diff_eq!((&w - &expected).norm(), 0.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn duality_pullback_certificates_on_small_type_i() {
        for spec in [disc(), JtsSpec::type_i(1, 2).unwrap()] {
            let fs = certify_duality_fs(spec, 25, 7, 1e-4).unwrap();
            assert!(fs.pass, "{spec:?} fs residual {}", fs.max_residual);
            let hyp = certify_duality_hyp(spec, 25, 7, 1e-4).unwrap();
            assert!(hyp.pass, "{spec:?} hyp residual {}", hyp.max_residual);
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let spec = JtsSpec::type_iii(3).unwrap();
        let a = sample_domain_point(spec, 42, 7);
        let b = sample_domain_point(spec, 42, 7);
        assert_eq!(a, b);
        let c = sample_domain_point(spec, 42, 8);
        assert!((&a - &c).norm() > 0.0);
        for i in 0..100 {
            assert!(in_domain(&sample_domain_point(spec, 1, i)));
        }
    }
}
