//! Named property suites behind the `verify` command.
//!
//! Each suite runs a list of checks with deterministic sampling keyed by
//! (seed, index) and reports the worst residual per check.  Reports are
//! identical for identical (suite, samples, seed, tol).

use crate::embeddings::{
    ball_inclusion, certify_duality_fs, certify_duality_hyp, cylinder_map, fs_potential,
    pullback_residual, sample_box_element, sample_domain_point, sample_points, TwoForm,
};
use crate::error::Error;
use crate::json::J;
use crate::jts::{
    canonical_frame, genus_of, jordan_residual, operator_matrix, primitive_tripotent, trace_form,
    triple_product, JtsElement, JtsSpec, OperatorKind,
};
use crate::linalg::{complex_to_real, max_abs, C64};
use crate::quantum::{
    find_point_class_pair, gw_capacity, lr_coefficient, quantum_product, GrassSpec, Partition,
    QhElement,
};
use crate::spectral::{
    bergman_positive, in_domain, spectral_decompose, spectral_norm, DEFAULT_TOL,
};
use crate::Result;
use nalgebra::{DMatrix, DVector};
use num_traits::One;

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub samples: usize,
    pub max_residual: Option<f64>,
    pub tolerance: Option<f64>,
    pub required: bool,
    pub pass: bool,
    pub detail: String,
    /// full certification record when the check wraps one
    pub record: Option<J>,
}

impl Check {
    fn residual(name: &str, samples: usize, residual: f64, tol: f64) -> Check {
        Check {
            name: name.to_string(),
            samples,
            max_residual: Some(residual),
            tolerance: Some(tol),
            required: true,
            pass: residual < tol,
            detail: String::new(),
            record: None,
        }
    }

    fn exact(name: &str, samples: usize, pass: bool, detail: &str) -> Check {
        Check {
            name: name.to_string(),
            samples,
            max_residual: None,
            tolerance: None,
            required: true,
            pass,
            detail: detail.to_string(),
            record: None,
        }
    }

    fn with_record(mut self, record: J) -> Check {
        self.record = Some(record);
        self
    }

    fn reported(mut self) -> Check {
        self.required = false;
        self
    }

    pub fn to_json(&self) -> J {
        J::obj(vec![
            ("name", J::str(self.name.clone())),
            ("samples", J::Int(self.samples as i64)),
            (
                "max_residual",
                self.max_residual.map(J::Float).unwrap_or(J::Null),
            ),
            ("tolerance", self.tolerance.map(J::Float).unwrap_or(J::Null)),
            ("required", J::Bool(self.required)),
            ("pass", J::Bool(self.pass)),
            ("detail", J::str(self.detail.clone())),
            ("record", self.record.clone().unwrap_or(J::Null)),
        ])
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    pub checks: Vec<Check>,
    pub pass: bool,
}

impl SuiteReport {
    fn new(suite: &str, samples: usize, seed: u64, tol: f64, checks: Vec<Check>) -> SuiteReport {
        let pass = checks.iter().all(|c| c.pass || !c.required);
        SuiteReport {
            suite: suite.to_string(),
            samples,
            seed,
            tol,
            checks,
            pass,
        }
    }

    pub fn to_json(&self) -> J {
        J::obj(vec![
            ("suite", J::str(self.suite.clone())),
            ("samples", J::Int(self.samples as i64)),
            ("seed", J::Int(self.seed as i64)),
            ("tol", J::Float(self.tol)),
            (
                "checks",
                J::Arr(self.checks.iter().map(Check::to_json).collect()),
            ),
            ("pass", J::Bool(self.pass)),
        ])
    }
}

fn families() -> Vec<JtsSpec> {
    vec![
        JtsSpec::type_i(2, 2).expect("valid"),
        JtsSpec::type_i(2, 3).expect("valid"),
        JtsSpec::type_ii(4).expect("valid"),
        JtsSpec::type_iii(3).expect("valid"),
        JtsSpec::type_iv(4).expect("valid"),
    ]
}

/// Jordan-algebra checks: identity residual, exact symmetry, conjugate
/// linearity, trace form, strong orthogonality, operator consistency and
/// the genus closed forms.
pub fn jordan_suite(samples: usize, seed: u64, tol: f64) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    let specs = families();

    let mut worst = 0.0f64;
    for spec in &specs {
        for i in 0..samples as u64 {
            let e = |j: u64| sample_box_element(*spec, seed.wrapping_add(j), i, 0.5);
            let r = jordan_residual(&e(1), &e(2), &e(3), &e(4), &e(5))?;
            worst = worst.max(r);
        }
    }
    checks.push(Check::residual(
        "jordan_identity",
        samples * specs.len(),
        worst,
        tol,
    ));

    let mut symmetric = true;
    for spec in &specs {
        for i in 0..samples.min(100) as u64 {
            let x = sample_box_element(*spec, seed ^ 11, i, 0.5);
            let y = sample_box_element(*spec, seed ^ 12, i, 0.5);
            let z = sample_box_element(*spec, seed ^ 13, i, 0.5);
            if triple_product(&x, &y, &z)? != triple_product(&z, &y, &x)? {
                symmetric = false;
            }
        }
    }
    checks.push(Check::exact(
        "triple_symmetry_exact",
        samples.min(100) * specs.len(),
        symmetric,
        "identical floating output under swapping the outer arguments",
    ));

    let mut worst = 0.0f64;
    for spec in &specs {
        for i in 0..samples.min(200) as u64 {
            let x = sample_box_element(*spec, seed ^ 21, i, 0.5);
            let y = sample_box_element(*spec, seed ^ 22, i, 0.5);
            let z = sample_box_element(*spec, seed ^ 23, i, 0.5);
            let lhs = triple_product(&x, &y.scaled(C64::new(0.0, 1.0)), &z)?;
            let rhs = triple_product(&x, &y, &z)?.scaled(C64::new(0.0, -1.0));
            worst = worst.max((&lhs - &rhs).norm());
        }
    }
    checks.push(Check::residual(
        "conjugate_linearity",
        samples.min(200) * specs.len(),
        worst,
        1e-12,
    ));

    let mut worst = 0.0f64;
    let mut positive = true;
    for spec in &specs {
        for i in 0..samples.min(200) as u64 {
            let u = sample_box_element(*spec, seed ^ 31, i, 0.5);
            let v = sample_box_element(*spec, seed ^ 32, i, 0.5);
            let uv = trace_form(&u, &v)?;
            let vu = trace_form(&v, &u)?;
            worst = worst.max((uv - vu.conj()).norm());
            let vv = trace_form(&v, &v)?;
            if v.norm() > 1e-8 && vv.re <= 0.0 {
                positive = false;
            }
            worst = worst.max((vv.re - v.norm() * v.norm()).abs());
        }
    }
    checks.push(Check::residual(
        "trace_form_hermitian",
        samples.min(200) * specs.len(),
        worst,
        1e-12,
    ));
    checks.push(Check::exact(
        "trace_form_positive",
        samples.min(200) * specs.len(),
        positive,
        "(v|v) > 0 for nonzero v",
    ));

    let mut exact_zero = true;
    let mut spin_worst = 0.0f64;
    for spec in &specs {
        let frame = canonical_frame(*spec);
        for (i, ci) in frame.iter().enumerate() {
            for cj in frame.iter().skip(i + 1) {
                let op = operator_matrix(OperatorKind::T, ci, cj)?;
                let dev = max_abs(op.matrix());
                match spec.family() {
                    crate::jts::Family::TypeIV { .. } => spin_worst = spin_worst.max(dev),
                    _ => {
                        if dev != 0.0 {
                            exact_zero = false;
                        }
                    }
                }
            }
        }
    }
    checks.push(Check::exact(
        "strong_orthogonality_exact",
        specs.len(),
        exact_zero && spin_worst < 1e-15,
        "matrix-unit frames annihilate exactly; the spin frame to 1e-15",
    ));

    let mut worst = 0.0f64;
    for spec in &specs {
        for i in 0..samples.min(50) as u64 {
            let x = sample_box_element(*spec, seed ^ 41, i, 0.5);
            let y = sample_box_element(*spec, seed ^ 42, i, 0.5);
            let b = operator_matrix(OperatorKind::B, &x, &y)?;
            let t = operator_matrix(OperatorKind::T, &x, &y)?;
            let qx = operator_matrix(OperatorKind::Q, &x, &y)?;
            let qy = operator_matrix(OperatorKind::Q, &y, &x)?;
            let d = 2 * spec.dim();
            let rhs = DMatrix::<f64>::identity(d, d) - t.matrix() + qx.matrix() * qy.matrix();
            worst = worst.max(max_abs(&(b.matrix() - rhs)));
        }
    }
    checks.push(Check::residual(
        "bergman_operator_consistency",
        samples.min(50) * specs.len(),
        worst,
        1e-12,
    ));

    let mut worst = 0.0f64;
    for spec in &specs {
        let g = genus_of(spec.family())?;
        let closed = *spec.genus().numer() as f64 / *spec.genus().denom() as f64;
        worst = worst.max((g - closed).abs());
    }
    checks.push(Check::residual(
        "genus_closed_forms",
        specs.len(),
        worst,
        1e-12,
    ));

    Ok(SuiteReport::new("jordan", samples, seed, tol, checks))
}

/// Spectral checks: decomposition invariants, the Gram oracle, membership
/// equivalence, stability, norm inequalities and homogeneity.
pub fn spectral_suite(samples: usize, seed: u64, tol: f64) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    let specs = families();

    let mut worst = 0.0f64;
    let mut rank_ok = true;
    for spec in &specs {
        for i in 0..samples as u64 {
            let v = sample_box_element(*spec, seed ^ 51, i, 0.5);
            let d = spectral_decompose(&v, DEFAULT_TOL)?;
            worst = worst.max(d.validation_residual(&v));
            rank_ok &= d.rank() <= spec.rank();
        }
    }
    checks.push(Check::residual(
        "decomposition_invariants",
        samples * specs.len(),
        worst,
        tol,
    ));
    checks.push(Check::exact(
        "rank_bound",
        samples * specs.len(),
        rank_ok,
        "decomposition rank never exceeds the family rank",
    ));

    let mut worst = 0.0f64;
    for (j, spec) in [
        JtsSpec::type_i(2, 2).expect("valid"),
        JtsSpec::type_i(2, 3).expect("valid"),
    ]
    .iter()
    .enumerate()
    {
        for i in 0..samples.min(100) as u64 {
            let v = sample_box_element(*spec, seed ^ (61 + j as u64), i, 0.5);
            let d = spectral_decompose(&v, DEFAULT_TOL)?;
            let m = v.to_matrix();
            let gram = m.adjoint() * &m;
            let gram = (&gram + gram.adjoint()) * C64::new(0.5, 0.0);
            let mut oracle: Vec<f64> = nalgebra::SymmetricEigen::new(gram)
                .eigenvalues
                .iter()
                .map(|l| l.max(0.0).sqrt())
                .collect();
            oracle.sort_by(|a, b| b.partial_cmp(a).unwrap());
            for (got, want) in d.eigenvalues.iter().zip(oracle.iter()) {
                worst = worst.max((got - want).abs());
            }
        }
    }
    checks.push(Check::residual(
        "singular_value_oracle",
        2 * samples.min(100),
        worst,
        tol,
    ));

    let mut agree = true;
    let mut tested = 0usize;
    for spec in &specs {
        for i in 0..samples as u64 {
            let v = sample_box_element(*spec, seed ^ 71, i, 0.5).scaled(C64::new(2.2, 0.0));
            let norm = spectral_norm(&v);
            if (0.99..=1.01).contains(&norm) {
                continue;
            }
            tested += 1;
            if in_domain(&v) != bergman_positive(&v) {
                agree = false;
            }
        }
    }
    checks.push(Check::exact(
        "membership_equivalence",
        tested,
        agree,
        "spectral and Bergman membership agree off the boundary band",
    ));

    let mut worst = 0.0f64;
    for spec in &specs {
        for i in 0..samples.min(50) as u64 {
            let v = sample_box_element(*spec, seed ^ 81, i, 0.5);
            let d1 = spectral_decompose(&v, DEFAULT_TOL)?;
            let r = d1.reconstruct(*spec);
            let d2 = spectral_decompose(&r, DEFAULT_TOL)?;
            if d1.rank() != d2.rank() {
                worst = worst.max(1.0);
            }
            for (a, b) in d1.eigenvalues.iter().zip(&d2.eigenvalues) {
                worst = worst.max((a - b).abs());
            }
        }
    }
    checks.push(Check::residual(
        "uniqueness_surrogate",
        samples.min(50) * specs.len(),
        worst,
        tol,
    ));

    let mut ok = true;
    for spec in &specs {
        for i in 0..samples as u64 {
            let v = sample_box_element(*spec, seed ^ 91, i, 0.5);
            if spectral_norm(&v) > v.norm() + 1e-10 {
                ok = false;
            }
        }
    }
    checks.push(Check::exact(
        "spectral_below_euclidean",
        samples * specs.len(),
        ok,
        "spectral norm dominated by the trace-form norm",
    ));

    let mut worst = 0.0f64;
    for spec in &specs {
        for i in 0..samples.min(50) as u64 {
            let v = sample_box_element(*spec, seed ^ 101, i, 0.5);
            for t in [-2.0f64, 0.5, 3.0] {
                let tv = v.scaled(C64::new(t, 0.0));
                worst = worst.max((spectral_norm(&tv) - t.abs() * spectral_norm(&v)).abs());
            }
        }
    }
    checks.push(Check::residual(
        "norm_homogeneity",
        samples.min(50) * specs.len() * 3,
        worst,
        1e-12,
    ));

    Ok(SuiteReport::new("spectral", samples, seed, tol, checks))
}

/// Embedding checks: the duality certificates, unitary cylinder rotation,
/// cylinder containment, ball inclusion and the chart area of the line.
pub fn embeddings_suite(samples: usize, seed: u64, tol: f64) -> Result<SuiteReport> {
    let mut checks = Vec::new();

    let required: Vec<JtsSpec> = vec![
        JtsSpec::type_i(1, 1).expect("valid"),
        JtsSpec::type_i(1, 2).expect("valid"),
        JtsSpec::type_i(2, 2).expect("valid"),
    ];
    for spec in &required {
        let fs = certify_duality_fs(*spec, samples, seed, tol)?;
        checks.push(
            Check::residual(
                &format!(
                    "duality_fs_{}",
                    crate::capacities::SpaceExpr::CartanDomain(*spec)
                ),
                fs.num_points,
                fs.max_residual,
                fs.tolerance,
            )
            .with_record(fs.to_json()),
        );
        let hyp = certify_duality_hyp(*spec, samples, seed, tol)?;
        checks.push(
            Check::residual(
                &format!(
                    "duality_hyp_{}",
                    crate::capacities::SpaceExpr::CartanDomain(*spec)
                ),
                hyp.num_points,
                hyp.max_residual,
                hyp.tolerance,
            )
            .with_record(hyp.to_json()),
        );
    }

    // best-effort reports for the other families
    let reported: Vec<JtsSpec> = vec![
        JtsSpec::type_ii(3).expect("valid"),
        JtsSpec::type_iii(2).expect("valid"),
        JtsSpec::type_iv(3).expect("valid"),
    ];
    for spec in &reported {
        let pts = samples.min(25);
        let fs = certify_duality_fs(*spec, pts, seed, tol)?;
        checks.push(
            Check::residual(
                &format!(
                    "duality_fs_{}",
                    crate::capacities::SpaceExpr::CartanDomain(*spec)
                ),
                fs.num_points,
                fs.max_residual,
                fs.tolerance,
            )
            .with_record(fs.to_json())
            .reported(),
        );
        let hyp = certify_duality_hyp(*spec, pts, seed, tol)?;
        checks.push(
            Check::residual(
                &format!(
                    "duality_hyp_{}",
                    crate::capacities::SpaceExpr::CartanDomain(*spec)
                ),
                hyp.num_points,
                hyp.max_residual,
                hyp.tolerance,
            )
            .with_record(hyp.to_json())
            .reported(),
        );
    }

    let mut unitary_worst = 0.0f64;
    let mut contained = true;
    let mut containment_samples = 0usize;
    for spec in families() {
        let p = primitive_tripotent(spec);
        let map = cylinder_map(spec, &p)?;
        let d = 2 * spec.dim();
        let form = TwoForm::standard(d);
        let pts = sample_points(spec, seed ^ 7, samples.min(50), 0.97);
        unitary_worst = unitary_worst.max(pullback_residual(&map, &form, &form, &pts)?);
        for i in 0..samples as u64 {
            let v = sample_domain_point(spec, seed ^ 8, i);
            let image = map.evaluate(&complex_to_real(v.coords()))?;
            let first = (image[0] * image[0] + image[1] * image[1]).sqrt();
            containment_samples += 1;
            if first >= 1.0 {
                contained = false;
            }
        }
    }
    checks.push(Check::residual(
        "cylinder_unitary_pullback",
        families().len() * samples.min(50),
        unitary_worst,
        1e-12,
    ));
    checks.push(Check::exact(
        "cylinder_containment",
        containment_samples,
        contained,
        "|(Wv)_1| < 1 for every sampled domain point",
    ));

    let mut ball_ok = true;
    for spec in families() {
        let map = ball_inclusion(spec);
        for i in 0..samples as u64 {
            let v = sample_box_element(spec, seed ^ 9, i, 0.5);
            let w = v.scaled(C64::new(0.999 / (1e-12 + v.norm()), 0.0));
            if !in_domain(&w) {
                ball_ok = false;
            }
            let x = complex_to_real(w.coords());
            if map.evaluate(&x).is_err() {
                ball_ok = false;
            }
        }
    }
    checks.push(Check::exact(
        "ball_inclusion",
        families().len() * samples,
        ball_ok,
        "trace-norm unit ball lies inside the domain",
    ));

    // area of the line chart under the Fubini-Study form
    let disc = JtsSpec::type_i(1, 1).expect("valid");
    let form = TwoForm::kaehler(2, "kaehler(fs)", 1.0, move |x| {
        let v = JtsElement::from_real_coords(disc, x).expect("dimension");
        fs_potential(&v)
    });
    let coeff = |r: f64| {
        let at = form.at(&DVector::from_vec(vec![r, 0.0]));
        at[(0, 1)]
    };
    let simpson = |a: f64, b: f64, n: usize| {
        let h = (b - a) / n as f64;
        let mut acc = 0.0;
        for i in 0..n {
            let x0 = a + i as f64 * h;
            let x1 = x0 + h;
            let xm = 0.5 * (x0 + x1);
            let f = |r: f64| 2.0 * std::f64::consts::PI * r * coeff(r);
            acc += (f(x0) + 4.0 * f(xm) + f(x1)) * h / 6.0;
        }
        acc
    };
    let area = simpson(0.0, 10.0, 400) + simpson(10.0, 100.0, 200);
    checks.push(Check::residual(
        "fs_chart_area_pi",
        600,
        (area - std::f64::consts::PI).abs(),
        1e-3,
    ));

    Ok(SuiteReport::new("embeddings", samples, seed, tol, checks))
}

/// Quantum checks: the G(2,4) identities, ring axioms, classical limit,
/// symmetry of invariants and the degree-one searches.
pub fn quantum_suite(samples: usize, seed: u64, _tol: f64) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    let g24 = GrassSpec::new(2, 4)?;

    let id1 = quantum_product(g24, &Partition::parse("2")?, &Partition::parse("1,1")?)?;
    let id2 = quantum_product(g24, &Partition::parse("1")?, &Partition::parse("1")?)?;
    let id3 = quantum_product(g24, &Partition::parse("1")?, &Partition::parse("2,2")?)?;
    let identities_ok = id1.coefficient(&Partition::empty(), 1) == 1
        && id1.terms().len() == 1
        && id2.coefficient(&Partition::parse("2")?, 0) == 1
        && id2.coefficient(&Partition::parse("1,1")?, 0) == 1
        && id2.terms().len() == 2
        && id3.coefficient(&Partition::parse("1")?, 1) == 1
        && id3.terms().len() == 1;
    checks.push(Check::exact(
        "g24_identities",
        3,
        identities_ok,
        "sigma_2*sigma_11 = q, sigma_1*sigma_1 = sigma_2 + sigma_11, sigma_1*sigma_22 = q sigma_1",
    ));

    let mut ring_ok = true;
    let mut triples = 0usize;
    for spec in [g24, GrassSpec::new(2, 5)?] {
        let parts = spec.box_partitions();
        for a in &parts {
            for b in &parts {
                if quantum_product(spec, a, b)? != quantum_product(spec, b, a)? {
                    ring_ok = false;
                }
                for c in &parts {
                    triples += 1;
                    let ea = QhElement::basis(spec, a.clone())?;
                    let eb = QhElement::basis(spec, b.clone())?;
                    let ec = QhElement::basis(spec, c.clone())?;
                    let left = ea.mul(&eb)?.mul(&ec)?;
                    let right = ea.mul(&eb.mul(&ec)?)?;
                    if left != right {
                        ring_ok = false;
                    }
                }
            }
        }
    }
    checks.push(Check::exact(
        "ring_axioms",
        triples,
        ring_ok,
        "commutativity and associativity, exact integers",
    ));

    let mut classical_ok = true;
    let mut homogeneous = true;
    for spec in [g24, GrassSpec::new(2, 5)?] {
        let parts = spec.box_partitions();
        for a in &parts {
            for b in &parts {
                let prod = quantum_product(spec, a, b)?;
                for ((nu, d), coeff) in prod.terms() {
                    if nu.size() + d * spec.n != a.size() + b.size() {
                        homogeneous = false;
                    }
                    if *d == 0 && *coeff != lr_coefficient(a, b, nu) as i64 {
                        classical_ok = false;
                    }
                }
            }
        }
    }
    checks.push(Check::exact(
        "classical_limit",
        2,
        classical_ok,
        "q^0 part equals the Littlewood-Richardson expansion",
    ));
    checks.push(Check::exact(
        "degree_homogeneity",
        2,
        homogeneous,
        "|lambda| + |mu| = |nu| + d n in every product term",
    ));

    let mut s3_ok = true;
    {
        let spec = g24;
        let parts = spec.box_partitions();
        for a in &parts {
            for b in &parts {
                for c in &parts {
                    let total = a.size() + b.size() + c.size();
                    if total < spec.complex_dim() || (total - spec.complex_dim()) % spec.n != 0 {
                        continue;
                    }
                    let d = (total - spec.complex_dim()) / spec.n;
                    let base = crate::quantum::gw_invariant(spec, a, b, c, d)?;
                    for (x, y, z) in [(b, c, a), (c, a, b), (a, c, b)] {
                        if base != crate::quantum::gw_invariant(spec, x, y, z, d)? {
                            s3_ok = false;
                        }
                    }
                }
            }
        }
    }
    checks.push(Check::exact(
        "s3_symmetry",
        1,
        s3_ok,
        "three-point invariants are symmetric in their classes",
    ));

    let mut search_ok = true;
    for n in 2..=6u32 {
        for k in 1..n as usize {
            let spec = GrassSpec::new(k, n)?;
            if find_point_class_pair(spec).is_err() {
                search_ok = false;
            }
            if gw_capacity(spec)? != num_rational::Ratio::one() {
                search_ok = false;
            }
        }
    }
    checks.push(Check::exact(
        "degree_one_nonvanishing",
        15,
        search_ok,
        "every grassmannian with n <= 6 has a degree-one pair and capacity pi",
    ));

    let _ = (samples, seed);
    Ok(SuiteReport::new("quantum", samples, seed, 0.0, checks))
}

/// Run a named suite with its default tolerance unless one is supplied.
pub fn run_suite(
    suite: &str,
    samples: usize,
    seed: u64,
    tol: Option<f64>,
) -> Result<Vec<SuiteReport>> {
    if samples == 0 {
        return Err(Error::InvalidSpec("samples must be positive".into()));
    }
    match suite {
        "jordan" => Ok(vec![jordan_suite(samples, seed, tol.unwrap_or(1e-10))?]),
        "spectral" => Ok(vec![spectral_suite(samples, seed, tol.unwrap_or(1e-8))?]),
        "embeddings" => Ok(vec![embeddings_suite(samples, seed, tol.unwrap_or(1e-4))?]),
        "quantum" => Ok(vec![quantum_suite(samples, seed, tol.unwrap_or(0.0))?]),
        "all" => Ok(vec![
            jordan_suite(samples, seed, tol.unwrap_or(1e-10))?,
            spectral_suite(samples, seed, tol.unwrap_or(1e-8))?,
            embeddings_suite(samples, seed, tol.unwrap_or(1e-4))?,
            quantum_suite(samples, seed, tol.unwrap_or(0.0))?,
        ]),
        other => Err(Error::InvalidSpec(format!("unknown suite {other:?}"))),
    }
}
