//! Exact quantum cohomology of complex Grassmannians.
//!
//! Schubert classes of G(k, n) are indexed by partitions inside the
//! k x (n-k) box.  The quantum product is computed classically in the Schur
//! basis restricted to at most k rows (Littlewood-Richardson coefficients by
//! direct tableau enumeration) and then reduced: every partition whose first
//! part exceeds n-k repeatedly sheds n-rim-hooks, each removal raising the
//! q-degree by one and contributing the sign (-1)^(k-h) where h is the
//! number of rows the hook occupies.  Shapes admitting no valid removal
//! contribute nothing.  All arithmetic is exact.

use crate::error::Error;
use crate::Result;
use num_rational::Ratio;
use std::collections::BTreeMap;
use std::fmt;

/// Weakly decreasing list of positive integers; the empty partition is
/// allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidSpec(format!(
                "not a partition: {parts:?} (parts must be weakly decreasing and positive)"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Parse a comma-separated part list; "" and "0" denote the empty
    /// partition.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "0" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidSpec(format!("bad partition part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.0.len()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn fits_box(&self, rows: usize, cols: u32) -> bool {
        self.rows() <= rows && self.part(0) <= cols
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.rows()).all(|i| self.part(i) >= other.part(i))
    }

    /// Complement inside the rows x cols box.
    pub fn complement(&self, rows: usize, cols: u32) -> Partition {
        let mut parts: Vec<u32> = (0..rows).map(|i| cols - self.part(rows - 1 - i)).collect();
        parts.retain(|&p| p > 0);
        Partition(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "0")
        } else {
            let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
            write!(f, "{}", s.join(","))
        }
    }
}

/// The Grassmannian G(k, n) of k-planes in C^n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GrassSpec {
    pub k: usize,
    pub n: u32,
}

impl GrassSpec {
    pub fn new(k: usize, n: u32) -> Result<Self> {
        if k == 0 || (k as u32) >= n || n > 64 {
            return Err(Error::InvalidSpec(format!(
                "grassmannian needs 0 < k < n (and n <= 64), got k={k}, n={n}"
            )));
        }
        Ok(GrassSpec { k, n })
    }

    pub fn cols(&self) -> u32 {
        self.n - self.k as u32
    }

    pub fn complex_dim(&self) -> u32 {
        self.k as u32 * self.cols()
    }

    /// First Chern number on the generator of H_2; equals the q-degree drop
    /// of a single rim-hook removal.
    pub fn c1(&self) -> u32 {
        self.n
    }

    /// The point class: the full box.
    pub fn point_class(&self) -> Partition {
        Partition(vec![self.cols(); self.k])
    }

    pub fn check_box(&self, p: &Partition) -> Result<()> {
        if !p.fits_box(self.k, self.cols()) {
            return Err(Error::PartitionOutsideBox(
                p.to_string(),
                self.k as i64,
                self.cols() as i64,
            ));
        }
        Ok(())
    }

    /// All partitions inside the box, in lexicographic order.
    pub fn box_partitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut stack = vec![Vec::<u32>::new()];
        while let Some(cur) = stack.pop() {
            out.push(Partition(cur.clone()));
            if cur.len() < self.k {
                let max = cur.last().copied().unwrap_or(self.cols());
                for next in 1..=max {
                    let mut ext = cur.clone();
                    ext.push(next);
                    stack.push(ext);
                }
            }
        }
        out.sort();
        out
    }

    /// Box partitions of a given size.
    pub fn box_partitions_of_size(&self, size: u32) -> Vec<Partition> {
        self.box_partitions()
            .into_iter()
            .filter(|p| p.size() == size)
            .collect()
    }
}

/// Littlewood-Richardson coefficient c^nu_{lambda mu}: the number of
/// semistandard skew tableaux of shape nu/lambda and content mu whose
/// reverse reading word is a lattice word.  Direct backtracking
/// enumeration.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() || !nu.contains(lambda) {
        return 0;
    }
    if mu.rows() == 0 {
        return 1; // nu == lambda
    }
    let rows = nu.rows();
    // cells in fill order: rows top to bottom, right to left within a row,
    // so the reverse reading word grows one letter at a time
    let mut cells = Vec::new();
    for i in 0..rows {
        let lo = lambda.part(i);
        let hi = nu.part(i);
        for j in (lo..hi).rev() {
            cells.push((i, j));
        }
    }
    let width = nu.part(0) as usize;
    let mut grid = vec![vec![0u32; width]; rows];
    let mut counts = vec![0u32; mu.rows() + 1];
    let mut total = 0u64;

    #[allow(clippy::too_many_arguments)]
    fn rec(
        cells: &[(usize, u32)],
        pos: usize,
        grid: &mut [Vec<u32>],
        counts: &mut [u32],
        mu: &Partition,
        lambda: &Partition,
        nu: &Partition,
        total: &mut u64,
    ) {
        if pos == cells.len() {
            *total += 1;
            return;
        }
        let (i, j) = cells[pos];
        let m = mu.rows() as u32;
        for e in 1..=m {
            if counts[e as usize] >= mu.part(e as usize - 1) {
                continue; // content budget
            }
            if e > 1 && counts[e as usize] >= counts[e as usize - 1] {
                continue; // lattice condition after placing e
            }
            // row weakly increasing left to right: the right neighbour was
            // placed first and must dominate
            if j + 1 < nu.part(i) {
                let right = grid[i][(j + 1) as usize];
                if e > right {
                    continue;
                }
            }
            // column strictly increasing: the cell above is either in
            // lambda (no constraint) or already filled
            if i > 0 && j >= lambda.part(i - 1) {
                let above = grid[i - 1][j as usize];
                if e <= above {
                    continue;
                }
            }
            grid[i][j as usize] = e;
            counts[e as usize] += 1;
            rec(cells, pos + 1, grid, counts, mu, lambda, nu, total);
            counts[e as usize] -= 1;
            grid[i][j as usize] = 0;
        }
    }

    rec(
        &cells,
        0,
        &mut grid,
        &mut counts,
        mu,
        lambda,
        nu,
        &mut total,
    );
    total
}

/// Expansion of s_lambda * s_mu in Schur functions with at most `max_rows`
/// rows.
fn schur_product_truncated(
    lambda: &Partition,
    mu: &Partition,
    max_rows: usize,
) -> Vec<(Partition, u64)> {
    let total = lambda.size() + mu.size();
    let cap = lambda.part(0) + mu.part(0);
    // enumerate candidate outer shapes nu of the right size containing
    // lambda
    let mut candidates = Vec::new();
    let mut stack: Vec<Vec<u32>> = vec![Vec::new()];
    while let Some(cur) = stack.pop() {
        let used: u32 = cur.iter().sum();
        if used == total && cur.len() >= lambda.rows() {
            candidates.push(Partition(cur.clone()));
        }
        if cur.len() < max_rows && used < total {
            let i = cur.len();
            let hi = cur.last().copied().unwrap_or(cap).min(total - used);
            let lo = lambda.part(i).max(1);
            for next in lo..=hi {
                let mut ext = cur.clone();
                ext.push(next);
                stack.push(ext);
            }
        }
    }
    let mut out = Vec::new();
    for nu in candidates {
        let c = lr_coefficient(lambda, mu, &nu);
        if c > 0 {
            out.push((nu, c));
        }
    }
    out
}

/// Reduce a partition with at most k rows by removing n-rim-hooks until it
/// fits the box.  Returns the reduced shape, the number of removals
/// (q-degree) and the accumulated sign, or None if the shape dies.
///
/// Beta-number formulation: beta_i = nu_i + (k - 1 - i) are distinct;
/// removing an n-hook subtracts n from one beta keeping them distinct, and
/// the hook height is one plus the number of betas passed over.
fn rim_hook_reduce(nu: &Partition, k: usize, n: u32) -> Option<(Partition, u32, i64)> {
    let n = n as i64;
    let mut beta: Vec<i64> = (0..k)
        .map(|i| nu.part(i) as i64 + (k - 1 - i) as i64)
        .collect();
    let mut d = 0u32;
    let mut sign = 1i64;
    loop {
        if beta.iter().all(|&b| b < n) {
            break;
        }
        // deterministic pick: the largest movable bead
        let mut pick: Option<usize> = None;
        for (i, &b) in beta.iter().enumerate() {
            if b >= n && !beta.contains(&(b - n)) {
                match pick {
                    Some(j) if beta[j] >= b => {}
                    _ => pick = Some(i),
                }
            }
        }
        let i = pick?;
        let old = beta[i];
        let new = old - n;
        let height = beta.iter().filter(|&&b| b > new && b < old).count() + 1;
        if (k - height) % 2 == 1 {
            sign = -sign;
        }
        beta[i] = new;
        d += 1;
    }
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let mut parts: Vec<u32> = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| (b - (k - 1 - i) as i64) as u32)
        .collect();
    parts.retain(|&p| p > 0);
    Some((Partition(parts), d, sign))
}

/// Element of the quantum cohomology ring: an exact integer formal sum over
/// (box partition, q-degree) pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QhElement {
    spec: GrassSpec,
    terms: BTreeMap<(Partition, u32), i64>,
}

impl QhElement {
    pub fn zero(spec: GrassSpec) -> Self {
        QhElement {
            spec,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(spec: GrassSpec, p: Partition) -> Result<Self> {
        spec.check_box(&p)?;
        let mut terms = BTreeMap::new();
        terms.insert((p, 0), 1);
        Ok(QhElement { spec, terms })
    }

    pub fn spec(&self) -> GrassSpec {
        self.spec
    }

    pub fn terms(&self) -> &BTreeMap<(Partition, u32), i64> {
        &self.terms
    }

    pub fn coefficient(&self, p: &Partition, d: u32) -> i64 {
        self.terms.get(&(p.clone(), d)).copied().unwrap_or(0)
    }

    fn add_term(&mut self, p: Partition, d: u32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let key = (p, d);
        let entry = self.terms.entry(key.clone()).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&key);
        }
    }

    /// Accumulate `coeff * q^dshift * other` into a copy of `self`; the
    /// building block for multiplying formal sums against cached basis
    /// products.
    pub fn accumulate(&mut self, other: &QhElement, coeff: i64, dshift: u32) {
        for ((p, d), c) in &other.terms {
            self.add_term(p.clone(), d + dshift, c * coeff);
        }
    }

    /// Linear extension of the quantum product to formal sums.
    pub fn mul(&self, other: &QhElement) -> Result<QhElement> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch);
        }
        let mut out = QhElement::zero(self.spec);
        for ((pa, da), ca) in &self.terms {
            for ((pb, db), cb) in &other.terms {
                let prod = quantum_product(self.spec, pa, pb)?;
                for ((pc, dc), cc) in prod.terms {
                    out.add_term(pc, da + db + dc, ca * cb * cc);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for QhElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((p, d), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}*q^{d}*s[{p}]")?;
        }
        Ok(())
    }
}

/// Quantum product of two Schubert classes.
pub fn quantum_product(spec: GrassSpec, lambda: &Partition, mu: &Partition) -> Result<QhElement> {
    spec.check_box(lambda)?;
    spec.check_box(mu)?;
    let mut out = QhElement::zero(spec);
    for (nu, c) in schur_product_truncated(lambda, mu, spec.k) {
        if nu.part(0) <= spec.cols() {
            out.add_term(nu, 0, c as i64);
        } else if let Some((reduced, d, sign)) = rim_hook_reduce(&nu, spec.k, spec.n) {
            out.add_term(reduced, d, sign * c as i64);
        }
    }
    // every term satisfies |lambda| + |mu| = |nu| + d n
    debug_assert!(out
        .terms
        .iter()
        .all(|((p, d), _)| p.size() + d * spec.n == lambda.size() + mu.size()));
    Ok(out)
}

/// Genus-zero three-point Gromov-Witten invariant
/// Psi_{dA,0,3}(s_lambda, s_mu, s_nu): the coefficient of the dual class of
/// nu in degree d of the quantum product.  Returns 0 when the degree
/// condition |lambda| + |mu| + |nu| = dim + d n fails.
pub fn gw_invariant(
    spec: GrassSpec,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    d: u32,
) -> Result<i64> {
    spec.check_box(lambda)?;
    spec.check_box(mu)?;
    spec.check_box(nu)?;
    if lambda.size() + mu.size() + nu.size() != spec.complex_dim() + d * spec.n {
        return Ok(0);
    }
    let dual = nu.complement(spec.k, spec.cols());
    Ok(quantum_product(spec, lambda, mu)?.coefficient(&dual, d))
}

/// Exhaustive search for classes alpha, beta with complex codimensions
/// summing to n such that Psi_{A,0,3}(alpha, beta, pt) does not vanish.
/// Returns the lexicographically first such pair.
pub fn find_point_class_pair(spec: GrassSpec) -> Result<(Partition, Partition)> {
    let pt = spec.point_class();
    for alpha in spec.box_partitions() {
        if alpha.size() > spec.n {
            continue;
        }
        let b = spec.n - alpha.size();
        for beta in spec.box_partitions_of_size(b) {
            if gw_invariant(spec, &alpha, &beta, &pt, 1)? != 0 {
                return Ok((alpha, beta));
            }
        }
    }
    Err(Error::SearchExhausted)
}

/// Smallest positive degree carrying a nonvanishing three-point invariant
/// with a point insertion; the Gromov-Witten capacity is pi times this
/// number under the normalization giving the generator area pi.
pub fn gw_capacity(spec: GrassSpec) -> Result<Ratio<i64>> {
    let pt = spec.point_class();
    let max_d = 2 * spec.complex_dim() / spec.n + 1;
    for d in 1..=max_d {
        let needed = d * spec.n; // |alpha| + |beta| with one point insertion
        for alpha in spec.box_partitions() {
            if alpha.size() > needed {
                continue;
            }
            for beta in spec.box_partitions_of_size(needed - alpha.size()) {
                if gw_invariant(spec, &alpha, &beta, &pt, d)? != 0 {
                    return Ok(Ratio::from_integer(d as i64));
                }
            }
        }
    }
    Err(Error::SearchExhausted)
}

/// Padding of an insertion slot on a product N_1 x N_2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorClass {
    /// the fundamental class of the first factor
    Full,
    /// the point class of the first factor
    Point,
}

#[derive(Debug, Clone)]
pub struct ProductInsertion {
    pub outer: FactorClass,
    pub inner: Partition,
}

/// Product-space invariant with [N_1]-padded insertions in class 0 + d A:
/// a single point-padded slot is allowed, and the invariant equals the
/// inner-space invariant on the second factor.
pub fn product_gw_lift(spec: GrassSpec, insertions: &[ProductInsertion], d: u32) -> Result<i64> {
    if insertions.len() < 3 {
        return Err(Error::MalformedInsertion(format!(
            "need at least 3 insertions, got {}",
            insertions.len()
        )));
    }
    let point_slots = insertions
        .iter()
        .filter(|i| i.outer == FactorClass::Point)
        .count();
    if point_slots != 1 {
        return Err(Error::MalformedInsertion(format!(
            "exactly one point-padded slot required, got {point_slots}"
        )));
    }
    if insertions.len() > 3 {
        return Err(Error::Unsupported(
            "only three-point inner invariants are computable".into(),
        ));
    }
    gw_invariant(
        spec,
        &insertions[0].inner,
        &insertions[1].inner,
        &insertions[2].inner,
        d,
    )
}

/// Interpretation knobs for the dimension-count necessary condition on
/// Psi_{A,0,m+2}(pt, pt, beta_1..beta_m) with A the sum of the factor
/// generators: degrees deg(beta_j) are real codimensions, dim(M) is the
/// complex dimension, and the condition reads
/// sum_j deg(beta_j) = 2 (c_1(A) - dim(M) - 1 + m).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeConvention {
    /// the equation must admit a per-factor splitting with every projected
    /// degree a positive even number (fundamental-class projections are
    /// excluded since such insertions kill the invariant)
    PerFactorProper,
    /// per-factor splitting, zero degrees allowed
    PerFactorWithZero,
    /// single equation on the product, positive even degrees
    ProductProper,
    /// single equation on the product, zero degrees allowed
    ProductWithZero,
}

impl DegreeConvention {
    pub const ALL: [DegreeConvention; 4] = [
        DegreeConvention::PerFactorProper,
        DegreeConvention::PerFactorWithZero,
        DegreeConvention::ProductProper,
        DegreeConvention::ProductWithZero,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            DegreeConvention::PerFactorProper => "per-factor-proper",
            DegreeConvention::PerFactorWithZero => "per-factor-with-zero",
            DegreeConvention::ProductProper => "product-proper",
            DegreeConvention::ProductWithZero => "product-with-zero",
        }
    }
}

/// Complex dimension and first Chern number of one irreducible factor.
#[derive(Debug, Clone, Copy)]
pub struct FactorDims {
    pub complex_dim: i64,
    pub c1: i64,
}

/// Decide whether admissible degrees deg(beta_j) exist for the two-point
/// dimension condition on the product of the given factors, with m extra
/// insertions, under the chosen convention.
pub fn dimension_condition_check(
    factors: &[FactorDims],
    m: i64,
    convention: DegreeConvention,
) -> Result<bool> {
    if factors.is_empty() {
        return Err(Error::UnknownFactor("empty product".into()));
    }
    if m < 1 {
        return Err(Error::InvalidSpec("m must be at least 1".into()));
    }
    // work in half-degree units: deg/2 per insertion lies in [lo, D]
    let satisfiable = |dim: i64, c1: i64, lo: i64| -> bool {
        let t = c1 - dim - 1 + m;
        lo * m <= t && t <= dim * m
    };
    let lo = match convention {
        DegreeConvention::PerFactorProper | DegreeConvention::ProductProper => 1,
        _ => 0,
    };
    match convention {
        DegreeConvention::ProductProper | DegreeConvention::ProductWithZero => {
            let dim: i64 = factors.iter().map(|f| f.complex_dim).sum();
            let c1: i64 = factors.iter().map(|f| f.c1).sum();
            Ok(satisfiable(dim, c1, lo))
        }
        DegreeConvention::PerFactorProper | DegreeConvention::PerFactorWithZero => {
            Ok(factors.iter().all(|f| satisfiable(f.complex_dim, f.c1, lo)))
        }
    }
}
