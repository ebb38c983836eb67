//! Regular fusion graphs: the fusion matrices `G_p` for the fundamental
//! representations, their axiom checks, the intersection form
//! `g = 2I + Σ_p G_p`, and its signature by three independent routes.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use nalgebra::{Complex, DMatrix};
use serde::Serialize;

use crate::affine::{
    binomial, enumerate_weights, epsilons, orbits, q_r_sign, tau, tau_shift, to_param,
    weight_count, Weight,
};
use crate::error::{Error, Result};
use crate::point::g_values;
use crate::sign::{count_signs, Sign, SignCounts};

/// Largest vertex set `build_regular_graph` accepts.
pub const VERTEX_CAP: usize = 20_000;

/// Tolerance for spectral multiset matching.
pub const SPECTRAL_TOL: f64 = 1e-8;

/// Default zero band for numeric eigenvalues of the intersection form.
pub const ZERO_TOL: f64 = 1e-8;

/// Numeric eigenvalues with modulus in this band are flagged in reports.
pub const WARN_BAND: (f64, f64) = (1e-12, 1e-6);

/// 0/1 matrix stored as sorted column lists per row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: Vec<Vec<usize>>,
}

impl SparseMatrix {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.rows[a]
    }

    pub fn get(&self, a: usize, b: usize) -> bool {
        self.rows[a].binary_search(&b).is_ok()
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut rows = vec![Vec::new(); self.dim()];
        for (a, cols) in self.rows.iter().enumerate() {
            for &b in cols {
                rows[b].push(a);
            }
        }
        SparseMatrix { rows }
    }

    /// Integer product as per-row column counts.
    fn product(&self, other: &SparseMatrix) -> Vec<Vec<(usize, u64)>> {
        self.rows
            .iter()
            .map(|cols| {
                let mut acc: HashMap<usize, u64> = HashMap::new();
                for &m in cols {
                    for &b in &other.rows[m] {
                        *acc.entry(b).or_default() += 1;
                    }
                }
                let mut row: Vec<(usize, u64)> = acc.into_iter().collect();
                row.sort_unstable();
                row
            })
            .collect()
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        let n = self.dim();
        let mut m = DMatrix::zeros(n, n);
        for (a, cols) in self.rows.iter().enumerate() {
            for &b in cols {
                m[(a, b)] = 1.0;
            }
        }
        m
    }
}

/// Vertices are the integrable weights in lexicographic order; `G_p` has a 1
/// at `(λ, μ)` when `μ` is `λ` plus a weight of the p-th fundamental
/// representation and `μ` stays integrable.
#[derive(Clone, Debug)]
pub struct FusionGraph {
    n: usize,
    h: i64,
    vertices: Vec<Weight>,
    index: HashMap<Vec<i64>, usize>,
    matrices: Vec<SparseMatrix>,
}

impl FusionGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> i64 {
        self.h
    }

    pub fn vertices(&self) -> &[Weight] {
        &self.vertices
    }

    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        self.index.get(w.labels()).copied()
    }

    /// `G_p` for `p = 1…N-1`.
    pub fn matrix(&self, p: usize) -> &SparseMatrix {
        &self.matrices[p - 1]
    }

    pub fn dim(&self) -> usize {
        self.vertices.len()
    }

    /// Builds the graph without running any checks.
    pub fn construct(n: usize, h: i64) -> Result<FusionGraph> {
        if n >= 2 && h > n as i64 {
            let count = weight_count(n, h);
            if count > VERTEX_CAP {
                return Err(Error::VertexCap {
                    count,
                    cap: VERTEX_CAP,
                });
            }
        }
        let vertices = enumerate_weights(n, h)?;
        let index: HashMap<Vec<i64>, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, w)| (w.labels().to_vec(), i))
            .collect();
        let steps = fundamental_steps(n);
        let matrices = steps
            .iter()
            .map(|shifts| {
                let rows = vertices
                    .iter()
                    .map(|w| {
                        let mut cols: Vec<usize> = shifts
                            .iter()
                            .filter_map(|shift| {
                                let labels: Vec<i64> =
                                    w.labels().iter().zip(shift).map(|(a, b)| a + b).collect();
                                w.with_labels(labels).map(|m| index[m.labels()])
                            })
                            .collect();
                        cols.sort_unstable();
                        cols
                    })
                    .collect();
                SparseMatrix { rows }
            })
            .collect();
        Ok(FusionGraph {
            n,
            h,
            vertices,
            index,
            matrices,
        })
    }

    /// One line per edge, `p: (λ) → (μ)`, grouped by `p` and in vertex order.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for p in 1..self.n {
            for (a, cols) in self.matrix(p).rows.iter().enumerate() {
                for &b in cols {
                    out.push_str(&format!(
                        "{p}: {} → {}\n",
                        self.vertices[a], self.vertices[b]
                    ));
                }
            }
        }
        out
    }

    /// DOT digraph; edges of `G_p` carry the label `p`.
    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph fusion_su{}_h{} {{\n", self.n, self.h);
        for (i, w) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  v{i} [label=\"{w}\"];\n"));
        }
        for p in 1..self.n {
            for (a, cols) in self.matrix(p).rows.iter().enumerate() {
                for &b in cols {
                    out.push_str(&format!("  v{a} -> v{b} [label=\"{p}\"];\n"));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Dynkin-label shifts of `e_1 … e_N`.
fn e_shifts(n: usize) -> Vec<Vec<i64>> {
    (1..=n)
        .map(|i| {
            let mut v = vec![0i64; n - 1];
            if i < n {
                v[i - 1] += 1;
            }
            if i > 1 {
                v[i - 2] -= 1;
            }
            v
        })
        .collect()
}

/// For each `p = 1…N-1`, the shifts `e_{j_1} + … + e_{j_p}` over `j_1 < … < j_p`.
fn fundamental_steps(n: usize) -> Vec<Vec<Vec<i64>>> {
    let e = e_shifts(n);
    (1..n)
        .map(|p| {
            subsets(n, p)
                .into_iter()
                .map(|set| {
                    let mut v = vec![0i64; n - 1];
                    for j in set {
                        for (acc, x) in v.iter_mut().zip(&e[j]) {
                            *acc += x;
                        }
                    }
                    v
                })
                .collect()
        })
        .collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for j in start..n {
            cur.push(j);
            go(j + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::with_capacity(binomial(n as u64, k as u64));
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Outcome of the structural axiom checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub vertex_count: usize,
    pub tau_conjugation: bool,
    pub commuting: bool,
    pub transpose_pairing: bool,
    pub conjugation_symmetry: bool,
    pub grading: bool,
    pub connected: bool,
    pub row_column_sums: bool,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.tau_conjugation
            && self.commuting
            && self.transpose_pairing
            && self.conjugation_symmetry
            && self.grading
            && self.connected
            && self.row_column_sums
    }

    pub fn failures(&self) -> Vec<&'static str> {
        [
            (self.tau_conjugation, "tau(conjugate) != -tau"),
            (self.commuting, "G_p do not commute"),
            (self.transpose_pairing, "G_p^T != G_{N-p}"),
            (
                self.conjugation_symmetry,
                "(G_p)_{ab} != (G_p)_{conj b, conj a}",
            ),
            (self.grading, "edge violates tau grading"),
            (self.connected, "G_1 not connected"),
            (
                self.row_column_sums,
                "row sums of G_p differ from column sums of G_{N-p}",
            ),
        ]
        .into_iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, msg)| msg)
        .collect()
    }
}

/// Checks the combinatorial graph axioms.
pub fn check_axioms(graph: &FusionGraph) -> AxiomReport {
    let n = graph.n;
    let dim = graph.dim();
    let taus: Vec<usize> = graph.vertices.iter().map(tau).collect();
    let conj: Vec<usize> = graph
        .vertices
        .iter()
        .map(|w| {
            graph
                .index_of(&w.conjugate())
                .expect("conjugate is integrable")
        })
        .collect();

    let tau_conjugation = (0..dim).all(|a| (taus[a] + taus[conj[a]]).is_multiple_of(n));

    let mut commuting = true;
    for p in 1..n {
        for q in (p + 1)..n {
            if graph.matrix(p).product(graph.matrix(q)) != graph.matrix(q).product(graph.matrix(p))
            {
                commuting = false;
            }
        }
    }

    let transpose_pairing = (1..n).all(|p| graph.matrix(p).transpose() == *graph.matrix(n - p));

    let conjugation_symmetry = (1..n).all(|p| {
        let g = graph.matrix(p);
        (0..dim).all(|a| g.row(a).iter().all(|&b| g.get(conj[b], conj[a])))
    });

    let grading = (1..n).all(|p| {
        let g = graph.matrix(p);
        (0..dim).all(|a| g.row(a).iter().all(|&b| taus[b] == (taus[a] + p) % n))
    });

    let row_column_sums = (1..n).all(|p| {
        let rows: Vec<usize> = (0..dim).map(|a| graph.matrix(p).row(a).len()).collect();
        let mut cols = vec![0usize; dim];
        for a in 0..dim {
            for &b in graph.matrix(n - p).row(a) {
                cols[b] += 1;
            }
        }
        rows == cols
    });

    AxiomReport {
        vertex_count: dim,
        tau_conjugation,
        commuting,
        transpose_pairing,
        conjugation_symmetry,
        grading,
        connected: undirected_connected(graph.matrix(1)),
        row_column_sums,
    }
}

fn undirected_connected(g: &SparseMatrix) -> bool {
    let dim = g.dim();
    if dim == 0 {
        return true;
    }
    let t = g.transpose();
    let mut seen = vec![false; dim];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(a) = queue.pop_front() {
        for &b in g.row(a).iter().chain(t.row(a)) {
            if !seen[b] {
                seen[b] = true;
                queue.push_back(b);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// `e_p(x_1, …, x_N)`, the p-th elementary symmetric polynomial.
pub fn elementary_symmetric(xs: &[Complex<f64>], p: usize) -> Complex<f64> {
    // e[k] after processing a prefix
    let mut e = vec![Complex::new(0.0, 0.0); p + 1];
    e[0] = Complex::new(1.0, 0.0);
    for x in xs {
        for k in (1..=p).rev() {
            e[k] = e[k] + e[k - 1] * x;
        }
    }
    e[p]
}

/// Predicted joint spectrum: `(e_1(ε(λ)), …, e_{N-1}(ε(λ)))` per vertex.
pub fn predicted_spectrum(graph: &FusionGraph) -> Vec<Vec<Complex<f64>>> {
    graph
        .vertices
        .iter()
        .map(|w| {
            let eps = epsilons(w);
            (1..graph.n)
                .map(|p| elementary_symmetric(&eps, p))
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralReport {
    /// Largest distance between a predicted eigenvalue and its matched
    /// numeric eigenvalue, per `p`.
    pub max_deviation: Vec<f64>,
    /// Smallest distance between the joint eigenvalue vectors of two vertices.
    pub min_joint_separation: f64,
    pub multiplicity_free: bool,
    pub pass: bool,
}

/// Numerically diagonalizes all `G_p` at once.
///
/// The `G_p` are commuting normal matrices, so the Hermitian combination
/// `Σ_p (α_p G_p + conj(α_p) G_pᵀ)` with generic `α_p` has exactly the joint
/// eigenspaces as its eigenspaces. Its eigenvectors are fed back through
/// Rayleigh quotients `v* G_p v`; a residual check rejects the basis when two
/// joint eigenvalues collide under the chosen `α`, and the next `α` is tried.
///
/// Returns one vector `(μ_1, …, μ_{N-1})` per eigenvector.
pub fn numeric_joint_spectrum(graph: &FusionGraph) -> Result<Vec<Vec<Complex<f64>>>> {
    let dim = graph.dim();
    let n = graph.n;
    let dense: Vec<DMatrix<Complex<f64>>> = (1..n)
        .map(|p| graph.matrix(p).to_dense().map(|x| Complex::new(x, 0.0)))
        .collect();
    for attempt in 0..4 {
        let mut m = DMatrix::<Complex<f64>>::zeros(dim, dim);
        for (idx, g) in dense.iter().enumerate() {
            let p = (idx + 1) as f64;
            let t = attempt as f64;
            let alpha = Complex::from_polar(
                1.0 / (1.0 + 0.37 * p + 0.11 * t),
                0.7 + 1.13 * p + 0.53 * t * p.sqrt(),
            );
            m += g * alpha + g.transpose() * alpha.conj();
        }
        let eig = nalgebra::linalg::SymmetricEigen::try_new(m, f64::EPSILON, 1_000_000)
            .ok_or(Error::EigenSolver(dim))?;
        let vecs = &eig.eigenvectors;
        let mut spectrum = Vec::with_capacity(dim);
        let mut worst_residual: f64 = 0.0;
        for k in 0..dim {
            let v = vecs.column(k);
            let mut joint = Vec::with_capacity(n - 1);
            for p in 1..n {
                let g = graph.matrix(p);
                let gv: Vec<Complex<f64>> = (0..dim)
                    .map(|a| g.row(a).iter().map(|&b| v[b]).sum())
                    .collect();
                let mu: Complex<f64> = (0..dim).map(|a| v[a].conj() * gv[a]).sum();
                let residual = (0..dim)
                    .map(|a| (gv[a] - v[a] * mu).norm_sqr())
                    .sum::<f64>()
                    .sqrt();
                worst_residual = worst_residual.max(residual);
                joint.push(mu);
            }
            spectrum.push(joint);
        }
        if worst_residual < SPECTRAL_TOL {
            return Ok(spectrum);
        }
    }
    Err(Error::EigenSolver(dim))
}

/// Compares each `G_p` spectrum with the character values `e_p(ε(λ))`.
pub fn spectral_check(graph: &FusionGraph) -> Result<SpectralReport> {
    let predicted = predicted_spectrum(graph);
    let numeric = numeric_joint_spectrum(graph)?;
    let dim = graph.dim();
    let max_deviation = (1..graph.n)
        .map(|p| {
            let expected: Vec<Complex<f64>> = predicted.iter().map(|v| v[p - 1]).collect();
            let actual: Vec<Complex<f64>> = numeric.iter().map(|v| v[p - 1]).collect();
            match_multisets(&expected, &actual)
        })
        .collect::<Vec<f64>>();
    let mut min_joint_separation = f64::INFINITY;
    for a in 0..dim {
        for b in (a + 1)..dim {
            let d = predicted[a]
                .iter()
                .zip(&predicted[b])
                .map(|(x, y)| (x - y).norm_sqr())
                .sum::<f64>()
                .sqrt();
            min_joint_separation = min_joint_separation.min(d);
        }
    }
    let multiplicity_free = min_joint_separation > SPECTRAL_TOL;
    let pass = multiplicity_free && max_deviation.iter().all(|&d| d < SPECTRAL_TOL);
    Ok(SpectralReport {
        max_deviation,
        min_joint_separation,
        multiplicity_free,
        pass,
    })
}

/// Greedy nearest matching; returns the largest matched distance.
fn match_multisets(expected: &[Complex<f64>], actual: &[Complex<f64>]) -> f64 {
    if expected.len() != actual.len() {
        return f64::INFINITY;
    }
    let mut used = vec![false; actual.len()];
    let mut worst: f64 = 0.0;
    for e in expected {
        let (best, dist) = actual
            .iter()
            .enumerate()
            .filter(|(i, _)| !used[*i])
            .map(|(i, a)| (i, (a - e).norm()))
            .min_by(|x, y| x.1.total_cmp(&y.1))
            .expect("lengths agree");
        used[best] = true;
        worst = worst.max(dist);
    }
    worst
}

/// Structural and spectral verification results of a graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GraphVerification {
    pub axioms: AxiomReport,
    pub spectral: SpectralReport,
}

/// Builds and fully verifies the regular fusion graph at `(N, h)`.
pub fn build_regular_graph(n: usize, h: i64) -> Result<(FusionGraph, GraphVerification)> {
    let graph = FusionGraph::construct(n, h)?;
    let axioms = check_axioms(&graph);
    if !axioms.all_hold() {
        return Err(Error::Axiom(format!(
            "SU({n}) at h = {h}: {}",
            axioms.failures().join("; ")
        )));
    }
    let spectral = spectral_check(&graph)?;
    if !spectral.pass {
        return Err(Error::Axiom(format!(
            "SU({n}) at h = {h}: spectrum does not match characters (max deviation {:?}, separation {:e})",
            spectral.max_deviation, spectral.min_joint_separation
        )));
    }
    Ok((graph, GraphVerification { axioms, spectral }))
}

/// Symmetric integer matrix `2I + Σ_p G_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionForm {
    pub matrix: Vec<Vec<i64>>,
}

impl IntersectionForm {
    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|a| (0..n).all(|b| self.matrix[a][b] == self.matrix[b][a]))
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        let n = self.dim();
        DMatrix::from_fn(n, n, |a, b| self.matrix[a][b] as f64)
    }
}

pub fn intersection_form(graph: &FusionGraph) -> Result<IntersectionForm> {
    let dim = graph.dim();
    let mut matrix = vec![vec![0i64; dim]; dim];
    for (a, row) in matrix.iter_mut().enumerate() {
        row[a] = 2;
        for p in 1..graph.n {
            for &b in graph.matrix(p).row(a) {
                row[b] += 1;
            }
        }
    }
    let form = IntersectionForm { matrix };
    if !form.is_symmetric() {
        return Err(Error::Mismatch("intersection form is not symmetric".into()));
    }
    Ok(form)
}

/// `(x+, y-, z0)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SignatureTriple {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
}

impl SignatureTriple {
    pub fn new(plus: usize, minus: usize, zero: usize) -> Self {
        SignatureTriple { plus, minus, zero }
    }

    pub fn total(&self) -> usize {
        self.plus + self.minus + self.zero
    }
}

impl From<SignCounts> for SignatureTriple {
    fn from(c: SignCounts) -> Self {
        SignatureTriple {
            plus: c.plus,
            minus: c.minus,
            zero: c.zero,
        }
    }
}

impl fmt::Display for SignatureTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "+{} -{} 0:{}", self.plus, self.minus, self.zero)
    }
}

/// Per-orbit comparison of eigenvalue signs and `q^{(R)}` cosine signs.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrbitBreakdown {
    #[serde(serialize_with = "crate::affine::ser_weight")]
    pub representative: Weight,
    pub d: usize,
    /// Signs of `g^{(σ^j λ)}`, `j = 1…d`.
    pub g_counts: SignCounts,
    /// Signs of `cos(π q^{(R)}_{σ^j λ})`, `j = 1…d`.
    pub q_counts: SignCounts,
    /// Counts over all `N` values `g_j(λ')`; equal `N/d` times `g_counts`.
    pub g_full_counts: SignCounts,
    pub q_full_counts: SignCounts,
    pub scaling_holds: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExactSignature {
    pub triple: SignatureTriple,
    /// Exact sign of the eigenvalue attached to each vertex, in vertex order.
    pub vertex_signs: Vec<Sign>,
    pub orbits: Vec<OrbitBreakdown>,
}

/// Exact signature through `g^{(σ^j λ)} = g_j(λ')` on each σ-orbit.
pub fn signature_exact(graph: &FusionGraph) -> Result<ExactSignature> {
    let n = graph.n;
    let mut vertex_signs = vec![Sign::Zero; graph.dim()];
    let mut breakdown = Vec::new();
    for orbit in orbits(&graph.vertices) {
        let point = to_param(&orbit.representative);
        let g = g_values(&point).signs;
        let q = crate::point::compute_q(&point).cos_signs();
        let mut g_members = Vec::with_capacity(orbit.d);
        let mut q_members = Vec::with_capacity(orbit.d);
        for j in 1..=orbit.d {
            // σ^j(λ) for j = d is λ itself, stored at members[0].
            let member = &orbit.members[j % orbit.d];
            let idx = graph.index_of(member).expect("orbit member is a vertex");
            vertex_signs[idx] = g[j - 1];
            g_members.push(g[j - 1]);
            q_members.push(q_r_sign(member));
        }
        let g_counts = count_signs(&g_members)?;
        let q_counts = count_signs(&q_members)?;
        let g_full_counts = count_signs(&g)?;
        let q_full_counts = count_signs(&q)?;
        let d1 = n / orbit.d;
        let scaling_holds =
            g_full_counts == g_counts.scaled(d1) && q_full_counts == q_counts.scaled(d1);
        breakdown.push(OrbitBreakdown {
            pass: g_counts.same_counts(&q_counts) && scaling_holds,
            representative: orbit.representative,
            d: orbit.d,
            g_counts,
            q_counts,
            g_full_counts,
            q_full_counts,
            scaling_holds,
        });
    }
    let triple = SignatureTriple::from(count_signs(&vertex_signs)?);
    Ok(ExactSignature {
        triple,
        vertex_signs,
        orbits: breakdown,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NumericSignature {
    pub triple: SignatureTriple,
    pub min_abs_eigenvalue: f64,
    /// Eigenvalues whose modulus falls inside [`WARN_BAND`].
    pub warnings: Vec<f64>,
}

/// Signature from a symmetric eigensolver with zero band `tol`.
pub fn signature_numeric(form: &IntersectionForm, tol: f64) -> Result<NumericSignature> {
    let dim = form.dim();
    if !form.is_symmetric() {
        return Err(Error::InvalidInput(
            "signature_numeric needs a symmetric matrix".into(),
        ));
    }
    let eig = nalgebra::linalg::SymmetricEigen::try_new(form.to_dense(), f64::EPSILON, 1_000_000)
        .ok_or(Error::EigenSolver(dim))?;
    let mut triple = SignatureTriple::default();
    let mut warnings = Vec::new();
    let mut min_abs = f64::INFINITY;
    for &x in eig.eigenvalues.iter() {
        match Sign::of_f64(x, tol) {
            Sign::Plus => triple.plus += 1,
            Sign::Minus => triple.minus += 1,
            Sign::Zero => triple.zero += 1,
        }
        min_abs = min_abs.min(x.abs());
        if x.abs() >= WARN_BAND.0 && x.abs() < WARN_BAND.1 {
            warnings.push(x);
        }
    }
    Ok(NumericSignature {
        triple,
        min_abs_eigenvalue: min_abs,
        warnings,
    })
}

/// Counts of `q^{(R)}_λ` inside `]2p - 1/2, 2p + 1/2[`, inside
/// `]2p + 1/2, 2p + 3/2[`, and at half-integers, over all vertices.
pub fn zuber_counts(n: usize, h: i64) -> Result<SignatureTriple> {
    let signs: Vec<Sign> = enumerate_weights(n, h)?.iter().map(q_r_sign).collect();
    Ok(count_signs(&signs)?.into())
}

/// Full verification of one `(N, h)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZuberCase {
    pub n: usize,
    pub h: i64,
    pub level: i64,
    pub vertices: usize,
    /// `c` in `τ(σ(λ)) ≡ τ(λ) + c (mod N)`.
    pub tau_shift: usize,
    pub verification: GraphVerification,
    pub exact: SignatureTriple,
    pub numeric: SignatureTriple,
    pub zuber: SignatureTriple,
    pub min_abs_eigenvalue: f64,
    pub eigenvalue_warnings: Vec<f64>,
    pub orbits: Vec<OrbitBreakdown>,
    pub bridge_g_max_deviation: f64,
    pub bridge_q_mod2_holds: bool,
    /// Whether `q^{(R)}_{σ^{-j}λ} = q_j(λ')` held without reduction mod 2 at every weight.
    pub bridge_q_exact_holds: bool,
    pub eigenvalue_sign_agreement: bool,
    pub failures: Vec<String>,
    pub pass: bool,
}

/// Runs every check for `(N, h)` and records mismatches as failures.
///
/// Errors are reserved for invalid parameters and the vertex cap; a graph
/// that fails its axioms is reported through [`Error::Axiom`].
pub fn verify_zuber(n: usize, h: i64, tol: f64) -> Result<ZuberCase> {
    let (graph, verification) = build_regular_graph(n, h)?;
    let form = intersection_form(&graph)?;
    let exact = signature_exact(&graph)?;
    let numeric = signature_numeric(&form, tol)?;
    let zuber = zuber_counts(n, h)?;

    let mut failures = Vec::new();
    if exact.triple != numeric.triple {
        failures.push(format!(
            "exact {} != numeric {}",
            exact.triple, numeric.triple
        ));
    }
    if exact.triple != zuber {
        failures.push(format!(
            "exact {} != interval counts {}",
            exact.triple, zuber
        ));
    }
    for o in exact.orbits.iter().filter(|o| !o.pass) {
        failures.push(format!(
            "orbit of {}: g {} vs q {} (scaling {})",
            o.representative, o.g_counts, o.q_counts, o.scaling_holds
        ));
    }

    let mut bridge_g_max_deviation: f64 = 0.0;
    let mut bridge_q_mod2_holds = true;
    let mut bridge_q_exact_holds = true;
    let mut eigenvalue_sign_agreement = true;
    for (w, sign) in graph.vertices().iter().zip(&exact.vertex_signs) {
        let b = crate::affine::bridge_identities(w)?;
        bridge_g_max_deviation = bridge_g_max_deviation.max(b.max_g_deviation);
        bridge_q_mod2_holds &= b.q_mod2_holds;
        bridge_q_exact_holds &= b.q_exact_holds;
        let e = crate::affine::eigenvalue_g(w)?;
        if e.g_sign != *sign || (e.g_value.abs() > 1e-9 && Sign::of_f64(e.g_value, 0.0) != *sign) {
            eigenvalue_sign_agreement = false;
        }
    }
    if bridge_g_max_deviation >= crate::affine::BRIDGE_TOL {
        failures.push(format!("g bridge deviation {bridge_g_max_deviation:e}"));
    }
    if !bridge_q_mod2_holds {
        failures.push("q bridge fails mod 2".into());
    }
    if !eigenvalue_sign_agreement {
        failures.push("per-vertex eigenvalue signs disagree".into());
    }

    Ok(ZuberCase {
        n,
        h,
        level: h - n as i64,
        vertices: graph.dim(),
        tau_shift: tau_shift(n, h),
        verification,
        exact: exact.triple,
        numeric: numeric.triple,
        zuber,
        min_abs_eigenvalue: numeric.min_abs_eigenvalue,
        eigenvalue_warnings: numeric.warnings,
        orbits: exact.orbits,
        bridge_g_max_deviation,
        bridge_q_mod2_holds,
        bridge_q_exact_holds,
        eigenvalue_sign_agreement,
        pass: failures.is_empty(),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges(g: &FusionGraph, p: usize) -> Vec<(String, String)> {
        let m = g.matrix(p);
        (0..g.dim())
            .flat_map(|a| m.row(a).iter().map(move |&b| (a, b)))
            .map(|(a, b)| (g.vertices()[a].to_string(), g.vertices()[b].to_string()))
            .collect()
    }

    #[test]
    fn su2_level2_is_a3_path() {
        let (g, _) = build_regular_graph(2, 4).unwrap();
        assert_eq!(
            edges(&g, 1),
            vec![
                ("(1)".into(), "(2)".into()),
                ("(2)".into(), "(1)".into()),
                ("(2)".into(), "(3)".into()),
                ("(3)".into(), "(2)".into()),
            ]
        );
    }

    #[test]
    fn su3_level1_is_three_cycle() {
        let (g, _) = build_regular_graph(3, 4).unwrap();
        let mut e = edges(&g, 1);
        e.sort();
        assert_eq!(
            e,
            vec![
                ("(1,1)".into(), "(2,1)".into()),
                ("(1,2)".into(), "(1,1)".into()),
                ("(2,1)".into(), "(1,2)".into()),
            ]
        );
    }

    #[test]
    fn su2_is_a_type_dynkin_diagram() {
        for h in 3..=15 {
            let (g, _) = build_regular_graph(2, h).unwrap();
            let m = g.matrix(1);
            for a in 0..g.dim() {
                let expect: Vec<usize> = [a.checked_sub(1), Some(a + 1)]
                    .into_iter()
                    .flatten()
                    .filter(|&b| b < g.dim())
                    .collect();
                assert_eq!(m.row(a), expect.as_slice());
            }
        }
    }

    #[test]
    fn su2_spectrum_matches_path() {
        let g = FusionGraph::construct(2, 4).unwrap();
        let eig = nalgebra::linalg::SymmetricEigen::new(g.matrix(1).to_dense());
        let mut v: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        v.sort_by(f64::total_cmp);
        let s = 2f64.sqrt();
        for (a, b) in v.iter().zip([-s, 0.0, s]) {
            assert!((a - b).abs() < 1e-12);
        }
        assert!(spectral_check(&g).unwrap().pass);
    }

    #[test]
    fn level_one_matrices_are_permutations() {
        for n in 2..=6 {
            let (g, v) = build_regular_graph(n, n as i64 + 1).unwrap();
            assert!(v.spectral.pass);
            for p in 1..n {
                let m = g.matrix(p);
                assert!((0..g.dim()).all(|a| m.row(a).len() == 1));
                let mut cols: Vec<usize> = (0..g.dim()).map(|a| m.row(a)[0]).collect();
                cols.sort();
                assert_eq!(cols, (0..g.dim()).collect::<Vec<_>>());
            }
            for joint in numeric_joint_spectrum(&g).unwrap() {
                assert!(joint.iter().all(|z| (z.norm() - 1.0).abs() < 1e-9));
            }
        }
    }

    #[test]
    fn su3_level1_spectrum_is_cube_roots_sum() {
        let g = FusionGraph::construct(3, 4).unwrap();
        let pred = predicted_spectrum(&g);
        let actual: Vec<Complex<f64>> = numeric_joint_spectrum(&g)
            .unwrap()
            .iter()
            .map(|v| v[0])
            .collect();
        // eigenvalues of a 3-cycle are the cube roots of unity
        for z in &actual {
            assert!(((z * z * z) - Complex::new(1.0, 0.0)).norm() < 1e-9);
        }
        let expected: Vec<Complex<f64>> = pred.iter().map(|v| v[0]).collect();
        assert!(match_multisets(&expected, &actual) < 1e-9);
    }

    #[test]
    fn intersection_form_examples() {
        let (g, _) = build_regular_graph(2, 4).unwrap();
        let f = intersection_form(&g).unwrap();
        assert_eq!(f.matrix, vec![vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 2]]);

        let (g, _) = build_regular_graph(3, 4).unwrap();
        let f = intersection_form(&g).unwrap();
        assert_eq!(f.matrix, vec![vec![2, 1, 1], vec![1, 2, 1], vec![1, 1, 2]]);
    }

    #[test]
    fn signature_examples() {
        for (n, h) in [(2, 4), (3, 4)] {
            let (g, _) = build_regular_graph(n, h).unwrap();
            assert_eq!(
                signature_exact(&g).unwrap().triple,
                SignatureTriple::new(3, 0, 0)
            );
            let num = signature_numeric(&intersection_form(&g).unwrap(), ZERO_TOL).unwrap();
            assert_eq!(num.triple, SignatureTriple::new(3, 0, 0));
            assert_eq!(zuber_counts(n, h).unwrap(), SignatureTriple::new(3, 0, 0));
        }
        let two_i = IntersectionForm {
            matrix: vec![vec![2, 0], vec![0, 2]],
        };
        assert_eq!(
            signature_numeric(&two_i, ZERO_TOL).unwrap().triple,
            SignatureTriple::new(2, 0, 0)
        );
    }

    #[test]
    fn su2_interval_counts_closed_form() {
        for h in 3..=20 {
            assert_eq!(
                zuber_counts(2, h).unwrap(),
                SignatureTriple::new(h as usize - 1, 0, 0)
            );
        }
    }

    #[test]
    fn verify_small_cases() {
        for (n, h) in [(2, 4), (3, 4), (3, 6), (4, 7), (5, 7)] {
            let case = verify_zuber(n, h, ZERO_TOL).unwrap();
            assert!(case.pass, "{:?}", case.failures);
            assert_eq!(case.exact.total(), weight_count(n, h));
        }
    }

    #[test]
    fn cap_and_input_errors() {
        assert!(matches!(
            FusionGraph::construct(3, 3),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            FusionGraph::construct(5, 60),
            Err(Error::VertexCap { .. })
        ));
    }

    #[test]
    fn dump_and_dot_formats() {
        let g = FusionGraph::construct(2, 4).unwrap();
        assert_eq!(
            g.dump(),
            "1: (1) → (2)\n1: (2) → (1)\n1: (2) → (3)\n1: (3) → (2)\n"
        );
        let dot = g.to_dot();
        assert!(dot.starts_with("digraph fusion_su2_h4 {"));
        assert!(dot.contains("v0 -> v1 [label=\"1\"];"));
    }
}
