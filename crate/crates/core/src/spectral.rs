//! Dense symmetric eigensolver and spectral bounds on triangle and
//! closure mass.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::RealMatrix;
use crate::wedge::{edge_triangle_multiplicities, triadic_open_decomposition, wedge_summary};

/// Absolute tolerance when deciding whether an inequality holds.
pub const BOUND_TOLERANCE: f64 = 1e-6;

/// Scale-relative tolerance for the eigenvalue equality classification.
pub const EQUALITY_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumOptions {
    pub max_order: usize,
    pub max_sweeps: usize,
    /// Stop once the off-diagonal Frobenius norm is at most this times the
    /// Frobenius norm of the input.
    pub relative_tolerance: f64,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        Self {
            max_order: 2000,
            max_sweeps: 100,
            relative_tolerance: 1e-10,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// Sorted in decreasing order.
    pub eigenvalues: Vec<f64>,
    /// `max ‖M v − λ v‖∞` over the computed eigenpairs.
    pub residual: f64,
    pub sweeps: usize,
}

impl Spectrum {
    /// Largest eigenvalue, 0 for the empty spectrum.
    pub fn lambda_max(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    /// Power sum `Σ λᵢᵏ`.
    pub fn moment(&self, k: i32) -> f64 {
        self.eigenvalues.iter().map(|l| l.powi(k)).sum()
    }
}

pub fn symmetric_spectrum(m: &RealMatrix) -> Result<Spectrum> {
    symmetric_spectrum_with(m, &SpectrumOptions::default())
}

/// Full spectrum of a symmetric matrix by cyclic Jacobi rotations.
pub fn symmetric_spectrum_with(m: &RealMatrix, opts: &SpectrumOptions) -> Result<Spectrum> {
    let n = m.order();
    if n > opts.max_order {
        return Err(Error::ResourceLimit {
            what: "matrix order",
            requested: n as u64,
            cap: opts.max_order as u64,
        });
    }
    if let Some((row, col)) = m.asymmetry() {
        return Err(Error::NotSymmetric { row, col });
    }

    let mut a: Vec<f64> = m.as_slice().to_vec();
    // eigenvectors stored as rows so each rotation touches two contiguous rows
    let mut vt = vec![0.0; n * n];
    for i in 0..n {
        vt[i * n + i] = 1.0;
    }
    let threshold = opts.relative_tolerance * m.frobenius_sq()?.sqrt();
    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off <= threshold {
            break;
        }
        if sweeps == opts.max_sweeps {
            return Err(Error::NoConvergence { sweeps, off_norm: off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (1.0 + theta * theta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // A <- Jᵀ A J on rows and columns p, q, keeping A symmetric
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let (akp, akq) = (a[p * n + k], a[q * n + k]);
                    let (bkp, bkq) = (c * akp - s * akq, s * akp + c * akq);
                    a[p * n + k] = bkp;
                    a[k * n + p] = bkp;
                    a[q * n + k] = bkq;
                    a[k * n + q] = bkq;
                }
                a[p * n + p] -= t * apq;
                a[q * n + q] += t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let (vp, vq) = (vt[p * n + k], vt[q * n + k]);
                    vt[p * n + k] = c * vp - s * vq;
                    vt[q * n + k] = s * vp + c * vq;
                }
            }
        }
    }

    let mut residual: f64 = 0.0;
    for j in 0..n {
        let lambda = a[j * n + j];
        let vj = &vt[j * n..(j + 1) * n];
        for i in 0..n {
            let mv: f64 = m.row(i).iter().zip(vj).map(|(x, y)| x * y).sum();
            residual = residual.max((mv - lambda * vj[i]).abs());
        }
    }
    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eigenvalues.sort_by(|x, y| y.total_cmp(x));
    Ok(Spectrum {
        eigenvalues,
        residual,
        sweeps,
    })
}

pub fn adjacency_spectrum(g: &Graph) -> Result<Spectrum> {
    g.require_undirected()?;
    symmetric_spectrum(&g.adjacency_matrix().to_real())
}

/// One checked inequality `lhs ≤ rhs`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
    pub slack: f64,
    pub equality_case: bool,
}

impl BoundReport {
    fn new(lhs: f64, rhs: f64, equality_case: bool) -> Self {
        Self {
            lhs,
            rhs,
            holds: lhs <= rhs + BOUND_TOLERANCE,
            slack: rhs - lhs,
            equality_case,
        }
    }

    pub const CSV_HEADER: &'static str = "graph,bound,lhs,rhs,holds,slack,equality_case";

    pub fn to_csv_row(&self, graph: &str, bound: &str) -> String {
        let mut row = String::new();
        write!(
            row,
            "{graph},{bound},{:?},{:?},{},{:?},{}",
            self.lhs, self.rhs, self.holds, self.slack, self.equality_case
        )
        .unwrap();
        row
    }
}

/// `τ ≤ λ₁ m / 3`; equality exactly when every nonprincipal eigenvalue is
/// 0 or `λ₁`.
pub fn triangle_spectral_bound(g: &Graph) -> Result<BoundReport> {
    let tau = wedge_summary(g)?.tau;
    let spectrum = adjacency_spectrum(g)?;
    Ok(triangle_bound_from(tau, g.m(), &spectrum))
}

/// [`triangle_spectral_bound`] from a precomputed adjacency spectrum.
pub fn triangle_bound_from(tau: u64, m: usize, spectrum: &Spectrum) -> BoundReport {
    let l1 = spectrum.lambda_max();
    let tol = EQUALITY_TOLERANCE * l1;
    let equality = spectrum
        .eigenvalues
        .iter()
        .skip(1)
        .all(|&l| l.abs() <= tol || (l - l1).abs() <= tol);
    BoundReport::new(tau as f64, l1 * m as f64 / 3.0, equality)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClosureNormReport {
    /// `‖T‖_F²`, summed over ordered pairs (each edge counted twice).
    pub triadic_frobenius_sq: i64,
    /// `Σ_e t_e²` over unordered edges.
    pub edge_multiplicity_sq_sum: u64,
    /// `Tr(A⁴)` from the integer matrix power.
    pub trace_a4: i64,
    /// `Σ λᵢ⁴`.
    pub trace_a4_spectral: f64,
    /// `‖T‖_F² ≤ Tr(A⁴)`.
    pub closure: BoundReport,
    /// `Tr(A⁴) ≤ n λ₁⁴`.
    pub spectral: BoundReport,
}

/// The chain `‖T‖_F² ≤ Tr(A⁴) ≤ n λ₁⁴`, with `Tr(A⁴)` computed exactly and
/// cross-checked against the fourth spectral moment.
pub fn closure_norm_bound(g: &Graph) -> Result<ClosureNormReport> {
    let spectrum = adjacency_spectrum(g)?;
    closure_bound_from(g, &spectrum)
}

/// [`closure_norm_bound`] from a precomputed adjacency spectrum.
pub fn closure_bound_from(g: &Graph, spectrum: &Spectrum) -> Result<ClosureNormReport> {
    let t = triadic_open_decomposition(g)?.triadic;
    let triadic_frobenius_sq = t.frobenius_sq()?;
    let edge_multiplicity_sq_sum = edge_triangle_multiplicities(g)?.values().map(|&x| x * x).sum();

    let a = g.adjacency_matrix();
    let a2 = a.checked_mul(&a)?;
    // Tr(A² · A²), diagonal of the product only
    let mut trace_a4: i64 = 0;
    for i in 0..a2.order() {
        for k in 0..a2.order() {
            trace_a4 = a2[(i, k)]
                .checked_mul(a2[(k, i)])
                .and_then(|x| trace_a4.checked_add(x))
                .ok_or(Error::Overflow("Tr(A^4)"))?;
        }
    }
    let trace_a4_spectral = spectrum.moment(4);
    if (trace_a4_spectral - trace_a4 as f64).abs() > 1e-6 * (trace_a4 as f64).max(1.0) {
        return Err(Error::InvariantViolation(format!(
            "spectral fourth moment {trace_a4_spectral} disagrees with Tr(A^4) = {trace_a4}"
        )));
    }
    let n_l4 = g.n() as f64 * spectrum.lambda_max().powi(4);
    let closure = BoundReport::new(
        triadic_frobenius_sq as f64,
        trace_a4 as f64,
        triadic_frobenius_sq == trace_a4,
    );
    let spectral = BoundReport::new(
        trace_a4 as f64,
        n_l4,
        (n_l4 - trace_a4 as f64).abs() <= BOUND_TOLERANCE,
    );
    Ok(ClosureNormReport {
        triadic_frobenius_sq,
        edge_multiplicity_sq_sum,
        trace_a4,
        trace_a4_spectral,
        closure,
        spectral,
    })
}
