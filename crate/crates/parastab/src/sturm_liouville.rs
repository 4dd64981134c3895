//! The Sturm-Liouville operator A f = -((a f')' + b f) with Dirichlet
//! conditions: discrete assembly, eigendecomposition, modal projections and
//! the embedding constants consumed by the stability certificate.

use std::sync::Arc;

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{inner_product, norm, Grid, GridFunction, NormKind};

/// Scalar coefficient of the operator, evaluable on [0, 1].
#[derive(Clone)]
pub enum Coefficient {
    Constant(f64),
    /// Polynomial in x, low degree first: c0 + c1 x + c2 x^2 + ...
    Polynomial(Vec<f64>),
    Custom(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl std::fmt::Debug for Coefficient {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Coefficient::Constant(c) => write!(f, "Constant({c})"),
            Coefficient::Polynomial(c) => write!(f, "Polynomial({c:?})"),
            Coefficient::Custom(_) => write!(f, "Custom(..)"),
        }
    }
}

impl Coefficient {
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            Coefficient::Constant(c) => *c,
            Coefficient::Polynomial(c) => c.iter().rev().fold(0.0, |acc, &ck| acc * x + ck),
            Coefficient::Custom(f) => f(x),
        }
    }

    /// Analytic derivative where the form allows it.
    fn derivative(&self) -> Option<Coefficient> {
        match self {
            Coefficient::Constant(_) => Some(Coefficient::Constant(0.0)),
            Coefficient::Polynomial(c) => {
                if c.len() <= 1 {
                    return Some(Coefficient::Constant(0.0));
                }
                Some(Coefficient::Polynomial(
                    c.iter()
                        .enumerate()
                        .skip(1)
                        .map(|(k, &ck)| k as f64 * ck)
                        .collect(),
                ))
            }
            Coefficient::Custom(_) => None,
        }
    }
}

/// Diffusion a(x), potential b(x) and the derivative a'(x). The standing
/// hypotheses min a > 0 and max b < 0 are enforced on every grid the field
/// is used with.
#[derive(Debug, Clone)]
pub struct CoefficientField {
    pub a: Coefficient,
    pub b: Coefficient,
    pub a_deriv: Coefficient,
}

impl CoefficientField {
    /// `a_deriv` may be omitted for constant or polynomial `a`; custom `a`
    /// falls back to a centered finite difference.
    pub fn new(a: Coefficient, b: Coefficient, a_deriv: Option<Coefficient>) -> CoefficientField {
        let a_deriv = a_deriv.or_else(|| a.derivative()).unwrap_or_else(|| {
            let af = a.clone();
            Coefficient::Custom(Arc::new(move |x: f64| {
                let h = 1e-6;
                let lo = (x - h).max(0.0);
                let hi = (x + h).min(1.0);
                (af.eval(hi) - af.eval(lo)) / (hi - lo)
            }))
        });
        CoefficientField { a, b, a_deriv }
    }

    pub fn constant(a: f64, b: f64) -> CoefficientField {
        CoefficientField::new(Coefficient::Constant(a), Coefficient::Constant(b), None)
    }

    /// Check min a > 0 and max b < 0 at the grid nodes and midpoints.
    pub fn validate_on(&self, grid: &Grid) -> Result<()> {
        let mut min_a = f64::INFINITY;
        let mut max_b = f64::NEG_INFINITY;
        let h = grid.h();
        for &x in grid.nodes() {
            min_a = min_a.min(self.a.eval(x));
            max_b = max_b.max(self.b.eval(x));
        }
        for &x in grid.nodes().iter().take(grid.intervals()) {
            min_a = min_a.min(self.a.eval(x + 0.5 * h));
        }
        if !(min_a > 0.0) {
            return Err(Error::InvalidCoefficients(format!(
                "hypothesis min a(x) > 0 violated: min a = {min_a}"
            )));
        }
        if !(max_b < 0.0) {
            return Err(Error::InvalidCoefficients(format!(
                "hypothesis max b(x) < 0 violated: max b = {max_b}"
            )));
        }
        Ok(())
    }
}

/// Symmetric tridiagonal matrix acting on interior node values.
#[derive(Debug, Clone)]
pub struct TridiagonalOperator {
    /// Main diagonal, one entry per interior node.
    pub diag: Vec<f64>,
    /// Off diagonal (length interior - 1).
    pub off: Vec<f64>,
}

impl TridiagonalOperator {
    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    /// r = T v.
    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        let n = self.dim();
        let mut r = vec![0.0; n];
        for i in 0..n {
            r[i] = self.diag[i] * v[i];
            if i > 0 {
                r[i] += self.off[i - 1] * v[i - 1];
            }
            if i + 1 < n {
                r[i] += self.off[i] * v[i + 1];
            }
        }
        r
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        let n = self.dim();
        let mut m = DMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = self.diag[i];
            if i + 1 < n {
                m[(i, i + 1)] = self.off[i];
                m[(i + 1, i)] = self.off[i];
            }
        }
        m
    }
}

/// Conservative second-order finite-difference discretization of
/// A f = -((a f')' + b f) at the interior nodes, Dirichlet rows eliminated.
/// The flux form with midpoint-sampled `a` keeps the matrix exactly symmetric.
pub fn assemble_operator(coeffs: &CoefficientField, grid: &Grid) -> Result<TridiagonalOperator> {
    coeffs.validate_on(grid)?;
    let m = grid.intervals();
    let h = grid.h();
    let h2 = h * h;
    let nodes = grid.nodes();
    let a_mid: Vec<f64> = (0..m).map(|i| coeffs.a.eval(nodes[i] + 0.5 * h)).collect();
    let mut diag = vec![0.0; m - 1];
    let mut off = vec![0.0; m - 2];
    for i in 0..m - 1 {
        diag[i] = (a_mid[i] + a_mid[i + 1]) / h2 - coeffs.b.eval(nodes[i + 1]);
        if i + 1 < m - 1 {
            off[i] = -a_mid[i + 1] / h2;
        }
    }
    Ok(TridiagonalOperator { diag, off })
}

/// First `mode_count` eigenpairs of the discrete operator, ascending, with
/// L2-normalized eigenfunctions and the sign convention phi_n'(0) > 0.
#[derive(Debug, Clone)]
pub struct SpectralBasis {
    grid: Arc<Grid>,
    lambdas: Vec<f64>,
    eigenfunctions: Vec<GridFunction>,
    dphi0: Vec<f64>,
}

impl SpectralBasis {
    pub fn grid(&self) -> &Arc<Grid> {
        &self.grid
    }

    pub fn mode_count(&self) -> usize {
        self.lambdas.len()
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }

    /// Eigenvalue of mode `n` (1-based, as in the sequence lambda_1 < lambda_2 < ...).
    pub fn lambda(&self, n: usize) -> Result<f64> {
        self.check_mode(n)?;
        Ok(self.lambdas[n - 1])
    }

    pub fn eigenfunctions(&self) -> &[GridFunction] {
        &self.eigenfunctions
    }

    /// Eigenfunction of mode `n` (1-based).
    pub fn eigenfunction(&self, n: usize) -> Result<&GridFunction> {
        self.check_mode(n)?;
        Ok(&self.eigenfunctions[n - 1])
    }

    /// Boundary derivatives phi_n'(0), all positive by convention.
    pub fn dphi0(&self) -> &[f64] {
        &self.dphi0
    }

    fn check_mode(&self, n: usize) -> Result<()> {
        if n == 0 || n > self.mode_count() {
            return Err(Error::ModeIndexOutOfRange {
                index: n,
                resolved: self.mode_count(),
            });
        }
        Ok(())
    }
}

/// Dense symmetric eigendecomposition of the assembled operator, keeping the
/// first `mode_count` modes. Requires mode_count <= M/4 so the kept modes are
/// resolved by the grid.
pub fn eigendecompose(
    operator: &TridiagonalOperator,
    grid: Arc<Grid>,
    mode_count: usize,
) -> Result<SpectralBasis> {
    let m_intervals = grid.intervals();
    if operator.dim() != grid.interior_count() {
        return Err(Error::Config(
            "operator dimension does not match grid interior".into(),
        ));
    }
    if mode_count == 0 || 4 * mode_count > m_intervals {
        return Err(Error::UnderResolved(format!(
            "requested {mode_count} modes but the resolution guard allows at most M/4 = {}",
            m_intervals / 4
        )));
    }

    let eig = SymmetricEigen::new(operator.to_dense());
    let mut order: Vec<usize> = (0..operator.dim()).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].partial_cmp(&eig.eigenvalues[j]).unwrap());

    let h = grid.h();
    let sqrt_h = h.sqrt();
    let nn = grid.node_count();
    let mut lambdas = Vec::with_capacity(mode_count);
    let mut eigenfunctions = Vec::with_capacity(mode_count);
    let mut dphi0 = Vec::with_capacity(mode_count);
    for k in 0..mode_count {
        let idx = order[k];
        let lam = eig.eigenvalues[idx];
        // simple-spectrum guard
        if k + 1 < operator.dim() {
            let gap = eig.eigenvalues[order[k + 1]] - lam;
            if gap.abs() < 1e-9 * lam.abs().max(1.0) {
                return Err(Error::EigenvalueMultiplicity { index: k + 1, gap });
            }
        }
        let col = eig.eigenvectors.column(idx);
        let mut values = vec![0.0; nn];
        for (i, v) in col.iter().enumerate() {
            // eigenvectors are unit in l2, so h * sum v_i^2 = h; dividing by
            // sqrt(h) makes the trapezoid L2 norm exactly one
            values[i + 1] = v / sqrt_h;
        }
        let d0 = one_sided_derivative_at_zero(&values, h);
        let sign = if d0 < 0.0 { -1.0 } else { 1.0 };
        if sign < 0.0 {
            values.iter_mut().for_each(|v| *v = -*v);
        }
        lambdas.push(lam);
        dphi0.push(d0 * sign);
        eigenfunctions.push(GridFunction::new(grid.clone(), values)?);
    }

    Ok(SpectralBasis {
        grid,
        lambdas,
        eigenfunctions,
        dphi0,
    })
}

/// Fourth-order one-sided difference for f'(0).
fn one_sided_derivative_at_zero(values: &[f64], h: f64) -> f64 {
    (-25.0 * values[0] + 48.0 * values[1] - 36.0 * values[2] + 16.0 * values[3] - 3.0 * values[4])
        / (12.0 * h)
}

/// Trapezoid-quadrature modal coefficient <f, phi_n> (n is 1-based).
pub fn project(f: &GridFunction, basis: &SpectralBasis, n: usize) -> Result<f64> {
    let phi = basis.eigenfunction(n)?;
    Ok(inner_product(f, phi))
}

/// Embedding and norm-equivalence constants entering the certificate.
///
/// c1 is the sharp Dirichlet Poincare constant pi^2; the 1D interpolation
/// constants c2, c_tilde2, c3 are fixed at sqrt(2); k1, k2 bracket the
/// D(A^{1/2}) norm against the H^1_0 seminorm; d_norm is the operator norm
/// of the boundary lifting u -> (1-x) u into H^1 with the sum convention
/// ||f||_{L2} + ||f'||_{L2}.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SobolevConstants {
    pub c1: f64,
    pub c2: f64,
    pub c_tilde2: f64,
    pub c3: f64,
    pub k1: f64,
    pub k2: f64,
    pub d_norm: f64,
    pub c0: f64,
}

pub fn sobolev_constants(coeffs: &CoefficientField, grid: &Grid) -> SobolevConstants {
    let c1 = std::f64::consts::PI * std::f64::consts::PI;
    let mut min_a = f64::INFINITY;
    let mut max_a = f64::NEG_INFINITY;
    let mut max_neg_b = f64::NEG_INFINITY;
    for &x in grid.nodes() {
        let a = coeffs.a.eval(x);
        min_a = min_a.min(a);
        max_a = max_a.max(a);
        max_neg_b = max_neg_b.max(-coeffs.b.eval(x));
    }
    let k1 = min_a.sqrt();
    let k2 = (max_a + max_neg_b / c1).sqrt();
    let d_norm = (3.0 + 3.0_f64.sqrt()) / 3.0;
    let c0 = 2.0 * (k2 * k2).max(d_norm * d_norm);
    SobolevConstants {
        c1,
        c2: 2.0_f64.sqrt(),
        c_tilde2: 2.0_f64.sqrt(),
        c3: 2.0_f64.sqrt(),
        k1,
        k2,
        d_norm,
        c0,
    }
}

/// Convenience: assemble, decompose and validate in one call.
pub fn build_basis(
    coeffs: &CoefficientField,
    grid: Arc<Grid>,
    mode_count: usize,
) -> Result<SpectralBasis> {
    let op = assemble_operator(coeffs, &grid)?;
    eigendecompose(&op, grid, mode_count)
}
