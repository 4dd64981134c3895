//! Uniform grid on [0, 1], grid functions, quadrature and discrete norms.

use std::sync::Arc;

use crate::error::{Error, Result};

/// Uniform partition of [0, 1] into `M` intervals (`M + 1` nodes).
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    nodes: Vec<f64>,
    h: f64,
}

impl Grid {
    /// At least 8 intervals are required.
    pub fn uniform(intervals: usize) -> Result<Arc<Grid>> {
        if intervals < 8 {
            return Err(Error::GridTooCoarse(format!(
                "need at least 8 intervals, got {intervals}"
            )));
        }
        let m = intervals;
        let h = 1.0 / m as f64;
        let mut nodes: Vec<f64> = (0..=m).map(|i| i as f64 * h).collect();
        nodes[m] = 1.0;
        Ok(Arc::new(Grid { nodes, h }))
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Number of intervals M.
    pub fn intervals(&self) -> usize {
        self.nodes.len() - 1
    }

    /// Interior node count M - 1.
    pub fn interior_count(&self) -> usize {
        self.nodes.len() - 2
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }
}

/// Real-valued function sampled at every grid node.
#[derive(Debug, Clone)]
pub struct GridFunction {
    grid: Arc<Grid>,
    values: Vec<f64>,
}

/// Which norm [`norm`] computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormKind {
    L2,
    /// The seminorm ||f'||_{L2}, the convention used throughout for H^1_0.
    H10,
    Linf,
}

impl GridFunction {
    pub fn new(grid: Arc<Grid>, values: Vec<f64>) -> Result<GridFunction> {
        if values.len() != grid.node_count() {
            return Err(Error::Config(format!(
                "grid function length {} does not match node count {}",
                values.len(),
                grid.node_count()
            )));
        }
        if !values.iter().all(|v| v.is_finite()) {
            return Err(Error::Config("grid function has non-finite entries".into()));
        }
        Ok(GridFunction { grid, values })
    }

    pub fn zeros(grid: Arc<Grid>) -> GridFunction {
        let n = grid.node_count();
        GridFunction {
            grid,
            values: vec![0.0; n],
        }
    }

    /// Sample `f` at every node.
    pub fn sample(grid: Arc<Grid>, f: impl Fn(f64) -> f64) -> GridFunction {
        let values = grid.nodes().iter().map(|&x| f(x)).collect();
        GridFunction { grid, values }
    }

    pub fn grid(&self) -> &Arc<Grid> {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    /// Centered first derivative at interior nodes, second-order one-sided at
    /// the two boundary nodes.
    pub fn derivative(&self) -> GridFunction {
        let v = &self.values;
        let n = v.len();
        let h = self.grid.h();
        let mut d = vec![0.0; n];
        d[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
        for i in 1..n - 1 {
            d[i] = (v[i + 1] - v[i - 1]) / (2.0 * h);
        }
        d[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * h);
        GridFunction {
            grid: self.grid.clone(),
            values: d,
        }
    }
}

/// Composite trapezoid quadrature of node values.
pub fn trapezoid(f: &GridFunction) -> f64 {
    let v = f.values();
    let n = v.len();
    let inner: f64 = v[1..n - 1].iter().sum();
    f.grid().h() * (0.5 * v[0] + inner + 0.5 * v[n - 1])
}

/// Trapezoid approximation of the L2 inner product <f, g>.
pub fn inner_product(f: &GridFunction, g: &GridFunction) -> f64 {
    debug_assert_eq!(f.values().len(), g.values().len());
    let h = f.grid().h();
    let fv = f.values();
    let gv = g.values();
    let n = fv.len();
    let inner: f64 = (1..n - 1).map(|i| fv[i] * gv[i]).sum();
    h * (0.5 * fv[0] * gv[0] + inner + 0.5 * fv[n - 1] * gv[n - 1])
}

/// L2 seminorm of the discrete derivative, without any boundary check.
/// This is what trajectory post-processing uses on fields with an
/// inhomogeneous boundary value (y(t, 0) = u(t)).
pub fn h1_seminorm(f: &GridFunction) -> f64 {
    let d = f.derivative();
    inner_product(&d, &d).max(0.0).sqrt()
}

/// Discrete norm of `f`. `H10` requires vanishing boundary values.
pub fn norm(f: &GridFunction, kind: NormKind) -> Result<f64> {
    match kind {
        NormKind::L2 => Ok(inner_product(f, f).max(0.0).sqrt()),
        NormKind::Linf => Ok(f
            .values()
            .iter()
            .fold(0.0_f64, |acc, &v| acc.max(v.abs()))),
        NormKind::H10 => {
            let v = f.values();
            let scale = v.iter().fold(0.0_f64, |acc, &x| acc.max(x.abs()));
            let tol = 1e-9 * (1.0 + scale);
            let (left, right) = (v[0].abs(), v[v.len() - 1].abs());
            if left > tol || right > tol {
                return Err(Error::NonVanishingBoundary { left, right });
            }
            Ok(h1_seminorm(f))
        }
    }
}
