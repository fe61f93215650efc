//! Floating-point spectra, energy, and exact cospectrality and integrality.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::algebra::{charpoly, integer_roots, Poly};
use crate::error::{Error, Result};
use crate::graph::{MarkedSignedGraph, MatrixKind};

pub const DEFAULT_JACOBI_TOL: f64 = 1e-12;
/// Energy comparison tolerance per eigenvalue summand.
pub const ENERGY_TOL_PER_EIGENVALUE: f64 = 1e-9;
const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    /// Descending.
    pub eigenvalues: Vec<f64>,
    pub source: Option<MatrixKind>,
}

impl Spectrum {
    pub fn energy(&self) -> f64 {
        self.eigenvalues.iter().map(|v| v.abs()).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnergyValue {
    pub value: f64,
    pub tolerance: f64,
}

/// Cyclic Jacobi rotations until every off-diagonal entry is below `tol`.
pub fn symmetric_eigenvalues(m: &[Vec<f64>], tol: f64) -> Result<Spectrum> {
    let n = m.len();
    if let Some(row) = m.iter().find(|r| r.len() != n) {
        return Err(Error::NotSquare { rows: n, cols: row.len() });
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    for i in 0..n {
        for j in 0..i {
            if (m[i][j] - m[j][i]).abs() > 1e-12 {
                return Err(Error::NotSymmetric);
            }
        }
    }
    let mut a: Vec<Vec<f64>> = m.to_vec();
    let off_max = |a: &[Vec<f64>]| {
        let mut best = 0.0f64;
        for i in 0..n {
            for j in i + 1..n {
                best = best.max(a[i][j].abs());
            }
        }
        best
    };
    let mut sweeps = 0;
    while off_max(&a) >= tol {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < f64::MIN_POSITIVE {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
            }
        }
    }
    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eigenvalues.sort_by(|x, y| y.total_cmp(x));
    Ok(Spectrum {
        eigenvalues,
        source: None,
    })
}

pub fn spectrum(mg: &MarkedSignedGraph, kind: MatrixKind, tol: f64) -> Result<Spectrum> {
    let rows = mg.graph().matrix(kind).to_f64_rows();
    let mut s = symmetric_eigenvalues(&rows, tol)?;
    s.source = Some(kind);
    Ok(s)
}

/// Sum of absolute adjacency eigenvalues of `mg`'s signed graph.
pub fn energy(mg: &MarkedSignedGraph) -> Result<EnergyValue> {
    let s = spectrum(mg, MatrixKind::Adjacency, DEFAULT_JACOBI_TOL)?;
    Ok(EnergyValue {
        value: s.energy(),
        tolerance: ENERGY_TOL_PER_EIGENVALUE * mg.n() as f64,
    })
}

/// Exact equality of the chosen matrix's characteristic polynomials.
pub fn cospectral(mg1: &MarkedSignedGraph, mg2: &MarkedSignedGraph, kind: MatrixKind) -> Result<bool> {
    if mg1.n() != mg2.n() {
        return Ok(false);
    }
    Ok(charpoly(&mg1.graph().matrix(kind))? == charpoly(&mg2.graph().matrix(kind))?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Integrality {
    pub integral: bool,
    /// Integer eigenvalues found, descending, with multiplicity.
    pub roots: Vec<BigInt>,
}

impl Integrality {
    pub fn roots_i64(&self) -> Vec<i64> {
        self.roots.iter().filter_map(|r| r.to_i64()).collect()
    }
}

pub fn integrality_of(p: &Poly) -> Result<Integrality> {
    let found = integer_roots(p)?;
    Ok(Integrality {
        integral: found.is_complete(),
        roots: found.roots,
    })
}

/// Whether every adjacency eigenvalue of `mg` is an integer, decided exactly.
pub fn is_integral(mg: &MarkedSignedGraph) -> Result<Integrality> {
    integrality_of(&charpoly(&mg.graph().adjacency_matrix())?)
}
