//! Stationary Schrödinger problem `[−(1/2m) d²/dx² + V(x)] ψ = E ψ` for a
//! bound money-debt pair on a uniform 1-D grid.
//!
//! The Laplacian is the second-order central difference with hard walls
//! (`ψ = 0` at both ends), giving a symmetric tridiagonal matrix on the
//! interior points. Eigenvalues come from Sturm-sequence bisection and
//! eigenvectors from inverse iteration.
//!
//! `mass` plays the role of the inertia of the credit relationship.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub n_points: usize,
}

impl GridSpec {
    pub fn new(x_min: f64, x_max: f64, n_points: usize) -> Result<Self> {
        let g = GridSpec {
            x_min,
            x_max,
            n_points,
        };
        g.check()?;
        Ok(g)
    }

    pub fn check(&self) -> Result<()> {
        if !(self.x_min.is_finite() && self.x_max.is_finite()) || self.x_max <= self.x_min {
            return Err(Error::InvalidGridSpec("x_max must exceed x_min".into()));
        }
        if self.n_points < 16 {
            return Err(Error::InvalidGridSpec(
                "n_points must be at least 16".into(),
            ));
        }
        Ok(())
    }

    pub fn spacing(&self) -> f64 {
        (self.x_max - self.x_min) / (self.n_points - 1) as f64
    }

    pub fn x(&self, i: usize) -> f64 {
        if i + 1 == self.n_points {
            self.x_max
        } else {
            self.x_min + i as f64 * self.spacing()
        }
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n_points).map(|i| self.x(i)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum PotentialSpec {
    /// `½ m ω² x²`
    Harmonic { omega: f64 },
    /// `−depth` for `|x| < width/2`, zero elsewhere.
    SquareWell { depth: f64, width: f64 },
    /// One value per grid point.
    Tabulated { samples: Vec<f64> },
}

impl PotentialSpec {
    /// Potential sampled on every grid point.
    pub fn sample(&self, grid: &GridSpec, mass: f64) -> Result<Vec<f64>> {
        let values: Vec<f64> = match self {
            PotentialSpec::Harmonic { omega } => grid
                .points()
                .iter()
                .map(|x| 0.5 * mass * omega * omega * x * x)
                .collect(),
            PotentialSpec::SquareWell { depth, width } => grid
                .points()
                .iter()
                .map(|x| if x.abs() < 0.5 * width { -depth } else { 0.0 })
                .collect(),
            PotentialSpec::Tabulated { samples } => {
                if samples.len() != grid.n_points {
                    return Err(Error::InvalidGridSpec(format!(
                        "{} potential samples for {} grid points",
                        samples.len(),
                        grid.n_points
                    )));
                }
                samples.clone()
            }
        };
        match values.iter().position(|v| !v.is_finite()) {
            Some(i) => Err(Error::NonFinitePotential(i)),
            None => Ok(values),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenResult {
    pub grid: GridSpec,
    /// Ascending.
    pub energies: Vec<f64>,
    /// Values on every grid point (zero at the walls), `Σ ψ² h = 1`.
    pub wavefunctions: Vec<Vec<f64>>,
}

impl EigenResult {
    /// `Σ ψ_a ψ_b h`.
    pub fn overlap(&self, a: usize, b: usize) -> f64 {
        let h = self.grid.spacing();
        self.wavefunctions[a]
            .iter()
            .zip(&self.wavefunctions[b])
            .map(|(x, y)| x * y)
            .sum::<f64>()
            * h
    }

    /// Interior sign changes of one wavefunction.
    pub fn node_count(&self, n: usize) -> usize {
        let psi = &self.wavefunctions[n];
        let scale = psi.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let significant: Vec<f64> = psi
            .iter()
            .copied()
            .filter(|v| v.abs() > 1e-6 * scale)
            .collect();
        significant.windows(2).filter(|w| w[0] * w[1] < 0.0).count()
    }
}

/// Lowest `n_states` eigenpairs of the discretized Hamiltonian.
pub fn solve_eigen(
    grid: &GridSpec,
    potential: &PotentialSpec,
    mass: f64,
    n_states: usize,
) -> Result<EigenResult> {
    grid.check()?;
    if !(mass.is_finite() && mass > 0.0) {
        return Err(Error::InvalidGridSpec("mass must be positive".into()));
    }
    let max = grid.n_points - 3;
    if n_states > max {
        return Err(Error::TooManyStates {
            requested: n_states,
            max,
        });
    }
    let v = potential.sample(grid, mass)?;
    let h = grid.spacing();
    let kinetic = 1.0 / (mass * h * h);
    let diag: Vec<f64> = v[1..grid.n_points - 1]
        .iter()
        .map(|vi| kinetic + vi)
        .collect();
    let off = vec![-0.5 * kinetic; diag.len() - 1];
    let tri = Tridiagonal { diag, off };

    let mut energies: Vec<f64> = Vec::with_capacity(n_states);
    let mut wavefunctions: Vec<Vec<f64>> = Vec::with_capacity(n_states);
    let mut interior: Vec<Vec<f64>> = Vec::with_capacity(n_states);
    for k in 0..n_states {
        let e: f64 = tri.kth_eigenvalue(k);
        let mut vec = tri.inverse_iteration(e);
        // re-orthogonalize against near-degenerate predecessors
        for (prev, &pe) in interior.iter().zip(&energies) {
            if (pe - e).abs() < 1e-6 * (1.0 + e.abs()) {
                let d: f64 = vec.iter().zip(prev).map(|(a, b)| a * b).sum();
                vec.iter_mut().zip(prev).for_each(|(a, b)| *a -= d * b);
                normalize(&mut vec);
            }
        }
        energies.push(e);
        interior.push(vec.clone());
        let scale = (1.0 / h).sqrt();
        // sign: first significant lobe positive
        let peak = vec.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        let lead = vec
            .iter()
            .find(|x| x.abs() > 1e-3 * peak)
            .copied()
            .unwrap_or(1.0);
        let sign = if lead < 0.0 { -scale } else { scale };
        let mut full = Vec::with_capacity(grid.n_points);
        full.push(0.0);
        full.extend(vec.iter().map(|x| x * sign));
        full.push(0.0);
        wavefunctions.push(full);
    }
    Ok(EigenResult {
        grid: *grid,
        energies,
        wavefunctions,
    })
}

fn normalize(v: &mut [f64]) {
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter_mut().for_each(|x| *x /= n);
}

struct Tridiagonal {
    diag: Vec<f64>,
    off: Vec<f64>,
}

impl Tridiagonal {
    fn len(&self) -> usize {
        self.diag.len()
    }

    /// Number of eigenvalues strictly below `x` (Sturm sequence).
    fn count_below(&self, x: f64) -> usize {
        let mut count = 0;
        let mut d = 1.0;
        for i in 0..self.len() {
            let b2 = if i == 0 {
                0.0
            } else {
                self.off[i - 1] * self.off[i - 1]
            };
            d = self.diag[i] - x - if i == 0 { 0.0 } else { b2 / d };
            if d == 0.0 {
                d = -f64::EPSILON * (self.diag[i].abs() + x.abs() + 1.0);
            }
            if d < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn gershgorin(&self) -> (f64, f64) {
        let n = self.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let r = if i > 0 { self.off[i - 1].abs() } else { 0.0 }
                + if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        (lo, hi)
    }

    /// The `k`-th smallest eigenvalue (0-based) by bisection.
    fn kth_eigenvalue(&self, k: usize) -> f64 {
        let (mut lo, mut hi) = self.gershgorin();
        let scale = lo.abs().max(hi.abs()).max(1.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi || hi - lo <= 4.0 * f64::EPSILON * scale {
                break;
            }
            if self.count_below(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    fn inverse_iteration(&self, lambda: f64) -> Vec<f64> {
        let n = self.len();
        let (lo, hi) = self.gershgorin();
        let shift = lambda + 1e-10 * (hi - lo).max(1.0);
        let lu = TridiagonalLu::factor(self, shift);
        let mut v: Vec<f64> = (0..n)
            .map(|i| 1.0 + ((i * 7919) % 101) as f64 * 1e-3)
            .collect();
        normalize(&mut v);
        for _ in 0..4 {
            v = lu.solve(&v);
            normalize(&mut v);
        }
        v
    }
}

/// LU with partial pivoting of `T − shift·I`.
struct TridiagonalLu {
    // U has up to two superdiagonals after pivoting
    u0: Vec<f64>,
    u1: Vec<f64>,
    u2: Vec<f64>,
    l: Vec<f64>,
    swapped: Vec<bool>,
}

impl TridiagonalLu {
    fn factor(t: &Tridiagonal, shift: f64) -> Self {
        let n = t.len();
        let mut d: Vec<f64> = t.diag.iter().map(|x| x - shift).collect();
        let mut du: Vec<f64> = t.off.clone();
        let mut dl: Vec<f64> = t.off.clone();
        let mut du2 = vec![0.0; n.saturating_sub(2)];
        let mut l = vec![0.0; n.saturating_sub(1)];
        let mut swapped = vec![false; n.saturating_sub(1)];
        for i in 0..n.saturating_sub(1) {
            if d[i].abs() >= dl[i].abs() {
                let piv = if d[i] == 0.0 { f64::MIN_POSITIVE } else { d[i] };
                d[i] = piv;
                let f = dl[i] / piv;
                l[i] = f;
                d[i + 1] -= f * du[i];
            } else {
                let f = d[i] / dl[i];
                d[i] = dl[i];
                l[i] = f;
                let tmp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = tmp - f * d[i + 1];
                if i + 2 < n {
                    du2[i] = du[i + 1];
                    du[i + 1] *= -f;
                }
                swapped[i] = true;
            }
            dl[i] = 0.0;
        }
        if n > 0 && d[n - 1] == 0.0 {
            d[n - 1] = f64::MIN_POSITIVE;
        }
        TridiagonalLu {
            u0: d,
            u1: du,
            u2: du2,
            l,
            swapped,
        }
    }

    fn solve(&self, rhs: &[f64]) -> Vec<f64> {
        let n = rhs.len();
        let mut b = rhs.to_vec();
        for i in 0..n.saturating_sub(1) {
            if self.swapped[i] {
                b.swap(i, i + 1);
            }
            b[i + 1] -= self.l[i] * b[i];
        }
        let mut x = vec![0.0; n];
        for i in (0..n).rev() {
            let mut s = b[i];
            if i + 1 < n {
                s -= self.u1[i] * x[i + 1];
            }
            if i + 2 < n {
                s -= self.u2[i] * x[i + 2];
            }
            x[i] = s / self.u0[i];
        }
        x
    }
}

/// Parses a two-column `x,V(x)` CSV; a non-numeric first line is a header.
pub fn parse_potential_csv(text: &str) -> Result<Vec<(f64, f64)>> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split(',').map(str::trim).collect();
        let parsed = match cols.as_slice() {
            [x, v] => x.parse::<f64>().ok().zip(v.parse::<f64>().ok()),
            _ => None,
        };
        match parsed {
            Some(row) => rows.push(row),
            None if rows.is_empty() && lineno == 0 => continue,
            None => {
                return Err(Error::InvalidGridSpec(format!(
                    "line {}: expected `x,V(x)`",
                    lineno + 1
                )))
            }
        }
    }
    Ok(rows)
}

/// Tabulated potential whose abscissae must coincide with the grid.
pub fn tabulated_from_rows(grid: &GridSpec, rows: &[(f64, f64)]) -> Result<PotentialSpec> {
    if rows.len() != grid.n_points {
        return Err(Error::InvalidGridSpec(format!(
            "{} tabulated rows for {} grid points",
            rows.len(),
            grid.n_points
        )));
    }
    let tol = 1e-9 * (grid.x_max - grid.x_min);
    for (i, (x, _)) in rows.iter().enumerate() {
        if (x - grid.x(i)).abs() > tol {
            return Err(Error::InvalidGridSpec(format!(
                "row {i}: x = {x} does not match grid point {}",
                grid.x(i)
            )));
        }
    }
    Ok(PotentialSpec::Tabulated {
        samples: rows.iter().map(|r| r.1).collect(),
    })
}

/// `n,energy` rows.
pub fn energies_csv(result: &EigenResult) -> String {
    let mut out = String::from("n,energy\n");
    for (n, e) in result.energies.iter().enumerate() {
        out.push_str(&format!("{n},{e:.16e}\n"));
    }
    out
}

/// `x,psi_0,psi_1,...` rows over the whole grid.
pub fn wavefunctions_csv(result: &EigenResult) -> String {
    let mut out = String::from("x");
    for n in 0..result.wavefunctions.len() {
        out.push_str(&format!(",psi_{n}"));
    }
    out.push('\n');
    for i in 0..result.grid.n_points {
        out.push_str(&format!("{:.16e}", result.grid.x(i)));
        for psi in &result.wavefunctions {
            out.push_str(&format!(",{:.16e}", psi[i]));
        }
        out.push('\n');
    }
    out
}
