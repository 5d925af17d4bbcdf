//! Time-dependent coefficients for profit and interest perturbations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance on `value(0)` for schedules used as perturbations.
pub const INITIAL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Schedule {
    Constant {
        value: f64,
    },
    /// `slope · t`
    LinearRamp {
        slope: f64,
    },
    /// `scale · (e^(rate·t) − 1)`, compounding from zero.
    Exponential {
        scale: f64,
        rate: f64,
    },
    /// Linear interpolation through `(t, value)` knots, held flat outside.
    PiecewiseLinear {
        points: Vec<[f64; 2]>,
    },
}

impl Schedule {
    pub fn zero() -> Self {
        Schedule::LinearRamp { slope: 0.0 }
    }

    pub fn value(&self, t: f64) -> f64 {
        match self {
            Schedule::Constant { value } => *value,
            Schedule::LinearRamp { slope } => slope * t,
            Schedule::Exponential { scale, rate } => scale * (rate * t).exp_m1(),
            Schedule::PiecewiseLinear { points } => piecewise(points, t),
        }
    }

    /// True when the schedule is zero at all times.
    pub fn is_identically_zero(&self) -> bool {
        match self {
            Schedule::Constant { value } => *value == 0.0,
            Schedule::LinearRamp { slope } => *slope == 0.0,
            Schedule::Exponential { scale, rate } => *scale == 0.0 || *rate == 0.0,
            Schedule::PiecewiseLinear { points } => points.iter().all(|p| p[1] == 0.0),
        }
    }

    /// Rejects schedules that do not vanish at `t = 0`.
    pub fn check_initial_condition(&self) -> Result<()> {
        let v0 = self.value(0.0);
        if !v0.is_finite() || v0.abs() > INITIAL_TOL {
            return Err(Error::ScheduleViolatesInitialCondition(v0));
        }
        Ok(())
    }

    /// Structural problems (non-finite parameters, unsorted knots).
    pub fn structural_problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        let finite = |x: f64, name: &str, out: &mut Vec<String>| {
            if !x.is_finite() {
                out.push(format!("{name} must be finite"));
            }
        };
        match self {
            Schedule::Constant { value } => finite(*value, "value", &mut out),
            Schedule::LinearRamp { slope } => finite(*slope, "slope", &mut out),
            Schedule::Exponential { scale, rate } => {
                finite(*scale, "scale", &mut out);
                finite(*rate, "rate", &mut out);
            }
            Schedule::PiecewiseLinear { points } => {
                if points.is_empty() {
                    out.push("points must not be empty".into());
                }
                if points.iter().flatten().any(|x| !x.is_finite()) {
                    out.push("points must be finite".into());
                }
                if points.windows(2).any(|w| w[1][0] <= w[0][0]) {
                    out.push("points must have strictly increasing times".into());
                }
            }
        }
        out
    }
}

fn piecewise(points: &[[f64; 2]], t: f64) -> f64 {
    let (Some(first), Some(last)) = (points.first(), points.last()) else {
        return 0.0;
    };
    if t <= first[0] {
        return first[1];
    }
    if t >= last[0] {
        return last[1];
    }
    let i = points.partition_point(|p| p[0] <= t);
    let (a, b) = (points[i - 1], points[i]);
    a[1] + (b[1] - a[1]) * (t - a[0]) / (b[0] - a[0])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        assert_eq!(Schedule::LinearRamp { slope: 0.05 }.value(2.0), 0.1);
        let e = Schedule::Exponential {
            scale: 2.0,
            rate: 0.5,
        };
        assert_eq!(e.value(0.0), 0.0);
        assert!((e.value(2.0) - 2.0 * (1f64.exp() - 1.0)).abs() < 1e-14);
        let p = Schedule::PiecewiseLinear {
            points: vec![[0.0, 0.0], [1.0, 2.0], [3.0, 0.0]],
        };
        assert_eq!(p.value(-1.0), 0.0);
        assert_eq!(p.value(0.5), 1.0);
        assert_eq!(p.value(2.0), 1.0);
        assert_eq!(p.value(9.0), 0.0);
    }

    #[test]
    fn initial_condition() {
        assert!(Schedule::LinearRamp { slope: 3.0 }
            .check_initial_condition()
            .is_ok());
        assert_eq!(
            Schedule::Constant { value: 0.1 }.check_initial_condition(),
            Err(Error::ScheduleViolatesInitialCondition(0.1))
        );
        let p = Schedule::PiecewiseLinear {
            points: vec![[-1.0, 1.0], [1.0, 1.0]],
        };
        assert!(p.check_initial_condition().is_err());
    }

    #[test]
    fn structural_checks() {
        let p = Schedule::PiecewiseLinear {
            points: vec![[1.0, 0.0], [1.0, 2.0]],
        };
        assert_eq!(p.structural_problems().len(), 1);
        assert!(Schedule::LinearRamp { slope: f64::NAN }
            .structural_problems()
            .contains(&"slope must be finite".to_string()));
    }
}
