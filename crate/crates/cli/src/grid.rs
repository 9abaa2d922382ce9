use std::fmt;

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scale {
    Linear,
    Log,
}

#[derive(Debug, Clone, PartialEq)]
pub enum GridError {
    NonPositive(f64),
    Reversed { min: f64, max: f64 },
    NoSteps,
    NoOrders,
}

impl fmt::Display for GridError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NonPositive(v) => write!(f, "x must be > 0 (got {v})"),
            Self::Reversed { min, max } => write!(f, "--x-min {min} exceeds --x-max {max}"),
            Self::NoSteps => f.write_str("grid is empty: --x-steps must be at least 1"),
            Self::NoOrders => f.write_str("grid is empty: no orders given"),
        }
    }
}

/// Points `x` times orders `ν`, walked ν-major.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub xs: Vec<f64>,
    pub nus: Vec<f64>,
}

impl GridSpec {
    pub fn spaced(min: f64, max: f64, steps: usize, scale: Scale, nus: Vec<f64>) -> Result<Self, GridError> {
        for v in [min, max] {
            if v <= 0.0 || !v.is_finite() {
                return Err(GridError::NonPositive(v));
            }
        }
        if min > max {
            return Err(GridError::Reversed { min, max });
        }
        if steps == 0 {
            return Err(GridError::NoSteps);
        }
        let xs = if steps == 1 {
            vec![min]
        } else {
            let last = (steps - 1) as f64;
            (0..steps)
                .map(|i| {
                    if i == 0 {
                        return min;
                    }
                    if i == steps - 1 {
                        return max;
                    }
                    let t = i as f64 / last;
                    match scale {
                        Scale::Linear => min + (max - min) * t,
                        Scale::Log => (min.ln() + (max.ln() - min.ln()) * t).exp(),
                    }
                })
                .collect()
        };
        Self::explicit(xs, nus)
    }

    pub fn explicit(xs: Vec<f64>, nus: Vec<f64>) -> Result<Self, GridError> {
        if xs.is_empty() {
            return Err(GridError::NoSteps);
        }
        if nus.is_empty() {
            return Err(GridError::NoOrders);
        }
        if let Some(&bad) = xs.iter().find(|v| v.is_nan() || **v <= 0.0) {
            return Err(GridError::NonPositive(bad));
        }
        Ok(Self { xs, nus })
    }

    pub fn points(&self) -> Vec<(f64, f64)> {
        self.nus.iter().flat_map(|&nu| self.xs.iter().map(move |&x| (nu, x))).collect()
    }
}

/// A comma list from one flag value.
#[derive(Debug, Clone, PartialEq)]
pub struct List<T>(pub Vec<T>);

/// Parses `1,2.5,-3`; blanks between commas are rejected.
pub fn parse_list(s: &str) -> Result<List<f64>, String> {
    if s.trim().is_empty() {
        return Ok(List(Vec::new()));
    }
    s.split(',')
        .map(|part| {
            let part = part.trim();
            part.parse::<f64>().map_err(|e| format!("invalid number {part:?}: {e}"))
        })
        .collect::<Result<_, _>>()
        .map(List)
}

pub fn parse_usize_list(s: &str) -> Result<List<usize>, String> {
    s.split(',')
        .map(|part| {
            let part = part.trim();
            part.parse::<usize>().map_err(|e| format!("invalid term count {part:?}: {e}"))
        })
        .collect::<Result<_, _>>()
        .map(List)
}
