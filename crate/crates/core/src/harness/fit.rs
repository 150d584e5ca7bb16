use super::csv_io::Table;
use super::stats::AggregateStats;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// `ln y = exponent · ln x + intercept`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScalingFit<F> {
    pub exponent: F,
    pub intercept: F,
    pub r_squared: F,
}

/// Ordinary least squares of `ln y` on `ln x`.
pub fn fit_scaling_exponent<F: Real>(points: &[(F, F)]) -> Result<ScalingFit<F>> {
    if points.len() < 3 {
        return Err(Error::invalid("points", format!("need at least 3 points, got {}", points.len())));
    }
    for &(x, y) in points {
        if !(x > F::zero() && y > F::zero() && x.is_finite() && y.is_finite()) {
            return Err(Error::invalid("points", format!("({x}, {y}) is not strictly positive")));
        }
    }
    let mut xs: Vec<F> = points.iter().map(|p| p.0).collect();
    xs.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    if xs.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::invalid("points", "x values must be distinct"));
    }

    let k = F::of(points.len());
    let lx: Vec<F> = points.iter().map(|p| p.0.ln()).collect();
    let ly: Vec<F> = points.iter().map(|p| p.1.ln()).collect();
    let mx = lx.iter().fold(F::zero(), |a, &b| a + b) / k;
    let my = ly.iter().fold(F::zero(), |a, &b| a + b) / k;
    let (mut sxx, mut sxy, mut syy) = (F::zero(), F::zero(), F::zero());
    for (&x, &y) in lx.iter().zip(&ly) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
        syy += (y - my) * (y - my);
    }
    let exponent = sxy / sxx;
    let intercept = my - exponent * mx;
    let r_squared = if syy == F::zero() { F::one() } else { sxy * sxy / (sxx * syy) };
    Ok(ScalingFit {
        exponent,
        intercept,
        r_squared,
    })
}

/// A fit over the rows of one algorithm.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupFit {
    pub algorithm: String,
    pub points: usize,
    pub fit: ScalingFit<f64>,
}

/// Fits `y_column` against `x_column` separately for every algorithm in
/// `rows`. Groups that cannot be fitted come back as warnings.
pub fn fit_table(rows: &[AggregateStats], x_column: &str, y_column: &str) -> Result<(Vec<GroupFit>, Vec<String>)> {
    let mut groups: Vec<(String, Vec<(f64, f64)>)> = Vec::new();
    for row in rows {
        let point = (Table::value(row, x_column)?, Table::value(row, y_column)?);
        match groups.iter_mut().find(|g| g.0 == row.algorithm) {
            Some(g) => g.1.push(point),
            None => groups.push((row.algorithm.clone(), vec![point])),
        }
    }
    if rows.is_empty() {
        // Still validate column names.
        Table::value(&empty_row(), x_column)?;
        Table::value(&empty_row(), y_column)?;
    }
    let mut fits = Vec::new();
    let mut warnings = Vec::new();
    for (algorithm, points) in groups {
        if points.len() < 3 {
            warnings.push(format!("skipping {algorithm}: only {} rows, need at least 3", points.len()));
            continue;
        }
        match fit_scaling_exponent(&points) {
            Ok(fit) => fits.push(GroupFit {
                algorithm,
                points: points.len(),
                fit,
            }),
            Err(e) => warnings.push(format!("skipping {algorithm}: {e}")),
        }
    }
    Ok((fits, warnings))
}

fn empty_row() -> AggregateStats {
    AggregateStats {
        algorithm: String::new(),
        n: 0,
        d_mode: String::new(),
        d_nominal: 0.0,
        trials: 0,
        censored: 0,
        mean_evals: 0.0,
        std_evals: 0.0,
        mean_norm: 0.0,
        std_norm: 0.0,
    }
}
