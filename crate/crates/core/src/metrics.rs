//! Saturation metrics over the cumulative total/unique code counts.
//!
//! The headline number is the slope ratio `unique / total`, in (0, 1]. Lower
//! values mean the model keeps re-finding codes it has already produced.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum MetricsError {
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("invalid series: {0}")]
    InvalidSeries(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesPoint {
    pub ordinal: usize,
    pub total_after: usize,
    pub unique_after: usize,
}

/// Cumulative counts after each coded interview.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaturationSeries {
    pub points: Vec<SeriesPoint>,
}

impl SaturationSeries {
    /// Builds a series from per-interview (generated, accepted) counts.
    pub fn from_increments(increments: &[(usize, usize)]) -> Self {
        let mut total = 0;
        let mut unique = 0;
        let points = increments
            .iter()
            .enumerate()
            .map(|(i, &(generated, accepted))| {
                total += generated;
                unique += accepted;
                SeriesPoint {
                    ordinal: i + 1,
                    total_after: total,
                    unique_after: unique,
                }
            })
            .collect();
        Self { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn last(&self) -> Option<&SeriesPoint> {
        self.points.last()
    }

    pub fn validate(&self) -> Result<(), MetricsError> {
        let invalid = |m: String| Err(MetricsError::InvalidSeries(m));
        if self.points.is_empty() {
            return invalid("series is empty".into());
        }
        let mut prev: Option<&SeriesPoint> = None;
        for p in &self.points {
            if p.unique_after == 0 || p.unique_after > p.total_after {
                return invalid(format!(
                    "point {}: unique {} not in 1..={}",
                    p.ordinal, p.unique_after, p.total_after
                ));
            }
            match prev {
                None if p.ordinal != 1 => {
                    return invalid(format!("first ordinal is {}, expected 1", p.ordinal))
                }
                Some(q) if p.ordinal <= q.ordinal => {
                    return invalid(format!("ordinal {} after {}", p.ordinal, q.ordinal))
                }
                Some(q) if p.total_after < q.total_after || p.unique_after < q.unique_after => {
                    return invalid(format!("counts decrease at ordinal {}", p.ordinal))
                }
                Some(q) if p.unique_after - q.unique_after > p.total_after - q.total_after => {
                    return invalid(format!(
                        "ordinal {} gains more unique codes than it generated",
                        p.ordinal
                    ))
                }
                _ => {}
            }
            prev = Some(p);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ItsResult {
    pub unique_codes: usize,
    pub total_codes: usize,
    pub slope_ratio: f64,
}

impl ItsResult {
    /// Two-decimal rendering used in summaries.
    pub fn display(&self) -> String {
        format!("{:.2}", self.slope_ratio)
    }
}

/// `unique_codes / total_codes`, requiring `1 <= unique <= total`.
pub fn its_slope_ratio(total_codes: usize, unique_codes: usize) -> Result<ItsResult, MetricsError> {
    if unique_codes < 1 || total_codes < 1 {
        return Err(MetricsError::DomainError(format!(
            "counts must be at least 1 (total={total_codes}, unique={unique_codes})"
        )));
    }
    if unique_codes > total_codes {
        return Err(MetricsError::DomainError(format!(
            "unique codes {unique_codes} exceed total codes {total_codes}"
        )));
    }
    Ok(ItsResult {
        unique_codes,
        total_codes,
        slope_ratio: unique_codes as f64 / total_codes as f64,
    })
}

/// `unique_after / total_after` at every point.
pub fn ratio_series(series: &SaturationSeries) -> Result<Vec<(usize, f64)>, MetricsError> {
    series.validate()?;
    Ok(series
        .points
        .iter()
        .map(|p| (p.ordinal, p.unique_after as f64 / p.total_after as f64))
        .collect())
}

/// Summary metric for a whole series: the ratio at its last point.
pub fn series_its(series: &SaturationSeries) -> Result<ItsResult, MetricsError> {
    series.validate()?;
    let last = series.last().expect("validated non-empty");
    its_slope_ratio(last.total_after, last.unique_after)
}

/// One plottable curve, value against interview ordinal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Curve {
    pub name: String,
    pub points: Vec<(usize, f64)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveTables {
    pub total: Curve,
    pub unique: Curve,
    pub ratio: Curve,
}

pub fn curve_export(series: &SaturationSeries) -> Result<CurveTables, MetricsError> {
    let ratio = ratio_series(series)?;
    let column = |name: &str, f: fn(&SeriesPoint) -> usize| Curve {
        name: name.to_string(),
        points: series
            .points
            .iter()
            .map(|p| (p.ordinal, f(p) as f64))
            .collect(),
    };
    Ok(CurveTables {
        total: column("total", |p| p.total_after),
        unique: column("unique", |p| p.unique_after),
        ratio: Curve {
            name: "ratio".into(),
            points: ratio,
        },
    })
}

/// Least-squares fit of `unique_after` against `total_after`.
///
/// Diagnostic only: the reported metric is [`series_its`]. `None` when
/// there are fewer than two distinct totals.
pub fn least_squares_slope(series: &SaturationSeries) -> Option<f64> {
    let n = series.points.len() as f64;
    if series.points.len() < 2 {
        return None;
    }
    let xs = series.points.iter().map(|p| p.total_after as f64);
    let ys = series.points.iter().map(|p| p.unique_after as f64);
    let mean_x = xs.clone().sum::<f64>() / n;
    let mean_y = ys.clone().sum::<f64>() / n;
    let (sxy, sxx) = xs.zip(ys).fold((0.0, 0.0), |(sxy, sxx), (x, y)| {
        (
            sxy + (x - mean_x) * (y - mean_y),
            sxx + (x - mean_x).powi(2),
        )
    });
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Contents of `metrics.json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricsSummary {
    pub dataset: String,
    pub interviews: usize,
    pub total_codes: usize,
    pub unique_codes: usize,
    pub its_slope_ratio: f64,
    pub its_display: String,
    pub ratio_series: Vec<f64>,
    /// Non-normative least-squares slope of unique vs total.
    pub diagnostic_ls_slope: Option<f64>,
}

impl MetricsSummary {
    pub fn from_series(dataset: &str, series: &SaturationSeries) -> Result<Self, MetricsError> {
        let its = series_its(series)?;
        Ok(Self {
            dataset: dataset.to_string(),
            interviews: series.len(),
            total_codes: its.total_codes,
            unique_codes: its.unique_codes,
            its_slope_ratio: its.slope_ratio,
            its_display: its.display(),
            ratio_series: ratio_series(series)?.into_iter().map(|(_, r)| r).collect(),
            diagnostic_ls_slope: least_squares_slope(series),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reference_ratios() {
        let scrum = its_slope_ratio(534, 66).unwrap();
        assert_eq!(scrum.display(), "0.12");
        assert_eq!(scrum.slope_ratio, 66.0 / 534.0);
        assert_eq!(its_slope_ratio(135, 53).unwrap().display(), "0.39");
        assert_eq!(its_slope_ratio(40, 40).unwrap().slope_ratio, 1.0);
    }

    #[test]
    fn slope_ratio_domain() {
        assert!(its_slope_ratio(10, 11).is_err());
        assert!(its_slope_ratio(10, 0).is_err());
        assert!(its_slope_ratio(0, 0).is_err());
    }

    #[test]
    fn curve_shapes() {
        let series = SaturationSeries::from_increments(&[(10, 10); 10]);
        let tables = curve_export(&series).unwrap();
        assert_eq!(tables.total.points.len(), 10);
        assert_eq!(tables.unique.points.len(), 10);
        assert_eq!(tables.ratio.points.len(), 10);

        let single = SaturationSeries::from_increments(&[(11, 11)]);
        let tables = curve_export(&single).unwrap();
        assert_eq!(tables.ratio.points, vec![(1, 1.0)]);
        assert_eq!(least_squares_slope(&single), None);
    }

    #[test]
    fn invalid_series_rejected() {
        let bad = SaturationSeries {
            points: vec![
                SeriesPoint {
                    ordinal: 1,
                    total_after: 5,
                    unique_after: 5,
                },
                SeriesPoint {
                    ordinal: 2,
                    total_after: 6,
                    unique_after: 7,
                },
            ],
        };
        assert!(ratio_series(&bad).is_err());
        assert!(ratio_series(&SaturationSeries::default()).is_err());
        let gap_start = SaturationSeries {
            points: vec![SeriesPoint {
                ordinal: 2,
                total_after: 1,
                unique_after: 1,
            }],
        };
        assert!(gap_start.validate().is_err());
    }

    #[test]
    fn ls_slope_is_exact_on_linear_data() {
        let series = SaturationSeries::from_increments(&[(10, 4); 6]);
        assert!((least_squares_slope(&series).unwrap() - 0.4).abs() < 1e-12);
    }

    fn increments() -> impl Strategy<Value = Vec<(usize, usize)>> {
        (
            1usize..=16,
            prop::collection::vec((1usize..=16, 0usize..=16), 0..20),
        )
            .prop_map(|(first, rest)| {
                std::iter::once((first, first))
                    .chain(rest.into_iter().map(|(g, a)| (g, a.min(g))))
                    .collect()
            })
    }

    proptest! {
        #[test]
        fn ratios_in_unit_interval_and_summary_is_endpoint(inc in increments()) {
            let series = SaturationSeries::from_increments(&inc);
            let ratios = ratio_series(&series).unwrap();
            prop_assert_eq!(ratios[0].1, 1.0);
            for (_, r) in &ratios {
                prop_assert!(*r > 0.0 && *r <= 1.0);
            }
            let its = series_its(&series).unwrap();
            prop_assert_eq!(its.slope_ratio, ratios.last().unwrap().1);
        }

        #[test]
        fn scaling_counts_keeps_ratios(inc in increments(), k in 1usize..6) {
            let scaled: Vec<_> = inc.iter().map(|&(g, a)| (g * k, a * k)).collect();
            let a = ratio_series(&SaturationSeries::from_increments(&inc)).unwrap();
            let b = ratio_series(&SaturationSeries::from_increments(&scaled)).unwrap();
            for ((_, x), (_, y)) in a.iter().zip(&b) {
                prop_assert!((x - y).abs() < 1e-12);
            }
        }
    }
}
