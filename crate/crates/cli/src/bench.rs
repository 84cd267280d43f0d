//! Wall-time benchmark of point metrics.

use std::io::Write;
use std::time::Instant;

use centra_core::{registry, Error, Graph, MetricParams, Scalar};

use crate::emit::fmt_sig;
use crate::error::{CliError, CliResult};

pub const MIN_REPEAT: usize = 3;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub metric: String,
    /// Median over the repeats; `None` when the metric failed.
    pub elapsed_ms: Option<f64>,
}

/// Errors meaning the metric does not apply to this graph, as opposed to failing on it.
pub fn not_applicable(e: &Error) -> bool {
    matches!(
        e,
        Error::DirectedRequired { .. }
            | Error::UndirectedRequired { .. }
            | Error::MissingCoordinates { .. }
            | Error::DenseCapExceeded { .. }
            | Error::SizeCapExceeded { .. }
            | Error::Disconnected { .. }
    )
}

pub fn median(xs: &mut [f64]) -> f64 {
    xs.sort_by(f64::total_cmp);
    let mid = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[mid]
    } else {
        (xs[mid - 1] + xs[mid]) / 2.0
    }
}

/// Median wall time of `repeat` evaluations of metric `id`, in milliseconds.
pub fn time_metric<T: Scalar>(g: &Graph<T>, id: &str, params: &MetricParams, repeat: usize) -> Result<f64, Error> {
    let mut times = Vec::with_capacity(repeat);
    for _ in 0..repeat {
        let start = Instant::now();
        registry::point_metric(g, id, params)?;
        times.push(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok(median(&mut times))
}

/// Times each metric; with `skip_inapplicable`, metrics that do not apply are left out.
/// Returns the rows and the number of failed metrics.
pub fn run_bench<T: Scalar>(
    g: &Graph<T>,
    ids: &[&str],
    params: &MetricParams,
    repeat: usize,
    skip_inapplicable: bool,
) -> CliResult<(Vec<BenchRow>, usize)> {
    if repeat < MIN_REPEAT {
        return Err(CliError::input(format!("--repeat must be at least {MIN_REPEAT}")));
    }
    let mut rows = Vec::new();
    let mut failed = 0;
    for &id in ids {
        match time_metric(g, id, params, repeat) {
            Ok(ms) => rows.push(BenchRow { metric: id.into(), elapsed_ms: Some(ms) }),
            Err(Error::UnknownId { .. }) => {
                return Err(registry::point_metric(g, id, params).expect_err("unknown id").into());
            }
            Err(e) if skip_inapplicable && not_applicable(&e) => log::info!("{id}: skipped: {e}"),
            Err(e) => {
                log::error!("{id}: {e}");
                failed += 1;
                rows.push(BenchRow { metric: id.into(), elapsed_ms: None });
            }
        }
    }
    Ok((rows, failed))
}

pub fn write_bench<W: Write>(rows: &[BenchRow], out: W) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    let err = |e: csv::Error| CliError::input(format!("write failed: {e}"));
    w.write_record(["metric", "elapsed_ms"]).map_err(err)?;
    for r in rows {
        w.write_record([r.metric.clone(), r.elapsed_ms.map(fmt_sig).unwrap_or_default()]).map_err(err)?;
    }
    w.flush().map_err(|e| CliError::input(format!("write failed: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn medians() {
        assert_eq!(median(&mut [3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(&mut [4.0, 1.0, 2.0, 3.0]), 2.5);
    }

    #[test]
    fn rows_and_failures() {
        let g: Graph<f64> = Graph::from_edges(4, false, &[(0, 1), (1, 2), (2, 3)]);
        let p = MetricParams::default();
        assert!(run_bench(&g, &["degree"], &p, 2, false).is_err());
        assert!(run_bench(&g, &["nope"], &p, 3, false).is_err());
        let (rows, failed) = run_bench(&g, &["degree", "in-degree"], &p, 3, false).unwrap();
        assert_eq!((rows.len(), failed, rows[1].elapsed_ms), (2, 1, None));
        let (rows, failed) = run_bench(&g, &["degree", "in-degree"], &p, 3, true).unwrap();
        assert_eq!((rows.len(), failed), (1, 0));
        let mut buf = Vec::new();
        write_bench(&rows, &mut buf).unwrap();
        assert!(String::from_utf8(buf).unwrap().starts_with("metric,elapsed_ms\ndegree,"));
    }
}
