use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::graph::{EdgeColoring, Pattern, TargetSpec, MAX_VERTICES};
use crate::oracles::coloring_is_good;
use crate::witness::to_witness_string;

use super::{find_good_coloring, predicted_value, SearchConfig, SearchStats, Verdict};

#[derive(Clone, Debug, PartialEq)]
pub struct RamseyResult {
    pub value: usize,
    /// A good coloring of `K_{value-1}`; absent only when `value == 1`.
    pub lower_witness: Option<EdgeColoring>,
    pub lower_stats: Option<SearchStats>,
    /// Statistics of the exhaustive search at `value`.
    pub upper_stats: SearchStats,
    /// Every probe made, as `(vertices, verdict)`.
    pub probes: Vec<(usize, &'static str)>,
}

/// Smallest `N` such that `K_N` has no good coloring for `spec`.
///
/// Probing starts one below the predicted value when one exists and then
/// moves up (or down) until a witness at `N - 1` and an exhaustion at `N`
/// sit next to each other.
pub fn ramsey_number(spec: &TargetSpec, cfg: &SearchConfig) -> Result<RamseyResult> {
    let start = predicted_value(spec).map_or(1, |v| v.saturating_sub(1).max(1));
    if start > MAX_VERTICES {
        return invalid(format!(
            "predicted value {} exceeds {MAX_VERTICES} vertices",
            start + 1
        ));
    }
    let mut probes = Vec::new();
    let mut probe = |n: usize| -> Result<(Option<EdgeColoring>, SearchStats)> {
        let outcome = find_good_coloring(n, spec, cfg)?;
        probes.push((n, outcome.verdict.name()));
        match outcome.verdict {
            Verdict::Found(c) => Ok((Some(c), outcome.stats)),
            Verdict::Exhausted => Ok((None, outcome.stats)),
            Verdict::Timeout => Err(Error::Resource(format!(
                "search for {spec} on K_{n} timed out after {:.1}s ({} nodes); probes so far: {:?}",
                outcome.stats.seconds, outcome.stats.nodes, probes
            ))),
        }
    };

    let (mut lower, mut upper);
    let first = probe(start)?;
    match first {
        (Some(w), stats) => {
            lower = Some((w, stats));
            let mut n = start + 1;
            loop {
                if n > MAX_VERTICES {
                    return Err(Error::Resource(format!(
                        "no exhaustion up to {MAX_VERTICES} vertices for {spec}"
                    )));
                }
                match probe(n)? {
                    (Some(w), stats) => lower = Some((w, stats)),
                    (None, stats) => {
                        upper = (n, stats);
                        break;
                    }
                }
                n += 1;
            }
        }
        (None, stats) => {
            upper = (start, stats);
            lower = None;
            let mut n = start;
            while n > 1 {
                n -= 1;
                match probe(n)? {
                    (Some(w), stats) => {
                        lower = Some((w, stats));
                        break;
                    }
                    (None, stats) => upper = (n, stats),
                }
            }
        }
    }

    let (value, upper_stats) = upper;
    let (lower_witness, lower_stats) = match lower {
        Some((w, s)) => (Some(w), Some(s)),
        None => (None, None),
    };
    Ok(RamseyResult {
        value,
        lower_witness,
        lower_stats,
        upper_stats,
        probes,
    })
}

/// Every spec in the closed-form families whose predicted value is at most
/// `max_vertices`: two-color paths, `(P3, Pn, Pm)`, and `(P3, nK2, mK2)`.
pub fn resolved_specs(max_vertices: usize) -> Vec<TargetSpec> {
    let mut out = Vec::new();
    let mut push = |patterns: Vec<Pattern>| {
        let spec = TargetSpec::new(patterns).expect("well-formed family member");
        if predicted_value(&spec).is_some_and(|v| v <= max_vertices) {
            out.push(spec);
        }
    };
    for n in 2..=max_vertices {
        for m in n..=max_vertices {
            push(vec![Pattern::Path(n), Pattern::Path(m)]);
        }
    }
    for n in 3..=max_vertices {
        for m in n..=max_vertices {
            push(vec![Pattern::Path(3), Pattern::Path(n), Pattern::Path(m)]);
        }
    }
    for n in 3..=max_vertices {
        for m in n..=max_vertices {
            push(vec![
                Pattern::Path(3),
                Pattern::Matching(n),
                Pattern::Matching(m),
            ]);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TableStatus {
    Match,
    Mismatch,
    Timeout,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub spec: String,
    pub predicted: usize,
    pub computed: Option<usize>,
    pub nodes: u64,
    pub seconds: f64,
    pub status: TableStatus,
    /// For mismatches: the offending witness file or an explanation.
    pub diagnostic: Option<String>,
}

/// Recomputes every resolved Ramsey number up to `max_vertices` and compares
/// it with the closed form. Stops at the first mismatch.
pub fn verify_table(max_vertices: usize, cfg: &SearchConfig) -> Result<Vec<TableRow>> {
    if max_vertices > MAX_VERTICES {
        return invalid(format!("max_vertices must be at most {MAX_VERTICES}"));
    }
    let mut rows = Vec::new();
    for spec in resolved_specs(max_vertices) {
        let predicted = predicted_value(&spec).expect("resolved spec");
        let started = std::time::Instant::now();
        let row = match ramsey_number(&spec, cfg) {
            Ok(result) => {
                let nodes =
                    result.upper_stats.nodes + result.lower_stats.as_ref().map_or(0, |s| s.nodes);
                let witness_ok = match &result.lower_witness {
                    Some(w) => coloring_is_good(w, &spec)?.is_good(),
                    None => result.value == 1,
                };
                let (status, diagnostic) = if !witness_ok {
                    (
                        TableStatus::Mismatch,
                        result.lower_witness.as_ref().map(|w| {
                            format!("witness fails re-verification:\n{}", to_witness_string(w))
                        }),
                    )
                } else if result.value != predicted {
                    let detail = match &result.lower_witness {
                        Some(w) if result.value > predicted => {
                            format!(
                                "good coloring beyond the prediction:\n{}",
                                to_witness_string(w)
                            )
                        }
                        _ => format!("exhausted K_{} below the prediction", result.value),
                    };
                    (TableStatus::Mismatch, Some(detail))
                } else {
                    (TableStatus::Match, None)
                };
                TableRow {
                    spec: spec.to_string(),
                    predicted,
                    computed: Some(result.value),
                    nodes,
                    seconds: started.elapsed().as_secs_f64(),
                    status,
                    diagnostic,
                }
            }
            Err(Error::Resource(msg)) => TableRow {
                spec: spec.to_string(),
                predicted,
                computed: None,
                nodes: 0,
                seconds: started.elapsed().as_secs_f64(),
                status: TableStatus::Timeout,
                diagnostic: Some(msg),
            },
            Err(e) => return Err(e),
        };
        let stop = row.status == TableStatus::Mismatch;
        rows.push(row);
        if stop {
            break;
        }
    }
    Ok(rows)
}
