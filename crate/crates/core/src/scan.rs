//! Stream filter over graph6 records: keeps the total k-uniform graphs.
//!
//! Records are processed in batches on a worker pool and written back in
//! input order, so the output does not depend on the number of workers.

use std::io::{self, BufRead, Write};
use std::time::Duration;

use rayon::prelude::*;

use crate::domination::SolverConfig;
use crate::io::{decode_graph6, GRAPH6_HEADER};
use crate::uniformity::{total_uniformity, UniformityVerdict};

#[derive(Clone, Debug)]
pub struct ScanOptions {
    /// Keep only graphs uniform at this k; `None` keeps every uniform graph.
    pub k: Option<usize>,
    /// Worker threads; 0 uses the global pool.
    pub threads: usize,
    /// Records with more vertices are skipped.
    pub max_n: usize,
    /// Per-graph solver time limit.
    pub time_limit: Option<Duration>,
    /// Emit a progress line on the diagnostics stream every this many records.
    pub progress_every: Option<usize>,
    pub batch_size: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            k: None,
            threads: 0,
            max_n: 64,
            time_limit: None,
            progress_every: None,
            batch_size: 4096,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ScanSummary {
    pub read: usize,
    pub matched: usize,
    pub malformed: usize,
    pub undefined: usize,
    pub skipped: usize,
    pub errors: usize,
}

impl std::fmt::Display for ScanSummary {
    /// `summary read=R matched=M malformed=X undefined=U skipped=S errors=E`
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "summary read={} matched={} malformed={} undefined={} skipped={} errors={}",
            self.read, self.matched, self.malformed, self.undefined, self.skipped, self.errors
        )
    }
}

enum Outcome {
    Match,
    Reject,
    Malformed(String),
    Undefined,
    Skipped,
    Failed(String),
}

fn classify(line: &str, opts: &ScanOptions) -> Outcome {
    let g = match decode_graph6(line) {
        Ok(g) => g,
        Err(e) => return Outcome::Malformed(e.to_string()),
    };
    if g.n() > opts.max_n {
        return Outcome::Skipped;
    }
    let config = match opts.time_limit {
        Some(limit) => SolverConfig::with_time_limit(limit),
        None => SolverConfig::default(),
    };
    match total_uniformity(&g, &config) {
        Ok(UniformityVerdict::Undefined) => Outcome::Undefined,
        Ok(UniformityVerdict::Uniform(k)) if opts.k.is_none_or(|want| want == k) => Outcome::Match,
        Ok(_) => Outcome::Reject,
        Err(e) => Outcome::Failed(e.to_string()),
    }
}

/// Lines that are not records: blanks, the graph6 header on its own, and
/// summary lines from an earlier scan.
fn is_passthrough(line: &str) -> bool {
    line.is_empty() || line == GRAPH6_HEADER || line.starts_with("summary ")
}

/// Reads graph6 records from `input`, writes matching records verbatim to
/// `output` followed by the summary line, and reports malformed records and
/// solver failures to `diagnostics`.
pub fn scan<R: BufRead, W: Write, D: Write>(
    input: R,
    mut output: W,
    mut diagnostics: D,
    opts: &ScanOptions,
) -> io::Result<ScanSummary> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads)
        .build()
        .map_err(io::Error::other)?;
    let mut summary = ScanSummary::default();
    let mut lines = input.lines().enumerate();
    let mut batch: Vec<(usize, String)> = Vec::with_capacity(opts.batch_size);
    loop {
        batch.clear();
        for (i, line) in lines.by_ref() {
            let line = line?;
            let line = line.trim_end_matches('\r');
            if is_passthrough(line) {
                continue;
            }
            batch.push((i + 1, line.to_owned()));
            if batch.len() == opts.batch_size.max(1) {
                break;
            }
        }
        if batch.is_empty() {
            break;
        }
        let outcomes: Vec<Outcome> =
            pool.install(|| batch.par_iter().map(|(_, l)| classify(l, opts)).collect());
        for ((lineno, line), outcome) in batch.iter().zip(outcomes) {
            summary.read += 1;
            match outcome {
                Outcome::Match => {
                    summary.matched += 1;
                    writeln!(output, "{line}")?;
                }
                Outcome::Reject => {}
                Outcome::Malformed(msg) => {
                    summary.malformed += 1;
                    writeln!(diagnostics, "line {lineno}: {msg}")?;
                }
                Outcome::Undefined => summary.undefined += 1,
                Outcome::Skipped => summary.skipped += 1,
                Outcome::Failed(msg) => {
                    summary.errors += 1;
                    writeln!(diagnostics, "line {lineno}: {msg}")?;
                }
            }
            if let Some(every) = opts.progress_every.filter(|&e| e > 0) {
                if summary.read % every == 0 {
                    writeln!(diagnostics, "progress {}", &summary.to_string()["summary ".len()..])?;
                }
            }
        }
    }
    writeln!(output, "{summary}")?;
    output.flush()?;
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(input: &str, opts: &ScanOptions) -> (String, String, ScanSummary) {
        let mut out = Vec::new();
        let mut diag = Vec::new();
        let summary = scan(input.as_bytes(), &mut out, &mut diag, opts).unwrap();
        (
            String::from_utf8(out).unwrap(),
            String::from_utf8(diag).unwrap(),
            summary,
        )
    }

    #[test]
    fn empty_input() {
        let (out, diag, summary) = run("", &ScanOptions::default());
        assert_eq!(summary, ScanSummary::default());
        assert_eq!(out, "summary read=0 matched=0 malformed=0 undefined=0 skipped=0 errors=0\n");
        assert!(diag.is_empty());
    }

    #[test]
    fn filters_and_reports() {
        // K3, P3, K2 + isolated vertex, garbage, C6 (4-uniform), P4
        let input = "Bw\nBg\nB_\nnot graph6\nEhEG\nCh\n";
        let (out, diag, summary) = run(input, &ScanOptions::default());
        assert_eq!(out.lines().collect::<Vec<_>>()[..3], ["Bw", "Bg", "EhEG"]);
        assert_eq!(summary.read, 6);
        assert_eq!(summary.matched, 3);
        assert_eq!(summary.malformed, 1);
        assert_eq!(summary.undefined, 1);
        assert!(diag.starts_with("line 4: malformed graph6"));

        let k4 = ScanOptions {
            k: Some(4),
            ..Default::default()
        };
        let (out, _, summary) = run(input, &k4);
        assert_eq!(out.lines().next(), Some("EhEG"));
        assert_eq!(summary.matched, 1);
    }

    #[test]
    fn skips_large_and_passthrough_lines() {
        let opts = ScanOptions {
            max_n: 2,
            progress_every: Some(1),
            ..Default::default()
        };
        let (out, diag, summary) = run(">>graph6<<\n\nA_\nBw\nsummary read=9\n", &opts);
        assert_eq!(summary.read, 2);
        assert_eq!(summary.skipped, 1);
        assert!(out.starts_with("A_\n"));
        assert_eq!(diag.lines().filter(|l| l.starts_with("progress ")).count(), 2);
    }
}
