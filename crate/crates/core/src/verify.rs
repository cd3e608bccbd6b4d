//! Corpus-scale checks of the stable-cutset theorems over graph6 streams.
//!
//! Input lines are processed in fixed-size chunks on a worker pool; each chunk
//! yields a [`VerificationReport`] and reports merge associatively, so the
//! result does not depend on how the corpus was split.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cutset::{cut_vertices, find_stable_cutset, find_stable_cutset_avoiding, Separation};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::graph6::from_graph6;
use crate::gsc::GeneratingSequence;
use crate::recognize::Recognizer;

pub const DEFAULT_CHUNK_SIZE: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    /// At most `2n - 4` edges forces a stable cutset.
    Theorem1,
    /// At most `2n - 4` edges and `x` not the only cut vertex forces a stable
    /// cutset avoiding `x`.
    Corollary3,
    /// At most `2n - 3` edges forces a stable cutset or membership.
    Theorem5,
}

/// Which vertices `x` the corollary is checked for.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum VertexSelector {
    /// Every vertex that is not the only cut vertex.
    #[default]
    Admissible,
    /// Only these ids (ids beyond a graph's order are ignored for it).
    Named(Vec<VertexId>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    Theorem1,
    Corollary3(VertexSelector),
    Theorem5,
}

impl Check {
    pub fn theorem(&self) -> Theorem {
        match self {
            Check::Theorem1 => Theorem::Theorem1,
            Check::Corollary3(_) => Theorem::Corollary3,
            Check::Theorem5 => Theorem::Theorem5,
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub corpus: String,
    /// Worker threads, at least 1.
    pub parallelism: usize,
    pub chunk_size: usize,
    /// Keep the evidence for every passing check, not just the counts.
    pub record_witnesses: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            corpus: String::from("stdin"),
            parallelism: std::thread::available_parallelism().map_or(1, |n| n.get()),
            chunk_size: DEFAULT_CHUNK_SIZE,
            record_witnesses: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParseFailure {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub line: usize,
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vertex: Option<VertexId>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Evidence {
    Cutset(Separation),
    Member(GeneratingSequence),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PassWitness {
    pub line: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vertex: Option<VertexId>,
    pub evidence: Evidence,
}

/// Counts and findings of one run. `processed = passed + failed` and every
/// failure has exactly one counterexample.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub corpus: String,
    pub theorem: Theorem,
    pub processed: u64,
    pub skipped: u64,
    pub passed: u64,
    pub failed: u64,
    pub parse_errors: Vec<ParseFailure>,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub witnesses: Vec<PassWitness>,
    pub breakdown: BTreeMap<String, u64>,
    pub wall_time_secs: f64,
}

impl VerificationReport {
    pub fn empty(theorem: Theorem, corpus: impl Into<String>) -> Self {
        VerificationReport {
            corpus: corpus.into(),
            theorem,
            processed: 0,
            skipped: 0,
            passed: 0,
            failed: 0,
            parse_errors: Vec::new(),
            counterexamples: Vec::new(),
            witnesses: Vec::new(),
            breakdown: BTreeMap::new(),
            wall_time_secs: 0.0,
        }
    }

    /// Combines reports of disjoint parts of the same corpus. Findings are
    /// kept sorted by line, so the merge is associative and commutative.
    pub fn merge(mut self, other: VerificationReport) -> VerificationReport {
        debug_assert_eq!(self.theorem, other.theorem);
        self.processed += other.processed;
        self.skipped += other.skipped;
        self.passed += other.passed;
        self.failed += other.failed;
        self.parse_errors.extend(other.parse_errors);
        self.parse_errors.sort_by_key(|p| p.line);
        self.counterexamples.extend(other.counterexamples);
        self.counterexamples.sort_by_key(|c| (c.line, c.vertex));
        self.witnesses.extend(other.witnesses);
        self.witnesses.sort_by_key(|w| (w.line, w.vertex));
        for (k, v) in other.breakdown {
            *self.breakdown.entry(k).or_default() += v;
        }
        self.wall_time_secs = self.wall_time_secs.max(other.wall_time_secs);
        self
    }

    pub fn is_success(&self) -> bool {
        self.failed == 0 && self.parse_errors.is_empty()
    }

    fn bump(&mut self, key: &str) {
        *self.breakdown.entry(key.to_string()).or_default() += 1;
    }

    fn skip(&mut self, why: &str) {
        self.skipped += 1;
        self.bump(why);
    }

    fn pass(&mut self, line: usize, vertex: Option<VertexId>, evidence: Evidence, keep: bool) {
        self.processed += 1;
        self.passed += 1;
        if keep {
            self.witnesses.push(PassWitness { line, vertex, evidence });
        }
    }

    fn fail(&mut self, line: usize, graph6: &str, vertex: Option<VertexId>, detail: impl Into<String>) {
        self.processed += 1;
        self.failed += 1;
        self.counterexamples.push(Counterexample { line, graph6: graph6.to_string(), vertex, detail: detail.into() });
    }

    /// Multi-line plain-text summary.
    pub fn summary(&self) -> String {
        let mut out = format!(
            "{:?} on {}: processed {}, passed {}, failed {}, skipped {}, parse errors {} ({:.2}s)\n",
            self.theorem,
            self.corpus,
            self.processed,
            self.passed,
            self.failed,
            self.skipped,
            self.parse_errors.len(),
            self.wall_time_secs,
        );
        for (k, v) in &self.breakdown {
            out.push_str(&format!("  {k}: {v}\n"));
        }
        for c in &self.counterexamples {
            let at = c.vertex.map(|x| format!(" x={x}")).unwrap_or_default();
            out.push_str(&format!("  COUNTEREXAMPLE line {} {}{}: {}\n", c.line, c.graph6, at, c.detail));
        }
        for p in &self.parse_errors {
            out.push_str(&format!("  PARSE ERROR line {}: {}\n", p.line, p.message));
        }
        out
    }
}

fn valid_stable_cutset(g: &Graph, cert: &Separation, avoid: Option<VertexId>) -> bool {
    g.is_stable(cert.cutset) && cert.holds_in(g) && avoid.is_none_or(|x| !cert.cutset.contains(x))
}

/// `m <= 2n - k`, without underflow.
fn at_most(m: usize, n: usize, k: usize) -> bool {
    m + k <= 2 * n
}

struct Worker<'a> {
    check: &'a Check,
    keep: bool,
    recognizer: &'a Recognizer,
}

impl Worker<'_> {
    fn line(&self, report: &mut VerificationReport, line: usize, text: &str) {
        let g = match from_graph6(text) {
            Ok(g) => g,
            Err(e) => {
                report.parse_errors.push(ParseFailure { line, message: e.to_string() });
                return;
            }
        };
        if !g.is_connected() || g.n() == 0 {
            report.skip("skipped_disconnected");
            return;
        }
        match self.check {
            Check::Theorem1 => self.theorem1(report, line, text, &g),
            Check::Corollary3(sel) => self.corollary3(report, line, text, &g, sel),
            Check::Theorem5 => self.theorem5(report, line, text, &g),
        }
    }

    fn theorem1(&self, report: &mut VerificationReport, line: usize, text: &str, g: &Graph) {
        if !at_most(g.edge_count(), g.n(), 4) {
            report.skip("skipped_out_of_regime");
            return;
        }
        match find_stable_cutset(g) {
            Some(cert) if valid_stable_cutset(g, &cert, None) => {
                report.pass(line, None, Evidence::Cutset(cert), self.keep)
            }
            Some(_) => report.fail(line, text, None, "returned cutset does not verify"),
            None => report.fail(line, text, None, "no stable cutset found"),
        }
    }

    fn corollary3(&self, report: &mut VerificationReport, line: usize, text: &str, g: &Graph, sel: &VertexSelector) {
        if !at_most(g.edge_count(), g.n(), 4) {
            report.skip("skipped_out_of_regime");
            return;
        }
        report.bump("graphs_checked");
        let cuts = cut_vertices(g);
        let candidates: Vec<VertexId> = match sel {
            VertexSelector::Admissible => (0..g.n()).collect(),
            VertexSelector::Named(ids) => ids.iter().copied().filter(|&x| x < g.n()).collect(),
        };
        for x in candidates {
            if cuts == VertexSet::singleton(x) {
                report.skip("skipped_only_cut_vertex");
                continue;
            }
            match find_stable_cutset_avoiding(g, x) {
                Some(cert) if valid_stable_cutset(g, &cert, Some(x)) => {
                    report.pass(line, Some(x), Evidence::Cutset(cert), self.keep)
                }
                Some(_) => report.fail(line, text, Some(x), "returned cutset does not verify"),
                None => report.fail(line, text, Some(x), "no stable cutset avoiding x"),
            }
        }
    }

    fn theorem5(&self, report: &mut VerificationReport, line: usize, text: &str, g: &Graph) {
        let (n, m) = (g.n(), g.edge_count());
        if n < 3 {
            report.skip("skipped_small");
            return;
        }
        if !at_most(m, n, 3) {
            report.skip("skipped_out_of_regime");
            return;
        }
        let cutset = find_stable_cutset(g);
        if let Some(cert) = &cutset {
            if !valid_stable_cutset(g, cert, None) {
                report.fail(line, text, None, "returned cutset does not verify");
                return;
            }
        }
        let result = self.recognizer.recognize(g).expect("connected, n >= 3");
        if let Some(seq) = &result.certificate {
            if seq.build().as_ref() != Ok(g) {
                report.fail(line, text, None, "member certificate does not rebuild the graph");
                return;
            }
        }
        let extremal = m + 3 == 2 * n;
        if extremal {
            report.bump("extremal_checked");
        }
        match (cutset, result.certificate) {
            (Some(_), Some(_)) if extremal => {
                report.fail(line, text, None, "member of the class but has a stable cutset")
            }
            (None, None) => report.fail(line, text, None, "no stable cutset and not a member"),
            (_, Some(seq)) => {
                report.bump("via_member");
                report.pass(line, None, Evidence::Member(seq), self.keep)
            }
            (Some(cert), None) => {
                report.bump("via_cutset");
                report.pass(line, None, Evidence::Cutset(cert), self.keep)
            }
        }
    }
}

/// Runs `check` over graph6 `lines` (blank lines are ignored; line numbers
/// count every input line from 1).
pub fn verify<I>(check: &Check, lines: I, opts: &VerifyOptions) -> VerificationReport
where
    I: IntoIterator<Item = String>,
{
    let started = Instant::now();
    let recognizer = Recognizer::new();
    let worker = Worker { check, keep: opts.record_witnesses, recognizer: &recognizer };
    let chunk_size = opts.chunk_size.max(1);
    let batch_size = chunk_size * opts.parallelism.max(1);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(opts.parallelism.max(1)).build().expect("worker pool");

    let mut total = VerificationReport::empty(check.theorem(), opts.corpus.clone());
    let mut numbered = lines.into_iter().enumerate().map(|(i, s)| (i + 1, s));
    loop {
        let batch: Vec<(usize, String)> = numbered.by_ref().take(batch_size).collect();
        if batch.is_empty() {
            break;
        }
        let part = pool.install(|| {
            batch
                .par_chunks(chunk_size)
                .map(|chunk| {
                    let mut report = VerificationReport::empty(check.theorem(), opts.corpus.clone());
                    for (line, text) in chunk {
                        let text = text.trim_end_matches(['\n', '\r']);
                        if !text.trim().is_empty() {
                            worker.line(&mut report, *line, text);
                        }
                    }
                    report
                })
                .reduce(|| VerificationReport::empty(check.theorem(), opts.corpus.clone()), VerificationReport::merge)
        });
        total = total.merge(part);
    }
    total.wall_time_secs = started.elapsed().as_secs_f64();
    total
}

pub fn verify_theorem1<I: IntoIterator<Item = String>>(lines: I, opts: &VerifyOptions) -> VerificationReport {
    verify(&Check::Theorem1, lines, opts)
}

pub fn verify_corollary3<I: IntoIterator<Item = String>>(
    lines: I,
    selector: VertexSelector,
    opts: &VerifyOptions,
) -> VerificationReport {
    verify(&Check::Corollary3(selector), lines, opts)
}

pub fn verify_theorem5<I: IntoIterator<Item = String>>(lines: I, opts: &VerifyOptions) -> VerificationReport {
    verify(&Check::Theorem5, lines, opts)
}
