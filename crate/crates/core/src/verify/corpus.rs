//! Corpus specifications, records and the parallel runner.

use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::claims::evaluate;
use super::sample::{closed_dense_sample, perturbed_extremal};
use super::{CheckConfig, ClaimId, TheoremReport, Verdict};
use crate::error::{Error, Result};
use crate::graph::{
    extremal_graph, graph_from_pair_mask, is_connected, parse_graph6, random_graph, Graph, GraphEnumerator, Params,
};

/// Records are evaluated in blocks of this many, keeping memory bounded.
const CHUNK: usize = 2048;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Enumerated,
    Sampled,
    File,
    Inline,
}

/// A graph with enough provenance to regenerate it: `graph_id` is itself a
/// corpus spec (or `file:line`) yielding exactly this graph.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusRecord {
    pub index: usize,
    pub graph: Graph,
    pub source: Source,
    pub graph_id: String,
}

/// Parsed form of a corpus argument.
///
/// * `enumerate:<n>[:connected]`: every labelled graph on `n ≤ 7` vertices
/// * `sample:gnp:<n>:<p>:<count>:<seed>[:<min-connectivity>]`
/// * `sample:perturb:<count>:<seed>`: extremal graph plus 1 to 10 random edges
/// * `sample:closed:<count>:<seed>`: dense `(n−1)`-closed graphs
/// * `extremal`: the extremal graph of the run parameters
/// * `g6:<string>`: a single graph6 string
/// * anything else: a file with one graph6 string per line
#[derive(Debug, Clone, PartialEq)]
pub enum CorpusSpec {
    Enumerate { n: usize, connected: bool },
    Gnp { n: usize, p: f64, count: usize, seed: u64, min_connectivity: usize },
    Perturb { count: usize, seed: u64 },
    Closed { count: usize, seed: u64 },
    Extremal,
    Inline(String),
    File(PathBuf),
}

fn field<T: std::str::FromStr>(spec: &str, parts: &[&str], i: usize, what: &str) -> Result<T> {
    parts
        .get(i)
        .ok_or_else(|| Error::InvalidParams(format!("corpus `{spec}`: missing {what}")))?
        .parse()
        .map_err(|_| Error::InvalidParams(format!("corpus `{spec}`: bad {what} `{}`", parts[i])))
}

pub fn parse_corpus_spec(spec: &str) -> Result<CorpusSpec> {
    if let Some(g6) = spec.strip_prefix("g6:") {
        return Ok(CorpusSpec::Inline(g6.to_string()));
    }
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        ["enumerate", rest @ ..] => {
            let connected = match rest.get(1) {
                None => false,
                Some(&"connected") => true,
                Some(other) => return Err(Error::InvalidParams(format!("corpus `{spec}`: unknown flag `{other}`"))),
            };
            if rest.len() > 2 {
                return Err(Error::InvalidParams(format!("corpus `{spec}`: too many fields")));
            }
            Ok(CorpusSpec::Enumerate { n: field(spec, &parts, 1, "order")?, connected })
        }
        ["sample", "gnp", ..] => {
            if !(6..=7).contains(&parts.len()) {
                return Err(Error::InvalidParams(format!("corpus `{spec}`: expected sample:gnp:n:p:count:seed[:minconn]")));
            }
            let p: f64 = field(spec, &parts, 3, "probability")?;
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParams(format!("corpus `{spec}`: probability outside [0, 1]")));
            }
            Ok(CorpusSpec::Gnp {
                n: field(spec, &parts, 2, "order")?,
                p,
                count: field(spec, &parts, 4, "count")?,
                seed: field(spec, &parts, 5, "seed")?,
                min_connectivity: if parts.len() == 7 { field(spec, &parts, 6, "connectivity")? } else { 0 },
            })
        }
        ["sample", kind @ ("perturb" | "closed"), ..] => {
            if parts.len() != 4 {
                return Err(Error::InvalidParams(format!("corpus `{spec}`: expected sample:{kind}:count:seed")));
            }
            let count = field(spec, &parts, 2, "count")?;
            let seed = field(spec, &parts, 3, "seed")?;
            Ok(if *kind == "perturb" { CorpusSpec::Perturb { count, seed } } else { CorpusSpec::Closed { count, seed } })
        }
        ["sample", ..] => Err(Error::InvalidParams(format!("corpus `{spec}`: unknown sampler"))),
        ["extremal"] => Ok(CorpusSpec::Extremal),
        _ => Ok(CorpusSpec::File(PathBuf::from(spec))),
    }
}

type Records = Box<dyn Iterator<Item = Result<CorpusRecord>> + Send>;

fn need(params: Option<Params>, what: &str) -> Result<Params> {
    params.ok_or_else(|| Error::InvalidParams(format!("{what} corpus needs --k, --t and --n")))
}

impl CorpusSpec {
    /// The records of this corpus. Parameterized corpora (`perturb`,
    /// `closed`, `extremal`) take `params`; files are read and parsed eagerly
    /// so that malformed lines are reported before any work starts.
    pub fn records(&self, params: Option<Params>) -> Result<Records> {
        Ok(match self.clone() {
            CorpusSpec::Enumerate { n, connected } => {
                let it = GraphEnumerator::new(n)?;
                Box::new(
                    (0..it.total())
                        .map(move |mask| (mask, graph_from_pair_mask(n, mask)))
                        .filter(move |(_, g)| !connected || is_connected(g))
                        .enumerate()
                        .map(move |(index, (mask, graph))| {
                            Ok(CorpusRecord {
                                index,
                                graph,
                                source: Source::Enumerated,
                                graph_id: format!("enum:{n}:{mask}"),
                            })
                        }),
                )
            }
            CorpusSpec::Gnp { n, p, count, seed, min_connectivity } => Box::new((0..count).map(move |i| {
                let s = seed.wrapping_add(i as u64);
                Ok(CorpusRecord {
                    index: i,
                    graph: random_graph(n, p, s, min_connectivity)?,
                    source: Source::Sampled,
                    graph_id: format!("sample:gnp:{n}:{p}:1:{s}:{min_connectivity}"),
                })
            })),
            CorpusSpec::Perturb { count, seed } => {
                let p = need(params, "perturb")?;
                Box::new((0..count).map(move |i| {
                    let s = seed.wrapping_add(i as u64);
                    let extra = 1 + (s % 10) as usize;
                    Ok(CorpusRecord {
                        index: i,
                        graph: perturbed_extremal(&p, extra, s)?,
                        source: Source::Sampled,
                        graph_id: format!("sample:perturb:1:{s}"),
                    })
                }))
            }
            CorpusSpec::Closed { count, seed } => {
                let p = need(params, "closed")?;
                Box::new((0..count).map(move |i| {
                    let s = seed.wrapping_add(i as u64);
                    Ok(CorpusRecord {
                        index: i,
                        graph: closed_dense_sample(&p, s)?,
                        source: Source::Sampled,
                        graph_id: format!("sample:closed:1:{s}"),
                    })
                }))
            }
            CorpusSpec::Extremal => {
                let p = need(params, "extremal")?;
                let graph = extremal_graph(&p)?;
                Box::new(std::iter::once(Ok(CorpusRecord {
                    index: 0,
                    graph,
                    source: Source::Inline,
                    graph_id: "extremal".into(),
                })))
            }
            CorpusSpec::Inline(g6) => {
                let graph = parse_graph6(g6.as_bytes())?;
                Box::new(std::iter::once(Ok(CorpusRecord {
                    index: 0,
                    graph,
                    source: Source::Inline,
                    graph_id: format!("g6:{g6}"),
                })))
            }
            CorpusSpec::File(path) => {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Error::InvalidParams(format!("{}: {e}", path.display())))?;
                let mut out = Vec::new();
                for (i, line) in text.lines().enumerate() {
                    let line = line.trim();
                    if line.is_empty() || line.starts_with('#') {
                        continue;
                    }
                    let graph = parse_graph6(line.as_bytes()).map_err(|e| {
                        Error::InvalidParams(format!("{}:{}: {e}", path.display(), i + 1))
                    })?;
                    out.push(Ok(CorpusRecord {
                        index: out.len(),
                        graph,
                        source: Source::File,
                        graph_id: format!("file:{}:{}", path.display(), i + 1),
                    }));
                }
                Box::new(out.into_iter())
            }
        })
    }
}

/// Verdict counts over a run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub verified: u64,
    pub vacuous: u64,
    pub unknown: u64,
    pub counterexamples: u64,
}

impl Summary {
    pub fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Verified => self.verified += 1,
            Verdict::Vacuous => self.vacuous += 1,
            Verdict::Unknown => self.unknown += 1,
            Verdict::Counterexample => self.counterexamples += 1,
        }
    }

    pub fn total(&self) -> u64 {
        self.verified + self.vacuous + self.unknown + self.counterexamples
    }
}

fn failed_record(claim: ClaimId, index: usize, err: &Error) -> TheoremReport {
    let mut r = TheoremReport::new(claim, true, None);
    r.graph_id = format!("record:{index}");
    r.note = Some(format!("record could not be generated: {err}"));
    r
}

/// Evaluates every claim on every record with `workers` threads, handing
/// reports to `sink` in input order (record-major, then claim order).
/// Output is independent of the worker count.
pub fn run_corpus_with<I, F>(
    records: I,
    claims: &[ClaimId],
    cfg: &CheckConfig,
    workers: usize,
    mut sink: F,
) -> Result<Summary>
where
    I: IntoIterator<Item = Result<CorpusRecord>>,
    F: FnMut(TheoremReport),
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::InvalidParams(format!("thread pool: {e}")))?;
    let mut summary = Summary::default();
    let mut iter = records.into_iter().enumerate();
    loop {
        let chunk: Vec<(usize, Result<CorpusRecord>)> = iter.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let reports: Vec<TheoremReport> = pool.install(|| {
            chunk
                .par_iter()
                .flat_map_iter(|(i, rec)| {
                    claims.iter().map(move |&c| match rec {
                        Ok(r) => evaluate(c, &r.graph, &r.graph_id, cfg),
                        Err(e) => failed_record(c, *i, e),
                    })
                })
                .collect()
        });
        for r in reports {
            summary.add(r.verdict);
            sink(r);
        }
    }
    Ok(summary)
}

/// Collecting form of [`run_corpus_with`].
pub fn run_corpus<I>(records: I, claims: &[ClaimId], cfg: &CheckConfig, workers: usize) -> Result<Vec<TheoremReport>>
where
    I: IntoIterator<Item = Result<CorpusRecord>>,
{
    let mut out = Vec::new();
    run_corpus_with(records, claims, cfg, workers, |r| out.push(r))?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_grammar() {
        assert_eq!(parse_corpus_spec("enumerate:5").unwrap(), CorpusSpec::Enumerate { n: 5, connected: false });
        assert_eq!(
            parse_corpus_spec("enumerate:6:connected").unwrap(),
            CorpusSpec::Enumerate { n: 6, connected: true }
        );
        assert!(parse_corpus_spec("enumerate:x").is_err());
        assert!(parse_corpus_spec("enumerate:5:bogus").is_err());
        assert_eq!(
            parse_corpus_spec("sample:gnp:10:0.5:20:7:1").unwrap(),
            CorpusSpec::Gnp { n: 10, p: 0.5, count: 20, seed: 7, min_connectivity: 1 }
        );
        assert!(parse_corpus_spec("sample:gnp:10:1.5:20:7").is_err());
        assert_eq!(parse_corpus_spec("sample:perturb:200:1").unwrap(), CorpusSpec::Perturb { count: 200, seed: 1 });
        assert_eq!(parse_corpus_spec("sample:closed:3:9").unwrap(), CorpusSpec::Closed { count: 3, seed: 9 });
        assert!(parse_corpus_spec("sample:walk:1:2").is_err());
        assert_eq!(parse_corpus_spec("g6:Bw").unwrap(), CorpusSpec::Inline("Bw".into()));
        assert_eq!(parse_corpus_spec("graphs.g6").unwrap(), CorpusSpec::File("graphs.g6".into()));
    }

    #[test]
    fn sampled_ids_regenerate_their_graph() {
        let spec = parse_corpus_spec("sample:gnp:9:0.4:5:100:1").unwrap();
        for rec in spec.records(None).unwrap() {
            let rec = rec.unwrap();
            let again = parse_corpus_spec(&rec.graph_id).unwrap().records(None).unwrap().next().unwrap().unwrap();
            assert_eq!(again.graph, rec.graph);
        }
    }

    #[test]
    fn empty_and_ordered() {
        let cfg = CheckConfig::default();
        assert!(run_corpus(std::iter::empty(), &[ClaimId::T5], &cfg, 2).unwrap().is_empty());
        let recs = || parse_corpus_spec("enumerate:4:connected").unwrap().records(None).unwrap();
        let one = run_corpus(recs(), &[ClaimId::T5, ClaimId::T1], &cfg, 1).unwrap();
        let four = run_corpus(recs(), &[ClaimId::T5, ClaimId::T1], &cfg, 4).unwrap();
        assert_eq!(one, four);
        assert_eq!(one.len(), 2 * 38);
        assert!(one.iter().all(|r| r.verdict != Verdict::Counterexample));
    }

    #[test]
    fn generation_failures_are_reported_per_record() {
        let cfg = CheckConfig::default();
        let recs = vec![Err(Error::RetriesExhausted(3))];
        let out = run_corpus(recs, &[ClaimId::L4], &cfg, 1).unwrap();
        assert_eq!(out[0].verdict, Verdict::Unknown);
    }
}
