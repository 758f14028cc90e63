//! Report serialization for the `stk` command-line tool.

use std::io::{self, Write};

use serde::Serialize;
use stk_core::verify::{Summary, TheoremReport};

/// CSV column order.
pub const CSV_HEADER: [&str; 9] =
    ["claim_id", "graph_id", "n", "e", "kappa", "hypothesis", "conclusion", "verdict", "witness_summary"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

fn conclusion_cell(c: Option<bool>) -> &'static str {
    match c {
        Some(true) => "true",
        Some(false) => "false",
        None => "unknown",
    }
}

fn csv_row(r: &TheoremReport) -> [String; 9] {
    [
        r.claim_id.to_string(),
        r.graph_id.clone(),
        r.n.to_string(),
        r.e.to_string(),
        r.kappa.map(|k| k.to_string()).unwrap_or_default(),
        r.hypothesis_holds.to_string(),
        conclusion_cell(r.conclusion_holds).to_string(),
        r.verdict.to_string(),
        r.witness_summary(),
    ]
}

/// Streams reports as JSON lines or CSV rows. The CSV header is written on
/// construction, so an empty run still produces it.
pub struct ReportWriter<W: Write> {
    inner: Inner<W>,
}

enum Inner<W: Write> {
    Json(W),
    Csv(csv::Writer<W>),
}

impl<W: Write> ReportWriter<W> {
    pub fn new(out: W, format: ReportFormat) -> io::Result<Self> {
        let inner = match format {
            ReportFormat::Json => Inner::Json(out),
            ReportFormat::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(CSV_HEADER)?;
                Inner::Csv(w)
            }
        };
        Ok(ReportWriter { inner })
    }

    pub fn write(&mut self, r: &TheoremReport) -> io::Result<()> {
        match &mut self.inner {
            Inner::Json(w) => {
                serde_json::to_writer(&mut *w, r)?;
                w.write_all(b"\n")
            }
            Inner::Csv(w) => Ok(w.write_record(csv_row(r))?),
        }
    }

    /// Appends the summary line (JSON only; CSV output stays rectangular).
    pub fn finish(self, summary: Option<&Summary>) -> io::Result<()> {
        match self.inner {
            Inner::Json(mut w) => {
                if let Some(s) = summary {
                    #[derive(Serialize)]
                    struct Block<'a> {
                        summary: &'a Summary,
                    }
                    serde_json::to_writer(&mut w, &Block { summary: s })?;
                    w.write_all(b"\n")?;
                }
                w.flush()
            }
            Inner::Csv(mut w) => w.flush(),
        }
    }
}

/// Renders reports in one go.
pub fn emit_report(reports: &[TheoremReport], format: ReportFormat) -> String {
    let mut buf = Vec::new();
    let mut w = ReportWriter::new(&mut buf, format).expect("writing to memory");
    for r in reports {
        w.write(r).expect("writing to memory");
    }
    w.finish(None).expect("writing to memory");
    String::from_utf8(buf).expect("reports are UTF-8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use stk_core::verify::{evaluate, CheckConfig, ClaimId};
    use stk_core::Graph;

    fn sample() -> TheoremReport {
        evaluate(ClaimId::T5, &Graph::cycle(5), "g6:Dhc", &CheckConfig::default())
    }

    #[test]
    fn empty_csv_is_header_only() {
        assert_eq!(
            emit_report(&[], ReportFormat::Csv),
            "claim_id,graph_id,n,e,kappa,hypothesis,conclusion,verdict,witness_summary\n"
        );
        assert_eq!(emit_report(&[], ReportFormat::Json), "");
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let text = emit_report(&[r.clone()], ReportFormat::Json);
        let back: TheoremReport = serde_json::from_str(text.trim()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn golden_lines() {
        let r = sample();
        assert_eq!(
            emit_report(&[r.clone()], ReportFormat::Csv).lines().nth(1).unwrap(),
            "T5,g6:Dhc,5,5,2,true,true,Verified,graph=true closure=true"
        );
        assert_eq!(
            emit_report(&[r], ReportFormat::Json).trim(),
            r#"{"claim_id":"T5","graph_id":"g6:Dhc","n":5,"e":5,"kappa":2,"hypothesis_holds":true,"conclusion_holds":true,"witness":{"equivalence":{"graph":true,"closure":true}},"verdict":"Verified"}"#
        );
    }
}
