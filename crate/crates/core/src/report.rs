//! Tab-separated criteria reports.
//!
//! One header line, then one row per verdict. Fractions are written as
//! reduced `num/den`; nothing verdict-bearing is floating point. Output is
//! UTF-8 with LF line endings and depends only on the input rows.

use std::io::{self, Write};

use crate::criteria::{CriteriaReport, CriterionId, Relation, Verdict};
use crate::psi::{fraction_text, ExactRational};

pub const HEADER: [&str; 10] = [
    "group",
    "order",
    "criterion",
    "k_used",
    "lhs",
    "rhs",
    "relation",
    "verdict",
    "oracle",
    "consistency",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportRow {
    pub group: String,
    pub order: u64,
    pub criterion: CriterionId,
    pub k_used: Option<u32>,
    pub lhs: ExactRational,
    pub rhs: ExactRational,
    pub relation: Relation,
    pub verdict: Verdict,
    pub oracle: Option<bool>,
    pub consistency: bool,
}

impl ReportRow {
    fn fields(&self) -> [String; 10] {
        [
            sanitize(&self.group),
            self.order.to_string(),
            self.criterion.to_string(),
            self.k_used
                .map_or_else(|| "-".to_string(), |k| k.to_string()),
            fraction_text(&self.lhs),
            fraction_text(&self.rhs),
            self.relation.to_string(),
            self.verdict.to_string(),
            self.oracle
                .map_or_else(|| "-".to_string(), |b| b.to_string()),
            self.consistency.to_string(),
        ]
    }
}

fn sanitize(text: &str) -> String {
    text.chars()
        .map(|c| {
            if c == '\t' || c == '\n' || c == '\r' {
                ' '
            } else {
                c
            }
        })
        .collect()
}

/// Rows for one report, in criterion order.
pub fn rows(report: &CriteriaReport) -> Vec<ReportRow> {
    report
        .verdicts
        .iter()
        .map(|v| ReportRow {
            group: report.group_name.clone(),
            order: report.order,
            criterion: v.criterion,
            k_used: v.k_used,
            lhs: v.lhs.clone(),
            rhs: v.rhs.clone(),
            relation: v.relation,
            verdict: v.verdict,
            oracle: report.oracle_solvable,
            consistency: report.consistency,
        })
        .collect()
}

pub fn write_report<W: Write>(rows: &[ReportRow], mut out: W) -> io::Result<()> {
    writeln!(out, "{}", HEADER.join("\t"))?;
    for row in rows {
        writeln!(out, "{}", row.fields().join("\t"))?;
    }
    out.flush()
}

/// Whole report as a string, groups in the order given.
pub fn render(reports: &[CriteriaReport]) -> String {
    let all: Vec<ReportRow> = reports.iter().flat_map(rows).collect();
    let mut buf = Vec::new();
    write_report(&all, &mut buf).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("report is UTF-8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::criteria::{run_all, RunOptions};

    #[test]
    fn empty_report_is_header_only() {
        let mut buf = Vec::new();
        write_report(&[], &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "group\torder\tcriterion\tk_used\tlhs\trhs\trelation\tverdict\toracle\tconsistency\n"
        );
    }

    #[test]
    fn a5_azad_khosravi_row() {
        let report = run_all(&catalog("A5").unwrap(), &RunOptions::default());
        let text = render(&[report]);
        let line = text
            .lines()
            .find(|l| l.contains("\tAzadKhosravi\t"))
            .unwrap();
        assert_eq!(
            line,
            "A5\t60\tAzadKhosravi\t1\t211/1\t211/1\tstrictly_greater\tInconclusive\tfalse\ttrue"
        );
        let line = text.lines().find(|l| l.contains("\tHLM2018\t")).unwrap();
        assert!(line.contains("\t211/1\t40425/167\t"), "{line}");
        assert!(!text.contains('\r'));
    }

    #[test]
    fn rows_follow_input_then_criterion_order() {
        let groups = [catalog("S3").unwrap(), catalog("Z5").unwrap()];
        let reports: Vec<_> = groups
            .iter()
            .map(|g| run_all(g, &RunOptions::default()))
            .collect();
        let text = render(&reports);
        let keys: Vec<(String, String)> = text
            .lines()
            .skip(1)
            .map(|l| {
                let f: Vec<_> = l.split('\t').collect();
                (f[0].to_string(), f[2].to_string())
            })
            .collect();
        assert_eq!(keys.len(), 18);
        let expected: Vec<(String, String)> = ["S3", "Z5"]
            .iter()
            .flat_map(|g| {
                CriterionId::ALL
                    .iter()
                    .map(move |c| (g.to_string(), c.to_string()))
            })
            .collect();
        assert_eq!(keys, expected);
        assert_eq!(render(&reports), text);
    }
}
