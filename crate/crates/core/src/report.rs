//! Rendering of filled transition tables as aligned text or JSON records.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hodge::BettiVector;
use crate::scenario::ScenarioKind;
use crate::transition::{verify_table, CheckResult, Corner, HomologicalType, TransitionTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Records,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "records" => Ok(Format::Records),
            other => Err(Error::OutOfRange(format!("unknown format `{other}`; expected text or records"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Rows {
    pub y: BettiVector,
    pub ybar: BettiVector,
    pub ytilde: BettiVector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportRecord {
    pub name: String,
    pub kind: ScenarioKind,
    pub htype: HomologicalType,
    pub rows: Rows,
    pub input_corner: Corner,
    pub trivial: bool,
    pub checks: Vec<CheckResult>,
    pub notes: Vec<String>,
}

impl ReportRecord {
    /// Verifies `table` and packages the result.
    pub fn from_table(name: &str, kind: ScenarioKind, table: &TransitionTable, notes: Vec<String>) -> Self {
        ReportRecord {
            name: name.to_string(),
            kind,
            htype: table.htype,
            rows: Rows {
                y: table.y,
                ybar: table.ybar,
                ytilde: table.ytilde,
            },
            input_corner: table.input_corner,
            trivial: table.htype.is_trivial(),
            checks: verify_table(table),
            notes,
        }
    }

    pub fn table(&self) -> TransitionTable {
        TransitionTable {
            y: self.rows.y,
            ybar: self.rows.ybar,
            ytilde: self.rows.ytilde,
            htype: self.htype,
            input_corner: self.input_corner,
        }
    }

    /// Re-runs every check against the stored rows, ignoring the stored results.
    pub fn recheck(&self) -> Vec<CheckResult> {
        verify_table(&self.table())
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn row_label(i: usize) -> &'static str {
    ["Y", "Ȳ", "Ỹ"][i]
}

fn render_text(r: &ReportRecord) -> String {
    let mut out = String::new();
    let h = &r.htype;
    let _ = writeln!(out, "{} ({})", r.name, r.kind);
    let _ = writeln!(out, "h[T] = (k',k'',c',c'') = {h}   k = {}, c = {}", h.k(), h.c());
    let rows = [&r.rows.y, &r.rows.ybar, &r.rows.ytilde];
    let width = rows
        .iter()
        .flat_map(|b| [b.b(2), b.b(3), b.b(4)])
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1)
        .max(2);
    let _ = writeln!(out, "   {:>w$}  {:>w$}  {:>w$}", "b2", "b3", "b4", w = width);
    for (i, b) in rows.iter().enumerate() {
        let marker = match (i, r.input_corner) {
            (0, Corner::Y) | (2, Corner::Ytilde) => "  (input)",
            _ => "",
        };
        let _ = writeln!(
            out,
            "{}  {:>w$}  {:>w$}  {:>w$}{marker}",
            row_label(i),
            b.b(2),
            b.b(3),
            b.b(4),
            w = width
        );
    }
    if r.trivial {
        let _ = writeln!(out, "trivial: c' = c'' = 0");
    }
    for note in &r.notes {
        let _ = writeln!(out, "note: {note}");
    }
    let failed: Vec<&CheckResult> = r.checks.iter().filter(|c| !c.passed).collect();
    if failed.is_empty() {
        let _ = writeln!(out, "all checks passed");
    } else {
        for c in failed {
            let _ = writeln!(out, "FAILED {}: {}", c.name, c.detail);
        }
    }
    out
}

/// Deterministic rendering; `Records` is one JSON object terminated by a newline.
pub fn render_table(r: &ReportRecord, format: Format) -> String {
    match format {
        Format::Text => render_text(r),
        Format::Records => {
            let mut s = serde_json::to_string(r).expect("records serialize");
            s.push('\n');
            s
        }
    }
}

/// Reads newline-separated JSON records; blank lines are skipped.
pub fn parse_records(text: &str) -> Result<Vec<ReportRecord>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let rec = serde_json::from_str(line).map_err(|e| Error::Parse {
            line: i + 1,
            column: e.column(),
            message: e.to_string(),
        })?;
        out.push(rec);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transition::fill_table;

    fn quintic_plane() -> ReportRecord {
        let h = HomologicalType::new(1, 0, 15, 15).unwrap();
        let t = fill_table(&h, &BettiVector([1, 0, 2, 174, 2, 0, 1]), Corner::Y).unwrap();
        ReportRecord::from_table("quintic-plane", ScenarioKind::Conifold, &t, vec![])
    }

    #[test]
    fn text_layout() {
        let s = render_table(&quintic_plane(), Format::Text);
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[0], "quintic-plane (conifold)");
        assert_eq!(lines[2], "    b2   b3   b4");
        assert_eq!(lines[3], "Y    2  174    2  (input)");
        assert_eq!(lines[4], "Ȳ    1  189    2");
        assert_eq!(lines[5], "Ỹ    1  204    1");
        assert_eq!(*lines.last().unwrap(), "all checks passed");
        assert_eq!(s, render_table(&quintic_plane(), Format::Text));
    }

    #[test]
    fn empty_checks_pass() {
        let mut r = quintic_plane();
        r.checks.clear();
        assert!(render_table(&r, Format::Text).ends_with("all checks passed\n"));
    }

    #[test]
    fn failures_are_listed() {
        let mut r = quintic_plane();
        r.rows.ybar.0[3] = 190;
        r.checks = r.recheck();
        let s = render_table(&r, Format::Text);
        assert!(s.contains("FAILED euler_contraction"));
        assert!(!s.contains("all checks passed"));
    }

    #[test]
    fn records_round_trip() {
        let r = quintic_plane();
        let s = render_table(&r, Format::Records);
        assert_eq!(s.lines().count(), 1);
        let back = parse_records(&s).unwrap();
        assert_eq!(back, vec![r]);
    }

    #[test]
    fn malformed_records_report_position() {
        let good = render_table(&quintic_plane(), Format::Records);
        let text = format!("{good}\n{{\"name\": 3}}\n");
        match parse_records(&text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn format_names() {
        assert_eq!("text".parse::<Format>().unwrap(), Format::Text);
        assert_eq!("records".parse::<Format>().unwrap(), Format::Records);
        assert!("json".parse::<Format>().is_err());
    }
}
