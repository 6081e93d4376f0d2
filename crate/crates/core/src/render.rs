//! Triangle rendering with hockey-stick highlighting.
//!
//! Text output marks stick cells as `[x]` and puck cells as `(x)`. CSV and
//! JSON keep the values undecorated and carry the marks separately.

use serde::Serialize;

use crate::coeff::{global_cache, Coefficient, TriangleKind, TriangleRow};
use crate::error::{Error, Result};
use crate::identity::{Family, IdentityCase};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mark {
    Stick,
    Puck,
}

impl Mark {
    pub fn name(self) -> &'static str {
        match self {
            Mark::Stick => "stick",
            Mark::Puck => "puck",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RenderSpec {
    pub kind: TriangleKind,
    pub rows: u64,
    pub highlight: Option<IdentityCase>,
    pub format: RenderFormat,
}

/// A highlighted triangle cell: row, position, marker class.
pub type MarkedCell = (u64, i64, Mark);

/// Cells taking part in `case`, drawn in a triangle of the given kind.
pub fn marked_cells(kind: TriangleKind, case: IdentityCase) -> Result<Vec<MarkedCell>> {
    let (n, k) = (case.n as i64, case.k as i64);
    let stick = |row: i64, pos: i64| (row as u64, pos, Mark::Stick);
    let puck = |row: i64, pos: i64| (row as u64, pos, Mark::Puck);
    let cells = match (kind, case.family) {
        (TriangleKind::Pascal, Family::PascalHockey | Family::BigStickPuck) => (0..=k)
            .map(|i| stick(n + 2 * i, i))
            .chain((0..=k / 2).map(|j| puck(n + 2 * k - j + 1, k - 2 * j)))
            .collect(),
        (TriangleKind::Pascal, Family::LittleStick) => (0..=k)
            .map(|i| stick(n + i, i))
            .chain(std::iter::once(puck(n + k + 1, k)))
            .collect(),
        (TriangleKind::Trinomial, Family::TrinomialHockey) => (0..=k)
            .map(|i| stick(n + i, n))
            .chain((0..=k / 2).map(|s| puck(n + k + 1, n + 2 * s + 1)))
            .collect(),
        (kind, family) => {
            return Err(Error::InvalidSpec(format!(
                "{family} cannot be highlighted in the {} triangle",
                kind.name()
            )))
        }
    };
    Ok(cells)
}

fn validate(spec: &RenderSpec) -> Result<Vec<MarkedCell>> {
    if spec.rows < 1 {
        return Err(Error::InvalidArgument("rows must be at least 1".into()));
    }
    let Some(case) = spec.highlight else {
        return Ok(Vec::new());
    };
    if case.n > i32::MAX as u64 || case.k > i32::MAX as u64 {
        return Err(Error::InvalidSpec("highlight indices too large".into()));
    }
    let cells = marked_cells(spec.kind, case)?;
    let deepest = cells.iter().map(|c| c.0).max().unwrap_or(0);
    if deepest > spec.rows - 1 {
        return Err(Error::InvalidSpec(format!(
            "highlight ({},{}) reaches row {deepest} but only rows 0..={} are rendered",
            case.n,
            case.k,
            spec.rows - 1
        )));
    }
    Ok(cells)
}

fn build_rows(kind: TriangleKind, rows: u64) -> Vec<TriangleRow> {
    let cache = global_cache();
    (0..rows)
        .map(|n| {
            let entries: Vec<Coefficient> = match kind {
                TriangleKind::Pascal => cache.pascal(n).to_vec(),
                TriangleKind::Trinomial => {
                    let half = cache.trinomial_half(n);
                    half.iter().rev().chain(half.iter().skip(1)).cloned().collect()
                }
            };
            TriangleRow { kind, n, entries }
        })
        .collect()
}

fn mark_at(cells: &[MarkedCell], row: u64, pos: i64) -> Option<Mark> {
    cells.iter().find(|c| c.0 == row && c.1 == pos).map(|c| c.2)
}

/// Renders the triangle described by `spec`.
pub fn render(spec: &RenderSpec) -> Result<String> {
    let cells = validate(spec)?;
    let rows = build_rows(spec.kind, spec.rows);
    Ok(match spec.format {
        RenderFormat::Text => render_text(&rows, &cells, spec.highlight.is_some()),
        RenderFormat::Csv => render_csv(&rows, &cells),
        RenderFormat::Json => render_json(spec.kind, &rows, &cells, spec.highlight.is_some()),
    })
}

fn render_text(rows: &[TriangleRow], cells: &[MarkedCell], decorated: bool) -> String {
    let widest = rows
        .iter()
        .flat_map(|r| r.entries.iter())
        .map(|c| c.to_string().len())
        .max()
        .unwrap_or(1);
    let cell = widest + if decorated { 2 } else { 0 };
    // even slot so Pascal rows can shift by half a slot
    let slot = (cell + 1).next_multiple_of(2);
    let last = rows.len() - 1;

    let mut out = String::new();
    for row in rows {
        let depth = last - row.n as usize;
        let indent = match row.kind {
            TriangleKind::Pascal => depth * slot / 2,
            TriangleKind::Trinomial => depth * slot,
        };
        let mut line = " ".repeat(indent);
        for (pos, value) in row.positions() {
            let text = match mark_at(cells, row.n, pos) {
                Some(Mark::Stick) => format!("[{value}]"),
                Some(Mark::Puck) => format!("({value})"),
                None => value.to_string(),
            };
            let left = (slot - text.len()) / 2;
            line.push_str(&" ".repeat(left));
            line.push_str(&text);
            line.push_str(&" ".repeat(slot - text.len() - left));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn render_csv(rows: &[TriangleRow], cells: &[MarkedCell]) -> String {
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row.entries.iter().map(ToString::to_string).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    for (row, pos, mark) in cells {
        out.push_str(&format!("{},{row},{pos}\n", mark.name()));
    }
    out
}

#[derive(Serialize)]
struct TriangleDocument {
    kind: &'static str,
    rows: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    marks: Option<Vec<Vec<&'static str>>>,
}

fn render_json(kind: TriangleKind, rows: &[TriangleRow], cells: &[MarkedCell], decorated: bool) -> String {
    let values = rows
        .iter()
        .map(|r| r.entries.iter().map(ToString::to_string).collect())
        .collect();
    let marks = decorated.then(|| {
        rows.iter()
            .map(|r| {
                r.positions()
                    .map(|(pos, _)| mark_at(cells, r.n, pos).map_or("", Mark::name))
                    .collect()
            })
            .collect()
    });
    let doc = TriangleDocument {
        kind: kind.name(),
        rows: values,
        marks,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("triangle documents always serialize");
    s.push('\n');
    s
}
