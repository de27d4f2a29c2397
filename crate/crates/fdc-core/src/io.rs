//! Reading and writing contexts.
//!
//! Two formats are supported:
//!
//! * **CSV** — header row `;a;b;…` of attribute labels, first column holds
//!   object labels, separator `;` or `,` auto-detected, truthy cells
//!   `1`/`x`/`×`/`X`, falsy cells `0` or empty. This is the canonical
//!   fixture format of the repository.
//! * **Burmeister** — `B` magic line, object count, attribute count, the
//!   labels, then one `X`/`.` row per object. Blank lines are ignored, which
//!   also accepts the classic files that carry an empty name line after the
//!   magic.
//!
//! Parsing followed by serialisation reproduces the context exactly.

use crate::context::{FormalContext, FormalDecisionContext};
use crate::error::{Error, Result};

/// Supported on-disk representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContextFormat {
    Csv,
    Burmeister,
}

/// Guesses the format from the content: a leading `B` line means Burmeister.
pub fn sniff_format(text: &str) -> ContextFormat {
    match text.lines().map(str::trim).find(|l| !l.is_empty()) {
        Some("B") => ContextFormat::Burmeister,
        _ => ContextFormat::Csv,
    }
}

/// Parses a single context in the requested format.
pub fn parse_context(text: &str, format: ContextFormat) -> Result<FormalContext> {
    match format {
        ContextFormat::Csv => parse_csv(text),
        ContextFormat::Burmeister => parse_burmeister(text),
    }
}

/// Parses a joined table and splits it into conditional and decision parts.
pub fn parse_decision_context(
    text: &str,
    format: ContextFormat,
    decision_attrs: &[impl AsRef<str>],
) -> Result<FormalDecisionContext> {
    let context = parse_context(text, format)?;
    FormalDecisionContext::split(&context, decision_attrs)
}

fn parse_csv(text: &str) -> Result<FormalContext> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty());

    let (header_no, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, 1, "empty input"))?;
    let sep = if header.contains(';') { ';' } else { ',' };

    let header_cells: Vec<&str> = header.split(sep).map(str::trim).collect();
    if header_cells.len() < 2 {
        return Err(Error::parse(header_no, 1, "header declares no attributes"));
    }
    let attributes: Vec<String> = header_cells[1..].iter().map(|s| s.to_string()).collect();
    for (i, a) in attributes.iter().enumerate() {
        if a.is_empty() {
            return Err(Error::parse(header_no, i + 2, "empty attribute label"));
        }
        if attributes[..i].contains(a) {
            return Err(Error::parse(
                header_no,
                i + 2,
                format!("duplicate attribute label {a:?}"),
            ));
        }
    }

    let mut objects = Vec::new();
    let mut incidence = Vec::new();
    for (line_no, line) in lines {
        let cells: Vec<&str> = line.split(sep).map(str::trim).collect();
        if cells.len() != header_cells.len() {
            return Err(Error::parse(
                line_no,
                cells.len(),
                format!(
                    "row has {} cells, header has {}",
                    cells.len(),
                    header_cells.len()
                ),
            ));
        }
        let label = cells[0];
        if label.is_empty() {
            return Err(Error::parse(line_no, 1, "empty object label"));
        }
        if objects.contains(&label.to_string()) {
            return Err(Error::parse(
                line_no,
                1,
                format!("duplicate object label {label:?}"),
            ));
        }
        let mut row = Vec::with_capacity(attributes.len());
        for (col, cell) in cells[1..].iter().enumerate() {
            match *cell {
                "1" | "x" | "X" | "×" => row.push(true),
                "0" | "" => row.push(false),
                other => {
                    return Err(Error::parse(
                        line_no,
                        col + 2,
                        format!("unknown cell token {other:?}"),
                    ))
                }
            }
        }
        objects.push(label.to_string());
        incidence.push(row);
    }
    if objects.is_empty() {
        return Err(Error::parse(header_no, 1, "table has no object rows"));
    }
    FormalContext::new(objects, attributes, incidence)
}

fn parse_burmeister(text: &str) -> Result<FormalContext> {
    let eof = text.lines().count().max(1);
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty())
        .collect();
    let mut it = lines.into_iter();

    let (line_no, magic) = it.next().ok_or_else(|| Error::parse(1, 1, "empty input"))?;
    if magic.trim() != "B" {
        return Err(Error::parse(line_no, 1, "expected magic line \"B\""));
    }

    let mut read_count = |what: &str| -> Result<usize> {
        let (no, line) = it
            .next()
            .ok_or_else(|| Error::parse(eof, 1, format!("missing {what} count")))?;
        line.trim()
            .parse::<usize>()
            .map_err(|_| Error::parse(no, 1, format!("expected {what} count, found {line:?}")))
    };
    let n_objects = read_count("object")?;
    let n_attributes = read_count("attribute")?;

    let mut read_label = |what: &str| -> Result<String> {
        let (_, line) = it
            .next()
            .ok_or_else(|| Error::parse(eof, 1, format!("missing {what} label")))?;
        Ok(line.trim().to_string())
    };
    let objects: Vec<String> = (0..n_objects)
        .map(|_| read_label("object"))
        .collect::<Result<_>>()?;
    let attributes: Vec<String> = (0..n_attributes)
        .map(|_| read_label("attribute"))
        .collect::<Result<_>>()?;

    let mut incidence = Vec::with_capacity(n_objects);
    for _ in 0..n_objects {
        let (no, line) = it
            .next()
            .ok_or_else(|| Error::parse(eof, 1, "missing incidence row"))?;
        let row_chars: Vec<char> = line.trim().chars().collect();
        if row_chars.len() != n_attributes {
            return Err(Error::parse(
                no,
                row_chars.len().max(1),
                format!("row has {} marks for {} attributes", row_chars.len(), n_attributes),
            ));
        }
        let mut row = Vec::with_capacity(n_attributes);
        for (col, c) in row_chars.iter().enumerate() {
            match c {
                'X' | 'x' => row.push(true),
                '.' => row.push(false),
                other => {
                    return Err(Error::parse(no, col + 1, format!("unknown mark {other:?}")))
                }
            }
        }
        incidence.push(row);
    }
    FormalContext::new(objects, attributes, incidence)
}

/// Serialises a context as canonical CSV (`;` separator, `1`/`0` cells).
pub fn to_csv(ctx: &FormalContext) -> String {
    let mut out = String::new();
    out.push(';');
    out.push_str(&ctx.attributes().join(";"));
    out.push('\n');
    for (x, label) in ctx.objects().iter().enumerate() {
        out.push_str(label);
        for a in 0..ctx.attribute_count() {
            out.push(';');
            out.push(if ctx.incidence(x, a) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

/// Serialises the joined conditional+decision table as canonical CSV.
pub fn decision_to_csv(fdc: &FormalDecisionContext) -> String {
    let cond = fdc.conditional();
    let dec = fdc.decision();
    let mut out = String::new();
    out.push(';');
    out.push_str(&cond.attributes().join(";"));
    out.push(';');
    out.push_str(&dec.attributes().join(";"));
    out.push('\n');
    for (x, label) in fdc.objects().iter().enumerate() {
        out.push_str(label);
        for a in 0..cond.attribute_count() {
            out.push(';');
            out.push(if cond.incidence(x, a) { '1' } else { '0' });
        }
        for a in 0..dec.attribute_count() {
            out.push(';');
            out.push(if dec.incidence(x, a) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

/// Serialises a context in the Burmeister layout.
pub fn to_burmeister(ctx: &FormalContext) -> String {
    let mut out = String::from("B\n\n");
    out.push_str(&format!("{}\n{}\n\n", ctx.object_count(), ctx.attribute_count()));
    for label in ctx.objects() {
        out.push_str(label);
        out.push('\n');
    }
    for label in ctx.attributes() {
        out.push_str(label);
        out.push('\n');
    }
    for x in 0..ctx.object_count() {
        for a in 0..ctx.attribute_count() {
            out.push(if ctx.incidence(x, a) { 'X' } else { '.' });
        }
        out.push('\n');
    }
    out
}
