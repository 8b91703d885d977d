//! Plain-text witness files.
//!
//! ```text
//! n k
//! <hostmask: C(n,2) chars of 0/1 in edge_index order, or `*` for a complete host>
//! <colors:   C(n,2) chars, a color digit per pair, `-` for absent pairs>
//! ```
//!
//! Every line ends with `\n`; the file is ASCII only.

use crate::error::{Error, Result};
use crate::graph::{pair_count, pairs_in_order, EdgeColoring, Graph, MAX_VERTICES};

pub fn to_witness_string(c: &EdgeColoring) -> String {
    let n = c.n();
    let mut out = format!("{} {}\n", n, c.k());
    if c.host().is_complete() {
        out.push('*');
    } else {
        for (i, j) in pairs_in_order(n) {
            out.push(if c.host().has_edge(i, j) { '1' } else { '0' });
        }
    }
    out.push('\n');
    for color in c.colors() {
        out.push(color.map_or('-', |d| char::from(b'0' + d)));
    }
    out.push('\n');
    out
}

fn parse_err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        column,
        message: message.into(),
    })
}

pub fn parse_witness(text: &str) -> Result<EdgeColoring> {
    if !text.is_ascii() {
        let pos = text.find(|ch: char| !ch.is_ascii()).unwrap_or(0);
        let line = text[..pos].matches('\n').count() + 1;
        let column = pos - text[..pos].rfind('\n').map_or(0, |p| p + 1) + 1;
        return parse_err(line, column, "non-ASCII character");
    }
    let lines: Vec<&str> = text.split('\n').collect();
    // A complete file splits into three content lines plus a trailing empty piece.
    if lines.len() < 4 || lines[3..].iter().any(|l| !l.is_empty()) {
        if lines.len() < 4 {
            let line = lines.len();
            return parse_err(line, lines[line - 1].len() + 1, "unexpected end of file");
        }
        return parse_err(4, 1, "unexpected content after the color line");
    }

    let header = lines[0];
    let mut fields = header.split(' ');
    let n_str = fields.next().unwrap_or("");
    let k_str = fields.next();
    if fields.next().is_some() {
        return parse_err(1, 1, "header must be `n k`");
    }
    let Some(k_str) = k_str else {
        return parse_err(1, header.len() + 1, "header must be `n k`");
    };
    let n: usize = match n_str.parse() {
        Ok(n) if (1..=MAX_VERTICES).contains(&n) => n,
        _ => return parse_err(1, 1, format!("vertex count must be in 1..={MAX_VERTICES}")),
    };
    let k: usize = match k_str.parse() {
        Ok(k) if (1..=10).contains(&k) => k,
        _ => return parse_err(1, n_str.len() + 2, "color count must be in 1..=10"),
    };
    let pairs = pair_count(n);

    let mask = lines[1];
    let mut host = Graph::empty(n)?;
    if mask == "*" {
        host = crate::graph::complete_graph(n)?;
    } else {
        if mask.len() != pairs {
            return parse_err(
                2,
                mask.len().min(pairs) + 1,
                format!("hostmask must have {pairs} characters or be `*`"),
            );
        }
        for (col, (ch, (i, j))) in mask.bytes().zip(pairs_in_order(n)).enumerate() {
            match ch {
                b'1' => host.add_edge(i, j)?,
                b'0' => {}
                _ => return parse_err(2, col + 1, "hostmask characters must be 0 or 1"),
            }
        }
    }

    let color_line = lines[2];
    if color_line.len() != pairs {
        return parse_err(
            3,
            color_line.len().min(pairs) + 1,
            format!("color line must have {pairs} characters"),
        );
    }
    let mut colors = Vec::with_capacity(pairs);
    for (col, (ch, (i, j))) in color_line.bytes().zip(pairs_in_order(n)).enumerate() {
        let present = host.has_edge(i, j);
        match ch {
            b'-' if !present => colors.push(None),
            b'-' => return parse_err(3, col + 1, format!("host edge ({i}, {j}) has no color")),
            b'0'..=b'9' if present => {
                let d = ch - b'0';
                if d as usize >= k {
                    return parse_err(3, col + 1, format!("color {d} out of range for k={k}"));
                }
                colors.push(Some(d));
            }
            b'0'..=b'9' => {
                return parse_err(
                    3,
                    col + 1,
                    format!("absent pair ({i}, {j}) carries a color"),
                )
            }
            _ => return parse_err(3, col + 1, "color characters must be digits or `-`"),
        }
    }
    EdgeColoring::from_colors(host, k, colors)
}
