//! Text formats for hypergraphs, colorings and factors.
//!
//! ```text
//! # optional comments
//! hypergraph <n> <m>
//! <vertex ids of edge 1>
//! ...
//! ```
//!
//! A coloring file is `coloring <n>` followed by `n` positive integers; a
//! factor file is `factor <m>` followed by the 1-based indices of the
//! selected edges of an `m`-edge graph. Both accept arbitrary whitespace.

use std::fmt::Write as _;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::factors::Factor;
use crate::hypergraph::{Hypergraph, VertexRoleMap};

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

/// Non-comment, non-blank lines split into tokens, with 1-based positions.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<Token<'_>>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        if line.trim_start().starts_with('#') {
            return None;
        }
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &line[s..pos],
                        line: i + 1,
                        column: line[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn number(tok: &Token<'_>) -> Result<usize> {
    tok.text
        .parse()
        .map_err(|_| syntax(tok.line, tok.column, format!("expected a non-negative integer, found `{}`", tok.text)))
}

fn end_line(text: &str) -> usize {
    text.lines().count().max(1)
}

/// Parses `<keyword> <count>` headers; returns the count and the tokens that
/// follow it on any later line.
fn header<'a, I>(text: &str, it: &mut I, keyword: &str, arity: usize) -> Result<Vec<usize>>
where
    I: Iterator<Item = (usize, Vec<Token<'a>>)>,
{
    let (line, toks) = it
        .next()
        .ok_or_else(|| syntax(end_line(text), 1, format!("missing `{keyword}` header")))?;
    if toks[0].text != keyword {
        return Err(syntax(line, toks[0].column, format!("expected `{keyword}`, found `{}`", toks[0].text)));
    }
    if toks.len() != arity + 1 {
        let col = toks.last().map(|t| t.column).unwrap_or(1);
        return Err(syntax(line, col, format!("`{keyword}` header takes {arity} number(s)")));
    }
    toks[1..].iter().map(number).collect()
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut it = lines(text);
    let hdr = header(text, &mut it, "hypergraph", 2)?;
    let (n, m) = (hdr[0], hdr[1]);
    let mut edges = Vec::with_capacity(m);
    for (line, toks) in it.by_ref() {
        if edges.len() == m {
            return Err(syntax(line, toks[0].column, format!("more than the declared {m} edges")));
        }
        edges.push(toks.iter().map(number).collect::<Result<Vec<_>>>()?);
    }
    if edges.len() < m {
        return Err(syntax(
            end_line(text),
            1,
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    Hypergraph::new(n, edges)
}

pub fn parse_hypergraph_bytes(bytes: &[u8]) -> Result<Hypergraph> {
    let text = std::str::from_utf8(bytes).map_err(|e| syntax(1, 1, format!("invalid UTF-8: {e}")))?;
    parse_hypergraph(text)
}

pub fn write_hypergraph(h: &Hypergraph) -> String {
    write_hypergraph_with_roles(h, &VertexRoleMap::default())
}

/// Serializes `h`, preceded by one `# role <v> <kind> <copy> <layer>` comment
/// line per labeled vertex.
pub fn write_hypergraph_with_roles(h: &Hypergraph, roles: &VertexRoleMap) -> String {
    let mut out = String::new();
    for (i, r) in roles.roles.iter().enumerate() {
        let _ = writeln!(out, "# role {} {} {} {}", i + 1, r.kind.name(), r.copy, r.layer);
    }
    let _ = writeln!(out, "hypergraph {} {}", h.n(), h.m());
    for edge in h.edges() {
        let mut first = true;
        for v in edge {
            if !first {
                out.push(' ');
            }
            first = false;
            let _ = write!(out, "{v}");
        }
        out.push('\n');
    }
    out
}

fn body<'a>(it: impl Iterator<Item = (usize, Vec<Token<'a>>)>) -> Vec<Token<'a>> {
    it.flat_map(|(_, toks)| toks).collect()
}

pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let mut it = lines(text);
    let n = header(text, &mut it, "coloring", 1)?[0];
    let toks = body(it);
    if toks.len() != n {
        let (line, column) = toks.get(n).map(|t| (t.line, t.column)).unwrap_or((end_line(text), 1));
        return Err(syntax(line, column, format!("expected {n} colors, found {}", toks.len())));
    }
    let mut colors = Vec::with_capacity(n);
    for tok in &toks {
        let c = number(tok)?;
        if c == 0 {
            return Err(syntax(tok.line, tok.column, "colors must be positive"));
        }
        colors.push(c);
    }
    Coloring::new(colors)
}

pub fn write_coloring(c: &Coloring) -> String {
    let body: Vec<String> = c.colors().iter().map(|x| x.to_string()).collect();
    format!("coloring {}\n{}\n", c.len(), body.join(" "))
}

/// Parses a factor file, returning the host edge count and the sorted
/// selected 1-based edge indices.
pub fn parse_factor(text: &str) -> Result<(usize, Vec<usize>)> {
    let mut it = lines(text);
    let m = header(text, &mut it, "factor", 1)?[0];
    let mut selected = Vec::new();
    for tok in body(it) {
        let i = number(&tok)?;
        if i == 0 || i > m {
            return Err(syntax(tok.line, tok.column, format!("edge index {i} out of range 1..={m}")));
        }
        selected.push(i);
    }
    selected.sort_unstable();
    if let Some(w) = selected.windows(2).find(|w| w[0] == w[1]) {
        return Err(syntax(end_line(text), 1, format!("edge index {} listed twice", w[0])));
    }
    Ok((m, selected))
}

pub fn write_factor(host_edges: usize, f: &Factor) -> String {
    let body: Vec<String> = f.selected.iter().map(|x| x.to_string()).collect();
    format!("factor {}\n{}\n", host_edges, body.join(" "))
}
