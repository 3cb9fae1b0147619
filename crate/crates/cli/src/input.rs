//! Reading graphs from files or stdin.
//!
//! A source may mix both formats. A line without whitespace is one graph6
//! graph; a line `n m` opens an edge-list block that takes the next `m`
//! non-comment lines. Blank lines and `#` comments are skipped.

use std::fs;
use std::io::{self, Read};

use ecc_core::{parse_graph6, Error, Graph};

/// One graph read from `source`, or why it could not be read.
pub struct Record {
    /// `path:line`, with `-` for stdin.
    pub location: String,
    pub graph: Result<Graph, Error>,
}

pub fn read_source(path: &str) -> io::Result<String> {
    if path == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        fs::read_to_string(path)
    }
}

pub fn parse_records(label: &str, text: &str) -> Vec<Record> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();

    let mut out = Vec::new();
    let mut i = 0;
    while i < lines.len() {
        let (line, body) = lines[i];
        let location = format!("{label}:{line}");
        i += 1;
        if !body.contains(char::is_whitespace) {
            out.push(Record {
                location,
                graph: parse_graph6(body),
            });
            continue;
        }
        let Some(m) = edge_count(body) else {
            out.push(Record {
                location,
                graph: Err(Error::EdgeList {
                    line,
                    msg: format!("expected an `n m` header, found {body:?}"),
                }),
            });
            continue;
        };
        let (start, end) = (i, (i + m).min(lines.len()));
        let mut block = format!("{body}\n");
        for (_, edge) in &lines[start..end] {
            block.push_str(edge);
            block.push('\n');
        }
        i = end;
        // block line 1 is the header, line k >= 2 is lines[start + k - 2]
        let graph = Graph::parse_edge_list(&block).map_err(|e| match e {
            Error::EdgeList { line: rel, msg } => Error::EdgeList {
                line: match rel {
                    0 | 1 => line,
                    k => lines[start + k - 2].0,
                },
                msg,
            },
            other => other,
        });
        out.push(Record { location, graph });
    }
    out
}

/// `m` from a well-formed `n m` header.
fn edge_count(header: &str) -> Option<usize> {
    let mut it = header.split_whitespace();
    let (_n, m) = (it.next()?.parse::<usize>().ok()?, it.next()?.parse().ok()?);
    it.next().is_none().then_some(m)
}
