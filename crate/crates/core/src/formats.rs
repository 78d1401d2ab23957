//! Text encodings of graphs: edge lists, hex upper triangles and graph6.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    /// Vertex count on the first line, then one `i j` pair per line.
    EdgeList,
    /// Upper triangle as a hexadecimal bit string; needs the vertex count.
    Hex,
    Graph6,
}

impl Format {
    pub const ALL: [Format; 3] = [Format::EdgeList, Format::Hex, Format::Graph6];

    pub fn name(self) -> &'static str {
        match self {
            Format::EdgeList => "edgelist",
            Format::Hex => "hex",
            Format::Graph6 => "graph6",
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "edgelist" | "edge-list" | "edges" => Ok(Format::EdgeList),
            "hex" => Ok(Format::Hex),
            "graph6" | "g6" => Ok(Format::Graph6),
            other => Err(format!(
                "unknown format {other:?} (expected edgelist, hex or graph6)"
            )),
        }
    }
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(head, _)| head).trim()
}

/// Reads one graph in `format`. `n_vertices` is required for hex input and
/// ignored otherwise. Hex and graph6 input may carry `#` comment lines.
pub fn read_graph(text: &str, format: Format, n_vertices: Option<usize>) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Hex => {
            let n = n_vertices.ok_or_else(|| Error::Malformed {
                line: 0,
                message: "hex input needs an explicit vertex count".into(),
            })?;
            let digits: String = text
                .lines()
                .map(strip_comment)
                .flat_map(|l| l.chars().filter(|c| !c.is_whitespace()))
                .collect();
            parse_hex_upper_triangle(&digits, n)
        }
        Format::Graph6 => {
            let body: Vec<&str> = text
                .lines()
                .map(strip_comment)
                .filter(|l| !l.is_empty())
                .collect();
            match body.as_slice() {
                [one] => parse_graph6(one),
                [] => Err(Error::Graph6("no graph6 data".into())),
                _ => Err(Error::Graph6(format!(
                    "expected one graph, found {} lines",
                    body.len()
                ))),
            }
        }
    }
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => to_edge_list(g),
        Format::Hex => format!("{}\n", to_hex_upper_triangle(g)),
        Format::Graph6 => format!("{}\n", to_graph6(g)),
    }
}

/// Parses the edge-list format. `#` starts a comment; blank lines are
/// ignored; the first remaining line is the vertex count.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, strip_comment(l)))
        .filter(|(_, l)| !l.is_empty());

    let (first, header) = lines.next().ok_or(Error::Malformed {
        line: 0,
        message: "missing vertex count".into(),
    })?;
    let n: usize = header.parse().map_err(|_| Error::Malformed {
        line: first,
        message: format!("expected a vertex count, found {header:?}"),
    })?;
    let mut g = Graph::empty(n)?;

    for (line, body) in lines {
        let fields: Vec<&str> = body.split_whitespace().collect();
        let [a, b] = fields.as_slice() else {
            return Err(Error::Malformed {
                line,
                message: format!("expected two vertices, found {body:?}"),
            });
        };
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Malformed {
                line,
                message: format!("invalid vertex {s:?}"),
            })
        };
        g.insert_edge(parse(a)?, parse(b)?)?;
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n_vertices());
    for (a, b) in g.edges() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}

/// Decodes a hexadecimal upper-triangle string.
///
/// Hex digits expand most-significant bit first. The rightmost `C(N, 2)`
/// bits then fill the strict upper triangle row by row: `(1,2), (1,3), …,
/// (1,N), (2,3), …`. Any leading bits beyond those must be zero.
pub fn parse_hex_upper_triangle(hex: &str, n_vertices: usize) -> Result<Graph> {
    let mut g = Graph::empty(n_vertices)?;
    let needed = n_vertices * (n_vertices - 1) / 2;

    let mut bits = Vec::with_capacity(hex.len() * 4);
    for c in hex.chars() {
        let d = c.to_digit(16).ok_or(Error::HexDigit(c))?;
        bits.extend((0..4).rev().map(|k| (d >> k) & 1 == 1));
    }
    if bits.len() < needed {
        return Err(Error::HexTooShort {
            bits: bits.len(),
            needed,
        });
    }
    let (excess, triangle) = bits.split_at(bits.len() - needed);
    if excess.iter().any(|&b| b) {
        return Err(Error::HexExcessBits);
    }

    let pairs = (1..=n_vertices).flat_map(|i| (i + 1..=n_vertices).map(move |j| (i, j)));
    for ((i, j), &bit) in pairs.zip(triangle) {
        if bit {
            g.insert_edge(i, j)?;
        }
    }
    Ok(g)
}

/// Inverse of [`parse_hex_upper_triangle`]; the bit string is left-padded
/// with zeros to a whole number of hex digits.
pub fn to_hex_upper_triangle(g: &Graph) -> String {
    let n = g.n_vertices();
    let needed = n * (n - 1) / 2;
    let pad = (4 - needed % 4) % 4;
    let mut bits = vec![false; pad];
    for i in 1..=n {
        for j in i + 1..=n {
            bits.push(g.has_edge(i, j));
        }
    }
    bits.chunks(4)
        .map(|nibble| {
            let d = nibble
                .iter()
                .fold(0u32, |acc, &b| (acc << 1) | u32::from(b));
            char::from_digit(d, 16).unwrap().to_ascii_uppercase()
        })
        .collect()
}

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Parses a single graph6 line (optionally with the `>>graph6<<` header).
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim();
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b} outside 63..=126")));
    }
    let six = |b: u8| usize::from(b - 63);

    let (n, rest) = match bytes {
        [126, 126, tail @ ..] => {
            if tail.len() < 6 {
                return Err(Error::Graph6("truncated vertex count".into()));
            }
            let n = tail[..6].iter().fold(0, |acc, &b| (acc << 6) | six(b));
            (n, &tail[6..])
        }
        [126, tail @ ..] => {
            if tail.len() < 3 {
                return Err(Error::Graph6("truncated vertex count".into()));
            }
            let n = tail[..3].iter().fold(0, |acc, &b| (acc << 6) | six(b));
            (n, &tail[3..])
        }
        [b, tail @ ..] => (six(*b), tail),
        [] => return Err(Error::Graph6("empty input".into())),
    };

    let needed = n * n.saturating_sub(1) / 2;
    let expected_len = needed.div_ceil(6);
    if rest.len() != expected_len {
        return Err(Error::Graph6(format!(
            "{n} vertices need {expected_len} data bytes, found {}",
            rest.len()
        )));
    }
    let bits: Vec<bool> = rest
        .iter()
        .flat_map(|&b| (0..6).rev().map(move |k| (six(b) >> k) & 1 == 1))
        .collect();
    if bits[needed..].iter().any(|&b| b) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }

    let mut g = Graph::empty(n).map_err(|_| Error::Graph6("graph has no vertices".into()))?;
    // graph6 walks the upper triangle column by column: (0,1), (0,2), (1,2), …
    let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    for ((i, j), &bit) in pairs.zip(&bits) {
        if bit {
            g.insert_edge(i + 1, j + 1)?;
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n_vertices();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    }
    let bits: Vec<bool> = (1..n)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .map(|(i, j)| g.has_edge(i + 1, j + 1))
        .collect();
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for k in 0..6 {
            v = (v << 1) | u8::from(chunk.get(k).copied().unwrap_or(false));
        }
        out.push(v + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
