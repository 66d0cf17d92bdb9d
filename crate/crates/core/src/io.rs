//! Text serialization.
//!
//! `cxc` stores an incidence complex:
//!
//! ```text
//! cxc 1 <dim>
//! rank <k> <count>          one line per rank, 0..=dim
//! c <k> <id> : <boundary>   one line per cell of rank >= 1, in id order
//! label <k> <id> <text>     optional, backslash-escaped
//! ```
//!
//! `cxf` stores a flag system:
//!
//! ```text
//! cxf 1 <involutions> <flags>   involutions = rank + 1
//! adj <i> : <a>,<b> ...     each orbit of adjacency i once, a <= b
//! ```
//!
//! Lines starting with `#` and blank lines are ignored. Writing is canonical,
//! so parsing and rewriting reproduces the input byte for byte.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::kernel::{CellRef, Complex, FlagSystem, IncidenceComplex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Cxc,
    Cxf,
    EdgeList,
    FaceList,
}

impl Format {
    /// Whether the format keeps the complete structure.
    pub fn is_lossless(self) -> bool {
        matches!(self, Format::Cxc | Format::Cxf)
    }

    pub fn extension(self) -> &'static str {
        match self {
            Format::Cxc => "cxc",
            Format::Cxf => "cxf",
            Format::EdgeList => "edges",
            Format::FaceList => "faces",
        }
    }
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cxc" => Ok(Format::Cxc),
            "cxf" => Ok(Format::Cxf),
            "edge-list" | "edges" => Ok(Format::EdgeList),
            "face-list" | "faces" => Ok(Format::FaceList),
            _ => Err(Error::InvalidParameter(format!("unknown format {s:?}"))),
        }
    }
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            _ => out.push(ch),
        }
    }
    out
}

fn unescape(s: &str, line: usize) -> Result<String> {
    let mut out = String::with_capacity(s.len());
    let mut chars = s.chars();
    while let Some(ch) = chars.next() {
        if ch != '\\' {
            out.push(ch);
            continue;
        }
        match chars.next() {
            Some('\\') => out.push('\\'),
            Some('n') => out.push('\n'),
            Some('r') => out.push('\r'),
            other => {
                return Err(Error::Parse { line, reason: format!("bad escape \\{}", other.map_or(String::new(), String::from)) })
            }
        }
    }
    Ok(out)
}

pub fn write_cxc(x: &IncidenceComplex) -> String {
    let mut s = String::new();
    writeln!(s, "cxc 1 {}", x.dim()).unwrap();
    for k in 0..=x.dim() {
        writeln!(s, "rank {k} {}", x.count(k)).unwrap();
    }
    for k in 1..=x.dim() {
        for (id, b) in x.cells(k).iter().enumerate() {
            write!(s, "c {k} {id} :").unwrap();
            for y in b {
                write!(s, " {y}").unwrap();
            }
            s.push('\n');
        }
    }
    for (cell, l) in x.labels() {
        writeln!(s, "label {} {} {}", cell.rank, cell.id, escape(l)).unwrap();
    }
    s
}

pub fn write_cxf(fs: &FlagSystem) -> String {
    let mut s = String::new();
    writeln!(s, "cxf 1 {} {}", fs.rank() + 1, fs.len()).unwrap();
    for i in 0..=fs.rank() {
        write!(s, "adj {i} :").unwrap();
        for (a, &b) in fs.adj(i).iter().enumerate() {
            if a <= b {
                write!(s, " {a},{b}").unwrap();
            }
        }
        s.push('\n');
    }
    s
}

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
}

fn num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    tok.ok_or_else(|| Error::Parse { line, reason: format!("missing {what}") })?
        .parse()
        .map_err(|_| Error::Parse { line, reason: format!("{what} is not a number") })
}

fn header<'a>(text: &'a str, magic: &str) -> Result<(usize, Vec<&'a str>, Vec<(usize, &'a str)>)> {
    let mut lines: Vec<(usize, &str)> = content_lines(text).collect();
    if lines.is_empty() {
        return Err(Error::Parse { line: 0, reason: "empty input".into() });
    }
    let (ln, first) = lines.remove(0);
    let toks: Vec<&str> = first.split_whitespace().collect();
    if toks.first() != Some(&magic) {
        return Err(Error::Parse { line: ln, reason: format!("expected {magic} header") });
    }
    if toks.get(1) != Some(&"1") {
        return Err(Error::Parse { line: ln, reason: "unsupported format version".into() });
    }
    Ok((ln, toks, lines))
}

pub fn read_cxc(text: &str) -> Result<IncidenceComplex> {
    let (ln, toks, lines) = header(text, "cxc")?;
    let dim = num(toks.get(2).copied(), ln, "dimension")?;
    let mut counts: Vec<Option<usize>> = vec![None; dim + 1];
    let mut cells: Vec<Vec<Option<Vec<usize>>>> = vec![Vec::new(); dim + 1];
    let mut labels = Vec::new();
    for (ln, l) in lines {
        let mut it = l.split_whitespace();
        match it.next() {
            Some("rank") => {
                let k = num(it.next(), ln, "rank")?;
                let n = num(it.next(), ln, "count")?;
                if k > dim || counts[k].is_some() {
                    return Err(Error::Parse { line: ln, reason: format!("bad rank line for rank {k}") });
                }
                counts[k] = Some(n);
                cells[k] = vec![None; n];
            }
            Some("c") => {
                let k = num(it.next(), ln, "rank")?;
                let id = num(it.next(), ln, "id")?;
                if it.next() != Some(":") {
                    return Err(Error::Parse { line: ln, reason: "expected ':'".into() });
                }
                let b = it.map(|t| num(Some(t), ln, "boundary id")).collect::<Result<Vec<_>>>()?;
                let slot = cells
                    .get_mut(k)
                    .and_then(|r| r.get_mut(id))
                    .filter(|_| k >= 1)
                    .ok_or_else(|| Error::Parse { line: ln, reason: format!("cell {k} {id} out of range") })?;
                if slot.replace(b).is_some() {
                    return Err(Error::Parse { line: ln, reason: format!("cell {k} {id} repeated") });
                }
            }
            Some("label") => {
                let k = num(it.next(), ln, "rank")?;
                let id = num(it.next(), ln, "id")?;
                // the label text is everything after the third space
                let rest = l.splitn(4, ' ').nth(3).unwrap_or("");
                labels.push((CellRef::new(k, id), unescape(rest, ln)?, ln));
            }
            _ => return Err(Error::Parse { line: ln, reason: format!("unknown line {l:?}") }),
        }
    }
    let mut full = Vec::with_capacity(dim + 1);
    for (k, row) in cells.into_iter().enumerate() {
        if counts[k].is_none() {
            return Err(Error::Parse { line: 0, reason: format!("missing rank line for rank {k}") });
        }
        let row = row
            .into_iter()
            .enumerate()
            .map(|(id, b)| match (k, b) {
                (0, _) => Ok(Vec::new()),
                (_, Some(b)) => Ok(b),
                (_, None) => Err(Error::Parse { line: 0, reason: format!("cell {k} {id} missing") }),
            })
            .collect::<Result<Vec<_>>>()?;
        full.push(row);
    }
    let mut x = IncidenceComplex::new(dim, full)?;
    for (cell, l, ln) in labels {
        if cell.rank > dim || cell.id >= x.count(cell.rank) {
            return Err(Error::Parse { line: ln, reason: format!("label for missing {cell}") });
        }
        x.set_label(cell, l);
    }
    Ok(x)
}

pub fn read_cxf(text: &str) -> Result<FlagSystem> {
    let (ln, toks, lines) = header(text, "cxf")?;
    let count = num(toks.get(2).copied(), ln, "involution count")?;
    if count == 0 {
        return Err(Error::Parse { line: ln, reason: "need at least one involution".into() });
    }
    let rank = count - 1;
    let n = num(toks.get(3).copied(), ln, "flag count")?;
    let mut adj: Vec<Option<Vec<usize>>> = vec![None; count];
    for (ln, l) in lines {
        let mut it = l.split_whitespace();
        if it.next() != Some("adj") {
            return Err(Error::Parse { line: ln, reason: format!("unknown line {l:?}") });
        }
        let i = num(it.next(), ln, "adjacency index")?;
        if i > rank || adj[i].is_some() {
            return Err(Error::Parse { line: ln, reason: format!("bad adjacency {i}") });
        }
        if it.next() != Some(":") {
            return Err(Error::Parse { line: ln, reason: "expected ':'".into() });
        }
        let mut row = vec![usize::MAX; n];
        for pair in it {
            let (a, b) = pair
                .split_once(',')
                .ok_or_else(|| Error::Parse { line: ln, reason: format!("bad pair {pair:?}") })?;
            let (a, b) = (num(Some(a), ln, "flag")?, num(Some(b), ln, "flag")?);
            if a >= n || b >= n || row[a] != usize::MAX || row[b] != usize::MAX {
                return Err(Error::Parse { line: ln, reason: format!("bad pair {pair:?}") });
            }
            row[a] = b;
            row[b] = a;
        }
        if row.contains(&usize::MAX) {
            return Err(Error::Parse { line: ln, reason: format!("adjacency {i} misses flags") });
        }
        adj[i] = Some(row);
    }
    let adj = adj
        .into_iter()
        .enumerate()
        .map(|(i, a)| a.ok_or_else(|| Error::Parse { line: 0, reason: format!("adjacency {i} missing") }))
        .collect::<Result<Vec<_>>>()?;
    FlagSystem::new(adj)
}

/// Reads either format, dispatching on the header.
pub fn read_complex(text: &str) -> Result<Complex> {
    let first = content_lines(text).next().map(|(_, l)| l.trim_start()).unwrap_or("");
    if first.starts_with("cxc") {
        Ok(Complex::Incidence(read_cxc(text)?))
    } else if first.starts_with("cxf") {
        Ok(Complex::Flags(read_cxf(text)?))
    } else {
        Err(Error::Parse { line: 1, reason: "expected a cxc or cxf header".into() })
    }
}

pub fn read_path(path: &Path) -> Result<Complex> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Other(format!("cannot read {}: {e}", path.display())))?;
    read_complex(&text)
}

/// One `a b` line per edge.
pub fn write_edge_list(x: &IncidenceComplex) -> String {
    let mut s = String::new();
    for e in 0..x.count(1) {
        let [a, b] = x.edge_vertices(e);
        writeln!(s, "{a} {b}").unwrap();
    }
    s
}

/// One vertex cycle per 2-face.
pub fn write_face_list(x: &IncidenceComplex) -> String {
    let mut s = String::new();
    for f in 0..x.count(2) {
        let line: Vec<String> = x.face_vertices(f).iter().map(|v| v.to_string()).collect();
        writeln!(s, "{}", line.join(" ")).unwrap();
    }
    s
}

/// Serializes in the requested format. With `strict`, formats that drop
/// structure are refused. Non-regular flag systems only have `cxf`.
pub fn export(c: &Complex, format: Format, strict: bool) -> Result<String> {
    if strict && !format.is_lossless() {
        return Err(Error::InvalidParameter(format!("{format:?} is lossy and --strict is set")));
    }
    match (format, c) {
        (Format::Cxf, _) => Ok(write_cxf(&c.flags()?)),
        (_, Complex::Flags(_)) => Err(Error::NonRegular(
            "complex is only available as a flag system; use cxf".into(),
        )),
        (Format::Cxc, Complex::Incidence(x)) => Ok(write_cxc(x)),
        (Format::EdgeList, Complex::Incidence(x)) if x.dim() >= 1 => Ok(write_edge_list(x)),
        (Format::FaceList, Complex::Incidence(x)) if x.dim() >= 2 => Ok(write_face_list(x)),
        _ => Err(Error::InvalidParameter(format!("{format:?} needs higher-rank cells"))),
    }
}

/// Canonical serialization: `cxc` when regular, `cxf` otherwise.
pub fn write_canonical(c: &Complex) -> String {
    match c {
        Complex::Incidence(x) => write_cxc(x),
        Complex::Flags(f) => write_cxf(f),
    }
}

/// Parses `pair <faceA> <faceB> <offset>` lines of a facet-pairing file.
pub fn read_pairing(text: &str) -> Result<Vec<(usize, usize, usize)>> {
    content_lines(text)
        .map(|(ln, l)| {
            let mut it = l.split_whitespace();
            if it.next() != Some("pair") {
                return Err(Error::Parse { line: ln, reason: format!("expected a pair line, got {l:?}") });
            }
            let f = num(it.next(), ln, "face")?;
            let g = num(it.next(), ln, "face")?;
            let r = num(it.next(), ln, "offset")?;
            if it.next().is_some() {
                return Err(Error::Parse { line: ln, reason: "trailing tokens".into() });
            }
            Ok((f, g, r))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::build_dodecahedron;

    #[test]
    fn labels_survive_escaping() {
        let mut d = build_dodecahedron();
        d.set_label(CellRef::new(2, 1), "two words\\and\nnewline");
        let text = write_cxc(&d);
        let back = read_cxc(&text).unwrap();
        assert_eq!(back, d);
        assert_eq!(write_cxc(&back), text);
    }

    #[test]
    fn comments_and_errors() {
        let d = build_dodecahedron();
        let text = format!("# a comment\n\n{}", write_cxc(&d));
        assert_eq!(read_cxc(&text).unwrap(), d);
        assert!(matches!(read_cxc("cxc 2 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(read_cxc("cxc 1 1\nrank 0 2\nrank 1 1\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn pairing_lines() {
        assert_eq!(read_pairing("# twist\npair 0 11 3\npair 1 10 3\n").unwrap(), vec![(0, 11, 3), (1, 10, 3)]);
        assert!(read_pairing("pair 0 1\n").is_err());
    }

    #[test]
    fn edge_list_of_dodecahedron() {
        let d: Complex = build_dodecahedron().into();
        assert_eq!(export(&d, Format::EdgeList, false).unwrap().lines().count(), 30);
        assert!(export(&d, Format::EdgeList, true).is_err());
    }
}
