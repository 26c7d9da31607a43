//! Text formats for fields, generator matrices (`.gmat`) and point sets
//! (`.pts`).
//!
//! Every file starts with a field line:
//!
//! ```text
//! field q=9 p=3 m=2 modulus=2,2,1
//! ```
//!
//! `modulus` lists `c0..cm` and is absent for prime fields. A `.gmat` file
//! continues with `k=<k> n=<n>` and `k` rows of `n` integers; a `.pts`
//! file with `N=<N>` and one point per line, coordinates separated by
//! commas and an optional `*<multiplicity>` suffix. Blank lines and lines
//! starting with `#` are ignored.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use cutcode_core::correspond::ProjectiveSystem;
use cutcode_core::{Elem, Field, LinearCode, ProjectiveSpace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    /// 1-based; 0 when the problem is not tied to a line.
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        line,
        message: message.into(),
    }
}

/// Which kind of content a file holds, judged from its second line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileKind {
    Gmat,
    Pts,
}

pub fn field_header(f: &Field) -> String {
    let mut s = format!("field q={} p={} m={}", f.q(), f.p(), f.m());
    if let Some(m) = f.modulus() {
        let cs: Vec<String> = m.iter().map(|c| c.to_string()).collect();
        write!(s, " modulus={}", cs.join(",")).unwrap();
    }
    s
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
            last: 0,
        }
    }

    fn next_content(&mut self) -> Option<(usize, &'a str)> {
        for (i, l) in self.inner.by_ref() {
            self.last = i + 1;
            let t = l.trim();
            if !t.is_empty() && !t.starts_with('#') {
                return Some((i + 1, t));
            }
        }
        None
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a str), FormatError> {
        self.next_content().ok_or_else(|| {
            err(
                self.last + 1,
                format!("unexpected end of input, expected {what}"),
            )
        })
    }
}

fn key_values(line: usize, text: &str) -> Result<BTreeMap<&str, &str>, FormatError> {
    text.split_whitespace()
        .map(|tok| {
            tok.split_once('=')
                .ok_or_else(|| err(line, format!("expected key=value, found `{tok}`")))
        })
        .collect()
}

fn number<T: std::str::FromStr>(line: usize, key: &str, v: &str) -> Result<T, FormatError> {
    v.parse().map_err(|_| {
        err(
            line,
            format!("`{key}` must be a non-negative integer, found `{v}`"),
        )
    })
}

fn required<'a>(
    line: usize,
    kv: &BTreeMap<&str, &'a str>,
    key: &str,
) -> Result<&'a str, FormatError> {
    kv.get(key)
        .copied()
        .ok_or_else(|| err(line, format!("missing `{key}=`")))
}

pub fn parse_field_header(line: usize, text: &str) -> Result<Field, FormatError> {
    let rest = text
        .strip_prefix("field")
        .filter(|r| r.starts_with(char::is_whitespace))
        .ok_or_else(|| err(line, "expected a `field q=... p=... m=...` header"))?;
    let kv = key_values(line, rest)?;
    for k in kv.keys() {
        if !matches!(*k, "q" | "p" | "m" | "modulus") {
            return Err(err(line, format!("unknown field key `{k}`")));
        }
    }
    let q: u32 = number(line, "q", required(line, &kv, "q")?)?;
    let p: u32 = number(line, "p", required(line, &kv, "p")?)?;
    let m: u32 = number(line, "m", required(line, &kv, "m")?)?;
    if p.checked_pow(m) != Some(q) {
        return Err(err(line, format!("q={q} is not p^m = {p}^{m}")));
    }
    let field = match kv.get("modulus") {
        Some(text) => {
            let coeffs = text
                .split(',')
                .map(|c| number::<u8>(line, "modulus", c))
                .collect::<Result<Vec<u8>, _>>()?;
            Field::with_modulus(p, m, &coeffs)
        }
        None if m == 1 => Field::new(q),
        None => return Err(err(line, "extension fields need `modulus=`")),
    };
    field.map_err(|e| err(line, e.to_string()))
}

pub fn sniff(text: &str) -> Result<FileKind, FormatError> {
    let mut lines = Lines::new(text);
    let (no, head) = lines.expect("field header")?;
    parse_field_header(no, head)?;
    let (no, l) = lines.expect("`k=... n=...` or `N=...`")?;
    if l.starts_with("k=") {
        Ok(FileKind::Gmat)
    } else if l.starts_with("N=") {
        Ok(FileKind::Pts)
    } else {
        Err(err(no, "expected `k=... n=...` or `N=...`"))
    }
}

pub fn write_gmat(code: &LinearCode) -> String {
    let mut s = field_header(code.field());
    writeln!(s).unwrap();
    writeln!(s, "k={} n={}", code.k(), code.n()).unwrap();
    for row in code.rows() {
        let r: Vec<String> = row.iter().map(|e| e.value().to_string()).collect();
        writeln!(s, "{}", r.join(" ")).unwrap();
    }
    s
}

fn element(f: &Field, line: usize, tok: &str) -> Result<Elem, FormatError> {
    let v: u32 = number(line, "element", tok)?;
    f.elem(v).map_err(|_| {
        err(
            line,
            format!("element {v} does not belong to GF({})", f.q()),
        )
    })
}

pub fn read_gmat(text: &str) -> Result<LinearCode, FormatError> {
    let mut lines = Lines::new(text);
    let (no, head) = lines.expect("field header")?;
    let f = parse_field_header(no, head)?;
    let (no, dims) = lines.expect("`k=... n=...`")?;
    let kv = key_values(no, dims)?;
    let k: usize = number(no, "k", required(no, &kv, "k")?)?;
    let n: usize = number(no, "n", required(no, &kv, "n")?)?;
    if k == 0 || n == 0 {
        return Err(err(no, "k and n must be positive"));
    }
    let mut rows = Vec::with_capacity(k);
    for i in 0..k {
        let (no, l) = lines.expect(&format!("row {} of {k}", i + 1))?;
        let row = l
            .split_whitespace()
            .map(|t| element(&f, no, t))
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != n {
            return Err(err(
                no,
                format!("row has {} entries, expected {n}", row.len()),
            ));
        }
        rows.push(row);
    }
    if let Some((no, _)) = lines.next_content() {
        return Err(err(no, format!("trailing content after {k} rows")));
    }
    LinearCode::new(f, rows).map_err(|e| err(0, e.to_string()))
}

/// A parsed `.pts` file: points of `PG(N,q)` with multiplicities. The
/// points need not span.
#[derive(Debug, Clone)]
pub struct PointFile {
    pub space: Arc<ProjectiveSpace>,
    pub mult: BTreeMap<usize, u32>,
}

impl PointFile {
    pub fn into_system(self) -> Result<ProjectiveSystem, FormatError> {
        ProjectiveSystem::new(self.space, self.mult).map_err(|e| err(0, e.to_string()))
    }

    pub fn indices(&self) -> Vec<usize> {
        self.mult.keys().copied().collect()
    }
}

pub fn write_pts(space: &ProjectiveSpace, mult: &BTreeMap<usize, u32>) -> String {
    let mut s = field_header(space.field());
    writeln!(s).unwrap();
    writeln!(s, "N={}", space.dim()).unwrap();
    for (&p, &m) in mult {
        let c: Vec<String> = space
            .coords(p)
            .iter()
            .map(|e| e.value().to_string())
            .collect();
        s.push_str(&c.join(","));
        if m != 1 {
            write!(s, "*{m}").unwrap();
        }
        s.push('\n');
    }
    s
}

pub fn write_point_set(space: &ProjectiveSpace, points: &[usize]) -> String {
    write_pts(space, &points.iter().map(|&p| (p, 1)).collect())
}

pub fn read_pts(text: &str) -> Result<PointFile, FormatError> {
    let mut lines = Lines::new(text);
    let (no, head) = lines.expect("field header")?;
    let f = parse_field_header(no, head)?;
    let (no, dims) = lines.expect("`N=...`")?;
    let kv = key_values(no, dims)?;
    let n: usize = number(no, "N", required(no, &kv, "N")?)?;
    if n == 0 {
        return Err(err(no, "N must be positive"));
    }
    let space = Arc::new(ProjectiveSpace::new(f, n).map_err(|e| err(no, e.to_string()))?);
    let mut mult = BTreeMap::new();
    while let Some((no, l)) = lines.next_content() {
        let (coords, m) = match l.split_once('*') {
            Some((c, m)) => (c, number::<u32>(no, "multiplicity", m.trim())?),
            None => (l, 1),
        };
        if m == 0 {
            return Err(err(no, "multiplicity must be positive"));
        }
        let v = coords
            .split(',')
            .map(|t| element(space.field(), no, t.trim()))
            .collect::<Result<Vec<_>, _>>()?;
        if v.len() != n + 1 {
            return Err(err(
                no,
                format!("point has {} coordinates, expected {}", v.len(), n + 1),
            ));
        }
        let p = space.normalize(&v).map_err(|e| err(no, e.to_string()))?;
        *mult.entry(p.index).or_insert(0) += m;
    }
    Ok(PointFile { space, mult })
}

/// Reads either format as a code; point files go through the canonical
/// generator matrix of their system.
pub fn read_code(text: &str) -> Result<LinearCode, FormatError> {
    match sniff(text)? {
        FileKind::Gmat => read_gmat(text),
        FileKind::Pts => {
            let sys = read_pts(text)?.into_system()?;
            cutcode_core::correspond::psi(&sys).map_err(|e| err(0, e.to_string()))
        }
    }
}
