//! Plain-text serialization of an [`OmegaCertificate`].
//!
//! ```text
//! format lhinv-omega 1
//! k 6
//! algorithm subset-expansion
//! rows 19
//! row 1 partial(1,2)
//! ...
//! coords 20
//! stat 1 terms 5531 degree 20 content 1
//! ...
//! omega 1
//! +1 l(1,2)^2 l(1,3) ...
//! ...
//! end
//! ```
//!
//! Each `omega` block holds the canonical rendering of one coordinate, one
//! term per line. Rendering is deterministic, so `render(parse(text))`
//! reproduces `text` byte for byte whenever `text` was itself rendered.

use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::mpoly::{parse_term, render_term, Poly};
use crate::polylinalg::{CoordStats, OmegaCertificate};

pub const FORMAT_LINE: &str = "format lhinv-omega 1";

pub fn render(cert: &OmegaCertificate) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{FORMAT_LINE}");
    let _ = writeln!(out, "k {}", cert.k);
    let _ = writeln!(out, "algorithm {}", cert.algorithm);
    let _ = writeln!(out, "rows {}", cert.row_labels.len());
    for (n, label) in cert.row_labels.iter().enumerate() {
        let _ = writeln!(out, "row {} {}", n + 1, label);
    }
    let _ = writeln!(out, "coords {}", cert.omega.len());
    for (n, s) in cert.stats.iter().enumerate() {
        let _ = writeln!(out, "stat {} terms {} degree {} content {}", n + 1, s.terms, s.degree, s.content);
    }
    for (n, p) in cert.omega.iter().enumerate() {
        let _ = writeln!(out, "omega {}", n + 1);
        for (m, c) in p.terms().rev() {
            out.push_str(&render_term(m, c));
            out.push('\n');
        }
    }
    out.push_str("end\n");
    out
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    peeked: Option<(usize, &'a str)>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines { inner: text.lines().enumerate(), peeked: None }
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        self.peeked.take().or_else(|| self.inner.next().map(|(n, l)| (n + 1, l)))
    }

    fn peek(&mut self) -> Option<(usize, &'a str)> {
        if self.peeked.is_none() {
            self.peeked = self.next();
        }
        self.peeked
    }

    fn expect(&mut self) -> Result<(usize, &'a str)> {
        self.next().ok_or(Error::Parse { pos: 0, msg: "unexpected end of certificate".into() })
    }

    /// Reads `<key> <fields...>` and returns the fields.
    fn keyed(&mut self, key: &str) -> Result<(usize, Vec<&'a str>)> {
        let (n, line) = self.expect()?;
        let mut words = line.split(' ');
        if words.next() != Some(key) {
            return Err(Error::Parse { pos: n, msg: format!("expected `{key}` line, found {line:?}") });
        }
        Ok((n, words.collect()))
    }
}

fn number<T: std::str::FromStr>(line: usize, word: Option<&&str>) -> Result<T> {
    word.and_then(|w| w.parse().ok()).ok_or(Error::Parse { pos: line, msg: "expected a number".into() })
}

fn check_index(line: usize, found: usize, want: usize) -> Result<()> {
    if found != want {
        return Err(Error::Parse { pos: line, msg: format!("expected index {want}, found {found}") });
    }
    Ok(())
}

/// Parses a certificate and checks that the recorded statistics describe
/// the stored polynomials.
pub fn parse(text: &str) -> Result<OmegaCertificate> {
    let mut lines = Lines::new(text);
    let (n, first) = lines.expect()?;
    if first != FORMAT_LINE {
        return Err(Error::Parse { pos: n, msg: format!("unsupported header {first:?}") });
    }
    let (n, f) = lines.keyed("k")?;
    let k: usize = number(n, f.first())?;
    let (_, f) = lines.keyed("algorithm")?;
    let algorithm = f.join(" ");
    let (n, f) = lines.keyed("rows")?;
    let n_rows: usize = number(n, f.first())?;
    let mut row_labels = Vec::with_capacity(n_rows);
    for want in 1..=n_rows {
        let (n, f) = lines.keyed("row")?;
        check_index(n, number(n, f.first())?, want)?;
        if f.len() != 2 {
            return Err(Error::Parse { pos: n, msg: "row label must be a single word".into() });
        }
        row_labels.push(f[1].to_string());
    }
    let (n, f) = lines.keyed("coords")?;
    let n_coords: usize = number(n, f.first())?;
    let mut stats = Vec::with_capacity(n_coords);
    for want in 1..=n_coords {
        let (n, f) = lines.keyed("stat")?;
        check_index(n, number(n, f.first())?, want)?;
        if f.len() != 7 || f[1] != "terms" || f[3] != "degree" || f[5] != "content" {
            return Err(Error::Parse { pos: n, msg: "malformed stat line".into() });
        }
        let content: BigInt = number(n, f.get(6))?;
        stats.push(CoordStats { terms: number(n, f.get(2))?, degree: number(n, f.get(4))?, content });
    }
    let mut omega = Vec::with_capacity(n_coords);
    for want in 1..=n_coords {
        let (n, f) = lines.keyed("omega")?;
        check_index(n, number(n, f.first())?, want)?;
        let mut p = Poly::zero();
        while let Some((n, line)) = lines.peek() {
            if line.starts_with("omega ") || line == "end" {
                break;
            }
            lines.next();
            let (m, c) = parse_term(line).map_err(|msg| Error::Parse { pos: n, msg })?;
            p.add_term(m, c);
        }
        omega.push(p);
    }
    let (n, end) = lines.expect()?;
    if end != "end" {
        return Err(Error::Parse { pos: n, msg: format!("expected `end`, found {end:?}") });
    }
    if let Some((n, _)) = lines.next() {
        return Err(Error::Parse { pos: n, msg: "trailing content after `end`".into() });
    }
    let cert = OmegaCertificate::new(k, row_labels, omega, algorithm);
    if cert.stats != stats {
        return Err(Error::Verification("recorded statistics do not match the stored polynomials".into()));
    }
    Ok(cert)
}
