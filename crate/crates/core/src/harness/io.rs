//! Plain-text ring and algebra files.
//!
//! Ring file:
//!
//! ```text
//! ring NAME
//! order N
//! zero I
//! one J
//! names T0 ... T(N-1)      # optional
//! add
//! N rows of N indices
//! mul
//! N rows of N indices
//! end
//! ```
//!
//! Algebra file:
//!
//! ```text
//! algebra NAME
//! modulus P
//! dim D
//! basis B0 ... B(D-1)
//! unit c0 ... c(D-1)
//! mul Bi Bj = c0 ... c(D-1)   # D*D lines, any order
//! end
//! ```
//!
//! `#` starts a comment; line breaks inside a table are not significant.

use std::fmt::Write as _;
use std::path::Path;

use super::HarnessError;
use crate::config::Limits;
use crate::constructions::{structure_algebra, PresentedAlgebra};
use crate::ring::{validate_ring, FiniteRing, RawTables};

struct Tokens {
    items: Vec<(usize, String)>,
    pos: usize,
    last_line: usize,
}

impl Tokens {
    fn new(text: &str) -> Self {
        let mut items = Vec::new();
        let mut last_line = 1;
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("");
            for t in line.split_whitespace() {
                items.push((i + 1, t.to_string()));
            }
            last_line = i + 1;
        }
        Tokens { items, pos: 0, last_line }
    }

    fn peek(&self) -> Option<&str> {
        self.items.get(self.pos).map(|(_, t)| t.as_str())
    }

    fn err(&self, message: impl Into<String>) -> HarnessError {
        let (line, token) = match self.items.get(self.pos) {
            Some((l, t)) => (*l, t.clone()),
            None => (self.last_line, "<eof>".to_string()),
        };
        HarnessError::Parse {
            line,
            token,
            message: message.into(),
        }
    }

    fn next(&mut self, what: &str) -> Result<(usize, String), HarnessError> {
        match self.items.get(self.pos) {
            Some(t) => {
                self.pos += 1;
                Ok(t.clone())
            }
            None => Err(self.err(format!("expected {what}"))),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<(), HarnessError> {
        if self.peek() == Some(kw) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected `{kw}`")))
        }
    }

    fn number(&mut self, what: &str) -> Result<usize, HarnessError> {
        match self.peek().map(str::parse::<usize>) {
            Some(Ok(v)) => {
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.err(format!("expected {what}"))),
        }
    }

    /// Remaining tokens on the line of the current token.
    fn rest_of_line(&mut self) -> Vec<String> {
        let Some(&(line, _)) = self.items.get(self.pos) else {
            return Vec::new();
        };
        let mut out = Vec::new();
        while let Some((l, t)) = self.items.get(self.pos) {
            if *l != line {
                break;
            }
            out.push(t.clone());
            self.pos += 1;
        }
        out
    }

    fn line_of_previous(&self) -> usize {
        self.pos.checked_sub(1).map_or(0, |p| self.items[p].0)
    }

    fn finish(&mut self) -> Result<(), HarnessError> {
        self.keyword("end")?;
        if self.peek().is_some() {
            return Err(self.err("trailing input after `end`"));
        }
        Ok(())
    }
}

/// Parses ring-format text into unvalidated tables.
pub fn parse_ring_text(text: &str) -> Result<RawTables, HarnessError> {
    let mut t = Tokens::new(text);
    t.keyword("ring")?;
    let header = t.line_of_previous();
    let name = if t.items.get(t.pos).is_some_and(|(l, _)| *l == header) {
        t.rest_of_line().join(" ")
    } else {
        return Err(t.err("expected ring name on the `ring` line"));
    };
    t.keyword("order")?;
    let n = t.number("order")?;
    if n == 0 {
        return Err(HarnessError::Parse {
            line: t.line_of_previous(),
            token: "0".into(),
            message: "order must be at least 1".into(),
        });
    }
    t.keyword("zero")?;
    let zero = t.number("zero index")?;
    t.keyword("one")?;
    let one = t.number("identity index")?;
    let mut names = None;
    if t.peek() == Some("names") {
        t.pos += 1;
        let mut v = Vec::with_capacity(n);
        for _ in 0..n {
            v.push(t.next("element name")?.1);
        }
        names = Some(v);
    }
    let table = |t: &mut Tokens, kw: &str| -> Result<Vec<Vec<usize>>, HarnessError> {
        t.keyword(kw)?;
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let mut row = Vec::with_capacity(n);
            for _ in 0..n {
                let x = t.number("table entry")?;
                if x >= n {
                    t.pos -= 1;
                    return Err(t.err(format!("entry out of range for order {n}")));
                }
                row.push(x);
            }
            rows.push(row);
        }
        Ok(rows)
    };
    let add = table(&mut t, "add")?;
    let mul = table(&mut t, "mul")?;
    t.finish()?;
    Ok(RawTables {
        name,
        add,
        mul,
        zero,
        one,
        names,
    })
}

/// Parses algebra-format text.
pub fn parse_algebra_text(text: &str) -> Result<PresentedAlgebra, HarnessError> {
    let mut t = Tokens::new(text);
    t.keyword("algebra")?;
    let header = t.line_of_previous();
    let name = if t.items.get(t.pos).is_some_and(|(l, _)| *l == header) {
        t.rest_of_line().join(" ")
    } else {
        return Err(t.err("expected algebra name on the `algebra` line"));
    };
    t.keyword("modulus")?;
    let p = t.number("modulus")?;
    t.keyword("dim")?;
    let d = t.number("dimension")?;
    t.keyword("basis")?;
    let mut basis = Vec::with_capacity(d);
    for _ in 0..d {
        let (_, b) = t.next("basis name")?;
        if basis.contains(&b) {
            t.pos -= 1;
            return Err(t.err("duplicate basis name"));
        }
        basis.push(b);
    }
    let coords = |t: &mut Tokens| -> Result<Vec<usize>, HarnessError> {
        (0..d).map(|_| t.number("coordinate")).collect()
    };
    t.keyword("unit")?;
    let unit = coords(&mut t)?;
    let mut products = vec![vec![None; d]; d];
    for _ in 0..d * d {
        t.keyword("mul")?;
        let index = |t: &mut Tokens| -> Result<usize, HarnessError> {
            match t.peek().and_then(|b| basis.iter().position(|x| x == b)) {
                Some(i) => {
                    t.pos += 1;
                    Ok(i)
                }
                None => Err(t.err("expected a basis name")),
            }
        };
        let i = index(&mut t)?;
        let j = index(&mut t)?;
        t.keyword("=")?;
        if products[i][j].is_some() {
            t.pos -= 1;
            return Err(t.err(format!("product {} {} given twice", basis[i], basis[j])));
        }
        products[i][j] = Some(coords(&mut t)?);
    }
    t.finish()?;
    Ok(PresentedAlgebra {
        name,
        modulus: p,
        basis,
        unit,
        products: products
            .into_iter()
            .map(|row| row.into_iter().map(Option::unwrap_or_default).collect())
            .collect(),
    })
}

/// Parses either format and validates the result.
pub fn parse_ring(text: &str, limits: &Limits) -> Result<FiniteRing, HarnessError> {
    let first = Tokens::new(text).peek().map(str::to_string);
    match first.as_deref() {
        Some("algebra") => Ok(structure_algebra(&parse_algebra_text(text)?, limits.order_cap)?),
        _ => Ok(validate_ring(parse_ring_text(text)?)?),
    }
}

pub fn load_ring(path: &Path, limits: &Limits) -> Result<FiniteRing, HarnessError> {
    let text = std::fs::read_to_string(path).map_err(|e| HarnessError::Io(format!("{}: {e}", path.display())))?;
    parse_ring(&text, limits)
}

/// Ring-format text. Element names are written only when every name is a
/// single token.
pub fn ring_to_text(r: &FiniteRing) -> String {
    let n = r.order();
    let mut s = String::new();
    let name = if r.name().trim().is_empty() { "unnamed" } else { r.name() };
    let _ = writeln!(s, "ring {}", name.replace('#', "_").split_whitespace().collect::<Vec<_>>().join(" "));
    let _ = writeln!(s, "order {n}\nzero {}\none {}", r.zero(), r.one());
    if let Some(names) = r.names() {
        if names.iter().all(|x| !x.is_empty() && !x.contains(char::is_whitespace) && !x.contains('#')) {
            let _ = writeln!(s, "names {}", names.join(" "));
        }
    }
    for (kw, table) in [("add", r.add_table()), ("mul", r.mul_table())] {
        let _ = writeln!(s, "{kw}");
        for row in table.chunks(n) {
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            let _ = writeln!(s, "{}", cells.join(" "));
        }
    }
    s.push_str("end\n");
    s
}

pub fn algebra_to_text(a: &PresentedAlgebra) -> String {
    let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    let mut s = String::new();
    let _ = writeln!(s, "algebra {}", a.name);
    let _ = writeln!(s, "modulus {}\ndim {}", a.modulus, a.dim());
    let _ = writeln!(s, "basis {}", a.basis.join(" "));
    let _ = writeln!(s, "unit {}", join(&a.unit));
    for (i, row) in a.products.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let _ = writeln!(s, "mul {} {} = {}", a.basis[i], a.basis[j], join(v));
        }
    }
    s.push_str("end\n");
    s
}

pub fn save_ring(r: &FiniteRing, path: &Path) -> Result<(), HarnessError> {
    std::fs::write(path, ring_to_text(r)).map_err(|e| HarnessError::Io(format!("{}: {e}", path.display())))
}
