//! Text formats: the line-oriented tangle language, braid words, and
//! invariant reports.
//!
//! ```text
//! // comments run to the end of the line
//! object: V^ V_v
//! slice: cap@0
//! ```
//!
//! Interval tokens are `V^`, `V_v`, `V#^`, `V#_v` (`#` marks a shaded
//! ribbon). Slices hold one generator each: `id`, `cap@i`, `cup@i`,
//! `cup(A B)@i`, `x+@i`, `x-@i`, `h+(n)@i`, `h-(n)@i`. A plain `cup@i`
//! opens `V^ V_v`.
//!
//! Braids are written `braid 3: s1 s2^-1 s1 ; close`.

mod report;

use thiserror::Error;

use crate::tangle::{
    braid_closure, Diagram, Direction, Generator, Interval, Shading, TangleError,
};

pub use report::{emit, Format, InvariantReport};

/// Braids wider than this are rejected.
pub const MAX_BRAID_STRANDS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Lexical,
    UnknownLabel,
    Boundary,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
    pub message: String,
}

impl ParseError {
    fn lexical(line: usize, col: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            col,
            kind: ParseErrorKind::Lexical,
            message: message.into(),
        }
    }
}

/// Cursor over one line, tracking 1-based columns in characters.
struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    line: usize,
    base_col: usize,
    text: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, line: usize, base_col: usize) -> Self {
        Self {
            chars: text.char_indices().collect(),
            pos: 0,
            line,
            base_col,
            text,
        }
    }

    fn col(&self) -> usize {
        self.base_col + self.pos
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|x| x.1)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError::lexical(self.line, self.col(), message)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        let n = s.chars().count();
        let here: String = self.chars[self.pos..].iter().take(n).map(|x| x.1).collect();
        if here == s {
            self.pos += n;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let digits: String = self.chars[start..self.pos].iter().map(|x| x.1).collect();
        digits.parse().map_err(|_| ParseError::lexical(self.line, self.base_col + start, "number too large"))
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        let start = self.pos;
        if !self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            return Err(self.err("expected a label"));
        }
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        Ok(self.chars[start..self.pos].iter().map(|x| x.1).collect())
    }

    fn interval(&mut self) -> Result<(usize, Interval), ParseError> {
        let col = self.col();
        let label = self.ident()?;
        let shading = if self.eat('#') { Shading::Dark } else { Shading::Light };
        let dir = if self.eat('^') {
            Direction::Up
        } else if self.eat_str("_v") {
            Direction::Down
        } else {
            return Err(self.err("expected '^' or '_v' after the label"));
        };
        Ok((col, Interval::new(&label, dir, shading)))
    }

    fn rest(&self) -> &'a str {
        match self.chars.get(self.pos) {
            Some(&(i, _)) => &self.text[i..],
            None => "",
        }
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find("//") {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Splits `keyword:` off a trimmed line, returning the remainder and its
/// starting column.
fn keyword<'a>(line: &'a str, kw: &str) -> Option<(&'a str, usize)> {
    let trimmed = line.trim_start();
    let lead = line.chars().count() - trimmed.chars().count();
    let rest = trimmed.strip_prefix(kw)?.strip_prefix(':')?;
    Some((rest, lead + kw.chars().count() + 2))
}

fn parse_generator(cur: &mut Cursor) -> Result<(Generator, Vec<(usize, String)>), ParseError> {
    let mut labels = Vec::new();
    let g = if cur.eat_str("id") {
        Generator::Identity
    } else if cur.eat_str("cap") {
        cur.expect('@')?;
        Generator::Cap { at: cur.number()? }
    } else if cur.eat_str("cup") {
        if cur.eat('(') {
            cur.skip_ws();
            let (c1, left) = cur.interval()?;
            cur.skip_ws();
            let (c2, right) = cur.interval()?;
            cur.skip_ws();
            cur.expect(')')?;
            labels.push((c1, left.label.clone()));
            labels.push((c2, right.label.clone()));
            cur.expect('@')?;
            Generator::Cup {
                at: cur.number()?,
                left,
                right,
            }
        } else {
            cur.expect('@')?;
            labels.push((cur.col(), "V".to_string()));
            Generator::default_cup(cur.number()?)
        }
    } else if cur.eat('x') {
        let positive = sign(cur)?;
        cur.expect('@')?;
        Generator::Crossing {
            at: cur.number()?,
            positive,
        }
    } else if cur.eat('h') {
        let positive = sign(cur)?;
        cur.expect('(')?;
        let n = cur.number()?;
        cur.expect(')')?;
        cur.expect('@')?;
        Generator::HalfTwist {
            at: cur.number()?,
            n,
            positive,
        }
    } else {
        return Err(cur.err("unknown generator"));
    };
    Ok((g, labels))
}

fn sign(cur: &mut Cursor) -> Result<bool, ParseError> {
    if cur.eat('+') {
        Ok(true)
    } else if cur.eat('-') {
        Ok(false)
    } else {
        Err(cur.err("expected '+' or '-'"))
    }
}

fn boundary_error(line: usize, col: usize, e: TangleError) -> ParseError {
    ParseError {
        line,
        col,
        kind: ParseErrorKind::Boundary,
        message: e.to_string(),
    }
}

/// Parses a tangle program; `known` restricts the allowed labels.
pub fn parse_tangle_with(text: &str, known: Option<&[String]>) -> Result<Diagram, ParseError> {
    let mut diagram: Option<Diagram> = None;
    let check_label = |line: usize, col: usize, label: &str| -> Result<(), ParseError> {
        match known {
            Some(k) if !k.iter().any(|x| x == label) => Err(ParseError {
                line,
                col,
                kind: ParseErrorKind::UnknownLabel,
                message: format!("unknown label {label}"),
            }),
            _ => Ok(()),
        }
    };
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = strip_comment(raw);
        if body.trim().is_empty() {
            continue;
        }
        if let Some((rest, col)) = keyword(body, "object") {
            if diagram.is_some() {
                return Err(ParseError::lexical(line, 1, "object must come first and only once"));
            }
            let mut cur = Cursor::new(rest, line, col);
            let mut ivs = Vec::new();
            loop {
                cur.skip_ws();
                if cur.at_end() {
                    break;
                }
                let (c, iv) = cur.interval()?;
                check_label(line, c, &iv.label)?;
                ivs.push(iv);
                if !cur.at_end() && !cur.peek().is_some_and(char::is_whitespace) {
                    return Err(cur.err("expected whitespace between intervals"));
                }
            }
            diagram = Some(Diagram::identity(crate::tangle::BoundaryObject(ivs)));
        } else if let Some((rest, col)) = keyword(body, "slice") {
            let d = diagram.get_or_insert_with(Diagram::empty);
            let mut cur = Cursor::new(rest, line, col);
            cur.skip_ws();
            let gen_col = cur.col();
            let (g, labels) = parse_generator(&mut cur)?;
            cur.skip_ws();
            if !cur.at_end() {
                return Err(cur.err(format!("unexpected trailing input '{}'", cur.rest().trim_end())));
            }
            for (c, l) in labels {
                check_label(line, c, &l)?;
            }
            d.push(g).map_err(|e| boundary_error(line, gen_col, e))?;
        } else {
            let lead = body.chars().count() - body.trim_start().chars().count();
            return Err(ParseError::lexical(line, lead + 1, "expected 'object:' or 'slice:'"));
        }
    }
    Ok(diagram.unwrap_or_else(Diagram::empty))
}

pub fn parse_tangle(text: &str) -> Result<Diagram, ParseError> {
    parse_tangle_with(text, None)
}

/// Parses `braid <n>: s1 s2^-1 ... ; close` into its closure with all
/// strands up and unshaded, labeled `label`.
pub fn parse_braid(text: &str, label: &str) -> Result<Diagram, ParseError> {
    let mut found: Option<Diagram> = None;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = strip_comment(raw);
        if body.trim().is_empty() {
            continue;
        }
        if found.is_some() {
            return Err(ParseError::lexical(line, 1, "only one braid per input"));
        }
        let lead = body.chars().count() - body.trim_start().chars().count();
        let mut cur = Cursor::new(body.trim_start(), line, lead + 1);
        if !cur.eat_str("braid") {
            return Err(cur.err("expected 'braid'"));
        }
        cur.skip_ws();
        let n_col = cur.col();
        let n = cur.number()?;
        if n == 0 || n > MAX_BRAID_STRANDS {
            return Err(ParseError::lexical(
                line,
                n_col,
                format!("strand count must be between 1 and {MAX_BRAID_STRANDS}"),
            ));
        }
        cur.skip_ws();
        cur.expect(':')?;
        let mut word = Vec::new();
        loop {
            cur.skip_ws();
            if cur.eat(';') {
                break;
            }
            let col = cur.col();
            if !cur.eat('s') {
                return Err(cur.err("expected a generator s<k> or ';'"));
            }
            let i = cur.number()?;
            let positive = if cur.eat('^') {
                if cur.eat_str("-1") {
                    false
                } else if cur.eat('1') {
                    true
                } else {
                    return Err(cur.err("exponent must be 1 or -1"));
                }
            } else {
                true
            };
            if i == 0 || i >= n {
                return Err(ParseError {
                    line,
                    col,
                    kind: ParseErrorKind::Boundary,
                    message: format!("generator s{i} out of range for {n} strands"),
                });
            }
            word.push((i, positive));
        }
        cur.skip_ws();
        if !cur.eat_str("close") {
            return Err(cur.err("expected 'close'"));
        }
        cur.skip_ws();
        if !cur.at_end() {
            return Err(cur.err("unexpected trailing input"));
        }
        found = Some(braid_closure(n, &word, label).map_err(|e| boundary_error(line, 1, e))?);
    }
    found.ok_or_else(|| ParseError::lexical(1, 1, "empty braid input"))
}

/// Whether the first meaningful line of `text` is a braid.
pub fn is_braid(text: &str) -> bool {
    text.lines()
        .map(|l| strip_comment(l).trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("braid"))
}

/// Parses either a braid or a tangle program.
pub fn parse_link(text: &str, known: Option<&[String]>) -> Result<Diagram, ParseError> {
    if is_braid(text) {
        parse_braid(text, "V")
    } else {
        parse_tangle_with(text, known)
    }
}

/// The tangle program for a diagram; `parse_tangle(&print(d)) == d`.
pub fn print(d: &Diagram) -> String {
    let mut out = format!("object: {}", d.source()).trim_end().to_string();
    out.push('\n');
    for g in d.slices() {
        out.push_str(&format!("slice: {g}\n"));
    }
    out
}

#[cfg(test)]
mod tests;
