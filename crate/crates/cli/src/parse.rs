//! Line-oriented input files for theories, quivers and toric charges.

use std::fmt;

use monopole_core::gauge::{GaugeGroup, MatterWeight, QuiverTheory, Theory};
use monopole_core::lie::CartanType;
use monopole_core::toric::ChargeData;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Quiver file contents: the flavor type together with the quiver data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuiverFile {
    pub series: CartanType,
    pub rank: usize,
    pub quiver: QuiverTheory,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Theory(Theory),
    Quiver(QuiverFile),
    Charges(ChargeData),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Theory,
    Quiver,
    Charges,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::Theory => "theory",
            Mode::Quiver => "quiver",
            Mode::Charges => "charges",
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let content = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in content.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token {
                    text: &content[s..i],
                    column: content[..s].chars().count() + 1,
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &content[s..],
            column: content[..s].chars().count() + 1,
        });
    }
    out
}

struct Parser {
    line: usize,
    mode: Option<(Mode, usize)>,
    // theory
    factors: Vec<usize>,
    weights: Vec<(usize, usize, Vec<i64>, u64)>,
    // quiver
    quiver_type: Option<(CartanType, usize)>,
    edges: Vec<(usize, usize)>,
    dim_v: Option<Vec<u64>>,
    dim_w: Option<Vec<u64>>,
    // charges
    charge_d: Option<usize>,
    rows: Vec<(usize, Vec<i64>)>,
}

impl Parser {
    fn err(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column,
            message: message.into(),
        }
    }

    fn enter(&mut self, mode: Mode, tok: Token<'_>) -> Result<(), ParseError> {
        match self.mode {
            None => {
                self.mode = Some((mode, self.line));
                Ok(())
            }
            Some((m, _)) if m == mode => Ok(()),
            Some((m, line)) => Err(self.err(
                tok.column,
                format!(
                    "`{}` is a {} directive but line {line} started a {} file",
                    tok.text,
                    mode.name(),
                    m.name()
                ),
            )),
        }
    }

    fn int<T: std::str::FromStr>(&self, tok: Token<'_>, what: &str) -> Result<T, ParseError> {
        tok.text
            .parse()
            .map_err(|_| self.err(tok.column, format!("malformed {what} `{}`", tok.text)))
    }

    fn ints(&self, toks: &[Token<'_>]) -> Result<Vec<i64>, ParseError> {
        toks.iter().map(|&t| self.int(t, "integer")).collect()
    }

    fn nonneg(&self, toks: &[Token<'_>]) -> Result<Vec<u64>, ParseError> {
        toks.iter().map(|&t| self.int(t, "non-negative integer")).collect()
    }

    fn arity(&self, toks: &[Token<'_>], n: usize) -> Result<(), ParseError> {
        if toks.len() - 1 != n {
            let col = toks.get(n + 1).map_or_else(|| toks[0].column, |t| t.column);
            return Err(self.err(
                col,
                format!("`{}` takes {n} argument(s), got {}", toks[0].text, toks.len() - 1),
            ));
        }
        Ok(())
    }

    fn directive(&mut self, toks: &[Token<'_>]) -> Result<(), ParseError> {
        let head = toks[0];
        let args = &toks[1..];
        match head.text {
            "gauge" => {
                self.enter(Mode::Theory, head)?;
                self.arity(toks, 2)?;
                if args[0].text != "GL" {
                    return Err(self.err(args[0].column, format!("unsupported group `{}`, only GL", args[0].text)));
                }
                let n: usize = self.int(args[1], "rank")?;
                if n == 0 {
                    return Err(self.err(args[1].column, "GL(0) factor"));
                }
                self.factors.push(n);
            }
            "weight" => {
                self.enter(Mode::Theory, head)?;
                let (coords, mult) = match args.last() {
                    Some(t) if t.text.starts_with('x') => {
                        let m: u64 = self.int(
                            Token {
                                text: &t.text[1..],
                                column: t.column + 1,
                            },
                            "multiplicity",
                        )?;
                        if m == 0 {
                            return Err(self.err(t.column, "multiplicity must be at least 1"));
                        }
                        (&args[..args.len() - 1], m)
                    }
                    _ => (args, 1),
                };
                let w = self.ints(coords)?;
                self.weights.push((self.line, head.column, w, mult));
            }
            "quiver" => {
                self.enter(Mode::Quiver, head)?;
                self.arity(toks, 2)?;
                if self.quiver_type.is_some() {
                    return Err(self.err(head.column, "repeated `quiver` directive"));
                }
                let series: CartanType = args[0]
                    .text
                    .parse()
                    .map_err(|_| self.err(args[0].column, format!("unknown series `{}`", args[0].text)))?;
                let rank: usize = self.int(args[1], "rank")?;
                if rank == 0 {
                    return Err(self.err(args[1].column, "rank must be positive"));
                }
                self.quiver_type = Some((series, rank));
            }
            "edge" | "v" | "w" => {
                self.enter(Mode::Quiver, head)?;
                let Some((_, rank)) = self.quiver_type else {
                    return Err(self.err(head.column, format!("`{}` before `quiver`", head.text)));
                };
                if head.text == "edge" {
                    self.arity(toks, 2)?;
                    let mut ends = [0usize; 2];
                    for (k, &t) in args.iter().enumerate() {
                        let i: usize = self.int(t, "vertex")?;
                        if i == 0 || i > rank {
                            return Err(self.err(t.column, format!("vertex {i} outside 1..={rank}")));
                        }
                        ends[k] = i - 1;
                    }
                    self.edges.push((ends[0], ends[1]));
                } else {
                    self.arity(toks, rank)?;
                    let dims = self.nonneg(args)?;
                    let slot = if head.text == "v" {
                        &mut self.dim_v
                    } else {
                        &mut self.dim_w
                    };
                    if slot.replace(dims).is_some() {
                        return Err(self.err(head.column, format!("repeated `{}` line", head.text)));
                    }
                }
            }
            "charges" => {
                self.enter(Mode::Charges, head)?;
                if self.charge_d.is_some() || !self.rows.is_empty() {
                    return Err(self.err(head.column, "`charges` must come first and only once"));
                }
                match args.len() {
                    0 => {}
                    1 => self.charge_d = Some(self.int(args[0], "dimension")?),
                    _ => self.arity(toks, 1)?,
                }
            }
            "row" => {
                self.enter(Mode::Charges, head)?;
                let row = self.ints(args)?;
                let expected = self.charge_d.or_else(|| self.rows.first().map(|r| r.1.len()));
                if let Some(d) = expected {
                    if row.len() != d {
                        return Err(self.err(head.column, format!("row has {} entries, expected {d}", row.len())));
                    }
                } else if row.is_empty() {
                    return Err(self.err(head.column, "empty row"));
                }
                self.rows.push((self.line, row));
            }
            other => return Err(self.err(head.column, format!("unknown directive `{other}`"))),
        }
        Ok(())
    }

    fn finish(self) -> Result<Input, ParseError> {
        let at = |line: usize, column: usize, message: String| ParseError { line, column, message };
        let Some((mode, first)) = self.mode else {
            return Err(at(self.line.max(1), 1, "empty input".into()));
        };
        match mode {
            Mode::Theory => {
                if self.factors.is_empty() {
                    return Err(at(first, 1, "no `gauge` directive".into()));
                }
                let rank: usize = self.factors.iter().sum();
                let mut matter = Vec::new();
                for (line, col, w, m) in self.weights {
                    if w.len() != rank {
                        return Err(at(
                            line,
                            col,
                            format!("weight has {} entries, gauge rank is {rank}", w.len()),
                        ));
                    }
                    matter.push(MatterWeight::new(w, m));
                }
                Ok(Input::Theory(Theory::new(GaugeGroup::new(self.factors), matter)))
            }
            Mode::Quiver => {
                let Some((series, rank)) = self.quiver_type else {
                    return Err(at(first, 1, "missing `quiver` directive".into()));
                };
                let dim_v = self.dim_v.ok_or_else(|| at(first, 1, "missing `v` line".into()))?;
                let dim_w = self.dim_w.ok_or_else(|| at(first, 1, "missing `w` line".into()))?;
                let quiver = QuiverTheory::new(self.edges, dim_v, dim_w).map_err(|e| at(first, 1, e.to_string()))?;
                Ok(Input::Quiver(QuiverFile { series, rank, quiver }))
            }
            Mode::Charges => {
                let d = match (self.charge_d, self.rows.first()) {
                    (Some(d), _) => d,
                    (None, Some((_, r))) => r.len(),
                    (None, None) => return Err(at(first, 1, "`charges` without rows needs a dimension".into())),
                };
                let line = self.rows.last().map_or(first, |r| r.0);
                let rows = self.rows.into_iter().map(|r| r.1).collect();
                let c = ChargeData::new(d, rows).map_err(|e| at(line, 1, e.to_string()))?;
                Ok(Input::Charges(c))
            }
        }
    }
}

pub fn parse_input(text: &str) -> Result<Input, ParseError> {
    let mut p = Parser {
        line: 0,
        mode: None,
        factors: Vec::new(),
        weights: Vec::new(),
        quiver_type: None,
        edges: Vec::new(),
        dim_v: None,
        dim_w: None,
        charge_d: None,
        rows: Vec::new(),
    };
    for (i, line) in text.lines().enumerate() {
        p.line = i + 1;
        let toks = tokenize(line);
        if !toks.is_empty() {
            p.directive(&toks)?;
        }
    }
    p.finish()
}

fn join(xs: impl IntoIterator<Item = impl ToString>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Canonical text; parsing it gives back an identical value.
pub fn render(input: &Input) -> String {
    let mut out = String::new();
    match input {
        Input::Theory(t) => {
            for n in &t.group.factors {
                out.push_str(&format!("gauge GL {n}\n"));
            }
            for m in &t.matter {
                out.push_str("weight");
                if !m.weight.is_empty() {
                    out.push(' ');
                    out.push_str(&join(&m.weight));
                }
                if m.multiplicity != 1 {
                    out.push_str(&format!(" x{}", m.multiplicity));
                }
                out.push('\n');
            }
        }
        Input::Quiver(q) => {
            out.push_str(&format!("quiver {} {}\n", q.series, q.rank));
            for (a, b) in &q.quiver.edges {
                out.push_str(&format!("edge {} {}\n", a + 1, b + 1));
            }
            out.push_str(&format!("v {}\n", join(&q.quiver.dim_v)));
            out.push_str(&format!("w {}\n", join(&q.quiver.dim_w)));
        }
        Input::Charges(c) => {
            out.push_str(&format!("charges {}\n", c.d()));
            for row in c.gauge_charges() {
                out.push_str(&format!("row {}\n", join(row)));
            }
        }
    }
    out
}
