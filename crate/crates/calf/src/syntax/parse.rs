//! S-expression front-end for `.calf` sources.
//!
//! One `(def name type term)` form per definition. The term grammar is
//! polarized: the parser knows at every position whether a value or a
//! computation is expected, and placing a computation form in a value
//! position is reported as a polarity violation. `pair` is the one
//! overloaded keyword: in a value position it is the value pair, in a
//! computation position it pairs a value with a computation.
//!
//! Costs are written as bare decimals (naturals) or `(w s)` pairs
//! (work/span). Decimal literals in value positions abbreviate iterated
//! successors of `zero`. Comments run from `;` to end of line.

use super::ast::*;
use crate::cost::Cost;
use std::fmt;
use std::rc::Rc;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{col}: {msg}")]
pub struct ParseError {
    pub line: u32,
    pub col: u32,
    pub msg: String,
}

/// Generic s-expression with source positions.
#[derive(Clone, Debug, PartialEq)]
pub enum Sexp {
    Atom { text: String, span: Span },
    List { items: Vec<Sexp>, span: Span },
}

impl Sexp {
    pub fn span(&self) -> Span {
        match self {
            Sexp::Atom { span, .. } | Sexp::List { span, .. } => *span,
        }
    }

    fn head(&self) -> Option<&str> {
        match self {
            Sexp::List { items, .. } => match items.first() {
                Some(Sexp::Atom { text, .. }) => Some(text.as_str()),
                _ => None,
            },
            _ => None,
        }
    }
}

struct Reader<'a> {
    src: &'a [u8],
    pos: usize,
    line: u32,
    col: u32,
}

impl<'a> Reader<'a> {
    fn new(src: &'a str) -> Self {
        Reader { src: src.as_bytes(), pos: 0, line: 1, col: 1 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { line: self.line, col: self.col, msg: msg.into() })
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn advance(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        if b == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(b)
    }

    fn skip_trivia(&mut self) {
        loop {
            match self.peek() {
                Some(b) if (b as char).is_whitespace() => {
                    self.advance();
                }
                Some(b';') => {
                    while let Some(b) = self.peek() {
                        if b == b'\n' {
                            break;
                        }
                        self.advance();
                    }
                }
                _ => break,
            }
        }
    }

    fn here(&self) -> Span {
        Span::new(self.line, self.col)
    }

    fn read(&mut self) -> Result<Sexp, ParseError> {
        self.skip_trivia();
        let span = self.here();
        match self.peek() {
            None => self.err("unexpected end of input"),
            Some(b'(') => {
                self.advance();
                let mut items = Vec::new();
                loop {
                    self.skip_trivia();
                    match self.peek() {
                        None => return self.err("unclosed form"),
                        Some(b')') => {
                            self.advance();
                            return Ok(Sexp::List { items, span });
                        }
                        _ => items.push(self.read()?),
                    }
                }
            }
            Some(b')') => self.err("unexpected `)`"),
            Some(_) => {
                let mut text = String::new();
                while let Some(b) = self.peek() {
                    let c = b as char;
                    if c.is_whitespace() || b == b'(' || b == b')' || b == b';' {
                        break;
                    }
                    text.push(c);
                    self.advance();
                }
                Ok(Sexp::Atom { text, span })
            }
        }
    }

    fn read_all(&mut self) -> Result<Vec<Sexp>, ParseError> {
        let mut out = Vec::new();
        loop {
            self.skip_trivia();
            if self.peek().is_none() {
                return Ok(out);
            }
            out.push(self.read()?);
        }
    }
}

/// Read raw s-expressions (used by the mutation tests).
pub fn read_sexps(src: &str) -> Result<Vec<Sexp>, ParseError> {
    Reader::new(src).read_all()
}

const COMP_KEYWORDS: &[&str] = &[
    "lam", "ap", "ret", "bind", "force", "step", "rec-nat", "rec-list", "case", "split", "par",
    "if",
];

const VALUE_KEYWORDS: &[&str] =
    &["thunk", "zero", "suc", "nil", "cons", "inl", "inr", "triv", "true", "false", "meta", "pair"];

const TYPE_KEYWORDS: &[&str] =
    &["F", "U", "arrow", "pairc", "sum", "prod", "list", "nat", "unit", "bool"];

fn is_ident(text: &str) -> bool {
    let mut chars = text.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-' || c == '\'')
}

fn is_reserved(text: &str) -> bool {
    COMP_KEYWORDS.contains(&text) || VALUE_KEYWORDS.contains(&text) || text == "def"
}

fn err_at<T>(span: Span, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line: span.line, col: span.col, msg: msg.into() })
}

fn parse_name(sexp: &Sexp, what: &str) -> Result<String, ParseError> {
    match sexp {
        Sexp::Atom { text, .. } if is_ident(text) && !is_reserved(text) => Ok(text.clone()),
        _ => err_at(sexp.span(), format!("expected {what}")),
    }
}

fn parse_decimal(sexp: &Sexp) -> Result<u64, ParseError> {
    match sexp {
        Sexp::Atom { text, .. } if text.bytes().all(|b| b.is_ascii_digit()) && !text.is_empty() => {
            text.parse()
                .map_err(|_| ParseError {
                    line: sexp.span().line,
                    col: sexp.span().col,
                    msg: format!("decimal literal out of range: {text}"),
                })
        }
        _ => err_at(sexp.span(), "expected a decimal literal"),
    }
}

/// A cost literal: a bare decimal or a `(w s)` pair.
pub fn parse_cost(sexp: &Sexp) -> Result<Cost, ParseError> {
    match sexp {
        Sexp::Atom { .. } => Ok(Cost::Nat(parse_decimal(sexp)?)),
        Sexp::List { items, span } => {
            if items.len() != 2 {
                return err_at(*span, "cost pair must be `(work span)`");
            }
            Ok(Cost::Par { work: parse_decimal(&items[0])?, span: parse_decimal(&items[1])? })
        }
    }
}

pub fn parse_value_type(sexp: &Sexp) -> Result<Rc<ValueType>, ParseError> {
    match sexp {
        Sexp::Atom { text, span } => match text.as_str() {
            "nat" => Ok(Rc::new(ValueType::Nat)),
            "unit" => Ok(Rc::new(ValueType::Unit)),
            "bool" => Ok(Rc::new(ValueType::Bool)),
            "F" | "arrow" | "pairc" => {
                err_at(*span, format!("polarity violation: computation type `{text}` where a value type is required"))
            }
            _ => err_at(*span, format!("unknown value type `{text}`")),
        },
        Sexp::List { items, span } => {
            let head = match items.first() {
                Some(Sexp::Atom { text, .. }) => text.as_str(),
                _ => return err_at(*span, "expected a type form"),
            };
            match head {
                "U" => {
                    expect_len(items, 2, *span, "(U X)")?;
                    Ok(Rc::new(ValueType::U(parse_comp_type(&items[1])?)))
                }
                "sum" => {
                    expect_len(items, 3, *span, "(sum A B)")?;
                    Ok(Rc::new(ValueType::Sum(
                        parse_value_type(&items[1])?,
                        parse_value_type(&items[2])?,
                    )))
                }
                "prod" => {
                    expect_len(items, 3, *span, "(prod A B)")?;
                    Ok(Rc::new(ValueType::Prod(
                        parse_value_type(&items[1])?,
                        parse_value_type(&items[2])?,
                    )))
                }
                "list" => {
                    expect_len(items, 3, *span, "(list c A)")?;
                    Ok(Rc::new(ValueType::List(
                        parse_cost(&items[1])?,
                        parse_value_type(&items[2])?,
                    )))
                }
                "F" | "arrow" | "pairc" => err_at(
                    *span,
                    format!("polarity violation: computation type `{head}` where a value type is required"),
                ),
                _ => err_at(*span, format!("unknown value type form `{head}`")),
            }
        }
    }
}

pub fn parse_comp_type(sexp: &Sexp) -> Result<Rc<CompType>, ParseError> {
    match sexp {
        Sexp::Atom { text, span } => match text.as_str() {
            "nat" | "unit" | "bool" => err_at(
                *span,
                format!("polarity violation: value type `{text}` where a computation type is required"),
            ),
            _ => err_at(*span, format!("unknown computation type `{text}`")),
        },
        Sexp::List { items, span } => {
            let head = match items.first() {
                Some(Sexp::Atom { text, .. }) => text.as_str(),
                _ => return err_at(*span, "expected a type form"),
            };
            match head {
                "F" => {
                    expect_len(items, 2, *span, "(F A)")?;
                    Ok(Rc::new(CompType::F(parse_value_type(&items[1])?)))
                }
                "arrow" => {
                    expect_len(items, 3, *span, "(arrow A X)")?;
                    Ok(Rc::new(CompType::Arrow(
                        parse_value_type(&items[1])?,
                        parse_comp_type(&items[2])?,
                    )))
                }
                "pairc" => {
                    expect_len(items, 3, *span, "(pairc A X)")?;
                    Ok(Rc::new(CompType::PairC(
                        parse_value_type(&items[1])?,
                        parse_comp_type(&items[2])?,
                    )))
                }
                "U" | "sum" | "prod" | "list" => err_at(
                    *span,
                    format!("polarity violation: value type `{head}` where a computation type is required"),
                ),
                _ => err_at(*span, format!("unknown computation type form `{head}`")),
            }
        }
    }
}

fn expect_len(items: &[Sexp], len: usize, span: Span, shape: &str) -> Result<(), ParseError> {
    if items.len() != len {
        err_at(span, format!("malformed form, expected `{shape}`"))
    } else {
        Ok(())
    }
}

fn parse_binder1(sexp: &Sexp) -> Result<String, ParseError> {
    match sexp {
        Sexp::List { items, .. } if items.len() == 1 => parse_name(&items[0], "a binder name"),
        _ => err_at(sexp.span(), "expected a binder `(x)`"),
    }
}

fn parse_binder_n(sexp: &Sexp, n: usize) -> Result<Vec<String>, ParseError> {
    match sexp {
        Sexp::List { items, .. } if items.len() == n => {
            items.iter().map(|i| parse_name(i, "a binder name")).collect()
        }
        _ => err_at(sexp.span(), format!("expected {n} binder names")),
    }
}

pub fn parse_value(sexp: &Sexp) -> Result<Rc<ValueTerm>, ParseError> {
    let span = sexp.span();
    let node = |kind| Ok(Rc::new(ValueTerm { kind, span }));
    match sexp {
        Sexp::Atom { text, .. } => match text.as_str() {
            "zero" => node(ValueKind::Zero),
            "triv" => node(ValueKind::Triv),
            "true" => node(ValueKind::True),
            "false" => node(ValueKind::False),
            "nil" => node(ValueKind::Nil),
            t if t.bytes().all(|b| b.is_ascii_digit()) => {
                let mut v = Rc::new(ValueTerm { kind: ValueKind::Zero, span });
                for _ in 0..parse_decimal(sexp)? {
                    v = Rc::new(ValueTerm { kind: ValueKind::Suc(v), span });
                }
                Ok(v)
            }
            t if COMP_KEYWORDS.contains(&t) => err_at(
                span,
                format!("polarity violation: computation form `{t}` where a value is required"),
            ),
            t if is_ident(t) && !is_reserved(t) => node(ValueKind::Var(t.to_string())),
            t => err_at(span, format!("expected a value, found `{t}`")),
        },
        Sexp::List { items, .. } => {
            let head = match sexp.head() {
                Some(h) => h,
                None => return err_at(span, "expected a value form"),
            };
            if COMP_KEYWORDS.contains(&head) {
                return err_at(
                    span,
                    format!(
                        "polarity violation: computation form `{head}` where a value is required"
                    ),
                );
            }
            match head {
                "suc" => {
                    expect_len(items, 2, span, "(suc v)")?;
                    node(ValueKind::Suc(parse_value(&items[1])?))
                }
                "inl" => {
                    expect_len(items, 2, span, "(inl v)")?;
                    node(ValueKind::Inl(parse_value(&items[1])?))
                }
                "inr" => {
                    expect_len(items, 2, span, "(inr v)")?;
                    node(ValueKind::Inr(parse_value(&items[1])?))
                }
                "pair" => {
                    expect_len(items, 3, span, "(pair v w)")?;
                    node(ValueKind::Pair(parse_value(&items[1])?, parse_value(&items[2])?))
                }
                "cons" => {
                    expect_len(items, 3, span, "(cons v l)")?;
                    node(ValueKind::Cons(parse_value(&items[1])?, parse_value(&items[2])?))
                }
                "thunk" => {
                    expect_len(items, 2, span, "(thunk e)")?;
                    node(ValueKind::Thunk(parse_comp(&items[1])?))
                }
                "meta" => {
                    if items.len() < 2 {
                        return err_at(span, "malformed form, expected `(meta name v ...)`");
                    }
                    let name = parse_name(&items[1], "a host primitive name")?;
                    let args = items[2..]
                        .iter()
                        .map(parse_value)
                        .collect::<Result<Vec<_>, _>>()?;
                    node(ValueKind::Meta(name, args))
                }
                _ => err_at(span, format!("unknown value form `{head}`")),
            }
        }
    }
}

fn parse_step_cost(sexp: &Sexp) -> Result<StepCost, ParseError> {
    if sexp.head() == Some("meta") {
        match sexp {
            Sexp::List { items, span } => {
                if items.len() < 2 {
                    return err_at(*span, "malformed form, expected `(meta name v ...)`");
                }
                let name = parse_name(&items[1], "a host primitive name")?;
                let args = items[2..]
                    .iter()
                    .map(parse_value)
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(StepCost::Meta(name, args))
            }
            _ => unreachable!(),
        }
    } else {
        Ok(StepCost::Lit(parse_cost(sexp)?))
    }
}

pub fn parse_comp(sexp: &Sexp) -> Result<Rc<CompTerm>, ParseError> {
    let span = sexp.span();
    let node = |kind| Ok(Rc::new(CompTerm { kind, span }));
    let items = match sexp {
        Sexp::List { items, .. } => items,
        Sexp::Atom { text, .. } => {
            let hint = if VALUE_KEYWORDS.contains(&text.as_str())
                || is_ident(text)
                || text.bytes().all(|b| b.is_ascii_digit())
            {
                format!("polarity violation: value `{text}` where a computation is required")
            } else {
                format!("expected a computation, found `{text}`")
            };
            return err_at(span, hint);
        }
    };
    let head = match sexp.head() {
        Some(h) => h,
        None => return err_at(span, "expected a computation form"),
    };
    if VALUE_KEYWORDS.contains(&head) && head != "pair" {
        return err_at(
            span,
            format!("polarity violation: value form `{head}` where a computation is required"),
        );
    }
    match head {
        "ret" => {
            expect_len(items, 2, span, "(ret v)")?;
            node(CompKind::Ret(parse_value(&items[1])?))
        }
        "bind" => {
            expect_len(items, 4, span, "(bind e (x) f)")?;
            node(CompKind::Bind {
                lhs: parse_comp(&items[1])?,
                var: parse_binder1(&items[2])?,
                body: parse_comp(&items[3])?,
            })
        }
        "force" => {
            expect_len(items, 2, span, "(force v)")?;
            node(CompKind::Force(parse_value(&items[1])?))
        }
        "lam" => {
            expect_len(items, 3, span, "(lam (x) e)")?;
            node(CompKind::Lam { var: parse_binder1(&items[1])?, body: parse_comp(&items[2])? })
        }
        "ap" => {
            expect_len(items, 3, span, "(ap e v)")?;
            node(CompKind::Ap { func: parse_comp(&items[1])?, arg: parse_value(&items[2])? })
        }
        "step" => {
            expect_len(items, 3, span, "(step c e)")?;
            node(CompKind::Step {
                cost: parse_step_cost(&items[1])?,
                body: parse_comp(&items[2])?,
            })
        }
        "rec-nat" => {
            expect_len(items, 5, span, "(rec-nat v e0 (n r) e1)")?;
            let binders = parse_binder_n(&items[3], 2)?;
            node(CompKind::RecNat {
                scrut: parse_value(&items[1])?,
                zero: parse_comp(&items[2])?,
                pred: binders[0].clone(),
                rec: binders[1].clone(),
                suc: parse_comp(&items[4])?,
            })
        }
        "rec-list" => {
            expect_len(items, 5, span, "(rec-list v e0 (a l r) e1)")?;
            let binders = parse_binder_n(&items[3], 3)?;
            node(CompKind::RecList {
                scrut: parse_value(&items[1])?,
                charge: None,
                nil: parse_comp(&items[2])?,
                head: binders[0].clone(),
                tail: binders[1].clone(),
                rec: binders[2].clone(),
                cons: parse_comp(&items[4])?,
            })
        }
        "case" => {
            expect_len(items, 6, span, "(case v (a) e0 (b) e1)")?;
            node(CompKind::Case {
                scrut: parse_value(&items[1])?,
                lvar: parse_binder1(&items[2])?,
                left: parse_comp(&items[3])?,
                rvar: parse_binder1(&items[4])?,
                right: parse_comp(&items[5])?,
            })
        }
        "split" => {
            expect_len(items, 4, span, "(split v (x y) e)")?;
            let binders = parse_binder_n(&items[2], 2)?;
            node(CompKind::Split {
                scrut: parse_value(&items[1])?,
                fst: binders[0].clone(),
                snd: binders[1].clone(),
                body: parse_comp(&items[3])?,
            })
        }
        "if" => {
            expect_len(items, 4, span, "(if v e0 e1)")?;
            node(CompKind::If {
                scrut: parse_value(&items[1])?,
                then: parse_comp(&items[2])?,
                els: parse_comp(&items[3])?,
            })
        }
        "par" => {
            expect_len(items, 3, span, "(par e1 e2)")?;
            node(CompKind::ParPair(parse_comp(&items[1])?, parse_comp(&items[2])?))
        }
        "pair" => {
            // In computation position `pair` pairs a value with a
            // computation.
            expect_len(items, 3, span, "(pair v e)")?;
            node(CompKind::PairC(parse_value(&items[1])?, parse_comp(&items[2])?))
        }
        _ => err_at(span, format!("unknown computation form `{head}`")),
    }
}

fn parse_def(sexp: &Sexp) -> Result<Program, ParseError> {
    match sexp {
        Sexp::List { items, span } if sexp.head() == Some("def") => {
            expect_len(items, 4, *span, "(def name type term)")?;
            Ok(Program {
                name: parse_name(&items[1], "a definition name")?,
                ty: (*parse_comp_type(&items[2])?).clone(),
                term: parse_comp(&items[3])?,
            })
        }
        _ => err_at(sexp.span(), "expected a top-level `(def name type term)` form"),
    }
}

/// Parse a `.calf` source: one or more top-level definitions.
pub fn parse_source(src: &str) -> Result<Vec<Program>, ParseError> {
    let sexps = read_sexps(src)?;
    if sexps.is_empty() {
        return Err(ParseError { line: 1, col: 1, msg: "empty source".to_string() });
    }
    sexps.iter().map(parse_def).collect()
}

/// Parse a single standalone value, as used for CLI `--args`.
pub fn parse_value_text(src: &str) -> Result<Rc<ValueTerm>, ParseError> {
    let sexps = read_sexps(src)?;
    match sexps.as_slice() {
        [one] => parse_value(one),
        _ => Err(ParseError { line: 1, col: 1, msg: "expected exactly one value".to_string() }),
    }
}

impl fmt::Display for Sexp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sexp::Atom { text, .. } => write!(f, "{text}"),
            Sexp::List { items, .. } => {
                write!(f, "(")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{item}")?;
                }
                write!(f, ")")
            }
        }
    }
}
