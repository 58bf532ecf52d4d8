//! Canonical pretty-printer.
//!
//! Printing is deterministic, and `parse(print(t))` yields a structurally
//! identical AST: ground successor chains print as decimal literals, which
//! the parser expands back. The emitted standard-library `.calf` files are
//! exactly this printer's output.

use super::ast::*;
use crate::cost::Cost;
use std::rc::Rc;

const WIDTH: usize = 100;

enum Doc {
    Atom(String),
    Group(Vec<Doc>),
}

impl Doc {
    fn atom(s: impl Into<String>) -> Doc {
        Doc::Atom(s.into())
    }

    fn group(items: Vec<Doc>) -> Doc {
        Doc::Group(items)
    }

    fn flat_len(&self) -> usize {
        match self {
            Doc::Atom(s) => s.len(),
            Doc::Group(items) => {
                let inner: usize = items.iter().map(|d| d.flat_len()).sum();
                inner + items.len().saturating_sub(1) + 2
            }
        }
    }

    fn write_flat(&self, out: &mut String) {
        match self {
            Doc::Atom(s) => out.push_str(s),
            Doc::Group(items) => {
                out.push('(');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(' ');
                    }
                    item.write_flat(out);
                }
                out.push(')');
            }
        }
    }

    fn write(&self, indent: usize, out: &mut String) {
        if indent + self.flat_len() <= WIDTH {
            self.write_flat(out);
            return;
        }
        match self {
            Doc::Atom(s) => out.push_str(s),
            Doc::Group(items) => {
                out.push('(');
                for (i, item) in items.iter().enumerate() {
                    if i == 0 {
                        item.write(indent + 1, out);
                    } else {
                        out.push('\n');
                        for _ in 0..indent + 2 {
                            out.push(' ');
                        }
                        item.write(indent + 2, out);
                    }
                }
                out.push(')');
            }
        }
    }
}

fn cost_doc(c: &Cost) -> Doc {
    match c {
        Cost::Nat(n) => Doc::atom(n.to_string()),
        Cost::Par { work, span } => Doc::group(vec![
            Doc::atom(work.to_string()),
            Doc::atom(span.to_string()),
        ]),
    }
}

fn value_type_doc(t: &ValueType) -> Doc {
    match t {
        ValueType::Nat => Doc::atom("nat"),
        ValueType::Unit => Doc::atom("unit"),
        ValueType::Bool => Doc::atom("bool"),
        ValueType::U(x) => Doc::group(vec![Doc::atom("U"), comp_type_doc(x)]),
        ValueType::Sum(a, b) => {
            Doc::group(vec![Doc::atom("sum"), value_type_doc(a), value_type_doc(b)])
        }
        ValueType::Prod(a, b) => {
            Doc::group(vec![Doc::atom("prod"), value_type_doc(a), value_type_doc(b)])
        }
        ValueType::List(c, a) => {
            Doc::group(vec![Doc::atom("list"), cost_doc(c), value_type_doc(a)])
        }
    }
}

fn comp_type_doc(t: &CompType) -> Doc {
    match t {
        CompType::F(a) => Doc::group(vec![Doc::atom("F"), value_type_doc(a)]),
        CompType::Arrow(a, x) => {
            Doc::group(vec![Doc::atom("arrow"), value_type_doc(a), comp_type_doc(x)])
        }
        CompType::PairC(a, x) => {
            Doc::group(vec![Doc::atom("pairc"), value_type_doc(a), comp_type_doc(x)])
        }
    }
}

/// A ground successor chain collapses to its decimal value.
fn as_decimal(v: &ValueTerm) -> Option<u64> {
    let mut n: u64 = 0;
    let mut cur = v;
    loop {
        match &cur.kind {
            ValueKind::Zero => return Some(n),
            ValueKind::Suc(inner) => {
                n = n.checked_add(1)?;
                cur = inner;
            }
            _ => return None,
        }
    }
}

fn value_doc(v: &ValueTerm) -> Doc {
    if let Some(n) = as_decimal(v) {
        return Doc::atom(n.to_string());
    }
    match &v.kind {
        ValueKind::Var(name) => Doc::atom(name.clone()),
        ValueKind::Thunk(e) => Doc::group(vec![Doc::atom("thunk"), comp_doc(e)]),
        ValueKind::Zero => Doc::atom("0"),
        ValueKind::Suc(inner) => Doc::group(vec![Doc::atom("suc"), value_doc(inner)]),
        ValueKind::Triv => Doc::atom("triv"),
        ValueKind::True => Doc::atom("true"),
        ValueKind::False => Doc::atom("false"),
        ValueKind::Inl(inner) => Doc::group(vec![Doc::atom("inl"), value_doc(inner)]),
        ValueKind::Inr(inner) => Doc::group(vec![Doc::atom("inr"), value_doc(inner)]),
        ValueKind::Pair(a, b) => Doc::group(vec![Doc::atom("pair"), value_doc(a), value_doc(b)]),
        ValueKind::Nil => Doc::atom("nil"),
        ValueKind::Cons(h, t) => Doc::group(vec![Doc::atom("cons"), value_doc(h), value_doc(t)]),
        ValueKind::Meta(name, args) => {
            let mut items = vec![Doc::atom("meta"), Doc::atom(name.clone())];
            items.extend(args.iter().map(|a| value_doc(a)));
            Doc::group(items)
        }
        // Machine-internal; never reached when printing source programs.
        ValueKind::Lit(lit) => Doc::atom(format!("<lit:{}>", lit.render())),
    }
}

fn binder1(name: &str) -> Doc {
    Doc::group(vec![Doc::atom(name)])
}

fn comp_doc(e: &CompTerm) -> Doc {
    match &e.kind {
        CompKind::Ret(v) => Doc::group(vec![Doc::atom("ret"), value_doc(v)]),
        CompKind::Bind { lhs, var, body } => Doc::group(vec![
            Doc::atom("bind"),
            comp_doc(lhs),
            binder1(var),
            comp_doc(body),
        ]),
        CompKind::Force(v) => Doc::group(vec![Doc::atom("force"), value_doc(v)]),
        CompKind::Lam { var, body } => {
            Doc::group(vec![Doc::atom("lam"), binder1(var), comp_doc(body)])
        }
        CompKind::Ap { func, arg } => {
            Doc::group(vec![Doc::atom("ap"), comp_doc(func), value_doc(arg)])
        }
        CompKind::Step { cost, body } => {
            let cost_doc = match cost {
                StepCost::Lit(c) => cost_doc(c),
                StepCost::Meta(name, args) => {
                    let mut items = vec![Doc::atom("meta"), Doc::atom(name.clone())];
                    items.extend(args.iter().map(|a| value_doc(a)));
                    Doc::group(items)
                }
            };
            Doc::group(vec![Doc::atom("step"), cost_doc, comp_doc(body)])
        }
        CompKind::RecNat { scrut, zero, pred, rec, suc } => Doc::group(vec![
            Doc::atom("rec-nat"),
            value_doc(scrut),
            comp_doc(zero),
            Doc::group(vec![Doc::atom(pred), Doc::atom(rec)]),
            comp_doc(suc),
        ]),
        CompKind::RecList { scrut, nil, head, tail, rec, cons, .. } => Doc::group(vec![
            Doc::atom("rec-list"),
            value_doc(scrut),
            comp_doc(nil),
            Doc::group(vec![Doc::atom(head), Doc::atom(tail), Doc::atom(rec)]),
            comp_doc(cons),
        ]),
        CompKind::Case { scrut, lvar, left, rvar, right } => Doc::group(vec![
            Doc::atom("case"),
            value_doc(scrut),
            binder1(lvar),
            comp_doc(left),
            binder1(rvar),
            comp_doc(right),
        ]),
        CompKind::Split { scrut, fst, snd, body } => Doc::group(vec![
            Doc::atom("split"),
            value_doc(scrut),
            Doc::group(vec![Doc::atom(fst), Doc::atom(snd)]),
            comp_doc(body),
        ]),
        CompKind::If { scrut, then, els } => Doc::group(vec![
            Doc::atom("if"),
            value_doc(scrut),
            comp_doc(then),
            comp_doc(els),
        ]),
        CompKind::ParPair(l, r) => Doc::group(vec![Doc::atom("par"), comp_doc(l), comp_doc(r)]),
        CompKind::PairC(v, e) => Doc::group(vec![Doc::atom("pair"), value_doc(v), comp_doc(e)]),
    }
}

pub fn value_to_string(v: &ValueTerm) -> String {
    let mut out = String::new();
    value_doc(v).write(0, &mut out);
    out
}

pub fn comp_to_string(e: &CompTerm) -> String {
    let mut out = String::new();
    comp_doc(e).write(0, &mut out);
    out
}

pub fn value_type_to_string(t: &ValueType) -> String {
    let mut out = String::new();
    value_type_doc(t).write(0, &mut out);
    out
}

pub fn comp_type_to_string(t: &CompType) -> String {
    let mut out = String::new();
    comp_type_doc(t).write(0, &mut out);
    out
}

/// Print a full definition as it appears in a `.calf` file.
pub fn program_to_string(p: &Program) -> String {
    let doc = Doc::group(vec![
        Doc::atom("def"),
        Doc::atom(p.name.clone()),
        comp_type_doc(&p.ty),
        comp_doc(&p.term),
    ]);
    let mut out = String::new();
    doc.write(0, &mut out);
    out.push('\n');
    out
}

/// Render a checked program back to source form.
pub fn checked_to_string(p: &CheckedProgram) -> String {
    program_to_string(&Program {
        name: p.name.clone(),
        ty: p.ty.clone(),
        term: Rc::clone(&p.term),
    })
}
