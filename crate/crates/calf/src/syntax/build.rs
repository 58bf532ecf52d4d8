//! Constructors for building terms and types in Rust.
//!
//! Thin wrappers that allocate AST nodes with synthetic spans. The standard
//! library programs and the random program generator are written against
//! these; they read close to the surface syntax.

use super::ast::*;
use crate::cost::Cost;
use std::rc::Rc;

pub fn vt(kind: ValueKind) -> Rc<ValueTerm> {
    Rc::new(ValueTerm { kind, span: Span::synth() })
}

pub fn ct(kind: CompKind) -> Rc<CompTerm> {
    Rc::new(CompTerm { kind, span: Span::synth() })
}

// Value types.

pub fn t_nat() -> Rc<ValueType> {
    Rc::new(ValueType::Nat)
}

pub fn t_unit() -> Rc<ValueType> {
    Rc::new(ValueType::Unit)
}

pub fn t_bool() -> Rc<ValueType> {
    Rc::new(ValueType::Bool)
}

pub fn t_u(x: Rc<CompType>) -> Rc<ValueType> {
    Rc::new(ValueType::U(x))
}

pub fn t_sum(a: Rc<ValueType>, b: Rc<ValueType>) -> Rc<ValueType> {
    Rc::new(ValueType::Sum(a, b))
}

pub fn t_prod(a: Rc<ValueType>, b: Rc<ValueType>) -> Rc<ValueType> {
    Rc::new(ValueType::Prod(a, b))
}

pub fn t_list(charge: Cost, a: Rc<ValueType>) -> Rc<ValueType> {
    Rc::new(ValueType::List(charge, a))
}

// Computation types.

pub fn t_f(a: Rc<ValueType>) -> Rc<CompType> {
    Rc::new(CompType::F(a))
}

pub fn t_arrow(a: Rc<ValueType>, x: Rc<CompType>) -> Rc<CompType> {
    Rc::new(CompType::Arrow(a, x))
}

pub fn t_pairc(a: Rc<ValueType>, x: Rc<CompType>) -> Rc<CompType> {
    Rc::new(CompType::PairC(a, x))
}

// Values.

pub fn var(name: &str) -> Rc<ValueTerm> {
    vt(ValueKind::Var(name.to_string()))
}

pub fn thunk(e: Rc<CompTerm>) -> Rc<ValueTerm> {
    vt(ValueKind::Thunk(e))
}

pub fn zero() -> Rc<ValueTerm> {
    vt(ValueKind::Zero)
}

pub fn suc(v: Rc<ValueTerm>) -> Rc<ValueTerm> {
    vt(ValueKind::Suc(v))
}

/// A natural-number literal as an iterated successor of zero.
pub fn nat(n: u64) -> Rc<ValueTerm> {
    let mut v = zero();
    for _ in 0..n {
        v = suc(v);
    }
    v
}

pub fn triv() -> Rc<ValueTerm> {
    vt(ValueKind::Triv)
}

pub fn tru() -> Rc<ValueTerm> {
    vt(ValueKind::True)
}

pub fn fls() -> Rc<ValueTerm> {
    vt(ValueKind::False)
}

pub fn inl(v: Rc<ValueTerm>) -> Rc<ValueTerm> {
    vt(ValueKind::Inl(v))
}

pub fn inr(v: Rc<ValueTerm>) -> Rc<ValueTerm> {
    vt(ValueKind::Inr(v))
}

pub fn pair(a: Rc<ValueTerm>, b: Rc<ValueTerm>) -> Rc<ValueTerm> {
    vt(ValueKind::Pair(a, b))
}

pub fn nil() -> Rc<ValueTerm> {
    vt(ValueKind::Nil)
}

pub fn cons(h: Rc<ValueTerm>, t: Rc<ValueTerm>) -> Rc<ValueTerm> {
    vt(ValueKind::Cons(h, t))
}

pub fn meta(name: &str, args: Vec<Rc<ValueTerm>>) -> Rc<ValueTerm> {
    vt(ValueKind::Meta(name.to_string(), args))
}

// Computations.

pub fn ret(v: Rc<ValueTerm>) -> Rc<CompTerm> {
    ct(CompKind::Ret(v))
}

pub fn bind(lhs: Rc<CompTerm>, var: &str, body: Rc<CompTerm>) -> Rc<CompTerm> {
    ct(CompKind::Bind { lhs, var: var.to_string(), body })
}

pub fn force(v: Rc<ValueTerm>) -> Rc<CompTerm> {
    ct(CompKind::Force(v))
}

pub fn lam(var: &str, body: Rc<CompTerm>) -> Rc<CompTerm> {
    ct(CompKind::Lam { var: var.to_string(), body })
}

pub fn ap(func: Rc<CompTerm>, arg: Rc<ValueTerm>) -> Rc<CompTerm> {
    ct(CompKind::Ap { func, arg })
}

pub fn step(cost: Cost, body: Rc<CompTerm>) -> Rc<CompTerm> {
    ct(CompKind::Step { cost: StepCost::Lit(cost), body })
}

pub fn step_meta(name: &str, args: Vec<Rc<ValueTerm>>, body: Rc<CompTerm>) -> Rc<CompTerm> {
    ct(CompKind::Step { cost: StepCost::Meta(name.to_string(), args), body })
}

pub fn rec_nat(
    scrut: Rc<ValueTerm>,
    zero: Rc<CompTerm>,
    pred: &str,
    rec: &str,
    suc: Rc<CompTerm>,
) -> Rc<CompTerm> {
    ct(CompKind::RecNat {
        scrut,
        zero,
        pred: pred.to_string(),
        rec: rec.to_string(),
        suc,
    })
}

pub fn rec_list(
    scrut: Rc<ValueTerm>,
    nil: Rc<CompTerm>,
    head: &str,
    tail: &str,
    rec: &str,
    cons: Rc<CompTerm>,
) -> Rc<CompTerm> {
    ct(CompKind::RecList {
        scrut,
        charge: None,
        nil,
        head: head.to_string(),
        tail: tail.to_string(),
        rec: rec.to_string(),
        cons,
    })
}

pub fn case(
    scrut: Rc<ValueTerm>,
    lvar: &str,
    left: Rc<CompTerm>,
    rvar: &str,
    right: Rc<CompTerm>,
) -> Rc<CompTerm> {
    ct(CompKind::Case {
        scrut,
        lvar: lvar.to_string(),
        left,
        rvar: rvar.to_string(),
        right,
    })
}

pub fn split(scrut: Rc<ValueTerm>, fst: &str, snd: &str, body: Rc<CompTerm>) -> Rc<CompTerm> {
    ct(CompKind::Split {
        scrut,
        fst: fst.to_string(),
        snd: snd.to_string(),
        body,
    })
}

pub fn ife(scrut: Rc<ValueTerm>, then: Rc<CompTerm>, els: Rc<CompTerm>) -> Rc<CompTerm> {
    ct(CompKind::If { scrut, then, els })
}

pub fn par(left: Rc<CompTerm>, right: Rc<CompTerm>) -> Rc<CompTerm> {
    ct(CompKind::ParPair(left, right))
}

pub fn pairc(v: Rc<ValueTerm>, e: Rc<CompTerm>) -> Rc<CompTerm> {
    ct(CompKind::PairC(v, e))
}

/// Curried application to several arguments.
pub fn ap_many(func: Rc<CompTerm>, args: Vec<Rc<ValueTerm>>) -> Rc<CompTerm> {
    args.into_iter().fold(func, ap)
}
