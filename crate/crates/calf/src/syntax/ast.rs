//! Polarized CBPV abstract syntax.
//!
//! The syntax is split by polarity: a value *is*, a computation *does*.
//! Value terms never embed computations except under `thunk`, and the Rust
//! types make the converse unrepresentable, so polarity violations can only
//! arise in source text (where the parser rejects them) or at the type level
//! (where the checker does).
//!
//! Terms carry source spans for error reporting; spans are ignored by
//! structural equality so that a parsed program compares equal to the same
//! program built programmatically.

use crate::cost::Cost;
use crate::machine::ValueLiteral;
use std::fmt;
use std::rc::Rc;

/// A source position (1-based line and column). Synthetic nodes built in
/// Rust use `Span::synth()`, which renders as `<builtin>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub line: u32,
    pub col: u32,
}

impl Span {
    pub fn new(line: u32, col: u32) -> Self {
        Span { line, col }
    }

    pub fn synth() -> Self {
        Span { line: 0, col: 0 }
    }

    pub fn is_synth(&self) -> bool {
        self.line == 0
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_synth() {
            write!(f, "<builtin>")
        } else {
            write!(f, "{}:{}", self.line, self.col)
        }
    }
}

/// Positive (value) types.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValueType {
    Nat,
    Unit,
    Bool,
    /// Thunked computation.
    U(Rc<CompType>),
    Sum(Rc<ValueType>, Rc<ValueType>),
    Prod(Rc<ValueType>, Rc<ValueType>),
    /// Cost-annotated list: destructing a cons node during `rec-list`
    /// charges the annotation. The annotation is part of type equality.
    List(Cost, Rc<ValueType>),
}

/// Negative (computation) types.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompType {
    /// Free computation returning a value.
    F(Rc<ValueType>),
    Arrow(Rc<ValueType>, Rc<CompType>),
    /// Value-computation pair (the negative sigma).
    PairC(Rc<ValueType>, Rc<CompType>),
}

/// A value term together with its source span.
#[derive(Clone, Debug)]
pub struct ValueTerm {
    pub kind: ValueKind,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ValueKind {
    Var(String),
    Thunk(Rc<CompTerm>),
    Zero,
    Suc(Rc<ValueTerm>),
    Triv,
    True,
    False,
    Inl(Rc<ValueTerm>),
    Inr(Rc<ValueTerm>),
    Pair(Rc<ValueTerm>, Rc<ValueTerm>),
    Nil,
    Cons(Rc<ValueTerm>, Rc<ValueTerm>),
    /// Application of a registered cost-free host primitive.
    Meta(String, Vec<Rc<ValueTerm>>),
    /// Machine-internal embedding of a runtime literal; never produced by
    /// the parser and rejected by the checker.
    Lit(ValueLiteral),
}

/// A computation term together with its source span.
#[derive(Clone, Debug)]
pub struct CompTerm {
    pub kind: CompKind,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq)]
pub enum CompKind {
    Ret(Rc<ValueTerm>),
    Bind {
        lhs: Rc<CompTerm>,
        var: String,
        body: Rc<CompTerm>,
    },
    Force(Rc<ValueTerm>),
    Lam {
        var: String,
        body: Rc<CompTerm>,
    },
    Ap {
        func: Rc<CompTerm>,
        arg: Rc<ValueTerm>,
    },
    /// Incur a cost, then continue.
    Step {
        cost: StepCost,
        body: Rc<CompTerm>,
    },
    /// Recursor on naturals. The recursive result is reified as a thunk.
    RecNat {
        scrut: Rc<ValueTerm>,
        zero: Rc<CompTerm>,
        pred: String,
        rec: String,
        suc: Rc<CompTerm>,
    },
    /// Recursor on cost-annotated lists. `charge` is elaborated by the
    /// checker from the scrutinee's list type; the machine refuses to run
    /// unelaborated recursors.
    RecList {
        scrut: Rc<ValueTerm>,
        charge: Option<Cost>,
        nil: Rc<CompTerm>,
        head: String,
        tail: String,
        rec: String,
        cons: Rc<CompTerm>,
    },
    Case {
        scrut: Rc<ValueTerm>,
        lvar: String,
        left: Rc<CompTerm>,
        rvar: String,
        right: Rc<CompTerm>,
    },
    Split {
        scrut: Rc<ValueTerm>,
        fst: String,
        snd: String,
        body: Rc<CompTerm>,
    },
    If {
        scrut: Rc<ValueTerm>,
        then: Rc<CompTerm>,
        els: Rc<CompTerm>,
    },
    /// Parallel pairing of two free computations; costs combine with the
    /// parallel composition of the monoid.
    ParPair(Rc<CompTerm>, Rc<CompTerm>),
    /// Introduction for the value-computation pair type.
    PairC(Rc<ValueTerm>, Rc<CompTerm>),
}

/// The cost argument of `step`: a literal, or a cost-free host call
/// returning a natural (nat monoid) or a pair of naturals (par monoid).
#[derive(Clone, Debug, PartialEq)]
pub enum StepCost {
    Lit(Cost),
    Meta(String, Vec<Rc<ValueTerm>>),
}

// Spans are locations, not structure.
impl PartialEq for ValueTerm {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}
impl Eq for ValueTerm {}

impl PartialEq for CompTerm {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}
impl Eq for CompTerm {}

/// A named top-level definition: `(def name type term)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Program {
    pub name: String,
    pub ty: CompType,
    pub term: Rc<CompTerm>,
}

/// A program that passed the typechecker under a particular monoid, with
/// list recursors elaborated with their charge annotations.
#[derive(Clone, Debug)]
pub struct CheckedProgram {
    pub name: String,
    pub ty: CompType,
    pub term: Rc<CompTerm>,
    pub monoid: crate::cost::CostMonoid,
}

impl CheckedProgram {
    /// The argument value types obtained by walking the arrows of the
    /// program type, and the final result type.
    pub fn arg_types(&self) -> (Vec<ValueType>, CompType) {
        let mut args = Vec::new();
        let mut ty = self.ty.clone();
        while let CompType::Arrow(a, x) = ty {
            args.push((*a).clone());
            ty = (*x).clone();
        }
        (args, ty)
    }
}

impl fmt::Display for ValueType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::syntax::print::value_type_to_string(self))
    }
}

impl fmt::Display for CompType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::syntax::print::comp_type_to_string(self))
    }
}
