//! Deterministic small-step abstract machine.
//!
//! A machine state is a control computation, an environment, a stack of
//! frames, and a cost accumulator. Evaluation is left-to-right
//! call-by-push-value: `bind` pushes a frame and runs its left side first,
//! so a `step` inside the left side fires before the continuation — the
//! commuting laws for `step` hold as run-cost identities rather than term
//! rewrites.
//!
//! The phase fixes how cost annotations behave for the lifetime of one run:
//!
//! - [`Phase::Intensional`]: every `step` (and every cons destruction of an
//!   annotated list) adds its charge to the accumulator.
//! - [`Phase::Extensional`]: charges are never added, so the final cost is
//!   the monoid unit by construction. Erasure happens at the transition
//!   level, not by zeroing afterwards, which is what makes the
//!   noninterference tests meaningful.
//!
//! Parallel pairs evaluate both branches (left, then right — the machine is
//! sequential; span accounting is purely arithmetic) in their own cost
//! scopes and join the branch costs with the parallel composition of the
//! monoid.

use crate::cost::{Cost, CostError, CostMonoid};
use crate::syntax::ast::{CheckedProgram, CompKind, CompTerm, Span, StepCost, ValueKind, ValueTerm};
use crate::syntax::meta::MetaRegistry;
use std::fmt;
use std::rc::Rc;

/// Default transition budget. Clocked programs always terminate well below
/// this; exhaustion signals harness misuse, not nontermination handling.
pub const DEFAULT_FUEL: u64 = 100_000_000;

/// Evaluation mode, fixed for one run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Phase {
    Intensional,
    Extensional,
}

impl Phase {
    pub fn name(self) -> &'static str {
        match self {
            Phase::Intensional => "intensional",
            Phase::Extensional => "extensional",
        }
    }
}

/// A runtime value. Ground values compare structurally; thunks compare by
/// pointer identity and never appear in the results the harness inspects.
#[derive(Clone, Debug)]
pub enum ValueLiteral {
    Nat(u64),
    Triv,
    Bool(bool),
    Pair(Rc<ValueLiteral>, Rc<ValueLiteral>),
    Inl(Rc<ValueLiteral>),
    Inr(Rc<ValueLiteral>),
    List(ListVal),
    Thunk(Rc<CompTerm>, Env),
}

impl PartialEq for ValueLiteral {
    fn eq(&self, other: &Self) -> bool {
        use ValueLiteral::*;
        match (self, other) {
            (Nat(a), Nat(b)) => a == b,
            (Triv, Triv) => true,
            (Bool(a), Bool(b)) => a == b,
            (Pair(a1, a2), Pair(b1, b2)) => a1 == b1 && a2 == b2,
            (Inl(a), Inl(b)) | (Inr(a), Inr(b)) => a == b,
            (List(a), List(b)) => a == b,
            (Thunk(t1, e1), Thunk(t2, e2)) => Rc::ptr_eq(t1, t2) && e1.ptr_eq(e2),
            _ => false,
        }
    }
}
impl Eq for ValueLiteral {}

impl ValueLiteral {
    pub fn nat(n: u64) -> Self {
        ValueLiteral::Nat(n)
    }

    pub fn list_of(items: impl IntoIterator<Item = ValueLiteral>) -> Self {
        let items: Vec<_> = items.into_iter().collect();
        let mut l = ListVal::nil();
        for item in items.into_iter().rev() {
            l = l.cons(item);
        }
        ValueLiteral::List(l)
    }

    pub fn as_nat(&self) -> Option<u64> {
        match self {
            ValueLiteral::Nat(n) => Some(*n),
            _ => None,
        }
    }

    pub fn as_list(&self) -> Option<&ListVal> {
        match self {
            ValueLiteral::List(l) => Some(l),
            _ => None,
        }
    }

    /// Render a ground value; used by the CLI and in report rows.
    pub fn render(&self) -> String {
        match self {
            ValueLiteral::Nat(n) => n.to_string(),
            ValueLiteral::Triv => "triv".to_string(),
            ValueLiteral::Bool(b) => b.to_string(),
            ValueLiteral::Pair(a, b) => format!("({}, {})", a.render(), b.render()),
            ValueLiteral::Inl(v) => format!("inl {}", v.render()),
            ValueLiteral::Inr(v) => format!("inr {}", v.render()),
            ValueLiteral::List(l) => {
                let items: Vec<String> = l.iter().map(|v| v.render()).collect();
                format!("[{}]", items.join(", "))
            }
            ValueLiteral::Thunk(..) => "<thunk>".to_string(),
        }
    }
}

/// Persistent cons list with shared tails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListVal(Option<Rc<ListNode>>);

#[derive(Debug, PartialEq, Eq)]
pub struct ListNode {
    head: ValueLiteral,
    tail: ListVal,
}

impl ListVal {
    pub fn nil() -> Self {
        ListVal(None)
    }

    pub fn cons(&self, head: ValueLiteral) -> Self {
        ListVal(Some(Rc::new(ListNode { head, tail: self.clone() })))
    }

    pub fn uncons(&self) -> Option<(&ValueLiteral, &ListVal)> {
        self.0.as_ref().map(|n| (&n.head, &n.tail))
    }

    pub fn is_nil(&self) -> bool {
        self.0.is_none()
    }

    pub fn len(&self) -> u64 {
        self.iter().count() as u64
    }

    pub fn is_empty(&self) -> bool {
        self.is_nil()
    }

    pub fn iter(&self) -> ListIter<'_> {
        ListIter(self)
    }
}

pub struct ListIter<'a>(&'a ListVal);

impl<'a> Iterator for ListIter<'a> {
    type Item = &'a ValueLiteral;

    fn next(&mut self) -> Option<Self::Item> {
        let (head, tail) = self.0.uncons()?;
        self.0 = tail;
        Some(head)
    }
}

impl FromIterator<ValueLiteral> for ListVal {
    fn from_iter<T: IntoIterator<Item = ValueLiteral>>(iter: T) -> Self {
        let items: Vec<_> = iter.into_iter().collect();
        let mut l = ListVal::nil();
        for item in items.into_iter().rev() {
            l = l.cons(item);
        }
        l
    }
}

/// Persistent environment mapping variables to runtime values.
#[derive(Clone, Debug, Default)]
pub struct Env(Option<Rc<EnvNode>>);

#[derive(Debug)]
struct EnvNode {
    name: String,
    value: ValueLiteral,
    next: Env,
}

impl Env {
    pub fn empty() -> Self {
        Env(None)
    }

    pub fn extend(&self, name: &str, value: ValueLiteral) -> Self {
        Env(Some(Rc::new(EnvNode {
            name: name.to_string(),
            value,
            next: self.clone(),
        })))
    }

    pub fn lookup(&self, name: &str) -> Option<&ValueLiteral> {
        let mut cur = self;
        while let Some(node) = &cur.0 {
            if node.name == name {
                return Some(&node.value);
            }
            cur = &node.next;
        }
        None
    }

    fn ptr_eq(&self, other: &Env) -> bool {
        match (&self.0, &other.0) {
            (None, None) => true,
            (Some(a), Some(b)) => Rc::ptr_eq(a, b),
            _ => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("fuel exhausted after {0} transitions")]
    FuelExhausted(u64),
    #[error("stuck at {span}: {reason}")]
    Stuck { span: Span, reason: String },
    #[error("cost overflow at {0}")]
    CostOverflow(Span),
    #[error("host primitive `{name}` failed at {span}: {reason}")]
    MetaError { name: String, span: Span, reason: String },
}

/// The outcome of a completed run: the final value, the accumulated cost,
/// the phase it ran under, and the number of transitions taken.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalResult {
    pub value: ValueLiteral,
    pub cost: Cost,
    pub phase: Phase,
    pub transitions: u64,
}

/// One recorded cost increment: which transition it happened on and by how
/// much the accumulator grew.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEntry {
    pub transition: u64,
    pub delta: Cost,
}

enum Frame {
    Bind {
        var: String,
        body: Rc<CompTerm>,
        env: Env,
    },
    Apply {
        arg: ValueLiteral,
    },
    /// Waiting on the left branch of a parallel pair; `saved` is the cost
    /// accumulated before entering the pair.
    ParLeft {
        right: Rc<CompTerm>,
        env: Env,
        saved: Cost,
    },
    /// Waiting on the right branch; the left branch finished with the given
    /// value and scoped cost.
    ParRight {
        left_value: ValueLiteral,
        left_cost: Cost,
        saved: Cost,
    },
    /// Waiting on the computation component of a value-computation pair.
    PairC {
        first: ValueLiteral,
    },
}

/// The full state of one evaluation.
///
/// The cost accumulator is scoped: entering a parallel pair saves the
/// current total in the frame and restarts the accumulator at the unit, so
/// that each branch's cost can be observed and joined with the parallel
/// composition. Within any sequential segment the accumulator only grows.
pub struct MachineState<'a> {
    control: Rc<CompTerm>,
    env: Env,
    stack: Vec<Frame>,
    cost: Cost,
    transitions: u64,
    fuel: u64,
    phase: Phase,
    monoid: CostMonoid,
    metas: &'a MetaRegistry,
    trace: Option<Vec<TraceEntry>>,
}

pub enum StepOutcome {
    Continue,
    Final(EvalResult),
}

impl<'a> MachineState<'a> {
    pub fn new(
        control: Rc<CompTerm>,
        env: Env,
        monoid: CostMonoid,
        phase: Phase,
        metas: &'a MetaRegistry,
        fuel: u64,
    ) -> Self {
        MachineState {
            control,
            env,
            stack: Vec::new(),
            cost: monoid.zero(),
            transitions: 0,
            fuel,
            phase,
            monoid,
            metas,
            trace: None,
        }
    }

    fn with_trace(mut self) -> Self {
        self.trace = Some(Vec::new());
        self
    }

    fn stuck<T>(&self, span: Span, reason: impl Into<String>) -> Result<T, EvalError> {
        Err(EvalError::Stuck { span, reason: reason.into() })
    }

    /// Evaluate a value term to a literal. Values are inert: this takes no
    /// transitions and incurs no cost, including `meta` host calls.
    fn denote(&self, v: &ValueTerm, env: &Env) -> Result<ValueLiteral, EvalError> {
        match &v.kind {
            ValueKind::Var(name) => match env.lookup(name) {
                Some(lit) => Ok(lit.clone()),
                None => self.stuck(v.span, format!("unbound variable `{name}`")),
            },
            ValueKind::Thunk(e) => Ok(ValueLiteral::Thunk(e.clone(), env.clone())),
            ValueKind::Zero => Ok(ValueLiteral::Nat(0)),
            ValueKind::Suc(inner) => match self.denote(inner, env)? {
                ValueLiteral::Nat(n) => match n.checked_add(1) {
                    Some(n) => Ok(ValueLiteral::Nat(n)),
                    None => self.stuck(v.span, "natural number overflow"),
                },
                other => self.stuck(v.span, format!("suc applied to {}", other.render())),
            },
            ValueKind::Triv => Ok(ValueLiteral::Triv),
            ValueKind::True => Ok(ValueLiteral::Bool(true)),
            ValueKind::False => Ok(ValueLiteral::Bool(false)),
            ValueKind::Inl(inner) => Ok(ValueLiteral::Inl(Rc::new(self.denote(inner, env)?))),
            ValueKind::Inr(inner) => Ok(ValueLiteral::Inr(Rc::new(self.denote(inner, env)?))),
            ValueKind::Pair(a, b) => Ok(ValueLiteral::Pair(
                Rc::new(self.denote(a, env)?),
                Rc::new(self.denote(b, env)?),
            )),
            ValueKind::Nil => Ok(ValueLiteral::List(ListVal::nil())),
            ValueKind::Cons(h, t) => {
                let head = self.denote(h, env)?;
                match self.denote(t, env)? {
                    ValueLiteral::List(tail) => Ok(ValueLiteral::List(tail.cons(head))),
                    other => self.stuck(v.span, format!("cons onto {}", other.render())),
                }
            }
            ValueKind::Meta(name, args) => {
                let mut lits = Vec::with_capacity(args.len());
                for arg in args {
                    lits.push(self.denote(arg, env)?);
                }
                let entry = match self.metas.get(name) {
                    Some(e) => e,
                    None => return self.stuck(v.span, format!("unknown host primitive `{name}`")),
                };
                (entry.run)(&lits).map_err(|reason| EvalError::MetaError {
                    name: name.clone(),
                    span: v.span,
                    reason,
                })
            }
            ValueKind::Lit(lit) => Ok(lit.clone()),
        }
    }

    /// Add an intensional charge; silent in the extensional phase.
    fn charge(&mut self, c: Cost, span: Span) -> Result<(), EvalError> {
        if self.phase == Phase::Extensional {
            return Ok(());
        }
        self.cost = match self.monoid.seq(self.cost, c) {
            Ok(total) => total,
            Err(CostError::Overflow) => return Err(EvalError::CostOverflow(span)),
            Err(CostError::InstanceMismatch(..)) => {
                return self.stuck(span, "cost literal from the wrong monoid instance")
            }
        };
        if !c.is_zero() {
            if let Some(trace) = &mut self.trace {
                trace.push(TraceEntry { transition: self.transitions, delta: c });
            }
        }
        Ok(())
    }

    fn step_cost(&self, cost: &StepCost, env: &Env, span: Span) -> Result<Cost, EvalError> {
        match cost {
            StepCost::Lit(c) => Ok(*c),
            StepCost::Meta(name, args) => {
                let v = self.denote(
                    &ValueTerm { kind: ValueKind::Meta(name.clone(), args.clone()), span },
                    env,
                )?;
                match (self.monoid, &v) {
                    (CostMonoid::Nat, ValueLiteral::Nat(n)) => Ok(Cost::Nat(*n)),
                    (CostMonoid::Par, ValueLiteral::Pair(w, s)) => {
                        match (w.as_nat(), s.as_nat()) {
                            (Some(work), Some(span_)) => Ok(Cost::Par { work, span: span_ }),
                            _ => self.stuck(span, "host step cost is not a pair of naturals"),
                        }
                    }
                    _ => self.stuck(span, "host step cost does not match the active monoid"),
                }
            }
        }
    }

    /// A `ret` (or an equivalent terminal value) meets the stack.
    fn return_value(&mut self, lit: ValueLiteral, span: Span) -> Result<StepOutcome, EvalError> {
        match self.stack.pop() {
            None => Ok(StepOutcome::Final(EvalResult {
                value: lit,
                cost: self.cost,
                phase: self.phase,
                transitions: self.transitions,
            })),
            Some(Frame::Bind { var, body, env }) => {
                self.env = env.extend(&var, lit);
                self.control = body;
                Ok(StepOutcome::Continue)
            }
            Some(Frame::ParLeft { right, env, saved }) => {
                let left_cost = std::mem::replace(&mut self.cost, self.monoid.zero());
                self.stack.push(Frame::ParRight { left_value: lit, left_cost, saved });
                self.env = env;
                self.control = right;
                Ok(StepOutcome::Continue)
            }
            Some(Frame::ParRight { left_value, left_cost, saved }) => {
                let right_cost = self.cost;
                let joined = self
                    .monoid
                    .par(left_cost, right_cost)
                    .and_then(|j| self.monoid.seq(saved, j))
                    .map_err(|_| EvalError::CostOverflow(span))?;
                self.cost = joined;
                let value = ValueLiteral::Pair(Rc::new(left_value), Rc::new(lit));
                self.control = lit_ret(value, span);
                Ok(StepOutcome::Continue)
            }
            Some(Frame::PairC { first }) => {
                let value = ValueLiteral::Pair(Rc::new(first), Rc::new(lit));
                self.control = lit_ret(value, span);
                Ok(StepOutcome::Continue)
            }
            Some(Frame::Apply { .. }) => {
                self.stuck(span, "returned a value where a function was expected")
            }
        }
    }

    /// Perform exactly one transition, or report the final result.
    pub fn transition(&mut self) -> Result<StepOutcome, EvalError> {
        if self.fuel == 0 {
            return Err(EvalError::FuelExhausted(self.transitions));
        }
        self.fuel -= 1;
        self.transitions += 1;

        let control = self.control.clone();
        let span = control.span;
        match &control.kind {
            CompKind::Ret(v) => {
                let lit = self.denote(v, &self.env.clone())?;
                self.return_value(lit, span)
            }
            CompKind::Bind { lhs, var, body } => {
                self.stack.push(Frame::Bind {
                    var: var.clone(),
                    body: body.clone(),
                    env: self.env.clone(),
                });
                self.control = lhs.clone();
                Ok(StepOutcome::Continue)
            }
            CompKind::Force(v) => match self.denote(v, &self.env.clone())? {
                ValueLiteral::Thunk(term, env) => {
                    self.control = term;
                    self.env = env;
                    Ok(StepOutcome::Continue)
                }
                other => self.stuck(span, format!("forced a non-thunk: {}", other.render())),
            },
            CompKind::Lam { var, body } => match self.stack.pop() {
                Some(Frame::Apply { arg }) => {
                    self.env = self.env.extend(var, arg);
                    self.control = body.clone();
                    Ok(StepOutcome::Continue)
                }
                Some(Frame::PairC { first }) => {
                    // A function in the second component of a negative pair:
                    // suspend it as a thunk so the pair is still a value.
                    let thunk = ValueLiteral::Thunk(control.clone(), self.env.clone());
                    let value = ValueLiteral::Pair(Rc::new(first), Rc::new(thunk));
                    self.control = lit_ret(value, span);
                    Ok(StepOutcome::Continue)
                }
                Some(other) => {
                    self.stack.push(other);
                    self.stuck(span, "function met a non-application frame")
                }
                None => Ok(StepOutcome::Final(EvalResult {
                    value: ValueLiteral::Thunk(control.clone(), self.env.clone()),
                    cost: self.cost,
                    phase: self.phase,
                    transitions: self.transitions,
                })),
            },
            CompKind::Ap { func, arg } => {
                let lit = self.denote(arg, &self.env.clone())?;
                self.stack.push(Frame::Apply { arg: lit });
                self.control = func.clone();
                Ok(StepOutcome::Continue)
            }
            CompKind::Step { cost, body } => {
                let c = self.step_cost(cost, &self.env.clone(), span)?;
                self.charge(c, span)?;
                self.control = body.clone();
                Ok(StepOutcome::Continue)
            }
            CompKind::RecNat { scrut, zero, pred, rec, suc } => {
                match self.denote(scrut, &self.env.clone())? {
                    ValueLiteral::Nat(0) => {
                        self.control = zero.clone();
                        Ok(StepOutcome::Continue)
                    }
                    ValueLiteral::Nat(n) => {
                        let prev = ValueLiteral::Nat(n - 1);
                        let rec_term = Rc::new(CompTerm {
                            kind: CompKind::RecNat {
                                scrut: lit_value(prev.clone(), span),
                                zero: zero.clone(),
                                pred: pred.clone(),
                                rec: rec.clone(),
                                suc: suc.clone(),
                            },
                            span,
                        });
                        let rec_thunk = ValueLiteral::Thunk(rec_term, self.env.clone());
                        self.env = self.env.extend(pred, prev).extend(rec, rec_thunk);
                        self.control = suc.clone();
                        Ok(StepOutcome::Continue)
                    }
                    other => self.stuck(span, format!("rec-nat on {}", other.render())),
                }
            }
            CompKind::RecList { scrut, charge, nil, head, tail, rec, cons } => {
                let charge = match charge {
                    Some(c) => *c,
                    None => return self.stuck(span, "rec-list was not elaborated by the checker"),
                };
                match self.denote(scrut, &self.env.clone())? {
                    ValueLiteral::List(l) => match l.uncons() {
                        None => {
                            self.control = nil.clone();
                            Ok(StepOutcome::Continue)
                        }
                        Some((h, t)) => {
                            // Destructing a cons node charges the list
                            // type's annotation.
                            self.charge(charge, span)?;
                            let t = t.clone();
                            let rec_term = Rc::new(CompTerm {
                                kind: CompKind::RecList {
                                    scrut: lit_value(ValueLiteral::List(t.clone()), span),
                                    charge: Some(charge),
                                    nil: nil.clone(),
                                    head: head.clone(),
                                    tail: tail.clone(),
                                    rec: rec.clone(),
                                    cons: cons.clone(),
                                },
                                span,
                            });
                            let rec_thunk = ValueLiteral::Thunk(rec_term, self.env.clone());
                            self.env = self
                                .env
                                .extend(head, h.clone())
                                .extend(tail, ValueLiteral::List(t))
                                .extend(rec, rec_thunk);
                            self.control = cons.clone();
                            Ok(StepOutcome::Continue)
                        }
                    },
                    other => self.stuck(span, format!("rec-list on {}", other.render())),
                }
            }
            CompKind::Case { scrut, lvar, left, rvar, right } => {
                match self.denote(scrut, &self.env.clone())? {
                    ValueLiteral::Inl(v) => {
                        self.env = self.env.extend(lvar, (*v).clone());
                        self.control = left.clone();
                        Ok(StepOutcome::Continue)
                    }
                    ValueLiteral::Inr(v) => {
                        self.env = self.env.extend(rvar, (*v).clone());
                        self.control = right.clone();
                        Ok(StepOutcome::Continue)
                    }
                    other => self.stuck(span, format!("case on {}", other.render())),
                }
            }
            CompKind::Split { scrut, fst, snd, body } => {
                match self.denote(scrut, &self.env.clone())? {
                    ValueLiteral::Pair(a, b) => {
                        self.env = self.env.extend(fst, (*a).clone()).extend(snd, (*b).clone());
                        self.control = body.clone();
                        Ok(StepOutcome::Continue)
                    }
                    other => self.stuck(span, format!("split on {}", other.render())),
                }
            }
            CompKind::If { scrut, then, els } => match self.denote(scrut, &self.env.clone())? {
                ValueLiteral::Bool(true) => {
                    self.control = then.clone();
                    Ok(StepOutcome::Continue)
                }
                ValueLiteral::Bool(false) => {
                    self.control = els.clone();
                    Ok(StepOutcome::Continue)
                }
                other => self.stuck(span, format!("if on {}", other.render())),
            },
            CompKind::ParPair(left, right) => {
                let saved = std::mem::replace(&mut self.cost, self.monoid.zero());
                self.stack.push(Frame::ParLeft {
                    right: right.clone(),
                    env: self.env.clone(),
                    saved,
                });
                self.control = left.clone();
                Ok(StepOutcome::Continue)
            }
            CompKind::PairC(v, e) => {
                let first = self.denote(v, &self.env.clone())?;
                self.stack.push(Frame::PairC { first });
                self.control = e.clone();
                Ok(StepOutcome::Continue)
            }
        }
    }

    fn run(mut self) -> Result<(EvalResult, Option<Vec<TraceEntry>>), EvalError> {
        loop {
            match self.transition()? {
                StepOutcome::Continue => {}
                StepOutcome::Final(result) => return Ok((result, self.trace)),
            }
        }
    }
}

fn lit_value(lit: ValueLiteral, span: Span) -> Rc<ValueTerm> {
    Rc::new(ValueTerm { kind: ValueKind::Lit(lit), span })
}

fn lit_ret(lit: ValueLiteral, span: Span) -> Rc<CompTerm> {
    Rc::new(CompTerm { kind: CompKind::Ret(lit_value(lit, span)), span })
}

fn apply_args(p: &CheckedProgram, args: &[ValueLiteral]) -> (Rc<CompTerm>, Vec<Frame>) {
    // Arguments are applied outside-in, so the last one is pushed first.
    let frames = args
        .iter()
        .rev()
        .map(|arg| Frame::Apply { arg: arg.clone() })
        .collect();
    (p.term.clone(), frames)
}

/// Evaluate a checked program applied to the given arguments.
pub fn eval(
    p: &CheckedProgram,
    args: &[ValueLiteral],
    phase: Phase,
    metas: &MetaRegistry,
    fuel: u64,
) -> Result<EvalResult, EvalError> {
    let (control, frames) = apply_args(p, args);
    let mut state = MachineState::new(control, Env::empty(), p.monoid, phase, metas, fuel);
    state.stack = frames;
    state.run().map(|(result, _)| result)
}

/// As [`eval`], also returning the nonzero cost increments in the order
/// they fired, tagged with the transition index.
pub fn eval_traced(
    p: &CheckedProgram,
    args: &[ValueLiteral],
    phase: Phase,
    metas: &MetaRegistry,
    fuel: u64,
) -> Result<(EvalResult, Vec<TraceEntry>), EvalError> {
    let (control, frames) = apply_args(p, args);
    let mut state =
        MachineState::new(control, Env::empty(), p.monoid, phase, metas, fuel).with_trace();
    state.stack = frames;
    let (result, trace) = state.run()?;
    Ok((result, trace.unwrap_or_default()))
}

/// Evaluate a bare computation term under an environment. Used by the
/// refinement harness to measure subterms during certificate checking.
pub fn eval_comp(
    term: Rc<CompTerm>,
    env: Env,
    monoid: CostMonoid,
    phase: Phase,
    metas: &MetaRegistry,
    fuel: u64,
) -> Result<EvalResult, EvalError> {
    MachineState::new(term, env, monoid, phase, metas, fuel)
        .run()
        .map(|(result, _)| result)
}

impl fmt::Display for EvalResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "value={} cost={}", self.value.render(), self.cost)
    }
}
