//! A cost-aware call-by-push-value (CBPV) core language.
//!
//! The crate provides:
//!
//! - [`cost`]: the cost-monoid abstraction with two instances — additive
//!   naturals and parallel work/span pairs.
//! - [`syntax`]: polarized CBPV abstract syntax, an s-expression front-end
//!   (`.calf` files), a pretty-printer, and a bidirectional typechecker.
//! - [`machine`]: a deterministic CK-style abstract machine that evaluates
//!   checked programs in one of two phases. The *intensional* phase
//!   accumulates the cost annotations crossed during evaluation; the
//!   *extensional* phase erases them at the transition level, so behaviour
//!   provably cannot depend on cost.
//! - [`refine`]: the verification harness — exact-cost (`has_cost`) and
//!   upper-bound (`is_bounded`) checks, syntax-directed bound certificates,
//!   a closed-form recurrence library (`fib_inv`, `ceil_log2`, ...),
//!   amortized-analysis checks, and input sweeps producing bound reports.
//! - [`stdlib`]: the case-study programs (identity functions, Euclid's
//!   algorithm, batched queues, three sorting algorithms) together with
//!   their cost-free host recurrences.
//! - [`gen`]: a seeded generator of random well-typed programs, used to
//!   exercise phase erasure and noninterference.
//! - [`cli`]: the batch command-line front-end (`run`, `check-bound`,
//!   `profile`, `sweep-all`).
//!
//! Most capabilities have a runnable demo under `examples/`.

pub mod cli;
pub mod cost;
pub mod gen;
pub mod lcg;
pub mod machine;
pub mod refine;
pub mod stdlib;
pub mod syntax;
