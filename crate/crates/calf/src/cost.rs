//! Cost monoids.
//!
//! Every cost in the system is an element of an ordered cancellative monoid:
//! a unit [`CostMonoid::zero`], an associative sum [`CostMonoid::seq`], and a
//! preorder [`Cost::leq`] compatible with the sum. Two instances are
//! provided:
//!
//! - **Naturals** ([`CostMonoid::Nat`]): abstract step counts under addition.
//! - **Work/span pairs** ([`CostMonoid::Par`]): sequential composition `seq`
//!   adds componentwise, parallel composition [`CostMonoid::par`] adds the
//!   works and takes the max of the spans, and the order is componentwise
//!   (a partial order — incomparable pairs are simply not `leq`).
//!
//! Carriers are fixed-width unsigned integers with checked arithmetic;
//! overflow is a reported error, never a silent wrap. The naturals define
//! `par = seq` so that sequential case studies run unchanged under a
//! non-parallel monoid.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::fmt;

/// Selects one of the two cost-monoid instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CostMonoid {
    /// Additive naturals `(N, +, 0, <=)`.
    Nat,
    /// Work/span pairs `(N^2, +, (0,0), <=)` with componentwise order.
    Par,
}

/// An element of one of the cost monoids.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cost {
    Nat(u64),
    Par { work: u64, span: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CostError {
    #[error("cost arithmetic overflowed")]
    Overflow,
    #[error("mixed cost instances: {0} and {1}")]
    InstanceMismatch(Cost, Cost),
}

impl CostMonoid {
    /// The unit of sequential composition.
    pub fn zero(self) -> Cost {
        match self {
            CostMonoid::Nat => Cost::Nat(0),
            CostMonoid::Par => Cost::Par { work: 0, span: 0 },
        }
    }

    /// Display name as used in CLI flags and reports.
    pub fn name(self) -> &'static str {
        match self {
            CostMonoid::Nat => "nat",
            CostMonoid::Par => "par",
        }
    }

    /// Sequential composition (the monoid sum).
    pub fn seq(self, a: Cost, b: Cost) -> Result<Cost, CostError> {
        match (a, b) {
            (Cost::Nat(x), Cost::Nat(y)) => {
                x.checked_add(y).map(Cost::Nat).ok_or(CostError::Overflow)
            }
            (Cost::Par { work: w1, span: s1 }, Cost::Par { work: w2, span: s2 }) => {
                let work = w1.checked_add(w2).ok_or(CostError::Overflow)?;
                let span = s1.checked_add(s2).ok_or(CostError::Overflow)?;
                Ok(Cost::Par { work, span })
            }
            _ => Err(CostError::InstanceMismatch(a, b)),
        }
    }

    /// Parallel composition: sum of the works, max of the spans. The
    /// naturals have no separate parallel structure, so `par = seq` there.
    pub fn par(self, a: Cost, b: Cost) -> Result<Cost, CostError> {
        match (a, b) {
            (Cost::Nat(_), Cost::Nat(_)) => self.seq(a, b),
            (Cost::Par { work: w1, span: s1 }, Cost::Par { work: w2, span: s2 }) => {
                let work = w1.checked_add(w2).ok_or(CostError::Overflow)?;
                Ok(Cost::Par { work, span: s1.max(s2) })
            }
            _ => Err(CostError::InstanceMismatch(a, b)),
        }
    }
}

impl Cost {
    /// The instance this element belongs to.
    pub fn monoid(&self) -> CostMonoid {
        match self {
            Cost::Nat(_) => CostMonoid::Nat,
            Cost::Par { .. } => CostMonoid::Par,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Cost::Nat(0) | Cost::Par { work: 0, span: 0 })
    }

    /// The preorder of the ambient instance: naturals by `<=`, pairs
    /// componentwise. Elements of different instances are incomparable.
    pub fn leq(&self, other: &Cost) -> bool {
        match (self, other) {
            (Cost::Nat(x), Cost::Nat(y)) => x <= y,
            (Cost::Par { work: w1, span: s1 }, Cost::Par { work: w2, span: s2 }) => {
                w1 <= w2 && s1 <= s2
            }
            _ => false,
        }
    }

    /// Left-cancellative difference: the unique `d` with `seq(prefix, d) =
    /// self`, when it exists. Used to report slack in bound reports.
    pub fn minus(&self, prefix: &Cost) -> Option<Cost> {
        match (self, prefix) {
            (Cost::Nat(x), Cost::Nat(y)) => x.checked_sub(*y).map(Cost::Nat),
            (Cost::Par { work: w1, span: s1 }, Cost::Par { work: w2, span: s2 }) => {
                let work = w1.checked_sub(*w2)?;
                let span = s1.checked_sub(*s2)?;
                Some(Cost::Par { work, span })
            }
            _ => None,
        }
    }

    /// Componentwise max, used when aggregating slack across a sweep.
    pub fn join(&self, other: &Cost) -> Result<Cost, CostError> {
        match (self, other) {
            (Cost::Nat(x), Cost::Nat(y)) => Ok(Cost::Nat(*x.max(y))),
            (Cost::Par { work: w1, span: s1 }, Cost::Par { work: w2, span: s2 }) => Ok(Cost::Par {
                work: *w1.max(w2),
                span: *s1.max(s2),
            }),
            _ => Err(CostError::InstanceMismatch(*self, *other)),
        }
    }

    /// The natural carrier, if this is a `Nat` cost.
    pub fn as_nat(&self) -> Option<u64> {
        match self {
            Cost::Nat(n) => Some(*n),
            Cost::Par { .. } => None,
        }
    }
}

impl fmt::Display for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cost::Nat(n) => write!(f, "{n}"),
            Cost::Par { work, span } => write!(f, "({work}, {span})"),
        }
    }
}

impl Serialize for Cost {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Cost::Nat(n) => serializer.serialize_u64(*n),
            Cost::Par { work, span } => {
                let mut s = serializer.serialize_struct("Cost", 2)?;
                s.serialize_field("work", work)?;
                s.serialize_field("span", span)?;
                s.end()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lcg::Lcg;

    fn nat(n: u64) -> Cost {
        Cost::Nat(n)
    }

    fn par(w: u64, s: u64) -> Cost {
        Cost::Par { work: w, span: s }
    }

    #[test]
    fn zero_units() {
        assert_eq!(CostMonoid::Nat.zero(), nat(0));
        assert_eq!(CostMonoid::Par.zero(), par(0, 0));
        let c = nat(17);
        assert_eq!(CostMonoid::Nat.seq(CostMonoid::Nat.zero(), c).unwrap(), c);
        assert_eq!(CostMonoid::Nat.seq(c, CostMonoid::Nat.zero()).unwrap(), c);
    }

    #[test]
    fn seq_examples() {
        assert_eq!(CostMonoid::Nat.seq(nat(2), nat(3)).unwrap(), nat(5));
        assert_eq!(
            CostMonoid::Par.seq(par(1, 1), par(2, 2)).unwrap(),
            par(3, 3)
        );
    }

    #[test]
    fn par_examples() {
        assert_eq!(
            CostMonoid::Par.par(par(3, 3), par(5, 2)).unwrap(),
            par(8, 3)
        );
        let c = par(4, 9);
        assert_eq!(CostMonoid::Par.par(CostMonoid::Par.zero(), c).unwrap(), c);
        // Degenerate sequentialization on the naturals.
        assert_eq!(CostMonoid::Nat.par(nat(2), nat(3)).unwrap(), nat(5));
    }

    #[test]
    fn leq_examples() {
        assert!(nat(3).leq(&nat(5)));
        assert!(!nat(5).leq(&nat(3)));
        assert!(par(2, 3).leq(&par(3, 3)));
        assert!(!par(2, 3).leq(&par(3, 2)));
        // Incomparable pairs: a partial order, not a total one.
        assert!(!par(3, 2).leq(&par(2, 3)));
        assert!(!nat(0).leq(&par(1, 1)));
    }

    #[test]
    fn overflow_is_an_error() {
        assert_eq!(
            CostMonoid::Nat.seq(nat(u64::MAX), nat(1)),
            Err(CostError::Overflow)
        );
        assert_eq!(
            CostMonoid::Par.par(par(u64::MAX, 0), par(1, 0)),
            Err(CostError::Overflow)
        );
    }

    #[test]
    fn mixed_instances_are_rejected() {
        assert!(matches!(
            CostMonoid::Nat.seq(nat(1), par(1, 1)),
            Err(CostError::InstanceMismatch(..))
        ));
    }

    #[test]
    fn display_rendering() {
        assert_eq!(nat(12).to_string(), "12");
        assert_eq!(par(8, 3).to_string(), "(8, 3)");
    }

    fn sample(m: CostMonoid, rng: &mut Lcg) -> Cost {
        match m {
            CostMonoid::Nat => nat(rng.below(1 << 20)),
            CostMonoid::Par => par(rng.below(1 << 20), rng.below(1 << 20)),
        }
    }

    /// Monoid laws, cancellativity, commutativity/associativity of the
    /// parallel composition, compatibility of the order, and the mixed
    /// work/span law, each over 10^4 seeded random elements.
    #[test]
    fn law_suite_randomized() {
        for m in [CostMonoid::Nat, CostMonoid::Par] {
            let mut rng = Lcg::new(0xC057);
            for _ in 0..10_000 {
                let a = sample(m, &mut rng);
                let b = sample(m, &mut rng);
                let c = sample(m, &mut rng);

                // Associativity and unit.
                let ab = m.seq(a, b).unwrap();
                let bc = m.seq(b, c).unwrap();
                assert_eq!(m.seq(ab, c).unwrap(), m.seq(a, bc).unwrap());
                assert_eq!(m.seq(m.zero(), a).unwrap(), a);
                assert_eq!(m.seq(a, m.zero()).unwrap(), a);

                // Cancellativity: recover b from seq(a, b).
                assert_eq!(ab.minus(&a), Some(b));

                // Order compatible with seq, and a <= seq(a, b).
                assert!(a.leq(&ab));
                if a.leq(&b) {
                    assert!(m.seq(a, c).unwrap().leq(&m.seq(b, c).unwrap()));
                    assert!(m.seq(c, a).unwrap().leq(&m.seq(c, b).unwrap()));
                }

                // Parallel composition: commutative, associative, unital,
                // monotone.
                let pab = m.par(a, b).unwrap();
                assert_eq!(pab, m.par(b, a).unwrap());
                assert_eq!(
                    m.par(pab, c).unwrap(),
                    m.par(a, m.par(b, c).unwrap()).unwrap()
                );
                assert_eq!(m.par(a, m.zero()).unwrap(), a);
                if a.leq(&b) {
                    assert!(m.par(a, c).unwrap().leq(&m.par(b, c).unwrap()));
                }

                // Mixed law relating the two compositions on pairs.
                if let (
                    Cost::Par { work: sw, .. },
                    Cost::Par { work: pw, span: ps },
                    Cost::Par { span: s1, .. },
                    Cost::Par { span: s2, .. },
                ) = (m.seq(a, b).unwrap(), pab, a, b)
                {
                    assert_eq!(pw, sw);
                    assert_eq!(ps, s1.max(s2));
                }
            }
        }
    }
}
