//! Registry of cost-free host primitives.
//!
//! A `meta` node in a value position applies a registered host function to
//! object-language values. Host calls execute in zero cost and zero
//! transitions: they import specification-level data (moduli, recursion
//! depths, clock bounds) whose computation is deliberately not tracked.

use super::ast::ValueType;
use crate::machine::ValueLiteral;
use std::collections::BTreeMap;
use std::rc::Rc;

pub type MetaFn = Rc<dyn Fn(&[ValueLiteral]) -> Result<ValueLiteral, String>>;

pub struct MetaEntry {
    pub params: Vec<ValueType>,
    pub ret: ValueType,
    pub run: MetaFn,
}

#[derive(Default)]
pub struct MetaRegistry {
    entries: BTreeMap<String, MetaEntry>,
}

impl MetaRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn register(
        &mut self,
        name: &str,
        params: Vec<ValueType>,
        ret: ValueType,
        run: impl Fn(&[ValueLiteral]) -> Result<ValueLiteral, String> + 'static,
    ) {
        self.entries.insert(
            name.to_string(),
            MetaEntry { params, ret, run: Rc::new(run) },
        );
    }

    pub fn get(&self, name: &str) -> Option<&MetaEntry> {
        self.entries.get(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(|s| s.as_str())
    }
}
