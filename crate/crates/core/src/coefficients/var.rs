//! Process-wide registry of named indeterminates.
//!
//! Variables are interned once and referred to by a small integer id. The ids
//! of `q`, `t`, `u` and `k` are fixed (0..4); every other name gets the next
//! free id on first use. Ids only drive the in-memory layout; printed output
//! is ordered by [`Var::display_key`], so text is independent of registration
//! order.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

const RESERVED: [&str; 4] = ["q", "t", "u", "k"];

struct Registry {
    names: Vec<Arc<str>>,
    index: HashMap<Arc<str>, u32>,
}

fn registry() -> &'static RwLock<Registry> {
    static REG: OnceLock<RwLock<Registry>> = OnceLock::new();
    REG.get_or_init(|| {
        let mut reg = Registry {
            names: Vec::new(),
            index: HashMap::new(),
        };
        for name in RESERVED {
            let name: Arc<str> = Arc::from(name);
            reg.index.insert(name.clone(), reg.names.len() as u32);
            reg.names.push(name);
        }
        RwLock::new(reg)
    })
}

/// An interned indeterminate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(u32);

impl Var {
    pub fn new(name: &str) -> Var {
        if let Some(&id) = registry().read().unwrap().index.get(name) {
            return Var(id);
        }
        let mut reg = registry().write().unwrap();
        if let Some(&id) = reg.index.get(name) {
            return Var(id);
        }
        let id = reg.names.len() as u32;
        let name: Arc<str> = Arc::from(name);
        reg.index.insert(name.clone(), id);
        reg.names.push(name);
        Var(id)
    }

    pub fn q() -> Var {
        Var(0)
    }

    pub fn t() -> Var {
        Var(1)
    }

    pub fn u() -> Var {
        Var(2)
    }

    pub fn k() -> Var {
        Var(3)
    }

    pub fn id(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_id(id: usize) -> Var {
        Var(id as u32)
    }

    pub fn name(self) -> Arc<str> {
        registry().read().unwrap().names[self.0 as usize].clone()
    }

    /// Sort key for canonical printing: q < t < u < k, then by name.
    pub fn display_key(self) -> (usize, Arc<str>) {
        let name = self.name();
        let rank = RESERVED
            .iter()
            .position(|r| **r == *name)
            .unwrap_or(RESERVED.len());
        (rank, name)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reserved_ids_are_fixed() {
        assert_eq!(Var::new("q"), Var::q());
        assert_eq!(Var::new("k").id(), 3);
        let x = Var::new("x_reg_test");
        assert_eq!(Var::new("x_reg_test"), x);
        assert!(x.id() >= 4);
        assert!(Var::q().display_key() < Var::t().display_key());
        assert!(Var::k().display_key() < x.display_key());
    }
}
