//! Global table of formal scalar symbols.
//!
//! Symbols are interned once and compared by id. The id order is the global
//! variable order used by the monomial ordering, so the standard physics
//! symbols are declared up front in a fixed order; anything else is appended
//! in first-use order.

use std::collections::HashMap;
use std::fmt;
use std::sync::{LazyLock, RwLock};

/// Interned symbol handle. Smaller ids rank higher in lexicographic order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(pub(crate) u32);

struct Table {
    names: Vec<String>,
    ids: HashMap<String, u32>,
}

/// Declared up front so canonical forms print identically in every process.
const PREDECLARED: &[&str] = &[
    "hbar", "omega", "m", "e", "B3", "t", "E", "Eabs", "k", "pi", "c", "s", "alpha", "phi", "r",
    "H", "q", "p", "q1", "q2", "q3", "q4", "p1", "p2", "p3", "p4", "u1", "u2", "u3", "u4", "w1",
    "w2", "w3", "w4", "x1", "x2", "x3", "x4", "a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4",
];

static TABLE: LazyLock<RwLock<Table>> = LazyLock::new(|| {
    let mut t = Table {
        names: Vec::new(),
        ids: HashMap::new(),
    };
    for name in PREDECLARED {
        let id = t.names.len() as u32;
        t.names.push((*name).to_string());
        t.ids.insert((*name).to_string(), id);
    }
    RwLock::new(t)
});

impl Symbol {
    /// Interns `name`, returning the existing handle if already present.
    pub fn new(name: &str) -> Symbol {
        if let Some(&id) = TABLE.read().expect("symbol table poisoned").ids.get(name) {
            return Symbol(id);
        }
        let mut t = TABLE.write().expect("symbol table poisoned");
        if let Some(&id) = t.ids.get(name) {
            return Symbol(id);
        }
        let id = t.names.len() as u32;
        t.names.push(name.to_string());
        t.ids.insert(name.to_string(), id);
        Symbol(id)
    }

    /// Looks a symbol up without interning it.
    pub fn lookup(name: &str) -> Option<Symbol> {
        TABLE
            .read()
            .expect("symbol table poisoned")
            .ids
            .get(name)
            .map(|&id| Symbol(id))
    }

    pub fn name(&self) -> String {
        TABLE.read().expect("symbol table poisoned").names[self.0 as usize].clone()
    }

    pub fn id(&self) -> u32 {
        self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Symbol({})", self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interning_is_stable() {
        let a = Symbol::new("zeta_test");
        let b = Symbol::new("zeta_test");
        assert_eq!(a, b);
        assert_eq!(a.name(), "zeta_test");
        assert!(Symbol::new("hbar") < Symbol::new("omega"));
        assert_eq!(Symbol::lookup("hbar").unwrap().id(), 0);
    }
}
