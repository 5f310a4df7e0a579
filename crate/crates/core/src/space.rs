use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

/// Maximum number of variables in one [`Space`].
pub const MAX_VARS: usize = 16;

/// Global variable order used by [`Space::standard`]. Monomials are compared
/// lexicographically in this order.
pub const STANDARD_NAMES: [&str; 11] = [
    "x", "z", "t", "t1", "t2", "t3", "lambda", "mu", "b", "a", "c",
];

/// An ordered list of variable names. Polynomials carry a shared reference to
/// the space they live in; the order fixes the monomial order.
#[derive(PartialEq, Eq, Hash)]
pub struct Space {
    names: Vec<String>,
}

pub type SpaceRef = Arc<Space>;

pub(crate) fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Space {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<SpaceRef> {
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables);
        }
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref();
            if !valid_identifier(n) {
                return Err(Error::InvalidName(n.to_string()));
            }
            if out.iter().any(|m| m == n) {
                return Err(Error::DuplicateVariable(n.to_string()));
            }
            out.push(n.to_string());
        }
        Ok(Arc::new(Space { names: out }))
    }

    /// The shared standard universe `x, z, t, t1, t2, t3, lambda, mu, b, a, c`.
    pub fn standard() -> SpaceRef {
        static STD: OnceLock<SpaceRef> = OnceLock::new();
        STD.get_or_init(|| Space::new(&STANDARD_NAMES).expect("standard names are valid"))
            .clone()
    }

    /// This space with the given names appended (names already present are skipped).
    pub fn extended<S: AsRef<str>>(self: &Arc<Self>, extra: &[S]) -> Result<SpaceRef> {
        let mut names = self.names.clone();
        for e in extra {
            if !names.iter().any(|n| n == e.as_ref()) {
                names.push(e.as_ref().to_string());
            }
        }
        if names.len() == self.names.len() {
            return Ok(self.clone());
        }
        Space::new(&names)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index(name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    /// Index map from `self` into `target`, if every name of `self` occurs in `target`.
    pub(crate) fn embedding(&self, target: &Space) -> Option<Vec<usize>> {
        self.names.iter().map(|n| target.index(n)).collect()
    }
}

impl fmt::Debug for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Space{:?}", self.names)
    }
}

pub(crate) fn same(a: &SpaceRef, b: &SpaceRef) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}

/// The space both operands can be moved into, preferring the larger one.
pub(crate) fn common(a: &SpaceRef, b: &SpaceRef) -> Result<SpaceRef> {
    if same(a, b) {
        return Ok(a.clone());
    }
    if a.embedding(b).is_some() {
        return Ok(b.clone());
    }
    if b.embedding(a).is_some() {
        return Ok(a.clone());
    }
    Err(Error::IncompatibleSpaces)
}
