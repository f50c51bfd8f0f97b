//! Hyperedge labels and typed alphabets.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// A label with a fixed arity (the number of attachment vertices every
/// hyperedge carrying it must have).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Label {
    pub name: String,
    pub arity: usize,
}

impl Label {
    pub fn new(name: impl Into<String>, arity: usize) -> Self {
        Self {
            name: name.into(),
            arity,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.name, self.arity)
    }
}

/// A finite set of labels with unique names and a fixed arity per name.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Alphabet {
    arities: BTreeMap<String, usize>,
}

impl Alphabet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_labels(labels: impl IntoIterator<Item = Label>) -> Result<Self> {
        let mut a = Self::new();
        for l in labels {
            a.insert(l)?;
        }
        Ok(a)
    }

    /// Adds a label; re-adding the same name with a different arity is an error.
    pub fn insert(&mut self, label: Label) -> Result<()> {
        match self.arities.get(&label.name) {
            Some(&arity) if arity != label.arity => Err(Error::LabelArityClash {
                name: label.name,
                old: arity,
                new: label.arity,
            }),
            _ => {
                self.arities.insert(label.name, label.arity);
                Ok(())
            }
        }
    }

    pub fn contains(&self, name: &str) -> bool {
        self.arities.contains_key(name)
    }

    pub fn arity(&self, name: &str) -> Option<usize> {
        self.arities.get(name).copied()
    }

    pub fn get(&self, name: &str) -> Option<Label> {
        self.arities.get(name).map(|&a| Label::new(name, a))
    }

    pub fn len(&self) -> usize {
        self.arities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arities.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Label> + '_ {
        self.arities.iter().map(|(n, &a)| Label::new(n.clone(), a))
    }

    pub fn is_disjoint(&self, other: &Alphabet) -> bool {
        self.arities.keys().all(|n| !other.contains(n))
    }
}

impl FromIterator<Label> for Alphabet {
    /// Panics on an arity clash; use [`Alphabet::from_labels`] for fallible
    /// construction.
    fn from_iter<T: IntoIterator<Item = Label>>(iter: T) -> Self {
        Self::from_labels(iter).expect("arity clash in alphabet literal")
    }
}
