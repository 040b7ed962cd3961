//! Generator bookkeeping: labels, roles and named blocks.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard limit imposed by the `u32` bitmask.
pub const HARD_CAP: usize = 24;

/// Environment variable that may lower the generator cap.
pub const CAP_ENV: &str = "SUPERHEIS_MAX_GENERATORS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Role {
    Zeta,
    Parameter,
    FockZ,
    FockZStar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub label: String,
    pub role: Role,
}

/// An ordered list of odd generators. Index order is the canonical
/// monomial order used by every sign computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorRegistry {
    gens: Vec<Generator>,
    blocks: BTreeMap<String, Vec<usize>>,
}

/// Cap from the environment, clamped to [`HARD_CAP`].
pub fn default_cap() -> usize {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map(|c| c.min(HARD_CAP))
        .unwrap_or(HARD_CAP)
}

impl GeneratorRegistry {
    pub fn builder() -> RegistryBuilder {
        RegistryBuilder { gens: Vec::new(), blocks: BTreeMap::new(), cap: default_cap() }
    }

    /// `m` zeta variables labelled `ζ1..ζm` in block `zeta`.
    pub fn zetas(m: usize) -> Result<Arc<Self>> {
        Self::builder().block("zeta", "ζ", m, Role::Zeta).build()
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generator(&self, i: usize) -> Option<&Generator> {
        self.gens.get(i)
    }

    pub fn label(&self, i: usize) -> &str {
        &self.gens[i].label
    }

    pub fn role(&self, i: usize) -> Role {
        self.gens[i].role
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.label == label)
    }

    pub fn with_role(&self, role: Role) -> Vec<usize> {
        (0..self.gens.len()).filter(|&i| self.gens[i].role == role).collect()
    }

    /// Generator indices of a named block, empty if absent.
    pub fn block(&self, name: &str) -> &[usize] {
        self.blocks.get(name).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn labels(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.label.clone()).collect()
    }

    pub fn mask_of(&self, indices: &[usize]) -> u32 {
        indices.iter().fold(0, |m, &i| m | (1 << i))
    }
}

pub struct RegistryBuilder {
    gens: Vec<Generator>,
    blocks: BTreeMap<String, Vec<usize>>,
    cap: usize,
}

impl RegistryBuilder {
    pub fn cap(mut self, cap: usize) -> Self {
        self.cap = cap.min(HARD_CAP);
        self
    }

    pub fn generator(mut self, label: impl Into<String>, role: Role) -> Self {
        self.gens.push(Generator { label: label.into(), role });
        self
    }

    /// Appends `count` generators labelled `{prefix}1..{prefix}count`,
    /// recorded under `name`.
    pub fn block(mut self, name: &str, prefix: &str, count: usize, role: Role) -> Self {
        let start = self.gens.len();
        for k in 1..=count {
            self.gens.push(Generator { label: format!("{prefix}{k}"), role });
        }
        self.blocks.entry(name.to_string()).or_default().extend(start..start + count);
        self
    }

    pub fn build(self) -> Result<Arc<GeneratorRegistry>> {
        if self.gens.len() > self.cap {
            return Err(Error::TooManyGenerators { requested: self.gens.len(), cap: self.cap });
        }
        for (i, g) in self.gens.iter().enumerate() {
            if self.gens[..i].iter().any(|h| h.label == g.label) {
                return Err(Error::DuplicateLabel(g.label.clone()));
            }
        }
        Ok(Arc::new(GeneratorRegistry { gens: self.gens, blocks: self.blocks }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_are_contiguous() {
        let r = GeneratorRegistry::builder()
            .block("zeta", "ζ", 2, Role::Zeta)
            .block("pi", "Π", 2, Role::Parameter)
            .build()
            .unwrap();
        assert_eq!(r.block("zeta"), &[0, 1]);
        assert_eq!(r.block("pi"), &[2, 3]);
        assert_eq!(r.label(3), "Π2");
        assert_eq!(r.with_role(Role::Parameter), vec![2, 3]);
        assert!(r.block("nothing").is_empty());
    }

    #[test]
    fn rejects_duplicates_and_overflow() {
        let dup = GeneratorRegistry::builder()
            .generator("x", Role::Parameter)
            .generator("x", Role::Parameter)
            .build();
        assert_eq!(dup.unwrap_err(), Error::DuplicateLabel("x".into()));
        let big = GeneratorRegistry::builder().cap(24).block("z", "z", 25, Role::Zeta).build();
        assert!(matches!(big, Err(Error::TooManyGenerators { requested: 25, cap: 24 })));
        let small = GeneratorRegistry::builder().cap(3).block("z", "z", 4, Role::Zeta).build();
        assert!(small.is_err());
    }
}
