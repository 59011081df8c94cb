use super::character::Character;
use crate::{Error, Result};

/// Frobenius type of an irreducible (or distinguished) representation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RepType {
    Real,
    Complex,
    Quaternionic,
}

/// Shape of a character ring: torus rank and variable metadata.
///
/// `weight_doubling[i]` marks variable `i` as the square root of a torus
/// coordinate, so that half-integer spin weights stay Laurent.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharacterRingSpec {
    pub names: Vec<String>,
    pub weight_doubling: Vec<bool>,
}

impl CharacterRingSpec {
    pub fn new(names: &[&str]) -> Self {
        CharacterRingSpec {
            names: names.iter().map(|s| s.to_string()).collect(),
            weight_doubling: vec![false; names.len()],
        }
    }

    pub fn with_doubling(names: &[&str]) -> Self {
        CharacterRingSpec {
            names: names.iter().map(|s| s.to_string()).collect(),
            weight_doubling: vec![true; names.len()],
        }
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn name_refs(&self) -> Vec<&str> {
        self.names.iter().map(|s| s.as_str()).collect()
    }
}

/// Named ring generator with its torus character.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NamedChar {
    pub name: String,
    pub char: Character,
}

impl NamedChar {
    pub fn new(name: &str, char: Character) -> Self {
        NamedChar { name: name.to_string(), char }
    }

    /// Invertible in the character ring, i.e. a ±monomial.
    pub fn is_unit(&self) -> bool {
        self.char.is_unit()
    }
}

/// A monomial in the ambient ring generators, fixed by a central involution
/// and used as a generator of the fixed subring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Letter {
    pub name: String,
    /// Exponents over the ambient `ring_generators`.
    pub ambient: Vec<i64>,
}

impl Letter {
    pub fn new(name: &str, ambient: Vec<i64>) -> Self {
        Letter { name: name.to_string(), ambient }
    }
}

/// Extra data describing a group of the form `G̃/Z_2`: the character ring is
/// the fixed subring of `R(G̃)` under the central sign action, presented by
/// `letters` subject to `letter_relations`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientModel {
    /// Sign of the central element on each torus variable of the cover.
    pub action: Vec<i8>,
    pub letters: Vec<Letter>,
    /// Polynomial relations among the letters (characters on the letter
    /// alphabet, all exponents nonnegative).
    pub letter_relations: Vec<Character>,
}

/// A compact group realized through its character ring: torus variables,
/// distinguished ring generators, and representation types.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupData {
    pub name: String,
    pub spec: CharacterRingSpec,
    pub ring_generators: Vec<NamedChar>,
    pub type_table: Vec<(String, RepType)>,
    pub quotient_model: Option<QuotientModel>,
}

impl GroupData {
    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    pub fn generator(&self, name: &str) -> Result<&NamedChar> {
        self.ring_generators
            .iter()
            .find(|g| g.name == name)
            .ok_or_else(|| Error::structural(format!("{}: no generator named {name}", self.name)))
    }

    pub fn rep_type(&self, name: &str) -> Option<RepType> {
        self.type_table.iter().find(|(n, _)| n == name).map(|(_, t)| *t)
    }

    /// Validates generator shapes and the type table:
    /// real/quaternionic generators must be self-conjugate; complex ones
    /// must be units (conjugate = inverse) or paired with another generator.
    pub fn validate(&self) -> Result<()> {
        for g in &self.ring_generators {
            if g.char.rank() != self.rank() {
                return Err(Error::structural(format!(
                    "{}: generator {} has rank {}, torus has rank {}",
                    self.name,
                    g.name,
                    g.char.rank(),
                    self.rank()
                )));
            }
        }
        for (name, ty) in &self.type_table {
            let g = self.generator(name)?;
            let conj = g.char.conjugate();
            match ty {
                RepType::Real | RepType::Quaternionic => {
                    if conj != g.char {
                        return Err(Error::structural(format!(
                            "{}: {name} is typed self-conjugate but is not",
                            self.name
                        )));
                    }
                }
                RepType::Complex => {
                    let paired = g.is_unit()
                        || self.ring_generators.iter().any(|h| h.char == conj);
                    if !paired {
                        return Err(Error::structural(format!(
                            "{}: complex generator {name} has no conjugate partner",
                            self.name
                        )));
                    }
                }
            }
        }
        if let Some(q) = &self.quotient_model {
            if q.action.len() != self.rank() {
                return Err(Error::structural(format!(
                    "{}: central action must assign a sign per torus variable",
                    self.name
                )));
            }
            if q.action.iter().any(|s| *s != 1 && *s != -1) {
                return Err(Error::structural("central action signs must be ±1"));
            }
            for l in &q.letters {
                if l.ambient.len() != self.ring_generators.len() {
                    return Err(Error::structural(format!(
                        "{}: letter {} exponent length mismatch",
                        self.name, l.name
                    )));
                }
            }
            for r in &q.letter_relations {
                if r.rank() != q.letters.len() {
                    return Err(Error::structural(format!(
                        "{}: letter relation on wrong alphabet: {r}",
                        self.name
                    )));
                }
            }
        }
        Ok(())
    }
}
