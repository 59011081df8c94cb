use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::{int, Error, Int, Result};

/// Exponent vector of a Laurent monomial on a fixed torus. The derived `Ord`
/// is lexicographic in the variable order, which is the term order used by
/// the greedy decomposition routines.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial(pub Vec<i64>);

impl Monomial {
    pub fn one(rank: usize) -> Self {
        Monomial(vec![0; rank])
    }

    pub fn var(i: usize, rank: usize) -> Self {
        let mut e = vec![0; rank];
        e[i] = 1;
        Monomial(e)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|e| *e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn inverse(&self) -> Self {
        Monomial(self.0.iter().map(|e| -e).collect())
    }

    pub fn pow(&self, k: i64) -> Self {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    /// Total degree `Σ|e_i|`.
    pub fn degree(&self) -> i64 {
        self.0.iter().map(|e| e.abs()).sum()
    }
}

/// Finite Z-linear combination of Laurent monomials on a torus of fixed
/// rank. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Character {
    rank: usize,
    terms: BTreeMap<Monomial, Int>,
}

impl Character {
    pub fn zero(rank: usize) -> Self {
        Character { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Character::constant(rank, int(1))
    }

    pub fn constant(rank: usize, c: Int) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(rank), c);
        }
        Character { rank, terms }
    }

    pub fn var(i: usize, rank: usize) -> Self {
        Character::monomial(Monomial::var(i, rank), int(1))
    }

    pub fn monomial(m: Monomial, c: Int) -> Self {
        let rank = m.rank();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Character { rank, terms }
    }

    pub fn from_terms(rank: usize, entries: &[(Vec<i64>, i64)]) -> Self {
        let mut out = Character::zero(rank);
        for (e, c) in entries {
            assert_eq!(e.len(), rank);
            out.add_term(Monomial(e.clone()), int(*c));
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Int)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Int {
        self.terms.get(m).cloned().unwrap_or_else(Int::zero)
    }

    fn add_term(&mut self, m: Monomial, c: Int) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Int::zero);
        *entry += c;
        if entry.is_zero() {
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .expect("zero entry just created");
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank, "rank mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Character {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &Int) -> Self {
        if k.is_zero() {
            return Character::zero(self.rank);
        }
        Character {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.rank, other.rank, "rank mismatch");
        let mut out = Character::zero(self.rank);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Character::one(self.rank);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Inverts every torus variable. An involution and a ring homomorphism;
    /// on an honest character this is the complex-conjugate representation.
    pub fn conjugate(&self) -> Self {
        Character {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, c)| (m.inverse(), c.clone())).collect(),
        }
    }

    /// Value at the identity element: the (virtual) dimension.
    pub fn dimension(&self) -> Int {
        self.terms.values().fold(Int::zero(), |acc, c| acc + c)
    }

    /// All coefficients nonnegative, i.e. an honest representation.
    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// A unit of the Laurent ring: a single monomial with coefficient ±1.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().map_or(false, |c| c.abs().is_one())
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::structural("only ±monomials are invertible"));
        }
        let (m, c) = self.terms.iter().next().expect("unit has one term");
        Ok(Character::monomial(m.inverse(), c.clone()))
    }

    /// Integer power, negative allowed for units.
    pub fn pow_i64(&self, k: i64) -> Result<Self> {
        if k >= 0 {
            return Ok(self.pow(k as u32));
        }
        Ok(self.inverse()?.pow((-k) as u32))
    }

    /// Lexicographically largest monomial and its coefficient.
    pub fn leading_term(&self) -> Option<(&Monomial, &Int)> {
        self.terms.iter().next_back()
    }

    /// Substitution homomorphism: variable `i` goes to `images[i]`.
    /// Negative exponents require the corresponding image to be a unit.
    pub fn substitute(&self, images: &[Character]) -> Result<Character> {
        if images.len() != self.rank {
            return Err(Error::structural(format!(
                "substitution needs {} images, got {}",
                self.rank,
                images.len()
            )));
        }
        let target_rank = match images.first() {
            Some(c) => c.rank(),
            None => 0,
        };
        if images.iter().any(|c| c.rank() != target_rank) {
            return Err(Error::structural("substitution images have mixed ranks"));
        }
        let mut out = Character::zero(target_rank);
        for (m, c) in &self.terms {
            let mut term = Character::constant(target_rank, c.clone());
            for (i, e) in m.0.iter().enumerate() {
                if *e == 0 {
                    continue;
                }
                term = term.mul(&images[i].pow_i64(*e)?);
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Renders with the given variable names, highest monomial first.
    pub fn display_with(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.rank);
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            let mut body = String::new();
            for (i, e) in m.0.iter().enumerate() {
                if *e == 0 {
                    continue;
                }
                if !body.is_empty() {
                    body.push('*');
                }
                if *e == 1 {
                    body.push_str(names[i]);
                } else {
                    body.push_str(&format!("{}^{}", names[i], e));
                }
            }
            let lead = if out.is_empty() {
                if c.is_negative() { "-".to_string() } else { String::new() }
            } else if c.is_negative() {
                " - ".to_string()
            } else {
                " + ".to_string()
            };
            let mag = c.abs();
            out.push_str(&lead);
            if body.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&body);
            } else {
                out.push_str(&format!("{mag}*{body}"));
            }
        }
        out
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.rank).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        write!(f, "{}", self.display_with(&refs))
    }
}
