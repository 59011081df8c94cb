use std::collections::HashSet;

use super::character::Character;
use super::ring::GroupData;
use crate::{Error, Result};

/// One generator of a fixed subring, as a monomial in the ambient ring
/// generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FixedGenerator {
    pub name: String,
    pub exponents: Vec<i64>,
}

/// Description of the fixed subring of a character ring under a central
/// sign action: which ambient generators carry sign −1 (the parity
/// predicate: their total exponent must be even), a generating set of
/// monomials, and whether the degree bound provably suffices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FixedSubring {
    /// Names of ambient generators on which the central element acts by −1;
    /// a monomial is fixed iff the sum of their exponents is even.
    pub odd_generators: Vec<String>,
    pub generators: Vec<FixedGenerator>,
    /// True when every fixed monomial is a product of the listed
    /// generators. A ±1 action always splits a fixed monomial into fixed
    /// factors of degree ≤ 2 (pair up the odd variables, peel the even ones
    /// singly), so a bound of 2 is already complete.
    pub complete: bool,
    pub degree_bound: i64,
}

/// Sign of the central element on a character: every monomial must carry
/// the same product of variable signs.
pub fn generator_sign(c: &Character, action: &[i8]) -> Result<i8> {
    let mut sign: Option<i8> = None;
    for (m, _) in c.terms() {
        let mut s: i8 = 1;
        for (e, a) in m.0.iter().zip(action) {
            if e % 2 != 0 && *a == -1 {
                s = -s;
            }
        }
        match sign {
            None => sign = Some(s),
            Some(prev) if prev != s => {
                return Err(Error::structural(
                    "central action is not scalar on a generator (mixed monomial signs)",
                ))
            }
            _ => {}
        }
    }
    sign.ok_or_else(|| Error::structural("zero character has no central sign"))
}

fn render_name(names: &[&str], exponents: &[i64]) -> String {
    let mut out = String::new();
    for (n, e) in names.iter().zip(exponents) {
        if *e == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('*');
        }
        if *e == 1 {
            out.push_str(n);
        } else {
            out.push_str(&format!("{n}^{e}"));
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

/// Exponent vectors of total degree `deg`, coordinate `i` ranging over
/// nonnegative values unless `invertible[i]`. Ordered with larger leading
/// exponents first and, per coordinate, positive before negative.
fn vectors_of_degree(deg: i64, invertible: &[bool]) -> Vec<Vec<i64>> {
    fn go(deg: i64, invertible: &[bool], acc: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if invertible.is_empty() {
            if deg == 0 {
                out.push(acc.clone());
            }
            return;
        }
        let mut choices: Vec<i64> = Vec::new();
        for mag in (0..=deg).rev() {
            choices.push(mag);
            if mag > 0 && invertible[0] {
                choices.push(-mag);
            }
        }
        for e in choices {
            acc.push(e);
            go(deg - e.abs(), &invertible[1..], acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(deg, invertible, &mut Vec::new(), &mut out);
    out
}

fn is_valid(v: &[i64], invertible: &[bool]) -> bool {
    v.iter().zip(invertible).all(|(e, inv)| *inv || *e >= 0)
}

fn representable(
    target: &[i64],
    gens: &[Vec<i64>],
    invertible: &[bool],
    seen: &mut HashSet<Vec<i64>>,
) -> bool {
    if target.iter().all(|e| *e == 0) {
        return true;
    }
    if !seen.insert(target.to_vec()) {
        return false;
    }
    for g in gens {
        let rest: Vec<i64> = target.iter().zip(g).map(|(t, e)| t - e).collect();
        if is_valid(&rest, invertible) && rest.iter().map(|e| e.abs()).sum::<i64>() < target.iter().map(|e| e.abs()).sum::<i64>()
        {
            if representable(&rest, gens, invertible, seen) {
                return true;
            }
        }
    }
    false
}

/// Generators of the subring of `R(G̃)` fixed by a central involution
/// acting by the given sign on each torus variable.
///
/// The sign action is scalar on each ambient ring generator (checked), so
/// the fixed subring is spanned by the fixed monomials in the generators;
/// those are characterized by a parity predicate on the exponents. The
/// generating set is found greedily: monomials are enumerated by total
/// degree up to `degree_bound` and kept when not a product of earlier
/// finds; the list is then closed under conjugation.
pub fn central_fixed_subring(
    data: &GroupData,
    action: &[i8],
    degree_bound: i64,
) -> Result<FixedSubring> {
    if action.len() != data.rank() {
        return Err(Error::structural("central action must assign a sign per torus variable"));
    }
    let signs: Vec<i8> = data
        .ring_generators
        .iter()
        .map(|g| generator_sign(&g.char, action))
        .collect::<Result<_>>()?;
    let invertible: Vec<bool> = data.ring_generators.iter().map(|g| g.is_unit()).collect();
    let names: Vec<&str> = data.ring_generators.iter().map(|g| g.name.as_str()).collect();
    let odd: Vec<usize> = (0..signs.len()).filter(|i| signs[*i] == -1).collect();

    let fixed = |v: &[i64]| -> bool { odd.iter().map(|i| v[*i]).sum::<i64>() % 2 == 0 };

    let mut gens: Vec<Vec<i64>> = Vec::new();
    for deg in 1..=degree_bound {
        for v in vectors_of_degree(deg, &invertible) {
            if !fixed(&v) {
                continue;
            }
            let mut seen = HashSet::new();
            if !representable(&v, &gens, &invertible, &mut seen) {
                gens.push(v);
            }
        }
    }
    // close under conjugation: unit generators conjugate to their inverses,
    // the rest must be self-conjugate for the exponent action to make sense
    let conjugable = data.ring_generators.iter().all(|g| g.is_unit() || g.char.conjugate() == g.char);
    if conjugable {
        let current = gens.clone();
        for g in current {
            let conj: Vec<i64> = g
                .iter()
                .zip(&invertible)
                .map(|(e, inv)| if *inv { -e } else { *e })
                .collect();
            if !gens.contains(&conj) {
                gens.push(conj);
            }
        }
    }
    let trivial_action = odd.is_empty();
    let generators = gens
        .into_iter()
        .map(|exponents| FixedGenerator { name: render_name(&names, &exponents), exponents })
        .collect();
    Ok(FixedSubring {
        odd_generators: odd.iter().map(|i| names[*i].to_string()).collect(),
        generators,
        complete: degree_bound >= 2 || (trivial_action && degree_bound >= 1),
        degree_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::groups::{circle, sp2_s1};

    fn exponent_set(s: &FixedSubring) -> Vec<Vec<i64>> {
        s.generators.iter().map(|g| g.exponents.clone()).collect()
    }

    #[test]
    fn central_quotient_of_sp2_s1() {
        let data = sp2_s1();
        let s = central_fixed_subring(&data, &[-1, -1, -1], 3).unwrap();
        assert_eq!(s.odd_generators, vec!["cu".to_string(), "x".to_string()]);
        assert!(s.complete);
        let got = exponent_set(&s);
        let expected: Vec<Vec<i64>> = vec![
            vec![0, 1, 0],  // l2
            vec![2, 0, 0],  // cu²
            vec![1, 0, 1],  // cu·x
            vec![1, 0, -1], // cu·x^{-1}
            vec![0, 0, 2],  // x²
            vec![0, 0, -2], // x^{-2}
        ];
        assert_eq!(got, expected);
    }

    #[test]
    fn sign_on_circle() {
        let data = circle();
        let s = central_fixed_subring(&data, &[-1], 4).unwrap();
        assert_eq!(exponent_set(&s), vec![vec![2], vec![-2]]);
        assert!(s.complete);
    }

    #[test]
    fn trivial_action_keeps_generators() {
        let data = sp2_s1();
        let s = central_fixed_subring(&data, &[1, 1, 1], 2).unwrap();
        assert!(s.odd_generators.is_empty());
        let got = exponent_set(&s);
        assert!(got.contains(&vec![1, 0, 0]));
        assert!(got.contains(&vec![0, 1, 0]));
        assert!(got.contains(&vec![0, 0, 1]));
        assert!(got.contains(&vec![0, 0, -1]));
        assert_eq!(got.len(), 4);
    }

    #[test]
    fn small_bound_is_flagged_incomplete() {
        let data = circle();
        let s = central_fixed_subring(&data, &[-1], 1).unwrap();
        assert!(s.generators.is_empty());
        assert!(!s.complete);
    }
}
