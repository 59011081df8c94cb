//! Additive structure of quotients of Laurent-polynomial rings over Z by
//! finitely many relations: unit-driven variable elimination, windowed
//! relation saturation with a stabilization certificate, and the
//! augmentation-ideal quotients that turn restriction data into such
//! presentations.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::chars::{
    decompose_in_generators, generator_sign, rewrite_in_letters, Character, GroupData, Monomial,
};
use crate::exact::QuotientStructure;
use crate::{int, Error, Int, Presentation, Result};

pub const DEFAULT_WINDOW: i64 = 12;
const MAX_WINDOW_MONOMIALS: usize = 200_000;

/// A quotient-ring variable; `inverted` variables range over negative
/// exponents as well.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentVar {
    pub name: String,
    pub inverted: bool,
}

impl LaurentVar {
    pub fn new(name: &str, inverted: bool) -> Self {
        LaurentVar { name: name.to_string(), inverted }
    }
}

/// A ring `Z[vars^{±?}] / (relations)`, with an optional list of pending
/// variable eliminations `v := expression`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentIdealPresentation {
    pub vars: Vec<LaurentVar>,
    pub relations: Vec<Character>,
    /// Pending substitutions, applied in order by `eliminate_units`. After
    /// elimination the list is empty and `solved` records what happened.
    pub eliminable: Vec<(String, Character)>,
    /// Applied substitutions, re-expressed over the surviving variables.
    pub solved: Vec<(String, Character)>,
}

impl LaurentIdealPresentation {
    pub fn new(vars: Vec<LaurentVar>, relations: Vec<Character>) -> Self {
        for r in &relations {
            assert_eq!(r.rank(), vars.len(), "relation on wrong alphabet");
        }
        LaurentIdealPresentation { vars, relations, eliminable: Vec::new(), solved: Vec::new() }
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    pub fn var_names(&self) -> Vec<&str> {
        self.vars.iter().map(|v| v.name.as_str()).collect()
    }
}

/// Finds substitutions that shrink the presentation without changing the
/// ring:
/// 1. a relation `v·w − 1` lets the later variable be replaced by the
///    other's inverse (which becomes invertible);
/// 2. a relation in which `v` occurs in exactly one term, linearly, with a
///    ±1 coefficient and an invertible cofactor, solves for `v`.
///
/// The returned presentation carries the full substitution chain in
/// `eliminable`, each expression reduced to the variables still alive at
/// its point in the chain.
pub fn detect_eliminations(p: &LaurentIdealPresentation) -> Result<LaurentIdealPresentation> {
    let mut out = p.clone();
    let rank = out.vars.len();
    let mut alive: Vec<bool> = vec![true; rank];
    let mut inverted: Vec<bool> = out.vars.iter().map(|v| v.inverted).collect();
    let mut rels = out.relations.clone();
    let mut chain: Vec<(usize, Character)> = Vec::new();

    let identity_images = |rank: usize| -> Vec<Character> {
        (0..rank).map(|i| Character::var(i, rank)).collect()
    };

    loop {
        let mut found: Option<(usize, Character)> = None;
        'scan: for r in &rels {
            if r.is_zero() {
                continue;
            }
            // unit pair: exactly v·w − 1
            if r.num_terms() == 2 {
                let terms: Vec<(Monomial, Int)> =
                    r.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
                for (prod, other) in [(&terms[0], &terms[1]), (&terms[1], &terms[0])] {
                    let (m, c) = prod;
                    let (om, oc) = other;
                    let vars_in: Vec<usize> =
                        (0..rank).filter(|i| m.0[*i] != 0).collect();
                    if om.is_constant()
                        && *oc == int(-1)
                        && c.is_one()
                        && vars_in.len() == 2
                        && vars_in.iter().all(|i| m.0[*i] == 1)
                    {
                        let keep = vars_in[0];
                        let drop = vars_in[1];
                        inverted[keep] = true;
                        let mut e = vec![0i64; rank];
                        e[keep] = -1;
                        found = Some((drop, Character::monomial(Monomial(e), int(1))));
                        break 'scan;
                    }
                }
            }
            // linear occurrence with invertible cofactor
            for v in 0..rank {
                if !alive[v] {
                    continue;
                }
                let occurrences: Vec<(Monomial, Int)> = r
                    .terms()
                    .filter(|(m, _)| m.0[v] != 0)
                    .map(|(m, c)| (m.clone(), c.clone()))
                    .collect();
                if occurrences.len() != 1 {
                    continue;
                }
                let (m, c) = &occurrences[0];
                if m.0[v] != 1 || !c.abs().is_one() {
                    continue;
                }
                let cofactor_ok = (0..rank).all(|i| {
                    i == v || m.0[i] == 0 || (inverted[i] && alive[i])
                });
                if !cofactor_ok {
                    continue;
                }
                // v · M + rest = 0  =>  v = −rest · M^{-1} / c
                let mut cofactor = m.clone();
                cofactor.0[v] = 0;
                let rest = r.sub(&Character::monomial(m.clone(), c.clone()));
                let inv = Character::monomial(cofactor.inverse(), c.clone()); // c = ±1
                let expr = rest.neg().mul(&inv);
                found = Some((v, expr));
                break 'scan;
            }
        }
        let Some((v, expr)) = found else { break };
        if expr.terms().any(|(m, _)| m.0[v] != 0) {
            return Err(Error::CyclicSubstitution(format!(
                "{} defined through itself",
                out.vars[v].name
            )));
        }
        alive[v] = false;
        let mut images = identity_images(rank);
        images[v] = expr.clone();
        rels = rels
            .iter()
            .map(|r| r.substitute(&images))
            .collect::<Result<Vec<_>>>()?;
        rels.retain(|r| !r.is_zero());
        chain.push((v, expr));
    }

    out.eliminable = chain
        .into_iter()
        .map(|(v, expr)| (out.vars[v].name.clone(), expr))
        .collect();
    for (i, v) in out.vars.iter_mut().enumerate() {
        v.inverted = inverted[i];
    }
    Ok(out)
}

/// Applies the pending substitutions in order. Each one must make at least
/// one live relation vanish (its defining relation); the result is
/// re-expressed over the surviving variables.
pub fn eliminate_units(p: &LaurentIdealPresentation) -> Result<LaurentIdealPresentation> {
    let rank = p.vars.len();
    let mut rels = p.relations.clone();
    let mut alive = vec![true; rank];
    let mut exprs: Vec<Option<Character>> = vec![None; rank];

    for (name, expr) in &p.eliminable {
        let v = p
            .var_index(name)
            .ok_or_else(|| Error::structural(format!("unknown eliminable variable {name}")))?;
        if !alive[v] {
            return Err(Error::CyclicSubstitution(format!("{name} eliminated twice")));
        }
        if expr.terms().any(|(m, _)| m.0[v] != 0 || (0..rank).any(|i| !alive[i] && m.0[i] != 0)) {
            return Err(Error::CyclicSubstitution(format!(
                "{name} defined through an eliminated variable"
            )));
        }
        let mut images: Vec<Character> = (0..rank).map(|i| Character::var(i, rank)).collect();
        images[v] = expr.clone();
        let before = rels.len();
        rels = rels
            .iter()
            .map(|r| r.substitute(&images))
            .collect::<Result<Vec<_>>>()?;
        rels.retain(|r| !r.is_zero());
        if rels.len() == before {
            return Err(Error::structural(format!(
                "substituting {name} does not kill its defining relation"
            )));
        }
        alive[v] = false;
        exprs[v] = Some(expr.clone());
    }

    // project onto the surviving alphabet
    let survivors: Vec<usize> = (0..rank).filter(|i| alive[*i]).collect();
    let project = |c: &Character| -> Result<Character> {
        let mut out = Character::zero(survivors.len());
        for (m, coeff) in c.terms() {
            if let Some(i) = (0..rank).find(|i| !alive[*i] && m.0[*i] != 0) {
                return Err(Error::structural(format!(
                    "eliminated variable {} survives in a relation",
                    p.vars[i].name
                )));
            }
            let e: Vec<i64> = survivors.iter().map(|i| m.0[*i]).collect();
            out = out.add(&Character::monomial(Monomial(e), coeff.clone()));
        }
        Ok(out)
    };

    let relations = rels.iter().map(project).collect::<Result<Vec<_>>>()?;
    // record each eliminated variable's final expression over the survivors
    let mut solved: Vec<(String, Character)> = Vec::new();
    for (name, _) in &p.eliminable {
        let v = p.var_index(name).expect("checked above");
        let mut expr = exprs[v].clone().expect("eliminated");
        // chase later substitutions so the record uses surviving variables
        loop {
            let uses_dead = expr
                .terms()
                .any(|(m, _)| (0..rank).any(|i| !alive[i] && i != v && m.0[i] != 0 && exprs[i].is_some()));
            if !uses_dead {
                break;
            }
            let mut images: Vec<Character> = (0..rank).map(|i| Character::var(i, rank)).collect();
            for i in 0..rank {
                if !alive[i] && i != v {
                    if let Some(e) = &exprs[i] {
                        images[i] = e.clone();
                    }
                }
            }
            expr = expr.substitute(&images)?;
        }
        solved.push((name.clone(), project(&expr)?));
    }
    Ok(LaurentIdealPresentation {
        vars: survivors.iter().map(|i| p.vars[*i].clone()).collect(),
        relations,
        eliminable: Vec::new(),
        solved,
    })
}

/// The additive structure of a Laurent quotient, computed inside an
/// exponent window and certified by recomputation at the next window size.
#[derive(Clone, Debug)]
pub struct AdditiveStructure {
    group: crate::FinAbGroup,
    window: i64,
    vars: Vec<LaurentVar>,
    columns: BTreeMap<Monomial, usize>,
    structure: QuotientStructure<Int>,
}

impl AdditiveStructure {
    pub fn group(&self) -> &crate::FinAbGroup {
        &self.group
    }

    pub fn window(&self) -> i64 {
        self.window
    }

    /// Representatives of the canonical generators (torsion first, then
    /// free), as Laurent polynomials.
    pub fn basis_reps(&self) -> Vec<Character> {
        let n = self.group.num_generators();
        (0..n)
            .map(|i| {
                let coords = self.structure.representative(i);
                let mut out = Character::zero(self.vars.len());
                for (m, col) in &self.columns {
                    if !coords[*col].is_zero() {
                        out = out.add(&Character::monomial(m.clone(), coords[*col].clone()));
                    }
                }
                out
            })
            .collect()
    }

    /// Coordinates of an element in the canonical basis; torsion
    /// coordinates are reduced into `[0, d)`.
    pub fn element_normal_form(&self, elem: &Character) -> Result<Vec<Int>> {
        if elem.rank() != self.vars.len() {
            return Err(Error::structural("element on the wrong variable alphabet"));
        }
        let mut coords = vec![Int::zero(); self.columns.len()];
        for (m, c) in elem.terms() {
            let col = self.columns.get(m).ok_or_else(|| {
                Error::WindowTooSmall(format!(
                    "monomial {:?} lies outside the window {}",
                    m.0, self.window
                ))
            })?;
            coords[*col] = c.clone();
        }
        Ok(self.structure.reduce(&coords))
    }

    pub fn is_zero(&self, elem: &Character) -> Result<bool> {
        Ok(self.element_normal_form(elem)?.iter().all(|c| c.is_zero()))
    }
}

fn window_monomials(vars: &[LaurentVar], w: i64) -> Result<Vec<Vec<i64>>> {
    let mut out: Vec<Vec<i64>> = vec![vec![]];
    for v in vars {
        let lo = if v.inverted { -w } else { 0 };
        let mut next = Vec::new();
        for stem in &out {
            for e in lo..=w {
                let mut s = stem.clone();
                s.push(e);
                next.push(s);
            }
        }
        out = next;
        if out.len() > MAX_WINDOW_MONOMIALS {
            return Err(Error::unsupported(format!(
                "window {w} needs more than {MAX_WINDOW_MONOMIALS} monomials"
            )));
        }
    }
    Ok(out)
}

fn saturated_group(
    p: &LaurentIdealPresentation,
    w: i64,
) -> Result<(crate::FinAbGroup, BTreeMap<Monomial, usize>, QuotientStructure<Int>)> {
    let monos = window_monomials(&p.vars, w)?;
    let columns: BTreeMap<Monomial, usize> = monos
        .iter()
        .enumerate()
        .map(|(i, e)| (Monomial(e.clone()), i))
        .collect();
    // BTreeMap iteration reorders the columns canonically
    let columns: BTreeMap<Monomial, usize> = columns
        .into_iter()
        .enumerate()
        .map(|(i, (m, _))| (m, i))
        .collect();
    let ncols = columns.len();
    let mut rows: Vec<Vec<Int>> = Vec::new();
    for r in &p.relations {
        if r.is_zero() {
            continue;
        }
        // exponent spread of the relation bounds the multiplier range
        let spread: Vec<(i64, i64)> = (0..p.vars.len())
            .map(|i| {
                let es: Vec<i64> = r.terms().map(|(m, _)| m.0[i]).collect();
                let lo = *es.iter().min().expect("nonzero relation");
                let hi = *es.iter().max().expect("nonzero relation");
                (lo, hi)
            })
            .collect();
        let mut ranges: Vec<Vec<i64>> = Vec::new();
        for (i, v) in p.vars.iter().enumerate() {
            let lo = (if v.inverted { -w } else { 0 }) - spread[i].0;
            let hi = w - spread[i].1;
            ranges.push((lo..=hi).collect());
        }
        let mut multipliers: Vec<Vec<i64>> = vec![vec![]];
        for range in &ranges {
            let mut next = Vec::new();
            for stem in &multipliers {
                for e in range {
                    let mut s = stem.clone();
                    s.push(*e);
                    next.push(s);
                }
            }
            multipliers = next;
        }
        for mu in multipliers {
            let mut row = vec![Int::zero(); ncols];
            let mut ok = true;
            for (m, c) in r.terms() {
                let shifted = Monomial(m.0.iter().zip(&mu).map(|(a, b)| a + b).collect());
                match columns.get(&shifted) {
                    Some(col) => row[*col] = c.clone(),
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                rows.push(row);
            }
        }
    }
    let rels = crate::IntMatrix::from_fn(rows.len(), ncols, |i, j| rows[i][j].clone());
    let structure = QuotientStructure::new(Presentation::new(ncols, rels));
    Ok((structure.group().clone(), columns, structure))
}

/// Computes the quotient's additive structure by saturating each relation
/// with monomial multiples inside the window, presenting the result to SNF,
/// and certifying stabilization by recomputing one window step larger.
pub fn additive_structure(p: &LaurentIdealPresentation, window: i64) -> Result<AdditiveStructure> {
    if !p.eliminable.is_empty() {
        return Err(Error::structural("run eliminate_units before additive_structure"));
    }
    if window < 1 {
        return Err(Error::structural("window must be at least 1"));
    }
    let (group, columns, structure) = saturated_group(p, window)?;
    let (next, _, _) = saturated_group(p, window + 1)?;
    if group != next {
        return Err(Error::NoStabilization {
            window: window as usize,
            at_window: group.to_string(),
            at_next: next.to_string(),
        });
    }
    Ok(AdditiveStructure { group, window, vars: p.vars.clone(), columns, structure })
}

/// The presentation of `Z ⊗_{R(G)} R(H)`: the quotient of `R(H)` by the
/// ideal generated by the restrictions of the `R(G)` generators minus
/// their dimensions.
///
/// `restriction` assigns to each ring generator of `G` its image character
/// on the torus of `H`. When `H` carries a central-quotient model, images
/// are decomposed over the ambient generators and rewritten in the fixed
/// letters; otherwise the ring generators of `H` themselves become the
/// presentation variables.
pub fn augmentation_quotient(
    g: &GroupData,
    h: &GroupData,
    restriction: &[(String, Character)],
) -> Result<LaurentIdealPresentation> {
    let image_of = |name: &str| -> Result<&Character> {
        restriction
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, c)| c)
            .ok_or_else(|| Error::structural(format!("restriction missing generator {name}")))
    };
    for gen in &g.ring_generators {
        image_of(&gen.name)?;
    }

    match &h.quotient_model {
        None => {
            let vars: Vec<LaurentVar> = h
                .ring_generators
                .iter()
                .map(|gen| LaurentVar::new(&gen.name, gen.is_unit()))
                .collect();
            let mut relations = Vec::new();
            for gen in &g.ring_generators {
                let image = image_of(&gen.name)?;
                let reduced = image.sub(&Character::constant(image.rank(), gen.char.dimension()));
                relations.push(decompose_in_generators(&reduced, &h.ring_generators)?);
            }
            Ok(LaurentIdealPresentation::new(vars, relations))
        }
        Some(q) => {
            let vars: Vec<LaurentVar> =
                q.letters.iter().map(|l| LaurentVar::new(&l.name, false)).collect();
            let ambient_invertible: Vec<bool> =
                h.ring_generators.iter().map(|gen| gen.is_unit()).collect();
            let mut relations = q.letter_relations.clone();
            for gen in &g.ring_generators {
                let image = image_of(&gen.name)?;
                let reduced = image.sub(&Character::constant(image.rank(), gen.char.dimension()));
                let ambient = decompose_in_generators(&reduced, &h.ring_generators)?;
                let mut rel = Character::zero(q.letters.len());
                for (m, c) in ambient.terms() {
                    // every monomial of an H-character is fixed by the
                    // central action; anything else is bad restriction data
                    let sign_check = Character::monomial(m.clone(), int(1));
                    let ambient_char =
                        crate::chars::compose_generators(&sign_check, &h.ring_generators)?;
                    if generator_sign(&ambient_char, &q.action)? != 1 {
                        return Err(Error::structural(format!(
                            "restricted image of {} is not invariant under the central action",
                            gen.name
                        )));
                    }
                    let counts = rewrite_in_letters(&m.0, &q.letters, &ambient_invertible, 12)?;
                    rel = rel.add(&Character::monomial(Monomial(counts), c.clone()));
                }
                relations.push(rel);
            }
            Ok(LaurentIdealPresentation::new(vars, relations))
        }
    }
}

/// Builds the generator-level restriction data from torus-variable images.
pub fn restriction_from_torus_images(
    g: &GroupData,
    images: &[Character],
) -> Result<Vec<(String, Character)>> {
    g.ring_generators
        .iter()
        .map(|gen| Ok((gen.name.clone(), gen.char.substitute(images)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::{circle, restriction_to_sp2_s1, sp2_s1_quotient, su};

    fn univariate(inverted: bool, rels: &[Vec<(i64, i64)>]) -> LaurentIdealPresentation {
        let relations = rels
            .iter()
            .map(|terms| {
                let entries: Vec<(Vec<i64>, i64)> =
                    terms.iter().map(|(e, c)| (vec![*e], *c)).collect();
                Character::from_terms(1, &entries)
            })
            .collect();
        LaurentIdealPresentation::new(vec![LaurentVar::new("x", inverted)], relations)
    }

    #[test]
    fn circle_modulo_x_minus_one() {
        let p = univariate(true, &[vec![(1, 1), (0, -1)]]);
        let s = additive_structure(&p, 6).unwrap();
        assert_eq!(s.group().to_string(), "Z");
        assert_eq!(s.basis_reps().len(), 1);
        // x^3 ≡ 1
        let x3 = Character::from_terms(1, &[(vec![3], 1)]);
        let one = Character::one(1);
        assert_eq!(
            s.element_normal_form(&x3).unwrap(),
            s.element_normal_form(&one).unwrap()
        );
    }

    #[test]
    fn two_sphere_quotient() {
        // Z[x^±] / (x + x^{-1} − 2) is free of rank 2
        let p = univariate(true, &[vec![(1, 1), (-1, 1), (0, -2)]]);
        let s = additive_structure(&p, 8).unwrap();
        assert_eq!(s.group(), &crate::FinAbGroup::free(2));
        // (x − 1)² = x² − 2x + 1 ≡ 0
        let sq = Character::from_terms(1, &[(vec![2], 1), (vec![1], -2), (vec![0], 1)]);
        assert!(s.is_zero(&sq).unwrap());
    }

    #[test]
    fn no_stabilization_without_relations() {
        let p = univariate(true, &[]);
        match additive_structure(&p, 3) {
            Err(Error::NoStabilization { window, at_window, at_next }) => {
                assert_eq!(window, 3);
                assert_eq!(at_window, "Z^7");
                assert_eq!(at_next, "Z^9");
            }
            other => panic!("expected stabilization failure, got {other:?}"),
        }
    }

    #[test]
    fn window_too_small_is_loud() {
        let p = univariate(true, &[vec![(1, 1), (0, -1)]]);
        let s = additive_structure(&p, 4).unwrap();
        let far = Character::from_terms(1, &[(vec![9], 1)]);
        assert!(matches!(s.element_normal_form(&far), Err(Error::WindowTooSmall(_))));
    }

    #[test]
    fn augmentation_of_full_group_is_z() {
        // H = G: all reduced generators die, leaving Z
        let g = su(2);
        let ident = vec![Character::var(0, 1)];
        let restriction = restriction_from_torus_images(&g, &ident).unwrap();
        let p = augmentation_quotient(&g, &g, &restriction).unwrap();
        assert_eq!(p.vars.len(), 1);
        assert!(!p.vars[0].inverted);
        let s = additive_structure(&p, 6).unwrap();
        assert_eq!(s.group(), &crate::FinAbGroup::free(1));
    }

    #[test]
    fn su2_over_torus_is_k_of_s2() {
        let g = su(2);
        let h = circle();
        let images = vec![Character::var(0, 1)];
        let restriction = restriction_from_torus_images(&g, &images).unwrap();
        let p = augmentation_quotient(&g, &h, &restriction).unwrap();
        assert_eq!(p.vars.len(), 1);
        assert!(p.vars[0].inverted);
        assert_eq!(
            p.relations,
            vec![Character::from_terms(1, &[(vec![1], 1), (vec![-1], 1), (vec![0], -2)])]
        );
        let s = additive_structure(&p, 8).unwrap();
        assert_eq!(s.group(), &crate::FinAbGroup::free(2));
    }

    #[test]
    fn berger_presentation_relations() {
        let g = su(5);
        let h = sp2_s1_quotient();
        let restriction = restriction_from_torus_images(&g, &restriction_to_sp2_s1()).unwrap();
        let p = augmentation_quotient(&g, &h, &restriction).unwrap();
        assert_eq!(p.var_names(), vec!["a", "b", "c", "d", "e"]);
        // two letter relations plus one per SU(5) generator
        assert_eq!(p.relations.len(), 6);
        let rel = |entries: &[(Vec<i64>, i64)]| Character::from_terms(5, entries);
        // bc = 1, ab = d²
        assert_eq!(p.relations[0], rel(&[(vec![0, 1, 1, 0, 0], 1), (vec![0, 0, 0, 0, 0], -1)]));
        assert_eq!(p.relations[1], rel(&[(vec![1, 1, 0, 0, 0], 1), (vec![0, 0, 0, 2, 0], -1)]));
        // v: d + c² = 5
        assert_eq!(
            p.relations[2],
            rel(&[(vec![0, 0, 2, 0, 0], 1), (vec![0, 0, 0, 1, 0], 1), (vec![0, 0, 0, 0, 0], -5)])
        );
        // λ²v: eb + dc² = 10
        assert_eq!(
            p.relations[3],
            rel(&[(vec![0, 1, 0, 0, 1], 1), (vec![0, 0, 2, 1, 0], 1), (vec![0, 0, 0, 0, 0], -10)])
        );
        // λ³v: ec + db = 10
        assert_eq!(
            p.relations[4],
            rel(&[(vec![0, 0, 1, 0, 1], 1), (vec![0, 1, 0, 1, 0], 1), (vec![0, 0, 0, 0, 0], -10)])
        );
        // λ⁴v: dc + b² = 5
        assert_eq!(
            p.relations[5],
            rel(&[(vec![0, 0, 1, 1, 0], 1), (vec![0, 2, 0, 0, 0], 1), (vec![0, 0, 0, 0, 0], -5)])
        );
    }

    #[test]
    fn berger_elimination_chain() {
        let g = su(5);
        let h = sp2_s1_quotient();
        let restriction = restriction_from_torus_images(&g, &restriction_to_sp2_s1()).unwrap();
        let p = augmentation_quotient(&g, &h, &restriction).unwrap();
        let detected = detect_eliminations(&p).unwrap();
        let order: Vec<&str> = detected.eliminable.iter().map(|(n, _)| n.as_str()).collect();
        assert_eq!(order, vec!["c", "a", "d", "e"]);
        let reduced = eliminate_units(&detected).unwrap();
        assert_eq!(reduced.var_names(), vec!["b"]);
        assert!(reduced.vars[0].inverted);
        assert_eq!(reduced.relations.len(), 2);
        // c was solved as b^{-1}, d as 5 − b^{-2}
        let solved: BTreeMap<&str, &Character> =
            reduced.solved.iter().map(|(n, e)| (n.as_str(), e)).collect();
        assert_eq!(solved["c"], &Character::from_terms(1, &[(vec![-1], 1)]));
        assert_eq!(solved["d"], &Character::from_terms(1, &[(vec![0], 5), (vec![-2], -1)]));
    }

    #[test]
    fn berger_additive_structure() {
        let g = su(5);
        let h = sp2_s1_quotient();
        let restriction = restriction_from_torus_images(&g, &restriction_to_sp2_s1()).unwrap();
        let p = augmentation_quotient(&g, &h, &restriction).unwrap();
        let reduced = eliminate_units(&detect_eliminations(&p).unwrap()).unwrap();
        let s = additive_structure(&reduced, DEFAULT_WINDOW).unwrap();
        assert_eq!(s.group().to_string(), "Z^3 ⊕ Z_5^2");
    }

    #[test]
    fn elimination_requires_defining_relation() {
        let mut p = univariate(true, &[vec![(1, 1), (0, -1)]]);
        // claim x := 2 although the relation says x = 1
        p.eliminable = vec![("x".to_string(), Character::constant(1, int(2)))];
        assert!(eliminate_units(&p).is_err());
    }

    #[test]
    fn empty_elimination_is_identity() {
        let p = univariate(true, &[vec![(1, 1), (0, -1)]]);
        let out = eliminate_units(&p).unwrap();
        assert_eq!(out.vars, p.vars);
        assert_eq!(out.relations, p.relations);
    }
}
