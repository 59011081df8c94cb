use num_traits::One;

use super::character::{Character, Monomial};
use super::ring::{Letter, NamedChar};
use crate::exact::{solve_linear, Matrix};
use crate::{int, Error, Int, Result};

const MAX_DECOMPOSE_STEPS: usize = 10_000;

/// Expresses a torus character as a Laurent polynomial in the given ring
/// generators, by greedy elimination of the lexicographically leading
/// monomial.
///
/// Each generator must be monic in its leading monomial, and the leading
/// exponent vectors must be linearly independent, so the exponent equation
/// at each step has at most one solution; negative generator exponents are
/// allowed only for unit generators. The result is a character on the
/// generator alphabet.
pub fn decompose_in_generators(c: &Character, gens: &[NamedChar]) -> Result<Character> {
    let rank = c.rank();
    for g in gens {
        let (_, lc) = g
            .char
            .leading_term()
            .ok_or_else(|| Error::structural(format!("generator {} is zero", g.name)))?;
        if !lc.is_one() {
            return Err(Error::unsupported(format!(
                "generator {} is not monic in its leading monomial",
                g.name
            )));
        }
        if g.char.rank() != rank {
            return Err(Error::structural("generator rank mismatch"));
        }
    }
    let h = Matrix::from_fn(rank, gens.len(), |i, j| {
        int(gens[j].char.leading_term().expect("nonzero").0 .0[i])
    });
    if h.rank() != gens.len() {
        return Err(Error::unsupported(
            "generator leading monomials are dependent; greedy decomposition is ambiguous",
        ));
    }
    let invertible: Vec<bool> = gens.iter().map(|g| g.is_unit()).collect();
    let mut rest = c.clone();
    let mut out = Character::zero(gens.len());
    for _ in 0..MAX_DECOMPOSE_STEPS {
        let (m, coeff) = match rest.leading_term() {
            None => return Ok(out),
            Some((m, c)) => (m.clone(), c.clone()),
        };
        let target: Vec<Int> = m.0.iter().map(|e| int(*e)).collect();
        let a = solve_linear(&h, &target).ok_or_else(|| {
            Error::structural(format!("monomial outside the span of the generators: {c}"))
        })?;
        let mut exps: Vec<i64> = Vec::with_capacity(a.len());
        for (x, inv) in a.iter().zip(&invertible) {
            let e = i64::try_from(x)
                .map_err(|_| Error::structural("generator exponent overflows i64"))?;
            if e < 0 && !inv {
                return Err(Error::structural(format!(
                    "decomposition needs a negative power of a non-unit generator: {c}"
                )));
            }
            exps.push(e);
        }
        let mut product = Character::one(rank);
        for (g, e) in gens.iter().zip(&exps) {
            product = product.mul(&g.char.pow_i64(*e)?);
        }
        rest = rest.sub(&product.scale(&coeff));
        out = out.add(&Character::monomial(Monomial(exps), coeff));
    }
    Err(Error::unsupported("generator decomposition did not terminate"))
}

/// Substitutes generator characters back into a decomposition on the
/// generator alphabet; inverse of `decompose_in_generators`.
pub fn compose_generators(decomposed: &Character, gens: &[NamedChar]) -> Result<Character> {
    let images: Vec<Character> = gens.iter().map(|g| g.char.clone()).collect();
    decomposed.substitute(&images)
}

/// Writes an ambient-generator monomial as a product of letters, returning
/// letter multiplicities. Finds a product of minimal total letter count via
/// iterative deepening; `invertible` marks ambient coordinates that may go
/// negative along the way.
pub fn rewrite_in_letters(
    target: &[i64],
    letters: &[Letter],
    invertible: &[bool],
    max_letters: usize,
) -> Result<Vec<i64>> {
    let max_step: i64 = letters
        .iter()
        .flat_map(|l| l.ambient.iter().map(|e| e.abs()))
        .max()
        .unwrap_or(0);

    fn feasible(v: &[i64], invertible: &[bool], remaining: usize, max_step: i64) -> bool {
        let budget = remaining as i64 * max_step;
        v.iter().zip(invertible).all(|(e, inv)| {
            if *inv {
                e.abs() <= budget
            } else {
                *e >= 0 && *e <= budget
            }
        })
    }

    fn go(
        v: &mut Vec<i64>,
        letters: &[Letter],
        invertible: &[bool],
        start: usize,
        remaining: usize,
        max_step: i64,
        counts: &mut Vec<i64>,
    ) -> bool {
        if v.iter().all(|e| *e == 0) {
            return true;
        }
        if remaining == 0 || !feasible(v, invertible, remaining, max_step) {
            return false;
        }
        for i in start..letters.len() {
            for (slot, e) in v.iter_mut().zip(&letters[i].ambient) {
                *slot -= e;
            }
            counts[i] += 1;
            if go(v, letters, invertible, i, remaining - 1, max_step, counts) {
                return true;
            }
            counts[i] -= 1;
            for (slot, e) in v.iter_mut().zip(&letters[i].ambient) {
                *slot += e;
            }
        }
        false
    }

    for depth in 0..=max_letters {
        let mut v = target.to_vec();
        let mut counts = vec![0i64; letters.len()];
        if go(&mut v, letters, invertible, 0, depth, max_step, &mut counts) {
            return Ok(counts);
        }
    }
    Err(Error::unsupported(format!(
        "monomial {:?} is not a product of at most {max_letters} letters",
        target
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::groups::{restriction_to_sp2_s1, sp2_s1, sp2_s1_quotient, su};
    use crate::chars::lambda::exterior_power;

    #[test]
    fn ambient_decomposition_of_restricted_generators() {
        let g = su(5);
        let h = sp2_s1();
        let images = restriction_to_sp2_s1();
        let v = g.generator("v").unwrap().char.substitute(&images).unwrap();
        let d = decompose_in_generators(&v, &h.ring_generators).unwrap();
        // cu·x + x^{-4}
        assert_eq!(
            d,
            Character::from_terms(3, &[(vec![1, 0, 1], 1), (vec![0, 0, -4], 1)])
        );
        let l2v = g.generator("l2v").unwrap().char.substitute(&images).unwrap();
        let d2 = decompose_in_generators(&l2v, &h.ring_generators).unwrap();
        // l2·x² + cu·x^{-3}
        assert_eq!(
            d2,
            Character::from_terms(3, &[(vec![0, 1, 2], 1), (vec![1, 0, -3], 1)])
        );
        // round-trip
        assert_eq!(compose_generators(&d2, &h.ring_generators).unwrap(), l2v);
    }

    #[test]
    fn su5_polynomials_decompose_exactly() {
        let g = su(5);
        let v = &g.generator("v").unwrap().char;
        let l2v = &g.generator("l2v").unwrap().char;
        let product = v.mul(l2v);
        let d = decompose_in_generators(&product, &g.ring_generators).unwrap();
        assert_eq!(d, Character::from_terms(4, &[(vec![1, 1, 0, 0], 1)]));
        // λ³(v) of the standard rep is the third generator on the nose
        let l3 = exterior_power(v, 3).unwrap();
        let d3 = decompose_in_generators(&l3, &g.ring_generators).unwrap();
        assert_eq!(d3, Character::from_terms(4, &[(vec![0, 0, 1, 0], 1)]));
    }

    #[test]
    fn conjugate_restriction_needs_inverse_circle_powers() {
        // conj(ι*(v)) = cu·x^{-1} + x⁴ uses a negative power of the unit x
        let g = su(5);
        let h = sp2_s1();
        let images = restriction_to_sp2_s1();
        let v = g.generator("v").unwrap().char.substitute(&images).unwrap();
        let d = decompose_in_generators(&v.conjugate(), &h.ring_generators).unwrap();
        assert_eq!(
            d,
            Character::from_terms(3, &[(vec![1, 0, -1], 1), (vec![0, 0, 4], 1)])
        );
    }

    #[test]
    fn letter_rewrites_match_hand_values() {
        let h = sp2_s1_quotient();
        let q = h.quotient_model.as_ref().unwrap();
        let inv = [false, false, true];
        // cu·x^{-3} = d·c²
        assert_eq!(
            rewrite_in_letters(&[1, 0, -3], &q.letters, &inv, 8).unwrap(),
            vec![0, 0, 2, 1, 0]
        );
        // l2·x² = e·b
        assert_eq!(
            rewrite_in_letters(&[0, 1, 2], &q.letters, &inv, 8).unwrap(),
            vec![0, 1, 0, 0, 1]
        );
        // x⁴ = b²
        assert_eq!(
            rewrite_in_letters(&[0, 0, 4], &q.letters, &inv, 8).unwrap(),
            vec![0, 2, 0, 0, 0]
        );
        // cu·x^{-1} = d·c
        assert_eq!(
            rewrite_in_letters(&[1, 0, -1], &q.letters, &inv, 8).unwrap(),
            vec![0, 0, 1, 1, 0]
        );
        // the identity is the empty product
        assert_eq!(
            rewrite_in_letters(&[0, 0, 0], &q.letters, &inv, 8).unwrap(),
            vec![0, 0, 0, 0, 0]
        );
    }

    #[test]
    fn unreachable_monomial_is_an_error() {
        let h = sp2_s1_quotient();
        let q = h.quotient_model.as_ref().unwrap();
        let inv = [false, false, true];
        // odd cu exponent can never be balanced
        assert!(rewrite_in_letters(&[1, 0, 0], &q.letters, &inv, 6).is_err());
    }
}
