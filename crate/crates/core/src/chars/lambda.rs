use num_traits::{One, Zero};

use super::character::Character;
use crate::{int, Error, Int, Result};

/// Generalized binomial coefficient `C(n, k)` for integer (possibly
/// negative) `n`: the coefficient of `t^k` in `(1+t)^n`.
pub fn binomial(n: &Int, k: usize) -> Int {
    let mut num = Int::one();
    for i in 0..k {
        num *= n - int(i as i64);
    }
    let mut den = Int::one();
    for i in 1..=k {
        den *= int(i as i64);
    }
    num / den
}

/// `λ^0(c), …, λ^max(c)` for an arbitrary virtual character, through the
/// product formula `λ_t(Σ c_m · m) = Π (1 + m·t)^{c_m}` truncated at order
/// `max`. Negative coefficients invert factors as power series.
pub fn virtual_exterior_powers(c: &Character, max: usize) -> Vec<Character> {
    let rank = c.rank();
    let mut series: Vec<Character> = vec![Character::zero(rank); max + 1];
    series[0] = Character::one(rank);
    for (m, mult) in c.terms() {
        // multiply by (1 + m t)^mult: coefficient of t^j is C(mult, j) m^j
        let mut factor: Vec<Character> = Vec::with_capacity(max + 1);
        for j in 0..=max {
            let coeff = binomial(mult, j);
            if coeff.is_zero() {
                factor.push(Character::zero(rank));
            } else {
                factor.push(Character::monomial(m.pow(j as i64), coeff));
            }
        }
        let mut next: Vec<Character> = vec![Character::zero(rank); max + 1];
        for i in 0..=max {
            if series[i].is_zero() {
                continue;
            }
            for j in 0..=max - i {
                if factor[j].is_zero() {
                    continue;
                }
                next[i + j] = next[i + j].add(&series[i].mul(&factor[j]));
            }
        }
        series = next;
    }
    series
}

/// Elementary symmetric function `e_k` of the weight multiset of an honest
/// (all coefficients nonnegative) character. `λ⁰ = 1`, `λ¹ = id`.
pub fn exterior_power(c: &Character, k: usize) -> Result<Character> {
    if !c.is_effective() && !c.is_zero() {
        return Err(Error::VirtualCharacter(format!(
            "exterior power of a virtual character (use the series form): {c}"
        )));
    }
    Ok(virtual_exterior_powers(c, k).pop().expect("series has k+1 entries"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::character::Monomial;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(&int(5), 2), int(10));
        assert_eq!(binomial(&int(2), 3), int(0));
        assert_eq!(binomial(&int(-1), 3), int(-1));
        assert_eq!(binomial(&int(-2), 2), int(3));
        assert_eq!(binomial(&int(7), 0), int(1));
    }

    #[test]
    fn lambda_two_of_x_plus_xinv_is_one() {
        let c = Character::from_terms(1, &[(vec![1], 1), (vec![-1], 1)]);
        assert_eq!(exterior_power(&c, 2).unwrap(), Character::one(1));
    }

    #[test]
    fn lambda_of_symplectic_standard() {
        // e_k of {z1, z1^-1, z2, z2^-1}
        let u = Character::from_terms(2, &[(vec![1, 0], 1), (vec![-1, 0], 1), (vec![0, 1], 1), (vec![0, -1], 1)]);
        let l2 = exterior_power(&u, 2).unwrap();
        let expected = Character::from_terms(
            2,
            &[(vec![1, 1], 1), (vec![1, -1], 1), (vec![-1, 1], 1), (vec![-1, -1], 1), (vec![0, 0], 2)],
        );
        assert_eq!(l2, expected);
        // λ³(u) = u, λ⁴(u) = 1
        assert_eq!(exterior_power(&u, 3).unwrap(), u);
        assert_eq!(exterior_power(&u, 4).unwrap(), Character::one(2));
    }

    #[test]
    fn repeated_weights_use_multiplicities() {
        // λ²(2·x) = e_2 of {x, x} = x²
        let c = Character::monomial(Monomial(vec![1]), int(2));
        assert_eq!(exterior_power(&c, 2).unwrap(), Character::from_terms(1, &[(vec![2], 1)]));
    }

    #[test]
    fn multiplicativity_on_sums() {
        let a = Character::from_terms(2, &[(vec![1, 0], 1), (vec![0, 1], 2)]);
        let b = Character::from_terms(2, &[(vec![-1, 0], 1), (vec![1, 1], 1)]);
        let sum_powers = virtual_exterior_powers(&a.add(&b), 4);
        let pa = virtual_exterior_powers(&a, 4);
        let pb = virtual_exterior_powers(&b, 4);
        for (k, expect) in sum_powers.iter().enumerate() {
            let mut acc = Character::zero(2);
            for i in 0..=k {
                acc = acc.add(&pa[i].mul(&pb[k - i]));
            }
            assert_eq!(&acc, expect, "λ^{k} additivity");
        }
    }

    #[test]
    fn virtual_series_inverts_effective_one() {
        // λ_t(a - a) = 1: all positive powers vanish
        let a = Character::from_terms(1, &[(vec![1], 1), (vec![-1], 2)]);
        let powers = virtual_exterior_powers(&a.sub(&a.scale(&int(2))).add(&a), 3);
        assert_eq!(powers[0], Character::one(1));
        assert!(powers[1].is_zero());
        assert!(powers[2].is_zero());
        assert!(powers[3].is_zero());
    }

    #[test]
    fn exterior_power_rejects_virtual() {
        let v = Character::from_terms(1, &[(vec![1], 1), (vec![0], -1)]);
        assert!(matches!(exterior_power(&v, 2), Err(Error::VirtualCharacter(_))));
    }
}
