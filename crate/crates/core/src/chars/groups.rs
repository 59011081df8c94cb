use super::character::{Character, Monomial};
use super::lambda::exterior_power;
use super::ring::{CharacterRingSpec, GroupData, Letter, NamedChar, QuotientModel, RepType};
use crate::int;

/// The circle group: one invertible variable, standard representation `x`.
pub fn circle() -> GroupData {
    GroupData {
        name: "S1".to_string(),
        spec: CharacterRingSpec::new(&["x"]),
        ring_generators: vec![NamedChar::new("x", Character::var(0, 1))],
        type_table: vec![("x".to_string(), RepType::Complex)],
        quotient_model: None,
    }
}

/// SU(n) on the torus `t_1, …, t_{n-1}` (the last coordinate is
/// `(t_1⋯t_{n-1})^{-1}`), generated by the exterior powers of the standard
/// representation `v`.
pub fn su(n: usize) -> GroupData {
    assert!(n >= 2);
    let rank = n - 1;
    let names: Vec<String> = (1..n).map(|i| format!("t{i}")).collect();
    let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let mut v = Character::zero(rank);
    for i in 0..rank {
        v = v.add(&Character::var(i, rank));
    }
    v = v.add(&Character::monomial(Monomial(vec![-1; rank]), int(1)));
    let mut ring_generators = Vec::new();
    let mut type_table = Vec::new();
    for k in 1..n {
        let name = if k == 1 { "v".to_string() } else { format!("l{k}v") };
        let ch = exterior_power(&v, k).expect("standard representation is effective");
        // λ^k v is dual to λ^{n-k} v; self-conjugate only in the middle,
        // where the type alternates with n/2 mod 2
        let ty = if 2 * k == n {
            if k % 2 == 0 { RepType::Real } else { RepType::Quaternionic }
        } else {
            RepType::Complex
        };
        type_table.push((name.clone(), ty));
        ring_generators.push(NamedChar::new(&name, ch));
    }
    GroupData {
        name: format!("SU({n})"),
        spec: CharacterRingSpec::new(&name_refs),
        ring_generators,
        type_table,
        quotient_model: None,
    }
}

fn sp2_s1_generators() -> (CharacterRingSpec, Vec<NamedChar>, Vec<(String, RepType)>) {
    let spec = CharacterRingSpec::new(&["z1", "z2", "x"]);
    let cu = Character::from_terms(3, &[(vec![1, 0, 0], 1), (vec![-1, 0, 0], 1), (vec![0, 1, 0], 1), (vec![0, -1, 0], 1)]);
    let l2 = exterior_power(&cu, 2).expect("effective");
    let x = Character::var(2, 3);
    let gens = vec![
        NamedChar::new("cu", cu),
        NamedChar::new("l2", l2),
        NamedChar::new("x", x),
    ];
    let types = vec![
        ("cu".to_string(), RepType::Quaternionic),
        ("l2".to_string(), RepType::Real),
        ("x".to_string(), RepType::Complex),
    ];
    (spec, gens, types)
}

/// `Sp(2) × S¹` on the torus `z1, z2, x`: generators are the symplectic
/// standard representation `cu`, its exterior square `l2`, and the circle
/// character `x`.
pub fn sp2_s1() -> GroupData {
    let (spec, ring_generators, type_table) = sp2_s1_generators();
    GroupData {
        name: "Sp(2)xS1".to_string(),
        spec,
        ring_generators,
        type_table,
        quotient_model: None,
    }
}

/// `Sp(2) ×_{Z_2} S¹`: the quotient of `Sp(2) × S¹` by the diagonal central
/// `Z_2`. Its character ring is the fixed subring of `R(Sp(2)×S¹)` under the
/// central sign action, presented by the letters
/// `a = cu², b = x², c = x^{-2}, d = cu·x, e = l2`
/// subject to `bc = 1` and `ab = d²`.
pub fn sp2_s1_quotient() -> GroupData {
    let (spec, ring_generators, type_table) = sp2_s1_generators();
    let letters = vec![
        Letter::new("a", vec![2, 0, 0]),
        Letter::new("b", vec![0, 0, 2]),
        Letter::new("c", vec![0, 0, -2]),
        Letter::new("d", vec![1, 0, 1]),
        Letter::new("e", vec![0, 1, 0]),
    ];
    let letter_relations = vec![
        // bc = 1
        Character::from_terms(5, &[(vec![0, 1, 1, 0, 0], 1), (vec![0, 0, 0, 0, 0], -1)]),
        // ab = d²
        Character::from_terms(5, &[(vec![1, 1, 0, 0, 0], 1), (vec![0, 0, 0, 2, 0], -1)]),
    ];
    GroupData {
        name: "Sp(2)x_{Z2}S1".to_string(),
        spec,
        ring_generators,
        type_table,
        quotient_model: Some(QuotientModel { action: vec![-1, -1, -1], letters, letter_relations }),
    }
}

/// Torus-level images of the SU(5) variables under the embedding of
/// `Sp(2) ×_{Z_2} S¹` in SU(5): the standard 5-dimensional representation
/// restricts to (symplectic standard)⊗x plus the character x^{-4}, so
/// `t1, …, t4` go to `z1·x, z1^{-1}·x, z2·x, z2^{-1}·x`.
pub fn restriction_to_sp2_s1() -> Vec<Character> {
    vec![
        Character::from_terms(3, &[(vec![1, 0, 1], 1)]),
        Character::from_terms(3, &[(vec![-1, 0, 1], 1)]),
        Character::from_terms(3, &[(vec![0, 1, 1], 1)]),
        Character::from_terms(3, &[(vec![0, -1, 1], 1)]),
    ]
}

/// Spin(7) with doubled torus variables `z_i` (so the spin weights
/// `(±1/2, ±1/2, ±1/2)` become honest exponents): vector representation of
/// dimension 7 and spin representation of dimension 8, both real.
pub fn spin7() -> GroupData {
    let spec = CharacterRingSpec::with_doubling(&["z1", "z2", "z3"]);
    let mut vec7 = Character::one(3);
    for i in 0..3 {
        let mut e = vec![0; 3];
        e[i] = 2;
        vec7 = vec7.add(&Character::from_terms(3, &[(e.clone(), 1)]));
        e[i] = -2;
        vec7 = vec7.add(&Character::from_terms(3, &[(e, 1)]));
    }
    let mut spin8 = Character::zero(3);
    for s1 in [-1i64, 1] {
        for s2 in [-1i64, 1] {
            for s3 in [-1i64, 1] {
                spin8 = spin8.add(&Character::from_terms(3, &[(vec![s1, s2, s3], 1)]));
            }
        }
    }
    GroupData {
        name: "Spin(7)".to_string(),
        spec,
        ring_generators: vec![NamedChar::new("vec", vec7), NamedChar::new("spin", spin8)],
        type_table: vec![("vec".to_string(), RepType::Real), ("spin".to_string(), RepType::Real)],
        quotient_model: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::restriction_to_sp2_s1;
    use crate::Result;

    #[test]
    fn constructors_validate() -> Result<()> {
        circle().validate()?;
        su(2).validate()?;
        su(4).validate()?;
        su(5).validate()?;
        sp2_s1().validate()?;
        sp2_s1_quotient().validate()?;
        spin7().validate()?;
        Ok(())
    }

    #[test]
    fn su_generator_dimensions() {
        let g = su(5);
        let dims: Vec<i64> = [1usize, 2, 3, 4]
            .iter()
            .map(|k| {
                let name = if *k == 1 { "v".to_string() } else { format!("l{k}v") };
                let c = &g.generator(&name).unwrap().char;
                i64::try_from(&c.dimension()).unwrap()
            })
            .collect();
        assert_eq!(dims, vec![5, 10, 10, 5]);
    }

    #[test]
    fn su_conjugates_pair_up() {
        let g = su(5);
        let v = &g.generator("v").unwrap().char;
        let l4 = &g.generator("l4v").unwrap().char;
        assert_eq!(v.conjugate(), *l4);
        let l2 = &g.generator("l2v").unwrap().char;
        let l3 = &g.generator("l3v").unwrap().char;
        assert_eq!(l2.conjugate(), *l3);
    }

    #[test]
    fn letters_satisfy_their_relations_in_ambient() {
        let h = sp2_s1_quotient();
        let q = h.quotient_model.as_ref().unwrap();
        // image of a letter monomial in the ambient torus ring
        let ambient_char = |exps: &[i64]| -> Character {
            let mut out = Character::one(3);
            for (g, e) in h.ring_generators.iter().zip(exps) {
                out = out.mul(&g.char.pow_i64(*e).unwrap());
            }
            out
        };
        let letter_images: Vec<Character> =
            q.letters.iter().map(|l| ambient_char(&l.ambient)).collect();
        for rel in &q.letter_relations {
            let image = rel.substitute(&letter_images).unwrap();
            assert!(image.is_zero(), "letter relation fails in the ambient ring");
        }
    }

    #[test]
    fn central_signs_are_homogeneous_on_generators() {
        let h = sp2_s1_quotient();
        let q = h.quotient_model.as_ref().unwrap();
        let signs: Vec<i8> = h
            .ring_generators
            .iter()
            .map(|g| crate::chars::generator_sign(&g.char, &q.action).unwrap())
            .collect();
        assert_eq!(signs, vec![-1, 1, -1]);
    }

    #[test]
    fn restriction_images_match_closed_forms() {
        // the standard SU(5) restriction to Sp(2)×S¹ used by the case study
        let g = su(5);
        let images = restriction_to_sp2_s1();
        let v = g.generator("v").unwrap().char.substitute(&images).unwrap();
        // (cu)x + x^{-4}
        let expected = Character::from_terms(
            3,
            &[
                (vec![1, 0, 1], 1),
                (vec![-1, 0, 1], 1),
                (vec![0, 1, 1], 1),
                (vec![0, -1, 1], 1),
                (vec![0, 0, -4], 1),
            ],
        );
        assert_eq!(v, expected);
    }
}
