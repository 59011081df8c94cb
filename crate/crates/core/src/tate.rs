//! Tate cohomology of involutions on finitely generated abelian groups and
//! rings: `h⁺ = ker(id−t)/im(id+t)`, `h⁻ = ker(id+t)/im(id−t)`, the Künneth
//! law for tensor products, and the three-part decomposition of free
//! involutive modules.

use num_traits::{Signed, Zero};

use crate::exact::{preimage_lattice, subquotient};
use crate::{int, Error, FinAbGroup, GroupMap, Int, IntMatrix, Presentation, Result};

/// An abelian group presentation with an involution.
#[derive(Clone, Debug)]
pub struct InvolutiveModule {
    pres: Presentation,
    t: IntMatrix,
}

impl InvolutiveModule {
    /// Validates that `t` preserves the relations and squares to the
    /// identity on the quotient.
    pub fn new(pres: Presentation, t: IntMatrix) -> Result<Self> {
        let t_map = GroupMap::new(pres.clone(), pres.clone(), t.clone())
            .map_err(|e| Error::structural(format!("involution does not preserve relations: {e}")))?;
        let square = t_map.then(&t_map)?;
        let n = pres.gens();
        let id = IntMatrix::identity(n);
        let diff = square.matrix().sub(&id);
        let diff_map = GroupMap::new(pres.clone(), pres.clone(), diff)?;
        if !diff_map.is_zero_map() {
            return Err(Error::structural("t² is not the identity on the quotient"));
        }
        Ok(InvolutiveModule { pres, t })
    }

    pub fn free(t: IntMatrix) -> Result<Self> {
        assert!(t.is_square());
        InvolutiveModule::new(Presentation::free(t.rows()), t)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn t(&self) -> &IntMatrix {
        &self.t
    }

    pub fn rank(&self) -> usize {
        self.pres.gens()
    }

    pub fn group(&self) -> FinAbGroup {
        crate::exact::quotient_presentation(self.pres.gens(), self.pres.rels())
    }

    pub fn is_free_presentation(&self) -> bool {
        self.pres.rels().rows() == 0 || self.pres.rels().is_zero()
    }

    fn one_minus_t(&self) -> GroupMap {
        let m = IntMatrix::identity(self.rank()).sub(&self.t);
        GroupMap::new(self.pres.clone(), self.pres.clone(), m).expect("validated involution")
    }

    fn one_plus_t(&self) -> GroupMap {
        let m = IntMatrix::identity(self.rank()).add(&self.t);
        GroupMap::new(self.pres.clone(), self.pres.clone(), m).expect("validated involution")
    }

    /// Tensor product module with the involution `t_a ⊗ t_b`.
    pub fn tensor(&self, other: &Self) -> Self {
        let ga = self.pres.gens();
        let gb = other.pres.gens();
        let ra = self.pres.rels();
        let rb = other.pres.rels();
        // relators of A ⊗ B: (relator of A) ⊗ e_j and e_i ⊗ (relator of B)
        let left = ra.kronecker(&IntMatrix::identity(gb));
        let right = IntMatrix::identity(ga).kronecker(rb);
        let rels = left.vstack(&right);
        let pres = Presentation::new(ga * gb, rels);
        let t = self.t.kronecker(&other.t);
        InvolutiveModule::new(pres, t).expect("tensor of involutions is an involution")
    }
}

/// `h⁺ = ker(id−t) / im(id+t)`.
pub fn h_plus(m: &InvolutiveModule) -> FinAbGroup {
    subquotient(&m.one_minus_t(), &m.one_plus_t()).expect("(1−t)(1+t) = 1 − t² = 0")
}

/// `h⁻ = ker(id+t) / im(id−t)`.
pub fn h_minus(m: &InvolutiveModule) -> FinAbGroup {
    subquotient(&m.one_plus_t(), &m.one_minus_t()).expect("(1+t)(1−t) = 1 − t² = 0")
}

/// Both Tate groups.
pub fn tate_pair(m: &InvolutiveModule) -> (FinAbGroup, FinAbGroup) {
    (h_plus(m), h_minus(m))
}

/// A commutative ring with involution on a chosen generating basis:
/// `mult[i][j]` is the coordinate vector of `e_i · e_j`.
#[derive(Clone, Debug)]
pub struct InvolutiveRing {
    pub module: InvolutiveModule,
    pub mult: Vec<Vec<Vec<Int>>>,
    pub unit: Vec<Int>,
}

impl InvolutiveRing {
    pub fn new(module: InvolutiveModule, mult: Vec<Vec<Vec<Int>>>, unit: Vec<Int>) -> Result<Self> {
        let ring = InvolutiveRing { module, mult, unit };
        ring.validate()?;
        Ok(ring)
    }

    pub fn rank(&self) -> usize {
        self.module.rank()
    }

    pub fn mul_vectors(&self, x: &[Int], y: &[Int]) -> Vec<Int> {
        let n = self.rank();
        let mut out = vec![Int::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                for (k, c) in self.mult[i][j].iter().enumerate() {
                    out[k] += xi * yj * c;
                }
            }
        }
        out
    }

    fn is_zero_element(&self, x: &[Int]) -> bool {
        self.module.pres.element_is_zero(x)
    }

    fn validate(&self) -> Result<()> {
        let n = self.rank();
        if self.mult.len() != n
            || self.mult.iter().any(|row| row.len() != n)
            || self.mult.iter().flatten().any(|v| v.len() != n)
            || self.unit.len() != n
        {
            return Err(Error::structural("multiplication table shape mismatch"));
        }
        let basis: Vec<Vec<Int>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { int(1) } else { Int::zero() }).collect())
            .collect();
        for i in 0..n {
            // unit law
            let ui = self.mul_vectors(&self.unit, &basis[i]);
            let diff: Vec<Int> = ui.iter().zip(&basis[i]).map(|(a, b)| a - b).collect();
            if !self.is_zero_element(&diff) {
                return Err(Error::structural(format!("unit law fails on basis element {i}")));
            }
            for j in 0..n {
                // commutativity
                let diff: Vec<Int> = self.mult[i][j]
                    .iter()
                    .zip(&self.mult[j][i])
                    .map(|(a, b)| a - b)
                    .collect();
                if !self.is_zero_element(&diff) {
                    return Err(Error::structural(format!("commutativity fails at ({i},{j})")));
                }
                // involution is multiplicative
                let ti = self.module.t.mul_vec(&basis[i]);
                let tj = self.module.t.mul_vec(&basis[j]);
                let lhs = self.module.t.mul_vec(&self.mult[i][j]);
                let rhs = self.mul_vectors(&ti, &tj);
                let diff: Vec<Int> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
                if !self.is_zero_element(&diff) {
                    return Err(Error::structural(format!("t is not a ring map at ({i},{j})")));
                }
                for k in 0..n {
                    // associativity
                    let lhs = self.mul_vectors(&self.mult[i][j], &basis[k]);
                    let rhs = self.mul_vectors(&basis[i], &self.mult[j][k]);
                    let diff: Vec<Int> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
                    if !self.is_zero_element(&diff) {
                        return Err(Error::structural(format!(
                            "associativity fails at ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Tensor product ring with the induced involution.
    pub fn tensor(&self, other: &Self) -> Self {
        let module = self.module.tensor(&other.module);
        let na = self.rank();
        let nb = other.rank();
        let n = na * nb;
        let idx = |i: usize, j: usize| i * nb + j;
        let mut mult = vec![vec![vec![Int::zero(); n]; n]; n];
        for i1 in 0..na {
            for i2 in 0..nb {
                for j1 in 0..na {
                    for j2 in 0..nb {
                        let target = &mut mult[idx(i1, i2)][idx(j1, j2)];
                        for k1 in 0..na {
                            for k2 in 0..nb {
                                target[idx(k1, k2)] =
                                    &self.mult[i1][j1][k1] * &other.mult[i2][j2][k2];
                            }
                        }
                    }
                }
            }
        }
        let mut unit = vec![Int::zero(); n];
        for k1 in 0..na {
            for k2 in 0..nb {
                unit[idx(k1, k2)] = &self.unit[k1] * &other.unit[k2];
            }
        }
        InvolutiveRing { module, mult, unit }
    }
}

/// Künneth comparison for the Tate groups of a tensor product:
/// `h±(a⊗b)` against the matching sums of tensor products of `h±a`, `h±b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KunnethReport {
    pub product_plus: FinAbGroup,
    pub product_minus: FinAbGroup,
    pub kunneth_plus: FinAbGroup,
    pub kunneth_minus: FinAbGroup,
}

impl KunnethReport {
    pub fn holds(&self) -> bool {
        self.product_plus == self.kunneth_plus && self.product_minus == self.kunneth_minus
    }
}

/// Verifies the Künneth law `h⁺(a⊗b) ≅ h⁺a⊗h⁺b ⊕ h⁻a⊗h⁻b` (and the odd
/// analogue) for involutive rings with `a` free as an abelian group.
pub fn kunneth_check(a: &InvolutiveRing, b: &InvolutiveRing) -> Result<KunnethReport> {
    if !a.module.group().torsion().is_empty() {
        return Err(Error::structural(
            "Künneth comparison requires the first factor to be free as an abelian group",
        ));
    }
    let product = a.module.tensor(&b.module);
    let (pa, ma) = tate_pair(&a.module);
    let (pb, mb) = tate_pair(&b.module);
    Ok(KunnethReport {
        product_plus: h_plus(&product),
        product_minus: h_minus(&product),
        kunneth_plus: pa.tensor(&pb).direct_sum(&ma.tensor(&mb)),
        kunneth_minus: pa.tensor(&mb).direct_sum(&ma.tensor(&pb)),
    })
}

/// Multiplicities of the three indecomposable free involutive modules:
/// `n_plus` trivial summands `(Z, id)`, `n_minus` sign summands `(Z, −id)`,
/// and `n_swap` regular summands `(Z², swap)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bousfield {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_swap: usize,
}

/// Decomposes a free involutive module by saturated eigenlattice ranks:
/// the index of `L₊ ⊕ L₋` in the full lattice is `2^{n_swap}`, and the
/// result is cross-checked against trace and both Tate groups.
pub fn bousfield_decompose(m: &InvolutiveModule) -> Result<Bousfield> {
    if !m.is_free_presentation() {
        return Err(Error::unsupported(
            "three-part decomposition applies to free involutive modules only",
        ));
    }
    let n = m.rank();
    let id = IntMatrix::identity(n);
    let empty = IntMatrix::zeros(n, 0);
    let l_plus = preimage_lattice(&id.sub(&m.t), &empty);
    let l_minus = preimage_lattice(&id.add(&m.t), &empty);
    let r_plus = l_plus.cols();
    let r_minus = l_minus.cols();
    if r_plus + r_minus != n {
        return Err(Error::structural("eigenlattice ranks do not fill the module"));
    }
    let stacked = l_plus.hstack(&l_minus);
    let det = stacked.det().abs();
    let mut n_swap = 0usize;
    let mut d = det.clone();
    while (d.clone() % int(2)).is_zero() {
        d = d / int(2);
        n_swap += 1;
    }
    if d != int(1) {
        return Err(Error::structural(format!(
            "eigenlattice index {det} is not a power of two"
        )));
    }
    if n_swap > r_plus || n_swap > r_minus {
        return Err(Error::structural("swap count exceeds an eigenlattice rank"));
    }
    let out = Bousfield {
        n_plus: r_plus - n_swap,
        n_minus: r_minus - n_swap,
        n_swap,
    };
    // cross-check: trace and both Tate groups must match the reassembly
    let trace: Int = (0..n).fold(Int::zero(), |acc, i| acc + m.t[(i, i)].clone());
    if trace != int(out.n_plus as i64) - int(out.n_minus as i64) {
        return Err(Error::structural("trace does not match the decomposition"));
    }
    let (hp, hm) = tate_pair(m);
    if hp != FinAbGroup::elementary_2(out.n_plus) || hm != FinAbGroup::elementary_2(out.n_minus) {
        return Err(Error::structural("Tate groups do not match the decomposition"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Matrix;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        Matrix::from_rows(rows)
    }

    fn g(free: usize, torsion: &[i64]) -> FinAbGroup {
        FinAbGroup::new(free, torsion.iter().map(|d| int(*d)).collect()).unwrap()
    }

    #[test]
    fn tate_of_rank_one_modules() {
        let triv = InvolutiveModule::free(m(&[vec![1]])).unwrap();
        assert_eq!(tate_pair(&triv), (g(0, &[2]), g(0, &[])));
        let sign = InvolutiveModule::free(m(&[vec![-1]])).unwrap();
        assert_eq!(tate_pair(&sign), (g(0, &[]), g(0, &[2])));
    }

    #[test]
    fn tate_of_swap_vanishes() {
        let swap = InvolutiveModule::free(m(&[vec![0, 1], vec![1, 0]])).unwrap();
        assert_eq!(tate_pair(&swap), (g(0, &[]), g(0, &[])));
    }

    #[test]
    fn involution_validation() {
        // not an involution
        assert!(InvolutiveModule::free(m(&[vec![2]])).is_err());
        // t = −id on Z_4 is fine
        let z4 = g(0, &[4]).to_presentation();
        let t = m(&[vec![-1]]);
        let module = InvolutiveModule::new(z4, t).unwrap();
        // ker(1+t) = everything, im(1−t) = 2·Z_4
        assert_eq!(h_minus(&module), g(0, &[2]));
        assert_eq!(h_plus(&module), g(0, &[2]));
    }

    #[test]
    fn tensor_of_swaps_vanishes() {
        let swap = InvolutiveModule::free(m(&[vec![0, 1], vec![1, 0]])).unwrap();
        let product = swap.tensor(&swap);
        assert_eq!(product.rank(), 4);
        // h±(swap) = 0, so the Künneth sum is 0 on both sides; the direct
        // computation on the 4×4 involution agrees
        assert_eq!(tate_pair(&product), (g(0, &[]), g(0, &[])));
        let id1 = InvolutiveModule::free(m(&[vec![1]])).unwrap();
        let back = swap.tensor(&id1);
        assert_eq!(tate_pair(&back), (g(0, &[]), g(0, &[])));
    }

    #[test]
    fn kunneth_on_small_rings() {
        // Z with trivial involution
        let z = InvolutiveRing::new(
            InvolutiveModule::free(m(&[vec![1]])).unwrap(),
            vec![vec![vec![int(1)]]],
            vec![int(1)],
        )
        .unwrap();
        let report = kunneth_check(&z, &z).unwrap();
        assert!(report.holds());
        assert_eq!(report.product_plus, g(0, &[2]));
        assert_eq!(report.product_minus, g(0, &[]));
    }

    #[test]
    fn kunneth_with_swap_factor() {
        // Z × Z with the factor-swapping involution: basis of idempotents,
        // e_i e_j = δ_ij e_i, unit e_1 + e_2
        let swap_ring = InvolutiveRing::new(
            InvolutiveModule::free(m(&[vec![0, 1], vec![1, 0]])).unwrap(),
            vec![
                vec![vec![int(1), int(0)], vec![int(0), int(0)]],
                vec![vec![int(0), int(0)], vec![int(0), int(1)]],
            ],
            vec![int(1), int(1)],
        )
        .unwrap();
        let report = kunneth_check(&swap_ring, &swap_ring).unwrap();
        assert!(report.holds());
        assert!(report.product_plus.is_trivial());
        assert!(report.product_minus.is_trivial());
    }

    #[test]
    fn kunneth_requires_free_first_factor() {
        let z2_pres = g(0, &[2]).to_presentation();
        let torsion_ring = InvolutiveRing::new(
            InvolutiveModule::new(z2_pres, m(&[vec![1]])).unwrap(),
            vec![vec![vec![int(1)]]],
            vec![int(1)],
        )
        .unwrap();
        let z = InvolutiveRing::new(
            InvolutiveModule::free(m(&[vec![1]])).unwrap(),
            vec![vec![vec![int(1)]]],
            vec![int(1)],
        )
        .unwrap();
        assert!(kunneth_check(&torsion_ring, &z).is_err());
        assert!(kunneth_check(&z, &torsion_ring).is_ok());
    }

    #[test]
    fn bousfield_examples() {
        let diag = InvolutiveModule::free(m(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, -1]])).unwrap();
        assert_eq!(
            bousfield_decompose(&diag).unwrap(),
            Bousfield { n_plus: 2, n_minus: 1, n_swap: 0 }
        );
        let swap = InvolutiveModule::free(m(&[vec![0, 1], vec![1, 0]])).unwrap();
        assert_eq!(
            bousfield_decompose(&swap).unwrap(),
            Bousfield { n_plus: 0, n_minus: 0, n_swap: 1 }
        );
    }

    #[test]
    fn bousfield_of_shifted_swap() {
        // t(u) = y − u, t(y) = y: a swap in the basis {u, y − u}, so one
        // regular summand and nothing else
        let t = m(&[vec![-1, 0], vec![1, 1]]);
        let module = InvolutiveModule::free(t).unwrap();
        assert_eq!(
            bousfield_decompose(&module).unwrap(),
            Bousfield { n_plus: 0, n_minus: 0, n_swap: 1 }
        );
        assert_eq!(tate_pair(&module), (g(0, &[]), g(0, &[])));
    }

    #[test]
    fn bousfield_rejects_torsion() {
        let z2 = g(0, &[2]).to_presentation();
        let module = InvolutiveModule::new(z2, m(&[vec![1]])).unwrap();
        assert!(bousfield_decompose(&module).is_err());
    }
}
