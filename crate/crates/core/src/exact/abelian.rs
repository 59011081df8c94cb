use std::fmt;


use super::mat::{Matrix, Scalar};
use super::snf::{lattice_contains, smith_normal_form};
use crate::{Error, Result};

/// Finitely generated abelian group in canonical form:
/// `Z^free_rank ⊕ Z_d1 ⊕ ... ⊕ Z_dk` with `d1 | d2 | ... | dk`, every
/// `di >= 2`. Two groups are isomorphic iff the structs are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinAbGroup<T> {
    free_rank: usize,
    torsion: Vec<T>,
}

impl<T: Scalar> FinAbGroup<T> {
    pub fn new(free_rank: usize, torsion: Vec<T>) -> Result<Self> {
        for w in torsion.windows(2) {
            if !(w[1].clone() % w[0].clone()).is_zero() {
                return Err(Error::structural(format!(
                    "torsion coefficients must form a divisibility chain, got {} before {}",
                    w[0], w[1]
                )));
            }
        }
        if torsion.iter().any(|d| *d < T::from(2)) {
            return Err(Error::structural("torsion coefficients must be >= 2"));
        }
        Ok(FinAbGroup { free_rank, torsion })
    }

    pub fn trivial() -> Self {
        FinAbGroup { free_rank: 0, torsion: vec![] }
    }

    pub fn free(rank: usize) -> Self {
        FinAbGroup { free_rank: rank, torsion: vec![] }
    }

    pub fn cyclic(d: i64) -> Self {
        assert!(d >= 2);
        FinAbGroup { free_rank: 0, torsion: vec![T::from(d)] }
    }

    /// `(Z_2)^k`.
    pub fn elementary_2(k: usize) -> Self {
        FinAbGroup { free_rank: 0, torsion: vec![T::from(2); k] }
    }

    /// Canonical form of a direct sum of cyclic groups of the given orders
    /// (orders may be arbitrary positive integers; 1s are dropped).
    pub fn from_cyclic_orders(free_rank: usize, orders: &[T]) -> Self {
        let n = orders.len();
        let mut rels = Matrix::zeros(n, n);
        for (i, d) in orders.iter().enumerate() {
            rels[(i, i)] = d.clone();
        }
        let mut g = quotient_presentation(n, &rels);
        g.free_rank += free_rank;
        g
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[T] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> T {
        self.torsion.iter().fold(T::one(), |acc, d| acc * d.clone())
    }

    /// Total number of canonical generators.
    pub fn num_generators(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    /// Does every element have order dividing 2?
    pub fn is_elementary_2(&self) -> bool {
        self.free_rank == 0 && self.torsion.iter().all(|d| *d == T::from(2))
    }

    /// `G ⊕ H` in canonical form.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut orders = self.torsion.clone();
        orders.extend(other.torsion.iter().cloned());
        FinAbGroup::from_cyclic_orders(self.free_rank + other.free_rank, &orders)
    }

    /// `G ⊗ H` in canonical form: `Z⊗Z = Z`, `Z⊗Z_d = Z_d`,
    /// `Z_d⊗Z_e = Z_gcd(d,e)`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut orders: Vec<T> = Vec::new();
        for _ in 0..self.free_rank {
            orders.extend(other.torsion.iter().cloned());
        }
        for _ in 0..other.free_rank {
            orders.extend(self.torsion.iter().cloned());
        }
        for d in &self.torsion {
            for e in &other.torsion {
                orders.push(d.gcd(e));
            }
        }
        FinAbGroup::from_cyclic_orders(self.free_rank * other.free_rank, &orders)
    }

    /// Presentation with one generator per canonical summand.
    pub fn to_presentation(&self) -> Presentation<T> {
        let gens = self.num_generators();
        let mut rels = Matrix::zeros(self.torsion.len(), gens);
        for (i, d) in self.torsion.iter().enumerate() {
            rels[(i, i)] = d.clone();
        }
        Presentation::new(gens, rels)
    }
}

impl<T: Scalar> fmt::Display for FinAbGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = &self.torsion[i];
            let mut count = 1;
            while i + count < self.torsion.len() && self.torsion[i + count] == *d {
                count += 1;
            }
            if count == 1 {
                parts.push(format!("Z_{d}"));
            } else {
                parts.push(format!("Z_{d}^{count}"));
            }
            i += count;
        }
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

impl<T: fmt::Debug> fmt::Debug for FinAbGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z^{:?} ⊕ Z/{:?}", self.free_rank, self.torsion)
    }
}

/// Abelian group presented as `Z^gens / (row span of rels)`.
/// Relator rows are vectors of length `gens`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Presentation<T> {
    gens: usize,
    rels: Matrix<T>,
}

impl<T: Scalar> Presentation<T> {
    pub fn new(gens: usize, rels: Matrix<T>) -> Self {
        assert_eq!(rels.cols(), gens, "relator width must equal generator count");
        Presentation { gens, rels }
    }

    pub fn free(gens: usize) -> Self {
        Presentation { gens, rels: Matrix::zeros(0, gens) }
    }

    pub fn gens(&self) -> usize {
        self.gens
    }

    pub fn rels(&self) -> &Matrix<T> {
        &self.rels
    }

    /// Relator lattice as columns: transpose of the relator rows.
    pub fn relator_columns(&self) -> Matrix<T> {
        self.rels.transpose()
    }

    /// Is the element (given in generator coordinates) zero in the group?
    pub fn element_is_zero(&self, x: &[T]) -> bool {
        assert_eq!(x.len(), self.gens);
        lattice_contains(&self.relator_columns(), x)
    }
}

/// Canonical structure of a presented group, with the change of basis that
/// produced it. Built once, then reused to reduce arbitrary elements to
/// canonical coordinates and to lift canonical generators back.
#[derive(Clone, Debug)]
pub struct QuotientStructure<T> {
    pres: Presentation<T>,
    group: FinAbGroup<T>,
    /// SNF row transform of the relator-column matrix: element coordinates
    /// map by `y = u * x`.
    u: Matrix<T>,
    u_inv: Matrix<T>,
    slots: Vec<Slot<T>>,
    /// Indices into `slots` for the canonical coordinates, torsion first
    /// (ascending divisibility), then free.
    coord_slots: Vec<usize>,
}

/// Role of one SNF coordinate of the ambient `Z^gens`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Slot<T> {
    /// Diagonal entry 1: the coordinate dies in the quotient.
    Trivial,
    /// Diagonal entry d >= 2: coordinate lives in `Z_d`.
    Torsion(T),
    /// Diagonal entry 0: coordinate lives in a free `Z` summand.
    Free,
}

impl<T: Scalar> QuotientStructure<T> {
    pub fn new(pres: Presentation<T>) -> Self {
        let cols = pres.relator_columns();
        let snf = smith_normal_form(&cols);
        let g = pres.gens();
        let mut slots = Vec::with_capacity(g);
        let diag = snf.diagonal();
        for i in 0..g {
            let d = diag.get(i).cloned().unwrap_or_else(T::zero);
            if d.is_zero() {
                slots.push(Slot::Free);
            } else if d.is_one() {
                slots.push(Slot::Trivial);
            } else {
                slots.push(Slot::Torsion(d));
            }
        }
        let mut torsion_slots: Vec<usize> = Vec::new();
        let mut free_slots: Vec<usize> = Vec::new();
        let mut torsion: Vec<T> = Vec::new();
        for (i, s) in slots.iter().enumerate() {
            match s {
                Slot::Torsion(d) => {
                    torsion_slots.push(i);
                    torsion.push(d.clone());
                }
                Slot::Free => free_slots.push(i),
                Slot::Trivial => {}
            }
        }
        let group = FinAbGroup::new(free_slots.len(), torsion)
            .expect("SNF diagonal always yields a divisibility chain");
        let mut coord_slots = torsion_slots;
        coord_slots.extend(free_slots);
        QuotientStructure { pres, group, u: snf.u, u_inv: snf.u_inv, slots, coord_slots }
    }

    pub fn presentation(&self) -> &Presentation<T> {
        &self.pres
    }

    pub fn group(&self) -> &FinAbGroup<T> {
        &self.group
    }

    /// Canonical coordinates of an element given in generator coordinates:
    /// torsion coordinates reduced into `[0, d)`, free coordinates exact.
    pub fn reduce(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.pres.gens());
        let y = self.u.mul_vec(x);
        self.coord_slots
            .iter()
            .map(|&i| match &self.slots[i] {
                Slot::Torsion(d) => y[i].mod_floor(d),
                Slot::Free => y[i].clone(),
                Slot::Trivial => unreachable!("trivial slots carry no coordinate"),
            })
            .collect()
    }

    /// Is the element zero in the quotient?
    pub fn is_zero(&self, x: &[T]) -> bool {
        self.reduce(x).iter().all(|c| c.is_zero())
    }

    /// Generator-coordinate representative of the i-th canonical generator
    /// (ordering: torsion generators first, then free).
    pub fn representative(&self, i: usize) -> Vec<T> {
        let slot = self.coord_slots[i];
        self.u_inv.col(slot)
    }

    /// Presentation on the canonical generators.
    pub fn canonical_presentation(&self) -> Presentation<T> {
        self.group.to_presentation()
    }

    /// Isomorphism from the original presentation onto the canonical one.
    pub fn projection(&self) -> GroupMap<T> {
        let n = self.coord_slots.len();
        let matrix = Matrix::from_fn(n, self.pres.gens(), |i, j| {
            self.u[(self.coord_slots[i], j)].clone()
        });
        GroupMap::new(self.pres.clone(), self.canonical_presentation(), matrix)
            .expect("canonical projection is a well-defined map")
    }
}

/// Canonical form of `Z^gens / (row span of rels)`.
pub fn quotient_presentation<T: Scalar>(gens: usize, rels: &Matrix<T>) -> FinAbGroup<T> {
    QuotientStructure::new(Presentation::new(gens, rels.clone())).group().clone()
}

/// Generators (as columns) of the lattice `{x : a*x ∈ colspan(b)}`.
///
/// Computed as the projection to the x-block of the kernel of `[a | b]`;
/// projections of a lattice basis generate the projected lattice.
pub fn preimage_lattice<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    assert_eq!(a.rows(), b.rows(), "preimage_lattice needs matching codomains");
    let stacked = a.hstack(b);
    let snf = smith_normal_form(&stacked);
    let rank = snf.rank();
    let total = stacked.cols();
    Matrix::from_fn(a.cols(), total - rank, |i, j| snf.v[(i, rank + j)].clone())
}

/// Homomorphism of presented abelian groups, given on ambient generators:
/// the element `x` (a column in source coordinates) maps to `matrix * x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupMap<T> {
    source: Presentation<T>,
    target: Presentation<T>,
    matrix: Matrix<T>,
}

impl<T: Scalar> GroupMap<T> {
    /// Validates well-definedness: every source relator must map into the
    /// target relator lattice.
    pub fn new(source: Presentation<T>, target: Presentation<T>, matrix: Matrix<T>) -> Result<Self> {
        if matrix.rows() != target.gens() || matrix.cols() != source.gens() {
            return Err(Error::structural(format!(
                "map matrix must be {}x{}, got {}x{}",
                target.gens(),
                source.gens(),
                matrix.rows(),
                matrix.cols()
            )));
        }
        let t_cols = target.relator_columns();
        for r in 0..source.rels().rows() {
            let rel = source.rels().row(r);
            let image = matrix.mul_vec(&rel);
            if !lattice_contains(&t_cols, &image) {
                return Err(Error::structural(format!(
                    "relator {r} does not map into the target relator lattice"
                )));
            }
        }
        Ok(GroupMap { source, target, matrix })
    }

    pub fn identity(pres: Presentation<T>) -> Self {
        let n = pres.gens();
        GroupMap { source: pres.clone(), target: pres, matrix: Matrix::identity(n) }
    }

    pub fn zero(source: Presentation<T>, target: Presentation<T>) -> Self {
        let matrix = Matrix::zeros(target.gens(), source.gens());
        GroupMap { source, target, matrix }
    }

    pub fn source(&self) -> &Presentation<T> {
        &self.source
    }

    pub fn target(&self) -> &Presentation<T> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn apply(&self, x: &[T]) -> Vec<T> {
        self.matrix.mul_vec(x)
    }

    /// `other ∘ self`; sources and targets must match on the nose.
    pub fn then(&self, other: &Self) -> Result<Self> {
        if self.target != other.source {
            return Err(Error::structural("composition mismatch: target != source"));
        }
        Ok(GroupMap {
            source: self.source.clone(),
            target: other.target.clone(),
            matrix: other.matrix.mul(&self.matrix),
        })
    }

    /// Is this the zero homomorphism (every generator image a relator)?
    pub fn is_zero_map(&self) -> bool {
        let t_cols = self.target.relator_columns();
        (0..self.matrix.cols()).all(|j| lattice_contains(&t_cols, &self.matrix.col(j)))
    }

    /// Lattice of source-coordinate vectors mapping to zero in the target,
    /// returned as generator columns. Contains the source relator lattice.
    fn kernel_lattice(&self) -> Matrix<T> {
        preimage_lattice(&self.matrix, &self.target.relator_columns())
    }

    /// Kernel of the induced map, in canonical form.
    pub fn kernel(&self) -> FinAbGroup<T> {
        let k = self.kernel_lattice();
        let rels = preimage_lattice(&k, &self.source.relator_columns());
        quotient_presentation(k.cols(), &rels.transpose())
    }

    /// Image of the induced map, in canonical form (isomorphic to
    /// source/kernel).
    pub fn image(&self) -> FinAbGroup<T> {
        let k = self.kernel_lattice();
        quotient_presentation(self.source.gens(), &k.transpose())
    }

    /// Cokernel of the induced map, in canonical form.
    pub fn cokernel(&self) -> FinAbGroup<T> {
        let rels = self.target.rels().vstack(&self.matrix.transpose());
        quotient_presentation(self.target.gens(), &rels)
    }

    /// Canonical form of the source group.
    pub fn source_group(&self) -> FinAbGroup<T> {
        quotient_presentation(self.source.gens(), self.source.rels())
    }

    /// Canonical form of the target group.
    pub fn target_group(&self) -> FinAbGroup<T> {
        quotient_presentation(self.target.gens(), self.target.rels())
    }

    /// Is the induced map an isomorphism?
    pub fn is_isomorphism(&self) -> bool {
        self.kernel().is_trivial() && self.cokernel().is_trivial()
    }
}

/// `ker(outgoing) / im(incoming)` at the shared middle group.
///
/// Requires `outgoing ∘ incoming = 0`; the middle presentations must match.
pub fn subquotient<T: Scalar>(outgoing: &GroupMap<T>, incoming: &GroupMap<T>) -> Result<FinAbGroup<T>> {
    if incoming.target != outgoing.source {
        return Err(Error::structural("subquotient: maps do not share the middle group"));
    }
    let composite = incoming.then(outgoing)?;
    if !composite.is_zero_map() {
        return Err(Error::structural("subquotient: composite is not zero"));
    }
    let middle = &outgoing.source;
    let k = outgoing.kernel_lattice();
    let denominator = incoming.matrix.hstack(&middle.relator_columns());
    let rels = preimage_lattice(&k, &denominator);
    Ok(quotient_presentation(k.cols(), &rels.transpose()))
}
