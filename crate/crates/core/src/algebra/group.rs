//! Finitely presented abelian groups `ℤ^g / (column lattice of R)` and the
//! homomorphisms between them.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::IntegerMatrix;
use super::snf::{column_basis, kernel_basis, reduce, smith_normal_form, SmithForm, Track};
use crate::error::{invalid, mismatch, Result};

struct GroupInner {
    generators: usize,
    relations: IntegerMatrix,
    smith: OnceLock<SmithForm>,
}

/// `ℤ^generators` modulo the lattice spanned by the columns of `relations`.
///
/// Cloning is cheap. Equality is equality of presentations; use
/// [`FgAbelianGroup::invariant_factors`] to compare up to isomorphism.
#[derive(Clone)]
pub struct FgAbelianGroup(Arc<GroupInner>);

impl FgAbelianGroup {
    pub fn new(generators: usize, relations: IntegerMatrix) -> Result<Self> {
        if relations.rows() != generators {
            return Err(invalid!(
                "relation matrix has {} rows but the group has {} generators",
                relations.rows(),
                generators
            ));
        }
        Ok(FgAbelianGroup(Arc::new(GroupInner { generators, relations, smith: OnceLock::new() })))
    }

    pub fn free(rank: usize) -> Self {
        Self::new(rank, IntegerMatrix::zeros(rank, 0)).expect("free presentation")
    }

    pub fn zero() -> Self {
        Self::free(0)
    }

    /// `ℤ/n` on one generator (`n = 0` gives ℤ).
    pub fn cyclic(n: i64) -> Self {
        Self::new(1, IntegerMatrix::from_rows(&[[n]], 1).expect("1x1")).expect("cyclic presentation")
    }

    /// Direct sum of cyclic groups `ℤ/n₁ ⊕ ℤ/n₂ ⊕ …`; a zero order stands for ℤ.
    pub fn from_orders(orders: &[i64]) -> Self {
        let mut rel = IntegerMatrix::zeros(orders.len(), 0);
        for (i, &n) in orders.iter().enumerate() {
            if n != 0 {
                let mut col = IntegerMatrix::zeros(orders.len(), 1);
                col[(i, 0)] = BigInt::from(n);
                rel = rel.hstack(&col).expect("same rows");
            }
        }
        Self::new(orders.len(), rel).expect("diagonal presentation")
    }

    pub fn generators(&self) -> usize {
        self.0.generators
    }

    pub fn relations(&self) -> &IntegerMatrix {
        &self.0.relations
    }

    fn smith(&self) -> &SmithForm {
        self.0.smith.get_or_init(|| smith_normal_form(&self.0.relations))
    }

    fn has_relations(&self) -> bool {
        self.0.relations.cols() > 0 && !self.0.relations.is_zero()
    }

    /// Whether the integer vector lies in the relation lattice, i.e. represents zero.
    pub fn represents_zero(&self, v: &[BigInt]) -> Result<bool> {
        if v.len() != self.generators() {
            return Err(mismatch!("vector of length {} in a group on {} generators", v.len(), self.generators()));
        }
        if v.iter().all(Zero::is_zero) {
            return Ok(true);
        }
        if !self.has_relations() {
            return Ok(false);
        }
        Ok(self.smith().solve(v)?.is_some())
    }

    /// Index of the first column of `m` that does not represent zero, if any.
    pub fn first_nonzero_column(&self, m: &IntegerMatrix) -> Result<Option<usize>> {
        if m.rows() != self.generators() {
            return Err(mismatch!("vectors of length {} in a group on {} generators", m.rows(), self.generators()));
        }
        let nonzero: Vec<usize> = (0..m.cols()).filter(|&j| (0..m.rows()).any(|i| !m[(i, j)].is_zero())).collect();
        if nonzero.is_empty() {
            return Ok(None);
        }
        if !self.has_relations() {
            return Ok(Some(nonzero[0]));
        }
        if self.smith().solve_all(&m.select_columns(&nonzero))?.is_some() {
            return Ok(None);
        }
        for &j in &nonzero {
            if !self.represents_zero(&m.column(j))? {
                return Ok(Some(j));
            }
        }
        Ok(None)
    }

    /// Coefficients expressing `v` in terms of the relation columns, if `v` represents zero.
    pub fn relation_coefficients(&self, v: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        self.smith().solve(v)
    }

    pub fn invariant_factors(&self) -> InvariantFactors {
        let diag = if self.has_relations() { self.smith().diagonal() } else { Vec::new() };
        let torsion: Vec<BigInt> = diag.iter().filter(|d| !d.is_one()).cloned().collect();
        InvariantFactors { rank: self.generators() - diag.len(), torsion }
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors().is_trivial()
    }

    /// Number of elements, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        let f = self.invariant_factors();
        if f.rank > 0 {
            return None;
        }
        Some(f.torsion.iter().fold(BigInt::one(), |acc, d| acc * d))
    }

    pub fn direct_sum(&self, other: &FgAbelianGroup) -> FgAbelianGroup {
        Self::new(self.generators() + other.generators(), self.relations().block_diag(other.relations()))
            .expect("block presentation")
    }

    /// Rewrites the group in invariant-factor form. Returns the normal form and
    /// mutually inverse isomorphisms `self → normal` and `normal → self`.
    pub fn normalize(&self) -> Result<(FgAbelianGroup, GroupMap, GroupMap)> {
        let g = self.generators();
        let s = smith_normal_form(self.relations());
        let diag = s.diagonal();
        let units = diag.iter().filter(|d| d.is_one()).count();
        let kept: Vec<usize> = (units..g).collect();
        let orders: Vec<BigInt> = kept.iter().map(|&i| diag.get(i).cloned().unwrap_or_default()).collect();
        let mut rel = IntegerMatrix::zeros(kept.len(), 0);
        for (k, d) in orders.iter().enumerate() {
            if !d.is_zero() {
                let mut col = IntegerMatrix::zeros(kept.len(), 1);
                col[(k, 0)] = d.clone();
                rel = rel.hstack(&col)?;
            }
        }
        let normal = FgAbelianGroup::new(kept.len(), rel)?;
        let forward = s.u.select_rows(&kept);
        let backward = s.u_inverse().select_columns(&kept);
        let to = GroupMap::new(self.clone(), normal.clone(), forward)?;
        let from = GroupMap::new(normal.clone(), self.clone(), backward)?;
        Ok((normal, to, from))
    }
}

impl PartialEq for FgAbelianGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.generators == other.0.generators && self.0.relations == other.0.relations)
    }
}

impl Eq for FgAbelianGroup {}

impl Hash for FgAbelianGroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.generators.hash(state);
        self.0.relations.hash(state);
    }
}

impl fmt::Debug for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} | {}>", self.generators(), self.relations())
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.invariant_factors())
    }
}

/// Free rank plus torsion coefficients `d₁ | d₂ | …`, all `> 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct InvariantFactors {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl InvariantFactors {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for InvariantFactors {
    /// `Z^r + Z/d₁ + …`, or `0` for the trivial group.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{}", r)),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{}", d)));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// A homomorphism of presented groups given by a `target.g × source.g` matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupMap {
    source: FgAbelianGroup,
    target: FgAbelianGroup,
    matrix: IntegerMatrix,
}

impl GroupMap {
    /// Validates the shape and that source relations land in the target relation lattice.
    pub fn new(source: FgAbelianGroup, target: FgAbelianGroup, matrix: IntegerMatrix) -> Result<Self> {
        if matrix.rows() != target.generators() || matrix.cols() != source.generators() {
            return Err(mismatch!(
                "map matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.generators(),
                source.generators()
            ));
        }
        if source.has_relations() {
            let images = matrix.mul(source.relations())?;
            if let Some(c) = target.first_nonzero_column(&images)? {
                return Err(invalid!("map is not well defined: source relation {} is not sent to zero", c));
            }
        }
        Ok(GroupMap { source, target, matrix })
    }

    pub fn identity(g: &FgAbelianGroup) -> Self {
        GroupMap { source: g.clone(), target: g.clone(), matrix: IntegerMatrix::identity(g.generators()) }
    }

    pub fn zero(source: &FgAbelianGroup, target: &FgAbelianGroup) -> Self {
        GroupMap {
            source: source.clone(),
            target: target.clone(),
            matrix: IntegerMatrix::zeros(target.generators(), source.generators()),
        }
    }

    pub fn source(&self) -> &FgAbelianGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbelianGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntegerMatrix {
        &self.matrix
    }

    /// `self ∘ first`
    pub fn after(&self, first: &GroupMap) -> Result<GroupMap> {
        if first.target != self.source {
            return Err(mismatch!("composing maps whose middle groups differ"));
        }
        Ok(GroupMap { source: first.source.clone(), target: self.target.clone(), matrix: self.matrix.mul(&first.matrix)? })
    }

    fn parallel(&self, other: &GroupMap) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(mismatch!("maps are not parallel"));
        }
        Ok(())
    }

    pub fn add(&self, other: &GroupMap) -> Result<GroupMap> {
        self.parallel(other)?;
        Ok(GroupMap { source: self.source.clone(), target: self.target.clone(), matrix: self.matrix.add(&other.matrix)? })
    }

    pub fn sub(&self, other: &GroupMap) -> Result<GroupMap> {
        self.parallel(other)?;
        Ok(GroupMap { source: self.source.clone(), target: self.target.clone(), matrix: self.matrix.sub(&other.matrix)? })
    }

    pub fn scale(&self, c: &BigInt) -> GroupMap {
        GroupMap { source: self.source.clone(), target: self.target.clone(), matrix: self.matrix.scale(c) }
    }

    /// Whether every generator is sent to zero in the target.
    pub fn is_zero(&self) -> Result<bool> {
        Ok(self.target.first_nonzero_column(&self.matrix)?.is_none())
    }

    /// Equality as homomorphisms (matrices may differ by relations).
    pub fn same_map(&self, other: &GroupMap) -> Result<bool> {
        self.parallel(other)?;
        self.sub(other)?.is_zero()
    }

    pub fn apply(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        self.matrix.mul_vec(v)
    }

    pub fn kernel(&self) -> Result<Subquotient> {
        let g = self.source.generators();
        let stacked = self.matrix.hstack(self.target.relations())?;
        let k = kernel_basis(&stacked);
        let top = k.block(0, 0, g, k.cols());
        Subquotient::new(g, &top, self.source.relations())
    }

    /// `target / (relations + image)`, presented on the target's generators.
    pub fn cokernel(&self) -> Result<(FgAbelianGroup, GroupMap)> {
        let rel = self.target.relations().hstack(&self.matrix)?;
        let q = FgAbelianGroup::new(self.target.generators(), rel)?;
        let proj = GroupMap::new(self.target.clone(), q.clone(), IntegerMatrix::identity(self.target.generators()))?;
        Ok((q, proj))
    }

    /// The image as a subquotient of the target's generator lattice.
    pub fn image(&self) -> Result<Subquotient> {
        let num = self.matrix.hstack(self.target.relations())?;
        Subquotient::new(self.target.generators(), &num, self.target.relations())
    }

    pub fn is_injective(&self) -> Result<bool> {
        Ok(self.kernel()?.group().is_trivial())
    }

    pub fn is_surjective(&self) -> Result<bool> {
        Ok(self.cokernel()?.0.is_trivial())
    }

    pub fn is_isomorphism(&self) -> Result<bool> {
        Ok(self.is_injective()? && self.is_surjective()?)
    }
}

impl fmt::Debug for GroupMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> {:?} by {}", self.source, self.target, self.matrix)
    }
}

/// A group of the form `N / D` where `D ⊆ N ⊆ ℤ^n` are lattices.
///
/// `N` is held through a basis, so elements of `N` have unique coordinates and
/// the quotient is presented on those coordinates.
#[derive(Clone, Debug)]
pub struct Subquotient {
    ambient: usize,
    basis: IntegerMatrix,
    solver: SmithForm,
    group: FgAbelianGroup,
}

impl Subquotient {
    /// `numerator` and `denominator` are generating sets (as columns) in `ℤ^ambient`;
    /// every denominator column must lie in the numerator lattice.
    pub fn new(ambient: usize, numerator: &IntegerMatrix, denominator: &IntegerMatrix) -> Result<Self> {
        if numerator.rows() != ambient || denominator.rows() != ambient {
            return Err(mismatch!("subquotient generators must have {} rows", ambient));
        }
        let basis = column_basis(numerator);
        let solver = reduce(&basis, Track { left: true, right: true });
        let k = basis.cols();
        let denominator = denominator.without_zero_columns();
        let rel = if k == 0 {
            if denominator.cols() > 0 {
                return Err(invalid!("denominator is outside the zero numerator lattice"));
            }
            IntegerMatrix::zeros(0, 0)
        } else {
            match solver.solve_all(&denominator)? {
                Some(y) => y,
                None => return Err(invalid!("a denominator generator is outside the numerator lattice")),
            }
        };
        let group = FgAbelianGroup::new(k, rel)?;
        Ok(Subquotient { ambient, basis, solver, group })
    }

    pub fn group(&self) -> &FgAbelianGroup {
        &self.group
    }

    /// Basis of the numerator lattice; column `j` represents generator `j` of the group.
    pub fn basis(&self) -> &IntegerMatrix {
        &self.basis
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Coordinates of `v` in the numerator basis, `None` if `v` is outside it.
    pub fn coordinates(&self, v: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        if v.len() != self.ambient {
            return Err(mismatch!("vector of length {} in ambient dimension {}", v.len(), self.ambient));
        }
        if self.basis.cols() == 0 {
            return Ok(if v.iter().all(Zero::is_zero) { Some(Vec::new()) } else { None });
        }
        self.solver.solve(v)
    }

    /// Coordinates of every column of `m`, each known to lie in the numerator lattice.
    pub fn coordinates_of_members(&self, m: &IntegerMatrix) -> Result<IntegerMatrix> {
        if m.rows() != self.ambient {
            return Err(mismatch!("vectors of length {} in ambient dimension {}", m.rows(), self.ambient));
        }
        if self.basis.cols() == 0 {
            if !m.is_zero() {
                return Err(invalid!("vector is outside the subgroup lattice"));
            }
            return Ok(IntegerMatrix::zeros(0, m.cols()));
        }
        self.solver.solve_all(m)?.ok_or_else(|| invalid!("vector is outside the subgroup lattice"))
    }

    /// Coordinates of a vector known to lie in the numerator lattice.
    pub fn coordinates_of_member(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        self.coordinates(v)?.ok_or_else(|| invalid!("vector is outside the subgroup lattice"))
    }

    /// The ambient vector with the given coordinates.
    pub fn lift(&self, coords: &[BigInt]) -> Result<Vec<BigInt>> {
        self.basis.mul_vec(coords)
    }

    /// Inclusion of generator coordinates into the ambient lattice, as a matrix.
    pub fn inclusion_matrix(&self) -> &IntegerMatrix {
        &self.basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::matrix::vector;

    #[test]
    fn cokernel_of_doubling() {
        let z = FgAbelianGroup::free(1);
        let f = GroupMap::new(z.clone(), z, IntegerMatrix::from_rows(&[[2]], 1).unwrap()).unwrap();
        let (q, _) = f.cokernel().unwrap();
        assert_eq!(q.to_string(), "Z/2");
    }

    #[test]
    fn kernel_of_sum() {
        let f = GroupMap::new(
            FgAbelianGroup::free(2),
            FgAbelianGroup::free(1),
            IntegerMatrix::from_rows(&[[1, 1]], 2).unwrap(),
        )
        .unwrap();
        let k = f.kernel().unwrap();
        assert_eq!(k.group().to_string(), "Z");
        let incl = k.inclusion_matrix();
        assert!(f.matrix().mul(incl).unwrap().is_zero());
    }

    #[test]
    fn ill_defined_map_rejected() {
        // Z/2 -> Z sending the generator to 1 is not well defined.
        let err = GroupMap::new(FgAbelianGroup::cyclic(2), FgAbelianGroup::free(1), IntegerMatrix::identity(1));
        assert!(err.is_err());
    }

    #[test]
    fn display_strings() {
        assert_eq!(FgAbelianGroup::zero().to_string(), "0");
        assert_eq!(FgAbelianGroup::from_orders(&[0, 0, 2]).to_string(), "Z^2 + Z/2");
        assert_eq!(FgAbelianGroup::from_orders(&[4, 2]).to_string(), "Z/2 + Z/4");
        assert_eq!(FgAbelianGroup::from_orders(&[2, 3]).to_string(), "Z/6");
    }

    #[test]
    fn normalize_round_trip() {
        let g = FgAbelianGroup::new(2, IntegerMatrix::from_rows(&[[2, 0], [2, 4]], 2).unwrap()).unwrap();
        let (n, to, from) = g.normalize().unwrap();
        assert_eq!(n.invariant_factors(), g.invariant_factors());
        assert!(from.after(&to).unwrap().same_map(&GroupMap::identity(&g)).unwrap());
        assert!(to.after(&from).unwrap().same_map(&GroupMap::identity(&n)).unwrap());
    }

    #[test]
    fn kernel_in_torsion_target() {
        // Z -> Z/4, 1 -> 2 has kernel 2Z, i.e. Z.
        let f = GroupMap::new(FgAbelianGroup::free(1), FgAbelianGroup::cyclic(4), IntegerMatrix::from_rows(&[[2]], 1).unwrap())
            .unwrap();
        let k = f.kernel().unwrap();
        assert_eq!(k.group().to_string(), "Z");
        // The generator is 2 up to sign.
        let g = k.lift(&vector(&[1])).unwrap();
        assert!(g == vector(&[2]) || g == vector(&[-2]));
        assert!(!f.is_injective().unwrap());
        assert!(!f.is_surjective().unwrap());
    }
}
