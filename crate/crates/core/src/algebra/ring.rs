//! Finitely presented commutative ℤ-algebras given by structure constants.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::group::{FgAbelianGroup, GroupMap};
use super::matrix::IntegerMatrix;
use crate::error::{invalid, mismatch, Result};

struct RingInner {
    underlying: FgAbelianGroup,
    /// `constants[i][j][k]`: coefficient of generator `k` in `e_i · e_j`.
    constants: Vec<Vec<Vec<BigInt>>>,
    unit: Vec<BigInt>,
}

/// A commutative ring whose additive group is finitely presented.
#[derive(Clone)]
pub struct RingSpec(Arc<RingInner>);

impl RingSpec {
    /// Validates that multiplication descends to the quotient and is
    /// associative, commutative and unital there.
    pub fn new(underlying: FgAbelianGroup, constants: Vec<Vec<Vec<BigInt>>>, unit: Vec<BigInt>) -> Result<Self> {
        let g = underlying.generators();
        if constants.len() != g || constants.iter().any(|a| a.len() != g || a.iter().any(|b| b.len() != g)) {
            return Err(invalid!("structure constants must form a {}x{}x{} tensor", g, g, g));
        }
        if unit.len() != g {
            return Err(invalid!("unit vector has length {}, expected {}", unit.len(), g));
        }
        let ring = RingSpec(Arc::new(RingInner { underlying, constants, unit }));
        ring.validate()?;
        Ok(ring)
    }

    fn validate(&self) -> Result<()> {
        let g = self.generators();
        let grp = self.underlying();
        let basis = |i: usize| -> Vec<BigInt> {
            let mut v = vec![BigInt::zero(); g];
            v[i] = BigInt::one();
            v
        };
        for (c, rel) in grp.relations().columns().enumerate() {
            for j in 0..g {
                let p = self.multiply(&rel, &basis(j))?;
                if !grp.represents_zero(&p)? {
                    return Err(invalid!("relator {} times generator {} is not a relation", c, j));
                }
            }
        }
        for i in 0..g {
            for j in 0..g {
                let ij = self.multiply(&basis(i), &basis(j))?;
                let ji = self.multiply(&basis(j), &basis(i))?;
                if !grp.represents_zero(&sub(&ij, &ji))? {
                    return Err(invalid!("multiplication is not commutative on generators ({}, {})", i, j));
                }
                for k in 0..g {
                    let left = self.multiply(&ij, &basis(k))?;
                    let jk = self.multiply(&basis(j), &basis(k))?;
                    let right = self.multiply(&basis(i), &jk)?;
                    if !grp.represents_zero(&sub(&left, &right))? {
                        return Err(invalid!("multiplication is not associative on the triple ({}, {}, {})", i, j, k));
                    }
                }
            }
            let ui = self.multiply(self.unit(), &basis(i))?;
            if !grp.represents_zero(&sub(&ui, &basis(i)))? {
                return Err(invalid!("unit does not act as identity on generator {}", i));
            }
        }
        Ok(())
    }

    /// ℤ itself.
    pub fn integers() -> Self {
        Self::cyclic(0)
    }

    /// `ℤ/n` (`n = 0` gives ℤ).
    pub fn cyclic(n: i64) -> Self {
        Self::new(FgAbelianGroup::cyclic(n), vec![vec![vec![BigInt::one()]]], vec![BigInt::one()]).expect("cyclic ring")
    }

    /// Componentwise product of rings.
    pub fn product(factors: &[RingSpec]) -> Result<Self> {
        let mut group = FgAbelianGroup::zero();
        let mut offsets = Vec::new();
        for f in factors {
            offsets.push(group.generators());
            group = group.direct_sum(f.underlying());
        }
        let g = group.generators();
        let mut constants = vec![vec![vec![BigInt::zero(); g]; g]; g];
        let mut unit = vec![BigInt::zero(); g];
        for (f, &o) in factors.iter().zip(&offsets) {
            let h = f.generators();
            for i in 0..h {
                for j in 0..h {
                    for k in 0..h {
                        constants[o + i][o + j][o + k] = f.constant(i, j, k).clone();
                    }
                }
                unit[o + i] = f.unit()[i].clone();
            }
        }
        Self::new(group, constants, unit)
    }

    /// `ℤ^n` with componentwise multiplication.
    pub fn integer_power(n: usize) -> Self {
        Self::product(&vec![Self::integers(); n]).expect("product of copies of Z")
    }

    /// `ℤ[x]/(x² + 1)` on the basis `{1, x}`.
    pub fn gaussian_integers() -> Self {
        let c = |v: [i64; 2]| vec![BigInt::from(v[0]), BigInt::from(v[1])];
        let constants = vec![vec![c([1, 0]), c([0, 1])], vec![c([0, 1]), c([-1, 0])]];
        Self::new(FgAbelianGroup::free(2), constants, c([1, 0])).expect("gaussian integers")
    }

    pub fn underlying(&self) -> &FgAbelianGroup {
        &self.0.underlying
    }

    pub fn generators(&self) -> usize {
        self.0.underlying.generators()
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &BigInt {
        &self.0.constants[i][j][k]
    }

    pub fn constants(&self) -> &Vec<Vec<Vec<BigInt>>> {
        &self.0.constants
    }

    pub fn unit(&self) -> &[BigInt] {
        &self.0.unit
    }

    /// Product of two elements in generator coordinates.
    pub fn multiply(&self, x: &[BigInt], y: &[BigInt]) -> Result<Vec<BigInt>> {
        let g = self.generators();
        if x.len() != g || y.len() != g {
            return Err(mismatch!("ring elements must have {} coordinates", g));
        }
        let mut out = vec![BigInt::zero(); g];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = &self.0.constants[i][j][k];
                    if !c.is_zero() {
                        *o += &s * c;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of multiplication by generator `i`: column `j` holds `e_i · e_j`.
    pub fn multiplication_matrix(&self, i: usize) -> IntegerMatrix {
        let g = self.generators();
        let mut m = IntegerMatrix::zeros(g, g);
        for j in 0..g {
            for k in 0..g {
                m[(k, j)] = self.0.constants[i][j][k].clone();
            }
        }
        m
    }

    /// Matrix of right multiplication by generator `l`: column `j` holds `e_j · e_l`.
    pub fn right_multiplication_matrix(&self, l: usize) -> IntegerMatrix {
        let g = self.generators();
        let mut m = IntegerMatrix::zeros(g, g);
        for j in 0..g {
            for k in 0..g {
                m[(k, j)] = self.0.constants[j][l][k].clone();
            }
        }
        m
    }

    /// Matrix of the multiplication `A ⊗_ℤ A → A` on generator pairs `(i, j) ↦ i·g + j`.
    pub fn product_matrix(&self) -> IntegerMatrix {
        let g = self.generators();
        let mut m = IntegerMatrix::zeros(g, g * g);
        for i in 0..g {
            for j in 0..g {
                for k in 0..g {
                    m[(k, i * g + j)] = self.0.constants[i][j][k].clone();
                }
            }
        }
        m
    }

    /// Whether `x` represents zero in the ring.
    pub fn is_zero_element(&self, x: &[BigInt]) -> Result<bool> {
        self.underlying().represents_zero(x)
    }
}

pub(crate) fn sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.underlying == other.0.underlying
                && self.0.constants == other.0.constants
                && self.0.unit == other.0.unit)
    }
}

impl Eq for RingSpec {}

impl Hash for RingSpec {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.underlying.hash(state);
        self.0.constants.hash(state);
        self.0.unit.hash(state);
    }
}

impl fmt::Debug for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({:?}, unit {:?})", self.0.underlying, self.0.unit)
    }
}

/// A unital ring homomorphism `B → A`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RingMap {
    source: RingSpec,
    target: RingSpec,
    map: GroupMap,
}

impl RingMap {
    pub fn new(source: RingSpec, target: RingSpec, matrix: IntegerMatrix) -> Result<Self> {
        let map = GroupMap::new(source.underlying().clone(), target.underlying().clone(), matrix)?;
        let rm = RingMap { source, target, map };
        rm.validate()?;
        Ok(rm)
    }

    fn validate(&self) -> Result<()> {
        let a = &self.target;
        let b = &self.source;
        let image_unit = self.map.apply(b.unit())?;
        if !a.is_zero_element(&sub(&image_unit, a.unit()))? {
            return Err(invalid!("ring map does not preserve the unit"));
        }
        let g = b.generators();
        for i in 0..g {
            for j in 0..g {
                let mut ei = vec![BigInt::zero(); g];
                ei[i] = BigInt::one();
                let mut ej = vec![BigInt::zero(); g];
                ej[j] = BigInt::one();
                let lhs = self.map.apply(&b.multiply(&ei, &ej)?)?;
                let rhs = a.multiply(&self.map.apply(&ei)?, &self.map.apply(&ej)?)?;
                if !a.is_zero_element(&sub(&lhs, &rhs))? {
                    return Err(invalid!("ring map does not preserve the product of generators ({}, {})", i, j));
                }
            }
        }
        Ok(())
    }

    pub fn identity(r: &RingSpec) -> Self {
        RingMap { source: r.clone(), target: r.clone(), map: GroupMap::identity(r.underlying()) }
    }

    /// The structure map `ℤ → A`, `1 ↦ unit`.
    pub fn from_integers(target: &RingSpec) -> Result<Self> {
        let m = IntegerMatrix::column_vector(target.unit());
        Self::new(RingSpec::integers(), target.clone(), m)
    }

    pub fn source(&self) -> &RingSpec {
        &self.source
    }

    pub fn target(&self) -> &RingSpec {
        &self.target
    }

    pub fn group_map(&self) -> &GroupMap {
        &self.map
    }

    pub fn matrix(&self) -> &IntegerMatrix {
        self.map.matrix()
    }

    /// `after ∘ self`
    pub fn then(&self, after: &RingMap) -> Result<RingMap> {
        if after.source != self.target {
            return Err(mismatch!("composing ring maps with different middle rings"));
        }
        Ok(RingMap { source: self.source.clone(), target: after.target.clone(), map: after.map.after(&self.map)? })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_rings_validate() {
        RingSpec::integers();
        RingSpec::cyclic(6);
        RingSpec::integer_power(3);
        RingSpec::gaussian_integers();
        RingSpec::product(&[RingSpec::cyclic(2), RingSpec::cyclic(2)]).unwrap();
    }

    fn tensor(g: usize, entries: &[((usize, usize), Vec<i64>)]) -> Vec<Vec<Vec<BigInt>>> {
        let mut c = vec![vec![vec![BigInt::zero(); g]; g]; g];
        for ((i, j), v) in entries {
            for (k, x) in v.iter().enumerate() {
                c[*i][*j][k] = BigInt::from(*x);
                c[*j][*i][k] = BigInt::from(*x);
            }
        }
        c
    }

    #[test]
    fn nonassociative_constants_rejected_with_triple() {
        // e0 is the unit, e1·e1 = e2, e1·e2 = 0, e2·e2 = e1: (e1 e1) e2 = e1 but e1 (e1 e2) = 0.
        let c = tensor(
            3,
            &[
                ((0, 0), vec![1, 0, 0]),
                ((0, 1), vec![0, 1, 0]),
                ((0, 2), vec![0, 0, 1]),
                ((1, 1), vec![0, 0, 1]),
                ((1, 2), vec![0, 0, 0]),
                ((2, 2), vec![0, 1, 0]),
            ],
        );
        let unit = vec![BigInt::one(), BigInt::zero(), BigInt::zero()];
        let err = RingSpec::new(FgAbelianGroup::free(3), c, unit).unwrap_err();
        assert!(err.to_string().contains("associative on the triple"), "{}", err);
    }

    #[test]
    fn multiplication_must_descend() {
        // <e0, e1 | 2 e0> with e0 the unit: the relator 2 e0 times e1 is 2 e1, not a relation.
        let c = tensor(2, &[((0, 0), vec![1, 0]), ((0, 1), vec![0, 1]), ((1, 1), vec![0, 1])]);
        let group = FgAbelianGroup::from_orders(&[2, 0]);
        let err = RingSpec::new(group, c, vec![BigInt::one(), BigInt::zero()]).unwrap_err();
        assert!(err.to_string().contains("relator"), "{}", err);
    }

    #[test]
    fn unit_must_act_as_identity() {
        let constants = vec![vec![vec![BigInt::from(3)]]];
        assert!(RingSpec::new(FgAbelianGroup::cyclic(0), constants, vec![BigInt::one()]).is_err());
    }

    #[test]
    fn unit_map_into_quotient() {
        let phi = RingMap::from_integers(&RingSpec::cyclic(2)).unwrap();
        assert_eq!(phi.matrix(), &IntegerMatrix::identity(1));
        // Z/2 -> Z is not a ring map (not even well defined).
        assert!(RingMap::new(RingSpec::cyclic(2), RingSpec::integers(), IntegerMatrix::identity(1)).is_err());
    }
}
