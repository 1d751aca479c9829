//! Modules over finitely presented commutative rings, module maps, base
//! change, restriction of scalars, (co)kernels and Hom groups.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::group::{FgAbelianGroup, GroupMap, Subquotient};
use super::matrix::IntegerMatrix;
use super::ring::{RingMap, RingSpec};
use super::snf::kernel_basis;
use crate::error::{invalid, mismatch, Error, Result};

struct ModuleInner {
    ring: RingSpec,
    underlying: FgAbelianGroup,
    /// Action of each ring generator as an endomorphism matrix of the underlying group.
    actions: Vec<IntegerMatrix>,
}

/// A module over a [`RingSpec`]: a presented abelian group with one action
/// endomorphism per additive generator of the ring.
#[derive(Clone)]
pub struct ModuleOverRing(Arc<ModuleInner>);

impl ModuleOverRing {
    pub fn new(ring: RingSpec, underlying: FgAbelianGroup, actions: Vec<IntegerMatrix>) -> Result<Self> {
        let m = Self::new_unchecked(ring, underlying, actions);
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(ring: RingSpec, underlying: FgAbelianGroup, actions: Vec<IntegerMatrix>) -> Self {
        ModuleOverRing(Arc::new(ModuleInner { ring, underlying, actions }))
    }

    fn validate(&self) -> Result<()> {
        let ring = self.ring();
        let grp = self.underlying();
        if self.0.actions.len() != ring.generators() {
            return Err(invalid!(
                "module has {} action matrices but the ring has {} generators",
                self.0.actions.len(),
                ring.generators()
            ));
        }
        let mut acts = Vec::with_capacity(self.0.actions.len());
        for (k, a) in self.0.actions.iter().enumerate() {
            let m = GroupMap::new(grp.clone(), grp.clone(), a.clone())
                .map_err(|e| invalid!("action of ring generator {}: {}", k, e))?;
            acts.push(m);
        }
        for (c, rel) in ring.underlying().relations().columns().enumerate() {
            if !self.element_action(&rel)?.is_zero()? {
                return Err(invalid!("ring relator {} does not act as zero", c));
            }
        }
        if !self.element_action(ring.unit())?.same_map(&GroupMap::identity(grp))? {
            return Err(invalid!("the unit does not act as the identity"));
        }
        let r = ring.generators();
        for i in 0..r {
            for j in 0..r {
                let composite = acts[i].after(&acts[j])?;
                let mut prod = vec![BigInt::zero(); r];
                for (k, p) in prod.iter_mut().enumerate() {
                    *p = ring.constant(i, j, k).clone();
                }
                if !composite.same_map(&self.element_action(&prod)?)? {
                    return Err(invalid!("actions of generators {} and {} violate the multiplication law", i, j));
                }
                if i < j && !composite.same_map(&acts[j].after(&acts[i])?)? {
                    return Err(invalid!("actions of generators {} and {} do not commute", i, j));
                }
            }
        }
        Ok(())
    }

    /// The ring acting on itself.
    pub fn regular(ring: &RingSpec) -> Self {
        let actions = (0..ring.generators()).map(|l| ring.right_multiplication_matrix(l)).collect();
        Self::new(ring.clone(), ring.underlying().clone(), actions).expect("regular module")
    }

    /// An abelian group viewed as a ℤ-module.
    pub fn abelian(group: FgAbelianGroup) -> Self {
        let n = group.generators();
        Self::new_unchecked(RingSpec::integers(), group, vec![IntegerMatrix::identity(n)])
    }

    /// A module over `ring` on which every generator acts through the given
    /// ring element's image in `ℤ/n`-style scalar form: only valid when the
    /// ring acts by scalars, e.g. `ring = ℤ` or `ℤ/n`.
    pub fn scalar(ring: &RingSpec, group: FgAbelianGroup) -> Result<Self> {
        if ring.generators() != 1 || !ring.unit()[0].is_one() {
            return Err(invalid!("scalar modules need a ring generated by its unit"));
        }
        let n = group.generators();
        Self::new(ring.clone(), group, vec![IntegerMatrix::identity(n)])
    }

    pub fn zero(ring: &RingSpec) -> Self {
        let actions = vec![IntegerMatrix::zeros(0, 0); ring.generators()];
        Self::new_unchecked(ring.clone(), FgAbelianGroup::zero(), actions)
    }

    pub fn ring(&self) -> &RingSpec {
        &self.0.ring
    }

    pub fn underlying(&self) -> &FgAbelianGroup {
        &self.0.underlying
    }

    pub fn generators(&self) -> usize {
        self.0.underlying.generators()
    }

    pub fn actions(&self) -> &[IntegerMatrix] {
        &self.0.actions
    }

    pub fn action(&self, k: usize) -> GroupMap {
        GroupMap::new(self.underlying().clone(), self.underlying().clone(), self.0.actions[k].clone())
            .expect("validated action")
    }

    /// Action of a ring element given in generator coordinates.
    pub fn element_action(&self, x: &[BigInt]) -> Result<GroupMap> {
        if x.len() != self.0.actions.len() {
            return Err(mismatch!("ring element with {} coordinates", x.len()));
        }
        let g = self.generators();
        let mut m = IntegerMatrix::zeros(g, g);
        for (c, a) in x.iter().zip(&self.0.actions) {
            if !c.is_zero() {
                m = m.add(&a.scale(c))?;
            }
        }
        GroupMap::new(self.underlying().clone(), self.underlying().clone(), m)
    }

    pub fn direct_sum(&self, other: &ModuleOverRing) -> Result<Self> {
        same_ring(self, other)?;
        let actions = self.0.actions.iter().zip(&other.0.actions).map(|(a, b)| a.block_diag(b)).collect();
        Ok(Self::new_unchecked(self.ring().clone(), self.underlying().direct_sum(other.underlying()), actions))
    }

    pub fn is_trivial(&self) -> bool {
        self.underlying().is_trivial()
    }

    /// Whether every ring generator acts on both modules by the same integer scalar.
    fn scalar_action(&self, k: usize) -> Option<BigInt> {
        let a = &self.0.actions[k];
        let n = a.rows();
        if n == 0 {
            return Some(BigInt::zero());
        }
        let lambda = a[(0, 0)].clone();
        for i in 0..n {
            for j in 0..n {
                let expected = if i == j { &lambda } else { &BigInt::zero() };
                if &a[(i, j)] != expected {
                    return None;
                }
            }
        }
        Some(lambda)
    }
}

fn same_ring(a: &ModuleOverRing, b: &ModuleOverRing) -> Result<()> {
    if a.ring() != b.ring() {
        return Err(Error::RingMismatch("modules are over different rings".into()));
    }
    Ok(())
}

impl PartialEq for ModuleOverRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.underlying == other.0.underlying
                && self.0.actions == other.0.actions
                && self.0.ring == other.0.ring)
    }
}

impl Eq for ModuleOverRing {}

impl Hash for ModuleOverRing {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.underlying.hash(state);
        self.0.actions.hash(state);
    }
}

impl fmt::Debug for ModuleOverRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module{:?}", self.underlying())
    }
}

impl fmt::Display for ModuleOverRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.underlying())
    }
}

/// A ring-linear map of modules over the same ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModuleMap {
    source: ModuleOverRing,
    target: ModuleOverRing,
    map: GroupMap,
}

impl ModuleMap {
    pub fn new(source: ModuleOverRing, target: ModuleOverRing, matrix: IntegerMatrix) -> Result<Self> {
        same_ring(&source, &target)?;
        let map = GroupMap::new(source.underlying().clone(), target.underlying().clone(), matrix)?;
        let f = ModuleMap { source, target, map };
        for k in 0..f.source.ring().generators() {
            let lhs = f.map.after(&f.source.action(k))?;
            let rhs = f.target.action(k).after(&f.map)?;
            if !lhs.same_map(&rhs)? {
                return Err(invalid!("map does not commute with the action of ring generator {}", k));
            }
        }
        Ok(f)
    }

    /// Skips linearity checking; callers guarantee it by construction.
    pub(crate) fn new_trusted(source: ModuleOverRing, target: ModuleOverRing, matrix: IntegerMatrix) -> Result<Self> {
        same_ring(&source, &target)?;
        let map = GroupMap::new(source.underlying().clone(), target.underlying().clone(), matrix)?;
        Ok(ModuleMap { source, target, map })
    }

    pub fn identity(m: &ModuleOverRing) -> Self {
        ModuleMap { source: m.clone(), target: m.clone(), map: GroupMap::identity(m.underlying()) }
    }

    pub fn zero(source: &ModuleOverRing, target: &ModuleOverRing) -> Self {
        ModuleMap {
            source: source.clone(),
            target: target.clone(),
            map: GroupMap::zero(source.underlying(), target.underlying()),
        }
    }

    pub fn source(&self) -> &ModuleOverRing {
        &self.source
    }

    pub fn target(&self) -> &ModuleOverRing {
        &self.target
    }

    pub fn group_map(&self) -> &GroupMap {
        &self.map
    }

    pub fn matrix(&self) -> &IntegerMatrix {
        self.map.matrix()
    }

    /// `self ∘ first`
    pub fn after(&self, first: &ModuleMap) -> Result<ModuleMap> {
        if first.target != self.source {
            return Err(mismatch!("composing module maps whose middle modules differ"));
        }
        Ok(ModuleMap { source: first.source.clone(), target: self.target.clone(), map: self.map.after(&first.map)? })
    }

    pub fn add(&self, other: &ModuleMap) -> Result<ModuleMap> {
        self.parallel(other)?;
        Ok(ModuleMap { source: self.source.clone(), target: self.target.clone(), map: self.map.add(&other.map)? })
    }

    pub fn sub(&self, other: &ModuleMap) -> Result<ModuleMap> {
        self.parallel(other)?;
        Ok(ModuleMap { source: self.source.clone(), target: self.target.clone(), map: self.map.sub(&other.map)? })
    }

    pub fn scale(&self, c: &BigInt) -> ModuleMap {
        ModuleMap { source: self.source.clone(), target: self.target.clone(), map: self.map.scale(c) }
    }

    fn parallel(&self, other: &ModuleMap) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(mismatch!("module maps are not parallel"));
        }
        Ok(())
    }

    pub fn is_zero(&self) -> Result<bool> {
        self.map.is_zero()
    }

    pub fn same_map(&self, other: &ModuleMap) -> Result<bool> {
        self.parallel(other)?;
        self.map.same_map(&other.map)
    }

    pub fn is_injective(&self) -> Result<bool> {
        self.map.is_injective()
    }

    pub fn is_surjective(&self) -> Result<bool> {
        self.map.is_surjective()
    }

    pub fn is_isomorphism(&self) -> Result<bool> {
        self.map.is_isomorphism()
    }

    /// Kernel with its induced module structure and inclusion.
    pub fn kernel(&self) -> Result<(ModuleOverRing, ModuleMap)> {
        let sq = self.map.kernel()?;
        let module = induced_submodule(&self.source, &sq)?;
        let incl = ModuleMap::new_trusted(module.clone(), self.source.clone(), sq.inclusion_matrix().clone())?;
        Ok((module, incl))
    }

    /// Cokernel presented on the target's generators, with the projection.
    pub fn cokernel(&self) -> Result<(ModuleOverRing, ModuleMap)> {
        let (q, _) = self.map.cokernel()?;
        let module = ModuleOverRing::new_unchecked(self.target.ring().clone(), q, self.target.actions().to_vec());
        let proj = ModuleMap::new_trusted(
            self.target.clone(),
            module.clone(),
            IntegerMatrix::identity(self.target.generators()),
        )?;
        Ok((module, proj))
    }
}

impl fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleMap({:?})", self.map)
    }
}

/// Module structure on a subquotient `N/D` of a module's generator lattice
/// where `D` is the module's own relation lattice and `N` is stable under the action.
fn induced_submodule(ambient: &ModuleOverRing, sq: &Subquotient) -> Result<ModuleOverRing> {
    let basis = sq.inclusion_matrix();
    let mut actions = Vec::with_capacity(ambient.actions().len());
    for a in ambient.actions() {
        let moved = a.mul(basis)?;
        let mut cols = Vec::with_capacity(moved.cols());
        for col in moved.columns() {
            cols.push(sq.coordinates_of_member(&col)?);
        }
        actions.push(IntegerMatrix::from_columns(basis.cols(), &cols)?);
    }
    Ok(ModuleOverRing::new_unchecked(ambient.ring().clone(), sq.group().clone(), actions))
}

/// Equalizer of a parallel pair: `ker(f − g)` with its inclusion.
pub fn equalizer(f: &ModuleMap, g: &ModuleMap) -> Result<(ModuleOverRing, ModuleMap)> {
    f.sub(g)?.kernel()
}

/// Coequalizer of a parallel pair: `coker(f − g)` with its projection.
pub fn coequalizer(f: &ModuleMap, g: &ModuleMap) -> Result<(ModuleOverRing, ModuleMap)> {
    f.sub(g)?.cokernel()
}

/// Restriction of scalars along `φ: B → A`.
pub fn restrict(n: &ModuleOverRing, phi: &RingMap) -> Result<ModuleOverRing> {
    if n.ring() != phi.target() {
        return Err(Error::RingMismatch("restriction needs a module over the target ring".into()));
    }
    let b = phi.source();
    let mut actions = Vec::with_capacity(b.generators());
    for k in 0..b.generators() {
        let image = phi.matrix().column(k);
        actions.push(n.element_action(&image)?.matrix().clone());
    }
    Ok(ModuleOverRing::new_unchecked(b.clone(), n.underlying().clone(), actions))
}

/// Restriction of a module map along `φ`.
pub fn restrict_map(f: &ModuleMap, phi: &RingMap) -> Result<ModuleMap> {
    ModuleMap::new_trusted(restrict(f.source(), phi)?, restrict(f.target(), phi)?, f.matrix().clone())
}

/// `M ⊗_B A` for `φ: B → A`, presented on generators `m_i ⊗ a_j` (index `i·|A| + j`).
///
/// Relations: those of `M` tensored with each `a_j`, those of `A` tensored
/// with each `m_i`, and the balancing relations `(m_i·b_k) ⊗ a_j = m_i ⊗ φ(b_k)a_j`.
pub fn base_change(m: &ModuleOverRing, phi: &RingMap) -> Result<ModuleOverRing> {
    if m.ring() != phi.source() {
        return Err(Error::RingMismatch("base change needs a module over the source ring".into()));
    }
    let a = phi.target();
    let gm = m.generators();
    let ga = a.generators();
    let n = gm * ga;
    let mut cols: Vec<Vec<BigInt>> = Vec::new();
    for rel in m.underlying().relations().columns() {
        for j in 0..ga {
            let mut v = vec![BigInt::zero(); n];
            for i in 0..gm {
                v[i * ga + j] = rel[i].clone();
            }
            push_nonzero(&mut cols, v);
        }
    }
    for i in 0..gm {
        for rel in a.underlying().relations().columns() {
            let mut v = vec![BigInt::zero(); n];
            for j in 0..ga {
                v[i * ga + j] = rel[j].clone();
            }
            push_nonzero(&mut cols, v);
        }
    }
    for k in 0..phi.source().generators() {
        let act = &m.actions()[k];
        let phik = a.multiply_matrix_by_element(&phi.matrix().column(k));
        for i in 0..gm {
            for j in 0..ga {
                let mut v = vec![BigInt::zero(); n];
                for i2 in 0..gm {
                    let c = &act[(i2, i)];
                    if !c.is_zero() {
                        v[i2 * ga + j] += c;
                    }
                }
                for j2 in 0..ga {
                    let c = &phik[(j2, j)];
                    if !c.is_zero() {
                        v[i * ga + j2] -= c;
                    }
                }
                push_nonzero(&mut cols, v);
            }
        }
    }
    let group = FgAbelianGroup::new(n, IntegerMatrix::from_columns(n, &cols)?)?;
    let id = IntegerMatrix::identity(gm);
    // Right multiplication on the second factor respects every relation family above.
    let actions = (0..ga).map(|l| id.kron(&a.right_multiplication_matrix(l))).collect();
    Ok(ModuleOverRing::new_unchecked(a.clone(), group, actions))
}

/// Base change of a module map: `f ⊗_B A`.
pub fn base_change_map(f: &ModuleMap, phi: &RingMap) -> Result<ModuleMap> {
    let s = base_change(f.source(), phi)?;
    let t = base_change(f.target(), phi)?;
    ModuleMap::new_trusted(s, t, f.matrix().kron(&IntegerMatrix::identity(phi.target().generators())))
}

fn push_nonzero(cols: &mut Vec<Vec<BigInt>>, v: Vec<BigInt>) {
    if v.iter().any(|x| !x.is_zero()) {
        cols.push(v);
    }
}

impl RingSpec {
    /// Matrix of multiplication by an arbitrary element `x`: column `j` holds `x · e_j`.
    pub fn multiply_matrix_by_element(&self, x: &[BigInt]) -> IntegerMatrix {
        let g = self.generators();
        let mut m = IntegerMatrix::zeros(g, g);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..g {
                for k in 0..g {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        m[(k, j)] += xi * c;
                    }
                }
            }
        }
        m
    }
}

/// The group of ring-linear maps `M → N` modulo maps that vanish in `N`.
#[derive(Clone, Debug)]
pub struct HomGroup {
    source: ModuleOverRing,
    target: ModuleOverRing,
    lattice: Subquotient,
}

/// `Hom_R(M, N)` as a presented abelian group with representative maps for its generators.
pub fn hom_group(m: &ModuleOverRing, n: &ModuleOverRing) -> Result<HomGroup> {
    same_ring(m, n)?;
    let gm = m.generators();
    let gn = n.generators();
    let nvars = gm * gn;
    let var = |r: usize, c: usize| r * gm + c;
    let rn = n.underlying().relations().clone();
    let qn = rn.cols();
    let m_rel = m.underlying().relations().clone();

    let checked_actions: Vec<usize> = (0..m.ring().generators())
        .filter(|&k| match (m.scalar_action(k), n.scalar_action(k)) {
            (Some(a), Some(b)) => a != b,
            _ => true,
        })
        .collect();

    let blocks = m_rel.cols() + checked_actions.len() * gm;
    let aux = blocks * qn;
    let mut system = IntegerMatrix::zeros(blocks * gn, nvars + aux);
    let mut block = 0;
    // X ρ ∈ rel(N) for every relation ρ of M.
    for rho in m_rel.columns() {
        for r in 0..gn {
            let row = block * gn + r;
            for (c, x) in rho.iter().enumerate() {
                if !x.is_zero() {
                    system[(row, var(r, c))] += x;
                }
            }
            for q in 0..qn {
                system[(row, nvars + block * qn + q)] = -rn[(r, q)].clone();
            }
        }
        block += 1;
    }
    // X A_k − A_k X ∈ rel(N), column by column.
    for &k in &checked_actions {
        let am = &m.actions()[k];
        let an = &n.actions()[k];
        for c in 0..gm {
            for r in 0..gn {
                let row = block * gn + r;
                for c2 in 0..gm {
                    let x = &am[(c2, c)];
                    if !x.is_zero() {
                        system[(row, var(r, c2))] += x;
                    }
                }
                for r2 in 0..gn {
                    let x = &an[(r, r2)];
                    if !x.is_zero() {
                        system[(row, var(r2, c))] -= x;
                    }
                }
                for q in 0..qn {
                    system[(row, nvars + block * qn + q)] = -rn[(r, q)].clone();
                }
            }
            block += 1;
        }
    }
    let k = kernel_basis(&system);
    let solutions = k.block(0, 0, nvars, k.cols());

    let mut null_cols = Vec::with_capacity(qn * gm);
    for q in 0..qn {
        for c in 0..gm {
            let mut v = vec![BigInt::zero(); nvars];
            for r in 0..gn {
                v[var(r, c)] = rn[(r, q)].clone();
            }
            null_cols.push(v);
        }
    }
    let nulls = IntegerMatrix::from_columns(nvars, &null_cols)?;
    let lattice = Subquotient::new(nvars, &solutions, &nulls)?;
    Ok(HomGroup { source: m.clone(), target: n.clone(), lattice })
}

impl HomGroup {
    pub fn group(&self) -> &FgAbelianGroup {
        self.lattice.group()
    }

    pub fn source(&self) -> &ModuleOverRing {
        &self.source
    }

    pub fn target(&self) -> &ModuleOverRing {
        &self.target
    }

    pub fn rank(&self) -> usize {
        self.lattice.group().generators()
    }

    /// The module map with the given coordinates.
    pub fn map_from_coordinates(&self, coords: &[BigInt]) -> Result<ModuleMap> {
        let v = self.lattice.lift(coords)?;
        let m = IntegerMatrix::from_entries(self.target.generators(), self.source.generators(), v)?;
        ModuleMap::new_trusted(self.source.clone(), self.target.clone(), m)
    }

    /// Representative of generator `i` of the Hom group.
    pub fn representative(&self, i: usize) -> Result<ModuleMap> {
        let mut e = vec![BigInt::zero(); self.rank()];
        e[i] = BigInt::one();
        self.map_from_coordinates(&e)
    }

    pub fn representatives(&self) -> Result<Vec<ModuleMap>> {
        (0..self.rank()).map(|i| self.representative(i)).collect()
    }

    /// Coordinates of a module map `source → target` in this group.
    pub fn coordinates(&self, f: &ModuleMap) -> Result<Vec<BigInt>> {
        if f.source() != &self.source || f.target() != &self.target {
            return Err(mismatch!("map does not belong to this Hom group"));
        }
        self.coordinates_of_matrix(f.matrix())
    }

    pub(crate) fn coordinates_of_matrix(&self, m: &IntegerMatrix) -> Result<Vec<BigInt>> {
        self.lattice
            .coordinates(m.entries())?
            .ok_or_else(|| invalid!("matrix is not a ring-linear map between these modules"))
    }

    /// The homomorphism `Hom(M, N) → Hom(M, N')` given by post-composition with `g: N → N'`.
    pub fn post_compose(&self, g: &ModuleMap, into: &HomGroup) -> Result<GroupMap> {
        if g.source() != &self.target || g.target() != &into.target || into.source != self.source {
            return Err(mismatch!("post-composition between mismatched Hom groups"));
        }
        // vec(gX) = (g ⊗ I) vec(X) for row-major vec.
        let on_vec = g.matrix().kron(&IntegerMatrix::identity(self.source.generators()));
        self.induced(&on_vec, into)
    }

    /// The homomorphism `Hom(M, N) → Hom(M', N)` given by pre-composition with `g: M' → M`.
    pub fn pre_compose(&self, g: &ModuleMap, into: &HomGroup) -> Result<GroupMap> {
        if g.target() != &self.source || g.source() != &into.source || into.target != self.target {
            return Err(mismatch!("pre-composition between mismatched Hom groups"));
        }
        // vec(Xg) = (I ⊗ gᵀ) vec(X).
        let on_vec = IntegerMatrix::identity(self.target.generators()).kron(&g.matrix().transpose());
        self.induced(&on_vec, into)
    }

    fn induced(&self, on_vec: &IntegerMatrix, into: &HomGroup) -> Result<GroupMap> {
        let images = on_vec.mul(self.lattice.basis())?;
        let m = into.lattice.coordinates_of_members(&images)?;
        GroupMap::new(self.group().clone(), into.group().clone(), m)
    }
}

/// Searches `Hom(M, N)` for a bijective module map, trying coordinate vectors
/// with entries in `[-bound, bound]`, at most `limit` candidates.
pub fn find_isomorphism(m: &ModuleOverRing, n: &ModuleOverRing, bound: i64, limit: usize) -> Result<Option<ModuleMap>> {
    if m.underlying().invariant_factors() != n.underlying().invariant_factors() {
        return Ok(None);
    }
    let hom = hom_group(m, n)?;
    let r = hom.rank();
    let width = (2 * bound + 1) as usize;
    let total = width.checked_pow(r as u32).unwrap_or(usize::MAX).min(limit);
    for idx in 0..total {
        let mut x = idx;
        let mut coords = Vec::with_capacity(r);
        for _ in 0..r {
            // Enumerate 0, 1, -1, 2, -2, ... so small maps come first.
            let d = (x % width) as i64;
            x /= width;
            let v = if d % 2 == 1 { (d + 1) / 2 } else { -(d / 2) };
            coords.push(BigInt::from(v));
        }
        let f = hom.map_from_coordinates(&coords)?;
        if f.is_isomorphism()? {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> RingSpec {
        RingSpec::integers()
    }

    #[test]
    fn base_change_identity() {
        let m = ModuleOverRing::regular(&z());
        let bc = base_change(&m, &RingMap::identity(&z())).unwrap();
        assert_eq!(bc.underlying().to_string(), "Z");
    }

    #[test]
    fn base_change_kills_coprime_torsion() {
        let m = ModuleOverRing::scalar(&z(), FgAbelianGroup::cyclic(2)).unwrap();
        let phi = RingMap::from_integers(&RingSpec::cyclic(3)).unwrap();
        assert!(base_change(&m, &phi).unwrap().is_trivial());
    }

    #[test]
    fn base_change_to_product() {
        let phi = RingMap::from_integers(&RingSpec::integer_power(2)).unwrap();
        let bc = base_change(&ModuleOverRing::regular(&z()), &phi).unwrap();
        assert_eq!(bc.underlying().to_string(), "Z^2");
        // e_0 acts as projection to the first coordinate.
        assert_eq!(bc.actions()[0], IntegerMatrix::from_rows(&[[1, 0], [0, 0]], 2).unwrap());
    }

    #[test]
    fn hom_free_source() {
        let m = ModuleOverRing::scalar(&z(), FgAbelianGroup::from_orders(&[0, 4])).unwrap();
        let h = hom_group(&ModuleOverRing::regular(&z()), &m).unwrap();
        assert_eq!(h.group().to_string(), "Z + Z/4");
    }

    #[test]
    fn hom_z2_to_z4() {
        let a = ModuleOverRing::scalar(&z(), FgAbelianGroup::cyclic(2)).unwrap();
        let b = ModuleOverRing::scalar(&z(), FgAbelianGroup::cyclic(4)).unwrap();
        assert_eq!(hom_group(&a, &b).unwrap().group().to_string(), "Z/2");
    }

    #[test]
    fn hom_over_product_ring() {
        let a = ModuleOverRing::regular(&RingSpec::integer_power(2));
        assert_eq!(hom_group(&a, &a).unwrap().group().to_string(), "Z^2");
    }

    #[test]
    fn non_linear_map_rejected() {
        let a = ModuleOverRing::regular(&RingSpec::integer_power(2));
        let swap = IntegerMatrix::from_rows(&[[0, 1], [1, 0]], 2).unwrap();
        assert!(ModuleMap::new(a.clone(), a, swap).is_err());
    }

    #[test]
    fn equalizer_of_identity_pair() {
        let m = ModuleOverRing::scalar(&z(), FgAbelianGroup::from_orders(&[0, 2])).unwrap();
        let id = ModuleMap::identity(&m);
        let (e, incl) = equalizer(&id, &id).unwrap();
        assert_eq!(e.underlying().invariant_factors(), m.underlying().invariant_factors());
        assert!(incl.is_isomorphism().unwrap());
    }

    #[test]
    fn finds_isomorphism_of_permuted_presentation() {
        let a = ModuleOverRing::scalar(&z(), FgAbelianGroup::from_orders(&[0, 2])).unwrap();
        let b = ModuleOverRing::scalar(&z(), FgAbelianGroup::from_orders(&[2, 0])).unwrap();
        let f = find_isomorphism(&a, &b, 1, 1000).unwrap().expect("isomorphic");
        assert!(f.is_isomorphism().unwrap());
    }
}
