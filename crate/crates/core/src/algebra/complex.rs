//! Bounded chain complexes of modules, their homology and Hom complexes.
//!
//! Boundaries lower degree by one. Cochain complexes are stored with cochain
//! degree `s` at chain degree `-s`.

use num_bigint::BigInt;

use super::group::{FgAbelianGroup, Subquotient};
use super::matrix::IntegerMatrix;
use super::module::{hom_group, HomGroup, ModuleMap, ModuleOverRing};
use super::ring::RingSpec;
use crate::error::{invalid, mismatch, Error, Result};

#[derive(Clone, Debug)]
pub struct ChainComplex {
    ring: RingSpec,
    lo: i64,
    objects: Vec<ModuleOverRing>,
    /// `boundaries[k]` goes from degree `lo + k + 1` to `lo + k`.
    boundaries: Vec<ModuleMap>,
}

impl ChainComplex {
    pub fn new(ring: RingSpec, lo: i64, objects: Vec<ModuleOverRing>, boundaries: Vec<ModuleMap>) -> Result<Self> {
        if objects.is_empty() {
            return Err(invalid!("a chain complex needs at least one degree"));
        }
        if boundaries.len() + 1 != objects.len() {
            return Err(mismatch!("{} objects need {} boundaries, got {}", objects.len(), objects.len() - 1, boundaries.len()));
        }
        for (k, obj) in objects.iter().enumerate() {
            if obj.ring() != &ring {
                return Err(Error::RingMismatch(format!("object in degree {} is over another ring", lo + k as i64)));
            }
        }
        for (k, d) in boundaries.iter().enumerate() {
            if d.source() != &objects[k + 1] || d.target() != &objects[k] {
                return Err(mismatch!("boundary out of degree {} has the wrong endpoints", lo + k as i64 + 1));
            }
        }
        for k in 1..boundaries.len() {
            if !boundaries[k - 1].after(&boundaries[k])?.is_zero()? {
                return Err(invalid!("boundaries out of degrees {} and {} compose to a nonzero map", lo + k as i64 + 1, lo + k as i64));
            }
        }
        Ok(ChainComplex { ring, lo, objects, boundaries })
    }

    /// `m` placed in a single degree.
    pub fn concentrated(m: &ModuleOverRing, degree: i64) -> Self {
        ChainComplex { ring: m.ring().clone(), lo: degree, objects: vec![m.clone()], boundaries: Vec::new() }
    }

    /// The two-term complex `f: source → target` with the source in `degree`.
    pub fn from_map(f: &ModuleMap, degree: i64) -> Self {
        ChainComplex {
            ring: f.source().ring().clone(),
            lo: degree - 1,
            objects: vec![f.target().clone(), f.source().clone()],
            boundaries: vec![f.clone()],
        }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.objects.len() as i64 - 1
    }

    pub fn objects(&self) -> &[ModuleOverRing] {
        &self.objects
    }

    /// Object in degree `t`, or `None` outside the range.
    pub fn object(&self, t: i64) -> Option<&ModuleOverRing> {
        if t < self.lo || t > self.hi() {
            return None;
        }
        Some(&self.objects[(t - self.lo) as usize])
    }

    /// Boundary out of degree `t`, or `None` when either end is outside the range.
    pub fn boundary(&self, t: i64) -> Option<&ModuleMap> {
        if t <= self.lo || t > self.hi() {
            return None;
        }
        Some(&self.boundaries[(t - self.lo - 1) as usize])
    }

    /// Boundary out of degree `t`, with zero objects filled in outside the range.
    fn boundary_or_zero(&self, t: i64) -> Option<ModuleMap> {
        if let Some(d) = self.boundary(t) {
            return Some(d.clone());
        }
        let src = self.object(t)?;
        let tgt = ModuleOverRing::zero(&self.ring);
        Some(ModuleMap::zero(src, &tgt))
    }

    /// The same complex with every object forgotten down to its abelian group.
    pub fn underlying_groups(&self) -> ChainComplex {
        let objects: Vec<_> = self.objects.iter().map(|m| ModuleOverRing::abelian(m.underlying().clone())).collect();
        let boundaries = self
            .boundaries
            .iter()
            .enumerate()
            .map(|(k, d)| {
                ModuleMap::new_trusted(objects[k + 1].clone(), objects[k].clone(), d.matrix().clone())
                    .expect("same presentation")
            })
            .collect();
        ChainComplex { ring: RingSpec::integers(), lo: self.lo, objects, boundaries }
    }
}

/// `H_t(c)` as `ker ∂_t / im ∂_{t+1}`.
pub fn chain_homology(c: &ChainComplex, t: i64) -> Result<FgAbelianGroup> {
    Ok(homology_subquotient(c, t)?.map(|s| s.group().clone()).unwrap_or_else(FgAbelianGroup::zero))
}

/// `H_t` as a subquotient of the generator lattice in degree `t`; `None` outside the range.
pub fn homology_subquotient(c: &ChainComplex, t: i64) -> Result<Option<Subquotient>> {
    let Some(obj) = c.object(t) else {
        return Ok(None);
    };
    let g = obj.generators();
    let cycles = match c.boundary_or_zero(t) {
        Some(d) => d.group_map().kernel()?.basis().clone(),
        None => IntegerMatrix::identity(g),
    };
    let mut boundaries = obj.underlying().relations().clone();
    if let Some(d) = c.boundary(t + 1) {
        boundaries = boundaries.hstack(d.matrix())?;
    }
    Ok(Some(Subquotient::new(g, &cycles, &boundaries)?))
}

/// The complex of abelian groups with degree `t` equal to `∏_i Hom(x_i, y_{i+t})`
/// and differential `(Df)_i = ∂ʸ f_i − (−1)^t f_{i−1} ∂ˣ_i`.
pub fn hom_complex(x: &ChainComplex, y: &ChainComplex) -> Result<ChainComplex> {
    Ok(HomComplex::new(x, y)?.complex)
}

/// A Hom complex together with the Hom groups that make up each degree.
#[derive(Clone, Debug)]
pub struct HomComplex {
    pub complex: ChainComplex,
    lo: i64,
    y_lo: i64,
    components: Vec<Vec<(i64, HomGroup)>>,
}

impl HomComplex {
    pub fn new(x: &ChainComplex, y: &ChainComplex) -> Result<Self> {
        if x.ring() != y.ring() {
            return Err(Error::RingMismatch("Hom complex of complexes over different rings".into()));
        }
        let lo = y.lo() - x.hi();
        let hi = y.hi() - x.lo();
        let components: Vec<Vec<(i64, HomGroup)>> = (lo..=hi).map(|t| components(x, y, t)).collect::<Result<_>>()?;
        let complex = assemble(x, y, lo, hi, &components)?;
        Ok(HomComplex { complex, lo, y_lo: y.lo(), components })
    }

    /// Matrix of post-composition with a degreewise map `g: y → y2` (indexed
    /// from `y.lo()`) on degree `t`, between this complex and `into`.
    pub fn post_compose(&self, g: &[ModuleMap], into: &HomComplex, t: i64) -> Result<IntegerMatrix> {
        if self.lo != into.lo || self.components.len() != into.components.len() || self.y_lo != into.y_lo {
            return Err(mismatch!("degreewise map between Hom complexes of different shapes"));
        }
        let k = t - self.lo;
        if k < 0 || k as usize >= self.components.len() {
            return Ok(IntegerMatrix::zeros(0, 0));
        }
        let src = &self.components[k as usize];
        let tgt = &into.components[k as usize];
        let row_offsets = offsets(tgt);
        let col_offsets = offsets(src);
        let mut out = IntegerMatrix::zeros(*row_offsets.last().unwrap(), *col_offsets.last().unwrap());
        for (c, ((i, h), (_, h2))) in src.iter().zip(tgt).enumerate() {
            let map = g.get((i + t - self.y_lo) as usize).ok_or_else(|| mismatch!("degreewise map is too short"))?;
            let block = h.post_compose(map, h2)?;
            out.set_block(row_offsets[c], col_offsets[c], block.matrix());
        }
        Ok(out)
    }
}

fn assemble(x: &ChainComplex, y: &ChainComplex, lo: i64, hi: i64, components: &[Vec<(i64, HomGroup)>]) -> Result<ChainComplex> {
    let objects: Vec<ModuleOverRing> = components
        .iter()
        .map(|comps| {
            let g = comps.iter().fold(FgAbelianGroup::zero(), |acc, (_, h)| acc.direct_sum(h.group()));
            ModuleOverRing::abelian(g)
        })
        .collect();

    let mut boundaries = Vec::new();
    for t in lo + 1..=hi {
        let src = &components[(t - lo) as usize];
        let tgt = &components[(t - 1 - lo) as usize];
        let offsets = offsets(tgt);
        let rows = offsets.last().copied().unwrap_or(0);
        let mut cols = Vec::new();
        let sign = if t % 2 == 0 { BigInt::from(-1) } else { BigInt::from(1) };
        for (i, h) in src {
            for r in 0..h.rank() {
                let f = h.representative(r)?;
                let mut col = vec![BigInt::from(0); rows];
                for (k, (j, hom)) in tgt.iter().enumerate() {
                    // (Df)_j : x_j → y_{j+t−1}
                    let mut piece: Option<ModuleMap> = None;
                    if *j == *i {
                        if let Some(dy) = y.boundary(i + t) {
                            piece = Some(dy.after(&f)?);
                        }
                    }
                    if *j == *i + 1 {
                        if let Some(dx) = x.boundary(*j) {
                            let term = f.after(dx)?.scale(&sign);
                            piece = Some(match piece {
                                Some(p) => p.add(&term)?,
                                None => term,
                            });
                        }
                    }
                    if let Some(p) = piece {
                        let coords = hom.coordinates(&p)?;
                        for (a, v) in coords.into_iter().enumerate() {
                            col[offsets[k] + a] = v;
                        }
                    }
                }
                cols.push(col);
            }
        }
        let s = &objects[(t - lo) as usize];
        let d = &objects[(t - 1 - lo) as usize];
        let m = IntegerMatrix::from_columns(rows, &cols)?;
        boundaries.push(ModuleMap::new(s.clone(), d.clone(), m)?);
    }
    ChainComplex::new(RingSpec::integers(), lo, objects, boundaries)
}

fn components(x: &ChainComplex, y: &ChainComplex, t: i64) -> Result<Vec<(i64, HomGroup)>> {
    let mut comps = Vec::new();
    for i in x.lo()..=x.hi() {
        if let Some(yt) = y.object(i + t) {
            comps.push((i, hom_group(x.object(i).unwrap(), yt)?));
        }
    }
    Ok(comps)
}

fn offsets(comps: &[(i64, HomGroup)]) -> Vec<usize> {
    let mut out = vec![0];
    for (_, h) in comps {
        out.push(out.last().unwrap() + h.rank());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zmod(g: FgAbelianGroup) -> ModuleOverRing {
        ModuleOverRing::abelian(g)
    }

    #[test]
    fn homology_of_single_object() {
        let c = ChainComplex::concentrated(&zmod(FgAbelianGroup::free(1)), 0);
        assert_eq!(chain_homology(&c, 0).unwrap().to_string(), "Z");
        assert!(chain_homology(&c, 1).unwrap().is_trivial());
    }

    #[test]
    fn homology_of_doubling() {
        let z = zmod(FgAbelianGroup::free(1));
        let f = ModuleMap::new(z.clone(), z, IntegerMatrix::from_rows(&[[2]], 1).unwrap()).unwrap();
        let c = ChainComplex::from_map(&f, 1);
        assert_eq!(chain_homology(&c, 0).unwrap().to_string(), "Z/2");
        assert!(chain_homology(&c, 1).unwrap().is_trivial());
    }

    #[test]
    fn nonzero_square_rejected() {
        let z = zmod(FgAbelianGroup::free(1));
        let id = ModuleMap::identity(&z);
        let err = ChainComplex::new(RingSpec::integers(), 0, vec![z.clone(), z.clone(), z], vec![id.clone(), id]);
        assert!(err.is_err());
    }

    #[test]
    fn hom_from_free_rank_one() {
        let z = zmod(FgAbelianGroup::free(1));
        let f = ModuleMap::new(z.clone(), z.clone(), IntegerMatrix::from_rows(&[[2]], 1).unwrap()).unwrap();
        let y = ChainComplex::from_map(&f, 1);
        let h = hom_complex(&ChainComplex::concentrated(&z, 0), &y).unwrap();
        assert_eq!((h.lo(), h.hi()), (0, 1));
        assert_eq!(chain_homology(&h, 0).unwrap().to_string(), "Z/2");
        assert!(chain_homology(&h, 1).unwrap().is_trivial());
    }

    #[test]
    fn hom_complex_differential_squares_to_zero() {
        let z = zmod(FgAbelianGroup::free(1));
        let two = ModuleMap::new(z.clone(), z.clone(), IntegerMatrix::from_rows(&[[2]], 1).unwrap()).unwrap();
        let three = ModuleMap::new(z.clone(), z.clone(), IntegerMatrix::from_rows(&[[3]], 1).unwrap()).unwrap();
        let x = ChainComplex::from_map(&two, 1);
        let y = ChainComplex::from_map(&three, 1);
        // Construction validates consecutive composites.
        let h = hom_complex(&x, &y).unwrap();
        assert_eq!((h.lo(), h.hi()), (-1, 1));
        // Hom(ℤ/2, ℤ/3) is zero in every degree.
        for t in -1..=1 {
            assert!(chain_homology(&h, t).unwrap().is_trivial(), "degree {}", t);
        }
    }
}
