//! Nerves of finite categories and their cochains with coefficients in an
//! abelian group, a ready supply of cosimplicial abelian groups.

use super::fincat::FinCat;
use crate::algebra::{FgAbelianGroup, IntegerMatrix, ModuleMap, ModuleOverRing};
use crate::error::Result;
use crate::simplicial::{Modules, TruncatedCosimplicial};

/// A nerve simplex: its objects `x₀ … xₙ` are implied by its morphisms
/// `f₁ … fₙ` (`fₖ: xₖ₋₁ → xₖ`); level 0 stores the object alone.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Simplex {
    Vertex(usize),
    Chain(Vec<usize>),
}

/// The composable chains of length `n`, in lexicographic order.
pub fn nerve_level(c: &FinCat, n: usize) -> Vec<Simplex> {
    if n == 0 {
        return (0..c.object_count()).map(Simplex::Vertex).collect();
    }
    let mut chains: Vec<Vec<usize>> = (0..c.morphism_count()).map(|f| vec![f]).collect();
    for _ in 1..n {
        chains = chains
            .into_iter()
            .flat_map(|ch| {
                let end = c.target(*ch.last().expect("nonempty"));
                (0..c.morphism_count()).filter(move |&g| c.source(g) == end).map(move |g| {
                    let mut next = ch.clone();
                    next.push(g);
                    next
                })
            })
            .collect();
    }
    chains.into_iter().map(Simplex::Chain).collect()
}

fn face(c: &FinCat, s: &Simplex, i: usize) -> Simplex {
    let Simplex::Chain(fs) = s else { unreachable!("vertices have no faces") };
    let n = fs.len();
    if n == 1 {
        return Simplex::Vertex(if i == 0 { c.target(fs[0]) } else { c.source(fs[0]) });
    }
    let mut out = fs.clone();
    if i == 0 {
        out.remove(0);
    } else if i == n {
        out.pop();
    } else {
        let composite = c.compose(fs[i], fs[i - 1]);
        out.splice(i - 1..=i, [composite]);
    }
    Simplex::Chain(out)
}

fn degeneracy(c: &FinCat, s: &Simplex, j: usize) -> Simplex {
    match s {
        Simplex::Vertex(x) => Simplex::Chain(vec![c.identity(*x)]),
        Simplex::Chain(fs) => {
            let x = if j == 0 { c.source(fs[0]) } else { c.target(fs[j - 1]) };
            let mut out = fs.clone();
            out.insert(j, c.identity(x));
            Simplex::Chain(out)
        }
    }
}

/// `Cⁿ = G^{Nₙ}` with `dⁱ` and `sʲ` given by precomposition with the nerve's
/// faces and degeneracies, for levels `0..=truncation`.
pub fn nerve_cochains(c: &FinCat, g: &FgAbelianGroup, truncation: usize) -> Result<TruncatedCosimplicial<Modules>> {
    let simplices: Vec<Vec<Simplex>> = (0..=truncation).map(|n| nerve_level(c, n)).collect();
    let levels: Vec<ModuleOverRing> = simplices
        .iter()
        .map(|s| ModuleOverRing::abelian((0..s.len()).fold(FgAbelianGroup::zero(), |acc, _| acc.direct_sum(g))))
        .collect();
    let width = g.generators();
    // The map on cochains induced by `pull`, a map from the target level's simplices.
    let pullback = |from: usize, to: usize, pull: &dyn Fn(&Simplex) -> Simplex| -> Result<ModuleMap> {
        let index = |s: &Simplex| simplices[from].binary_search(s).expect("nerve is closed under faces");
        let mut m = IntegerMatrix::zeros(levels[to].generators(), levels[from].generators());
        for (row, s) in simplices[to].iter().enumerate() {
            let col = index(&pull(s));
            m.set_block(row * width, col * width, &IntegerMatrix::identity(width));
        }
        ModuleMap::new(levels[from].clone(), levels[to].clone(), m)
    };
    let mut cofaces = Vec::new();
    let mut codegeneracies = Vec::new();
    for n in 0..truncation {
        cofaces.push((0..=n + 1).map(|i| pullback(n, n + 1, &|s| face(c, s, i))).collect::<Result<Vec<_>>>()?);
        codegeneracies.push((0..=n).map(|j| pullback(n + 1, n, &|s| degeneracy(c, s, j))).collect::<Result<Vec<_>>>()?);
    }
    TruncatedCosimplicial::new(&Modules, levels, cofaces, codegeneracies)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{check_cosimplicial_identities, cohomotopy};

    #[test]
    fn chain_counts() {
        let c = FinCat::cyclic_group(3).unwrap();
        assert_eq!(nerve_level(&c, 2).len(), 9);
        let a = FinCat::arrow();
        // Chains in d0 → d1: identities and the arrow, then 4 composable pairs.
        assert_eq!(nerve_level(&a, 1).len(), 3);
        assert_eq!(nerve_level(&a, 2).len(), 4);
    }

    #[test]
    fn cochains_are_cosimplicial() {
        let c = FinCat::cyclic_group(2).unwrap();
        let x = nerve_cochains(&c, &FgAbelianGroup::free(1), 3).unwrap();
        assert!(check_cosimplicial_identities(&Modules, &x).unwrap().is_valid());
    }

    #[test]
    fn group_cohomology_of_cyclic_group() {
        // H^s(Z/2; Z) = Z, 0, Z/2 for s = 0, 1, 2.
        let c = FinCat::cyclic_group(2).unwrap();
        let x = nerve_cochains(&c, &FgAbelianGroup::free(1), 3).unwrap();
        let h: Vec<String> = (0..3).map(|s| cohomotopy(&x, s).unwrap().to_string()).collect();
        assert_eq!(h, ["Z", "0", "Z/2"]);
    }

    #[test]
    fn arrow_is_contractible() {
        let x = nerve_cochains(&FinCat::arrow(), &FgAbelianGroup::cyclic(3), 3).unwrap();
        assert_eq!(cohomotopy(&x, 0).unwrap().to_string(), "Z/3");
        assert!(cohomotopy(&x, 1).unwrap().is_trivial());
        assert!(cohomotopy(&x, 2).unwrap().is_trivial());
    }
}
