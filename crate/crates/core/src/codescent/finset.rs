//! Finite sets with structured labels, total maps between them, fiber
//! products, and quotients by union-find.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{invalid, mismatch, Result};

/// Element label. Products and coproducts build composite labels, so element
/// names stay readable in reports.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Atom(String),
    Tuple(Vec<Label>),
    /// Element of summand `k` of a coproduct.
    Tag(usize, Box<Label>),
}

impl Label {
    pub fn atom(s: impl Into<String>) -> Self {
        Label::Atom(s.into())
    }

    pub fn pair(a: Label, b: Label) -> Self {
        Label::Tuple(vec![a, b])
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Atom(s) => write!(f, "{}", s),
            Label::Tuple(xs) => {
                write!(f, "(")?;
                for (k, x) in xs.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", x)?;
                }
                write!(f, ")")
            }
            Label::Tag(k, x) => write!(f, "{}:{}", k, x),
        }
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label::atom(s)
    }
}

struct Inner {
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
}

/// A finite set of distinct labels, in a fixed order.
#[derive(Clone)]
pub struct FinSet(Arc<Inner>);

impl FinSet {
    pub fn new(labels: Vec<Label>) -> Result<Self> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(invalid!("label {} occurs twice", l));
            }
        }
        Ok(FinSet(Arc::new(Inner { labels, index })))
    }

    /// `{0, 1, …, n−1}` with atom labels.
    pub fn range(n: usize) -> Self {
        Self::new((0..n).map(|i| Label::Atom(i.to_string())).collect()).expect("distinct")
    }

    pub fn from_names<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        Self::new(names.iter().map(|s| Label::atom(s.as_ref())).collect())
    }

    pub fn empty() -> Self {
        Self::new(Vec::new()).expect("empty")
    }

    pub fn len(&self) -> usize {
        self.0.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.0.labels
    }

    pub fn label(&self, i: usize) -> &Label {
        &self.0.labels[i]
    }

    pub fn index_of(&self, l: &Label) -> Option<usize> {
        self.0.index.get(l).copied()
    }
}

impl PartialEq for FinSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.labels == other.0.labels
    }
}

impl Eq for FinSet {}

impl std::hash::Hash for FinSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.labels.hash(state);
    }
}

impl fmt::Debug for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, l) in self.labels().iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", l)?;
        }
        write!(f, "}}")
    }
}

/// A total map of finite sets, stored as target indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinSetMap {
    source: FinSet,
    target: FinSet,
    assignment: Vec<usize>,
}

impl FinSetMap {
    pub fn new(source: FinSet, target: FinSet, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != source.len() {
            return Err(mismatch!("assignment has {} values for {} elements", assignment.len(), source.len()));
        }
        if let Some((i, &j)) = assignment.iter().enumerate().find(|(_, &j)| j >= target.len()) {
            return Err(invalid!("element {} is sent to index {} outside a target of size {}", source.label(i), j, target.len()));
        }
        Ok(FinSetMap { source, target, assignment })
    }

    /// The map sending each source label to the named target label.
    pub fn from_labels(source: FinSet, target: FinSet, images: &[Label]) -> Result<Self> {
        let assignment = images
            .iter()
            .map(|l| target.index_of(l).ok_or_else(|| invalid!("{} is not in the target", l)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, assignment)
    }

    pub fn identity(x: &FinSet) -> Self {
        FinSetMap { source: x.clone(), target: x.clone(), assignment: (0..x.len()).collect() }
    }

    pub fn source(&self) -> &FinSet {
        &self.source
    }

    pub fn target(&self) -> &FinSet {
        &self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn apply(&self, i: usize) -> usize {
        self.assignment[i]
    }

    /// `self ∘ first`
    pub fn after(&self, first: &FinSetMap) -> Result<FinSetMap> {
        if first.target != self.source {
            return Err(mismatch!("composing set maps with different middle sets"));
        }
        let assignment = first.assignment.iter().map(|&j| self.assignment[j]).collect();
        Ok(FinSetMap { source: first.source.clone(), target: self.target.clone(), assignment })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.len()];
        self.assignment.iter().all(|&j| !std::mem::replace(&mut seen[j], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.len()];
        for &j in &self.assignment {
            seen[j] = true;
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.assignment.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Indices of the source lying over target index `j`.
    pub fn fiber(&self, j: usize) -> Vec<usize> {
        (0..self.assignment.len()).filter(|&i| self.assignment[i] == j).collect()
    }

    /// Indices of the target hit by the map.
    pub fn image(&self) -> Vec<usize> {
        let mut seen = vec![false; self.target.len()];
        for &j in &self.assignment {
            seen[j] = true;
        }
        (0..seen.len()).filter(|&j| seen[j]).collect()
    }
}

impl fmt::Debug for FinSetMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, &j) in self.assignment.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}↦{}", self.source.label(i), self.target.label(j))?;
        }
        write!(f, "}}")
    }
}

/// `X ×_B Y = {(x, y) : f(x) = g(y)}`, ordered lexicographically by indices,
/// with its two projections. Labels are pairs.
pub fn pullback(f: &FinSetMap, g: &FinSetMap) -> Result<(FinSet, FinSetMap, FinSetMap)> {
    if f.target != g.target {
        return Err(mismatch!("pullback of maps into different sets"));
    }
    let mut by_base: Vec<Vec<usize>> = vec![Vec::new(); f.target.len()];
    for (y, &b) in g.assignment.iter().enumerate() {
        by_base[b].push(y);
    }
    let mut labels = Vec::new();
    let mut p1 = Vec::new();
    let mut p2 = Vec::new();
    for (x, &b) in f.assignment.iter().enumerate() {
        for &y in &by_base[b] {
            labels.push(Label::pair(f.source.label(x).clone(), g.source.label(y).clone()));
            p1.push(x);
            p2.push(y);
        }
    }
    let p = FinSet::new(labels)?;
    Ok((p.clone(), FinSetMap::new(p.clone(), f.source.clone(), p1)?, FinSetMap::new(p, g.source.clone(), p2)?))
}

/// Union-find over `0..n`.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// The quotient of `x` by the equivalence relation generated by `pairs`, with
/// its projection. Each class is named by its least label and classes are
/// listed in the order of those labels.
pub fn quotient(x: &FinSet, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<(FinSet, FinSetMap)> {
    let mut uf = UnionFind::new(x.len());
    for (a, b) in pairs {
        uf.union(a, b);
    }
    let mut least: HashMap<usize, usize> = HashMap::new();
    for i in 0..x.len() {
        let r = uf.find(i);
        let e = least.entry(r).or_insert(i);
        if x.label(i) < x.label(*e) {
            *e = i;
        }
    }
    let mut reps: Vec<usize> = least.values().copied().collect();
    reps.sort_by(|&a, &b| x.label(a).cmp(x.label(b)));
    let position: HashMap<usize, usize> = reps.iter().enumerate().map(|(k, &i)| (uf.find(i), k)).collect();
    let q = FinSet::new(reps.iter().map(|&i| x.label(i).clone()).collect())?;
    let assignment = (0..x.len()).map(|i| position[&uf.find(i)]).collect();
    Ok((q.clone(), FinSetMap::new(x.clone(), q, assignment)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_labels_rejected() {
        assert!(FinSet::from_names(&["a", "a"]).is_err());
    }

    #[test]
    fn pullback_over_point_is_product() {
        let pt = FinSet::from_names(&["*"]).unwrap();
        let x = FinSet::range(2);
        let y = FinSet::range(3);
        let f = FinSetMap::new(x, pt.clone(), vec![0, 0]).unwrap();
        let g = FinSetMap::new(y, pt, vec![0, 0, 0]).unwrap();
        let (p, _, _) = pullback(&f, &g).unwrap();
        assert_eq!(p.len(), 6);
    }

    #[test]
    fn pullback_with_empty_fiber() {
        let b = FinSet::from_names(&["a", "b"]).unwrap();
        let f = FinSetMap::new(FinSet::range(1), b.clone(), vec![0]).unwrap();
        let g = FinSetMap::new(FinSet::range(1), b, vec![1]).unwrap();
        assert!(pullback(&f, &g).unwrap().0.is_empty());
    }

    #[test]
    fn quotient_uses_least_labels() {
        let x = FinSet::from_names(&["c", "a", "b", "d"]).unwrap();
        let (q, p) = quotient(&x, [(0, 1), (3, 2)]).unwrap();
        assert_eq!(q.to_string(), "{a, b}");
        assert_eq!(p.assignment(), [0, 0, 1, 1]);
    }

    #[test]
    fn map_properties() {
        let f = FinSetMap::new(FinSet::range(3), FinSet::range(2), vec![0, 1, 1]).unwrap();
        assert!(f.is_surjective() && !f.is_injective());
        assert_eq!(f.fiber(1), [1, 2]);
        assert!(FinSetMap::new(FinSet::range(1), FinSet::range(1), vec![1]).is_err());
    }
}
