//! The JSON workspace: named rings, ring maps, modules, complexes, bundles,
//! categories, functors and diagrams, validated at load.
//!
//! Matrices are arrays of rows. Relations of a presented group are listed one
//! relation vector at a time. Structure constants `constants[i][j]` give the
//! coordinates of `gᵢ gⱼ`.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use descent_core::algebra::catalog::{integer_probes, probes_for, ring_map_catalog};
use descent_core::algebra::{ChainComplex, FgAbelianGroup, IntegerMatrix, ModuleMap, ModuleOverRing, RingMap, RingSpec};
use descent_core::codescent::{trivial_product, Bundle, FinSet, FinSetMap, Label};
use descent_core::kan::{Arrow, CatFunctor, DiagFunctor, FinCat, Sets};
use descent_core::simplicial::{Category, Modules};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub type Matrix = Vec<Vec<i64>>;

pub const DEFAULT_TRUNCATION: usize = 4;

fn default_truncation() -> usize {
    DEFAULT_TRUNCATION
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    #[serde(default = "default_truncation")]
    pub truncation: usize,
    #[serde(default)]
    pub rings: BTreeMap<String, RingDoc>,
    #[serde(default)]
    pub ring_maps: BTreeMap<String, RingMapDoc>,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleDoc>,
    #[serde(default)]
    pub complexes: BTreeMap<String, ComplexDoc>,
    #[serde(default)]
    pub bundles: BTreeMap<String, BundleDoc>,
    #[serde(default)]
    pub categories: BTreeMap<String, CategoryDoc>,
    #[serde(default)]
    pub functors: BTreeMap<String, FunctorDoc>,
    #[serde(default)]
    pub diagrams: BTreeMap<String, DiagramDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingDoc {
    pub generators: usize,
    #[serde(default)]
    pub relations: Vec<Vec<i64>>,
    pub constants: Vec<Vec<Vec<i64>>>,
    pub unit: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingMapDoc {
    pub source: String,
    pub target: String,
    pub matrix: Matrix,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDoc {
    pub ring: String,
    pub generators: usize,
    #[serde(default)]
    pub relations: Vec<Vec<i64>>,
    /// One square matrix per ring generator.
    pub actions: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDoc {
    pub ring: String,
    /// Degree of the first object.
    pub lo: i64,
    pub objects: Vec<String>,
    /// `boundaries[k]` runs from `objects[k + 1]` to `objects[k]`.
    #[serde(default)]
    pub boundaries: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleDoc {
    pub base: Vec<String>,
    pub total: Vec<String>,
    /// Base point of each element of `total`.
    pub projection: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowDoc {
    pub name: String,
    pub source: String,
    pub target: String,
}

/// Either a free category on named edges or an explicit composition table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryDoc {
    pub objects: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[String; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub morphisms: Option<Vec<ArrowDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identities: Option<Vec<String>>,
    /// `[g, f, g∘f]` for every composable pair.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub composition: Option<Vec<[String; 3]>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDoc {
    pub source: String,
    pub target: String,
    /// Target object name per source object name.
    pub objects: BTreeMap<String, String>,
    /// Target morphism name per source morphism name.
    pub morphisms: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    pub generators: usize,
    #[serde(default)]
    pub relations: Vec<Vec<i64>>,
}

/// Values per object name and maps per non-identity morphism name.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum DiagramDoc {
    Sets {
        category: String,
        values: BTreeMap<String, Vec<String>>,
        #[serde(default)]
        maps: BTreeMap<String, Vec<String>>,
    },
    Groups {
        category: String,
        values: BTreeMap<String, GroupDoc>,
        #[serde(default)]
        maps: BTreeMap<String, Matrix>,
    },
}

/// A validated diagram of either kind.
#[derive(Clone, Debug)]
pub enum Diagram {
    Sets(DiagFunctor<Sets>),
    Groups(DiagFunctor<Modules>),
}

/// A validated workspace; each entry remembers the names it refers to.
#[derive(Clone, Debug, Default)]
pub struct Workspace {
    pub truncation: usize,
    pub rings: BTreeMap<String, RingSpec>,
    pub ring_maps: BTreeMap<String, (String, String, RingMap)>,
    pub modules: BTreeMap<String, (String, ModuleOverRing)>,
    pub complexes: BTreeMap<String, (String, Vec<String>, ChainComplex)>,
    pub bundles: BTreeMap<String, Bundle>,
    pub categories: BTreeMap<String, FinCat>,
    pub functors: BTreeMap<String, (String, String, CatFunctor)>,
    pub diagrams: BTreeMap<String, (String, Diagram)>,
}

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

fn small(x: &BigInt, at: &str) -> Result<i64, CliError> {
    x.to_i64().ok_or_else(|| CliError::validation(format!("{}: entry {} does not fit in 64 bits", at, x)))
}

fn matrix(rows: &Matrix, shape: (usize, usize), at: &str) -> Result<IntegerMatrix, CliError> {
    if rows.len() != shape.0 || rows.iter().any(|r| r.len() != shape.1) {
        return Err(CliError::validation(format!("{}: expected a {}x{} matrix", at, shape.0, shape.1)));
    }
    let data = rows.iter().flatten().map(|&x| big(x)).collect();
    IntegerMatrix::from_entries(shape.0, shape.1, data).map_err(|e| CliError::at(at, e))
}

fn rows_of(m: &IntegerMatrix, at: &str) -> Result<Matrix, CliError> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| small(x, at)).collect()).collect()
}

fn group(generators: usize, relations: &[Vec<i64>], at: &str) -> Result<FgAbelianGroup, CliError> {
    if relations.iter().any(|r| r.len() != generators) {
        return Err(CliError::validation(format!("{}: each relation needs {} coordinates", at, generators)));
    }
    let cols: Vec<Vec<BigInt>> = relations.iter().map(|r| r.iter().map(|&x| big(x)).collect()).collect();
    let rel = IntegerMatrix::from_columns(generators, &cols).map_err(|e| CliError::at(at, e))?;
    FgAbelianGroup::new(generators, rel).map_err(|e| CliError::at(at, e))
}

fn relations_of(g: &FgAbelianGroup, at: &str) -> Result<Vec<Vec<i64>>, CliError> {
    g.relations().columns().map(|c| c.iter().map(|x| small(x, at)).collect()).collect()
}

fn lookup<'a, T>(map: &'a BTreeMap<String, T>, name: &str, what: &str, at: &str) -> Result<&'a T, CliError> {
    map.get(name).ok_or_else(|| CliError::validation(format!("{}: unknown {} {:?}", at, what, name)))
}

fn finset(names: &[String], at: &str) -> Result<FinSet, CliError> {
    FinSet::new(names.iter().map(|n| Label::atom(n.as_str())).collect()).map_err(|e| CliError::at(at, e))
}

fn label_index(set: &FinSet, name: &str, at: &str) -> Result<usize, CliError> {
    set.index_of(&Label::atom(name)).ok_or_else(|| CliError::validation(format!("{}: {:?} is not an element", at, name)))
}

fn object_index(c: &FinCat, name: &str, at: &str) -> Result<usize, CliError> {
    c.object_index(name).ok_or_else(|| CliError::validation(format!("{}: unknown object {:?}", at, name)))
}

fn morphism_index(c: &FinCat, name: &str, at: &str) -> Result<usize, CliError> {
    c.morphism_index(name).ok_or_else(|| CliError::validation(format!("{}: unknown morphism {:?}", at, name)))
}

impl Workspace {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::usage(format!("cannot read {}: {}", path.display(), e)))?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let doc: Document = serde_json::from_str(text).map_err(|e| {
            CliError::validation(format!("parse error at line {}, column {}: {}", e.line(), e.column(), e))
        })?;
        Self::from_document(&doc)
    }

    pub fn from_document(doc: &Document) -> Result<Self, CliError> {
        let mut ws = Workspace { truncation: doc.truncation, ..Default::default() };
        if ws.truncation < 1 {
            return Err(CliError::validation("truncation must be at least 1"));
        }
        for (name, r) in &doc.rings {
            let at = format!("rings.{}", name);
            let g = group(r.generators, &r.relations, &at)?;
            let n = r.generators;
            if r.constants.len() != n || r.constants.iter().any(|a| a.len() != n || a.iter().any(|b| b.len() != n)) {
                return Err(CliError::validation(format!("{}: structure constants must form a {}x{}x{} tensor", at, n, n, n)));
            }
            let constants = r.constants.iter().map(|a| a.iter().map(|b| b.iter().map(|&x| big(x)).collect()).collect()).collect();
            let unit = r.unit.iter().map(|&x| big(x)).collect();
            ws.rings.insert(name.clone(), RingSpec::new(g, constants, unit).map_err(|e| CliError::at(&at, e))?);
        }
        for (name, m) in &doc.ring_maps {
            let at = format!("ring_maps.{}", name);
            let s = lookup(&ws.rings, &m.source, "ring", &at)?.clone();
            let t = lookup(&ws.rings, &m.target, "ring", &at)?.clone();
            let mat = matrix(&m.matrix, (t.generators(), s.generators()), &at)?;
            let map = RingMap::new(s, t, mat).map_err(|e| CliError::at(&at, e))?;
            ws.ring_maps.insert(name.clone(), (m.source.clone(), m.target.clone(), map));
        }
        for (name, m) in &doc.modules {
            let at = format!("modules.{}", name);
            let ring = lookup(&ws.rings, &m.ring, "ring", &at)?.clone();
            let g = group(m.generators, &m.relations, &at)?;
            if m.actions.len() != ring.generators() {
                return Err(CliError::validation(format!("{}: {} actions for {} ring generators", at, m.actions.len(), ring.generators())));
            }
            let actions = m.actions.iter().map(|a| matrix(a, (m.generators, m.generators), &at)).collect::<Result<_, _>>()?;
            let module = ModuleOverRing::new(ring, g, actions).map_err(|e| CliError::at(&at, e))?;
            ws.modules.insert(name.clone(), (m.ring.clone(), module));
        }
        for (name, c) in &doc.complexes {
            let at = format!("complexes.{}", name);
            let ring = lookup(&ws.rings, &c.ring, "ring", &at)?.clone();
            let objects: Vec<ModuleOverRing> =
                c.objects.iter().map(|o| Ok(lookup(&ws.modules, o, "module", &at)?.1.clone())).collect::<Result<_, CliError>>()?;
            if c.boundaries.len() + 1 != objects.len() {
                return Err(CliError::validation(format!("{}: {} objects need {} boundaries", at, objects.len(), objects.len().saturating_sub(1))));
            }
            let mut boundaries = Vec::new();
            for (k, b) in c.boundaries.iter().enumerate() {
                let (s, t) = (&objects[k + 1], &objects[k]);
                let mat = matrix(b, (t.generators(), s.generators()), &at)?;
                boundaries.push(ModuleMap::new(s.clone(), t.clone(), mat).map_err(|e| CliError::at(&at, e))?);
            }
            let complex = ChainComplex::new(ring, c.lo, objects, boundaries).map_err(|e| CliError::at(&at, e))?;
            ws.complexes.insert(name.clone(), (c.ring.clone(), c.objects.clone(), complex));
        }
        for (name, b) in &doc.bundles {
            let at = format!("bundles.{}", name);
            let base = finset(&b.base, &at)?;
            let total = finset(&b.total, &at)?;
            if b.projection.len() != total.len() {
                return Err(CliError::validation(format!("{}: projection needs one base point per element", at)));
            }
            let assignment = b.projection.iter().map(|p| label_index(&base, p, &at)).collect::<Result<_, _>>()?;
            ws.bundles.insert(name.clone(), Bundle::from_assignment(total, base, assignment).map_err(|e| CliError::at(&at, e))?);
        }
        for (name, c) in &doc.categories {
            let at = format!("categories.{}", name);
            ws.categories.insert(name.clone(), category(c, &at)?);
        }
        for (name, f) in &doc.functors {
            let at = format!("functors.{}", name);
            let s = lookup(&ws.categories, &f.source, "category", &at)?.clone();
            let t = lookup(&ws.categories, &f.target, "category", &at)?.clone();
            let mut on_objects = Vec::new();
            for x in s.objects() {
                let image = f.objects.get(x).ok_or_else(|| CliError::validation(format!("{}: object {:?} has no image", at, x)))?;
                on_objects.push(object_index(&t, image, &at)?);
            }
            let mut on_morphisms = Vec::new();
            for (m, a) in s.arrows().iter().enumerate() {
                let image = match f.morphisms.get(&a.name) {
                    Some(g) => morphism_index(&t, g, &at)?,
                    None if s.is_identity(m) => t.identity(on_objects[a.source]),
                    None => return Err(CliError::validation(format!("{}: morphism {:?} has no image", at, a.name))),
                };
                on_morphisms.push(image);
            }
            let functor = CatFunctor::new(s, t, on_objects, on_morphisms).map_err(|e| CliError::at(&at, e))?;
            ws.functors.insert(name.clone(), (f.source.clone(), f.target.clone(), functor));
        }
        for (name, d) in &doc.diagrams {
            let at = format!("diagrams.{}", name);
            let (cat_name, diagram) = diagram(&ws.categories, d, &at)?;
            ws.diagrams.insert(name.clone(), (cat_name, diagram));
        }
        Ok(ws)
    }

    pub fn to_document(&self) -> Result<Document, CliError> {
        let mut doc = Document { truncation: self.truncation, ..Default::default() };
        for (name, r) in &self.rings {
            let at = format!("rings.{}", name);
            let constants = r
                .constants()
                .iter()
                .map(|a| a.iter().map(|b| b.iter().map(|x| small(x, &at)).collect()).collect())
                .collect::<Result<_, _>>()?;
            let unit = r.unit().iter().map(|x| small(x, &at)).collect::<Result<_, _>>()?;
            doc.rings.insert(
                name.clone(),
                RingDoc { generators: r.generators(), relations: relations_of(r.underlying(), &at)?, constants, unit },
            );
        }
        for (name, (s, t, m)) in &self.ring_maps {
            let at = format!("ring_maps.{}", name);
            doc.ring_maps.insert(name.clone(), RingMapDoc { source: s.clone(), target: t.clone(), matrix: rows_of(m.matrix(), &at)? });
        }
        for (name, (ring, m)) in &self.modules {
            let at = format!("modules.{}", name);
            let actions = m.actions().iter().map(|a| rows_of(a, &at)).collect::<Result<_, _>>()?;
            doc.modules.insert(
                name.clone(),
                ModuleDoc { ring: ring.clone(), generators: m.generators(), relations: relations_of(m.underlying(), &at)?, actions },
            );
        }
        for (name, (ring, objects, c)) in &self.complexes {
            let at = format!("complexes.{}", name);
            let boundaries = (c.lo() + 1..=c.hi()).map(|t| rows_of(c.boundary(t).expect("in range").matrix(), &at)).collect::<Result<_, _>>()?;
            doc.complexes.insert(name.clone(), ComplexDoc { ring: ring.clone(), lo: c.lo(), objects: objects.clone(), boundaries });
        }
        for (name, b) in &self.bundles {
            let names = |s: &FinSet| s.labels().iter().map(|l| l.to_string()).collect::<Vec<_>>();
            let projection = (0..b.total().len()).map(|i| b.base().label(b.projection().apply(i)).to_string()).collect();
            doc.bundles.insert(name.clone(), BundleDoc { base: names(b.base()), total: names(b.total()), projection });
        }
        for (name, c) in &self.categories {
            let obj = |x: usize| c.objects()[x].clone();
            let morphisms = c.arrows().iter().map(|a| ArrowDoc { name: a.name.clone(), source: obj(a.source), target: obj(a.target) }).collect();
            let identities = (0..c.object_count()).map(|x| c.name(c.identity(x)).to_string()).collect();
            let composition = c
                .composition_table()
                .into_iter()
                .map(|((g, f), h)| [c.name(g).to_string(), c.name(f).to_string(), c.name(h).to_string()])
                .collect();
            doc.categories.insert(
                name.clone(),
                CategoryDoc {
                    objects: c.objects().to_vec(),
                    edges: None,
                    morphisms: Some(morphisms),
                    identities: Some(identities),
                    composition: Some(composition),
                },
            );
        }
        for (name, (s, t, f)) in &self.functors {
            let (sc, tc) = (f.source(), f.target());
            let objects = (0..sc.object_count()).map(|x| (sc.objects()[x].clone(), tc.objects()[f.object(x)].clone())).collect();
            let morphisms = (0..sc.morphism_count())
                .filter(|&m| !sc.is_identity(m))
                .map(|m| (sc.name(m).to_string(), tc.name(f.morphism(m)).to_string()))
                .collect();
            doc.functors.insert(name.clone(), FunctorDoc { source: s.clone(), target: t.clone(), objects, morphisms });
        }
        for (name, (cat, d)) in &self.diagrams {
            let at = format!("diagrams.{}", name);
            doc.diagrams.insert(name.clone(), diagram_doc(cat, d, &at)?);
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        let doc = self.to_document()?;
        Ok(serde_json::to_string_pretty(&doc).expect("documents serialize"))
    }

    pub fn ring_map(&self, name: &str) -> Result<&RingMap, CliError> {
        self.ring_maps.get(name).map(|e| &e.2).ok_or_else(|| CliError::usage(format!("unknown ring map {:?}", name)))
    }

    pub fn module(&self, name: &str) -> Result<&ModuleOverRing, CliError> {
        self.modules.get(name).map(|e| &e.1).ok_or_else(|| CliError::usage(format!("unknown module {:?}", name)))
    }

    /// A named complex, or a named module placed in degree 0.
    pub fn complex(&self, name: &str) -> Result<ChainComplex, CliError> {
        if let Some(c) = self.complexes.get(name) {
            return Ok(c.2.clone());
        }
        self.module(name).map(|m| ChainComplex::concentrated(m, 0)).map_err(|_| CliError::usage(format!("unknown complex or module {:?}", name)))
    }

    pub fn bundle(&self, name: &str) -> Result<&Bundle, CliError> {
        self.bundles.get(name).ok_or_else(|| CliError::usage(format!("unknown bundle {:?}", name)))
    }

    pub fn functor(&self, name: &str) -> Result<&CatFunctor, CliError> {
        self.functors.get(name).map(|e| &e.2).ok_or_else(|| CliError::usage(format!("unknown functor {:?}", name)))
    }

    pub fn diagram(&self, name: &str) -> Result<&Diagram, CliError> {
        self.diagrams.get(name).map(|e| &e.1).ok_or_else(|| CliError::usage(format!("unknown diagram {:?}", name)))
    }

    /// Modules over `ring`, by name.
    pub fn modules_over(&self, ring: &RingSpec) -> Vec<(&str, &ModuleOverRing)> {
        self.modules.iter().filter(|(_, (_, m))| m.ring() == ring).map(|(n, (_, m))| (n.as_str(), m)).collect()
    }

    pub fn ring_name(&self, ring: &RingSpec) -> Option<&str> {
        self.rings.iter().find(|(_, r)| *r == ring).map(|(n, _)| n.as_str())
    }
}

fn category(c: &CategoryDoc, at: &str) -> Result<FinCat, CliError> {
    match (&c.edges, &c.morphisms) {
        (Some(edges), None) => {
            if c.identities.is_some() || c.composition.is_some() {
                return Err(CliError::validation(format!("{}: a category given by edges takes no identities or composition", at)));
            }
            let index = |n: &str| c.objects.iter().position(|o| o == n).ok_or_else(|| CliError::validation(format!("{}: unknown object {:?}", at, n)));
            let pairs = edges.iter().map(|[s, t]| Ok((index(s)?, index(t)?))).collect::<Result<Vec<_>, CliError>>()?;
            let free = FinCat::free_on_graph(c.objects.len(), &pairs).map_err(|e| CliError::at(at, e))?;
            free.category.with_object_names(c.objects.clone()).map_err(|e| CliError::at(at, e))
        }
        (None, Some(morphisms)) => {
            let obj = |n: &str| c.objects.iter().position(|o| o == n).ok_or_else(|| CliError::validation(format!("{}: unknown object {:?}", at, n)));
            let mut names = HashMap::new();
            let mut arrows = Vec::new();
            for (i, m) in morphisms.iter().enumerate() {
                if names.insert(m.name.clone(), i).is_some() {
                    return Err(CliError::validation(format!("{}: morphism name {:?} is used twice", at, m.name)));
                }
                arrows.push(Arrow { name: m.name.clone(), source: obj(&m.source)?, target: obj(&m.target)? });
            }
            let mor = |n: &str| names.get(n).copied().ok_or_else(|| CliError::validation(format!("{}: unknown morphism {:?}", at, n)));
            let identities = c
                .identities
                .as_ref()
                .ok_or_else(|| CliError::validation(format!("{}: identities are missing", at)))?
                .iter()
                .map(|n| mor(n))
                .collect::<Result<_, _>>()?;
            let mut composition = HashMap::new();
            for [g, f, h] in c.composition.as_deref().unwrap_or(&[]) {
                composition.insert((mor(g)?, mor(f)?), mor(h)?);
            }
            FinCat::new(c.objects.clone(), arrows, identities, composition).map_err(|e| CliError::at(at, e))
        }
        _ => Err(CliError::validation(format!("{}: give exactly one of edges or morphisms", at))),
    }
}

fn diagram(categories: &BTreeMap<String, FinCat>, d: &DiagramDoc, at: &str) -> Result<(String, Diagram), CliError> {
    match d {
        DiagramDoc::Sets { category, values, maps } => {
            let c = lookup(categories, category, "category", at)?;
            let sets: Vec<FinSet> = c
                .objects()
                .iter()
                .map(|x| finset(values.get(x).ok_or_else(|| CliError::validation(format!("{}: object {:?} has no value", at, x)))?, at))
                .collect::<Result<_, _>>()?;
            check_keys(c, maps.keys(), at)?;
            let mut fs = Vec::new();
            for (m, a) in c.arrows().iter().enumerate() {
                let (s, t) = (&sets[a.source], &sets[a.target]);
                fs.push(match maps.get(&a.name) {
                    Some(images) => {
                        if images.len() != s.len() {
                            return Err(CliError::validation(format!("{}: map {:?} needs {} images", at, a.name, s.len())));
                        }
                        let assignment = images.iter().map(|l| label_index(t, l, at)).collect::<Result<_, _>>()?;
                        FinSetMap::new(s.clone(), t.clone(), assignment).map_err(|e| CliError::at(at, e))?
                    }
                    None if c.is_identity(m) => FinSetMap::identity(s),
                    None => return Err(CliError::validation(format!("{}: morphism {:?} has no map", at, a.name))),
                });
            }
            let x = DiagFunctor::new(&Sets, c.clone(), sets, fs).map_err(|e| CliError::at(at, e))?;
            Ok((category.clone(), Diagram::Sets(x)))
        }
        DiagramDoc::Groups { category, values, maps } => {
            let c = lookup(categories, category, "category", at)?;
            let groups: Vec<ModuleOverRing> = c
                .objects()
                .iter()
                .map(|x| {
                    let g = values.get(x).ok_or_else(|| CliError::validation(format!("{}: object {:?} has no value", at, x)))?;
                    Ok(ModuleOverRing::abelian(group(g.generators, &g.relations, at)?))
                })
                .collect::<Result<_, CliError>>()?;
            check_keys(c, maps.keys(), at)?;
            let mut fs = Vec::new();
            for (m, a) in c.arrows().iter().enumerate() {
                let (s, t) = (&groups[a.source], &groups[a.target]);
                fs.push(match maps.get(&a.name) {
                    Some(rows) => {
                        let mat = matrix(rows, (t.generators(), s.generators()), at)?;
                        ModuleMap::new(s.clone(), t.clone(), mat).map_err(|e| CliError::at(at, e))?
                    }
                    None if c.is_identity(m) => Modules.identity(s),
                    None => return Err(CliError::validation(format!("{}: morphism {:?} has no map", at, a.name))),
                });
            }
            let x = DiagFunctor::new(&Modules, c.clone(), groups, fs).map_err(|e| CliError::at(at, e))?;
            Ok((category.clone(), Diagram::Groups(x)))
        }
    }
}

fn check_keys<'a>(c: &FinCat, keys: impl Iterator<Item = &'a String>, at: &str) -> Result<(), CliError> {
    for k in keys {
        morphism_index(c, k, at)?;
    }
    Ok(())
}

fn diagram_doc(category: &str, d: &Diagram, at: &str) -> Result<DiagramDoc, CliError> {
    Ok(match d {
        Diagram::Sets(x) => {
            let c = x.base();
            let values = (0..c.object_count())
                .map(|o| (c.objects()[o].clone(), x.value(o).labels().iter().map(|l| l.to_string()).collect()))
                .collect();
            let maps = (0..c.morphism_count())
                .filter(|&m| !c.is_identity(m))
                .map(|m| {
                    let f = x.map(m);
                    (c.name(m).to_string(), (0..f.source().len()).map(|i| f.target().label(f.apply(i)).to_string()).collect())
                })
                .collect();
            DiagramDoc::Sets { category: category.to_string(), values, maps }
        }
        Diagram::Groups(x) => {
            let c = x.base();
            let values = (0..c.object_count())
                .map(|o| {
                    let g = x.value(o).underlying();
                    Ok((c.objects()[o].clone(), GroupDoc { generators: g.generators(), relations: relations_of(g, at)? }))
                })
                .collect::<Result<_, CliError>>()?;
            let maps = (0..c.morphism_count())
                .filter(|&m| !c.is_identity(m))
                .map(|m| Ok((c.name(m).to_string(), rows_of(x.map(m).matrix(), at)?)))
                .collect::<Result<_, CliError>>()?;
            DiagramDoc::Groups { category: category.to_string(), values, maps }
        }
    })
}

/// The built-in fixture catalog: the seven ring maps with their rings, probe
/// modules, a few complexes, bundles, categories, functors and diagrams.
pub fn catalog_workspace() -> Workspace {
    let mut ws = Workspace { truncation: DEFAULT_TRUNCATION, ..Default::default() };
    let ring_names = [("id", "Z", "Z"), ("zz2", "Z", "ZxZ"), ("zz3", "Z", "ZxZxZ"), ("z2", "Z", "Z/2"), ("z6", "Z", "Z/6"), ("gauss", "Z", "Z[i]"), ("f2f2", "Z/2", "Z/2xZ/2")];
    for (entry, (name, s, t)) in ring_map_catalog().into_iter().zip(ring_names) {
        debug_assert_eq!(entry.name, name);
        ws.rings.insert(s.to_string(), entry.map.source().clone());
        ws.rings.insert(t.to_string(), entry.map.target().clone());
        ws.ring_maps.insert(name.to_string(), (s.to_string(), t.to_string(), entry.map));
    }
    for (name, m) in integer_probes() {
        ws.modules.insert(name.to_string(), ("Z".into(), m));
    }
    let f2 = ws.rings["Z/2"].clone();
    for (name, m) in probes_for(&f2).expect("probes over Z/2") {
        ws.modules.insert(format!("F2.{}", name), ("Z/2".into(), m));
    }
    for (ring_name, ring) in ws.rings.clone() {
        ws.modules.insert(format!("{}.regular", ring_name), (ring_name, ModuleOverRing::regular(&ring)));
    }
    let z = ws.modules["Z"].1.clone();
    let doubling = ModuleMap::new(z.clone(), z.clone(), IntegerMatrix::from_rows(&[[2]], 1).unwrap()).unwrap();
    ws.complexes.insert("doubling".into(), ("Z".into(), vec!["Z".into(), "Z".into()], ChainComplex::from_map(&doubling, 1)));
    let ab = FinSet::from_names(&["a", "b"]).unwrap();
    let a = FinSet::from_names(&["a"]).unwrap();
    let bundle = |t: FinSet, b: &FinSet, p: Vec<usize>| Bundle::from_assignment(t, b.clone(), p).unwrap();
    let names = |xs: &[&str]| FinSet::from_names(xs).unwrap();
    ws.bundles.insert("two_one".into(), bundle(names(&["0", "1", "2"]), &ab, vec![0, 0, 1]));
    ws.bundles.insert("point_over_a".into(), bundle(names(&["0"]), &ab, vec![0]));
    ws.bundles.insert("base_ab".into(), Bundle::identity_over(&ab));
    ws.bundles.insert("onto_a".into(), bundle(names(&["0", "1"]), &a, vec![0, 0]));
    ws.bundles.insert("three_over_a".into(), bundle(names(&["x", "y", "z"]), &a, vec![0, 0, 0]));
    ws.bundles.insert("xyz".into(), bundle(names(&["x", "y", "z"]), &ab, vec![0, 0, 1]));
    ws.bundles.insert("x_over_b".into(), bundle(names(&["x"]), &ab, vec![1]));
    let product = trivial_product(&ab, 2).unwrap();
    ws.bundles.insert("ab_times_2".into(), Bundle::new(product));

    let arrow = FinCat::arrow();
    let point = FinCat::discrete(1).with_object_names(vec!["c".into()]).unwrap();
    let span = FinCat::free_on_graph(3, &[(0, 1), (0, 2)]).unwrap().category;
    let z2 = FinCat::cyclic_group(2).unwrap();
    ws.categories.insert("arrow".into(), arrow.clone());
    ws.categories.insert("point".into(), point.clone());
    ws.categories.insert("span".into(), span.clone());
    ws.categories.insert("z2".into(), z2.clone());
    let pick = |d: usize| CatFunctor::new(point.clone(), arrow.clone(), vec![d], vec![arrow.identity(d)]).unwrap();
    ws.functors.insert("pick_d0".into(), ("point".into(), "arrow".into(), pick(0)));
    ws.functors.insert("pick_d1".into(), ("point".into(), "arrow".into(), pick(1)));
    ws.functors.insert("id_arrow".into(), ("arrow".into(), "arrow".into(), CatFunctor::identity(&arrow)));
    ws.functors.insert("id_span".into(), ("span".into(), "span".into(), CatFunctor::identity(&span)));
    let to_z2 = CatFunctor::new(point.clone(), z2.clone(), vec![0], vec![0]).unwrap();
    ws.functors.insert("point_to_z2".into(), ("point".into(), "z2".into(), to_z2));

    let pq = names(&["p", "q"]);
    let r = names(&["r"]);
    let collapse = FinSetMap::new(pq.clone(), r.clone(), vec![0, 0]).unwrap();
    let arrow_sets = DiagFunctor::new(&Sets, arrow.clone(), vec![pq.clone(), r.clone()], vec![FinSetMap::identity(&pq), FinSetMap::identity(&r), collapse.clone()]).unwrap();
    ws.diagrams.insert("pq_to_r".into(), ("arrow".into(), Diagram::Sets(arrow_sets.clone())));
    let zz = descent_core::kan::linearize_diagram(&arrow_sets).unwrap();
    ws.diagrams.insert("z2_to_z".into(), ("arrow".into(), Diagram::Groups(zz)));
    let swap = FinSetMap::new(pq.clone(), pq.clone(), vec![1, 0]).unwrap();
    let involution = DiagFunctor::new(&Sets, z2.clone(), vec![pq.clone()], vec![FinSetMap::identity(&pq), swap]).unwrap();
    ws.diagrams.insert("swap_pq".into(), ("z2".into(), Diagram::Sets(involution)));
    ws
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_round_trips() {
        let ws = catalog_workspace();
        let json = ws.to_json().unwrap();
        let again = Workspace::from_json(&json).unwrap();
        assert_eq!(again.to_json().unwrap(), json);
        for (name, (_, m)) in &ws.modules {
            assert_eq!(&again.modules[name].1, m, "{}", name);
        }
    }

    #[test]
    fn dangling_reference_rejected() {
        let err = Workspace::from_json(r#"{"modules": {"M": {"ring": "R", "generators": 1, "actions": [[[1]]]}}}"#).unwrap_err();
        assert!(err.to_string().contains("unknown ring \"R\""), "{}", err);
    }

    #[test]
    fn parse_error_has_location() {
        let err = Workspace::from_json("{\n  \"rings\": [}").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{}", err);
    }
}
