//! Command dispatch: each command reads `key=value` arguments, runs one
//! computation from `descent-core` and fills a [`Report`].

use std::collections::{BTreeMap, BTreeSet};

use descent_core::algebra::catalog::{probes_for, ring_map_catalog};
use descent_core::algebra::{smith_normal_form, IntegerMatrix, ModuleOverRing, RingMap};
use descent_core::codescent::random::{random_instance, random_surjective_instance, InstanceBounds};
use descent_core::codescent::{
    barr_contractibility_from_section, beck_codescent_check, cech_level_size, cech_nerve, comonad_k_phi,
    detect_coalgebra, Bundle, CoalgebraSearch, FinSetMap, SliceCategory,
};
use descent_core::descent::{
    adjunction_iso_check, algebra_family, amitsur_cohomology_range, amitsur_complex, beck_descent_check, can_phi,
    can_prim_unit, descent_coring, descent_e2_range, monad_t_phi, restricted_module_sdr, strict_completion_check,
    validate_descent_datum, Completion,
};
use descent_core::kan::random::{
    random_cosimplicial_group, random_free_category, random_full_functor, random_group_diagram, random_set_diagram,
    CategoryBounds,
};
use descent_core::kan::{
    assembly_pi0_check, fullness_identity_check, kan_comonad, CatFunctor, DiagFunctor, FullnessVerdict, Sets,
    ValueCategory,
};
use descent_core::simplicial::{
    check_comonad_laws, check_monad_laws, cohomotopy, latching_object, matching_object, unnormalized_cohomology,
    Category, Contractibility, LawReport, Modules,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::CliError;
use crate::report::Report;
use crate::workspace::{Diagram, Workspace};

pub const COMMANDS: &[&str] = &[
    "check-beck",
    "amitsur",
    "e2",
    "coring",
    "can",
    "prim",
    "sdr",
    "strict-complete",
    "adjunction-iso",
    "cech",
    "codescent-beck",
    "coalgebra",
    "kan",
    "kan-assembly",
    "laws",
    "matching",
    "selftest",
];

/// A workspace with the run settings that commands may read.
pub struct Context {
    pub workspace: Workspace,
    pub truncation: usize,
    pub seed: u64,
}

impl Context {
    pub fn new(workspace: Workspace) -> Self {
        let truncation = workspace.truncation;
        Context { workspace, truncation, seed: 0 }
    }
}

/// Parsed `key=value` arguments, checked against what a command accepts.
struct Args {
    values: BTreeMap<String, String>,
}

impl Args {
    fn parse(command: &str, raw: &[String], allowed: &[&str]) -> Result<Self, CliError> {
        let mut values = BTreeMap::new();
        for a in raw {
            let (k, v) = a.split_once('=').ok_or_else(|| CliError::usage(format!("argument {:?} is not key=value", a)))?;
            if !allowed.contains(&k) {
                return Err(CliError::usage(format!("{} takes {}; got {:?}", command, allowed.join(", "), k)));
            }
            if values.insert(k.to_string(), v.to_string()).is_some() {
                return Err(CliError::usage(format!("argument {:?} given twice", k)));
            }
        }
        Ok(Args { values })
    }

    fn req(&self, key: &str) -> Result<&str, CliError> {
        self.values.get(key).map(String::as_str).ok_or_else(|| CliError::usage(format!("missing argument {}=…", key)))
    }

    fn opt(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }
}

/// `a..b` (inclusive) or a single `s`.
fn parse_range(text: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::usage(format!("{:?} is not a degree or a range a..b", text));
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?),
        None => {
            let s = text.parse().map_err(|_| bad())?;
            (s, s)
        }
    };
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

pub fn run_command(ctx: &Context, command: &str, raw: &[String]) -> Result<Report, CliError> {
    let ws = &ctx.workspace;
    let n = ctx.truncation;
    let allowed: &[&str] = match command {
        "check-beck" | "can" | "prim" => &["phi", "m"],
        "amitsur" => &["phi", "m", "source", "s"],
        "e2" => &["phi", "m", "n", "s", "t"],
        "coring" => &["phi"],
        "sdr" | "strict-complete" => &["phi", "n"],
        "adjunction-iso" => &["phi", "x", "y"],
        "cech" | "coalgebra" => &["phi", "f"],
        "codescent-beck" => &["phi", "d"],
        "kan" => &["phi", "y", "c"],
        "kan-assembly" => &["phi", "x", "d"],
        "laws" => &["phi"],
        "matching" => &["phi", "m", "f", "n"],
        "selftest" => &["count"],
        _ => return Err(CliError::usage(format!("unknown command {:?}; commands are {}", command, COMMANDS.join(", ")))),
    };
    let args = Args::parse(command, raw, allowed)?;
    let mut inputs = args.values.clone();
    inputs.insert("truncation".into(), n.to_string());
    let mut r = Report::new(command, inputs);
    match command {
        "check-beck" => {
            let (phi, m) = (ws.ring_map(args.req("phi")?)?, ws.module(args.req("m")?)?);
            let b = beck_descent_check(phi, m)?;
            r.group("C", m);
            r.group("equalizer", &b.equalizer);
            r.note("comparison injective", b.injective);
            r.note("comparison surjective", b.surjective);
            r.verdict("C → TC ⇉ T²C is an equalizer", b.holds);
            if !b.holds {
                r.witness("comparison C → equalizer", b.comparison.matrix());
            }
        }
        "amitsur" => {
            let phi = ws.ring_map(args.req("phi")?)?;
            let receiver = ws.module(args.req("m")?)?;
            let source = match args.opt("source") {
                Some(s) => ws.module(s)?.clone(),
                None => ModuleOverRing::regular(phi.source()),
            };
            let (lo, hi) = degrees(&args, n)?;
            let h = amitsur_cohomology_range(phi, &source, receiver, hi)?;
            for (s, g) in h.iter().enumerate().skip(lo) {
                r.group(format!("H^{}", s), g);
            }
        }
        "e2" => {
            let phi = ws.ring_map(args.req("phi")?)?;
            let (m, nn) = (ws.complex(args.req("m")?)?, ws.complex(args.req("n")?)?);
            let t: i64 = args.opt("t").unwrap_or("0").parse().map_err(|_| CliError::usage("t must be an integer"))?;
            let (lo, hi) = degrees(&args, n)?;
            let e2 = descent_e2_range(phi, &m, &nn, hi, t)?;
            for (s, g) in e2.iter().enumerate().skip(lo) {
                r.group(format!("E2^{{{},{}}}", s, t), g);
            }
        }
        "coring" => {
            let w = descent_coring(ws.ring_map(args.req("phi")?)?)?;
            r.group("A ⊗_B A", &w.bimodule);
            r.checks("", &w.report);
        }
        "can" => {
            let (phi, m) = (ws.ring_map(args.req("phi")?)?, ws.module(args.req("m")?)?);
            let d = can_phi(phi, m)?;
            r.group("A ⊗_B M", &d.module);
            r.checks("", &validate_descent_datum(&d)?);
        }
        "prim" => {
            let (phi, m) = (ws.ring_map(args.req("phi")?)?, ws.module(args.req("m")?)?);
            let u = can_prim_unit(phi, m)?;
            r.group("M", m);
            r.group("Prim Can M", &u.prim);
            r.note("unit injective", u.injective);
            r.note("unit surjective", u.surjective);
            r.verdict("M → Prim Can M is an isomorphism", u.is_isomorphism());
        }
        "sdr" => {
            let phi = ws.ring_map(args.req("phi")?)?;
            let module = target_module(ws, phi, args.opt("n"))?;
            r.group("N", &module);
            let c = restricted_module_sdr(phi, &module, n)?;
            contractibility(&mut r, "cobar object of the restriction of N contracts", &c);
        }
        "strict-complete" => {
            let phi = ws.ring_map(args.req("phi")?)?;
            let module = target_module(ws, phi, args.opt("n"))?;
            let t = monad_t_phi(phi);
            let (z, a) = t.algebra_action(&module)?;
            let family = algebra_family(&t, &a, n)?;
            r.group("Z", &z);
            match strict_completion_check(phi, &z, &family)? {
                Completion::Certified(c) => {
                    r.note("identities checked", c.checked);
                    r.note("identities beyond the truncation", c.unchecked.len());
                    r.verdict("Z is strictly T-complete", true);
                }
                Completion::Refuted(rep) => {
                    for v in &rep.violations {
                        r.witness("violated", v);
                    }
                    r.verdict("Z is strictly T-complete", false);
                }
            }
        }
        "adjunction-iso" => {
            let phi = ws.ring_map(args.req("phi")?)?;
            let (x, y) = (ws.module(args.req("x")?)?, ws.module(args.req("y")?)?);
            let a = adjunction_iso_check(phi, x, y)?;
            r.group("Hom_B(X, TY)", &a.base_side);
            r.group("Hom_desc(Can X, Can TY)", &a.descent_side);
            r.checks("", &a.report);
        }
        "cech" => {
            let (phi, f) = (ws.bundle(args.req("phi")?)?.projection(), ws.bundle(args.req("f")?)?);
            let nerve = cech_nerve(phi, f, n)?;
            for k in 0..=n {
                let size = nerve.level(k).total().len();
                r.note(format!("level {}", k), size);
                r.verdict(format!("level {} has Σ|fiber|^{} elements", k, k + 1), size == cech_level_size(phi, f, k));
            }
            match detect_coalgebra(phi, f)? {
                CoalgebraSearch::Found(_) if phi.is_surjective() => {
                    let sigma = section(phi);
                    let c = barr_contractibility_from_section(phi, &sigma, f, n)?;
                    contractibility(&mut r, "Čech nerve contracts onto f", &c);
                }
                CoalgebraSearch::Found(_) => r.note("contraction", "not attempted: φ has no section"),
                CoalgebraSearch::Refuted { element, base_point } => {
                    r.note("contraction", format!("not attempted: {} lies over {}, which φ misses", element, base_point));
                }
            }
        }
        "codescent-beck" => {
            let (phi, d) = (ws.bundle(args.req("phi")?)?.projection(), ws.bundle(args.req("d")?)?);
            let b = beck_codescent_check(phi, d)?;
            r.note("coequalizer size", b.coequalizer.total().len());
            r.note("D size", d.total().len());
            r.verdict("K²D ⇉ KD → D is a coequalizer", b.holds);
            if let Some((x, base)) = b.witness {
                r.witness("element of D missed by KD → D", format!("{} over {}", x, base));
            }
        }
        "coalgebra" => {
            let (phi, f) = (ws.bundle(args.req("phi")?)?.projection(), ws.bundle(args.req("f")?)?);
            match detect_coalgebra(phi, f)? {
                CoalgebraSearch::Found(c) => {
                    r.note("section", format!("{:?}", c.section));
                    r.checks("coalgebra law", &c.report);
                    r.verdict("f carries a K_φ-coalgebra", c.report.holds());
                }
                CoalgebraSearch::Refuted { element, base_point } => {
                    r.witness("element over a point φ misses", format!("{} over {}", element, base_point));
                    r.verdict("f carries a K_φ-coalgebra", false);
                }
            }
        }
        "kan" => {
            let phi = ws.functor(args.req("phi")?)?;
            let y = ws.diagram(args.req("y")?)?;
            let objects = pick_objects(phi.source(), args.opt("c"))?;
            match y {
                Diagram::Sets(y) => kan_fullness(&mut r, Sets, phi, y, &objects)?,
                Diagram::Groups(y) => kan_fullness(&mut r, Modules, phi, y, &objects)?,
            }
        }
        "kan-assembly" => {
            let phi = ws.functor(args.req("phi")?)?;
            let x = ws.diagram(args.req("x")?)?;
            let objects = pick_objects(phi.target(), args.opt("d"))?;
            match x {
                Diagram::Sets(x) => kan_assembly(&mut r, Sets, phi, x, &objects)?,
                Diagram::Groups(x) => kan_assembly(&mut r, Modules, phi, x, &objects)?,
            }
        }
        "laws" => laws(&mut r, ws, args.req("phi")?)?,
        "matching" => matching(&mut r, ws, &args, n)?,
        "selftest" => {
            let count = match args.opt("count") {
                Some(c) => c.parse().map_err(|_| CliError::usage("count must be a positive integer"))?,
                None => 20,
            };
            r.inputs.insert("seed".into(), ctx.seed.to_string());
            selftest(&mut r, ctx.seed, count)?;
        }
        _ => unreachable!("commands are matched above"),
    }
    Ok(r)
}

/// Degrees `s` to report; the top one must stay below the truncation.
fn degrees(args: &Args, n: usize) -> Result<(usize, usize), CliError> {
    let (lo, hi) = match args.opt("s") {
        Some(s) => parse_range(s)?,
        None => (0, n - 1),
    };
    if hi >= n {
        return Err(CliError::usage(format!("degree {} needs truncation at least {}", hi, hi + 1)));
    }
    Ok((lo, hi))
}

fn target_module(ws: &Workspace, phi: &RingMap, name: Option<&str>) -> Result<ModuleOverRing, CliError> {
    match name {
        Some(n) => Ok(ws.module(n)?.clone()),
        None => Ok(ModuleOverRing::regular(phi.target())),
    }
}

/// The least preimage of each point; `phi` must be surjective.
fn section(phi: &FinSetMap) -> FinSetMap {
    let assignment = (0..phi.target().len()).map(|b| phi.fiber(b)[0]).collect();
    FinSetMap::new(phi.target().clone(), phi.source().clone(), assignment).expect("preimages lie in the source")
}

fn contractibility<C: Category>(r: &mut Report, claim: &str, c: &Contractibility<C>) {
    match c {
        Contractibility::Certified(cert) => {
            r.note("identities checked", cert.checked);
            r.note("identities beyond the truncation", cert.unchecked.len());
        }
        Contractibility::Refuted(_) => {
            for v in c.violations() {
                r.witness("violated", v);
            }
        }
    }
    r.verdict(claim, c.is_certified());
}

fn pick_objects(c: &descent_core::kan::FinCat, name: Option<&str>) -> Result<Vec<usize>, CliError> {
    match name {
        Some(n) => Ok(vec![c.object_index(n).ok_or_else(|| CliError::usage(format!("unknown object {:?}", n)))?]),
        None => Ok((0..c.object_count()).collect()),
    }
}

fn check_diagram_base<V: ValueCategory>(y: &DiagFunctor<V>, phi: &CatFunctor) -> Result<(), CliError>
where
    V::Morphism: PartialEq,
{
    if y.base() != phi.target() {
        return Err(CliError::usage("the diagram must live on the target category of the functor"));
    }
    Ok(())
}

fn kan_fullness<V: ValueCategory>(
    r: &mut Report,
    values: V,
    phi: &CatFunctor,
    y: &DiagFunctor<V>,
    objects: &[usize],
) -> Result<(), CliError>
where
    V::Morphism: PartialEq,
{
    check_diagram_base(y, phi)?;
    let k = kan_comonad(values, phi)?;
    law_checks(r, "comonad law", &[("y".to_string(), y.clone())], |y| check_comonad_laws(&k, std::slice::from_ref(y)))?;
    r.note("Φ full", phi.is_full());
    r.note("Φ faithful", phi.is_faithful());
    for &c in objects {
        let name = &phi.source().objects()[c];
        match fullness_identity_check(&k, y, c)? {
            FullnessVerdict::NotFull => {
                r.witness("fullness", "Φ is not full, so the identity at Φ(c) is not expected");
                r.verdict(format!("K(y)(Φ{}) = y(Φ{})", name, name), false);
            }
            FullnessVerdict::Checked(rep) => r.checks(&format!("at {}", name), &rep),
        }
    }
    Ok(())
}

fn kan_assembly<V: ValueCategory>(
    r: &mut Report,
    values: V,
    phi: &CatFunctor,
    x: &DiagFunctor<V>,
    objects: &[usize],
) -> Result<(), CliError>
where
    V::Morphism: PartialEq,
{
    check_diagram_base(x, phi)?;
    let k = kan_comonad(values.clone(), phi)?;
    for &d in objects {
        let name = &phi.target().objects()[d];
        let a = assembly_pi0_check(&k, x, d)?;
        r.note(format!("coequalizer at {}", name), values.describe(&a.coequalizer));
        r.note(format!("x({})", name), values.describe(x.value(d)));
        r.verdict(format!("K²x ⇉ Kx → x is a coequalizer at {}", name), a.holds);
    }
    Ok(())
}

/// One check per law and named probe.
fn law_checks<T>(
    r: &mut Report,
    prefix: &str,
    probes: &[(String, T)],
    check: impl Fn(&T) -> descent_core::Result<LawReport>,
) -> Result<(), CliError> {
    for (name, p) in probes {
        for c in check(p)?.checks {
            r.verdict(format!("{}: {} on {}", prefix, c.law, name), c.holds);
        }
    }
    Ok(())
}

fn laws(r: &mut Report, ws: &Workspace, name: &str) -> Result<(), CliError> {
    if let Some((_, _, phi)) = ws.ring_maps.get(name) {
        let probes: Vec<(String, ModuleOverRing)> =
            probes_for(phi.source())?.into_iter().map(|(n, m)| (n.to_string(), m)).collect();
        let t = monad_t_phi(phi);
        law_checks(r, "monad law", &probes, |m| check_monad_laws(&t, std::slice::from_ref(m)))?;
    } else if let Some(b) = ws.bundles.get(name) {
        let phi = b.projection();
        let mut probes: Vec<(String, Bundle)> =
            ws.bundles.iter().filter(|(_, x)| x.base() == phi.target()).map(|(n, x)| (n.clone(), x.clone())).collect();
        probes.push(("the base".into(), Bundle::identity_over(phi.target())));
        let k = comonad_k_phi(phi);
        law_checks(r, "comonad law", &probes, |x| check_comonad_laws(&k, std::slice::from_ref(x)))?;
    } else if let Some((_, _, phi)) = ws.functors.get(name) {
        let mut sets = Vec::new();
        let mut groups = Vec::new();
        for (n, (_, d)) in &ws.diagrams {
            match d {
                Diagram::Sets(y) if y.base() == phi.target() => sets.push((n.clone(), y.clone())),
                Diagram::Groups(y) if y.base() == phi.target() => groups.push((n.clone(), y.clone())),
                _ => {}
            }
        }
        if sets.is_empty() && groups.is_empty() {
            return Err(CliError::usage(format!("no diagram lives on the target of {:?}", name)));
        }
        let k = kan_comonad(Sets, phi)?;
        law_checks(r, "comonad law", &sets, |y| check_comonad_laws(&k, std::slice::from_ref(y)))?;
        let k = kan_comonad(Modules, phi)?;
        law_checks(r, "comonad law", &groups, |y| check_comonad_laws(&k, std::slice::from_ref(y)))?;
    } else {
        return Err(CliError::usage(format!("{:?} is not a ring map, bundle or functor", name)));
    }
    Ok(())
}

/// Matching objects of the Amitsur complex for a ring map, latching objects
/// of the Čech nerve for a bundle.
fn matching(r: &mut Report, ws: &Workspace, args: &Args, n: usize) -> Result<(), CliError> {
    let name = args.req("phi")?;
    let levels = match args.opt("n") {
        Some(k) => {
            let k: usize = k.parse().map_err(|_| CliError::usage("n must be a level"))?;
            if k == 0 || k > n {
                return Err(CliError::usage(format!("level {} is outside 1..={}", k, n)));
            }
            vec![k]
        }
        None => (1..=n).collect(),
    };
    if let Some((_, _, phi)) = ws.ring_maps.get(name) {
        let m = ws.module(args.req("m")?)?;
        let x = amitsur_complex(phi, m, n)?;
        for k in levels {
            let c = matching_object(&Modules, &x, k)?;
            r.group(format!("X^{}", k), x.level(k));
            r.group(format!("M_{}", k), &c.object);
            r.note(format!("σ_{} injective", k), c.injective);
            r.note(format!("σ_{} surjective", k), c.surjective);
        }
    } else if let Some(b) = ws.bundles.get(name) {
        let f = ws.bundle(args.req("f")?)?;
        let x = cech_nerve(b.projection(), f, n)?;
        let slice = SliceCategory::new(b.base().clone());
        for k in levels {
            let c = latching_object(&slice, &x, k)?;
            r.note(format!("X_{} size", k), x.level(k).total().len());
            r.note(format!("L_{} size", k), c.object.total().len());
            r.note(format!("latching map {} injective", k), c.injective);
            r.note(format!("latching map {} surjective", k), c.surjective);
        }
    } else {
        return Err(CliError::usage(format!("{:?} is not a ring map or bundle", name)));
    }
    Ok(())
}

/// Seeded property suites; each adds one verdict, with the first failing
/// instance as witness.
fn selftest(r: &mut Report, seed: u64, count: usize) -> Result<(), CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let suite = |r: &mut Report, name: &str, failure: Option<String>, size: usize| {
        r.note(format!("{} instances", name), size);
        if let Some(w) = &failure {
            r.witness(name, w);
        }
        r.verdict(name, failure.is_none());
    };

    let mut failure = None;
    for i in 0..count * 5 {
        use rand::Rng;
        let (rows, cols) = (rng.gen_range(0..=6), rng.gen_range(0..=6));
        let m = IntegerMatrix::random(&mut rng, rows, cols, 9);
        let (a, b) = (smith_normal_form(&m), smith_normal_form(&m));
        let rep = a.verify(&m);
        let same = a.u == b.u && a.v == b.v && a.d == b.d;
        if failure.is_none() && !(rep.holds() && same) {
            failure = Some(format!("matrix {}: {}", i, rep));
        }
    }
    suite(r, "Smith normal form contract", failure, count * 5);

    let mut failure = None;
    for i in 0..count {
        let x = random_cosimplicial_group(&mut rng);
        for s in 0..x.truncation() {
            let (a, b) = (cohomotopy(&x, s)?, unnormalized_cohomology(&x, s)?);
            if failure.is_none() && a.invariant_factors() != b.invariant_factors() {
                failure = Some(format!("instance {} degree {}: {} vs {}", i, s, a, b));
            }
        }
    }
    suite(r, "normalized and unnormalized cohomology agree", failure, count);

    let mut failure = None;
    for i in 0..count {
        let (phi, f) = random_instance(&mut rng, InstanceBounds::default());
        let nerve = cech_nerve(&phi, &f, 4)?;
        for k in 0..=4 {
            if failure.is_none() && nerve.level(k).total().len() != cech_level_size(&phi, &f, k) {
                failure = Some(format!("instance {} level {}", i, k));
            }
        }
    }
    suite(r, "Čech level sizes", failure, count);

    let mut failure = None;
    for i in 0..count {
        let (phi, d) = random_surjective_instance(&mut rng, InstanceBounds::default());
        if failure.is_none() && !beck_codescent_check(&phi, &d)?.holds {
            failure = Some(format!("instance {}: φ = {:?}", i, phi));
        }
    }
    suite(r, "codescent Beck criterion for surjections", failure, count);

    let mut failure = None;
    for i in 0..count {
        let d = random_free_category(&mut rng, CategoryBounds::default());
        let phi = random_full_functor(&mut rng, &d.category, CategoryBounds::default());
        let y = random_set_diagram(&mut rng, &d);
        let g = random_group_diagram(&mut rng, &d);
        let sets = kan_comonad(Sets, &phi)?;
        let groups = kan_comonad(Modules, &phi)?;
        let mut ok = check_comonad_laws(&sets, std::slice::from_ref(&y))?.holds()
            && check_comonad_laws(&groups, std::slice::from_ref(&g))?.holds();
        for c in 0..phi.source().object_count() {
            ok &= fullness_identity_check(&sets, &y, c)?.holds() && fullness_identity_check(&groups, &g, c)?.holds();
        }
        if failure.is_none() && !ok {
            failure = Some(format!("instance {}", i));
        }
    }
    suite(r, "Kan comonad laws and fullness identity", failure, count);

    let mut failure = None;
    let catalog = ring_map_catalog();
    for e in catalog.iter().filter(|e| ["id", "zz2", "zz3"].contains(&e.name)) {
        for (p, m) in probes_for(e.map.source())? {
            if failure.is_none() && !beck_descent_check(&e.map, &m)?.holds {
                failure = Some(format!("{} on {}", e.name, p));
            }
        }
    }
    suite(r, "Beck descent for split maps", failure, 12);

    let mut failure = None;
    let mut seen = BTreeSet::new();
    for e in catalog.iter().filter(|e| ["zz2", "zz3"].contains(&e.name)) {
        for (p, m) in probes_for(e.map.source())?.into_iter().filter(|(p, _)| ["Z", "Z^2"].contains(p)) {
            let h = amitsur_cohomology_range(&e.map, &ModuleOverRing::regular(e.map.source()), &m, 3)?;
            let ok = h[0].invariant_factors() == m.underlying().invariant_factors() && h[1..].iter().all(|g| g.is_trivial());
            seen.insert((e.name, p));
            if failure.is_none() && !ok {
                failure = Some(format!("{} with M = {}", e.name, p));
            }
        }
    }
    suite(r, "Amitsur cohomology of diagonal maps", failure, seen.len());
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::workspace::catalog_workspace;

    fn run(command: &str, args: &[&str]) -> Result<Report, CliError> {
        let ctx = Context::new(catalog_workspace());
        run_command(&ctx, command, &args.iter().map(|s| s.to_string()).collect::<Vec<_>>())
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("0..3").unwrap(), (0, 3));
        assert_eq!(parse_range("2").unwrap(), (2, 2));
        assert!(parse_range("3..1").is_err());
    }

    #[test]
    fn amitsur_for_diagonal() {
        let r = run("amitsur", &["phi=zz2", "m=Z", "s=0..3"]).unwrap();
        let values: Vec<&str> = r.groups.iter().map(|g| g.value.as_str()).collect();
        assert_eq!(values, ["Z", "0", "0", "0"]);
    }

    #[test]
    fn beck_for_identity() {
        assert!(run("check-beck", &["phi=id", "m=Z"]).unwrap().holds());
        let r = run("check-beck", &["phi=z2", "m=Z"]).unwrap();
        assert!(!r.holds());
        assert_eq!(r.groups[1].value, "Z/2");
    }

    #[test]
    fn arity_errors() {
        assert!(run("check-beck", &["phi=id"]).is_err());
        assert!(run("check-beck", &["phi=id", "m=Z", "q=1"]).is_err());
        assert!(run("nonsense", &[]).is_err());
        assert!(run("amitsur", &["phi=zz2", "m=Z", "s=0..4"]).is_err());
    }

    #[test]
    fn codescent_refutation_names_witness() {
        let r = run("codescent-beck", &["phi=point_over_a", "d=xyz"]).unwrap();
        assert!(!r.holds());
        assert_eq!(r.witnesses[0].value, "z over b");
    }
}
