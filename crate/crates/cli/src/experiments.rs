//! One runner per subcommand; each returns a self-describing report.

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use twistlab::farey::{intersection_number, twist_coset_distance_scan, Slope};
use twistlab::heegaard::{coset_scan, lens_space, DiskSystem, HeegaardData};
use twistlab::homology::{
    chain_curve_classes, fixed_class_coset_scan, fixed_classes, stretch_lower_bound, word_to_matrix, HomologyClass,
    TwistWord,
};
use twistlab::linalg::{determinant, smith_normal_form};
use twistlab::topology::zoo::{Cyclic, Dihedral, FreeGroup2, Heisenberg, IntegerLattice, Symmetric};
use twistlab::topology::{
    conjugation_transport_check, finite_order_collapse, openness_probe, GeneratingSet, Group, Order, Subset,
};
use twistlab::{IntMatrix, Window};

use crate::config::{ExperimentConfig, Kind};
use crate::report::Report;

/// The documented generator: ChaCha with 8 rounds, seeded through
/// `seed_from_u64`.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn run(kind: Kind, cfg: &ExperimentConfig) -> Result<Report> {
    cfg.validate(kind)?;
    let w = cfg.window()?;
    let mut rng = rng(cfg.seed);
    let config = cfg.effective(kind);
    match kind {
        Kind::TopologyProbe => topology(cfg, &w, &mut rng, config),
        Kind::HeegaardScan => heegaard(cfg, &w, &mut rng, config),
        Kind::FareyScan => farey(cfg, &w, &mut rng, config),
        Kind::FixedClassScan => fixed_class(cfg, &w, config),
        Kind::Snf => snf(cfg, config),
    }
}

// ---- topology

#[derive(Serialize)]
struct TopologyResult {
    group: String,
    subset: String,
    predicted_open: bool,
    observed_open: bool,
    sample: Vec<String>,
    openness: twistlab::topology::ExceptionReport,
    collapse: Option<CollapseSummary>,
}

#[derive(Serialize)]
struct CollapseSummary {
    closure_size: usize,
    group_order: usize,
    whole_group: bool,
}

fn random_element<G: Group>(group: &G, gens: &GeneratingSet<G::Elem>, rng: &mut ChaCha8Rng) -> G::Elem {
    let len = rng.random_range(0..=6);
    let mut g = group.identity();
    for _ in 0..len {
        let i = rng.random_range(0..gens.generators.len());
        let x = &gens.generators[i].element;
        let step = if rng.random_bool(0.5) { x.clone() } else { group.invert(x) };
        g = group.multiply(&g, &step);
    }
    group.canonical(&g)
}

fn probe_group<G: Group>(
    group: G,
    gens: GeneratingSet<G::Elem>,
    cfg: &ExperimentConfig,
    w: &Window,
    rng: &mut ChaCha8Rng,
    config: serde_json::Value,
) -> Result<Report> {
    let p = &cfg.topology;
    let e = group.identity();
    let subset: Subset<G::Elem> = match p.subset.as_str() {
        "cofinite-identity" => {
            let e = e.clone();
            Subset::new("G \\ {e}", move |x| *x != e)
        }
        "identity" => {
            let e = e.clone();
            Subset::new("{e}", move |x| *x == e)
        }
        "whole" => Subset::whole(),
        "empty" => Subset::empty(),
        other => bail!("unknown subset {other:?}; expected cofinite-identity, identity, whole or empty"),
    };
    // the identity always takes part, so no default subset is probed vacuously
    let sample: Vec<G::Elem> =
        std::iter::once(e.clone()).chain((0..p.samples).map(|_| random_element(&group, &gens, rng))).collect();
    let mut verdicts = Vec::new();
    verdicts.push(("generators_valid".to_string(), gens.validate(&group, &sample).is_ok()));
    let openness = openness_probe(&group, &subset, &sample, &gens, w);
    let finite_gens = gens.generators.iter().all(|g| matches!(g.order, Order::Finite(_)));
    let infinite_gens = gens.generators.iter().all(|g| g.order == Order::Infinite);
    // whole and empty are always open; removing the identity stays open exactly
    // when every generator has infinite order; {e} is never open
    let predicted_open = match p.subset.as_str() {
        "whole" | "empty" => true,
        "cofinite-identity" => infinite_gens,
        _ => false,
    };
    // a sample missing the subset entirely says nothing either way
    if !openness.vacuous {
        verdicts.push(("openness_as_predicted".to_string(), openness.consistent_with_open == predicted_open));
    }
    let collapse = if group.elements().is_some() && finite_gens {
        let r = finite_order_collapse(&group, &gens, &e).map_err(|e| anyhow!(e))?;
        verdicts.push(("collapse_to_whole_group".to_string(), r.whole_group));
        Some(CollapseSummary { closure_size: r.closure.len(), group_order: r.group_order, whole_group: r.whole_group })
    } else {
        None
    };
    if gens.conjugation_closed {
        let ok = conjugation_transport_check(&group, &gens, &sample, -5..=5).is_ok();
        verdicts.push(("conjugation_transport".to_string(), ok));
    }
    let mut csv = String::from("point,generator,side,exceptions\n");
    for entry in &openness.entries {
        let exc: Vec<String> = entry.exceptions.iter().map(ToString::to_string).collect();
        csv.push_str(&format!("\"{}\",{},{:?},{}\n", entry.point, entry.generator, entry.side, exc.join(";")));
    }
    let result = TopologyResult {
        group: group.name(),
        subset: subset.name().to_string(),
        predicted_open,
        observed_open: openness.consistent_with_open,
        sample: sample.iter().map(|g| group.describe(g)).collect(),
        openness,
        collapse,
    };
    Ok(Report::new(config, verdicts, result, Some(csv)))
}

fn topology(cfg: &ExperimentConfig, w: &Window, rng: &mut ChaCha8Rng, config: serde_json::Value) -> Result<Report> {
    match cfg.topology.group.as_str() {
        "z" => probe_group(IntegerLattice::new(1), IntegerLattice::new(1).standard_generators(), cfg, w, rng, config),
        "z2" => probe_group(IntegerLattice::new(2), IntegerLattice::new(2).standard_generators(), cfg, w, rng, config),
        "z3" => probe_group(IntegerLattice::new(3), IntegerLattice::new(3).standard_generators(), cfg, w, rng, config),
        "z5" => probe_group(Cyclic { n: 5 }, Cyclic { n: 5 }.standard_generators(), cfg, w, rng, config),
        "d4" => probe_group(Dihedral { n: 4 }, Dihedral { n: 4 }.reflection_generators(), cfg, w, rng, config),
        "d6" => probe_group(Dihedral { n: 6 }, Dihedral { n: 6 }.reflection_generators(), cfg, w, rng, config),
        "s3" => probe_group(Symmetric { n: 3 }, Symmetric { n: 3 }.transposition_generators(), cfg, w, rng, config),
        "s4" => probe_group(Symmetric { n: 4 }, Symmetric { n: 4 }.transposition_generators(), cfg, w, rng, config),
        "f2" => probe_group(FreeGroup2, FreeGroup2.standard_generators(), cfg, w, rng, config),
        "heisenberg" => probe_group(Heisenberg, Heisenberg.standard_generators(), cfg, w, rng, config),
        other => bail!("unknown group {other:?}; see `twistlab list`"),
    }
}

// ---- heegaard

fn random_class(rng: &mut ChaCha8Rng, genus: usize, bound: i64) -> HomologyClass {
    loop {
        let v: Vec<i64> = (0..2 * genus).map(|_| rng.random_range(-bound..=bound)).collect();
        let g = v.iter().fold(0i64, |a, &b| num_integer::Integer::gcd(&a, &b));
        if g != 0 {
            return HomologyClass::from_i64(&v.iter().map(|x| x / g).collect::<Vec<_>>());
        }
    }
}

fn random_word(rng: &mut ChaCha8Rng, genus: usize, len: usize) -> TwistWord {
    let mut w = TwistWord::empty();
    for _ in 0..len {
        let c = random_class(rng, genus, 2);
        w.push(c, rng.random_range(-2..=2));
    }
    w
}

fn random_splitting(rng: &mut ChaCha8Rng, genus: usize) -> Result<HeegaardData> {
    let a = DiskSystem::standard_a(genus).map(&word_to_matrix(&random_word(rng, genus, 3), genus)?);
    let b = DiskSystem::standard_a(genus).map(&word_to_matrix(&random_word(rng, genus, 3), genus)?);
    Ok(HeegaardData::new(a, b, random_word(rng, genus, 4))?)
}

fn heegaard(cfg: &ExperimentConfig, w: &Window, rng: &mut ChaCha8Rng, config: serde_json::Value) -> Result<Report> {
    let p = &cfg.heegaard;
    let h = match (&p.splitting, p.random_genus) {
        (Some(h), _) => h.clone(),
        (None, Some(g)) => random_splitting(rng, g)?,
        (None, None) => lens_space(p.lens[0], p.lens[1])?,
    };
    let g = h.genus();
    let c = match &p.twist_class {
        Some(v) => HomologyClass::from_i64(v),
        None => HomologyClass::basis(g, g),
    };
    let report = coset_scan(&h, &c, w, &p.primes, p.side)?;
    let csv = report.to_csv();
    #[derive(Serialize)]
    struct HeegaardResult<'a> {
        splitting: &'a HeegaardData,
        scan: &'a twistlab::heegaard::ScanReport,
    }
    Ok(Report::new(config, report.verdicts(), HeegaardResult { splitting: &h, scan: &report }, Some(csv)))
}

// ---- farey

fn random_slope(rng: &mut ChaCha8Rng, h: i64) -> Slope {
    loop {
        let (p, q) = (rng.random_range(-h..=h), rng.random_range(0..=h));
        if let Ok(s) = Slope::new(p, q) {
            return s;
        }
    }
}

fn farey(cfg: &ExperimentConfig, w: &Window, rng: &mut ChaCha8Rng, config: serde_json::Value) -> Result<Report> {
    let p = &cfg.farey;
    if p.max_height < 1 {
        bail!("max_height must be at least 1");
    }
    let c = p.c.unwrap_or_else(|| random_slope(rng, p.max_height));
    let mut draw = |given: Option<Slope>| {
        given.unwrap_or_else(|| loop {
            let s = random_slope(rng, p.max_height);
            if intersection_number(&s, &c) > 0 {
                break s;
            }
        })
    };
    let a = draw(p.a);
    let b = draw(p.b);
    let scan = twist_coset_distance_scan(&a, &b, &c, w)?;
    let csv = scan.to_csv();
    Ok(Report::new(config, scan.verdicts(), &scan, Some(csv)))
}

// ---- fixed classes

/// `T_{c_1}^{-1} T_{c_2} T_{c_3}^{-1} ...` over the chain. At genus one only
/// the first two classes are used, which gives `[[2, 1], [1, 1]]`.
fn default_word(genus: usize) -> Result<TwistWord> {
    let chain = chain_curve_classes(genus)?;
    let used = if genus == 1 { &chain[..2] } else { &chain[..] };
    let mut w = TwistWord::empty();
    for (i, c) in used.iter().enumerate() {
        w.push(c.clone(), if i % 2 == 0 { -1 } else { 1 });
    }
    Ok(w)
}

fn fixed_class(cfg: &ExperimentConfig, w: &Window, config: serde_json::Value) -> Result<Report> {
    let p = &cfg.fixed_class;
    let g = p.genus;
    let word = match &p.word {
        Some(word) => word.clone(),
        None => default_word(g)?,
    };
    let c = match &p.class {
        Some(v) => HomologyClass::from_i64(v),
        None => HomologyClass::basis(g.max(1), 0),
    };
    let f = word_to_matrix(&word, g)?;
    let scan = fixed_class_coset_scan(&word, &c, w)?;
    let stretch = stretch_lower_bound(&f);
    let verdicts = vec![
        ("stretch_at_least_one".to_string(), stretch.value() >= 1.0),
        ("exceptions_confined".to_string(), scan.confined),
    ];
    let mut csv = String::from("n,fixed_rank\n");
    for r in &scan.rows {
        csv.push_str(&format!("{},{}\n", r.n, r.fixed_rank));
    }
    #[derive(Serialize)]
    struct FixedResult<'a> {
        word: &'a TwistWord,
        matrix: &'a IntMatrix,
        stretch_lower_bound: twistlab::homology::SpectralBound,
        fixed_classes_of_word: Vec<HomologyClass>,
        scan: &'a twistlab::homology::FixedClassScan,
    }
    let result = FixedResult {
        word: &word,
        matrix: f.matrix(),
        stretch_lower_bound: stretch,
        fixed_classes_of_word: fixed_classes(&f),
        scan: &scan,
    };
    Ok(Report::new(config, verdicts, result, Some(csv)))
}

// ---- smith normal form

fn snf(cfg: &ExperimentConfig, config: serde_json::Value) -> Result<Report> {
    let a = cfg.snf.matrix.clone().context("no matrix given")?;
    let s = smith_normal_form(&a);
    let nonzero: Vec<&BigInt> = s.diag.iter().filter(|d| **d != BigInt::from(0)).collect();
    let divides = nonzero.windows(2).all(|p| (p[1] % p[0]) == BigInt::from(0));
    let unit = |m: &IntMatrix| determinant(m).map(|d| d == BigInt::from(1) || d == BigInt::from(-1)).unwrap_or(false);
    let verdicts = vec![
        ("reconstruction".to_string(), s.verify(&a)),
        ("divisibility_chain".to_string(), divides),
        ("unimodular_transforms".to_string(), unit(&s.u) && unit(&s.v)),
    ];
    let csv = {
        let diag: Vec<String> = s.diag.iter().map(ToString::to_string).collect();
        format!("index,d\n{}", diag.iter().enumerate().map(|(i, d)| format!("{i},{d}\n")).collect::<String>())
    };
    #[derive(Serialize)]
    struct SnfResult<'a> {
        matrix: &'a IntMatrix,
        smith: &'a twistlab::IntSmithForm,
    }
    Ok(Report::new(config, verdicts, SnfResult { matrix: &a, smith: &s }, Some(csv)))
}

// ---- catalog

#[derive(Serialize)]
pub struct Catalog {
    pub tool: &'static str,
    pub version: &'static str,
    pub groups: Vec<twistlab::topology::zoo::CatalogEntry>,
    pub disk_systems: Vec<DiskPair>,
    pub chain_curves: Vec<ChainFamily>,
    pub subsets: Vec<&'static str>,
}

#[derive(Serialize)]
pub struct DiskPair {
    pub genus: usize,
    pub a_system: DiskSystem,
    pub b_system: DiskSystem,
}

#[derive(Serialize)]
pub struct ChainFamily {
    pub genus: usize,
    pub classes: Vec<HomologyClass>,
}

pub fn list_builtins() -> Catalog {
    let genera = 1..=4;
    Catalog {
        tool: crate::report::TOOL,
        version: crate::report::VERSION,
        groups: twistlab::topology::zoo::catalog(),
        disk_systems: genera
            .clone()
            .map(|g| DiskPair { genus: g, a_system: DiskSystem::standard_a(g), b_system: DiskSystem::standard_b(g) })
            .collect(),
        chain_curves: genera
            .map(|g| ChainFamily { genus: g, classes: chain_curve_classes(g).expect("genus >= 1") })
            .collect(),
        subsets: vec!["cofinite-identity", "identity", "whole", "empty"],
    }
}

/// Parses `[[a, b], [c, d]]`.
pub fn parse_matrix(s: &str) -> Result<IntMatrix> {
    serde_json::from_str(s).context("matrix must be a JSON array of integer rows")
}

/// Parses `p,q` or `p/q`.
pub fn parse_pair(s: &str) -> Result<[i64; 2]> {
    let parts: Vec<&str> = s.split([',', '/']).map(str::trim).collect();
    match parts.as_slice() {
        [p, q] => Ok([p.parse().context("p")?, q.parse().context("q")?]),
        _ => bail!("expected p,q"),
    }
}
