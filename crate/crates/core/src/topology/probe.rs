use std::collections::{BTreeSet, HashSet, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{GeneratingSet, Group, Order, Subset, TopologyError};
use crate::Window;

/// Which coset ray through `g` is walked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CosetSide {
    /// `g x^n`
    Left,
    /// `x^n g`
    Right,
}

impl CosetSide {
    pub const BOTH: [CosetSide; 2] = [CosetSide::Left, CosetSide::Right];
}

/// `{ n in w : g x^n not in U }` (left) or `{ n in w : x^n g not in U }` (right).
///
/// The walk costs one group multiplication per step after a single power.
pub fn coset_exception_set<G: Group>(
    group: &G,
    u: &Subset<G::Elem>,
    g: &G::Elem,
    x: &G::Elem,
    w: &Window,
    side: CosetSide,
) -> BTreeSet<i64> {
    let mut out = BTreeSet::new();
    let Some(start) = w.iter().next() else {
        return out;
    };
    let xs = group.power(x, start);
    let mut cur = match side {
        CosetSide::Left => group.multiply(g, &xs),
        CosetSide::Right => group.multiply(&xs, g),
    };
    for n in w.iter() {
        if !u.contains(&cur) {
            out.insert(n);
        }
        cur = match side {
            CosetSide::Left => group.multiply(&cur, x),
            CosetSide::Right => group.multiply(x, &cur),
        };
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionEntry {
    pub point: String,
    pub generator: usize,
    pub side: CosetSide,
    pub exceptions: Vec<i64>,
    /// Every exception lies in the inner window.
    pub confined: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionReport {
    pub subset: String,
    pub window: Window,
    pub entries: Vec<ExceptionEntry>,
    /// No sampled point was in the subset, so nothing was tested.
    pub vacuous: bool,
    pub consistent_with_open: bool,
}

/// Walks both coset rays for every sampled point of `u` and every generator.
///
/// The verdict is window-relative: "consistent with open" means no exception
/// falls outside the inner window.
pub fn openness_probe<G: Group>(
    group: &G,
    u: &Subset<G::Elem>,
    sample: &[G::Elem],
    gens: &GeneratingSet<G::Elem>,
    w: &Window,
) -> ExceptionReport {
    let points: Vec<&G::Elem> = sample.iter().filter(|g| u.contains(g)).collect();
    let jobs: Vec<(&G::Elem, usize, CosetSide)> = points
        .iter()
        .flat_map(|&g| {
            (0..gens.generators.len()).flat_map(move |i| CosetSide::BOTH.map(|s| (g, i, s)))
        })
        .collect();
    let entries: Vec<ExceptionEntry> = jobs
        .par_iter()
        .map(|&(g, i, side)| {
            let x = &gens.generators[i].element;
            let exc = coset_exception_set(group, u, g, x, w, side);
            let confined = exc.iter().all(|&n| w.in_inner(n));
            ExceptionEntry {
                point: group.describe(g),
                generator: i,
                side,
                exceptions: exc.into_iter().collect(),
                confined,
            }
        })
        .collect();
    ExceptionReport {
        subset: u.name().to_string(),
        window: *w,
        vacuous: points.is_empty(),
        consistent_with_open: entries.iter().all(|e| e.confined),
        entries,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseReport<E> {
    /// Elements forced into any open set containing the seed, in discovery order.
    pub closure: Vec<E>,
    pub group_order: usize,
    pub whole_group: bool,
}

/// Closure of `{seed}` under `g -> g x` and `g -> g x^-1` for torsion
/// generators: any open set containing `g` must contain `g x^(1 + kd) = g x`.
pub fn finite_order_collapse<G: Group>(
    group: &G,
    gens: &GeneratingSet<G::Elem>,
    seed: &G::Elem,
) -> Result<CollapseReport<G::Elem>, TopologyError> {
    let all = group.elements().ok_or_else(|| TopologyError::NotFinite(group.name()))?;
    let mut steps = Vec::new();
    for (i, gen) in gens.generators.iter().enumerate() {
        let Order::Finite(d) = gen.order else {
            return Err(TopologyError::InfiniteGenerator(i));
        };
        let x = &gen.element;
        // the forcing identity g x^(1+d) = g x, checked on the generator itself
        if group.power(x, 1 + d as i64) != *x {
            return Err(TopologyError::WrongOrder { index: i, element: group.describe(x), declared: d });
        }
        steps.push(x.clone());
        steps.push(group.invert(x));
    }
    let seed = group.canonical(seed);
    let mut seen: HashSet<G::Elem> = HashSet::from([seed.clone()]);
    let mut closure = vec![seed.clone()];
    let mut queue = VecDeque::from([seed]);
    while let Some(g) = queue.pop_front() {
        for s in &steps {
            let h = group.multiply(&g, s);
            if seen.insert(h.clone()) {
                closure.push(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(CollapseReport { whole_group: closure.len() == all.len(), group_order: all.len(), closure })
}

/// Checks `x^n g == g (g^-1 x g)^n` over the sample and that each conjugate
/// `g^-1 x g` is recognized by the set's membership predicate.
pub fn conjugation_transport_check<G: Group>(
    group: &G,
    gens: &GeneratingSet<G::Elem>,
    sample: &[G::Elem],
    powers: std::ops::RangeInclusive<i64>,
) -> Result<(), TopologyError> {
    if !gens.conjugation_closed {
        return Err(TopologyError::NotConjugationClosed);
    }
    let member = gens.closure.as_ref().ok_or(TopologyError::MissingClosurePredicate)?;
    for g in sample {
        for x in gens.elements() {
            let y = group.conjugate(x, g);
            if !member.contains(&y) {
                return Err(TopologyError::ConjugateNotMember {
                    generator: group.describe(x),
                    by: group.describe(g),
                    conjugate: group.describe(&y),
                });
            }
            for n in powers.clone() {
                let lhs = group.multiply(&group.power(x, n), g);
                let rhs = group.multiply(g, &group.power(&y, n));
                if lhs != rhs {
                    return Err(TopologyError::TransportIdentity {
                        g: group.describe(g),
                        x: group.describe(x),
                        n,
                    });
                }
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness<E> {
    /// A point of `U ∩ V`.
    Found(E),
    /// The search ran out before eliminating every letter; not a disproof.
    Exhausted { letters_left: usize },
}

fn check_decomposition<G: Group>(
    group: &G,
    g: &G::Elem,
    h: &G::Elem,
    letters: &[(G::Elem, i64)],
) -> Result<(), TopologyError> {
    let got = letters.iter().fold(g.clone(), |acc, (x, i)| group.multiply(&acc, &group.power(x, *i)));
    if got != *h {
        return Err(TopologyError::InvalidDecomposition {
            got: group.describe(&got),
            expected: group.describe(h),
        });
    }
    Ok(())
}

fn require_member<G: Group>(group: &G, s: &Subset<G::Elem>, e: &G::Elem) -> Result<(), TopologyError> {
    if s.contains(e) {
        Ok(())
    } else {
        Err(TopologyError::NotMember { element: group.describe(e), subset: s.name().to_string() })
    }
}

/// Shared letter-elimination loop. For the last letter `x^i` it looks for
/// `n` with `h x^n in V` and `g x^(i + n) in U`, moves both points, and
/// conjugates the remaining letters by `x^-(i+n)`.
fn eliminate<G: Group, I: Iterator<Item = i64>>(
    group: &G,
    u: &Subset<G::Elem>,
    v: &Subset<G::Elem>,
    mut g: G::Elem,
    mut h: G::Elem,
    mut letters: Vec<(G::Elem, i64)>,
    candidates: impl Fn() -> I,
) -> Witness<G::Elem> {
    while let Some((x, i)) = letters.pop() {
        let step = candidates().find_map(|n| {
            let hn = group.multiply(&h, &group.power(&x, n));
            if !v.contains(&hn) {
                return None;
            }
            let m = i + n;
            let gm = group.multiply(&g, &group.power(&x, m));
            u.contains(&gm).then_some((m, gm, hn))
        });
        let Some((m, gm, hn)) = step else {
            return Witness::Exhausted { letters_left: letters.len() + 1 };
        };
        let xm = group.power(&x, m);
        for (y, _) in letters.iter_mut() {
            *y = group.conjugate(y, &xm);
        }
        g = gm;
        h = hn;
    }
    debug_assert_eq!(g, h);
    Witness::Found(g)
}

/// Produces a point of `U ∩ V` from `g in U`, `h in V` and a decomposition
/// `h = g x_1^(i_1) ... x_k^(i_k)` by eliminating one letter at a time.
/// `budget` bounds how many values of `n` (in order 0, 1, -1, 2, ...) are
/// tried per letter.
#[allow(clippy::too_many_arguments)]
pub fn intersection_witness<G: Group>(
    group: &G,
    gens: &GeneratingSet<G::Elem>,
    u: &Subset<G::Elem>,
    v: &Subset<G::Elem>,
    g: &G::Elem,
    h: &G::Elem,
    decomposition: &[(G::Elem, i64)],
    budget: usize,
) -> Result<Witness<G::Elem>, TopologyError> {
    if !gens.conjugation_closed {
        return Err(TopologyError::NotConjugationClosed);
    }
    require_member(group, u, g)?;
    require_member(group, v, h)?;
    check_decomposition(group, g, h, decomposition)?;
    let candidates = || std::iter::once(0).chain((1..).flat_map(|k| [k, -k])).take(budget);
    Ok(eliminate(group, u, v, g.clone(), h.clone(), decomposition.to_vec(), candidates))
}

/// Density variant: `V` need not be open, only hit infinitely often along
/// every ray through it. With `hypothesis_sample`, that is first checked:
/// for each sampled `v in V` and generator `x`, some `v x^n in V` must lie
/// outside the inner window. Candidates for `n` are drawn from `w`.
#[allow(clippy::too_many_arguments)]
pub fn density_probe<G: Group>(
    group: &G,
    gens: &GeneratingSet<G::Elem>,
    v: &Subset<G::Elem>,
    hypothesis_sample: Option<&[G::Elem]>,
    u: &Subset<G::Elem>,
    g: &G::Elem,
    h: &G::Elem,
    decomposition: &[(G::Elem, i64)],
    w: &Window,
) -> Result<Witness<G::Elem>, TopologyError> {
    if !gens.conjugation_closed {
        return Err(TopologyError::NotConjugationClosed);
    }
    if let Some(sample) = hypothesis_sample {
        for p in sample.iter().filter(|p| v.contains(p)) {
            for x in gens.elements() {
                let hits_complement = coset_exception_set(group, v, p, x, w, CosetSide::Left);
                let far_hit = w.iter().any(|n| !w.in_inner(n) && !hits_complement.contains(&n));
                if !far_hit {
                    return Err(TopologyError::HypothesisViolated {
                        v: group.describe(p),
                        x: group.describe(x),
                    });
                }
            }
        }
    }
    require_member(group, u, g)?;
    require_member(group, v, h)?;
    check_decomposition(group, g, h, decomposition)?;
    Ok(eliminate(group, u, v, g.clone(), h.clone(), decomposition.to_vec(), || w.by_magnitude()))
}

type Sample<E> = (E, E);

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MorphismReport {
    pub products_checked: usize,
    pub rays_compared: usize,
}

/// For each sampled `(g, x)`: the exception set of `phi^-1(U_H)` along the
/// ray of `g` and `x` equals that of `U_H` along the ray of `phi(g)` and
/// `phi(x)`, on both sides. Multiplicativity of `phi` is checked first.
pub fn morphism_pullback_check<G: Group, H: Group>(
    source: &G,
    target: &H,
    phi: impl Fn(&G::Elem) -> H::Elem + Send + Sync + Clone + 'static,
    u_target: &Subset<H::Elem>,
    samples: &[(G::Elem, G::Elem)],
    w: &Window,
) -> Result<MorphismReport, TopologyError>
where
    G::Elem: 'static,
    H::Elem: 'static,
{
    let mut products = 0;
    for (g, x) in samples {
        for (a, b) in [(g, x), (x, g), (g, g), (x, x)] {
            if phi(&source.multiply(a, b)) != target.multiply(&phi(a), &phi(b)) {
                return Err(TopologyError::NotHomomorphism {
                    a: source.describe(a),
                    b: source.describe(b),
                });
            }
            products += 1;
        }
    }
    let pulled = u_target.preimage(format!("phi^-1({})", u_target.name()), phi.clone());
    let jobs: Vec<(&Sample<G::Elem>, CosetSide)> =
        samples.iter().flat_map(|s| CosetSide::BOTH.map(|side| (s, side))).collect();
    let mismatch = jobs.par_iter().find_map_first(|&((g, x), side)| {
        let lhs = coset_exception_set(source, &pulled, g, x, w, side);
        let rhs = coset_exception_set(target, u_target, &phi(g), &phi(x), w, side);
        (lhs != rhs).then(|| TopologyError::PullbackMismatch {
            g: source.describe(g),
            x: source.describe(x),
            side,
            pulled: lhs.into_iter().collect(),
            image: rhs.into_iter().collect(),
        })
    });
    match mismatch {
        Some(e) => Err(e),
        None => Ok(MorphismReport { products_checked: products, rays_compared: jobs.len() }),
    }
}
