use std::collections::HashSet;
use std::fmt::{self, Debug};
use std::hash::Hash;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::TopologyError;

/// A group given by its operations. Elements handed to the oracle are
/// expected in canonical form, so `==` decides equality in the group.
pub trait Group: Send + Sync {
    type Elem: Clone + Eq + Hash + Debug + Send + Sync + 'static;

    fn name(&self) -> String;
    fn identity(&self) -> Self::Elem;
    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn invert(&self, a: &Self::Elem) -> Self::Elem;

    /// Normal form of a possibly non-canonical representative.
    fn canonical(&self, a: &Self::Elem) -> Self::Elem {
        a.clone()
    }

    /// Every element, when the group is finite.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    fn describe(&self, a: &Self::Elem) -> String {
        format!("{a:?}")
    }

    fn power(&self, a: &Self::Elem, n: i64) -> Self::Elem {
        let mut base = if n < 0 { self.invert(a) } else { a.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.multiply(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.multiply(&base, &base);
            }
        }
        acc
    }

    fn conjugate(&self, x: &Self::Elem, by: &Self::Elem) -> Self::Elem {
        // by^-1 x by
        self.multiply(&self.multiply(&self.invert(by), x), by)
    }
}

/// Decidable membership predicate.
pub struct Subset<E> {
    name: String,
    pred: Arc<dyn Fn(&E) -> bool + Send + Sync>,
}

impl<E> Clone for Subset<E> {
    fn clone(&self) -> Self {
        Subset { name: self.name.clone(), pred: Arc::clone(&self.pred) }
    }
}

impl<E> Debug for Subset<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Subset").field(&self.name).finish()
    }
}

impl<E> Subset<E> {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn contains(&self, e: &E) -> bool {
        (self.pred)(e)
    }
}

impl<E: 'static> Subset<E> {
    pub fn new(name: impl Into<String>, pred: impl Fn(&E) -> bool + Send + Sync + 'static) -> Self {
        Subset { name: name.into(), pred: Arc::new(pred) }
    }

    pub fn whole() -> Self {
        Subset::new("G", |_| true)
    }

    pub fn empty() -> Self {
        Subset::new("{}", |_| false)
    }

    pub fn complement_of(excluded: impl IntoIterator<Item = E>) -> Self
    where
        E: Eq + Hash + Debug + Send + Sync,
    {
        let set: HashSet<E> = excluded.into_iter().collect();
        let name = format!("G \\ {{{} points}}", set.len());
        Subset::new(name, move |e| !set.contains(e))
    }

    pub fn intersection(&self, other: &Subset<E>) -> Self {
        let (a, b) = (self.clone(), other.clone());
        Subset::new(format!("({}) & ({})", a.name, b.name), move |e| a.contains(e) && b.contains(e))
    }

    /// `phi^-1(U)` for a map `phi` into the group carrying `self`.
    pub fn preimage<D: 'static>(&self, name: impl Into<String>, phi: impl Fn(&D) -> E + Send + Sync + 'static) -> Subset<D> {
        let target = self.clone();
        Subset::new(name, move |d| target.contains(&phi(d)))
    }
}

impl<E: Clone + Send + Sync + 'static> Subset<E> {
    /// The translate `g^-1 U = { h : g h in U }`.
    pub fn left_translate<G>(&self, group: Arc<G>, g: E) -> Self
    where
        G: super::Group<Elem = E> + 'static,
    {
        let u = self.clone();
        let name = format!("g^-1 ({})", u.name);
        Subset::new(name, move |h| u.contains(&group.multiply(&g, h)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Order {
    Finite(u64),
    Infinite,
}

#[derive(Clone, Debug)]
pub struct Generator<E> {
    pub element: E,
    pub order: Order,
}

/// Marked generators with their declared orders. When the set is declared
/// closed under conjugation, `closure` recognizes members of the full
/// (possibly infinite) conjugation-closed set.
#[derive(Clone, Debug)]
pub struct GeneratingSet<E> {
    pub generators: Vec<Generator<E>>,
    pub conjugation_closed: bool,
    pub closure: Option<Subset<E>>,
}

impl<E: Clone + Eq + Hash + Debug + Send + Sync + 'static> GeneratingSet<E> {
    pub fn new(generators: Vec<(E, Order)>) -> Self {
        GeneratingSet {
            generators: generators.into_iter().map(|(element, order)| Generator { element, order }).collect(),
            conjugation_closed: false,
            closure: None,
        }
    }

    pub fn conjugation_closed(mut self, closure: Subset<E>) -> Self {
        self.conjugation_closed = true;
        self.closure = Some(closure);
        self
    }

    pub fn elements(&self) -> impl Iterator<Item = &E> {
        self.generators.iter().map(|g| &g.element)
    }

    /// Checks declared orders exactly and, for conjugation-closed sets, that
    /// the generators and their conjugates by `sample` satisfy the predicate.
    pub fn validate<G: Group<Elem = E>>(&self, group: &G, sample: &[E]) -> Result<(), TopologyError> {
        let id = group.identity();
        for (index, gen) in self.generators.iter().enumerate() {
            if let Order::Finite(d) = gen.order {
                let mut p = id.clone();
                let mut ok = d >= 1;
                for k in 1..=d {
                    p = group.multiply(&p, &gen.element);
                    if (p == id) != (k == d) {
                        ok = false;
                        break;
                    }
                }
                if !ok {
                    return Err(TopologyError::WrongOrder {
                        index,
                        element: group.describe(&gen.element),
                        declared: d,
                    });
                }
            }
        }
        if self.conjugation_closed {
            let member = self.closure.as_ref().ok_or(TopologyError::MissingClosurePredicate)?;
            for gen in &self.generators {
                let x = &gen.element;
                for g in std::iter::once(&id).chain(sample) {
                    let c = group.conjugate(x, g);
                    if !member.contains(&c) {
                        return Err(TopologyError::ConjugateNotMember {
                            generator: group.describe(x),
                            by: group.describe(g),
                            conjugate: group.describe(&c),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}
