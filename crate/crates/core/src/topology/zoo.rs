//! Built-in groups: enough variety to exercise every branch of the
//! finite-order / infinite-order dichotomy.

use serde::{Deserialize, Serialize};

use super::{GeneratingSet, Group, Order, Subset};

/// `Z^d` with the standard basis as generators.
#[derive(Clone, Debug)]
pub struct IntegerLattice {
    pub dim: usize,
}

impl IntegerLattice {
    pub fn new(dim: usize) -> Self {
        assert!(dim >= 1);
        IntegerLattice { dim }
    }

    pub fn basis(&self, i: usize) -> Vec<i64> {
        let mut e = vec![0; self.dim];
        e[i] = 1;
        e
    }

    pub fn standard_generators(&self) -> GeneratingSet<Vec<i64>> {
        // abelian: every conjugate of a generator is the generator itself
        let basis: Vec<Vec<i64>> = (0..self.dim).map(|i| self.basis(i)).collect();
        let members = basis.clone();
        GeneratingSet::new(basis.into_iter().map(|e| (e, Order::Infinite)).collect())
            .conjugation_closed(Subset::new("basis", move |v: &Vec<i64>| members.contains(v)))
    }
}

impl Group for IntegerLattice {
    type Elem = Vec<i64>;

    fn name(&self) -> String {
        format!("Z^{}", self.dim)
    }
    fn identity(&self) -> Vec<i64> {
        vec![0; self.dim]
    }
    fn multiply(&self, a: &Vec<i64>, b: &Vec<i64>) -> Vec<i64> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
    fn invert(&self, a: &Vec<i64>) -> Vec<i64> {
        a.iter().map(|x| -x).collect()
    }
    fn power(&self, a: &Vec<i64>, n: i64) -> Vec<i64> {
        a.iter().map(|x| x * n).collect()
    }
}

/// `Z/n`.
#[derive(Clone, Debug)]
pub struct Cyclic {
    pub n: u64,
}

impl Cyclic {
    pub fn standard_generators(&self) -> GeneratingSet<u64> {
        GeneratingSet::new(vec![(1 % self.n, Order::Finite(self.n))])
    }
}

impl Group for Cyclic {
    type Elem = u64;

    fn name(&self) -> String {
        format!("Z/{}", self.n)
    }
    fn identity(&self) -> u64 {
        0
    }
    fn multiply(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.n
    }
    fn invert(&self, a: &u64) -> u64 {
        (self.n - a % self.n) % self.n
    }
    fn canonical(&self, a: &u64) -> u64 {
        a % self.n
    }
    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.n).collect())
    }
}

/// `r^rotation s^reflection` in the dihedral group of order `2n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DihedralElem {
    pub rotation: u32,
    pub reflection: bool,
}

/// Symmetries of the regular `n`-gon, of order `2n`.
#[derive(Clone, Debug)]
pub struct Dihedral {
    pub n: u32,
}

impl Dihedral {
    /// The reflections `s` and `r s`, both of order 2.
    pub fn reflection_generators(&self) -> GeneratingSet<DihedralElem> {
        GeneratingSet::new(vec![
            (DihedralElem { rotation: 0, reflection: true }, Order::Finite(2)),
            (DihedralElem { rotation: 1 % self.n, reflection: true }, Order::Finite(2)),
        ])
    }
}

impl Group for Dihedral {
    type Elem = DihedralElem;

    fn name(&self) -> String {
        format!("D{}", self.n)
    }
    fn identity(&self) -> DihedralElem {
        DihedralElem { rotation: 0, reflection: false }
    }
    fn multiply(&self, a: &DihedralElem, b: &DihedralElem) -> DihedralElem {
        // s r^k = r^-k s
        let n = self.n as i64;
        let k = if a.reflection { a.rotation as i64 - b.rotation as i64 } else { (a.rotation + b.rotation) as i64 };
        DihedralElem { rotation: k.rem_euclid(n) as u32, reflection: a.reflection != b.reflection }
    }
    fn invert(&self, a: &DihedralElem) -> DihedralElem {
        if a.reflection {
            *a
        } else {
            DihedralElem { rotation: (self.n - a.rotation) % self.n, reflection: false }
        }
    }
    fn canonical(&self, a: &DihedralElem) -> DihedralElem {
        DihedralElem { rotation: a.rotation % self.n, reflection: a.reflection }
    }
    fn elements(&self) -> Option<Vec<DihedralElem>> {
        Some(
            [false, true]
                .into_iter()
                .flat_map(|reflection| (0..self.n).map(move |rotation| DihedralElem { rotation, reflection }))
                .collect(),
        )
    }
    fn describe(&self, a: &DihedralElem) -> String {
        format!("r^{}{}", a.rotation, if a.reflection { " s" } else { "" })
    }
}

/// Permutations of `{0, .., n-1}` stored as image lists; `a * b` is `a ∘ b`.
#[derive(Clone, Debug)]
pub struct Symmetric {
    pub n: usize,
}

impl Symmetric {
    /// Adjacent transpositions `(i i+1)`.
    pub fn transposition_generators(&self) -> GeneratingSet<Vec<u8>> {
        GeneratingSet::new(
            (0..self.n.saturating_sub(1))
                .map(|i| {
                    let mut p: Vec<u8> = (0..self.n as u8).collect();
                    p.swap(i, i + 1);
                    (p, Order::Finite(2))
                })
                .collect(),
        )
    }
}

impl Group for Symmetric {
    type Elem = Vec<u8>;

    fn name(&self) -> String {
        format!("S{}", self.n)
    }
    fn identity(&self) -> Vec<u8> {
        (0..self.n as u8).collect()
    }
    fn multiply(&self, a: &Vec<u8>, b: &Vec<u8>) -> Vec<u8> {
        b.iter().map(|&i| a[i as usize]).collect()
    }
    fn invert(&self, a: &Vec<u8>) -> Vec<u8> {
        let mut inv = vec![0; a.len()];
        for (i, &ai) in a.iter().enumerate() {
            inv[ai as usize] = i as u8;
        }
        inv
    }
    fn elements(&self) -> Option<Vec<Vec<u8>>> {
        fn extend(prefix: &mut Vec<u8>, n: usize, out: &mut Vec<Vec<u8>>) {
            if prefix.len() == n {
                out.push(prefix.clone());
                return;
            }
            for v in 0..n as u8 {
                if !prefix.contains(&v) {
                    prefix.push(v);
                    extend(prefix, n, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        extend(&mut Vec::new(), self.n, &mut out);
        Some(out)
    }
}

/// Free group on `a` (letter 1) and `b` (letter 2); negative letters are
/// inverses. Elements are freely reduced words.
#[derive(Clone, Debug, Default)]
pub struct FreeGroup2;

impl FreeGroup2 {
    pub const A: i8 = 1;
    pub const B: i8 = 2;

    pub fn letter(l: i8) -> Vec<i8> {
        vec![l]
    }

    pub fn reduce(word: &[i8]) -> Vec<i8> {
        let mut out: Vec<i8> = Vec::with_capacity(word.len());
        for &l in word {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        out
    }

    /// Whether the reduced word is conjugate to `a^±1` or `b^±1`.
    pub fn is_conjugate_of_generator(word: &[i8]) -> bool {
        let w = Self::reduce(word);
        let mut s = &w[..];
        while s.len() >= 2 && s[0] == -s[s.len() - 1] {
            s = &s[1..s.len() - 1];
        }
        s.len() == 1
    }

    /// `{a, b}` with the closure predicate "conjugate of a letter" (inverses
    /// included, as the cyclic subgroups are the same).
    pub fn conjugation_closed_generators(&self) -> GeneratingSet<Vec<i8>> {
        GeneratingSet::new(vec![(vec![Self::A], Order::Infinite), (vec![Self::B], Order::Infinite)])
            .conjugation_closed(Subset::new("conjugates of a, b", |w: &Vec<i8>| Self::is_conjugate_of_generator(w)))
    }

    pub fn standard_generators(&self) -> GeneratingSet<Vec<i8>> {
        GeneratingSet::new(vec![(vec![Self::A], Order::Infinite), (vec![Self::B], Order::Infinite)])
    }
}

impl Group for FreeGroup2 {
    type Elem = Vec<i8>;

    fn name(&self) -> String {
        "F2".into()
    }
    fn identity(&self) -> Vec<i8> {
        Vec::new()
    }
    fn multiply(&self, a: &Vec<i8>, b: &Vec<i8>) -> Vec<i8> {
        let mut out = a.clone();
        for &l in b {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        out
    }
    fn invert(&self, a: &Vec<i8>) -> Vec<i8> {
        a.iter().rev().map(|l| -l).collect()
    }
    fn canonical(&self, a: &Vec<i8>) -> Vec<i8> {
        Self::reduce(a)
    }
    fn describe(&self, a: &Vec<i8>) -> String {
        if a.is_empty() {
            return "1".into();
        }
        a.iter()
            .map(|&l| match l {
                1 => "a",
                -1 => "A",
                2 => "b",
                -2 => "B",
                _ => "?",
            })
            .collect()
    }
}

/// Integer Heisenberg group: `(a, b, c)` is the unitriangular matrix
/// `[[1, a, c], [0, 1, b], [0, 0, 1]]`.
#[derive(Clone, Debug, Default)]
pub struct Heisenberg;

impl Heisenberg {
    pub const X: [i64; 3] = [1, 0, 0];
    pub const Y: [i64; 3] = [0, 1, 0];

    pub fn standard_generators(&self) -> GeneratingSet<[i64; 3]> {
        GeneratingSet::new(vec![(Self::X, Order::Infinite), (Self::Y, Order::Infinite)])
    }
}

impl Group for Heisenberg {
    type Elem = [i64; 3];

    fn name(&self) -> String {
        "Heisenberg".into()
    }
    fn identity(&self) -> [i64; 3] {
        [0, 0, 0]
    }
    fn multiply(&self, a: &[i64; 3], b: &[i64; 3]) -> [i64; 3] {
        [a[0] + b[0], a[1] + b[1], a[2] + b[2] + a[0] * b[1]]
    }
    fn invert(&self, a: &[i64; 3]) -> [i64; 3] {
        [-a[0], -a[1], a[0] * a[1] - a[2]]
    }
}

/// One line of the built-in catalog.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub key: &'static str,
    pub name: String,
    pub order: Option<usize>,
    pub generators: Vec<(String, Order)>,
}

fn entry<G: Group>(key: &'static str, group: &G, gens: &GeneratingSet<G::Elem>) -> CatalogEntry {
    CatalogEntry {
        key,
        name: group.name(),
        order: group.elements().map(|e| e.len()),
        generators: gens.generators.iter().map(|g| (group.describe(&g.element), g.order)).collect(),
    }
}

/// Every built-in group with its default generating set, in a fixed order.
pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        entry("z", &IntegerLattice::new(1), &IntegerLattice::new(1).standard_generators()),
        entry("z2", &IntegerLattice::new(2), &IntegerLattice::new(2).standard_generators()),
        entry("z3", &IntegerLattice::new(3), &IntegerLattice::new(3).standard_generators()),
        entry("z5", &Cyclic { n: 5 }, &Cyclic { n: 5 }.standard_generators()),
        entry("d4", &Dihedral { n: 4 }, &Dihedral { n: 4 }.reflection_generators()),
        entry("d6", &Dihedral { n: 6 }, &Dihedral { n: 6 }.reflection_generators()),
        entry("s3", &Symmetric { n: 3 }, &Symmetric { n: 3 }.transposition_generators()),
        entry("s4", &Symmetric { n: 4 }, &Symmetric { n: 4 }.transposition_generators()),
        entry("f2", &FreeGroup2, &FreeGroup2.standard_generators()),
        entry("heisenberg", &Heisenberg, &Heisenberg.standard_generators()),
    ]
}
