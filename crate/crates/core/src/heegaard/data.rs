use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::HeegaardError;
use crate::homology::{sl2_word, word_to_matrix, HomologyClass, SymplecticBasis, SymplecticMap, TwistWord};
use crate::linalg::{rank, Matrix};
use crate::Side;

/// `g` classes bounding disks in a handlebody: primitive, pairwise
/// orthogonal and of rank `g`, i.e. a Lagrangian basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct DiskSystem {
    classes: Vec<HomologyClass>,
}

impl DiskSystem {
    pub fn new(genus: usize, classes: Vec<HomologyClass>) -> Result<Self, HeegaardError> {
        let basis = SymplecticBasis::new(genus)?;
        if classes.len() != genus {
            return Err(HeegaardError::DiskCount { expected: genus, found: classes.len() });
        }
        for c in &classes {
            basis.check(c)?;
            if !c.is_primitive() {
                return Err(crate::homology::HomologyError::NotPrimitive(c.to_string()).into());
            }
        }
        for i in 0..genus {
            for j in i + 1..genus {
                if basis.pairing(&classes[i], &classes[j]) != BigInt::from(0) {
                    return Err(HeegaardError::NotIsotropic(i, j));
                }
            }
        }
        let m = Matrix::from_rows(classes.iter().map(|c| c.0.clone()).collect())?;
        let r = rank(&m);
        if r != genus {
            return Err(HeegaardError::Degenerate(r));
        }
        Ok(DiskSystem { classes })
    }

    /// `{e_1, ..., e_g}`.
    pub fn standard_a(genus: usize) -> Self {
        DiskSystem { classes: (0..genus).map(|i| HomologyClass::basis(genus, i)).collect() }
    }

    /// `{e_{g+1}, ..., e_{2g}}`, dual to [`DiskSystem::standard_a`].
    pub fn standard_b(genus: usize) -> Self {
        DiskSystem { classes: (0..genus).map(|i| HomologyClass::basis(genus, genus + i)).collect() }
    }

    pub fn classes(&self) -> &[HomologyClass] {
        &self.classes
    }

    pub fn genus(&self) -> usize {
        self.classes.len()
    }

    /// Image under a symplectic map; still a disk system.
    pub fn map(&self, m: &SymplecticMap) -> DiskSystem {
        DiskSystem { classes: self.classes.iter().map(|c| m.apply(c)).collect() }
    }
}

#[derive(Deserialize)]
struct RawHeegaard {
    genus: usize,
    a_system: Option<Vec<HomologyClass>>,
    b_system: Option<Vec<HomologyClass>>,
    #[serde(default)]
    gluing_word: TwistWord,
}

/// Genus, the two disk systems and the gluing, kept as a twist word.
/// JSON: `{genus, a_system, b_system, gluing_word}`; omitted systems default
/// to the dual standard pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawHeegaard")]
pub struct HeegaardData {
    genus: usize,
    a_system: DiskSystem,
    b_system: DiskSystem,
    gluing_word: TwistWord,
    #[serde(skip)]
    gluing: SymplecticMap,
}

impl TryFrom<RawHeegaard> for HeegaardData {
    type Error = HeegaardError;

    fn try_from(raw: RawHeegaard) -> Result<Self, HeegaardError> {
        let g = raw.genus;
        let a = match raw.a_system {
            Some(cs) => DiskSystem::new(g, cs)?,
            None => DiskSystem::standard_a(g),
        };
        let b = match raw.b_system {
            Some(cs) => DiskSystem::new(g, cs)?,
            None => DiskSystem::standard_b(g),
        };
        HeegaardData::new(a, b, raw.gluing_word)
    }
}

impl HeegaardData {
    pub fn new(a_system: DiskSystem, b_system: DiskSystem, gluing_word: TwistWord) -> Result<Self, HeegaardError> {
        let genus = a_system.genus();
        if b_system.genus() != genus {
            return Err(HeegaardError::DiskCount { expected: genus, found: b_system.genus() });
        }
        let gluing = word_to_matrix(&gluing_word, genus)?;
        Ok(HeegaardData { genus, a_system, b_system, gluing_word, gluing })
    }

    /// Dual standard systems glued by `w`; the empty word gives `S^3`.
    pub fn standard(genus: usize, w: TwistWord) -> Result<Self, HeegaardError> {
        Self::new(DiskSystem::standard_a(genus), DiskSystem::standard_b(genus), w)
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn a_system(&self) -> &DiskSystem {
        &self.a_system
    }

    pub fn b_system(&self) -> &DiskSystem {
        &self.b_system
    }

    pub fn gluing_word(&self) -> &TwistWord {
        &self.gluing_word
    }

    pub fn gluing(&self) -> &SymplecticMap {
        &self.gluing
    }

    /// The same splitting reglued by `f ∘ T_c^n` (right) or `T_c^n ∘ f` (left).
    pub fn with_twist(&self, c: &HomologyClass, n: i64, side: Side) -> Result<Self, HeegaardError> {
        let t = TwistWord::letter(c.clone(), n)?;
        let w = match side {
            Side::Right => self.gluing_word.concat(&t),
            Side::Left => t.concat(&self.gluing_word),
        };
        Self::new(self.a_system.clone(), self.b_system.clone(), w)
    }
}

/// Genus-one splitting of `L(p, q)`: both disks bound `e_1` and the gluing
/// `f` satisfies `f^{-1}(e_1) = (q, p)`, so `|H_1| = p`. `L(0, 1)` is `S^1 × S^2`.
pub fn lens_space(p: i64, q: i64) -> Result<HeegaardData, HeegaardError> {
    if p < 0 || p.gcd(&q) != 1 {
        return Err(HeegaardError::Lens { p, q });
    }
    // N = [[q, s], [p, t]] with qt - ps = 1; the gluing is N^{-1} = [[t, -s], [-p, q]]
    let e = q.extended_gcd(&p);
    let (t, s) = (e.x * e.gcd, -e.y * e.gcd);
    let inv = Matrix::from_i64_rows(&[[t, -s], [-p, q]]);
    let w = sl2_word(&inv)?;
    let disk = DiskSystem::standard_a(1);
    HeegaardData::new(disk.clone(), disk, w)
}
