use crate::topology::Group;

use super::symplectic::SymplecticMap;
use super::word::{word_to_matrix, TwistWord};

/// `Sp(2g, Z)` as a group oracle.
#[derive(Clone, Copy, Debug)]
pub struct SymplecticGroup {
    pub genus: usize,
}

impl Group for SymplecticGroup {
    type Elem = SymplecticMap;

    fn name(&self) -> String {
        format!("Sp({}, Z)", 2 * self.genus)
    }

    fn identity(&self) -> SymplecticMap {
        SymplecticMap::identity(self.genus)
    }

    fn multiply(&self, a: &SymplecticMap, b: &SymplecticMap) -> SymplecticMap {
        a.compose(b)
    }

    fn invert(&self, a: &SymplecticMap) -> SymplecticMap {
        a.inverse()
    }
}

/// Free product of the cyclic groups `<T_c>` over primitive classes up to
/// sign, elements kept in normal form. Evaluation to `Sp(2g, Z)` is a
/// homomorphism out of this group.
#[derive(Clone, Copy, Debug)]
pub struct TwistWordGroup {
    pub genus: usize,
}

impl TwistWordGroup {
    pub fn evaluate(&self, w: &TwistWord) -> SymplecticMap {
        word_to_matrix(w, self.genus).expect("group elements have the group's genus")
    }
}

impl Group for TwistWordGroup {
    type Elem = TwistWord;

    fn name(&self) -> String {
        format!("twist words (genus {})", self.genus)
    }

    fn identity(&self) -> TwistWord {
        TwistWord::empty()
    }

    fn multiply(&self, a: &TwistWord, b: &TwistWord) -> TwistWord {
        a.concat(b).canonical()
    }

    fn invert(&self, a: &TwistWord) -> TwistWord {
        a.inverse().canonical()
    }

    fn canonical(&self, a: &TwistWord) -> TwistWord {
        a.canonical()
    }
}
