//! Seeded generators shared by the integration tests.
#![allow(dead_code)]

pub mod farey_oracle;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twistlab::heegaard::{DiskSystem, HeegaardData};
use twistlab::homology::{word_to_matrix, HomologyClass, TwistWord};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Nonzero vector with entries in `[-bound, bound]`, divided by its content.
pub fn primitive_class(rng: &mut impl Rng, genus: usize, bound: i64) -> HomologyClass {
    loop {
        let v: Vec<i64> = (0..2 * genus).map(|_| rng.random_range(-bound..=bound)).collect();
        let g = v.iter().fold(0i64, |a, &b| a.gcd(&b));
        if g != 0 {
            return HomologyClass::from_i64(&v.iter().map(|x| x / g).collect::<Vec<_>>());
        }
    }
}

pub fn twist_word(rng: &mut impl Rng, genus: usize, max_len: usize) -> TwistWord {
    let len = rng.random_range(0..=max_len);
    let mut w = TwistWord::empty();
    for _ in 0..len {
        let c = primitive_class(rng, genus, 2);
        let n = rng.random_range(-2..=2);
        w.push(c, n);
    }
    w
}

/// Image of the standard Lagrangian under a random symplectic map.
pub fn disk_system(rng: &mut impl Rng, genus: usize) -> DiskSystem {
    let m = word_to_matrix(&twist_word(rng, genus, 3), genus).unwrap();
    DiskSystem::standard_a(genus).map(&m)
}

pub fn heegaard(rng: &mut impl Rng, genus: usize) -> HeegaardData {
    let a = disk_system(rng, genus);
    let b = disk_system(rng, genus);
    HeegaardData::new(a, b, twist_word(rng, genus, 4)).unwrap()
}
