//! Exhaustive Farey graph distances by breadth-first search.

use std::collections::{HashMap, VecDeque};

use num_integer::Integer;
use twistlab::farey::{intersection_number, Slope};

/// Every slope of height at most `h`.
pub fn slopes(h: i64) -> Vec<Slope> {
    let mut out = vec![Slope::INFINITY];
    for q in 1..=h {
        for p in -h..=h {
            if p.gcd(&q) == 1 {
                out.push(Slope::new(p, q).unwrap());
            }
        }
    }
    out
}

/// Breadth-first distances inside the subgraph of slopes of height `<= h`.
pub struct Oracle {
    index: HashMap<Slope, usize>,
    dist: Vec<Vec<u32>>,
}

impl Oracle {
    pub fn new(h: i64) -> Self {
        let vs = slopes(h);
        let index: HashMap<Slope, usize> = vs.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let adj: Vec<Vec<usize>> = vs
            .iter()
            .map(|u| (0..vs.len()).filter(|&j| intersection_number(u, &vs[j]) == 1).collect())
            .collect();
        let dist = (0..vs.len())
            .map(|src| {
                let mut d = vec![u32::MAX; vs.len()];
                d[src] = 0;
                let mut queue = VecDeque::from([src]);
                while let Some(x) = queue.pop_front() {
                    for &y in &adj[x] {
                        if d[y] == u32::MAX {
                            d[y] = d[x] + 1;
                            queue.push_back(y);
                        }
                    }
                }
                d
            })
            .collect();
        Oracle { index, dist }
    }

    pub fn distance(&self, u: &Slope, v: &Slope) -> usize {
        self.dist[self.index[u]][self.index[v]] as usize
    }
}
