//! Brute-force recomputation of structural data for small groups, used to
//! cross-check the table-driven routines.
//!
//! Everything here works from a full multiplication table built by direct
//! collection, with no orbit or generator shortcuts.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::pcp::PcPresentation;
use crate::subgroup::{AbelianInvariants, ConjugacyPartition};

pub const CAYLEY_GUARD: u128 = 2000;

/// Full multiplication table over element ranks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    order: usize,
    table: Vec<u32>,
    elements: Vec<Element>,
}

impl CayleyTable {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Normal form of the element with rank `r`.
    pub fn element(&self, r: u32) -> Element {
        self.elements[r as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.order + b as usize]
    }

    pub fn identity(&self) -> Option<u32> {
        (0..self.order as u32).find(|&e| (0..self.order as u32).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    pub fn inverse(&self, a: u32) -> u32 {
        let e = self.identity().expect("table has an identity");
        (0..self.order as u32).find(|&b| self.mul(a, b) == e).expect("latin square")
    }

    /// Every row and every column is a permutation.
    pub fn is_latin(&self) -> bool {
        let n = self.order;
        let mut seen = vec![0usize; n];
        for (stamp, r) in (1..).zip(0..n) {
            for c in 0..n {
                let v = self.table[r * n + c] as usize;
                if seen[v] == stamp {
                    return false;
                }
                seen[v] = stamp;
            }
        }
        seen.fill(0);
        for (stamp, c) in (1..).zip(0..n) {
            for r in 0..n {
                let v = self.table[r * n + c] as usize;
                if seen[v] == stamp {
                    return false;
                }
                seen[v] = stamp;
            }
        }
        true
    }

    /// Number of failing triples among `samples` random ones, drawn in a
    /// fixed number of independently seeded chunks.
    pub fn associativity_failures(&self, samples: usize, seed: u64) -> usize {
        const CHUNKS: usize = 64;
        let n = self.order as u32;
        (0..CHUNKS)
            .into_par_iter()
            .map(|chunk| {
                let mut rng = StdRng::seed_from_u64(seed.wrapping_add(chunk as u64));
                let count = samples / CHUNKS + usize::from(chunk < samples % CHUNKS);
                (0..count)
                    .filter(|_| {
                        let a = rng.gen_range(0..n);
                        let b = rng.gen_range(0..n);
                        let c = rng.gen_range(0..n);
                        self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
                    })
                    .count()
            })
            .sum()
    }
}

pub fn build_cayley(pres: &PcPresentation) -> Result<CayleyTable> {
    let size = pres.order();
    if size > CAYLEY_GUARD {
        return Err(Error::SizeGuard {
            what: "Cayley table".into(),
            size,
            guard: CAYLEY_GUARD,
        });
    }
    let n = size as usize;
    let elements: Vec<_> = (0..n).map(|r| pres.unrank(r)).collect();
    let table = (0..n * n)
        .into_par_iter()
        .map(|i| pres.rank(&pres.multiply(&elements[i / n], &elements[i % n])) as u32)
        .collect();
    Ok(CayleyTable {
        order: n,
        table,
        elements,
    })
}

fn conj(t: &CayleyTable, x: u32, g: u32, g_inv: u32) -> u32 {
    t.mul(t.mul(g_inv, x), g)
}

/// Classes as `{g^-1 x g : g in G}` for each `x`, numbered by least element.
pub fn classes_bruteforce(t: &CayleyTable) -> ConjugacyPartition {
    let n = t.order();
    let inverses: Vec<u32> = (0..n as u32).map(|g| t.inverse(g)).collect();
    let mut class_id = vec![u32::MAX; n];
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    for x in 0..n as u32 {
        if class_id[x as usize] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        let mut size = 0;
        for g in 0..n as u32 {
            let y = conj(t, x, g, inverses[g as usize]);
            if class_id[y as usize] == u32::MAX {
                class_id[y as usize] = id;
                size += 1;
            }
        }
        reps.push(t.element(x));
        sizes.push(size);
    }
    ConjugacyPartition {
        class_id,
        reps,
        sizes,
    }
}

/// Ranks of the elements commuting with everything.
pub fn center_bruteforce(t: &CayleyTable) -> Vec<u32> {
    let n = t.order() as u32;
    (0..n)
        .filter(|&z| (0..n).all(|g| t.mul(z, g) == t.mul(g, z)))
        .collect()
}

/// Ranks of the subgroup generated by all commutators, closed by repeated
/// products until nothing new appears.
pub fn derived_bruteforce(t: &CayleyTable) -> Vec<u32> {
    let n = t.order();
    let inverses: Vec<u32> = (0..n as u32).map(|g| t.inverse(g)).collect();
    let mut inside = vec![false; n];
    for a in 0..n as u32 {
        for b in 0..n as u32 {
            let c = t.mul(
                t.mul(inverses[a as usize], inverses[b as usize]),
                t.mul(a, b),
            );
            inside[c as usize] = true;
        }
    }
    loop {
        let current: Vec<u32> = (0..n as u32).filter(|&x| inside[x as usize]).collect();
        let mut grew = false;
        for &a in &current {
            for &b in &current {
                let c = t.mul(a, b) as usize;
                if !inside[c] {
                    inside[c] = true;
                    grew = true;
                }
            }
        }
        if !grew {
            return current;
        }
    }
}

/// Number of homomorphisms `A -> B` by listing every tuple of images of the
/// standard generators of `A` and keeping those of admissible order.
pub fn hom_count_bruteforce(a: &AbelianInvariants, b: &AbelianInvariants) -> Result<u128> {
    let p = a.prime as u64;
    let guard = p.pow(4) as u128;
    for g in [a, b] {
        if g.order() > guard {
            return Err(Error::SizeGuard {
                what: "abelian group".into(),
                size: g.order(),
                guard,
            });
        }
    }
    let moduli: Vec<u64> = b.exponents.iter().map(|&e| p.pow(e)).collect();
    let elements: Vec<Vec<u64>> = {
        let mut all = vec![Vec::new()];
        for &m in &moduli {
            all = all
                .into_iter()
                .flat_map(|v| {
                    (0..m).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        all
    };
    // x has order dividing q iff q x = 0 in B.
    let killed_by = |x: &[u64], q: u64| x.iter().zip(&moduli).all(|(&c, &m)| (c * q) % m == 0);
    let orders: Vec<u64> = a.exponents.iter().map(|&e| p.pow(e)).collect();
    let d = orders.len();
    let nb = elements.len();
    let total = (nb as u128).pow(d as u32);
    let count = (0..total as u64)
        .into_par_iter()
        .filter(|&idx| {
            let mut i = idx;
            (0..d).all(|k| {
                let y = &elements[(i % nb as u64) as usize];
                i /= nb as u64;
                killed_by(y, orders[k])
            })
        })
        .count();
    Ok(count as u128)
}

/// All invariant lists of abelian p-groups of order at most `p^max_log`.
pub fn abelian_types(prime: u32, max_log: u32) -> Vec<AbelianInvariants> {
    fn partitions(n: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(acc.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            acc.push(part);
            partitions(n - part, part, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    for n in 0..=max_log {
        partitions(n, n, &mut Vec::new(), &mut out);
    }
    out.into_iter()
        .map(|exponents| AbelianInvariants { prime, exponents })
        .collect()
}
