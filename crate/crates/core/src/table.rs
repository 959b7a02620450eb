use rayon::prelude::*;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::pcp::PcPresentation;

/// Default cap on the number of elements a table may hold.
pub const ELEMENT_GUARD: u128 = 10_000_000;

/// Right-multiplication tables over element ranks.
///
/// Element `r` is the normal form with mixed-radix rank `r`. Products are
/// evaluated by walking the right factor's exponent vector through the
/// `r * g_k` table, so no collection happens after construction.
#[derive(Clone, Debug)]
pub struct GroupTable {
    pres: PcPresentation,
    n: usize,
    p: u8,
    elements: Vec<Element>,
    right_mul: Vec<u32>,
    inverses: Vec<u32>,
}

impl GroupTable {
    pub fn new(pres: &PcPresentation) -> Result<GroupTable> {
        Self::with_guard(pres, ELEMENT_GUARD)
    }

    pub fn with_guard(pres: &PcPresentation, guard: u128) -> Result<GroupTable> {
        let size = pres.order();
        if size > guard {
            return Err(Error::SizeGuard {
                what: "group".into(),
                size,
                guard,
            });
        }
        let size = size as usize;
        let n = pres.ngens();
        let elements: Vec<Element> = (0..size).map(|r| pres.unrank(r)).collect();
        let right_mul: Vec<u32> = elements
            .par_iter()
            .flat_map_iter(|e| {
                (0..n).map(move |k| pres.rank(&pres.multiply(e, &Element::generator(k))) as u32)
            })
            .collect();
        let inverses: Vec<u32> = elements
            .par_iter()
            .map(|e| pres.rank(&pres.inverse(e)) as u32)
            .collect();
        Ok(GroupTable {
            pres: pres.clone(),
            n,
            p: pres.prime() as u8,
            elements,
            right_mul,
            inverses,
        })
    }

    pub fn presentation(&self) -> &PcPresentation {
        &self.pres
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn prime(&self) -> u32 {
        self.p as u32
    }

    pub fn ngens(&self) -> usize {
        self.n
    }

    pub fn element(&self, r: u32) -> Element {
        self.elements[r as usize]
    }

    pub fn rank(&self, e: &Element) -> u32 {
        self.pres.rank(e) as u32
    }

    /// Rank of the `k`-th pc-generator.
    pub fn generator(&self, k: usize) -> u32 {
        self.rank(&Element::generator(k))
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let exps = self.elements[b as usize];
        let mut x = a;
        for (k, e) in exps.support() {
            for _ in 0..e {
                x = self.right_mul[x as usize * self.n + k];
            }
        }
        x
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    /// `a^b = b^-1 a b`.
    pub fn conj(&self, a: u32, b: u32) -> u32 {
        self.mul(self.inv(b), self.mul(a, b))
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn comm(&self, a: u32, b: u32) -> u32 {
        self.mul(self.inv(a), self.conj(a, b))
    }

    pub fn pow(&self, a: u32, k: i64) -> u32 {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut e = k.unsigned_abs();
        let mut sq = base;
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            e >>= 1;
            if e > 0 {
                sq = self.mul(sq, sq);
            }
        }
        acc
    }

    pub fn element_order(&self, a: u32) -> u64 {
        let mut x = a;
        let mut order = 1;
        while x != 0 {
            x = self.pow(x, self.p as i64);
            order *= self.p as u64;
        }
        order
    }

    /// Value of the normal form of `e` with `g_k` replaced by `images[k]`.
    pub fn substitute(&self, images: &[u32], e: u32) -> u32 {
        let mut x = 0;
        for (k, c) in self.elements[e as usize].support() {
            for _ in 0..c {
                x = self.mul(x, images[k]);
            }
        }
        x
    }
}
