use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::pcp::PcPresentation;
use crate::table::{GroupTable, ELEMENT_GUARD};

/// A subgroup stored as its sorted element list, plus the generators it was
/// built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupSet {
    ranks: Vec<u32>,
    elements: Vec<Element>,
    generators: Vec<Element>,
}

impl SubgroupSet {
    fn new(t: &GroupTable, mut ranks: Vec<u32>, generators: Vec<Element>) -> SubgroupSet {
        ranks.sort_unstable();
        let elements = ranks.iter().map(|&r| t.element(r)).collect();
        SubgroupSet {
            ranks,
            elements,
            generators,
        }
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.ranks.len() == 1
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn contains(&self, e: &Element) -> bool {
        self.elements.binary_search(e).is_ok()
    }

    pub fn contains_rank(&self, r: u32) -> bool {
        self.ranks.binary_search(&r).is_ok()
    }

    pub fn is_subset(&self, other: &SubgroupSet) -> bool {
        self.ranks.iter().all(|&r| other.contains_rank(r))
    }

    /// Membership bitmap indexed by rank.
    pub fn mask(&self, group_order: usize) -> Vec<bool> {
        let mut m = vec![false; group_order];
        for &r in &self.ranks {
            m[r as usize] = true;
        }
        m
    }
}

/// Conjugacy classes of a group, indexed by element rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyPartition {
    pub class_id: Vec<u32>,
    pub reps: Vec<Element>,
    pub sizes: Vec<u64>,
}

impl ConjugacyPartition {
    pub fn num_classes(&self) -> usize {
        self.reps.len()
    }

    pub fn class_of_rank(&self, r: u32) -> u32 {
        self.class_id[r as usize]
    }

    pub fn class_size_of_rank(&self, r: u32) -> u64 {
        self.sizes[self.class_id[r as usize] as usize]
    }

    /// Class sizes sorted ascending.
    pub fn size_multiset(&self) -> Vec<u64> {
        let mut s = self.sizes.clone();
        s.sort_unstable();
        s
    }
}

/// Invariants `C_{p^a1} x C_{p^a2} x ...` of a finite abelian p-group,
/// stored as the exponents `a_i` in descending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianInvariants {
    pub prime: u32,
    pub exponents: Vec<u32>,
}

impl AbelianInvariants {
    /// Builds invariants from `s_k = log_p |Omega_k|` for `k = 1, 2, ...`,
    /// ending once the whole group is reached.
    pub fn from_omega_logs(prime: u32, logs: &[u32]) -> AbelianInvariants {
        // Number of cyclic factors of order at least p^k is s_k - s_{k-1}.
        let at_least: Vec<u32> = (0..logs.len())
            .map(|k| logs[k] - if k == 0 { 0 } else { logs[k - 1] })
            .collect();
        let mut exponents = Vec::new();
        for k in (0..at_least.len()).rev() {
            let next = at_least.get(k + 1).copied().unwrap_or(0);
            for _ in 0..at_least[k] - next {
                exponents.push(k as u32 + 1);
            }
        }
        AbelianInvariants { prime, exponents }
    }

    pub fn order(&self) -> u128 {
        (self.prime as u128).pow(self.exponents.iter().sum())
    }

    pub fn orders(&self) -> Vec<u128> {
        self.exponents
            .iter()
            .map(|&a| (self.prime as u128).pow(a))
            .collect()
    }

    pub fn is_elementary(&self) -> bool {
        self.exponents.iter().all(|&a| a == 1)
    }

    pub fn rank(&self) -> usize {
        self.exponents.len()
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.orders().iter().map(|o| format!("C{o}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// `log_p(n)` when `n` is a power of `p`.
pub fn log_p(p: u32, n: u128) -> Option<u32> {
    let mut x = n;
    let mut k = 0;
    while x > 1 {
        if x % p as u128 != 0 {
            return None;
        }
        x /= p as u128;
        k += 1;
    }
    (x == 1).then_some(k)
}

/// All normal forms in lexicographic order.
pub fn enumerate(pres: &PcPresentation) -> Result<Vec<Element>> {
    let size = pres.order();
    if size > ELEMENT_GUARD {
        return Err(Error::SizeGuard {
            what: "group".into(),
            size,
            guard: ELEMENT_GUARD,
        });
    }
    Ok((0..size as usize).map(|r| pres.unrank(r)).collect())
}

// Orbit-style closure of `start` under right multiplication by `gens`.
fn close_ranks(t: &GroupTable, gens: &[u32], seed: &[u32]) -> Vec<u32> {
    let mut seen = vec![false; t.order()];
    let mut members = Vec::new();
    let mut queue = VecDeque::new();
    for &s in std::iter::once(&0).chain(seed) {
        if !seen[s as usize] {
            seen[s as usize] = true;
            members.push(s);
            queue.push_back(s);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &g in gens {
            let y = t.mul(x, g);
            if !seen[y as usize] {
                seen[y as usize] = true;
                members.push(y);
                queue.push_back(y);
            }
        }
    }
    members
}

/// The subgroup generated by `gens`.
pub fn closure(t: &GroupTable, gens: &[Element]) -> SubgroupSet {
    let ranks: Vec<u32> = gens.iter().map(|g| t.rank(g)).collect();
    SubgroupSet::new(t, close_ranks(t, &ranks, &[]), gens.to_vec())
}

pub fn closure_ranks(t: &GroupTable, gens: &[u32]) -> SubgroupSet {
    let elements = gens.iter().map(|&g| t.element(g)).collect();
    SubgroupSet::new(t, close_ranks(t, gens, &[]), elements)
}

pub fn whole_group(t: &GroupTable) -> SubgroupSet {
    let gens: Vec<Element> = (0..t.ngens()).map(Element::generator).collect();
    SubgroupSet::new(t, (0..t.order() as u32).collect(), gens)
}

/// A short generating set of `s`, chosen greedily in rank order.
pub fn generating_set(t: &GroupTable, s: &SubgroupSet) -> Vec<u32> {
    let mut gens = Vec::new();
    let mut inside = vec![false; t.order()];
    inside[0] = true;
    let mut count = 1;
    for &r in s.ranks() {
        if count == s.len() {
            break;
        }
        if !inside[r as usize] {
            gens.push(r);
            inside.fill(false);
            let members = close_ranks(t, &gens, &[]);
            count = members.len();
            for m in members {
                inside[m as usize] = true;
            }
        }
    }
    gens
}

fn from_filter(t: &GroupTable, keep: impl Fn(u32) -> bool + Sync) -> SubgroupSet {
    let ranks: Vec<u32> = (0..t.order() as u32)
        .into_par_iter()
        .filter(|&r| keep(r))
        .collect();
    let mut s = SubgroupSet::new(t, ranks, Vec::new());
    s.generators = generating_set(t, &s).iter().map(|&r| t.element(r)).collect();
    s
}

fn commutes_with_generators(t: &GroupTable, r: u32) -> bool {
    (0..t.ngens()).all(|k| {
        let g = t.generator(k);
        t.mul(r, g) == t.mul(g, r)
    })
}

pub fn center(t: &GroupTable) -> SubgroupSet {
    from_filter(t, |r| commutes_with_generators(t, r))
}

/// `Z_{i+1} = {g : [g, x] in Z_i for every generator x}`, starting from the
/// trivial group and stopping at `G` (or when the series stalls).
pub fn upper_central_series(t: &GroupTable) -> Vec<SubgroupSet> {
    let mut series = Vec::new();
    let mut mask = vec![false; t.order()];
    mask[0] = true;
    let mut size = 1;
    loop {
        let next = from_filter(t, |r| {
            (0..t.ngens()).all(|k| mask[t.comm(r, t.generator(k)) as usize])
        });
        if next.len() == size {
            break;
        }
        size = next.len();
        mask = next.mask(t.order());
        let done = size == t.order();
        series.push(next);
        if done {
            break;
        }
    }
    series
}

/// The `i`-th term `Z_i(G)` of the upper central series (`Z_0 = 1`).
pub fn upper_central_term(t: &GroupTable, i: usize) -> SubgroupSet {
    if i == 0 {
        return closure_ranks(t, &[]);
    }
    let series = upper_central_series(t);
    series
        .get(i - 1)
        .cloned()
        .unwrap_or_else(|| series.last().cloned().unwrap_or_else(|| closure_ranks(t, &[])))
}

pub fn second_center(t: &GroupTable) -> SubgroupSet {
    upper_central_term(t, 2)
}

pub fn third_center(t: &GroupTable) -> SubgroupSet {
    upper_central_term(t, 3)
}

/// Smallest normal subgroup containing `gens`.
pub fn normal_closure(t: &GroupTable, gens: &[u32]) -> SubgroupSet {
    let mut gens: Vec<u32> = gens.to_vec();
    let mut members = close_ranks(t, &gens, &[]);
    let mut mask = vec![false; t.order()];
    for &m in &members {
        mask[m as usize] = true;
    }
    let mut i = 0;
    while i < gens.len() {
        for k in 0..t.ngens() {
            let c = t.conj(gens[i], t.generator(k));
            if !mask[c as usize] {
                gens.push(c);
                members = close_ranks(t, &gens, &members);
                for &m in &members {
                    mask[m as usize] = true;
                }
            }
        }
        i += 1;
    }
    let elements = gens.iter().map(|&g| t.element(g)).collect();
    SubgroupSet::new(t, members, elements)
}

/// `gamma_2(G)`, the normal closure of the generator commutators.
pub fn derived_subgroup(t: &GroupTable) -> SubgroupSet {
    let n = t.ngens();
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let c = t.comm(t.generator(j), t.generator(i));
            if c != 0 && !gens.contains(&c) {
                gens.push(c);
            }
        }
    }
    normal_closure(t, &gens)
}

/// `G = gamma_1 > gamma_2 > ...`, ending with the trivial group.
pub fn lower_central_series(t: &GroupTable) -> Vec<SubgroupSet> {
    let mut series = vec![whole_group(t)];
    loop {
        let last = series.last().unwrap();
        if last.is_trivial() {
            break;
        }
        let next = if series.len() == 1 {
            derived_subgroup(t)
        } else {
            let mut seen = vec![false; t.order()];
            let mut gens = Vec::new();
            for &a in last.ranks() {
                for k in 0..t.ngens() {
                    let c = t.comm(a, t.generator(k));
                    if c != 0 && !seen[c as usize] {
                        seen[c as usize] = true;
                        gens.push(c);
                    }
                }
            }
            normal_closure(t, &gens)
        };
        if next.len() == last.len() {
            // Only possible for a non-nilpotent input.
            break;
        }
        series.push(next);
    }
    series
}

pub fn nilpotency_class(t: &GroupTable) -> usize {
    lower_central_series(t).len() - 1
}

pub fn centralizer(t: &GroupTable, x: &Element) -> SubgroupSet {
    let x = t.rank(x);
    from_filter(t, |g| t.mul(x, g) == t.mul(g, x))
}

/// Conjugacy classes by orbit expansion under the pc-generators. Classes
/// are numbered in order of their least element, which is the representative.
pub fn conjugacy_partition(t: &GroupTable) -> ConjugacyPartition {
    const UNSET: u32 = u32::MAX;
    let gens: Vec<(u32, u32)> = (0..t.ngens())
        .map(|k| {
            let g = t.generator(k);
            (g, t.inv(g))
        })
        .collect();
    let mut class_id = vec![UNSET; t.order()];
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    let mut queue = Vec::new();
    for r in 0..t.order() as u32 {
        if class_id[r as usize] != UNSET {
            continue;
        }
        let id = reps.len() as u32;
        reps.push(t.element(r));
        class_id[r as usize] = id;
        queue.push(r);
        let mut size = 1;
        while let Some(x) = queue.pop() {
            for &(g, gi) in &gens {
                let y = t.mul(gi, t.mul(x, g));
                if class_id[y as usize] == UNSET {
                    class_id[y as usize] = id;
                    size += 1;
                    queue.push(y);
                }
            }
        }
        sizes.push(size);
    }
    ConjugacyPartition {
        class_id,
        reps,
        sizes,
    }
}

/// The subgroup generated by central elements of order dividing p.
pub fn omega1_center(t: &GroupTable) -> SubgroupSet {
    let p = t.prime() as i64;
    // Elements of order p in an abelian group already form a subgroup.
    from_filter(t, |r| commutes_with_generators(t, r) && t.pow(r, p) == 0)
}

/// `Phi(G) = G^p gamma_2(G)`.
pub fn frattini(t: &GroupTable) -> SubgroupSet {
    let derived = derived_subgroup(t);
    let p = t.prime() as i64;
    let mut gens: Vec<u32> = generating_set(t, &derived);
    for k in 0..t.ngens() {
        gens.push(t.pow(t.generator(k), p));
    }
    closure_ranks(t, &gens)
}

/// `d = log_p |G : Phi(G)|`, the size of every minimal generating set.
pub fn minimal_generator_rank(t: &GroupTable) -> usize {
    let phi = frattini(t);
    log_p(t.prime(), (t.order() / phi.len()) as u128).unwrap() as usize
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrattiniQuotient {
    pub rank: usize,
    pub abelianization: AbelianInvariants,
}

/// Rank of `G / Phi(G)` together with the invariants of `G / gamma_2(G)`.
pub fn frattini_quotient(t: &GroupTable) -> FrattiniQuotient {
    FrattiniQuotient {
        rank: minimal_generator_rank(t),
        abelianization: abelianization(t),
    }
}

pub fn is_abelian_subgroup(t: &GroupTable, s: &SubgroupSet) -> bool {
    let gens = generating_set(t, s);
    gens.iter()
        .enumerate()
        .all(|(i, &a)| gens[..i].iter().all(|&b| t.mul(a, b) == t.mul(b, a)))
}

/// Invariants of an abelian subgroup from its element-order census.
pub fn abelian_invariants(t: &GroupTable, s: &SubgroupSet) -> Result<AbelianInvariants> {
    if !is_abelian_subgroup(t, s) {
        return Err(Error::Precondition("subgroup is not abelian".into()));
    }
    let p = t.prime();
    let total = log_p(p, s.len() as u128).unwrap();
    let mut logs = Vec::new();
    let mut power = p as i64;
    while logs.last().copied().unwrap_or(0) < total {
        let count = s.ranks().iter().filter(|&&r| t.pow(r, power) == 0).count();
        logs.push(log_p(p, count as u128).unwrap());
        power *= p as i64;
    }
    Ok(AbelianInvariants::from_omega_logs(p, &logs))
}

/// Invariants of `G / gamma_2(G)`, counting `g` with `g^(p^k)` in `gamma_2(G)`.
pub fn abelianization(t: &GroupTable) -> AbelianInvariants {
    let p = t.prime();
    let derived = derived_subgroup(t);
    let dlog = log_p(p, derived.len() as u128).unwrap();
    let total = log_p(p, t.order() as u128).unwrap() - dlog;
    let mask = derived.mask(t.order());
    let mut logs = Vec::new();
    let mut power = p as i64;
    while logs.last().copied().unwrap_or(0) < total {
        let count = (0..t.order() as u32)
            .into_par_iter()
            .filter(|&r| mask[t.pow(r, power) as usize])
            .count();
        logs.push(log_p(p, count as u128).unwrap() - dlog);
        power *= p as i64;
    }
    AbelianInvariants::from_omega_logs(p, &logs)
}

pub fn is_normal(t: &GroupTable, s: &SubgroupSet) -> bool {
    let gens = generating_set(t, s);
    gens.iter().all(|&h| {
        (0..t.ngens()).all(|k| s.contains_rank(t.conj(h, t.generator(k))))
    })
}
