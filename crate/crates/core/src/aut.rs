//! Class-preserving automorphisms: enumeration, inner/central detection,
//! and the counting bounds used to pin down `|Aut_c(G)|`.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use crate::element::{Element, MAX_GENS};
use crate::error::{Error, Result};
use crate::pcp::{PcPresentation, Relation};
use crate::subgroup::{self, AbelianInvariants, ConjugacyPartition, SubgroupSet};
use crate::table::GroupTable;

/// Default cap on the number of candidate tuples searched.
pub const SEARCH_GUARD: u128 = 100_000_000;

/// How thoroughly a candidate map is tested.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verification {
    /// Bijectivity through the kernel meeting `Omega_1(Z(G))`, class
    /// preservation on class representatives.
    Fast,
    /// Bijectivity through the closure of the images, class preservation
    /// on every element.
    Exhaustive,
}

/// A map given by the images of the minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenMap {
    pub images: Vec<Element>,
    pub is_homomorphism: bool,
    pub is_bijective: bool,
    pub is_class_preserving: bool,
    pub is_central: bool,
    pub is_inner: bool,
    pub inner_witness: Option<Element>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lemma23 {
    /// `Z(G)` lies in `{[x, g] : g in G}` for every `x` outside `gamma_2(G)`.
    pub predicate: bool,
    /// `|Autcent(G)| |G : Z_2(G)|`, when the predicate holds and the central
    /// automorphism count is available.
    pub lower_bound: Option<u128>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub lemma26_upper: u128,
    /// `None` when `G` is abelian and the predicate is meaningless.
    pub lemma23: Option<Lemma23>,
}

impl Bounds {
    pub fn lower(&self) -> Option<u128> {
        self.lemma23.and_then(|l| l.lower_bound)
    }
}

#[derive(Clone, Debug)]
pub struct AutcResult {
    pub prime: u32,
    pub autc_order: u128,
    pub inn_order: u128,
    pub outc_order: u128,
    pub autcent_order: Option<u128>,
    pub autc_intersect_autcent_order: u128,
    /// One map per coset of `Inn(G)`, the identity coset first.
    pub generators_of_outc: Vec<GenMap>,
    pub bounds: Bounds,
    pub search_space: u128,
    pub sha_rigid: bool,
    pub sha_size: u128,
}

// How the image of a pc-generator follows from earlier images.
#[derive(Clone, Debug)]
enum Def {
    Minimal(usize),
    Power(usize),
    Commutator(usize, usize),
    Word(Vec<usize>),
}

/// Precomputed data for testing maps on one group.
pub struct AutContext {
    table: GroupTable,
    partition: ConjugacyPartition,
    center_mask: Vec<bool>,
    omega1_center: Vec<u32>,
    minimal: Vec<usize>,
    min_ranks: Vec<u32>,
    defs: Vec<Def>,
    checks: Vec<(Relation, u32)>,
    inner: HashMap<Vec<u32>, u32>,
}

impl AutContext {
    pub fn new(pres: &PcPresentation, minimal_gens: &[usize]) -> Result<AutContext> {
        Self::from_table(GroupTable::new(pres)?, minimal_gens)
    }

    pub fn from_table(table: GroupTable, minimal_gens: &[usize]) -> Result<AutContext> {
        let n = table.ngens();
        if let Some(&k) = minimal_gens.iter().find(|&&k| k >= n) {
            return Err(Error::IndexOutOfRange { index: k, ngens: n });
        }
        let rank = subgroup::minimal_generator_rank(&table);
        let gens: Vec<Element> = minimal_gens.iter().map(|&k| Element::generator(k)).collect();
        if minimal_gens.len() != rank || subgroup::closure(&table, &gens).len() != table.order() {
            return Err(Error::Precondition(format!(
                "{} generator(s) given, but a minimal generating set has {rank}",
                minimal_gens.len()
            )));
        }
        let partition = subgroup::conjugacy_partition(&table);
        let center = subgroup::center(&table);
        let center_mask = center.mask(table.order());
        let omega1_center = subgroup::omega1_center(&table)
            .ranks()
            .iter()
            .copied()
            .filter(|&r| r != 0)
            .collect();
        let min_ranks: Vec<u32> = minimal_gens.iter().map(|&k| table.generator(k)).collect();
        let (defs, checks) = definitions(&table, minimal_gens, &min_ranks);
        let mut inner = HashMap::new();
        for h in 0..table.order() as u32 {
            let key: Vec<u32> = min_ranks.iter().map(|&x| table.conj(x, h)).collect();
            inner.entry(key).or_insert(h);
        }
        Ok(AutContext {
            table,
            partition,
            center_mask,
            omega1_center,
            minimal: minimal_gens.to_vec(),
            min_ranks,
            defs,
            checks,
            inner,
        })
    }

    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn partition(&self) -> &ConjugacyPartition {
        &self.partition
    }

    pub fn minimal_gens(&self) -> &[usize] {
        &self.minimal
    }

    pub fn minimal_ranks(&self) -> &[u32] {
        &self.min_ranks
    }

    pub fn is_central_rank(&self, r: u32) -> bool {
        self.center_mask[r as usize]
    }

    pub fn inn_order(&self) -> u128 {
        self.inner.len() as u128
    }

    /// One conjugating element per inner automorphism, least rank first.
    pub fn inner_witnesses(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.inner.values().copied().collect();
        v.sort_unstable();
        v
    }

    /// Images of all pc-generators under the map sending the minimal
    /// generators to `mins`, assuming it is a homomorphism.
    pub fn pc_images(&self, mins: &[u32]) -> Vec<u32> {
        let mut out = [0u32; MAX_GENS];
        self.fill_pc_images(mins, &mut out);
        out[..self.table.ngens()].to_vec()
    }

    fn fill_pc_images(&self, mins: &[u32], out: &mut [u32; MAX_GENS]) {
        let t = &self.table;
        let p = t.prime() as i64;
        for (k, def) in self.defs.iter().enumerate() {
            out[k] = match def {
                Def::Minimal(s) => mins[*s],
                Def::Power(i) => t.pow(out[*i], p),
                Def::Commutator(j, i) => t.comm(out[*j], out[*i]),
                Def::Word(w) => w.iter().fold(0, |acc, &s| t.mul(acc, mins[s])),
            };
        }
    }

    fn relations_hold(&self, imgs: &[u32; MAX_GENS]) -> bool {
        let t = &self.table;
        let n = t.ngens();
        let p = t.prime() as i64;
        self.checks.iter().all(|&(rel, rhs)| {
            let lhs = match rel {
                Relation::Power(i) => t.pow(imgs[i], p),
                Relation::Commutator(j, i) => t.comm(imgs[j], imgs[i]),
            };
            lhs == t.substitute(&imgs[..n], rhs)
        })
    }

    fn injective_fast(&self, imgs: &[u32]) -> bool {
        // A nontrivial normal subgroup meets Z(G) in an element of order p.
        self.omega1_center
            .iter()
            .all(|&z| self.table.substitute(imgs, z) != 0)
    }

    fn surjective_exhaustive(&self, imgs: &[u32]) -> bool {
        subgroup::closure_ranks(&self.table, imgs).len() == self.table.order()
    }

    fn class_preserving(&self, imgs: &[u32], mode: Verification) -> bool {
        let t = &self.table;
        let cid = &self.partition.class_id;
        match mode {
            // delta(x^h) = delta(x)^delta(h), so representatives suffice.
            Verification::Fast => self.partition.reps.iter().enumerate().all(|(c, x)| {
                cid[t.substitute(imgs, t.rank(x)) as usize] == c as u32
            }),
            Verification::Exhaustive => (0..t.order() as u32)
                .all(|g| cid[t.substitute(imgs, g) as usize] == cid[g as usize]),
        }
    }

    fn is_central_map(&self, mins: &[u32]) -> bool {
        let t = &self.table;
        self.min_ranks
            .iter()
            .zip(mins)
            .all(|(&x, &y)| self.center_mask[t.mul(t.inv(x), y) as usize])
    }

    pub fn inner_witness(&self, mins: &[u32]) -> Option<u32> {
        self.inner.get(mins).copied()
    }

    /// Tests a map given by images of the minimal generators.
    pub fn examine(&self, images: &[Element], mode: Verification) -> Result<GenMap> {
        if images.len() != self.minimal.len() {
            return Err(Error::LengthMismatch {
                expected: self.minimal.len(),
                got: images.len(),
            });
        }
        for e in images {
            self.table.presentation().validate(e)?;
        }
        let mins: Vec<u32> = images.iter().map(|e| self.table.rank(e)).collect();
        Ok(self.examine_ranks(&mins, mode, false).unwrap())
    }

    // With `stop_early`, returns None as soon as the map fails to be a
    // class-preserving automorphism.
    fn examine_ranks(&self, mins: &[u32], mode: Verification, stop_early: bool) -> Option<GenMap> {
        let n = self.table.ngens();
        let mut imgs = [0u32; MAX_GENS];
        self.fill_pc_images(mins, &mut imgs);
        let is_homomorphism = self.relations_hold(&imgs);
        let mut is_bijective = false;
        let mut is_class_preserving = false;
        if is_homomorphism {
            let cp = self.class_preserving(&imgs[..n], mode);
            if stop_early && !cp {
                return None;
            }
            is_bijective = match mode {
                Verification::Fast => self.injective_fast(&imgs[..n]),
                Verification::Exhaustive => self.surjective_exhaustive(&imgs[..n]),
            };
            is_class_preserving = cp && is_bijective;
        }
        if stop_early && !is_class_preserving {
            return None;
        }
        let witness = if is_homomorphism { self.inner_witness(mins) } else { None };
        Some(GenMap {
            images: mins.iter().map(|&r| self.table.element(r)).collect(),
            is_homomorphism,
            is_bijective,
            is_class_preserving,
            is_central: is_homomorphism && self.is_central_map(mins),
            is_inner: witness.is_some(),
            inner_witness: witness.map(|h| self.table.element(h)),
        })
    }

    /// Members of the class of each minimal generator.
    pub fn candidate_lists(&self) -> Vec<Vec<u32>> {
        let cid = &self.partition.class_id;
        self.min_ranks
            .iter()
            .map(|&x| {
                let c = cid[x as usize];
                (0..self.table.order() as u32)
                    .filter(|&g| cid[g as usize] == c)
                    .collect()
            })
            .collect()
    }

    /// `prod |x_i^G|` over the minimal generators.
    pub fn lemma26_upper_bound(&self) -> u128 {
        self.min_ranks
            .iter()
            .map(|&x| self.partition.class_size_of_rank(x) as u128)
            .product()
    }

    /// All class-preserving automorphisms, sorted by the ranks of the images.
    pub fn enumerate(&self, mode: Verification, guard: u128) -> Result<Vec<GenMap>> {
        let bound = self.lemma26_upper_bound();
        if bound > guard {
            return Err(Error::SearchGuard { bound, guard });
        }
        let lists = self.candidate_lists();
        let mut found: Vec<(Vec<u32>, GenMap)> = (0..bound as u64)
            .into_par_iter()
            .filter_map(|mut idx| {
                let mut mins = [0u32; MAX_GENS];
                for (s, list) in lists.iter().enumerate().rev() {
                    let len = list.len() as u64;
                    mins[s] = list[(idx % len) as usize];
                    idx /= len;
                }
                let mins = &mins[..lists.len()];
                self.examine_ranks(mins, mode, true)
                    .map(|m| (mins.to_vec(), m))
            })
            .collect();
        found.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(found.into_iter().map(|(_, m)| m).collect())
    }

    fn ranks_of(&self, m: &GenMap) -> Vec<u32> {
        m.images.iter().map(|e| self.table.rank(e)).collect()
    }

    /// Representatives of the cosets of `Inn(G)` among `auts`, in order.
    pub fn outer_representatives(&self, auts: &[GenMap]) -> Vec<GenMap> {
        let t = &self.table;
        let witnesses = self.inner_witnesses();
        let mut covered: HashSet<Vec<u32>> = HashSet::new();
        let mut reps = Vec::new();
        // Put the identity first so the trivial coset leads.
        let mut order: Vec<&GenMap> = auts.iter().collect();
        order.sort_by_key(|m| !m.is_inner);
        for m in order {
            let mins = self.ranks_of(m);
            if covered.contains(&mins) {
                continue;
            }
            for &h in &witnesses {
                covered.insert(mins.iter().map(|&y| t.conj(y, h)).collect());
            }
            reps.push(m.clone());
        }
        reps
    }

    pub fn autcent_order(&self) -> Result<u128> {
        autcent_order_via_hom(&self.table)
    }

    /// Enumerates `Aut_c(G)` and assembles the orders and bounds.
    pub fn autc(&self, guard: u128) -> Result<AutcResult> {
        let auts = self.enumerate(Verification::Fast, guard)?;
        let autc_order = auts.len() as u128;
        let inn_order = self.inn_order();
        if autc_order % inn_order != 0 {
            return Err(Error::Precondition(format!(
                "|Inn(G)| = {inn_order} does not divide the {autc_order} maps found"
            )));
        }
        let autcent = autcent_order_via_hom(&self.table).ok();
        let lemma23 = lemma23_with_autcent(&self.table, &self.partition, autcent);
        let reps = self.outer_representatives(&auts);
        let outc_order = autc_order / inn_order;
        debug_assert_eq!(reps.len() as u128, outc_order);
        Ok(AutcResult {
            prime: self.table.prime(),
            autc_order,
            inn_order,
            outc_order,
            autcent_order: autcent,
            autc_intersect_autcent_order: auts.iter().filter(|m| m.is_central).count() as u128,
            generators_of_outc: reps,
            bounds: Bounds {
                lemma26_upper: self.lemma26_upper_bound(),
                lemma23,
            },
            search_space: self.lemma26_upper_bound(),
            sha_rigid: outc_order == 1,
            sha_size: outc_order,
        })
    }
}

fn definitions(t: &GroupTable, minimal: &[usize], min_ranks: &[u32]) -> (Vec<Def>, Vec<(Relation, u32)>) {
    let pres = t.presentation();
    let n = t.ngens();
    let mut defs = Vec::with_capacity(n);
    let mut used = Vec::new();
    let mut words: Option<Vec<Option<Vec<usize>>>> = None;
    for k in 0..n {
        if let Some(s) = minimal.iter().position(|&m| m == k) {
            defs.push(Def::Minimal(s));
            continue;
        }
        let g = Element::generator(k);
        let rel = pres.relations().into_iter().find(|&r| pres.relation_rhs(r) == g);
        match rel {
            Some(r @ Relation::Power(i)) => {
                used.push(r);
                defs.push(Def::Power(i));
            }
            Some(r @ Relation::Commutator(j, i)) => {
                used.push(r);
                defs.push(Def::Commutator(j, i));
            }
            None => {
                let w = words.get_or_insert_with(|| shortest_words(t, min_ranks));
                defs.push(Def::Word(w[t.generator(k) as usize].clone().unwrap()));
            }
        }
    }
    let checks = pres
        .relations()
        .into_iter()
        .filter(|r| !used.contains(r))
        .map(|r| (r, t.rank(&pres.relation_rhs(r))))
        .collect();
    (defs, checks)
}

// Breadth-first words in the minimal generators (as slot indices).
fn shortest_words(t: &GroupTable, gens: &[u32]) -> Vec<Option<Vec<usize>>> {
    let mut parent: Vec<Option<(u32, usize)>> = vec![None; t.order()];
    let mut seen = vec![false; t.order()];
    seen[0] = true;
    let mut queue = std::collections::VecDeque::from([0u32]);
    while let Some(x) = queue.pop_front() {
        for (s, &g) in gens.iter().enumerate() {
            let y = t.mul(x, g);
            if !seen[y as usize] {
                seen[y as usize] = true;
                parent[y as usize] = Some((x, s));
                queue.push_back(y);
            }
        }
    }
    (0..t.order())
        .map(|r| {
            if !seen[r] {
                return None;
            }
            let mut w = Vec::new();
            let mut x = r as u32;
            while let Some((prev, s)) = parent[x as usize] {
                w.push(s);
                x = prev;
            }
            w.reverse();
            Some(w)
        })
        .collect()
}

pub fn inn_order(t: &GroupTable) -> u128 {
    (t.order() / subgroup::center(t).len()) as u128
}

/// `prod p^min(a_i, b_j)`, the number of homomorphisms between abelian
/// groups with the given invariants.
pub fn hom_count(a: &AbelianInvariants, b: &AbelianInvariants) -> u128 {
    let p = a.prime as u128;
    let mut total = 1u128;
    for &x in &a.exponents {
        for &y in &b.exponents {
            total *= p.pow(x.min(y));
        }
    }
    total
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorVerdict {
    /// `Z(G) <= Phi(G)`: no abelian direct factor.
    PurelyNonAbelian,
    /// A central element of order p outside `Phi(G)` splits off.
    HasAbelianFactor,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectFactorScan {
    pub verdict: FactorVerdict,
    /// Central pc-generators of order p that occur in no relation value.
    pub split_generators: Vec<usize>,
}

pub fn direct_factor_scan(t: &GroupTable) -> DirectFactorScan {
    let pres = t.presentation();
    let n = t.ngens();
    let center = subgroup::center(t);
    let phi = subgroup::frattini(t);
    let verdict = if center.is_subset(&phi) {
        FactorVerdict::PurelyNonAbelian
    } else if subgroup::omega1_center(t)
        .ranks()
        .iter()
        .any(|&r| !phi.contains_rank(r))
    {
        FactorVerdict::HasAbelianFactor
    } else {
        FactorVerdict::Unknown
    };
    let rels = pres.relations();
    let split_generators = (0..n)
        .filter(|&k| {
            pres.power_relation(k).is_identity()
                && center.contains_rank(t.generator(k))
                && rels
                    .iter()
                    .all(|&r| pres.relation_rhs(r).exponent(k) == 0)
        })
        .collect();
    DirectFactorScan {
        verdict,
        split_generators,
    }
}

/// `|Hom(G/gamma_2(G), Z(G))|`, the number of central automorphisms of a
/// group without abelian direct factors.
pub fn autcent_order_via_hom(t: &GroupTable) -> Result<u128> {
    if t.presentation().is_abelian() {
        return Err(Error::Precondition("the group is abelian".into()));
    }
    if direct_factor_scan(t).verdict == FactorVerdict::HasAbelianFactor {
        return Err(Error::Precondition("the group has an abelian direct factor".into()));
    }
    let quotient = subgroup::abelianization(t);
    let z = subgroup::abelian_invariants(t, &subgroup::center(t))?;
    Ok(hom_count(&quotient, &z))
}

// x Z lies in the class of x iff Z is inside {[x, g]}; a generating set of Z
// and one x per class suffice.
fn lemma23_predicate(t: &GroupTable, partition: &ConjugacyPartition) -> bool {
    let derived = subgroup::derived_subgroup(t);
    let zgens = subgroup::generating_set(t, &subgroup::center(t));
    partition.reps.iter().all(|x| {
        let r = t.rank(x);
        derived.contains_rank(r)
            || zgens
                .iter()
                .all(|&z| partition.class_of_rank(t.mul(r, z)) == partition.class_of_rank(r))
    })
}

fn lemma23_with_autcent(
    t: &GroupTable,
    partition: &ConjugacyPartition,
    autcent: Option<u128>,
) -> Option<Lemma23> {
    if t.presentation().is_abelian() {
        return None;
    }
    let predicate = lemma23_predicate(t, partition);
    let z2 = subgroup::second_center(t).len() as u128;
    Some(Lemma23 {
        predicate,
        lower_bound: autcent
            .filter(|_| predicate)
            .map(|a| a * t.order() as u128 / z2),
    })
}

pub fn lemma23_bound(t: &GroupTable) -> Option<Lemma23> {
    let partition = subgroup::conjugacy_partition(t);
    lemma23_with_autcent(t, &partition, autcent_order_via_hom(t).ok())
}

/// The predicate by brute force: `[x, G]` collected as a set for every
/// `x` outside `gamma_2(G)`.
pub fn lemma23_predicate_exhaustive(t: &GroupTable) -> bool {
    let derived = subgroup::derived_subgroup(t);
    let center = subgroup::center(t);
    (0..t.order() as u32)
        .filter(|&x| !derived.contains_rank(x))
        .all(|x| {
            let mut set = vec![false; t.order()];
            for g in 0..t.order() as u32 {
                set[t.comm(x, g) as usize] = true;
            }
            center.ranks().iter().all(|&z| set[z as usize])
        })
}

fn quotient_is_cyclic(t: &GroupTable, h: &SubgroupSet) -> bool {
    let index = t.order() / h.len();
    if index == 1 {
        return true;
    }
    let m = (index / t.prime() as usize) as i64;
    (0..t.order() as u32).any(|g| !h.contains_rank(t.pow(g, m)))
}

/// An abelian normal subgroup `H` with `G/H` cyclic, if one exists.
///
/// Such an `H` contains `gamma_2(G)`, so the search grows abelian subgroups
/// upward from it by adjoining centralizing elements.
pub fn lemma24_rigidity_test(t: &GroupTable) -> Option<SubgroupSet> {
    let start = subgroup::derived_subgroup(t);
    if !subgroup::is_abelian_subgroup(t, &start) {
        return None;
    }
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    seen.insert(start.ranks().to_vec());
    let mut stack = vec![start];
    while let Some(h) = stack.pop() {
        if quotient_is_cyclic(t, &h) {
            return Some(h);
        }
        let hgens = subgroup::generating_set(t, &h);
        let mut covered = h.mask(t.order());
        for x in 0..t.order() as u32 {
            if covered[x as usize] || hgens.iter().any(|&g| t.mul(g, x) != t.mul(x, g)) {
                continue;
            }
            let mut gens = hgens.clone();
            gens.push(x);
            let bigger = subgroup::closure_ranks(t, &gens);
            for &r in bigger.ranks() {
                covered[r as usize] = true;
            }
            if seen.insert(bigger.ranks().to_vec()) {
                stack.push(bigger);
            }
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma25Report {
    pub autc_order: usize,
    pub generators: usize,
    pub center_order: usize,
    pub centralizer_of_inn_order: usize,
    /// `C_{Aut_c}(Inn) = Z(Aut_c)`.
    pub holds: bool,
    pub is_abelian: bool,
    /// Maps flagged central during enumeration.
    pub flagged_central: usize,
    /// Maps acting trivially on `G/Z(G)`, checked on every element.
    pub central_by_definition: usize,
}

/// Checks, inside the group formed by `auts` under composition, that the
/// centralizer of the inner automorphisms is the center.
pub fn lemma25_invariant_check(ctx: &AutContext, auts: &[GenMap]) -> Result<Lemma25Report> {
    let t = ctx.table();
    let n = t.ngens();
    let keys: Vec<Vec<u32>> = auts.iter().map(|m| ctx.ranks_of(m)).collect();
    let index: HashMap<&[u32], usize> = keys.iter().enumerate().map(|(i, k)| (k.as_slice(), i)).collect();
    let pcs: Vec<Vec<u32>> = keys.iter().map(|k| ctx.pc_images(k)).collect();
    let identity: Vec<u32> = ctx.minimal_ranks().to_vec();
    let id = *index.get(identity.as_slice()).ok_or(Error::NotClosed)?;

    // Minimal-generator images of a∘b.
    let compose_key = |a: &[u32], b: &[u32]| -> Vec<u32> { b.iter().map(|&y| t.substitute(a, y)).collect() };
    let compose = |a: usize, b: usize| -> Result<usize> {
        let k = compose_key(&pcs[a], &keys[b]);
        index.get(k.as_slice()).copied().ok_or(Error::NotClosed)
    };

    // Greedy generating set, checking closure as it grows.
    let mut gens: Vec<usize> = Vec::new();
    let mut inside = vec![false; auts.len()];
    inside[id] = true;
    let mut members = vec![id];
    for a in 0..auts.len() {
        if inside[a] {
            continue;
        }
        gens.push(a);
        let mut frontier = members.clone();
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = compose(g, x)?;
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                    frontier.push(y);
                }
            }
        }
    }
    if members.len() != auts.len() {
        return Err(Error::NotClosed);
    }
    for &a in &gens {
        let inv_found = (0..auts.len()).any(|b| compose(a, b).ok() == Some(id));
        if !inv_found {
            return Err(Error::NotClosed);
        }
    }

    let commutes = |a: usize, b: usize| -> Result<bool> { Ok(compose(a, b)? == compose(b, a)?) };
    let mut center = 0;
    let mut cent_inn = 0;
    let inner_gens: Vec<Vec<u32>> = (0..n)
        .map(|k| {
            let g = t.generator(k);
            (0..n).map(|j| t.conj(t.generator(j), g)).collect()
        })
        .collect();
    for a in 0..auts.len() {
        let mut in_center = true;
        for &g in &gens {
            if !commutes(a, g)? {
                in_center = false;
                break;
            }
        }
        if in_center {
            center += 1;
        }
        let in_cent = inner_gens.iter().all(|iota| {
            compose_key(&pcs[a], &ctx.minimal_ranks().iter().map(|&x| t.substitute(iota, x)).collect::<Vec<_>>())
                == compose_key(iota, &keys[a])
        });
        if in_cent {
            cent_inn += 1;
        }
    }
    let mut is_abelian = true;
    'outer: for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[..i] {
            if !commutes(a, b)? {
                is_abelian = false;
                break 'outer;
            }
        }
    }
    let central_by_definition = pcs
        .par_iter()
        .filter(|pc| (0..t.order() as u32).all(|g| ctx.is_central_rank(t.mul(t.inv(g), t.substitute(pc, g)))))
        .count();
    Ok(Lemma25Report {
        autc_order: auts.len(),
        generators: gens.len(),
        center_order: center,
        centralizer_of_inn_order: cent_inn,
        holds: center == cent_inn,
        is_abelian,
        flagged_central: auts.iter().filter(|m| m.is_central).count(),
        central_by_definition,
    })
}

/// The map `x_i -> x_i beta_i` on the minimal generators, which is a
/// central automorphism when `G/gamma_2(G)` is elementary abelian and each
/// `beta_i` lies in `Omega_1(Z(G))`.
pub fn central_aut_from_assignment(ctx: &AutContext, betas: &[Element]) -> Result<GenMap> {
    let t = ctx.table();
    if betas.len() != ctx.minimal_gens().len() {
        return Err(Error::LengthMismatch {
            expected: ctx.minimal_gens().len(),
            got: betas.len(),
        });
    }
    let p = t.prime() as i64;
    for b in betas {
        t.presentation().validate(b)?;
        let r = t.rank(b);
        if !ctx.is_central_rank(r) || t.pow(r, p) != 0 {
            return Err(Error::Precondition(format!(
                "{} is not a central element of order dividing p",
                t.presentation().display(b)
            )));
        }
    }
    if !subgroup::abelianization(t).is_elementary() {
        return Err(Error::Precondition("G/gamma_2(G) is not elementary abelian".into()));
    }
    if direct_factor_scan(t).verdict == FactorVerdict::HasAbelianFactor {
        return Err(Error::Precondition("the group has an abelian direct factor".into()));
    }
    let images: Vec<Element> = ctx
        .minimal_ranks()
        .iter()
        .zip(betas)
        .map(|(&x, b)| t.element(t.mul(x, t.rank(b))))
        .collect();
    let m = ctx.examine(&images, Verification::Fast)?;
    if !(m.is_homomorphism && m.is_bijective && m.is_central) {
        return Err(Error::Precondition("assignment does not extend to an automorphism".into()));
    }
    Ok(m)
}
