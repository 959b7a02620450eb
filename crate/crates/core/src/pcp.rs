use std::fmt;

use crate::element::{Element, MAX_GENS};
use crate::error::{Error, Result};
use crate::word::Word;

/// A defining relation of a pc-presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    /// `g_i^p = w`
    Power(usize),
    /// `[g_j, g_i] = w` with `j > i`
    Commutator(usize, usize),
}

/// A power-commutator presentation of a group of order `p^n`.
///
/// Relations are stored in collected form. Alongside them the presentation
/// keeps the tables the collector needs: `g_j^{g_i}` for `j > i` and a flag
/// for generator pairs that commute.
#[derive(Clone)]
pub struct PcPresentation {
    prime: u8,
    labels: Vec<String>,
    powers: [Element; MAX_GENS],
    comms: [[Element; MAX_GENS]; MAX_GENS],
    conj: [[Element; MAX_GENS]; MAX_GENS],
    commutes: [[bool; MAX_GENS]; MAX_GENS],
}

impl PartialEq for PcPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.prime == other.prime
            && self.labels == other.labels
            && self.powers == other.powers
            && self.comms == other.comms
    }
}

impl Eq for PcPresentation {}

impl fmt::Debug for PcPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PcPresentation(p = {}, gens = {:?})", self.prime, self.labels)?;
        for rel in self.relations() {
            let rhs = self.relation_rhs(rel);
            if !rhs.is_identity() {
                writeln!(f, "  {} = {}", self.relation_name(rel), self.display(&rhs))?;
            }
        }
        Ok(())
    }
}

pub fn is_odd_prime(p: u32) -> bool {
    p >= 3 && p % 2 == 1 && (3..).step_by(2).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Collects relations by generator label or index, then builds a
/// [`PcPresentation`] from them. Unset relations are trivial.
#[derive(Clone, Debug)]
pub struct PcBuilder {
    prime: u32,
    labels: Vec<String>,
    powers: Vec<Word>,
    comms: Vec<Vec<Word>>,
}

impl PcBuilder {
    pub fn new<S: AsRef<str>>(prime: u32, labels: &[S]) -> Result<PcBuilder> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        if labels.len() > MAX_GENS {
            return Err(Error::TooManyGenerators(labels.len()));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        Ok(PcBuilder {
            prime,
            labels,
            powers: vec![Word::identity(); n],
            comms: vec![vec![Word::identity(); n]; n],
        })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    fn index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    fn check_index(&self, k: usize) -> Result<()> {
        if k < self.labels.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: k,
                ngens: self.labels.len(),
            })
        }
    }

    /// Sets `g_i^p = w`.
    pub fn set_power(&mut self, i: usize, w: Word) -> Result<&mut Self> {
        self.check_index(i)?;
        self.powers[i] = w;
        Ok(self)
    }

    /// Sets `[g_a, g_b] = w`. Either orientation is accepted; `[g_b, g_a]` is
    /// stored as the inverse word when `a < b`.
    pub fn set_commutator(&mut self, a: usize, b: usize, w: Word) -> Result<&mut Self> {
        self.check_index(a)?;
        self.check_index(b)?;
        if a == b {
            return Err(Error::Precondition(format!(
                "commutator of {} with itself is not a relation",
                self.labels[a]
            )));
        }
        if a > b {
            self.comms[a][b] = w;
        } else {
            self.comms[b][a] = w.inverse();
        }
        Ok(self)
    }

    /// Label form of [`set_power`](Self::set_power): `power("a", "b")` means `a^p = b`.
    pub fn power(&mut self, g: &str, w: &str) -> Result<&mut Self> {
        let i = self.index(g)?;
        let w = Word::parse(w, &self.labels)?;
        self.set_power(i, w)
    }

    /// Label form of [`set_commutator`](Self::set_commutator): `comm("a1", "a", "a2")` means `[a1, a] = a2`.
    pub fn comm(&mut self, a: &str, b: &str, w: &str) -> Result<&mut Self> {
        let a = self.index(a)?;
        let b = self.index(b)?;
        let w = Word::parse(w, &self.labels)?;
        self.set_commutator(a, b, w)
    }

    pub fn build(&self) -> Result<PcPresentation> {
        if !is_odd_prime(self.prime) || self.prime > 251 {
            return Err(Error::InvalidPrime(self.prime));
        }
        let n = self.labels.len();
        let shape = |rel: String, w: &Word, bound: usize| -> Result<()> {
            match w.min_generator() {
                Some(g) if g <= bound => Err(Error::Shape {
                    relation: rel,
                    generator: self.labels[g].clone(),
                    bound: self.labels[bound].clone(),
                }),
                _ => Ok(()),
            }
        };
        for i in 0..n {
            shape(format!("{}^p", self.labels[i]), &self.powers[i], i)?;
            for j in i + 1..n {
                let rel = format!("[{}, {}]", self.labels[j], self.labels[i]);
                shape(rel, &self.comms[j][i], j)?;
            }
        }

        let mut pres = PcPresentation {
            prime: self.prime as u8,
            labels: self.labels.clone(),
            powers: [Element::IDENTITY; MAX_GENS],
            comms: [[Element::IDENTITY; MAX_GENS]; MAX_GENS],
            conj: [[Element::IDENTITY; MAX_GENS]; MAX_GENS],
            commutes: [[true; MAX_GENS]; MAX_GENS],
        };
        for j in 0..n {
            for i in 0..j {
                pres.conj[j][i] = Element::generator(j);
            }
        }
        // Top-down: everything involving g_m only needs tables for higher indices.
        for m in (0..n).rev() {
            pres.powers[m] = pres.collect(&self.powers[m])?;
            for j in m + 1..n {
                let c = pres.collect(&self.comms[j][m])?;
                let mut conj = c;
                conj.exps_mut()[j] = 1;
                pres.comms[j][m] = c;
                pres.conj[j][m] = conj;
                pres.commutes[j][m] = c.is_identity();
            }
        }
        Ok(pres)
    }
}

impl PcPresentation {
    pub fn prime(&self) -> u32 {
        self.prime as u32
    }

    pub fn ngens(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// `|G| = p^n`.
    pub fn order(&self) -> u128 {
        (self.prime as u128).pow(self.ngens() as u32)
    }

    /// Collected value of `g_i^p`.
    pub fn power_relation(&self, i: usize) -> Element {
        self.powers[i]
    }

    /// Collected value of `[g_j, g_i]` for `j > i`.
    pub fn commutator_relation(&self, j: usize, i: usize) -> Element {
        assert!(j > i, "commutator relations are indexed with j > i");
        self.comms[j][i]
    }

    /// All defining relations: powers first, then commutators `[g_j, g_i]`
    /// ordered by `(i, j)`.
    pub fn relations(&self) -> Vec<Relation> {
        let n = self.ngens();
        let mut out: Vec<Relation> = (0..n).map(Relation::Power).collect();
        for i in 0..n {
            for j in i + 1..n {
                out.push(Relation::Commutator(j, i));
            }
        }
        out
    }

    pub fn relation_rhs(&self, rel: Relation) -> Element {
        match rel {
            Relation::Power(i) => self.powers[i],
            Relation::Commutator(j, i) => self.comms[j][i],
        }
    }

    pub fn relation_name(&self, rel: Relation) -> String {
        match rel {
            Relation::Power(i) => format!("{}^p", self.labels[i]),
            Relation::Commutator(j, i) => format!("[{}, {}]", self.labels[j], self.labels[i]),
        }
    }

    /// `true` when every commutator relation is trivial.
    pub fn is_abelian(&self) -> bool {
        let n = self.ngens();
        (0..n).all(|j| (0..j).all(|i| self.commutes[j][i]))
    }

    /// Checks that an element belongs to this presentation's group.
    pub fn validate(&self, e: &Element) -> Result<()> {
        let n = self.ngens();
        for (k, &x) in e.exponents().iter().enumerate() {
            if (k >= n && x != 0) || x >= self.prime {
                return Err(Error::Precondition(format!(
                    "{e:?} is not a normal form for this presentation"
                )));
            }
        }
        Ok(())
    }

    /// Mixed-radix rank with `g_1` most significant, so rank order is the
    /// lexicographic order of exponent vectors.
    pub fn rank(&self, e: &Element) -> usize {
        let p = self.prime as usize;
        e.exponents()[..self.ngens()]
            .iter()
            .fold(0, |acc, &x| acc * p + x as usize)
    }

    pub fn unrank(&self, mut r: usize) -> Element {
        let p = self.prime as usize;
        let mut e = Element::IDENTITY;
        let exps = e.exps_mut();
        for k in (0..self.ngens()).rev() {
            exps[k] = (r % p) as u8;
            r /= p;
        }
        e
    }

    /// The normal-form word of an element.
    pub fn word_of(&self, e: &Element) -> Word {
        Word::from_letters(e.support().map(|(k, x)| (k, x as i64)))
    }

    /// Renders an element with generator labels, e.g. `a1*b2^2`.
    pub fn display(&self, e: &Element) -> String {
        self.word_of(e).display(&self.labels)
    }

    /// Parses a word over this presentation's labels and collects it.
    pub fn parse(&self, text: &str) -> Result<Element> {
        self.collect(&Word::parse(text, &self.labels)?)
    }

    // Multiplies `v` by a single generator `g_k`, pushing any left-over work
    // onto the stack.
    fn mul_gen(&self, v: &mut Element, k: usize, stack: &mut Vec<(u8, u8)>) {
        let n = self.ngens();
        let p = self.prime;
        let exps = v.exps_mut();
        let commutes = &self.commutes;
        let tail_commutes = (k + 1..n).all(|j| exps[j] == 0 || commutes[j][k]);
        if tail_commutes && exps[k] + 1 < p {
            exps[k] += 1;
            return;
        }
        // v = prefix * g_k^e * T; v * g_k = prefix * g_k^(e+1) * T^(g_k).
        let tail = *exps;
        for x in &mut exps[k + 1..n] {
            *x = 0;
        }
        for j in (k + 1..n).rev() {
            let t = tail[j];
            if t == 0 {
                continue;
            }
            if commutes[j][k] {
                stack.push((j as u8, t));
            } else {
                let w = self.conj[j][k].exponents();
                for _ in 0..t {
                    for i in (j..n).rev() {
                        if w[i] != 0 {
                            stack.push((i as u8, w[i]));
                        }
                    }
                }
            }
        }
        exps[k] += 1;
        if exps[k] == p {
            exps[k] = 0;
            let w = self.powers[k].exponents();
            for i in (k + 1..n).rev() {
                if w[i] != 0 {
                    stack.push((i as u8, w[i]));
                }
            }
        }
    }

    fn run(&self, v: &mut Element, stack: &mut Vec<(u8, u8)>) {
        while let Some((k, c)) = stack.pop() {
            if c > 1 {
                stack.push((k, c - 1));
            }
            self.mul_gen(v, k as usize, stack);
        }
    }

    fn push_element(stack: &mut Vec<(u8, u8)>, e: &Element, n: usize) {
        let exps = e.exponents();
        for k in (0..n).rev() {
            if exps[k] != 0 {
                stack.push((k as u8, exps[k]));
            }
        }
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Element {
        let mut v = *a;
        let mut stack = Vec::with_capacity(32);
        Self::push_element(&mut stack, b, self.ngens());
        self.run(&mut v, &mut stack);
        v
    }

    /// `v * g_k^c` for `0 < c < p`.
    fn mul_gen_power(&self, v: &mut Element, k: usize, c: u8, stack: &mut Vec<(u8, u8)>) {
        stack.push((k as u8, c));
        self.run(v, stack);
    }

    pub fn inverse(&self, a: &Element) -> Element {
        // Clear exponents left to right; the accumulated multipliers form a^-1.
        let mut cur = *a;
        let mut inv = Element::IDENTITY;
        let mut stack = Vec::with_capacity(32);
        while let Some(k) = cur.leading() {
            let c = self.prime - cur.exponent(k);
            self.mul_gen_power(&mut cur, k, c, &mut stack);
            self.mul_gen_power(&mut inv, k, c, &mut stack);
        }
        inv
    }

    pub fn power(&self, a: &Element, k: i64) -> Element {
        let base = if k < 0 { self.inverse(a) } else { *a };
        let mut e = k.unsigned_abs();
        let mut sq = base;
        let mut acc = Element::IDENTITY;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.multiply(&acc, &sq);
            }
            e >>= 1;
            if e > 0 {
                sq = self.multiply(&sq, &sq);
            }
        }
        acc
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(&self, a: &Element, b: &Element) -> Element {
        let ab = self.multiply(a, b);
        let ba = self.multiply(b, a);
        self.multiply(&self.inverse(&ba), &ab)
    }

    /// `a^b = b^-1 a b`.
    pub fn conjugate(&self, a: &Element, b: &Element) -> Element {
        let ab = self.multiply(a, b);
        self.multiply(&self.inverse(b), &ab)
    }

    pub fn element_order(&self, a: &Element) -> u128 {
        let mut x = *a;
        let mut order = 1u128;
        while !x.is_identity() {
            x = self.power(&x, self.prime as i64);
            order *= self.prime as u128;
        }
        order
    }

    /// Collects a word into normal form.
    pub fn collect(&self, w: &Word) -> Result<Element> {
        let n = self.ngens();
        let mut v = Element::IDENTITY;
        for &(k, e) in w.letters() {
            if k >= n {
                return Err(Error::IndexOutOfRange { index: k, ngens: n });
            }
            let g = self.power(&Element::generator(k), e);
            v = self.multiply(&v, &g);
        }
        Ok(v)
    }

    /// Value of the normal form `e` with `g_k` replaced by `images[k]`.
    pub fn substitute(&self, images: &[Element], e: &Element) -> Element {
        e.support().fold(Element::IDENTITY, |acc, (k, x)| {
            self.multiply(&acc, &self.power(&images[k], x as i64))
        })
    }

    /// Substitutes `images[k]` for `g_k` in `w` and collects.
    pub fn evaluate_hom(&self, images: &[Element], w: &Word) -> Result<Element> {
        if images.len() != self.ngens() {
            return Err(Error::LengthMismatch {
                expected: self.ngens(),
                got: images.len(),
            });
        }
        let mut v = Element::IDENTITY;
        for &(k, e) in w.letters() {
            let g = images.get(k).ok_or(Error::IndexOutOfRange {
                index: k,
                ngens: self.ngens(),
            })?;
            v = self.multiply(&v, &self.power(g, e));
        }
        Ok(v)
    }

    /// Relations violated by a proposed assignment of generator images.
    pub fn check_relations(&self, images: &[Element]) -> Result<Vec<RelationFailure>> {
        if images.len() != self.ngens() {
            return Err(Error::LengthMismatch {
                expected: self.ngens(),
                got: images.len(),
            });
        }
        let p = self.prime as i64;
        let mut out = Vec::new();
        for rel in self.relations() {
            let lhs = match rel {
                Relation::Power(i) => self.power(&images[i], p),
                Relation::Commutator(j, i) => self.commutator(&images[j], &images[i]),
            };
            let rhs = self.substitute(images, &self.relation_rhs(rel));
            if lhs != rhs {
                out.push(RelationFailure {
                    relation: rel,
                    name: self.relation_name(rel),
                    lhs,
                    rhs,
                });
            }
        }
        Ok(out)
    }
}

/// A defining relation that a set of images does not satisfy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationFailure {
    pub relation: Relation,
    pub name: String,
    pub lhs: Element,
    pub rhs: Element,
}
