//! Parameterised presentations of representatives of the isoclinism families
//! of groups of order `p^6`, constructors, and a line-oriented file format.

mod families;
mod format;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::consistency::check_consistency;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::pcp::{PcBuilder, PcPresentation};
use crate::subgroup;
use crate::table::GroupTable;

pub use format::{load, parse_entries, parse_entry, save, validate, validation_prime, write_entry};

/// Primes for which a template defines a group of order `p^6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Validity {
    AtLeast(u32),
}

impl Validity {
    pub fn holds(&self, p: u32) -> bool {
        match *self {
            Validity::AtLeast(q) => p >= q,
        }
    }

    pub fn describe(&self) -> String {
        match *self {
            Validity::AtLeast(q) => format!("p>={q}"),
        }
    }

    pub fn parse(s: &str) -> Option<Validity> {
        let q = s.trim().strip_prefix("p>=")?.trim().parse().ok()?;
        Some(Validity::AtLeast(q))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Relations taken from the defining relations of the family.
    Transcribed,
    /// A direct product of smaller groups with `C_p` or each other.
    DirectProduct,
    /// Not derivable from the relations available here.
    External,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::Transcribed => "transcribed",
            Provenance::DirectProduct => "direct-product",
            Provenance::External => "external",
        }
    }

    pub fn parse(s: &str) -> Option<Provenance> {
        match s.trim() {
            "transcribed" => Some(Provenance::Transcribed),
            "direct-product" => Some(Provenance::DirectProduct),
            "external" => Some(Provenance::External),
            _ => None,
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Value of a named template parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamValue {
    Int(i64),
    /// The least positive quadratic non-residue modulo `p`.
    NonResidue,
}

impl ParamValue {
    pub fn resolve(&self, p: u32) -> i64 {
        match *self {
            ParamValue::Int(v) => v,
            ParamValue::NonResidue => least_nonresidue(p) as i64,
        }
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::NonResidue => f.write_str("nonresidue"),
        }
    }
}

/// Resolved parameters handed to a template.
pub type Params = BTreeMap<String, i64>;

pub fn least_nonresidue(p: u32) -> u32 {
    (2..p)
        .find(|&a| (1..p).all(|x| (x * x) % p != a))
        .expect("odd primes have non-residues")
}

/// Declared structural invariants, as exponents of `p` (class is literal).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Invariants {
    pub center: Option<u32>,
    pub derived: Option<u32>,
    pub class: Option<u32>,
}

pub type TemplateFn = fn(u32, &Params) -> Result<PcPresentation>;

#[derive(Clone)]
pub enum Template {
    Builtin(TemplateFn),
    Fixed(PcPresentation),
    Missing(String),
}

impl fmt::Debug for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Template::Builtin(_) => f.write_str("Builtin"),
            Template::Fixed(p) => write!(f, "Fixed(p = {})", p.prime()),
            Template::Missing(r) => write!(f, "Missing({r})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CatalogueEntry {
    pub family: u32,
    pub label: String,
    pub validity: Validity,
    pub params: Vec<(String, ParamValue)>,
    pub minimal_gens: Vec<String>,
    pub expected_outc_exponent: u32,
    pub provenance: Provenance,
    pub invariants: Invariants,
    /// Entries with `verify = false` are left out of default verification runs.
    pub verify: bool,
    pub template: Template,
}

impl CatalogueEntry {
    pub fn params_at(&self, p: u32) -> Params {
        self.params
            .iter()
            .map(|(k, v)| (k.clone(), v.resolve(p)))
            .collect()
    }

    pub fn has_template(&self) -> bool {
        !matches!(self.template, Template::Missing(_))
    }

    /// Whether the entry can be built at `p`, and why not otherwise.
    pub fn availability(&self, p: u32) -> std::result::Result<(), Error> {
        match &self.template {
            Template::Missing(reason) => Err(Error::ExternalTemplate {
                label: self.label.clone(),
                reason: reason.clone(),
            }),
            Template::Fixed(pres) if pres.prime() != p => Err(Error::InvalidPrimeForEntry {
                label: self.label.clone(),
                prime: p,
                requirement: format!("p={}", pres.prime()),
            }),
            _ if !self.validity.holds(p) => Err(Error::InvalidPrimeForEntry {
                label: self.label.clone(),
                prime: p,
                requirement: self.validity.describe(),
            }),
            _ => Ok(()),
        }
    }

    /// Presentation at `p`, checked for consistency (but not invariants).
    pub fn presentation(&self, p: u32) -> Result<PcPresentation> {
        if !crate::pcp::is_odd_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        self.availability(p)?;
        let pres = match &self.template {
            Template::Builtin(f) => f(p, &self.params_at(p))?,
            Template::Fixed(pres) => pres.clone(),
            Template::Missing(_) => unreachable!(),
        };
        let report = check_consistency(&pres);
        if !report.is_consistent() {
            return Err(Error::Inconsistent(report.violations.len()));
        }
        Ok(pres)
    }

    pub fn minimal_gen_indices(&self, pres: &PcPresentation) -> Result<Vec<usize>> {
        self.minimal_gens
            .iter()
            .map(|l| pres.label_index(l))
            .collect()
    }

    /// Compares the declared invariants block against the group.
    pub fn check_invariants(&self, t: &GroupTable) -> Result<()> {
        let p = t.prime();
        let log = |n: usize| subgroup::log_p(p, n as u128).unwrap();
        let mut checks = Vec::new();
        if let Some(c) = self.invariants.center {
            checks.push(("center", c, log(subgroup::center(t).len())));
        }
        if let Some(d) = self.invariants.derived {
            checks.push(("derived", d, log(subgroup::derived_subgroup(t).len())));
        }
        if let Some(c) = self.invariants.class {
            checks.push(("class", c, subgroup::nilpotency_class(t) as u32));
        }
        for (key, declared, computed) in checks {
            if declared != computed {
                let show = |v: u32| {
                    if key == "class" {
                        v.to_string()
                    } else {
                        format!("p^{v}")
                    }
                };
                return Err(Error::InvariantMismatch {
                    key: key.into(),
                    declared: show(declared),
                    computed: show(computed),
                });
            }
        }
        let idx = self.minimal_gen_indices(t.presentation())?;
        let gens: Vec<Element> = idx.iter().map(|&k| Element::generator(k)).collect();
        let rank = subgroup::minimal_generator_rank(t);
        if gens.len() != rank || subgroup::closure(t, &gens).len() != t.order() {
            return Err(Error::InvariantMismatch {
                key: "mingens".into(),
                declared: self.minimal_gens.join(" "),
                computed: format!("rank {rank}"),
            });
        }
        Ok(())
    }

    /// Fixes the template at `p`, producing a self-contained entry.
    pub fn materialize(&self, p: u32) -> Result<CatalogueEntry> {
        let pres = self.presentation(p)?;
        let mut e = self.clone();
        e.params = self
            .params
            .iter()
            .map(|(k, v)| (k.clone(), ParamValue::Int(v.resolve(p))))
            .collect();
        e.template = Template::Fixed(pres);
        Ok(e)
    }
}

pub fn entries() -> &'static [CatalogueEntry] {
    static ENTRIES: OnceLock<Vec<CatalogueEntry>> = OnceLock::new();
    ENTRIES.get_or_init(families::all)
}

/// Looks an entry up by label (`Phi13(1^6)`), by `Phi13`, or by family number.
pub fn lookup(label: &str) -> Result<&'static CatalogueEntry> {
    let all = entries();
    if let Some(e) = all.iter().find(|e| e.label == label) {
        return Ok(e);
    }
    let family = label
        .strip_prefix("Phi")
        .unwrap_or(label)
        .parse::<u32>()
        .ok();
    if let Some(k) = family {
        if let Some(e) = all.iter().find(|e| e.family == k) {
            return Ok(e);
        }
    }
    Err(Error::UnknownEntry(label.to_string()))
}

/// Builds the presentation of a bundled entry at `p` and checks its
/// declared invariants.
pub fn build(label: &str, p: u32) -> Result<PcPresentation> {
    let entry = lookup(label)?;
    let pres = entry.presentation(p)?;
    entry.check_invariants(&GroupTable::new(&pres)?)?;
    Ok(pres)
}

fn rename_clashes(a: &[String], b: &[String]) -> Vec<String> {
    let mut taken: Vec<String> = a.to_vec();
    b.iter()
        .map(|l| {
            let mut name = l.clone();
            while taken.contains(&name) {
                name.push('\'');
            }
            taken.push(name.clone());
            name
        })
        .collect()
}

/// `A x B` with all cross commutators trivial. Clashing labels of `B` get
/// primes appended.
pub fn direct_product(a: &PcPresentation, b: &PcPresentation) -> Result<PcPresentation> {
    if a.prime() != b.prime() {
        return Err(Error::Precondition(format!(
            "factors over different primes {} and {}",
            a.prime(),
            b.prime()
        )));
    }
    let (na, nb) = (a.ngens(), b.ngens());
    let mut labels = a.labels().to_vec();
    labels.extend(rename_clashes(a.labels(), b.labels()));
    let mut builder = PcBuilder::new(a.prime(), &labels)?;
    for (pres, shift) in [(a, 0), (b, na)] {
        let n = if shift == 0 { na } else { nb };
        let shifted = |e: Element| {
            crate::word::Word::from_letters(e.support().map(|(k, x)| (k + shift, x as i64)))
        };
        for i in 0..n {
            builder.set_power(i + shift, shifted(pres.power_relation(i)))?;
            for j in i + 1..n {
                builder.set_commutator(j + shift, i + shift, shifted(pres.commutator_relation(j, i)))?;
            }
        }
    }
    builder.build()
}

/// Presentation of `G / <z>` for a central element `z` of order `p`.
///
/// With `k` the leading index of `z`, every relation value is multiplied by
/// the power of `z` that clears position `k`; `g_k` is then dropped.
pub fn quotient_by_central(pres: &PcPresentation, z: &Element) -> Result<PcPresentation> {
    pres.validate(z)?;
    let n = pres.ngens();
    let p = pres.prime() as i64;
    let k = z
        .leading()
        .ok_or_else(|| Error::Precondition("cannot factor out the identity".into()))?;
    if !pres.power(z, p).is_identity() {
        return Err(Error::Precondition(format!(
            "{} does not have order p",
            pres.display(z)
        )));
    }
    for g in 0..n {
        if pres.commutator(z, &Element::generator(g)) != Element::IDENTITY {
            return Err(Error::Precondition(format!(
                "{} is not central",
                pres.display(z)
            )));
        }
    }
    let zk = z.exponent(k) as i64;
    let zk_inv = (1..p).find(|x| x * zk % p == 1).unwrap();
    let reduce = |e: Element| -> crate::word::Word {
        let f = e.exponent(k) as i64;
        let m = (p - f * zk_inv % p) % p;
        let v = pres.multiply(&e, &pres.power(z, m));
        debug_assert_eq!(v.exponent(k), 0);
        crate::word::Word::from_letters(
            v.support()
                .map(|(i, x)| (if i > k { i - 1 } else { i }, x as i64)),
        )
    };
    let keep: Vec<usize> = (0..n).filter(|&i| i != k).collect();
    let labels: Vec<String> = keep.iter().map(|&i| pres.labels()[i].clone()).collect();
    let mut builder = PcBuilder::new(pres.prime(), &labels)?;
    for (ni, &i) in keep.iter().enumerate() {
        builder.set_power(ni, reduce(pres.power_relation(i)))?;
        for (nj, &j) in keep.iter().enumerate().skip(ni + 1) {
            builder.set_commutator(nj, ni, reduce(pres.commutator_relation(j, i)))?;
        }
    }
    let q = builder.build()?;
    let report = check_consistency(&q);
    if !report.is_consistent() {
        return Err(Error::Inconsistent(report.violations.len()));
    }
    Ok(q)
}
