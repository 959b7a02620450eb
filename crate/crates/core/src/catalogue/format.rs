//! Line-oriented catalogue files.
//!
//! ```text
//! label Phi13(1^6)
//! family 13
//! validity p>=3
//! provenance transcribed
//! param nu = nonresidue
//! mingens a1 a2 a3 a4
//! expect center = p^2
//! expect outc_exponent = 2
//! prime 5
//! gen a1 a2 a3 a4 b1 b2
//! comm a2 a1 = b1^-1
//! ```
//!
//! Records start at `label`. `prime`, `gen`, `pow` and `comm` are present only
//! for entries carrying their own presentation; a record without `gen` lines
//! refers to the bundled template of the same label. `#` starts a comment.

use std::fs;
use std::path::Path;

use super::{
    entries, CatalogueEntry, Invariants, ParamValue, Provenance, Template, Validity,
};
use crate::error::{Error, Result};
use crate::pcp::{PcBuilder, PcPresentation};
use crate::table::GroupTable;

/// Extension of catalogue files picked up when loading a directory.
pub const EXTENSION: &str = "cat";

pub fn write_entry(e: &CatalogueEntry) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(format!("label {}", e.label));
    line(format!("family {}", e.family));
    line(format!("validity {}", e.validity.describe()));
    line(format!("provenance {}", e.provenance));
    line(format!("verify {}", e.verify));
    for (k, v) in &e.params {
        line(format!("param {k} = {v}"));
    }
    line(format!("mingens {}", e.minimal_gens.join(" ")));
    for (key, v) in [("center", e.invariants.center), ("derived", e.invariants.derived)] {
        if let Some(v) = v {
            line(format!("expect {key} = p^{v}"));
        }
    }
    if let Some(c) = e.invariants.class {
        line(format!("expect class = {c}"));
    }
    line(format!("expect outc_exponent = {}", e.expected_outc_exponent));
    if let Template::Fixed(pres) = &e.template {
        write_presentation(pres, &mut line);
    }
    out
}

fn write_presentation(pres: &PcPresentation, line: &mut impl FnMut(String)) {
    let labels = pres.labels();
    line(format!("prime {}", pres.prime()));
    line(format!("gen {}", labels.join(" ")));
    for i in 0..pres.ngens() {
        let rhs = pres.power_relation(i);
        if !rhs.is_identity() {
            line(format!("pow {} = {}", labels[i], pres.display(&rhs)));
        }
    }
    for j in 0..pres.ngens() {
        for i in 0..j {
            let rhs = pres.commutator_relation(j, i);
            if !rhs.is_identity() {
                line(format!(
                    "comm {} {} = {}",
                    labels[j],
                    labels[i],
                    pres.display(&rhs)
                ));
            }
        }
    }
}

#[derive(Default)]
struct Draft {
    label: Option<String>,
    family: Option<u32>,
    validity: Option<Validity>,
    provenance: Option<Provenance>,
    verify: Option<bool>,
    params: Vec<(String, ParamValue)>,
    mingens: Vec<String>,
    invariants: Invariants,
    outc: Option<u32>,
    prime: Option<u32>,
    gens: Option<Vec<String>>,
    pows: Vec<(usize, String, String)>,
    comms: Vec<(usize, String, String, String)>,
}

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::CatalogueParse {
        line,
        message: message.into(),
    }
}

fn split_eq(rest: &str, line: usize) -> Result<(&str, &str)> {
    rest.split_once('=')
        .map(|(a, b)| (a.trim(), b.trim()))
        .ok_or_else(|| perr(line, "expected `=`"))
}

fn parse_p_power(v: &str, line: usize) -> Result<u32> {
    let v = v.trim();
    if v == "1" {
        return Ok(0);
    }
    if v == "p" {
        return Ok(1);
    }
    v.strip_prefix("p^")
        .and_then(|x| x.parse().ok())
        .ok_or_else(|| perr(line, format!("expected a power of p, got `{v}`")))
}

fn parse_num<T: std::str::FromStr>(v: &str, line: usize, what: &str) -> Result<T> {
    v.trim()
        .parse()
        .map_err(|_| perr(line, format!("invalid {what} `{}`", v.trim())))
}

impl Draft {
    fn apply(&mut self, lineno: usize, key: &str, rest: &str) -> Result<()> {
        match key {
            "label" => self.label = Some(rest.to_string()),
            "family" => self.family = Some(parse_num(rest, lineno, "family")?),
            "validity" => {
                self.validity = Some(
                    Validity::parse(rest).ok_or_else(|| perr(lineno, "invalid validity"))?,
                )
            }
            "provenance" => {
                self.provenance = Some(
                    Provenance::parse(rest).ok_or_else(|| perr(lineno, "invalid provenance"))?,
                )
            }
            "verify" => self.verify = Some(parse_num(rest, lineno, "flag")?),
            "param" => {
                let (k, v) = split_eq(rest, lineno)?;
                let v = if v == "nonresidue" {
                    ParamValue::NonResidue
                } else {
                    ParamValue::Int(parse_num(v, lineno, "parameter")?)
                };
                self.params.push((k.to_string(), v));
            }
            "mingens" => self.mingens = rest.split_whitespace().map(String::from).collect(),
            "expect" => {
                let (k, v) = split_eq(rest, lineno)?;
                match k {
                    "center" => self.invariants.center = Some(parse_p_power(v, lineno)?),
                    "derived" => self.invariants.derived = Some(parse_p_power(v, lineno)?),
                    "class" => self.invariants.class = Some(parse_num(v, lineno, "class")?),
                    "outc_exponent" => self.outc = Some(parse_num(v, lineno, "exponent")?),
                    _ => return Err(perr(lineno, format!("unknown invariant `{k}`"))),
                }
            }
            "prime" => self.prime = Some(parse_num(rest, lineno, "prime")?),
            "gen" => self.gens = Some(rest.split_whitespace().map(String::from).collect()),
            "pow" => {
                let (g, w) = split_eq(rest, lineno)?;
                self.pows.push((lineno, g.to_string(), w.to_string()));
            }
            "comm" => {
                let (lhs, w) = split_eq(rest, lineno)?;
                let parts: Vec<&str> = lhs.split_whitespace().collect();
                if parts.len() != 2 {
                    return Err(perr(lineno, "expected `comm x y = word`"));
                }
                self.comms
                    .push((lineno, parts[0].into(), parts[1].into(), w.to_string()));
            }
            _ => return Err(perr(lineno, format!("unknown record `{key}`"))),
        }
        Ok(())
    }

    fn finish(self, start: usize) -> Result<CatalogueEntry> {
        let label = self.label.ok_or_else(|| perr(start, "missing label"))?;
        let bundled = entries().iter().find(|e| e.label == label);
        let family = match (self.family, bundled) {
            (Some(f), _) => f,
            (None, Some(b)) => b.family,
            (None, None) => return Err(perr(start, "missing family")),
        };
        let template = match self.gens {
            Some(gens) => {
                let p = self
                    .prime
                    .ok_or_else(|| perr(start, "a presentation needs a `prime` record"))?;
                let mut b = PcBuilder::new(p, &gens).map_err(|e| perr(start, e.to_string()))?;
                for (ln, g, w) in &self.pows {
                    b.power(g, w).map_err(|e| perr(*ln, e.to_string()))?;
                }
                for (ln, x, y, w) in &self.comms {
                    b.comm(x, y, w).map_err(|e| perr(*ln, e.to_string()))?;
                }
                Template::Fixed(b.build().map_err(|e| perr(start, e.to_string()))?)
            }
            None => {
                if !self.pows.is_empty() || !self.comms.is_empty() || self.prime.is_some() {
                    return Err(perr(start, "relations given without a `gen` record"));
                }
                match bundled {
                    Some(b) => b.template.clone(),
                    None => Template::Missing("no presentation supplied".into()),
                }
            }
        };
        let provenance = self.provenance.unwrap_or(Provenance::Transcribed);
        Ok(CatalogueEntry {
            family,
            label,
            validity: self.validity.unwrap_or(Validity::AtLeast(3)),
            params: self.params,
            minimal_gens: self.mingens,
            expected_outc_exponent: self.outc.unwrap_or(0),
            provenance,
            invariants: self.invariants,
            verify: self.verify.unwrap_or(provenance != Provenance::External),
            template,
        })
    }
}

/// Parses every record in `text`.
pub fn parse_entries(text: &str) -> Result<Vec<CatalogueEntry>> {
    let mut out = Vec::new();
    let mut draft: Option<(usize, Draft)> = None;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        if key == "label" {
            if let Some((start, d)) = draft.take() {
                out.push(d.finish(start)?);
            }
            draft = Some((lineno, Draft::default()));
        }
        match draft.as_mut() {
            Some((_, d)) => d.apply(lineno, key, rest)?,
            None => return Err(perr(lineno, "record before the first `label`")),
        }
    }
    if let Some((start, d)) = draft {
        out.push(d.finish(start)?);
    }
    Ok(out)
}

/// Parses text holding exactly one record.
pub fn parse_entry(text: &str) -> Result<CatalogueEntry> {
    let mut all = parse_entries(text)?;
    match all.len() {
        1 => Ok(all.pop().unwrap()),
        n => Err(perr(0, format!("expected one record, found {n}"))),
    }
}

/// Prime at which a loaded entry is checked: its own prime if fixed,
/// otherwise 5 or the least prime the template allows.
pub fn validation_prime(e: &CatalogueEntry) -> u32 {
    match (&e.template, e.validity) {
        (Template::Fixed(pres), _) => pres.prime(),
        (_, Validity::AtLeast(q)) => q.max(5),
    }
}

/// Checks consistency and the declared invariants of an entry with a
/// presentation. Entries without one pass trivially.
pub fn validate(e: &CatalogueEntry) -> Result<()> {
    if !e.has_template() {
        return Ok(());
    }
    let pres = e.presentation(validation_prime(e))?;
    e.check_invariants(&GroupTable::new(&pres)?)
}

/// Writes the entries to `path`, one record after another.
pub fn save(path: &Path, list: &[CatalogueEntry]) -> Result<()> {
    let text: Vec<String> = list.iter().map(write_entry).collect();
    fs::write(path, text.join("\n"))?;
    Ok(())
}

/// Loads a catalogue file, or every `*.cat` file of a directory in name
/// order, validating each entry.
pub fn load(path: &Path) -> Result<Vec<CatalogueEntry>> {
    let files = if path.is_dir() {
        let mut v: Vec<_> = fs::read_dir(path)?
            .filter_map(|d| d.ok().map(|d| d.path()))
            .filter(|p| p.extension().is_some_and(|x| x == EXTENSION))
            .collect();
        v.sort();
        v
    } else {
        vec![path.to_path_buf()]
    };
    let mut out = Vec::new();
    for f in files {
        let entries = parse_entries(&fs::read_to_string(&f)?)?;
        for e in &entries {
            validate(e)?;
        }
        out.extend(entries);
    }
    Ok(out)
}
