//! Command logic for the `autc` binary. Every command returns its rendered
//! output and an exit code so the binary stays a thin shell and the tests
//! can drive the same paths.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use autc_core::aut::{self, AutContext, AutcResult};
use autc_core::catalogue::{self, CatalogueEntry, Provenance};
use autc_core::error::Error;
use autc_core::subgroup::{self, log_p};
use autc_core::table::GroupTable;

pub const SCHEMA: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "autc", about = "Class-preserving automorphisms of groups of order p^6")]
pub struct Cli {
    /// Emit JSON instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Directory of `*.cat` files whose entries override or extend the bundled ones.
    #[arg(long, global = true)]
    pub catalogue_dir: Option<PathBuf>,
    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List catalogue entries.
    List,
    /// Structural data of one entry.
    Info {
        label: String,
        #[arg(short = 'p', long = "prime", default_value_t = 3)]
        prime: u32,
    },
    /// Compute Aut_c and Out_c of one entry.
    Autc {
        label: String,
        #[arg(short = 'p', long = "prime", default_value_t = 3)]
        prime: u32,
        #[arg(long, default_value_t = aut::SEARCH_GUARD)]
        guard: u128,
    },
    /// Compute Out_c for every entry and compare with the expected orders.
    VerifyTheoremA {
        #[arg(short = 'p', long = "prime", default_value_t = 3)]
        prime: u32,
        /// Comma-separated family numbers.
        #[arg(long, value_delimiter = ',')]
        filter: Option<Vec<u32>>,
        #[arg(long, default_value_t = aut::SEARCH_GUARD)]
        guard: u128,
        /// Also run entries whose presentations come from outside sources.
        #[arg(long)]
        include_external: bool,
    },
}

/// Output of one command: text for stdout and the process exit code.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(err: impl std::fmt::Display) -> Outcome {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

/// Bundled entries, with entries from `dir` replacing those of the same
/// label and appended otherwise.
pub fn load_catalogue(dir: Option<&PathBuf>) -> autc_core::error::Result<Vec<CatalogueEntry>> {
    let mut list: Vec<CatalogueEntry> = catalogue::entries().to_vec();
    if let Some(dir) = dir {
        for e in catalogue::load(dir)? {
            match list.iter_mut().find(|x| x.label == e.label) {
                Some(slot) => *slot = e,
                None => list.push(e),
            }
        }
    }
    list.sort_by(|a, b| a.family.cmp(&b.family).then_with(|| a.label.cmp(&b.label)));
    Ok(list)
}

fn find<'a>(list: &'a [CatalogueEntry], label: &str) -> Result<&'a CatalogueEntry, Error> {
    let want = label.strip_prefix("Phi").unwrap_or(label);
    list.iter()
        .find(|e| e.label == label)
        .or_else(|| {
            list.iter().find(|e| {
                e.label.strip_prefix("Phi").is_some_and(|l| {
                    l == want || l.split('(').next() == Some(want)
                })
            })
        })
        .ok_or_else(|| Error::UnknownEntry(label.to_string()))
}

// ---------------------------------------------------------------- list

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ListRow {
    pub label: String,
    pub family: u32,
    pub validity: String,
    pub provenance: String,
    pub verify: bool,
    pub has_presentation: bool,
    pub expected_outc_exponent: u32,
}

pub fn list_rows(list: &[CatalogueEntry]) -> Vec<ListRow> {
    list.iter()
        .map(|e| ListRow {
            label: e.label.clone(),
            family: e.family,
            validity: e.validity.describe(),
            provenance: e.provenance.as_str().to_string(),
            verify: e.verify,
            has_presentation: e.has_template(),
            expected_outc_exponent: e.expected_outc_exponent,
        })
        .collect()
}

fn render_list(rows: &[ListRow]) -> String {
    let mut out = format!(
        "{:<16} {:>6} {:<8} {:<12} {:>6} {:>5}\n",
        "label", "family", "valid", "provenance", "outc", "pres"
    );
    for r in rows {
        let flag = if r.provenance == Provenance::External.as_str() {
            " (external)"
        } else {
            ""
        };
        out.push_str(&format!(
            "{:<16} {:>6} {:<8} {:<12} {:>6} {:>5}{}\n",
            r.label,
            r.family,
            r.validity,
            r.provenance,
            format!("p^{}", r.expected_outc_exponent),
            if r.has_presentation { "yes" } else { "no" },
            flag
        ));
    }
    out
}

// ---------------------------------------------------------------- info

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct InfoReport {
    pub schema: u32,
    pub label: String,
    pub prime: u32,
    pub order: u128,
    pub center_order: u128,
    pub second_center_order: u128,
    pub derived_order: u128,
    pub class: usize,
    pub num_classes: usize,
    /// Class size of each minimal generator, keyed by label.
    pub generator_class_sizes: BTreeMap<String, u64>,
    pub abelian_by_cyclic: bool,
    pub lemma23_predicate: Option<bool>,
}

pub fn info(list: &[CatalogueEntry], label: &str, p: u32) -> Result<InfoReport, Error> {
    let e = find(list, label)?;
    if e.provenance == Provenance::External {
        return Err(Error::Precondition(format!(
            "{} has no checked presentation of its own; structural report withheld",
            e.label
        )));
    }
    let pres = e.presentation(p)?;
    let t = GroupTable::new(&pres)?;
    let partition = subgroup::conjugacy_partition(&t);
    let generator_class_sizes = e
        .minimal_gen_indices(&pres)?
        .into_iter()
        .map(|k| {
            (
                pres.labels()[k].clone(),
                partition.class_size_of_rank(t.generator(k)),
            )
        })
        .collect();
    Ok(InfoReport {
        schema: SCHEMA,
        label: e.label.clone(),
        prime: p,
        order: t.order() as u128,
        center_order: subgroup::center(&t).len() as u128,
        second_center_order: subgroup::second_center(&t).len() as u128,
        derived_order: subgroup::derived_subgroup(&t).len() as u128,
        class: subgroup::nilpotency_class(&t),
        num_classes: partition.num_classes(),
        generator_class_sizes,
        abelian_by_cyclic: aut::lemma24_rigidity_test(&t).is_some(),
        lemma23_predicate: aut::lemma23_bound(&t).map(|l| l.predicate),
    })
}

fn render_info(r: &InfoReport) -> String {
    let pp = |n: u128| match log_p(r.prime, n) {
        Some(k) => format!("{n} (p^{k})"),
        None => n.to_string(),
    };
    let mut out = format!("{} at p = {}\n", r.label, r.prime);
    out.push_str(&format!("  |G|            {}\n", pp(r.order)));
    out.push_str(&format!("  |Z|            {}\n", pp(r.center_order)));
    out.push_str(&format!("  |Z2|           {}\n", pp(r.second_center_order)));
    out.push_str(&format!("  |G'|           {}\n", pp(r.derived_order)));
    out.push_str(&format!("  class          {}\n", r.class));
    out.push_str(&format!("  classes        {}\n", r.num_classes));
    for (g, s) in &r.generator_class_sizes {
        out.push_str(&format!("  |{g}^G|{:width$}{}\n", "", pp(*s as u128), width = 10usize.saturating_sub(g.len())));
    }
    out.push_str(&format!("  abelian-by-cyclic  {}\n", r.abelian_by_cyclic));
    out.push_str(&format!(
        "  commutator-coset predicate  {}\n",
        match r.lemma23_predicate {
            Some(b) => b.to_string(),
            None => "n/a".into(),
        }
    ));
    out
}

// ---------------------------------------------------------------- autc

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AutcReport {
    pub schema: u32,
    pub label: String,
    pub prime: u32,
    pub aborted: bool,
    pub autc_order: Option<u128>,
    pub inn_order: Option<u128>,
    pub outc_order: Option<u128>,
    pub autcent_order: Option<u128>,
    pub autc_intersect_autcent_order: Option<u128>,
    pub lower_bound: Option<u128>,
    pub upper_bound: u128,
    /// Images of the minimal generators under each Out_c representative.
    pub outc_representatives: Vec<Vec<String>>,
}

pub fn autc(list: &[CatalogueEntry], label: &str, p: u32, guard: u128) -> Result<AutcReport, Error> {
    let e = find(list, label)?;
    let pres = e.presentation(p)?;
    let ctx = AutContext::new(&pres, &e.minimal_gen_indices(&pres)?)?;
    let base = AutcReport {
        schema: SCHEMA,
        label: e.label.clone(),
        prime: p,
        aborted: false,
        autc_order: None,
        inn_order: None,
        outc_order: None,
        autcent_order: None,
        autc_intersect_autcent_order: None,
        lower_bound: None,
        upper_bound: ctx.lemma26_upper_bound(),
        outc_representatives: Vec::new(),
    };
    match ctx.autc(guard) {
        Ok(r) => {
            let reps = r
                .generators_of_outc
                .iter()
                .map(|m| m.images.iter().map(|e| pres.display(e)).collect())
                .collect();
            Ok(AutcReport {
                autc_order: Some(r.autc_order),
                inn_order: Some(r.inn_order),
                outc_order: Some(r.outc_order),
                autcent_order: r.autcent_order,
                autc_intersect_autcent_order: Some(r.autc_intersect_autcent_order),
                lower_bound: r.bounds.lower(),
                outc_representatives: reps,
                ..base
            })
        }
        Err(Error::SearchGuard { .. }) => Ok(AutcReport {
            aborted: true,
            ..base
        }),
        Err(err) => Err(err),
    }
}

fn render_autc(r: &AutcReport) -> String {
    let opt = |v: Option<u128>| v.map_or("-".to_string(), |x| x.to_string());
    let mut out = format!("{} at p = {}\n", r.label, r.prime);
    if r.aborted {
        out.push_str(&format!(
            "  search aborted by guard; |Aut_c| <= {}\n",
            r.upper_bound
        ));
        return out;
    }
    out.push_str(&format!("  |Aut_c|        {}\n", opt(r.autc_order)));
    out.push_str(&format!("  |Inn|          {}\n", opt(r.inn_order)));
    out.push_str(&format!("  |Out_c|        {}\n", opt(r.outc_order)));
    out.push_str(&format!("  |Autcent|      {}\n", opt(r.autcent_order)));
    out.push_str(&format!("  |Aut_c n Autcent|  {}\n", opt(r.autc_intersect_autcent_order)));
    out.push_str(&format!(
        "  bounds         {} <= |Aut_c| <= {}\n",
        opt(r.lower_bound),
        r.upper_bound
    ));
    for (i, rep) in r.outc_representatives.iter().enumerate().skip(1) {
        out.push_str(&format!("  rep {i}: {}\n", rep.join(", ")));
    }
    out
}

// ---------------------------------------------------------------- verify

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum SkipReason {
    InvalidPrime,
    ExternalTemplate,
    MissingTemplate,
    SearchGuard,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum RowStatus {
    Pass,
    Fail,
    Skipped { reason: SkipReason, detail: String },
    Error { detail: String },
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerificationRow {
    pub label: String,
    pub family: u32,
    pub center_order: Option<u128>,
    pub derived_order: Option<u128>,
    pub class: Option<usize>,
    pub inn_order: Option<u128>,
    pub autc_order: Option<u128>,
    pub outc_order: Option<u128>,
    pub expected_outc_exponent: u32,
    #[serde(flatten)]
    pub status: RowStatus,
    pub runtime_ms: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Summary {
    pub verified: Vec<String>,
    pub failed: Vec<String>,
    pub skipped: Vec<(String, SkipReason)>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerificationReport {
    pub schema: u32,
    pub prime: u32,
    pub rows: Vec<VerificationRow>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.rows
            .iter()
            .all(|r| matches!(r.status, RowStatus::Pass | RowStatus::Skipped { .. }))
    }

    pub fn row(&self, label: &str) -> Option<&VerificationRow> {
        self.rows.iter().find(|r| r.label == label)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub prime: u32,
    pub filter: Option<Vec<u32>>,
    pub guard: u128,
    pub include_external: bool,
}

impl VerifyOptions {
    pub fn at(prime: u32) -> VerifyOptions {
        VerifyOptions {
            prime,
            filter: None,
            guard: aut::SEARCH_GUARD,
            include_external: false,
        }
    }
}

fn skipped(e: &CatalogueEntry, reason: SkipReason, detail: String) -> VerificationRow {
    VerificationRow {
        label: e.label.clone(),
        family: e.family,
        center_order: None,
        derived_order: None,
        class: None,
        inn_order: None,
        autc_order: None,
        outc_order: None,
        expected_outc_exponent: e.expected_outc_exponent,
        status: RowStatus::Skipped { reason, detail },
        runtime_ms: 0,
    }
}

fn verify_entry(e: &CatalogueEntry, opts: &VerifyOptions) -> VerificationRow {
    let p = opts.prime;
    if !e.has_template() {
        return skipped(e, SkipReason::MissingTemplate, "no presentation available".into());
    }
    if !e.verify && !opts.include_external {
        return skipped(
            e,
            SkipReason::ExternalTemplate,
            "presentation from an outside source".into(),
        );
    }
    if !e.validity.holds(p) {
        return skipped(
            e,
            SkipReason::InvalidPrime,
            format!("presentation requires {}", e.validity.describe()),
        );
    }
    let start = Instant::now();
    let mut row = skipped(e, SkipReason::InvalidPrime, String::new());
    let result = (|| -> autc_core::error::Result<AutcResult> {
        let pres = e.presentation(p)?;
        let t = GroupTable::new(&pres)?;
        row.center_order = Some(subgroup::center(&t).len() as u128);
        row.derived_order = Some(subgroup::derived_subgroup(&t).len() as u128);
        row.class = Some(subgroup::nilpotency_class(&t));
        let mins = e.minimal_gen_indices(&pres)?;
        AutContext::from_table(t, &mins)?.autc(opts.guard)
    })();
    row.runtime_ms = start.elapsed().as_millis() as u64;
    row.status = match result {
        Ok(r) => {
            row.inn_order = Some(r.inn_order);
            row.autc_order = Some(r.autc_order);
            row.outc_order = Some(r.outc_order);
            if r.outc_order == (p as u128).pow(e.expected_outc_exponent) {
                RowStatus::Pass
            } else {
                RowStatus::Fail
            }
        }
        Err(err @ Error::SearchGuard { .. }) => RowStatus::Skipped {
            reason: SkipReason::SearchGuard,
            detail: err.to_string(),
        },
        Err(err) => RowStatus::Error {
            detail: err.to_string(),
        },
    };
    row
}

pub fn verify_theorem_a(list: &[CatalogueEntry], opts: &VerifyOptions) -> Result<VerificationReport, Error> {
    let p = opts.prime;
    if !(3..=7).contains(&p) || !autc_core::pcp::is_odd_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    let selected: Vec<&CatalogueEntry> = list
        .iter()
        .filter(|e| opts.filter.as_ref().is_none_or(|f| f.contains(&e.family)))
        .collect();
    let rows: Vec<VerificationRow> = selected.par_iter().map(|e| verify_entry(e, opts)).collect();
    let mut summary = Summary {
        verified: Vec::new(),
        failed: Vec::new(),
        skipped: Vec::new(),
    };
    for r in &rows {
        match &r.status {
            RowStatus::Pass => summary.verified.push(r.label.clone()),
            RowStatus::Fail | RowStatus::Error { .. } => summary.failed.push(r.label.clone()),
            RowStatus::Skipped { reason, .. } => summary.skipped.push((r.label.clone(), reason.clone())),
        }
    }
    Ok(VerificationReport {
        schema: SCHEMA,
        prime: p,
        rows,
        summary,
    })
}

/// Table rendering; runtimes are left out so the output only depends on
/// the results.
pub fn render_report(r: &VerificationReport) -> String {
    let opt = |v: Option<u128>| v.map_or("-".to_string(), |x| x.to_string());
    let mut out = format!(
        "{:<16} {:>6} {:>6} {:>6} {:>5} {:>8} {:>9} {:>7} {:>8}  {}\n",
        "label", "family", "|Z|", "|G'|", "class", "|Inn|", "|Aut_c|", "|Out_c|", "expected", "status"
    );
    for row in &r.rows {
        let status = match &row.status {
            RowStatus::Pass => "PASS".to_string(),
            RowStatus::Fail => "FAIL".to_string(),
            RowStatus::Skipped { reason, detail } => {
                format!("skipped ({}: {detail})", serde_json::to_value(reason).unwrap().as_str().unwrap())
            }
            RowStatus::Error { detail } => format!("ERROR ({detail})"),
        };
        out.push_str(&format!(
            "{:<16} {:>6} {:>6} {:>6} {:>5} {:>8} {:>9} {:>7} {:>8}  {}\n",
            row.label,
            row.family,
            opt(row.center_order),
            opt(row.derived_order),
            row.class.map_or("-".into(), |c| c.to_string()),
            opt(row.inn_order),
            opt(row.autc_order),
            opt(row.outc_order),
            format!("p^{}", row.expected_outc_exponent),
            status
        ));
    }
    out.push_str(&format!(
        "\np = {}: {} passed, {} failed, {} skipped\n",
        r.prime,
        r.summary.verified.len(),
        r.summary.failed.len(),
        r.summary.skipped.len()
    ));
    out
}

// ---------------------------------------------------------------- dispatch

fn emit<T: Serialize>(json: bool, value: &T, table: impl FnOnce(&T) -> String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(value).expect("report serializes");
        s.push('\n');
        s
    } else {
        table(value)
    }
}

pub fn run(cli: Cli) -> Outcome {
    if let Some(n) = cli.threads {
        // Fails only if a pool already exists, which is harmless.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let list = match load_catalogue(cli.catalogue_dir.as_ref()) {
        Ok(l) => l,
        Err(e) => return Outcome::usage(e),
    };
    match cli.command {
        Command::List => Outcome::ok(emit(cli.json, &list_rows(&list), |r| render_list(r))),
        Command::Info { label, prime } => match info(&list, &label, prime) {
            Ok(r) => Outcome::ok(emit(cli.json, &r, render_info)),
            Err(e) => Outcome::usage(e),
        },
        Command::Autc { label, prime, guard } => match autc(&list, &label, prime, guard) {
            Ok(r) => {
                let code = if r.aborted { EXIT_FAILURE } else { EXIT_OK };
                Outcome {
                    code,
                    stdout: emit(cli.json, &r, render_autc),
                    stderr: String::new(),
                }
            }
            Err(e) => Outcome::usage(e),
        },
        Command::VerifyTheoremA {
            prime,
            filter,
            guard,
            include_external,
        } => {
            let opts = VerifyOptions {
                prime,
                filter,
                guard,
                include_external,
            };
            match verify_theorem_a(&list, &opts) {
                Ok(r) => Outcome {
                    code: if r.all_pass() { EXIT_OK } else { EXIT_FAILURE },
                    stdout: emit(cli.json, &r, render_report),
                    stderr: String::new(),
                },
                Err(e) => Outcome::usage(e),
            }
        }
    }
}
