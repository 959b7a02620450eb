// Explicit maps on minimal generators: some must turn up in Aut_c as
// non-inner automorphisms, others must be missing from it.

use std::collections::BTreeMap;

use super::{el, pres};
use autc_core::aut::{central_aut_from_assignment, AutContext, GenMap, Verification, SEARCH_GUARD};
use autc_core::catalogue;
use autc_core::element::Element;
use autc_core::pcp::PcPresentation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expect {
    /// In Aut_c and not inner.
    NonInner,
    /// Not in Aut_c.
    Absent,
}

pub struct Witness {
    pub label: &'static str,
    pub name: &'static str,
    /// Image words of the minimal generators, in catalogue order.
    pub images: &'static [&'static [(&'static str, i64)]],
    pub expect: Expect,
}

const fn w(
    label: &'static str,
    name: &'static str,
    images: &'static [&'static [(&'static str, i64)]],
    expect: Expect,
) -> Witness {
    Witness {
        label,
        name,
        images,
        expect,
    }
}

use Expect::{Absent, NonInner};

pub const WITNESSES: &[Witness] = &[
    w("Phi39(1^6)", "a -> a, a1 -> a1 a4", &[&[("a", 1)], &[("a1", 1), ("a4", 1)]], NonInner),
    w(
        "Phi30(1^6)",
        "a -> a a4, a1 -> a1, b -> b a4",
        &[&[("a", 1), ("a4", 1)], &[("a1", 1)], &[("b", 1), ("a4", 1)]],
        NonInner,
    ),
    w(
        "Phi30(1^6)",
        "a -> a a2^-1, a1 -> a1, b -> b",
        &[&[("a", 1), ("a2", -1)], &[("a1", 1)], &[("b", 1)]],
        Absent,
    ),
    w(
        "Phi17(1^6)",
        "a -> a, a1 -> a1, b -> b g",
        &[&[("a", 1)], &[("a1", 1)], &[("b", 1), ("g", 1)]],
        Absent,
    ),
    w(
        "Phi19(1^6)",
        "a -> a b1, a1 -> a1, a2 -> a2",
        &[&[("a", 1), ("b1", 1)], &[("a1", 1)], &[("a2", 1)]],
        Absent,
    ),
    w("Phi23(1^6)", "a -> a, a1 -> a1 g", &[&[("a", 1)], &[("a1", 1), ("g", 1)]], Absent),
    w(
        "Phi27(1^6)",
        "a -> a, a1 -> a1, b -> b a4",
        &[&[("a", 1)], &[("a1", 1)], &[("b", 1), ("a4", 1)]],
        Absent,
    ),
    w(
        "Phi31(1^6)",
        "a -> a, a1 -> a1, a2 -> a2 b2",
        &[&[("a", 1)], &[("a1", 1)], &[("a2", 1), ("b2", 1)]],
        Absent,
    ),
    w(
        "Phi32(1^6)",
        "a -> a, a1 -> a1, a2 -> a2 b2",
        &[&[("a", 1)], &[("a1", 1)], &[("a2", 1), ("b2", 1)]],
        Absent,
    ),
    w(
        "Phi33(1^6)",
        "a -> a, a1 -> a1, a2 -> a2 b2",
        &[&[("a", 1)], &[("a1", 1)], &[("a2", 1), ("b2", 1)]],
        Absent,
    ),
    w(
        "Phi34(321)a",
        "a -> a, a1 -> a1, a2 -> a2 b2",
        &[&[("a", 1)], &[("a1", 1)], &[("a2", 1), ("b2", 1)]],
        Absent,
    ),
    w("Phi40(1^6)", "a1 -> a1, a2 -> a2 b2", &[&[("a1", 1)], &[("a2", 1), ("b2", 1)]], Absent),
    w("Phi41(1^6)", "a1 -> a1, a2 -> a2 b2", &[&[("a1", 1)], &[("a2", 1), ("b2", 1)]], Absent),
    w("Phi42(222)a0", "a1 -> a1, a2 -> a2 b2", &[&[("a1", 1)], &[("a2", 1), ("b2", 1)]], Absent),
    w("Phi43(222)a0", "a1 -> a1, a2 -> a2 b2", &[&[("a1", 1)], &[("a2", 1), ("b2", 1)]], Absent),
    w(
        "Phi38(1^6)",
        "a -> a, a1 -> a1 a4 a5^-1",
        &[&[("a", 1)], &[("a1", 1), ("a4", 1), ("a5", -1)]],
        Absent,
    ),
    w(
        "Phi18(1^6)",
        "a -> a, a1 -> a1, b -> b g",
        &[&[("a", 1)], &[("a1", 1)], &[("b", 1), ("g", 1)]],
        Absent,
    ),
];

pub fn context(label: &str, pres: &PcPresentation) -> AutContext {
    let e = catalogue::lookup(label).unwrap();
    AutContext::new(pres, &e.minimal_gen_indices(pres).unwrap()).unwrap()
}

/// Result line per witness whose family is defined at `p`.
pub fn check_all(p: u32) -> Vec<(String, Result<(), String>)> {
    let mut by_label: BTreeMap<&str, Vec<&Witness>> = BTreeMap::new();
    for wt in WITNESSES {
        by_label.entry(wt.label).or_default().push(wt);
    }
    let mut out = Vec::new();
    for (label, list) in by_label {
        let Some(g) = pres(label, p) else { continue };
        let ctx = context(label, &g);
        let auts = ctx.enumerate(Verification::Fast, SEARCH_GUARD).unwrap();
        for wt in list {
            let images: Vec<Element> = wt.images.iter().map(|parts| el(&g, parts)).collect();
            let name = format!("{label} at p={p}: {}", wt.name);
            out.push((name, check_one(&ctx, &auts, &images, wt.expect)));
        }
    }
    out
}

fn check_one(ctx: &AutContext, auts: &[GenMap], images: &[Element], expect: Expect) -> Result<(), String> {
    let m = ctx.examine(images, Verification::Exhaustive).map_err(|e| e.to_string())?;
    let listed = auts.iter().find(|a| a.images == images);
    match expect {
        NonInner => {
            if !m.is_class_preserving {
                return Err("not a class-preserving automorphism".into());
            }
            match listed {
                Some(a) if !a.is_inner && !m.is_inner => Ok(()),
                Some(_) => Err("flagged inner".into()),
                None => Err("missing from the enumeration".into()),
            }
        }
        Absent => {
            if listed.is_some() || m.is_class_preserving {
                Err("present in Aut_c".into())
            } else {
                Ok(())
            }
        }
    }
}

/// Families whose central automorphisms `x_i -> x_i beta_i` from the given
/// beta ranges must all be class-preserving, with the number of such maps.
/// Each slot lists the central generators its beta ranges over.
pub const CENTRAL_FAMILIES: &[(&str, &[&[&str]])] = &[
    (
        "Phi13(1^6)",
        &[&["b1", "b2"], &["b1", "b2"], &["b2"], &["b2"]],
    ),
    ("Phi18(1^6)", &[&["a3", "g"], &["a3"], &["a3"]]),
    ("Phi20(1^6)", &[&["b2"], &["b1", "b2"], &["b2"]]),
];

/// Checks every assignment (all of them at p = 3, a seeded sample of
/// `limit` otherwise) and returns the number checked.
pub fn central_family(label: &str, slots: &[&[&str]], p: u32, limit: usize) -> Result<usize, String> {
    use rand::{rngs::StdRng, Rng, SeedableRng};
    let g = pres(label, p).ok_or("not defined")?;
    let ctx = context(label, &g);
    let coords: Vec<(usize, &str)> = slots
        .iter()
        .enumerate()
        .flat_map(|(s, gens)| gens.iter().map(move |x| (s, *x)))
        .collect();
    let total = (p as u64).pow(coords.len() as u32);
    let mut rng = StdRng::seed_from_u64(p as u64);
    let picks: Vec<u64> = if p == 3 || total <= limit as u64 {
        (0..total).collect()
    } else {
        (0..limit).map(|_| rng.gen_range(0..total)).collect()
    };
    for &idx in &picks {
        let mut i = idx;
        let mut parts: Vec<Vec<(&str, i64)>> = vec![Vec::new(); slots.len()];
        for &(s, x) in &coords {
            parts[s].push((x, (i % p as u64) as i64));
            i /= p as u64;
        }
        let betas: Vec<Element> = parts.iter().map(|pp| el(&g, pp)).collect();
        let m = central_aut_from_assignment(&ctx, &betas).map_err(|e| e.to_string())?;
        let full = ctx.examine(&m.images, Verification::Exhaustive).unwrap();
        if !full.is_class_preserving {
            return Err(format!("assignment {parts:?} is not class-preserving"));
        }
    }
    Ok(picks.len())
}
