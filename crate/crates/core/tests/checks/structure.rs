// Structural facts per transcribed family: center and derived subgroup
// with generators, nilpotency class, class sizes of the minimal generators,
// plus a few family-specific extras.

use super::{el, pres};
use autc_core::catalogue::quotient_by_central;
use autc_core::subgroup::{self, SubgroupSet};
use autc_core::table::GroupTable;

#[derive(Clone, Copy, Debug)]
pub enum Size {
    Exactly(u32),
    AtMost(u32),
}

pub struct Facts {
    pub label: &'static str,
    /// Generators of Z(G) and log_p |Z(G)|.
    pub center: Option<(&'static [&'static str], u32)>,
    /// Generators of the derived subgroup, log_p of its order, and whether it
    /// is claimed abelian.
    pub derived: Option<(&'static [&'static str], u32, bool)>,
    pub class: usize,
    pub class_sizes: &'static [(&'static str, Size)],
    pub extra: Option<fn(&GroupTable) -> Result<(), String>>,
}

use Size::{AtMost, Exactly};

const A234: &[&str] = &["a2", "a3", "a4"];
const A2345: &[&str] = &["a2", "a3", "a4", "a5"];
const B12G: &[&str] = &["b1", "b2", "g"];
const BB12G: &[&str] = &["b", "b1", "b2", "g"];

pub fn table() -> Vec<Facts> {
    let mut v = vec![
        Facts {
            label: "Phi11(1^6)",
            center: Some((&["b1", "b2", "b3"], 3)),
            derived: Some((&["b1", "b2", "b3"], 3, true)),
            class: 2,
            class_sizes: &[("a1", Exactly(2)), ("a2", Exactly(2)), ("a3", Exactly(2))],
            extra: None,
        },
        Facts {
            label: "Phi13(1^6)",
            center: Some((&["b1", "b2"], 2)),
            derived: Some((&["b1", "b2"], 2, true)),
            class: 2,
            class_sizes: &[
                ("a1", Exactly(2)),
                ("a2", Exactly(2)),
                ("a3", Exactly(1)),
                ("a4", Exactly(1)),
            ],
            extra: None,
        },
        Facts {
            label: "Phi17(1^6)",
            center: Some((&["a3", "g"], 2)),
            derived: Some((&["a2", "a3", "g"], 3, true)),
            class: 3,
            class_sizes: &[("a1", AtMost(2)), ("a", AtMost(2)), ("b", Exactly(1))],
            extra: None,
        },
        Facts {
            label: "Phi18(1^6)",
            center: Some((&["a3", "g"], 2)),
            derived: Some((&["a2", "a3", "g"], 3, true)),
            class: 3,
            class_sizes: &[("a", AtMost(3)), ("a1", AtMost(2)), ("b", AtMost(2))],
            extra: None,
        },
        Facts {
            label: "Phi19(1^6)",
            center: None,
            derived: None,
            class: 3,
            class_sizes: &[],
            extra: None,
        },
        Facts {
            label: "Phi20(1^6)",
            center: Some((&["b1", "b2"], 2)),
            derived: Some((&["b", "b1", "b2"], 3, true)),
            class: 3,
            class_sizes: &[("a", Exactly(1)), ("a1", AtMost(3)), ("a2", AtMost(2))],
            extra: None,
        },
        Facts {
            label: "Phi23(1^6)",
            center: Some((&["a4", "g"], 2)),
            derived: Some((&["a2", "a3", "a4", "g"], 4, true)),
            class: 4,
            class_sizes: &[("a", AtMost(3)), ("a1", AtMost(2))],
            extra: Some(phi23_quotient),
        },
        Facts {
            label: "Phi24(1^6)",
            center: Some((&["a4"], 1)),
            derived: Some((A234, 3, true)),
            class: 4,
            class_sizes: &[("a", AtMost(3)), ("a1", AtMost(2)), ("b", Exactly(1))],
            extra: Some(|t| expect_log(t, "|Z2|", subgroup::second_center(t).len(), 3)),
        },
        Facts {
            label: "Phi27(1^6)",
            center: Some((&["a4"], 1)),
            derived: Some((A234, 3, true)),
            class: 4,
            class_sizes: &[("a", AtMost(3)), ("a1", AtMost(2)), ("b", Exactly(1))],
            extra: Some(phi27_centralizer),
        },
        Facts {
            label: "Phi30(1^6)",
            center: Some((&["a4"], 1)),
            derived: Some((A234, 3, true)),
            class: 4,
            class_sizes: &[("a", AtMost(3)), ("a1", AtMost(2)), ("b", AtMost(2))],
            extra: Some(|t| expect_generated(t, "Z2", &subgroup::second_center(t), &["a3", "a4"])),
        },
        Facts {
            label: "Phi36(1^6)",
            center: Some((&["a5"], 1)),
            derived: Some((A2345, 4, true)),
            class: 5,
            class_sizes: &[("a", AtMost(4)), ("a1", AtMost(2))],
            extra: Some(|t| expect_log(t, "|Z2|", subgroup::second_center(t).len(), 2)),
        },
        Facts {
            label: "Phi38(1^6)",
            center: Some((&["a5"], 1)),
            derived: Some((A2345, 4, true)),
            class: 5,
            class_sizes: &[("a", AtMost(4)), ("a1", AtMost(3))],
            extra: Some(|t| expect_log(t, "|Z2|", subgroup::second_center(t).len(), 2)),
        },
        Facts {
            label: "Phi39(1^6)",
            center: Some((&["a5"], 1)),
            derived: Some((A2345, 4, false)),
            class: 5,
            class_sizes: &[("a", AtMost(3)), ("a1", AtMost(3))],
            extra: Some(|t| {
                expect_generated(t, "Z3", &subgroup::third_center(t), &["a3", "a4", "a5"])
            }),
        },
    ];
    for label in ["Phi28(222)", "Phi29(222)"] {
        v.push(Facts {
            label,
            center: Some((&["a4"], 1)),
            derived: Some((A234, 3, true)),
            class: 4,
            class_sizes: &[("a", AtMost(3)), ("a1", AtMost(2))],
            extra: Some(|t| {
                let a = el(t.presentation(), &[("a", 1)]);
                let c = subgroup::centralizer(t, &a).len();
                if c >= (t.prime() as usize).pow(3) {
                    Ok(())
                } else {
                    Err(format!("|C_G(a)| = {c}"))
                }
            }),
        });
    }
    for (label, sizes) in [
        ("Phi31(1^6)", &[("a1", AtMost(2)), ("a2", AtMost(2)), ("a", AtMost(2))]),
        ("Phi32(1^6)", &[("a1", AtMost(2)), ("a2", AtMost(2)), ("a", AtMost(2))]),
        ("Phi33(1^6)", &[("a1", AtMost(2)), ("a2", Exactly(1)), ("a", AtMost(3))]),
        ("Phi34(321)a", &[("a1", AtMost(2)), ("a2", Exactly(1)), ("a", AtMost(3))]),
    ] {
        v.push(Facts {
            label,
            center: Some((&["g"], 1)),
            derived: Some((B12G, 3, true)),
            class: 3,
            class_sizes: sizes,
            extra: None,
        });
    }
    for label in ["Phi40(1^6)", "Phi41(1^6)", "Phi42(222)a0", "Phi43(222)a0"] {
        v.push(Facts {
            label,
            center: Some((&["g"], 1)),
            derived: Some((BB12G, 4, true)),
            class: 4,
            class_sizes: &[("a1", AtMost(3)), ("a2", AtMost(3))],
            extra: None,
        });
    }
    v
}

fn expect_log(t: &GroupTable, what: &str, size: usize, log: u32) -> Result<(), String> {
    let want = (t.prime() as usize).pow(log);
    if size == want {
        Ok(())
    } else {
        Err(format!("{what} = {size}, want p^{log} = {want}"))
    }
}

fn expect_generated(t: &GroupTable, what: &str, s: &SubgroupSet, gens: &[&str]) -> Result<(), String> {
    let pres = t.presentation();
    let g: Vec<_> = gens.iter().map(|l| el(pres, &[(l, 1)])).collect();
    let h = subgroup::closure(t, &g);
    if h.ranks() == s.ranks() {
        Ok(())
    } else {
        Err(format!(
            "{what} has order {}, <{}> has order {}",
            s.len(),
            gens.join(", "),
            h.len()
        ))
    }
}

fn phi27_centralizer(t: &GroupTable) -> Result<(), String> {
    let x = el(t.presentation(), &[("a2", 1), ("b", -1)]);
    expect_generated(t, "C_G(a2 b^-1)", &subgroup::centralizer(t, &x), &["a1", "a2", "a3", "a4", "b"])
}

// G/<a4> looks like a class-3 group of order p^5 with center of order p^2,
// derived subgroup of order p^3, two generators, and Z2 = <a2, Z>.
fn phi23_quotient(t: &GroupTable) -> Result<(), String> {
    let pres = t.presentation();
    let q = quotient_by_central(pres, &el(pres, &[("a4", 1)])).map_err(|e| e.to_string())?;
    let qt = GroupTable::new(&q).map_err(|e| e.to_string())?;
    expect_log(&qt, "|G/H|", qt.order(), 5)?;
    let class = subgroup::nilpotency_class(&qt);
    if class != 3 {
        return Err(format!("G/H has class {class}"));
    }
    expect_log(&qt, "|Z(G/H)|", subgroup::center(&qt).len(), 2)?;
    expect_log(&qt, "|(G/H)'|", subgroup::derived_subgroup(&qt).len(), 3)?;
    let rank = subgroup::minimal_generator_rank(&qt);
    if rank != 2 {
        return Err(format!("G/H needs {rank} generators"));
    }
    let mut gens = vec![el(&q, &[("a2", 1)])];
    gens.extend(subgroup::center(&qt).generators().iter().copied());
    let h = subgroup::closure(&qt, &gens);
    if h.ranks() != subgroup::second_center(&qt).ranks() {
        return Err("Z2(G/H) differs from <a2 H, Z(G/H)>".into());
    }
    Ok(())
}

/// Every discrepancy between `facts` and the group at `p`; `None` when the
/// family is not defined at `p`.
pub fn check(facts: &Facts, p: u32) -> Option<Vec<String>> {
    let pres = pres(facts.label, p)?;
    let t = GroupTable::new(&pres).unwrap();
    let mut errs = Vec::new();
    let mut push = |r: Result<(), String>| {
        if let Err(e) = r {
            errs.push(e);
        }
    };
    let center = subgroup::center(&t);
    let derived = subgroup::derived_subgroup(&t);
    if let Some((gens, log)) = facts.center {
        push(expect_log(&t, "|Z|", center.len(), log));
        push(expect_generated(&t, "Z", &center, gens));
    }
    if let Some((gens, log, abelian)) = facts.derived {
        push(expect_log(&t, "|G'|", derived.len(), log));
        push(expect_generated(&t, "G'", &derived, gens));
        if abelian && !subgroup::is_abelian_subgroup(&t, &derived) {
            push(Err("G' is not abelian".into()));
        }
    }
    let class = subgroup::nilpotency_class(&t);
    if class != facts.class {
        push(Err(format!("class {class}, want {}", facts.class)));
    }
    let partition = subgroup::conjugacy_partition(&t);
    for &(g, size) in facts.class_sizes {
        let s = partition.class_size_of_rank(t.rank(&el(&pres, &[(g, 1)])));
        let (ok, want) = match size {
            Exactly(k) => (s == (p as u64).pow(k), format!("= p^{k}")),
            AtMost(k) => (s <= (p as u64).pow(k), format!("<= p^{k}")),
        };
        if !ok {
            push(Err(format!("|{g}^G| = {s}, want {want}")));
        }
    }
    if let Some(f) = facts.extra {
        push(f(&t));
    }
    Some(errs)
}
