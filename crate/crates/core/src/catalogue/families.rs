use super::{
    direct_product, CatalogueEntry, Invariants, ParamValue, Params, Provenance, Template,
    TemplateFn, Validity,
};
use crate::error::Result;
use crate::pcp::{PcBuilder, PcPresentation};

fn pc(
    p: u32,
    gens: &[&str],
    pows: &[(&str, String)],
    comms: &[(&str, &str, String)],
) -> Result<PcPresentation> {
    let mut b = PcBuilder::new(p, gens)?;
    for (g, w) in pows {
        b.power(g, w)?;
    }
    for (x, y, w) in comms {
        b.comm(x, y, w)?;
    }
    b.build()
}

// Shorthands for relation lists with literal words.
fn c(x: &'static str, y: &'static str, w: &str) -> (&'static str, &'static str, String) {
    (x, y, w.to_string())
}

fn pw(g: &'static str, w: &str) -> (&'static str, String) {
    (g, w.to_string())
}

fn param(params: &Params, name: &str) -> i64 {
    params[name]
}

fn elementary(p: u32, gens: &[&str]) -> Result<PcPresentation> {
    pc(p, gens, &[], &[])
}

// [a_i, a] = a_{i+1} for i = 1..len, the chain shared by the maximal-class-like families.
fn chain(len: usize) -> Vec<(&'static str, &'static str, String)> {
    const A: [&str; 6] = ["a1", "a2", "a3", "a4", "a5", "a6"];
    (0..len).map(|i| c(A[i], "a", A[i + 1])).collect()
}

fn phi2_111(p: u32) -> Result<PcPresentation> {
    pc(p, &["a1", "a2", "b"], &[], &[c("a1", "a2", "b")])
}

fn phi2(p: u32, _: &Params) -> Result<PcPresentation> {
    direct_product(&phi2_111(p)?, &elementary(p, &["c1", "c2", "c3"])?)
}

fn phi3(p: u32, _: &Params) -> Result<PcPresentation> {
    let f = pc(p, &["a", "a1", "a2", "a3"], &[], &chain(2))?;
    direct_product(&f, &elementary(p, &["c1", "c2"])?)
}

fn phi4(p: u32, _: &Params) -> Result<PcPresentation> {
    let f = pc(
        p,
        &["a", "a1", "a2", "b1", "b2"],
        &[],
        &[c("a1", "a", "b1"), c("a2", "a", "b2")],
    )?;
    direct_product(&f, &elementary(p, &["c"])?)
}

fn phi5(p: u32, _: &Params) -> Result<PcPresentation> {
    let f = pc(
        p,
        &["a1", "a2", "a3", "a4", "b"],
        &[],
        &[c("a1", "a2", "b"), c("a3", "a4", "b")],
    )?;
    direct_product(&f, &elementary(p, &["c"])?)
}

fn phi6(p: u32, _: &Params) -> Result<PcPresentation> {
    let f = pc(
        p,
        &["a1", "a2", "b", "b1", "b2"],
        &[],
        &[c("a1", "a2", "b"), c("b", "a1", "b1"), c("b", "a2", "b2")],
    )?;
    direct_product(&f, &elementary(p, &["c"])?)
}

fn phi7(p: u32, _: &Params) -> Result<PcPresentation> {
    let mut comms = chain(2);
    comms.push(c("a1", "b", "a3"));
    let f = pc(p, &["a", "a1", "b", "a2", "a3"], &[], &comms)?;
    direct_product(&f, &elementary(p, &["c"])?)
}

fn phi8(p: u32, _: &Params) -> Result<PcPresentation> {
    // a1 of order p^3, a2 of order p^2, [a1, a2] = a1^p.
    let f = pc(
        p,
        &["a1", "a2", "b", "e", "d"],
        &[pw("a1", "b"), pw("a2", "e"), pw("b", "d")],
        &[c("a1", "a2", "b"), c("b", "a2", "d"), c("e", "a1", "d^-1")],
    )?;
    direct_product(&f, &elementary(p, &["c"])?)
}

fn phi9(p: u32, _: &Params) -> Result<PcPresentation> {
    let f = pc(p, &["a", "a1", "a2", "a3", "a4"], &[], &chain(3))?;
    direct_product(&f, &elementary(p, &["c"])?)
}

fn phi10(p: u32, _: &Params) -> Result<PcPresentation> {
    let mut comms = chain(3);
    comms.push(c("a1", "a2", "a4"));
    let f = pc(p, &["a", "a1", "a2", "a3", "a4"], &[], &comms)?;
    direct_product(&f, &elementary(p, &["c"])?)
}

fn phi11(p: u32, _: &Params) -> Result<PcPresentation> {
    pc(
        p,
        &["a1", "a2", "a3", "b1", "b2", "b3"],
        &[],
        &[c("a2", "a3", "b1"), c("a3", "a1", "b2"), c("a1", "a2", "b3")],
    )
}

fn phi12(p: u32, _: &Params) -> Result<PcPresentation> {
    direct_product(&phi2_111(p)?, &phi2_111(p)?)
}

fn phi13(p: u32, _: &Params) -> Result<PcPresentation> {
    pc(
        p,
        &["a1", "a2", "a3", "a4", "b1", "b2"],
        &[],
        &[c("a1", "a2", "b1"), c("a1", "a3", "b2"), c("a2", "a4", "b2")],
    )
}

fn phi15(p: u32, params: &Params) -> Result<PcPresentation> {
    let nu = param(params, "nu");
    pc(
        p,
        &["a1", "a2", "a3", "a4", "b1", "b2"],
        &[],
        &[
            c("a1", "a2", "b1"),
            c("a3", "a4", "b1"),
            c("a1", "a3", "b2"),
            c("a2", "a4", &format!("b2^{nu}")),
        ],
    )
}

fn phi17(p: u32, _: &Params) -> Result<PcPresentation> {
    pc(
        p,
        &["a", "a1", "b", "a2", "a3", "g"],
        &[],
        &[c("a1", "a", "a2"), c("a2", "a", "a3"), c("b", "a1", "g")],
    )
}

fn phi18(p: u32, _: &Params) -> Result<PcPresentation> {
    pc(
        p,
        &["a", "a1", "b", "a2", "a3", "g"],
        &[],
        &[
            c("a1", "a", "a2"),
            c("a2", "a", "a3"),
            c("a1", "b", "a3"),
            c("a", "b", "g"),
        ],
    )
}

// Shared by 19, 20, 21: [a1, a2] = b, [b, a_i] = b_i, plus the action of a.
fn phi19_base(p: u32, extra: &[(&'static str, &'static str, String)]) -> Result<PcPresentation> {
    let mut comms = vec![c("a1", "a2", "b"), c("b", "a1", "b1"), c("b", "a2", "b2")];
    comms.extend_from_slice(extra);
    pc(p, &["a", "a1", "a2", "b", "b1", "b2"], &[], &comms)
}

fn phi19(p: u32, _: &Params) -> Result<PcPresentation> {
    phi19_base(p, &[c("a", "a1", "b1")])
}

fn phi20(p: u32, _: &Params) -> Result<PcPresentation> {
    phi19_base(p, &[c("a", "a1", "b2")])
}

fn phi21(p: u32, params: &Params) -> Result<PcPresentation> {
    let nu = param(params, "nu");
    phi19_base(p, &[c("a", "a1", "b2"), c("a", "a2", &format!("b1^{nu}"))])
}

fn phi23(p: u32, _: &Params) -> Result<PcPresentation> {
    let mut comms = chain(3);
    comms.push(c("a1", "a2", "g"));
    pc(p, &["a", "a1", "a2", "a3", "a4", "g"], &[], &comms)
}

fn phi24(p: u32, _: &Params) -> Result<PcPresentation> {
    let mut comms = chain(3);
    comms.push(c("a1", "b", "a4"));
    pc(p, &["a", "a1", "b", "a2", "a3", "a4"], &[], &comms)
}

fn phi27(p: u32, _: &Params) -> Result<PcPresentation> {
    let mut comms = chain(3);
    comms.push(c("a1", "b", "a4"));
    comms.push(c("a1", "a2", "a4"));
    pc(p, &["a", "a1", "b", "a2", "a3", "a4"], &[], &comms)
}

// b = a^p. The p-th power relations of a1 and a2 follow the convention
// a_i^(p) = a_i^p a_{i+1}^C(p,2) ... a_{i+p-1}, with a1^(p) = a3^y and
// a2^(p) = a4^y.
fn phi28(p: u32, params: &Params) -> Result<PcPresentation> {
    let y = param(params, "y");
    let mut comms = chain(3);
    comms.push(c("a1", "a2", "a4"));
    let (a1p, a2p, a1b) = if p == 3 {
        (
            format!("a3^{}*a4^{}", y - 1, 1 - y),
            format!("a4^{}", y - 1),
            format!("a4^{}", y),
        )
    } else {
        (format!("a3^{y}"), format!("a4^{y}"), format!("a4^{y}"))
    };
    comms.push(("a1", "b", a1b));
    pc(
        p,
        &["a", "b", "a1", "a2", "a3", "a4"],
        &[pw("a", "b"), ("a1", a1p), ("a2", a2p)],
        &comms,
    )
}

fn phi30(p: u32, _: &Params) -> Result<PcPresentation> {
    let mut comms = chain(3);
    comms.push(c("a1", "b", "a3"));
    comms.push(c("a2", "b", "a4"));
    pc(p, &["a", "a1", "b", "a2", "a3", "a4"], &[], &comms)
}

fn phi31(p: u32, params: &Params) -> Result<PcPresentation> {
    let y = param(params, "y");
    pc(
        p,
        &["a", "a1", "a2", "b1", "b2", "g"],
        &[],
        &[
            c("a1", "a", "b1"),
            c("a2", "a", "b2"),
            c("a1", "b1", "g"),
            c("a2", "b2", &format!("g^{y}")),
        ],
    )
}

fn phi33(p: u32, _: &Params) -> Result<PcPresentation> {
    pc(
        p,
        &["a", "a1", "a2", "b1", "b2", "g"],
        &[],
        &[
            c("a1", "a", "b1"),
            c("a2", "a", "b2"),
            c("a1", "b1", "g"),
            c("b2", "a", "g"),
        ],
    )
}

fn phi34(p: u32, _: &Params) -> Result<PcPresentation> {
    pc(
        p,
        &["a", "a1", "a2", "b1", "b2", "g"],
        &[pw("a", "b1"), pw("a1", "b2"), pw("b1", "g")],
        &[
            c("a1", "a", "b1"),
            c("a2", "a", "b2"),
            c("a1", "b1", "g"),
            c("b2", "a", "g"),
        ],
    )
}

fn phi36(p: u32, _: &Params) -> Result<PcPresentation> {
    let mut comms = chain(4);
    comms.push(c("a1", "a2", "a5"));
    pc(p, &["a", "a1", "a2", "a3", "a4", "a5"], &[], &comms)
}

fn phi38(p: u32, _: &Params) -> Result<PcPresentation> {
    let mut comms = chain(4);
    comms.push(c("a1", "a2", "a4*a5^-1"));
    comms.push(c("a1", "a3", "a5"));
    pc(p, &["a", "a1", "a2", "a3", "a4", "a5"], &[], &comms)
}

fn phi39(p: u32, _: &Params) -> Result<PcPresentation> {
    let mut comms = chain(3);
    comms.push(c("a1", "a2", "a4"));
    comms.push(c("a2", "a3", "a5"));
    comms.push(c("a3", "a1", "a5"));
    comms.push(c("a4", "a1", "a5"));
    pc(p, &["a", "a1", "a2", "a3", "a4", "a5"], &[], &comms)
}

// Shared by 40 to 43: b = [a1, a2], b_i = [b, a_i].
fn phi40_base(
    p: u32,
    pows: &[(&'static str, String)],
    extra: &[(&'static str, &'static str, String)],
) -> Result<PcPresentation> {
    let mut comms = vec![c("a1", "a2", "b"), c("b", "a1", "b1"), c("b", "a2", "b2")];
    comms.extend_from_slice(extra);
    pc(p, &["a1", "a2", "b", "b1", "b2", "g"], pows, &comms)
}

fn phi40(p: u32, _: &Params) -> Result<PcPresentation> {
    phi40_base(p, &[], &[c("b1", "a2", "g"), c("b2", "a1", "g")])
}

fn phi41(p: u32, params: &Params) -> Result<PcPresentation> {
    let nu = param(params, "nu");
    phi40_base(
        p,
        &[],
        &[c("a1", "b1", "g"), c("a2", "b2", &format!("g^{}", -nu))],
    )
}

fn phi42(p: u32, _: &Params) -> Result<PcPresentation> {
    phi40_base(
        p,
        &[pw("a1", "b1"), pw("a2", "b2^-1"), pw("b", "g^-1")],
        &[c("a1", "b2", "g"), c("a2", "b1", "g")],
    )
}

fn phi43(p: u32, params: &Params) -> Result<PcPresentation> {
    let nu = param(params, "nu");
    phi40_base(
        p,
        &[
            pw("a1", "b2"),
            ("a2", format!("b1^{nu}")),
            ("b", format!("g^{nu}")),
        ],
        &[c("a1", "b1", "g"), c("a2", "b2", &format!("g^{}", -nu))],
    )
}

struct Row {
    family: u32,
    label: &'static str,
    min_prime: u32,
    params: &'static [(&'static str, ParamValue)],
    mingens: &'static str,
    outc: u32,
    provenance: Provenance,
    inv: (Option<u32>, Option<u32>, Option<u32>),
    verify: bool,
    template: Option<TemplateFn>,
}

const NONE3: (Option<u32>, Option<u32>, Option<u32>) = (None, None, None);

#[rustfmt::skip]
fn rows() -> Vec<Row> {
    use Provenance::*;
    use ParamValue::*;
    let r = |family, label, min_prime, params, mingens, outc, provenance, inv, template: Option<TemplateFn>| Row {
        family, label, min_prime, params, mingens, outc, provenance, inv, template,
        verify: provenance != External,
    };
    let mut rows = vec![
        r(2, "Phi2(1^6)", 3, &[], "a1 a2 c1 c2 c3", 0, DirectProduct, NONE3, Some(phi2)),
        r(3, "Phi3(1^6)", 3, &[], "a a1 c1 c2", 0, DirectProduct, NONE3, Some(phi3)),
        r(4, "Phi4(1^6)", 3, &[], "a a1 a2 c", 0, DirectProduct, NONE3, Some(phi4)),
        r(5, "Phi5(1^6)", 3, &[], "a1 a2 a3 a4 c", 0, DirectProduct, NONE3, Some(phi5)),
        r(6, "Phi6(1^6)", 3, &[], "a1 a2 c", 0, DirectProduct, NONE3, Some(phi6)),
        r(7, "Phi7(1^6)", 3, &[], "a a1 b c", 1, DirectProduct, NONE3, Some(phi7)),
        r(8, "Phi8(321)a", 3, &[], "a1 a2 c", 0, DirectProduct, NONE3, Some(phi8)),
        r(9, "Phi9(1^6)", 5, &[], "a a1 c", 0, DirectProduct, NONE3, Some(phi9)),
        r(10, "Phi10(1^6)", 5, &[], "a a1 c", 1, DirectProduct, NONE3, Some(phi10)),
        r(11, "Phi11(1^6)", 3, &[], "a1 a2 a3", 0, Transcribed, (Some(3), Some(3), Some(2)), Some(phi11)),
        r(12, "Phi12(1^6)", 3, &[], "a1 a2 a1' a2'", 0, DirectProduct, NONE3, Some(phi12)),
        r(13, "Phi13(1^6)", 3, &[], "a1 a2 a3 a4", 2, Transcribed, (Some(2), Some(2), Some(2)), Some(phi13)),
        r(14, "Phi14(1^6)", 3, &[], "", 0, External, NONE3, None),
        r(15, "Phi15(1^6)", 3, &[("nu", NonResidue)], "a1 a2 a3 a4", 4, External, (Some(2), Some(2), Some(2)), Some(phi15)),
        r(16, "Phi16(1^6)", 3, &[], "", 0, External, NONE3, None),
        r(17, "Phi17(1^6)", 3, &[], "a a1 b", 0, Transcribed, (Some(2), Some(3), Some(3)), Some(phi17)),
        r(18, "Phi18(1^6)", 3, &[], "a a1 b", 2, Transcribed, (Some(2), Some(3), Some(3)), Some(phi18)),
        r(19, "Phi19(1^6)", 3, &[], "a a1 a2", 0, Transcribed, (None, None, Some(3)), Some(phi19)),
        r(20, "Phi20(1^6)", 3, &[], "a a1 a2", 2, Transcribed, (Some(2), Some(3), Some(3)), Some(phi20)),
        r(21, "Phi21(1^6)", 3, &[("nu", NonResidue)], "a a1 a2", 4, External, (None, None, Some(3)), Some(phi21)),
        r(22, "Phi22(1^6)", 3, &[], "", 0, External, NONE3, None),
        r(23, "Phi23(1^6)", 5, &[], "a a1", 0, Transcribed, (Some(2), Some(4), Some(4)), Some(phi23)),
        r(24, "Phi24(1^6)", 5, &[], "a a1 b", 1, Transcribed, (Some(1), Some(3), Some(4)), Some(phi24)),
        r(25, "Phi25(222)", 3, &[], "", 0, External, NONE3, None),
        r(26, "Phi26(222)", 3, &[], "", 0, External, NONE3, None),
        r(27, "Phi27(1^6)", 5, &[], "a a1 b", 0, Transcribed, (Some(1), Some(3), Some(4)), Some(phi27)),
        r(28, "Phi28(222)", 3, &[("y", Int(1))], "a a1", 0, Transcribed, (Some(1), Some(3), Some(4)), Some(phi28)),
        r(29, "Phi29(222)", 3, &[("y", NonResidue)], "a a1", 0, Transcribed, (Some(1), Some(3), Some(4)), Some(phi28)),
        r(30, "Phi30(1^6)", 5, &[], "a a1 b", 1, Transcribed, (Some(1), Some(3), Some(4)), Some(phi30)),
        r(31, "Phi31(1^6)", 3, &[("y", Int(1))], "a a1 a2", 0, Transcribed, (Some(1), Some(3), Some(3)), Some(phi31)),
        r(32, "Phi32(1^6)", 3, &[("y", NonResidue)], "a a1 a2", 0, Transcribed, (Some(1), Some(3), Some(3)), Some(phi31)),
        r(33, "Phi33(1^6)", 3, &[], "a a1 a2", 0, Transcribed, (Some(1), Some(3), Some(3)), Some(phi33)),
        r(34, "Phi34(321)a", 3, &[], "a a1 a2", 0, Transcribed, (Some(1), Some(3), Some(3)), Some(phi34)),
        r(35, "Phi35(1^6)", 3, &[], "", 0, External, NONE3, None),
        r(36, "Phi36(1^6)", 5, &[], "a a1", 1, Transcribed, (Some(1), Some(4), Some(5)), Some(phi36)),
        r(37, "Phi37(1^6)", 3, &[], "", 0, External, NONE3, None),
        r(38, "Phi38(1^6)", 5, &[], "a a1", 1, Transcribed, (Some(1), Some(4), Some(5)), Some(phi38)),
        r(39, "Phi39(1^6)", 5, &[], "a a1", 1, Transcribed, (Some(1), Some(4), Some(5)), Some(phi39)),
        r(40, "Phi40(1^6)", 5, &[], "a1 a2", 0, Transcribed, (Some(1), Some(4), Some(4)), Some(phi40)),
        r(41, "Phi41(1^6)", 5, &[("nu", NonResidue)], "a1 a2", 0, Transcribed, (Some(1), Some(4), Some(4)), Some(phi41)),
        r(42, "Phi42(222)a0", 3, &[], "a1 a2", 0, Transcribed, (Some(1), Some(4), Some(4)), Some(phi42)),
        r(43, "Phi43(222)a0", 5, &[("nu", NonResidue)], "a1 a2", 0, Transcribed, (Some(1), Some(4), Some(4)), Some(phi43)),
    ];
    rows.sort_by_key(|r| r.family);
    rows
}

pub(super) fn all() -> Vec<CatalogueEntry> {
    rows()
        .into_iter()
        .map(|r| CatalogueEntry {
            family: r.family,
            label: r.label.to_string(),
            validity: Validity::AtLeast(r.min_prime),
            params: r.params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            minimal_gens: r.mingens.split_whitespace().map(String::from).collect(),
            expected_outc_exponent: r.outc,
            provenance: r.provenance,
            invariants: Invariants {
                center: r.inv.0,
                derived: r.inv.1,
                class: r.inv.2,
            },
            verify: r.verify,
            template: match r.template {
                Some(f) => Template::Builtin(f),
                None => Template::Missing(
                    "no presentation is available for this family".to_string(),
                ),
            },
        })
        .collect()
}
