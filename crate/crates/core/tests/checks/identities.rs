// Closed-form commutator identities in specific families, each checked
// over parameter tuples. Exponent expressions are evaluated over the
// integers and reduced afterwards.

use super::{c2, c3, comm, el, expect_eq, expect_exponents, pres, sweep, Outcome};
use autc_core::catalogue::{self, ParamValue};
use autc_core::element::Element;
use autc_core::pcp::PcPresentation;

pub type Check = fn(&PcPresentation, &[i64]) -> Result<(), String>;

pub struct Identity {
    pub name: &'static str,
    pub label: &'static str,
    pub arity: usize,
    pub check: Check,
}

/// Runs one identity at `p`; `None` when the family is not defined there.
pub fn run(id: &Identity, p: u32) -> Option<Outcome> {
    let g = pres(id.label, p)?;
    let seed = id.name.bytes().fold(p as u64, |h, b| h.wrapping_mul(31).wrapping_add(b as u64));
    Some(sweep(p, id.arity, seed, |v| (id.check)(&g, v)))
}

pub fn all() -> Vec<Identity> {
    let mut v = vec![
        Identity {
            name: "Phi11 [eta a1^k a2^l a3^m, eta' a1^k' a2^l' a3^m']",
            label: "Phi11(1^6)",
            arity: 12,
            check: phi11_bilinear,
        },
        Identity {
            name: "Phi13 [eta a1^k a2^l a3^m a4^n, eta' ...]",
            label: "Phi13(1^6)",
            arity: 12,
            check: phi13_bilinear,
        },
        Identity {
            name: "Phi17 [a b, eta a^k a1^l b^m]",
            label: "Phi17(1^6)",
            arity: 6,
            check: phi17,
        },
        Identity {
            name: "Phi27 [a2 b^-1, a^k]",
            label: "Phi27(1^6)",
            arity: 1,
            check: phi27,
        },
        Identity {
            name: "Phi28 [a1, a^p] and [a1, a2^t], all y",
            label: "Phi28(222)",
            arity: 1,
            check: phi28,
        },
    ];
    for label in ["Phi31(1^6)", "Phi32(1^6)", "Phi33(1^6)", "Phi34(321)a"] {
        v.push(Identity {
            name: "[a1 a2, eta a^k a1^l a2^m] b1/b2 exponents",
            label,
            arity: 6,
            check: phi31_34,
        });
    }
    for label in ["Phi40(1^6)", "Phi41(1^6)", "Phi42(222)a0", "Phi43(222)a0"] {
        v.push(Identity {
            name: "[a1 a2, eta a1^k a2^l] b/b1/b2 exponents",
            label,
            arity: 6,
            check: phi40_43,
        });
    }
    v.extend([
        Identity {
            name: "Phi38 [a2, eta a^k a1^l]",
            label: "Phi38(1^6)",
            arity: 6,
            check: phi38,
        },
        Identity {
            name: "Phi39 image of eta a^k a1^l under a1 -> a1 a4",
            label: "Phi39(1^6)",
            arity: 6,
            check: phi39_delta,
        },
        Identity {
            name: "Phi39 [eta a^k a1^l, a3^s a4^t]",
            label: "Phi39(1^6)",
            arity: 8,
            check: phi39_with_a3a4,
        },
        Identity {
            name: "Phi39 [eta a1^l, a2^r a4^t]",
            label: "Phi39(1^6)",
            arity: 7,
            check: phi39_with_a2a4,
        },
        Identity {
            name: "Phi18 [g, b^n], [g, a1^n], [g, a2^n] with g = eta a^k a1^l b^m",
            label: "Phi18(1^6)",
            arity: 7,
            check: phi18_displays,
        },
        Identity {
            name: "Phi18 [a1 b, eta a^k a1^l b^m] a2/g exponents",
            label: "Phi18(1^6)",
            arity: 6,
            check: phi18_partial,
        },
        Identity {
            name: "Phi20 commutators of g = eta a^k a1^l a2^m",
            label: "Phi20(1^6)",
            arity: 7,
            check: phi20_displays,
        },
        Identity {
            name: "Phi24 [g, b^n] and [eta b^m, a1^n]",
            label: "Phi24(1^6)",
            arity: 7,
            check: phi24_displays,
        },
        Identity {
            name: "Phi36 [eta a^k a1^l, a4^n] and [eta a1^l, a2^n]",
            label: "Phi36(1^6)",
            arity: 7,
            check: phi36_displays,
        },
    ]);
    v
}

fn phi11_bilinear(g: &PcPresentation, v: &[i64]) -> Result<(), String> {
    let [k1, l1, m1, k2, l2, m2, x1, y1, z1, x2, y2, z2] = v.try_into().unwrap();
    let a = el(g, &[("b1", x1), ("b2", y1), ("b3", z1), ("a1", k1), ("a2", l1), ("a3", m1)]);
    let b = el(g, &[("b1", x2), ("b2", y2), ("b3", z2), ("a1", k2), ("a2", l2), ("a3", m2)]);
    let want = el(
        g,
        &[("b1", l1 * m2 - l2 * m1), ("b2", k2 * m1 - k1 * m2), ("b3", k1 * l2 - k2 * l1)],
    );
    expect_eq(g, &comm(g, &a, &b), &want)
}

fn phi13_bilinear(g: &PcPresentation, v: &[i64]) -> Result<(), String> {
    let [k1, l1, m1, n1, k2, l2, m2, n2, x1, y1, x2, y2] = v.try_into().unwrap();
    let a = el(g, &[("b1", x1), ("b2", y1), ("a1", k1), ("a2", l1), ("a3", m1), ("a4", n1)]);
    let b = el(g, &[("b1", x2), ("b2", y2), ("a1", k2), ("a2", l2), ("a3", m2), ("a4", n2)]);
    let want = el(
        g,
        &[("b1", k1 * l2 - k2 * l1), ("b2", k1 * m2 - k2 * m1 + l1 * n2 - l2 * n1)],
    );
    expect_eq(g, &comm(g, &a, &b), &want)
}

fn phi17(g: &PcPresentation, v: &[i64]) -> Result<(), String> {
    let [r1, s1, t1, k1, l1, m1] = v.try_into().unwrap();
    let x = el(g, &[("a", 1), ("b", 1)]);
    let y = el(g, &[("a2", r1), ("a3", s1), ("g", t1), ("a", k1), ("a1", l1), ("b", m1)]);
    let want = el(g, &[("a2", -l1), ("a3", -r1), ("g", l1)]);
    expect_eq(g, &comm(g, &x, &y), &want)
}

fn phi27(g: &PcPresentation, v: &[i64]) -> Result<(), String> {
    let k = v[0];
    let x = el(g, &[("a2", 1), ("b", -1)]);
    let want = el(g, &[("a3", k), ("a4", c2(k))]);
    expect_eq(g, &comm(g, &x, &el(g, &[("a", k)])), &want)
}

/// The family-28 template with an arbitrary nonzero `y`.
pub fn phi28_with(p: u32, y: i64) -> PcPresentation {
    let mut e = catalogue::lookup("Phi28(222)").unwrap().clone();
    e.params = vec![("y".into(), ParamValue::Int(y))];
    e.presentation(p).expect("consistent for every nonzero y")
}

fn phi28(g: &PcPresentation, v: &[i64]) -> Result<(), String> {
    let y = v[0];
    if y == 0 {
        return Ok(());
    }
    let p = g.prime() as i64;
    let g = &phi28_with(g.prime(), y);
    let lhs = comm(g, &el(g, &[("a1", 1)]), &el(g, &[("a", p)]));
    // The generic expansion, with C(p, 3) as the third coefficient.
    let expansion = el(g, &[("a2", p), ("a3", c2(p)), ("a4", c3(p))]);
    expect_eq(g, &lhs, &expansion)?;
    if p > 3 {
        expect_eq(g, &lhs, &el(g, &[("a4", y)]))?;
    }
    for t in 0..p {
        let c = comm(g, &el(g, &[("a1", 1)]), &el(g, &[("a2", t)]));
        expect_eq(g, &c, &el(g, &[("a4", t)]))?;
    }
    Ok(())
}

fn phi31_34(g: &PcPresentation, v: &[i64]) -> Result<(), String> {
    let [x, y, z, k1, l1, m1] = v.try_into().unwrap();
    let lhs = comm(
        g,
        &el(g, &[("a1", 1), ("a2", 1)]),
        &el(g, &[("b1", x), ("b2", y), ("g", z), ("a", k1), ("a1", l1), ("a2", m1)]),
    );
    expect_exponents(g, &lhs, &[("b1", k1), ("b2", k1)], &["g"])
}

fn phi40_43(g: &PcPresentation, v: &[i64]) -> Result<(), String> {
    let [r1, s1, t1, u1, k1, l1] = v.try_into().unwrap();
    let lhs = comm(
        g,
        &el(g, &[("a1", 1), ("a2", 1)]),
        &el(g, &[("b", r1), ("b1", s1), ("b2", t1), ("g", u1), ("a1", k1), ("a2", l1)]),
    );
    let want = [
        ("b", l1 - k1),
        ("b1", -c2(k1) - r1),
        ("b2", l1 * (l1 + 1) / 2 - k1 * l1 - r1),
    ];
    expect_exponents(g, &lhs, &want, &["g"])
}

/// `[a2, eta a^k a1^l]` in family 38.
pub fn phi38_value(g: &PcPresentation, v: &[i64]) -> Element {
    let [r1, s1, t1, u1, k1, l1] = v.try_into().unwrap();
    comm(
        g,
        &el(g, &[("a2", 1)]),
        &el(g, &[("a2", r1), ("a3", s1), ("a4", t1), ("a5", u1), ("a", k1), ("a1", l1)]),
    )
}

// The a5 coefficient of the a^k part is C(k, 3) = sum_{n=1}^{k-1} n(n-1)/2.
fn phi38(g: &PcPresentation, v: &[i64]) -> Result<(), String> {
    let (k1, l1) = (v[4], v[5]);
    let want = el(g, &[("a3", k1), ("a4", c2(k1) - l1), ("a5", l1 - k1 * l1 + c3(k1))]);
    expect_eq(g, &phi38_value(g, v), &want)
}

/// Images of `a2, a3, a4, a5` under a map fixing `a` and sending `a1` to
/// `a1 a4` in family 39, through their defining commutators.
fn phi39_delta_images(g: &PcPresentation) -> [Element; 7] {
    let a = el(g, &[("a", 1)]);
    let a1 = el(g, &[("a1", 1), ("a4", 1)]);
    let a2 = comm(g, &a1, &a);
    let a3 = comm(g, &a2, &a);
    let a4 = comm(g, &a3, &a);
    let a5 = comm(g, &a2, &a3);
    [a.clone(), a1, a2, a3, a4, a5, a]
}

fn phi39_delta(g: &PcPresentation, v: &[i64]) -> Result<(), String> {
    let [r1, s1, t1, u1, k1, l1] = v.try_into().unwrap();
    let [a, a1, a2, a3, a4, a5, _] = phi39_delta_images(g);
    for (img, label) in [(&a2, "a2"), (&a3, "a3"), (&a4, "a4"), (&a5, "a5")] {
        expect_eq(g, img, &el(g, &[(label, 1)]))?;
    }
    let image = [(a2, r1), (a3, s1), (a4, t1), (a5, u1), (a, k1), (a1, l1)]
        .iter()
        .fold(Element::IDENTITY, |acc, (x, e)| g.multiply(&acc, &g.power(x, *e)));
    let want = el(
        g,
        &[("a2", r1), ("a3", s1), ("a4", t1), ("a5", u1), ("a", k1), ("a1", l1), ("a4", l1), ("a5", c2(l1))],
    );
    expect_eq(g, &image, &want)
}

fn phi39_with_a3a4(g: &PcPresentation, v: &[i64]) -> Result<(), String> {
    let [r1, s1, t1, u1, k1, l1, s2, t2] = v.try_into().unwrap();
    let lhs = comm(
        g,
        &el(g, &[("a2", r1), ("a3", s1), ("a4", t1), ("a5", u1), ("a", k1), ("a1", l1)]),
        &el(g, &[("a3", s2), ("a4", t2)]),
    );
    let want = [
        ("a5", r1 * s2 - l1 * s2 - l1 * t2 - l1 * k1 * s2),
        ("a4", -k1 * s2),
    ];
    expect_exponents(g, &lhs, &want, &[])
}

fn phi39_with_a2a4(g: &PcPresentation, v: &[i64]) -> Result<(), String> {
    let [r1, s1, t1, u1, l1, r2, t2] = v.try_into().unwrap();
    let lhs = comm(
        g,
        &el(g, &[("a2", r1), ("a3", s1), ("a4", t1), ("a5", u1), ("a1", l1)]),
        &el(g, &[("a2", r2), ("a4", t2)]),
    );
    let want = [("a5", -s1 * r2 + r2 * c2(l1) - l1 * t2), ("a4", l1 * r2)];
    expect_exponents(g, &lhs, &want, &[])
}

fn phi18_displays(g: &PcPresentation, v: &[i64]) -> Result<(), String> {
    let [x, y, z, k1, l1, m1, n] = v.try_into().unwrap();
    let eta = [("a2", x), ("a3", y), ("g", z)];
    let with = |extra: &[(&'static str, i64)]| {
        let mut parts = eta.to_vec();
        parts.extend_from_slice(extra);
        el(g, &parts)
    };
    let b = el(g, &[("b", n)]);
    let k0 = with(&[("a1", l1), ("b", m1)]);
    expect_eq(g, &comm(g, &k0, &b), &el(g, &[("a3", l1 * n)]))?;
    let l0 = with(&[("b", m1)]);
    expect_eq(g, &comm(g, &l0, &el(g, &[("a1", n)])), &el(g, &[("a3", -m1 * n)]))?;
    let full = with(&[("a", k1), ("a1", l1), ("b", m1)]);
    expect_eq(g, &comm(g, &full, &el(g, &[("a2", n)])), &el(g, &[("a3", -k1 * n)]))?;
    expect_eq(g, &comm(g, &full, &b), &el(g, &[("a3", l1 * n), ("g", k1 * n)]))
}

// Only the a2 and g exponents are asserted; the a3 exponent is not pinned
// down and a bare `b` cannot occur in a commutator.
fn phi18_partial(g: &PcPresentation, v: &[i64]) -> Result<(), String> {
    let [x, y, z, k2, l2, m2] = v.try_into().unwrap();
    let lhs = comm(
        g,
        &el(g, &[("a1", 1), ("b", 1)]),
        &el(g, &[("a2", x), ("a3", y), ("g", z), ("a", k2), ("a1", l2), ("b", m2)]),
    );
    expect_exponents(g, &lhs, &[("a2", k2), ("g", -k2)], &["a", "a1", "b", "a3"])
}

fn phi20_displays(g: &PcPresentation, v: &[i64]) -> Result<(), String> {
    let [u1, v1, w1, k1, l1, m1, n] = v.try_into().unwrap();
    let eta = [("b", u1), ("b1", v1), ("b2", w1)];
    let with = |extra: &[(&'static str, i64)]| {
        let mut parts = eta.to_vec();
        parts.extend_from_slice(extra);
        el(g, &parts)
    };
    let b = el(g, &[("b", n)]);
    let no_a1 = with(&[("a", k1), ("a2", m1)]);
    expect_eq(g, &comm(g, &no_a1, &b), &el(g, &[("b2", -m1 * n)]))?;
    let no_a1a2 = with(&[("a", k1)]);
    expect_eq(g, &comm(g, &no_a1a2, &el(g, &[("a2", n)])), &el(g, &[("b2", u1 * n)]))?;
    let ak = el(g, &[("a", k1)]);
    expect_eq(g, &comm(g, &ak, &el(g, &[("a1", n)])), &el(g, &[("b2", k1 * n)]))?;
    let full = with(&[("a", k1), ("a1", l1), ("a2", m1)]);
    expect_eq(g, &comm(g, &full, &el(g, &[("a", n)])), &el(g, &[("b2", -l1 * n)]))?;
    expect_eq(g, &comm(g, &full, &b), &el(g, &[("b1", -l1 * n), ("b2", -m1 * n)]))
}

fn phi24_displays(g: &PcPresentation, v: &[i64]) -> Result<(), String> {
    let [x, y, z, k1, l1, m1, n] = v.try_into().unwrap();
    let full = el(g, &[("a2", x), ("a3", y), ("a4", z), ("a", k1), ("a1", l1), ("b", m1)]);
    expect_eq(g, &comm(g, &full, &el(g, &[("b", n)])), &el(g, &[("a4", l1 * n)]))?;
    // The sign of the a4 exponent is negative.
    expect_eq(g, &comm(g, &full, &el(g, &[("a3", n)])), &el(g, &[("a4", -k1 * n)]))?;
    let eb = el(g, &[("a2", x), ("a3", y), ("a4", z), ("b", m1)]);
    expect_eq(g, &comm(g, &eb, &el(g, &[("a1", n)])), &el(g, &[("a4", -m1 * n)]))
}

fn phi36_displays(g: &PcPresentation, v: &[i64]) -> Result<(), String> {
    let [x, y, z, w, k1, l1, n] = v.try_into().unwrap();
    let eta = [("a2", x), ("a3", y), ("a4", z), ("a5", w)];
    let mut parts = eta.to_vec();
    parts.extend([("a", k1), ("a1", l1)]);
    let full = el(g, &parts);
    expect_eq(g, &comm(g, &full, &el(g, &[("a4", n)])), &el(g, &[("a5", -k1 * n)]))?;
    let mut parts = eta.to_vec();
    parts.push(("a1", l1));
    let no_a = el(g, &parts);
    expect_eq(g, &comm(g, &no_a, &el(g, &[("a2", n)])), &el(g, &[("a5", l1 * n)]))
}
