use crate::element::Element;
use crate::pcp::PcPresentation;

/// One overlap whose two collection orders disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub overlap: String,
    pub left: Element,
    pub right: Element,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub violations: Vec<Violation>,
}

impl ConsistencyReport {
    pub fn is_consistent(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Runs the standard overlap tests for a pc-presentation of a p-group:
///
/// * `(g_k g_j) g_i = g_k (g_j g_i)` for `k > j > i`
/// * `(g_j^p) g_i = g_j^(p-1) (g_j g_i)` for `j > i`
/// * `g_j (g_i^p) = (g_j g_i^(p-1)) g_i` for `j > i`
/// * `(g_i^p) g_i = g_i (g_i^p)`
pub fn check_consistency(pres: &PcPresentation) -> ConsistencyReport {
    let n = pres.ngens();
    let p = pres.prime() as u8;
    let labels = pres.labels();
    let g = |k: usize| Element::generator(k);
    let gpow = |k: usize, e: u8| {
        let mut x = Element::IDENTITY;
        x.exps_mut()[k] = e;
        x
    };
    let mul = |a: &Element, b: &Element| pres.multiply(a, b);
    let mut violations = Vec::new();
    let mut record = |overlap: String, left: Element, right: Element| {
        if left != right {
            violations.push(Violation {
                overlap,
                left,
                right,
            });
        }
    };

    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let left = mul(&mul(&g(k), &g(j)), &g(i));
                let right = mul(&g(k), &mul(&g(j), &g(i)));
                record(
                    format!("({} {}) {}", labels[k], labels[j], labels[i]),
                    left,
                    right,
                );
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let left = mul(&pres.power_relation(j), &g(i));
            let right = mul(&gpow(j, p - 1), &mul(&g(j), &g(i)));
            record(format!("({}^p) {}", labels[j], labels[i]), left, right);

            let left = mul(&g(j), &pres.power_relation(i));
            let right = mul(&mul(&g(j), &gpow(i, p - 1)), &g(i));
            record(format!("{} ({}^p)", labels[j], labels[i]), left, right);
        }
    }
    for i in 0..n {
        let left = mul(&pres.power_relation(i), &g(i));
        let right = mul(&g(i), &pres.power_relation(i));
        record(format!("({0}^p) {0}", labels[i]), left, right);
    }
    ConsistencyReport { violations }
}
