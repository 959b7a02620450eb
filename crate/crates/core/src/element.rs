/// Largest number of pc-generators a presentation may have.
pub const MAX_GENS: usize = 8;

/// A group element in collected normal form `g_1^{e_1} ... g_n^{e_n}`.
///
/// Exponents are least non-negative residues modulo the prime. Entries past
/// the presentation's generator count are always zero, so two elements of the
/// same group are equal exactly when their exponent vectors are equal. The
/// derived ordering is lexicographic on exponent vectors.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Element {
    exps: [u8; MAX_GENS],
}

impl Element {
    pub const IDENTITY: Element = Element {
        exps: [0; MAX_GENS],
    };

    /// Builds an element from raw exponents. Exponents must already be
    /// reduced for the group they are used in.
    pub fn from_exponents(exps: &[u8]) -> Element {
        assert!(exps.len() <= MAX_GENS, "too many exponents");
        let mut e = Element::IDENTITY;
        e.exps[..exps.len()].copy_from_slice(exps);
        e
    }

    /// The `k`-th pc-generator.
    pub fn generator(k: usize) -> Element {
        let mut e = Element::IDENTITY;
        e.exps[k] = 1;
        e
    }

    pub fn exponent(&self, k: usize) -> u8 {
        self.exps[k]
    }

    pub fn exponents(&self) -> &[u8; MAX_GENS] {
        &self.exps
    }

    pub(crate) fn exps_mut(&mut self) -> &mut [u8; MAX_GENS] {
        &mut self.exps
    }

    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Index of the first non-zero exponent, if any.
    pub fn leading(&self) -> Option<usize> {
        self.exps.iter().position(|&e| e != 0)
    }

    /// Generators with non-zero exponent, in order.
    pub fn support(&self) -> impl Iterator<Item = (usize, u8)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| (i, e))
    }
}

impl std::fmt::Debug for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let last = self.exps.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1);
        write!(f, "Element{:?}", &self.exps[..last])
    }
}
