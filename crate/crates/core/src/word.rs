use crate::error::{Error, Result};

/// A word in the pc-generators: a sequence of `(generator, exponent)` letters.
///
/// Exponents are arbitrary integers; collection reduces them. The empty word
/// is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<(usize, i64)>);

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn generator(k: usize) -> Word {
        Word(vec![(k, 1)])
    }

    pub fn power(k: usize, e: i64) -> Word {
        if e == 0 {
            Word::identity()
        } else {
            Word(vec![(k, e)])
        }
    }

    pub fn from_letters(letters: impl IntoIterator<Item = (usize, i64)>) -> Word {
        Word(letters.into_iter().filter(|&(_, e)| e != 0).collect())
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, k: usize, e: i64) {
        if e != 0 {
            self.0.push((k, e));
        }
    }

    /// Concatenation `self * other`.
    pub fn then(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        Word(out)
    }

    /// The formal inverse: letters reversed with negated exponents.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&(k, e)| (k, -e)).collect())
    }

    /// Smallest generator index mentioned, if any.
    pub fn min_generator(&self) -> Option<usize> {
        self.0.iter().map(|&(k, _)| k).min()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|&(k, _)| k).max()
    }

    /// Renders the word as `a1^2*b1^-1` using the given labels; `1` for the identity.
    pub fn display(&self, labels: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|&(k, e)| {
                let name = labels.get(k).map(String::as_str).unwrap_or("?");
                if e == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Parses `a1^2*b1^-1` style text against a label list. `1` and the empty
    /// string denote the identity.
    pub fn parse(input: &str, labels: &[String]) -> Result<Word> {
        let text = input.trim();
        if text.is_empty() || text == "1" {
            return Ok(Word::identity());
        }
        let syntax = |reason: &str| Error::WordSyntax {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let mut word = Word::identity();
        for factor in text.split('*') {
            let factor = factor.trim();
            if factor.is_empty() {
                return Err(syntax("empty factor"));
            }
            let (name, exp) = match factor.split_once('^') {
                Some((name, exp)) => {
                    let exp: i64 = exp
                        .trim()
                        .parse()
                        .map_err(|_| syntax(&format!("bad exponent in `{factor}`")))?;
                    (name.trim(), exp)
                }
                None => (factor, 1),
            };
            let k = labels
                .iter()
                .position(|l| l == name)
                .ok_or_else(|| Error::UnknownLabel(name.to_string()))?;
            word.push(k, exp);
        }
        Ok(word)
    }
}
