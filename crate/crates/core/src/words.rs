//! Letters, words with involution, and presentation data.
//!
//! A presentation carries two alphabets: generators `X` (each `x` has a
//! formal inverse `x⁻¹`, written `x'` in text) and self-inverse labels `P`
//! (one per 2-cell). Words are flat sequences of signed letters; no free
//! reduction is ever performed — `a a'` and the empty word are distinct
//! words that happen to satisfy `a a' ≥ 1` in the monoid.

use std::fmt;

use crate::Error;

/// One signed letter: a generator, an inverted generator, or a 2-cell label.
///
/// The derived `Ord` is the canonical letter order used everywhere a
/// deterministic traversal is needed: `x₀ < x₀' < x₁ < x₁' < … < ρ₀ < ρ₁ < …`
/// following the declaration order of the presentation.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    /// Generator from `X`, possibly inverted.
    X { index: u32, inverted: bool },
    /// Self-inverse 2-cell label from `P`.
    P { index: u32 },
}

impl Letter {
    /// The `index`-th generator, positive orientation.
    pub fn x(index: usize) -> Letter {
        Letter::X {
            index: index as u32,
            inverted: false,
        }
    }

    /// The formal inverse of the `index`-th generator.
    pub fn x_inv(index: usize) -> Letter {
        Letter::X {
            index: index as u32,
            inverted: true,
        }
    }

    /// The `index`-th 2-cell label.
    pub fn p(index: usize) -> Letter {
        Letter::P {
            index: index as u32,
        }
    }

    /// The involution: flips the sign of a generator, fixes 2-cell labels.
    pub fn inverse(self) -> Letter {
        match self {
            Letter::X { index, inverted } => Letter::X {
                index,
                inverted: !inverted,
            },
            p @ Letter::P { .. } => p,
        }
    }

    /// Strips the sign; the representative stored for an edge pair.
    pub fn base(self) -> Letter {
        match self {
            Letter::X { index, .. } => Letter::X {
                index,
                inverted: false,
            },
            p @ Letter::P { .. } => p,
        }
    }

    /// True for `x'` letters.
    pub fn is_inverted(self) -> bool {
        matches!(self, Letter::X { inverted: true, .. })
    }

    /// True for 2-cell labels.
    pub fn is_p(self) -> bool {
        matches!(self, Letter::P { .. })
    }
}

/// A finite sequence of letters. The empty word is the monoid identity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    /// The empty word.
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The involution `(l₁ … lₙ)⁻¹ = lₙ⁻¹ … l₁⁻¹`.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Concatenation.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// `self` conjugated as `w · self · w⁻¹`.
    pub fn conjugated_by(&self, w: &Word) -> Word {
        w.concat(self).concat(&w.inverse())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Word {
        Word(iter.into_iter().collect())
    }
}

/// A presentation `(X, P, bl)`: generator names, 2-cell label names, and one
/// boundary word over `X ∪ X⁻¹` per 2-cell.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    x_names: Vec<String>,
    p_names: Vec<String>,
    boundaries: Vec<Word>,
}

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Presentation {
    /// Builds a presentation from generator names and `(label, boundary)`
    /// pairs, where each boundary is a word in the textual format accepted
    /// by [`Presentation::parse_word`].
    pub fn new<S: AsRef<str>, T: AsRef<str>, U: AsRef<str>>(
        x_names: &[S],
        cells: &[(T, U)],
    ) -> Result<Presentation, Error> {
        let x_names: Vec<String> = x_names.iter().map(|s| s.as_ref().to_owned()).collect();
        let p_names: Vec<String> = cells.iter().map(|(n, _)| n.as_ref().to_owned()).collect();

        let mut seen: Vec<&str> = Vec::new();
        for name in x_names.iter().chain(p_names.iter()) {
            if !valid_identifier(name) {
                return Err(Error::Presentation(format!("bad identifier `{name}`")));
            }
            if seen.contains(&name.as_str()) {
                return Err(Error::Presentation(format!("duplicate name `{name}`")));
            }
            seen.push(name);
        }

        let mut pres = Presentation {
            x_names,
            p_names,
            boundaries: Vec::new(),
        };
        for (label, body) in cells {
            let word = pres.parse_word(body.as_ref())?;
            if let Some(&l) = word.letters().iter().find(|l| l.is_p()) {
                return Err(Error::Presentation(format!(
                    "boundary of `{}` contains 2-cell label `{}`",
                    label.as_ref(),
                    pres.letter_name(l)
                )));
            }
            pres.boundaries.push(word);
        }
        Ok(pres)
    }

    pub fn x_count(&self) -> usize {
        self.x_names.len()
    }

    pub fn p_count(&self) -> usize {
        self.p_names.len()
    }

    pub fn x_name(&self, index: usize) -> &str {
        &self.x_names[index]
    }

    pub fn p_name(&self, index: usize) -> &str {
        &self.p_names[index]
    }

    /// The boundary word of the `index`-th 2-cell.
    pub fn boundary(&self, index: usize) -> &Word {
        &self.boundaries[index]
    }

    /// Looks a name up in either alphabet.
    pub fn letter_by_name(&self, name: &str) -> Option<Letter> {
        if let Some(i) = self.x_names.iter().position(|n| n == name) {
            return Some(Letter::x(i));
        }
        self.p_names.iter().position(|n| n == name).map(Letter::p)
    }

    /// All signed letters in canonical order: `x₀, x₀', x₁, …, ρ₀, ρ₁, …`.
    pub fn signed_letters(&self) -> impl Iterator<Item = Letter> + '_ {
        let xs = (0..self.x_count()).flat_map(|i| [Letter::x(i), Letter::x_inv(i)]);
        let ps = (0..self.p_count()).map(Letter::p);
        xs.chain(ps)
    }

    /// Parses a whitespace-separated word. `1` denotes the empty word (and
    /// is skipped inside longer words); `x'` is the inverse of `x`; a primed
    /// 2-cell label `ρ'` normalizes to `ρ`.
    pub fn parse_word(&self, text: &str) -> Result<Word, Error> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            if token == "1" {
                continue;
            }
            let (name, inverted) = match token.strip_suffix('\'') {
                Some(base) => (base, true),
                None => (token, false),
            };
            if let Some(i) = self.x_names.iter().position(|n| n == name) {
                letters.push(Letter::X {
                    index: i as u32,
                    inverted,
                });
            } else if let Some(j) = self.p_names.iter().position(|n| n == name) {
                letters.push(Letter::p(j));
            } else {
                return Err(Error::Word(format!("unknown letter `{token}`")));
            }
        }
        Ok(Word(letters))
    }

    /// Renders one letter in the textual format.
    pub fn letter_name(&self, l: Letter) -> String {
        match l {
            Letter::X { index, inverted } => {
                let name = &self.x_names[index as usize];
                if inverted {
                    format!("{name}'")
                } else {
                    name.clone()
                }
            }
            Letter::P { index } => self.p_names[index as usize].clone(),
        }
    }

    /// Renders a word; the empty word prints as `1`.
    pub fn word_string(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_owned();
        }
        w.letters()
            .iter()
            .map(|&l| self.letter_name(l))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// A copy with the `index`-th boundary word replaced. Internal: callers
    /// must pass a generator word.
    pub(crate) fn replace_boundary(&self, index: usize, boundary: Word) -> Presentation {
        debug_assert!(boundary.letters().iter().all(|l| !l.is_p()));
        let mut next = self.clone();
        next.boundaries[index] = boundary;
        next
    }

    /// The greatest group image `Gp⟨X | bl(ρ) = 1 for ρ ∈ P⟩`.
    pub fn group_image(&self) -> GroupPresentation {
        GroupPresentation {
            generators: self.x_names.clone(),
            relators: self.boundaries.clone(),
        }
    }
}

/// A group presentation by generators and relators, as produced by
/// [`Presentation::group_image`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gp< {} |", self.generators.join(" "))?;
        for (i, r) in self.relators.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            if r.is_empty() {
                write!(f, "{sep}1")?;
            } else {
                let body: Vec<String> = r
                    .letters()
                    .iter()
                    .map(|&l| match l {
                        Letter::X { index, inverted } => {
                            let name = &self.generators[index as usize];
                            if inverted {
                                format!("{name}'")
                            } else {
                                name.clone()
                            }
                        }
                        Letter::P { .. } => unreachable!("relators are generator words"),
                    })
                    .collect();
                write!(f, "{sep}{}", body.join(" "))?;
            }
        }
        write!(f, " >")
    }
}
