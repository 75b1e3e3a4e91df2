//! Decision procedures on the monoid: natural partial order, word equality,
//! idempotency, membership in closed inverse submonoids, and conjugacy.
//!
//! Everything here reduces to automaton membership: `u ≤ w` holds exactly
//! when the Schützenberger automaton of `u` accepts `w`, and `w ∈ ⟨Y⟩^ω`
//! exactly when the coset automaton of `Y` accepts `w`. Each function takes
//! a saturation step budget and returns [`Error::BudgetExhausted`] when it
//! trips — never a wrong answer from a truncated automaton.

use crate::graph::iso_unrooted;
use crate::saturation::{coset_automaton, schutzenberger, SaturationReport};
use crate::words::{Presentation, Word};
use crate::Error;

fn complete(report: SaturationReport) -> Result<SaturationReport, Error> {
    if report.budget_exhausted {
        Err(Error::BudgetExhausted)
    } else {
        Ok(report)
    }
}

/// Decides `u ≤ w` in the natural partial order.
pub fn leq(u: &Word, w: &Word, pres: &Presentation, budget: u64) -> Result<bool, Error> {
    let report = complete(schutzenberger(u, pres, budget))?;
    Ok(report.automaton.accepts(w))
}

/// Decides `u = w` in the monoid: mutual domination in the natural order.
pub fn word_eq(u: &Word, w: &Word, pres: &Presentation, budget: u64) -> Result<bool, Error> {
    Ok(leq(u, w, pres, budget)? && leq(w, u, pres, budget)?)
}

/// Decides whether `w` is an idempotent, i.e. `w = w·w`.
pub fn is_idempotent(w: &Word, pres: &Presentation, budget: u64) -> Result<bool, Error> {
    word_eq(w, &w.concat(w), pres, budget)
}

/// Decides membership of `w` in the closed inverse submonoid `⟨Y⟩^ω`
/// generated by `generators`.
pub fn submonoid_member(
    w: &Word,
    generators: &[Word],
    pres: &Presentation,
    budget: u64,
) -> Result<bool, Error> {
    let report = complete(coset_automaton(generators, pres, budget))?;
    Ok(report.automaton.accepts(w))
}

/// Decides conjugacy of the closed inverse submonoids `⟨Y₁⟩^ω` and `⟨Y₂⟩^ω`:
/// they are conjugate exactly when their coset automata are isomorphic as
/// unrooted graphs. On success returns a conjugating word `g` with
/// `g·⟨Y₁⟩^ω·g⁻¹ ⊆ ⟨Y₂⟩^ω` and `g⁻¹·⟨Y₂⟩^ω·g ⊆ ⟨Y₁⟩^ω`: a word reading from
/// the root of the second automaton to the image of the first one's root.
pub fn conjugate(
    y1: &[Word],
    y2: &[Word],
    pres: &Presentation,
    budget: u64,
) -> Result<Option<Word>, Error> {
    let a1 = complete(coset_automaton(y1, pres, budget))?.automaton;
    let a2 = complete(coset_automaton(y2, pres, budget))?.automaton;
    match iso_unrooted(&a1, &a2) {
        Some(map) => {
            let image = map[a1.roots().0];
            Ok(Some(a2.word_to(image)))
        }
        None => Ok(None),
    }
}
