//! Slow reference engines, kept deliberately independent of the main
//! folding and saturation code.
//!
//! The graph representation here is a flat set of darts; folding rescans
//! the whole set for clashes instead of using union-find, and saturation
//! applies the defining relations *literally*: whenever one side of
//! `ρ² = ρ` or `ρ = ρ·bl(ρ)` reads between two vertices and the other side
//! does not, the other side is attached as an entirely fresh path, and the
//! graph is refolded. No step is shared with [`crate::saturation`], so
//! agreement between the two is meaningful evidence.

use std::collections::BTreeSet;

use crate::graph::{Automaton, LabeledGraph};
use crate::saturation::SaturationReport;
use crate::words::{Letter, Presentation, Word};
use crate::Error;

/// Dart-set graph: every edge is stored in both directions.
struct RawGraph {
    darts: BTreeSet<(usize, Letter, usize)>,
    next_vertex: usize,
    root_init: usize,
    root_term: usize,
}

impl RawGraph {
    fn from_graph(g: &LabeledGraph) -> RawGraph {
        let (root_init, root_term) = g.roots().expect("oracle needs a rooted graph");
        let mut raw = RawGraph {
            darts: BTreeSet::new(),
            next_vertex: g.vertex_count(),
            root_init,
            root_term,
        };
        for &(u, l, v) in g.edges() {
            raw.add_edge(u, l, v);
        }
        raw
    }

    fn add_edge(&mut self, u: usize, l: Letter, v: usize) {
        if l.is_p() {
            self.darts.insert((u, l, v));
            self.darts.insert((v, l, u));
        } else {
            let base = l.base();
            let (src, tgt) = if l.is_inverted() { (v, u) } else { (u, v) };
            self.darts.insert((src, base, tgt));
            self.darts.insert((tgt, base.inverse(), src));
        }
    }

    fn fresh_vertex(&mut self) -> usize {
        self.next_vertex += 1;
        self.next_vertex - 1
    }

    fn vertices(&self) -> BTreeSet<usize> {
        let mut vs = BTreeSet::new();
        vs.insert(self.root_init);
        vs.insert(self.root_term);
        for &(u, _, v) in &self.darts {
            vs.insert(u);
            vs.insert(v);
        }
        vs
    }

    /// One vertex identification: rewrite every dart, keep the smaller id.
    fn identify(&mut self, a: usize, b: usize) {
        let (keep, drop) = if a < b { (a, b) } else { (b, a) };
        let rewrite = |v: usize| if v == drop { keep } else { v };
        self.darts = self
            .darts
            .iter()
            .map(|&(u, l, v)| (rewrite(u), l, rewrite(v)))
            .collect();
        self.root_init = rewrite(self.root_init);
        self.root_term = rewrite(self.root_term);
    }

    /// Finds one determinism clash: two darts with equal source and label
    /// but distinct targets.
    fn clash(&self) -> Option<(usize, usize)> {
        let mut iter = self.darts.iter();
        let mut prev = iter.next()?;
        for cur in iter {
            if prev.0 == cur.0 && prev.1 == cur.1 {
                return Some((prev.2, cur.2));
            }
            prev = cur;
        }
        None
    }

    /// Folds to determinism by repeated scan-and-identify. Returns the
    /// number of identifications.
    fn fold(&mut self) -> u64 {
        let mut folds = 0;
        while let Some((a, b)) = self.clash() {
            self.identify(a, b);
            folds += 1;
        }
        folds
    }

    /// Deterministic trace; call only at fold fixpoint.
    fn trace(&self, start: usize, letters: &[Letter]) -> Option<usize> {
        let mut at = start;
        for &l in letters {
            let lo = (at, l, usize::MIN);
            let hi = (at, l, usize::MAX);
            at = self.darts.range(lo..=hi).next().map(|&(_, _, v)| v)?;
        }
        Some(at)
    }

    /// Attaches a completely fresh path labeled `letters` from `a` to `b`.
    fn attach_path(&mut self, a: usize, letters: &[Letter], b: usize) {
        let mut at = a;
        for (i, &l) in letters.iter().enumerate() {
            let next = if i + 1 == letters.len() {
                b
            } else {
                self.fresh_vertex()
            };
            self.add_edge(at, l, next);
            at = next;
        }
        if letters.is_empty() && a != b {
            self.identify(a, b);
        }
    }

    fn into_automaton(self, pres: &Presentation) -> Automaton {
        let vertices = self.vertices();
        let index = |v: usize| vertices.iter().position(|&u| u == v).unwrap();
        let mut edges = Vec::new();
        for &(u, l, v) in &self.darts {
            let keep = match l {
                Letter::X { inverted, .. } => !inverted,
                Letter::P { .. } => u <= v,
            };
            if keep {
                edges.push((index(u), l, index(v)));
            }
        }
        Automaton::from_parts(
            pres.clone(),
            vertices.len(),
            &edges,
            index(self.root_init),
            index(self.root_term),
        )
        .expect("folded oracle graphs are deterministic and connected")
    }
}

/// The Munn tree of a generator word `w`: the folded linear graph. Rejects
/// words that mention 2-cell letters, since those need saturation.
pub fn munn_tree(w: &Word, pres: &Presentation) -> Result<Automaton, Error> {
    if let Some(&l) = w.letters().iter().find(|l| l.is_p()) {
        return Err(Error::Word(format!(
            "Munn trees are defined for generator words; `{}` is a 2-cell letter",
            pres.letter_name(l)
        )));
    }
    Ok(crate::saturation::linear_automaton(w, pres).fold())
}

/// Reference saturation by literal relation expansions. Same contract as
/// [`crate::saturation::saturate`], including budget semantics: the step
/// count is identifications plus expansions.
pub fn generic_saturate(g: &LabeledGraph, budget: u64) -> SaturationReport {
    let pres = g.presentation().clone();
    let mut raw = RawGraph::from_graph(g);
    let mut folds: u64 = 0;
    let mut expansions: u64 = 0;
    let mut exhausted = false;

    // Both defining relation schemes, as (one side, other side) word pairs;
    // expansions are attempted in each direction.
    let relations: Vec<(Word, Word)> = (0..pres.p_count())
        .map(|j| {
            let rho = Word::from_letters(vec![Letter::p(j)]);
            (rho.concat(&rho), rho.concat(pres.boundary(j)))
        })
        .collect();

    folds += raw.fold();
    'saturate: loop {
        if folds + expansions >= budget {
            exhausted = true;
            break;
        }
        for (j, (square, bordered)) in relations.iter().enumerate() {
            let rho = Word::from_letters(vec![Letter::p(j)]);
            let sides = [&rho, square, bordered];
            // Every ordered pair of sides of ρ = ρ² = ρ·bl(ρ).
            for &present in &sides {
                for &missing in &sides {
                    if present == missing {
                        continue;
                    }
                    for a in raw.vertices() {
                        let Some(b) = raw.trace(a, present.letters()) else {
                            continue;
                        };
                        if raw.trace(a, missing.letters()) == Some(b) {
                            continue;
                        }
                        raw.attach_path(a, missing.letters(), b);
                        expansions += 1;
                        folds += raw.fold();
                        continue 'saturate;
                    }
                }
            }
        }
        break;
    }

    let automaton = raw.into_automaton(&pres);
    SaturationReport {
        automaton,
        expansions_applied: expansions,
        folds_applied: folds,
        budget_exhausted: exhausted,
    }
}

/// Membership in `⟨Y⟩^ω` by bounded enumeration: builds every product of at
/// most `len_bound` factors from `Y ∪ Y⁻¹` and tests whether `w` lies above
/// some product, using only oracle machinery. A `true` is conclusive; a
/// `false` only says no witness exists within the bound.
pub fn naive_member(
    w: &Word,
    generators: &[Word],
    pres: &Presentation,
    len_bound: usize,
    budget: u64,
) -> Result<bool, Error> {
    let mut factors: Vec<Word> = Vec::new();
    for y in generators {
        if !factors.contains(y) {
            factors.push(y.clone());
        }
        let inv = y.inverse();
        if !factors.contains(&inv) {
            factors.push(inv);
        }
    }

    let mut seen: BTreeSet<Word> = BTreeSet::new();
    let mut frontier: Vec<Word> = vec![Word::empty()];
    seen.insert(Word::empty());
    for _ in 0..len_bound {
        let mut next = Vec::new();
        for product in &frontier {
            for factor in &factors {
                let longer = product.concat(factor);
                if seen.insert(longer.clone()) {
                    next.push(longer);
                }
            }
        }
        frontier = next;
    }

    for product in &seen {
        // w ∈ ⟨Y⟩^ω iff w lies above some product of generators, i.e. the
        // product's Schützenberger automaton accepts w.
        let report = generic_saturate(&crate::saturation::linear_automaton(product, pres), budget);
        if report.budget_exhausted {
            return Err(Error::BudgetExhausted);
        }
        if report.automaton.accepts(w) {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::iso_rooted;
    use crate::saturation::{self, DEFAULT_BUDGET};

    fn free_ab() -> Presentation {
        Presentation::new(&["a", "b"], &[] as &[(&str, &str)]).unwrap()
    }

    fn proj() -> Presentation {
        Presentation::new(&["a"], &[("rho", "a a")]).unwrap()
    }

    #[test]
    fn munn_tree_examples() {
        let pres = free_ab();
        let t = munn_tree(&pres.parse_word("a a'").unwrap(), &pres).unwrap();
        assert_eq!(t.vertex_count(), 2);
        assert_eq!(t.roots(), (0, 0));

        let t = munn_tree(&pres.parse_word("a b").unwrap(), &pres).unwrap();
        assert_eq!(t.vertex_count(), 3);
        assert_eq!(t.roots(), (0, 2));

        let t = munn_tree(&pres.parse_word("a a' b b'").unwrap(), &pres).unwrap();
        assert_eq!(t.vertex_count(), 3);
        assert_eq!(t.roots(), (0, 0));
        assert!(t.accepts(&pres.parse_word("b b' a a'").unwrap()));

        let proj = proj();
        assert!(munn_tree(&proj.parse_word("rho").unwrap(), &proj).is_err());
    }

    #[test]
    fn generic_saturate_agrees_on_small_inputs() {
        let proj = proj();
        let torus = Presentation::new(&["a", "b"], &[("rho", "a b a' b'")]).unwrap();
        let cases: Vec<(Presentation, Vec<&str>)> = vec![
            (proj.clone(), vec!["rho"]),
            (proj.clone(), vec!["rho", "a rho a"]),
            (proj.clone(), vec!["a rho a"]),
            (proj.clone(), vec!["a a a a a"]),
            (torus.clone(), vec!["a' b' a b", "a b rho a'"]),
        ];
        for (pres, gens) in cases {
            let words: Vec<Word> = gens.iter().map(|t| pres.parse_word(t).unwrap()).collect();
            let g = saturation::flower(&words, &pres);
            let fast = saturation::saturate(&g, DEFAULT_BUDGET);
            let slow = generic_saturate(&g, DEFAULT_BUDGET);
            assert!(!fast.budget_exhausted && !slow.budget_exhausted);
            assert!(
                iso_rooted(&fast.automaton, &slow.automaton),
                "engines disagree on {gens:?}"
            );
        }
    }

    #[test]
    fn generic_saturate_without_cells_is_folding() {
        let pres = free_ab();
        let w = pres.parse_word("a b b' a' a").unwrap();
        let g = saturation::linear_automaton(&w, &pres);
        let slow = generic_saturate(&g, DEFAULT_BUDGET);
        assert_eq!(slow.expansions_applied, 0);
        assert!(iso_rooted(&slow.automaton, &g.fold()));
    }

    #[test]
    fn generic_saturate_moves_loops() {
        // ⟨aρa⟩ over the projective plane: the ρ-edge collapses away from
        // the root.
        let pres = proj();
        let g = saturation::flower(&[pres.parse_word("a rho a").unwrap()], &pres);
        let slow = generic_saturate(&g, DEFAULT_BUDGET);
        let a = &slow.automaton;
        assert_eq!(a.vertex_count(), 2);
        assert_eq!(a.step(0, Letter::p(0)), None);
        assert_eq!(a.step(1, Letter::p(0)), Some(1));
        assert!(saturation::is_saturated(a));
    }

    #[test]
    fn naive_member_examples() {
        let proj = proj();
        let gens = [proj.parse_word("rho").unwrap()];
        assert!(naive_member(
            &proj.parse_word("a a").unwrap(),
            &gens,
            &proj,
            3,
            DEFAULT_BUDGET
        )
        .unwrap());
        assert!(naive_member(
            &proj.parse_word("1").unwrap(),
            &gens,
            &proj,
            3,
            DEFAULT_BUDGET
        )
        .unwrap());
        assert!(!naive_member(
            &proj.parse_word("a").unwrap(),
            &gens,
            &proj,
            3,
            DEFAULT_BUDGET
        )
        .unwrap());

        let free = free_ab();
        let gens = [free.parse_word("a b").unwrap()];
        assert!(naive_member(
            &free.parse_word("a b a b").unwrap(),
            &gens,
            &free,
            2,
            DEFAULT_BUDGET
        )
        .unwrap());
        assert!(
            naive_member(
                &free.parse_word("a a' ").unwrap(),
                &gens,
                &free,
                2,
                DEFAULT_BUDGET
            )
            .unwrap(),
            "a a' lies above the product (a b)(a b)⁻¹"
        );
        assert!(!naive_member(
            &free.parse_word("b a").unwrap(),
            &gens,
            &free,
            3,
            DEFAULT_BUDGET
        )
        .unwrap());
    }
}
