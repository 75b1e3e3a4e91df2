//! Saturation: interleaved folding and relation expansions.
//!
//! Starting from a rooted graph (a linear word graph or a flower of
//! generators), the loop below enforces the defining relations of
//! `Inv⟨X ∪ P | ρ² = ρ, ρ = ρ·bl(ρ)⟩` directly on the graph:
//!
//! * **fold** — identify targets of equally labeled darts (determinism);
//! * **collapse** — a 2-cell edge that is not a loop gets its endpoints
//!   identified. This is the relation `ρ² = ρ` in graph form: `ρ` is
//!   self-inverse, so a non-loop `ρ`-edge from `u` to `v` supports the path
//!   `ρρ` from `u` back to `u`, and expanding `ρ` along it merges `u` with
//!   `v`;
//! * **attach** — a `ρ`-loop at `v` whose boundary word `bl(ρ)` does not yet
//!   read as a closed path at `v` gets that path attached: the maximal
//!   existing prefix is reused and the missing remainder is added with
//!   fresh vertices, closing back at `v`. This is the relation
//!   `ρ = ρ·bl(ρ)`.
//!
//! The order in which applicable steps are taken does not affect the result
//! (each step only identifies vertices or adds paths forced in every
//! completion, so the process is confluent); the loop fixes one
//! deterministic schedule so that run statistics are reproducible.
//!
//! The fixpoint always exists and is reached after at most `O(input size ×
//! boundary length)` steps: no rule creates new 2-cell edges, and a class
//! whose boundary has been attached keeps it closed under later merges.
//! Budgets therefore exist to keep runs on very large inputs predictable,
//! not to cut off divergence.

use crate::graph::{Automaton, Folder, LabeledGraph};
use crate::words::{Letter, Presentation, Word};

/// Default step budget for saturation runs; at most this many vertex
/// identifications plus expansions are performed.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Result of a saturation run.
#[derive(Clone, Debug)]
pub struct SaturationReport {
    /// The folded graph; saturated unless `budget_exhausted` is set.
    pub automaton: Automaton,
    /// Relation applications: collapses of non-loop 2-cell edges plus
    /// boundary attachments.
    pub expansions_applied: u64,
    /// Vertex identifications, including those triggered by collapses.
    pub folds_applied: u64,
    /// True if the budget ran out before the fixpoint was reached.
    pub budget_exhausted: bool,
}

/// The linear graph of a word: a path spelling `w` from the initial to the
/// terminal root. The empty word gives a single doubly-rooted vertex.
pub fn linear_automaton(w: &Word, pres: &Presentation) -> LabeledGraph {
    let mut g = LabeledGraph::new(pres.clone());
    let start = g.add_vertex();
    let mut cur = start;
    for &l in w.letters() {
        let next = g.add_vertex();
        g.add_edge(cur, l, next);
        cur = next;
    }
    g.set_roots(start, cur);
    g
}

/// The flower of a generating set: one petal per nonempty generator, all
/// based at a common doubly-rooted hub.
pub fn flower(generators: &[Word], pres: &Presentation) -> LabeledGraph {
    let mut g = LabeledGraph::new(pres.clone());
    let hub = g.add_vertex();
    for y in generators {
        let mut cur = hub;
        for (i, &l) in y.letters().iter().enumerate() {
            let next = if i + 1 == y.len() {
                hub
            } else {
                g.add_vertex()
            };
            g.add_edge(cur, l, next);
            cur = next;
        }
    }
    g.set_roots(hub, hub);
    g
}

/// Runs fold/collapse/attach to a fixpoint (or until `budget` combined
/// steps), then extracts the canonical automaton.
///
/// Panics if `g` has no roots.
pub fn saturate(g: &LabeledGraph, budget: u64) -> SaturationReport {
    let pres = g.presentation().clone();
    let (root_init, root_term) = g.roots().expect("saturation requires a rooted graph");
    let mut folder = Folder::from_graph(g);
    let mut expansions: u64 = 0;
    let mut exhausted = false;

    folder.process();
    'saturate: loop {
        if folder.folds + expansions >= budget {
            exhausted = true;
            break;
        }

        // Collapse: any non-loop 2-cell edge merges its endpoints.
        for v in folder.representatives() {
            for (l, t) in folder.darts_at(v) {
                if l.is_p() && t != v {
                    expansions += 1;
                    folder.merge(v, t);
                    folder.process();
                    continue 'saturate;
                }
            }
        }

        // Attach: any 2-cell loop must support its boundary as a closed
        // path at the loop vertex.
        for v in folder.representatives() {
            for (l, t) in folder.darts_at(v) {
                if !l.is_p() || t != v {
                    continue;
                }
                let index = match l {
                    Letter::P { index } => index as usize,
                    Letter::X { .. } => unreachable!(),
                };
                let boundary = pres.boundary(index).clone();
                let (reached, consumed) = folder.trace(v, boundary.letters());
                if consumed == boundary.len() && reached == v {
                    continue;
                }
                expansions += 1;
                folder.span_path(v, boundary.letters(), v);
                folder.process();
                continue 'saturate;
            }
        }

        break;
    }

    let folds = folder.folds;
    let automaton = folder.into_automaton(&pres, root_init, root_term);
    SaturationReport {
        automaton,
        expansions_applied: expansions,
        folds_applied: folds,
        budget_exhausted: exhausted,
    }
}

/// The Schützenberger automaton of `w`: saturation of the linear graph.
/// Accepts exactly the words lying above `w` in the natural partial order.
pub fn schutzenberger(w: &Word, pres: &Presentation, budget: u64) -> SaturationReport {
    saturate(&linear_automaton(w, pres), budget)
}

/// The coset automaton of the closed inverse submonoid generated by
/// `generators`: saturation of the flower. Accepts exactly the members.
pub fn coset_automaton(generators: &[Word], pres: &Presentation, budget: u64) -> SaturationReport {
    saturate(&flower(generators, pres), budget)
}

/// True if every 2-cell dart of `a` is a loop whose boundary word reads as a
/// closed path at that vertex — the fixpoint property the saturation loop
/// establishes.
pub fn is_saturated(a: &Automaton) -> bool {
    let pres = a.presentation();
    for v in 0..a.vertex_count() {
        for &(l, t) in a.darts(v) {
            if let Letter::P { index } = l {
                if t != v {
                    return false;
                }
                if a.act(v, pres.boundary(index as usize)) != Some(v) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn free_ab() -> Presentation {
        Presentation::new(&["a", "b"], &[] as &[(&str, &str)]).unwrap()
    }

    fn proj() -> Presentation {
        Presentation::new(&["a"], &[("rho", "a a")]).unwrap()
    }

    fn torus() -> Presentation {
        Presentation::new(&["a", "b"], &[("rho", "a b a' b'")]).unwrap()
    }

    fn count_base_edges(a: &Automaton, base: Letter) -> usize {
        a.edges().iter().filter(|&&(_, l, _)| l == base).count()
    }

    #[test]
    fn linear_graph_shapes() {
        let pres = torus();

        let empty = linear_automaton(&pres.parse_word("1").unwrap(), &pres);
        assert_eq!(empty.vertex_count(), 1);
        assert!(empty.edges().is_empty());
        assert_eq!(empty.roots(), Some((0, 0)));

        let w = linear_automaton(&pres.parse_word("a b'").unwrap(), &pres);
        assert_eq!(w.vertex_count(), 3);
        assert_eq!(w.edges(), &[(0, Letter::x(0), 1), (2, Letter::x(1), 1)]);
        assert_eq!(w.roots(), Some((0, 2)));

        let r = linear_automaton(&pres.parse_word("rho").unwrap(), &pres);
        assert_eq!(r.vertex_count(), 2);
        assert_eq!(r.edges(), &[(0, Letter::p(0), 1)]);
    }

    #[test]
    fn flower_shapes() {
        let pres = torus();

        let none = flower(&[], &pres);
        assert_eq!(none.vertex_count(), 1);
        assert!(none.edges().is_empty());
        assert_eq!(none.roots(), Some((0, 0)));

        let one = flower(&[pres.parse_word("a b").unwrap()], &pres);
        assert_eq!(one.vertex_count(), 2);
        assert_eq!(one.edges(), &[(0, Letter::x(0), 1), (1, Letter::x(1), 0)]);

        let two = flower(
            &[
                pres.parse_word("a' b' a b").unwrap(),
                pres.parse_word("a b rho a'").unwrap(),
            ],
            &pres,
        );
        assert_eq!(two.vertex_count(), 7);
        assert_eq!(two.edges().len(), 8);
    }

    #[test]
    fn empty_generator_contributes_nothing() {
        let pres = free_ab();
        let g = flower(&[Word::empty(), pres.parse_word("a").unwrap()], &pres);
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edges().len(), 1);
    }

    #[test]
    fn saturate_single_cell_loop() {
        // ⟨ρ⟩ over the projective plane: the loop forces a boundary cycle.
        let pres = proj();
        let g = flower(&[pres.parse_word("rho").unwrap()], &pres);
        let report = saturate(&g, DEFAULT_BUDGET);
        assert!(!report.budget_exhausted);
        let a = &report.automaton;
        assert_eq!(a.vertex_count(), 2);
        assert_eq!(count_base_edges(a, Letter::x(0)), 2);
        assert_eq!(count_base_edges(a, Letter::p(0)), 1);
        assert_eq!(report.expansions_applied, 1);
        assert_eq!(report.folds_applied, 0);
        assert!(is_saturated(a));
        // The ρ-loop sits at the root, not at the far vertex.
        assert_eq!(a.step(0, Letter::p(0)), Some(0));
        assert_eq!(a.step(1, Letter::p(0)), None);
    }

    #[test]
    fn saturate_sphere() {
        // ⟨ρ, aρa⟩ over the projective plane saturates to the complete
        // 2-vertex graph: ρ-loops at both vertices.
        let pres = proj();
        let g = flower(
            &[
                pres.parse_word("rho").unwrap(),
                pres.parse_word("a rho a").unwrap(),
            ],
            &pres,
        );
        let report = saturate(&g, DEFAULT_BUDGET);
        let a = &report.automaton;
        assert_eq!(a.vertex_count(), 2);
        assert_eq!(count_base_edges(a, Letter::x(0)), 2);
        assert_eq!(count_base_edges(a, Letter::p(0)), 2);
        assert!(is_saturated(a));
        assert_eq!(a.step(0, Letter::p(0)), Some(0));
        assert_eq!(a.step(1, Letter::p(0)), Some(1));
    }

    #[test]
    fn saturate_torus_walkthrough() {
        // ⟨a⁻¹b⁻¹ab, abρa⁻¹⟩ over the torus.
        let pres = torus();
        let g = flower(
            &[
                pres.parse_word("a' b' a b").unwrap(),
                pres.parse_word("a b rho a'").unwrap(),
            ],
            &pres,
        );
        let report = saturate(&g, DEFAULT_BUDGET);
        assert!(!report.budget_exhausted);
        let a = &report.automaton;
        assert_eq!(a.vertex_count(), 6);
        assert_eq!(count_base_edges(a, Letter::x(0)), 4);
        assert_eq!(count_base_edges(a, Letter::x(1)), 4);
        assert_eq!(count_base_edges(a, Letter::p(0)), 1);
        assert_eq!(report.expansions_applied, 2);
        assert_eq!(report.folds_applied, 4);
        assert!(is_saturated(a));
        // Both generators read as root loops.
        assert!(a.accepts(&pres.parse_word("a' b' a b").unwrap()));
        assert!(a.accepts(&pres.parse_word("a b rho a'").unwrap()));
    }

    #[test]
    fn schutzenberger_examples() {
        let free = free_ab();
        let one_letter = schutzenberger(&free.parse_word("a").unwrap(), &free, DEFAULT_BUDGET);
        assert_eq!(one_letter.automaton.vertex_count(), 2);
        assert_eq!(one_letter.automaton.roots(), (0, 1));
        assert_eq!(one_letter.expansions_applied, 0);

        // A Munn tree: no 2-cells involved, folding only.
        let idem = schutzenberger(&free.parse_word("a a'").unwrap(), &free, DEFAULT_BUDGET);
        assert_eq!(idem.automaton.vertex_count(), 2);
        assert_eq!(idem.automaton.roots(), (0, 0));
        assert!(idem.automaton.accepts(&free.parse_word("a a'").unwrap()));
        // a a' is an idempotent, so it lies below the identity.
        assert!(idem.automaton.accepts(&free.parse_word("1").unwrap()));

        let proj = proj();
        let rho = schutzenberger(&proj.parse_word("rho").unwrap(), &proj, DEFAULT_BUDGET);
        let a = &rho.automaton;
        assert_eq!(a.vertex_count(), 2);
        assert_eq!(a.roots(), (0, 0));
        assert!(a.accepts(&proj.parse_word("a a").unwrap()));
        assert!(a.accepts(&proj.parse_word("rho").unwrap()));
        assert!(!a.accepts(&proj.parse_word("a").unwrap()));
    }

    #[test]
    fn coset_examples() {
        let proj = proj();
        let all = coset_automaton(
            &[
                proj.parse_word("a").unwrap(),
                proj.parse_word("rho").unwrap(),
            ],
            &proj,
            DEFAULT_BUDGET,
        );
        assert_eq!(all.automaton.vertex_count(), 1);
        assert!(all
            .automaton
            .accepts(&proj.parse_word("a rho a a").unwrap()));

        let five = coset_automaton(
            &[proj.parse_word("a a a a a").unwrap()],
            &proj,
            DEFAULT_BUDGET,
        );
        assert_eq!(five.automaton.vertex_count(), 5);
        assert_eq!(five.expansions_applied, 0);
        assert!(five
            .automaton
            .accepts(&proj.parse_word("a a a a a").unwrap()));
        assert!(!five.automaton.accepts(&proj.parse_word("a").unwrap()));

        let trivial = coset_automaton(&[], &proj, DEFAULT_BUDGET);
        assert_eq!(trivial.automaton.vertex_count(), 1);
        assert!(trivial.automaton.accepts(&Word::empty()));
        assert!(!trivial.automaton.accepts(&proj.parse_word("a").unwrap()));
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        // The run for SA(ρ) over the torus takes three steps (collapse,
        // fold, attach); a budget of two must trip after the fold.
        let pres = torus();
        let report = schutzenberger(&pres.parse_word("rho").unwrap(), &pres, 2);
        assert!(report.budget_exhausted);
        assert_eq!(report.expansions_applied + report.folds_applied, 2);
        // The partial result is still folded and usable.
        assert_eq!(report.automaton.vertex_count(), 1);

        // With the default budget the same run completes easily.
        let full = schutzenberger(&pres.parse_word("rho").unwrap(), &pres, DEFAULT_BUDGET);
        assert!(!full.budget_exhausted);
        assert_eq!(full.automaton.vertex_count(), 4);
        assert!(is_saturated(&full.automaton));
    }

    #[test]
    fn saturation_is_deterministic() {
        let pres = torus();
        let gens = [
            pres.parse_word("a' b' a b").unwrap(),
            pres.parse_word("a b rho a'").unwrap(),
        ];
        let r1 = coset_automaton(&gens, &pres, DEFAULT_BUDGET);
        let r2 = coset_automaton(&gens, &pres, DEFAULT_BUDGET);
        assert_eq!(r1.automaton.canonical_code(), r2.automaton.canonical_code());
        assert_eq!(r1.expansions_applied, r2.expansions_applied);
        assert_eq!(r1.folds_applied, r2.folds_applied);
    }
}
