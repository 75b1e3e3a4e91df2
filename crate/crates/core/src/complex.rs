//! 2-complexes, immersions, and coverings.
//!
//! A [`TwoComplex`] is a connected graph of 1-cells together with 2-cells:
//! each 2-cell carries a label `ρ`, a root vertex, and a closed boundary
//! walk at the root spelling `bl(ρ)` along existing 1-cells. Validity
//! requires the *combined* graph — 1-cells plus one `ρ`-loop per 2-cell at
//! its root — to be deterministic, which forces 2-cells with the same label
//! to have distinct roots.
//!
//! Under that convention a label-preserving morphism of complexes is
//! automatically an immersion (locally injective), and it is a covering
//! exactly when it is locally onto as well. Both checks are implemented
//! here, along with vertex stabilizers and boundary-word rebasing.

use std::collections::VecDeque;

use crate::graph::{Automaton, LabeledGraph};
use crate::words::{Letter, Presentation, Word};
use crate::Error;

/// One step of a boundary walk: the dart `from --letter--> to`, where
/// `letter` is a signed generator.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WalkStep {
    pub from: usize,
    pub letter: Letter,
    pub to: usize,
}

/// A 2-cell: a label index into `P`, a root vertex, and the boundary walk
/// read from the root.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoCell {
    pub label: u32,
    pub root: usize,
    pub walk: Vec<WalkStep>,
}

/// A finite connected 2-complex over a presentation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoComplex {
    pres: Presentation,
    vertex_count: usize,
    one_cells: Vec<(usize, u32, usize)>,
    two_cells: Vec<TwoCell>,
    // Combined dart maps (1-cells plus 2-cell root loops), letter-sorted.
    darts: Vec<Vec<(Letter, usize)>>,
}

impl TwoComplex {
    /// Validates and builds a complex. `one_cells` are `(source, generator
    /// index, target)` records with positive orientation.
    pub fn new(
        pres: Presentation,
        vertex_count: usize,
        one_cells: Vec<(usize, u32, usize)>,
        two_cells: Vec<TwoCell>,
    ) -> Result<TwoComplex, Error> {
        if vertex_count == 0 {
            return Err(Error::Complex("a complex needs at least one vertex".into()));
        }

        let mut darts: Vec<Vec<(Letter, usize)>> = vec![Vec::new(); vertex_count];
        let insert =
            |darts: &mut Vec<Vec<(Letter, usize)>>, u: usize, l: Letter, v: usize| match darts[u]
                .binary_search_by_key(&l, |&(k, _)| k)
            {
                Ok(_) => Err(Error::Complex(format!(
                    "vertex {u} has two darts labeled `{}`",
                    pres.letter_name(l)
                ))),
                Err(pos) => {
                    darts[u].insert(pos, (l, v));
                    Ok(())
                }
            };

        for &(u, x, v) in &one_cells {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::Complex(format!(
                    "1-cell endpoint out of range: ({u}, {v})"
                )));
            }
            if (x as usize) >= pres.x_count() {
                return Err(Error::Complex("1-cell label out of range".into()));
            }
            let l = Letter::x(x as usize);
            insert(&mut darts, u, l, v)?;
            if u != v {
                insert(&mut darts, v, l.inverse(), u)?;
            } else {
                // A generator loop still has two distinct darts.
                insert(&mut darts, u, l.inverse(), u)?;
            }
        }

        for (i, cell) in two_cells.iter().enumerate() {
            if (cell.label as usize) >= pres.p_count() {
                return Err(Error::Complex(format!(
                    "2-cell {i} has a label out of range"
                )));
            }
            if cell.root >= vertex_count {
                return Err(Error::Complex(format!(
                    "2-cell {i} has a root out of range"
                )));
            }
            let boundary = pres.boundary(cell.label as usize);
            if cell.walk.len() != boundary.len() {
                return Err(Error::Complex(format!(
                    "2-cell {i}: walk length {} does not match boundary length {}",
                    cell.walk.len(),
                    boundary.len()
                )));
            }
            let mut at = cell.root;
            for (j, step) in cell.walk.iter().enumerate() {
                if step.from != at {
                    return Err(Error::Complex(format!(
                        "2-cell {i}: walk breaks at step {j}"
                    )));
                }
                if step.letter != boundary.letters()[j] {
                    return Err(Error::Complex(format!(
                        "2-cell {i}: step {j} reads `{}`, boundary expects `{}`",
                        pres.letter_name(step.letter),
                        pres.letter_name(boundary.letters()[j])
                    )));
                }
                let found = darts
                    .get(step.from)
                    .and_then(|d| d.binary_search_by_key(&step.letter, |&(k, _)| k).ok())
                    .map(|pos| darts[step.from][pos].1);
                if found != Some(step.to) {
                    return Err(Error::Complex(format!(
                        "2-cell {i}: step {j} is not a 1-cell dart"
                    )));
                }
                at = step.to;
            }
            if at != cell.root {
                return Err(Error::Complex(format!(
                    "2-cell {i}: walk does not close at its root"
                )));
            }
            // The root loop participates in the determinism requirement; a
            // clash here means two same-label cells share a root.
            insert(
                &mut darts,
                cell.root,
                Letter::p(cell.label as usize),
                cell.root,
            )
            .map_err(|_| {
                Error::Complex(format!(
                    "two 2-cells labeled `{}` share root {}",
                    pres.p_name(cell.label as usize),
                    cell.root
                ))
            })?;
        }

        // Connectivity over the combined darts.
        let mut seen = vec![false; vertex_count];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(0);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &(_, t) in &darts[v] {
                if !seen[t] {
                    seen[t] = true;
                    reached += 1;
                    queue.push_back(t);
                }
            }
        }
        if reached != vertex_count {
            return Err(Error::Complex("complex is not connected".into()));
        }

        Ok(TwoComplex {
            pres,
            vertex_count,
            one_cells,
            two_cells,
            darts,
        })
    }

    /// The bouquet: one vertex, one loop per generator, one 2-cell per
    /// boundary word. Every complex over the same presentation immerses
    /// into it.
    pub fn bouquet(pres: &Presentation) -> TwoComplex {
        let one_cells: Vec<(usize, u32, usize)> =
            (0..pres.x_count()).map(|i| (0, i as u32, 0)).collect();
        let two_cells: Vec<TwoCell> = (0..pres.p_count())
            .map(|j| TwoCell {
                label: j as u32,
                root: 0,
                walk: pres
                    .boundary(j)
                    .letters()
                    .iter()
                    .map(|&l| WalkStep {
                        from: 0,
                        letter: l,
                        to: 0,
                    })
                    .collect(),
            })
            .collect();
        TwoComplex::new(pres.clone(), 1, one_cells, two_cells)
            .expect("the bouquet of a valid presentation is a valid complex")
    }

    /// Reads a saturated automaton as a complex: its generator edges become
    /// 1-cells and every `ρ`-loop becomes a 2-cell whose walk traces the
    /// boundary word from the loop vertex. Roots are forgotten.
    ///
    /// Fails with [`Error::Unsaturated`] if some 2-cell edge is not a loop
    /// or some loop's boundary does not read as a closed path.
    pub fn from_automaton(a: &Automaton) -> Result<TwoComplex, Error> {
        let pres = a.presentation().clone();
        let mut one_cells = Vec::new();
        let mut two_cells = Vec::new();
        for &(u, l, v) in a.edges() {
            match l {
                Letter::X { index, .. } => one_cells.push((u, index, v)),
                Letter::P { index } => {
                    if u != v {
                        return Err(Error::Unsaturated(format!(
                            "2-cell edge between distinct vertices {u} and {v}"
                        )));
                    }
                    let boundary = pres.boundary(index as usize);
                    let mut walk = Vec::with_capacity(boundary.len());
                    let mut at = u;
                    for &step_letter in boundary.letters() {
                        let next = a.step(at, step_letter).ok_or_else(|| {
                            Error::Unsaturated(format!(
                                "boundary of `{}` does not read from vertex {u}",
                                pres.p_name(index as usize)
                            ))
                        })?;
                        walk.push(WalkStep {
                            from: at,
                            letter: step_letter,
                            to: next,
                        });
                        at = next;
                    }
                    if at != u {
                        return Err(Error::Unsaturated(format!(
                            "boundary of `{}` does not close at vertex {u}",
                            pres.p_name(index as usize)
                        )));
                    }
                    two_cells.push(TwoCell {
                        label: index,
                        root: u,
                        walk,
                    });
                }
            }
        }
        TwoComplex::new(pres, a.vertex_count(), one_cells, two_cells)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn one_cells(&self) -> &[(usize, u32, usize)] {
        &self.one_cells
    }

    pub fn two_cells(&self) -> &[TwoCell] {
        &self.two_cells
    }

    /// Letter-sorted combined darts (1-cells plus 2-cell root loops) at `v`.
    pub fn darts(&self, v: usize) -> &[(Letter, usize)] {
        &self.darts[v]
    }

    /// The dart step `v --l-->`, if present.
    pub fn dart(&self, v: usize, l: Letter) -> Option<usize> {
        self.darts[v]
            .binary_search_by_key(&l, |&(k, _)| k)
            .ok()
            .map(|pos| self.darts[v][pos].1)
    }

    /// The combined labeled graph of the complex (unrooted).
    pub fn graph(&self) -> LabeledGraph {
        let mut g = LabeledGraph::new(self.pres.clone());
        for _ in 0..self.vertex_count {
            g.add_vertex();
        }
        for &(u, x, v) in &self.one_cells {
            g.add_edge(u, Letter::x(x as usize), v);
        }
        for cell in &self.two_cells {
            g.add_edge(cell.root, Letter::p(cell.label as usize), cell.root);
        }
        g
    }

    /// The stabilizer automaton of `v`: the complex's graph rooted at
    /// `(v, v)`. It accepts exactly the words stabilizing `v` under the
    /// coset action, and is always saturated.
    pub fn stabilizer(&self, v: usize) -> Automaton {
        assert!(v < self.vertex_count, "vertex out of range");
        let mut g = self.graph();
        g.set_roots(v, v);
        g.fold()
    }
}

/// A label-preserving morphism of complexes, recorded as index maps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Morphism {
    /// Image of each vertex of the source.
    pub vertex_map: Vec<usize>,
    /// Image of each 1-cell of the source, as an index into the target's
    /// 1-cells.
    pub edge_map: Vec<usize>,
    /// Image of each 2-cell of the source, as an index into the target's
    /// 2-cells.
    pub cell_map: Vec<usize>,
}

/// The unique label-preserving morphism `c -> d` sending `v_c` to `v_d`, if
/// one exists. Between valid complexes such a morphism is automatically an
/// immersion.
///
/// Panics if the complexes are over different presentations.
pub fn immersion(c: &TwoComplex, d: &TwoComplex, v_c: usize, v_d: usize) -> Option<Morphism> {
    assert_eq!(
        c.presentation(),
        d.presentation(),
        "immersion requires complexes over one presentation"
    );
    assert!(v_c < c.vertex_count() && v_d < d.vertex_count());

    let mut vertex_map = vec![usize::MAX; c.vertex_count()];
    vertex_map[v_c] = v_d;
    let mut queue = VecDeque::new();
    queue.push_back(v_c);
    while let Some(u) = queue.pop_front() {
        for &(l, w) in c.darts(u) {
            let fw = d.dart(vertex_map[u], l)?;
            if vertex_map[w] == usize::MAX {
                vertex_map[w] = fw;
                queue.push_back(w);
            } else if vertex_map[w] != fw {
                return None;
            }
        }
    }

    let edge_map = c
        .one_cells()
        .iter()
        .map(|&(u, x, v)| {
            let target = (vertex_map[u], x, vertex_map[v]);
            d.one_cells()
                .iter()
                .position(|&e| e == target)
                .expect("image dart exists, so the image 1-cell exists")
        })
        .collect();
    let cell_map = c
        .two_cells()
        .iter()
        .map(|cell| {
            d.two_cells()
                .iter()
                .position(|dc| dc.label == cell.label && dc.root == vertex_map[cell.root])
                .expect("image root loop exists, so the image 2-cell exists")
        })
        .collect();
    Some(Morphism {
        vertex_map,
        edge_map,
        cell_map,
    })
}

/// Like [`immersion`] with the source basepoint fixed, trying every target
/// vertex in order. Returns the first target basepoint that works.
pub fn immersion_from(c: &TwoComplex, d: &TwoComplex, v_c: usize) -> Option<(usize, Morphism)> {
    (0..d.vertex_count()).find_map(|v_d| immersion(c, d, v_c, v_d).map(|m| (v_d, m)))
}

/// Whether the immersion `m: c -> d` is a covering: locally onto at every
/// vertex, i.e. every dart at the image of `u` pulls back to a dart at `u`.
pub fn is_covering(c: &TwoComplex, d: &TwoComplex, m: &Morphism) -> bool {
    (0..c.vertex_count()).all(|u| {
        let fu = m.vertex_map[u];
        d.darts(fu).iter().all(|&(l, _)| c.dart(u, l).is_some())
    })
}

/// Rewrites one boundary word by a cyclic rotation (and optional reversal)
/// without changing the presented monoid up to isomorphism.
///
/// The new boundary is `bl(ρ) = p·q ↦ q·p` where `p` is the length-`k`
/// prefix; with `reverse` set, the rotated word is inverted as well. The
/// returned [`Translator`] maps words over the old presentation to words
/// over the new one (`ρ ↦ p·ρ·p⁻¹`, generators unchanged).
pub fn rebase_boundary(
    pres: &Presentation,
    p_index: usize,
    k: usize,
    reverse: bool,
) -> Result<(Presentation, Translator), Error> {
    if p_index >= pres.p_count() {
        return Err(Error::Presentation("2-cell index out of range".into()));
    }
    let boundary = pres.boundary(p_index);
    if k != 0 && k >= boundary.len() {
        return Err(Error::Presentation(format!(
            "rotation {k} out of range for a boundary of length {}",
            boundary.len()
        )));
    }
    let letters = boundary.letters();
    let prefix = Word::from_letters(letters[..k].to_vec());
    let rotated: Word = letters[k..]
        .iter()
        .chain(letters[..k].iter())
        .copied()
        .collect();
    let new_boundary = if reverse { rotated.inverse() } else { rotated };
    let new_pres = pres.replace_boundary(p_index, new_boundary);
    Ok((
        new_pres,
        Translator {
            p_index: p_index as u32,
            prefix,
        },
    ))
}

/// Word rewriting that accompanies [`rebase_boundary`]: sends the rebased
/// 2-cell letter `ρ` to `p·ρ·p⁻¹` and fixes everything else. This is an
/// isomorphism of the presented monoids, so it preserves equality, order,
/// and membership.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Translator {
    p_index: u32,
    prefix: Word,
}

impl Translator {
    pub fn translate(&self, w: &Word) -> Word {
        let mut letters = Vec::with_capacity(w.len());
        for &l in w.letters() {
            match l {
                Letter::P { index } if index == self.p_index => {
                    letters.extend_from_slice(self.prefix.letters());
                    letters.push(l);
                    letters.extend_from_slice(self.prefix.inverse().letters());
                }
                _ => letters.push(l),
            }
        }
        Word::from_letters(letters)
    }

    pub fn translate_all(&self, words: &[Word]) -> Vec<Word> {
        words.iter().map(|w| self.translate(w)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::saturation::{coset_automaton, is_saturated, DEFAULT_BUDGET};

    fn proj() -> Presentation {
        Presentation::new(&["a"], &[("rho", "a a")]).unwrap()
    }

    fn torus() -> Presentation {
        Presentation::new(&["a", "b"], &[("rho", "a b a' b'")]).unwrap()
    }

    fn coset_complex(pres: &Presentation, generators: &[&str]) -> TwoComplex {
        let gens: Vec<Word> = generators
            .iter()
            .map(|t| pres.parse_word(t).unwrap())
            .collect();
        let report = coset_automaton(&gens, pres, DEFAULT_BUDGET);
        assert!(!report.budget_exhausted);
        TwoComplex::from_automaton(&report.automaton).unwrap()
    }

    #[test]
    fn bouquet_shape() {
        let pres = torus();
        let b = TwoComplex::bouquet(&pres);
        assert_eq!(b.vertex_count(), 1);
        assert_eq!(b.one_cells(), &[(0, 0, 0), (0, 1, 0)]);
        assert_eq!(b.two_cells().len(), 1);
        assert_eq!(b.two_cells()[0].walk.len(), 4);
        // Darts: a, a', b, b', ρ.
        assert_eq!(b.darts(0).len(), 5);
    }

    #[test]
    fn graph_of_bouquet() {
        let pres = proj();
        let g = TwoComplex::bouquet(&pres).graph();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edges(), &[(0, Letter::x(0), 0), (0, Letter::p(0), 0)]);
    }

    #[test]
    fn complex_of_sphere_automaton() {
        let pres = proj();
        let c = coset_complex(&pres, &["rho", "a rho a"]);
        assert_eq!(c.vertex_count(), 2);
        assert_eq!(c.one_cells().len(), 2);
        assert_eq!(c.two_cells().len(), 2);
        // Each walk traces a a around the 2-cycle.
        for cell in c.two_cells() {
            assert_eq!(cell.walk.len(), 2);
            assert_eq!(cell.walk[0].from, cell.root);
            assert_eq!(cell.walk[1].to, cell.root);
        }
    }

    #[test]
    fn from_automaton_rejects_unsaturated() {
        let pres = proj();
        // A 2-cell edge between distinct vertices.
        let edges = [(0, Letter::p(0), 1)];
        let a = Automaton::from_parts(pres.clone(), 2, &edges, 0, 0).unwrap();
        assert!(matches!(
            TwoComplex::from_automaton(&a),
            Err(Error::Unsaturated(_))
        ));

        // A ρ-loop without its boundary cycle.
        let edges = [(0, Letter::p(0), 0)];
        let a = Automaton::from_parts(pres, 1, &edges, 0, 0).unwrap();
        assert!(matches!(
            TwoComplex::from_automaton(&a),
            Err(Error::Unsaturated(_))
        ));
    }

    #[test]
    fn complex_validation_errors() {
        let pres = proj();
        let cell = |root: usize, walk: Vec<WalkStep>| TwoCell {
            label: 0,
            root,
            walk,
        };
        let step = |from: usize, letter: Letter, to: usize| WalkStep { from, letter, to };

        // Two same-label cells at one root.
        let walk = vec![step(0, Letter::x(0), 0), step(0, Letter::x(0), 0)];
        let err = TwoComplex::new(
            pres.clone(),
            1,
            vec![(0, 0, 0)],
            vec![cell(0, walk.clone()), cell(0, walk.clone())],
        );
        assert!(matches!(err, Err(Error::Complex(_))));

        // Walk of the wrong length cannot spell the boundary.
        let err = TwoComplex::new(pres.clone(), 1, vec![(0, 0, 0)], vec![cell(0, vec![])]);
        assert!(matches!(err, Err(Error::Complex(_))));

        // Walk along darts the 1-skeleton does not have.
        let err = TwoComplex::new(pres.clone(), 1, vec![], vec![cell(0, walk.clone())]);
        assert!(matches!(err, Err(Error::Complex(_))));

        // Nondeterministic 1-skeleton: two a-darts at vertex 0.
        let err = TwoComplex::new(pres.clone(), 2, vec![(0, 0, 0), (0, 0, 1)], vec![]);
        assert!(matches!(err, Err(Error::Complex(_))));

        // Disconnected.
        let err = TwoComplex::new(pres.clone(), 2, vec![(0, 0, 0)], vec![]);
        assert!(matches!(err, Err(Error::Complex(_))));

        // Valid bouquet for contrast.
        assert!(TwoComplex::new(pres, 1, vec![(0, 0, 0)], vec![cell(0, walk)]).is_ok());
    }

    #[test]
    fn stabilizers_are_saturated() {
        let pres = proj();
        let c = coset_complex(&pres, &["rho"]);
        for v in 0..c.vertex_count() {
            let stab = c.stabilizer(v);
            assert!(is_saturated(&stab));
            assert_eq!(stab.roots().0, stab.roots().1);
        }
        // The root stabilizer contains ρ; the far vertex's does not.
        let rho = pres.parse_word("rho").unwrap();
        let aa = pres.parse_word("a a").unwrap();
        assert!(c.stabilizer(0).accepts(&rho));
        assert!(c.stabilizer(0).accepts(&aa));
        assert!(!c.stabilizer(1).accepts(&rho));
        assert!(c.stabilizer(1).accepts(&aa));
    }

    #[test]
    fn immersions_into_the_bouquet() {
        let pres = proj();
        let bouquet = TwoComplex::bouquet(&pres);

        let sphere = coset_complex(&pres, &["rho", "a rho a"]);
        let m = immersion(&sphere, &bouquet, 0, 0).expect("labeling is an immersion");
        assert_eq!(m.vertex_map, vec![0, 0]);
        assert_eq!(m.edge_map, vec![0, 0]);
        assert_eq!(m.cell_map, vec![0, 0]);
        assert!(is_covering(&sphere, &bouquet, &m));

        let half = coset_complex(&pres, &["rho"]);
        let m = immersion(&half, &bouquet, 0, 0).expect("labeling is an immersion");
        // Vertex 1 has no ρ-dart, so the map is not locally onto there.
        assert!(!is_covering(&half, &bouquet, &m));
    }

    #[test]
    fn immersion_respects_determinism() {
        let pres = proj();
        let bouquet = TwoComplex::bouquet(&pres);
        let sphere = coset_complex(&pres, &["rho", "a rho a"]);
        // No morphism maps the bouquet into the sphere: the a-loop cannot
        // map to a non-loop edge.
        assert!(immersion(&bouquet, &sphere, 0, 0).is_none());
        assert!(immersion_from(&bouquet, &sphere, 0).is_none());

        // Identity immersion always exists and is a covering.
        let id = immersion(&sphere, &sphere, 0, 0).unwrap();
        assert_eq!(id.vertex_map, vec![0, 1]);
        assert!(is_covering(&sphere, &sphere, &id));
    }

    #[test]
    fn immersion_is_unique_given_basepoints() {
        let pres = proj();
        let bouquet = TwoComplex::bouquet(&pres);
        let half = coset_complex(&pres, &["rho"]);
        let m1 = immersion(&half, &bouquet, 0, 0).unwrap();
        let m2 = immersion(&half, &bouquet, 0, 0).unwrap();
        assert_eq!(m1, m2);
        let (v_d, _) = immersion_from(&half, &bouquet, 0).unwrap();
        assert_eq!(v_d, 0);
    }

    #[test]
    fn rebase_rotations() {
        let pres = torus();
        let (p1, t1) = rebase_boundary(&pres, 0, 1, false).unwrap();
        assert_eq!(p1.word_string(p1.boundary(0)), "b a' b' a");
        let w = pres.parse_word("a b rho a'").unwrap();
        assert_eq!(p1.word_string(&t1.translate(&w)), "a b a rho a' a'");

        // k = 0 is the identity rewrite.
        let (p0, t0) = rebase_boundary(&pres, 0, 0, false).unwrap();
        assert_eq!(p0, pres);
        assert_eq!(t0.translate(&w), w);

        // Reversal inverts the rotated word.
        let (pr, tr) = rebase_boundary(&pres, 0, 0, true).unwrap();
        assert_eq!(pr.word_string(pr.boundary(0)), "b a b' a'");
        assert_eq!(tr.translate(&w), w);

        // Out-of-range rotation.
        assert!(rebase_boundary(&pres, 0, 4, false).is_err());
        assert!(rebase_boundary(&pres, 1, 0, false).is_err());
    }

    #[test]
    fn rebase_preserves_membership() {
        let pres = torus();
        let gens = [
            pres.parse_word("a' b' a b").unwrap(),
            pres.parse_word("a b rho a'").unwrap(),
        ];
        let member = pres.parse_word("a b rho a'").unwrap();
        let outsider = pres.parse_word("a").unwrap();

        for k in [1usize, 2, 3] {
            let (new_pres, t) = rebase_boundary(&pres, 0, k, false).unwrap();
            let new_gens = t.translate_all(&gens);
            let m = crate::order::submonoid_member(
                &t.translate(&member),
                &new_gens,
                &new_pres,
                DEFAULT_BUDGET,
            )
            .unwrap();
            assert!(m, "membership must transfer under rotation {k}");
            let o = crate::order::submonoid_member(
                &t.translate(&outsider),
                &new_gens,
                &new_pres,
                DEFAULT_BUDGET,
            )
            .unwrap();
            assert!(!o, "non-membership must transfer under rotation {k}");
        }
    }
}
