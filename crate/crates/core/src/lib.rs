//! Computation in finitely presented inverse monoids whose presentations
//! come from 2-dimensional CW-complexes.
//!
//! A presentation consists of generators `X` (1-cells), self-inverse labels
//! `P` (2-cells), and a boundary word `bl(ρ)` over `X ∪ X⁻¹` for each `ρ ∈ P`.
//! The monoid is `Inv⟨X ∪ P | ρ² = ρ, ρ = ρ·bl(ρ)⟩`. Word problems over such
//! a monoid reduce to membership in finite birooted automata, which this
//! crate builds by interleaving Stallings folding with relation expansions.
//!
//! The main entry points:
//!
//! * [`saturation::schutzenberger`] — the automaton deciding `u ≤ w`,
//! * [`saturation::coset_automaton`] — the automaton of a closed inverse
//!   submonoid, deciding membership,
//! * [`order`] — word equality, the natural partial order, conjugacy,
//! * [`complex`] — coset 2-complexes, immersions, and the covering test,
//! * [`oracle`] — slow reference engines used for cross-checking.
//!
//! # Example
//!
//! Over the projective-plane presentation (one generator `a`, one 2-cell
//! `ρ` with boundary `a·a`), the relation `ρ = ρ·a²` holds, and the coset
//! automaton of `⟨ρ⟩^ω` has two vertices:
//!
//! ```
//! use im2c_core::order::{submonoid_member, word_eq};
//! use im2c_core::saturation::coset_automaton;
//! use im2c_core::{Presentation, DEFAULT_BUDGET};
//!
//! let pres = Presentation::new(&["a"], &[("rho", "a a")])?;
//! let rho = pres.parse_word("rho")?;
//! let a2 = pres.parse_word("a a")?;
//! assert!(word_eq(&rho, &rho.concat(&a2), &pres, DEFAULT_BUDGET)?);
//!
//! let report = coset_automaton(&[rho.clone()], &pres, DEFAULT_BUDGET);
//! assert_eq!(report.automaton.vertex_count(), 2);
//! assert!(submonoid_member(&a2, &[rho], &pres, DEFAULT_BUDGET)?);
//! # Ok::<(), im2c_core::Error>(())
//! ```

pub mod complex;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod order;
pub mod saturation;
pub mod words;

mod error;

pub use complex::{Morphism, Translator, TwoCell, TwoComplex, WalkStep};
pub use error::Error;
pub use graph::{iso_rooted, iso_unrooted, Automaton, CanonicalCode, LabeledGraph};
pub use saturation::{SaturationReport, DEFAULT_BUDGET};
pub use words::{GroupPresentation, Letter, Presentation, Word};
