//! Text and JSON formats for presentations, automata, and complexes, plus
//! DOT export.
//!
//! Presentation text:
//!
//! ```text
//! # torus
//! letters: a b
//! cell rho: a b a' b'
//! ```
//!
//! Complex text (vertex names are arbitrary tokens, mapped to dense ids in
//! declaration order; edges use positive generator labels; cell walks list
//! `from label to` triples):
//!
//! ```text
//! vertex p q
//! edge p a q
//! edge q a p
//! cell rho p: p a q q a p
//! ```
//!
//! JSON mirrors the in-memory structures, with letters spelled out by name
//! so files are self-contained. Blank lines and `#` comments are allowed in
//! both text formats.

use serde::{Deserialize, Serialize};

use crate::complex::{TwoCell, TwoComplex, WalkStep};
use crate::graph::Automaton;
use crate::words::{Letter, Presentation, Word};
use crate::Error;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Lines that carry content: 1-based numbers, comments and blanks skipped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
}

/// Parses the presentation text format.
pub fn parse_presentation(text: &str) -> Result<Presentation, Error> {
    let mut x_names: Option<Vec<String>> = None;
    let mut cells: Vec<(String, String)> = Vec::new();
    for (line_no, line) in content_lines(text) {
        if let Some(rest) = line.strip_prefix("letters:") {
            if x_names.is_some() {
                return Err(parse_err(line_no, "duplicate `letters:` line"));
            }
            x_names = Some(rest.split_whitespace().map(str::to_owned).collect());
        } else if let Some(rest) = line.strip_prefix("cell") {
            if x_names.is_none() {
                return Err(parse_err(line_no, "`letters:` must come before cells"));
            }
            let (name, body) = rest
                .split_once(':')
                .ok_or_else(|| parse_err(line_no, "expected `cell NAME: BOUNDARY`"))?;
            let name = name.trim();
            if name.split_whitespace().count() != 1 {
                return Err(parse_err(line_no, "expected exactly one cell name"));
            }
            cells.push((name.to_owned(), body.trim().to_owned()));
        } else {
            return Err(parse_err(line_no, format!("unrecognized line `{line}`")));
        }
    }
    let x_names = x_names.ok_or_else(|| parse_err(1, "missing `letters:` line"))?;
    Presentation::new(&x_names, &cells).map_err(|e| parse_err(1, e.to_string()))
}

/// Renders a presentation in the text format.
pub fn presentation_to_text(pres: &Presentation) -> String {
    let mut out = String::from("letters:");
    for i in 0..pres.x_count() {
        out.push(' ');
        out.push_str(pres.x_name(i));
    }
    out.push('\n');
    for j in 0..pres.p_count() {
        out.push_str(&format!(
            "cell {}: {}\n",
            pres.p_name(j),
            pres.word_string(pres.boundary(j))
        ));
    }
    out
}

/// Parses a `;`-separated list of generator words; empty entries are
/// skipped, so an empty or all-whitespace string is the empty list.
pub fn parse_generators(pres: &Presentation, text: &str) -> Result<Vec<Word>, Error> {
    text.split(';')
        .map(str::trim)
        .filter(|piece| !piece.is_empty())
        .map(|piece| pres.parse_word(piece))
        .collect()
}

/// Parses the complex text format against a presentation.
pub fn parse_complex(pres: &Presentation, text: &str) -> Result<TwoComplex, Error> {
    let mut names: Vec<String> = Vec::new();
    let mut one_cells: Vec<(usize, u32, usize)> = Vec::new();
    let mut two_cells: Vec<TwoCell> = Vec::new();

    let lookup = |names: &[String], token: &str, line_no: usize| -> Result<usize, Error> {
        names
            .iter()
            .position(|n| n == token)
            .ok_or_else(|| parse_err(line_no, format!("unknown vertex `{token}`")))
    };
    let x_by_name = |token: &str, line_no: usize| -> Result<u32, Error> {
        match pres.letter_by_name(token) {
            Some(Letter::X { index, .. }) => Ok(index),
            Some(Letter::P { .. }) => Err(parse_err(
                line_no,
                format!("`{token}` is a 2-cell label; edges use generators"),
            )),
            None => Err(parse_err(line_no, format!("unknown generator `{token}`"))),
        }
    };

    for (line_no, line) in content_lines(text) {
        if let Some(rest) = line.strip_prefix("vertex") {
            for token in rest.split_whitespace() {
                if names.iter().any(|n| n == token) {
                    return Err(parse_err(line_no, format!("duplicate vertex `{token}`")));
                }
                names.push(token.to_owned());
            }
        } else if let Some(rest) = line.strip_prefix("edge") {
            let tokens: Vec<&str> = rest.split_whitespace().collect();
            let [u, l, v] = tokens[..] else {
                return Err(parse_err(line_no, "expected `edge FROM LABEL TO`"));
            };
            if l.ends_with('\'') {
                return Err(parse_err(
                    line_no,
                    "edges are declared with positive labels",
                ));
            }
            one_cells.push((
                lookup(&names, u, line_no)?,
                x_by_name(l, line_no)?,
                lookup(&names, v, line_no)?,
            ));
        } else if let Some(rest) = line.strip_prefix("cell") {
            let (head, body) = rest
                .split_once(':')
                .ok_or_else(|| parse_err(line_no, "expected `cell LABEL ROOT: WALK`"))?;
            let head_tokens: Vec<&str> = head.split_whitespace().collect();
            let [label_token, root_token] = head_tokens[..] else {
                return Err(parse_err(line_no, "expected `cell LABEL ROOT: WALK`"));
            };
            let label = match pres.letter_by_name(label_token) {
                Some(Letter::P { index }) => index,
                _ => {
                    return Err(parse_err(
                        line_no,
                        format!("unknown 2-cell label `{label_token}`"),
                    ))
                }
            };
            let root = lookup(&names, root_token, line_no)?;
            let body_tokens: Vec<&str> = body.split_whitespace().collect();
            if !body_tokens.len().is_multiple_of(3) {
                return Err(parse_err(line_no, "walk must be `FROM LABEL TO` triples"));
            }
            let mut walk = Vec::with_capacity(body_tokens.len() / 3);
            for triple in body_tokens.chunks(3) {
                let letter_word = pres
                    .parse_word(triple[1])
                    .map_err(|e| parse_err(line_no, e.to_string()))?;
                let [letter] = letter_word.letters()[..] else {
                    return Err(parse_err(
                        line_no,
                        format!("bad walk letter `{}`", triple[1]),
                    ));
                };
                walk.push(WalkStep {
                    from: lookup(&names, triple[0], line_no)?,
                    letter,
                    to: lookup(&names, triple[2], line_no)?,
                });
            }
            two_cells.push(TwoCell { label, root, walk });
        } else {
            return Err(parse_err(line_no, format!("unrecognized line `{line}`")));
        }
    }

    TwoComplex::new(pres.clone(), names.len(), one_cells, two_cells)
}

/// Renders a complex in the text format, using vertex ids as names.
pub fn complex_to_text(c: &TwoComplex) -> String {
    let pres = c.presentation();
    let mut out = String::from("vertex");
    for v in 0..c.vertex_count() {
        out.push_str(&format!(" {v}"));
    }
    out.push('\n');
    for &(u, x, v) in c.one_cells() {
        out.push_str(&format!("edge {u} {} {v}\n", pres.x_name(x as usize)));
    }
    for cell in c.two_cells() {
        out.push_str(&format!(
            "cell {} {}:",
            pres.p_name(cell.label as usize),
            cell.root
        ));
        for step in &cell.walk {
            out.push_str(&format!(
                " {} {} {}",
                step.from,
                pres.letter_name(step.letter),
                step.to
            ));
        }
        out.push('\n');
    }
    out
}

/// DOT rendering of an automaton. Canonical numbering makes the output
/// byte-identical for isomorphic birooted automata. Roots are drawn with
/// double circles.
pub fn automaton_to_dot(a: &Automaton) -> String {
    let pres = a.presentation();
    let (ri, rt) = a.roots();
    let mut out = String::from("digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n");
    for v in 0..a.vertex_count() {
        if v == ri || v == rt {
            out.push_str(&format!("  {v} [peripheries=2];\n"));
        } else {
            out.push_str(&format!("  {v};\n"));
        }
    }
    for &(u, l, v) in a.edges() {
        out.push_str(&format!(
            "  {u} -> {v} [label=\"{}\"];\n",
            pres.letter_name(l)
        ));
    }
    out.push_str("}\n");
    out
}

/// DOT rendering of a complex: the 1-skeleton with 2-cell root loops, each
/// 2-cell's walk recorded as a trailing comment.
pub fn complex_to_dot(c: &TwoComplex) -> String {
    let pres = c.presentation();
    let mut out = String::from("digraph complex {\n  rankdir=LR;\n  node [shape=circle];\n");
    for v in 0..c.vertex_count() {
        out.push_str(&format!("  {v};\n"));
    }
    for &(u, x, v) in c.one_cells() {
        out.push_str(&format!(
            "  {u} -> {v} [label=\"{}\"];\n",
            pres.x_name(x as usize)
        ));
    }
    for cell in c.two_cells() {
        out.push_str(&format!(
            "  {r} -> {r} [label=\"{}\"];\n",
            pres.p_name(cell.label as usize),
            r = cell.root
        ));
    }
    for cell in c.two_cells() {
        out.push_str(&format!(
            "  // cell {} {}:",
            pres.p_name(cell.label as usize),
            cell.root
        ));
        for step in &cell.walk {
            out.push_str(&format!(
                " {} {} {}",
                step.from,
                pres.letter_name(step.letter),
                step.to
            ));
        }
        out.push('\n');
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize, Deserialize)]
struct CellDto {
    name: String,
    boundary: String,
}

#[derive(Serialize, Deserialize)]
struct EdgeDto {
    from: usize,
    label: String,
    to: usize,
}

#[derive(Serialize, Deserialize)]
struct AutomatonDto {
    letters: Vec<String>,
    cells: Vec<CellDto>,
    vertices: Vec<usize>,
    edges: Vec<EdgeDto>,
    root_init: usize,
    root_term: usize,
}

#[derive(Serialize, Deserialize)]
struct TwoCellDto {
    label: String,
    root: usize,
    walk: Vec<EdgeDto>,
}

#[derive(Serialize, Deserialize)]
struct ComplexDto {
    letters: Vec<String>,
    cells: Vec<CellDto>,
    vertices: Vec<usize>,
    edges: Vec<EdgeDto>,
    two_cells: Vec<TwoCellDto>,
}

fn presentation_dto(pres: &Presentation) -> (Vec<String>, Vec<CellDto>) {
    let letters = (0..pres.x_count())
        .map(|i| pres.x_name(i).to_owned())
        .collect();
    let cells = (0..pres.p_count())
        .map(|j| CellDto {
            name: pres.p_name(j).to_owned(),
            boundary: pres.word_string(pres.boundary(j)),
        })
        .collect();
    (letters, cells)
}

fn presentation_from_dto(letters: &[String], cells: &[CellDto]) -> Result<Presentation, Error> {
    let pairs: Vec<(&str, &str)> = cells
        .iter()
        .map(|c| (c.name.as_str(), c.boundary.as_str()))
        .collect();
    Presentation::new(letters, &pairs)
}

fn check_dense_vertices(vertices: &[usize]) -> Result<(), Error> {
    for (i, &v) in vertices.iter().enumerate() {
        if v != i {
            return Err(Error::Graph("vertices must be listed as 0..n-1".into()));
        }
    }
    Ok(())
}

fn base_letter(pres: &Presentation, name: &str) -> Result<Letter, Error> {
    pres.letter_by_name(name)
        .ok_or_else(|| Error::Graph(format!("unknown edge label `{name}`")))
}

/// Serializes an automaton as pretty-printed JSON.
pub fn automaton_to_json(a: &Automaton) -> String {
    let pres = a.presentation();
    let (letters, cells) = presentation_dto(pres);
    let dto = AutomatonDto {
        letters,
        cells,
        vertices: (0..a.vertex_count()).collect(),
        edges: a
            .edges()
            .iter()
            .map(|&(u, l, v)| EdgeDto {
                from: u,
                label: pres.letter_name(l),
                to: v,
            })
            .collect(),
        root_init: a.roots().0,
        root_term: a.roots().1,
    };
    let mut out = serde_json::to_string_pretty(&dto).expect("automaton DTOs serialize");
    out.push('\n');
    out
}

/// Loads an automaton from JSON, revalidating everything.
pub fn automaton_from_json(text: &str) -> Result<Automaton, Error> {
    let dto: AutomatonDto = serde_json::from_str(text)?;
    let pres = presentation_from_dto(&dto.letters, &dto.cells)?;
    check_dense_vertices(&dto.vertices)?;
    let mut edges = Vec::with_capacity(dto.edges.len());
    for e in &dto.edges {
        let l = base_letter(&pres, &e.label)?;
        edges.push((e.from, l, e.to));
    }
    Automaton::from_parts(
        pres,
        dto.vertices.len(),
        &edges,
        dto.root_init,
        dto.root_term,
    )
}

/// Serializes a complex as pretty-printed JSON.
pub fn complex_to_json(c: &TwoComplex) -> String {
    let pres = c.presentation();
    let (letters, cells) = presentation_dto(pres);
    let dto = ComplexDto {
        letters,
        cells,
        vertices: (0..c.vertex_count()).collect(),
        edges: c
            .one_cells()
            .iter()
            .map(|&(u, x, v)| EdgeDto {
                from: u,
                label: pres.x_name(x as usize).to_owned(),
                to: v,
            })
            .collect(),
        two_cells: c
            .two_cells()
            .iter()
            .map(|cell| TwoCellDto {
                label: pres.p_name(cell.label as usize).to_owned(),
                root: cell.root,
                walk: cell
                    .walk
                    .iter()
                    .map(|s| EdgeDto {
                        from: s.from,
                        label: pres.letter_name(s.letter),
                        to: s.to,
                    })
                    .collect(),
            })
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&dto).expect("complex DTOs serialize");
    out.push('\n');
    out
}

/// Loads a complex from JSON, revalidating everything.
pub fn complex_from_json(text: &str) -> Result<TwoComplex, Error> {
    let dto: ComplexDto = serde_json::from_str(text)?;
    let pres = presentation_from_dto(&dto.letters, &dto.cells)?;
    check_dense_vertices(&dto.vertices)?;
    let mut one_cells = Vec::with_capacity(dto.edges.len());
    for e in &dto.edges {
        match base_letter(&pres, &e.label)? {
            Letter::X { index, .. } => one_cells.push((e.from, index, e.to)),
            Letter::P { .. } => {
                return Err(Error::Complex(format!(
                    "1-cells use generator labels, found `{}`",
                    e.label
                )))
            }
        }
    }
    let mut two_cells = Vec::with_capacity(dto.two_cells.len());
    for cell in &dto.two_cells {
        let label = match pres.letter_by_name(&cell.label) {
            Some(Letter::P { index }) => index,
            _ => {
                return Err(Error::Complex(format!(
                    "unknown 2-cell label `{}`",
                    cell.label
                )))
            }
        };
        let mut walk = Vec::with_capacity(cell.walk.len());
        for s in &cell.walk {
            let letter_word = pres
                .parse_word(&s.label)
                .map_err(|e| Error::Complex(e.to_string()))?;
            let [letter] = letter_word.letters()[..] else {
                return Err(Error::Complex(format!("bad walk letter `{}`", s.label)));
            };
            walk.push(WalkStep {
                from: s.from,
                letter,
                to: s.to,
            });
        }
        two_cells.push(TwoCell {
            label,
            root: cell.root,
            walk,
        });
    }
    TwoComplex::new(pres, dto.vertices.len(), one_cells, two_cells)
}

/// Reads a complex from either format: JSON if the text starts with `{`,
/// the text format otherwise. `pres` checks that file and presentation
/// agree when both are given.
pub fn read_complex(pres: Option<&Presentation>, text: &str) -> Result<TwoComplex, Error> {
    let complex = if text.trim_start().starts_with('{') {
        complex_from_json(text)?
    } else {
        let pres = pres
            .ok_or_else(|| Error::Complex("the complex text format needs a presentation".into()))?;
        parse_complex(pres, text)?
    };
    if let Some(expected) = pres {
        if complex.presentation() != expected {
            return Err(Error::Complex(
                "complex file uses a different presentation".into(),
            ));
        }
    }
    Ok(complex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::iso_rooted;
    use crate::saturation::{coset_automaton, DEFAULT_BUDGET};

    const TORUS: &str = "# torus\nletters: a b\ncell rho: a b a' b'\n";

    fn torus() -> Presentation {
        parse_presentation(TORUS).unwrap()
    }

    fn proj() -> Presentation {
        parse_presentation("letters: a\ncell rho: a a\n").unwrap()
    }

    #[test]
    fn parse_presentation_examples() {
        let pres = torus();
        assert_eq!(pres.x_count(), 2);
        assert_eq!(pres.p_count(), 1);
        assert_eq!(pres.word_string(pres.boundary(0)), "a b a' b'");

        let free = parse_presentation("letters: a b\n").unwrap();
        assert_eq!(free.p_count(), 0);

        let empty_boundary = parse_presentation("letters: a\ncell e: 1\n").unwrap();
        assert!(empty_boundary.boundary(0).is_empty());
    }

    #[test]
    fn parse_presentation_errors_carry_line_numbers() {
        let missing = parse_presentation("cell rho: a a\nletters: a\n");
        assert!(matches!(missing, Err(Error::Parse { line: 1, .. })));

        let junk = parse_presentation("letters: a\nedges: a\n");
        assert!(matches!(junk, Err(Error::Parse { line: 2, .. })));

        let no_colon = parse_presentation("letters: a\ncell rho a a\n");
        assert!(matches!(no_colon, Err(Error::Parse { line: 2, .. })));

        let dup = parse_presentation("letters: a\nletters: b\n");
        assert!(matches!(dup, Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn presentation_text_round_trip() {
        let pres = torus();
        let text = presentation_to_text(&pres);
        assert_eq!(parse_presentation(&text).unwrap(), pres);
    }

    #[test]
    fn generators_parsing() {
        let pres = torus();
        let gens = parse_generators(&pres, "a' b' a b; a b rho a'").unwrap();
        assert_eq!(gens.len(), 2);
        assert!(parse_generators(&pres, "").unwrap().is_empty());
        assert!(parse_generators(&pres, " ; ").unwrap().is_empty());
        assert_eq!(parse_generators(&pres, "1").unwrap(), vec![Word::empty()]);
        assert!(parse_generators(&pres, "a; c").is_err());
    }

    #[test]
    fn complex_text_round_trip() {
        let pres = proj();
        let sphere = {
            let gens = [
                pres.parse_word("rho").unwrap(),
                pres.parse_word("a rho a").unwrap(),
            ];
            let report = coset_automaton(&gens, &pres, DEFAULT_BUDGET);
            TwoComplex::from_automaton(&report.automaton).unwrap()
        };
        let text = complex_to_text(&sphere);
        let back = parse_complex(&pres, &text).unwrap();
        assert_eq!(back, sphere);
    }

    #[test]
    fn complex_text_with_names() {
        let pres = proj();
        let text = "vertex p q\nedge p a q\nedge q a p\ncell rho p: p a q q a p\ncell rho q: q a p p a q\n";
        let c = parse_complex(&pres, text).unwrap();
        assert_eq!(c.vertex_count(), 2);
        assert_eq!(c.two_cells().len(), 2);

        let bad_vertex = "vertex p\nedge p a r\n";
        assert!(matches!(
            parse_complex(&pres, bad_vertex),
            Err(Error::Parse { line: 2, .. })
        ));

        let inverted_edge = "vertex p\nedge p a' p\n";
        assert!(parse_complex(&pres, inverted_edge).is_err());
    }

    #[test]
    fn automaton_json_round_trip() {
        let pres = torus();
        let gens = parse_generators(&pres, "a' b' a b; a b rho a'").unwrap();
        let a = coset_automaton(&gens, &pres, DEFAULT_BUDGET).automaton;
        let json = automaton_to_json(&a);
        let back = automaton_from_json(&json).unwrap();
        assert!(iso_rooted(&a, &back));
        // Canonical numbering makes the round trip byte-stable.
        assert_eq!(automaton_to_json(&back), json);
    }

    #[test]
    fn complex_json_round_trip() {
        let pres = proj();
        let gens = [pres.parse_word("rho").unwrap()];
        let a = coset_automaton(&gens, &pres, DEFAULT_BUDGET).automaton;
        let c = TwoComplex::from_automaton(&a).unwrap();
        let json = complex_to_json(&c);
        let back = complex_from_json(&json).unwrap();
        assert_eq!(back, c);
        assert_eq!(complex_to_json(&back), json);
    }

    #[test]
    fn json_validation() {
        // Unknown label.
        let bad = r#"{"letters":["a"],"cells":[],"vertices":[0],"edges":[{"from":0,"label":"z","to":0}],"root_init":0,"root_term":0}"#;
        assert!(automaton_from_json(bad).is_err());
        // Nondense vertices.
        let bad =
            r#"{"letters":["a"],"cells":[],"vertices":[1],"edges":[],"root_init":0,"root_term":0}"#;
        assert!(automaton_from_json(bad).is_err());
        // Malformed JSON.
        assert!(matches!(automaton_from_json("{"), Err(Error::Json(_))));
        // A complex whose walk is broken.
        let bad = r#"{"letters":["a"],"cells":[{"name":"rho","boundary":"a a"}],"vertices":[0],"edges":[{"from":0,"label":"a","to":0}],"two_cells":[{"label":"rho","root":0,"walk":[]}]}"#;
        assert!(matches!(complex_from_json(bad), Err(Error::Complex(_))));
    }

    #[test]
    fn dot_output_is_stable() {
        let pres = proj();
        let gens = [pres.parse_word("rho").unwrap()];
        let a = coset_automaton(&gens, &pres, DEFAULT_BUDGET).automaton;
        let dot = automaton_to_dot(&a);
        assert!(dot.starts_with("digraph automaton {"));
        assert!(dot.contains("0 [peripheries=2];"));
        assert!(dot.contains("0 -> 0 [label=\"rho\"];"));
        assert!(dot.contains("0 -> 1 [label=\"a\"];"));
        assert_eq!(dot, automaton_to_dot(&a.clone()));

        let c = TwoComplex::from_automaton(&a).unwrap();
        let cdot = complex_to_dot(&c);
        assert!(cdot.starts_with("digraph complex {"));
        assert!(cdot.contains("// cell rho 0: 0 a 1 1 a 0"));
    }

    #[test]
    fn read_complex_sniffs_format() {
        let pres = proj();
        let c = TwoComplex::bouquet(&pres);
        let from_json = read_complex(Some(&pres), &complex_to_json(&c)).unwrap();
        let from_text = read_complex(Some(&pres), &complex_to_text(&c)).unwrap();
        assert_eq!(from_json, c);
        assert_eq!(from_text, c);

        // Mismatched presentation is rejected.
        let other = parse_presentation("letters: a\ncell rho: a a a\n").unwrap();
        assert!(read_complex(Some(&other), &complex_to_json(&c)).is_err());
    }
}
