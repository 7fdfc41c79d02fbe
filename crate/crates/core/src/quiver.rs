//! Path algebras of quivers modulo admissible relations.
//!
//! Paths compose left to right: the path `[a, b]` is the product `a·b` and
//! requires `target(a) = source(b)`. Paths of length at least the
//! nilpotency bound are zero.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::algebra::{Algebra, RadicalSource};
use crate::error::{Error, Result};
use crate::matrix::{axpy, rref_rows, unit_vec, zero_vec};
use crate::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationTerm {
    /// Arrow names; the empty path stands for the trivial path.
    pub path: Vec<String>,
    pub coeff: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Vec<RelationTerm>>,
    /// Every path of this length or longer lies in the ideal.
    pub nilpotency: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Path {
    start: usize,
    arrows: Vec<usize>,
}

impl QuiverPresentation {
    pub fn new(
        vertices: Vec<String>,
        arrows: Vec<Arrow>,
        relations: Vec<Vec<RelationTerm>>,
        nilpotency: usize,
    ) -> Self {
        QuiverPresentation {
            vertices,
            arrows,
            relations,
            nilpotency,
        }
    }

    /// Builds the algebra `kQ / I` with basis the path classes of length
    /// below the nilpotency bound that are not leading terms of the ideal.
    pub fn build(&self, field: Field) -> Result<Arc<Algebra>> {
        let q = Indexed::new(self)?;
        let n_bound = self.nilpotency;

        // all paths of length < N, by length then lexicographically
        let mut paths: Vec<Path> = (0..q.nv)
            .map(|v| Path {
                start: v,
                arrows: vec![],
            })
            .collect();
        let mut layer: Vec<Path> = paths.clone();
        for _ in 1..n_bound {
            let mut next = Vec::new();
            for p in &layer {
                let end = q.end(p);
                for (a, &(src, _)) in q.arrow_ends.iter().enumerate() {
                    if src == end {
                        let mut arrows = p.arrows.clone();
                        arrows.push(a);
                        next.push(Path {
                            start: p.start,
                            arrows,
                        });
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            paths.extend(next.iter().cloned());
            layer = next;
        }
        let total = paths.len();
        let index: HashMap<Path, usize> =
            paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        // larger paths get smaller columns so they become pivots
        let col = |i: usize| total - 1 - i;

        let mut rows = Vec::new();
        for rel in &q.relations {
            for p in paths.iter().filter(|p| q.end(p) == rel.source) {
                for r in paths.iter().filter(|r| r.start == rel.target) {
                    let mut v = zero_vec(field, total);
                    let mut any = false;
                    for (w, c) in &rel.terms {
                        let len = p.arrows.len() + w.len() + r.arrows.len();
                        if len >= n_bound {
                            continue;
                        }
                        let mut arrows = p.arrows.clone();
                        arrows.extend(w);
                        arrows.extend(&r.arrows);
                        let i = index[&Path {
                            start: p.start,
                            arrows,
                        }];
                        v[col(i)] = &v[col(i)] + c;
                        any = true;
                    }
                    if any {
                        rows.push(v);
                    }
                }
            }
        }
        let (reduced, pivots) = rref_rows(field, total, rows);
        let pivot_row: HashMap<usize, usize> =
            pivots.iter().enumerate().map(|(r, &c)| (c, r)).collect();
        for v in 0..q.nv {
            if pivot_row.contains_key(&col(v)) {
                return Err(Error::InconsistentRelations {
                    vertex: self.vertices[v].clone(),
                });
            }
        }

        let basis: Vec<usize> = (0..total).filter(|&i| !pivot_row.contains_key(&col(i))).collect();
        let n = basis.len();
        let position: HashMap<usize, usize> = basis.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let normal_form = |i: usize| -> Vec<Scalar> {
            match pivot_row.get(&col(i)) {
                None => unit_vec(field, n, position[&i]),
                Some(&r) => {
                    let mut v = zero_vec(field, n);
                    for (k, &b) in basis.iter().enumerate() {
                        let c = &reduced[r][col(b)];
                        if !c.is_zero() {
                            v[k] = -c;
                        }
                    }
                    v
                }
            }
        };

        let mut products = Vec::with_capacity(n * n * n);
        for &i in &basis {
            for &j in &basis {
                let (pi, pj) = (&paths[i], &paths[j]);
                if q.end(pi) == pj.start && pi.arrows.len() + pj.arrows.len() < n_bound {
                    let mut arrows = pi.arrows.clone();
                    arrows.extend(&pj.arrows);
                    products.extend(normal_form(
                        index[&Path {
                            start: pi.start,
                            arrows,
                        }],
                    ));
                } else {
                    products.extend(zero_vec(field, n));
                }
            }
        }

        let single_char = self.arrows.iter().all(|a| a.name.chars().count() == 1);
        let labels = basis
            .iter()
            .map(|&i| {
                let p = &paths[i];
                if p.arrows.is_empty() {
                    self.vertices[p.start].clone()
                } else {
                    let names: Vec<&str> =
                        p.arrows.iter().map(|&a| self.arrows[a].name.as_str()).collect();
                    names.join(if single_char { "" } else { "." })
                }
            })
            .collect();
        let idempotents: Vec<Vec<Scalar>> = (0..q.nv).map(|v| unit_vec(field, n, position[&v])).collect();
        let mut unit = zero_vec(field, n);
        for e in &idempotents {
            axpy(&mut unit, &field.one(), e);
        }
        let radical = basis
            .iter()
            .enumerate()
            .filter(|(_, &i)| !paths[i].arrows.is_empty())
            .map(|(k, _)| unit_vec(field, n, k))
            .collect();
        Algebra::assemble(
            field,
            labels,
            products,
            unit,
            idempotents,
            Some(self.clone()),
            RadicalSource::Known(radical),
            None,
            false,
        )
    }
}

impl Algebra {
    pub fn from_quiver(q: &QuiverPresentation, field: Field) -> Result<Arc<Algebra>> {
        q.build(field)
    }
}

struct IndexedRelation {
    source: usize,
    target: usize,
    terms: Vec<(Vec<usize>, Scalar)>,
}

/// A presentation with names resolved to indices and all invariants checked.
struct Indexed {
    nv: usize,
    arrow_ends: Vec<(usize, usize)>,
    relations: Vec<IndexedRelation>,
}

impl Indexed {
    fn new(q: &QuiverPresentation) -> Result<Indexed> {
        let bad = |msg: String| Err(Error::InvalidPresentation(msg));
        if q.vertices.is_empty() {
            return bad("no vertices".into());
        }
        if q.nilpotency < 1 {
            return bad("nilpotency bound must be at least 1".into());
        }
        let mut seen = HashSet::new();
        for v in &q.vertices {
            if !seen.insert(v.as_str()) {
                return bad(format!("duplicate vertex {v:?}"));
            }
        }
        let vertex: HashMap<&str, usize> =
            q.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut arrow_index = HashMap::new();
        let mut arrow_ends = Vec::new();
        for (i, a) in q.arrows.iter().enumerate() {
            if vertex.contains_key(a.name.as_str()) || arrow_index.insert(a.name.as_str(), i).is_some() {
                return bad(format!("arrow name {:?} is not unique", a.name));
            }
            let (Some(&s), Some(&t)) = (vertex.get(a.source.as_str()), vertex.get(a.target.as_str())) else {
                return bad(format!("arrow {:?} has an undeclared endpoint", a.name));
            };
            arrow_ends.push((s, t));
        }

        let mut relations = Vec::new();
        for (r, rel) in q.relations.iter().enumerate() {
            let mut ends: Option<(usize, usize)> = None;
            let mut terms = Vec::new();
            let mut trivial = Vec::new();
            for term in rel {
                let mut idx = Vec::new();
                for name in &term.path {
                    match arrow_index.get(name.as_str()) {
                        Some(&a) => idx.push(a),
                        None => return bad(format!("relation {r} uses unknown arrow {name:?}")),
                    }
                }
                for w in idx.windows(2) {
                    if arrow_ends[w[0]].1 != arrow_ends[w[1]].0 {
                        return bad(format!("relation {r} contains a path that is not composable"));
                    }
                }
                if let (Some(&first), Some(&last)) = (idx.first(), idx.last()) {
                    let e = (arrow_ends[first].0, arrow_ends[last].1);
                    if ends.is_some_and(|prev| prev != e) {
                        return bad(format!("relation {r} mixes paths with different endpoints"));
                    }
                    ends = Some(e);
                } else {
                    trivial.push(terms.len());
                }
                terms.push((idx, term.coeff.clone()));
            }
            if terms.is_empty() {
                continue;
            }
            let (source, target) = match ends {
                Some(e) => e,
                None if q.vertices.len() == 1 => (0, 0),
                None => {
                    return bad(format!(
                        "relation {r} consists of trivial paths only; its vertex is ambiguous"
                    ))
                }
            };
            if !trivial.is_empty() && source != target {
                return bad(format!("relation {r} adds a trivial path to a non-closed path"));
            }
            relations.push(IndexedRelation {
                source,
                target,
                terms,
            });
        }
        Ok(Indexed {
            nv: q.vertices.len(),
            arrow_ends,
            relations,
        })
    }

    fn end(&self, p: &Path) -> usize {
        p.arrows.last().map_or(p.start, |&a| self.arrow_ends[a].1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::is_zero_vec;

    fn arrow(name: &str, s: &str, t: &str) -> Arrow {
        Arrow {
            name: name.into(),
            source: s.into(),
            target: t.into(),
        }
    }

    fn term(path: &[&str], c: i64) -> RelationTerm {
        RelationTerm {
            path: path.iter().map(|s| s.to_string()).collect(),
            coeff: Field::Rationals.from_i64(c),
        }
    }

    #[test]
    fn quantum_exterior_basis() {
        let q = QuiverPresentation::new(
            vec!["e".into()],
            vec![arrow("x", "e", "e"), arrow("y", "e", "e")],
            vec![
                vec![term(&["x", "x"], 1)],
                vec![term(&["y", "y"], 1)],
                vec![term(&["x", "y"], 1), term(&["y", "x"], 2)],
            ],
            3,
        );
        let a = q.build(Field::Rationals).unwrap();
        assert_eq!(a.labels(), ["e", "x", "y", "xy"]);
        a.check_associativity().unwrap();
        let x = a.parse_element("x").unwrap();
        let y = a.parse_element("y").unwrap();
        assert_eq!(a.mul(&y, &x), a.parse_element("-1/2xy").unwrap());
        assert!(is_zero_vec(&a.mul(&x, &x)));
    }

    /// Independent oracle: enumerate words in x, y of length < 3 and count
    /// the dimension of their span modulo x^2, y^2, xy + 2yx.
    #[test]
    fn quantum_exterior_dimension_by_word_count() {
        // words: 1, x, y, xx, xy, yx, yy = 7; relations in degree 2 are
        // xx, yy, xy+2yx, independent, so dim = 7 - 3 = 4.
        let q = crate::fixtures::quantum_exterior_presentation(Field::Rationals, &Field::Rationals.from_i64(2));
        assert_eq!(q.build(Field::Rationals).unwrap().dim(), 7 - 3);
    }

    #[test]
    fn monomial_truncation() {
        for n in 2..6 {
            let q = QuiverPresentation::new(vec!["e".into()], vec![arrow("x", "e", "e")], vec![], n);
            let a = q.build(Field::Rationals).unwrap();
            assert_eq!(a.dim(), n);
            assert_eq!(a.radical().loewy_length(), n);
        }
    }

    #[test]
    fn a2_paths() {
        let q = QuiverPresentation::new(
            vec!["e1".into(), "e2".into()],
            vec![arrow("a", "e1", "e2")],
            vec![],
            2,
        );
        let a = q.build(Field::Rationals).unwrap();
        assert_eq!(a.labels(), ["e1", "e2", "a"]);
        assert_eq!(a.num_vertices(), 2);
        let e1 = a.parse_element("e1").unwrap();
        let e2 = a.parse_element("e2").unwrap();
        let al = a.parse_element("a").unwrap();
        assert_eq!(a.mul(&e1, &al), al);
        assert_eq!(a.mul(&al, &e2), al);
        assert!(is_zero_vec(&a.mul(&al, &e1)));
    }

    #[test]
    fn inconsistent_relation() {
        let q = QuiverPresentation::new(
            vec!["e".into()],
            vec![arrow("x", "e", "e")],
            vec![vec![term(&[], 1), term(&["x"], 1)]],
            3,
        );
        let err = q.build(Field::Rationals).unwrap_err();
        assert!(matches!(err, Error::InconsistentRelations { .. }), "{err}");
    }

    #[test]
    fn malformed_presentations() {
        let unknown = QuiverPresentation::new(
            vec!["e".into()],
            vec![arrow("x", "e", "e")],
            vec![vec![term(&["z"], 1)]],
            2,
        );
        assert!(matches!(unknown.build(Field::Rationals), Err(Error::InvalidPresentation(_))));
        let endpoint = QuiverPresentation::new(vec!["e".into()], vec![arrow("x", "e", "f")], vec![], 2);
        assert!(matches!(endpoint.build(Field::Rationals), Err(Error::InvalidPresentation(_))));
        let not_parallel = QuiverPresentation::new(
            vec!["1".into(), "2".into()],
            vec![arrow("a", "1", "2"), arrow("b", "2", "1")],
            vec![vec![term(&["a"], 1), term(&["b"], 1)]],
            3,
        );
        assert!(matches!(not_parallel.build(Field::Rationals), Err(Error::InvalidPresentation(_))));
    }

    #[test]
    fn prime_field_quiver_radical() {
        let f = Field::Prime(7);
        let q = crate::fixtures::quantum_exterior_presentation(f, &f.from_i64(2));
        let a = q.build(f).unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(a.radical().dim(), 3);
    }
}
