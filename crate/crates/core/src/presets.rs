//! Built-in algebras, bracket tables, quadrics and parameter fixtures.
//!
//! Algebra names: `sl2_A`, `sl2_U`, `sl11_U`, `sl11_H`, `sl11_Hhat`,
//! `sl11_Uhat`, `slc_U`, `slc_H`, `sl21_Hhat`. Table names: `sl2`, `sl11`,
//! `slc`, `sl21`. Quadric names: `sl2_det`, `sl11_quadric`.
//!
//! Coefficients live in ℚ, so every preset is meant for characteristic
//! zero; the algebras are also defined in odd characteristic, which the
//! exact arithmetic here does not model.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::{sl11_quadric, sl2_pencil, Quadric};
use crate::linalg::coords_in_span;
use crate::liealg::{BracketKind, BracketTable, Functional, SubalgebraSpec};
use crate::ncalg::{q, qf, Alphabet, GroupElem, GroupKind, NcPoly, Q, Word};
use crate::rewrite::Presentation;

pub const ALGEBRAS: [&str; 9] =
    ["sl2_A", "sl2_U", "sl11_U", "sl11_H", "sl11_Hhat", "sl11_Uhat", "slc_U", "slc_H", "sl21_Hhat"];
pub const TABLES: [&str; 4] = ["sl2", "sl11", "slc", "sl21"];
pub const QUADRICS: [&str; 2] = ["sl2_det", "sl11_quadric"];

#[derive(Clone, Debug)]
pub enum Preset {
    Algebra(Presentation),
    Table(BracketTable),
    Quadric(Quadric),
}

pub fn preset(name: &str) -> Result<Preset> {
    if ALGEBRAS.contains(&name) {
        return algebra(name).map(Preset::Algebra);
    }
    if TABLES.contains(&name) {
        return table(name).map(Preset::Table);
    }
    match name {
        "sl2_det" => Ok(Preset::Quadric(sl2_pencil(&Q::zero()))),
        "sl11_quadric" => Ok(Preset::Quadric(sl11_quadric())),
        _ => Err(Error::UnknownPreset(name.into())),
    }
}

/// Polynomial from `(coefficient, "space separated word")` pairs.
pub fn poly(alpha: &Alphabet, terms: &[(i64, &str)]) -> NcPoly {
    let mut p = NcPoly::zero();
    for (c, w) in terms {
        let letters = w
            .split_whitespace()
            .map(|n| alpha.index_of(n).unwrap_or_else(|| panic!("no generator {n}")))
            .collect();
        p.add_term(Word(letters), q(*c));
    }
    p
}

fn z2(bits: &[u8]) -> Vec<GroupElem> {
    bits.iter().map(|&b| GroupElem::z2(b)).collect()
}

fn color_labels() -> Vec<GroupElem> {
    vec![GroupElem(1, 0), GroupElem(0, 1), GroupElem(1, 1)]
}

pub fn algebra(name: &str) -> Result<Presentation> {
    let build = |names: &[&str], grading: Option<(GroupKind, Vec<GroupElem>)>, rels: &[&[(i64, &str)]], central: &[&str]| {
        let mut alpha = Alphabet::new(names);
        if let Some((kind, labels)) = grading {
            alpha = alpha.with_grading(kind, &labels);
        }
        let relations = rels.iter().map(|r| poly(&alpha, r)).collect();
        let central = central.iter().map(|c| alpha.index_of(c).expect("declared")).collect();
        Presentation::new(name, alpha, relations, central)
    };
    let sl11_grading = |with_t: bool| {
        let bits: &[u8] = if with_t { &[1, 1, 0, 0] } else { &[1, 1, 0] };
        Some((GroupKind::Z2, z2(bits)))
    };
    let color_grading = |with_a4: bool| {
        let mut l = color_labels();
        if with_a4 {
            l.push(GroupElem::IDENTITY);
        }
        Some((GroupKind::Z2xZ2, l))
    };
    match name {
        "sl2_A" => build(
            &["e", "f", "h", "t"],
            None,
            &[
                &[(1, "e f"), (-1, "f e"), (-1, "h t")],
                &[(1, "h e"), (-1, "e h"), (-2, "e t")],
                &[(1, "h f"), (-1, "f h"), (2, "f t")],
            ],
            &["t"],
        ),
        "sl2_U" => build(
            &["e", "f", "h"],
            None,
            &[
                &[(1, "e f"), (-1, "f e"), (-1, "h")],
                &[(1, "h e"), (-1, "e h"), (-2, "e")],
                &[(1, "h f"), (-1, "f h"), (2, "f")],
            ],
            &[],
        ),
        "sl11_U" => build(
            &["e", "f", "h"],
            sl11_grading(false),
            &[
                &[(1, "e f"), (1, "f e"), (-1, "h")],
                &[(1, "h e"), (-1, "e h")],
                &[(1, "h f"), (-1, "f h")],
                &[(1, "e e")],
                &[(1, "f f")],
            ],
            &[],
        ),
        "sl11_H" => build(
            &["e", "f", "h", "t"],
            sl11_grading(true),
            &[
                &[(1, "e f"), (1, "f e"), (-1, "h t")],
                &[(1, "h e"), (-1, "e h")],
                &[(1, "h f"), (-1, "f h")],
                &[(1, "e e")],
                &[(1, "f f")],
            ],
            &["t"],
        ),
        "sl11_Hhat" => build(
            &["e", "f", "h", "t"],
            sl11_grading(true),
            &[&[(1, "e f"), (1, "f e"), (-1, "h t")], &[(1, "h e"), (-1, "e h")], &[(1, "h f"), (-1, "f h")]],
            &["t"],
        ),
        "sl11_Uhat" => build(
            &["e", "f", "h"],
            sl11_grading(false),
            &[&[(1, "e f"), (1, "f e"), (-1, "h")], &[(1, "h e"), (-1, "e h")], &[(1, "h f"), (-1, "f h")]],
            &[],
        ),
        "slc_U" => build(
            &["a1", "a2", "a3"],
            color_grading(false),
            &[
                &[(1, "a1 a2"), (1, "a2 a1"), (-1, "a3")],
                &[(1, "a2 a3"), (1, "a3 a2"), (-1, "a1")],
                &[(1, "a3 a1"), (1, "a1 a3"), (-1, "a2")],
            ],
            &[],
        ),
        "slc_H" => build(
            &["a1", "a2", "a3", "a4"],
            color_grading(true),
            &[
                &[(1, "a1 a2"), (1, "a2 a1"), (-1, "a3 a4")],
                &[(1, "a2 a3"), (1, "a3 a2"), (-1, "a1 a4")],
                &[(1, "a3 a1"), (1, "a1 a3"), (-1, "a2 a4")],
            ],
            &["a4"],
        ),
        "sl21_Hhat" => sl21_hhat(),
        _ => Err(Error::UnknownPreset(name.into())),
    }
}

/// The presentations that realize a table's enveloping algebra (or a homogenization of it).
pub fn enveloping_of(table: &str) -> &'static [&'static str] {
    match table {
        "sl2" => &["sl2_A", "sl2_U"],
        "sl11" => &["sl11_U", "sl11_H", "sl11_Hhat", "sl11_Uhat"],
        "slc" => &["slc_U", "slc_H"],
        "sl21" => &["sl21_Hhat"],
        _ => &[],
    }
}

/// The inhomogeneous enveloping algebra in which admissibility is decided.
pub fn enveloping_for_admissibility(table: &str) -> Option<&'static str> {
    match table {
        "sl2" => Some("sl2_U"),
        "sl11" => Some("sl11_U"),
        "slc" => Some("slc_U"),
        _ => None,
    }
}

pub fn table(name: &str) -> Result<BracketTable> {
    let t = match name {
        "sl2" => {
            let mut t = BracketTable::new("sl2", BracketKind::Lie, &["e", "f", "h"], vec![vec![1; 3]; 3], None);
            t.set_named("e", "f", &[(1, "h")]);
            t.set_named("h", "e", &[(2, "e")]);
            t.set_named("h", "f", &[(-2, "f")]);
            t
        }
        "sl11" => {
            let labels = z2(&[1, 1, 0]);
            let mut t = BracketTable::new(
                "sl11",
                BracketKind::Super,
                &["e", "f", "h"],
                BracketTable::super_signs(&labels),
                Some((GroupKind::Z2, labels)),
            );
            t.set_named("e", "f", &[(1, "h")]);
            t
        }
        "slc" => {
            let eps = (0..3).map(|i| (0..3).map(|j| if i == j { 1 } else { -1 }).collect()).collect();
            let mut t = BracketTable::new(
                "slc",
                BracketKind::Color,
                &["a1", "a2", "a3"],
                eps,
                Some((GroupKind::Z2xZ2, color_labels())),
            );
            t.set_named("a1", "a2", &[(1, "a3")]);
            t.set_named("a2", "a3", &[(1, "a1")]);
            t.set_named("a3", "a1", &[(1, "a2")]);
            t
        }
        "sl21" => sl21_table(),
        _ => return Err(Error::UnknownPreset(name.into())),
    };
    t.validate()?;
    Ok(t)
}

type Mat3 = [[Q; 3]; 3];

fn elementary(pairs: &[(usize, usize)]) -> Mat3 {
    let mut m: Mat3 = core::array::from_fn(|_| core::array::from_fn(|_| Q::zero()));
    for &(i, j) in pairs {
        m[i][j] = q(1);
    }
    m
}

fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    core::array::from_fn(|i| core::array::from_fn(|j| (0..3).fold(Q::zero(), |acc, k| acc + &a[i][k] * &b[k][j])))
}

fn flat(m: &Mat3) -> Vec<Q> {
    m.iter().flatten().cloned().collect()
}

/// The sl(2|1) basis as 3×3 matrices with their parities.
pub fn sl21_matrices() -> Vec<(&'static str, Mat3, u8)> {
    vec![
        ("x1", elementary(&[(0, 0), (2, 2)]), 0),
        ("x2", elementary(&[(1, 1), (2, 2)]), 0),
        ("x3", elementary(&[(0, 1)]), 0),
        ("x4", elementary(&[(1, 0)]), 0),
        ("y1", elementary(&[(0, 2)]), 1),
        ("y2", elementary(&[(2, 0)]), 1),
        ("y3", elementary(&[(1, 2)]), 1),
        ("y4", elementary(&[(2, 1)]), 1),
    ]
}

fn sl21_table() -> BracketTable {
    let mats = sl21_matrices();
    let names: Vec<&str> = mats.iter().map(|(n, _, _)| *n).collect();
    let labels: Vec<GroupElem> = mats.iter().map(|(_, _, p)| GroupElem::z2(*p)).collect();
    let basis: Vec<Vec<Q>> = mats.iter().map(|(_, m, _)| flat(m)).collect();
    let mut t = BracketTable::new(
        "sl21",
        BracketKind::Super,
        &names,
        BracketTable::super_signs(&labels),
        Some((GroupKind::Z2, labels)),
    );
    for (i, (_, a, pa)) in mats.iter().enumerate() {
        for (j, (_, b, pb)) in mats.iter().enumerate().skip(i) {
            let sign = if pa & pb == 1 { q(-1) } else { q(1) };
            let ab = mat_mul(a, b);
            let ba = mat_mul(b, a);
            let sc: Vec<Q> = flat(&ab).iter().zip(flat(&ba)).map(|(x, y)| x - &sign * y).collect();
            let c = coords_in_span(&basis, &sc).expect("supercommutators stay in sl(2|1)");
            t.set(i, j, c);
        }
    }
    t
}

fn sl21_hhat() -> Result<Presentation> {
    let t = sl21_table();
    let mut names: Vec<&str> = t.basis.iter().map(String::as_str).collect();
    names.push("t");
    let mut labels: Vec<GroupElem> = t.labels().expect("graded").to_vec();
    labels.push(GroupElem::IDENTITY);
    let alpha = Alphabet::new(&names).with_grading(GroupKind::Z2, &labels);
    let tl = alpha.index_of("t").expect("t");
    let rels = t.enveloping_relations(&alpha, Some(tl))?;
    Presentation::new("sl21_Hhat", alpha, rels, vec![tl])
}

/// `(α, β, λ, γ)`: `S = span(h, αe + βf)`, `φ(h) = λ`, `φ(αe + βf) = γ`, all with `γ² = αβλ`.
pub fn sl11_admissible_fixtures() -> Vec<[Q; 4]> {
    vec![
        [q(1), q(0), q(3), q(0)],
        [q(0), q(1), q(-2), q(0)],
        [q(1), q(0), q(0), q(0)],
        [q(1), q(1), q(4), q(2)],
        [q(1), q(1), q(4), q(-2)],
        [q(1), q(2), q(2), q(2)],
        [q(1), qf(1, 2), q(8), q(2)],
        [q(1), q(-1), q(-1), q(1)],
        [q(1), q(3), q(3), q(3)],
        [q(1), q(1), q(0), q(0)],
        [q(1), q(2), qf(1, 2), q(1)],
    ]
}

/// `S = span(h, αe + βf)` with its functional.
pub fn sl11_pair(t: &BracketTable, p: &[Q; 4]) -> Result<(SubalgebraSpec, Functional)> {
    let mut v = t.vector(&[]);
    v[t.index_of("e").expect("e")] = p[0].clone();
    v[t.index_of("f").expect("f")] = p[1].clone();
    let s = SubalgebraSpec::new(t.vector(&[(1, "h")]), v)?;
    Ok((s, Functional::new(p[2].clone(), p[3].clone())))
}

/// A color fixture: `S = span(aᵢ, aⱼ + μ a_k)` (0-based `i, j, k`, `j < k`),
/// `family` 'a' (`φ(v) = 0`) or 'b' (`φ(aᵢ) = μ/2`), and `(φ(aᵢ), φ(v))`.
#[derive(Clone, Debug)]
pub struct ColorFixture {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub mu: i64,
    pub family: char,
    pub phi: [Q; 2],
}

impl ColorFixture {
    pub fn pair(&self, t: &BracketTable) -> Result<(SubalgebraSpec, Functional)> {
        let mut v = t.basis_vector(self.j);
        v[self.k] = q(self.mu);
        let s = SubalgebraSpec::new(t.basis_vector(self.i), v)?;
        Ok((s, Functional::new(self.phi[0].clone(), self.phi[1].clone())))
    }

    /// The Prop.-style family tag the line module should classify into.
    pub fn expected_tag(&self) -> String {
        let letter = if self.mu > 0 { 'a' } else { 'b' };
        let number = match self.family {
            // Plane a_j ± a_k: {1,2} → 1, {1,3} → 2, {2,3} → 3.
            'a' => match (self.j, self.k) {
                (0, 1) => 1,
                (0, 2) => 2,
                _ => 3,
            },
            // Plane a4 ∓ 2aᵢ: i = 3 → 4, 2 → 5, 1 → 6.
            _ => 6 - self.i,
        };
        alloc::format!("{number}({letter})")
    }
}

pub fn color_fixtures() -> Vec<ColorFixture> {
    let mut out = Vec::new();
    for i in 0..3 {
        let others: Vec<usize> = (0..3).filter(|&k| k != i).collect();
        for mu in [1i64, -1] {
            for x in [q(0), q(3), qf(-1, 2)] {
                out.push(ColorFixture { i, j: others[0], k: others[1], mu, family: 'a', phi: [x, q(0)] });
            }
            for y in [q(0), q(7), qf(-2, 3)] {
                out.push(ColorFixture { i, j: others[0], k: others[1], mu, family: 'b', phi: [qf(mu, 2), y] });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_counts() {
        let count = |n: &str| algebra(n).unwrap().all_relations().len();
        assert_eq!(count("sl11_Hhat"), 6);
        assert_eq!(count("sl11_H"), 8);
        assert_eq!(count("slc_H"), 6);
        assert_eq!(count("sl21_Hhat"), 36);
    }

    #[test]
    fn all_presets_load() {
        for n in ALGEBRAS.iter().chain(&TABLES).chain(&QUADRICS) {
            preset(n).unwrap();
        }
        assert!(matches!(preset("nope"), Err(Error::UnknownPreset(_))));
    }

    #[test]
    fn sl21_quoted_relations_present() {
        let p = algebra("sl21_Hhat").unwrap();
        let a = &p.alphabet;
        let rels = p.all_relations();
        for want in [
            poly(a, &[(1, "x3 y1"), (-1, "y1 x3")]),
            poly(a, &[(1, "y1 y3"), (1, "y3 y1")]),
            poly(a, &[(1, "x3 y3"), (-1, "y3 x3"), (-1, "y1 t")]),
        ] {
            assert!(rels.iter().any(|r| *r == want || *r == -&want), "missing {}", a.fmt_poly(&want));
        }
    }

    #[test]
    fn sl21_odd_squares_vanish_in_the_table() {
        let t = table("sl21").unwrap();
        for i in 4..8 {
            assert!(t.structure(i, i).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn expected_color_tags() {
        let f = ColorFixture { i: 2, j: 0, k: 1, mu: 1, family: 'a', phi: [q(0), q(0)] };
        assert_eq!(f.expected_tag(), "1(a)");
        let f = ColorFixture { i: 2, j: 0, k: 1, mu: 1, family: 'b', phi: [qf(1, 2), q(0)] };
        assert_eq!(f.expected_tag(), "4(a)");
        let f = ColorFixture { i: 0, j: 1, k: 2, mu: -1, family: 'b', phi: [qf(-1, 2), q(0)] };
        assert_eq!(f.expected_tag(), "6(b)");
    }
}
