//! Graded dimensions of presented algebras and cyclic left modules.
//!
//! Two independent routes:
//!
//! * the rewrite route counts normal words of a completed [`RewriteSystem`];
//! * the oracle spans `{u·r·v}` for every relation `r` inside the degree-d
//!   piece of the free algebra and subtracts the rank. It never looks at a
//!   rewrite system, and its cost is `(#generators)^d` columns per degree.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::ncalg::{Alphabet, Letter, NcPoly, TermOrder, Word};
use crate::rewrite::{Presentation, RewriteSystem};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HilbertFunction {
    pub dims: Vec<usize>,
}

impl HilbertFunction {
    pub fn upto(&self, n: usize) -> &[usize] {
        &self.dims[..=n.min(self.dims.len().saturating_sub(1))]
    }

    /// Graded dimensions `1, 2, …, N+1` of a line module.
    pub fn line(n: usize) -> Self {
        HilbertFunction { dims: (1..=n + 1).collect() }
    }

    pub fn is_line(&self) -> bool {
        self.dims.iter().enumerate().all(|(d, &x)| x == d + 1)
    }

    /// First degree where `self` differs from `other`.
    pub fn first_deviation(&self, other: &HilbertFunction) -> Option<usize> {
        self.dims.iter().zip(&other.dims).position(|(a, b)| a != b)
    }
}

/// Normal-word counts of a completed system.
pub fn hilbert_of_system(rs: &RewriteSystem, n: usize) -> Result<HilbertFunction> {
    if !rs.presentation.is_homogeneous() {
        return Err(Error::Inhomogeneous(rs.presentation.name.clone()));
    }
    if n > rs.confluent_up_to {
        return Err(Error::OutOfCertifiedRange { degree: n, bound: rs.confluent_up_to });
    }
    Ok(HilbertFunction { dims: rs.normal_words(n).iter().map(Vec::len).collect() })
}

/// Rewrite route: complete to degree `n` under the default order and count normal words.
pub fn hilbert_algebra(p: &Presentation, n: usize) -> Result<HilbertFunction> {
    if !p.is_homogeneous() {
        return Err(Error::Inhomogeneous(p.name.clone()));
    }
    let rs = RewriteSystem::new(p, n.max(p.max_relation_degree()))?;
    hilbert_of_system(&rs, n)
}

/// Columns for the degree-d piece: words sorted from largest to smallest.
fn degree_columns(alpha: &Alphabet, ord: &TermOrder, d: usize) -> (Vec<Word>, BTreeMap<Word, usize>) {
    let mut words = alpha.words_of_degree(d);
    words.sort_by(|a, b| ord.compare(b, a));
    let index = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    (words, index)
}

fn to_columns(p: &NcPoly, index: &BTreeMap<Word, usize>) -> SparseVec {
    p.terms().map(|(w, c)| (index[w], c.clone())).collect()
}

/// Span of `{u·r·v}` inside the degree-d piece of the free algebra.
fn ideal_piece(
    alpha: &Alphabet,
    relations: &[(usize, NcPoly)],
    d: usize,
    index: &BTreeMap<Word, usize>,
    words_by_degree: &[Vec<Word>],
) -> Echelon {
    let mut ech = Echelon::new();
    for (k, r) in relations {
        if *k > d {
            continue;
        }
        for a in 0..=d - k {
            for u in &words_by_degree[a] {
                for v in &words_by_degree[d - k - a] {
                    ech.insert(to_columns(&r.sandwich(u, v), index));
                }
            }
        }
    }
    let _ = alpha;
    ech
}

fn homogeneous_relations(p: &Presentation) -> Result<Vec<(usize, NcPoly)>> {
    p.all_relations()
        .into_iter()
        .map(|r| r.homogeneous_degree(&p.alphabet).map(|d| (d, r)).ok_or_else(|| Error::Inhomogeneous(p.name.clone())))
        .collect()
}

fn check_cap(alpha: &Alphabet, d: usize, cap: usize) -> Result<()> {
    let m = alpha.count_words(d);
    if m > cap {
        return Err(Error::OracleCap { degree: d, monomials: m, cap });
    }
    Ok(())
}

/// Oracle route: graded dimensions by spanning the ideal in the free algebra.
pub fn oracle_graded_dims(p: &Presentation, n: usize, cap: usize) -> Result<HilbertFunction> {
    let alpha = &p.alphabet;
    let rels = homogeneous_relations(p)?;
    for d in 0..=n {
        check_cap(alpha, d, cap)?;
    }
    let ord = p.default_order();
    let words_by_degree: Vec<Vec<Word>> = (0..=n).map(|d| alpha.words_of_degree(d)).collect();
    let mut dims = Vec::with_capacity(n + 1);
    for d in 0..=n {
        let (cols, index) = degree_columns(alpha, &ord, d);
        let ech = ideal_piece(alpha, &rels, d, &index, &words_by_degree);
        dims.push(cols.len() - ech.rank());
    }
    Ok(HilbertFunction { dims })
}

/// Whether the homogeneous `x` lies in the two-sided ideal generated by
/// `relations` (all homogeneous), decided by free-algebra linear algebra.
pub fn oracle_ideal_contains(alpha: &Alphabet, relations: &[NcPoly], x: &NcPoly, cap: usize) -> Result<bool> {
    if x.is_zero() {
        return Ok(true);
    }
    let d = x
        .homogeneous_degree(alpha)
        .ok_or_else(|| Error::NonHomogeneousGenerator(alpha.fmt_poly(x)))?;
    check_cap(alpha, d, cap)?;
    let rels: Vec<(usize, NcPoly)> = relations
        .iter()
        .map(|r| r.homogeneous_degree(alpha).map(|k| (k, r.clone())).ok_or_else(|| Error::Inhomogeneous("relation set".into())))
        .collect::<Result<_>>()?;
    let ord = TermOrder::deglex(alpha);
    let words_by_degree: Vec<Vec<Word>> = (0..=d).map(|k| alpha.words_of_degree(k)).collect();
    let (_, index) = degree_columns(alpha, &ord, d);
    let ech = ideal_piece(alpha, &rels, d, &index, &words_by_degree);
    Ok(ech.contains(to_columns(x, &index)))
}

/// One graded piece of `A / Σ A·g`.
#[derive(Clone, Debug)]
pub struct ModulePiece {
    /// Normal words of this degree: a basis of `A_d`.
    pub basis: Vec<Word>,
    pub index: BTreeMap<Word, usize>,
    /// The submodule `(Σ A·g)_d` in that basis.
    pub sub: Echelon,
}

impl ModulePiece {
    pub fn dim(&self) -> usize {
        self.basis.len() - self.sub.rank()
    }

    /// Basis words of the quotient: the non-pivot columns.
    pub fn quotient_basis(&self) -> Vec<&Word> {
        self.basis.iter().enumerate().filter(|(i, _)| !self.sub.is_pivot(*i)).map(|(_, w)| w).collect()
    }

    pub fn coords(&self, nf: &NcPoly) -> SparseVec {
        to_columns(nf, &self.index)
    }
}

/// The cyclic left module `A / Σ A·g` for homogeneous `g`, degree by degree.
#[derive(Clone, Debug)]
pub struct CyclicModule<'a> {
    pub algebra: &'a RewriteSystem,
    pub generators: Vec<NcPoly>,
    pub pieces: Vec<ModulePiece>,
}

impl CyclicModule<'_> {
    pub fn hilbert(&self) -> HilbertFunction {
        HilbertFunction { dims: self.pieces.iter().map(ModulePiece::dim).collect() }
    }

    /// Rank of left multiplication by `x` (homogeneous of degree `k`) from degree `d` to `d + k`,
    /// measured on the quotient.
    pub fn multiplication_rank(&self, x: &NcPoly, d: usize) -> Result<usize> {
        let alpha = self.algebra.alphabet();
        let k = x.homogeneous_degree(alpha).ok_or_else(|| Error::NonHomogeneousGenerator(alpha.fmt_poly(x)))?;
        let target = self.pieces.get(d + k).ok_or(Error::OutOfCertifiedRange { degree: d + k, bound: self.pieces.len() - 1 })?;
        let mut img = Echelon::new();
        for w in self.pieces[d].quotient_basis() {
            let prod = x * &NcPoly::monomial(w.clone(), num_traits::One::one());
            let nf = self.algebra.normal_form(&prod)?;
            img.insert(target.sub.reduce(target.coords(&nf)));
        }
        Ok(img.rank())
    }
}

pub fn cyclic_left_module<'a>(rs: &'a RewriteSystem, gens: &[NcPoly], n: usize) -> Result<CyclicModule<'a>> {
    let alpha = rs.alphabet();
    if n > rs.confluent_up_to {
        return Err(Error::OutOfCertifiedRange { degree: n, bound: rs.confluent_up_to });
    }
    let degs: Vec<usize> = gens
        .iter()
        .map(|g| g.homogeneous_degree(alpha).ok_or_else(|| Error::NonHomogeneousGenerator(alpha.fmt_poly(g))))
        .collect::<Result<_>>()?;
    let words = rs.normal_words(n);
    let mut pieces: Vec<ModulePiece> = Vec::with_capacity(n + 1);
    for d in 0..=n {
        let basis = words[d].clone();
        let index: BTreeMap<Word, usize> = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mut sub = Echelon::new();
        for (g, &k) in gens.iter().zip(&degs) {
            if k > d {
                continue;
            }
            for w in &words[d - k] {
                let nf = rs.normal_form(&g.sandwich(w, &Word::empty()))?;
                sub.insert(to_columns(&nf, &index));
            }
        }
        pieces.push(ModulePiece { basis, index, sub });
    }
    Ok(CyclicModule { algebra: rs, generators: gens.to_vec(), pieces })
}

pub fn hilbert_cyclic_left_module(rs: &RewriteSystem, gens: &[NcPoly], n: usize) -> Result<HilbertFunction> {
    Ok(cyclic_left_module(rs, gens, n)?.hilbert())
}

/// Letters of a degree-1 linear form, for callers that only accept linear generators.
pub fn linear_support(p: &NcPoly) -> Option<Vec<Letter>> {
    p.terms().map(|(w, _)| (w.len() == 1).then(|| w.0[0])).collect()
}
