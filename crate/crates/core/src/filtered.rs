//! Cyclic left modules `U / Σ U·gᵢ` over an inhomogeneous algebra `U`,
//! filtered by total degree.
//!
//! `U` is given by a rewrite system under a degree-compatible order, so
//! `U_{≤i}` has a basis of normal words of length ≤ i. The left ideal is
//! spanned (up to degree `top = n + slack`) by the normal forms of `w·g`;
//! columns run from the largest word down, so every echelon pivot is the
//! leading word of its row and `J ∩ U_{≤i}` is spanned by the rows whose
//! pivot has degree ≤ i. Products whose top-degree parts cancel beyond
//! `top` are not seen; `slack` controls how far above `n` the search goes.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hilbert::HilbertFunction;
use crate::linalg::{Echelon, SparseVec};
use crate::ncalg::{Letter, NcPoly, Q, Word};
use crate::rewrite::RewriteSystem;

/// Default number of degrees searched above the requested filtration degree.
pub const DEFAULT_SLACK: usize = 2;

#[derive(Clone, Debug)]
pub struct FilteredQuotient<'a> {
    pub algebra: &'a RewriteSystem,
    pub n: usize,
    pub top: usize,
    pub columns: Vec<Word>,
    index: BTreeMap<Word, usize>,
    pub ideal: Echelon,
}

impl FilteredQuotient<'_> {
    fn coords(&self, p: &NcPoly) -> SparseVec {
        p.terms().map(|(w, c)| (self.index[w], c.clone())).collect()
    }

    /// `dim U_{≤i} / (J ∩ U_{≤i})` for `i = 0..=n`.
    pub fn dims(&self) -> HilbertFunction {
        let alpha = self.algebra.alphabet();
        let mut words_le = alloc::vec![0usize; self.n + 1];
        for w in &self.columns {
            let d = alpha.degree(w);
            for slot in words_le.iter_mut().skip(d) {
                *slot += 1;
            }
        }
        let mut ideal_le = alloc::vec![0usize; self.n + 1];
        for col in self.ideal.row_pivots() {
            let d = alpha.degree(&self.columns[col]);
            for slot in ideal_le.iter_mut().skip(d) {
                *slot += 1;
            }
        }
        HilbertFunction { dims: words_le.iter().zip(&ideal_le).map(|(a, b)| a - b).collect() }
    }

    /// Whether `x` (of degree ≤ n) lies in the left ideal.
    pub fn contains(&self, x: &NcPoly) -> Result<bool> {
        let d = x.degree(self.algebra.alphabet());
        if d > self.n {
            return Err(Error::OutOfCertifiedRange { degree: d, bound: self.n });
        }
        let nf = self.algebra.normal_form(x)?;
        Ok(self.ideal.contains(self.coords(&nf)))
    }

    /// The quotient is nonzero: `1` is not in the ideal.
    pub fn is_proper(&self) -> bool {
        !self.ideal.contains(self.coords(&NcPoly::one()))
    }
}

pub fn filtered_left_quotient<'a>(
    rs: &'a RewriteSystem,
    gens: &[NcPoly],
    n: usize,
    slack: usize,
) -> Result<FilteredQuotient<'a>> {
    let top = n + slack;
    if top > rs.confluent_up_to {
        return Err(Error::OutOfCertifiedRange { degree: top, bound: rs.confluent_up_to });
    }
    let alpha = rs.alphabet();
    let by_degree = rs.normal_words(top);
    let mut columns: Vec<Word> = by_degree.iter().rev().flatten().cloned().collect();
    columns.sort_by(|a, b| rs.order.compare(b, a));
    let index: BTreeMap<Word, usize> = columns.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut q = FilteredQuotient { algebra: rs, n, top, columns, index, ideal: Echelon::new() };
    for g in gens {
        let nf_g = rs.normal_form(g)?;
        let k = nf_g.degree(alpha);
        if k > top {
            continue;
        }
        for words in by_degree.iter().take(top - k + 1) {
            for w in words {
                let nf = rs.normal_form(&nf_g.sandwich(w, &Word::empty()))?;
                let v = q.coords(&nf);
                q.ideal.insert(v);
            }
        }
    }
    Ok(q)
}

/// Sets the letter `t` to 1 and renames the remaining letters through `rename`.
pub fn dehomogenize(p: &NcPoly, t: Letter, rename: impl Fn(Letter) -> Option<Letter>) -> Result<NcPoly> {
    let mut out = NcPoly::zero();
    for (w, c) in p.terms() {
        let mut letters = Vec::with_capacity(w.len());
        for &l in &w.0 {
            if l == t {
                continue;
            }
            letters.push(rename(l).ok_or_else(|| Error::UnknownGenerator(alloc::format!("#{l}")))?);
        }
        out.add_term(Word(letters), c.clone());
    }
    Ok(out)
}

/// `x − c·1`.
pub fn shifted(x: &NcPoly, c: &Q) -> NcPoly {
    let mut p = x.clone();
    p.add_term(Word::empty(), -c.clone());
    p
}
