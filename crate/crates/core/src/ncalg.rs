//! Words and noncommutative polynomials with exact rational coefficients.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Q = BigRational;

/// Index of a generator inside its alphabet.
pub type Letter = u16;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a rational as `p` or `p/q`.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        alloc::format!("{}/{}", x.numer(), x.denom())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    Z2,
    Z2xZ2,
}

/// Element of ℤ₂ (second component always 0) or ℤ₂×ℤ₂.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElem(pub u8, pub u8);

impl GroupElem {
    pub const IDENTITY: GroupElem = GroupElem(0, 0);

    pub fn z2(bit: u8) -> Self {
        GroupElem(bit & 1, 0)
    }

    pub fn add(self, other: GroupElem) -> GroupElem {
        GroupElem((self.0 + other.0) & 1, (self.1 + other.1) & 1)
    }

    pub fn render(&self, kind: GroupKind) -> String {
        match kind {
            GroupKind::Z2 => self.0.to_string(),
            GroupKind::Z2xZ2 => alloc::format!("({},{})", self.0, self.1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub z_degree: u32,
    pub label: Option<GroupElem>,
}

impl Generator {
    pub fn new(name: &str) -> Self {
        Generator { name: name.to_string(), z_degree: 1, label: None }
    }
}

/// An ordered generator alphabet with optional group grading.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    pub gens: Vec<Generator>,
    pub grading: Option<GroupKind>,
}

impl Alphabet {
    pub fn new(names: &[&str]) -> Self {
        Alphabet { gens: names.iter().map(|n| Generator::new(n)).collect(), grading: None }
    }

    pub fn with_grading(mut self, kind: GroupKind, labels: &[GroupElem]) -> Self {
        assert_eq!(labels.len(), self.gens.len());
        self.grading = Some(kind);
        for (g, l) in self.gens.iter_mut().zip(labels) {
            g.label = Some(*l);
        }
        self
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<Letter> {
        self.gens.iter().position(|g| g.name == name).map(|i| i as Letter)
    }

    pub fn name(&self, l: Letter) -> &str {
        &self.gens[l as usize].name
    }

    pub fn weights(&self) -> Vec<u32> {
        self.gens.iter().map(|g| g.z_degree).collect()
    }

    /// Checks the alphabet invariants: nonempty unique names and positive weights.
    pub fn validate(&self) -> Result<()> {
        for (i, g) in self.gens.iter().enumerate() {
            if g.name.is_empty() {
                return Err(Error::InvalidPresentation("empty generator name".into()));
            }
            if g.z_degree == 0 {
                return Err(Error::InvalidPresentation(alloc::format!(
                    "generator `{}` has degree 0",
                    g.name
                )));
            }
            if self.gens[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::InvalidPresentation(alloc::format!(
                    "duplicate generator `{}`",
                    g.name
                )));
            }
        }
        Ok(())
    }

    /// ℤ-degree of a word: the sum of its letters' weights.
    pub fn degree(&self, w: &Word) -> usize {
        w.0.iter().map(|&l| self.gens[l as usize].z_degree as usize).sum()
    }

    /// Group degree of a word under the alphabet's grading.
    pub fn group_degree(&self, w: &Word) -> Result<GroupElem> {
        w.0.iter().try_fold(GroupElem::IDENTITY, |acc, &l| {
            let g = &self.gens[l as usize];
            g.label
                .map(|lab| acc.add(lab))
                .ok_or_else(|| Error::UngradedAlphabet(g.name.clone()))
        })
    }

    /// Every word of ℤ-degree exactly `d`, in lexicographic index order.
    pub fn words_of_degree(&self, d: usize) -> Vec<Word> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.extend_words(d, &mut cur, &mut out);
        out
    }

    fn extend_words(&self, remaining: usize, cur: &mut Vec<Letter>, out: &mut Vec<Word>) {
        if remaining == 0 {
            out.push(Word(cur.clone()));
            return;
        }
        for (i, g) in self.gens.iter().enumerate() {
            let w = g.z_degree as usize;
            if w <= remaining {
                cur.push(i as Letter);
                self.extend_words(remaining - w, cur, out);
                cur.pop();
            }
        }
    }

    /// Number of words of ℤ-degree `d`, without materializing them.
    pub fn count_words(&self, d: usize) -> usize {
        let mut counts = vec![0usize; d + 1];
        counts[0] = 1;
        for k in 1..=d {
            let mut c = 0usize;
            for g in &self.gens {
                let w = g.z_degree as usize;
                if w <= k {
                    c = c.saturating_add(counts[k - w]);
                }
            }
            counts[k] = c;
        }
        counts[d]
    }

    pub fn fmt_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let names: Vec<&str> = w.0.iter().map(|&l| self.name(l)).collect();
        names.join("*")
    }

    /// Renders a polynomial with terms in descending default order, e.g. `e*f + f*e - h*t`.
    pub fn fmt_poly(&self, p: &NcPoly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let ord = TermOrder::deglex(self);
        let mut terms: Vec<(&Word, &Q)> = p.terms().collect();
        terms.sort_by(|a, b| ord.compare(b.0, a.0));
        let mut s = String::new();
        for (i, (w, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if w.is_empty() {
                s.push_str(&fmt_q(&mag));
            } else {
                if !mag.is_one() {
                    s.push_str(&fmt_q(&mag));
                    s.push('*');
                }
                s.push_str(&self.fmt_word(w));
            }
        }
        s
    }
}

/// A monomial of the free algebra: a finite sequence of generator indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Leftmost occurrence of `pat` as a contiguous subword.
    pub fn find(&self, pat: &Word) -> Option<usize> {
        if pat.len() > self.len() {
            return None;
        }
        if pat.is_empty() {
            return Some(0);
        }
        self.0.windows(pat.len()).position(|w| w == pat.0.as_slice())
    }

    pub fn contains(&self, pat: &Word) -> bool {
        self.find(pat).is_some()
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }
}

impl From<&[Letter]> for Word {
    fn from(s: &[Letter]) -> Self {
        Word(s.to_vec())
    }
}

/// Degree-lexicographic order with an explicit generator precedence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    rank: Vec<u16>,
    weights: Vec<u32>,
}

impl TermOrder {
    /// Presentation order: the first generator has the highest precedence.
    pub fn deglex(alpha: &Alphabet) -> Self {
        let n = alpha.len();
        TermOrder { rank: (0..n).map(|i| (n - 1 - i) as u16).collect(), weights: alpha.weights() }
    }

    /// `precedence` lists every generator from greatest to smallest.
    pub fn with_precedence(alpha: &Alphabet, precedence: &[Letter]) -> Result<Self> {
        let n = alpha.len();
        let mut rank = vec![u16::MAX; n];
        if precedence.len() != n {
            return Err(Error::InvalidPresentation("precedence must list every generator once".into()));
        }
        for (pos, &l) in precedence.iter().enumerate() {
            let slot = rank
                .get_mut(l as usize)
                .ok_or_else(|| Error::InvalidPresentation("precedence names an unknown generator".into()))?;
            if *slot != u16::MAX {
                return Err(Error::InvalidPresentation("precedence repeats a generator".into()));
            }
            *slot = (n - 1 - pos) as u16;
        }
        Ok(TermOrder { rank, weights: alpha.weights() })
    }

    /// Generators from greatest to smallest.
    pub fn precedence(&self) -> Vec<Letter> {
        let mut idx: Vec<Letter> = (0..self.rank.len() as Letter).collect();
        idx.sort_by(|a, b| self.rank[*b as usize].cmp(&self.rank[*a as usize]));
        idx
    }

    pub fn degree(&self, w: &Word) -> usize {
        w.0.iter().map(|&l| self.weights[l as usize] as usize).sum()
    }

    pub fn compare(&self, a: &Word, b: &Word) -> Ordering {
        self.degree(a).cmp(&self.degree(b)).then_with(|| {
            for (x, y) in a.0.iter().zip(&b.0) {
                match self.rank[*x as usize].cmp(&self.rank[*y as usize]) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            a.len().cmp(&b.len())
        })
    }
}

/// Element of the free algebra ℚ⟨generators⟩. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NcPoly {
    terms: BTreeMap<Word, Q>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly::default()
    }

    pub fn one() -> Self {
        NcPoly::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        NcPoly::monomial(Word::empty(), c)
    }

    pub fn monomial(w: Word, c: Q) -> Self {
        let mut p = NcPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn letter(l: Letter) -> Self {
        NcPoly::monomial(Word::letter(l), Q::one())
    }

    /// Builds `Σ c·w` from integer coefficients and index slices.
    pub fn from_terms(terms: &[(i64, &[Letter])]) -> Self {
        let mut p = NcPoly::zero();
        for (c, w) in terms {
            p.add_term(Word::from(*w), q(*c));
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Q)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Q)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &Word) -> Q {
        self.terms.get(w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn remove(&mut self, w: &Word) -> Option<Q> {
        self.terms.remove(w)
    }

    pub fn scale(&self, c: &Q) -> NcPoly {
        if c.is_zero() {
            return NcPoly::zero();
        }
        NcPoly { terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    /// `u · self · v` for words `u`, `v`.
    pub fn sandwich(&self, u: &Word, v: &Word) -> NcPoly {
        NcPoly { terms: self.terms.iter().map(|(w, c)| (u.concat(w).concat(v), c.clone())).collect() }
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    /// Largest ℤ-degree of a term (0 for the zero polynomial).
    pub fn degree(&self, alpha: &Alphabet) -> usize {
        self.terms.keys().map(|w| alpha.degree(w)).max().unwrap_or(0)
    }

    /// ℤ-degree when all terms share one, `None` otherwise (and for zero).
    pub fn homogeneous_degree(&self, alpha: &Alphabet) -> Option<usize> {
        let mut degs = self.terms.keys().map(|w| alpha.degree(w));
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn leading(&self, ord: &TermOrder) -> Option<(&Word, &Q)> {
        self.terms.iter().max_by(|a, b| ord.compare(a.0, b.0))
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self, ord: &TermOrder) -> NcPoly {
        match self.leading(ord) {
            Some((_, c)) => self.scale(&c.recip()),
            None => NcPoly::zero(),
        }
    }

    /// Applies a letter substitution; letters mapped to `None` are deleted (set to 1).
    pub fn map_letters(&self, f: impl Fn(Letter) -> Option<Letter>) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(Word(w.0.iter().filter_map(|&l| f(l)).collect()), c.clone());
        }
        out
    }

    pub fn uses_only(&self, n_letters: usize) -> bool {
        self.terms.keys().all(|w| w.0.iter().all(|&l| (l as usize) < n_letters))
    }
}

impl AddAssign<&NcPoly> for NcPoly {
    fn add_assign(&mut self, rhs: &NcPoly) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl SubAssign<&NcPoly> for NcPoly {
    fn sub_assign(&mut self, rhs: &NcPoly) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), -c.clone());
        }
    }
}

impl Add for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for NcPoly {
    type Output = NcPoly;
    fn add(mut self, rhs: NcPoly) -> NcPoly {
        self += &rhs;
        self
    }
}

impl Sub for NcPoly {
    type Output = NcPoly;
    fn sub(mut self, rhs: NcPoly) -> NcPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c.clone())).collect() }
    }
}

impl Neg for NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        -&self
    }
}

impl Mul for &NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.concat(b), x * y);
            }
        }
        out
    }
}

impl Mul for NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: NcPoly) -> NcPoly {
        &self * &rhs
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "g{}", l)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new(&["e", "f", "h", "t"])
    }

    #[test]
    fn product_of_letters() {
        let e = NcPoly::letter(0);
        let f = NcPoly::letter(1);
        let p = &e * &f;
        assert_eq!(p.len(), 1);
        assert_eq!(p.coeff(&Word(vec![0, 1])), q(1));
    }

    #[test]
    fn square_of_sum_expands_bilinearly() {
        let s = &NcPoly::letter(0) + &NcPoly::letter(1);
        let sq = &s * &s;
        assert_eq!(sq, NcPoly::from_terms(&[(1, &[0, 0]), (1, &[0, 1]), (1, &[1, 0]), (1, &[1, 1])]));
    }

    #[test]
    fn unit_is_identity() {
        let p = NcPoly::from_terms(&[(3, &[0, 2]), (-1, &[1])]);
        assert_eq!(&NcPoly::one() * &p, p);
        assert_eq!(&p * &NcPoly::one(), p);
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = NcPoly::from_terms(&[(1, &[0, 1]), (-1, &[0, 1])]);
        assert!(p.is_zero());
    }

    #[test]
    fn compare_examples() {
        let a = ab();
        let ord = TermOrder::deglex(&a);
        assert_eq!(ord.compare(&Word(vec![2]), &Word(vec![0, 1])), Ordering::Less);
        let w = Word(vec![1, 3, 0]);
        assert_eq!(ord.compare(&w, &w), Ordering::Equal);
        assert_eq!(ord.compare(&Word(vec![0, 1]), &Word(vec![1, 0])), Ordering::Greater);
    }

    #[test]
    fn custom_precedence_reverses() {
        let a = ab();
        let ord = TermOrder::with_precedence(&a, &[3, 2, 1, 0]).unwrap();
        assert_eq!(ord.compare(&Word(vec![0, 1]), &Word(vec![1, 0])), Ordering::Less);
        assert_eq!(ord.precedence(), vec![3, 2, 1, 0]);
        assert!(TermOrder::with_precedence(&a, &[0, 0, 1, 2]).is_err());
    }

    #[test]
    fn group_degrees() {
        let z2 = ab().with_grading(
            GroupKind::Z2,
            &[GroupElem::z2(1), GroupElem::z2(1), GroupElem::z2(0), GroupElem::z2(0)],
        );
        assert_eq!(z2.group_degree(&Word(vec![0, 1])).unwrap(), GroupElem(0, 0));
        assert_eq!(z2.group_degree(&Word::empty()).unwrap(), GroupElem::IDENTITY);
        let klein = Alphabet::new(&["a1", "a2", "a3", "a4"]).with_grading(
            GroupKind::Z2xZ2,
            &[GroupElem(1, 0), GroupElem(0, 1), GroupElem(1, 1), GroupElem(0, 0)],
        );
        assert_eq!(klein.group_degree(&Word(vec![0, 1])).unwrap(), GroupElem(1, 1));
        let err = ab().group_degree(&Word(vec![0])).unwrap_err();
        assert!(matches!(err, Error::UngradedAlphabet(_)));
    }

    #[test]
    fn formatting() {
        let a = ab();
        let p = NcPoly::from_terms(&[(1, &[0, 1]), (1, &[1, 0]), (-1, &[2, 3])]);
        assert_eq!(a.fmt_poly(&p), "e*f + f*e - h*t");
        let r = NcPoly::monomial(Word(vec![2]), qf(-3, 2));
        assert_eq!(a.fmt_poly(&r), "-3/2*h");
        assert_eq!(a.fmt_poly(&NcPoly::constant(q(2))), "2");
    }

    #[test]
    fn word_counts() {
        let a = ab();
        for d in 0..5 {
            assert_eq!(a.words_of_degree(d).len(), 4usize.pow(d as u32));
            assert_eq!(a.count_words(d), 4usize.pow(d as u32));
        }
    }
}
