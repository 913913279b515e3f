//! Presentations and degree-bounded completion to a rewriting system.
//!
//! Completion follows the usual overlap-resolution loop: every relation is
//! reduced and turned into a monic rule `lhs → rhs` with `lhs` the leading
//! word; overlaps `l_i = a·s`, `l_j = s·b` are reduced both ways and any
//! nonzero difference becomes a new rule. Overlaps are processed in order of
//! degree, so for homogeneous presentations the rules of degree ≤ N form a
//! truncated Gröbner basis and normal forms of degree ≤ N are unique.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::One;

use crate::error::{Error, Result};
use crate::ncalg::{Alphabet, Letter, NcPoly, TermOrder, Word, Q};

/// Generators, relations, and the central generators whose commutators are
/// implied relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub name: String,
    pub alphabet: Alphabet,
    /// Relations as written, without the implied centrality relations.
    pub relations: Vec<NcPoly>,
    pub central: Vec<Letter>,
}

impl Presentation {
    pub fn new(name: &str, alphabet: Alphabet, relations: Vec<NcPoly>, central: Vec<Letter>) -> Result<Self> {
        alphabet.validate()?;
        let n = alphabet.len();
        for (i, r) in relations.iter().enumerate() {
            if r.is_zero() {
                return Err(Error::DegenerateRelation { index: i, reason: "relation is zero".into() });
            }
            if !r.uses_only(n) {
                return Err(Error::InvalidPresentation(alloc::format!("relation #{i} uses an undeclared generator")));
            }
        }
        for &c in &central {
            if c as usize >= n {
                return Err(Error::InvalidPresentation("central generator out of range".into()));
            }
        }
        Ok(Presentation { name: name.into(), alphabet, relations, central })
    }

    /// Explicit relations followed by `g·c − c·g` for each central `c` and other generator `g`.
    pub fn all_relations(&self) -> Vec<NcPoly> {
        let mut out = self.relations.clone();
        let mut done: Vec<Letter> = Vec::new();
        for &c in &self.central {
            for g in 0..self.alphabet.len() as Letter {
                if g == c || done.contains(&g) {
                    continue;
                }
                out.push(NcPoly::from_terms(&[(1, &[g, c]), (-1, &[c, g])]));
            }
            done.push(c);
        }
        out
    }

    /// The homogenizing generator, by convention the first declared central one.
    pub fn homogenizer(&self) -> Option<Letter> {
        self.central.first().copied()
    }

    /// ℤ-degree of each relation, `None` where a relation mixes degrees.
    pub fn relation_degrees(&self) -> Vec<Option<usize>> {
        self.all_relations().iter().map(|r| r.homogeneous_degree(&self.alphabet)).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.relation_degrees().iter().all(Option::is_some)
    }

    pub fn max_relation_degree(&self) -> usize {
        self.all_relations().iter().map(|r| r.degree(&self.alphabet)).max().unwrap_or(0)
    }

    pub fn default_order(&self) -> TermOrder {
        TermOrder::deglex(&self.alphabet)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: NcPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RuleSource {
    Relation(usize),
    Overlap(Word),
    /// A rule withdrawn because a newer lhs divides it, reduced and re-added.
    Reinserted,
}

/// One entry of the completion log.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedRule {
    pub lhs: Word,
    pub source: RuleSource,
}

/// One application of a rule inside a term of the polynomial being reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteStep {
    pub word: Word,
    pub coeff: Q,
    pub position: usize,
    pub rule: usize,
}

#[derive(Clone, Debug)]
pub struct RewriteSystem {
    pub presentation: Presentation,
    pub order: TermOrder,
    pub rules: Vec<Rule>,
    pub degree_bound: usize,
    /// Degree up to which every overlap is verified to resolve.
    pub confluent_up_to: usize,
    /// Leading words of derived rules that exceeded the bound and were dropped.
    pub discarded: Vec<Word>,
    /// Overlaps among the final rules whose degree exceeds the bound.
    pub unchecked_overlaps: usize,
    pub log: Vec<DerivedRule>,
    by_lhs: BTreeMap<Vec<Letter>, usize>,
    lhs_lens: Vec<usize>,
}

struct Completion<'a> {
    alpha: &'a Alphabet,
    ord: &'a TermOrder,
    bound: usize,
    rules: Vec<Option<Rule>>,
    by_lhs: BTreeMap<Vec<Letter>, usize>,
    queue: BTreeMap<(usize, u64), (Word, Word, usize)>,
    seq: u64,
    discarded: Vec<Word>,
    log: Vec<DerivedRule>,
}

/// Leftmost rule match in `w`, given the rule index and the set of lhs lengths.
fn find_match(by_lhs: &BTreeMap<Vec<Letter>, usize>, lens: &[usize], w: &[Letter]) -> Option<(usize, usize)> {
    for pos in 0..w.len() {
        for &l in lens {
            if pos + l <= w.len() {
                if let Some(&ri) = by_lhs.get(&w[pos..pos + l]) {
                    return Some((pos, ri));
                }
            }
        }
    }
    None
}

fn apply_at(w: &Word, pos: usize, lhs_len: usize, rhs: &NcPoly) -> NcPoly {
    rhs.sandwich(&w.slice(0, pos), &w.slice(pos + lhs_len, w.len()))
}

/// Pulls the leading term out of `work`.
fn pop_leading(work: &mut NcPoly, ord: &TermOrder) -> Option<(Word, Q)> {
    let w = work.leading(ord)?.0.clone();
    let c = work.remove(&w)?;
    Some((w, c))
}

fn reduce_full<'r>(
    rule_at: &dyn Fn(usize) -> &'r Rule,
    by_lhs: &BTreeMap<Vec<Letter>, usize>,
    lens: &[usize],
    ord: &TermOrder,
    p: &NcPoly,
    mut trace: Option<&mut Vec<RewriteStep>>,
) -> NcPoly {
    let mut work = p.clone();
    let mut out = NcPoly::zero();
    while let Some((w, c)) = pop_leading(&mut work, ord) {
        match find_match(by_lhs, lens, &w.0) {
            Some((pos, ri)) => {
                let rule = rule_at(ri);
                work += &apply_at(&w, pos, rule.lhs.len(), &rule.rhs).scale(&c);
                if let Some(t) = trace.as_deref_mut() {
                    t.push(RewriteStep { word: w, coeff: c, position: pos, rule: ri });
                }
            }
            None => out.add_term(w, c),
        }
    }
    out
}

fn lhs_lengths(by_lhs: &BTreeMap<Vec<Letter>, usize>) -> Vec<usize> {
    let set: BTreeSet<usize> = by_lhs.keys().map(Vec::len).collect();
    set.into_iter().collect()
}

/// Proper overlaps: suffix of `a` of length `k` equal to prefix of `b`.
fn overlaps<'a>(a: &'a Word, b: &'a Word) -> impl Iterator<Item = usize> + 'a {
    let max = a.len().min(b.len());
    (1..max).filter(move |&k| a.0[a.len() - k..] == b.0[..k])
}

impl Completion<'_> {
    fn reduce(&self, p: &NcPoly) -> NcPoly {
        let lens = lhs_lengths(&self.by_lhs);
        let at = |i: usize| self.rules[i].as_ref().expect("indexed rules exist");
        reduce_full(&at, &self.by_lhs, &lens, self.ord, p, None)
    }

    fn add_poly(&mut self, p: &NcPoly, source: RuleSource) -> Result<()> {
        let r = self.reduce(p);
        let Some((lead, c)) = r.leading(self.ord) else { return Ok(()) };
        let lead = lead.clone();
        if lead.is_empty() {
            return Err(Error::DegenerateRelation {
                index: match source {
                    RuleSource::Relation(i) => i,
                    _ => usize::MAX,
                },
                reason: "a nonzero constant lies in the ideal; the leading term cancels to a unit".into(),
            });
        }
        if self.alpha.degree(&lead) > self.bound {
            self.discarded.push(lead);
            return Ok(());
        }
        let monic = r.scale(&c.recip());
        let mut rhs = -&monic;
        rhs.add_term(lead.clone(), Q::one());

        // Rules whose lhs contains the new lhs are withdrawn and re-added after.
        let mut withdrawn = Vec::new();
        for slot in self.rules.iter_mut() {
            if slot.as_ref().is_some_and(|r| r.lhs.contains(&lead)) {
                let old = slot.take().expect("checked");
                self.by_lhs.remove(&old.lhs.0);
                let mut poly = -&old.rhs;
                poly.add_term(old.lhs, Q::one());
                withdrawn.push(poly);
            }
        }

        let idx = self.rules.len();
        self.rules.push(Some(Rule { lhs: lead.clone(), rhs }));
        self.by_lhs.insert(lead.0.clone(), idx);
        self.log.push(DerivedRule { lhs: lead.clone(), source });

        // Keep right-hand sides normal.
        let lens = lhs_lengths(&self.by_lhs);
        for i in 0..self.rules.len() {
            let needs = self.rules[i]
                .as_ref()
                .is_some_and(|r| i != idx && r.rhs.terms().any(|(w, _)| w.contains(&lead)));
            if needs {
                let rhs = self.rules[i].as_ref().expect("checked").rhs.clone();
                let at = |i: usize| self.rules[i].as_ref().expect("indexed rules exist");
                let nf = reduce_full(&at, &self.by_lhs, &lens, self.ord, &rhs, None);
                self.rules[i].as_mut().expect("checked").rhs = nf;
            }
        }

        for j in 0..self.rules.len() {
            let Some(other) = self.rules[j].as_ref().map(|r| r.lhs.clone()) else { continue };
            self.queue_overlaps(&lead, &other);
            if j != idx {
                self.queue_overlaps(&other, &lead);
            }
        }

        for poly in withdrawn {
            self.add_poly(&poly, RuleSource::Reinserted)?;
        }
        Ok(())
    }

    fn queue_overlaps(&mut self, a: &Word, b: &Word) {
        let ks: Vec<usize> = overlaps(a, b).collect();
        for k in ks {
            let w = a.concat(&b.slice(k, b.len()));
            let deg = self.alpha.degree(&w);
            self.seq += 1;
            self.queue.insert((deg, self.seq), (a.clone(), b.clone(), k));
        }
    }

    fn resolve(&self, a: &Word, b: &Word, k: usize) -> Option<(Word, NcPoly)> {
        let ra = &self.rules[*self.by_lhs.get(&a.0)?].as_ref()?.rhs;
        let rb = &self.rules[*self.by_lhs.get(&b.0)?].as_ref()?.rhs;
        let w = a.concat(&b.slice(k, b.len()));
        let left = ra.sandwich(&Word::empty(), &b.slice(k, b.len()));
        let right = rb.sandwich(&a.slice(0, a.len() - k), &Word::empty());
        let s = self.reduce(&left) - self.reduce(&right);
        Some((w, s))
    }
}

/// Completes `p` under `ord`, resolving every overlap of degree ≤ `bound`.
pub fn complete(p: &Presentation, ord: &TermOrder, bound: usize) -> Result<RewriteSystem> {
    let maxdeg = p.max_relation_degree();
    if bound < maxdeg {
        return Err(Error::OutOfCertifiedRange { degree: maxdeg, bound });
    }
    let mut st = Completion {
        alpha: &p.alphabet,
        ord,
        bound,
        rules: Vec::new(),
        by_lhs: BTreeMap::new(),
        queue: BTreeMap::new(),
        seq: 0,
        discarded: Vec::new(),
        log: Vec::new(),
    };

    // Seed with the relations, smallest degree first, ties in presentation order.
    let mut rels: Vec<(usize, usize, NcPoly)> =
        p.all_relations().into_iter().enumerate().map(|(i, r)| (r.degree(&p.alphabet), i, r)).collect();
    rels.sort_by_key(|(d, i, _)| (*d, *i));
    let mut pending = rels.into_iter().peekable();

    loop {
        // Relations of degree ≤ the next overlap degree go first.
        let next_overlap = st.queue.keys().next().map(|k| k.0);
        let take_rel = match (pending.peek(), next_overlap) {
            (Some((d, _, _)), Some(o)) => *d <= o,
            (Some(_), None) => true,
            (None, Some(_)) => false,
            (None, None) => break,
        };
        if take_rel {
            let (_, i, r) = pending.next().expect("peeked");
            st.add_poly(&r, RuleSource::Relation(i))?;
            continue;
        }
        let (key, (a, b, k)) = st.queue.pop_first().expect("nonempty");
        if key.0 > bound {
            // The queue is ordered by degree; everything left is above the bound.
            st.queue.insert(key, (a, b, k));
            break;
        }
        if let Some((w, s)) = st.resolve(&a, &b, k) {
            if !s.is_zero() {
                st.add_poly(&s, RuleSource::Overlap(w))?;
            }
        }
    }

    let mut rules = Vec::new();
    for r in st.rules.into_iter().flatten() {
        rules.push(r);
    }
    // Deterministic final order: by lhs under the term order.
    rules.sort_by(|x, y| ord.compare(&x.lhs, &y.lhs));
    let by_lhs: BTreeMap<Vec<Letter>, usize> = rules.iter().enumerate().map(|(i, r)| (r.lhs.0.clone(), i)).collect();
    let lhs_lens = lhs_lengths(&by_lhs);

    let mut unchecked = 0;
    for a in &rules {
        for b in &rules {
            for k in overlaps(&a.lhs, &b.lhs) {
                if p.alphabet.degree(&a.lhs) + p.alphabet.degree(&b.lhs.slice(k, b.lhs.len())) > bound {
                    unchecked += 1;
                }
            }
        }
    }

    let mut rs = RewriteSystem {
        presentation: p.clone(),
        order: ord.clone(),
        rules,
        degree_bound: bound,
        confluent_up_to: 0,
        discarded: st.discarded,
        unchecked_overlaps: unchecked,
        log: st.log,
        by_lhs,
        lhs_lens,
    };
    rs.confluent_up_to = rs.certify_confluence();
    Ok(rs)
}

impl RewriteSystem {
    /// Completes under the presentation's default order.
    pub fn new(p: &Presentation, bound: usize) -> Result<Self> {
        complete(p, &p.default_order(), bound)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.presentation.alphabet
    }

    /// True when no overlap or derived rule was left behind: the system is
    /// confluent in every degree.
    pub fn is_globally_confluent(&self) -> bool {
        self.discarded.is_empty() && self.unchecked_overlaps == 0 && self.confluent_up_to == self.degree_bound
    }

    fn reduce_unchecked(&self, x: &NcPoly, trace: Option<&mut Vec<RewriteStep>>) -> NcPoly {
        let at = |i: usize| &self.rules[i];
        reduce_full(&at, &self.by_lhs, &self.lhs_lens, &self.order, x, trace)
    }

    /// Recomputes every overlap of degree ≤ the bound with the final rules and
    /// returns the largest degree `d` such that all overlaps of degree ≤ `d` resolve.
    pub fn certify_confluence(&self) -> usize {
        let alpha = self.alphabet();
        let mut first_bad = self.degree_bound + 1;
        for a in &self.rules {
            for b in &self.rules {
                for k in overlaps(&a.lhs, &b.lhs) {
                    let tail = b.lhs.slice(k, b.lhs.len());
                    let deg = alpha.degree(&a.lhs) + alpha.degree(&tail);
                    if deg > self.degree_bound || deg >= first_bad {
                        continue;
                    }
                    let left = a.rhs.sandwich(&Word::empty(), &tail);
                    let right = b.rhs.sandwich(&a.lhs.slice(0, a.lhs.len() - k), &Word::empty());
                    if !self.reduce_unchecked(&(left - right), None).is_zero() {
                        first_bad = deg;
                    }
                }
            }
        }
        // Every relation must reduce to zero as well.
        for r in self.presentation.all_relations() {
            let d = r.degree(alpha);
            if d < first_bad && !self.reduce_unchecked(&r, None).is_zero() {
                first_bad = d;
            }
        }
        first_bad - 1
    }

    fn check_degree(&self, x: &NcPoly, bound: usize) -> Result<()> {
        let d = x.degree(self.alphabet());
        if d > bound {
            return Err(Error::OutOfCertifiedRange { degree: d, bound });
        }
        Ok(())
    }

    pub fn normal_form(&self, x: &NcPoly) -> Result<NcPoly> {
        self.check_degree(x, self.degree_bound)?;
        Ok(self.reduce_unchecked(x, None))
    }

    /// Two-sided ideal membership, certified up to `confluent_up_to`.
    pub fn ideal_member(&self, x: &NcPoly) -> Result<bool> {
        self.check_degree(x, self.confluent_up_to)?;
        Ok(self.reduce_unchecked(x, None).is_zero())
    }

    pub fn derivation_trace(&self, x: &NcPoly) -> Result<(Vec<RewriteStep>, NcPoly)> {
        self.check_degree(x, self.degree_bound)?;
        let mut steps = Vec::new();
        let nf = self.reduce_unchecked(x, Some(&mut steps));
        Ok((steps, nf))
    }

    /// Replays a trace on `x`, returning the polynomial after the last step.
    pub fn replay(&self, x: &NcPoly, steps: &[RewriteStep]) -> NcPoly {
        let mut p = x.clone();
        for s in steps {
            let rule = &self.rules[s.rule];
            debug_assert_eq!(s.word.slice(s.position, s.position + rule.lhs.len()), rule.lhs);
            p.add_term(s.word.clone(), -s.coeff.clone());
            p += &apply_at(&s.word, s.position, rule.lhs.len(), &rule.rhs).scale(&s.coeff);
        }
        p
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        find_match(&self.by_lhs, &self.lhs_lens, &w.0).is_none()
    }

    /// Normal words of ℤ-degree 0..=max, grouped by degree.
    pub fn normal_words(&self, max: usize) -> Vec<Vec<Word>> {
        let alpha = self.alphabet();
        let mut by_deg: Vec<Vec<Word>> = alloc::vec![Vec::new(); max + 1];
        by_deg[0].push(Word::empty());
        for d in 1..=max {
            let mut level = Vec::new();
            for (l, g) in alpha.gens.iter().enumerate() {
                let w = g.z_degree as usize;
                if w > d {
                    continue;
                }
                for prefix in &by_deg[d - w] {
                    let mut cand = prefix.0.clone();
                    cand.push(l as Letter);
                    // The prefix is normal, so only suffix matches can appear.
                    let hit = self.lhs_lens.iter().any(|&len| {
                        len <= cand.len() && self.by_lhs.contains_key(&cand[cand.len() - len..])
                    });
                    if !hit {
                        level.push(Word(cand));
                    }
                }
            }
            level.sort_by(|a, b| self.order.compare(b, a));
            by_deg[d] = level;
        }
        by_deg
    }

    pub fn rule_poly(&self, i: usize) -> NcPoly {
        let r = &self.rules[i];
        let mut p = -&r.rhs;
        p.add_term(r.lhs.clone(), Q::one());
        p
    }

    pub fn rule_with_lhs(&self, lhs: &Word) -> Option<&Rule> {
        self.by_lhs.get(&lhs.0).map(|&i| &self.rules[i])
    }
}

/// True when every coefficient of `p` is zero after reduction; convenience for tests.
pub fn reduces_to_zero(rs: &RewriteSystem, p: &NcPoly) -> bool {
    rs.normal_form(p).map(|n| n.is_zero()).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::q;
    use alloc::vec;

    fn commutative() -> Presentation {
        Presentation::new(
            "comm",
            Alphabet::new(&["x", "y"]),
            vec![NcPoly::from_terms(&[(1, &[0, 1]), (-1, &[1, 0])])],
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn commutative_pair_is_one_rule() {
        let rs = RewriteSystem::new(&commutative(), 4).unwrap();
        assert_eq!(rs.rules.len(), 1);
        assert_eq!(rs.rules[0].lhs, Word(vec![0, 1]));
        assert_eq!(rs.rules[0].rhs, NcPoly::from_terms(&[(1, &[1, 0])]));
        assert_eq!(rs.confluent_up_to, 4);
        assert!(rs.is_globally_confluent());
        let counts: Vec<usize> = rs.normal_words(4).iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn bound_below_relation_degree_is_rejected() {
        assert!(matches!(RewriteSystem::new(&commutative(), 1), Err(Error::OutOfCertifiedRange { .. })));
    }

    #[test]
    fn unit_in_ideal_is_degenerate() {
        let p = Presentation::new(
            "bad",
            Alphabet::new(&["x"]),
            vec![NcPoly::from_terms(&[(1, &[0]), (-1, &[])]), NcPoly::from_terms(&[(1, &[0])])],
            vec![],
        )
        .unwrap();
        assert!(matches!(RewriteSystem::new(&p, 3), Err(Error::DegenerateRelation { .. })));
    }

    #[test]
    fn zero_relation_is_rejected() {
        let z = NcPoly::from_terms(&[(1, &[0, 0]), (-1, &[0, 0])]);
        assert!(Presentation::new("z", Alphabet::new(&["x"]), vec![z], vec![]).is_err());
    }

    #[test]
    fn normal_form_degree_guard() {
        let rs = RewriteSystem::new(&commutative(), 3).unwrap();
        let big = NcPoly::monomial(Word(vec![0; 4]), q(1));
        assert!(matches!(rs.normal_form(&big), Err(Error::OutOfCertifiedRange { degree: 4, bound: 3 })));
    }

    #[test]
    fn trace_replays_to_normal_form() {
        let rs = RewriteSystem::new(&commutative(), 4).unwrap();
        let x = NcPoly::from_terms(&[(2, &[0, 1, 0]), (1, &[0, 0, 1])]);
        let (steps, nf) = rs.derivation_trace(&x).unwrap();
        assert!(!steps.is_empty());
        assert_eq!(rs.replay(&x, &steps), nf);
        assert_eq!(nf, NcPoly::from_terms(&[(3, &[1, 0, 0])]));
        let (none, same) = rs.derivation_trace(&nf).unwrap();
        assert!(none.is_empty());
        assert_eq!(same, nf);
    }

    #[test]
    fn overlap_creates_rule() {
        // xy = x, yx = y: the overlap xyx gives x·x vs x·y... must resolve to a new rule.
        let p = Presentation::new(
            "ov",
            Alphabet::new(&["x", "y"]),
            vec![
                NcPoly::from_terms(&[(1, &[0, 0]), (-1, &[1, 1])]),
                NcPoly::from_terms(&[(1, &[0, 1])]),
            ],
            vec![],
        )
        .unwrap();
        let rs = RewriteSystem::new(&p, 5).unwrap();
        // xx → yy, xy → 0; overlap x·x·y: (yy)y vs x(0) → yyy = 0.
        assert!(rs.rules.iter().any(|r| r.lhs == Word(vec![1, 1, 1])));
        assert_eq!(rs.confluent_up_to, 5);
    }
}
