//! Finite-dimensional bracket algebras given by structure constants.
//!
//! One table type covers Lie algebras, Lie superalgebras and color Lie
//! algebras: besides the constants `⟨bᵢ, bⱼ⟩ = Σ c[i][j][k] b_k` each table
//! stores the commutation sign `ε(i, j)` for which
//! `bᵢ bⱼ − ε(i, j) bⱼ bᵢ = ⟨bᵢ, bⱼ⟩` holds in the enveloping algebra.
//!
//! Two-dimensional subalgebras of three-dimensional tables are handled here:
//! closure, the known families, a randomized completeness audit, and
//! admissibility of functionals by a closed-form condition and by properness
//! of the induced cyclic module.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bivariate::{det3, Bivariate};
use crate::error::{Error, Result};
use crate::filtered::{filtered_left_quotient, shifted};
use crate::linalg::{coords_in_span, in_span, intersection_dim, rank};
use crate::ncalg::{q, qf, Alphabet, GroupElem, GroupKind, Letter, NcPoly, Q, Word};
use crate::rewrite::RewriteSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BracketKind {
    Lie,
    Super,
    Color,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketTable {
    pub name: String,
    pub kind: BracketKind,
    pub basis: Vec<String>,
    consts: Vec<Vec<Vec<Q>>>,
    pub eps: Vec<Vec<i8>>,
    pub grading: Option<(GroupKind, Vec<GroupElem>)>,
}

impl BracketTable {
    /// An all-zero table. `eps` must be symmetric with entries ±1.
    pub fn new(
        name: &str,
        kind: BracketKind,
        basis: &[&str],
        eps: Vec<Vec<i8>>,
        grading: Option<(GroupKind, Vec<GroupElem>)>,
    ) -> Self {
        let n = basis.len();
        BracketTable {
            name: name.into(),
            kind,
            basis: basis.iter().map(|s| s.to_string()).collect(),
            consts: vec![vec![vec![Q::zero(); n]; n]; n],
            eps,
            grading,
        }
    }

    /// Super sign rule `(−1)^{|i||j|}` from ℤ₂ labels.
    pub fn super_signs(labels: &[GroupElem]) -> Vec<Vec<i8>> {
        labels.iter().map(|a| labels.iter().map(|b| if a.0 & b.0 == 1 { -1 } else { 1 }).collect()).collect()
    }

    /// Sets `⟨bᵢ, bⱼ⟩` and the value it forces on `⟨bⱼ, bᵢ⟩`.
    pub fn set(&mut self, i: usize, j: usize, v: Vec<Q>) {
        let s = -Q::from_integer(self.eps[j][i].into());
        self.consts[j][i] = v.iter().map(|x| x * &s).collect();
        self.consts[i][j] = v;
    }

    pub fn set_named(&mut self, a: &str, b: &str, terms: &[(i64, &str)]) {
        let (i, j) = (self.expect_index(a), self.expect_index(b));
        let v = self.vector(terms);
        self.set(i, j, v);
    }

    fn expect_index(&self, name: &str) -> usize {
        self.index_of(name).unwrap_or_else(|| panic!("no basis element {name}"))
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == name)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        v[i] = Q::one();
        v
    }

    /// `Σ c·b` from (integer coefficient, basis name) pairs.
    pub fn vector(&self, terms: &[(i64, &str)]) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        for (c, name) in terms {
            v[self.expect_index(name)] += q(*c);
        }
        v
    }

    pub fn structure(&self, i: usize, j: usize) -> &[Q] {
        &self.consts[i][j]
    }

    pub fn labels(&self) -> Option<&[GroupElem]> {
        self.grading.as_ref().map(|(_, l)| l.as_slice())
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let n = self.dim();
        let mut out = vec![Q::zero(); n];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let f = xi * yj;
                for (k, c) in self.consts[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &f * c;
                    }
                }
            }
        }
        out
    }

    /// The sign table must be symmetric ±1, and the constants must respect it.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let e = self.eps[i][j];
                if e.abs() != 1 || e != self.eps[j][i] {
                    return Err(Error::InvalidPresentation(format!("{}: bad sign at ({i},{j})", self.name)));
                }
                let s = -Q::from_integer(e.into());
                for k in 0..n {
                    if self.consts[j][i][k] != &self.consts[i][j][k] * &s {
                        return Err(Error::InvalidPresentation(format!(
                            "{}: constants at ({i},{j}) do not respect the sign rule",
                            self.name
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// A vector of the table as a degree-1 polynomial over `alpha`, matched by name.
    pub fn to_poly(&self, v: &[Q], alpha: &Alphabet) -> Result<NcPoly> {
        let mut p = NcPoly::zero();
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let l = alpha.index_of(&self.basis[i]).ok_or_else(|| Error::UnknownGenerator(self.basis[i].clone()))?;
            p.add_term(Word::letter(l), c.clone());
        }
        Ok(p)
    }

    /// `bᵢbⱼ − ε bⱼbᵢ − ⟨bᵢ,bⱼ⟩·t` for every `i < j`; `t` omitted when `homogenizer` is `None`.
    pub fn enveloping_relations(&self, alpha: &Alphabet, homogenizer: Option<Letter>) -> Result<Vec<NcPoly>> {
        let n = self.dim();
        let letter = |i: usize| alpha.index_of(&self.basis[i]).ok_or_else(|| Error::UnknownGenerator(self.basis[i].clone()));
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (letter(i)?, letter(j)?);
                let mut r = NcPoly::zero();
                r.add_term(Word(vec![a, b]), Q::one());
                r.add_term(Word(vec![b, a]), -Q::from_integer(self.eps[i][j].into()));
                let mut br = self.to_poly(&self.consts[i][j], alpha)?;
                if let Some(t) = homogenizer {
                    br = &br * &NcPoly::letter(t);
                }
                out.push(&r - &br);
            }
        }
        Ok(out)
    }

    /// Every enveloping relation reduces to zero in `rs`.
    pub fn check_presentation(&self, rs: &RewriteSystem) -> Result<()> {
        let t = rs.presentation.homogenizer();
        for r in self.enveloping_relations(rs.alphabet(), t)? {
            if !rs.normal_form(&r)?.is_zero() {
                return Err(Error::InvalidPresentation(format!(
                    "{} is not consistent with {}: {} ≠ 0",
                    self.name,
                    rs.presentation.name,
                    rs.alphabet().fmt_poly(&r)
                )));
            }
        }
        Ok(())
    }
}

/// Whether the span of `rows` is the sum of its intersections with the
/// homogeneous components defined by `labels`.
pub fn graded_span(rows: &[Vec<Q>], labels: &[GroupElem]) -> bool {
    let n = labels.len();
    let groups: BTreeSet<GroupElem> = labels.iter().copied().collect();
    let total: usize = groups
        .iter()
        .map(|g| {
            let comp: Vec<Vec<Q>> = (0..n)
                .filter(|&i| labels[i] == *g)
                .map(|i| {
                    let mut v = vec![Q::zero(); n];
                    v[i] = Q::one();
                    v
                })
                .collect();
            intersection_dim(rows, &comp)
        })
        .sum();
    total == rank(rows)
}

/// A two-dimensional subspace, given by a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraSpec {
    pub basis: [Vec<Q>; 2],
}

impl SubalgebraSpec {
    pub fn new(v1: Vec<Q>, v2: Vec<Q>) -> Result<Self> {
        let r = rank(&[v1.clone(), v2.clone()]);
        if r != 2 {
            return Err(Error::RankDeficient { expected: 2, found: r });
        }
        Ok(SubalgebraSpec { basis: [v1, v2] })
    }

    pub fn rows(&self) -> Vec<Vec<Q>> {
        self.basis.to_vec()
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        in_span(&self.basis, v)
    }

    pub fn coords(&self, v: &[Q]) -> Option<[Q; 2]> {
        coords_in_span(&self.basis, v).map(|c| [c[0].clone(), c[1].clone()])
    }

    pub fn same_span(&self, other: &SubalgebraSpec) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// New basis `m · basis`; `m` must be invertible.
    pub fn change_basis(&self, m: [[Q; 2]; 2]) -> Result<Self> {
        let comb = |r: &[Q; 2]| -> Vec<Q> {
            self.basis[0].iter().zip(&self.basis[1]).map(|(a, b)| &r[0] * a + &r[1] * b).collect()
        };
        SubalgebraSpec::new(comb(&m[0]), comb(&m[1]))
    }
}

/// Values of a functional on the two basis vectors of a [`SubalgebraSpec`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional {
    pub values: [Q; 2],
}

impl Functional {
    pub fn new(a: Q, b: Q) -> Self {
        Functional { values: [a, b] }
    }

    pub fn zero() -> Self {
        Functional::new(Q::zero(), Q::zero())
    }

    pub fn eval(&self, s: &SubalgebraSpec, x: &[Q]) -> Option<Q> {
        s.coords(x).map(|c| &c[0] * &self.values[0] + &c[1] * &self.values[1])
    }

    /// The same functional expressed on the basis of `to` (same span as `from`).
    pub fn rebase(&self, from: &SubalgebraSpec, to: &SubalgebraSpec) -> Option<Functional> {
        Some(Functional::new(self.eval(from, &to.basis[0])?, self.eval(from, &to.basis[1])?))
    }
}

pub fn bracket(x: &[Q], y: &[Q], t: &BracketTable) -> Vec<Q> {
    t.bracket(x, y)
}

pub fn is_subalgebra(s: &SubalgebraSpec, t: &BracketTable) -> bool {
    s.basis.iter().all(|x| s.basis.iter().all(|y| s.contains(&t.bracket(x, y))))
}

pub fn is_graded_subspace(s: &SubalgebraSpec, labels: &[GroupElem]) -> bool {
    graded_span(&s.rows(), labels)
}

/// Spanning set of `⟨S, S⟩`.
pub fn derived(s: &SubalgebraSpec, t: &BracketTable) -> Vec<Vec<Q>> {
    let mut out = Vec::new();
    for x in &s.basis {
        for y in &s.basis {
            out.push(t.bracket(x, y));
        }
    }
    out
}

fn ad_matrix(t: &BracketTable, x: &[Q]) -> Vec<Vec<Q>> {
    // Column j is ⟨x, bⱼ⟩.
    let n = t.dim();
    let cols: Vec<Vec<Q>> = (0..n).map(|j| t.bracket(x, &t.basis_vector(j))).collect();
    (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect()
}

fn mat_mul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).fold(Q::zero(), |acc, k| acc + &a[i][k] * &b[k][j])).collect()).collect()
}

/// `S = span(bᵢ, v)` with `v` in the span of the other basis vectors.
fn split_off_at(s: &SubalgebraSpec, n: usize, i: usize) -> Option<Vec<Q>> {
    let mut e = vec![Q::zero(); n];
    e[i] = Q::one();
    if !s.contains(&e) {
        return None;
    }
    // Kill the i-th coordinate of whichever basis vector is not parallel to e.
    s.basis.iter().find_map(|b| {
        let w: Vec<Q> = b.iter().enumerate().map(|(k, c)| if k == i { Q::zero() } else { c.clone() }).collect();
        (!w.iter().all(Zero::is_zero)).then_some(w)
    })
}

/// The first `i` with `bᵢ ∈ S`, and the complementary vector.
fn split_off_basis_vector(s: &SubalgebraSpec, n: usize) -> Option<(usize, Vec<Q>)> {
    (0..n).find_map(|i| split_off_at(s, n, i).map(|v| (i, v)))
}

/// For the sl(1|1) family: `(α, β)` with `S = span(h, αe + βf)`, first nonzero entry 1.
pub fn sl11_parameters(t: &BracketTable, s: &SubalgebraSpec) -> Result<(Q, Q)> {
    let (e, f, h) = sl11_indices(t)?;
    let v = split_off_at(s, 3, h).ok_or_else(|| Error::NotClassified("h is not in the subspace".into()))?;
    let lead = if v[e].is_zero() { v[f].clone() } else { v[e].clone() };
    Ok((&v[e] / &lead, &v[f] / &lead))
}

fn sl11_indices(t: &BracketTable) -> Result<(usize, usize, usize)> {
    match (t.index_of("e"), t.index_of("f"), t.index_of("h")) {
        (Some(e), Some(f), Some(h)) if t.dim() == 3 => Ok((e, f, h)),
        _ => Err(Error::NotClassified(format!("{} has no e, f, h basis", t.name))),
    }
}

/// For the color family: `(i, j, k, μ)` with `S = span(aᵢ, aⱼ + μ a_k)`, `j < k`, `μ = ±1`
/// (indices are 0-based positions in the table basis).
pub fn color_parameters(s: &SubalgebraSpec) -> Result<(usize, usize, usize, Q)> {
    let (i, v) = split_off_basis_vector(s, 3)
        .ok_or_else(|| Error::NotClassified("no basis vector lies in the subspace".into()))?;
    let others: Vec<usize> = (0..3).filter(|&k| k != i).collect();
    let (j, k) = (others[0], others[1]);
    if v[j].is_zero() || v[k].is_zero() {
        return Err(Error::NotClassified("the second vector is a basis vector".into()));
    }
    let mu = &v[k] / &v[j];
    if mu.abs() != Q::one() {
        return Err(Error::NotClassified(format!("ratio {} is not ±1", crate::ncalg::fmt_q(&mu))));
    }
    Ok((i, j, k, mu))
}

/// Which claimed family `s` belongs to, as a printable tag.
pub fn claimed_family(t: &BracketTable, s: &SubalgebraSpec) -> Option<String> {
    match t.name.as_str() {
        "sl11" => sl11_parameters(t, s).ok().map(|_| "span(h, αe+βf)".into()),
        "slc" => color_parameters(s).ok().map(|(i, j, k, mu)| {
            let sign = if mu.is_positive() { '+' } else { '-' };
            format!("span({}, {}{sign}{})", t.basis[i], t.basis[j], t.basis[k])
        }),
        "sl2" => {
            // Borel: one-dimensional derived algebra spanned by an ad-nilpotent element.
            let d = derived(s, t);
            if rank(&d) != 1 || !is_subalgebra(s, t) {
                return None;
            }
            let x = d.into_iter().find(|v| !v.iter().all(Zero::is_zero))?;
            let ad = ad_matrix(t, &x);
            let cube = mat_mul(&mat_mul(&ad, &ad), &ad);
            cube.iter().flatten().all(Zero::is_zero).then(|| "borel".into())
        }
        _ => None,
    }
}

/// Parameter samples of each claimed family, including the chart boundaries.
pub fn claimed_members(t: &BracketTable) -> Result<Vec<(String, SubalgebraSpec)>> {
    let params = [q(0), q(1), q(-1), q(2), qf(1, 2), qf(-3, 7), q(5)];
    let mut out = Vec::new();
    match t.name.as_str() {
        "sl11" => {
            let mut ab: Vec<(Q, Q)> = vec![(q(1), q(0)), (q(0), q(1))];
            ab.extend(params.iter().skip(1).map(|p| (q(1), p.clone())));
            for (a, b) in ab {
                let s = SubalgebraSpec::new(t.vector(&[(1, "h")]), {
                    let mut v = t.vector(&[]);
                    v[t.expect_index("e")] = a.clone();
                    v[t.expect_index("f")] = b.clone();
                    v
                })?;
                out.push((format!("(α:β)=({}:{})", crate::ncalg::fmt_q(&a), crate::ncalg::fmt_q(&b)), s));
            }
        }
        "slc" => {
            for i in 0..3 {
                let others: Vec<usize> = (0..3).filter(|&k| k != i).collect();
                for mu in [1i64, -1] {
                    let mut v = vec![Q::zero(); 3];
                    v[others[0]] = q(1);
                    v[others[1]] = q(mu);
                    let s = SubalgebraSpec::new(t.basis_vector(i), v)?;
                    out.push((claimed_family(t, &s).unwrap_or_default(), s));
                }
            }
        }
        "sl2" => {
            out.push(("span(f, h)".into(), SubalgebraSpec::new(t.vector(&[(1, "f")]), t.vector(&[(1, "h")]))?));
            for s in &params {
                // Stabilizer of the line through (1, s): span(h + 2s·f, e + s²·f).
                let mut v1 = t.vector(&[(1, "h")]);
                v1[t.expect_index("f")] = q(2) * s;
                let mut v2 = t.vector(&[(1, "e")]);
                v2[t.expect_index("f")] = s * s;
                out.push((format!("stab(1:{})", crate::ncalg::fmt_q(s)), SubalgebraSpec::new(v1, v2)?));
            }
        }
        other => return Err(Error::NotClassified(format!("no claimed families for {other}"))),
    }
    Ok(out)
}

/// Small-height rational: half the draws come from a pool of special values so
/// that measure-zero loci get hit.
pub fn small_rational(rng: &mut impl Rng) -> Q {
    const POOL: [(i64, i64); 7] = [(0, 1), (1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 2)];
    if rng.gen_bool(0.5) {
        let (n, d) = POOL[rng.gen_range(0..POOL.len())];
        qf(n, d)
    } else {
        qf(rng.gen_range(-20..=20), rng.gen_range(1..=20))
    }
}

/// A random rank-2 subspace of ℚ³ in echelon chart `chart` (pivot columns
/// (0,1), (0,2) or (1,2)), returned in a randomly changed basis.
pub fn random_subspace(rng: &mut impl Rng, chart: usize) -> SubalgebraSpec {
    let (a, b) = (small_rational(rng), small_rational(rng));
    let (v1, v2) = match chart {
        0 => (vec![q(1), q(0), a], vec![q(0), q(1), b]),
        1 => (vec![q(1), a, q(0)], vec![q(0), q(0), q(1)]),
        _ => (vec![q(0), q(1), q(0)], vec![q(0), q(0), q(1)]),
    };
    let s = SubalgebraSpec::new(v1, v2).expect("echelon rows are independent");
    loop {
        let m = [[small_rational(rng), small_rational(rng)], [small_rational(rng), small_rational(rng)]];
        if let Ok(t) = s.change_basis(m) {
            return t;
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct ClassificationReport {
    pub table: String,
    /// Family members checked for closure, with the result.
    pub members: Vec<(String, bool)>,
    pub samples: usize,
    pub per_chart: [usize; 3],
    pub closed: usize,
    /// Distinct family tags met among the closed samples.
    pub families_seen: BTreeMap<String, usize>,
    pub counterexamples: Vec<SubalgebraSpec>,
}

impl ClassificationReport {
    pub fn pass(&self) -> bool {
        self.counterexamples.is_empty() && self.members.iter().all(|(_, c)| *c)
    }
}

pub fn classify_2dim_subalgebras(t: &BracketTable, samples: usize, seed: u64) -> Result<ClassificationReport> {
    if t.dim() != 3 {
        return Err(Error::Dimension(format!("{} has dimension {}, expected 3", t.name, t.dim())));
    }
    let mut rep = ClassificationReport { table: t.name.clone(), samples, ..Default::default() };
    for (tag, s) in claimed_members(t)? {
        rep.members.push((tag, is_subalgebra(&s, t)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 0..samples {
        let chart = n % 3;
        rep.per_chart[chart] += 1;
        let s = random_subspace(&mut rng, chart);
        if !is_subalgebra(&s, t) {
            continue;
        }
        rep.closed += 1;
        match claimed_family(t, &s) {
            Some(tag) => *rep.families_seen.entry(tag).or_default() += 1,
            None => rep.counterexamples.push(s),
        }
    }
    Ok(rep)
}

/// Columns of the five-vector coefficient matrix for `v₁ = a₁ + x a₃`, `v₂ = a₂ + y a₃`:
/// `v₁, v₂, ⟨v₁,v₁⟩, ⟨v₂,v₂⟩, ⟨v₁,v₂⟩`, computed from the table.
pub fn color_closure_matrix(t: &BracketTable) -> [[Bivariate; 5]; 3] {
    let c = |x: &Q| Bivariate::constant(x.clone());
    // v = const part + x·(x-part) + y·(y-part), per coordinate.
    let v1 = [Bivariate::constant(q(1)), Bivariate::zero(), Bivariate::x()];
    let v2 = [Bivariate::zero(), Bivariate::constant(q(1)), Bivariate::y()];
    let br = |a: &[Bivariate; 3], b: &[Bivariate; 3]| -> [Bivariate; 3] {
        let mut out = [Bivariate::zero(), Bivariate::zero(), Bivariate::zero()];
        for i in 0..3 {
            for j in 0..3 {
                let f = &a[i] * &b[j];
                for (k, slot) in out.iter_mut().enumerate() {
                    *slot = &*slot + &(&f * &c(&t.structure(i, j)[k]));
                }
            }
        }
        out
    };
    let cols = [v1.clone(), v2.clone(), br(&v1, &v1), br(&v2, &v2), br(&v1, &v2)];
    core::array::from_fn(|r| core::array::from_fn(|col| cols[col][r].clone()))
}

/// All ten 3×3 minors of [`color_closure_matrix`].
pub fn color_closure_minors(t: &BracketTable) -> Vec<Bivariate> {
    let m = color_closure_matrix(t);
    let mut out = Vec::new();
    for a in 0..5 {
        for b in a + 1..5 {
            for c in b + 1..5 {
                let sub: [[Bivariate; 3]; 3] = core::array::from_fn(|r| [m[r][a].clone(), m[r][b].clone(), m[r][c].clone()]);
                out.push(det3(&sub));
            }
        }
    }
    out
}

/// The single relation condition for `S = span(aᵢ, v)`, `v = aⱼ + μ a_k`, with
/// `x = φ(aᵢ)`, `y = φ(v)`: `aᵢv + vaᵢ = ⟨aᵢ, v⟩` acting on `k_φ` gives
/// `2xy − (x·c₁ + y·c₂)` where `⟨aᵢ, v⟩ = c₁aᵢ + c₂v`.
pub fn color_condition_poly(t: &BracketTable, s: &SubalgebraSpec) -> Result<Bivariate> {
    let (i, j, k, mu) = color_parameters(s)?;
    let ai = t.basis_vector(i);
    let mut v = t.basis_vector(j);
    v[k] = mu;
    let spec = SubalgebraSpec::new(ai.clone(), v.clone())?;
    let c = spec.coords(&t.bracket(&ai, &v)).ok_or(Error::NotClosed)?;
    let xy = &Bivariate::x() * &Bivariate::y();
    Ok(&(&xy + &xy) - &(&Bivariate::x().scale(&c[0]) + &Bivariate::y().scale(&c[1])))
}

/// Outcome of the closed-form admissibility test, with the condition that decided it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub admissible: bool,
    pub condition: String,
}

pub fn closed_form_admissible(t: &BracketTable, s: &SubalgebraSpec, phi: &Functional) -> Result<ClosedForm> {
    if !is_subalgebra(s, t) {
        return Err(Error::NotClosed);
    }
    let fq = crate::ncalg::fmt_q;
    match (t.kind, t.name.as_str()) {
        (BracketKind::Super, "sl11") => {
            let (a, b) = sl11_parameters(t, s)?;
            let (e, f, h) = sl11_indices(t)?;
            let mut v = vec![Q::zero(); 3];
            v[e] = a.clone();
            v[f] = b.clone();
            let lambda = phi.eval(s, &t.basis_vector(h)).ok_or(Error::NotClosed)?;
            let gamma = phi.eval(s, &v).ok_or(Error::NotClosed)?;
            let lhs = &gamma * &gamma;
            let rhs = &(&a * &b) * &lambda;
            Ok(ClosedForm {
                admissible: lhs == rhs,
                condition: format!("φ(αe+βf)² = αβ·φ(h): {} vs {}", fq(&lhs), fq(&rhs)),
            })
        }
        (BracketKind::Color, _) => {
            let (i, j, k, mu) = color_parameters(s)?;
            let mut v = t.basis_vector(j);
            v[k] = mu.clone();
            let x = phi.eval(s, &t.basis_vector(i)).ok_or(Error::NotClosed)?;
            let y = phi.eval(s, &v).ok_or(Error::NotClosed)?;
            let half = &mu / q(2);
            let ok = y.is_zero() || x == half;
            Ok(ClosedForm {
                admissible: ok,
                condition: format!("φ(v) = 0 or φ(a_i) = μ/2: φ(v) = {}, φ(a_i) = {}, μ/2 = {}", fq(&y), fq(&x), fq(&half)),
            })
        }
        (BracketKind::Lie, _) => {
            let ok = derived(s, t).iter().all(|d| phi.eval(s, d).is_some_and(|x| x.is_zero()));
            Ok(ClosedForm { admissible: ok, condition: "φ vanishes on ⟨S, S⟩".into() })
        }
        (BracketKind::Super, _) => super_closed_form(t, s, phi),
    }
}

/// General super rule on a homogeneous basis `x, y` of `S`:
/// `φ(⟨x,y⟩) = (1 − (−1)^{|x||y|}) φ(x)φ(y)`.
fn super_closed_form(t: &BracketTable, s: &SubalgebraSpec, phi: &Functional) -> Result<ClosedForm> {
    let labels = t.labels().ok_or_else(|| Error::UngradedAlphabet(t.name.clone()))?;
    if !is_graded_subspace(s, labels) {
        return Err(Error::NotClassified("subspace is not ℤ₂-graded".into()));
    }
    let n = t.dim();
    let mut homog: Vec<(u8, Vec<Q>)> = Vec::new();
    for parity in [0u8, 1] {
        // Vectors of S inside this component: solve for combinations with zero off-parity coordinates.
        let constraints: Vec<Vec<Q>> = (0..n)
            .filter(|&i| labels[i].0 != parity)
            .map(|i| vec![s.basis[0][i].clone(), s.basis[1][i].clone()])
            .collect();
        let ker = if constraints.is_empty() { vec![vec![q(1), q(0)], vec![q(0), q(1)]] } else { crate::linalg::kernel(&constraints, 2) };
        for c in ker {
            let v: Vec<Q> = (0..n).map(|i| &c[0] * &s.basis[0][i] + &c[1] * &s.basis[1][i]).collect();
            homog.push((parity, v));
        }
    }
    for (px, x) in &homog {
        for (py, y) in &homog {
            let lhs = phi.eval(s, &t.bracket(x, y)).ok_or(Error::NotClosed)?;
            let fx = phi.eval(s, x).ok_or(Error::NotClosed)?;
            let fy = phi.eval(s, y).ok_or(Error::NotClosed)?;
            let rhs = if px & py == 1 { q(2) * fx * fy } else { Q::zero() };
            if lhs != rhs {
                return Ok(ClosedForm { admissible: false, condition: "homogeneous-basis super condition".into() });
            }
        }
    }
    Ok(ClosedForm { admissible: true, condition: "homogeneous-basis super condition".into() })
}

/// Properness of `U / U{x − φ(x) : x ∈ S}` in filtration degree ≤ `n`.
pub fn properness_admissible(
    t: &BracketTable,
    s: &SubalgebraSpec,
    phi: &Functional,
    env: &RewriteSystem,
    n: usize,
) -> Result<bool> {
    let gens = twisted_generators(t, s, phi, env.alphabet(), None)?;
    Ok(filtered_left_quotient(env, &gens, n, 0)?.is_proper())
}

/// `x − φ(x)·c` for each basis vector `x` of `S`, where `c` is the letter
/// `scalar` (a homogenizer) or the unit when `None`.
pub fn twisted_generators(
    t: &BracketTable,
    s: &SubalgebraSpec,
    phi: &Functional,
    alpha: &Alphabet,
    scalar: Option<Letter>,
) -> Result<Vec<NcPoly>> {
    s.basis
        .iter()
        .zip(&phi.values)
        .map(|(x, c)| {
            let p = t.to_poly(x, alpha)?;
            Ok(match scalar {
                None => shifted(&p, c),
                Some(l) => &p - &NcPoly::letter(l).scale(c),
            })
        })
        .collect()
}

/// Both routes; an error if they disagree.
pub fn admissible_functional(
    s: &SubalgebraSpec,
    phi: &Functional,
    t: &BracketTable,
    env: &RewriteSystem,
    n: usize,
) -> Result<bool> {
    let cf = closed_form_admissible(t, s, phi)?.admissible;
    let pr = properness_admissible(t, s, phi, env, n)?;
    if cf != pr {
        return Err(Error::RoutesDisagree { closed_form: cf, properness: pr });
    }
    Ok(cf)
}
