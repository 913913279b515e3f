//! Line modules `A/(Au + Av)`, the modules `L_(S,φ)` built from a
//! subalgebra and a functional, homogenized induced modules, and their
//! degree-by-degree certification.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::filtered::{dehomogenize, filtered_left_quotient, DEFAULT_SLACK};
use crate::geometry::{form, form_of, lines_meet, Form, Line};
use crate::hilbert::{cyclic_left_module, HilbertFunction};
use crate::linalg::{kernel, rank};
use crate::liealg::{
    closed_form_admissible, graded_span, is_subalgebra, sl11_parameters, twisted_generators, BracketTable, Functional,
    SubalgebraSpec,
};
use crate::ncalg::{fmt_q, q, Letter, NcPoly, Q};
use crate::rewrite::{Presentation, RewriteSystem};

/// A cyclic module `A / (A·g₁ + A·g₂)` with degree-1 generators.
#[derive(Clone, Debug)]
pub struct LineModuleSpec<'a> {
    pub algebra: &'a RewriteSystem,
    pub generators: [NcPoly; 2],
}

impl<'a> LineModuleSpec<'a> {
    pub fn new(algebra: &'a RewriteSystem, u: NcPoly, v: NcPoly) -> Result<Self> {
        let alpha = algebra.alphabet();
        let mut rows = Vec::new();
        for g in [&u, &v] {
            if g.homogeneous_degree(alpha) != Some(1) {
                return Err(Error::NonHomogeneousGenerator(alpha.fmt_poly(g)));
            }
            rows.push(linear_coords(algebra, g));
        }
        let r = rank(&rows);
        if r != 2 {
            return Err(Error::RankDeficient { expected: 2, found: r });
        }
        Ok(LineModuleSpec { algebra, generators: [u, v] })
    }

    /// The line `V(u, v)` in ℙ³ (four-generator algebras only).
    pub fn line(&self) -> Result<Line> {
        Line::from_polys(self.algebra.alphabet(), &self.generators[0], &self.generators[1])
    }

    pub fn fmt_generators(&self) -> Vec<String> {
        self.generators.iter().map(|g| self.algebra.alphabet().fmt_poly(g)).collect()
    }

    pub fn hilbert(&self, n: usize) -> Result<HilbertFunction> {
        Ok(cyclic_left_module(self.algebra, &self.generators, n)?.hilbert())
    }
}

fn linear_coords(rs: &RewriteSystem, p: &NcPoly) -> Vec<Q> {
    let mut v = vec![Q::zero(); rs.alphabet().len()];
    for (w, c) in p.terms() {
        v[w.0[0] as usize] = c.clone();
    }
    v
}

/// `x − φ(x)·t` for each basis vector `x` of `S`, over a homogenized algebra.
pub fn build_twisted<'a>(
    algebra: &'a RewriteSystem,
    table: &BracketTable,
    s: &SubalgebraSpec,
    phi: &Functional,
) -> Result<LineModuleSpec<'a>> {
    if !is_subalgebra(s, table) {
        return Err(Error::NotClosed);
    }
    let t = algebra
        .presentation
        .homogenizer()
        .ok_or_else(|| Error::InvalidPresentation(format!("{} has no central homogenizer", algebra.presentation.name)))?;
    let mut g = twisted_generators(table, s, phi, algebra.alphabet(), Some(t))?;
    let v = g.pop().expect("two generators");
    let u = g.pop().expect("two generators");
    LineModuleSpec::new(algebra, u, v)
}

/// `L_(S,φ) = Ĥ / (Ĥ(h − φ(h)t) + Ĥ(αe + βf − φ(αe+βf)t))`, for `S = span(h, αe + βf)`.
pub fn build_l_h_phi<'a>(
    algebra: &'a RewriteSystem,
    table: &BracketTable,
    s: &SubalgebraSpec,
    phi: &Functional,
) -> Result<LineModuleSpec<'a>> {
    let (a, b) = sl11_parameters(table, s)?;
    let h = table.vector(&[(1, "h")]);
    let mut v = table.vector(&[]);
    v[table.index_of("e").expect("e")] = a;
    v[table.index_of("f").expect("f")] = b;
    let canon = SubalgebraSpec::new(h, v)?;
    let phi = phi.rebase(s, &canon).ok_or(Error::NotClosed)?;
    build_twisted(algebra, table, &canon, &phi)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CertificationReport {
    pub target: String,
    pub found: HilbertFunction,
    pub expected: HilbertFunction,
    pub per_degree: Vec<bool>,
    /// Named side checks (geometry, annihilators, torsion).
    pub checks: Vec<(String, bool)>,
    pub notes: Vec<String>,
}

impl CertificationReport {
    pub fn pass(&self) -> bool {
        self.per_degree.iter().all(|&b| b) && self.checks.iter().all(|(_, b)| *b)
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.per_degree.iter().position(|b| !b)
    }
}

fn compare(target: &str, found: HilbertFunction, expected: HilbertFunction) -> CertificationReport {
    let per_degree = expected.dims.iter().enumerate().map(|(d, e)| found.dims.get(d) == Some(e)).collect();
    CertificationReport { target: target.into(), found, expected, per_degree, ..Default::default() }
}

/// Passes iff the graded dimensions are `1, 2, …, n+1`.
pub fn certify_line_module(m: &LineModuleSpec, n: usize) -> Result<CertificationReport> {
    let found = m.hilbert(n)?;
    Ok(compare("line module", found, HilbertFunction::line(n)))
}

/// The generators span a subspace of `A₁` that is a sum of homogeneous pieces.
pub fn is_z2_graded_line_module(m: &LineModuleSpec) -> Result<bool> {
    let alpha = m.algebra.alphabet();
    let labels: Vec<_> = (0..alpha.len())
        .map(|l| alpha.group_degree(&crate::ncalg::Word::letter(l as Letter)))
        .collect::<Result<_>>()?;
    let rows: Vec<Vec<Q>> = m.generators.iter().map(|g| linear_coords(m.algebra, g)).collect();
    Ok(graded_span(&rows, &labels))
}

/// Left multiplication by `x` (degree 1) is injective `M_d → M_{d+1}` for every `d < n`.
pub fn acts_without_torsion(m: &LineModuleSpec, x: &NcPoly, n: usize) -> Result<bool> {
    let rows: Vec<Vec<Q>> = m.generators.iter().map(|g| linear_coords(m.algebra, g)).collect();
    let mut with_x = rows.clone();
    with_x.push(linear_coords(m.algebra, x));
    if rank(&with_x) == rank(&rows) {
        return Ok(false);
    }
    let module = cyclic_left_module(m.algebra, &m.generators, n)?;
    for d in 0..n {
        if module.multiplication_rank(x, d)? != module.pieces[d].dim() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Multiplication by the central letter `t` is injective in each degree below `n`.
pub fn torsion_free_t(m: &LineModuleSpec, t: Letter, n: usize) -> Result<bool> {
    acts_without_torsion(m, &NcPoly::letter(t), n)
}

/// For each generator letter, whether it acts without torsion up to degree `n`.
pub fn torsion_profile(m: &LineModuleSpec, n: usize) -> Result<Vec<(String, bool)>> {
    let alpha = m.algebra.alphabet();
    (0..alpha.len())
        .map(|l| Ok((alpha.name(l as Letter).into(), acts_without_torsion(m, &NcPoly::letter(l as Letter), n)?)))
        .collect()
}

/// `U ⊗_{U(S)} k_φ` for an inhomogeneous enveloping algebra `U`.
#[derive(Clone, Debug)]
pub struct InducedModuleSpec<'a> {
    pub enveloping: &'a RewriteSystem,
    pub table: BracketTable,
    pub sub: SubalgebraSpec,
    pub phi: Functional,
}

impl InducedModuleSpec<'_> {
    fn check_admissible(&self) -> Result<()> {
        let cf = closed_form_admissible(&self.table, &self.sub, &self.phi)?;
        if !cf.admissible {
            return Err(Error::Inadmissible(cf.condition));
        }
        Ok(())
    }

    fn ideal_generators(&self) -> Result<Vec<NcPoly>> {
        twisted_generators(&self.table, &self.sub, &self.phi, self.enveloping.alphabet(), None)
    }
}

/// `dim Nᵢ` for `i ≤ n`, by filtered linear algebra in the enveloping algebra.
pub fn induced_module_dims(spec: &InducedModuleSpec, n: usize) -> Result<HilbertFunction> {
    spec.check_admissible()?;
    let gens = spec.ideal_generators()?;
    Ok(filtered_left_quotient(spec.enveloping, &gens, n, DEFAULT_SLACK)?.dims())
}

/// Maps letters of a homogenized algebra onto the enveloping algebra by name.
fn rename_to(from: &Presentation, to: &Presentation) -> impl Fn(Letter) -> Option<Letter> {
    let names: Vec<Option<Letter>> =
        from.alphabet.gens.iter().map(|g| to.alphabet.index_of(&g.name)).collect();
    move |l| names.get(l as usize).copied().flatten()
}

/// `ℋ(N) ≅ M`: equal dimensions degree by degree, and every generator of
/// `M`'s ideal kills `1 ⊗ 1` (its dehomogenization lies in the induced ideal).
pub fn certify_homogenization_iso(spec: &InducedModuleSpec, m: &LineModuleSpec, n: usize) -> Result<CertificationReport> {
    spec.check_admissible()?;
    let gens = spec.ideal_generators()?;
    let fq = filtered_left_quotient(spec.enveloping, &gens, n, DEFAULT_SLACK)?;
    let induced = fq.dims();
    let line = m.hilbert(n)?;
    let mut rep = compare("homogenization", induced, line);
    let hom = &m.algebra.presentation;
    let t = hom.homogenizer().ok_or_else(|| Error::InvalidPresentation(format!("{} has no homogenizer", hom.name)))?;
    let env = &spec.enveloping.presentation;
    for g in &m.generators {
        let d = dehomogenize(g, t, rename_to(hom, env))?;
        let kills = fq.contains(&d)?;
        rep.checks.push((format!("{} · (1⊗1) = 0", hom.alphabet.fmt_poly(g)), kills));
    }
    Ok(rep)
}

/// `L_(S,φ)` is a line module for every φ; when φ is admissible it is also the
/// homogenized induced module, otherwise the report notes that no `k_φ` exists.
pub fn certify_l_h_phi_correspondence(
    hhat: &RewriteSystem,
    uhat: &RewriteSystem,
    table: &BracketTable,
    s: &SubalgebraSpec,
    phi: &Functional,
    n: usize,
) -> Result<CertificationReport> {
    let m = build_l_h_phi(hhat, table, s, phi)?;
    let mut rep = certify_line_module(&m, n)?;
    rep.target = "L_(S,φ)".into();
    let l = m.line()?;
    let ht = Line::new(form([0, 0, 1, 0]), form([0, 0, 0, 1]))?;
    rep.checks.push(("line meets V(h, t)".into(), lines_meet(&l, &ht)));
    rep.checks.push(("line avoids V(t)".into(), !l.in_plane(&form([0, 0, 0, 1]))));
    let cf = closed_form_admissible(table, s, phi)?;
    if cf.admissible {
        let spec = InducedModuleSpec { enveloping: uhat, table: table.clone(), sub: s.clone(), phi: phi.clone() };
        let iso = certify_homogenization_iso(&spec, &m, n)?;
        rep.checks.push(("ℋ(induced) has the same dims".into(), iso.per_degree.iter().all(|&b| b)));
        rep.checks.extend(iso.checks);
    } else {
        rep.notes.push(format!("no 1-dimensional module k_φ ({}): this line module is not a homogenized induced module", cf.condition));
    }
    Ok(rep)
}

/// Canonical `(α, β, λ, γ)` of a line `V(h − λt, αe + βf − γt)` meeting `V(h, t)` and
/// not lying in `V(t)`; coordinates `(e, f, h, t)`. `(α : β)` is scaled so its first
/// nonzero entry is 1.
pub fn extract_sl11_pair(l: &Line) -> Option<[Q; 4]> {
    let ht = Line::new(form([0, 0, 1, 0]), form([0, 0, 0, 1])).ok()?;
    if !lines_meet(l, &ht) || l.in_plane(&form([0, 0, 0, 1])) {
        return None;
    }
    let (u, v) = (&l.u, &l.v);
    // c·(u, v) with no e or f part.
    let ker = kernel(&[vec![u[0].clone(), v[0].clone()], vec![u[1].clone(), v[1].clone()]], 2);
    let c = ker.first()?;
    let w: Form = core::array::from_fn(|i| &c[0] * &u[i] + &c[1] * &v[i]);
    if w[2].is_zero() {
        return None;
    }
    let lambda = -&w[3] / &w[2];
    let other = if u[0].is_zero() && u[1].is_zero() { v } else { u };
    let r: Form = core::array::from_fn(|i| &other[i] - &(&(&other[2] / &w[2]) * &w[i]));
    let lead = if r[0].is_zero() { r[1].clone() } else { r[0].clone() };
    if lead.is_zero() {
        return None;
    }
    Some([&r[0] / &lead, &r[1] / &lead, lambda, -&r[3] / &lead])
}

/// The line `V(h − λt, αe + βf − γt)`.
pub fn sl11_line(p: &[Q; 4]) -> Line {
    Line::new([q(0), q(0), q(1), -p[2].clone()], [p[0].clone(), p[1].clone(), q(0), -p[3].clone()])
        .expect("independent forms")
}

/// The three shapes of a ℤ₂-graded 2-plane in `Ĥ₁ = span(h,t) ⊕ span(e,f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GradedPlaneShape {
    /// `span(e, f)`.
    Odd,
    /// `span(h, t)`.
    Even,
    /// `span(δ₁h − δ₂t, αe + βf)`.
    Mixed { delta: [Q; 2], ab: [Q; 2] },
}

/// Shape of a graded 2-plane of `Ĥ₁` given by its two forms (coordinates `(e, f, h, t)`);
/// `None` when the plane is not graded.
pub fn graded_plane_shape(rows: &[Vec<Q>]) -> Option<GradedPlaneShape> {
    let labels = [
        crate::ncalg::GroupElem::z2(1),
        crate::ncalg::GroupElem::z2(1),
        crate::ncalg::GroupElem::z2(0),
        crate::ncalg::GroupElem::z2(0),
    ];
    if rank(rows) != 2 || !graded_span(rows, &labels) {
        return None;
    }
    let odd = |i: usize| i < 2;
    let comp = |want_odd: bool| -> Vec<Vec<Q>> {
        (0..4).filter(|&i| odd(i) == want_odd).map(|i| {
            let mut v = vec![Q::zero(); 4];
            v[i] = Q::one();
            v
        }).collect()
    };
    let dim_odd = crate::linalg::intersection_dim(rows, &comp(true));
    match dim_odd {
        2 => Some(GradedPlaneShape::Odd),
        0 => Some(GradedPlaneShape::Even),
        _ => {
            // Project each row onto the two components; each projection spans a line.
            let even: Vec<Q> = rows.iter().map(|r| [r[2].clone(), r[3].clone()]).find(|p| !p.iter().all(Zero::is_zero))?.to_vec();
            let oddv: Vec<Q> = rows.iter().map(|r| [r[0].clone(), r[1].clone()]).find(|p| !p.iter().all(Zero::is_zero))?.to_vec();
            let norm = |v: &[Q]| -> [Q; 2] {
                let lead = if v[0].is_zero() { v[1].clone() } else { v[0].clone() };
                [&v[0] / &lead, &v[1] / &lead]
            };
            let d = norm(&even);
            Some(GradedPlaneShape::Mixed { delta: [d[0].clone(), -d[1].clone()], ab: norm(&oddv) })
        }
    }
}

pub fn describe_functional(s: &SubalgebraSpec, phi: &Functional, t: &BracketTable) -> String {
    let fmt_vec = |v: &[Q]| {
        let mut parts = Vec::new();
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                parts.push(format!("{}*{}", fmt_q(c), t.basis[i]));
            }
        }
        parts.join(" + ")
    };
    format!(
        "φ({}) = {}, φ({}) = {}",
        fmt_vec(&s.basis[0]),
        fmt_q(&phi.values[0]),
        fmt_vec(&s.basis[1]),
        fmt_q(&phi.values[1])
    )
}

/// The generator forms, for four-generator algebras.
pub fn generator_forms(m: &LineModuleSpec) -> Result<[Form; 2]> {
    let a = m.algebra.alphabet();
    Ok([form_of(a, &m.generators[0])?, form_of(a, &m.generators[1])?])
}
