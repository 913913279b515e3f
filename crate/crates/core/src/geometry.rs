//! Lines and quadrics in ℙ³ over ℚ.
//!
//! A line is stored dually, as the pencil of linear forms vanishing on it.
//! Coordinates are dual to the four degree-1 generators of an algebra, in
//! presentation order.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{det, in_span, kernel, rank};
use crate::ncalg::{q, qf, Alphabet, NcPoly, Q};

pub type Form = [Q; 4];

/// Integer vector with content 1 and positive first nonzero entry.
pub fn primitive(v: &[Q]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Q::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign = if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) { -BigInt::one() } else { BigInt::one() };
    ints.into_iter().map(|x| x / &g * &sign).collect()
}

/// A projective point with normalized integer coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Point(pub Vec<BigInt>);

impl Point {
    pub fn new(coords: &[Q]) -> Result<Self> {
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::InvalidLine("the zero vector is not a point".into()));
        }
        Ok(Point(primitive(coords)))
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        Point::new(&c.map(q)).expect("nonzero")
    }

    pub fn coords(&self) -> Vec<Q> {
        self.0.iter().map(|x| Q::from_integer(x.clone())).collect()
    }
}

pub fn eval_form(f: &Form, p: &[Q]) -> Q {
    f.iter().zip(p).fold(Q::zero(), |acc, (a, b)| acc + a * b)
}

#[derive(Clone, Debug)]
pub struct Line {
    pub u: Form,
    pub v: Form,
}

impl Line {
    pub fn new(u: Form, v: Form) -> Result<Self> {
        if rank(&[u.to_vec(), v.to_vec()]) != 2 {
            return Err(Error::InvalidLine("the two forms are dependent".into()));
        }
        Ok(Line { u, v })
    }

    /// From two degree-1 polynomials over a four-letter alphabet.
    pub fn from_polys(alpha: &Alphabet, u: &NcPoly, v: &NcPoly) -> Result<Self> {
        Line::new(form_of(alpha, u)?, form_of(alpha, v)?)
    }

    fn rows(&self) -> Vec<Vec<Q>> {
        alloc::vec![self.u.to_vec(), self.v.to_vec()]
    }

    /// The form `w` vanishes on the line.
    pub fn in_plane(&self, w: &Form) -> bool {
        in_span(&self.rows(), w)
    }

    pub fn passes_through(&self, p: &[Q]) -> bool {
        eval_form(&self.u, p).is_zero() && eval_form(&self.v, p).is_zero()
    }

    /// Two points spanning the line.
    pub fn points(&self) -> [Vec<Q>; 2] {
        let k = kernel(&self.rows(), 4);
        [k[0].clone(), k[1].clone()]
    }

    pub fn same_as(&self, other: &Line) -> bool {
        other.in_plane(&self.u) && other.in_plane(&self.v)
    }

    /// Plücker coordinates `p_ij = xᵢyⱼ − xⱼyᵢ`, (01, 02, 03, 12, 13, 23), primitive.
    pub fn plucker(&self) -> Vec<BigInt> {
        let [x, y] = self.points();
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let p: Vec<Q> = pairs.iter().map(|&(i, j)| &x[i] * &y[j] - &x[j] * &y[i]).collect();
        primitive(&p)
    }
}

/// Coefficient vector of a degree-1 polynomial.
pub fn form_of(alpha: &Alphabet, p: &NcPoly) -> Result<Form> {
    if alpha.len() != 4 {
        return Err(Error::Dimension(format!("lines need 4 coordinates, the alphabet has {}", alpha.len())));
    }
    let mut f: Form = core::array::from_fn(|_| Q::zero());
    for (w, c) in p.terms() {
        if w.len() != 1 {
            return Err(Error::InvalidLine(format!("{} is not linear", alpha.fmt_poly(p))));
        }
        f[w.0[0] as usize] = c.clone();
    }
    Ok(f)
}

pub fn lines_meet(a: &Line, b: &Line) -> bool {
    det(&[a.u.to_vec(), a.v.to_vec(), b.u.to_vec(), b.v.to_vec()]).is_zero()
}

/// A quadric `xᵀ M x = 0` with `M` symmetric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadric {
    pub name: String,
    pub m: [[Q; 4]; 4],
}

impl Quadric {
    /// From `(coefficient, i, j)` monomials `c·xᵢxⱼ` of the quadratic form.
    pub fn from_monomials(name: &str, terms: &[(Q, usize, usize)]) -> Result<Self> {
        let mut m: [[Q; 4]; 4] = core::array::from_fn(|_| core::array::from_fn(|_| Q::zero()));
        for (c, i, j) in terms {
            if i == j {
                m[*i][*j] += c;
            } else {
                let half = c / q(2);
                m[*i][*j] += &half;
                m[*j][*i] += &half;
            }
        }
        if m.iter().flatten().all(Zero::is_zero) {
            return Err(Error::InvalidLine("zero quadric".into()));
        }
        Ok(Quadric { name: name.into(), m })
    }

    pub fn bilinear(&self, x: &[Q], y: &[Q]) -> Q {
        let mut acc = Q::zero();
        for i in 0..4 {
            for j in 0..4 {
                if !self.m[i][j].is_zero() {
                    acc += &self.m[i][j] * &x[i] * &y[j];
                }
            }
        }
        acc
    }

    pub fn eval(&self, x: &[Q]) -> Q {
        self.bilinear(x, x)
    }
}

/// `Q(sx + ty) = s²Q(x) + 2st·B(x,y) + t²Q(y)` vanishes identically.
pub fn line_on_quadric(l: &Line, qd: &Quadric) -> bool {
    let [x, y] = l.points();
    qd.eval(&x).is_zero() && qd.bilinear(&x, &y).is_zero() && qd.eval(&y).is_zero()
}

/// The color line families: (tag, plane, point on every line of the family).
pub fn color_families() -> Vec<(&'static str, Form, [i64; 4])> {
    let f = |c: [i64; 4]| c.map(q);
    alloc::vec![
        ("1(a)", f([1, 1, 0, 0]), [1, -1, 0, 0]),
        ("1(b)", f([1, -1, 0, 0]), [1, 1, 0, 0]),
        ("2(a)", f([1, 0, 1, 0]), [1, 0, -1, 0]),
        ("2(b)", f([1, 0, -1, 0]), [1, 0, 1, 0]),
        ("3(a)", f([0, 1, 1, 0]), [0, 1, -1, 0]),
        ("3(b)", f([0, 1, -1, 0]), [0, 1, 1, 0]),
        ("4(a)", f([0, 0, -2, 1]), [1, -1, 0, 0]),
        ("4(b)", f([0, 0, 2, 1]), [1, 1, 0, 0]),
        ("5(a)", f([0, -2, 0, 1]), [1, 0, -1, 0]),
        ("5(b)", f([0, 2, 0, 1]), [1, 0, 1, 0]),
        ("6(a)", f([-2, 0, 0, 1]), [0, 1, -1, 0]),
        ("6(b)", f([2, 0, 0, 1]), [0, 1, 1, 0]),
    ]
}

/// Every family tag whose conditions the line meets, in list order.
pub fn classify_line_family_color(l: &Line) -> Vec<&'static str> {
    let mut tags: Vec<&'static str> = color_families()
        .into_iter()
        .filter(|(_, plane, pt)| l.in_plane(plane) && l.passes_through(&pt.map(q)))
        .map(|(t, _, _)| t)
        .collect();
    if l.in_plane(&[q(0), q(0), q(0), q(1)]) {
        tags.push("7");
    }
    tags
}

/// `det + δ²t²` on sl₂ coordinates `(e, f, h, t)`, where `det(αe + βf + γh) = −γ² − αβ`.
pub fn sl2_pencil(delta: &Q) -> Quadric {
    Quadric::from_monomials(
        "det + δ²t²",
        &[(q(-1), 2, 2), (q(-1), 0, 1), (delta * delta, 3, 3)],
    )
    .expect("nonzero")
}

/// `ht − 2ef` on `(e, f, h, t)`.
pub fn sl11_quadric() -> Quadric {
    Quadric::from_monomials("ht − 2ef", &[(q(1), 2, 3), (q(-2), 0, 1)]).expect("nonzero")
}

/// `λ ↦ (e − λh, t − 2λf)`, a family of lines on `ht − 2ef`.
pub fn sl11_quadric_line(lambda: &Q) -> Line {
    Line::new([q(1), q(0), -lambda.clone(), q(0)], [q(0), -(q(2) * lambda), q(0), q(1)]).expect("independent")
}

/// Shorthand used by tests: a form from small integers.
pub fn form(c: [i64; 4]) -> Form {
    c.map(q)
}

pub fn form_q(c: [(i64, i64); 4]) -> Form {
    c.map(|(n, d)| qf(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn meet_examples() {
        let ht = Line::new(form([0, 0, 1, 0]), form([0, 0, 0, 1])).unwrap();
        let a = Line::new(form([0, 0, 1, -1]), form([1, 1, 0, 0])).unwrap();
        let ef = Line::new(form([1, 0, 0, 0]), form([0, 1, 0, 0])).unwrap();
        assert!(lines_meet(&a, &ht));
        assert!(!lines_meet(&ef, &ht));
        assert!(lines_meet(&a, &a));
    }

    #[test]
    fn dependent_forms_rejected() {
        assert!(Line::new(form([1, 2, 0, 0]), form([2, 4, 0, 0])).is_err());
    }

    #[test]
    fn sl2_lines_on_pencil() {
        for l in [-3i64, 0, 1, 5] {
            let lam = q(l);
            let line = Line::new(form([1, 0, 0, 0]), [q(0), q(0), q(1), -lam.clone()]).unwrap();
            assert!(line_on_quadric(&line, &sl2_pencil(&lam)));
            if l != 0 {
                assert!(!line_on_quadric(&line, &sl2_pencil(&(&lam + q(1)))));
            }
        }
    }

    #[test]
    fn sl11_quadric_family() {
        for (n, d) in [(0, 1), (1, 1), (-2, 3)] {
            assert!(line_on_quadric(&sl11_quadric_line(&qf(n, d)), &sl11_quadric()));
        }
        // A line through (1,1,0,0), which is off the quadric.
        let off = Line::new(form([1, -1, 0, 0]), form([0, 0, 1, 0])).unwrap();
        assert!(!line_on_quadric(&off, &sl11_quadric()));
    }

    #[test]
    fn color_classifier_examples() {
        let l = Line::new(form([1, 1, 0, 0]), form([0, 0, 1, -5])).unwrap();
        assert_eq!(classify_line_family_color(&l), ["1(a)"]);
        let l7 = Line::new(form([0, 0, 0, 1]), form([1, 0, 0, 0])).unwrap();
        // Inside V(a4) and also through (0,1,±1,0) inside V(a4 ∓ 2a1).
        assert_eq!(classify_line_family_color(&l7), ["6(a)", "6(b)", "7"]);
        let l7_only = Line::new(form([0, 0, 0, 1]), form([1, 2, 3, 0])).unwrap();
        assert_eq!(classify_line_family_color(&l7_only), ["7"]);
        let none = Line::new(form([1, 0, 0, 0]), form([0, 1, 0, 0])).unwrap();
        assert!(classify_line_family_color(&none).is_empty());
    }

    #[test]
    fn points_and_plucker() {
        let l = Line::new(form([1, 0, 0, 0]), form([0, 1, 0, 0])).unwrap();
        for p in l.points() {
            assert!(l.passes_through(&p));
        }
        // The line {x0 = x1 = 0} has only p23 nonzero.
        let p = l.plucker();
        assert_eq!(p.iter().filter(|x| !x.is_zero()).count(), 1);
        assert!(!p[5].is_zero());
        assert_eq!(Point::new(&[q(-2), q(4), q(0), q(6)]).unwrap(), Point::from_ints([1, -2, 0, -3]));
    }
}
