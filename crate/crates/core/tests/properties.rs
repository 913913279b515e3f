use std::cmp::Ordering;
use std::sync::OnceLock;

use proptest::prelude::*;

use linemod_core::geometry::{line_on_quadric, lines_meet, sl11_quadric, Line};
use linemod_core::hilbert::oracle_ideal_contains;
use linemod_core::liealg::{
    admissible_functional, closed_form_admissible, is_subalgebra, Functional, SubalgebraSpec,
};
use linemod_core::ncalg::{qf, NcPoly, TermOrder, Word, Q};
use linemod_core::presets::{algebra, table};
use linemod_core::rewrite::RewriteSystem;

fn rational() -> impl Strategy<Value = Q> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| qf(n, d))
}

fn word(letters: u16, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..letters, 0..=max_len).prop_map(Word)
}

fn poly(letters: u16, max_len: usize) -> impl Strategy<Value = NcPoly> {
    prop::collection::vec((word(letters, max_len), rational()), 0..5).prop_map(|terms| {
        let mut p = NcPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    })
}

fn form() -> impl Strategy<Value = [Q; 4]> {
    prop::array::uniform4(rational())
}

fn invertible() -> impl Strategy<Value = [[Q; 2]; 2]> {
    prop::array::uniform4(rational())
        .prop_filter("singular", |m| &m[0] * &m[3] != &m[1] * &m[2])
        .prop_map(|[a, b, c, d]| [[a, b], [c, d]])
}

fn hhat() -> &'static RewriteSystem {
    static RS: OnceLock<RewriteSystem> = OnceLock::new();
    RS.get_or_init(|| RewriteSystem::new(&algebra("sl11_Hhat").unwrap(), 6).unwrap())
}

fn sl11_u() -> &'static RewriteSystem {
    static RS: OnceLock<RewriteSystem> = OnceLock::new();
    RS.get_or_init(|| RewriteSystem::new(&algebra("sl11_U").unwrap(), 5).unwrap())
}

fn slc_u() -> &'static RewriteSystem {
    static RS: OnceLock<RewriteSystem> = OnceLock::new();
    RS.get_or_init(|| RewriteSystem::new(&algebra("slc_U").unwrap(), 5).unwrap())
}

proptest! {
    #[test]
    fn multiplication_is_associative_and_distributive(a in poly(3, 3), b in poly(3, 3), c in poly(3, 3)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &NcPoly::one(), a);
    }

    #[test]
    fn deglex_is_multiplicative(u in word(4, 4), v in word(4, 4), x in word(4, 3), y in word(4, 3)) {
        let alpha = algebra("sl11_Hhat").unwrap().alphabet;
        let ord = TermOrder::deglex(&alpha);
        let before = ord.compare(&u, &v);
        let after = ord.compare(&x.concat(&u).concat(&y), &x.concat(&v).concat(&y));
        prop_assert_eq!(before, after);
        if u != v {
            prop_assert_ne!(before, Ordering::Equal);
        }
    }

    #[test]
    fn group_degree_is_a_homomorphism(u in word(4, 5), v in word(4, 5)) {
        let alpha = algebra("slc_H").unwrap().alphabet;
        let g = |w: &Word| alpha.group_degree(w).unwrap();
        prop_assert_eq!(g(&u.concat(&v)), g(&u).add(g(&v)));
    }

    #[test]
    fn normal_form_is_idempotent_and_linear(a in poly(4, 3), b in poly(4, 3)) {
        let rs = hhat();
        let na = rs.normal_form(&a).unwrap();
        prop_assert_eq!(rs.normal_form(&na).unwrap(), na.clone());
        let nb = rs.normal_form(&b).unwrap();
        prop_assert_eq!(rs.normal_form(&(&a + &b)).unwrap(), &na + &nb);
    }

    #[test]
    fn normal_form_differs_by_an_ideal_element(w in word(4, 4)) {
        let rs = hhat();
        let p = NcPoly::monomial(w, Q::from_integer(1.into()));
        let diff = &p - &rs.normal_form(&p).unwrap();
        let rels = rs.presentation.all_relations();
        prop_assert!(oracle_ideal_contains(rs.alphabet(), &rels, &diff, 200_000).unwrap());
    }

    #[test]
    fn closure_does_not_depend_on_the_basis(which in 0usize..3, v1 in prop::collection::vec(rational(), 3), v2 in prop::collection::vec(rational(), 3), m in invertible()) {
        let t = table(["sl2", "sl11", "slc"][which]).unwrap();
        if let Ok(s) = SubalgebraSpec::new(v1, v2) {
            let s2 = s.change_basis(m).unwrap();
            prop_assert_eq!(is_subalgebra(&s, &t), is_subalgebra(&s2, &t));
        }
    }

    #[test]
    fn meeting_is_symmetric(a in form(), b in form(), c in form(), d in form()) {
        if let (Ok(l1), Ok(l2)) = (Line::new(a, b), Line::new(c, d)) {
            prop_assert_eq!(lines_meet(&l1, &l2), lines_meet(&l2, &l1));
            prop_assert!(lines_meet(&l1, &l1));
        }
    }

    #[test]
    fn quadric_membership_ignores_the_spanning_forms(lambda in rational(), m in invertible(), a in form(), b in form()) {
        let comb = |l: &Line, r: &[Q; 2]| -> [Q; 4] { std::array::from_fn(|i| &r[0] * &l.u[i] + &r[1] * &l.v[i]) };
        let quadric = sl11_quadric();
        let on = linemod_core::geometry::sl11_quadric_line(&lambda);
        let moved = Line::new(comb(&on, &m[0]), comb(&on, &m[1])).unwrap();
        prop_assert!(line_on_quadric(&moved, &quadric));
        if let Ok(l) = Line::new(a, b) {
            let moved = Line::new(comb(&l, &m[0]), comb(&l, &m[1])).unwrap();
            prop_assert_eq!(line_on_quadric(&l, &quadric), line_on_quadric(&moved, &quadric));
        }
    }
}

fn sl11_case() -> impl Strategy<Value = (Q, Q, Q, Q)> {
    let ab = prop_oneof![Just((qf(1, 1), qf(0, 1))), Just((qf(0, 1), qf(1, 1))), rational().prop_map(|b| (qf(1, 1), b))];
    (ab, rational(), rational(), any::<bool>()).prop_map(|((a, b), lambda, gamma, on_locus)| {
        // Half the cases are pushed onto γ² = αβλ.
        if on_locus && &a * &b != Q::from_integer(0.into()) {
            let l = &(&gamma * &gamma) / &(&a * &b);
            (a, b, l, gamma)
        } else if on_locus {
            (a, b, lambda, Q::from_integer(0.into()))
        } else {
            (a, b, lambda, gamma)
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn sl11_admissibility_routes_agree((a, b, lambda, gamma) in sl11_case()) {
        let t = table("sl11").unwrap();
        let (s, phi) = linemod_core::presets::sl11_pair(&t, &[a, b, lambda, gamma]).unwrap();
        let cf = closed_form_admissible(&t, &s, &phi).unwrap().admissible;
        prop_assert_eq!(admissible_functional(&s, &phi, &t, sl11_u(), 4).unwrap(), cf);
    }

    #[test]
    fn color_admissibility_routes_agree(i in 0usize..3, mu in prop_oneof![Just(1i64), Just(-1)], x in rational(), y in rational(), pin in 0u8..3) {
        let t = table("slc").unwrap();
        let others: Vec<usize> = (0..3).filter(|&k| k != i).collect();
        let mut v = vec![Q::from_integer(0.into()); 3];
        v[others[0]] = qf(1, 1);
        v[others[1]] = qf(mu, 1);
        let s = SubalgebraSpec::new(t.basis_vector(i), v).unwrap();
        let (x, y) = match pin {
            0 => (qf(mu, 2), y),
            1 => (x, Q::from_integer(0.into())),
            _ => (x, y),
        };
        let phi = Functional::new(x, y);
        let cf = closed_form_admissible(&t, &s, &phi).unwrap().admissible;
        prop_assert_eq!(admissible_functional(&s, &phi, &t, slc_u(), 4).unwrap(), cf);
    }
}
