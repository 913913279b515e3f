use linemod_core::geometry::{classify_line_family_color, line_on_quadric, sl2_pencil};
use linemod_core::linemod::*;
use linemod_core::ncalg::{q, qf};
use linemod_core::presets::{algebra, color_fixtures, poly, table};
use linemod_core::rewrite::RewriteSystem;

fn system(name: &str, bound: usize) -> RewriteSystem {
    RewriteSystem::new(&algebra(name).unwrap(), bound).unwrap()
}

#[test]
fn sl2_borel_lines() {
    let a = system("sl2_A", 6);
    let alpha = a.alphabet().clone();
    for lambda in [q(0), q(1), q(-3), qf(1, 2), qf(-7, 3)] {
        let mut hl = poly(&alpha, &[(1, "h")]);
        hl.add_term(linemod_core::ncalg::Word::letter(alpha.index_of("t").unwrap()), -lambda.clone());
        let m = LineModuleSpec::new(&a, poly(&alpha, &[(1, "e")]), hl).unwrap();
        let rep = certify_line_module(&m, 6).unwrap();
        assert!(rep.pass(), "{:?}", rep.found.dims);
        assert!(line_on_quadric(&m.line().unwrap(), &sl2_pencil(&lambda)));
        assert!(torsion_free_t(&m, alpha.index_of("t").unwrap(), 5).unwrap());
    }
}

#[test]
fn color_fixtures_are_homogenized_induced_modules() {
    let h = system("slc_H", 6);
    let u = system("slc_U", 6);
    let t = table("slc").unwrap();
    let a4 = h.alphabet().index_of("a4").unwrap();
    for fx in color_fixtures() {
        let (s, phi) = fx.pair(&t).unwrap();
        let m = build_twisted(&h, &t, &s, &phi).unwrap();
        let spec = InducedModuleSpec { enveloping: &u, table: t.clone(), sub: s, phi };
        let rep = certify_homogenization_iso(&spec, &m, 4).unwrap();
        assert!(rep.pass(), "{fx:?}: {rep:?}");
        assert!(torsion_free_t(&m, a4, 4).unwrap());
        let tags = classify_line_family_color(&m.line().unwrap());
        assert!(tags.contains(&fx.expected_tag().as_str()), "{fx:?}: {tags:?}");
        let profile = torsion_profile(&m, 4).unwrap();
        assert_eq!(profile.last(), Some(&("a4".to_string(), true)));
    }
}

#[test]
fn graded_examples() {
    let hhat = system("sl11_Hhat", 6);
    let a = hhat.alphabet().clone();
    let m = LineModuleSpec::new(&hhat, poly(&a, &[(1, "h"), (-2, "t")]), poly(&a, &[(1, "e"), (1, "f")])).unwrap();
    assert!(is_z2_graded_line_module(&m).unwrap());
    let m = LineModuleSpec::new(&hhat, poly(&a, &[(1, "h"), (-1, "t")]), poly(&a, &[(1, "e"), (1, "f"), (-5, "t")])).unwrap();
    assert!(!is_z2_graded_line_module(&m).unwrap());
    assert!(certify_line_module(&m, 6).unwrap().pass());
    let m = LineModuleSpec::new(&hhat, poly(&a, &[(1, "h")]), poly(&a, &[(1, "t")])).unwrap();
    assert!(is_z2_graded_line_module(&m).unwrap());
    assert!(!torsion_free_t(&m, 3, 4).unwrap());
}
