use linemod_core::hilbert::{hilbert_algebra, oracle_graded_dims};
use linemod_core::presets::{algebra, poly, table, enveloping_of};
use linemod_core::rewrite::RewriteSystem;
use linemod_core::DEFAULT_ORACLE_CAP;

fn binom3(d: usize) -> usize {
    (d + 1) * (d + 2) * (d + 3) / 6
}

#[test]
fn sl11_hhat_is_pbw_sized() {
    let p = algebra("sl11_Hhat").unwrap();
    let rs = RewriteSystem::new(&p, 8).unwrap();
    assert_eq!(rs.confluent_up_to, 8);
    let expect: Vec<usize> = (0..=8).map(binom3).collect();
    assert_eq!(hilbert_algebra(&p, 8).unwrap().dims, expect);
    assert_eq!(oracle_graded_dims(&p, 5, DEFAULT_ORACLE_CAP).unwrap().dims, expect[..=5]);
}

#[test]
fn sl11_h_has_linear_growth() {
    let p = algebra("sl11_H").unwrap();
    let mut expect = vec![1];
    expect.extend((1..=8).map(|d| 4 * d));
    assert_eq!(hilbert_algebra(&p, 8).unwrap().dims, expect);
    assert_eq!(oracle_graded_dims(&p, 4, DEFAULT_ORACLE_CAP).unwrap().dims, expect[..=4]);
}

#[test]
fn slc_h_and_sl2_a_are_pbw_sized() {
    for name in ["slc_H", "sl2_A"] {
        let p = algebra(name).unwrap();
        let expect: Vec<usize> = (0..=8).map(binom3).collect();
        assert_eq!(hilbert_algebra(&p, 8).unwrap().dims, expect, "{name}");
        assert_eq!(oracle_graded_dims(&p, 4, DEFAULT_ORACLE_CAP).unwrap().dims, expect[..=4], "{name}");
    }
}

#[test]
fn sl21_y1_squared_t_vanishes() {
    let p = algebra("sl21_Hhat").unwrap();
    let rs = RewriteSystem::new(&p, 5).unwrap();
    let a = &p.alphabet;
    assert!(rs.normal_form(&poly(a, &[(1, "y1 y1 t")])).unwrap().is_zero());
    assert!(!rs.normal_form(&poly(a, &[(1, "y1 y1")])).unwrap().is_zero());
    assert!(!rs.normal_form(&poly(a, &[(1, "t")])).unwrap().is_zero());
}

#[test]
fn tables_match_presentations() {
    for t in ["sl2", "sl11", "slc", "sl21"] {
        let tab = table(t).unwrap();
        for name in enveloping_of(t) {
            let rs = RewriteSystem::new(&algebra(name).unwrap(), 4).unwrap();
            tab.check_presentation(&rs).unwrap();
        }
    }
}
