use linemod::dsl::{parse_algebra, print_algebra};
use linemod_core::ncalg::{qf, Alphabet, NcPoly, Word};
use linemod_core::rewrite::Presentation;
use proptest::prelude::*;

fn relation() -> impl Strategy<Value = NcPoly> {
    prop::collection::vec((prop::collection::vec(0u16..3, 0..4), -6i64..=6, 1i64..=4), 1..5).prop_map(|terms| {
        let mut p = NcPoly::zero();
        for (w, n, d) in terms {
            p.add_term(Word(w), qf(n, d));
        }
        p
    })
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(rels in prop::collection::vec(relation(), 0..4), central in prop::option::of(0u16..3)) {
        let rels: Vec<NcPoly> = rels.into_iter().filter(|r| !r.is_zero()).collect();
        let p = Presentation::new("random", Alphabet::new(&["x", "y", "z"]), rels, central.into_iter().collect()).unwrap();
        let text = print_algebra(&p);
        let back = parse_algebra(&text).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(print_algebra(&back), text);
    }
}
