use std::sync::Arc;

use intercol::bounds::{lb_family, report, SeparableFamily};
use intercol::coloring::{io as cio, is_separable, verify_interval};
use intercol::constructions::*;
use intercol::graph::{generate, io, Descriptor, Family};
use intercol::EdgeColoring;
use proptest::prelude::*;

fn k2() -> EdgeColoring {
    EdgeColoring::new(
        Arc::new(generate(&Family::Complete(2)).unwrap()),
        1,
        vec![1],
    )
    .unwrap()
}

fn separable(sc: &SeparableColoring) -> bool {
    verify_interval(sc.coloring()).is_valid()
        && is_separable(sc.coloring(), sc.root()).unwrap().separable
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn caterpillars_attain_their_bound(ks in prop::collection::vec(0usize..4, 0..6)) {
        let sc = caterpillar_separable(&ks).unwrap();
        prop_assert!(separable(&sc));
        let g = sc.coloring().graph();
        let fam = SeparableFamily::Caterpillar { edges: g.num_edges() as i64, diam: g.diameter().unwrap() as i64 };
        let c = separable_product_coloring(&sc, &k2()).unwrap();
        prop_assert!(verify_interval(&c).is_valid());
        prop_assert_eq!(c.t() as i64, lb_family(fam, 1, 1).unwrap());
    }

    #[test]
    fn cycle_and_kmn_products(n in 2usize..9, m in 1usize..5, q in 1usize..4) {
        let cyc = cycle_separable(n).unwrap();
        let kmn = complete_bipartite_separable(m, q + 1).unwrap();
        prop_assert!(separable(&cyc) && separable(&kmn));
        // second factor must be regular
        let kqq = complete_bipartite_separable(q, q).unwrap();
        let c = product_max_coloring(kmn.coloring(), kqq.coloring()).unwrap();
        prop_assert!(verify_interval(&c).is_valid());
        prop_assert_eq!(c.t(), kmn.t() + kqq.t() + q as u32);
        let c = product_max_coloring(kmn.coloring(), cyc.coloring()).unwrap();
        prop_assert!(verify_interval(&c).is_valid());
        prop_assert_eq!(c.t(), kmn.t() + cyc.t() + 2);
    }

    #[test]
    fn report_brackets_are_consistent(a in 2usize..7, b in 2usize..7, c in 2usize..5) {
        let d = Descriptor::new(vec![Family::Cycle(2 * a), Family::Cycle(2 * b), Family::Cycle(2 * c)]).unwrap();
        let r = report(&d).unwrap();
        prop_assert!(!r.not_colorable());
        let (lo, hi) = (r.lower().unwrap(), r.upper().unwrap());
        prop_assert!(lo <= hi, "{d}: {lo} > {hi}");
        prop_assert_eq!(r.exact_w(), Some(6));
    }

    #[test]
    fn json_round_trip(n in 1usize..8, m in 1usize..6) {
        let c = fibonacci_min_coloring(n).unwrap();
        let g = Arc::new(io::from_json(&io::to_json(c.graph())).unwrap());
        prop_assert_eq!(&*g, c.graph());
        let back = cio::from_json(Arc::clone(&g), &cio::to_json(&c)).unwrap();
        prop_assert_eq!(back.colors(), c.colors());
        let h = hypercube_max_separable(m.min(5)).unwrap();
        let (dg, labels) = io::from_dot(&io::to_dot(h.coloring().graph(), Some(h.coloring().colors()))).unwrap();
        prop_assert_eq!(&dg, h.coloring().graph());
        prop_assert_eq!(labels.as_deref(), Some(h.coloring().colors()));
    }
}
