use std::sync::Arc;

use cgschur::doc::SRingDoc;
use cgschur::galois::DEFAULT_MAX_ORDER;
use cgschur::parse::parse_ring;
use cgschur::subgroup::{all_subgroups, UnitSubgroup};
use cgschur::{CGRing, Characters, SRing};
use proptest::prelude::*;

const RINGS: [&str; 7] = [
    "GR(9)",
    "GR(4,2)",
    "GR(8)xGR(3)",
    "GR(4)xGR(9)",
    "GR(27)",
    "GR(3,2)xGR(4)",
    "GR(25)xGR(2)",
];

fn ring_and_groups(i: usize) -> (Arc<CGRing>, Vec<UnitSubgroup>) {
    let r = Arc::new(parse_ring(RINGS[i]).unwrap());
    let g = all_subgroups(&r, &UnitSubgroup::units(&r)).unwrap();
    (r, g)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cyclotomic_srings_verify_and_dualize(ri in 0..RINGS.len(), pick in any::<prop::sample::Index>()) {
        let (r, groups) = ring_and_groups(ri);
        let k = pick.get(&groups);
        let a = SRing::cyclotomic(r.clone(), k);
        prop_assert!(a.verify().ok);
        let chars = Characters::new(r);
        let d = chars.dual(&a).unwrap();
        prop_assert!(d.verify().ok);
        prop_assert_eq!(chars.dual(&d).unwrap(), a);
    }

    #[test]
    fn quotient_of_cyclotomic_is_cyclotomic_of_image(
        ri in 0..RINGS.len(),
        pick in any::<prop::sample::Index>(),
        jpick in any::<prop::sample::Index>(),
    ) {
        let (r, groups) = ring_and_groups(ri);
        let k = pick.get(&groups);
        let j = *jpick.get(&r.ideals());
        let a = SRing::cyclotomic(r.clone(), k);
        let q = r.quotient(j).unwrap();
        let image: Vec<usize> = k.elements().iter().map(|&u| q.project(u)).collect();
        let qr = Arc::new(q.ring.clone());
        let orbits = qr.orbit_partition(&image).unwrap();
        let expected = SRing::from_partition(qr, orbits).unwrap();
        prop_assert!(a.quotient(j).unwrap().same_partition(&expected));
    }

    #[test]
    fn tensor_products_split_back(
        pick_a in any::<prop::sample::Index>(),
        pick_b in any::<prop::sample::Index>(),
    ) {
        let (ra, ga) = ring_and_groups(1);
        let (rb, gb) = ring_and_groups(4);
        let a = SRing::cyclotomic(ra, pick_a.get(&ga));
        let b = SRing::cyclotomic(rb, pick_b.get(&gb));
        let t = a.tensor(&b).unwrap();
        prop_assert!(t.verify().ok);
        prop_assert_eq!(t.rank(), a.rank() * b.rank());
        let split = t.is_tensor_over(&[2]).unwrap();
        prop_assert!(split.left.same_partition(&a));
        prop_assert!(split.right.same_partition(&b));
    }

    #[test]
    fn documents_round_trip(ri in 0..RINGS.len(), pick in any::<prop::sample::Index>()) {
        let (r, groups) = ring_and_groups(ri);
        let a = SRing::cyclotomic(r, pick.get(&groups));
        let text = serde_json::to_string(&SRingDoc::from_sring(&a)).unwrap();
        let doc: SRingDoc = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(doc.to_partition(DEFAULT_MAX_ORDER).unwrap(), a);
    }
}

#[test]
fn rank_two_and_full_are_the_extremes() {
    for spec in RINGS {
        let r = Arc::new(parse_ring(spec).unwrap());
        let full = SRing::full(r.clone());
        let rank2 = SRing::rank2(r.clone());
        assert!(full.verify().ok && rank2.verify().ok);
        assert_eq!(full.rank(), r.order());
        assert_eq!(rank2.rank(), 2);
        assert_eq!(cgschur::sring::schur_closure(r.clone(), &[]), rank2);
        let units = UnitSubgroup::units(&r);
        assert_eq!(
            cgschur::sring::schur_closure_dense(r.clone(), &[]),
            SRing::cyclotomic(r, &units)
        );
    }
}
