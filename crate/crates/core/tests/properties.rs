use abnorm::gradings;
use abnorm::ideals;
use abnorm::weyl::{self, WeylWord};
use abnorm::{build_root_system, RootSystem, SimpleSubset, SimpleTypeId};
use proptest::prelude::*;

fn small_types() -> Vec<SimpleTypeId> {
    SimpleTypeId::all_up_to(5)
}

fn system() -> impl Strategy<Value = RootSystem> {
    (0..small_types().len()).prop_map(|i| build_root_system(small_types()[i]))
}

fn system_and_word() -> impl Strategy<Value = (RootSystem, WeylWord)> {
    system().prop_flat_map(|rs| {
        let rank = rs.rank();
        (Just(rs), prop::collection::vec(0..=rank, 0..14)).prop_map(|(rs, l)| (rs, WeylWord(l)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn root_sum_is_symmetric((rs, i, j) in system().prop_flat_map(|rs| {
        let n = rs.num_pos();
        (Just(rs), 0..n, 0..n)
    })) {
        let (a, b) = (rs.root(i).clone(), rs.root(j).clone());
        prop_assert_eq!(rs.root_sum(&a, &b).unwrap(), rs.root_sum(&b, &a).unwrap());
        prop_assert_eq!(rs.pairing(&a, &b).unwrap().signum(), rs.pairing(&b, &a).unwrap().signum());
    }

    #[test]
    fn inversion_sets_round_trip((rs, w) in system_and_word()) {
        let n = weyl::inversion_set(&rs, &w).unwrap();
        let reduced = weyl::word_from_inversion_set(&rs, &n).unwrap();
        prop_assert_eq!(reduced.len(), n.len());
        prop_assert_eq!(weyl::inversion_set(&rs, &reduced).unwrap(), n);
        for i in 0..=rs.rank() {
            let x = weyl::affine_simple(&rs, i);
            prop_assert_eq!(weyl::act(&rs, &w, &x).unwrap(), weyl::act(&rs, &reduced, &x).unwrap());
        }
    }

    #[test]
    fn action_preserves_the_form((rs, w) in system_and_word()) {
        for i in 0..rs.num_pos() {
            for j in [0, rs.theta()] {
                let (x, y) = (rs.root(i), rs.root(j));
                let (wx, wy) = (weyl::act(&rs, &w, x).unwrap(), weyl::act(&rs, &w, y).unwrap());
                prop_assert_eq!(rs.inner(&wx.coeffs, &wy.coeffs), rs.inner(&x.coeffs, &y.coeffs));
            }
        }
    }

    #[test]
    fn samples_are_upper_and_reproducible(rs in system(), seed in any::<u64>()) {
        let a = ideals::sample_upper(&rs, 20, seed);
        prop_assert_eq!(&a, &ideals::sample_upper(&rs, 20, seed));
        for u in &a {
            prop_assert!(ideals::is_upper(&rs, u.roots()));
        }
    }

    #[test]
    fn tails_above_half_height_are_abelian((rs, bits) in system().prop_flat_map(|rs| {
        let r = rs.rank();
        (Just(rs), 0..1u64 << r)
    })) {
        let s = SimpleSubset::excluded(rs.rank(), bits);
        let h = gradings::grading(&rs, &s).height;
        for j in gradings::abelian_threshold(h).max(1)..=h.max(1) {
            prop_assert!(gradings::tail(&rs, &s, j).unwrap().is_abelian(&rs));
        }
    }
}
