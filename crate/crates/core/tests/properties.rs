mod common;

use std::collections::BTreeSet;

use common::group;
use proptest::prelude::*;
use weylchar::bh_lattice::{down_sets, ext_exists, family_members, hasse_edges};
use weylchar::character::{
    compose_coroot, conjugate, telescoped_difference, weyl_act, CharSpec, TorusCharacter,
};
use weylchar::ext_rules::{twist, PiLabel, SupersingularToken};
use weylchar::field::ResidueField;
use weylchar::lattice::Vector;
use weylchar::ord_skeleton::alpha_tilde_inversions;

const DATA: &[&str] = &["gl2", "gl3", "gl4", "gsp4", "g2", "sc-b2", "ad-a2", "sc-b3", "sc-a1xa2"];

fn datum_name() -> impl Strategy<Value = &'static str> {
    prop::sample::select(DATA)
}

fn word(max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..8, 0..max_len)
}

fn clamp(word: &[usize], rank: usize) -> Vec<usize> {
    word.iter().map(|i| i % rank).collect()
}

fn char_logs() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((0i64..4, 0i64..4), 4)
}

fn small_vec() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-5i64..=5, 4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn action_on_characters_is_a_left_action(name in datum_name(), a in word(7), b in word(7), logs in char_logs()) {
        let g = group(name);
        let d = g.datum();
        let r = d.semisimple_rank();
        let f = ResidueField::prime(5).unwrap();
        let chi = TorusCharacter::from_logs(d, f, &logs[..d.rank()]).unwrap();
        let v = g.from_word(&clamp(&a, r)).unwrap();
        let w = g.from_word(&clamp(&b, r)).unwrap();
        let lhs = weyl_act(&g, &g.multiply(&v, &w), &chi).unwrap();
        let rhs = weyl_act(&g, &v, &weyl_act(&g, &w, &chi).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(conjugate(&g, &w, &chi).unwrap(), weyl_act(&g, &g.inverse(&w), &chi).unwrap());
    }

    #[test]
    fn pairing_is_weyl_invariant(name in datum_name(), a in word(9), mu in small_vec(), lam in small_vec()) {
        let g = group(name);
        let d = g.datum();
        let n = d.rank();
        let w = g.from_word(&clamp(&a, d.semisimple_rank())).unwrap();
        let mu = Vector(mu[..n].to_vec());
        let lam = Vector(lam[..n].to_vec());
        prop_assert_eq!(g.act_char(&w, &mu).dot(&g.act_cochar(&w, &lam)), mu.dot(&lam));
    }

    #[test]
    fn length_is_inversion_count_and_changes_by_one(name in datum_name(), a in word(9), i in 0usize..8) {
        let g = group(name);
        let r = g.datum().semisimple_rank();
        let w = g.from_word(&clamp(&a, r)).unwrap();
        prop_assert_eq!(w.length(), g.inversion_roots(&w).len());
        prop_assert_eq!(w.length(), g.inverse(&w).length());
        let ws = g.multiply(&w, &g.simple_reflection(i % r).unwrap());
        prop_assert_eq!(ws.length().abs_diff(w.length()), 1);
        let inv = g.inversion_roots(&w);
        let pos = g.n_w_roots(&w);
        prop_assert!(inv.is_disjoint(&pos));
        prop_assert_eq!(inv.len() + pos.len(), g.datum().num_positive_roots());
    }

    #[test]
    fn telescoping_sum_is_lambda_minus_inverse_image(name in datum_name(), a in word(8), lam in small_vec()) {
        let g = group(name);
        let d = g.datum();
        let word = clamp(&a, d.semisimple_rank());
        let w = g.from_word(&word).unwrap();
        let lam = Vector(lam[..d.rank()].to_vec());
        let lhs = telescoped_difference(&g, &word, &lam).unwrap();
        prop_assert_eq!(lhs, &lam - &g.act_cochar(&g.inverse(&w), &lam));
    }

    #[test]
    fn kostant_factorization_is_length_additive(name in datum_name(), a in word(9), mask in 0u32..8) {
        let g = group(name);
        let r = g.datum().semisimple_rank();
        let w = g.from_word(&clamp(&a, r)).unwrap();
        let p = g.parabolic((0..r).filter(|i| mask >> i & 1 == 1)).unwrap();
        let (rep, wl) = g.kostant_decompose(&w, &p);
        prop_assert_eq!(g.multiply(&rep, &wl), w.clone());
        prop_assert_eq!(rep.length() + wl.length(), w.length());
        prop_assert!(g.is_kostant(&rep, &p));
        prop_assert!(g.in_levi(&wl, &p));
    }

    #[test]
    fn alpha_tilde_of_a_product(name in datum_name(), a in word(6), i in 0usize..8) {
        // alpha_{w s} = s(alpha_w) + alpha_s when l(w s) > l(w).
        let g = group(name);
        let d = g.datum();
        let r = d.semisimple_rank();
        let w = g.from_word(&clamp(&a, r)).unwrap();
        let s = g.simple_reflection(i % r).unwrap();
        let ws = g.multiply(&w, &s);
        prop_assume!(ws.length() > w.length());
        let lhs = alpha_tilde_inversions(&g, &ws).coords;
        let rhs = &g.act_char(&s, &alpha_tilde_inversions(&g, &w).coords) + d.simple_root(i % r);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn positive_root_closure_is_closed(name in datum_name(), mask in 0u32..(1 << 9)) {
        let g = group(name);
        let d = g.datum();
        let seed: BTreeSet<usize> = (0..d.num_positive_roots()).filter(|i| mask >> i & 1 == 1).collect();
        let closed = d.positive_roots_closure(&seed).unwrap();
        prop_assert!(seed.is_subset(&closed));
        prop_assert!(weylchar::closed_roots::is_closed(d, &closed).unwrap());
    }

    #[test]
    fn char_spec_round_trip(name in datum_name(), logs in char_logs(), p in prop::sample::select(vec![3u64, 5, 7])) {
        let g = group(name);
        let d = g.datum();
        let f = ResidueField::prime(p).unwrap();
        let chi = TorusCharacter::from_logs(d, f, &logs[..d.rank()]).unwrap();
        let spec = CharSpec::from_character(&chi);
        let text = serde_json::to_string(&spec).unwrap();
        prop_assert_eq!(CharSpec::from_json(&text).unwrap().to_character(d).unwrap(), chi);
    }

    #[test]
    fn coroot_composition_is_multiplicative(name in datum_name(), a in char_logs(), b in char_logs(), k in 0usize..9) {
        let g = group(name);
        let d = g.datum();
        let f = ResidueField::prime(5).unwrap();
        let x = TorusCharacter::from_logs(d, f, &a[..d.rank()]).unwrap();
        let y = TorusCharacter::from_logs(d, f, &b[..d.rank()]).unwrap();
        let i = k % d.num_positive_roots();
        let lhs = compose_coroot(d, &x.mul(&y).unwrap(), i).unwrap();
        let rhs = compose_coroot(d, &x, i).unwrap().mul(&compose_coroot(d, &y, i).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn orthogonal_twist_is_an_involution(logs in char_logs(), token in any::<bool>()) {
        let g = group("gl4");
        let f = ResidueField::prime(5).unwrap();
        let central = TorusCharacter::from_logs(g.datum(), f, &logs).unwrap();
        let p = g.parabolic([0]).unwrap();
        let label = if token {
            PiLabel::Supersingular(SupersingularToken { name: "pi".into(), conj: g.identity(), central })
        } else {
            PiLabel::Character(central)
        };
        let once = twist(&g, &p, &label, 2).unwrap();
        prop_assert_eq!(twist(&g, &p, &once, 2).unwrap(), label);
    }

    #[test]
    fn down_sets_are_down_closed(n in 0usize..5) {
        let fams = down_sets(n, 5).unwrap();
        for &fam in &fams {
            let members: Vec<BTreeSet<usize>> =
                family_members(n, fam).into_iter().map(|v| v.into_iter().collect()).collect();
            for m in &members {
                for &x in m {
                    let mut smaller = m.clone();
                    smaller.remove(&x);
                    prop_assert!(members.contains(&smaller));
                }
            }
        }
        for [a, b] in hasse_edges(&fams) {
            prop_assert_eq!(fams[a] & fams[b], fams[a]);
            prop_assert_eq!((fams[a] ^ fams[b]).count_ones(), 1);
        }
    }

    #[test]
    fn ext_relation_is_symmetric(a in 0u8..16, b in 0u8..16) {
        let set = |m: u8| (0..4).filter(|i| m >> i & 1 == 1).collect::<BTreeSet<usize>>();
        prop_assert_eq!(ext_exists(&set(a), &set(b)), ext_exists(&set(b), &set(a)));
        prop_assert_eq!(ext_exists(&set(a), &set(b)), (a ^ b).count_ones() <= 1);
    }
}
