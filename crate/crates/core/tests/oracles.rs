mod common;

use std::collections::BTreeSet;

use common::{brute_force_down_sets, expected_cartan, group, Oracle, Perm, SMALL_DATA};
use weylchar::bh_lattice::down_sets;
use weylchar::character::{genericity, is_generic, weyl_act, Genericity, TorusCharacter};
use weylchar::closed_roots::{enumerate_closed_subsets, w_psi_set, ClosedRootSubset};
use weylchar::field::ResidueField;
use weylchar::lattice::Vector;

fn oracle_for(name: &str) -> Oracle {
    Oracle::new(expected_cartan(name))
}

#[test]
fn cartan_matrices_match_bourbaki() {
    for name in SMALL_DATA {
        assert_eq!(group(name).datum().cartan_matrix(), expected_cartan(name), "{name}");
    }
}

#[test]
fn positive_roots_match_reflection_orbit() {
    for name in SMALL_DATA {
        let g = group(name);
        let o = oracle_for(name);
        let lib: BTreeSet<Vec<i64>> = g.datum().positive_roots().iter().map(|r| r.simple_coords.clone()).collect();
        let orc: BTreeSet<Vec<i64>> = o.positive().iter().cloned().collect();
        assert_eq!(lib, orc, "{name}");
    }
}

#[test]
fn root_counts_for_known_types() {
    for (name, count) in [("sc-a3", 6), ("sc-b3", 9), ("sc-c3", 9), ("g2", 6), ("gl4", 6), ("gsp4", 4), ("sc-a1xa2", 4)] {
        assert_eq!(group(name).datum().num_positive_roots(), count, "{name}");
        assert_eq!(oracle_for(name).n_pos, count, "{name}");
    }
}

#[test]
fn coroots_pair_to_two_and_reflect_roots() {
    for name in SMALL_DATA {
        let d = group(name).datum().clone();
        for r in d.positive_roots() {
            assert_eq!(r.coords.dot(&r.coroot), 2, "{name}");
            // s_r permutes the roots.
            for s in d.positive_roots() {
                let img = &s.coords - &r.coords.scaled(s.coords.dot(&r.coroot));
                assert!(d.classify(&img).is_some(), "{name}");
            }
        }
    }
}

#[test]
fn gl_roots_are_differences_of_unit_vectors() {
    for n in 2..=5 {
        let g = group(&format!("gl{n}"));
        let lib: BTreeSet<Vec<i64>> = g.datum().positive_roots().iter().map(|r| r.coords.0.clone()).collect();
        let mut expect = BTreeSet::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut v = vec![0; n];
                v[i] = 1;
                v[j] = -1;
                expect.insert(v);
            }
        }
        assert_eq!(lib, expect);
    }
}

fn perm_of(o: &Oracle, w: &weylchar::weyl::WeylElement) -> Perm {
    o.of_word(w.word())
}

#[test]
fn weyl_elements_and_lengths_match_permutation_oracle() {
    for name in SMALL_DATA {
        let g = group(name);
        let o = oracle_for(name);
        let orc = o.elements();
        let lib = g.elements().unwrap();
        assert_eq!(lib.len(), orc.len(), "{name}");
        let mapped: BTreeSet<Perm> = lib.iter().map(|w| perm_of(&o, w)).collect();
        assert_eq!(mapped.len(), lib.len(), "{name}: distinct elements collide");
        for w in lib {
            assert_eq!(w.length(), o.length(&perm_of(&o, w)), "{name} {:?}", w.word());
            assert_eq!(w.length(), w.word().len());
        }
    }
}

#[test]
fn weyl_orders() {
    for (name, order) in [("sc-a1", 2), ("sc-a2", 6), ("sc-b2", 8), ("g2", 12), ("sc-a3", 24), ("sc-b3", 48), ("sc-c3", 48), ("gl4", 24)] {
        assert_eq!(group(name).elements().unwrap().len(), order, "{name}");
    }
}

#[test]
fn longest_element_lengths() {
    for name in SMALL_DATA {
        let g = group(name);
        assert_eq!(g.longest_element().length(), g.datum().num_positive_roots(), "{name}");
    }
}

#[test]
fn bruhat_order_matches_subword_oracle() {
    for name in ["sc-a2", "sc-b2", "g2", "sc-a3", "sc-b3", "gsp4", "sc-a1xa2"] {
        let g = group(name);
        let o = oracle_for(name);
        let els = g.elements().unwrap();
        for w in els {
            let below = o.subword_products(w.word());
            for v in els {
                assert_eq!(g.bruhat_leq(v, w), below.contains(&perm_of(&o, v)), "{name}: {:?} <= {:?}", v.word(), w.word());
            }
        }
    }
}

#[test]
fn reduced_words_are_all_reduced_expressions() {
    for name in ["sc-a2", "sc-b2", "g2", "sc-a3"] {
        let g = group(name);
        let o = oracle_for(name);
        for w in g.elements().unwrap() {
            let target = perm_of(&o, w);
            let words = g.reduced_words(w);
            // Every word of length l(w) over the alphabet that multiplies to w.
            let l = w.length();
            let r = o.rank();
            let mut count = 0;
            for code in 0..r.pow(l as u32) {
                let word: Vec<usize> = (0..l).map(|k| code / r.pow(k as u32) % r).collect();
                if o.of_word(&word) == target {
                    count += 1;
                    assert!(words.contains(&word), "{name}: missing {word:?}");
                }
            }
            assert_eq!(words.len(), count, "{name} {:?}", w.word());
        }
    }
}

#[test]
fn kostant_representatives_match_coset_enumeration() {
    for name in SMALL_DATA {
        let g = group(name);
        let o = oracle_for(name);
        let r = g.datum().semisimple_rank();
        for mask in 0u32..1 << r {
            let levi: BTreeSet<usize> = (0..r).filter(|i| mask >> i & 1 == 1).collect();
            let p = g.parabolic(levi.clone()).unwrap();
            let lib: BTreeSet<Perm> = g.kostant_representatives(&p).unwrap().iter().map(|w| perm_of(&o, w)).collect();
            assert_eq!(lib, o.kostant_reps(&levi), "{name} levi {levi:?}");
        }
    }
}

#[test]
fn closed_subsets_match_brute_force_filter() {
    for (name, expected) in [("sc-a1", 2), ("sc-a1xa1", 4), ("sc-a2", 7)] {
        let g = group(name);
        assert_eq!(enumerate_closed_subsets(g.datum(), 12).unwrap().len(), expected, "{name}");
    }
    for name in ["sc-a2", "sc-b2", "g2", "sc-a3", "sc-b3", "sc-c3", "gsp4"] {
        let g = group(name);
        let o = oracle_for(name);
        let lib: BTreeSet<BTreeSet<Vec<i64>>> = enumerate_closed_subsets(g.datum(), 12)
            .unwrap()
            .iter()
            .map(|s| s.simple_coords(g.datum()).into_iter().collect())
            .collect();
        let orc: BTreeSet<BTreeSet<Vec<i64>>> =
            o.closed_subsets().iter().map(|s| s.iter().map(|&k| o.roots[k].clone()).collect()).collect();
        assert_eq!(lib, orc, "{name}");
    }
}

#[test]
fn w_psi_matches_oracle() {
    for name in ["sc-a2", "sc-b2", "g2", "sc-a3"] {
        let g = group(name);
        let o = oracle_for(name);
        for psi in o.closed_subsets() {
            let coords: Vec<Vec<i64>> = psi.iter().map(|&k| o.roots[k].clone()).collect();
            let text = serde_json::to_string(&coords).unwrap();
            let lib_psi = ClosedRootSubset::parse(g.datum(), &text).unwrap();
            let lib: BTreeSet<Perm> = w_psi_set(&g, &lib_psi).unwrap().iter().map(|w| perm_of(&o, w)).collect();
            let orc: BTreeSet<Perm> =
                o.elements().into_keys().filter(|p| psi.iter().all(|&k| o.is_positive(p[k]))).collect();
            assert_eq!(lib, orc, "{name} psi {coords:?}");
        }
    }
}

#[test]
fn down_set_counts_match_brute_force() {
    for n in 0..=4 {
        assert_eq!(down_sets(n, 6).unwrap().len(), brute_force_down_sets(n), "n = {n}");
    }
    assert_eq!(down_sets(5, 5).unwrap().len(), 7581);
    assert!(down_sets(6, 5).is_err());
}

/// On GL_n, `w` permutes the components of a character, and generic means
/// pairwise distinct components.
#[test]
fn gl_character_action_is_component_permutation() {
    let field = ResidueField::prime(5).unwrap();
    for n in 2..=3 {
        let g = group(&format!("gl{n}"));
        let d = g.datum();
        for chi in TorusCharacter::enumerate(d, field, 1 << 20).unwrap() {
            let comps = chi.components().to_vec();
            for w in g.elements().unwrap() {
                // w sends e_j to e_{sigma(j)}.
                let moved = weyl_act(&g, w, &chi).unwrap();
                for j in 0..n {
                    let img = g.act_char(w, &Vector::unit(n, j));
                    let k = img.0.iter().position(|&x| x == 1).unwrap();
                    assert_eq!(moved.components()[k], comps[j]);
                }
            }
            let distinct = (0..n).all(|i| (i + 1..n).all(|j| comps[i] != comps[j]));
            assert_eq!(is_generic(&g, &chi).unwrap(), distinct);
            if distinct {
                // The symmetric group acts freely on tuples of distinct entries.
                assert_eq!(genericity(&g, &chi).unwrap(), Genericity::StronglyGeneric);
            }
        }
    }
}
