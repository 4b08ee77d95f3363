mod common;

use std::collections::BTreeSet;

use common::{all_shapes, label, labels, oracle_neighbours, random_term, show};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tileproof::decision::closure;
use tileproof::geometry::all_leaves_on_border;
use tileproof::{
    apply_move, border_word, enumerate_moves, invert_move, leaf_multiset, parse_term, BorderWord, Term,
};

fn library_neighbours(t: &Term) -> BTreeSet<String> {
    enumerate_moves(t)
        .iter()
        .map(|m| apply_move(t, m).unwrap())
        .filter(|n| n != t)
        .map(|n| show(&n))
        .collect()
}

#[test]
fn moves_match_binary_oracle_up_to_six_leaves() {
    let alphabet = labels(&["a", "b", "c", "d", "e", "f"]);
    let mut checked = 0;
    for n in 1..=6 {
        let shapes = all_shapes(&alphabet[..n]);
        assert_eq!(shapes.len(), [1, 2, 6, 22, 90, 394][n - 1]);
        for t in &shapes {
            assert_eq!(library_neighbours(t), oracle_neighbours(t), "{}", show(t));
            checked += 1;
        }
    }
    assert_eq!(checked, 515);
}

#[test]
fn moves_match_oracle_with_repeated_labels() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let alphabet = labels(&["a", "b"]);
    for _ in 0..300 {
        let t = random_term(&mut rng, 7, &alphabet);
        assert_eq!(library_neighbours(&t), oracle_neighbours(&t), "{}", show(&t));
    }
}

#[test]
fn two_by_two_closure() {
    let t = parse_term("[a b; c d]").unwrap();
    let c = closure(&t, 100).unwrap();
    let got: BTreeSet<String> = c.iter().map(|t| t.to_string()).collect();
    let want: BTreeSet<String> = ["(a|b)/(c|d)", "(a/c)|(b/d)"].iter().map(|s| s.to_string()).collect();
    assert_eq!(got, want);
}

#[test]
fn border_preserved_when_everything_touches_it() {
    for (src, word) in [
        ("[a b; c d]", vec!["c", "d", "b", "a"]),
        ("(a|b)/(c|d|e)", vec!["c", "d", "e", "b", "a"]),
    ] {
        let t = parse_term(src).unwrap();
        let want = BorderWord(labels(&word));
        let mut seen = 0;
        for u in closure(&t, 10_000).unwrap() {
            if all_leaves_on_border(&u) {
                assert!(border_word(&u).cyclic_eq(&want), "{u}");
                seen += 1;
            }
        }
        assert!(seen >= 2);
    }
}

#[test]
fn closure_of_grid_rows_reaches_columns() {
    let t = parse_term("[a b c; d e f; g h i]").unwrap();
    let cols = parse_term("(a/d/g)|(b/e/h)|(c/f/i)").unwrap();
    assert!(closure(&t, 100_000).unwrap().contains(&cols));
}

fn arb_term() -> impl Strategy<Value = Term> {
    let leaf = prop::sample::select(vec!["a", "b", "c", "d"]).prop_map(|s| Term::Leaf(label(s)));
    leaf.prop_recursive(4, 12, 4, |inner| {
        (any::<bool>(), prop::collection::vec(inner, 2..4))
            .prop_map(|(h, kids)| if h { Term::h(kids) } else { Term::v(kids) })
    })
    .prop_filter("at most 12 leaves", |t| t.leaf_count() <= 12)
}

proptest! {
    #[test]
    fn every_enumerated_move_is_sound(t in arb_term()) {
        for m in enumerate_moves(&t) {
            let u = apply_move(&t, &m).unwrap();
            prop_assert!(u.is_flat());
            prop_assert_eq!(leaf_multiset(&u), leaf_multiset(&t));
            let back = invert_move(&t, &m).unwrap();
            prop_assert_eq!(apply_move(&u, &back).unwrap(), t.clone());
        }
    }

    #[test]
    fn enumeration_is_complete(t in arb_term().prop_filter("small", |t| t.leaf_count() <= 7)) {
        prop_assert_eq!(library_neighbours(&t), oracle_neighbours(&t));
    }
}
