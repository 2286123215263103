//! How type IV matches relate to singleton and elder non-twin leaves.
//!
//! Each elder non-twin leaf needs a horizontal merge of a type I match into a
//! type IV match, and each singleton leaf a vertical one, but not every such
//! merge creates one: only the bounds hold in general. Likewise the counts of
//! ascending and descending type IV matches do not equal `k` and `i`.

use tiptree_core::psi::type_iv_diagnostics;
use tiptree_core::{gen_labelled_tip_augmented, parse_labelled, stats};

#[test]
fn merge_counts_bound_the_leaf_counts() {
    let mut trees = 0;
    let mut exact = 0;
    let mut literal = 0;
    let mut ascending_is_k = 0;
    let mut descending_is_i = 0;
    for n in 2..=5 {
        for t in gen_labelled_tip_augmented(n) {
            let d = type_iv_diagnostics(&t).unwrap();
            let s = stats(t.shape()).unwrap();
            assert!(d.horizontal_i_into_iv <= s.k, "{t}: {d:?} vs {s}");
            assert!(d.vertical_i_into_iv <= s.i, "{t}: {d:?} vs {s}");
            trees += 1;
            exact += usize::from(d.horizontal_i_into_iv == s.k && d.vertical_i_into_iv == s.i);
            literal += usize::from(d.ascending == s.k && d.descending == s.i);
            ascending_is_k += usize::from(d.ascending == s.k);
            descending_is_i += usize::from(d.descending == s.i);
        }
    }
    println!(
        "{trees} trees: merge counts exact in {exact}, label order exact in {literal} \
         (ascending = k in {ascending_is_k}, descending = i in {descending_is_i})"
    );
    assert!(exact < trees);
    assert!(literal < trees);
}

#[test]
fn label_order_is_not_the_leaf_count() {
    // one singleton and one elder non-twin leaf, but a single type IV match
    let t = parse_labelled("1(2,3(4))").unwrap();
    let d = type_iv_diagnostics(&t).unwrap();
    let s = stats(t.shape()).unwrap();
    assert_eq!((s.i, s.k), (1, 1));
    assert_eq!((d.ascending, d.descending), (1, 0));
}
