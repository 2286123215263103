//! Generators and counting functions against brute force and closed forms.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use tiptree_core::enumeration::{gen_tip_augmented_with, Strategy};
use tiptree_core::{
    catalan, distribution_table, gen_labelled_tip_augmented, gen_plane_trees, gen_tip_augmented,
    is_tip_augmented, motzkin, PlaneTree,
};

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn catalan_oracle(n: u128) -> u128 {
    binomial(2 * n, n) / (n + 1)
}

fn motzkin_oracle(k: u128) -> u128 {
    (0..=k / 2)
        .map(|j| binomial(k, 2 * j) * catalan_oracle(j))
        .sum()
}

/// Every word over `(` and `)` of length `2(n+1)` that encodes one tree.
fn brute_force_words(n: usize) -> BTreeSet<String> {
    let len = 2 * (n + 1);
    let mut out = BTreeSet::new();
    for bits in 0u32..(1 << len) {
        let word: String = (0..len)
            .rev()
            .map(|b| if bits >> b & 1 == 1 { '(' } else { ')' })
            .collect();
        let mut depth = 0i32;
        let mut ok = true;
        for (pos, ch) in word.chars().enumerate() {
            depth += if ch == '(' { 1 } else { -1 };
            // the root may only close at the very end
            if depth < 0 || (depth == 0 && pos + 1 < len) {
                ok = false;
                break;
            }
        }
        if ok && depth == 0 {
            out.insert(word);
        }
    }
    out
}

fn encoded(trees: &[PlaneTree]) -> BTreeSet<String> {
    trees.iter().map(PlaneTree::encode).collect()
}

#[test]
fn motzkin_sequence() {
    let published = [
        1u32, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511, 41835, 113634,
    ];
    for (k, &m) in published.iter().enumerate() {
        assert_eq!(motzkin(k), BigUint::from(m), "m_{k}");
    }
    for k in 0..60 {
        assert_eq!(
            motzkin(k),
            BigUint::from(motzkin_oracle(k as u128)),
            "m_{k}"
        );
    }
}

#[test]
fn catalan_sequence() {
    for k in 0..60 {
        assert_eq!(
            catalan(k),
            BigUint::from(catalan_oracle(k as u128)),
            "C_{k}"
        );
    }
}

#[test]
fn plane_trees_match_brute_force() {
    for n in 0..=7 {
        let trees = gen_plane_trees(n);
        assert_eq!(trees.len() as u128, catalan_oracle(n as u128));
        assert_eq!(encoded(&trees), brute_force_words(n), "n={n}");
    }
}

#[test]
fn tip_augmented_match_brute_force() {
    for n in 0..=7 {
        let want: BTreeSet<String> = brute_force_words(n)
            .into_iter()
            .filter(|w| !w.contains("((("))
            .collect();
        let got = gen_tip_augmented(n);
        assert_eq!(encoded(&got), want, "n={n}");
        assert!(got.iter().all(is_tip_augmented));
    }
}

#[test]
fn generators_are_sorted_and_agree() {
    for n in 0..=10 {
        let built = gen_tip_augmented(n);
        assert!(built.windows(2).all(|w| w[0] < w[1]), "n={n}");
        assert_eq!(built, gen_tip_augmented_with(n, Strategy::Filter), "n={n}");
    }
}

#[test]
fn twelve_edges() {
    let trees = gen_tip_augmented(12);
    assert_eq!(trees.len(), 5798);
    assert_eq!(encoded(&trees).len(), 5798);
}

#[test]
fn labelled_counts() {
    let fact = |n: usize| (1..=n).product::<usize>();
    for n in 1..=4 {
        let trees = gen_labelled_tip_augmented(n);
        assert_eq!(
            trees.len(),
            motzkin_oracle(n as u128 - 1) as usize * fact(n + 1)
        );
        let distinct: BTreeSet<String> = trees.iter().map(|t| t.encode()).collect();
        assert_eq!(distinct.len(), trees.len());
    }
}

#[test]
fn table_for_four_edges() {
    let table = distribution_table(4).unwrap();
    assert_eq!(table.total(), BigUint::from(4u32));
    assert_eq!(table.to_csv().lines().count(), 5);
    for n in 2..=9 {
        let table = distribution_table(n).unwrap();
        assert_eq!(table.total(), BigUint::from(motzkin_oracle(n as u128 - 1)));
        // every tree has n edges worth of leaves and interior vertices
        for v in table.rows.keys() {
            assert!(v.leaves() >= 1 && v.leaves() <= n);
        }
    }
}
