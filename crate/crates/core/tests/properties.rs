use proptest::prelude::*;
use tiptree_core::leaf_stats::interior_census;
use tiptree_core::{
    decompose, is_tip_augmented, merge, parse_labelled, parse_tree, phi, phi_with_correspondence,
    psi, stats, Label, LabelledPlaneTree, PlaneTree,
};

fn plane_tree(max_edges: u32) -> impl Strategy<Value = PlaneTree> {
    let leaf = Just(PlaneTree::singleton());
    leaf.prop_recursive(4, max_edges, 4, |inner| {
        prop::collection::vec(inner, 1..4).prop_map(PlaneTree::from_subtrees)
    })
}

/// Builds tip-augmented trees directly: every interior vertex gets a leaf
/// first, followed by arbitrary tip-augmented subtrees.
fn tip_augmented(max_edges: u32) -> impl Strategy<Value = PlaneTree> {
    let leaf = Just(PlaneTree::singleton());
    leaf.prop_recursive(4, max_edges, 3, |inner| {
        prop::collection::vec(inner, 0..3).prop_map(|rest| {
            PlaneTree::from_subtrees(std::iter::once(PlaneTree::singleton()).chain(rest))
        })
    })
}

fn labelled(shape: impl Strategy<Value = PlaneTree>) -> impl Strategy<Value = LabelledPlaneTree> {
    shape
        .prop_flat_map(|t| {
            let labels: Vec<u32> = (1..=t.vertex_count() as u32).collect();
            (Just(t), Just(labels).prop_shuffle())
        })
        .prop_map(|(t, labels)| {
            LabelledPlaneTree::new(t, labels.into_iter().map(Label::plain).collect()).unwrap()
        })
}

proptest! {
    #[test]
    fn parse_serialize_round_trip(t in plane_tree(24)) {
        let word = t.encode();
        prop_assert_eq!(parse_tree(&word).unwrap(), t);
    }

    #[test]
    fn labelled_round_trip(t in labelled(plane_tree(12))) {
        let text = t.encode();
        prop_assert_eq!(parse_labelled(&text).unwrap(), t);
    }

    #[test]
    fn tip_augmented_is_hereditary(t in tip_augmented(24)) {
        prop_assert!(is_tip_augmented(&t));
        for v in t.vertices() {
            prop_assert!(is_tip_augmented(&t.subtree(v)));
        }
    }

    #[test]
    fn phi_swaps_singletons_and_elder_non_twins(t in tip_augmented(30)) {
        let image = phi(&t).unwrap();
        prop_assert_eq!(phi(&image).unwrap(), t.clone());
        prop_assert!(is_tip_augmented(&image));
        prop_assert_eq!(image.edge_count(), t.edge_count());
        if t.edge_count() >= 2 {
            prop_assert_eq!(stats(&image).unwrap(), stats(&t).unwrap().swap_ik());
        }
    }

    #[test]
    fn phi_carries_labels(t in labelled(tip_augmented(16))) {
        let image = phi_with_correspondence(&t).unwrap();
        prop_assert_eq!(image.shape(), &phi(t.shape()).unwrap());
        prop_assert_eq!(phi_with_correspondence(&image).unwrap(), t);
    }

    #[test]
    fn merge_inverts_decompose(t in labelled(plane_tree(7))) {
        prop_assume!(t.edge_count() >= 1);
        let f = decompose(&t).unwrap();
        prop_assert_eq!(f.n(), t.edge_count());
        prop_assert_eq!(merge(&f).unwrap(), t.clone());
        let s = stats(t.shape()).unwrap();
        let (old_int, young_int) = interior_census(t.shape()).unwrap();
        prop_assert_eq!(f.census().as_tuple(), (s.old(), s.young(), old_int, young_int));
    }

    #[test]
    fn psi_is_an_involution(t in labelled(tip_augmented(7))) {
        prop_assume!(t.edge_count() >= 2);
        let image = psi(&t).unwrap();
        prop_assert_eq!(psi(&image).unwrap(), t.clone());
        prop_assert_eq!(stats(image.shape()).unwrap(), stats(t.shape()).unwrap().swap_ik());
    }
}
