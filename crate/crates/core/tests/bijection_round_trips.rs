use std::collections::BTreeSet;

use borel_core::bijections::*;
use borel_core::dumont::{enumerate_dumont_avoiding, is_primitive};
use borel_core::dyck::{enumerate_dyck, enumerate_plane_forests, DyckPath};
use borel_core::marked::*;
use borel_core::perm::Permutation;
use proptest::prelude::*;

#[test]
fn leaf_marked_trees_and_udd_paths() {
    for unmarked in 0..=6 {
        let trees = enumerate_marked_trees(TreeFlavor::LeafMarked, unmarked);
        let mut images = BTreeSet::new();
        for t in &trees {
            let p = leafmarked_to_uddpath(t).unwrap();
            assert_eq!(p.marks().len(), t.marks().len());
            assert_eq!(p.semilength(), t.tree().size());
            assert_eq!(&uddpath_to_leafmarked(&p).unwrap(), t);
            images.insert(p);
        }
        assert_eq!(images.len(), trees.len());
        // The image is every UDD-marked path of the matching sizes.
        let max_k = unmarked.saturating_sub(1);
        let expected: BTreeSet<MarkedDyckPath> = (0..=max_k)
            .flat_map(|k| enumerate_udd_marked(unmarked + k, k))
            .collect();
        assert_eq!(images, expected, "unmarked={unmarked}");
    }
}

#[test]
fn full_binary_word_round_trip() {
    for v in 0..=8 {
        for t in borel_core::tree::enumerate_binary_trees(v) {
            let (full, emb) = to_full_binary(&t);
            assert!(full.is_full());
            assert_eq!(emb.len(), t.size());
            let (back, _) = strip_leaves(&full).unwrap();
            assert_eq!(back, t);
            let w = full_binary_to_word(&full).unwrap();
            assert_eq!(w.semilength(), t.size());
            if !t.is_empty() {
                assert_eq!(word_to_full_binary(&w), full);
            }
        }
    }
}

#[test]
fn forests_and_binary_trees() {
    for v in 1..=7 {
        for f in enumerate_plane_forests(v) {
            let t = forest_to_binary(&f);
            assert_eq!(t.size(), v);
            assert_eq!(t.right_spine(), forest_roots(&f));
            assert_eq!(binary_to_forest(&t), f);
        }
    }
}

#[test]
fn marked_forests_are_right_spine_free_trees() {
    for v in 1..=6 {
        let mut count = 0;
        for f in enumerate_plane_forests(v) {
            let roots: BTreeSet<usize> = forest_roots(&f).into_iter().collect();
            let free: Vec<usize> = (0..v).filter(|i| !roots.contains(i)).collect();
            for mask in 0u32..1 << free.len() {
                let marks: BTreeSet<usize> = free
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &i)| i)
                    .collect();
                let m = marked_forest_to_binary(&f, &marks).unwrap();
                assert_eq!(marked_binary_to_forest(&m).unwrap(), (f.clone(), marks));
                count += 1;
            }
        }
        assert_eq!(
            count,
            enumerate_marked_trees(TreeFlavor::RightSpineFree, v).len()
        );
    }
}

#[test]
fn rho_is_a_bijection() {
    for n in 0..=5 {
        let class = enumerate_dumont_avoiding(2 * n).unwrap();
        let mut images = BTreeSet::new();
        for p in &class {
            let image = rho(p).unwrap();
            assert_eq!(image.semilength(), n);
            assert!(image.validate().is_ok(), "{p} -> {image}");
            assert_eq!(&rho_inverse(&image).unwrap(), p, "{image}");
            images.insert(image);
        }
        let all: BTreeSet<MarkedDyckPath> =
            enumerate_marked_dyck(n, PathFlavor::DownNotGround).collect();
        assert_eq!(images, all, "n={n}");
    }
}

#[test]
fn rho_case_discrimination() {
    for n in 1..=6 {
        for p in enumerate_dumont_avoiding(2 * n).unwrap() {
            let image = rho(&p).unwrap();
            assert_eq!(
                rho_case_of_permutation(&p).unwrap(),
                rho_case_of_path(&image),
                "{p}"
            );
            assert_eq!(is_primitive(&p), image.path().is_primitive(), "{p}");
        }
    }
}

#[test]
fn sqcup_examples_and_failure_outside_domain() {
    let down = |s: &str| MarkedDyckPath::parse(s, PathFlavor::DownNotGround).unwrap();
    // A primitive right operand with a level-1 mark collides with a
    // two-factor operand, so the split cannot recover both.
    let a = sqcup(&down("UD"), &down("UUDD [2]")).unwrap();
    let b = sqcup(&down("UD"), &down("UDUD")).unwrap();
    assert_eq!(a, b);
    assert_eq!(sqcup_split(&a).unwrap(), (down("UD"), down("UDUD")));
    assert!(sqcup_split(&down("UDUD")).is_err());
    assert!(sqcup_split(&down("UUDD")).is_err());
}

fn marked_strategy(max_n: usize) -> impl Strategy<Value = MarkedDyckPath> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let count = enumerate_dyck(n).count();
            (Just(n), 0..count, any::<u64>())
        })
        .prop_map(|(n, i, bits)| {
            let p: DyckPath = enumerate_dyck(n).nth(i).unwrap();
            let pos: Vec<usize> = markable_positions(&p, PathFlavor::DownNotGround)
                .into_iter()
                .collect();
            let marks = pos
                .iter()
                .enumerate()
                .filter(|(b, _)| bits >> b & 1 == 1)
                .map(|(_, &i)| i)
                .collect();
            MarkedDyckPath::new(p, PathFlavor::DownNotGround, marks).unwrap()
        })
}

/// Second operands the splice can always undo: non-primitive, or primitive
/// without a mark at level 1.
fn splittable(p: &MarkedDyckPath) -> bool {
    !p.path().is_primitive() || {
        let levels = p.path().levels();
        p.marks().iter().all(|&m| levels[m] != 1)
    }
}

proptest! {
    #[test]
    fn sqcup_is_primitive_and_splits(p1 in marked_strategy(6), p2 in marked_strategy(6)) {
        let s = sqcup(&p1, &p2).unwrap();
        prop_assert!(s.path().is_primitive());
        prop_assert!(s.validate().is_ok());
        prop_assert_eq!(s.semilength(), p1.semilength() + p2.semilength());
        let added = if p2.path().is_primitive() { 1 } else { 2 };
        prop_assert_eq!(s.marks().len(), p1.marks().len() + p2.marks().len() + added);
        if splittable(&p2) {
            prop_assert_eq!(sqcup_split(&s).unwrap(), (p1, p2));
        }
    }

    #[test]
    fn factorization_round_trip(p in marked_strategy(9)) {
        let f = primitive_factors(&p);
        prop_assert!(f.factors.iter().all(|q| q.path().is_primitive()));
        prop_assert_eq!(f.concat(), p);
    }

    #[test]
    fn rho_inverse_then_rho(p in marked_strategy(7)) {
        let pi: Permutation = rho_inverse(&p).unwrap();
        prop_assert!(borel_core::dumont::in_class(&pi));
        prop_assert_eq!(rho(&pi).unwrap(), p);
    }
}
