use elena::dyck::{dyck_to_tree, is_nondecreasing, tree_to_dyck, valleys};
use elena::elena::{dyck_to_word, is_elena_shape, tree_to_word, word_to_dyck, word_to_tree};
use elena::height4::{elena_to_height4, height4_to_elena, MAX_HEIGHT};
use elena::stats::tree_stats;
use elena::{parse_dyck, parse_elena_word, parse_tree, ElenaWord, PlantedPlaneTree, Token};
use proptest::prelude::*;

fn word() -> impl Strategy<Value = ElenaWord> {
    prop::collection::vec(prop::collection::vec(1usize..6, 0..4), 0..7)
        .prop_map(|blocks| ElenaWord::new(blocks).unwrap())
}

fn tree() -> impl Strategy<Value = PlantedPlaneTree> {
    Just(PlantedPlaneTree::leaf()).prop_recursive(6, 40, 4, |inner| {
        prop::collection::vec(inner, 0..4).prop_map(PlantedPlaneTree::with_children)
    })
}

proptest! {
    #[test]
    fn word_text(w in word()) {
        prop_assert_eq!(parse_elena_word(&w.render()).unwrap(), w.clone());
        prop_assert_eq!(ElenaWord::from_tokens(&w.tokens()).unwrap(), w.clone());
        let weight: usize = w.tokens().iter().map(|t| t.weight()).sum();
        prop_assert_eq!(weight, w.size());
        let tokens = w.tokens();
        prop_assert_eq!(tokens.first(), Some(&Token::A));
        prop_assert_eq!(tokens.last(), Some(&Token::A));
    }

    #[test]
    fn word_tree(w in word()) {
        let t = word_to_tree(&w);
        prop_assert_eq!(t.size(), w.size());
        prop_assert!(is_elena_shape(&t));
        prop_assert_eq!(tree_to_word(&t).unwrap(), w);
    }

    #[test]
    fn word_path(w in word()) {
        let p = word_to_dyck(&w);
        prop_assert_eq!(p.semilength() + 1, w.size());
        prop_assert!(is_nondecreasing(&p));
        let v = valleys(&p);
        prop_assert!(v.windows(2).all(|x| x[0] <= x[1]));
        prop_assert_eq!(dyck_to_word(&p).unwrap(), w.clone());
        prop_assert_eq!(dyck_to_tree(&p), word_to_tree(&w));
    }

    #[test]
    fn word_height4(w in word()) {
        let t = elena_to_height4(&w);
        prop_assert_eq!(t.size(), w.size());
        prop_assert!(t.height() <= MAX_HEIGHT);
        prop_assert_eq!(height4_to_elena(&t).unwrap(), w);
    }

    #[test]
    fn tree_text_and_glove(t in tree()) {
        prop_assert_eq!(parse_tree(&t.render()).unwrap(), t.clone());
        let p = tree_to_dyck(&t);
        prop_assert_eq!(p.semilength() + 1, t.size());
        prop_assert_eq!(parse_dyck(&p.render()).unwrap(), p.clone());
        prop_assert_eq!(dyck_to_tree(&p), t.clone());
        prop_assert_eq!(is_elena_shape(&t), is_nondecreasing(&p));
        prop_assert_eq!(tree_to_word(&t).is_ok(), is_elena_shape(&t));
    }

    #[test]
    fn short_trees_invert(t in tree()) {
        match height4_to_elena(&t) {
            Ok(w) => {
                prop_assert!(t.height() <= MAX_HEIGHT);
                prop_assert_eq!(elena_to_height4(&w), t);
            }
            Err(_) => prop_assert!(t.height() > MAX_HEIGHT),
        }
    }

    #[test]
    fn per_tree_identities(w in word()) {
        let r = tree_stats(&w);
        prop_assert_eq!(&r.psi, &r.path_length);
        prop_assert_eq!(r.leaves, r.paths + 1);
        prop_assert_eq!(r.spine_nodes + r.path_nodes, w.size());
    }
}
