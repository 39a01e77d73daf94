//! Altitudes and valleys of Dyck paths, the glove bijection with planted
//! plane trees, and lexicographic enumeration.

use crate::error::{Error, Result};
use crate::path::{DyckPath, Step};
use crate::tree::PlantedPlaneTree;

/// Largest semilength `enumerate_dyck_paths` accepts.
pub const DEFAULT_DYCK_LIMIT: usize = 12;

/// Height after each step.
pub fn altitude_profile(path: &DyckPath) -> Vec<usize> {
    let mut height = 0usize;
    path.steps()
        .iter()
        .map(|step| {
            match step {
                Step::Up => height += 1,
                Step::Down => height -= 1,
            }
            height
        })
        .collect()
}

/// Altitudes of the valleys (a down step immediately followed by an up
/// step), left to right.
pub fn valleys(path: &DyckPath) -> Vec<usize> {
    let altitudes = altitude_profile(path);
    path.steps()
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] == Step::Down && w[1] == Step::Up)
        .map(|(i, _)| altitudes[i])
        .collect()
}

pub fn is_nondecreasing(path: &DyckPath) -> bool {
    first_decrease(path).is_none()
}

/// Index of the first valley lower than its predecessor.
pub(crate) fn first_decrease(path: &DyckPath) -> Option<usize> {
    valleys(path)
        .windows(2)
        .position(|w| w[1] < w[0])
        .map(|i| i + 1)
}

/// First-return decomposition: `(U w1 D)(U w2 D)...` becomes a root whose
/// children are the trees of `w1, w2, ...` in reading order.
pub fn dyck_to_tree(path: &DyckPath) -> PlantedPlaneTree {
    let mut stack: Vec<Vec<PlantedPlaneTree>> = vec![Vec::new()];
    for step in path.steps() {
        match step {
            Step::Up => stack.push(Vec::new()),
            Step::Down => {
                let children = stack.pop().expect("valid path");
                let node = PlantedPlaneTree::with_children(children);
                stack.last_mut().expect("valid path").push(node);
            }
        }
    }
    let root = stack.pop().expect("valid path");
    debug_assert!(stack.is_empty());
    PlantedPlaneTree::with_children(root)
}

pub fn tree_to_dyck(tree: &PlantedPlaneTree) -> DyckPath {
    fn walk(t: &PlantedPlaneTree, out: &mut Vec<Step>) {
        for c in t.children() {
            out.push(Step::Up);
            walk(c, out);
            out.push(Step::Down);
        }
    }
    let mut steps = Vec::new();
    walk(tree, &mut steps);
    DyckPath::from_steps_unchecked(steps)
}

pub fn enumerate_dyck_paths(n: usize) -> Result<DyckPaths> {
    enumerate_dyck_paths_limited(n, DEFAULT_DYCK_LIMIT)
}

pub fn enumerate_dyck_paths_limited(n: usize, limit: usize) -> Result<DyckPaths> {
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "Dyck path semilength",
            requested: n,
            limit,
        });
    }
    Ok(DyckPaths::new(n))
}

/// All Dyck paths of semilength `n` in lexicographic order with `U < D`.
#[derive(Debug, Clone)]
pub struct DyckPaths {
    current: Option<Vec<Step>>,
}

impl DyckPaths {
    fn new(n: usize) -> Self {
        let mut first = vec![Step::Up; n];
        first.extend(std::iter::repeat_n(Step::Down, n));
        DyckPaths {
            current: Some(first),
        }
    }

    fn advance(steps: &[Step]) -> Option<Vec<Step>> {
        let len = steps.len();
        let mut heights = Vec::with_capacity(len + 1);
        heights.push(0isize);
        for s in steps {
            let h = heights.last().unwrap() + if *s == Step::Up { 1 } else { -1 };
            heights.push(h);
        }
        // Rightmost up step that can become a down step.
        let i = (0..len)
            .rev()
            .find(|&i| steps[i] == Step::Up && heights[i] >= 1)?;
        let mut next = steps[..i].to_vec();
        next.push(Step::Down);
        let height = (heights[i] - 1) as usize;
        let rest = len - i - 1;
        let ups = (rest - height) / 2;
        next.extend(std::iter::repeat_n(Step::Up, ups));
        next.extend(std::iter::repeat_n(Step::Down, rest - ups));
        Some(next)
    }
}

impl Iterator for DyckPaths {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let steps = self.current.take()?;
        self.current = Self::advance(&steps);
        Some(DyckPath::from_steps_unchecked(steps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::parse_dyck;
    use crate::tree::parse_tree;

    const SAMPLE: &str = "UDUUDUUDUDDD";

    fn p(s: &str) -> DyckPath {
        parse_dyck(s).unwrap()
    }

    #[test]
    fn altitudes() {
        assert_eq!(
            altitude_profile(&p(SAMPLE)),
            vec![1, 0, 1, 2, 1, 2, 3, 2, 3, 2, 1, 0]
        );
        assert!(altitude_profile(&p("")).is_empty());
        assert_eq!(altitude_profile(&p("UUDD")), vec![1, 2, 1, 0]);
    }

    #[test]
    fn valley_sequences() {
        assert_eq!(valleys(&p(SAMPLE)), vec![0, 1, 2]);
        assert!(valleys(&p("UUDD")).is_empty());
        assert_eq!(valleys(&p("UUDUDDUD")), vec![1, 0]);
    }

    #[test]
    fn nondecreasing_test() {
        assert!(is_nondecreasing(&p(SAMPLE)));
        assert!(is_nondecreasing(&p("")));
        assert!(!is_nondecreasing(&p("UUDUDDUD")));
        assert!(is_nondecreasing(&p("UDUDUD")));
    }

    #[test]
    fn glove_small_cases() {
        assert_eq!(dyck_to_tree(&p("")), PlantedPlaneTree::leaf());
        assert_eq!(dyck_to_tree(&p("UD")).render(), "(())");
        assert_eq!(tree_to_dyck(&PlantedPlaneTree::chain(3)).render(), "UUDD");
        assert_eq!(tree_to_dyck(&PlantedPlaneTree::leaf()).render(), "");
    }

    #[test]
    fn glove_sample() {
        // root: [leaf, X]; X: [leaf, Y]; Y: [leaf, leaf]
        let expected = parse_tree("(()(()(()())))").unwrap();
        let t = dyck_to_tree(&p(SAMPLE));
        assert_eq!(t, expected);
        assert_eq!(t.size(), 7);
        assert_eq!(tree_to_dyck(&t).render(), SAMPLE);
    }

    #[test]
    fn enumeration_counts() {
        let zero: Vec<_> = enumerate_dyck_paths(0).unwrap().collect();
        assert_eq!(zero, vec![DyckPath::empty()]);
        let three: Vec<String> = enumerate_dyck_paths(3)
            .unwrap()
            .map(|p| p.render())
            .collect();
        assert_eq!(three, ["UUUDDD", "UUDUDD", "UUDDUD", "UDUUDD", "UDUDUD"]);
    }

    #[test]
    fn nondecreasing_filter_small() {
        let count = |n| {
            enumerate_dyck_paths(n)
                .unwrap()
                .filter(is_nondecreasing)
                .count()
        };
        assert_eq!(count(3), 5);
        assert_eq!(count(4), 13);
    }

    #[test]
    fn limit() {
        assert!(matches!(
            enumerate_dyck_paths(13),
            Err(Error::LimitExceeded { requested: 13, .. })
        ));
        assert!(enumerate_dyck_paths_limited(13, 13).is_ok());
    }
}
