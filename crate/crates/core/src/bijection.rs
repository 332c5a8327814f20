//! The statistic-preserving bijection between Schröder paths of size `n`
//! and the avoidance class of length `n + 1`, in two independent forms:
//!
//! * a recursive form driven by the diagonal-prepend and first-return
//!   decompositions (normative), and
//! * a direct form that labels the upper triangles between the path and
//!   the diagonal with adjacent transpositions, reads them off in diagonal
//!   runs, and applies the resulting word to the decreasing permutation.
//!
//! The two are cross-checked exhaustively in the test suites.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::path::{PathDecomposition, SchroderPath, Step};
use crate::perm::{Decomposition, PatternSet, Permutation};
use crate::{Error, Result};

/// Image of a path under the bijection, computed recursively:
/// the empty path maps to `1`, a leading diagonal step prepends a new
/// maximum, and a first-return product maps to the star product of the
/// factor images.
pub fn path_to_perm(path: &SchroderPath) -> Permutation {
    if path.is_empty() {
        return Permutation::identity(1);
    }
    match path.decompose().expect("nonempty path decomposes") {
        PathDecomposition::Diag(rest) => path_to_perm(&rest).prepend_max(),
        PathDecomposition::FirstReturn(p1, p2) => path_to_perm(&p1)
            .star(&path_to_perm(&p2))
            .expect("images of paths are nonempty"),
    }
}

/// Inverse of [`path_to_perm`]: only defined on nonempty permutations
/// avoiding 1243 and 2143.
pub fn perm_to_path(pi: &Permutation) -> Result<SchroderPath> {
    if pi.is_empty() {
        return Err(Error::NotInClass("the empty permutation has no preimage".into()));
    }
    if !pi.is_avoiding(&PatternSet::schroder()) {
        return Err(Error::NotInClass(format!("{pi} contains 1243 or 2143")));
    }
    Ok(perm_to_path_unchecked(pi))
}

fn perm_to_path_unchecked(pi: &Permutation) -> SchroderPath {
    if pi.len() == 1 {
        return SchroderPath::empty();
    }
    match pi.decompose().expect("class permutation decomposes") {
        Decomposition::Prepend(rest) => perm_to_path_unchecked(&rest).prepend_diag(),
        Decomposition::Star(p1, p2) => {
            perm_to_path_unchecked(&p1).first_return_product(&perm_to_path_unchecked(&p2))
        }
    }
}

/// Word of adjacent transpositions read off a path's triangle diagram,
/// grouped into the diagonal runs in which they are read.  Index `i`
/// swaps positions `i` and `i + 1`; the word is applied right to left,
/// so the first block acts first and within a block the rightmost
/// (smallest) index acts first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranspositionWord {
    pub blocks: Vec<Vec<usize>>,
}

impl TranspositionWord {
    /// Applies the word to `(n+1, n, ..., 2, 1)`.
    pub fn apply_to_decreasing(&self, n_plus_one: usize) -> Permutation {
        let mut entries: Vec<u32> = (1..=n_plus_one as u32).rev().collect();
        for block in &self.blocks {
            for &i in block.iter().rev() {
                entries.swap(i - 1, i);
            }
        }
        Permutation::new(entries).expect("transpositions preserve permutations")
    }
}

impl fmt::Display for TranspositionWord {
    /// `s8 s7 s6 s5 | s7 | ...`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return write!(f, "(empty word)");
        }
        let rendered: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|i| format!("s{i}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{}", rendered.join(" | "))
    }
}

/// Builds the transposition word of a path from its triangle diagram.
///
/// Geometry: for the unit square over column `c` (the x-interval
/// `[c-1, c]`), the upper triangle with corners `(c-1, j-1)`, `(c-1, j)`,
/// `(c, j)` lies below the path and above the diagonal exactly when
/// `c <= j <= y`, where `y` is the height of the left endpoint of the
/// horizontal (east or diagonal) step crossing that column.  Each such
/// triangle is labeled `s_c`.
///
/// Reading order: repeatedly start at the unread triangle in the largest
/// column, lowest diagonal first, and walk diagonally down-left
/// (`(c, j) -> (c-1, j-1)`), consuming triangles until the left edge of the
/// current triangle is a north step of the path.  The prose description of
/// this order underdetermines a few ties; the reading implemented here is
/// the one consistent with the worked examples and provably equal to the
/// recursive form (the first run of a first-return block is its top-level
/// `s_i ... s_1` staircase, preceded by the runs of the right factor and
/// followed by those of the left factor).
pub fn transposition_word(path: &SchroderPath) -> TranspositionWord {
    // Trace the path, recording north steps and the triangles per column.
    let mut north_steps: HashSet<(u64, u64)> = HashSet::new(); // (x, lower y)
    let mut unread: BTreeSet<(u64, u64)> = BTreeSet::new(); // (column, j)
    let mut x: u64 = 0;
    let mut y: u64 = 0;
    for &s in path.steps() {
        match s {
            Step::North => {
                north_steps.insert((x, y));
                y += 1;
            }
            Step::East | Step::Diag => {
                let column = x + 1;
                for j in column..=y {
                    unread.insert((column, j));
                }
                x += 1;
                if s == Step::Diag {
                    y += 1;
                }
            }
        }
    }
    let mut blocks = Vec::new();
    while let Some(&(cmax, _)) = unread.iter().next_back() {
        // Start of the next run: largest column, then lowest diagonal.
        let &(mut c, mut j) = unread.range((cmax, 0)..).next().expect("column nonempty");
        let mut block = Vec::new();
        loop {
            unread.remove(&(c, j));
            block.push(c as usize);
            // Stop when the triangle's left edge lies on the path.
            if north_steps.contains(&(c - 1, j - 1)) {
                break;
            }
            c -= 1;
            j -= 1;
            debug_assert!(unread.contains(&(c, j)), "diagonal run left the diagram");
        }
        blocks.push(block);
    }
    TranspositionWord { blocks }
}

/// Image of a path under the bijection, computed from the triangle
/// diagram.  Always equals [`path_to_perm`]; kept as an independent
/// construction for cross-validation.
pub fn path_to_perm_direct(path: &SchroderPath) -> Permutation {
    transposition_word(path).apply_to_decreasing(path.size() + 1)
}

/// Embeds a 132-avoiding permutation `pi` as `(1, pi + 1)`, a class
/// permutation beginning with 1.
pub fn embed_132_avoider(pi: &Permutation) -> Result<Permutation> {
    let p132 = Permutation::new(vec![1, 3, 2]).unwrap();
    if pi.contains(&p132) {
        return Err(Error::InvalidInput(format!("{pi} contains 132")));
    }
    let mut entries = Vec::with_capacity(pi.len() + 1);
    entries.push(1);
    entries.extend(pi.entries().iter().map(|&v| v + 1));
    Ok(Permutation::new(entries).expect("shift keeps a permutation"))
}

/// The classical statistic-preserving map from 132-avoiding permutations
/// to Catalan (diagonal-free Schröder) paths, realized as the bijection
/// inverse composed with [`embed_132_avoider`].
pub fn catalan_path_map(pi: &Permutation) -> Result<SchroderPath> {
    perm_to_path(&embed_132_avoider(pi)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::all_paths;
    use crate::perm::class_members;
    use num::bigint::BigInt;

    fn sp(s: &str) -> SchroderPath {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn base_cases() {
        assert_eq!(path_to_perm(&SchroderPath::empty()), p("1"));
        assert_eq!(path_to_perm(&sp("D")), p("21"));
        assert_eq!(path_to_perm(&sp("NE")), p("12"));
        assert_eq!(path_to_perm_direct(&sp("D")), p("21"));
        assert_eq!(path_to_perm_direct(&sp("NE")), p("12"));
        assert_eq!(perm_to_path(&p("1")).unwrap(), SchroderPath::empty());
        assert_eq!(perm_to_path(&p("21")).unwrap(), sp("D"));
    }

    #[test]
    fn worked_examples() {
        assert_eq!(path_to_perm(&sp("NDNNEEENNDENEE")), p("836791425"));
        assert_eq!(path_to_perm(&sp("DNEDDNNENDEE")), p("978624135"));
        assert_eq!(path_to_perm(&sp("NNENDNNEDEEDE")), p("683425719"));
        assert_eq!(path_to_perm_direct(&sp("NDNNEEENNDENEE")), p("836791425"));
        assert_eq!(path_to_perm_direct(&sp("DNEDDNNENDEE")), p("978624135"));
        assert_eq!(path_to_perm_direct(&sp("NNENDNNEDEEDE")), p("683425719"));
        assert_eq!(perm_to_path(&p("836791425")).unwrap(), sp("NDNNEEENNDENEE"));
        assert_eq!(perm_to_path(&p("978624135")).unwrap(), sp("DNEDDNNENDEE"));
        assert_eq!(perm_to_path(&p("683425719")).unwrap(), sp("NNENDNNEDEEDE"));
    }

    #[test]
    fn worked_example_word_blocks() {
        let w = transposition_word(&sp("NDNNEEENNDENEE"));
        assert_eq!(
            w.blocks,
            vec![
                vec![8, 7, 6, 5],
                vec![7],
                vec![6, 5],
                vec![4, 3, 2, 1],
                vec![3, 2],
                vec![2],
            ]
        );
        assert_eq!(w.to_string(), "s8 s7 s6 s5 | s7 | s6 s5 | s4 s3 s2 s1 | s3 s2 | s2");

        let w = transposition_word(&sp("DNEDDNNENDEE"));
        assert_eq!(
            w.blocks,
            vec![vec![8, 7, 6, 5], vec![7, 6], vec![5], vec![2]]
        );
        let w = transposition_word(&sp("NNENDNNEDEEDE"));
        assert_eq!(
            w.blocks,
            vec![
                vec![8, 7, 6, 5, 4, 3, 2, 1],
                vec![6, 5, 4, 3, 2],
                vec![5, 4, 3],
                vec![3],
                vec![1],
            ]
        );
        assert_eq!(transposition_word(&sp("D")).blocks, Vec::<Vec<usize>>::new());
    }

    #[test]
    fn direct_equals_recursive_exhaustively() {
        for n in 0..=6 {
            for path in all_paths(n).unwrap() {
                assert_eq!(
                    path_to_perm_direct(&path),
                    path_to_perm(&path),
                    "path = {path}"
                );
            }
        }
    }

    #[test]
    fn bijectivity_small() {
        let set = PatternSet::schroder();
        for n in 0..=6usize {
            let mut images = std::collections::HashSet::new();
            for path in all_paths(n).unwrap() {
                let perm = path_to_perm(&path);
                assert_eq!(perm.len(), n + 1);
                assert!(perm.is_avoiding(&set), "image {perm} not in class");
                assert!(images.insert(perm.clone()), "collision at {perm}");
                assert_eq!(perm_to_path(&perm).unwrap(), path);
            }
            assert_eq!(images.len(), class_members(n + 1, &set).unwrap().len());
        }
    }

    #[test]
    fn statistics_preserved_small() {
        for n in 0..=5 {
            for path in all_paths(n).unwrap() {
                let perm = path_to_perm(&path);
                for k in 0..=n + 2 {
                    assert_eq!(path.tau(k), perm.tau(k), "path = {path}, k = {k}");
                }
            }
        }
    }

    #[test]
    fn inverse_rejects_non_members() {
        assert!(matches!(perm_to_path(&p("1243")), Err(Error::NotInClass(_))));
        assert!(matches!(
            perm_to_path(&Permutation::empty()),
            Err(Error::NotInClass(_))
        ));
    }

    #[test]
    fn embedding_and_catalan_map() {
        assert_eq!(embed_132_avoider(&p("21")).unwrap(), p("132"));
        assert_eq!(embed_132_avoider(&Permutation::empty()).unwrap(), p("1"));
        assert!(embed_132_avoider(&p("132")).is_err());
        assert_eq!(catalan_path_map(&Permutation::empty()).unwrap(), SchroderPath::empty());

        let p132 = Permutation::new(vec![1, 3, 2]).unwrap();
        let avoid132 = PatternSet::new(vec![p132]).unwrap();
        for n in 0..=6 {
            let mut seen = std::collections::HashSet::new();
            for pi in class_members(n, &avoid132).unwrap() {
                let image = embed_132_avoider(&pi).unwrap();
                assert_eq!(image.entries()[0], 1);
                assert!(seen.insert(image.clone()));
                let path = catalan_path_map(&pi).unwrap();
                assert!(
                    path.steps().iter().all(|s| !matches!(s, Step::Diag)),
                    "pi = {pi} gives non-Catalan path {path}"
                );
                for k in 1..=n + 1 {
                    // The path carries the statistics of the embedded
                    // permutation, not of pi itself.
                    assert_eq!(path.tau(k), image.tau(k), "pi = {pi}, k = {k}");
                    // The classical preservation uses east steps with
                    // right-endpoint heights.
                    assert_eq!(
                        dyck_tau(&path, k),
                        pi.tau(k),
                        "pi = {pi}, k = {k} (east-step statistic)"
                    );
                }
            }
        }
    }

    /// East-step statistic on a diagonal-free path: the sum of
    /// `C(ht(s) - 1, k - 1)` over east steps, heights at the left endpoint.
    fn dyck_tau(path: &SchroderPath, k: usize) -> BigInt {
        use crate::series::{binom, BinomMode};
        let mut acc = BigInt::from(0);
        for rec in path.height_profile().records {
            if rec.step == Step::East {
                let h = rec.height.unwrap() as i64;
                acc += binom(h - 1, k as i64 - 1, BinomMode::Standard);
            }
        }
        acc
    }

    #[test]
    fn embedding_statistic_shift() {
        // The prepended minimum extends every increasing subsequence, so
        // tau_k(1, pi+1) = tau_k(pi) + tau_{k-1}(pi), plus one at k = 1.
        let p132 = Permutation::new(vec![1, 3, 2]).unwrap();
        let avoid132 = PatternSet::new(vec![p132]).unwrap();
        for pi in class_members(5, &avoid132).unwrap() {
            let im = embed_132_avoider(&pi).unwrap();
            for k in 1..=6usize {
                let mut expected = pi.tau(k) + pi.tau(k - 1);
                if k == 1 {
                    expected += BigInt::from(1);
                }
                assert_eq!(im.tau(k), expected, "pi = {pi}, k = {k}");
            }
        }
    }
}
