//! Classical pattern containment.
//!
//! The six patterns of length 3 get linear-time scans built from two
//! primitives (123 and 132) and the reverse/complement symmetries. Anything
//! else goes through a backtracking matcher.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::Permutation;

/// The six patterns of length 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    P123,
    P132,
    P213,
    P231,
    P312,
    P321,
}

impl Pattern {
    pub const ALL: [Pattern; 6] = [
        Pattern::P123,
        Pattern::P132,
        Pattern::P213,
        Pattern::P231,
        Pattern::P312,
        Pattern::P321,
    ];

    pub fn word(self) -> [usize; 3] {
        match self {
            Pattern::P123 => [1, 2, 3],
            Pattern::P132 => [1, 3, 2],
            Pattern::P213 => [2, 1, 3],
            Pattern::P231 => [2, 3, 1],
            Pattern::P312 => [3, 1, 2],
            Pattern::P321 => [3, 2, 1],
        }
    }

    pub fn permutation(self) -> Permutation {
        Permutation::new(self.word().to_vec()).expect("pattern words are permutations")
    }

    pub fn from_permutation(p: &Permutation) -> Result<Self> {
        Pattern::ALL
            .into_iter()
            .find(|pat| pat.word() == p.word())
            .ok_or_else(|| Error::UnsupportedPattern(p.to_string()))
    }

    /// True iff `word` contains this pattern. `word` need not be a
    /// permutation; only the relative order of its (distinct) entries matters.
    pub fn is_contained_in(self, word: &[usize]) -> bool {
        let len = word.len();
        let at = |i: usize| word[i] as i64;
        let rev = |i: usize| word[len - 1 - i] as i64;
        match self {
            Pattern::P123 => has_123(len, at),
            Pattern::P321 => has_123(len, |i| -at(i)),
            Pattern::P132 => has_132(len, at),
            Pattern::P231 => has_132(len, rev),
            Pattern::P312 => has_132(len, |i| -at(i)),
            Pattern::P213 => has_132(len, |i| -rev(i)),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.word();
        write!(f, "{a}{b}{c}")
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let perm: Permutation = s
            .parse()
            .map_err(|_| Error::UnsupportedPattern(s.to_string()))?;
        Pattern::from_permutation(&perm)
    }
}

/// Increasing subsequence of length 3: some middle element has a smaller
/// element before it and a larger one after it.
fn has_123(len: usize, at: impl Fn(usize) -> i64) -> bool {
    if len < 3 {
        return false;
    }
    let mut suffix_max = vec![i64::MIN; len];
    for i in (0..len - 1).rev() {
        suffix_max[i] = suffix_max[i + 1].max(at(i + 1));
    }
    let mut prefix_min = at(0);
    for (j, &after) in suffix_max.iter().enumerate().take(len - 1).skip(1) {
        let x = at(j);
        if prefix_min < x && x < after {
            return true;
        }
        prefix_min = prefix_min.min(x);
    }
    false
}

/// Right-to-left stack scan. `two` is the largest value seen so far that has
/// a larger value to its left among the scanned suffix; any later (leftward)
/// value below it completes a 132.
fn has_132(len: usize, at: impl Fn(usize) -> i64) -> bool {
    let mut stack: Vec<i64> = Vec::with_capacity(len);
    let mut two = i64::MIN;
    for i in (0..len).rev() {
        let x = at(i);
        if x < two {
            return true;
        }
        while let Some(&top) = stack.last() {
            if top < x {
                two = two.max(top);
                stack.pop();
            } else {
                break;
            }
        }
        stack.push(x);
    }
    false
}

/// Generic containment by backtracking over index choices, pruning as soon
/// as the chosen prefix stops being order-isomorphic to the pattern prefix.
pub fn contains_generic(word: &[usize], pattern: &[usize]) -> bool {
    fn extend(word: &[usize], pattern: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
        let t = chosen.len();
        if t == pattern.len() {
            return true;
        }
        if word.len() - start < pattern.len() - t {
            return false;
        }
        for i in start..word.len() {
            let x = word[i];
            let consistent = chosen
                .iter()
                .zip(pattern)
                .all(|(&y, &q)| (y < x) == (q < pattern[t]));
            if consistent {
                chosen.push(x);
                if extend(word, pattern, i + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    if pattern.is_empty() {
        return true;
    }
    extend(word, pattern, 0, &mut Vec::with_capacity(pattern.len()))
}

/// True iff `w` has a subsequence order-isomorphic to `pat`.
pub fn contains_pattern(w: &Permutation, pat: &Permutation) -> bool {
    match Pattern::from_permutation(pat) {
        Ok(p) => p.is_contained_in(w.word()),
        Err(_) => contains_generic(w.word(), pat.word()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    /// Reference: test every subsequence of the pattern's length, no pruning.
    fn naive(word: &[usize], pat: &[usize]) -> bool {
        fn subsets(
            word: &[usize],
            k: usize,
            start: usize,
            sub: &mut Vec<usize>,
            pat: &[usize],
        ) -> bool {
            if sub.len() == k {
                return (0..k).all(|a| (0..k).all(|b| (sub[a] < sub[b]) == (pat[a] < pat[b])));
            }
            for i in start..word.len() {
                sub.push(word[i]);
                let found = subsets(word, k, i + 1, sub, pat);
                sub.pop();
                if found {
                    return true;
                }
            }
            false
        }
        subsets(word, pat.len(), 0, &mut Vec::new(), pat)
    }

    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_perms(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn examples() {
        assert!(contains_pattern(&perm("1324"), &perm("213")));
        assert!(!contains_pattern(&perm("1423"), &perm("213")));
        assert!(contains_pattern(&perm("123"), &perm("123")));
        assert!(contains_pattern(&perm("1342"), &perm("231")));
    }

    #[test]
    fn length3_scans_agree_with_naive_up_to_8() {
        for n in 0..=8 {
            for w in all_perms(n) {
                for pat in Pattern::ALL {
                    assert_eq!(
                        pat.is_contained_in(&w),
                        naive(&w, &pat.word()),
                        "{w:?} vs {pat}"
                    );
                    assert_eq!(contains_generic(&w, &pat.word()), naive(&w, &pat.word()));
                }
            }
        }
    }

    #[test]
    fn generic_agrees_with_naive_for_length_4() {
        let pats = all_perms(4);
        for n in 0..=7 {
            for w in all_perms(n) {
                for pat in &pats {
                    assert_eq!(
                        contains_generic(&w, pat),
                        naive(&w, pat),
                        "{w:?} vs {pat:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn pattern_parsing() {
        assert_eq!("231".parse::<Pattern>(), Ok(Pattern::P231));
        assert!(matches!(
            "1234".parse::<Pattern>(),
            Err(Error::UnsupportedPattern(_))
        ));
        assert!(matches!(
            "12".parse::<Pattern>(),
            Err(Error::UnsupportedPattern(_))
        ));
        for pat in Pattern::ALL {
            assert_eq!(pat.to_string().parse::<Pattern>(), Ok(pat));
        }
    }
}
