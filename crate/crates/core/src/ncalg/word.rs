use std::cmp::Ordering;

use super::algebra::Gen;

/// A monomial in noncommuting generators, stored run-length encoded.
///
/// Adjacent runs never share a generator and exponents are positive, so two
/// words are equal iff their letter sequences are.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    runs: Vec<(Gen, u32)>,
}

impl Word {
    pub fn empty() -> Self {
        Word { runs: Vec::new() }
    }

    pub fn letter(g: Gen) -> Self {
        Word { runs: vec![(g, 1)] }
    }

    pub fn power(g: Gen, e: u32) -> Self {
        let mut w = Word::empty();
        w.push(g, e);
        w
    }

    pub fn from_letters<I: IntoIterator<Item = Gen>>(letters: I) -> Self {
        let mut w = Word::empty();
        for g in letters {
            w.push(g, 1);
        }
        w
    }

    pub fn from_runs<I: IntoIterator<Item = (Gen, u32)>>(runs: I) -> Self {
        let mut w = Word::empty();
        for (g, e) in runs {
            w.push(g, e);
        }
        w
    }

    pub fn push(&mut self, g: Gen, e: u32) {
        if e == 0 {
            return;
        }
        match self.runs.last_mut() {
            Some((last, n)) if *last == g => *n += e,
            _ => self.runs.push((g, e)),
        }
    }

    pub fn runs(&self) -> &[(Gen, u32)] {
        &self.runs
    }

    pub fn letters(&self) -> impl Iterator<Item = Gen> + '_ {
        self.runs.iter().flat_map(|&(g, e)| std::iter::repeat_n(g, e as usize))
    }

    pub fn degree(&self) -> u32 {
        self.runs.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Number of letters satisfying `pred`.
    pub fn count(&self, pred: impl Fn(Gen) -> bool) -> u32 {
        self.runs.iter().filter(|&&(g, _)| pred(g)).map(|&(_, e)| e).sum()
    }

    /// Normal iff canonical positions never decrease left to right.
    pub fn is_normal(&self) -> bool {
        self.runs.windows(2).all(|w| w[0].0 < w[1].0)
    }

    /// Index of the first run whose last letter is out of order with the
    /// next run's first letter.
    pub(crate) fn first_inversion(&self) -> Option<usize> {
        self.runs.windows(2).position(|w| w[0].0 > w[1].0)
    }

    /// Number of letter pairs `i < j` with `pos(w_i) > pos(w_j)`.
    pub fn inversions(&self) -> u64 {
        let mut total = 0u64;
        for (i, &(gi, ei)) in self.runs.iter().enumerate() {
            for &(gj, ej) in &self.runs[i + 1..] {
                if gi > gj {
                    total += ei as u64 * ej as u64;
                }
            }
        }
        total
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.clone();
        for &(g, e) in &other.runs {
            out.push(g, e);
        }
        out
    }

    /// Reverses the word and maps each letter through `f`.
    pub fn reverse_map(&self, f: impl Fn(Gen) -> Gen) -> Word {
        Word::from_runs(self.runs.iter().rev().map(|&(g, e)| (f(g), e)))
    }

    /// Replaces the inverted letter pair at the junction of runs `k` and
    /// `k + 1` with `replacement`.
    pub(crate) fn splice_at_inversion(&self, k: usize, replacement: &[Gen]) -> Word {
        let mut out = Word::empty();
        for &(g, e) in &self.runs[..k] {
            out.push(g, e);
        }
        let (gx, ex) = self.runs[k];
        let (gy, ey) = self.runs[k + 1];
        out.push(gx, ex - 1);
        for &g in replacement {
            out.push(g, 1);
        }
        out.push(gy, ey - 1);
        for &(g, e) in &self.runs[k + 2..] {
            out.push(g, e);
        }
        out
    }
}

/// Graded order: higher degree first, then lexicographic on canonical
/// positions. This is the printing order of polynomial terms.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        other.degree().cmp(&self.degree()).then_with(|| self.letters().cmp(other.letters()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const B: Gen = Gen(0);
    const A: Gen = Gen(1);

    #[test]
    fn run_length_merges() {
        let w = Word::from_letters([B, B, A, A, A, B]);
        assert_eq!(w.runs(), &[(B, 2), (A, 3), (B, 1)]);
        assert_eq!(w.degree(), 6);
        assert!(!w.is_normal());
        assert_eq!(w.inversions(), 3);
        assert_eq!(w.first_inversion(), Some(1));
    }

    #[test]
    fn splice_replaces_one_pair() {
        let w = Word::from_letters([A, A, B, B]);
        let k = w.first_inversion().unwrap();
        assert_eq!(w.splice_at_inversion(k, &[B, A]), Word::from_letters([A, B, A, B]));
        assert_eq!(w.splice_at_inversion(k, &[]), Word::from_letters([A, B]));
    }

    #[test]
    fn graded_order() {
        let mut words = vec![
            Word::empty(),
            Word::from_letters([B, A]),
            Word::from_letters([A]),
            Word::from_letters([B, B, A, A]),
            Word::from_letters([B]),
        ];
        words.sort();
        assert_eq!(
            words,
            vec![
                Word::from_letters([B, B, A, A]),
                Word::from_letters([B, A]),
                Word::from_letters([B]),
                Word::from_letters([A]),
                Word::empty(),
            ]
        );
    }
}
