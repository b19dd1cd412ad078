//! The normal-ordering rewrite engine.
//!
//! Each step picks the leftmost adjacent out-of-order letter pair of a word
//! and replaces it with the right-hand side from the algebra's rule table.
//! Every right-hand word is strictly smaller than the rewritten word under
//! the measure `(degree, weight, inversions)`, so pending words are processed
//! in decreasing measure order: by the time a word is popped, every
//! contribution to it has already been merged, and identical words produced
//! along different paths are rewritten only once.

use std::cell::Cell;
use std::collections::{BTreeMap, HashMap};

use crate::scalars::CoeffPoly;

use super::algebra::AlgebraSpec;
use super::word::Word;

thread_local! {
    static STEPS: Cell<u64> = const { Cell::new(0) };
}

/// Total rewrite steps performed on this thread since the last reset.
pub fn rewrite_steps() -> u64 {
    STEPS.with(|s| s.get())
}

pub fn reset_rewrite_steps() {
    STEPS.with(|s| s.set(0));
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Measure {
    pub degree: u32,
    pub weight: u32,
    pub inversions: u64,
}

pub fn measure(alg: &AlgebraSpec, w: &Word) -> Measure {
    Measure {
        degree: w.degree(),
        weight: w.runs().iter().map(|&(g, e)| alg.weight(g) * e).sum(),
        inversions: w.inversions(),
    }
}

pub(crate) fn accumulate<K: Ord>(map: &mut BTreeMap<K, CoeffPoly>, key: K, c: CoeffPoly) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn accumulate_hashed(map: &mut HashMap<Word, CoeffPoly>, key: Word, c: CoeffPoly) {
    match map.entry(key) {
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::hash_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
        }
    }
}

/// Normal-orders a linear combination of words, returning the canonical term
/// map (normal words only, no zero coefficients).
pub(crate) fn normalize<I>(alg: &AlgebraSpec, terms: I) -> BTreeMap<Word, CoeffPoly>
where
    I: IntoIterator<Item = (Word, CoeffPoly)>,
{
    let mut out = BTreeMap::new();
    let mut pending: BTreeMap<Measure, HashMap<Word, CoeffPoly>> = BTreeMap::new();
    let enqueue = |pending: &mut BTreeMap<Measure, HashMap<Word, CoeffPoly>>,
                   out: &mut BTreeMap<Word, CoeffPoly>,
                   w: Word,
                   c: CoeffPoly| {
        if c.is_zero() {
            return;
        }
        if w.is_normal() {
            accumulate(out, w, c);
        } else {
            let m = measure(alg, &w);
            accumulate_hashed(pending.entry(m).or_default(), w, c);
        }
    };
    for (w, c) in terms {
        enqueue(&mut pending, &mut out, w, c);
    }
    if pending.is_empty() {
        return out;
    }

    let table = alg.rule_table();
    let mut steps = 0u64;
    while let Some((m, bucket)) = pending.pop_last() {
        for (w, c) in bucket {
            if c.is_zero() {
                continue;
            }
            let k = w.first_inversion().expect("pending words are not normal");
            let (x, y) = (w.runs()[k].0, w.runs()[k + 1].0);
            let rule = table.get(x, y).unwrap_or_else(|| panic!("no rule for inverted pair in {alg}"));
            steps += 1;
            for (rc, replacement) in rule {
                let nw = w.splice_at_inversion(k, replacement);
                debug_assert!(nw.is_normal() || measure(alg, &nw) < m);
                enqueue(&mut pending, &mut out, nw, &c * rc);
            }
        }
    }
    STEPS.with(|s| s.set(s.get() + steps));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::Gen;

    #[test]
    fn rewrite_measure_strictly_decreases() {
        // every rule, applied inside a small context, lowers the measure
        let specs = [
            AlgebraSpec::classical(2).unwrap(),
            AlgebraSpec::q_deformed(),
            AlgebraSpec::quantum_plane(),
            AlgebraSpec::borel_a(crate::ncalg::Deformation::Symbolic),
            AlgebraSpec::borel_b(),
        ];
        for alg in specs {
            let n = alg.num_generators() as u8;
            let table = alg.rule_table();
            for x in 0..n {
                for y in 0..x {
                    for left in 0..n {
                        for right in 0..n {
                            let w = Word::from_letters([Gen(left), Gen(x), Gen(y), Gen(right)]);
                            let k = w.first_inversion().unwrap();
                            let (gx, gy) = (w.runs()[k].0, w.runs()[k + 1].0);
                            for (_, rep) in table.get(gx, gy).unwrap() {
                                let nw = w.splice_at_inversion(k, rep);
                                assert!(measure(&alg, &nw) < measure(&alg, &w), "{alg}: {w:?} -> {nw:?}");
                            }
                        }
                    }
                }
            }
        }
    }
}
