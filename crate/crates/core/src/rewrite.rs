//! Random words and random applications of the defining relations, used to
//! build corpora of provably equal words.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::braid::{BraidWord, Letter, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rewrite {
    /// `σ_i σ_j σ_i → σ_j σ_i σ_j` (`|i − j| = 1`, all letters of one sign)
    /// at the given position.
    Braid(usize),
    /// Swap two adjacent letters with `|i − j| ≥ 2`.
    FarCommute(usize),
    /// Insert `l l⁻¹` before the given position.
    FreeInsert(usize, Letter),
    /// Delete an adjacent inverse pair.
    FreeDelete(usize),
    /// Insert the relator `σ_i σ_j σ_i σ_j⁻¹ σ_i⁻¹ σ_j⁻¹`.
    RelatorInsert(usize, usize, usize),
}

fn braid_site(ls: &[Letter], p: usize) -> bool {
    let (a, b, c) = (ls[p], ls[p + 1], ls[p + 2]);
    a == c && a.sign() == b.sign() && a.index().abs_diff(b.index()) == 1
}

fn far_site(ls: &[Letter], p: usize) -> bool {
    ls[p].index().abs_diff(ls[p + 1].index()) >= 2
}

fn free_site(ls: &[Letter], p: usize) -> bool {
    ls[p] == ls[p + 1].inverse()
}

/// Apply a rewrite. The result represents the same braid as `w`.
pub fn apply(w: &BraidWord, rewrite: Rewrite) -> BraidWord {
    let mut ls = w.letters().to_vec();
    match rewrite {
        Rewrite::Braid(p) => {
            debug_assert!(braid_site(&ls, p));
            let (a, b) = (ls[p], ls[p + 1]);
            ls[p] = b;
            ls[p + 1] = a;
            ls[p + 2] = b;
        }
        Rewrite::FarCommute(p) => {
            debug_assert!(far_site(&ls, p));
            ls.swap(p, p + 1);
        }
        Rewrite::FreeInsert(p, l) => {
            ls.splice(p..p, [l, l.inverse()]);
        }
        Rewrite::FreeDelete(p) => {
            debug_assert!(free_site(&ls, p));
            ls.drain(p..p + 2);
        }
        Rewrite::RelatorInsert(p, i, j) => {
            let (si, sj) = (Letter::positive(i), Letter::positive(j));
            ls.splice(
                p..p,
                [si, sj, si, sj.inverse(), si.inverse(), sj.inverse()],
            );
        }
    }
    BraidWord::new(w.strands(), ls).expect("rewrites preserve generator range")
}

/// Every rewrite applicable to `w` that keeps the length at most `max_len`.
pub fn candidates(w: &BraidWord, max_len: usize) -> Vec<Rewrite> {
    let ls = w.letters();
    let n = w.strands();
    let mut out = Vec::new();
    for p in 0..ls.len().saturating_sub(2) {
        if braid_site(ls, p) {
            out.push(Rewrite::Braid(p));
        }
    }
    for p in 0..ls.len().saturating_sub(1) {
        if far_site(ls, p) {
            out.push(Rewrite::FarCommute(p));
        }
        if free_site(ls, p) {
            out.push(Rewrite::FreeDelete(p));
        }
    }
    if n >= 2 && ls.len() + 2 <= max_len {
        for p in 0..=ls.len() {
            for i in 1..n {
                out.push(Rewrite::FreeInsert(p, Letter::positive(i)));
                out.push(Rewrite::FreeInsert(p, Letter::negative(i)));
            }
        }
    }
    if n >= 3 && ls.len() + 6 <= max_len {
        for p in 0..=ls.len() {
            for i in 1..n - 1 {
                out.push(Rewrite::RelatorInsert(p, i, i + 1));
                out.push(Rewrite::RelatorInsert(p, i + 1, i));
            }
        }
    }
    out
}

/// Pick a rewrite kind uniformly among the applicable ones, then a site
/// uniformly within that kind.
pub fn random_rewrite<R: Rng + ?Sized>(
    w: &BraidWord,
    max_len: usize,
    rng: &mut R,
) -> Option<Rewrite> {
    let all = candidates(w, max_len);
    let kind = |r: &Rewrite| std::mem::discriminant(r);
    let mut kinds = Vec::new();
    for r in &all {
        if !kinds.contains(&kind(r)) {
            kinds.push(kind(r));
        }
    }
    let chosen = *kinds.choose(rng)?;
    let of_kind: Vec<Rewrite> = all.into_iter().filter(|r| kind(r) == chosen).collect();
    of_kind.choose(rng).copied()
}

/// Apply `steps` random rewrites in sequence.
pub fn scramble<R: Rng + ?Sized>(
    w: &BraidWord,
    steps: usize,
    max_len: usize,
    rng: &mut R,
) -> BraidWord {
    let mut current = w.clone();
    for _ in 0..steps {
        match random_rewrite(&current, max_len, rng) {
            Some(r) => current = apply(&current, r),
            None => break,
        }
    }
    current
}

pub fn random_letter<R: Rng + ?Sized>(strands: usize, rng: &mut R) -> Letter {
    let sign = if rng.gen_bool(0.5) {
        Sign::Positive
    } else {
        Sign::Negative
    };
    Letter::new(rng.gen_range(1..strands), sign)
}

/// Uniformly random word of exactly `len` letters on `strands ≥ 2` strands.
pub fn random_word<R: Rng + ?Sized>(strands: usize, len: usize, rng: &mut R) -> BraidWord {
    let letters = (0..len).map(|_| random_letter(strands, rng)).collect();
    BraidWord::new(strands, letters).expect("letters drawn in range")
}

/// Random word whose letters avoid `σ_{n−k}` except as squares, so that its
/// permutation lies in `S_{n−k} × S_k`.
pub fn random_block_word<R: Rng + ?Sized>(
    strands: usize,
    n_minus_k: usize,
    len: usize,
    rng: &mut R,
) -> BraidWord {
    let mut letters = Vec::with_capacity(len);
    while letters.len() < len {
        let l = random_letter(strands, rng);
        if l.index() == n_minus_k {
            letters.push(l);
        }
        letters.push(l);
    }
    BraidWord::new(strands, letters).expect("letters drawn in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rewrites_preserve_permutation_and_exponent_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let w = random_word(5, 20, &mut rng);
            let v = scramble(&w, 30, 64, &mut rng);
            assert!(v.len() <= 64);
            assert_eq!(v.permutation(), w.permutation());
            assert_eq!(v.exponent_sum(), w.exponent_sum());
        }
    }

    #[test]
    fn braid_relation_site() {
        let w = BraidWord::parse(3, "1 2 1").unwrap();
        assert_eq!(apply(&w, Rewrite::Braid(0)).signed(), vec![2, 1, 2]);
        let w = BraidWord::parse(3, "-2 -1 -2").unwrap();
        assert_eq!(apply(&w, Rewrite::Braid(0)).signed(), vec![-1, -2, -1]);
        // mixed signs are not a braid-relation site
        let w = BraidWord::parse(3, "1 -2 1").unwrap();
        assert!(!candidates(&w, 3).contains(&Rewrite::Braid(0)));
    }

    #[test]
    fn block_words_stay_in_block_subgroup() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = crate::permutation::GroupSpec::mixed(3, 2);
        for _ in 0..100 {
            let w = random_block_word(5, 3, 12, &mut rng);
            assert!(g.member(&w.permutation()).unwrap());
        }
    }
}
