//! Equality of braids via the Garside left normal form.
//!
//! Every braid is written uniquely as `Δ^inf · A_1 ⋯ A_r` where each `A_i`
//! is a positive permutation braid other than `1` and `Δ`, and every pair
//! `(A_i, A_{i+1})` is left-weighted: the starting set of `A_{i+1}` is
//! contained in the finishing set of `A_i`. Two words are equal in `B_n`
//! exactly when their normal forms coincide.
//!
//! Simple elements are stored as position maps: strand starting at position
//! `j` ends at `pos[j]` (0-based). For the product `AB` (A on top) the
//! position map is `pos_B ∘ pos_A`.

use std::fmt;

use serde::Serialize;

use crate::braid::{BraidWord, Letter};
use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// Default cap on elementary normal-form steps.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceVerdict {
    pub equal: bool,
    /// Elementary steps spent (pair inspections plus generator transfers).
    pub effort: u64,
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct Simple {
    pos: Vec<usize>,
    inv: Vec<usize>,
}

impl Simple {
    fn from_pos(pos: Vec<usize>) -> Self {
        let mut inv = vec![0; pos.len()];
        for (j, &p) in pos.iter().enumerate() {
            inv[p] = j;
        }
        Simple { pos, inv }
    }

    fn half_twist(n: usize) -> Self {
        Simple::from_pos((0..n).rev().collect())
    }

    /// `σ_i`, 0-based `i`.
    fn generator(n: usize, i: usize) -> Self {
        let mut pos: Vec<usize> = (0..n).collect();
        pos.swap(i, i + 1);
        Simple::from_pos(pos)
    }

    /// The simple `Y` with `Y σ_i = Δ`, so that `σ_i⁻¹ = Δ⁻¹ Y`.
    fn delta_over_generator(n: usize, i: usize) -> Self {
        let swap = |x: usize| match x {
            x if x == i => i + 1,
            x if x == i + 1 => i,
            x => x,
        };
        Simple::from_pos((0..n).map(|j| swap(n - 1 - j)).collect())
    }

    /// Conjugation by `Δ`: `σ_i ↦ σ_{n−i}`.
    fn flip(&self) -> Self {
        let n = self.pos.len();
        Simple::from_pos((0..n).map(|j| n - 1 - self.pos[n - 1 - j]).collect())
    }

    fn is_identity(&self) -> bool {
        self.pos.iter().enumerate().all(|(j, &p)| j == p)
    }

    fn is_half_twist(&self) -> bool {
        let n = self.pos.len();
        self.pos.iter().enumerate().all(|(j, &p)| p == n - 1 - j)
    }

    /// `σ_i` is a left divisor: strands starting at `i`, `i+1` cross.
    fn starts_with(&self, i: usize) -> bool {
        self.pos[i] > self.pos[i + 1]
    }

    /// `σ_i` is a right divisor: strands ending at `i`, `i+1` crossed.
    fn ends_with(&self, i: usize) -> bool {
        self.inv[i] > self.inv[i + 1]
    }

    /// `self ← self · σ_i`.
    fn push_right(&mut self, i: usize) {
        let (a, b) = (self.inv[i], self.inv[i + 1]);
        self.pos[a] = i + 1;
        self.pos[b] = i;
        self.inv.swap(i, i + 1);
    }

    /// `self ← σ_i⁻¹ · self`.
    fn pop_left(&mut self, i: usize) {
        self.pos.swap(i, i + 1);
        let (a, b) = (self.pos[i], self.pos[i + 1]);
        self.inv[a] = i;
        self.inv[b] = i + 1;
    }

    /// A positive word for this simple braid.
    fn letters(&self) -> Vec<Letter> {
        let as_perm = Permutation::from_images(&self.pos.iter().map(|p| p + 1).collect::<Vec<_>>())
            .expect("position map is a bijection");
        // pos = s_{a_1} ∘ ⋯ ∘ s_{a_r} and the word σ_{a_r} ⋯ σ_{a_1} has that position map
        as_perm
            .adjacent_factors()
            .into_iter()
            .rev()
            .map(Letter::positive)
            .collect()
    }
}

struct Meter {
    spent: u64,
    budget: u64,
}

impl Meter {
    fn tick(&mut self) -> Result<()> {
        self.spent += 1;
        if self.spent > self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
            });
        }
        Ok(())
    }
}

/// Make `(a, b)` left-weighted in place. Returns whether anything moved.
fn left_weight(a: &mut Simple, b: &mut Simple, meter: &mut Meter) -> Result<bool> {
    let n = a.pos.len();
    let mut moved = false;
    meter.tick()?;
    'scan: loop {
        for i in 0..n.saturating_sub(1) {
            if b.starts_with(i) && !a.ends_with(i) {
                meter.tick()?;
                a.push_right(i);
                b.pop_left(i);
                moved = true;
                continue 'scan;
            }
        }
        return Ok(moved);
    }
}

fn is_left_weighted(a: &Simple, b: &Simple) -> bool {
    (0..a.pos.len().saturating_sub(1)).all(|i| !b.starts_with(i) || a.ends_with(i))
}

/// Garside left normal form `Δ^infimum · A_1 ⋯ A_r`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    strands: usize,
    infimum: i64,
    factors: Vec<Simple>,
}

impl NormalForm {
    pub fn of(w: &BraidWord) -> Result<(NormalForm, u64)> {
        Self::with_budget(w, DEFAULT_BUDGET)
    }

    pub fn with_budget(w: &BraidWord, budget: u64) -> Result<(NormalForm, u64)> {
        let n = w.strands();
        let mut meter = Meter { spent: 0, budget };
        // σ_i⁻¹ = Δ⁻¹ Y_i; each Δ⁻¹ moves to the front, flipping every simple
        // factor it passes.
        let mut negatives_after = w.letters().iter().filter(|l| !l.is_positive()).count();
        let total_negative = negatives_after as i64;
        let mut factors: Vec<Simple> = Vec::new();
        for l in w.letters() {
            let i = l.index() - 1;
            let mut simple = if l.is_positive() {
                Simple::generator(n, i)
            } else {
                negatives_after -= 1;
                Simple::delta_over_generator(n, i)
            };
            if negatives_after % 2 == 1 {
                simple = simple.flip();
            }
            insert(&mut factors, simple, &mut meter)?;
        }
        let leading = factors.iter().take_while(|f| f.is_half_twist()).count();
        factors.drain(..leading);
        Ok((
            NormalForm {
                strands: n,
                infimum: leading as i64 - total_negative,
                factors,
            },
            meter.spent,
        ))
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn infimum(&self) -> i64 {
        self.infimum
    }

    /// Canonical length: number of non-`Δ` simple factors.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }

    /// Permutations of the simple factors (start position ↦ end position,
    /// 1-based).
    pub fn factor_permutations(&self) -> Vec<Permutation> {
        self.factors
            .iter()
            .map(|f| {
                Permutation::from_images(&f.pos.iter().map(|p| p + 1).collect::<Vec<_>>())
                    .expect("position map is a bijection")
            })
            .collect()
    }

    /// A word representing the same braid.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let delta = Simple::half_twist(n).letters();
        let mut letters = Vec::new();
        let power = if self.infimum < 0 {
            delta.iter().rev().map(|l| l.inverse()).collect::<Vec<_>>()
        } else {
            delta
        };
        for _ in 0..self.infimum.unsigned_abs() {
            letters.extend_from_slice(&power);
        }
        for f in &self.factors {
            letters.extend(f.letters());
        }
        BraidWord::new(n, letters).expect("normal form letters are in range")
    }

    /// Every adjacent pair is left-weighted and no factor is `1` or `Δ`.
    pub fn is_well_formed(&self) -> bool {
        self.factors.iter().all(|f| !f.is_identity() && !f.is_half_twist())
            && self.factors.windows(2).all(|p| is_left_weighted(&p[0], &p[1]))
    }
}

fn insert(factors: &mut Vec<Simple>, b: Simple, meter: &mut Meter) -> Result<()> {
    factors.push(b);
    let mut j = factors.len() - 1;
    while j > 0 {
        let (left, right) = factors.split_at_mut(j);
        if !left_weight(&mut left[j - 1], &mut right[0], meter)? {
            break;
        }
        j -= 1;
    }
    // a single right-to-left pass normally suffices; sweep again until no
    // pair is out of order
    loop {
        let bad = (1..factors.len()).find(|&j| !is_left_weighted(&factors[j - 1], &factors[j]));
        meter.tick()?;
        let Some(start) = bad else { break };
        for j in (1..=start).rev() {
            let (left, right) = factors.split_at_mut(j);
            left_weight(&mut left[j - 1], &mut right[0], meter)?;
        }
    }
    while factors.last().is_some_and(Simple::is_identity) {
        factors.pop();
    }
    Ok(())
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.infimum)?;
        for p in self.factor_permutations() {
            write!(f, " · [{}]", p)?;
        }
        Ok(())
    }
}

pub fn is_trivial(w: &BraidWord) -> Result<EquivalenceVerdict> {
    is_trivial_with_budget(w, DEFAULT_BUDGET)
}

pub fn is_trivial_with_budget(w: &BraidWord, budget: u64) -> Result<EquivalenceVerdict> {
    let (nf, effort) = NormalForm::with_budget(w, budget)?;
    Ok(EquivalenceVerdict {
        equal: nf.is_identity(),
        effort,
    })
}

/// `a = b` in `B_n`, decided as triviality of `a · b⁻¹`.
pub fn equals(a: &BraidWord, b: &BraidWord) -> Result<EquivalenceVerdict> {
    equals_with_budget(a, b, DEFAULT_BUDGET)
}

pub fn equals_with_budget(a: &BraidWord, b: &BraidWord, budget: u64) -> Result<EquivalenceVerdict> {
    is_trivial_with_budget(&a.concat(&b.invert())?, budget)
}

pub fn is_pure(w: &BraidWord) -> bool {
    w.is_pure()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    #[test]
    fn trivial_words() {
        assert!(is_trivial(&w(3, "1 2 1 -2 -1 -2")).unwrap().equal);
        assert!(!is_trivial(&w(3, "1")).unwrap().equal);
        assert!(!is_trivial(&w(2, "1 1")).unwrap().equal);
        assert!(is_trivial(&w(4, "")).unwrap().equal);
        assert!(is_trivial(&w(4, "-1 -3 1 3")).unwrap().equal);
    }

    #[test]
    fn equalities() {
        assert!(equals(&w(4, "1 3"), &w(4, "3 1")).unwrap().equal);
        assert!(!equals(&w(4, "1 2"), &w(4, "2 1")).unwrap().equal);
        let d3 = BraidWord::delta(3).unwrap().pow(3);
        assert!(equals(&d3, &BraidWord::full_twist(3).unwrap()).unwrap().equal);
        let e4 = BraidWord::epsilon(4).unwrap().pow(3);
        assert!(equals(&e4, &BraidWord::full_twist(4).unwrap()).unwrap().equal);
        assert_eq!(
            equals(&w(3, "1"), &w(4, "1")),
            Err(Error::StrandMismatch(3, 4))
        );
    }

    #[test]
    fn budget_overflow_is_an_error() {
        let long = BraidWord::full_twist(6).unwrap().pow(4);
        assert_eq!(
            is_trivial_with_budget(&long, 10),
            Err(Error::BudgetExceeded { budget: 10 })
        );
        assert!(!is_trivial(&long).unwrap().equal);
    }

    #[test]
    fn purity() {
        assert!(is_pure(&w(3, "1 1")));
        assert!(!is_pure(&w(3, "1")));
    }

    #[test]
    fn full_twist_normal_form() {
        for n in 2..=6 {
            let (nf, _) = NormalForm::of(&BraidWord::full_twist(n).unwrap()).unwrap();
            assert_eq!(nf.infimum(), 2);
            assert_eq!(nf.canonical_length(), 0);
            let (inv, _) = NormalForm::of(&BraidWord::full_twist(n).unwrap().invert()).unwrap();
            assert_eq!(inv.infimum(), -2);
        }
    }

    #[test]
    fn normal_form_round_trips_through_words() {
        let words = ["1 -2 3 1 -1 -3 2 2", "-1 -2 -1 3", "2 3 -1 -1 2 -3 1"];
        for s in words {
            let word = w(4, s);
            let (nf, _) = NormalForm::of(&word).unwrap();
            assert!(nf.is_well_formed());
            let (again, _) = NormalForm::of(&nf.to_word()).unwrap();
            assert_eq!(again, nf);
            assert!(equals(&nf.to_word(), &word).unwrap().equal);
        }
    }

    #[test]
    fn verdicts_are_deterministic() {
        let a = w(5, "1 2 -3 4 -1 2 2 -4");
        let b = w(5, "2 -3 1 4 2");
        assert_eq!(equals(&a, &b).unwrap(), equals(&a, &b).unwrap());
    }
}
