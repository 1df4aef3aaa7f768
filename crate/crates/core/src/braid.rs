//! Braid words in the Artin generators and the distinguished braids built
//! from them.
//!
//! A positive letter at index `i` takes the strand in position `i` over the
//! strand in position `i + 1`. Linking signs everywhere else follow from this.

use std::fmt;
use std::ops::{Add, Neg};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::permutation::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// One signed generator `σ_i^{±1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    index: usize,
    sign: Sign,
}

impl Letter {
    pub fn new(index: usize, sign: Sign) -> Self {
        Letter { index, sign }
    }

    pub fn positive(index: usize) -> Self {
        Letter::new(index, Sign::Positive)
    }

    pub fn negative(index: usize) -> Self {
        Letter::new(index, Sign::Negative)
    }

    pub fn index(self) -> usize {
        self.index
    }

    pub fn sign(self) -> Sign {
        self.sign
    }

    pub fn is_positive(self) -> bool {
        self.sign == Sign::Positive
    }

    pub fn inverse(self) -> Letter {
        Letter::new(self.index, self.sign.flip())
    }

    /// Signed-integer form used by the text format.
    pub fn signed(self) -> i64 {
        self.index as i64 * self.sign.value()
    }
}

/// Abelianisation image: the sum of letter signs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ExponentSum(pub i64);

impl Add for ExponentSum {
    type Output = ExponentSum;
    fn add(self, rhs: ExponentSum) -> ExponentSum {
        ExponentSum(self.0 + rhs.0)
    }
}

impl Neg for ExponentSum {
    type Output = ExponentSum;
    fn neg(self) -> ExponentSum {
        ExponentSum(-self.0)
    }
}

/// A word in `σ_1, …, σ_{n−1}` with an explicit strand count `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

fn check_index(strands: usize, index: i64) -> Result<()> {
    if index < 1 || index as usize >= strands {
        return Err(Error::GeneratorOutOfRange { index, strands });
    }
    Ok(())
}

fn need_strands(n: usize, need: usize) -> Result<()> {
    if n < need {
        return Err(Error::TooFewStrands { need, got: n });
    }
    Ok(())
}

impl BraidWord {
    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self> {
        need_strands(strands, 1)?;
        for l in &letters {
            check_index(strands, l.index as i64)?;
        }
        Ok(BraidWord { strands, letters })
    }

    /// Build from signed indices, `-2` meaning `σ_2⁻¹`.
    pub fn from_signed(strands: usize, signed: &[i64]) -> Result<Self> {
        need_strands(strands, 1)?;
        let letters = signed
            .iter()
            .map(|&s| {
                check_index(strands, s.abs())?;
                let sign = if s > 0 { Sign::Positive } else { Sign::Negative };
                Ok(Letter::new(s.unsigned_abs() as usize, sign))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(BraidWord { strands, letters })
    }

    /// Parse the whitespace-separated signed-integer format, e.g. `"1 2 -1"`.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let signed = text
            .split_whitespace()
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad braid letter {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_signed(strands, &signed)
    }

    /// `σ_i^{±1}` in `B_n`.
    pub fn sigma(strands: usize, index: usize, sign: Sign) -> Result<Self> {
        Self::new(strands, vec![Letter::new(index, sign)])
    }

    /// `δ = σ_1 σ_2 ⋯ σ_{n−1}`.
    pub fn delta(strands: usize) -> Result<Self> {
        need_strands(strands, 2)?;
        Ok(BraidWord {
            strands,
            letters: (1..strands).map(Letter::positive).collect(),
        })
    }

    /// `ε = σ_1 δ`.
    pub fn epsilon(strands: usize) -> Result<Self> {
        need_strands(strands, 2)?;
        let mut letters = vec![Letter::positive(1)];
        letters.extend((1..strands).map(Letter::positive));
        Ok(BraidWord { strands, letters })
    }

    /// The full twist `Δ² = δⁿ`, as the literal word of length `n(n−1)`.
    pub fn full_twist(strands: usize) -> Result<Self> {
        Ok(Self::delta(strands)?.pow(strands as i64))
    }

    /// `α_j = σ_j σ_{j+1} ⋯ σ_{n−1}² ⋯ σ_{j+1} σ_j`: strand `j` passes over
    /// the strands to its right and returns under them.
    pub fn alpha(strands: usize, j: usize) -> Result<Self> {
        need_strands(strands, 2)?;
        if j < 1 || j >= strands {
            return Err(Error::GeneratorOutOfRange {
                index: j as i64,
                strands,
            });
        }
        let up = (j..strands).map(Letter::positive);
        let down = (j..strands).rev().map(Letter::positive);
        Ok(BraidWord {
            strands,
            letters: up.chain(down).collect(),
        })
    }

    /// Standard pure braid generator `A_{ij} = σ_{j−1} ⋯ σ_{i+1} σ_i² σ_{i+1}⁻¹ ⋯ σ_{j−1}⁻¹`,
    /// `1 ≤ i < j ≤ n`; links strands `i` and `j` once.
    pub fn pure_generator(strands: usize, i: usize, j: usize) -> Result<Self> {
        if i < 1 || i >= j || j > strands {
            return Err(Error::InvalidArgument(format!(
                "A_{{{i},{j}}} needs 1 <= i < j <= {strands}"
            )));
        }
        let conj: Vec<Letter> = (i + 1..j).rev().map(Letter::positive).collect();
        let mut letters = conj.clone();
        letters.extend([Letter::positive(i), Letter::positive(i)]);
        letters.extend(conj.iter().rev().map(|l| l.inverse()));
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn signed(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.signed()).collect()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn pow(&self, exponent: i64) -> BraidWord {
        let base = if exponent < 0 { self.invert() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * exponent.unsigned_abs() as usize);
        for _ in 0..exponent.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate_by(&self, g: &BraidWord) -> Result<BraidWord> {
        g.concat(self)?.concat(&g.invert())
    }

    /// Cancel adjacent `σ_i σ_i⁻¹` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if stack.last() == Some(&l.inverse()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: stack,
        }
    }

    pub fn exponent_sum(&self) -> ExponentSum {
        ExponentSum(self.letters.iter().map(|l| l.sign.value()).sum())
    }

    /// Same letters on `target` strands; the new strands sit to the right
    /// and are never crossed.
    pub fn embed(&self, target: usize) -> Result<BraidWord> {
        if target < self.strands {
            return Err(Error::TooFewStrands {
                need: self.strands,
                got: target,
            });
        }
        Ok(BraidWord {
            strands: target,
            letters: self.letters.clone(),
        })
    }

    /// Image under `B_n → S_n`, `σ_i ↦ (i i+1)`, as a homomorphism for
    /// right-to-left composition.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for l in &self.letters {
            p.mul_adjacent_right(l.index);
        }
        p
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }
}

/// Free-function form of [`BraidWord::permutation`].
pub fn permutation_of(w: &BraidWord) -> Permutation {
    w.permutation()
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.letters.iter().map(|l| l.signed().to_string()).collect();
        write!(f, "{}", body.join(" "))
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}[{}]", self.strands, self)
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
