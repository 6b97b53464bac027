//! Exact positive rational edge labels. All sign and distinctness tests in
//! this crate are exact; no floating point appears anywhere.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A strictly positive exact rational label.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(BigRational);

impl Label {
    pub fn new(value: BigRational) -> Result<Self> {
        if value.is_positive() {
            Ok(Label(value))
        } else {
            Err(Error::NonPositiveLabel(format_rational(&value)))
        }
    }

    pub fn from_integer(k: u64) -> Self {
        Label(BigRational::from_integer(BigInt::from(k)))
    }

    /// Exact `p/q` label; `q` must be nonzero and the ratio positive.
    pub fn from_ratio(p: i64, q: i64) -> Result<Self> {
        Label::new(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn into_value(self) -> BigRational {
        self.0
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let value = parse_rational(s)?;
        Label::new(value)
    }
}

/// Renders a rational exactly: `"p"` when the denominator is one, else `"p/q"`.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"`, `"p/q"`, or a decimal such as `"0.75"` into an exact
/// rational. Decimal conversion is exact (`0.75` becomes `3/4`).
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let malformed = || Error::MalformedRational(s.to_string());
    if s.is_empty() {
        return Err(malformed());
    }
    if let Some((p, q)) = s.split_once('/') {
        let numer = BigInt::from_str(p.trim()).map_err(|_| malformed())?;
        let denom = BigInt::from_str(q.trim()).map_err(|_| malformed())?;
        if denom.is_zero() {
            return Err(malformed());
        }
        return Ok(BigRational::new(numer, denom));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        let negative = int_part.starts_with('-');
        let int = if int_part == "-" || int_part.is_empty() {
            BigInt::zero()
        } else {
            BigInt::from_str(int_part).map_err(|_| malformed())?
        };
        let scale = BigInt::from(10u8).pow(frac_part.len() as u32);
        let frac = BigInt::from_str(frac_part).map_err(|_| malformed())?;
        let magnitude = int.magnitude() * scale.magnitude() + frac.magnitude();
        let numer = if negative {
            -BigInt::from(magnitude)
        } else {
            BigInt::from(magnitude)
        };
        return Ok(BigRational::new(numer, scale));
    }
    let numer = BigInt::from_str(s).map_err(|_| malformed())?;
    Ok(BigRational::from_integer(numer))
}

/// A finite set of pairwise distinct positive labels, kept in ascending
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelSet {
    sorted: Vec<Label>,
}

impl LabelSet {
    pub fn new(mut labels: Vec<Label>) -> Result<Self> {
        labels.sort();
        for pair in labels.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateLabel(pair[0].to_string()));
            }
        }
        Ok(LabelSet { sorted: labels })
    }

    /// The integer labels `{1, 2, ..., m}`.
    pub fn consecutive(m: usize) -> Self {
        LabelSet {
            sorted: (1..=m as u64).map(Label::from_integer).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.sorted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sorted.is_empty()
    }

    /// Labels in ascending order.
    pub fn as_slice(&self) -> &[Label] {
        &self.sorted
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Label> {
        self.sorted.iter()
    }

    pub fn min(&self) -> Option<&Label> {
        self.sorted.first()
    }

    pub fn max(&self) -> Option<&Label> {
        self.sorted.last()
    }

    /// Splits into contiguous ascending blocks of the given sizes, which
    /// must sum to the set size.
    pub fn split_blocks(&self, sizes: &[usize]) -> Vec<LabelSet> {
        assert_eq!(sizes.iter().sum::<usize>(), self.len());
        let mut blocks = Vec::with_capacity(sizes.len());
        let mut at = 0;
        for &size in sizes {
            blocks.push(LabelSet {
                sorted: self.sorted[at..at + size].to_vec(),
            });
            at += size;
        }
        blocks
    }

    /// Splits off the `k` largest labels: `(lower block, top block)`.
    pub fn split_top(&self, k: usize) -> (LabelSet, LabelSet) {
        assert!(k <= self.len());
        let cut = self.len() - k;
        (
            LabelSet {
                sorted: self.sorted[..cut].to_vec(),
            },
            LabelSet {
                sorted: self.sorted[cut..].to_vec(),
            },
        )
    }
}

impl<'a> IntoIterator for &'a LabelSet {
    type Item = &'a Label;
    type IntoIter = std::slice::Iter<'a, Label>;

    fn into_iter(self) -> Self::IntoIter {
        self.sorted.iter()
    }
}
