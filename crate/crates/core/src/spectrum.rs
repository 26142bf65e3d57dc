use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{QpaError, Result};
use crate::rational::{format_rational, int, parse_rational_list, to_f64};

/// Sorted probability vector `p_1 >= ... >= p_d` with exact entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Spectrum {
    probs: Vec<BigRational>,
}

impl Spectrum {
    pub fn new(probs: Vec<BigRational>) -> Result<Self> {
        if probs.is_empty() {
            return Err(QpaError::InvalidSpectrum("empty spectrum".into()));
        }
        if let Some(p) = probs.iter().find(|p| p.is_negative()) {
            return Err(QpaError::InvalidSpectrum(format!("negative entry {}", format_rational(p))));
        }
        if let Some(w) = probs.windows(2).position(|w| w[0] < w[1]) {
            return Err(QpaError::InvalidSpectrum(format!(
                "entries must be nonincreasing (p_{} < p_{})",
                w + 1,
                w + 2
            )));
        }
        let total: BigRational = probs.iter().sum();
        if !total.is_one() {
            return Err(QpaError::InvalidSpectrum(format!("entries sum to {}, not 1", format_rational(&total))));
        }
        Ok(Spectrum { probs })
    }

    /// Pure state `(1, 0, ..., 0)`.
    pub fn pure(d: usize) -> Self {
        let mut probs = vec![BigRational::zero(); d];
        probs[0] = BigRational::one();
        Spectrum { probs }
    }

    /// `(1 - eta (d-1)/d, eta/d, ..., eta/d)`.
    pub fn depolarized(d: usize, eta: &BigRational) -> Result<Self> {
        let dd = int(d as i64);
        let low = eta / &dd;
        let mut probs = vec![low.clone(); d];
        probs[0] = BigRational::one() - eta * int(d as i64 - 1) / dd;
        Spectrum::new(probs)
    }

    pub fn d(&self) -> usize {
        self.probs.len()
    }

    pub fn probs(&self) -> &[BigRational] {
        &self.probs
    }

    /// `p_i`, 1-based.
    pub fn p(&self, i: usize) -> &BigRational {
        &self.probs[i - 1]
    }

    /// `D_{i,j} = p_i - p_j`, 1-based.
    pub fn gap(&self, i: usize, j: usize) -> BigRational {
        &self.probs[i - 1] - &self.probs[j - 1]
    }

    /// `min_{i != k} |D_{k,i}|`; for a sorted spectrum only the neighbours matter.
    pub fn min_gap(&self, k: usize) -> Option<BigRational> {
        (1..=self.d()).filter(|&i| i != k).map(|i| self.gap(k, i).abs()).min()
    }

    pub fn is_nondegenerate_at(&self, k: usize) -> bool {
        self.min_gap(k).is_none_or(|g| g.is_positive())
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.probs.windows(2).all(|w| w[0] > w[1])
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.probs.iter().map(to_f64).collect()
    }
}

impl FromStr for Spectrum {
    type Err = QpaError;

    fn from_str(s: &str) -> Result<Self> {
        Spectrum::new(parse_rational_list(s)?)
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.probs.iter().map(format_rational).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn parses_and_validates() {
        let p: Spectrum = "3/4,1/4".parse().unwrap();
        assert_eq!(p.to_string(), "3/4,1/4");
        let q: Spectrum = "0.75, 0.25".parse().unwrap();
        assert_eq!(p, q);
        assert!("1/4,3/4".parse::<Spectrum>().is_err());
        assert!("1/2,1/4".parse::<Spectrum>().is_err());
        assert!("1.5,-0.5".parse::<Spectrum>().is_err());
    }

    #[test]
    fn gaps_and_degeneracy() {
        let p: Spectrum = "1/2,1/4,1/4".parse().unwrap();
        assert_eq!(p.gap(1, 2), ratio(1, 4));
        assert!(p.is_nondegenerate_at(1));
        assert!(!p.is_nondegenerate_at(2));
        assert_eq!(p.min_gap(1), Some(ratio(1, 4)));
    }

    #[test]
    fn depolarized_family() {
        let p = Spectrum::depolarized(3, &ratio(1, 2)).unwrap();
        assert_eq!(p.to_string(), "2/3,1/6,1/6");
    }
}
