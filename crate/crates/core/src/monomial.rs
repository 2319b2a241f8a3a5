use crate::error::{Error, Result};
use serde::Serialize;
use std::fmt;

/// Largest supported ambient variable count (x, y, z and one tensor variable t).
pub const MAX_VARS: usize = 4;

/// Variable names in lex order, x > y > z > t.
pub const VARIABLE_NAMES: [&str; MAX_VARS] = ["x", "y", "z", "t"];

/// A monomial as an exponent vector over a fixed ambient variable count.
///
/// The derived ordering is lexicographic on exponents with `x` most
/// significant, so `x^3 > x^2*y > y^9`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Monomial {
    exponents: Vec<u32>,
}

pub(crate) fn check_nvars(n: usize) -> Result<()> {
    if (1..=MAX_VARS).contains(&n) {
        Ok(())
    } else {
        Err(Error::UnsupportedVariableCount(n))
    }
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        check_nvars(exponents.len())?;
        Ok(Monomial { exponents })
    }

    pub fn one(nvars: usize) -> Result<Self> {
        Self::new(vec![0; nvars])
    }

    /// `x_var^exp` in `nvars` variables.
    pub fn var_power(nvars: usize, var: usize, exp: u32) -> Result<Self> {
        check_nvars(nvars)?;
        if var >= nvars {
            return Err(Error::VariableOutOfRange { index: var, nvars });
        }
        let mut exponents = vec![0; nvars];
        exponents[var] = exp;
        Ok(Monomial { exponents })
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exponents[var]
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.nvars() == other.nvars()
            && self
                .exponents
                .iter()
                .zip(&other.exponents)
                .all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exponents: other
                .exponents
                .iter()
                .zip(&self.exponents)
                .map(|(b, a)| b - a)
                .collect(),
        })
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Lowers the exponent of `var` by `min(amount, current)`.
    pub(crate) fn saturating_lower(&self, var: usize, amount: u32) -> Monomial {
        let mut exponents = self.exponents.clone();
        exponents[var] = exponents[var].saturating_sub(amount);
        Monomial { exponents }
    }

    /// The same monomial in a ring with one more variable, appended last.
    pub fn extended(&self) -> Result<Monomial> {
        let mut exponents = self.exponents.clone();
        exponents.push(0);
        Monomial::new(exponents)
    }

    /// All monomials of degree `d` in `nvars` variables, descending lex.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        fn fill(prefix: &mut Vec<u32>, left: usize, d: u32, out: &mut Vec<Monomial>) {
            if left == 1 {
                prefix.push(d);
                out.push(Monomial {
                    exponents: prefix.clone(),
                });
                prefix.pop();
                return;
            }
            for e in (0..=d).rev() {
                prefix.push(e);
                fill(prefix, left - 1, d - e, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if nvars > 0 {
            fill(&mut Vec::with_capacity(nvars), nvars, d, &mut out);
        }
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", VARIABLE_NAMES[v])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
