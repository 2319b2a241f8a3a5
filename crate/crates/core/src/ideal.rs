use crate::error::{Error, Result};
use crate::monomial::{check_nvars, Monomial};
use serde::Serialize;
use std::fmt;

/// A monomial ideal stored by its minimal generators (an antichain under
/// divisibility), sorted descending lex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<Monomial>,
}

/// Reduces `gens` to the divisibility antichain generating the same ideal.
pub fn minimalize(nvars: usize, gens: Vec<Monomial>) -> Result<MonomialIdeal> {
    check_nvars(nvars)?;
    if let Some(bad) = gens.iter().find(|m| m.nvars() != nvars) {
        return Err(Error::AmbientMismatch {
            expected: nvars,
            found: bad.nvars(),
        });
    }
    // Ascending degree: a divisor always appears before its multiples.
    let mut sorted = gens;
    sorted.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    sorted.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(sorted.len());
    for m in sorted {
        if !kept.iter().any(|g| g.divides(&m)) {
            kept.push(m);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    Ok(MonomialIdeal {
        nvars,
        generators: kept,
    })
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Result<Self> {
        minimalize(nvars, gens)
    }

    pub fn zero(nvars: usize) -> Result<Self> {
        minimalize(nvars, Vec::new())
    }

    pub fn unit(nvars: usize) -> Result<Self> {
        minimalize(nvars, vec![Monomial::one(nvars)?])
    }

    /// Convenience constructor from exponent vectors.
    pub fn from_exponents(nvars: usize, gens: &[&[u32]]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|e| Monomial::new(e.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        minimalize(nvars, gens)
    }

    /// `(x_1^e_1, ..., x_n^e_n)`.
    pub fn pure_powers(exps: &[u32]) -> Result<Self> {
        let n = exps.len();
        let gens = exps
            .iter()
            .enumerate()
            .map(|(v, &e)| Monomial::var_power(n, v, e))
            .collect::<Result<Vec<_>>>()?;
        minimalize(n, gens)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_one()
    }

    fn check_same_ring(&self, nvars: usize) -> Result<()> {
        if self.nvars == nvars {
            Ok(())
        } else {
            Err(Error::AmbientMismatch {
                expected: self.nvars,
                found: nvars,
            })
        }
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_same_ring(m.nvars())?;
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Smallest `e` with `x_var^e` in the ideal.
    pub fn pure_power_exponent(&self, var: usize) -> Option<u32> {
        self.generators
            .iter()
            .filter(|g| {
                g.exponents()
                    .iter()
                    .enumerate()
                    .all(|(v, &e)| v == var || e == 0)
            })
            .map(|g| g.exponent(var))
            .min()
    }

    /// True when the ideal contains a pure power of every variable.
    pub fn is_artinian(&self) -> bool {
        (0..self.nvars).all(|v| self.pure_power_exponent(v).is_some())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_ring(other.nvars)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        minimalize(self.nvars, gens)
    }

    /// True when every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_same_ring(other.nvars)?;
        Ok(other.generators.iter().all(|g| self.contains_unchecked(g)))
    }

    /// The colon ideal `(I : x_var^j)`.
    pub fn colon_variable_power(&self, var: usize, j: u32) -> Result<MonomialIdeal> {
        if var >= self.nvars {
            return Err(Error::VariableOutOfRange {
                index: var,
                nvars: self.nvars,
            });
        }
        let gens = self
            .generators
            .iter()
            .map(|g| g.saturating_lower(var, j))
            .collect();
        minimalize(self.nvars, gens)
    }

    /// The same ideal in a ring with one more variable appended.
    pub fn extended(&self) -> Result<MonomialIdeal> {
        let gens = self
            .generators
            .iter()
            .map(Monomial::extended)
            .collect::<Result<Vec<_>>>()?;
        minimalize(self.nvars + 1, gens)
    }

    /// Number of monomials of degree `d` in the ideal.
    pub fn dim_in_degree(&self, d: u32) -> usize {
        Monomial::all_of_degree(self.nvars, d)
            .iter()
            .filter(|m| self.contains_unchecked(m))
            .count()
    }

    /// The lex-segment ideal with the same Hilbert function, two variables only.
    ///
    /// In degree `d` the lex segment is `x^d, x^(d-1)y, ...` truncated to
    /// `dim I_d` monomials. In two variables `I_(d+1) = (x, y) I_d` once `d`
    /// reaches the top generator degree, and the codimension stops changing
    /// exactly when `I_d` is a contiguous run of monomials, after which the
    /// segments generate every later degree.
    pub fn lex_ideal(&self) -> Result<MonomialIdeal> {
        if self.nvars != 2 {
            return Err(Error::InvalidParameter(format!(
                "lex ideal requires 2 variables, got {}",
                self.nvars
            )));
        }
        if self.is_zero() {
            return MonomialIdeal::zero(2);
        }
        let top = self
            .generators
            .iter()
            .map(Monomial::degree)
            .max()
            .unwrap_or(0);
        let codim = |d: u32| d as usize + 1 - self.dim_in_degree(d);
        let mut gens = Vec::new();
        let mut d = 0u32;
        loop {
            let dim = self.dim_in_degree(d);
            for k in 0..dim as u32 {
                gens.push(Monomial::new(vec![d - k, k])?);
            }
            if d >= top && codim(d + 1) == codim(d) {
                break;
            }
            d += 1;
        }
        minimalize(2, gens)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}
