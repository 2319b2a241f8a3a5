use crate::error::{Error, Result};
use crate::hilbert::HilbertSeries;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use serde::Serialize;
use std::fmt;

/// The graded module `(I + J) / J` for monomial ideals `I` (numerator) and
/// `J` (denominator). In degree `d` its basis is the set of degree-`d`
/// monomials lying in `I` and outside `J`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QuotientModule {
    numerator: MonomialIdeal,
    denominator: MonomialIdeal,
}

impl QuotientModule {
    pub fn new(numerator: MonomialIdeal, denominator: MonomialIdeal) -> Result<Self> {
        if numerator.nvars() != denominator.nvars() {
            return Err(Error::AmbientMismatch {
                expected: numerator.nvars(),
                found: denominator.nvars(),
            });
        }
        Ok(QuotientModule {
            numerator,
            denominator,
        })
    }

    /// The cyclic module `S / J`.
    pub fn algebra(denominator: MonomialIdeal) -> Result<Self> {
        let unit = MonomialIdeal::unit(denominator.nvars())?;
        Self::new(unit, denominator)
    }

    pub fn nvars(&self) -> usize {
        self.numerator.nvars()
    }

    pub fn numerator(&self) -> &MonomialIdeal {
        &self.numerator
    }

    pub fn denominator(&self) -> &MonomialIdeal {
        &self.denominator
    }

    pub fn is_artinian(&self) -> bool {
        self.denominator.is_artinian()
    }

    fn require_artinian(&self) -> Result<()> {
        if self.is_artinian() {
            Ok(())
        } else {
            Err(Error::NotArtinian)
        }
    }

    /// Monomials of degree `d` in `I` and not in `J`, descending lex.
    pub fn degree_basis(&self, d: u32) -> Vec<Monomial> {
        Monomial::all_of_degree(self.nvars(), d)
            .into_iter()
            .filter(|m| {
                self.numerator.contains_unchecked(m) && !self.denominator.contains_unchecked(m)
            })
            .collect()
    }

    /// Upper bound on the socle degree of `S / J`, from the pure powers of `J`.
    fn degree_bound(&self) -> Result<u32> {
        self.require_artinian()?;
        Ok((0..self.nvars())
            .map(|v| {
                self.denominator
                    .pure_power_exponent(v)
                    .unwrap_or(0)
                    .saturating_sub(1)
            })
            .sum())
    }

    pub fn hilbert_series(&self) -> Result<HilbertSeries> {
        let bound = self.degree_bound()?;
        let dims: Vec<u64> = (0..=bound)
            .map(|d| self.degree_basis(d).len() as u64)
            .collect();
        Ok(HilbertSeries::from_dimensions(&dims))
    }

    pub fn is_zero(&self) -> Result<bool> {
        Ok(self.hilbert_series()?.is_zero())
    }

    /// Largest degree with a nonzero component.
    pub fn socle_degree(&self) -> Result<u32> {
        let h = self.hilbert_series()?;
        h.end().map(|q| q as u32).ok_or(Error::ZeroModule)
    }

    /// `M (x)_k k[t]/(t^c)`, realized by appending a variable `t` and adding
    /// `t^c` to the denominator.
    pub fn tensor_truncation(&self, c: u32) -> Result<QuotientModule> {
        if c == 0 {
            return Err(Error::InvalidParameter(
                "truncation exponent must be at least 1".into(),
            ));
        }
        let n = self.nvars() + 1;
        let numerator = self.numerator.extended()?;
        let t_power = MonomialIdeal::new(n, vec![Monomial::var_power(n, n - 1, c)?])?;
        let denominator = self.denominator.extended()?.sum(&t_power)?;
        QuotientModule::new(numerator, denominator)
    }
}

impl fmt::Display for QuotientModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.numerator, self.denominator)
    }
}
