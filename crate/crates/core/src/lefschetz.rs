//! Multiplication maps by powers of a linear form and the weak/strong
//! Lefschetz deciders built on them.

use crate::error::{Error, Result};
use crate::hilbert::{degrees_coincide, HilbertSeries, ReflectingDegree};
use crate::linalg::multinomial;
use crate::module::QuotientModule;
use crate::monomial::Monomial;
use crate::ExactMatrix;
use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use serde::Serialize;
use std::collections::HashMap;
use std::fmt;

/// A linear form `sum c_v x_v` with integer coefficients, not all zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LinearForm {
    coefficients: Vec<i64>,
}

impl LinearForm {
    pub fn new(coefficients: Vec<i64>) -> Result<Self> {
        if coefficients.iter().all(|&c| c == 0) {
            return Err(Error::InvalidParameter("linear form is zero".into()));
        }
        Ok(LinearForm { coefficients })
    }

    /// `x_1 + ... + x_n`, the canonical candidate for monomial modules.
    pub fn all_ones(nvars: usize) -> Self {
        LinearForm {
            coefficients: vec![1; nvars.max(1)],
        }
    }

    /// Coefficients drawn uniformly from `1..=100`.
    pub fn random<R: Rng + ?Sized>(nvars: usize, rng: &mut R) -> Self {
        LinearForm {
            coefficients: (0..nvars.max(1)).map(|_| rng.gen_range(1..=100)).collect(),
        }
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn nvars(&self) -> usize {
        self.coefficients.len()
    }

    pub fn scaled(&self, factor: i64) -> Result<Self> {
        LinearForm::new(self.coefficients.iter().map(|c| c * factor).collect())
    }

    /// Coefficient of the monomial `x^e` in `ell^d`, where `|e| = d`.
    fn power_coefficient(&self, e: &Monomial) -> BigInt {
        let parts: Vec<i64> = e.exponents().iter().map(|&x| x as i64).collect();
        let mut c = multinomial(e.degree() as i64, &parts);
        for (coef, &k) in self.coefficients.iter().zip(e.exponents()) {
            if k > 0 {
                c *= BigInt::from(*coef).pow(k);
            }
        }
        c
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coefficients.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Property {
    #[serde(rename = "WLP")]
    Weak,
    #[serde(rename = "SLP")]
    Strong,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::Weak => "WLP",
            Property::Strong => "SLP",
        })
    }
}

/// A map `x ell^d : M_i -> M_(i+d)` whose rank falls short of
/// `min(h_i, h_(i+d))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Failure {
    pub i: usize,
    pub d: usize,
    pub rank: usize,
    pub expected: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LefschetzReport {
    pub property: Property,
    pub holds: bool,
    /// Ordered by `(d, i)`.
    pub failures: Vec<Failure>,
    pub linear_form: LinearForm,
}

impl LefschetzReport {
    fn from_failures(property: Property, linear_form: LinearForm, failures: Vec<Failure>) -> Self {
        LefschetzReport {
            property,
            holds: failures.is_empty(),
            failures,
            linear_form,
        }
    }

    pub fn failure_at(&self, i: usize, d: usize) -> Option<&Failure> {
        self.failures.iter().find(|f| f.i == i && f.d == d)
    }
}

/// Degree bases of a quotient module, computed once and indexed.
#[derive(Clone, Debug)]
pub struct GradedBasis {
    nvars: usize,
    bases: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
    series: HilbertSeries,
}

impl GradedBasis {
    pub fn new(module: &QuotientModule) -> Result<Self> {
        let series = module.hilbert_series()?;
        let top = series.end().unwrap_or(0);
        let bases: Vec<Vec<Monomial>> = if series.is_zero() {
            Vec::new()
        } else {
            (0..=top as u32).map(|d| module.degree_basis(d)).collect()
        };
        let index = bases
            .iter()
            .map(|b| b.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect())
            .collect();
        Ok(GradedBasis {
            nvars: module.nvars(),
            bases,
            index,
            series,
        })
    }

    pub fn series(&self) -> &HilbertSeries {
        &self.series
    }

    pub fn basis(&self, degree: usize) -> &[Monomial] {
        self.bases.get(degree).map_or(&[], Vec::as_slice)
    }

    /// Matrix of `x ell^d : M_i -> M_(i+d)`: rows indexed by the degree
    /// `i + d` basis, columns by the degree `i` basis.
    pub fn power_map(&self, ell: &LinearForm, d: usize, i: usize) -> Result<ExactMatrix> {
        if d == 0 {
            return Err(Error::InvalidParameter("power d must be at least 1".into()));
        }
        if ell.nvars() != self.nvars {
            return Err(Error::AmbientMismatch {
                expected: self.nvars,
                found: ell.nvars(),
            });
        }
        let source = self.basis(i);
        let target = self.basis(i + d);
        let mut mat = ExactMatrix::zeros(target.len(), source.len());
        if source.is_empty() || target.is_empty() {
            return Ok(mat);
        }
        let rows = &self.index[i + d];
        let terms: Vec<(Monomial, BigInt)> = Monomial::all_of_degree(self.nvars, d as u32)
            .into_iter()
            .map(|e| {
                let c = ell.power_coefficient(&e);
                (e, c)
            })
            .filter(|(_, c)| !c.is_zero())
            .collect();
        for (col, u) in source.iter().enumerate() {
            for (e, c) in &terms {
                if let Some(&row) = rows.get(&u.mul(e)) {
                    mat[(row, col)] += c;
                }
            }
        }
        Ok(mat)
    }

    pub fn check(&self, property: Property, ell: &LinearForm) -> Result<LefschetzReport> {
        scan(&self.series, property, ell, |d, i| {
            self.power_map(ell, d, i)
        })
    }
}

/// Runs the maximal-rank scan over the Hilbert support `[p, q]`: `d = 1`
/// for the weak property, `1 <= d <= q - p` for the strong one, with
/// `p <= i <= q - d`.
fn scan(
    series: &HilbertSeries,
    property: Property,
    ell: &LinearForm,
    mut matrix: impl FnMut(usize, usize) -> Result<ExactMatrix>,
) -> Result<LefschetzReport> {
    let mut failures = Vec::new();
    if let (Some(p), Some(q)) = (series.start(), series.end()) {
        let max_d = match property {
            Property::Weak => 1.min(q - p),
            Property::Strong => q - p,
        };
        for d in 1..=max_d {
            for i in p..=q - d {
                let expected = series.coeff(i).min(series.coeff(i + d)) as usize;
                if expected == 0 {
                    continue;
                }
                let rank = matrix(d, i)?.rank();
                if rank != expected {
                    failures.push(Failure {
                        i,
                        d,
                        rank,
                        expected,
                    });
                }
            }
        }
    }
    Ok(LefschetzReport::from_failures(
        property,
        ell.clone(),
        failures,
    ))
}

pub fn mult_matrix(
    module: &QuotientModule,
    ell: &LinearForm,
    d: usize,
    i: usize,
) -> Result<ExactMatrix> {
    if d == 0 {
        return Err(Error::InvalidParameter("power d must be at least 1".into()));
    }
    GradedBasis::new(module)?.power_map(ell, d, i)
}

pub fn map_has_maximal_rank(
    module: &QuotientModule,
    ell: &LinearForm,
    d: usize,
    i: usize,
) -> Result<bool> {
    Ok(mult_matrix(module, ell, d, i)?.has_maximal_rank())
}

pub fn check_wlp(module: &QuotientModule, ell: &LinearForm) -> Result<LefschetzReport> {
    GradedBasis::new(module)?.check(Property::Weak, ell)
}

pub fn check_slp(module: &QuotientModule, ell: &LinearForm) -> Result<LefschetzReport> {
    GradedBasis::new(module)?.check(Property::Strong, ell)
}

/// One summand `M(-shift)` of a direct sum: `M` with every degree raised by
/// `shift`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub module: QuotientModule,
    pub shift: usize,
}

impl Summand {
    pub fn unshifted(module: QuotientModule) -> Self {
        Summand { module, shift: 0 }
    }
}

/// A finite direct sum of shifted quotient modules over one ambient ring.
/// Multiplication maps are block diagonal, one block per summand.
#[derive(Clone, Debug)]
pub struct DirectSum {
    summands: Vec<Summand>,
    bases: Vec<GradedBasis>,
    series: HilbertSeries,
}

impl DirectSum {
    pub fn new(summands: Vec<Summand>) -> Result<Self> {
        if let Some(first) = summands.first() {
            let n = first.module.nvars();
            if let Some(bad) = summands.iter().find(|s| s.module.nvars() != n) {
                return Err(Error::AmbientMismatch {
                    expected: n,
                    found: bad.module.nvars(),
                });
            }
        }
        let bases = summands
            .iter()
            .map(|s| GradedBasis::new(&s.module))
            .collect::<Result<Vec<_>>>()?;
        let series = summands
            .iter()
            .zip(&bases)
            .fold(HilbertSeries::zero(), |acc, (s, b)| {
                acc.add(&b.series().shifted(s.shift))
            });
        Ok(DirectSum {
            summands,
            bases,
            series,
        })
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn hilbert_series(&self) -> &HilbertSeries {
        &self.series
    }

    /// Block-diagonal matrix of `x ell^d` from degree `i` of the sum.
    pub fn power_map(&self, ell: &LinearForm, d: usize, i: usize) -> Result<ExactMatrix> {
        let blocks = self
            .summands
            .iter()
            .zip(&self.bases)
            .map(|(s, b)| match i.checked_sub(s.shift) {
                Some(local) => b.power_map(ell, d, local),
                None => {
                    let rows = (i + d).checked_sub(s.shift).map_or(0, |t| b.basis(t).len());
                    Ok(ExactMatrix::zeros(rows, 0))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ExactMatrix::block_diagonal(&blocks))
    }

    pub fn check(&self, property: Property, ell: &LinearForm) -> Result<LefschetzReport> {
        scan(&self.series, property, ell, |d, i| {
            self.power_map(ell, d, i)
        })
    }
}

/// Result of the reflecting-degree test for a direct sum of modules with
/// symmetric series, together with the block-matrix check it predicts.
#[derive(Clone, Debug, Serialize)]
pub struct DirectSumSlp {
    pub reflecting_degrees: Vec<ReflectingDegree>,
    /// Reflecting degrees pairwise coincide.
    pub coincide: bool,
    /// Direct strong Lefschetz scan of the block-diagonal maps.
    pub block: LefschetzReport,
}

impl DirectSumSlp {
    pub fn holds(&self) -> bool {
        self.coincide
    }

    pub fn consistent(&self) -> bool {
        self.coincide == self.block.holds
    }
}

/// For summands that each have the strong Lefschetz property and a
/// symmetric series, the sum has it iff all reflecting degrees coincide.
pub fn direct_sum_slp(summands: &[Summand], ell: &LinearForm) -> Result<DirectSumSlp> {
    let mut degrees = Vec::with_capacity(summands.len());
    for s in summands {
        let basis = GradedBasis::new(&s.module)?;
        let r = basis
            .series()
            .shifted(s.shift)
            .is_symmetric()
            .ok_or(Error::NotSymmetric)?;
        if !basis.check(Property::Strong, ell)?.holds {
            return Err(Error::Precondition(format!(
                "summand {} does not have the SLP for {ell}",
                s.module
            )));
        }
        degrees.push(r);
    }
    let coincide = degrees
        .iter()
        .enumerate()
        .all(|(k, &r)| degrees[k + 1..].iter().all(|&r2| degrees_coincide(r, r2)));
    let block = DirectSum::new(summands.to_vec())?.check(Property::Strong, ell)?;
    Ok(DirectSumSlp {
        reflecting_degrees: degrees,
        coincide,
        block,
    })
}

/// Evaluates `ell^d` applied to a combination of degree-`i` basis elements,
/// returned as coordinates in the degree `i + d` basis.
pub fn apply_power(
    module: &QuotientModule,
    ell: &LinearForm,
    d: usize,
    i: usize,
    element: &[(Monomial, i64)],
) -> Result<Vec<BigInt>> {
    let basis = GradedBasis::new(module)?;
    let source = basis.basis(i);
    let mut v = vec![BigInt::zero(); source.len()];
    for (m, c) in element {
        match source.iter().position(|b| b == m) {
            Some(k) => v[k] += BigInt::from(*c),
            None => {
                return Err(Error::InvalidParameter(format!(
                    "{m} is not a basis element in degree {i}"
                )))
            }
        }
    }
    basis.power_map(ell, d, i)?.mul_vec(&v)
}
