//! Central simple modules of `A = S/I` with respect to a variable.
//!
//! For `ell = x_v` the chain `(0 : ell^j) + (ell)` of ideals of `A` lifts to
//! the monomial ideals `U_j = (I : x_v^j) + (x_v)` of `S`, running from
//! `U_0 = I + (x_v)` up to `U_r = (1)` where `r` is the nilpotency index of
//! `x_v`. Each strict step `U_(f-1) < U_f` contributes the module
//! `V = U_f / U_(f-1)` and its thickening `V (x) k[t]/(t^f)`.

use crate::error::{Error, Result};
use crate::hilbert::HilbertSeries;
use crate::ideal::MonomialIdeal;
use crate::lefschetz::{direct_sum_slp, DirectSum, GradedBasis, LinearForm, Property, Summand};
use crate::module::QuotientModule;
use crate::monomial::{Monomial, MAX_VARS};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralSimpleModule {
    /// The exponent `f` with `V = U_f / U_(f-1)`.
    pub f: u32,
    pub module: QuotientModule,
    pub hilbert: HilbertSeries,
    /// `V (x) k[t]/(t^f)`, graded with `t` starting in degree 0.
    pub tilde: QuotientModule,
    pub tilde_hilbert: HilbertSeries,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CsmReport {
    pub variable: usize,
    /// Smallest `r > 0` with `x_v^r = 0` in `S/I`.
    pub nilpotency: u32,
    /// Ordered by strictly decreasing `f`.
    pub entries: Vec<CentralSimpleModule>,
}

impl CsmReport {
    pub fn f_values(&self) -> Vec<u32> {
        self.entries.iter().map(|e| e.f).collect()
    }

    pub fn tilde_summands(&self) -> Vec<Summand> {
        self.entries
            .iter()
            .map(|e| Summand::unshifted(e.tilde.clone()))
            .collect()
    }
}

/// The chain ideal `U_j = (I : x_v^j) + (x_v)`.
pub fn chain_ideal(ideal: &MonomialIdeal, var: usize, j: u32) -> Result<MonomialIdeal> {
    let n = ideal.nvars();
    let xv = MonomialIdeal::new(n, vec![Monomial::var_power(n, var, 1)?])?;
    ideal.colon_variable_power(var, j)?.sum(&xv)
}

pub fn csm_decompose(ideal: &MonomialIdeal, var: usize) -> Result<CsmReport> {
    let n = ideal.nvars();
    if var >= n {
        return Err(Error::VariableOutOfRange {
            index: var,
            nvars: n,
        });
    }
    if !ideal.is_artinian() {
        return Err(Error::NotArtinian);
    }
    if n + 1 > MAX_VARS {
        return Err(Error::UnsupportedVariableCount(n + 1));
    }
    let r = ideal
        .pure_power_exponent(var)
        .expect("Artinian ideal has a pure power");
    let chain = (0..=r)
        .map(|j| chain_ideal(ideal, var, j))
        .collect::<Result<Vec<_>>>()?;
    let mut entries = Vec::new();
    for f in (1..=r).rev() {
        let (upper, lower) = (&chain[f as usize], &chain[f as usize - 1]);
        if upper == lower {
            continue;
        }
        let module = QuotientModule::new(upper.clone(), lower.clone())?;
        let hilbert = module.hilbert_series()?;
        let tilde = module.tensor_truncation(f)?;
        let tilde_hilbert = tilde.hilbert_series()?;
        entries.push(CentralSimpleModule {
            f,
            module,
            hilbert,
            tilde,
            tilde_hilbert,
        });
    }
    Ok(CsmReport {
        variable: var,
        nilpotency: r,
        entries,
    })
}

/// Details of the central-simple-module sufficient condition.
#[derive(Clone, Debug, Serialize)]
pub struct CsmCriterion {
    pub report: CsmReport,
    /// Whether each `V~_i` has the SLP for the all-ones form.
    pub summand_slp: Vec<bool>,
    /// Whether every `V~_i` has a symmetric series, so that the reflecting
    /// degree test applies.
    pub all_symmetric: bool,
    /// Whether the direct sum of the `V~_i` has the SLP.
    pub sum_slp: bool,
}

impl CsmCriterion {
    pub fn holds(&self) -> bool {
        self.summand_slp.iter().all(|&b| b) && self.sum_slp
    }
}

/// Evaluates the sufficient condition "the direct sum of the thickened
/// central simple modules has the SLP". A negative answer says nothing
/// about `S/I` itself.
pub fn csm_slp_evaluation(ideal: &MonomialIdeal, var: usize) -> Result<CsmCriterion> {
    let report = csm_decompose(ideal, var)?;
    let ell = LinearForm::all_ones(ideal.nvars() + 1);
    let summand_slp = report
        .entries
        .iter()
        .map(|e| {
            Ok(GradedBasis::new(&e.tilde)?
                .check(Property::Strong, &ell)?
                .holds)
        })
        .collect::<Result<Vec<bool>>>()?;
    let all_symmetric = report
        .entries
        .iter()
        .all(|e| e.tilde_hilbert.is_symmetric().is_some());
    let summands = report.tilde_summands();
    let sum_slp = if !summand_slp.iter().all(|&b| b) {
        false
    } else if all_symmetric {
        direct_sum_slp(&summands, &ell)?.holds()
    } else {
        DirectSum::new(summands)?
            .check(Property::Strong, &ell)?
            .holds
    };
    Ok(CsmCriterion {
        report,
        summand_slp,
        all_symmetric,
        sum_slp,
    })
}

pub fn csm_slp_criterion(ideal: &MonomialIdeal, var: usize) -> Result<bool> {
    Ok(csm_slp_evaluation(ideal, var)?.holds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lefschetz::check_slp;
    use crate::theorems::type2_ideal;

    fn algebra_series(exps: &[u32]) -> HilbertSeries {
        QuotientModule::algebra(MonomialIdeal::pure_powers(exps).unwrap())
            .unwrap()
            .hilbert_series()
            .unwrap()
    }

    #[test]
    fn type_two_with_respect_to_x() {
        let (a, b, c, alpha, beta, gamma) = (4, 3, 5, 2, 2, 2);
        let ideal = type2_ideal(a, b, c, alpha, beta, gamma).unwrap();
        let rep = csm_decompose(&ideal, 0).unwrap();
        assert_eq!(rep.nilpotency, a);
        assert_eq!(rep.f_values(), vec![a, alpha]);
        // k[y,z]/(y^b, z^gamma) and k[y,z]/(y^beta, z^(c-gamma)) shifted by gamma
        assert_eq!(rep.entries[0].hilbert, algebra_series(&[b, gamma]));
        assert_eq!(
            rep.entries[1].hilbert,
            algebra_series(&[beta, c - gamma]).shifted(gamma as usize)
        );
    }

    #[test]
    fn type_two_with_respect_to_z() {
        let (a, b, c, alpha, beta, gamma) = (4, 3, 5, 2, 1, 3);
        let ideal = type2_ideal(a, b, c, alpha, beta, gamma).unwrap();
        let rep = csm_decompose(&ideal, 2).unwrap();
        assert_eq!(rep.f_values(), vec![c, gamma]);
        assert_eq!(rep.entries[0].hilbert, algebra_series(&[alpha, beta]));
        let v2 = QuotientModule::new(
            MonomialIdeal::from_exponents(2, &[&[alpha, 0], &[0, beta]]).unwrap(),
            MonomialIdeal::pure_powers(&[a, b]).unwrap(),
        )
        .unwrap();
        assert_eq!(rep.entries[1].hilbert, v2.hilbert_series().unwrap());
    }

    #[test]
    fn one_variable_algebra() {
        let ideal = MonomialIdeal::pure_powers(&[5]).unwrap();
        let rep = csm_decompose(&ideal, 0).unwrap();
        assert_eq!(rep.f_values(), vec![5]);
        assert_eq!(rep.entries[0].hilbert, HilbertSeries::from_dimensions(&[1]));
        assert_eq!(
            rep.entries[0].tilde_hilbert,
            HilbertSeries::from_dimensions(&[1; 5])
        );
    }

    #[test]
    fn tilde_series_is_thickened() {
        let ideal = type2_ideal(3, 4, 4, 1, 2, 2).unwrap();
        for v in 0..3 {
            let rep = csm_decompose(&ideal, v).unwrap();
            let mut last = u32::MAX;
            for e in &rep.entries {
                assert!(e.f < last && e.f >= 1 && e.f <= rep.nilpotency);
                last = e.f;
                assert!(!e.hilbert.is_zero());
                assert_eq!(
                    e.tilde_hilbert,
                    e.hilbert.times_truncated_geometric(e.f as usize)
                );
            }
        }
    }

    #[test]
    fn chain_is_increasing_and_ends_at_unit() {
        let ideal = type2_ideal(3, 3, 4, 1, 2, 1).unwrap();
        for v in 0..3 {
            let r = ideal.pure_power_exponent(v).unwrap();
            let chain: Vec<_> = (0..=r)
                .map(|j| chain_ideal(&ideal, v, j).unwrap())
                .collect();
            for w in chain.windows(2) {
                assert!(w[1].contains_ideal(&w[0]).unwrap());
            }
            assert!(chain[r as usize].is_unit());
            assert!(chain[0].contains_ideal(&ideal).unwrap());
        }
    }

    #[test]
    fn criterion_examples() {
        let ideal = MonomialIdeal::from_exponents(
            3,
            &[&[3, 0, 0], &[0, 3, 0], &[0, 0, 4], &[1, 0, 1], &[0, 1, 1]],
        )
        .unwrap();
        assert!(csm_slp_criterion(&ideal, 0).unwrap());
        let a = QuotientModule::algebra(ideal).unwrap();
        assert!(check_slp(&a, &LinearForm::all_ones(3)).unwrap().holds);

        let ci = MonomialIdeal::pure_powers(&[3, 4]).unwrap();
        let rep = csm_decompose(&ci, 0).unwrap();
        assert_eq!(rep.entries.len(), 1);
        assert!(csm_slp_criterion(&ci, 0).unwrap());
    }

    #[test]
    fn rejects_non_artinian_and_wide_rings() {
        let i = MonomialIdeal::from_exponents(2, &[&[2, 0]]).unwrap();
        assert_eq!(csm_decompose(&i, 0), Err(Error::NotArtinian));
        let wide = MonomialIdeal::pure_powers(&[2, 2, 2, 2]).unwrap();
        assert!(csm_decompose(&wide, 0).is_err());
    }
}
