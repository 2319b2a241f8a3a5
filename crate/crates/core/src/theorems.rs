//! Closed-form sufficient conditions for the strong Lefschetz property of
//! `(x^alpha, y^beta)/(x^a, y^b, z^c)` and of the type-two algebras
//! `S/(x^a, y^b, z^c, x^alpha z^gamma, y^beta z^gamma)`.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::module::QuotientModule;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TensorCondition {
    /// `min{alpha, beta} < max{alpha, beta} <= 2`.
    SmallCase,
    /// `min{alpha, beta} < max{alpha, beta} = min{alpha + beta, a, b}`; the
    /// series of `(x^alpha, y^beta)/(x^a, y^b)` is then symmetric.
    SymmetricCase,
    None,
}

impl TensorCondition {
    pub fn predicts_slp(self) -> bool {
        self != TensorCondition::None
    }
}

/// When both cases apply, `SmallCase` is reported.
pub fn thm_tensor_condition(alpha: u32, beta: u32, a: u32, b: u32) -> Result<TensorCondition> {
    if alpha > a || beta > b {
        return Err(Error::InvalidParameter(format!(
            "need alpha <= a and beta <= b; got alpha={alpha}, beta={beta}, a={a}, b={b}"
        )));
    }
    let (lo, hi) = (alpha.min(beta), alpha.max(beta));
    Ok(if lo < hi && hi <= 2 {
        TensorCondition::SmallCase
    } else if lo < hi && hi == (alpha + beta).min(a).min(b) {
        TensorCondition::SymmetricCase
    } else {
        TensorCondition::None
    })
}

/// `(x^alpha, y^beta)/(x^a, y^b, z^c)` in three variables.
pub fn tensor_module(alpha: u32, beta: u32, a: u32, b: u32, c: u32) -> Result<QuotientModule> {
    let num = MonomialIdeal::from_exponents(3, &[&[alpha, 0, 0], &[0, beta, 0]])?;
    let den = MonomialIdeal::pure_powers(&[a, b, c])?;
    QuotientModule::new(num, den)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Type2Params {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub alpha: u32,
    pub beta: u32,
    pub gamma: u32,
}

impl Type2Params {
    pub fn new(a: u32, b: u32, c: u32, alpha: u32, beta: u32, gamma: u32) -> Result<Self> {
        if !(0 < alpha && alpha < a && 0 < beta && beta < b && 0 < gamma && gamma < c) {
            return Err(Error::InvalidParameter(format!(
                "need 0 < alpha < a, 0 < beta < b, 0 < gamma < c; got a={a}, b={b}, c={c}, alpha={alpha}, beta={beta}, gamma={gamma}"
            )));
        }
        Ok(Type2Params {
            a,
            b,
            c,
            alpha,
            beta,
            gamma,
        })
    }

    pub fn ideal(&self) -> MonomialIdeal {
        let Type2Params {
            a,
            b,
            c,
            alpha,
            beta,
            gamma,
        } = *self;
        MonomialIdeal::from_exponents(
            3,
            &[
                &[a, 0, 0],
                &[0, b, 0],
                &[0, 0, c],
                &[alpha, 0, gamma],
                &[0, beta, gamma],
            ],
        )
        .expect("three variables are supported")
    }
}

impl std::fmt::Display for Type2Params {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "(a,b,c,alpha,beta,gamma)=({},{},{},{},{},{})",
            self.a, self.b, self.c, self.alpha, self.beta, self.gamma
        )
    }
}

/// `(x^a, y^b, z^c, x^alpha z^gamma, y^beta z^gamma)`.
pub fn type2_ideal(
    a: u32,
    b: u32,
    c: u32,
    alpha: u32,
    beta: u32,
    gamma: u32,
) -> Result<MonomialIdeal> {
    Ok(Type2Params::new(a, b, c, alpha, beta, gamma)?.ideal())
}

/// Doubled reflecting degrees of the four thickened central simple modules
/// (two for `x`, two for `z`). The last one is meaningful only when that
/// module's series is symmetric.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Type2Degrees {
    pub r1x: i64,
    pub r2x: i64,
    pub r1z: i64,
    pub r2z: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Type2Conditions {
    /// Which of the conditions 1, 2, 3 hold.
    pub satisfied: Vec<u8>,
    pub doubled_degrees: Type2Degrees,
}

impl Type2Conditions {
    pub fn predicts_slp(&self) -> bool {
        !self.satisfied.is_empty()
    }
}

pub fn thm_type2_conditions(p: &Type2Params) -> Type2Conditions {
    let (a, b, c) = (p.a as i64, p.b as i64, p.c as i64);
    let (alpha, beta, gamma) = (p.alpha as i64, p.beta as i64, p.gamma as i64);
    let (lo, hi) = (alpha.min(beta), alpha.max(beta));
    let spread = a + b - c;
    let mut satisfied = Vec::new();
    if alpha + beta - 1 <= spread && spread <= alpha + beta + 1 {
        satisfied.push(1);
    }
    if lo != hi
        && hi == (alpha + beta).min(a).min(b)
        && hi - gamma - 1 <= spread
        && spread <= hi - gamma + 1
    {
        satisfied.push(2);
    }
    if lo < hi && hi <= 2 && a + b + gamma <= c + 2 {
        satisfied.push(3);
    }
    Type2Conditions {
        satisfied,
        doubled_degrees: Type2Degrees {
            r1x: a + b + gamma - 3,
            r2x: gamma + alpha + beta + c - 3,
            r1z: alpha + beta + c - 3,
            r2z: lo + a + b + gamma - 3,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_condition_examples() {
        assert_eq!(
            thm_tensor_condition(1, 2, 2, 3).unwrap(),
            TensorCondition::SmallCase
        );
        assert_eq!(
            thm_tensor_condition(1, 3, 4, 3).unwrap(),
            TensorCondition::SymmetricCase
        );
        assert_eq!(
            thm_tensor_condition(2, 2, 4, 4).unwrap(),
            TensorCondition::None
        );
        assert!(thm_tensor_condition(5, 1, 4, 4).is_err());
    }

    #[test]
    fn type2_examples() {
        let t = |a, b, c, al, be, ga| {
            thm_type2_conditions(&Type2Params::new(a, b, c, al, be, ga).unwrap())
        };
        assert!(t(3, 3, 4, 1, 1, 1).satisfied.contains(&1));
        assert!(t(2, 3, 4, 1, 2, 1).satisfied.contains(&3));
        assert!(t(5, 5, 2, 1, 1, 1).satisfied.is_empty());
        let d = t(3, 3, 4, 1, 1, 1).doubled_degrees;
        assert_eq!((d.r1x, d.r2x, d.r1z, d.r2z), (4, 4, 3, 5));
        assert!(Type2Params::new(3, 3, 4, 3, 1, 1).is_err());
        assert!(Type2Params::new(3, 3, 4, 1, 1, 0).is_err());
    }

    #[test]
    fn symmetric_case_means_symmetric_series() {
        for a in 1..=5 {
            for b in 1..=5 {
                for alpha in 0..=a {
                    for beta in 0..=b {
                        let m = QuotientModule::new(
                            MonomialIdeal::from_exponents(2, &[&[alpha, 0], &[0, beta]]).unwrap(),
                            MonomialIdeal::pure_powers(&[a, b]).unwrap(),
                        )
                        .unwrap();
                        let h = m.hilbert_series().unwrap();
                        let (lo, hi) = (alpha.min(beta), alpha.max(beta));
                        let predicted = lo < hi && hi == (alpha + beta).min(a).min(b);
                        if predicted {
                            assert!(h.is_symmetric().is_some(), "{alpha} {beta} {a} {b}");
                        }
                    }
                }
            }
        }
    }
}
