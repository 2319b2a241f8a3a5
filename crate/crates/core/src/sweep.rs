//! Parameter sweeps over the corpora the theorems speak about. Each sweep
//! returns a [`SweepSummary`] listing every violated expectation; the CLI
//! and the acceptance tests both go through these functions.
//!
//! Work items run on a rayon pool of `jobs` threads: `1` runs sequentially
//! and `0` uses one thread per core. Results are collected in input order, so summaries do not
//! depend on scheduling.

use crate::csm::{csm_decompose, csm_slp_evaluation};
use crate::error::Result;
use crate::hilbert::HilbertSeries;
use crate::ideal::MonomialIdeal;
use crate::lefschetz::{GradedBasis, LinearForm, Property};
use crate::lgv::{count_nonintersecting, lgv_positivity, AscendingSequence, Positivity};
use crate::module::QuotientModule;
use crate::monomial::Monomial;
use crate::pipeline::{certify, cl_matrix, restrict_rows};
use crate::theorems::{tensor_module, thm_tensor_condition, thm_type2_conditions, Type2Params};
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub instance: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub name: String,
    /// Number of corpus members visited.
    pub instances: usize,
    /// Number of individual assertions evaluated.
    pub checks: usize,
    pub violations: Vec<Violation>,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} instances, {} checks, {} violations",
            self.name,
            self.instances,
            self.checks,
            self.violations.len()
        )
    }
}

/// Outcome of one work item.
#[derive(Default)]
struct Tally {
    checks: usize,
    violations: Vec<Violation>,
}

impl Tally {
    fn expect(&mut self, ok: bool, instance: impl fmt::Display, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations.push(Violation {
                instance: instance.to_string(),
                detail: detail(),
            });
        }
    }
}

fn run<T, F>(name: &str, jobs: usize, items: &[T], work: F) -> Result<SweepSummary>
where
    T: Sync,
    F: Fn(&T) -> Result<Tally> + Sync + Send,
{
    let tallies: Vec<Result<Tally>> = if jobs == 1 {
        items.iter().map(&work).collect()
    } else if jobs == 0 {
        items.par_iter().map(&work).collect()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool")
            .install(|| items.par_iter().map(&work).collect())
    };
    let mut summary = SweepSummary {
        name: name.to_string(),
        instances: items.len(),
        checks: 0,
        violations: Vec::new(),
    };
    for t in tallies {
        let t = t?;
        summary.checks += t.checks;
        summary.violations.extend(t.violations);
    }
    Ok(summary)
}

/// Every monomial ideal of `k[x, y]` containing `(x^a, y^b)`, one per
/// staircase in the `a x b` box: `C(a + b, a)` ideals, from `(1)` down to
/// `(x^a, y^b)` itself.
pub fn staircase_ideals(a: u32, b: u32) -> Vec<MonomialIdeal> {
    // heights[s] = number of standard monomials x^s y^k, non-increasing in s
    fn rec(a: u32, b: u32, cap: u32, heights: &mut Vec<u32>, out: &mut Vec<MonomialIdeal>) {
        if heights.len() == a as usize {
            let mut gens = vec![
                Monomial::new(vec![a, 0]).expect("two variables"),
                Monomial::new(vec![0, b]).expect("two variables"),
            ];
            for (s, &h) in heights.iter().enumerate() {
                if h < b {
                    gens.push(Monomial::new(vec![s as u32, h]).expect("two variables"));
                }
            }
            out.push(MonomialIdeal::new(2, gens).expect("two variables"));
            return;
        }
        for h in (0..=cap).rev() {
            heights.push(h);
            rec(a, b, h, heights, out);
            heights.pop();
        }
    }
    let mut out = Vec::new();
    rec(a, b, b, &mut Vec::with_capacity(a as usize), &mut out);
    out
}

/// `(I + J)/J` with `J = (x^a, y^b)` for every staircase ideal `I`.
pub fn staircase_modules(a: u32, b: u32) -> Vec<QuotientModule> {
    let j = MonomialIdeal::pure_powers(&[a, b]).expect("two variables");
    staircase_ideals(a, b)
        .into_iter()
        .map(|i| QuotientModule::new(i, j.clone()).expect("same ring"))
        .collect()
}

/// All `(a, b, c, alpha, beta, gamma)` with `0 < alpha < a <= max`,
/// `0 < beta < b <= max`, `0 < gamma < c <= max`.
pub fn type2_parameters(max: u32) -> Vec<Type2Params> {
    let mut out = Vec::new();
    for a in 2..=max {
        for b in 2..=max {
            for c in 2..=max {
                for alpha in 1..a {
                    for beta in 1..b {
                        for gamma in 1..c {
                            out.push(
                                Type2Params::new(a, b, c, alpha, beta, gamma)
                                    .expect("admissible by construction"),
                            );
                        }
                    }
                }
            }
        }
    }
    out
}

/// Strictly increasing sequences drawn from `0..=max_value` with length
/// `1..=max_len`.
pub fn ascending_sequences(max_value: i64, max_len: usize) -> Vec<AscendingSequence> {
    fn rec(next: i64, max: i64, left: usize, cur: &mut Vec<i64>, out: &mut Vec<AscendingSequence>) {
        if !cur.is_empty() {
            out.push(AscendingSequence::new(cur.clone()).expect("increasing"));
        }
        if left == 0 {
            return;
        }
        for v in next..=max {
            cur.push(v);
            rec(v + 1, max, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, max_value, max_len, &mut Vec::new(), &mut out);
    out
}

fn slp_all_ones(module: &QuotientModule) -> Result<crate::LefschetzReport> {
    GradedBasis::new(module)?.check(Property::Strong, &LinearForm::all_ones(module.nvars()))
}

/// Every `(I + J)/J` with `J = (x^a, y^b)`, `2 <= a <= max_a`,
/// `2 <= b <= max_b`, has the SLP with `x + y`.
pub fn main_theorem(max_a: u32, max_b: u32, jobs: usize) -> Result<SweepSummary> {
    let items: Vec<QuotientModule> = (2..=max_a)
        .flat_map(|a| (2..=max_b).flat_map(move |b| staircase_modules(a, b)))
        .collect();
    run("main-thm", jobs, &items, |m| {
        let mut t = Tally::default();
        let r = slp_all_ones(m)?;
        t.expect(r.holds, m, || format!("SLP failures {:?}", r.failures));
        Ok(t)
    })
}

/// The binomial-matrix certificate on the same corpus as [`main_theorem`],
/// for every `(i, d)` with `M_i` and `M_(i+d)` nonzero, cross-checked
/// against exact elimination and against [`crate::mult_matrix`].
pub fn pipeline(max_a: u32, max_b: u32, jobs: usize) -> Result<SweepSummary> {
    let items: Vec<(u32, u32, QuotientModule)> = (2..=max_a)
        .flat_map(|a| {
            (2..=max_b)
                .flat_map(move |b| staircase_modules(a, b).into_iter().map(move |m| (a, b, m)))
        })
        .collect();
    run("pipeline", jobs, &items, |(a, b, m)| {
        let mut t = Tally::default();
        let basis = GradedBasis::new(m)?;
        let ell = LinearForm::all_ones(2);
        let socle = a + b - 2;
        for top in 1..=socle {
            for d in 1..=top {
                let i = top - d;
                let (src, dst) = (basis.basis(i as usize), basis.basis(top as usize));
                if src.is_empty() || dst.is_empty() {
                    continue;
                }
                let cell = format!("{m} i={i} d={d}");
                let cl = cl_matrix(*a, *b, i, d)?;
                let restricted = restrict_rows(&cl, m.numerator())?;
                let cert = certify(&restricted)?;
                t.expect(cert.certified, &cell, || format!("not certified: {cert:?}"));
                t.expect(cert.sound(), &cell, || {
                    format!("certificate disagrees: {cert:?}")
                });
                let expected = src.len().min(dst.len());
                t.expect(cert.rank == expected, &cell, || {
                    format!("rank {} but min(h_i, h_i+d) = {expected}", cert.rank)
                });
                // B is the transposed multiplication matrix plus zero
                // columns for degree i+d monomials outside I.
                let mult = basis.power_map(&ell, d as usize, i as usize)?;
                let mut same = restricted.row_labels == src;
                for (col, label) in restricted.col_labels.iter().enumerate() {
                    let column: Vec<_> = (0..restricted.matrix.rows())
                        .map(|r| restricted.matrix[(r, col)].clone())
                        .collect();
                    match dst.iter().position(|w| w == label) {
                        Some(row) if same => {
                            same = column == mult.row(row).to_vec();
                        }
                        Some(_) => {}
                        None => same &= column.iter().all(num_traits::Zero::is_zero),
                    }
                }
                t.expect(same, &cell, || {
                    "restricted matrix differs from multiplication matrix".into()
                });
            }
        }
        Ok(t)
    })
}

/// Determinant of `(C(a_i, b_j))` against the brute-force path count, its
/// sign, and the diagonal positivity test.
pub fn lgv_oracle(max_value: i64, max_len: usize, jobs: usize) -> Result<SweepSummary> {
    let seqs = ascending_sequences(max_value, max_len);
    let items: Vec<(AscendingSequence, AscendingSequence)> = seqs
        .iter()
        .flat_map(|a| {
            seqs.iter()
                .filter(move |b| b.len() == a.len())
                .map(move |b| (a.clone(), b.clone()))
        })
        .collect();
    run("lgv-oracle", jobs, &items, |(a, b)| {
        let mut t = Tally::default();
        let inst = format!("a={:?} b={:?}", a.values(), b.values());
        let check = lgv_positivity(a, b)?;
        let count = count_nonintersecting(a, b)?;
        t.expect(check.determinant == count, &inst, || {
            format!("det {} but {count} families", check.determinant)
        });
        t.expect(check.consistent(), &inst, || format!("{check:?}"));
        Ok(t)
    })
}

fn shifted_algebra_series(exps: &[u32], shift: usize) -> Result<HilbertSeries> {
    Ok(QuotientModule::algebra(MonomialIdeal::pure_powers(exps)?)?
        .hilbert_series()?
        .shifted(shift))
}

/// Closed forms for the central simple modules of the type-two algebras.
pub fn csm_closed_forms(max: u32, jobs: usize) -> Result<SweepSummary> {
    let items = type2_parameters(max);
    run("csm-closed-forms", jobs, &items, |p| {
        let mut t = Tally::default();
        let ideal = p.ideal();
        let deg = thm_type2_conditions(p).doubled_degrees;

        let by_x = csm_decompose(&ideal, 0)?;
        t.expect(by_x.f_values() == vec![p.a, p.alpha], p, || {
            format!("x: f = {:?}", by_x.f_values())
        });
        if by_x.entries.len() == 2 {
            let v1 = shifted_algebra_series(&[p.b, p.gamma], 0)?;
            let v2 = shifted_algebra_series(&[p.beta, p.c - p.gamma], p.gamma as usize)?;
            t.expect(by_x.entries[0].hilbert == v1, p, || "V1,x series".into());
            t.expect(by_x.entries[1].hilbert == v2, p, || "V2,x series".into());
            let r1 = by_x.entries[0].tilde_hilbert.is_symmetric();
            let r2 = by_x.entries[1].tilde_hilbert.is_symmetric();
            t.expect(r1.map(|r| r.doubled) == Some(deg.r1x), p, || {
                format!("r1x {r1:?}")
            });
            t.expect(r2.map(|r| r.doubled) == Some(deg.r2x), p, || {
                format!("r2x {r2:?}")
            });
        }

        let by_z = csm_decompose(&ideal, 2)?;
        t.expect(by_z.f_values() == vec![p.c, p.gamma], p, || {
            format!("z: f = {:?}", by_z.f_values())
        });
        if by_z.entries.len() == 2 {
            let v1 = shifted_algebra_series(&[p.alpha, p.beta], 0)?;
            let v2 = QuotientModule::new(
                MonomialIdeal::from_exponents(2, &[&[p.alpha, 0], &[0, p.beta]])?,
                MonomialIdeal::pure_powers(&[p.a, p.b])?,
            )?
            .hilbert_series()?;
            t.expect(by_z.entries[0].hilbert == v1, p, || "V1,z series".into());
            t.expect(by_z.entries[1].hilbert == v2, p, || "V2,z series".into());
            let r1 = by_z.entries[0].tilde_hilbert.is_symmetric();
            t.expect(r1.map(|r| r.doubled) == Some(deg.r1z), p, || {
                format!("r1z {r1:?}")
            });
            if let Some(r2) = by_z.entries[1].tilde_hilbert.is_symmetric() {
                t.expect(r2.doubled == deg.r2z, p, || format!("r2z {r2:?}"));
            }
        }
        Ok(t)
    })
}

/// The type-two sufficient conditions, and the central-simple-module
/// criterion for `x` and `z`, never predict the SLP for an algebra that
/// lacks it.
pub fn type2_soundness(max: u32, jobs: usize) -> Result<SweepSummary> {
    let items = type2_parameters(max);
    run("type2", jobs, &items, |p| {
        let mut t = Tally::default();
        let ideal = p.ideal();
        let algebra = QuotientModule::algebra(ideal.clone())?;
        let slp = slp_all_ones(&algebra)?.holds;
        let cond = thm_type2_conditions(p);
        t.expect(!cond.predicts_slp() || slp, p, || {
            format!("conditions {:?} hold but S/I lacks the SLP", cond.satisfied)
        });
        for var in [0, 2] {
            let crit = csm_slp_evaluation(&ideal, var)?.holds();
            t.expect(!crit || slp, p, || {
                format!("CSM criterion for variable {var} holds but S/I lacks the SLP")
            });
        }
        Ok(t)
    })
}

/// `thm_tensor_condition != None` implies the SLP of
/// `(x^alpha, y^beta)/(x^a, y^b, z^c)` for `1 <= c <= a + b`.
pub fn tensor_soundness(max: u32, jobs: usize) -> Result<SweepSummary> {
    let mut items = Vec::new();
    for a in 1..=max {
        for b in 1..=max {
            for alpha in 0..=a {
                for beta in 0..=b {
                    items.push((alpha, beta, a, b));
                }
            }
        }
    }
    run("tensor", jobs, &items, |&(alpha, beta, a, b)| {
        let mut t = Tally::default();
        if !thm_tensor_condition(alpha, beta, a, b)?.predicts_slp() {
            return Ok(t);
        }
        for c in 1..=a + b {
            let m = tensor_module(alpha, beta, a, b, c)?;
            let r = slp_all_ones(&m)?;
            t.expect(r.holds, &m, || format!("SLP failures {:?}", r.failures));
        }
        Ok(t)
    })
}

/// Modules in at most two variables with parameters up to `max`: every
/// staircase quotient `I/(x^a, y^b)` and every `(x^alpha)/(x^a)`.
pub fn small_module_corpus(max: u32) -> Vec<QuotientModule> {
    let mut out = Vec::new();
    for a in 1..=max {
        for alpha in 0..a {
            out.push(
                QuotientModule::new(
                    MonomialIdeal::pure_powers(&[alpha]).expect("one variable"),
                    MonomialIdeal::pure_powers(&[a]).expect("one variable"),
                )
                .expect("same ring"),
            );
        }
        for b in 1..=max {
            out.extend(staircase_modules(a, b));
        }
    }
    out
}

/// Algebras `S/I` in at most two variables with `I` containing pure powers
/// of exponent at most `max`.
pub fn small_algebra_corpus(max: u32) -> Vec<QuotientModule> {
    let mut out = Vec::new();
    for a in 1..=max {
        out.push(
            QuotientModule::algebra(MonomialIdeal::pure_powers(&[a]).expect("one variable"))
                .expect("same ring"),
        );
        for b in 1..=max {
            for i in staircase_ideals(a, b) {
                out.push(QuotientModule::algebra(i).expect("same ring"));
            }
        }
    }
    out.dedup();
    out
}

/// Bounded versions of the two tensor lemmas, with `1 <= c <= socle + 2`
/// standing in for "all c":
///
/// - for `M` with the SLP: `M (x) k[z]/(z^c)` has the SLP for all `c`
///   exactly when the series of `M` is almost centered;
/// - `S/I` has the SLP exactly when `S/I (x) k[z]/(z^c)` has the WLP for
///   all `c`.
pub fn tensor_lemmas(max: u32, jobs: usize) -> Result<SweepSummary> {
    #[derive(Clone)]
    enum Item {
        AlmostCentered(QuotientModule),
        Algebra(QuotientModule),
    }
    let mut items: Vec<Item> = small_module_corpus(max)
        .into_iter()
        .map(Item::AlmostCentered)
        .collect();
    items.extend(small_algebra_corpus(max).into_iter().map(Item::Algebra));
    run("tensor-lemmas", jobs, &items, |item| {
        let mut t = Tally::default();
        match item {
            Item::AlmostCentered(m) => {
                let h = m.hilbert_series()?;
                if h.is_zero() || !slp_all_ones(m)?.holds {
                    return Ok(t);
                }
                let top = m.socle_degree()? + 2;
                let mut all = true;
                for c in 1..=top {
                    all &= slp_all_ones(&m.tensor_truncation(c)?)?.holds;
                }
                t.expect(all == h.is_almost_centered(), m, || {
                    format!(
                        "almost centered = {}, SLP for all c = {all}",
                        h.is_almost_centered()
                    )
                });
            }
            Item::Algebra(m) => {
                if m.is_zero()? {
                    return Ok(t);
                }
                let slp = slp_all_ones(m)?.holds;
                let top = m.socle_degree()? + 2;
                let mut all = true;
                for c in 1..=top {
                    let n = m.tensor_truncation(c)?;
                    all &= GradedBasis::new(&n)?
                        .check(Property::Weak, &LinearForm::all_ones(n.nvars()))?
                        .holds;
                }
                t.expect(all == slp, m, || {
                    format!("SLP = {slp}, WLP of tensors = {all}")
                });
            }
        }
        Ok(t)
    })
}

/// Positivity outcomes over the LGV corpus, for reporting.
pub fn lgv_positive_count(max_value: i64, max_len: usize) -> Result<usize> {
    let seqs = ascending_sequences(max_value, max_len);
    let mut n = 0;
    for a in &seqs {
        for b in seqs.iter().filter(|b| b.len() == a.len()) {
            if lgv_positivity(a, b)?.positivity == Positivity::Positive {
                n += 1;
            }
        }
    }
    Ok(n)
}
