//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use lefschetz::csm::csm_decompose;
use lefschetz::lefschetz::{apply_power, DirectSum, Property, Summand};
use lefschetz::monomial::Monomial;
use lefschetz::sweep::{self, SweepSummary};
use lefschetz::{check_slp, check_wlp, HilbertSeries, LinearForm, MonomialIdeal, QuotientModule};
use num_traits::Zero;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(
        elapsed < limit,
        format!("took {elapsed:.2?}, limit {limit:?}"),
    )
}

fn sweep_outcome(summary: lefschetz::Result<SweepSummary>) -> Result<SweepSummary, String> {
    let s = summary.map_err(|e| e.to_string())?;
    if let Some(v) = s.violations.first() {
        return Err(format!("{s}; first: {} ({})", v.instance, v.detail));
    }
    Ok(s)
}

fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::from_exponents(n, gens).unwrap()
}

fn mono(e: &[u32]) -> Monomial {
    Monomial::new(e.to_vec()).unwrap()
}

fn lex_counterexample() -> Outcome {
    let start = Instant::now();
    let i = MonomialIdeal::pure_powers(&[3, 4]).unwrap();
    let j = MonomialIdeal::pure_powers(&[5, 5]).unwrap();
    let ell = LinearForm::all_ones(2);
    let original = QuotientModule::new(i.clone(), j.clone()).unwrap();
    let slp = check_slp(&original, &ell).map_err(|e| e.to_string())?;
    ensure(slp.holds, format!("I/J fails SLP: {:?}", slp.failures))?;

    let lex = QuotientModule::new(i.lex_ideal().unwrap(), j.lex_ideal().unwrap()).unwrap();
    let h = lex.hilbert_series().unwrap();
    ensure(
        h.coeff(4) == 3 && h.coeff(5) == 3,
        format!("lex series {h}"),
    )?;
    let wlp = check_wlp(&lex, &ell).map_err(|e| e.to_string())?;
    ensure(!wlp.holds, "lex quotient has the WLP")?;
    let f = wlp
        .failure_at(4, 1)
        .ok_or_else(|| format!("no failure at (4,1): {:?}", wlp.failures))?;
    ensure(f.rank <= 2, format!("rank {} at (4,1)", f.rank))?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!("lex {lex}: rank {} at i=4 d=1", f.rank))
}

fn main_theorem() -> Outcome {
    let start = Instant::now();
    ensure(
        sweep::staircase_ideals(6, 6).len() == 924,
        "staircase count at (6,6)",
    )?;
    let s = sweep_outcome(sweep::main_theorem(6, 6, 1))?;
    within(start.elapsed(), Duration::from_secs(300))?;
    Ok(format!("{s} in {:.2?}", start.elapsed()))
}

fn lgv_oracle() -> Outcome {
    let start = Instant::now();
    let s = sweep_outcome(sweep::lgv_oracle(7, 3, 1))?;
    ensure(s.instances == 3984, format!("{} pairs", s.instances))?;
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("{s} in {:.2?}", start.elapsed()))
}

fn pipeline() -> Outcome {
    let s = sweep_outcome(sweep::pipeline(6, 6, 0))?;
    Ok(s.to_string())
}

fn three_variable() -> Outcome {
    let m = QuotientModule::new(
        MonomialIdeal::pure_powers(&[2, 2, 2]).unwrap(),
        MonomialIdeal::pure_powers(&[3, 3, 3]).unwrap(),
    )
    .unwrap();
    let h = m.hilbert_series().unwrap();
    ensure(h.coeff(3) == 6 && h.coeff(4) == 6, format!("series {h}"))?;
    let ell = LinearForm::all_ones(3);
    // x^2(y - z) + y^2(z - x) + z^2(x - y)
    let f = [
        (mono(&[2, 1, 0]), 1),
        (mono(&[2, 0, 1]), -1),
        (mono(&[0, 2, 1]), 1),
        (mono(&[1, 2, 0]), -1),
        (mono(&[1, 0, 2]), 1),
        (mono(&[0, 1, 2]), -1),
    ];
    let image = apply_power(&m, &ell, 1, 3, &f).map_err(|e| e.to_string())?;
    ensure(image.iter().all(Zero::is_zero), "element not in kernel")?;
    let wlp = check_wlp(&m, &ell).map_err(|e| e.to_string())?;
    ensure(!wlp.holds, "module has the WLP")?;
    Ok(format!(
        "WLP failures {:?}",
        wlp.failures
            .iter()
            .map(|f| (f.i, f.d, f.rank))
            .collect::<Vec<_>>()
    ))
}

fn tensor_extension_counterexample() -> Outcome {
    let m = QuotientModule::new(
        ideal(2, &[&[2, 0], &[0, 2]]),
        MonomialIdeal::pure_powers(&[4, 4]).unwrap(),
    )
    .unwrap();
    let h = m.hilbert_series().unwrap();
    let expected = HilbertSeries::from_shifted(2, &[2, 4, 3, 2, 1]);
    ensure(h == expected, format!("series {h}"))?;
    ensure(!h.is_almost_centered(), "series is almost centered")?;

    let n = m.tensor_truncation(3).unwrap();
    let ell = LinearForm::all_ones(3);
    let slp = check_slp(&n, &ell).map_err(|e| e.to_string())?;
    ensure(!slp.holds, "tensor module has the SLP")?;
    // (x - y)(x^2 + y^2)
    let f = [
        (mono(&[3, 0, 0]), 1),
        (mono(&[2, 1, 0]), -1),
        (mono(&[1, 2, 0]), 1),
        (mono(&[0, 3, 0]), -1),
    ];
    let killed_by = (1..=3)
        .find(|&d| {
            apply_power(&n, &ell, d, 3, &f)
                .map(|v| v.iter().all(Zero::is_zero))
                .unwrap_or(false)
        })
        .ok_or("element survives every power up to 3")?;
    let cell = slp
        .failure_at(3, killed_by)
        .ok_or_else(|| format!("no failure at (3,{killed_by})"))?;
    Ok(format!(
        "element killed by ell^{killed_by}; failure at i=3 d={killed_by} rank {} < {}",
        cell.rank, cell.expected
    ))
}

fn csm_closed_forms() -> Outcome {
    let s = sweep_outcome(sweep::csm_closed_forms(4, 0))?;
    // the two-entry shape is part of the claim
    for p in sweep::type2_parameters(4) {
        let i = p.ideal();
        let x = csm_decompose(&i, 0).map_err(|e| e.to_string())?;
        let z = csm_decompose(&i, 2).map_err(|e| e.to_string())?;
        ensure(
            x.entries.len() == 2 && z.entries.len() == 2,
            format!("{p}: CSM count"),
        )?;
    }
    Ok(s.to_string())
}

fn type2_soundness() -> Outcome {
    let start = Instant::now();
    let s = sweep_outcome(sweep::type2_soundness(5, 0))?;
    within(start.elapsed(), Duration::from_secs(600))?;
    Ok(format!("{s} in {:.2?}", start.elapsed()))
}

fn tensor_soundness() -> Outcome {
    let s = sweep_outcome(sweep::tensor_soundness(5, 0))?;
    Ok(s.to_string())
}

fn tensor_lemmas() -> Outcome {
    let s = sweep_outcome(sweep::tensor_lemmas(4, 0))?;
    Ok(s.to_string())
}

fn one_variable() -> Outcome {
    let copy = QuotientModule::algebra(MonomialIdeal::pure_powers(&[2]).unwrap()).unwrap();
    let sum = DirectSum::new(vec![
        Summand::unshifted(copy.clone()),
        Summand {
            module: copy,
            shift: 2,
        },
    ])
    .map_err(|e| e.to_string())?;
    let ell = LinearForm::all_ones(1);
    let wlp = sum.check(Property::Weak, &ell).map_err(|e| e.to_string())?;
    ensure(!wlp.holds, "direct sum has the WLP")?;
    let f = wlp.failure_at(1, 1).ok_or("no failure at degree 1 -> 2")?;
    ensure(f.rank == 0 && f.expected == 1, format!("{f:?}"))?;
    Ok(format!("series {}, failure {f:?}", sum.hilbert_series()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("lex counterexample", lex_counterexample),
        ("main theorem sweep", main_theorem),
        ("LGV oracle equivalence", lgv_oracle),
        ("pipeline certificate", pipeline),
        ("three-variable counterexample", three_variable),
        (
            "tensor extension counterexample",
            tensor_extension_counterexample,
        ),
        ("CSM closed forms", csm_closed_forms),
        ("type-two soundness", type2_soundness),
        ("tensor theorem soundness", tensor_soundness),
        ("bounded lemma suites", tensor_lemmas),
        ("one-variable direct sum", one_variable),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let outcome =
            std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(detail) => println!("[PASS] AC-{} {name}: {detail}", n + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] AC-{} {name}: {why}", n + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
