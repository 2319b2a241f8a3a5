//! One function per verb. Each returns the payload of a [`crate::report::Report`].

use lefschetz::csm::{csm_decompose, csm_slp_evaluation};
use lefschetz::lefschetz::{GradedBasis, LefschetzReport, Property};
use lefschetz::lgv::{count_nonintersecting, lgv_positivity, AscendingSequence};
use lefschetz::monomial::VARIABLE_NAMES;
use lefschetz::parse::variables_used;
use lefschetz::pipeline::{certify, cl_matrix, pascal_column_transform, restrict_rows};
use lefschetz::sweep::{self, SweepSummary};
use lefschetz::{
    parse_ideal_in, ExactMatrix, HilbertSeries, LinearForm, Monomial, MonomialIdeal, QuotientModule,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::fmt::Display;

/// What a verb produced, before timing and versioning.
pub struct Outcome {
    pub inputs: Value,
    pub result: Value,
    pub failures: Vec<Value>,
    /// False when a sweep or reproduction found a mismatch.
    pub ok: bool,
}

pub type CmdResult = Result<Outcome, lefschetz::Error>;

pub fn int(v: impl Display) -> Value {
    let s = v.to_string();
    s.parse::<i64>()
        .map(Value::from)
        .unwrap_or(Value::String(s))
}

pub fn series_json(h: &HilbertSeries) -> Value {
    json!({
        "text": h.to_string(),
        "start": h.start(),
        "coeffs": h.coeffs(),
    })
}

pub fn labels(ms: &[Monomial]) -> Vec<String> {
    ms.iter().map(ToString::to_string).collect()
}

pub fn matrix_json(m: &ExactMatrix) -> Value {
    serde_json::to_value(m).expect("matrix is serializable")
}

pub fn report_json(r: &LefschetzReport) -> Value {
    json!({
        "holds": r.holds,
        "linear_form": r.linear_form.coefficients(),
        "failures": r.failures.len(),
    })
}

pub fn failures_json(r: &LefschetzReport) -> Vec<Value> {
    r.failures
        .iter()
        .map(|f| serde_json::to_value(f).expect("failure is serializable"))
        .collect()
}

/// Parses `num` and `den` in a common ring.
pub fn module_from(
    num: &str,
    den: &str,
    nvars: Option<usize>,
) -> Result<QuotientModule, lefschetz::Error> {
    let n = match nvars {
        Some(n) => n,
        None => variables_used(num)?.max(variables_used(den)?),
    };
    QuotientModule::new(parse_ideal_in(num, n)?, parse_ideal_in(den, n)?)
}

pub fn variable_index(name: &str) -> Result<usize, lefschetz::Error> {
    VARIABLE_NAMES
        .iter()
        .position(|v| *v == name)
        .ok_or_else(|| lefschetz::Error::InvalidParameter(format!("unknown variable '{name}'")))
}

pub fn hilbert(num: &str, den: &str, nvars: Option<usize>) -> CmdResult {
    let m = module_from(num, den, nvars)?;
    let h = m.hilbert_series()?;
    let socle = if h.is_zero() {
        None
    } else {
        Some(m.socle_degree()?)
    };
    Ok(Outcome {
        inputs: json!({"num": num, "den": den, "module": m.to_string(), "nvars": m.nvars()}),
        result: json!({
            "series": series_json(&h),
            "length": h.length(),
            "socle_degree": socle,
            "reflecting_degree": h.is_symmetric().map(|r| r.to_string()),
            "unimodal": h.is_unimodal(),
            "almost_centered": h.is_almost_centered(),
        }),
        failures: vec![],
        ok: true,
    })
}

pub struct FormChoice<'a> {
    pub linear_form: Option<&'a [i64]>,
    pub random_forms: usize,
    pub seed: u64,
}

pub fn check(
    property: Property,
    num: &str,
    den: &str,
    nvars: Option<usize>,
    forms: &FormChoice,
) -> CmdResult {
    let m = module_from(num, den, nvars)?;
    let basis = GradedBasis::new(&m)?;
    let ell = match forms.linear_form {
        Some(c) => {
            if c.len() != m.nvars() {
                return Err(lefschetz::Error::LengthMismatch(c.len(), m.nvars()));
            }
            LinearForm::new(c.to_vec())?
        }
        None => LinearForm::all_ones(m.nvars()),
    };
    let main = basis.check(property, &ell)?;
    let mut rng = ChaCha8Rng::seed_from_u64(forms.seed);
    let mut extra = Vec::new();
    for _ in 0..forms.random_forms {
        let r = LinearForm::random(m.nvars(), &mut rng);
        extra.push(report_json(&basis.check(property, &r)?));
    }
    Ok(Outcome {
        inputs: json!({
            "num": num,
            "den": den,
            "module": m.to_string(),
            "property": property,
            "linear_form": ell.coefficients(),
            "random_forms": forms.random_forms,
            "seed": forms.seed,
        }),
        result: json!({
            "holds": main.holds,
            "series": series_json(basis.series()),
            "random_witnesses": extra,
        }),
        failures: failures_json(&main),
        ok: true,
    })
}

pub fn csm(ideal: &str, var: &str, criterion: bool) -> CmdResult {
    let v = variable_index(var)?;
    let n = variables_used(ideal)?.max(v + 1);
    let i = parse_ideal_in(ideal, n)?;
    let report = csm_decompose(&i, v)?;
    let entries: Vec<Value> = report
        .entries
        .iter()
        .map(|e| {
            json!({
                "f": e.f,
                "module": e.module.to_string(),
                "series": series_json(&e.hilbert),
                "tilde_series": series_json(&e.tilde_hilbert),
                "tilde_reflecting_degree": e.tilde_hilbert.is_symmetric().map(|r| r.to_string()),
            })
        })
        .collect();
    let mut result = json!({
        "nilpotency": report.nilpotency,
        "f_values": report.f_values(),
        "modules": entries,
    });
    if criterion {
        let c = csm_slp_evaluation(&i, v)?;
        let direct = GradedBasis::new(&QuotientModule::algebra(i.clone())?)?
            .check(Property::Strong, &LinearForm::all_ones(n))?;
        result["criterion"] = json!({
            "holds": c.holds(),
            "summand_slp": c.summand_slp,
            "all_symmetric": c.all_symmetric,
            "sum_slp": c.sum_slp,
            "algebra_slp": direct.holds,
        });
    }
    Ok(Outcome {
        inputs: json!({"ideal": i.to_string(), "variable": var}),
        result,
        failures: vec![],
        ok: true,
    })
}

pub fn lgv(a: &[i64], b: &[i64], oracle: bool) -> CmdResult {
    let (sa, sb) = (
        AscendingSequence::new(a.to_vec())?,
        AscendingSequence::new(b.to_vec())?,
    );
    let check = lgv_positivity(&sa, &sb)?;
    let matrix = lefschetz::lgv::binomial_matrix(&sa, &sb)?;
    let mut result = json!({
        "matrix": matrix_json(&matrix),
        "determinant": int(&check.determinant),
        "positivity": check.positivity,
        "consistent": check.consistent(),
    });
    let mut failures = Vec::new();
    if !check.consistent() {
        failures.push(json!({"check": "positivity", "detail": "diagonal test disagrees with determinant sign"}));
    }
    if oracle {
        let count = count_nonintersecting(&sa, &sb)?;
        result["count"] = int(&count);
        if count != check.determinant {
            failures.push(json!({"check": "oracle", "detail": format!("determinant {} but {count} families", check.determinant)}));
        }
    }
    Ok(Outcome {
        inputs: json!({"a": a, "b": b, "oracle": oracle}),
        result,
        ok: failures.is_empty(),
        failures,
    })
}

pub fn pipeline(num: &str, a: u32, b: u32, i: u32, d: u32) -> CmdResult {
    let ideal = parse_ideal_in(num, 2)?;
    let cl = cl_matrix(a, b, i, d)?;
    let restricted = restrict_rows(&cl, &ideal)?;
    let transformed = pascal_column_transform(&restricted.matrix);
    let cert = certify(&restricted)?;
    let mut failures = Vec::new();
    if !cert.sound() {
        failures.push(json!({"check": "certificate", "detail": format!("{cert:?}")}));
    }
    Ok(Outcome {
        inputs: json!({"num": ideal.to_string(), "a": a, "b": b, "i": i, "d": d}),
        result: json!({
            "cl_matrix": {
                "m1": cl.m1,
                "m2": cl.m2,
                "rows": labels(&cl.row_labels),
                "cols": labels(&cl.col_labels),
                "matrix": matrix_json(&cl.matrix),
            },
            "restricted": {
                "rows": labels(&restricted.row_labels),
                "offsets": restricted.offsets,
                "matrix": matrix_json(&restricted.matrix),
            },
            "transformed": matrix_json(&transformed),
            "certificate": cert,
            "maximal_rank": cert.maximal_rank(),
        }),
        ok: failures.is_empty(),
        failures,
    })
}

pub struct SweepRanges {
    pub max_a: u32,
    pub max_b: u32,
    pub max: Option<u32>,
    pub max_value: i64,
    pub max_len: usize,
    pub jobs: usize,
}

pub fn sweep(target: &str, r: &SweepRanges) -> CmdResult {
    let (summary, inputs): (SweepSummary, Value) = match target {
        "main-thm" => (
            sweep::main_theorem(r.max_a, r.max_b, r.jobs)?,
            json!({"max_a": r.max_a, "max_b": r.max_b}),
        ),
        "pipeline" => (
            sweep::pipeline(r.max_a, r.max_b, r.jobs)?,
            json!({"max_a": r.max_a, "max_b": r.max_b}),
        ),
        "lgv-oracle" => (
            sweep::lgv_oracle(r.max_value, r.max_len, r.jobs)?,
            json!({"max_value": r.max_value, "max_len": r.max_len}),
        ),
        "type2" => {
            let max = r.max.unwrap_or(5);
            (sweep::type2_soundness(max, r.jobs)?, json!({"max": max}))
        }
        "csm-forms" => {
            let max = r.max.unwrap_or(4);
            (sweep::csm_closed_forms(max, r.jobs)?, json!({"max": max}))
        }
        "tensor" => {
            let max = r.max.unwrap_or(5);
            (sweep::tensor_soundness(max, r.jobs)?, json!({"max": max}))
        }
        "lemmas" => {
            let max = r.max.unwrap_or(4);
            (sweep::tensor_lemmas(max, r.jobs)?, json!({"max": max}))
        }
        other => unreachable!("sweep target {other} rejected by the argument parser"),
    };
    let mut inputs = inputs;
    inputs["target"] = json!(target);
    inputs["jobs"] = json!(r.jobs);
    Ok(Outcome {
        inputs,
        result: json!({
            "name": summary.name,
            "instances": summary.instances,
            "checks": summary.checks,
            "violations": summary.violations.len(),
        }),
        failures: summary
            .violations
            .iter()
            .map(|v| serde_json::to_value(v).expect("violation is serializable"))
            .collect(),
        ok: summary.passed(),
    })
}

pub fn pure(exps: &[u32]) -> MonomialIdeal {
    MonomialIdeal::pure_powers(exps).expect("at most four variables")
}
