//! Command implementations behind the `leftsimple` binary. Every command
//! returns a [`Report`], serialised as JSON with a stable field order.
//!
//! Exit codes: 0 success, 1 validation or parse error, 2 precondition
//! violation, 3 failed check.

pub mod format;

use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

pub use format::SemigroupFile;

use crate::certify::{certify, CertifyOptions, CertifyReport};
use crate::congruence::{principal_congruence, quotient};
use crate::elemset::ElemSet;
use crate::error::Error;
use crate::factory::{self, describe};
use crate::group;
use crate::semigroup::Semigroup;
use crate::series::{
    factors, find_composition_series, jordan_holder_check, schreier_refine, validate_series, NormalSeries,
};
use crate::subset::{enumerate_ru_subsemigroups, subset_report, Pair};

/// Environment variable overriding the order bound.
pub const ORDER_BOUND_ENV: &str = "LEFTSIMPLE_MAX_ORDER";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("unknown subset {0:?}")]
    UnknownSubset(String),
    #[error("{0}")]
    Invalid(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{failed} check(s) failed")]
    ChecksFailed { failed: usize },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::PreconditionViolated(_)) => 2,
            CliError::Core(Error::TheoremCheckFailed { .. }) | CliError::ChecksFailed { .. } => 3,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportCheck {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub results: Value,
    pub checks: Vec<ReportCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl Report {
    fn new(command: impl Into<String>, results: Value) -> Self {
        Report { command: command.into(), results, checks: Vec::new(), elapsed_ms: None }
    }

    fn check(mut self, name: &str, passed: bool, witness: Option<String>) -> Self {
        self.checks.push(ReportCheck { name: name.to_string(), passed, witness });
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Pretty JSON; `golden` drops timing so output is byte-stable.
    pub fn render(&self, golden: bool) -> String {
        let mut r = self.clone();
        if golden {
            r.elapsed_ms = None;
        }
        serde_json::to_string_pretty(&r).expect("serializable") + "\n"
    }

    fn timed(mut self, start: Instant) -> Self {
        self.elapsed_ms = Some(start.elapsed().as_millis());
        self
    }
}

fn labels(s: &Semigroup, set: &ElemSet) -> Vec<String> {
    set.iter().map(|x| s.label(x)).collect()
}

fn pair(s: &Semigroup, p: Option<Pair>) -> Value {
    match p {
        Some((a, b)) => json!([s.label(a), s.label(b)]),
        None => Value::Null,
    }
}

fn table_labels(s: &Semigroup) -> Vec<Vec<String>> {
    (0..s.order()).map(|a| s.row(a).iter().map(|&b| s.label(b)).collect()).collect()
}

pub fn cmd_check(file: &SemigroupFile) -> Result<Report, CliError> {
    let start = Instant::now();
    let s = file.semigroup()?;
    let idem = s.idempotents();
    let results = json!({
        "order": s.order(),
        "associative": true,
        "left_simple": s.is_left_simple(),
        "is_group": group::is_group(&s),
        "idempotents": labels(&s, &idem),
        "idempotent_count": idem.len(),
        "structure": describe(&s),
    });
    Ok(Report::new("check", results).timed(start))
}

pub fn cmd_subset(file: &SemigroupFile, name: &str) -> Result<Report, CliError> {
    let start = Instant::now();
    let s = file.semigroup()?;
    let h = file.subset(name)?;
    let r = subset_report(&s, &h)?;
    let mut results = json!({
        "subset": name,
        "members": labels(&s, &h),
        "is_subsemigroup": r.is_subsemigroup,
        "is_reflexive": r.is_reflexive,
        "is_left_unitary": r.is_left_unitary,
        "is_right_unitary": r.is_right_unitary,
        "is_unitary": r.is_unitary,
        "witnesses": {
            "subsemigroup": pair(&s, r.witnesses.subsemigroup),
            "reflexive": pair(&s, r.witnesses.reflexive),
            "left_unitary": pair(&s, r.witnesses.left_unitary),
            "right_unitary": pair(&s, r.witnesses.right_unitary),
        },
    });
    if r.is_reflexive_unitary_subsemigroup() {
        let pc = principal_congruence(&s, &h)?;
        let q = quotient(&s, &pc.congruence)?;
        let is_group = pc.h_class.is_some_and(|c| crate::congruence::is_group_with_identity(&q, c));
        results["quotient"] = json!({
            "order": q.order(),
            "structure": describe(&q.quotient),
            "is_group_with_identity_h": is_group,
            "classes": q.classes.iter().map(|c| labels(&s, c)).collect::<Vec<_>>(),
            "table": table_labels(&q.quotient),
        });
    }
    Ok(Report::new(format!("subset {name}"), results).timed(start))
}

fn resolve_chain(file: &SemigroupFile, s: &Semigroup, names: &[String]) -> Result<Vec<ElemSet>, CliError> {
    let mut chain = vec![s.full_set()];
    for n in names {
        chain.push(file.subset(n)?);
    }
    Ok(chain)
}

fn series_json(ns: &NormalSeries) -> Result<Value, CliError> {
    let s = ns.parent();
    let f = factors(ns)?;
    Ok(json!({
        "length": ns.length(),
        "terms": ns.chain().iter().map(|t| labels(s, t)).collect::<Vec<_>>(),
        "factors": f.names(),
    }))
}

/// Splits a comma-separated list of subset names; empty means `[S]`.
pub fn split_names(list: &str) -> Vec<String> {
    list.split(',').map(str::trim).filter(|t| !t.is_empty()).map(String::from).collect()
}

pub fn cmd_series_validate(file: &SemigroupFile, names: &[String]) -> Result<Report, CliError> {
    let start = Instant::now();
    let s = file.semigroup()?;
    let ns = validate_series(&s, resolve_chain(file, &s, names)?)?;
    let results = json!({ "subsets": names, "series": series_json(&ns)? });
    Ok(Report::new("series validate", results).check("normal-series", true, None).timed(start))
}

pub fn cmd_series_refine(file: &SemigroupFile, first: &[String], second: &[String]) -> Result<Report, CliError> {
    let start = Instant::now();
    let s = file.semigroup()?;
    let a = validate_series(&s, resolve_chain(file, &s, first)?)?;
    let b = validate_series(&s, resolve_chain(file, &s, second)?)?;
    let r = schreier_refine(&a, &b)?;
    let results = json!({
        "first": series_json(&a)?,
        "second": series_json(&b)?,
        "first_refinement": series_json(&r.first)?,
        "second_refinement": series_json(&r.second)?,
        "permutation": r.iso.permutation.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "isomorphic": true,
    });
    Ok(Report::new("series refine", results)
        .check("refinements-valid", true, None)
        .check("refinements-isomorphic", true, None)
        .timed(start))
}

pub fn cmd_series_compose(file: &SemigroupFile) -> Result<Report, CliError> {
    let start = Instant::now();
    let s = file.semigroup()?;
    let all = find_composition_series(&s, true)?;
    let series = all.iter().map(series_json).collect::<Result<Vec<_>, _>>()?;
    let results = json!({ "count": all.len(), "series": series });
    Ok(Report::new("series compose", results).timed(start))
}

pub fn cmd_series_jordan_holder(file: &SemigroupFile) -> Result<Report, CliError> {
    let start = Instant::now();
    let s = file.semigroup()?;
    let jh = jordan_holder_check(&s)?;
    let results = json!({
        "series_count": jh.series.len(),
        "length": jh.length,
        "factors": jh.factor_multiset,
        "pairs_checked": jh.pairs_checked,
        "pairwise_isomorphic": true,
    });
    Ok(Report::new("series jordan-holder", results).check("jordan-holder", true, None).timed(start))
}

pub fn cmd_enumerate(file: &SemigroupFile) -> Result<Report, CliError> {
    let start = Instant::now();
    let s = file.semigroup()?;
    let ru = enumerate_ru_subsemigroups(&s)?;
    let results = json!({
        "count": ru.len(),
        "reflexive_unitary_subsemigroups": ru.iter().map(|x| labels(&s, x)).collect::<Vec<_>>(),
    });
    Ok(Report::new("enumerate", results).timed(start))
}

/// `left-group <m> <group>` or `double <instance>`; with `with_ru` the
/// reflexive unitary subsemigroups are added as subsets `R1, R2, …`.
pub fn cmd_generate(kind: &str, params: &[String], with_ru: bool) -> Result<SemigroupFile, CliError> {
    let s = match (kind, params) {
        ("left-group", [m, g]) => {
            let m: usize = m.parse().map_err(|_| CliError::InvalidParams(format!("bad size {m:?}")))?;
            let g = factory::catalog_group(g).ok_or_else(|| CliError::InvalidParams(format!("unknown group {g:?}")))?;
            factory::left_group(m, &g).map_err(|e| CliError::InvalidParams(e.to_string()))?
        }
        ("double", [name]) => {
            let base = factory::by_name(name).map_err(|e| CliError::InvalidParams(e.to_string()))?;
            factory::double(&base)?
        }
        ("left-group", _) => return Err(CliError::InvalidParams("usage: left-group <m> <group>".into())),
        ("double", _) => return Err(CliError::InvalidParams("usage: double <instance>".into())),
        _ => return Err(CliError::InvalidParams(format!("unknown kind {kind:?}"))),
    };
    let mut file = SemigroupFile::from_semigroup(&s);
    if with_ru {
        for (i, x) in enumerate_ru_subsemigroups(&s)?.iter().enumerate() {
            file.add_subset(&format!("R{}", i + 1), &s, x);
        }
    }
    Ok(file)
}

pub fn certify_json(report: &CertifyReport, opts: &CertifyOptions) -> Value {
    let failures = report.failures().count();
    json!({
        "corpus": {
            "max_order": opts.corpus.max_order,
            "left_zero_sizes": opts.corpus.left_zero_sizes,
            "groups": opts.corpus.group_catalog,
            "include_doubles": opts.corpus.include_doubles,
        },
        "members": report.members,
        "summary": {
            "members": report.members.len(),
            "checks": report.members.iter().map(|m| m.checks.len()).sum::<usize>(),
            "failures": failures,
            "passed": failures == 0,
        },
    })
}

pub fn cmd_certify(opts: &CertifyOptions) -> Result<Report, CliError> {
    let start = Instant::now();
    let bound = crate::order_bound();
    if opts.corpus.max_order > bound {
        return Err(Error::OrderBoundExceeded { order: opts.corpus.max_order, bound }.into());
    }
    let report = certify(opts)?;
    let mut r = Report::new("certify", certify_json(&report, opts));
    for (m, c) in report.failures() {
        let name = format!("{}:{}", m.name, c.check);
        r = r.check(&name, false, c.failure.clone());
    }
    if report.all_passed() {
        r = r.check("all", true, None);
    }
    Ok(r.timed(start))
}
