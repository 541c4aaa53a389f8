//! The subcommands: info, type, nakayama, construct, and fg.

use std::path::Path;

use serde_json::json;

use qalg_core::constructions::{
    beilinson, double_construction_checked, skew_group_algebra, smash_z2,
    trivial_extension, twisted_trivial_extension, veronese_smash_iso,
};
use qalg_core::cycles::{outer_order, OuterOrder};
use qalg_core::frobenius::{
    find_frobenius_form, is_inner, nakayama_from_form, FrobeniusOutcome, InnerResult,
};
use qalg_core::group::GroupAction;
use qalg_core::idempotents::{basic_idempotent, truncate_by_orthogonal_idempotents};
use qalg_core::radical;
use qalg_core::{fg, Algebra, AlgebraMorphism};

use crate::autospec::{build_morphism, parse_spec};
use crate::format::{load_file, AlgebraFile};
use crate::report::{ReasonJson, Report};
use crate::{CliError, RunOptions};

fn load(path: &Path) -> Result<(Algebra, Vec<u8>), CliError> {
    let (file, bytes) = load_file(path)?;
    Ok((file.to_algebra()?, bytes))
}

pub fn cmd_info(path: &Path, opts: RunOptions) -> Result<Report, CliError> {
    let (algebra, bytes) = load(path)?;
    let layers = radical::radical_layers(&algebra).map_err(CliError::compute)?;
    let socle = radical::socle(&algebra).map_err(CliError::compute)?;
    let frobenius = find_frobenius_form(&algebra, opts.search());
    let mut report = Report::new("info", opts.seed).with_input(path, &bytes);
    if !socle.left_equals_right {
        report
            .warnings
            .push("left and right socles differ".into());
    }
    let (frob, exhaustive) = match &frobenius {
        FrobeniusOutcome::Found(_) => (true, true),
        FrobeniusOutcome::NotFrobenius { exhaustive, .. } => (false, *exhaustive),
    };
    report.results = json!({
        "dimension": algebra.dim(),
        "field": algebra.field().to_string(),
        "radical_layer_dims": layers.iter().map(|l| l.dim()).collect::<Vec<_>>(),
        "socle_dim": socle.span.dim(),
        "connected": radical::is_connected(&algebra),
        "frobenius": frob,
        "frobenius_decision_exact": exhaustive,
        "graded": algebra.grading().is_some(),
    });
    Ok(report)
}

pub fn cmd_type(path: &Path, opts: RunOptions) -> Result<Report, CliError> {
    let (algebra, bytes) = load(path)?;
    let t = fg::algebra_type(&algebra, opts.fg()).map_err(CliError::compute)?;
    let mut report = Report::new("type", opts.seed).with_input(path, &bytes);
    report.results = json!({
        "label": t.label.to_string(),
        "components": t.recognition.components.iter().map(|c| json!({
            "label": c.label.to_string(),
            "vertices": c.vertices,
            "certificate": {
                "positive": c.certificate.positive,
                "negative": c.certificate.negative,
                "zero": c.certificate.zero,
                "pivots": c.certificate.pivots,
                "kernel_vector": c.certificate.kernel_vector,
            },
        })).collect::<Vec<_>>(),
        "separated_quiver": {
            "vertices": t.separated.vertices,
            "arrows": t.separated.arrows.iter().map(|a| json!({
                "name": a.name, "source": a.source, "target": a.target,
            })).collect::<Vec<_>>(),
        },
    });
    Ok(report)
}

pub fn cmd_nakayama(path: &Path, opts: RunOptions) -> Result<Report, CliError> {
    let (algebra, bytes) = load(path)?;
    let mut report = Report::new("nakayama", opts.seed).with_input(path, &bytes);
    let form = match find_frobenius_form(&algebra, opts.search()) {
        FrobeniusOutcome::Found(f) => f,
        FrobeniusOutcome::NotFrobenius { exhaustive, .. } => {
            return Err(CliError::Precondition(if exhaustive {
                "algebra is not Frobenius (exhaustive form search)".into()
            } else {
                "no nondegenerate associative form found".into()
            }));
        }
    };
    let nu = nakayama_from_form(&algebra, &form).map_err(CliError::compute)?;
    // the gram relation was verified on all pairs during construction
    let pairs_checked = algebra.dim() * algebra.dim();
    let images: Vec<serde_json::Value> = (0..algebra.dim())
        .map(|i| {
            json!({
                "basis": algebra.label(i).to_string(),
                "image": algebra.format_element(&nu.apply(&algebra.basis_element(i))),
            })
        })
        .collect();
    let order = nu.order(&algebra, opts.bound as usize);
    let outer = outer_order(&algebra, &nu, opts.bound, opts.search()).map_err(CliError::compute)?;
    let inner = is_inner(&algebra, &nu, opts.search()).map_err(CliError::compute)?;
    let vertex_perm = qalg_core::idempotents::vertex_permutation(&algebra, &nu)
        .map_err(CliError::compute)?;
    let weakly_symmetric = vertex_perm.iter().enumerate().all(|(i, &p)| i == p);
    report.results = json!({
        "form_source": if form.functional.is_some() { "functional" } else { "matrix" },
        "nakayama": images,
        "gram_pairs_checked": pairs_checked,
        "gram_relation_verified": true,
        "automorphism_order": match order {
            Some(n) => json!(n),
            None => json!("exceeds bound"),
        },
        "outer_order": match outer {
            OuterOrder::Finite(n) => json!(n),
            OuterOrder::Infinite => json!("infinite"),
            OuterOrder::ExceedsBound => json!("exceeds bound"),
            OuterOrder::Undecided => json!("undecided"),
        },
        "vertex_permutation": vertex_perm,
        "weakly_symmetric": weakly_symmetric,
        "symmetric": inner.is_witness(),
        "inner_witness": match &inner {
            InnerResult::Witness(u) => json!(algebra.format_element(u)),
            _ => serde_json::Value::Null,
        },
    });
    Ok(report)
}

pub struct ConstructArgs {
    pub sigma: Option<String>,
    pub generator: Option<String>,
    pub order: Option<usize>,
}

pub fn cmd_construct(
    kind: &str,
    path: &Path,
    args: &ConstructArgs,
    opts: RunOptions,
) -> Result<(AlgebraFile, Report), CliError> {
    let (algebra, bytes) = load(path)?;
    let constructed: Algebra = match kind {
        "skew" => {
            let action = group_from_args(&algebra, args, opts)?;
            skew_group_algebra(&algebra, &action).map_err(CliError::compute)?
        }
        "smash2" => smash_z2(&algebra).map_err(CliError::compute)?.0,
        "veronese2" => {
            // build through the verified label bijection with the smash side
            let iso = veronese_smash_iso(&algebra).map_err(CliError::compute)?;
            iso.veronese
        }
        "trivext" => trivial_extension(&algebra).map_err(CliError::compute)?.algebra,
        "twisted-trivext" => {
            let text = args.sigma.as_ref().ok_or_else(|| {
                CliError::Parse("twisted-trivext needs --sigma".into())
            })?;
            let spec = parse_spec(text)?;
            let sigma = build_morphism(&algebra, &spec)?;
            twisted_trivial_extension(&algebra, &sigma)
                .map_err(CliError::compute)?
                .algebra
        }
        "beilinson" => beilinson(&algebra).map_err(CliError::compute)?,
        "basic" => {
            let bi = basic_idempotent(&algebra, opts.seed).map_err(CliError::compute)?;
            truncate_by_orthogonal_idempotents(&algebra, &bi.parts).map_err(CliError::compute)?
        }
        "double" => {
            double_construction_checked(&algebra, opts.seed)
                .map_err(CliError::compute)?
                .double
        }
        other => {
            return Err(CliError::Parse(format!(
                "unknown construction `{other}`; expected skew|smash2|veronese2|trivext|twisted-trivext|beilinson|basic|double"
            )))
        }
    };
    let violations = constructed.check();
    if !violations.is_empty() {
        return Err(CliError::Internal(format!(
            "constructed algebra violates the axioms: {}",
            violations[0]
        )));
    }
    let out = AlgebraFile::from_algebra(&constructed);
    let mut report = Report::new("construct", opts.seed).with_input(path, &bytes);
    report.results = json!({
        "kind": kind,
        "input_dimension": algebra.dim(),
        "output_dimension": constructed.dim(),
        "axioms_checked": true,
    });
    Ok((out, report))
}

fn group_from_args(
    algebra: &Algebra,
    args: &ConstructArgs,
    opts: RunOptions,
) -> Result<GroupAction, CliError> {
    let text = args
        .generator
        .as_ref()
        .ok_or_else(|| CliError::Parse("skew needs --generator".into()))?;
    let generator: AlgebraMorphism = if text == "nakayama" {
        let form = match find_frobenius_form(algebra, opts.search()) {
            FrobeniusOutcome::Found(f) => f,
            FrobeniusOutcome::NotFrobenius { .. } => {
                return Err(CliError::Precondition(
                    "nakayama generator requires a Frobenius algebra".into(),
                ))
            }
        };
        nakayama_from_form(algebra, &form).map_err(CliError::compute)?
    } else {
        let spec = parse_spec(text)?;
        build_morphism(algebra, &spec)?
    };
    let order = match args.order {
        Some(n) => n,
        None => generator
            .order(algebra, opts.bound as usize)
            .ok_or_else(|| CliError::Precondition("generator order exceeds the bound".into()))?,
    };
    GroupAction::cyclic(algebra, &generator, order).map_err(CliError::compute)
}

pub fn cmd_fg(path: &Path, opts: RunOptions) -> Result<Report, CliError> {
    let (algebra, bytes) = load(path)?;
    let verdict = fg::decide_fg(&algebra, opts.fg()).map_err(CliError::compute)?;
    let mut report = Report::new("fg", opts.seed).with_input(path, &bytes);
    report.results = verdict_json(&verdict);
    report.reasons = verdict
        .reasons
        .iter()
        .map(|r| ReasonJson {
            check: r.check.clone(),
            rule: r.rule.clone(),
            outcome: r.outcome.clone(),
        })
        .collect();
    Ok(report)
}

fn verdict_json(v: &qalg_core::FgVerdict) -> serde_json::Value {
    json!({
        "answer": v.answer.to_string(),
        "hypothesis_failures": v.hypothesis_failures,
        "reasons": v.reasons.iter().map(|r| json!({
            "check": r.check, "rule": r.rule, "outcome": r.outcome,
        })).collect::<Vec<_>>(),
        "blocks": v.blocks.iter().map(verdict_json).collect::<Vec<_>>(),
    })
}

/// Classify every `.json` file in a directory, in name order.
pub fn cmd_fg_batch(dir: &Path, opts: RunOptions) -> Result<Vec<(String, Report)>, CliError> {
    let mut entries: Vec<std::path::PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    entries.sort();
    let mut out = vec![];
    for path in entries {
        let report = cmd_fg(&path, opts)?;
        out.push((path.display().to_string(), report));
    }
    Ok(out)
}
