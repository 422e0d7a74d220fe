//! Subcommand implementations.
//!
//! Every command returns a `Report` (exit 0 when the property holds or a
//! witness is produced, exit 1 for a failing property or a refutation
//! certificate) or a `CommandError` for malformed input (exit 2). Witnesses
//! are re-verified before a command reports success; that happens inside the
//! library calls.

use std::fmt;

use orderlab::{
    birkhoff_embedding, embed_quotient_upsets, enumerate_closure_operators,
    interval_isomorphism, quotient_by_closure, quotient_completeness_cross_checked,
    represent_family, restrict_cuts, validate_closure, AxiomReport, ClosureOperator,
    ClosureRouteOutcome, ClosureValidation, CompletenessCertificate, FiniteLattice, FuzzyMap,
    IntervalCounterexample, IntervalOutcome, OrderError, Poset, QuotientError, RealizableMode,
    Representation, SetFamily,
};

use crate::dot::emit_dot;
use crate::load::{
    load_family, load_map, load_poset, load_scale, witness_document, LoadError, Source,
};
use crate::report::{Assertion, Outcome, Report};

#[derive(Debug)]
pub enum CommandError {
    Load(LoadError),
    Input(String),
}

impl fmt::Display for CommandError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CommandError::Load(e) => write!(f, "{e}"),
            CommandError::Input(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<LoadError> for CommandError {
    fn from(e: LoadError) -> Self {
        CommandError::Load(e)
    }
}

fn input(msg: impl Into<String>) -> CommandError {
    CommandError::Input(msg.into())
}

/// Loads a closure operator written as a self-map document.
fn load_closure(
    source: &Source,
    path: &str,
    space_override: Option<&str>,
) -> Result<(Poset, ClosureOperator), CommandError> {
    let loaded = load_map(source, path, space_override, None)?;
    if loaded.scale_ref.is_some() {
        return Err(input(format!(
            "{path}: a closure document must be a self-map (no `scale` reference)"
        )));
    }
    let space = loaded.space;
    match validate_closure(&space, &loaded.entries).map_err(|e| input(e.to_string()))? {
        ClosureValidation::Valid(op) => Ok((space, op)),
        ClosureValidation::Violation(report) => {
            let (_, msg) = report.first_violation().expect("violation reported");
            Err(input(format!("{path}: not a closure operator: {msg}")))
        }
    }
}

fn load_value_map(
    source: &Source,
    path: &str,
    space_override: Option<&str>,
    scale_override: Option<&str>,
) -> Result<(FuzzyMap, String, String), CommandError> {
    let loaded = load_map(source, path, space_override, scale_override)?;
    let space_ref = loaded.space_ref.clone();
    let scale_ref = loaded
        .scale_ref
        .clone()
        .ok_or_else(|| input(format!("{path}: map document has no `scale` reference")))?;
    let map = loaded.into_fuzzy_map(path)?;
    Ok((map, space_ref, scale_ref))
}

fn axiom_lines(report: &AxiomReport, lines: &mut Vec<String>) {
    lines.push(format!(
        "axiom (a) inflationary: {}",
        match &report.inflationary {
            None => "pass".to_owned(),
            Some(p) => format!("FAIL at {p}"),
        }
    ));
    lines.push(format!(
        "axiom (b) monotone: {}",
        match &report.monotone {
            None => "pass".to_owned(),
            Some((p, q)) => format!("FAIL at {p} <= {q}"),
        }
    ));
    lines.push(format!(
        "axiom (c) idempotent: {}",
        match &report.idempotent {
            None => "pass".to_owned(),
            Some(p) => format!("FAIL at {p}"),
        }
    ));
}

fn closure_line(op: &ClosureOperator) -> String {
    op.entries()
        .iter()
        .map(|(a, b)| format!("{a}->{b}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn cmd_validate(
    source: &Source,
    space: Option<&str>,
    scale: Option<&str>,
    family: Option<&str>,
    map: Option<&str>,
    closure: Option<&str>,
) -> Result<Report, CommandError> {
    let mut report = Report::new("validate", Outcome::Holds, "all inputs are well-formed");
    let mut space_poset = None;
    if let Some(path) = space {
        let p = load_poset(source, None, path)?;
        report.line(format!("poset {path}: {} elements", p.len()));
        space_poset = Some(p);
    }
    if let Some(path) = scale {
        let l = load_scale(source, None, path)?;
        report.line(format!(
            "lattice {path}: {} elements, bottom {}, top {}",
            l.len(),
            l.bottom(),
            l.top()
        ));
    }
    if let Some(path) = family {
        let f = load_family(source, None, path, space_poset.as_ref())?;
        report.line(format!("family {path}: {} members", f.len()));
    }
    if let Some(path) = map {
        let (m, _, _) = load_value_map(source, path, space, scale)?;
        report.line(format!(
            "map {path}: total on {} points",
            m.space().len()
        ));
    }
    if let Some(path) = closure {
        let loaded = load_map(source, path, space, None)?;
        if loaded.scale_ref.is_some() {
            return Err(input(format!(
                "{path}: a closure document must be a self-map (no `scale` reference)"
            )));
        }
        let carrier = loaded.space;
        match validate_closure(&carrier, &loaded.entries).map_err(|e| input(e.to_string()))? {
            ClosureValidation::Valid(op) => {
                report.line(format!("closure {path}: valid; {}", closure_line(&op)));
            }
            ClosureValidation::Violation(axioms) => {
                report.outcome = Outcome::Fails;
                report.summary = "closure axioms violated".into();
                axiom_lines(&axioms, &mut report.lines);
            }
        }
    }
    Ok(report)
}

pub fn cmd_upsets(
    source: &Source,
    space: &str,
    cap: Option<usize>,
) -> Result<Report, CommandError> {
    let p = load_poset(source, None, space)?;
    match p.up_set_family(cap) {
        Ok(family) => {
            let mut report = Report::new(
                "upsets",
                Outcome::Holds,
                format!("{} up-sets", family.len()),
            );
            for name in family.member_names() {
                report.line(name);
            }
            Ok(report)
        }
        Err(OrderError::CapExceeded { cap, lower_bound }) => {
            let mut report = Report::new("upsets", Outcome::Fails, "enumeration cap exceeded");
            report.line(format!("cap: {cap}"));
            report.line(format!("at least {lower_bound} up-sets exist"));
            Ok(report)
        }
        Err(e) => Err(input(e.to_string())),
    }
}

pub fn cmd_cuts(
    source: &Source,
    map: &str,
    space: Option<&str>,
    scale: Option<&str>,
    oracle: bool,
) -> Result<Report, CommandError> {
    let (m, _, _) = load_value_map(source, map, space, scale)?;
    let cuts = m.cut_family();
    let mut report = Report::new(
        "cuts",
        Outcome::Holds,
        format!("{} distinct cuts", cuts.family.len()),
    );
    for (k, name) in cuts.family.member_names().iter().enumerate() {
        report.line(format!(
            "{name} (class top {})",
            cuts.class_top_of(k)
        ));
    }
    for (p, element) in m.scale().order().elements().iter().enumerate() {
        report.line(format!(
            "cut at {element}: {}",
            cuts.family.member_name(cuts.cut_index_of(p))
        ));
    }
    if oracle {
        let check = m.up_set_check();
        report.assertions.push(Assertion {
            name: "monotone-iff-cuts-are-up-sets".into(),
            provenance: "derived".into(),
            passed: check.agree(),
            detail: format!(
                "monotone: {}; every cut an up-set: {}",
                check.monotone, check.cuts_are_up_sets
            ),
        });
        if !check.agree() {
            report.outcome = Outcome::Fails;
            report.summary = "two-route up-set test disagreed (internal error)".into();
        }
    }
    Ok(report)
}

/// Brute-force check over every monotone map: does any have this cut family?
fn oracle_has_family(space: &Poset, scale: &FiniteLattice, family: &SetFamily) -> Option<bool> {
    let bound = (scale.len() as u128).saturating_pow(space.len() as u32);
    if bound > 1_000_000 {
        return None;
    }
    let key = family.canonical_key();
    for assign in orderlab::enumerate::monotone_assignments(space, scale) {
        let entries: Vec<(String, String)> = space
            .elements()
            .iter()
            .enumerate()
            .map(|(i, x)| (x.clone(), scale.order().element(assign[i]).to_owned()))
            .collect();
        let m = FuzzyMap::new(space.clone(), scale.clone(), &entries).expect("total assignment");
        if m.cut_family().family.canonical_key() == key {
            return Some(true);
        }
    }
    Some(false)
}

fn push_oracle_assertion(
    report: &mut Report,
    space: &Poset,
    scale: &FiniteLattice,
    family: &SetFamily,
    witnessed: bool,
) {
    match oracle_has_family(space, scale, family) {
        Some(found) => report.assertions.push(Assertion {
            name: "monotone-map-sweep".into(),
            provenance: "derived".into(),
            passed: found == witnessed,
            detail: format!("sweep found a realizing map: {found}; decision said: {witnessed}"),
        }),
        None => report.assertions.push(Assertion {
            name: "monotone-map-sweep".into(),
            provenance: "derived".into(),
            passed: true,
            detail: "skipped: map count above the sweep cap".into(),
        }),
    }
}

pub fn cmd_representable(
    source: &Source,
    family: &str,
    space: &str,
    scale: &str,
    witness_out: Option<&str>,
    oracle: bool,
) -> Result<Report, CommandError> {
    let space_poset = load_poset(source, None, space)?;
    let scale_lattice = load_scale(source, None, scale)?;
    let family_val = load_family(source, None, family, Some(&space_poset))?;
    let outcome = represent_family(&family_val, &space_poset, &scale_lattice)
        .map_err(|e| input(e.to_string()))?;
    let mut report = match &outcome {
        Representation::Witness(m) => {
            let mut report = Report::new(
                "representable",
                Outcome::Holds,
                "witness produced and re-verified",
            );
            for (x, v) in m.entries() {
                report.line(format!("{x} -> {v}"));
            }
            let doc = witness_document(m, space, scale);
            if let Some(path) = witness_out {
                std::fs::write(path, &doc)
                    .map_err(|e| input(format!("{path}: {e}")))?;
            }
            report.witness = Some(doc);
            report
        }
        Representation::Refutation(r) => {
            let mut report = Report::new("representable", Outcome::Fails, "refuted");
            report.line(r.to_string());
            report
        }
    };
    if oracle {
        push_oracle_assertion(
            &mut report,
            &space_poset,
            &scale_lattice,
            &family_val,
            outcome.witness().is_some(),
        );
        if report.assertions.iter().any(|a| !a.passed) {
            report.outcome = Outcome::Fails;
            report.summary = "oracle disagreed with the decision".into();
        }
    }
    Ok(report)
}

pub fn cmd_restrict(
    source: &Source,
    map: &str,
    family: &str,
    space: Option<&str>,
    scale: Option<&str>,
    witness_out: Option<&str>,
    oracle: bool,
) -> Result<Report, CommandError> {
    let (m, space_ref, scale_ref) = load_value_map(source, map, space, scale)?;
    let subfamily = load_family(source, None, family, Some(m.space()))?;
    let restriction = restrict_cuts(&m, &subfamily).map_err(|e| input(e.to_string()))?;
    let mut report = match &restriction.representation {
        Representation::Witness(w) => {
            let mut report = Report::new(
                "restrict",
                Outcome::Holds,
                "witness produced and re-verified",
            );
            for (x, v) in w.entries() {
                report.line(format!("{x} -> {v}"));
            }
            let doc = witness_document(w, &space_ref, &scale_ref);
            if let Some(path) = witness_out {
                std::fs::write(path, &doc)
                    .map_err(|e| input(format!("{path}: {e}")))?;
            }
            report.witness = Some(doc);
            report
        }
        Representation::Refutation(r) => {
            let mut report = Report::new(
                "restrict",
                Outcome::Fails,
                "refutation certificate (counterexample to the restriction theorem)",
            );
            report.line(r.to_string());
            report
        }
    };
    report.line("explicit-construction diagnostic:");
    for (from, to) in restriction.diagnostic.map() {
        report.line(format!("  {from} -> {to}"));
    }
    axiom_lines(restriction.diagnostic.axioms(), &mut report.lines);
    if oracle {
        push_oracle_assertion(
            &mut report,
            m.space(),
            m.scale(),
            &subfamily,
            restriction.representation.witness().is_some(),
        );
        if report.assertions.iter().any(|a| !a.passed) {
            report.outcome = Outcome::Fails;
            report.summary = "oracle disagreed with the decision".into();
        }
    }
    Ok(report)
}

pub fn cmd_quotient_complete(
    source: &Source,
    space: &str,
    scale: &str,
    oracle: bool,
) -> Result<Report, CommandError> {
    let space_poset = load_poset(source, None, space)?;
    let scale_lattice = load_scale(source, None, scale)?;
    let (decision, direct) = if oracle {
        let mode = if (scale_lattice.len() as u128)
            .saturating_pow(space_poset.len() as u32)
            <= 1_000_000
        {
            RealizableMode::Oracle
        } else {
            RealizableMode::Characterization
        };
        let (d, direct) =
            quotient_completeness_cross_checked(&space_poset, &scale_lattice, mode)
                .map_err(quotient_input)?;
        (d, Some(direct))
    } else {
        (
            orderlab::quotient_completeness(&space_poset, &scale_lattice)
                .map_err(quotient_input)?,
            None,
        )
    };
    let mut report = Report::new(
        "quotient-complete",
        if decision.holds {
            Outcome::Holds
        } else {
            Outcome::Fails
        },
        if decision.holds {
            "the class order is a complete lattice"
        } else {
            "the class order is not a complete lattice"
        },
    );
    match &decision.certificate {
        CompletenessCertificate::TrivialScale => {
            report.line("certificate: one-point scale");
        }
        CompletenessCertificate::Closure(c) => {
            report.line(format!("certificate closure: {}", closure_line(c)));
        }
        CompletenessCertificate::Exhausted { candidates } => {
            report.line(format!(
                "certificate: all {candidates} Moore-family candidates exhausted"
            ));
        }
    }
    if let Some(direct) = direct {
        report.assertions.push(Assertion {
            name: "direct-completeness-check".into(),
            provenance: "derived".into(),
            passed: direct == decision.holds,
            detail: format!("direct check on the enumerated class order: {direct}"),
        });
        if direct != decision.holds {
            report.outcome = Outcome::Fails;
            report.summary = "decision and direct check disagreed (internal error)".into();
        }
    }
    Ok(report)
}

fn quotient_input(e: QuotientError) -> CommandError {
    input(e.to_string())
}

pub fn cmd_embed(
    source: &Source,
    space: &str,
    closure: &str,
) -> Result<Report, CommandError> {
    let space_poset = load_poset(source, None, space)?;
    let (carrier, op) = load_closure(source, closure, Some(space))?;
    debug_assert_eq!(&carrier, &space_poset);
    let emb = embed_quotient_upsets(&space_poset, &op).map_err(quotient_input)?;
    let mut report = Report::new(
        "embed",
        if emb.all_preserved() {
            Outcome::Holds
        } else {
            Outcome::Fails
        },
        format!(
            "{} quotient up-sets embedded into {} space up-sets",
            emb.source.len(),
            space_poset.up_set_family(None).map(|f| f.len()).unwrap_or(0)
        ),
    );
    for (t, s) in &emb.map {
        report.line(format!("{t} -> {s}"));
    }
    let checks: [(&str, bool); 7] = [
        ("injective", emb.injective),
        ("order-embedding-both-ways", emb.order_embedding),
        ("images-are-up-sets", emb.images_are_up_sets),
        ("arbitrary-unions-closed", emb.unions_closed),
        ("arbitrary-intersections-closed", emb.intersections_closed),
        ("empty-to-empty", emb.empty_to_empty),
        ("full-to-full", emb.full_to_full),
    ];
    for (name, passed) in checks {
        report.assertions.push(Assertion {
            name: name.into(),
            provenance: "derived".into(),
            passed,
            detail: String::new(),
        });
    }
    Ok(report)
}

pub fn cmd_birkhoff(
    source: &Source,
    scale: &str,
    target: &str,
) -> Result<Report, CommandError> {
    let host = load_scale(source, None, scale)?;
    let guest = load_scale(source, None, target)?;
    let driver = birkhoff_embedding(&host, &guest).map_err(quotient_input)?;
    let mut report = match &driver.closure_route {
        ClosureRouteOutcome::Found {
            closure,
            embedding,
            ..
        } => {
            let mut report = Report::new(
                "birkhoff",
                Outcome::Holds,
                "closure route found; embedding verified",
            );
            report.line(format!("closure on the irreducibles: {}", closure_line(closure)));
            for (b, a) in embedding.pairs() {
                report.line(format!("embed {b} -> {a}"));
            }
            let p = embedding.preserves();
            report.line(format!(
                "preserves: order {} meets {} joins {} bounds {}",
                p.order, p.meets, p.joins, p.bounds
            ));
            report
        }
        ClosureRouteOutcome::Exhausted { examined } => {
            let mut report = Report::new(
                "birkhoff",
                Outcome::Fails,
                "no closure operator on the host's irreducibles matches the guest",
            );
            report.line(format!("closure operators examined: {examined}"));
            report
        }
    };
    match &driver.direct_embedding {
        Some(w) => {
            report.line(format!(
                "direct bound-preserving embedding exists ({} pairs)",
                w.pairs().len()
            ));
        }
        None => {
            report.line("no direct bound-preserving embedding".to_owned());
        }
    }
    if driver.degenerate {
        report.line("degenerate: a side has no meet-irreducibles".to_owned());
    }
    Ok(report)
}

pub fn cmd_interval_iso(
    source: &Source,
    space: &str,
    closure: &str,
    scale: &str,
) -> Result<Report, CommandError> {
    let space_poset = load_poset(source, None, space)?;
    let (_, op) = load_closure(source, closure, Some(space))?;
    let scale_lattice = load_scale(source, None, scale)?;
    match interval_isomorphism(&space_poset, &op, &scale_lattice) {
        Ok(IntervalOutcome::Verified(r)) => {
            let mut report = Report::new(
                "interval-iso",
                Outcome::Holds,
                "interval description verified on both sides",
            );
            report.line(format!(
                "scale closure realizing the up-set family: {}",
                closure_line(&r.scale_closure)
            ));
            report.line(format!(
                "witness map cuts: {}",
                r.witness_map.cut_family().family.canonical_name()
            ));
            report.line(format!(
                "quotient-side classes: {}; interval classes: {}; subfamily poset: {}",
                r.quotient_side.len(),
                r.interval.len(),
                r.star_poset.len()
            ));
            for (a, b) in r.main_witness.pairs() {
                report.line(format!("class {a} -> {b}"));
            }
            Ok(report)
        }
        Ok(IntervalOutcome::Counterexample(c)) => {
            let mut report = Report::new(
                "interval-iso",
                Outcome::Fails,
                "counterexample report",
            );
            match c {
                IntervalCounterexample::SynthesisFailed(r) => {
                    report.line(format!("image family is not realizable: {r}"));
                }
                IntervalCounterexample::QuotientIntervalMismatch {
                    quotient_families,
                    interval_families,
                } => {
                    report.line(format!(
                        "quotient side has {quotient_families} classes, interval has {interval_families}"
                    ));
                }
                IntervalCounterexample::StarMismatch { side } => {
                    report.line(format!("{side} side differs from the subfamily poset"));
                }
            }
            Ok(report)
        }
        Err(QuotientError::PreconditionUnmet(msg)) => {
            let mut report = Report::new("interval-iso", Outcome::Fails, "precondition unmet");
            report.line(msg);
            Ok(report)
        }
        Err(e) => Err(quotient_input(e)),
    }
}

pub fn cmd_enumerate_closures(
    source: &Source,
    space: &str,
    cap: Option<usize>,
) -> Result<Report, CommandError> {
    let p = load_poset(source, None, space)?;
    match enumerate_closure_operators(&p, cap) {
        Ok(ops) => {
            let mut report = Report::new(
                "enumerate-closures",
                Outcome::Holds,
                format!("{} closure operators", ops.len()),
            );
            for op in &ops {
                report.line(closure_line(op));
            }
            Ok(report)
        }
        Err(orderlab::ClosureError::CapExceeded { cap }) => {
            let mut report =
                Report::new("enumerate-closures", Outcome::Fails, "enumeration cap exceeded");
            report.line(format!("cap: {cap}"));
            Ok(report)
        }
        Err(e) => Err(input(e.to_string())),
    }
}

/// Emits DOT text. With a closure, the diagram is of the quotient.
pub fn cmd_dot(
    source: &Source,
    space: Option<&str>,
    scale: Option<&str>,
    closure: Option<&str>,
) -> Result<String, CommandError> {
    match (space, scale, closure) {
        (Some(path), None, None) => Ok(emit_dot(&load_poset(source, None, path)?)),
        (None, Some(path), None) => Ok(emit_dot(load_scale(source, None, path)?.order())),
        (space, None, Some(path)) => {
            let (_, op) = load_closure(source, path, space)?;
            Ok(emit_dot(quotient_by_closure(&op).poset()))
        }
        _ => Err(input(
            "dot needs --space, --scale, or --closure (optionally with --space)",
        )),
    }
}
