//! Bundled fixtures: worked examples shipped as documents, each with a suite
//! of assertions run by `orderlab fixtures`.
//!
//! Every assertion names its provenance: `worked-example` when the expected
//! value is transcribed from the source material, `derived` when it was
//! computed by an independent brute-force route and frozen.

use std::collections::HashMap;
use std::sync::OnceLock;

use orderlab::{
    birkhoff_embedding, find_closure_for_target, poset_isomorphism, quotient_by_closure,
    restrict_cuts, ClosureRouteOutcome, FamilyLattice, Representation, SetFamily,
};

use crate::commands::{cmd_embed, cmd_representable, CommandError};
use crate::load::{load_family, load_map, load_poset, load_scale, Source};
use crate::report::{Assertion, Outcome, Report};

pub fn registry() -> &'static HashMap<&'static str, &'static str> {
    static REG: OnceLock<HashMap<&'static str, &'static str>> = OnceLock::new();
    REG.get_or_init(|| {
        let mut m = HashMap::new();
        m.insert(
            "five_point.pos",
            include_str!("../fixtures/five_point.pos"),
        );
        m.insert("collapse.map", include_str!("../fixtures/collapse.map"));
        m.insert(
            "wedge_space.pos",
            include_str!("../fixtures/wedge_space.pos"),
        );
        m.insert("big_scale.lat", include_str!("../fixtures/big_scale.lat"));
        m.insert("family_r.fam", include_str!("../fixtures/family_r.fam"));
        m.insert("family_s.fam", include_str!("../fixtures/family_s.fam"));
        m.insert("family_u.fam", include_str!("../fixtures/family_u.fam"));
        m.insert(
            "upset_family.fam",
            include_str!("../fixtures/upset_family.fam"),
        );
        m.insert(
            "four_antichain.pos",
            include_str!("../fixtures/four_antichain.pos"),
        );
        m.insert("d1_family.fam", include_str!("../fixtures/d1_family.fam"));
        m.insert("mu0.map", include_str!("../fixtures/mu0.map"));
        m.insert("t0_family.fam", include_str!("../fixtures/t0_family.fam"));
        m
    })
}

pub const FIXTURE_NAMES: [&str; 4] = [
    "quotient-embedding",
    "representability",
    "chain-embedding",
    "restriction-gap",
];

fn check(out: &mut Vec<Assertion>, name: &str, provenance: &str, passed: bool, detail: String) {
    out.push(Assertion {
        name: name.to_owned(),
        provenance: provenance.to_owned(),
        passed,
        detail,
    });
}

fn same_members(a: &SetFamily, expected: &[&[&str]]) -> bool {
    if a.len() != expected.len() {
        return false;
    }
    expected.iter().all(|set| {
        a.contains_set(set).unwrap_or(false)
    })
}

/// Up-sets of the five-point space, its collapse quotient, and the embedding
/// of the quotient's up-sets.
fn quotient_embedding(source: &Source) -> Result<Vec<Assertion>, CommandError> {
    let mut out = Vec::new();
    let space = load_poset(source, None, "five_point.pos")?;
    let upsets = space.up_set_family(None).map_err(|e| CommandError::Input(e.to_string()))?;
    let expected: [&[&str]; 10] = [
        &[],
        &["c"],
        &["e"],
        &["c", "e"],
        &["d", "e"],
        &["c", "d", "e"],
        &["a", "c", "e"],
        &["a", "c", "d", "e"],
        &["b", "c", "d", "e"],
        &["a", "b", "c", "d", "e"],
    ];
    check(
        &mut out,
        "up-sets-of-the-space",
        "worked-example",
        same_members(&upsets, &expected),
        format!("{} up-sets", upsets.len()),
    );

    let loaded = load_map(source, "collapse.map", None, None)?;
    let op = match orderlab::validate_closure(&space, &loaded.entries)
        .map_err(|e| CommandError::Input(e.to_string()))?
    {
        orderlab::ClosureValidation::Valid(op) => op,
        orderlab::ClosureValidation::Violation(_) => {
            return Err(CommandError::Input("collapse.map is not a closure".into()))
        }
    };
    let quotient = quotient_by_closure(&op);
    check(
        &mut out,
        "quotient-blocks",
        "worked-example",
        quotient.poset().elements() == ["{a}", "{b}", "{c}", "{d,e}"],
        format!("blocks {:?}", quotient.poset().elements()),
    );
    let quotient_upsets = quotient
        .poset()
        .up_set_family(None)
        .map_err(|e| CommandError::Input(e.to_string()))?;
    let expected_quotient: [&[&str]; 7] = [
        &[],
        &["{c}"],
        &["{d,e}"],
        &["{c}", "{d,e}"],
        &["{a}", "{c}", "{d,e}"],
        &["{b}", "{c}", "{d,e}"],
        &["{a}", "{b}", "{c}", "{d,e}"],
    ];
    check(
        &mut out,
        "quotient-up-sets",
        "worked-example",
        same_members(&quotient_upsets, &expected_quotient),
        format!("{} up-sets of the quotient", quotient_upsets.len()),
    );

    let embed_report = cmd_embed(source, "five_point.pos", "collapse.map")?;
    check(
        &mut out,
        "embedding-preserves-everything",
        "worked-example",
        embed_report.outcome == Outcome::Holds,
        embed_report.summary.clone(),
    );
    let emb = orderlab::embed_quotient_upsets(&space, &op)
        .map_err(|e| CommandError::Input(e.to_string()))?;
    let expected_image: [&[&str]; 7] = [
        &[],
        &["c"],
        &["d", "e"],
        &["c", "d", "e"],
        &["a", "c", "d", "e"],
        &["b", "c", "d", "e"],
        &["a", "b", "c", "d", "e"],
    ];
    check(
        &mut out,
        "embedded-image",
        "derived",
        same_members(&emb.image, &expected_image),
        format!("image {:?}", emb.image.member_names()),
    );
    Ok(out)
}

/// The eleven-point scale, its labeled sub-poset, and the representability
/// of the two bundled families over the wedge space.
fn representability(source: &Source) -> Result<Vec<Assertion>, CommandError> {
    let mut out = Vec::new();
    let space = load_poset(source, None, "wedge_space.pos")?;
    let scale = load_scale(source, None, "big_scale.lat")?;
    check(
        &mut out,
        "scale-is-a-lattice",
        "worked-example",
        scale.len() == 11 && scale.bottom() == "0" && scale.top() == "1",
        format!(
            "{} elements, bottom {}, top {}",
            scale.len(),
            scale.bottom(),
            scale.top()
        ),
    );
    let family_s = load_family(source, None, "family_s.fam", Some(&space))?;
    let family_r = load_family(source, None, "family_r.fam", Some(&space))?;
    for (name, fam) in [("s", &family_s), ("r", &family_r)] {
        let all_up = (0..fam.len()).all(|i| space.is_up_set(&fam.member(i)).unwrap());
        check(
            &mut out,
            &format!("family-{name}-members-are-up-sets"),
            "worked-example",
            all_up && fam.is_intersection_closed() && fam.contains_full_base(),
            format!("{} members", fam.len()),
        );
    }
    let labeled = scale
        .order()
        .induced(&["0", "q", "r", "p", "s", "t", "1"])
        .map_err(|e| CommandError::Input(e.to_string()))?;
    check(
        &mut out,
        "labeled-subposet-matches-the-seven-member-family",
        "worked-example",
        poset_isomorphism(&labeled, &family_s.reverse_inclusion_poset()).is_some(),
        "order isomorphism found".into(),
    );
    for (name, file) in [("s", "family_s.fam"), ("r", "family_r.fam")] {
        let report = cmd_representable(
            source,
            file,
            "wedge_space.pos",
            "big_scale.lat",
            None,
            false,
        )?;
        check(
            &mut out,
            &format!("family-{name}-is-representable"),
            "worked-example",
            report.outcome == Outcome::Holds,
            report.summary.clone(),
        );
    }
    Ok(out)
}

/// The six-member chain embeds into the up-set lattice of the five-point
/// space directly, but no closure operator on the host's irreducibles
/// produces it.
fn chain_embedding(source: &Source) -> Result<Vec<Assertion>, CommandError> {
    let mut out = Vec::new();
    let space = load_poset(source, None, "five_point.pos")?;
    let host_family = load_family(source, None, "upset_family.fam", Some(&space))?;
    let computed = space
        .up_set_family(None)
        .map_err(|e| CommandError::Input(e.to_string()))?;
    check(
        &mut out,
        "bundled-up-set-family-matches",
        "derived",
        host_family.canonical_key() == computed.canonical_key(),
        "bundled family equals the computed up-set family".into(),
    );
    let host = FamilyLattice::new(host_family)
        .map_err(|e| CommandError::Input(e.to_string()))?
        .lattice()
        .clone();
    let guest_family = load_family(source, None, "family_u.fam", Some(&space))?;
    let guest = FamilyLattice::new(guest_family)
        .map_err(|e| CommandError::Input(e.to_string()))?
        .lattice()
        .clone();
    // A six-element chain: every pair comparable.
    let mut chain = guest.len() == 6;
    for x in guest.order().elements() {
        for y in guest.order().elements() {
            if !(guest.order().leq(x, y).unwrap() || guest.order().leq(y, x).unwrap()) {
                chain = false;
            }
        }
    }
    check(
        &mut out,
        "guest-is-a-six-element-chain",
        "worked-example",
        chain,
        format!("{} elements", guest.len()),
    );
    check(
        &mut out,
        "host-irreducibles-match-the-space",
        "worked-example",
        poset_isomorphism(&host.meet_irreducible_poset(), &space).is_some(),
        "meet-irreducibles of the up-set lattice mirror the space".into(),
    );
    let driver = birkhoff_embedding(&host, &guest).map_err(|e| CommandError::Input(e.to_string()))?;
    check(
        &mut out,
        "direct-embedding-exists",
        "worked-example",
        driver.direct_embedding.is_some(),
        "bound-preserving embedding found".into(),
    );
    check(
        &mut out,
        "closure-route-fails",
        "worked-example",
        matches!(driver.closure_route, ClosureRouteOutcome::Exhausted { .. }),
        "no closure operator on the host irreducibles matches the guest".into(),
    );
    Ok(out)
}

/// Restriction over the four-point antichain: the witness exists while the
/// explicit construction breaks the inflationary axiom.
fn restriction_gap(source: &Source) -> Result<Vec<Assertion>, CommandError> {
    let mut out = Vec::new();
    let loaded = load_map(source, "mu0.map", None, None)?;
    let m = loaded.into_fuzzy_map("mu0.map")?;
    let d1 = load_family(source, None, "d1_family.fam", Some(m.space()))?;
    check(
        &mut out,
        "cut-family-of-the-canonical-map",
        "derived",
        m.cut_family().family.canonical_key() == d1.canonical_key(),
        "six cuts, one per scale element".into(),
    );
    let t0 = load_family(source, None, "t0_family.fam", Some(m.space()))?;
    let restriction = restrict_cuts(&m, &t0).map_err(|e| CommandError::Input(e.to_string()))?;
    let witness_ok = match &restriction.representation {
        Representation::Witness(w) => {
            w.cut_family().family.canonical_key() == t0.canonical_key()
        }
        Representation::Refutation(_) => false,
    };
    check(
        &mut out,
        "restriction-witness-verifies",
        "derived",
        witness_ok,
        "recomputed cuts equal the subfamily".into(),
    );
    let diag = &restriction.diagnostic;
    check(
        &mut out,
        "construction-maps-the-gap-member-up",
        "derived",
        diag.image_of("{a,b}") == Some("{a,b,c}"),
        format!("{{a,b}} -> {:?}", diag.image_of("{a,b}")),
    );
    check(
        &mut out,
        "construction-breaks-inflation-at-the-gap",
        "derived",
        diag.axioms().inflationary.as_deref() == Some("{a,b}")
            && diag.axioms().monotone.is_none()
            && diag.axioms().idempotent.is_none(),
        format!("axiom report: {:?}", diag.axioms()),
    );
    let scale_family = load_family(source, None, "d1_family.fam", None)?;
    let scale = FamilyLattice::new(scale_family)
        .map_err(|e| CommandError::Input(e.to_string()))?
        .lattice()
        .clone();
    let found = find_closure_for_target(&scale, &t0.reverse_inclusion_poset());
    check(
        &mut out,
        "target-search-finds-the-shifted-family",
        "derived",
        found.as_ref().map(|c| c.fixed_points())
            == Some(vec![
                "{}".to_owned(),
                "{a}".to_owned(),
                "{b}".to_owned(),
                "{a,b}".to_owned(),
                "{a,b,c,d}".to_owned(),
            ]),
        format!("closed elements: {:?}", found.map(|c| c.fixed_points())),
    );
    Ok(out)
}

/// Runs one fixture or all of them.
pub fn run_fixtures(only: Option<&str>) -> Result<Report, CommandError> {
    let source = Source::Registry(registry());
    let names: Vec<&str> = match only {
        Some(name) => {
            if !FIXTURE_NAMES.contains(&name) {
                return Err(CommandError::Input(format!(
                    "fixture missing: `{name}` (available: {})",
                    FIXTURE_NAMES.join(", ")
                )));
            }
            vec![name]
        }
        None => FIXTURE_NAMES.to_vec(),
    };
    let mut report = Report::new("fixtures", Outcome::Holds, String::new());
    for name in names {
        let assertions = match name {
            "quotient-embedding" => quotient_embedding(&source)?,
            "representability" => representability(&source)?,
            "chain-embedding" => chain_embedding(&source)?,
            "restriction-gap" => restriction_gap(&source)?,
            _ => unreachable!(),
        };
        for mut a in assertions {
            a.name = format!("{name}/{}", a.name);
            report.assertions.push(a);
        }
    }
    let failed = report.assertions.iter().filter(|a| !a.passed).count();
    if failed > 0 {
        report.outcome = Outcome::Fails;
    }
    report.summary = format!(
        "{} assertions, {} failed",
        report.assertions.len(),
        failed
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_pass() {
        let report = run_fixtures(None).unwrap();
        for a in &report.assertions {
            assert!(a.passed, "{}: {}", a.name, a.detail);
        }
        assert_eq!(report.outcome, Outcome::Holds);
    }

    #[test]
    fn unknown_fixture_is_missing() {
        assert!(matches!(
            run_fixtures(Some("nope")),
            Err(CommandError::Input(_))
        ));
    }
}
