//! The built-in examples and their published verdicts.

use anyhow::Context;
use serde_json::json;
use softop::document::{FunctionDocument, Space, SpaceDocument, SpaceRef};
use softop::{Conventions, Separation, SoftFunction};

const FOUR_POINT: &str = include_str!("../documents/four_point.json");
const IDENTITY_DOMAIN: &str = include_str!("../documents/identity_domain.json");
const IDENTITY_CODOMAIN: &str = include_str!("../documents/identity_codomain.json");
const IDENTITY: &str = include_str!("../documents/identity.json");

pub struct Outcome {
    pub lines: Vec<String>,
    /// `(check, expected, observed)`.
    pub checks: Vec<(&'static str, bool, bool)>,
    pub passed: bool,
}

impl Outcome {
    pub fn to_json(&self) -> serde_json::Value {
        let checks: Vec<_> = self
            .checks
            .iter()
            .map(|(name, expected, observed)| json!({ "check": name, "expected": expected, "observed": observed }))
            .collect();
        json!({ "passed": self.passed, "checks": checks })
    }
}

fn load(text: &str) -> anyhow::Result<Space> {
    let doc: SpaceDocument = serde_json::from_str(text).context("built-in space document")?;
    Ok(doc.build()?)
}

pub fn run(separation: Separation) -> anyhow::Result<Outcome> {
    let conv = Conventions::STANDARD;
    let mut checks = Vec::new();
    let mut lines = Vec::new();

    let space = load(FOUR_POINT)?;
    let t = &space.topology;
    let named = |n: &str| space.set(n).expect("built-in sets exist").clone();
    let (y, i) = (named("Y"), named("I"));
    let sub = t.subspace(&y)?;
    let mut expected: Vec<u32> = vec![0, i.bits(), named("J").bits(), named("K").bits(), y.bits()];
    expected.sort_unstable();
    let subspace_ok = sub.open_bits() == expected.as_slice();
    let dense = t.space().is_dense(y.bits());
    let over_y = t.space().relative(y.bits()).is_sw_open(i.bits(), conv);
    let over_x = t.space().is_sw_open(i.bits(), conv);
    lines.push(format!("four-point space: valid soft topology with {} open sets", t.len()));
    lines.push(format!("subspace over Y is {{Φ_E, I_E, J_E, K_E, Y_E}}: {subspace_ok}"));
    lines.push(format!("Y_E dense over X: {dense}"));
    lines.push(format!("I_E sw-open over Y: {over_y}; sw-open over X: {over_x}"));
    checks.push(("four-point family has 5 open sets", true, t.len() == 5));
    checks.push(("subspace over Y", true, subspace_ok));
    checks.push(("Y_E dense over X", true, dense));
    checks.push(("I_E sw-open over Y", true, over_y));
    checks.push(("I_E sw-open over X", false, over_x));

    let doc: FunctionDocument = serde_json::from_str(IDENTITY).context("built-in function document")?;
    let pick = |r: &SpaceRef| match r {
        SpaceRef::Path(p) if p == "identity_domain.json" => load(IDENTITY_DOMAIN),
        SpaceRef::Path(_) => load(IDENTITY_CODOMAIN),
        SpaceRef::Inline(d) => Ok(d.build()?),
    };
    let (dom, cod) = (pick(&doc.domain)?, pick(&doc.codomain)?);
    let f: SoftFunction = doc.build(&dom.universe, &cod.universe)?;
    let c = f.classify(&dom.topology, &cod.topology)?;
    lines.push(format!(
        "identity: sw-continuous {}, semicontinuous {}",
        c.sw_continuous, c.semicontinuous
    ));
    lines.push(format!("identity: continuous {}", c.continuous));
    checks.push(("identity sw-continuous", true, c.sw_continuous));
    checks.push(("identity semicontinuous", false, c.semicontinuous));
    checks.push(("identity continuous", false, c.continuous));

    let h = dom.set("H").expect("built-in sets exist");
    let h_sw = dom.topology.space().is_sw_open(h.bits(), conv);
    let h_semi = dom.topology.space().is_semiopen(h.bits());
    let connected = dom.topology.properties(separation).connected;
    lines.push(format!("H_E over the domain: sw-open {h_sw}, semiopen {h_semi}"));
    checks.push(("H_E sw-open", true, h_sw));
    checks.push(("H_E semiopen", false, h_semi));
    checks.push(("domain connected", false, connected));

    let passed = checks.iter().all(|(_, e, o)| e == o);
    for (name, e, o) in checks.iter().filter(|(_, e, o)| e != o) {
        lines.push(format!("MISMATCH {name}: expected {e}, observed {o}"));
    }
    lines.push(if passed {
        "demo: every published verdict reproduced".into()
    } else {
        "demo: FAILED".into()
    });
    Ok(Outcome { lines, checks, passed })
}
