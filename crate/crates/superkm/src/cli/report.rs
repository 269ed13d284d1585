//! JSON rendering of results, shared by the CLI and the C interface.

use crate::cartan::{Diagram, Violation};
use crate::classify::{FamilyLabel, QmntReport, QmntSolution, RegularVerdict, SubfiniteVerdict};
use crate::integrable::{BranchCase, Condition, IntegrabilityVerdict};
use crate::reflect::{Base, Orbit, OrbitStatus, PrincipalRoots, Step};
use crate::scalars::Scalar;
use serde_json::{json, Value};

pub fn scalar(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

pub fn scalars(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar).collect())
}

pub fn path(p: &[Step]) -> Value {
    Value::Array(p.iter().map(|s| Value::String(s.to_string())).collect())
}

pub fn diagram(d: &Diagram) -> Value {
    let matrix: Vec<Value> = d.matrix().iter().map(|r| scalars(r)).collect();
    let kinds: Vec<&str> = d.kinds().iter().map(|k| k.name()).collect();
    json!({
        "name": d.name(),
        "parity": d.parities(),
        "matrix": matrix,
        "kinds": kinds,
    })
}

pub fn base(b: &Base) -> Value {
    let coroots: Vec<Value> = b.coroots().iter().map(|c| scalars(c)).collect();
    json!({
        "path": path(b.path()),
        "diagram": diagram(b.diagram()),
        "roots": b.roots(),
        "coroots": coroots,
    })
}

pub fn status(s: OrbitStatus) -> Value {
    Value::String(s.label().to_string())
}

pub fn violations(v: &[Violation]) -> Value {
    Value::Array(
        v.iter()
            .map(|x| json!({"rule": x.rule.label(), "row": x.i + 1, "col": x.j + 1}))
            .collect(),
    )
}

pub fn orbit(o: &Orbit) -> Value {
    let members: Vec<Value> = o
        .members
        .iter()
        .map(|m| {
            json!({
                "depth": m.depth,
                "canonical": m.canonical,
                "path": path(m.base.path()),
                "diagram": diagram(m.base.diagram()),
            })
        })
        .collect();
    let refusals: Vec<Value> = o
        .refusals()
        .map(
            |(e, err)| json!({"member": e.from, "vertex": e.vertex + 1, "reason": err.to_string()}),
        )
        .collect();
    json!({
        "status": status(o.status),
        "size": o.len(),
        "members": members,
        "refused": refusals,
    })
}

pub fn regular(v: &RegularVerdict) -> Value {
    match v {
        RegularVerdict::Regular {
            status: s,
            members,
            lifted,
        } => json!({"status": status(*s), "members": members, "lifted": lifted}),
        RegularVerdict::NotRegular {
            witness,
            path: p,
            depth,
            violations: vs,
        } => json!({
            "witness": diagram(witness),
            "path": path(p),
            "depth": depth,
            "violations": violations(vs),
        }),
        RegularVerdict::Inconclusive { depth, members } => {
            json!({"reason": "orbit truncated", "depth": depth, "members": members})
        }
    }
}

pub fn subfinite(v: &SubfiniteVerdict) -> Value {
    match v {
        SubfiniteVerdict::Subfinite { status: s, members } => {
            json!({"status": status(*s), "members": members})
        }
        SubfiniteVerdict::NotSubfinite {
            witness,
            path: p,
            subset,
            subdiagram,
        } => json!({
            "witness": diagram(witness),
            "path": path(p),
            "subset": subset.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "subdiagram": diagram(subdiagram),
        }),
        SubfiniteVerdict::Inconclusive { reason } => json!({ "reason": reason }),
    }
}

pub fn family(l: &FamilyLabel) -> Value {
    json!({
        "label": l.to_string(),
        "family": l.family.name(),
        "parameter": l.family.parameter().map(scalar),
        "finite": l.family.is_finite(),
        "depth": l.depth,
    })
}

pub fn qmnt(s: &QmntSolution, r: &QmntReport) -> Value {
    let failures: Vec<Value> = r
        .hyperbolic_failures
        .iter()
        .map(|f| {
            json!({
                "member": f.member,
                "pair": [f.pair.0 + 1, f.pair.1 + 1],
                "reason": f.reason,
            })
        })
        .collect();
    json!({
        "label": s.to_string(),
        "branch": s.branch.sign(),
        "m": s.m, "n": s.n, "t": s.t,
        "discriminant": s.d.to_string(),
        "a": scalar(&s.a), "b": scalar(&s.b), "c": scalar(&s.c),
        "det": scalar(&r.det),
        "det_elimination": scalar(&r.det_elimination),
        "symmetrizable": r.symmetrizable,
        "b_matrix": r.b_matrix,
        "b_growth": r.b_growth.label(),
        "finite_growth_b": r.finite_growth_b,
        "orbit_size": r.orbit_size,
        "hyperbolic": r.hyperbolic,
        "hyperbolic_failures": failures,
        "diagram": diagram(&s.diagram),
    })
}

pub fn principal(pr: &PrincipalRoots) -> Value {
    let roots: Vec<Value> = pr
        .roots
        .iter()
        .map(|r| {
            let w: Vec<Value> = r
                .witnesses
                .iter()
                .map(|w| json!({"path": path(&w.path), "vertex": w.vertex + 1}))
                .collect();
            json!({
                "root": r.root,
                "coroot": scalars(&r.coroot),
                "doubled": r.doubled,
                "witnesses": w,
            })
        })
        .collect();
    json!({"status": status(pr.status), "lifted": pr.lifted, "roots": roots})
}

fn condition(c: &Condition) -> Value {
    let branches: Vec<Value> = c
        .branches
        .iter()
        .map(|b| {
            let case = match b.case {
                BranchCase::Kept => "kept",
                BranchCase::Shifted => "shifted",
                BranchCase::Reflected => "reflected",
            };
            json!({"step": b.step.to_string(), "value": scalar(&b.value), "case": case})
        })
        .collect();
    json!({
        "root": c.root,
        "coroot": scalars(&c.coroot),
        "value": scalar(&c.value),
        "parity": c.parity,
        "pass": c.pass,
        "path": path(&c.witness.path),
        "vertex": c.witness.vertex + 1,
        "branches": branches,
    })
}

pub fn integrability(v: &IntegrabilityVerdict) -> Value {
    Value::Array(v.conditions.iter().map(condition).collect())
}
