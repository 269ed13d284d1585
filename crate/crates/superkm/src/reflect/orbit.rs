use super::canon::{canonical_exact, canonical_mod_shift};
use super::{Base, CanonMode, ReflectError};
use crate::cartan::Diagram;
use std::collections::HashMap;

pub const DEFAULT_MAX_DEPTH: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitStatus {
    Complete,
    Truncated { depth: usize },
    ClosedModuloShift,
}

impl OrbitStatus {
    pub fn is_closed(self) -> bool {
        !matches!(self, OrbitStatus::Truncated { .. })
    }

    pub fn label(self) -> &'static str {
        match self {
            OrbitStatus::Complete => "complete",
            OrbitStatus::Truncated { .. } => "truncated",
            OrbitStatus::ClosedModuloShift => "closed-modulo-shift",
        }
    }
}

#[derive(Debug, Clone)]
pub struct OrbitMember {
    pub canonical: String,
    pub base: Base,
    pub depth: usize,
}

#[derive(Debug, Clone)]
pub enum EdgeOutcome {
    To { member: usize, base: Box<Base> },
    Refused(ReflectError),
}

#[derive(Debug, Clone)]
pub struct OrbitEdge {
    pub from: usize,
    pub vertex: usize,
    pub outcome: EdgeOutcome,
}

#[derive(Debug, Clone)]
pub struct Orbit {
    pub members: Vec<OrbitMember>,
    pub edges: Vec<OrbitEdge>,
    pub status: OrbitStatus,
    pub mode: CanonMode,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Every base visited: members first, then edge targets.
    pub fn all_bases(&self) -> impl Iterator<Item = &Base> {
        self.members
            .iter()
            .map(|m| &m.base)
            .chain(self.edges.iter().filter_map(|e| match &e.outcome {
                EdgeOutcome::To { base, .. } => Some(base.as_ref()),
                EdgeOutcome::Refused(_) => None,
            }))
    }

    pub fn refusals(&self) -> impl Iterator<Item = (&OrbitEdge, &ReflectError)> {
        self.edges.iter().filter_map(|e| match &e.outcome {
            EdgeOutcome::Refused(r) => Some((e, r)),
            EdgeOutcome::To { .. } => None,
        })
    }
}

fn canon(d: &Diagram, mode: CanonMode) -> String {
    match mode {
        CanonMode::Exact => canonical_exact(d),
        CanonMode::ModShift => canonical_mod_shift(d),
    }
}

/// Breadth-first closure under odd reflections at every isotropic vertex.
///
/// Members at `max_depth` are probed once more: if a probe finds a new form the
/// orbit is reported truncated, otherwise closed.
pub fn orbit(d: &Diagram, max_depth: usize, mode: CanonMode) -> Orbit {
    let root = Base::new(d);
    let mut index = HashMap::new();
    let c0 = canon(d, mode);
    index.insert(c0.clone(), 0usize);
    let mut members = vec![OrbitMember {
        canonical: c0,
        base: root,
        depth: 0,
    }];
    let mut edges = Vec::new();
    let mut truncated = false;
    let mut next = 0;
    while next < members.len() {
        let (depth, base) = (members[next].depth, members[next].base.clone());
        for k in base.diagram().isotropic_vertices() {
            match base.odd_reflect(k) {
                Err(e) => edges.push(OrbitEdge {
                    from: next,
                    vertex: k,
                    outcome: EdgeOutcome::Refused(e),
                }),
                Ok(nb) => {
                    let c = canon(nb.diagram(), mode);
                    let target = match index.get(&c) {
                        Some(&t) => Some(t),
                        None if depth < max_depth => {
                            let t = members.len();
                            index.insert(c.clone(), t);
                            members.push(OrbitMember {
                                canonical: c,
                                base: nb.clone(),
                                depth: depth + 1,
                            });
                            Some(t)
                        }
                        None => {
                            truncated = true;
                            None
                        }
                    };
                    if let Some(t) = target {
                        edges.push(OrbitEdge {
                            from: next,
                            vertex: k,
                            outcome: EdgeOutcome::To {
                                member: t,
                                base: Box::new(nb),
                            },
                        });
                    }
                }
            }
        }
        next += 1;
    }
    let status = if truncated {
        OrbitStatus::Truncated { depth: max_depth }
    } else if mode == CanonMode::ModShift {
        OrbitStatus::ClosedModuloShift
    } else {
        OrbitStatus::Complete
    };
    Orbit {
        members,
        edges,
        status,
        mode,
    }
}
