use super::rootdata::classical_of_size;
use super::templates::lookup;
use super::ClassifyError;
use crate::cartan::{is_symmetrizable, Diagram};
use crate::reflect::canon::canonical_exact;
use crate::reflect::{orbit, CanonMode, DEFAULT_MAX_DEPTH};
use crate::scalars::Scalar;
use std::collections::{HashMap, HashSet};
use std::sync::{Mutex, OnceLock};

/// Largest diagram matched against the explicit tables; beyond it the
/// distinguished diagrams built from root data are used.
pub const TABLE_LIMIT: usize = 5;

/// Symmetrized edge weights `B_ij = d_i a_ij` of a symmetrizable diagram.
fn symmetrized(d: &Diagram) -> Option<Vec<Vec<Scalar>>> {
    let w = is_symmetrizable(d)?;
    Some(
        (0..d.n())
            .map(|i| (0..d.n()).map(|j| &w[i] * d.entry(i, j)).collect())
            .collect(),
    )
}

/// All-isotropic triangle whose symmetrized edges are nonzero and sum to zero.
/// Returns `alpha = B_02 / B_01`.
pub fn d21_alpha(d: &Diagram) -> Option<Scalar> {
    if d.n() != 3 || d.isotropic_vertices().len() != 3 {
        return None;
    }
    let b = symmetrized(d)?;
    let (x, y, z) = (&b[0][1], &b[0][2], &b[1][2]);
    if x.is_zero() || y.is_zero() || z.is_zero() {
        return None;
    }
    if !(&(x + y) + z).is_zero() {
        return None;
    }
    Some(y / x)
}

/// All-isotropic complete graph on four vertices, symmetrizable, every
/// triangle of type `D(2,1,alpha)`.
pub fn d21_affine(d: &Diagram) -> bool {
    if d.n() != 4 || d.isotropic_vertices().len() != 4 {
        return false;
    }
    let Some(b) = symmetrized(d) else {
        return false;
    };
    let tri = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    tri.iter().all(|&[i, j, k]| {
        let (x, y, z) = (&b[i][j], &b[i][k], &b[j][k]);
        !x.is_zero() && !y.is_zero() && !z.is_zero() && (&(x + y) + z).is_zero()
    })
}

fn classical_forms(size: usize) -> &'static HashMap<String, String> {
    static CACHE: OnceLock<Mutex<HashMap<usize, &'static HashMap<String, String>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("cache lock");
    guard.entry(size).or_insert_with(|| {
        let forms = classical_of_size(size)
            .into_iter()
            .map(|(label, d)| (canonical_exact(&d), label))
            .collect();
        Box::leak(Box::new(forms))
    })
}

/// Finite-type label of one diagram (not its orbit), if any.
fn member_label(d: &Diagram) -> Option<String> {
    if d.n() <= TABLE_LIMIT {
        if let Some(t) = lookup(&canonical_exact(d)).filter(|t| t.is_finite()) {
            return Some(t.label.clone());
        }
        if let Some(a) = d21_alpha(d) {
            return Some(format!("D(2,1,α) with α={a}"));
        }
        None
    } else {
        classical_forms(d.n()).get(&canonical_exact(d)).cloned()
    }
}

fn memo() -> &'static Mutex<HashMap<String, Option<String>>> {
    static MEMO: OnceLock<Mutex<HashMap<String, Option<String>>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Name of the finite-type family whose diagram lies in the orbit of `d`.
pub fn finite_type_label(d: &Diagram) -> Result<Option<String>, ClassifyError> {
    if d.isotropic_vertices().is_empty() {
        return Err(ClassifyError::NoIsotropic);
    }
    if !d.is_connected() {
        return Err(ClassifyError::NotConnected);
    }
    if d.is_parametric() {
        return Ok(None);
    }
    let key = canonical_exact(d);
    if let Some(hit) = memo().lock().expect("memo lock").get(&key) {
        return Ok(hit.clone());
    }
    let o = orbit(d, DEFAULT_MAX_DEPTH, CanonMode::Exact);
    let mut found = None;
    if o.status.is_closed() {
        found = o
            .members
            .iter()
            .find_map(|m| member_label(m.base.diagram()));
    }
    let mut guard = memo().lock().expect("memo lock");
    let seen: HashSet<&String> = o.members.iter().map(|m| &m.canonical).collect();
    if o.status.is_closed() {
        for c in seen {
            guard.insert(c.clone(), found.clone());
        }
    }
    guard.insert(key, found.clone());
    Ok(found)
}

pub fn is_finite_type(d: &Diagram) -> Result<bool, ClassifyError> {
    Ok(finite_type_label(d)?.is_some())
}
