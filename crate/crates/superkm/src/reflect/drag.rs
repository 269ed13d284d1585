use super::{Base, ReflectError, Step};

/// Odd reflections at `v_n, v_{n-1}, ..., v_3` of a chain `v_1 - ... - v_n` with
/// isotropic end `v_n`, after which `v_2` is isotropic and row `v_1` is untouched.
pub fn drag_isotropic(b: &Base) -> Result<Vec<Step>, ReflectError> {
    let d = b.diagram();
    let n = d.n();
    let hyp = |m: &str| Err(ReflectError::Hypothesis(m.to_string()));
    for i in 0..n {
        for j in i + 1..n {
            if d.adjacent(i, j) != (j == i + 1) {
                return hyp("diagram is not a chain in vertex order");
            }
        }
    }
    if n < 2 || !d.is_isotropic(n - 1) {
        return hyp("last vertex is not isotropic");
    }
    if (1..n - 1).any(|i| d.is_isotropic(i)) {
        return hyp("interior vertices must be non-isotropic");
    }
    let mut cur = b.clone();
    let mut path = Vec::new();
    for k in (2..n).rev() {
        if !cur.diagram().is_isotropic(k) {
            return hyp("dragged vertex stopped being isotropic");
        }
        cur = cur.odd_reflect(k)?;
        path.push(*cur.path().last().expect("just reflected"));
    }
    let replay = b.replay(&path)?;
    let ok = replay.diagram() == cur.diagram()
        && replay.diagram().is_isotropic(1)
        && replay.diagram().kind(0) == d.kind(0)
        && replay.diagram().entry(0, 1) == d.entry(0, 1);
    if !ok {
        return hyp("replay verification failed");
    }
    Ok(path)
}
