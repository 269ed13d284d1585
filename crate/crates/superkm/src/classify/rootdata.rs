//! Distinguished Cartan matrices of the classical families built from root data.
//!
//! Simple roots are vectors over `eps_1..eps_m, delta_1..delta_n` with the form
//! `(eps_i, eps_i) = 1`, `(delta_j, delta_j) = -1`; a root is odd when its
//! `delta` coordinates have odd sum.

use crate::cartan::Diagram;
use crate::scalars::Scalar;

struct RootSystem {
    m: usize,
    roots: Vec<Vec<i64>>,
}

impl RootSystem {
    fn new(m: usize) -> Self {
        RootSystem {
            m,
            roots: Vec::new(),
        }
    }

    fn form(&self, x: &[i64], y: &[i64]) -> i64 {
        x.iter()
            .zip(y)
            .enumerate()
            .map(|(k, (a, b))| if k < self.m { a * b } else { -a * b })
            .sum()
    }

    fn parity(&self, x: &[i64]) -> u8 {
        let odd: i64 = x[self.m..].iter().sum();
        (odd.rem_euclid(2)) as u8
    }

    fn diagram(&self) -> Diagram {
        let rows = self
            .roots
            .iter()
            .map(|ai| {
                let aii = self.form(ai, ai);
                self.roots
                    .iter()
                    .map(|aj| {
                        let v = self.form(ai, aj);
                        if aii == 0 {
                            Scalar::int(v)
                        } else {
                            Scalar::ratio(2 * v, aii)
                        }
                    })
                    .collect()
            })
            .collect();
        let par = self.roots.iter().map(|r| self.parity(r)).collect();
        Diagram::normalize(rows, par).expect("root data gives a square matrix")
    }
}

fn unit(w: usize, i: usize) -> Vec<i64> {
    (0..w).map(|k| i64::from(k == i)).collect()
}

fn diff(w: usize, i: usize, j: usize) -> Vec<i64> {
    let mut v = unit(w, i);
    v[j] -= 1;
    v
}

/// `sl(m|n)`, labelled `A(m-1, n-1)`: `eps_1 - eps_2, ..., eps_m - delta_1, ..., delta_{n-1} - delta_n`.
pub fn type_a(m: usize, n: usize) -> Diagram {
    let mut rs = RootSystem::new(m);
    let w = m + n;
    for k in 0..w - 1 {
        rs.roots.push(diff(w, k, k + 1));
    }
    rs.diagram()
}

/// `osp(2m+1|2n)`, labelled `B(m, n)`: `delta_1 - delta_2, ..., delta_n - eps_1, ..., eps_{m-1} - eps_m, eps_m`.
pub fn type_b(m: usize, n: usize) -> Diagram {
    let mut rs = RootSystem::new(m);
    let w = m + n;
    let order: Vec<usize> = (m..w).chain(0..m).collect();
    for k in 0..w - 1 {
        rs.roots.push(diff(w, order[k], order[k + 1]));
    }
    rs.roots.push(unit(w, order[w - 1]));
    rs.diagram()
}

/// `osp(2|2n-2)`, labelled `C(n)`: `eps - delta_1, delta_1 - delta_2, ..., 2 delta_{n-1}`.
pub fn type_c(n: usize) -> Diagram {
    let mut rs = RootSystem::new(1);
    let w = n;
    for k in 0..w - 1 {
        rs.roots.push(diff(w, k, k + 1));
    }
    let mut last = unit(w, w - 1);
    last[w - 1] = 2;
    rs.roots.push(last);
    rs.diagram()
}

/// `osp(2m|2n)` with `m >= 2`, labelled `D(m, n)`:
/// `delta_1 - delta_2, ..., delta_n - eps_1, ..., eps_{m-1} - eps_m, eps_{m-1} + eps_m`.
pub fn type_d(m: usize, n: usize) -> Diagram {
    let mut rs = RootSystem::new(m);
    let w = m + n;
    let order: Vec<usize> = (m..w).chain(0..m).collect();
    for k in 0..w - 1 {
        rs.roots.push(diff(w, order[k], order[k + 1]));
    }
    let mut last = unit(w, m - 2);
    last[m - 1] = 1;
    rs.roots.push(last);
    rs.diagram()
}

/// Every classical family member with `size` vertices and an isotropic root.
pub fn classical_of_size(size: usize) -> Vec<(String, Diagram)> {
    let mut out = Vec::new();
    for m in 1..=size {
        let n = size + 1 - m;
        if n >= 1 {
            out.push((format!("A({},{})", m - 1, n - 1), type_a(m, n)));
        }
    }
    for m in 1..size {
        out.push((format!("B({},{})", m, size - m), type_b(m, size - m)));
    }
    if size >= 3 {
        out.push((format!("C({size})"), type_c(size)));
    }
    for m in 2..size {
        out.push((format!("D({},{})", m, size - m), type_d(m, size - m)));
    }
    out.retain(|(_, d)| !d.isotropic_vertices().is_empty());
    out
}
