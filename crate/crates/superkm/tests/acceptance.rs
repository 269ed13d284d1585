//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! A criterion listed in `KNOWN_FAILURES` is still run and still reported as
//! FAIL; the process only exits nonzero when the observed outcomes differ from
//! the recorded ones. `SKM_SEED` fixes the seed of the randomized walks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::path::PathBuf;
use std::process::ExitCode;
use superkm::cartan::{is_generalized_cartan, Diagram, DiagramFile};
use superkm::classify::{
    finite_type_label, is_regular_kac_moody, is_subfinite, qmnt_matrix, qmnt_report, solve_qmnt,
    Branch, GrowthType, QmntSolution, RegularVerdict,
};
use superkm::integrable::{
    is_typical_qmnt, qmnt_combinations, qmnt_weight_from_xyz, s12a_conditions, s12a_diagram,
    IntegrabilityPlan, Weight,
};
use superkm::reflect::{canonical_form, orbit, principal_roots, Base, CanonMode, OrbitStatus};
use superkm::scalars::{Rational, Scalar};

/// Criterion number and the exact message it is expected to fail with.
const KNOWN_FAILURES: &[(usize, &str)] = &[(5, "B(1,1) orbit has 2 members, expected 1")];

const DEFAULT_SEED: u64 = 0x5eed_2013;
const WALKS: usize = 500;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn load(name: &str) -> (Diagram, Vec<Scalar>) {
    let text = std::fs::read_to_string(fixtures().join(name)).unwrap();
    DiagramFile::parse(&text)
        .unwrap()
        .to_diagram_with_scales()
        .unwrap()
}

fn corpus() -> Vec<(String, Diagram)> {
    let mut files: Vec<_> = std::fs::read_dir(fixtures())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "diagram"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let name = p.file_name().unwrap().to_string_lossy().into_owned();
            (name, superkm::cartan::read_diagram(&p).unwrap())
        })
        .collect()
}

fn ints(rows: &[&[i64]], p: &[u8]) -> Diagram {
    Diagram::from_ints(rows, p).unwrap()
}

fn s(t: &str) -> Scalar {
    superkm::scalars::parse_scalar(t).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_reflection_formulas() -> Check {
    // A(1,0) and back
    let a10 = ints(&[&[0, 1], &[-1, 2]], &[1, 0]);
    let r = Base::new(&a10).odd_reflect(0).map_err(|e| e.to_string())?;
    let xx = ints(&[&[0, 1], &[1, 0]], &[1, 1]);
    ensure(r.diagram() == &xx, || {
        format!("A(1,0) reflects to {}", r.diagram())
    })?;
    let back = r.odd_reflect(0).map_err(|e| e.to_string())?;
    ensure(back.diagram() == &a10, || {
        "⊗⊗ does not reflect back to A(1,0)".into()
    })?;

    // ⊗ -(1, a)- ⊙ reflects to ⊗ -(1, -a/(a+1))- ⊙, symbolically and at a = -2
    for parity in [0u8, 1] {
        let p = Scalar::param();
        let m = vec![
            vec![Scalar::zero(), Scalar::one()],
            vec![p.clone(), Scalar::int(2)],
        ];
        let d = Diagram::normalize(m, vec![1, parity]).map_err(|e| e.to_string())?;
        let r = Base::new(&d).odd_reflect(0).map_err(|e| e.to_string())?;
        let want = -&(&p / &(&p + &Scalar::one()));
        ensure(r.diagram().entry(1, 0) == &want, || {
            format!(
                "a_21 after r_1 is {}, expected -a/(a+1)",
                r.diagram().entry(1, 0)
            )
        })?;
        ensure(r.diagram().entry(0, 1).is_one(), || {
            "a_12 after r_1 is not 1".into()
        })?;
    }
    for parity in [0u8, 1] {
        let b11 = ints(&[&[0, 1], &[-2, 2]], &[1, parity]);
        let r = Base::new(&b11).odd_reflect(0).map_err(|e| e.to_string())?;
        ensure(r.diagram().matrix() == b11.matrix(), || {
            format!("B(1,1) matrix moves to {}", r.diagram())
        })?;
        ensure(r.diagram().entry(1, 0) == &Scalar::int(-2), || {
            "-a/(a+1) != -2".into()
        })?;
    }

    // ⊗ -(1,1)- ⊗ -(a,-1)- ○, reflected at v_2
    let p = Scalar::param();
    let (z, o) = (Scalar::zero(), Scalar::one());
    let chain = vec![
        vec![z.clone(), o.clone(), z.clone()],
        vec![o.clone(), z.clone(), p.clone()],
        vec![z.clone(), Scalar::int(-1), Scalar::int(2)],
    ];
    let d = Diagram::normalize(chain, vec![1, 1, 0]).map_err(|e| e.to_string())?;
    let r = Base::new(&d).odd_reflect(1).map_err(|e| e.to_string())?;
    let one_a = &o + &p;
    let drawn = vec![
        vec![Scalar::int(2), Scalar::int(-1), one_a.clone()],
        vec![o.clone(), z.clone(), p.clone()],
        vec![-&one_a, p.clone(), z.clone()],
    ];
    let drawn = Diagram::normalize(drawn, vec![0, 1, 1]).map_err(|e| e.to_string())?;
    ensure(r.diagram() == &drawn, || {
        format!("reflected chain is {}", r.diagram())
    })?;
    let mut seen = Vec::new();
    for (a, label) in [(-2i64, "C(3)"), (-3, "G(3)")] {
        let at = r
            .diagram()
            .eval_param(&Rational::from_integer(a.into()))
            .map_err(|e| e.to_string())?;
        let v = at.entry(0, 2).clone();
        ensure(v == Scalar::int(1 + a), || format!("1+a at a={a} is {v}"))?;
        let got = finite_type_label(&at).map_err(|e| e.to_string())?;
        ensure(got.as_deref() == Some(label), || {
            format!("a={a} gives {got:?}, expected {label}")
        })?;
        seen.push(v.to_string());
    }
    Ok(format!(
        "A(1,0)↔⊗⊗, -a/(a+1) symbolic, B(1,1) entries fixed, 1+a ∈ {{{}}}",
        seen.join(",")
    ))
}

fn s_section2(alpha: i64) -> Diagram {
    let a = alpha;
    ints(
        &[&[0, a - 1, -a], &[-1, 2, -1], &[-a, a + 1, 0]],
        &[1, 0, 1],
    )
}

fn c2_classification() -> Check {
    let files = corpus();
    let mut bad = Vec::new();
    for (name, d) in &files {
        if is_regular_kac_moody(d, 32).is_regular() != Some(true) {
            bad.push(format!("{name}: not regular"));
        }
        if is_subfinite(d, 32).ok().and_then(|v| v.is_subfinite()) != Some(true) {
            bad.push(format!("{name}: not subfinite"));
        }
    }
    ensure(bad.is_empty(), || bad.join("; "))?;
    let mut alphas = Vec::new();
    for alpha in (-6i64..=6).filter(|&a| a != 0) {
        let bound = alpha.unsigned_abs() as usize + 2;
        match is_regular_kac_moody(&s_section2(alpha), bound) {
            RegularVerdict::NotRegular { depth, .. } if depth <= bound => alphas.push(alpha),
            v => return Err(format!("S(1,2,{alpha}) gives {v:?} within depth {bound}")),
        }
    }
    Ok(format!(
        "{} fixtures regular and subfinite; S(1,2,α) fails for α ∈ {:?}",
        files.len(),
        alphas
    ))
}

fn triples() -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for m in -4..=-1 {
        for n in -4..=m {
            for t in -4..=n {
                if (m, n, t) != (-1, -1, -1) {
                    out.push((m, n, t));
                }
            }
        }
    }
    out
}

fn all_orders() -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    for m in -4..=-1 {
        for n in -4..=-1 {
            for t in -4..=-1 {
                if (m, n, t) != (-1, -1, -1) {
                    out.push((m, n, t));
                }
            }
        }
    }
    out
}

fn check_solution(q: &QmntSolution) -> Result<(), String> {
    let one = Scalar::one();
    let res = [
        &(&(&one + &q.a) + &(&one / &q.b)) - &Scalar::int(q.m),
        &(&(&one + &q.b) + &(&one / &q.c)) - &Scalar::int(q.n),
        &(&(&one + &q.c) + &(&one / &q.a)) - &Scalar::int(q.t),
    ];
    ensure(res.iter().all(Scalar::is_zero), || {
        format!("{q}: residuals {res:?}")
    })?;
    for v in [&q.a, &q.b, &q.c] {
        let ok = match q.branch {
            Branch::Plus => v.sign() == Ok(-1) && (v + &one).sign() == Ok(1),
            Branch::Minus => (v + &one).sign() == Ok(-1),
        };
        ensure(ok, || format!("{q}: {v} violates the branch inequality"))?;
    }
    let (mm, nn, tt) = (1 - q.m, 1 - q.n, 1 - q.t);
    let k = mm * nn * tt - mm - nn - tt;
    ensure(q.d == (k * k - 4).into(), || format!("{q}: D = {}", q.d))?;
    let Scalar::Quad(a) = &q.a else {
        return Err(format!("{q}: a = {} is rational", q.a));
    };
    // a = x + y sqrt(r) has minimal polynomial discriminant 4 y^2 r
    let y = a.irrational_part();
    let disc =
        Rational::from_integer(4.into()) * y * y * Rational::from_integer(a.radicand().clone());
    let ratio = disc / Rational::from_integer(q.d.clone());
    let sq = |r: &num_bigint::BigInt| {
        let s = r.sqrt();
        &s * &s == *r
    };
    ensure(sq(ratio.numer()) && sq(ratio.denom()), || {
        format!("{q}: discriminant ratio {ratio} is not a square")
    })?;
    Ok(())
}

fn c3_qmnt_exact() -> Check {
    let cases = triples();
    for &(m, n, t) in &all_orders() {
        let (p, q) = solve_qmnt(m, n, t).map_err(|e| format!("({m},{n},{t}): {e}"))?;
        check_solution(&p)?;
        check_solution(&q)?;
    }
    let (p, _) = solve_qmnt(-1, -1, -2).map_err(|e| e.to_string())?;
    ensure(p.a == s("(-9+sqrt(21))/10"), || format!("a+ = {}", p.a))?;
    let r = qmnt_report(&p);
    ensure(r.det == s("(sqrt(21)-3)/2"), || format!("det = {}", r.det))?;
    ensure(r.det_elimination == r.det, || {
        "det by elimination differs from 1+abc".into()
    })?;
    Ok(format!(
        "{} ordered cases (−4 ≤ t ≤ n ≤ m ≤ −1), {} triples in all orders, a+ and det exact",
        cases.len(),
        all_orders().len()
    ))
}

fn c4_qmnt_growth() -> Check {
    let hyper = [
        (-1, -1, -2),
        (-1, -1, -3),
        (-1, -1, -4),
        (-1, -2, -2),
        (-2, -2, -2),
    ];
    let mut count = 0;
    for &(m, n, t) in &triples() {
        let (p, q) = solve_qmnt(m, n, t).map_err(|e| e.to_string())?;
        for sol in [&p, &q] {
            let r = qmnt_report(sol);
            count += 1;
            ensure(!r.symmetrizable, || format!("{sol} is symmetrizable"))?;
            ensure(
                r.b_growth == GrowthType::Indefinite && !r.finite_growth_b,
                || format!("{sol}: B has growth {}", r.b_growth.label()),
            )?;
            let want = hyper.contains(&(m, n, t));
            ensure(r.hyperbolic == want, || {
                format!("{sol}: hyperbolic = {}", r.hyperbolic)
            })?;
        }
    }
    let (p, q) = solve_qmnt(-1, -1, -5).map_err(|e| e.to_string())?;
    for sol in [&p, &q] {
        ensure(!qmnt_report(sol).hyperbolic, || {
            format!("{sol} reports hyperbolic")
        })?;
    }
    Ok(format!(
        "{count} solutions non-symmetrizable with indefinite B; 5 hyperbolic rows, (−1,−1,−5) not"
    ))
}

fn c5_orbit_sizes() -> Check {
    let size = |d: &Diagram| {
        let o = orbit(d, 32, CanonMode::Exact);
        (o.len(), o.status)
    };
    let (n, st) = size(&ints(&[&[0, 1], &[-1, 2]], &[1, 0]));
    ensure(n == 2 && st == OrbitStatus::Complete, || {
        format!("A(1,0) orbit has {n} members")
    })?;
    let (p, q) = solve_qmnt(-1, -1, -2).map_err(|e| e.to_string())?;
    for sol in [&p, &q] {
        let (n, st) = size(&sol.diagram);
        ensure(n == 4 && st == OrbitStatus::Complete, || {
            format!("{sol} orbit has {n} members")
        })?;
    }
    let (sp, _) = load("S__p.diagram");
    let o = orbit(&sp, 32, CanonMode::ModShift);
    ensure(o.status == OrbitStatus::ClosedModuloShift, || {
        format!("S(1,2,α) mod-shift orbit is {}", o.status.label())
    })?;
    let (n, _) = size(&ints(&[&[0, 1], &[-2, 2]], &[1, 0]));
    ensure(n == 1, || {
        format!("B(1,1) orbit has {n} members, expected 1")
    })?;
    Ok("B(1,1)=1, A(1,0)=2, Q±(−1,−1,−2)=4, S closed modulo shift".into())
}

/// Coroot in the coroots of the unnormalized rows, given one in the normalized coroots.
fn raw_coroot(c: &[Scalar], scales: &[Scalar]) -> Vec<Scalar> {
    c.iter().zip(scales).map(|(x, s)| x * s).collect()
}

fn c6_principal_roots() -> Check {
    let (z, o) = (Scalar::zero(), Scalar::one());
    for alpha in [s("2/3"), s("-5/2"), s("2")] {
        let (d, scales) = s12a_diagram(&alpha).map_err(|e| e.to_string())?;
        let pr = principal_roots(&d, 32);
        ensure(pr.complete(), || {
            format!("S(1,2,{alpha}) principal roots incomplete")
        })?;
        let roots: Vec<_> = pr.roots.iter().map(|r| r.root.clone()).collect();
        ensure(roots == vec![vec![0, 1, 1], vec![1, 0, 0]], || {
            format!("S(1,2,{alpha}) principal roots {roots:?}")
        })?;
        let h = raw_coroot(&pr.roots[0].coroot, &scales);
        ensure(h == vec![z.clone(), o.clone(), o.clone()], || {
            format!("h for α2+α3 is {h:?}")
        })?;
        let h1 = raw_coroot(&pr.roots[1].coroot, &scales);
        ensure(h1 == vec![o.clone(), z.clone(), z.clone()], || {
            format!("h for α1 is {h1:?}")
        })?;
    }
    let mut checked = 0;
    for &(m, n, t) in &[(-1, -1, -2), (-2, -2, -3), (-1, -3, -4)] {
        let (p, q) = solve_qmnt(m, n, t).map_err(|e| e.to_string())?;
        for sol in [&p, &q] {
            let raw = qmnt_matrix(&sol.a, &sol.b, &sol.c);
            let pr = principal_roots(&sol.diagram, 32);
            ensure(pr.complete(), || {
                format!("{sol}: principal roots incomplete")
            })?;
            let roots: Vec<_> = pr.roots.iter().map(|r| r.root.clone()).collect();
            ensure(
                roots == vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]],
                || format!("{sol}: principal roots {roots:?}"),
            )?;
            for r in &pr.roots {
                let ij: Vec<usize> = (0..3).filter(|&k| r.root[k] == 1).collect();
                let (i, j) = (ij[0], ij[1]);
                let mut want = vec![z.clone(); 3];
                want[j] = &o / &raw[j][i];
                want[i] = &o / &raw[i][j];
                let h = raw_coroot(&r.coroot, &sol.row_scales);
                ensure(h == want, || {
                    format!("{sol}: coroot of {:?} is {h:?}", r.root)
                })?;
                for w in &r.witnesses {
                    let b = Base::new(&sol.diagram)
                        .replay(&w.path)
                        .map_err(|e| e.to_string())?;
                    ensure(b.consistency_holds(), || {
                        format!("{sol}: inconsistent base")
                    })?;
                    ensure(b.pairing(&r.root, &r.coroot) == Scalar::int(2), || {
                        format!("{sol}: α(h_α) != 2")
                    })?;
                }
                checked += 1;
            }
        }
    }
    Ok(format!(
        "S(1,2,α) gives {{α1, α2+α3}} with h2+h3; {checked} Q± roots match h_j/a_ji + h_i/a_ij"
    ))
}

fn c7_integrability() -> Check {
    let grid = ["-1", "0", "1/2", "1", "2", "3"].map(s);
    let mut n_grid = 0;
    for alpha in [s("2/3"), s("-5/2")] {
        let (d, scales) = s12a_diagram(&alpha).map_err(|e| e.to_string())?;
        let plan =
            IntegrabilityPlan::new(&d, &principal_roots(&d, 32)).map_err(|e| e.to_string())?;
        for x in &grid {
            for y in &grid {
                for z in &grid {
                    let w = Weight::new(vec![x.clone(), y.clone(), z.clone()]);
                    let closed = s12a_conditions(&alpha, &w).map_err(|e| e.to_string())?;
                    let generic = plan
                        .verdict(&w.rescaled(&scales))
                        .map_err(|e| e.to_string())?
                        .integrable;
                    ensure(closed == generic, || {
                        format!("α={alpha}, λ=({w}): closed {closed}, generic {generic}")
                    })?;
                    n_grid += 1;
                }
            }
        }
    }
    let mut n_q = 0;
    for &(m, n, t) in &[(-1, -1, -2), (-2, -3, -4)] {
        let (p, q) = solve_qmnt(m, n, t).map_err(|e| e.to_string())?;
        for sol in [&p, &q] {
            let plan = IntegrabilityPlan::new(&sol.diagram, &principal_roots(&sol.diagram, 32))
                .map_err(|e| e.to_string())?;
            for x in 1..=3 {
                for y in 1..=3 {
                    for z in 1..=3 {
                        let w = qmnt_weight_from_xyz(sol, x, y, z).map_err(|e| e.to_string())?;
                        let back = qmnt_combinations(sol, &w).map_err(|e| e.to_string())?;
                        ensure(back == [x, y, z].map(Scalar::int), || {
                            format!("{sol}: ({x},{y},{z}) not recovered")
                        })?;
                        ensure(is_typical_qmnt(&w).map_err(|e| e.to_string())?, || {
                            format!("{sol}: atypical")
                        })?;
                        let v = plan
                            .verdict(&w.rescaled(&sol.row_scales))
                            .map_err(|e| e.to_string())?;
                        ensure(v.integrable, || {
                            format!("{sol}: ({x},{y},{z}) not integrable")
                        })?;
                        n_q += 1;
                    }
                }
            }
        }
    }
    let mut n_cyc = 0;
    for file in ["q_tw2__3.diagram", "q_tw2__5.diagram"] {
        let (d, scales) = load(file);
        let n = d.n();
        let plan =
            IntegrabilityPlan::new(&d, &principal_roots(&d, 32)).map_err(|e| e.to_string())?;
        for code in 0..4usize.pow(n as u32) {
            let vals: Vec<i64> = (0..n).map(|i| ((code >> (2 * i)) & 3) as i64).collect();
            let w = Weight::from_ints(&vals).rescaled(&scales);
            let v = plan.verdict(&w).map_err(|e| e.to_string())?;
            ensure(!v.integrable || vals.iter().all(|&x| x == 0), || {
                format!("q({n})^(2) integrable at {vals:?}")
            })?;
            n_cyc += 1;
        }
    }
    Ok(format!("{n_grid} S(1,2,α) weights agree, {n_q} Q± weights integrable, {n_cyc} q(n)^(2) weights checked"))
}

fn seed() -> Result<u64, String> {
    match std::env::var("SKM_SEED") {
        Ok(v) => v.parse().map_err(|_| format!("SKM_SEED={v} is not a u64")),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn c8_structure() -> Check {
    let seed = seed()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let files: Vec<(String, Diagram)> = corpus()
        .into_iter()
        .filter(|(_, d)| !d.is_parametric())
        .collect();
    let canon = |d: &Diagram| canonical_form(d, CanonMode::Exact).map_err(|e| e.to_string());
    let mut steps = 0;
    for walk in 0..WALKS {
        let (name, d) = &files[rng.gen_range(0..files.len())];
        let mut b = Base::new(d);
        let len = rng.gen_range(1..=8);
        for _ in 0..len {
            let iso = b.diagram().isotropic_vertices();
            if iso.is_empty() {
                break;
            }
            let k = iso[rng.gen_range(0..iso.len())];
            let nb = b
                .odd_reflect(k)
                .map_err(|e| format!("walk {walk} on {name}: {e}"))?;
            let back = nb
                .odd_reflect(k)
                .map_err(|e| format!("walk {walk} on {name}: {e}"))?;
            ensure(canon(back.diagram())? == canon(b.diagram())?, || {
                format!(
                    "walk {walk} on {name}: r{} twice is not the identity",
                    k + 1
                )
            })?;
            ensure(nb.consistency_holds(), || {
                format!("walk {walk} on {name}: inconsistent at {:?}", nb.path())
            })?;
            ensure(is_generalized_cartan(nb.diagram()).is_empty(), || {
                format!(
                    "walk {walk} on {name}: {:?} leaves the regular class",
                    nb.path()
                )
            })?;
            b = nb;
            steps += 1;
        }
        if walk % 50 == 0 {
            ensure(
                is_regular_kac_moody(b.diagram(), 32).is_regular() == Some(true),
                || format!("walk {walk} on {name}: endpoint not regular"),
            )?;
        }
    }
    for &(m, n, t) in &triples() {
        let (p, q) = solve_qmnt(m, n, t).map_err(|e| e.to_string())?;
        let (pc, qc) = solve_qmnt(n, t, m).map_err(|e| e.to_string())?;
        let (pr, qr) = solve_qmnt(m, t, n).map_err(|e| e.to_string())?;
        ensure(
            canon(&p.diagram)? == canon(&pc.diagram)? && canon(&q.diagram)? == canon(&qc.diagram)?,
            || format!("({m},{n},{t}) and ({n},{t},{m}) differ"),
        )?;
        ensure(
            canon(&p.diagram)? == canon(&qr.diagram)? && canon(&q.diagram)? == canon(&pr.diagram)?,
            || format!("({m},{n},{t}) and ({m},{t},{n}) do not swap branches"),
        )?;
        let o = Scalar::one();
        let subst = qmnt_matrix(&(&o / &p.b), &(&o / &p.a), &(&o / &p.c));
        let d = Diagram::normalize(subst, vec![1, 1, 1]).map_err(|e| e.to_string())?;
        ensure(canon(&d)? == canon(&qr.diagram)?, || {
            format!("({m},{n},{t}): reciprocal substitution fails")
        })?;
    }
    Ok(format!(
        "{WALKS} walks ({steps} reflections, seed {seed}); Q± isomorphisms on {} cases",
        triples().len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("reflection formula fidelity", c1_reflection_formulas),
        ("classification fixtures", c2_classification),
        ("Q± exactness", c3_qmnt_exact),
        ("Q± non-symmetrizability and growth", c4_qmnt_growth),
        ("orbit sizes", c5_orbit_sizes),
        ("principal roots", c6_principal_roots),
        ("integrability oracles", c7_integrability),
        ("structural properties", c8_structure),
    ];
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut unexpected = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let n = i + 1;
        if !filter.is_empty()
            && !filter
                .iter()
                .any(|x| title.contains(x.as_str()) || *x == n.to_string())
        {
            continue;
        }
        let start = std::time::Instant::now();
        let r = f();
        let secs = start.elapsed().as_secs_f64();
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == n);
        match (&r, known) {
            (Ok(msg), None) => println!("criterion {n} PASS  {title}: {msg} [{secs:.1}s]"),
            (Err(msg), Some((_, want))) if msg == want => {
                println!("criterion {n} FAIL  {title}: {msg} (known, see README) [{secs:.1}s]")
            }
            (Ok(msg), Some(_)) => {
                unexpected += 1;
                println!(
                    "criterion {n} PASS  {title}: {msg} (listed as a known failure) [{secs:.1}s]"
                )
            }
            (Err(msg), _) => {
                unexpected += 1;
                println!("criterion {n} FAIL  {title}: {msg} [{secs:.1}s]")
            }
        }
    }
    if unexpected > 0 {
        println!("{unexpected} criteria differ from the recorded outcomes");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
