//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

mod common;

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use common::{
    brute_classical_distance, brute_logical_weight, naive_rank, random_css, syndrome_zero, to_dense, vec_bits,
};
use qcode::classical::{cyclic_code, reduce_first_rows, transpose_code};
use qcode::construct::{
    bb_code, hgp, hgp_intersecting_basis, hgp_params_formula, locality_report, FactorParams, LatticeCode,
};
use qcode::css::{css_distance, Distance};
use qcode::fold::{
    find_reflection_duality, hadamard_type_circuit, phase_type_circuit, reflection_dualities, restrict_and_verify,
    verify_logical_gate, verify_zx_duality, QubitPermutation,
};
use qcode::poly::{circulant, poly_gcd, BiPoly, RingParams, UniPoly};
use qcode::prune::{prune_reduced, prune_search, reduced_pruning_params_for, PruneSpec};
use qcode::specfile::{Built, SpecFile};
use qcode::BitMatrix;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn spec_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("specs").join(name)
}

fn load(name: &str) -> (SpecFile, Built) {
    let spec = SpecFile::load(&spec_path(name)).expect("spec parses");
    let built = spec.build().expect("spec builds");
    (spec, built)
}

fn pruned(built: &Built) -> (&LatticeCode, &PruneSpec, &LatticeCode) {
    match built {
        Built::Quantum {
            parent,
            pruned: Some((spec, code)),
        } => (parent, spec, code),
        _ => panic!("spec has no pruning"),
    }
}

fn params(lc: &LatticeCode, w_max: usize) -> (usize, usize, Distance) {
    (lc.n(), lc.k(), css_distance(&lc.code, w_max).d)
}

fn within(start: Instant, budget: Duration) -> Check {
    let t = start.elapsed();
    if t <= budget {
        Ok(format!("{:.1}s", t.as_secs_f64()))
    } else {
        Err(format!("took {:.1}s, budget {}s", t.as_secs_f64(), budget.as_secs()))
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn color_code() -> LatticeCode {
    let a: BiPoly = "1 + x + x*y".parse().unwrap();
    let b: BiPoly = "1 + y + x*y".parse().unwrap();
    bb_code(&a, &b, RingParams::new(6, 6).unwrap())
}

fn symmetric_hgp() -> LatticeCode {
    let a: BiPoly = "1 + x + x^2".parse().unwrap();
    let b: BiPoly = "1 + y + y^2".parse().unwrap();
    bb_code(&a, &b, RingParams::new(6, 6).unwrap())
}

fn uni(exps: &[usize]) -> UniPoly {
    UniPoly::from_exponents(exps)
}

fn random_poly(rng: &mut StdRng, max_deg: usize) -> UniPoly {
    loop {
        let exps: Vec<usize> = (0..=max_deg).filter(|_| rng.gen_bool(0.5)).collect();
        if !exps.is_empty() {
            return uni(&exps);
        }
    }
}

fn c1_color_code() -> Check {
    let start = Instant::now();
    let cc = color_code();
    let r6 = css_distance(&cc.code, 6);
    let time = within(start, Duration::from_secs(600))?;
    let r8 = css_distance(&cc.code, 8);
    let detail = format!(
        "n={} k={} d at w_max=6: {}, d at w_max=8: {} [{time}]",
        cc.n(),
        cc.k(),
        r6.d,
        r8.d
    );
    ensure(cc.n() == 72 && cc.k() == 4 && r6.d == Distance::Exact(6), || {
        format!("expected [[72,4,6]]; {detail}")
    })?;
    Ok(detail)
}

fn c2_pruned_color_code() -> Check {
    let (_, built) = load("color_code_pruned.spec");
    let (_, _, code) = pruned(&built);
    let (n, k, d) = params(code, 6);
    let crossings = locality_report(code).boundary_crossings;
    let cut = format!("drawn cut gives [[{n},{k},{d}]] crossings={crossings}");
    let (sspec, sbuilt) = load("color_code_search.spec");
    let search = sspec.search.as_ref().unwrap();
    let Built::Quantum { parent, .. } = &sbuilt else {
        unreachable!()
    };
    let entries = prune_search(parent, &search.family, &search.objective);
    let hits = |n0, k0, d0| {
        entries
            .iter()
            .any(|e| e.n == n0 && e.k == k0 && e.d == Distance::Exact(d0) && e.crossings == 0)
    };
    let detail = format!("{cut}; hexagon search: {} entries with k>=2, d>=4", entries.len());
    let reached = (n, k, d, crossings) == (34, 2, Distance::Exact(4), 0) || hits(34, 2, 4);
    ensure(reached, || format!("expected [[34,2,4]] with 0 crossings; {detail}"))?;
    Ok(detail)
}

fn c3_region_search() -> Check {
    let start = Instant::now();
    let mut found = Vec::new();
    for (name, target) in [("bb_search_30.spec", (30, 2, 4)), ("bb_search_66.spec", (66, 2, 6))] {
        let (spec, built) = load(name);
        let search = spec.search.as_ref().unwrap();
        let Built::Quantum { parent, .. } = &built else {
            unreachable!()
        };
        let entries = prune_search(parent, &search.family, &search.objective);
        let hit = entries
            .iter()
            .any(|e| (e.n, e.k, e.d) == (target.0, target.1, Distance::Exact(target.2)) && e.crossings == 0);
        ensure(hit, || {
            format!(
                "{name}: no [[{},{},{}]] among {} entries",
                target.0,
                target.1,
                target.2,
                entries.len()
            )
        })?;
        found.push(format!("[[{},{},{}]]", target.0, target.1, target.2));
    }
    let time = within(start, Duration::from_secs(1800))?;
    Ok(format!("found {} [{time}]", found.join(" and ")))
}

fn c4_trivial_factors() -> Check {
    let h = uni(&[0, 1, 2]);
    let k = cyclic_code(&h, 5).map_err(|e| e.to_string())?.k();
    ensure(k == 0, || format!("cyclic code k={k}, expected 0"))?;
    let p = prune_reduced(&h, &h, RingParams::new(5, 5).unwrap()).map_err(|e| e.to_string())?;
    let parent_k = p.parent.k();
    let (n, k, d) = params(&p.code, 8);
    ensure((n, k, d) == (34, 4, Distance::Exact(3)), || {
        format!("got [[{n},{k},{d}]]")
    })?;
    Ok(format!("cyclic k=0, parent k={parent_k}, pruned [[{n},{k},{d}]]"))
}

/// Proper divisors of `xⁿ − 1` (degree below `n`), including `1`.
fn divisors(n: usize) -> Vec<UniPoly> {
    let modulus = UniPoly::cyclic_modulus(n);
    (1u32..1 << n)
        .map(|mask| uni(&(0..n).filter(|i| mask >> i & 1 == 1).collect::<Vec<_>>()))
        .filter(|p| p.divides(&modulus))
        .collect()
}

fn c5_formula_suite() -> Check {
    let start = Instant::now();
    let mut pairs = 0;
    let mut max_d = 0;
    for l in 1..=8 {
        for m in 1..=8 {
            let p = RingParams::new(l, m).unwrap();
            for a in divisors(l) {
                for b in divisors(m) {
                    let want = reduced_pruning_params_for(&a, &b, p).map_err(|e| e.to_string())?;
                    let got = prune_reduced(&a, &b, p).map_err(|e| format!("l={l} m={m} A={a} B={b}: {e}"))?;
                    let (n, k, d) = params(&got.code, 8);
                    let d_opt = match d {
                        Distance::Exact(d) => Some(d),
                        Distance::Infinite => None,
                        Distance::Exceeds(_) => return Err(format!("l={l} m={m} A={a} B={b}: distance above 8")),
                    };
                    ensure((n, k, d_opt) == (want.n, want.k, want.d), || {
                        format!("l={l} m={m} A={a} B={b}: measured [[{n},{k},{d}]] vs formula {want}")
                    })?;
                    max_d = max_d.max(d_opt.unwrap_or(0));
                    pairs += 1;
                }
            }
        }
    }
    let time = within(start, Duration::from_secs(300))?;
    Ok(format!("{pairs} divisor pairs, largest d={max_d} [{time}]"))
}

fn c6_product_formula() -> Check {
    let mut rng = StdRng::seed_from_u64(5);
    let mut cases = 0;
    let mut draws = 0;
    while cases < 60 {
        draws += 1;
        ensure(draws < 100_000, || "too few nontrivial draws".into())?;
        let (n1, n2) = (rng.gen_range(2..=8), rng.gen_range(2..=8));
        let (h1, h2) = (random_poly(&mut rng, n1 - 1), random_poly(&mut rng, n2 - 1));
        let (m1, m2) = (circulant(&h1, n1), circulant(&h2, n2));
        let (p1, p2) = (FactorParams::of(&m1), FactorParams::of(&m2));
        let want = hgp_params_formula(p1, p2);
        if want.k == 0 {
            continue;
        }
        let code = hgp(&m1, &m2);
        let (n, k, d) = params(&code, 8);
        let corollary = p1.code.d.min(p2.code.d);
        ensure(
            n == want.n && k == want.k && d.exact() == want.d && want.d == corollary,
            || format!("h1={h1} n1={n1} h2={h2} n2={n2}: measured [[{n},{k},{d}]] vs {want}"),
        )?;
        cases += 1;
    }
    Ok(format!("{cases} nontrivial random cyclic pairs"))
}

fn same_span(a: &[Vec<u8>], b: &[Vec<u8>]) -> bool {
    if a.is_empty() || b.is_empty() {
        return a.is_empty() && b.is_empty();
    }
    let mut both = a.to_vec();
    both.extend_from_slice(b);
    let r = naive_rank(&both);
    r == naive_rank(&a.to_vec()) && r == naive_rank(&b.to_vec())
}

fn c7_cyclic_properties() -> Check {
    const CASES: usize = 250;
    let mut rng = StdRng::seed_from_u64(3);
    // Consecutive rows of a divisor circulant.
    let mut rows_checked = 0;
    while rows_checked < CASES {
        let n = rng.gen_range(1..=16);
        let h = poly_gcd(&random_poly(&mut rng, 20), &UniPoly::cyclic_modulus(n)).unwrap();
        let r = h.degree().unwrap();
        if r == n {
            continue;
        }
        rows_checked += 1;
        let full = to_dense(&circulant(&h, n));
        let s = rng.gen_range(0..n);
        let window: Vec<Vec<u8>> = (0..n - r).map(|i| full[(s + i) % n].clone()).collect();
        let reduced = to_dense(&reduce_first_rows(&h, n).unwrap());
        ensure(
            naive_rank(&window) == n - r && same_span(&window, &full) && same_span(&reduced, &full),
            || format!("row property fails for h={h}, n={n}, start={s}"),
        )?;
    }
    // Kernel determined by the gcd.
    for _ in 0..CASES {
        let n = rng.gen_range(1..=16);
        let h = random_poly(&mut rng, 20);
        let g = poly_gcd(&h, &UniPoly::cyclic_modulus(n)).unwrap();
        let kh: Vec<Vec<u8>> = circulant(&h, n).kernel_basis().iter().map(vec_bits).collect();
        let kg: Vec<Vec<u8>> = circulant(&g, n).kernel_basis().iter().map(vec_bits).collect();
        ensure(same_span(&kh, &kg) && kh.len() == g.degree().unwrap(), || {
            format!("gcd property fails for h={h}, n={n}")
        })?;
    }
    // Transposed circulant: reversed kernel, same parameters.
    for _ in 0..CASES {
        let n = rng.gen_range(1..=16);
        let h = random_poly(&mut rng, 20);
        let code = cyclic_code(&h, n).unwrap();
        let t = transpose_code(&code);
        let ht = to_dense(t.check_matrix());
        let rev: Vec<Vec<u8>> = code
            .kernel_basis()
            .iter()
            .map(|v| vec_bits(v).into_iter().rev().collect())
            .collect();
        let kt: Vec<Vec<u8>> = t.kernel_basis().iter().map(vec_bits).collect();
        ensure(
            rev.iter().all(|v| syndrome_zero(&ht, v)) && same_span(&rev, &kt) && code.params() == t.params(),
            || format!("transpose property fails for h={h}, n={n}"),
        )?;
    }
    Ok(format!("{CASES} cases each for the row, gcd and transpose properties"))
}

fn repetition(n: usize) -> BitMatrix {
    let mut h = BitMatrix::zeros(n - 1, n);
    for i in 0..n - 1 {
        h.set(i, i, true);
        h.set(i, i + 1, true);
    }
    h
}

fn preserving_duality(parent: &LatticeCode, keep: &[usize]) -> Result<QubitPermutation, String> {
    let id = QubitPermutation::identity(parent.n());
    reflection_dualities(parent)
        .map_err(|e| e.to_string())?
        .into_iter()
        .find(|s| *s != id && s.preserves(keep))
        .ok_or_else(|| "no duality preserves the kept qubits".into())
}

fn c8_gates() -> Check {
    let start = Instant::now();
    let mut notes = Vec::new();
    // (a) Hadamard type.
    for (name, lc) in [
        ("surface", hgp(&repetition(3), &repetition(3))),
        ("hgp", symmetric_hgp()),
        ("color", color_code()),
    ] {
        let sigma = find_reflection_duality(&lc)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("{name}: no duality"))?;
        let witness = verify_zx_duality(&lc.code, &sigma).map_err(|e| e.to_string())?;
        ensure(witness.is_some_and(|w| w.verify(&lc.code)), || {
            format!("{name}: duality not verified")
        })?;
        let rep = verify_logical_gate(&lc.code, &hadamard_type_circuit(&sigma).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        ensure(rep.valid, || format!("{name}: hadamard-type circuit invalid"))?;
    }
    notes.push("(a) H-type valid on surface, hgp, color".to_string());
    // (b) Phase type on the symmetric product.
    let lc = symmetric_hgp();
    let sigma = find_reflection_duality(&lc).unwrap().unwrap();
    let rep = verify_logical_gate(&lc.code, &phase_type_circuit(&lc, &sigma).unwrap()).map_err(|e| e.to_string())?;
    ensure(rep.valid, || "(b) phase-type circuit invalid on hgp".into())?;
    notes.push("(b) phase-type valid on hgp".into());
    // (c) Restricted phase-type gates on the two prunings.
    let h = uni(&[0, 1, 2]);
    let reduced = prune_reduced(&h, &h, RingParams::new(6, 6).unwrap()).map_err(|e| e.to_string())?;
    let sigma = preserving_duality(&reduced.parent, &reduced.spec.keep_qubits)?;
    let circuit = phase_type_circuit(&reduced.parent, &sigma).map_err(|e| e.to_string())?;
    let rep = restrict_and_verify(&reduced.parent, &circuit, &reduced.spec).map_err(|e| e.to_string())?;
    ensure(rep.valid, || {
        "(c) restricted phase gate invalid on the reduced pruning".into()
    })?;
    let (_, built) = load("color_code_pruned.spec");
    let (parent, spec, code) = pruned(&built);
    let sigma = preserving_duality(parent, &spec.keep_qubits)?;
    let circuit = phase_type_circuit(parent, &sigma).map_err(|e| e.to_string())?;
    let rep2 = restrict_and_verify(parent, &circuit, spec).map_err(|e| e.to_string())?;
    ensure(rep2.valid, || {
        "(c) restricted phase gate invalid on the color-code cut".into()
    })?;
    notes.push(format!(
        "(c) restricted phase-type valid on reduced [[{},{}]] and color cut [[{},{}]]",
        reduced.code.n(),
        reduced.code.k(),
        code.n(),
        code.k()
    ));
    // (d) Label qubits that survive the reduced pruning.
    let basis = hgp_intersecting_basis(&reduced.parent).map_err(|e| e.to_string())?;
    let surviving = basis
        .labels
        .iter()
        .filter(|q| reduced.spec.keep_qubits.binary_search(q).is_ok())
        .count();
    ensure(surviving == reduced.code.k(), || {
        format!("(d) {surviving} surviving labels vs pruned k={}", reduced.code.k())
    })?;
    notes.push(format!(
        "(d) {surviving} of {} labels survive = pruned k",
        basis.labels.len()
    ));
    let time = within(start, Duration::from_secs(300))?;
    Ok(format!("{} [{time}]", notes.join("; ")))
}

fn c9_oracles() -> Check {
    let mut rng = StdRng::seed_from_u64(9);
    let mut quantum = 0;
    while quantum < 25 {
        let n = rng.gen_range(6..=14);
        let Some(code) = random_css(&mut rng, n) else { continue };
        let (hx, hz) = (to_dense(code.hx()), to_dense(code.hz()));
        let want_x = brute_logical_weight(&hz, &hx, n);
        let want_z = brute_logical_weight(&hx, &hz, n);
        let got = css_distance(&code, n);
        ensure(got.d_x.exact() == want_x && got.d_z.exact() == want_z, || {
            format!(
                "css_distance mismatch on a random n={n} code: {} / {} vs {want_x:?} / {want_z:?}",
                got.d_x, got.d_z
            )
        })?;
        quantum += 1;
    }
    let mut classical = 0;
    while classical < 60 {
        let n = rng.gen_range(2..=16);
        let h = random_poly(&mut rng, n);
        let code = cyclic_code(&h, n).unwrap();
        if code.k() == 0 {
            continue;
        }
        let want = brute_classical_distance(&to_dense(code.check_matrix()), n);
        ensure(code.distance() == want, || {
            format!("classical mismatch for h={h}, n={n}")
        })?;
        classical += 1;
    }
    Ok(format!(
        "{quantum} CSS codes and {classical} cyclic codes match enumeration"
    ))
}

fn run_cli(args: &[String], threads: Option<&str>) -> Result<Vec<u8>, String> {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qcode"));
    cmd.env_remove("QCODE_THREADS");
    if let Some(t) = threads {
        cmd.args(["--threads", t]);
    }
    let out = cmd.args(args).output().map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        format!(
            "{args:?} exited with {}: {}",
            out.status,
            String::from_utf8_lossy(&out.stderr)
        )
    })?;
    Ok(out.stdout)
}

fn c10_determinism() -> Check {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("specs");
    let mut specs: Vec<PathBuf> = std::fs::read_dir(&dir)
        .map_err(|e| e.to_string())?
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "spec"))
        .collect();
    specs.sort();
    let mut runs = 0;
    for path in &specs {
        let spec = SpecFile::load(path).map_err(|e| e.to_string())?;
        let p = path.display().to_string();
        let mut commands = vec![vec!["build".to_string(), p.clone()]];
        commands.push(vec!["distance".into(), "--max-weight".into(), "6".into(), p.clone()]);
        if spec.search.is_some() {
            commands.push(vec!["prune-search".into(), p.clone()]);
        }
        if spec.gate.is_some() {
            commands.push(vec!["verify-gate".into(), p.clone()]);
        }
        for args in commands {
            let first = run_cli(&args, None)?;
            ensure(first == run_cli(&args, None)?, || {
                format!("{args:?} differs between runs")
            })?;
            ensure(first == run_cli(&args, Some("1"))?, || {
                format!("{args:?} differs with one thread")
            })?;
            runs += 1;
        }
    }
    Ok(format!("{runs} reports over {} specs byte-identical", specs.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("color code [[72,4,6]]", c1_color_code),
        ("pruned color code [[34,2,4]]", c2_pruned_color_code),
        ("region search [[30,2,4]] and [[66,2,6]]", c3_region_search),
        ("pruned trivial factors [[34,4,3]]", c4_trivial_factors),
        ("reduced-circulant formula suite", c5_formula_suite),
        ("product formula suite", c6_product_formula),
        ("cyclic code properties", c7_cyclic_properties),
        ("fold-transversal gates", c8_gates),
        ("distance oracles", c9_oracles),
        ("determinism", c10_determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
