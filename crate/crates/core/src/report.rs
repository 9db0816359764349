//! Text reports and file exports for spec-file runs. Every report is a pure
//! function of its inputs, so repeated runs are byte-identical whatever the
//! thread count.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::classical::{to_alist, to_dense};
use crate::construct::{locality_report, LatticeCode};
use crate::css::{css_distance, Circuit, Gate};
use crate::error::{Error, Result};
use crate::fold::{
    find_reflection_duality, hadamard_type_circuit, monomial_shift, phase_type_circuit, reflection_dualities,
    restrict_and_verify, verify_logical_gate, GateReport, QubitPermutation,
};
use crate::gf2::BitMatrix;
use crate::poly::RingParams;
use crate::prune::{prune_search, reduced_pruning_params_for, SearchEntry};
use crate::specfile::{policy_name, Built, CodeSection, DualityChoice, GateSection, PruneSection, SpecFile};

fn line(out: &mut String, key: &str, value: impl std::fmt::Display) {
    let _ = writeln!(out, "{key:<12}{value}");
}

pub fn describe_code(code: &CodeSection) -> String {
    match code {
        CodeSection::Bb { l, m, a, b } => format!("bb l={l} m={m} A={a} B={b}"),
        CodeSection::Hgp { l, m, a, b } => format!("hgp l={l} m={m} A={a} B={}", b.to_bipoly_y()),
        CodeSection::Surface { d } => format!("surface d={d}"),
        CodeSection::Cyclic { h, n } => format!("cyclic n={n} h={h}"),
    }
}

fn lattice_lines(out: &mut String, lc: &LatticeCode) {
    let loc = locality_report(lc);
    line(out, "n", lc.n());
    line(out, "k", lc.k());
    line(
        out,
        "x_checks",
        format!("{} (rank {})", lc.code.hx().rows(), lc.code.rank_x()),
    );
    line(
        out,
        "z_checks",
        format!("{} (rank {})", lc.code.hz().rows(), lc.code.rank_z()),
    );
    line(out, "max_radius", loc.max_radius);
    line(out, "mean_radius", format!("{:.4}", loc.mean_radius));
    line(out, "edges", loc.edges);
    line(out, "crossings", loc.boundary_crossings);
}

/// Parameters and locality of the constructed code.
pub fn build_report(spec: &SpecFile, built: &Built) -> String {
    let mut out = String::new();
    line(&mut out, "code", describe_code(&spec.code));
    match built {
        Built::Classical(c) => {
            let p = c.params();
            line(&mut out, "n", p.n);
            line(&mut out, "k", p.k);
            line(&mut out, "d", p.d.map_or("inf".to_string(), |d| d.to_string()));
            line(
                &mut out,
                "checks",
                format!("{} (rank {})", c.check_matrix().rows(), p.n - p.k),
            );
        }
        Built::Quantum { parent, pruned } => match pruned {
            None => lattice_lines(&mut out, parent),
            Some((ps, lc)) => {
                line(&mut out, "parent", format!("[[{},{}]]", parent.n(), parent.k()));
                if let Some(p) = &spec.prune {
                    line(&mut out, "prune", describe_prune(p));
                }
                if let (Some(PruneSection::Reduced), CodeSection::Bb { l, m, a, b }) = (&spec.prune, &spec.code) {
                    if let (Some(ua), Some(ub), Ok(ring)) =
                        (a.as_univariate_x(), b.as_univariate_y(), RingParams::new(*l, *m))
                    {
                        if let Ok(q) = reduced_pruning_params_for(&ua, &ub, ring) {
                            line(&mut out, "formula", q);
                        }
                    }
                }
                line(
                    &mut out,
                    "kept",
                    format!(
                        "{} qubits, {} X-checks, {} Z-checks",
                        ps.keep_qubits.len(),
                        ps.keep_x.len(),
                        ps.keep_z.len()
                    ),
                );
                lattice_lines(&mut out, lc);
            }
        },
    }
    out
}

fn describe_prune(p: &PruneSection) -> String {
    match p {
        PruneSection::Reduced => "reduced".into(),
        PruneSection::Region { region, mode, policy } => {
            format!("region {mode:?} policy={} {region}", policy_name(*policy))
        }
        PruneSection::Explicit { qubits, .. } => format!("explicit ({} qubits)", qubits.len()),
    }
}

fn support(v: &crate::gf2::BitVector) -> String {
    v.support().iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

/// Exact distance, or a lower bound when the search stops at `w_max`.
pub fn distance_report(spec: &SpecFile, built: &Built, w_max: usize) -> String {
    let mut out = String::new();
    line(&mut out, "code", describe_code(&spec.code));
    match built {
        Built::Classical(c) => {
            let p = c.params();
            line(&mut out, "n", p.n);
            line(&mut out, "k", p.k);
            line(&mut out, "d", p.d.map_or("inf".to_string(), |d| d.to_string()));
        }
        Built::Quantum { .. } => {
            let lc = built.lattice().expect("quantum build");
            let r = css_distance(&lc.code, w_max);
            line(&mut out, "n", lc.n());
            line(&mut out, "k", lc.k());
            line(&mut out, "max_weight", w_max);
            line(&mut out, "d_x", r.d_x);
            line(&mut out, "d_z", r.d_z);
            line(&mut out, "d", r.d);
            if let Some(w) = &r.witness_x {
                line(&mut out, "witness_x", support(w));
            }
            if let Some(w) = &r.witness_z {
                line(&mut out, "witness_z", support(w));
            }
            line(&mut out, "candidates", r.candidates);
        }
    }
    out
}

/// Ranked table of the prunings found by the `[search]` block.
pub fn search_report(spec: &SpecFile, built: &Built) -> Result<(String, Vec<SearchEntry>)> {
    let search = spec
        .search
        .as_ref()
        .ok_or_else(|| Error::Precondition("spec has no [search] block".into()))?;
    let Built::Quantum { parent, .. } = built else {
        return Err(Error::Precondition("search needs a quantum code".into()));
    };
    let entries = prune_search(parent, &search.family, &search.objective);
    let mut out = String::new();
    line(&mut out, "code", describe_code(&spec.code));
    line(&mut out, "regions", search.family.regions().len());
    line(
        &mut out,
        "policies",
        search
            .family
            .policies
            .iter()
            .map(|p| policy_name(*p))
            .collect::<Vec<_>>()
            .join(", "),
    );
    line(&mut out, "max_weight", search.objective.max_weight);
    line(&mut out, "found", entries.len());
    let _ = writeln!(
        out,
        "{:>4} {:>5} {:>3} {:>4} {:>6} {:>9}  {:<13} region",
        "rank", "n", "k", "d", "radius", "crossings", "policy"
    );
    for (i, e) in entries.iter().enumerate() {
        let _ = writeln!(
            out,
            "{:>4} {:>5} {:>3} {:>4} {:>6} {:>9}  {:<13} {}",
            i + 1,
            e.n,
            e.k,
            e.d.to_string(),
            e.max_radius,
            e.crossings,
            policy_name(e.policy),
            e.region
        );
    }
    Ok((out, entries))
}

/// A gate block applied to a built code.
pub struct GateRun {
    pub circuit: Circuit,
    pub report: GateReport,
    pub text: String,
}

/// SWAPs realizing `σ`: the state of qubit `j` ends on qubit `σ(j)`.
pub fn permutation_circuit(sigma: &QubitPermutation) -> Result<Circuit> {
    let mut seen = vec![false; sigma.len()];
    let mut gates = Vec::new();
    for start in 0..sigma.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut j = sigma.apply(start);
        while j != start {
            seen[j] = true;
            cycle.push(j);
            j = sigma.apply(j);
        }
        gates.extend(cycle[1..].iter().map(|&c| Gate::Swap(start, c)));
    }
    Circuit::new(sigma.len(), gates)
}

fn choose_duality(parent: &LatticeCode, keep: &[usize], choice: DualityChoice) -> Result<(usize, QubitPermutation)> {
    let none = || Error::Precondition("no ZX-duality found in the search family".into());
    match choice {
        DualityChoice::First => find_reflection_duality(parent)?.map(|s| (0, s)).ok_or_else(none),
        DualityChoice::Index(i) => reflection_dualities(parent)?
            .into_iter()
            .nth(i)
            .map(|s| (i, s))
            .ok_or_else(none),
        DualityChoice::Preserving => {
            let id = QubitPermutation::identity(parent.n());
            reflection_dualities(parent)?
                .into_iter()
                .enumerate()
                .find(|(_, s)| *s != id && s.preserves(keep))
                .ok_or_else(none)
        }
    }
}

/// Builds the circuit of the `[gate]` block on the parent code and verifies
/// it, restricted to the pruned code when there is one.
pub fn gate_run(spec: &SpecFile, built: &Built) -> Result<GateRun> {
    let gate = spec
        .gate
        .as_ref()
        .ok_or_else(|| Error::Precondition("spec has no [gate] block".into()))?;
    let Built::Quantum { parent, pruned } = built else {
        return Err(Error::Precondition("gates need a quantum code".into()));
    };
    let keep: Vec<usize> = match pruned {
        Some((ps, _)) => ps.keep_qubits.clone(),
        None => (0..parent.n()).collect(),
    };
    let mut out = String::new();
    line(&mut out, "code", describe_code(&spec.code));
    let circuit = match gate {
        GateSection::Hadamard(c) | GateSection::Phase(c) => {
            let (idx, sigma) = choose_duality(parent, &keep, *c)?;
            let (fixed, pairs) = sigma.orbits()?;
            let kind = if matches!(gate, GateSection::Hadamard(_)) {
                "hadamard"
            } else {
                "phase"
            };
            line(&mut out, "gate", kind);
            line(
                &mut out,
                "duality",
                format!("#{idx} fixed={} pairs={}", fixed.len(), pairs.len()),
            );
            if matches!(gate, GateSection::Hadamard(_)) {
                hadamard_type_circuit(&sigma)?
            } else {
                phase_type_circuit(parent, &sigma)?
            }
        }
        GateSection::Shift(a, b) => {
            line(&mut out, "gate", format!("shift x^{a} y^{b}"));
            permutation_circuit(&monomial_shift(parent, *a, *b)?)?
        }
        GateSection::Circuit(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            line(
                &mut out,
                "gate",
                format!(
                    "circuit {}",
                    path.file_name()
                        .map_or(String::new(), |f| f.to_string_lossy().into_owned())
                ),
            );
            Circuit::parse(&text)?
        }
    };
    line(&mut out, "gates", circuit_summary(&circuit));
    let report = match pruned {
        Some((ps, _)) => restrict_and_verify(parent, &circuit, ps)?,
        None => verify_logical_gate(&parent.code, &circuit)?,
    };
    line(&mut out, "dropped", report.dropped_gates);
    line(&mut out, "valid", if report.valid { "yes" } else { "no" });
    let failures = if report.failures.is_empty() {
        "none".to_string()
    } else {
        report
            .failures
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    line(&mut out, "failures", failures);
    if let Some(act) = &report.action {
        let k = act.k();
        line(&mut out, "logical_k", k);
        line(&mut out, "identity", if act.is_identity() { "yes" } else { "no" });
        for r in 0..2 * k {
            let name = if r < k {
                format!("X{}", r + 1)
            } else {
                format!("Z{}", r - k + 1)
            };
            let row = act.symplectic.row(r);
            let bits =
                |range: std::ops::Range<usize>| range.map(|i| if row.get(i) { '1' } else { '0' }).collect::<String>();
            let _ = writeln!(
                out,
                "  {name:<4} -> x={} z={} phase={}",
                bits(0..k),
                bits(k..2 * k),
                act.phases[r]
            );
        }
    }
    Ok(GateRun {
        circuit,
        report,
        text: out,
    })
}

fn circuit_summary(c: &Circuit) -> String {
    let mut counts = [0usize; 5];
    for g in c.gates() {
        let i = match g {
            Gate::H(_) => 0,
            Gate::S(_) => 1,
            Gate::Sdg(_) => 2,
            Gate::CZ(..) => 3,
            Gate::Swap(..) => 4,
        };
        counts[i] += 1;
    }
    let names = ["H", "S", "SDG", "CZ", "SWAP"];
    let parts: Vec<String> = names
        .iter()
        .zip(counts)
        .filter(|(_, c)| *c > 0)
        .map(|(n, c)| format!("{n}={c}"))
        .collect();
    if parts.is_empty() {
        "none".into()
    } else {
        parts.join(" ")
    }
}

/// Tanner graph with X-checks as boxes, Z-checks as diamonds and layout
/// positions pinned for `neato -n`.
pub fn tanner_dot(lc: &LatticeCode) -> String {
    let l = &lc.layout;
    let mut s = String::from("graph tanner {\n  node [fontsize=8];\n");
    let pos = |p: (i64, i64)| format!("{},{}", p.0 * 36, p.1 * 36);
    for (q, &p) in l.qubits.iter().enumerate() {
        let _ = writeln!(s, "  q{q} [shape=circle, pos=\"{}!\"];", pos(p));
    }
    for (c, &p) in l.x_checks.iter().enumerate() {
        let _ = writeln!(s, "  x{c} [shape=box, color=red, pos=\"{}!\"];", pos(p));
    }
    for (c, &p) in l.z_checks.iter().enumerate() {
        let _ = writeln!(s, "  z{c} [shape=diamond, color=blue, pos=\"{}!\"];", pos(p));
    }
    for (prefix, h) in [("x", lc.code.hx()), ("z", lc.code.hz())] {
        for c in 0..h.rows() {
            for q in h.row(c).iter_ones() {
                let _ = writeln!(s, "  {prefix}{c} -- q{q};");
            }
        }
    }
    s.push_str("}\n");
    s
}

fn write(dir: &Path, name: &str, text: &str, written: &mut Vec<PathBuf>) -> Result<()> {
    let p = dir.join(name);
    std::fs::write(&p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
    written.push(p);
    Ok(())
}

fn matrix_files(dir: &Path, stem: &str, h: &BitMatrix, written: &mut Vec<PathBuf>) -> Result<()> {
    write(dir, &format!("{stem}.alist"), &to_alist(h), written)?;
    write(dir, &format!("{stem}.txt"), &to_dense(h), written)
}

/// Writes check matrices (alist and dense), the Tanner graph, the prune
/// spec and the gate circuit, whichever apply. Returns the written paths.
pub fn export(spec: &SpecFile, built: &Built, dir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
    let mut written = Vec::new();
    match built {
        Built::Classical(c) => {
            matrix_files(dir, "h", c.check_matrix(), &mut written)?;
            write(dir, "tanner.dot", &c.tanner_graph().to_dot(), &mut written)?;
        }
        Built::Quantum { pruned, .. } => {
            let lc = built.lattice().expect("quantum build");
            matrix_files(dir, "hx", lc.code.hx(), &mut written)?;
            matrix_files(dir, "hz", lc.code.hz(), &mut written)?;
            write(dir, "tanner.dot", &tanner_dot(lc), &mut written)?;
            if let Some((ps, _)) = pruned {
                write(dir, "prune.txt", &ps.to_text(), &mut written)?;
            }
            if spec.gate.is_some() {
                let run = gate_run(spec, built)?;
                let circuit = match pruned {
                    Some((ps, _)) => run.circuit.restrict(&ps.keep_qubits).0,
                    None => run.circuit,
                };
                write(dir, "circuit.txt", &circuit.to_text(), &mut written)?;
            }
        }
    }
    Ok(written)
}
