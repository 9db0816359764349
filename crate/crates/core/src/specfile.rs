//! Plain-text run descriptions.
//!
//! ```text
//! # the honeycomb color code on a 6×6 torus
//! [code]
//! kind = bb
//! l = 6
//! m = 6
//! A = 1 + x + x*y
//! B = 1 + y + x*y
//!
//! [prune]
//! method = region
//! mode = keep
//! policy = min-weight 4
//! polygon = 6 -7; 11 -12; 12 -9; 14 -7; 17 -6; 12 -1; 11 -4; 9 -6
//!
//! [gate]
//! type = phase
//! duality = preserving
//! ```
//!
//! Sections are `[code]` (required), `[prune]`, `[search]` and `[gate]`.
//! Each line is `key = value`; `#` starts a comment. Only `slab` and
//! `halfplane` may repeat. Unknown sections and keys are errors, reported
//! with their line number.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use crate::classical::{cyclic_code, ClassicalCode};
use crate::construct::{bb_code, hgp, LatticeCode};
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::poly::{circulant, BiPoly, RingParams, UniPoly};
use crate::prune::{
    prune_lattice, prune_reduced, region_prune, DeletionPolicy, HalfPlane, Objective, PruneSpec, Region, RegionFamily,
    RegionMode, SlabRange,
};

/// What to construct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodeSection {
    /// Bivariate bicycle code on the `l×m` torus.
    Bb { l: usize, m: usize, a: BiPoly, b: BiPoly },
    /// Planar product of `A(S_l)` and `B(S_m)ᵀ`.
    Hgp { l: usize, m: usize, a: UniPoly, b: UniPoly },
    /// Planar surface code of distance `d`.
    Surface { d: usize },
    /// Classical cyclic code with check polynomial `h` and length `n`.
    Cyclic { h: UniPoly, n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PruneSection {
    /// Reduced circulants of univariate `A`, `B`.
    Reduced,
    Region {
        region: Region,
        mode: RegionMode,
        policy: DeletionPolicy,
    },
    Explicit {
        qubits: Vec<usize>,
        x_checks: Vec<usize>,
        z_checks: Vec<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSection {
    pub family: RegionFamily,
    pub objective: Objective,
}

/// Which ZX-duality a gate is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualityChoice {
    /// First hit of the search.
    First,
    /// First non-identity hit that maps the kept qubits onto themselves.
    Preserving,
    /// The hit at this position in search order.
    Index(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GateSection {
    Hadamard(DualityChoice),
    Phase(DualityChoice),
    /// Qubit permutation by a monomial on both blocks, applied as SWAPs.
    Shift(i64, i64),
    /// Circuit file, relative paths taken from the spec file's directory.
    Circuit(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecFile {
    pub code: CodeSection,
    pub prune: Option<PruneSection>,
    pub search: Option<SearchSection>,
    pub gate: Option<GateSection>,
}

struct Entry {
    line: usize,
    value: String,
}

/// Keys of one section, each with every occurrence.
struct Section {
    name: String,
    line: usize,
    keys: BTreeMap<String, Vec<Entry>>,
}

impl Section {
    fn check_keys(&self, allowed: &[&str], repeatable: &[&str]) -> Result<()> {
        for (k, es) in &self.keys {
            if !allowed.contains(&k.as_str()) {
                return Err(at(es[0].line, format!("unknown key `{k}` in [{}]", self.name)));
            }
            if es.len() > 1 && !repeatable.contains(&k.as_str()) {
                return Err(at(es[1].line, format!("key `{k}` given twice")));
            }
        }
        Ok(())
    }

    fn get(&self, key: &str) -> Option<&Entry> {
        self.keys.get(key).map(|es| &es[0])
    }

    fn all(&self, key: &str) -> &[Entry] {
        self.keys.get(key).map_or(&[], Vec::as_slice)
    }

    fn require(&self, key: &str) -> Result<&Entry> {
        self.get(key)
            .ok_or_else(|| at(self.line, format!("[{}] needs `{key}`", self.name)))
    }

    fn usize(&self, key: &str) -> Result<usize> {
        let e = self.require(key)?;
        parse_num(e)
    }

    fn opt_usize(&self, key: &str) -> Result<Option<usize>> {
        self.get(key).map(parse_num).transpose()
    }
}

fn at(line: usize, message: String) -> Error {
    Error::ParseAt { line, message }
}

fn parse_num<T: std::str::FromStr>(e: &Entry) -> Result<T> {
    e.value
        .parse()
        .map_err(|_| at(e.line, format!("expected a number, got {:?}", e.value)))
}

fn ints(e: &Entry, s: &str) -> Result<Vec<i64>> {
    s.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| at(e.line, format!("expected an integer, got {t:?}")))
        })
        .collect()
}

fn indices(e: &Entry) -> Result<Vec<usize>> {
    e.value
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| at(e.line, format!("expected an index, got {t:?}")))
        })
        .collect()
}

fn poly<T: std::str::FromStr<Err = Error>>(e: &Entry) -> Result<T> {
    e.value.parse().map_err(|err: Error| at(e.line, err.to_string()))
}

fn split_sections(text: &str) -> Result<Vec<Section>> {
    let mut sections: Vec<Section> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.split('#').next().unwrap_or("").trim();
        if s.is_empty() {
            continue;
        }
        if let Some(name) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let name = name.trim().to_string();
            if !["code", "prune", "search", "gate"].contains(&name.as_str()) {
                return Err(at(line, format!("unknown section [{name}]")));
            }
            if sections.iter().any(|sec| sec.name == name) {
                return Err(at(line, format!("section [{name}] given twice")));
            }
            sections.push(Section {
                name,
                line,
                keys: BTreeMap::new(),
            });
            continue;
        }
        let Some((k, v)) = s.split_once('=') else {
            return Err(at(line, format!("expected `key = value`, got {s:?}")));
        };
        let Some(sec) = sections.last_mut() else {
            return Err(at(line, "key outside any section".into()));
        };
        sec.keys.entry(k.trim().to_string()).or_default().push(Entry {
            line,
            value: v.trim().to_string(),
        });
    }
    Ok(sections)
}

fn parse_code(sec: &Section) -> Result<CodeSection> {
    let kind = sec.require("kind")?;
    match kind.value.as_str() {
        "bb" => {
            sec.check_keys(&["kind", "l", "m", "A", "B"], &[])?;
            Ok(CodeSection::Bb {
                l: sec.usize("l")?,
                m: sec.usize("m")?,
                a: poly(sec.require("A")?)?,
                b: poly(sec.require("B")?)?,
            })
        }
        "hgp" => {
            sec.check_keys(&["kind", "l", "m", "A", "B"], &[])?;
            let a: UniPoly = poly(sec.require("A")?)?;
            let e = sec.require("B")?;
            let bb: BiPoly = poly(e)?;
            let b = bb
                .as_univariate_y()
                .ok_or_else(|| at(e.line, "B must be a polynomial in y alone".into()))?;
            Ok(CodeSection::Hgp {
                l: sec.usize("l")?,
                m: sec.usize("m")?,
                a,
                b,
            })
        }
        "surface" => {
            sec.check_keys(&["kind", "d"], &[])?;
            Ok(CodeSection::Surface { d: sec.usize("d")? })
        }
        "cyclic" => {
            sec.check_keys(&["kind", "h", "n"], &[])?;
            Ok(CodeSection::Cyclic {
                h: poly(sec.require("h")?)?,
                n: sec.usize("n")?,
            })
        }
        other => Err(at(kind.line, format!("unknown code kind {other:?}"))),
    }
}

fn parse_mode(e: Option<&Entry>) -> Result<RegionMode> {
    match e.map(|e| (e.line, e.value.as_str())) {
        None | Some((_, "keep")) => Ok(RegionMode::KeepInside),
        Some((_, "delete")) => Ok(RegionMode::DeleteInside),
        Some((line, other)) => Err(at(line, format!("unknown mode {other:?}"))),
    }
}

fn parse_policy(line: usize, s: &str) -> Result<DeletionPolicy> {
    let toks: Vec<&str> = s.split_whitespace().collect();
    match toks.as_slice() {
        ["node"] => Ok(DeletionPolicy::NodeInside),
        ["support"] => Ok(DeletionPolicy::SupportContained),
        ["repair"] => Ok(DeletionPolicy::Repair),
        ["min-weight", t] => t
            .parse()
            .map(DeletionPolicy::MinWeight)
            .map_err(|_| at(line, format!("bad weight {t:?}"))),
        _ => Err(at(line, format!("unknown policy {s:?}"))),
    }
}

/// Policy names for display and for spec files.
pub fn policy_name(p: DeletionPolicy) -> String {
    match p {
        DeletionPolicy::NodeInside => "node".into(),
        DeletionPolicy::SupportContained => "support".into(),
        DeletionPolicy::Repair => "repair".into(),
        DeletionPolicy::MinWeight(t) => format!("min-weight {t}"),
    }
}

fn parse_region(sec: &Section) -> Result<Region> {
    let mut slabs = Vec::new();
    for e in sec.all("slab") {
        match ints(e, &e.value)?.as_slice() {
            &[a, b, lo, hi] => slabs.push((a, b, lo, hi)),
            _ => return Err(at(e.line, "slab takes `a b lo hi`".into())),
        }
    }
    let mut planes = Vec::new();
    for e in sec.all("halfplane") {
        match ints(e, &e.value)?.as_slice() {
            &[a, b, c] => planes.push(HalfPlane { a, b, c }),
            _ => return Err(at(e.line, "halfplane takes `a b c`".into())),
        }
    }
    if let Some(e) = sec.get("polygon") {
        if !slabs.is_empty() || !planes.is_empty() {
            return Err(at(
                e.line,
                "polygon cannot be combined with slabs or half-planes".into(),
            ));
        }
        let mut vs = Vec::new();
        for part in e.value.split(';') {
            match ints(e, part)?.as_slice() {
                &[u, v] => vs.push((u, v)),
                _ => return Err(at(e.line, format!("polygon vertex {part:?} is not `u v`"))),
            }
        }
        return Region::polygon(vs).map_err(|err| at(e.line, err.to_string()));
    }
    let from_slabs = if slabs.is_empty() {
        Vec::new()
    } else {
        match Region::from_slabs(&slabs)? {
            Region::HalfPlanes(cs) => cs,
            Region::Polygon(_) => unreachable!("slabs give half-planes"),
        }
    };
    planes.splice(0..0, from_slabs);
    Region::new(planes).map_err(|err| at(sec.line, err.to_string()))
}

fn parse_prune(sec: &Section) -> Result<PruneSection> {
    let method = sec.require("method")?;
    match method.value.as_str() {
        "reduced" => {
            sec.check_keys(&["method"], &[])?;
            Ok(PruneSection::Reduced)
        }
        "region" => {
            sec.check_keys(
                &["method", "mode", "policy", "slab", "halfplane", "polygon"],
                &["slab", "halfplane"],
            )?;
            let policy = match sec.get("policy") {
                Some(e) => parse_policy(e.line, &e.value)?,
                None => DeletionPolicy::NodeInside,
            };
            Ok(PruneSection::Region {
                region: parse_region(sec)?,
                mode: parse_mode(sec.get("mode"))?,
                policy,
            })
        }
        "explicit" => {
            sec.check_keys(&["method", "qubits", "x_checks", "z_checks"], &[])?;
            Ok(PruneSection::Explicit {
                qubits: indices(sec.require("qubits")?)?,
                x_checks: indices(sec.require("x_checks")?)?,
                z_checks: indices(sec.require("z_checks")?)?,
            })
        }
        other => Err(at(method.line, format!("unknown prune method {other:?}"))),
    }
}

fn parse_search(sec: &Section) -> Result<SearchSection> {
    sec.check_keys(
        &[
            "slab",
            "mode",
            "policies",
            "max_weight",
            "min_k",
            "min_d",
            "max_n",
            "limit",
        ],
        &["slab"],
    )?;
    let mut slabs = Vec::new();
    for e in sec.all("slab") {
        match ints(e, &e.value)?.as_slice() {
            &[a, b, lo0, lo1, w0, w1] => slabs.push(SlabRange {
                a,
                b,
                lo: (lo0, lo1),
                width: (w0, w1),
            }),
            _ => return Err(at(e.line, "slab takes `a b lo_min lo_max width_min width_max`".into())),
        }
    }
    if slabs.is_empty() {
        return Err(at(sec.line, "[search] needs at least one `slab`".into()));
    }
    let policies = match sec.get("policies") {
        Some(e) => e
            .value
            .split(',')
            .map(|p| parse_policy(e.line, p.trim()))
            .collect::<Result<Vec<_>>>()?,
        None => vec![DeletionPolicy::NodeInside],
    };
    let defaults = Objective::default();
    Ok(SearchSection {
        family: RegionFamily {
            slabs,
            mode: parse_mode(sec.get("mode"))?,
            policies,
        },
        objective: Objective {
            max_weight: sec.opt_usize("max_weight")?.unwrap_or(defaults.max_weight),
            min_k: sec.opt_usize("min_k")?.unwrap_or(defaults.min_k),
            min_d: sec.opt_usize("min_d")?.unwrap_or(defaults.min_d),
            max_n: sec.opt_usize("max_n")?,
            limit: sec.opt_usize("limit")?,
        },
    })
}

fn parse_gate(sec: &Section) -> Result<GateSection> {
    let ty = sec.require("type")?;
    let duality = || -> Result<DualityChoice> {
        match sec.get("duality") {
            None => Ok(DualityChoice::First),
            Some(e) => match e.value.split_whitespace().collect::<Vec<_>>().as_slice() {
                ["first"] => Ok(DualityChoice::First),
                ["preserving"] => Ok(DualityChoice::Preserving),
                ["index", i] => i
                    .parse()
                    .map(DualityChoice::Index)
                    .map_err(|_| at(e.line, format!("bad index {i:?}"))),
                _ => Err(at(e.line, format!("unknown duality choice {:?}", e.value))),
            },
        }
    };
    match ty.value.as_str() {
        "hadamard" | "phase" => {
            sec.check_keys(&["type", "duality"], &[])?;
            let d = duality()?;
            Ok(if ty.value == "hadamard" {
                GateSection::Hadamard(d)
            } else {
                GateSection::Phase(d)
            })
        }
        "shift" => {
            sec.check_keys(&["type", "shift"], &[])?;
            let e = sec.require("shift")?;
            match ints(e, &e.value)?.as_slice() {
                &[a, b] => Ok(GateSection::Shift(a, b)),
                _ => Err(at(e.line, "shift takes `a b`".into())),
            }
        }
        "circuit" => {
            sec.check_keys(&["type", "file"], &[])?;
            Ok(GateSection::Circuit(PathBuf::from(&sec.require("file")?.value)))
        }
        other => Err(at(ty.line, format!("unknown gate type {other:?}"))),
    }
}

impl SpecFile {
    pub fn parse(text: &str) -> Result<SpecFile> {
        let sections = split_sections(text)?;
        let find = |name: &str| sections.iter().find(|s| s.name == name);
        let code = parse_code(find("code").ok_or_else(|| Error::Parse("missing [code] section".into()))?)?;
        let prune = find("prune").map(parse_prune).transpose()?;
        let search = find("search").map(parse_search).transpose()?;
        let gate = find("gate").map(parse_gate).transpose()?;
        let spec = SpecFile {
            code,
            prune,
            search,
            gate,
        };
        if matches!(spec.code, CodeSection::Cyclic { .. })
            && (spec.prune.is_some() || spec.search.is_some() || spec.gate.is_some())
        {
            return Err(Error::Parse(
                "a cyclic code takes no [prune], [search] or [gate]".into(),
            ));
        }
        Ok(spec)
    }

    /// Reads and parses a file; a relative circuit path is resolved against
    /// the file's directory.
    pub fn load(path: &Path) -> Result<SpecFile> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let mut spec = Self::parse(&text)?;
        if let Some(GateSection::Circuit(p)) = &mut spec.gate {
            if p.is_relative() {
                if let Some(dir) = path.parent() {
                    *p = dir.join(&*p);
                }
            }
        }
        Ok(spec)
    }

    /// Constructs the code and applies the prune block, if any.
    pub fn build(&self) -> Result<Built> {
        let parent = match &self.code {
            CodeSection::Cyclic { h, n } => return Ok(Built::Classical(cyclic_code(h, *n)?)),
            CodeSection::Bb { l, m, a, b } => bb_code(a, b, RingParams::new(*l, *m)?),
            CodeSection::Hgp { l, m, a, b } => {
                RingParams::new(*l, *m)?;
                hgp(&circulant(a, *l), &circulant(b, *m).transpose())
            }
            CodeSection::Surface { d } => {
                if *d < 2 {
                    return Err(Error::Precondition("surface code needs d ≥ 2".into()));
                }
                let mut h = BitMatrix::zeros(d - 1, *d);
                for i in 0..d - 1 {
                    h.set(i, i, true);
                    h.set(i, i + 1, true);
                }
                hgp(&h, &h)
            }
        };
        let pruned = match &self.prune {
            None => None,
            Some(PruneSection::Reduced) => {
                let CodeSection::Bb { l, m, a, b } = &self.code else {
                    return Err(Error::Precondition("reduced pruning needs a bb code".into()));
                };
                let ua = a
                    .as_univariate_x()
                    .ok_or_else(|| Error::Precondition("reduced pruning needs A in x alone".into()))?;
                let ub = b
                    .as_univariate_y()
                    .ok_or_else(|| Error::Precondition("reduced pruning needs B in y alone".into()))?;
                let p = prune_reduced(&ua, &ub, RingParams::new(*l, *m)?)?;
                Some((p.spec, p.code))
            }
            Some(PruneSection::Region { region, mode, policy }) => {
                let r = region_prune(&parent, region, *mode, *policy)?;
                Some((r.spec, r.code))
            }
            Some(PruneSection::Explicit {
                qubits,
                x_checks,
                z_checks,
            }) => {
                let spec = PruneSpec::new(&parent.code, qubits.clone(), x_checks.clone(), z_checks.clone())?;
                let code = prune_lattice(&parent, &spec)?;
                Some((spec, code))
            }
        };
        Ok(Built::Quantum { parent, pruned })
    }
}

/// Result of [`SpecFile::build`].
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum Built {
    Classical(ClassicalCode),
    Quantum {
        parent: LatticeCode,
        pruned: Option<(PruneSpec, LatticeCode)>,
    },
}

impl Built {
    /// The code that commands act on: the pruned code when there is one.
    pub fn lattice(&self) -> Option<&LatticeCode> {
        match self {
            Built::Classical(_) => None,
            Built::Quantum { parent, pruned } => Some(pruned.as_ref().map_or(parent, |p| &p.1)),
        }
    }
}
