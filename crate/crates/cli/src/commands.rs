//! Implementations of the individual subcommands.
//!
//! Every handler returns the process exit code: `0` when the queried
//! property holds or the verification passed, `1` when it fails or
//! violations were found, and errors bubble up as [`CommandError`] (exit
//! code `2`: bad usage or bad input).

use crate::format::{load_matroid, parse_input, DocumentKind};
use crate::output::{emit, emit_report, set_json, set_text, Options, Record};
use matroid_core::props::axioms::{axiom_check_capped, AxiomSystem};
use matroid_core::props::series_minor::{find_series_minor_path, SearchOptions};
use matroid_core::props::{
    has_k_skew, is_circuit_difference, is_unbreakable, skew_circuit_pairs, ssce_check_capped,
};
use matroid_core::construct::named::{named, NamedId};
use matroid_core::verify::{
    catalog, encode_circuit_family, enumerate_clutters, verify_axiom_equivalence,
    verify_lemma_suite, verify_theorem1, verify_theorem3, CatalogFamily, CatalogSpec,
    InstanceSource, VerificationReport,
};
use matroid_core::Matroid;
use serde_json::json;
use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

/// An error that aborts the command with exit code 2.
#[derive(Debug)]
pub struct CommandError(pub String);

impl fmt::Display for CommandError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for CommandError {}

fn fail<T>(message: impl Into<String>) -> Result<T, CommandError> {
    Err(CommandError(message.into()))
}

type CmdResult = Result<i32, CommandError>;

fn read_file(path: &Path) -> Result<String, CommandError> {
    std::fs::read_to_string(path)
        .map_err(|e| CommandError(format!("cannot read {}: {e}", path.display())))
}

fn load_instance(path: &Path) -> Result<(Matroid, Vec<(String, usize)>), CommandError> {
    let text = read_file(path)?;
    load_matroid(&text).map_err(|e| CommandError(format!("{}: {e}", path.display())))
}

fn write_failure(e: std::io::Error) -> CommandError {
    CommandError(format!("cannot write output: {e}"))
}

// ---------------------------------------------------------------------------
// info

pub fn info(out: &mut dyn Write, opts: &Options, file: &Path) -> CmdResult {
    let text = read_file(file)?;
    let doc = parse_input(&text).map_err(|e| CommandError(format!("{}: {e}", file.display())))?;
    let kind = match doc.kind {
        DocumentKind::Matroid => "matroid",
        DocumentKind::Graph => "graph",
        DocumentKind::Gf2 => "gf2",
    };
    let (m, tags) = doc
        .into_matroid()
        .map_err(|e| CommandError(format!("{}: {e}", file.display())))?;
    let classes = m.series_classes();
    let nontrivial = classes.nontrivial_blocks().count();
    let mut record = Record::new("info", file.display().to_string(), "ok");
    record.param("format", kind);
    record.param("n", m.ground_size());
    record.param("rank", m.rank_full());
    record.param("circuits", m.circuits().len());
    record.param("connected", m.is_connected());
    record.param("binary", m.is_binary());
    record.param("loops", m.loops().len());
    record.param("coloops", m.coloops().len());
    record.param("series_classes", classes.blocks().len());
    record.param("series_classes_nontrivial", nontrivial);
    if !tags.is_empty() {
        let text = tags
            .iter()
            .map(|(name, idx)| format!("{name}={idx}"))
            .collect::<Vec<_>>()
            .join(" ");
        record.param("tags", text);
    }
    emit(out, opts, &record).map_err(write_failure)?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// check

/// A decidable structural property of a matroid instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    /// Symmetric strong circuit elimination holds.
    Ssce,
    /// Some pair of circuits is skew (disjoint with additive ranks).
    Skew,
    /// Some `k` circuits are pairwise skew.
    KSkew(usize),
    /// Connected, and contracting any proper flat stays connected.
    Unbreakable,
    /// Every symmetric difference of two intersecting circuits is a circuit.
    CircuitDifference,
    /// Representable over the two-element field.
    Binary,
}

impl FromStr for Property {
    type Err = CommandError;

    fn from_str(s: &str) -> Result<Property, CommandError> {
        match s {
            "ssce" => Ok(Property::Ssce),
            "skew" => Ok(Property::Skew),
            "unbreakable" => Ok(Property::Unbreakable),
            "circuit-difference" => Ok(Property::CircuitDifference),
            "binary" => Ok(Property::Binary),
            other => {
                if let Some(k) = other.strip_prefix("k-skew:") {
                    let k: usize = k.parse().map_err(|_| {
                        CommandError(format!("bad k in `{other}` (expected k-skew:K)"))
                    })?;
                    if k < 2 {
                        return fail("k-skew needs k >= 2");
                    }
                    return Ok(Property::KSkew(k));
                }
                fail(format!(
                    "unknown property `{other}` (expected ssce, skew, k-skew:K, \
                     unbreakable, circuit-difference, or binary)"
                ))
            }
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::Ssce => write!(f, "ssce"),
            Property::Skew => write!(f, "skew"),
            Property::KSkew(k) => write!(f, "k-skew:{k}"),
            Property::Unbreakable => write!(f, "unbreakable"),
            Property::CircuitDifference => write!(f, "circuit-difference"),
            Property::Binary => write!(f, "binary"),
        }
    }
}

pub fn check(out: &mut dyn Write, opts: &Options, property: &str, file: &Path) -> CmdResult {
    let property: Property = property.parse()?;
    let (m, _tags) = load_instance(file)?;
    let mut record = Record::new(
        format!("check:{property}"),
        file.display().to_string(),
        "",
    );
    record.param("property", property.to_string());
    record.param("n", m.ground_size());

    let holds = match property {
        Property::Ssce => {
            let report = ssce_check_capped(&m, opts.max_witnesses);
            let witnesses: Vec<_> = report
                .violations
                .iter()
                .map(|w| {
                    json!({
                        "c1": set_json(w.c1),
                        "c2": set_json(w.c2),
                        "e1": w.e1,
                        "e2": w.e2,
                        "e": w.e,
                        "text": format!(
                            "circuits {} and {} with e1={} e2={} e={}: no circuit through \
                             both e1 and e2 inside the union minus e",
                            set_text(w.c1), set_text(w.c2), w.e1, w.e2, w.e
                        ),
                    })
                })
                .collect();
            record.witnesses(witnesses, opts.max_witnesses);
            record.witnesses_total = report.violations_total;
            record.param("instances_checked", report.instances_checked);
            report.holds
        }
        Property::Skew => {
            let pairs = skew_circuit_pairs(&m);
            let witnesses: Vec<_> = pairs
                .iter()
                .map(|p| {
                    let c = p.circuits();
                    json!({
                        "c1": set_json(c[0]),
                        "c2": set_json(c[1]),
                        "text": format!(
                            "skew pair: {} and {} (disjoint, ranks add)",
                            set_text(c[0]), set_text(c[1])
                        ),
                    })
                })
                .collect();
            let found = !witnesses.is_empty();
            record.witnesses(witnesses, opts.max_witnesses);
            found
        }
        Property::KSkew(k) => {
            let found = has_k_skew(&m, k).map_err(|e| CommandError(e.to_string()))?;
            record.param("k", k);
            match found {
                Some(family) => {
                    let sets: Vec<_> = family.circuits().iter().map(|&c| set_json(c)).collect();
                    let texts: Vec<_> =
                        family.circuits().iter().map(|&c| set_text(c)).collect();
                    record.witnesses(
                        vec![json!({
                            "circuits": sets,
                            "text": format!("pairwise skew: {}", texts.join(", ")),
                        })],
                        opts.max_witnesses,
                    );
                    true
                }
                None => false,
            }
        }
        Property::Unbreakable => {
            let holds = is_unbreakable(&m);
            if !holds {
                record.witnesses(unbreakable_witnesses(&m), opts.max_witnesses);
            }
            holds
        }
        Property::CircuitDifference => {
            let holds = is_circuit_difference(&m);
            if !holds {
                record.witnesses(circuit_difference_witnesses(&m), opts.max_witnesses);
            }
            holds
        }
        Property::Binary => {
            let holds = m.is_binary();
            if !holds {
                if let Some((contract, delete)) = m.find_u24_minor() {
                    record.witnesses(
                        vec![json!({
                            "contract": set_json(contract),
                            "delete": set_json(delete),
                            "text": format!(
                                "contracting {} and deleting {} leaves a four-point line",
                                set_text(contract), set_text(delete)
                            ),
                        })],
                        opts.max_witnesses,
                    );
                }
            }
            holds
        }
    };

    record.verdict = if holds { "holds" } else { "fails" }.to_string();
    emit(out, opts, &record).map_err(write_failure)?;
    Ok(if holds { 0 } else { 1 })
}

/// Witnesses for a failed unbreakability check: either the matroid itself is
/// disconnected, or some proper flat whose contraction disconnects it.
fn unbreakable_witnesses(m: &Matroid) -> Vec<serde_json::Value> {
    if !m.is_connected() {
        return vec![json!({"text": "the matroid itself is disconnected"})];
    }
    let full = m.full_set();
    let mut out = Vec::new();
    for &f in m.flats() {
        if f == full {
            continue;
        }
        let minor = m.contract(f);
        if !minor.matroid.is_connected() {
            out.push(json!({
                "flat": set_json(f),
                "text": format!("contracting the flat {} disconnects the matroid", set_text(f)),
            }));
        }
    }
    out
}

/// Witnesses for a failed circuit-difference check: intersecting circuit
/// pairs whose symmetric difference is not a circuit.
fn circuit_difference_witnesses(m: &Matroid) -> Vec<serde_json::Value> {
    let circuits = m.circuits().members();
    let mut out = Vec::new();
    for (i, &c1) in circuits.iter().enumerate() {
        for &c2 in &circuits[i + 1..] {
            if c1.intersection(c2).is_empty() {
                continue;
            }
            let d = c1.symmetric_difference(c2);
            if !m.circuits().contains(d) {
                out.push(json!({
                    "c1": set_json(c1),
                    "c2": set_json(c2),
                    "symmetric_difference": set_json(d),
                    "text": format!(
                        "circuits {} and {} intersect but their symmetric difference {} \
                         is not a circuit",
                        set_text(c1), set_text(c2), set_text(d)
                    ),
                }));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// axiom

pub fn axiom(out: &mut dyn Write, opts: &Options, system: &str, file: &Path) -> CmdResult {
    let system = AxiomSystem::from_str(system).map_err(|e| CommandError(e.to_string()))?;
    let text = read_file(file)?;
    // Axiom checks run on the raw circuit list (any antichain), so the
    // document is deliberately not validated as a matroid here.
    let doc = parse_input(&text).map_err(|e| CommandError(format!("{}: {e}", file.display())))?;
    let report = axiom_check_capped(&doc.circuits, system, opts.max_witnesses);
    let mut record = Record::new(
        format!("axiom:{system}"),
        file.display().to_string(),
        if report.holds { "holds" } else { "fails" },
    );
    record.param("system", system.to_string());
    record.param("n", doc.circuits.ground_size());
    record.param("members", doc.circuits.len());
    record.param("instances_checked", report.instances_checked);
    let witnesses: Vec<_> = report
        .violations
        .iter()
        .map(|v| {
            let mut text = format!("c1={} c2={}", set_text(v.c1), set_text(v.c2));
            if let (Some(e1), Some(e2)) = (v.e1, v.e2) {
                text.push_str(&format!(" e1={e1} e2={e2}"));
            }
            if let Some(e) = v.e {
                text.push_str(&format!(" e={e}"));
            }
            text.push_str(&format!(": {}", v.note));
            json!({
                "c1": set_json(v.c1),
                "c2": set_json(v.c2),
                "e1": v.e1,
                "e2": v.e2,
                "e": v.e,
                "note": v.note,
                "text": text,
            })
        })
        .collect();
    record.witnesses(witnesses, opts.max_witnesses);
    record.witnesses_total = report.violations_total;
    emit(out, opts, &record).map_err(write_failure)?;
    Ok(if report.holds { 0 } else { 1 })
}

// ---------------------------------------------------------------------------
// minor

pub fn minor_series(
    out: &mut dyn Write,
    opts: &Options,
    host_path: &Path,
    target_path: &Path,
) -> CmdResult {
    let (host, _) = load_instance(host_path)?;
    let (target, _) = load_instance(target_path)?;
    // The caller supplied the host explicitly, so search it whatever its
    // size (the default cap exists to protect the bulk sweeps).
    let search = SearchOptions {
        max_host: host.ground_size(),
    };
    let path = find_series_minor_path(&host, &target, &search)
        .map_err(|e| CommandError(e.to_string()))?;
    let found = path.is_some();
    let mut record = Record::new(
        "minor:series",
        format!("{} => {}", host_path.display(), target_path.display()),
        if found { "yes" } else { "no" },
    );
    record.param("host_n", host.ground_size());
    record.param("target_n", target.ground_size());
    if let Some(moves) = path {
        let rendered: Vec<String> = moves.iter().map(|mv| mv.to_string()).collect();
        let text = if rendered.is_empty() {
            "no moves needed: the host is already isomorphic to the target".to_string()
        } else {
            format!("moves: {}", rendered.join("; "))
        };
        record.witnesses(
            vec![json!({"moves": rendered, "text": text})],
            opts.max_witnesses,
        );
    }
    emit(out, opts, &record).map_err(write_failure)?;
    Ok(if found { 0 } else { 1 })
}

// ---------------------------------------------------------------------------
// named

pub fn named_cmd(
    out: &mut dyn Write,
    opts: &Options,
    id: &str,
    out_file: Option<&Path>,
) -> CmdResult {
    let id = NamedId::from_str(id).map_err(|e| CommandError(e.to_string()))?;
    let nm = named(id).map_err(|e| CommandError(e.to_string()))?;
    let encoding = matroid_core::verify::encode_matroid(&nm.matroid, &nm.tags);
    if let Some(path) = out_file {
        std::fs::write(path, &encoding)
            .map_err(|e| CommandError(format!("cannot write {}: {e}", path.display())))?;
    }
    if opts.json {
        let mut record = Record::new("named", id.to_string(), "ok");
        record.param("n", nm.matroid.ground_size());
        record.param("rank", nm.matroid.rank_full());
        match out_file {
            Some(path) => {
                record.param("out", path.display().to_string());
            }
            None => {
                record.param("encoding", encoding.clone());
            }
        }
        emit(out, opts, &record).map_err(write_failure)?;
    } else if let Some(path) = out_file {
        writeln!(
            out,
            "wrote {} (n={}, rank={})",
            path.display(),
            nm.matroid.ground_size(),
            nm.matroid.rank_full()
        )
        .map_err(write_failure)?;
    } else {
        // Bare text mode prints the encoding itself so it can be piped.
        write!(out, "{encoding}").map_err(write_failure)?;
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// verify

/// Catalog bound flags shared by `verify` and `catalog`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Bounds {
    pub graphic_max_edges: Option<usize>,
    pub binary_max_cols: Option<usize>,
    pub binary_max_rank: Option<usize>,
    pub uniform_max: Option<usize>,
    pub clutter_n: Option<usize>,
    pub allow_large: bool,
}

/// Default bounds for the bundled sweeps (chosen to finish in minutes on
/// one core). Raising any of them requires `--allow-large`.
const DEFAULT_GRAPHIC_EDGES: usize = 8;
const DEFAULT_THEOREM3_EDGES: usize = 9;
const DEFAULT_BINARY_COLS: usize = 7;
const DEFAULT_BINARY_RANK: usize = 3;
const DEFAULT_UNIFORM_MAX: usize = 8;
const DEFAULT_CLUTTER_N: usize = 4;
const MAX_FREE_CLUTTER_N: usize = 5;

fn require_allow_large(
    value: usize,
    default: usize,
    flag: &str,
    allow_large: bool,
) -> Result<(), CommandError> {
    if value > default && !allow_large {
        return fail(format!(
            "{flag}={value} is above the default {default}; pass --allow-large to confirm"
        ));
    }
    Ok(())
}

fn reject_bounds(
    check: &str,
    bounds: &Bounds,
    allowed: &[&str],
) -> Result<(), CommandError> {
    let given: &[(&str, bool)] = &[
        ("--graphic-max-edges", bounds.graphic_max_edges.is_some()),
        ("--binary-max-cols", bounds.binary_max_cols.is_some()),
        ("--binary-max-rank", bounds.binary_max_rank.is_some()),
        ("--uniform-max", bounds.uniform_max.is_some()),
        ("--clutter-n", bounds.clutter_n.is_some()),
    ];
    for &(flag, present) in given {
        if present && !allowed.contains(&flag) {
            return fail(format!("`verify {check}` does not take {flag}"));
        }
    }
    Ok(())
}

fn theorem1_specs(bounds: &Bounds) -> Result<Vec<CatalogSpec>, CommandError> {
    let edges = bounds.graphic_max_edges.unwrap_or(DEFAULT_GRAPHIC_EDGES);
    let cols = bounds.binary_max_cols.unwrap_or(DEFAULT_BINARY_COLS);
    let rank = bounds.binary_max_rank.unwrap_or(DEFAULT_BINARY_RANK);
    let uniform = bounds.uniform_max.unwrap_or(DEFAULT_UNIFORM_MAX);
    require_allow_large(edges, DEFAULT_GRAPHIC_EDGES, "--graphic-max-edges", bounds.allow_large)?;
    require_allow_large(cols, DEFAULT_BINARY_COLS, "--binary-max-cols", bounds.allow_large)?;
    require_allow_large(rank, DEFAULT_BINARY_RANK, "--binary-max-rank", bounds.allow_large)?;
    require_allow_large(uniform, DEFAULT_UNIFORM_MAX, "--uniform-max", bounds.allow_large)?;
    let mut specs = vec![
        CatalogSpec::connected(CatalogFamily::Graphic { max_edges: edges }),
        CatalogSpec::connected(CatalogFamily::Binary {
            max_rank: rank,
            max_cols: cols,
        }),
        CatalogSpec::connected(CatalogFamily::Uniform { max_n: uniform }),
        CatalogSpec::connected(CatalogFamily::Named),
    ];
    for spec in &mut specs {
        spec.allow_large = bounds.allow_large;
    }
    // The named sweep covers every registry entry, including isomorphic
    // duplicates, so its deduplication is turned off.
    specs[3].dedup = false;
    Ok(specs)
}

fn finish_reports(
    out: &mut dyn Write,
    opts: &Options,
    what: &str,
    reports: &[VerificationReport],
) -> CmdResult {
    for report in reports {
        emit_report(out, opts, report).map_err(write_failure)?;
    }
    let all_passed = reports.iter().all(|r| r.passed());
    if !opts.json {
        writeln!(
            out,
            "verify {what}: {} ({} checks)",
            if all_passed { "pass" } else { "FAIL" },
            reports.len()
        )
        .map_err(write_failure)?;
    }
    Ok(if all_passed { 0 } else { 1 })
}

pub fn verify(out: &mut dyn Write, opts: &Options, what: &str, bounds: &Bounds) -> CmdResult {
    match what {
        "theorem1" => {
            reject_bounds(
                what,
                bounds,
                &[
                    "--graphic-max-edges",
                    "--binary-max-cols",
                    "--binary-max-rank",
                    "--uniform-max",
                ],
            )?;
            let specs = theorem1_specs(bounds)?;
            let mut reports = Vec::new();
            for spec in &specs {
                reports.push(verify_theorem1(spec).map_err(|e| CommandError(e.to_string()))?);
            }
            finish_reports(out, opts, what, &reports)
        }
        "theorem3" => {
            reject_bounds(what, bounds, &["--graphic-max-edges"])?;
            let edges = bounds.graphic_max_edges.unwrap_or(DEFAULT_THEOREM3_EDGES);
            require_allow_large(
                edges,
                DEFAULT_THEOREM3_EDGES,
                "--graphic-max-edges",
                bounds.allow_large,
            )?;
            let mut spec = CatalogSpec::connected(CatalogFamily::Graphic { max_edges: edges });
            spec.allow_large = bounds.allow_large;
            let report = verify_theorem3(&spec).map_err(|e| CommandError(e.to_string()))?;
            finish_reports(out, opts, what, &[report])
        }
        "axiom" => {
            reject_bounds(what, bounds, &["--clutter-n"])?;
            let ns: Vec<usize> = match bounds.clutter_n {
                Some(n) => vec![n],
                None => (1..=MAX_FREE_CLUTTER_N).collect(),
            };
            let mut reports = Vec::new();
            for n in ns {
                if n > MAX_FREE_CLUTTER_N && !bounds.allow_large {
                    return fail(format!(
                        "--clutter-n={n} is above the default limit {MAX_FREE_CLUTTER_N}; \
                         pass --allow-large to confirm"
                    ));
                }
                reports.push(
                    verify_axiom_equivalence(n).map_err(|e| CommandError(e.to_string()))?,
                );
            }
            finish_reports(out, opts, what, &reports)
        }
        "lemmas" => {
            reject_bounds(what, bounds, &[])?;
            let reports = verify_lemma_suite().map_err(|e| CommandError(e.to_string()))?;
            finish_reports(out, opts, what, &reports)
        }
        other => fail(format!(
            "unknown check `{other}` (expected theorem1, theorem3, axiom, or lemmas)"
        )),
    }
}

// ---------------------------------------------------------------------------
// catalog

fn sanitize_filename(label: &str) -> String {
    label
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect()
}

pub fn catalog_cmd(
    out: &mut dyn Write,
    opts: &Options,
    family: &str,
    bounds: &Bounds,
    connected: bool,
    dir: &Path,
) -> CmdResult {
    std::fs::create_dir_all(dir)
        .map_err(|e| CommandError(format!("cannot create {}: {e}", dir.display())))?;
    let mut index: Vec<(String, String, String)> = Vec::new();

    if family == "clutter" {
        let n = bounds.clutter_n.unwrap_or(DEFAULT_CLUTTER_N);
        if n > MAX_FREE_CLUTTER_N && !bounds.allow_large {
            return fail(format!(
                "--clutter-n={n} is above the default limit {MAX_FREE_CLUTTER_N}; \
                 pass --allow-large to confirm"
            ));
        }
        if connected {
            return fail("--connected does not apply to the clutter family");
        }
        let iter = enumerate_clutters(n).map_err(|e| CommandError(e.to_string()))?;
        for (i, fam) in iter.enumerate() {
            let name = format!("clutter_{i:06}.circuits");
            let encoding = encode_circuit_family(&fam);
            std::fs::write(dir.join(&name), &encoding)
                .map_err(|e| CommandError(format!("cannot write {name}: {e}")))?;
            let label = format!(
                "clutter(n={n}; {} members)",
                fam.len()
            );
            index.push((name, label, String::new()));
        }
    } else {
        let spec = catalog_spec_for(family, bounds, connected)?;
        let instances = catalog(&spec).map_err(|e| CommandError(e.to_string()))?;
        for (i, inst) in instances.iter().enumerate() {
            let name = match &inst.source {
                InstanceSource::Graph(_) => format!("graphic_{i:05}.graph"),
                InstanceSource::Gf2(_) => format!("binary_{i:05}.gf2"),
                InstanceSource::Uniform { r, n } => format!("uniform_{r}_{n}.matroid"),
                InstanceSource::Named(id) => {
                    format!("{}.matroid", sanitize_filename(&id.to_string()))
                }
            };
            std::fs::write(dir.join(&name), inst.encode())
                .map_err(|e| CommandError(format!("cannot write {name}: {e}")))?;
            index.push((name, inst.label(), inst.key_digest()));
        }
    }

    let mut index_text = String::new();
    for (name, label, key) in &index {
        index_text.push_str(&format!("{name}\t{label}\t{key}\n"));
    }
    std::fs::write(dir.join("index.txt"), index_text)
        .map_err(|e| CommandError(format!("cannot write index.txt: {e}")))?;

    let mut record = Record::new("catalog", dir.display().to_string(), "ok");
    record.param("family", family);
    record.param("count", index.len());
    if opts.json {
        emit(out, opts, &record).map_err(write_failure)?;
    } else {
        writeln!(
            out,
            "wrote {} instances of the {family} family to {}",
            index.len(),
            dir.display()
        )
        .map_err(write_failure)?;
    }
    Ok(0)
}

fn catalog_spec_for(
    family: &str,
    bounds: &Bounds,
    connected: bool,
) -> Result<CatalogSpec, CommandError> {
    let base = match family {
        "graphic" => {
            let edges = bounds.graphic_max_edges.unwrap_or(DEFAULT_GRAPHIC_EDGES);
            require_allow_large(
                edges,
                DEFAULT_GRAPHIC_EDGES,
                "--graphic-max-edges",
                bounds.allow_large,
            )?;
            CatalogFamily::Graphic { max_edges: edges }
        }
        "binary" => {
            let cols = bounds.binary_max_cols.unwrap_or(DEFAULT_BINARY_COLS);
            let rank = bounds.binary_max_rank.unwrap_or(DEFAULT_BINARY_RANK);
            require_allow_large(cols, DEFAULT_BINARY_COLS, "--binary-max-cols", bounds.allow_large)?;
            require_allow_large(rank, DEFAULT_BINARY_RANK, "--binary-max-rank", bounds.allow_large)?;
            CatalogFamily::Binary {
                max_rank: rank,
                max_cols: cols,
            }
        }
        "uniform" => {
            let max_n = bounds.uniform_max.unwrap_or(DEFAULT_UNIFORM_MAX);
            require_allow_large(max_n, DEFAULT_UNIFORM_MAX, "--uniform-max", bounds.allow_large)?;
            CatalogFamily::Uniform { max_n }
        }
        "named" => CatalogFamily::Named,
        other => {
            return fail(format!(
                "unknown family `{other}` (expected graphic, binary, uniform, named, or clutter)"
            ))
        }
    };
    let mut spec = CatalogSpec::new(base);
    spec.connected_only = connected;
    spec.allow_large = bounds.allow_large;
    Ok(spec)
}
