//! Command-line front end. Parsing is done by clap; every command returns
//! its standard output and exit code so that it can be driven from tests.
//!
//! Exit codes: 0 when every check passes (or the requested object was
//! produced), 1 on a verification failure, 2 on an input error.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lattice::{default_flag, load_matroid, verify_geometric, Flag, FlagSpec, GeometricLattice, MatroidSpec};
use crate::maps::{
    describe_cross_polytope, describe_selection, is_weak_map_covectors, is_weak_map_matroid, poset_map_search,
    retraction_map, verify_retraction, WeakMapReport, DEFAULT_MAX_ASSIGNMENTS,
};
use crate::om::{default_pivots, pivots_check, verify_embedding, CovectorSet, CoverRule, EmbeddingData, VectorConfig};
use crate::report::ValidationReport;
use crate::sphere::{arrangement_flats, atom_roundtrip, complex_from_json, verify_arrangement, ComplexJson, SphereRep};
use crate::topo::{cross_polytope_nerve_iso, reduced_homology, z2_free_check, HomologyProfile, SubsetBound};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hsrep", version, about = "Homotopy-sphere representations of matroids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print a machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the geometric-lattice axioms of a matroid file.
    Validate { matroid: PathBuf },
    /// Build S_G for every flat G and optionally write them as JSON.
    Represent {
        matroid: PathBuf,
        #[command(flatten)]
        flag: FlagArg,
        /// Directory for S_0.json, S_{..}.json and index.json.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify the arrangement axioms for one flag.
    Verify {
        matroid: PathBuf,
        #[command(flatten)]
        flag: FlagArg,
        /// Also check the facet nerve of every S_G against a cross-polytope.
        #[arg(long)]
        exact_nerve: bool,
    },
    /// Reduced integral homology of a complex file.
    Homology { complex: PathBuf },
    /// Oriented matroids from real vector configurations.
    #[command(subcommand)]
    Om(OmCommand),
    /// Compare the representations of two flags.
    #[command(subcommand)]
    Flags(FlagsCommand),
    /// Decide whether M weakly maps to N.
    Weakmap {
        m: PathBuf,
        n: PathBuf,
        /// Also search for a sign-preserving simplicial map S_0(F, M) -> S_0(F, N).
        #[arg(long)]
        search_poset_map: bool,
        #[command(flatten)]
        flag: FlagArg,
        #[arg(long, default_value_t = DEFAULT_MAX_ASSIGNMENTS)]
        max_assignments: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum OmCommand {
    /// List the covectors of a vector configuration.
    Covectors { vectors: PathBuf },
    /// Check the embedding of the covector poset into S_0.
    Embed {
        vectors: PathBuf,
        #[command(flatten)]
        flag: FlagArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum FlagsCommand {
    /// Select cross coatoms and verify the retraction between two flags.
    Compare {
        matroid: PathBuf,
        /// First flag: a path or `default`.
        first: String,
        /// Second flag: a path or `default`.
        second: String,
    },
}

#[derive(Debug, Args)]
pub struct FlagArg {
    /// Flag file, or `default` for the greedy lexicographic flag.
    #[arg(long = "flag", default_value = "default")]
    pub flag: String,
}

/// What a command prints and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn new(stdout: String, passed: bool) -> Self {
        Outcome {
            stdout,
            code: if passed { EXIT_PASS } else { EXIT_FAIL },
        }
    }
}

/// Runs a parsed command line. Errors are reported on standard output with
/// exit code 2, except an exhausted search budget, which is a failure to
/// certify and exits with 1.
pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(out) => out,
        Err(e) => {
            let code = match e {
                Error::SearchCapExceeded(_) => EXIT_FAIL,
                _ => EXIT_INPUT,
            };
            let stdout = if cli.json {
                format!("{}\n", json!({ "error": e.to_string() }))
            } else {
                format!("ERROR {e}\n")
            };
            Outcome { stdout, code }
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let json = cli.json;
    match &cli.command {
        Command::Validate { matroid } => cmd_validate(matroid, json),
        Command::Represent { matroid, flag, out } => cmd_represent(matroid, &flag.flag, out.as_deref(), json),
        Command::Verify {
            matroid,
            flag,
            exact_nerve,
        } => cmd_verify(matroid, &flag.flag, *exact_nerve, json),
        Command::Homology { complex } => cmd_homology(complex, json),
        Command::Om(OmCommand::Covectors { vectors }) => cmd_covectors(vectors, json),
        Command::Om(OmCommand::Embed { vectors, flag }) => cmd_embed(vectors, &flag.flag, json),
        Command::Flags(FlagsCommand::Compare { matroid, first, second }) => {
            cmd_flags(matroid, first, second, json)
        }
        Command::Weakmap {
            m,
            n,
            search_poset_map,
            flag,
            max_assignments,
        } => cmd_weakmap(m, n, search_poset_map.then_some(flag.flag.as_str()), *max_assignments, json),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Malformed(format!("cannot read {}: {e}", path.display())))
}

pub fn read_matroid(path: &Path) -> Result<GeometricLattice> {
    load_matroid(&MatroidSpec::from_json(&read(path)?)?)
}

/// Loads explicit flats without validation, so that a broken lattice can be
/// reported check by check. Other formats are geometric by construction.
fn read_matroid_unchecked(path: &Path) -> Result<GeometricLattice> {
    let spec = MatroidSpec::from_json(&read(path)?)?;
    match &spec {
        MatroidSpec::Flats { ground_set, flats } => {
            let ground = crate::elements::GroundSet::new(ground_set.iter().map(ToString::to_string))?;
            let sets = flats
                .iter()
                .map(|f| ground.subset(&f.iter().map(ToString::to_string).collect::<Vec<_>>()))
                .collect::<Result<Vec<_>>>()?;
            GeometricLattice::from_flats_unchecked(ground, sets)
        }
        _ => load_matroid(&spec),
    }
}

/// Resolves `default` or a path to a flag file.
pub fn read_flag(l: &GeometricLattice, selector: &str) -> Result<Flag> {
    if selector == "default" {
        return Ok(default_flag(l));
    }
    let spec: FlagSpec = serde_json::from_str(&read(Path::new(selector))?)?;
    spec.resolve(l)
}

fn render(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    s
}

fn text_report(title: &str, report: &ValidationReport) -> String {
    let verdict = if report.all_passed() { "PASS" } else { "FAIL" };
    format!("{title}\n{report}RESULT: {verdict}\n")
}

fn flat_name(l: &GeometricLattice, g: crate::elements::Flat) -> String {
    if g == l.bottom() {
        "0".into()
    } else {
        l.ground().format(g)
    }
}

pub fn cmd_validate(path: &Path, json: bool) -> Result<Outcome> {
    let l = read_matroid_unchecked(path)?;
    let report = verify_geometric(&l);
    let passed = report.all_passed();
    let stdout = if json {
        render(&json!({ "passed": passed, "report": report }))
    } else {
        let title = format!("{} flats on {} elements, rank {}", l.len(), l.ground().len(), l.rank());
        text_report(&title, &report)
    };
    Ok(Outcome::new(stdout, passed))
}

#[derive(Serialize)]
struct IndexEntry {
    flat: Vec<String>,
    corank: usize,
    file: String,
    vertices: usize,
    maximal_faces: usize,
}

pub fn cmd_represent(path: &Path, flag: &str, out: Option<&Path>, json: bool) -> Result<Outcome> {
    let l = read_matroid(path)?;
    let flag = read_flag(&l, flag)?;
    let rep = SphereRep::new(&l, flag.clone())?;
    let g = l.ground();
    if let Some(dir) = out {
        fs::create_dir_all(dir)?;
    }
    let mut index = Vec::new();
    let mut text = format!("flag {}\n", flag.describe(&l));
    for &x in l.flats() {
        let s = rep.build_s(x);
        let file = if x == l.bottom() {
            "S_0.json".to_string()
        } else {
            format!("S_{{{}}}.json", g.labels_of(x).join(","))
        };
        if let Some(dir) = out {
            fs::write(dir.join(&file), render(&s.to_json(g)))?;
        }
        let entry = IndexEntry {
            flat: g.labels_of(x),
            corank: l.corank_of(x),
            file,
            vertices: s.complex.vertices().len(),
            maximal_faces: s.complex.facets().len(),
        };
        let mut sizes: Vec<usize> = s.complex.facets().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes.dedup();
        let sizes: Vec<String> = sizes.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            text,
            "S_{}: {} maximal faces of {} vertices, {} vertices in all",
            flat_name(&l, x),
            entry.maximal_faces,
            if sizes.is_empty() { "0".to_string() } else { sizes.join("/") },
            entry.vertices
        );
        index.push(entry);
    }
    let index = json!({ "flag": flag.chain().iter().map(|&f| g.labels_of(f)).collect::<Vec<_>>(), "complexes": index });
    if let Some(dir) = out {
        fs::write(dir.join("index.json"), render(&index))?;
        let _ = writeln!(text, "wrote {} complexes to {}", l.len(), dir.display());
    }
    Ok(Outcome::new(if json { render(&index) } else { text }, true))
}

/// Arrangement axioms, intersection law over all flat pairs, recovery of the
/// lattice, freeness of the sign swap and, optionally, facet nerves.
pub fn verify_report(l: &GeometricLattice, flag: &Flag, exact_nerve: bool) -> Result<ValidationReport> {
    let rep = SphereRep::new(l, flag.clone())?;
    let arr = rep.arrangement();
    let mut report = verify_arrangement(&arr, SubsetBound::Auto);

    let mut law = Vec::new();
    for (i, &x) in l.flats().iter().enumerate() {
        for &y in &l.flats()[i..] {
            if !rep.intersection_law_check(x, y) {
                law.push(format!("S_{} ∩ S_{}", flat_name(l, x), flat_name(l, y)));
            }
        }
    }
    report.push_all("S_G ∩ S_H = S_{G ∨ H} for all flat pairs", law);

    let roundtrip = arrangement_flats(&arr).and_then(|flats| {
        atom_roundtrip(l, &flats).map_err(Error::Internal)
    });
    report.push(
        "arrangement recovers the lattice",
        roundtrip.is_ok(),
        roundtrip.err().map(|e| e.to_string()).unwrap_or_default(),
    );

    let s0 = rep.build_s(l.bottom()).complex;
    let free = z2_free_check(&s0, &rep.swap());
    report.push(
        "S_0 has a free Z2 action",
        matches!(free, Ok(true)),
        match free {
            Ok(true) => String::new(),
            Ok(false) => "a face is fixed".into(),
            Err(e) => e.to_string(),
        },
    );

    let mut homology = Vec::new();
    for &x in l.flats() {
        let h = reduced_homology(&rep.build_s(x).complex);
        let ok = h.is_sphere(l.corank_of(x) as isize - 1);
        if x == l.bottom() {
            report.push(format!("S_0 homology: {h}"), ok, "");
        } else if !ok {
            homology.push(format!("S_{}: {h}", flat_name(l, x)));
        }
    }
    report.push_all("S_G is a homology sphere of dimension corank(G) - 1", homology);

    if exact_nerve {
        let mut fails = Vec::new();
        for &x in l.flats() {
            let canon = rep.canonical_nerve_check(x);
            let search = cross_polytope_nerve_iso(&rep.build_s(x).complex, l.corank_of(x));
            if !canon.iso || !search.iso {
                let why = canon.witness.or(search.witness).unwrap_or_default();
                fails.push(format!("S_{}: {why}", flat_name(l, x)));
            }
        }
        report.push_all(format!("nerve is a cross-polytope's for all {} flats", l.len()), fails);
    }
    report.note(format!("flag {}", flag.describe(l)));
    Ok(report)
}

pub fn cmd_verify(path: &Path, flag: &str, exact_nerve: bool, json: bool) -> Result<Outcome> {
    let l = read_matroid(path)?;
    let flag = read_flag(&l, flag)?;
    let report = verify_report(&l, &flag, exact_nerve)?;
    let passed = report.all_passed();
    let stdout = if json {
        render(&json!({ "passed": passed, "report": report }))
    } else {
        text_report(&format!("rank {} matroid with {} flats", l.rank(), l.len()), &report)
    };
    Ok(Outcome::new(stdout, passed))
}

pub fn cmd_homology(path: &Path, json: bool) -> Result<Outcome> {
    let raw: ComplexJson<Value> = serde_json::from_str(&read(path)?)?;
    let k = complex_from_json(&raw)?;
    let h: HomologyProfile = reduced_homology(&k);
    let stdout = if json {
        render(&h)
    } else {
        let mut s = format!("{} vertices, {} maximal faces, dimension {}\n", raw.vertices.len(), k.facets().len(), k.dimension());
        for d in &h.dims {
            let _ = writeln!(s, "d={} betti={} torsion={:?}", d.d, d.betti, d.torsion);
        }
        let _ = writeln!(s, "{h}");
        s
    };
    Ok(Outcome::new(stdout, true))
}

fn read_vectors(path: &Path) -> Result<VectorConfig> {
    VectorConfig::from_json(&read(path)?)
}

pub fn cmd_covectors(path: &Path, json: bool) -> Result<Outcome> {
    let v = read_vectors(path)?;
    let cov = CovectorSet::from_vectors(&v)?;
    let strings: Vec<String> = cov.covectors().iter().map(ToString::to_string).collect();
    let stdout = if json {
        render(&json!({ "ground_set": v.ground().labels(), "covectors": strings }))
    } else {
        let mut s = format!("{} covectors over {}\n", strings.len(), v.ground().labels().join(" "));
        for c in &strings {
            let _ = writeln!(s, "{c}");
        }
        s
    };
    Ok(Outcome::new(stdout, true))
}

/// Pivot check, embedding checks and the carrier check of the covers at
/// every flat.
pub fn embed_report(l: &GeometricLattice, flag: &Flag, cov: &CovectorSet) -> Result<ValidationReport> {
    let pivots = default_pivots(flag);
    let mut report = ValidationReport::new();
    report.extend("pivots: ", pivots_check(l, flag, cov, &pivots)?);
    let rep = SphereRep::new(l, flag.clone())?;
    let data = EmbeddingData::new(rep, cov, pivots)?;
    report.extend("", verify_embedding(&data));
    let mut carried = Vec::new();
    for &g in l.flats() {
        if g == l.top() {
            continue;
        }
        let covers = data.build_covers(g, CoverRule::Conformal)?;
        let r = covers.carrier_check(SubsetBound::Auto)?;
        if let Some(c) = r.failures().next() {
            carried.push(format!("G = {}: {}: {}", flat_name(l, g), c.name, c.detail));
        };
    }
    report.push_all("covers are carried at every flat", carried);
    Ok(report)
}

pub fn cmd_embed(path: &Path, flag: &str, json: bool) -> Result<Outcome> {
    let v = read_vectors(path)?;
    let l = v.lattice()?;
    let flag = read_flag(&l, flag)?;
    let cov = CovectorSet::from_vectors(&v)?;
    let report = embed_report(&l, &flag, &cov)?;
    let passed = report.all_passed();
    let stdout = if json {
        render(&json!({ "passed": passed, "covectors": cov.len(), "report": report }))
    } else {
        let title = format!("{} covectors, flag {}", cov.len(), flag.describe(&l));
        text_report(&title, &report)
    };
    Ok(Outcome::new(stdout, passed))
}

pub fn cmd_flags(path: &Path, first: &str, second: &str, json: bool) -> Result<Outcome> {
    let l = read_matroid(path)?;
    let f = read_flag(&l, first)?;
    let g = read_flag(&l, second)?;
    let d = retraction_map(&l, &f, &g)?;
    let report = verify_retraction(&d);
    let passed = report.all_passed();
    let stdout = if json {
        let ground = l.ground();
        render(&json!({
            "passed": passed,
            "selection": d.selection.coatoms.iter().map(|&c| ground.labels_of(c)).collect::<Vec<_>>(),
            "f_parts": d.selection.f_parts,
            "g_parts": d.selection.g_parts,
            "report": report,
        }))
    } else {
        let title = format!(
            "F = {}\nG = {}\nselection: {}\nP = {}",
            f.describe(&l),
            g.describe(&l),
            describe_selection(&l, &d.selection),
            describe_cross_polytope(&l, &d)
        );
        text_report(&title, &report)
    };
    Ok(Outcome::new(stdout, passed))
}

enum WeakInput {
    Matroid(GeometricLattice),
    Vectors(VectorConfig),
}

fn read_weak_input(path: &Path) -> Result<WeakInput> {
    let text = read(path)?;
    let value: Value = serde_json::from_str(&text)?;
    if value.get("format").is_some() {
        Ok(WeakInput::Matroid(load_matroid(&MatroidSpec::from_json(&text)?)?))
    } else {
        Ok(WeakInput::Vectors(VectorConfig::from_json(&text)?))
    }
}

fn weak_text(report: &WeakMapReport) -> String {
    let mut s = format!("WEAK MAP: {}\n", if report.weak_map { "yes" } else { "no" });
    for w in &report.rank_witnesses {
        let _ = writeln!(
            s,
            "witness {{{}}}: rank {} in M, {} in N",
            w.subset.join(","),
            w.rank_m,
            w.rank_n
        );
    }
    for x in &report.uncovered {
        let _ = writeln!(s, "witness covector {x} of N lies below no covector of M");
    }
    if let Some(u) = report.underlying_weak_map {
        let _ = writeln!(s, "underlying matroids: {}", if u { "yes" } else { "no" });
    }
    s
}

pub fn cmd_weakmap(m: &Path, n: &Path, search: Option<&str>, max: u64, json: bool) -> Result<Outcome> {
    let (report, lattices) = match (read_weak_input(m)?, read_weak_input(n)?) {
        (WeakInput::Matroid(a), WeakInput::Matroid(b)) => (is_weak_map_matroid(&a, &b)?, (a, b)),
        (WeakInput::Vectors(a), WeakInput::Vectors(b)) => {
            let ca = CovectorSet::from_vectors(&a)?;
            let cb = CovectorSet::from_vectors(&b)?;
            (is_weak_map_covectors(&ca, &cb)?, (a.lattice()?, b.lattice()?))
        }
        _ => {
            return Err(Error::Malformed(
                "both inputs must be matroids or both vector configurations".into(),
            ))
        }
    };
    let mut passed = report.weak_map;
    let mut text = weak_text(&report);
    let mut result = None;
    if let Some(selector) = search {
        let (a, b) = &lattices;
        let flag = read_flag(a, selector)?;
        let r = poset_map_search(a, b, &flag, max)?;
        passed &= r.found;
        let _ = writeln!(text, "flag {}", flag.describe(a));
        if r.found {
            let _ = writeln!(text, "POSET MAP: found");
            for (v, w) in r.map.iter().flatten() {
                let _ = writeln!(text, "{v} -> {w}");
            }
        } else {
            let _ = writeln!(text, "POSET MAP: NONE");
            if let Some(o) = &r.obstruction {
                let _ = writeln!(text, "obstruction: {{{}}}", o.face.join(", "));
                let _ = writeln!(text, "reason: {}", o.reason);
            }
        }
        let _ = writeln!(text, "assignments tried: {}", r.assignments);
        result = Some(r);
    }
    let stdout = if json {
        render(&json!({ "weak_map": report, "search": result }))
    } else {
        text
    };
    Ok(Outcome::new(stdout, passed))
}
