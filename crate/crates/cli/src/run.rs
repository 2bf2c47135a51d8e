use std::f64::consts::PI;
use std::fs;
use std::path::{Path, PathBuf};

use minkq::lorentz::{CausalClass, SignatureLabel};
use minkq::revolution::{effective_problem, GridSpec, RevolutionFamily, DEFAULT_GRID_POINTS};
use minkq::spectral::{
    box_spectrum, continuity_residual, poschl_teller_exact, propagate, solve_bound_states, solve_window,
    sphere_effective_solve_with, sphere_reference_exact, zero_energy_modes, BoxSpec, Spectrum, Wavefunction1D,
    MIN_GRID_POINTS,
};
use minkq::surface::point_geometry;
use rayon::prelude::*;
use serde_json::json;
use sha2::{Digest, Sha256};

use crate::config::{JobConfig, JobKind, ProfileRef, SampleConfig, SCHEMA_VERSION};
use crate::error::{CliError, Diagnostic};
use crate::registry::{label, resolve, family_sample_refs, Resolved};
use crate::table::{write_atomic, Cell, Metadata, ResultTable, TOOL_NAME, TOOL_VERSION};

/// Profiles a job runs over; classification defaults to one sample per family.
pub fn job_profiles(config: &JobConfig) -> Vec<ProfileRef> {
    if config.profiles.is_empty() && config.kind == JobKind::Classify {
        family_sample_refs()
    } else {
        config.profiles.clone()
    }
}

fn is_integer(x: f64) -> bool {
    x.is_finite() && x.fract() == 0.0
}

/// Schema and range checks without running anything.
pub fn validate(config: &JobConfig) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let mut bad = |code: &str, msg: String| out.push(Diagnostic::new(code, msg));
    if config.schema != SCHEMA_VERSION {
        bad("ConfigParse", format!("unsupported schema {:?}, expected {SCHEMA_VERSION:?}", config.schema));
    }
    let kind = config.kind;
    let profiles = job_profiles(config);
    if kind != JobKind::Box && profiles.is_empty() {
        bad("ConfigParse", format!("a {} job needs at least one profile", kind.as_str()));
    }
    let needs_ell = matches!(kind, JobKind::Potential | JobKind::Spectrum | JobKind::Propagate);
    if needs_ell && config.ell.is_empty() {
        bad("ConfigParse", format!("a {} job needs a non-empty ell list", kind.as_str()));
    }
    if let Some(g) = config.grid {
        if let Some(n) = g.n {
            if n < MIN_GRID_POINTS {
                let e = minkq::Error::GridTooCoarse { n, min: MIN_GRID_POINTS };
                bad(e.name(), e.to_string());
            }
        }
        if let Some(l) = g.length {
            if !(l.is_finite() && l > 0.0) {
                bad("InvalidGrid", format!("grid L must be positive, got {l}"));
            }
        }
    }
    if config.solver.max_states == 0 {
        bad("OutOfRange", "solver.max_states must be at least 1".into());
    }
    let s = config.samples;
    if s.count == 0 {
        bad("OutOfRange", "samples.count must be at least 1".into());
    }
    if let (Some(a), Some(b)) = (s.from, s.to) {
        if !(a.is_finite() && b.is_finite() && a <= b) {
            bad("OutOfRange", format!("samples need from <= to, got [{a}, {b}]"));
        }
    }
    if !s.q1.is_finite() {
        bad("OutOfRange", "samples.q1 must be finite".into());
    }
    for p in &profiles {
        let resolved = match resolve(p) {
            Ok(r) => r,
            Err(d) => {
                out.push(d);
                continue;
            }
        };
        let mut bad = |code: &str, msg: String| out.push(Diagnostic::new(code, msg));
        match &resolved {
            Resolved::Sphere { .. } => {
                if !matches!(kind, JobKind::Potential | JobKind::Spectrum) {
                    bad(
                        "UnsupportedProfile",
                        format!("{} is a Euclidean reference and only supports potential and spectrum jobs", label(p)),
                    );
                }
                if needs_ell {
                    for &ell in &config.ell {
                        if !is_integer(ell) {
                            let e = minkq::Error::NonIntegerEll { ell };
                            bad(e.name(), format!("{}: {e}", label(p)));
                        } else if ell == 0.0 && kind == JobKind::Spectrum {
                            let e = minkq::Error::SingularChannel;
                            bad(e.name(), format!("{}: {e}", label(p)));
                        }
                    }
                }
            }
            Resolved::Family(f) => {
                if needs_ell {
                    for &ell in &config.ell {
                        if !ell.is_finite() || (f.tag.periodic() && !is_integer(ell)) {
                            let e = minkq::Error::NonIntegerEll { ell };
                            bad(e.name(), format!("{}: {e}", label(p)));
                        }
                    }
                }
                if let (Some(a), Some(b)) = (s.from, s.to) {
                    let (lo, hi) = f.profile.domain();
                    if a <= lo || b >= hi {
                        bad("OutOfDomain", format!("{}: samples [{a}, {b}] leave the open domain ({lo}, {hi})", label(p)));
                    }
                }
            }
        }
    }
    match (kind, config.box_params) {
        (JobKind::Box, None) => out.push(Diagnostic::new("ConfigParse", "a box job needs a \"box\" section")),
        (_, Some(b)) => {
            for (k, v) in [("a", b.a), ("b", b.b), ("c", b.c)] {
                if !(v.is_finite() && v > 0.0) {
                    out.push(Diagnostic::new("OutOfRange", format!("box side {k} must be positive, got {v}")));
                }
            }
            if b.n_max == 0 || b.n_max > 64 {
                out.push(Diagnostic::new("OutOfRange", format!("box n_max must be in 1..=64, got {}", b.n_max)));
            }
        }
        _ => {}
    }
    match (kind, config.propagate) {
        (JobKind::Propagate, None) => {
            out.push(Diagnostic::new("ConfigParse", "a propagate job needs a \"propagate\" section"))
        }
        (_, Some(p)) => {
            if !(p.dt.is_finite() && p.dt > 0.0) {
                out.push(Diagnostic::new("OutOfRange", format!("propagate.dt must be positive, got {}", p.dt)));
            }
            if !(p.sigma.is_finite() && p.sigma > 0.0) {
                out.push(Diagnostic::new("OutOfRange", format!("propagate.sigma must be positive, got {}", p.sigma)));
            }
            if p.steps == 0 || p.records == 0 {
                out.push(Diagnostic::new("OutOfRange", "propagate.steps and propagate.records must be at least 1"));
            }
            if !(p.x0.is_finite() && p.k0.is_finite()) {
                out.push(Diagnostic::new("OutOfRange", "propagate.x0 and propagate.k0 must be finite"));
            }
        }
        _ => {}
    }
    out
}

/// Parse and check a config file; an empty list means it is valid.
pub fn validate_config(config_path: &Path) -> Result<Vec<Diagnostic>, CliError> {
    Ok(validate(&JobConfig::load(config_path)?))
}

fn grid_spec(config: &JobConfig) -> GridSpec {
    let g = config.grid.unwrap_or(crate::config::GridConfig { length: None, n: None });
    GridSpec { length: g.length, n: g.n.unwrap_or(DEFAULT_GRID_POINTS) }
}

/// `q2` sample points: `count` points spanning `[from, to]`, or cell
/// midpoints of the profile's validation range.
fn sample_points(s: &SampleConfig, range: (f64, f64)) -> Vec<f64> {
    let n = s.count;
    match (s.from, s.to) {
        (Some(a), Some(b)) if n > 1 => (0..n).map(|i| a + (b - a) * i as f64 / (n - 1) as f64).collect(),
        (Some(a), _) if n == 1 => vec![a],
        _ => {
            let (a, b) = (s.from.unwrap_or(range.0), s.to.unwrap_or(range.1));
            (0..n).map(|i| a + (b - a) * (i as f64 + 0.5) / n as f64).collect()
        }
    }
}

fn profile_range(r: &Resolved) -> (f64, f64) {
    match r {
        Resolved::Family(f) => f.profile.sample_range(),
        Resolved::Sphere { r } => (0.0, PI * r),
    }
}

fn resolve_all(profiles: &[ProfileRef]) -> Result<Vec<(String, Resolved)>, CliError> {
    profiles
        .iter()
        .map(|p| resolve(p).map(|r| (label(p), r)).map_err(|d| CliError::Invalid(vec![d])))
        .collect()
}

/// Effective potential decomposition `(q2, v_eff, v_s, centripetal, curve)`.
pub fn emit_potential_profile(
    fam: &RevolutionFamily,
    ell: f64,
    q2: &[f64],
    metadata: Metadata,
) -> Result<ResultTable, minkq::Error> {
    let mut t = ResultTable::new("potential_profile", &["q2", "v_eff", "v_s", "centripetal", "curve"], metadata);
    for &s in q2 {
        let p = fam.potential_terms(ell, s)?;
        t.push(vec![s.into(), p.v_eff.into(), p.v_s.into(), p.centripetal.into(), p.curve.into()]);
    }
    Ok(t)
}

fn sphere_potential_rows(r: f64, ell: f64, q2: &[f64]) -> Vec<Vec<Cell>> {
    q2.iter()
        .map(|&s| {
            let c = 1.0 / (s / r).sin();
            let centripetal = (ell * ell - 0.25) * c * c / (r * r);
            let curve = -0.25 / (r * r);
            vec![s.into(), (centripetal + curve).into(), 0.0.into(), centripetal.into(), curve.into()]
        })
        .collect()
}

fn with_prefix(prefix: &[Cell], rows: Vec<Vec<Cell>>) -> Vec<Vec<Cell>> {
    rows.into_iter().map(|r| prefix.iter().cloned().chain(r).collect()).collect()
}

fn collect_rows(chunks: Vec<Result<Vec<Vec<Cell>>, CliError>>, table: &mut ResultTable) -> Result<(), CliError> {
    for chunk in chunks {
        for row in chunk? {
            table.push(row);
        }
    }
    Ok(())
}

fn tasks(profiles: &[(String, Resolved)], ells: &[f64]) -> Vec<(usize, f64)> {
    (0..profiles.len()).flat_map(|i| ells.iter().map(move |&l| (i, l))).collect()
}

fn classify(config: &JobConfig, meta: &Metadata) -> Result<Vec<ResultTable>, CliError> {
    let profiles = resolve_all(&job_profiles(config))?;
    let mut t = ResultTable::new(
        "classify",
        &["profile", "family", "axis", "eta", "epsilon", "signature", "surface_class", "expected_class", "points", "consistent"],
        meta.clone(),
    );
    for (name, r) in &profiles {
        let f = r.family().expect("validated");
        let mut labels = Vec::new();
        for s in sample_points(&config.samples, f.profile.sample_range()) {
            let geo = point_geometry(f, [config.samples.q1, s])?;
            labels.push(geo.forms.first().signature()?.label);
        }
        let class_of = |l: SignatureLabel| match l {
            SignatureLabel::Riemannian | SignatureLabel::NegativeDefinite => CausalClass::SpaceLike,
            SignatureLabel::Lorentzian => CausalClass::TimeLike,
            SignatureLabel::Degenerate => CausalClass::LightLike,
        };
        let found = class_of(labels[0]);
        let consistent = labels.iter().all(|l| class_of(*l) == f.tag.surface_class());
        t.push(vec![
            name.clone().into(),
            f.tag.as_str().into(),
            (if f.tag.axis_timelike() { "time-like" } else { "space-like" }).into(),
            i64::from(f.eta()).into(),
            i64::from(f.epsilon()).into(),
            labels[0].as_str().into(),
            found.as_str().into(),
            f.tag.surface_class().as_str().into(),
            labels.len().into(),
            consistent.into(),
        ]);
    }
    Ok(vec![t])
}

fn curvature(config: &JobConfig, meta: &Metadata) -> Result<Vec<ResultTable>, CliError> {
    let profiles = resolve_all(&config.profiles)?;
    let mut t = ResultTable::new(
        "curvature",
        &[
            "profile", "q1", "q2", "g11", "g12", "g22", "epsilon", "a11", "a12", "a21", "a22", "mean_curvature",
            "gaussian_curvature", "v_s", "k1_closed", "k2_closed", "diagonalizable",
        ],
        meta.clone(),
    );
    for (name, r) in &profiles {
        let f = r.family().expect("validated");
        for s in sample_points(&config.samples, f.profile.sample_range()) {
            let q = [config.samples.q1, s];
            let geo = point_geometry(f, q)?;
            let (k1, k2) = f.closed_form_curvatures(s)?;
            let a = geo.shape.a;
            t.push(vec![
                name.clone().into(),
                q[0].into(),
                s.into(),
                geo.forms.g11.into(),
                geo.forms.g12.into(),
                geo.forms.g22.into(),
                i64::from(geo.forms.epsilon).into(),
                a[0][0].into(),
                a[0][1].into(),
                a[1][0].into(),
                a[1][1].into(),
                geo.shape.mean_curvature.into(),
                geo.shape.gaussian_curvature.into(),
                geo.shape.geometric_potential().into(),
                k1.into(),
                k2.into(),
                geo.shape.diagonalizable.into(),
            ]);
        }
    }
    Ok(vec![t])
}

fn potential(config: &JobConfig, meta: &Metadata) -> Result<Vec<ResultTable>, CliError> {
    let profiles = resolve_all(&config.profiles)?;
    let mut t = ResultTable::new(
        "potential",
        &["profile", "ell", "q2", "v_eff", "v_s", "centripetal", "curve"],
        meta.clone(),
    );
    let chunks: Vec<_> = tasks(&profiles, &config.ell)
        .into_par_iter()
        .map(|(i, ell)| {
            let (name, r) = &profiles[i];
            let q2 = sample_points(&config.samples, profile_range(r));
            let rows = match r {
                Resolved::Family(f) => emit_potential_profile(f, ell, &q2, meta.clone())?.rows,
                Resolved::Sphere { r } => sphere_potential_rows(*r, ell, &q2),
            };
            Ok(with_prefix(&[name.clone().into(), ell.into()], rows))
        })
        .collect();
    collect_rows(chunks, &mut t)?;
    Ok(vec![t])
}

struct Channel {
    spectrum: Spectrum,
    exact: Vec<f64>,
    floor: f64,
    edge: f64,
}

fn solve_channel(r: &Resolved, name: &str, ell: f64, config: &JobConfig) -> Result<Channel, CliError> {
    let max = config.solver.max_states;
    match r {
        Resolved::Family(f) => {
            let p = effective_problem(f, ell, grid_spec(config))?;
            let spectrum = solve_bound_states(&p, max)?;
            let edge = solve_window(&p, f64::NEG_INFINITY, f64::INFINITY, 1)?;
            let edge = if p.eta > 0 { edge.eigenvalues[0] } else { *edge.eigenvalues.last().unwrap() };
            let exact = if name.starts_with("one_sheeted_hyperboloid") {
                poschl_teller_exact(f.profile.scale(), ell)
            } else {
                Vec::new()
            };
            let floor = f64::from(p.eta) * p.continuum_floor();
            Ok(Channel { spectrum, exact, floor, edge })
        }
        Resolved::Sphere { r } => {
            let n = config.grid.and_then(|g| g.n).unwrap_or(minkq::spectral::solve::SPHERE_DEFAULT_POINTS);
            let l = ell as i64;
            let spectrum = sphere_effective_solve_with(*r, l, max, n)?;
            let exact = sphere_reference_exact(*r, l, l.abs() + max as i64 - 1);
            let edge = spectrum.eigenvalues.first().copied().unwrap_or(f64::NAN);
            Ok(Channel { spectrum, exact, floor: f64::INFINITY, edge })
        }
    }
}

fn spectrum(config: &JobConfig, meta: &Metadata) -> Result<Vec<ResultTable>, CliError> {
    let profiles = resolve_all(&config.profiles)?;
    let mut levels = ResultTable::new(
        "spectrum",
        &["profile", "ell", "index", "energy", "exact", "abs_error", "kind"],
        meta.clone(),
    );
    let mut channels = ResultTable::new(
        "spectrum_channels",
        &["profile", "ell", "bound_states", "reported", "continuum_threshold", "edge_eigenvalue"],
        meta.clone(),
    );
    let results: Vec<_> = tasks(&profiles, &config.ell)
        .into_par_iter()
        .map(|(i, ell)| {
            let (name, r) = &profiles[i];
            solve_channel(r, name, ell, config).map(|c| (name.clone(), ell, c))
        })
        .collect();
    for res in results {
        let (name, ell, c) = res?;
        for (k, e) in c.spectrum.eigenvalues.iter().enumerate() {
            let exact = c.exact.get(k).copied();
            levels.push(vec![
                name.clone().into(),
                ell.into(),
                k.into(),
                (*e).into(),
                exact.into(),
                exact.map(|x| (e - x).abs()).into(),
                "bound".into(),
            ]);
        }
        let threshold = if c.floor.is_finite() { Cell::Real(c.floor) } else { Cell::Empty };
        channels.push(vec![
            name.into(),
            ell.into(),
            c.spectrum.found.into(),
            c.spectrum.len().into(),
            threshold,
            c.edge.into(),
        ]);
    }
    Ok(vec![levels, channels])
}

fn propagate_job(config: &JobConfig, meta: &Metadata) -> Result<Vec<ResultTable>, CliError> {
    let profiles = resolve_all(&config.profiles)?;
    let pc = config.propagate.expect("validated");
    let mut t = ResultTable::new(
        "propagate",
        &["profile", "ell", "step", "time", "probability", "drift", "continuity_residual"],
        meta.clone(),
    );
    let chunks: Vec<_> = tasks(&profiles, &config.ell)
        .into_par_iter()
        .map(|(i, ell)| -> Result<Vec<Vec<Cell>>, CliError> {
            let (name, r) = &profiles[i];
            let f = r.family().expect("validated");
            let p = effective_problem(f, ell, grid_spec(config))?;
            let psi0 = Wavefunction1D::gaussian(p.grid, pc.x0, pc.sigma, pc.k0)?;
            let records = pc.records.min(pc.steps);
            let mut rows = Vec::new();
            let mut psi = psi0.clone();
            let mut done = 0;
            for k in 1..=records {
                let target = pc.steps * k / records;
                if target > done + 1 {
                    psi = propagate(&p, &psi, pc.dt, target - done - 1)?;
                }
                let next = propagate(&p, &psi, pc.dt, 1)?;
                let res = continuity_residual(&p, &psi, &next, pc.dt)?;
                psi = next;
                done = target;
                let prob = psi.probability();
                rows.push(vec![
                    name.clone().into(),
                    ell.into(),
                    done.into(),
                    psi.time.into(),
                    prob.into(),
                    (prob - psi0.norm).into(),
                    res.into(),
                ]);
            }
            Ok(rows)
        })
        .collect();
    collect_rows(chunks, &mut t)?;
    Ok(vec![t])
}

fn box_job(config: &JobConfig, meta: &Metadata) -> Result<Vec<ResultTable>, CliError> {
    let b = config.box_params.expect("validated");
    let mut t = ResultTable::new("box", &["n1", "n2", "n3", "energy", "energy_over_pi2"], meta.clone());
    for n1 in 1..=b.n_max {
        for n2 in 1..=b.n_max {
            for n3 in 1..=b.n_max {
                let e = box_spectrum(&BoxSpec::new(b.a, b.b, b.c, [n1, n2, n3])?);
                t.push(vec![n1.into(), n2.into(), n3.into(), e.into(), (e / (PI * PI)).into()]);
            }
        }
    }
    let scale = PI * PI * [b.a, b.b, b.c].iter().map(|s| 1.0 / (s * s)).fold(0.0, f64::max);
    let mut z = ResultTable::new("box_zero_modes", &["n1", "n2", "n3"], meta.clone());
    for [n1, n2, n3] in zero_energy_modes(b.a, b.b, b.c, b.n_max, 1e-12 * scale * f64::from(b.n_max).powi(2))? {
        z.push(vec![n1.into(), n2.into(), n3.into()]);
    }
    Ok(vec![t, z])
}

/// Run a validated config in memory.
pub fn execute(config: &JobConfig) -> Result<Vec<ResultTable>, CliError> {
    let diags = validate(config);
    if !diags.is_empty() {
        return Err(CliError::Invalid(diags));
    }
    let meta = Metadata::new(config.hash());
    match config.kind {
        JobKind::Classify => classify(config, &meta),
        JobKind::Curvature => curvature(config, &meta),
        JobKind::Potential => potential(config, &meta),
        JobKind::Spectrum => spectrum(config, &meta),
        JobKind::Propagate => propagate_job(config, &meta),
        JobKind::Box => box_job(config, &meta),
    }
}

/// Plain-text overview of a run, one section per table.
pub fn render_report(config: &JobConfig, tables: &[ResultTable]) -> String {
    let mut out = format!(
        "{TOOL_NAME} {TOOL_VERSION}: {} job\nconfig_hash {}\nunits {}\n",
        config.kind.as_str(),
        config.hash(),
        crate::table::UNITS
    );
    for t in tables {
        out += &format!("\n[{}] {} rows\n", t.name, t.rows.len());
        out += &t.to_text(40);
    }
    out
}

#[derive(Debug, Clone)]
pub struct RunReport {
    pub tables: Vec<ResultTable>,
    pub files: Vec<PathBuf>,
    pub summary_path: PathBuf,
}

/// Load, validate and run a config, writing one CSV per table and
/// `summary.json` into `out_dir`.
pub fn run_job(config_path: &Path, out_dir: &Path) -> Result<RunReport, CliError> {
    let config = JobConfig::load(config_path)?;
    let tables = execute(&config)?;
    fs::create_dir_all(out_dir)?;
    let mut files = Vec::new();
    let mut outputs = Vec::new();
    for t in &tables {
        let bytes = t.write(out_dir)?;
        let file = format!("{}.csv", t.name);
        outputs.push(json!({
            "file": file,
            "rows": t.rows.len(),
            "sha256": hex::encode(Sha256::digest(&bytes)),
        }));
        files.push(out_dir.join(file));
    }
    let summary = json!({
        "tool": format!("{TOOL_NAME} {TOOL_VERSION}"),
        "units": crate::table::UNITS,
        "kind": config.kind.as_str(),
        "config_hash": config.hash(),
        "outputs": outputs,
        "report": "report.txt",
        "config": serde_json::to_value(&config).expect("config serializes"),
    });
    write_atomic(&out_dir.join("report.txt"), render_report(&config, &tables).as_bytes())?;
    let summary_path = out_dir.join("summary.json");
    let mut text = serde_json::to_string_pretty(&summary).expect("summary serializes");
    text.push('\n');
    write_atomic(&summary_path, text.as_bytes())?;
    Ok(RunReport { tables, files, summary_path })
}
