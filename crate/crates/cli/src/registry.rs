//! Built-in profiles addressable from a config file.

use minkq::revolution::{build_family, FamilyTag, ProfileCurve, RevolutionFamily};

use crate::config::ProfileRef;
use crate::error::Diagnostic;

/// `(name, tag, [(parameter, default)])`; the sphere has no tag.
pub type Entry = (&'static str, Option<FamilyTag>, &'static [(&'static str, f64)]);

pub const REGISTRY: &[Entry] = &[
    ("one_sheeted_hyperboloid", Some(FamilyTag::TimelikeAxisTimelikeCurve), &[("R", 1.0)]),
    ("two_sheeted_hyperboloid", Some(FamilyTag::TimelikeAxisSpacelikeCurve), &[("R", 1.0)]),
    ("sphere_euclidean", None, &[("R", 1.0)]),
    ("pseudo_cylinder", Some(FamilyTag::SpacelikeAxisSpacelikePlane), &[("u0", 1.0)]),
    ("boosted_timelike_hyperbola", Some(FamilyTag::SpacelikeAxisTimelikePlaneTimelikeCurve), &[("a", 1.0), ("u0", 2.0)]),
    ("boosted_spacelike_hyperbola", Some(FamilyTag::SpacelikeAxisTimelikePlaneSpacelikeCurve), &[("a", 1.0), ("u0", 0.5)]),
    ("flat_plane", Some(FamilyTag::TimelikeAxisSpacelikeCurve), &[("c", 0.0)]),
];

/// One sample profile per causal family, in the order of [`FamilyTag::ALL`].
pub fn family_sample_refs() -> Vec<ProfileRef> {
    ["boosted_timelike_hyperbola", "boosted_spacelike_hyperbola", "pseudo_cylinder", "one_sheeted_hyperboloid", "two_sheeted_hyperboloid"]
        .into_iter()
        .map(|name| ProfileRef { name: name.to_string(), params: Default::default() })
        .collect()
}

#[derive(Debug, Clone)]
pub enum Resolved {
    Family(RevolutionFamily),
    /// Euclidean round sphere, used as a reference problem only
    Sphere { r: f64 },
}

impl Resolved {
    pub fn family(&self) -> Option<&RevolutionFamily> {
        match self {
            Resolved::Family(f) => Some(f),
            Resolved::Sphere { .. } => None,
        }
    }
}

/// Human-readable label, e.g. `one_sheeted_hyperboloid(R=1)`.
pub fn label(p: &ProfileRef) -> String {
    match lookup(&p.name) {
        Some((_, _, defaults)) => {
            let args: Vec<String> = defaults
                .iter()
                .map(|(k, d)| format!("{k}={}", p.params.get(*k).copied().unwrap_or(*d)))
                .collect();
            format!("{}({})", p.name, args.join(","))
        }
        None => p.name.clone(),
    }
}

fn lookup(name: &str) -> Option<&'static Entry> {
    REGISTRY.iter().find(|(n, _, _)| *n == name)
}

/// Resolve a profile reference, or explain why it cannot be resolved.
pub fn resolve(p: &ProfileRef) -> Result<Resolved, Diagnostic> {
    let (name, tag, defaults) = lookup(&p.name).ok_or_else(|| {
        let known: Vec<&str> = REGISTRY.iter().map(|r| r.0).collect();
        Diagnostic::new("UnknownProfile", format!("unknown profile {:?}; known: {}", p.name, known.join(", ")))
    })?;
    for key in p.params.keys() {
        if !defaults.iter().any(|(k, _)| k == key) {
            return Err(Diagnostic::new("ConfigParse", format!("profile {name} has no parameter {key:?}")));
        }
    }
    let get = |k: &str| p.params.get(k).copied().unwrap_or_else(|| defaults.iter().find(|d| d.0 == k).unwrap().1);
    let range = |k: &str, ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            Err(Diagnostic::new("OutOfRange", format!("{name}: parameter {k} = {} {what}", get(k))))
        }
    };
    let profile = match *name {
        "sphere_euclidean" => {
            range("R", get("R") > 0.0 && get("R").is_finite(), "must be positive")?;
            return Ok(Resolved::Sphere { r: get("R") });
        }
        "one_sheeted_hyperboloid" | "two_sheeted_hyperboloid" => {
            range("R", get("R") > 0.0 && get("R").is_finite(), "must be positive")?;
            if *name == "one_sheeted_hyperboloid" {
                ProfileCurve::one_sheeted_hyperboloid(get("R"))
            } else {
                ProfileCurve::two_sheeted_hyperboloid(get("R"))
            }
        }
        "pseudo_cylinder" => {
            range("u0", get("u0") > 0.0 && get("u0").is_finite(), "must be positive")?;
            ProfileCurve::pseudo_cylinder(get("u0"))
        }
        "boosted_timelike_hyperbola" => {
            range("a", get("a") > 0.0 && get("a").is_finite(), "must be positive")?;
            range("u0", get("u0").is_finite(), "must be finite")?;
            ProfileCurve::boosted_timelike_hyperbola(get("a"), get("u0"))
        }
        "boosted_spacelike_hyperbola" => {
            range("a", get("a") > 0.0 && get("a").is_finite(), "must be positive")?;
            range("u0", get("u0").is_finite() && get("u0") > -1.0 / get("a"), "must exceed -1/a")?;
            ProfileCurve::boosted_spacelike_hyperbola(get("a"), get("u0"))
        }
        "flat_plane" => {
            range("c", get("c").is_finite(), "must be finite")?;
            ProfileCurve::flat_plane(get("c"))
        }
        _ => unreachable!("registry entry without constructor"),
    }
    .map_err(|e| Diagnostic::new(e.name(), e.to_string()))?;
    let tag = tag.expect("revolution profiles carry a tag");
    build_family(tag, profile).map(Resolved::Family).map_err(|e| Diagnostic::new(e.name(), e.to_string()))
}
