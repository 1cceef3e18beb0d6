use std::fmt;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use anyhow::{anyhow, Context};
use fdk_core::io::{self, PairFile, SubsetFile};
use fdk_core::selftest::run_selftest_with;
use fdk_core::{
    character_norms, direct_construction_with, full_character_sums, full_character_sums_float, is_primitive_subset,
    tprime_spectrum_closed_form, verify_formal_dual, CharacterTable, GroupSpec, Primitivity, Ring, SelfCheck,
    Spectrum, Table,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::manifest::{self, RunManifest};
use crate::{Kind, Side};

/// Marks errors caused by the caller's arguments or files (exit code 2).
#[derive(Debug)]
pub struct BadInput(pub anyhow::Error);

impl fmt::Display for BadInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#}", self.0)
    }
}

impl std::error::Error for BadInput {}

fn bad(e: impl Into<anyhow::Error>) -> anyhow::Error {
    BadInput(e.into()).into()
}

fn read_input(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(bad)
}

/// Write `text` to `out` or stdout, then the manifest if one is wanted.
fn emit(
    text: String,
    out: Option<&Path>,
    manifest_path: Option<PathBuf>,
    command: &'static str,
    parameters: Value,
    started: Instant,
) -> anyhow::Result<()> {
    match out {
        Some(path) => std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    if let Some(path) = manifest_path {
        RunManifest::new(command, parameters, started.elapsed(), text.as_bytes()).write(&path)?;
    }
    Ok(())
}

pub fn construct(m: usize, verify: bool, out: Option<PathBuf>, manifest: Option<PathBuf>) -> anyhow::Result<bool> {
    let started = Instant::now();
    let check = if verify { SelfCheck::On } else { SelfCheck::Off };
    let pair = direct_construction_with::<i64>(m, check)?;
    let text = io::to_canonical_json(&PairFile::from_pair(&pair)?)? + "\n";
    let manifest = manifest.or_else(|| out.as_deref().map(manifest::default_path));
    let parameters = json!({ "m": m, "verify": verify });
    emit(text, out.as_deref(), manifest, "construct", parameters, started)?;
    Ok(true)
}

fn primitivity_json(p: &Primitivity) -> Value {
    json!({
        "spans_group": p.spans_group(),
        "aperiodic": p.aperiodic(),
        "primitive": p.is_primitive(),
        "generated_order": p.generated_order,
        "period": p.period.as_ref().map(|h| h.coords.clone()),
    })
}

pub fn verify(path: &Path, manifest: Option<PathBuf>) -> anyhow::Result<bool> {
    let started = Instant::now();
    let pair = io::parse_pair::<i64>(&read_input(path)?).map_err(bad)?;
    let report = verify_formal_dual(&pair)?;
    let failure = report.first_failure.as_ref().map(|f| {
        json!({
            "y": f.y.coords,
            "lhs": f.lhs,
            "rhs_numer": f.rhs_numer,
            "rhs_denom": f.rhs_denom,
        })
    });
    let value = json!({
        "group": pair.group().orders(),
        "sizes": { "S": pair.s.weight()?, "T": pair.t.weight()? },
        "holds": report.holds,
        "checked": report.checked,
        "first_failure": failure,
        "primitivity": {
            "S": primitivity_json(&is_primitive_subset(&pair.s)?),
            "T": primitivity_json(&is_primitive_subset(&pair.t)?),
        },
    });
    let text = serde_json::to_string(&value)? + "\n";
    let parameters = json!({ "pair": path.display().to_string() });
    emit(text, None, manifest, "verify", parameters, started)?;
    Ok(report.holds)
}

pub fn closed_form_spectrum(m: usize, out: Option<PathBuf>, manifest: Option<PathBuf>) -> anyhow::Result<bool> {
    let started = Instant::now();
    let closed = tprime_spectrum_closed_form::<i128>(m).map_err(bad)?;
    let text = serde_json::to_string(&closed.spectrum)? + "\n";
    let parameters = json!({ "m": m, "closed_form": true });
    emit(text, out.as_deref(), manifest, "spectrum", parameters, started)?;
    Ok(closed.identities_hold()?)
}

/// A pair file yields the requested side; a subset file yields its only set.
fn load_set(text: &str, which: Side) -> anyhow::Result<Ring> {
    let pair_err = match serde_json::from_str::<PairFile>(text) {
        Ok(file) => {
            let pair = file.to_pair::<i64>().map_err(bad)?;
            return Ok(match which {
                Side::S => pair.s,
                Side::T => pair.t,
            });
        }
        Err(e) => e,
    };
    match serde_json::from_str::<SubsetFile>(text) {
        Ok(file) => file.to_subset().map_err(bad),
        Err(subset_err) => Err(bad(anyhow!(
            "neither a pair file ({pair_err}) nor a subset file ({subset_err})"
        ))),
    }
}

pub fn set_spectrum(
    path: &Path,
    which: Side,
    kind: Kind,
    out: Option<PathBuf>,
    manifest: Option<PathBuf>,
) -> anyhow::Result<bool> {
    let started = Instant::now();
    let set = load_set(&read_input(path)?, which)?;
    let spectrum: Spectrum<i64> = match kind {
        Kind::Diff => set.difference_spectrum()?,
        Kind::Char => Spectrum::from_values(character_norms(&set)?),
    };
    let text = serde_json::to_string(&spectrum)? + "\n";
    let parameters = json!({
        "set": path.display().to_string(),
        "which": format!("{which:?}"),
        "kind": format!("{kind:?}").to_lowercase(),
    });
    emit(text, out.as_deref(), manifest, "spectrum", parameters, started)?;
    Ok(true)
}

fn conjugated_sums(a: &Ring) -> fdk_core::Result<Table> {
    let table = full_character_sums(a)?;
    let flipped = table.sums().iter().map(|s| s.conj()).collect();
    CharacterTable::from_sums(table.group(), flipped)
}

pub fn selftest(max_m: usize, mutate: bool, manifest: Option<PathBuf>) -> anyhow::Result<bool> {
    let started = Instant::now();
    let sums = if mutate { conjugated_sums } else { full_character_sums::<i64> };
    let report = run_selftest_with(max_m, sums);
    let verdict = if report.passed() { "PASS" } else { "FAIL" };
    let text = format!(
        "{report}{verdict} {} checks in {:.2} s\n",
        report.checks.len(),
        report.elapsed.as_secs_f64()
    );
    let parameters = json!({ "max_m": max_m, "mutate_transform": mutate });
    emit(text, None, manifest, "selftest", parameters, started)?;
    Ok(report.passed())
}

fn median_ms(repeat: u32, mut f: impl FnMut() -> anyhow::Result<()>) -> anyhow::Result<f64> {
    let mut times: Vec<Duration> = Vec::with_capacity(repeat as usize);
    for _ in 0..repeat {
        let start = Instant::now();
        f()?;
        times.push(start.elapsed());
    }
    times.sort();
    Ok(times[times.len() / 2].as_secs_f64() * 1e3)
}

pub fn bench(max_m: usize, repeat: u32, seed: u64, manifest: Option<PathBuf>) -> anyhow::Result<bool> {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut text = String::from("group,|G|,mode,ms\n");
    for m in 1..=max_m {
        for group in [GroupSpec::z2_z4(m)?, GroupSpec::new(vec![3; 2 * m])?] {
            let n = group.cardinality();
            let sample = rand::seq::index::sample(&mut rng, n, n / 2).into_vec();
            let a = Ring::from_indices(&group, sample)?;
            if 4 % group.exponent() == 0 {
                let ms = median_ms(repeat, || Ok(full_character_sums(&a).map(drop)?))?;
                text += &format!("{group},{n},exact,{ms:.3}\n");
            }
            let ms = median_ms(repeat, || Ok(full_character_sums_float::<i64, f64>(&a).map(drop)?))?;
            text += &format!("{group},{n},float,{ms:.3}\n");
        }
    }
    let parameters = json!({ "max_m": max_m, "repeat": repeat, "seed": seed });
    emit(text, None, manifest, "bench", parameters, started)?;
    Ok(true)
}
