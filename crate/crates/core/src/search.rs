//! Randomized construction of checkable codes, the self-dual [24,12,8] search in F2·D24,
//! witness search for non-checkable ideals, and record export.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{Element, GroupAlgebra, IdealSubspace, Side};
use crate::check::{
    checkable_test, trial_rng, trial_seed, CheckabilityStatus, CheckabilityVerdict, PrincipalityOptions,
};
use crate::distance::{min_distance, weight_distribution, DistanceMethod, DistanceOptions, DEFAULT_DISTANCE_BUDGET};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::preset;
use crate::linalg::{Echelon, Subspace};

/// How candidate generators are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightProfile {
    /// Uniform coefficients.
    Uniform,
    /// Exactly `w` nonzero coefficients at uniform positions.
    Sparse(usize),
}

impl std::str::FromStr for WeightProfile {
    type Err = Error;

    fn from_str(s: &str) -> Result<WeightProfile> {
        let bad = || Error::Parse { position: 0, expected: "uniform or sparse:<w>".into() };
        if s == "uniform" {
            return Ok(WeightProfile::Uniform);
        }
        let w = s.strip_prefix("sparse:").ok_or_else(bad)?;
        Ok(WeightProfile::Sparse(w.parse().map_err(|_| bad())?))
    }
}

impl WeightProfile {
    pub fn draw<R: Rng + ?Sized>(self, alg: &GroupAlgebra, rng: &mut R) -> Element {
        match self {
            WeightProfile::Uniform => alg.random_element(rng),
            WeightProfile::Sparse(w) => alg.random_sparse(rng, w),
        }
    }
}

/// One code `C = (vKG)^⊥`, checkable with check element `hat(v)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub group_id: String,
    pub field: String,
    /// Seed of this trial's generator; replays the draw on its own.
    pub seed: u64,
    /// `v`, the generator of `C^⊥`.
    pub generator: String,
    pub check_element: String,
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub d_method: Option<DistanceMethod>,
    /// Wall-clock milliseconds; zero unless timing was requested.
    pub elapsed_ms: u64,
    pub checkable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    pub trials: u64,
    pub profile: WeightProfile,
    pub seed: u64,
    pub distance_budget: u128,
    /// Stop distance enumeration once a code cannot beat the best one of its dimension.
    pub prune: bool,
    pub record_timing: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            trials: 200,
            profile: WeightProfile::Uniform,
            seed: crate::check::DEFAULT_SEED,
            distance_budget: DEFAULT_DISTANCE_BUDGET,
            prune: true,
            record_timing: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SearchOutcome {
    pub records: Vec<SearchRecord>,
    /// Best record per dimension `k`: largest exhausted `d`, first found on ties.
    pub best: BTreeMap<usize, SearchRecord>,
}

/// Builds the record for `C = (vKG)^⊥`. `early_stop` bounds the distance search.
pub fn record_for_generator(
    alg: &GroupAlgebra,
    v: &Element,
    seed: u64,
    distance_budget: u128,
    early_stop: Option<usize>,
) -> Result<SearchRecord> {
    let started = Instant::now();
    let dual = alg.principal_ideal(v, Side::Right)?.into_space().orthogonal();
    let n = alg.dim();
    let k = dual.dim();
    let exhaust = DistanceOptions { budget: distance_budget, early_stop };
    let d = match min_distance(&dual, &exhaust) {
        Ok(d) => d,
        Err(Error::BudgetExceeded { .. }) => min_distance(
            &dual,
            &DistanceOptions { budget: distance_budget, early_stop: Some(early_stop.unwrap_or(0)) },
        )?,
        Err(e) => return Err(e),
    };
    Ok(SearchRecord {
        group_id: alg.group().name().to_string(),
        field: alg.field().spec(),
        seed,
        generator: alg.format_element(v),
        check_element: alg.format_element(&alg.hat(v)),
        n,
        k,
        d: d.map(|d| d.d),
        d_method: d.map(|d| d.method),
        elapsed_ms: started.elapsed().as_millis() as u64,
        checkable: true,
    })
}

/// Duals of random principal right ideals, keeping the best distance per dimension.
pub fn random_checkable_search(alg: &GroupAlgebra, opts: &SearchOptions) -> Result<SearchOutcome> {
    let mut out = SearchOutcome::default();
    for trial in 0..opts.trials {
        let seed = trial_seed(opts.seed, trial);
        let mut rng = trial_rng(opts.seed, trial);
        let v = opts.profile.draw(alg, &mut rng);
        let k = alg.dim() - alg.principal_ideal(&v, Side::Right)?.dim();
        let early_stop = match out.best.get(&k) {
            Some(best) if opts.prune => best.d,
            _ => None,
        };
        let mut rec = record_for_generator(alg, &v, seed, opts.distance_budget, early_stop)?;
        if !opts.record_timing {
            rec.elapsed_ms = 0;
        }
        let better = match out.best.get(&k) {
            None => true,
            Some(b) => {
                rec.d_method == Some(DistanceMethod::Exhausted)
                    && (b.d_method != Some(DistanceMethod::Exhausted) || rec.d > b.d)
            }
        };
        if better {
            out.best.insert(k, rec.clone());
        }
        out.records.push(rec);
    }
    Ok(out)
}

/// Result of a successful self-dual search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GolayHit {
    pub record: SearchRecord,
    pub self_dual: bool,
    pub weight_distribution: Vec<u128>,
    pub trials_used: u64,
}

/// Searches F2·D24 for `v` with `vKG` self-dual of dimension 12 and distance 8. Weights of
/// the sparse candidates cycle through 8..=12.
pub fn golay_search(seed: u64, trials: u64) -> Result<Option<GolayHit>> {
    let alg = GroupAlgebra::new(preset("d24")?, &Field::prime(2)?);
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial);
        let w = 8 + (trial % 5) as usize;
        let v = alg.random_sparse(&mut rng, w);
        // vKG is self-orthogonal iff hat(v)·v = 0
        if !alg.mul(&alg.hat(&v), &v)?.is_zero() {
            continue;
        }
        let c = alg.principal_space(v.coeffs(), Side::Right);
        if c.dim() != 12 {
            continue;
        }
        let Some(d) = min_distance(&c, &DistanceOptions::default())? else { continue };
        if d.d != 8 {
            continue;
        }
        let self_dual = c.orthogonal() == c;
        let dist = weight_distribution(&c, 1 << 12)?;
        let record = SearchRecord {
            group_id: "d24".into(),
            field: alg.field().spec(),
            seed: trial_seed(seed, trial),
            generator: alg.format_element(&v),
            check_element: alg.format_element(&alg.hat(&v)),
            n: 24,
            k: 12,
            d: Some(d.d),
            d_method: Some(d.method),
            elapsed_ms: 0,
            checkable: true,
        };
        return Ok(Some(GolayHit { record, self_dual, weight_distribution: dist, trials_used: trial + 1 }));
    }
    Ok(None)
}

/// An ideal proved not checkable, with a short description of where it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub ideal: IdealSubspace,
    pub verdict: CheckabilityVerdict,
    pub origin: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessOptions {
    pub trials: u64,
    pub seed: u64,
    pub principality: PrincipalityOptions,
}

impl Default for WitnessOptions {
    fn default() -> Self {
        WitnessOptions { trials: 200, seed: crate::check::DEFAULT_SEED, principality: PrincipalityOptions::default() }
    }
}

/// Right ideal spanned by `x·g` for `x` in `gens` and all `g ∈ G`.
fn right_ideal_generated(alg: &GroupAlgebra, gens: impl IntoIterator<Item = Vec<u8>>) -> Result<IdealSubspace> {
    let mut ech = Echelon::new(alg.field(), alg.dim());
    for x in gens {
        for g in 0..alg.dim() {
            ech.insert(alg.translate(&x, g, Side::Right));
        }
    }
    alg.ideal(ech.into_subspace())
}

/// Structured candidates: `K·σ`, `σ_P·KG` and `ω_P·KG` for p-subgroups P, and `σ_N·ω`
/// for the largest normal p′-subgroup N.
fn structured_candidates(alg: &GroupAlgebra) -> Result<Vec<(String, IdealSubspace)>> {
    let g = alg.group();
    let f = alg.field();
    let p = f.characteristic() as usize;
    let mut out = vec![("K·σ".to_string(), alg.principal_ideal(&alg.sigma(), Side::Right)?)];
    let subgroups = crate::check::p_subgroups(g, p);
    for h in &subgroups {
        let s = alg.subset_sum(h);
        out.push((format!("σ_P·KG, |P|={}", h.len()), alg.principal_ideal(&s, Side::Right)?));
    }
    let n = g.largest_normal_p_prime_subgroup(p);
    if n.len() < g.order() {
        let sn = alg.subset_sum(&n);
        let gens = (1..alg.dim()).map(|x| {
            let mut e = vec![0u8; alg.dim()];
            e[0] = f.neg(1);
            e[x] = 1;
            alg.mul_raw(sn.coeffs(), &e)
        });
        out.push((format!("σ_N·ω, |N|={}", n.len()), right_ideal_generated(alg, gens)?));
    }
    for h in &subgroups {
        let gens = h.iter().filter(|&&x| x != 0).map(|&x| {
            let mut e = vec![0u8; alg.dim()];
            e[0] = f.neg(1);
            e[x] = 1;
            e
        });
        out.push((format!("ω_P·KG, |P|={}", h.len()), right_ideal_generated(alg, gens)?));
    }
    Ok(out)
}

/// Sum of 1–3 principal right ideals with uniform random generators.
pub fn random_right_ideal<R: Rng + ?Sized>(alg: &GroupAlgebra, rng: &mut R) -> IdealSubspace {
    let count = rng.gen_range(1..=3);
    let mut ech = Echelon::new(alg.field(), alg.dim());
    for _ in 0..count {
        let v = alg.random_element(rng);
        for row in alg.principal_space(v.coeffs(), Side::Right).vectors() {
            ech.insert(row.to_vec());
        }
    }
    alg.ideal(ech.into_subspace()).expect("sum of right ideals")
}

/// First candidate ideal with an exact NotCheckable verdict: structured ones, then random.
pub fn non_checkable_witness_search(alg: &GroupAlgebra, opts: &WitnessOptions) -> Result<Option<Witness>> {
    let mut seen: Vec<Subspace> = Vec::new();
    let mut try_one = |origin: String, ideal: IdealSubspace| -> Result<Option<Witness>> {
        if seen.contains(ideal.space()) {
            return Ok(None);
        }
        seen.push(ideal.space().clone());
        let verdict = checkable_test(alg, &ideal, &opts.principality)?;
        Ok((verdict.status == CheckabilityStatus::NotCheckable).then_some(Witness { ideal, verdict, origin }))
    };
    for (origin, ideal) in structured_candidates(alg)? {
        if let Some(w) = try_one(origin, ideal)? {
            return Ok(Some(w));
        }
    }
    for trial in 0..opts.trials {
        let mut rng = trial_rng(opts.seed, trial);
        let ideal = random_right_ideal(alg, &mut rng);
        if let Some(w) = try_one(format!("random ideal, trial {trial}"), ideal)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Csv,
    Json,
}

pub const CSV_COLUMNS: [&str; 9] = ["group_id", "field", "seed", "n", "k", "d", "d_method", "generator", "elapsed_ms"];

pub fn records_to_csv(records: &[SearchRecord]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(CSV_COLUMNS).map_err(io)?;
    for r in records {
        w.write_record([
            r.group_id.clone(),
            r.field.clone(),
            r.seed.to_string(),
            r.n.to_string(),
            r.k.to_string(),
            r.d.map_or(String::new(), |d| d.to_string()),
            r.d_method.map_or(String::new(), |m| m.as_str().to_string()),
            r.generator.clone(),
            r.elapsed_ms.to_string(),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

pub fn records_to_json(records: &[SearchRecord]) -> Result<String> {
    serde_json::to_string_pretty(records).map_err(|e| Error::Io(e.to_string()))
}

pub fn records_from_json(text: &str) -> Result<Vec<SearchRecord>> {
    serde_json::from_str(text).map_err(|e| Error::Io(e.to_string()))
}

pub fn export_records(records: &[SearchRecord], format: ExportFormat, path: &Path) -> Result<()> {
    let text = match format {
        ExportFormat::Csv => records_to_csv(records)?,
        ExportFormat::Json => records_to_json(records)? + "\n",
    };
    std::fs::write(path, text)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::verify_check_element;
    use rand::SeedableRng;

    fn alg(g: &str, q: u32) -> GroupAlgebra {
        GroupAlgebra::new(preset(g).unwrap(), &Field::of_order(q).unwrap())
    }

    #[test]
    fn zero_generator_gives_full_code() {
        let a = alg("s3", 2);
        let r = record_for_generator(&a, &a.zero(), 0, 1 << 20, None).unwrap();
        assert_eq!((r.n, r.k, r.d), (6, 6, Some(1)));
    }

    #[test]
    fn search_records_are_checkable_and_reproducible() {
        let a = alg("d8", 3);
        let opts = SearchOptions { trials: 30, ..Default::default() };
        let out = random_checkable_search(&a, &opts).unwrap();
        assert_eq!(out.records.len(), 30);
        for r in &out.records {
            let v = a.parse_element(&r.check_element).unwrap();
            let gen = a.parse_element(&r.generator).unwrap();
            let c = a.principal_ideal(&gen, Side::Right).unwrap().into_space().orthogonal();
            assert!(verify_check_element(&a, &v, &c));
            assert_eq!(c.dim(), r.k);
            // each record replays from its own seed
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(r.seed);
            assert_eq!(a.random_element(&mut rng), gen);
        }
        assert_eq!(random_checkable_search(&a, &opts).unwrap(), out);
    }

    #[test]
    fn witness_examples() {
        let w = non_checkable_witness_search(&alg("klein4", 2), &Default::default()).unwrap().unwrap();
        assert_eq!(w.origin, "K·σ");
        assert!(non_checkable_witness_search(&alg("d8", 2), &Default::default()).unwrap().is_some());
        assert!(non_checkable_witness_search(&alg("s3", 3), &Default::default()).unwrap().is_some());
    }

    #[test]
    fn csv_and_json() {
        assert_eq!(records_to_csv(&[]).unwrap(), "group_id,field,seed,n,k,d,d_method,generator,elapsed_ms\n");
        let a = alg("c4", 2);
        let r = record_for_generator(&a, &a.parse_element("1 + a").unwrap(), 7, 1 << 20, None).unwrap();
        let csv = records_to_csv(std::slice::from_ref(&r)).unwrap();
        assert_eq!(csv.lines().count(), 2);
        let json = records_to_json(&[r.clone(), r.clone()]).unwrap();
        assert_eq!(records_from_json(&json).unwrap(), vec![r.clone(), r]);
    }

    #[test]
    fn profile_parsing() {
        assert_eq!("sparse:8".parse::<WeightProfile>().unwrap(), WeightProfile::Sparse(8));
        assert_eq!("uniform".parse::<WeightProfile>().unwrap(), WeightProfile::Uniform);
        assert!("dense".parse::<WeightProfile>().is_err());
    }
}
