//! Principality of one-sided ideals and checkability of group codes.
//!
//! A right ideal C is checkable (`C = ann_r(v)`) exactly when `C^⊥` is a principal right
//! ideal; the check element is then `hat(w)` for a generator `w` of `C^⊥`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{Element, GroupAlgebra, IdealSubspace, Side};
use crate::code::dual_code;
use crate::code::CodeSubspace;
use crate::distance::{additive_generators, codeword_count};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::group::Group;
use crate::linalg::{axpy, Subspace};

/// Default cap on elements enumerated by the exhaustive principality path.
pub const DEFAULT_EXHAUSTIVE_BUDGET: u128 = 1 << 20;
/// Default number of random generator candidates.
pub const DEFAULT_RANDOM_TRIALS: u64 = 200;
/// Default master seed.
pub const DEFAULT_SEED: u64 = 0x5eed;

/// Group orders above which the subgroup obstruction only tries cyclic subgroups.
const PAIR_SUBGROUP_LIMIT: usize = 96;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PrincipalityStatus {
    Principal,
    NotPrincipal,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PrincipalityMethod {
    /// Every candidate generator was tried (also used for the zero ideal).
    Exhaustive,
    /// A random candidate was found to generate; never used for negative verdicts.
    Randomized,
    /// `dim(M/MJ) ≤ 1` in a local group algebra.
    LocalAlgebra,
    /// `dim(M/M·ω_H) > [G:H]` for some subgroup H, which rules out a generator.
    RestrictionBound,
    /// No exact method applied and no random candidate generated the ideal.
    None,
}

impl PrincipalityMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            PrincipalityMethod::Exhaustive => "exhaustive",
            PrincipalityMethod::Randomized => "randomized",
            PrincipalityMethod::LocalAlgebra => "local-algebra",
            PrincipalityMethod::RestrictionBound => "restriction-bound",
            PrincipalityMethod::None => "none",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalityVerdict {
    pub status: PrincipalityStatus,
    pub witness: Option<Element>,
    pub method: PrincipalityMethod,
    pub trials_used: u64,
    /// Master seed of the random stage, when it ran.
    pub seed: Option<u64>,
    /// For `RestrictionBound`: the order of the subgroup that gave the obstruction.
    pub obstruction_subgroup: Option<usize>,
}

impl PrincipalityVerdict {
    fn principal(witness: Element, method: PrincipalityMethod, trials_used: u64, seed: Option<u64>) -> Self {
        PrincipalityVerdict {
            status: PrincipalityStatus::Principal,
            witness: Some(witness),
            method,
            trials_used,
            seed,
            obstruction_subgroup: None,
        }
    }

    fn not_principal(method: PrincipalityMethod, trials_used: u64, obstruction_subgroup: Option<usize>) -> Self {
        PrincipalityVerdict {
            status: PrincipalityStatus::NotPrincipal,
            witness: None,
            method,
            trials_used,
            seed: None,
            obstruction_subgroup,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalityOptions {
    pub exhaustive_budget: u128,
    pub random_trials: u64,
    pub seed: u64,
    /// Use the local-algebra criterion when KG is local.
    pub use_local: bool,
    /// Use the subgroup restriction obstruction.
    pub use_obstruction: bool,
}

impl Default for PrincipalityOptions {
    fn default() -> Self {
        PrincipalityOptions {
            exhaustive_budget: DEFAULT_EXHAUSTIVE_BUDGET,
            random_trials: DEFAULT_RANDOM_TRIALS,
            seed: DEFAULT_SEED,
            use_local: true,
            use_obstruction: true,
        }
    }
}

impl PrincipalityOptions {
    /// Only the enumeration paths; used to cross-check the structural criteria.
    pub fn exhaustive_only(budget: u128) -> Self {
        PrincipalityOptions {
            exhaustive_budget: budget,
            random_trials: 0,
            use_local: false,
            use_obstruction: false,
            ..Default::default()
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

/// Seed of trial `trial` under master seed `seed` (a SplitMix64 step of their mix), so a
/// single trial can be replayed from its own seed.
pub fn trial_seed(seed: u64, trial: u64) -> u64 {
    let mut z = seed ^ trial.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(trial_seed(seed, trial))
}

/// Decides whether `m` is a principal right (`vKG`) or left (`KGv`) ideal.
pub fn principality_test(
    alg: &GroupAlgebra,
    m: &IdealSubspace,
    side: Side,
    opts: &PrincipalityOptions,
) -> Result<PrincipalityVerdict> {
    if !m.side().has(side) {
        return Err(Error::SideMismatch);
    }
    let space = m.space();
    let dim = space.dim();
    if dim == 0 {
        return Ok(PrincipalityVerdict::principal(alg.zero(), PrincipalityMethod::Exhaustive, 0, None));
    }
    let generates = |v: &[u8]| alg.principal_dim(v, side, dim) == dim;
    let all: Vec<usize> = (0..alg.dim()).collect();

    if opts.use_local && alg.is_local() {
        let mj = alg.times_augmentation(space, &all, side);
        if dim - mj.dim() > 1 {
            return Ok(PrincipalityVerdict::not_principal(PrincipalityMethod::LocalAlgebra, 0, None));
        }
        // any element outside MJ generates, by Nakayama
        let ech = mj.echelon();
        let v = space
            .vectors()
            .find(|v| {
                let mut w = v.to_vec();
                ech.reduce(&mut w);
                w.iter().any(|&x| x != 0)
            })
            .expect("dim M > dim MJ");
        if !generates(v) {
            return Err(Error::VerificationFailed("local generator does not generate".into()));
        }
        return Ok(PrincipalityVerdict::principal(
            alg.from_coeffs(v.to_vec())?,
            PrincipalityMethod::LocalAlgebra,
            0,
            None,
        ));
    }

    if opts.use_obstruction {
        if let Some(h) = restriction_obstruction(alg, space, side, std::slice::from_ref(&all)) {
            return Ok(PrincipalityVerdict::not_principal(PrincipalityMethod::RestrictionBound, 0, Some(h)));
        }
    }

    let q = alg.field().order();
    if codeword_count(q, dim) <= opts.exhaustive_budget {
        let mut tried = 0u64;
        let mut found = None;
        for_each_projective(space, |v| {
            tried += 1;
            if generates(v) {
                found = Some(v.to_vec());
                false
            } else {
                true
            }
        });
        return Ok(match found {
            Some(v) => PrincipalityVerdict::principal(alg.from_coeffs(v)?, PrincipalityMethod::Exhaustive, tried, None),
            None => PrincipalityVerdict::not_principal(PrincipalityMethod::Exhaustive, tried, None),
        });
    }

    for trial in 0..opts.random_trials {
        let mut rng = trial_rng(opts.seed, trial);
        let v = alg.random_in(&mut rng, space);
        if generates(&v) {
            return Ok(PrincipalityVerdict::principal(
                alg.from_coeffs(v)?,
                PrincipalityMethod::Randomized,
                trial + 1,
                Some(opts.seed),
            ));
        }
    }

    if opts.use_obstruction {
        let p = alg.field().characteristic() as usize;
        let subgroups = p_subgroups(alg.group(), p);
        if let Some(h) = restriction_obstruction(alg, space, side, &subgroups) {
            return Ok(PrincipalityVerdict::not_principal(
                PrincipalityMethod::RestrictionBound,
                opts.random_trials,
                Some(h),
            ));
        }
    }

    Ok(PrincipalityVerdict {
        status: PrincipalityStatus::Unknown,
        witness: None,
        method: PrincipalityMethod::None,
        trials_used: opts.random_trials,
        seed: Some(opts.seed),
        obstruction_subgroup: None,
    })
}

/// A principal right ideal `M` satisfies `dim(M/M·ω_H) ≤ [G:H]` for every subgroup `H`,
/// since `M ⊗_{KH} K` is a quotient of `KG ⊗_{KH} K`. Returns the order of the first
/// subgroup violating the bound.
pub fn restriction_obstruction(
    alg: &GroupAlgebra,
    space: &Subspace,
    side: Side,
    subgroups: &[Vec<usize>],
) -> Option<usize> {
    let n = alg.dim();
    subgroups.iter().find_map(|h| {
        let index = n / h.len();
        if space.dim() <= index {
            return None;
        }
        let mw = alg.times_augmentation(space, h, side);
        (space.dim() - mw.dim() > index).then_some(h.len())
    })
}

/// Nontrivial p-subgroups generated by one or two p-elements, deduplicated, largest
/// first.
pub fn p_subgroups(g: &Group, p: usize) -> Vec<Vec<usize>> {
    let n = g.order();
    let p_elems: Vec<usize> = (1..n).filter(|&x| crate::group::p_part(g.elem_order(x), p) == g.elem_order(x)).collect();
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut push = |h: Vec<usize>| {
        if h.len() > 1 && crate::group::p_part(h.len(), p) == h.len() && !out.contains(&h) {
            out.push(h);
        }
    };
    for (i, &x) in p_elems.iter().enumerate() {
        push(g.subgroup(&[x]));
        if n <= PAIR_SUBGROUP_LIMIT {
            for &y in &p_elems[i + 1..] {
                push(g.subgroup(&[x, y]));
            }
        }
    }
    out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    out
}

/// Visits one representative of every projective class of nonzero vectors in `space`
/// (leading coefficient 1) until the visitor returns `false`.
pub(crate) fn for_each_projective(space: &Subspace, mut visit: impl FnMut(&[u8]) -> bool) {
    let f = space.field();
    let p = f.characteristic() as u8;
    let m = f.degree() as usize;
    let gens = additive_generators(space);
    let rows: Vec<&[u8]> = space.vectors().collect();
    for (lead, row) in rows.iter().enumerate() {
        let tail = &gens[(lead + 1) * m..];
        let mut cur = row.to_vec();
        if !visit(&cur) {
            return;
        }
        let mut digits = vec![0u8; tail.len()];
        loop {
            let mut t = 0;
            while t < tail.len() {
                digits[t] += 1;
                if digits[t] < p {
                    break;
                }
                digits[t] = 0;
                t += 1;
            }
            if t == tail.len() {
                break;
            }
            axpy(f, &mut cur, 1, &tail[t]);
            if !visit(&cur) {
                return;
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckabilityStatus {
    Checkable,
    NotCheckable,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckabilityVerdict {
    pub status: CheckabilityStatus,
    pub check_element: Option<Element>,
    /// Principality verdict on `C^⊥`.
    pub via: PrincipalityVerdict,
}

/// Decides checkability of a right ideal through principality of its dual.
pub fn checkable_test(
    alg: &GroupAlgebra,
    c: &IdealSubspace,
    opts: &PrincipalityOptions,
) -> Result<CheckabilityVerdict> {
    if !c.side().is_right() {
        return Err(Error::NotARightIdeal);
    }
    let dual = dual_code(alg, &CodeSubspace::new(c.clone()))?;
    if !dual.ideal().side().is_right() {
        return Err(Error::VerificationFailed("dual of a right ideal is not a right ideal".into()));
    }
    let via = principality_test(alg, dual.ideal(), Side::Right, opts)?;
    let (status, check_element) = match via.status {
        PrincipalityStatus::Principal => {
            let w = via.witness.as_ref().expect("principal verdicts carry a witness");
            let v = alg.hat(w);
            if !verify_check_element(alg, &v, c.space()) {
                return Err(Error::VerificationFailed("ann_r(hat(w)) differs from C".into()));
            }
            (CheckabilityStatus::Checkable, Some(v))
        }
        PrincipalityStatus::NotPrincipal => (CheckabilityStatus::NotCheckable, None),
        PrincipalityStatus::Unknown => (CheckabilityStatus::Unknown, None),
    };
    Ok(CheckabilityVerdict { status, check_element, via })
}

/// Whether `ann_r(v) = C`.
pub fn verify_check_element(alg: &GroupAlgebra, v: &Element, c: &Subspace) -> bool {
    alg.annihilator_of(v, Side::Right).map(|a| a.space() == c).unwrap_or(false)
}

/// The classification predicate: every right ideal of KG is checkable iff `char K ∤ |G|`
/// or G is p-nilpotent with a cyclic Sylow p-subgroup.
pub fn classify_code_checkable(g: &Group, field: &Field) -> bool {
    let p = field.characteristic() as usize;
    let (nilpotent, cyclic) = g.is_p_nilpotent_cyclic_sylow(p);
    nilpotent && cyclic
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RmRow {
    pub r: usize,
    pub dim: usize,
    pub principal: PrincipalityStatus,
    pub checkable: CheckabilityStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RmReport {
    pub p: u32,
    pub m: u32,
    /// Top index `N = m(p−1)`; `J^N` is one-dimensional.
    pub top: usize,
    pub rows: Vec<RmRow>,
}

impl RmReport {
    /// Among the nonzero powers, only `J^0` and `J^N` are principal and only `J^0`, `J^1`
    /// are checkable. `J^{N+1} = 0` is reported but excluded.
    pub fn matches_expectation(&self) -> bool {
        self.rows.iter().filter(|row| row.r <= self.top).all(|row| {
            let principal = row.r == 0 || row.r == self.top;
            let checkable = row.r <= 1;
            (row.principal == PrincipalityStatus::Principal) == principal
                && (row.checkable == CheckabilityStatus::Checkable) == checkable
                && row.principal != PrincipalityStatus::Unknown
                && row.checkable != CheckabilityStatus::Unknown
        }) && self.rows.iter().any(|row| row.r == self.top && row.dim == 1)
    }
}

/// Radical powers of `F_p(C_p^m)`: dimension, principality and checkability of each.
pub fn reed_muller_experiment(p: u32, m: u32, opts: &PrincipalityOptions) -> Result<RmReport> {
    let order = (p as u64).checked_pow(m).unwrap_or(u64::MAX);
    if m < 2 || order > 81 {
        return Err(Error::ScaleExceeded(format!("p^m = {p}^{m} outside 4..=81 or m < 2")));
    }
    let g = crate::group::preset(&format!("ea({p},{m})"))?;
    let alg = GroupAlgebra::new(g, &Field::prime(p)?);
    let top = (m * (p - 1)) as usize;
    let mut rows = Vec::new();
    for r in 0..=top + 1 {
        let j = alg.radical_power(r)?;
        let principal = principality_test(&alg, &j, Side::Right, opts)?.status;
        let checkable = checkable_test(&alg, &j, opts)?.status;
        rows.push(RmRow { r, dim: j.dim(), principal, checkable });
    }
    Ok(RmReport { p, m, top, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::preset;
    use rand::SeedableRng;

    fn alg(g: &str, q: u32) -> GroupAlgebra {
        GroupAlgebra::new(preset(g).unwrap(), &Field::of_order(q).unwrap())
    }

    #[test]
    fn klein_four_pair() {
        let a = alg("klein4", 2);
        let j = a.augmentation_ideal();
        let v = principality_test(&a, &j, Side::Right, &Default::default()).unwrap();
        assert_eq!((v.status, v.method), (PrincipalityStatus::NotPrincipal, PrincipalityMethod::LocalAlgebra));
        let ex = principality_test(&a, &j, Side::Right, &PrincipalityOptions::exhaustive_only(8)).unwrap();
        assert_eq!(
            (ex.status, ex.method, ex.trials_used),
            (PrincipalityStatus::NotPrincipal, PrincipalityMethod::Exhaustive, 7)
        );

        let ks = a.principal_ideal(&a.sigma(), Side::Right).unwrap();
        assert_eq!(checkable_test(&a, &ks, &Default::default()).unwrap().status, CheckabilityStatus::NotCheckable);
        let cj = checkable_test(&a, &j, &Default::default()).unwrap();
        assert_eq!(cj.status, CheckabilityStatus::Checkable);
        assert!(verify_check_element(&a, cj.check_element.as_ref().unwrap(), j.space()));
    }

    #[test]
    fn sigma_is_principal_everywhere() {
        for (g, q) in [("s3", 2), ("s3", 3), ("a4", 2), ("d8", 3), ("c6", 5)] {
            let a = alg(g, q);
            let ks = a.principal_ideal(&a.sigma(), Side::Right).unwrap();
            let v = principality_test(&a, &ks, Side::Right, &Default::default()).unwrap();
            assert_eq!(v.status, PrincipalityStatus::Principal, "{g}");
            let w = v.witness.unwrap();
            assert_eq!(a.principal_ideal(&w, Side::Right).unwrap().space(), ks.space());
        }
    }

    #[test]
    fn cyclic_four_ideals_are_principal() {
        let a = alg("c4", 2);
        for r in 0..=4 {
            let j = a.radical_power(r).unwrap();
            let v = principality_test(&a, &j, Side::Right, &PrincipalityOptions::exhaustive_only(1 << 10)).unwrap();
            assert_eq!(v.status, PrincipalityStatus::Principal);
            assert_eq!(checkable_test(&a, &j, &Default::default()).unwrap().status, CheckabilityStatus::Checkable);
        }
    }

    #[test]
    fn check_element_examples() {
        let a = alg("s3", 2);
        assert!(verify_check_element(&a, &a.zero(), a.full_ideal().space()));
        assert!(verify_check_element(&a, &a.one(), a.zero_ideal().space()));
        assert!(verify_check_element(&a, &a.sigma(), a.augmentation_ideal().space()));
        let full = checkable_test(&a, &a.full_ideal(), &Default::default()).unwrap();
        assert_eq!(full.check_element, Some(a.zero()));
    }

    #[test]
    fn side_errors() {
        let a = alg("s3", 3);
        let v = a.parse_element("1 + s1").unwrap();
        let left = a.principal_ideal(&v, Side::Left).unwrap();
        assert!(!left.side().is_right());
        assert_eq!(principality_test(&a, &left, Side::Right, &Default::default()), Err(Error::SideMismatch));
        assert_eq!(checkable_test(&a, &left, &Default::default()), Err(Error::NotARightIdeal));
        let pv = principality_test(&a, &left, Side::Left, &Default::default()).unwrap();
        assert_eq!(pv.status, PrincipalityStatus::Principal);
    }

    #[test]
    fn classification_examples() {
        let f = |q| Field::of_order(q).unwrap();
        assert!(classify_code_checkable(&preset("product(c6,c6)").unwrap(), &f(5)));
        assert!(!classify_code_checkable(&preset("klein4").unwrap(), &f(2)));
        assert!(classify_code_checkable(&preset("s3").unwrap(), &f(2)));
        assert!(!classify_code_checkable(&preset("s3").unwrap(), &f(3)));
        assert!(classify_code_checkable(&preset("c4").unwrap(), &f(4)));
    }

    #[test]
    fn reed_muller() {
        let opts = PrincipalityOptions::default();
        let r = reed_muller_experiment(2, 2, &opts).unwrap();
        assert_eq!(r.rows.iter().map(|x| x.dim).collect::<Vec<_>>(), vec![4, 3, 1, 0]);
        assert!(r.matches_expectation());
        let r = reed_muller_experiment(2, 3, &opts).unwrap();
        assert_eq!(r.rows.iter().map(|x| x.dim).collect::<Vec<_>>(), vec![8, 7, 4, 1, 0]);
        assert!(r.matches_expectation());
        let r = reed_muller_experiment(3, 2, &opts).unwrap();
        assert_eq!(r.rows.iter().map(|x| x.dim).collect::<Vec<_>>(), vec![9, 8, 6, 3, 1, 0]);
        assert!(r.matches_expectation());
        assert!(matches!(reed_muller_experiment(3, 5, &opts), Err(Error::ScaleExceeded(_))));
    }

    #[test]
    fn local_and_exhaustive_agree() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        for (g, q) in [("klein4", 2), ("c4", 2), ("d8", 2), ("q8", 2), ("ea(3,2)", 3)] {
            let a = alg(g, q);
            for _ in 0..15 {
                let v = a.random_element(&mut rng);
                let w = a.random_element(&mut rng);
                let s = a
                    .principal_ideal(&v, Side::Right)
                    .unwrap()
                    .space()
                    .sum(a.principal_ideal(&w, Side::Right).unwrap().space())
                    .unwrap();
                let m = a.ideal(s).unwrap();
                let local = principality_test(&a, &m, Side::Right, &Default::default()).unwrap();
                let exhaustive =
                    principality_test(&a, &m, Side::Right, &PrincipalityOptions::exhaustive_only(1 << 16)).unwrap();
                assert_eq!(local.status, exhaustive.status, "{g}");
                assert_eq!(local.method, PrincipalityMethod::LocalAlgebra);
            }
        }
    }

    #[test]
    fn restriction_bound_is_sound() {
        // whenever the obstruction fires, exhaustive search must also find no generator
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        for (g, q) in [("s3", 3), ("s3", 2), ("a4", 2), ("d8", 3)] {
            let a = alg(g, q);
            let subgroups = p_subgroups(a.group(), a.field().characteristic() as usize);
            let all: Vec<usize> = (0..a.dim()).collect();
            for _ in 0..20 {
                let v = a.random_sparse(&mut rng, 2);
                let m = a.principal_ideal(&v, Side::Right).unwrap();
                let mut cands = subgroups.clone();
                cands.push(all.clone());
                assert_eq!(restriction_obstruction(&a, m.space(), Side::Right, &cands), None, "{g}");
            }
        }
        let a = alg("s3", 3);
        let ks = a.principal_ideal(&a.sigma(), Side::Right).unwrap();
        let dual = a.ideal(ks.space().orthogonal()).unwrap();
        let ex = principality_test(&a, &dual, Side::Right, &PrincipalityOptions::exhaustive_only(1 << 10)).unwrap();
        assert_eq!(ex.status, PrincipalityStatus::NotPrincipal);
    }

    #[test]
    fn projective_enumeration_counts() {
        let f = Field::of_order(3).unwrap();
        let s = Subspace::full(&f, 4);
        let mut count = 0;
        for_each_projective(&s, |v| {
            assert_eq!(v.iter().find(|&&x| x != 0), Some(&1));
            count += 1;
            true
        });
        assert_eq!(count, 40);
    }
}
