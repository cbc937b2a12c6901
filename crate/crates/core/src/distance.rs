//! Minimum distance and weight distribution by exhaustive codeword enumeration.
//!
//! Nonzero codewords are enumerated once per projective class: for each leading basis
//! row `i` the words `row_i + Σ_{j>i} c_j row_j`. The tail sum runs through a p-ary
//! modular Gray code over the GF(p)-multiples `x^t·row_j`, so every step adds a single
//! generator. In characteristic 2 words are packed into `u64` bit planes (one plane per
//! bit of the field encoding) and the weight is the popcount of the OR of the planes.
//!
//! Work is split into jobs by fixing the highest Gray digits. The job list depends only
//! on the code, never on the thread count, and early stopping keeps the first hit in job
//! order, so results are reproducible under any degree of parallelism.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{axpy, Subspace};

/// Default cap on enumerated codewords.
pub const DEFAULT_DISTANCE_BUDGET: u128 = 1 << 33;

/// Largest number of low Gray digits handled by a single job, as a word count.
const JOB_WORDS: u128 = 1 << 22;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DistanceMethod {
    /// Every projective codeword was examined.
    Exhausted,
    /// The value is an upper bound (early stop or truncated enumeration).
    Bounded,
}

impl DistanceMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            DistanceMethod::Exhausted => "exhausted",
            DistanceMethod::Bounded => "bounded",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Distance {
    pub d: usize,
    pub method: DistanceMethod,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistanceOptions {
    pub budget: u128,
    /// Stop as soon as a codeword of weight `<= w` is seen.
    pub early_stop: Option<usize>,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        DistanceOptions { budget: DEFAULT_DISTANCE_BUDGET, early_stop: None }
    }
}

impl DistanceOptions {
    pub fn with_budget(budget: u128) -> Self {
        DistanceOptions { budget, early_stop: None }
    }
}

/// Number of projective codewords, `(q^k − 1)/(q − 1)`, saturating.
pub fn projective_count(q: u32, k: usize) -> u128 {
    let q = q as u128;
    let mut total: u128 = 0;
    let mut pw: u128 = 1;
    for _ in 0..k {
        total = total.saturating_add(pw);
        pw = pw.saturating_mul(q);
    }
    total
}

/// `q^k`, saturating.
pub fn codeword_count(q: u32, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, _| acc.saturating_mul(q as u128))
}

/// One unit of enumeration: leading row, the fixed top digits and the number of
/// free low digits.
#[derive(Debug, Clone)]
struct Job {
    lead: usize,
    /// Generator range of the tail for this lead: `gen_start..gen_end`.
    gen_start: usize,
    low: usize,
    top_digits: Vec<u8>,
}

impl Job {
    fn words(&self, p: u32) -> u128 {
        codeword_count(p, self.low)
    }
}

/// GF(p)-generators of the code: `x^t·row_j` for all rows and `t < m`, row-major.
pub(crate) fn additive_generators(space: &Subspace) -> Vec<Vec<u8>> {
    let f = space.field();
    let (p, m) = (f.characteristic(), f.degree());
    let mut gens = Vec::new();
    for row in space.vectors() {
        let mut xt = 1u32;
        for _ in 0..m {
            let mut g = vec![0u8; row.len()];
            axpy(f, &mut g, xt as u8, row);
            gens.push(g);
            xt *= p;
        }
    }
    gens
}

fn plan_jobs(k: usize, m: usize, p: u32) -> Vec<Job> {
    let mut max_low = 0usize;
    while codeword_count(p, max_low + 1) <= JOB_WORDS {
        max_low += 1;
    }
    let mut jobs = Vec::new();
    for lead in 0..k {
        let gen_start = (lead + 1) * m;
        let g = (k - 1 - lead) * m;
        let low = g.min(max_low);
        let top = g - low;
        let mut digits = vec![0u8; top];
        loop {
            jobs.push(Job { lead, gen_start, low, top_digits: digits.clone() });
            let mut i = 0;
            while i < top {
                digits[i] += 1;
                if (digits[i] as u32) < p {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == top {
                break;
            }
        }
    }
    jobs
}

/// Per-job visitor; returns `false` to abort the job.
trait Visitor: Send {
    fn visit(&mut self, weight: usize) -> bool;
}

struct MinVisitor {
    best: usize,
    stop_at: Option<usize>,
    hit: bool,
}

impl Visitor for MinVisitor {
    #[inline(always)]
    fn visit(&mut self, w: usize) -> bool {
        if w < self.best {
            self.best = w;
        }
        match self.stop_at {
            Some(s) if w <= s => {
                self.hit = true;
                false
            }
            _ => true,
        }
    }
}

struct HistVisitor {
    counts: Vec<u128>,
}

impl Visitor for HistVisitor {
    #[inline(always)]
    fn visit(&mut self, w: usize) -> bool {
        self.counts[w] += 1;
        true
    }
}

/// Shared enumeration context.
struct Enumerator<'a> {
    field: &'a Field,
    gens: Vec<Vec<u8>>,
    rows: Vec<&'a [u8]>,
    packed: Option<Packed>,
}

/// Bit-plane form of every generator and row, for characteristic 2.
struct Packed {
    planes: usize,
    words: usize,
    gens: Vec<Vec<u64>>,
    rows: Vec<Vec<u64>>,
}

fn pack(v: &[u8], planes: usize, words: usize) -> Vec<u64> {
    let mut out = vec![0u64; planes * words];
    for (i, &x) in v.iter().enumerate() {
        for b in 0..planes {
            if (x >> b) & 1 == 1 {
                out[b * words + i / 64] |= 1u64 << (i % 64);
            }
        }
    }
    out
}

impl<'a> Enumerator<'a> {
    fn new(space: &'a Subspace) -> Self {
        let field = space.field();
        let n = space.ambient_dim();
        let gens = additive_generators(space);
        let rows: Vec<&[u8]> = space.vectors().collect();
        let packed = (field.characteristic() == 2).then(|| {
            let planes = field.degree() as usize;
            let words = n.div_ceil(64).max(1);
            Packed {
                planes,
                words,
                gens: gens.iter().map(|g| pack(g, planes, words)).collect(),
                rows: rows.iter().map(|r| pack(r, planes, words)).collect(),
            }
        });
        Enumerator { field, gens, rows, packed }
    }

    fn p(&self) -> u32 {
        self.field.characteristic()
    }

    fn m(&self) -> usize {
        self.field.degree() as usize
    }

    fn run<V: Visitor>(&self, job: &Job, v: &mut V) {
        match &self.packed {
            Some(pk) if pk.planes == 1 && pk.words == 1 => self.run_u64(pk, job, v),
            Some(pk) => self.run_packed(pk, job, v),
            None => self.run_generic(job, v),
        }
    }

    fn top_gens(job: &Job) -> Vec<(usize, u8)> {
        let start = job.gen_start + job.low;
        job.top_digits.iter().enumerate().map(|(i, &c)| (start + i, c)).filter(|&(_, c)| c != 0).collect()
    }

    fn run_u64<V: Visitor>(&self, pk: &Packed, job: &Job, v: &mut V) {
        let mut cur = pk.rows[job.lead][0];
        for (g, _) in Self::top_gens(job) {
            cur ^= pk.gens[g][0];
        }
        let gens: Vec<u64> = (0..job.low).map(|t| pk.gens[job.gen_start + t][0]).collect();
        if !v.visit(cur.count_ones() as usize) {
            return;
        }
        let total: u64 = 1u64 << job.low;
        for s in 1..total {
            cur ^= gens[s.trailing_zeros() as usize];
            if !v.visit(cur.count_ones() as usize) {
                return;
            }
        }
    }

    fn run_packed<V: Visitor>(&self, pk: &Packed, job: &Job, v: &mut V) {
        let len = pk.planes * pk.words;
        let mut cur = pk.rows[job.lead].clone();
        for (g, c) in Self::top_gens(job) {
            debug_assert_eq!(c, 1);
            for (x, y) in cur.iter_mut().zip(&pk.gens[g]) {
                *x ^= y;
            }
        }
        let weight = |cur: &[u64]| -> usize {
            (0..pk.words)
                .map(|w| (0..pk.planes).fold(0u64, |acc, b| acc | cur[b * pk.words + w]).count_ones() as usize)
                .sum()
        };
        if !v.visit(weight(&cur)) {
            return;
        }
        let total: u128 = 1u128 << job.low;
        let mut s: u128 = 1;
        while s < total {
            let g = &pk.gens[job.gen_start + s.trailing_zeros() as usize];
            for i in 0..len {
                cur[i] ^= g[i];
            }
            if !v.visit(weight(&cur)) {
                return;
            }
            s += 1;
        }
    }

    fn run_generic<V: Visitor>(&self, job: &Job, v: &mut V) {
        let f = self.field;
        let p = self.p() as u8;
        let mut cur = self.rows[job.lead].to_vec();
        for (g, c) in Self::top_gens(job) {
            for _ in 0..c {
                for (x, &y) in cur.iter_mut().zip(&self.gens[g]) {
                    *x = f.add(*x, y);
                }
            }
        }
        let supports: Vec<Vec<(usize, u8)>> = (0..job.low)
            .map(|t| self.gens[job.gen_start + t].iter().copied().enumerate().filter(|&(_, y)| y != 0).collect())
            .collect();
        let mut weight = cur.iter().filter(|&&x| x != 0).count();
        if !v.visit(weight) {
            return;
        }
        let mut digits = vec![0u8; job.low + 1];
        loop {
            // increment the base-p counter; `t` is the lowest digit that does not wrap
            let mut t = 0;
            while t < job.low {
                digits[t] += 1;
                if digits[t] < p {
                    break;
                }
                digits[t] = 0;
                t += 1;
            }
            if t == job.low {
                return;
            }
            for &(i, y) in &supports[t] {
                let old = cur[i];
                let new = f.add(old, y);
                cur[i] = new;
                weight = weight + (new != 0) as usize - (old != 0) as usize;
            }
            if !v.visit(weight) {
                return;
            }
        }
    }
}

/// Minimum Hamming weight of a nonzero codeword. `None` for the zero code.
pub fn min_distance(space: &Subspace, opts: &DistanceOptions) -> Result<Option<Distance>> {
    let k = space.dim();
    if k == 0 {
        return Ok(None);
    }
    let e = Enumerator::new(space);
    let jobs = plan_jobs(k, e.m(), e.p());
    let needed = projective_count(space.field().order(), k);
    let (jobs, truncated) = if needed > opts.budget {
        if opts.early_stop.is_none() {
            return Err(Error::BudgetExceeded { needed, budget: opts.budget });
        }
        let mut acc = 0u128;
        let take = jobs
            .iter()
            .take_while(|j| {
                acc = acc.saturating_add(j.words(e.p()));
                acc <= opts.budget
            })
            .count()
            .max(1);
        (&jobs[..take], true)
    } else {
        (&jobs[..], false)
    };

    let first_hit = AtomicUsize::new(usize::MAX);
    let results: Vec<Option<(usize, bool)>> = jobs
        .par_iter()
        .enumerate()
        .map(|(idx, job)| {
            if idx > first_hit.load(Ordering::Relaxed) {
                return None;
            }
            let mut v = MinVisitor { best: usize::MAX, stop_at: opts.early_stop, hit: false };
            e.run(job, &mut v);
            if v.hit {
                first_hit.fetch_min(idx, Ordering::Relaxed);
            }
            Some((v.best, v.hit))
        })
        .collect();

    let cutoff = first_hit.load(Ordering::Relaxed);
    let best = results
        .iter()
        .enumerate()
        .filter(|&(idx, _)| idx <= cutoff)
        .filter_map(|(_, r)| r.map(|(b, _)| b))
        .min()
        .expect("at least one job runs");
    let method = if cutoff != usize::MAX || truncated { DistanceMethod::Bounded } else { DistanceMethod::Exhausted };
    Ok(Some(Distance { d: best, method }))
}

/// `A_0..A_n`, the number of codewords of each weight.
pub fn weight_distribution(space: &Subspace, budget: u128) -> Result<Vec<u128>> {
    let n = space.ambient_dim();
    let q = space.field().order();
    let k = space.dim();
    let needed = codeword_count(q, k);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut counts = vec![0u128; n + 1];
    counts[0] = 1;
    if k == 0 {
        return Ok(counts);
    }
    let e = Enumerator::new(space);
    let jobs = plan_jobs(k, e.m(), e.p());
    let partial: Vec<Vec<u128>> = jobs
        .par_iter()
        .map(|job| {
            let mut v = HistVisitor { counts: vec![0; n + 1] };
            e.run(job, &mut v);
            v.counts
        })
        .collect();
    for h in partial {
        for (c, x) in counts.iter_mut().zip(h) {
            *c += x * (q as u128 - 1);
        }
    }
    counts[0] = 1;
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_space(f: &Field, n: usize, k: usize, rng: &mut ChaCha8Rng) -> Subspace {
        let q = f.order();
        Subspace::span(f, n, (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..q) as u8).collect::<Vec<u8>>()))
    }

    /// Weight histogram over every message vector, by direct encoding.
    fn naive_hist(s: &Subspace) -> Vec<u128> {
        let f = s.field();
        let q = f.order() as usize;
        let k = s.dim();
        let n = s.ambient_dim();
        let rows: Vec<&[u8]> = s.vectors().collect();
        let mut hist = vec![0u128; n + 1];
        let mut msg = vec![0usize; k];
        loop {
            let mut w = vec![0u8; n];
            for (r, &c) in rows.iter().zip(&msg) {
                axpy(f, &mut w, c as u8, r);
            }
            hist[w.iter().filter(|&&x| x != 0).count()] += 1;
            let mut i = 0;
            while i < k {
                msg[i] += 1;
                if msg[i] < q {
                    break;
                }
                msg[i] = 0;
                i += 1;
            }
            if i == k {
                return hist;
            }
        }
    }

    #[test]
    fn repetition_code() {
        for q in [2, 3, 4, 5, 8, 9] {
            let f = Field::of_order(q).unwrap();
            for n in [1, 7, 64, 65, 130] {
                let s = Subspace::span(&f, n, [vec![1u8; n]]);
                let d = min_distance(&s, &DistanceOptions::default()).unwrap().unwrap();
                assert_eq!(d, Distance { d: n, method: DistanceMethod::Exhausted });
            }
        }
    }

    #[test]
    fn zero_code() {
        let f = Field::of_order(2).unwrap();
        assert_eq!(min_distance(&Subspace::zero(&f, 5), &DistanceOptions::default()).unwrap(), None);
        assert_eq!(weight_distribution(&Subspace::zero(&f, 5), 10).unwrap(), vec![1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn agrees_with_naive_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let f = Field::of_order(q).unwrap();
            for _ in 0..6 {
                let n = rng.gen_range(1..=90);
                let max_k = match q {
                    2 => 12,
                    3 | 4 => 7,
                    _ => 4,
                };
                let k = rng.gen_range(1..=max_k.min(n));
                let s = random_space(&f, n, k, &mut rng);
                let hist = naive_hist(&s);
                assert_eq!(weight_distribution(&s, u128::MAX).unwrap(), hist);
                let expected = (1..=n).find(|&w| hist[w] > 0);
                let got = min_distance(&s, &DistanceOptions::default()).unwrap().map(|d| d.d);
                assert_eq!(got, expected, "q={q} n={n} k={k}");
            }
        }
    }

    #[test]
    fn multi_job_enumeration() {
        // k large enough that the leading rows are split into several jobs
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let f = Field::of_order(2).unwrap();
        let s = random_space(&f, 40, 24, &mut rng);
        assert!(plan_jobs(24, 1, 2).len() > 24);
        let d = min_distance(&s, &DistanceOptions::default()).unwrap().unwrap();
        let hist = weight_distribution(&s, u128::MAX).unwrap();
        assert_eq!(hist.iter().sum::<u128>(), 1 << 24);
        assert_eq!(Some(d.d), (1..=40).find(|&w| hist[w] > 0));
    }

    #[test]
    fn budget_and_early_stop() {
        let f = Field::of_order(2).unwrap();
        let s = Subspace::full(&f, 20);
        let err = min_distance(&s, &DistanceOptions::with_budget(1000)).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { needed: (1 << 20) - 1, budget: 1000 });
        let d = min_distance(&s, &DistanceOptions { budget: 1000, early_stop: Some(3) }).unwrap().unwrap();
        assert_eq!(d.method, DistanceMethod::Bounded);
        assert!(d.d <= 3);
        let exact = min_distance(&s, &DistanceOptions { budget: u128::MAX, early_stop: Some(0) }).unwrap().unwrap();
        assert_eq!(exact, Distance { d: 1, method: DistanceMethod::Exhausted });
    }

    #[test]
    fn early_stop_is_deterministic() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let f = Field::of_order(3).unwrap();
        let s = random_space(&f, 30, 14, &mut rng);
        let opts = DistanceOptions { budget: u128::MAX, early_stop: Some(12) };
        let a = min_distance(&s, &opts).unwrap();
        for threads in [1, 2, 3] {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
            assert_eq!(pool.install(|| min_distance(&s, &opts).unwrap()), a);
        }
    }
}
