//! Exact hybrid-code distance by weight-limited enumeration of the
//! forbidden union, plus the closed-form lower bounds from the classical
//! hybridization construction.
//!
//! Enumeration is deterministic: supports in lexicographic order of site
//! tuples, local (a, b) patterns in lexicographic order per site, first hit
//! wins. Workers partition the support space; `find_map_first` keeps the
//! reported witness the globally first hit regardless of thread count.
//! Phases are skipped entirely; the forbidden sets are phase-closed.

use rayon::prelude::*;

use crate::code::HybridCode;
use crate::correct::ForbiddenSets;
use crate::error::{Error, Result};
use crate::pauli::PauliOperator;

#[derive(Debug, Clone)]
pub struct DistanceResult {
    pub exact_distance: Option<usize>,
    pub lower_bound: usize,
    pub upper_bound: usize,
    pub witness: Option<PauliOperator>,
    pub search_cutoff: usize,
}

/// Exhaustive minimum-weight search over the forbidden union up to
/// `max_weight` (clamped to n). Uses the current rayon thread pool.
pub fn exact_distance(code: &HybridCode, max_weight: usize) -> Result<DistanceResult> {
    if max_weight < 1 {
        return Err(Error::ParameterRange("weight cutoff must be ≥ 1".into()));
    }
    let ctx = ForbiddenSets::new(code)?;
    let n = code.num_sites();
    let d = code.qudit_dim();
    let cutoff = max_weight.min(n);

    // per-site, per-local-pattern syndrome contributions
    let locals = (d * d - 1) as usize;
    let gens = ctx.stabilizer_generators();
    let s = gens.len();
    let mut local_syndromes = vec![vec![0u64; locals * s]; n];
    for (site, table) in local_syndromes.iter_mut().enumerate() {
        for li in 0..locals {
            let (a, b) = local_pattern(li, d);
            for (gi, g) in gens.iter().enumerate() {
                // ⟨g, single-site (a,b)⟩ = z_g[site]·a − x_g[site]·b
                table[li * s + gi] = (g.z_exp()[site] * a + (d - b) % d * g.x_exp()[site]) % d;
            }
        }
    }

    for w in 1..=cutoff {
        let supports = SupportEnumerator::new(n, w)?;
        let hit = (0..supports.count()).into_par_iter().find_map_first(|idx| {
            let support = supports.unrank(idx);
            scan_support(&ctx, &local_syndromes, &support, d, s, n)
        });
        if let Some(witness) = hit {
            debug_assert_eq!(witness.weight(), w);
            debug_assert!(!ctx.membership(&witness).unwrap().is_empty());
            return Ok(DistanceResult {
                exact_distance: Some(w),
                lower_bound: w,
                upper_bound: w,
                witness: Some(witness),
                search_cutoff: cutoff,
            });
        }
    }
    Ok(DistanceResult {
        exact_distance: None,
        lower_bound: cutoff + 1,
        upper_bound: n,
        witness: None,
        search_cutoff: cutoff,
    })
}

/// As [`exact_distance`] on a dedicated pool of `threads` workers.
pub fn exact_distance_with_threads(
    code: &HybridCode,
    max_weight: usize,
    threads: usize,
) -> Result<DistanceResult> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| Error::ParameterRange(format!("thread pool: {e}")))?;
    pool.install(|| exact_distance(code, max_weight))
}

/// Local pattern index -> (a, b), lexicographic with (0,0) skipped.
fn local_pattern(idx: usize, d: u64) -> (u64, u64) {
    let idx = idx as u64 + 1;
    (idx / d, idx % d)
}

fn scan_support(
    ctx: &ForbiddenSets,
    local_syndromes: &[Vec<u64>],
    support: &[usize],
    d: u64,
    s: usize,
    n: usize,
) -> Option<PauliOperator> {
    let w = support.len();
    let locals = (d * d - 1) as usize;
    let mut pattern = vec![0usize; w];
    let mut syn = vec![0u64; s];
    loop {
        syn.iter_mut().for_each(|e| *e = 0);
        for (t, &site) in support.iter().enumerate() {
            let row = &local_syndromes[site][pattern[t] * s..(pattern[t] + 1) * s];
            for (acc, v) in syn.iter_mut().zip(row.iter()) {
                *acc = (*acc + v) % d;
            }
        }
        let tags = ctx.membership_from_parts(&syn, || {
            let mut v = vec![0u64; 2 * n];
            for (t, &site) in support.iter().enumerate() {
                let (a, b) = local_pattern(pattern[t], d);
                v[site] = a;
                v[n + site] = b;
            }
            v
        });
        if !tags.is_empty() {
            let mut x = vec![0i64; n];
            let mut z = vec![0i64; n];
            for (t, &site) in support.iter().enumerate() {
                let (a, b) = local_pattern(pattern[t], d);
                x[site] = a as i64;
                z[site] = b as i64;
            }
            return Some(PauliOperator::from_exponents(d, 0, &x, &z).expect("valid exponents"));
        }
        // next pattern, last site fastest
        let mut t = w;
        loop {
            if t == 0 {
                return None;
            }
            t -= 1;
            pattern[t] += 1;
            if pattern[t] < locals {
                break;
            }
            pattern[t] = 0;
        }
    }
}

/// Lexicographic enumeration of w-subsets of 0..n with O(n) unranking, so
/// the index space can be partitioned across workers.
struct SupportEnumerator {
    n: usize,
    w: usize,
    count: u64,
    binomials: Vec<Vec<u64>>,
}

impl SupportEnumerator {
    fn new(n: usize, w: usize) -> Result<Self> {
        let mut binomials = vec![vec![0u64; w + 1]; n + 1];
        for i in 0..=n {
            binomials[i][0] = 1;
            for j in 1..=w.min(i) {
                let v = binomials[i - 1][j - 1] as u128
                    + if j < i { binomials[i - 1][j] as u128 } else { 0 };
                if v > u64::MAX as u128 / 2 {
                    return Err(Error::ParameterRange(format!(
                        "support space C({n},{w}) too large to enumerate"
                    )));
                }
                binomials[i][j] = v as u64;
            }
        }
        let count = binomials[n][w];
        Ok(SupportEnumerator {
            n,
            w,
            count,
            binomials,
        })
    }

    fn count(&self) -> u64 {
        self.count
    }

    fn unrank(&self, mut idx: u64) -> Vec<usize> {
        let mut support = Vec::with_capacity(self.w);
        let mut site = 0;
        let mut remaining = self.w;
        while remaining > 0 {
            // subsets starting with `site` then choosing remaining-1 from the rest
            let with_site = self.binomials[self.n - site - 1][remaining - 1];
            if idx < with_site {
                support.push(site);
                remaining -= 1;
            } else {
                idx -= with_site;
            }
            site += 1;
        }
        support
    }
}

/// The anticommutation degrees of the code's stabilizer generating set: the
/// maximum number of generators any single-site error anticommutes with,
/// overall and (when the generators split into pure X-type and Z-type sets)
/// per type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnticommuteDegrees {
    pub overall: usize,
    pub css: Option<(usize, usize)>,
}

pub fn anticommute_degree(code: &HybridCode) -> Result<AnticommuteDegrees> {
    let report = code.validate();
    if !report.passes() {
        return Err(Error::InvalidCode(
            report
                .failures()
                .first()
                .map(|f| f.detail.clone())
                .unwrap_or_default(),
        ));
    }
    let d = code.qudit_dim();
    let n = code.num_sites();
    let gens = code.stabilizer().generators();
    let mut x_type = Vec::new();
    let mut z_type = Vec::new();
    let mut css = !gens.is_empty();
    for g in gens {
        let pure_x = g.z_exp().iter().all(|&b| b == 0);
        let pure_z = g.x_exp().iter().all(|&a| a == 0);
        if pure_x && !pure_z {
            x_type.push(g);
        } else if pure_z && !pure_x {
            z_type.push(g);
        } else {
            css = false;
        }
    }
    let mut overall = 0usize;
    let mut m_x = 0usize;
    let mut m_z = 0usize;
    for site in 0..n {
        for li in 0..(d * d - 1) as usize {
            let (a, b) = local_pattern(li, d);
            let hits = |set: &[&PauliOperator]| {
                set.iter()
                    .filter(|g| !((g.z_exp()[site] * a + (d - b) % d * g.x_exp()[site]).is_multiple_of(d)))
                    .count()
            };
            let all: Vec<&PauliOperator> = gens.iter().collect();
            overall = overall.max(hits(&all));
            if css {
                m_x = m_x.max(hits(&x_type));
                m_z = m_z.max(hits(&z_type));
            }
        }
    }
    Ok(AnticommuteDegrees {
        overall,
        css: css.then_some((m_x, m_z)),
    })
}

/// Distance lower bound for a hybridized code: min(d, ⌈d_c/m⌉).
pub fn hybrid_bound(base_distance: u64, classical_distance: u64, m: u64) -> u64 {
    base_distance.min(classical_distance.div_ceil(m))
}

/// CSS variant: min(d, ⌈d_X/m_X⌉, ⌈d_Z/m_Z⌉).
pub fn hybrid_bound_css(
    base_distance: u64,
    x: (u64, u64),
    z: (u64, u64),
) -> u64 {
    base_distance
        .min(x.0.div_ceil(x.1))
        .min(z.0.div_ceil(z.1))
}
