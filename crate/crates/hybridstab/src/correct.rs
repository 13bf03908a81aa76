//! The group-theoretic correctability test for hybrid stabilizer codes: a
//! Pauli error set is correctable iff no pairwise product E_k†·E_l lands in
//! (N(S) \ G) ∪ ⋃_{i≠j} g_i·N(S)·g_j⁻¹.
//!
//! Membership in both unions depends only on syndromes and symplectic
//! classes, never on phases: E ∈ g_i·N(S)·g_j⁻¹ iff σ(E) = σ(g_i) − σ(g_j),
//! and E ∈ N(S)\G iff σ(E) = 0 with E's symplectic class outside the gauge
//! span. The precomputed [`ForbiddenSets`] context exploits this to answer
//! single-operator queries with a hash lookup, which the distance search
//! relies on.

use std::collections::HashMap;

use crate::code::HybridCode;
use crate::error::{Error, Result};
use crate::group::PauliSubgroup;
use crate::pauli::PauliOperator;

/// Which forbidden set a product landed in. Cross-coset tags are unordered
/// (i < j): membership in g_i·N(S)·g_j⁻¹ for the product is equivalent to
/// membership in g_j·N(S)·g_i⁻¹ for its inverse, and error pairs are tested
/// both ways.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SetTag {
    NormalizerMinusGauge,
    CrossCoset { i: usize, j: usize },
}

impl std::fmt::Display for SetTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SetTag::NormalizerMinusGauge => write!(f, "normalizer_minus_gauge"),
            SetTag::CrossCoset { i, j } => write!(f, "cross_coset({i},{j})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Correctable,
    NotCorrectable,
}

/// The offending error pair and the set their product hit.
#[derive(Debug, Clone)]
pub struct Witness {
    pub error_k: usize,
    pub error_l: usize,
    pub tag: SetTag,
}

#[derive(Debug, Clone)]
pub struct CorrectabilityReport {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// Whether each individual sector passes the N(S)\G test alone. The
    /// conjugated sets g(N(S)\G)g⁻¹ all coincide with N(S)\G, so the entries
    /// agree; the vector shape mirrors the per-sector reading.
    pub per_sector: Vec<bool>,
}

impl CorrectabilityReport {
    pub fn is_correctable(&self) -> bool {
        self.verdict == Verdict::Correctable
    }
}

/// Precomputed forbidden-set membership context for one code.
pub struct ForbiddenSets {
    dim: u64,
    num_sites: usize,
    stabilizer_gens: Vec<PauliOperator>,
    gauge: PauliSubgroup,
    sector_count: usize,
    /// syndrome difference -> unordered sector pairs producing it
    cross: HashMap<Vec<u64>, Vec<(usize, usize)>>,
}

impl ForbiddenSets {
    /// Build the context; the code must validate.
    pub fn new(code: &HybridCode) -> Result<Self> {
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
        let gauge = code.gauge_group_with_phases();
        let syndromes: Vec<Vec<u64>> = code
            .transversal()
            .iter()
            .map(|t| code.syndrome(t))
            .collect::<Result<_>>()?;
        let mut cross: HashMap<Vec<u64>, Vec<(usize, usize)>> = HashMap::new();
        for i in 0..syndromes.len() {
            for j in 0..syndromes.len() {
                if i == j {
                    continue;
                }
                let diff: Vec<u64> = syndromes[i]
                    .iter()
                    .zip(syndromes[j].iter())
                    .map(|(a, b)| (a + d - b) % d)
                    .collect();
                let key = (i.min(j), i.max(j));
                let entry = cross.entry(diff).or_default();
                if !entry.contains(&key) {
                    entry.push(key);
                }
            }
        }
        for pairs in cross.values_mut() {
            pairs.sort_unstable();
        }
        Ok(ForbiddenSets {
            dim: d,
            num_sites: code.num_sites(),
            stabilizer_gens: code.stabilizer().generators().to_vec(),
            gauge,
            sector_count: code.transversal().len(),
            cross,
        })
    }

    pub fn qudit_dim(&self) -> u64 {
        self.dim
    }

    pub fn num_sites(&self) -> usize {
        self.num_sites
    }

    pub fn stabilizer_generators(&self) -> &[PauliOperator] {
        &self.stabilizer_gens
    }

    /// Every forbidden set the operator lands in, NormalizerMinusGauge first
    /// and cross tags in (i, j) order.
    pub fn membership(&self, e: &PauliOperator) -> Result<Vec<SetTag>> {
        if e.qudit_dim() != self.dim {
            return Err(Error::DimensionMismatch(self.dim, e.qudit_dim()));
        }
        if e.num_sites() != self.num_sites {
            return Err(Error::SiteCountMismatch(self.num_sites, e.num_sites()));
        }
        let syn: Vec<u64> = self
            .stabilizer_gens
            .iter()
            .map(|s| s.symplectic_form_raw(e))
            .collect();
        Ok(self.membership_from_parts(&syn, || e.symplectic_vector()))
    }

    /// Core test on precomputed data: `syn` is the syndrome, and the
    /// symplectic vector is only requested when the syndrome is zero.
    pub(crate) fn membership_from_parts(
        &self,
        syn: &[u64],
        symplectic: impl FnOnce() -> Vec<u64>,
    ) -> Vec<SetTag> {
        let mut tags = Vec::new();
        if syn.iter().all(|&s| s == 0) {
            // in N(S); forbidden unless inside the gauge group (mod phase)
            if !self.gauge.contains_symplectic(&symplectic()) {
                tags.push(SetTag::NormalizerMinusGauge);
            }
        } else if let Some(pairs) = self.cross.get(syn) {
            tags.extend(pairs.iter().map(|&(i, j)| SetTag::CrossCoset { i, j }));
        }
        tags
    }

    pub(crate) fn syndrome_of(&self, e: &PauliOperator) -> Vec<u64> {
        self.stabilizer_gens
            .iter()
            .map(|s| s.symplectic_form_raw(e))
            .collect()
    }

    fn sector_count(&self) -> usize {
        self.sector_count
    }
}

/// Test a Pauli error set against the code, reporting the first violating
/// pair in (k, l) order.
///
/// Unordered pairs suffice: the forbidden union is closed under inversion
/// once both cross directions are tabulated, and the diagonal k = l is
/// always safe (E = I lies in G, and distinct transversal elements are in
/// distinct cosets by validation).
pub fn check_errors(
    code: &HybridCode,
    errors: &[PauliOperator],
) -> Result<CorrectabilityReport> {
    let ctx = ForbiddenSets::new(code)?;
    check_errors_with(&ctx, errors)
}

/// As [`check_errors`] with a reusable precomputed context.
pub fn check_errors_with(
    ctx: &ForbiddenSets,
    errors: &[PauliOperator],
) -> Result<CorrectabilityReport> {
    if errors.is_empty() {
        return Err(Error::ParameterRange("error set is empty".into()));
    }
    for e in errors {
        if e.qudit_dim() != ctx.dim {
            return Err(Error::DimensionMismatch(ctx.dim, e.qudit_dim()));
        }
        if e.num_sites() != ctx.num_sites {
            return Err(Error::SiteCountMismatch(ctx.num_sites, e.num_sites()));
        }
    }
    let d = ctx.dim;
    let syndromes: Vec<Vec<u64>> = errors.iter().map(|e| ctx.syndrome_of(e)).collect();
    let vectors: Vec<Vec<u64>> = errors.iter().map(|e| e.symplectic_vector()).collect();

    let mut witness: Option<Witness> = None;
    let mut any_nmg = false;
    for k in 0..errors.len() {
        for l in k + 1..errors.len() {
            // product E_k† E_l: syndrome and symplectic class are differences
            let syn: Vec<u64> = syndromes[l]
                .iter()
                .zip(syndromes[k].iter())
                .map(|(a, b)| (a + d - b) % d)
                .collect();
            let tags = ctx.membership_from_parts(&syn, || {
                vectors[l]
                    .iter()
                    .zip(vectors[k].iter())
                    .map(|(a, b)| (a + d - b) % d)
                    .collect()
            });
            if tags.contains(&SetTag::NormalizerMinusGauge) {
                any_nmg = true;
            }
            if witness.is_none() {
                if let Some(&tag) = tags.first() {
                    witness = Some(Witness {
                        error_k: k,
                        error_l: l,
                        tag,
                    });
                }
            }
        }
    }
    let verdict = if witness.is_some() {
        Verdict::NotCorrectable
    } else {
        Verdict::Correctable
    };
    Ok(CorrectabilityReport {
        verdict,
        witness,
        per_sector: vec![!any_nmg; ctx.sector_count()],
    })
}

/// Single-operator forbidden-set membership, the kernel of [`check_errors`].
pub fn forbidden_set_membership(
    code: &HybridCode,
    e: &PauliOperator,
) -> Result<Vec<SetTag>> {
    let ctx = ForbiddenSets::new(code)?;
    ctx.membership(e)
}
