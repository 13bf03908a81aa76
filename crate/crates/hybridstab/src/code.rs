//! Construction and validation of hybrid stabilizer codes: the tuple
//! (S, G0, L0, T0) together with builders for the standard families
//! (single-axis stabilizers with a product transversal, Bacon-Shor grids and
//! their classical hybridizations, the rotated toric lattice, and the d=18
//! single-qudit code).

use crate::error::{Error, Result};
use crate::group::{self, PauliSubgroup};
use crate::howell::solve_system;
use crate::pauli::PauliOperator;

/// A hybrid stabilizer code: stabilizer group S, gauge pairs generating G0,
/// logical pairs generating L0, and a transversal subset T0 of coset
/// representatives (one classical sector per element, the first being I).
#[derive(Debug, Clone)]
pub struct HybridCode {
    dim: u64,
    num_sites: usize,
    stabilizer: PauliSubgroup,
    gauge_pairs: Vec<(PauliOperator, PauliOperator)>,
    logical_pairs: Vec<(PauliOperator, PauliOperator)>,
    transversal: Vec<PauliOperator>,
}

impl HybridCode {
    /// Assemble a code from parts. Only structural impossibilities error
    /// here; semantic problems are reported by [`HybridCode::validate`].
    /// An empty transversal defaults to `{I}`.
    pub fn new(
        dim: u64,
        num_sites: usize,
        stabilizer_gens: Vec<PauliOperator>,
        gauge_pairs: Vec<(PauliOperator, PauliOperator)>,
        logical_pairs: Vec<(PauliOperator, PauliOperator)>,
        mut transversal: Vec<PauliOperator>,
    ) -> Result<Self> {
        let stabilizer = PauliSubgroup::new(dim, num_sites, stabilizer_gens, false)?;
        let check = |g: &PauliOperator| -> Result<()> {
            if g.qudit_dim() != dim {
                return Err(Error::DimensionMismatch(dim, g.qudit_dim()));
            }
            if g.num_sites() != num_sites {
                return Err(Error::SiteCountMismatch(num_sites, g.num_sites()));
            }
            Ok(())
        };
        for (a, b) in gauge_pairs.iter().chain(logical_pairs.iter()) {
            check(a)?;
            check(b)?;
        }
        if transversal.is_empty() {
            transversal.push(PauliOperator::identity(dim, num_sites));
        }
        for t in &transversal {
            check(t)?;
        }
        Ok(HybridCode {
            dim,
            num_sites,
            stabilizer,
            gauge_pairs,
            logical_pairs,
            transversal,
        })
    }

    pub fn qudit_dim(&self) -> u64 {
        self.dim
    }

    pub fn num_sites(&self) -> usize {
        self.num_sites
    }

    pub fn stabilizer(&self) -> &PauliSubgroup {
        &self.stabilizer
    }

    pub fn gauge_pairs(&self) -> &[(PauliOperator, PauliOperator)] {
        &self.gauge_pairs
    }

    pub fn logical_pairs(&self) -> &[(PauliOperator, PauliOperator)] {
        &self.logical_pairs
    }

    pub fn transversal(&self) -> &[PauliOperator] {
        &self.transversal
    }

    /// Number of independent stabilizer generators.
    pub fn stabilizer_rank(&self) -> usize {
        self.stabilizer.rank()
    }

    /// Number of gauge qudit pairs (r).
    pub fn num_gauge_pairs(&self) -> usize {
        self.gauge_pairs.len()
    }

    /// Number of logical qudit pairs (k).
    pub fn num_logical_pairs(&self) -> usize {
        self.logical_pairs.len()
    }

    pub fn sector_count(&self) -> usize {
        self.transversal.len()
    }

    /// Replace the transversal, e.g. to truncate a full product transversal.
    pub fn with_transversal(mut self, transversal: Vec<PauliOperator>) -> Result<Self> {
        for t in &transversal {
            if t.qudit_dim() != self.dim {
                return Err(Error::DimensionMismatch(self.dim, t.qudit_dim()));
            }
            if t.num_sites() != self.num_sites {
                return Err(Error::SiteCountMismatch(self.num_sites, t.num_sites()));
            }
        }
        if transversal.is_empty() {
            return Err(Error::ParameterRange("transversal cannot be empty".into()));
        }
        self.transversal = transversal;
        Ok(self)
    }

    /// Gauge and logical generators flattened in pair order.
    pub fn gauge_elements(&self) -> Vec<&PauliOperator> {
        self.gauge_pairs.iter().flat_map(|(a, b)| [a, b]).collect()
    }

    pub fn logical_elements(&self) -> Vec<&PauliOperator> {
        self.logical_pairs.iter().flat_map(|(a, b)| [a, b]).collect()
    }

    /// The gauge group G = ⟨S, √ω·I, G0⟩ as a subgroup with all phases.
    pub fn gauge_group_with_phases(&self) -> PauliSubgroup {
        let mut gens: Vec<PauliOperator> = self.stabilizer.generators().to_vec();
        gens.extend(self.gauge_elements().into_iter().cloned());
        PauliSubgroup::new(self.dim, self.num_sites, gens, true)
            .expect("dimensions already checked")
    }

    /// Dimension of one sector subspace C: d^n / |S| (exact integer for a
    /// valid stabilizer group).
    pub fn code_dimension(&self) -> Result<u128> {
        let span = self.stabilizer.coset_count()?;
        let total = checked_power(self.dim, self.num_sites)
            .ok_or_else(|| Error::ParameterRange("d^n overflows".into()))?;
        Ok(total / span)
    }

    /// Per-pair effective dimension d / gcd(⟨A,B⟩, d): the size of the Weyl
    /// pair the generators realize on the code space (d itself when the
    /// symplectic form is a unit).
    pub fn pair_dimension(&self, pair: &(PauliOperator, PauliOperator)) -> u64 {
        let e = pair.0.symplectic_form_raw(&pair.1);
        if e == 0 {
            return 1;
        }
        self.dim / gcd(e, self.dim)
    }

    /// Syndrome of `e` against the code's ordered stabilizer generators.
    pub fn syndrome(&self, e: &PauliOperator) -> Result<Vec<u64>> {
        if e.qudit_dim() != self.dim {
            return Err(Error::DimensionMismatch(self.dim, e.qudit_dim()));
        }
        if e.num_sites() != self.num_sites {
            return Err(Error::SiteCountMismatch(self.num_sites, e.num_sites()));
        }
        group::syndrome(self.stabilizer.generators(), e)
    }

    /// Check every structural invariant of the tuple; returns all failures
    /// rather than stopping at the first.
    pub fn validate(&self) -> ValidationReport {
        let mut failures = Vec::new();
        let gens = self.stabilizer.generators();

        let mut abelian = true;
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                if gens[i].symplectic_form_raw(&gens[j]) != 0 {
                    abelian = false;
                    failures.push(ValidationFailure {
                        kind: FailureKind::StabilizerNotAbelian,
                        detail: format!(
                            "stabilizer generators {i} and {j} do not commute: {} vs {}",
                            gens[i], gens[j]
                        ),
                    });
                }
            }
        }
        if abelian {
            let scalars = self.stabilizer.scalar_phases().to_vec();
            if scalars != [0] {
                failures.push(ValidationFailure {
                    kind: FailureKind::StabilizerScalars,
                    detail: format!(
                        "stabilizer group contains nontrivial scalars, phase exponents {scalars:?}"
                    ),
                });
            }
        }

        for (role, elems) in [
            ("gauge", self.gauge_elements()),
            ("logical", self.logical_elements()),
        ] {
            for (idx, g) in elems.iter().enumerate() {
                if !self.stabilizer.centralizes(g) {
                    failures.push(ValidationFailure {
                        kind: FailureKind::NotCentralizing,
                        detail: format!("{role} generator {idx} ({g}) does not centralize S"),
                    });
                }
            }
        }

        for (gi, g) in self.gauge_elements().iter().enumerate() {
            for (li, l) in self.logical_elements().iter().enumerate() {
                if g.symplectic_form_raw(l) != 0 {
                    failures.push(ValidationFailure {
                        kind: FailureKind::GaugeLogicalCrossTalk,
                        detail: format!(
                            "gauge generator {gi} ({g}) and logical generator {li} ({l}) do not commute"
                        ),
                    });
                }
            }
        }

        let s_with_phases = PauliSubgroup::new(
            self.dim,
            self.num_sites,
            gens.to_vec(),
            true,
        )
        .expect("dimensions already checked");
        for (role, pairs) in [("gauge", &self.gauge_pairs), ("logical", &self.logical_pairs)] {
            for (pi, pair) in pairs.iter().enumerate() {
                let e = pair.0.symplectic_form_raw(&pair.1);
                if e == 0 {
                    failures.push(ValidationFailure {
                        kind: FailureKind::PairDegenerate,
                        detail: format!(
                            "{role} pair {pi} commutes: ({}, {})",
                            pair.0, pair.1
                        ),
                    });
                    continue;
                }
                // the pair realizes a Weyl pair of dimension d/gcd(e,d) on C;
                // its generators to that power must fall back into ⟨S, phases⟩
                let m = self.pair_dimension(pair);
                for op in [&pair.0, &pair.1] {
                    let p = op.pow(m as i64);
                    if !s_with_phases.member_mod_phase(&p) {
                        failures.push(ValidationFailure {
                            kind: FailureKind::PairOrder,
                            detail: format!(
                                "{role} pair {pi}: ({op})^{m} is not in ⟨S, phases⟩"
                            ),
                        });
                    }
                }
                for (pj, other) in pairs.iter().enumerate() {
                    if pi >= pj {
                        continue;
                    }
                    for a in [&pair.0, &pair.1] {
                        for b in [&other.0, &other.1] {
                            if a.symplectic_form_raw(b) != 0 {
                                failures.push(ValidationFailure {
                                    kind: FailureKind::PairsNotCommuting,
                                    detail: format!(
                                        "{role} pairs {pi} and {pj} do not commute elementwise: {a} vs {b}"
                                    ),
                                });
                            }
                        }
                    }
                }
            }
        }

        match self.transversal.first() {
            Some(t) if t.is_identity() => {}
            Some(t) => failures.push(ValidationFailure {
                kind: FailureKind::TransversalFirstNotIdentity,
                detail: format!("first transversal element must be I, got {t}"),
            }),
            None => failures.push(ValidationFailure {
                kind: FailureKind::TransversalFirstNotIdentity,
                detail: "transversal is empty".into(),
            }),
        }
        for i in 0..self.transversal.len() {
            for j in i + 1..self.transversal.len() {
                if self
                    .stabilizer
                    .same_coset(&self.transversal[i], &self.transversal[j])
                {
                    failures.push(ValidationFailure {
                        kind: FailureKind::TransversalCosetCollision,
                        detail: format!(
                            "transversal elements {i} ({}) and {j} ({}) lie in the same coset of N(S)",
                            self.transversal[i], self.transversal[j]
                        ),
                    });
                }
            }
        }

        // minimality: no gauge/logical generator is generated by the others
        // with S and phases (mod-phase membership, so a plain Howell span of
        // the leave-one-out symplectic rows decides it)
        let all_elems: Vec<PauliOperator> = self
            .gauge_elements()
            .into_iter()
            .chain(self.logical_elements())
            .cloned()
            .collect();
        let elem_rows: Vec<Vec<u64>> = all_elems.iter().map(|g| g.symplectic_vector()).collect();
        let stab_rows: Vec<Vec<u64>> = gens.iter().map(|g| g.symplectic_vector()).collect();
        for (idx, g) in all_elems.iter().enumerate() {
            let mut others = stab_rows.clone();
            others.extend(
                elem_rows
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != idx)
                    .map(|(_, r)| r.clone()),
            );
            let span = crate::howell::HowellForm::new(&others, self.dim, 2 * self.num_sites);
            if span.contains(&elem_rows[idx]) {
                failures.push(ValidationFailure {
                    kind: FailureKind::NotMinimal,
                    detail: format!(
                        "generator {idx} ({g}) is a member of the group generated by the others with S and phases"
                    ),
                });
            }
        }

        // dimension accounting: dim C must equal the product of pair dimensions
        if abelian && self.stabilizer.scalar_phases() == [0] {
            if let (Ok(dim_c), Some(_)) = (
                self.code_dimension(),
                checked_power(self.dim, self.num_sites),
            ) {
                let expected: u128 = self
                    .gauge_pairs
                    .iter()
                    .chain(self.logical_pairs.iter())
                    .map(|p| self.pair_dimension(p) as u128)
                    .product();
                if dim_c != expected {
                    failures.push(ValidationFailure {
                        kind: FailureKind::DimensionAccounting,
                        detail: format!(
                            "sector dimension d^n/|S| = {dim_c} but gauge/logical pairs account for {expected}"
                        ),
                    });
                }
            }
        }

        ValidationReport { failures }
    }
}

fn checked_power(base: u64, exp: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base as u128)?;
    }
    Some(acc)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureKind {
    StabilizerNotAbelian,
    StabilizerScalars,
    NotCentralizing,
    GaugeLogicalCrossTalk,
    PairDegenerate,
    PairOrder,
    PairsNotCommuting,
    TransversalFirstNotIdentity,
    TransversalCosetCollision,
    NotMinimal,
    DimensionAccounting,
}

#[derive(Debug, Clone)]
pub struct ValidationFailure {
    pub kind: FailureKind,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct ValidationReport {
    failures: Vec<ValidationFailure>,
}

impl ValidationReport {
    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failures(&self) -> &[ValidationFailure] {
        &self.failures
    }
}

/// A classical linear code over Z_d given by a generator matrix (rows are a
/// generating set for the codeword module).
#[derive(Debug, Clone)]
pub struct LinearCode {
    modulus: u64,
    length: usize,
    rows: Vec<Vec<u64>>,
}

impl LinearCode {
    pub fn new(rows: Vec<Vec<u64>>, modulus: u64, length: usize) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::BadDimension(modulus));
        }
        for r in &rows {
            if r.len() != length {
                return Err(Error::ClassicalLength {
                    expected: length,
                    got: r.len(),
                });
            }
        }
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(|e| e % modulus).collect())
            .collect();
        Ok(LinearCode {
            modulus,
            length,
            rows,
        })
    }

    /// The zero code of a given length (no generators, single codeword 0).
    pub fn zero(modulus: u64, length: usize) -> Self {
        LinearCode {
            modulus,
            length,
            rows: Vec::new(),
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    /// Minimum weight over nonzero codewords by exhaustive enumeration;
    /// `None` for the zero code. Guarded to enumerable sizes.
    pub fn min_distance(&self) -> Result<Option<u64>> {
        let k = self.rows.len() as u32;
        if k == 0 {
            return Ok(None);
        }
        let total = (self.modulus as u128).checked_pow(k);
        match total {
            Some(t) if t <= 1 << 20 => {}
            _ => {
                return Err(Error::ParameterRange(format!(
                    "codeword enumeration too large: {}^{k}",
                    self.modulus
                )))
            }
        }
        let total = self.modulus.pow(k);
        let mut best: Option<u64> = None;
        for mut idx in 1..total {
            let mut word = vec![0u64; self.length];
            for row in &self.rows {
                let c = idx % self.modulus;
                idx /= self.modulus;
                if c != 0 {
                    for (w, r) in word.iter_mut().zip(row.iter()) {
                        *w = (*w + c * r) % self.modulus;
                    }
                }
            }
            let wt = word.iter().filter(|&&e| e != 0).count() as u64;
            if wt > 0 {
                best = Some(best.map_or(wt, |b| b.min(wt)));
            }
        }
        Ok(best)
    }
}

/// Look up a named binary classical code: `rep<k>` (length-k repetition) or
/// `hamming743`.
pub fn classical_registry(name: &str) -> Result<LinearCode> {
    if let Some(k) = name.strip_prefix("rep") {
        let k: usize = k
            .parse()
            .map_err(|_| Error::UnknownClassicalCode(name.into()))?;
        if k == 0 {
            return Err(Error::UnknownClassicalCode(name.into()));
        }
        return LinearCode::new(vec![vec![1; k]], 2, k);
    }
    if name == "hamming743" {
        let rows = vec![
            vec![1, 0, 0, 0, 1, 1, 0],
            vec![0, 1, 0, 0, 1, 0, 1],
            vec![0, 0, 1, 0, 0, 1, 1],
            vec![0, 0, 0, 1, 1, 1, 1],
        ];
        return LinearCode::new(rows, 2, 7);
    }
    Err(Error::UnknownClassicalCode(name.into()))
}

/// The n-qudit code with S = ⟨Z_1..Z_s⟩, gauge pairs (X_i, Z_i) on the next
/// r qudits, logical pairs on the rest, and the full product transversal
/// {X_1^{a_1}⋯X_s^{a_s}} in lexicographic order (truncatable afterwards via
/// [`HybridCode::with_transversal`]).
pub fn build_motivating(dim: u64, num_sites: usize, s: usize, r: usize) -> Result<HybridCode> {
    if dim < 2 {
        return Err(Error::BadDimension(dim));
    }
    if num_sites == 0 || s > num_sites || r > num_sites - s {
        return Err(Error::ParameterRange(format!(
            "need s ≤ n and r ≤ n - s, got n={num_sites}, s={s}, r={r}"
        )));
    }
    let sectors = checked_power(dim, s)
        .filter(|&t| t <= 1 << 16)
        .ok_or_else(|| Error::ParameterRange(format!("full transversal d^s = {dim}^{s} too large")))?;
    let stab: Vec<PauliOperator> = (0..s)
        .map(|j| PauliOperator::single_z(dim, num_sites, j, 1))
        .collect();
    let pair_at = |i: usize| {
        (
            PauliOperator::single_x(dim, num_sites, i, 1),
            PauliOperator::single_z(dim, num_sites, i, 1),
        )
    };
    let gauge: Vec<_> = (s..s + r).map(pair_at).collect();
    let logical: Vec<_> = (s + r..num_sites).map(pair_at).collect();
    let mut transversal = Vec::with_capacity(sectors as usize);
    for mut idx in 0..sectors {
        let mut x = vec![0i64; num_sites];
        // lexicographic in (a_1 .. a_s): a_1 most significant
        for j in (0..s).rev() {
            x[j] = (idx % dim as u128) as i64;
            idx /= dim as u128;
        }
        transversal.push(PauliOperator::from_exponents(dim, 0, &x, &vec![0; num_sites])?);
    }
    HybridCode::new(dim, num_sites, stab, gauge, logical, transversal)
}

/// Grid coordinates (1-based rows/columns) to site index, row-major.
fn grid_site(ell: usize, i: usize, j: usize) -> usize {
    (i - 1) * ell + (j - 1)
}

/// The ℓ×ℓ Bacon-Shor subsystem code with trivial transversal.
///
/// Stabilizers are adjacent-column X products and adjacent-row Z products
/// (X-type block first); logicals are the column-1 X product and row-1 Z
/// product. The two-body gauge generators are folded into canonical
/// anticommuting pairs by symplectic reduction modulo S.
pub fn build_bacon_shor(ell: usize) -> Result<HybridCode> {
    if ell < 2 {
        return Err(Error::ParameterRange(format!("need ℓ ≥ 2, got {ell}")));
    }
    let n = ell * ell;
    let d = 2u64;
    let mut stab = Vec::new();
    for j in 1..ell {
        // X_{(*,j)} X_{(*,j+1)}
        let mut x = vec![0i64; n];
        for i in 1..=ell {
            x[grid_site(ell, i, j)] = 1;
            x[grid_site(ell, i, j + 1)] = 1;
        }
        stab.push(PauliOperator::from_exponents(d, 0, &x, &vec![0; n])?);
    }
    for i in 1..ell {
        // Z_{(i,*)} Z_{(i+1,*)}
        let mut z = vec![0i64; n];
        for j in 1..=ell {
            z[grid_site(ell, i, j)] = 1;
            z[grid_site(ell, i + 1, j)] = 1;
        }
        stab.push(PauliOperator::from_exponents(d, 0, &vec![0; n], &z)?);
    }

    let mut raw_gauge = Vec::new();
    for i in 1..=ell {
        for j in 1..ell {
            let mut x = vec![0i64; n];
            x[grid_site(ell, i, j)] = 1;
            x[grid_site(ell, i, j + 1)] = 1;
            raw_gauge.push(PauliOperator::from_exponents(d, 0, &x, &vec![0; n])?);
        }
    }
    for i in 1..ell {
        for j in 1..=ell {
            let mut z = vec![0i64; n];
            z[grid_site(ell, i, j)] = 1;
            z[grid_site(ell, i + 1, j)] = 1;
            raw_gauge.push(PauliOperator::from_exponents(d, 0, &vec![0; n], &z)?);
        }
    }

    let mut lx = vec![0i64; n];
    for i in 1..=ell {
        lx[grid_site(ell, i, 1)] = 1;
    }
    let mut lz = vec![0i64; n];
    for j in 1..=ell {
        lz[grid_site(ell, 1, j)] = 1;
    }
    let logical = vec![(
        PauliOperator::from_exponents(d, 0, &lx, &vec![0; n])?,
        PauliOperator::from_exponents(d, 0, &vec![0; n], &lz)?,
    )];

    let gauge_pairs = pair_up_gauge_generators(raw_gauge, &stab, d, n)?;
    HybridCode::new(d, n, stab, gauge_pairs, logical, Vec::new())
}

/// Symplectic Gram-Schmidt: extract anticommuting pairs from a raw gauge
/// generating set, reducing the remainder to commute with each extracted
/// pair; leftovers must reduce into ⟨S⟩ mod phase.
fn pair_up_gauge_generators(
    mut pool: Vec<PauliOperator>,
    stab: &[PauliOperator],
    dim: u64,
    num_sites: usize,
) -> Result<Vec<(PauliOperator, PauliOperator)>> {
    let s_group = PauliSubgroup::new(dim, num_sites, stab.to_vec(), true)?;
    pool.retain(|g| !s_group.member_mod_phase(g));
    let mut pairs = Vec::new();
    loop {
        let mut found = None;
        'outer: for a in 0..pool.len() {
            for b in a + 1..pool.len() {
                let e = pool[a].symplectic_form_raw(&pool[b]);
                if e != 0 && gcd(e, dim) == 1 {
                    found = Some((a, b));
                    break 'outer;
                }
            }
        }
        let Some((a, b)) = found else { break };
        let second = pool.remove(b);
        let first = pool.remove(a);
        let e = first.symplectic_form_raw(&second);
        let e_inv = mod_inverse(e, dim).expect("unit by construction");
        for f in pool.iter_mut() {
            let alpha = (dim - f.symplectic_form_raw(&second)) % dim * e_inv % dim;
            let beta = f.symplectic_form_raw(&first) * e_inv % dim;
            if alpha != 0 {
                *f = f.multiply(&first.pow(alpha as i64))?;
            }
            if beta != 0 {
                *f = f.multiply(&second.pow(beta as i64))?;
            }
            debug_assert_eq!(f.symplectic_form_raw(&first), 0);
            debug_assert_eq!(f.symplectic_form_raw(&second), 0);
        }
        pool.retain(|g| !s_group.member_mod_phase(g));
        pairs.push((first, second));
    }
    if let Some(stray) = pool.first() {
        return Err(Error::InvalidCode(format!(
            "gauge generator {stray} is central but outside ⟨S⟩; cannot pair"
        )));
    }
    Ok(pairs)
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (m as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(m as i128) as u64)
}

/// Extend a CSS subsystem code (trivial transversal) to a hybrid code whose
/// sectors realize the given classical codes on the X-type and Z-type
/// syndromes: Z-type representatives h_i with σ(h_i) = (v_i, 0) and X-type
/// f_j with σ(f_j) = (0, w_j), with T0 the full product set sorted
/// lexicographically by syndrome.
pub fn hybridize_css(code: &HybridCode, cx: &LinearCode, cz: &LinearCode) -> Result<HybridCode> {
    let d = code.qudit_dim();
    let n = code.num_sites();
    if code.sector_count() != 1 || !code.transversal()[0].is_identity() {
        return Err(Error::ParameterRange(
            "hybridization starts from a code with trivial transversal {I}".into(),
        ));
    }
    if cx.modulus() != d || cz.modulus() != d {
        return Err(Error::DimensionMismatch(d, cx.modulus()));
    }
    let gens = code.stabilizer().generators();
    let mut x_idx = Vec::new();
    let mut z_idx = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let pure_x = g.z_exp().iter().all(|&b| b == 0);
        let pure_z = g.x_exp().iter().all(|&a| a == 0);
        match (pure_x, pure_z) {
            (true, false) => x_idx.push(i),
            (false, true) => z_idx.push(i),
            (true, true) => {
                return Err(Error::NotCss(format!("generator {i} is scalar")));
            }
            (false, false) => {
                return Err(Error::NotCss(format!(
                    "generator {i} ({g}) mixes X and Z parts"
                )));
            }
        }
    }
    if cx.length() != x_idx.len() {
        return Err(Error::ClassicalLength {
            expected: x_idx.len(),
            got: cx.length(),
        });
    }
    if cz.length() != z_idx.len() {
        return Err(Error::ClassicalLength {
            expected: z_idx.len(),
            got: cz.length(),
        });
    }

    // Z-type representative for an X-syndrome v: solve -x_{S_j}·z = v_j
    let a_x: Vec<Vec<u64>> = x_idx
        .iter()
        .map(|&i| gens[i].x_exp().iter().map(|&a| (d - a % d) % d).collect())
        .collect();
    let mut h_reps = Vec::new();
    for v in cx.rows() {
        let z = solve_system(&a_x, v, d).ok_or(Error::UnsolvableSyndrome(d))?;
        let z: Vec<i64> = z.iter().map(|&e| e as i64).collect();
        h_reps.push(PauliOperator::from_exponents(d, 0, &vec![0; n], &z)?);
    }
    // X-type representative for a Z-syndrome w: solve z_{S_j}·x = w_j
    let a_z: Vec<Vec<u64>> = z_idx
        .iter()
        .map(|&i| gens[i].z_exp().to_vec())
        .collect();
    let mut f_reps = Vec::new();
    for w in cz.rows() {
        let x = solve_system(&a_z, w, d).ok_or(Error::UnsolvableSyndrome(d))?;
        let x: Vec<i64> = x.iter().map(|&e| e as i64).collect();
        f_reps.push(PauliOperator::from_exponents(d, 0, &x, &vec![0; n])?);
    }

    let k_total = (h_reps.len() + f_reps.len()) as u32;
    let sectors = (d as u128).checked_pow(k_total).filter(|&t| t <= 1 << 16).ok_or_else(
        || Error::ParameterRange(format!("sector count d^{k_total} too large to enumerate")),
    )?;
    let all_reps: Vec<&PauliOperator> = h_reps.iter().chain(f_reps.iter()).collect();
    let mut sectored: Vec<(Vec<u64>, PauliOperator)> = Vec::with_capacity(sectors as usize);
    let mut seen = std::collections::HashSet::new();
    for mut idx in 0..sectors {
        let mut t = PauliOperator::identity(d, n);
        for rep in &all_reps {
            let c = (idx % d as u128) as i64;
            idx /= d as u128;
            if c != 0 {
                t = t.multiply(&rep.pow(c))?;
            }
        }
        let syn = code.syndrome(&t)?;
        if seen.insert(syn.clone()) {
            sectored.push((syn, t));
        }
    }
    sectored.sort_by(|a, b| a.0.cmp(&b.0));
    let transversal: Vec<PauliOperator> = sectored.into_iter().map(|(_, t)| t).collect();
    code.clone().with_transversal(transversal)
}

/// The d=18 single-qudit code: S = ⟨X^6, Z^6⟩, logicals (X^3, Z^3), default
/// transversal {I, X, X⁻¹}.
pub fn build_gkp18() -> HybridCode {
    build_gkp18_with_transversal(None).expect("fixed construction is well-formed")
}

pub fn build_gkp18_with_transversal(
    transversal: Option<Vec<PauliOperator>>,
) -> Result<HybridCode> {
    let d = 18;
    let x = PauliOperator::single_x(d, 1, 0, 1);
    let stab = vec![
        PauliOperator::single_x(d, 1, 0, 6),
        PauliOperator::single_z(d, 1, 0, 6),
    ];
    let logical = vec![(
        PauliOperator::single_x(d, 1, 0, 3),
        PauliOperator::single_z(d, 1, 0, 3),
    )];
    let t0 = transversal.unwrap_or_else(|| {
        vec![PauliOperator::identity(d, 1), x.clone(), x.pow(-1)]
    });
    HybridCode::new(d, 1, stab, Vec::new(), logical, t0)
}

/// The rotated toric code on an ℓ×ℓ torus of qubits (ℓ even): checkerboard
/// 4-corner face stabilizers, two logical qubits from row/column string
/// pairs, no gauge structure. Parameters [[ℓ², 2, ℓ]] with ℓ²−2 independent
/// generators.
pub fn build_toric(ell: usize) -> Result<HybridCode> {
    if ell < 2 || !ell.is_multiple_of(2) {
        return Err(Error::ParameterRange(format!(
            "rotated toric lattice needs even ℓ ≥ 2, got {ell}"
        )));
    }
    let n = ell * ell;
    let d = 2u64;
    let site = |i: usize, j: usize| (i % ell) * ell + (j % ell);
    let mut stab = Vec::new();
    for i in 0..ell {
        for j in 0..ell {
            let corners = [site(i, j), site(i, j + 1), site(i + 1, j), site(i + 1, j + 1)];
            let mut x = vec![0i64; n];
            let mut z = vec![0i64; n];
            for c in corners {
                if (i + j) % 2 == 0 {
                    x[c] = 1;
                } else {
                    z[c] = 1;
                }
            }
            stab.push(PauliOperator::from_exponents(d, 0, &x, &z)?);
        }
    }
    let string = |xtype: bool, row: bool, index: usize| -> Result<PauliOperator> {
        let mut x = vec![0i64; n];
        let mut z = vec![0i64; n];
        for t in 0..ell {
            let s = if row { site(index, t) } else { site(t, index) };
            if xtype {
                x[s] = 1;
            } else {
                z[s] = 1;
            }
        }
        PauliOperator::from_exponents(d, 0, &x, &z)
    };
    let logical = vec![
        (string(true, true, 0)?, string(false, false, 0)?),
        (string(true, false, 0)?, string(false, true, 0)?),
    ];
    HybridCode::new(d, n, stab, Vec::new(), logical, Vec::new())
}

/// The 7-qubit, 2-sector hybrid subspace code with one logical qubit
/// (s = 6, r = 0, k = 1, T0 = {I, T}).
pub fn build_seven_qubit_hybrid() -> HybridCode {
    let parse = |s: &str| PauliOperator::parse(s, 2).expect("fixed table entries parse");
    let stab = vec![
        parse("XIIZYYZ"),
        parse("ZIIIIIX"),
        parse("IXIXZII"),
        parse("IZIZIXX"),
        parse("IIXXIZI"),
        parse("IIZZXIX"),
    ];
    let logical = vec![(parse("IIIXZZX"), parse("IIIZXXI"))];
    let transversal = vec![parse("IIIIIII"), parse("IIIIXYY")];
    HybridCode::new(2, 7, stab, Vec::new(), logical, transversal)
        .expect("fixed table is well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn motivating_code_validates() {
        let code = build_motivating(2, 4, 2, 1).unwrap();
        assert_eq!(code.stabilizer_rank(), 2);
        assert_eq!(code.num_gauge_pairs(), 1);
        assert_eq!(code.num_logical_pairs(), 1);
        assert_eq!(code.sector_count(), 4); // full 2^s transversal
        let report = code.validate();
        assert!(report.passes(), "{:?}", report.failures());
        assert_eq!(code.code_dimension().unwrap(), 4); // d^{n-s}
    }

    #[test]
    fn motivating_rejects_bad_params() {
        assert!(build_motivating(2, 4, 5, 0).is_err());
        assert!(build_motivating(2, 4, 2, 3).is_err());
        assert!(build_motivating(1, 4, 2, 0).is_err());
    }

    #[test]
    fn motivating_stabilizer_coset_transversal_invalid() {
        // T0 = {I, Z_1}: Z_1 ∈ N(S), same coset as I
        let code = build_motivating(2, 4, 2, 1).unwrap();
        let bad = code
            .with_transversal(vec![
                PauliOperator::identity(2, 4),
                PauliOperator::single_z(2, 4, 0, 1),
            ])
            .unwrap();
        let report = bad.validate();
        assert!(!report.passes());
        assert!(report
            .failures()
            .iter()
            .any(|f| f.kind == FailureKind::TransversalCosetCollision));
    }

    #[test]
    fn motivating_trivial_logical_case() {
        let code = build_motivating(2, 2, 2, 0).unwrap();
        assert_eq!(code.num_logical_pairs(), 0);
        assert!(code.validate().passes());
        assert_eq!(code.code_dimension().unwrap(), 1);
    }

    #[test]
    fn seven_qubit_table_checks() {
        let code = build_seven_qubit_hybrid();
        let report = code.validate();
        assert!(report.passes(), "{:?}", report.failures());
        assert_eq!(code.stabilizer_rank(), 6);
        assert_eq!(code.num_logical_pairs(), 1);
        assert_eq!(code.sector_count(), 2);

        // T anticommutes with S_k exactly for k ∈ {2,3,5,6} (1-based)
        let t = code.transversal()[1].clone();
        let pattern: Vec<bool> = code
            .stabilizer()
            .generators()
            .iter()
            .map(|s| s.symplectic_form_raw(&t) != 0)
            .collect();
        assert_eq!(pattern, vec![false, true, true, false, true, true]);

        // logicals centralize S
        for l in code.logical_elements() {
            assert!(code.stabilizer().centralizes(l));
        }

        // I, X_1, T lie in three pairwise distinct cosets
        let i = PauliOperator::identity(2, 7);
        let x1 = PauliOperator::single_x(2, 7, 0, 1);
        let s = code.stabilizer();
        assert!(!s.same_coset(&i, &x1));
        assert!(!s.same_coset(&i, &t));
        assert!(!s.same_coset(&x1, &t));
        assert_eq!(s.coset_count().unwrap(), 64);
    }

    #[test]
    fn bacon_shor_structure() {
        let code = build_bacon_shor(3).unwrap();
        assert_eq!(code.num_sites(), 9);
        assert_eq!(code.stabilizer_rank(), 4);
        assert_eq!(code.num_logical_pairs(), 1);
        assert_eq!(code.num_gauge_pairs(), 4); // r = n - s - k
        let report = code.validate();
        assert!(report.passes(), "{:?}", report.failures());

        // logical X weight is ℓ; column-pair stabilizers weigh 2ℓ
        assert_eq!(code.logical_pairs()[0].0.weight(), 3);
        assert_eq!(code.stabilizer().generators()[0].weight(), 6);

        // stabilizers commute with all gauge generators
        for s in code.stabilizer().generators() {
            for g in code.gauge_elements() {
                assert_eq!(s.symplectic_form_raw(g), 0);
            }
        }
    }

    #[test]
    fn bacon_shor_small_and_invalid() {
        let code = build_bacon_shor(2).unwrap();
        assert!(code.validate().passes());
        assert_eq!(code.stabilizer_rank(), 2);
        assert_eq!(code.num_gauge_pairs(), 1);
        assert!(build_bacon_shor(1).is_err());
    }

    #[test]
    fn bacon_shor_syndrome_all_ones_row() {
        let ell = 8;
        let code = build_bacon_shor(ell).unwrap();
        // Z on row 1, odd columns: syndrome 1111111 on the X-type block
        let mut z = vec![0i64; ell * ell];
        for j in (1..=ell).step_by(2) {
            z[grid_site(ell, 1, j)] = 1;
        }
        let e = PauliOperator::from_exponents(2, 0, &vec![0; ell * ell], &z).unwrap();
        let syn = code.syndrome(&e).unwrap();
        assert_eq!(&syn[..ell - 1], &vec![1u64; ell - 1][..]);
        assert_eq!(&syn[ell - 1..], &vec![0u64; ell - 1][..]);
        // identity has the zero syndrome
        let zero = code.syndrome(&PauliOperator::identity(2, ell * ell)).unwrap();
        assert!(zero.iter().all(|&e| e == 0));
    }

    #[test]
    fn gkp18_code() {
        let code = build_gkp18();
        let report = code.validate();
        assert!(report.passes(), "{:?}", report.failures());
        assert_eq!(code.stabilizer().coset_count().unwrap(), 9);
        assert_eq!(code.code_dimension().unwrap(), 2);
        assert_eq!(code.sector_count(), 3);
        assert_eq!(code.pair_dimension(&code.logical_pairs()[0]), 2);
        // plain subspace variant
        let plain = build_gkp18_with_transversal(Some(vec![PauliOperator::identity(18, 1)]))
            .unwrap();
        assert!(plain.validate().passes());
        assert_eq!(plain.sector_count(), 1);
    }

    #[test]
    fn gkp18_full_transversal_distinct_cosets() {
        let x = PauliOperator::single_x(18, 1, 0, 1);
        let z = PauliOperator::single_z(18, 1, 0, 1);
        let mut t0 = vec![PauliOperator::identity(18, 1)];
        for (a, b) in [
            (1i64, 0i64),
            (-1, 0),
            (0, 1),
            (0, -1),
            (1, 1),
            (1, -1),
            (-1, 1),
            (-1, -1),
        ] {
            t0.push(x.pow(a).multiply(&z.pow(b)).unwrap());
        }
        let code = build_gkp18_with_transversal(Some(t0)).unwrap();
        let report = code.validate();
        assert!(report.passes(), "{:?}", report.failures());
        assert_eq!(code.sector_count(), 9);
    }

    #[test]
    fn toric_structure() {
        let code = build_toric(4).unwrap();
        assert_eq!(code.num_sites(), 16);
        assert_eq!(code.stabilizer_rank(), 14); // ℓ² − 2
        assert_eq!(code.stabilizer().dropped_generators().len(), 2);
        assert_eq!(code.num_logical_pairs(), 2);
        let report = code.validate();
        assert!(report.passes(), "{:?}", report.failures());
        assert!(build_toric(3).is_err());
    }

    #[test]
    fn hybridize_repetition_sectors() {
        let ell = 4;
        let code = build_bacon_shor(ell).unwrap();
        let rep = classical_registry(&format!("rep{}", ell - 1)).unwrap();
        let hybrid = hybridize_css(&code, &rep, &rep).unwrap();
        assert_eq!(hybrid.sector_count(), 4);
        let report = hybrid.validate();
        assert!(report.passes(), "{:?}", report.failures());
        // all pairwise distinct cosets, and syndromes land on the codewords
        for (i, t) in hybrid.transversal().iter().enumerate() {
            for u in hybrid.transversal().iter().skip(i + 1) {
                assert!(!hybrid.stabilizer().same_coset(t, u));
            }
            let syn = hybrid.syndrome(t).unwrap();
            let xs = &syn[..ell - 1];
            let zs = &syn[ell - 1..];
            assert!(xs.iter().all(|&b| b == 0) || xs.iter().all(|&b| b == 1));
            assert!(zs.iter().all(|&b| b == 0) || zs.iter().all(|&b| b == 1));
            let _ = i;
        }
    }

    #[test]
    fn hybridize_zero_code_is_identity_transversal() {
        let code = build_bacon_shor(3).unwrap();
        let zero = LinearCode::zero(2, 2);
        let hybrid = hybridize_css(&code, &zero, &zero).unwrap();
        assert_eq!(hybrid.sector_count(), 1);
        assert!(hybrid.transversal()[0].is_identity());
    }

    #[test]
    fn hybridize_rejects_non_css_and_bad_lengths() {
        let code = build_seven_qubit_hybrid();
        let rep = classical_registry("rep6").unwrap();
        // 7-qubit table mixes X and Z in generators, and has a nontrivial transversal
        assert!(hybridize_css(&code, &rep, &rep).is_err());
        let bs = build_bacon_shor(3).unwrap();
        let wrong_len = classical_registry("rep5").unwrap();
        assert!(matches!(
            hybridize_css(&bs, &wrong_len, &wrong_len),
            Err(Error::ClassicalLength { .. })
        ));
    }

    #[test]
    fn solve_syndrome_hamming_rows_give_z_type_representatives() {
        let ell = 8;
        let code = build_bacon_shor(ell).unwrap();
        let x_type: Vec<PauliOperator> = code.stabilizer().generators()[..ell - 1].to_vec();
        let ham = classical_registry("hamming743").unwrap();
        for row in ham.rows() {
            let rep = crate::group::solve_syndrome(&x_type, row).unwrap();
            assert!(rep.x_exp().iter().all(|&a| a == 0), "Z-type expected");
            assert_eq!(crate::group::syndrome(&x_type, &rep).unwrap(), *row);
        }
    }

    #[test]
    fn hamming_hybrid_sectors_pairwise_distinct() {
        let code = build_bacon_shor(8).unwrap();
        let ham = classical_registry("hamming743").unwrap();
        let hybrid = hybridize_css(&code, &ham, &ham).unwrap();
        assert_eq!(hybrid.sector_count(), 256);
        // validate includes the exhaustive pairwise coset check
        let report = hybrid.validate();
        assert!(report.passes(), "{:?}", report.failures());
    }

    #[test]
    fn classical_codes() {
        let rep7 = classical_registry("rep7").unwrap();
        assert_eq!(rep7.min_distance().unwrap(), Some(7));
        assert_eq!(rep7.dimension(), 1);
        let ham = classical_registry("hamming743").unwrap();
        assert_eq!(ham.length(), 7);
        assert_eq!(ham.dimension(), 4);
        assert_eq!(ham.min_distance().unwrap(), Some(3));
        assert!(classical_registry("rep0").is_err());
        assert!(classical_registry("golay").is_err());
        assert_eq!(LinearCode::zero(2, 5).min_distance().unwrap(), None);
    }

    #[test]
    fn validation_catches_minus_identity_stabilizer() {
        let minus_i = PauliOperator::scalar(2, 2, 2);
        let z = PauliOperator::single_z(2, 2, 0, 1);
        let code = HybridCode::new(2, 2, vec![minus_i, z], vec![], vec![], vec![]).unwrap();
        let report = code.validate();
        assert!(report
            .failures()
            .iter()
            .any(|f| f.kind == FailureKind::StabilizerScalars));
    }

    #[test]
    fn validation_catches_non_minimal_generators() {
        // logical pair duplicating a gauge pair is not minimal
        let x = PauliOperator::single_x(2, 2, 1, 1);
        let z = PauliOperator::single_z(2, 2, 1, 1);
        let code = HybridCode::new(
            2,
            2,
            vec![PauliOperator::single_z(2, 2, 0, 1)],
            vec![(x.clone(), z.clone())],
            vec![(x, z)],
            vec![],
        )
        .unwrap();
        let report = code.validate();
        assert!(!report.passes());
        assert!(report
            .failures()
            .iter()
            .any(|f| f.kind == FailureKind::NotMinimal || f.kind == FailureKind::GaugeLogicalCrossTalk));
    }

    #[test]
    fn validation_catches_commuting_pair() {
        let code = HybridCode::new(
            2,
            2,
            vec![],
            vec![],
            vec![(
                PauliOperator::single_x(2, 2, 0, 1),
                PauliOperator::single_x(2, 2, 1, 1),
            )],
            vec![],
        )
        .unwrap();
        assert!(code
            .validate()
            .failures()
            .iter()
            .any(|f| f.kind == FailureKind::PairDegenerate));
    }

    #[test]
    fn syndrome_additive_on_random_pairs() {
        let code = build_bacon_shor(3).unwrap();
        let a = PauliOperator::parse("XIZYIIXZI", 2).unwrap();
        let b = PauliOperator::parse("IZZXYIIIX", 2).unwrap();
        let sa = code.syndrome(&a).unwrap();
        let sb = code.syndrome(&b).unwrap();
        let sab = code.syndrome(&a.multiply(&b).unwrap()).unwrap();
        for j in 0..sa.len() {
            assert_eq!(sab[j], (sa[j] + sb[j]) % 2);
        }
    }
}
