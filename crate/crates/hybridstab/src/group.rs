//! Subgroups of the qudit Pauli group given by generating sets: canonical
//! echelon form over Z_d, membership (mod phase or phase-exact), centralizer
//! queries, coset identity and counting, scalar content, and syndrome solving.

use crate::error::{Error, Result};
use crate::howell::{solve_system, HowellForm};
use crate::pauli::PauliOperator;

/// A subgroup of P_{d,n} described by an ordered generating set.
///
/// `includes_all_phases` marks groups with `√ω·I` adjoined (gauge and logical
/// groups); membership for those is modulo scalar phase. Stabilizer groups
/// keep it false and answer membership phase-exactly.
///
/// Construction normalizes the generating set: generators already contained
/// in the group generated by their predecessors are dropped and recorded, not
/// rejected.
#[derive(Debug, Clone)]
pub struct PauliSubgroup {
    dim: u64,
    num_sites: usize,
    generators: Vec<PauliOperator>,
    dropped: Vec<PauliOperator>,
    includes_all_phases: bool,
    echelon: HowellForm,
    scalar_phases: Vec<u64>,
}

impl PauliSubgroup {
    pub fn new(
        dim: u64,
        num_sites: usize,
        generators: Vec<PauliOperator>,
        includes_all_phases: bool,
    ) -> Result<Self> {
        if dim < 2 {
            return Err(Error::BadDimension(dim));
        }
        let mut group = PauliSubgroup {
            dim,
            num_sites,
            generators: Vec::new(),
            dropped: Vec::new(),
            includes_all_phases,
            echelon: HowellForm::new(&[], dim, 2 * num_sites),
            scalar_phases: scalar_subgroup(&[], dim, includes_all_phases),
        };
        for g in generators {
            if g.qudit_dim() != dim {
                return Err(Error::DimensionMismatch(dim, g.qudit_dim()));
            }
            if g.num_sites() != num_sites {
                return Err(Error::SiteCountMismatch(num_sites, g.num_sites()));
            }
            if group.member(&g) {
                group.dropped.push(g);
            } else {
                group.generators.push(g);
                group.recompute();
            }
        }
        Ok(group)
    }

    /// Convenience constructor inferring dimensions from the first generator.
    pub fn from_generators(generators: Vec<PauliOperator>, includes_all_phases: bool) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::ParameterRange("empty generating set needs explicit dims".into()))?;
        Self::new(first.qudit_dim(), first.num_sites(), generators, includes_all_phases)
    }

    fn recompute(&mut self) {
        let rows: Vec<Vec<u64>> = self
            .generators
            .iter()
            .map(|g| g.symplectic_vector())
            .collect();
        self.echelon = HowellForm::new(&rows, self.dim, 2 * self.num_sites);
        self.scalar_phases =
            scalar_subgroup(&self.generators, self.dim, self.includes_all_phases);
    }

    pub fn qudit_dim(&self) -> u64 {
        self.dim
    }

    pub fn num_sites(&self) -> usize {
        self.num_sites
    }

    /// The kept (normalized) generating set, in insertion order. Syndromes
    /// and reports index stabilizer generators by this order.
    pub fn generators(&self) -> &[PauliOperator] {
        &self.generators
    }

    /// Generators dropped during normalization because they were already
    /// members; surfaced so front ends can warn.
    pub fn dropped_generators(&self) -> &[PauliOperator] {
        &self.dropped
    }

    pub fn includes_all_phases(&self) -> bool {
        self.includes_all_phases
    }

    /// Number of independent generators (Howell rank over Z_d).
    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// True iff all generator pairs commute.
    pub fn is_abelian(&self) -> bool {
        for (i, g) in self.generators.iter().enumerate() {
            for h in &self.generators[i + 1..] {
                if g.symplectic_form_raw(h) != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// The set of scalar phase exponents `c` with `(√ω)^c·I` in the group.
    ///
    /// Computed from the kernel of the symplectic generator matrix: on the
    /// kernel the phase of a product is additive, so the reachable scalars
    /// form the subgroup of Z_2d generated by the kernel-basis products,
    /// the d-th powers of the generators, and (for completeness) the
    /// generator commutator phases. A valid stabilizer group returns `{0}`.
    pub fn scalar_content(&self) -> Result<Vec<u64>> {
        for (i, g) in self.generators.iter().enumerate() {
            for (j, h) in self.generators.iter().enumerate().skip(i + 1) {
                if g.symplectic_form_raw(h) != 0 {
                    return Err(Error::NonAbelian(i, j));
                }
            }
        }
        Ok(self.scalar_phases.clone())
    }

    pub(crate) fn scalar_phases(&self) -> &[u64] {
        &self.scalar_phases
    }

    /// True iff `g` commutes with every generator (membership in N(S) = Z(S)).
    pub fn centralizes(&self, g: &PauliOperator) -> bool {
        self.assert_compatible(g);
        self.generators
            .iter()
            .all(|s| s.symplectic_form_raw(g) == 0)
    }

    /// Group membership. Solves the symplectic system over Z_d; when the
    /// group does not include all phases, additionally requires that the
    /// implied product reproduces `g`'s phase up to a scalar the group
    /// actually contains.
    pub fn member(&self, g: &PauliOperator) -> bool {
        self.assert_compatible(g);
        let v = g.symplectic_vector();
        if self.includes_all_phases {
            return self.echelon.contains(&v);
        }
        let Some(coeffs) = self.echelon.solve(&v) else {
            return false;
        };
        let mut h = PauliOperator::identity(self.dim, self.num_sites);
        for (c, gen) in coeffs.iter().zip(self.generators.iter()) {
            if *c != 0 {
                h = h.multiply(&gen.pow(*c as i64)).expect("matching dims");
            }
        }
        debug_assert_eq!(h.symplectic_vector(), v);
        let delta = (2 * self.dim + g.phase_exp() - h.phase_exp()) % (2 * self.dim);
        self.scalar_phases.binary_search(&delta).is_ok()
    }

    /// Membership of the symplectic class alone (ignoring phase).
    pub fn member_mod_phase(&self, g: &PauliOperator) -> bool {
        self.assert_compatible(g);
        self.echelon.contains(&g.symplectic_vector())
    }

    pub(crate) fn contains_symplectic(&self, v: &[u64]) -> bool {
        self.echelon.contains(v)
    }

    /// True iff `g1` and `g2` generate the same coset of N(S): tests whether
    /// `g1⁻¹·g2` centralizes the group.
    pub fn same_coset(&self, g1: &PauliOperator, g2: &PauliOperator) -> bool {
        let diff = g1.inverse().multiply(g2).expect("matching dims");
        self.centralizes(&diff)
    }

    /// Number of cosets of N(S) in P_{d,n}: the product of d/p over the
    /// Howell pivot values p, which is d^rank for prime d.
    pub fn coset_count(&self) -> Result<u128> {
        if !self.is_abelian() {
            return Err(Error::InvalidStabilizer("non-abelian generating set".into()));
        }
        if self.scalar_phases != [0] {
            return Err(Error::InvalidStabilizer(format!(
                "group contains nontrivial scalars (phase exponents {:?})",
                self.scalar_phases
            )));
        }
        Ok(self.echelon.span_size())
    }

    fn assert_compatible(&self, g: &PauliOperator) {
        assert_eq!(g.qudit_dim(), self.dim, "qudit dimension mismatch");
        assert_eq!(g.num_sites(), self.num_sites, "site count mismatch");
    }
}

/// The subgroup of Z_2d generated by the reachable scalar phases.
fn scalar_subgroup(generators: &[PauliOperator], dim: u64, all_phases: bool) -> Vec<u64> {
    let m = 2 * dim;
    let mut g = m; // gcd accumulator; m acts as "zero"
    if all_phases {
        g = 1;
    }
    if !generators.is_empty() {
        let n = generators[0].num_sites();
        let rows: Vec<Vec<u64>> = generators.iter().map(|p| p.symplectic_vector()).collect();
        let h = HowellForm::new(&rows, dim, 2 * n);
        for u in h.kernel() {
            let mut prod = PauliOperator::identity(dim, n);
            for (c, gen) in u.iter().zip(generators.iter()) {
                if *c != 0 {
                    prod = prod.multiply(&gen.pow(*c as i64)).expect("matching dims");
                }
            }
            debug_assert!(prod.is_scalar());
            g = gcd(g, prod.phase_exp());
        }
        for gen in generators {
            let p = gen.pow(dim as i64);
            debug_assert!(p.is_scalar());
            g = gcd(g, p.phase_exp());
        }
        for (i, a) in generators.iter().enumerate() {
            for b in &generators[i + 1..] {
                g = gcd(g, (2 * a.symplectic_form_raw(b)) % m);
            }
        }
    }
    if g == 0 || g == m {
        return vec![0];
    }
    (0..m / g).map(|k| k * g).collect()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Commutation phases of `e` against an ordered generator list: entry j is
/// the exponent with `S_j·E = ω^{e_j}·E·S_j`.
pub fn syndrome(gens: &[PauliOperator], e: &PauliOperator) -> Result<Vec<u64>> {
    gens.iter().map(|s| s.symplectic_form(e)).collect()
}

/// Find a Pauli operator with the requested syndrome against `gens`, by
/// solving the linear syndrome map over Z_d. Free variables stay zero, so
/// e.g. X-type generator lists yield Z-type representatives. The result is
/// canonical for the echelon back-substitution, not minimum weight.
pub fn solve_syndrome(gens: &[PauliOperator], target: &[u64]) -> Result<PauliOperator> {
    let first = gens
        .first()
        .ok_or_else(|| Error::ParameterRange("empty generator list".into()))?;
    let d = first.qudit_dim();
    let n = first.num_sites();
    if target.len() != gens.len() {
        return Err(Error::ParameterRange(format!(
            "target length {} != generator count {}",
            target.len(),
            gens.len()
        )));
    }
    // syndrome entry j = z_{S_j}·x_E − x_{S_j}·z_E, i.e. row_j = (z_{S_j} | −x_{S_j})
    let rows: Vec<Vec<u64>> = gens
        .iter()
        .map(|s| {
            let mut row = Vec::with_capacity(2 * n);
            row.extend_from_slice(s.z_exp());
            row.extend(s.x_exp().iter().map(|&a| (d - a) % d));
            row
        })
        .collect();
    let w = solve_system(&rows, target, d).ok_or(Error::UnsolvableSyndrome(d))?;
    let x: Vec<i64> = w[..n].iter().map(|&v| v as i64).collect();
    let z: Vec<i64> = w[n..].iter().map(|&v| v as i64).collect();
    PauliOperator::from_exponents(d, 0, &x, &z)
}
