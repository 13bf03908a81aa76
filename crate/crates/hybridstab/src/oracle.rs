//! Dense-matrix ground truth at desk scale: operator rendering, stabilizer
//! projectors, coset orthogonality, subsystem structure spot checks, and the
//! operator-algebra error correction conditions used to independently verify
//! every group-theoretic verdict.
//!
//! Tolerances: 1e-10 for unitary/projector/subspace identities, 1e-8 for
//! commutators of composite products.

use nalgebra::{Complex, DMatrix};

use crate::code::HybridCode;
use crate::error::{Error, Result};
use crate::group::PauliSubgroup;
use crate::pauli::PauliOperator;

pub type C64 = Complex<f64>;
pub type DenseOperator = DMatrix<C64>;

pub const UNITARY_TOL: f64 = 1e-10;
pub const COMMUTATOR_TOL: f64 = 1e-8;

const DEFAULT_CAP: u64 = 4096;
const GROUP_ENUM_CAP: u128 = 1 << 20;

/// Dense oracle with a dimension cap on d^n.
#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    cap: u64,
}

impl Default for Oracle {
    /// Default cap 4096, overridable via the HYBRIDSTAB_DENSE_CAP env var.
    fn default() -> Self {
        let cap = std::env::var("HYBRIDSTAB_DENSE_CAP")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_CAP);
        Oracle { cap }
    }
}

impl Oracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cap(cap: u64) -> Self {
        Oracle { cap }
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    fn space_dim(&self, dim: u64, num_sites: usize) -> Result<usize> {
        let mut acc: u128 = 1;
        for _ in 0..num_sites {
            acc = acc.saturating_mul(dim as u128);
            if acc > self.cap as u128 {
                return Err(Error::DenseCapExceeded(acc.min(u64::MAX as u128) as u64, self.cap));
            }
        }
        Ok(acc as usize)
    }

    /// The d^n × d^n matrix of the operator: Kronecker product of the site
    /// matrices X^a Z^b times the global phase e^{iπc/d}. Built column-wise
    /// from the action ω^{b·k}|k+a⟩ on basis states.
    pub fn render(&self, g: &PauliOperator) -> Result<DenseOperator> {
        let d = g.qudit_dim();
        let n = g.num_sites();
        let big = self.space_dim(d, n)?;
        let mut m = DMatrix::zeros(big, big);
        let c = g.phase_exp();
        for col in 0..big {
            // digits of the basis index, site 1 most significant
            let mut digits = vec![0u64; n];
            let mut rest = col as u64;
            for j in (0..n).rev() {
                digits[j] = rest % d;
                rest /= d;
            }
            let mut zsum = 0u64;
            let mut row = 0usize;
            for ((&digit, &a), &b) in digits.iter().zip(g.x_exp()).zip(g.z_exp()) {
                zsum = (zsum + b * digit) % d;
                row = row * d as usize + ((digit + a) % d) as usize;
            }
            let angle = std::f64::consts::PI * (c + 2 * zsum) as f64 / d as f64;
            m[(row, col)] = C64::from_polar(1.0, angle);
        }
        Ok(m)
    }

    /// P = (1/|S|) Σ_{S∈S} S, by averaging renders over all exponent tuples
    /// of the generating set (each group element is hit uniformly often).
    pub fn stabilizer_projector(&self, s: &PauliSubgroup) -> Result<DenseOperator> {
        if !s.is_abelian() {
            return Err(Error::InvalidStabilizer("non-abelian generating set".into()));
        }
        if s.scalar_content()? != [0] {
            return Err(Error::InvalidStabilizer(
                "group contains nontrivial scalars".into(),
            ));
        }
        let d = s.qudit_dim();
        let n = s.num_sites();
        let big = self.space_dim(d, n)?;
        let k = s.generators().len() as u32;
        let tuples = (d as u128).checked_pow(k).filter(|&t| t <= GROUP_ENUM_CAP).ok_or_else(
            || Error::InvalidStabilizer(format!("group enumeration d^{k} exceeds cap")),
        )?;
        let mut acc: DenseOperator = DMatrix::zeros(big, big);
        for mut idx in 0..tuples {
            let mut el = PauliOperator::identity(d, n);
            for gen in s.generators() {
                let e = (idx % d as u128) as i64;
                idx /= d as u128;
                if e != 0 {
                    el = el.multiply(&gen.pow(e))?;
                }
            }
            add_pauli_into(&mut acc, &el, d, n);
        }
        acc.scale_mut(1.0 / tuples as f64);
        Ok(acc)
    }

    /// Coset orthogonality residual: max entry magnitude of
    /// P·(g_i⁻¹·g_j)·P over distinct transversal pairs.
    pub fn check_coset_orthogonality(&self, code: &HybridCode) -> Result<f64> {
        let p = self.stabilizer_projector(code.stabilizer())?;
        let mut worst = 0.0f64;
        let t = code.transversal();
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                let diff = t[i].inverse().multiply(&t[j])?;
                let m = &p * self.render(&diff)? * &p;
                worst = worst.max(max_abs(&m));
            }
        }
        Ok(worst)
    }

    /// Verify the subsystem decomposition on one sector: gauge and logical
    /// restrictions commute, the sector dimension matches the gauge/logical
    /// pair accounting, and the joint restricted algebra acts irreducibly
    /// (scalar commutant).
    pub fn check_subsystem_structure(&self, code: &HybridCode) -> Result<bool> {
        let p = self.stabilizer_projector(code.stabilizer())?;
        let basis = range_basis(&p, 0.5);
        let expected: u128 = code
            .gauge_pairs()
            .iter()
            .chain(code.logical_pairs().iter())
            .map(|pair| code.pair_dimension(pair) as u128)
            .product();
        if basis.ncols() as u128 != expected {
            return Ok(false);
        }
        let restrict = |g: &PauliOperator| -> Result<DenseOperator> {
            Ok(basis.adjoint() * self.render(g)? * &basis)
        };
        let gauge: Vec<DenseOperator> = code
            .gauge_elements()
            .into_iter()
            .map(restrict)
            .collect::<Result<_>>()?;
        let logical: Vec<DenseOperator> = code
            .logical_elements()
            .into_iter()
            .map(restrict)
            .collect::<Result<_>>()?;
        for a in &gauge {
            for b in &logical {
                if max_abs(&(a * b - b * a)) > UNITARY_TOL {
                    return Ok(false);
                }
            }
        }
        let all: Vec<&DenseOperator> = gauge.iter().chain(logical.iter()).collect();
        Ok(commutant_dimension(&all, basis.ncols()) == 1)
    }

    /// The operator-algebra correction conditions for the code's algebra
    /// A = ⊕_i (I_{A_i} ⊗ B(B_i)): every compressed product Q·E_k†·E_l·Q
    /// must commute with a generating set of A.
    ///
    /// Refuses (distinct error) when the subsystem structure check fails,
    /// since the generating set below is then not known to generate A.
    pub fn check_oaqec_conditions(
        &self,
        code: &HybridCode,
        errors: &[PauliOperator],
    ) -> Result<bool> {
        if errors.is_empty() {
            return Err(Error::ParameterRange("error set is empty".into()));
        }
        if !self.check_subsystem_structure(code)? {
            return Err(Error::OracleRefusal);
        }
        let p = self.stabilizer_projector(code.stabilizer())?;
        let sectors: Vec<DenseOperator> = code
            .transversal()
            .iter()
            .map(|g| {
                let u = self.render(g)?;
                Ok(&u * &p * u.adjoint())
            })
            .collect::<Result<_>>()?;
        let big = p.nrows();
        let mut q: DenseOperator = DMatrix::zeros(big, big);
        for pi in &sectors {
            q += pi;
        }
        // generating set of A: sector projectors and compressed conjugated logicals
        let mut gens: Vec<DenseOperator> = sectors.clone();
        for (i, g) in code.transversal().iter().enumerate() {
            for l in code.logical_elements() {
                let conj = g.conjugate(l)?;
                gens.push(&sectors[i] * self.render(&conj)? * &sectors[i]);
            }
        }
        let rendered: Vec<DenseOperator> = errors
            .iter()
            .map(|e| self.render(e))
            .collect::<Result<_>>()?;
        for ek in &rendered {
            for el in &rendered {
                let b = &q * ek.adjoint() * el * &q;
                for x in &gens {
                    if max_abs(&(&b * x - x * &b)) > COMMUTATOR_TOL {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// The d=18 single-qudit degeneracy picture: Z, Z⁷ and Z¹³ move the
    /// hybrid space C_T0 (T0 = {I, X, X⁻¹}) to one and the same subspace,
    /// Z, Z³, Z⁵ move it to three mutually orthogonal ones, and Z⁶ acts as
    /// the scalar ω⁶ on the X·C sector.
    pub fn check_degeneracy_example(&self) -> Result<bool> {
        let code = crate::code::build_gkp18();
        let p = self.stabilizer_projector(code.stabilizer())?;
        let mut q: DenseOperator = DMatrix::zeros(p.nrows(), p.ncols());
        for g in code.transversal() {
            let u = self.render(g)?;
            q += &u * &p * u.adjoint();
        }
        let hybrid = range_basis(&q, 0.5);
        if hybrid.ncols() != 6 {
            return Ok(false);
        }
        let z = self.render(&PauliOperator::single_z(18, 1, 0, 1))?;
        let moved = |k: i32| -> DenseOperator {
            let mut b = hybrid.clone();
            for _ in 0..k {
                b = &z * b;
            }
            b
        };
        let z1 = moved(1);
        let z3 = moved(3);
        let z5 = moved(5);
        let z7 = moved(7);
        let z13 = moved(13);
        if principal_angle_residual(&z1, &z7) > UNITARY_TOL
            || principal_angle_residual(&z1, &z13) > UNITARY_TOL
        {
            return Ok(false);
        }
        for (a, b) in [(&z1, &z3), (&z1, &z5), (&z3, &z5)] {
            if max_abs(&(a.adjoint() * b.clone())) > UNITARY_TOL {
                return Ok(false);
            }
        }
        // Z^6 acts as ω^6·I on X·C
        let c_basis = range_basis(&p, 0.5);
        let x = self.render(&PauliOperator::single_x(18, 1, 0, 1))?;
        let xc = &x * c_basis;
        let z6 = self.render(&PauliOperator::single_z(18, 1, 0, 6))?;
        let omega6 = C64::from_polar(1.0, 2.0 * std::f64::consts::PI * 6.0 / 18.0);
        let resid = max_abs(&(&z6 * &xc - xc.scale_complex(omega6)));
        Ok(resid < UNITARY_TOL)
    }
}

trait ScaleComplex {
    fn scale_complex(&self, factor: C64) -> DenseOperator;
}

impl ScaleComplex for DenseOperator {
    fn scale_complex(&self, factor: C64) -> DenseOperator {
        self.map(|e| e * factor)
    }
}

/// Accumulate the rendered operator into `acc` without materializing it
/// (one nonzero per column).
fn add_pauli_into(acc: &mut DenseOperator, g: &PauliOperator, d: u64, n: usize) {
    let big = acc.ncols();
    let c = g.phase_exp();
    for col in 0..big {
        let mut digits = vec![0u64; n];
        let mut rest = col as u64;
        for j in (0..n).rev() {
            digits[j] = rest % d;
            rest /= d;
        }
        let mut zsum = 0u64;
        let mut row = 0usize;
        for ((&digit, &a), &b) in digits.iter().zip(g.x_exp()).zip(g.z_exp()) {
            zsum = (zsum + b * digit) % d;
            row = row * d as usize + ((digit + a) % d) as usize;
        }
        let angle = std::f64::consts::PI * (c + 2 * zsum) as f64 / d as f64;
        acc[(row, col)] += C64::from_polar(1.0, angle);
    }
}

pub fn max_abs(m: &DenseOperator) -> f64 {
    m.iter().fold(0.0f64, |acc, e| acc.max(e.norm()))
}

/// Orthonormal basis of the range: left singular vectors with singular
/// value above `threshold`.
pub fn range_basis(m: &DenseOperator, threshold: f64) -> DenseOperator {
    let svd = m.clone().svd(true, false);
    let u = svd.u.expect("u requested");
    let cols: Vec<usize> = svd
        .singular_values
        .iter()
        .enumerate()
        .filter(|(_, &s)| s > threshold)
        .map(|(i, _)| i)
        .collect();
    let mut basis = DMatrix::zeros(m.nrows(), cols.len());
    for (out, &i) in cols.iter().enumerate() {
        basis.set_column(out, &u.column(i));
    }
    basis
}

/// Residual max_k (1 − cos θ_k) over the principal angles between two
/// equal-dimension subspaces given by orthonormal bases; 0 iff equal.
pub fn principal_angle_residual(a: &DenseOperator, b: &DenseOperator) -> f64 {
    if a.ncols() != b.ncols() {
        return 1.0;
    }
    if a.ncols() == 0 {
        return 0.0;
    }
    let overlap = a.adjoint() * b;
    let svd = overlap.svd(false, false);
    let min_sigma = svd
        .singular_values
        .iter()
        .fold(f64::INFINITY, |acc, &s| acc.min(s));
    (1.0 - min_sigma).max(0.0)
}

/// Dimension of {X : [X, M_t] = 0 ∀t} for c×c generators, via the singular
/// value decomposition of the stacked commutator system.
fn commutant_dimension(gens: &[&DenseOperator], c: usize) -> usize {
    if c == 0 {
        return 0;
    }
    if gens.is_empty() {
        return c * c;
    }
    let rows = gens.len() * c * c;
    let mut k: DMatrix<C64> = DMatrix::zeros(rows, c * c);
    // vec is column-major: vec(XM - MX) = (Mᵀ ⊗ I - I ⊗ M)·vec(X)
    for (t, m) in gens.iter().enumerate() {
        let base = t * c * c;
        for p in 0..c {
            for q in 0..c {
                for r in 0..c {
                    // (Mᵀ ⊗ I): block (p,q) scaled by Mᵀ[p,q] = M[q,p]
                    k[(base + q * c + r, p * c + r)] += m[(p, q)];
                    // -(I ⊗ M): block diagonal of M
                    k[(base + q * c + r, q * c + p)] -= m[(r, p)];
                }
            }
        }
    }
    let svd = k.svd(false, false);
    let max_sv = svd
        .singular_values
        .iter()
        .fold(0.0f64, |acc, &s| acc.max(s));
    let tol = 1e-8 * max_sv.max(1.0);
    let rank = svd.singular_values.iter().filter(|&&s| s > tol).count();
    c * c - rank
}
