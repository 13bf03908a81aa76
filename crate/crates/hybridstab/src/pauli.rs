//! Phase-exact arithmetic for the n-qudit Pauli group in symplectic coordinates.
//!
//! An operator is stored as `(√ω)^c · X_1^{a_1} Z_1^{b_1} ⋯ X_n^{a_n} Z_n^{b_n}`
//! with `ω = e^{2πi/d}`, `√ω = e^{πi/d}`, exponents `a_j, b_j` mod `d` and the
//! half-power phase exponent `c` mod `2d`. For `d = 2` the phase generator is
//! `i` and this is the usual qubit Pauli group. All constructors normal-order
//! immediately, so equality is field-wise comparison.

use crate::error::{Error, Result};

/// A phase-exact element of the n-qudit Pauli group.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    dim: u64,
    phase: u64,
    x: Vec<u64>,
    z: Vec<u64>,
}

impl PauliOperator {
    /// The identity operator on `n` sites of local dimension `d`.
    pub fn identity(dim: u64, num_sites: usize) -> Self {
        assert!(dim >= 2, "qudit dimension must be at least 2");
        assert!(num_sites >= 1, "need at least one site");
        PauliOperator {
            dim,
            phase: 0,
            x: vec![0; num_sites],
            z: vec![0; num_sites],
        }
    }

    /// Build from raw exponents; all entries are reduced into canonical range.
    pub fn from_exponents(dim: u64, phase: i64, x: &[i64], z: &[i64]) -> Result<Self> {
        if dim < 2 {
            return Err(Error::BadDimension(dim));
        }
        if x.len() != z.len() || x.is_empty() {
            return Err(Error::SiteCountMismatch(x.len(), z.len()));
        }
        let d = dim as i64;
        Ok(PauliOperator {
            dim,
            phase: phase.rem_euclid(2 * d) as u64,
            x: x.iter().map(|&a| a.rem_euclid(d) as u64).collect(),
            z: z.iter().map(|&b| b.rem_euclid(d) as u64).collect(),
        })
    }

    /// `X_site^a` on an otherwise-identity operator.
    pub fn single_x(dim: u64, num_sites: usize, site: usize, a: i64) -> Self {
        let mut g = Self::identity(dim, num_sites);
        g.x[site] = a.rem_euclid(dim as i64) as u64;
        g
    }

    /// `Z_site^b` on an otherwise-identity operator.
    pub fn single_z(dim: u64, num_sites: usize, site: usize, b: i64) -> Self {
        let mut g = Self::identity(dim, num_sites);
        g.z[site] = b.rem_euclid(dim as i64) as u64;
        g
    }

    /// The scalar `(√ω)^c · I`.
    pub fn scalar(dim: u64, num_sites: usize, phase_exp: i64) -> Self {
        let mut g = Self::identity(dim, num_sites);
        g.phase = phase_exp.rem_euclid(2 * dim as i64) as u64;
        g
    }

    /// Same operator with `c` half-powers of ω added to the global phase.
    pub fn with_extra_phase(&self, c: i64) -> Self {
        let mut g = self.clone();
        g.phase = ((g.phase as i64 + c).rem_euclid(2 * self.dim as i64)) as u64;
        g
    }

    pub fn qudit_dim(&self) -> u64 {
        self.dim
    }

    pub fn num_sites(&self) -> usize {
        self.x.len()
    }

    /// Half-power phase exponent `c` (global phase `(√ω)^c`), in `[0, 2d)`.
    pub fn phase_exp(&self) -> u64 {
        self.phase
    }

    pub fn x_exp(&self) -> &[u64] {
        &self.x
    }

    pub fn z_exp(&self) -> &[u64] {
        &self.z
    }

    /// Concatenated symplectic coordinates `(x | z)`, used by the linear algebra layer.
    pub fn symplectic_vector(&self) -> Vec<u64> {
        let mut v = Vec::with_capacity(2 * self.x.len());
        v.extend_from_slice(&self.x);
        v.extend_from_slice(&self.z);
        v
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        if self.x.len() != other.x.len() {
            return Err(Error::SiteCountMismatch(self.x.len(), other.x.len()));
        }
        Ok(())
    }

    /// Group product `self · other` in canonical form.
    ///
    /// Normal-ordering `Z^b X^{a'} = ω^{b·a'} X^{a'} Z^b` sitewise gives
    /// `phase = c_g + c_h + 2·(z_g · x_h) mod 2d`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let d = self.dim;
        let m = 2 * d;
        let mut cross: u64 = 0;
        for (bg, ah) in self.z.iter().zip(other.x.iter()) {
            cross = (cross + bg * ah) % d;
        }
        let phase = (self.phase + other.phase + 2 * cross) % m;
        let x = self
            .x
            .iter()
            .zip(other.x.iter())
            .map(|(a, a2)| (a + a2) % d)
            .collect();
        let z = self
            .z
            .iter()
            .zip(other.z.iter())
            .map(|(b, b2)| (b + b2) % d)
            .collect();
        Ok(PauliOperator {
            dim: d,
            phase,
            x,
            z,
        })
    }

    /// Group inverse; `g · g⁻¹` is the identity with phase 0. Since elements
    /// are unitary this is also the adjoint `g†`.
    pub fn inverse(&self) -> Self {
        let d = self.dim;
        let m = 2 * d;
        let mut dot: u64 = 0;
        for (a, b) in self.x.iter().zip(self.z.iter()) {
            dot = (dot + a * b) % d;
        }
        let phase = ((m - self.phase % m) + 2 * dot) % m;
        PauliOperator {
            dim: d,
            phase,
            x: self.x.iter().map(|&a| (d - a) % d).collect(),
            z: self.z.iter().map(|&b| (d - b) % d).collect(),
        }
    }

    /// The exponent `e` mod d with `g·h = ω^e · h·g`; zero iff `g` and `h` commute.
    pub fn symplectic_form(&self, other: &Self) -> Result<u64> {
        self.check_compatible(other)?;
        Ok(self.symplectic_form_raw(other))
    }

    pub(crate) fn symplectic_form_raw(&self, other: &Self) -> u64 {
        let d = self.dim;
        let mut acc: u64 = 0;
        for j in 0..self.x.len() {
            acc = (acc + self.z[j] * other.x[j]) % d;
            acc = (acc + d - (self.x[j] * other.z[j]) % d) % d;
        }
        acc
    }

    pub fn commutes_with(&self, other: &Self) -> Result<bool> {
        Ok(self.symplectic_form(other)? == 0)
    }

    /// `g · h · g⁻¹`: same symplectic part as `h`, phase shifted by `ω^{⟨g,h⟩}`.
    pub fn conjugate(&self, other: &Self) -> Result<Self> {
        let e = self.symplectic_form(other)?;
        Ok(other.with_extra_phase(2 * e as i64))
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::identity(self.dim, self.num_sites());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.multiply(&sq).expect("matching dimensions");
            }
            sq = sq.multiply(&sq).expect("matching dimensions");
            e >>= 1;
        }
        acc
    }

    /// Number of sites acted on non-trivially.
    pub fn weight(&self) -> usize {
        self.x
            .iter()
            .zip(self.z.iter())
            .filter(|(a, b)| **a != 0 || **b != 0)
            .count()
    }

    /// True iff the symplectic part vanishes; the scalar is then `(√ω)^phase_exp`.
    pub fn is_scalar(&self) -> bool {
        self.weight() == 0
    }

    pub fn is_identity(&self) -> bool {
        self.is_scalar() && self.phase == 0
    }

    /// Parse the text form. The local dimension cannot be recovered from the
    /// string, so it is supplied by the caller; the site count comes from the
    /// string itself.
    ///
    /// Two syntaxes are accepted:
    /// - qubit letters (`d = 2` only): optional phase token among
    ///   `+1 -1 +i -i`, then a string over `I X Y Z`, e.g. `-i XIZZY`.
    ///   `Y` is the Hermitian Pauli with dense form `[[0,-i],[i,0]]`, i.e.
    ///   `i·XZ`.
    /// - general: optional `w^c/2` phase token, then dot-separated site
    ///   tokens `x<a>z<b>` with zero exponents omitted and `i` for an
    ///   identity site, e.g. `w^3/2 x1.i.z2`.
    pub fn parse(s: &str, dim: u64) -> Result<Self> {
        if dim < 2 {
            return Err(Error::BadDimension(dim));
        }
        let parse_err = |msg: String| Error::Parse { line: 0, msg };
        let s = s.trim();
        let (phase_tok, body) = match s.split_once(char::is_whitespace) {
            Some((tok, rest))
                if matches!(tok, "+1" | "-1" | "+i" | "-i") || tok.starts_with("w^") =>
            {
                (Some(tok), rest.trim())
            }
            _ => (None, s),
        };
        let mut phase: i64 = match phase_tok {
            None => 0,
            Some("+1") => 0,
            Some("+i") => 1,
            Some("-1") => 2,
            Some("-i") => 3,
            Some(tok) => {
                let inner = tok
                    .strip_prefix("w^")
                    .and_then(|t| t.strip_suffix("/2"))
                    .ok_or_else(|| parse_err(format!("bad phase token '{tok}'")))?;
                inner
                    .parse::<i64>()
                    .map_err(|_| parse_err(format!("bad phase exponent in '{tok}'")))?
            }
        };
        if matches!(phase_tok, Some("+i") | Some("-i") | Some("-1")) && dim != 2 {
            // i-phase tokens denote half-powers of ω only at d=2
            return Err(parse_err(format!(
                "qubit phase token '{}' used with d={dim}",
                phase_tok.unwrap()
            )));
        }
        if body.is_empty() {
            return Err(parse_err("empty operator body".into()));
        }
        let first = body.chars().next().unwrap();
        if first.is_ascii_uppercase() {
            if dim != 2 {
                return Err(parse_err(format!("letter syntax requires d=2, got d={dim}")));
            }
            let mut x = Vec::new();
            let mut z = Vec::new();
            for ch in body.chars() {
                match ch {
                    'I' => {
                        x.push(0);
                        z.push(0);
                    }
                    'X' => {
                        x.push(1);
                        z.push(0);
                    }
                    'Z' => {
                        x.push(0);
                        z.push(1);
                    }
                    'Y' => {
                        x.push(1);
                        z.push(1);
                        phase += 1;
                    }
                    _ => return Err(parse_err(format!("unexpected character '{ch}'"))),
                }
            }
            Self::from_exponents(dim, phase, &x, &z)
        } else {
            let mut x = Vec::new();
            let mut z = Vec::new();
            for tok in body.split('.') {
                let tok = tok.trim();
                if tok == "i" || tok == "I" {
                    x.push(0);
                    z.push(0);
                    continue;
                }
                let (a, b) = parse_site_token(tok)
                    .ok_or_else(|| parse_err(format!("bad site token '{tok}'")))?;
                x.push(a);
                z.push(b);
            }
            Self::from_exponents(dim, phase, &x, &z)
        }
    }
}

fn parse_site_token(tok: &str) -> Option<(i64, i64)> {
    let mut a: i64 = 0;
    let mut b: i64 = 0;
    let mut rest = tok;
    let mut seen = false;
    if let Some(r) = rest.strip_prefix('x') {
        let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
        if end == 0 {
            return None;
        }
        a = r[..end].parse().ok()?;
        rest = &r[end..];
        seen = true;
    }
    if let Some(r) = rest.strip_prefix('z') {
        let end = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
        if end == 0 {
            return None;
        }
        b = r[..end].parse().ok()?;
        rest = &r[end..];
        seen = true;
    }
    if !seen || !rest.is_empty() {
        return None;
    }
    Some((a, b))
}

impl std::fmt::Display for PauliOperator {
    /// Canonical text form; `parse` round-trips it exactly.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.dim == 2 {
            let y_count = self
                .x
                .iter()
                .zip(self.z.iter())
                .filter(|(a, b)| **a == 1 && **b == 1)
                .count() as i64;
            let c = (self.phase as i64 - y_count).rem_euclid(4);
            let tok = ["+1", "+i", "-1", "-i"][c as usize];
            write!(f, "{tok} ")?;
            for (a, b) in self.x.iter().zip(self.z.iter()) {
                let ch = match (a, b) {
                    (0, 0) => 'I',
                    (1, 0) => 'X',
                    (0, 1) => 'Z',
                    (1, 1) => 'Y',
                    _ => unreachable!("exponents are reduced mod 2"),
                };
                write!(f, "{ch}")?;
            }
            Ok(())
        } else {
            write!(f, "w^{}/2 ", self.phase)?;
            for (j, (a, b)) in self.x.iter().zip(self.z.iter()).enumerate() {
                if j > 0 {
                    write!(f, ".")?;
                }
                match (*a, *b) {
                    (0, 0) => write!(f, "i")?,
                    (a, 0) => write!(f, "x{a}")?,
                    (0, b) => write!(f, "z{b}")?,
                    (a, b) => write!(f, "x{a}z{b}")?,
                }
            }
            Ok(())
        }
    }
}

impl std::fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Pauli(d={}, {})", self.dim, self)
    }
}
