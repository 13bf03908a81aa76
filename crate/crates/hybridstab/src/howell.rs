//! Howell normal form for matrices over Z_m.
//!
//! The Howell form is the canonical row form for modules over Z_m with
//! composite m: it keeps enough rows (annihilator multiples of each pivot
//! row) that greedy back-substitution decides membership correctly in the
//! presence of zero divisors. Over prime m it degenerates to reduced row
//! echelon form, so one implementation serves both cases.
//!
//! Alongside the canonical rows we track a transform back to the original
//! generators (for expressing solutions over them) and a generating set of
//! the left kernel `{u : u·A = 0 mod m}`.

fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, s, t) = egcd(b, a % b);
        (g, t, s - (a / b) * t)
    }
}

fn modinv(a: u64, m: u64) -> Option<u64> {
    let (g, s, _) = egcd(a as i128, m as i128);
    if g != 1 {
        None
    } else {
        Some(s.rem_euclid(m as i128) as u64)
    }
}

/// A unit u mod m with u·a ≡ gcd(a, m) (mod m).
fn normalizing_unit(a: u64, m: u64) -> u64 {
    debug_assert!(a != 0 && a < m);
    let g = {
        let (g, _, _) = egcd(a as i128, m as i128);
        g as u64
    };
    let a_hat = a / g;
    let n = m / g;
    if n == 1 {
        // a is a multiple of every pivot class; any unit works
        return 1;
    }
    let u0 = modinv(a_hat % n, n).expect("a/g invertible mod m/g");
    let mut t = 0u64;
    loop {
        let u = (u0 + t * n) % m;
        if u != 0 && egcd(u as i128, m as i128).0 == 1 {
            return u;
        }
        t += 1;
        debug_assert!(t < g + 2, "normalizing unit search must stay bounded");
    }
}

type Row = (Vec<u64>, Vec<u64>); // (matrix part, payload)

fn scale_add(dst: &mut [u64], src: &[u64], factor: u64, m: u64) {
    for (d, s) in dst.iter_mut().zip(src.iter()) {
        *d = ((*d as u128 + (*s as u128 * factor as u128) % m as u128) % m as u128) as u64;
    }
}

fn scale(row: &mut [u64], factor: u64, m: u64) {
    for e in row.iter_mut() {
        *e = ((*e as u128 * factor as u128) % m as u128) as u64;
    }
}

/// rows, pivot columns, pivot-row payloads, leftover zero-row payloads
type Eliminated = (Vec<Vec<u64>>, Vec<usize>, Vec<Vec<u64>>, Vec<Vec<u64>>);

/// Core elimination over the first `cols` columns with payload tracking.
fn eliminate(
    orig: &[Vec<u64>],
    payloads: Vec<Vec<u64>>,
    m: u64,
    cols: usize,
) -> Eliminated {
    let mut work: Vec<Row> = orig
        .iter()
        .zip(payloads)
        .map(|(r, p)| {
            let mut v = vec![0u64; cols];
            for (dst, src) in v.iter_mut().zip(r.iter()) {
                *dst = src % m;
            }
            (v, p)
        })
        .collect();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let mut transform: Vec<Vec<u64>> = Vec::new();

    for col in 0..cols {
        // fold all rows with a nonzero entry at `col` into one via egcd steps
        loop {
            let mut nz = work.iter().enumerate().filter(|(_, r)| r.0[col] != 0);
            let Some((i, _)) = nz.next() else { break };
            let Some((j, _)) = nz.next() else { break };
            let a = work[i].0[col];
            let b = work[j].0[col];
            let (g, s, t) = egcd(a as i128, b as i128);
            let (g, s, t) = (
                g as u64,
                s.rem_euclid(m as i128) as u64,
                t.rem_euclid(m as i128) as u64,
            );
            let bg = (b / g) % m;
            let ag = (a / g) % m;
            let neg_ag = (m - ag) % m;
            let (ri_v, ri_p) = work[i].clone();
            let (rj_v, rj_p) = work[j].clone();
            // new_i = s·r_i + t·r_j (pivot g); new_j = (b/g)·r_i - (a/g)·r_j (zero at col)
            let mut ni = (vec![0u64; cols], vec![0u64; ri_p.len()]);
            scale_add(&mut ni.0, &ri_v, s, m);
            scale_add(&mut ni.0, &rj_v, t, m);
            scale_add(&mut ni.1, &ri_p, s, m);
            scale_add(&mut ni.1, &rj_p, t, m);
            let mut nj = (vec![0u64; cols], vec![0u64; ri_p.len()]);
            scale_add(&mut nj.0, &ri_v, bg, m);
            scale_add(&mut nj.0, &rj_v, neg_ag, m);
            scale_add(&mut nj.1, &ri_p, bg, m);
            scale_add(&mut nj.1, &rj_p, neg_ag, m);
            debug_assert_eq!(nj.0[col], 0);
            work[i] = ni;
            work[j] = nj;
        }
        if let Some(i) = work.iter().position(|r| r.0[col] != 0) {
            let mut r = work.swap_remove(i);
            let u = normalizing_unit(r.0[col], m);
            scale(&mut r.0, u, m);
            scale(&mut r.1, u, m);
            let p = r.0[col];
            debug_assert_eq!(m % p, 0, "normalized pivot divides the modulus");
            let ann = m / p;
            if !ann.is_multiple_of(m) {
                let mut extra = r.clone();
                scale(&mut extra.0, ann % m, m);
                scale(&mut extra.1, ann % m, m);
                debug_assert_eq!(extra.0[col], 0);
                work.push(extra);
            }
            rows.push(r.0);
            pivots.push(col);
            transform.push(r.1);
        }
    }

    // entries above each pivot reduced modulo the pivot value
    for i in 0..rows.len() {
        let c = pivots[i];
        let p = rows[i][c];
        let src_v = rows[i].clone();
        let src_t = transform[i].clone();
        for j in 0..i {
            let q = rows[j][c] / p;
            if q != 0 {
                let neg = (m - q % m) % m;
                scale_add(&mut rows[j], &src_v, neg, m);
                scale_add(&mut transform[j], &src_t, neg, m);
            }
        }
    }

    let leftovers = work
        .into_iter()
        .filter(|r| r.1.iter().any(|&e| e != 0))
        .map(|r| {
            debug_assert!(r.0.iter().all(|&e| e == 0));
            r.1
        })
        .collect();
    (rows, pivots, transform, leftovers)
}

/// Canonical Howell form of a set of generator rows over Z_m.
#[derive(Debug, Clone)]
pub struct HowellForm {
    modulus: u64,
    cols: usize,
    n_orig: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
    transform: Vec<Vec<u64>>,
    kernel: Vec<Vec<u64>>,
}

impl HowellForm {
    pub fn new(orig: &[Vec<u64>], modulus: u64, cols: usize) -> Self {
        assert!(modulus >= 2);
        let n = orig.len();
        let payloads: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                let mut e = vec![0u64; n];
                e[i] = 1;
                e
            })
            .collect();
        let (rows, pivots, transform, raw_kernel) = eliminate(orig, payloads, modulus, cols);
        // canonicalize the kernel generators themselves
        let kernel = if raw_kernel.is_empty() {
            Vec::new()
        } else {
            let dummy = vec![Vec::new(); raw_kernel.len()];
            eliminate(&raw_kernel, dummy, modulus, n).0
        };
        HowellForm {
            modulus,
            cols,
            n_orig: n,
            rows,
            pivots,
            transform,
            kernel,
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn pivot_values(&self) -> Vec<u64> {
        self.rows
            .iter()
            .zip(self.pivots.iter())
            .map(|(r, &c)| r[c])
            .collect()
    }

    /// Generators of the left kernel, as coefficient vectors over the
    /// original rows.
    pub fn kernel(&self) -> &[Vec<u64>] {
        &self.kernel
    }

    /// Number of distinct elements in the spanned row module: Π m/p over
    /// pivot values p.
    pub fn span_size(&self) -> u128 {
        self.pivot_values()
            .iter()
            .map(|&p| (self.modulus / p) as u128)
            .product()
    }

    /// Membership of `v` in the spanned row module.
    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).is_none()
    }

    /// Coefficients over the ORIGINAL generator rows expressing `v`, if `v`
    /// is in the row module.
    pub fn solve(&self, v: &[u64]) -> Option<Vec<u64>> {
        let m = self.modulus;
        let mut v: Vec<u64> = v.iter().map(|&e| e % m).collect();
        assert_eq!(v.len(), self.cols);
        let mut coeffs = vec![0u64; self.n_orig];
        for (i, &c) in self.pivots.iter().enumerate() {
            if v[c] == 0 {
                continue;
            }
            let p = self.rows[i][c];
            if !v[c].is_multiple_of(p) {
                return None;
            }
            let q = v[c] / p;
            let neg = (m - q % m) % m;
            scale_add(&mut v, &self.rows[i], neg, m);
            scale_add(&mut coeffs, &self.transform[i], q % m, m);
            debug_assert_eq!(v[c], 0);
        }
        if v.iter().all(|&e| e == 0) {
            Some(coeffs)
        } else {
            None
        }
    }

    fn reduce(&self, v: &[u64]) -> Option<Vec<u64>> {
        let m = self.modulus;
        let mut v: Vec<u64> = v.iter().map(|&e| e % m).collect();
        assert_eq!(v.len(), self.cols);
        for (i, &c) in self.pivots.iter().enumerate() {
            if v[c] == 0 {
                continue;
            }
            let p = self.rows[i][c];
            if !v[c].is_multiple_of(p) {
                return Some(v);
            }
            let q = v[c] / p;
            let neg = (m - q % m) % m;
            scale_add(&mut v, &self.rows[i], neg, m);
        }
        if v.iter().all(|&e| e == 0) {
            None
        } else {
            Some(v)
        }
    }
}

/// Solve the linear system `A·w = t` over Z_m for any one solution `w`,
/// where `A` is given row-wise (`rows`tall, `cols` wide) and `t` has length
/// `rows`. Free variables are left at zero.
pub fn solve_system(a: &[Vec<u64>], t: &[u64], modulus: u64) -> Option<Vec<u64>> {
    let rows = a.len();
    assert_eq!(t.len(), rows);
    let cols = if rows == 0 { 0 } else { a[0].len() };
    // t must be a combination of the columns of A, i.e. in the row module of Aᵀ
    let transpose: Vec<Vec<u64>> = (0..cols)
        .map(|c| (0..rows).map(|r| a[r][c] % modulus).collect())
        .collect();
    let h = HowellForm::new(&transpose, modulus, rows);
    h.solve(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force row-module membership by enumerating all coefficient
    /// vectors; only usable for tiny instances, which is the point.
    fn brute_span(rows: &[Vec<u64>], m: u64, cols: usize) -> std::collections::HashSet<Vec<u64>> {
        let k = rows.len();
        let mut out = std::collections::HashSet::new();
        let total = (m as usize).pow(k as u32);
        for mut idx in 0..total {
            let mut v = vec![0u64; cols];
            for row in rows {
                let c = (idx as u64) % m;
                idx /= m as usize;
                for (dst, src) in v.iter_mut().zip(row.iter()) {
                    *dst = (*dst + c * src) % m;
                }
            }
            out.insert(v);
        }
        out
    }

    #[test]
    fn matches_brute_force_membership_z18() {
        let rows = vec![vec![0, 6], vec![6, 0]];
        let h = HowellForm::new(&rows, 18, 2);
        let span = brute_span(&rows, 18, 2);
        for a in 0..18u64 {
            for b in 0..18u64 {
                assert_eq!(h.contains(&[a, b]), span.contains(&vec![a, b]), "({a},{b})");
            }
        }
        assert_eq!(h.span_size(), span.len() as u128);
    }

    #[test]
    fn matches_brute_force_membership_z6() {
        let rows = vec![vec![2, 3, 1], vec![4, 0, 3], vec![0, 2, 2]];
        let h = HowellForm::new(&rows, 6, 3);
        let span = brute_span(&rows, 6, 3);
        for a in 0..6u64 {
            for b in 0..6u64 {
                for c in 0..6u64 {
                    assert_eq!(h.contains(&[a, b, c]), span.contains(&vec![a, b, c]));
                }
            }
        }
        assert_eq!(h.span_size(), span.len() as u128);
    }

    #[test]
    fn matches_brute_force_on_more_composite_moduli() {
        // prime powers and mixed factors with deliberately awkward pivots
        let cases: Vec<(u64, Vec<Vec<u64>>)> = vec![
            (8, vec![vec![2, 4, 6], vec![4, 0, 4], vec![6, 2, 1]]),
            (8, vec![vec![4, 2], vec![2, 4]]),
            (12, vec![vec![3, 6, 9], vec![8, 4, 0], vec![6, 6, 6]]),
            (9, vec![vec![3, 6], vec![6, 3]]),
        ];
        for (m, rows) in cases {
            let cols = rows[0].len();
            let h = HowellForm::new(&rows, m, cols);
            let span = brute_span(&rows, m, cols);
            assert_eq!(h.span_size(), span.len() as u128, "m={m}");
            let mut v = vec![0u64; cols];
            loop {
                assert_eq!(h.contains(&v), span.contains(&v), "m={m}, v={v:?}");
                if let Some(w) = h.solve(&v) {
                    // solution really reproduces v over the original rows
                    let mut back = vec![0u64; cols];
                    for (c, row) in w.iter().zip(rows.iter()) {
                        for (dst, src) in back.iter_mut().zip(row.iter()) {
                            *dst = (*dst + c * src) % m;
                        }
                    }
                    assert_eq!(back, v);
                }
                // next vector in lexicographic order
                let mut i = cols;
                loop {
                    if i == 0 {
                        break;
                    }
                    i -= 1;
                    v[i] += 1;
                    if v[i] < m {
                        break;
                    }
                    v[i] = 0;
                }
                if v.iter().all(|&e| e == 0) {
                    break;
                }
            }
        }
    }

    #[test]
    fn canonical_under_regeneration() {
        let rows = vec![vec![2, 3, 1, 0], vec![4, 0, 3, 2], vec![0, 2, 2, 2]];
        let h1 = HowellForm::new(&rows, 12, 4);
        // shuffled and unimodularly mixed generators of the same module
        let mixed = vec![
            rows[2].clone(),
            rows[0].iter().zip(&rows[1]).map(|(a, b)| (a + 5 * b) % 12).collect(),
            rows[1].clone(),
            rows[0].iter().zip(&rows[2]).map(|(a, b)| (a + 11 * b) % 12).collect(),
        ];
        let h2 = HowellForm::new(&mixed, 12, 4);
        assert_eq!(h1.rows(), h2.rows());
        assert_eq!(h1.pivot_values(), h2.pivot_values());
    }

    #[test]
    fn rref_for_prime_modulus() {
        let rows = vec![vec![2, 1, 0], vec![1, 1, 1]];
        let h = HowellForm::new(&rows, 5, 3);
        assert_eq!(h.rank(), 2);
        assert!(h.pivot_values().iter().all(|&p| p == 1));
        assert_eq!(h.span_size(), 25);
    }

    #[test]
    fn kernel_generates_all_dependencies() {
        let rows = vec![vec![2, 4], vec![3, 6], vec![1, 2]];
        let m = 6;
        let h = HowellForm::new(&rows, m, 2);
        // every returned kernel row really annihilates the generators
        for u in h.kernel() {
            let mut acc = [0u64; 2];
            for (c, row) in u.iter().zip(rows.iter()) {
                for (dst, src) in acc.iter_mut().zip(row.iter()) {
                    *dst = (*dst + c * src) % m;
                }
            }
            assert!(acc.iter().all(|&e| e == 0), "kernel row {u:?}");
        }
        // and they generate the whole kernel
        let mut brute = Vec::new();
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    let u = vec![a, b, c];
                    let z0 = (a * 2 + b * 3 + c) % m;
                    let z1 = (a * 4 + b * 6 + c * 2) % m;
                    if z0 == 0 && z1 == 0 {
                        brute.push(u);
                    }
                }
            }
        }
        let kh = HowellForm::new(h.kernel(), m, 3);
        assert_eq!(kh.span_size(), brute.len() as u128);
        for u in &brute {
            assert!(kh.contains(u));
        }
    }

    #[test]
    fn solve_system_round_trip() {
        let a = vec![vec![0, 12], vec![6, 0]]; // over Z_18
        let t = vec![6, 12];
        let w = solve_system(&a, &t, 18).unwrap();
        for (i, row) in a.iter().enumerate() {
            let got: u64 = row.iter().zip(&w).map(|(x, y)| x * y).sum::<u64>() % 18;
            assert_eq!(got, t[i]);
        }
        // inconsistent target over composite modulus
        assert!(solve_system(&a, &[1, 0], 18).is_none());
    }

    #[test]
    fn solve_returns_original_row_coefficients() {
        let rows = vec![vec![1, 2, 0, 1], vec![0, 3, 3, 0], vec![2, 0, 1, 1]];
        let m = 9;
        let h = HowellForm::new(&rows, m, 4);
        // combine generators with known coefficients and recover some expression
        let coeffs = [4u64, 7, 2];
        let mut v = vec![0u64; 4];
        for (c, row) in coeffs.iter().zip(rows.iter()) {
            for (dst, src) in v.iter_mut().zip(row.iter()) {
                *dst = (*dst + c * src) % m;
            }
        }
        let got = h.solve(&v).expect("member of the module");
        let mut back = vec![0u64; 4];
        for (c, row) in got.iter().zip(rows.iter()) {
            for (dst, src) in back.iter_mut().zip(row.iter()) {
                *dst = (*dst + c * src) % m;
            }
        }
        assert_eq!(back, v);
    }

    #[test]
    fn empty_and_zero_matrices() {
        let h = HowellForm::new(&[], 4, 3);
        assert_eq!(h.rank(), 0);
        assert!(h.contains(&[0, 0, 0]));
        assert!(!h.contains(&[1, 0, 0]));
        let h = HowellForm::new(&[vec![0, 0]], 4, 2);
        assert_eq!(h.rank(), 0);
        assert_eq!(h.kernel().len(), 1);
        assert_eq!(h.span_size(), 1);
    }
}
