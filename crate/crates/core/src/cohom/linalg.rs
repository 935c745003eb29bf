//! Exact linear algebra used by the cochain complexes: bit-packed Gaussian
//! elimination over GF(2), Howell-form elimination over Z/m, and integer
//! Hermite/Smith reduction for invariant factors of subquotients.

use num_integer::Integer;

// ---------------------------------------------------------------------------
// GF(2), rows packed into u64 words
// ---------------------------------------------------------------------------

pub fn bit_words(ncols: usize) -> usize {
    ncols.div_ceil(64)
}

pub fn bit_get(row: &[u64], col: usize) -> bool {
    row[col / 64] >> (col % 64) & 1 == 1
}

pub fn bit_set(row: &mut [u64], col: usize) {
    row[col / 64] ^= 1 << (col % 64);
}

pub fn bit_xor(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= *s;
    }
}

pub fn bits_from_vals(vals: &[u64], ncols: usize) -> Vec<u64> {
    let mut row = vec![0u64; bit_words(ncols)];
    for (c, &v) in vals.iter().enumerate() {
        if v & 1 == 1 {
            bit_set(&mut row, c);
        }
    }
    row
}

pub fn bits_to_vals(row: &[u64], ncols: usize) -> Vec<u64> {
    (0..ncols).map(|c| bit_get(row, c) as u64).collect()
}

fn leading_col(row: &[u64]) -> Option<usize> {
    for (w, &word) in row.iter().enumerate() {
        if word != 0 {
            return Some(w * 64 + word.trailing_zeros() as usize);
        }
    }
    None
}

/// Incremental row echelon over GF(2). Pivot rows are kept reduced against
/// each other (full RREF is maintained on insertion), so reduction against
/// the echelon is canonical.
#[derive(Clone, Debug)]
pub struct BitEchelon {
    ncols: usize,
    aug: usize,
    rows: std::collections::BTreeMap<usize, Vec<u64>>,
}

impl BitEchelon {
    /// `aug` trailing columns are carried along but never chosen as pivots;
    /// they record the combination of inserted rows.
    pub fn new(ncols: usize, aug: usize) -> Self {
        BitEchelon { ncols, aug, rows: std::collections::BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Full reduction against the (RREF) pivot rows: a single ascending scan
    /// over the set bits, since a pivot row has its pivot as leading bit and
    /// zeros at every other pivot column.
    fn reduce_in_place(&self, row: &mut [u64]) {
        let mut col = 0usize;
        while col < self.ncols {
            let word = row[col / 64] >> (col % 64);
            if word == 0 {
                col = (col / 64 + 1) * 64;
                continue;
            }
            col += word.trailing_zeros() as usize;
            if col >= self.ncols {
                break;
            }
            if let Some(r) = self.rows.get(&col) {
                bit_xor(row, r);
            } else {
                col += 1;
            }
        }
    }

    /// Insert a row (main part plus augmentation); returns false when the
    /// main part reduced to zero (the row was dependent).
    pub fn insert(&mut self, mut row: Vec<u64>) -> bool {
        debug_assert_eq!(row.len(), bit_words(self.ncols + self.aug));
        self.reduce_in_place(&mut row);
        let lead = match self.leading_main(&row) {
            Some(c) => c,
            None => return false,
        };
        // keep existing rows reduced against the new pivot
        for r in self.rows.values_mut() {
            if bit_get(r, lead) {
                bit_xor(r, &row);
            }
        }
        self.rows.insert(lead, row);
        true
    }

    fn leading_main(&self, row: &[u64]) -> Option<usize> {
        leading_col(row).filter(|&c| c < self.ncols)
    }

    /// Canonical remainder of `row` modulo the span.
    pub fn reduce(&self, mut row: Vec<u64>) -> Vec<u64> {
        self.reduce_in_place(&mut row);
        row
    }

    pub fn contains(&self, row: &[u64]) -> bool {
        let red = self.reduce(row.to_vec());
        self.main_is_zero(&red)
    }

    fn main_is_zero(&self, row: &[u64]) -> bool {
        (0..self.ncols).all(|c| !bit_get(row, c))
    }

    /// Reduce `row`; when the main part vanishes, return the augmentation
    /// (the witness combination), split off as plain bits of width `aug`.
    pub fn solve(&self, row: Vec<u64>) -> Option<Vec<u64>> {
        let red = self.reduce(row);
        if !self.main_is_zero(&red) {
            return None;
        }
        let mut wit = vec![0u64; bit_words(self.aug)];
        for c in 0..self.aug {
            if bit_get(&red, self.ncols + c) {
                bit_set(&mut wit, c);
            }
        }
        Some(wit)
    }

    /// Nullspace basis of the matrix whose rows were inserted (augmentation
    /// must be 0). Vectors come out in ascending order of their free column.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        assert_eq!(self.aug, 0);
        let words = bit_words(self.ncols);
        let mut basis = Vec::new();
        for free in 0..self.ncols {
            if self.rows.contains_key(&free) {
                continue;
            }
            let mut v = vec![0u64; words];
            bit_set(&mut v, free);
            for (&p, r) in &self.rows {
                if bit_get(r, free) {
                    bit_set(&mut v, p);
                }
            }
            basis.push(v);
        }
        basis
    }
}

// ---------------------------------------------------------------------------
// Z/m, Howell-form elimination
// ---------------------------------------------------------------------------

fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = egcd(b, a.rem_euclid(b));
        (g, y, x - (a / b) * y)
    }
}

fn mod_inv(a: u64, m: u64) -> u64 {
    let (g, x, _) = egcd(a as i128, m as i128);
    debug_assert_eq!(g, 1);
    x.rem_euclid(m as i128) as u64
}

/// A unit u of Z/m with u*x = gcd(x, m) mod m.
fn unit_to_associate(x: u64, m: u64) -> u64 {
    if x == 0 {
        return 1;
    }
    let g = x.gcd(&m);
    let y = x / g;
    let mg = m / g;
    if mg == 1 {
        return 1;
    }
    let u0 = mod_inv(y % mg, mg);
    let mut u = u0;
    while u.gcd(&m) != 1 {
        u += mg;
        debug_assert!(u < m + mg);
    }
    u % m
}

fn row_addmul(dst: &mut [u64], src: &[u64], c: u64, m: u64) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d = (*d + c * *s) % m;
    }
}

fn row_scale(dst: &mut [u64], c: u64, m: u64) {
    for d in dst.iter_mut() {
        *d = *d * c % m;
    }
}

/// Howell-form accumulator over Z/m. The first `ncols` columns are the
/// matrix proper; `aug` trailing columns carry the combination witness.
/// After `finish`, rows form a Howell basis of the row span: pivots are
/// strictly increasing divisors of m, entries above a pivot are reduced
/// modulo it, and any span element supported on columns >= c is a
/// combination of the rows with pivot >= c.
#[derive(Clone, Debug)]
pub struct ZmEchelon {
    m: u64,
    ncols: usize,
    aug: usize,
    pivot_cols: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
    closed: bool,
}

impl ZmEchelon {
    /// Pivots restricted to the main block; rows whose main part eliminates
    /// to zero are dropped (their witness is not needed).
    pub fn new(m: u64, ncols: usize, aug: usize) -> Self {
        assert!(m >= 2);
        ZmEchelon { m, ncols, aug, pivot_cols: ncols, rows: Vec::new(), pivots: Vec::new(), closed: false }
    }

    /// Pivots over every column (main-then-aug order); used for kernel
    /// extraction, where the rows with vanished main part are the result.
    pub fn new_full(m: u64, ncols: usize, aug: usize) -> Self {
        assert!(m >= 2);
        ZmEchelon { m, ncols, aug, pivot_cols: ncols + aug, rows: Vec::new(), pivots: Vec::new(), closed: false }
    }

    fn lead(&self, row: &[u64]) -> Option<usize> {
        (0..self.pivot_cols).find(|&c| row[c] != 0)
    }

    pub fn insert(&mut self, row: Vec<u64>) {
        debug_assert_eq!(row.len(), self.ncols + self.aug);
        debug_assert!(row.iter().all(|&v| v < self.m));
        self.closed = false;
        self.insert_inner(row);
    }

    fn insert_inner(&mut self, mut row: Vec<u64>) {
        let m = self.m;
        loop {
            let lead = match self.lead(&row) {
                Some(c) => c,
                None => return,
            };
            let at = self.pivots.partition_point(|&p| p < lead);
            if at < self.pivots.len() && self.pivots[at] == lead {
                // combine with the existing pivot row by a unimodular 2x2
                let p = self.rows[at][lead] as i128;
                let r = row[lead] as i128;
                let (g, s, t) = egcd(p, r);
                let su = (s.rem_euclid(m as i128)) as u64;
                let tu = (t.rem_euclid(m as i128)) as u64;
                let pg = ((p / g).rem_euclid(m as i128)) as u64;
                let rg = ((-(r / g)).rem_euclid(m as i128)) as u64;
                let old_pivot = self.rows[at].clone();
                let mut newp = vec![0u64; self.ncols + self.aug];
                row_addmul(&mut newp, &old_pivot, su, m);
                row_addmul(&mut newp, &row, tu, m);
                let mut newr = vec![0u64; self.ncols + self.aug];
                row_addmul(&mut newr, &row, pg, m);
                row_addmul(&mut newr, &old_pivot, rg, m);
                debug_assert_eq!(newr[lead], 0);
                self.rows[at] = newp;
                self.normalize_pivot(at);
                row = newr;
            } else {
                self.pivots.insert(at, lead);
                self.rows.insert(at, row);
                self.normalize_pivot(at);
                return;
            }
        }
    }

    fn normalize_pivot(&mut self, at: usize) {
        let lead = self.pivots[at];
        let v = self.rows[at][lead];
        let u = unit_to_associate(v, self.m);
        if u != 1 {
            row_scale(&mut self.rows[at], u, self.m);
        }
        debug_assert_eq!(self.rows[at][lead], v.gcd(&self.m));
    }

    /// Complete the Howell form: add annihilator rows (m/p times each pivot
    /// row) until stable, then reduce entries above each pivot.
    pub fn finish(&mut self) {
        if self.closed {
            return;
        }
        let m = self.m;
        loop {
            let mut extra = Vec::new();
            for (r, &p) in self.rows.iter().zip(&self.pivots) {
                let pv = r[p];
                if pv != 1 {
                    let mut ann = r.clone();
                    row_scale(&mut ann, m / pv, m);
                    debug_assert_eq!(ann[p], 0);
                    if self.lead(&ann).is_some() {
                        extra.push(ann);
                    }
                }
            }
            let before = (self.rows.len(), self.pivots.clone(), self.rows.clone());
            for row in extra {
                self.insert_inner(row);
            }
            if self.rows.len() == before.0 && self.pivots == before.1 && self.rows == before.2 {
                break;
            }
        }
        // reduce above pivots
        for i in (0..self.rows.len()).rev() {
            let p = self.pivots[i];
            let pv = self.rows[i][p];
            let below = self.rows[i].clone();
            for j in 0..i {
                let q = self.rows[j][p] / pv;
                if q != 0 {
                    let neg = (self.m - q % self.m) % self.m;
                    row_addmul(&mut self.rows[j], &below, neg, self.m);
                }
            }
        }
        self.closed = true;
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Canonical remainder modulo the span (call `finish` first for a
    /// genuinely canonical result). Returns (remainder, witness) where
    /// remainder = row - witness * inserted-rows in the augmented sense.
    pub fn reduce(&self, mut row: Vec<u64>) -> Vec<u64> {
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            let pv = r[p];
            if row[p].is_multiple_of(pv) {
                let q = row[p] / pv;
                if q != 0 {
                    let neg = (self.m - q % self.m) % self.m;
                    row_addmul(&mut row, r, neg, self.m);
                }
            }
        }
        row
    }

    pub fn main_is_zero(&self, row: &[u64]) -> bool {
        row[..self.ncols].iter().all(|&v| v == 0)
    }

    pub fn contains(&self, row: &[u64]) -> bool {
        let mut padded = row.to_vec();
        padded.resize(self.ncols + self.aug, 0);
        let red = self.reduce(padded);
        self.main_is_zero(&red)
    }

    /// Membership with witness: when the main part reduces to zero, return
    /// the negated augmentation, i.e. coefficients c with
    /// sum c_i * inserted_i = row.
    pub fn solve(&self, row: &[u64]) -> Option<Vec<u64>> {
        debug_assert_eq!(row.len(), self.ncols);
        let mut padded = row.to_vec();
        padded.resize(self.ncols + self.aug, 0);
        let red = self.reduce(padded);
        if !self.main_is_zero(&red) {
            return None;
        }
        Some(red[self.ncols..].iter().map(|&v| (self.m - v) % self.m).collect())
    }
}

/// Generators (as a Z/m-module) of the right kernel {x : A x = 0} of the
/// matrix whose rows stream through `rows`.
pub struct ZmKernelBuilder {
    m: u64,
    ncols: usize,
    ech: ZmEchelon,
}

impl ZmKernelBuilder {
    pub fn new(m: u64, ncols: usize) -> Self {
        ZmKernelBuilder { m, ncols, ech: ZmEchelon::new(m, ncols, 0) }
    }

    pub fn add_row(&mut self, row: Vec<u64>) {
        self.ech.insert(row);
    }

    /// The kernel depends only on the row span, so it is computed from the
    /// (small) Howell form: Howell-reduce [H^T | I]; rows whose H^T-part
    /// vanished have kernel generators in the identity part.
    pub fn finish(mut self) -> Vec<Vec<u64>> {
        self.ech.finish();
        let h = self.ech.rows();
        let s = h.len();
        let mut aug = ZmEchelon::new_full(self.m, s, self.ncols);
        for c in 0..self.ncols {
            let mut row = vec![0u64; s + self.ncols];
            for (i, hr) in h.iter().enumerate() {
                row[i] = hr[c];
            }
            row[s + c] = 1;
            aug.insert(row);
        }
        aug.finish();
        let mut gens = Vec::new();
        for row in aug.rows() {
            if row[..s].iter().all(|&v| v == 0) {
                let g: Vec<u64> = row[s..].to_vec();
                if g.iter().any(|&v| v != 0) {
                    gens.push(g);
                }
            }
        }
        gens
    }
}

// ---------------------------------------------------------------------------
// Smith-type diagonalization over Z/m (for invariant factors of subquotients)
// ---------------------------------------------------------------------------

/// Diagonalize a matrix over Z/m by invertible row and column operations,
/// tracking the inverse of the accumulated row transform. Returns
/// (uinv, diag): mat = uinv * diag(d) * (column ops), with every diagonal
/// entry a divisor of m (0 standing for m) and each dividing the next, so
/// the i-th column of uinv generates the i-th cyclic factor of the
/// cokernel. Z/m is a principal ideal ring, so gcd-based elimination with
/// unit normalization applies, and every entry stays in [0, m).
fn smith_zm_left_inverse(
    mut mat: Vec<Vec<u64>>,
    nrows: usize,
    m: u64,
) -> (Vec<Vec<u64>>, Vec<u64>) {
    let ncols = mat.first().map_or(0, |r| r.len());
    debug_assert!(mat.iter().all(|r| r.len() == ncols));
    debug_assert_eq!(mat.len(), nrows);
    let mut uinv: Vec<Vec<u64>> = (0..nrows)
        .map(|i| (0..nrows).map(|j| u64::from(i == j)).collect())
        .collect();
    // row op on mat: row_i += q * row_j  =>  uinv: col_j += q * col_i;
    // row swap i,j => uinv col swap; row scale by unit u => col scale u^-1.
    let normalize = |mat: &mut Vec<Vec<u64>>, uinv: &mut Vec<Vec<u64>>, k: usize| {
        let v = mat[k][k];
        let u = unit_to_associate(v, m);
        if u != 1 {
            row_scale(&mut mat[k], u, m);
            let uin = mod_inv(u, m);
            for r in uinv.iter_mut() {
                r[k] = r[k] * uin % m;
            }
        }
        debug_assert_eq!(mat[k][k], v.gcd(&m));
    };
    let mut k = 0;
    while k < nrows.min(ncols) {
        // pivot: a remaining entry generating the largest ideal of Z/m
        let mut best: Option<(usize, usize, u64)> = None;
        for i in k..nrows {
            for j in k..ncols {
                if mat[i][j] != 0 {
                    let g = mat[i][j].gcd(&m);
                    if best.is_none() || g < best.unwrap().2 {
                        best = Some((i, j, g));
                    }
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };
        mat.swap(k, pi);
        for r in uinv.iter_mut() {
            r.swap(k, pi);
        }
        for row in mat.iter_mut() {
            row.swap(k, pj);
        }
        normalize(&mut mat, &mut uinv, k);
        loop {
            let mut combined = false;
            // clear the pivot column with row operations
            for i in k + 1..nrows {
                let a = mat[i][k];
                if a == 0 {
                    continue;
                }
                let p = mat[k][k];
                if a % p == 0 {
                    let q = (a / p) % m;
                    let neg = (m - q) % m;
                    let pivrow = mat[k].clone();
                    row_addmul(&mut mat[i], &pivrow, neg, m);
                    for r in uinv.iter_mut() {
                        r[k] = (r[k] + q * r[i]) % m;
                    }
                } else {
                    // unimodular 2x2 combine of rows k and i
                    let (g, s, t) = egcd(p as i128, a as i128);
                    let su = s.rem_euclid(m as i128) as u64;
                    let tu = t.rem_euclid(m as i128) as u64;
                    let pg = (p as i128 / g).rem_euclid(m as i128) as u64;
                    let ag = (a as i128 / g).rem_euclid(m as i128) as u64;
                    let nag = (m - ag % m) % m;
                    let rowk = mat[k].clone();
                    let rowi = mat[i].clone();
                    let mut newk = vec![0u64; ncols];
                    row_addmul(&mut newk, &rowk, su, m);
                    row_addmul(&mut newk, &rowi, tu, m);
                    let mut newi = vec![0u64; ncols];
                    row_addmul(&mut newi, &rowi, pg, m);
                    row_addmul(&mut newi, &rowk, nag, m);
                    mat[k] = newk;
                    mat[i] = newi;
                    // uinv *= L^-1, L^-1 = [[p/g, -t],[a/g, s]] on cols (k, i)
                    let ntu = (m - tu) % m;
                    for r in uinv.iter_mut() {
                        let (x, y) = (r[k], r[i]);
                        r[k] = (x * pg + y * ag) % m;
                        r[i] = (x * ntu + y * su) % m;
                    }
                    normalize(&mut mat, &mut uinv, k);
                    combined = true;
                }
            }
            // clear the pivot row with column operations (untracked)
            for j in k + 1..ncols {
                let a = mat[k][j];
                if a == 0 {
                    continue;
                }
                let p = mat[k][k];
                if a % p == 0 {
                    let q = (a / p) % m;
                    let neg = (m - q) % m;
                    for row in mat.iter_mut() {
                        row[j] = (row[j] + neg * row[k]) % m;
                    }
                } else {
                    let (g, s, t) = egcd(p as i128, a as i128);
                    let su = s.rem_euclid(m as i128) as u64;
                    let tu = t.rem_euclid(m as i128) as u64;
                    let pg = (p as i128 / g).rem_euclid(m as i128) as u64;
                    let ag = (a as i128 / g).rem_euclid(m as i128) as u64;
                    let nag = (m - ag % m) % m;
                    for row in mat.iter_mut() {
                        let (x, y) = (row[k], row[j]);
                        row[k] = (su * x + tu * y) % m;
                        row[j] = (pg * y + nag * x) % m;
                    }
                    normalize(&mut mat, &mut uinv, k);
                    combined = true;
                }
            }
            if !combined {
                break;
            }
        }
        k += 1;
    }
    let rank = k;
    // enforce the divisibility chain d1 | d2 | ... (0 stands for m)
    let exact = |v: u64| if v == 0 { m } else { v };
    loop {
        let mut fixed = true;
        for i in 0..rank.saturating_sub(1) {
            let (da, db) = (exact(mat[i][i]), exact(mat[i + 1][i + 1]));
            if db % da == 0 {
                continue;
            }
            fixed = false;
            let (g, s, t) = egcd(da as i128, db as i128);
            let l = (da as i128) * (db as i128) / g;
            debug_assert_eq!(m as i128 % l, 0);
            let su = s.rem_euclid(m as i128) as u64;
            let tu = t.rem_euclid(m as i128) as u64;
            let ntu = (m - tu) % m;
            let dag = ((da as i128) / g).rem_euclid(m as i128) as u64;
            let dbg = ((db as i128) / g).rem_euclid(m as i128) as u64;
            for r in uinv.iter_mut() {
                let (x, y) = (r[i], r[i + 1]);
                r[i] = (x * dag + y * dbg) % m;
                r[i + 1] = (x * ntu + y * su) % m;
            }
            mat[i][i] = (g as u64) % m;
            mat[i + 1][i + 1] = (l % m as i128) as u64;
        }
        if fixed {
            break;
        }
    }
    let diag: Vec<u64> = (0..rank).map(|i| mat[i][i]).collect();
    (uinv, diag)
}

/// Invariant factors and generating representatives of the subquotient
/// span(sub) / span(smaller) inside (Z/m)^n. `smaller` must be contained in
/// span(sub). Returns (invariant factors > 1, representative vectors), the
/// representatives reduced modulo span(smaller).
pub fn subquotient_invariants(
    m: u64,
    n: usize,
    sub: &[Vec<u64>],
    smaller: &[Vec<u64>],
) -> (Vec<u64>, Vec<Vec<u64>>) {
    let k = sub.len();
    let mut reducer = ZmEchelon::new(m, n, 0);
    for r in smaller {
        reducer.insert(r.clone());
    }
    reducer.finish();
    if k == 0 {
        for r in smaller {
            assert!(r.iter().all(|&v| v == 0), "smaller outside span(sub)");
        }
        return (Vec::new(), Vec::new());
    }
    // left kernel of the generator matrix plus preimages of the smaller
    // generators, through one augmented Howell form of [sub | I]
    let mut ech = ZmEchelon::new_full(m, n, k);
    for (i, row) in sub.iter().enumerate() {
        let mut r = row.clone();
        r.resize(n + k, 0);
        r[n + i] = 1;
        ech.insert(r);
    }
    ech.finish();
    let mut relations: Vec<Vec<u64>> = Vec::new();
    for row in ech.rows() {
        if row[..n].iter().all(|&v| v == 0) {
            relations.push(row[n..].to_vec());
        }
    }
    for b in smaller {
        let w = ech.solve(b).expect("smaller outside span(sub)");
        relations.push(w);
    }
    // cokernel of relations^T over Z/m
    let rel_t: Vec<Vec<u64>> = (0..k)
        .map(|c| relations.iter().map(|r| r[c]).collect())
        .collect();
    let (uinv, diag) = smith_zm_left_inverse(rel_t, k, m);
    let mut invariants = Vec::new();
    let mut reps = Vec::new();
    for i in 0..k {
        let d = diag.get(i).copied().unwrap_or(0);
        let order = if d == 0 { m } else { d };
        if order == 1 {
            continue;
        }
        let mut gen = vec![0u64; n];
        for (j, base) in sub.iter().enumerate() {
            let c = uinv[j][i];
            if c != 0 {
                for (g, &b) in gen.iter_mut().zip(base) {
                    *g = (*g + c * b) % m;
                }
            }
        }
        let rep = reducer.reduce(gen);
        debug_assert!(rep.iter().any(|&v| v != 0));
        invariants.push(order);
        reps.push(rep);
    }
    (invariants, reps)
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_echelon_rank_and_nullspace() {
        // rows of [[1,1,0],[0,1,1]] over GF(2); kernel = span{(1,1,1)}
        let mut e = BitEchelon::new(3, 0);
        assert!(e.insert(bits_from_vals(&[1, 1, 0], 3)));
        assert!(e.insert(bits_from_vals(&[0, 1, 1], 3)));
        assert!(!e.insert(bits_from_vals(&[1, 0, 1], 3)));
        assert_eq!(e.rank(), 2);
        let ns = e.nullspace();
        assert_eq!(ns.len(), 1);
        assert_eq!(bits_to_vals(&ns[0], 3), vec![1, 1, 1]);
    }

    #[test]
    fn bit_echelon_solve_witness() {
        let mut e = BitEchelon::new(3, 2);
        let mut r0 = bits_from_vals(&[1, 1, 0, 1, 0], 5);
        r0.truncate(bit_words(5));
        e.insert(r0);
        let r1 = bits_from_vals(&[0, 1, 1, 0, 1], 5);
        e.insert(r1);
        // (1,0,1) = r0 + r1
        let q = bits_from_vals(&[1, 0, 1, 0, 0], 5);
        let w = e.solve(q).unwrap();
        assert_eq!(bits_to_vals(&w, 2), vec![1, 1]);
        assert!(e.solve(bits_from_vals(&[1, 0, 0, 0, 0], 5)).is_none());
    }

    #[test]
    fn howell_captures_annihilator_rows() {
        // over Z/4, row (2,2): span contains (2,2) and 2*(anything)=..;
        // the vector (0, 2)? (0,2) = x*(2,2) needs 2x=0 and 2x=2: no.
        // Classic Howell example: rows {(1,2)} over Z/4: 2*(1,2)=(2,0),
        // so (2,0) is in the span and must be reachable from the form.
        let mut e = ZmEchelon::new(4, 2, 0);
        e.insert(vec![1, 2]);
        e.finish();
        assert!(e.contains(&[2, 0]));
        assert!(e.contains(&[1, 2]));
        assert!(!e.contains(&[0, 1]));
    }

    #[test]
    fn zm_kernel_matches_bruteforce() {
        // kernel of [[2, 1]] over Z/4: {(x,y): 2x + y = 0}
        let mut kb = ZmKernelBuilder::new(4, 2);
        kb.add_row(vec![2, 1]);
        let gens = kb.finish();
        // brute force membership check both directions
        let mut brute = Vec::new();
        for x in 0..4u64 {
            for y in 0..4u64 {
                if (2 * x + y) % 4 == 0 {
                    brute.push(vec![x, y]);
                }
            }
        }
        let mut span = ZmEchelon::new(4, 2, 0);
        for g in &gens {
            assert_eq!((2 * g[0] + g[1]) % 4, 0);
            span.insert(g.clone());
        }
        span.finish();
        for v in &brute {
            assert!(span.contains(v), "missing {:?}", v);
        }
    }

    #[test]
    fn subquotient_z4_mod_z2() {
        // inside (Z/4)^1: span{1} / span{2} = Z/2
        let (inv, reps) = subquotient_invariants(4, 1, &[vec![1]], &[vec![2]]);
        assert_eq!(inv, vec![2]);
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0][0] % 2, 1);
        // span{1} / 0 = Z/4
        let (inv, _) = subquotient_invariants(4, 1, &[vec![1]], &[]);
        assert_eq!(inv, vec![4]);
        // (Z/6)^2 full / span{(3,0)} = Z/3 x Z/6 -> invariant factors 3, 6
        let (mut inv, _) =
            subquotient_invariants(6, 2, &[vec![1, 0], vec![0, 1]], &[vec![3, 0]]);
        inv.sort();
        assert_eq!(inv, vec![3, 6]);
    }

    #[test]
    fn unit_associate_examples() {
        for m in [2u64, 4, 6, 8, 9, 12, 16, 24] {
            for x in 1..m {
                let u = unit_to_associate(x, m);
                assert_eq!(u.gcd(&m), 1);
                assert_eq!(u * x % m, x.gcd(&m));
            }
        }
    }
}

#[cfg(test)]
mod bruteforce_tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    /// All vectors of (Z/m)^n in the Z/m-span of the given generators,
    /// found by closing under addition of generators (complete since the
    /// span is a finite group under addition).
    fn brute_span(m: u64, n: usize, gens: &[Vec<u64>]) -> std::collections::BTreeSet<Vec<u64>> {
        let mut span = std::collections::BTreeSet::new();
        span.insert(vec![0u64; n]);
        let mut frontier = vec![vec![0u64; n]];
        while let Some(v) = frontier.pop() {
            for g in gens {
                let w: Vec<u64> = v.iter().zip(g).map(|(&a, &b)| (a + b) % m).collect();
                if span.insert(w.clone()) {
                    frontier.push(w);
                }
            }
        }
        span
    }

    fn enumerate_vectors(m: u64, n: usize) -> Vec<Vec<u64>> {
        let total = (m as usize).pow(n as u32);
        (0..total)
            .map(|mut i| {
                (0..n)
                    .map(|_| {
                        let r = (i % m as usize) as u64;
                        i /= m as usize;
                        r
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn howell_membership_agrees_with_bruteforce_span() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for &m in &[2u64, 3, 4, 6, 8, 9, 12] {
            for _ in 0..8 {
                let n = rng.gen_range(1..=3usize);
                let k = rng.gen_range(1..=3usize);
                let gens: Vec<Vec<u64>> = (0..k)
                    .map(|_| (0..n).map(|_| rng.gen_range(0..m)).collect())
                    .collect();
                let mut ech = ZmEchelon::new(m, n, 0);
                for g in &gens {
                    ech.insert(g.clone());
                }
                ech.finish();
                let span = brute_span(m, n, &gens);
                for v in enumerate_vectors(m, n) {
                    assert_eq!(
                        ech.contains(&v),
                        span.contains(&v),
                        "membership mismatch for {v:?} mod {m}, gens {gens:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn zm_kernel_agrees_with_bruteforce() {
        let mut rng = ChaCha8Rng::seed_from_u64(100);
        for &m in &[2u64, 4, 6, 8, 9] {
            for _ in 0..8 {
                let ncols = rng.gen_range(1..=3usize);
                let nrows = rng.gen_range(1..=3usize);
                let rows: Vec<Vec<u64>> = (0..nrows)
                    .map(|_| (0..ncols).map(|_| rng.gen_range(0..m)).collect())
                    .collect();
                let mut kb = ZmKernelBuilder::new(m, ncols);
                for r in &rows {
                    kb.add_row(r.clone());
                }
                let gens = kb.finish();
                // every generator annihilates
                for g in &gens {
                    for r in &rows {
                        let dot: u64 = r.iter().zip(g).map(|(&a, &b)| a * b % m).sum::<u64>() % m;
                        assert_eq!(dot, 0, "non-kernel generator {g:?}");
                    }
                }
                // the span of the generators is exactly the kernel
                let span = brute_span(m, ncols, &gens);
                for v in enumerate_vectors(m, ncols) {
                    let in_kernel = rows.iter().all(|r| {
                        r.iter().zip(&v).map(|(&a, &b)| a * b % m).sum::<u64>() % m == 0
                    });
                    assert_eq!(
                        span.contains(&v),
                        in_kernel,
                        "kernel mismatch at {v:?} mod {m}, rows {rows:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn subquotient_matches_bruteforce_group_order() {
        let mut rng = ChaCha8Rng::seed_from_u64(101);
        for &m in &[3u64, 4, 5, 6, 8, 9, 12, 16, 18, 30] {
            for _ in 0..20 {
                let n = rng.gen_range(1..=3usize);
                let sub_gens: Vec<Vec<u64>> = (0..rng.gen_range(1..=2usize))
                    .map(|_| (0..n).map(|_| rng.gen_range(0..m)).collect())
                    .collect();
                // smaller = random multiples of the sub generators, so the
                // containment precondition holds by construction
                let smaller: Vec<Vec<u64>> = (0..rng.gen_range(0..=2usize))
                    .map(|_| {
                        let mut acc = vec![0u64; n];
                        for g in &sub_gens {
                            let c = rng.gen_range(0..m);
                            for (a, &b) in acc.iter_mut().zip(g) {
                                *a = (*a + c * b) % m;
                            }
                        }
                        acc
                    })
                    .collect();
                let sub_span = brute_span(m, n, &sub_gens);
                let small_span = brute_span(m, n, &smaller);
                let want = sub_span.len() / small_span.len();
                let (inv, reps) = subquotient_invariants(m, n, &sub_gens, &smaller);
                let got: u64 = inv.iter().product();
                assert_eq!(got as usize, want, "quotient order mod {m}");
                // each representative lies in the subgroup span and has the
                // stated order in the quotient
                for (rep, &ord) in reps.iter().zip(&inv) {
                    assert!(sub_span.contains(rep));
                    let mut acc = vec![0u64; n];
                    for k in 1..=ord {
                        for (a, &b) in acc.iter_mut().zip(rep) {
                            *a = (*a + b) % m;
                        }
                        let in_small = small_span.contains(&acc);
                        assert_eq!(in_small, k == ord, "order of {rep:?} is not {ord}");
                        if in_small {
                            break;
                        }
                    }
                }
            }
        }
    }
}
