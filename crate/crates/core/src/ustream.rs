//! Streaming evaluation of `U` on large polynomials.
//!
//! `U(sum_l a_l x^l) = sum_l a_l X_l` needs table rows through `deg a`, and
//! row `l` holds `3l + 1` coefficients of roughly `4.46 l` bits each, so
//! materializing the rows for a degree ~15000 argument is out of the
//! question (hundreds of gigabytes). Instead the sum is evaluated by a
//! Chinese-remainder scheme:
//!
//! - pick word-size primes whose product exceeds a rigorous bound on the
//!   result coefficients (an l1-norm recurrence, see [`l1_log2_bounds`]);
//! - per prime, run the row recurrence with a sliding window of three rows
//!   in `Z/p` and accumulate `a_l * row_l` on the fly;
//! - reconstruct exact coefficients by CRT and lift to signed integers.
//!
//! The result is bit-identical to the direct polynomial-table route; the
//! overlap is tested, and the whole pipeline is exact. Work is independent
//! per prime, so the stream parallelizes over a rayon pool when more than
//! one core is available.

use crate::poly::IntPoly;
use num_bigint::{BigInt, BigUint, Sign as BigSign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

/// Which linear map the stream evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UMode {
    /// `sum_l a_l X_l` (the plain even-step operator).
    Plain,
    /// `sum_l a_l (X_{l+1} / x)` (the odd-step operator; every row `l+1`
    /// has minimal degree >= 1, so the shift never drops a coefficient).
    Shifted,
}

/// Upper bounds `u_i >= log2(l1(X_i))`, from the triangle inequality on the
/// recurrence: `l1(X_i) <= 7 (3 l1(X_{i-1}) + 3 l1(X_{i-2}) + l1(X_{i-3}))`.
/// (Empirically the rows have strictly alternating signs and the bound is
/// an equality with `-7(3,-3,1)`; the inequality form stays rigorous either
/// way and costs only fractions of a percent extra.)
pub fn l1_log2_bounds(max_i: usize) -> Vec<f64> {
    let mut u = Vec::with_capacity(max_i + 1);
    u.push(0.0); // row 0 is the constant 1
    if max_i >= 1 {
        u.push((7f64).log2());
    }
    if max_i >= 2 {
        u.push((161f64).log2()); // l1 of the pinned row 2
    }
    for i in 3..=max_i {
        let (a, b, c) = (u[i - 1], u[i - 2], u[i - 3]);
        let m = a.max(b).max(c);
        let s = 3.0 * (a - m).exp2() + 3.0 * (b - m).exp2() + (c - m).exp2();
        u.push(m + s.log2() + (7f64).log2() + 1e-9);
    }
    u
}

/// Bits needed to carry every coefficient of the stream result, with sign:
/// `2 + log2(sum_l |a_l| * l1(row used by l))`.
fn result_bound_bits(a: &IntPoly, mode: UMode) -> u64 {
    let deg = a.degree().unwrap_or(0);
    let row_of = |l: usize| match mode {
        UMode::Plain => l,
        UMode::Shifted => l + 1,
    };
    let bounds = l1_log2_bounds(row_of(deg));
    let mut m = f64::NEG_INFINITY;
    let terms: Vec<f64> = a
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(l, c)| c.bits() as f64 + bounds[row_of(l)])
        .collect();
    for &t in &terms {
        m = m.max(t);
    }
    if !m.is_finite() {
        return 8;
    }
    let sum: f64 = terms.iter().map(|&t| (t - m).exp2()).sum();
    (m + sum.log2()).ceil() as u64 + 2
}

// ---------------------------------------------------------------------------
// Montgomery arithmetic for primes below 2^30
// ---------------------------------------------------------------------------
//
// With `p < 2^30` the Montgomery product of inputs in `[0, 2p)` stays in
// `[0, 2p)` without a conditional subtraction (`t < 4p^2 < p 2^32`), so the
// whole row stream runs on a lazy residue representation and the hot loops
// are branch-free elementwise passes the compiler can vectorize.

/// Montgomery context for an odd prime `p < 2^30`, `R = 2^32`.
#[derive(Debug, Clone, Copy)]
struct Mont32 {
    p: u32,
    /// `-p^{-1} mod 2^32`
    ninv: u32,
    /// `R^2 mod p`, for conversion into Montgomery form
    r2: u32,
}

impl Mont32 {
    fn new(p: u32) -> Self {
        debug_assert!(p < (1 << 30) && p % 2 == 1);
        // Newton iteration for the inverse of p mod 2^32.
        let mut inv: u32 = p; // p odd: p*p = 1 mod 8, a valid 3-bit start
        for _ in 0..4 {
            inv = inv.wrapping_mul(2u32.wrapping_sub(p.wrapping_mul(inv)));
        }
        let ninv = inv.wrapping_neg();
        let r = (1u64 << 32) % p as u64;
        let r2 = (r * r % p as u64) as u32;
        Mont32 { p, ninv, r2 }
    }

    /// REDC on `t < p * 2^32`; the result is `< 2p` (lazy, no final
    /// subtraction).
    #[inline(always)]
    fn redc_lazy(self, t: u64) -> u32 {
        let m = (t as u32).wrapping_mul(self.ninv);
        ((t + m as u64 * self.p as u64) >> 32) as u32
    }

    /// Montgomery product, closed on the lazy range `[0, 2p)`.
    #[inline(always)]
    fn mul_lazy(self, a: u32, b: u32) -> u32 {
        self.redc_lazy(a as u64 * b as u64)
    }

    /// Canonical value in `[0, p)` from a lazy one.
    #[inline(always)]
    fn canon(self, a: u32) -> u32 {
        if a >= self.p {
            a - self.p
        } else {
            a
        }
    }

    fn to_mont(self, a: u32) -> u32 {
        debug_assert!(a < self.p);
        self.canon(self.mul_lazy(a, self.r2))
    }

    fn from_mont(self, a: u32) -> u32 {
        self.canon(self.redc_lazy(a as u64))
    }

    /// Canonical product of canonical inputs.
    #[inline(always)]
    fn mul(self, a: u32, b: u32) -> u32 {
        self.canon(self.mul_lazy(a, b))
    }

    /// Canonical sum of canonical inputs.
    #[inline(always)]
    fn add(self, a: u32, b: u32) -> u32 {
        let t = a + b;
        if t >= self.p {
            t - self.p
        } else {
            t
        }
    }
}

/// Deterministic Miller-Rabin for `n < 2^32` (bases 2, 7, 61).
fn is_prime_u32(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u32, 3, 5, 7, 11, 13] {
        if n % q == 0 {
            return n == q;
        }
    }
    let n64 = n as u64;
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'base: for a in [2u64, 7, 61] {
        let mut x = 1u64;
        let mut b = a % n64;
        let mut e = d;
        while e > 0 {
            if e & 1 == 1 {
                x = x * b % n64;
            }
            b = b * b % n64;
            e >>= 1;
        }
        if x == 1 || x == n64 - 1 {
            continue;
        }
        for _ in 1..s {
            x = x * x % n64;
            if x == n64 - 1 {
                continue 'base;
            }
        }
        return false;
    }
    true
}

/// The largest `count` primes below `2^30`.
fn primes_u30(count: usize) -> Vec<u32> {
    let mut primes = Vec::with_capacity(count);
    let mut n = (1u32 << 30) - 1;
    while primes.len() < count {
        if is_prime_u32(n) {
            primes.push(n);
        }
        n -= 2;
    }
    primes
}

// ---------------------------------------------------------------------------
// Per-prime stream
// ---------------------------------------------------------------------------

/// Base rows 1 and 2 as signed small integers (row 3 onward comes from the
/// recurrence, which is valid from i = 3; the pinned row 3 is a test-time
/// cross-check, not an input).
const ROW1: [i64; 4] = [0, 1, -3, 3];
const ROW2: [i64; 7] = [0, -2, 9, -24, 45, -54, 27];

fn poly_mod_mont(a: &IntPoly, ctx: Mont32) -> Vec<u32> {
    let p = BigUint::from(ctx.p);
    a.coeffs()
        .iter()
        .map(|c| {
            let r = (c.magnitude() % &p).to_u32().expect("residue fits u32");
            let r = if c.is_negative() && r != 0 { ctx.p - r } else { r };
            ctx.to_mont(r)
        })
        .collect()
}

/// Reduce `v < 14p` into the lazy range `[0, 2p)`, branch-free.
#[inline(always)]
fn reduce14_to_2p(v: u64, p2: u64) -> u32 {
    let v = if v >= 4 * p2 { v - 4 * p2 } else { v };
    let v = if v >= 2 * p2 { v - 2 * p2 } else { v };
    let v = if v >= p2 { v - p2 } else { v };
    v as u32
}

/// Run the recurrence mod `p`, accumulating the mode's linear combination.
/// Rows live in the lazy range `[0, 2p)` throughout; the hot loops are
/// branch-free elementwise passes over `u32` slices so the compiler can
/// vectorize them.
/// Returns the result residues in ordinary (non-Montgomery) form.
fn stream_one_prime(a_mont: &[u32], mode: UMode, row_max: usize, ctx: Mont32) -> Vec<u32> {
    let p2u = 2 * ctx.p; // lazy modulus as u32 (p < 2^30, so 4p < 2^32)
    let p2 = p2u as u64;
    let result_len = match mode {
        UMode::Plain => 3 * row_max + 1,
        UMode::Shifted => 3 * row_max,
    };
    // wide enough for the recurrence window and the pinned base rows
    let width = (3 * row_max + 1).max(ROW2.len());
    let mut r3 = vec![0u32; width]; // row i-3
    let mut r2 = vec![0u32; width]; // row i-2
    let mut r1 = vec![0u32; width]; // row i-1
    let mut combo = vec![0u32; width];
    let mut next = vec![0u32; width];
    let mut acc = vec![0u32; result_len];

    let one_m = ctx.to_mont(1);
    r3[0] = one_m;
    for (j, &c) in ROW1.iter().enumerate() {
        r2[j] = ctx.to_mont(c.rem_euclid(ctx.p as i64) as u32);
    }
    for (j, &c) in ROW2.iter().enumerate() {
        r1[j] = ctx.to_mont(c.rem_euclid(ctx.p as i64) as u32);
    }

    // the mode's scalar for row i, if the row participates
    let scalar_for = |i: usize| -> Option<u32> {
        let idx = match mode {
            UMode::Plain => i,
            UMode::Shifted => i.checked_sub(1)?,
        };
        match a_mont.get(idx) {
            Some(&s) if s != 0 => Some(s),
            _ => None,
        }
    };
    // row coefficient j lands at acc[j - acc_shift]
    let acc_shift = match mode {
        UMode::Plain => 0usize,
        UMode::Shifted => 1,
    };
    #[inline(always)]
    fn lazy_add(a: u32, u: u32, p2u: u32) -> u32 {
        let t = a + u; // < 4p < 2^32
        if t >= p2u {
            t - p2u
        } else {
            t
        }
    }

    // rows 0..=2 are prebuilt; accumulate them directly
    {
        let mut take = |i: usize, row: &[u32], deg: usize| {
            if let Some(s) = scalar_for(i) {
                for j in acc_shift..=deg {
                    let u = ctx.mul_lazy(s, row[j]);
                    acc[j - acc_shift] = lazy_add(acc[j - acc_shift], u, p2u);
                }
            }
        };
        take(0, std::slice::from_ref(&one_m), 0);
        take(1, &r2, 3);
        take(2, &r1, 6);
    }

    for i in 3..=row_max {
        let prev_deg = 3 * (i - 1);
        let deg = 3 * i;
        // combo = 3 r1 - 3 r2 + r3, elementwise into [0, 2p)
        {
            let n = prev_deg + 1;
            let (dst, s1, s2, s3) = (&mut combo[..n], &r1[..n], &r2[..n], &r3[..n]);
            for k in 0..n {
                let v = 3 * s1[k] as u64 + 3 * (p2 - s2[k] as u64) + s3[k] as u64; // < 14p
                dst[k] = reduce14_to_2p(v, p2);
            }
        }
        // next = (x - 3x^2 + 3x^3) * combo; entries of combo beyond
        // prev_deg are zero by construction, so reads up to deg - 1 are
        // safe and correct
        next[0] = 0;
        next[1] = combo[0];
        next[2] = reduce14_to_2p(combo[1] as u64 + 3 * (p2 - combo[0] as u64), p2);
        let len = deg - 2;
        match scalar_for(i) {
            Some(s) => {
                // low coefficients outside the vector pass
                for j in acc_shift.max(1)..3 {
                    let u = ctx.mul_lazy(s, next[j]);
                    acc[j - acc_shift] = lazy_add(acc[j - acc_shift], u, p2u);
                }
                // fused row generation + accumulation
                let (c1s, c2s, c3s) = (&combo[2..2 + len], &combo[1..1 + len], &combo[..len]);
                let dst = &mut next[3..3 + len];
                let accs = &mut acc[3 - acc_shift..3 - acc_shift + len];
                let (p, ninv, s64) = (ctx.p as u64, ctx.ninv, s as u64);
                for k in 0..len {
                    let v = c1s[k] as u64 + 3 * (p2 - c2s[k] as u64) + 3 * c3s[k] as u64; // < 14p
                    let w = reduce14_to_2p(v, p2);
                    dst[k] = w;
                    let t = s64 * w as u64; // < 4p^2 < p 2^32
                    let m = (t as u32).wrapping_mul(ninv);
                    let u = ((t + m as u64 * p) >> 32) as u32; // < 2p
                    let q = accs[k] + u; // < 4p < 2^32
                    accs[k] = if q >= p2u { q - p2u } else { q };
                }
            }
            None => {
                let (c1s, c2s, c3s) = (&combo[2..2 + len], &combo[1..1 + len], &combo[..len]);
                let dst = &mut next[3..3 + len];
                for k in 0..len {
                    let v = c1s[k] as u64 + 3 * (p2 - c2s[k] as u64) + 3 * c3s[k] as u64;
                    dst[k] = reduce14_to_2p(v, p2);
                }
            }
        }
        std::mem::swap(&mut r3, &mut r2);
        std::mem::swap(&mut r2, &mut r1);
        std::mem::swap(&mut r1, &mut next);
    }

    for v in acc.iter_mut() {
        *v = ctx.from_mont(ctx.canon(*v));
    }
    acc
}

// ---------------------------------------------------------------------------
// CRT reconstruction
// ---------------------------------------------------------------------------

/// Garner precomputation for one batch of primes: mixed-radix conversion
/// tables so per-coefficient reconstruction runs in u32 arithmetic.
struct GarnerBatch {
    ctxs: Vec<Mont32>,
    /// `prefix_inv[j] = (p_0 ... p_{j-1})^{-1} mod p_j`, Montgomery form
    prefix_inv: Vec<u32>,
    /// `prefix_mod[j][k] = p_k mod p_j` (Montgomery form) for `k < j`
    prefix_mod: Vec<Vec<u32>>,
    /// batch modulus `p_0 ... p_{B-1}`
    modulus: BigUint,
    primes: Vec<u32>,
}

impl GarnerBatch {
    fn new(primes: &[u32]) -> Self {
        let ctxs: Vec<Mont32> = primes.iter().map(|&p| Mont32::new(p)).collect();
        let mut prefix_inv = Vec::with_capacity(primes.len());
        let mut prefix_mod = Vec::with_capacity(primes.len());
        for (j, &pj) in primes.iter().enumerate() {
            let ctx = ctxs[j];
            let mut prod = 1u64;
            let mut mods = Vec::with_capacity(j);
            for &pk in &primes[..j] {
                mods.push(ctx.to_mont((pk as u64 % pj as u64) as u32));
                prod = prod * (pk as u64 % pj as u64) % pj as u64;
            }
            let inv = mod_inverse_u64(prod, pj as u64);
            prefix_inv.push(ctx.to_mont(inv as u32));
            prefix_mod.push(mods);
        }
        let modulus = primes
            .iter()
            .fold(BigUint::one(), |acc, &p| acc * BigUint::from(p));
        GarnerBatch {
            ctxs,
            prefix_inv,
            prefix_mod,
            modulus,
            primes: primes.to_vec(),
        }
    }

    /// Reconstruct the value with the given residues modulo the batch
    /// modulus, as a nonnegative integer.
    fn reconstruct(&self, residues: &[u32]) -> BigUint {
        let b = self.primes.len();
        debug_assert_eq!(residues.len(), b);
        let mut digits = vec![0u32; b]; // mixed-radix digits, plain form
        for j in 0..b {
            let ctx = self.ctxs[j];
            // value-so-far mod p_j via Horner over the mixed radix
            let mut v = 0u32;
            for k in (0..j).rev() {
                let vm = ctx.to_mont(v);
                let t = ctx.mul(vm, self.prefix_mod[j][k]);
                let t = ctx.from_mont(t);
                v = ctx.add(t, digits[k] % ctx.p);
            }
            let rj = residues[j];
            let diff = if rj >= v { rj - v } else { ctx.p - (v - rj) };
            let d = ctx.mul(ctx.to_mont(diff), self.prefix_inv[j]);
            digits[j] = ctx.from_mont(d);
        }
        // value = d_0 + p_0 (d_1 + p_1 (d_2 + ...))
        let mut value = BigUint::zero();
        for j in (0..b).rev() {
            value = value * BigUint::from(self.primes[j]) + BigUint::from(digits[j]);
        }
        value
    }
}

fn mod_inverse_u64(a: u64, p: u64) -> u64 {
    // Fermat: p prime, a != 0 mod p
    debug_assert!(a % p != 0);
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = (result as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        e >>= 1;
    }
    result
}

/// Fold batch values `(v_i mod M_i)` into a single value modulo the product,
/// via a product tree with precomputed inverses.
struct CrtTree {
    /// per level: (left modulus, right modulus, inv(left) mod right)
    levels: Vec<Vec<(BigUint, BigUint, BigUint)>>,
    root: BigUint,
}

impl CrtTree {
    fn new(moduli: &[BigUint]) -> Self {
        let mut levels = Vec::new();
        let mut current: Vec<BigUint> = moduli.to_vec();
        while current.len() > 1 {
            let mut level = Vec::with_capacity(current.len() / 2);
            let mut next = Vec::with_capacity(current.len().div_ceil(2));
            let mut it = current.chunks(2);
            for pair in &mut it {
                if pair.len() == 2 {
                    let inv = big_mod_inverse(&pair[0], &pair[1]);
                    next.push(&pair[0] * &pair[1]);
                    level.push((pair[0].clone(), pair[1].clone(), inv));
                } else {
                    next.push(pair[0].clone());
                }
            }
            levels.push(level);
            current = next;
        }
        CrtTree {
            levels,
            root: current.pop().unwrap_or_else(BigUint::one),
        }
    }

    fn combine(&self, values: Vec<BigUint>) -> BigUint {
        let mut current = values;
        for level in &self.levels {
            let mut next = Vec::with_capacity(current.len().div_ceil(2));
            let mut pairs = current.chunks(2);
            for (slot, pair) in level.iter().zip(&mut pairs) {
                let (m1, m2, inv) = slot;
                let (x1, x2) = (&pair[0], &pair[1]);
                // x = x1 + m1 * ((x2 - x1) * inv mod m2)
                let x1m = x1 % m2;
                let d = if x2 >= &x1m {
                    x2 - &x1m
                } else {
                    m2 - (&x1m - x2)
                };
                let t = d * inv % m2;
                next.push(x1 + m1 * t);
            }
            for rest in pairs {
                next.push(rest[0].clone());
            }
            current = next;
        }
        current.pop().expect("combine of nonempty values")
    }
}

fn big_mod_inverse(a: &BigUint, m: &BigUint) -> BigUint {
    let e = BigInt::from_biguint(BigSign::Plus, a.clone())
        .extended_gcd(&BigInt::from_biguint(BigSign::Plus, m.clone()));
    debug_assert!(e.gcd.is_one(), "moduli are coprime");
    let mm = BigInt::from_biguint(BigSign::Plus, m.clone());
    e.x.mod_floor(&mm).to_biguint().expect("nonnegative residue")
}

// ---------------------------------------------------------------------------
// Public entry point
// ---------------------------------------------------------------------------

const GARNER_BATCH: usize = 64;

/// Evaluate the mode's linear combination of table rows for `a`, exactly.
///
/// Equivalent to the direct polynomial route through a materialized table
/// covering `deg a` (+1 for [`UMode::Shifted`]) rows, but in time and memory
/// that scale with the result size rather than the table size.
pub fn u_apply_stream(a: &IntPoly, mode: UMode) -> IntPoly {
    if a.is_zero() {
        return IntPoly::zero();
    }
    let deg = a.degree().expect("nonzero");
    let row_max = match mode {
        UMode::Plain => deg,
        UMode::Shifted => deg + 1,
    };
    let bound_bits = result_bound_bits(a, mode);

    // enough primes that their product exceeds the bound with margin
    let count_estimate = (bound_bits + 64).div_ceil(30) as usize;
    let mut primes = primes_u30(count_estimate);
    loop {
        let bits: f64 = primes.iter().map(|&p| (p as f64).log2()).sum();
        if bits - 1.0 > (bound_bits + 2) as f64 {
            break;
        }
        let more = primes_u30(primes.len() + 16);
        primes = more;
    }

    // per-prime streams
    let residue_rows: Vec<Vec<u32>> = primes
        .par_iter()
        .map(|&p| {
            let ctx = Mont32::new(p);
            let a_mont = poly_mod_mont(a, ctx);
            stream_one_prime(&a_mont, mode, row_max, ctx)
        })
        .collect();

    // CRT: Garner within batches, product tree across batches
    let batches: Vec<GarnerBatch> = primes
        .chunks(GARNER_BATCH)
        .map(GarnerBatch::new)
        .collect();
    let tree = CrtTree::new(&batches.iter().map(|b| b.modulus.clone()).collect::<Vec<_>>());
    let modulus = tree.root.clone();
    let half: BigUint = &modulus >> 1;

    let result_len = residue_rows[0].len();
    let coeffs: Vec<BigInt> = (0..result_len)
        .into_par_iter()
        .map(|j| {
            let mut batch_values = Vec::with_capacity(batches.len());
            let mut offset = 0;
            for batch in &batches {
                let b = batch.primes.len();
                let residues: Vec<u32> = residue_rows[offset..offset + b]
                    .iter()
                    .map(|row| row[j])
                    .collect();
                batch_values.push(batch.reconstruct(&residues));
                offset += b;
            }
            let v = tree.combine(batch_values);
            if v > half {
                BigInt::from_biguint(BigSign::Minus, modulus.clone() - v)
            } else {
                BigInt::from_biguint(BigSign::Plus, v)
            }
        })
        .collect();
    IntPoly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modeq::{base_polys, ModEqTable, Side};

    #[test]
    fn montgomery_round_trips() {
        let ctx = Mont32::new(1073741789);
        for a in [0u32, 1, 2, 12345, 1073741788] {
            assert_eq!(ctx.from_mont(ctx.to_mont(a)), a);
        }
        let am = ctx.to_mont(123456789);
        let bm = ctx.to_mont(987654321);
        let prod = ctx.from_mont(ctx.mul(am, bm));
        assert_eq!(
            prod as u64,
            123456789u64 * 987654321 % 1073741789
        );
    }

    #[test]
    fn prime_generation() {
        let ps = primes_u30(40);
        assert_eq!(ps.len(), 40);
        assert!(ps.iter().all(|&p| p > (1 << 29) && p < (1 << 30) && is_prime_u32(p)));
        let mut sorted = ps.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), 40);
    }

    #[test]
    fn garner_batch_reconstructs() {
        let primes = primes_u30(7);
        let batch = GarnerBatch::new(&primes);
        let value = BigUint::parse_bytes(b"123456789012345678901234567890123456", 10).unwrap();
        let residues: Vec<u32> = primes
            .iter()
            .map(|&p| (&value % BigUint::from(p)).to_u32().unwrap())
            .collect();
        assert_eq!(batch.reconstruct(&residues), value % &batch.modulus);
    }

    #[test]
    fn stream_matches_table_route() {
        // bit-identical to the direct table evaluation on the overlap
        let table = ModEqTable::build(Side::Xi, base_polys(), 40).unwrap();
        let samples = [
            IntPoly::from_i64(&[1, -3, 3]),
            IntPoly::from_i64(&[0, 0, 5]),
            IntPoly::from_i64(&[7]),
            IntPoly::from_i64(&[2, 0, -1, 0, 0, 9, 4, -4, 1, 1, 0, 3, -8]),
        ];
        for p in &samples {
            let direct = crate::engine::u_poly(p, &table).unwrap();
            let streamed = u_apply_stream(p, UMode::Plain);
            assert_eq!(direct, streamed, "plain: {p:?}");
            let direct = crate::engine::u_gamma_poly(p, &table).unwrap();
            let streamed = u_apply_stream(p, UMode::Shifted);
            assert_eq!(direct, streamed, "shifted: {p:?}");
        }
    }

    #[test]
    fn stream_handles_large_coefficients() {
        // coefficients far beyond one prime's range
        let big: BigInt = BigInt::from(3).pow(200) - 1;
        let p = IntPoly::new(vec![big.clone(), -big.clone(), big]);
        let table = ModEqTable::build(Side::Xi, base_polys(), 6).unwrap();
        assert_eq!(
            crate::engine::u_poly(&p, &table).unwrap(),
            u_apply_stream(&p, UMode::Plain)
        );
    }

    #[test]
    fn l1_bounds_dominate_actual_rows() {
        let table = ModEqTable::build(Side::Xi, base_polys(), 60).unwrap();
        let bounds = l1_log2_bounds(60);
        for (i, row) in table.rows().iter().enumerate().skip(1) {
            let l1: BigUint = row
                .coeffs()
                .iter()
                .map(|c| c.magnitude().clone())
                .sum();
            assert!(
                (l1.bits() as f64 - 1.0) <= bounds[i],
                "l1 bound too small at row {i}"
            );
        }
    }
}

#[cfg(test)]
mod bench {
    use super::*;

    #[test]
    #[ignore]
    fn kernel_rate_rowgen_only() {
        let n = 4921usize;
        let a = IntPoly::new(vec![num_bigint::BigInt::from(1)]); // scalar only at row 0
        let ctx = Mont32::new(primes_u30(1)[0]);
        let a_mont = poly_mod_mont(&a, ctx);
        let steps: f64 = (3..=n).map(|i| 3.0 * i as f64).sum();
        let t = std::time::Instant::now();
        let out = stream_one_prime(&a_mont, UMode::Plain, n, ctx);
        let dt = t.elapsed().as_secs_f64();
        println!(
            "rowgen-only N={n}: {:.3} s, {:.2} ns/coeff-step (checksum {})",
            dt,
            dt * 1e9 / steps,
            out.iter().map(|&x| x as u64).sum::<u64>() % 1_000_000_007
        );
    }

    #[test]
    #[ignore]
    fn kernel_rate() {
        // one-prime stream at the geometry of the deep iterates
        let n = 4921usize;
        let coeffs: Vec<num_bigint::BigInt> =
            (0..=n).map(|k| num_bigint::BigInt::from((k % 97) as i64 - 48)).collect();
        let a = IntPoly::new(coeffs);
        let ctx = Mont32::new(primes_u30(1)[0]);
        let a_mont = poly_mod_mont(&a, ctx);
        let steps: f64 = (3..=n).map(|i| 3.0 * i as f64).sum();
        let t = std::time::Instant::now();
        let out = stream_one_prime(&a_mont, UMode::Plain, n, ctx);
        let dt = t.elapsed().as_secs_f64();
        println!(
            "N={n}: {:.3} s, {:.2} ns/coeff-step ({} result residues, checksum {})",
            dt,
            dt * 1e9 / steps,
            out.len(),
            out.iter().map(|&x| x as u64).sum::<u64>() % 1_000_000_007
        );
    }
}
