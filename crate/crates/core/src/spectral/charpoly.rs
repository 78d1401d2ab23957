//! Exact characteristic polynomials of integer matrices.
//!
//! The polynomial is computed modulo enough 62-bit primes to pin down every
//! coefficient: each coefficient of `det(λI - M)` is an elementary symmetric
//! function of eigenvalues bounded by the largest absolute row sum `R`, so
//! `|c_k| ≤ C(n, k)·R^k ≤ (1 + R)^n`. Modulo each prime the matrix is
//! reduced to upper Hessenberg form by similarity, whose characteristic
//! polynomial follows from a three-term-style recurrence; the residues are
//! then combined by the Chinese remainder theorem.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;
use crate::error::{Error, Result};
use crate::matrix::SymmetricIntMatrix;

/// Largest dimension accepted by the exact routines.
pub const MAX_EXACT_DIM: usize = 512;

/// Monic characteristic polynomial `det(λI - M)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    /// Ascending powers of λ; `coeffs[dim] == 1`.
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    /// Wraps ascending coefficients; the polynomial must be monic.
    pub fn from_coefficients(coeffs: Vec<BigInt>) -> Option<Self> {
        coeffs.last().filter(|c| c.is_one())?;
        Some(Self { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `λ^k` at index `k`.
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficients as decimal strings, highest power first.
    pub fn coefficients_descending(&self) -> Vec<String> {
        self.coeffs.iter().rev().map(BigInt::to_string).collect()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Real roots with multiplicity, ascending, each within `precision`.
    pub fn roots(&self, precision: f64) -> Vec<f64> {
        IntPoly::new(self.coeffs.clone()).real_roots(precision)
    }

    /// Roots in `(lo, hi]`, with multiplicity.
    pub fn count_roots_in(&self, lo: f64, hi: f64) -> usize {
        IntPoly::new(self.coeffs.clone()).count_roots_in(lo, hi)
    }
}

impl fmt::Display for CharPoly {
    /// Renders as e.g. `λ^5 - 4λ^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let show_mag = !mag.is_one() || k == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("λ")?,
                _ => write!(f, "λ^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

pub fn char_poly_exact(m: &SymmetricIntMatrix) -> Result<CharPoly> {
    let n = m.dim();
    if n > MAX_EXACT_DIM {
        return Err(Error::guard(
            "exact characteristic polynomial dimension",
            n as u128,
            MAX_EXACT_DIM as u128,
        ));
    }
    if n == 0 {
        return Ok(CharPoly {
            coeffs: vec![BigInt::one()],
        });
    }

    // Residues must determine values in (-B, B) with B = (1 + R)^n.
    let r = u64::try_from(m.max_abs_row_sum()).expect("row sums are nonnegative");
    let bound: BigInt = num_traits::pow(BigInt::from(r + 1), n);
    let needed: BigInt = bound * 2u32 + 1u32;

    let mut modulus = BigInt::one();
    let mut values: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    for p in primes_below_2_62() {
        if modulus >= needed {
            break;
        }
        let residues = char_poly_mod(m, p);
        crt_accumulate(&mut values, &modulus, &residues, p);
        modulus *= p;
    }
    let half: BigInt = &modulus >> 1;
    for v in &mut values {
        if *v > half {
            *v -= &modulus;
        }
    }
    Ok(CharPoly { coeffs: values })
}

/// Exact cospectrality: equal characteristic polynomials.
pub fn spectra_equal_exact(m1: &SymmetricIntMatrix, m2: &SymmetricIntMatrix) -> Result<bool> {
    if m1.dim() != m2.dim() {
        for m in [m1, m2] {
            if m.dim() > MAX_EXACT_DIM {
                return Err(Error::guard(
                    "exact characteristic polynomial dimension",
                    m.dim() as u128,
                    MAX_EXACT_DIM as u128,
                ));
            }
        }
        return Ok(false);
    }
    Ok(char_poly_exact(m1)? == char_poly_exact(m2)?)
}

/// Extends `values` (known modulo `modulus`) with residues modulo `p`.
fn crt_accumulate(values: &mut [BigInt], modulus: &BigInt, residues: &[u64], p: u64) {
    let big_p = BigInt::from(p);
    let m_mod_p = to_u64(&(modulus % &big_p));
    let m_inv = pow_mod(m_mod_p, p - 2, p);
    for (v, &r) in values.iter_mut().zip(residues) {
        let v_mod_p = to_u64(&(&*v % &big_p));
        let diff = (r + p - v_mod_p) % p;
        let k = mul_mod(diff, m_inv, p);
        *v += modulus * k;
    }
}

fn to_u64(x: &BigInt) -> u64 {
    u64::try_from(x).expect("value reduced below a 64-bit modulus")
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(p)) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // These bases are a deterministic witness set for all 64-bit integers.
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes in descending order starting just below `2^62`.
fn primes_below_2_62() -> impl Iterator<Item = u64> {
    ((1u64 << 61)..(1u64 << 62))
        .rev()
        .step_by(2)
        .filter(|&n| is_prime(n))
}

/// Coefficients of `det(λI - M) mod p`, ascending.
fn char_poly_mod(m: &SymmetricIntMatrix, p: u64) -> Vec<u64> {
    let n = m.dim();
    let big_p = i128::from(p);
    let mut h: Vec<u64> = m
        .as_row_major()
        .iter()
        .map(|&x| i128::from(x).rem_euclid(big_p) as u64)
        .collect();
    let at = |i: usize, j: usize| i * n + j;

    // Similarity reduction to upper Hessenberg form.
    for j in 0..n.saturating_sub(2) {
        let Some(pivot) = (j + 1..n).find(|&i| h[at(i, j)] != 0) else {
            continue;
        };
        if pivot != j + 1 {
            for c in 0..n {
                h.swap(at(pivot, c), at(j + 1, c));
            }
            for r in 0..n {
                h.swap(at(r, pivot), at(r, j + 1));
            }
        }
        let inv = pow_mod(h[at(j + 1, j)], p - 2, p);
        for i in j + 2..n {
            let u = mul_mod(h[at(i, j)], inv, p);
            if u == 0 {
                continue;
            }
            // row_i -= u · row_{j+1}
            for c in 0..n {
                let t = mul_mod(u, h[at(j + 1, c)], p);
                h[at(i, c)] = (h[at(i, c)] + p - t) % p;
            }
            // col_{j+1} += u · col_i
            for r in 0..n {
                let t = mul_mod(u, h[at(r, i)], p);
                h[at(r, j + 1)] = (h[at(r, j + 1)] + t) % p;
            }
        }
    }

    // polys[k] is the characteristic polynomial of the leading k×k block.
    let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    polys.push(vec![1]);
    for k in 1..=n {
        let diag = h[at(k - 1, k - 1)];
        let prev = &polys[k - 1];
        let mut next = vec![0u64; k + 1];
        // (λ - h_kk) · p_{k-1}
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % p;
            next[d] = (next[d] + p - mul_mod(diag, c, p)) % p;
        }
        let mut sub = 1u64;
        for i in 1..k {
            sub = mul_mod(sub, h[at(k - i, k - i - 1)], p);
            if sub == 0 {
                break;
            }
            let t = mul_mod(sub, h[at(k - i - 1, k - 1)], p);
            if t == 0 {
                continue;
            }
            for (d, &c) in polys[k - i - 1].iter().enumerate() {
                next[d] = (next[d] + p - mul_mod(t, c, p)) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().expect("n ≥ 1")
}
