//! Dense univariate polynomials over the integers, with just enough
//! machinery to isolate real roots exactly: primitive remainder sequences,
//! Yun's square-free decomposition and Sturm chains evaluated at dyadic
//! points.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients in ascending order of power; no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> &BigInt {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.lead().is_negative() {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = BigInt::zero();
        Self::new(
            (0..len)
                .map(|k| self.coeffs.get(k).unwrap_or(&zero) - other.coeffs.get(k).unwrap_or(&zero))
                .collect(),
        )
    }

    /// Pseudo-remainder `lc(d)^(deg a - deg d + 1) · a mod d`.
    fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("division by zero polynomial");
        let Some(da) = self.degree().filter(|&da| da >= dd) else {
            return self.clone();
        };
        let lead = d.lead().clone();
        let mut r = self.coeffs.clone();
        let mut steps = 0;
        while r.len() > dd {
            let top = r.len() - 1;
            let t = r[top].clone();
            for c in r.iter_mut() {
                *c *= &lead;
            }
            for (k, dc) in d.coeffs.iter().enumerate() {
                r[top - dd + k] -= &t * dc;
            }
            r.pop();
            steps += 1;
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        // Pad to exactly deg a - deg d + 1 factors of lc(d).
        let missing = da - dd + 1 - steps;
        if missing > 0 {
            let scale = num_traits::pow(lead, missing);
            for c in r.iter_mut() {
                *c *= &scale;
            }
        }
        Self::new(r)
    }

    /// Remainder of `self` by `d` up to a positive constant factor.
    fn rem_positive(&self, d: &Self) -> Self {
        let r = self.pseudo_rem(d);
        let exponent = (self.degree().unwrap_or(0) + 1).saturating_sub(d.degree().unwrap());
        let flip = d.lead().is_negative() && exponent % 2 == 1;
        let r = if flip {
            Self::new(r.coeffs.into_iter().map(|c| -c).collect())
        } else {
            r
        };
        r.content_positive()
    }

    /// Divides out the positive content without touching the sign.
    fn content_positive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Primitive greatest common divisor with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a.primitive()
    }

    /// Exact quotient `self / d`; `d` must be primitive and divide `self`.
    pub fn exact_div(&self, d: &Self) -> Self {
        let dd = d.degree().expect("division by zero polynomial");
        let Some(sd) = self.degree() else {
            return self.clone();
        };
        assert!(sd >= dd, "divisor degree exceeds dividend degree");
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let (t, rem) = r[k + dd].div_rem(d.lead());
            assert!(rem.is_zero(), "inexact polynomial division");
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &t * dc;
            }
            q[k] = t;
        }
        assert!(r.iter().all(Zero::is_zero), "inexact polynomial division");
        Self::new(q)
    }

    /// Yun's algorithm: `result[i]` is the product of the irreducible
    /// factors of multiplicity `i + 1`, primitive and square-free.
    ///
    /// Every gcd is taken primitive rather than monic; the quotients in each
    /// round share the same scalar, so the recurrence stays in `Z[x]`.
    pub fn square_free_decomposition(&self) -> Vec<IntPoly> {
        let f = self.primitive();
        if f.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0);
        let c = df.exact_div(&a0);
        let mut d = c.sub(&b.derivative());
        let mut factors = Vec::new();
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            let next_b = b.exact_div(&a);
            let c = d.exact_div(&a);
            d = c.sub(&next_b.derivative());
            factors.push(a);
            b = next_b;
        }
        // drop trailing constant factors
        while factors.last().is_some_and(|p| p.degree() == Some(0)) {
            factors.pop();
        }
        factors
    }

    /// Sign of `self(x / 2^shift)`, via the homogenized integer value.
    fn sign_at(&self, x: &BigInt, shift: usize) -> i8 {
        let Some(deg) = self.degree() else {
            return 0;
        };
        let mut acc = self.coeffs[deg].clone();
        for k in (0..deg).rev() {
            acc = acc * x + (&self.coeffs[k] << (shift * (deg - k)));
        }
        match acc.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    /// Sturm chain of a square-free polynomial.
    fn sturm_chain(&self) -> Vec<IntPoly> {
        let mut chain = vec![self.primitive(), self.derivative().content_positive()];
        loop {
            let n = chain.len();
            if chain[n - 1].degree().unwrap_or(0) == 0 {
                break;
            }
            let r = chain[n - 2].rem_positive(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(Self::new(r.coeffs.into_iter().map(|c| -c).collect()));
        }
        chain
    }

    /// Power of two bounding the absolute value of every root.
    fn root_bound_log2(&self) -> usize {
        let deg = self.degree().unwrap_or(0);
        let lead_bits = self.lead().bits() as usize;
        let mut best = 0usize;
        for k in 1..=deg {
            let c = &self.coeffs[deg - k];
            if c.is_zero() {
                continue;
            }
            // |c / lead|^(1/k) < 2^ceil((bits(c) - bits(lead) + 1) / k)
            let ratio_bits = (c.bits() as usize + 1).saturating_sub(lead_bits);
            best = best.max(ratio_bits.div_ceil(k));
        }
        best + 1
    }

    /// Real roots with multiplicity, ascending, each within `precision` of
    /// the true value.
    pub fn real_roots(&self, precision: f64) -> Vec<f64> {
        assert!(precision > 0.0);
        let shift = (-precision.log2()).ceil().max(0.0) as usize + 2;
        let mut roots = Vec::new();
        for (k, factor) in self.square_free_decomposition().into_iter().enumerate() {
            for r in factor.square_free_roots(shift) {
                roots.extend(std::iter::repeat_n(r, k + 1));
            }
        }
        roots.sort_by(f64::total_cmp);
        roots
    }

    /// Number of real roots in `(lo, hi]` counted with multiplicity. The
    /// bounds are rounded outward to multiples of `2^-40`.
    pub fn count_roots_in(&self, lo: f64, hi: f64) -> usize {
        const SHIFT: usize = 40;
        let scale = (1u64 << SHIFT) as f64;
        let lo = BigInt::from((lo * scale).floor() as i128);
        let hi = BigInt::from((hi * scale).ceil() as i128);
        self.square_free_decomposition()
            .into_iter()
            .enumerate()
            .map(|(k, factor)| {
                let chain = factor.sturm_chain();
                (k + 1) * (variations(&chain, &lo, SHIFT) - variations(&chain, &hi, SHIFT))
            })
            .sum()
    }

    fn square_free_roots(&self, shift: usize) -> Vec<f64> {
        let chain = self.sturm_chain();
        let bound: BigInt = BigInt::one() << (self.root_bound_log2() + shift);
        let lo = -bound.clone();
        let mut pending = vec![(
            lo.clone(),
            bound.clone(),
            variations(&chain, &lo, shift),
            variations(&chain, &bound, shift),
        )];
        let mut out = Vec::new();
        let to_f64 = |x: &BigInt| {
            let (sign, mag) = (x.is_negative(), x.magnitude());
            let v =
                mag.to_string().parse::<f64>().unwrap_or(f64::INFINITY) / 2f64.powi(shift as i32);
            if sign {
                -v
            } else {
                v
            }
        };
        while let Some((a, b, va, vb)) = pending.pop() {
            let count = va - vb;
            if count == 0 {
                continue;
            }
            if count == 1 && &b - &a <= BigInt::one() {
                out.push(to_f64(&b));
                continue;
            }
            if &b - &a <= BigInt::one() {
                // interval cannot shrink further at this resolution
                out.extend(std::iter::repeat_n(to_f64(&b), count));
                continue;
            }
            let mid: BigInt = (&a + &b) >> 1;
            let vm = variations(&chain, &mid, shift);
            pending.push((a, mid.clone(), va, vm));
            pending.push((mid, b, vm, vb));
        }
        out
    }
}

/// Sign variations of a Sturm chain at `x / 2^shift`, zeros skipped.
fn variations(chain: &[IntPoly], x: &BigInt, shift: usize) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in chain {
        let s = p.sign_at(x, shift);
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}
