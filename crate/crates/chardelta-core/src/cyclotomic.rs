//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! Values are stored as reduced coordinate vectors in the power basis
//! `1, zeta, ..., zeta^(phi(N)-1)` of `Q[x]/Phi_N(x)`.  The representation is
//! unique, so equality is structural once two operands are embedded into a
//! common conductor.  Binary operations align operands to the lcm of their
//! conductors; results are not descended back to a minimal conductor (descent
//! happens only in [`Cyclotomic::descend`], rationality tests and display).

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{format_rational, parse_rational, rational_to_f64, Rational};

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

// ---------------------------------------------------------------------------
// Per-conductor data: Phi_N and reduction rows for high powers of zeta.
// ---------------------------------------------------------------------------

struct ConductorData {
    phi: usize,
    /// Coordinates of `x^(phi + i) mod Phi_N` in the power basis, for
    /// `i = 0 ..= max(2*phi - 2, n - 1) - phi`.
    reduction: Vec<Vec<BigInt>>,
}

/// Exact division of integer polynomials; panics if not exact (the cyclotomic
/// recursion guarantees exactness).
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one() || den[dd] == -BigInt::one());
    let nd = rem.len() - 1;
    assert!(nd >= dd);
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = &rem[k + dd] / &den[dd];
        if !c.is_zero() {
            for j in 0..=dd {
                let t = &den[j] * &c;
                rem[k + j] -= t;
            }
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact poly division");
    quot
}

fn cyclotomic_poly(n: u64, memo: &mut HashMap<u64, Vec<BigInt>>) -> Vec<BigInt> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Phi_d for all proper divisors d.
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    let mut acc = num;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let pd = cyclotomic_poly(d, memo);
        acc = poly_div_exact(&acc, &pd);
    }
    memo.insert(n, acc.clone());
    acc
}

static CONDUCTOR_CACHE: OnceLock<Mutex<HashMap<u64, Arc<ConductorData>>>> = OnceLock::new();

fn conductor_data(n: u64) -> Arc<ConductorData> {
    assert!(n >= 1, "conductor must be positive");
    let cache = CONDUCTOR_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    if let Some(d) = guard.get(&n) {
        return Arc::clone(d);
    }
    let mut memo = HashMap::new();
    let phi_poly = cyclotomic_poly(n, &mut memo);
    let phi = phi_poly.len() - 1;
    debug_assert_eq!(phi as u64, euler_phi(n));

    // reduction[i] = x^(phi+i) in basis coordinates.  Each next row is the
    // previous one shifted once, with the overflow folded through x^phi.
    let top = std::cmp::max(2 * phi.max(1) - 2, n as usize - 1);
    let n_rows = if top >= phi { top - phi + 1 } else { 0 };
    let base: Vec<BigInt> = (0..phi).map(|j| -phi_poly[j].clone()).collect();
    let mut reduction: Vec<Vec<BigInt>> = Vec::with_capacity(n_rows);
    if n_rows > 0 {
        reduction.push(base.clone());
        for _ in 1..n_rows {
            let prev = reduction.last().unwrap();
            let mut row = vec![BigInt::zero(); phi];
            let carry = prev[phi - 1].clone();
            for j in (1..phi).rev() {
                row[j] = prev[j - 1].clone();
            }
            if !carry.is_zero() {
                for j in 0..phi {
                    row[j] += &carry * &base[j];
                }
            }
            reduction.push(row);
        }
    }
    let data = Arc::new(ConductorData { phi, reduction });
    guard.insert(n, Arc::clone(&data));
    data
}

/// Reduces an unreduced coordinate vector (powers `0..len`) modulo `Phi_N`.
fn reduce_vec(data: &ConductorData, mut v: Vec<Rational>) -> Vec<Rational> {
    let phi = data.phi;
    if v.len() < phi {
        v.resize(phi, Rational::zero());
        return v;
    }
    let mut out: Vec<Rational> = v[..phi].to_vec();
    for (k, c) in v.drain(..).enumerate().skip(phi) {
        if c.is_zero() {
            continue;
        }
        let row = &data.reduction[k - phi];
        for j in 0..phi {
            if !row[j].is_zero() {
                out[j] += &c * Rational::from_integer(row[j].clone());
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// The value type.
// ---------------------------------------------------------------------------

/// An exact element of `Q(zeta_N)` in reduced power-basis coordinates.
#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        Cyclotomic::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Cyclotomic::from_rational(crate::rational::rat_i64(n))
    }

    /// `zeta_N^k`, reduced to the power basis.  `k` is taken mod `N`.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1);
        let kk = k.rem_euclid(n as i64) as usize;
        let data = conductor_data(n);
        let mut v = vec![Rational::zero(); kk + 1];
        v[kk] = Rational::one();
        Cyclotomic {
            conductor: n,
            coeffs: reduce_vec(&data, v),
        }
    }

    /// `sum r_i * zeta_N^(e_i)`; exponents taken mod `N`.
    pub fn from_powers(n: u64, terms: &[(i64, Rational)]) -> Self {
        let data = conductor_data(n);
        let mut v = vec![Rational::zero(); n as usize];
        for (e, r) in terms {
            let idx = e.rem_euclid(n as i64) as usize;
            v[idx] += r;
        }
        Cyclotomic {
            conductor: n,
            coeffs: reduce_vec(&data, v),
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Embeds into `Q(zeta_M)` for a multiple `M` of the conductor.
    pub fn embed(&self, m: u64) -> Cyclotomic {
        assert!(m % self.conductor == 0, "embedding needs conductor | m");
        if m == self.conductor {
            return self.clone();
        }
        let step = (m / self.conductor) as usize;
        let data = conductor_data(m);
        let mut v = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                v[i * step] = c.clone();
            }
        }
        Cyclotomic {
            conductor: m,
            coeffs: reduce_vec(&data, v),
        }
    }

    fn aligned(&self, other: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        let m = self.conductor.lcm(&other.conductor);
        (self.embed(m), other.embed(m))
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = self.aligned(other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = self.aligned(other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x -= y;
        }
        a
    }

    pub fn neg(&self) -> Cyclotomic {
        let mut a = self.clone();
        for c in a.coeffs.iter_mut() {
            *c = -c.clone();
        }
        a
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.aligned(other);
        let data = conductor_data(a.conductor);
        let mut v = vec![Rational::zero(); 2 * data.phi.max(1) - 1];
        for (i, ai) in a.coeffs.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                if !bj.is_zero() {
                    v[i + j] += ai * bj;
                }
            }
        }
        Cyclotomic {
            conductor: a.conductor,
            coeffs: reduce_vec(&data, v),
        }
    }

    pub fn scale(&self, r: &Rational) -> Cyclotomic {
        let mut a = self.clone();
        for c in a.coeffs.iter_mut() {
            *c *= r;
        }
        a
    }

    /// The Galois automorphism `zeta_N -> zeta_N^a` for `gcd(a, N) = 1`.
    pub fn galois(&self, a: u64) -> Cyclotomic {
        let n = self.conductor;
        assert_eq!(a.gcd(&n), 1, "galois exponent must be coprime to conductor");
        let data = conductor_data(n);
        let mut v = vec![Rational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let e = ((i as u64) * a % n) as usize;
                v[e] += c;
            }
        }
        Cyclotomic {
            conductor: n,
            coeffs: reduce_vec(&data, v),
        }
    }

    /// Complex conjugation, `zeta_N -> zeta_N^(N-1)`.
    pub fn conjugate(&self) -> Cyclotomic {
        if self.conductor <= 2 {
            return self.clone();
        }
        self.galois(self.conductor - 1)
    }

    /// `self * conjugate(self)`: the squared absolute value, a totally real
    /// element.
    pub fn abs_square(&self) -> Cyclotomic {
        self.mul(&self.conjugate())
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn eq_value(&self, other: &Cyclotomic) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.aligned(other);
        a.coeffs == b.coeffs
    }

    /// Rewrites the value over the smallest divisor of the conductor that
    /// contains it.  Used for display and serialization tidiness only.
    pub fn descend(&self) -> Cyclotomic {
        let n = self.conductor;
        for m in divisors(n) {
            if m == n {
                break;
            }
            if let Some(c) = self.express_in(m) {
                return c;
            }
        }
        self.clone()
    }

    /// Tries to write the value in `Q(zeta_M)` for `M | N`.
    fn express_in(&self, m: u64) -> Option<Cyclotomic> {
        let n = self.conductor;
        debug_assert!(n % m == 0);
        let phi_m = euler_phi(m) as usize;
        let phi_n = self.coeffs.len();
        // Columns: embeddings of the Q(zeta_M) basis; solve for a rational
        // combination equal to self by Gaussian elimination.
        let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(phi_m);
        for i in 0..phi_m {
            let b = Cyclotomic {
                conductor: m,
                coeffs: {
                    let mut v = vec![Rational::zero(); phi_m];
                    v[i] = Rational::one();
                    v
                },
            };
            cols.push(b.embed(n).coeffs);
        }
        // Augmented system: phi_n equations, phi_m unknowns.
        let mut a: Vec<Vec<Rational>> = (0..phi_n)
            .map(|r| {
                let mut row: Vec<Rational> = cols.iter().map(|c| c[r].clone()).collect();
                row.push(self.coeffs[r].clone());
                row
            })
            .collect();
        let rows = phi_n;
        let colcount = phi_m + 1;
        let mut piv_rows = Vec::new();
        let mut r0 = 0;
        for c in 0..phi_m {
            let Some(p) = (r0..rows).find(|&r| !a[r][c].is_zero()) else {
                piv_rows.push(None);
                continue;
            };
            a.swap(r0, p);
            let inv = a[r0][c].recip();
            for cc in c..colcount {
                let t = &a[r0][cc] * &inv;
                a[r0][cc] = t;
            }
            for r in 0..rows {
                if r != r0 && !a[r][c].is_zero() {
                    let f = a[r][c].clone();
                    for cc in c..colcount {
                        let t = &a[r0][cc] * &f;
                        a[r][cc] -= t;
                    }
                }
            }
            piv_rows.push(Some(r0));
            r0 += 1;
        }
        // Consistency: all non-pivot rows must have zero RHS.
        for r in r0..rows {
            if !a[r][phi_m].is_zero() {
                return None;
            }
        }
        let mut sol = vec![Rational::zero(); phi_m];
        for (c, pr) in piv_rows.iter().enumerate() {
            if let Some(r) = pr {
                sol[c] = a[*r][phi_m].clone();
            }
        }
        Some(Cyclotomic {
            conductor: m,
            coeffs: sol,
        })
    }

    /// Floating-point image under `zeta_N -> exp(2*pi*i/N)`; display only.
    pub fn to_complex_f64(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let x = rational_to_f64(c);
            let t = 2.0 * std::f64::consts::PI * (i as f64) / n;
            re += x * t.cos();
            im += x * t.sin();
        }
        (re, im)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.eq_value(other)
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    /// GAP-style positional notation: sums of `c*E(N)^k` terms after descent.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.descend();
        if let Some(r) = d.as_rational() {
            return write!(f, "{}", format_rational(&r));
        }
        let n = d.conductor;
        let mut first = true;
        for (i, c) in d.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{sign}")?;
            }
            let base = if i == 1 {
                format!("E({n})")
            } else {
                format!("E({n})^{i}")
            };
            if i == 0 {
                write!(f, "{}", format_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{base}")?;
            } else {
                write!(f, "{}*{}", format_rational(&mag), base)?;
            }
        }
        Ok(())
    }
}

// Serialization: {"conductor": N, "coeffs": ["p/q", ...]}.
#[derive(Serialize, Deserialize)]
struct CycRepr {
    conductor: u64,
    coeffs: Vec<String>,
}

impl Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycRepr {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(format_rational).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = CycRepr::deserialize(d)?;
        let phi = euler_phi(repr.conductor) as usize;
        if repr.coeffs.len() != phi {
            return Err(serde::de::Error::custom(format!(
                "expected {} coefficients for conductor {}",
                phi, repr.conductor
            )));
        }
        let mut coeffs = Vec::with_capacity(phi);
        for c in &repr.coeffs {
            coeffs.push(
                parse_rational(c)
                    .ok_or_else(|| serde::de::Error::custom(format!("bad rational '{c}'")))?,
            );
        }
        Ok(Cyclotomic {
            conductor: repr.conductor,
            coeffs,
        })
    }
}

// ---------------------------------------------------------------------------
// Sparse root-of-unity combinations.
// ---------------------------------------------------------------------------

/// A value presented as `sum r_i * zeta_N^(e_i)`.  Character machinery keeps
/// this form alongside the reduced one because products of such sums (inner
/// products, norms) collapse to exponent bookkeeping, with a single basis
/// reduction at the very end.
#[derive(Clone, Debug)]
pub struct RootCombo {
    pub conductor: u64,
    pub terms: Vec<(u64, Rational)>,
}

impl RootCombo {
    pub fn zero(conductor: u64) -> Self {
        RootCombo {
            conductor,
            terms: Vec::new(),
        }
    }

    pub fn constant(conductor: u64, r: Rational) -> Self {
        RootCombo {
            conductor,
            terms: if r.is_zero() { vec![] } else { vec![(0, r)] },
        }
    }

    pub fn single(conductor: u64, e: i64, r: Rational) -> Self {
        let e = e.rem_euclid(conductor as i64) as u64;
        RootCombo {
            conductor,
            terms: if r.is_zero() { vec![] } else { vec![(e, r)] },
        }
    }

    pub fn push(&mut self, e: i64, r: Rational) {
        if !r.is_zero() {
            self.terms.push((e.rem_euclid(self.conductor as i64) as u64, r));
        }
    }

    pub fn to_cyclotomic(&self) -> Cyclotomic {
        let terms: Vec<(i64, Rational)> =
            self.terms.iter().map(|(e, r)| (*e as i64, r.clone())).collect();
        Cyclotomic::from_powers(self.conductor, &terms)
    }

    pub fn embed(&self, m: u64) -> RootCombo {
        assert!(m % self.conductor == 0);
        let step = m / self.conductor;
        RootCombo {
            conductor: m,
            terms: self.terms.iter().map(|(e, r)| (e * step, r.clone())).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> RootCombo {
        RootCombo {
            conductor: self.conductor,
            terms: self.terms.iter().map(|(e, c)| (*e, c * r)).collect(),
        }
    }
}

/// Accumulates `sum_i w_i * a_i * conj(b_i)` over paired combos, reducing
/// once.  All combos must share the same conductor.
pub fn hermitian_sum(
    conductor: u64,
    triples: impl Iterator<Item = (Rational, RootCombo, RootCombo)>,
) -> Cyclotomic {
    let n = conductor as i64;
    let mut acc: Vec<Rational> = vec![Rational::zero(); conductor as usize];
    for (w, a, b) in triples {
        assert_eq!(a.conductor, conductor);
        assert_eq!(b.conductor, conductor);
        for (ea, ra) in &a.terms {
            for (eb, rb) in &b.terms {
                let e = ((*ea as i64) - (*eb as i64)).rem_euclid(n) as usize;
                acc[e] += &w * ra * rb;
            }
        }
    }
    let terms: Vec<(i64, Rational)> = acc
        .into_iter()
        .enumerate()
        .filter(|(_, r)| !r.is_zero())
        .map(|(e, r)| (e as i64, r))
        .collect();
    Cyclotomic::from_powers(conductor, &terms)
}

/// The quadratic irrationality `sqrt(5)` as `zeta_5 - zeta_5^2 - zeta_5^3 + zeta_5^4`.
pub fn sqrt5() -> Cyclotomic {
    Cyclotomic::from_powers(
        5,
        &[
            (1, Rational::one()),
            (2, -Rational::one()),
            (3, -Rational::one()),
            (4, Rational::one()),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_i64};

    #[test]
    fn identity_and_small_roots() {
        assert_eq!(Cyclotomic::root_of_unity(1, 0), Cyclotomic::one());
        // i + (-i) = 0
        let i = Cyclotomic::root_of_unity(4, 1);
        let mi = Cyclotomic::root_of_unity(4, 3);
        assert!(i.add(&mi).is_zero());
        // zeta_3^2 = -1 - zeta_3 in power-basis coordinates
        let z32 = Cyclotomic::root_of_unity(3, 2);
        assert_eq!(z32.coeffs(), &[rat_i64(-1), rat_i64(-1)]);
    }

    #[test]
    fn same_complex_number_across_conductors() {
        let z8sq = Cyclotomic::root_of_unity(8, 1).mul(&Cyclotomic::root_of_unity(8, 1));
        let z4 = Cyclotomic::root_of_unity(4, 1);
        assert_eq!(z8sq, z4);
    }

    #[test]
    fn product_expansion_in_q_zeta5() {
        // (1 + zeta5)(1 + zeta5^4) = 2 + zeta5 + zeta5^4
        let one = Cyclotomic::one();
        let a = one.add(&Cyclotomic::root_of_unity(5, 1));
        let b = one.add(&Cyclotomic::root_of_unity(5, 4));
        let expect = Cyclotomic::from_powers(
            5,
            &[(0, rat_i64(2)), (1, rat_i64(1)), (4, rat_i64(1))],
        );
        assert_eq!(a.mul(&b), expect);
    }

    #[test]
    fn sum_of_all_sixth_roots_vanishes() {
        let mut s = Cyclotomic::zero();
        for k in 0..6 {
            s = s.add(&Cyclotomic::root_of_unity(6, k));
        }
        assert!(s.is_zero());
    }

    #[test]
    fn conjugation() {
        let z8 = Cyclotomic::root_of_unity(8, 1);
        assert_eq!(z8.conjugate(), Cyclotomic::root_of_unity(8, 7));
        let r = Cyclotomic::from_rational(rat(3, 7));
        assert_eq!(r.conjugate(), r);
        let v = Cyclotomic::root_of_unity(5, 1).add(&Cyclotomic::root_of_unity(5, 2));
        let w = Cyclotomic::root_of_unity(5, 3).add(&Cyclotomic::root_of_unity(5, 4));
        assert_eq!(v.conjugate(), w);
    }

    #[test]
    fn abs_squares() {
        for k in 0..7 {
            assert_eq!(Cyclotomic::root_of_unity(7, k).abs_square(), Cyclotomic::one());
        }
        // |1 + i|^2 = 2
        let v = Cyclotomic::one().add(&Cyclotomic::root_of_unity(4, 1));
        assert_eq!(v.abs_square(), Cyclotomic::from_integer(2));
        // |zeta5 + zeta5^4|^2 = (3 - sqrt5)/2, float image 0.3819...
        let v = Cyclotomic::root_of_unity(5, 1).add(&Cyclotomic::root_of_unity(5, 4));
        let expect = Cyclotomic::from_integer(3).sub(&sqrt5()).scale(&rat(1, 2));
        assert_eq!(v.abs_square(), expect);
        let (re, im) = v.abs_square().to_complex_f64();
        assert!((re - 0.381966).abs() < 1e-5 && im.abs() < 1e-9);
    }

    #[test]
    fn rationality() {
        let v = Cyclotomic::root_of_unity(4, 1).add(&Cyclotomic::root_of_unity(4, 3));
        assert_eq!(v.as_rational(), Some(Rational::zero()));
        assert_eq!(Cyclotomic::root_of_unity(3, 1).as_rational(), None);
        let mut s = Cyclotomic::zero();
        for k in 1..5 {
            s = s.add(&Cyclotomic::root_of_unity(5, k));
        }
        assert_eq!(s.as_rational(), Some(rat_i64(-1)));
    }

    #[test]
    fn descent_finds_minimal_conductor() {
        let v = Cyclotomic::root_of_unity(12, 3); // = i
        let d = v.descend();
        assert_eq!(d.conductor(), 4);
        assert_eq!(d, Cyclotomic::root_of_unity(4, 1));
        assert_eq!(Cyclotomic::root_of_unity(12, 4).descend().conductor(), 3);
    }

    #[test]
    fn display_notation() {
        assert_eq!(Cyclotomic::root_of_unity(8, 1).to_string(), "E(8)");
        // zeta5 + zeta5^4 rendered in reduced power-basis coordinates
        let v = Cyclotomic::root_of_unity(5, 1).add(&Cyclotomic::root_of_unity(5, 4));
        assert_eq!(v.to_string(), "-1-E(5)^2-E(5)^3");
        assert_eq!(Cyclotomic::from_rational(rat(-1, 2)).to_string(), "-1/2");
    }

    #[test]
    fn serde_round_trip() {
        let v = Cyclotomic::root_of_unity(8, 3).scale(&rat(2, 3));
        let s = serde_json::to_string(&v).unwrap();
        let back: Cyclotomic = serde_json::from_str(&s).unwrap();
        assert_eq!(v, back);
    }

    #[test]
    fn hermitian_sum_matches_direct_product() {
        // w * a * conj(b) with a = 1 + zeta8, b = zeta8^3 - 2
        let a = RootCombo {
            conductor: 8,
            terms: vec![(0, rat_i64(1)), (1, rat_i64(1))],
        };
        let b = RootCombo {
            conductor: 8,
            terms: vec![(3, rat_i64(1)), (0, rat_i64(-2))],
        };
        let got = hermitian_sum(8, std::iter::once((rat(1, 2), a.clone(), b.clone())));
        let direct = a
            .to_cyclotomic()
            .mul(&b.to_cyclotomic().conjugate())
            .scale(&rat(1, 2));
        assert_eq!(got, direct);
    }

    #[test]
    fn gauss_sum_square_in_q_zeta5() {
        assert_eq!(sqrt5().mul(&sqrt5()), Cyclotomic::from_integer(5));
        let (re, im) = sqrt5().to_complex_f64();
        assert!((re - 5f64.sqrt()).abs() < 1e-9 && im.abs() < 1e-9);
    }
}
