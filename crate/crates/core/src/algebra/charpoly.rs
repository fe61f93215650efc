//! Exact characteristic polynomials.
//!
//! Two independent routes are provided. [`charpoly`] clears denominators and
//! works modulo a family of word-sized primes: each image is computed by
//! reduction to upper Hessenberg form, and the integer coefficients are
//! recovered by Chinese remaindering against a Hadamard-type coefficient
//! bound. [`faddeev_leverrier`] runs the classical trace recursion over the
//! rationals and also yields the matrix coefficients of `adj(xI − A)`, which
//! is what [`adjugate_quadratic_form`] needs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{Matrix, Poly, Scalar};
use crate::error::{Error, Result};

/// Monic `det(xI − A)`.
pub fn charpoly(a: &Matrix) -> Result<Poly> {
    let n = a.ensure_square()?;
    if n == 0 {
        return Ok(Poly::one());
    }
    let denom = a
        .entries()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = a
        .entries()
        .iter()
        .map(|c| (c * Scalar::from_integer(denom.clone())).to_integer())
        .collect();
    let int_coeffs = integer_charpoly(&ints, n);
    // det(xI − A) = denom^{-n} · det(denom·x·I − B), so c_k(A) = c_k(B) / denom^{n−k}.
    let mut scale = Scalar::one();
    let d = Scalar::from_integer(denom);
    let mut coeffs = vec![Scalar::zero(); n + 1];
    for k in (0..=n).rev() {
        coeffs[k] = Scalar::from_integer(int_coeffs[k].clone()) / &scale;
        scale *= &d;
    }
    Ok(Poly::new(coeffs))
}

/// Characteristic polynomial coefficients (lowest first) of an integer matrix.
fn integer_charpoly(entries: &[BigInt], n: usize) -> Vec<BigInt> {
    // |c_k| ≤ C(n,k)·∏ (largest k row norms) ≤ 2^n · ∏ max(1, ‖row_i‖).
    let mut bound_bits = n as f64 + 1.0;
    for i in 0..n {
        let sq: BigInt = entries[i * n..(i + 1) * n].iter().map(|c| c * c).sum();
        let bits = sq.bits() as f64 / 2.0 + 1.0;
        bound_bits += bits.max(0.0);
    }
    let mut modulus = BigInt::one();
    let mut residues = vec![BigInt::zero(); n + 1];
    let mut primes = PrimeStream::new();
    while (modulus.bits() as f64) < bound_bits + 2.0 {
        let p = primes.next_prime();
        let image: Vec<u64> = entries
            .iter()
            .map(|c| c.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits"))
            .collect();
        let cp = charpoly_mod_p(image, n, p);
        // Garner step: x ≡ r (mod M), x ≡ c (mod p).
        let m_mod_p = modulus.mod_floor(&BigInt::from(p)).to_u64().expect("fits");
        let m_inv = inv_mod(m_mod_p, p);
        for (r, c) in residues.iter_mut().zip(cp) {
            let r_mod_p = r.mod_floor(&BigInt::from(p)).to_u64().expect("fits");
            let delta = mul_mod(sub_mod(c, r_mod_p, p), m_inv, p);
            *r += &modulus * BigInt::from(delta);
        }
        modulus *= BigInt::from(p);
    }
    let half = &modulus >> 1;
    residues
        .into_iter()
        .map(|r| if r > half { r - &modulus } else { r })
        .collect()
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Descending primes just below 2^62.
struct PrimeStream {
    next: u64,
}

impl PrimeStream {
    fn new() -> Self {
        PrimeStream { next: (1u64 << 62) - 1 }
    }

    fn next_prime(&mut self) -> u64 {
        loop {
            let c = self.next;
            self.next -= 2;
            if is_prime_u64(c) {
                return c;
            }
        }
    }
}

/// Deterministic Miller-Rabin for 64-bit integers.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
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

/// Characteristic polynomial over GF(p) via Hessenberg reduction.
fn charpoly_mod_p(mut h: Vec<u64>, n: usize, p: u64) -> Vec<u64> {
    let at = |i: usize, j: usize| i * n + j;
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| h[at(i, j)] != 0) else {
            continue;
        };
        if piv != j + 1 {
            for c in 0..n {
                h.swap(at(piv, c), at(j + 1, c));
            }
            for r in 0..n {
                h.swap(at(r, piv), at(r, j + 1));
            }
        }
        let inv = inv_mod(h[at(j + 1, j)], p);
        for k in j + 2..n {
            let u = mul_mod(h[at(k, j)], inv, p);
            if u == 0 {
                continue;
            }
            // row_k -= u·row_{j+1}
            for c in 0..n {
                let v = mul_mod(u, h[at(j + 1, c)], p);
                h[at(k, c)] = sub_mod(h[at(k, c)], v, p);
            }
            // col_{j+1} += u·col_k
            for r in 0..n {
                let v = mul_mod(u, h[at(r, k)], p);
                h[at(r, j + 1)] = (h[at(r, j + 1)] + v) % p;
            }
        }
    }
    // p_m = (x − h_mm)·p_{m−1} − Σ_i h_{i,m}·(∏ subdiagonal)·p_{i−1}
    let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    polys.push(vec![1]);
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut cur = vec![0u64; m + 1];
        let diag = h[at(m - 1, m - 1)];
        for (k, &c) in prev.iter().enumerate() {
            cur[k + 1] = (cur[k + 1] + c) % p;
            cur[k] = sub_mod(cur[k], mul_mod(diag, c, p), p);
        }
        let mut t = 1u64;
        for i in (1..m).rev() {
            t = mul_mod(t, h[at(i, i - 1)], p);
            if t == 0 {
                break;
            }
            let coef = mul_mod(t, h[at(i - 1, m - 1)], p);
            if coef == 0 {
                continue;
            }
            for (k, &c) in polys[i - 1].iter().enumerate() {
                cur[k] = sub_mod(cur[k], mul_mod(coef, c, p), p);
            }
        }
        polys.push(cur);
    }
    polys.pop().expect("n ≥ 1")
}

/// Output of the Faddeev–LeVerrier recursion.
#[derive(Debug, Clone)]
pub struct FaddeevLeVerrier {
    /// Monic characteristic polynomial.
    pub charpoly: Poly,
    /// `adj(xI − A) = Σ_k adjugate_terms[k]·x^{n−1−k}`.
    pub adjugate_terms: Vec<Matrix>,
}

/// Runs `M_1 = I`, `c_{n−k} = −tr(A·M_k)/k`, `M_{k+1} = A·M_k + c_{n−k}·I`.
pub fn faddeev_leverrier(a: &Matrix) -> Result<FaddeevLeVerrier> {
    let n = a.ensure_square()?;
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = Scalar::one();
    let mut terms = Vec::with_capacity(n);
    let mut m = Matrix::identity(n);
    for k in 1..=n {
        let am = a.try_mul(&m)?;
        let c = -am.trace() / Scalar::from_integer(BigInt::from(k));
        coeffs[n - k] = c.clone();
        terms.push(m);
        m = am.try_add(&Matrix::identity(n).scale(&c))?;
    }
    Ok(FaddeevLeVerrier {
        charpoly: Poly::new(coeffs),
        adjugate_terms: terms,
    })
}

/// The polynomial `uᵀ·adj(xI − A)·u`, of degree at most `n − 1`.
pub fn adjugate_quadratic_form(a: &Matrix, u: &[Scalar]) -> Result<Poly> {
    let n = a.ensure_square()?;
    if u.len() != n {
        return Err(Error::Dimension(format!(
            "vector of length {} for a {n}x{n} matrix",
            u.len()
        )));
    }
    let fl = faddeev_leverrier(a)?;
    Ok(quadratic_form_from_terms(&fl.adjugate_terms, u))
}

pub(crate) fn quadratic_form_from_terms(terms: &[Matrix], u: &[Scalar]) -> Poly {
    let n = u.len();
    let mut coeffs = vec![Scalar::zero(); n];
    for (k, m) in terms.iter().enumerate() {
        let mut acc = Scalar::zero();
        for i in 0..n {
            if u[i].is_zero() {
                continue;
            }
            let row: Scalar = m
                .row(i)
                .iter()
                .zip(u)
                .map(|(mij, uj)| mij * uj)
                .sum();
            acc += &u[i] * row;
        }
        coeffs[n - 1 - k] = acc;
    }
    Poly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2(sign: i64) -> Matrix {
        Matrix::from_i64(&[&[0, sign], &[sign, 0]])
    }

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&c| Scalar::from_integer(c.into())).collect()
    }

    #[test]
    fn charpoly_examples() {
        assert_eq!(charpoly(&k2(1)).unwrap(), Poly::from_i64(&[-1, 0, 1]));
        let c3 = Matrix::from_i64(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        assert_eq!(charpoly(&c3).unwrap(), Poly::from_i64(&[-2, -3, 0, 1]));
        assert_eq!(charpoly(&Matrix::zeros(3, 3)).unwrap(), Poly::from_i64(&[0, 0, 0, 1]));
        assert!(charpoly(&Matrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn charpoly_of_rational_matrix() {
        // [[1/2, 1], [0, -1/3]] → (x − 1/2)(x + 1/3)
        let a = Matrix::from_fn(2, 2, |i, j| match (i, j) {
            (0, 0) => Scalar::new(1.into(), 2.into()),
            (0, 1) => Scalar::one(),
            (1, 1) => Scalar::new((-1).into(), 3.into()),
            _ => Scalar::zero(),
        });
        let expected = &Poly::linear(Scalar::new(1.into(), 2.into()))
            * &Poly::linear(Scalar::new((-1).into(), 3.into()));
        assert_eq!(charpoly(&a).unwrap(), expected);
        assert_eq!(faddeev_leverrier(&a).unwrap().charpoly, expected);
    }

    #[test]
    fn adjugate_form_examples() {
        assert_eq!(adjugate_quadratic_form(&k2(1), &ints(&[1, 1])).unwrap(), Poly::from_i64(&[2, 2]));
        assert_eq!(adjugate_quadratic_form(&k2(1), &ints(&[1, -1])).unwrap(), Poly::from_i64(&[-2, 2]));
        assert_eq!(
            adjugate_quadratic_form(&Matrix::zeros(1, 1), &ints(&[1])).unwrap(),
            Poly::one()
        );
        assert!(adjugate_quadratic_form(&k2(1), &ints(&[1])).is_err());
    }

    #[test]
    fn miller_rabin_small_cases() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(!is_prime_u64(3215031751));
    }

    #[test]
    fn large_integer_matrix_matches_faddeev() {
        let n = 12;
        let a = Matrix::from_fn(n, n, |i, j| {
            Scalar::from_integer(BigInt::from(((i * 7 + j * 13) % 11) as i64 - 5))
        });
        let fast = charpoly(&a).unwrap();
        let slow = faddeev_leverrier(&a).unwrap().charpoly;
        assert_eq!(fast, slow);
    }
}
