//! Root extraction for polynomials with rational coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Poly, Scalar};
use crate::error::{Error, Result};

/// Integer roots (with multiplicity, descending) and the integer-root-free cofactor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerRoots {
    pub roots: Vec<BigInt>,
    /// Monic quotient left after dividing out every `(x − k)`.
    pub quotient: Poly,
}

impl IntegerRoots {
    /// True when the polynomial splits into integer linear factors.
    pub fn is_complete(&self) -> bool {
        self.quotient.is_constant()
    }
}

/// Divides out `(x − k)` for every integer root `k`.
///
/// Candidates are the divisors of the trailing nonzero coefficient of the
/// primitive integer form, restricted to Fujiwara's root bound.
pub fn integer_roots(p: &Poly) -> Result<IntegerRoots> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("integer root extraction"));
    }
    let mut ints = p.primitive_integer();
    let mut roots = Vec::new();

    let zeros = ints.iter().take_while(|c| c.is_zero()).count();
    ints.drain(..zeros);
    roots.extend(std::iter::repeat_n(BigInt::zero(), zeros));

    if ints.len() > 1 {
        let bound = fujiwara_bound(&ints);
        let mut k = BigInt::one();
        while k <= bound && ints.len() > 1 {
            if ints[0].is_multiple_of(&k) {
                for cand in [k.clone(), -k.clone()] {
                    while ints.len() > 1 {
                        match synthetic_division(&ints, &cand) {
                            Some(q) => {
                                roots.push(cand.clone());
                                ints = q;
                            }
                            None => break,
                        }
                    }
                }
            }
            k += 1;
        }
    }
    roots.sort_by(|a, b| b.cmp(a));
    let quotient = Poly::new(ints.into_iter().map(Scalar::from_integer).collect()).monic();
    Ok(IntegerRoots { roots, quotient })
}

/// Upper bound on root moduli: `2·max_i |a_{n−i}/a_n|^{1/i}`, rounded up.
fn fujiwara_bound(ints: &[BigInt]) -> BigInt {
    let n = ints.len() - 1;
    let lead = log2_abs(&ints[n]);
    let mut best = f64::NEG_INFINITY;
    for i in 1..=n {
        let c = &ints[n - i];
        if c.is_zero() {
            continue;
        }
        let mut v = (log2_abs(c) - lead) / i as f64;
        if i == n {
            // Fujiwara halves the constant-term ratio.
            v -= 1.0 / i as f64;
        }
        best = best.max(v);
    }
    if best == f64::NEG_INFINITY {
        return BigInt::zero();
    }
    // Pad by one bit against floating-point rounding in the logarithms.
    let bits = best + 2.0;
    if bits < 60.0 {
        BigInt::from(2f64.powf(bits).ceil() as u64)
    } else {
        BigInt::one() << (bits.ceil() as u64)
    }
}

fn log2_abs(c: &BigInt) -> f64 {
    let bits = c.bits();
    if bits <= 60 {
        c.abs().to_f64().expect("small").log2()
    } else {
        let shift = bits - 53;
        (c.abs() >> shift).to_f64().expect("small").log2() + shift as f64
    }
}

/// Quotient of `ints / (x − k)` when `k` is a root.
fn synthetic_division(ints: &[BigInt], k: &BigInt) -> Option<Vec<BigInt>> {
    let n = ints.len() - 1;
    let mut q = vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    for i in (1..=n).rev() {
        carry = &ints[i] + carry * k;
        q[i - 1] = carry.clone();
    }
    let rem = &ints[0] + carry * k;
    rem.is_zero().then_some(q)
}

/// Yun's squarefree decomposition: `p = c · ∏ f_i^i` with the `f_i` monic,
/// squarefree and pairwise coprime. Returns `(f_i, i)` for non-constant `f_i`.
pub fn squarefree_decomposition(p: &Poly) -> Result<Vec<(Poly, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("squarefree decomposition"));
    }
    let p = p.monic();
    let mut out = Vec::new();
    if p.is_constant() {
        return Ok(out);
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp)?;
    let mut b = p.div_exact(&a0)?;
    let mut c = dp.div_exact(&a0)?;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d)?;
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        b = b.div_exact(&a)?;
        c = d.div_exact(&a)?;
        d = &c - &b.derivative();
        i += 1;
    }
    Ok(out)
}

/// Real roots of `p`, with multiplicity, ascending.
///
/// Each squarefree factor is isolated with a Sturm sequence over exact
/// dyadic rationals and bisected until the bracket is narrower than `2^-52`
/// relative to the root bound.
pub fn real_roots(p: &Poly) -> Result<Vec<f64>> {
    let mut out = Vec::new();
    for (factor, mult) in squarefree_decomposition(p)? {
        for r in squarefree_real_roots(&factor)? {
            out.extend(std::iter::repeat_n(r, mult));
        }
    }
    out.sort_by(f64::total_cmp);
    Ok(out)
}

fn sturm_chain(p: &Poly) -> Result<Vec<Poly>> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1])?;
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    Ok(chain)
}

fn sign_changes(chain: &[Poly], x: &Scalar) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for q in chain {
        let v = q.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

fn squarefree_real_roots(p: &Poly) -> Result<Vec<f64>> {
    let chain = sturm_chain(p)?;
    // Cauchy bound, as a power of two.
    let lead = p.leading().expect("nonzero").abs();
    let max_ratio = p
        .coeffs()
        .iter()
        .map(|c| c.abs() / &lead)
        .fold(Scalar::zero(), |a, b| if b > a { b } else { a });
    let mut bound = Scalar::one();
    while bound <= &max_ratio + Scalar::one() {
        bound *= Scalar::from_integer(2.into());
    }
    let width_floor = &bound / Scalar::from_integer(BigInt::one() << 60u32);
    let mut roots = Vec::new();
    let mut stack = vec![(-bound.clone(), bound.clone())];
    let count = |a: &Scalar, b: &Scalar| sign_changes(&chain, a) - sign_changes(&chain, b);
    while let Some((a, b)) = stack.pop() {
        // Roots in (a, b].
        let k = count(&a, &b);
        if k == 0 {
            continue;
        }
        if k == 1 || &b - &a < width_floor {
            roots.push(refine(p, &chain, a, b));
            continue;
        }
        let mid = (&a + &b) / Scalar::from_integer(2.into());
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    Ok(roots)
}

fn refine(p: &Poly, chain: &[Poly], mut a: Scalar, mut b: Scalar) -> f64 {
    let two = Scalar::from_integer(2.into());
    for _ in 0..80 {
        if p.eval(&b).is_zero() {
            return b.to_f64().unwrap_or(f64::NAN);
        }
        let mid = (&a + &b) / &two;
        if sign_changes(chain, &a) - sign_changes(chain, &mid) > 0 {
            b = mid;
        } else {
            a = mid;
        }
    }
    ((a + b) / two).to_f64().unwrap_or(f64::NAN)
}
