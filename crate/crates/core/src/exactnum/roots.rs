//! Rational roots of polynomials over Q without integer factorization.
//!
//! The squarefree part is taken, its real roots are isolated with a Sturm
//! chain on dyadic points, and each isolating interval is bisected until it is
//! narrower than `1/L^2`, where `L` is the leading coefficient of the
//! primitive integer form. A rational root `p/q` of that form has `q | L`, and
//! two distinct fractions with denominators at most `L` are at least `1/L^2`
//! apart, so the simplest fraction in the final interval is the only possible
//! rational root. It is then confirmed by exact evaluation. Signs are taken
//! in integer arithmetic on `2^(e d) p(m / 2^e)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{Poly, Rat};

/// All distinct rational roots of `sum coeffs[i] x^i`, ascending.
pub fn rational_roots(coeffs: &[Rat]) -> Result<Vec<Rat>> {
    let p = Poly::new(coeffs.to_vec());
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut roots = Vec::new();
    let mut p = p;
    if p.coeff(0).is_zero() {
        roots.push(Rat::zero());
        let skip = p.coeffs().iter().take_while(|c| c.is_zero()).count();
        p = Poly::new(p.coeffs()[skip..].to_vec());
    }
    collect_nonzero_roots(p, &mut roots);
    roots.sort();
    roots.dedup();
    Ok(roots)
}

fn collect_nonzero_roots(p: Poly, out: &mut Vec<Rat>) {
    if p.degree().unwrap_or(0) == 0 {
        return;
    }
    let g = p.gcd(&p.derivative());
    let sf = if g.degree() == Some(0) {
        p
    } else {
        p.div_rem(&g).expect("gcd is nonzero").0
    };
    let sf = primitive_integer_form(&sf);
    if sf.degree() == Some(1) {
        let root = (-sf.coeff(0)).checked_div(&sf.coeff(1)).expect("degree one");
        out.push(root);
        return;
    }
    let ints = IntPoly::from_integer_poly(&sf);
    let sturm: Vec<IntPoly> = sturm_chain(&sf)
        .iter()
        .map(|q| IntPoly::from_integer_poly(&primitive_integer_form(q)))
        .collect();
    let k = cauchy_bound_log2(&sf);

    // Intervals (lo, hi] of dyadic endpoints.
    let mut stack = vec![(Dyadic::int(-(BigInt::one() << k)), Dyadic::int(BigInt::one() << k))];
    while let Some((lo, hi)) = stack.pop() {
        let count = sign_changes(&sturm, &lo) - sign_changes(&sturm, &hi);
        if count == 0 {
            continue;
        }
        let mid = Dyadic::midpoint(&lo, &hi);
        if ints.sign_at(&mid) == 0 {
            // Deflate and start again on the quotient so every split point
            // used below is a non-root.
            let root = mid.to_rat();
            let (quot, _) = sf.div_rem(&Poly::linear_root(&root)).expect("linear divisor");
            out.push(root);
            collect_nonzero_roots(quot, out);
            return;
        }
        if count == 1 {
            if let Some(root) = refine_simple_root(&ints, lo, hi) {
                out.push(root);
            }
        } else {
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
    }
}

/// `m / 2^e`.
#[derive(Clone, Debug)]
struct Dyadic {
    m: BigInt,
    e: usize,
}

impl Dyadic {
    fn int(m: BigInt) -> Dyadic {
        Dyadic { m, e: 0 }
    }

    fn rescale(&self, e: usize) -> BigInt {
        &self.m << (e - self.e)
    }

    fn midpoint(a: &Dyadic, b: &Dyadic) -> Dyadic {
        let e = a.e.max(b.e) + 1;
        Dyadic {
            m: (a.rescale(e - 1) + b.rescale(e - 1)),
            e,
        }
    }

    fn to_rat(&self) -> Rat {
        Rat::new(self.m.clone(), BigInt::one() << self.e).expect("nonzero")
    }
}

fn sign(n: &BigInt) -> i32 {
    match n.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// Integer coefficients, ascending.
struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    fn from_integer_poly(p: &Poly) -> IntPoly {
        IntPoly {
            coeffs: p.coeffs().iter().map(|c| c.numer().clone()).collect(),
        }
    }

    fn lead(&self) -> &BigInt {
        self.coeffs.last().expect("nonzero polynomial")
    }

    /// Sign of `p(m / 2^e)`, from `2^(e d) p(m / 2^e)` in integers.
    fn sign_at(&self, x: &Dyadic) -> i32 {
        let d = self.coeffs.len() - 1;
        let mut acc = self.coeffs[d].clone();
        for i in (0..d).rev() {
            acc = acc * &x.m + (&self.coeffs[i] << (x.e * (d - i)));
        }
        sign(&acc)
    }

    fn sign_at_rat(&self, x: &Rat) -> i32 {
        // q^d p(p'/q) with q > 0
        let d = self.coeffs.len() - 1;
        let (num, den) = (x.numer(), x.denom());
        let mut acc = self.coeffs[d].clone();
        let mut den_pow = BigInt::one();
        for i in (0..d).rev() {
            den_pow *= den;
            acc = acc * num + &self.coeffs[i] * &den_pow;
        }
        sign(&acc)
    }
}

/// Bisects `(lo, hi]`, which holds exactly one simple root, returning the root
/// if it is rational.
///
/// A rational root `p/q` in lowest terms has `q | lead` and `p | constant`.
/// The simplest fraction in the interval is tried at doubling step counts and
/// once the width drops below `1/lead^2`, where it is the only candidate.
fn refine_simple_root(p: &IntPoly, mut lo: Dyadic, mut hi: Dyadic) -> Option<Rat> {
    let lead = p.lead().abs();
    let constant = p.coeffs[0].abs();
    let lead_sq = &lead * &lead;
    if p.sign_at(&hi) == 0 {
        return Some(hi.to_rat());
    }
    let lo_sign = p.sign_at(&lo);
    let admissible = |c: &Rat| {
        let (num, den) = (c.numer().abs(), c.denom());
        !num.is_zero() && (&lead % den).is_zero() && (&constant % &num).is_zero()
    };
    let mut steps = 0u64;
    let mut checkpoint = 16u64;
    loop {
        let e = lo.e.max(hi.e);
        let narrow = (hi.rescale(e) - lo.rescale(e)) * &lead_sq < (BigInt::one() << e);
        if narrow || steps == checkpoint {
            let candidate = simplest_in(&lo.to_rat(), &hi.to_rat());
            if admissible(&candidate) && p.sign_at_rat(&candidate) == 0 {
                return Some(candidate);
            }
            if narrow {
                return None;
            }
            checkpoint *= 2;
        }
        let mid = Dyadic::midpoint(&lo, &hi);
        let s = p.sign_at(&mid);
        if s == 0 {
            return Some(mid.to_rat());
        }
        if s == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
        steps += 1;
    }
}

/// Fraction with the smallest denominator in the closed interval `[lo, hi]`.
fn simplest_in(lo: &Rat, hi: &Rat) -> Rat {
    debug_assert!(lo <= hi);
    let c = Rat::from_int(lo.ceil());
    if &c <= hi {
        return c;
    }
    let n = Rat::from_int(lo.floor());
    // lo - n and hi - n lie strictly inside (0, 1)
    let a = (hi - &n).recip().expect("positive");
    let b = (lo - &n).recip().expect("positive");
    n + simplest_in(&a, &b).recip().expect("at least one")
}

fn primitive_integer_form(p: &Poly) -> Poly {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    Poly::new(ints.into_iter().map(|c| Rat::from_int(c / &content)).collect())
}

/// `k` with every root strictly inside `(-2^k, 2^k)` (Cauchy's bound).
fn cauchy_bound_log2(p: &Poly) -> usize {
    let lead = p.leading().abs();
    let deg = p.degree().unwrap_or(0);
    let max = p.coeffs()[..deg]
        .iter()
        .map(|c| c.abs().checked_div(&lead).expect("nonzero lead"))
        .max()
        .unwrap_or_default();
    let bound = (max + 1).ceil();
    bound.bits() as usize
}

fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        let (_, rem) = chain[n - 2].div_rem(&chain[n - 1]).expect("nonzero");
        if rem.is_zero() {
            break;
        }
        chain.push(-&rem);
    }
    chain
}

fn sign_changes(chain: &[IntPoly], x: &Dyadic) -> usize {
    let signs: Vec<i32> = chain
        .iter()
        .map(|p| p.sign_at(x))
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}
