//! Height-bounded point search on `r^2 = rhs(t)` and group-law generation of
//! further points from a few seeds.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::{int_sqrt, Poly, Rat};
use crate::wmodel::{EPoint, WeierstrassCurve};

/// Environment variable capping the number of search threads.
pub const THREADS_ENV: &str = "DQ_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Bound on `|m|` and `n` for abscissae `m/n`.
    pub height: u64,
    /// Generated points are `m P1 + n P2` with `|m|, |n| <= budget`.
    pub budget: u32,
}

impl SearchConfig {
    pub fn new(height: u64, budget: u32) -> Result<SearchConfig> {
        if height == 0 {
            return Err(Error::Invalid("search height must be at least 1".into()));
        }
        Ok(SearchConfig { height, budget })
    }
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            height: 50,
            budget: 2,
        }
    }
}

/// Runs `f` on a pool sized by `DQ_THREADS` when it is set, otherwise on the
/// global pool.
pub(crate) fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let threads = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0);
    match threads.and_then(|n| rayon::ThreadPoolBuilder::new().num_threads(n).build().ok()) {
        Some(pool) => pool.install(f),
        None => f(),
    }
}

/// `rhs` scaled to integer coefficients: `rhs = poly / scale`.
struct IntegerForm {
    coeffs: Vec<BigInt>,
    scale: BigInt,
    degree: usize,
}

impl IntegerForm {
    fn new(rhs: &Poly) -> IntegerForm {
        let scale = rhs
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let coeffs = rhs
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&scale / c.denom()))
            .collect();
        IntegerForm {
            coeffs,
            scale,
            degree: rhs.degree().unwrap_or(0),
        }
    }

    /// Whether `rhs(m/n)` is a rational square. With `G(m, n) = n^deg rhs(m/n)
    /// * scale`, the value is `G / (scale n^deg)`, a square exactly when
    /// `G * scale * n^(deg mod 2)` is.
    fn is_square_at(&self, m: &BigInt, n: &BigInt) -> bool {
        let mut g = BigInt::zero();
        let mut m_pow = BigInt::one();
        let n_pows: Vec<BigInt> = (0..=self.degree).map(|k| n.pow(k as u32)).collect();
        for (i, c) in self.coeffs.iter().enumerate() {
            g += c * &m_pow * &n_pows[self.degree - i];
            m_pow *= m;
        }
        let mut w = g * &self.scale;
        if self.degree % 2 == 1 {
            w *= n;
        }
        if w.is_negative() {
            return false;
        }
        int_sqrt(&w).map(|(_, exact)| exact).unwrap_or(false)
    }
}

/// Every `(t, r)` with `t = m/n` in lowest terms, `|m|, n <= height`, and
/// `r >= 0`, `r^2 = rhs(t)`. Sorted by `(n, m)`.
pub fn search_rhs(rhs: &Poly, cfg: &SearchConfig) -> Result<Vec<(Rat, Rat)>> {
    if rhs.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let form = IntegerForm::new(rhs);
    let h = cfg.height as i64;
    let per_den: Vec<Vec<(Rat, Rat)>> = with_pool(|| {
        (1..=h)
            .into_par_iter()
            .map(|n| {
                let nb = BigInt::from(n);
                (-h..=h)
                    .filter(|&m| m.gcd(&n) == 1)
                    .filter(|&m| form.is_square_at(&BigInt::from(m), &nb))
                    .map(|m| {
                        let t = Rat::new(m, n).expect("positive denominator");
                        let r = rhs.eval(&t).sqrt().expect("square by construction");
                        (t, r)
                    })
                    .collect()
            })
            .collect()
    });
    Ok(per_den.into_iter().flatten().collect())
}

/// `Y^2 = X^3 + c2 X^2 + c1 c3 X + c0 c3^2`, reached from `r^2 = c3 t^3 + c2
/// t^2 + c1 t + c0` by `(X, Y) = (c3 t, c3 r)`.
#[derive(Clone, Debug)]
pub struct CubicModel {
    rhs: Poly,
    c3: Rat,
    curve: WeierstrassCurve,
}

impl CubicModel {
    pub fn rhs(&self) -> &Poly {
        &self.rhs
    }

    pub fn curve(&self) -> &WeierstrassCurve {
        &self.curve
    }

    pub fn to_curve(&self, t: &Rat, r: &Rat) -> Result<EPoint> {
        if r.square() != self.rhs.eval(t) {
            return Err(Error::NotOnCurve(format!("{t},{r}")));
        }
        Ok(EPoint::affine(&self.c3 * t, &self.c3 * r))
    }

    /// `None` for the identity, which has no affine preimage.
    pub fn from_curve(&self, p: &EPoint) -> Result<Option<(Rat, Rat)>> {
        if !self.curve.contains(p) {
            return Err(Error::NotOnCurve(p.to_string()));
        }
        let EPoint::Affine { x, y } = p else {
            return Ok(None);
        };
        let t = x.checked_div(&self.c3)?;
        let r = y.checked_div(&self.c3)?;
        debug_assert_eq!(r.square(), self.rhs.eval(&t));
        Ok(Some((t, r)))
    }
}

pub fn cubic_to_weierstrass(rhs: &Poly) -> Result<CubicModel> {
    if rhs.degree() != Some(3) {
        return Err(Error::Invalid(format!(
            "expected a cubic right-hand side, got degree {:?}",
            rhs.degree()
        )));
    }
    let [c0, c1, c2, c3] = [0, 1, 2, 3].map(|i| rhs.coeff(i));
    let curve = WeierstrassCurve::new(
        Rat::zero(),
        c2,
        Rat::zero(),
        &c1 * &c3,
        &c0 * c3.square(),
    )?;
    Ok(CubicModel {
        rhs: rhs.clone(),
        c3,
        curve,
    })
}

/// A generated point `m G1 + n G2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generated {
    pub m: i64,
    pub n: i64,
    pub point: EPoint,
}

/// Picks at most two generators from `seeds` (non-torsion ones first, no
/// identity, no point equal to another's negative) and returns them together
/// with every distinct non-identity `m G1 + n G2`, `|m|, |n| <= budget`, in
/// order of `(max(|m|, |n|), m, n)`.
pub fn generate(
    e: &WeierstrassCurve,
    seeds: &[EPoint],
    cfg: &SearchConfig,
) -> Result<(Vec<EPoint>, Vec<Generated>)> {
    for s in seeds {
        if !e.contains(s) {
            return Err(Error::NotOnCurve(s.to_string()));
        }
    }
    let mut free = Vec::new();
    let mut torsion = Vec::new();
    for s in seeds.iter().filter(|s| !s.is_identity()) {
        if e.torsion_order(s)?.is_none() {
            free.push(s.clone());
        } else {
            torsion.push(s.clone());
        }
    }
    let mut gens: Vec<EPoint> = Vec::new();
    for s in free.into_iter().chain(torsion) {
        if gens.len() == 2 {
            break;
        }
        if !gens.iter().any(|g| *g == s || e.neg(g) == s) {
            gens.push(s);
        }
    }
    let b = cfg.budget as i64;
    let multiples = |g: Option<&EPoint>| -> Result<Vec<EPoint>> {
        (-b..=b)
            .map(|k| match g {
                Some(g) => e.mul(k, g),
                None => Ok(EPoint::Identity),
            })
            .collect()
    };
    let m1 = multiples(gens.first())?;
    let m2 = multiples(gens.get(1))?;
    let n_range = if gens.len() == 2 { b } else { 0 };

    let mut coords: Vec<(i64, i64)> = (-b..=b)
        .flat_map(|m| (-n_range..=n_range).map(move |n| (m, n)))
        .collect();
    coords.sort_by_key(|&(m, n)| (m.abs().max(n.abs()), m, n));

    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (m, n) in coords {
        let p = e.add(&m1[(m + b) as usize], &m2[(n + b) as usize])?;
        if p.is_identity() || !seen.insert(p.clone()) {
            continue;
        }
        debug_assert!(e.contains(&p));
        out.push(Generated { m, n, point: p });
    }
    Ok((gens, out))
}
