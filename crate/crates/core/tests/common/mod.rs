#![allow(dead_code)]

use dqtuples::descent;
use dqtuples::ptsearch::{search_rhs, SearchConfig};
use dqtuples::qmodel::{LinearFactor, QPoint, QuarticCurve, QuarticGroup};
use dqtuples::Rat;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn r(s: &str) -> Rat {
    s.parse().unwrap()
}

pub fn nonzero_int(rng: &mut impl Rng, bound: i64) -> i64 {
    loop {
        let n = rng.gen_range(-bound..=bound);
        if n != 0 {
            return n;
        }
    }
}

pub fn small_rat(rng: &mut impl Rng, num: i64, den: i64) -> Rat {
    Rat::new(rng.gen_range(-num..=num), rng.gen_range(1..=den)).unwrap()
}

pub fn nonzero_rat(rng: &mut impl Rng, num: i64, den: i64) -> Rat {
    Rat::new(nonzero_int(rng, num), rng.gen_range(1..=den)).unwrap()
}

/// A random `y^2 = prod (a_i x + b_i)` whose constant term is a nonzero
/// square, with base point `(0, sqrt(prod b_i))`.
pub fn square_constant_quartic(rng: &mut impl Rng) -> (QuarticCurve, QPoint) {
    loop {
        let a: Vec<i64> = (0..4).map(|_| nonzero_int(rng, 7)).collect();
        let b: Vec<i64> = (0..3).map(|_| nonzero_int(rng, 6)).collect();
        let s = [1, 1, 2, 3][rng.gen_range(0..4)];
        let b4 = b[0] * b[1] * b[2] * s * s;
        let fs = [
            (a[0], b[0]),
            (a[1], b[1]),
            (a[2], b[2]),
            (a[3], b4),
        ]
        .map(|(a, b)| LinearFactor::new(Rat::from(a), Rat::from(b)).unwrap());
        if let Ok(c) = QuarticCurve::from_factors(fs) {
            let root = c.constant().sqrt().expect("square by construction");
            return (c, QPoint::affine(Rat::zero(), root));
        }
    }
}

/// Affine points with abscissa of height at most `h`; `u = 0` is included.
pub fn small_points(c: &QuarticCurve, h: u64) -> Vec<QPoint> {
    let cfg = SearchConfig::new(h, 0).unwrap();
    let mut pts: Vec<QPoint> = search_rhs(&c.poly(), &cfg)
        .unwrap()
        .into_iter()
        .flat_map(|(u, _)| c.points_over(&u))
        .collect();
    pts.sort();
    pts.dedup();
    pts
}

/// A point `m P + n R` for small random `m, n`, if it is affine.
pub fn random_combination(g: &QuarticGroup, pts: &[QPoint], rng: &mut impl Rng) -> Option<QPoint> {
    let p = &pts[rng.gen_range(0..pts.len())];
    let q = &pts[rng.gen_range(0..pts.len())];
    let m = rng.gen_range(1..=2);
    let n = rng.gen_range(-1..=1);
    let e = g.jacobian();
    let s = e
        .add(&e.mul(m, &g.to_jacobian(p).ok()?).ok()?, &e.mul(n, &g.to_jacobian(q).ok()?).ok()?)
        .ok()?;
    match g.from_jacobian(&s).ok()? {
        p @ QPoint::Affine { .. } => Some(p),
        _ => None,
    }
}

/// Whether the criterion's functions vanish at `p`, so that `is_double`
/// falls back to the oracle.
pub fn degenerate(c: &QuarticCurve, base: &QPoint, p: &QPoint) -> bool {
    let u = p.u().unwrap();
    u == base.u().unwrap() || c.factors().unwrap().iter().any(|f| f.eval(u).is_zero())
}

pub struct OracleCase {
    pub curve: QuarticCurve,
    pub base: QPoint,
    pub point: QPoint,
    /// Built as `2R`.
    pub constructed_double: bool,
}

/// Positives `2R` and searched points the oracle rejects, alternating, on
/// fresh random curves. Every tenth case may sit where the criterion's
/// functions vanish; the others avoid those points.
pub fn oracle_cases(seed: u64, count: usize) -> Vec<OracleCase> {
    let mut rng = rng(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let (c, base) = square_constant_quartic(&mut rng);
        let Ok(g) = QuarticGroup::new(&c, &base) else {
            continue;
        };
        let pts = small_points(&c, 6);
        let want_double = out.len() % 2 == 0;
        if want_double {
            let Some(r) = random_combination(&g, &pts, &mut rng) else {
                continue;
            };
            let allow_degenerate = out.len() % 10 == 0;
            if let Ok(p @ QPoint::Affine { .. }) = g.double(&r) {
                if degenerate(&c, &base, &p) && !allow_degenerate {
                    continue;
                }
                out.push(OracleCase {
                    curve: c,
                    base,
                    point: p,
                    constructed_double: true,
                });
            }
        } else {
            let allow_degenerate = out.len() % 10 == 1;
            let neg = pts
                .iter()
                .filter(|p| allow_degenerate || !degenerate(&c, &base, p))
                .find(|p| g.is_double(p).is_ok_and(|d| !d));
            if let Some(p) = neg {
                out.push(OracleCase {
                    curve: c.clone(),
                    base,
                    point: p.clone(),
                    constructed_double: false,
                });
            }
        }
    }
    out
}

/// `(criterion verdict, oracle verdict)`.
pub fn both_verdicts(case: &OracleCase) -> (bool, bool) {
    let (v, _) = descent::is_double(&case.curve, &case.base, &case.point).unwrap();
    let g = QuarticGroup::new(&case.curve, &case.base).unwrap();
    (v, g.is_double(&case.point).unwrap())
}

/// Three random points `P`, `Q`, `P + Q` on a random curve, all affine and
/// off the roots of the factors.
pub fn additive_triple(rng: &mut impl Rng) -> (QuarticCurve, QPoint, [QPoint; 3]) {
    loop {
        let (c, base) = square_constant_quartic(rng);
        let Ok(g) = QuarticGroup::new(&c, &base) else {
            continue;
        };
        let pts = small_points(&c, 6);
        let (Some(p), Some(q)) = (
            random_combination(&g, &pts, rng),
            random_combination(&g, &pts, rng),
        ) else {
            continue;
        };
        let Ok(s @ QPoint::Affine { .. }) = g.add(&p, &q) else {
            continue;
        };
        let fs = c.factors().unwrap();
        let clean = [&p, &q, &s]
            .iter()
            .all(|pt| fs.iter().all(|f| !f.eval(pt.u().unwrap()).is_zero()));
        if clean {
            return (c, base, [p, q, s]);
        }
    }
}

/// Random k with distinct nonzero entries.
pub fn random_k(rng: &mut impl Rng) -> [Rat; 4] {
    loop {
        let k = [0; 4].map(|_| nonzero_rat(rng, 9, 4));
        let distinct = (0..4).all(|i| (i + 1..4).all(|j| k[i] != k[j]));
        if distinct {
            return k;
        }
    }
}

/// `lambda (k + c)` for `k = (4, 3, 2, 1)`: differences scale by `lambda`, so
/// condition (i) still holds.
pub fn four_torsion_k(rng: &mut impl Rng) -> [Rat; 4] {
    loop {
        let lambda = nonzero_rat(rng, 5, 3);
        let c = small_rat(rng, 6, 2);
        let k = [4, 3, 2, 1].map(|x| (Rat::from(x) + &c) * &lambda);
        if k.iter().all(|x| !x.is_zero()) {
            return k;
        }
    }
}

/// `k` of `C_{s,t}`: `((t^2 + s^2 + ts)/(t + s), -ts/(t + s), t, s)`.
pub fn cst_k(s: &Rat, t: &Rat) -> Option<[Rat; 4]> {
    let sum = s + t;
    let k1 = (t.square() + s.square() + t * s).checked_div(&sum).ok()?;
    let k2 = (-(t * s)).checked_div(&sum).ok()?;
    let k = [k1, k2, t.clone(), s.clone()];
    let ok = k.iter().all(|x| !x.is_zero()) && (0..4).all(|i| (i + 1..4).all(|j| k[i] != k[j]));
    ok.then_some(k)
}

/// A random smooth quartic with square nonzero constant term.
pub fn smooth_quartic(rng: &mut impl Rng) -> QuarticCurve {
    loop {
        let a = nonzero_rat(rng, 9, 3);
        let [b, c, d] = [0; 3].map(|_| small_rat(rng, 12, 3));
        let e = nonzero_rat(rng, 7, 3).square();
        if let Ok(curve) = QuarticCurve::new(a, b, c, d, e) {
            return curve;
        }
    }
}
