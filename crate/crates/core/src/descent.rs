//! Divisibility by 2 on split quartic models
//! `y^2 = (a1 x + b1)(a2 x + b2)(a3 x + b3)(a4 x + b4)`.
//!
//! With base point `(x0, y0)`, a rational point `Q` is a double exactly when
//! every `g_ij(Q) = f_i(x0) f_j(x0) f_i(x(Q)) f_j(x(Q))` is a rational square.
//! Points where the criterion's functions vanish are decided by the halving
//! oracle on the Jacobian instead.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::Rat;
use crate::qmodel::{LinearFactor, QPoint, QuarticCurve, QuarticGroup};
use crate::wmodel::EPoint;

/// Index pairs `(i, j)`, `1 <= i < j <= 4`.
pub const PAIRS: [(usize, usize); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Criterion,
    HalvingOracle,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PairValue {
    pub i: usize,
    pub j: usize,
    pub value: Rat,
    pub is_square: bool,
    pub witness: Option<Rat>,
}

/// Square-class data behind an is-double verdict.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SquareClassCert {
    pub verdict: bool,
    pub method: Method,
    pub pairs: Vec<PairValue>,
    /// Representative of `delta_Q`: the first nonzero `f_i(x(Q))`.
    pub delta: Rat,
    /// `sqrt(delta)` when `delta` is itself a square.
    pub delta_sqrt: Option<Rat>,
    /// `z_i` with `f_i(x(Q)) = delta * z_i^2`, when all four exist.
    pub z: Option<[Rat; 4]>,
}

impl SquareClassCert {
    pub fn all_pairs_square(&self) -> bool {
        self.pairs.iter().all(|p| p.is_square)
    }
}

impl fmt::Display for SquareClassCert {
    /// `key=value` lines.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verdict={}", if self.verdict { "YES" } else { "NO" })?;
        let method = match self.method {
            Method::Criterion => "criterion",
            Method::HalvingOracle => "halving_oracle",
        };
        writeln!(f, "method={method}")?;
        for p in &self.pairs {
            write!(f, "g{}{}={} square={}", p.i, p.j, p.value, p.is_square)?;
            if let Some(w) = &p.witness {
                write!(f, " sqrt={w}")?;
            }
            writeln!(f)?;
        }
        write!(f, "delta={}", self.delta)?;
        if let Some(s) = &self.delta_sqrt {
            write!(f, "\ndelta_sqrt={s}")?;
        }
        if let Some(z) = &self.z {
            write!(f, "\nz={},{},{},{}", z[0], z[1], z[2], z[3])?;
        }
        Ok(())
    }
}

fn factors_of(c: &QuarticCurve) -> Result<&[LinearFactor; 4]> {
    c.factors()
        .ok_or_else(|| Error::Invalid("the criterion needs the quartic in factored form".into()))
}

fn check_index(i: usize) -> Result<usize> {
    if (1..=4).contains(&i) {
        Ok(i - 1)
    } else {
        Err(Error::Invalid(format!("factor index {i} outside 1..=4")))
    }
}

/// `f_i(x0) f_j(x0) f_i(xq) f_j(xq)`, indices from 1.
pub fn gij(c: &QuarticCurve, x0: &Rat, xq: &Rat, i: usize, j: usize) -> Result<Rat> {
    let fs = factors_of(c)?;
    let (i, j) = (check_index(i)?, check_index(j)?);
    Ok(fs[i].eval(x0) * fs[j].eval(x0) * fs[i].eval(xq) * fs[j].eval(xq))
}

fn pair_table(fs: &[LinearFactor; 4], weights: &[Rat; 4], xq: &Rat) -> Vec<PairValue> {
    let vals: Vec<Rat> = fs.iter().map(|f| f.eval(xq)).collect();
    let table: Vec<PairValue> = PAIRS
        .iter()
        .map(|&(i, j)| {
            let value = &weights[i - 1] * &weights[j - 1] * &vals[i - 1] * &vals[j - 1];
            let witness = value.sqrt();
            PairValue {
                i,
                j,
                is_square: witness.is_some(),
                witness,
                value,
            }
        })
        .collect();
    // g_ij g_ik g_jk is always a square, so two square entries in a triangle
    // force the third.
    for tri in [[0, 1, 3], [0, 2, 4], [1, 2, 5], [3, 4, 5]] {
        let all_nonzero = tri.iter().all(|&k| !table[k].value.is_zero());
        if all_nonzero {
            let bad = tri.iter().filter(|&&k| !table[k].is_square).count();
            assert!(bad != 1, "pair table violates the triangle identity");
        }
    }
    table
}

fn delta_data(fs: &[LinearFactor; 4], xq: &Rat) -> (Rat, Option<Rat>, Option<[Rat; 4]>) {
    let vals: Vec<Rat> = fs.iter().map(|f| f.eval(xq)).collect();
    let delta = vals.iter().find(|v| !v.is_zero()).cloned().unwrap_or_default();
    let delta_sqrt = delta.sqrt();
    let z = if delta.is_zero() {
        None
    } else {
        let zs: Option<Vec<Rat>> = vals
            .iter()
            .map(|v| v.checked_div(&delta).ok().and_then(|r| r.sqrt()))
            .collect();
        zs.map(|v| [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()])
    };
    (delta, delta_sqrt, z)
}

fn affine(p: &QPoint, what: &str) -> Result<(Rat, Rat)> {
    match p {
        QPoint::Affine { u, v } => Ok((u.clone(), v.clone())),
        _ => Err(Error::Invalid(format!("{what} must be an affine point"))),
    }
}

/// Decides `q in 2C(Q)` for the group law with `base` as identity.
///
/// Uses the square criterion on all six pairs, or the halving oracle when
/// `x(q)` is a root of some `f_i` or equals `x0`.
pub fn is_double(c: &QuarticCurve, base: &QPoint, q: &QPoint) -> Result<(bool, SquareClassCert)> {
    let fs = factors_of(c)?;
    let (x0, _) = affine(base, "base point")?;
    let (xq, _) = affine(q, "point")?;
    c.check(base)?;
    c.check(q)?;
    if fs.iter().any(|f| f.eval(&x0).is_zero()) {
        return Err(Error::Invalid(format!(
            "base abscissa {x0} is a root of the quartic"
        )));
    }
    let weights = [0, 1, 2, 3].map(|i| fs[i].eval(&x0));
    let pairs = pair_table(fs, &weights, &xq);
    let (delta, delta_sqrt, z) = delta_data(fs, &xq);
    let degenerate = xq == x0 || fs.iter().any(|f| f.eval(&xq).is_zero());
    let (verdict, method) = if degenerate {
        (QuarticGroup::new(c, base)?.is_double(q)?, Method::HalvingOracle)
    } else {
        (pairs.iter().all(|p| p.is_square), Method::Criterion)
    };
    Ok((
        verdict,
        SquareClassCert {
            verdict,
            method,
            pairs,
            delta,
            delta_sqrt,
            z,
        },
    ))
}

/// The criterion with base point `inf+`: `g_ij = a_i a_j f_i(x(Q)) f_j(x(Q))`.
/// Requires `a1 a2 a3 a4` to be a square so that `inf+` is rational.
pub fn is_double_inf_base(c: &QuarticCurve, q: &QPoint) -> Result<(bool, SquareClassCert)> {
    let fs = factors_of(c)?;
    let lead: Rat = fs.iter().map(|f| f.a.clone()).product();
    if !lead.is_square() {
        return Err(Error::inapplicable(
            "infinity-base criterion",
            format!("product of leading coefficients {lead} is not a square"),
        ));
    }
    c.check(q)?;
    let weights = [0, 1, 2, 3].map(|i| fs[i].a.clone());
    let Some(xq) = q.u().cloned() else {
        let verdict = *q == QPoint::InfPlus
            || QuarticGroup::new(c, &QPoint::InfPlus)?.is_double(q)?;
        return Ok((
            verdict,
            SquareClassCert {
                verdict,
                method: Method::HalvingOracle,
                pairs: Vec::new(),
                delta: Rat::zero(),
                delta_sqrt: None,
                z: None,
            },
        ));
    };
    let pairs = pair_table(fs, &weights, &xq);
    let (delta, delta_sqrt, z) = delta_data(fs, &xq);
    let (verdict, method) = if fs.iter().any(|f| f.eval(&xq).is_zero()) {
        (
            QuarticGroup::new(c, &QPoint::InfPlus)?.is_double(q)?,
            Method::HalvingOracle,
        )
    } else {
        (pairs.iter().all(|p| p.is_square), Method::Criterion)
    };
    Ok((
        verdict,
        SquareClassCert {
            verdict,
            method,
            pairs,
            delta,
            delta_sqrt,
            z,
        },
    ))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DeltaCertificate {
    pub is_double: bool,
    pub delta: Rat,
    pub delta_is_square: bool,
    /// `x(Q)`: the element that extends the quadruple when both flags hold.
    pub fifth_candidate: Rat,
}

/// `delta_Q` for a base point whose `f_i(x0) f_j(x0)` are all squares.
///
/// Then every `f_i(x(Q)) / f_1(x(Q))` is a square for a double `Q`, so
/// `delta_Q` is a square exactly when the representative `f_1(x(Q))` is.
pub fn delta_certificate(c: &QuarticCurve, base: &QPoint, q: &QPoint) -> Result<DeltaCertificate> {
    let fs = factors_of(c)?;
    let (x0, _) = affine(base, "base point")?;
    for (i, j) in PAIRS {
        let w = fs[i - 1].eval(&x0) * fs[j - 1].eval(&x0);
        if !w.is_square() {
            return Err(Error::inapplicable(
                "delta certificate",
                format!("f_{i}(x0) f_{j}(x0) = {w} is not a square"),
            ));
        }
    }
    let (dbl, cert) = is_double(c, base, q)?;
    let delta_is_square = dbl && cert.delta_sqrt.is_some();
    Ok(DeltaCertificate {
        is_double: dbl,
        delta: cert.delta,
        delta_is_square,
        fifth_candidate: q.u().cloned().unwrap_or_default(),
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum TorsionCondition {
    #[serde(rename = "i")]
    I,
    #[serde(rename = "ii")]
    II,
    #[serde(rename = "iii")]
    III,
}

impl fmt::Display for TorsionCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TorsionCondition::I => "i",
            TorsionCondition::II => "ii",
            TorsionCondition::III => "iii",
        })
    }
}

fn check_k(k: &[Rat; 4]) -> Result<()> {
    if k.iter().any(Rat::is_zero) {
        return Err(Error::Invalid("k values must be nonzero".into()));
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if k[i] == k[j] {
                return Err(Error::Invalid(format!("k{} = k{} = {}", i + 1, j + 1, k[i])));
            }
        }
    }
    Ok(())
}

/// Whether `v^2 = prod (k_i u + 1)` has a rational point of order 4, and the
/// first satisfied condition in the order i, ii, iii.
pub fn has_rational_4_torsion(k: &[Rat; 4]) -> Result<(bool, Option<TorsionCondition>)> {
    check_k(k)?;
    let [k1, k2, k3, k4] = k;
    let both = |a: Rat, b: Rat| a.is_square() && b.is_square();
    let conditions = [
        (
            TorsionCondition::I,
            both((k1 - k3) * (k2 - k4), (k1 - k2) * (k3 - k4)),
        ),
        (
            TorsionCondition::II,
            both((k2 - k3) * (k1 - k4), (k1 - k2) * (k4 - k3)),
        ),
        (
            TorsionCondition::III,
            both((k3 - k2) * (k1 - k4), (k1 - k3) * (k4 - k2)),
        ),
    ];
    let hit = conditions.iter().find(|(_, ok)| *ok).map(|(c, _)| *c);
    Ok((hit.is_some(), hit))
}

/// One nontrivial 2-torsion point of the `phi1` Jacobian of
/// `v^2 = prod (k_i u + 1)` with its preimage on the quartic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoTorsionPreimage {
    pub label: &'static str,
    pub point: EPoint,
    /// `Err` when the closed form's denominator vanishes.
    pub preimage: Result<QPoint>,
}

/// Closed forms for `P2`, `P3`, `P4` and their preimages under `phi1`.
pub fn two_torsion_preimages(k: &[Rat; 4]) -> Result<Vec<TwoTorsionPreimage>> {
    check_k(k)?;
    let [k1, k2, k3, k4] = k;
    let half = Rat::new(1, 2)?;
    let p2 = EPoint::affine(
        -(k1 * k4) - k2 * k3,
        (k1.square() * k4 - k1 * k2 * k3 - k1 * k2 * k4 - k1 * k3 * k4 + k1 * k4.square()
            + k2.square() * k3
            + k2 * k3.square()
            - k2 * k3 * k4)
            * &half,
    );
    let p3 = EPoint::affine(
        -(k1 * k3) - k2 * k4,
        (k1.square() * k3 - k1 * k2 * k3 - k1 * k2 * k4 + k1 * k3.square() - k1 * k3 * k4
            + k2.square() * k4
            - k2 * k3 * k4
            + k2 * k4.square())
            * &half,
    );
    let p4 = EPoint::affine(
        -(k1 * k2) - k3 * k4,
        (k1.square() * k2 + k1 * k2.square() - k1 * k2 * k3 - k1 * k2 * k4 - k1 * k3 * k4
            - k2 * k3 * k4
            + k3.square() * k4
            + k3 * k4.square())
            * &half,
    );
    let pre = |num_u: Rat, den: Rat, num_v: Rat, label: &str| -> Result<QPoint> {
        if den.is_zero() {
            return Err(Error::exceptional(
                label,
                "closed-form preimage has a vanishing denominator",
            ));
        }
        Ok(QPoint::affine(
            num_u.checked_div(&den)?,
            num_v.checked_div(&den.square())?,
        ))
    };
    let pre2 = pre(
        k1 - k2 - k3 + k4,
        k2 * k3 - k1 * k4,
        -((k1 - k2) * (k1 - k3) * (k2 - k4) * (k3 - k4)),
        "P2",
    );
    let pre3 = pre(
        -k1 + k2 - k3 + k4,
        k1 * k3 - k2 * k4,
        (k1 - k2) * (k2 - k3) * (k1 - k4) * (k3 - k4),
        "P3",
    );
    let pre4 = pre(
        -k1 - k2 + k3 + k4,
        k1 * k2 - k3 * k4,
        (k1 - k3) * (-k2 + k3) * (k1 - k4) * (k2 - k4),
        "P4",
    );
    Ok(vec![
        TwoTorsionPreimage {
            label: "P2",
            point: p2,
            preimage: pre2,
        },
        TwoTorsionPreimage {
            label: "P3",
            point: p3,
            preimage: pre3,
        },
        TwoTorsionPreimage {
            label: "P4",
            point: p4,
            preimage: pre4,
        },
    ])
}

/// `v^2 = prod (k_i u + 1)`.
pub fn k_curve(k: &[Rat; 4]) -> Result<QuarticCurve> {
    check_k(k)?;
    QuarticCurve::from_k(k, &Rat::one())
}
