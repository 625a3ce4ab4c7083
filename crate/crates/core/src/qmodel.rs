//! Quartic models `y^2 = a x^4 + b x^3 + c x^2 + d x + e` of genus one curves:
//! invariants, the two Jacobian constructions, the explicit birational maps
//! to the Jacobian and the group law transported to the quartic.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactnum::{parse_list, Poly, Rat};
use crate::wmodel::{EPoint, WeierstrassCurve};

/// `a x + b` with `a != 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinearFactor {
    pub a: Rat,
    pub b: Rat,
}

impl LinearFactor {
    pub fn new(a: Rat, b: Rat) -> Result<LinearFactor> {
        if a.is_zero() {
            return Err(Error::Invalid("linear factor with zero x-coefficient".into()));
        }
        Ok(LinearFactor { a, b })
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        &self.a * x + &self.b
    }

    pub fn root(&self) -> Rat {
        (-&self.b).checked_div(&self.a).expect("a != 0")
    }
}

/// A point on a quartic model: affine, or one of the two points at infinity
/// (rational only when the leading coefficient is a square).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum QPoint {
    Affine { u: Rat, v: Rat },
    InfPlus,
    InfMinus,
}

impl QPoint {
    pub fn affine(u: Rat, v: Rat) -> QPoint {
        QPoint::Affine { u, v }
    }

    pub fn u(&self) -> Option<&Rat> {
        match self {
            QPoint::Affine { u, .. } => Some(u),
            _ => None,
        }
    }

    pub fn v(&self) -> Option<&Rat> {
        match self {
            QPoint::Affine { v, .. } => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for QPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QPoint::Affine { u, v } => write!(f, "{u},{v}"),
            QPoint::InfPlus => write!(f, "inf+"),
            QPoint::InfMinus => write!(f, "inf-"),
        }
    }
}

impl serde::Serialize for QPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for QPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<QPoint> {
        match s.trim() {
            "inf+" => Ok(QPoint::InfPlus),
            "inf-" | "inf\u{2212}" => Ok(QPoint::InfMinus),
            t => match parse_list(t)?.as_slice() {
                [u, v] => Ok(QPoint::affine(u.clone(), v.clone())),
                _ => Err(Error::Parse(s.to_string())),
            },
        }
    }
}

/// The invariants `I`, `J`, `c4 = 16 I`, `c6 = 32 J` and `disc` with
/// `1728 disc = c4^3 - c6^2`.
#[derive(Clone, PartialEq, Eq, Debug, serde::Serialize)]
pub struct Invariants {
    #[serde(rename = "I")]
    pub i: Rat,
    #[serde(rename = "J")]
    pub j: Rat,
    pub c4: Rat,
    pub c6: Rat,
    pub disc: Rat,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuarticCurve {
    a: Rat,
    b: Rat,
    c: Rat,
    d: Rat,
    e: Rat,
    factors: Option<[LinearFactor; 4]>,
}

impl QuarticCurve {
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat, e: Rat) -> Result<QuarticCurve> {
        if a.is_zero() {
            return Err(Error::Invalid("leading coefficient of a quartic must be nonzero".into()));
        }
        let curve = QuarticCurve {
            a,
            b,
            c,
            d,
            e,
            factors: None,
        };
        if curve.invariants().disc.is_zero() {
            return Err(Error::Singular);
        }
        Ok(curve)
    }

    /// `y^2 = f1(x) f2(x) f3(x) f4(x)`; the roots must be distinct.
    pub fn from_factors(factors: [LinearFactor; 4]) -> Result<QuarticCurve> {
        let poly = factors.iter().fold(Poly::constant(Rat::one()), |acc, f| {
            &acc * &Poly::new(vec![f.b.clone(), f.a.clone()])
        });
        let c = poly.coeffs();
        let mut curve = QuarticCurve::new(
            c[4].clone(),
            c[3].clone(),
            c[2].clone(),
            c[1].clone(),
            c[0].clone(),
        )?;
        curve.factors = Some(factors);
        Ok(curve)
    }

    /// `v^2 = (k1 u + q)(k2 u + q)(k3 u + q)(k4 u + q)`.
    pub fn from_k(k: &[Rat; 4], q: &Rat) -> Result<QuarticCurve> {
        let factors = [0, 1, 2, 3].map(|i| LinearFactor::new(k[i].clone(), q.clone()));
        let [f1, f2, f3, f4] = factors;
        Self::from_factors([f1?, f2?, f3?, f4?])
    }

    /// `[a, b, c, d, e]`, leading coefficient first.
    pub fn coefficients(&self) -> [Rat; 5] {
        [
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
            self.e.clone(),
        ]
    }

    pub fn leading(&self) -> &Rat {
        &self.a
    }

    pub fn constant(&self) -> &Rat {
        &self.e
    }

    pub fn factors(&self) -> Option<&[LinearFactor; 4]> {
        self.factors.as_ref()
    }

    pub fn poly(&self) -> Poly {
        Poly::new(vec![
            self.e.clone(),
            self.d.clone(),
            self.c.clone(),
            self.b.clone(),
            self.a.clone(),
        ])
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.poly().eval(x)
    }

    pub fn contains(&self, p: &QPoint) -> bool {
        match p {
            QPoint::Affine { u, v } => v.square() == self.eval(u),
            QPoint::InfPlus | QPoint::InfMinus => self.a.is_square(),
        }
    }

    pub(crate) fn check(&self, p: &QPoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::NotOnCurve(p.to_string()))
        }
    }

    /// Affine points with the given abscissa, `v` descending (`+` first).
    pub fn points_over(&self, u: &Rat) -> Vec<QPoint> {
        match self.eval(u).sqrt() {
            None => Vec::new(),
            Some(v) if v.is_zero() => vec![QPoint::affine(u.clone(), v)],
            Some(v) => vec![
                QPoint::affine(u.clone(), v.clone()),
                QPoint::affine(u.clone(), -v),
            ],
        }
    }

    pub fn invariants(&self) -> Invariants {
        let (a, b, c, d, e) = (&self.a, &self.b, &self.c, &self.d, &self.e);
        let i = a * e * 12 - b * d * 3 + c.square();
        let j = a * c * e * 72 - a * d.square() * 27 - b.square() * e * 27 + b * c * d * 9
            - c.pow(3) * 2;
        let c4 = &i * 16;
        let c6 = &j * 32;
        let disc = (c4.pow(3) - c6.square())
            .checked_div(&Rat::from(1728))
            .expect("nonzero");
        Invariants { i, j, c4, c6, disc }
    }

    /// `y^2 = x^3 - 27 c4 x - 54 c6`.
    pub fn jacobian_short(&self) -> Result<WeierstrassCurve> {
        let inv = self.invariants();
        WeierstrassCurve::short(-(inv.c4 * 27), -(inv.c6 * 54))
    }

    /// Positive square root `q` of the constant term, needed by `phi1`.
    pub fn phi1_q(&self) -> Result<Rat> {
        match self.e.sqrt() {
            Some(q) if !q.is_zero() => Ok(q),
            _ => Err(Error::inapplicable(
                "phi1",
                format!("constant term {} is not a nonzero rational square", self.e),
            )),
        }
    }

    /// The long Weierstrass model targeted by `phi1`:
    /// `a1 = d/q`, `a2 = c - d^2/4q^2`, `a3 = 2qb`, `a4 = -4q^2 a`, `a6 = a2 a4`.
    pub fn jacobian_long(&self) -> Result<WeierstrassCurve> {
        let q = self.phi1_q()?;
        let q2 = q.square();
        let a1 = self.d.checked_div(&q)?;
        let a2 = &self.c - self.d.square().checked_div(&(&q2 * 4))?;
        let a3 = &q * &self.b * 2;
        let a4 = -(&q2 * &self.a * 4);
        let a6 = &a2 * &a4;
        WeierstrassCurve::new(a1, a2, a3, a4, a6)
    }

    /// Birational map to [`Self::jacobian_long`] sending `(0, q)` to the
    /// identity.
    ///
    /// `x = (2q(v+q) + du)/u^2`,
    /// `y = (4q^2(v+q) + 2q(du + cu^2) - d^2u^2/2q)/u^3`, and `(0, -q)` goes to
    /// `(-a2, a1 a2 - a3)`.
    pub fn phi1(&self, p: &QPoint) -> Result<EPoint> {
        let q = self.phi1_q()?;
        self.check(p)?;
        let (u, v) = match p {
            QPoint::Affine { u, v } => (u, v),
            _ => return Err(Error::exceptional(p, "phi1 is not defined at infinity")),
        };
        if u.is_zero() {
            if v == &q {
                return Ok(EPoint::Identity);
            }
            let e = self.jacobian_long()?;
            return Ok(EPoint::affine(-&e.a2, &e.a1 * &e.a2 - &e.a3));
        }
        let two_q = &q * 2;
        let vq = v + &q;
        let x = (&two_q * &vq + &self.d * u).checked_div(&u.square())?;
        let y_num = q.square() * 4 * &vq + &two_q * (&self.d * u + &self.c * u.square())
            - (self.d.square() * u.square()).checked_div(&two_q)?;
        let y = y_num.checked_div(&u.pow(3))?;
        Ok(EPoint::affine(x, y))
    }

    /// Inverse of [`Self::phi1`]:
    /// `u = (2q(x + c) - d^2/2q)/y`, `v = -q + u(ux - d)/2q`.
    ///
    /// Exceptional points: the identity goes to `(0, q)`; `(-a2, 0)`, where
    /// the formula reads 0/0, goes to the closed-form point computed in
    /// [`Self::phi1_minus_a2_preimage`]; any other point with `y = 0` lies
    /// over a point at infinity and is reported as an error.
    pub fn phi1_inv(&self, p: &EPoint) -> Result<QPoint> {
        let q = self.phi1_q()?;
        let e = self.jacobian_long()?;
        if !e.contains(p) {
            return Err(Error::NotOnCurve(p.to_string()));
        }
        let (x, y) = match p {
            EPoint::Identity => return Ok(QPoint::affine(Rat::zero(), q)),
            EPoint::Affine { x, y } => (x, y),
        };
        let two_q = &q * 2;
        let u_num = &two_q * (x + &self.c) - self.d.square().checked_div(&two_q)?;
        if y.is_zero() {
            if u_num.is_zero() {
                return self.phi1_minus_a2_preimage(&e);
            }
            return Err(Error::exceptional(
                p,
                "y = 0 with nonzero u-numerator: image of a point at infinity",
            ));
        }
        let u = u_num.checked_div(y)?;
        let v = -&q + (&u * (&u * x - &self.d)).checked_div(&two_q)?;
        Ok(QPoint::affine(u, v))
    }

    /// Preimage of `(-a2, 0)`. Every point with `x(phi1) = -a2` satisfies
    /// `2q(v+q) + du = -a2 u^2`; substituting into the curve leaves
    /// `u^3 ((a2^2 - 4q^2 a) u + (2 a2 d - 4 q^2 b)) = 0`, and `u = 0` is the
    /// other point `(0, -q)`.
    fn phi1_minus_a2_preimage(&self, e: &WeierstrassCurve) -> Result<QPoint> {
        let q = self.phi1_q()?;
        let q2 = q.square();
        let lead = e.a2.square() - &q2 * &self.a * 4;
        if lead.is_zero() {
            return Err(Error::exceptional(
                EPoint::affine(-&e.a2, Rat::zero()),
                "image of a point at infinity",
            ));
        }
        let u = (&q2 * &self.b * 4 - &e.a2 * &self.d * 2).checked_div(&lead)?;
        let v = (-(&e.a2 * u.square()) - &self.d * &u).checked_div(&(&q * 2))? - &q;
        Ok(QPoint::affine(u, v))
    }

    /// `y^2 = f(x + s)`; points move by `u -> u - s`.
    pub fn shift(&self, s: &Rat) -> QuarticCurve {
        let p = self.poly().shift(s);
        let factors = self.factors.as_ref().map(|fs| {
            fs.clone().map(|f| LinearFactor {
                b: &f.a * s + &f.b,
                a: f.a,
            })
        });
        QuarticCurve {
            a: p.coeff(4),
            b: p.coeff(3),
            c: p.coeff(2),
            d: p.coeff(1),
            e: p.coeff(0),
            factors,
        }
    }

    /// Shift that removes the cubic term, `-b/(4a)`.
    pub fn depressing_shift(&self) -> Rat {
        (-&self.b).checked_div(&(&self.a * 4)).expect("a != 0")
    }

    fn phi2_params(&self) -> Result<Phi2Params> {
        if !self.a.is_one() || !self.b.is_zero() {
            return Err(Error::inapplicable(
                "phi2",
                "quartic must be monic with zero cubic term",
            ));
        }
        // y^2 = x^4 - 6 pa x^2 - 8 pb x + pc
        let pa = (-&self.c).checked_div(&Rat::from(6))?;
        let pb = (-&self.d).checked_div(&Rat::from(8))?;
        let pc = self.e.clone();
        let big_a = (-(&pc + pa.square() * 3)).checked_div(&Rat::from(4))?;
        let big_b = pb.square() - pa.pow(3) - &big_a * &pa;
        let jac = WeierstrassCurve::short(big_a, big_b)?;
        Ok(Phi2Params { pa, pb, pc, jac })
    }

    /// `w^2 = v^3 + A v + B` with `c = -4A - 3a^2`, `B = b^2 - a^3 - Aa`, for a
    /// monic quartic `x^4 - 6a x^2 - 8b x + c`.
    pub fn jacobian_phi2(&self) -> Result<WeierstrassCurve> {
        Ok(self.phi2_params()?.jac)
    }

    /// Birational map to [`Self::jacobian_phi2`]:
    /// `v = (x^2 + y - a)/2`, `w = (x^3 + xy - 3ax - 2b)/2`;
    /// `inf+` goes to the identity and `inf-` to `(a, b)`.
    pub fn phi2(&self, p: &QPoint) -> Result<EPoint> {
        let prm = self.phi2_params()?;
        self.check(p)?;
        let half = Rat::new(1, 2)?;
        Ok(match p {
            QPoint::InfPlus => EPoint::Identity,
            QPoint::InfMinus => EPoint::affine(prm.pa, prm.pb),
            QPoint::Affine { u: x, v: y } => {
                let v = (x.square() + y - &prm.pa) * &half;
                let w = (x.pow(3) + x * y - &prm.pa * x * 3 - &prm.pb * 2) * &half;
                EPoint::affine(v, w)
            }
        })
    }

    /// Inverse of [`Self::phi2`]: `x = (w + b)/(v - a)`, `y = 2v + a - x^2`.
    ///
    /// Exceptional points: identity to `inf+`, `(a, b)` to `inf-`, and, when
    /// `b != 0`, `(a, -b)` to the affine point with `x = (c - 9a^2)/8b`,
    /// `y = 3a - x^2`.
    pub fn phi2_inv(&self, p: &EPoint) -> Result<QPoint> {
        let prm = self.phi2_params()?;
        if !prm.jac.contains(p) {
            return Err(Error::NotOnCurve(p.to_string()));
        }
        let (v, w) = match p {
            EPoint::Identity => return Ok(QPoint::InfPlus),
            EPoint::Affine { x, y } => (x, y),
        };
        if v == &prm.pa {
            if w == &prm.pb {
                return Ok(QPoint::InfMinus);
            }
            // w == -b with b != 0
            let x = (&prm.pc - prm.pa.square() * 9).checked_div(&(&prm.pb * 8))?;
            let y = &prm.pa * 3 - x.square();
            return Ok(QPoint::affine(x, y));
        }
        let x = (w + &prm.pb).checked_div(&(v - &prm.pa))?;
        let y = v * 2 + &prm.pa - x.square();
        Ok(QPoint::affine(x, y))
    }
}

struct Phi2Params {
    pa: Rat,
    pb: Rat,
    pc: Rat,
    jac: WeierstrassCurve,
}

impl fmt::Display for QuarticCurve {
    /// Factored `(a1,b1)(a2,b2)(a3,b3)(a4,b4)` when known, else `a,b,c,d,e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.factors {
            Some(fs) => {
                for lf in fs {
                    write!(f, "({},{})", lf.a, lf.b)?;
                }
                Ok(())
            }
            None => write!(f, "{},{},{},{},{}", self.a, self.b, self.c, self.d, self.e),
        }
    }
}

impl FromStr for QuarticCurve {
    type Err = Error;

    /// Expanded `a,b,c,d,e` or factored `(a1,b1)(a2,b2)(a3,b3)(a4,b4)`.
    fn from_str(s: &str) -> Result<QuarticCurve> {
        let t = s.trim();
        if t.starts_with('(') {
            let pieces: Vec<&str> = t
                .split(')')
                .map(str::trim)
                .filter(|p| !p.is_empty())
                .collect();
            let mut factors = Vec::with_capacity(4);
            for piece in pieces {
                let inner = piece
                    .strip_prefix('(')
                    .ok_or_else(|| Error::Parse(s.to_string()))?;
                match parse_list(inner)?.as_slice() {
                    [a, b] => factors.push(LinearFactor::new(a.clone(), b.clone())?),
                    _ => return Err(Error::Parse(s.to_string())),
                }
            }
            let factors: [LinearFactor; 4] = factors
                .try_into()
                .map_err(|_| Error::Parse(format!("{s}: expected four factors")))?;
            return QuarticCurve::from_factors(factors);
        }
        match parse_list(t)?.as_slice() {
            [a, b, c, d, e] => {
                QuarticCurve::new(a.clone(), b.clone(), c.clone(), d.clone(), e.clone())
            }
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

#[derive(Clone, Debug)]
enum Anchor {
    /// `phi1` on the curve shifted by `shift`.
    Phi1 { shift: Rat, model: QuarticCurve },
    /// `phi2` on `(f(x + shift))/alpha^2` with `y' = y/alpha`.
    Phi2 {
        shift: Rat,
        alpha: Rat,
        model: QuarticCurve,
    },
}

/// The group law on a quartic model with a chosen base point as identity,
/// `Q1 + Q2 = phi^-1(phi(Q1) + phi(Q2))` for a birational `phi` to the
/// Jacobian with `phi(base) = O`.
///
/// `phi` is built from an anchor map (`phi1` or `phi2`, possibly after a
/// shift of x) followed by translation by the image of the base point.
#[derive(Clone, Debug)]
pub struct QuarticGroup {
    curve: QuarticCurve,
    base: QPoint,
    anchor: Anchor,
    jac: WeierstrassCurve,
    offset: EPoint,
}

impl QuarticGroup {
    /// Anchor selection: infinite base points use `phi2`; otherwise `phi1`
    /// directly when the constant term is a nonzero square, else `phi1` after
    /// shifting the base to `u = 0`, else `phi2`.
    pub fn new(curve: &QuarticCurve, base: &QPoint) -> Result<QuarticGroup> {
        curve.check(base)?;
        let anchor = match base {
            QPoint::InfPlus | QPoint::InfMinus => Self::phi2_anchor(curve)?,
            QPoint::Affine { u, v } => {
                if curve.phi1_q().is_ok() {
                    Anchor::Phi1 {
                        shift: Rat::zero(),
                        model: curve.clone(),
                    }
                } else if !v.is_zero() {
                    Anchor::Phi1 {
                        shift: u.clone(),
                        model: curve.shift(u),
                    }
                } else {
                    Self::phi2_anchor(curve)?
                }
            }
        };
        let jac = match &anchor {
            Anchor::Phi1 { model, .. } => model.jacobian_long()?,
            Anchor::Phi2 { model, .. } => model.jacobian_phi2()?,
        };
        let mut group = QuarticGroup {
            curve: curve.clone(),
            base: base.clone(),
            anchor,
            jac,
            offset: EPoint::Identity,
        };
        group.offset = group.anchor_map(base)?;
        Ok(group)
    }

    fn phi2_anchor(curve: &QuarticCurve) -> Result<Anchor> {
        let alpha = curve.leading().sqrt().ok_or_else(|| {
            Error::inapplicable("phi2", "leading coefficient is not a rational square")
        })?;
        let shift = curve.depressing_shift();
        let shifted = curve.shift(&shift);
        let inv = curve.leading().recip()?;
        let [a, b, c, d, e] = shifted.coefficients().map(|x| x * &inv);
        let model = QuarticCurve::new(a, b, c, d, e)?;
        Ok(Anchor::Phi2 {
            shift,
            alpha,
            model,
        })
    }

    pub fn curve(&self) -> &QuarticCurve {
        &self.curve
    }

    pub fn base(&self) -> &QPoint {
        &self.base
    }

    /// The Weierstrass model the group is computed on.
    pub fn jacobian(&self) -> &WeierstrassCurve {
        &self.jac
    }

    /// Whether the underlying anchor map is `phi1` (else `phi2`).
    pub fn uses_phi1(&self) -> bool {
        matches!(self.anchor, Anchor::Phi1 { .. })
    }

    fn anchor_map(&self, p: &QPoint) -> Result<EPoint> {
        self.curve.check(p)?;
        match &self.anchor {
            Anchor::Phi1 { shift, model } => {
                let moved = match p {
                    QPoint::Affine { u, v } => QPoint::affine(u - shift, v.clone()),
                    other => other.clone(),
                };
                model.phi1(&moved)
            }
            Anchor::Phi2 {
                shift,
                alpha,
                model,
            } => {
                let moved = match p {
                    QPoint::Affine { u, v } => QPoint::affine(u - shift, v.checked_div(alpha)?),
                    other => other.clone(),
                };
                model.phi2(&moved)
            }
        }
    }

    fn anchor_inv(&self, p: &EPoint) -> Result<QPoint> {
        match &self.anchor {
            Anchor::Phi1 { shift, model } => Ok(match model.phi1_inv(p)? {
                QPoint::Affine { u, v } => QPoint::affine(u + shift, v),
                other => other,
            }),
            Anchor::Phi2 {
                shift,
                alpha,
                model,
            } => Ok(match model.phi2_inv(p)? {
                QPoint::Affine { u, v } => QPoint::affine(u + shift, v * alpha),
                other => other,
            }),
        }
    }

    /// `phi(p)` with `phi(base) = O`.
    pub fn to_jacobian(&self, p: &QPoint) -> Result<EPoint> {
        let image = self.anchor_map(p)?;
        self.jac.sub(&image, &self.offset)
    }

    pub fn from_jacobian(&self, p: &EPoint) -> Result<QPoint> {
        let moved = self.jac.add(p, &self.offset)?;
        self.anchor_inv(&moved)
    }

    pub fn add(&self, p: &QPoint, q: &QPoint) -> Result<QPoint> {
        let s = self.jac.add(&self.to_jacobian(p)?, &self.to_jacobian(q)?)?;
        self.from_jacobian(&s)
    }

    pub fn neg(&self, p: &QPoint) -> Result<QPoint> {
        self.from_jacobian(&self.jac.neg(&self.to_jacobian(p)?))
    }

    pub fn double(&self, p: &QPoint) -> Result<QPoint> {
        self.add(p, p)
    }

    pub fn mul(&self, n: i64, p: &QPoint) -> Result<QPoint> {
        self.from_jacobian(&self.jac.mul(n, &self.to_jacobian(p)?)?)
    }

    /// Every `R` on the quartic with `R + R = p`, via the Weierstrass halving
    /// oracle.
    pub fn halves(&self, p: &QPoint) -> Result<Vec<QPoint>> {
        self.jac
            .halves(&self.to_jacobian(p)?)?
            .iter()
            .map(|h| self.from_jacobian(h))
            .collect()
    }

    /// Whether `p` lies in `2C(Q)` according to the halving oracle.
    pub fn is_double(&self, p: &QPoint) -> Result<bool> {
        self.jac.is_double(&self.to_jacobian(p)?)
    }
}

/// `Q1 +_base Q2`.
pub fn add_on_quartic(c: &QuarticCurve, base: &QPoint, q1: &QPoint, q2: &QPoint) -> Result<QPoint> {
    QuarticGroup::new(c, base)?.add(q1, q2)
}

/// `Q +_base Q`.
pub fn double_on_quartic(c: &QuarticCurve, base: &QPoint, q: &QPoint) -> Result<QPoint> {
    QuarticGroup::new(c, base)?.double(q)
}
