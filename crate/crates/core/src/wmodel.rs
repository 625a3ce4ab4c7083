//! Long Weierstrass curves `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`
//! over Q: chord-and-tangent group law, 2-torsion, and a halving oracle based
//! on the duplication formula.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{Poly, Rat};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeierstrassCurve {
    pub a1: Rat,
    pub a2: Rat,
    pub a3: Rat,
    pub a4: Rat,
    pub a6: Rat,
    pub b2: Rat,
    pub b4: Rat,
    pub b6: Rat,
    pub b8: Rat,
    pub c4: Rat,
    pub c6: Rat,
    pub disc: Rat,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum EPoint {
    Identity,
    Affine { x: Rat, y: Rat },
}

impl EPoint {
    pub fn affine(x: Rat, y: Rat) -> EPoint {
        EPoint::Affine { x, y }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, EPoint::Identity)
    }

    pub fn x(&self) -> Option<&Rat> {
        match self {
            EPoint::Identity => None,
            EPoint::Affine { x, .. } => Some(x),
        }
    }

    pub fn y(&self) -> Option<&Rat> {
        match self {
            EPoint::Identity => None,
            EPoint::Affine { y, .. } => Some(y),
        }
    }
}

impl fmt::Display for EPoint {
    /// `O` or `x,y`; the CLI point format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EPoint::Identity => write!(f, "O"),
            EPoint::Affine { x, y } => write!(f, "{x},{y}"),
        }
    }
}

impl serde::Serialize for EPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl std::str::FromStr for EPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<EPoint> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("o") {
            return Ok(EPoint::Identity);
        }
        match crate::exactnum::parse_list(t)?.as_slice() {
            [x, y] => Ok(EPoint::affine(x.clone(), y.clone())),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

impl WeierstrassCurve {
    /// Smooth curve from `[a1, a2, a3, a4, a6]`; a zero discriminant is an
    /// error.
    pub fn new(a1: Rat, a2: Rat, a3: Rat, a4: Rat, a6: Rat) -> Result<WeierstrassCurve> {
        let e = Self::possibly_singular(a1, a2, a3, a4, a6);
        if e.disc.is_zero() {
            return Err(Error::Singular);
        }
        Ok(e)
    }

    /// `y^2 = x^3 + a x + b`.
    pub fn short(a: Rat, b: Rat) -> Result<WeierstrassCurve> {
        Self::new(Rat::zero(), Rat::zero(), Rat::zero(), a, b)
    }

    /// Builds the curve without the smoothness check. Group operations on the
    /// result refuse to run when the discriminant is zero.
    pub fn possibly_singular(a1: Rat, a2: Rat, a3: Rat, a4: Rat, a6: Rat) -> WeierstrassCurve {
        let b2 = a1.square() + &a2 * 4;
        let b4 = &a4 * 2 + &a1 * &a3;
        let b6 = a3.square() + &a6 * 4;
        let b8 = a1.square() * &a6 + &a2 * &a6 * 4 - &a1 * &a3 * &a4 + &a2 * a3.square()
            - a4.square();
        debug_assert_eq!(&b8 * 4, &b2 * &b6 - b4.square());
        let c4 = b2.square() - &b4 * 24;
        let c6 = -(b2.pow(3)) + &b2 * &b4 * 36 - &b6 * 216;
        let disc = -(b2.square() * &b8) - b4.pow(3) * 8 - b6.square() * 27 + &b2 * &b4 * &b6 * 9;
        WeierstrassCurve {
            a1,
            a2,
            a3,
            a4,
            a6,
            b2,
            b4,
            b6,
            b8,
            c4,
            c6,
            disc,
        }
    }

    pub fn coefficients(&self) -> [Rat; 5] {
        [
            self.a1.clone(),
            self.a2.clone(),
            self.a3.clone(),
            self.a4.clone(),
            self.a6.clone(),
        ]
    }

    pub fn is_singular(&self) -> bool {
        self.disc.is_zero()
    }

    pub fn j_invariant(&self) -> Result<Rat> {
        self.c4.pow(3).checked_div(&self.disc)
    }

    fn ensure_smooth(&self) -> Result<()> {
        if self.is_singular() {
            Err(Error::Singular)
        } else {
            Ok(())
        }
    }

    /// `y^2 + a1 xy + a3 y - (x^3 + a2 x^2 + a4 x + a6)`.
    pub fn equation_residue(&self, x: &Rat, y: &Rat) -> Rat {
        y.square() + &self.a1 * x * y + &self.a3 * y
            - (x.pow(3) + &self.a2 * x.square() + &self.a4 * x + &self.a6)
    }

    pub fn contains(&self, p: &EPoint) -> bool {
        match p {
            EPoint::Identity => true,
            EPoint::Affine { x, y } => self.equation_residue(x, y).is_zero(),
        }
    }

    fn check(&self, p: &EPoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::NotOnCurve(p.to_string()))
        }
    }

    pub fn neg(&self, p: &EPoint) -> EPoint {
        match p {
            EPoint::Identity => EPoint::Identity,
            EPoint::Affine { x, y } => {
                EPoint::affine(x.clone(), -y - &self.a1 * x - &self.a3)
            }
        }
    }

    pub fn add(&self, p: &EPoint, q: &EPoint) -> Result<EPoint> {
        self.ensure_smooth()?;
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    pub fn sub(&self, p: &EPoint, q: &EPoint) -> Result<EPoint> {
        self.add(p, &self.neg(q))
    }

    pub fn double(&self, p: &EPoint) -> Result<EPoint> {
        self.add(p, p)
    }

    /// Group law on points already known to lie on this smooth curve.
    fn add_unchecked(&self, p: &EPoint, q: &EPoint) -> EPoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (EPoint::Identity, _) => return q.clone(),
            (_, EPoint::Identity) => return p.clone(),
            (EPoint::Affine { x: x1, y: y1 }, EPoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let (lambda, nu) = if x1 == x2 {
            let denom = y1 + y2 + &self.a1 * x2 + &self.a3;
            if denom.is_zero() {
                return EPoint::Identity;
            }
            // tangent; here y1 == y2
            let denom = y1 * 2 + &self.a1 * x1 + &self.a3;
            let num = x1.square() * 3 + &self.a2 * x1 * 2 + &self.a4 - &self.a1 * y1;
            let nu_num = -(x1.pow(3)) + &self.a4 * x1 + &self.a6 * 2 - &self.a3 * y1;
            (
                num.checked_div(&denom).expect("nonzero tangent denominator"),
                nu_num.checked_div(&denom).expect("nonzero tangent denominator"),
            )
        } else {
            let dx = x2 - x1;
            (
                (y2 - y1).checked_div(&dx).expect("distinct x"),
                (y1 * x2 - y2 * x1).checked_div(&dx).expect("distinct x"),
            )
        };
        let x3 = lambda.square() + &self.a1 * &lambda - &self.a2 - x1 - x2;
        let y3 = -((&lambda + &self.a1) * &x3) - nu - &self.a3;
        EPoint::affine(x3, y3)
    }

    /// `n * p` by double-and-add; negative `n` negates.
    pub fn mul(&self, n: i64, p: &EPoint) -> Result<EPoint> {
        self.ensure_smooth()?;
        self.check(p)?;
        Ok(self.mul_unchecked(n, p))
    }

    fn mul_unchecked(&self, n: i64, p: &EPoint) -> EPoint {
        let mut base = if n < 0 { self.neg(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = EPoint::Identity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.add_unchecked(&base, &base);
            }
        }
        acc
    }

    /// `4x^3 + b2 x^2 + 2 b4 x + b6`, whose roots are the x-coordinates of
    /// the nontrivial 2-torsion.
    pub fn two_division_poly(&self) -> Poly {
        Poly::new(vec![
            self.b6.clone(),
            &self.b4 * 2,
            self.b2.clone(),
            Rat::from(4),
        ])
    }

    /// Rational points `T != O` with `2T = O`, ascending by x.
    pub fn two_torsion(&self) -> Result<Vec<EPoint>> {
        self.ensure_smooth()?;
        let half = Rat::new(-1, 2)?;
        Ok(self
            .two_division_poly()
            .rational_roots()?
            .into_iter()
            .map(|x| {
                let y = (&self.a1 * &x + &self.a3) * &half;
                EPoint::affine(x, y)
            })
            .collect())
    }

    /// Rational y-coordinates over `x`, ascending.
    pub fn lift_x(&self, x: &Rat) -> Vec<Rat> {
        // y^2 + (a1 x + a3) y - g(x) = 0
        let lin = &self.a1 * x + &self.a3;
        let g = x.pow(3) + &self.a2 * x.square() + &self.a4 * x + &self.a6;
        let disc = lin.square() + g * 4;
        let Some(s) = disc.sqrt() else {
            return Vec::new();
        };
        let half = Rat::new(1, 2).expect("nonzero");
        let mut ys = vec![(-&lin - &s) * &half, (-&lin + &s) * &half];
        ys.dedup();
        ys
    }

    /// Every rational `R` with `2R = p`, sorted.
    ///
    /// The x-coordinates solve `x^4 - b4 x^2 - 2 b6 x - b8 = x(p) (4x^3 + b2 x^2
    /// + 2 b4 x + b6)`; each lift is kept only if it doubles to `p` exactly.
    pub fn halves(&self, p: &EPoint) -> Result<Vec<EPoint>> {
        self.ensure_smooth()?;
        self.check(p)?;
        let mut out = match p {
            EPoint::Identity => {
                let mut v = vec![EPoint::Identity];
                v.extend(self.two_torsion()?);
                v
            }
            EPoint::Affine { x: xp, .. } => {
                let numer = Poly::new(vec![
                    -&self.b8,
                    -(&self.b6 * 2),
                    -&self.b4,
                    Rat::zero(),
                    Rat::one(),
                ]);
                let eq = &numer - &self.two_division_poly().scale(xp);
                let mut v = Vec::new();
                for x in eq.rational_roots()? {
                    for y in self.lift_x(&x) {
                        let r = EPoint::affine(x.clone(), y);
                        if self.add_unchecked(&r, &r) == *p {
                            v.push(r);
                        }
                    }
                }
                v
            }
        };
        out.sort();
        Ok(out)
    }

    /// Whether `p` lies in `2E(Q)`.
    pub fn is_double(&self, p: &EPoint) -> Result<bool> {
        Ok(!self.halves(p)?.is_empty())
    }

    /// Smallest `n <= 12` with `n p = O`, if any. Rational torsion orders over
    /// Q never exceed 12.
    pub fn torsion_order(&self, p: &EPoint) -> Result<Option<u32>> {
        self.ensure_smooth()?;
        self.check(p)?;
        let mut acc = p.clone();
        for n in 1..=12u32 {
            if acc.is_identity() {
                return Ok(Some(n));
            }
            acc = self.add_unchecked(&acc, p);
        }
        Ok(None)
    }
}

impl fmt::Display for WeierstrassCurve {
    /// `a1,a2,a3,a4,a6`; the CLI curve format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{},{}", self.a1, self.a2, self.a3, self.a4, self.a6)
    }
}

impl std::str::FromStr for WeierstrassCurve {
    type Err = Error;

    fn from_str(s: &str) -> Result<WeierstrassCurve> {
        match crate::exactnum::parse_list(s)?.as_slice() {
            [a1, a2, a3, a4, a6] => WeierstrassCurve::new(
                a1.clone(),
                a2.clone(),
                a3.clone(),
                a4.clone(),
                a6.clone(),
            ),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}
