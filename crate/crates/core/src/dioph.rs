//! Rational D(q)-tuples: sets of distinct nonzero rationals in which every
//! pairwise product plus `q` is a rational square.
//!
//! A D(q)-quadruple `{a1, .., a4}` extends to a quintuple through `x` exactly
//! when `x` is the abscissa of a point `Q` on
//! `y^2 = (a1 x + q)(a2 x + q)(a3 x + q)(a4 x + q)` that is a double for the
//! base `(0, q^2)` and whose `f_i(x(Q))` share a square class that is itself
//! square.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::descent::delta_certificate;
use crate::error::{Error, Result};
use crate::exactnum::{Poly, Rat};
use crate::ptsearch::{cubic_to_weierstrass, generate, search_rhs, with_pool, SearchConfig};
use crate::qmodel::{QPoint, QuarticCurve, QuarticGroup};
use crate::wmodel::EPoint;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DTuple {
    q: Rat,
    elements: Vec<Rat>,
}

impl DTuple {
    /// Rejects `q = 0` and zero or repeated elements.
    pub fn new(q: Rat, elements: Vec<Rat>) -> Result<DTuple> {
        if q.is_zero() {
            return Err(Error::Invalid("q must be nonzero".into()));
        }
        if let Some(i) = elements.iter().position(Rat::is_zero) {
            return Err(Error::Invalid(format!("element {} is zero", i + 1)));
        }
        for i in 0..elements.len() {
            for j in i + 1..elements.len() {
                if elements[i] == elements[j] {
                    return Err(Error::Invalid(format!(
                        "elements {} and {} are both {}",
                        i + 1,
                        j + 1,
                        elements[i]
                    )));
                }
            }
        }
        Ok(DTuple { q, elements })
    }

    pub fn q(&self) -> &Rat {
        &self.q
    }

    pub fn elements(&self) -> &[Rat] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

impl fmt::Display for DTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let els: Vec<String> = self.elements.iter().map(Rat::to_string).collect();
        write!(f, "q={} elements={}", self.q, els.join(","))
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PairCheck {
    pub i: usize,
    pub j: usize,
    /// `a_i a_j + q`
    pub value: Rat,
    /// Nonnegative square root, when there is one.
    pub root: Option<Rat>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Verification {
    pub passed: bool,
    /// Every pair `i < j`, 1-based, in lexicographic order.
    pub pairs: Vec<PairCheck>,
}

impl Verification {
    pub fn failing(&self) -> Vec<(usize, usize)> {
        self.pairs
            .iter()
            .filter(|p| p.root.is_none())
            .map(|p| (p.i, p.j))
            .collect()
    }

    pub fn first_failure(&self) -> Option<(usize, usize)> {
        self.failing().into_iter().next()
    }
}

pub fn verify(t: &DTuple) -> Verification {
    let els = &t.elements;
    let mut pairs = Vec::new();
    for i in 0..els.len() {
        for j in i + 1..els.len() {
            let value = &els[i] * &els[j] + &t.q;
            pairs.push(PairCheck {
                i: i + 1,
                j: j + 1,
                root: value.sqrt(),
                value,
            });
        }
    }
    Verification {
        passed: pairs.iter().all(|p| p.root.is_some()),
        pairs,
    }
}

fn check_quadruple(q: &Rat, quad: &[Rat; 4]) -> Result<DTuple> {
    let t = DTuple::new(q.clone(), quad.to_vec())?;
    let v = verify(&t);
    if let Some((i, j)) = v.first_failure() {
        return Err(Error::Invalid(format!(
            "not a D({q})-quadruple: a{i} a{j} + q is not a square"
        )));
    }
    Ok(t)
}

/// Sort key for enumeration output: height, then positive before negative,
/// then value.
pub fn height_order(t: &Rat) -> (BigInt, bool, Rat) {
    (t.height(), t.is_negative(), t.clone())
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Extension {
    pub fifth: Rat,
    /// The point `Q` on the quartic with `x(Q) = fifth`.
    pub point: QPoint,
    /// How `Q` was produced from searched points.
    pub provenance: String,
}

/// Fifth elements for a D(q)-quadruple found as abscissae of doubles `Q` with
/// square `delta_Q` on `y^2 = prod (a_i x + q)`, base `(0, q^2)`.
///
/// Candidates are the points found by a height search, the combinations of
/// up to two of them under the group law (bounded by `budget`), and the
/// doubles of all of these. Every emitted quintuple is re-verified.
pub fn extend_quadruple(q: &Rat, quad: &[Rat; 4], height: u64, budget: u32) -> Result<Vec<Extension>> {
    check_quadruple(q, quad)?;
    let cfg = SearchConfig::new(height, budget)?;
    let curve = QuarticCurve::from_k(quad, q)?;
    let base = QPoint::affine(Rat::zero(), q.square());
    let group = QuarticGroup::new(&curve, &base)?;
    let jac = group.jacobian();

    let mut seeds: Vec<(QPoint, EPoint)> = Vec::new();
    for (u, v) in search_rhs(&curve.poly(), &cfg)? {
        for p in curve.points_over(&u) {
            debug_assert!(p.v().is_some_and(|w| w.abs() == v));
            if let Ok(img) = group.to_jacobian(&p) {
                seeds.push((p, img));
            }
        }
    }
    let images: Vec<EPoint> = seeds.iter().map(|(_, e)| e.clone()).collect();
    let (gens, generated) = generate(jac, &images, &cfg)?;
    let gen_names: Vec<String> = gens
        .iter()
        .map(|g| match group.from_jacobian(g) {
            Ok(p) => format!("({p})"),
            Err(_) => format!("[{g}]"),
        })
        .collect();

    let mut candidates: Vec<(EPoint, String)> = Vec::new();
    for (p, img) in &seeds {
        candidates.push((img.clone(), format!("searched ({p})")));
        candidates.push((jac.double(img)?, format!("2*({p})")));
    }
    for g in &generated {
        let label = combination_label(g.m, g.n, &gen_names);
        candidates.push((g.point.clone(), label.clone()));
        candidates.push((jac.double(&g.point)?, format!("2*({label})")));
    }

    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (img, provenance) in candidates {
        let Ok(point) = group.from_jacobian(&img) else {
            continue;
        };
        let Some(x) = point.u().cloned() else {
            continue;
        };
        if x.is_zero() || quad.contains(&x) || seen.contains(&x) {
            continue;
        }
        let cert = delta_certificate(&curve, &base, &point)?;
        if !(cert.is_double && cert.delta_is_square) {
            continue;
        }
        let mut els = quad.to_vec();
        els.push(x.clone());
        let quint = DTuple::new(q.clone(), els)?;
        assert!(verify(&quint).passed, "extension {x} failed re-verification");
        seen.insert(x.clone());
        out.push(Extension {
            fifth: x,
            point,
            provenance,
        });
    }
    out.sort_by_key(|e| height_order(&e.fifth));
    Ok(out)
}

fn combination_label(m: i64, n: i64, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (k, name) in [m, n].iter().zip(names) {
        match k {
            0 => {}
            1 => parts.push(name.clone()),
            -1 => parts.push(format!("-{name}")),
            k => parts.push(format!("{k}*{name}")),
        }
    }
    parts.join(" + ")
}

/// The parametric quadruple families with a closed-form fifth element.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Thm2,
    Thm3i,
    Thm3ii,
    Thm3iii,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Thm2, Family::Thm3i, Family::Thm3ii, Family::Thm3iii];

    pub fn name(self) -> &'static str {
        match self {
            Family::Thm2 => "thm2",
            Family::Thm3i => "thm3i",
            Family::Thm3ii => "thm3ii",
            Family::Thm3iii => "thm3iii",
        }
    }

    pub fn forms(self) -> FamilyForms {
        let p = Poly::from_ints;
        let prod = |fs: &[&[i64]]| {
            fs.iter()
                .fold(Poly::constant(Rat::one()), |acc, f| &acc * &Poly::from_ints(f))
        };
        let quarter = |a: i64, b: i64| {
            Poly::new(vec![Rat::new(a, 4).expect("nonzero"), Rat::new(b, 4).expect("nonzero")])
        };
        let (quad, q, num, den, aux) = match self {
            Family::Thm2 => {
                let den = p(&[1369, 7424, 13408, 8064]);
                (
                    [p(&[0, 1]), p(&[8, 16]), p(&[14, 25]), p(&[20, 36])],
                    p(&[9, 16]),
                    prod(&[&[-4], &[1, 2], &[7, 13], &[13, 22]]),
                    den.clone(),
                    den,
                )
            }
            Family::Thm3i => (
                [p(&[0, 4]), p(&[8, 144]), p(&[1, 25]), p(&[3, 49])],
                p(&[1, 16]),
                prod(&[&[-4], &[2, 37], &[3, 58], &[5, 82]]),
                p(&[-1, 416, 16928, 164736]),
                // k_i x5 + q = -(square)/den, so the gate is -den
                p(&[1, -416, -16928, -164736]),
            ),
            Family::Thm3ii => {
                let den = p(&[96721, 104336, 37472, 4480]);
                (
                    [p(&[0, 1]), p(&[26, 9]), p(&[12, 4]), p(&[40, 16])],
                    p(&[49, 16]),
                    prod(&[&[4], &[1, 2], &[13, 5], &[27, 10], &[49, 16]]),
                    den.clone(),
                    &den * &p(&[49, 16]),
                )
            }
            Family::Thm3iii => (
                [p(&[0, 1]), quarter(-4, 1), quarter(20, 9), p(&[8, 4])],
                p(&[9, 4]),
                prod(&[&[2, 1], &[9, 4], &[8, 5], &[14, 5]]),
                p(&[324, 496, 248, 40]),
                prod(&[&[81, 124, 62, 10], &[9, 4]]),
            ),
        };
        FamilyForms {
            family: self,
            quad,
            q,
            fifth_num: num,
            fifth_den: den,
            aux,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// A polynomial D(q(t))-quadruple in `t` with its fifth element
/// `fifth_num / fifth_den`, valid at `t` whenever `aux(t)` is a square.
#[derive(Clone, Debug)]
pub struct FamilyForms {
    pub family: Family,
    pub quad: [Poly; 4],
    pub q: Poly,
    pub fifth_num: Poly,
    pub fifth_den: Poly,
    pub aux: Poly,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FamilyInstance {
    pub t: Rat,
    pub q: Rat,
    pub quad: [Rat; 4],
    pub fifth: Rat,
}

impl FamilyInstance {
    pub fn tuple(&self) -> Result<DTuple> {
        let mut els = self.quad.to_vec();
        els.push(self.fifth.clone());
        DTuple::new(self.q.clone(), els)
    }
}

/// Closed-form quadruple, `q` and fifth element at `t`. Values of `t` where
/// the fifth is undefined, `q` vanishes, or an element is zero or repeated
/// are rejected.
pub fn family_fifth(family: Family, t: &Rat) -> Result<FamilyInstance> {
    let forms = family.forms();
    let degenerate = |why: String| Err(Error::Degenerate(format!("{family} at t={t}: {why}")));
    let q = forms.q.eval(t);
    if q.is_zero() {
        return degenerate("q = 0".into());
    }
    let den = forms.fifth_den.eval(t);
    if den.is_zero() {
        return degenerate("the fifth element has a zero denominator".into());
    }
    let fifth = forms.fifth_num.eval(t).checked_div(&den)?;
    let quad = [0, 1, 2, 3].map(|i| forms.quad[i].eval(t));
    let all: Vec<&Rat> = quad.iter().chain([&fifth]).collect();
    if let Some(i) = all.iter().position(|x| x.is_zero()) {
        return degenerate(format!("element {} is zero", i + 1));
    }
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            if all[i] == all[j] {
                return degenerate(format!("elements {} and {} coincide", i + 1, j + 1));
            }
        }
    }
    Ok(FamilyInstance {
        t: t.clone(),
        q,
        quad,
        fifth,
    })
}

/// `x(2 (0, -q^2))` on `y^2 = prod (a_i x + q)` with base `(0, q^2)`.
pub fn curve_fifth(family: Family, t: &Rat) -> Result<Rat> {
    let forms = family.forms();
    let q = forms.q.eval(t);
    let quad = [0, 1, 2, 3].map(|i| forms.quad[i].eval(t));
    let curve = QuarticCurve::from_k(&quad, &q)?;
    let base = QPoint::affine(Rat::zero(), q.square());
    let group = QuarticGroup::new(&curve, &base)?;
    let p = QPoint::affine(Rat::zero(), -q.square());
    match group.double(&p)? {
        QPoint::Affine { u, .. } => Ok(u),
        other => Err(Error::exceptional(other, "doubling reached a point at infinity")),
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FamilyHit {
    pub t: Rat,
    pub tuple: DTuple,
}

impl fmt::Display for FamilyHit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t={} {}", self.t, self.tuple)
    }
}

/// Rational points `t` on `r^2 = aux(t)`: searched up to `cfg.height`, then
/// extended by the group law on the aux curve's Jacobian.
pub fn aux_points(family: Family, cfg: &SearchConfig) -> Result<BTreeSet<Rat>> {
    let aux = family.forms().aux;
    let found = search_rhs(&aux, cfg)?;
    let mut ts: BTreeSet<Rat> = found.iter().map(|(t, _)| t.clone()).collect();
    match aux.degree() {
        Some(3) => {
            let model = cubic_to_weierstrass(&aux)?;
            let seeds = found
                .iter()
                .map(|(t, r)| model.to_curve(t, r))
                .collect::<Result<Vec<_>>>()?;
            let (_, generated) = generate(model.curve(), &seeds, cfg)?;
            for g in generated {
                if let Some((t, _)) = model.from_curve(&g.point)? {
                    ts.insert(t);
                }
            }
        }
        Some(4) => {
            let [e, d, c, b, a] = [0, 1, 2, 3, 4].map(|i| aux.coeff(i));
            let root = e.sqrt().ok_or_else(|| {
                Error::inapplicable("phi1", format!("aux constant term {e} is not a square"))
            })?;
            let curve = QuarticCurve::new(a, b, c, d, e)?;
            let group = QuarticGroup::new(&curve, &QPoint::affine(Rat::zero(), root))?;
            let mut seeds = Vec::new();
            for (t, _) in &found {
                for p in curve.points_over(t) {
                    if let Ok(img) = group.to_jacobian(&p) {
                        seeds.push(img);
                    }
                }
            }
            let (_, generated) = generate(group.jacobian(), &seeds, cfg)?;
            for g in generated {
                if let Ok(QPoint::Affine { u, .. }) = group.from_jacobian(&g.point) {
                    ts.insert(u);
                }
            }
        }
        d => {
            return Err(Error::Invalid(format!("aux curve of degree {d:?}")));
        }
    }
    Ok(ts)
}

/// Verified quintuples from [`aux_points`], ordered by the height of `t`
/// (positive first on ties) and cut to `max_results`.
pub fn family_enumerate(family: Family, cfg: &SearchConfig, max_results: usize) -> Result<Vec<FamilyHit>> {
    let ts: Vec<Rat> = aux_points(family, cfg)?.into_iter().collect();
    let mut hits: Vec<FamilyHit> = with_pool(|| {
        ts.par_iter()
            .filter_map(|t| {
                let inst = family_fifth(family, t).ok()?;
                let tuple = inst.tuple().ok()?;
                verify(&tuple).passed.then(|| FamilyHit {
                    t: t.clone(),
                    tuple,
                })
            })
            .collect()
    });
    hits.sort_by_key(|h| height_order(&h.t));
    hits.truncate(max_results);
    Ok(hits)
}

/// The two fifth elements `A/B` extending a D(qr^2)-quadruple:
/// `A = qr^3 (+-2 prod y_ij + qr e4 e1 + 2 qr^3 e3 + qr^5 e1)`,
/// `B = (e4 - qr^4)^2`, with `e_k` the elementary symmetric functions and
/// `y_ij = sqrt(x_i x_j + qr^2)`. Returned as `[plus, minus]`.
pub fn regular_extension(qr: &Rat, quad: &[Rat; 4]) -> Result<[Rat; 2]> {
    let q2 = qr.square();
    let tuple = check_quadruple(&q2, quad)?;
    let prod_y: Rat = verify(&tuple)
        .pairs
        .into_iter()
        .map(|p| p.root.expect("checked"))
        .product();
    let [x1, x2, x3, x4] = quad;
    let e1 = x1 + x2 + x3 + x4;
    let e3 = x1 * x2 * x3 + x1 * x2 * x4 + x1 * x3 * x4 + x2 * x3 * x4;
    let e4 = x1 * x2 * x3 * x4;
    let q4 = q2.square();
    if e4 == q4 {
        return Err(Error::Degenerate(format!("x1 x2 x3 x4 = qr^4 = {q4}")));
    }
    let rest = qr * &e4 * &e1 + qr.pow(3) * &e3 * 2 + qr.pow(5) * &e1;
    let b = (&e4 - &q4).square();
    let cube = qr.pow(3);
    let plus = (&cube * (&prod_y * 2 + &rest)).checked_div(&b)?;
    let minus = (&cube * (-(&prod_y * 2) + &rest)).checked_div(&b)?;
    Ok([plus, minus])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{parse_list, rat as r};

    fn tuple(q: &str, els: &str) -> DTuple {
        DTuple::new(r(q), parse_list(els).unwrap()).unwrap()
    }

    fn quad(els: &str) -> [Rat; 4] {
        parse_list(els).unwrap().try_into().unwrap()
    }

    #[test]
    fn verify_examples() {
        let v = verify(&tuple("25", "1,24,39,56"));
        assert!(v.passed);
        let roots: Vec<Rat> = v.pairs.iter().map(|p| p.root.clone().unwrap()).collect();
        assert_eq!(roots, parse_list("7,8,9,31,37,47").unwrap());
        assert!(verify(&tuple("31/3", "1/12,28/3,193/12,23,-60431/225228")).passed);
        let v = verify(&tuple("31/3", "1/2,28/3,193/12,23"));
        assert_eq!(v.first_failure(), Some((1, 2)));
        assert!(DTuple::new(r("0"), parse_list("1,2").unwrap()).is_err());
        assert!(DTuple::new(r("1"), parse_list("1,0").unwrap()).is_err());
        assert!(DTuple::new(r("1"), parse_list("3,2,3").unwrap()).is_err());
    }

    #[test]
    fn verify_is_permutation_invariant() {
        let base = parse_list("180/121,-318/121,284/121,-248/121,2562308340/2164017361").unwrap();
        let q = r("841/121");
        let mut els = base.clone();
        for k in 0..5 {
            els.rotate_left(1);
            els.swap(0, k % 4 + 1);
            assert!(verify(&DTuple::new(q.clone(), els.clone()).unwrap()).passed);
        }
    }

    #[test]
    fn table_first_row() {
        let inst = family_fifth(Family::Thm2, &r("1/12")).unwrap();
        assert_eq!(inst.quad, quad("1/12,28/3,193/12,23"));
        assert_eq!(inst.q, r("31/3"));
        assert_eq!(inst.fifth, r("-60431/225228"));
        let last = family_fifth(Family::Thm2, &r("-4615/8064")).unwrap();
        assert_eq!(last.fifth, r("-3414104551/6009297336"));
        assert!(matches!(family_fifth(Family::Thm2, &r("0")), Err(Error::Degenerate(_))));
        // t = -1/2 makes 16t + 8 vanish
        assert!(matches!(family_fifth(Family::Thm2, &r("-1/2")), Err(Error::Degenerate(_))));
    }

    #[test]
    fn families_are_polynomial_quadruples() {
        for fam in Family::ALL {
            let forms = fam.forms();
            for k in 1..=9i64 {
                let t = Rat::new(k * 7 - 30, k + 2).unwrap();
                let q = forms.q.eval(&t);
                let xs = [0, 1, 2, 3].map(|i| forms.quad[i].eval(&t));
                for i in 0..4 {
                    for j in i + 1..4 {
                        assert!((&xs[i] * &xs[j] + &q).is_square(), "{fam} t={t} ({i},{j})");
                    }
                }
            }
        }
    }

    #[test]
    fn square_gate_matches_aux() {
        let cfg = SearchConfig::new(25, 0).unwrap();
        for fam in Family::ALL {
            let forms = fam.forms();
            let mut samples: Vec<Rat> = search_rhs(&forms.aux, &cfg)
                .unwrap()
                .into_iter()
                .map(|(t, _)| t)
                .collect();
            samples.extend((1..=12).map(|k| Rat::new(2 * k - 13, 3 * k + 1).unwrap()));
            let mut squares = 0;
            for t in samples {
                let Ok(inst) = family_fifth(fam, &t) else {
                    continue;
                };
                let all = inst
                    .quad
                    .iter()
                    .all(|k| (k * &inst.fifth + &inst.q).is_square());
                assert_eq!(all, forms.aux.eval(&t).is_square(), "{fam} t={t}");
                squares += all as usize;
            }
            assert!(squares > 0, "{fam} has no square sample");
        }
    }

    #[test]
    fn curve_doubling_gives_the_closed_form() {
        for t in ["1/12", "3", "-17/42", "2/5"] {
            let t = r(t);
            assert_eq!(
                curve_fifth(Family::Thm2, &t).unwrap(),
                family_fifth(Family::Thm2, &t).unwrap().fifth
            );
        }
    }

    #[test]
    fn printed_jacobian_coefficients() {
        // a-polynomials of the phi1 Jacobian for the thm2 quartic
        let ps = |fs: &[&[i64]]| {
            fs.iter()
                .fold(Poly::constant(Rat::one()), |acc, f| &acc * &Poly::from_ints(f))
        };
        let a1 = ps(&[&[6], &[7, 13], &[9, 16]]);
        let a2 = ps(&[&[9, 16], &[9, 16], &[111, 440, 432]]);
        let a3 = ps(&[&[8], &[7, 13], &[9, 16], &[9, 16], &[9, 16], &[80, 318, 313]]);
        let a4_base = ps(&[&[0, -128], &[1, 2], &[5, 9], &[14, 25]]);
        let s16 = |k: u32| ps(&vec![&[9i64, 16][..]; k as usize]);
        let a4 = &a4_base * &s16(4);
        let a6 = &(&a4_base * &s16(6)) * &Poly::from_ints(&[111, 440, 432]);
        for t in ["1/12", "2", "-17/42", "5/3"] {
            let t = r(t);
            let forms = Family::Thm2.forms();
            let q = forms.q.eval(&t);
            let quad = [0, 1, 2, 3].map(|i| forms.quad[i].eval(&t));
            let c = QuarticCurve::from_k(&quad, &q).unwrap();
            let base = QPoint::affine(Rat::zero(), q.square());
            assert!(c.contains(&base));
            let e = c.jacobian_long().unwrap();
            assert_eq!(e.coefficients(), [&a1, &a2, &a3, &a4, &a6].map(|p| p.eval(&t)));
            let s = c.phi1(&QPoint::affine(Rat::zero(), -q.square())).unwrap();
            assert_eq!(s.x(), Some(&-a2.eval(&t)));
        }
        // t = 0 directly on the printed model
        let e = crate::wmodel::WeierstrassCurve::new(
            r("378"),
            r("8991"),
            r("3265920"),
            r("0"),
            r("0"),
        )
        .unwrap();
        let s = EPoint::affine(r("-8991"), r("132678"));
        let x1 = e.double(&s).unwrap().x().unwrap() * Rat::from(33124);
        assert_eq!(x1, r("4965468561"));
    }

    #[test]
    fn extension_recovers_table_rows() {
        let got = extend_quadruple(&r("31/3"), &quad("1/12,28/3,193/12,23"), 30, 1).unwrap();
        assert!(got.iter().any(|e| e.fifth == r("-60431/225228")), "{got:?}");
        let got = extend_quadruple(&r("13/7"), &quad("-25/56,6/7,159/56,55/14"), 30, 1).unwrap();
        assert!(got.iter().any(|e| e.fifth == r("-17889/103544")));
        assert!(extend_quadruple(&r("31/3"), &quad("1/2,28/3,193/12,23"), 5, 0).is_err());
    }

    #[test]
    fn regular_extension_example() {
        let qr = r("29/11");
        let qd = quad("180/121,-318/121,284/121,-248/121");
        let [plus, minus] = regular_extension(&qr, &qd).unwrap();
        assert_eq!(plus, r("1255545720/540051121"));
        assert_eq!(minus, r("-143212695780/74048750161"));
        let fifth = r("2562308340/2164017361");
        for x6 in [plus, minus] {
            assert!(!qd.contains(&x6));
            for x in &qd {
                assert!((x * &x6 + qr.square()).is_square());
            }
            let mut els = qd.to_vec();
            els.push(fifth.clone());
            els.push(x6);
            let v = verify(&DTuple::new(qr.square(), els).unwrap());
            assert_eq!(v.failing(), vec![(5, 6)]);
        }
        assert!(regular_extension(&qr, &quad("1,2,3,4")).is_err());
    }
}
