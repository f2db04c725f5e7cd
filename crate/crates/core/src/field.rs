//! Arithmetic in Q(theta) for theta a designated real root of a monic
//! irreducible polynomial of degree 1, 2 or 3, with exact sign determination
//! under the real embedding.

use num::{BigInt, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rational::Rational;
use crate::roots::{
    isolate_rightmost_real_root, rational_roots, refine, refine_to_width, IsolatingInterval,
};

/// Shared handle to a field; elements keep the field alive.
pub type FieldRef = Arc<NumberField>;

#[derive(Debug)]
enum RootRepr {
    /// Degree-1 fields carry the rational value of theta directly.
    Exact(Rational),
    /// Copy-on-refine isolating interval; readers always see a valid one.
    Isolated(RwLock<IsolatingInterval>),
}

/// Q(theta) described by a monic minimal polynomial plus an isolating
/// interval for the designated real root.
///
/// Degree 1 is supported so constructions whose cubic degenerates to a
/// rational root flow through the same code path as genuine extensions.
#[derive(Debug)]
pub struct NumberField {
    min_poly: UniPoly,
    label: String,
    root: RootRepr,
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        self.min_poly == other.min_poly
    }
}

impl NumberField {
    /// The rationals, realized as the degree-1 field with theta = 0.
    pub fn rationals() -> FieldRef {
        NumberField::new(UniPoly::x()).expect("t is a valid minimal polynomial")
    }

    /// Builds Q(theta) from a monic polynomial of degree 1..=3.
    ///
    /// Degree >= 2 requires the absence of rational roots, which at these
    /// degrees certifies irreducibility. The designated root is the largest
    /// real one (for `t^2 - m` that is the positive square root; the
    /// Theorem-3 cubics have a unique real root).
    pub fn new(min_poly: UniPoly) -> Result<FieldRef> {
        let degree = min_poly.degree().unwrap_or(0);
        if !(1..=3).contains(&degree) || !min_poly.is_monic() {
            return Err(Error::UnsupportedMinPoly { degree, monic: min_poly.is_monic() });
        }
        let (root, label) = if degree == 1 {
            (RootRepr::Exact(-min_poly.coeff(0)), "Q".to_string())
        } else {
            if let Some(r) = rational_roots(&min_poly).first() {
                return Err(Error::Reducible { root: r.to_string() });
            }
            let iv = isolate_rightmost_real_root(&min_poly)?;
            let label = default_label(&min_poly);
            (RootRepr::Isolated(RwLock::new(iv)), label)
        };
        Ok(Arc::new(NumberField { min_poly, label, root }))
    }

    /// Same as [`NumberField::new`] with an explicit display label.
    pub fn with_label(min_poly: UniPoly, label: impl Into<String>) -> Result<FieldRef> {
        let f = NumberField::new(min_poly)?;
        let field = Arc::try_unwrap(f).expect("fresh field has one owner");
        Ok(Arc::new(NumberField { label: label.into(), ..field }))
    }

    /// Q(sqrt(s)) for a positive square-free integer `s != 1`.
    pub fn quadratic_sqrt(s: &BigInt) -> Result<FieldRef> {
        let min_poly = UniPoly::new(vec![
            Rational::from_integer(-s.clone()),
            Rational::zero(),
            Rational::one(),
        ]);
        NumberField::with_label(min_poly, format!("Q(sqrt({s}))"))
    }

    pub fn degree(&self) -> usize {
        self.min_poly.degree().unwrap()
    }

    pub fn min_poly(&self) -> &UniPoly {
        &self.min_poly
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Snapshot of the current isolating interval (a point for degree 1).
    pub fn root_enclosure(&self) -> IsolatingInterval {
        match &self.root {
            RootRepr::Exact(r) => IsolatingInterval::point(r.clone()),
            RootRepr::Isolated(lock) => lock.read().unwrap().clone(),
        }
    }

    /// One bisection step on the stored root interval.
    pub fn refine_root(&self) {
        if let RootRepr::Isolated(lock) = &self.root {
            let mut guard = lock.write().unwrap();
            *guard = refine(&self.min_poly, &guard);
        }
    }

    /// Refines the stored interval until it is at most `width` wide.
    pub fn refine_root_to_width(&self, width: &Rational) {
        if let RootRepr::Isolated(lock) = &self.root {
            let mut guard = lock.write().unwrap();
            *guard = refine_to_width(&self.min_poly, &guard, width);
        }
    }

    /// The element with the given coefficient vector (c0 + c1*theta + ...),
    /// reduced modulo the minimal polynomial if over-long.
    pub fn element(self: &FieldRef, coeffs: Vec<Rational>) -> FieldElement {
        self.from_poly(&UniPoly::new(coeffs))
    }

    pub fn from_poly(self: &FieldRef, p: &UniPoly) -> FieldElement {
        let r = p.rem(&self.min_poly).expect("minimal polynomial is nonzero");
        let mut coeffs = r.coeffs().to_vec();
        coeffs.resize(self.degree(), Rational::zero());
        FieldElement { field: Arc::clone(self), coeffs }
    }

    pub fn rational(self: &FieldRef, r: Rational) -> FieldElement {
        self.element(vec![r])
    }

    pub fn integer(self: &FieldRef, n: i64) -> FieldElement {
        self.rational(crate::rational::rat_int(n))
    }

    /// The generator theta (reduces to its rational value at degree 1).
    pub fn theta(self: &FieldRef) -> FieldElement {
        self.from_poly(&UniPoly::x())
    }

    pub fn zero(self: &FieldRef) -> FieldElement {
        self.element(vec![])
    }

    pub fn one(self: &FieldRef) -> FieldElement {
        self.rational(Rational::one())
    }
}

fn default_label(min_poly: &UniPoly) -> String {
    if min_poly.degree() == Some(2) && min_poly.coeff(1).is_zero() {
        format!("Q(sqrt({}))", -min_poly.coeff(0))
    } else {
        format!("Q(root of {min_poly})")
    }
}

/// Element of a [`NumberField`], canonically a coefficient vector of length
/// `deg(field)`; equality is coefficient-wise.
#[derive(Clone)]
pub struct FieldElement {
    field: FieldRef,
    coeffs: Vec<Rational>,
}

impl FieldElement {
    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn as_poly(&self) -> UniPoly {
        UniPoly::new(self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value if the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    fn compatible(&self, rhs: &FieldElement) -> bool {
        // all degree-1 fields are Q regardless of which theta they name
        (self.field.degree() == 1 && rhs.field.degree() == 1)
            || self.field.min_poly == rhs.field.min_poly
    }

    fn mismatch(&self, rhs: &FieldElement) -> Error {
        Error::FieldMismatch {
            left: self.field.label.clone(),
            right: rhs.field.label.clone(),
        }
    }

    pub fn try_add(&self, rhs: &FieldElement) -> Result<FieldElement> {
        if !self.compatible(rhs) {
            return Err(self.mismatch(rhs));
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(FieldElement { field: Arc::clone(&self.field), coeffs })
    }

    pub fn try_sub(&self, rhs: &FieldElement) -> Result<FieldElement> {
        self.try_add(&-rhs)
    }

    pub fn try_mul(&self, rhs: &FieldElement) -> Result<FieldElement> {
        if !self.compatible(rhs) {
            return Err(self.mismatch(rhs));
        }
        Ok(self.field.from_poly(&(&self.as_poly() * &rhs.as_poly())))
    }

    pub fn try_div(&self, rhs: &FieldElement) -> Result<FieldElement> {
        if !self.compatible(rhs) {
            return Err(self.mismatch(rhs));
        }
        self.try_mul(&rhs.inverse()?)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the minimal polynomial (this is the "multiply by the conjugates"
    /// reduction in closed form).
    pub fn inverse(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, u, _) = self.as_poly().ext_gcd(&self.field.min_poly);
        debug_assert!(g.is_monic() && g.degree() == Some(0), "minimal polynomial not irreducible");
        Ok(self.field.from_poly(&u))
    }

    pub fn square(&self) -> FieldElement {
        self.try_mul(self).unwrap()
    }

    pub fn pow(&self, mut e: u32) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base).unwrap();
            }
            base = base.square();
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, s: &Rational) -> FieldElement {
        let coeffs = self.coeffs.iter().map(|c| c * s).collect();
        FieldElement { field: Arc::clone(&self.field), coeffs }
    }

    /// Exact sign under the designated real embedding: 0 iff the element is
    /// zero (decided structurally); otherwise interval evaluation over the
    /// root enclosure, refined until the sign is pinned. Termination is
    /// guaranteed because a nonzero element has nonzero real value (its
    /// polynomial is coprime to the irreducible minimal polynomial).
    pub fn sign(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        if let Some(r) = self.as_rational() {
            return if r.is_positive() { 1 } else { -1 };
        }
        let p = self.as_poly();
        loop {
            let enclosure = self.field.root_enclosure().eval_poly(&p);
            match enclosure.definite_sign() {
                Some(s) => return s,
                None => self.field.refine_root(),
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn abs(&self) -> FieldElement {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Certified rational enclosure of the real value, at most `width` wide.
    pub fn approx(&self, width: &Rational) -> IsolatingInterval {
        assert!(width.is_positive(), "width must be positive");
        if let Some(r) = self.as_rational() {
            return IsolatingInterval::point(r);
        }
        let p = self.as_poly();
        loop {
            let enclosure = self.field.root_enclosure().eval_poly(&p);
            if enclosure.width() <= *width {
                return enclosure;
            }
            self.field.refine_root();
        }
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.compatible(other) && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.try_add(rhs).unwrap()
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.try_sub(rhs).unwrap()
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.try_mul(rhs).unwrap()
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    write!(f, "θ")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({} in {})", self, self.field.label)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn cubic_field(n: i64) -> FieldRef {
        // monic form of 32t^3 - 32t^2 + 8t + n^2
        let p = UniPoly::new(vec![rat(n * n, 32), rat(1, 4), rat_int(-1), rat_int(1)]);
        NumberField::with_label(p, format!("Q(lambda_{n})")).unwrap()
    }

    #[test]
    fn make_field_degree_one() {
        let f = NumberField::new(UniPoly::from_int_coeffs(&[-3, 1])).unwrap();
        assert_eq!(f.degree(), 1);
        assert_eq!(f.theta().as_rational(), Some(rat_int(3)));
    }

    #[test]
    fn make_field_rejects_reducible_and_complex() {
        assert!(matches!(
            NumberField::new(UniPoly::from_int_coeffs(&[-4, 0, 1])),
            Err(Error::Reducible { .. })
        ));
        assert!(matches!(
            NumberField::new(UniPoly::from_int_coeffs(&[1, 0, 1])),
            Err(Error::NoRealRoot)
        ));
        assert!(matches!(
            NumberField::new(UniPoly::from_int_coeffs(&[1, 0, 0, 0, 1])),
            Err(Error::UnsupportedMinPoly { .. })
        ));
        assert!(matches!(
            NumberField::new(UniPoly::from_int_coeffs(&[-5, 0, 2])),
            Err(Error::UnsupportedMinPoly { .. })
        ));
    }

    #[test]
    fn sqrt5_designated_root_is_positive() {
        let f = NumberField::quadratic_sqrt(&BigInt::from(5)).unwrap();
        let theta = f.theta();
        assert_eq!(theta.sign(), 1);
        // (2 + sqrt5)(-2 + sqrt5) = 5 - 4 = 1
        let a = f.element(vec![rat_int(2), rat_int(1)]);
        let b = f.element(vec![rat_int(-2), rat_int(1)]);
        assert_eq!(a.try_mul(&b).unwrap(), f.one());
    }

    #[test]
    fn cubic_field_inverse_and_reduction() {
        let f = cubic_field(1);
        let lam = f.theta();
        // (1 + 2λ)^{-1} * (1 + 2λ) = 1
        let u = f.element(vec![rat_int(1), rat_int(2)]);
        assert_eq!(u.inverse().unwrap().try_mul(&u).unwrap(), f.one());
        // λ^3 = λ^2 - λ/4 - 1/32 by the monic minimal polynomial
        let expected = f.element(vec![rat(-1, 32), rat(-1, 4), rat_int(1)]);
        assert_eq!(lam.pow(3), expected);
    }

    #[test]
    fn signs_under_real_embedding() {
        let f = cubic_field(1);
        let lam = f.theta();
        assert_eq!(lam.sign(), -1);
        assert_eq!(f.zero().sign(), 0);
        // λ ≈ -0.0898 so 1 + 2λ ≈ 0.82 > 0
        let u = f.element(vec![rat_int(1), rat_int(2)]);
        assert_eq!(u.sign(), 1);
    }

    #[test]
    fn approx_encloses_lambda_and_rationals() {
        let f = cubic_field(1);
        let lam = f.theta();
        let e = lam.approx(&rat(1, 10_000));
        // λ(1) = -0.08982602149294…
        assert!(*e.lo() <= rat(-8982, 100_000) && rat(-8983, 100_000) <= *e.hi());
        assert!(e.width() <= rat(1, 10_000));
        let q = NumberField::rationals();
        let v = q.rational(rat(41, 6));
        let e = v.approx(&rat(1, 1_000_000));
        assert!(e.contains(&rat(41, 6)));

        let f5 = NumberField::quadratic_sqrt(&BigInt::from(5)).unwrap();
        let e = f5.theta().approx(&rat(1, 1000));
        // sqrt5 = 2.2360679…
        assert!(*e.lo() <= rat(22361, 10_000) && rat(22360, 10_000) <= *e.hi());
    }

    #[test]
    fn field_mismatch_is_reported() {
        let f5 = NumberField::quadratic_sqrt(&BigInt::from(5)).unwrap();
        let f2 = NumberField::quadratic_sqrt(&BigInt::from(2)).unwrap();
        let err = f5.theta().try_add(&f2.theta()).unwrap_err();
        assert!(matches!(err, Error::FieldMismatch { .. }));
        // degree-1 fields are all Q; mixing them is fine
        let q1 = NumberField::new(UniPoly::from_int_coeffs(&[0, 1])).unwrap();
        let q2 = NumberField::new(UniPoly::from_int_coeffs(&[-3, 1])).unwrap();
        let s = q1.rational(rat(1, 2)).try_add(&q2.rational(rat(1, 3))).unwrap();
        assert_eq!(s.as_rational(), Some(rat(5, 6)));
    }

    #[test]
    fn sign_is_multiplicative() {
        let f = cubic_field(5);
        let lam = f.theta();
        let a = f.element(vec![rat_int(1), rat_int(2)]); // 1 + 2λ < 0 for n = 5
        let b = &lam * &lam;
        assert_eq!(a.sign(), -1);
        assert_eq!(b.sign(), 1);
        assert_eq!(a.try_mul(&b).unwrap().sign(), a.sign() * b.sign());
    }
}
