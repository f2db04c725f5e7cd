//! Real-root machinery: rational root search, Sturm counting, and certified
//! isolating intervals refined by bisection.

use num::{BigInt, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rational::{divisors, rat, Rational};

/// A closed rational interval `[lo, hi]`.
///
/// When produced by root isolation, `lo < hi`, the target polynomial changes
/// sign across it, and it contains exactly one real root. When produced as a
/// plain enclosure (e.g. by [`crate::field::FieldElement::approx`]) it may be
/// degenerate (`lo == hi`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatingInterval {
    lo: Rational,
    hi: Rational,
}

impl IsolatingInterval {
    /// Plain enclosure; panics if `lo > hi`.
    pub fn enclosure(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "enclosure endpoints out of order");
        IsolatingInterval { lo, hi }
    }

    pub fn point(v: Rational) -> Self {
        IsolatingInterval { lo: v.clone(), hi: v }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat(2, 1)
    }

    pub fn contains(&self, v: &Rational) -> bool {
        self.lo <= *v && *v <= self.hi
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Sign of every value in the interval: `Some(s)` if uniform, `None`
    /// if the interval straddles zero.
    pub fn definite_sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    // -- exact interval arithmetic (used for sign determination in fields) --

    pub(crate) fn add_i(&self, other: &Self) -> Self {
        IsolatingInterval { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    pub(crate) fn mul_i(&self, other: &Self) -> Self {
        let cs = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = cs.iter().min().unwrap().clone();
        let hi = cs.iter().max().unwrap().clone();
        IsolatingInterval { lo, hi }
    }

    pub(crate) fn neg_i(&self) -> Self {
        IsolatingInterval { lo: -&self.hi, hi: -&self.lo }
    }

    /// Reciprocal of a sign-definite interval; panics if it straddles zero.
    pub(crate) fn recip_i(&self) -> Self {
        assert!(
            self.lo.is_positive() || self.hi.is_negative(),
            "reciprocal of an interval containing zero"
        );
        IsolatingInterval { lo: self.hi.recip(), hi: self.lo.recip() }
    }

    pub(crate) fn scale_i(&self, s: &Rational) -> Self {
        if s.is_negative() {
            IsolatingInterval { lo: &self.hi * s, hi: &self.lo * s }
        } else {
            IsolatingInterval { lo: &self.lo * s, hi: &self.hi * s }
        }
    }

    pub(crate) fn add_point(&self, v: &Rational) -> Self {
        IsolatingInterval { lo: &self.lo + v, hi: &self.hi + v }
    }

    /// Horner evaluation of `p` over this interval.
    pub(crate) fn eval_poly(&self, p: &UniPoly) -> Self {
        let mut acc = IsolatingInterval::point(Rational::zero());
        for c in p.coeffs().iter().rev() {
            acc = acc.mul_i(self).add_point(c);
        }
        acc
    }
}

/// All rational roots of `p != 0`, via the rational-root test on the
/// primitive integer form.
pub fn rational_roots(p: &UniPoly) -> Vec<Rational> {
    assert!(!p.is_zero(), "rational_roots of the zero polynomial");
    let mut ints = p.primitive_integer();
    let mut roots = Vec::new();
    // strip x^k: zero is a root iff the constant term vanishes
    let mut had_zero = false;
    while ints.first().is_some_and(Zero::is_zero) {
        ints.remove(0);
        had_zero = true;
    }
    if had_zero {
        roots.push(Rational::zero());
    }
    if ints.len() <= 1 {
        return roots;
    }
    let a0 = ints.first().unwrap().clone();
    let ad = ints.last().unwrap().clone();
    let eval_int = |x: &Rational| -> bool {
        let mut acc = Rational::zero();
        for c in ints.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc.is_zero()
    };
    for r in divisors(&a0) {
        for s in divisors(&ad) {
            if num::integer::gcd(r.clone(), s.clone()) != BigInt::one() {
                continue;
            }
            for cand in [
                Rational::new(r.clone(), s.clone()),
                Rational::new(-r.clone(), s.clone()),
            ] {
                if eval_int(&cand) && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots
}

fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Sturm chain of the square-free part of `p`.
fn sturm_chain(p: &UniPoly) -> Vec<UniPoly> {
    let sf = {
        let g = p.gcd(&p.derivative());
        if g.degree() == Some(0) {
            p.clone()
        } else {
            p.divmod(&g).expect("gcd divides").0
        }
    };
    let mut chain = vec![sf.clone(), sf.derivative()];
    loop {
        let k = chain.len();
        if chain[k - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[k - 2].rem(&chain[k - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    chain
}

fn variations<I: Iterator<Item = i8>>(signs: I) -> usize {
    let mut last = 0i8;
    let mut v = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

fn variations_at(chain: &[UniPoly], x: &Rational) -> usize {
    variations(chain.iter().map(|q| sign(&q.eval(x))))
}

fn variations_at_inf(chain: &[UniPoly], positive: bool) -> usize {
    variations(chain.iter().map(|q| match q.degree() {
        None => 0,
        Some(d) => {
            let lc = sign(q.leading().unwrap());
            if positive || d % 2 == 0 {
                lc
            } else {
                -lc
            }
        }
    }))
}

/// Number of distinct real roots of `p`.
pub fn count_real_roots(p: &UniPoly) -> usize {
    let chain = sturm_chain(p);
    variations_at_inf(&chain, false) - variations_at_inf(&chain, true)
}

/// Number of distinct real roots of `p` in the half-open interval `(lo, hi]`.
pub fn count_real_roots_in(p: &UniPoly, lo: &Rational, hi: &Rational) -> usize {
    let chain = sturm_chain(p);
    variations_at(&chain, lo) - variations_at(&chain, hi)
}

/// Cauchy bound: every real root of `p` lies strictly inside `(-M, M)`,
/// with `M` rounded up to an integer so bisection endpoints stay dyadic.
pub fn root_bound(p: &UniPoly) -> Rational {
    let lc = p.leading().expect("nonzero polynomial").abs();
    let mut max = Rational::zero();
    let d = p.degree().unwrap();
    for c in &p.coeffs()[..d] {
        let q = c.abs() / &lc;
        if q > max {
            max = q;
        }
    }
    let m = max + Rational::one();
    Rational::from_integer(m.ceil().to_integer() + BigInt::one())
}

fn bisect_step(p: &UniPoly, lo: &mut Rational, hi: &mut Rational) {
    let mid = (&*lo + &*hi) / rat(2, 1);
    let sm = sign(&p.eval(&mid));
    if sm == 0 {
        // mid is the root itself; shrink symmetrically around it. The root
        // has odd multiplicity (the bracket sign change survives).
        let quarter = (&*hi - &*lo) / rat(8, 1);
        *lo = &mid - &quarter;
        *hi = &mid + &quarter;
        return;
    }
    if sm == sign(&p.eval(lo)) {
        *lo = mid;
    } else {
        *hi = mid;
    }
}

/// Isolating interval for the single real root of `p`.
///
/// The precondition "exactly one real root" is certified at runtime with a
/// Sturm count; `NotUniqueRealRoot` reports the actual count otherwise.
pub fn isolate_unique_real_root(p: &UniPoly) -> Result<IsolatingInterval> {
    let found = count_real_roots(p);
    if found != 1 {
        return Err(Error::NotUniqueRealRoot { found });
    }
    let m = root_bound(p);
    let mut lo = -m.clone();
    let mut hi = m;
    debug_assert!(sign(&p.eval(&lo)) != sign(&p.eval(&hi)));
    // a couple of steps tightens the interval before anyone reads it
    for _ in 0..4 {
        bisect_step(p, &mut lo, &mut hi);
    }
    Ok(IsolatingInterval { lo, hi })
}

/// Isolating interval for the largest real root of `p` (the designated root
/// of quadratic and cubic minimal polynomials). The callers feed irreducible
/// polynomials, so the root is simple and irrational and the final interval
/// carries a sign change. Errors with `NoRealRoot` if no real root exists.
pub fn isolate_rightmost_real_root(p: &UniPoly) -> Result<IsolatingInterval> {
    let chain = sturm_chain(p);
    if variations_at_inf(&chain, false) == variations_at_inf(&chain, true) {
        return Err(Error::NoRealRoot);
    }
    let m = root_bound(p);
    let mut lo = -m.clone();
    let mut hi = m;
    let hi_vars = variations_at_inf(&chain, true);
    debug_assert_eq!(variations_at(&chain, &hi), hi_vars);
    // narrow from the left until exactly one root remains in (lo, hi]
    while variations_at(&chain, &lo) - hi_vars > 1 {
        let mid = (&lo + &hi) / rat(2, 1);
        if variations_at(&chain, &mid) - hi_vars >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    assert!(
        sign(&p.eval(&lo)) != sign(&p.eval(&hi)) && !p.eval(&lo).is_zero(),
        "rightmost-root bracket lost the sign change; input was not square-free"
    );
    Ok(IsolatingInterval { lo, hi })
}

/// One bisection refinement preserving the sign change.
pub fn refine(p: &UniPoly, iv: &IsolatingInterval) -> IsolatingInterval {
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    bisect_step(p, &mut lo, &mut hi);
    IsolatingInterval { lo, hi }
}

/// Bisection until the interval is at most `width` wide.
pub fn refine_to_width(p: &UniPoly, iv: &IsolatingInterval, width: &Rational) -> IsolatingInterval {
    let mut out = iv.clone();
    while out.width() > *width {
        out = refine(p, &out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn theorem_cubic(n: i64) -> UniPoly {
        UniPoly::from_int_coeffs(&[n * n, 8, -32, 32])
    }

    #[test]
    fn rational_roots_of_theorem_cubics() {
        // n = 20: lambda = -2 zeroes 32l^3 - 32l^2 + 8l + 400:
        // -256 - 128 - 16 + 400 = 0
        assert_eq!(theorem_cubic(20).eval(&rat_int(-2)), rat_int(0));
        assert_eq!(rational_roots(&theorem_cubic(20)), vec![rat_int(-2)]);
        // n = 4: -4 - 8 - 4 + 16 = 0 at -1/2
        assert_eq!(theorem_cubic(4).eval(&rat(-1, 2)), rat_int(0));
        assert_eq!(rational_roots(&theorem_cubic(4)), vec![rat(-1, 2)]);
        // n = 1: no candidate p|1, q|32 works
        assert!(rational_roots(&theorem_cubic(1)).is_empty());
    }

    #[test]
    fn sturm_counts() {
        assert_eq!(count_real_roots(&theorem_cubic(1)), 1);
        assert_eq!(count_real_roots(&UniPoly::from_int_coeffs(&[-5, 0, 1])), 2);
        assert_eq!(count_real_roots(&UniPoly::from_int_coeffs(&[1, 0, 1])), 0);
        // x^3 - x has three real roots; two lie in (-2, 1/2]
        let p = UniPoly::from_int_coeffs(&[0, -1, 0, 1]);
        assert_eq!(count_real_roots(&p), 3);
        assert_eq!(count_real_roots_in(&p, &rat_int(-2), &rat(1, 2)), 2);
    }

    #[test]
    fn isolates_unique_root_of_n1_cubic() {
        // bisection oracle: the cubic changes sign between -1/8 and -1/16
        let p = theorem_cubic(1);
        assert!(p.eval(&rat(-1, 8)).is_negative());
        assert!(p.eval(&rat(-1, 16)).is_positive());
        let iv = isolate_unique_real_root(&p).unwrap();
        let iv = refine_to_width(&p, &iv, &rat(1, 1 << 20));
        assert!(*iv.lo() > rat(-1, 8) && *iv.hi() < rat(-1, 16));
    }

    #[test]
    fn root_is_negative_for_every_n() {
        // p(0) = n^2 > 0 and the cubic increases left of 1/6, so the unique
        // real root is negative; spot-check a spread of n
        for n in [1, 2, 3, 5, 7, 10, 25, 50] {
            let p = theorem_cubic(n);
            let iv = isolate_unique_real_root(&p).unwrap();
            assert!(iv.hi().is_negative() || p.eval(&rat_int(0)).is_positive() && *iv.hi() < rat_int(1));
            let iv = refine_to_width(&p, &iv, &rat(1, 1024));
            assert!(iv.hi().is_negative(), "root of n={n} cubic not negative: {iv:?}");
        }
    }

    #[test]
    fn isolates_cube_root_of_eight() {
        let p = UniPoly::from_int_coeffs(&[-8, 0, 0, 1]);
        let iv = isolate_unique_real_root(&p).unwrap();
        let iv = refine_to_width(&p, &iv, &rat(1, 1000));
        assert!(iv.contains(&rat_int(2)));
    }

    #[test]
    fn unique_root_precondition_is_checked() {
        let p = UniPoly::from_int_coeffs(&[-5, 0, 1]);
        assert_eq!(isolate_unique_real_root(&p), Err(Error::NotUniqueRealRoot { found: 2 }));
    }

    #[test]
    fn rightmost_root_of_quadratic_is_positive() {
        let p = UniPoly::from_int_coeffs(&[-5, 0, 1]);
        let iv = isolate_rightmost_real_root(&p).unwrap();
        assert!(iv.lo().is_positive() || iv.contains(&rat_int(2)));
        let iv = refine_to_width(&p, &iv, &rat(1, 1000));
        // sqrt(5) = 2.2360…
        assert!(*iv.lo() > rat(22, 10) && *iv.hi() < rat(23, 10));
        assert!(matches!(
            isolate_rightmost_real_root(&UniPoly::from_int_coeffs(&[1, 0, 1])),
            Err(Error::NoRealRoot)
        ));
    }

    #[test]
    fn refinement_keeps_sign_change_and_halves_width() {
        let p = theorem_cubic(5);
        let mut iv = isolate_unique_real_root(&p).unwrap();
        for _ in 0..40 {
            let next = refine(&p, &iv);
            assert!(next.width() <= iv.width() / rat_int(2) + rat(1, 1_000_000_000));
            assert!((p.eval(next.lo()) * p.eval(next.hi())).is_negative());
            iv = next;
        }
    }
}
