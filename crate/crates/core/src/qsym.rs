//! Compositions, quasisymmetric functions in the monomial basis, and exact
//! univariate polynomials over the rationals.
//!
//! Text forms are canonical: `6*M[1,1,1] + 3*M[1,2] + M[3]` (longest
//! compositions first, lexicographic within a length) and `1/2*x^2 - 1/2*x`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest `n` accepted by [`compositions_of`].
pub const MAX_COMPOSITION_WEIGHT: u32 = 20;

/// A sequence of positive parts. Ordered by length, then lexicographically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse(format!("composition {parts:?} has a zero part")));
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    fn rendering_order(a: &Self, b: &Self) -> Ordering {
        b.len().cmp(&a.len()).then_with(|| a.0.cmp(&b.0))
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// All `2^(n-1)` compositions of `n` (one, the empty composition, for `n = 0`),
/// in canonical order.
pub fn compositions_of(n: u32) -> Result<Vec<Composition>> {
    if n > MAX_COMPOSITION_WEIGHT {
        return Err(Error::Guard(format!(
            "compositions of {n} requested, at most {MAX_COMPOSITION_WEIGHT} supported"
        )));
    }
    if n == 0 {
        return Ok(vec![Composition::empty()]);
    }
    // Bit i of `cuts` set means a part ends after position i + 1.
    let mut out: Vec<Composition> = (0u32..1 << (n - 1))
        .map(|cuts| {
            let mut parts = Vec::new();
            let mut run = 1;
            for i in 0..n - 1 {
                if cuts >> i & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            Composition(parts)
        })
        .collect();
    out.sort();
    Ok(out)
}

/// All quasi-shuffles of `a` and `b`, with multiplicity.
fn quasi_shuffles(a: &[u32], b: &[u32]) -> Vec<Vec<u32>> {
    match (a.split_first(), b.split_first()) {
        (None, _) => vec![b.to_vec()],
        (_, None) => vec![a.to_vec()],
        (Some((&a0, ar)), Some((&b0, br))) => {
            let mut out = Vec::new();
            for (head, rest) in [
                (a0, quasi_shuffles(ar, b)),
                (b0, quasi_shuffles(a, br)),
                (a0 + b0, quasi_shuffles(ar, br)),
            ] {
                out.extend(rest.into_iter().map(|mut tail| {
                    tail.insert(0, head);
                    tail
                }));
            }
            out
        }
    }
}

/// A finitely supported integer combination of monomial quasisymmetric functions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QSymPoly {
    terms: BTreeMap<Composition, BigInt>,
}

impl QSymPoly {
    pub fn zero() -> Self {
        QSymPoly::default()
    }

    pub fn one() -> Self {
        QSymPoly::monomial(Composition::empty(), 1)
    }

    pub fn monomial(alpha: Composition, coeff: impl Into<BigInt>) -> Self {
        let mut q = QSymPoly::zero();
        q.add_term(alpha, coeff.into());
        q
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, alpha: &Composition) -> BigInt {
        self.terms.get(alpha).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, alpha: Composition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(alpha).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add(&self, other: &QSymPoly) -> QSymPoly {
        let mut out = self.clone();
        for (alpha, c) in other.terms() {
            out.add_term(alpha.clone(), c.clone());
        }
        out
    }

    /// Product via the quasi-shuffle rule on monomial basis elements.
    pub fn mul(&self, other: &QSymPoly) -> QSymPoly {
        let mut out = QSymPoly::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let c = ca * cb;
                for gamma in quasi_shuffles(&a.0, &b.0) {
                    out.add_term(Composition(gamma), c.clone());
                }
            }
        }
        out
    }

    /// Value at `x_1 = … = x_n = 1`, all other variables 0.
    pub fn principal_specialization(&self, n: u64) -> BigInt {
        self.terms()
            .map(|(alpha, c)| c * binomial(n, alpha.len() as u64))
            .sum()
    }

    /// The polynomial `p` with `p(n)` equal to the principal specialization at `n`.
    pub fn to_polynomial(&self) -> UniPoly {
        let mut p = UniPoly::zero();
        for (alpha, c) in self.terms() {
            let term = UniPoly::binomial(alpha.len()).scale(&BigRational::from_integer(c.clone()));
            p = p.add(&term);
        }
        p
    }
}

pub fn qsym_add(a: &QSymPoly, b: &QSymPoly) -> QSymPoly {
    a.add(b)
}

pub fn qsym_mul(a: &QSymPoly, b: &QSymPoly) -> QSymPoly {
    a.mul(b)
}

pub fn principal_specialization(q: &QSymPoly, n: u64) -> BigInt {
    q.principal_specialization(n)
}

pub fn qsym_to_polynomial(q: &QSymPoly) -> UniPoly {
    q.to_polynomial()
}

pub(crate) fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

impl fmt::Display for QSymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut keys: Vec<&Composition> = self.terms.keys().collect();
        keys.sort_by(|a, b| Composition::rendering_order(a, b));
        for (i, alpha) in keys.into_iter().enumerate() {
            let c = &self.terms[alpha];
            write_sign(f, i == 0, c.is_negative())?;
            let mag = c.abs();
            if alpha.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "M{alpha}")?;
            } else {
                write!(f, "{mag}*M{alpha}")?;
            }
        }
        Ok(())
    }
}

fn write_sign(f: &mut fmt::Formatter<'_>, first: bool, negative: bool) -> fmt::Result {
    match (first, negative) {
        (true, false) => Ok(()),
        (true, true) => f.write_str("-"),
        (false, false) => f.write_str(" + "),
        (false, true) => f.write_str(" - "),
    }
}

/// Splits `a + b - c` into signed terms.
fn signed_terms(s: &str) -> Result<Vec<(bool, &str)>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut out = Vec::new();
    let (mut negative, mut rest) = match s.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, s),
    };
    loop {
        let next = [" + ", " - "]
            .iter()
            .filter_map(|sep| rest.find(sep).map(|i| (i, *sep)))
            .min();
        match next {
            Some((i, sep)) => {
                out.push((negative, rest[..i].trim()));
                negative = sep == " - ";
                rest = &rest[i + 3..];
            }
            None => {
                out.push((negative, rest.trim()));
                return Ok(out);
            }
        }
    }
}

impl FromStr for QSymPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "0" {
            return Ok(QSymPoly::zero());
        }
        let mut q = QSymPoly::zero();
        for (negative, term) in signed_terms(s)? {
            let (coeff, basis) = match term.split_once('*') {
                Some((c, b)) => (parse_int(c)?, Some(b)),
                None if term.starts_with('M') => (BigInt::one(), Some(term)),
                None => (parse_int(term)?, None),
            };
            let alpha = match basis {
                None => Composition::empty(),
                Some(b) => {
                    let inner = b
                        .strip_prefix("M[")
                        .and_then(|r| r.strip_suffix(']'))
                        .ok_or_else(|| Error::Parse(format!("bad basis element {b:?}")))?;
                    let parts = if inner.is_empty() {
                        Vec::new()
                    } else {
                        inner
                            .split(',')
                            .map(|p| p.trim().parse::<u32>())
                            .collect::<std::result::Result<Vec<_>, _>>()
                            .map_err(|e| Error::Parse(format!("bad part in {b:?}: {e}")))?
                    };
                    Composition::new(parts)?
                }
            };
            q.add_term(alpha, if negative { -coeff } else { coeff });
        }
        Ok(q)
    }
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad integer {s:?}")))
}

/// A polynomial in `x` with exact rational coefficients, `coeffs[d]` for `x^d`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn x() -> Self {
        UniPoly::from_integers(&[0, 1])
    }

    pub fn constant(c: BigRational) -> Self {
        UniPoly::new(vec![c])
    }

    /// `C(x, k) = x (x-1) … (x-k+1) / k!`.
    pub fn binomial(k: usize) -> Self {
        let mut p = UniPoly::from_integers(&[1]);
        for i in 0..k {
            p = p.mul(&UniPoly::from_integers(&[-(i as i64), 1]));
        }
        let fact: BigInt = (1..=k as u64).map(BigInt::from).product();
        p.scale(&BigRational::new(BigInt::one(), fact))
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
                    let b = other.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
                    a + b
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(x.into()))
    }
}

/// The unique polynomial of degree `< points.len()` through `points`.
pub fn lagrange_interpolate<X, Y>(points: &[(X, Y)]) -> Result<UniPoly>
where
    X: Clone + Into<BigInt>,
    Y: Clone + Into<BigInt>,
{
    if points.is_empty() {
        return Err(Error::NoPoints);
    }
    let pts: Vec<(BigRational, BigRational)> = points
        .iter()
        .map(|(x, y)| {
            (
                BigRational::from_integer(x.clone().into()),
                BigRational::from_integer(y.clone().into()),
            )
        })
        .collect();
    for (i, (xi, _)) in pts.iter().enumerate() {
        if pts[..i].iter().any(|(xj, _)| xj == xi) {
            return Err(Error::DuplicateAbscissa(xi.to_string()));
        }
    }
    let mut acc = UniPoly::zero();
    for (i, (xi, yi)) in pts.iter().enumerate() {
        let mut basis = UniPoly::constant(BigRational::one());
        let mut denom = BigRational::one();
        for (j, (xj, _)) in pts.iter().enumerate() {
            if i != j {
                basis = basis.mul(&UniPoly::new(vec![-xj.clone(), BigRational::one()]));
                denom *= xi - xj;
            }
        }
        acc = acc.add(&basis.scale(&(yi / denom)));
    }
    Ok(acc)
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            write_sign(f, first, c.is_negative())?;
            first = false;
            let mag = c.abs();
            let var = match d {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{d}"),
            };
            if d == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for UniPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "0" {
            return Ok(UniPoly::zero());
        }
        let mut p = UniPoly::zero();
        for (negative, term) in signed_terms(s)? {
            let (coeff, var) = match term.split_once('*') {
                Some((c, v)) => (parse_rational(c)?, Some(v)),
                None if term.starts_with('x') => (BigRational::one(), Some(term)),
                None => (parse_rational(term)?, None),
            };
            let degree = match var {
                None => 0,
                Some("x") => 1,
                Some(v) => v
                    .strip_prefix("x^")
                    .and_then(|d| d.parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad power {v:?}")))?,
            };
            let mut coeffs = vec![BigRational::zero(); degree + 1];
            coeffs[degree] = if negative { -coeff } else { coeff };
            p = p.add(&UniPoly::new(coeffs));
        }
        Ok(p)
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(parse_int(n)?, d))
        }
        None => Ok(BigRational::from_integer(parse_int(s)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn m(parts: &[u32]) -> QSymPoly {
        QSymPoly::monomial(comp(parts), 1)
    }

    /// Brute-force product: expand both sides as polynomials in `vars`
    /// variables, multiply, and read off monomial-basis coefficients from the
    /// exponent vectors whose nonzero entries are already "packed left"
    /// (a quasisymmetric function is determined by such monomials once the
    /// number of variables is at least its largest composition length).
    fn brute_mul(a: &QSymPoly, b: &QSymPoly, vars: usize) -> QSymPoly {
        use std::collections::HashMap;
        fn expand(q: &QSymPoly, vars: usize) -> HashMap<Vec<u32>, BigInt> {
            let mut out: HashMap<Vec<u32>, BigInt> = HashMap::new();
            for (alpha, c) in q.terms() {
                // Strictly increasing index tuples of length len(alpha).
                for mask in 0u32..1 << vars {
                    if mask.count_ones() as usize != alpha.len() {
                        continue;
                    }
                    let mut exps = vec![0u32; vars];
                    let idx: Vec<usize> = (0..vars).filter(|i| mask >> i & 1 == 1).collect();
                    for (k, &i) in idx.iter().enumerate() {
                        exps[i] = alpha.parts()[k];
                    }
                    *out.entry(exps).or_default() += c;
                }
            }
            out
        }
        let ea = expand(a, vars);
        let eb = expand(b, vars);
        let mut prod: HashMap<Vec<u32>, BigInt> = HashMap::new();
        for (x, cx) in &ea {
            for (y, cy) in &eb {
                let e: Vec<u32> = x.iter().zip(y).map(|(p, q)| p + q).collect();
                *prod.entry(e).or_default() += cx * cy;
            }
        }
        let mut q = QSymPoly::zero();
        for (e, c) in prod {
            let nz: Vec<u32> = e.iter().copied().filter(|&p| p > 0).collect();
            let packed = e.iter().take(nz.len()).all(|&p| p > 0);
            if packed {
                q.add_term(Composition(nz), c);
            }
        }
        q
    }

    #[test]
    fn add_examples() {
        assert_eq!(m(&[1]).add(&m(&[1])), QSymPoly::monomial(comp(&[1]), 2));
        let q = QSymPoly::monomial(comp(&[2, 1]), 3);
        assert_eq!(q.add(&QSymPoly::zero()), q);
        let two = QSymPoly::monomial(comp(&[1, 1]), 2);
        let neg = QSymPoly::monomial(comp(&[1, 1]), -2);
        assert!(two.add(&neg).is_zero());
    }

    #[test]
    fn m1_squared() {
        let sq = m(&[1]).mul(&m(&[1]));
        let want: QSymPoly = "2*M[1,1] + M[2]".parse().unwrap();
        assert_eq!(sq, want);
        assert_eq!(sq, brute_mul(&m(&[1]), &m(&[1]), 3));
        assert_eq!(m(&[2, 1]).mul(&QSymPoly::one()), m(&[2, 1]));
    }

    #[test]
    fn quasi_shuffle_matches_brute_force_expansion() {
        let cases = [
            (vec![1, 2], vec![1]),
            (vec![2], vec![1, 1]),
            (vec![1, 1], vec![1, 1]),
            (vec![3], vec![2, 1]),
        ];
        for (a, b) in cases {
            let (qa, qb) = (m(&a), m(&b));
            let vars = a.len() + b.len();
            assert_eq!(qa.mul(&qb), brute_mul(&qa, &qb, vars), "{a:?} * {b:?}");
        }
    }

    #[test]
    fn specialization_examples() {
        assert_eq!(m(&[1, 1]).principal_specialization(3), BigInt::from(3));
        let q: QSymPoly = "7 + 2*M[1,1]".parse().unwrap();
        assert_eq!(q.principal_specialization(0), BigInt::from(7));
        let k2 = QSymPoly::monomial(comp(&[1, 1]), 2);
        assert_eq!(k2.principal_specialization(3), BigInt::from(6));
    }

    #[test]
    fn to_polynomial_examples() {
        let k2 = QSymPoly::monomial(comp(&[1, 1]), 2);
        assert_eq!(k2.to_polynomial().to_string(), "x^2 - x");
        assert_eq!(m(&[1]).to_polynomial(), UniPoly::x());
        assert_eq!(m(&[1, 1]).to_polynomial().to_string(), "1/2*x^2 - 1/2*x");
    }

    #[test]
    fn lagrange_examples() {
        let p = lagrange_interpolate(&[(0, 0), (1, 0), (2, 2), (3, 6)]).unwrap();
        assert_eq!(p, UniPoly::from_integers(&[0, -1, 1]));
        let c = lagrange_interpolate(&[(0, 5)]).unwrap();
        assert_eq!(c, UniPoly::from_integers(&[5]));
        let cube: Vec<(i64, i64)> = (0..4).map(|k| (k, k * k * k)).collect();
        assert_eq!(lagrange_interpolate(&cube).unwrap(), UniPoly::from_integers(&[0, 0, 0, 1]));
        assert!(matches!(
            lagrange_interpolate(&[(1, 1), (1, 2)]),
            Err(Error::DuplicateAbscissa(_))
        ));
        assert!(matches!(lagrange_interpolate::<i64, i64>(&[]), Err(Error::NoPoints)));
    }

    #[test]
    fn compositions_examples() {
        assert_eq!(compositions_of(0).unwrap(), vec![Composition::empty()]);
        assert_eq!(compositions_of(3).unwrap().len(), 4);
        let five = compositions_of(5).unwrap();
        assert_eq!(five.len(), 16);
        assert!(five.iter().all(|c| c.weight() == 5));
        assert!(five.windows(2).all(|w| w[0] < w[1]));
        assert!(compositions_of(21).is_err());
    }

    #[test]
    fn rendering() {
        let q: QSymPoly = "M[3] + 3*M[2,1] + 6*M[1,1,1] + 3*M[1,2]".parse().unwrap();
        assert_eq!(q.to_string(), "6*M[1,1,1] + 3*M[1,2] + 3*M[2,1] + M[3]");
        assert_eq!(QSymPoly::zero().to_string(), "0");
        assert_eq!(QSymPoly::one().to_string(), "1");
        let neg: QSymPoly = "-M[2] + 2*M[1,1]".parse().unwrap();
        assert_eq!(neg.to_string(), "2*M[1,1] - M[2]");
        let p: UniPoly = "1/4*x^4 - 1/2*x^3 + 1/4*x^2".parse().unwrap();
        assert_eq!(p.to_string(), "1/4*x^4 - 1/2*x^3 + 1/4*x^2");
        assert_eq!(UniPoly::from_integers(&[-3, 0, -1]).to_string(), "-x^2 - 3");
    }

    fn arb_composition(max_weight: u32) -> impl Strategy<Value = Composition> {
        proptest::collection::vec(1u32..=3, 0..=3).prop_filter_map("weight", move |v| {
            (v.iter().sum::<u32>() <= max_weight).then_some(Composition(v))
        })
    }

    fn arb_qsym() -> impl Strategy<Value = QSymPoly> {
        proptest::collection::vec((arb_composition(3), -3i64..=3), 0..4).prop_map(|terms| {
            let mut q = QSymPoly::zero();
            for (a, c) in terms {
                q.add_term(a, c.into());
            }
            q
        })
    }

    proptest! {
        #[test]
        fn mul_is_associative_and_commutative(a in arb_qsym(), b in arb_qsym(), c in arb_qsym()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn specialization_is_a_ring_map(a in arb_qsym(), b in arb_qsym(), n in 0u64..=6) {
            let lhs = a.mul(&b).principal_specialization(n);
            let rhs = a.principal_specialization(n) * b.principal_specialization(n);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn polynomial_agrees_with_specialization(a in arb_qsym()) {
            let p = a.to_polynomial();
            let top = p.degree().unwrap_or(0) as u64 + 2;
            for n in 0..=top {
                let want = BigRational::from_integer(a.principal_specialization(n));
                prop_assert_eq!(p.eval_int(n as i64), want);
            }
        }

        #[test]
        fn interpolation_reproduces_points(ys in proptest::collection::vec(-50i64..50, 1..7)) {
            let pts: Vec<(i64, i64)> = ys.iter().enumerate().map(|(i, &y)| (i as i64 * 2 - 3, y)).collect();
            let p = lagrange_interpolate(&pts).unwrap();
            prop_assert!(p.degree().is_none_or(|d| d < pts.len()));
            for (x, y) in pts {
                prop_assert_eq!(p.eval_int(x), BigRational::from_integer(y.into()));
            }
        }

        #[test]
        fn text_forms_round_trip(a in arb_qsym(), ys in proptest::collection::vec(-9i64..9, 1..5)) {
            prop_assert_eq!(a.to_string().parse::<QSymPoly>().unwrap(), a.clone());
            let pts: Vec<(i64, i64)> = ys.iter().enumerate().map(|(i, &y)| (i as i64, y)).collect();
            let p = lagrange_interpolate(&pts).unwrap();
            prop_assert_eq!(p.to_string().parse::<UniPoly>().unwrap(), p);
        }
    }
}
