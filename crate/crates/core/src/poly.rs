//! Dense univariate polynomials over arbitrary-precision integers, plus the
//! Sturm-sequence machinery used for certified real-root isolation.
//!
//! Coefficients are stored in ascending order of degree with no trailing
//! zeros; the zero polynomial has an empty coefficient vector. Sturm chains
//! are built with positive-scaled pseudo-remainders and reduced to primitive
//! parts, so every element equals the classical chain entry up to a positive
//! rational factor and sign-variation counts are unchanged.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![BigInt::one()] }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The monic linear polynomial `x - c`.
    pub fn x_minus(c: BigInt) -> Self {
        IntPoly { coeffs: vec![-c, BigInt::one()] }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("zero polynomial has no leading coefficient")
    }

    pub fn neg(&self) -> Self {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    /// GCD of the coefficients, positive; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the (positive) content, preserving signs.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.content();
        IntPoly { coeffs: self.coeffs.iter().map(|c| c / &g).collect() }
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder or a non-integer coefficient.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (dn, dd) = (self.degree()?, divisor.degree()?);
        if dn < dd {
            return None;
        }
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let top = std::mem::take(&mut rem[k + dd]);
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, c) in divisor.coeffs.iter().take(dd).enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(quot))
    }

    /// Pseudo-remainder with a positive multiplier: returns `r` such that
    /// `|lc(g)|^(deg f - deg g + 1) * f = q * g + r` for some quotient `q`.
    pub fn pseudo_rem_pos(&self, g: &Self) -> Self {
        let df = self.degree().expect("pseudo-remainder of zero dividend");
        let dg = g.degree().expect("pseudo-remainder by zero divisor");
        assert!(df >= dg);
        let lead = g.leading().clone();
        let mut r = self.clone();
        let mut scale_left = df - dg + 1;
        while let Some(dr) = r.degree() {
            if dr < dg {
                break;
            }
            let top = r.leading().clone();
            // r <- lc(g) * r - top * x^(dr-dg) * g
            let mut next = vec![BigInt::zero(); dr]; // degree drops by at least 1
            for (i, c) in r.coeffs.iter().take(dr).enumerate() {
                next[i] = c * &lead;
            }
            for (i, c) in g.coeffs.iter().take(dg).enumerate() {
                next[i + dr - dg] -= &top * c;
            }
            r = Self::new(next);
            scale_left -= 1;
        }
        if scale_left > 0 {
            r = r.scale(&num_traits::pow(lead.clone(), scale_left));
        }
        // total multiplier so far is lc(g)^(df-dg+1); flip the remainder's
        // sign when that multiplier is negative and of odd power
        if lead.is_negative() && (df - dg + 1) % 2 == 1 {
            r = r.neg();
        }
        r
    }

    /// Primitive GCD with positive leading coefficient (primitive PRS).
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return normalize_sign(other.primitive_part());
        }
        if other.is_zero() {
            return normalize_sign(self.primitive_part());
        }
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = a.pseudo_rem_pos(&b);
            if r.is_zero() {
                return normalize_sign(b);
            }
            a = b;
            b = r.primitive_part();
        }
    }

    /// `self` with repeated roots collapsed: `self / gcd(self, self')`,
    /// normalized to a positive leading coefficient.
    pub fn squarefree_part(&self) -> Self {
        let d = self.derivative();
        if d.is_zero() {
            // constant or zero polynomial
            return normalize_sign(self.primitive_part());
        }
        let g = self.gcd(&d);
        let q = self
            .primitive_part()
            .exact_div(&g)
            .expect("gcd divides the primitive part");
        normalize_sign(q)
    }

    /// Sign of `self(x)` for rational `x`, computed exactly.
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let deg = self.degree().unwrap();
        let num = x.numer();
        let den = x.denom(); // positive by BigRational normalization
        let mut acc = self.coeffs[deg].clone();
        let mut den_pow = BigInt::one();
        for i in (0..deg).rev() {
            den_pow *= den;
            acc = acc * num + &self.coeffs[i] * &den_pow;
        }
        bigint_sign(&acc)
    }

    /// Sign of the value at +infinity (sign of the leading coefficient).
    pub fn sign_at_pos_inf(&self) -> i32 {
        if self.is_zero() {
            0
        } else {
            bigint_sign(self.leading())
        }
    }

    /// Evaluates at a rational point, exactly.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// Fujiwara-style bound: every real root has absolute value below the
    /// returned (strictly positive) integer.
    pub fn root_bound(&self) -> BigInt {
        let deg = self.degree().expect("root bound of the zero polynomial");
        assert!(deg >= 1, "constants have no roots");
        let lead = self.leading().abs();
        let mut best = BigInt::one();
        for k in 1..=deg {
            let c = self.coeffs[deg - k].abs();
            if c.is_zero() {
                continue;
            }
            // ceil(|c| / lead), then integer k-th root rounded up
            let q = (&c + &lead - BigInt::one()) / &lead;
            let root = q.nth_root(k as u32) + BigInt::one();
            best = best.max(root);
        }
        BigInt::from(2) * best + BigInt::one()
    }
}

fn bigint_sign(x: &BigInt) -> i32 {
    match x.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

fn normalize_sign(p: IntPoly) -> IntPoly {
    if !p.is_zero() && p.leading().is_negative() {
        p.neg()
    } else {
        p
    }
}

/// Sturm chain of a squarefree polynomial. Each entry equals the classical
/// chain element up to a positive factor.
#[derive(Debug, Clone)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Self {
        let p = p.primitive_part();
        assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
        let mut chain = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(d.primitive_part());
            loop {
                let [a, b] = &chain[chain.len() - 2..] else { unreachable!() };
                if b.degree().is_none() || a.degree() < b.degree() {
                    break;
                }
                let r = a.pseudo_rem_pos(b);
                if r.is_zero() {
                    break;
                }
                chain.push(r.primitive_part().neg());
                if chain.last().unwrap().degree() == Some(0) {
                    break;
                }
            }
        }
        SturmChain { chain }
    }

    /// Sign-variation count at `x`, zeros skipped.
    pub fn variations_at(&self, x: &BigRational) -> usize {
        count_variations(self.chain.iter().map(|p| p.sign_at(x)))
    }

    /// Sign-variation count at +infinity.
    pub fn variations_at_pos_inf(&self) -> usize {
        count_variations(self.chain.iter().map(|p| p.sign_at_pos_inf()))
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    /// Requires `a <= b`.
    pub fn roots_in(&self, a: &BigRational, b: &BigRational) -> usize {
        debug_assert!(a <= b);
        self.variations_at(a) - self.variations_at(b)
    }
}

fn count_variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut count = 0;
    let mut last = 0;
    for s in signs {
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Parses a decimal or scientific-notation literal ("0.001", "1e-12", "2.5e3")
/// into an exact rational.
pub fn rational_from_decimal_str(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i64>().ok()?),
        None => (s, 0),
    };
    let (mant, frac_digits) = match mant.find('.') {
        Some(i) => {
            let joined = format!("{}{}", &mant[..i], &mant[i + 1..]);
            (joined, (mant.len() - i - 1) as i64)
        }
        None => (mant.to_string(), 0),
    };
    let mantissa: BigInt = mant.parse().ok()?;
    let shift = exp - frac_digits;
    let ten = BigInt::from(10);
    if shift >= 0 {
        Some(BigRational::from(mantissa * num_traits::pow(ten, shift as usize)))
    } else {
        Some(BigRational::new(mantissa, num_traits::pow(ten, (-shift) as usize)))
    }
}
