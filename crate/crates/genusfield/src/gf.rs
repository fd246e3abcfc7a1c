//! Exact arithmetic in F_q = F_{p^n} and the multiplicative-group structure
//! needed for l-th power tests.
//!
//! Elements are polynomials in `u` of degree < n over Z/p, reduced modulo a
//! monic irreducible modulus. Both the modulus (when not supplied) and the
//! generator of F_q* are fixed by a lexicographic scan, so field descriptions
//! are reproducible across runs and implementations.

use arrayvec::ArrayVec;

use crate::error::{Error, Result};

/// Largest supported field size. With q <= 181 every group order q^d - 1
/// used by the library (d <= 8) stays below 2^63.
pub const Q_MAX: u64 = 181;

/// Inline digit storage; q <= Q_MAX forces n <= 7.
type Digits = ArrayVec<u64, 8>;

pub(crate) fn is_prime_u64(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= x {
        if x % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization by trial division; inputs are bounded by `Q_MAX^8`.
pub(crate) fn factor_u64(mut x: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= x {
        if x % d == 0 {
            let mut e = 0;
            while x % d == 0 {
                x /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if x > 1 {
        out.push((x, 1));
    }
    out
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

// ---------------------------------------------------------------------------
// Polynomials over Z/p, used only to manage the modulus of F_q.
// Coefficient vectors are indexed by degree and keep no trailing zeros.
// ---------------------------------------------------------------------------

fn fp_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_mul(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_trim(&mut out);
    out
}

fn fp_rem(p: u64, a: &[u64], m: &[u64]) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    fp_trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = mod_inv(*m.last().unwrap(), p);
    while r.len() > dm {
        let k = r.len() - 1 - dm;
        let c = (*r.last().unwrap() * lead_inv) % p;
        for i in 0..m.len() {
            let idx = k + i;
            r[idx] = (r[idx] + p - c * m[i] % p) % p;
        }
        fp_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn fp_gcd(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    fp_trim(&mut x);
    fp_trim(&mut y);
    while !y.is_empty() {
        let r = fp_rem(p, &x, &y);
        x = y;
        y = r;
    }
    x
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // p prime, a != 0 mod p
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// x^(p^k) mod m, all over Z/p.
fn fp_frobenius_pow(p: u64, x: &[u64], k: u32, m: &[u64]) -> Vec<u64> {
    let mut acc = x.to_vec();
    for _ in 0..k {
        // acc = acc^p mod m by square-and-multiply on the exponent p
        let mut res = vec![1u64];
        let mut base = acc.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                res = fp_rem(p, &fp_mul(p, &res, &base), m);
            }
            base = fp_rem(p, &fp_mul(p, &base, &base), m);
            e >>= 1;
        }
        acc = res;
    }
    acc
}

fn fp_is_irreducible(p: u64, f: &[u64]) -> bool {
    let n = f.len() - 1;
    if n == 0 {
        return false;
    }
    // x^(p^n) == x mod f, and gcd(x^(p^(n/t)) - x, f) = 1 for prime t | n
    let x = vec![0u64, 1];
    let xq = fp_frobenius_pow(p, &x, n as u32, f);
    let mut diff = xq.clone();
    diff.resize(diff.len().max(2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    fp_trim(&mut diff);
    if !fp_rem(p, &diff, f).is_empty() {
        return false;
    }
    for (t, _) in factor_u64(n as u64) {
        let k = n as u64 / t;
        let xk = fp_frobenius_pow(p, &x, k as u32, f);
        let mut d = xk.clone();
        d.resize(d.len().max(2), 0);
        d[1] = (d[1] + p - 1) % p;
        fp_trim(&mut d);
        if d.is_empty() {
            return false; // x^(p^k) == x would mean a factor of degree dividing k
        }
        let g = fp_gcd(p, &d, f);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Field elements
// ---------------------------------------------------------------------------

/// An element of F_q, stored inline as the coefficient vector of a
/// polynomial in `u` of degree < n, constant term first, digits in [0, p).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqElem {
    coeffs: Digits,
}

impl FqElem {
    fn from_digits(v: impl IntoIterator<Item = u64>) -> Self {
        FqElem {
            coeffs: v.into_iter().collect(),
        }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// Description of F_q = F_p[u]/(modulus). Equality ignores the cached
/// generator, which is a function of (p, n, modulus).
#[derive(Debug, Clone)]
pub struct FieldDesc {
    p: u64,
    n: usize,
    q: u64,
    modulus: Vec<u64>, // length n+1, monic
    g0: FqElem,        // canonical generator of F_q*
}

impl PartialEq for FieldDesc {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.n == other.n && self.modulus == other.modulus
    }
}
impl Eq for FieldDesc {}

/// Build F_{p^n}. When `modulus` is omitted, the canonical modulus is the
/// lexicographically smallest monic irreducible of degree n (coefficient
/// tuple read from the constant term up).
pub fn make_field(p: u64, n: usize, modulus: Option<Vec<u64>>) -> Result<FieldDesc> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::DegreeMismatch { want: 1, got: 0 });
    }
    let mut q: u64 = 1;
    for _ in 0..n {
        q = q.saturating_mul(p);
        if q > Q_MAX {
            return Err(Error::FieldTooLarge(q, Q_MAX));
        }
    }
    let modulus = match modulus {
        Some(mut m) => {
            for c in m.iter_mut() {
                *c %= p;
            }
            fp_trim(&mut m);
            if m.len() != n + 1 {
                return Err(Error::DegreeMismatch {
                    want: n,
                    got: m.len().saturating_sub(1),
                });
            }
            if *m.last().unwrap() != 1 {
                return Err(Error::NotMonic);
            }
            if !fp_is_irreducible(p, &m) {
                return Err(Error::ReducibleModulus(p));
            }
            m
        }
        None => canonical_modulus(p, n),
    };
    let mut field = FieldDesc {
        p,
        n,
        q,
        modulus,
        g0: FqElem::from_digits(std::iter::repeat(0).take(n)),
    };
    field.g0 = canonical_generator(&field);
    Ok(field)
}

fn canonical_modulus(p: u64, n: usize) -> Vec<u64> {
    // Scan monic degree-n polynomials in lexicographic order of the
    // coefficient tuple, constant term most significant.
    let total = p.pow(n as u32);
    for k in 0..total {
        let mut digits = vec![0u64; n];
        let mut v = k;
        for i in (0..n).rev() {
            digits[i] = v % p;
            v /= p;
        }
        digits.push(1);
        if fp_is_irreducible(p, &digits) {
            return digits;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

fn canonical_generator(field: &FieldDesc) -> FqElem {
    let order = field.q - 1;
    if order == 1 {
        return field.one();
    }
    let primes: Vec<u64> = factor_u64(order).into_iter().map(|(r, _)| r).collect();
    for x in field.elements() {
        if x.is_zero() {
            continue;
        }
        if primes
            .iter()
            .all(|&r| field.pow(&x, order / r) != field.one())
        {
            return x;
        }
    }
    unreachable!("F_q* is cyclic")
}

impl FieldDesc {
    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn q(&self) -> u64 {
        self.q
    }
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }
    /// The canonical generator of F_q* (lexicographically smallest).
    pub fn generator(&self) -> &FqElem {
        &self.g0
    }

    pub fn zero(&self) -> FqElem {
        FqElem::from_digits(std::iter::repeat(0).take(self.n))
    }
    pub fn one(&self) -> FqElem {
        self.from_int(1)
    }
    pub fn minus_one(&self) -> FqElem {
        self.from_int(self.p - 1)
    }
    pub fn from_int(&self, c: u64) -> FqElem {
        let mut out = self.zero();
        out.coeffs[0] = c % self.p;
        out
    }

    /// Element from coefficient digits (constant term first); digits are
    /// reduced mod p and the vector padded or rejected by length.
    pub fn elem(&self, coeffs: Vec<u64>) -> Result<FqElem> {
        if coeffs.len() > self.n {
            return Err(Error::DegreeMismatch {
                want: self.n,
                got: coeffs.len(),
            });
        }
        let mut out = self.zero();
        for (i, c) in coeffs.into_iter().enumerate() {
            out.coeffs[i] = c % self.p;
        }
        Ok(out)
    }

    /// All q elements in lexicographic order of the coefficient tuple
    /// (constant term most significant, matching `FqElem`'s `Ord`).
    pub fn elements(&self) -> impl Iterator<Item = FqElem> + '_ {
        let n = self.n;
        let p = self.p;
        (0..self.q).map(move |idx| {
            let mut out = FqElem::from_digits(std::iter::repeat(0).take(n));
            let mut v = idx;
            for i in (0..n).rev() {
                out.coeffs[i] = v % p;
                v /= p;
            }
            out
        })
    }

    pub fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        FqElem::from_digits(
            a.coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| (x + y) % self.p),
        )
    }

    pub fn sub(&self, a: &FqElem, b: &FqElem) -> FqElem {
        FqElem::from_digits(
            a.coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| (x + self.p - y) % self.p),
        )
    }

    pub fn neg(&self, a: &FqElem) -> FqElem {
        self.sub(&self.zero(), a)
    }

    pub fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let p = self.p;
        let n = self.n;
        if n == 1 {
            return FqElem::from_digits([a.coeffs[0] * b.coeffs[0] % p]);
        }
        // schoolbook product with lazy reduction; entries stay far below
        // u64 overflow since n <= 7 and p <= 181
        let mut prod = [0u64; 16];
        for i in 0..n {
            let x = a.coeffs[i];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                prod[i + j] += x * b.coeffs[j];
            }
        }
        // fold x^i for i >= n using x^n = -(m_0 + ... + m_{n-1} x^{n-1})
        for i in (n..2 * n - 1).rev() {
            let c = prod[i] % p;
            if c != 0 {
                for j in 0..n {
                    prod[i - n + j] += c * (p - self.modulus[j]);
                }
            }
            prod[i] = 0;
        }
        FqElem::from_digits((0..n).map(|i| prod[i] % p))
    }

    pub fn inv(&self, a: &FqElem) -> Result<FqElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, self.q - 2))
    }

    pub fn div(&self, a: &FqElem, b: &FqElem) -> Result<FqElem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Square-and-multiply; `pow(0, 0) = 1` by convention.
    pub fn pow(&self, a: &FqElem, mut e: u64) -> FqElem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// True iff x is an l-th power in F_q*: x^((q-1)/g) = 1 with
    /// g = gcd(l, q-1). For g = 1 every element is an l-th power.
    pub fn is_lth_power(&self, x: &FqElem, l: u64) -> bool {
        assert!(!x.is_zero(), "is_lth_power requires a unit");
        let g = gcd_u64(l, self.q - 1);
        if g == 1 {
            return true;
        }
        self.pow(x, (self.q - 1) / g) == self.one()
    }

    /// The class of x in F_q*/(F_q*)^l as an exponent of the canonical
    /// generator: the i in [0, g) with x = g0^i mod (F_q*)^l.
    pub fn power_class(&self, x: &FqElem, l: u64) -> u64 {
        assert!(!x.is_zero(), "power_class requires a unit");
        let g = gcd_u64(l, self.q - 1);
        if g == 1 {
            return 0;
        }
        let e = (self.q - 1) / g;
        let h = self.pow(&self.g0, e);
        let t = self.pow(x, e);
        let mut acc = self.one();
        for i in 0..g {
            if t == acc {
                return i;
            }
            acc = self.mul(&acc, &h);
        }
        unreachable!("the power residue classes are exhausted by g0")
    }

    /// The canonical representative g0^c of a power class.
    pub fn class_rep(&self, c: u64) -> FqElem {
        self.pow(&self.g0, c)
    }

    // -- element text format ------------------------------------------------

    /// Render an element: a bare integer for prime fields, a polynomial in
    /// `u` otherwise (descending powers, e.g. "u+2").
    pub fn render(&self, x: &FqElem) -> String {
        if self.n == 1 {
            return x.coeffs[0].to_string();
        }
        let mut parts = Vec::new();
        for i in (0..self.n).rev() {
            let c = x.coeffs[i];
            if c == 0 {
                continue;
            }
            let part = match i {
                0 => c.to_string(),
                1 if c == 1 => "u".to_string(),
                1 => format!("{c}*u"),
                _ if c == 1 => format!("u^{i}"),
                _ => format!("{c}*u^{i}"),
            };
            parts.push(part);
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }

    /// Parse an element literal: integers, `u`-monomials and their sums,
    /// e.g. "6", "u+2", "2*u^2+1". Exponents of `u` beyond n reduce modulo
    /// the field modulus.
    pub fn parse(&self, text: &str) -> Result<FqElem> {
        let s: Vec<char> = text.chars().collect();
        let mut pos = 0usize;
        let mut acc = vec![0u64]; // Fp-poly in u, degree-indexed
        let mut sign_neg = false;
        // leading sign
        skip_ws(&s, &mut pos);
        if pos < s.len() && (s[pos] == '+' || s[pos] == '-') {
            sign_neg = s[pos] == '-';
            pos += 1;
        }
        loop {
            skip_ws(&s, &mut pos);
            let term = self.parse_u_term(&s, &mut pos)?;
            let term = if sign_neg {
                term.iter().map(|&c| (self.p - c % self.p) % self.p).collect()
            } else {
                term
            };
            // acc += term
            if term.len() > acc.len() {
                acc.resize(term.len(), 0);
            }
            for (i, &c) in term.iter().enumerate() {
                acc[i] = (acc[i] + c) % self.p;
            }
            skip_ws(&s, &mut pos);
            if pos >= s.len() {
                break;
            }
            match s[pos] {
                '+' => {
                    sign_neg = false;
                    pos += 1;
                }
                '-' => {
                    sign_neg = true;
                    pos += 1;
                }
                _ => {
                    return Err(Error::SyntaxError {
                        pos,
                        msg: format!("unexpected character '{}'", s[pos]),
                    })
                }
            }
        }
        let red = fp_rem(self.p, &acc, &self.modulus);
        self.elem(red)
    }

    /// One term of an element literal: INT, u, u^k, INT*u, INT*u^k.
    fn parse_u_term(&self, s: &[char], pos: &mut usize) -> Result<Vec<u64>> {
        let mut coef = 1u64;
        let mut upow: Option<usize> = None;
        let mut saw_any = false;
        loop {
            skip_ws(s, pos);
            if *pos >= s.len() {
                break;
            }
            let c = s[*pos];
            if c.is_ascii_digit() {
                let v = parse_int(s, pos)?;
                coef = coef * (v % self.p) % self.p;
                saw_any = true;
            } else if c == 'u' {
                if self.n == 1 {
                    return Err(Error::UnknownCoefficient { pos: *pos });
                }
                *pos += 1;
                let e = if *pos < s.len() && s[*pos] == '^' {
                    *pos += 1;
                    parse_int(s, pos)? as usize
                } else {
                    1
                };
                if upow.is_some() {
                    return Err(Error::SyntaxError {
                        pos: *pos,
                        msg: "repeated u factor".into(),
                    });
                }
                upow = Some(e);
                saw_any = true;
            } else {
                break;
            }
            skip_ws(s, pos);
            if *pos < s.len() && s[*pos] == '*' {
                *pos += 1;
                continue;
            }
            break;
        }
        if !saw_any {
            return Err(Error::SyntaxError {
                pos: *pos,
                msg: "expected coefficient".into(),
            });
        }
        let deg = upow.unwrap_or(0);
        let mut out = vec![0u64; deg + 1];
        out[deg] = coef;
        Ok(out)
    }
}

pub(crate) fn skip_ws(s: &[char], pos: &mut usize) {
    while *pos < s.len() && s[*pos].is_whitespace() {
        *pos += 1;
    }
}

pub(crate) fn parse_int(s: &[char], pos: &mut usize) -> Result<u64> {
    let start = *pos;
    let mut v: u64 = 0;
    while *pos < s.len() && s[*pos].is_ascii_digit() {
        v = v
            .checked_mul(10)
            .and_then(|x| x.checked_add(s[*pos] as u64 - '0' as u64))
            .ok_or(Error::SyntaxError {
                pos: *pos,
                msg: "integer overflow".into(),
            })?;
        *pos += 1;
    }
    if *pos == start {
        return Err(Error::SyntaxError {
            pos: *pos,
            msg: "expected integer".into(),
        });
    }
    Ok(v)
}
