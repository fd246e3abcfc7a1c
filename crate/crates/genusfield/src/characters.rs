//! Dirichlet-character data for the non-Kummer branch: order-l characters
//! modulo an irreducible P, the unique degree-l subfield L_P of the P-th
//! cyclotomic function field, and the product group that cuts out the genus
//! field.
//!
//! Characters are never materialized as complex-valued maps; everything the
//! computation consumes is the induced F_l linear algebra, so a character is an
//! exponent vector relative to the canonical generator of (R_T/P)*.

use crate::error::{Error, Result};
use crate::extension::rref;
use crate::gf::{factor_u64, FieldDesc};
use crate::polyring::{self, Poly};

/// Largest residue group (R_T/P)* the generator scan will walk.
pub const GROUP_SCAN_BOUND: u64 = 1 << 20;

/// The unique degree-`ell` subfield of the P-th cyclotomic function field;
/// uniqueness is structural because (R_T/P)* is cyclic, so the type carries
/// no character choice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicSubfield {
    pub prime: Poly,
    pub ell: u64,
}

/// Order of the residue group (R_T/P)*, i.e. q^deg(P) - 1.
pub fn residue_group_order(field: &FieldDesc, p: &Poly) -> Result<u64> {
    let mut power: u128 = 1;
    for _ in 0..p.deg() {
        power *= field.q() as u128;
        if power - 1 > GROUP_SCAN_BOUND as u128 {
            return Err(Error::GroupTooLarge(
                power.min(u64::MAX as u128) as u64 - 1,
                GROUP_SCAN_BOUND,
            ));
        }
    }
    Ok(power as u64 - 1)
}

/// The canonical generator of (R_T/P)*: the representative of smallest
/// (degree, lex) order among polynomials of degree < deg P that generate the
/// group, verified through the factorization of q^deg(P) - 1.
pub fn canonical_unit_generator(field: &FieldDesc, p: &Poly) -> Result<Poly> {
    if !p.is_monic(field) || !polyring::is_irreducible(field, p) {
        return Err(Error::InvalidSpec(format!(
            "{} is not monic irreducible",
            polyring::render_poly(field, p)
        )));
    }
    let order = residue_group_order(field, p)?;
    if order > GROUP_SCAN_BOUND {
        return Err(Error::GroupTooLarge(order, GROUP_SCAN_BOUND));
    }
    let prime_divisors: Vec<u64> = factor_u64(order).into_iter().map(|(r, _)| r).collect();
    let one = Poly::one(field);
    // candidates of degree < deg P in (degree, lex) order
    let elems: Vec<_> = field.elements().collect();
    let d = p.deg();
    for deg in 0..d {
        let mut total: u64 = 1;
        for _ in 0..=deg {
            total *= field.q();
        }
        let per_digit = field.q();
        let digits = deg + 1;
        for k in 0..total {
            let mut coeffs = Vec::with_capacity(digits);
            let mut v = k;
            let mut tuple = vec![0u64; digits];
            for i in (0..digits).rev() {
                tuple[i] = v % per_digit;
                v /= per_digit;
            }
            for t in &tuple {
                coeffs.push(elems[*t as usize].clone());
            }
            let cand = Poly::from_coeffs(coeffs);
            if cand.is_zero() || cand.degree() != Some(deg) {
                continue;
            }
            let is_generator = prime_divisors.iter().all(|&r| {
                polyring::powmod(field, &cand, (order / r) as u128, p).unwrap() != one
            });
            if is_generator {
                return Ok(cand);
            }
        }
    }
    unreachable!("(R_T/P)* is cyclic")
}

/// Spec for an elementary abelian l-extension with l not dividing q - 1:
/// ramified primes P_i plus an r x m exponent matrix over F_l selecting the
/// order-l characters that cut out the K_j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonKummerSpec {
    field: FieldDesc,
    l: u64,
    primes: Vec<Poly>,
    c: Vec<Vec<u64>>,
    twisted: bool,
}

impl NonKummerSpec {
    pub fn field(&self) -> &FieldDesc {
        &self.field
    }
    pub fn l(&self) -> u64 {
        self.l
    }
    pub fn primes(&self) -> &[Poly] {
        &self.primes
    }
    pub fn c_matrix(&self) -> &[Vec<u64>] {
        &self.c
    }
    pub fn twisted(&self) -> bool {
        self.twisted
    }
    pub fn r(&self) -> usize {
        self.primes.len()
    }
    pub fn m(&self) -> usize {
        self.c.first().map(|r| r.len()).unwrap_or(0)
    }
}

/// Validate a non-Kummer spec. Requirements: l prime, l != p, l does not
/// divide q - 1; the P_i are distinct monic irreducibles with
/// l | q^deg(P_i) - 1 (otherwise no order-l character of conductor P_i
/// exists); C has no zero row and rank m.
pub fn build_nonkummer_spec(
    field: &FieldDesc,
    l: u64,
    primes: Vec<Poly>,
    c: Vec<Vec<u64>>,
    twisted: bool,
) -> Result<NonKummerSpec> {
    if !crate::gf::is_prime_u64(l) {
        return Err(Error::NotPrime(l));
    }
    if l == field.p() {
        return Err(Error::WildPrime(field.p()));
    }
    if (field.q() - 1) % l == 0 {
        return Err(Error::InvalidSpec(format!(
            "l = {l} divides q - 1 = {}; use the Kummer path",
            field.q() - 1
        )));
    }
    if primes.is_empty() {
        return Err(Error::InvalidSpec("no ramified primes".into()));
    }
    for p in &primes {
        if !p.is_monic(field) || !polyring::is_irreducible(field, p) {
            return Err(Error::InvalidSpec(format!(
                "{} is not monic irreducible",
                polyring::render_poly(field, p)
            )));
        }
        let order = residue_group_order(field, p)?;
        if order % l != 0 {
            return Err(Error::InvalidSpec(format!(
                "no character of order {l} modulo {}: {l} does not divide q^{} - 1 = {order}",
                polyring::render_poly(field, p),
                p.deg()
            )));
        }
    }
    for i in 0..primes.len() {
        for j in i + 1..primes.len() {
            if primes[i] == primes[j] {
                return Err(Error::InvalidSpec(format!(
                    "repeated prime {}",
                    polyring::render_poly(field, &primes[i])
                )));
            }
        }
    }
    if c.len() != primes.len() {
        return Err(Error::InvalidSpec(format!(
            "C has {} rows but there are {} primes",
            c.len(),
            primes.len()
        )));
    }
    let m = c.first().map(|r| r.len()).unwrap_or(0);
    if m == 0 || c.iter().any(|row| row.len() != m) {
        return Err(Error::InvalidSpec("C must be a rectangular r x m matrix".into()));
    }
    let c: Vec<Vec<u64>> = c
        .into_iter()
        .map(|row| row.into_iter().map(|x| x % l).collect())
        .collect();
    for (i, row) in c.iter().enumerate() {
        if row.iter().all(|&x| x == 0) {
            return Err(Error::UnramifiedListedPrime(polyring::render_poly(
                field, &primes[i],
            )));
        }
    }
    let mut echelon = c.clone();
    if rref(&mut echelon, l) < m {
        return Err(Error::InvalidSpec(
            "character matrix C does not have rank m".into(),
        ));
    }
    // canonical prime order: l | deg block first, then (degree, lex);
    // C rows travel with their primes
    let mut paired: Vec<(Poly, Vec<u64>)> = primes.into_iter().zip(c).collect();
    paired.sort_by(|(a, _), (b, _)| {
        let ka = (a.deg() as u64 % l != 0) as u8;
        let kb = (b.deg() as u64 % l != 0) as u8;
        ka.cmp(&kb).then_with(|| a.cmp_deglex(b))
    });
    let (primes, c): (Vec<Poly>, Vec<Vec<u64>>) = paired.into_iter().unzip();
    Ok(NonKummerSpec {
        field: field.clone(),
        l,
        primes,
        c,
        twisted,
    })
}

/// e_P(K|k) = |X_P| = l^(0 or 1): l exactly when row i of C is nonzero,
/// which validation guarantees for every listed prime.
pub fn ramification_via_characters(spec: &NonKummerSpec, prime: &Poly) -> Result<u64> {
    let i = spec
        .primes
        .iter()
        .position(|p| p == prime)
        .ok_or_else(|| Error::PrimeNotListed(polyring::render_poly(&spec.field, prime)))?;
    if spec.c[i].iter().all(|&x| x == 0) {
        return Err(Error::UnramifiedListedPrime(polyring::render_poly(
            &spec.field,
            prime,
        )));
    }
    Ok(spec.l)
}

/// The field associated with the product group Y = prod X_P: the compositum
/// of the degree-l cyclotomic subfields L_1, ..., L_r.
pub fn product_group_field(spec: &NonKummerSpec) -> Vec<CyclotomicSubfield> {
    spec.primes
        .iter()
        .map(|p| CyclotomicSubfield {
            prime: p.clone(),
            ell: spec.l,
        })
        .collect()
}
