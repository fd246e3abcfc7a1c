//! Normalization and validation of the extension K/k, the ramified prime
//! support with its exponent matrix, the degree-l subfield family, and the
//! Kummer lattice that represents every field in play.
//!
//! A Kummer lattice is a finite subgroup of k*/(k*)^l presented by exponent
//! vectors over a prime support plus one constant-class coordinate. Fields,
//! composita and containments all become F_l linear algebra in this
//! presentation: same field iff same canonical lattice.

use crate::error::{Error, Result};
use crate::gf::{FieldDesc, FqElem};
use crate::polyring::{self, Poly, DEFAULT_SEED};

// ---------------------------------------------------------------------------
// F_l linear algebra helpers
// ---------------------------------------------------------------------------

pub(crate) fn mod_inverse(a: u64, l: u64) -> u64 {
    // l prime, a != 0 mod l
    let mut acc = 1u64;
    let mut b = a % l;
    let mut e = l - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % l;
        }
        b = b * b % l;
        e >>= 1;
    }
    acc
}

/// In-place reduced row echelon form over F_l; drops zero rows and returns
/// the rank.
pub(crate) fn rref(rows: &mut Vec<Vec<u64>>, l: u64) -> usize {
    for row in rows.iter_mut() {
        for x in row.iter_mut() {
            *x %= l;
        }
    }
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivot = 0usize;
    for col in 0..ncols {
        if pivot >= rows.len() {
            break;
        }
        let Some(sel) = (pivot..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(pivot, sel);
        let inv = mod_inverse(rows[pivot][col], l);
        for x in rows[pivot].iter_mut() {
            *x = *x * inv % l;
        }
        for r in 0..rows.len() {
            if r != pivot && rows[r][col] != 0 {
                let c = rows[r][col];
                for j in 0..ncols {
                    let sub = c * rows[pivot][j] % l;
                    rows[r][j] = (rows[r][j] + l - sub) % l;
                }
            }
        }
        pivot += 1;
    }
    rows.retain(|r| r.iter().any(|&x| x != 0));
    rows.len()
}

/// Reduce `row` against an RREF basis; the remainder is zero iff `row` lies
/// in the span.
pub(crate) fn reduce_against(row: &mut [u64], basis: &[Vec<u64>], l: u64) {
    for x in row.iter_mut() {
        *x %= l;
    }
    for b in basis {
        let p = b.iter().position(|&x| x != 0).expect("no zero basis rows");
        let c = row[p];
        if c != 0 {
            for j in 0..row.len() {
                let sub = c * b[j] % l;
                row[j] = (row[j] + l - sub) % l;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Generators and specs
// ---------------------------------------------------------------------------

/// One radical k(l-th root of gamma * D) in normal form: gamma a unit,
/// D monic and l-power-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalGenerator {
    pub gamma: FqElem,
    pub d: Poly,
}

fn radical_parts(
    field: &FieldDesc,
    l: u64,
    a: &FqElem,
    big_a: &Poly,
) -> Result<(FqElem, Vec<(Poly, u64)>)> {
    radical_parts_seeded(field, l, a, big_a, DEFAULT_SEED)
}

fn radical_parts_seeded(
    field: &FieldDesc,
    l: u64,
    a: &FqElem,
    big_a: &Poly,
    seed: u64,
) -> Result<(FqElem, Vec<(Poly, u64)>)> {
    if a.is_zero() || big_a.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let fact = polyring::factor(field, big_a, seed)?;
    let gamma = field.mul(a, &fact.unit);
    let factors: Vec<(Poly, u64)> = fact
        .factors
        .into_iter()
        .filter_map(|(p, e)| {
            let e = e % l;
            (e != 0).then_some((p, e))
        })
        .collect();
    Ok((gamma, factors))
}

fn expand_factors(field: &FieldDesc, factors: &[(Poly, u64)]) -> Poly {
    let mut acc = Poly::one(field);
    for (p, e) in factors {
        for _ in 0..*e {
            acc = polyring::mul(field, &acc, p);
        }
    }
    acc
}

/// Write a*A = gamma * f^l * D with D monic l-power-free; returns (gamma, D).
pub fn normalize_generator(
    field: &FieldDesc,
    a: &FqElem,
    big_a: &Poly,
    l: u64,
) -> Result<RadicalGenerator> {
    let (gamma, factors) = radical_parts(field, l, a, big_a)?;
    Ok(RadicalGenerator {
        gamma,
        d: expand_factors(field, &factors),
    })
}

/// A validated elementary abelian Kummer spec: l | q - 1, l != p, and the
/// exponent matrix of the normalized generators has full rank m over F_l
/// (Galois group C_l^m plus geometricity).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionSpec {
    field: FieldDesc,
    l: u64,
    generators: Vec<RadicalGenerator>,
    factored: Vec<Vec<(Poly, u64)>>,
}

impl ExtensionSpec {
    pub fn field(&self) -> &FieldDesc {
        &self.field
    }
    pub fn l(&self) -> u64 {
        self.l
    }
    pub fn generators(&self) -> &[RadicalGenerator] {
        &self.generators
    }
    pub fn m(&self) -> usize {
        self.generators.len()
    }
    pub(crate) fn factored(&self) -> &[Vec<(Poly, u64)>] {
        &self.factored
    }

    /// xi_j = (-1)^(deg D_j) * gamma_j; K_j lies in a cyclotomic function
    /// field iff xi_j is an l-th power.
    pub fn xi(&self, j: usize) -> FqElem {
        let g = &self.generators[j];
        let n = g.d.deg() as u64;
        let sign = self.field.pow(&self.field.minus_one(), n);
        self.field.mul(&sign, &g.gamma)
    }

    /// The lattice of K itself.
    pub fn k_lattice(&self) -> KummerLattice {
        let rads: Vec<(FqElem, Poly)> = self
            .generators
            .iter()
            .map(|g| (g.gamma.clone(), g.d.clone()))
            .collect();
        KummerLattice::span(&self.field, self.l, &rads).expect("validated generators")
    }
}

/// Normalize and validate raw generators into an [`ExtensionSpec`].
pub fn build_spec(
    field: &FieldDesc,
    l: u64,
    raw: &[(FqElem, Poly)],
) -> Result<ExtensionSpec> {
    build_spec_seeded(field, l, raw, DEFAULT_SEED)
}

/// `build_spec` with an explicit factorization seed; the normalized spec is
/// seed-invariant because factor lists are sorted.
pub fn build_spec_seeded(
    field: &FieldDesc,
    l: u64,
    raw: &[(FqElem, Poly)],
    seed: u64,
) -> Result<ExtensionSpec> {
    let mut parts = Vec::with_capacity(raw.len());
    for (a, big_a) in raw {
        parts.push(radical_parts_seeded(field, l, a, big_a, seed)?);
    }
    build_spec_prefactored(field, l, &parts)
}

/// Fast-path spec construction from radicands in factored form: each entry
/// is (unit, factor list). Exponents are reduced mod l and zero exponents
/// dropped; the factors of one radicand must be distinct monic irreducibles
/// (callers that enumerate products of irreducibles have this for free).
pub fn build_spec_prefactored(
    field: &FieldDesc,
    l: u64,
    parts: &[(FqElem, Vec<(Poly, u64)>)],
) -> Result<ExtensionSpec> {
    if !crate::gf::is_prime_u64(l) {
        return Err(Error::NotPrime(l));
    }
    if l == field.p() {
        return Err(Error::WildPrime(field.p()));
    }
    if (field.q() - 1) % l != 0 {
        return Err(Error::NotKummer {
            l,
            qm1: field.q() - 1,
        });
    }
    if parts.is_empty() {
        return Err(Error::InvalidSpec("no generators".into()));
    }
    let mut generators = Vec::with_capacity(parts.len());
    let mut factored = Vec::with_capacity(parts.len());
    for (gamma, raw_factors) in parts {
        if gamma.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut factors: Vec<(Poly, u64)> = raw_factors
            .iter()
            .filter_map(|(p, e)| {
                let e = e % l;
                (e != 0).then(|| (p.clone(), e))
            })
            .collect();
        factors.sort_by(|a, b| a.0.cmp_deglex(&b.0));
        for (p, _) in &factors {
            if !p.is_monic(field) || p.is_constant() {
                return Err(Error::NotMonic);
            }
        }
        if factors.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidSpec("repeated factor in a radicand".into()));
        }
        if factors.is_empty() {
            return Err(Error::ConstantRadical);
        }
        generators.push(RadicalGenerator {
            gamma: gamma.clone(),
            d: expand_factors(field, &factors),
        });
        factored.push(factors);
    }
    // exponent matrix over the union support; full column rank required
    let support = union_support(&factored);
    let m = generators.len();
    let mut beta: Vec<Vec<u64>> = vec![vec![0; m]; support.len()];
    for (j, fac) in factored.iter().enumerate() {
        for (p, e) in fac {
            let i = support.iter().position(|s| s == p).unwrap();
            beta[i][j] = *e % l;
        }
    }
    let mut echelon = beta.clone();
    let rank = rref(&mut echelon, l);
    if rank < m {
        let witness = kernel_vector(&echelon, m, l);
        return Err(Error::DependentGenerators { witness });
    }
    Ok(ExtensionSpec {
        field: field.clone(),
        l,
        generators,
        factored,
    })
}

fn union_support(factored: &[Vec<(Poly, u64)>]) -> Vec<Poly> {
    let mut support: Vec<Poly> = Vec::new();
    for fac in factored {
        for (p, _) in fac {
            if !support.contains(p) {
                support.push(p.clone());
            }
        }
    }
    support.sort_by(|a, b| a.cmp_deglex(b));
    support
}

/// A nonzero alpha with beta * alpha = 0, first nonzero coordinate 1,
/// extracted from the RREF of beta.
fn kernel_vector(echelon: &[Vec<u64>], m: usize, l: u64) -> Vec<u64> {
    let mut pivots = Vec::new();
    for row in echelon {
        pivots.push(row.iter().position(|&x| x != 0).unwrap());
    }
    let free = (0..m)
        .find(|c| !pivots.contains(c))
        .expect("rank deficit guarantees a free column");
    let mut alpha = vec![0u64; m];
    alpha[free] = 1;
    for (row, &p) in echelon.iter().zip(&pivots) {
        alpha[p] = (l - row[free] % l) % l;
    }
    let first = alpha.iter().position(|&x| x != 0).unwrap();
    let scale = mod_inverse(alpha[first], l);
    for x in alpha.iter_mut() {
        *x = *x * scale % l;
    }
    alpha
}

// ---------------------------------------------------------------------------
// Ramified support
// ---------------------------------------------------------------------------

/// The ramified finite primes of K/k, ordered so that l | deg P_i exactly
/// for the first `s` entries and by (degree, lex) within the two blocks.
/// `beta[i][j]` is the multiplicity of primes[i] in D_j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamifiedSupport {
    pub primes: Vec<Poly>,
    pub degrees: Vec<u64>,
    pub s: usize,
    pub beta: Vec<Vec<u64>>,
}

pub fn ramified_support(spec: &ExtensionSpec) -> RamifiedSupport {
    let l = spec.l;
    let mut primes = union_support(spec.factored());
    primes.sort_by(|a, b| {
        let ka = (a.deg() as u64 % l != 0) as u8;
        let kb = (b.deg() as u64 % l != 0) as u8;
        ka.cmp(&kb).then_with(|| a.cmp_deglex(b))
    });
    let degrees: Vec<u64> = primes.iter().map(|p| p.deg() as u64).collect();
    let s = degrees.iter().filter(|&&d| d % l == 0).count();
    let mut beta = vec![vec![0u64; spec.m()]; primes.len()];
    for (j, fac) in spec.factored().iter().enumerate() {
        for (p, e) in fac {
            let i = primes.iter().position(|s| s == p).unwrap();
            beta[i][j] = *e % l;
        }
    }
    RamifiedSupport {
        primes,
        degrees,
        s,
        beta,
    }
}

impl RamifiedSupport {
    pub fn r(&self) -> usize {
        self.primes.len()
    }
}

// ---------------------------------------------------------------------------
// Degree-l subfields
// ---------------------------------------------------------------------------

/// One of the (l^m - 1)/(l - 1) degree-l subfields F_t = k(l-th root of
/// eta * R), indexed by a projective exponent vector alpha (first nonzero
/// coordinate 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubfieldDatum {
    pub alpha: Vec<u64>,
    pub eta: FqElem,
    pub radicand: Poly,
}

pub fn enumerate_subfields(spec: &ExtensionSpec) -> Vec<SubfieldDatum> {
    let l = spec.l;
    let m = spec.m();
    let field = &spec.field;
    let support = union_support(spec.factored());
    // exponent columns per generator over the union support
    let mut cols: Vec<Vec<u64>> = vec![vec![0; support.len()]; m];
    for (j, fac) in spec.factored().iter().enumerate() {
        for (p, e) in fac {
            let i = support.iter().position(|s| s == p).unwrap();
            cols[j][i] = *e % l;
        }
    }
    let mut out = Vec::new();
    for lead in 0..m {
        let tail = m - lead - 1;
        let mut count: u64 = 1;
        for _ in 0..tail {
            count *= l;
        }
        for idx in 0..count {
            let mut alpha = vec![0u64; m];
            alpha[lead] = 1;
            let mut v = idx;
            for t in (0..tail).rev() {
                alpha[lead + 1 + t] = v % l;
                v /= l;
            }
            let mut eta = field.one();
            for (j, &a) in alpha.iter().enumerate() {
                if a != 0 {
                    eta = field.mul(&eta, &field.pow(&spec.generators[j].gamma, a));
                }
            }
            let mut exps = vec![0u64; support.len()];
            for (j, &a) in alpha.iter().enumerate() {
                for i in 0..support.len() {
                    exps[i] = (exps[i] + a * cols[j][i]) % l;
                }
            }
            let factors: Vec<(Poly, u64)> = support
                .iter()
                .cloned()
                .zip(exps.iter().copied())
                .filter(|(_, e)| *e != 0)
                .collect();
            out.push(SubfieldDatum {
                alpha,
                eta,
                radicand: expand_factors(field, &factors),
            });
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Kummer lattices
// ---------------------------------------------------------------------------

/// A finite subgroup of k*/(k*)^l: rows are exponent vectors over a monic
/// irreducible support plus a trailing constant-class coordinate, kept in
/// reduced row echelon form with all-zero support columns dropped. Two
/// radical extensions coincide iff their lattices are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KummerLattice {
    field: FieldDesc,
    l: u64,
    support: Vec<Poly>,
    rows: Vec<Vec<u64>>, // layout: [exps..., constant class]
}

impl KummerLattice {
    pub fn empty(field: &FieldDesc, l: u64) -> Self {
        KummerLattice {
            field: field.clone(),
            l,
            support: Vec::new(),
            rows: Vec::new(),
        }
    }

    /// Span of radicals gamma * A (A may be constant: a pure constant-class
    /// row represents a constant field extension).
    pub fn span(field: &FieldDesc, l: u64, radicands: &[(FqElem, Poly)]) -> Result<Self> {
        let mut parts = Vec::with_capacity(radicands.len());
        for (a, big_a) in radicands {
            parts.push(radical_parts(field, l, a, big_a)?);
        }
        let mut support: Vec<Poly> = Vec::new();
        for (_, fac) in &parts {
            for (p, _) in fac {
                if !support.contains(p) {
                    support.push(p.clone());
                }
            }
        }
        support.sort_by(|a, b| a.cmp_deglex(b));
        let mut rows = Vec::with_capacity(parts.len());
        for (gamma, fac) in &parts {
            let mut row = vec![0u64; support.len() + 1];
            for (p, e) in fac {
                let i = support.iter().position(|s| s == p).unwrap();
                row[i] = *e % l;
            }
            row[support.len()] = field.power_class(gamma, l);
            rows.push(row);
        }
        Ok(Self::from_parts(field.clone(), l, support, rows))
    }

    /// Span from (constant class, factored monic radicand) pairs; skips the
    /// refactoring that `span` performs on raw radicands.
    pub(crate) fn span_classes(
        field: &FieldDesc,
        l: u64,
        items: &[(u64, Vec<(Poly, u64)>)],
    ) -> Self {
        let mut support: Vec<Poly> = Vec::new();
        for (_, fac) in items {
            for (p, _) in fac {
                if !support.contains(p) {
                    support.push(p.clone());
                }
            }
        }
        support.sort_by(|a, b| a.cmp_deglex(b));
        let rows = items
            .iter()
            .map(|(cons, fac)| {
                let mut row = vec![0u64; support.len() + 1];
                for (p, e) in fac {
                    let i = support.iter().position(|s| s == p).unwrap();
                    row[i] = *e % l;
                }
                row[support.len()] = *cons;
                row
            })
            .collect();
        Self::from_parts(field.clone(), l, support, rows)
    }

    pub(crate) fn from_parts(
        field: FieldDesc,
        l: u64,
        support: Vec<Poly>,
        mut rows: Vec<Vec<u64>>,
    ) -> Self {
        rref(&mut rows, l);
        // drop support primes that no row touches
        let keep: Vec<usize> = (0..support.len())
            .filter(|&i| rows.iter().any(|r| r[i] != 0))
            .collect();
        if keep.len() != support.len() {
            let support: Vec<Poly> = keep.iter().map(|&i| support[i].clone()).collect();
            let rows = rows
                .iter()
                .map(|r| {
                    let mut nr: Vec<u64> =
                        keep.iter().map(|&i| r[i]).collect();
                    nr.push(*r.last().unwrap());
                    nr
                })
                .collect();
            KummerLattice {
                field,
                l,
                support,
                rows,
            }
        } else {
            KummerLattice {
                field,
                l,
                support,
                rows,
            }
        }
    }

    pub fn field(&self) -> &FieldDesc {
        &self.field
    }
    pub fn l(&self) -> u64 {
        self.l
    }
    pub fn support(&self) -> &[Poly] {
        &self.support
    }
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
    pub(crate) fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Degree over k of the represented field.
    pub fn field_degree(&self) -> u64 {
        let mut d = 1u64;
        for _ in 0..self.rank() {
            d *= self.l;
        }
        d
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field || self.l != other.l {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    /// Rows of both lattices re-indexed over the union support.
    fn merge_support(&self, other: &Self) -> (Vec<Poly>, Vec<Vec<u64>>, Vec<Vec<u64>>) {
        let mut support = self.support.clone();
        for p in &other.support {
            if !support.contains(p) {
                support.push(p.clone());
            }
        }
        support.sort_by(|a, b| a.cmp_deglex(b));
        let embed = |lat: &KummerLattice| -> Vec<Vec<u64>> {
            lat.rows
                .iter()
                .map(|r| {
                    let mut row = vec![0u64; support.len() + 1];
                    for (i, p) in lat.support.iter().enumerate() {
                        let j = support.iter().position(|s| s == p).unwrap();
                        row[j] = r[i];
                    }
                    row[support.len()] = *r.last().unwrap();
                    row
                })
                .collect()
        };
        let a = embed(self);
        let b = embed(other);
        (support, a, b)
    }

    /// Compositum of the represented fields.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let (support, mut rows, mut other_rows) = self.merge_support(other);
        rows.append(&mut other_rows);
        Ok(Self::from_parts(
            self.field.clone(),
            self.l,
            support,
            rows,
        ))
    }

    /// Does the radical class gamma * A lie in the represented subgroup?
    pub fn member(&self, gamma: &FqElem, radicand: &Poly) -> Result<bool> {
        let single = KummerLattice::span(
            &self.field,
            self.l,
            &[(gamma.clone(), radicand.clone())],
        )?;
        Ok(self.contains(&single))
    }

    /// Subgroup containment, decided row by row against the RREF basis.
    pub fn contains(&self, other: &Self) -> bool {
        if self.field != other.field || self.l != other.l {
            return false;
        }
        let (_, basis, rows) = self.merge_support(other);
        for mut row in rows {
            reduce_against(&mut row, &basis, self.l);
            if row.iter().any(|&x| x != 0) {
                return false;
            }
        }
        true
    }

    /// Sub-lattice of rows with zero polynomial part: the constant
    /// subextension, at most one dimension per lattice.
    pub fn constant_kernel(&self) -> Self {
        let k = self.support.len();
        let rows: Vec<Vec<u64>> = self
            .rows
            .iter()
            .filter(|r| r[..k].iter().all(|&x| x == 0))
            .map(|r| vec![*r.last().unwrap()])
            .collect();
        Self::from_parts(self.field.clone(), self.l, Vec::new(), rows)
    }

    /// Sub-lattice of classes whose polynomial degree is divisible by l,
    /// i.e. the part where the infinite place is unramified.
    pub fn degree_kernel(&self) -> Self {
        let l = self.l;
        let vals: Vec<u64> = (0..self.rows.len())
            .map(|i| self.row_degree(i) % l)
            .collect();
        let mut rows: Vec<Vec<u64>> = Vec::new();
        match vals.iter().position(|&v| v != 0) {
            None => rows = self.rows.clone(),
            Some(p0) => {
                let inv = mod_inverse(vals[p0], l);
                for (i, row) in self.rows.iter().enumerate() {
                    if i == p0 {
                        continue;
                    }
                    let c = vals[i] * inv % l;
                    let adj: Vec<u64> = row
                        .iter()
                        .zip(&self.rows[p0])
                        .map(|(&x, &y)| (x + (l - c) * y) % l)
                        .collect();
                    rows.push(adj);
                }
            }
        }
        Self::from_parts(self.field.clone(), self.l, self.support.clone(), rows)
    }

    /// Total degree of the polynomial part of row i.
    pub fn row_degree(&self, i: usize) -> u64 {
        self.rows[i]
            .iter()
            .take(self.support.len())
            .zip(&self.support)
            .map(|(&e, p)| e * p.deg() as u64)
            .sum()
    }

    /// (valuation of the radicand at p_inf mod l, constant class) per row;
    /// the local Kummer datum at infinity.
    pub fn infinity_pairs(&self) -> Vec<(u64, u64)> {
        (0..self.rows.len())
            .map(|i| {
                let d = self.row_degree(i) % self.l;
                ((self.l - d) % self.l, *self.rows[i].last().unwrap())
            })
            .collect()
    }

    /// Canonical radical generators: (gamma, factored monic radicand).
    pub fn row_radicals(&self) -> Vec<(FqElem, Vec<(Poly, u64)>)> {
        self.rows
            .iter()
            .map(|r| {
                let gamma = self.field.class_rep(*r.last().unwrap());
                let factors: Vec<(Poly, u64)> = self
                    .support
                    .iter()
                    .cloned()
                    .zip(r.iter().copied())
                    .filter(|(_, e)| *e != 0)
                    .collect();
                (gamma, factors)
            })
            .collect()
    }

    /// Rows re-indexed over a superset support (constant column last).
    pub(crate) fn embed_rows_into(&self, support: &[Poly]) -> Vec<Vec<u64>> {
        self.rows
            .iter()
            .map(|r| {
                let mut row = vec![0u64; support.len() + 1];
                for (i, p) in self.support.iter().enumerate() {
                    let j = support
                        .iter()
                        .position(|s| s == p)
                        .expect("embedding requires a support superset");
                    row[j] = r[i];
                }
                row[support.len()] = *r.last().unwrap();
                row
            })
            .collect()
    }

    /// Pivot column of each RREF basis row.
    pub(crate) fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.iter().position(|&x| x != 0).expect("no zero rows"))
            .collect()
    }

    /// Expanded monic radicand polynomial of row i.
    pub fn row_poly(&self, i: usize) -> Poly {
        let factors: Vec<(Poly, u64)> = self
            .support
            .iter()
            .cloned()
            .zip(self.rows[i].iter().copied())
            .filter(|(_, e)| *e != 0)
            .collect();
        expand_factors(&self.field, &factors)
    }
}
