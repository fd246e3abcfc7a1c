//! Independent oracles that check the genus engine without reusing its case
//! dispatch: the defining property of the genus field (unramified at finite
//! primes, split above p_inf) tested prime by prime, an exhaustive
//! maximality search over all intermediate lattices, the two-route f_inf
//! cross-check, and the constant-field computation for case 7.
//!
//! The oracles share only the localdata primitives (valuation ranks, the
//! local subgroup at infinity) with the engine, so agreement is evidence
//! rather than tautology.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::extension::{ramified_support, rref, ExtensionSpec, KummerLattice, RadicalGenerator};
use crate::genus::{build_e_gex, genus_field, genus_field_with_pr, CaseLabel};
use crate::gf::FieldDesc;
use crate::localdata::{finite_ramification_index, lattice_infinite_invariants};
use crate::polyring::{render_poly, Poly};

/// Largest support size for which the intermediate-lattice enumeration runs.
pub const MAX_BRUTE_SUPPORT: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyCheck {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

impl PropertyCheck {
    fn pass(name: &str) -> Self {
        PropertyCheck {
            name: name.to_string(),
            passed: true,
            witness: None,
        }
    }
    fn fail(name: &str, witness: String) -> Self {
        PropertyCheck {
            name: name.to_string(),
            passed: false,
            witness: Some(witness),
        }
    }
}

/// L/K is unramified at every finite prime and p_inf splits completely:
/// equal finite ramification indices over the union support and equal
/// (e, f) at infinity.
pub fn check_genus_property(
    k: &KummerLattice,
    l_lat: &KummerLattice,
) -> Result<PropertyCheck> {
    if !l_lat.contains(k) {
        return Err(Error::NotContained);
    }
    let name = "genus_property";
    let mut primes: Vec<Poly> = k.support().to_vec();
    for p in l_lat.support() {
        if !primes.contains(p) {
            primes.push(p.clone());
        }
    }
    for p in &primes {
        let ek = finite_ramification_index(k, p);
        let el = finite_ramification_index(l_lat, p);
        if ek != el {
            return Ok(PropertyCheck::fail(
                name,
                format!(
                    "finite prime {}: e = {} in K but {} in L",
                    render_poly(k.field(), p),
                    ek,
                    el
                ),
            ));
        }
    }
    let ik = lattice_infinite_invariants(k);
    let il = lattice_infinite_invariants(l_lat);
    if (ik.e, ik.f) != (il.e, il.f) {
        return Ok(PropertyCheck::fail(
            name,
            format!(
                "p_inf: (e, f) = ({}, {}) in K but ({}, {}) in L",
                ik.e, ik.f, il.e, il.f
            ),
        ));
    }
    Ok(PropertyCheck::pass(name))
}

// ---------------------------------------------------------------------------
// Subspace enumeration
// ---------------------------------------------------------------------------

type Bases = Arc<Vec<Vec<Vec<u64>>>>;

fn subspace_cache() -> &'static Mutex<HashMap<(usize, u64), Bases>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, u64), Bases>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn combinations(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, d, cur, out);
            cur.pop();
        }
    }
    go(0, n, d, &mut cur, &mut out);
    out
}

/// Every subspace of F_l^n exactly once, as its RREF basis (the empty basis
/// is the zero subspace).
pub(crate) fn subspace_bases(n: usize, l: u64) -> Bases {
    if let Some(b) = subspace_cache().lock().unwrap().get(&(n, l)) {
        return Arc::clone(b);
    }
    let mut all: Vec<Vec<Vec<u64>>> = Vec::new();
    for d in 0..=n {
        for pivots in combinations(n, d) {
            // free cells: entries right of the pivot, not in a pivot column
            let free: Vec<(usize, usize)> = (0..d)
                .flat_map(|i| {
                    let pivots = pivots.clone();
                    (pivots[i] + 1..n)
                        .filter(move |c| !pivots.contains(c))
                        .map(move |c| (i, c))
                })
                .collect();
            let mut count: u64 = 1;
            for _ in 0..free.len() {
                count *= l;
            }
            for mut assignment in 0..count {
                let mut rows = vec![vec![0u64; n]; d];
                for (i, &p) in pivots.iter().enumerate() {
                    rows[i][p] = 1;
                }
                for &(i, c) in &free {
                    rows[i][c] = assignment % l;
                    assignment /= l;
                }
                all.push(rows);
            }
        }
    }
    let arc: Bases = Arc::new(all);
    subspace_cache()
        .lock()
        .unwrap()
        .insert((n, l), Arc::clone(&arc));
    arc
}

/// Exhaustive realization of the genus-field definition: enumerate every
/// lattice between K and join(E_gex, K, one non-l-th-power constant) and
/// return the unique maximal one satisfying the genus property.
pub fn maximality_bruteforce(spec: &ExtensionSpec) -> Result<KummerLattice> {
    let support = ramified_support(spec);
    if support.r() > MAX_BRUTE_SUPPORT {
        return Err(Error::BoundExceeded(support.r(), MAX_BRUTE_SUPPORT));
    }
    let field = spec.field();
    let l = spec.l();
    let k = spec.k_lattice();
    let e_gex = build_e_gex(field, l, &support);
    let const_row =
        KummerLattice::span(field, l, &[(field.class_rep(1), Poly::one(field))])?;
    let ambient = e_gex.lattice.join(&k)?.join(&const_row)?;

    let n = ambient.rank();
    let amb_support = ambient.support().to_vec();
    let amb_pivots = ambient.pivots();
    let coord = |v: &[u64]| -> Vec<u64> { amb_pivots.iter().map(|&p| v[p]).collect() };

    let k_embedded = k.embed_rows_into(&amb_support);
    let mut k_coords: Vec<Vec<u64>> = k_embedded.iter().map(|r| coord(r)).collect();
    rref(&mut k_coords, l);
    let k_pivots: Vec<usize> = k_coords
        .iter()
        .map(|r| r.iter().position(|&x| x != 0).unwrap())
        .collect();
    let free_cols: Vec<usize> = (0..n).filter(|c| !k_pivots.contains(c)).collect();

    let mut best: Option<KummerLattice> = None;
    let mut passing: Vec<KummerLattice> = Vec::new();
    for basis in subspace_bases(free_cols.len(), l).iter() {
        let mut rows = k_embedded.clone();
        for qrow in basis {
            let mut coords = vec![0u64; n];
            for (j, &c) in free_cols.iter().enumerate() {
                coords[c] = qrow[j];
            }
            // back to a lattice row over the ambient support
            let mut row = vec![0u64; amb_support.len() + 1];
            for (i, amb_row) in ambient.rows().iter().enumerate() {
                if coords[i] == 0 {
                    continue;
                }
                for (j, &x) in amb_row.iter().enumerate() {
                    row[j] = (row[j] + coords[i] * x) % l;
                }
            }
            rows.push(row);
        }
        let cand =
            KummerLattice::from_parts(field.clone(), l, amb_support.clone(), rows);
        if check_genus_property(&k, &cand)?.passed {
            match &best {
                None => best = Some(cand.clone()),
                Some(b) if cand.rank() > b.rank() => best = Some(cand.clone()),
                _ => {}
            }
            passing.push(cand);
        }
    }
    let best = best.expect("K itself always passes");
    for cand in &passing {
        if !best.contains(cand) {
            return Err(Error::NoUniqueMaximum(
                describe_lattice(&best),
                describe_lattice(cand),
            ));
        }
    }
    Ok(best)
}

fn describe_lattice(lat: &KummerLattice) -> String {
    let field = lat.field();
    let rads: Vec<String> = lat
        .row_radicals()
        .iter()
        .map(|(gamma, fac)| {
            let poly = fac
                .iter()
                .map(|(p, e)| format!("{}^{}", render_poly(field, p), e))
                .collect::<Vec<_>>()
                .join("*");
            format!("{}*{}", field.render(gamma), if poly.is_empty() { "1".into() } else { poly })
        })
        .collect();
    format!("[{}]", rads.join(", "))
}

/// Two independent routes to f at infinity: the degree-l subfield scan
/// against the local Kummer subgroup.
pub fn crosscheck_f_infinity(spec: &ExtensionSpec) -> PropertyCheck {
    let via_subfields = crate::localdata::f_infinity_via_subfields(spec);
    let via_subgroup = lattice_infinite_invariants(&spec.k_lattice()).f;
    if via_subfields == via_subgroup {
        PropertyCheck::pass("crosscheck_f_infinity")
    } else {
        PropertyCheck::fail(
            "crosscheck_f_infinity",
            format!("subfield scan gives {via_subfields}, local subgroup gives {via_subgroup}"),
        )
    }
}

/// Case-7 constant computation: with xi not an l-th power and l not dividing
/// n = deg D, write n = l*m - r (0 < r < l), s = r^(-1) mod l and
/// delta = gamma^s. The check passes iff delta is not congruent to -1 modulo
/// l-th powers, which is what forces constant growth l in K_gex.
pub fn verify_case7_constants(
    field: &FieldDesc,
    l: u64,
    gen: &RadicalGenerator,
) -> Result<PropertyCheck> {
    let n = gen.d.deg() as u64;
    let sign = field.pow(&field.minus_one(), n);
    let xi = field.mul(&sign, &gen.gamma);
    if field.is_lth_power(&xi, l) {
        return Err(Error::PreconditionViolated(
            "xi is an l-th power; not a case-7 generator".into(),
        ));
    }
    if n % l == 0 {
        return Err(Error::PreconditionViolated(
            "l divides deg D; not a case-7 generator".into(),
        ));
    }
    let r = l - n % l;
    let s = crate::extension::mod_inverse(r, l);
    let delta = field.pow(&gen.gamma, s);
    // delta = -1 mod l-th powers iff -delta is an l-th power
    let test = field.mul(&delta, &field.minus_one());
    if field.is_lth_power(&test, l) {
        Ok(PropertyCheck::fail(
            "case7_constants",
            format!("delta = {} is -1 modulo l-th powers", field.render(&delta)),
        ))
    } else {
        Ok(PropertyCheck::pass("case7_constants"))
    }
}

/// Recompute the genus field with every admissible P_r; all choices must
/// give memberwise-equal lattices.
pub fn alternate_pr_check(spec: &ExtensionSpec) -> Result<PropertyCheck> {
    let support = ramified_support(spec);
    let name = "alternate_pr";
    if support.s == support.r() {
        return Ok(PropertyCheck::pass(name)); // no P_r in play
    }
    let canonical = genus_field(spec)?;
    for idx in 0..support.r() {
        if support.degrees[idx] % spec.l() == 0 {
            continue;
        }
        let rep = genus_field_with_pr(spec, Some(idx))?;
        if rep.k_ge.lattice != canonical.k_ge.lattice
            || rep.k_gex.lattice != canonical.k_gex.lattice
        {
            return Ok(PropertyCheck::fail(
                name,
                format!(
                    "P_r = {} gives a different genus field",
                    render_poly(spec.field(), &support.primes[idx])
                ),
            ));
        }
    }
    Ok(PropertyCheck::pass(name))
}

// ---------------------------------------------------------------------------
// Orchestration
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckStatus {
    Passed,
    Failed(String),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub status: CheckStatus,
}

impl From<PropertyCheck> for CheckOutcome {
    fn from(c: PropertyCheck) -> Self {
        CheckOutcome {
            name: c.name,
            status: if c.passed {
                CheckStatus::Passed
            } else {
                CheckStatus::Failed(c.witness.unwrap_or_default())
            },
        }
    }
}

/// Run every applicable oracle against a Kummer spec.
pub fn run_kummer_checks(spec: &ExtensionSpec) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    let report = genus_field(spec)?;
    let k = spec.k_lattice();

    // sandwich K <= K_ge <= K_gex
    let sandwich = report.k_ge.lattice.contains(&k)
        && report.k_gex.lattice.contains(&report.k_ge.lattice);
    out.push(CheckOutcome {
        name: "sandwich".into(),
        status: if sandwich {
            CheckStatus::Passed
        } else {
            CheckStatus::Failed("containment chain broken".into())
        },
    });

    out.push(check_genus_property(&k, &report.k_ge.lattice)?.into());

    // extended genus field is unramified over K at every finite prime
    let mut ext_ok = true;
    let mut ext_witness = String::new();
    let mut primes = k.support().to_vec();
    for p in report.k_gex.lattice.support() {
        if !primes.contains(p) {
            primes.push(p.clone());
        }
    }
    for p in &primes {
        if finite_ramification_index(&k, p)
            != finite_ramification_index(&report.k_gex.lattice, p)
        {
            ext_ok = false;
            ext_witness = render_poly(spec.field(), p);
            break;
        }
    }
    out.push(CheckOutcome {
        name: "extended_finite_unramified".into(),
        status: if ext_ok {
            CheckStatus::Passed
        } else {
            CheckStatus::Failed(ext_witness)
        },
    });

    out.push(crosscheck_f_infinity(spec).into());

    // constant field of K_ge is F_{q^t} with t = f_inf(K)
    let cd = report.k_ge.constant_degree.unwrap_or(0);
    let f_inf = report.f_inf.unwrap_or(0);
    out.push(CheckOutcome {
        name: "constant_field_law".into(),
        status: if cd == f_inf {
            CheckStatus::Passed
        } else {
            CheckStatus::Failed(format!(
                "constant degree {cd} but f_inf = {f_inf}"
            ))
        },
    });

    match maximality_bruteforce(spec) {
        Ok(max) => {
            out.push(CheckOutcome {
                name: "maximality".into(),
                status: if max == report.k_ge.lattice {
                    CheckStatus::Passed
                } else {
                    CheckStatus::Failed(format!(
                        "engine K_ge {} but brute force finds {}",
                        describe_lattice(&report.k_ge.lattice),
                        describe_lattice(&max)
                    ))
                },
            });
        }
        Err(Error::BoundExceeded(r, bound)) => {
            out.push(CheckOutcome {
                name: "maximality".into(),
                status: CheckStatus::Skipped(format!(
                    "support size {r} exceeds the brute-force bound {bound}"
                )),
            });
        }
        Err(e) => return Err(e),
    }

    out.push(alternate_pr_check(spec)?.into());

    if report.case == CaseLabel::C7 {
        for (j, gen) in spec.generators().iter().enumerate() {
            if !spec.field().is_lth_power(&spec.xi(j), spec.l()) {
                out.push(verify_case7_constants(spec.field(), spec.l(), gen)?.into());
            }
        }
    }
    Ok(out)
}

/// Oracle checks for a validated non-Kummer spec.
pub fn run_nonkummer_checks(
    spec: &crate::characters::NonKummerSpec,
) -> Result<Vec<CheckOutcome>> {
    let mut out = Vec::new();
    let report = crate::genus::genus_field_nonkummer(spec)?;
    let all_ramified = spec
        .primes()
        .iter()
        .all(|p| crate::characters::ramification_via_characters(spec, p) == Ok(spec.l()));
    out.push(CheckOutcome {
        name: "ramification_indices".into(),
        status: if all_ramified {
            CheckStatus::Passed
        } else {
            CheckStatus::Failed("some listed prime is unramified".into())
        },
    });
    let expected = spec.l().pow((spec.r() - spec.m()) as u32);
    out.push(CheckOutcome {
        name: "genus_degree_law".into(),
        status: if report.genus_degree == expected && report.extended_degree == expected {
            CheckStatus::Passed
        } else {
            CheckStatus::Failed(format!(
                "degree {} but l^(r-m) = {expected}",
                report.genus_degree
            ))
        },
    });
    out.push(CheckOutcome {
        name: "p_inf_unramified".into(),
        status: if report.e_inf == 1 {
            CheckStatus::Passed
        } else {
            CheckStatus::Failed(format!("e_inf = {}", report.e_inf))
        },
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extension::build_spec;
    use crate::gf::make_field;
    use crate::polyring::parse_poly;

    fn f7() -> FieldDesc {
        make_field(7, 1, None).unwrap()
    }

    fn spec7(raw: &[(u64, &str)]) -> ExtensionSpec {
        let f = f7();
        let raw: Vec<_> = raw
            .iter()
            .map(|(g, d)| (f.from_int(*g), parse_poly(&f, d).unwrap()))
            .collect();
        build_spec(&f, 3, &raw).unwrap()
    }

    #[test]
    fn genus_property_examples() {
        let f = f7();
        let k = spec7(&[(6, "T^3+3*T^2+2*T")]).k_lattice();
        assert!(check_genus_property(&k, &k).unwrap().passed);
        let m = KummerLattice::span(
            &f,
            3,
            &[
                (f.one(), parse_poly(&f, "T^3+4*T^2+4*T").unwrap()),
                (f.one(), parse_poly(&f, "T^3+5*T^2+T+4").unwrap()),
            ],
        )
        .unwrap();
        assert!(check_genus_property(&k, &m).unwrap().passed);
        // E_gex ramifies at infinity over this K: fails with witness
        let e_gex = KummerLattice::span(
            &f,
            3,
            &[
                (f.one(), parse_poly(&f, "T").unwrap()),
                (f.one(), parse_poly(&f, "T+1").unwrap()),
                (f.one(), parse_poly(&f, "T+2").unwrap()),
            ],
        )
        .unwrap();
        let check = check_genus_property(&k, &e_gex).unwrap();
        assert!(!check.passed);
        assert!(check.witness.unwrap().contains("p_inf"));
        // not contained
        let other = KummerLattice::span(&f, 3, &[(f.one(), parse_poly(&f, "T+3").unwrap())])
            .unwrap();
        assert_eq!(check_genus_property(&k, &other), Err(Error::NotContained));
    }

    #[test]
    fn subspace_counts() {
        // Gaussian binomial totals: F_2^3 has 1+7+7+1 = 16 subspaces,
        // F_3^2 has 1+4+1 = 6
        assert_eq!(subspace_bases(3, 2).len(), 16);
        assert_eq!(subspace_bases(2, 3).len(), 6);
        assert_eq!(subspace_bases(0, 3).len(), 1);
    }

    #[test]
    fn maximality_matches_engine_on_worked_examples() {
        for raw in [
            vec![(6u64, "T")],
            vec![(6, "T^3+3*T^2+2*T")],
            vec![(3, "T")],
            vec![(3, "T^3+T+1")],
            vec![(3, "T^3+3*T^2+2*T")],
            vec![(3, "T^3+T+1"), (1, "T")],
            vec![(3, "T"), (1, "T+1")],
        ] {
            let spec = spec7(&raw);
            let max = maximality_bruteforce(&spec).unwrap();
            let rep = genus_field(&spec).unwrap();
            assert_eq!(max, rep.k_ge.lattice, "spec {raw:?}");
        }
    }

    #[test]
    fn bound_exceeded() {
        // T(T+1)(T+2)(T+3)(T+4): five ramified primes
        let f = f7();
        let mut d = parse_poly(&f, "T").unwrap();
        for c in 1..5u64 {
            let lin = Poly::from_coeffs(vec![f.from_int(c), f.one()]);
            d = crate::polyring::mul(&f, &d, &lin);
        }
        let spec = build_spec(&f, 3, &[(f.one(), d)]).unwrap();
        match maximality_bruteforce(&spec) {
            Err(Error::BoundExceeded(r, b)) => {
                assert_eq!((r, b), (5, 4));
            }
            other => panic!("expected BoundExceeded, got {other:?}"),
        }
    }

    #[test]
    fn crosscheck_examples() {
        for raw in [
            vec![(3u64, "T")],
            vec![(3, "T^3+T+1")],
            vec![(3, "T"), (1, "T+1")],
        ] {
            let spec = spec7(&raw);
            assert!(crosscheck_f_infinity(&spec).passed, "spec {raw:?}");
        }
    }

    #[test]
    fn case7_constant_checks() {
        let f = f7();
        let gen = RadicalGenerator {
            gamma: f.from_int(3),
            d: parse_poly(&f, "T").unwrap(),
        };
        assert!(verify_case7_constants(&f, 3, &gen).unwrap().passed);
        let gen6 = RadicalGenerator {
            gamma: f.from_int(6),
            d: parse_poly(&f, "T").unwrap(),
        };
        assert!(matches!(
            verify_case7_constants(&f, 3, &gen6),
            Err(Error::PreconditionViolated(_))
        ));
        let f5 = make_field(5, 1, None).unwrap();
        let gen = RadicalGenerator {
            gamma: f5.from_int(2),
            d: parse_poly(&f5, "T").unwrap(),
        };
        assert!(verify_case7_constants(&f5, 2, &gen).unwrap().passed);
    }

    #[test]
    fn all_checks_pass_on_examples() {
        for raw in [
            vec![(6u64, "T")],
            vec![(6, "T^3+3*T^2+2*T")],
            vec![(3, "T")],
            vec![(3, "T^3+T+1"), (1, "T")],
        ] {
            let spec = spec7(&raw);
            for outcome in run_kummer_checks(&spec).unwrap() {
                assert!(
                    matches!(outcome.status, CheckStatus::Passed),
                    "{} failed on {raw:?}: {:?}",
                    outcome.name,
                    outcome.status
                );
            }
        }
    }
}
