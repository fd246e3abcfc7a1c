//! The main engine: build E, E_gex and M, dispatch the genus-field cases,
//! and emit the report.
//!
//! For a Kummer spec the genus field is join(E_gex, K) or join(M, K)
//! depending on the support degrees, the xi classes and f at infinity; the
//! extended genus field is always join(E_gex, K). Everything is carried out
//! on canonical Kummer lattices, so "same field" is decidable equality.

use crate::characters::{product_group_field, CyclotomicSubfield, NonKummerSpec};
use crate::error::{Error, Result};
use crate::extension::{ramified_support, ExtensionSpec, KummerLattice, RamifiedSupport};
use crate::gf::FieldDesc;
use crate::localdata::infinite_invariants;
use crate::polyring::Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    NkCyclotomic,
    NkTwisted,
}

impl CaseLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseLabel::C1 => "C1",
            CaseLabel::C2 => "C2",
            CaseLabel::C3 => "C3",
            CaseLabel::C4 => "C4",
            CaseLabel::C5 => "C5",
            CaseLabel::C6 => "C6",
            CaseLabel::C7 => "C7",
            CaseLabel::NkCyclotomic => "NK_cyclotomic",
            CaseLabel::NkTwisted => "NK_twisted",
        }
    }

    pub fn parse(s: &str) -> Option<CaseLabel> {
        Some(match s {
            "C1" => CaseLabel::C1,
            "C2" => CaseLabel::C2,
            "C3" => CaseLabel::C3,
            "C4" => CaseLabel::C4,
            "C5" => CaseLabel::C5,
            "C6" => CaseLabel::C6,
            "C7" => CaseLabel::C7,
            "NK_cyclotomic" => CaseLabel::NkCyclotomic,
            "NK_twisted" => CaseLabel::NkTwisted,
            _ => return None,
        })
    }
}

/// A field between k and the ambient compositum: a radical part (Kummer
/// lattice), a cyclotomic part (degree-l subfields L_P, non-Kummer branch),
/// an optional symbolic K factor, and the degree over F_q of the constant
/// field (`None` when the inputs do not determine it).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldDescription {
    pub lattice: KummerLattice,
    pub cyclotomic: Vec<CyclotomicSubfield>,
    pub with_k: bool,
    pub constant_degree: Option<u64>,
}

impl FieldDescription {
    pub fn from_lattice(lattice: KummerLattice) -> Self {
        let c = lattice.constant_kernel().rank() as u32;
        let constant_degree = Some(lattice.l().pow(c));
        FieldDescription {
            lattice,
            cyclotomic: Vec::new(),
            with_k: false,
            constant_degree,
        }
    }
}

/// Degree over F_q of the constant field of a radical-part description:
/// l^c with c the rank of the constant kernel.
pub fn constant_degree(desc: &FieldDescription) -> u64 {
    let c = desc.lattice.constant_kernel().rank() as u32;
    desc.lattice.l().pow(c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bezout {
    pub a: i64,
    pub b: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecEcho {
    Kummer(ExtensionSpec),
    NonKummer(NonKummerSpec),
}

/// Everything the engine knows about one spec: case label, the supporting
/// fields E, E_gex, M, the genus and extended genus fields, degrees over K,
/// and the invariants of p_inf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusReport {
    pub case: CaseLabel,
    pub spec: SpecEcho,
    pub support: RamifiedSupport,
    pub chosen_pr: Option<Poly>,
    pub bezout: Option<Bezout>,
    pub e: Option<FieldDescription>,
    pub e_gex: FieldDescription,
    pub m_field: Option<FieldDescription>,
    pub k_ge: FieldDescription,
    pub k_gex: FieldDescription,
    pub genus_degree: u64,
    pub extended_degree: u64,
    pub e_inf: u64,
    pub f_inf: Option<u64>,
    pub m0: Option<u64>,
}

impl GenusReport {
    /// Equality of the computed content, ignoring the spec echo and the
    /// basis-dependent exponent matrix.
    pub fn core_eq(&self, other: &Self) -> bool {
        self.case == other.case
            && self.support.primes == other.support.primes
            && self.support.s == other.support.s
            && self.chosen_pr == other.chosen_pr
            && self.bezout == other.bezout
            && self.e == other.e
            && self.e_gex == other.e_gex
            && self.m_field == other.m_field
            && self.k_ge == other.k_ge
            && self.k_gex == other.k_gex
            && self.genus_degree == other.genus_degree
            && self.extended_degree == other.extended_degree
            && self.e_inf == other.e_inf
            && self.f_inf == other.f_inf
            && self.m0 == other.m0
    }
}

/// E = k(l-th roots of D_j*), the cyclotomic shadow of K: generator j gets
/// the constant class of (-1)^(deg D_j).
pub fn build_e(spec: &ExtensionSpec) -> FieldDescription {
    let field = spec.field();
    let l = spec.l();
    let items: Vec<(u64, Vec<(Poly, u64)>)> = spec
        .generators()
        .iter()
        .zip(spec.factored())
        .map(|(g, fac)| {
            let sign = field.pow(&field.minus_one(), g.d.deg() as u64);
            (field.power_class(&sign, l), fac.clone())
        })
        .collect();
    FieldDescription::from_lattice(KummerLattice::span_classes(field, l, &items))
}

/// E_gex: one generator per support prime, plain for l | deg P and starred
/// (constant class of (-1)^deg P) otherwise.
pub fn build_e_gex(
    field: &FieldDesc,
    l: u64,
    support: &RamifiedSupport,
) -> FieldDescription {
    let items: Vec<(u64, Vec<(Poly, u64)>)> = support
        .primes
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let cons = if i < support.s {
                0
            } else {
                let sign = field.pow(&field.minus_one(), support.degrees[i]);
                field.power_class(&sign, l)
            };
            (cons, vec![(p.clone(), 1)])
        })
        .collect();
    FieldDescription::from_lattice(KummerLattice::span_classes(field, l, &items))
}

/// The canonical P_r (maximal (degree, lex) among primes with l - deg P)
/// and the Bezout pair a*l + b*deg P_r = 1 with 0 < b < l.
pub fn choose_pr_and_bezout(l: u64, support: &RamifiedSupport) -> Result<(usize, Bezout)> {
    if support.s == support.r() {
        return Err(Error::AllDegreesDivisible);
    }
    // the non-divisible block is sorted ascending, so its last entry wins
    let idx = support.r() - 1;
    let d_r = support.degrees[idx] % l;
    let b = crate::extension::mod_inverse(d_r, l);
    let a = (1i64 - (b * support.degrees[idx]) as i64) / l as i64;
    Ok((idx, Bezout { a, b }))
}

/// M = k(l-th roots of Q_i) with Q_i = P_i * P_r^(-b d_i mod l); every
/// deg Q_i is divisible by l. Empty lattice when r = 1.
pub fn build_m(
    field: &FieldDesc,
    l: u64,
    support: &RamifiedSupport,
    pr_index: usize,
    bez: Bezout,
) -> FieldDescription {
    let pr = &support.primes[pr_index];
    let items: Vec<(u64, Vec<(Poly, u64)>)> = support
        .primes
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != pr_index)
        .map(|(i, p)| {
            let e_r = (l - (bez.b * support.degrees[i]) % l) % l;
            let mut fac = vec![(p.clone(), 1)];
            if e_r != 0 {
                fac.push((pr.clone(), e_r));
            }
            let q_deg = support.degrees[i] + e_r * support.degrees[pr_index];
            debug_assert_eq!(q_deg % l, 0, "deg Q_i must be divisible by l");
            (0, fac)
        })
        .collect();
    FieldDescription::from_lattice(KummerLattice::span_classes(field, l, &items))
}

/// Genus field with the canonical P_r choice.
pub fn genus_field(spec: &ExtensionSpec) -> Result<GenusReport> {
    genus_field_with_pr(spec, None)
}

/// Genus field with an explicit admissible P_r (index into the support);
/// any admissible choice yields the same fields.
pub fn genus_field_with_pr(spec: &ExtensionSpec, pr: Option<usize>) -> Result<GenusReport> {
    let field = spec.field();
    let l = spec.l();
    let m = spec.m();
    let support = ramified_support(spec);
    let k = spec.k_lattice();
    let e_desc = build_e(spec);
    let e_gex = build_e_gex(field, l, &support);
    let inv = infinite_invariants(spec)?;

    let k_is_e = e_desc.lattice == k;
    let all_n_divisible = spec
        .generators()
        .iter()
        .all(|g| g.d.deg() as u64 % l == 0);
    let all_xi_power = (0..m).all(|j| field.is_lth_power(&spec.xi(j), l));

    // M, P_r and the Bezout pair exist whenever s < r
    let (chosen, bez, m_desc) = if support.s < support.r() {
        let (mut idx, mut bz) = choose_pr_and_bezout(l, &support)?;
        if let Some(want) = pr {
            if want >= support.r() || support.degrees[want] % l == 0 {
                return Err(Error::PreconditionViolated(format!(
                    "support index {want} is not an admissible P_r"
                )));
            }
            idx = want;
            let d_r = support.degrees[want] % l;
            let b = crate::extension::mod_inverse(d_r, l);
            bz = Bezout {
                a: (1i64 - (b * support.degrees[want]) as i64) / l as i64,
                b,
            };
        }
        let m_desc = build_m(field, l, &support, idx, bz);
        (Some(idx), Some(bz), Some(m_desc))
    } else {
        (None, None, None)
    };

    let (case, k_ge_lat) = if support.s == support.r() {
        let case = if k_is_e { CaseLabel::C1 } else { CaseLabel::C4 };
        (case, e_gex.lattice.join(&k)?)
    } else if all_n_divisible {
        let case = if k_is_e { CaseLabel::C3 } else { CaseLabel::C5 };
        let m_lat = &m_desc.as_ref().expect("s < r").lattice;
        (case, m_lat.join(&k)?)
    } else if all_xi_power {
        (CaseLabel::C2, e_gex.lattice.join(&k)?)
    } else if inv.f == l {
        (CaseLabel::C6, e_gex.lattice.join(&k)?)
    } else {
        let m_lat = &m_desc.as_ref().expect("s < r").lattice;
        (CaseLabel::C7, m_lat.join(&k)?)
    };
    let k_gex_lat = e_gex.lattice.join(&k)?;

    debug_assert!(k_ge_lat.contains(&k), "K must lie inside K_ge");
    debug_assert!(k_gex_lat.contains(&k_ge_lat), "K_ge must lie inside K_gex");

    let genus_degree = l.pow(k_ge_lat.rank() as u32 - m as u32);
    let extended_degree = l.pow(k_gex_lat.rank() as u32 - m as u32);
    let m0 = if k_is_e { 1 } else { l };
    let chosen_pr = chosen.map(|i| support.primes[i].clone());

    Ok(GenusReport {
        case,
        spec: SpecEcho::Kummer(spec.clone()),
        support,
        chosen_pr,
        bezout: bez,
        e: Some(e_desc),
        e_gex,
        m_field: m_desc,
        k_ge: FieldDescription::from_lattice(k_ge_lat),
        k_gex: FieldDescription::from_lattice(k_gex_lat),
        genus_degree,
        extended_degree,
        e_inf: inv.e,
        f_inf: Some(inv.f),
        m0: Some(m0),
    })
}

/// Non-Kummer branch: K_ge = K_gex = L_1 ... L_r (joined with a symbolic K
/// when the extension is twisted, i.e. not inside a cyclotomic field).
pub fn genus_field_nonkummer(spec: &NonKummerSpec) -> Result<GenusReport> {
    let field = spec.field();
    let l = spec.l();
    let r = spec.r();
    let m = spec.m();
    let subfields = product_group_field(spec);
    let degrees: Vec<u64> = spec.primes().iter().map(|p| p.deg() as u64).collect();
    let s = degrees.iter().filter(|&&d| d % l == 0).count();
    let support = RamifiedSupport {
        primes: spec.primes().to_vec(),
        degrees,
        s,
        beta: spec.c_matrix().to_vec(),
    };
    let twisted = spec.twisted();
    // the field of the character product group Y: L_1 ... L_r, geometric
    let e_gex = FieldDescription {
        lattice: KummerLattice::empty(field, l),
        cyclotomic: subfields.clone(),
        with_k: false,
        constant_degree: Some(1),
    };
    let compositum = FieldDescription {
        lattice: KummerLattice::empty(field, l),
        cyclotomic: subfields,
        with_k: twisted,
        constant_degree: if twisted { None } else { Some(1) },
    };
    let degree = l.pow((r - m) as u32);
    Ok(GenusReport {
        case: if twisted {
            CaseLabel::NkTwisted
        } else {
            CaseLabel::NkCyclotomic
        },
        spec: SpecEcho::NonKummer(spec.clone()),
        support,
        chosen_pr: None,
        bezout: None,
        e: if twisted {
            None // K_{m0} cap k(Lambda_N) is not presentable from the given data
        } else {
            Some(FieldDescription {
                lattice: KummerLattice::empty(field, l),
                cyclotomic: Vec::new(),
                with_k: true, // untwisted: E = K
                constant_degree: Some(1),
            })
        },
        e_gex,
        m_field: None,
        k_ge: compositum.clone(),
        k_gex: compositum,
        genus_degree: degree,
        extended_degree: degree,
        e_inf: 1,
        f_inf: if twisted { None } else { Some(1) },
        m0: if twisted { None } else { Some(1) },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::build_nonkummer_spec;
    use crate::extension::build_spec;
    use crate::gf::make_field;
    use crate::polyring::parse_poly;

    fn f7() -> FieldDesc {
        make_field(7, 1, None).unwrap()
    }

    fn p(field: &FieldDesc, s: &str) -> Poly {
        parse_poly(field, s).unwrap()
    }

    fn spec7(raw: &[(u64, &str)]) -> ExtensionSpec {
        let f = f7();
        let raw: Vec<_> = raw
            .iter()
            .map(|(g, d)| (f.from_int(*g), p(&f, d)))
            .collect();
        build_spec(&f, 3, &raw).unwrap()
    }

    #[test]
    fn build_e_examples() {
        let f = f7();
        // -1 = 6 is a cube in F_7, so the star canonicalizes away
        let e = build_e(&spec7(&[(6, "T")]));
        let expected = KummerLattice::span(&f, 3, &[(f.one(), p(&f, "T"))]).unwrap();
        assert_eq!(e.lattice, expected);
        // K = E exactly when every xi_j is a cube
        let s = spec7(&[(6, "T")]);
        assert_eq!(build_e(&s).lattice, s.k_lattice());
        let s = spec7(&[(3, "T")]);
        assert_ne!(build_e(&s).lattice, s.k_lattice());
    }

    #[test]
    fn build_e_gex_star_pattern() {
        let f = f7();
        let s = spec7(&[(6, "T^3+3*T^2+2*T")]);
        let sup = ramified_support(&s);
        let eg = build_e_gex(&f, 3, &sup);
        assert_eq!(eg.lattice.rank(), 3);
        let expected = KummerLattice::span(
            &f,
            3,
            &[
                (f.one(), p(&f, "T")),
                (f.one(), p(&f, "T+1")),
                (f.one(), p(&f, "T+2")),
            ],
        )
        .unwrap();
        assert_eq!(eg.lattice, expected);

        // s = 1 < r = 2: plain cubic prime, starred linear prime
        let s = spec7(&[(3, "T"), (3, "T^3+T+1")]);
        let sup = ramified_support(&s);
        let eg = build_e_gex(&f, 3, &sup);
        let expected = KummerLattice::span(
            &f,
            3,
            &[
                (f.one(), p(&f, "T^3+T+1")),
                (f.from_int(6), p(&f, "T")),
            ],
        )
        .unwrap();
        assert_eq!(eg.lattice, expected);
    }

    #[test]
    fn bezout_values() {
        // l = 3, d_r = 1 -> (b, a) = (1, 0); d_r = 2 -> (2, -1)
        let s = spec7(&[(6, "T")]);
        let sup = ramified_support(&s);
        let (_, bz) = choose_pr_and_bezout(3, &sup).unwrap();
        assert_eq!((bz.b, bz.a), (1, 0));

        let f = f7();
        let s = build_spec(&f, 3, &[(f.one(), p(&f, "T^2+1"))]).unwrap();
        let sup = ramified_support(&s);
        let (_, bz) = choose_pr_and_bezout(3, &sup).unwrap();
        assert_eq!((bz.b, bz.a), (2, -1));

        // l = 2, d_r = 3 -> (1, -1)
        let f5 = make_field(5, 1, None).unwrap();
        let s = build_spec(&f5, 2, &[(f5.one(), p(&f5, "T^3+T+1"))]).unwrap();
        let sup = ramified_support(&s);
        let (_, bz) = choose_pr_and_bezout(2, &sup).unwrap();
        assert_eq!((bz.b, bz.a), (1, -1));

        // s = r: no admissible P_r
        let s = spec7(&[(3, "T^3+T+1")]);
        let sup = ramified_support(&s);
        assert_eq!(
            choose_pr_and_bezout(3, &sup),
            Err(Error::AllDegreesDivisible)
        );
    }

    #[test]
    fn build_m_three_primes() {
        let f = f7();
        let s = spec7(&[(6, "T^3+3*T^2+2*T")]);
        let sup = ramified_support(&s);
        let (idx, bz) = choose_pr_and_bezout(3, &sup).unwrap();
        assert_eq!(sup.primes[idx], p(&f, "T+2"));
        let m = build_m(&f, 3, &sup, idx, bz);
        let expected = KummerLattice::span(
            &f,
            3,
            &[
                (f.one(), p(&f, "T^3+4*T^2+4*T")),  // T(T+2)^2
                (f.one(), p(&f, "T^3+5*T^2+T+4")),  // (T+1)(T+2)^2
            ],
        )
        .unwrap();
        assert_eq!(m.lattice, expected);
        // r = 1: M = k
        let s = spec7(&[(3, "T")]);
        let sup = ramified_support(&s);
        let (idx, bz) = choose_pr_and_bezout(3, &sup).unwrap();
        assert_eq!(build_m(&f, 3, &sup, idx, bz).lattice.rank(), 0);
    }

    #[test]
    fn case_c2() {
        let f = f7();
        let rep = genus_field(&spec7(&[(6, "T")])).unwrap();
        assert_eq!(rep.case, CaseLabel::C2);
        assert_eq!(rep.genus_degree, 1);
        assert_eq!(rep.extended_degree, 1);
        let k = KummerLattice::span(&f, 3, &[(f.one(), p(&f, "T"))]).unwrap();
        assert_eq!(rep.k_ge.lattice, k);
        assert_eq!(rep.k_gex.lattice, k);
        assert_eq!(rep.m0, Some(1));
        assert_eq!((rep.e_inf, rep.f_inf), (3, Some(1)));
        assert_eq!(rep.k_ge.constant_degree, Some(1));
    }

    #[test]
    fn case_c3() {
        let f = f7();
        let rep = genus_field(&spec7(&[(6, "T^3+3*T^2+2*T")])).unwrap();
        assert_eq!(rep.case, CaseLabel::C3);
        assert_eq!(rep.genus_degree, 3);
        assert_eq!(rep.extended_degree, 9);
        assert_eq!(rep.chosen_pr, Some(p(&f, "T+2")));
        assert_eq!(rep.bezout, Some(Bezout { a: 0, b: 1 }));
        let m = KummerLattice::span(
            &f,
            3,
            &[
                (f.one(), p(&f, "T^3+4*T^2+4*T")),
                (f.one(), p(&f, "T^3+5*T^2+T+4")),
            ],
        )
        .unwrap();
        assert_eq!(rep.k_ge.lattice, m);
        assert_eq!(rep.k_gex.lattice, rep.e_gex.lattice);
        assert_eq!(rep.k_ge.constant_degree, Some(1));
        assert_eq!(rep.k_gex.constant_degree, Some(1));
        assert_eq!(rep.m0, Some(1));
        assert_eq!((rep.e_inf, rep.f_inf), (1, Some(1)));
    }

    #[test]
    fn case_c7() {
        let f = f7();
        let rep = genus_field(&spec7(&[(3, "T")])).unwrap();
        assert_eq!(rep.case, CaseLabel::C7);
        assert_eq!(rep.genus_degree, 1);
        let k = KummerLattice::span(&f, 3, &[(f.from_int(3), p(&f, "T"))]).unwrap();
        assert_eq!(rep.k_ge.lattice, k);
        // K_gex = K(cbrt(3)): the constant class survives the join
        assert_eq!(rep.extended_degree, 3);
        assert_eq!(rep.k_gex.constant_degree, Some(3));
        assert!(rep
            .k_gex
            .lattice
            .member(&f.from_int(3), &Poly::one(&f))
            .unwrap());
        assert_eq!(rep.k_ge.constant_degree, Some(1));
        assert_eq!(rep.m0, Some(3));
        assert_eq!((rep.e_inf, rep.f_inf), (3, Some(1)));
    }

    #[test]
    fn cases_c1_c4_c5_c6() {
        // C1: s = r, K = E (xi = (-1)^3 * 1 = 6, a cube)
        let rep = genus_field(&spec7(&[(1, "T^3+T+1")])).unwrap();
        assert_eq!(rep.case, CaseLabel::C1);
        assert_eq!(rep.genus_degree, 1);
        assert_eq!(rep.k_ge.constant_degree, Some(1));

        // C4: s = r, K != E; the genus field picks up constants F_{q^3}
        let rep = genus_field(&spec7(&[(3, "T^3+T+1")])).unwrap();
        assert_eq!(rep.case, CaseLabel::C4);
        assert_eq!((rep.e_inf, rep.f_inf), (1, Some(3)));
        assert_eq!(rep.genus_degree, 3);
        assert_eq!(rep.k_ge.constant_degree, Some(3)); // t = f_inf
        assert_eq!(rep.m0, Some(3));

        // C5: all l | n_j, s < r, K != E
        let rep = genus_field(&spec7(&[(3, "T^3+3*T^2+2*T")])).unwrap();
        assert_eq!(rep.case, CaseLabel::C5);
        assert_eq!((rep.e_inf, rep.f_inf), (1, Some(3)));
        assert_eq!(rep.genus_degree, 9); // MK strictly contains M and the constants
        assert_eq!(rep.k_ge.constant_degree, Some(3));

        // C6: some l does not divide n_j, xi not all powers, f = l
        let rep = genus_field(&spec7(&[(3, "T^3+T+1"), (1, "T")])).unwrap();
        assert_eq!(rep.case, CaseLabel::C6);
        assert_eq!((rep.e_inf, rep.f_inf), (3, Some(3)));
        assert_eq!(rep.k_ge.lattice, rep.k_gex.lattice);
        assert_eq!(rep.k_ge.constant_degree, Some(3));
    }

    #[test]
    fn nonkummer_reports() {
        let f2 = make_field(2, 1, None).unwrap();
        let p1 = parse_poly(&f2, "T^2+T+1").unwrap();
        let p2 = parse_poly(&f2, "T^4+T+1").unwrap();

        let spec =
            build_nonkummer_spec(&f2, 3, vec![p1.clone()], vec![vec![1]], false).unwrap();
        let rep = genus_field_nonkummer(&spec).unwrap();
        assert_eq!(rep.case, CaseLabel::NkCyclotomic);
        assert_eq!(rep.genus_degree, 1);
        assert_eq!(rep.e_inf, 1);
        assert_eq!(rep.k_ge, rep.k_gex);
        assert_eq!(rep.k_ge.cyclotomic.len(), 1);
        assert!(!rep.k_ge.with_k);

        let spec = build_nonkummer_spec(
            &f2,
            3,
            vec![p1.clone(), p2.clone()],
            vec![vec![1], vec![1]],
            false,
        )
        .unwrap();
        let rep = genus_field_nonkummer(&spec).unwrap();
        assert_eq!(rep.genus_degree, 3); // l^(r - m) = 3^(2-1)
        assert_eq!(rep.k_ge.cyclotomic.len(), 2);

        let spec = build_nonkummer_spec(
            &f2,
            3,
            vec![p1.clone(), p2.clone()],
            vec![vec![1, 0], vec![0, 1]],
            false,
        )
        .unwrap();
        let rep = genus_field_nonkummer(&spec).unwrap();
        assert_eq!(rep.genus_degree, 1); // K already is the compositum

        let spec = build_nonkummer_spec(
            &f2,
            3,
            vec![p1.clone(), p2.clone()],
            vec![vec![1], vec![1]],
            true,
        )
        .unwrap();
        let rep = genus_field_nonkummer(&spec).unwrap();
        assert_eq!(rep.case, CaseLabel::NkTwisted);
        assert!(rep.k_ge.with_k);
        assert_eq!(rep.k_ge.constant_degree, None);
        assert_eq!(rep.f_inf, None);
        assert_eq!(rep.m0, None);
        assert_eq!(rep.e_inf, 1);
    }

    #[test]
    fn e_gex_idempotent() {
        // rebuilding E_gex from its own rows as generators returns the same
        // lattice: Y is already the full product group
        for raw in [
            vec![(6u64, "T^3+3*T^2+2*T")],
            vec![(3, "T"), (3, "T^3+T+1")],
            vec![(3, "T^2+1")],
        ] {
            let s = spec7(&raw);
            let f = s.field().clone();
            let eg = build_e_gex(&f, 3, &ramified_support(&s));
            let regen: Vec<_> = eg
                .lattice
                .row_radicals()
                .iter()
                .enumerate()
                .map(|(i, (g, _))| (g.clone(), eg.lattice.row_poly(i)))
                .collect();
            let s2 = build_spec(&f, 3, &regen).unwrap();
            let eg2 = build_e_gex(&f, 3, &ramified_support(&s2));
            assert_eq!(eg.lattice, eg2.lattice);
        }
    }

    #[test]
    fn alternate_pr_same_fields() {
        // two admissible P_r choices in the C3 example give equal lattices
        let s = spec7(&[(6, "T^3+3*T^2+2*T")]);
        let sup = ramified_support(&s);
        let canonical = genus_field(&s).unwrap();
        for idx in 0..sup.r() {
            if sup.degrees[idx] % 3 == 0 {
                continue;
            }
            let rep = genus_field_with_pr(&s, Some(idx)).unwrap();
            assert_eq!(rep.k_ge.lattice, canonical.k_ge.lattice);
            assert_eq!(rep.k_gex.lattice, canonical.k_gex.lattice);
            assert_eq!(rep.case, canonical.case);
        }
    }
}
