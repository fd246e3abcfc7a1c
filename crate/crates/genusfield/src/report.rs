//! Serialization of specs and genus reports: the JSON wire format (stable
//! field order, re-parseable) and the human-readable text rendering.

use serde::{Deserialize, Serialize};

use crate::characters::{build_nonkummer_spec, CyclotomicSubfield};
use crate::error::{Error, Result};
use crate::extension::{build_spec, KummerLattice};
use crate::genus::{Bezout, CaseLabel, FieldDescription, GenusReport, SpecEcho};
use crate::gf::{make_field, FieldDesc};
use crate::polyring::{parse_poly, render_poly, Poly};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorDto {
    pub gamma: String,
    #[serde(rename = "D")]
    pub d: String,
}

/// Input schema for both spec kinds; `generators` selects the Kummer path,
/// `primes`/`C` the non-Kummer path.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpecDto {
    pub p: u64,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u64>>,
    pub l: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<GeneratorDto>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub primes: Option<Vec<String>>,
    #[serde(rename = "C", skip_serializing_if = "Option::is_none")]
    pub c: Option<Vec<Vec<u64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub twisted: Option<bool>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SupportDto {
    pub primes: Vec<String>,
    pub degrees: Vec<u64>,
    pub s: usize,
    pub beta: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BezoutDto {
    pub a: i64,
    pub b: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RadicalDto {
    pub gamma: String,
    pub poly: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DescDto {
    pub radicals: Vec<RadicalDto>,
    pub cyclotomic: Vec<String>,
    #[serde(rename = "with_K")]
    pub with_k: bool,
    pub constant_degree: Option<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportDto {
    pub case: String,
    pub spec: SpecDto,
    pub support: SupportDto,
    #[serde(rename = "chosen_Pr")]
    pub chosen_pr: Option<String>,
    pub bezout: Option<BezoutDto>,
    #[serde(rename = "E")]
    pub e: Option<DescDto>,
    #[serde(rename = "E_gex")]
    pub e_gex: DescDto,
    #[serde(rename = "M")]
    pub m: Option<DescDto>,
    #[serde(rename = "K_ge")]
    pub k_ge: DescDto,
    #[serde(rename = "K_gex")]
    pub k_gex: DescDto,
    pub genus_degree: u64,
    pub extended_degree: u64,
    pub e_inf: u64,
    pub f_inf: Option<u64>,
    pub m0: Option<u64>,
}

fn spec_to_dto(spec: &SpecEcho) -> SpecDto {
    match spec {
        SpecEcho::Kummer(s) => {
            let field = s.field();
            SpecDto {
                p: field.p(),
                n: field.n(),
                modulus: Some(field.modulus().to_vec()),
                l: s.l(),
                generators: Some(
                    s.generators()
                        .iter()
                        .map(|g| GeneratorDto {
                            gamma: field.render(&g.gamma),
                            d: render_poly(field, &g.d),
                        })
                        .collect(),
                ),
                primes: None,
                c: None,
                twisted: None,
            }
        }
        SpecEcho::NonKummer(s) => {
            let field = s.field();
            SpecDto {
                p: field.p(),
                n: field.n(),
                modulus: Some(field.modulus().to_vec()),
                l: s.l(),
                generators: None,
                primes: Some(
                    s.primes()
                        .iter()
                        .map(|p| render_poly(field, p))
                        .collect(),
                ),
                c: Some(s.c_matrix().to_vec()),
                twisted: Some(s.twisted()),
            }
        }
    }
}

fn desc_to_dto(field: &FieldDesc, desc: &FieldDescription) -> DescDto {
    DescDto {
        radicals: (0..desc.lattice.rank())
            .map(|i| {
                let (gamma, _) = &desc.lattice.row_radicals()[i];
                RadicalDto {
                    gamma: field.render(gamma),
                    poly: render_poly(field, &desc.lattice.row_poly(i)),
                }
            })
            .collect(),
        cyclotomic: desc
            .cyclotomic
            .iter()
            .map(|c| render_poly(field, &c.prime))
            .collect(),
        with_k: desc.with_k,
        constant_degree: desc.constant_degree,
    }
}

pub fn report_to_dto(report: &GenusReport) -> ReportDto {
    let field = match &report.spec {
        SpecEcho::Kummer(s) => s.field().clone(),
        SpecEcho::NonKummer(s) => s.field().clone(),
    };
    ReportDto {
        case: report.case.as_str().to_string(),
        spec: spec_to_dto(&report.spec),
        support: SupportDto {
            primes: report
                .support
                .primes
                .iter()
                .map(|p| render_poly(&field, p))
                .collect(),
            degrees: report.support.degrees.clone(),
            s: report.support.s,
            beta: report.support.beta.clone(),
        },
        chosen_pr: report.chosen_pr.as_ref().map(|p| render_poly(&field, p)),
        bezout: report.bezout.map(|b| BezoutDto { a: b.a, b: b.b }),
        e: report.e.as_ref().map(|d| desc_to_dto(&field, d)),
        e_gex: desc_to_dto(&field, &report.e_gex),
        m: report.m_field.as_ref().map(|d| desc_to_dto(&field, d)),
        k_ge: desc_to_dto(&field, &report.k_ge),
        k_gex: desc_to_dto(&field, &report.k_gex),
        genus_degree: report.genus_degree,
        extended_degree: report.extended_degree,
        e_inf: report.e_inf,
        f_inf: report.f_inf,
        m0: report.m0,
    }
}

pub fn report_to_json(report: &GenusReport) -> String {
    serde_json::to_string_pretty(&report_to_dto(report)).expect("serializable")
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

pub fn parse_spec_dto(dto: &SpecDto) -> Result<SpecEcho> {
    let field = make_field(dto.p, dto.n, dto.modulus.clone())?;
    match (&dto.generators, &dto.primes) {
        (Some(gens), None) => {
            let raw: Result<Vec<_>> = gens
                .iter()
                .map(|g| Ok((field.parse(&g.gamma)?, parse_poly(&field, &g.d)?)))
                .collect();
            Ok(SpecEcho::Kummer(build_spec(&field, dto.l, &raw?)?))
        }
        (None, Some(primes)) => {
            let primes: Result<Vec<Poly>> =
                primes.iter().map(|p| parse_poly(&field, p)).collect();
            let c = dto
                .c
                .clone()
                .ok_or_else(|| Error::InvalidSpec("non-Kummer spec requires C".into()))?;
            Ok(SpecEcho::NonKummer(build_nonkummer_spec(
                &field,
                dto.l,
                primes?,
                c,
                dto.twisted.unwrap_or(false),
            )?))
        }
        _ => Err(Error::InvalidSpec(
            "spec must contain either \"generators\" or \"primes\"".into(),
        )),
    }
}

pub fn parse_spec_json(text: &str) -> Result<SpecEcho> {
    let dto: SpecDto =
        serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))?;
    parse_spec_dto(&dto)
}

fn desc_from_dto(field: &FieldDesc, l: u64, dto: &DescDto) -> Result<FieldDescription> {
    let radicands: Result<Vec<_>> = dto
        .radicals
        .iter()
        .map(|r| Ok((field.parse(&r.gamma)?, parse_poly(field, &r.poly)?)))
        .collect();
    let lattice = if dto.radicals.is_empty() {
        KummerLattice::empty(field, l)
    } else {
        KummerLattice::span(field, l, &radicands?)?
    };
    let cyclotomic: Result<Vec<CyclotomicSubfield>> = dto
        .cyclotomic
        .iter()
        .map(|p| {
            Ok(CyclotomicSubfield {
                prime: parse_poly(field, p)?,
                ell: l,
            })
        })
        .collect();
    Ok(FieldDescription {
        lattice,
        cyclotomic: cyclotomic?,
        with_k: dto.with_k,
        constant_degree: dto.constant_degree,
    })
}

/// Reconstruct a full report from its JSON form; the result compares equal
/// to the in-memory report it was rendered from.
pub fn parse_report_json(text: &str) -> Result<GenusReport> {
    let dto: ReportDto =
        serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))?;
    let spec = parse_spec_dto(&dto.spec)?;
    let (field, l) = match &spec {
        SpecEcho::Kummer(s) => (s.field().clone(), s.l()),
        SpecEcho::NonKummer(s) => (s.field().clone(), s.l()),
    };
    let case = CaseLabel::parse(&dto.case)
        .ok_or_else(|| Error::InvalidSpec(format!("unknown case label {}", dto.case)))?;
    let primes: Result<Vec<Poly>> = dto
        .support
        .primes
        .iter()
        .map(|p| parse_poly(&field, p))
        .collect();
    let support = crate::extension::RamifiedSupport {
        primes: primes?,
        degrees: dto.support.degrees.clone(),
        s: dto.support.s,
        beta: dto.support.beta.clone(),
    };
    Ok(GenusReport {
        case,
        spec,
        support,
        chosen_pr: dto
            .chosen_pr
            .as_ref()
            .map(|p| parse_poly(&field, p))
            .transpose()?,
        bezout: dto.bezout.as_ref().map(|b| Bezout { a: b.a, b: b.b }),
        e: dto
            .e
            .as_ref()
            .map(|d| desc_from_dto(&field, l, d))
            .transpose()?,
        e_gex: desc_from_dto(&field, l, &dto.e_gex)?,
        m_field: dto
            .m
            .as_ref()
            .map(|d| desc_from_dto(&field, l, d))
            .transpose()?,
        k_ge: desc_from_dto(&field, l, &dto.k_ge)?,
        k_gex: desc_from_dto(&field, l, &dto.k_gex)?,
        genus_degree: dto.genus_degree,
        extended_degree: dto.extended_degree,
        e_inf: dto.e_inf,
        f_inf: dto.f_inf,
        m0: dto.m0,
    })
}

// ---------------------------------------------------------------------------
// Text rendering
// ---------------------------------------------------------------------------

fn superscript(n: u64) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

/// "³√(6·T(T+2)²)" for one lattice row.
fn radical_text(field: &FieldDesc, l: u64, gamma: &crate::gf::FqElem, factors: &[(Poly, u64)]) -> String {
    let mut inner = String::new();
    let gs = field.render(gamma);
    if factors.is_empty() {
        inner.push_str(&gs);
    } else {
        let has_gamma = gs != "1";
        if has_gamma {
            if gs.contains('+') {
                inner.push_str(&format!("({gs})·"));
            } else {
                inner.push_str(&format!("{gs}·"));
            }
        }
        for (p, e) in factors {
            let ps = render_poly(field, p);
            // a lone plain factor needs no parentheses inside the radical
            let wrap = ps != "T" && (factors.len() > 1 || *e > 1 || has_gamma);
            if wrap {
                inner.push_str(&format!("({ps})"));
            } else {
                inner.push_str(&ps);
            }
            if *e > 1 {
                inner.push_str(&superscript(*e));
            }
        }
    }
    format!("{}√({})", superscript(l), inner)
}

fn desc_text(field: &FieldDesc, l: u64, desc: &FieldDescription) -> String {
    let mut parts: Vec<String> = Vec::new();
    if desc.lattice.rank() > 0 {
        let rads: Vec<String> = desc
            .lattice
            .row_radicals()
            .iter()
            .map(|(g, f)| radical_text(field, l, g, f))
            .collect();
        parts.push(format!("k( {} )", rads.join(", ")));
    }
    for c in &desc.cyclotomic {
        parts.push(format!("L[{}]", render_poly(field, &c.prime)));
    }
    if desc.with_k {
        parts.push("K".to_string());
    }
    if parts.is_empty() {
        "k".to_string()
    } else {
        parts.join("·")
    }
}

fn opt_u64(v: Option<u64>) -> String {
    match v {
        Some(x) => x.to_string(),
        None => "undetermined".to_string(),
    }
}

pub fn render_text(report: &GenusReport) -> String {
    let (field, l) = match &report.spec {
        SpecEcho::Kummer(s) => (s.field().clone(), s.l()),
        SpecEcho::NonKummer(s) => (s.field().clone(), s.l()),
    };
    let mut out = String::new();
    out.push_str(&format!("case: {}\n", report.case.as_str()));
    out.push_str(&format!("q = {}, l = {}\n", field.q(), l));
    match &report.spec {
        SpecEcho::Kummer(s) => {
            let rads: Vec<String> = s
                .generators()
                .iter()
                .zip(s.factored())
                .map(|(g, fac)| radical_text(&field, l, &g.gamma, fac))
                .collect();
            out.push_str(&format!("K = k( {} )\n", rads.join(", ")));
        }
        SpecEcho::NonKummer(s) => {
            out.push_str(&format!(
                "K: degree l^{} inside the compositum of the L[P_i], twisted = {}\n",
                s.m(),
                s.twisted()
            ));
        }
    }
    let primes: Vec<String> = report
        .support
        .primes
        .iter()
        .map(|p| render_poly(&field, p))
        .collect();
    out.push_str(&format!(
        "ramified support: {} (s = {})\n",
        primes.join(", "),
        report.support.s
    ));
    if let Some(pr) = &report.chosen_pr {
        let bez = report.bezout.expect("set together with P_r");
        out.push_str(&format!(
            "chosen P_r = {}, bezout a = {}, b = {}\n",
            render_poly(&field, pr),
            bez.a,
            bez.b
        ));
    }
    if let Some(e) = &report.e {
        out.push_str(&format!("E     = {}\n", desc_text(&field, l, e)));
    }
    out.push_str(&format!(
        "E_gex = {}\n",
        desc_text(&field, l, &report.e_gex)
    ));
    if let Some(m) = &report.m_field {
        out.push_str(&format!("M     = {}\n", desc_text(&field, l, m)));
    }
    out.push_str(&format!(
        "K_ge  = {}   [K_ge:K] = {}, constant degree {}\n",
        desc_text(&field, l, &report.k_ge),
        report.genus_degree,
        opt_u64(report.k_ge.constant_degree)
    ));
    out.push_str(&format!(
        "K_gex = {}   [K_gex:K] = {}, constant degree {}\n",
        desc_text(&field, l, &report.k_gex),
        report.extended_degree,
        opt_u64(report.k_gex.constant_degree)
    ));
    out.push_str(&format!(
        "e_inf = {}, f_inf = {}, m0 = {}\n",
        report.e_inf,
        opt_u64(report.f_inf),
        opt_u64(report.m0)
    ));
    out
}
