//! Semi-simplicity diagnostics and orbit tables.
//!
//! [`semisimplicity_report`] decides semi-simplicity three ways and refuses to
//! return a report when they disagree.

use itertools::Itertools;
use num_rational::BigRational;
use serde::Serialize;

use crate::abelian::{cokernel, FGAbelianGroup, IntMatrix};
use crate::error::{Error, Result};
use crate::orbits::{OrbitCatalog, StringSummand, SummandDecomposition};
use crate::params::{
    ariki_product_nonzero, cherednik_semisimple, chi_to_kappa, hecke_params, CircleElement,
    HeckeParams, KappaParams, RationalCharacter,
};
use crate::partitions::{MultiPartition, Partition};
use crate::rootlattice::{generate_rn, pair, DimVector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ViolatedRoot {
    pub root: DimVector,
    #[serde(serialize_with = "ser_rational")]
    pub pairing: BigRational,
}

fn ser_rational<S: serde::Serializer>(
    x: &BigRational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeckeSummary {
    pub q0: CircleElement,
    pub q1: CircleElement,
    pub u: Vec<CircleElement>,
    pub q: CircleElement,
}

impl From<&HeckeParams> for HeckeSummary {
    fn from(h: &HeckeParams) -> Self {
        HeckeSummary {
            q0: h.q0.clone(),
            q1: h.q1.clone(),
            u: h.u.clone(),
            q: h.q(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemisimplicityReport {
    pub n: usize,
    pub ell: usize,
    pub chi: RationalCharacter,
    /// `χ·α ∉ Z` for every `α ∈ R_n`.
    pub verdict_roots: bool,
    /// Ariki's product is nonzero at the Hecke parameters of `χ`.
    pub verdict_hecke: bool,
    /// Spherical category `O` is semi-simple and `κ_{0,0} - κ_{0,1} ∉ Z`.
    pub verdict_cherednik: bool,
    /// `|Q_χ(n, ℓ)| = |P_ℓ(n)|`.
    pub verdict_counting: bool,
    pub violated_roots: Vec<ViolatedRoot>,
    pub simple_count: usize,
    pub pell_count: usize,
    pub orbit_count: usize,
    pub chi_integral: bool,
    pub kappa: KappaParams,
    pub hecke: HeckeSummary,
}

impl SemisimplicityReport {
    pub fn is_semisimple(&self) -> bool {
        self.verdict_roots
    }

    /// Runs every criterion against a precomputed catalog for `(n, ℓ)`.
    pub fn from_catalog(catalog: &OrbitCatalog, chi: &RationalCharacter) -> Result<Self> {
        let (n, ell) = (catalog.n(), catalog.ell());
        check_inputs(n, ell, chi)?;

        let violated_roots = generate_rn(n, ell)
            .iter()
            .map(|alpha| Ok((alpha, pair(chi, alpha)?)))
            .filter_map_ok(|(alpha, p)| {
                p.is_integer().then(|| ViolatedRoot {
                    root: alpha.clone(),
                    pairing: p,
                })
            })
            .collect::<Result<Vec<_>>>()?;

        let kappa = chi_to_kappa(chi);
        let hecke = hecke_params(&kappa);
        let simple_count = catalog.count_admissible(chi)?;
        let pell_count = catalog.multipartition_count();

        let verdicts = Verdicts {
            roots: violated_roots.is_empty(),
            hecke: ariki_product_nonzero(&hecke.q(), &hecke.u, n),
            cherednik: cherednik_semisimple(&kappa, n) && !kappa.k().is_integer(),
            counting: simple_count == pell_count,
        };
        verdicts.check()?;

        Ok(SemisimplicityReport {
            n,
            ell,
            chi: chi.clone(),
            verdict_roots: verdicts.roots,
            verdict_hecke: verdicts.hecke,
            verdict_cherednik: verdicts.cherednik,
            verdict_counting: verdicts.counting,
            violated_roots,
            simple_count,
            pell_count,
            orbit_count: catalog.len(),
            chi_integral: chi.is_integral(),
            hecke: HeckeSummary::from(&hecke),
            kappa,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Verdicts {
    roots: bool,
    hecke: bool,
    cherednik: bool,
    counting: bool,
}

impl Verdicts {
    fn check(self) -> Result<()> {
        let all = [self.roots, self.hecke, self.cherednik, self.counting];
        if all.iter().all_equal() {
            Ok(())
        } else {
            Err(Error::CriteriaDisagreement {
                roots: self.roots,
                hecke: self.hecke,
                cherednik: self.cherednik,
                counting: self.counting,
            })
        }
    }
}

fn check_inputs(n: usize, ell: usize, chi: &RationalCharacter) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if ell == 0 {
        return Err(Error::InvalidParameter("ℓ must be at least 1".into()));
    }
    if chi.ell() != ell {
        return Err(Error::DimensionMismatch {
            expected: ell,
            found: chi.ell(),
        });
    }
    Ok(())
}

pub fn semisimplicity_report(
    n: usize,
    ell: usize,
    chi: &RationalCharacter,
) -> Result<SemisimplicityReport> {
    check_inputs(n, ell, chi)?;
    SemisimplicityReport::from_catalog(&OrbitCatalog::new(n, ell), chi)
}

/// One hyperplane `χ·α ∈ Z` of the non-semi-simple locus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hyperplane {
    pub root: DimVector,
    pub equation: String,
}

/// `(2,1)` renders as `2χ_0 + χ_1 ∈ Z`.
fn render_equation(alpha: &DimVector) -> String {
    let mut lhs = String::new();
    for (i, &c) in alpha.coords().iter().enumerate() {
        if c == 0 {
            continue;
        }
        let sign = if c < 0 { "-" } else { "+" };
        if lhs.is_empty() {
            if c < 0 {
                lhs.push('-');
            }
        } else {
            lhs.push_str(&format!(" {sign} "));
        }
        if c.abs() != 1 {
            lhs.push_str(&c.abs().to_string());
        }
        lhs.push_str(&format!("χ_{i}"));
    }
    if lhs.is_empty() {
        lhs.push('0');
    }
    format!("{lhs} ∈ Z")
}

/// The hyperplanes `χ·α ∈ Z`, `α ∈ R_n`, in root-set order.
pub fn hyperplane_listing(n: usize, ell: usize) -> Result<Vec<Hyperplane>> {
    if n == 0 || ell == 0 {
        return Err(Error::InvalidParameter("n and ℓ must be at least 1".into()));
    }
    Ok(generate_rn(n, ell)
        .iter()
        .map(|alpha| Hyperplane {
            root: alpha.clone(),
            equation: render_equation(alpha),
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitRecord {
    pub lambda: Partition,
    pub nu: MultiPartition,
    pub framed: DimVector,
    pub summands: Vec<StringSummand>,
    pub pi1: FGAbelianGroup,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monodromic_for_chi: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitTotals {
    /// `|Q(n, ℓ)|`
    pub orbits: usize,
    /// `|Q_χ(n, ℓ)|`, when a character was given.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simples: Option<usize>,
    /// `|P_ℓ(n)|`
    pub multipartitions: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub n: usize,
    pub ell: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi: Option<RationalCharacter>,
    pub records: Vec<OrbitRecord>,
    pub totals: OrbitTotals,
}

fn pi1_from(decomp: &SummandDecomposition, ell: usize) -> FGAbelianGroup {
    let mut cols: Vec<DimVector> = Vec::new();
    for s in &decomp.strings {
        if !cols.contains(&s.dim_vector) {
            cols.push(s.dim_vector.clone());
        }
    }
    cokernel(&IntMatrix::from_columns(ell, &cols))
}

/// Every orbit of `Q(n, ℓ)` with its summands and fundamental group, plus the
/// monodromy flag when `chi` is given. With `only_admissible`, orbits without
/// a monodromic local system are left out.
pub fn orbit_report_filtered(
    catalog: &OrbitCatalog,
    chi: Option<&RationalCharacter>,
    only_admissible: bool,
) -> Result<OrbitReport> {
    let (n, ell) = (catalog.n(), catalog.ell());
    let flags = chi.map(|c| catalog.monodromic_flags(c)).transpose()?;
    let records = catalog
        .labels()
        .iter()
        .zip(catalog.decompositions())
        .enumerate()
        .filter(|(k, _)| !only_admissible || flags.as_ref().is_none_or(|f| f[*k]))
        .map(|(k, (label, decomp))| OrbitRecord {
            lambda: label.lambda().clone(),
            nu: label.nu().clone(),
            framed: decomp.framed.clone(),
            summands: decomp.strings.clone(),
            pi1: pi1_from(decomp, ell),
            monodromic_for_chi: flags.as_ref().map(|f| f[k]),
        })
        .collect();
    Ok(OrbitReport {
        n,
        ell,
        chi: chi.cloned(),
        records,
        totals: OrbitTotals {
            orbits: catalog.len(),
            simples: flags.map(|f| f.into_iter().filter(|&b| b).count()),
            multipartitions: catalog.multipartition_count(),
        },
    })
}

pub fn orbit_report(n: usize, ell: usize, chi: Option<&RationalCharacter>) -> Result<OrbitReport> {
    if ell == 0 {
        return Err(Error::InvalidParameter("ℓ must be at least 1".into()));
    }
    if let Some(c) = chi {
        if c.ell() != ell {
            return Err(Error::DimensionMismatch {
                expected: ell,
                found: c.ell(),
            });
        }
    }
    orbit_report_filtered(&OrbitCatalog::new(n, ell), chi, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi(s: &str) -> RationalCharacter {
        s.parse().unwrap()
    }

    #[test]
    fn generic_report() {
        let r = semisimplicity_report(2, 2, &chi("1/5,1/7")).unwrap();
        assert!(r.verdict_roots && r.verdict_hecke && r.verdict_cherednik && r.verdict_counting);
        assert_eq!(r.simple_count, 5);
        assert_eq!(r.pell_count, 5);
        assert_eq!(r.orbit_count, 41);
        assert!(r.violated_roots.is_empty());
        assert!(!r.chi_integral);
    }

    #[test]
    fn half_integral_ell1() {
        let r = semisimplicity_report(2, 1, &chi("1/2")).unwrap();
        assert!(!r.verdict_roots && !r.verdict_hecke && !r.verdict_counting);
        assert_eq!(r.violated_roots.len(), 1);
        assert_eq!(r.violated_roots[0].root.to_string(), "(2)");
        assert_eq!(
            r.violated_roots[0].pairing,
            BigRational::from_integer(1.into())
        );
        assert_eq!(r.simple_count, 3);
    }

    #[test]
    fn integral_report() {
        let r = semisimplicity_report(2, 2, &chi("0,0")).unwrap();
        assert!(!r.verdict_roots && !r.verdict_hecke && !r.verdict_counting);
        assert_eq!(r.simple_count, 41);
        assert!(r.chi_integral);
        assert_eq!(r.violated_roots.len(), 5);
    }

    #[test]
    fn disagreement_is_an_error() {
        let honest = Verdicts {
            roots: true,
            hecke: true,
            cherednik: true,
            counting: true,
        };
        assert!(honest.check().is_ok());
        let corrupted = Verdicts {
            hecke: false,
            ..honest
        };
        assert_eq!(
            corrupted.check().unwrap_err(),
            Error::CriteriaDisagreement {
                roots: true,
                hecke: false,
                cherednik: true,
                counting: true
            }
        );
    }

    #[test]
    fn input_errors() {
        assert!(matches!(
            semisimplicity_report(0, 1, &chi("1/2")),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            semisimplicity_report(2, 2, &chi("1/2")),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(orbit_report(2, 2, Some(&chi("1/2"))).is_err());
    }

    #[test]
    fn hyperplanes() {
        let h = hyperplane_listing(1, 1).unwrap();
        assert_eq!(h.len(), 1);
        assert_eq!(h[0].equation, "χ_0 ∈ Z");
        assert_eq!(hyperplane_listing(2, 1).unwrap().len(), 2);
        let h = hyperplane_listing(2, 2).unwrap();
        let eqs: Vec<_> = h.iter().map(|x| x.equation.as_str()).collect();
        assert_eq!(
            eqs,
            [
                "χ_0 + χ_1 ∈ Z",
                "2χ_0 + 2χ_1 ∈ Z",
                "χ_1 ∈ Z",
                "χ_0 + 2χ_1 ∈ Z",
                "χ_0 ∈ Z"
            ]
        );
        assert!(hyperplane_listing(0, 2).is_err());
    }

    #[test]
    fn equation_rendering_signs() {
        let v: DimVector = "(-1,0,3)".parse().unwrap();
        assert_eq!(render_equation(&v), "-χ_0 + 3χ_2 ∈ Z");
        let v: DimVector = "(2,-1)".parse().unwrap();
        assert_eq!(render_equation(&v), "2χ_0 - χ_1 ∈ Z");
    }

    #[test]
    fn ell1_orbit_table() {
        let r = orbit_report(2, 1, None).unwrap();
        let pi1: Vec<_> = r.records.iter().map(|x| x.pi1.to_string()).collect();
        assert_eq!(pi1, ["Z", "Z", "1", "Z/2", "1"]);
        assert_eq!(r.totals.simples, None);

        let r = orbit_report(2, 1, Some(&chi("1/2"))).unwrap();
        let flags: Vec<_> = r
            .records
            .iter()
            .map(|x| x.monodromic_for_chi.unwrap())
            .collect();
        assert_eq!(flags, [true, true, false, true, false]);
        assert_eq!(r.totals.simples, Some(3));

        let r = orbit_report(2, 1, Some(&chi("0"))).unwrap();
        assert!(r.records.iter().all(|x| x.monodromic_for_chi == Some(true)));
        assert_eq!(r.totals.simples, Some(5));
    }
}
