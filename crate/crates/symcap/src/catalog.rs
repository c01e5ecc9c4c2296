//! Catalog of irreducible Hermitian symmetric spaces of compact type with
//! the numeric invariants the certificate engine needs: complex dimension,
//! rank, the first Chern number c_1(A) on the generator of H_2, and a pair
//! of complex codimensions carrying a nonvanishing degree-one three-point
//! invariant with a point insertion.
//!
//! For Grassmannians the pair is computed by the quantum module's search;
//! for the other families it is a catalog constant.  Every entry satisfies
//! the degree identity 2(D - a) + 2(D - b) = 4D - 2 c_1(A), i.e.
//! a + b = c_1(A), which is checked by tests as exact integer arithmetic.

use crate::error::Error;
use crate::jts::{Family, JtsSpec};
use crate::quantum::GrassSpec;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HssctFamily {
    /// complex Grassmannian G(k, n)
    Grass { k: usize, n: u32 },
    /// SO(2n)/U(n), the compact dual of the skew-symmetric domain
    SODual { n: u32 },
    /// Lagrangian Grassmannian LG(n, 2n) = Sp(n)/U(n)
    LGDual { n: u32 },
    /// complex quadric of dimension m >= 3
    Quadric { m: u32 },
    /// Cayley plane (E6 family), dimension 16
    CayleyPlane,
    /// Freudenthal variety (E7 family), dimension 27
    Freudenthal,
}

impl HssctFamily {
    pub fn canonical_name(&self) -> String {
        match self {
            HssctFamily::Grass { k, n } => format!("grass[{k},{n}]"),
            HssctFamily::SODual { n } => format!("so[{n}]"),
            HssctFamily::LGDual { n } => format!("lg[{n}]"),
            HssctFamily::Quadric { m } => format!("quadric[{m}]"),
            HssctFamily::CayleyPlane => "e6".to_string(),
            HssctFamily::Freudenthal => "e7".to_string(),
        }
    }
}

/// Where the nonvanishing codimension pair of an entry comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairSource {
    /// found by the quantum module's exhaustive search (Grassmannians)
    Computed,
    /// complex codimensions quoted from the quantum cohomology literature
    Codims(i64, i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEntry {
    pub family: HssctFamily,
    pub complex_dim: i64,
    pub rank: i64,
    pub c1: i64,
    pub pair: PairSource,
}

impl CatalogEntry {
    pub fn lookup(family: HssctFamily) -> Result<CatalogEntry> {
        match family {
            HssctFamily::Grass { k, n } => {
                let g = GrassSpec::new(k, n)?;
                Ok(CatalogEntry {
                    family,
                    complex_dim: g.complex_dim() as i64,
                    rank: (k as i64).min(g.cols() as i64),
                    c1: n as i64,
                    pair: PairSource::Computed,
                })
            }
            HssctFamily::SODual { n } => {
                if n < 2 {
                    return Err(Error::InvalidSpec(format!("so[{n}] needs n >= 2")));
                }
                let n = n as i64;
                Ok(CatalogEntry {
                    family,
                    complex_dim: n * (n - 1) / 2,
                    rank: n / 2,
                    c1: 2 * (n - 1),
                    pair: PairSource::Codims(n - 1, n - 1),
                })
            }
            HssctFamily::LGDual { n } => {
                if n < 1 {
                    return Err(Error::InvalidSpec(format!("lg[{n}] needs n >= 1")));
                }
                let n = n as i64;
                Ok(CatalogEntry {
                    family,
                    complex_dim: n * (n + 1) / 2,
                    rank: n,
                    c1: n + 1,
                    pair: PairSource::Codims(n, 1),
                })
            }
            HssctFamily::Quadric { m } => {
                if m < 3 {
                    return Err(Error::InvalidSpec(format!(
                        "quadric[{m}] needs m >= 3 (low quadrics coincide with \
                         projective spaces or products)"
                    )));
                }
                let m = m as i64;
                Ok(CatalogEntry {
                    family,
                    complex_dim: m,
                    rank: 2,
                    c1: m,
                    pair: PairSource::Codims(m - 1, 1),
                })
            }
            HssctFamily::CayleyPlane => Ok(CatalogEntry {
                family,
                complex_dim: 16,
                rank: 2,
                c1: 12,
                pair: PairSource::Codims(8, 4),
            }),
            HssctFamily::Freudenthal => Ok(CatalogEntry {
                family,
                complex_dim: 27,
                rank: 3,
                c1: 18,
                pair: PairSource::Codims(13, 5),
            }),
        }
    }

    /// A biholomorphic projective space (Fano index = dim + 1).
    pub fn is_projective(&self) -> bool {
        self.c1 == self.complex_dim + 1
    }

    /// A one-dimensional entry, i.e. the projective line.
    pub fn is_line(&self) -> bool {
        self.complex_dim == 1
    }

    /// The degree identity on the codimension pair:
    /// 2(D - a) + 2(D - b) = 4D - 2 c1, equivalently a + b = c1.
    pub fn degree_identity_holds(&self, a: i64, b: i64) -> bool {
        2 * (self.complex_dim - a) + 2 * (self.complex_dim - b)
            == 4 * self.complex_dim - 2 * self.c1
    }
}

/// The two readings of the quoted homology degree (n-1)(n-2) for the
/// SO(2n)/U(n) pair: as a real homology degree it yields equal complex
/// codimensions (n-1, n-1); read as a complex codimension it yields the
/// pair ((n-1)(n-2), (n-1)(n-2)).  Returns both together with whether each
/// satisfies the degree identity.
pub fn sodual_pair_interpretations(n: u32) -> Result<[((i64, i64), bool); 2]> {
    let entry = CatalogEntry::lookup(HssctFamily::SODual { n })?;
    let n = n as i64;
    let as_degree = (n - 1, n - 1);
    let as_codim = ((n - 1) * (n - 2), (n - 1) * (n - 2));
    Ok([
        (
            as_degree,
            entry.degree_identity_holds(as_degree.0, as_degree.1),
        ),
        (
            as_codim,
            entry.degree_identity_holds(as_codim.0, as_codim.1),
        ),
    ])
}

/// Compact dual of a classical bounded symmetric domain.  The rank-two
/// spin domain of dimension 2 splits as a bidisc, whose dual is not an
/// irreducible catalog entry.
pub fn dual_of_domain(spec: JtsSpec) -> Result<HssctFamily> {
    match spec.family() {
        Family::TypeI { p, q } => Ok(HssctFamily::Grass {
            k: p,
            n: (p + q) as u32,
        }),
        Family::TypeII { n } => Ok(HssctFamily::SODual { n: n as u32 }),
        Family::TypeIII { n } => Ok(HssctFamily::LGDual { n: n as u32 }),
        Family::TypeIV { n } => {
            if n < 3 {
                return Err(Error::Unsupported(
                    "the dimension-2 spin domain is a bidisc; its dual is not irreducible".into(),
                ));
            }
            Ok(HssctFamily::Quadric { m: n as u32 })
        }
    }
}

/// Domain associated to a compact catalog family, when classical.
pub fn domain_of_dual(family: HssctFamily) -> Result<JtsSpec> {
    match family {
        HssctFamily::Grass { k, n } => JtsSpec::type_i(k, n as usize - k),
        HssctFamily::SODual { n } => JtsSpec::type_ii(n as usize),
        HssctFamily::LGDual { n } => JtsSpec::type_iii(n as usize),
        HssctFamily::Quadric { m } => JtsSpec::type_iv(m as usize),
        HssctFamily::CayleyPlane | HssctFamily::Freudenthal => Err(Error::Unsupported(
            "exceptional domains are carried as catalog invariants only".into(),
        )),
    }
}
