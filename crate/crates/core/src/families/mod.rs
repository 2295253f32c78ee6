//! Named Lie superalgebras, each returned verified and checked against its
//! closed-form dimensions.

pub mod abstract_algebras;
pub mod matrix;
pub mod square;

use std::fmt;

use crate::algebra::block::MatrixRealization;
use crate::algebra::combinators::{quotient_by_central, subalgebra};
use crate::algebra::{Subspace, SuperAlgebra};
use crate::exact::{is_positive_definite, rat};
use crate::{Error, Result};

/// A compact simple Lie algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KTag {
    Su(usize),
    So(usize),
    Sp(usize),
}

impl KTag {
    pub fn parse(s: &str) -> Result<KTag> {
        let s = s.trim().to_ascii_lowercase();
        let (kind, num) = s.split_at(2.min(s.len()));
        let n: usize = num
            .trim_matches(|c| c == '(' || c == ')')
            .parse()
            .map_err(|_| Error::InvalidParameters(format!("unknown Lie algebra {s:?}")))?;
        let k = match kind {
            "su" => KTag::Su(n),
            "so" => KTag::So(n),
            "sp" => KTag::Sp(n),
            _ => return Err(Error::InvalidParameters(format!("unknown Lie algebra {s:?}"))),
        };
        k.validate()?;
        Ok(k)
    }

    pub fn validate(self) -> Result<()> {
        let ok = match self {
            KTag::Su(n) => n >= 2,
            KTag::So(n) => n == 3 || n >= 5,
            KTag::Sp(n) => n >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameters(format!("{self} is not a compact simple Lie algebra")))
        }
    }

    pub fn dim(self) -> usize {
        match self {
            KTag::Su(n) => n * n - 1,
            KTag::So(n) => n * (n - 1) / 2,
            KTag::Sp(n) => n * (2 * n + 1),
        }
    }

    pub fn build(self) -> Result<SuperAlgebra> {
        self.validate()?;
        let (g, _) = match self {
            KTag::Su(n) => matrix::su_lie(n)?,
            KTag::So(n) => matrix::so_lie(n)?,
            KTag::Sp(n) => matrix::sp_lie(n)?,
        };
        Ok(g)
    }
}

impl fmt::Display for KTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KTag::Su(n) => write!(f, "su{n}"),
            KTag::So(n) => write!(f, "so{n}"),
            KTag::Sp(n) => write!(f, "sp{n}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    Gl { p: usize, q: usize },
    U { p: usize, q: usize },
    Su { n: usize, m: usize },
    Psu { n: usize },
    Q { n: usize },
    Pq { n: usize },
    QHat { n: usize },
    C { n: usize },
    Ch { v: usize },
    SpinH { v: usize },
    SpinHHat { v: usize },
    T(KTag),
    THat(KTag),
    TTilde(KTag),
    ChIndefinite { r: usize, s: usize },
}

fn need(params: &[usize], k: usize, tag: &str) -> Result<()> {
    if params.len() != k {
        return Err(Error::InvalidParameters(format!("{tag} takes {k} parameter(s), got {}", params.len())));
    }
    Ok(())
}

impl FamilySpec {
    /// Parses a family tag with numeric parameters; tangent families take a
    /// Lie algebra tag such as `su2` instead.
    pub fn parse(tag: &str, params: &str) -> Result<FamilySpec> {
        let tag = tag.trim();
        if matches!(tag, "T" | "T_hat" | "T_tilde") {
            let k = KTag::parse(params)?;
            return Ok(match tag {
                "T" => FamilySpec::T(k),
                "T_hat" => FamilySpec::THat(k),
                _ => FamilySpec::TTilde(k),
            });
        }
        let ps: Vec<usize> = if params.trim().is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|s| s.trim().parse().map_err(|_| Error::InvalidParameters(format!("bad parameter {s:?}"))))
                .collect::<Result<_>>()?
        };
        let spec = match tag {
            "gl" => {
                need(&ps, 2, tag)?;
                FamilySpec::Gl { p: ps[0], q: ps[1] }
            }
            "u" => {
                need(&ps, 2, tag)?;
                FamilySpec::U { p: ps[0], q: ps[1] }
            }
            "su" => {
                need(&ps, 2, tag)?;
                FamilySpec::Su { n: ps[0], m: ps[1] }
            }
            "ch_indefinite" => {
                need(&ps, 2, tag)?;
                FamilySpec::ChIndefinite { r: ps[0], s: ps[1] }
            }
            _ => {
                need(&ps, 1, tag)?;
                let n = ps[0];
                match tag {
                    "psu" => FamilySpec::Psu { n },
                    "q" => FamilySpec::Q { n },
                    "pq" => FamilySpec::Pq { n },
                    "q_hat" => FamilySpec::QHat { n },
                    "c" => FamilySpec::C { n },
                    "ch" => FamilySpec::Ch { v: n },
                    "spin_h" => FamilySpec::SpinH { v: n },
                    "spin_h_hat" => FamilySpec::SpinHHat { v: n },
                    _ => return Err(Error::InvalidParameters(format!("unknown family {tag:?}"))),
                }
            }
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn tag(&self) -> &'static str {
        match self {
            FamilySpec::Gl { .. } => "gl",
            FamilySpec::U { .. } => "u",
            FamilySpec::Su { .. } => "su",
            FamilySpec::Psu { .. } => "psu",
            FamilySpec::Q { .. } => "q",
            FamilySpec::Pq { .. } => "pq",
            FamilySpec::QHat { .. } => "q_hat",
            FamilySpec::C { .. } => "c",
            FamilySpec::Ch { .. } => "ch",
            FamilySpec::SpinH { .. } => "spin_h",
            FamilySpec::SpinHHat { .. } => "spin_h_hat",
            FamilySpec::T(_) => "T",
            FamilySpec::THat(_) => "T_hat",
            FamilySpec::TTilde(_) => "T_tilde",
            FamilySpec::ChIndefinite { .. } => "ch_indefinite",
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidParameters(format!("{self}: {msg}")));
        match *self {
            FamilySpec::Gl { p, q } | FamilySpec::U { p, q } if p + q == 0 => bad("p + q must be positive"),
            FamilySpec::Su { n, m } if m < 1 || n < m => bad("requires n >= m >= 1"),
            FamilySpec::Psu { n } if n < 1 => bad("requires n >= 1"),
            FamilySpec::Pq { n } if n < 1 => bad("requires n >= 1"),
            FamilySpec::C { n } if n < 2 => bad("requires n >= 2"),
            FamilySpec::Ch { v } | FamilySpec::SpinH { v } | FamilySpec::SpinHHat { v } if v < 1 => {
                bad("requires dim V >= 1")
            }
            FamilySpec::ChIndefinite { r, s } if r < 1 || s < 1 => bad("requires r, s >= 1"),
            FamilySpec::T(k) | FamilySpec::THat(k) | FamilySpec::TTilde(k) => k.validate(),
            _ => Ok(()),
        }
    }

    /// Closed-form real dimensions `(d₀, d₁)`.
    pub fn expected_dims(&self) -> (usize, usize) {
        match *self {
            FamilySpec::Gl { p, q } => (2 * (p * p + q * q), 4 * p * q),
            FamilySpec::U { p, q } => (p * p + q * q, 2 * p * q),
            FamilySpec::Su { n, m } => (n * n + m * m - 1, 2 * n * m),
            FamilySpec::Psu { n } => (2 * n * n - 2, 2 * n * n),
            FamilySpec::Q { n } => ((n + 1) * (n + 1), (n + 1) * (n + 1) - 1),
            FamilySpec::Pq { n } => ((n + 1) * (n + 1) - 1, (n + 1) * (n + 1) - 1),
            FamilySpec::QHat { n } => ((n + 1) * (n + 1), (n + 1) * (n + 1)),
            FamilySpec::C { n } => (1 + (n - 1) * (2 * n - 1), 4 * (n - 1)),
            FamilySpec::Ch { v } => (2, 4 * v),
            FamilySpec::SpinH { v } => (1, 2 * v),
            FamilySpec::SpinHHat { v } => (2, 2 * v),
            FamilySpec::T(k) => (k.dim(), k.dim()),
            FamilySpec::THat(k) => (k.dim(), k.dim() + 1),
            FamilySpec::TTilde(k) => (k.dim() + 1, k.dim()),
            FamilySpec::ChIndefinite { r, s } => (1, r + s),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Gl { p, q } => write!(f, "gl({p}|{q})"),
            FamilySpec::U { p, q } => write!(f, "u({p}|{q})"),
            FamilySpec::Su { n, m } => write!(f, "su({n}|{m})"),
            FamilySpec::Psu { n } => write!(f, "psu({n}|{n})"),
            FamilySpec::Q { n } => write!(f, "q({n})"),
            FamilySpec::Pq { n } => write!(f, "pq({n})"),
            FamilySpec::QHat { n } => write!(f, "q^({n})"),
            FamilySpec::C { n } => write!(f, "c({n})"),
            FamilySpec::Ch { v } => write!(f, "ch({v})"),
            FamilySpec::SpinH { v } => write!(f, "spin_h({v})"),
            FamilySpec::SpinHHat { v } => write!(f, "spin_h^({v})"),
            FamilySpec::T(k) => write!(f, "T{k}"),
            FamilySpec::THat(k) => write!(f, "T^{k}"),
            FamilySpec::TTilde(k) => write!(f, "T~{k}"),
            FamilySpec::ChIndefinite { r, s } => write!(f, "ch({r},{s})"),
        }
    }
}

/// A constructed family member.
#[derive(Clone, Debug)]
pub struct Built {
    pub spec: FamilySpec,
    pub algebra: SuperAlgebra,
    pub realization: Option<MatrixRealization>,
}

fn psu(n: usize) -> Result<SuperAlgebra> {
    let (g, real) = matrix::su(n, n)?;
    let z = Subspace::span(g.dim(), &[matrix::i_one(&real)]);
    Ok(quotient_by_central(&g, &z)?.algebra)
}

fn pq(n: usize) -> Result<SuperAlgebra> {
    let (g, real) = matrix::q(n, false)?;
    let z = Subspace::span(g.dim(), &[matrix::i_one(&real)]);
    Ok(quotient_by_central(&g, &z)?.algebra)
}

/// Constructs, verifies, and checks the dimensions.
pub fn build(spec: FamilySpec) -> Result<Built> {
    spec.validate()?;
    let (algebra, realization) = match spec {
        FamilySpec::Gl { p, q } => with_real(matrix::gl(p, q)?),
        FamilySpec::U { p, q } => with_real(matrix::u(p, q)?),
        FamilySpec::Su { n, m } => with_real(matrix::su(n, m)?),
        FamilySpec::Psu { n } => (psu(n)?, None),
        FamilySpec::Q { n } => with_real(matrix::q(n, false)?),
        FamilySpec::Pq { n } => (pq(n)?, None),
        FamilySpec::QHat { n } => with_real(matrix::q(n, true)?),
        FamilySpec::C { n } => with_real(build_c_family(n)?),
        FamilySpec::Ch { v } => (abstract_algebras::ch_complex(v)?, None),
        FamilySpec::SpinH { v } => (abstract_algebras::spin_h(v)?, None),
        FamilySpec::SpinHHat { v } => (abstract_algebras::spin_h_hat(v)?, None),
        FamilySpec::T(k) => (abstract_algebras::tangent(&k.build()?)?, None),
        FamilySpec::THat(k) => (abstract_algebras::tangent_hat(&k.build()?)?, None),
        FamilySpec::TTilde(k) => (abstract_algebras::tangent_tilde(&k.build()?)?, None),
        FamilySpec::ChIndefinite { r, s } => (abstract_algebras::ch_indefinite(r, s)?, None),
    };
    let algebra = algebra.with_name(spec.to_string());
    algebra.verify().map_err(|e| Error::Defect(format!("{spec} fails verification: {e}")))?;
    let dims = (algebra.d0(), algebra.d1());
    if dims != spec.expected_dims() {
        return Err(Error::Defect(format!("{spec} has dimensions {dims:?}, expected {:?}", spec.expected_dims())));
    }
    Ok(Built { spec, algebra, realization })
}

fn with_real((g, r): matrix::Built) -> (SuperAlgebra, Option<MatrixRealization>) {
    (g, Some(r))
}

/// `c(n)` with the structural checks of its even part: `z(g₀)` is one
/// dimensional and the Killing form of `[g₀, g₀]` is negative definite.
pub fn build_c_family(n: usize) -> Result<matrix::Built> {
    if n < 2 {
        return Err(Error::InvalidParameters("c(n) requires n >= 2".into()));
    }
    let (g, real) = matrix::c(n)?;
    if g.even_center().dim() != 1 {
        return Err(Error::Defect("center of the even part of c(n) is not one dimensional".into()));
    }
    let g0 = g.even_part();
    let derived = subalgebra(&g, &g.bracket_span(&g0, &g0), "[g0,g0]")?.algebra;
    let neg = derived.killing_form().scale(&rat(-1));
    if !is_positive_definite(&neg).map_err(|_| Error::Defect("Killing form not symmetric".into()))?.is_positive() {
        return Err(Error::Defect("Killing form of [g0, g0] is not negative definite".into()));
    }
    Ok((g, real))
}
