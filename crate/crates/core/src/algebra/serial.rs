//! JSON form of algebras: integers are decimal strings, only brackets with
//! `i ≤ j` are listed.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::block::{from_matrix_span, BlockMatrix, MatrixRealization};
use super::space::{Parity, SuperSpace};
use super::structure::SuperAlgebra;
use crate::exact::{vec_ops, CMatrix, Rational, Scalar};
use crate::{Error, Result};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct BasisJson {
    pub id: String,
    pub parity: u8,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct TermJson {
    pub k: String,
    pub num: String,
    pub den: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct BracketJson {
    pub i: String,
    pub j: String,
    pub terms: Vec<TermJson>,
}

/// Matrix basis: `matrices[b][r][c] = [re, im]` as rational strings.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct RealizationJson {
    pub p: String,
    pub q: String,
    pub matrices: Vec<Vec<Vec<[String; 2]>>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct AlgebraJson {
    pub name: String,
    pub basis: Vec<BasisJson>,
    pub brackets: Vec<BracketJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub realization: Option<RealizationJson>,
}

fn rational_string(r: &Rational) -> String {
    r.to_string()
}

fn parse_index(s: &str, n: usize) -> Result<usize> {
    let i: usize = s.trim().parse().map_err(|_| Error::Parse(format!("bad index {s:?}")))?;
    if i >= n {
        return Err(Error::Parse(format!("index {i} out of range")));
    }
    Ok(i)
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.trim().parse().map_err(|_| Error::Parse(format!("bad integer {s:?}")))
}

fn parse_rat(s: &str) -> Result<Rational> {
    crate::exact::scalar::parse_rational(s).ok_or_else(|| Error::Parse(format!("bad rational {s:?}")))
}

pub fn to_json_value(g: &SuperAlgebra, real: Option<&MatrixRealization>) -> AlgebraJson {
    let basis =
        (0..g.dim()).map(|i| BasisJson { id: g.space().label(i).to_string(), parity: g.parity(i).bit() }).collect();
    let brackets = g
        .stored_brackets()
        .map(|((i, j), t)| BracketJson {
            i: i.to_string(),
            j: j.to_string(),
            terms: t
                .iter()
                .map(|(k, c)| TermJson { k: k.to_string(), num: c.numer().to_string(), den: c.denom().to_string() })
                .collect(),
        })
        .collect();
    let realization = real.map(|r| RealizationJson {
        p: r.p.to_string(),
        q: r.q.to_string(),
        matrices: r
            .basis
            .iter()
            .map(|b| {
                let m = b.matrix();
                (0..m.rows())
                    .map(|i| {
                        (0..m.cols())
                            .map(|j| [rational_string(&m[(i, j)].re), rational_string(&m[(i, j)].im)])
                            .collect()
                    })
                    .collect()
            })
            .collect(),
    });
    AlgebraJson { name: g.name().to_string(), basis, brackets, realization }
}

pub fn to_json(g: &SuperAlgebra, real: Option<&MatrixRealization>) -> String {
    serde_json::to_string_pretty(&to_json_value(g, real)).expect("serializable")
}

pub fn from_json_value(a: &AlgebraJson) -> Result<(SuperAlgebra, Option<MatrixRealization>)> {
    let n = a.basis.len();
    let labels = a.basis.iter().map(|b| b.id.clone()).collect();
    let parities = a
        .basis
        .iter()
        .map(|b| Parity::from_bit(b.parity).ok_or_else(|| Error::Parse(format!("bad parity {}", b.parity))))
        .collect::<Result<Vec<_>>>()?;
    let space = SuperSpace::new(labels, parities)?;
    let mut brackets = Vec::new();
    for b in &a.brackets {
        let i = parse_index(&b.i, n)?;
        let j = parse_index(&b.j, n)?;
        if i > j {
            return Err(Error::Parse(format!("bracket ({i}, {j}) must have i <= j")));
        }
        let mut v = vec_ops::zero(n);
        for t in &b.terms {
            let k = parse_index(&t.k, n)?;
            let den = parse_int(&t.den)?;
            if num_traits::Zero::is_zero(&den) {
                return Err(Error::Parse("zero denominator".into()));
            }
            v[k] += Rational::new(parse_int(&t.num)?, den);
        }
        brackets.push(((i, j), v));
    }
    let g = SuperAlgebra::from_brackets(a.name.clone(), space.clone(), brackets)?;
    let real = match &a.realization {
        None => None,
        Some(r) => {
            let p: usize = r.p.parse().map_err(|_| Error::Parse("bad p".into()))?;
            let q: usize = r.q.parse().map_err(|_| Error::Parse("bad q".into()))?;
            if r.matrices.len() != n {
                return Err(Error::Parse("realization size differs from basis".into()));
            }
            let mut elems = Vec::new();
            for (idx, m) in r.matrices.iter().enumerate() {
                let rows = m
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|[re, im]| Ok(Scalar::new(parse_rat(re)?, parse_rat(im)?)))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()?;
                if rows.len() != p + q || rows.iter().any(|r| r.len() != p + q) {
                    return Err(Error::Parse("realization matrix has the wrong shape".into()));
                }
                let b = BlockMatrix::new(p, q, CMatrix::from_rows(rows), space.parity(idx))?;
                elems.push((space.label(idx).to_string(), b));
            }
            let (h, real) = from_matrix_span(&a.name, p, q, elems)?;
            if h != g {
                return Err(Error::Parse("realization does not reproduce the bracket table".into()));
            }
            Some(real)
        }
    };
    Ok((g, real))
}

pub fn from_json(s: &str) -> Result<(SuperAlgebra, Option<MatrixRealization>)> {
    let a: AlgebraJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    from_json_value(&a)
}
