//! JSON encodings of the public value types. Scalars travel as their
//! canonical display strings, so every payload round-trips exactly.

use crate::gauss::{GaussParams, MatrixWindow};
use crate::kernel::BisymKernel;
use crate::partition::{MayaIndex, Partition};
use crate::relation::LinearRelation;
use crate::scalar::{NormConstant, Scalar};
use crate::symfun::{Basis, SymFun};
use crate::wedge::{DecomposableParams, GlMatrix, WedgeVector};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

fn parse_scalar(field: &str, s: &str) -> Result<Scalar> {
    s.parse().map_err(|e| match e {
        Error::Parse { message, .. } => Error::Invalid {
            field: field.to_string(),
            message: format!("bad scalar `{s}`: {message}"),
        },
        other => other,
    })
}

fn scalar_rows(field: &str, rows: &[Vec<String>]) -> Result<Vec<Vec<Scalar>>> {
    rows.iter()
        .map(|row| row.iter().map(|s| parse_scalar(field, s)).collect())
        .collect()
}

fn string_rows(rows: &[Vec<Scalar>]) -> Vec<Vec<String>> {
    rows.iter()
        .map(|row| row.iter().map(Scalar::to_string).collect())
        .collect()
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serialization cannot fail")
}

fn from_json<'a, T: Deserialize<'a>>(text: &'a str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Invalid {
        field: what.to_string(),
        message: e.to_string(),
    })
}

// ---- symmetric functions ----

#[derive(Serialize, Deserialize)]
struct SymFunDto {
    basis: String,
    degree: u32,
    terms: Vec<SymTermDto>,
}

#[derive(Serialize, Deserialize)]
struct SymTermDto {
    partition: Vec<u32>,
    coeff: String,
}

pub fn symfun_to_json(f: &SymFun) -> String {
    let dto = SymFunDto {
        basis: f.basis().to_string(),
        degree: f.degree(),
        terms: f
            .terms()
            .map(|(lam, c)| SymTermDto {
                partition: lam.parts().to_vec(),
                coeff: c.to_string(),
            })
            .collect(),
    };
    to_json(&dto)
}

pub fn symfun_from_json(text: &str) -> Result<SymFun> {
    let dto: SymFunDto = from_json(text, "symfun")?;
    let basis: Basis = dto.basis.parse()?;
    let terms = dto
        .terms
        .into_iter()
        .map(|t| {
            Ok((
                Partition::new(t.partition)?,
                parse_scalar("coeff", &t.coeff)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    SymFun::from_terms(basis, dto.degree, terms)
}

// ---- kernels ----

#[derive(Serialize, Deserialize)]
struct KernelDto {
    dx: u32,
    dy: u32,
    terms: Vec<KernelTermDto>,
}

#[derive(Serialize, Deserialize)]
struct KernelTermDto {
    x: Vec<u32>,
    y: Vec<u32>,
    coeff: String,
}

pub fn kernel_to_json(k: &BisymKernel) -> String {
    let dto = KernelDto {
        dx: k.dx(),
        dy: k.dy(),
        terms: k
            .terms()
            .map(|((lam, mu), c)| KernelTermDto {
                x: lam.parts().to_vec(),
                y: mu.parts().to_vec(),
                coeff: c.to_string(),
            })
            .collect(),
    };
    to_json(&dto)
}

pub fn kernel_from_json(text: &str) -> Result<BisymKernel> {
    let dto: KernelDto = from_json(text, "kernel")?;
    let terms = dto
        .terms
        .into_iter()
        .map(|t| {
            Ok((
                Partition::new(t.x)?,
                Partition::new(t.y)?,
                parse_scalar("coeff", &t.coeff)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    BisymKernel::from_terms(dto.dx, dto.dy, terms)
}

// ---- gauss parameters ----

#[derive(Serialize, Deserialize)]
struct GaussDto {
    #[serde(rename = "A")]
    a: Vec<Vec<String>>,
    #[serde(rename = "B")]
    b: Vec<Vec<String>>,
    #[serde(rename = "C")]
    c: Vec<Vec<String>>,
    alpha: Vec<String>,
    beta: Vec<String>,
    #[serde(rename = "normDetSquare")]
    norm_det_square: String,
    #[serde(rename = "normExpArg")]
    norm_exp_arg: String,
}

pub fn gauss_to_json(p: &GaussParams) -> String {
    let dto = GaussDto {
        a: string_rows(p.block_a().rows()),
        b: string_rows(p.block_b().rows()),
        c: string_rows(p.block_c().rows()),
        alpha: p.alpha().iter().map(Scalar::to_string).collect(),
        beta: p.beta().iter().map(Scalar::to_string).collect(),
        norm_det_square: p.norm().det_square().to_string(),
        norm_exp_arg: p.norm().exp_arg().to_string(),
    };
    to_json(&dto)
}

pub fn gauss_from_json(text: &str) -> Result<GaussParams> {
    let dto: GaussDto = from_json(text, "gauss")?;
    let a = MatrixWindow::from_entries(scalar_rows("A", &dto.a)?)?;
    let b = MatrixWindow::from_entries(scalar_rows("B", &dto.b)?)?;
    let c = MatrixWindow::from_entries(scalar_rows("C", &dto.c)?)?;
    let alpha = dto
        .alpha
        .iter()
        .map(|s| parse_scalar("alpha", s))
        .collect::<Result<Vec<_>>>()?;
    let beta = dto
        .beta
        .iter()
        .map(|s| parse_scalar("beta", s))
        .collect::<Result<Vec<_>>>()?;
    let det_square = parse_scalar("normDetSquare", &dto.norm_det_square)?;
    if det_square.is_zero() {
        return Err(Error::invalid("normDetSquare", "must be nonzero"));
    }
    let exp_arg = parse_scalar("normExpArg", &dto.norm_exp_arg)?;
    GaussParams::new(a, b, c, alpha, beta, NormConstant::new(det_square, exp_arg))
}

// ---- linear relations ----

#[derive(Serialize, Deserialize)]
struct RelationDto {
    #[serde(rename = "dimV")]
    dim_v: usize,
    #[serde(rename = "dimW")]
    dim_w: usize,
    vectors: Vec<Vec<String>>,
}

pub fn relation_to_json(r: &LinearRelation) -> String {
    let dto = RelationDto {
        dim_v: r.dim_v(),
        dim_w: r.dim_w(),
        vectors: string_rows(r.basis()),
    };
    to_json(&dto)
}

pub fn relation_from_json(text: &str) -> Result<LinearRelation> {
    let dto: RelationDto = from_json(text, "relation")?;
    LinearRelation::new(dto.dim_v, dto.dim_w, scalar_rows("vectors", &dto.vectors)?)
}

// ---- wedge vectors ----

#[derive(Serialize, Deserialize)]
struct WedgeTermDto {
    maya: Vec<i64>,
    coeff: String,
}

pub fn wedge_to_json(v: &WedgeVector) -> String {
    let terms: Vec<WedgeTermDto> = v
        .terms()
        .map(|(k, c)| WedgeTermDto {
            maya: k.head().to_vec(),
            coeff: c.to_string(),
        })
        .collect();
    to_json(&terms)
}

pub fn wedge_from_json(text: &str) -> Result<WedgeVector> {
    let terms: Vec<WedgeTermDto> = from_json(text, "wedge")?;
    let parsed = terms
        .into_iter()
        .map(|t| {
            Ok((
                MayaIndex::from_decreasing_head(t.maya)?,
                parse_scalar("coeff", &t.coeff)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let energy = parsed.iter().map(|(k, _)| k.energy()).max().unwrap_or(0);
    WedgeVector::from_terms(energy, parsed)
}

// ---- GL window matrices ----

#[derive(Serialize, Deserialize)]
struct GlDto {
    offset: i64,
    matrix: Vec<Vec<String>>,
}

pub fn gl_to_json(h: &GlMatrix) -> String {
    let dto = GlDto {
        offset: h.offset(),
        matrix: string_rows(h.window_entries()),
    };
    to_json(&dto)
}

pub fn gl_from_json(text: &str) -> Result<GlMatrix> {
    let dto: GlDto = from_json(text, "gl")?;
    GlMatrix::new(dto.offset, scalar_rows("matrix", &dto.matrix)?)
}

// ---- decomposable parameters ----

#[derive(Serialize, Deserialize)]
struct DecomposableDto {
    a: Vec<ParamEntryDto>,
    b: Vec<ParamEntryDto>,
    #[serde(default)]
    band: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct ParamEntryDto {
    row: usize,
    col: i64,
    coeff: String,
}

pub fn decomposable_to_json(p: &DecomposableParams) -> String {
    let entry = |((row, col), c): (&(usize, i64), &Scalar)| ParamEntryDto {
        row: *row,
        col: *col,
        coeff: c.to_string(),
    };
    let dto = DecomposableDto {
        a: p.a_entries().map(entry).collect(),
        b: p.b_entries().map(entry).collect(),
        band: p
            .band()
            .map(|r| r.iter().map(Scalar::to_string).collect())
            .unwrap_or_default(),
    };
    to_json(&dto)
}

pub fn decomposable_from_json(text: &str) -> Result<DecomposableParams> {
    let dto: DecomposableDto = from_json(text, "decomposable")?;
    let conv = |items: Vec<ParamEntryDto>| -> Result<Vec<((usize, i64), Scalar)>> {
        items
            .into_iter()
            .map(|e| Ok(((e.row, e.col), parse_scalar("coeff", &e.coeff)?)))
            .collect()
    };
    if dto.band.is_empty() {
        DecomposableParams::new(conv(dto.a)?, conv(dto.b)?)
    } else {
        if !dto.a.is_empty() || !dto.b.is_empty() {
            return Err(Error::invalid(
                "band",
                "banded parameters take no explicit entries",
            ));
        }
        let series = dto
            .band
            .iter()
            .map(|s| parse_scalar("band", s))
            .collect::<Result<Vec<_>>>()?;
        Ok(DecomposableParams::from_series(&series))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inner::Weight;
    use crate::kernel::identity_kernel;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn symfun_roundtrip() {
        let f = SymFun::from_terms(
            Basis::S,
            4,
            [
                (pt(&[2, 1]), Scalar::from_frac(3, 2)),
                (pt(&[1]), "(1 - q)/(1 - t)".parse().unwrap()),
            ],
        )
        .unwrap();
        let text = symfun_to_json(&f);
        assert_eq!(symfun_from_json(&text).unwrap(), f);
        assert!(symfun_from_json("{\"basis\":\"x\"}").is_err());
    }

    #[test]
    fn kernel_roundtrip() {
        let k = identity_kernel(&Weight::Macdonald, 3);
        let text = kernel_to_json(&k);
        assert_eq!(kernel_from_json(&text).unwrap(), k);
    }

    #[test]
    fn gauss_roundtrip() {
        let p = GaussParams::identity(&Weight::Classical, 2);
        let text = gauss_to_json(&p);
        assert_eq!(gauss_from_json(&text).unwrap(), p);
    }

    #[test]
    fn relation_roundtrip() {
        let r = LinearRelation::identity_graph(3);
        let text = relation_to_json(&r);
        assert_eq!(relation_from_json(&text).unwrap(), r);
    }

    #[test]
    fn wedge_roundtrip() {
        let v = WedgeVector::from_terms(
            3,
            [
                (MayaIndex::vacuum(), Scalar::from_int(2)),
                (pt(&[2, 1]).to_maya(), Scalar::from_frac(-1, 3)),
            ],
        )
        .unwrap();
        let text = wedge_to_json(&v);
        assert_eq!(wedge_from_json(&text).unwrap(), v);
    }

    #[test]
    fn gl_roundtrip() {
        let h = GlMatrix::new(
            -1,
            vec![
                vec![Scalar::zero(), Scalar::one()],
                vec![Scalar::one(), Scalar::zero()],
            ],
        )
        .unwrap();
        let text = gl_to_json(&h);
        assert_eq!(gl_from_json(&text).unwrap(), h);
    }

    #[test]
    fn decomposable_roundtrip() {
        let p = DecomposableParams::new(
            [((1usize, 0i64), Scalar::from_int(2))],
            [((2usize, -1i64), Scalar::from_frac(1, 2))],
        )
        .unwrap();
        let text = decomposable_to_json(&p);
        assert_eq!(decomposable_from_json(&text).unwrap(), p);
    }
}
