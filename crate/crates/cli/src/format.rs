//! Line-oriented JSON documents for presentations, representations and
//! linear forms.
//!
//! Every line is one JSON object whose `entry` field says what it is. A
//! presentation document starts with a `presentation` header, declares its
//! generators, then lists structure constants; a `representation` line may
//! follow with one `image` line per generator. A form document starts with a
//! `form` header followed by `matrix` lines. Bracket results are written in
//! the scalar grammar with generator names as symbols; in a four-bracket
//! result the product `X*Y` stands for `½(XY + YX)`. Symbols that are not
//! generators are parameters.

use liefour_core::algebra::{
    AlgebraKind, AlgebraPresentation, Element, EvenQuadratic, GenIdx, Grade, PresentationBuilder,
};
use liefour_core::clifford::LinearForm;
use liefour_core::scalar::Monomial;
use liefour_core::{Matrix, Representation, Scalar, Symbol};
use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        source: liefour_core::Error,
    },
}

impl FormatError {
    fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        FormatError::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

type Result<T> = std::result::Result<T, FormatError>;

#[derive(Serialize, Deserialize, Debug)]
#[serde(tag = "entry", rename_all = "kebab-case")]
enum Line {
    Presentation {
        schema: u32,
        name: String,
        kind: String,
    },
    Generator {
        name: String,
        grade: [u8; 2],
    },
    Bracket {
        operands: [String; 2],
        result: String,
    },
    Quartic {
        operands: [String; 4],
        result: String,
    },
    Representation {
        name: String,
        dim: usize,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        bindings: Vec<[String; 2]>,
    },
    Image {
        generator: String,
        rows: Vec<Vec<String>>,
    },
    Form {
        schema: u32,
        dim: usize,
    },
    Matrix {
        indeterminate: String,
        rows: Vec<Vec<String>>,
    },
}

/// A presentation with an optional representation block.
#[derive(Clone, Debug, PartialEq)]
pub struct Document {
    pub presentation: AlgebraPresentation,
    pub representation: Option<Representation>,
}

fn lines(text: &str) -> Result<Vec<(usize, Line)>> {
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        if raw.trim().is_empty() {
            continue;
        }
        let line: Line = serde_json::from_str(raw)
            .map_err(|e| FormatError::parse(k + 1, e.column(), e.to_string()))?;
        out.push((k + 1, line));
    }
    Ok(out)
}

fn scalar(line: usize, field: &str, text: &str) -> Result<Scalar> {
    text.parse().map_err(|e| match e {
        liefour_core::Error::ScalarParse { column, message } => {
            FormatError::parse(line, column, format!("in `{field}`: {message}"))
        }
        other => FormatError::Invalid {
            line,
            source: other,
        },
    })
}

fn invalid(line: usize) -> impl Fn(liefour_core::Error) -> FormatError {
    move |source| FormatError::Invalid { line, source }
}

fn kind_from_str(line: usize, s: &str) -> Result<AlgebraKind> {
    match s {
        "superalgebra" => Ok(AlgebraKind::Superalgebra),
        "order-four" => Ok(AlgebraKind::OrderFour),
        other => Err(FormatError::parse(
            line,
            1,
            format!("unknown algebra kind `{other}`"),
        )),
    }
}

/// Split each term of `s` into its generator monomial and a parameter
/// coefficient.
fn split_terms(s: &Scalar, b: &PresentationBuilder) -> Vec<(Vec<GenIdx>, Scalar)> {
    let mut out = Vec::new();
    for (mono, c) in s.terms() {
        let mut gens = Vec::new();
        let mut params = Vec::new();
        for (sym, e) in mono.powers() {
            match b.index_of(sym.name()) {
                Some(g) => gens.extend(std::iter::repeat_n(g, *e as usize)),
                None => params.push((sym.clone(), *e)),
            }
        }
        out.push((gens, Scalar::term(c.clone(), Monomial::from_powers(params))));
    }
    out
}

fn element_from(line: usize, s: &Scalar, b: &PresentationBuilder) -> Result<Element> {
    let mut e = Element::zero();
    for (gens, c) in split_terms(s, b) {
        match gens.as_slice() {
            [g] => e.add_term(*g, &c),
            _ => {
                return Err(FormatError::Invalid {
                    line,
                    source: liefour_core::Error::validation(
                        "brackets are linear in the generators",
                        format!("term of generator degree {}", gens.len()),
                    ),
                })
            }
        }
    }
    Ok(e)
}

fn quadratic_from(line: usize, s: &Scalar, b: &PresentationBuilder) -> Result<EvenQuadratic> {
    let mut q = EvenQuadratic::zero();
    for (gens, c) in split_terms(s, b) {
        match gens.as_slice() {
            [] => q.add_constant(&c),
            [g] => q.add_linear(*g, &c),
            [x, y] => q.add_sym(*x, *y, &c),
            _ => {
                return Err(FormatError::Invalid {
                    line,
                    source: liefour_core::Error::validation(
                        "four-brackets are at most quadratic in the even generators",
                        format!("term of generator degree {}", gens.len()),
                    ),
                })
            }
        }
    }
    Ok(q)
}

fn rows_from(line: usize, rows: &[Vec<String>]) -> Result<Matrix> {
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|e| scalar(line, "rows", e)).collect())
        .collect::<Result<Vec<Vec<Scalar>>>>()?;
    Matrix::from_rows(parsed).map_err(invalid(line))
}

fn resolve(line: usize, b: &PresentationBuilder, name: &str) -> Result<GenIdx> {
    b.index_of(name).ok_or_else(|| FormatError::Invalid {
        line,
        source: liefour_core::Error::validation(
            "declared generators",
            format!("`{name}` is not a declared generator"),
        ),
    })
}

pub fn parse_document(text: &str) -> Result<Document> {
    let lines = lines(text)?;
    let mut iter = lines.into_iter();
    let (first, header) = iter
        .next()
        .ok_or_else(|| FormatError::parse(1, 1, "empty document"))?;
    let Line::Presentation { schema, name, kind } = header else {
        return Err(FormatError::parse(
            first,
            1,
            "expected a `presentation` header",
        ));
    };
    if schema != SCHEMA {
        return Err(FormatError::parse(
            first,
            1,
            format!("unsupported schema {schema}"),
        ));
    }
    let mut b = PresentationBuilder::new(&name, kind_from_str(first, &kind)?);
    let mut rep: Option<Representation> = None;
    let mut last = first;
    for (n, line) in iter {
        last = n;
        match line {
            Line::Generator { name, grade } if rep.is_none() => {
                b.generator(&name, Grade::new(grade[0], grade[1]))
                    .map_err(invalid(n))?;
            }
            Line::Bracket { operands, result } if rep.is_none() => {
                let (x, y) = (resolve(n, &b, &operands[0])?, resolve(n, &b, &operands[1])?);
                let e = element_from(n, &scalar(n, "result", &result)?, &b)?;
                b.bracket(x, y, e).map_err(invalid(n))?;
            }
            Line::Quartic { operands, result } if rep.is_none() => {
                let mut args = [0; 4];
                for (slot, name) in args.iter_mut().zip(&operands) {
                    *slot = resolve(n, &b, name)?;
                }
                let q = quadratic_from(n, &scalar(n, "result", &result)?, &b)?;
                b.quartic(args, q).map_err(invalid(n))?;
            }
            Line::Representation {
                name,
                dim,
                bindings,
            } if rep.is_none() => {
                let mut r = Representation::new(&name, dim).map_err(invalid(n))?;
                for [sym, value] in bindings {
                    let v = scalar(n, "bindings", &value)?
                        .as_constant()
                        .ok_or_else(|| {
                            FormatError::parse(
                                n,
                                1,
                                format!("binding for `{sym}` is not a constant"),
                            )
                        })?;
                    r.bindings.insert(Symbol::new(&sym), v);
                }
                rep = Some(r);
            }
            Line::Image { generator, rows } => {
                let r = rep
                    .as_mut()
                    .ok_or_else(|| FormatError::parse(n, 1, "`image` before `representation`"))?;
                resolve(n, &b, &generator)?;
                r.insert(&generator, rows_from(n, &rows)?)
                    .map_err(invalid(n))?;
            }
            other => {
                return Err(FormatError::parse(
                    n,
                    1,
                    format!("unexpected `{}` entry here", entry_name(&other)),
                ))
            }
        }
    }
    let presentation = b.build().map_err(invalid(last))?;
    Ok(Document {
        presentation,
        representation: rep,
    })
}

fn entry_name(line: &Line) -> &'static str {
    match line {
        Line::Presentation { .. } => "presentation",
        Line::Generator { .. } => "generator",
        Line::Bracket { .. } => "bracket",
        Line::Quartic { .. } => "quartic",
        Line::Representation { .. } => "representation",
        Line::Image { .. } => "image",
        Line::Form { .. } => "form",
        Line::Matrix { .. } => "matrix",
    }
}

pub fn parse_presentation(text: &str) -> Result<AlgebraPresentation> {
    Ok(parse_document(text)?.presentation)
}

fn element_scalar(p: &AlgebraPresentation, e: &Element) -> Scalar {
    let mut s = Scalar::zero();
    for (g, c) in e.terms() {
        s += &(c * &Scalar::symbol(p.name_of(g)));
    }
    s
}

fn quadratic_scalar(p: &AlgebraPresentation, q: &EvenQuadratic) -> Scalar {
    let mut s = q.constant.clone();
    for (g, c) in q.linear() {
        s += &(c * &Scalar::symbol(p.name_of(g)));
    }
    for ((x, y), c) in q.quad() {
        let xy = &Scalar::symbol(p.name_of(x)) * &Scalar::symbol(p.name_of(y));
        s += &(c * &xy);
    }
    s
}

fn dense(m: &Matrix) -> Vec<Vec<String>> {
    m.rows()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect()
}

fn push(out: &mut String, line: &Line) {
    out.push_str(&serde_json::to_string(line).expect("lines serialise"));
    out.push('\n');
}

/// Canonical text: generators in declaration order, brackets and
/// four-brackets in index order, images in generator order.
pub fn emit_document(p: &AlgebraPresentation, rep: Option<&Representation>) -> String {
    let mut out = String::new();
    push(
        &mut out,
        &Line::Presentation {
            schema: SCHEMA,
            name: p.name.clone(),
            kind: p.kind.as_str().to_string(),
        },
    );
    for g in p.generators() {
        push(
            &mut out,
            &Line::Generator {
                name: g.name.clone(),
                grade: [g.grade.0, g.grade.1],
            },
        );
    }
    for ((x, y), e) in p.bracket_entries() {
        push(
            &mut out,
            &Line::Bracket {
                operands: [p.name_of(x).to_string(), p.name_of(y).to_string()],
                result: element_scalar(p, e).to_string(),
            },
        );
    }
    for (k, q) in p.quartic_entries() {
        push(
            &mut out,
            &Line::Quartic {
                operands: k.map(|g| p.name_of(g).to_string()),
                result: quadratic_scalar(p, q).to_string(),
            },
        );
    }
    if let Some(r) = rep {
        push(
            &mut out,
            &Line::Representation {
                name: r.name.clone(),
                dim: r.dim(),
                bindings: r
                    .bindings
                    .iter()
                    .map(|(k, v)| [k.name().to_string(), v.to_string()])
                    .collect(),
            },
        );
        for g in p.generators() {
            if let Ok(m) = r.image(&g.name) {
                push(
                    &mut out,
                    &Line::Image {
                        generator: g.name.clone(),
                        rows: dense(m),
                    },
                );
            }
        }
    }
    out
}

pub fn parse_form(text: &str) -> Result<LinearForm> {
    let lines = lines(text)?;
    let mut iter = lines.into_iter();
    let (first, header) = iter
        .next()
        .ok_or_else(|| FormatError::parse(1, 1, "empty document"))?;
    let Line::Form { schema, dim } = header else {
        return Err(FormatError::parse(first, 1, "expected a `form` header"));
    };
    if schema != SCHEMA {
        return Err(FormatError::parse(
            first,
            1,
            format!("unsupported schema {schema}"),
        ));
    }
    let mut names = Vec::new();
    let mut mats = Vec::new();
    for (n, line) in iter {
        let Line::Matrix {
            indeterminate,
            rows,
        } = line
        else {
            return Err(FormatError::parse(
                n,
                1,
                format!("unexpected `{}` entry in a form", entry_name(&line)),
            ));
        };
        let m = rows_from(n, &rows)?;
        if m.dim() != dim {
            return Err(FormatError::Invalid {
                line: n,
                source: liefour_core::Error::DimensionMismatch(format!(
                    "matrix for `{indeterminate}` is {0}x{0}, header says {dim}",
                    m.dim()
                )),
            });
        }
        names.push(Symbol::new(&indeterminate));
        mats.push(m);
    }
    LinearForm::new(names, mats).map_err(invalid(first))
}

pub fn emit_form(form: &LinearForm) -> String {
    let mut out = String::new();
    push(
        &mut out,
        &Line::Form {
            schema: SCHEMA,
            dim: form.dim(),
        },
    );
    for (x, m) in form.indeterminates().iter().zip(form.matrices()) {
        push(
            &mut out,
            &Line::Matrix {
                indeterminate: x.name().to_string(),
                rows: dense(m),
            },
        );
    }
    out
}
