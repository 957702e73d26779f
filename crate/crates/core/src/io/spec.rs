//! Manifold SPEC mini-grammar:
//!
//! ```text
//! sphere n=N
//! handle_sum n=N a=A b=B
//! surface_product n=N genus=G
//! surface_product n=N crosscaps=K
//! twisted_s2s2
//! ```
//!
//! Keys may appear in any order; each is required exactly once.

use std::collections::BTreeMap;
use std::str::FromStr;

use thiserror::Error;

use crate::manifolds::{ManifoldDescriptor, ManifoldError};
use crate::reeb::SurfaceType;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpecError {
    #[error("empty manifold spec")]
    Empty,
    #[error("unknown manifold `{0}`")]
    UnknownVariant(String),
    #[error("malformed argument `{0}`, expected key=value")]
    Malformed(String),
    #[error("bad value for `{key}`: `{value}`")]
    BadValue { key: String, value: String },
    #[error("`{0}` given more than once")]
    Duplicate(String),
    #[error("missing `{0}`")]
    Missing(&'static str),
    #[error("unexpected argument `{0}`")]
    Unexpected(String),
    #[error("surface_product takes exactly one of genus= or crosscaps=")]
    SurfaceKey,
    #[error(transparent)]
    Manifold(#[from] ManifoldError),
}

struct Args(BTreeMap<String, u32>);

impl Args {
    fn parse<'a>(tokens: impl Iterator<Item = &'a str>) -> Result<Self, SpecError> {
        let mut map = BTreeMap::new();
        for tok in tokens {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| SpecError::Malformed(tok.to_string()))?;
            let value = v.parse().map_err(|_| SpecError::BadValue {
                key: k.to_string(),
                value: v.to_string(),
            })?;
            if map.insert(k.to_string(), value).is_some() {
                return Err(SpecError::Duplicate(k.to_string()));
            }
        }
        Ok(Self(map))
    }

    fn take(&mut self, key: &'static str) -> Result<u32, SpecError> {
        self.0.remove(key).ok_or(SpecError::Missing(key))
    }

    fn finish(self) -> Result<(), SpecError> {
        match self.0.into_keys().next() {
            Some(k) => Err(SpecError::Unexpected(k)),
            None => Ok(()),
        }
    }
}

pub fn parse_manifold_spec(text: &str) -> Result<ManifoldDescriptor, SpecError> {
    let mut tokens = text.split_whitespace();
    let head = tokens.next().ok_or(SpecError::Empty)?;
    let mut args = Args::parse(tokens)?;
    let d = match head {
        "sphere" => ManifoldDescriptor::Sphere { n: args.take("n")? },
        "handle_sum" => ManifoldDescriptor::HandleSum {
            n: args.take("n")?,
            a: args.take("a")?,
            b: args.take("b")?,
        },
        "surface_product" => {
            let n = args.take("n")?;
            let genus = args.0.remove("genus");
            let crosscaps = args.0.remove("crosscaps");
            let sigma = match (genus, crosscaps) {
                (Some(g), None) => SurfaceType::orientable(g, 0),
                (None, Some(k)) if k >= 1 => SurfaceType::non_orientable(k, 0),
                (None, Some(k)) => {
                    return Err(SpecError::BadValue {
                        key: "crosscaps".into(),
                        value: k.to_string(),
                    })
                }
                _ => return Err(SpecError::SurfaceKey),
            };
            ManifoldDescriptor::SurfaceProduct { n, sigma }
        }
        "twisted_s2s2" => ManifoldDescriptor::TwistedS2S2,
        other => return Err(SpecError::UnknownVariant(other.to_string())),
    };
    args.finish()?;
    d.validate()?;
    Ok(d)
}

impl FromStr for ManifoldDescriptor {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_manifold_spec(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ManifoldDescriptor::*;

    #[test]
    fn parses_every_variant() {
        assert_eq!(parse_manifold_spec("sphere n=7"), Ok(Sphere { n: 7 }));
        assert_eq!(
            parse_manifold_spec("handle_sum n=5 a=2 b=0"),
            Ok(HandleSum { n: 5, a: 2, b: 0 })
        );
        assert_eq!(
            parse_manifold_spec("handle_sum b=1 a=0 n=5"),
            Ok(HandleSum { n: 5, a: 0, b: 1 })
        );
        assert_eq!(
            parse_manifold_spec("surface_product n=6 genus=1"),
            Ok(SurfaceProduct {
                n: 6,
                sigma: SurfaceType::TORUS
            })
        );
        assert_eq!(
            parse_manifold_spec("surface_product n=5 crosscaps=2"),
            Ok(SurfaceProduct {
                n: 5,
                sigma: SurfaceType::KLEIN_BOTTLE
            })
        );
        assert_eq!("twisted_s2s2".parse(), Ok(TwistedS2S2));
    }

    #[test]
    fn rejects_bad_specs() {
        assert_eq!(parse_manifold_spec("  "), Err(SpecError::Empty));
        assert!(matches!(
            parse_manifold_spec("torus n=5"),
            Err(SpecError::UnknownVariant(_))
        ));
        assert_eq!(parse_manifold_spec("sphere"), Err(SpecError::Missing("n")));
        assert!(matches!(
            parse_manifold_spec("sphere n"),
            Err(SpecError::Malformed(_))
        ));
        assert!(matches!(
            parse_manifold_spec("sphere n=x"),
            Err(SpecError::BadValue { .. })
        ));
        assert!(matches!(
            parse_manifold_spec("sphere n=5 n=6"),
            Err(SpecError::Duplicate(_))
        ));
        assert!(matches!(
            parse_manifold_spec("sphere n=5 a=1"),
            Err(SpecError::Unexpected(_))
        ));
        assert_eq!(
            parse_manifold_spec("surface_product n=5 genus=1 crosscaps=1"),
            Err(SpecError::SurfaceKey)
        );
        assert!(parse_manifold_spec("surface_product n=5 crosscaps=0").is_err());
        assert_eq!(
            parse_manifold_spec("sphere n=3"),
            Err(SpecError::Manifold(ManifoldError::DimensionTooSmall(3)))
        );
        assert_eq!(
            parse_manifold_spec("handle_sum n=5 a=0 b=0"),
            Err(SpecError::Manifold(ManifoldError::EmptyHandleSum))
        );
    }
}
