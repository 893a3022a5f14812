//! Sequence sources accepted wherever the CLI takes a SPEC: a `0`/`1`
//! literal, a path to a one-line sequence file, or `family(key=value,...)`.

use std::collections::BTreeMap;
use std::path::PathBuf;

use crate::constructions::{
    construct_v, construct_w, difference_set_sequence, gmw, legendre, mseq, twin_prime, GmwParams, LegendreParams,
    LegendreVariant, TwinPrimeParams, WParams,
};
use crate::error::{Error, Result};
use crate::seq::{interleave4_masked, parse_sequence, BinarySequence, InterleaveMask};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceSpec {
    Inline(String),
    File(PathBuf),
    Gen { family: String, args: BTreeMap<String, String> },
}

/// Splits on top-level commas, leaving commas inside parentheses alone.
pub fn split_top_level(text: &str) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::InvalidParameter(format!("unbalanced parentheses in {text:?}")));
                }
            }
            ',' if depth == 0 => {
                parts.push(text[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::InvalidParameter(format!("unbalanced parentheses in {text:?}")));
    }
    let last = text[start..].trim();
    if !last.is_empty() || !parts.is_empty() {
        parts.push(last);
    }
    Ok(parts)
}

/// `k=v,k=v` with values that may themselves contain parentheses.
pub fn parse_key_values(text: &str) -> Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for part in split_top_level(text)? {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Error::InvalidParameter(format!("expected key=value, got {part:?}")))?;
        if map.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
            return Err(Error::InvalidParameter(format!("duplicate key {:?}", k.trim())));
        }
    }
    Ok(map)
}

impl SequenceSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some(open) = text.find('(') {
            let inner = text
                .strip_suffix(')')
                .ok_or_else(|| Error::InvalidParameter(format!("unterminated spec {text:?}")))?;
            return Ok(Self::Gen {
                family: text[..open].trim().to_string(),
                args: parse_key_values(&inner[open + 1..])?,
            });
        }
        if !text.is_empty() && text.bytes().all(|b| b == b'0' || b == b'1') {
            return Ok(Self::Inline(text.to_string()));
        }
        Ok(Self::File(PathBuf::from(text)))
    }

    pub fn resolve(&self) -> Result<BinarySequence> {
        match self {
            Self::Inline(bits) => parse_sequence(bits),
            Self::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", path.display())))?;
                parse_sequence(&text)
            }
            Self::Gen { family, args } => generate(family, &Args(args)),
        }
    }
}

pub fn resolve(text: &str) -> Result<BinarySequence> {
    SequenceSpec::parse(text)?.resolve()
}

struct Args<'a>(&'a BTreeMap<String, String>);

impl Args<'_> {
    fn raw(&self, key: &str) -> Result<&str> {
        self.0
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| Error::InvalidParameter(format!("missing parameter {key:?}")))
    }

    fn num<T: std::str::FromStr>(&self, key: &str) -> Result<T> {
        let raw = self.raw(key)?;
        raw.parse()
            .map_err(|_| Error::InvalidParameter(format!("bad value {raw:?} for {key:?}")))
    }

    fn flag(&self, key: &str) -> Result<bool> {
        match self.0.get(key).map(String::as_str) {
            None | Some("false") | Some("0") => Ok(false),
            Some("true") | Some("1") => Ok(true),
            Some(other) => Err(Error::InvalidParameter(format!("bad flag {other:?} for {key:?}"))),
        }
    }

    fn seq(&self, key: &str) -> Result<BinarySequence> {
        resolve(self.raw(key)?)
    }

    fn poly(&self) -> Result<Option<u64>> {
        self.0.get("poly").map(|p| parse_hex(p)).transpose()
    }
}

pub fn parse_hex(text: &str) -> Result<u64> {
    let digits = text.trim().trim_start_matches("0x").trim_start_matches("0X");
    u64::from_str_radix(digits, 16).map_err(|_| Error::InvalidParameter(format!("bad hex polynomial {text:?}")))
}

fn generate(family: &str, args: &Args<'_>) -> Result<BinarySequence> {
    match family {
        "legendre" => {
            let variant = match args.0.get("variant") {
                Some(v) => v.parse()?,
                None => LegendreVariant::First,
            };
            legendre(LegendreParams::new(args.num("p")?, variant))
        }
        "mseq" => {
            let degree: u32 = args.num("degree")?;
            let poly = match args.poly()? {
                Some(p) => p,
                None => crate::constructions::default_primitive_poly(degree).ok_or(Error::UnsupportedDegree(degree))?,
            };
            mseq(degree, poly)
        }
        "gmw" => {
            let mut params = GmwParams::new(args.num("n")?).modified(args.flag("modified")?);
            if let Some(p) = args.poly()? {
                params = params.with_poly(p);
            }
            gmw(params)
        }
        "twinprime" => twin_prime(TwinPrimeParams::new(args.num("p")?).modified(args.flag("modified")?)),
        "v" => construct_v(&args.seq("a")?, &args.seq("b")?),
        "w" => construct_w(&args.seq("a")?, &args.seq("b")?, WParams::new(args.num("eta")?)),
        "interleave4" => {
            let cols = [args.seq("c0")?, args.seq("c1")?, args.seq("c2")?, args.seq("c3")?];
            let mask: InterleaveMask = match args.0.get("mask") {
                Some(m) => m.parse()?,
                None => "0000".parse()?,
            };
            interleave4_masked(&cols, &mask)
        }
        "shift" => Ok(args.seq("s")?.shift(args.num("m")?)),
        "complement" => Ok(args.seq("s")?.complement()),
        "diffset" => {
            let elements = args
                .raw("d")?
                .split(';')
                .map(|e| {
                    e.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidParameter(format!("bad element {e:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            difference_set_sequence(args.num("n")?, &elements)
        }
        other => Err(Error::InvalidParameter(format!("unknown family {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitting_respects_parentheses() {
        assert_eq!(
            split_top_level("a=legendre(p=7,variant=first),b=01").unwrap(),
            vec!["a=legendre(p=7,variant=first)", "b=01"]
        );
        assert!(split_top_level("a=(b").is_err());
        assert!(split_top_level("").unwrap().is_empty());
    }

    #[test]
    fn spec_forms() {
        assert_eq!(SequenceSpec::parse("0111").unwrap(), SequenceSpec::Inline("0111".into()));
        assert!(matches!(SequenceSpec::parse("seq.txt").unwrap(), SequenceSpec::File(_)));
        assert_eq!(resolve("legendre(p=7)").unwrap().to_string(), "1001011");
        assert_eq!(resolve("legendre(p=5,variant=second)").unwrap().to_string(), "00110");
        assert_eq!(resolve("gmw(n=2)").unwrap().to_string(), "000100110101111");
        assert_eq!(resolve("mseq(degree=4,poly=0x13)").unwrap().to_string(), "100010011010111");
        assert_eq!(resolve("v(a=01000,b=shift(s=10000,m=2))").unwrap().to_string(), "00111010001001000010");
        assert_eq!(resolve("diffset(n=5,d=1)").unwrap().to_string(), "01000");
        assert!(resolve("nosuch(x=1)").is_err());
        assert!(resolve("legendre(p=9)").is_err());
    }
}
