//! Parsing of module and Lie algebra descriptors given on the command line.

use homalg::algebra::{diagonal_module, KElement, SquareZeroAlgebra};
use homalg::lie::{class2_from_module, fprime_of_module, free_lie_graded, heisenberg, reduce_mod2, LieAlgebra};
use homalg::presentation::{FreeVec, Presentation};
use homalg::ring::Integers;
use homalg::{Error, Result};
use serde_json::Value;

pub type KPresentation = Presentation<SquareZeroAlgebra>;

fn parse_params(s: &str) -> Result<Vec<(String, u32)>> {
    s.split(',')
        .filter(|p| !p.is_empty())
        .map(|p| {
            let (k, v) = p
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {p:?}")))?;
            let v = v
                .parse()
                .map_err(|_| Error::Parse(format!("{k}: expected a non-negative integer, got {v:?}")))?;
            Ok((k.to_string(), v))
        })
        .collect()
}

fn param(params: &[(String, u32)], key: &str) -> Result<u32> {
    params
        .iter()
        .find(|(k, _)| k == key)
        .map(|&(_, v)| v)
        .ok_or_else(|| Error::Parse(format!("missing parameter {key}")))
}

fn as_u64(v: &Value, what: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| Error::Parse(format!("{what} must be a non-negative integer")))
}

fn parse_relation(alg: &SquareZeroAlgebra, rank: usize, terms: &[Value]) -> Result<FreeVec<KElement>> {
    let mut v = FreeVec::new();
    for t in terms {
        let triple = t
            .as_array()
            .filter(|a| a.len() == 3)
            .ok_or_else(|| Error::Parse("relation terms are [coeff, monomial, generator] triples".into()))?;
        let coeff = triple[0].as_i64().ok_or_else(|| Error::Parse("coefficient must be an integer".into()))?;
        let mask = as_u64(&triple[1], "monomial")?;
        let g = as_u64(&triple[2], "generator")? as usize;
        if mask >= alg.dim() as u64 {
            return Err(Error::Parse(format!("monomial {mask} needs more than {} variables", alg.variables())));
        }
        if g >= rank {
            return Err(Error::Parse(format!("generator {g} out of range for rank {rank}")));
        }
        v.add_term(alg, g, &alg.monomial(mask as u32, coeff));
    }
    Ok(v)
}

/// `{p, m, rank, relations}` where `relations` is either one relation (a list
/// of `[coeff, monomial, generator]` triples) or a list of relations.
pub fn module_from_json(v: &Value) -> Result<KPresentation> {
    let field = |k: &str| v.get(k).ok_or_else(|| Error::Parse(format!("module descriptor needs {k:?}")));
    let p = as_u64(field("p")?, "p")? as u32;
    let m = as_u64(field("m")?, "m")? as u32;
    let rank = as_u64(field("rank")?, "rank")? as usize;
    let alg = SquareZeroAlgebra::new(p, m)?;
    let rels = match v.get("relations") {
        None | Some(Value::Null) => Vec::new(),
        Some(Value::Array(a)) if a.is_empty() => Vec::new(),
        Some(Value::Array(a)) => {
            let single = a[0].as_array().and_then(|t| t.first()).is_some_and(Value::is_number);
            if single {
                vec![parse_relation(&alg, rank, a)?]
            } else {
                a.iter()
                    .map(|r| {
                        let terms = r.as_array().ok_or_else(|| Error::Parse("relation must be a list".into()))?;
                        parse_relation(&alg, rank, terms)
                    })
                    .collect::<Result<_>>()?
            }
        }
        Some(_) => return Err(Error::Parse("relations must be a list".into())),
    };
    Presentation::new(alg, rank, rels)
}

/// Accepts inline JSON, `@file.json`, `diagonal:p=2,n=3` (the module
/// `k^n/<t_1e_1+...+t_ne_n>` over `F_p[t_1..t_n]/(t_i^2)`) or
/// `free:p=3,m=2,rank=2`.
pub fn parse_module(desc: &str) -> Result<KPresentation> {
    let desc = desc.trim();
    if desc.starts_with('{') {
        let v: Value = serde_json::from_str(desc).map_err(|e| Error::Parse(e.to_string()))?;
        return module_from_json(&v);
    }
    if let Some(path) = desc.strip_prefix('@') {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
        let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
        return module_from_json(&v);
    }
    if let Some(rest) = desc.strip_prefix("diagonal:") {
        let ps = parse_params(rest)?;
        return diagonal_module(param(&ps, "p")?, param(&ps, "n")? as usize);
    }
    if let Some(rest) = desc.strip_prefix("free:") {
        let ps = parse_params(rest)?;
        let alg = SquareZeroAlgebra::new(param(&ps, "p")?, param(&ps, "m")?)?;
        return Ok(Presentation::free(alg, param(&ps, "rank")? as usize));
    }
    Err(Error::Parse(format!("unrecognized module descriptor {desc:?}")))
}

pub enum LieDescriptor {
    Integral(LieAlgebra<Integers>),
    Modular(LieAlgebra<SquareZeroAlgebra>),
}

/// Builtins: `heisenberg`, `free:g=G`, `free-mod2:g=G`, `class2:<module>`,
/// `fprime:<module>`; `weight` is the truncation where it applies.
pub fn parse_lie(desc: &str, weight: usize) -> Result<LieDescriptor> {
    let desc = desc.trim();
    if desc == "heisenberg" {
        return Ok(LieDescriptor::Integral(heisenberg()));
    }
    if let Some(rest) = desc.strip_prefix("free-mod2:") {
        let g = param(&parse_params(rest)?, "g")? as usize;
        return Ok(LieDescriptor::Modular(reduce_mod2(&free_lie_graded(g, weight))?));
    }
    if let Some(rest) = desc.strip_prefix("free:") {
        let g = param(&parse_params(rest)?, "g")? as usize;
        return Ok(LieDescriptor::Integral(free_lie_graded(g, weight)));
    }
    if let Some(rest) = desc.strip_prefix("class2:") {
        return Ok(LieDescriptor::Modular(class2_from_module(&parse_module(rest)?)));
    }
    if let Some(rest) = desc.strip_prefix("fprime:") {
        return Ok(LieDescriptor::Modular(fprime_of_module(&parse_module(rest)?, weight)?));
    }
    Err(Error::Parse(format!("unrecognized Lie algebra descriptor {desc:?}")))
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_forms() {
        let single = r#"{"p":2,"m":3,"rank":3,"relations":[[1,1,0],[1,2,1],[1,4,2]]}"#;
        let nested = r#"{"p":2,"m":3,"rank":3,"relations":[[[1,1,0],[1,2,1],[1,4,2]]]}"#;
        let a = parse_module(single).unwrap();
        let b = parse_module(nested).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, parse_module("diagonal:p=2,n=3").unwrap());
        assert!(parse_module(r#"{"p":2,"m":1,"rank":1,"relations":[[1,2,0]]}"#).is_err());
        assert!(parse_module(r#"{"p":4,"m":1,"rank":1}"#).is_err());
        assert!(parse_module("nonsense").is_err());
    }
}
