//! Reading expansions written in subscript style, such as
//! `70e_5+6e_{41}+2e_{32}` or `s_{31}-s_{2^2}+5s_{21^2}+8s_{1^4}`.

use csf_core::{Basis, Partition, SymFuncExpansion};
use num_bigint::BigInt;

/// One term of a display, parsed as far as possible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisplayTerm {
    /// The term exactly as written, including its sign.
    pub text: String,
    pub coeff: BigInt,
    pub basis: Option<Basis>,
    pub partition: Option<Partition>,
}

/// Splits a display into terms. Never fails: malformed terms come back with
/// `basis` or `partition` missing so that they can be reported.
pub fn parse_display(text: &str) -> Vec<DisplayTerm> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms = Vec::new();
    let mut start = 0;
    let mut depth = 0;
    for (i, c) in compact.char_indices() {
        match c {
            '{' => depth += 1,
            '}' => depth -= 1,
            '+' | '-' if depth == 0 && i > start => {
                terms.push(parse_term(&compact[start..i]));
                start = i;
            }
            _ => {}
        }
    }
    if start < compact.len() {
        terms.push(parse_term(&compact[start..]));
    }
    terms
}

fn parse_term(text: &str) -> DisplayTerm {
    let (negative, body) = match text.as_bytes().first() {
        Some(b'-') => (true, &text[1..]),
        Some(b'+') => (false, &text[1..]),
        _ => (false, text),
    };
    let digits = body.bytes().take_while(u8::is_ascii_digit).count();
    let magnitude: BigInt = if digits == 0 {
        BigInt::from(1)
    } else {
        body[..digits].parse().expect("ASCII digits")
    };
    let rest = &body[digits..];
    let basis = rest
        .chars()
        .next()
        .and_then(|c| c.to_string().parse::<Basis>().ok());
    let subscript = match basis {
        Some(_) => rest[1..].strip_prefix('_'),
        None => rest.strip_prefix('_'),
    };
    let partition = subscript.and_then(parse_subscript);
    DisplayTerm {
        text: text.to_string(),
        coeff: if negative { -magnitude } else { magnitude },
        basis,
        partition,
    }
}

/// `5`, `{41}`, `{32^2}`, `{1^{11}}` or `{10,2^3}`.
pub fn parse_subscript(text: &str) -> Option<Partition> {
    let inner = match text.strip_prefix('{') {
        Some(rest) => rest.strip_suffix('}')?,
        None if text.len() == 1 => text,
        None => return None,
    };
    let mut parts = Vec::new();
    let push = |parts: &mut Vec<usize>, part: usize, times: usize| {
        parts.extend(std::iter::repeat(part).take(times))
    };
    if inner.contains(',') {
        for item in inner.split(',') {
            let (part, times) = match item.split_once('^') {
                Some((p, k)) => (p.parse().ok()?, unbrace(k)?.parse().ok()?),
                None => (item.parse().ok()?, 1),
            };
            push(&mut parts, part, times);
        }
    } else {
        let bytes = inner.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let part = (bytes[i] as char).to_digit(10)? as usize;
            i += 1;
            let mut times = 1;
            if bytes.get(i) == Some(&b'^') {
                i += 1;
                if bytes.get(i) == Some(&b'{') {
                    let close = inner[i..].find('}')? + i;
                    times = inner[i + 1..close].parse().ok()?;
                    i = close + 1;
                } else {
                    times = (*bytes.get(i)? as char).to_digit(10)? as usize;
                    i += 1;
                }
            }
            push(&mut parts, part, times);
        }
    }
    Partition::new(parts).ok()
}

fn unbrace(text: &str) -> Option<&str> {
    match text.strip_prefix('{') {
        Some(rest) => rest.strip_suffix('}'),
        None => Some(text),
    }
}

/// Parses a display that must be well formed, in a single basis, and of the
/// given degree.
pub fn parse_expansion(
    text: &str,
    degree: usize,
    basis: Basis,
) -> Result<SymFuncExpansion, String> {
    let mut f = SymFuncExpansion::zero(degree, basis);
    for term in parse_display(text) {
        if term.basis != Some(basis) {
            return Err(format!("term `{}` is not in the {basis} basis", term.text));
        }
        let lambda = term
            .partition
            .ok_or_else(|| format!("term `{}` has an unreadable subscript", term.text))?;
        f.add_term(lambda, term.coeff)
            .map_err(|e| format!("term `{}`: {e}", term.text))?;
    }
    Ok(f)
}
