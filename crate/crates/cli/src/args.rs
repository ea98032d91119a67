//! Parsers for command-line arguments that are not representations:
//! characters, torsion points and subgroup descriptions.

use ellipcp_core::lattice::{FiniteSubgroup, TorsionPoint};
use ellipcp_core::repr::{Character, LITERAL_LIMIT};

use crate::CliError;

/// An integer of absolute value at most [`LITERAL_LIMIT`].
pub fn parse_int(text: &str, what: &str) -> Result<i64, CliError> {
    let n: i64 =
        text.trim().parse().map_err(|_| CliError::Parse(format!("expected an integer for {what}, got {text:?}")))?;
    if n.abs() > LITERAL_LIMIT {
        return Err(CliError::Parse(format!("{what} {n} exceeds the literal limit {LITERAL_LIMIT}")));
    }
    Ok(n)
}

/// `l,m` or `(l,m)`.
pub fn parse_character(text: &str) -> Result<Character, CliError> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    match inner.split(',').collect::<Vec<_>>()[..] {
        [l, m] => Ok(Character::new(parse_int(l, "λ")?, parse_int(m, "μ")?)),
        _ => Err(CliError::Parse(format!("expected a character `l,m`, got {text:?}"))),
    }
}

/// `a` or `a/b` as a reduced fraction `(num, den)` with `den > 0`.
fn parse_rational(text: &str) -> Result<(i64, i64), CliError> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (parse_int(n, "a numerator")?, parse_int(d, "a denominator")?),
        None => (parse_int(text, "a coordinate")?, 1),
    };
    if den == 0 {
        return Err(CliError::Parse(format!("zero denominator in {text:?}")));
    }
    Ok((num * den.signum(), den.abs()))
}

/// `a/b,c/d`: the point `(a/b, c/d)` of `T^2`, coordinates taken mod 1.
pub fn parse_point(text: &str) -> Result<TorsionPoint, CliError> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    let [x, y] = inner.split(',').collect::<Vec<_>>()[..] else {
        return Err(CliError::Parse(format!("expected a point `a/b,c/d`, got {text:?}")));
    };
    let ((p, q), (r, s)) = (parse_rational(x)?, parse_rational(y)?);
    let n = q / gcd(q, s) * s;
    Ok(TorsionPoint::new(p * (n / q), r * (n / s), n)?)
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// A finite subgroup of `T^2`:
///
/// - `trivial`
/// - `n,cyclic` for `<(1/n, 0)>`
/// - `n,full` for the `n`-torsion `T^2[n]`
/// - `a/b,c/d;e/f,g/h;...` for the subgroup generated by the listed points
pub fn parse_subgroup(text: &str) -> Result<FiniteSubgroup, CliError> {
    let text = text.trim();
    if text == "trivial" {
        return Ok(FiniteSubgroup::trivial());
    }
    if let Some((n, kind)) = text.split_once(',') {
        let named = match kind.trim() {
            "cyclic" => Some(FiniteSubgroup::cyclic as fn(i64) -> _),
            "full" => Some(FiniteSubgroup::full_torsion as fn(i64) -> _),
            _ => None,
        };
        if let Some(make) = named {
            return Ok(make(parse_int(n, "the order")?)?);
        }
    }
    let gens = text.split(';').map(parse_point).collect::<Result<Vec<_>, _>>()?;
    Ok(FiniteSubgroup::from_generators(&gens))
}
