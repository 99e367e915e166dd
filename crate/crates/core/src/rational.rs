//! Exact rational scalars and their string form (`"p/q"` or `"p"`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;
pub type RatVec = Vec<Rat>;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rvec(xs: &[i64]) -> RatVec {
    xs.iter().map(|&x| rat(x)).collect()
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    let parsed = match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad(s))?;
            let d: BigInt = d.trim().parse().map_err(|_| bad(s))?;
            if d.is_zero() {
                return Err(Error::InvalidInput(format!("zero denominator in {s:?}")));
            }
            Rat::new(n, d)
        }
        None => Rat::from_integer(t.parse().map_err(|_| bad(s))?),
    };
    Ok(parsed)
}

fn bad(s: &str) -> Error {
    Error::InvalidInput(format!("not a rational: {s:?}"))
}

/// `p/q` in lowest terms with positive denominator, or `p` when `q = 1`.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

pub fn sub(a: &[Rat], b: &[Rat]) -> RatVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[Rat], b: &[Rat]) -> RatVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[Rat], s: &Rat) -> RatVec {
    a.iter().map(|x| x * s).collect()
}

pub fn is_zero_vec(a: &[Rat]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Scales a nonzero vector so that its first nonzero entry has absolute
/// value one, keeping its sign. Used to compare hyperplane normals.
pub fn normalize_leading(a: &[Rat]) -> RatVec {
    match a.iter().find(|x| !x.is_zero()) {
        Some(lead) => {
            let s = lead.abs().recip();
            scale(a, &s)
        }
        None => a.to_vec(),
    }
}

pub fn to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_rat(" -7 ").unwrap(), rat(-7));
        assert_eq!(parse_rat("2/-4").unwrap(), ratio(-1, 2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("abc").is_err());
        assert_eq!(format_rat(&ratio(-2, 4)), "-1/2");
        assert_eq!(format_rat(&rat(5)), "5");
    }

    #[test]
    fn leading_normalization_keeps_sign() {
        assert_eq!(normalize_leading(&rvec(&[0, -4, 2])), vec![rat(0), rat(-1), ratio(1, 2)]);
    }
}
