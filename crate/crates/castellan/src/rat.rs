//! Exact rational scalars and their `"p/q"` wire format.

use num::bigint::BigInt;
use num::rational::Ratio;
use num::{One, Signed, Zero};

pub type Rat = Ratio<BigInt>;

pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Ratio::new(BigInt::from(num), BigInt::from(den))
}

pub fn rint(n: i64) -> Rat {
    Ratio::from_integer(BigInt::from(n))
}

pub fn rat_usize(num: usize, den: usize) -> Rat {
    assert!(den != 0, "zero denominator");
    Ratio::new(BigInt::from(num), BigInt::from(den))
}

pub fn rzero() -> Rat {
    Rat::zero()
}

pub fn rone() -> Rat {
    Rat::one()
}

/// Renders a rational as `p/q` with q >= 1, always including the denominator.
pub fn format_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer. Rejects zero denominators and garbage.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| format!("invalid rational numerator: {s:?}"))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| format!("invalid rational denominator: {s:?}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in rational: {s:?}"));
    }
    Ok(Ratio::new(n, d))
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    let n = r.numer();
    let d = r.denom();
    // good enough for CSV plotting columns
    let nf: f64 = n.to_string().parse().unwrap_or(f64::NAN);
    let df: f64 = d.to_string().parse().unwrap_or(f64::NAN);
    nf / df
}

pub fn rabs(r: &Rat) -> Rat {
    r.abs()
}

/// Smallest integer >= r, as i64. Only used for desk-scale counts.
pub fn ceil_i64(r: &Rat) -> i64 {
    let c = r.ceil();
    c.numer().to_string().parse().expect("count out of range")
}

/// serde adapters: rationals travel as "p/q" strings.
pub mod rat_serde {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s).map_err(serde::de::Error::custom)
    }
}

pub mod rat_vec_serde {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
        let strs: Vec<String> = v.iter().map(format_rat).collect();
        serde::Serialize::serialize(&strs, s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rat>, D::Error> {
        let strs = Vec::<String>::deserialize(d)?;
        strs.iter()
            .map(|s| parse_rat(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        for (n, d) in [(4i64, 9i64), (0, 1), (-3, 7), (10, 5)] {
            let r = rat(n, d);
            assert_eq!(parse_rat(&format_rat(&r)).unwrap(), r);
        }
        assert_eq!(parse_rat("7").unwrap(), rint(7));
    }

    #[test]
    fn rejects_zero_denominator() {
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x/2").is_err());
    }
}
