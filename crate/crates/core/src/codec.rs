//! JSON encodings shared by the CLI and verification reports.
//!
//! Exact scalars are `[re_num, re_den, im_num, im_den]` integer 4-tuples; an
//! integer that does not fit in `i64` is written as a decimal string. Hecke
//! elements are objects keyed by the cycle string of a class member.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::pair::HeckePair;
use crate::perm::Permutation;
use crate::repr::RepMatrix;
use crate::scalar::Scalar;
use std::sync::Arc;

/// JSON form of a scalar.
pub trait Codec: Sized {
    fn to_json(&self) -> Value;
    fn from_json(value: &Value) -> Result<Self>;
}

fn int_to_json(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(n.to_string()),
    }
}

fn int_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::Codec(format!("{n} is not an integer"))),
        Value::String(s) => s
            .parse()
            .map_err(|_| Error::Codec(format!("{s:?} is not an integer"))),
        other => Err(Error::Codec(format!("expected an integer, found {other}"))),
    }
}

fn ratio(num: BigInt, den: BigInt) -> Result<BigRational> {
    if den.is_zero() {
        return Err(Error::Codec("zero denominator".into()));
    }
    Ok(BigRational::new(num, den))
}

impl Codec for Complex<BigRational> {
    fn to_json(&self) -> Value {
        Value::Array(vec![
            int_to_json(self.re.numer()),
            int_to_json(self.re.denom()),
            int_to_json(self.im.numer()),
            int_to_json(self.im.denom()),
        ])
    }

    fn from_json(value: &Value) -> Result<Self> {
        let parts = value
            .as_array()
            .filter(|a| a.len() == 4)
            .ok_or_else(|| Error::Codec(format!("expected [re_num, re_den, im_num, im_den], found {value}")))?;
        let ints = parts.iter().map(int_from_json).collect::<Result<Vec<_>>>()?;
        let [rn, rd, inum, id]: [BigInt; 4] = ints.try_into().expect("length checked");
        Ok(Complex::new(ratio(rn, rd)?, ratio(inum, id)?))
    }
}

impl Codec for Complex<f64> {
    fn to_json(&self) -> Value {
        Value::Array(vec![Value::from(self.re), Value::from(self.im)])
    }

    fn from_json(value: &Value) -> Result<Self> {
        match value.as_array().map(|a| a.as_slice()) {
            Some([re, im]) => match (re.as_f64(), im.as_f64()) {
                (Some(re), Some(im)) => Ok(Complex::new(re, im)),
                _ => Err(Error::Codec(format!("expected [re, im], found {value}"))),
            },
            _ => Err(Error::Codec(format!("expected [re, im], found {value}"))),
        }
    }
}

/// Keys are canonical class representatives, in class order.
pub fn element_to_json<S: Scalar + Codec>(f: &HeckeElement<S>) -> Value {
    let pair = f.pair();
    let double = pair.double_cosets();
    let map: Map<String, Value> = f
        .coeffs()
        .iter()
        .map(|(&k, c)| (pair.group().element(double.rep(k)).to_cycle_string(), c.to_json()))
        .collect();
    Value::Object(map)
}

/// Any member of a double coset may be used as its key; naming the same
/// class twice is an error.
pub fn element_from_json<S: Scalar + Codec>(pair: &Arc<HeckePair>, value: &Value) -> Result<HeckeElement<S>> {
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Codec(format!("expected an object of coefficients, found {value}")))?;
    let group = pair.group();
    let mut seen = vec![false; pair.dimension()];
    let mut coeffs = Vec::with_capacity(obj.len());
    for (key, coeff) in obj {
        let p = Permutation::parse_cycles(group.degree(), key)?;
        let id = group.id_of(&p).ok_or_else(|| Error::NotAMember(p.to_cycle_string()))?;
        let class = pair.double_cosets().class_of(id);
        if std::mem::replace(&mut seen[class], true) {
            return Err(Error::Codec(format!("double coset of {key} given more than once")));
        }
        coeffs.push((class, S::from_json(coeff)?));
    }
    Ok(HeckeElement::from_coeffs(pair, coeffs))
}

pub fn matrix_to_json<S: Scalar + Codec>(m: &RepMatrix<S>) -> Value {
    Value::Array(
        m.to_nested()
            .iter()
            .map(|row| Value::Array(row.iter().map(Codec::to_json).collect()))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roster;
    use crate::scalar::from_parts;
    use crate::QComplex;
    use proptest::prelude::*;
    use serde_json::json;

    #[test]
    fn exact_scalar_encoding() {
        let z: QComplex = from_parts((-6, 4), (0, 1));
        assert_eq!(z.to_json(), json!([-3, 2, 0, 1]));
        assert_eq!(QComplex::from_json(&json!([2, 4, "7", 1])).unwrap(), from_parts((1, 2), (7, 1)));
        assert!(QComplex::from_json(&json!([1, 0, 0, 1])).is_err());
        assert!(QComplex::from_json(&json!([1, 1, 0])).is_err());
        assert!(QComplex::from_json(&json!([1.5, 1, 0, 1])).is_err());
    }

    #[test]
    fn big_integers_become_strings() {
        let big = BigInt::from(i64::MAX) * BigInt::from(10);
        let z = Complex::new(BigRational::from_integer(big.clone()), BigRational::zero());
        let v = z.to_json();
        assert_eq!(v[0], Value::String(big.to_string()));
        assert_eq!(QComplex::from_json(&v).unwrap(), z);
    }

    #[test]
    fn element_keys_accept_any_class_member() {
        let pair = roster::s3_transposition();
        let a: HeckeElement<QComplex> = element_from_json(&pair, &json!({"(1 3)": [1, 1, 0, 1]})).unwrap();
        let b: HeckeElement<QComplex> = element_from_json(&pair, &json!({"(2 3)": [1, 1, 0, 1]})).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, HeckeElement::basis(&pair, 1));
        let dup = element_from_json::<QComplex>(&pair, &json!({"(1 3)": [1, 1, 0, 1], "(2 3)": [1, 1, 0, 1]}));
        assert!(dup.is_err());
        let bad = element_from_json::<QComplex>(&pair, &json!({"(1 4)": [1, 1, 0, 1]}));
        assert!(matches!(bad, Err(Error::PointOutOfRange { .. })));
    }

    #[test]
    fn element_output_uses_canonical_reps() {
        let pair = roster::s3_transposition();
        let f: HeckeElement<QComplex> =
            HeckeElement::from_coeffs(&pair, [(1, from_parts((1, 1), (0, 1))), (0, from_parts((2, 1), (0, 1)))]);
        let text = serde_json::to_string(&element_to_json(&f)).unwrap();
        let rep1 = pair.group().element(pair.double_cosets().rep(1)).to_cycle_string();
        assert_eq!(text, format!("{{\"()\":[2,1,0,1],\"{rep1}\":[1,1,0,1]}}"));
    }

    proptest! {
        #[test]
        fn element_round_trip(coeffs in proptest::collection::vec((-9i64..=9, 1i64..=3, -9i64..=9, 1i64..=3), 3)) {
            let pair = roster::s4_klein();
            let f: HeckeElement<QComplex> = HeckeElement::from_dense(
                &pair,
                coeffs.iter().map(|&(a, b, c, d)| from_parts((a, b), (c, d))).collect(),
            );
            let back: HeckeElement<QComplex> = element_from_json(&pair, &element_to_json(&f)).unwrap();
            prop_assert_eq!(back, f);
        }
    }
}
