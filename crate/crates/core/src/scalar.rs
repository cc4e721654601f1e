//! The integer scalar abstraction shared by the exact linear algebra.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact integer ring element.
///
/// Implemented for `i64`, `i128` and `BigInt`. The fixed-width types are
/// convenient for small fixtures but panic on overflow in debug builds;
/// everything the scans compute goes through `BigInt`.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + Ord
    + Hash
    + Integer
    + Signed
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    fn from_big(value: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Scalar for i64 {
    fn from_big(value: &BigInt) -> Option<Self> {
        value.to_i64()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for i128 {
    fn from_big(value: &BigInt) -> Option<Self> {
        value.to_i128()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn from_big(value: &BigInt) -> Option<Self> {
        Some(value.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Serde helpers writing integers as JSON numbers when they fit in 64 bits
/// and as decimal strings otherwise. Both forms are accepted on input.
pub mod json_int {
    use std::marker::PhantomData;

    use num_bigint::BigInt;
    use num_traits::Num;
    use serde::de::{self, Visitor};
    use serde::{Deserializer, Serializer};

    use super::Scalar;

    pub fn serialize<T: Scalar, S: Serializer>(value: &T, ser: S) -> Result<S::Ok, S::Error> {
        match value.to_i64() {
            Some(v) => ser.serialize_i64(v),
            None => ser.collect_str(value),
        }
    }

    pub fn deserialize<'de, T: Scalar, D: Deserializer<'de>>(de: D) -> Result<T, D::Error> {
        de.deserialize_any(IntVisitor(PhantomData))
    }

    struct IntVisitor<T>(PhantomData<T>);

    impl<T: Scalar> IntVisitor<T> {
        fn from_big<E: de::Error>(v: BigInt) -> Result<T, E> {
            T::from_big(&v).ok_or_else(|| E::custom(format!("integer {v} out of range")))
        }
    }

    impl<T: Scalar> Visitor<'_> for IntVisitor<T> {
        type Value = T;

        fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
            f.write_str("an integer or a decimal integer string")
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> Result<T, E> {
            Self::from_big(BigInt::from(v))
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> Result<T, E> {
            Self::from_big(BigInt::from(v))
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<T, E> {
            let big = BigInt::from_str_radix(v.trim(), 10)
                .map_err(|_| E::custom(format!("`{v}` is not an integer")))?;
            Self::from_big(big)
        }
    }

    /// Same encoding applied element-wise to a vector.
    pub mod vec {
        use serde::de::{SeqAccess, Visitor};
        use serde::ser::SerializeSeq;
        use serde::{Deserializer, Serializer};
        use std::marker::PhantomData;

        use crate::scalar::Scalar;

        struct Elem<T>(T);

        impl<'de, T: Scalar> serde::Deserialize<'de> for Elem<T> {
            fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
                super::deserialize(de).map(Elem)
            }
        }

        struct Ref<'a, T>(&'a T);

        impl<T: Scalar> serde::Serialize for Ref<'_, T> {
            fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
                super::serialize(self.0, ser)
            }
        }

        pub fn serialize<T: Scalar, S: Serializer>(values: &[T], ser: S) -> Result<S::Ok, S::Error> {
            let mut seq = ser.serialize_seq(Some(values.len()))?;
            for v in values {
                seq.serialize_element(&Ref(v))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, T: Scalar, D: Deserializer<'de>>(de: D) -> Result<Vec<T>, D::Error> {
            struct SeqVisitor<T>(PhantomData<T>);
            impl<'de, T: Scalar> Visitor<'de> for SeqVisitor<T> {
                type Value = Vec<T>;
                fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                    f.write_str("an array of integers")
                }
                fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Vec<T>, A::Error> {
                    let mut out = Vec::new();
                    while let Some(Elem(v)) = seq.next_element::<Elem<T>>()? {
                        out.push(v);
                    }
                    Ok(out)
                }
            }
            de.deserialize_seq(SeqVisitor(PhantomData))
        }
    }
}
