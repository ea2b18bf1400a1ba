//! Exact membership degrees.
//!
//! A [`Grade`] is a value in `[0, 1]` stored as an integer number of
//! ten-thousandths. Nothing in this crate ever rounds a grade: decimal input
//! with more precision than the scale can hold is rejected.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Error;

/// Number of raw units in one whole degree.
pub const SCALE: u16 = 10_000;

/// Number of fractional decimal digits a grade can carry.
pub const FRACTION_DIGITS: usize = 4;

/// A membership degree in `[0, 1]` at resolution `10^-4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Grade(u16);

impl Grade {
    pub const ZERO: Grade = Grade(0);
    pub const ONE: Grade = Grade(SCALE);

    /// Builds a grade from its scaled representation.
    pub fn from_raw(raw: u16) -> Result<Self, Error> {
        if raw > SCALE {
            return Err(Error::OutOfRange(format!("raw grade {raw}")));
        }
        Ok(Grade(raw))
    }

    pub const fn raw(self) -> u16 {
        self.0
    }

    /// Parses a plain decimal numeral such as `"0.25"` or `"1"`.
    pub fn from_decimal(text: &str) -> Result<Self, Error> {
        let malformed = || Error::MalformedNumber(text.to_string());

        let (negative, body) = match text.as_bytes().first() {
            Some(b'-') => (true, &text[1..]),
            Some(b'+') => (false, &text[1..]),
            _ => (false, text),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, Some(f)),
            None => (body, None),
        };
        let frac_part = frac_part.unwrap_or("");
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(malformed());
        }
        let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
        if !all_digits(int_part) || !all_digits(frac_part) {
            return Err(malformed());
        }
        if frac_part.len() > FRACTION_DIGITS {
            return Err(Error::PrecisionExceeded(text.to_string()));
        }

        let int_value = int_part
            .trim_start_matches('0')
            .parse::<u64>()
            .unwrap_or_else(|_| if int_part.bytes().all(|b| b == b'0') { 0 } else { u64::MAX });
        let mut frac_value: u64 = 0;
        for (i, b) in frac_part.bytes().enumerate() {
            frac_value += u64::from(b - b'0') * 10u64.pow((FRACTION_DIGITS - 1 - i) as u32);
        }
        let raw = int_value
            .checked_mul(u64::from(SCALE))
            .and_then(|v| v.checked_add(frac_value))
            .ok_or_else(|| Error::OutOfRange(text.to_string()))?;

        if negative && raw != 0 {
            return Err(Error::OutOfRange(text.to_string()));
        }
        if raw > u64::from(SCALE) {
            return Err(Error::OutOfRange(text.to_string()));
        }
        Ok(Grade(raw as u16))
    }

    pub fn min(self, other: Grade) -> Grade {
        Grade(self.0.min(other.0))
    }

    pub fn max(self, other: Grade) -> Grade {
        Grade(self.0.max(other.0))
    }
}

impl FromStr for Grade {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Grade::from_decimal(s)
    }
}

/// Two decimals when exact at that precision, otherwise the fewest digits
/// (at most four) that represent the value.
impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let whole = self.0 / SCALE;
        let frac = self.0 % SCALE;
        if frac % 100 == 0 {
            write!(f, "{whole}.{:02}", frac / 100)
        } else {
            let digits = format!("{frac:04}");
            write!(f, "{whole}.{}", digits.trim_end_matches('0'))
        }
    }
}

impl Serialize for Grade {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_scaled_values() {
        assert_eq!(Grade::from_decimal("0.25").unwrap().raw(), 2500);
        assert_eq!(Grade::from_decimal("1.00").unwrap().raw(), 10_000);
        assert_eq!(Grade::from_decimal("1").unwrap().raw(), 10_000);
        assert_eq!(Grade::from_decimal("0").unwrap().raw(), 0);
        assert_eq!(Grade::from_decimal(".5").unwrap().raw(), 5000);
        assert_eq!(Grade::from_decimal("0.0005").unwrap().raw(), 5);
        assert_eq!(Grade::from_decimal("-0.0").unwrap().raw(), 0);
        assert_eq!(Grade::from_decimal("000.1").unwrap().raw(), 1000);
    }

    #[test]
    fn rejects_excess_precision() {
        assert!(matches!(
            Grade::from_decimal("0.123456"),
            Err(Error::PrecisionExceeded(_))
        ));
        assert!(matches!(
            Grade::from_decimal("0.25000"),
            Err(Error::PrecisionExceeded(_))
        ));
    }

    #[test]
    fn rejects_out_of_range() {
        for s in ["1.0001", "2", "-0.1", "99999999999999999999999"] {
            assert!(matches!(Grade::from_decimal(s), Err(Error::OutOfRange(_))), "{s}");
        }
        assert!(Grade::from_raw(10_001).is_err());
    }

    #[test]
    fn rejects_malformed() {
        for s in ["", ".", "abc", "0.2x", "1e-2", " 0.5", "0.5 ", "0..5", "--1", "+"] {
            assert!(matches!(Grade::from_decimal(s), Err(Error::MalformedNumber(_))), "{s:?}");
        }
    }

    #[test]
    fn display_is_canonical() {
        let show = |raw| Grade::from_raw(raw).unwrap().to_string();
        assert_eq!(show(2500), "0.25");
        assert_eq!(show(10_000), "1.00");
        assert_eq!(show(0), "0.00");
        assert_eq!(show(5000), "0.50");
        assert_eq!(show(1230), "0.123");
        assert_eq!(show(1234), "0.1234");
        assert_eq!(show(5), "0.0005");
    }

    #[test]
    fn display_parses_back_for_every_raw_value() {
        for raw in 0..=SCALE {
            let g = Grade::from_raw(raw).unwrap();
            assert_eq!(Grade::from_decimal(&g.to_string()).unwrap(), g);
        }
    }
}
