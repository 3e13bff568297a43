//! Closed-form index and nullity, where known.

use std::fmt;

use num_traits::One;
use serde::{Serialize, Serializer};

use super::ModelSubmanifold;
use crate::berger::BergerParam;
use crate::exact::{q, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Count {
    Exact(u64),
    AtLeast(u64),
}

impl Count {
    pub fn is_lower_bound(&self) -> bool {
        matches!(self, Count::AtLeast(_))
    }

    pub fn value(&self) -> u64 {
        match *self {
            Count::Exact(v) | Count::AtLeast(v) => v,
        }
    }

    /// Whether an enumerated count is consistent with this entry.
    pub fn admits(&self, v: u64) -> bool {
        match *self {
            Count::Exact(e) => e == v,
            Count::AtLeast(e) => v >= e,
        }
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Exact(v) => write!(f, "{v}"),
            Count::AtLeast(v) => write!(f, ">={v}"),
        }
    }
}

impl Serialize for Count {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match *self {
            Count::Exact(v) => s.serialize_u64(v),
            Count::AtLeast(_) => s.serialize_str(&self.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableEntry {
    pub index: Count,
    pub nullity: Count,
    pub source: &'static str,
}

fn entry(index: Count, nullity: Count, source: &'static str) -> Option<TableEntry> {
    Some(TableEntry { index, nullity, source })
}

/// Closed-form table value, `None` for models without one.
pub fn closed_form(model: &ModelSubmanifold, tau: &BergerParam) -> Option<TableEntry> {
    use Count::*;
    use ModelSubmanifold::*;
    let t = tau.tau_sq();
    let one = Q::one();
    match *model {
        TotallyGeodesicBergerSphere { n, m } if m < n => {
            let (n, m) = (n as u64, m as u64);
            let crit = q(1, 2 * m as i64 + 2);
            let index = if *t <= crit { 0 } else { 2 * (n - m) };
            let nullity = if *t == one {
                4 * (n - m) * (m + 1)
            } else if *t == crit {
                2 * (n - m) * (m + 2)
            } else {
                2 * (n - m) * (m + 1)
            };
            entry(Exact(index), Exact(nullity), "tg-berger-slot-count")
        }
        VeroneseRp3 => {
            let index = if *t > q(1, 2) {
                8
            } else if *t > q(1, 4) {
                6
            } else {
                0
            };
            let nullity = if *t == one || *t == q(1, 4) {
                16
            } else if *t == q(1, 2) {
                12
            } else {
                10
            };
            entry(Exact(index), Exact(nullity), "veronese-quotient-table")
        }
        VeroneseS3 => {
            let index = if *t > q(1, 4) {
                AtLeast(14)
            } else if *t > q(1, 8) {
                Exact(8)
            } else {
                Exact(0)
            };
            let nullity = if *t == one || *t == q(1, 4) {
                Exact(16)
            } else if *t == q(1, 8) {
                Exact(18)
            } else {
                AtLeast(10)
            };
            entry(index, nullity, "veronese-cover-table")
        }
        TotallyRealSphere { n, d } if d >= 1 && d <= n => {
            let (n, d) = (n as u64, d as u64);
            if *t == one {
                entry(Exact(2 * n + 1 - d), Exact((d + 1) * (2 * n + 1 - d)), "totally-real-round")
            } else {
                entry(
                    Exact(2 * n + 1 + d * (d - 1) / 2),
                    Exact((d + 1) * (4 * n + 2 - 3 * d) / 2),
                    "totally-real-berger",
                )
            }
        }
        CliffordHypersurface { m1, m2 } => {
            let n = (m1 + m2 + 1) as u64;
            let base = 2 * (m1 as u64 + 1) * (m2 as u64 + 1);
            let crit = q(1, 2 * n as i64 + 1);
            let index = if *t <= crit { 1 } else { 2 * n + 3 };
            let nullity = if *t == one {
                2 * base
            } else if *t == crit {
                base + 2 * (n + 1)
            } else {
                base
            };
            entry(Exact(index), Exact(nullity), "clifford-hypersurface")
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert!(Count::AtLeast(3).admits(5));
        assert!(!Count::Exact(3).admits(5));
        assert_eq!(Count::AtLeast(14).to_string(), ">=14");
    }

    #[test]
    fn tg_table() {
        let m = ModelSubmanifold::TotallyGeodesicBergerSphere { n: 2, m: 1 };
        let e = closed_form(&m, &BergerParam::from_ratio(1, 4).unwrap()).unwrap();
        assert_eq!((e.index, e.nullity), (Count::Exact(0), Count::Exact(6)));
        assert!(closed_form(&ModelSubmanifold::CircleCover { n: 1, s: 2 }, &BergerParam::from_ratio(1, 4).unwrap()).is_none());
    }
}
