//! Vertex and hyperedge identifiers.
//!
//! Identifiers are opaque strings. Their ordering is *digit-aware*: maximal
//! digit runs compare by numeric value, so `e2 < e10`. Everything in this
//! crate that promises a deterministic order (component order, search order,
//! serialization order) uses this ordering.

use serde::{Deserialize, Serialize};
use std::borrow::Borrow;
use std::cmp::Ordering;
use std::fmt;

fn natural_cmp(a: &str, b: &str) -> Ordering {
    let (mut ia, mut ib) = (a.as_bytes(), b.as_bytes());
    loop {
        match (ia.first(), ib.first()) {
            (None, None) => return a.cmp(b), // tie-break on the raw string ("e07" vs "e7")
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(ca), Some(cb)) => {
                if ca.is_ascii_digit() && cb.is_ascii_digit() {
                    let la = ia.iter().take_while(|c| c.is_ascii_digit()).count();
                    let lb = ib.iter().take_while(|c| c.is_ascii_digit()).count();
                    let na = &ia[..la];
                    let nb = &ib[..lb];
                    let trim = |s: &[u8]| -> Vec<u8> {
                        let t: Vec<u8> = s.iter().copied().skip_while(|&c| c == b'0').collect();
                        t
                    };
                    let (ta, tb) = (trim(na), trim(nb));
                    let ord = ta.len().cmp(&tb.len()).then_with(|| ta.cmp(&tb));
                    if ord != Ordering::Equal {
                        return ord;
                    }
                    ia = &ia[la..];
                    ib = &ib[lb..];
                } else {
                    if ca != cb {
                        return ca.cmp(cb);
                    }
                    ia = &ia[1..];
                    ib = &ib[1..];
                }
            }
        }
    }
}

macro_rules! id_type {
    ($name:ident, $doc:literal) => {
        #[doc = $doc]
        #[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(String);

        impl $name {
            pub fn new(s: impl Into<String>) -> Self {
                Self(s.into())
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl PartialOrd for $name {
            fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
                Some(self.cmp(other))
            }
        }

        impl Ord for $name {
            fn cmp(&self, other: &Self) -> Ordering {
                natural_cmp(&self.0, &other.0)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl From<&str> for $name {
            fn from(s: &str) -> Self {
                Self(s.to_owned())
            }
        }

        impl From<String> for $name {
            fn from(s: String) -> Self {
                Self(s)
            }
        }

        impl Borrow<str> for $name {
            fn borrow(&self) -> &str {
                &self.0
            }
        }
    };
}

id_type!(VertexId, "Identifier of a vertex.");
id_type!(EdgeId, "Identifier of a hyperedge.");

/// Returns `prefix` followed by one plus the largest numeric suffix among the
/// existing identifiers of the form `prefix<digits>`. Never collides with an
/// identifier still present.
pub(crate) fn fresh_id<'a>(prefix: &str, existing: impl Iterator<Item = &'a str>) -> String {
    let mut next: u64 = 0;
    for id in existing {
        if let Some(rest) = id.strip_prefix(prefix) {
            if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
                if let Ok(n) = rest.parse::<u64>() {
                    next = next.max(n + 1);
                }
            }
        }
    }
    format!("{prefix}{next}")
}
