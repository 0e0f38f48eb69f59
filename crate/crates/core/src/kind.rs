use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Every set property the library can verify or minimise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParameterKind {
    /// Dominating set, γ.
    Dom,
    /// Independent dominating set, γ_i.
    Idom,
    /// Total dominating set, γ_t.
    Tdom,
    /// Connected dominating set, γ_c.
    Cdom,
    /// Double dominating set, γ_×2.
    Ddom,
    /// 2-dominating set, γ_2.
    TwoDom,
    /// Resolving set, dim.
    Dim,
    /// Resolving dominating set, γ_r.
    Rdom,
    /// Resolving independent dominating set, γ_ri.
    Ridom,
    /// Resolving total dominating set, γ_rt.
    Rtdom,
    /// Resolving connected dominating set, γ_rc.
    Rcdom,
    /// Quasi-double dominating pair, γ_q×2.
    Qddom,
}

impl ParameterKind {
    pub const ALL: [ParameterKind; 12] = [
        Self::Dom,
        Self::Idom,
        Self::Tdom,
        Self::Cdom,
        Self::Ddom,
        Self::TwoDom,
        Self::Dim,
        Self::Rdom,
        Self::Ridom,
        Self::Rtdom,
        Self::Rcdom,
        Self::Qddom,
    ];

    /// Kinds whose witness is a single vertex set.
    pub const SET_KINDS: [ParameterKind; 11] = [
        Self::Dom,
        Self::Idom,
        Self::Tdom,
        Self::Cdom,
        Self::Ddom,
        Self::TwoDom,
        Self::Dim,
        Self::Rdom,
        Self::Ridom,
        Self::Rtdom,
        Self::Rcdom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Dom => "dom",
            Self::Idom => "idom",
            Self::Tdom => "tdom",
            Self::Cdom => "cdom",
            Self::Ddom => "ddom",
            Self::TwoDom => "2dom",
            Self::Dim => "dim",
            Self::Rdom => "rdom",
            Self::Ridom => "ridom",
            Self::Rtdom => "rtdom",
            Self::Rcdom => "rcdom",
            Self::Qddom => "qddom",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Self::Dom => "γ",
            Self::Idom => "γ_i",
            Self::Tdom => "γ_t",
            Self::Cdom => "γ_c",
            Self::Ddom => "γ_×2",
            Self::TwoDom => "γ_2",
            Self::Dim => "dim",
            Self::Rdom => "γ_r",
            Self::Ridom => "γ_ri",
            Self::Rtdom => "γ_rt",
            Self::Rcdom => "γ_rc",
            Self::Qddom => "γ_q×2",
        }
    }

    /// Kinds that include the resolving condition.
    pub fn is_resolving(self) -> bool {
        matches!(self, Self::Dim | Self::Rdom | Self::Ridom | Self::Rtdom | Self::Rcdom)
    }

    /// The domination part of a resolving-domination kind.
    pub fn domination_part(self) -> Option<ParameterKind> {
        match self {
            Self::Rdom => Some(Self::Dom),
            Self::Ridom => Some(Self::Idom),
            Self::Rtdom => Some(Self::Tdom),
            Self::Rcdom => Some(Self::Cdom),
            Self::Dim => None,
            other => Some(other),
        }
    }
}

impl fmt::Display for ParameterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ParameterKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let lower = s.to_ascii_lowercase();
        let kind = match lower.as_str() {
            "dom" | "ds" | "gamma" => Self::Dom,
            "idom" | "ids" => Self::Idom,
            "tdom" | "tds" => Self::Tdom,
            "cdom" | "cds" => Self::Cdom,
            "ddom" | "dds" | "double" => Self::Ddom,
            "2dom" | "twodom" | "2ds" => Self::TwoDom,
            "dim" | "rs" | "resolving" => Self::Dim,
            "rdom" | "rds" => Self::Rdom,
            "ridom" | "rids" => Self::Ridom,
            "rtdom" | "rtds" => Self::Rtdom,
            "rcdom" | "rcds" => Self::Rcdom,
            "qddom" | "quasi" => Self::Qddom,
            _ => return Err(Error::UnknownKind(s.to_owned())),
        };
        Ok(kind)
    }
}

impl Serialize for ParameterKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for ParameterKind {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for kind in ParameterKind::ALL {
            assert_eq!(kind.name().parse::<ParameterKind>().unwrap(), kind);
            let json = serde_json::to_string(&kind).unwrap();
            assert_eq!(serde_json::from_str::<ParameterKind>(&json).unwrap(), kind);
        }
        assert_eq!("TwoDom".parse::<ParameterKind>().unwrap(), ParameterKind::TwoDom);
        assert!("gamma_x".parse::<ParameterKind>().is_err());
    }
}
