use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// How an id is quantified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// A universal statement over spaces and their soft sets.
    SetLevel,
    /// A universal statement over triples `(T, f, S)`.
    MapLevel,
    /// True on every finite model for reasons outside the enumerator.
    Vacuous,
    /// A search for a space and a set separating two set classes.
    SetWitness,
    /// A search for a pair of spaces on one universe whose identity map
    /// separates two function classes.
    MapWitness,
}

macro_rules! catalog {
    ($( $variant:ident => $kind:ident, $statement:literal; )*) => {
        /// Identifier of a catalog entry.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        #[allow(non_camel_case_types)]
        pub enum PropositionId {
            $( $variant, )*
        }

        impl PropositionId {
            pub const ALL: &'static [PropositionId] = &[$( PropositionId::$variant, )*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $( PropositionId::$variant => stringify!($variant), )*
                }
            }

            pub fn kind(self) -> Kind {
                match self {
                    $( PropositionId::$variant => Kind::$kind, )*
                }
            }

            /// One-line statement of what the entry asserts or searches for.
            pub fn statement(self) -> &'static str {
                match self {
                    $( PropositionId::$variant => $statement, )*
                }
            }
        }
    };
}

catalog! {
    P3_SUPERSET => SetLevel,
        "supersets of a non-null sw-open set are sw-open; subsets of a proper sw-closed set are sw-closed";
    P3_NBHD => SetLevel,
        "a non-null set is sw-open iff it is a neighbourhood of some soft point iff it contains a non-null open set; a proper set is sw-closed iff it lies in a proper closed set";
    P3_UNION => SetLevel,
        "unions of sw-open sets (including the empty union) are sw-open; intersections of sw-closed sets are sw-closed";
    P3_HYPER_INT => SetLevel,
        "in a hyperconnected space sw-open sets are closed under finite intersection, meet open sets in sw-open sets, and form a soft topology";
    L3_DENSE_SUBSPACE => SetLevel,
        "if G is sw-open and D is dense then G ⊓ D is sw-open over D";
    L3_OPEN_SUBSPACE => SetLevel,
        "for G inside an open subspace Y, G is sw-open over Y iff it is sw-open over X";
    L3_SEMI_CL_IDENT => SetLevel,
        "G is semiopen iff Cl(G) = Cl(Int(G))";
    L3_SEMI_NONNULL_INT => SetLevel,
        "a non-null semiopen set has non-null interior";
    L3_CL_OPEN_INT => SetLevel,
        "Cl(G) ⊓ U ⊑ Cl(G ⊓ U) for every open U";
    L3_OPEN_SEMI => SetLevel,
        "an open set meets a semiopen set in a set semiopen over X";
    L3_OPEN_SEMI_REL => SetLevel,
        "an open set G meets a semiopen set in a set semiopen over G";
    L3_SEMI_IFF_SW_INT => SetLevel,
        "G is semiopen iff G ⊓ U is sw-open for every open U";
    L3_SEMICLOSED_SD => SetLevel,
        "a semiclosed somewhere dense set is sw-open";
    D1_DIAGRAM => SetLevel,
        "semiopen ⇒ sw-open ⇒ somewhere dense and semiopen ⇒ β-open ⇒ somewhere dense";
    P4_EQUIV => MapLevel,
        "sw-continuity ⟺ closed preimages are sw-closed ⟺ f(Cl_sw(G)) ⊑ Cl(f(G)) ⟺ Cl_sw(f⁻¹(H)) ⊑ f⁻¹(Cl(H)) ⟺ f⁻¹(Int(H)) ⊑ Int_sw(f⁻¹(H)) ⟺ the pointwise form";
    T4_DENSE_RESTRICT => MapLevel,
        "the restriction of an sw-continuous function to a dense subspace is sw-continuous";
    T4_COVER_GLUE => MapLevel,
        "if f is sw-continuous on each member of an open cover then f is sw-continuous";
    T4_EXTENSION => MapLevel,
        "every extension of an sw-continuous function on an open W with dense f(W) is sw-continuous";
    T4_SEMI_IFF_RESTRICT => MapLevel,
        "f is semicontinuous iff its restriction to every non-null open set is sw-continuous";
    T4_CHAR => MapLevel,
        "sw-continuity ⟺ non-null open preimages contain non-null opens ⟺ proper closed preimages lie in proper closed sets ⟺ images of dense sets are dense over f(X)";
    C4_CODENSE => MapLevel,
        "a bijection is sw-continuous iff it maps co-dense sets to co-dense sets";
    T4_SEPARABLE_VACUOUS => Vacuous,
        "an sw-continuous surjection maps separable spaces to separable spaces";
    T4_HYPER => MapLevel,
        "an sw-continuous surjection maps hyperconnected spaces to hyperconnected spaces";
    D2_DIAGRAM => MapLevel,
        "continuous ⇒ semicontinuous ⇒ sw-continuous ⇒ SD-continuous and semicontinuous ⇒ β-continuous ⇒ SD-continuous";
    P5_EQUIV => MapLevel,
        "sw-openness ⟺ f(Int(G)) ⊑ Int_sw(f(G)) ⟺ f⁻¹(Cl_sw(H)) ⊑ Cl(f⁻¹(H)) ⟺ non-null open images contain non-null sw-open sets ⟺ sw-openness at every soft point";
    T5_OPEN_RESTRICT => MapLevel,
        "the restriction of an sw-open function to a non-null open subspace is sw-open";
    T5_DENSE_EXT => MapLevel,
        "every extension of an sw-open function on a dense subspace is sw-open";
    T5_COVER_GLUE => MapLevel,
        "if f is sw-open on each member of a soft cover then f is sw-open";
    T5_CHAR_CLOSED => MapLevel,
        "a bijection is sw-open iff each closed F with f(F) ≠ Y lies, after mapping, in a proper closed set";
    T5_CHAR_DENSE => MapLevel,
        "a surjection is sw-open iff preimages of dense sets are dense";
    P5_HOMEO => MapLevel,
        "the inverse of an sw-homeomorphism is an sw-open function";
    D3_DIAGRAM => MapLevel,
        "open ⇒ semiopen ⇒ sw-open ⇒ SD-open, semiopen ⇒ β-open ⇒ SD-open, and homeomorphism ⇒ sw-homeomorphism";
    SD_NOT_SW => SetWitness,
        "a somewhere dense set that is not sw-open";
    BETA_NOT_SW => SetWitness,
        "a β-open set that is not sw-open";
    SW_NOT_SEMI => SetWitness,
        "an sw-open set that is not semiopen";
    SW_NOT_BETA => SetWitness,
        "an sw-open set that is not β-open";
    SD_NOT_BETA => SetWitness,
        "a somewhere dense set that is not β-open";
    INTERSECT_NOT_SW => SetWitness,
        "two sw-open sets whose intersection is not sw-open";
    INTERSECT_OPEN_NOT_SW => SetWitness,
        "an sw-open set meeting an open set in a set that is not sw-open";
    INTERSECT_CLOSED_NOT_SW => SetWitness,
        "an sw-open set meeting a closed set in a set that is not sw-open";
    INTERSECT_DENSE_NOT_SW => SetWitness,
        "an sw-open set meeting a dense set in a set that is not sw-open";
    SWCONT_NOT_SEMICONT => MapWitness,
        "an sw-continuous function that is not semicontinuous";
    BETACONT_NOT_SEMICONT => MapWitness,
        "a β-continuous function that is not semicontinuous";
    SDCONT_NOT_SWCONT => MapWitness,
        "an SD-continuous function that is not sw-continuous";
    SDCONT_NOT_BETACONT => MapWitness,
        "an SD-continuous function that is not β-continuous";
    SWCONT_NOT_BETACONT => MapWitness,
        "an sw-continuous function that is not β-continuous";
    SWOPEN_NOT_SEMIOPEN_MAP => MapWitness,
        "an sw-open function that is not semiopen";
    BETAOPEN_NOT_SEMIOPEN_MAP => MapWitness,
        "a β-open function that is not semiopen";
    SDOPEN_NOT_SWOPEN_MAP => MapWitness,
        "an SD-open function that is not sw-open";
    SDOPEN_NOT_BETAOPEN_MAP => MapWitness,
        "an SD-open function that is not β-open";
    SWHOMEO_NOT_HOMEO => MapWitness,
        "an sw-homeomorphism that is not a homeomorphism";
    SWHOMEO_NOT_T0 => MapWitness,
        "an sw-homeomorphism from a soft T₂ space onto a space that is not soft T₀";
}

impl PropositionId {
    /// Universal statements, as opposed to witness searches.
    pub fn is_proved(self) -> bool {
        matches!(self.kind(), Kind::SetLevel | Kind::MapLevel | Kind::Vacuous)
    }

    pub fn is_search(self) -> bool {
        !self.is_proved()
    }
}

impl fmt::Display for PropositionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PropositionId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let wanted = s.trim().to_ascii_uppercase();
        PropositionId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str() == wanted)
            .ok_or_else(|| format!("unknown proposition id `{s}`"))
    }
}

impl Serialize for PropositionId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for PropositionId {
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
        for &id in PropositionId::ALL {
            assert_eq!(id.as_str().parse::<PropositionId>().unwrap(), id);
            let json = serde_json::to_string(&id).unwrap();
            assert_eq!(serde_json::from_str::<PropositionId>(&json).unwrap(), id);
        }
        assert_eq!("p3_union".parse::<PropositionId>().unwrap(), PropositionId::P3_UNION);
        assert!("P9_NOPE".parse::<PropositionId>().is_err());
    }
}
