//! SHA-256 hashing and the 32-byte digest type used everywhere a hash
//! appears: component hashes, Merkle nodes, ledger chain links, value
//! commitments.
//!
//! Domain separators keep leaf hashes and interior Merkle nodes in
//! disjoint preimage spaces.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use sha2::{Digest, Sha256};

/// Domain tag for hashing a component encoding (a Merkle leaf).
pub const LEAF_TAG: u8 = 0x00;
/// Domain tag for combining two Merkle nodes.
pub const INTERIOR_TAG: u8 = 0x01;

/// A 32-byte SHA-256 digest.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hash32(pub [u8; 32]);

impl Hash32 {
    /// The all-zero digest, used as the `prev_hash` of the genesis envelope.
    pub const ZERO: Hash32 = Hash32([0u8; 32]);

    pub fn as_bytes(&self) -> &[u8; 32] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self, hex::FromHexError> {
        let bytes = hex::decode(s)?;
        let arr: [u8; 32] = bytes
            .try_into()
            .map_err(|_| hex::FromHexError::InvalidStringLength)?;
        Ok(Hash32(arr))
    }
}

impl fmt::Debug for Hash32 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hash32({}..)", &self.to_hex()[..12])
    }
}

impl fmt::Display for Hash32 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl Serialize for Hash32 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for Hash32 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Hash32::from_hex(&s).map_err(D::Error::custom)
    }
}

/// SHA-256 of a single byte slice.
pub fn sha256(data: &[u8]) -> Hash32 {
    let mut hasher = Sha256::new();
    hasher.update(data);
    Hash32(hasher.finalize().into())
}

/// SHA-256 over the concatenation of several slices, without allocating.
pub fn sha256_parts(parts: &[&[u8]]) -> Hash32 {
    let mut hasher = Sha256::new();
    for part in parts {
        hasher.update(part);
    }
    Hash32(hasher.finalize().into())
}

/// Leaf-domain hash: `SHA-256(0x00 || data)`.
pub fn leaf_hash(data: &[u8]) -> Hash32 {
    sha256_parts(&[&[LEAF_TAG], data])
}

/// Interior-domain hash: `SHA-256(0x01 || left || right)`.
pub fn interior_hash(left: &Hash32, right: &Hash32) -> Hash32 {
    sha256_parts(&[&[INTERIOR_TAG], &left.0, &right.0])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hex_round_trip() {
        let h = sha256(b"abc");
        let again = Hash32::from_hex(&h.to_hex()).unwrap();
        assert_eq!(h, again);
    }

    #[test]
    fn known_sha256_vector() {
        // FIPS 180-2 test vector for "abc".
        let h = sha256(b"abc");
        assert_eq!(
            h.to_hex(),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }

    #[test]
    fn domain_tags_separate() {
        let data = [7u8; 32];
        let leaf = leaf_hash(&data);
        let interior = interior_hash(&Hash32(data), &Hash32([0u8; 32]));
        assert_ne!(leaf, interior);
        assert_ne!(leaf, sha256(&data));
    }

    #[test]
    fn serde_as_lowercase_hex() {
        let h = sha256(b"x");
        let json = serde_json::to_string(&h).unwrap();
        assert!(json.starts_with('"') && json.ends_with('"'));
        assert_eq!(json.trim_matches('"'), h.to_hex());
        let back: Hash32 = serde_json::from_str(&json).unwrap();
        assert_eq!(back, h);
    }
}
