//! Canonical byte encoding for deterministic hashing.
//!
//! Every hashed structure in the workspace serializes through this encoder
//! so that hashes are reproducible across runs and across implementations:
//! fields in a fixed declared order, integers as 8-byte big-endian,
//! floating-point values as big-endian IEEE-754 bit patterns, and byte
//! strings length-prefixed.

use crate::hash::Hash32;

/// Accumulates the canonical encoding of a structure.
#[derive(Default)]
pub struct CanonicalEncoder {
    buf: Vec<u8>,
}

impl CanonicalEncoder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn put_u8(&mut self, v: u8) {
        self.buf.push(v);
    }

    pub fn put_u64(&mut self, v: u64) {
        self.buf.extend_from_slice(&v.to_be_bytes());
    }

    pub fn put_f64(&mut self, v: f64) {
        self.buf.extend_from_slice(&v.to_bits().to_be_bytes());
    }

    pub fn put_bool(&mut self, v: bool) {
        self.buf.push(u8::from(v));
    }

    /// Length-prefixed byte string.
    pub fn put_bytes(&mut self, v: &[u8]) {
        self.put_u64(v.len() as u64);
        self.buf.extend_from_slice(v);
    }

    pub fn put_str(&mut self, v: &str) {
        self.put_bytes(v.as_bytes());
    }

    /// Fixed-width digest, no length prefix.
    pub fn put_hash(&mut self, v: &Hash32) {
        self.buf.extend_from_slice(v.as_bytes());
    }

    pub fn put_f64_slice(&mut self, vs: &[f64]) {
        self.put_u64(vs.len() as u64);
        for v in vs {
            self.put_f64(*v);
        }
    }

    pub fn finish(self) -> Vec<u8> {
        self.buf
    }
}

/// Types with a canonical byte representation.
pub trait CanonicalEncode {
    fn encode_canonical(&self, enc: &mut CanonicalEncoder);

    fn canonical_bytes(&self) -> Vec<u8> {
        let mut enc = CanonicalEncoder::new();
        self.encode_canonical(&mut enc);
        enc.finish()
    }
}

/// Cursor over canonical bytes, for decoding.
pub struct CanonicalDecoder<'a> {
    buf: &'a [u8],
    pos: usize,
}

/// Decoding failure: truncated input or an invalid tag.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("canonical decode error at byte {offset}: {detail}")]
pub struct DecodeError {
    pub offset: usize,
    pub detail: String,
}

impl<'a> CanonicalDecoder<'a> {
    pub fn new(buf: &'a [u8]) -> Self {
        Self { buf, pos: 0 }
    }

    fn err(&self, detail: impl Into<String>) -> DecodeError {
        DecodeError {
            offset: self.pos,
            detail: detail.into(),
        }
    }

    fn take(&mut self, n: usize) -> Result<&'a [u8], DecodeError> {
        if self.pos + n > self.buf.len() {
            return Err(self.err(format!("need {n} bytes, have {}", self.buf.len() - self.pos)));
        }
        let out = &self.buf[self.pos..self.pos + n];
        self.pos += n;
        Ok(out)
    }

    pub fn get_u8(&mut self) -> Result<u8, DecodeError> {
        Ok(self.take(1)?[0])
    }

    pub fn get_u64(&mut self) -> Result<u64, DecodeError> {
        let bytes = self.take(8)?;
        Ok(u64::from_be_bytes(bytes.try_into().unwrap()))
    }

    pub fn get_usize(&mut self) -> Result<usize, DecodeError> {
        let v = self.get_u64()?;
        usize::try_from(v).map_err(|_| self.err("length overflows usize"))
    }

    pub fn get_f64(&mut self) -> Result<f64, DecodeError> {
        let bytes = self.take(8)?;
        Ok(f64::from_bits(u64::from_be_bytes(bytes.try_into().unwrap())))
    }

    pub fn get_bool(&mut self) -> Result<bool, DecodeError> {
        match self.get_u8()? {
            0 => Ok(false),
            1 => Ok(true),
            other => Err(self.err(format!("invalid bool byte {other:#04x}"))),
        }
    }

    pub fn get_bytes(&mut self) -> Result<Vec<u8>, DecodeError> {
        let len = self.get_usize()?;
        Ok(self.take(len)?.to_vec())
    }

    pub fn get_str(&mut self) -> Result<String, DecodeError> {
        let bytes = self.get_bytes()?;
        String::from_utf8(bytes).map_err(|_| self.err("invalid utf-8"))
    }

    pub fn get_hash(&mut self) -> Result<Hash32, DecodeError> {
        let bytes = self.take(32)?;
        Ok(Hash32(bytes.try_into().unwrap()))
    }

    pub fn get_f64_vec(&mut self) -> Result<Vec<f64>, DecodeError> {
        let len = self.get_usize()?;
        let mut out = Vec::with_capacity(len.min(1 << 20));
        for _ in 0..len {
            out.push(self.get_f64()?);
        }
        Ok(out)
    }

    /// Fails unless the input was consumed exactly.
    pub fn expect_end(&self) -> Result<(), DecodeError> {
        if self.pos == self.buf.len() {
            Ok(())
        } else {
            Err(self.err(format!("{} trailing bytes", self.buf.len() - self.pos)))
        }
    }
}
