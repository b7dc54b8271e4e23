//! Grid files and plot-ready CSV.
//!
//! The binary grid format is `DWGRID1\0`, five little-endian `u64` fields
//! `(p, kind, n, j, count)` and `count` little-endian `f64` values.

use std::io::{Read, Write};

use crate::dyadic::{DyadicGrid, FunctionKind};
use crate::error::{Error, Result};
use crate::real::Real;

pub const GRID_MAGIC: [u8; 8] = *b"DWGRID1\0";

/// Shortest decimal that parses back to the same `f64`.
pub fn format_f64(x: f64) -> String {
    if x.is_nan() {
        "NaN".to_string()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.to_string()
    } else {
        let s = format!("{x}");
        // Display never uses exponents, which bloats tiny and huge values
        let e = format!("{x:e}");
        if e.len() < s.len() {
            e
        } else {
            s
        }
    }
}

/// A grid rounded once to `f64` for export.
#[derive(Clone, Debug, PartialEq)]
pub struct GridFile {
    pub p: u32,
    pub kind: FunctionKind,
    pub derivative: u32,
    pub refinement: u32,
    pub values: Vec<f64>,
}

impl GridFile {
    pub fn from_grid<W: Real>(grid: &DyadicGrid<W>) -> Self {
        GridFile {
            p: grid.p(),
            kind: grid.kind(),
            derivative: grid.derivative(),
            refinement: grid.refinement(),
            values: grid.values().iter().map(|v| v.to_f64()).collect(),
        }
    }

    /// Left end of the support.
    pub fn left(&self) -> i64 {
        self.kind.support(self.p).0
    }

    pub fn abscissa(&self, i: usize) -> f64 {
        self.left() as f64 + i as f64 * crate::real::pow2(-(self.refinement as i32))
    }

    pub fn write_binary<W: Write>(&self, mut out: W) -> Result<()> {
        out.write_all(&GRID_MAGIC)?;
        let header = [
            self.p as u64,
            self.kind.code(),
            self.derivative as u64,
            self.refinement as u64,
            self.values.len() as u64,
        ];
        for h in header {
            out.write_all(&h.to_le_bytes())?;
        }
        for v in &self.values {
            out.write_all(&v.to_le_bytes())?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn read_binary<R: Read>(mut input: R) -> Result<Self> {
        let mut magic = [0u8; 8];
        input
            .read_exact(&mut magic)
            .map_err(|_| Error::Format("truncated grid header".into()))?;
        if magic != GRID_MAGIC {
            return Err(Error::Format("not a DWGRID1 file".into()));
        }
        let mut word = [0u8; 8];
        let mut header = [0u64; 5];
        for h in &mut header {
            input
                .read_exact(&mut word)
                .map_err(|_| Error::Format("truncated grid header".into()))?;
            *h = u64::from_le_bytes(word);
        }
        let [p, kind, n, j, count] = header;
        let kind = FunctionKind::from_code(kind).ok_or_else(|| Error::Format(format!("unknown kind code {kind}")))?;
        let p = u32::try_from(p).map_err(|_| Error::Format(format!("bad order {p}")))?;
        crate::filters::check_order(p)?;
        let j = u32::try_from(j).ok().filter(|&j| j < 40).ok_or_else(|| Error::Format(format!("bad refinement {j}")))?;
        let expected = crate::dyadic::grid_len(p, j).ok_or_else(|| Error::Format("grid too large".into()))?;
        if count != expected as u64 {
            return Err(Error::Format(format!(
                "value count {count} does not match (2p−1)·2^j + 1 = {expected}"
            )));
        }
        let mut values = Vec::with_capacity(expected);
        for _ in 0..expected {
            input
                .read_exact(&mut word)
                .map_err(|_| Error::Format("truncated grid values".into()))?;
            values.push(f64::from_le_bytes(word));
        }
        if input.read(&mut word)? != 0 {
            return Err(Error::Format("trailing bytes after grid values".into()));
        }
        Ok(GridFile {
            p,
            kind,
            derivative: u32::try_from(n).map_err(|_| Error::Format(format!("bad derivative {n}")))?,
            refinement: j,
            values,
        })
    }

    /// `x,value` rows in increasing `x`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        write_csv(out, &["x", "value"], (0..self.values.len()).map(|i| [self.abscissa(i), self.values[i]]))
    }
}

/// Writes a header row and one row per item, each number via [`format_f64`].
pub fn write_csv<W: Write, const N: usize>(
    mut out: W,
    header: &[&str; N],
    rows: impl IntoIterator<Item = [f64; N]>,
) -> Result<()> {
    writeln!(out, "{}", header.join(","))?;
    let mut line = String::new();
    for row in rows {
        line.clear();
        for (i, v) in row.iter().enumerate() {
            if i > 0 {
                line.push(',');
            }
            line.push_str(&format_f64(*v));
        }
        line.push('\n');
        out.write_all(line.as_bytes())?;
    }
    out.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyadic::{build_scaling_grid, GridOptions};
    use crate::real::DoubleF64;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn format_round_trips(bits in any::<u64>()) {
            let x = f64::from_bits(bits);
            prop_assume!(x.is_finite());
            let back: f64 = format_f64(x).parse().unwrap();
            prop_assert_eq!(back.to_bits(), x.to_bits());
        }
    }

    #[test]
    fn format_is_compact() {
        assert_eq!(format_f64(0.5), "0.5");
        assert_eq!(format_f64(1e-300), "1e-300");
        assert_eq!(format_f64(-0.0), "-0");
        assert_eq!(format_f64(3.0), "3");
    }

    fn sample() -> GridFile {
        let g = build_scaling_grid::<DoubleF64>(3, 5, 0, &GridOptions::default()).unwrap();
        GridFile::from_grid(&g)
    }

    #[test]
    fn binary_round_trip_is_bit_exact() {
        let g = sample();
        let mut buf = Vec::new();
        g.write_binary(&mut buf).unwrap();
        assert_eq!(buf.len(), 48 + 8 * g.values.len());
        assert_eq!(&buf[..8], b"DWGRID1\0");
        let back = GridFile::read_binary(buf.as_slice()).unwrap();
        assert_eq!(back, g);
        assert!(back.values.iter().zip(&g.values).all(|(a, b)| a.to_bits() == b.to_bits()));
    }

    #[test]
    fn malformed_binaries_are_rejected() {
        let g = sample();
        let mut buf = Vec::new();
        g.write_binary(&mut buf).unwrap();
        assert!(GridFile::read_binary(&buf[..buf.len() - 1]).is_err());
        let mut extra = buf.clone();
        extra.push(0);
        assert!(GridFile::read_binary(extra.as_slice()).is_err());
        let mut bad = buf.clone();
        bad[0] = b'X';
        assert!(GridFile::read_binary(bad.as_slice()).is_err());
        let mut count = buf;
        count[40] ^= 1;
        assert!(GridFile::read_binary(count.as_slice()).is_err());
    }

    #[test]
    fn csv_has_one_row_per_node() {
        let g = sample();
        let mut buf = Vec::new();
        g.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "x,value");
        assert_eq!(lines.len(), 1 + 5 * 32 + 1);
        assert_eq!(lines[1], "0,0");
        assert!(lines.last().unwrap().starts_with("5,"));
    }
}
