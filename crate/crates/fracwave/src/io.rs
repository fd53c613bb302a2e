//! Field files: CSV (`t,x1[,x2],value`) and the binary FWF1 layout
//! (magic, u32 rank, u32 dims[rank], f64 steps[rank], f64 t0, f64 payload, all
//! little-endian, row-major).

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;

use fracwave_core::Complex64;

use crate::error::{Error, Result};
use crate::geometry::ModeSeries;
use crate::grid::{ScalarField, SpacetimeGrid};

const MAGIC: &[u8; 4] = b"FWF1";

pub fn write_fwf<W: Write>(field: &ScalarField, mut w: W) -> Result<()> {
    let g = &field.grid;
    let dims = g.dims();
    w.write_all(MAGIC)?;
    w.write_all(&(dims.len() as u32).to_le_bytes())?;
    for d in &dims {
        w.write_all(&(*d as u32).to_le_bytes())?;
    }
    for h in g.steps() {
        w.write_all(&h.to_le_bytes())?;
    }
    w.write_all(&g.t0.to_le_bytes())?;
    for v in &field.values {
        w.write_all(&v.to_le_bytes())?;
    }
    Ok(())
}

fn read_u32<R: Read>(r: &mut R) -> Result<u32> {
    let mut b = [0u8; 4];
    r.read_exact(&mut b)
        .map_err(|_| Error::Format("truncated header".into()))?;
    Ok(u32::from_le_bytes(b))
}

fn read_f64<R: Read>(r: &mut R) -> Result<f64> {
    let mut b = [0u8; 8];
    r.read_exact(&mut b)
        .map_err(|_| Error::Format("truncated file".into()))?;
    Ok(f64::from_le_bytes(b))
}

/// Reads an FWF1 stream. Spatial origins are not stored and come back as zero.
pub fn read_fwf<R: Read>(mut r: R) -> Result<ScalarField> {
    let mut magic = [0u8; 4];
    r.read_exact(&mut magic)
        .map_err(|_| Error::Format("missing magic".into()))?;
    if &magic != MAGIC {
        return Err(Error::Format("bad magic".into()));
    }
    let rank = read_u32(&mut r)? as usize;
    if !(2..=3).contains(&rank) {
        return Err(Error::Format(format!("rank {rank} not supported")));
    }
    let dims = (0..rank)
        .map(|_| read_u32(&mut r).map(|d| d as usize))
        .collect::<Result<Vec<_>>>()?;
    let steps = (0..rank).map(|_| read_f64(&mut r)).collect::<Result<Vec<_>>>()?;
    let t0 = read_f64(&mut r)?;
    let grid = SpacetimeGrid::new(
        dims[0],
        dims[1..].to_vec(),
        steps[0],
        steps[1..].to_vec(),
        t0,
        vec![0.0; rank - 1],
    )?;
    let values = (0..grid.len()).map(|_| read_f64(&mut r)).collect::<Result<Vec<_>>>()?;
    let mut rest = [0u8; 1];
    if r.read(&mut rest)? != 0 {
        return Err(Error::Format("trailing bytes after payload".into()));
    }
    ScalarField::new(grid, values)
}

pub fn write_csv<W: Write>(field: &ScalarField, w: W) -> Result<()> {
    let mut wr = csv::Writer::from_writer(w);
    let rank = field.grid.nx.len();
    let mut header = vec!["t".to_string()];
    header.extend((1..=rank).map(|a| format!("x{a}")));
    header.push("value".into());
    wr.write_record(&header)?;
    for (i, v) in field.values.iter().enumerate() {
        let mut rec: Vec<String> = field.grid.coords(i).iter().map(|c| format!("{c:?}")).collect();
        rec.push(format!("{v:?}"));
        wr.write_record(&rec)?;
    }
    wr.flush()?;
    Ok(())
}

/// Sorted distinct coordinates must be uniformly spaced.
fn axis_from(mut c: Vec<f64>) -> Result<(usize, f64, f64)> {
    c.sort_by(f64::total_cmp);
    c.dedup();
    if c.len() < 2 {
        return Err(Error::Format("axis with fewer than two coordinates".into()));
    }
    let h = (c[c.len() - 1] - c[0]) / (c.len() - 1) as f64;
    for (k, v) in c.iter().enumerate() {
        if (v - (c[0] + k as f64 * h)).abs() > 1e-9 * h.max(1.0) {
            return Err(Error::Format("coordinates are not uniformly spaced".into()));
        }
    }
    Ok((c.len(), h, c[0]))
}

pub fn read_csv<R: Read>(r: R) -> Result<ScalarField> {
    let mut rd = csv::Reader::from_reader(r);
    let header = rd.headers()?.clone();
    let cols: Vec<&str> = header.iter().collect();
    let rank = match cols.as_slice() {
        ["t", "x1", "value"] => 1,
        ["t", "x1", "x2", "value"] => 2,
        _ => return Err(Error::Format(format!("unexpected header {cols:?}"))),
    };
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for rec in rd.records() {
        let rec = rec?;
        let row = rec
            .iter()
            .map(|s| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::Format(format!("not a number: {s}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != rank + 2 {
            return Err(Error::Format("wrong column count".into()));
        }
        rows.push(row);
    }
    let axes = (0..=rank)
        .map(|a| axis_from(rows.iter().map(|r| r[a]).collect()))
        .collect::<Result<Vec<_>>>()?;
    let grid = SpacetimeGrid::new(
        axes[0].0,
        axes[1..].iter().map(|a| a.0).collect(),
        axes[0].1,
        axes[1..].iter().map(|a| a.1).collect(),
        axes[0].2,
        axes[1..].iter().map(|a| a.2).collect(),
    )?;
    if rows.len() != grid.len() {
        return Err(Error::Format(format!(
            "{} rows for {} grid points",
            rows.len(),
            grid.len()
        )));
    }
    let dims = grid.dims();
    let mut values = vec![f64::NAN; grid.len()];
    for row in &rows {
        let mut flat = 0;
        for a in 0..=rank {
            let i = ((row[a] - axes[a].2) / axes[a].1).round() as usize;
            flat = flat * dims[a] + i;
        }
        values[flat] = row[rank + 1];
    }
    if values.iter().any(|v| v.is_nan()) {
        return Err(Error::Format("duplicate grid points".into()));
    }
    ScalarField::new(grid, values)
}

/// Reads a field, choosing the format by extension (`.csv`, otherwise FWF1).
pub fn read_field(path: &Path) -> Result<ScalarField> {
    let f = BufReader::new(File::open(path)?);
    if is_csv(path) {
        read_csv(f)
    } else {
        read_fwf(f)
    }
}

pub fn write_field(field: &ScalarField, path: &Path) -> Result<()> {
    let mut f = BufWriter::new(File::create(path)?);
    if is_csv(path) {
        write_csv(field, &mut f)?;
    } else {
        write_fwf(field, &mut f)?;
    }
    f.flush()?;
    Ok(())
}

fn is_csv(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"))
}

/// Mode series CSV: `mode,lambda,t,re,im`, one row per (mode, time sample).
/// Returns the series and the time step.
pub fn read_modes<R: Read>(r: R) -> Result<(Vec<ModeSeries>, f64)> {
    let mut rd = csv::Reader::from_reader(r);
    let header: Vec<String> = rd.headers()?.iter().map(str::to_string).collect();
    if header != ["mode", "lambda", "t", "re", "im"] {
        return Err(Error::Format(format!("unexpected header {header:?}")));
    }
    let mut out: Vec<ModeSeries> = Vec::new();
    let mut times: Vec<f64> = Vec::new();
    for rec in rd.records() {
        let rec = rec?;
        let num = |i: usize| -> Result<f64> {
            rec.get(i)
                .unwrap_or("")
                .trim()
                .parse()
                .map_err(|_| Error::Format("not a number".into()))
        };
        let mode = rec
            .get(0)
            .unwrap_or("")
            .trim()
            .parse::<i64>()
            .map_err(|_| Error::Format("bad mode".into()))?;
        let (lambda, t, re, im) = (num(1)?, num(2)?, num(3)?, num(4)?);
        match out.last_mut() {
            Some(m) if m.mode == mode => m.values.push(Complex64::new(re, im)),
            _ => out.push(ModeSeries {
                mode,
                lambda,
                values: vec![Complex64::new(re, im)],
            }),
        }
        if out.len() == 1 {
            times.push(t);
        }
    }
    if out.is_empty() {
        return Err(Error::Format("no modes".into()));
    }
    let nt = out[0].values.len();
    if out.iter().any(|m| m.values.len() != nt) {
        return Err(Error::Format("mode series differ in length".into()));
    }
    let (_, dt, _) = axis_from(times)?;
    Ok((out, dt))
}

pub fn write_modes<W: Write>(modes: &[ModeSeries], dt: f64, t0: f64, w: W) -> Result<()> {
    let mut wr = csv::Writer::from_writer(w);
    wr.write_record(["mode", "lambda", "t", "re", "im"])?;
    for m in modes {
        for (i, v) in m.values.iter().enumerate() {
            let t = t0 + i as f64 * dt;
            wr.write_record(&[
                m.mode.to_string(),
                format!("{:?}", m.lambda),
                format!("{t:?}"),
                format!("{:?}", v.re),
                format!("{:?}", v.im),
            ])?;
        }
    }
    wr.flush()?;
    Ok(())
}
