//! On-disk records of completed search shards.
//!
//! A checkpoint directory holds one `run.txt` manifest and one
//! `shard-NNNNN.txt` file per completed shard. Both are line-delimited text
//! with a self-describing header. Shard files are written to a temporary
//! name and renamed into place, so a file under its final name is always
//! complete; anything unparsable is reported as corruption.
//!
//! ```text
//! equicorr-shard 1
//! n 21
//! prefix_bits 6
//! shards 1024
//! shard 17
//! canonical 2048
//! class +-++--+-...  ++--+-+-...
//! end 1
//! ```

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::search::binary::BinarySeq;

pub const FORMAT_VERSION: u32 = 1;
const MANIFEST: &str = "run.txt";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunHeader {
    pub n: usize,
    pub prefix_bits: usize,
    pub shards: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShardRecord {
    pub shard: usize,
    pub canonical: u64,
    /// Members of each nontrivial class found in the shard.
    pub classes: Vec<Vec<BinarySeq>>,
}

fn corrupt(path: &Path, reason: impl Into<String>) -> Error {
    Error::Checkpoint {
        path: path.display().to_string(),
        reason: reason.into(),
    }
}

fn shard_path(dir: &Path, shard: usize) -> PathBuf {
    dir.join(format!("shard-{shard:05}.txt"))
}

fn header_lines(h: &RunHeader) -> String {
    format!(
        "n {}\nprefix_bits {}\nshards {}\n",
        h.n, h.prefix_bits, h.shards
    )
}

fn write_atomic(path: &Path, body: &str) -> Result<()> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, body)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Creates the manifest, or checks that an existing one describes the same
/// run.
pub fn prepare_dir(dir: &Path, header: &RunHeader) -> Result<()> {
    fs::create_dir_all(dir)?;
    let path = dir.join(MANIFEST);
    if path.exists() {
        let found = read_manifest(dir)?;
        if &found != header {
            return Err(corrupt(
                &path,
                format!("manifest describes {found:?}, expected {header:?}"),
            ));
        }
        return Ok(());
    }
    let body = format!("equicorr-run {FORMAT_VERSION}\n{}", header_lines(header));
    write_atomic(&path, &body)
}

struct Lines<'a> {
    path: &'a Path,
    inner: std::str::Lines<'a>,
}

impl<'a> Lines<'a> {
    fn field(&mut self, name: &str) -> Result<&'a str> {
        let line = self
            .inner
            .next()
            .ok_or_else(|| corrupt(self.path, format!("missing `{name}` line")))?;
        line.strip_prefix(name)
            .and_then(|rest| rest.strip_prefix(' '))
            .ok_or_else(|| corrupt(self.path, format!("expected `{name}`, found {line:?}")))
    }

    fn number<T: std::str::FromStr>(&mut self, name: &str) -> Result<T> {
        let v = self.field(name)?;
        v.trim()
            .parse()
            .map_err(|_| corrupt(self.path, format!("bad `{name}` value {v:?}")))
    }

    fn header(&mut self, magic: &str) -> Result<RunHeader> {
        let version: u32 = self.number(magic)?;
        if version != FORMAT_VERSION {
            return Err(corrupt(self.path, format!("unsupported format version {version}")));
        }
        Ok(RunHeader {
            n: self.number("n")?,
            prefix_bits: self.number("prefix_bits")?,
            shards: self.number("shards")?,
        })
    }
}

pub fn read_manifest(dir: &Path) -> Result<RunHeader> {
    let path = dir.join(MANIFEST);
    let text = fs::read_to_string(&path).map_err(|e| corrupt(&path, e.to_string()))?;
    Lines { path: &path, inner: text.lines() }.header("equicorr-run")
}

pub fn write_shard(dir: &Path, header: &RunHeader, record: &ShardRecord) -> Result<()> {
    let mut body = format!("equicorr-shard {FORMAT_VERSION}\n{}", header_lines(header));
    body.push_str(&format!("shard {}\ncanonical {}\n", record.shard, record.canonical));
    for class in &record.classes {
        let members: Vec<String> = class.iter().map(BinarySeq::to_literal).collect();
        body.push_str(&format!("class {}\n", members.join(" ")));
    }
    body.push_str(&format!("end {}\n", record.classes.len()));
    write_atomic(&shard_path(dir, record.shard), &body)
}

fn read_shard(path: &Path, header: &RunHeader) -> Result<ShardRecord> {
    let text = fs::read_to_string(path).map_err(|e| corrupt(path, e.to_string()))?;
    let mut lines = Lines { path, inner: text.lines() };
    let found = lines.header("equicorr-shard")?;
    if &found != header {
        return Err(corrupt(path, format!("header {found:?} does not match run {header:?}")));
    }
    let shard: usize = lines.number("shard")?;
    let canonical: u64 = lines.number("canonical")?;
    let mut classes = Vec::new();
    loop {
        let line = lines
            .inner
            .next()
            .ok_or_else(|| corrupt(path, "missing `end` trailer"))?;
        if let Some(rest) = line.strip_prefix("class ") {
            let members = rest
                .split_whitespace()
                .map(|tok| {
                    let m = BinarySeq::parse(tok).map_err(|e| corrupt(path, e.to_string()))?;
                    if m.len() != header.n {
                        return Err(corrupt(path, format!("member {tok} has wrong length")));
                    }
                    Ok(m)
                })
                .collect::<Result<Vec<_>>>()?;
            if members.len() < 2 {
                return Err(corrupt(path, "class with fewer than two members"));
            }
            classes.push(members);
        } else if let Some(rest) = line.strip_prefix("end ") {
            let count: usize = rest
                .trim()
                .parse()
                .map_err(|_| corrupt(path, format!("bad trailer {line:?}")))?;
            if count != classes.len() {
                return Err(corrupt(path, "trailer count does not match class lines"));
            }
            break;
        } else {
            return Err(corrupt(path, format!("unexpected line {line:?}")));
        }
    }
    Ok(ShardRecord { shard, canonical, classes })
}

/// Loads every completed shard in `dir`, keyed by shard id.
pub fn load_completed(dir: &Path, header: &RunHeader) -> Result<BTreeMap<usize, ShardRecord>> {
    let mut out = BTreeMap::new();
    for entry in fs::read_dir(dir)? {
        let path = entry?.path();
        let Some(name) = path.file_name().and_then(|n| n.to_str()) else { continue };
        let Some(id) = name
            .strip_prefix("shard-")
            .and_then(|rest| rest.strip_suffix(".txt"))
        else {
            continue;
        };
        let id: usize = id.parse().map_err(|_| corrupt(&path, "bad shard file name"))?;
        let record = read_shard(&path, header)?;
        if record.shard != id || id >= header.shards {
            return Err(corrupt(&path, "shard id does not match file name or run"));
        }
        out.insert(id, record);
    }
    Ok(out)
}
