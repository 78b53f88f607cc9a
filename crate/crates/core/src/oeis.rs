//! Reference sequences: embedded term lists, an optional b-file fetcher with
//! an on-disk cache, and shift matching of computed sequences.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

const EMBEDDED: &str = include_str!("../data/oeis.txt");

pub const DEFAULT_BASE_URL: &str = "https://oeis.org";
pub const DEFAULT_MAX_SHIFT: i64 = 3;
pub const MIN_OVERLAP: usize = 8;
const TIMEOUT: Duration = Duration::from_secs(10);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Embedded,
    Fetched,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceRef {
    pub id: String,
    pub terms: Vec<BigInt>,
    pub source: Source,
    /// Seconds since the epoch, for fetched data.
    pub fetched_at: Option<u64>,
    /// First index of a b-file.
    pub offset: Option<i64>,
}

#[derive(Debug, Error)]
pub enum OeisError {
    #[error("malformed sequence id '{0}' (expected A followed by six digits)")]
    BadId(String),
    #[error("unknown sequence {0}")]
    UnknownSequence(String),
    #[error("{0} is not embedded and network access is disabled")]
    NetworkDisabled(String),
    #[error("fetch failed: {0}")]
    FetchFailed(String),
    #[error("parse error at line {0}")]
    ParseError(usize),
    #[error("cache i/o: {0}")]
    Io(#[from] std::io::Error),
}

pub fn valid_id(id: &str) -> bool {
    id.len() == 7 && id.starts_with('A') && id[1..].bytes().all(|b| b.is_ascii_digit())
}

fn check_id(id: &str) -> Result<(), OeisError> {
    if valid_id(id) {
        Ok(())
    } else {
        Err(OeisError::BadId(id.to_string()))
    }
}

/// Parses the embedded resource format: `Axxxxxx: v0 v1 ...`, `#` comments.
pub fn parse_embedded(text: &str) -> Result<Vec<SequenceRef>, OeisError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (id, rest) = line.split_once(':').ok_or(OeisError::ParseError(i + 1))?;
        let id = id.trim();
        if !valid_id(id) {
            return Err(OeisError::ParseError(i + 1));
        }
        let terms = rest
            .split_whitespace()
            .map(|t| t.parse::<BigInt>().map_err(|_| OeisError::ParseError(i + 1)))
            .collect::<Result<Vec<_>, _>>()?;
        if terms.is_empty() {
            return Err(OeisError::ParseError(i + 1));
        }
        out.push(SequenceRef { id: id.to_string(), terms, source: Source::Embedded, fetched_at: None, offset: None });
    }
    Ok(out)
}

pub fn embedded() -> Vec<SequenceRef> {
    parse_embedded(EMBEDDED).expect("embedded resource is well formed")
}

pub fn embedded_reference(id: &str) -> Option<SequenceRef> {
    embedded().into_iter().find(|s| s.id == id)
}

/// Parses b-file text (`index value` lines, `#` comments). Returns the first
/// index and the terms.
pub fn parse_bfile(text: &str) -> Result<(i64, Vec<BigInt>), OeisError> {
    let mut offset = None;
    let mut terms = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(idx), Some(val), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(OeisError::ParseError(i + 1));
        };
        let idx: i64 = idx.parse().map_err(|_| OeisError::ParseError(i + 1))?;
        let val: BigInt = val.parse().map_err(|_| OeisError::ParseError(i + 1))?;
        offset.get_or_insert(idx);
        terms.push(val);
    }
    let offset = offset.ok_or(OeisError::ParseError(0))?;
    Ok((offset, terms))
}

fn now() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs())
}

#[derive(Debug, Clone)]
pub struct OeisClient {
    pub base_url: String,
    pub cache_dir: PathBuf,
    pub offline: bool,
}

impl OeisClient {
    /// Honours `OEIS_CACHE_DIR` and `MAP_OFFLINE=1`.
    pub fn from_env() -> Self {
        let cache_dir = std::env::var_os("OEIS_CACHE_DIR")
            .map(PathBuf::from)
            .unwrap_or_else(|| std::env::temp_dir().join("map-oeis-cache"));
        let offline = std::env::var("MAP_OFFLINE").is_ok_and(|v| v == "1");
        OeisClient { base_url: DEFAULT_BASE_URL.to_string(), cache_dir, offline }
    }

    pub fn bfile_url(&self, id: &str) -> String {
        format!("{}/{}/b{}.txt", self.base_url.trim_end_matches('/'), id, &id[1..])
    }

    fn cache_path(&self, id: &str) -> PathBuf {
        self.cache_dir.join(format!("b{}.txt", &id[1..]))
    }

    /// Embedded data first, then the cache, then the network.
    pub fn load_reference(&self, id: &str) -> Result<SequenceRef, OeisError> {
        check_id(id)?;
        if let Some(s) = embedded_reference(id) {
            return Ok(s);
        }
        if let Some(s) = self.load_cached(id)? {
            return Ok(s);
        }
        if self.offline {
            return Err(OeisError::NetworkDisabled(id.to_string()));
        }
        self.fetch_bfile(id)
    }

    pub fn load_cached(&self, id: &str) -> Result<Option<SequenceRef>, OeisError> {
        check_id(id)?;
        let path = self.cache_path(id);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let (offset, terms) = parse_bfile(&text)?;
        let fetched_at = fs::metadata(&path)?.modified().ok().and_then(|m| m.duration_since(UNIX_EPOCH).ok()).map(|d| d.as_secs());
        Ok(Some(SequenceRef { id: id.to_string(), terms, source: Source::Fetched, fetched_at, offset: Some(offset) }))
    }

    /// Downloads the b-file and writes it to the cache atomically.
    pub fn fetch_bfile(&self, id: &str) -> Result<SequenceRef, OeisError> {
        check_id(id)?;
        if self.offline {
            return Err(OeisError::NetworkDisabled(id.to_string()));
        }
        let agent: ureq::Agent = ureq::Agent::config_builder().timeout_global(Some(TIMEOUT)).build().into();
        let text = match agent.get(&self.bfile_url(id)).call() {
            Ok(mut resp) => resp.body_mut().read_to_string().map_err(|e| OeisError::FetchFailed(e.to_string()))?,
            Err(ureq::Error::StatusCode(404)) => return Err(OeisError::UnknownSequence(id.to_string())),
            Err(ureq::Error::StatusCode(code)) => return Err(OeisError::FetchFailed(format!("status {code}"))),
            Err(e) => return Err(OeisError::FetchFailed(e.to_string())),
        };
        let (offset, terms) = parse_bfile(&text)?;
        fs::create_dir_all(&self.cache_dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.cache_dir)?;
        tmp.write_all(text.as_bytes())?;
        tmp.persist(self.cache_path(id)).map_err(|e| OeisError::Io(e.error))?;
        Ok(SequenceRef { id: id.to_string(), terms, source: Source::Fetched, fetched_at: Some(now()), offset: Some(offset) })
    }
}

/// `load_reference` with the environment-configured client.
pub fn load_reference(id: &str) -> Result<SequenceRef, OeisError> {
    OeisClient::from_env().load_reference(id)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchError {
    #[error("no shift within +-{0} matches")]
    NoMatch(i64),
    #[error("shifts {0:?} all match")]
    Ambiguous(Vec<i64>),
    #[error("overlap shorter than {MIN_OVERLAP} terms for every shift")]
    OverlapTooShort,
}

/// The unique `s` with `|s| <= max_shift` and `computed[i] = reference[i + s]`
/// over the whole overlap, which must hold at least `MIN_OVERLAP` terms.
pub fn match_shift(computed: &[BigInt], reference: &[BigInt], max_shift: i64) -> Result<i64, MatchError> {
    let mut hits = Vec::new();
    let mut any_long = false;
    for s in -max_shift..=max_shift {
        let pairs: Vec<_> = (0..computed.len() as i64)
            .filter(|&i| (0..reference.len() as i64).contains(&(i + s)))
            .map(|i| (&computed[i as usize], &reference[(i + s) as usize]))
            .collect();
        if pairs.len() < MIN_OVERLAP {
            continue;
        }
        any_long = true;
        if pairs.iter().all(|(a, b)| a == b) {
            hits.push(s);
        }
    }
    match hits.len() {
        1 => Ok(hits[0]),
        0 if !any_long => Err(MatchError::OverlapTooShort),
        0 => Err(MatchError::NoMatch(max_shift)),
        _ => Err(MatchError::Ambiguous(hits)),
    }
}
