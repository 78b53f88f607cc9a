use std::io::{BufRead, BufReader, Write};
use std::net::TcpListener;
use std::thread;

use map_core::oeis::*;
use num_bigint::BigInt;

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn offline_client(dir: &std::path::Path) -> OeisClient {
    OeisClient { base_url: "http://127.0.0.1:9".into(), cache_dir: dir.to_path_buf(), offline: true }
}

#[test]
fn embedded_examples() {
    let dir = tempfile::tempdir().unwrap();
    let c = offline_client(dir.path());
    let m = c.load_reference("A001006").unwrap();
    assert_eq!(m.terms[..10], big(&[1, 1, 2, 4, 9, 21, 51, 127, 323, 835])[..]);
    assert_eq!(m.source, Source::Embedded);
    let a = c.load_reference("A114465").unwrap();
    assert_eq!(a.terms[..12], big(&[1, 1, 2, 5, 13, 36, 105, 317, 982, 3105, 9981, 32520])[..]);
    // printed prefix 1,1,3,9,... sits one place into the derived list
    let b = c.load_reference("A101499").unwrap();
    assert_eq!(b.terms[1..11], big(&[1, 1, 3, 9, 25, 73, 223, 697, 2217, 7161])[..]);
    for s in embedded() {
        assert!(valid_id(&s.id));
        assert!(s.id == "A187256" || s.terms.len() >= 24, "{} has {} terms", s.id, s.terms.len());
    }
}

#[test]
fn offline_and_bad_ids() {
    let dir = tempfile::tempdir().unwrap();
    let c = offline_client(dir.path());
    assert!(matches!(c.load_reference("A000045"), Err(OeisError::NetworkDisabled(_))));
    assert!(matches!(c.load_reference("B000045"), Err(OeisError::BadId(_))));
    assert!(matches!(c.load_reference("A12"), Err(OeisError::BadId(_))));
}

#[test]
fn bfile_parsing() {
    assert_eq!(parse_bfile("0 1\n1 1\n2 2\n").unwrap(), (0, big(&[1, 1, 2])));
    assert_eq!(parse_bfile("# comment\n3 5\n4 8\n").unwrap(), (3, big(&[5, 8])));
    assert!(matches!(parse_bfile("0 1\nx y\n"), Err(OeisError::ParseError(2))));
    assert!(matches!(parse_bfile("0 1 2\n"), Err(OeisError::ParseError(1))));
    assert!(matches!(parse_embedded("A000001 1 2"), Err(OeisError::ParseError(1))));
}

#[test]
fn shift_matching() {
    let motz = big(&[1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798]);
    let col0 = big(&[1, 1, 1, 2, 4, 9, 21, 51, 127, 323]);
    assert_eq!(match_shift(&col0, &motz, 3), Ok(-1));
    assert_eq!(match_shift(&motz[1..], &motz, 3), Ok(1));
    assert_eq!(match_shift(&motz, &motz, 3), Ok(0));
    assert_eq!(match_shift(&big(&[1, 2, 4, 10, 28]), &motz, 3), Err(MatchError::OverlapTooShort));
    let ones = vec![BigInt::from(1); 20];
    assert!(matches!(match_shift(&ones, &ones, 2), Err(MatchError::Ambiguous(_))));
    assert_eq!(match_shift(&big(&[7; 10]), &motz, 3), Err(MatchError::NoMatch(3)));
}

/// Serves `body` with `status` to each of `hits` connections.
fn serve(status: u16, body: &'static str, hits: usize) -> String {
    let l = TcpListener::bind("127.0.0.1:0").unwrap();
    let addr = l.local_addr().unwrap();
    thread::spawn(move || {
        for stream in l.incoming().take(hits) {
            let mut s = stream.unwrap();
            let mut r = BufReader::new(s.try_clone().unwrap());
            let mut line = String::new();
            while r.read_line(&mut line).unwrap() > 0 && line != "\r\n" {
                line.clear();
            }
            let reason = if status == 200 { "OK" } else { "Not Found" };
            write!(s, "HTTP/1.1 {status} {reason}\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{body}", body.len()).unwrap();
        }
    });
    format!("http://{addr}")
}

#[test]
fn fetch_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let base = serve(200, "# test\n0 1\n1 1\n2 2\n3 3\n4 5\n", 1);
    let c = OeisClient { base_url: base, cache_dir: dir.path().join("cache"), offline: false };
    let fetched = c.fetch_bfile("A000045").unwrap();
    assert_eq!(fetched.terms, big(&[1, 1, 2, 3, 5]));
    assert_eq!(fetched.source, Source::Fetched);
    assert!(fetched.fetched_at.is_some());
    let offline = OeisClient { offline: true, ..c.clone() };
    let cached = offline.load_reference("A000045").unwrap();
    assert_eq!(cached.terms, fetched.terms);
    assert_eq!(cached.offset, Some(0));
    assert!(dir.path().join("cache/b000045.txt").exists());
}

#[test]
fn fetch_errors() {
    let dir = tempfile::tempdir().unwrap();
    let c = OeisClient { base_url: serve(404, "", 1), cache_dir: dir.path().to_path_buf(), offline: false };
    assert!(matches!(c.fetch_bfile("A000045"), Err(OeisError::UnknownSequence(_))));
    let c = OeisClient { base_url: serve(200, "0 1\nbad\n", 1), cache_dir: dir.path().to_path_buf(), offline: false };
    assert!(matches!(c.fetch_bfile("A000045"), Err(OeisError::ParseError(2))));
    assert!(!dir.path().join("b000045.txt").exists());
}
