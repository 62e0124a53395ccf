//! Random byte and token mutations of valid files must never crash the tool.

use std::panic;

use engelkit::ScalarRing;
use engelkit_cli::{catalog_presentation, format::parse, run};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOKENS: &[&str] = &[
    "0", "-1", "1/0", "99999999999999999999999", "\"", "[", "]", "{", "}", ",", ":", "null", "true", "\"GF(4)\"",
    "\"x\"", "65", "3", "-7/3",
];

fn mutate(text: &str, rng: &mut ChaCha8Rng) -> String {
    let mut bytes = text.as_bytes().to_vec();
    for _ in 0..rng.gen_range(1..4) {
        let at = rng.gen_range(0..bytes.len());
        match rng.gen_range(0..4) {
            0 => {
                bytes.remove(at);
            }
            1 => bytes[at] = rng.gen_range(b' '..=b'~'),
            2 => {
                let token = TOKENS[rng.gen_range(0..TOKENS.len())];
                bytes.splice(at..at, token.bytes());
            }
            _ => {
                // replace a digit run, which mostly keeps the file well-formed
                if let Some(pos) = bytes[at..].iter().position(u8::is_ascii_digit) {
                    bytes[at + pos] = rng.gen_range(b'0'..=b'9');
                }
            }
        }
    }
    String::from_utf8_lossy(&bytes).into_owned()
}

#[test]
fn mutated_files_yield_diagnostics_not_panics() {
    let sources = [
        catalog_presentation("sl2", ScalarRing::RATIONALS, None, true).unwrap().emit(),
        catalog_presentation("heisenberg", ScalarRing::INTEGERS, None, false).unwrap().emit(),
        catalog_presentation("strictly_upper_triangular", ScalarRing::prime_field(3).unwrap(), Some(3), true)
            .unwrap()
            .emit(),
    ];
    let dir = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("fuzz");
    std::fs::create_dir_all(&dir).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut rejected = 0;
    for round in 0..400 {
        let text = mutate(&sources[round % sources.len()], &mut rng);
        let parsed = panic::catch_unwind(|| parse(&text, None).map(|p| p.build().map(|_| ())));
        assert!(parsed.is_ok(), "parser panicked on:\n{text}");
        let path = dir.join(format!("case{round}.json"));
        std::fs::write(&path, &text).unwrap();
        let outcome = panic::catch_unwind(|| run(["engelkit", "validate", path.to_str().unwrap()]));
        let outcome = outcome.unwrap_or_else(|_| panic!("validate panicked on:\n{text}"));
        match outcome.code {
            0 => {}
            1 | 2 => {
                rejected += 1;
                assert!(!outcome.stderr.is_empty() || outcome.stdout.contains("\"passed\": false"));
            }
            other => panic!("unexpected status {other} for:\n{text}"),
        }
        if let Err(e) = parse(&text, None) {
            let message = e.to_string();
            assert!(message.contains("line") || message.contains("$"), "unlocated diagnostic: {message}");
        }
    }
    assert!(rejected > 100, "only {rejected} mutations were rejected");
}
