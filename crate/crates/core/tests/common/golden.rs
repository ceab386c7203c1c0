//! Golden transcripts for the command-line script in `tests/golden`.

use std::path::PathBuf;

use planar_lie::cli::{run_args, Outcome};

pub fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Argument lists of the script, program name excluded.
pub fn script() -> Vec<Vec<String>> {
    let text = std::fs::read_to_string(dir().join("script.tsv")).expect("script");
    text.lines().filter(|l| !l.trim().is_empty()).map(|l| l.split('\t').map(str::to_string).collect()).collect()
}

pub fn transcript(args: &[String], out: &Outcome) -> String {
    format!("$ {}\nexit {}\n--- stdout\n{}--- stderr\n{}", args.join(" | "), out.code, out.stdout, out.stderr)
}

pub fn run(args: &[String]) -> Outcome {
    run_args(std::iter::once("planar-lie".to_string()).chain(args.iter().cloned()))
}

pub fn path(i: usize) -> PathBuf {
    dir().join(format!("{i:02}.out"))
}

/// Indices whose transcript differs from the stored file. With
/// `UPDATE_GOLDEN` set the files are rewritten instead.
pub fn mismatches() -> Vec<usize> {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut bad = Vec::new();
    for (i, args) in script().iter().enumerate() {
        let got = transcript(args, &run(args));
        if update {
            std::fs::write(path(i), &got).unwrap();
        } else if std::fs::read_to_string(path(i)).ok().as_deref() != Some(got.as_str()) {
            bad.push(i);
        }
    }
    bad
}
