//! Validation corpus shipped with the crate.

use super::sysfile::SystemFile;

/// One corpus system with the facts known about it by hand.
#[derive(Clone, Copy, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub source: &'static str,
    /// Distinct real roots; `None` for systems that are not zero-dimensional.
    pub real_roots: Option<usize>,
    /// Distinct real roots with no zero coordinate.
    pub torus_roots: Option<usize>,
}

impl CorpusEntry {
    pub fn system(&self) -> SystemFile {
        SystemFile::parse(self.source).expect("corpus files parse")
    }

    pub fn nvars(&self) -> usize {
        self.system().nvars()
    }
}

macro_rules! entry {
    ($name:literal, $real:expr, $torus:expr) => {
        CorpusEntry {
            name: $name,
            source: include_str!(concat!("../../corpus/", $name, ".sys")),
            real_roots: $real,
            torus_roots: $torus,
        }
    };
}

pub const CORPUS: &[CorpusEntry] = &[
    entry!("unit_point", Some(1), Some(1)),
    entry!("circle_line", Some(2), Some(2)),
    entry!("no_real", Some(0), Some(0)),
    entry!("scaled_linear", Some(1), Some(1)),
    entry!("canny_2_2_5", Some(2), Some(1)),
    entry!("canny_2_2_10", Some(2), Some(1)),
    entry!("two_circles", Some(2), Some(2)),
    entry!("cubic_pair", Some(3), Some(2)),
    entry!("four_points", Some(4), Some(4)),
    entry!("tangent_ellipse", Some(2), Some(2)),
    entry!("eigen_1x1", Some(2), Some(2)),
    entry!("eigen_2x2", Some(4), Some(4)),
    entry!("posgrad_d2", None, None),
    entry!("univariate", Some(3), Some(3)),
];

pub fn corpus_entry(name: &str) -> Option<&'static CorpusEntry> {
    CORPUS.iter().find(|e| e.name == name)
}

/// Zero-dimensional square bivariate systems, the ones the oracle and the
/// isolator accept.
pub fn bivariate_corpus() -> impl Iterator<Item = &'static CorpusEntry> {
    CORPUS.iter().filter(|e| e.real_roots.is_some() && e.nvars() == 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_file_parses_and_round_trips() {
        for e in CORPUS {
            let s = e.system();
            assert_eq!(s.name.as_deref(), Some(e.name));
            assert_eq!(SystemFile::parse(&s.serialize()).unwrap(), s);
        }
        assert_eq!(bivariate_corpus().count(), 11);
    }
}
