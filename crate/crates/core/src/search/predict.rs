use crate::graph::{Pattern, TargetSpec};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PredictionMode {
    /// Proven closed forms only.
    #[default]
    Proven,
    /// Also `R(Pn,Pn,Pn) = 2n-1` (n odd) / `2n-2` (n even), which is conjectural for small n.
    Conjectured,
}

/// Closed-form Ramsey number for the resolved families, if `spec` is one of them.
///
/// Colors may appear in any order; the value is invariant under relabeling.
pub fn predicted_value(spec: &TargetSpec) -> Option<usize> {
    predicted_value_with(spec, PredictionMode::Proven)
}

pub fn predicted_value_with(spec: &TargetSpec, mode: PredictionMode) -> Option<usize> {
    let mut paths = Vec::new();
    let mut matchings = Vec::new();
    for p in spec.patterns() {
        match *p {
            Pattern::Path(k) => paths.push(k),
            Pattern::Matching(q) => matchings.push(q),
        }
    }
    paths.sort_unstable();
    matchings.sort_unstable();
    match (spec.k(), paths.as_slice(), matchings.as_slice()) {
        // R(Pn, Pm) = m + floor(n/2) - 1 for m >= n >= 2.
        (2, &[n, m], []) if n >= 2 => Some(m + n / 2 - 1),
        // R(P3,P3,P3) = R(P3,P3,P4) = 5.
        (3, &[3, 3, 3], []) | (3, &[3, 3, 4], []) => Some(5),
        // R(P3, Pn, Pm) = m + floor(n/2) - 1 for m >= n >= 3.
        (3, &[3, n, m], []) => Some(m + n / 2 - 1),
        // R(P3, nK2, mK2) = 2m + n - 1 for m >= n >= 3.
        (3, &[3], &[n, m]) if n >= 3 => Some(2 * m + n - 1),
        (3, &[a, b, c], [])
            if mode == PredictionMode::Conjectured && a == b && b == c && a >= 2 =>
        {
            Some(if a % 2 == 1 { 2 * a - 1 } else { 2 * a - 2 })
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn predict(s: &str) -> Option<usize> {
        predicted_value(&TargetSpec::parse(s).unwrap())
    }

    #[test]
    fn closed_forms() {
        assert_eq!(predict("P3 P9 P12"), Some(15));
        assert_eq!(predict("P3 P3 P4"), Some(5));
        assert_eq!(predict("P3 P3 P3"), Some(5));
        assert_eq!(predict("P3 P3 P5"), Some(5));
        assert_eq!(predict("P3 P6 P6"), Some(8));
        assert_eq!(predict("P3 P8 P8"), Some(11));
        assert_eq!(predict("P3 4K2 6K2"), Some(15));
        assert_eq!(predict("P3 3K2 3K2"), Some(8));
        assert_eq!(predict("P6 P6"), Some(8));
        assert_eq!(predict("P2 P2"), Some(2));
    }

    #[test]
    fn color_order_does_not_matter() {
        assert_eq!(predict("P7 P3 P6"), Some(9));
        assert_eq!(predict("4K2 P3 3K2"), Some(10));
        assert_eq!(predict("P6 P4"), Some(7));
    }

    #[test]
    fn unresolved_families() {
        assert_eq!(predict("P4 P4 P4"), None);
        assert_eq!(predict("P3 P2 P5"), None);
        assert_eq!(predict("P3 2K2 3K2"), None);
        assert_eq!(predict("P4 3K2 3K2"), None);
        assert_eq!(predict("P5"), None);
        assert_eq!(predict("P3 P4 P5 P6"), None);
    }

    #[test]
    fn conjectured_mode() {
        let spec = TargetSpec::parse("P5 P5 P5").unwrap();
        assert_eq!(
            predicted_value_with(&spec, PredictionMode::Conjectured),
            Some(9)
        );
        let spec = TargetSpec::parse("P4 P4 P4").unwrap();
        assert_eq!(
            predicted_value_with(&spec, PredictionMode::Conjectured),
            Some(6)
        );
        // Proven families win over the conjecture.
        let spec = TargetSpec::parse("P3 P3 P3").unwrap();
        assert_eq!(
            predicted_value_with(&spec, PredictionMode::Conjectured),
            Some(5)
        );
    }
}
