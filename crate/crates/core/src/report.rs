use std::fmt;

/// Outcome of a validation pass. An empty report means the object checked
/// out; otherwise every violation found is listed, in a deterministic order
/// fixed by the validator that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report<V> {
    violations: Vec<V>,
}

impl<V> Report<V> {
    pub(crate) fn new() -> Self {
        Report {
            violations: Vec::new(),
        }
    }

    pub(crate) fn push(&mut self, violation: V) {
        self.violations.push(violation);
    }

    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[V] {
        &self.violations
    }
}

impl<V> Default for Report<V> {
    fn default() -> Self {
        Report::new()
    }
}

impl<V: fmt::Display> Report<V> {
    /// Single-line rendering, used when a report is embedded in an error.
    pub fn summary(&self) -> String {
        if self.is_ok() {
            return "ok".to_string();
        }
        let items: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        let plural = if items.len() == 1 { "" } else { "s" };
        format!("{} violation{}: {}", items.len(), plural, items.join("; "))
    }
}

/// Multi-line rendering: `ok`, or one violation per line.
impl<V: fmt::Display> fmt::Display for Report<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
