use std::collections::BTreeMap;

use operad_forge_core::Label;

/// Two-way map between vertex names in files and internal labels.
///
/// Labels are handed out from 1 in order of first appearance. A label that
/// was never named prints as its number.
#[derive(Clone, Debug, Default)]
pub struct Names {
    by_name: BTreeMap<String, Label>,
    by_label: BTreeMap<Label, String>,
}

impl Names {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn intern(&mut self, name: &str) -> Label {
        if let Some(&l) = self.by_name.get(name) {
            return l;
        }
        let l = Label(self.by_name.len() as u32 + 1);
        self.by_name.insert(name.to_string(), l);
        self.by_label.insert(l, name.to_string());
        l
    }

    pub fn get(&self, name: &str) -> Option<Label> {
        self.by_name.get(name).copied()
    }

    pub fn name(&self, l: Label) -> String {
        self.by_label
            .get(&l)
            .cloned()
            .unwrap_or_else(|| l.0.to_string())
    }

    /// A new label whose name is `base` with primes appended until unused.
    pub fn fresh(&mut self, base: &str) -> Label {
        let mut name = format!("{base}'");
        while self.by_name.contains_key(&name) {
            name.push('\'');
        }
        self.intern(&name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interning_is_stable() {
        let mut n = Names::new();
        let a = n.intern("a");
        let b = n.intern("b");
        assert_eq!(n.intern("a"), a);
        assert_ne!(a, b);
        assert_eq!(n.name(b), "b");
        assert_eq!(n.name(Label(40)), "40");
    }

    #[test]
    fn fresh_names_avoid_collisions() {
        let mut n = Names::new();
        n.intern("a");
        n.intern("a'");
        let f = n.fresh("a");
        assert_eq!(n.name(f), "a''");
    }
}
