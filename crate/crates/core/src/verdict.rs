use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::Elem;

/// A failed instance of a named axiom or identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub axiom: &'static str,
    pub tuple: Vec<Elem>,
}

/// Outcome of a pointwise check. `holds` is true exactly when there are no witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub name: String,
    pub holds: bool,
    pub witnesses: Vec<Witness>,
}

impl Verdict {
    pub fn new(name: impl Into<String>) -> Self {
        Verdict {
            name: name.into(),
            holds: true,
            witnesses: Vec::new(),
        }
    }

    pub fn fail(&mut self, axiom: &'static str, tuple: &[Elem]) {
        self.holds = false;
        self.witnesses.push(Witness {
            axiom,
            tuple: tuple.to_vec(),
        });
    }

    /// Records a failure for each tuple where `ok` is false.
    pub fn check_all<I>(
        &mut self,
        axiom: &'static str,
        tuples: I,
        mut ok: impl FnMut(&[Elem]) -> bool,
    ) where
        I: IntoIterator,
        I::Item: AsRef<[Elem]>,
    {
        for t in tuples {
            let t = t.as_ref();
            if !ok(t) {
                self.fail(axiom, t);
            }
        }
    }

    pub fn failed_axioms(&self) -> Vec<&'static str> {
        let mut out: Vec<&'static str> = Vec::new();
        for w in &self.witnesses {
            if !out.contains(&w.axiom) {
                out.push(w.axiom);
            }
        }
        out
    }

    pub fn fails(&self, axiom: &str) -> bool {
        self.witnesses.iter().any(|w| w.axiom == axiom)
    }

    pub fn first_witness(&self, axiom: &str) -> Option<&[Elem]> {
        self.witnesses
            .iter()
            .find(|w| w.axiom == axiom)
            .map(|w| w.tuple.as_slice())
    }

    pub fn absorb(&mut self, other: Verdict) {
        if !other.holds {
            self.holds = false;
        }
        self.witnesses.extend(other.witnesses);
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.holds { "holds" } else { "fails" };
        writeln!(f, "{}: {}", self.name, status)?;
        for w in &self.witnesses {
            writeln!(f, "  {} at {:?}", w.axiom, w.tuple)?;
        }
        Ok(())
    }
}
