//! The named fixture algebras shipped under `fixtures/`.

use std::path::Path;

use anyhow::{Context, Result};
use twistlab_core::{fixtures, twist, Algebra, Elem, Subset};

use crate::io;

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub note: String,
    pub algebra: Algebra,
}

/// File-name friendly form of an element name.
pub fn slug(name: &str) -> String {
    match name {
        "⊥" => "bot".into(),
        "⊤" => "top".into(),
        _ => name.to_lowercase(),
    }
}

/// Short file names of the base algebras, in corpus order.
pub fn bases() -> Vec<(&'static str, Algebra)> {
    vec![
        ("l2", fixtures::two()),
        ("l3", fixtures::lukasiewicz3()),
        ("g3", fixtures::goedel3()),
        ("s3", fixtures::sugihara3()),
    ]
}

/// `Tw(Ł₃, 0)` without `(a, a)`: a chain closed under every operation.
pub fn figure4_chain() -> Result<Algebra> {
    let tw = twist::twist(&fixtures::lukasiewicz3(), 0)?;
    let mut sub = Subset::full(tw.size());
    sub.remove(tw.index_of(1, 1).expect("(a,a) lies in Tw(Ł₃,0)"));
    Ok(tw.algebra.restrict(&sub)?.algebra)
}

/// `Tw(G₃, 0)` without `(0, 0)`, with its embedding.
pub fn goedel_subalgebra() -> Result<(Algebra, Vec<Elem>)> {
    let tw = twist::twist(&fixtures::goedel3(), 0)?;
    let mut sub = Subset::full(tw.size());
    sub.remove(tw.index_of(0, 0).expect("(0,0) lies in Tw(G₃,0)"));
    let e = tw.algebra.restrict(&sub)?;
    Ok((e.algebra, e.embedding))
}

/// Every base algebra, its full twist, every `Tw(L, ι)`, the chain inside
/// `Tw(Ł₃, 0)` and the subalgebra of `Tw(G₃, 0)` missing `(0, 0)`.
pub fn corpus() -> Result<Vec<Fixture>> {
    let mut out = Vec::new();
    for (name, l) in bases() {
        out.push(Fixture {
            name: name.into(),
            note: format!("base algebra {name}"),
            algebra: l.clone(),
        });
    }
    for (name, l) in bases() {
        let full = twist::full_twist(&l)?;
        out.push(Fixture {
            name: format!("tw_full_{name}"),
            note: format!("L × L over {name} with unit (e, ⊤)"),
            algebra: full.algebra,
        });
        for iota in l.elements() {
            let tw = twist::twist(&l, iota)?;
            out.push(Fixture {
                name: format!("tw_{name}_{}", slug(l.name(iota))),
                note: format!("twist of {name} at ι = {}", l.name(iota)),
                algebra: tw.algebra,
            });
        }
    }
    out.push(Fixture {
        name: "fig4_chain".into(),
        note: "Tw(Ł₃,0) without (a,a)".into(),
        algebra: figure4_chain()?,
    });
    out.push(Fixture {
        name: "s_g3_0".into(),
        note: "Tw(G₃,0) without (0,0)".into(),
        algebra: goedel_subalgebra()?.0,
    });
    Ok(out)
}

/// Writes `<name>.json` for every fixture.
pub fn write_corpus(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    for f in corpus()? {
        io::write_algebra(&dir.join(format!("{}.json", f.name)), &f.algebra)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_names_are_unique() {
        let c = corpus().unwrap();
        let mut names: Vec<_> = c.iter().map(|f| f.name.clone()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), c.len());
        assert!(names.contains(&"tw_g3_a".to_string()));
        assert!(names.contains(&"tw_s3_bot".to_string()));
    }

    #[test]
    fn special_subalgebras_have_expected_sizes() {
        assert_eq!(figure4_chain().unwrap().size(), 5);
        assert_eq!(goedel_subalgebra().unwrap().0.size(), 4);
    }
}
