//! Every verifier run over the fixture corpus, one row per named result.

use anyhow::{anyhow, ensure, Result};
use twistlab_core::conuclei::{self, NELSON_SEARCH_BOUND};
use twistlab_core::representation as rep;
use twistlab_core::search;
use twistlab_core::{fixtures, twist, varieties, Algebra, NcaPair, Signature, Subset};

use crate::corpus::{self, Fixture};

#[derive(Clone, Debug)]
pub struct ClaimResult {
    pub key: &'static str,
    pub statement: &'static str,
    pub passed: bool,
    /// Instances checked.
    pub instances: usize,
    pub detail: String,
}

type Check = fn(&[Fixture]) -> Result<usize>;

/// Keys, statements and checks, in report order.
pub const CLAIMS: &[(&str, &str, Check)] = &[
    ("def:residuated-lattice", "fixtures certify; S3 is odd and involutive; G3 is Brouwerian", fixtures_validate),
    ("thm:twist", "Tw(L,ι) is an involutive residuated lattice equal to the double-division image", twists_certify),
    ("lem:maximal-set", "Tw(L,ι) is the downset generated by its maximal set", maximal_sets),
    ("lem:positive-idempotent", "x ↦ p\\x/p is a weak conucleus whose image has unit p", positive_idempotents),
    ("lem:tau-tw", "τ_Tw is a Nelson conucleus on every twist", tau_tw_nelson),
    ("thm:psi", "ψ maps L isomorphically onto the τ_Tw image", psi_isomorphisms),
    ("thm:representation", "φ embeds every Nelson conucleus algebra into a twist, intertwining τ", phi_embeddings),
    ("thm:adjunction", "both adjunction triangles are identities", adjunction_triangles),
    ("ex:non-term", "Tw(Ł₃,0) without (a,a) is a subalgebra, so τ_Tw is not a term", non_term),
    ("ex:not-surjective", "φ on Tw(G₃,0) without (0,0) is injective but not onto", not_surjective),
    ("thm:kalman", "Tw(2,1) and Tw(G₃,1) satisfy K1–K5", kalman_twists),
    ("prop:k5-redundant", "K1–K4 imply K5 on commutative algebras of size at most 5", k5_redundant),
    ("ex:nt-separation", "Tw(G₃,a) is Nelson-type but neither integral nor odd", nt_separation),
    ("thm:sendlewski", "a Nelson-type algebra is Tw(H_A,ι,F_A)", sendlewski),
    ("lem:filterform", "F_A = {τ(∼z) : τz = τ⊥} on involutive conucleus images", filter_form),
    ("thm:inca", "an algebra with IT1 is Tw(L_A,ι,F_A); Tw(G₃,0) fails IT1", inca),
    ("thm:rasiowa", "R1–R6 hold and the Rasiowa round trip is the identity", rasiowa),
];

pub fn run(corpus: &[Fixture]) -> Vec<ClaimResult> {
    CLAIMS
        .iter()
        .map(|&(key, statement, check)| {
            let (passed, instances, detail) = match check(corpus) {
                Ok(n) => (true, n, String::new()),
                Err(e) => (false, 0, format!("{e:#}")),
            };
            ClaimResult {
                key,
                statement,
                passed,
                instances,
                detail,
            }
        })
        .collect()
}

fn find<'a>(corpus: &'a [Fixture], name: &str) -> Result<&'a Algebra> {
    corpus
        .iter()
        .find(|f| f.name == name)
        .map(|f| &f.algebra)
        .ok_or_else(|| anyhow!("fixture {name} is missing from the corpus"))
}

fn holds(v: &twistlab_core::Verdict) -> Result<()> {
    ensure!(v.holds, "{}", v.to_string().trim_end());
    Ok(())
}

/// Every twist pair `(Tw(L,ι), τ_Tw)` of the base algebras, named by fixture.
pub fn twist_pairs() -> Result<Vec<(String, NcaPair)>> {
    let mut out = Vec::new();
    for (name, l) in corpus::bases() {
        for iota in l.elements() {
            let tw = twist::twist(&l, iota)?;
            let tau = twist::tau_tw(&tw)?;
            out.push((format!("tw_{name}_{}", corpus::slug(l.name(iota))), NcaPair::new(tw.algebra, tau)?));
        }
    }
    Ok(out)
}

/// Twist pairs plus every Nelson conucleus on every involutive fixture.
pub fn nca_pairs(corpus: &[Fixture]) -> Result<Vec<(String, NcaPair)>> {
    let mut out = twist_pairs()?;
    for f in corpus.iter().filter(|f| f.algebra.involution().is_some()) {
        for t in conuclei::enumerate_nelson_conuclei(&f.algebra, NELSON_SEARCH_BOUND)? {
            let p = NcaPair::new(f.algebra.clone(), t)?;
            if !out.iter().any(|(_, q)| *q == p) {
                out.push((format!("{} with τ = {:?}", f.name, p.tau().table), p));
            }
        }
    }
    Ok(out)
}

fn fixtures_validate(corpus: &[Fixture]) -> Result<usize> {
    for f in corpus {
        let report = twistlab_core::validate(&f.algebra.to_raw())?;
        ensure!(report.is_certified(), "{} fails validation", f.name);
    }
    let s3 = find(corpus, "s3")?.profile();
    ensure!(s3.odd && s3.involutive, "S3 is odd and involutive");
    holds(&varieties::is_brouwerian(find(corpus, "g3")?)?)?;
    Ok(corpus.len())
}

fn twists_certify(_: &[Fixture]) -> Result<usize> {
    let mut n = 0;
    for (_, l) in corpus::bases() {
        for iota in l.elements() {
            let tw = twist::twist(&l, iota)?;
            ensure!(tw.algebra.involution().is_some(), "twist carries its involution");
            n += 1;
        }
    }
    Ok(n)
}

fn maximal_sets(_: &[Fixture]) -> Result<usize> {
    let mut n = 0;
    for (_, l) in corpus::bases() {
        for iota in l.elements() {
            holds(&twist::check_downset(&twist::twist(&l, iota)?)?)?;
            n += 1;
        }
    }
    Ok(n)
}

fn positive_idempotents(corpus: &[Fixture]) -> Result<usize> {
    let mut n = 0;
    for f in corpus.iter().filter(|f| f.algebra.unit().is_some()) {
        let a = &f.algebra;
        for p in a.elements().filter(|&p| conuclei::is_positive_idempotent(a, p)) {
            let d = conuclei::double_division_map(a, p)?;
            holds(&conuclei::is_weak_conucleus(a, &d)?)?;
            for x in d.image().iter() {
                ensure!(a.mul(p, x) == x && a.mul(x, p) == x, "{}: {} is not a unit for {}", f.name, a.name(p), a.name(x));
            }
            n += 1;
        }
    }
    Ok(n)
}

fn tau_tw_nelson(_: &[Fixture]) -> Result<usize> {
    let pairs = twist_pairs()?;
    for (name, p) in &pairs {
        let v = conuclei::is_nelson_conucleus(p.algebra(), p.tau())?;
        ensure!(v.holds, "{name}: {v}");
    }
    Ok(pairs.len())
}

fn psi_isomorphisms(_: &[Fixture]) -> Result<usize> {
    let mut n = 0;
    for (_, l) in corpus::bases() {
        for iota in l.elements() {
            rep::psi(&l, iota)?;
            n += 1;
        }
    }
    Ok(n)
}

fn phi_embeddings(corpus: &[Fixture]) -> Result<usize> {
    let pairs = nca_pairs(corpus)?;
    for (_, p) in &pairs {
        rep::phi(p)?;
    }
    Ok(pairs.len())
}

fn adjunction_triangles(corpus: &[Fixture]) -> Result<usize> {
    let mut n = 0;
    for (_, l) in corpus::bases() {
        for iota in l.elements() {
            holds(&rep::adjunction_on_base(&l, iota)?)?;
            n += 1;
        }
    }
    for (_, p) in nca_pairs(corpus)? {
        holds(&rep::adjunction_on_pair(&p)?)?;
        n += 1;
    }
    Ok(n)
}

fn non_term(corpus: &[Fixture]) -> Result<usize> {
    let tw = twist::twist(&fixtures::lukasiewicz3(), 0)?;
    let aa = tw.index_of(1, 1).expect("(a,a) lies in Tw(Ł₃,0)");
    let mut chain = Subset::full(tw.size());
    chain.remove(aa);
    let subs = search::subalgebras(&tw.algebra, Signature::of(&tw.algebra))?;
    ensure!(subs.contains(&chain), "Tw(Ł₃,0) without (a,a) is a subuniverse");
    let a0 = tw.index_of(1, 0).expect("(a,0) lies in Tw(Ł₃,0)");
    ensure!(twist::tau_tw(&tw)?.apply(a0) == aa, "τ_Tw(a,0) = (a,a)");
    ensure!(find(corpus, "fig4_chain")?.size() == 5, "the chain has five elements");
    Ok(subs.len())
}

fn not_surjective(_: &[Fixture]) -> Result<usize> {
    let tw = twist::twist(&fixtures::goedel3(), 0)?;
    let (s, embedding) = corpus::goedel_subalgebra()?;
    let tau = twist::tau_tw(&tw)?;
    let restricted = embedding
        .iter()
        .map(|&x| embedding.iter().position(|&y| y == tau.apply(x)))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| anyhow!("τ_Tw maps S into itself"))?;
    let p = NcaPair::new(s, twistlab_core::UnaryMap::new(restricted))?;
    let ph = rep::phi(&p)?;
    ensure!(!ph.surjective, "φ on S is not onto");
    Ok(1)
}

fn kalman_twists(corpus: &[Fixture]) -> Result<usize> {
    for name in ["tw_l2_1", "tw_g3_1"] {
        holds(&varieties::is_kalman(find(corpus, name)?)?)?;
    }
    Ok(2)
}

fn k5_redundant(_: &[Fixture]) -> Result<usize> {
    let r = varieties::check_k5_redundancy(5)?;
    ensure!(r.counterexamples.is_empty(), "{} algebras satisfy K1–K4 but not K5", r.counterexamples.len());
    Ok(r.satisfying_k1_to_k4.iter().sum())
}

fn nt_separation(corpus: &[Fixture]) -> Result<usize> {
    let a = find(corpus, "tw_g3_a")?;
    holds(&varieties::is_nt(a)?)?;
    ensure!(!a.is_integral(), "Tw(G₃,a) is not integral");
    let e = a.unit().expect("twists have a unit");
    let f = a.neg(e);
    ensure!(a.name(e) == "(1,a)" && a.name(f) == "(a,1)", "e = (1,a) and ∼e = (a,1)");
    let v = varieties::is_npc(a)?;
    ensure!(v.first_witness("odd") == Some(&[e, f][..]), "oddness fails at (e, ∼e)");
    Ok(1)
}

fn nt_fixtures(corpus: &[Fixture]) -> Result<Vec<&Fixture>> {
    let mut out = Vec::new();
    for f in corpus {
        let a = &f.algebra;
        if a.involution().is_some() && a.unit().is_some() && a.is_commutative() && varieties::is_nt(a)?.holds {
            out.push(f);
        }
    }
    Ok(out)
}

fn sendlewski(corpus: &[Fixture]) -> Result<usize> {
    let nts = nt_fixtures(corpus)?;
    for name in ["tw_l2_0", "tw_g3_1", "tw_g3_a", "tw_g3_0"] {
        ensure!(nts.iter().any(|f| f.name == name), "{name} is Nelson-type");
    }
    for f in &nts {
        rep::sendlewski_isomorphism(&f.algebra)?;
    }
    Ok(nts.len())
}

fn inca_pairs(corpus: &[Fixture]) -> Result<Vec<(String, NcaPair)>> {
    let mut out = Vec::new();
    for (name, p) in nca_pairs(corpus)? {
        let a = p.algebra();
        if a.is_commutative() && a.bottom().is_some() && rep::inca_check(&p)?.holds {
            out.push((name, p));
        }
    }
    Ok(out)
}

fn filter_form(corpus: &[Fixture]) -> Result<usize> {
    let pairs = inca_pairs(corpus)?;
    ensure!(pairs.iter().any(|(n, _)| n == "tw_l3_0"), "Tw(Ł₃,0) satisfies IT1");
    for (name, p) in &pairs {
        let inca = rep::inca_isomorphism(p)?;
        let a = p.algebra();
        let bot = a.bottom().expect("checked");
        let lemma: Vec<_> = a
            .elements()
            .filter(|&z| p.t(z) == p.t(bot))
            .map(|z| p.t(a.neg(z)))
            .map(|x| inca.embedding.iter().position(|&y| y == x).expect("τ values lie in L_A"))
            .collect();
        ensure!(
            Subset::from_members(inca.l.size(), lemma) == inca.filter,
            "{name}: F_A differs from {{τ(∼z) : τz = τ⊥}}"
        );
    }
    Ok(pairs.len())
}

fn inca(corpus: &[Fixture]) -> Result<usize> {
    let pairs = inca_pairs(corpus)?;
    for (_, p) in &pairs {
        rep::inca_isomorphism(p)?;
    }
    let tw = twist::twist(&fixtures::goedel3(), 0)?;
    let p = NcaPair::new(tw.algebra.clone(), twist::tau_tw(&tw)?)?;
    let v = rep::inca_check(&p)?;
    let w = v.first_witness("IT1").ok_or_else(|| anyhow!("Tw(G₃,0) should fail IT1"))?;
    ensure!(tw.pair(w[0]).0 == 1, "the IT1 witness sits over the middle element");
    Ok(pairs.len() + 1)
}

fn rasiowa(corpus: &[Fixture]) -> Result<usize> {
    let pairs = nca_pairs(corpus)?;
    for (_, p) in &pairs {
        let r = rep::rasiowa_structure(p)?;
        holds(&r.structure.check())?;
        holds(&rep::rasiowa_round_trip(p)?)?;
    }
    Ok(pairs.len())
}

