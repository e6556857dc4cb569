//! Seeded random corpora of generated monoids and the property suites run
//! over them.

use std::collections::BTreeMap;

use monocone::classify::{
    classify_hfm, classify_ohfm, classify_ufm, face_submonoids, face_ufm_map, is_divisor_closed,
    verify_divisor_witness, DivisorWitness, Verdict,
};
use monocone::exactarith::linalg::QVector;
use monocone::factorization::{bruteforce_classify, verify_witness, Property, WindowVerdict};
use monocone::grid;
use monocone::monoid::{generated_atoms, MonoidSpec, Window};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{CliError, CliResult, ErrorCode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusParams {
    pub max_dim: usize,
    pub max_generators: usize,
    pub max_entry: i64,
    /// Coordinate-sum bound of the brute-force sweeps.
    pub sweep_sum: i64,
    /// Coordinate-sum bound of the divisor-closed sweeps.
    pub divisor_sum: i64,
    /// Random non-face atom subsets tried per instance.
    pub subsets_per_instance: usize,
    /// Largest multiple of `Σ S` tried when the sweep finds no divisor
    /// witness for a subset `S`.
    pub max_multiple: i64,
}

impl Default for CorpusParams {
    fn default() -> Self {
        Self {
            max_dim: 3,
            max_generators: 6,
            max_entry: 5,
            sweep_sum: 24,
            divisor_sum: 14,
            subsets_per_instance: 3,
            max_multiple: 12,
        }
    }
}

/// Generator lists of `count` random monoids: dimension, generator count and
/// entries are uniform; zero vectors are redrawn.
pub fn generate(seed: u64, count: usize, p: &CorpusParams) -> Vec<Vec<Vec<i64>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=p.max_dim);
            let k = rng.gen_range(1..=p.max_generators);
            (0..k)
                .map(|_| loop {
                    let v: Vec<i64> = (0..d).map(|_| rng.gen_range(0..=p.max_entry)).collect();
                    if v.iter().any(|&x| x != 0) {
                        break v;
                    }
                })
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyCheck {
    pub geometric: bool,
    pub brute_force: bool,
    pub witness_verified: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubsetCheck {
    pub generators: Vec<Vec<i64>>,
    /// `Some(true)` when refuted with a verified witness, `None` when the
    /// sweep found no witness.
    pub refuted: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceReport {
    pub index: usize,
    pub dim: usize,
    pub generators: Vec<Vec<i64>>,
    pub atoms: Vec<Vec<i64>>,
    pub properties: BTreeMap<&'static str, PropertyCheck>,
    pub faces: usize,
    pub face_atoms_exact: bool,
    pub faces_divisor_closed: bool,
    pub non_face_subsets: Vec<SubsetCheck>,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub verdicts: BTreeMap<String, usize>,
    pub faces: usize,
    pub non_face_subsets: usize,
    pub non_face_refuted: usize,
    pub non_face_unresolved: usize,
    pub violations: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub seed: u64,
    pub count: usize,
    pub params: CorpusParams,
    pub summary: Summary,
    pub instances: Vec<InstanceReport>,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

fn compare(
    m: &MonoidSpec,
    p: Property,
    geo: &Verdict,
    brute: &WindowVerdict,
    w: &Window,
    out: &mut Vec<String>,
) -> PropertyCheck {
    let mut witness_verified = true;
    for wit in [geo.witness.as_ref(), brute.witness()].into_iter().flatten() {
        if !verify_witness(m, p, wit) {
            witness_verified = false;
            out.push(format!("{p:?}: witness at {:?} does not verify", wit.element));
        }
    }
    if geo.holds && !brute.holds() {
        out.push(format!("{p:?}: geometric test accepts, brute force refutes"));
    }
    if !geo.holds && brute.holds() && geo.witness.as_ref().is_some_and(|wt| w.contains(&wt.element)) {
        out.push(format!("{p:?}: witness inside the sweep, brute force accepts"));
    }
    if !geo.holds && geo.witness.is_none() {
        out.push(format!("{p:?}: refuted without a witness"));
    }
    PropertyCheck { geometric: geo.holds, brute_force: brute.holds(), witness_verified }
}

fn run_instance(index: usize, gens: Vec<Vec<i64>>, p: &CorpusParams, rng: &mut ChaCha8Rng) -> InstanceReport {
    let d = gens[0].len();
    let m = MonoidSpec::generated(d, gens.clone()).expect("corpus generators are valid");
    let atoms = generated_atoms(&m).unwrap();
    let mut violations = Vec::new();

    let sweep = Window::cube(d, p.sweep_sum).unwrap().with_max_sum(p.sweep_sum);
    let brute = bruteforce_classify(&m, &sweep);
    let mut properties = BTreeMap::new();
    properties
        .insert("ufm", compare(&m, Property::Ufm, &classify_ufm(&m, &sweep), &brute.ufm, &sweep, &mut violations));
    properties
        .insert("hfm", compare(&m, Property::Hfm, &classify_hfm(&m, &sweep), &brute.hfm, &sweep, &mut violations));
    let ohfm = classify_ohfm(&m, &sweep);
    properties.insert("ohfm", compare(&m, Property::Ohfm, &ohfm, &brute.ohfm, &sweep, &mut violations));

    let data = face_submonoids(&m).expect("corpus monoids have cones");
    let on_face = |x: &Vec<i64>, normal: &QVector| QVector::from_ints(x).dot(normal).is_zero();
    let mut face_atoms_exact = true;
    let mut faces_divisor_closed = true;
    let dw = Window::cube(d, p.divisor_sum).unwrap().with_max_sum(p.divisor_sum);
    let mut face_atom_sets = Vec::new();
    for (s, f) in data.submonoids.iter().zip(&data.lattice.faces) {
        let expected: Vec<Vec<i64>> = atoms.iter().filter(|a| on_face(a, &f.supporting_normal)).cloned().collect();
        if s.atoms != expected {
            face_atoms_exact = false;
            violations.push(format!("face {}: atoms {:?} differ from {:?}", s.face, s.atoms, expected));
        }
        let v = is_divisor_closed(&m, &s.generators, &dw).expect("face generators lie in M");
        if !v.holds {
            faces_divisor_closed = false;
            violations.push(format!("face {} is not divisor-closed: {:?}", s.face, v.witness));
        }
        face_atom_sets.push(expected);
    }

    let map = face_ufm_map(&m).expect("face map");
    if properties["ufm"].geometric != map.ufm.iter().all(|&u| u) {
        violations.push("UFM differs from UFM of every face".into());
    }
    if ohfm.holds && !map.is_interval {
        violations.push("non-UFM faces of an OHFM do not form an interval".into());
    }

    let mut non_face_subsets = Vec::new();
    if atoms.len() >= 2 {
        for _ in 0..p.subsets_per_instance {
            let mut pool = atoms.clone();
            pool.shuffle(rng);
            let k = rng.gen_range(1..atoms.len());
            let mut subset: Vec<Vec<i64>> = pool[..k].to_vec();
            subset.sort();
            if face_atom_sets.contains(&subset) {
                continue;
            }
            let v = is_divisor_closed(&m, &subset, &dw).expect("atoms lie in M");
            let witness = v.witness.or_else(|| multiple_witness(&m, &atoms, &subset, p.max_multiple));
            let refuted = match &witness {
                Some(wit) => {
                    let ok = verify_divisor_witness(&m, &subset, wit);
                    if !ok {
                        violations.push(format!("divisor witness for {subset:?} does not verify"));
                    }
                    Some(ok)
                }
                None => None,
            };
            non_face_subsets.push(SubsetCheck { generators: subset, refuted });
        }
    }

    InstanceReport {
        index,
        dim: d,
        generators: gens,
        atoms,
        properties,
        faces: data.submonoids.len(),
        face_atoms_exact,
        faces_divisor_closed,
        non_face_subsets,
        violations,
    }
}

/// Searches `y = k·Σ S` for an atom `a ∉ S` with `y − a ∈ M`. Such an atom
/// is not in `⟨S⟩`, so `(y, a)` shows `⟨S⟩` is not divisor-closed.
fn multiple_witness(m: &MonoidSpec, atoms: &[Vec<i64>], subset: &[Vec<i64>], max_k: i64) -> Option<DivisorWitness> {
    let sigma = subset.iter().fold(vec![0; m.dim()], |acc, s| grid::add(&acc, s));
    let others: Vec<&Vec<i64>> = atoms.iter().filter(|a| !subset.contains(a)).collect();
    (1..=max_k).find_map(|k| {
        let y: Vec<i64> = sigma.iter().map(|v| v * k).collect();
        others
            .iter()
            .find(|a| grid::leq(a, &y) && m.contains(&grid::sub(&y, a)))
            .map(|a| DivisorWitness { element: y.clone(), divisor: (*a).clone() })
    })
}

pub fn run_corpus(seed: u64, count: usize, p: &CorpusParams) -> CliResult<SuiteReport> {
    if count == 0 {
        return Err(CliError::new(ErrorCode::BadArgument, "count must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_5eed);
    let instances: Vec<InstanceReport> =
        generate(seed, count, p).into_iter().enumerate().map(|(i, g)| run_instance(i, g, p, &mut rng)).collect();
    let mut summary = Summary::default();
    for inst in &instances {
        for (name, c) in &inst.properties {
            *summary.verdicts.entry(format!("{name}={}", c.geometric)).or_insert(0) += 1;
        }
        summary.faces += inst.faces;
        summary.non_face_subsets += inst.non_face_subsets.len();
        summary.non_face_refuted += inst.non_face_subsets.iter().filter(|s| s.refuted == Some(true)).count();
        summary.non_face_unresolved += inst.non_face_subsets.iter().filter(|s| s.refuted.is_none()).count();
        summary.violations += inst.violations.len();
    }
    Ok(SuiteReport {
        tool: crate::run::TOOL,
        version: crate::run::VERSION,
        seed,
        count,
        params: *p,
        summary,
        instances,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_count_is_an_error() {
        assert_eq!(run_corpus(1, 0, &CorpusParams::default()).unwrap_err().code, ErrorCode::BadArgument);
    }

    #[test]
    fn generation_is_seeded() {
        let p = CorpusParams::default();
        assert_eq!(generate(3, 20, &p), generate(3, 20, &p));
        assert_ne!(generate(3, 20, &p), generate(4, 20, &p));
        for g in generate(9, 50, &p) {
            assert!(!g.is_empty() && g.len() <= 6 && g[0].len() <= 3);
            assert!(g.iter().all(|v| v.iter().all(|&x| (0..=5).contains(&x)) && v.iter().any(|&x| x != 0)));
        }
    }

    #[test]
    fn small_corpus_passes() {
        let r = run_corpus(2, 6, &CorpusParams::default()).unwrap();
        assert_eq!(r.summary.violations, 0, "{:#?}", r.instances);
    }
}
