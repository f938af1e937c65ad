//! Acceptance criteria 1 to 9, one verdict line each.
//!
//! Runs without the libtest harness so the lines reach stdout. The process
//! fails when the set of red criteria differs from `EXPECTED_RED`.

#[path = "../../torelli-core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use torelli::checks::{self, random_word, MotifKind};
use torelli::fixtures::default_catalog;
use torelli::format::MapSource;
use torelli::Verdict;
use torelli_core::braid::{self, BraidPresentation};
use torelli_core::catalog::Catalog;
use torelli_core::complexes::{self, build_complex, ComplexKind, Vertex};
use torelli_core::intersect::intersection;
use torelli_core::motifs::{self, vertex_type, Hexagon, VertexType};
use torelli_core::reconstruction::{self, EvidenceKind, Rule, VertexMap};
use torelli_core::{cut, CurveClass, Error, MappingWord};

/// Criteria that cannot hold as stated, with the reason.
const EXPECTED_RED: &[(u32, &str)] =
    &[(1, "the listed dimension 2 for S_(2,1) contradicts the formula (g-1)+C(g+p-1,2)-1, which gives 1")];

struct Outcome {
    id: u32,
    title: &'static str,
    pass: bool,
    detail: String,
    elapsed: Duration,
}

fn run(id: u32, title: &'static str, f: impl FnOnce() -> (bool, String)) -> Outcome {
    let t = Instant::now();
    let (pass, detail) = f();
    Outcome { id, title, pass, detail, elapsed: t.elapsed() }
}

fn cat(g: u32, p: u32) -> Catalog {
    default_catalog(g, p).expect("default catalog builds")
}

fn criterion_1() -> (bool, String) {
    let mut pass = true;
    let mut parts = Vec::new();
    for (g, p, listed) in [(1, 3, 2i64), (1, 4, 5), (2, 1, 2), (2, 2, 3), (3, 0, 2)] {
        let t = Instant::now();
        let c = cat(g, p);
        let r = match complexes::dim_formula_check(&c) {
            Ok(r) => r,
            Err(e) => {
                pass = false;
                parts.push(format!("S_({g},{p}) error {e}"));
                continue;
            }
        };
        let formula = (g as i64 - 1) + ((g + p - 1) as i64 * (g + p - 2) as i64 / 2) - 1;
        let cs_formula = (2 * g + p) as i64 - 4;
        let ok = r.pass
            && r.dim == formula
            && r.witness.len() as i64 == formula + 1
            && r.dim == listed
            && r.cs_dim == cs_formula
            && r.cs_witness.len() as i64 == cs_formula + 1
            && t.elapsed() < Duration::from_secs(60);
        pass &= ok;
        parts.push(format!(
            "S_({g},{p}) dim {} (formula {formula}, listed {listed}) cs {} max {}/{} {}",
            r.dim,
            r.cs_dim,
            r.max_t_size,
            r.max_cs_size,
            if ok { "ok" } else { "MISMATCH" }
        ));
    }
    (pass, parts.join("; "))
}

fn criterion_2() -> (bool, String) {
    let mut pass = true;
    let mut parts = Vec::new();

    let c13 = cat(1, 3);
    let view = build_complex(&c13, ComplexKind::Cs);
    let hexes = motifs::find_hexagons(&c13, &view, usize::MAX).unwrap();
    let mut hex_ok = !hexes.items.is_empty();
    for h in &hexes.items {
        let a = h.alphas();
        for k in 0..3 {
            let x = intersection(&c13.surface, &c13.curves[a[k]], &c13.curves[a[(k + 1) % 3]]).unwrap();
            hex_ok &= x == 2;
        }
    }
    pass &= hex_ok;
    parts.push(format!("hexagon p-curves i=2 on {} hexagons", hexes.items.len()));

    let c22 = cat(2, 2);
    let s = &c22.surface;
    let hs: Vec<usize> =
        (0..c22.len()).filter(|&u| vertex_type(&c22, Vertex::Curve(u)) == VertexType::H).collect();
    let (mut sharing, mut share_ok) = (0, true);
    for (k, &u) in hs.iter().enumerate() {
        for &v in &hs[k + 1..] {
            if motifs::is_sharing_pair(s, &c22.curves[u], &c22.curves[v]).unwrap().is_some() {
                sharing += 1;
                share_ok &= intersection(s, &c22.curves[u], &c22.curves[v]).unwrap() == 4;
            }
        }
    }
    share_ok &= sharing > 0;
    pass &= share_ok;
    parts.push(format!("{sharing} sharing pairs among {} h-curves all i=4", hs.len()));

    let spines = motifs::find_spines(&c22, 3000).unwrap();
    let mut spine_ok = !spines.items.is_empty();
    for (ids, _) in &spines.items {
        let i = |a: usize, b: usize| intersection(s, &c22.curves[ids[a]], &c22.curves[ids[b]]).unwrap();
        spine_ok &= i(0, 1) == 1 && i(1, 2) == 1 && i(0, 2) <= 1;
    }
    pass &= spine_ok;
    parts.push(format!("{} spines with legs i=1 and i(a,g)<=1", spines.items.len()));

    let c05 = cat(0, 5);
    let (r, graph) = reconstruction::connectivity_evidence(EvidenceKind::E, &c05, 1, 2).unwrap();
    let mut e_ok = graph.edge_count() > 0;
    for a in 0..r.vertices.len() {
        for b in a + 1..r.vertices.len() {
            let x = intersection(&c05.surface, &c05.curves[r.vertices[a]], &c05.curves[r.vertices[b]]).unwrap();
            e_ok &= graph.has_edge(a, b) == (x == 4);
        }
    }
    pass &= e_ok;
    parts.push(format!("E(S_(0,5)) {} edges exactly at i=4", graph.edge_count()));
    (pass, parts.join("; "))
}

/// Largest total weight of a pair checked against the oracle, per surface.
const ORACLE_BOUNDS: [(u32, u32, u64); 4] = [(1, 1, 40), (1, 3, 32), (0, 5, 32), (2, 2, 32)];

fn criterion_3() -> (bool, String) {
    let t = Instant::now();
    let mut pass = true;
    let mut parts = Vec::new();
    for (g, p, w0) in ORACLE_BOUNDS {
        let c = cat(g, p);
        let (mut pairs, mut agree) = (0, 0);
        for u in 0..c.len() {
            for v in u + 1..c.len() {
                let (a, b) = (&c.curves[u], &c.curves[v]);
                if a.total_weight() + b.total_weight() > w0 {
                    continue;
                }
                pairs += 1;
                if common::min_crossings(&c.surface, a, b, u64::MAX) == Some(c.i(u, v) as u64) {
                    agree += 1;
                }
            }
        }
        pass &= pairs > 0 && agree == pairs;
        parts.push(format!("S_({g},{p}) W0={w0}: {agree}/{pairs}"));
    }
    pass &= t.elapsed() < Duration::from_secs(300);
    (pass, parts.join("; "))
}

fn criterion_4() -> (bool, String) {
    let c = cat(1, 3);
    let pent = checks::motifs_find(&c, MotifKind::Pentagon, usize::MAX);
    let hex = checks::motifs_find(&c, MotifKind::Hexagon, usize::MAX);
    let cp = &pent.certificates;
    let ch = &hex.certificates;
    let pass = pent.verdict == Verdict::Pass
        && cp["all_bp"] == 0
        && hex.verdict == Verdict::Pass
        && ch["shared_curves"].as_array().map(|a| a.len()) == ch["hexagons"].as_u64().map(|n| n as usize);
    (
        pass,
        format!(
            "{} pentagons, {} all-BP, {} lemma failures; {} hexagons, {} with a unique shared curve",
            cp["pentagons"],
            cp["all_bp"],
            cp["failures"].as_array().map_or(0, |a| a.len()),
            ch["hexagons"],
            ch["shared_curves"].as_array().map_or(0, |a| a.len())
        ),
    )
}

/// Whether the witness of `entry` stays a witness after replacing the image
/// of its vertex `x` by `fx`.
fn witness_survives(c: &Catalog, phi: &VertexMap, entry: &reconstruction::CurveEntry, x: Vertex, fx: Vertex) -> bool {
    let img = |v: Vertex| if v == x { Some(fx) } else { phi.get(v) };
    let imgs: Option<Vec<Vertex>> = entry.witness.iter().map(|&v| img(v)).collect();
    let Some(imgs) = imgs else { return true };
    match entry.rule {
        Rule::RootCurve => {
            let bps: Option<Vec<(usize, usize)>> =
                imgs.iter().map(|v| if let Vertex::Bp(a, b) = *v { Some((a, b)) } else { None }).collect();
            bps.and_then(|b| motifs::root_curve(c, &b).ok()).and_then(|r| r.root).is_some()
        }
        Rule::HexagonC => {
            let ids: Option<Vec<usize>> =
                imgs.iter().map(|v| if let Vertex::Curve(u) = *v { Some(u) } else { None }).collect();
            let Some(ids) = ids else { return false };
            let mut h: [usize; 6] = ids.try_into().unwrap();
            if vertex_type(c, Vertex::Curve(h[0])) != VertexType::P {
                h.rotate_left(1);
            }
            Hexagon::new(c, h).is_ok()
        }
        Rule::SharingPair => match imgs[..] {
            [Vertex::Curve(a), Vertex::Curve(b)] => {
                motifs::is_sharing_pair(&c.surface, &c.curves[a], &c.curves[b]).unwrap().is_some()
            }
            _ => false,
        },
        Rule::Direct => true,
    }
}

fn criterion_5() -> (bool, String) {
    let t = Instant::now();
    let mut pass = true;
    let mut parts = Vec::new();
    for (g, p, kind) in [(1, 3, ComplexKind::T), (1, 4, ComplexKind::T), (1, 3, ComplexKind::Cs), (2, 2, ComplexKind::Cs)] {
        let c = cat(g, p);
        let view = build_complex(&c, kind);
        let sharing = if kind == ComplexKind::Cs && g >= 2 { Some(reconstruction::catalog_sharing_pairs(&c).unwrap()) } else { None };
        let extend = |phi: &VertexMap| match &sharing {
            Some(pairs) => reconstruction::phi_extend_with_pairs(&c, phi, pairs),
            None => reconstruction::phi_extend(&c, phi),
        };
        let (mut words_ok, mut extended) = (0, 0);
        let (mut corrupt_cases, mut corrupt_ok) = (0, 0);
        for seed in 0..20u64 {
            let f = random_word(&c.surface, seed, 3).unwrap();
            let report = checks::reconstruct(&c, kind, &MapSource::Word(f.clone()));
            if report.verdict == Verdict::Pass && !report.certificates["evidence_only"].as_bool().unwrap() {
                words_ok += 1;
            }
            let phi = reconstruction::induced_map(&c, &view, &f).unwrap();
            let Ok(m) = extend(&phi) else { continue };
            extended += m.entries.iter().filter(|e| e.rule != Rule::Direct).count();
            // corrupt one witness vertex of the first extended curve
            let Some(entry) = m.entries.iter().find(|e| e.rule != Rule::Direct) else { continue };
            let x = entry.witness[0];
            let candidates: Vec<Vertex> = phi.pairs.iter().map(|q| q.1).filter(|&w| Some(w) != phi.get(x)).collect();
            let Some(&fx) = candidates.iter().find(|&&w| {
                std::mem::discriminant(&w) == std::mem::discriminant(&x) && !witness_survives(&c, &phi, entry, x, w)
            }) else {
                continue;
            };
            corrupt_cases += 1;
            match extend(&reconstruction::corrupt(&phi, x, fx)) {
                Err(Error::Inconsistent(cert)) if cert.contains("image of") => corrupt_ok += 1,
                _ => {}
            }
        }
        let ok = words_ok == 20 && extended > 0 && corrupt_cases > 0 && corrupt_ok == corrupt_cases;
        pass &= ok;
        parts.push(format!(
            "S_({g},{p}) {}: {words_ok}/20 words, {extended} curves extended, {corrupt_ok}/{corrupt_cases} corruptions rejected",
            checks::kind_name(kind)
        ));
    }
    pass &= t.elapsed() < Duration::from_secs(600);
    (pass, parts.join("; "))
}

fn criterion_6() -> (bool, String) {
    let mut pass = true;
    let mut parts = Vec::new();
    for (g, p) in [(1, 1), (1, 3), (1, 4), (0, 5), (2, 1), (2, 2), (3, 0)] {
        let r = checks::verify_rank(&cat(g, p), 200_000);
        pass &= r.verdict == Verdict::Pass;
        let c = &r.certificates;
        parts.push(format!("S_({g},{p}) {} simplices {}", c["simplices"], if r.passed() { "ok" } else { "FAIL" }));
    }
    (pass, parts.join("; "))
}

fn criterion_7() -> (bool, String) {
    let t = Instant::now();
    let mut pass = true;
    for n in 2..=8 {
        let pres = BraidPresentation::new(n).unwrap();
        pass &= braid::check_p_well_defined(&pres).unwrap().pass;
    }
    for n in 2..=12u32 {
        let pres = BraidPresentation::new(n).unwrap();
        let n = n as i64;
        pass &= braid::p_of_center(&pres).unwrap() == [(n, 0), (0, n)];
    }
    pass &= t.elapsed() < Duration::from_secs(1);
    (pass, "p well defined for n=2..8, p(Z)=<(n,0),(0,n)> for n=2..12".into())
}

fn criterion_8() -> (bool, String) {
    let t = Instant::now();
    let mut pass = true;
    let mut parts = Vec::new();
    let (c05, c06) = (cat(0, 5), cat(0, 6));
    for (kind, c) in [(EvidenceKind::D, &c05), (EvidenceKind::D, &c06), (EvidenceKind::E, &c05), (EvidenceKind::F, &c06)] {
        let (r, _) = checks::verify_connectivity(kind, c);
        let cert = &r.certificates;
        pass &= r.passed();
        parts.push(format!(
            "{}(S_({},{})) {} vertices connected={} at depth {} cap {}",
            checks::evidence_name(kind).to_uppercase(),
            c.surface.genus(),
            c.surface.boundary_count(),
            cert["vertices"].as_array().map_or(0, |a| a.len()),
            cert["connected"],
            c.depth,
            c.weight_cap
        ));
    }
    pass &= t.elapsed() < Duration::from_secs(300);
    (pass, parts.join("; "))
}

const CASES: usize = 1000;

struct Pool {
    cat: Catalog,
    light: Vec<usize>,
    simplices: Vec<Vec<usize>>,
}

fn pools() -> Vec<Pool> {
    [(1, 3), (2, 2), (0, 5), (1, 4), (2, 1)]
        .iter()
        .map(|&(g, p)| {
            let c = cat(g, p);
            let light = (0..c.len()).filter(|&u| c.curves[u].total_weight() <= 24).collect();
            let (sx, _) = checks::enumerated_simplices(&c, 20_000);
            Pool { cat: c, light, simplices: sx.into_iter().collect() }
        })
        .collect()
}

fn short_word(c: &Catalog, rng: &mut ChaCha8Rng) -> MappingWord {
    let len = rng.random_range(1..=2);
    random_word(&c.surface, rng.random(), len).unwrap()
}

fn criterion_9() -> (bool, String) {
    let pools = pools();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7031);
    let mut failures = [0usize; 4];
    let pick = |rng: &mut ChaCha8Rng, v: &[usize]| v[rng.random_range(0..v.len())];

    for _ in 0..CASES {
        let pool = &pools[rng.random_range(0..pools.len())];
        let c = &pool.cat;
        let (a, b) = (pick(&mut rng, &pool.light), pick(&mut rng, &pool.light));
        let (ca, cb) = (&c.curves[a], &c.curves[b]);
        let i = intersection(&c.surface, ca, cb).unwrap();
        let sides = cut::census(&c.surface, std::slice::from_ref(ca)).unwrap().components.len();
        let sep = ca.is_separating(&c.surface);
        if (sep && !i.is_multiple_of(2)) || sep != (sides == 2) {
            failures[0] += 1;
        }
    }

    for _ in 0..CASES {
        let pool = &pools[rng.random_range(0..pools.len())];
        let c = &pool.cat;
        let a = &c.curves[pick(&mut rng, &pool.light)];
        let (u, v) = (short_word(c, &mut rng), short_word(c, &mut rng));
        let lhs = u.compose(&v).apply(&c.surface, a).unwrap();
        let rhs = u.apply(&c.surface, &v.apply(&c.surface, a).unwrap()).unwrap();
        let id = MappingWord::identity().apply(&c.surface, a).unwrap();
        if lhs != rhs || id != *a {
            failures[1] += 1;
        }
    }

    for _ in 0..CASES {
        let pool = &pools[rng.random_range(0..pools.len())];
        let c = &pool.cat;
        let (a, b) = (pick(&mut rng, &pool.light), pick(&mut rng, &pool.light));
        let w = short_word(c, &mut rng);
        let (wa, wb): (CurveClass, CurveClass) =
            (w.apply(&c.surface, &c.curves[a]).unwrap(), w.apply(&c.surface, &c.curves[b]).unwrap());
        let same_type = wa.topo_type(&c.surface) == c.tags[a];
        if intersection(&c.surface, &wa, &wb).unwrap() != c.i(a, b) as u64 || !same_type {
            failures[2] += 1;
        }
    }

    for _ in 0..CASES {
        let pool = &pools[rng.random_range(0..pools.len())];
        let c = &pool.cat;
        let sigma = &pool.simplices[rng.random_range(0..pool.simplices.len())];
        let curves: Vec<CurveClass> = sigma.iter().map(|&u| c.curves[u].clone()).collect();
        let r = cut::census(&c.surface, &curves).unwrap();
        let each = r.components.iter().all(|q| q.euler == 2 - 2 * q.genus as i64 - q.boundary_count() as i64);
        if r.euler_sum() != c.surface.euler() || !each {
            failures[3] += 1;
        }
    }

    let names = ["separating parity", "action law", "intersection preservation", "cut-chi additivity"];
    let detail = names
        .iter()
        .zip(failures)
        .map(|(n, f)| format!("{n} {}/{CASES}", CASES - f))
        .collect::<Vec<_>>()
        .join("; ");
    (failures.iter().all(|&f| f == 0), detail)
}

fn main() {
    let outcomes = [
        run(1, "dimension formulas", criterion_1),
        run(2, "intersection anchors", criterion_2),
        run(3, "oracle equivalence", criterion_3),
        run(4, "motif falsification guards", criterion_4),
        run(5, "reconstruction regression", criterion_5),
        run(6, "rank and reduction graphs", criterion_6),
        run(7, "braid module", criterion_7),
        run(8, "connectivity evidence", criterion_8),
        run(9, "curve engine properties", criterion_9),
    ];
    let expected: BTreeSet<u32> = EXPECTED_RED.iter().map(|e| e.0).collect();
    let mut unexpected = Vec::new();
    for o in &outcomes {
        let note = match EXPECTED_RED.iter().find(|e| e.0 == o.id) {
            Some((_, why)) if !o.pass => format!(" [expected red: {why}]"),
            _ => String::new(),
        };
        println!(
            "criterion {} {} {}: {} ({:.1}s){note}",
            o.id,
            if o.pass { "PASS" } else { "FAIL" },
            o.title,
            o.detail,
            o.elapsed.as_secs_f64()
        );
        if o.pass == expected.contains(&o.id) {
            unexpected.push(o.id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected verdicts for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
