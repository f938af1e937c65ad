//! Checks shared by the command line and the acceptance suite. Each returns
//! a [`Report`]; graph checks also return Graphviz text.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use torelli_core::braid::{self, BraidPresentation};
use torelli_core::catalog::{self, Catalog};
use torelli_core::complexes::{self, build_complex, Abc, ComplexKind, ComplexView, Vertex};
use torelli_core::motifs;
use torelli_core::reconstruction::{self, EvidenceKind, VertexMap};
use torelli_core::{CombSurface, CurveClass, Error, MappingWord};

use crate::format::MapSource;
use crate::report::{Report, Verdict};

pub fn surface_of(cat: &Catalog) -> (u32, u32) {
    (cat.surface.genus(), cat.surface.boundary_count())
}

fn bounds(cat: &Catalog) -> Value {
    json!({ "depth": cat.depth, "weight_cap": cat.weight_cap, "catalog_size": cat.len() })
}

fn with_bounds(cat: &Catalog, extra: Value) -> Value {
    let mut v = bounds(cat);
    if let (Value::Object(m), Value::Object(e)) = (&mut v, extra) {
        m.extend(e);
    }
    v
}

/// A product of `len` standard generators drawn with a seeded ChaCha8
/// stream, each new letter composed on the left.
pub fn random_word(s: &CombSurface, seed: u64, len: usize) -> torelli_core::Result<MappingWord> {
    let gens = catalog::standard_generators(s)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut w = MappingWord::identity();
    for _ in 0..len {
        w = gens[rng.random_range(0..gens.len())].compose(&w);
    }
    Ok(w)
}

pub fn kind_name(kind: ComplexKind) -> &'static str {
    match kind {
        ComplexKind::C => "c",
        ComplexKind::Cs => "cs",
        ComplexKind::T => "t",
    }
}

pub fn vertex_label(v: Vertex) -> String {
    match v {
        Vertex::Curve(u) => format!("c{u}"),
        Vertex::Bp(u, w) => format!("bp{u}_{w}"),
    }
}

pub fn surface_info(g: u32, p: u32) -> Report {
    let params = json!({});
    match CombSurface::build(g, p) {
        Ok(s) => Report::new(
            "surface",
            Some((g, p)),
            params,
            Verdict::Pass,
            json!({
                "surface_id": s.id(),
                "euler": s.euler(),
                "classified": s.classify(),
                "triangles": s.triangle_count(),
                "edges": s.edge_count(),
                "ideal_vertices": s.vertex_count(),
                "closed_marked_model": s.is_closed(),
                "marking_curves": catalog::standard_marking(&s).map(|m| m.len()).unwrap_or(0),
                "generators": catalog::standard_generators(&s).map(|m| m.len()).unwrap_or(0),
            }),
        ),
        Err(e) => Report::error("surface", Some((g, p)), params, &e),
    }
}

pub fn catalog_summary(cat: &Catalog) -> Report {
    let seps = cat.separating.iter().filter(|&&x| x).count();
    let max_w = cat.curves.iter().map(|c| c.total_weight()).max().unwrap_or(0);
    Report::new(
        "catalog.build",
        Some(surface_of(cat)),
        bounds(cat),
        Verdict::Pass,
        json!({
            "curves": cat.len(),
            "separating": seps,
            "non_separating": cat.len() - seps,
            "bps": cat.bps.len(),
            "max_total_weight": max_w,
        }),
    )
}

/// Largest simplex size allowed in a view.
fn simplex_bound(kind: ComplexKind, g: u32, p: u32) -> u64 {
    match kind {
        ComplexKind::C => (3 * g + p) as u64 - 3,
        ComplexKind::Cs => complexes::separating_simplex_size(g, p),
        ComplexKind::T => complexes::torelli_simplex_size(g, p),
    }
}

pub fn view_dot(view: &ComplexView, name: &str) -> String {
    let labels: Vec<String> = view.vertices.iter().map(|&v| vertex_label(v)).collect();
    view.graph.to_dot(name, &labels)
}

pub fn complex_build(cat: &Catalog, kind: ComplexKind, cap: usize) -> (Report, String) {
    let (g, p) = surface_of(cat);
    let view = build_complex(cat, kind);
    let (max, truncated) = complexes::maximal_simplices(&view, cap);
    let largest = view.graph.maximum_clique().len();
    let bound = simplex_bound(kind, g, p);
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for m in &max {
        *sizes.entry(m.len()).or_default() += 1;
    }
    let verdict = Verdict::from_bool(largest as u64 <= bound);
    let report = Report::new(
        "complex.build",
        Some((g, p)),
        with_bounds(cat, json!({ "kind": kind_name(kind), "cap": cap })),
        verdict,
        json!({
            "vertices": view.len(),
            "edges": view.graph.edge_count(),
            "maximal_simplices": max.len(),
            "truncated": truncated,
            "size_histogram": sizes,
            "largest_simplex": largest,
            "size_bound": bound,
        }),
    );
    (report, view_dot(&view, &format!("{}_{g}_{p}", kind_name(kind))))
}

pub fn verify_dim(cat: &Catalog) -> Report {
    let params = bounds(cat);
    match complexes::dim_formula_check(cat) {
        Ok(r) => Report::new(
            "verify.dim",
            Some(surface_of(cat)),
            params,
            Verdict::from_bool(r.pass),
            serde_json::to_value(&r).expect("report serializes"),
        ),
        Err(e) => Report::error("verify.dim", Some(surface_of(cat)), params, &e),
    }
}

/// Every face of every maximal simplex of the C-view, at most `cap`
/// maximal simplices.
pub fn enumerated_simplices(cat: &Catalog, cap: usize) -> (BTreeSet<Vec<usize>>, bool) {
    let view = build_complex(cat, ComplexKind::C);
    let (max, truncated) = view.graph.maximal_cliques(cap);
    let mut out = BTreeSet::new();
    for m in max {
        let ids: Vec<usize> = m.iter().flat_map(|&k| view.vertices[k].curves()).collect();
        for mask in 1u32..1 << ids.len() {
            out.insert((0..ids.len()).filter(|&j| mask >> j & 1 == 1).map(|j| ids[j]).collect());
        }
    }
    (out, truncated)
}

/// Rank inequalities and reduction graph shape on every enumerated simplex.
pub fn verify_rank(cat: &Catalog, cap: usize) -> Report {
    let (g, p) = surface_of(cat);
    let params = with_bounds(cat, json!({ "cap": cap }));
    let s = &cat.surface;
    let (simplices, truncated) = enumerated_simplices(cat, cap);
    let mut violations = Vec::new();
    let (mut equality, mut loops) = (0usize, 0usize);
    let run = |tau: &[usize], violations: &mut Vec<Value>, equality: &mut usize, loops: &mut usize| -> torelli_core::Result<()> {
        let curves: Vec<CurveClass> = tau.iter().map(|&u| cat.curves[u].clone()).collect();
        let r = complexes::torelli_rank(s, &curves)?;
        let abc = complexes::abc_types(s, &curves)?;
        let rg = complexes::reduction_graph(s, &curves)?;
        *equality += r.equality_case as usize;
        *loops += rg.loops().len();
        let loop_ok = (0..tau.len()).all(|k| {
            let (l, rr) = rg.edges[k];
            let expected = abc.types[k] == Abc::C && l == rr;
            rg.loops().contains(&k) == expected
        });
        if !r.pass || rg.edges.len() != tau.len() || rg.vertices.len() != r.nu || !loop_ok {
            violations.push(json!({ "simplex": tau, "rank": r, "loops": rg.loops(), "types": abc.types }));
        }
        Ok(())
    };
    for tau in &simplices {
        if let Err(e) = run(tau, &mut violations, &mut equality, &mut loops) {
            violations.push(json!({ "simplex": tau, "error": e.to_string() }));
        }
    }
    let verdict = if !violations.is_empty() {
        Verdict::Fail
    } else if truncated {
        Verdict::Inconclusive
    } else {
        Verdict::Pass
    };
    violations.truncate(32);
    Report::new(
        "verify.rank",
        Some((g, p)),
        params,
        verdict,
        json!({
            "simplices": simplices.len(),
            "truncated": truncated,
            "equality_cases": equality,
            "loops": loops,
            "rank_convention": "generator count of the twist subgroup, taken as its rank",
            "violations": violations,
        }),
    )
}

pub fn verify_braid(n: u32) -> Report {
    let params = json!({ "n": n });
    let inner = || -> torelli_core::Result<Report> {
        let pres = BraidPresentation::new(n)?;
        let wd = braid::check_p_well_defined(&pres)?;
        let pz = braid::p_of_center(&pres)?;
        let (za, zb) = braid::center_words(&pres);
        let comm = braid::commensurator_report(n)?;
        let n64 = n as i64;
        let center_ok = pz == [(n64, 0), (0, n64)];
        let failing: Vec<_> = wd.checks.iter().filter(|c| !c.pass).collect();
        Ok(Report::new(
            "verify.braid",
            None,
            params.clone(),
            Verdict::from_bool(wd.pass && center_ok),
            json!({
                "relations": wd.checks.len(),
                "failing_relations": failing,
                "p_center": pz,
                "center_words": [za.to_string(), zb.to_string()],
                "center_a_letters": [za.count(braid::Gen::A), zb.count(braid::Gen::B)],
                "commensurator": comm,
            }),
        ))
    };
    inner().unwrap_or_else(|e| Report::error("verify.braid", None, params, &e))
}

pub fn evidence_name(kind: EvidenceKind) -> &'static str {
    match kind {
        EvidenceKind::D => "d",
        EvidenceKind::E => "e",
        EvidenceKind::F => "f",
    }
}

pub fn verify_connectivity(kind: EvidenceKind, cat: &Catalog) -> (Report, String) {
    let (g, p) = surface_of(cat);
    let params = with_bounds(cat, json!({ "kind": evidence_name(kind), "boundary": [1, 2] }));
    match reconstruction::connectivity_evidence(kind, cat, 1, 2) {
        Ok((r, graph)) => {
            let labels: Vec<String> = r.vertices.iter().map(|u| format!("c{u}")).collect();
            let dot = graph.to_dot(&format!("{}_{g}_{p}", evidence_name(kind)), &labels);
            let comps = graph.components();
            let smallest: Vec<usize> = comps
                .iter()
                .min_by_key(|c| c.len())
                .map(|c| c.iter().map(|&k| r.vertices[k]).collect())
                .unwrap_or_default();
            let verdict = Verdict::from_bool(r.connected && !r.vertices.is_empty());
            let mut cert = serde_json::to_value(&r).expect("report serializes");
            if !r.connected {
                cert["smallest_component"] = json!(smallest);
            }
            (Report::new("verify.connectivity", Some((g, p)), params, verdict, cert), dot)
        }
        Err(e) => (Report::error("verify.connectivity", Some((g, p)), params, &e), String::new()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MotifKind {
    Pentagon,
    Hexagon,
    Sharing,
    Spine,
}

impl MotifKind {
    pub fn name(self) -> &'static str {
        match self {
            MotifKind::Pentagon => "pentagon",
            MotifKind::Hexagon => "hexagon",
            MotifKind::Sharing => "sharing",
            MotifKind::Spine => "spine",
        }
    }
}

fn verdict_of(failures: &[Value], truncated: bool) -> Verdict {
    if !failures.is_empty() {
        Verdict::Fail
    } else if truncated {
        Verdict::Inconclusive
    } else {
        Verdict::Pass
    }
}

pub fn motifs_find(cat: &Catalog, kind: MotifKind, budget: usize) -> Report {
    let check = format!("motifs.{}", kind.name());
    let params = with_bounds(cat, json!({ "budget": budget }));
    let out = match kind {
        MotifKind::Pentagon => pentagons(cat, budget),
        MotifKind::Hexagon => hexagons(cat, budget),
        MotifKind::Sharing => sharing_pairs(cat, budget),
        MotifKind::Spine => spines(cat, budget),
    };
    match out {
        Ok((verdict, cert)) => Report::new(&check, Some(surface_of(cat)), params, verdict, cert),
        Err(e) => Report::error(&check, Some(surface_of(cat)), params, &e),
    }
}

fn pentagons(cat: &Catalog, budget: usize) -> torelli_core::Result<(Verdict, Value)> {
    let view = build_complex(cat, ComplexKind::T);
    let found = motifs::find_pentagons(cat, &view, budget)?;
    let mut failures = Vec::new();
    let mut all_bp = 0;
    let mut patterns = 0;
    for pent in &found.items {
        if pent.vertices.iter().all(|v| matches!(v, Vertex::Bp(..))) {
            all_bp += 1;
        }
        match motifs::pentagon_taxonomy(cat, pent) {
            Ok(t) => patterns += t.patterns.len(),
            Err(e) => failures.push(json!({
                "pentagon": pent.vertices.map(vertex_label),
                "intersections": motifs::certificate(cat, &pent.vertices),
                "error": e.to_string(),
            })),
        }
    }
    let cert = json!({
        "pentagons": found.items.len(),
        "truncated": found.truncated,
        "all_bp": all_bp,
        "root_patterns": patterns,
        "failures": failures,
    });
    Ok((verdict_of(&failures, found.truncated), cert))
}

fn hexagons(cat: &Catalog, budget: usize) -> torelli_core::Result<(Verdict, Value)> {
    let view = build_complex(cat, ComplexKind::Cs);
    let found = motifs::find_hexagons(cat, &view, budget)?;
    let mut failures = Vec::new();
    let mut shared = Vec::new();
    for h in &found.items {
        match motifs::hexagon_shared_curve(cat, h) {
            Ok(c) if c.alpha_intersections == [2, 2, 2] => shared.push(json!({ "hexagon": h.curves, "c": c.c })),
            Ok(c) => failures.push(json!({ "hexagon": h.curves, "alpha_intersections": c.alpha_intersections })),
            Err(e) => failures.push(json!({ "hexagon": h.curves, "error": e.to_string() })),
        }
    }
    let cert = json!({
        "hexagons": found.items.len(),
        "truncated": found.truncated,
        "shared_curves": shared,
        "failures": failures,
    });
    Ok((verdict_of(&failures, found.truncated), cert))
}

fn sharing_pairs(cat: &Catalog, budget: usize) -> torelli_core::Result<(Verdict, Value)> {
    let s = &cat.surface;
    let pairs = motifs::h_pairs_meeting_four_times(cat);
    let truncated = pairs.len() > budget;
    let witnesses_apply = s.euler() <= -4;
    let mut failures = Vec::new();
    let mut found = Vec::new();
    let (mut with_witness, mut inconclusive) = (0, 0);
    for &(u, v) in pairs.iter().take(budget) {
        let (a, b) = (&cat.curves[u], &cat.curves[v]);
        let sp = motifs::is_sharing_pair(s, a, b)?;
        if let Some(sp) = &sp {
            let beta = cat.id_of(&sp.shared);
            if cat.i(u, v) != 4 {
                failures.push(json!({ "pair": [u, v], "i": cat.i(u, v) }));
            }
            found.push(json!({ "pair": [u, v], "beta": beta }));
        }
        if witnesses_apply {
            match motifs::sharing_pair_witnesses(cat, a, b) {
                Ok(Some(_)) => with_witness += 1,
                Ok(None) => {}
                Err(Error::Inconclusive(_)) => inconclusive += 1,
                Err(e) => failures.push(json!({ "pair": [u, v], "error": e.to_string() })),
            }
        }
    }
    let cert = json!({
        "h_pairs_meeting_four_times": pairs.len(),
        "examined": pairs.len().min(budget),
        "truncated": truncated,
        "sharing_pairs": found,
        "witness_search": if witnesses_apply { json!({ "found": with_witness, "inconclusive": inconclusive }) } else { Value::Null },
        "failures": failures,
    });
    Ok((verdict_of(&failures, truncated), cert))
}

fn spines(cat: &Catalog, budget: usize) -> torelli_core::Result<(Verdict, Value)> {
    let found = motifs::find_spines(cat, budget)?;
    let mut failures = Vec::new();
    let mut triple = 0;
    for (ids, sp) in &found.items {
        let [ab, bg, ag] = sp.intersections;
        if ab != 1 || bg != 1 || ag > 1 {
            failures.push(json!({ "spine": ids, "intersections": sp.intersections }));
        }
        triple += sp.triple_point as usize;
    }
    let listed: Vec<&[usize; 3]> = found.items.iter().map(|(ids, _)| ids).take(64).collect();
    let cert = json!({
        "spines": found.items.len(),
        "with_triple_point": triple,
        "truncated": found.truncated,
        "first_spines": listed,
        "failures": failures,
    });
    Ok((verdict_of(&failures, found.truncated), cert))
}

/// Extends a vertex map to non-separating curves and checks the result,
/// against the action of the word when the map comes from one.
pub fn reconstruct(cat: &Catalog, kind: ComplexKind, source: &MapSource) -> Report {
    let params = with_bounds(
        cat,
        json!({
            "view": kind_name(kind),
            "source": match source { MapSource::Word(w) => json!({ "word_tokens": w.len() }), MapSource::Pairs(m) => json!({ "pairs": m.pairs.len() }) },
        }),
    );
    let surface = Some(surface_of(cat));
    let inner = || -> torelli_core::Result<Report> {
        let view = build_complex(cat, kind);
        let (phi, word): (VertexMap, Option<&MappingWord>) = match source {
            MapSource::Word(f) => (reconstruction::induced_map(cat, &view, f)?, Some(f)),
            MapSource::Pairs(m) => (m.clone(), None),
        };
        let pres = reconstruction::preservation_check(cat, &phi);
        if !pres.pass {
            return Ok(Report::new("reconstruct.phi", surface, params.clone(), Verdict::Fail, json!({ "preservation": pres })));
        }
        let m = match reconstruction::phi_extend(cat, &phi) {
            Ok(m) => m,
            Err(e @ Error::Inconsistent(_)) => {
                return Ok(Report::new(
                    "reconstruct.phi",
                    surface,
                    params.clone(),
                    Verdict::Fail,
                    json!({ "preservation": pres, "error": e.to_string() }),
                ))
            }
            Err(e) => return Err(e),
        };
        let bps = (kind == ComplexKind::T).then_some(&phi);
        let simp = reconstruction::verify_simplicial_injective(cat, &m, bps);
        let mut mismatches = Vec::new();
        if let Some(f) = word {
            let act = reconstruction::curve_action(cat, f)?;
            for e in &m.entries {
                if act[e.curve] != Some(e.image) {
                    mismatches.push(json!({ "curve": e.curve, "extended": e.image, "action": act[e.curve] }));
                }
            }
        }
        let mut rules: BTreeMap<String, usize> = BTreeMap::new();
        for e in &m.entries {
            *rules.entry(format!("{:?}", e.rule)).or_default() += 1;
        }
        let pass = simp.pass && mismatches.is_empty();
        mismatches.truncate(32);
        Ok(Report::new(
            "reconstruct.phi",
            surface,
            params.clone(),
            Verdict::from_bool(pass),
            json!({
                "vertices_mapped": phi.pairs.len(),
                "out_of_catalog": phi.out_of_catalog,
                "extended": m.entries.len(),
                "no_witness": m.no_witness.len(),
                "evidence_only": m.evidence_only,
                "rules": rules,
                "simplicial": simp,
                "mismatches": mismatches,
            }),
        ))
    };
    inner().unwrap_or_else(|e| Report::error("reconstruct.phi", surface, params.clone(), &e))
}
