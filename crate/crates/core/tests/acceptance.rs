//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line and
//! asserts its own time budget.
//!
//! Run with `cargo test -p roundfold-core --test acceptance -- --nocapture`
//! to see the report lines.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use roundfold_core::census::{
    brute_force_isomorphic, census_table, census_table_with_workers, enumerate_pages, PageFilter,
};
use roundfold_core::classify::a_equivalent;
use roundfold_core::io::{render_table, TableFormat};
use roundfold_core::manifolds::{GroupDescriptor, ManifoldDescriptor};
use roundfold_core::reeb::standard::{annulus, disk, klein, moebius, sphere, torus};
use roundfold_core::reeb::{
    page_isomorphic, Page, SaddleShape, SurfaceType, TwistLabeling, VertexKind,
};
use roundfold_core::roundfold::{admits_directed, admits_round_fold, RoundFoldDescriptor};

use ManifoldDescriptor::*;

/// Runs a criterion, prints its report line, and fails on a wrong result
/// or a blown time budget.
fn criterion(
    id: u32,
    name: &str,
    budget: Duration,
    check: impl FnOnce() -> Result<String, String>,
) {
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed();
    let in_time = elapsed <= budget;
    let (verdict, detail) = match (&outcome, in_time) {
        (Ok(d), true) => ("PASS", d.clone()),
        (Ok(d), false) => ("FAIL", format!("{d}; over budget {budget:?}")),
        (Err(d), _) => ("FAIL", d.clone()),
    };
    println!("criterion {id} [{name}]: {verdict} ({elapsed:.2?}) {detail}");
    assert!(outcome.is_ok() && in_time, "criterion {id}: {detail}");
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_pages(s_max: u32) -> Vec<Page> {
    enumerate_pages(s_max, PageFilter::default()).unwrap()
}

/// Every descriptor in the round-trip range.
fn descriptor_range() -> Vec<ManifoldDescriptor> {
    let mut out = Vec::new();
    for n in 4..=7 {
        out.push(Sphere { n });
        for a in 0..=4 {
            for b in 0..=4 {
                if a + b > 0 {
                    out.push(HandleSum { n, a, b });
                }
            }
        }
        for g in 0..=4 {
            out.push(SurfaceProduct {
                n,
                sigma: SurfaceType::orientable(g, 0),
            });
        }
        for k in 1..=4 {
            out.push(SurfaceProduct {
                n,
                sigma: SurfaceType::non_orientable(k, 0),
            });
        }
    }
    out.push(TwistedS2S2);
    out
}

/// Z/2 Betti numbers of the model manifolds, from cell structures.
fn betti_mod2(m: &ManifoldDescriptor) -> Vec<i64> {
    let n = m.dimension() as usize;
    let mut b = vec![0i64; n + 1];
    match *m {
        Sphere { .. } => {
            b[0] = 1;
            b[n] = 1;
        }
        HandleSum { a, b: c, .. } => {
            let rho = i64::from(a + c);
            b[0] = 1;
            b[1] += rho;
            b[n - 1] += rho;
            b[n] = 1;
        }
        SurfaceProduct { sigma, .. } => {
            // Kunneth with the closed surface (1, 2 - chi, 1) and S^(n-2).
            let surface = [1, 2 - sigma.euler(), 1];
            for (i, &x) in surface.iter().enumerate() {
                b[i] += x;
                b[i + n - 2] += x;
            }
        }
        TwistedS2S2 => {
            b[0] = 1;
            b[2] = 2;
            b[4] = 1;
        }
    }
    b
}

fn euler_from_betti(m: &ManifoldDescriptor) -> i64 {
    betti_mod2(m)
        .iter()
        .enumerate()
        .map(|(i, &x)| if i % 2 == 0 { x } else { -x })
        .sum()
}

/// One Max, `s - 1` merges, `s` boundary circles, planar and orientable.
fn directed_shape(page: &Page) -> bool {
    let s = page.critical_count();
    let merges = (0..page.vertex_count())
        .filter(|&v| page.saddle_shape(v) == Some(SaddleShape::Merge))
        .count();
    page.count_kind(VertexKind::Max) == 1
        && page.count_kind(VertexKind::SaddleP) == merges
        && merges as u32 == s - 1
        && page.boundary_count() == s
        && page.is_orientable()
        && page.surface_type() == SurfaceType::orientable(0, s)
}

fn in_directed_set(m: &ManifoldDescriptor) -> bool {
    matches!(m, Sphere { .. } | HandleSum { b: 0, .. })
}

#[test]
fn criterion_1_census_baselines() {
    criterion(1, "census baselines", Duration::from_secs(1), || {
        let s1 = all_pages(1);
        ensure(s1.len() == 1 && page_isomorphic(&s1[0], &disk()), || {
            format!("s=1 gave {} classes", s1.len())
        })?;
        let s2: Vec<Page> = all_pages(2)
            .into_iter()
            .filter(|p| p.critical_count() == 2)
            .collect();
        let expected = [sphere(), annulus(), moebius()];
        ensure(s2.len() == 3, || format!("s=2 gave {} classes", s2.len()))?;
        for e in &expected {
            ensure(
                s2.iter().filter(|p| page_isomorphic(p, e)).count() == 1,
                || format!("s=2 layer misses {}", e.summary()),
            )?;
        }

        let table = census_table(5, 2, 0).map_err(|e| e.to_string())?;
        let layer: BTreeSet<ManifoldDescriptor> = table
            .rows
            .iter()
            .filter(|r| r.descriptor.page().critical_count() == 2)
            .map(|r| r.manifold)
            .collect();
        let want: BTreeSet<ManifoldDescriptor> = [
            SurfaceProduct {
                n: 5,
                sigma: SurfaceType::SPHERE,
            },
            HandleSum { n: 5, a: 1, b: 0 },
            HandleSum { n: 5, a: 0, b: 1 },
        ]
        .into();
        ensure(layer == want, || format!("s=2 rows realize {layer:?}"))?;
        let all: BTreeSet<ManifoldDescriptor> = table.rows.iter().map(|r| r.manifold).collect();
        let mut with_disk = want.clone();
        with_disk.insert(Sphere { n: 5 });
        ensure(all == with_disk && table.rows.len() == 4, || {
            format!("s<=2 table realizes {all:?}")
        })?;
        Ok("1 class at s=1, 3 at s=2; census_table(5,2) s=2 rows = {S2 x S3, HandleSum(1,0), HandleSum(0,1)} plus the disk row Sphere n=5".into())
    });
}

#[test]
fn criterion_2_fold_count_euler_identity() {
    criterion(
        2,
        "fold-count Euler identity",
        Duration::from_secs(60),
        || {
            let pages = all_pages(5);
            let mut checked = 0;
            for page in &pages {
                for n in [4u32, 6] {
                    let ks: Vec<i64> = if n == 4 && page_isomorphic(page, &sphere()) {
                        (-3..=3).collect()
                    } else {
                        vec![0]
                    };
                    for k in ks {
                        let rf = RoundFoldDescriptor::new(n, page.clone(), k)
                            .map_err(|e| e.to_string())?;
                        let via_folds = rf.euler_via_folds().map_err(|e| e.to_string())?;
                        let m = rf.build_total_space();
                        ensure(via_folds == m.euler_characteristic(), || {
                            format!(
                                "{}: folds give {via_folds}, {m} has {}",
                                rf,
                                m.euler_characteristic()
                            )
                        })?;
                        ensure(via_folds == euler_from_betti(&m), || {
                            format!("{rf}: Betti oracle disagrees for {m}")
                        })?;
                        checked += 1;
                    }
                }
            }
            Ok(format!("{checked} descriptors over {} pages", pages.len()))
        },
    );
}

#[test]
fn criterion_3_realization_round_trip() {
    criterion(3, "realization round trip", Duration::from_secs(10), || {
        let mut targets = descriptor_range();
        for k in -4..=4 {
            let rf = RoundFoldDescriptor::new(4, sphere(), k).map_err(|e| e.to_string())?;
            targets.push(rf.build_total_space());
        }
        for d in &targets {
            let rf = admits_round_fold(d).ok_or_else(|| format!("no witness for {d}"))?;
            let built = rf.build_total_space();
            ensure(built.equivalent(d), || format!("{d} -> {rf} -> {built}"))?;
        }
        Ok(format!("{} descriptors", targets.len()))
    });
}

#[test]
fn criterion_4_directed_characterization() {
    criterion(
        4,
        "directed characterization",
        Duration::from_secs(60),
        || {
            let pages = all_pages(5);
            let mut shape_mismatch = Vec::new();
            let mut manifold_mismatch = Vec::new();
            for page in &pages {
                let rf = RoundFoldDescriptor::new(5, page.clone(), 0).map_err(|e| e.to_string())?;
                let directed = rf.is_directed().unwrap_or(false);
                if directed != directed_shape(page) {
                    shape_mismatch.push(page.summary());
                }
                let m = rf.build_total_space();
                if directed != in_directed_set(&m) {
                    manifold_mismatch
                        .push(format!("{} -> {m} (directed={directed})", page.summary()));
                }
                // The implication the theory guarantees.
                ensure(!directed || in_directed_set(&m), || {
                    format!("directed page {} builds {m}", page.summary())
                })?;
            }

            for d in descriptor_range() {
                let w = admits_directed(&d);
                ensure(w.is_some() == in_directed_set(&d), || {
                    format!("admits_directed({d}) = {w:?}")
                })?;
                if let Some(w) = w {
                    ensure(
                        w.is_directed() == Ok(true) && w.build_total_space().equivalent(&d),
                        || format!("bad directed witness {w} for {d}"),
                    )?;
                }
            }

            ensure(shape_mismatch.is_empty(), || {
                format!("is_directed disagrees with the shape test on {shape_mismatch:?}")
            })?;
            // Literal three-way equivalence: the manifold leg only holds in the
            // direction directed => {Sphere, HandleSum(a, 0)}; non-directed pages
            // also build spheres and orientable handle sums.
            ensure(manifold_mismatch.is_empty(), || {
                format!(
                "is_directed <=> shape and admits_directed hold, but manifold-set leg fails on {} of {} pages, e.g. {}",
                manifold_mismatch.len(),
                pages.len(),
                manifold_mismatch[0]
            )
            })?;
            Ok(format!("{} pages", pages.len()))
        },
    );
}

#[test]
fn criterion_5_torus_klein_separation() {
    criterion(5, "torus/Klein separation", Duration::from_secs(1), || {
        let (t, k) = (torus(), klein());
        ensure(t.graph().vertices == k.graph().vertices, || {
            "vertex sets differ".into()
        })?;
        let parallel: Vec<bool> = k
            .graph()
            .edges
            .iter()
            .filter(|e| e.low == "v2" && e.high == "v3")
            .map(|e| e.twist)
            .collect();
        ensure(parallel == [false, true], || {
            format!("Klein parallel twists {parallel:?}")
        })?;
        ensure(!page_isomorphic(&t, &k), || {
            "torus and Klein pages isomorphic".into()
        })?;
        ensure(t.is_orientable() && !k.is_orientable(), || {
            "orientability not separated".into()
        })?;
        let mt = RoundFoldDescriptor::new(6, t, 0)
            .unwrap()
            .build_total_space();
        let mk = RoundFoldDescriptor::new(6, k, 0)
            .unwrap()
            .build_total_space();
        ensure(
            mt == SurfaceProduct {
                n: 6,
                sigma: SurfaceType::TORUS,
            } && mk
                == SurfaceProduct {
                    n: 6,
                    sigma: SurfaceType::KLEIN_BOTTLE,
                },
            || format!("built {mt} and {mk}"),
        )?;
        Ok(format!("{mt} vs {mk}"))
    });
}

#[test]
fn criterion_6_dimension_four_clutching() {
    criterion(6, "n=4 clutching", Duration::from_secs(1), || {
        let rfs: Vec<RoundFoldDescriptor> = (-5..=5)
            .map(|k| RoundFoldDescriptor::new(4, sphere(), k).unwrap())
            .collect();
        for x in &rfs {
            for y in &rfs {
                let want = x.clutching().abs() == y.clutching().abs();
                ensure(a_equivalent(x, y) == want, || {
                    format!(
                        "k={} k'={}: a_equivalent={}",
                        x.clutching(),
                        y.clutching(),
                        !want
                    )
                })?;
            }
            let want = if x.clutching() % 2 == 0 {
                SurfaceProduct {
                    n: 4,
                    sigma: SurfaceType::SPHERE,
                }
            } else {
                TwistedS2S2
            };
            ensure(x.build_total_space() == want, || {
                format!("k={} builds {}", x.clutching(), x.build_total_space())
            })?;
        }
        for k in (-5..=5).filter(|&k| k != 0) {
            ensure(RoundFoldDescriptor::new(4, disk(), k).is_err(), || {
                format!("disk page accepted k={k}")
            })?;
        }
        Ok("|k| <= 5".into())
    });
}

#[test]
fn criterion_7_oracle_equivalence() {
    criterion(7, "isomorphism oracle", Duration::from_secs(300), || {
        let pages = all_pages(4);
        let mut pairs = 0;
        for (i, p) in pages.iter().enumerate() {
            for q in &pages[i..] {
                let fast = page_isomorphic(p, q);
                let brute = brute_force_isomorphic(p, q).map_err(|e| e.to_string())?;
                ensure(fast == brute, || {
                    format!(
                        "{} vs {}: page_isomorphic={fast}, oracle={brute}",
                        p.summary(),
                        q.summary()
                    )
                })?;
                pairs += 1;
            }
            // A gauge-moved, relabeled copy must still match.
            let moved = flip_first_vertex(p);
            ensure(
                page_isomorphic(p, &moved) && brute_force_isomorphic(p, &moved) == Ok(true),
                || format!("gauge copy of {} not recognized", p.summary()),
            )?;
        }
        Ok(format!("{pairs} pairs over {} pages", pages.len()))
    });
}

/// Toggles every edge at the top vertex, reversing vertex and edge order.
fn flip_first_vertex(p: &Page) -> Page {
    let top = p.vertex_at_rank(p.critical_count());
    let mut bits: Vec<bool> = p.twists().iter().collect();
    for e in p.incident_edges(top) {
        bits[e] = !bits[e];
    }
    let mut g = p.with_twists(&TwistLabeling::new(bits)).into_graph();
    g.vertices.reverse();
    g.edges.reverse();
    Page::new(g).unwrap()
}

#[test]
fn criterion_8_structural_remarks() {
    criterion(8, "structural remarks", Duration::from_secs(1), || {
        let mut manifolds: Vec<ManifoldDescriptor> = descriptor_range();
        for n in 4..=7 {
            let table = census_table(n, 4, 3).map_err(|e| e.to_string())?;
            manifolds.extend(table.rows.iter().map(|r| r.manifold));
        }
        for m in &manifolds {
            let group = m.fundamental_group();
            let expected = match *m {
                Sphere { .. } | TwistedS2S2 => GroupDescriptor::Trivial,
                HandleSum { a, b, .. } => GroupDescriptor::Free { rank: a + b },
                SurfaceProduct { sigma, .. } if sigma.euler() == 2 => GroupDescriptor::Trivial,
                SurfaceProduct { sigma, .. } => GroupDescriptor::SurfaceGroup { sigma },
            };
            ensure(group == expected, || format!("{m}: {group:?}"))?;
            if m.dimension() % 2 == 0 {
                let chi = m.euler_characteristic();
                ensure(chi % 2 == 0 && chi == euler_from_betti(m), || {
                    format!("{m}: chi={chi}")
                })?;
            }
        }
        Ok(format!("{} manifolds", manifolds.len()))
    });
}

#[test]
fn criterion_9_determinism() {
    criterion(9, "determinism", Duration::from_secs(60), || {
        for (n, s_max) in [(4, 5), (5, 5), (6, 4)] {
            let one = census_table_with_workers(n, s_max, 3, 1).map_err(|e| e.to_string())?;
            let many = census_table_with_workers(n, s_max, 3, 4).map_err(|e| e.to_string())?;
            for format in [TableFormat::Table, TableFormat::Jsonl] {
                ensure(
                    render_table(&one, format) == render_table(&many, format),
                    || format!("n={n} s_max={s_max}: output depends on worker count"),
                )?;
            }
        }
        Ok("1 vs 4 workers, byte-identical".into())
    });
}
