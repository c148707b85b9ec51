use treecover::graph::parse_graph6;
use treecover::harness::{compute, verify_theorem, verify_theorems, TheoremId};

#[test]
fn reports_do_not_depend_on_thread_count() {
    let ids = [TheoremId::HalfOrder, TheoremId::Bounds, TheoremId::Girth5];
    let run = || {
        ids.iter()
            .map(|&id| {
                let r = verify_theorem(id, id.default_nmax().min(7)).unwrap();
                (r.graphs_checked, r.violations)
            })
            .collect::<Vec<_>>()
    };
    let parallel = run();
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(run);
    assert_eq!(parallel, single);
}

#[test]
fn default_sizes_pass() {
    let selection: Vec<_> = [
        TheoremId::Bounds,
        TheoremId::Certificates,
        TheoremId::LineGraph,
        TheoremId::KTree,
        TheoremId::Forcing,
    ]
    .iter()
    .map(|&id| (id, id.default_nmax()))
    .collect();
    for r in verify_theorems(&selection).unwrap() {
        assert!(r.passed(), "{}: {:?}", r.theorem, r.violations);
        assert!(r.graphs_checked > 0);
    }
}

#[test]
fn budgets_are_enforced() {
    for id in TheoremId::ALL {
        assert!(verify_theorem(id, id.max_nmax() + 1).is_err(), "{id}");
    }
    assert!(verify_theorems(&[(TheoremId::Bounds, 5), (TheoremId::LineGraph, 8)]).is_err());
}

#[test]
fn compute_all_parameters() {
    let g = parse_graph6("Dhc").unwrap();
    let v = compute(
        &g,
        &[
            "n",
            "m",
            "girth",
            "alpha",
            "treewidth",
            "outerplanar",
            "T",
            "P",
            "Z",
            "Zplus",
            "blocks",
            "extremal",
            "bounds",
        ],
    )
    .unwrap();
    assert_eq!(v["n"], 5);
    assert_eq!(v["m"], 5);
    assert_eq!(v["girth"], 5);
    assert_eq!(v["alpha"], 2);
    assert_eq!(v["treewidth"], 2);
    assert_eq!(v["outerplanar"], true);
    assert_eq!(v["T"], 2);
    assert_eq!(v["P"], 2);
    assert_eq!(v["Z"], 2);
    assert_eq!(v["Zplus"], 2);
    assert_eq!(v["extremal"], "NotExtremal");
    assert!(v["bounds"]["bounds"].is_array());
}
