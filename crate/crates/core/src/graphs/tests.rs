use super::*;

fn p(s: &str) -> Partition {
    if s.is_empty() {
        return Partition::empty();
    }
    s.parse().unwrap()
}

fn row(g: &FilteredGraph, op: &Operator, lam: &str) -> Vec<(String, String)> {
    op.image(&p(lam)).iter().map(|(to, w)| (to.to_string(), w.to_string())).collect::<Vec<_>>()
        .into_iter()
        .map(|(a, b)| {
            let _ = g;
            (a, b)
        })
        .collect()
}

#[test]
fn beta_graph_edges() {
    let g = FilteredGraph::build(GraphKind::BetaY, Param::Formal, Param::Formal, 4);
    let mut up = row(&g, &g.up, "1");
    up.sort();
    assert_eq!(up, [("1".into(), "-b".into()), ("1,1".into(), "1".into()), ("2".into(), "1".into())]);
    let mut down = row(&g, &g.down, "2,1,1");
    down.sort();
    assert_eq!(
        down,
        [("1,1,1".into(), "1".into()), ("2".into(), "b".into()), ("2,1".into(), "1".into())]
    );
    assert_eq!(g.unfolded_up_edges(&p("2,1")).iter().filter(|(t, _)| *t == p("2,1")).count(), 2);
}

#[test]
fn moebius_and_kappa_edges() {
    let g = FilteredGraph::build(GraphKind::MoebiusY, Param::Formal, Param::Formal, 4);
    let mut down: Vec<String> = g.down.image(&p("2,1")).iter().map(|(t, _)| t.to_string()).collect();
    down.sort();
    assert_eq!(down, ["1", "1,1", "2"]);
    // at β = 0 the Cauchy filtration removes horizontal strips
    let g = FilteredGraph::build(GraphKind::KappaY, Param::Int(0), Param::Int(1), 4);
    let mut down: Vec<String> = g.down.image(&p("2,1")).iter().map(|(t, _)| t.to_string()).collect();
    down.sort();
    assert_eq!(down, ["1", "1,1", "2"]);
    let g = FilteredGraph::build(GraphKind::BetaY, Param::Int(0), Param::Formal, 4);
    assert!(g.up.image(&p("2,1")).coefficient(&p("2,1")).is_zero());
}

#[test]
fn commutators() {
    for kind in [GraphKind::BetaY, GraphKind::KappaY, GraphKind::MoebiusY] {
        let g = FilteredGraph::build(kind, Param::Formal, Param::Formal, 5);
        let r = commutator_check(&g, Relation::for_kind(kind)).unwrap();
        assert!(r.passed(), "{r}");
    }
    let g = FilteredGraph::build(GraphKind::BetaY, Param::Formal, Param::Formal, 3);
    assert!(commutator_check(&g, Relation::Eq1PlusD).is_err());
}

#[test]
fn moebius_transform() {
    for n in [0, 1, 4] {
        let r = moebius_from_cauchy(n).unwrap();
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn worked_walks() {
    let g = FilteredGraph::build(GraphKind::BetaY, Param::Int(1), Param::Formal, 5);
    let up = walk_sum(&g, &p("2"), &p("2,1"), 2, Direction::Up).unwrap();
    assert_eq!(up.to_string(), "-3");
    let down = walk_sum(&g, &p("2,1,1"), &p("1"), 2, Direction::Down).unwrap();
    assert_eq!(down.to_string(), "2");
    assert_eq!(walk_sum(&g, &p("2"), &p("2"), 0, Direction::Up).unwrap().to_string(), "1");
    assert!(walk_sum(&g, &p("2"), &p("1"), 0, Direction::Up).unwrap().is_zero());
}

#[test]
fn eulerian_against_permutations() {
    fn descents(perm: &[usize]) -> usize {
        perm.windows(2).filter(|w| w[0] > w[1]).count()
    }
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n);
                out.push(q);
            }
        }
        out
    }
    for i in 0..=5 {
        let ps = perms(i);
        for s in 0..=i {
            let brute = ps.iter().filter(|p| descents(p) == s).count() as u64;
            assert_eq!(eulerian(i, s), brute, "A({i},{s})");
        }
    }
    assert_eq!(eulerian(3, 1), 4);
}

#[test]
fn q_values() {
    assert_eq!(q_coefficient(1, 1, 1).alternating, 1);
    assert_eq!(q_coefficient(1, 0, 1).alternating, 0);
    assert_eq!(q_coefficient(1, 0, 0).alternating, 1);
    for n in 0..=6 {
        for i in 0..=6 {
            for j in 0..=6 {
                let q = q_coefficient(n, i, j);
                assert_eq!(q.alternating, q.eulerian, "q_{n}({i},{j})");
            }
        }
    }
    let q = q_coefficient(2, 1, 0);
    assert_ne!(q.literal, q.alternating);
}

#[test]
fn normal_ordering() {
    for (n, m) in [(1, 1), (1, 2), (2, 2), (3, 1)] {
        let r = normal_ordering_check(NormalOrdering::Weyl, n, m, 6).unwrap();
        assert!(r.passed(), "{r}");
        let r = normal_ordering_check(NormalOrdering::Shifted, n, m, 6).unwrap();
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn enumerative_small() {
    use EnumerativeIdentity as E;
    let r = enumerative_identity_check(E::SignedFf, 2, 2, &p("1"), &p("1"), 6).unwrap();
    assert!(r.passed(), "{r}");
    let r = enumerative_identity_check(E::Fg, 2, 1, &p("1"), &p(""), 6).unwrap();
    assert!(r.passed(), "{r}");
    let r = enumerative_identity_check(E::FrobeniusAnalogue, 2, 2, &p(""), &p(""), 6).unwrap();
    assert!(r.passed(), "{r}");
    for (n, want) in [(1, 1), (2, 3), (3, 13), (4, 75)] {
        assert_eq!(fubini_brute_force(n), want);
        let r = enumerative_identity_check(E::Fubini, 0, n, &p(""), &p(""), 6).unwrap();
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn json_export() {
    let g = FilteredGraph::build(GraphKind::BetaY, Param::Formal, Param::Formal, 1);
    let j = serde_json::to_value(g.to_json()).unwrap();
    assert_eq!(j["vertices"], serde_json::json!(["-", "1"]));
    assert_eq!(j["upEdges"][0], serde_json::json!({"from": "-", "to": "1", "weight": "1"}));
    assert_eq!(j["kind"], "betaY");
}
