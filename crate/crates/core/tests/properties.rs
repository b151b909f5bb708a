use faircut::families::random_instance;
use faircut::format::{parse_instance, write_instance};
use faircut::graph::{Cut, Graph, GroupPartition, PartitionKind};
use faircut::heuristics::{default_group_oracle, is_locally_optimal, local_search_cut, separate_solve};
use faircut::rational::{self, rat, Rational};
use faircut::utility::{ground_utility, group_utility};
use faircut::{solve_matrix_game, Enumerator, Mode, Objective, UtilityModel};
use proptest::prelude::*;

fn kind_strategy() -> impl Strategy<Value = PartitionKind> {
    prop_oneof![Just(PartitionKind::Edge), Just(PartitionKind::Node)]
}

prop_compose! {
    fn instance()(n in 2usize..=8, p in 0.2f64..0.9, groups in 1usize..=3, kind in kind_strategy(), seed in any::<u64>())
        -> faircut::families::NamedInstance {
        random_instance(n, p, groups, kind, seed)
            .or_else(|_| random_instance(n, p, 1, kind, seed))
            .unwrap()
    }
}

/// Exact maximin of a 2-row game: the best pure column, or the crossing point
/// of two columns' payoff lines.
fn two_row_oracle(m: &[Vec<Rational>]) -> Rational {
    let cols = m[0].len();
    let mut best = (0..cols).map(|k| m[0][k].clone().min(m[1][k].clone())).max().unwrap();
    for j in 0..cols {
        for k in 0..cols {
            // p on column j, 1 − p on column k; row gap is linear in p
            let dj = &m[0][j] - &m[1][j];
            let dk = &m[0][k] - &m[1][k];
            if dj == dk {
                continue;
            }
            let p = -&dk / (&dj - &dk);
            if p < rat(0, 1) || p > rat(1, 1) {
                continue;
            }
            let v = &p * &m[0][j] + (rat(1, 1) - &p) * &m[0][k];
            if v > best {
                best = v;
            }
        }
    }
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_text_round_trip(n in -10_000i64..10_000, d in 1i64..10_000) {
        let r = rat(n, d);
        prop_assert_eq!(rational::parse(&rational::format(&r)), Some(r));
    }

    #[test]
    fn complement_and_additivity(inst in instance(), mask in any::<u64>()) {
        let n = inst.graph.vertex_count();
        let cut = Cut::from_mask(n, mask & ((1u64 << n) - 1));
        let comp = cut.complement();
        let mut total = Rational::from_integer(0.into());
        for group in inst.partition.groups() {
            let a = group_utility(&inst.graph, inst.model, &cut, group).unwrap();
            let b = group_utility(&inst.graph, inst.model, &comp, group).unwrap();
            prop_assert_eq!(&a, &b);
            total += a;
        }
        prop_assert_eq!(total, ground_utility(&inst.graph, inst.model, &cut).unwrap());
    }

    #[test]
    fn chain_holds(inst in instance()) {
        let r = Enumerator::default().all_objectives(&inst.graph, inst.model, &inst.partition).unwrap();
        prop_assert!(r.sf_mp.objective <= r.df_mp.value && r.df_mp.value <= r.mp);
        prop_assert!(r.sf_mv.objective <= r.df_mv.value && r.df_mv.value <= r.mv);
        prop_assert_eq!(&r.df_mp.primal_value, &r.df_mp.dual_value);
        if inst.partition.len() == 1 {
            prop_assert_eq!(&r.sf_mp.objective, &r.mp);
            prop_assert_eq!(&r.df_mp.value, &r.mp);
        }
    }

    #[test]
    fn column_order_does_not_change_the_value(inst in instance(), rotate in 0usize..1000) {
        let m = Enumerator::default().payoff_matrix(&inst.graph, inst.model, &inst.partition, Mode::Proportion).unwrap();
        let base = solve_matrix_game(&m.rows).unwrap().value;
        let k = m.cut_count();
        let shuffled: Vec<Vec<Rational>> = m.rows.iter().map(|row| {
            let mut r: Vec<Rational> = row.iter().rev().cloned().collect();
            r.rotate_left(rotate % k);
            r
        }).collect();
        prop_assert_eq!(solve_matrix_game(&shuffled).unwrap().value, base);
    }

    #[test]
    fn two_row_games_match_oracle(entries in prop::collection::vec((-6i64..7, 1i64..4), 2..14)) {
        let cols = entries.len() / 2;
        prop_assume!(cols >= 1);
        let m: Vec<Vec<Rational>> = (0..2)
            .map(|i| (0..cols).map(|k| { let (a, b) = entries[i * cols + k]; rat(a, b) }).collect())
            .collect();
        let s = solve_matrix_game(&m).unwrap();
        prop_assert_eq!(&s.value, &two_row_oracle(&m));
        prop_assert_eq!(s.column_probabilities.iter().sum::<Rational>(), rat(1, 1));
    }

    #[test]
    fn separate_solve_meets_floor(inst in instance()) {
        let out = separate_solve(&inst.graph, inst.model, &inst.partition, &default_group_oracle).unwrap();
        prop_assert!(out.score.minimum >= out.guarantee);
        prop_assert_eq!(out.distribution.entries().map(|(_, p)| p.clone()).sum::<Rational>(), rat(1, 1));
    }

    #[test]
    fn local_search_is_locally_optimal(n in 1usize..=12, p in 0.0f64..1.0, seed in any::<u64>(), start in any::<u64>()) {
        let g = random_instance(n.max(2), p, 1, PartitionKind::Node, seed).map(|i| i.graph)
            .unwrap_or_else(|_| Graph::new(n, []).unwrap());
        let vc = g.vertex_count();
        let init = Cut::from_mask(vc, start & ((1u64 << vc) - 1));
        let order: Vec<usize> = (0..vc).rev().collect();
        let cut = local_search_cut(&g, init, &order);
        prop_assert!(is_locally_optimal(&g, &cut));
    }

    #[test]
    fn instance_text_round_trip(inst in instance()) {
        let text = write_instance(&inst);
        prop_assert_eq!(parse_instance(&text).unwrap(), inst);
    }
}

#[test]
fn objectives_agree_with_single_calls() {
    let inst = random_instance(7, 0.5, 2, PartitionKind::Edge, 3).unwrap();
    let e = Enumerator::default();
    let r = e.all_objectives(&inst.graph, inst.model, &inst.partition).unwrap();
    for o in Objective::ALL {
        assert_eq!(&e.objective(&inst.graph, inst.model, &inst.partition, o).unwrap(), r.value(o));
    }
    let single = GroupPartition::whole(&inst.graph, PartitionKind::Edge).unwrap();
    assert_eq!(e.objective(&inst.graph, UtilityModel::Edge, &single, Objective::DfMp).unwrap(), r.mp);
}
