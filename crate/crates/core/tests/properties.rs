use proptest::prelude::*;

use twinline::feather::{flip_apply, homotopy_eval, FeatherPoint};
use twinline::homeo::{involutive_multi, move_multi, replay_multi, Generator};
use twinline::kernel::{self, verify_certificate, BasicOpen, OpenSet, Point, SeqDescriptor, Space};
use twinline::multiline::{line_non_separable, MultiLinePoint, SpaceSpec, Wave};
use twinline::numeric::{int, rat, Approach, CofiniteSet, ExtRat, IntervalSet, Open, Rat};
use twinline::separation::{baire_intersect, maximal_hausdorff_at, quasi_compact_subcover, BaireOutcome, DenseFamily};

fn rational() -> impl Strategy<Value = Rat> {
    (-24i64..=24, 1i64..=4).prop_map(|(a, b)| rat(a, b))
}

fn step() -> impl Strategy<Value = Rat> {
    (1i64..=8, 1i64..=4).prop_map(|(a, b)| rat(a, b))
}

fn feather() -> impl Strategy<Value = FeatherPoint> {
    (rational(), prop::collection::vec(step(), 0..4), any::<bool>()).prop_map(|(x, steps, twin)| {
        let mut seq = vec![x];
        for s in steps {
            let next = seq.last().unwrap() + s;
            seq.push(next);
        }
        if twin {
            seq.push(seq.last().unwrap().clone());
        }
        FeatherPoint::new(seq).unwrap()
    })
}

fn interval_set() -> impl Strategy<Value = IntervalSet> {
    prop::collection::vec((rational(), step(), 0u8..6), 0..4).prop_map(|ivs| {
        IntervalSet::from_intervals(
            ivs.into_iter()
                .map(|(lo, len, shape)| match shape {
                    0 => Open::new(ExtRat::NegInf, ExtRat::fin(lo)),
                    1 => Open::new(ExtRat::fin(lo), ExtRat::PosInf),
                    _ => Open::new(ExtRat::fin(lo.clone()), ExtRat::fin(lo + len)),
                })
                .collect(),
        )
    })
}

fn d3_point() -> impl Strategy<Value = MultiLinePoint> {
    ((-6i64..=6, 1i64..=2), 0u32..3).prop_map(|((a, b), l)| MultiLinePoint::new(rat(a, b), l))
}

fn d3_wave() -> impl Strategy<Value = Wave> {
    (interval_set(), prop::collection::vec(d3_point(), 0..3)).prop_map(|(o, lifts)| {
        lifts
            .into_iter()
            .filter(|p| p.is_up() && o.contains(&p.x))
            .fold(Wave::plain(o.clone()), |w, p| w.lifted(p.x, p.level).unwrap())
    })
}

fn d3() -> SpaceSpec {
    SpaceSpec::fold(3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn interval_meet_laws(a in interval_set(), b in interval_set(), c in interval_set(), x in rational()) {
        prop_assert_eq!(a.meet(&b), b.meet(&a));
        prop_assert_eq!(a.meet(&b).meet(&c), a.meet(&b.meet(&c)));
        prop_assert_eq!(a.meet(&a), a.clone());
        prop_assert_eq!(a.meet(&b).contains(&x), a.contains(&x) && b.contains(&x));
        prop_assert_eq!(IntervalSet::from_intervals(a.intervals().to_vec()), a);
    }

    #[test]
    fn prefix_order_is_a_tree(p in feather(), q in feather(), r in feather()) {
        prop_assert!(!p.less(&p));
        if p.less(&q) && q.less(&r) {
            prop_assert!(p.less(&r));
        }
        if p.less(&r) && q.less(&r) {
            prop_assert!(p.comparable(&q));
        }
    }

    #[test]
    fn twins(p in feather(), w in feather()) {
        let t = p.twin();
        prop_assert_eq!(t.twin(), p.clone());
        prop_assert!(!p.comparable(&t));
        prop_assert_eq!(w.less(&p), w.less(&t));
    }

    #[test]
    fn flips_are_involutions(s in feather(), r in feather()) {
        prop_assume!(s.len() >= 2);
        let once = flip_apply(&s, &r).unwrap();
        prop_assert_eq!(flip_apply(&s, &once).unwrap(), r);
    }

    #[test]
    fn homotopy_endpoints(s in feather()) {
        prop_assert_eq!(homotopy_eval(&int(0), &s).unwrap(), s.clone());
        let h1 = homotopy_eval(&int(1), &s).unwrap();
        if s.len() > 1 {
            prop_assert_eq!(h1, FeatherPoint::new(vec![s.first().clone(), s.first().clone()]).unwrap());
        } else {
            prop_assert_eq!(h1, s.clone());
        }
        prop_assert_eq!(homotopy_eval(&int(2), &s).unwrap().len(), 1);
    }

    #[test]
    fn feather_separation_is_symmetric_and_sound(p in feather(), q in feather()) {
        prop_assume!(p != q);
        let f = Space::Feather;
        let (a, b) = (Point::Feather(p.clone()), Point::Feather(q.clone()));
        let (pq, cert) = kernel::separable(&f, &a, &b).unwrap();
        let (qp, _) = kernel::separable(&f, &b, &a).unwrap();
        prop_assert_eq!(pq, qp);
        prop_assert_eq!(pq, p.twin() != q);
        prop_assert!(verify_certificate(&f, &cert));
    }

    #[test]
    fn twins_share_a_convergent_sequence(p in feather()) {
        let lower = if p.is_upper_twin() { p.twin() } else { p.clone() };
        prop_assume!(lower.len() >= 2);
        let f = Space::Feather;
        let seq = SeqDescriptor::feather(lower.prefix(), lower.last().clone(), Approach::FromBelow).unwrap();
        let (a, b) = (Point::Feather(lower.clone()), Point::Feather(lower.twin()));
        prop_assert!(kernel::converges(&f, &seq, &a).unwrap() && kernel::converges(&f, &seq, &b).unwrap());
        prop_assert!(!kernel::separable(&f, &a, &b).unwrap().0);
    }

    #[test]
    fn multiline_separation(p in d3_point(), q in d3_point()) {
        prop_assume!(p != q);
        let s = Space::Multi(d3());
        let (a, b) = (Point::Multi(p.clone()), Point::Multi(q.clone()));
        let (pq, cert) = kernel::separable(&s, &a, &b).unwrap();
        prop_assert_eq!(pq, kernel::separable(&s, &b, &a).unwrap().0);
        prop_assert_eq!(pq, p.x != q.x);
        prop_assert_eq!(!pq, line_non_separable(&p, &q));
        prop_assert!(verify_certificate(&s, &cert));
    }

    #[test]
    fn wave_meet_is_pointwise(w1 in d3_wave(), w2 in d3_wave(), p in d3_point()) {
        let m = w1.meet(&w2);
        prop_assert!(m.check(&d3()).is_ok());
        prop_assert_eq!(m.contains(&p), w1.contains(&p) && w2.contains(&p));
    }

    #[test]
    fn generators_map_waves_to_waves(w in d3_wave(), p in d3_point(), s in rational(), i in 0u32..3, j in 0u32..3) {
        let spec = d3();
        let gens = [Generator::translate(s.clone()), Generator::exchange(s.clone(), i, j), Generator::reflect(s.clone())];
        for g in &gens {
            let gp = g.apply_multi(&spec, &p).unwrap();
            let gw = g.apply_wave(&spec, &w).unwrap();
            prop_assert!(gw.check(&spec).is_ok());
            prop_assert_eq!(w.contains(&p), gw.contains(&gp), "{}", g);
        }
        let back = Generator::translate(-s.clone());
        let moved = gens[0].apply_multi(&spec, &p).unwrap();
        prop_assert_eq!(back.apply_multi(&spec, &moved).unwrap(), p.clone());
        for g in &gens[1..] {
            let twice = g.apply_multi(&spec, &g.apply_multi(&spec, &p).unwrap()).unwrap();
            prop_assert_eq!(twice, p.clone());
        }
    }

    #[test]
    fn multiline_homogeneity(p in d3_point(), q in d3_point()) {
        let spec = d3();
        prop_assert_eq!(replay_multi(&move_multi(&spec, &p, &q).unwrap(), &spec, &p).unwrap(), q.clone());
        let w = involutive_multi(&spec, &p, &q).unwrap();
        prop_assert_eq!(replay_multi(&w, &spec, &p).unwrap(), q.clone());
        prop_assert_eq!(replay_multi(&w, &spec, &q).unwrap(), p.clone());
    }

    #[test]
    fn maximal_opens_verify(p in d3_point(), f in feather()) {
        for (space, x) in [(Space::Multi(d3()), Point::Multi(p)), (Space::Feather, Point::Feather(f))] {
            let (u, cert) = maximal_hausdorff_at(&space, &x).unwrap();
            prop_assert!(kernel::hausdorff_open(&space, &u).unwrap().0);
            prop_assert!(kernel::dense(&space, &u).unwrap().0);
            prop_assert!(verify_certificate(&space, &cert));
        }
    }

    #[test]
    fn baire_on_doubled_maximal_opens(points in prop::collection::vec(d3_point(), 0..6), probe in d3_wave()) {
        prop_assume!(!probe.o().is_empty());
        let s = Space::Multi(d3());
        let opens: Vec<OpenSet> = points
            .iter()
            .map(|p| maximal_hausdorff_at(&s, &Point::Multi(p.clone())).unwrap().0)
            .collect();
        let (out, cert) = baire_intersect(&s, &DenseFamily::Finite(opens), &BasicOpen::Wave(probe)).unwrap();
        let BaireOutcome::Point(Point::Multi(x)) = out else { panic!("finite families meet") };
        prop_assert!(!x.is_up());
        prop_assert!(points.iter().all(|p| p.x != x.x || !p.is_up()));
        prop_assert!(verify_certificate(&s, &cert));
    }

    #[test]
    fn cofinite_subcovers_cover(base in prop::collection::btree_set(0u64..30, 0..5), extra in prop::collection::vec(prop::collection::btree_set(0u64..30, 0..4), 0..4)) {
        let mut cover = vec![CofiniteSet::excluding(base.iter().copied())];
        for e in &base {
            cover.push(CofiniteSet::excluding((0..30).filter(|m| m != e && m % 7 == 3)));
        }
        cover.extend(extra.into_iter().map(CofiniteSet::excluding));
        let (sub, cert) = quasi_compact_subcover(&cover).unwrap();
        prop_assert!(verify_certificate(&Space::Cofinite, &cert));
        for n in 0..=31u64 {
            prop_assert!(sub.iter().any(|s| s.contains(n)), "{} uncovered", n);
        }
    }
}
