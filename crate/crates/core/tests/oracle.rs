use stringalg::oracle::*;
use stringalg::*;

fn alg(name: &str) -> StringAlgebra {
    StringAlgebra::with_default_signs(load_fixture(name).unwrap()).unwrap()
}

fn s(a: &StringAlgebra, text: &str) -> StringWord {
    parse_string(a.quiver(), text).unwrap()
}

const FIXTURES: &[&str] = &[
    "ex-string-gentle",
    "ex-string-gentle-da",
    "ex-labeled",
    "not-commutative",
    "g1",
    "g2",
    "abd-bc",
    "a2",
    "simple",
];

#[test]
fn string_reps_satisfy_relations() {
    for name in FIXTURES {
        let a = alg(name);
        for w in a.enumerate_strings(6) {
            let r = string_module_rep(a.quiver(), &w);
            assert!(r.satisfies_relations(a.pres()), "{} {}", name, w.display(a.quiver()));
            assert_eq!(r.dims, w.dimension_vector(a.quiver()));
        }
    }
}

#[test]
fn string_rep_shapes() {
    let c = alg("not-commutative");
    let r = string_module_rep(c.quiver(), &s(&c, "b c d^-1 e^-1"));
    assert_eq!(r.dims, vec![0, 1, 1, 1, 1, 1, 0]);
    let d = alg("g1");
    let r = string_module_rep(d.quiver(), &s(&d, "a"));
    assert_eq!(r.dims, vec![1, 1, 0]);
    assert_eq!(r.action[0].get(0, 0), Q::from_integer(1));
    assert_eq!((r.action[1].rows, r.action[1].cols), (1, 0));
}

#[test]
fn oracle_hom_examples() {
    let b = alg("ex-labeled");
    let o = Oracle::new(b.pres());
    let w = o.string_rep(&s(&b, "a7^-1 a8"));
    let v = o.string_rep(&s(&b, "a8 a6^-1"));
    assert_eq!(o.hom(&w, &v), 2);
    assert_eq!(o.hom(&v, &w), 1);
    assert!(o.hom(&w, &w) >= 1);
    let d = alg("g1");
    let o = Oracle::new(d.pres());
    let b = o.string_rep(&s(&d, "b"));
    let s2 = o.string_rep(&StringWord::trivial(1, 1));
    assert_eq!(o.hom(&b, &s2), 1);
}

#[test]
fn oracle_tau_on_g1() {
    let d = alg("g1");
    let o = Oracle::new(d.pres());
    let s1 = o.string_rep(&StringWord::trivial(0, 1));
    let s2 = o.string_rep(&StringWord::trivial(1, 1));
    let t = o.tau(&s1);
    assert_eq!(t.dims, vec![0, 1, 0]);
    assert!(o.same_module(&d, &t, &s2, 4));
    assert!(!o.same_module(&d, &s1, &s2, 1));
    assert!(o.same_module(&d, &s1, &s1, 4));
    for v in 0..3 {
        let p = o.string_rep(&d.projective_string(v));
        assert!(o.is_projective(&p));
        assert!(o.tau(&p).is_zero());
    }
    let p2 = o.string_rep(&s(&d, "b"));
    assert_eq!(o.hom(&p2, &t), 1);
}

#[test]
fn presentations_of_small_modules() {
    let d = alg("g1");
    let o = Oracle::new(d.pres());
    let s1 = o.string_rep(&StringWord::trivial(0, 1));
    let p = min_projective_presentation(d.quiver(), o.table(), &s1);
    assert_eq!((p.p0.clone(), p.p1.clone()), (vec![0], vec![1]));
    let e = alg("g2");
    let o = Oracle::new(e.pres());
    let s2 = o.string_rep(&StringWord::trivial(1, 1));
    let p = min_projective_presentation(e.quiver(), o.table(), &s2);
    assert_eq!((p.p0, p.p1), (vec![1], vec![2]));
}

#[test]
fn algebra_table_is_associative() {
    for name in FIXTURES {
        let p = load_fixture(name).unwrap();
        let t = AlgebraTable::new(&p);
        let n = t.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = t.mul(i, j).and_then(|x| t.mul(x, k));
                    let right = t.mul(j, k).and_then(|y| t.mul(i, y));
                    assert_eq!(left, right);
                }
            }
        }
    }
}

#[test]
fn combinatorial_hom_matches_oracle() {
    for name in FIXTURES {
        let a = alg(name);
        let o = Oracle::new(a.pres());
        let strings = a.enumerate_strings(5);
        let reps: Vec<MatrixRep> = strings.iter().map(|w| o.string_rep(w)).collect();
        for (i, v) in strings.iter().enumerate() {
            for (j, w) in strings.iter().enumerate() {
                assert_eq!(
                    a.hom_dim(v, w),
                    o.hom(&reps[i], &reps[j]),
                    "{}: Hom({}, {})",
                    name,
                    v.display(a.quiver()),
                    w.display(a.quiver())
                );
            }
        }
    }
}

#[test]
fn combinatorial_tau_matches_oracle() {
    for name in FIXTURES {
        let a = alg(name);
        let o = Oracle::new(a.pres());
        for w in a.enumerate_strings(5) {
            let m = o.string_rep(&w);
            let t = a.tau(&w);
            let to = o.tau(&m);
            let label = format!("{}: tau({})", name, w.display(a.quiver()));
            assert_eq!(t.is_zero(), to.is_zero(), "{}", label);
            assert!(o.same_module(&a, &to, &o.string_rep(&t), 6), "{}", label);
            let ti = a.tau_inverse(&w);
            let tio = o.tau_inverse(&m);
            assert_eq!(ti.is_zero(), tio.is_zero(), "{}", label);
            assert!(o.same_module(&a, &tio, &o.string_rep(&ti), 6), "{}", label);
            assert_eq!(a.is_injective(&w), o.is_injective(&m), "{}", label);
            assert_eq!(a.is_projective(&w), o.is_projective(&m), "{}", label);
        }
    }
}

#[test]
fn band_modules_are_tau_fixed() {
    let b = alg("ex-labeled");
    let o = Oracle::new(b.pres());
    for band in b.enumerate_bands(8) {
        for lambda in [1, 2] {
            let m = band_module_rep(b.quiver(), &band.0, Q::from_integer(lambda));
            assert!(m.satisfies_relations(b.pres()));
            let t = o.tau(&m);
            assert!(o.same_module(&b, &t, &m, 6));
        }
    }
}
