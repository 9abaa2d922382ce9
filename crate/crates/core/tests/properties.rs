use imbessel::oracle::{oracle_pair, HpReal};
use imbessel::{
    advance, build_table, classify, eval_pair, majorant_bound, required_terms,
    tail_bound, CoeffPair, EvalPoint, Kind, LommelInput, Order, OrderClass, PairResult,
};
use proptest::prelude::*;

fn nu(v: f64) -> Order {
    Order::new(v).unwrap()
}

fn pt(v: f64) -> EvalPoint {
    EvalPoint::new(v).unwrap()
}

fn kind() -> impl Strategy<Value = Kind> {
    prop_oneof![Just(Kind::Oscillatory), Just(Kind::Modified)]
}

fn ln_factorial(n: usize) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn cos_type_even_sin_type_odd(k in kind(), v in 0.0f64..4.0, x in 0.01f64..4.0) {
        let p = eval_pair(k, nu(v), pt(x), 1e-13).unwrap();
        let m = eval_pair(k, nu(-v), pt(x), 1e-13).unwrap();
        prop_assert_eq!(p.cos_part, m.cos_part);
        prop_assert_eq!(p.sin_part, -m.sin_part);
        prop_assert_eq!(p.d_cos, m.d_cos);
        prop_assert_eq!(p.d_sin, -m.d_sin);
    }

    #[test]
    fn modified_table_is_alternating_rotation(v in -5.0f64..5.0, n in 1usize..60, cos_seed: bool) {
        let seed = if cos_seed { (1.0, 0.0) } else { (0.0, 1.0) };
        let osc = build_table(Kind::Oscillatory, seed, nu(v), n).unwrap();
        let md = build_table(Kind::Modified, seed, nu(v), n).unwrap();
        prop_assert_eq!(osc.entries().len(), n + 1);
        for (o, d) in osc.entries().iter().zip(md.entries()) {
            let s = if o.n % 2 == 0 { 1.0 } else { -1.0 };
            prop_assert_eq!(d.a, s * o.a);
            prop_assert_eq!(d.b, s * o.b);
        }
    }

    #[test]
    fn recurrence_step_is_nearly_correctly_rounded(
        k in kind(), v in -6.0f64..6.0, a in -1.0f64..1.0, b in -1.0f64..1.0, n in 0u32..200
    ) {
        let prev = CoeffPair { n, a, b };
        let next = advance(k, &prev, nu(v));
        let bits = 400;
        let (hv, ha, hb) = (HpReal::from_f64(v, bits), HpReal::from_f64(a, bits), HpReal::from_f64(b, bits));
        let m = i64::from(n + 1);
        let hm = HpReal::from_int(m, bits);
        let den = &hm * &(&(&hm * &hm) + &(&hv * &hv));
        let sign = if k == Kind::Oscillatory { -1 } else { 1 };
        let exact_a = (&(&hm * &ha) - &(&hv * &hb)).mul_int(sign);
        let exact_b = (&(&hv * &ha) + &(&hm * &hb)).mul_int(sign);
        for (got, num) in [(next.a, exact_a), (next.b, exact_b)] {
            let exact = &num / &den;
            let err = (&HpReal::from_f64(got, bits) - &exact).abs().to_f64();
            prop_assert!(err <= 2.0 * f64::EPSILON * exact.abs().to_f64() + 1e-300,
                "step {} error {:e} at value {:e}", n + 1, err, got);
        }
    }

    #[test]
    fn majorant_dominates_coefficients(v in -6.0f64..6.0, cos_seed: bool, k in kind()) {
        let seed = if cos_seed { (1.0, 0.0) } else { (0.0, 1.0) };
        let t = build_table(k, seed, nu(v), 60).unwrap();
        for c in t.entries() {
            let m = majorant_bound(nu(v), c.n as usize);
            prop_assert!(c.magnitude() <= m * (1.0 + 1e-12), "n={} {:e} > {:e}", c.n, c.magnitude(), m);
        }
    }

    #[test]
    fn normalized_majorant_ratio(v in -5.0f64..5.0, cos_seed: bool) {
        let seed = if cos_seed { (1.0, 0.0) } else { (0.0, 1.0) };
        let t = build_table(Kind::Oscillatory, seed, nu(v), 40).unwrap();
        let va = v.abs();
        let m = |c: &CoeffPair| {
            let n = c.n as usize;
            (c.magnitude().ln() + 2.0 * ln_factorial(n) - va * (n as f64).ln()).exp()
        };
        for w in t.entries()[1..].windows(2) {
            let n = f64::from(w[1].n);
            let limit = (1.0 + va / n) * (1.0 - 1.0 / n).powf(va);
            let ratio = m(&w[1]) / m(&w[0]);
            prop_assert!(ratio <= limit * (1.0 + 1e-12), "n={} {} > {}", n, ratio, limit);
        }
    }

    #[test]
    fn wronskian_is_nu_over_x(k in kind(), v in -3.0f64..3.0, x in 0.1f64..5.0) {
        let r = eval_pair(k, nu(v), pt(x), 1e-13).unwrap();
        let w = r.cos_part * r.d_sin - r.sin_part * r.d_cos;
        prop_assert!((w - v / x).abs() <= 1e-10 * (1.0 + (v / x).abs()), "{} vs {}", w, v / x);
    }

    #[test]
    fn satisfies_bessel_equation(k in kind(), v in -3.0f64..3.0, x in 0.1f64..5.0) {
        // second-order differencing alone leaves ~1e-5 near x=0.1, |ν|=3
        let h = 1e-4;
        let at = |t: f64| eval_pair(k, nu(v), pt(t), 1e-13).unwrap();
        let (m2, m1, mid, p1, p2) = (at(x - 2.0 * h), at(x - h), at(x), at(x + h), at(x + 2.0 * h));
        let d2 = |f: fn(&PairResult) -> f64| (f(&m2) - 8.0 * f(&m1) + 8.0 * f(&p1) - f(&p2)) / (12.0 * h);
        let sign = k.equation_sign();
        for (y, dy, ddy) in [
            (mid.cos_part, mid.d_cos, d2(|r| r.d_cos)),
            (mid.sin_part, mid.d_sin, d2(|r| r.d_sin)),
        ] {
            let res = x * x * ddy + x * dy + (sign * x * x + v * v) * y;
            prop_assert!(res.abs() <= 1e-6 * (1.0 + y.abs()), "residual {:e} at y={}", res, y);
        }
    }

    #[test]
    fn tail_bound_nonincreasing(v in -6.0f64..6.0, x in 0.01f64..8.0, n in 0usize..80) {
        let b0 = tail_bound(nu(v), pt(x), n);
        let b1 = tail_bound(nu(v), pt(x), n + 1);
        prop_assert!(b1 <= b0, "N={}: {:e} then {:e}", n, b0, b1);
    }

    #[test]
    fn required_terms_monotone(v in -4.0f64..4.0, x in 0.01f64..4.0, dx in 0.0f64..2.0, e in 2.0f64..15.0) {
        let tol = 10f64.powf(-e);
        let n = required_terms(nu(v), pt(x), tol).unwrap();
        prop_assert!(tail_bound(nu(v), pt(x), n) <= tol);
        prop_assert!(required_terms(nu(v), pt(x + dx), tol).unwrap() >= n);
        prop_assert!(required_terms(nu(v), pt(x), tol * 10.0).unwrap() <= n);
    }

    #[test]
    fn small_argument_asymptotics(k in kind(), v in -3.0f64..3.0, e in 4.0f64..12.0) {
        let x = 10f64.powf(-e);
        let r = eval_pair(k, nu(v), pt(x), 1e-15).unwrap();
        let theta = v * x.ln();
        prop_assert!((r.cos_part - theta.cos()).abs() <= 1e-7);
        prop_assert!((r.sin_part - theta.sin()).abs() <= 1e-7);
    }

    #[test]
    fn lommel_construction_solves_the_equation(
        a in -2.0f64..3.0, c in 0.2f64..2.0, beta in 0.5f64..1.5, flip: bool, order in 0.2f64..3.0
    ) {
        let beta = if flip { -beta } else { beta };
        let p = -(a - 1.0) / 2.0;
        let b = p * p + beta * beta * order * order;
        let sol = classify(&LommelInput::new(a, b, c, beta).unwrap());
        let OrderClass::Imaginary(found) = sol.order else {
            return Err(TestCaseError::fail("expected imaginary order"));
        };
        prop_assert!((found - order).abs() <= 1e-12 * (1.0 + order));
        let y = |t: f64| sol.imaginary_basis(pt(t), 1e-13).unwrap().unwrap();
        let h = 1e-3;
        for i in 0..6 {
            let x = 0.5 + 0.3 * f64::from(i);
            let s: Vec<(f64, f64)> = (-2..=2).map(|j| y(x + f64::from(j) * h)).collect();
            for pick in [|v: &(f64, f64)| v.0, |v: &(f64, f64)| v.1] {
                let f: Vec<f64> = s.iter().map(pick).collect();
                let ym = f[2];
                // fourth-order central stencils
                let d1 = (f[0] - 8.0 * f[1] + 8.0 * f[3] - f[4]) / (12.0 * h);
                let d2 = (-f[0] + 16.0 * f[1] - 30.0 * f[2] + 16.0 * f[3] - f[4]) / (12.0 * h * h);
                let res = x * x * d2 + a * x * d1 + (b + c * x.powf(2.0 * beta)) * ym;
                prop_assert!(res.abs() <= 1e-5 * (1.0 + ym.abs()), "x={} residual {:e}", x, res);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn evaluation_within_reported_bound(k in kind(), v in -4.0f64..4.0, x in 0.05f64..3.0, e in 6.0f64..14.0) {
        let tol = 10f64.powf(-e);
        let r = eval_pair(k, nu(v), pt(x), tol).unwrap();
        let (c, s) = oracle_pair(k, nu(v), pt(x)).unwrap();
        prop_assert!((r.cos_part - c).abs() <= r.tail_bound);
        prop_assert!((r.sin_part - s).abs() <= r.tail_bound);
        // truncation meets tol; the rest is the rounding allowance
        prop_assert!(r.tail_bound <= tol + 1e-13);
    }
}

#[test]
fn zero_order_sin_type_vanishes() {
    for &x in &[0.1, 1.0, 3.0] {
        for k in [Kind::Oscillatory, Kind::Modified] {
            let r = eval_pair(k, nu(0.0), pt(x), 1e-14).unwrap();
            assert_eq!(r.sin_part, 0.0);
            assert_eq!(r.d_sin, 0.0);
        }
    }
}
