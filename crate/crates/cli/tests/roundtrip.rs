use proptest::prelude::*;
use stargeo_cli::expr::{parse, BinOp, Expr, Func};

const IDENTS: [&str; 12] = [
    "sigma1", "sigma2", "theta3", "gamma0", "eta1", "rho1", "q1", "p1", "hbar", "i", "I3", "alpha",
];

const OPS: [BinOp; 6] = [BinOp::Add, BinOp::Sub, BinOp::Star, BinOp::Outer, BinOp::Inner, BinOp::Dot];

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (0i64..50, 1i64..8).prop_map(|(n, d)| Expr::num(n, d)),
        proptest::sample::select(IDENTS.to_vec()).prop_map(Expr::ident),
    ]
}

fn expression() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(5, 48, 3, |inner| {
        prop_oneof![
            inner.clone().prop_map(Expr::neg),
            (proptest::sample::select(OPS.to_vec()), inner.clone(), inner.clone())
                .prop_map(|(op, a, b)| Expr::binary(op, a, b)),
            (inner.clone(), 0u32..6).prop_map(|(e, n)| Expr::pow(e, n)),
            (proptest::sample::select(Func::ALL.to_vec()), inner.clone(), inner).prop_map(|(f, a, b)| {
                let args = if f.arity() == 2 { vec![a, b] } else { vec![a] };
                Expr::call(f, args)
            }),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn format_then_parse_is_identity(e in expression()) {
        let text = e.to_string();
        let back = parse(&text).map_err(|err| TestCaseError::fail(format!("{text}: {err}")))?;
        prop_assert_eq!(&back, &e, "{}", text);
        prop_assert_eq!(back.to_string(), text);
    }
}
