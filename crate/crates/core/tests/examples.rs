//! Runs every example in `examples/`.

macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));

            #[test]
            fn runs() {
                run_example();
            }
        }
    };
}

example!(partial_bijections);
example!(standard_morphisms);
example!(bratteli_levels);
example!(quotient_mv);
example!(coordinatize);
example!(dimension_group);
example!(prefix_codes);
example!(cuntz_dyadic);
example!(graph_inverse);
