use cellforge::census::census;
use cellforge::constructions::chain_A;
use cellforge::kernel::{f_vector, validate_simple_closed};

#[test]
fn chain_a_matches_formulas() {
    for n in 1..=3usize {
        let x = chain_A(n).unwrap();
        let fv = f_vector(&x);
        let v = 560 * n + 40;
        assert_eq!(fv.counts, vec![v, 2 * v, 666 * n + 54, 106 * n + 14], "n = {n}");
        assert_eq!(fv.p6, 30 * n - 30);
        assert_eq!(fv.p5, 6 * fv.counts[3]);
        assert!(validate_simple_closed(&x).passed());
        let c = census(&x).unwrap();
        assert_eq!(c.count("Do"), 94 * n + 26);
        assert_eq!(c.count("F_30"), 12 * n - 12);
        assert_eq!(c.total, x.count(3));
    }
}
