use super::*;
use crate::error::Error;

fn gf(p: u64) -> Field {
    Field::prime(p).unwrap()
}

#[test]
fn rnc_point_samples() {
    let v = rational_normal_curve(3, gf(11)).unwrap();
    assert_eq!(v.amb(), 3);
    let pts = v.sample_points(12, 1).unwrap();
    assert_eq!(pts.len(), 12);
    assert_eq!(pts.span_dim(), 3);
    let small = rational_normal_curve(3, gf(7)).unwrap();
    assert!(matches!(
        small.sample_points(9, 1),
        Err(Error::FieldTooSmall(_))
    ));
}

#[test]
fn rnc_over_rationals() {
    let v = rational_normal_curve(4, Field::Rational).unwrap();
    let pts = v.sample_points(10, 3).unwrap();
    assert_eq!(pts.len(), 10);
    assert_eq!(pts.span_dim(), 4);
    assert!(verify_curve(&v, 5).unwrap().passed());
}

#[test]
fn scroll_and_veronese_shapes() {
    let s = scroll_surface(2, 2, gf(101)).unwrap();
    assert_eq!((s.dim(), s.amb(), s.codim(), s.degree()), (2, 5, 3, 4));
    let s13 = scroll_surface(1, 3, gf(101)).unwrap();
    assert_eq!(s13.amb(), 5);
    let v = veronese_surface(gf(101));
    assert_eq!((v.amb(), v.codim(), v.degree()), (5, 3, 4));
    let pts = v.sample_points(20, 9).unwrap();
    assert_eq!(pts.span_dim(), 5);
}

#[test]
fn scroll_sections_certify() {
    let f = gf(10007);
    for (a, b, k) in [(1, 1, 1), (1, 2, 2), (2, 3, 3), (1, 3, 5)] {
        let v = scroll_section_curve(a, b, k, f, 42).unwrap();
        assert_eq!(v.degree(), a + b + k);
        assert_eq!(v.amb(), (a + b + 1) as usize);
        assert!(verify_curve(&v, 7).unwrap().passed(), "S({a},{b}) k={k}");
    }
}

#[test]
fn elliptic_and_genus2_bases() {
    let f = gf(10007);
    for c in 2..6 {
        let e = elliptic_normal_curve(c, f, 2, 3).unwrap();
        assert_eq!(e.coords().len() as u32, c + 2);
        assert_eq!(e.degree(), c + 2);
        assert!(verify_curve(&e, 1).unwrap().passed());
        let g = hyperelliptic_g2_curve(c, f, &[1, 2, 0, 3, 0, 1]).unwrap();
        assert_eq!(g.coords().len() as u32, c + 2);
        assert!(verify_curve(&g, 1).unwrap().passed());
    }
    assert!(elliptic_normal_curve(3, f, 0, 0).is_err());
    assert!(elliptic_normal_curve(3, Field::Rational, 2, 3).is_err());
    // (x-1)^2 (x^3 + 1) is not squarefree
    assert!(hyperelliptic_g2_curve(3, f, &[1, -2, 1, 1, -2, 1]).is_err());
}

#[test]
fn multisecant_lands_in_expected_space() {
    let f = gf(10007);
    let v = multisecant_projection(4, 4, 0, f, 42).unwrap();
    assert_eq!(v.amb(), 5);
    assert_eq!(v.degree(), 7);
    for (c, k, g) in [(4, 4, 1), (5, 5, 2), (3, 3, 0)] {
        let v = multisecant_projection(c, k, g, f, 42).unwrap();
        assert_eq!(v.amb() as u32, c + 1);
        assert_eq!(v.degree(), c + k - 1);
        assert_eq!(v.genus(), Some(g));
    }
    assert!(matches!(
        multisecant_projection(4, 4, 2, f, 1),
        Err(Error::OutOfRange(_))
    ));
}

#[test]
fn multisecant_certifies() {
    let f = gf(10007);
    let v = multisecant_projection(5, 5, 0, f, 3).unwrap();
    assert!(verify_curve(&v, 2).unwrap().passed());
}

#[test]
fn projection_refuses_low_codimension() {
    let v = rational_normal_curve(3, gf(101)).unwrap();
    assert!(matches!(
        general_projection(&v, 0, 1),
        Err(Error::OutOfRange(_))
    ));
    let w = rational_normal_curve(6, gf(10007)).unwrap();
    let p = general_projection(&w, 1, 4).unwrap();
    assert_eq!(p.amb(), 4);
    assert!(!p.linearly_normal());
}

#[test]
fn projection_through_curve_point_is_rejected() {
    // center on the curve drops the degree
    let f = gf(10007);
    let v = rational_normal_curve(5, f).unwrap();
    let on_curve = v.eval(&[Scalar::one(f), Scalar::from_i64(f, 3)]).unwrap();
    let center = ProjectionCenter::new(f, 5, vec![on_curve]).unwrap();
    assert!(matches!(project(&v, &center), Err(Error::SecantLocus(_))));
}

#[test]
fn descriptors_round_trip() {
    let f = gf(10007);
    let vs = vec![
        rational_normal_curve(4, f).unwrap(),
        scroll_surface(1, 2, f).unwrap(),
        scroll_section_curve(1, 2, 3, f, 9).unwrap(),
        elliptic_normal_curve(3, f, 2, 3).unwrap(),
        multisecant_projection(5, 4, 1, f, 11).unwrap(),
    ];
    for v in vs {
        let d = v.descriptor();
        let back = ParamVariety::from_descriptor(&d).unwrap();
        assert_eq!(back.coords(), v.coords(), "{}", v.label());
    }
}
