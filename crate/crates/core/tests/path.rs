use map_core::path::*;

#[test]
fn validation_examples() {
    let p = validate_path(Family::M1, &[Step::Up(1), Step::Flat, Step::Flat, Step::Down(1)]).unwrap();
    assert_eq!(p.end_height(), 0);
    assert_eq!(p.heights(), &[0, 1, 1, 1, 0]);
    assert_eq!(validate_path(Family::M1, &[Step::Down(1)]), Err(PathError::NegativeHeight(0)));
    assert_eq!(validate_path(Family::M2, &[Step::Flat, Step::Flat]), Err(PathError::PositionalViolation(0)));
}

#[test]
fn error_precedence_and_indices() {
    assert_eq!(validate_path(Family::M1, &[Step::Up(2)]), Err(PathError::IllegalStep(0)));
    assert_eq!(validate_path(Family::M1R, &[Step::Up(2), Step::Down(2)]), Err(PathError::IllegalStep(1)));
    assert_eq!(
        validate_path(Family::M1, &[Step::Up(1), Step::Up(1), Step::Down(1), Step::Down(1)]),
        Err(PathError::AdjacencyViolation(2))
    );
    // M2R: the flat step lacks a preceding D
    assert_eq!(validate_path(Family::M2R, &[Step::Up(1), Step::Flat]), Err(PathError::PositionalViolation(1)));
    assert_eq!(validate_path(Family::M2, &[Step::Down(1)]), Err(PathError::NegativeHeight(0)));
    assert!(validate_path(Family::M2, &[Step::Flat]).is_ok());
    assert!(validate_path(Family::M2R, &[Step::Up(3), Step::Down(1), Step::Up(1)]).is_ok());
}

#[test]
fn last_step_classes() {
    let e = validate_path(Family::M1, &[]).unwrap();
    assert_eq!(last_step_class(&e), StepClass::Empty);
    let p = validate_path(Family::M1, &[Step::Up(1), Step::Down(1)]).unwrap();
    assert_eq!(p.last_step_class(), StepClass::D);
    let p = validate_path(Family::M2R, &[Step::Up(3), Step::Down(1)]).unwrap();
    assert_eq!(p.last_step_class(), StepClass::D);
}

#[test]
fn parse_and_render() {
    let p = parse_path(Family::M1, "U H H D").unwrap();
    assert_eq!((p.len(), p.end_height()), (4, 0));
    let p = parse_path(Family::M2, "U U D2").unwrap();
    assert_eq!(p.end_height(), 0);
    assert_eq!(render_path(&p), "U U D2");
    assert_eq!(parse_path(Family::M1R, "U2 U1 D"), Err(ParseError::Invalid(PathError::AdjacencyViolation(0))));
    assert!(matches!(parse_path(Family::M1, "U0"), Err(ParseError::Syntax { position: 0, .. })));
    assert!(matches!(parse_path(Family::M1, "U X"), Err(ParseError::Syntax { position: 1, .. })));
    assert!(matches!(parse_path(Family::M1, "Ux"), Err(ParseError::Syntax { .. })));
    assert_eq!(render_path(&parse_path(Family::M1R, "U1 D H").unwrap()), "U D H");
}

#[test]
fn family_tags() {
    for f in Family::ALL {
        assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        assert_eq!(f.mirror().mirror(), f);
    }
    assert!("m3".parse::<Family>().is_err());
}
