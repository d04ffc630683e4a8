use reslat::corpus::builtin_algebra;
use reslat::enumerate::{enumerate_residuated, hunt, EnumerationTask, HuntOutcome};
use reslat::morphism::is_isomorphic;
use reslat::property::{HuntSpec, PropertyRegistry};
use reslat::AlgebraError;

fn run(spec: &str, size: usize) -> HuntOutcome {
    hunt(&spec.parse::<HuntSpec>().unwrap(), size, &PropertyRegistry::default()).unwrap()
}

#[test]
fn bl_lifting_and_simple_local_are_exhausted() {
    for spec in ["bl=>lifting_boolean_center", "mv=>lifting_boolean_center", "simple=>local", "local=>quasi_local"] {
        match run(spec, 5) {
            HuntOutcome::Exhausted { size, examined } => {
                assert_eq!(size, 5);
                assert_eq!(examined, 1 + 1 + 2 + 7 + 26);
            }
            HuntOutcome::Found { algebra, violation } => panic!("{spec}: {} {violation}", algebra.name()),
        }
    }
}

#[test]
fn quasi_local_reflection_fails_at_five() {
    let HuntOutcome::Found { algebra, .. } = run("dense_quotient_quasi_local=>quasi_local", 5) else {
        panic!("expected a counterexample");
    };
    assert_eq!(algebra.name(), "R5.3.2");
    assert!(is_isomorphic(&algebra, &builtin_algebra("HEYT5").unwrap()));
}

#[test]
fn glivenko_star_equation_lifting_fails_without_mtl() {
    let HuntOutcome::Found { algebra, .. } = run("glivenko,star_equation=>lifting_boolean_center", 5) else {
        panic!("expected a counterexample");
    };
    assert!(is_isomorphic(&algebra, &builtin_algebra("HEYT5").unwrap()));
    assert!(matches!(run("mtl,glivenko,star_equation=>lifting_boolean_center", 5), HuntOutcome::Exhausted { .. }));
    assert!(matches!(
        run("mtl,glivenko,star_equation,dense_quotient_quasi_local=>quasi_local", 5),
        HuntOutcome::Exhausted { .. }
    ));
}

#[test]
fn caps_and_filters() {
    assert!(matches!(enumerate_residuated(6), Err(AlgebraError::EnumerationCapExceeded { n: 6, cap: 5 })));
    assert!(matches!(
        hunt(&"bl=>mv".parse().unwrap(), 6, &PropertyRegistry::default()),
        Err(AlgebraError::EnumerationCapExceeded { .. })
    ));
    assert!(matches!(
        hunt(&"bl=>nonsense".parse().unwrap(), 2, &PropertyRegistry::default()),
        Err(AlgebraError::UnknownProperty(_))
    ));
    let mut task = EnumerationTask::new(5);
    task.filters = vec!["mv".into()];
    let mv = task.run(&PropertyRegistry::default()).unwrap();
    assert!(mv.iter().all(|l| l.is_chain() || l.boolean_center() == l.full()));
    assert_eq!(EnumerationTask::chains(6).run(&PropertyRegistry::default()).unwrap().len(), 94);
}
