//! ZX-dualities from lattice reflections and the fold-transversal
//! Hadamard- and phase-type gates they induce, on full and pruned codes.

use qcode::construct::{bb_code, hgp_intersecting_basis};
use qcode::fold::{
    find_reflection_duality, hadamard_type_circuit, phase_type_circuit, reflection_dualities, restrict_and_verify,
    verify_logical_gate,
};
use qcode::poly::{BiPoly, RingParams, UniPoly};
use qcode::prune::prune_reduced;

fn main() -> qcode::Result<()> {
    let a: BiPoly = "1 + x + x^2".parse()?;
    let b: BiPoly = "1 + y + y^2".parse()?;
    let lc = bb_code(&a, &b, RingParams::new(6, 6)?);
    let sigma = find_reflection_duality(&lc)?.expect("symmetric code");
    let (fixed, pairs) = sigma.orbits()?;
    println!("duality: {} fixed qubits, {} swapped pairs", fixed.len(), pairs.len());

    let h = verify_logical_gate(&lc.code, &hadamard_type_circuit(&sigma)?)?;
    println!("hadamard-type valid: {}", h.valid);
    let s = verify_logical_gate(&lc.code, &phase_type_circuit(&lc, &sigma)?)?;
    let act = s.action.expect("valid gate has an action");
    println!("phase-type valid: {}, logical phases {:?}", s.valid, act.phases);

    // Restrict to the reduced pruning with a duality that keeps its qubits.
    let poly: UniPoly = "1 + x + x^2".parse()?;
    let pruning = prune_reduced(&poly, &poly, RingParams::new(6, 6)?)?;
    let keep = &pruning.spec.keep_qubits;
    let sigma = reflection_dualities(&pruning.parent)?
        .into_iter()
        .find(|s| s.preserves(keep))
        .expect("a compatible duality");
    let circuit = phase_type_circuit(&pruning.parent, &sigma)?;
    let rep = restrict_and_verify(&pruning.parent, &circuit, &pruning.spec)?;
    println!(
        "restricted to [[{},{}]]: valid {}, {} gates dropped",
        pruning.code.n(),
        pruning.code.k(),
        rep.valid,
        rep.dropped_gates
    );

    let basis = hgp_intersecting_basis(&pruning.parent)?;
    let alive = basis.labels.iter().filter(|q| keep.binary_search(q).is_ok()).count();
    println!("label qubits surviving: {alive} of {}", basis.labels.len());
    Ok(())
}
