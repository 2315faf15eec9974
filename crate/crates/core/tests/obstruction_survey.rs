use pointext_core::abelian::FinAbGroup;
use pointext_core::cohomology::{kx_cohomology, Embedding, FiniteGroup, KxCochain};
use pointext_core::obstructions::omega_extends;
use pointext_core::selftest::{raw_inclusion_is_iso, stabilization_holds};

fn groups_up_to_8() -> Vec<(String, FiniteGroup)> {
    let mut out: Vec<(String, FiniteGroup)> = (2..=8).map(|n| (format!("Z/{n}"), FiniteGroup::cyclic(n))).collect();
    for inv in [vec![2, 2], vec![2, 4], vec![2, 2, 2]] {
        out.push((format!("{inv:?}"), FiniteGroup::from_abelian(&FinAbGroup::new(inv).unwrap())));
    }
    out.push(("S3".into(), FiniteGroup::symmetric3()));
    out.push(("D4".into(), FiniteGroup::dihedral(4)));
    out.push(("Q8".into(), FiniteGroup::quaternion()));
    out
}

// Recorded rather than asserted: which classes of H³(N, k×) extend to Γ.
#[test]
fn omega_extension_survey() {
    let mut total = 0;
    let mut extendable = 0;
    for (name, g) in groups_up_to_8() {
        for s in g.subgroups() {
            if s.len() == 1 || s.len() == g.order() {
                continue;
            }
            let emb = Embedding::from_elements(&g, &s).unwrap();
            let h3 = kx_cohomology(&emb.sub, 3).unwrap();
            let mut ext = 0;
            for k in 0..h3.invariants().len() {
                let mut coords = vec![0; h3.invariants().len()];
                coords[k] = 1;
                let r = omega_extends(&emb, &h3.cocycle(&coords).unwrap()).unwrap();
                if r.extendable {
                    assert_eq!(r.class_count, r.kernel_order);
                    ext += 1;
                }
                total += 1;
            }
            extendable += ext;
            println!("{name} ⊃ order {}: {ext}/{} generators extend", s.len(), h3.invariants().len());
            let zero = omega_extends(&emb, &KxCochain::zero(&emb.sub, 3)).unwrap();
            assert!(zero.extendable);
        }
    }
    println!("{extendable} of {total} generators extend");
}

#[test]
fn raw_finite_coefficients_do_not_stabilize_in_degree_two() {
    // ×2 kills the Bockstein part of H²(Z/2, Z/2)
    let g = FiniteGroup::cyclic(2);
    assert!(!raw_inclusion_is_iso(&g, 2, 2).unwrap());
    assert!(raw_inclusion_is_iso(&g, 1, 2).unwrap());
    assert!(stabilization_holds(&g, 2).unwrap());
}
