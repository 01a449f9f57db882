//! The registered formulas. Each row pairs a neutral formula id and a short
//! statement with the function that realizes it and the test that checks it.

use super::ConcordanceRow;

macro_rules! row {
    ($id:literal, $formula:literal, $op:literal, $test:literal) => {
        ConcordanceRow { id: $id, formula: $formula, operation: $op, test: $test }
    };
}

pub static REGISTRY: &[ConcordanceRow] = &[
    // the curved-space models
    row!("model.classical-hamiltonian", "classical Hamiltonian on the constant-curvature space, kinetic term deformed by 1 + λr²", "model::potential_v", "pdm_ordering_matches_deformed_operator"),
    row!("model.oscillator-potential", "oscillator potential β(β+λ) r²/(1+λr²) plus centrifugal a(a−1)/r²", "model::potential_v", "deformed_equation_holds"),
    row!("model.coulomb-potential", "Kepler–Coulomb potential −Q√(1+λr²)/r plus centrifugal a(a−1)/r²", "model::potential_v", "deformed_equation_holds"),
    row!("model.quantum-hamiltonian", "quantized Hamiltonian with symmetric ordering of the deformed momentum", "model::wavefunction_psi", "pdm_ordering_matches_deformed_operator"),
    row!("model.radial-equation", "radial equation for the reduced function R = r^{(d−1)/2} ψ", "model::reduced_wavefunction", "radial_equation_holds"),
    row!("model.deformed-equation", "deformed equation −√f d/dr f d/dr √f ψ + Vψ = Eψ with f = √(1+λr²)", "model::wavefunction_psi", "deformed_equation_holds"),
    row!("model.deforming-function", "deforming function f(r) = √(1+λr²)", "model::deforming_f", "deformed_equation_holds"),
    row!("model.energy-shift", "curved energy equals the radial-equation energy shifted by a λ-dependent constant", "model::energy", "radial_equation_holds"),
    row!("model.psi-from-radial", "ψ is the radial function divided by √f (up to the r power)", "model::reduced_wavefunction", "radial_equation_holds"),
    row!("model.parameterized-potentials", "potentials written as V(l, β) and V(l, Q) with a = l + (d−1)/2", "model::potential_v", "deformed_equation_holds"),
    row!("model.pdm-form", "the deformed operator rewritten as a position-dependent-mass Hamiltonian", "model::potential_v", "pdm_ordering_matches_deformed_operator"),
    row!("osc.wavefunction", "oscillator states: power of r, power of f and a Jacobi polynomial in 1/f-type argument", "model::psi_formal", "deformed_equation_holds"),
    row!("osc.energy", "oscillator energies β(4n_r+2a+1) − λ(2n_r+a)²", "model::energy", "oscillator_energy_in_principal_form"),
    row!("osc.energy-principal", "oscillator energies in the principal number n = 2n_r + l", "model::energy", "oscillator_energy_in_principal_form"),
    row!("osc.level-range", "oscillator level range: unbounded on the sphere, bounded by the continuum threshold otherwise", "model::level_bound", "level_bound_is_the_continuum_threshold"),
    row!("kc.energy", "Kepler–Coulomb energies −Q²/(4N²) − λN² with N = n_r + a", "model::energy", "flat_space_energies_are_recovered"),
    row!("kc.wavefunction-sphere-complex", "Kepler–Coulomb states on the sphere via a Jacobi polynomial with complex indices", "specfun::jacobi_complex", "complex_jacobi_reduces_to_real_jacobi"),
    row!("kc.wavefunction-sphere-romanovski", "Kepler–Coulomb states on the sphere via a Romanovski polynomial in the cotangent", "specfun::romanovski_eval", "rosen_morse_jacobi_and_romanovski_forms_are_proportional"),
    row!("kc.wavefunction-hyperbolic", "Kepler–Coulomb states on the hyperbolic space via a real Jacobi polynomial", "model::psi_formal", "deformed_equation_holds"),
    row!("kc.level-range", "Kepler–Coulomb level range: unbounded on the sphere, N² < Q/(2√λ) otherwise", "model::level_bound", "level_bound_is_the_continuum_threshold"),
    row!("model.node-count", "the n_r-th state has n_r interior nodes", "model::spectrum", "nodes_count_the_radial_quantum_number"),
    row!("model.admissibility", "levels beyond the bound or below the ground are rejected", "model::is_admissible", "inadmissible_levels_are_rejected"),
    row!("model.spectrum-numerical", "closed-form spectrum agrees with the discretized deformed operator", "model::spectrum", "spectra_match_the_eigensolver"),
    // deformed supersymmetry
    row!("dsusy.ladder-operators", "deformed ladder operators ∓√f d/dr √f + W", "numerics::apply_ladder", "discrete_ladder_operators_act_as_expected"),
    row!("dsusy.factorization", "H₀ = A⁺A⁻ + ε₀", "dsusy::factorization_residual", "ground_superpotential_factorizes_the_potential"),
    row!("dsusy.superpotential-from-ground", "W = −√f d/dr (√f ψ₀) / ψ₀, built from the ground state", "dsusy::superpotential", "ground_state_is_annihilated"),
    row!("dsusy.partner-hamiltonian", "partner H₁ = A⁻A⁺ + ε₀", "dsusy::partner_potential", "partner_is_the_shifted_potential"),
    row!("dsusy.intertwining", "A⁻H₀ = H₁A⁻ so lowering maps states of H₀ to states of H₁", "dsusy::superpotential", "lowering_operator_maps_states_to_partner_states"),
    row!("dsusy.partner-pair", "V₀ and V₁ equal W² ∓ fW′ + ε₀", "dsusy::partner_potential", "ground_superpotential_factorizes_the_potential"),
    row!("dsusy.oscillator-superpotential", "oscillator superpotential and its ground energy", "dsusy::superpotential", "ground_superpotential_factorizes_the_potential"),
    row!("dsusy.coulomb-superpotential", "Kepler–Coulomb superpotential and its ground energy", "dsusy::superpotential", "ground_superpotential_factorizes_the_potential"),
    row!("dsusy.oscillator-shape-invariance", "oscillator partner equals V(l+1, β−λ) + 2β", "dsusy::partner_closed_form", "partner_is_the_shifted_potential"),
    row!("dsusy.coulomb-shape-invariance", "Kepler–Coulomb partner equals V(l+1, Q)", "dsusy::partner_closed_form", "partner_is_the_shifted_potential"),
    row!("dsusy.parameter-shift", "parameter map of one shape-invariance step", "dsusy::shape_invariance_shift", "partner_is_the_shifted_potential"),
    row!("dsusy.hierarchy", "hierarchy H_i = A⁺(μ_i)A⁻(μ_i) + Σ_{k≤i} ε_k", "dsusy::dsi_chain", "hierarchy_rebuilds_the_spectrum"),
    row!("dsusy.hierarchy-step", "H_{i+1} from H_i by exchanging the factor order", "dsusy::dsi_chain", "hierarchy_rebuilds_the_spectrum"),
    row!("dsusy.hierarchy-ladders", "ladder operators at the shifted parameters μ_i", "dsusy::superpotential", "hierarchy_rebuilds_the_spectrum"),
    row!("dsusy.dsi-operator", "shape invariance stated with the ladder operators", "dsusy::dsi_chain", "hierarchy_rebuilds_the_spectrum"),
    row!("dsusy.dsi-superpotential", "shape invariance stated as W²(μ_i) + fW′(μ_i) = W²(μ_{i+1}) − fW′(μ_{i+1}) + ε_{i+1}", "dsusy::chain_increment", "hierarchy_rebuilds_the_spectrum"),
    row!("dsusy.hierarchy-intertwining", "intertwining between consecutive hierarchy members", "dsusy::dsi_chain", "lowering_operator_maps_states_to_partner_states"),
    row!("dsusy.oscillator-increments", "oscillator shifted parameters and energy increments", "dsusy::chain_increment", "oscillator_increments_are_linear_in_the_step"),
    row!("dsusy.coulomb-increments", "Kepler–Coulomb shifted parameters and energy increments", "dsusy::chain_increment", "coulomb_chain_is_complete_and_keeps_the_coupling"),
    row!("dsusy.energy-sum", "E_n as the sum of the first n+1 increments", "dsusy::energy_from_chain", "hierarchy_rebuilds_the_spectrum"),
    row!("dsusy.chain-truncation", "the chain stops where the shifted system loses its ground state", "dsusy::dsi_chain", "chain_on_hyperbolic_oscillator_stops_at_the_level_bound"),
    // point canonical transformation
    row!("pct.flat-equation", "flat Schrödinger equation −ϕ″ + Uϕ = εϕ", "pct::flat_wavefunction", "flat_states_solve_their_equation"),
    row!("pct.variable-map", "u = ξv + η with v the geodesic distance, ϕ ∝ √f ψ", "pct::u_of_r", "change_of_variable_is_the_scaled_geodesic_distance"),
    row!("pct.potential-energy-map", "V = ξ²U + ζ and E = ξ²ε + ζ", "pct::map_system", "potential_maps_onto_the_target"),
    row!("pct.geodesic-distance", "v(r) as arcsine or arcsinh of √|λ| r", "pct::r_of_u", "change_of_variable_is_the_scaled_geodesic_distance"),
    row!("pct.target-potentials", "the four targets Pöschl–Teller I/II, Rosen–Morse I and Eckart with their A, B, ξ, ζ", "pct::flat_potential_u", "potential_maps_onto_the_target"),
    row!("pct.target-energies", "bound-state energies of the four targets and their level bounds", "pct::flat_spectrum", "energies_map_onto_the_target"),
    row!("pct.target-energies-closed", "target energies checked at explicit parameter values", "pct::flat_spectrum", "flat_energies_in_closed_form"),
    row!("pct.target-level-counts", "Pöschl–Teller II and Eckart level counts", "pct::flat_spectrum", "flat_level_counts_follow_the_bounds"),
    row!("pct.target-wavefunctions", "bound states of the four targets in Jacobi and Romanovski form", "pct::flat_wavefunction", "flat_states_solve_their_equation"),
    row!("pct.state-transport", "curved states are transported flat states", "pct::flat_wavefunction", "states_are_transported"),
    row!("pct.targets-numerical", "target spectra agree with the discretized flat operator", "pct::flat_spectrum", "flat_families_match_the_eigensolver"),
    // rational extensions: oscillator side
    row!("rat.pt1-seeds", "Pöschl–Teller I seed solutions of types I, II, III", "rational::seed_function", "seed_solves_the_parent_equation"),
    row!("rat.pt1-partners", "flat partner pair built from a nodeless seed", "rational::extended_potential", "extended_potential_is_the_seed_partner"),
    row!("rat.pt1-rational-part", "flat rational part −2 d²/du² log of the seed polynomial", "rational::v_rat", "extended_potential_is_the_seed_partner"),
    row!("rat.pt1-seed-polynomial", "seed polynomial per type in the cos 2u variable", "rational::seed_function", "seed_solves_the_parent_equation"),
    row!("rat.pt1-extended-energies", "flat extended energies for types I/II and III", "rational::extended_energy", "extended_levels_follow_the_conventional_partner"),
    row!("rat.pt1-extended-states", "flat extended states as weighted ratios of polynomials", "rational::extended_wavefunction", "extended_states_solve_the_extended_equation"),
    row!("rat.osc-seed", "curved oscillator seed χ_m and its seed energy", "rational::seed_energy", "seed_solves_the_parent_equation"),
    row!("rat.osc-partners", "curved oscillator partner pair from the seed", "rational::extended_potential", "extended_potential_is_the_seed_partner"),
    row!("rat.osc-rational-part", "curved oscillator rational part from the seed polynomial", "rational::v_rat", "extended_potential_is_the_seed_partner"),
    row!("rat.osc-primed-parameters", "primed parameters l′, β′, seed polynomial p_m and shift γ", "rational::prime_parent", "extended_potential_is_the_seed_partner"),
    row!("rat.osc-extended-energies-iso", "types I/II: extended levels equal the primed conventional levels", "rational::extended_spectrum", "extended_levels_follow_the_conventional_partner"),
    row!("rat.osc-extended-energies-extra", "type III: one extra level below the primed conventional levels", "rational::extended_spectrum", "extended_levels_follow_the_conventional_partner"),
    row!("rat.osc-extended-states", "curved oscillator extended states", "rational::extended_wavefunction", "extended_states_solve_the_extended_equation"),
    row!("rat.osc-q-family", "oscillator polynomials 𝒬 for types I, II, III", "rational::q_polynomial", "oscillator_q_family_is_orthogonal_under_its_weight"),
    row!("rat.q-extra-level", "the extra type III level has 𝒬 = 1", "rational::q_polynomial", "extended_states_have_sturm_node_counts"),
    row!("rat.construction-superpotential", "superpotential W^{(m)} built from the primed seed", "rational::construction_superpotential", "extended_potential_is_the_seed_partner"),
    row!("rat.construction-superpotential-types", "W^{(m)} written per extension type", "rational::construction_superpotential", "extended_potential_is_the_seed_partner"),
    row!("rat.osc-partner-identity", "V_ext + γ = V(l′, β′) + 2fW^{(m)}′", "rational::extended_partner", "extended_potential_is_the_seed_partner"),
    row!("rat.extended-superpotential", "extended superpotential from the extended ground state", "rational::extended_superpotential", "extended_superpotential_and_shape_invariance"),
    row!("rat.extended-ground", "extended ground state", "rational::extended_wavefunction", "extended_superpotential_and_shape_invariance"),
    row!("rat.q0-forms", "ground polynomial 𝒬₀ in two equivalent forms", "rational::q0_closed_form", "ground_polynomial_ratio_identities"),
    row!("rat.q0-ratios", "𝒬₀ ratio identities for types I and II", "rational::q0_closed_form", "ground_polynomial_ratio_identities"),
    row!("rat.extended-superpotential-closed", "closed form of the extended superpotential", "rational::extended_superpotential", "extended_superpotential_and_shape_invariance"),
    row!("rat.osc-extended-si", "oscillator extended shape invariance", "rational::extended_partner_closed_form", "extended_superpotential_and_shape_invariance"),
    row!("rat.osc-diagrams", "curved and flat constructions commute through the transformation", "rational::extended_potential", "extended_potential_is_the_seed_partner"),
    row!("rat.orthogonality", "extended states are mutually orthogonal", "rational::extended_wavefunction", "extended_states_are_orthogonal"),
    row!("rat.admissibility", "seed-polynomial zeros outside the physical interval and walls reported", "rational::is_extended_admissible", "admissibility_walls_are_reported"),
    row!("rat.numerical", "extended spectra agree with the discretized operator", "rational::extended_spectrum", "spectra_match_the_eigensolver"),
    // rational extensions: Kepler–Coulomb side
    row!("rat.eckart-seeds", "Eckart seed solutions", "rational::seed_function", "seed_solves_the_parent_equation"),
    row!("rat.eckart-partners", "Eckart partner pair from the seed", "rational::extended_potential", "extended_potential_is_the_seed_partner"),
    row!("rat.eckart-rational-part", "Eckart rational part", "rational::v_rat", "extended_potential_is_the_seed_partner"),
    row!("rat.eckart-seed-polynomial", "Eckart seed polynomial per type", "rational::seed_function", "seed_solves_the_parent_equation"),
    row!("rat.eckart-extended-energies", "Eckart extended energies", "rational::extended_energy", "extended_levels_follow_the_conventional_partner"),
    row!("rat.kc-seed", "curved Kepler–Coulomb seed χ_m and seed energy", "rational::seed_energy", "seed_solves_the_parent_equation"),
    row!("rat.kc-partners", "curved Kepler–Coulomb partner pair", "rational::extended_potential", "extended_potential_is_the_seed_partner"),
    row!("rat.kc-rational-part", "curved Kepler–Coulomb rational part", "rational::v_rat", "extended_potential_is_the_seed_partner"),
    row!("rat.kc-seed-polynomial", "Kepler–Coulomb seed polynomial p_m", "rational::seed_function", "seed_solves_the_parent_equation"),
    row!("rat.kc-extended-energies", "Kepler–Coulomb extended energies", "rational::extended_energy", "extended_levels_follow_the_conventional_partner"),
    row!("rat.kc-extended-states-1", "type I Kepler–Coulomb extended states with 𝒬", "rational::extended_wavefunction", "extended_states_solve_the_extended_equation"),
    row!("rat.kc-extended-states-23", "type II/III Kepler–Coulomb extended states with 𝒬", "rational::extended_wavefunction", "extended_states_solve_the_extended_equation"),
    row!("rat.kc-q-extra-level", "Kepler–Coulomb extra type III level has 𝒬 = 1", "rational::extended_quantum_numbers", "extended_states_have_sturm_node_counts"),
    row!("rat.kc-construction-superpotential", "Kepler–Coulomb W^{(m)} per type", "rational::construction_superpotential", "extended_potential_is_the_seed_partner"),
    row!("rat.kc-partner-identity", "V_ext = V(l′) + 2fW^{(m)}′", "rational::extended_partner", "extended_potential_is_the_seed_partner"),
    row!("rat.kc-extended-ground", "Kepler–Coulomb extended ground state for types I and II", "rational::extended_wavefunction", "extended_superpotential_and_shape_invariance"),
    row!("rat.kc-extended-superpotential", "Kepler–Coulomb extended superpotential for types I and II", "rational::extended_superpotential", "extended_superpotential_and_shape_invariance"),
    row!("rat.kc-edsi", "enlarged shape invariance with m → m∓1", "rational::extended_partner_closed_form", "extended_superpotential_and_shape_invariance"),
    row!("rat.kc-diagrams", "Kepler–Coulomb curved and flat constructions commute", "rational::extended_potential", "extended_potential_is_the_seed_partner"),
    // flat limits
    row!("lim.jacobi-laguerre", "Jacobi polynomials tend to Laguerre polynomials as the second index grows", "specfun::laguerre_eval", "jacobi_approaches_laguerre_for_large_second_index"),
    row!("lim.osc-states", "oscillator states reach the flat Laguerre forms", "model::psi_formal", "conventional_states_reach_laguerre_forms"),
    row!("lim.seed-polynomials", "seed polynomials reach Laguerre denominators", "limits::flat_v_rat", "flat_rational_part_is_a_log_curvature"),
    row!("lim.rational-part", "rational part reaches its flat counterpart", "limits::flat_v_rat", "curved_extensions_approach_their_flat_limits"),
    row!("lim.extended-states", "extended states reach their flat counterparts", "limits::flat_extended_wavefunction", "flat_extended_states_solve_their_equation"),
    row!("lim.q-family", "𝒬 polynomials reach flat exceptional-Laguerre forms", "limits::q_at_t", "flat_extended_states_solve_their_equation"),
    row!("lim.argument-transformation", "argument transformation between Jacobi forms", "specfun::jacobi_eval", "jacobi_argument_transformation"),
    row!("lim.kc-alternative-states", "Kepler–Coulomb states in the transformed Jacobi form", "model::psi_formal", "conventional_states_reach_laguerre_forms"),
    row!("lim.kc-states", "Kepler–Coulomb states reach the flat hydrogen forms", "model::psi_formal", "conventional_states_reach_laguerre_forms"),
    row!("lim.kc-barred-seed", "Kepler–Coulomb seed polynomial in the transformed form", "limits::denominator", "flat_rational_part_is_a_log_curvature"),
    row!("lim.kc-rational-part", "Kepler–Coulomb rational part reaches the flat one", "limits::flat_v_rat", "curved_extensions_approach_their_flat_limits"),
    row!("lim.kc-seed-limit", "transformed seed polynomial reaches the Laguerre denominator", "limits::denominator", "flat_rational_part_is_a_log_curvature"),
    row!("lim.kc-extended-states", "Kepler–Coulomb extended states reach the flat ones", "limits::flat_extended_wavefunction", "flat_extended_states_solve_their_equation"),
    row!("lim.kc-q-limit", "final limit of the transformed 𝒬", "limits::q_at_t", "flat_extended_states_solve_their_equation"),
    row!("lim.energies", "curved energies reach flat energies", "limits::flat_extended_energy", "curved_energies_reach_flat_energies"),
    row!("lim.flat-enlarged-si", "flat enlarged shape invariance", "limits::flat_enlarged_si", "flat_enlarged_shape_invariance"),
    row!("lim.flat-spectra", "flat extended spectra agree with the eigensolver", "limits::flat_extended_spectrum", "flat_spectra_match_the_eigensolver"),
    row!("lim.flat-admissibility", "flat admissibility of the extensions", "limits::admissibility", "flat_admissibility"),
    row!("lim.convergence", "first-order convergence in λ of the curved extensions", "limits::convergence_study", "curved_extensions_approach_their_flat_limits"),
];
