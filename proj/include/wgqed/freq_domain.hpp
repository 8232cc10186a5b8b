#pragma once

#include <utility>

#include "wgqed/core.hpp"

namespace wgqed {

// Solves the stationary spectral linear system M(dk) chi = b(dk) on the
// scenario grid by dense LU with partial pivoting, one system per grid point.
SpectralSolution solve_chi(const ValidatedScenario& scn);

// Assembles the outgoing right/left spectra from a solved chi.
void outgoing_spectra(const ValidatedScenario& scn, SpectralSolution& sol);

// solve_chi followed by outgoing_spectra.
SpectralSolution solve_spectra(const ValidatedScenario& scn);

enum class ClosedFormVariant { one_atom, two_atom, two_atom_decay };

// Closed-form outgoing amplitudes for one and two atoms, used as oracles for
// the linear-system route. Overall constants follow from the system solution;
// they fix two slips in the printed two-atom left-moving forms (an overall
// sign, and an overall coupling factor in the decaying variant) that leave
// every magnitude unchanged.
std::pair<cplx, cplx> closed_form_spectra(ClosedFormVariant variant,
                                          const ValidatedScenario& scn, double delta_k);

}  // namespace wgqed
