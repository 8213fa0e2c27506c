#pragma once

// Symbolic identity checks for the Catalan sub-Hopf algebra.

#include "uthopf/report.hpp"
#include "uthopf/scf.hpp"

namespace uthopf {

/// (xy)z = x(yz) and (Δ ⊗ id)Δ = (id ⊗ Δ)Δ on basis elements of total
/// degree ≤ n_max.
VerificationReport verify_scf_associativity(int n_max);
VerificationReport verify_scf_coassociativity(int n_max);

/// Δ(xy) = Δ(x)Δ(y), total degree ≤ n_max.
VerificationReport verify_scf_compatibility(int n_max);

/// μ(S ⊗ id)Δ = uε = μ(id ⊗ S)Δ on every δ_π with |π| ≤ n_max.
VerificationReport verify_antipode(int n_max);

/// 𝔡 is an involution, reverses products and satisfies
/// (𝔡 ⊗ 𝔡) ∘ swap ∘ Δ = Δ ∘ 𝔡, degrees ≤ n_max.
VerificationReport verify_dagger_symbolic(int n_max);

/// δ_• δ_{a2} ≠ δ_{a2} δ_• and swap(Δ_(3,1)) ≠ Δ_(1,3) on δ_{1<4,2<4}.
VerificationReport verify_noncommutativity();

} // namespace uthopf
