#pragma once

// The Hopf monoid of class functions on pattern groups over labelled sets.
//
// An element of cf(A) for a composition A = (A_1, ..., A_l) is stored as a
// class function on the direct sum UT(τ_1) ⊕ ... ⊕ UT(τ_l), which is itself
// the pattern group of the disjoint union of the τ_i.  Tensor factors are
// therefore never split apart; the factorwise maps act through the block
// structure of that one group.

#include "uthopf/class_functions.hpp"
#include "uthopf/report.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace uthopf {

/// UT(τ_1) ⊕ ... ⊕ UT(τ_l) for total orders on disjoint label sets.
GroupPtr direct_sum_group(const std::vector<TotalOrder> &taus, const PrimeField &f);

/// Inflation from UT(ρ) to UT(ρ ∪ X) along the kernel UT(X).
ClassFunction pattern_inflate(const ClassFunction &psi, const std::set<LabelPair> &extra);

/// Def ∘ Res from UT(ρ) through UT(ρ ∩ (Eq(B) ∪ Asc(B))) onto UT(ρ ∩ Eq(B)).
ClassFunction pattern_resflate(const ClassFunction &psi, const SetComposition &b);

/// μ_A: cf(A) → cf[I], inflation along the A-ascents.
ClassFunction monoid_mu(const SetComposition &a, const ClassFunction &psi);

/// Δ_A: cf[I] → cf(A) on a class function of UT(φ), φ total.
ClassFunction monoid_delta(const SetComposition &a, const ClassFunction &psi);

/// ⊗_j μ_{inner|outer_j}: cf(outer ∧ inner) → cf(outer).
ClassFunction monoid_mu_blocks(const SetComposition &outer, const SetComposition &inner,
                               const ClassFunction &psi);

/// ⊗_i Δ_{inner|outer_i}: cf(outer) → cf(outer ∧ inner).
ClassFunction monoid_delta_blocks(const SetComposition &outer, const SetComposition &inner,
                                  const ClassFunction &psi);

/// cf[σ]: ψ on UT(ρ) ↦ ψ ∘ σ⁻¹ on UT(σρ).
ClassFunction species_map(const ClassFunction &psi, const LabelBijection &sigma);

SetComposition relabel_composition(const SetComposition &a, const LabelBijection &sigma);

/// Associativity, coassociativity, compatibility and naturality over every
/// τ, A, B on the ground sets [0], ..., [n_max], each instance checked on
/// the full class-indicator basis of its source.
VerificationReport axiom_suite(int n_max, const PrimeField &f);

/// `count` random instances on a ground set of `size` labels, cycling
/// through the four diagram families.
VerificationReport axiom_random(int size, int count, std::uint32_t seed, const PrimeField &f);

} // namespace uthopf
