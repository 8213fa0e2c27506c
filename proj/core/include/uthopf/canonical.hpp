#pragma once

// Deterministic text forms used for fingerprints and text output.

#include "uthopf/class_functions.hpp"
#include "uthopf/combinatorics.hpp"
#include "uthopf/scf.hpp"

#include <string>

namespace uthopf {

std::string canonical(const Nuio &pi);
std::string canonical(const SetComposition &a);
std::string canonical(const Laurent &c);
std::string canonical(const ScfElement &x);
std::string canonical(const ScfTensor &x);
std::string canonical(const ClassFunction &psi);
std::string canonical(const ProductFunction &t);
std::string canonical(bool b);

} // namespace uthopf
