#include "uthopf/scf_checks.hpp"

#include "uthopf/canonical.hpp"

#include <map>
#include <tuple>

namespace uthopf {

namespace {

using Triple = std::map<std::tuple<Nuio, Nuio, Nuio>, Laurent>;

void add(Triple &t, const Nuio &a, const Nuio &b, const Nuio &c, const Laurent &v) {
  if (v.is_zero())
    return;
  auto [it, fresh] = t.emplace(std::make_tuple(a, b, c), v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero())
      t.erase(it);
  }
}

std::string canonical_triple(const Triple &t) {
  std::string out;
  for (const auto &[k, v] : t)
    out += canonical(std::get<0>(k)) + "|" + canonical(std::get<1>(k)) + "|" + canonical(std::get<2>(k)) + "=" +
           canonical(v) + ";";
  return out;
}

// Every basis pair (π, ρ) with |π| + |ρ| ≤ n_max.
template <class F> void for_pairs(int n_max, F f) {
  for (int total = 0; total <= n_max; ++total)
    for (int i = 0; i <= total; ++i)
      for (const Nuio &pi : enumerate_nuios(i))
        for (const Nuio &rho : enumerate_nuios(total - i))
          f(pi, rho);
}

} // namespace

VerificationReport verify_scf_associativity(int n_max) {
  VerificationReport report;
  for_pairs(n_max, [&](const Nuio &pi, const Nuio &rho) {
    for (int k = 0; k + pi.size() + rho.size() <= n_max; ++k)
      for (const Nuio &sigma : enumerate_nuios(k)) {
        const ScfElement x = ScfElement::basis(pi), y = ScfElement::basis(rho), z = ScfElement::basis(sigma);
        report.record("scf-associativity", canonical(pi) + " " + canonical(rho) + " " + canonical(sigma),
                      scf_product(scf_product(x, y), z), scf_product(x, scf_product(y, z)));
      }
  });
  return report;
}

VerificationReport verify_scf_coassociativity(int n_max) {
  VerificationReport report;
  for (int n = 0; n <= n_max; ++n)
    for (const Nuio &pi : enumerate_nuios(n)) {
      const ScfTensor d = scf_coproduct(ScfElement::basis(pi));
      Triple left, right;
      for (const auto &[k, c] : d.terms()) {
        const ScfTensor first = scf_coproduct(ScfElement::basis(k.first));
        for (const auto &[k2, c2] : first.terms())
          add(left, k2.first, k2.second, k.second, c * c2);
        const ScfTensor second = scf_coproduct(ScfElement::basis(k.second));
        for (const auto &[k2, c2] : second.terms())
          add(right, k.first, k2.first, k2.second, c * c2);
      }
      const std::string l = canonical_triple(left), r = canonical_triple(right);
      report.add({"scf-coassociativity", canonical(pi), left == right, fingerprint(l), fingerprint(r)});
    }
  return report;
}

VerificationReport verify_scf_compatibility(int n_max) {
  VerificationReport report;
  for_pairs(n_max, [&](const Nuio &pi, const Nuio &rho) {
    const ScfElement x = ScfElement::basis(pi), y = ScfElement::basis(rho);
    report.record("scf-compatibility", canonical(pi) + " " + canonical(rho), scf_coproduct(scf_product(x, y)),
                  tensor_product(scf_coproduct(x), scf_coproduct(y)));
  });
  return report;
}

VerificationReport verify_antipode(int n_max) {
  VerificationReport report;
  for (int n = 0; n <= n_max; ++n)
    for (const Nuio &pi : enumerate_nuios(n)) {
      const ScfElement x = ScfElement::basis(pi);
      const ScfTensor d = scf_coproduct(x);
      const ScfElement expected = counit(x) * ScfElement::unit();
      report.record("antipode-left", canonical(pi), multiply_tensor(apply_each(d, scf_antipode, identity_map)),
                    expected);
      report.record("antipode-right", canonical(pi), multiply_tensor(apply_each(d, identity_map, scf_antipode)),
                    expected);
    }
  return report;
}

VerificationReport verify_dagger_symbolic(int n_max) {
  VerificationReport report;
  for (int n = 0; n <= n_max; ++n)
    for (const Nuio &pi : enumerate_nuios(n)) {
      const ScfElement x = ScfElement::basis(pi);
      report.record("dagger-involution", canonical(pi), dagger_scf(dagger_scf(x)), x);
      report.record("dagger-coproduct", canonical(pi), apply_each(scf_coproduct(x), dagger_scf, dagger_scf).swapped(),
                    scf_coproduct(dagger_scf(x)));
    }
  for_pairs(n_max, [&](const Nuio &pi, const Nuio &rho) {
    const ScfElement x = ScfElement::basis(pi), y = ScfElement::basis(rho);
    report.record("dagger-product", canonical(pi) + " " + canonical(rho), dagger_scf(scf_product(x, y)),
                  scf_product(dagger_scf(y), dagger_scf(x)));
  });
  return report;
}

VerificationReport verify_noncommutativity() {
  VerificationReport report;
  const ScfElement point = ScfElement::basis(Nuio::antichain(1));
  const ScfElement a2 = ScfElement::basis(Nuio::antichain(2));
  const ScfElement xy = scf_product(point, a2), yx = scf_product(a2, point);
  report.add({"noncommutativity", "point * antichain2 vs antichain2 * point", !(xy == yx),
              fingerprint(canonical(xy)), fingerprint(canonical(yx))});

  const Nuio pi = Nuio::from_strict(4, {{1, 4}, {2, 4}});
  const ScfTensor d = scf_coproduct(ScfElement::basis(pi));
  const ScfTensor swapped31 = d.component(3, 1).swapped(), c13 = d.component(1, 3);
  report.add({"noncocommutativity", "swap(D_(3,1)) vs D_(1,3) on " + canonical(pi), !(swapped31 == c13),
              fingerprint(canonical(swapped31)), fingerprint(canonical(c13))});
  return report;
}

} // namespace uthopf
