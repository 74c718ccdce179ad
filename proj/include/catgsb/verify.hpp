#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "catgsb/engine.hpp"

namespace catgsb {

struct SuiteCheck {
  std::string name;
  bool ok;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  int max_dim = 0;
  std::vector<SuiteCheck> checks;
  double elapsed_seconds = 0.0;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
};

/// Battery for the truncated simplicial presentation: basis check, relation
/// soundness in the monotone-map model, normal-form bijection against the
/// brute-force map enumeration with factorize as two-sided inverse,
/// normal-form shape, and the three-way hom-set count agreement (engine,
/// oracle, closed form). Bijection/count ranges run over p, q <= max_dim-1.
SuiteReport verify_simplicial(int max_dim, int threads = 1);

/// Battery for the truncated cyclic presentation: basis check for the
/// extended relation set, hom-set counting |Irr_cyclic| = (q+1)|Irr_simpl|,
/// normal-form shape, completion of the plain variant matching the extended
/// set on the in-scope range, and membership of the derived relations.
SuiteReport verify_cyclic(int max_dim, int threads = 1);

/// True when every word of the polynomial stays inside the basis scope.
bool in_scope_poly(const Basis& basis, const Poly& f);

/// Binomial coefficient via a Pascal triangle (independent of the oracle).
std::uint64_t binomial(int n, int k);

}  // namespace catgsb
