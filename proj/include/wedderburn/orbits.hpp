#pragma once

// Frobenius orbits of nontrivial characters of C_p, the C_m action on them,
// and the per-orbit invariants that fix the shape of each simple block.
//
// A character a -> zeta^x is identified with its exponent x in (Z/pZ)^*.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wedderburn/cohomology.hpp"

namespace wedderburn::orbits {

/// One <l>-coset of (Z/pZ)^*, sorted ascending; front() is its key.
struct FrobeniusOrbit {
  std::vector<std::int64_t> exponents;

  std::int64_t key() const { return exponents.front(); }
  bool contains(std::int64_t x) const;
  bool operator==(const FrobeniusOrbit&) const = default;
};

using CmOrbit = std::vector<FrobeniusOrbit>;

/// Parameters of one C_m-orbit of Frobenius orbits.
struct CmOrbitData {
  CmOrbit member_orbits;
  std::int64_t f = 0;      // ord_p(l)
  std::int64_t t = 0;      // number of Frobenius orbits in the C_m-orbit
  std::int64_t h = 0;      // stabilizer size m / t
  std::int64_t k = 0;      // r^t = l^k (mod p), k in [0, f)
  std::int64_t s = 0;      // order of sigma_b^t on K = F_{l^f}
  std::int64_t d = 0;      // degree of the fixed field, f / s
  std::int64_t r_mat = 0;  // sqrt(h s)

  std::int64_t matrix_size() const { return t * r_mat; }
  bool operator==(const CmOrbitData&) const = default;
};

enum class CaseLabel { General, Transitive, TrivialGalois, Fixed };

std::string to_string(CaseLabel label);

/// Thrown when computed parameters violate a structural constraint that
/// cannot fail for a valid group action.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Partition of {1, ..., p-1} under x -> l x, sorted by least element.
std::vector<FrobeniusOrbit> frobenius_orbits(std::int64_t p, std::int64_t ell);

/// Groups Frobenius orbits under x -> r x; each group sorted by key and the
/// groups sorted by their first key.
std::vector<CmOrbit> cm_orbits(const std::vector<FrobeniusOrbit>& frob,
                               const cohomology::GroupSpec& spec);

CmOrbitData stabilizer_params(const CmOrbit& cm_orbit, const cohomology::GroupSpec& spec,
                              std::int64_t ell);

/// Every applicable special case (Transitive: h = 1, TrivialGalois: s = 1,
/// Fixed: t = 1) in that order, or {General}.
std::vector<CaseLabel> classify_case(const CmOrbitData& data, std::int64_t m);

/// First entry of classify_case.
CaseLabel primary_case(const CmOrbitData& data, std::int64_t m);

/// frobenius_orbits -> cm_orbits -> stabilizer_params for every C_m-orbit.
std::vector<CmOrbitData> analyze(const cohomology::GroupSpec& spec, std::int64_t ell);

}  // namespace wedderburn::orbits
