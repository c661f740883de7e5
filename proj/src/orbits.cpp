#include "wedderburn/orbits.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "wedderburn/arith.hpp"

namespace wedderburn::orbits {

bool FrobeniusOrbit::contains(std::int64_t x) const {
  return std::binary_search(exponents.begin(), exponents.end(), x);
}

std::string to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::General: return "general";
    case CaseLabel::Transitive: return "transitive";
    case CaseLabel::TrivialGalois: return "trivial-galois";
    case CaseLabel::Fixed: return "fixed";
  }
  return "general";
}

std::vector<FrobeniusOrbit> frobenius_orbits(std::int64_t p, std::int64_t ell) {
  if (arith::mod(ell, p) == 0) {
    throw std::invalid_argument("frobenius_orbits: ell = " + std::to_string(ell) + " is divisible by p");
  }
  std::vector<FrobeniusOrbit> out;
  std::vector<bool> seen(static_cast<std::size_t>(p), false);
  for (std::int64_t x = 1; x < p; ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    FrobeniusOrbit orbit;
    std::int64_t y = x;
    do {
      seen[static_cast<std::size_t>(y)] = true;
      orbit.exponents.push_back(y);
      y = arith::mul_mod(y, ell, p);
    } while (y != x);
    std::sort(orbit.exponents.begin(), orbit.exponents.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<CmOrbit> cm_orbits(const std::vector<FrobeniusOrbit>& frob, const cohomology::GroupSpec& spec) {
  const std::int64_t p = spec.p();
  // owner[x] = index of the Frobenius orbit containing x
  std::vector<std::size_t> owner(static_cast<std::size_t>(p), frob.size());
  for (std::size_t i = 0; i < frob.size(); ++i) {
    for (std::int64_t x : frob[i].exponents) owner[static_cast<std::size_t>(x)] = i;
  }
  std::vector<bool> used(frob.size(), false);
  std::vector<CmOrbit> out;
  for (std::size_t i = 0; i < frob.size(); ++i) {
    if (used[i]) continue;
    CmOrbit group;
    std::size_t cur = i;
    while (!used[cur]) {
      used[cur] = true;
      group.push_back(frob[cur]);
      const std::int64_t image = arith::mul_mod(frob[cur].key(), spec.r(), p);
      cur = owner[static_cast<std::size_t>(image)];
      if (cur == frob.size()) throw std::invalid_argument("cm_orbits: Frobenius partition is incomplete");
    }
    std::sort(group.begin(), group.end(),
              [](const FrobeniusOrbit& a, const FrobeniusOrbit& b) { return a.key() < b.key(); });
    out.push_back(std::move(group));
  }
  std::sort(out.begin(), out.end(),
            [](const CmOrbit& a, const CmOrbit& b) { return a.front().key() < b.front().key(); });
  return out;
}

CmOrbitData stabilizer_params(const CmOrbit& cm_orbit, const cohomology::GroupSpec& spec, std::int64_t ell) {
  const std::int64_t p = spec.p();
  const std::int64_t m = spec.m();
  CmOrbitData data;
  data.member_orbits = cm_orbit;
  data.f = arith::mul_order(ell, p);
  data.t = static_cast<std::int64_t>(cm_orbit.size());
  if (data.t == 0 || m % data.t != 0) {
    throw ConsistencyError("orbit size " + std::to_string(data.t) + " does not divide m = " + std::to_string(m));
  }
  data.h = m / data.t;

  const std::int64_t r_t = arith::pow_mod(spec.r(), static_cast<std::uint64_t>(data.t), p);
  const auto k = arith::discrete_log_in_subgroup(ell, r_t, p, data.f);
  if (!k) {
    throw ConsistencyError("r^t = " + std::to_string(r_t) + " is not a power of ell modulo p; "
                           "sigma_b^t does not stabilize the Frobenius orbit");
  }
  data.k = *k;
  data.s = data.k == 0 ? 1 : data.f / arith::gcd(data.f, data.k);
  data.d = data.f / data.s;
  if (arith::gcd(data.h, data.f) % data.s != 0) {
    throw ConsistencyError("s = " + std::to_string(data.s) + " does not divide gcd(h, f) = gcd(" +
                           std::to_string(data.h) + ", " + std::to_string(data.f) + ")");
  }
  const auto root = arith::exact_integer_sqrt(data.h * data.s);
  if (!root) {
    throw ConsistencyError("h * s = " + std::to_string(data.h * data.s) + " is not a perfect square");
  }
  data.r_mat = *root;
  return data;
}

std::vector<CaseLabel> classify_case(const CmOrbitData& data, std::int64_t m) {
  std::vector<CaseLabel> labels;
  if (data.h == 1 && data.t == m) labels.push_back(CaseLabel::Transitive);
  if (data.s == 1) labels.push_back(CaseLabel::TrivialGalois);
  if (data.t == 1 && data.h == m) labels.push_back(CaseLabel::Fixed);
  if (labels.empty()) labels.push_back(CaseLabel::General);
  return labels;
}

CaseLabel primary_case(const CmOrbitData& data, std::int64_t m) { return classify_case(data, m).front(); }

std::vector<CmOrbitData> analyze(const cohomology::GroupSpec& spec, std::int64_t ell) {
  std::vector<CmOrbitData> out;
  for (const auto& group : cm_orbits(frobenius_orbits(spec.p(), ell), spec)) {
    out.push_back(stabilizer_params(group, spec, ell));
  }
  return out;
}

}  // namespace wedderburn::orbits
