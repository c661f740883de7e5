#include "wedderburn/scan.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "wedderburn/arith.hpp"

namespace wedderburn::scan {

std::vector<Tuple> enumerate(const ScanOptions& options) {
  std::vector<Tuple> out;
  for (std::int64_t p = std::max<std::int64_t>(options.min_p, 3); p <= options.max_p; ++p) {
    if (!arith::is_prime(p)) continue;
    for (std::int64_t m = 2; m < p; ++m) {
      if ((p - 1) % m != 0) continue;
      const auto rs = decomposition::elements_of_order(p, m);
      for (std::int64_t ell : options.ells) {
        if (!arith::is_prime(ell) || arith::gcd(ell, p * m) != 1) continue;
        const auto h2 = cohomology::h2_structure(ell, m);
        for (std::int64_t r : rs) {
          for (std::int64_t lambda : h2.representatives) out.push_back({p, m, ell, r, lambda});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> invariant_violations(const decomposition::Decomposition& dec) {
  std::vector<std::string> out;
  const auto& prm = dec.params;
  if (!decomposition::dimension_check(dec)) out.push_back("dimension check failed");
  std::int64_t orbit_total = 0;
  for (const auto& o : dec.orbits) {
    orbit_total += o.t;
    const std::string where = " (orbit keyed " + std::to_string(o.member_orbits.front().key()) + ")";
    if (o.t * o.h != prm.m) out.push_back("t h != m" + where);
    if (o.d * o.s != dec.f) out.push_back("d s != f" + where);
    if (arith::gcd(o.h, dec.f) % o.s != 0) out.push_back("s does not divide gcd(h, f)" + where);
    if (o.r_mat * o.r_mat != o.h * o.s) out.push_back("r_mat^2 != h s" + where);
    if (o.f != dec.f) out.push_back("orbit f differs" + where);
  }
  if (dec.f == 0 || orbit_total != (prm.p - 1) / dec.f) out.push_back("sum of t != (p - 1) / f");
  return out;
}

bool TupleResult::matches() const {
  if (!oracle_ran()) return true;
  return engine && oracle_blocks && engine->all_blocks() == *oracle_blocks;
}

bool TupleResult::ok() const {
  return engine.has_value() && engine_error.empty() && violations.empty() && oracle_error.empty() && matches() &&
         cocycle_ok.value_or(true);
}

TupleResult check_tuple(const Tuple& tuple, const ScanOptions& options) {
  TupleResult result;
  result.tuple = tuple;
  try {
    const auto spec = cohomology::validate_spec(tuple.p, tuple.m, tuple.r);
    const auto cls = cohomology::classify_lambda(tuple.ell, tuple.m, tuple.lambda);
    result.class_index = cls.class_index;
    result.engine = decomposition::wedderburn(spec, cls);
    result.violations = invariant_violations(*result.engine);
    if (options.check_cocycle) {
      result.cocycle_ok = cohomology::is_cocycle(cohomology::build_cocycle(spec, cls), spec);
    }
    if (spec.order() <= options.oracle_cap) {
      try {
        result.oracle_blocks = oracle::oracle_decomposition(spec, cls, options.associativity);
      } catch (const std::exception& e) {
        result.oracle_error = e.what();
      }
    }
  } catch (const std::exception& e) {
    result.engine.reset();
    result.engine_error = e.what();
  }
  return result;
}

std::vector<TupleResult> run(const std::vector<Tuple>& tuples, const ScanOptions& options) {
  std::vector<TupleResult> results(tuples.size());
  unsigned workers = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(tuples.size(), 1)));
  // largest groups first so the pool drains evenly
  std::vector<std::size_t> order(tuples.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return tuples[a].p * tuples[a].m > tuples[b].p * tuples[b].m;
  });
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < order.size(); k = next++) {
      results[order[k]] = check_tuple(tuples[order[k]], options);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return results;
}

}  // namespace wedderburn::scan
