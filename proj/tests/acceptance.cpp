// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.
//   acceptance                 all criteria
//   acceptance --criterion N   a single criterion
//   acceptance --full          exhaustive cocycle/associativity checks on every grid group

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "wedderburn/arith.hpp"
#include "wedderburn/decomposition.hpp"
#include "wedderburn/oracle.hpp"
#include "wedderburn/orbits.hpp"
#include "wedderburn/scan.hpp"

using namespace wedderburn;

namespace {

using Blocks = std::vector<std::pair<std::int64_t, std::int64_t>>;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const std::vector<std::int64_t> kGridElls{2, 3, 5, 7, 13};
constexpr std::int64_t kGridMaxP = 31;

scan::ScanOptions grid_options(bool with_oracle) {
  scan::ScanOptions options;
  options.min_p = 3;
  options.max_p = kGridMaxP;
  options.ells = kGridElls;
  options.oracle_cap = with_oracle ? 1000 : 0;
  options.associativity = oracle::AssociativityCheck::Generators;
  return options;
}

std::string show(const Blocks& blocks) {
  std::ostringstream os;
  for (const auto& [n, d] : blocks) os << "(" << n << "," << d << ")";
  return os.str();
}

// Worked examples with their stated block lists and total dimension.
Verdict criterion1() {
  struct Case {
    std::int64_t p, m, ell, r, lambda;
    Blocks blocks;
    std::string rendered;
    std::int64_t dimension;
  };
  const std::vector<Case> cases{
      {7, 3, 2, 2, 1, {{1, 1}, {1, 2}, {3, 1}, {3, 1}}, "F_2 (+) F_4 (+) M3(F_2) (+) M3(F_2)", 21},
      {11, 5, 2, 4, 1, {{1, 1}, {1, 4}, {5, 2}}, "F_2 (+) F_16 (+) M5(F_4)", 55},
      {11, 5, 3, 4, 1, {{1, 1}, {1, 4}, {5, 1}, {5, 1}}, "F_3 (+) F_81 (+) M5(F_3) (+) M5(F_3)", 55},
      {13, 3, 2, 3, 1, {{1, 1}, {1, 2}, {3, 4}}, "F_2 (+) F_4 (+) M3(F_16)", 39},
      {7, 3, 13, 2, 2, {{1, 3}, {3, 2}}, "F_{13^3} (+) M3(F_{13^2})", 21},
  };
  const auto start = Clock::now();
  int ok = 0;
  std::ostringstream bad;
  for (const auto& c : cases) {
    const auto spec = cohomology::validate_spec(c.p, c.m, c.r);
    const auto cls = cohomology::classify_lambda(c.ell, c.m, c.lambda);
    const auto dec = decomposition::wedderburn(spec, cls);
    const bool nontrivial_ok = c.ell != 13 || !cls.is_trivial();
    if (dec.all_blocks() == c.blocks && decomposition::render(dec) == c.rendered &&
        dec.total_dimension() == c.dimension && decomposition::dimension_check(dec) && nontrivial_ok) {
      ++ok;
    } else {
      bad << " (" << c.p << "," << c.m << "," << c.ell << ") got " << show(dec.all_blocks());
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << ok << "/5 examples exact, " << elapsed << " s" << bad.str();
  return {ok == 5 && elapsed < 1.0, os.str()};
}

Verdict criterion2() {
  const auto start = Clock::now();
  const auto options = grid_options(true);
  const auto tuples = scan::enumerate(options);
  const auto results = scan::run(tuples, options);
  std::int64_t mismatches = 0;
  std::int64_t not_run = 0;
  std::ostringstream first;
  for (const auto& res : results) {
    if (!res.oracle_blocks || !res.engine) {
      ++not_run;
      if (first.tellp() == 0) first << " first error: " << res.engine_error << res.oracle_error;
      continue;
    }
    if (res.engine->all_blocks() != *res.oracle_blocks) {
      ++mismatches;
      if (first.tellp() == 0) {
        first << " first mismatch (" << res.tuple.p << "," << res.tuple.m << "," << res.tuple.ell << ","
              << res.tuple.r << "," << res.tuple.lambda << ")";
      }
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << tuples.size() << " tuples, " << mismatches << " mismatches, " << not_run << " without oracle result, "
     << elapsed << " s" << first.str();
  return {tuples.size() >= 200 && mismatches == 0 && not_run == 0 && elapsed < 60.0, os.str()};
}

Verdict criterion3() {
  const auto options = grid_options(false);
  const auto tuples = scan::enumerate(options);
  std::int64_t violations = 0;
  std::int64_t errors = 0;
  std::int64_t orbits_checked = 0;
  for (const auto& t : tuples) {
    try {
      const auto spec = cohomology::validate_spec(t.p, t.m, t.r);
      const auto dec = decomposition::wedderburn(spec, cohomology::classify_lambda(t.ell, t.m, t.lambda));
      std::int64_t total = 0;
      for (const auto& [n, d] : dec.all_blocks()) total += n * n * d;
      violations += total != t.p * t.m;
      const std::int64_t f = arith::mul_order(t.ell, t.p);
      std::int64_t sum_t = 0;
      for (const auto& o : dec.orbits) {
        ++orbits_checked;
        sum_t += o.t;
        violations += std::gcd(o.h, f) % o.s != 0;
        violations += !arith::exact_integer_sqrt(o.h * o.s).has_value();
        violations += o.t * o.h != t.m;
        violations += o.d * o.s != f;
      }
      violations += sum_t != (t.p - 1) / f;
    } catch (const std::exception&) {
      ++errors;
    }
  }
  std::ostringstream os;
  os << tuples.size() << " tuples, " << orbits_checked << " orbits, " << violations << " violations, " << errors
     << " errors";
  return {violations == 0 && errors == 0 && orbits_checked > 0, os.str()};
}

// Stated dihedral rows: (1,2,1) when f is odd, (2,1,1) when f is even.
Verdict criterion4() {
  std::map<std::string, std::set<std::array<std::int64_t, 3>>> observed;
  std::int64_t groups = 0;
  std::int64_t deviating = 0;
  std::int64_t oracle_checked = 0;
  std::int64_t oracle_disagree = 0;
  for (std::int64_t p = 3; p <= 100; ++p) {
    if (!arith::is_prime(p)) continue;
    for (std::int64_t ell : {2, 3, 5, 7, 11, 13}) {
      if (arith::gcd(ell, 2 * p) != 1) continue;
      for (auto r : decomposition::elements_of_order(p, 2)) {
        const auto spec = cohomology::validate_spec(p, 2, r);
        ++groups;
        const auto data = orbits::analyze(spec, ell);
        const std::int64_t f = arith::mul_order(ell, p);
        const std::array<std::int64_t, 3> expected = f % 2 == 1 ? std::array<std::int64_t, 3>{1, 2, 1}
                                                                : std::array<std::int64_t, 3>{2, 1, 1};
        for (const auto& o : data) {
          const std::array<std::int64_t, 3> got{o.t, o.h, o.s};
          observed[f % 2 == 1 ? "f odd" : "f even"].insert(got);
          deviating += got != expected;
        }
        // the structure-constant oracle is the ground truth for the observed patterns
        for (auto lambda : cohomology::h2_structure(ell, 2).representatives) {
          const auto cls = cohomology::classify_lambda(ell, 2, lambda);
          ++oracle_checked;
          oracle_disagree += oracle::oracle_decomposition(spec, cls, oracle::AssociativityCheck::Generators) !=
                             decomposition::wedderburn(spec, cls).all_blocks();
        }
      }
    }
  }
  std::ostringstream os;
  os << groups << " groups; observed";
  for (const auto& [parity, patterns] : observed) {
    os << " " << parity << ":";
    for (const auto& pat : patterns) os << " (" << pat[0] << "," << pat[1] << "," << pat[2] << ")";
    os << ";";
  }
  os << " " << deviating << " orbits differ from the stated rows; oracle agrees with the observed blocks on "
     << (oracle_checked - oracle_disagree) << "/" << oracle_checked << " algebras";
  return {deviating == 0 && groups > 0, os.str()};
}

// Recomputes (t, h, s) from raw orbit data without the engine's consistency assertions.
Verdict criterion5() {
  std::int64_t orbits_checked = 0;
  std::int64_t bad = 0;
  std::int64_t bad_424 = 0;
  std::int64_t groups = 0;
  for (std::int64_t p = 3; p <= 200; ++p) {
    if (!arith::is_prime(p)) continue;
    for (std::int64_t m = 2; m < p; ++m) {
      if ((p - 1) % m != 0) continue;
      for (auto r : decomposition::elements_of_order(p, m)) {
        const auto spec = cohomology::validate_spec(p, m, r);
        for (std::int64_t ell : {2, 3, 5, 7, 11, 13}) {
          if (arith::gcd(ell, p * m) != 1) continue;
          ++groups;
          const std::int64_t f = arith::mul_order(ell, p);
          for (const auto& cm : orbits::cm_orbits(orbits::frobenius_orbits(p, ell), spec)) {
            ++orbits_checked;
            const auto t = static_cast<std::int64_t>(cm.size());
            const std::int64_t h = m / t;
            const auto k = arith::discrete_log_in_subgroup(ell, arith::pow_mod(r, static_cast<std::uint64_t>(t), p), p, f);
            if (!k) {
              ++bad;
              continue;
            }
            const std::int64_t s = *k == 0 ? 1 : f / std::gcd(f, *k);
            const bool violation = !arith::exact_integer_sqrt(h * s).has_value() || std::gcd(h, f) % s != 0;
            bad += violation;
            bad_424 += m == 4 && f == 6 && s == 2 && t == 1;
          }
        }
      }
    }
  }
  std::ostringstream os;
  os << groups << " groups (p <= 200, l <= 13), " << orbits_checked << " orbits, " << bad
     << " with non-square h s or s not dividing gcd(h, f), " << bad_424 << " with (m,f,s,t) = (4,6,2,1)";
  return {bad == 0 && bad_424 == 0 && orbits_checked > 0, os.str()};
}

Blocks matrix_part(const Blocks& blocks) {
  Blocks out;
  for (const auto& b : blocks) {
    if (b.first > 1) out.push_back(b);
  }
  return out;
}

Blocks commutative_part(const Blocks& blocks) {
  Blocks out;
  for (const auto& b : blocks) {
    if (b.first == 1) out.push_back(b);
  }
  return out;
}

// Matrix blocks constant per group; commutative blocks a function of class_index, checked
// on every lambda in F_l^x (not only class representatives).
Verdict criterion6() {
  constexpr std::int64_t kAllLambdaOracleCap = 200;
  struct Seen {
    std::optional<Blocks> engine_matrix, oracle_matrix;
    std::map<std::int64_t, Blocks> engine_comm, oracle_comm;
  };
  std::map<std::array<std::int64_t, 4>, Seen> groups;
  std::int64_t failures = 0;
  std::int64_t engine_runs = 0;
  std::int64_t oracle_runs = 0;
  std::int64_t multi_class_groups = 0;
  std::int64_t varying_groups = 0;

  auto record = [&](std::optional<Blocks>& matrix, std::map<std::int64_t, Blocks>& comm, std::int64_t cls,
                    const Blocks& blocks) {
    const auto mat = matrix_part(blocks);
    if (!matrix) matrix = mat;
    failures += *matrix != mat;
    const auto com = commutative_part(blocks);
    auto [it, inserted] = comm.emplace(cls, com);
    failures += !inserted && it->second != com;
  };

  for (const auto& t : scan::enumerate(grid_options(false))) {
    if (t.lambda != 1) continue;  // one entry per group; lambdas enumerated below
    const auto spec = cohomology::validate_spec(t.p, t.m, t.r);
    auto& seen = groups[{t.p, t.m, t.ell, t.r}];
    for (std::int64_t lambda = 1; lambda < t.ell; ++lambda) {
      const auto cls = cohomology::classify_lambda(t.ell, t.m, lambda);
      const bool representative = lambda == cls.representative;
      const auto dec = decomposition::wedderburn(spec, cls);
      ++engine_runs;
      record(seen.engine_matrix, seen.engine_comm, cls.class_index, dec.all_blocks());
      if (representative || spec.order() <= kAllLambdaOracleCap) {
        const auto blocks = oracle::oracle_decomposition(spec, cls, oracle::AssociativityCheck::Generators);
        ++oracle_runs;
        record(seen.oracle_matrix, seen.oracle_comm, cls.class_index, blocks);
        failures += blocks != dec.all_blocks();
      }
    }
  }
  for (const auto& [key, seen] : groups) {
    if (seen.engine_comm.size() < 2) continue;
    ++multi_class_groups;
    std::set<Blocks> distinct;
    for (const auto& [cls, comm] : seen.engine_comm) distinct.insert(comm);
    varying_groups += distinct.size() > 1;
    failures += seen.engine_comm != seen.oracle_comm;
  }
  std::ostringstream os;
  os << groups.size() << " groups, " << engine_runs << " engine and " << oracle_runs << " oracle runs over all lambda, "
     << multi_class_groups << " groups with several classes (" << varying_groups
     << " with class-dependent commutative part), " << failures << " failures";
  return {failures == 0 && multi_class_groups > 0, os.str()};
}

Verdict criterion7(bool full) {
  constexpr std::int64_t kExhaustiveCap = 400;
  const auto start = Clock::now();
  std::int64_t cocycle_checked = 0, cocycle_failed = 0;
  std::int64_t assoc_exhaustive = 0, assoc_generators = 0, assoc_failed = 0;
  std::int64_t perturbations = 0, undetected = 0;
  std::mt19937_64 rng(7);
  std::set<std::array<std::int64_t, 3>> perturbed_shapes;

  for (const auto& t : scan::enumerate(grid_options(false))) {
    const auto spec = cohomology::validate_spec(t.p, t.m, t.r);
    const auto cls = cohomology::classify_lambda(t.ell, t.m, t.lambda);
    const bool exhaustive = full || spec.order() <= kExhaustiveCap;
    const auto alpha = cohomology::build_cocycle(spec, cls);
    const auto algebra = oracle::build_algebra(spec, cls);

    if (exhaustive) {
      ++cocycle_checked;
      cocycle_failed += !cohomology::is_cocycle(alpha, spec);
      ++assoc_exhaustive;
      assoc_failed += !oracle::verify_associativity(algebra);
    }
    ++assoc_generators;
    assoc_failed += !oracle::verify_associativity_by_generators(algebra);

    // single-entry perturbations on one algebra per (p, m, l)
    if (spec.order() <= 200 && perturbed_shapes.insert({t.p, t.m, t.ell}).second) {
      const auto n = static_cast<std::size_t>(spec.order());
      std::uniform_int_distribution<std::size_t> pick(1, n - 1);
      std::uniform_int_distribution<std::int64_t> factor(2, t.ell - 1);
      for (int trial = 0; trial < 8; ++trial) {
        const auto x = pick(rng);
        const auto y = pick(rng);
        // over F_2 the only unit is 1, so a perturbation there must leave F_l^x
        const std::int64_t bump = t.ell == 2 ? 0 : factor(rng);
        auto broken_alpha = alpha;
        broken_alpha.set(x, y, alpha.at(x, y) * bump);
        auto broken_algebra = algebra;
        broken_algebra.set_scalar(x, y, static_cast<oracle::Residue>(algebra.scalar(x, y) * static_cast<std::uint64_t>(bump)));
        perturbations += 3;
        undetected += cohomology::is_cocycle(broken_alpha, spec);
        undetected += oracle::verify_associativity(broken_algebra);
        undetected += oracle::verify_associativity_by_generators(broken_algebra);
      }
    }
  }
  std::ostringstream os;
  os << "is_cocycle on " << cocycle_checked << " cocycles (" << cocycle_failed << " failed); associativity on "
     << assoc_exhaustive << " algebras exhaustively and " << assoc_generators << " by generators (" << assoc_failed
     << " failed); " << perturbations << " perturbation checks, " << undetected << " undetected";
  if (!full) os << "; exhaustive checks for |G| <= " << kExhaustiveCap;
  os << ", " << seconds_since(start) << " s";
  return {cocycle_failed == 0 && assoc_failed == 0 && undetected == 0 && cocycle_checked > 0, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  bool full = false;
  app.add_option("--criterion", only, "run a single criterion (1-7)")->check(CLI::Range(1, 7));
  app.add_flag("--full", full, "exhaustive cocycle and associativity checks on every group of the grid");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"worked examples", criterion1},
      {"oracle equivalence grid", criterion2},
      {"structural invariants", criterion3},
      {"dihedral rows", criterion4},
      {"impossible parameters excluded", criterion5},
      {"class independence of matrix blocks", criterion6},
      {"cocycle and associativity suites", [full] { return criterion7(full); }},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    all = all && v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << " (" << criteria[i].first
              << "): " << v.detail << std::endl;
  }
  return all ? 0 : 1;
}
