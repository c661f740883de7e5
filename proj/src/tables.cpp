#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "wedderburn/arith.hpp"
#include "wedderburn/decomposition.hpp"

namespace wedderburn::decomposition {

namespace {

bool is_square_of(std::int64_t r, std::int64_t value) { return r * r == value; }

bool matches_m2(std::size_t row, const orbits::CmOrbitData& o) {
  switch (row) {
    case 0: return o.f % 2 == 1 && o.t == 1 && o.h == 2 && o.s == 1 && o.d == o.f && o.matrix_size() == 2;
    case 1: return o.f % 2 == 0 && o.t == 2 && o.h == 1 && o.s == 1 && o.d == o.f && o.matrix_size() == 2;
    default: return false;
  }
}

bool matches_m3(std::size_t row, const orbits::CmOrbitData& o) {
  switch (row) {
    case 0: return o.f % 3 == 0 && o.t == 1 && o.h == 3 && o.s == 3 && o.d == o.f / 3 && o.r_mat == 3;
    case 1: return o.t == 3 && o.h == 1 && o.s == 1 && o.d == o.f && o.r_mat == 1;
    default: return false;
  }
}

bool matches_m4(std::size_t row, const orbits::CmOrbitData& o) {
  switch (row) {
    case 0: return o.f % 4 == 0 && o.t == 1 && o.h == 4 && o.s == 1 && o.d == o.f && o.r_mat == 2;
    case 1: return o.f % 4 == 0 && o.t == 1 && o.h == 4 && o.s == 4 && o.d == o.f / 4 && o.r_mat == 4;
    case 2:
      return o.f % 2 == 0 && o.f % 4 != 0 && o.t == 2 && o.h == 2 && o.s == 2 && o.d == o.f / 2 && o.r_mat == 2;
    case 3: return o.t == 4 && o.h == 1 && o.s == 1 && o.d == o.f && o.r_mat == 1;
    default: return false;
  }
}

bool matches_general(std::size_t row, std::int64_t m, const orbits::CmOrbitData& o) {
  const bool shape = o.t * o.h == m;
  switch (row) {
    case 0: return o.t == 1 && o.h == m && o.s == 1 && o.d == o.f && is_square_of(o.r_mat, m);
    case 1: return o.t == 1 && o.h == m && o.s > 1 && o.d * o.s == o.f && is_square_of(o.r_mat, m * o.s);
    case 2: return o.t == m && o.h == 1 && o.s == 1 && o.d == o.f && o.r_mat == 1;
    case 3: return shape && o.s == 1 && o.d == o.f && is_square_of(o.r_mat, o.h);
    case 4: return shape && o.s > 1 && o.d * o.s == o.f && is_square_of(o.r_mat, o.h * o.s);
    default: return false;
  }
}

}  // namespace

TableKind table_kind_for(std::int64_t m, bool specialized) {
  if (!specialized) return TableKind::General;
  switch (m) {
    case 2: return TableKind::M2;
    case 3: return TableKind::M3;
    case 4: return TableKind::M4;
    default: throw std::invalid_argument("specialized tables exist only for m in {2, 3, 4}");
  }
}

const std::vector<ReferenceRow>& reference_rows(TableKind kind) {
  static const std::vector<ReferenceRow> general{
      {"t = 1, s = 1", "M_sqrt(m)(F_{l^f})"},
      {"t = 1, s > 1", "M_sqrt(ms)(F_{l^(f/s)})"},
      {"t = m, s = 1", "M_m(F_{l^f})"},
      {"t arbitrary, s = 1", "M_{t sqrt(m/t)}(F_{l^f})"},
      {"t arbitrary, s > 1", "M_{t sqrt((m/t)s)}(F_{l^(f/s)})"},
  };
  static const std::vector<ReferenceRow> m2{
      {"f odd, C_2 fixes orbits (t=1 h=2 s=1)", "M_2(F_{l^f})"},
      {"f even, C_2 permutes in pairs (t=2 h=1 s=1)", "M_2(F_{l^f})"},
  };
  static const std::vector<ReferenceRow> m3{
      {"3 | f, s = 3 (t=1 h=3)", "M_3(F_{l^(f/3)})"},
      {"f arbitrary, s = 1 (t=3 h=1)", "M_3(F_{l^f})"},
  };
  static const std::vector<ReferenceRow> m4{
      {"4 | f, s = 1 (t=1 h=4)", "M_2(F_{l^f})"},
      {"4 | f, s = 4 (t=1 h=4)", "M_4(F_{l^(f/4)})"},
      {"f even, 4 does not divide f, s = 2 (t=2 h=2)", "M_4(F_{l^(f/2)})"},
      {"f arbitrary, s = 1, transitive (t=4 h=1)", "M_4(F_{l^f})"},
  };
  switch (kind) {
    case TableKind::M2: return m2;
    case TableKind::M3: return m3;
    case TableKind::M4: return m4;
    case TableKind::General: break;
  }
  return general;
}

std::optional<std::size_t> match_reference_row(TableKind kind, std::int64_t m, const orbits::CmOrbitData& data) {
  const auto& rows = reference_rows(kind);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    bool ok = false;
    switch (kind) {
      case TableKind::M2: ok = m == 2 && matches_m2(i, data); break;
      case TableKind::M3: ok = m == 3 && matches_m3(i, data); break;
      case TableKind::M4: ok = m == 4 && matches_m4(i, data); break;
      case TableKind::General: ok = matches_general(i, m, data); break;
    }
    if (ok) return i;
  }
  return std::nullopt;
}

std::string TableRow::d_formula() const { return s == 1 ? "f" : "f/" + std::to_string(s); }

std::string TableRow::component() const {
  return "M" + std::to_string(t * r_mat) + "(F_{l^" + (s == 1 ? std::string("f") : "(" + d_formula() + ")") + "})";
}

bool TableReport::contained_in_reference() const {
  return inconsistencies == 0 &&
         std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.reference_row.has_value(); });
}

std::vector<std::int64_t> elements_of_order(std::int64_t p, std::int64_t m) {
  std::vector<std::int64_t> out;
  for (std::int64_t r = 1; r < p; ++r) {
    if (arith::mul_order(r, p) == m) out.push_back(r);
  }
  return out;
}

TableReport table_report(std::int64_t m, const std::vector<std::int64_t>& ells, std::int64_t p_min, std::int64_t p_max,
                         TableKind kind) {
  TableReport report;
  report.m = m;
  report.ells = ells;
  report.p_min = p_min;
  report.p_max = p_max;
  report.kind = kind;
  using Key = std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t, std::int64_t>;
  std::map<Key, TableRow> rows;
  for (std::int64_t p = std::max<std::int64_t>(p_min, 3); p <= p_max; ++p) {
    if (!arith::is_prime(p) || (p - 1) % m != 0) continue;
    for (std::int64_t r : elements_of_order(p, m)) {
      const auto spec = cohomology::validate_spec(p, m, r);
      for (std::int64_t ell : ells) {
        if (!arith::is_prime(ell) || arith::gcd(ell, p * m) != 1) continue;
        ++report.groups_checked;
        std::vector<orbits::CmOrbitData> data;
        try {
          data = orbits::analyze(spec, ell);
        } catch (const orbits::ConsistencyError&) {
          ++report.inconsistencies;
          continue;
        }
        for (const auto& o : data) {
          const auto ref = match_reference_row(kind, m, o);
          const Key key{o.t, o.h, o.s, o.r_mat, ref ? static_cast<std::int64_t>(*ref) : -1};
          auto [it, inserted] = rows.try_emplace(key);
          TableRow& row = it->second;
          if (inserted) {
            row.t = o.t;
            row.h = o.h;
            row.s = o.s;
            row.r_mat = o.r_mat;
            row.reference_row = ref;
            row.witness = {p, r, o.f};
          }
          if (!std::binary_search(row.f_values.begin(), row.f_values.end(), o.f)) {
            row.f_values.insert(std::upper_bound(row.f_values.begin(), row.f_values.end(), o.f), o.f);
          }
          ++row.occurrences;
        }
      }
    }
  }
  for (auto& [key, row] : rows) report.rows.push_back(std::move(row));
  return report;
}

}  // namespace wedderburn::decomposition
