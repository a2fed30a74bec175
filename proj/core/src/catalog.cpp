#include "orbitkit/catalog.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>

#include "orbitkit/errors.hpp"

namespace orbitkit {

namespace {

struct TotallyAntisymmetric {
  int a, b, c;
  double value;
};

// Expands totally antisymmetric constants f_abc into the i < j entry list.
std::vector<StructureEntry> expand(const std::vector<TotallyAntisymmetric>& table) {
  std::map<std::array<int, 3>, double> entries;
  for (const auto& t : table) {
    const std::array<std::array<int, 3>, 6> perms{{{t.a, t.b, t.c},
                                                   {t.b, t.c, t.a},
                                                   {t.c, t.a, t.b},
                                                   {t.b, t.a, t.c},
                                                   {t.a, t.c, t.b},
                                                   {t.c, t.b, t.a}}};
    for (std::size_t p = 0; p < perms.size(); ++p) {
      const auto& q = perms[p];
      if (q[0] < q[1]) entries[q] = p < 3 ? t.value : -t.value;
    }
  }
  std::vector<StructureEntry> out;
  out.reserve(entries.size());
  for (const auto& [key, value] : entries) out.push_back({key[0], key[1], key[2], value});
  return out;
}

LieAlgebra su2_like(std::string name, std::vector<std::string> labels) {
  return LieAlgebra(std::move(name), std::move(labels), expand({{0, 1, 2, 1.0}}));
}

LieAlgebra su3() {
  const double half = 0.5;
  const double r3 = std::sqrt(3.0) / 2.0;
  // Gell-Mann f_abc, 0-based.
  return LieAlgebra("su3", {"T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8"},
                    expand({{0, 1, 2, 1.0},
                            {0, 3, 6, half},
                            {0, 4, 5, -half},
                            {1, 3, 5, half},
                            {1, 4, 6, half},
                            {2, 3, 4, half},
                            {2, 5, 6, -half},
                            {3, 4, 7, r3},
                            {5, 6, 7, r3}}));
}

LieAlgebra sl2r() {
  // (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
  return LieAlgebra("sl2r", {"h", "e", "f"}, {{0, 1, 1, 2.0}, {0, 2, 2, -2.0}, {1, 2, 0, 1.0}});
}

LieAlgebra heisenberg3() {
  return LieAlgebra("heisenberg3", {"X", "Y", "Z"}, {{0, 1, 2, 1.0}});
}

LieAlgebra sl2c_real() {
  // Complex constants of sl(2,C) in (h, e, f), realified on
  // (h, e, f, ih, ie, if): [x_a, x_b] = C x_c, [x_a, i x_b] = C i x_c,
  // [i x_a, x_b] = C i x_c, [i x_a, i x_b] = -C x_c.
  const std::vector<StructureEntry> complex_table{
      {0, 1, 1, 2.0}, {0, 2, 2, -2.0}, {1, 2, 0, 1.0}};
  std::vector<StructureEntry> entries;
  for (const auto& e : complex_table) {
    entries.push_back({e.i, e.j, e.k, e.value});
    entries.push_back({e.i, e.j + 3, e.k + 3, e.value});
    entries.push_back({e.j, e.i + 3, e.k + 3, -e.value});
    entries.push_back({e.i + 3, e.j + 3, e.k, -e.value});
  }
  return LieAlgebra("sl2c_real", {"h", "e", "f", "ih", "ie", "if"}, std::move(entries));
}

LieAlgebra abelian(int n) {
  if (n <= 0 || n > 64) throw UnknownAlgebra("abelian(n) requires 1 <= n <= 64");
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i + 1));
  return LieAlgebra("abelian(" + std::to_string(n) + ")", std::move(labels), {});
}

std::optional<int> parse_abelian(std::string_view name) {
  constexpr std::string_view prefix = "abelian(";
  if (name.size() <= prefix.size() + 1 || name.substr(0, prefix.size()) != prefix ||
      name.back() != ')') {
    return std::nullopt;
  }
  const auto digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
  int n = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
  return n;
}

}  // namespace

LieAlgebra catalog_load(std::string_view name) {
  if (name == "su2") return su2_like("su2", {"e1", "e2", "e3"});
  if (name == "so3") return su2_like("so3", {"L1", "L2", "L3"});
  if (name == "su3") return su3();
  if (name == "sl2r") return sl2r();
  if (name == "heisenberg3") return heisenberg3();
  if (name == "sl2c_real") return sl2c_real();
  if (const auto n = parse_abelian(name)) return abelian(*n);
  throw UnknownAlgebra("unknown catalog algebra '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  return {"su2", "so3", "su3", "sl2r", "heisenberg3", "sl2c_real", "abelian(4)"};
}

bool is_compact_catalog(std::string_view name) {
  return name == "su2" || name == "so3" || name == "su3";
}

}  // namespace orbitkit
