#include "hetknn/fixtures.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace hetknn {

namespace {

constexpr std::array<std::string_view, 3> kNames{"case1", "case2", "case3"};

CellValue crisp(double v) { return Crisp{v}; }
CellValue iv(double lo, double hi) { return Interval{lo, hi}; }
CellValue tfn(double a1, double a2, double a3) { return TriangularFuzzy{a1, a2, a3}; }

DataMatrix case1() {
  using enum ColumnKind;
  return DataMatrix({Crisp, Interval, Fuzzy},
                    {
                        {crisp(0.5891), iv(0.31623, 0.94868), tfn(0.455842, 0.569803, 0.683763)},
                        {crisp(0.5624), iv(0.55470, 0.83205), tfn(0.371391, 0.557086, 0.742781)},
                        {crisp(0.5802), iv(0.55470, 0.83205), tfn(0.491539, 0.573462, 0.655386)},
                    });
}

DataMatrix case2() {
  using enum ColumnKind;
  return DataMatrix({Crisp, Fuzzy, Fuzzy, Interval},
                    {
                        {crisp(0.47), tfn(0.32, 0.48, 0.71), tfn(0.52, 0.67, 0.87), iv(0.40, 0.55)},
                        {crisp(0.58), tfn(0.16, 0.29, 0.47), tfn(0.26, 0.37, 0.52), iv(0.41, 0.58)},
                        {crisp(0.42), tfn(0.49, 0.67, 0.94), tfn(0.39, 0.52, 0.70), iv(0.37, 0.54)},
                        {crisp(0.51), tfn(0.32, 0.48, 0.71), tfn(0.26, 0.37, 0.52), iv(0.50, 0.69)},
                    });
}

DataMatrix case3() {
  using enum ColumnKind;
  return DataMatrix({Crisp, Interval, Fuzzy},
                    {
                        {crisp(0.45), iv(0.60, 0.80), tfn(0.42, 0.57, 0.71)},
                        {crisp(0.41), iv(0.37, 0.93), tfn(0.27, 0.53, 0.80)},
                        {crisp(0.48), iv(0.32, 0.95), tfn(0.46, 0.57, 0.68)},
                        {crisp(0.43), iv(0.55, 0.83), tfn(0.37, 0.56, 0.74)},
                        {crisp(0.46), iv(0.20, 0.98), tfn(0.49, 0.57, 0.66)},
                    });
}

}  // namespace

std::span<const std::string_view> fixture_names() noexcept { return kNames; }

DataMatrix fixture(std::string_view name) {
  if (name == "case1") return case1();
  if (name == "case2") return case2();
  if (name == "case3") return case3();
  std::string available;
  for (auto n : kNames) {
    if (!available.empty()) available += ", ";
    available += n;
  }
  throw std::invalid_argument("unknown fixture '" + std::string(name) + "' (available: " + available + ")");
}

}  // namespace hetknn
