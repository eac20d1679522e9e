// Cross-validation beyond the CI scale: spigot against series at 10^5
// decimals, series against machin at 10^6. The spigot is quadratic and
// would need about an hour at 10^6.
#include <chrono>
#include <cstdio>

#include "plottery/pi/compute.hpp"

namespace {

bool compare(const char* a_name, const std::string& a, const char* b_name, const std::string& b) {
  std::size_t first = 0;
  while (first < a.size() && first < b.size() && a[first] == b[first]) ++first;
  const bool ok = a.size() == b.size() && first == a.size();
  std::printf("[%s] %s vs %s at %zu decimals", ok ? "PASS" : "FAIL", a_name, b_name, a.size());
  if (!ok) std::printf(", first difference at %zu", first + 1);
  std::printf("\n");
  return ok;
}

template <typename F>
std::string timed(const char* name, std::size_t n, F f) {
  const auto start = std::chrono::steady_clock::now();
  std::string digits = f(n, plottery::pi::BuildBudget{});
  std::printf("%s %zu: %.2f s\n", name, n,
              std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  return digits;
}

}  // namespace

int main() {
  using namespace plottery::pi;
  bool ok = true;
  const std::string series5 = timed("series", 100000, series_digits);
  ok &= compare("spigot", timed("spigot", 100000, spigot_digits), "series", series5);
  const std::string series6 = timed("series", 1000000, series_digits);
  ok &= compare("series", series6, "machin", timed("machin", 1000000, machin_digits));
  ok &= series6.compare(0, series5.size(), series5) == 0;
  return ok ? 0 : 1;
}
