#include "plottery/pi/compute.hpp"

#include <zlib.h>

#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

#include "plottery/errors.hpp"

namespace plottery::pi {

std::string_view algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kSpigot:
      return "spigot";
    case Algorithm::kSeries:
      return "series";
    case Algorithm::kMachin:
      return "machin";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kSpigot, Algorithm::kSeries, Algorithm::kMachin}) {
    if (algorithm_name(a) == name) return a;
  }
  throw Error("unknown pi algorithm '" + std::string(name) + "' (spigot, series, machin)");
}

namespace {

class Deadline {
 public:
  explicit Deadline(const BuildBudget& budget, std::size_t n) : n_(n) {
    if (budget.time_limit) end_ = std::chrono::steady_clock::now() + *budget.time_limit;
  }

  void check() const {
    if (end_ && std::chrono::steady_clock::now() > *end_) {
      throw ResourceBudgetExceeded("pi digit computation exceeded its time limit",
                                   std::to_string(n_) + " digits");
    }
  }

 private:
  std::size_t n_;
  std::optional<std::chrono::steady_clock::time_point> end_;
};

void check_size(std::size_t n, const BuildBudget& budget) {
  if (n == 0) throw Error("digit count must be at least 1");
  if (n > budget.max_digits) {
    throw ResourceBudgetExceeded("requested digit count exceeds the budget of " +
                                     std::to_string(budget.max_digits),
                                 std::to_string(n) + " digits");
  }
}

// Drops the leading "3" of a fixed-point expansion.
std::string decimals(const Natural& scaled, std::size_t n) {
  std::string text = scaled.get_str();
  return text.substr(1, n);
}

struct Split {
  Natural p, q, t;
};

// Chudnovsky terms [a, b).
Split split(unsigned long a, unsigned long b, const Deadline& deadline) {
  static const Natural kC3Over24("10939058860032000");
  if (b - a == 1) {
    Split s;
    if (a == 0) {
      s.p = 1;
      s.q = 1;
    } else {
      s.p = Natural(6 * a - 5) * (2 * a - 1) * (6 * a - 1);
      s.q = Natural(a) * a * a * kC3Over24;
    }
    s.t = s.p * (Natural(545140134) * a + 13591409);
    if (a % 2 == 1) s.t = -s.t;
    return s;
  }
  if (b - a > 4096) deadline.check();
  const unsigned long m = (a + b) / 2;
  Split left = split(a, m, deadline);
  Split right = split(m, b, deadline);
  return {left.p * right.p, left.q * right.q, left.t * right.q + left.p * right.t};
}

Natural arctan_inverse(unsigned long x, const Natural& one, const Deadline& deadline) {
  const unsigned long x2 = x * x;
  Natural term = one / x;
  Natural sum = term;
  for (unsigned long k = 1;; ++k) {
    term /= x2;
    if (term == 0) break;
    if (k % 1024 == 0) deadline.check();
    Natural part = term / (2 * k + 1);
    if (k % 2 == 1) {
      sum -= part;
    } else {
      sum += part;
    }
  }
  return sum;
}

constexpr std::size_t kGuardDigits = 20;
constexpr std::size_t kSpigotLimit = 4'000'000;

}  // namespace

std::string spigot_digits(std::size_t n, const BuildBudget& budget) {
  check_size(n, budget);
  if (n > kSpigotLimit) {
    throw ResourceBudgetExceeded("the 64-bit spigot is limited to " + std::to_string(kSpigotLimit) +
                                     " digits",
                                 std::to_string(n) + " digits");
  }
  const Deadline deadline(budget, n);
  constexpr std::uint64_t a = 10000;
  const std::size_t chunks = (n + 1) / 4 + 3;
  std::size_t c = chunks * 14;
  std::vector<std::uint64_t> f(c + 1, a / 5);
  f[c] = 0;
  std::vector<std::uint64_t> out;
  out.reserve(chunks);
  std::uint64_t e = 0;
  for (; c > 0; c -= 14) {
    std::uint64_t d = 0;
    std::uint64_t g = 2 * c;
    for (std::size_t b = c;;) {
      d += f[b] * a;
      --g;
      f[b] = d % g;
      d /= g;
      --g;
      if (--b == 0) break;
      d *= b;
    }
    out.push_back(e + d / a);
    e = d % a;
    if (out.size() % 256 == 0) deadline.check();
  }
  for (std::size_t i = out.size() - 1; i > 0; --i) {
    out[i - 1] += out[i] / a;
    out[i] %= a;
  }
  std::string text;
  text.reserve(out.size() * 4);
  for (std::uint64_t chunk : out) {
    const std::string s = std::to_string(chunk);
    text += std::string(4 - std::min<std::size_t>(4, s.size()), '0') + s;
  }
  return text.substr(1, n);
}

std::string series_digits(std::size_t n, const BuildBudget& budget) {
  check_size(n, budget);
  const Deadline deadline(budget, n);
  const std::size_t precision = n + kGuardDigits;
  const auto terms = static_cast<unsigned long>(precision / 14.181647462725477 + 2);
  const Split s = split(0, terms, deadline);
  const Natural one = pow10(precision);
  Natural root;
  const Natural square = Natural(10005) * one * one;
  mpz_sqrt(root.get_mpz_t(), square.get_mpz_t());
  deadline.check();
  return decimals(s.q * 426880 * root / s.t, n);
}

std::string machin_digits(std::size_t n, const BuildBudget& budget) {
  check_size(n, budget);
  const Deadline deadline(budget, n);
  const Natural one = pow10(n + kGuardDigits);
  return decimals(4 * (4 * arctan_inverse(5, one, deadline) - arctan_inverse(239, one, deadline)), n);
}

DigitCache build_cache(std::size_t n, Algorithm algorithm, const BuildBudget& budget) {
  switch (algorithm) {
    case Algorithm::kSpigot:
      return DigitCache(spigot_digits(n, budget));
    case Algorithm::kSeries:
      return DigitCache(series_digits(n, budget));
    case Algorithm::kMachin:
      return DigitCache(machin_digits(n, budget));
  }
  throw Error("unknown pi algorithm");
}

std::string pack_digits(std::string_view digits) {
  std::string packed((digits.size() + 1) / 2, '\0');
  for (std::size_t i = 0; i < digits.size(); i += 2) {
    const unsigned high = static_cast<unsigned>(digits[i] - '0');
    const unsigned low = i + 1 < digits.size() ? static_cast<unsigned>(digits[i + 1] - '0') : 0xF;
    packed[i / 2] = static_cast<char>((high << 4) | low);
  }
  return packed;
}

namespace {

constexpr std::array<char, 4> kMagic = {'P', 'I', 'D', 'C'};

template <typename T>
void put(std::ostream& out, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i) out.put(static_cast<char>((value >> (8 * i)) & 0xFF));
}

template <typename T>
T get(std::istream& in) {
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    const int byte = in.get();
    if (byte == std::char_traits<char>::eof()) throw FormatError("digit cache is truncated");
    value |= static_cast<T>(static_cast<T>(byte) << (8 * i));
  }
  return value;
}

}  // namespace

void write_cache(std::ostream& out, const DigitCache& cache) {
  out.write(kMagic.data(), kMagic.size());
  put<std::uint16_t>(out, kCacheVersion);
  put<std::uint64_t>(out, cache.size());
  const std::string packed = pack_digits(cache.text());
  out.write(packed.data(), static_cast<std::streamsize>(packed.size()));
  put<std::uint32_t>(out, cache.checksum());
}

DigitCache read_cache(std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw FormatError("not a digit cache (bad magic)");
  const auto version = get<std::uint16_t>(in);
  if (version != kCacheVersion) {
    throw FormatError("unsupported digit cache version " + std::to_string(version));
  }
  const auto n = get<std::uint64_t>(in);
  std::string packed((n + 1) / 2, '\0');
  in.read(packed.data(), static_cast<std::streamsize>(packed.size()));
  if (!in) throw FormatError("digit cache payload is truncated");
  const auto stored = get<std::uint32_t>(in);
  const auto actual = static_cast<std::uint32_t>(
      crc32(0L, reinterpret_cast<const Bytef*>(packed.data()), static_cast<uInt>(packed.size())));
  if (stored != actual) throw FormatError("digit cache checksum mismatch");
  std::string digits(n, '0');
  for (std::uint64_t i = 0; i < n; ++i) {
    const auto byte = static_cast<unsigned char>(packed[i / 2]);
    const unsigned nibble = i % 2 == 0 ? byte >> 4 : byte & 0xF;
    if (nibble > 9) throw FormatError("digit cache holds a non-decimal nibble");
    digits[i] = static_cast<char>('0' + nibble);
  }
  try {
    return DigitCache(std::move(digits));
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
}

void write_cache_file(const std::filesystem::path& path, const DigitCache& cache) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  write_cache(out, cache);
  if (!out) throw FormatError("failed writing " + path.string());
}

DigitCache read_cache_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  return read_cache(in);
}

}  // namespace plottery::pi
