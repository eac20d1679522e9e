#include "plottery/theory/psi.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "plottery/errors.hpp"
#include "plottery/kernel/proof.hpp"
#include "plottery/theory/mini.hpp"

namespace plottery::theory {

class PsiSource::Backend {
 public:
  virtual ~Backend() = default;
  /// Produces the next entry (index and placement filled by the caller),
  /// or nullopt when the bound is reached.
  virtual std::optional<PsiEntry> produce() = 0;
  virtual bool bounded() const = 0;
};

namespace {

class SyntheticBackend final : public PsiSource::Backend {
 public:
  explicit SyntheticBackend(const SyntheticSpec& spec) : rng_(spec.seed), gap_(spec.density) {
    if (!(spec.density > 0.0 && spec.density <= 1.0)) {
      throw Error("synthetic density must lie in (0, 1]");
    }
  }

  std::optional<PsiEntry> produce() override {
    rank_ += gap_(rng_) + 1;
    PsiEntry entry;
    entry.code = lang::unrank(rank_);
    return entry;
  }

  bool bounded() const override { return false; }

 private:
  std::mt19937_64 rng_;
  std::geometric_distribution<unsigned long> gap_;
  Natural rank_ = 0;
};

class ListedBackend final : public PsiSource::Backend {
 public:
  explicit ListedBackend(std::vector<PsiEntry> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 1; i < entries_.size(); ++i) {
      if (!(entries_[i - 1].code < entries_[i].code)) {
        throw Error("psi entries must be strictly increasing");
      }
    }
  }

  std::optional<PsiEntry> produce() override {
    if (next_ == entries_.size()) return std::nullopt;
    return entries_[next_++];
  }

  bool bounded() const override { return true; }

 private:
  std::vector<PsiEntry> entries_;
  std::size_t next_ = 0;
};

std::vector<PsiEntry> enumerate_universe(const EnumeratedSpec& spec) {
  const auto& profile = kernel::AxiomProfile::mini();
  std::vector<PsiEntry> out;
  for (UniverseEntry& u : mini_universe(spec.max_formula_length)) {
    if (spec.code_bound && u.code.value() > *spec.code_bound) break;
    std::optional<TheoryCode> g = extract_theory(u.proof.lines().back());
    if (!g || !is_lottery_number(u.code.value(), *g, profile)) continue;
    if (!out.empty() && out.back().code == u.code) continue;
    PsiEntry entry;
    entry.code = std::move(u.code);
    entry.theory = g->code();
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace

PsiSource::PsiSource(std::unique_ptr<Backend> backend, std::string label)
    : backend_(std::move(backend)), label_(std::move(label)) {}
PsiSource::PsiSource(PsiSource&&) noexcept = default;
PsiSource& PsiSource::operator=(PsiSource&&) noexcept = default;
PsiSource::~PsiSource() = default;

PsiSource PsiSource::synthetic(SyntheticSpec spec) {
  std::ostringstream label;
  label << "synthetic(seed=" << spec.seed << ",density=" << spec.density << ")";
  return PsiSource(std::make_unique<SyntheticBackend>(spec), label.str());
}

PsiSource PsiSource::enumerated(EnumeratedSpec spec) {
  std::ostringstream label;
  label << "enumerated(mini,length<=" << spec.max_formula_length;
  if (spec.code_bound) label << ",bounded";
  label << ")";
  return PsiSource(std::make_unique<ListedBackend>(enumerate_universe(spec)), label.str());
}

PsiSource PsiSource::listed(std::vector<PsiEntry> entries, std::string label) {
  return PsiSource(std::make_unique<ListedBackend>(std::move(entries)), std::move(label));
}

bool PsiSource::bounded() const { return backend_->bounded(); }

bool PsiSource::grow() {
  std::optional<PsiEntry> entry = backend_->produce();
  if (!entry) return false;
  entry->index = entries_.size() + 1;
  entry->placement = lang::rank(entry->code.value());
  entries_.push_back(std::move(*entry));
  return true;
}

std::size_t PsiSource::available(std::size_t n) {
  while (entries_.size() < n && grow()) {
  }
  return std::min(n, entries_.size());
}

const PsiEntry& PsiSource::at(std::size_t n) {
  if (n == 0) throw Error("psi indices start at 1");
  if (available(n) < n) {
    throw ExhaustedBound(label_ + " has only " + std::to_string(entries_.size()) + " entries");
  }
  return entries_[n - 1];
}

const PsiEntry& PsiSource::next() { return at(++cursor_); }

std::optional<std::size_t> PsiSource::index_of(const Natural& p, std::uint64_t* steps) {
  for (std::size_t n = 1;; ++n) {
    const PsiEntry& entry = at(n);
    if (steps) ++*steps;
    if (entry.code.value() == p) return n;
    if (entry.code.value() > p) return std::nullopt;
  }
}

void write_psi(std::ostream& out, std::span<const PsiEntry> entries) {
  out << "# plottery psi v1\n";
  for (const PsiEntry& e : entries) {
    out << e.index << '\t' << e.code.to_string() << '\t' << e.placement.get_str();
    if (e.theory) out << '\t' << e.theory->to_string();
    out << '\n';
  }
}

std::vector<PsiEntry> read_psi(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "# plottery psi v1") {
    throw FormatError("missing '# plottery psi v1' header");
  }
  std::vector<PsiEntry> out;
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::istringstream split(line);
    for (std::string field; std::getline(split, field, '\t');) fields.push_back(field);
    const std::string where = "psi line " + std::to_string(line_number) + ": ";
    if (fields.size() != 3 && fields.size() != 4) throw FormatError(where + "expected 3 or 4 fields");
    PsiEntry entry;
    try {
      entry.index = std::stoul(fields[0]);
      entry.code = GodelCode(parse_natural(fields[1]));
      entry.placement = parse_natural(fields[2]);
      if (fields.size() == 4) entry.theory = GodelCode(parse_natural(fields[3]));
    } catch (const std::exception& e) {
      throw FormatError(where + e.what());
    }
    if (entry.index != out.size() + 1) throw FormatError(where + "indices must run 1, 2, 3, ...");
    if (entry.placement != lang::rank(entry.code.value())) {
      throw FormatError(where + "placement is not the rank of the code");
    }
    if (!out.empty() && !(out.back().code < entry.code)) {
      throw FormatError(where + "codes must be strictly increasing");
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<PsiEntry> read_psi_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  return read_psi(in);
}

}  // namespace plottery::theory
