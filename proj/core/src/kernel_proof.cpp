#include "plottery/kernel/proof.hpp"

#include <optional>

#include "plottery/errors.hpp"
#include "plottery/lang/parser.hpp"

namespace plottery::kernel {

using lang::Glyph;
using lang::Word;

std::string describe(const Justification& j) {
  struct Visitor {
    std::string operator()(const AxiomInstance& a) const { return "axiom " + a.schema; }
    std::string operator()(const ModusPonens& mp) const {
      return "MP " + std::to_string(mp.minor + 1) + " " + std::to_string(mp.major + 1);
    }
    std::string operator()(const Generalization& g) const {
      return "Gen " + std::to_string(g.premise + 1);
    }
    std::string operator()(const Unjustified&) const { return "unjustified"; }
  };
  return std::visit(Visitor{}, j);
}

Proof::Proof(std::vector<Formula> lines, std::vector<Justification> justifications)
    : lines_(std::move(lines)), justifications_(std::move(justifications)) {
  if (lines_.size() != justifications_.size()) {
    throw Error("proof has " + std::to_string(lines_.size()) + " lines but " +
                std::to_string(justifications_.size()) + " justifications");
  }
}

void Proof::add(Formula line, Justification justification) {
  lines_.push_back(std::move(line));
  justifications_.push_back(std::move(justification));
}

namespace {

std::string line_ref(std::size_t i) { return "line " + std::to_string(i + 1); }

Verdict check_line(const Proof& proof, std::size_t i, const AxiomProfile& profile,
                   std::uint64_t& steps) {
  const Formula& line = proof.lines()[i];
  const Justification& j = proof.justifications()[i];
  steps += line.size();

  if (const auto* axiom = std::get_if<AxiomInstance>(&j)) {
    const Schema* schema = profile.find(axiom->schema);
    if (!schema) {
      return Verdict::invalid(i + 1, "schema " + axiom->schema + " is not in profile " + profile.name());
    }
    if (!schema->matches(line)) {
      return Verdict::invalid(i + 1, "not an instance of " + axiom->schema);
    }
    return Verdict::ok();
  }
  if (const auto* mp = std::get_if<ModusPonens>(&j)) {
    if (!profile.modus_ponens()) return Verdict::invalid(i + 1, "modus ponens not admitted");
    if (mp->minor >= i || mp->major >= i) {
      return Verdict::invalid(i + 1, "modus ponens cites a later line");
    }
    const Formula& major = proof.lines()[mp->major];
    steps += major.size();
    if (major.kind() != Formula::Kind::kImplies || !(major.lhs() == proof.lines()[mp->minor]) ||
        !(major.rhs() == line)) {
      return Verdict::invalid(i + 1, line_ref(mp->major) + " is not " + line_ref(mp->minor) +
                                         " → " + line_ref(i));
    }
    return Verdict::ok();
  }
  if (const auto* gen = std::get_if<Generalization>(&j)) {
    if (!profile.generalization()) return Verdict::invalid(i + 1, "generalization not admitted");
    if (gen->premise >= i) return Verdict::invalid(i + 1, "generalization cites a later line");
    steps += proof.lines()[gen->premise].size();
    if (line.kind() != Formula::Kind::kForAll || !(line.body() == proof.lines()[gen->premise])) {
      return Verdict::invalid(i + 1, "not a generalization of " + line_ref(gen->premise));
    }
    return Verdict::ok();
  }
  return Verdict::invalid(i + 1, "no justification");
}

Justification find_justification(const std::vector<Formula>& lines, std::size_t i,
                                 const AxiomProfile& profile, std::uint64_t& steps) {
  const Formula& line = lines[i];
  if (const Schema* schema = profile.match(line, &steps)) {
    return AxiomInstance{std::string(schema->name)};
  }
  if (profile.modus_ponens()) {
    for (std::size_t major = 0; major < i; ++major) {
      const Formula& candidate = lines[major];
      if (candidate.kind() != Formula::Kind::kImplies) continue;
      steps += 1;
      if (!(candidate.rhs() == line)) continue;
      const Formula antecedent = candidate.lhs();
      for (std::size_t minor = 0; minor < i; ++minor) {
        steps += 1;
        if (lines[minor] == antecedent) return ModusPonens{minor, major};
      }
    }
  }
  if (profile.generalization() && line.kind() == Formula::Kind::kForAll) {
    const Formula body = line.body();
    for (std::size_t premise = 0; premise < i; ++premise) {
      steps += 1;
      if (lines[premise] == body) return Generalization{premise};
    }
  }
  return Unjustified{};
}

}  // namespace

Verdict check(const Proof& proof, const AxiomProfile& profile, CheckStats* stats) {
  if (proof.empty()) return Verdict::invalid(0, "empty proof");
  std::uint64_t steps = 0;
  Verdict verdict = Verdict::ok();
  for (std::size_t i = 0; i < proof.size() && verdict.valid; ++i) {
    verdict = check_line(proof, i, profile, steps);
  }
  if (stats) stats->steps += steps;
  return verdict;
}

Proof justify(std::vector<Formula> lines, const AxiomProfile& profile, CheckStats* stats) {
  std::uint64_t steps = 0;
  std::vector<Justification> justifications;
  justifications.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    justifications.push_back(find_justification(lines, i, profile, steps));
  }
  if (stats) stats->steps += steps;
  return Proof(std::move(lines), std::move(justifications));
}

Word to_word(const Proof& proof) {
  Word word;
  for (std::size_t i = 0; i < proof.size(); ++i) {
    if (i > 0) {
      word.push_back(kLineBreak[0]);
      word.push_back(kLineBreak[1]);
    }
    word.append(lang::to_word(proof.lines()[i]));
  }
  return word;
}

std::vector<Formula> split_proof_word(const Word& word) {
  std::vector<Formula> lines;
  auto glyphs = word.glyphs();
  std::size_t start = 0;
  auto flush = [&](std::size_t end) {
    if (end == start) {
      throw MalformedProofWord("empty line segment at glyph " + std::to_string(start));
    }
    Word segment(std::vector<Glyph>(glyphs.begin() + static_cast<std::ptrdiff_t>(start),
                                    glyphs.begin() + static_cast<std::ptrdiff_t>(end)));
    std::optional<Formula> f = lang::try_parse_word(segment);
    if (!f) {
      throw MalformedProofWord("segment " + std::to_string(lines.size() + 1) +
                               " starting at glyph " + std::to_string(start) +
                               " is not a formula");
    }
    lines.push_back(std::move(*f));
  };
  for (std::size_t i = 0; i + 1 < glyphs.size(); ++i) {
    if (glyphs[i] == kLineBreak[0] && glyphs[i + 1] == kLineBreak[1]) {
      flush(i);
      start = i + 2;
      ++i;
    }
  }
  flush(glyphs.size());
  return lines;
}

Proof from_word(const Word& word, const AxiomProfile& profile, CheckStats* stats) {
  return justify(split_proof_word(word), profile, stats);
}

Formula conclusion(const Proof& proof, const AxiomProfile& profile) {
  Verdict verdict = check(proof, profile);
  if (!verdict) {
    throw InvalidProof("proof is invalid at line " + std::to_string(verdict.line) + ": " +
                       verdict.reason);
  }
  return proof.lines().back();
}

}  // namespace plottery::kernel
