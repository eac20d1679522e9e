#include <gtest/gtest.h>

#include <sstream>

#include "plottery/errors.hpp"
#include "plottery/kernel/profile.hpp"
#include "plottery/kernel/proof.hpp"
#include "plottery/kernel/proof_io.hpp"
#include "plottery/lang/godel.hpp"
#include "plottery/lang/parser.hpp"
#include "support.hpp"

namespace plottery {
namespace {

using kernel::AxiomProfile;
using kernel::Proof;
using lang::Formula;
using lang::Glyph;
using lang::Word;

Formula f(const char* text) { return lang::parse_formula(text); }

const char* schema_of(const char* text, const AxiomProfile& profile = AxiomProfile::pa_core()) {
  const kernel::Schema* s = profile.match(f(text));
  return s ? s->name.data() : "";
}

TEST(Schemas, RecognizeInstances) {
  EXPECT_STREQ(schema_of("O=O → (x=y → O=O)"), "K");
  EXPECT_STREQ(schema_of("(O=O → (x=x → y=y)) → ((O=O → x=x) → (O=O → y=y))"), "S");
  EXPECT_STREQ(schema_of("(¬x=x → ¬O=O) → (O=O → x=x)"), "Contraposition");
  EXPECT_STREQ(schema_of("x=x ∧ O=O → x=x"), "AndElimL");
  EXPECT_STREQ(schema_of("x=x ∧ O=O → O=O"), "AndElimR");
  EXPECT_STREQ(schema_of("x=x → (O=O → x=x ∧ O=O)"), "AndIntro");
  EXPECT_STREQ(schema_of("x=x → x=x ∨ O=O"), "OrIntroL");
  EXPECT_STREQ(schema_of("O=O → x=x ∨ O=O"), "OrIntroR");
  EXPECT_STREQ(schema_of("(x=x → y=y) → ((O=O → y=y) → (x=x ∨ O=O → y=y))"), "OrElim");
  EXPECT_STREQ(schema_of("∀x x=y → SO=y"), "ForallElim");
  EXPECT_STREQ(schema_of("SO=y → ∃x x=y"), "ExistsIntro");
  EXPECT_STREQ(schema_of("∀x (O=O → x=x) → (O=O → ∀x x=x)"), "ForallDist");
  EXPECT_STREQ(schema_of("∀x (x=O → O=O) → (∃x x=O → O=O)"), "ExistsElim");
  EXPECT_STREQ(schema_of("(x+O)=(x+O)"), "Refl");
  EXPECT_STREQ(schema_of("x=y → (x=O → y=O)"), "EqEuclid");
  EXPECT_STREQ(schema_of("x=y → Sx=Sy"), "EqSucc");
  EXPECT_STREQ(schema_of("x=y → (x+O)=(y+O)"), "EqPlusL");
  EXPECT_STREQ(schema_of("x=y → (O+x)=(O+y)"), "EqPlusR");
  EXPECT_STREQ(schema_of("x=y → (x·O)=(y·O)"), "EqTimesL");
  EXPECT_STREQ(schema_of("x=y → (O·x)=(O·y)"), "EqTimesR");
  EXPECT_STREQ(schema_of("¬Sx=O"), "ZeroNotSucc");
  EXPECT_STREQ(schema_of("Sx=Sy → x=y"), "SuccInj");
  EXPECT_STREQ(schema_of("(x+O)=x"), "PlusZero");
  EXPECT_STREQ(schema_of("(x+Sy)=S(x+y)"), "PlusSucc");
  EXPECT_STREQ(schema_of("(x·O)=O"), "TimesZero");
  EXPECT_STREQ(schema_of("(x·Sy)=((x·y)+x)"), "TimesSucc");
  EXPECT_STREQ(schema_of("(O=O ∧ ∀x (x=x → Sx=Sx)) → ∀x x=x"), "Induction");
}

TEST(Schemas, RejectNearMisses) {
  EXPECT_STREQ(schema_of("O=O → (x=y → x=x)"), "");
  EXPECT_STREQ(schema_of("x=y"), "");
  EXPECT_STREQ(schema_of("∀x ∃y x=y → ∃y y=y"), "");  // y would be captured
  EXPECT_STREQ(schema_of("SO=SO → ∃x x=Sx"), "");
  EXPECT_STREQ(schema_of("∀x (x=y → O=O) → (x=y → ∀x O=O)"), "");  // x free in antecedent
  EXPECT_STREQ(schema_of("¬SO=SO"), "");
  EXPECT_STREQ(schema_of("(x+SO)=S(x+SO)"), "");
  EXPECT_STREQ(schema_of("(O=O ∧ ∀x (x=x → x=x)) → ∀x x=x"), "");
  EXPECT_STREQ(schema_of("Sx=Sy → x=y", AxiomProfile::mini()), "");
  EXPECT_STREQ(schema_of("x=x → (O=O → x=x ∧ O=O)", AxiomProfile::mini()), "AndIntro");
}

TEST(Profiles, MiniIsSmall) {
  const AxiomProfile& mini = AxiomProfile::by_name("mini");
  EXPECT_LE(mini.logical_schemas().size() + mini.nonlogical_schemas().size(), 4u);
  EXPECT_TRUE(mini.modus_ponens());
  EXPECT_FALSE(mini.generalization());
  EXPECT_TRUE(AxiomProfile::pa_core().generalization());
  EXPECT_THROW(AxiomProfile::by_name("zf"), Error);
}

Proof load(const std::string& file, const AxiomProfile& profile) {
  return kernel::read_proof_file(testing::data_path(file), profile);
}

TEST(Fixtures, AllCheckUnderPaCore) {
  for (const auto& file : testing::mini_fixtures()) EXPECT_TRUE(kernel::check(load(file, AxiomProfile::pa_core()), AxiomProfile::pa_core())) << file;
  for (const auto& file : testing::pa_fixtures()) EXPECT_TRUE(kernel::check(load(file, AxiomProfile::pa_core()), AxiomProfile::pa_core())) << file;
}

TEST(Fixtures, MiniFixturesCheckUnderMini) {
  for (const auto& file : testing::mini_fixtures()) {
    EXPECT_TRUE(kernel::check(load(file, AxiomProfile::mini()), AxiomProfile::mini())) << file;
  }
  EXPECT_FALSE(kernel::check(load("proofs/pa/identity.proof", AxiomProfile::mini()), AxiomProfile::mini()));
  EXPECT_FALSE(kernel::check(load("proofs/pa/gen-refl.proof", AxiomProfile::mini()), AxiomProfile::mini()));
}

TEST(Fixtures, SidecarsMatchTheirProofs) {
  for (const auto* list : {&testing::mini_fixtures(), &testing::pa_fixtures()}) {
    for (const auto& file : *list) {
      const std::string sidecar = file.substr(0, file.size() - 6) + ".code";
      const auto code = kernel::read_code_sidecar(testing::data_path(sidecar));
      EXPECT_EQ(code, lang::encode(kernel::to_word(load(file, AxiomProfile::pa_core())))) << file;
    }
  }
}

TEST(Check, RejectsBadJustifications) {
  const AxiomProfile& pa = AxiomProfile::pa_core();
  EXPECT_FALSE(kernel::check(Proof{}, pa));
  Proof forward({f("O=O → O=O"), f("O=O")}, {kernel::ModusPonens{1, 0}, kernel::AxiomInstance{"Refl"}});
  const auto v = kernel::check(forward, pa);
  EXPECT_FALSE(v);
  EXPECT_EQ(v.line, 1u);
  Proof wrong_schema({f("O=O")}, {kernel::AxiomInstance{"K"}});
  EXPECT_FALSE(kernel::check(wrong_schema, pa));
  Proof unknown({f("O=O")}, {kernel::AxiomInstance{"Nonsense"}});
  EXPECT_FALSE(kernel::check(unknown, pa));
  Proof gen({f("x=x"), f("∀x x=x")}, {kernel::AxiomInstance{"Refl"}, kernel::Generalization{0}});
  EXPECT_TRUE(kernel::check(gen, pa));
  EXPECT_FALSE(kernel::check(gen, AxiomProfile::mini()));
  EXPECT_THROW(Proof({f("O=O")}, {}), Error);
}

TEST(Check, ConclusionOfInvalidProofThrows) {
  Proof bad({f("O=SO")}, {kernel::Unjustified{}});
  EXPECT_THROW(kernel::conclusion(bad, AxiomProfile::pa_core()), InvalidProof);
}

TEST(ProofWord, SplitRejectsEmptySegments) {
  EXPECT_THROW(kernel::split_proof_word(Word::from_text("()")), MalformedProofWord);
  EXPECT_THROW(kernel::split_proof_word(Word::from_text("O=O()")), MalformedProofWord);
  EXPECT_THROW(kernel::split_proof_word(Word::from_text("O=O()()O=O")), MalformedProofWord);
  EXPECT_THROW(kernel::split_proof_word(Word::from_text("O=O()O")), MalformedProofWord);
  EXPECT_EQ(kernel::split_proof_word(Word::from_text("O=O()(O=O∧O=O)")).size(), 2u);
}

TEST(ProofWord, RoundTripPreservesVerdicts) {
  const AxiomProfile& pa = AxiomProfile::pa_core();
  for (const auto* list : {&testing::mini_fixtures(), &testing::pa_fixtures()}) {
    for (const auto& file : *list) {
      const Proof p = load(file, pa);
      const Proof q = kernel::from_word(kernel::to_word(p), pa);
      EXPECT_EQ(bool(kernel::check(p, pa)), bool(kernel::check(q, pa)));
      EXPECT_EQ(kernel::to_word(q), kernel::to_word(p));
    }
  }
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    std::vector<Formula> lines;
    for (int j = 0; j < 4; ++j) lines.push_back(testing::random_formula(rng, 2));
    const Proof p = kernel::justify(lines, pa);
    const Proof q = kernel::from_word(kernel::to_word(p), pa);
    EXPECT_EQ(bool(kernel::check(p, pa)), bool(kernel::check(q, pa)));
  }
}

// A single-glyph change: substitution, insertion or deletion.
Word mutate(const Word& w, std::mt19937_64& rng) {
  std::vector<Glyph> g(w.begin(), w.end());
  std::uniform_int_distribution<unsigned> glyph(1, lang::kAlphabetSize);
  const std::size_t at = std::uniform_int_distribution<std::size_t>(0, g.size() - 1)(rng);
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0: {
      Glyph replacement;
      do {
        replacement = *lang::glyph_from_index(glyph(rng));
      } while (replacement == g[at]);
      g[at] = replacement;
      break;
    }
    case 1:
      g.insert(g.begin() + static_cast<std::ptrdiff_t>(at), *lang::glyph_from_index(glyph(rng)));
      break;
    default:
      g.erase(g.begin() + static_cast<std::ptrdiff_t>(at));
      break;
  }
  return Word(std::move(g));
}

// The mutant passes as a proof of `goal`. A mutant may be a genuine proof
// of something else (¬SO=O becomes ¬SSO=O); that is not a corruption the
// kernel could detect.
bool proves(const Word& w, const Formula& goal, const AxiomProfile& profile, bool* valid) {
  *valid = false;
  try {
    const Proof p = kernel::from_word(w, profile);
    *valid = bool(kernel::check(p, profile));
    return *valid && p.lines().back() == goal;
  } catch (const MalformedProofWord&) {
    return false;
  }
}

TEST(Mutation, NoSingleGlyphChangeKeepsTheConclusion) {
  const AxiomProfile& pa = AxiomProfile::pa_core();
  std::mt19937_64 rng(23);
  for (const auto& file : testing::pa_fixtures()) {
    const Proof original = load(file, pa);
    const Word w = kernel::to_word(original);
    int other_proofs = 0;
    for (int i = 0; i < 500; ++i) {
      const Word m = mutate(w, rng);
      bool valid = false;
      EXPECT_FALSE(proves(m, original.lines().back(), pa, &valid)) << file << ": " << m.to_text();
      if (valid) ++other_proofs;
    }
    EXPECT_LT(other_proofs, 25) << file;
  }
}

TEST(Mutation, TamperedMiniCertificatesAreRejected) {
  const AxiomProfile& mini = AxiomProfile::mini();
  std::mt19937_64 rng(29);
  for (const auto& file : testing::mini_fixtures()) {
    const Proof original = load(file, mini);
    const Word w = kernel::to_word(original);
    for (int i = 0; i < 40; ++i) {
      bool valid = false;
      EXPECT_FALSE(proves(mutate(w, rng), original.lines().back(), mini, &valid)) << file;
    }
  }
}

TEST(ProofIo, FormatReadsBack) {
  const Proof p = load("proofs/pa/induction-refl.proof", AxiomProfile::pa_core());
  std::istringstream in(kernel::format_proof(p));
  const auto lines = kernel::read_proof_lines(in);
  ASSERT_EQ(lines.size(), p.size());
  for (std::size_t i = 0; i < lines.size(); ++i) EXPECT_EQ(lines[i], p.lines()[i]);
}

TEST(ProofIo, ReportsTheBadLine) {
  std::istringstream in("O=O\n# comment\n\nO=O ∧\n");
  EXPECT_THROW(kernel::read_proof_lines(in), SyntaxError);
}

}  // namespace
}  // namespace plottery
