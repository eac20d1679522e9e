#include "plottery/lottery/lottery.hpp"

#include <ostream>

#include "json.hpp"
#include "plottery/errors.hpp"
#include "plottery/kernel/proof.hpp"
#include "plottery/lang/godel.hpp"
#include "plottery/theory/theory.hpp"

namespace plottery::lottery {

WinnerVerdict winner_eq(std::size_t n, const Natural& placement, const Natural& k,
                        const DigitSource& digits) {
  if (n == 0) throw Error("winner index n must be positive");
  if (placement < 1) throw Error("placement must be positive");
  DigitGroup lhs = pi::t_k(pi::group(digits, placement, n), k);
  DigitGroup rhs = pi::group(digits, Natural(static_cast<unsigned long>(n)), n);
  const bool winner = lhs == rhs;
  return {n, k, placement, std::move(lhs), std::move(rhs), winner};
}

Natural construct_winning_k(std::size_t n, const Natural& placement, const DigitSource& digits) {
  if (n == 0) throw Error("winner index n must be positive");
  if (placement < 1) throw Error("placement must be positive");
  const Natural modulus = pow10(n);
  const Natural from = pi::group(digits, placement, n).value();
  const Natural to = pi::group(digits, Natural(static_cast<unsigned long>(n)), n).value();
  Natural k = (to - from) % modulus;
  if (k < 0) k += modulus;
  return k;
}

namespace {

CertResult reject(CertResult result, Stage stage, std::string reason) {
  result.accepted = false;
  result.rejected_at = stage;
  result.reason = std::move(reason);
  return result;
}

}  // namespace

CertResult check_certificate(const Natural& g, const Natural& p, const Natural& k,
                             theory::PsiSource& psi, const DigitSource& digits,
                             const kernel::AxiomProfile& profile) {
  CertResult result;
  std::uint64_t& stage1 = result.steps[0];

  std::optional<theory::TheoryCode> theory = theory::TheoryCode::from_code(g);
  if (!theory) return reject(result, Stage::kProof, "g is not the code of a formula A(x,y)");
  if (!lang::in_gamma(p)) return reject(result, Stage::kProof, "p is not in Gamma");
  const lang::Word word = lang::decode(p);
  stage1 += word.size();
  kernel::CheckStats stats;
  kernel::Proof proof;
  try {
    proof = kernel::from_word(word, profile, &stats);
  } catch (const MalformedProofWord& e) {
    stage1 += stats.steps;
    return reject(result, Stage::kProof, std::string("p is not a proof word: ") + e.what());
  }
  const kernel::Verdict verdict = kernel::check(proof, profile, &stats);
  stage1 += stats.steps;
  if (!verdict) {
    return reject(result, Stage::kProof,
                  "proof fails at line " + std::to_string(verdict.line) + ": " + verdict.reason);
  }
  if (!(proof.lines().back() == theory::inconsistency_target(*theory))) {
    return reject(result, Stage::kProof, "proof does not conclude the inconsistency of g");
  }

  try {
    result.index = psi.index_of(p, &result.steps[1]);
  } catch (const ExhaustedBound& e) {
    throw StreamExhausted(psi.label() + " ended before reaching p (" + e.what() + ")");
  }
  if (!result.index) {
    return reject(result, Stage::kIndex, "the stream passes p without listing it");
  }

  result.winner = winner_eq(*result.index, lang::rank(p), k, digits);
  result.steps[2] += 2 * *result.index;
  if (!result.winner->is_winner) {
    return reject(result, Stage::kWinner,
                  "t_k(" + result.winner->lhs.text() + ") differs from " + result.winner->rhs.text());
  }
  result.accepted = true;
  return result;
}

MwReport scan_max_winner(const Natural& k, std::size_t nmax, theory::PsiSource& psi,
                         const DigitSource& digits) {
  MwReport report;
  report.k = k;
  report.scan_bound = nmax;
  for (std::size_t n = 1; n <= nmax; ++n) {
    try {
      const theory::PsiEntry& entry = psi.at(n);
      if (winner_eq(n, entry.placement, k, digits).is_winner) report.winners.push_back(n);
    } catch (const ExhaustedBound& e) {
      report.truncated = true;
      report.truncation_reason = e.what();
      break;
    } catch (const CacheExhausted& e) {
      report.truncated = true;
      report.truncation_reason = e.what();
      break;
    }
    report.scanned = n;
  }
  report.max_winner = report.winners.back();
  return report;
}

BruteResult brute_force_solve(const Natural& w, std::size_t j, const Natural& k,
                              theory::PsiSource& psi, const DigitSource& digits,
                              const kernel::AxiomProfile& profile, const SearchBudget& budget) {
  BruteResult result;
  mpz_pow_ui(result.length_bound.get_mpz_t(),
             Natural(static_cast<unsigned long>(decimal_length(w))).get_mpz_t(), j);
  if (result.length_bound > budget.max_certificate_length) {
    throw ResourceBudgetExceeded("certificate length bound |w|^j exceeds the budget of " +
                                     budget.max_certificate_length.get_str() + " digits",
                                 result.length_bound.get_str());
  }
  for (std::size_t n = 1;; ++n) {
    if (psi.available(n) < n) break;
    const theory::PsiEntry& entry = psi.at(n);
    if (decimal_length(entry.code.value()) >= result.length_bound) break;
    if (result.candidates == budget.max_candidates) {
      throw ResourceBudgetExceeded("brute-force search examined " +
                                       std::to_string(budget.max_candidates) + " candidates",
                                   result.length_bound.get_str());
    }
    ++result.candidates;
    if (check_certificate(w, entry.code.value(), k, psi, digits, profile).accepted) {
      result.yes = true;
      result.witness = entry.code.value();
      break;
    }
  }
  return result;
}

void write_record(std::ostream& out, const WinnerVerdict& verdict) {
  const nlohmann::ordered_json record = {
      {"schema", kRecordSchema},          {"type", "winner"},
      {"k", verdict.k.get_str()},         {"n", verdict.n},
      {"placement", verdict.placement.get_str()}, {"lhs", verdict.lhs.text()},
      {"rhs", verdict.rhs.text()},        {"isWinner", verdict.is_winner}};
  out << record.dump() << '\n';
}

}  // namespace plottery::lottery
