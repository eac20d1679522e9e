// plottery: command-line front end. Every subcommand parses its
// arguments, calls one core operation and prints the result.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "config.hpp"
#include "plottery/errors.hpp"
#include "plottery/kernel/proof.hpp"
#include "plottery/kernel/proof_io.hpp"
#include "plottery/lang/alphabet.hpp"
#include "plottery/lang/godel.hpp"
#include "plottery/lang/parser.hpp"
#include "plottery/lottery/lottery.hpp"
#include "plottery/pi/compute.hpp"
#include "plottery/prob/prob.hpp"
#include "plottery/theory/psi.hpp"
#include "plottery/theory/theory.hpp"

namespace plottery::cli {
namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kResource = 3 };

struct Flags {
  std::string config;
  std::optional<std::string> profile, digits, cache, algorithm, psi, psi_file, code_bound, output,
      max_certificate_length;
  std::optional<std::uint64_t> seed;
  std::optional<double> density, time_limit_s;
  std::optional<std::size_t> cache_digits, max_length, max_candidates;
  std::optional<unsigned> threads;
  bool full = false;
};

Config resolve_config(const Flags& f) {
  std::string path = f.config;
  if (path.empty()) {
    if (const char* env = std::getenv("PLOTTERY_CONFIG")) path = env;
  }
  Config c = path.empty() ? Config{} : load_config(path);
  if (f.profile) c.profile = *f.profile;
  if (f.digits) c.digits = *f.digits;
  if (f.cache) c.cache_path = *f.cache;
  if (f.cache_digits) c.cache_digits = *f.cache_digits;
  if (f.algorithm) c.algorithm = *f.algorithm;
  if (f.psi) c.psi_backend = *f.psi;
  if (f.psi_file) {
    c.psi_file = *f.psi_file;
    if (!f.psi) c.psi_backend = "file";
  }
  if (f.seed) c.seed = *f.seed;
  if (f.density) c.density = *f.density;
  if (f.max_length) c.max_formula_length = *f.max_length;
  if (f.code_bound) c.code_bound = *f.code_bound;
  if (f.max_certificate_length) c.max_certificate_length = *f.max_certificate_length;
  if (f.max_candidates) c.max_candidates = *f.max_candidates;
  if (f.time_limit_s) c.time_limit_s = *f.time_limit_s;
  if (f.output) c.output = *f.output;
  if (f.threads) c.threads = *f.threads;
  validate(c);
  return c;
}

/// Lazily built collaborators shared by the subcommands.
class Session {
 public:
  Session(Config config, bool full) : config_(std::move(config)), full_(full) {}

  const Config& config() const { return config_; }
  bool records() const { return config_.output == "records"; }

  const kernel::AxiomProfile& profile() const { return kernel::AxiomProfile::by_name(config_.profile); }

  pi::BuildBudget pi_budget() const {
    pi::BuildBudget budget;
    budget.max_digits = config_.max_pi_digits;
    if (config_.time_limit_s > 0) {
      budget.time_limit = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
          std::chrono::duration<double>(config_.time_limit_s));
    }
    return budget;
  }

  const pi::DigitCache& cache() {
    if (!cache_) {
      cache_ = config_.cache_path.empty()
                   ? std::make_unique<pi::DigitCache>(pi::build_cache(
                         config_.cache_digits, pi::parse_algorithm(config_.algorithm), pi_budget()))
                   : std::make_unique<pi::DigitCache>(pi::read_cache_file(config_.cache_path));
    }
    return *cache_;
  }

  const pi::DigitSource& digits() {
    if (config_.digits == "champernowne") return champernowne_;
    return cache();
  }

  theory::PsiSource& psi() {
    if (!psi_) {
      if (config_.psi_backend == "synthetic") {
        psi_ = std::make_unique<theory::PsiSource>(
            theory::PsiSource::synthetic({config_.seed, config_.density}));
      } else if (config_.psi_backend == "file") {
        psi_ = std::make_unique<theory::PsiSource>(
            theory::PsiSource::listed(theory::read_psi_file(config_.psi_file), config_.psi_file));
      } else {
        theory::EnumeratedSpec spec;
        spec.max_formula_length = config_.max_formula_length;
        if (!config_.code_bound.empty()) spec.code_bound = parse_natural(config_.code_bound);
        psi_ = std::make_unique<theory::PsiSource>(theory::PsiSource::enumerated(spec));
      }
    }
    return *psi_;
  }

  /// Long numbers are shortened in human output unless --full is given.
  std::string show(const std::string& digits) const {
    if (full_ || records() || digits.size() <= 48) return digits;
    return digits.substr(0, 20) + "..." + digits.substr(digits.size() - 12) + " (" +
           std::to_string(digits.size()) + " digits)";
  }
  std::string show(const Natural& n) const { return show(n.get_str()); }

  void emit(nlohmann::ordered_json record) const {
    nlohmann::ordered_json line = {{"schema", lottery::kRecordSchema}};
    line.update(record);
    std::cout << line.dump() << '\n';
  }

 private:
  Config config_;
  bool full_;
  std::unique_ptr<pi::DigitCache> cache_;
  pi::ChampernowneDigits champernowne_;
  std::unique_ptr<theory::PsiSource> psi_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

/// A decimal literal, or @path naming a .proof file, a code sidecar or a
/// file holding a decimal literal.
Natural natural_argument(const std::string& arg, Session& session) {
  if (arg.empty() || arg[0] != '@') return parse_natural(arg);
  const std::string path = arg.substr(1);
  if (path.size() > 6 && path.substr(path.size() - 6) == ".proof") {
    return lang::encode(kernel::to_word(kernel::read_proof_file(path, session.profile()))).value();
  }
  const std::string text = slurp(path);
  if (text.rfind("# plottery proof code v1", 0) == 0) return kernel::read_code_sidecar(path).value();
  return parse_natural(trim(text));
}

/// A theory given by code (decimal or @file) or as a surface formula A(x,y).
Natural theory_argument(const std::string& arg, Session& session) {
  if (!arg.empty() && (arg[0] == '@' || std::isdigit(static_cast<unsigned char>(arg[0])))) {
    return natural_argument(arg, session);
  }
  return lang::encode(lang::to_word(lang::parse_formula(arg))).value();
}

std::size_t size_argument(const std::string& arg) {
  const Natural n = parse_natural(arg);
  if (!n.fits_ulong_p()) throw Error(arg + " is too large for a width or count");
  return n.get_ui();
}

int print_winner(Session& s, const lottery::WinnerVerdict& v) {
  if (s.records()) {
    lottery::write_record(std::cout, v);
  } else {
    std::cout << "n=" << v.n << " placement=" << s.show(v.placement) << " k=" << s.show(v.k)
              << "\nlhs=" << v.lhs.text() << " rhs=" << v.rhs.text() << "\n"
              << (v.is_winner ? "winner" : "not a winner") << '\n';
  }
  return v.is_winner ? kOk : kNegative;
}

std::string stage_name(lottery::Stage stage) {
  switch (stage) {
    case lottery::Stage::kProof:
      return "i";
    case lottery::Stage::kIndex:
      return "ii";
    case lottery::Stage::kWinner:
      return "iii";
  }
  return "?";
}

nlohmann::ordered_json product_json(const prob::ProductValue& v) {
  return {{"first", v.first},
          {"terms", v.terms},
          {"precision", v.precision},
          {"value", v.decimal},
          {"rounding", "down"},
          {"errorBound", prob::truncate_decimal(v.error_bound, v.precision + v.terms + v.first + 2)}};
}

int print_product(Session& s, const char* type, const prob::ProductValue& v) {
  if (s.records()) {
    auto record = product_json(v);
    record["type"] = type;
    s.emit(record);
  } else {
    std::cout << v.decimal << '\n'
              << "factors j=" << v.first << ".." << v.first + v.terms - 1
              << ", truncated toward zero; the infinite product lies below the partial product by at most 10^-"
              << v.first + v.terms - 1 << "/9\n";
  }
  return kOk;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"plottery: Goedel codes, proof checking and the pi lottery"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--config", f.config, "JSON config file (default: $PLOTTERY_CONFIG)");
  app.add_option("--profile", f.profile, "axiom profile: pa-core or mini");
  app.add_option("--digits", f.digits, "digit source: pi or champernowne");
  app.add_option("--cache", f.cache, "pi digit cache file");
  app.add_option("--cache-digits", f.cache_digits, "digits to build when no cache file is given");
  app.add_option("--algorithm", f.algorithm, "pi algorithm: spigot, series or machin");
  app.add_option("--psi", f.psi, "psi backend: enumerated, synthetic or file");
  app.add_option("--psi-file", f.psi_file, "psi cache file");
  app.add_option("--seed", f.seed, "seed for synthetic psi");
  app.add_option("--density", f.density, "density for synthetic psi");
  app.add_option("--max-length", f.max_length, "formula length bound of the enumerated universe");
  app.add_option("--code-bound", f.code_bound, "code bound of the enumerated universe");
  app.add_option("--max-cert-length", f.max_certificate_length, "budget for |w|^j in digits");
  app.add_option("--max-candidates", f.max_candidates, "budget for brute-force candidates");
  app.add_option("--time-limit", f.time_limit_s, "seconds allowed for pi digit computation");
  app.add_option("--format", f.output, "human or records");
  app.add_option("--threads", f.threads, "worker threads for simulations");
  app.add_flag("--full", f.full, "print long numbers in full");

  std::optional<Session> session;
  auto ctx = [&]() -> Session& {
    if (!session) {
      session.emplace(resolve_config(f), f.full);
      std::cerr << "# config " << config_to_json(session->config()).dump() << '\n';
      if (session->records()) {
        session->emit({{"type", "config"}, {"config", config_to_json(session->config())}});
      }
    }
    return *session;
  };
  int status = kOk;
  std::string a1, a2, a3, out, verify;

  // pi
  auto* pi_cmd = app.add_subcommand("pi", "digits of pi")->require_subcommand(1);
  auto* pi_group = pi_cmd->add_subcommand("group", "digits m..m+n-1 of the configured source");
  pi_group->add_option("m", a1)->required();
  pi_group->add_option("n", a2)->required();
  pi_group->callback([&] {
    Session& s = ctx();
    const auto g = pi::group(s.digits(), natural_argument(a1, s), size_argument(a2));
    if (s.records()) {
      s.emit({{"type", "pi-group"}, {"m", natural_argument(a1, s).get_str()}, {"n", g.width()}, {"digits", g.text()}});
    } else {
      std::cout << g.text() << '\n';
    }
  });
  auto* pi_build = pi_cmd->add_subcommand("build", "compute N decimals of pi");
  pi_build->add_option("N", a1)->required();
  pi_build->add_option("--out", out, "write the cache file here");
  pi_build->add_option("--verify", verify, "cross-check against a second algorithm");
  pi_build->callback([&] {
    Session& s = ctx();
    const std::size_t n = size_argument(a1);
    const pi::DigitCache cache = pi::build_cache(n, pi::parse_algorithm(s.config().algorithm), s.pi_budget());
    bool agree = true;
    if (!verify.empty()) {
      agree = pi::build_cache(n, pi::parse_algorithm(verify), s.pi_budget()).text() == cache.text();
    }
    if (!out.empty()) pi::write_cache_file(out, cache);
    if (s.records()) {
      nlohmann::ordered_json r = {{"type", "pi-cache"}, {"n", n}, {"algorithm", s.config().algorithm},
                                  {"checksum", cache.checksum()}};
      if (!verify.empty()) r["verifiedWith"] = verify, r["agree"] = agree;
      s.emit(r);
    } else {
      std::cout << n << " digits (" << s.config().algorithm << "), crc32 " << std::hex
                << cache.checksum() << std::dec << '\n';
      if (!verify.empty()) std::cout << (agree ? "agrees with " : "DISAGREES with ") << verify << '\n';
      if (!out.empty()) std::cout << "wrote " << out << '\n';
    }
    if (!agree) status = kNegative;
  });
  auto* pi_export = pi_cmd->add_subcommand("export", "write the configured cache as plain digits");
  pi_export->add_option("file", out, "destination, - for stdout")->required();
  pi_export->callback([&] {
    Session& s = ctx();
    if (out == "-") {
      std::cout << s.cache().text() << '\n';
    } else {
      std::ofstream file(out);
      file << s.cache().text() << '\n';
      if (!file) throw FormatError("cannot write " + out);
    }
  });
  auto* pi_import = pi_cmd->add_subcommand("import", "turn a plain digit file into a cache file");
  pi_import->add_option("file", a1, "digits after the decimal point")->required();
  pi_import->add_option("--out", out, "cache file to write")->required();
  pi_import->callback([&] {
    std::string text = trim(slurp(a1));
    const pi::DigitCache cache{std::move(text)};
    pi::write_cache_file(out, cache);
    std::cout << "wrote " << cache.size() << " digits to " << out << '\n';
  });

  // tk
  auto* tk = app.add_subcommand("tk", "add k modulo 10^n to a width-n digit group");
  tk->add_option("group", a1)->required();
  tk->add_option("k", a2)->required();
  tk->callback([&] {
    Session& s = ctx();
    const auto g = pi::t_k(pi::DigitGroup(a1), natural_argument(a2, s));
    if (s.records()) {
      s.emit({{"type", "tk"}, {"group", a1}, {"k", natural_argument(a2, s).get_str()}, {"result", g.text()}});
    } else {
      std::cout << g.text() << '\n';
    }
  });

  // godel
  auto* godel = app.add_subcommand("godel", "Goedel codes")->require_subcommand(1);
  bool as_formula = false;
  auto* encode = godel->add_subcommand("encode", "code of a glyph word");
  encode->add_option("word", a1)->required();
  encode->add_flag("--formula", as_formula, "read surface syntax and encode the canonical word");
  encode->callback([&] {
    Session& s = ctx();
    const lang::Word word = as_formula ? lang::to_word(lang::parse_formula(a1)) : lang::Word::from_text(a1);
    const auto code = lang::encode(word);
    if (s.records()) {
      s.emit({{"type", "godel-encode"}, {"word", word.to_text()}, {"code", code.to_string()}});
    } else {
      std::cout << s.show(code.value()) << '\n';
    }
  });
  godel->add_subcommand("alphabet", "the glyph table")->callback([&] {
    ctx();
    std::cout << lang::alphabet_table();
  });
  auto* decode = godel->add_subcommand("decode", "word of a code");
  decode->add_option("code", a1)->required();
  decode->callback([&] {
    Session& s = ctx();
    const Natural code = natural_argument(a1, s);
    const lang::Word word = lang::decode(code);
    if (s.records()) {
      s.emit({{"type", "godel-decode"}, {"code", code.get_str()}, {"word", word.to_text()}});
    } else {
      std::cout << word.to_text() << '\n';
    }
  });
  auto* rank = godel->add_subcommand("rank", "position of a code in Gamma");
  rank->add_option("code", a1)->required();
  rank->callback([&] {
    Session& s = ctx();
    const Natural code = natural_argument(a1, s);
    const Natural r = lang::rank(lang::GodelCode(code));
    if (s.records()) {
      s.emit({{"type", "godel-rank"}, {"code", code.get_str()}, {"rank", r.get_str()}});
    } else {
      std::cout << s.show(r) << '\n';
    }
  });
  auto* unrank = godel->add_subcommand("unrank", "code at a position of Gamma");
  unrank->add_option("rank", a1)->required();
  unrank->callback([&] {
    Session& s = ctx();
    const Natural r = natural_argument(a1, s);
    const auto code = lang::unrank(r);
    if (s.records()) {
      s.emit({{"type", "godel-unrank"}, {"rank", r.get_str()}, {"code", code.to_string()}});
    } else {
      std::cout << s.show(code.value()) << '\n';
    }
  });

  // proof
  auto* proof = app.add_subcommand("proof", "Hilbert proofs")->require_subcommand(1);
  auto* check = proof->add_subcommand("check", "check a proof file against the profile");
  check->add_option("file", a1)->required();
  check->callback([&] {
    Session& s = ctx();
    const kernel::Proof p = kernel::read_proof_file(a1, s.profile());
    const kernel::Verdict v = kernel::check(p, s.profile());
    const auto code = lang::encode(kernel::to_word(p));
    if (s.records()) {
      nlohmann::ordered_json r = {{"type", "proof-check"}, {"file", a1}, {"profile", s.config().profile},
                                  {"lines", p.size()}, {"valid", v.valid}};
      if (!v.valid) r["line"] = v.line, r["reason"] = v.reason;
      r["code"] = code.to_string();
      s.emit(r);
    } else {
      std::cout << kernel::format_proof(p);
      if (v) {
        std::cout << "valid under " << s.config().profile << "; code " << s.show(code.value()) << '\n';
      } else {
        std::cout << "invalid at line " << v.line << ": " << v.reason << '\n';
      }
    }
    if (!v) status = kNegative;
  });
  auto* proof_encode = proof->add_subcommand("encode", "code of a proof file's proof word");
  proof_encode->add_option("file", a1)->required();
  proof_encode->add_option("--out", out, "write a code sidecar here");
  proof_encode->callback([&] {
    Session& s = ctx();
    const auto code = lang::encode(kernel::to_word(kernel::read_proof_file(a1, s.profile())));
    if (!out.empty()) kernel::write_code_sidecar(out, code);
    if (s.records()) {
      s.emit({{"type", "proof-code"}, {"file", a1}, {"code", code.to_string()}});
    } else {
      std::cout << s.show(code.value()) << '\n';
    }
  });

  // theory
  auto* theory_cmd = app.add_subcommand("theory", "theories A(x,y)")->require_subcommand(1);
  auto* in_g = theory_cmd->add_subcommand("in-g", "is the code (or formula) in G");
  in_g->add_option("theory", a1)->required();
  in_g->callback([&] {
    Session& s = ctx();
    const bool member = theory::in_g(theory_argument(a1, s));
    if (s.records()) {
      s.emit({{"type", "in-g"}, {"theory", a1}, {"member", member}});
    } else {
      std::cout << (member ? "in G" : "not in G") << '\n';
    }
    if (!member) status = kNegative;
  });
  auto* target = theory_cmd->add_subcommand("target", "the inconsistency sentence of a theory");
  target->add_option("theory", a1)->required();
  target->callback([&] {
    Session& s = ctx();
    auto g = theory::TheoryCode::from_code(theory_argument(a1, s));
    if (!g) throw Error("not in G: " + a1);
    const std::string text = lang::to_text(theory::inconsistency_target(*g));
    if (s.records()) {
      s.emit({{"type", "target"}, {"theory", g->code().to_string()}, {"sentence", text}});
    } else {
      std::cout << s.show(text) << '\n';
    }
  });
  auto* eval = theory_cmd->add_subcommand("eval", "bounded search for a witness of A(code(b), y)");
  eval->add_option("theory", a1)->required();
  eval->add_option("b", a2, "formula b in surface syntax")->required();
  eval->add_option("fuel", a3)->required();
  eval->callback([&] {
    Session& s = ctx();
    auto g = theory::TheoryCode::from_code(theory_argument(a1, s));
    if (!g) throw Error("not in G: " + a1);
    const auto result = theory::eval_provable(*g, lang::parse_formula(a2), size_argument(a3));
    const bool proved = result == theory::Provability::kProved;
    if (s.records()) {
      s.emit({{"type", "eval"}, {"theory", g->code().to_string()}, {"b", a2}, {"fuel", a3},
              {"result", proved ? "proved" : "unknown"}});
    } else {
      std::cout << (proved ? "proved" : "unknown") << '\n';
    }
    if (!proved) status = kNegative;
  });

  // psi
  auto* psi = app.add_subcommand("psi", "the stream of lottery numbers")->require_subcommand(1);
  std::size_t count = 10;
  auto* list = psi->add_subcommand("list", "first entries of the configured stream");
  list->add_option("--count", count, "entries to list");
  list->add_option("--out", out, "also write them as a psi cache file");
  list->callback([&] {
    Session& s = ctx();
    theory::PsiSource& src = s.psi();
    const std::size_t available = src.available(count);
    for (std::size_t n = 1; n <= available; ++n) {
      const theory::PsiEntry& e = src.at(n);
      std::string theory_text;
      if (e.theory) theory_text = lang::to_text(lang::parse_word(lang::decode(*e.theory)));
      if (s.records()) {
        nlohmann::ordered_json r = {{"type", "psi"}, {"n", e.index}, {"code", e.code.to_string()},
                                    {"placement", e.placement.get_str()}};
        if (e.theory) r["theory"] = e.theory->to_string(), r["formula"] = theory_text;
        s.emit(r);
      } else {
        std::cout << e.index << '\t' << s.show(e.code.value()) << '\t' << theory_text << '\n';
      }
    }
    if (!out.empty()) {
      std::ofstream file(out);
      theory::write_psi(file, src.materialized().subspan(0, available));
    }
    if (available < count) {
      std::cerr << src.label() << " holds only " << available << " entries\n";
    }
  });

  // lottery
  auto* lot = app.add_subcommand("lottery", "the decision problem D_k")->require_subcommand(1);
  auto* winner = lot->add_subcommand("winner", "evaluate the winner equation");
  winner->add_option("n", a1)->required();
  winner->add_option("placement", a2)->required();
  winner->add_option("k", a3)->required();
  winner->callback([&] {
    Session& s = ctx();
    status = print_winner(s, lottery::winner_eq(size_argument(a1), natural_argument(a2, s),
                                                natural_argument(a3, s), s.digits()));
  });
  auto* winning_k = lot->add_subcommand("winning-k", "the k that makes n a winner");
  winning_k->add_option("n", a1)->required();
  winning_k->add_option("placement", a2)->required();
  winning_k->callback([&] {
    Session& s = ctx();
    const Natural k = lottery::construct_winning_k(size_argument(a1), natural_argument(a2, s), s.digits());
    if (s.records()) {
      s.emit({{"type", "winning-k"}, {"n", size_argument(a1)}, {"placement", natural_argument(a2, s).get_str()},
              {"k", k.get_str()}});
    } else {
      std::cout << k.get_str() << '\n';
    }
  });
  auto* check_cert = lot->add_subcommand("check-cert", "run the certificate checker on (g, p, k)");
  check_cert->add_option("g", a1, "theory code, @file or surface formula")->required();
  check_cert->add_option("p", a2, "proof code, @file.proof or @sidecar")->required();
  check_cert->add_option("k", a3)->required();
  check_cert->callback([&] {
    Session& s = ctx();
    const auto r = lottery::check_certificate(theory_argument(a1, s), natural_argument(a2, s),
                                              natural_argument(a3, s), s.psi(), s.digits(), s.profile());
    if (s.records()) {
      nlohmann::ordered_json j = {{"type", "certificate"}, {"verdict", r.accepted ? "accept" : "reject"}};
      if (r.rejected_at) j["stage"] = stage_name(*r.rejected_at), j["reason"] = r.reason;
      if (r.index) j["n"] = *r.index;
      j["steps"] = r.steps;
      s.emit(j);
      if (r.winner) lottery::write_record(std::cout, *r.winner);
    } else {
      if (r.accepted) {
        std::cout << "accept (n=" << *r.index << ")\n";
      } else {
        std::cout << "reject at stage " << stage_name(*r.rejected_at) << ": " << r.reason << '\n';
      }
      std::cout << "steps: i=" << r.steps[0] << " ii=" << r.steps[1] << " iii=" << r.steps[2] << '\n';
    }
    if (!r.accepted) status = kNegative;
  });
  auto* scan = lot->add_subcommand("scan-mw", "winners among the first nmax stream entries");
  scan->add_option("k", a1)->required();
  scan->add_option("nmax", a2)->required();
  scan->callback([&] {
    Session& s = ctx();
    const auto r = lottery::scan_max_winner(natural_argument(a1, s), size_argument(a2), s.psi(), s.digits());
    if (s.records()) {
      s.emit({{"type", "max-winner"}, {"k", r.k.get_str()}, {"scanBound", r.scan_bound},
              {"winners", r.winners}, {"maxWinnerWithinBound", r.max_winner}, {"scanned", r.scanned},
              {"truncated", r.truncated}, {"truncation", r.truncation_reason}});
    } else {
      std::cout << "winners:";
      for (std::size_t w : r.winners) std::cout << ' ' << w;
      std::cout << "\nmax winner within " << r.scan_bound << ": " << r.max_winner << '\n';
      if (r.truncated) std::cout << "truncated after " << r.scanned << ": " << r.truncation_reason << '\n';
    }
  });
  auto* brute = lot->add_subcommand("brute", "search all certificates shorter than |w|^j digits");
  brute->add_option("w", a1)->required();
  brute->add_option("j", a2)->required();
  brute->add_option("k", a3)->required();
  brute->callback([&] {
    Session& s = ctx();
    lottery::SearchBudget budget;
    budget.max_certificate_length = parse_natural(s.config().max_certificate_length);
    budget.max_candidates = s.config().max_candidates;
    const auto r = lottery::brute_force_solve(theory_argument(a1, s), size_argument(a2),
                                              natural_argument(a3, s), s.psi(), s.digits(),
                                              s.profile(), budget);
    if (s.records()) {
      nlohmann::ordered_json j = {{"type", "brute-force"}, {"answer", r.yes ? "yes" : "no"},
                                  {"lengthBound", r.length_bound.get_str()}, {"candidates", r.candidates}};
      if (r.witness) j["witness"] = r.witness->get_str();
      s.emit(j);
    } else {
      std::cout << (r.yes ? "yes" : "no") << " (length bound " << s.show(r.length_bound) << ", "
                << r.candidates << " candidates)\n";
      if (r.witness) std::cout << "witness " << s.show(*r.witness) << '\n';
    }
    if (!r.yes) status = kNegative;
  });

  // prob
  auto* prob_cmd = app.add_subcommand("prob", "the probability model")->require_subcommand(1);
  std::size_t precision = 30;
  auto* product = prob_cmd->add_subcommand("product", "partial product of (1 - 10^-j), j=1..terms");
  product->add_option("terms", a1)->required();
  product->add_option("--precision", precision, "decimal places");
  product->callback([&] { status = print_product(ctx(), "product", prob::product_p(size_argument(a1), precision)); });
  auto* tail = prob_cmd->add_subcommand("tail", "tail product, j=n+1..n+terms");
  tail->add_option("n", a1)->required();
  tail->add_option("terms", a2)->required();
  tail->add_option("--precision", precision, "decimal places");
  tail->callback([&] {
    status = print_product(ctx(), "tail", prob::tail_p(size_argument(a1), size_argument(a2), precision));
  });
  bool keep = false;
  auto* simulate = prob_cmd->add_subcommand("simulate", "Monte Carlo over the random-winner model");
  simulate->add_option("nmax", a1)->required();
  simulate->add_option("trials", a2)->required();
  simulate->add_option("seed", a3)->required();
  simulate->add_flag("--trials-out", keep, "emit one record per trial");
  simulate->callback([&] {
    Session& s = ctx();
    const std::size_t nmax = size_argument(a1);
    prob::SimulationOptions options;
    options.threads = s.config().threads;
    options.keep_records = keep;
    const auto r = prob::simulate_winners(nmax, size_argument(a2), std::stoull(a3), options);
    const std::string analytic = nmax == 0 ? "1" : prob::product_p(nmax, 12).decimal;
    const double empirical = r.no_winner_frequency().get_d();
    if (s.records()) {
      std::vector<double> per_n;
      for (std::size_t n = 1; n <= nmax; ++n) per_n.push_back(r.winner_frequency(n));
      s.emit({{"type", "simulation"}, {"nmax", nmax}, {"trials", r.trials}, {"seed", a3},
              {"noWinnerTrials", r.no_winner_trials}, {"noWinnerFreq", empirical},
              {"analytic", analytic}, {"perNFreq", per_n}});
      for (const auto& t : r.records) {
        s.emit({{"type", "trial"}, {"seed", t.seed}, {"nRange", {t.n_first, t.n_last}}, {"winners", t.winners}});
      }
    } else {
      std::cout << "no-winner frequency " << empirical << " (analytic " << analytic << ")\n"
                << "n\tempirical\t10^-n\n";
      for (std::size_t n = 1; n <= nmax; ++n) {
        std::cout << n << '\t' << r.winner_frequency(n) << "\t1e-" << n << '\n';
      }
    }
  });
  std::size_t runs = 1;
  auto* sequential = prob_cmd->add_subcommand("sequential", "staged search for successive winners");
  sequential->add_option("stages", a1)->required();
  sequential->add_option("horizon", a2)->required();
  sequential->add_option("seed", a3)->required();
  sequential->add_option("--runs", runs, "independent runs, seeded from seed");
  sequential->callback([&] {
    Session& s = ctx();
    const std::uint64_t seed = std::stoull(a3);
    for (std::size_t i = 0; i < runs; ++i) {
      const auto t = prob::sequential_experiment(size_argument(a1), size_argument(a2),
                                                 runs == 1 ? seed : prob::trial_seed(seed, i));
      if (s.records()) {
        s.emit({{"type", "sequential"}, {"seed", t.seed}, {"nRange", {t.n_first, t.n_last}},
                {"winners", t.winners}, {"stoppedAtStage", t.stopped_at_stage}});
      } else {
        std::cout << "seed " << t.seed << ": stopped at stage " << t.stopped_at_stage << ", winners";
        for (std::size_t w : t.winners) std::cout << ' ' << w;
        std::cout << '\n';
      }
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kUsage;
  } catch (const ResourceBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (attempted " << e.attempted() << ")\n";
    return kResource;
  } catch (const CacheExhausted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  } catch (const ExhaustedBound& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  } catch (const StreamExhausted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return kResource;
  }
  return status;
}

}  // namespace plottery::cli

int main(int argc, char** argv) { return plottery::cli::run(argc, argv); }
