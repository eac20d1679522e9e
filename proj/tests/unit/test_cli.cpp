#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "support.hpp"

namespace plottery {
namespace {

struct Outcome {
  int status = -1;
  std::string out;
};

// Runs the tool with stderr discarded unless `merge` is set.
Outcome run(const std::string& args, bool merge = false) {
  const std::string command = "PLOTTERY_CONFIG= " + std::string(PLOTTERY_CLI) + " " + args +
                              (merge ? " 2>&1" : " 2>/dev/null");
  Outcome r;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, got);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& relative) { return testing::data_path(relative).string(); }

std::string cache() { return " --cache " + data("pi-1000.pidc"); }

TEST(Cli, PiAndTk) {
  EXPECT_EQ(run("pi group 5 3" + cache()).out, "926\n");
  EXPECT_EQ(run("pi group 36 2" + cache()).out, "41\n");
  EXPECT_EQ(run("tk 926 97").out, "023\n");
  EXPECT_EQ(run("tk 33 8").out, "41\n");
  EXPECT_EQ(run("pi group 999 3" + cache()).status, 3);
}

TEST(Cli, Godel) {
  EXPECT_EQ(run("godel encode O=SO").out, "6393\n");
  EXPECT_EQ(run("godel decode 6393").out, "O=SO\n");
  const Outcome rank = run("godel rank 6393");
  EXPECT_EQ(rank.status, 0);
  EXPECT_EQ(run("godel unrank " + rank.out.substr(0, rank.out.size() - 1)).out, "6393\n");
  EXPECT_EQ(run("godel decode 17").status, 2);
}

TEST(Cli, ProofCheck) {
  for (const auto& f : testing::pa_fixtures()) EXPECT_EQ(run("proof check " + data(f)).status, 0) << f;
  for (const auto& f : testing::mini_fixtures())
    EXPECT_EQ(run("--profile mini proof check " + data(f)).status, 0) << f;
  const auto bad = std::filesystem::temp_directory_path() / "plottery-bad.proof";
  {
    std::ofstream out(bad);
    out << "O=SO  # axiom Refl\n";
  }
  EXPECT_EQ(run("proof check " + bad.string()).status, 1);
  std::filesystem::remove(bad);
  EXPECT_EQ(run("proof check /nonexistent/file.proof").status, 2);
}

TEST(Cli, LotteryVerdicts) {
  EXPECT_EQ(run("lottery winner 2 401 8" + cache()).status, 0);
  EXPECT_EQ(run("lottery winner 2 36 0" + cache()).status, 0);
  EXPECT_EQ(run("lottery winner 2 36 1" + cache()).status, 1);
  EXPECT_EQ(run("lottery winning-k 2 401" + cache()).out, "8\n");
  EXPECT_EQ(run("lottery winning-k 2 36" + cache()).out, "0\n");
}

TEST(Cli, CertificateStages) {
  const std::string g = "\"x=x ∧ y=y\"";
  const std::string p = "@" + data("proofs/mini/inconsistent-conj.proof");
  const std::string mini = "--profile mini --digits champernowne ";
  const Outcome winning_k = run(mini + "lottery check-cert " + g + " " + p + " 0", true);
  EXPECT_EQ(winning_k.status, 1);
  EXPECT_NE(winning_k.out.find("stage iii"), std::string::npos) << winning_k.out;
  EXPECT_EQ(run("--profile mini lottery check-cert " + g + " " + p + " 0" + cache()).status, 3);
  EXPECT_EQ(run("--profile mini --max-length 8 --digits champernowne lottery check-cert " + g + " " + p + " 0")
                .status,
            3);
  EXPECT_EQ(run(mini + "lottery check-cert " + g + " 17 0").status, 1);
}

TEST(Cli, Prob) {
  EXPECT_EQ(run("prob product 30 --precision 2").out.substr(0, 5), "0.89\n");
  EXPECT_EQ(run("prob product 1 --precision 1").out.substr(0, 4), "0.9\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frob").status, 2);
  EXPECT_EQ(run("pi group x 3").status, 2);
  EXPECT_EQ(run("tk 92a 1").status, 2);
  EXPECT_EQ(run("--format yaml tk 1 1").status, 2);
}

TEST(Cli, RecordsAreReproducible) {
  const std::string args = "--format records prob simulate 4 2000 11 --threads 3";
  const Outcome a = run(args);
  const Outcome b = run(args);
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  std::istringstream lines(a.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j["schema"], "plottery.v1");
    if (count == 0) {
      EXPECT_EQ(j["type"], "config");
    }
    ++count;
  }
  EXPECT_GE(count, 2);
  const std::string winner = run("--format records lottery winner 2 401 8" + cache()).out;
  const auto last = nlohmann::json::parse(winner.substr(winner.find('\n') + 1));
  EXPECT_EQ(last["type"], "winner");
  EXPECT_EQ(last["isWinner"], true);
}

TEST(Cli, ConfigFile) {
  const auto path = std::filesystem::temp_directory_path() / "plottery-test-config.json";
  {
    std::ofstream out(path);
    out << R"({"digits": {"source": "pi", "cache": ")" << data("pi-1000.pidc") << R"("}})";
  }
  EXPECT_EQ(run("--config " + path.string() + " pi group 5 3").out, "926\n");
  {
    std::ofstream out(path);
    out << R"({"digits": {"sauce": "pi"}})";
  }
  EXPECT_EQ(run("--config " + path.string() + " tk 1 1").status, 2);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace plottery
