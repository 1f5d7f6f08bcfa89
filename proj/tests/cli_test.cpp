// Copyright 2026 The bscap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

#include "bscap/cli.hpp"
#include "bscap/csv.hpp"
#include "bscap/figures.hpp"

namespace bscap {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("bscap_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

const char* kRfid = R"(schema = 1
topology = monostatic
carrier.power = 28 dBm
carrier.frequency = 915 MHz
antenna.gain = 8 dBi
device.gain = 2.15 dBi
device.efficiency = 0.25
receiver.noise_figure = 20 dB
geometry.r = 10 m
bandwidth = 400 kHz
regulatory.profile = FCC_915
)";

TEST_F(CliTest, AnalyzeReport) {
  const CliRun r = run({"analyze", write("rfid.cfg", kRfid)});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("link budget (mono-static)"), std::string::npos);
  EXPECT_NE(r.out.find("-61.073 dBm"), std::string::npos);
  EXPECT_NE(r.out.find("regulatory profile FCC_915: compliant"), std::string::npos);
  EXPECT_NE(r.out.find("p_rx_dbm=-61.0730101"), std::string::npos);
  EXPECT_NE(r.out.find("regime=bandwidth-limited"), std::string::npos);
  EXPECT_NE(r.out.find("violations=\n"), std::string::npos);
}

TEST_F(CliTest, QuietPrintsOnlyResultBlock) {
  const CliRun r = run({"--quiet", "analyze", write("rfid.cfg", kRfid)});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("[result]\n", 0), 0u);
  EXPECT_EQ(r.out.find("link budget"), std::string::npos);
}

TEST_F(CliTest, StrictViolationExitsTwo) {
  std::string text = kRfid;
  text.replace(text.find("28 dBm"), 6, "33 dBm");
  const std::string cfg = write("hot.cfg", text);

  const CliRun lax = run({"analyze", cfg});
  EXPECT_EQ(lax.code, cli::kExitOk);
  EXPECT_NE(lax.out.find("EirpExceeded"), std::string::npos);

  const CliRun strict = run({"--strict", "analyze", cfg});
  EXPECT_EQ(strict.code, cli::kExitViolation);
  EXPECT_NE(strict.out.find("violations=EirpExceeded"), std::string::npos);

  EXPECT_EQ(run({"analyze", "--strict", cfg}).code, cli::kExitViolation);
  EXPECT_EQ(run({"--strict", "sweep", write("hot_sweep.cfg", text + "sweep.parameter = R\nsweep.start = 1 m\n"
                                                                    "sweep.stop = 10 m\nsweep.points = 4\n"),
                 "--out", path("hot.csv")})
                .code,
            cli::kExitViolation);

  // Capping P_C to the profile restores compliance.
  EXPECT_EQ(run({"--strict", "analyze", write("capped.cfg", text + "regulatory.cap = true\n")}).code, cli::kExitOk);
}

TEST_F(CliTest, ErrorsExitOne) {
  EXPECT_EQ(run({"analyze", "/nonexistent/x.cfg"}).code, cli::kExitError);
  EXPECT_EQ(run({"analyze", write("bad.cfg", "schema = 1\ntopology = monostatic\n")}).code, cli::kExitError);
  EXPECT_EQ(run({"nonsense"}).code, cli::kExitError);
  EXPECT_EQ(run({}).code, cli::kExitError);
  EXPECT_EQ(run({"sweep", write("nosweep.cfg", kRfid)}).code, cli::kExitError);
  EXPECT_EQ(run({"sweep", path("nosweep.cfg"), "--out", path("x.csv")}).code, cli::kExitError);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);

  const CliRun unknown = run({"figure", "fig99", "--out", path("f.csv")});
  EXPECT_EQ(unknown.code, cli::kExitError);
  EXPECT_NE(unknown.err.find("fig3"), std::string::npos);
  EXPECT_NE(unknown.err.find("table1"), std::string::npos);
  EXPECT_FALSE(fs::exists(path("f.csv")));
}

TEST_F(CliTest, SweepWritesAuditedCsv) {
  const std::string cfg = write("sweep.cfg", std::string(kRfid) +
                                                 "sweep.parameter = R\nsweep.start = 1 m\nsweep.stop = 1 km\n"
                                                 "sweep.points = 31\nsweep.spacing = log\n");
  const CliRun r = run({"sweep", cfg, "--out", path("out.csv"), "--audit"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const std::string csv = slurp(path("out.csv"));
  EXPECT_EQ(csv.rfind("R_m,p_rx_dbm,snr_db,c_inf_bps,c_w_bps,regime\n", 0), 0u);
  EXPECT_EQ(parse_csv(csv).size(), 32u);
  EXPECT_EQ(csv.find('\r'), std::string::npos);

  EXPECT_EQ(run({"sweep", cfg, "--out", path("again.csv")}).code, cli::kExitOk);
  EXPECT_EQ(slurp(path("again.csv")), csv);
}

TEST_F(CliTest, ProfilesTable) {
  const CliRun r = run({"profiles"});
  ASSERT_EQ(r.code, cli::kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[1].rfind("FCC_915", 0), 0u);
  EXPECT_NE(rows[1].find("26 MHz"), std::string::npos);
  EXPECT_NE(rows[1].find("3.981 W"), std::string::npos);
  EXPECT_NE(rows[4].find("3.28 W"), std::string::npos);
}

TEST_F(CliTest, FiguresAreDeterministic) {
  for (auto name : figure_names()) {
    const std::string n{name};
    ASSERT_EQ(run({"--quiet", "figure", n, "--out", path(n + "_a.csv")}).code, cli::kExitOk) << n;
    ASSERT_EQ(run({"--quiet", "figure", n, "--out", path(n + "_b.csv")}).code, cli::kExitOk) << n;
    const std::string a = slurp(path(n + "_a.csv"));
    EXPECT_EQ(a, slurp(path(n + "_b.csv"))) << n;
    EXPECT_EQ(a, *render_figure(name)) << n;
  }
}

TEST(GoldenFiles, MatchExactly) {
  const fs::path golden{BSCAP_GOLDEN_DIR};
  ASSERT_EQ(figure_names().size(), 8u);
  for (auto name : figure_names()) {
    const fs::path file = golden / (std::string(name) + ".csv");
    ASSERT_TRUE(fs::exists(file)) << file;
    EXPECT_EQ(*render_figure(name), slurp(file)) << "golden mismatch for " << name;
  }
}

}  // namespace
}  // namespace bscap
