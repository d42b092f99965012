// Copyright 2026 The qec5 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Drives the qec5 executable and checks exit codes and output files.

#include "gtest/gtest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

int cli(const std::string& args) {
  const std::string cmd = std::string(QEC5_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("qec5_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  static std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
    std::ifstream in(p);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
      std::vector<std::string> row;
      std::stringstream ss(line);
      std::string cell;
      while (std::getline(ss, cell, ',')) row.push_back(cell);
      rows.push_back(row);
    }
    return rows;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, ShowConfigSucceeds) { EXPECT_EQ(cli("show-config fig6"), 0); }

TEST_F(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(cli(""), 1);
  EXPECT_EQ(cli("frobnicate"), 1);
  EXPECT_EQ(cli("preset fig7"), 1);
  EXPECT_EQ(cli("run --config " + (dir_ / "missing.json").string()), 1);
  EXPECT_EQ(cli("sweep --preset fig5 --dt 1,abc"), 1);
}

TEST_F(CliTest, BadConfigExitsOne) {
  EXPECT_EQ(cli("run --config " + write("bad.json", R"({"theta": 9})").string()), 1);
  EXPECT_EQ(cli("run --config " + write("unknown.json", R"({"noise": {"lambda": 1}})").string()), 1);
  EXPECT_EQ(cli("run --config " + write("broken.json", "{").string()), 1);
}

TEST_F(CliTest, ZeroNoiseRunGivesConstantOne) {
  const fs::path cfg = write("quiet.json",
                             R"({"total_time_w0": 4, "noise": {"enable_dephasing": false, "enable_relaxation": false}})");
  const fs::path out = dir_ / "quiet.csv";
  ASSERT_EQ(cli("run --validate --config " + cfg.string() + " --out " + out.string()), 0);
  const auto rows = read_csv(out);
  ASSERT_EQ(rows.size(), 6u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_NEAR(std::stod(rows[i][1]), 1.0, 1e-11);
    EXPECT_NEAR(std::stod(rows[i][2]), 1.0, 1e-11);
  }
  EXPECT_TRUE(fs::exists(dir_ / "quiet.manifest.json"));
}

TEST_F(CliTest, PresetOverridesAndSweep) {
  const fs::path out = dir_ / "f4.csv";
  ASSERT_EQ(cli("preset fig4 --total-time 20 --out " + out.string()), 0);
  const auto rows = read_csv(out);
  ASSERT_EQ(rows.size(), 22u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GE(std::stod(rows[i][1]), std::stod(rows[i][2]));

  const fs::path sweep = dir_ / "sweep.csv";
  ASSERT_EQ(cli("sweep --preset fig5 --total-time 2 --dt 1,0.1,0.01 --threads 2 --out " + sweep.string()), 0);
  const auto s = read_csv(sweep);
  ASSERT_EQ(s.size(), 4u);
  EXPECT_LE(std::stod(s[1][1]), std::stod(s[2][1]));
  EXPECT_LE(std::stod(s[2][1]), std::stod(s[3][1]));
}

TEST_F(CliTest, QuickValidateSucceeds) { EXPECT_EQ(cli("validate --quick"), 0); }
