// SPDX-License-Identifier: Apache-2.0
//
// celledge: cell-edge link-level simulator for cell-free massive MIMO and RIS
// Copyright (C) 2026 celledge contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

struct Result {
    int status;
    std::string output;
};

Result sh(const std::string& args) {
    const std::string cmd = std::string(CELLSIM_EXE) + " " + args + " 2>&1";
    Result r{-1, {}};
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    while (std::fgets(buf, sizeof buf, p) != nullptr) r.output += buf;
    const int raw = pclose(p);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

class TempDir {
public:
    TempDir() {
        std::string tmpl = (fs::temp_directory_path() / "cellsim-XXXXXX").string();
        REQUIRE(mkdtemp(tmpl.data()) != nullptr);
        path_ = tmpl;
    }
    ~TempDir() {
        std::error_code ec;
        fs::permissions(path_, fs::perms::owner_all, fs::perm_options::add, ec);
        fs::remove_all(path_, ec);
    }
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

void write_text(const fs::path& p, const std::string& s) {
    std::ofstream out(p);
    out << s;
}

const char* kSmall = R"({"trials": 4, "realizations_per_trial": 2, "m": 12, "k": 3, "s": 2,
                         "n_per_surface": 16, "cfmimo": {"expectation_samples": 16}})";

}  // namespace

TEST_CASE("run writes samples, summary and manifest") {
    TempDir tmp;
    write_text(tmp.path() / "c.json", kSmall);
    const auto r = sh("run --config " + (tmp.path() / "c.json").string() + " --workers 1 --out " +
                      (tmp.path() / "o").string());
    REQUIRE(r.status == 0);
    const std::string samples = slurp(tmp.path() / "o" / "samples.csv");
    CHECK(samples.rfind("scheme,trial,realization,user,rate_bps_hz\n", 0) == 0);
    std::size_t lines = 0;
    for (char ch : samples) lines += ch == '\n';
    CHECK(lines == 1 + 4 * 4 * 2 * 3);
    const std::string summary = slurp(tmp.path() / "o" / "summary.txt");
    CHECK(summary.find("ZFP.p5_se = ") != std::string::npos);
    CHECK(summary.find("RIS_OPT.mean_sum_throughput = ") != std::string::npos);
    CHECK(fs::exists(tmp.path() / "o" / "manifest.json"));
    for (const auto& e : fs::directory_iterator(tmp.path() / "o")) {
        CHECK(e.path().extension() != ".partial");
    }
}

TEST_CASE("samples are byte-identical across worker counts and after replay") {
    TempDir tmp;
    write_text(tmp.path() / "c.json", kSmall);
    const std::string cfg = (tmp.path() / "c.json").string();
    REQUIRE(sh("run --config " + cfg + " --seed 5 --workers 1 --out " + (tmp.path() / "a").string()).status == 0);
    REQUIRE(sh("run --config " + cfg + " --seed 5 --workers 8 --out " + (tmp.path() / "b").string()).status == 0);
    const std::string a = slurp(tmp.path() / "a" / "samples.csv");
    CHECK(a == slurp(tmp.path() / "b" / "samples.csv"));
    CHECK(slurp(tmp.path() / "a" / "summary.txt") == slurp(tmp.path() / "b" / "summary.txt"));

    REQUIRE(sh("replay " + (tmp.path() / "a" / "manifest.json").string() + " --workers 3 --out " +
               (tmp.path() / "c").string())
                .status == 0);
    CHECK(a == slurp(tmp.path() / "c" / "samples.csv"));

    REQUIRE(sh("run --config " + cfg + " --seed 6 --workers 1 --out " + (tmp.path() / "d").string()).status == 0);
    CHECK(a != slurp(tmp.path() / "d" / "samples.csv"));
}

TEST_CASE("flags override the configuration file") {
    TempDir tmp;
    write_text(tmp.path() / "c.json", kSmall);
    REQUIRE(sh("run --config " + (tmp.path() / "c.json").string() +
               " --trials 2 --realizations 1 --out " + (tmp.path() / "o").string())
                .status == 0);
    const std::string summary = slurp(tmp.path() / "o" / "summary.txt");
    CHECK(summary.find("CBF.samples = 6\n") != std::string::npos);
}

TEST_CASE("unwritable output directory fails cleanly") {
    if (geteuid() == 0) {
        // Permission bits do not restrict root; use a path below a regular file.
        TempDir tmp;
        write_text(tmp.path() / "file", "x");
        const auto r = sh("run --trials 1 --realizations 1 --out " + (tmp.path() / "file" / "o").string());
        CHECK(r.status != 0);
        CHECK(r.output.find("error:") != std::string::npos);
        return;
    }
    TempDir tmp;
    fs::create_directory(tmp.path() / "ro");
    fs::permissions(tmp.path() / "ro", fs::perms::owner_read | fs::perms::owner_exec);
    const auto r = sh("run --trials 1 --realizations 1 --out " + (tmp.path() / "ro").string());
    CHECK(r.status != 0);
    CHECK(r.output.find("error:") != std::string::npos);
    CHECK(!fs::exists(tmp.path() / "ro" / "samples.csv"));
}

TEST_CASE("bad configurations exit non-zero with the field name") {
    TempDir tmp;
    write_text(tmp.path() / "neg.json", R"({"trials": -3})");
    const auto r = sh("run --config " + (tmp.path() / "neg.json").string() + " --out " +
                      (tmp.path() / "o").string());
    CHECK(r.status != 0);
    CHECK(r.output.find("trials") != std::string::npos);
    CHECK(!fs::exists(tmp.path() / "o" / "samples.csv"));

    const auto both = sh("run --preset fig3 --config " + (tmp.path() / "neg.json").string());
    CHECK(both.status != 0);
    CHECK(sh("run --preset fig7 --out " + (tmp.path() / "p").string()).status != 0);
}

TEST_CASE("layout and trace dumps") {
    TempDir tmp;
    write_text(tmp.path() / "c.json", kSmall);
    const std::string cfg = (tmp.path() / "c.json").string();
    REQUIRE(sh("layout --config " + cfg + " --trial 1 --csv " + (tmp.path() / "l.csv").string()).status == 0);
    const std::string layout = slurp(tmp.path() / "l.csv");
    CHECK(layout.rfind("kind,index,x_m,y_m\n", 0) == 0);
    std::size_t lines = 0;
    for (char ch : layout) lines += ch == '\n';
    CHECK(lines == 1 + 12 + 1 + 2 + 3);

    REQUIRE(sh("trace --config " + cfg + " --user 2 --csv " + (tmp.path() / "t.csv").string()).status == 0);
    const std::string trace = slurp(tmp.path() / "t.csv");
    CHECK(trace.rfind("iteration,objective\n1,", 0) == 0);
    CHECK(sh("trace --config " + cfg + " --user 9 --csv " + (tmp.path() / "u.csv").string()).status != 0);
}

TEST_CASE("defaults prints parsable JSON") {
    const auto r = sh("defaults");
    CHECK(r.status == 0);
    CHECK(r.output.find("\"trials\": 500") != std::string::npos);
}
