// Copyright 2026 The qbound developers

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end checks of the CLI contract (exit codes, formats, files).
// Usage: qbound_cli_integration <path-to-qbound-cli>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

std::string g_cli;
int g_failures = 0;

struct RunResult {
    int exit_code;
    std::string output; // stdout + stderr interleaved
};

RunResult run(const std::string& args) {
    const std::string cmd = g_cli + " " + args + " 2>&1";
    std::array<char, 4096> buffer{};
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return {-1, "popen failed"};
    while (fgets(buffer.data(), buffer.size(), pipe) != nullptr) output += buffer.data();
    const int status = pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, output};
}

void expect(bool condition, const std::string& label, const std::string& detail = "") {
    if (condition) {
        std::printf("[pass] %s\n", label.c_str());
    } else {
        ++g_failures;
        std::printf("[FAIL] %s%s%s\n", label.c_str(), detail.empty() ? "" : ": ",
                    detail.c_str());
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: qbound_cli_integration <qbound-cli>\n");
        return 2;
    }
    g_cli = argv[1];

    // exit 0: builtin problems through every format
    auto r = run("check pauli-xy-equator");
    expect(r.exit_code == 0, "check builtin exits 0", r.output);
    expect(r.output.find("\"m12a\": 1") != std::string::npos, "equator report has m12a = 1",
           r.output);
    expect(r.output.find("\"lhs_sum\"") < r.output.find("\"hr\""), "stable json field order");

    r = run("check pauli-xz-eigenstate --format text");
    expect(r.exit_code == 0, "check eigenstate selector exits 0", r.output);
    expect(r.output.find("self_referential true") != std::string::npos,
           "eigenstate selector reports self_referential", r.output);

    r = run("check pauli-xy-equator --format csv");
    expect(r.exit_code == 0, "csv format exits 0", r.output);
    expect(r.output.rfind("# qbound check csv v1", 0) == 0, "csv has versioned header",
           r.output);

    // exit 1: unreadable and invalid inputs
    r = run("check no_such_file.json");
    expect(r.exit_code == 1, "missing problem file exits 1", r.output);

    write_file("cli_bad_matrix.json",
               R"({"A": {"dim": 2, "matrix": [[[0,0],[1,0]],[[0.5,0],[0,0]]]}, "B": "pauli_z"})");
    r = run("check cli_bad_matrix.json");
    expect(r.exit_code == 1, "non-hermitian matrix exits 1", r.output);
    expect(r.output.find("(0,1)") != std::string::npos, "error names the offending entry",
           r.output);

    r = run("scan haar --dim 2 --samples 0 --out cli_zero");
    expect(r.exit_code == 1, "scan with zero samples exits 1", r.output);

    r = run("bogus-subcommand");
    expect(r.exit_code == 1, "unknown subcommand exits 1", r.output);

    // scenarios
    r = run("scenario eigenstate pauli-xz-eigenstate");
    expect(r.exit_code == 0, "eigenstate scenario exits 0", r.output);
    expect(r.output.find("[pass] c8_hr_rhs_vanishes") != std::string::npos,
           "scenario renders a per-check table", r.output);

    r = run("scenario counterexample pauli-xy-equator");
    expect(r.exit_code == 0, "counterexample scenario exits 0", r.output);

    r = run("scenario counterexample pauli-xz-eigenstate");
    expect(r.exit_code == 2, "predicate failure exits 2", r.output);

    write_file("cli_commuting.json", R"({"A": "pauli_z", "B": "pauli_z"})");
    r = run("scenario search cli_commuting.json");
    expect(r.exit_code == 1, "search on a commuting pair exits 1", r.output);

    r = run("scenario search pauli-xy-equator --seed 5 --starts 8");
    expect(r.exit_code == 0, "search finds an equatorial state", r.output);

    r = run("scenario search pauli-xy-equator --seed 5 --starts 2 --tol 0.2");
    expect(r.exit_code == 3, "unsatisfiable search exits 3", r.output);

    // scans: files land and re-running is byte-identical
    r = run("scan haar --dim 3 --samples 50 --seed 11 --out cli_scan");
    expect(r.exit_code == 0, "haar scan exits 0", r.output);
    const std::string csv_once = read_file("cli_scan.csv");
    expect(csv_once.rfind("# qbound scan csv v1", 0) == 0, "scan csv versioned header");
    r = run("scan haar --dim 3 --samples 50 --seed 11 --out cli_scan_again");
    expect(r.exit_code == 0, "second haar scan exits 0", r.output);
    expect(read_file("cli_scan_again.csv") == csv_once, "identical flags, identical csv");

    r = run("scan approach pauli-xz-eigenstate --steps 7 --seed 2 --out cli_app");
    expect(r.exit_code == 0, "approach scan exits 0", r.output);
    expect(read_file("cli_app.json").find("\"mp2_over_lhs\": 0.5") != std::string::npos,
           "approach endpoint ratio lands at 1/2", read_file("cli_app.json"));
    {
        std::string csv = read_file("cli_app.csv");
        while (!csv.empty() && csv.back() == '\n') csv.pop_back();
        const std::string last_row = csv.substr(csv.rfind('\n') + 1);
        expect(last_row.size() >= 4 && last_row.substr(last_row.size() - 4) == ",0.5",
               "approach csv final column is the endpoint ratio", last_row);
    }

    // seed environment variable
    r = run("scan haar --dim 2 --samples 20 --out cli_env_a");
    expect(r.exit_code == 0, "scan with default seed exits 0", r.output);
    g_cli = "QBOUND_SEED=abc " + std::string(argv[1]);
    r = run("scan haar --dim 2 --samples 20 --out cli_env_b");
    expect(r.exit_code == 1, "invalid QBOUND_SEED exits 1", r.output);
    g_cli = "QBOUND_SEED=42 " + std::string(argv[1]);
    r = run("scan haar --dim 2 --samples 20 --out cli_env_c");
    expect(r.exit_code == 0, "valid QBOUND_SEED exits 0", r.output);
    expect(read_file("cli_env_a.csv") == read_file("cli_env_c.csv"),
           "QBOUND_SEED=42 matches the default seed");
    g_cli = argv[1];

    // json round-trip through the CLI output
    r = run("check pauli-xz-eigenstate --out cli_report.json");
    expect(r.exit_code == 0, "check --out exits 0", r.output);
    const std::string report = read_file("cli_report.json");
    expect(!report.empty() && report.back() == '\n', "report ends with a newline");

    std::printf("%d failure(s)\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
