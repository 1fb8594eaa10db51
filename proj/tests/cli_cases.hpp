#pragma once

#include <array>
#include <cstdio>
#include <sys/wait.h>
#include <string>
#include <vector>

namespace clicases {

struct CliCase {
    const char* name;        // also the golden file stem
    const char* args;        // "{d}" expands to the test data directory
    int expected_exit;
};

// One entry per subcommand over the three worked matrices (the 2x2
// integer example, the 3x4 integer pattern, the 3x4 Z5 pattern).
inline const std::vector<CliCase>& cases() {
    static const std::vector<CliCase> v = {
        {"collapse_ex22", "collapse {d}/ex22.mat", 0},
        {"collapse_balanced_ex22", "collapse --balanced {d}/ex22.mat", 0},
        {"preimage_balanced_ex22", "preimage --balanced {d}/ex22.mat", 0},
        {"preimage_ex22", "preimage {d}/ex22.mat", 0},
        {"canonical_ex22", "canonical {d}/ex22.mat", 0},
        {"monge_ex22", "monge {d}/ex22.mat", 0},
        {"check_fig1", "check --balanced --target {d}/zero23_int.mat {d}/fig1.mat", 1},
        {"check_ex3x", "check --balanced --target {d}/zero23_z5.mat {d}/ex3x.mat", 0},
        {"check_bad22", "check --balanced --target {d}/zero11.mat {d}/bad22.mat", 1},
        {"complete_ex3x", "complete --balanced --target {d}/zero23_z5.mat {d}/ex3x.mat", 0},
        {"complete_count_ex3x",
         "complete --balanced --target {d}/zero23_z5.mat {d}/ex3x.mat --count", 0},
        {"complete_all_ex3x",
         "complete --balanced --target {d}/zero23_z5.mat {d}/ex3x.mat --all", 0},
        {"complete_sigma_count_ex3x",
         "complete --target {d}/zero23_z5.mat {d}/ex3x.mat --count", 0},
        {"complete_count_bad22",
         "complete --balanced --target {d}/zero11.mat {d}/bad22.mat --count", 1},
    };
    return v;
}

inline std::string expand(const std::string& args, const std::string& data_dir) {
    std::string out;
    for (std::size_t i = 0; i < args.size();) {
        if (args.compare(i, 3, "{d}") == 0) {
            out += data_dir;
            i += 3;
        } else {
            out += args[i++];
        }
    }
    return out;
}

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout only
};

inline RunResult run(const std::string& bin, const std::string& args) {
    std::string cmd = bin + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.output.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace clicases
