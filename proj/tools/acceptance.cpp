// Copyright 2026 The lrchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.

// Standalone runner for the numbered verification suite: one PASS/FAIL
// line per check, exit 0 iff everything executed passed.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "lrchain/checks.hpp"
#include "lrchain/params.hpp"

int main(int argc, char** argv) {
    CLI::App app{"lrchain verification suite runner"};
    bool list = false, quick = false;
    int criterion = 0;
    std::string part;
    lrchain::CheckOptions options;
    app.add_flag("--list", list, "list the registered checks and exit");
    app.add_flag("--quick", quick,
                 "run only the quick subset (or trim the selected check)");
    app.add_option("--criterion", criterion, "run a single check by number");
    app.add_option("--part", part, "sub-part of a split check");
    app.add_option("--seed", options.seed, "base seed for the suite");
    app.add_option("--theta", options.theta_filter,
                   "restrict theta sweeps to this value where it appears");
    CLI11_PARSE(app, argc, argv);
    options.quick = quick;

    if (list) {
        for (const lrchain::CheckEntry& e : lrchain::check_registry()) {
            std::string tag = std::to_string(e.id);
            if (e.part[0] != '\0') tag += std::string(":") + e.part;
            std::printf("%-10s %s%s\n", tag.c_str(), e.name,
                        e.in_quick ? "  [quick]" : "");
        }
        return 0;
    }

    bool all_passed = true;
    auto report = [&](const lrchain::CheckResult& r) {
        std::printf("%s\n", lrchain::check_line(r).c_str());
        std::fflush(stdout);
        if (!r.passed) all_passed = false;
    };
    try {
        if (criterion > 0) {
            report(lrchain::run_check(criterion, part, options));
        } else {
            for (const lrchain::CheckEntry& e : lrchain::check_registry()) {
                if (quick && !e.in_quick) continue;
                report(lrchain::run_check(e.id, e.part, options));
            }
        }
    } catch (const lrchain::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return all_passed ? 0 : 1;
}
