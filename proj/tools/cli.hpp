#pragma once
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "spin7/report.hpp"

namespace spin7::cli {

// exit codes: 0 all checks passed, 1 a check failed, 2 usage error
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// file name -> exact file content
std::map<std::string, std::string> golden_files();
std::string golden_dir();  // SPIN7_GOLDEN_DIR, else the source tree's golden/

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};
struct Suite {
    std::string name;
    std::vector<Check> checks;
    report::Json info = report::Json::object();  // measured, not asserted
};
// golden: directory to compare against; empty skips the golden suite
std::vector<Suite> verify_all(unsigned long seed, const std::string& golden);

}  // namespace spin7::cli
