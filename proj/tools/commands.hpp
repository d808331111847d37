#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hammock::cli {

enum Exit { kOk = 0, kFailed = 1, kBadInput = 2, kNotDynkin = 3 };

struct RunConfig {
    std::string quiver;
    std::string vertex;
    std::string arrows;
    bool arrows_given = false;  // an empty list is a valid spec
    std::string beta;
    std::string variant = "source";
    int fspec = -1;
    int window = 0;  // 0: pick from the quiver size
    std::string format = "json";
    std::string sweep;
    bool hset = false;
    bool inject_fault = false;
    std::uint64_t seed = 20240101;
};

// bad flags or input; mapped to exit 2
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int cmd_hammock(const RunConfig &cfg, std::ostream &out);
int cmd_exseq(const RunConfig &cfg, std::ostream &out);
int cmd_pibar(const RunConfig &cfg, std::ostream &out);
int cmd_complex(const RunConfig &cfg, std::ostream &out);
int cmd_render(const RunConfig &cfg, std::ostream &out);
int cmd_qchar(const RunConfig &cfg, std::ostream &out);
int cmd_fpoly(const RunConfig &cfg, std::ostream &out);
int cmd_check(const RunConfig &cfg, std::ostream &out);

}  // namespace hammock::cli
