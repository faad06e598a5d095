#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cli/document.hpp"

namespace itrig::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInvalidInput = 2, kInapplicable = 3 };

struct Result {
  int exit_code = kOk;
  Json body;
};

bool looks_rational(const std::string& s);

Result cmd_arctan(const std::string& input_text);
// `source` is a rational such as "8/5" or the text of a planar cone document.
Result cmd_trig2d(const std::string& source, bool with_sba);
Result cmd_transform(const std::string& input_text, const std::string& op, const std::string& arg);
Result cmd_verify(const std::string& input_text, const std::string& suite);
Result cmd_verify_random(std::uint64_t seed, int count, int k, long long max_sine, const std::string& suite);
Result cmd_triangle(const std::vector<std::string>& tangents);
Result cmd_sba(const std::string& source, int max_steps);
Result cmd_plucker(const std::string& input_text);

// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace itrig::cli
