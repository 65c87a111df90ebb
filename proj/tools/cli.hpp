#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace jdeform::cli {

/// Exit codes: 0 pass, 1 mathematical failure, 2 input error.
enum Exit { kPass = 0, kFail = 1, kInputError = 2 };

/// Flags shared by every subcommand.
struct Options {
  std::optional<std::size_t> order;
  std::string format = "json";  // or "text"
  std::optional<std::string> field;  // "q" or "qi"; overrides the file
  std::optional<std::size_t> max_basis;
  std::size_t max_order = 5;
  unsigned threads = 1;
};

const std::vector<std::string>& subcommands();

/// Runs one subcommand on a problem document held in memory.
int run_document(const std::string& cmd, const std::string& document, const Options& opts, std::ostream& out,
                 std::ostream& err, std::optional<std::string> max_basis_env = {});

/// Runs one invocation. `args` excludes the program name; `max_basis_env`
/// is the value of JACOBI_DEFORM_MAX_BASIS, if set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> max_basis_env = {});

}  // namespace jdeform::cli
