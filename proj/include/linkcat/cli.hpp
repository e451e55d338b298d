#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

namespace linkcat::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;      // unreadable or malformed input
inline constexpr int kExitInterface = 2;  // objects do not match
inline constexpr int kExitNegative = 3;   // not a member / not correct
inline constexpr int kExitRejected = 4;   // precondition, e.g. enum cap
inline constexpr int kExitInternal = 70;  // invariant violation (a bug)

/// Composite of the linking in `first_path` (X -> Y) followed by the one in
/// `second_path` (Y -> Z), with its "newLoops" count.
int run_compose(const std::string& first_path, const std::string& second_path,
                bool flat, std::ostream& out, std::ostream& err);

int run_check(const std::string& path, const std::string& family,
              std::ostream& out, std::ostream& err);

/// `cap` overrides the family's default enumeration cap.
int run_enumerate(const std::string& family, std::size_t n, bool table,
                  std::optional<std::size_t> cap, std::ostream& out,
                  std::ostream& err);

/// `format` is "ascii" or "svg".
int run_render(const std::string& path, const std::string& format,
               std::ostream& out, std::ostream& err);

/// `axioms` as "i-j,k-l" leaf pairs on `formula`.
int run_mll_check(const std::string& formula, const std::string& axioms,
                  std::ostream& out, std::ostream& err);

/// Net in `first_path` (X -o Y) followed by the net in `second_path`.
int run_mll_compose(const std::string& first_path,
                    const std::string& second_path, std::ostream& out,
                    std::ostream& err);

/// Full command line, argv[0] included. Reads LINKCAT_MAX_ENUM.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace linkcat::cli
