#ifndef CARTCODE_CLI_HPP
#define CARTCODE_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cartcode::cli {

enum class Format { Text, Json, Csv };

/// Parsed invocation; filled by run() from argv but also constructible
/// directly for embedding.
struct RunConfig {
    std::string field_spec;
    std::string prod_spec;
    std::string command;               // params | count | enumerate | dist | verify
    std::optional<std::int64_t> u;
    std::optional<std::pair<std::int64_t, std::int64_t>> u_range;
    Format format = Format::Text;
    std::uint64_t scan_cap = std::uint64_t{1} << 24;
    std::uint64_t orbit_cap = 100'000'000;
    std::string poly_table; // optional modulus override file
    std::uint64_t seed = 0;
};

// exit codes
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kBadInput = 2;
inline constexpr int kCapExceeded = 3;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace cartcode::cli

#endif // CARTCODE_CLI_HPP
