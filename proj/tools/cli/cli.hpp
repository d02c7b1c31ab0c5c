#pragma once

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace isotwist::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

inline constexpr const char* kSchemaVersion = "1.0";

struct Outcome {
    int exit_code = kExitOk;
    nlohmann::json response;  // success body or {"error": {...}}
    bool pretty = false;
    std::string text;  // help output; replaces the response when non-empty
};

// Parses argv-style arguments (without the program name) and runs one subcommand.
// Never throws; errors are reported through the exit code and an error body.
Outcome run(const std::vector<std::string>& args);

// Writes the response as compact JSON, or as an indented key/value listing when `pretty`.
void render(const nlohmann::json& response, bool pretty, std::ostream& out);

// Full front end: run, render to `out`, error messages to `err`.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isotwist::cli
