#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "napgeo/fuzz.hpp"
#include "napgeo/napoleon.hpp"

namespace napgeo::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;

// "ax,ay bx,by cx,cy" with rational components ("3", "-1/2").
// Throws std::invalid_argument with a diagnostic on malformed text.
Triple parse_triangle(std::string_view text);

int cmd_verify(std::string_view triangle, std::ostream& out, std::ostream& err);
int cmd_run(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_fuzz(const fuzz::FuzzConfig& config, std::ostream& out, std::ostream& err);
int cmd_svg(std::string_view triangle, std::string_view layers, const std::string& path,
            std::ostream& out, std::ostream& err);

// Full command line (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace napgeo::cli
