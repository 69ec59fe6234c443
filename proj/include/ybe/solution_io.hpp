#pragma once

#include "ybe/solution.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace ybe {

/// Plain-text solution file:
///   line 1         n
///   next n lines   sigma_1 .. sigma_n (one-line or cycle notation)
///   next n lines   gamma_1 .. gamma_n (optional; derived when absent)
/// Blank lines and lines starting with '#' are ignored. A supplied gamma
/// family must agree with the derived one.
Solution parse_solution(std::string_view text);

Solution load_solution(const std::filesystem::path& path);

/// Writes n, sigma and gamma in one-line notation, preceded by `comments`
/// (each emitted as "# <line>").
std::string format_solution(const Solution& s, const std::vector<std::string>& comments = {});

void save_solution(const std::filesystem::path& path, const Solution& s,
                   const std::vector<std::string>& comments = {});

}  // namespace ybe
