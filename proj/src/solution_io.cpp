#include "ybe/solution_io.hpp"

#include "ybe/error.hpp"

#include <fstream>
#include <sstream>

namespace ybe {

Solution parse_solution(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    lines.push_back(line.substr(b));
  }
  if (lines.empty()) throw Error(ErrorCode::ParseError, "solution file is empty");

  BigInt n_big;
  try {
    std::string first = lines[0];
    first.erase(first.find_last_not_of(" \t\r") + 1);
    n_big = parse_bigint(first);
  } catch (const Error&) {
    throw Error(ErrorCode::ParseError, "first line must be the size n, got '" + lines[0] + "'");
  }
  if (n_big < 1 || n_big > 100000) {
    throw Error(ErrorCode::OutOfRange, "solution size out of range: " + lines[0]);
  }
  const std::size_t n = n_big.convert_to<std::size_t>();
  if (lines.size() != 1 + n && lines.size() != 1 + 2 * n) {
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(n) + " or " +
                                           std::to_string(2 * n) + " permutation lines, got " +
                                           std::to_string(lines.size() - 1));
  }

  auto read_family = [&](std::size_t offset, const char* name) {
    std::vector<Permutation> family;
    for (std::size_t x = 0; x < n; ++x) {
      try {
        family.push_back(parse_perm(lines[offset + x], n));
      } catch (const Error& e) {
        throw Error(e.code(), std::string(name) + "_" + std::to_string(x + 1) + ": " + e.what());
      }
    }
    return family;
  };

  auto sigma = read_family(1, "sigma");
  if (lines.size() == 1 + n) return Solution::from_sigma(std::move(sigma));

  auto gamma = read_family(1 + n, "gamma");
  auto derived = derive_gamma(sigma);
  for (std::size_t y = 0; y < n; ++y) {
    if (derived[y] != gamma[y]) {
      throw Error(ErrorCode::NotASolution,
                  "gamma_" + std::to_string(y + 1) + " disagrees with the gamma derived from sigma");
    }
  }
  return Solution::from_families(std::move(sigma), std::move(gamma));
}

Solution load_solution(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_solution(buf.str());
}

std::string format_solution(const Solution& s, const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += std::to_string(s.size()) + "\n";
  for (const auto& p : s.sigmas()) out += format_perm(p, PermStyle::OneLine) + "\n";
  for (const auto& p : s.gammas()) out += format_perm(p, PermStyle::OneLine) + "\n";
  return out;
}

void save_solution(const std::filesystem::path& path, const Solution& s,
                   const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out << format_solution(s, comments);
}

}  // namespace ybe
