#include "ybe/permutation.hpp"

#include "ybe/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace ybe {

namespace {

struct ImageHash {
  std::size_t operator()(const std::vector<Point>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Point p : v) {
      h ^= p;
      h *= 1099511628211ull;
    }
    return h;
  }
};

void check_same_size(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::SizeMismatch, "permutation sizes differ: " + std::to_string(p.size()) +
                                             " vs " + std::to_string(q.size()));
  }
}

Point parse_point(std::string_view token) {
  BigInt v = parse_bigint(token);
  if (v < 1 || v > std::numeric_limits<Point>::max()) {
    throw Error(ErrorCode::OutOfRange, "point out of range: " + std::string(token));
  }
  return v.convert_to<Point>();
}

}  // namespace

Permutation Permutation::identity(std::size_t n) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{1});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<Point> images) {
  const std::size_t n = images.size();
  std::vector<bool> seen(n + 1, false);
  for (std::size_t x = 0; x < n; ++x) {
    Point y = images[x];
    if (y < 1 || y > n) {
      throw Error(ErrorCode::OutOfRange, "image " + std::to_string(y) + " of point " +
                                             std::to_string(x + 1) + " outside 1.." +
                                             std::to_string(n));
    }
    if (seen[y]) {
      throw Error(ErrorCode::NotBijective, "value " + std::to_string(y) + " appears twice");
    }
    seen[y] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t n, std::span<const Cycle> cycles) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{1});
  std::vector<bool> used(n + 1, false);
  for (const Cycle& c : cycles) {
    for (Point x : c) {
      if (x < 1 || x > n) {
        throw Error(ErrorCode::OutOfRange,
                    "point " + std::to_string(x) + " outside 1.." + std::to_string(n));
      }
      if (used[x]) {
        throw Error(ErrorCode::NotBijective, "point " + std::to_string(x) + " repeated in cycles");
      }
      used[x] = true;
    }
    for (std::size_t i = 0; i < c.size(); ++i) images[c[i] - 1] = c[(i + 1) % c.size()];
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x + 1) return false;
  }
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  check_same_size(p, q);
  std::vector<Point> images(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) images[x] = p(q.images()[x]);
  return Permutation::from_images(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> images(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) images[p.images()[x] - 1] = static_cast<Point>(x + 1);
  return Permutation::from_images(std::move(images));
}

std::vector<Cycle> cycle_decomposition(const Permutation& p) {
  std::vector<Cycle> cycles;
  std::vector<bool> seen(p.size() + 1, false);
  for (Point start = 1; start <= p.size(); ++start) {
    if (seen[start]) continue;
    Cycle c;
    for (Point x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      c.push_back(x);
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

Permutation parse_perm(std::string_view text, std::size_t n) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    if (n == 0) throw Error(ErrorCode::ParseError, "empty permutation");
    return Permutation::identity(n);
  }

  if (text[first] != '(') {
    std::vector<Point> images;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) images.push_back(parse_point(token));
    if (n != 0 && images.size() != n) {
      throw Error(ErrorCode::SizeMismatch, "expected " + std::to_string(n) + " images, got " +
                                               std::to_string(images.size()));
    }
    return Permutation::from_images(std::move(images));
  }

  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cycle notation needs an explicit size");
  std::vector<Cycle> cycles;
  std::size_t pos = first;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c != '(') throw Error(ErrorCode::ParseError, "expected '(' in cycle notation");
    auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw Error(ErrorCode::ParseError, "unterminated cycle");
    std::string_view body = text.substr(pos + 1, close - pos - 1);
    Cycle cycle;
    std::size_t start = 0;
    while (start <= body.size()) {
      auto comma = body.find(',', start);
      std::string_view tok = body.substr(start, comma == std::string_view::npos ? body.npos
                                                                                : comma - start);
      auto b = tok.find_first_not_of(" \t");
      auto e = tok.find_last_not_of(" \t");
      if (b != std::string_view::npos) {
        cycle.push_back(parse_point(tok.substr(b, e - b + 1)));
      } else if (comma != std::string_view::npos || !cycle.empty()) {
        throw Error(ErrorCode::ParseError, "empty entry in cycle");
      }
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    pos = close + 1;
  }
  return Permutation::from_cycles(n, cycles);
}

std::string format_perm(const Permutation& p, PermStyle style) {
  std::string out;
  if (style == PermStyle::OneLine) {
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (x) out += ' ';
      out += std::to_string(p.images()[x]);
    }
    return out;
  }
  for (const Cycle& c : cycle_decomposition(p)) {
    if (style == PermStyle::CyclesCompact && c.size() == 1) continue;
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

std::uint64_t group_closure_order(std::span<const Permutation> gens, std::uint64_t limit) {
  if (gens.empty()) return 1;
  const std::size_t n = gens.front().size();
  for (const auto& g : gens) {
    if (g.size() != n) throw Error(ErrorCode::SizeMismatch, "generators have different sizes");
  }
  const Permutation id = Permutation::identity(n);
  std::unordered_set<std::vector<Point>, ImageHash> seen;
  std::deque<Permutation> frontier;
  seen.emplace(id.images().begin(), id.images().end());
  frontier.push_back(id);
  while (!frontier.empty()) {
    Permutation cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      Permutation next = compose(g, cur);
      std::vector<Point> key(next.images().begin(), next.images().end());
      if (seen.insert(std::move(key)).second) {
        if (seen.size() > limit) {
          throw Error(ErrorCode::LimitExceeded,
                      "group closure exceeded " + std::to_string(limit) + " elements");
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  return seen.size();
}

std::vector<std::vector<Point>> orbits_of(std::span<const Permutation> gens, std::size_t n) {
  std::vector<std::vector<Point>> orbits;
  std::vector<bool> seen(n + 1, false);
  for (Point start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    std::vector<Point> orbit{start};
    seen[start] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& g : gens) {
        Point y = g(orbit[head]);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

CycleType cycle_type_of(const Permutation& p) {
  CycleType t{p.size(), {}};
  for (const Cycle& c : cycle_decomposition(p)) ++t.multiplicities[c.size()];
  return t;
}

namespace {

void check_cycle_type(const CycleType& t) {
  std::size_t total = 0;
  for (auto [d, count] : t.multiplicities) {
    if (d == 0) throw Error(ErrorCode::InvalidArgument, "cycle length 0");
    total += d * count;
  }
  if (total != t.size) {
    throw Error(ErrorCode::InvalidArgument, "cycle type covers " + std::to_string(total) +
                                                " points, expected " + std::to_string(t.size));
  }
}

}  // namespace

double cycle_type_count_log10(const CycleType& t) {
  check_cycle_type(t);
  const double ln10 = std::log(10.0);
  double ln = std::lgamma(static_cast<double>(t.size) + 1.0);
  for (auto [d, count] : t.multiplicities) {
    ln -= std::lgamma(static_cast<double>(count) + 1.0);
    ln -= static_cast<double>(count) * std::log(static_cast<double>(d));
  }
  return ln / ln10;
}

BigInt cycle_type_count_exact(const CycleType& t) {
  check_cycle_type(t);
  auto factorial = [](std::size_t m) {
    BigInt f = 1;
    for (std::size_t i = 2; i <= m; ++i) f *= i;
    return f;
  };
  BigInt denominator = 1;
  for (auto [d, count] : t.multiplicities) denominator *= factorial(count) * big_pow(d, count);
  return factorial(t.size) / denominator;
}

}  // namespace ybe
