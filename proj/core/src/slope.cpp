#include "rk/slope.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace rk {

Slope reduce_slope(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw std::invalid_argument("slope 0/0 is undefined");
  if (p == std::numeric_limits<std::int64_t>::min() ||
      q == std::numeric_limits<std::int64_t>::min())
    throw std::invalid_argument("slope component out of range");
  if (q == 0) return Slope::vertical();
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const std::int64_t g = std::gcd(p < 0 ? -p : p, q);
  return Slope(false, p / g, q / g);
}

Slope negated(Slope s) {
  if (s.is_vertical()) return s;
  return reduce_slope(-s.num(), s.den());
}

Slope reciprocal(Slope s) {
  if (s.is_vertical()) return Slope::integer(0);
  if (s.num() == 0) return Slope::vertical();
  return reduce_slope(s.den(), s.num());
}

bool has_order_index(Slope s) {
  if (s.is_vertical()) return true;
  return s.den() == 1 || s.num() == 1 || s.num() == -1;
}

std::int64_t order_index(Slope s) {
  if (s.is_vertical()) return 1;
  const std::int64_t p = s.num();
  const std::int64_t q = s.den();
  if (p == 0) return 0;
  if (q == 1 && p == -1) return 2;
  if (q == 1 && p == 1) return 3;
  if (q == 1) {
    const std::int64_t k = p < 0 ? -p : p;
    return 4 * (k - 1) + (p < 0 ? 1 : 3);
  }
  if (p == -1) return 4 * (q - 1);
  if (p == 1) return 4 * (q - 1) + 2;
  throw std::invalid_argument("slope " + slope_token(s) +
                              " is not an integer or reciprocal of an integer");
}

Slope slope_at_index(std::int64_t index) {
  if (index < 0) throw std::invalid_argument("negative slope index");
  switch (index) {
    case 0: return Slope::integer(0);
    case 1: return Slope::vertical();
    case 2: return Slope::integer(-1);
    case 3: return Slope::integer(1);
    default: break;
  }
  const std::int64_t k = index / 4 + 1;
  switch (index % 4) {
    case 0: return reduce_slope(-1, k);
    case 1: return Slope::integer(-k);
    case 2: return reduce_slope(1, k);
    default: return Slope::integer(k);
  }
}

std::vector<Slope> slope_prefix(Slope s) {
  const std::int64_t last = order_index(s);
  std::vector<Slope> out;
  out.reserve(static_cast<std::size_t>(last) + 1);
  for (std::int64_t i = 0; i <= last; ++i) out.push_back(slope_at_index(i));
  return out;
}

namespace {

// (level, rank within level, q, p); family members rank 0..3, others rank 4.
std::tuple<std::int64_t, int, std::int64_t, std::int64_t> order_key(Slope s) {
  if (s.is_vertical()) return {1, 1, 0, 0};
  const std::int64_t p = s.num();
  const std::int64_t q = s.den();
  const std::int64_t ap = p < 0 ? -p : p;
  const std::int64_t level = ap > q ? ap : q;
  if (p == 0) return {1, 0, 0, 0};
  if (ap == 1 && q == 1) return {1, p < 0 ? 2 : 3, 0, 0};
  if (ap == 1) return {level, p < 0 ? 0 : 2, 0, 0};
  if (q == 1) return {level, p < 0 ? 1 : 3, 0, 0};
  return {level, 4, q, p};
}

}  // namespace

bool slope_less(Slope a, Slope b) { return order_key(a) < order_key(b); }

std::string slope_token(Slope s) {
  if (s.is_vertical()) return "inf";
  if (s.den() == 1) return std::to_string(s.num());
  return std::to_string(s.num()) + "/" + std::to_string(s.den());
}

namespace {

std::int64_t parse_int(std::string_view text, const char* what) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw std::invalid_argument(std::string("malformed ") + what + ": '" +
                                std::string(text) + "'");
  return value;
}

}  // namespace

Slope parse_slope_token(std::string_view token) {
  if (token == "inf") return Slope::vertical();
  const auto slash = token.find('/');
  if (slash == std::string_view::npos)
    return Slope::integer(parse_int(token, "slope"));
  const std::int64_t p = parse_int(token.substr(0, slash), "slope numerator");
  const std::int64_t q = parse_int(token.substr(slash + 1), "slope denominator");
  if (q <= 0)
    throw std::invalid_argument("slope denominator must be positive in '" +
                                std::string(token) + "'");
  if (std::gcd(p < 0 ? -p : p, q) != 1)
    throw std::invalid_argument("unreduced slope token '" + std::string(token) +
                                "'");
  return reduce_slope(p, q);
}

}  // namespace rk
