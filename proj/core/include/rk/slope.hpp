#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rk {

/// A reduced rational slope p/q (q >= 1, gcd(|p|, q) = 1, sign carried on p)
/// or the vertical slope. Slope 0 is stored as 0/1; the vertical slope is the
/// unique representation of infinity and carries no numerator/denominator.
///
/// Construct finite slopes through reduce_slope() so the invariants hold.
class Slope {
public:
  static Slope vertical() { return Slope(true, 1, 0); }
  static Slope integer(std::int64_t k) { return Slope(false, k, 1); }

  bool is_vertical() const { return vertical_; }
  /// Numerator / denominator of a finite slope. Only meaningful when
  /// !is_vertical(); the vertical slope reports p = 1, q = 0 so that
  /// structural equality works, but callers should branch on is_vertical().
  std::int64_t num() const { return p_; }
  std::int64_t den() const { return q_; }

  bool operator==(const Slope&) const = default;

private:
  friend Slope reduce_slope(std::int64_t p, std::int64_t q);
  Slope(bool vertical, std::int64_t p, std::int64_t q)
      : vertical_(vertical), p_(p), q_(q) {}

  bool vertical_;
  std::int64_t p_;
  std::int64_t q_;
};

/// Normal form of the rational p/q: gcd removed, denominator positive,
/// sign on the numerator. q = 0 yields the vertical slope.
/// Throws std::invalid_argument on (0, 0).
Slope reduce_slope(std::int64_t p, std::int64_t q);

/// -s. Negating the vertical slope yields the vertical slope.
Slope negated(Slope s);

/// 1/s, with 1/0 = vertical and 1/vertical = 0.
Slope reciprocal(Slope s);

/// True for slopes with a position in the canonical order: integers,
/// reciprocals of integers, and the vertical slope.
bool has_order_index(Slope s);

/// Position in the canonical slope enumeration
///   0, inf, -1, 1, -1/2, -2, 1/2, 2, -1/3, -3, 1/3, 3, ...
/// i.e. index(0) = 0, index(inf) = 1, index(-1) = 2, index(1) = 3 and, for
/// q >= 2, the block -1/q, -q, 1/q, q occupies indices 4(q-1) .. 4(q-1)+3.
/// Throws std::invalid_argument for slopes outside the enumerated family.
std::int64_t order_index(Slope s);

/// Inverse of order_index.
Slope slope_at_index(std::int64_t index);

/// All slopes up to and including s in the canonical order.
/// Throws std::invalid_argument when s has no order index.
std::vector<Slope> slope_prefix(Slope s);

/// Total order on all slopes. Restricted to the enumerated family it is the
/// canonical order above; other rationals sort after the family block of the
/// same level max(|p|, q), keyed by (q, p). Used to fix row and file orders.
bool slope_less(Slope a, Slope b);

/// Text form: "0", "inf", "-1/2", "3", ...
std::string slope_token(Slope s);

/// Parses a slope token: "inf", "<p>", or "<p>/<q>" with q > 0 and gcd(|p|,q)=1.
/// Throws std::invalid_argument on malformed or unreduced tokens.
Slope parse_slope_token(std::string_view token);

}  // namespace rk
