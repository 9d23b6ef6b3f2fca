#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wegner {

// One lattice site, d integer coordinates.
using Point = std::vector<int>;

int l1_norm(const Point& x);
Point negate(const Point& x);
Point subtract(const Point& a, const Point& b);
std::string point_to_string(const Point& x);

// a*b in 64 bit; overflow is a hard error, never wraparound
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/* Cube [-L,L]^d of lattice points with a fixed deterministic enumeration:
 * lexicographic, coordinate 0 most significant, each coordinate running
 * -L..L, so that index(point(i)) == i for every i. */
class LatticeBox {
 public:
  LatticeBox(int dimension, int half_width);

  int dimension() const { return d_; }
  int half_width() const { return L_; }
  std::int64_t point_count() const { return count_; }

  Point point(std::int64_t index) const;
  void point_into(std::int64_t index, Point& out) const;
  std::int64_t index(const Point& p) const;
  bool contains(const Point& p) const;
  std::vector<Point> points() const;

  // odometer iteration: p = first_point(); do { ... } while (next_point(p));
  Point first_point() const;
  bool next_point(Point& p) const;

 private:
  int d_;
  int L_;
  std::int64_t count_;
};

/* Multi-index in N_0^d.  The comparison follows the usual multi-index
 * partial order: J <= I componentwise, and J < I additionally requires a
 * strictly smaller total degree. */
struct MultiIndex {
  std::vector<int> entries;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> e);

  int dimension() const { return static_cast<int>(entries.size()); }
  int total_degree() const;
  bool leq(const MultiIndex& other) const;
  bool below(const MultiIndex& other) const;  // leq and smaller total degree
  bool operator==(const MultiIndex& other) const { return entries == other.entries; }
  std::string to_string() const;
};

// prod_r k_r^{i_r} with 0^0 = 1; exact integer arithmetic
std::int64_t monomial(const Point& k, const MultiIndex& I);

// prod_r k_r (k_r - 1) ... (k_r - i_r + 1): the weight of z^k under the
// mixed derivative of order I, evaluated at z = 1
std::int64_t falling_factorial_product(const Point& k, const MultiIndex& I);

}  // namespace wegner
