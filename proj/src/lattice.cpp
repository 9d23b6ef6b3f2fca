#include "wegnerlab/lattice.hpp"

#include <sstream>
#include <stdexcept>

namespace wegner {

int l1_norm(const Point& x) {
  int n = 0;
  for (int c : x) n += (c < 0 ? -c : c);
  return n;
}

Point negate(const Point& x) {
  Point out(x.size());
  for (std::size_t r = 0; r < x.size(); ++r) out[r] = -x[r];
  return out;
}

Point subtract(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw std::invalid_argument("subtract: dimension mismatch");
  Point out(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) out[r] = a[r] - b[r];
  return out;
}

std::string point_to_string(const Point& x) {
  std::ostringstream os;
  os << '(';
  for (std::size_t r = 0; r < x.size(); ++r) {
    if (r) os << ',';
    os << x[r];
  }
  os << ')';
  return os.str();
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in lattice arithmetic");
  return out;
}

LatticeBox::LatticeBox(int dimension, int half_width) : d_(dimension), L_(half_width) {
  if (dimension < 1) throw std::invalid_argument("LatticeBox: dimension must be >= 1");
  if (half_width < 0) throw std::invalid_argument("LatticeBox: half-width must be >= 0");
  const std::int64_t side = 2 * static_cast<std::int64_t>(half_width) + 1;
  count_ = 1;
  for (int r = 0; r < dimension; ++r) count_ = checked_mul(count_, side);
}

void LatticeBox::point_into(std::int64_t index, Point& out) const {
  if (index < 0 || index >= count_) throw std::out_of_range("LatticeBox::point: index out of range");
  out.resize(static_cast<std::size_t>(d_));
  const std::int64_t side = 2 * static_cast<std::int64_t>(L_) + 1;
  for (int r = d_ - 1; r >= 0; --r) {
    out[static_cast<std::size_t>(r)] = static_cast<int>(index % side) - L_;
    index /= side;
  }
}

Point LatticeBox::point(std::int64_t index) const {
  Point p;
  point_into(index, p);
  return p;
}

std::int64_t LatticeBox::index(const Point& p) const {
  if (!contains(p)) throw std::invalid_argument("LatticeBox::index: point outside box");
  const std::int64_t side = 2 * static_cast<std::int64_t>(L_) + 1;
  std::int64_t acc = 0;
  for (int r = 0; r < d_; ++r) acc = acc * side + (p[static_cast<std::size_t>(r)] + L_);
  return acc;
}

bool LatticeBox::contains(const Point& p) const {
  if (static_cast<int>(p.size()) != d_) return false;
  for (int c : p)
    if (c < -L_ || c > L_) return false;
  return true;
}

std::vector<Point> LatticeBox::points() const {
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(count_));
  Point p;
  for (std::int64_t i = 0; i < count_; ++i) {
    point_into(i, p);
    out.push_back(p);
  }
  return out;
}

Point LatticeBox::first_point() const { return Point(static_cast<std::size_t>(d_), -L_); }

bool LatticeBox::next_point(Point& p) const {
  for (int r = d_ - 1; r >= 0; --r) {
    auto& c = p[static_cast<std::size_t>(r)];
    if (c < L_) {
      ++c;
      for (int s = r + 1; s < d_; ++s) p[static_cast<std::size_t>(s)] = -L_;
      return true;
    }
  }
  return false;
}

MultiIndex::MultiIndex(std::vector<int> e) : entries(std::move(e)) {
  if (entries.empty()) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
  for (int v : entries)
    if (v < 0) throw std::invalid_argument("MultiIndex: entries must be non-negative");
}

int MultiIndex::total_degree() const {
  int s = 0;
  for (int v : entries) s += v;
  return s;
}

bool MultiIndex::leq(const MultiIndex& other) const {
  if (entries.size() != other.entries.size())
    throw std::invalid_argument("MultiIndex: dimension mismatch");
  for (std::size_t r = 0; r < entries.size(); ++r)
    if (entries[r] > other.entries[r]) return false;
  return true;
}

bool MultiIndex::below(const MultiIndex& other) const {
  return leq(other) && total_degree() < other.total_degree();
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t r = 0; r < entries.size(); ++r) {
    if (r) os << ',';
    os << entries[r];
  }
  os << ')';
  return os.str();
}

std::int64_t monomial(const Point& k, const MultiIndex& I) {
  if (k.size() != I.entries.size()) throw std::invalid_argument("monomial: dimension mismatch");
  std::int64_t acc = 1;
  for (std::size_t r = 0; r < k.size(); ++r)
    for (int j = 0; j < I.entries[r]; ++j) acc = checked_mul(acc, k[r]);
  return acc;
}

std::int64_t falling_factorial_product(const Point& k, const MultiIndex& I) {
  if (k.size() != I.entries.size())
    throw std::invalid_argument("falling_factorial_product: dimension mismatch");
  std::int64_t acc = 1;
  for (std::size_t r = 0; r < k.size(); ++r)
    for (int j = 0; j < I.entries[r]; ++j)
      acc = checked_mul(acc, static_cast<std::int64_t>(k[r]) - j);
  return acc;
}

}  // namespace wegner
