#ifndef BRAUER_DIAGRAM_HPP
#define BRAUER_DIAGRAM_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace brauer {

/// Perfect matching on `top` northern and `bottom` southern nodes.  Node k
/// (0-indexed) is northern for k < top and southern node k - top otherwise.
/// Square diagrams are elements of the Brauer algebra; rectangular ones
/// appear as halves of cell-module basis elements.
class Diagram {
 public:
  Diagram() = default;
  /// Throws InvalidArgument unless partner is an involution without fixed points.
  Diagram(int top, int bottom, std::vector<int> partner);

  static Diagram identity(int n);
  /// Arc between northern i,j and between southern i,j (0-indexed), identity elsewhere.
  static Diagram arc_pair(int n, int i, int j);
  /// Crossing of strands i and j.
  static Diagram transposition(int n, int i, int j);
  /// Northern k joined to southern perm[k].
  static Diagram permutation(const std::vector<int>& perm);

  int top() const noexcept { return top_; }
  int bottom() const noexcept { return bottom_; }
  int size() const noexcept { return top_; }  // for square diagrams
  const std::vector<int>& partner() const noexcept { return partner_; }
  int north(int k) const noexcept { return k; }
  int south(int k) const noexcept { return top_ + k; }

  int propagating_lines() const;
  /// Top-bottom reflection.
  Diagram flip() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
  friend auto operator<=>(const Diagram&, const Diagram&) = default;

  std::string to_string() const;

 private:
  int top_ = 0;
  int bottom_ = 0;
  std::vector<int> partner_;
};

struct Composite {
  int loops;
  Diagram diagram;
};

/// a stacked on top of b (a's southern nodes glued to b's northern nodes).
/// Throws SizeMismatch if a.bottom() != b.top().
Composite compose(const Diagram& a, const Diagram& b);

/// Rational linear combination of square diagrams of one size.
class DiagramCombo {
 public:
  DiagramCombo() = default;
  explicit DiagramCombo(const Diagram& d, const mpq_class& c = 1);

  const std::map<Diagram, mpq_class>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add(const Diagram& d, const mpq_class& c);

  DiagramCombo& operator+=(const DiagramCombo& o);
  DiagramCombo& operator-=(const DiagramCombo& o);
  friend DiagramCombo operator+(DiagramCombo a, const DiagramCombo& b) { return a += b; }
  friend DiagramCombo operator-(DiagramCombo a, const DiagramCombo& b) { return a -= b; }
  friend DiagramCombo operator*(const mpq_class& c, const DiagramCombo& a);
  friend bool operator==(const DiagramCombo& a, const DiagramCombo& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Diagram, mpq_class> terms_;
};

/// Product in B_n(delta): closed loops become factors of delta.
DiagramCombo multiply(const DiagramCombo& a, const DiagramCombo& b, const mpq_class& delta);
DiagramCombo multiply(const Diagram& a, const Diagram& b, const mpq_class& delta);

struct B2Idempotents {
  DiagramCombo e;      // X/delta
  DiagramCombo minus;  // (1 - sigma)/2
  DiagramCombo plus;   // (1 + sigma)/2 - X/delta
};

/// Decomposition 1 = e + e- + e+ in B_2(delta).  Throws ZeroDelta.
B2Idempotents b2_idempotents(const mpq_class& delta);

}  // namespace brauer

#endif  // BRAUER_DIAGRAM_HPP
