#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wog/checked.hpp"
#include "wog/linalg.hpp"

namespace wog {

// Signed exponent vector m encoding f_m = x^{m+} - x^{m-}.
IntVec positive_part(const IntVec &m);
IntVec negative_part(const IntVec &m);

// Flips the sign so the entry at the lowest nonzero index is positive.
// Throws InputError for the zero vector.
IntVec sign_normalize(IntVec m);
bool is_sign_normalized(const IntVec &m);
IntVec binomial_from_vector(const IntegerVector &m);

// Sum of absolute values; the degree of f_m in the standard grading counted
// over both monomials.
std::int64_t total_degree(const IntVec &m);

// "e1^2*e5" style; "1" for the empty monomial.
std::string monomial_string(const IntVec &u, const std::vector<std::string> &labels);
// Canonical rendering: sign-normalized, positive part first, " - " between.
std::string binomial_string(const IntVec &m, const std::vector<std::string> &labels);

// Accepts "e1^2*e5 - e3" as well as space-separated factors and a unicode
// minus. Returns first monomial minus second monomial (not normalized).
IntVec parse_binomial(const std::string &text, const std::vector<std::string> &labels);

IntVec a_degree(const IntVec &u, const IntegerMatrix &a);

// u+ <= v+ and u- <= v- componentwise.
bool conformal_leq(const IntVec &u, const IntVec &v);

// Sign-normalized, deduplicated binomials sorted by total degree and then
// lexicographically.
struct BasisSet {
  std::string kind;
  std::vector<IntVec> elements;

  std::size_t size() const { return elements.size(); }
  bool empty() const { return elements.empty(); }
  bool contains(const IntVec &m) const;
  bool operator==(const BasisSet &o) const { return elements == o.elements; }
};

BasisSet make_basis_set(std::string kind, std::vector<IntVec> vectors);
bool is_subset(const BasisSet &a, const BasisSet &b);
BasisSet set_union(std::string kind, const BasisSet &a, const BasisSet &b);
BasisSet set_difference(std::string kind, const BasisSet &a, const BasisSet &b);

// Degree-lexicographic order: degree first, then the exponent of the
// highest-priority variable, and so on. priority[0] is the largest variable.
// The degree of e^u is sum(grading[i] * u[i]); an empty grading counts every
// variable once.
struct TermOrder {
  std::vector<std::size_t> priority;
  std::vector<std::int64_t> grading;

  static TermOrder deglex(std::size_t variables);
  static TermOrder with_priority(std::vector<std::size_t> priority, std::size_t variables);
  // Throws InputError unless grading is positive and matches the priority length.
  TermOrder with_grading(std::vector<std::int64_t> grading) const;
  std::int64_t degree(const IntVec &u) const;
  // -1, 0, 1 like a three-way comparison.
  int compare(const IntVec &a, const IntVec &b) const;
  bool operator==(const TermOrder &o) const { return priority == o.priority && grading == o.grading; }
};

// Column sums of A. Every kernel binomial is homogeneous for this grading; for
// an incidence matrix the degree of e_j is 1 + w(head of e_j).
std::vector<std::int64_t> column_degrees(const IntegerMatrix &a);

struct OrientedBinomial {
  IntVec lead;
  IntVec trail;
  bool operator==(const OrientedBinomial &o) const { return lead == o.lead && trail == o.trail; }
};

OrientedBinomial orient(const IntVec &m, const TermOrder &order);

// Rewrites u with the first basis element whose leading term divides it until
// no leading term divides.
IntVec reduce_monomial(IntVec u, const std::vector<OrientedBinomial> &basis);

struct Term {
  IntVec exponent;
  int coefficient = 1;
};

struct Remainder {
  std::vector<Term> terms;
  bool is_zero() const { return terms.empty(); }
};

Remainder normal_form_monomial(const IntVec &u, const BasisSet &basis, const TermOrder &order);
Remainder normal_form(const IntVec &m, const BasisSet &basis, const TermOrder &order);

struct EnumerationLimits {
  std::uint64_t max_candidates = 10'000'000;
  std::size_t max_points = 1'000'000;
};

// ker(A) ∩ Z^m together with an int64 copy of A, prepared once and reused for
// many fibers.
class KernelLattice {
public:
  explicit KernelLattice(const IntegerMatrix &a);

  std::size_t rank() const { return echelon_.size(); }
  std::size_t dimension() const { return cols_; }
  // Row echelon Z-basis: pivots_[t] is the first nonzero position of row t.
  const std::vector<IntVec> &echelon() const { return echelon_; }
  const std::vector<std::size_t> &pivots() const { return pivots_; }
  const std::vector<IntVec> &reduced() const { return reduced_; }

  IntVec degree(const IntVec &u) const;
  bool in_kernel(const IntVec &m) const;
  // Largest value of each coordinate over the fiber of degree b.
  IntVec coordinate_bounds(const IntVec &b) const;

private:
  std::size_t cols_ = 0;
  std::vector<IntVec> rows_;
  std::vector<IntVec> echelon_;
  std::vector<std::size_t> pivots_;
  std::vector<IntVec> reduced_;
};

// Calls visit on every lattice point offset + sum(lambda_t * echelon_t) with
// lo <= point <= hi, in lexicographic order of lambda. visit returns false to
// stop early. Throws CapExceeded past max_candidates.
void enumerate_box(const KernelLattice &lattice, const IntVec &offset, const IntVec &lo,
                   const IntVec &hi, const std::function<bool(const IntVec &)> &visit,
                   const EnumerationLimits &limits = {});

struct Fiber {
  IntVec degree;
  std::vector<IntVec> members; // sorted ascending
};

Fiber fiber(const KernelLattice &lattice, const IntVec &u, const EnumerationLimits &limits = {});
Fiber fiber(const IntegerMatrix &a, const IntVec &u, const EnumerationLimits &limits = {});

} // namespace wog
