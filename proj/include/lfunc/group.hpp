#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "lfunc/gamma.hpp"

namespace lfunc {

using BigInt = boost::multiprecision::cpp_int;

// Generator labels in canonical (word-ordering) sequence.
enum class Gen : int { s12 = 0, s23 = 1, s34 = 2, s67 = 3, A = 4 };

std::string gen_label(Gen g);           // "(12)", "(23)", "(34)", "(67)", "A"
Gen gen_from_label(const std::string&); // throws UnknownLabel

/// Exact 7x7 integer matrix, row-major.
struct Matrix7 {
  std::array<BigInt, 49> m{};

  BigInt& at(int r, int c) { return m[r * 7 + c]; }
  const BigInt& at(int r, int c) const { return m[r * 7 + c]; }

  static Matrix7 identity();
  friend Matrix7 operator*(const Matrix7& lhs, const Matrix7& rhs);
  bool operator==(const Matrix7&) const = default;
  bool operator<(const Matrix7& o) const;

  BigInt determinant() const;
  bool is_permutation() const;
};

struct GroupElement {
  Matrix7 matrix;
  std::vector<Gen> word;  // shortest word found, lexicographic tie-break

  std::string word_string() const;  // identity renders as "I"
};

GroupElement generator(Gen g);
GroupElement generator(const std::string& label);

/// phi * M = phi with phi = (-1,-1,-1,-1,1,1,1): M maps the hyperplane
/// e+f+g-a-b-c-d = 1 to itself.
bool preserves_hyperplane(const GroupElement& g);
bool preserves_hyperplane(const Matrix7& m);

std::array<Complex, 7> apply(const Matrix7& m, const std::array<Complex, 7>& x);
std::array<Complex, 7> apply(const GroupElement& g, const std::array<Complex, 7>& x);

/// The invariance group: closure of the five generators, enumerated
/// breadth-first. Immutable once built.
class Group {
 public:
  static const Group& instance();  // built lazily, cached for the process

  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  // index into elements(), or -1 when the matrix is not a member
  int find(const Matrix7& m) const;
  const GroupElement& element(int index) const { return elements_[index]; }
  const GroupElement& identity() const { return elements_[0]; }

  /// Elements whose matrix is a permutation matrix (the subgroup Sigma).
  std::vector<int> permutation_subgroup() const;

 private:
  Group();
  std::vector<GroupElement> elements_;
  std::map<Matrix7, int> index_;
};

struct CoxeterReport {
  bool ok = true;
  std::vector<std::string> failures;  // violated pairs, e.g. "(a_2 a_3)^3 != I"
};

/// Checks (a_i a_j)^{m_ij} = I for the five generators a_1 = (34), a_2 = (23),
/// a_3 = (34)A, a_4 = (67), a_1' = (12) against the D5 diagram exponents.
CoxeterReport verify_coxeter_presentation();

struct DoubleCosetClass {
  GroupElement representative;     // first member in enumeration order
  long size = 0;
  std::string template_id;         // "I".."VI"
  std::vector<int> member_indices; // indices into Group::elements()
};

/// Orbits of the two-sided Sigma action. Throws PartitionError unless there
/// are exactly six classes and the six reference words land in distinct
/// classes. Classes are labelled I..VI by the reference representatives
/// I, A, ((123)(67)A)^2, ((123)(67)A)^3, ((123)A)^3, ((123)(67)A)^4.
std::vector<DoubleCosetClass> double_cosets(const Group& group,
                                            const std::vector<int>& sigma);
std::vector<DoubleCosetClass> double_cosets(const Group& group);

}  // namespace lfunc
