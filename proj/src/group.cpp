#include "lfunc/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <sstream>

#include "lfunc/errors.hpp"

namespace lfunc {

namespace {

Matrix7 transposition(int i, int j) {
  Matrix7 t = Matrix7::identity();
  t.at(i, i) = 0;
  t.at(j, j) = 0;
  t.at(i, j) = 1;
  t.at(j, i) = 1;
  return t;
}

// The fundamental-relation matrix: rows give the images
// (a, b, g-c, g-d, e+g-c-d, f+g-c-d, g); on the hyperplane the fifth and
// sixth rows read 1+a+b-f and 1+a+b-e.
Matrix7 fundamental_matrix() {
  const int rows[7][7] = {
      {1, 0, 0, 0, 0, 0, 0},   {0, 1, 0, 0, 0, 0, 0},  {0, 0, -1, 0, 0, 0, 1},
      {0, 0, 0, -1, 0, 0, 1},  {0, 0, -1, -1, 1, 0, 1}, {0, 0, -1, -1, 0, 1, 1},
      {0, 0, 0, 0, 0, 0, 1}};
  Matrix7 a;
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c) a.at(r, c) = rows[r][c];
  return a;
}

const Matrix7& generator_matrix(Gen g) {
  static const std::array<Matrix7, 5> table = {
      transposition(0, 1), transposition(1, 2), transposition(2, 3),
      transposition(5, 6), fundamental_matrix()};
  return table[static_cast<int>(g)];
}

constexpr std::size_t kEnumerationGuard = 100000;

}  // namespace

std::string gen_label(Gen g) {
  switch (g) {
    case Gen::s12: return "(12)";
    case Gen::s23: return "(23)";
    case Gen::s34: return "(34)";
    case Gen::s67: return "(67)";
    case Gen::A: return "A";
  }
  return "?";
}

Gen gen_from_label(const std::string& label) {
  for (Gen g : {Gen::s12, Gen::s23, Gen::s34, Gen::s67, Gen::A})
    if (gen_label(g) == label) return g;
  throw UnknownLabel("unknown generator label: " + label);
}

Matrix7 Matrix7::identity() {
  Matrix7 m;
  for (int i = 0; i < 7; ++i) m.at(i, i) = 1;
  return m;
}

Matrix7 operator*(const Matrix7& lhs, const Matrix7& rhs) {
  Matrix7 out;
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c) {
      BigInt acc = 0;
      for (int k = 0; k < 7; ++k) acc += lhs.at(r, k) * rhs.at(k, c);
      out.at(r, c) = acc;
    }
  return out;
}

bool Matrix7::operator<(const Matrix7& o) const {
  return std::lexicographical_compare(m.begin(), m.end(), o.m.begin(), o.m.end());
}

BigInt Matrix7::determinant() const {
  // cofactor expansion on a shrinking copy; exact and fast enough at 7x7
  std::array<std::array<BigInt, 7>, 7> a;
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c) a[r][c] = at(r, c);

  // fraction-free Gaussian elimination (Bareiss)
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < 6; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int r = k + 1; r < 7; ++r)
        if (a[r][k] != 0) { p = r; break; }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int r = k + 1; r < 7; ++r)
      for (int c = k + 1; c < 7; ++c)
        a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
    prev = a[k][k];
  }
  return sign * a[6][6];
}

bool Matrix7::is_permutation() const {
  for (int r = 0; r < 7; ++r) {
    int ones = 0;
    for (int c = 0; c < 7; ++c) {
      const BigInt& v = at(r, c);
      if (v == 1) ++ones;
      else if (v != 0) return false;
    }
    if (ones != 1) return false;
  }
  for (int c = 0; c < 7; ++c) {
    int ones = 0;
    for (int r = 0; r < 7; ++r)
      if (at(r, c) == 1) ++ones;
    if (ones != 1) return false;
  }
  return true;
}

std::string GroupElement::word_string() const {
  if (word.empty()) return "I";
  std::string s;
  for (Gen g : word) s += gen_label(g);
  return s;
}

GroupElement generator(Gen g) { return {generator_matrix(g), {g}}; }

GroupElement generator(const std::string& label) {
  return generator(gen_from_label(label));
}

bool preserves_hyperplane(const Matrix7& m) {
  const int phi[7] = {-1, -1, -1, -1, 1, 1, 1};
  for (int c = 0; c < 7; ++c) {
    BigInt acc = 0;
    for (int r = 0; r < 7; ++r) acc += phi[r] * m.at(r, c);
    if (acc != phi[c]) return false;
  }
  return true;
}

bool preserves_hyperplane(const GroupElement& g) {
  return preserves_hyperplane(g.matrix);
}

std::array<Complex, 7> apply(const Matrix7& m, const std::array<Complex, 7>& x) {
  std::array<Complex, 7> y{};
  for (int r = 0; r < 7; ++r) {
    Complex acc = 0.0;
    for (int c = 0; c < 7; ++c) {
      const long coeff = m.at(r, c).convert_to<long>();
      if (coeff != 0) acc += static_cast<double>(coeff) * x[c];
    }
    y[r] = acc;
  }
  return y;
}

std::array<Complex, 7> apply(const GroupElement& g, const std::array<Complex, 7>& x) {
  return apply(g.matrix, x);
}

Group::Group() {
  const std::array<Gen, 5> gens = {Gen::s12, Gen::s23, Gen::s34, Gen::s67, Gen::A};

  GroupElement id{Matrix7::identity(), {}};
  elements_.push_back(id);
  index_.emplace(id.matrix, 0);

  // breadth-first closure; processing frontier elements in discovery order and
  // generators in label order makes every stored word the lexicographically
  // smallest among shortest words
  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    const int cur = frontier.front();
    frontier.pop_front();
    for (Gen g : gens) {
      Matrix7 prod = elements_[cur].matrix * generator_matrix(g);
      if (index_.contains(prod)) continue;
      if (elements_.size() >= kEnumerationGuard)
        throw PartitionError("group enumeration exceeded the guard bound; generator entries are wrong");
      std::vector<Gen> word = elements_[cur].word;
      word.push_back(g);
      index_.emplace(prod, static_cast<int>(elements_.size()));
      elements_.push_back({std::move(prod), std::move(word)});
      frontier.push_back(static_cast<int>(elements_.size()) - 1);
    }
  }
}

const Group& Group::instance() {
  static const Group group;
  return group;
}

int Group::find(const Matrix7& m) const {
  const auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> Group::permutation_subgroup() const {
  std::vector<int> sigma;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].matrix.is_permutation()) sigma.push_back(static_cast<int>(i));
  return sigma;
}

CoxeterReport verify_coxeter_presentation() {
  const Matrix7 a1 = generator_matrix(Gen::s34);
  const Matrix7 a2 = generator_matrix(Gen::s23);
  const Matrix7 a3 = generator_matrix(Gen::s34) * generator_matrix(Gen::A);
  const Matrix7 a4 = generator_matrix(Gen::s67);
  const Matrix7 a1p = generator_matrix(Gen::s12);

  const std::array<std::pair<const char*, const Matrix7*>, 5> gens = {
      std::pair{"1", &a1}, std::pair{"2", &a2}, std::pair{"3", &a3},
      std::pair{"4", &a4}, std::pair{"1'", &a1p}};

  // D5 diagram: 1-2-3-4 a path, 1' attached to 2 only
  auto adjacent = [](const std::string& x, const std::string& y) {
    if (x == "1'" || y == "1'") {
      const std::string& other = x == "1'" ? y : x;
      return other == "2";
    }
    return std::abs(std::stoi(x) - std::stoi(y)) == 1;
  };

  const Matrix7 id = Matrix7::identity();
  CoxeterReport report;
  for (const auto& [ni, gi] : gens)
    for (const auto& [nj, gj] : gens) {
      const int m = std::string(ni) == nj ? 1 : (adjacent(ni, nj) ? 3 : 2);
      Matrix7 pow = Matrix7::identity();
      const Matrix7 prod = (*gi) * (*gj);
      for (int k = 0; k < m; ++k) pow = pow * prod;
      if (!(pow == id)) {
        report.ok = false;
        std::ostringstream msg;
        msg << "(a_" << ni << " a_" << nj << ")^" << m << " != I";
        report.failures.push_back(msg.str());
      }
    }
  if (!report.ok) {
    std::string joined;
    for (const std::string& f : report.failures) joined += f + "; ";
    throw PresentationFailure("Coxeter presentation violated: " + joined);
  }
  return report;
}

namespace {

// The reference double-coset representatives, as words in the generators:
// I, A, B^2, B^3, ((123)A)^3, B^4 with B = (123)(67)A and (123) = (12)(23).
std::vector<Matrix7> reference_representatives() {
  const Matrix7 p123 = generator_matrix(Gen::s12) * generator_matrix(Gen::s23);
  const Matrix7 b = p123 * generator_matrix(Gen::s67) * generator_matrix(Gen::A);
  const Matrix7 c = p123 * generator_matrix(Gen::A);
  const Matrix7 b2 = b * b;
  return {Matrix7::identity(), generator_matrix(Gen::A), b2, b2 * b, c * c * c, b2 * b2};
}

const char* kTemplateNames[6] = {"I", "II", "III", "IV", "V", "VI"};

}  // namespace

std::vector<DoubleCosetClass> double_cosets(const Group& group,
                                            const std::vector<int>& sigma) {
  std::vector<int> class_of(group.order(), -1);
  std::vector<DoubleCosetClass> classes;

  for (std::size_t start = 0; start < group.order(); ++start) {
    if (class_of[start] >= 0) continue;
    const int label = static_cast<int>(classes.size());
    DoubleCosetClass cls;
    cls.representative = group.element(static_cast<int>(start));

    // orbit of the two-sided Sigma action
    for (int si : sigma) {
      const Matrix7 left = group.element(si).matrix * cls.representative.matrix;
      for (int ti : sigma) {
        const int idx = group.find(left * group.element(ti).matrix);
        if (idx < 0)
          throw PartitionError("double_cosets: product left the enumerated group");
        if (class_of[idx] < 0) {
          class_of[idx] = label;
          cls.member_indices.push_back(idx);
        }
      }
    }
    std::sort(cls.member_indices.begin(), cls.member_indices.end());
    cls.size = static_cast<long>(cls.member_indices.size());
    classes.push_back(std::move(cls));
  }

  if (classes.size() != 6)
    throw PartitionError("double_cosets: expected six classes, found " +
                         std::to_string(classes.size()));

  // label classes I..VI by the reference representatives
  const std::vector<Matrix7> refs = reference_representatives();
  std::vector<bool> taken(classes.size(), false);
  for (std::size_t r = 0; r < refs.size(); ++r) {
    const int idx = group.find(refs[r]);
    if (idx < 0) throw PartitionError("double_cosets: reference word not in the group");
    const int cls = class_of[idx];
    if (taken[cls])
      throw PartitionError("double_cosets: reference words do not land in distinct classes");
    taken[cls] = true;
    classes[cls].template_id = kTemplateNames[r];
  }
  return classes;
}

std::vector<DoubleCosetClass> double_cosets(const Group& group) {
  return double_cosets(group, group.permutation_subgroup());
}

}  // namespace lfunc
