#include "lfunc/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "lfunc/errors.hpp"

namespace lfunc {

namespace {

constexpr int kPhi[7] = {-1, -1, -1, -1, 1, 1, 1};
constexpr char kVarNames[7] = {'a', 'b', 'c', 'd', 'e', 'f', 'g'};

std::array<long, 7> row_of(const Matrix7& m, int r) {
  std::array<long, 7> row{};
  for (int c = 0; c < 7; ++c) row[c] = m.at(r, c).convert_to<long>();
  return row;
}

int template_rank(const std::string& id) {
  static const char* order[6] = {"I", "II", "III", "IV", "V", "VI"};
  for (int i = 0; i < 6; ++i)
    if (id == order[i]) return i;
  return 6;
}

}  // namespace

std::string affine_display(const std::array<long, 7>& row) {
  const auto l1 = [&](int k) {
    long norm = 0;
    for (int i = 0; i < 7; ++i) norm += std::abs(row[i] - k * kPhi[i]);
    return norm;
  };
  int best_k = 0;
  long best_norm = -1;
  for (int k = 0; k <= 2; ++k) {
    const long norm = l1(k);
    if (best_norm < 0 || norm < best_norm) {
      best_norm = norm;
      best_k = k;
    }
  }
  // the norm is convex in k, so these neighbor checks certify that the
  // global minimizer lies in {0,1,2}
  if (l1(-1) < best_norm || l1(3) < best_norm)
    throw SpecError("affine_display: constant shift outside {0,1,2}");

  std::array<long, 7> res{};
  for (int i = 0; i < 7; ++i) res[i] = row[i] - best_k * kPhi[i];

  std::string out;
  if (best_k > 0) out += std::to_string(best_k);
  for (int sign = +1; sign >= -1; sign -= 2) {
    for (int i = 0; i < 7; ++i) {
      const long c = res[i];
      if (c == 0 || (sign > 0) != (c > 0)) continue;
      if (sign > 0 && !out.empty()) out += '+';
      if (sign < 0) out += '-';
      if (std::abs(c) != 1) out += std::to_string(std::abs(c));
      out += kVarNames[i];
    }
  }
  if (out.empty()) out = "0";
  return out;
}

RelationCatalog::RelationCatalog(const Group& group)
    : group_(&group), cosets_(double_cosets(group)) {
  template_by_element_.resize(group.order());
  for (const DoubleCosetClass& cls : cosets_)
    for (int idx : cls.member_indices) template_by_element_[idx] = cls.template_id;
}

const std::string& RelationCatalog::template_of(int element_index) const {
  return template_by_element_.at(element_index);
}

Relation RelationCatalog::relation_for(const GroupElement& g) const {
  const int idx = group_->find(g.matrix);
  if (idx < 0) throw PartitionError("relation_for: element is not in the group");
  Relation rel;
  rel.element = group_->element(idx);
  for (int r = 0; r < 7; ++r)
    rel.target_params[r] = affine_display(row_of(rel.element.matrix, r));
  rel.template_id = template_by_element_[idx];
  return rel;
}

std::vector<Relation> RelationCatalog::all_relations() const {
  std::vector<Relation> rels;
  rels.reserve(group_->order());
  for (const GroupElement& g : group_->elements()) rels.push_back(relation_for(g));
  std::sort(rels.begin(), rels.end(), [](const Relation& x, const Relation& y) {
    const int rx = template_rank(x.template_id), ry = template_rank(y.template_id);
    if (rx != ry) return rx < ry;
    if (x.element.word.size() != y.element.word.size())
      return x.element.word.size() < y.element.word.size();
    return x.element.word < y.element.word;
  });
  return rels;
}

void RelationCatalog::export_catalog(CatalogFormat format, std::ostream& out) const {
  const std::vector<Relation> rels = all_relations();
  if (format == CatalogFormat::text) {
    for (const Relation& r : rels) {
      const auto& p = r.target_params;
      out << "L[a,b,c,d;e;f,g] = L[" << p[0] << ',' << p[1] << ',' << p[2] << ','
          << p[3] << ';' << p[4] << ';' << p[5] << ',' << p[6] << "]   # "
          << r.template_id << ' ' << r.element.word_string() << '\n';
    }
    return;
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const Relation& r : rels) {
    nlohmann::json rec;
    rec["word"] = r.element.word_string();
    nlohmann::json mat = nlohmann::json::array();
    for (int i = 0; i < 7; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int j = 0; j < 7; ++j)
        row.push_back(r.element.matrix.at(i, j).convert_to<long>());
      mat.push_back(row);
    }
    rec["matrix"] = mat;
    rec["template"] = r.template_id;
    nlohmann::json params;
    for (int i = 0; i < 7; ++i)
      params[std::string(1, kVarNames[i]) + "'"] = r.target_params[i];
    rec["params"] = params;
    arr.push_back(rec);
  }
  out << arr.dump(2) << '\n';
}

void RelationCatalog::export_catalog(CatalogFormat format,
                                     const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw IoError("export_catalog: cannot open " + path);
  export_catalog(format, out);
  if (!out) throw IoError("export_catalog: write failed for " + path);
}

}  // namespace lfunc
