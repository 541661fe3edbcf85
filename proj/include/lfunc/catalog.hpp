#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "lfunc/group.hpp"

namespace lfunc {

/// One invariance relation: the group element, its seven target parameters in
/// affine notation, and its double-coset class label.
struct Relation {
  GroupElement element;
  std::array<std::string, 7> target_params;  // images of a,b,c,d,e,f,g
  std::string template_id;                   // "I".."VI"
};

/// Renders an integer row as "k + (row - k*phi).(a..g)" with
/// phi = (-1,-1,-1,-1,1,1,1), choosing k in {0,1,2} to minimize the L1 norm
/// of the residual (ties to the smallest k). Positive terms precede negative
/// ones, each group in variable order a..g; e.g. "1+a+b-f", "g-c", "2-e".
std::string affine_display(const std::array<long, 7>& row);

enum class CatalogFormat { json, text };

class RelationCatalog {
 public:
  explicit RelationCatalog(const Group& group = Group::instance());

  const Group& group() const { return *group_; }
  const std::vector<DoubleCosetClass>& cosets() const { return cosets_; }
  const std::string& template_of(int element_index) const;

  Relation relation_for(const GroupElement& g) const;

  /// All 1920 relations sorted by (template, word length, word lex order).
  std::vector<Relation> all_relations() const;

  void export_catalog(CatalogFormat format, std::ostream& out) const;
  /// Writes to a file; throws IoError when the file cannot be written.
  void export_catalog(CatalogFormat format, const std::string& path) const;

 private:
  const Group* group_;
  std::vector<DoubleCosetClass> cosets_;
  std::vector<std::string> template_by_element_;
};

}  // namespace lfunc
