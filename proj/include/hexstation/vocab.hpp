#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hexstation/categories.hpp"
#include "hexstation/geojson.hpp"

namespace hexstation::osm {

enum class VocabMode { selected, all };

// What a vocabulary axis accumulates.
enum class MeasureKind { count, area, length };

struct VocabEntry {
  Category category;
  std::string key;    // empty: matched through category rules (water, roads)
  std::string value;  // empty: any value of the key
  MeasureKind kind;
};

// Axes an object maps to; which one receives the object's measure depends on
// its geometry.
struct VocabAxes {
  std::optional<std::size_t> count_axis;
  std::optional<std::size_t> area_axis;
  std::optional<std::size_t> length_axis;
};

// Ordered tag vocabulary backing the per-tag embeddings.
//
// `selected` mode is a frozen constant: 442 tag rows drawn from the curated
// tag table, each contributing a count axis and an area axis, plus one water
// area axis and three road length axes (888 axes total, indices 0..887).
//
// `all` mode is corpus-derived: the sorted, deduplicated second-hierarchy
// (key, value) pairs observed for the 16 non-road, non-water categories, one
// axis per pair.
class TagVocabulary {
 public:
  static const TagVocabulary& selected();

  VocabMode mode() const { return mode_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<VocabEntry>& entries() const { return entries_; }

  // Canonical axis index for an object, or nullopt when the object's tags do
  // not fit the vocabulary. For selected mode the canonical axis of a tag row
  // is its count axis.
  std::optional<std::size_t> index_of(const GeoObject& o) const;

  // All axes the object can contribute to (through its best category match).
  VocabAxes axes_of(const GeoObject& o) const;

  // Axes for one specific category match; lets road objects in several road
  // classes contribute a length to each class axis.
  VocabAxes axes_for(const CategoryMatch& m) const;

 private:
  friend TagVocabulary build_all_tag_vocab(const std::vector<GeoObject>&);

  VocabMode mode_ = VocabMode::selected;
  std::vector<VocabEntry> entries_;

  // (key, value) and key-wildcard lookups into entries_.
  struct Lookup;
  std::optional<std::size_t> row_lookup(const CategoryMatch& m) const;
};

// Sorted, deduplicated vocabulary of all second-hierarchy tag pairs observed
// in the corpus (16 non-road, non-water categories). Empty corpus is an input
// error.
TagVocabulary build_all_tag_vocab(const std::vector<GeoObject>& objects);

// Position of the object's tag pair in the vocabulary, or nullopt when the
// object does not fit it.
std::optional<std::size_t> vocab_index(const GeoObject& o,
                                       const TagVocabulary& v);

namespace detail {
struct SelectedRow {
  Category category;
  const char* key;    // nullptr: category-level row
  const char* value;  // nullptr: any value
};
extern const SelectedRow kSelectedRows[];
extern const std::size_t kSelectedRowCount;
}  // namespace detail

}  // namespace hexstation::osm
