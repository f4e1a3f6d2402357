#include "hexstation/vocab.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "hexstation/errors.hpp"

namespace hexstation::osm {

namespace {

// Lookup tables for the selected vocabulary, built once. Maps a tag row to
// the index of its first (canonical) axis.
struct SelectedLookup {
  std::unordered_map<std::string, std::size_t> exact;     // "key=value"
  std::unordered_map<std::string, std::size_t> wildcard;  // key only
  std::size_t water_axis = 0;
  std::size_t road_axis[3] = {0, 0, 0};  // bike, drive, walk
};

std::string pair_key(const std::string& key, const std::string& value) {
  return key + "=" + value;
}

const SelectedLookup* g_selected_lookup = nullptr;

int road_slot(Category c) {
  switch (c) {
    case Category::roads_bike:
      return 0;
    case Category::roads_drive:
      return 1;
    case Category::roads_walk:
      return 2;
    default:
      return -1;
  }
}

// Best category match of an object together with the triggering tag pair;
// road objects resolve to their first road category.
std::optional<CategoryMatch> best_match(const GeoObject& o) {
  const auto matches = categorize_all(o);
  if (matches.empty()) return std::nullopt;
  return *std::min_element(matches.begin(), matches.end(),
                           [](const CategoryMatch& a, const CategoryMatch& b) {
                             return a.category < b.category;
                           });
}

}  // namespace

const TagVocabulary& TagVocabulary::selected() {
  static const TagVocabulary vocab = [] {
    TagVocabulary v;
    static SelectedLookup lookup;
    v.mode_ = VocabMode::selected;
    for (std::size_t i = 0; i < detail::kSelectedRowCount; ++i) {
      const auto& row = detail::kSelectedRows[i];
      const std::string key = row.key ? row.key : "";
      const std::string value = row.value ? row.value : "";
      if (row.category == Category::water) {
        lookup.water_axis = v.entries_.size();
        v.entries_.push_back({row.category, key, value, MeasureKind::area});
      } else if (is_road_category(row.category)) {
        lookup.road_axis[road_slot(row.category)] = v.entries_.size();
        v.entries_.push_back({row.category, key, value, MeasureKind::length});
      } else {
        const std::size_t canonical = v.entries_.size();
        if (row.value)
          lookup.exact[pair_key(key, value)] = canonical;
        else
          lookup.wildcard[key] = canonical;
        v.entries_.push_back({row.category, key, value, MeasureKind::count});
        v.entries_.push_back({row.category, key, value, MeasureKind::area});
      }
    }
    g_selected_lookup = &lookup;
    return v;
  }();
  return vocab;
}

std::optional<std::size_t> TagVocabulary::row_lookup(
    const CategoryMatch& m) const {
  if (mode_ == VocabMode::selected) {
    selected();  // ensure lookup tables exist
    if (m.category == Category::water) return g_selected_lookup->water_axis;
    if (const int slot = road_slot(m.category); slot >= 0)
      return g_selected_lookup->road_axis[slot];
    if (const auto it = g_selected_lookup->exact.find(pair_key(m.key, m.value));
        it != g_selected_lookup->exact.end())
      return it->second;
    if (const auto it = g_selected_lookup->wildcard.find(m.key);
        it != g_selected_lookup->wildcard.end())
      return it->second;
    return std::nullopt;
  }
  // all-tags mode: entries are sorted unique pairs, binary search.
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), m,
      [](const VocabEntry& e, const CategoryMatch& mm) {
        return std::tie(e.key, e.value) < std::tie(mm.key, mm.value);
      });
  if (it != entries_.end() && it->key == m.key && it->value == m.value)
    return static_cast<std::size_t>(it - entries_.begin());
  return std::nullopt;
}

std::optional<std::size_t> TagVocabulary::index_of(const GeoObject& o) const {
  const auto m = best_match(o);
  if (!m) return std::nullopt;
  if (mode_ == VocabMode::all &&
      (is_road_category(m->category) || m->category == Category::water))
    return std::nullopt;
  return row_lookup(*m);
}

VocabAxes TagVocabulary::axes_for(const CategoryMatch& m) const {
  VocabAxes axes;
  if (mode_ == VocabMode::all) {
    if (is_road_category(m.category) || m.category == Category::water)
      return axes;
    if (const auto idx = row_lookup(m)) {
      // One axis per pair; it accumulates counts from points and areas from
      // polygons.
      axes.count_axis = idx;
      axes.area_axis = idx;
    }
    return axes;
  }
  if (m.category == Category::water) {
    axes.area_axis = row_lookup(m);
    return axes;
  }
  if (is_road_category(m.category)) {
    axes.length_axis = row_lookup(m);
    return axes;
  }
  if (const auto idx = row_lookup(m)) {
    axes.count_axis = idx;
    axes.area_axis = *idx + 1;
  }
  return axes;
}

VocabAxes TagVocabulary::axes_of(const GeoObject& o) const {
  const auto m = best_match(o);
  if (!m) return {};
  return axes_for(*m);
}

TagVocabulary build_all_tag_vocab(const std::vector<GeoObject>& objects) {
  if (objects.empty())
    throw input_error("cannot build a tag vocabulary from an empty corpus");
  std::map<std::pair<std::string, std::string>, Category> pairs;
  for (const auto& o : objects) {
    const auto m = best_match(o);
    if (!m || is_road_category(m->category) || m->category == Category::water)
      continue;
    pairs.emplace(std::make_pair(m->key, m->value), m->category);
  }
  TagVocabulary v;
  v.mode_ = VocabMode::all;
  for (const auto& [kv, cat] : pairs)
    v.entries_.push_back({cat, kv.first, kv.second, MeasureKind::count});
  return v;
}

std::optional<std::size_t> vocab_index(const GeoObject& o,
                                       const TagVocabulary& v) {
  return v.index_of(o);
}

}  // namespace hexstation::osm
