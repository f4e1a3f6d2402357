#pragma once

#include <map>
#include <string>
#include <vector>

#include "hexstation/categories.hpp"
#include "hexstation/geojson.hpp"
#include "hexstation/hexgrid.hpp"
#include "hexstation/vocab.hpp"

namespace hexstation::study {

// Per-cell aggregation of the objects intersecting one cell. Lengths are in
// metres, areas in square metres, both measured in the local azimuthal
// equidistant plane of the city.
struct CellBucket {
  hexgrid::CellId cell;
  std::map<osm::Category, double> counts;        // once per intersected cell
  std::map<osm::Category, double> point_counts;  // point geometries only
  std::map<osm::Category, double> area_sums;
  std::map<osm::Category, double> length_sums;   // road categories only
  std::map<std::size_t, double> tags_selected;   // axis index -> measure
  std::map<std::size_t, double> tags_all;

  void merge(const CellBucket& other);
};

using BucketMap = std::map<hexgrid::CellId, CellBucket>;

struct AssignStats {
  std::size_t objects_assigned = 0;
  std::size_t objects_uncategorized = 0;
  std::size_t degenerate_geometries = 0;
};

// Distributes objects over the cells they intersect: points count in their
// containing cell, lines contribute clipped lengths, polygons clipped areas
// (holes subtract). Count-style entries increment once per intersected cell,
// so an object crossing several cells is counted in each. Cells outside any
// study area still receive buckets when objects touch them. Uncategorized
// objects are skipped and tallied in the stats. Order-independent: buckets
// are pure sums.
BucketMap assign_objects(const std::vector<osm::GeoObject>& objects,
                         hexgrid::Resolution res, const LatLng& city_center,
                         const osm::TagVocabulary& selected_vocab,
                         const osm::TagVocabulary* all_vocab = nullptr,
                         AssignStats* stats = nullptr);

// buckets_r<res>.jsonl persistence (one bucket per line, sorted by cell).
std::string serialize_buckets_jsonl(const BucketMap& buckets);
BucketMap parse_buckets_jsonl(const std::string& body);

}  // namespace hexstation::study
