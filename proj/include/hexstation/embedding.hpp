#pragma once

#include <map>
#include <string>
#include <vector>

#include "hexstation/buckets.hpp"
#include "hexstation/hexgrid.hpp"
#include "hexstation/vocab.hpp"

namespace hexstation::embedding {

// Region embedding schemes:
//   CC - per-category object counts (dim 20)
//   SA - shape analysis per category: (area, point count) pairs for the 16
//        plain categories, water area, three road lengths (dim 36)
//   ST - per-tag measures over the selected vocabulary (dim 888)
//   AT - per-tag measures over the corpus-derived vocabulary
enum class RegionMethod { CC, SA, ST, AT };

std::string region_method_name(RegionMethod m);
RegionMethod region_method_from_name(const std::string& name);

inline constexpr std::size_t kDimCC = 20;
inline constexpr std::size_t kDimSA = 36;
inline constexpr std::size_t kDimST = 888;

std::size_t region_dim(RegionMethod m, const osm::TagVocabulary* vocab);

struct RegionVector {
  RegionMethod method = RegionMethod::CC;
  std::vector<double> values;

  std::size_t dim() const { return values.size(); }
};

// Embeds one cell bucket. ST and AT require their vocabulary.
RegionVector embed_region(const study::CellBucket& bucket, RegionMethod method,
                          const osm::TagVocabulary* vocab = nullptr);

// Region vectors of a whole city, keyed by cell.
using VectorMap = std::map<hexgrid::CellId, std::vector<double>>;

VectorMap embed_city(const study::BucketMap& buckets, RegionMethod method,
                     const osm::TagVocabulary* vocab = nullptr);

// Mean vector of ring(cell, k). Cells without data contribute zero vectors
// and stay in the denominator, so the ring size semantics are stable at
// coverage borders. k = 0 returns the cell's own vector.
std::vector<double> ring_average(hexgrid::CellId cell, int k,
                                 const VectorMap& vectors, std::size_t dim);

enum class NeighbourhoodMethod {
  concatenate,
  average,
  diminishing,          // ring k weighted 1/(k+1)
  diminishing_squared,  // ring k weighted 1/(k+1)^2
};

std::string neighbourhood_method_name(NeighbourhoodMethod m);
NeighbourhoodMethod neighbourhood_method_from_name(const std::string& name);

// Combines per-ring vectors t0..tK into one feature vector. The three
// averaging methods are affine: all-equal rings reproduce the common vector.
std::vector<double> combine_neighbourhood(
    const std::vector<std::vector<double>>& rings, NeighbourhoodMethod method);

struct NeighbourhoodVector {
  hexgrid::CellId base_cell;
  int ring_count = 0;
  NeighbourhoodMethod method = NeighbourhoodMethod::concatenate;
  std::vector<double> values;
};

NeighbourhoodVector neighbourhood_vector(hexgrid::CellId cell, int K,
                                         NeighbourhoodMethod method,
                                         const VectorMap& vectors,
                                         std::size_t dim);

// emb_<method>_r<res>.csv persistence: `cell,v0,...`, rows sorted by cell.
std::string serialize_embeddings_csv(const VectorMap& vectors);
VectorMap parse_embeddings_csv(const std::string& body);

}  // namespace hexstation::embedding
