#include "hexstation/embedding.hpp"

#include <sstream>

#include "hexstation/csvio.hpp"
#include "hexstation/errors.hpp"

namespace hexstation::embedding {

using osm::Category;

std::string region_method_name(RegionMethod m) {
  switch (m) {
    case RegionMethod::CC:
      return "cc";
    case RegionMethod::SA:
      return "sa";
    case RegionMethod::ST:
      return "st";
    case RegionMethod::AT:
      return "at";
  }
  return "cc";
}

RegionMethod region_method_from_name(const std::string& name) {
  if (name == "cc" || name == "CC") return RegionMethod::CC;
  if (name == "sa" || name == "SA") return RegionMethod::SA;
  if (name == "st" || name == "ST") return RegionMethod::ST;
  if (name == "at" || name == "AT") return RegionMethod::AT;
  throw config_error("unknown region method: '" + name + "'");
}

std::size_t region_dim(RegionMethod m, const osm::TagVocabulary* vocab) {
  switch (m) {
    case RegionMethod::CC:
      return kDimCC;
    case RegionMethod::SA:
      return kDimSA;
    case RegionMethod::ST:
      return kDimST;
    case RegionMethod::AT:
      if (!vocab) throw config_error("AT embedding requires a vocabulary");
      return vocab->size();
  }
  return kDimCC;
}

namespace {

double map_get(const std::map<Category, double>& m, Category c) {
  const auto it = m.find(c);
  return it == m.end() ? 0.0 : it->second;
}

// The 16 categories with (area, point count) pairs, in enumeration order.
constexpr Category kPlainCategories[16] = {
    Category::aerialway,      Category::airports,
    Category::buildings,      Category::culture_and_entertainment,
    Category::education,      Category::emergency,
    Category::finances,       Category::healthcare,
    Category::historic,       Category::leisure,
    Category::other,          Category::shops,
    Category::sport,          Category::sustenance,
    Category::tourism,        Category::transportation,
};

}  // namespace

RegionVector embed_region(const study::CellBucket& bucket, RegionMethod method,
                          const osm::TagVocabulary* vocab) {
  RegionVector out;
  out.method = method;
  switch (method) {
    case RegionMethod::CC: {
      out.values.assign(kDimCC, 0.0);
      for (const auto& [cat, n] : bucket.counts)
        out.values[static_cast<std::size_t>(cat)] = n;
      break;
    }
    case RegionMethod::SA: {
      out.values.assign(kDimSA, 0.0);
      for (std::size_t i = 0; i < 16; ++i) {
        out.values[2 * i] = map_get(bucket.area_sums, kPlainCategories[i]);
        out.values[2 * i + 1] =
            map_get(bucket.point_counts, kPlainCategories[i]);
      }
      out.values[32] = map_get(bucket.area_sums, Category::water);
      out.values[33] = map_get(bucket.length_sums, Category::roads_bike);
      out.values[34] = map_get(bucket.length_sums, Category::roads_drive);
      out.values[35] = map_get(bucket.length_sums, Category::roads_walk);
      break;
    }
    case RegionMethod::ST: {
      if (!vocab || vocab->mode() != osm::VocabMode::selected)
        throw config_error("ST embedding requires the selected vocabulary");
      out.values.assign(vocab->size(), 0.0);
      for (const auto& [idx, v] : bucket.tags_selected) {
        if (idx >= out.values.size())
          throw data_error("selected tag index out of range in bucket");
        out.values[idx] = v;
      }
      break;
    }
    case RegionMethod::AT: {
      if (!vocab || vocab->mode() != osm::VocabMode::all)
        throw config_error("AT embedding requires an all-tags vocabulary");
      out.values.assign(vocab->size(), 0.0);
      for (const auto& [idx, v] : bucket.tags_all) {
        if (idx >= out.values.size())
          throw data_error("all-tags index out of range in bucket");
        out.values[idx] = v;
      }
      break;
    }
  }
  return out;
}

VectorMap embed_city(const study::BucketMap& buckets, RegionMethod method,
                     const osm::TagVocabulary* vocab) {
  VectorMap out;
  for (const auto& [cell, bucket] : buckets)
    out[cell] = embed_region(bucket, method, vocab).values;
  return out;
}

std::vector<double> ring_average(hexgrid::CellId cell, int k,
                                 const VectorMap& vectors, std::size_t dim) {
  if (k < 0) throw input_error("ring index must be non-negative");
  std::vector<double> sum(dim, 0.0);
  const auto cells = hexgrid::ring(cell, k);
  for (const auto& c : cells) {
    const auto it = vectors.find(c);
    if (it == vectors.end()) continue;
    if (it->second.size() != dim)
      throw input_error("region vector dimension mismatch in ring average");
    for (std::size_t i = 0; i < dim; ++i) sum[i] += it->second[i];
  }
  const double denom = static_cast<double>(cells.size());
  for (double& v : sum) v /= denom;
  return sum;
}

std::string neighbourhood_method_name(NeighbourhoodMethod m) {
  switch (m) {
    case NeighbourhoodMethod::concatenate:
      return "concatenate";
    case NeighbourhoodMethod::average:
      return "average";
    case NeighbourhoodMethod::diminishing:
      return "diminishing";
    case NeighbourhoodMethod::diminishing_squared:
      return "diminishing_squared";
  }
  return "concatenate";
}

NeighbourhoodMethod neighbourhood_method_from_name(const std::string& name) {
  if (name == "concatenate") return NeighbourhoodMethod::concatenate;
  if (name == "average") return NeighbourhoodMethod::average;
  if (name == "diminishing") return NeighbourhoodMethod::diminishing;
  if (name == "diminishing_squared")
    return NeighbourhoodMethod::diminishing_squared;
  throw config_error("unknown neighbourhood method: '" + name + "'");
}

std::vector<double> combine_neighbourhood(
    const std::vector<std::vector<double>>& rings,
    NeighbourhoodMethod method) {
  if (rings.empty())
    throw input_error("combine_neighbourhood needs at least ring 0");
  const std::size_t dim = rings.front().size();
  for (const auto& t : rings)
    if (t.size() != dim)
      throw input_error("ring vectors must share one dimension");

  if (method == NeighbourhoodMethod::concatenate) {
    std::vector<double> out;
    out.reserve(dim * rings.size());
    for (const auto& t : rings) out.insert(out.end(), t.begin(), t.end());
    return out;
  }

  std::vector<double> out(dim, 0.0);
  double wsum = 0.0;
  for (std::size_t k = 0; k < rings.size(); ++k) {
    double w = 1.0;
    if (method == NeighbourhoodMethod::diminishing)
      w = 1.0 / static_cast<double>(k + 1);
    else if (method == NeighbourhoodMethod::diminishing_squared)
      w = 1.0 / (static_cast<double>(k + 1) * static_cast<double>(k + 1));
    wsum += w;
    for (std::size_t i = 0; i < dim; ++i) out[i] += w * rings[k][i];
  }
  for (double& v : out) v /= wsum;
  return out;
}

NeighbourhoodVector neighbourhood_vector(hexgrid::CellId cell, int K,
                                         NeighbourhoodMethod method,
                                         const VectorMap& vectors,
                                         std::size_t dim) {
  if (K < 0) throw input_error("neighbourhood size must be non-negative");
  std::vector<std::vector<double>> rings;
  rings.reserve(static_cast<std::size_t>(K) + 1);
  for (int k = 0; k <= K; ++k)
    rings.push_back(ring_average(cell, k, vectors, dim));
  NeighbourhoodVector out;
  out.base_cell = cell;
  out.ring_count = K;
  out.method = method;
  out.values = combine_neighbourhood(rings, method);
  return out;
}

std::string serialize_embeddings_csv(const VectorMap& vectors) {
  std::string out = "cell,values\n";
  for (const auto& [cell, values] : vectors) {
    out += cell.to_string();
    for (const double v : values) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

VectorMap parse_embeddings_csv(const std::string& body) {
  VectorMap out;
  std::istringstream in(body);
  std::string line;
  if (!std::getline(in, line))
    throw parse_error("embeddings CSV is empty");
  std::size_t line_no = 1;
  std::size_t dim = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto fields = split_csv_line(line);
    if (fields.size() < 2)
      throw parse_error("embeddings CSV line " + std::to_string(line_no) +
                        ": expected cell and values");
    std::vector<double> values;
    values.reserve(fields.size() - 1);
    for (std::size_t i = 1; i < fields.size(); ++i)
      values.push_back(std::stod(fields[i]));
    if (dim == 0)
      dim = values.size();
    else if (values.size() != dim)
      throw parse_error("embeddings CSV line " + std::to_string(line_no) +
                        ": inconsistent dimension");
    out[hexgrid::CellId::from_string(fields[0])] = std::move(values);
  }
  return out;
}

}  // namespace hexstation::embedding
