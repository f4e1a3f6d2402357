#include "hexstation/stations.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "hexstation/csvio.hpp"
#include "hexstation/errors.hpp"
#include "hexstation/geojson.hpp"

namespace hexstation::osm {

namespace {

double parse_coord(const std::string& field, std::size_t line_no,
                   const char* what) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  while (first != last && std::isspace(static_cast<unsigned char>(*first)))
    ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() )
    throw parse_error("line " + std::to_string(line_no) + ": bad " + what +
                      " value '" + field + "'");
  return v;
}

std::vector<StationRecord> load_from_csv(std::string_view bytes,
                                         const std::string& city) {
  std::istringstream in{std::string(bytes)};
  std::string line;
  if (!std::getline(in, line))
    throw parse_error("station CSV is empty (header lat,lon[,id] required)");
  const auto header = split_csv_line(line);
  if (header.size() < 2 || header[0] != "lat" || header[1] != "lon")
    throw parse_error("station CSV header must be lat,lon[,id]");
  const bool has_id = header.size() >= 3 && header[2] == "id";

  std::vector<StationRecord> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto fields = split_csv_line(line);
    if (fields.size() < 2)
      throw parse_error("line " + std::to_string(line_no) +
                        ": expected at least lat,lon");
    const double lat = parse_coord(fields[0], line_no, "lat");
    const double lon = parse_coord(fields[1], line_no, "lon");
    if (lat < -90.0 || lat > 90.0 || lon < -180.0 || lon > 180.0)
      throw parse_error("line " + std::to_string(line_no) +
                        ": coordinates out of range");
    StationRecord rec;
    rec.city = city;
    rec.position = normalized_latlng(lat, lon);
    if (has_id && fields.size() >= 3 && !fields[2].empty())
      rec.external_id = fields[2];
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<StationRecord> load_from_geojson(std::string_view bytes,
                                             const std::string& city) {
  std::vector<StationRecord> out;
  for (const auto& obj : parse_geojson(bytes)) {
    if (obj.geometry.type != GeometryType::Point) continue;
    StationRecord rec;
    rec.city = city;
    rec.position = obj.geometry.point;
    if (!obj.id.empty()) rec.external_id = obj.id;
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

std::vector<StationRecord> load_stations(std::string_view bytes,
                                         const std::string& city) {
  std::size_t i = 0;
  while (i < bytes.size() && std::isspace(static_cast<unsigned char>(bytes[i])))
    ++i;
  if (i < bytes.size() && bytes[i] == '{') return load_from_geojson(bytes, city);
  return load_from_csv(bytes, city);
}

std::string serialize_stations_csv(const std::vector<StationRecord>& stations) {
  std::string out = "lat,lon,id\n";
  for (const auto& s : stations) {
    out += format_fixed(s.position.lat, 7);
    out += ',';
    out += format_fixed(s.position.lon, 7);
    out += ',';
    if (s.external_id) out += csv_escape(*s.external_id);
    out += '\n';
  }
  return out;
}

}  // namespace hexstation::osm
