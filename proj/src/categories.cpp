#include "hexstation/categories.hpp"

#include <algorithm>
#include <unordered_set>

namespace hexstation::osm {

namespace {

const std::array<std::string_view, kCategoryCount> kCategoryNames = {
    "aerialway",      "airports",  "buildings", "culture_and_entertainment",
    "education",      "emergency", "finances",  "healthcare",
    "historic",       "leisure",   "other",     "roads_bike",
    "roads_drive",    "roads_walk", "shops",    "sport",
    "sustenance",     "tourism",   "transportation", "water",
};

using TagSet = std::unordered_set<std::string_view>;

const TagSet kCultureAmenities = {
    "arts_centre", "brothel",  "casino",          "cinema",
    "community_centre", "gambling", "nightclub",  "planetarium",
    "public_bookcase", "social_centre", "stripclub", "studio", "theatre"};

const TagSet kEducationAmenities = {
    "college", "driving_school", "kindergarten", "language_school", "library",
    "music_school", "school", "toy_library", "university"};

const TagSet kFinanceAmenities = {"atm", "bank", "bureau_de_change"};

const TagSet kHealthcareAmenities = {
    "baby_hatch", "clinic",  "dentist", "doctors", "hospital",
    "nursing_home", "pharmacy", "social_facility", "veterinary"};

const TagSet kLeisureAmenities = {"dive_centre", "public_bath"};

const TagSet kOtherAmenities = {
    "animal_boarding", "animal_shelter", "childcare", "conference_centre",
    "courthouse", "crematorium", "embassy", "fire_station", "grave_yard",
    "internet_cafe", "marketplace", "monastery", "place_of_worship", "police",
    "post_office", "prison", "ranger_station", "townhall"};

const TagSet kSustenanceAmenities = {
    "bar", "bbq", "biergarten", "cafe", "fast_food",
    "food_court", "ice_cream", "pub", "restaurant"};

const TagSet kTransportAmenities = {
    "bicycle_parking", "bicycle_rental", "bicycle_repair_station",
    "boat_rental", "boat_sharing", "bus_station", "car_rental", "car_sharing",
    "car_wash", "charging_station", "clock", "ferry_terminal",
    "motorcycle_parking", "parking", "shelter", "taxi"};

const TagSet kRailwayTransport = {"station", "halt", "tram_stop",
                                  "subway_entrance"};

const TagSet kWaterNatural = {"water", "bay",    "beach",      "coastline",
                              "spring", "hot_spring", "wetland"};

const TagSet kWaterLanduse = {"reservoir", "basin", "salt_pond"};

// Highway allowlists for the three non-exclusive road classes.
const TagSet kDriveHighways = {
    "motorway", "trunk", "primary", "secondary", "tertiary", "unclassified",
    "residential", "motorway_link", "trunk_link", "primary_link",
    "secondary_link", "tertiary_link", "living_street", "service", "road"};

const TagSet kWalkHighways = {"footway", "pedestrian", "path",
                              "steps",   "corridor",   "track",
                              "living_street", "residential"};

// Ways commonly ridable even without explicit bicycle tagging.
const TagSet kBikeImplicitHighways = {"path", "track", "living_street",
                                      "residential"};

const std::string* find_tag(const GeoObject& o, std::string_view key) {
  const auto it = o.tags.find(std::string(key));
  return it == o.tags.end() ? nullptr : &it->second;
}

// Key-level matcher: any value except an explicit "no".
std::optional<CategoryMatch> match_key(const GeoObject& o, std::string_view key,
                                       Category cat) {
  if (const std::string* v = find_tag(o, key); v && *v != "no")
    return CategoryMatch{cat, std::string(key), *v};
  return std::nullopt;
}

std::optional<CategoryMatch> match_amenity(const GeoObject& o,
                                           const TagSet& values, Category cat) {
  if (const std::string* v = find_tag(o, "amenity");
      v && values.count(std::string_view(*v)))
    return CategoryMatch{cat, "amenity", *v};
  return std::nullopt;
}

std::optional<CategoryMatch> match_water(const GeoObject& o) {
  if (const std::string* v = find_tag(o, "natural");
      v && kWaterNatural.count(std::string_view(*v)))
    return CategoryMatch{Category::water, "natural", *v};
  if (auto m = match_key(o, "water", Category::water)) return m;
  if (auto m = match_key(o, "waterway", Category::water)) return m;
  if (const std::string* v = find_tag(o, "landuse");
      v && kWaterLanduse.count(std::string_view(*v)))
    return CategoryMatch{Category::water, "landuse", *v};
  return std::nullopt;
}

std::optional<CategoryMatch> match_transportation(const GeoObject& o) {
  if (auto m = match_amenity(o, kTransportAmenities, Category::transportation))
    return m;
  if (auto m = match_key(o, "public_transport", Category::transportation))
    return m;
  if (const std::string* v = find_tag(o, "railway");
      v && kRailwayTransport.count(std::string_view(*v)))
    return CategoryMatch{Category::transportation, "railway", *v};
  return std::nullopt;
}

bool is_bike_road(const GeoObject& o, const std::string& highway) {
  if (highway == "cycleway") return true;
  if (const std::string* v = find_tag(o, "bicycle");
      v && (*v == "yes" || *v == "designated" || *v == "permissive"))
    return true;
  for (const auto& [key, value] : o.tags)
    if (key.rfind("cycleway", 0) == 0 && value != "no") return true;
  return kBikeImplicitHighways.count(std::string_view(highway)) > 0;
}

}  // namespace

std::string_view category_name(Category c) {
  return kCategoryNames[static_cast<int>(c)];
}

std::optional<Category> category_from_name(std::string_view name) {
  for (int i = 0; i < kCategoryCount; ++i)
    if (kCategoryNames[i] == name) return static_cast<Category>(i);
  return std::nullopt;
}

bool is_road_category(Category c) {
  return c == Category::roads_bike || c == Category::roads_drive ||
         c == Category::roads_walk;
}

bool is_excluded_station_object(const GeoObject& o) {
  if (const std::string* v = find_tag(o, "amenity"); v && *v == "bicycle_rental")
    return true;
  // Docked-rental variants occasionally tagged through a dedicated key.
  if (const std::string* v = find_tag(o, "bicycle_rental"); v && *v != "no")
    return true;
  return false;
}

std::vector<CategoryMatch> categorize_all(const GeoObject& o) {
  if (is_excluded_station_object(o)) return {};

  std::vector<CategoryMatch> roads;
  if (const std::string* highway = find_tag(o, "highway");
      highway && *highway != "no") {
    if (is_bike_road(o, *highway))
      roads.push_back({Category::roads_bike, "highway", *highway});
    if (kDriveHighways.count(std::string_view(*highway)))
      roads.push_back({Category::roads_drive, "highway", *highway});
    if (kWalkHighways.count(std::string_view(*highway)))
      roads.push_back({Category::roads_walk, "highway", *highway});
  }
  if (!roads.empty()) return roads;

  // Precedence follows the enumeration order with `buildings` demoted to the
  // fallback position.
  if (auto m = match_key(o, "aerialway", Category::aerialway)) return {*m};
  if (auto m = match_key(o, "aeroway", Category::airports)) return {*m};
  if (auto m = match_amenity(o, kCultureAmenities,
                             Category::culture_and_entertainment))
    return {*m};
  if (auto m = match_amenity(o, kEducationAmenities, Category::education))
    return {*m};
  if (auto m = match_key(o, "emergency", Category::emergency)) return {*m};
  if (auto m = match_amenity(o, kFinanceAmenities, Category::finances))
    return {*m};
  if (auto m = match_amenity(o, kHealthcareAmenities, Category::healthcare))
    return {*m};
  if (auto m = match_key(o, "historic", Category::historic)) return {*m};
  if (auto m = match_amenity(o, kLeisureAmenities, Category::leisure))
    return {*m};
  if (auto m = match_key(o, "leisure", Category::leisure)) return {*m};
  if (auto m = match_amenity(o, kOtherAmenities, Category::other)) return {*m};
  if (auto m = match_key(o, "shop", Category::shops)) return {*m};
  if (auto m = match_key(o, "sport", Category::sport)) return {*m};
  if (auto m = match_amenity(o, kSustenanceAmenities, Category::sustenance))
    return {*m};
  if (auto m = match_key(o, "tourism", Category::tourism)) return {*m};
  if (auto m = match_transportation(o)) return {*m};
  if (auto m = match_water(o)) return {*m};
  if (auto m = match_key(o, "building", Category::buildings)) return {*m};
  return {};
}

std::optional<Category> categorize(const GeoObject& o) {
  const auto matches = categorize_all(o);
  if (matches.empty()) return std::nullopt;
  Category best = matches.front().category;
  for (const auto& m : matches) best = std::min(best, m.category);
  return best;
}

}  // namespace hexstation::osm
