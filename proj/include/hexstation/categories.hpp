#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hexstation/geojson.hpp"

namespace hexstation::osm {

// The 20 object categories. The enumeration order is frozen: it is the axis
// order of the category-counting vector and part of every persisted format.
enum class Category : int {
  aerialway = 0,
  airports = 1,
  buildings = 2,
  culture_and_entertainment = 3,
  education = 4,
  emergency = 5,
  finances = 6,
  healthcare = 7,
  historic = 8,
  leisure = 9,
  other = 10,
  roads_bike = 11,
  roads_drive = 12,
  roads_walk = 13,
  shops = 14,
  sport = 15,
  sustenance = 16,
  tourism = 17,
  transportation = 18,
  water = 19,
};

inline constexpr int kCategoryCount = 20;

std::string_view category_name(Category c);
std::optional<Category> category_from_name(std::string_view name);

bool is_road_category(Category c);

// Shared-bike station objects are excluded from the dataset entirely so the
// model cannot learn from them.
bool is_excluded_station_object(const GeoObject& o);

// Result of matching an object against the category tables: the category and
// the (key, value) tag pair that triggered the match.
struct CategoryMatch {
  Category category;
  std::string key;
  std::string value;
};

// All categories an object belongs to. Road categories are non-exclusive (a
// street with a cycle lane is both roads_bike and roads_drive); an object
// matching any road category gets only its road categories. Non-road objects
// get the single highest-precedence match, with `buildings` as the fallback
// of last resort. Excluded objects match nothing.
std::vector<CategoryMatch> categorize_all(const GeoObject& o);

// First category per the precedence rules, or nullopt for unmatched and
// excluded objects.
std::optional<Category> categorize(const GeoObject& o);

}  // namespace hexstation::osm
