#include "hexstation/vocab.hpp"

// Frozen tag table backing the selected vocabulary. Row order is the axis
// order of the 888-dimensional per-tag embedding and must not change.
// A null key marks a category-level row (water, roads); a null value matches
// any value of the key.

namespace hexstation::osm::detail {

const SelectedRow kSelectedRows[] = {
    {Category::aerialway, "aerialway", "cable_car"},
    {Category::aerialway, "aerialway", "chair_lift"},
    {Category::aerialway, "aerialway", "drag_lift"},
    {Category::aerialway, "aerialway", "gondola"},
    {Category::aerialway, "aerialway", "goods"},
    {Category::aerialway, "aerialway", "j-bar"},
    {Category::aerialway, "aerialway", "magic_carpet"},
    {Category::aerialway, "aerialway", "mixed_lift"},
    {Category::aerialway, "aerialway", "platter"},
    {Category::aerialway, "aerialway", "pylon"},
    {Category::aerialway, "aerialway", "rope_tow"},
    {Category::aerialway, "aerialway", "station"},
    {Category::aerialway, "aerialway", "t-bar"},
    {Category::aerialway, "aerialway", "zip_line"},
    {Category::airports, "aeroway", "aerodrome"},
    {Category::airports, "aeroway", "heliport"},
    {Category::buildings, "building", nullptr},
    {Category::culture_and_entertainment, "amenity", "arts_centre"},
    {Category::culture_and_entertainment, "amenity", "brothel"},
    {Category::culture_and_entertainment, "amenity", "casino"},
    {Category::culture_and_entertainment, "amenity", "cinema"},
    {Category::culture_and_entertainment, "amenity", "community_centre"},
    {Category::culture_and_entertainment, "amenity", "gambling"},
    {Category::culture_and_entertainment, "amenity", "nightclub"},
    {Category::culture_and_entertainment, "amenity", "planetarium"},
    {Category::culture_and_entertainment, "amenity", "public_bookcase"},
    {Category::culture_and_entertainment, "amenity", "social_centre"},
    {Category::culture_and_entertainment, "amenity", "stripclub"},
    {Category::culture_and_entertainment, "amenity", "studio"},
    {Category::culture_and_entertainment, "amenity", "theatre"},
    {Category::education, "amenity", "college"},
    {Category::education, "amenity", "driving_school"},
    {Category::education, "amenity", "kindergarten"},
    {Category::education, "amenity", "language_school"},
    {Category::education, "amenity", "library"},
    {Category::education, "amenity", "music_school"},
    {Category::education, "amenity", "school"},
    {Category::education, "amenity", "toy_library"},
    {Category::education, "amenity", "university"},
    {Category::emergency, "emergency", nullptr},
    {Category::finances, "amenity", "atm"},
    {Category::finances, "amenity", "bank"},
    {Category::finances, "amenity", "bureau_de_change"},
    {Category::healthcare, "amenity", "baby_hatch"},
    {Category::healthcare, "amenity", "clinic"},
    {Category::healthcare, "amenity", "dentist"},
    {Category::healthcare, "amenity", "doctors"},
    {Category::healthcare, "amenity", "hospital"},
    {Category::healthcare, "amenity", "nursing_home"},
    {Category::healthcare, "amenity", "pharmacy"},
    {Category::healthcare, "amenity", "social_facility"},
    {Category::healthcare, "amenity", "veterinary"},
    {Category::historic, "historic", "aqueduct"},
    {Category::historic, "historic", "battlefield"},
    {Category::historic, "historic", "building"},
    {Category::historic, "historic", "castle"},
    {Category::historic, "historic", "church"},
    {Category::historic, "historic", "citywalls"},
    {Category::historic, "historic", "fort"},
    {Category::historic, "historic", "memorial"},
    {Category::historic, "historic", "monastery"},
    {Category::historic, "historic", "monument"},
    {Category::historic, "historic", "ruins"},
    {Category::historic, "historic", "tower"},
    {Category::leisure, "amenity", "dive_centre"},
    {Category::leisure, "amenity", "public_bath"},
    {Category::leisure, "leisure", "adult_gaming_centre"},
    {Category::leisure, "leisure", "amusement_arcade"},
    {Category::leisure, "leisure", "beach_resort"},
    {Category::leisure, "leisure", "common"},
    {Category::leisure, "leisure", "dance"},
    {Category::leisure, "leisure", "dog_park"},
    {Category::leisure, "leisure", "escape_game"},
    {Category::leisure, "leisure", "fitness_centre"},
    {Category::leisure, "leisure", "fitness_station"},
    {Category::leisure, "leisure", "garden"},
    {Category::leisure, "leisure", "hackerspace"},
    {Category::leisure, "leisure", "horse_riding"},
    {Category::leisure, "leisure", "ice_rink"},
    {Category::leisure, "leisure", "marina"},
    {Category::leisure, "leisure", "miniature_golf"},
    {Category::leisure, "leisure", "nature_reserve"},
    {Category::leisure, "leisure", "park"},
    {Category::leisure, "leisure", "pitch"},
    {Category::leisure, "leisure", "sauna"},
    {Category::leisure, "leisure", "slipway"},
    {Category::leisure, "leisure", "sports_centre"},
    {Category::leisure, "leisure", "stadium"},
    {Category::leisure, "leisure", "summer_camp"},
    {Category::leisure, "leisure", "swimming_area"},
    {Category::leisure, "leisure", "swimming_pool"},
    {Category::leisure, "leisure", "track"},
    {Category::leisure, "leisure", "water_park"},
    {Category::other, "amenity", "animal_boarding"},
    {Category::other, "amenity", "animal_shelter"},
    {Category::other, "amenity", "childcare"},
    {Category::other, "amenity", "conference_centre"},
    {Category::other, "amenity", "courthouse"},
    {Category::other, "amenity", "crematorium"},
    {Category::other, "amenity", "embassy"},
    {Category::other, "amenity", "fire_station"},
    {Category::other, "amenity", "grave_yard"},
    {Category::other, "amenity", "internet_cafe"},
    {Category::other, "amenity", "marketplace"},
    {Category::other, "amenity", "monastery"},
    {Category::other, "amenity", "place_of_worship"},
    {Category::other, "amenity", "police"},
    {Category::other, "amenity", "post_office"},
    {Category::other, "amenity", "prison"},
    {Category::other, "amenity", "ranger_station"},
    {Category::other, "amenity", "townhall"},
    {Category::shops, "shop", "agrarian"},
    {Category::shops, "shop", "alcohol"},
    {Category::shops, "shop", "anime"},
    {Category::shops, "shop", "antiques"},
    {Category::shops, "shop", "appliance"},
    {Category::shops, "shop", "art"},
    {Category::shops, "shop", "atv"},
    {Category::shops, "shop", "baby_goods"},
    {Category::shops, "shop", "bag"},
    {Category::shops, "shop", "bakery"},
    {Category::shops, "shop", "bathroom_furnishing"},
    {Category::shops, "shop", "beauty"},
    {Category::shops, "shop", "bed"},
    {Category::shops, "shop", "beverages"},
    {Category::shops, "shop", "bicycle"},
    {Category::shops, "shop", "boat"},
    {Category::shops, "shop", "bookmaker"},
    {Category::shops, "shop", "books"},
    {Category::shops, "shop", "boutique"},
    {Category::shops, "shop", "brewing_supplies"},
    {Category::shops, "shop", "butcher"},
    {Category::shops, "shop", "camera"},
    {Category::shops, "shop", "candles"},
    {Category::shops, "shop", "cannabis"},
    {Category::shops, "shop", "car"},
    {Category::shops, "shop", "car_parts"},
    {Category::shops, "shop", "car_repair"},
    {Category::shops, "shop", "caravan"},
    {Category::shops, "shop", "carpet"},
    {Category::shops, "shop", "charity"},
    {Category::shops, "shop", "cheese"},
    {Category::shops, "shop", "chemist"},
    {Category::shops, "shop", "chocolate"},
    {Category::shops, "shop", "clothes"},
    {Category::shops, "shop", "coffee"},
    {Category::shops, "shop", "collector"},
    {Category::shops, "shop", "computer"},
    {Category::shops, "shop", "confectionery"},
    {Category::shops, "shop", "convenience"},
    {Category::shops, "shop", "copyshop"},
    {Category::shops, "shop", "cosmetics"},
    {Category::shops, "shop", "craft"},
    {Category::shops, "shop", "curtain"},
    {Category::shops, "shop", "dairy"},
    {Category::shops, "shop", "deli"},
    {Category::shops, "shop", "department_store"},
    {Category::shops, "shop", "doityourself"},
    {Category::shops, "shop", "doors"},
    {Category::shops, "shop", "dry_cleaning"},
    {Category::shops, "shop", "e-cigarette"},
    {Category::shops, "shop", "electrical"},
    {Category::shops, "shop", "electronics"},
    {Category::shops, "shop", "energy"},
    {Category::shops, "shop", "erotic"},
    {Category::shops, "shop", "fabric"},
    {Category::shops, "shop", "farm"},
    {Category::shops, "shop", "fashion_accessories"},
    {Category::shops, "shop", "fireplace"},
    {Category::shops, "shop", "fishing"},
    {Category::shops, "shop", "flooring"},
    {Category::shops, "shop", "florist"},
    {Category::shops, "shop", "frame"},
    {Category::shops, "shop", "frozen_food"},
    {Category::shops, "shop", "fuel"},
    {Category::shops, "shop", "funeral_directors"},
    {Category::shops, "shop", "furniture"},
    {Category::shops, "shop", "games"},
    {Category::shops, "shop", "garden_centre"},
    {Category::shops, "shop", "garden_furniture"},
    {Category::shops, "shop", "gas"},
    {Category::shops, "shop", "general"},
    {Category::shops, "shop", "gift"},
    {Category::shops, "shop", "glaziery"},
    {Category::shops, "shop", "golf"},
    {Category::shops, "shop", "greengrocer"},
    {Category::shops, "shop", "groundskeeping"},
    {Category::shops, "shop", "hairdresser"},
    {Category::shops, "shop", "hairdresser_supply"},
    {Category::shops, "shop", "hardware"},
    {Category::shops, "shop", "health_food"},
    {Category::shops, "shop", "hearing_aids"},
    {Category::shops, "shop", "herbalist"},
    {Category::shops, "shop", "hifi"},
    {Category::shops, "shop", "household_linen"},
    {Category::shops, "shop", "houseware"},
    {Category::shops, "shop", "hunting"},
    {Category::shops, "shop", "ice_cream"},
    {Category::shops, "shop", "interior_decoration"},
    {Category::shops, "shop", "jetski"},
    {Category::shops, "shop", "jewelry"},
    {Category::shops, "shop", "kiosk"},
    {Category::shops, "shop", "kitchen"},
    {Category::shops, "shop", "lamps"},
    {Category::shops, "shop", "laundry"},
    {Category::shops, "shop", "leather"},
    {Category::shops, "shop", "lighting"},
    {Category::shops, "shop", "locksmith"},
    {Category::shops, "shop", "lottery"},
    {Category::shops, "shop", "mall"},
    {Category::shops, "shop", "massage"},
    {Category::shops, "shop", "medical_supply"},
    {Category::shops, "shop", "military_surplus"},
    {Category::shops, "shop", "mobile_phone"},
    {Category::shops, "shop", "model"},
    {Category::shops, "shop", "money_lender"},
    {Category::shops, "shop", "motorcycle"},
    {Category::shops, "shop", "music"},
    {Category::shops, "shop", "musical_instrument"},
    {Category::shops, "shop", "newsagent"},
    {Category::shops, "shop", "nutrition_supplements"},
    {Category::shops, "shop", "optician"},
    {Category::shops, "shop", "organic"},
    {Category::shops, "shop", "outdoor"},
    {Category::shops, "shop", "outpost"},
    {Category::shops, "shop", "paint"},
    {Category::shops, "shop", "party"},
    {Category::shops, "shop", "pasta"},
    {Category::shops, "shop", "pastry"},
    {Category::shops, "shop", "pawnbroker"},
    {Category::shops, "shop", "perfumery"},
    {Category::shops, "shop", "pest_control"},
    {Category::shops, "shop", "pet"},
    {Category::shops, "shop", "pet_grooming"},
    {Category::shops, "shop", "photo"},
    {Category::shops, "shop", "pyrotechnics"},
    {Category::shops, "shop", "radiotechnics"},
    {Category::shops, "shop", "religion"},
    {Category::shops, "shop", "scuba_diving"},
    {Category::shops, "shop", "seafood"},
    {Category::shops, "shop", "second_hand"},
    {Category::shops, "shop", "security"},
    {Category::shops, "shop", "sewing"},
    {Category::shops, "shop", "shoes"},
    {Category::shops, "shop", "ski"},
    {Category::shops, "shop", "snowmobile"},
    {Category::shops, "shop", "spices"},
    {Category::shops, "shop", "sports"},
    {Category::shops, "shop", "stationery"},
    {Category::shops, "shop", "storage_rental"},
    {Category::shops, "shop", "supermarket"},
    {Category::shops, "shop", "swimming_pool"},
    {Category::shops, "shop", "tailor"},
    {Category::shops, "shop", "tattoo"},
    {Category::shops, "shop", "tea"},
    {Category::shops, "shop", "ticket"},
    {Category::shops, "shop", "tiles"},
    {Category::shops, "shop", "tobacco"},
    {Category::shops, "shop", "toys"},
    {Category::shops, "shop", "trade"},
    {Category::shops, "shop", "trailer"},
    {Category::shops, "shop", "travel_agency"},
    {Category::shops, "shop", "trophy"},
    {Category::shops, "shop", "tyres"},
    {Category::shops, "shop", "vacant"},
    {Category::shops, "shop", "vacuum_cleaner"},
    {Category::shops, "shop", "variety_store"},
    {Category::shops, "shop", "video"},
    {Category::shops, "shop", "video_games"},
    {Category::shops, "shop", "watches"},
    {Category::shops, "shop", "water"},
    {Category::shops, "shop", "weapons"},
    {Category::shops, "shop", "wholesale"},
    {Category::shops, "shop", "window_blind"},
    {Category::shops, "shop", "wool"},
    {Category::sport, "sport", "10pin"},
    {Category::sport, "sport", "9pin"},
    {Category::sport, "sport", "aikido"},
    {Category::sport, "sport", "american_football"},
    {Category::sport, "sport", "archery"},
    {Category::sport, "sport", "athletics"},
    {Category::sport, "sport", "australian_football"},
    {Category::sport, "sport", "badminton"},
    {Category::sport, "sport", "bandy"},
    {Category::sport, "sport", "baseball"},
    {Category::sport, "sport", "basketball"},
    {Category::sport, "sport", "beachvolleyball"},
    {Category::sport, "sport", "biathlon"},
    {Category::sport, "sport", "billiards"},
    {Category::sport, "sport", "bmx"},
    {Category::sport, "sport", "bobsleigh"},
    {Category::sport, "sport", "boules"},
    {Category::sport, "sport", "bowls"},
    {Category::sport, "sport", "boxing"},
    {Category::sport, "sport", "bullfighting"},
    {Category::sport, "sport", "canadian_football"},
    {Category::sport, "sport", "canoe"},
    {Category::sport, "sport", "chess"},
    {Category::sport, "sport", "cliff_diving"},
    {Category::sport, "sport", "climbing"},
    {Category::sport, "sport", "climbing_adventure"},
    {Category::sport, "sport", "cockfighting"},
    {Category::sport, "sport", "cricket"},
    {Category::sport, "sport", "croquet"},
    {Category::sport, "sport", "crossfit"},
    {Category::sport, "sport", "curling"},
    {Category::sport, "sport", "cycle_polo"},
    {Category::sport, "sport", "cycling"},
    {Category::sport, "sport", "darts"},
    {Category::sport, "sport", "dog_agility"},
    {Category::sport, "sport", "dog_racing"},
    {Category::sport, "sport", "equestrian"},
    {Category::sport, "sport", "fencing"},
    {Category::sport, "sport", "field_hockey"},
    {Category::sport, "sport", "fitness"},
    {Category::sport, "sport", "five-a-side"},
    {Category::sport, "sport", "floorball"},
    {Category::sport, "sport", "free_flying"},
    {Category::sport, "sport", "futsal"},
    {Category::sport, "sport", "gaelic_games"},
    {Category::sport, "sport", "golf"},
    {Category::sport, "sport", "gymnastics"},
    {Category::sport, "sport", "handball"},
    {Category::sport, "sport", "hapkido"},
    {Category::sport, "sport", "horse_racing"},
    {Category::sport, "sport", "horseshoes"},
    {Category::sport, "sport", "ice_hockey"},
    {Category::sport, "sport", "ice_skating"},
    {Category::sport, "sport", "ice_stock"},
    {Category::sport, "sport", "jiu-jitsu"},
    {Category::sport, "sport", "judo"},
    {Category::sport, "sport", "karate"},
    {Category::sport, "sport", "karting"},
    {Category::sport, "sport", "kickboxing"},
    {Category::sport, "sport", "kitesurfing"},
    {Category::sport, "sport", "korfball"},
    {Category::sport, "sport", "krachtbal"},
    {Category::sport, "sport", "lacrosse"},
    {Category::sport, "sport", "martial_arts"},
    {Category::sport, "sport", "miniature_golf"},
    {Category::sport, "sport", "model_aerodrome"},
    {Category::sport, "sport", "motocross"},
    {Category::sport, "sport", "motor"},
    {Category::sport, "sport", "multi"},
    {Category::sport, "sport", "netball"},
    {Category::sport, "sport", "obstacle_course"},
    {Category::sport, "sport", "orienteering"},
    {Category::sport, "sport", "paddle_tennis"},
    {Category::sport, "sport", "padel"},
    {Category::sport, "sport", "parachuting"},
    {Category::sport, "sport", "parkour"},
    {Category::sport, "sport", "pedal_car_racing"},
    {Category::sport, "sport", "pelota"},
    {Category::sport, "sport", "pesäpallo"},
    {Category::sport, "sport", "pickleball"},
    {Category::sport, "sport", "pilates"},
    {Category::sport, "sport", "pole_dance"},
    {Category::sport, "sport", "racquet"},
    {Category::sport, "sport", "rc_car"},
    {Category::sport, "sport", "roller_skating"},
    {Category::sport, "sport", "rowing"},
    {Category::sport, "sport", "rugby_league"},
    {Category::sport, "sport", "rugby_union"},
    {Category::sport, "sport", "running"},
    {Category::sport, "sport", "sailing"},
    {Category::sport, "sport", "scuba_diving"},
    {Category::sport, "sport", "shooting"},
    {Category::sport, "sport", "shot-put"},
    {Category::sport, "sport", "skateboard"},
    {Category::sport, "sport", "ski_jumping"},
    {Category::sport, "sport", "skiing"},
    {Category::sport, "sport", "snooker"},
    {Category::sport, "sport", "soccer"},
    {Category::sport, "sport", "speedway"},
    {Category::sport, "sport", "squash"},
    {Category::sport, "sport", "sumo"},
    {Category::sport, "sport", "surfing"},
    {Category::sport, "sport", "swimming"},
    {Category::sport, "sport", "table_soccer"},
    {Category::sport, "sport", "table_tennis"},
    {Category::sport, "sport", "taekwondo"},
    {Category::sport, "sport", "tennis"},
    {Category::sport, "sport", "toboggan"},
    {Category::sport, "sport", "ultimate"},
    {Category::sport, "sport", "volleyball"},
    {Category::sport, "sport", "wakeboarding"},
    {Category::sport, "sport", "water_polo"},
    {Category::sport, "sport", "water_ski"},
    {Category::sport, "sport", "weightlifting"},
    {Category::sport, "sport", "wrestling"},
    {Category::sport, "sport", "yoga"},
    {Category::sport, "sport", "zurkhaneh_sport"},
    {Category::sustenance, "amenity", "bar"},
    {Category::sustenance, "amenity", "bbq"},
    {Category::sustenance, "amenity", "biergarten"},
    {Category::sustenance, "amenity", "cafe"},
    {Category::sustenance, "amenity", "fast_food"},
    {Category::sustenance, "amenity", "food_court"},
    {Category::sustenance, "amenity", "ice_cream"},
    {Category::sustenance, "amenity", "pub"},
    {Category::sustenance, "amenity", "restaurant"},
    {Category::tourism, "tourism", "alpine_hut"},
    {Category::tourism, "tourism", "apartment"},
    {Category::tourism, "tourism", "aquarium"},
    {Category::tourism, "tourism", "artwork"},
    {Category::tourism, "tourism", "attraction"},
    {Category::tourism, "tourism", "camp_pitch"},
    {Category::tourism, "tourism", "camp_site"},
    {Category::tourism, "tourism", "caravan_site"},
    {Category::tourism, "tourism", "chalet"},
    {Category::tourism, "tourism", "gallery"},
    {Category::tourism, "tourism", "guest_house"},
    {Category::tourism, "tourism", "hostel"},
    {Category::tourism, "tourism", "hotel"},
    {Category::tourism, "tourism", "information"},
    {Category::tourism, "tourism", "motel"},
    {Category::tourism, "tourism", "museum"},
    {Category::tourism, "tourism", "picnic_site"},
    {Category::tourism, "tourism", "theme_park"},
    {Category::tourism, "tourism", "viewpoint"},
    {Category::tourism, "tourism", "wilderness_hut"},
    {Category::tourism, "tourism", "zoo"},
    {Category::transportation, "amenity", "bicycle_parking"},
    {Category::transportation, "amenity", "bicycle_rental"},
    {Category::transportation, "amenity", "bicycle_repair_station"},
    {Category::transportation, "amenity", "boat_rental"},
    {Category::transportation, "amenity", "boat_sharing"},
    {Category::transportation, "amenity", "bus_station"},
    {Category::transportation, "amenity", "car_rental"},
    {Category::transportation, "amenity", "car_sharing"},
    {Category::transportation, "amenity", "car_wash"},
    {Category::transportation, "amenity", "charging_station"},
    {Category::transportation, "amenity", "clock"},
    {Category::transportation, "amenity", "ferry_terminal"},
    {Category::transportation, "amenity", "motorcycle_parking"},
    {Category::transportation, "amenity", "parking"},
    {Category::transportation, "amenity", "shelter"},
    {Category::transportation, "amenity", "taxi"},
    {Category::transportation, "public_transport", "platform"},
    {Category::transportation, "public_transport", "station"},
    {Category::transportation, "public_transport", "stop_area"},
    {Category::transportation, "public_transport", "stop_position"},
    {Category::water, nullptr, nullptr},
    {Category::roads_bike, nullptr, nullptr},
    {Category::roads_drive, nullptr, nullptr},
    {Category::roads_walk, nullptr, nullptr},
};

const std::size_t kSelectedRowCount =
    sizeof(kSelectedRows) / sizeof(kSelectedRows[0]);

}  // namespace hexstation::osm::detail
