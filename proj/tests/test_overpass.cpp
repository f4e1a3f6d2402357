#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <thread>

#include <httplib.h>

#include "hexstation/errors.hpp"
#include "hexstation/overpass.hpp"

using namespace hexstation;
using namespace hexstation::osm;

namespace {

const char* kTwoElements = R"({
  "version": 0.6,
  "elements": [
    {"type": "node", "id": 11, "lat": 51.11, "lon": 17.03,
     "tags": {"amenity": "pub"}},
    {"type": "way", "id": 22,
     "geometry": [{"lat": 51.11, "lon": 17.03}, {"lat": 51.1101, "lon": 17.0301},
                  {"lat": 51.1102, "lon": 17.03}, {"lat": 51.11, "lon": 17.03}],
     "tags": {"building": "yes"}},
    {"type": "relation", "id": 33, "tags": {"type": "multipolygon"}}
  ]
})";

// Serves canned responses for one test; binds an ephemeral port.
class MockServer {
 public:
  explicit MockServer(int fail_first = 0) : fail_first_(fail_first) {
    server_.Post("/api/interpreter",
                 [this](const httplib::Request& req, httplib::Response& res) {
                   ++hits_;
                   if (fail_first_ > 0) {
                     --fail_first_;
                     res.status = 503;
                     return;
                   }
                   if (req.body.find("known-area") != std::string::npos) {
                     res.set_content(kTwoElements, "application/json");
                   } else {
                     res.status = 404;
                   }
                 });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~MockServer() {
    server_.stop();
    thread_.join();
  }

  std::string endpoint() const {
    return "http://127.0.0.1:" + std::to_string(port_);
  }
  int hits() const { return hits_; }

 private:
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> fail_first_;
  std::atomic<int> hits_{0};
};

OverpassConfig config_for(const MockServer& server, const std::string& cache) {
  OverpassConfig cfg;
  cfg.endpoint = server.endpoint();
  cfg.timeout_sec = 5.0;
  cfg.cache_dir = cache;
  cfg.max_retries = 3;
  cfg.backoff_sec = 0.01;
  return cfg;
}

}  // namespace

TEST_CASE("parse_overpass_json converts nodes and ways") {
  const auto objs = parse_overpass_json(kTwoElements);
  REQUIRE(objs.size() == 2);  // the relation is skipped
  CHECK(objs[0].id == "node/11");
  CHECK(objs[0].geometry.type == GeometryType::Point);
  CHECK(objs[0].tags.at("amenity") == "pub");
  CHECK(objs[1].id == "way/22");
  CHECK(objs[1].geometry.type == GeometryType::Polygon);  // closed + building

  // An open way stays a line.
  const auto line = parse_overpass_json(R"({"elements":[
    {"type":"way","id":1,"geometry":[{"lat":51.0,"lon":17.0},{"lat":51.01,"lon":17.0}],
     "tags":{"highway":"residential"}}]})");
  REQUIRE(line.size() == 1);
  CHECK(line[0].geometry.type == GeometryType::LineString);
}

TEST_CASE("fetch_overpass: mocked endpoint returns two objects") {
  MockServer server;
  const auto objs = fetch_overpass("known-area", config_for(server, ""));
  CHECK(objs.size() == 2);
}

TEST_CASE("fetch_overpass: unknown area is a lookup error without cache writes") {
  MockServer server;
  const auto cache = std::filesystem::temp_directory_path() / "hexstation_ovp1";
  std::filesystem::remove_all(cache);
  CHECK_THROWS_AS(fetch_overpass("atlantis", config_for(server, cache.string())),
                  data_error);
  CHECK((!std::filesystem::exists(cache) ||
         std::filesystem::is_empty(cache)));
  std::filesystem::remove_all(cache);
}

TEST_CASE("fetch_overpass: cached responses replay offline") {
  const auto cache = std::filesystem::temp_directory_path() / "hexstation_ovp2";
  std::filesystem::remove_all(cache);
  std::string endpoint;
  std::vector<GeoObject> first;
  {
    MockServer server;
    endpoint = server.endpoint();
    auto cfg = config_for(server, cache.string());
    first = fetch_overpass("known-area", cfg);
    CHECK(server.hits() == 1);
  }
  // Server is gone; the cache must answer with the identical object list.
  OverpassConfig cfg;
  cfg.endpoint = endpoint;
  cfg.timeout_sec = 0.2;
  cfg.cache_dir = cache.string();
  cfg.max_retries = 0;
  const auto replay = fetch_overpass("known-area", cfg);
  REQUIRE(replay.size() == first.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(replay[i].id == first[i].id);
    CHECK(replay[i].tags == first[i].tags);
  }
  std::filesystem::remove_all(cache);
}

TEST_CASE("fetch_overpass: transient failures are retried with backoff") {
  MockServer server(/*fail_first=*/2);
  const auto objs = fetch_overpass("known-area", config_for(server, ""));
  CHECK(objs.size() == 2);
  CHECK(server.hits() == 3);
}

TEST_CASE("fetch_overpass: persistent failure exhausts retries") {
  MockServer server(/*fail_first=*/1000);
  auto cfg = config_for(server, "");
  cfg.max_retries = 2;
  CHECK_THROWS_AS(fetch_overpass("known-area", cfg), io_error);
  CHECK(server.hits() == 3);
}

TEST_CASE("overpass config honours environment overrides") {
  setenv("HEXSTATION_OVERPASS_ENDPOINT", "http://example.test:123", 1);
  setenv("HEXSTATION_OVERPASS_TIMEOUT", "7.5", 1);
  setenv("HEXSTATION_OVERPASS_CACHE", "/tmp/ovpcache", 1);
  const auto cfg = overpass_config_from_env();
  CHECK(cfg.endpoint == "http://example.test:123");
  CHECK(cfg.timeout_sec == 7.5);
  CHECK(cfg.cache_dir == "/tmp/ovpcache");
  unsetenv("HEXSTATION_OVERPASS_ENDPOINT");
  unsetenv("HEXSTATION_OVERPASS_TIMEOUT");
  unsetenv("HEXSTATION_OVERPASS_CACHE");
}
