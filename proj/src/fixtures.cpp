#include "conflictgrid/fixtures.hpp"

#include "conflictgrid/errors.hpp"

namespace conflictgrid::fixtures {

namespace {

// Row 0 is the northernmost band so rasters render north-up.
GridSpec polar_grid(std::size_t rows, std::size_t cols, double north_lat, double lat_step,
                    double west_lon, double lon_step) {
  std::vector<LatLon> centers;
  centers.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      centers.push_back(LatLon{north_lat - lat_step * static_cast<double>(r),
                               west_lon + lon_step * static_cast<double>(c)});
    }
  }
  return make_grid(rows, cols, std::move(centers));
}

struct LayerBuilder {
  ResourceLayer layer;
  const World& world;

  LayerBuilder(ResourceKind kind, const World& w) : layer(zero_layer(kind, w)), world(w) {}

  std::size_t cell_at(double lat, double lon) const {
    const auto& centers = world.grid().centers;
    for (std::size_t i = 0; i < centers.size(); ++i) {
      if (centers[i].lat_deg == lat && centers[i].lon_deg == lon) return i;
    }
    throw ValidationError("fixture names a cell center that does not exist");
  }

  void set(double lat, double lon, double value, const std::string& route = "") {
    const std::size_t cell = cell_at(lat, lon);
    layer.values[cell] = value;
    if (!route.empty()) layer.route_ids[cell] = route;
  }

  // Basin-shaped deposit: a linear cone of the given peak magnitude falling
  // to zero at radius_km. Values from overlapping basins add up.
  void basin(double lat, double lon, double peak, double radius_km) {
    const LatLon center{lat, lon};
    for (std::size_t cell = 0; cell < layer.values.size(); ++cell) {
      const double d = great_circle_km(world.grid().centers[cell], center);
      if (d < radius_km) {
        layer.values[cell] += peak * (1.0 - d / radius_km);
      }
    }
  }
};

}  // namespace

Fixture arctic9() {
  constexpr std::size_t kRows = 10;  // lat 85 down to 67, 2 degree bands
  constexpr std::size_t kCols = 18;  // lon -180 to 160, 20 degree sectors
  GridSpec grid = polar_grid(kRows, kCols, 85.0, 2.0, -180.0, 20.0);

  std::vector<Country> countries = {
      {"CA", CountryKind::Arctic, std::nullopt},
      {"DK", CountryKind::Arctic, std::nullopt},
      {"IS", CountryKind::Arctic, std::nullopt},
      {"NO", CountryKind::Arctic, std::nullopt},
      {"RU", CountryKind::Arctic, std::nullopt},
      {"US", CountryKind::Arctic, std::nullopt},
      {"CN", CountryKind::NonArctic, LatLon{31.2, 121.5}},
      {"JP", CountryKind::NonArctic, LatLon{35.4, 139.7}},
      {"KR", CountryKind::NonArctic, LatLon{35.1, 129.0}},
  };

  // Sector-shaped EEZ bands along each coast; everything else, including the
  // polar cap, is international.
  auto owner_of = [](double lat, double lon) -> std::string {
    if (lon >= -180.0 && lon < -140.0 && lat <= 71.0) return "US";
    if (lon >= -140.0 && lon < -60.0 && lat <= 75.0) return "CA";
    if (lon >= -60.0 && lon < -20.0 && lat <= 79.0) return "DK";
    if (lon >= -20.0 && lon < 0.0 && lat <= 67.0) return "IS";
    if (lon >= 0.0 && lon < 40.0 && lat <= 75.0) return "NO";
    if (lon >= 40.0 && lat <= 75.0) return "RU";
    return "";
  };
  std::vector<std::string> owners;
  owners.reserve(grid.cell_count());
  for (const LatLon& center : grid.centers) owners.push_back(owner_of(center.lat_deg, center.lon_deg));

  Fixture fixture;
  fixture.world = build_world(std::move(grid), std::move(countries), owners);

  // Gas: the dominant basin peaks in international water wedged between the
  // NO and RU sectors, dwarfing every national deposit.
  LayerBuilder gas(ResourceKind::Gas, fixture.world);
  gas.basin(77.0, 40.0, 100.0, 900.0);    // high-seas basin, multiple neighbors
  gas.basin(71.0, 80.0, 45.0, 1200.0);    // RU, Kara-style shelf
  gas.basin(69.0, 60.0, 40.0, 1000.0);    // RU
  gas.basin(70.0, 10.0, 28.0, 900.0);     // NO
  gas.basin(70.0, -150.0, 30.0, 1100.0);  // US/CA Beaufort-style
  gas.basin(72.0, -100.0, 18.0, 900.0);   // CA archipelago
  gas.basin(79.0, 140.0, 20.0, 1000.0);   // international rise
  gas.basin(77.0, -140.0, 14.0, 800.0);   // international rise

  LayerBuilder oil(ResourceKind::Oil, fixture.world);
  oil.basin(77.0, 40.0, 80.0, 800.0);     // same basin as the gas hub
  oil.basin(69.0, -165.0, 35.0, 1000.0);  // US
  oil.basin(70.0, -120.0, 30.0, 900.0);   // CA
  oil.basin(69.0, 55.0, 25.0, 900.0);     // RU
  oil.basin(68.0, 5.0, 18.0, 800.0);      // NO
  oil.basin(72.0, -55.0, 15.0, 800.0);    // DK
  oil.basin(81.0, -50.0, 12.0, 700.0);    // international

  LayerBuilder fish(ResourceKind::Fish, fixture.world);
  fish.basin(68.0, 15.0, 3.0, 1400.0);    // Barents/Norwegian band
  fish.basin(67.0, -18.0, 3.0, 900.0);    // around IS
  fish.basin(67.0, -175.0, 2.5, 1000.0);  // Bering, west
  fish.basin(67.0, 175.0, 2.5, 900.0);    // Bering, east
  fish.basin(70.0, -25.0, 2.0, 800.0);    // Greenland sea

  LayerBuilder maritime(ResourceKind::Maritime, fixture.world);
  for (double lon = 40.0; lon <= 160.0; lon += 20.0) maritime.set(67.0, lon, 1.0, "NSR");
  maritime.set(69.0, -160.0, 1.0, "NWP");
  for (double lon = -140.0; lon <= -80.0; lon += 20.0) maritime.set(69.0, lon, 1.0, "NWP");
  maritime.set(79.0, 20.0, 1.0, "TPR");
  maritime.set(81.0, 60.0, 1.0, "TPR");
  maritime.set(83.0, 100.0, 1.0, "TPR");

  fixture.layers = {oil.layer, gas.layer, fish.layer, maritime.layer};

  fixture.config.grade_count = 6;
  fixture.config.quantize_mode = QuantizeMode::Linear;
  fixture.config.alpha = PairParam{0.5, {}};
  fixture.config.decay_km = PairParam{1000.0, {}};
  fixture.config.maritime_base = 2.0;
  fixture.config.importance = {{"CN", 0.95}, {"JP", 0.9}, {"KR", 0.85}};
  fixture.config.scheme = ThresholdScheme::quantile(6);
  fixture.config.top_k = 10;
  return fixture;
}

std::size_t arctic9_hotspot_cell() {
  // lat 77, lon 40: row (85-77)/2 = 4, col (40+180)/20 = 11.
  return 4 * 18 + 11;
}

Fixture dual_zone() {
  constexpr std::size_t kRows = 6;
  constexpr std::size_t kCols = 6;
  GridSpec grid = polar_grid(kRows, kCols, 74.5, 1.0, 20.0, 3.0);

  std::vector<Country> countries = {
      {"AA", CountryKind::Arctic, std::nullopt},
      {"BB", CountryKind::Arctic, std::nullopt},
  };

  // Two adjacent EEZ blocks with international water north, south and east.
  std::vector<std::string> owners(grid.cell_count(), "");
  for (std::size_t r = 1; r <= 2; ++r) {
    for (std::size_t c = 0; c <= 3; ++c) owners[grid.index(r, c)] = "AA";
  }
  for (std::size_t r = 3; r <= 4; ++r) {
    for (std::size_t c = 0; c <= 3; ++c) owners[grid.index(r, c)] = "BB";
  }

  Fixture fixture;
  fixture.world = build_world(std::move(grid), std::move(countries), owners);

  // Deposit placement, mirror-symmetric about the AA/BB border:
  //  - two international hub cells next to both EEZs carry the largest
  //    deposits, so each country's utility scale is independent of alpha;
  //  - four international cells hold mid-size deposits that outrank the EEZ
  //    deposits while cross-EEZ interest is low;
  //  - one deposit inside each EEZ right at the border, which climbs past
  //    the international mid-size cells as alpha grows.
  LayerBuilder gas(ResourceKind::Gas, fixture.world);
  gas.set(72.5, 32.0, 12.0);  // hub, international strip
  gas.set(71.5, 32.0, 12.0);  // hub twin
  gas.set(73.5, 32.0, 6.2);   // international mid, near AA
  gas.set(70.5, 32.0, 6.2);   // international mid, near BB
  gas.set(73.5, 35.0, 6.4);   // international mid, outer
  gas.set(70.5, 35.0, 6.4);   // international mid, outer
  gas.set(72.5, 23.0, 7.5);   // AA EEZ, on the border
  gas.set(71.5, 23.0, 7.5);   // BB EEZ, on the border

  fixture.layers = {zero_layer(ResourceKind::Oil, fixture.world), gas.layer,
                    zero_layer(ResourceKind::Fish, fixture.world),
                    zero_layer(ResourceKind::Maritime, fixture.world)};

  fixture.config.grade_count = 6;
  fixture.config.quantize_mode = QuantizeMode::Linear;
  fixture.config.alpha = PairParam{0.5, {}};
  fixture.config.decay_km = PairParam{2000.0, {}};
  fixture.config.maritime_base = 1.0;
  fixture.config.scheme = ThresholdScheme::quantile(6);
  fixture.config.top_k = 10;
  return fixture;
}

}  // namespace conflictgrid::fixtures
