// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "carbon/api/config.hpp"

#include <fstream>

#include <CLI11.hpp>

#include "carbon/error.hpp"

namespace carbon::api {

void ServiceConfig::validate() const {
  if (listen_port < 0 || listen_port > 65535) {
    throw Error(ErrorCode::InvalidRequest, "port out of range", std::to_string(listen_port));
  }
  const std::pair<const char*, const std::filesystem::path*> inputs[] = {
      {"factors", &factors_csv}, {"catalog", &catalog_csv},        {"tariffs", &tariffs_csv},
      {"menus", &menus_json},    {"tips-config", &tips_config},
  };
  for (const auto& [name, path] : inputs) {
    std::ifstream probe(*path);
    if (!probe) {
      throw Error(ErrorCode::InvalidRequest, std::string("--") + name + " file is not readable: " + path->string(),
                  path->string());
    }
  }
  std::filesystem::create_directories(data_dir);
}

ServiceConfig parse_command_line(int argc, const char* const* argv) {
  ServiceConfig cfg;
  std::string data_dir = cfg.data_dir.string();
  std::string factors = cfg.factors_csv.string();
  std::string catalog = cfg.catalog_csv.string();
  std::string tariffs = cfg.tariffs_csv.string();
  std::string menus = cfg.menus_json.string();
  std::string tips = cfg.tips_config.string();

  CLI::App app{"Carbon footprint accounting service"};
  app.add_option("--host", cfg.host, "Listen address")->envname("CARBON_HOST")->capture_default_str();
  app.add_option("--port", cfg.listen_port, "Listen port (0 = any free port)")
      ->envname("CARBON_PORT")
      ->check(CLI::Range(0, 65535))
      ->capture_default_str();
  app.add_option("--data-dir", data_dir, "Directory for the event, journal and user logs")
      ->envname("CARBON_DATA_DIR")
      ->capture_default_str();
  app.add_option("--factors", factors, "Emission factor CSV")->envname("CARBON_FACTORS")->capture_default_str();
  app.add_option("--catalog", catalog, "Product catalog CSV")->envname("CARBON_CATALOG")->capture_default_str();
  app.add_option("--tariffs", tariffs, "Electricity tariff CSV")->envname("CARBON_TARIFFS")->capture_default_str();
  app.add_option("--menus", menus, "Restaurant menus JSON")->envname("CARBON_MENUS")->capture_default_str();
  app.add_option("--tips-config", tips, "Tip rules JSON")->envname("CARBON_TIPS_CONFIG")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    throw CommandLineExit{app.exit(e)};
  }

  cfg.data_dir = data_dir;
  cfg.factors_csv = factors;
  cfg.catalog_csv = catalog;
  cfg.tariffs_csv = tariffs;
  cfg.menus_json = menus;
  cfg.tips_config = tips;
  return cfg;
}

}  // namespace carbon::api
