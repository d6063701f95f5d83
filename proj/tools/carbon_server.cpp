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

#include <csignal>
#include <cstdio>
#include <iostream>
#include <thread>

#include <httplib.h>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "carbon/api/config.hpp"
#include "carbon/api/service.hpp"
#include "carbon/error.hpp"

namespace {

// Signals are blocked in every thread and consumed here: SIGHUP reloads the
// reference data, SIGINT/SIGTERM stop the server.
void watch_signals(sigset_t set, carbon::api::Service& service, httplib::Server& server) {
  for (;;) {
    int sig = 0;
    if (sigwait(&set, &sig) != 0) continue;
    if (sig == SIGHUP) {
      try {
        service.reload();
      } catch (const std::exception& e) {
        spdlog::error("reload failed, keeping previous data: {}", e.what());
      }
      continue;
    }
    spdlog::info("signal {} received, shutting down", sig);
    server.stop();
    return;
  }
}

}  // namespace

int main(int argc, char** argv) {
  // stdout carries only the "listening on" line.
  spdlog::set_default_logger(spdlog::stderr_color_mt("carbon"));
  carbon::api::ServiceConfig config;
  try {
    config = carbon::api::parse_command_line(argc, argv);
  } catch (const carbon::api::CommandLineExit& e) {
    return e.status;
  }

  sigset_t set;
  sigemptyset(&set);
  sigaddset(&set, SIGHUP);
  sigaddset(&set, SIGINT);
  sigaddset(&set, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &set, nullptr);

  std::unique_ptr<carbon::api::Service> service;
  try {
    service = std::make_unique<carbon::api::Service>(config);
  } catch (const carbon::Error& e) {
    spdlog::critical("startup failed: {} {} {}", carbon::to_string(e.code()), e.what(), e.detail());
    return 2;
  } catch (const std::exception& e) {
    spdlog::critical("startup failed: {}", e.what());
    return 2;
  }

  httplib::Server server;
  service->register_routes(server);

  int port = config.listen_port;
  if (port == 0) {
    port = server.bind_to_any_port(config.host);
  } else if (!server.bind_to_port(config.host, port)) {
    port = -1;
  }
  if (port < 0) {
    spdlog::critical("cannot bind {}:{}", config.host, config.listen_port);
    return 2;
  }

  std::thread signals(watch_signals, set, std::ref(*service), std::ref(server));
  std::cout << "listening on " << config.host << ":" << port << std::endl;
  spdlog::info("data dir {}", config.data_dir.string());

  const bool ok = server.listen_after_bind();
  if (signals.joinable()) {
    // After a listen failure the watcher is still blocked in sigwait.
    if (!ok) pthread_kill(signals.native_handle(), SIGTERM);
    signals.join();
  }
  return ok ? 0 : 1;
}
