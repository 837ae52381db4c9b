// Copyright 2026 The Chronoglot Authors.
//
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

#ifndef CHRONOGLOT_SERVICE_H_
#define CHRONOGLOT_SERVICE_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chronoglot/event_store.h"
#include "chronoglot/relevance.h"
#include "chronoglot/sparql.h"

namespace chronoglot {

struct TimelineQuery;

struct ServiceConfig {
  // Exactly one of data_path and endpoint is the startup source.
  std::string data_path;
  std::optional<EndpointConfig> endpoint;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::vector<Language> default_languages = ParseLanguageList("en,de,fr,ru,pt");
  size_t default_k = 8;
  RankingCriterion default_criterion = RankingCriterion::kCombined;
  ScoringConfig scoring;
  LoadOptions load;
  std::string cors_origin = "*";

  void Validate() const;
};

using QueryParams = std::multimap<std::string, std::string>;

struct ApiResponse {
  int status = 200;
  std::string body;
};

// Transport-independent request handling for the read-only JSON API:
//   GET /api/search?label=&lang=
//   GET /api/timeline?entity|entityIri=&entityLang=&langs=&k=&criterion=&from=&to=
//   GET /api/event/{id}?entity|entityIri=&entityLang=&langs=&criterion=&from=&to=
//   GET /healthz
// Handle is const and stateless, so any number of threads may call it.
class TimelineApi {
 public:
  // Serves from a loaded store shared read-only.
  TimelineApi(ServiceConfig config, std::shared_ptr<const EventStore> store);
  // Fetches each request's neighborhood from config.endpoint.
  TimelineApi(ServiceConfig config, std::shared_ptr<SparqlTransport> transport);

  ApiResponse Handle(std::string_view path, const QueryParams &params) const;

  const ServiceConfig &config() const { return config_; }

 private:
  ApiResponse Search(const QueryParams &params) const;
  ApiResponse Timeline(const QueryParams &params) const;
  ApiResponse Event(std::string_view event_id, const QueryParams &params) const;
  ApiResponse Health() const;

  // The store to answer a query from: the shared one, or a freshly fetched
  // neighborhood in remote mode.
  std::shared_ptr<const EventStore> StoreFor(const TimelineQuery &query) const;

  ServiceConfig config_;
  std::shared_ptr<const EventStore> store_;
  std::shared_ptr<SparqlTransport> transport_;
};

// Builds the shared store for config.data_path. Throws DumpAborted or
// DumpIoError; recoverable parse errors are returned in warnings.
std::shared_ptr<const EventStore> LoadStore(const ServiceConfig &config,
                                            std::vector<std::string> *warnings = nullptr);

// HTTP front end over a TimelineApi.
class HttpServer {
 public:
  explicit HttpServer(const TimelineApi &api);
  ~HttpServer();
  HttpServer(const HttpServer &) = delete;
  HttpServer &operator=(const HttpServer &) = delete;

  // Binds to host:port (port 0 picks a free port) and returns the bound
  // port, or -1 on failure.
  int Bind(const std::string &host, int port);
  // Serves until Stop(). Requires a successful Bind.
  bool Listen();
  void Stop();
  void WaitUntilReady() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace chronoglot

#endif  // CHRONOGLOT_SERVICE_H_
