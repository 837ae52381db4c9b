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

#include "chronoglot/service.h"

#include <charconv>

#include "httplib.h"
#include "json.hpp"

#include "chronoglot/timeline.h"
#include "chronoglot/timeline_json.h"

namespace chronoglot {
namespace {

using nlohmann::ordered_json;

constexpr size_t kMaxK = 1000;
constexpr std::string_view kEventPrefix = "/api/event/";

class BadRequest : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ApiResponse Json(int status, const ordered_json &body) {
  return {status, body.dump()};
}

ApiResponse Error(int status, std::string_view code, std::string_view message = {}) {
  ordered_json body;
  body["error"] = std::string(code);
  if (!message.empty()) body["message"] = std::string(message);
  return Json(status, body);
}

std::optional<std::string> Param(const QueryParams &params, const std::string &name) {
  auto it = params.find(name);
  if (it == params.end()) return std::nullopt;
  return it->second;
}

TimelineQuery QueryFromParams(const QueryParams &params, const ServiceConfig &config) {
  TimelineQuery query;
  query.entity_label = Param(params, "entity").value_or("");
  query.entity_iri = Param(params, "entityIri").value_or("");
  if (query.entity_label.empty() && query.entity_iri.empty()) {
    throw BadRequest("missing entity or entityIri");
  }
  try {
    if (auto lang = Param(params, "entityLang")) {
      query.entity_language = Language::Of(*lang);
    }
    query.languages = config.default_languages;
    if (auto langs = Param(params, "langs")) query.languages = ParseLanguageList(*langs);
  } catch (const std::invalid_argument &error) {
    throw BadRequest(error.what());
  }
  if (query.languages.empty()) throw BadRequest("langs must not be empty");

  query.k = config.default_k;
  if (auto k = Param(params, "k")) {
    size_t value = 0;
    auto [ptr, ec] = std::from_chars(k->data(), k->data() + k->size(), value);
    if (ec != std::errc() || ptr != k->data() + k->size() || value == 0 || value > kMaxK) {
      throw BadRequest("k must be an integer in [1, " + std::to_string(kMaxK) + "]");
    }
    query.k = value;
  }
  query.criterion = config.default_criterion;
  if (auto name = Param(params, "criterion")) {
    auto criterion = ParseCriterion(*name);
    if (!criterion) throw BadRequest("unknown criterion '" + *name + "'");
    query.criterion = *criterion;
  }
  auto from = Param(params, "from");
  auto to = Param(params, "to");
  if (from || to) {
    DateWindow window{Date{-9999, 1, 1}, Date{9999, 12, 31}};
    if (from) {
      auto date = ParseWindowStart(*from);
      if (!date) throw BadRequest("invalid from '" + *from + "'");
      window.from = *date;
    }
    if (to) {
      auto date = ParseWindowEnd(*to);
      if (!date) throw BadRequest("invalid to '" + *to + "'");
      window.to = *date;
    }
    if (window.to < window.from) throw BadRequest("from is after to");
    query.window = window;
  }
  query.config = config.scoring;
  return query;
}

ApiResponse Ambiguous(const EntityAmbiguous &error) {
  ordered_json body;
  body["error"] = "entity_ambiguous";
  ordered_json candidates = ordered_json::array();
  for (const EntityMatch &match : error.matches()) {
    candidates.push_back({{"id", match.id}, {"label", match.label}});
  }
  body["candidates"] = std::move(candidates);
  return Json(409, body);
}

}  // namespace

void ServiceConfig::Validate() const {
  if (data_path.empty() == !endpoint.has_value()) {
    throw std::invalid_argument("exactly one of data path and endpoint must be set");
  }
  if (port < 0 || port > 65535) throw std::invalid_argument("port out of range");
  if (default_languages.empty()) {
    throw std::invalid_argument("default languages must not be empty");
  }
  if (default_k == 0) throw std::invalid_argument("default k must be at least 1");
  if (endpoint) endpoint->Validate();
  scoring.Validate();
}

TimelineApi::TimelineApi(ServiceConfig config, std::shared_ptr<const EventStore> store)
    : config_(std::move(config)), store_(std::move(store)) {}

TimelineApi::TimelineApi(ServiceConfig config, std::shared_ptr<SparqlTransport> transport)
    : config_(std::move(config)), transport_(std::move(transport)) {}

ApiResponse TimelineApi::Handle(std::string_view path, const QueryParams &params) const {
  try {
    if (path == "/healthz") return Health();
    if (path == "/api/search") return Search(params);
    if (path == "/api/timeline") return Timeline(params);
    if (path.starts_with(kEventPrefix) && path.size() > kEventPrefix.size()) {
      return Event(path.substr(kEventPrefix.size()), params);
    }
    return Error(404, "not_found");
  } catch (const BadRequest &error) {
    return Error(400, "bad_request", error.what());
  } catch (const std::invalid_argument &error) {
    return Error(400, "bad_request", error.what());
  } catch (const EntityNotFound &) {
    return Error(404, "entity_not_found");
  } catch (const EntityAmbiguous &error) {
    return Ambiguous(error);
  } catch (const RemoteError &error) {
    return Error(502, "remote_error", error.what());
  } catch (const ProtocolError &error) {
    return Error(502, "protocol_error", error.what());
  }
}

ApiResponse TimelineApi::Health() const {
  ordered_json body;
  body["status"] = "ok";
  body["events"] = store_ ? store_->event_count() : 0;
  if (!store_) body["mode"] = "remote";
  return Json(200, body);
}

ApiResponse TimelineApi::Search(const QueryParams &params) const {
  if (!store_) throw BadRequest("label search requires a local dump");
  auto label = Param(params, "label");
  if (!label || label->empty()) throw BadRequest("missing label");
  Language language = Language::Of(Param(params, "lang").value_or("en"));
  Resolution resolution = store_->Resolve(*label, language);
  ordered_json body;
  body["label"] = *label;
  body["lang"] = language.code();
  ordered_json candidates = ordered_json::array();
  for (const EntityMatch &match : resolution.matches) {
    const GraphNode &node = *store_->FindNode(match.id);
    candidates.push_back({{"id", match.id},
                          {"label", match.label},
                          {"kind", node.is_event() ? "event" : "entity"}});
  }
  body["candidates"] = std::move(candidates);
  return Json(200, body);
}

std::shared_ptr<const EventStore> TimelineApi::StoreFor(const TimelineQuery &query) const {
  if (store_) return store_;
  if (query.entity_iri.empty()) throw BadRequest("remote mode requires entityIri");
  RawGraph raw = FetchRemote(*config_.endpoint, query.entity_iri, query.languages,
                             *transport_, config_.load.vocabulary);
  return std::make_shared<const EventStore>(EventStore::Build(raw));
}

ApiResponse TimelineApi::Timeline(const QueryParams &params) const {
  TimelineQuery query = QueryFromParams(params, config_);
  auto store = StoreFor(query);
  return Json(200, ToJson(ExecuteTimeline(query, *store)));
}

ApiResponse TimelineApi::Event(std::string_view event_id, const QueryParams &params) const {
  TimelineQuery query = QueryFromParams(params, config_);
  auto store = StoreFor(query);
  RankedCandidates ranked = RankCandidates(query, *store);
  const Candidate *candidate = ranked.candidates.Find(event_id);
  if (candidate == nullptr) return Error(404, "event_not_found");
  const GraphNode &node = *store->FindNode(event_id);

  ordered_json body;
  body["entity"] = ranked.entity->id;
  body["id"] = candidate->id;
  body["label"] = DisplayLabel(node, query.languages);
  body["begin"] = candidate->time_span->begin.ToString();
  body["end"] = candidate->time_span->end ? ordered_json(candidate->time_span->end->ToString())
                                          : ordered_json(nullptr);
  body["criterion"] = std::string(CriterionName(query.criterion));
  body["alpha"] = query.config.alpha;
  body["w"] = query.config.w;
  ordered_json scores = ordered_json::object();
  ordered_json ranks = ordered_json::object();
  for (Language language : query.languages) {
    scores[language.code()] = ScoreToJson(*ranked.table.Find(event_id, language));
    const auto &order = ranked.table.RankedIn(language);
    for (size_t rank = 0; rank < order.size(); ++rank) {
      if (ranked.table.events()[order[rank]] == event_id) {
        ranks[language.code()] = rank + 1;
        break;
      }
    }
  }
  body["scores"] = std::move(scores);
  body["ranks"] = std::move(ranks);
  return Json(200, body);
}

std::shared_ptr<const EventStore> LoadStore(const ServiceConfig &config,
                                            std::vector<std::string> *warnings) {
  RawGraph raw = LoadDumpFile(config.data_path, config.load);
  auto store = std::make_shared<const EventStore>(EventStore::Build(raw));
  if (warnings != nullptr) {
    for (const ParseError &error : raw.errors) warnings->push_back(error.what());
    for (const std::string &warning : store->warnings()) warnings->push_back(warning);
  }
  return store;
}

struct HttpServer::Impl {
  const TimelineApi &api;
  httplib::Server server;

  explicit Impl(const TimelineApi &api) : api(api) {}
};

HttpServer::HttpServer(const TimelineApi &api) : impl_(std::make_unique<Impl>(api)) {
  const std::string origin = api.config().cors_origin;
  impl_->server.set_default_headers({{"Access-Control-Allow-Origin", origin}});
  auto handler = [this](const httplib::Request &request, httplib::Response &response) {
    QueryParams params(request.params.begin(), request.params.end());
    ApiResponse api_response = impl_->api.Handle(request.path, params);
    response.status = api_response.status;
    response.set_content(api_response.body, "application/json; charset=utf-8");
  };
  impl_->server.Get(R"(/.*)", handler);
  impl_->server.Options(R"(/.*)", [](const httplib::Request &, httplib::Response &response) {
    response.set_header("Access-Control-Allow-Methods", "GET, OPTIONS");
    response.set_header("Access-Control-Allow-Headers", "Content-Type");
    response.status = 204;
  });
}

HttpServer::~HttpServer() { Stop(); }

int HttpServer::Bind(const std::string &host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::Listen() { return impl_->server.listen_after_bind(); }

void HttpServer::Stop() {
  if (impl_) impl_->server.stop();
}

void HttpServer::WaitUntilReady() const { impl_->server.wait_until_ready(); }

}  // namespace chronoglot
