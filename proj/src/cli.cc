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

#include "chronoglot/cli.h"

#include <algorithm>
#include <csignal>
#include <iostream>
#include <memory>

#include "CLI11.hpp"

#include "chronoglot/raw_graph.h"
#include "chronoglot/service.h"
#include "chronoglot/sparql.h"
#include "chronoglot/timeline.h"
#include "chronoglot/timeline_json.h"

namespace chronoglot {
namespace {

class UserError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SourceFlags {
  std::string data;
  std::string endpoint;
  double timeout = 30.0;
  int retries = 2;
  size_t page_size = 10000;
  std::string schema_ns = std::string(kDefaultSchemaNamespace);
  std::string graph_prefix = std::string(kDefaultGraphPrefix);
  size_t error_cap = 100;

  void Register(CLI::App &app, bool allow_endpoint) {
    app.add_option("--data", data, "N-Quads dump (.nq)")->envname("CHRONOGLOT_DATA");
    if (allow_endpoint) {
      app.add_option("--endpoint", endpoint, "SPARQL endpoint URL instead of a dump");
      app.add_option("--timeout", timeout, "endpoint request timeout in seconds");
      app.add_option("--retries", retries, "endpoint retry count");
      app.add_option("--page-size", page_size, "rows per endpoint page");
    }
    app.add_option("--schema-ns", schema_ns, "schema vocabulary namespace");
    app.add_option("--graph-prefix", graph_prefix, "prefix of per-language graph IRIs");
    app.add_option("--error-cap", error_cap, "parse errors tolerated before aborting");
  }

  LoadOptions Load() const { return {Vocabulary(schema_ns, graph_prefix), error_cap}; }

  EndpointConfig Endpoint() const {
    EndpointConfig config{endpoint, timeout, retries, page_size};
    config.Validate();
    return config;
  }
};

struct QueryFlags {
  std::string entity;
  std::string entity_lang = "en";
  std::string entity_iri;
  std::string langs = "en,de,fr,ru,pt";
  size_t k = 8;
  std::string criterion = "combined";
  std::string from;
  std::string to;
  double alpha = 0.25;
  double w = 1.0 / 3.0;

  void Register(CLI::App &app) {
    app.add_option("--entity", entity, "query entity label");
    app.add_option("--entity-lang", entity_lang, "language of the entity label");
    app.add_option("--entity-iri", entity_iri, "query entity IRI (bypasses label lookup)");
    app.add_option("--langs", langs, "comma-separated language contexts");
    app.add_option("--k", k, "events per language");
    app.add_option("--criterion", criterion, "popularity | relation_strength | combined");
    app.add_option("--from", from, "window start: YYYY, YYYY-MM or YYYY-MM-DD");
    app.add_option("--to", to, "window end: YYYY, YYYY-MM or YYYY-MM-DD");
    app.add_option("--alpha", alpha, "smoothing exponent in (0, 1]");
    app.add_option("--w", w, "popularity weight of the combined score");
  }

  TimelineQuery Build() const {
    TimelineQuery query;
    query.entity_label = entity;
    query.entity_iri = entity_iri;
    try {
      query.entity_language = Language::Of(entity_lang);
      query.languages = ParseLanguageList(langs);
    } catch (const std::invalid_argument &error) {
      throw UserError(error.what());
    }
    query.k = k;
    auto parsed = ParseCriterion(criterion);
    if (!parsed) throw UserError("unknown criterion '" + criterion + "'");
    query.criterion = *parsed;
    if (!from.empty() || !to.empty()) {
      DateWindow window{Date{-9999, 1, 1}, Date{9999, 12, 31}};
      if (!from.empty()) {
        auto date = ParseWindowStart(from);
        if (!date) throw UserError("invalid --from '" + from + "'");
        window.from = *date;
      }
      if (!to.empty()) {
        auto date = ParseWindowEnd(to);
        if (!date) throw UserError("invalid --to '" + to + "'");
        window.to = *date;
      }
      query.window = window;
    }
    query.config = {alpha, w};
    try {
      query.Validate();
    } catch (const std::invalid_argument &error) {
      throw UserError(error.what());
    }
    return query;
  }
};

EventStore LoadLocal(const SourceFlags &source, std::ostream &err) {
  if (source.data.empty()) throw UserError("--data (or CHRONOGLOT_DATA) is required");
  RawGraph raw = LoadDumpFile(source.data, source.Load());
  for (const ParseError &error : raw.errors) err << "warning: " << error.what() << "\n";
  EventStore store = EventStore::Build(raw);
  for (const std::string &warning : store.warnings()) err << "warning: " << warning << "\n";
  return store;
}

int Timeline(const SourceFlags &source, const QueryFlags &flags, const std::string &format,
             std::ostream &out, std::ostream &err) {
  TimelineQuery query = flags.Build();
  EventStore store;
  if (!source.endpoint.empty()) {
    if (!source.data.empty()) throw UserError("use either --data or --endpoint");
    if (query.entity_iri.empty()) throw UserError("--endpoint requires --entity-iri");
    HttpSparqlTransport transport;
    store = EventStore::Build(FetchRemote(source.Endpoint(), query.entity_iri,
                                          query.languages, transport,
                                          source.Load().vocabulary));
  } else {
    store = LoadLocal(source, err);
  }
  TimelineDocument document = ExecuteTimeline(query, store);
  if (format == "tsv") {
    out << ToTsv(document);
  } else {
    out << ToJson(document).dump(2) << "\n";
  }
  return kExitOk;
}

int Search(const SourceFlags &source, const std::string &label, const std::string &lang,
           std::ostream &out, std::ostream &err) {
  auto language = Language::FromCode(lang);
  if (!language) throw UserError("invalid --lang '" + lang + "'");
  EventStore store = LoadLocal(source, err);
  Resolution resolution = store.Resolve(label, *language);
  if (resolution.matches.empty()) {
    err << "no entity labeled '" << label << "' in " << lang << "\n";
    return kExitUserError;
  }
  for (const EntityMatch &match : resolution.matches) {
    const GraphNode &node = *store.FindNode(match.id);
    out << match.id << "\t" << match.label << "\t"
        << (node.is_event() ? "event" : "entity") << "\n";
  }
  return kExitOk;
}

int Validate(const SourceFlags &source, std::ostream &out, std::ostream &err) {
  if (source.data.empty()) throw UserError("--data (or CHRONOGLOT_DATA) is required");
  RawGraph raw = LoadDumpFile(source.data, source.Load());
  for (const ParseError &error : raw.errors) err << error.what() << "\n";
  EventStore store = EventStore::Build(raw);
  out << "statements: " << raw.quad_count << "\n"
      << "unknown predicates: " << raw.unknown_predicates << "\n"
      << "events: " << store.event_count() << "\n"
      << "nodes: " << store.nodes().size() << "\n"
      << "relations: " << store.edges().size() << "\n"
      << "warnings: " << store.warnings().size() << "\n"
      << "errors: " << raw.errors.size() << "\n";
  return raw.errors.empty() ? kExitOk : kExitDataError;
}

HttpServer *g_running_server = nullptr;

void StopOnSignal(int) {
  if (g_running_server != nullptr) g_running_server->Stop();
}

int Serve(const SourceFlags &source, ServiceConfig config, std::ostream &out,
          std::ostream &err) {
  config.data_path = source.data;
  if (!source.endpoint.empty()) config.endpoint = source.Endpoint();
  config.load = source.Load();
  try {
    config.Validate();
  } catch (const std::invalid_argument &error) {
    throw UserError(error.what());
  }
  std::unique_ptr<TimelineApi> api;
  if (config.endpoint) {
    api = std::make_unique<TimelineApi>(config, std::make_shared<HttpSparqlTransport>());
  } else {
    std::vector<std::string> warnings;
    auto store = LoadStore(config, &warnings);
    for (const std::string &warning : warnings) err << "warning: " << warning << "\n";
    out << "loaded " << store->event_count() << " events from " << config.data_path
        << "\n";
    api = std::make_unique<TimelineApi>(config, store);
  }
  HttpServer server(*api);
  int port = server.Bind(config.host, config.port);
  if (port < 0) {
    err << "cannot bind " << config.host << ":" << config.port << "\n";
    return kExitUserError;
  }
  out << "listening on http://" << config.host << ":" << port << std::endl;
  g_running_server = &server;
  std::signal(SIGINT, StopOnSignal);
  std::signal(SIGTERM, StopOnSignal);
  server.Listen();
  g_running_server = nullptr;
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"chronoglot: cross-lingual event timelines from a temporal knowledge graph"};
  app.require_subcommand(1);

  SourceFlags source;
  QueryFlags query;
  std::string format = "json";
  auto *timeline = app.add_subcommand("timeline", "Generate a timeline for an entity");
  source.Register(*timeline, true);
  query.Register(*timeline);
  timeline->add_option("--format", format, "json | tsv")
      ->check(CLI::IsMember({"json", "tsv"}));

  std::string label, lang = "en";
  auto *search = app.add_subcommand("search", "List entities matching a label");
  source.Register(*search, false);
  search->add_option("--label", label, "label to resolve")->required();
  search->add_option("--lang", lang, "language of the label");

  ServiceConfig service;
  std::string serve_langs = "en,de,fr,ru,pt";
  std::string serve_criterion = "combined";
  auto *serve = app.add_subcommand("serve", "Serve the JSON API over HTTP");
  source.Register(*serve, true);
  serve->add_option("--host", service.host, "listen address");
  serve->add_option("--port", service.port, "listen port")->check(CLI::Range(1, 65535));
  serve->add_option("--langs", serve_langs, "default language contexts");
  serve->add_option("--k", service.default_k, "default events per language");
  serve->add_option("--criterion", serve_criterion, "default ranking criterion");
  serve->add_option("--alpha", service.scoring.alpha, "smoothing exponent");
  serve->add_option("--w", service.scoring.w, "popularity weight");
  serve->add_option("--cors-origin", service.cors_origin, "allowed CORS origin");

  auto *validate = app.add_subcommand("validate", "Parse a dump and report errors");
  source.Register(*validate, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &error) {
    int code = app.exit(error, out, err);
    return code == 0 ? kExitOk : kExitUserError;
  }

  try {
    if (*timeline) return Timeline(source, query, format, out, err);
    if (*search) return Search(source, label, lang, out, err);
    if (*validate) return Validate(source, out, err);
    if (*serve) {
      try {
        service.default_languages = ParseLanguageList(serve_langs);
      } catch (const std::invalid_argument &error) {
        throw UserError(error.what());
      }
      auto criterion = ParseCriterion(serve_criterion);
      if (!criterion) throw UserError("unknown criterion '" + serve_criterion + "'");
      service.default_criterion = *criterion;
      return Serve(source, service, out, err);
    }
  } catch (const UserError &error) {
    err << "error: " << error.what() << "\n";
    return kExitUserError;
  } catch (const EntityNotFound &error) {
    err << "error: " << error.what() << "\n";
    return kExitUserError;
  } catch (const EntityAmbiguous &error) {
    err << "error: " << error.what() << "; candidates:\n";
    for (const EntityMatch &match : error.matches()) {
      err << "  " << match.id << "\t" << match.label << "\n";
    }
    return kExitUserError;
  } catch (const DumpAborted &error) {
    for (const ParseError &parse_error : error.errors()) err << parse_error.what() << "\n";
    err << "error: " << error.what() << "\n";
    return kExitDataError;
  } catch (const DumpIoError &error) {
    err << "error: " << error.what() << "\n";
    return kExitDataError;
  } catch (const RemoteError &error) {
    err << "error: " << error.what() << "\n";
    return kExitDataError;
  } catch (const ProtocolError &error) {
    err << "error: " << error.what() << "\n";
    return kExitDataError;
  }
  return kExitUserError;
}

}  // namespace chronoglot
