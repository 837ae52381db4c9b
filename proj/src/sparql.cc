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

#include "chronoglot/sparql.h"

#include <chrono>
#include <thread>

#include "httplib.h"
#include "json.hpp"

namespace chronoglot {
namespace {

constexpr std::string_view kResultsMime = "application/sparql-results+json";

std::string Iri(const std::string &iri) { return "<" + iri + ">"; }

std::string GraphFilter(const std::vector<Language> &languages,
                        const Vocabulary &vocabulary) {
  std::string filter = "  FILTER(!BOUND(?g)";
  if (!languages.empty()) {
    filter += " || ?g IN (";
    for (size_t i = 0; i < languages.size(); ++i) {
      if (i > 0) filter += ", ";
      filter += Iri(vocabulary.GraphFor(languages[i]));
    }
    filter += ")";
  }
  filter += ")\n";
  return filter;
}

// Binds ?rel and ?event for every semantic relation between q and an event.
std::string SemanticNeighborhood(const std::string &q, const Vocabulary &v) {
  return "  { ?rel " + Iri(v.role_type) + " ?role ; " + Iri(v.rdf_subject) + " " + q +
         " ; " + Iri(v.rdf_object) + " ?event . }\n"
         "  UNION\n"
         "  { ?rel " + Iri(v.role_type) + " ?role ; " + Iri(v.rdf_object) + " " + q +
         " ; " + Iri(v.rdf_subject) + " ?event . }\n"
         "  ?event " + Iri(v.rdf_type) + " " + Iri(v.event_class) + " .\n";
}

std::string NodeStatements(const std::string &var, const Vocabulary &v) {
  return "    { " + var + " ?p ?o } UNION { GRAPH ?g { " + var + " ?p ?o } }\n"
         "    FILTER(?p IN (" + Iri(v.rdf_type) + ", " + Iri(v.rdfs_label) + ", " +
         Iri(v.begin_timestamp) + ", " + Iri(v.end_timestamp) + "))\n"
         "    BIND(" + var + " AS ?s)\n";
}

std::optional<ObjectTerm> TermFromBinding(const nlohmann::json &binding) {
  if (!binding.is_object() || !binding.contains("type") || !binding.contains("value") ||
      !binding["type"].is_string() || !binding["value"].is_string()) {
    throw ProtocolError("malformed RDF term binding");
  }
  const std::string type = binding["type"].get<std::string>();
  std::string value = binding["value"].get<std::string>();
  if (type == "uri") return ObjectTerm::Iri(std::move(value));
  if (type == "literal" || type == "typed-literal") {
    std::string language, datatype;
    if (auto it = binding.find("xml:lang"); it != binding.end() && it->is_string()) {
      language = it->get<std::string>();
    }
    if (auto it = binding.find("datatype"); it != binding.end() && it->is_string()) {
      datatype = it->get<std::string>();
    }
    if (!language.empty()) datatype.clear();
    return ObjectTerm::Literal(std::move(value), std::move(language), std::move(datatype));
  }
  if (type == "bnode") throw ProtocolError("blank nodes are not supported");
  throw ProtocolError("unknown RDF term type '" + type + "'");
}

std::string RequireIri(const nlohmann::json &row, const char *name) {
  auto it = row.find(name);
  if (it == row.end()) throw ProtocolError(std::string("row lacks ?") + name);
  auto term = TermFromBinding(*it);
  if (!term->is_iri() || !IsAbsoluteIri(term->value)) {
    throw ProtocolError(std::string("?") + name + " is not an absolute IRI");
  }
  return term->value;
}

bool Retryable(int status) { return status == 0 || status == 429 || status >= 500; }

}  // namespace

void EndpointConfig::Validate() const {
  if (!url.starts_with("http://") && !url.starts_with("https://")) {
    throw std::invalid_argument("endpoint url must be http(s): " + url);
  }
  if (!(timeout_seconds > 0)) throw std::invalid_argument("timeout must be positive");
  if (retries < 0) throw std::invalid_argument("retry count must be non-negative");
  if (page_size == 0) throw std::invalid_argument("page size must be positive");
}

RemoteError::RemoteError(int attempts, int last_status)
    : std::runtime_error("SPARQL endpoint failed after " + std::to_string(attempts) +
                         " attempts (last status " + std::to_string(last_status) + ")"),
      attempts_(attempts),
      last_status_(last_status) {}

HttpReply HttpSparqlTransport::Execute(const EndpointConfig &config,
                                       const std::string &query) {
  // Split http://host[:port]/path into the client base and the path.
  size_t scheme_end = config.url.find("://") + 3;
  size_t path_start = config.url.find('/', scheme_end);
  std::string base = config.url.substr(0, path_start);
  std::string path =
      path_start == std::string::npos ? "/" : config.url.substr(path_start);

  httplib::Client client(base);
  auto seconds = static_cast<time_t>(config.timeout_seconds);
  auto micros = static_cast<time_t>((config.timeout_seconds - seconds) * 1e6);
  client.set_connection_timeout(seconds, micros);
  client.set_read_timeout(seconds, micros);
  client.set_write_timeout(seconds, micros);
  httplib::Headers headers = {{"Accept", std::string(kResultsMime)}};
  httplib::Params params = {{"query", query}};
  auto result = client.Post(path, headers, params);
  if (!result) return {0, {}};
  return {result->status, result->body};
}

std::string BuildRetrievalQuery(RetrievalStep step, const std::string &query_entity,
                                const std::vector<Language> &languages,
                                const Vocabulary &v, size_t limit, size_t offset) {
  const std::string q = Iri(query_entity);
  std::string body;
  switch (step) {
    case RetrievalStep::kEntity:
      body = "# chronoglot step 1: query entity and existence time\n"
             "SELECT DISTINCT ?s ?p ?o ?g WHERE {\n"
             "  {\n" + NodeStatements(q, v) + "  }\n";
      break;
    case RetrievalStep::kEvents:
      body = "# chronoglot step 2: related events and their time information\n"
             "SELECT DISTINCT ?s ?p ?o ?g WHERE {\n" +
             SemanticNeighborhood(q, v) +
             "  {\n"
             "    ?rel ?p ?o .\n"
             "    FILTER(?p IN (" + Iri(v.rdf_subject) + ", " + Iri(v.rdf_object) + ", " +
             Iri(v.role_type) + "))\n"
             "    BIND(?rel AS ?s)\n"
             "  } UNION {\n" + NodeStatements("?event", v) + "  }\n";
      break;
    case RetrievalStep::kLinks:
      body = "# chronoglot step 3: interlinking statistics of the related events\n"
             "SELECT DISTINCT ?s ?p ?o ?g WHERE {\n" +
             SemanticNeighborhood(q, v) +
             "  {\n"
             "    { ?link " + Iri(v.rdf_subject) + " " + q + " ; " + Iri(v.rdf_object) +
             " ?event . }\n"
             "    UNION\n"
             "    { ?link " + Iri(v.rdf_subject) + " ?event ; " + Iri(v.rdf_object) +
             " " + q + " . }\n"
             "    FILTER NOT EXISTS { ?link " + Iri(v.role_type) + " ?anyRole }\n"
             "    { ?link ?p ?o . FILTER(?p IN (" + Iri(v.rdf_subject) + ", " +
             Iri(v.rdf_object) + ")) }\n"
             "    UNION\n"
             "    { GRAPH ?g { ?link ?p ?o . FILTER(?p IN (" + Iri(v.links) + ", " +
             Iri(v.mentions) + ")) } }\n"
             "    BIND(?link AS ?s)\n"
             "  } UNION {\n"
             "    GRAPH ?g { ?event " + Iri(v.links) + " ?o }\n"
             "    BIND(?event AS ?s)\n"
             "    BIND(" + Iri(v.links) + " AS ?p)\n"
             "  }\n";
      break;
  }
  body += GraphFilter(languages, v);
  body += "}\nORDER BY ?s ?p ?o ?g\nLIMIT " + std::to_string(limit) + "\nOFFSET " +
          std::to_string(offset) + "\n";
  return body;
}

std::vector<Quad> ParseSparqlResults(const std::string &body) {
  nlohmann::json document;
  try {
    document = nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception &error) {
    throw ProtocolError(std::string("result document is not JSON: ") + error.what());
  }
  if (!document.is_object() || !document.contains("results") ||
      !document["results"].is_object() || !document["results"].contains("bindings") ||
      !document["results"]["bindings"].is_array()) {
    throw ProtocolError("result document lacks results.bindings");
  }
  std::vector<Quad> quads;
  for (const auto &row : document["results"]["bindings"]) {
    if (!row.is_object()) throw ProtocolError("binding row is not an object");
    Quad quad;
    quad.subject = RequireIri(row, "s");
    quad.predicate = RequireIri(row, "p");
    auto object = row.find("o");
    if (object == row.end()) throw ProtocolError("row lacks ?o");
    quad.object = *TermFromBinding(*object);
    if (auto graph = row.find("g"); graph != row.end()) {
      quad.graph = RequireIri(row, "g");
    }
    quads.push_back(std::move(quad));
  }
  return quads;
}

RawGraph FetchRemote(const EndpointConfig &config, const std::string &query_entity,
                     const std::vector<Language> &languages, SparqlTransport &transport,
                     const Vocabulary &vocabulary) {
  config.Validate();
  if (!IsAbsoluteIri(query_entity)) {
    throw std::invalid_argument("query entity is not an absolute IRI: " + query_entity);
  }
  RawGraph graph(vocabulary);
  graph.seed_nodes.insert(query_entity);
  for (RetrievalStep step :
       {RetrievalStep::kEntity, RetrievalStep::kEvents, RetrievalStep::kLinks}) {
    for (size_t offset = 0;; offset += config.page_size) {
      std::string query = BuildRetrievalQuery(step, query_entity, languages, vocabulary,
                                              config.page_size, offset);
      HttpReply reply;
      int attempts = 0;
      while (true) {
        ++attempts;
        reply = transport.Execute(config, query);
        if (reply.status == 200) break;
        if (!Retryable(reply.status) || attempts > config.retries) {
          throw RemoteError(attempts, reply.status);
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(50 * attempts));
      }
      std::vector<Quad> rows = ParseSparqlResults(reply.body);
      for (const Quad &quad : rows) {
        try {
          graph.Add(quad);
        } catch (const ParseError &error) {
          throw ProtocolError("unusable value in result row: " + error.reason());
        }
      }
      if (rows.size() < config.page_size) break;
    }
  }
  return graph;
}

}  // namespace chronoglot
