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

#ifndef CHRONOGLOT_SPARQL_H_
#define CHRONOGLOT_SPARQL_H_

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "chronoglot/language.h"
#include "chronoglot/nquads.h"
#include "chronoglot/raw_graph.h"

namespace chronoglot {

struct EndpointConfig {
  std::string url;
  double timeout_seconds = 30.0;
  int retries = 2;
  size_t page_size = 10000;

  // Throws std::invalid_argument unless the url is http(s), timeout > 0,
  // retries >= 0 and page_size >= 1.
  void Validate() const;
};

// status 0 signals a transport failure (connection refused, timeout).
struct HttpReply {
  int status = 0;
  std::string body;
};

// Sends one SPARQL query and returns the raw reply.
class SparqlTransport {
 public:
  virtual ~SparqlTransport() = default;
  virtual HttpReply Execute(const EndpointConfig &config, const std::string &query) = 0;
};

// SPARQL 1.1 protocol over HTTP: form-encoded POST, results requested as
// application/sparql-results+json.
class HttpSparqlTransport : public SparqlTransport {
 public:
  HttpReply Execute(const EndpointConfig &config, const std::string &query) override;
};

class RemoteError : public std::runtime_error {
 public:
  RemoteError(int attempts, int last_status);
  int attempts() const { return attempts_; }
  int last_status() const { return last_status_; }

 private:
  int attempts_;
  int last_status_;
};

class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The three retrieval steps, in order.
enum class RetrievalStep { kEntity = 1, kEvents = 2, kLinks = 3 };

// Query text for one page of a retrieval step. Every query projects
// ?s ?p ?o ?g so rows map one-to-one onto statements.
std::string BuildRetrievalQuery(RetrievalStep step, const std::string &query_entity,
                                const std::vector<Language> &languages,
                                const Vocabulary &vocabulary, size_t limit,
                                size_t offset);

// Decodes an application/sparql-results+json document into statements.
// Throws ProtocolError on a malformed document.
std::vector<Quad> ParseSparqlResults(const std::string &body);

// Retrieves the entity, its related events and their interlinking
// statistics, in that order, paging each step. Throws RemoteError after
// 1 + retries failed attempts of one request.
RawGraph FetchRemote(const EndpointConfig &config, const std::string &query_entity,
                     const std::vector<Language> &languages, SparqlTransport &transport,
                     const Vocabulary &vocabulary = Vocabulary());

}  // namespace chronoglot

#endif  // CHRONOGLOT_SPARQL_H_
