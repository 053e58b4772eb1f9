// Copyright 2026 The inkmatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef INKMATCH_SERVICE_HPP
#define INKMATCH_SERVICE_HPP

#include <memory>
#include <string>
#include <thread>

#include "inkmatch/model.hpp"
#include "inkmatch/recognizer.hpp"

namespace httplib {
class Server;
}

namespace inkmatch {

inline constexpr std::size_t kDefaultTopK = 5;

nlohmann::json recognition_to_json(const RecognitionResult& result);

struct HttpReply {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

/// Request handling, independent of the transport. The model is immutable for
/// the lifetime of the service, so handlers may run concurrently.
class RecognitionService {
 public:
  explicit RecognitionService(Model model, bool dev_mode = false);

  /// POST /recognize: {"strokes": [...], "topk": k}; 400 with a diagnostic on
  /// malformed input.
  HttpReply recognize(const std::string& body) const;
  /// GET /model/info
  HttpReply model_info() const;
  /// GET /healthz
  HttpReply health() const;
  /// POST /echo (dev mode only): returns the parsed strokes unmodified.
  HttpReply echo(const std::string& body) const;

  const Model& model() const { return model_; }
  bool dev_mode() const { return dev_mode_; }

 private:
  Model model_;
  bool dev_mode_;
};

struct BindAddress {
  std::string host = "127.0.0.1";
  int port = 8080;
};

/// Parses "host:port"; throws Error on a malformed address.
BindAddress parse_bind_address(const std::string& text);

/// HTTP front end over a RecognitionService.
class HttpServer {
 public:
  explicit HttpServer(const RecognitionService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds (port 0 picks a free port) and returns the bound port. Throws Error
  /// on bind failure.
  int bind(const BindAddress& address);
  /// Serves until stop(); blocks the caller.
  void listen();
  /// bind() + listen() on a background thread.
  int start(const BindAddress& address);
  void stop();

 private:
  const RecognitionService& service_;
  std::unique_ptr<httplib::Server> server_;
  std::thread worker_;
};

}  // namespace inkmatch

#endif  // INKMATCH_SERVICE_HPP
